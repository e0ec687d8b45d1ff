//! Polynomials in `y = 1 - z z*` and the graded view of disc elements.

use std::collections::BTreeMap;
use std::fmt;

use super::{DiscElem, DiscError};
use crate::scalar::Scalar;
use crate::terms;

/// `sum c_t y^t`, coefficients low-to-high with no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct YPolynomial {
    coeffs: Vec<Scalar>,
}

impl YPolynomial {
    pub fn zero() -> Self {
        YPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        YPolynomial::constant(Scalar::one())
    }

    pub fn constant(c: Scalar) -> Self {
        YPolynomial::from_coeffs(vec![c])
    }

    /// The polynomial `y`.
    pub fn y() -> Self {
        YPolynomial::from_coeffs(vec![Scalar::zero(), Scalar::one()])
    }

    /// `c y^t`.
    pub fn monomial(c: Scalar, t: usize) -> Self {
        let mut coeffs = vec![Scalar::zero(); t];
        coeffs.push(c);
        YPolynomial::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        YPolynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn coeff(&self, t: usize) -> Scalar {
        self.coeffs.get(t).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Scalar> {
        self.coeffs.last()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &YPolynomial) -> YPolynomial {
        let n = self.coeffs.len().max(other.coeffs.len());
        YPolynomial::from_coeffs((0..n).map(|t| &self.coeff(t) + &other.coeff(t)).collect())
    }

    pub fn sub(&self, other: &YPolynomial) -> YPolynomial {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> YPolynomial {
        YPolynomial { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn scale(&self, c: &Scalar) -> YPolynomial {
        YPolynomial::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn mul(&self, other: &YPolynomial) -> YPolynomial {
        if self.is_zero() || other.is_zero() {
            return YPolynomial::zero();
        }
        let mut out = vec![Scalar::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (s, a) in self.coeffs.iter().enumerate() {
            for (t, b) in other.coeffs.iter().enumerate() {
                out[s + t] = &out[s + t] + &(a * b);
            }
        }
        YPolynomial::from_coeffs(out)
    }

    /// `p(beta * y)`.
    pub fn rescale_arg(&self, beta: &Scalar) -> YPolynomial {
        let mut pow = Scalar::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            out.push(c * &pow);
            pow = &pow * beta;
        }
        YPolynomial::from_coeffs(out)
    }

    /// The division map: `p / y`, defined when `p(0) = 0`.
    pub fn tau(&self) -> Result<YPolynomial, DiscError> {
        match self.coeffs.first() {
            None => Ok(YPolynomial::zero()),
            Some(c) if !c.is_zero() => Err(DiscError::NotDivisibleByY),
            Some(_) => Ok(YPolynomial { coeffs: self.coeffs[1..].to_vec() }),
        }
    }

    /// `prod_{j<n} (1 - a q^(step_exp * j))`.
    pub fn q_pochhammer(a: &YPolynomial, step_exp: i32, n: u32) -> YPolynomial {
        let mut acc = YPolynomial::one();
        for j in 0..n as i32 {
            let factor = YPolynomial::one().sub(&a.scale(&Scalar::q_pow(step_exp * j)));
            acc = acc.mul(&factor);
        }
        acc
    }

    /// The image of `p(y)` in the disc.
    pub fn to_disc(&self) -> DiscElem {
        let y = DiscElem::y();
        let mut acc = DiscElem::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &y) + &DiscElem::scalar(c.clone());
        }
        acc
    }
}

impl fmt::Display for YPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        terms::write_sum(
            f,
            self.coeffs
                .iter()
                .enumerate()
                .rev()
                .filter(|(_, c)| !c.is_zero())
                .map(|(t, c)| (c, terms::power("y", t as u32))),
        )
    }
}

/// `z^degree * poly(y)` for `degree >= 0`, `poly(y) * z*^(-degree)` otherwise.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GradedForm {
    pub degree: i64,
    pub poly: YPolynomial,
}

impl GradedForm {
    pub fn new(degree: i64, poly: YPolynomial) -> Self {
        GradedForm { degree, poly }
    }

    pub fn to_disc(&self) -> DiscElem {
        from_graded(self)
    }
}

pub(super) fn grade_decompose(a: &DiscElem) -> BTreeMap<i64, GradedForm> {
    let max_t = a.terms.keys().map(|&(i, j)| i.min(j)).max().unwrap_or(0);
    let mut poch = vec![YPolynomial::one()];
    for t in 1..=max_t {
        let factor = YPolynomial::one().sub(&YPolynomial::y().scale(&Scalar::q_pow(2 * (t as i32 - 1))));
        poch.push(poch[t as usize - 1].mul(&factor));
    }
    let mut out: BTreeMap<i64, GradedForm> = BTreeMap::new();
    for (&(i, j), c) in &a.terms {
        let k = i as i64 - j as i64;
        let entry = out.entry(k).or_insert_with(|| GradedForm::new(k, YPolynomial::zero()));
        entry.poly = entry.poly.add(&poch[i.min(j) as usize].scale(c));
    }
    out
}

pub(super) fn from_graded(g: &GradedForm) -> DiscElem {
    let p = g.poly.to_disc();
    let shift = g.degree.unsigned_abs() as u32;
    if g.degree >= 0 {
        &DiscElem::monomial(shift, 0) * &p
    } else {
        &p * &DiscElem::monomial(0, shift)
    }
}

/// `(y; q^2)_t`, checked against `z^t z*^t` in the disc.
pub fn y_pochhammer_identity(t: u32) -> YPolynomial {
    let p = YPolynomial::q_pochhammer(&YPolynomial::y(), 2, t);
    assert_eq!(from_graded(&GradedForm::new(0, p.clone())), DiscElem::monomial(t, t), "z^t z*^t must equal (y; q^2)_t");
    p
}
