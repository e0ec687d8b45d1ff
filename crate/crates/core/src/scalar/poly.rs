//! Dense univariate polynomials in `q` over Q(i).

use std::fmt;

use super::GaussianRational;

/// Coefficients low-to-high; the last entry is never zero. The zero
/// polynomial has no coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct QPoly {
    coeffs: Vec<GaussianRational>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        QPoly::constant(GaussianRational::one())
    }

    pub fn constant(c: GaussianRational) -> Self {
        QPoly::from_coeffs(vec![c])
    }

    /// `c * q^k`.
    pub fn monomial(c: GaussianRational, k: usize) -> Self {
        if c.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![GaussianRational::zero(); k + 1];
        coeffs[k] = c;
        QPoly { coeffs }
    }

    pub fn from_coeffs(mut coeffs: Vec<GaussianRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[GaussianRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&GaussianRational> {
        self.coeffs.last()
    }

    /// Index of the lowest nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// True when the polynomial is `c * q^k` for some `c`, `k`.
    pub fn is_monomial(&self) -> bool {
        match self.valuation() {
            Some(v) => v + 1 == self.coeffs.len(),
            None => false,
        }
    }

    pub fn as_constant(&self) -> Option<GaussianRational> {
        match self.coeffs.len() {
            0 => Some(GaussianRational::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    /// Multiply by `q^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        let mut coeffs = vec![GaussianRational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        QPoly { coeffs }
    }

    /// Divide by `q^k`; the caller guarantees `k <= valuation`.
    pub fn shift_down(&self, k: usize) -> Self {
        if k == 0 {
            return self.clone();
        }
        debug_assert!(self.valuation().is_none_or(|v| v >= k));
        QPoly { coeffs: self.coeffs[k.min(self.coeffs.len())..].to_vec() }
    }

    pub fn add(&self, other: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for idx in 0..n {
            out.push(match (self.coeffs.get(idx), other.coeffs.get(idx)) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        QPoly::from_coeffs(out)
    }

    pub fn neg(&self) -> QPoly {
        QPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn sub(&self, other: &QPoly) -> QPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &QPoly) -> QPoly {
        if self.is_zero() || other.is_zero() {
            return QPoly::zero();
        }
        if let Some(c) = other.as_constant() {
            return self.scale(&c);
        }
        if let Some(c) = self.as_constant() {
            return other.scale(&c);
        }
        let mut out = vec![GaussianRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (a_idx, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (b_idx, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[a_idx + b_idx] = &out[a_idx + b_idx] + &(a * b);
            }
        }
        QPoly::from_coeffs(out)
    }

    pub fn scale(&self, c: &GaussianRational) -> QPoly {
        if c.is_zero() {
            return QPoly::zero();
        }
        if c.is_one() {
            return self.clone();
        }
        QPoly { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Euclidean division. Panics if `divisor` is zero.
    pub fn div_rem(&self, divisor: &QPoly) -> (QPoly, QPoly) {
        let d_deg = divisor.degree().expect("polynomial division by zero");
        let lead_inv = divisor.leading().unwrap().inv().unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() <= d_deg {
            return (QPoly::zero(), self.clone());
        }
        let mut quot = vec![GaussianRational::zero(); rem.len() - d_deg];
        for top in (d_deg..rem.len()).rev() {
            let c = &rem[top] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            let shift = top - d_deg;
            for (idx, dc) in divisor.coeffs.iter().enumerate() {
                rem[shift + idx] = &rem[shift + idx] - &(&c * dc);
            }
            quot[shift] = c;
        }
        rem.truncate(d_deg);
        (QPoly::from_coeffs(quot), QPoly::from_coeffs(rem))
    }

    /// Divide by the leading coefficient.
    pub fn monic(&self) -> QPoly {
        match self.leading() {
            None => QPoly::zero(),
            Some(l) if l.is_one() => self.clone(),
            Some(l) => self.scale(&l.inv().unwrap()),
        }
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &QPoly) -> QPoly {
        // Strip the common power of q first: it is by far the most common factor.
        let (va, vb) = match (self.valuation(), other.valuation()) {
            (None, _) => return other.monic(),
            (_, None) => return self.monic(),
            (Some(a), Some(b)) => (a, b),
        };
        let common = va.min(vb);
        let mut a = self.shift_down(va);
        let mut b = other.shift_down(vb);
        if a.degree() == Some(0) || b.degree() == Some(0) {
            return QPoly::monomial(GaussianRational::one(), common);
        }
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r.monic();
        }
        a.monic().shift_up(common)
    }

    pub fn eval(&self, x: &GaussianRational) -> GaussianRational {
        let mut acc = GaussianRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    /// Conjugate every coefficient.
    pub fn conj_coeffs(&self) -> QPoly {
        QPoly { coeffs: self.coeffs.iter().map(|c| c.conj()).collect() }
    }

    /// `p(-q)`.
    pub fn negate_var(&self) -> QPoly {
        QPoly { coeffs: self.coeffs.iter().enumerate().map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() }).collect() }
    }

    /// `q^deg * p(1/q)`.
    pub fn reversed(&self) -> QPoly {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        QPoly::from_coeffs(coeffs)
    }
}

/// Writes `p` with `q` as the variable, highest degree first.
impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let negative = c.looks_negative();
            let magnitude = if negative { -c } else { c.clone() };
            if first {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if negative { " - " } else { " + " })?;
            }
            first = false;
            let mag_is_one = magnitude.is_one();
            let needs_parens = !magnitude.is_real() && !magnitude.is_imaginary();
            match (k, mag_is_one) {
                (0, _) if needs_parens => write!(f, "({magnitude})")?,
                (0, _) => write!(f, "{magnitude}")?,
                (_, true) => {}
                _ if needs_parens => write!(f, "({magnitude})*")?,
                _ => write!(f, "{magnitude}*")?,
            }
            match k {
                0 => {}
                1 => write!(f, "q")?,
                _ => write!(f, "q^{k}")?,
            }
        }
        Ok(())
    }
}
