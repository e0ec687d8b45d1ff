//! The coefficient field Q(i)(q) with `q` a transcendental symbol.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{GaussianRational, QPoly, ScalarError};

/// How complex conjugation acts on the symbol `q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum ConjugationMode {
    /// `conj(q) = q`
    RealQ,
    /// `conj(q) = -q`
    ImaginaryQ,
    /// `conj(q) = 1/q`
    UnitCircleQ,
}

impl ConjugationMode {
    /// Whether a concrete value of `q` is consistent with this mode.
    pub fn admits(&self, q0: &GaussianRational) -> bool {
        match self {
            ConjugationMode::RealQ => q0.is_real(),
            ConjugationMode::ImaginaryQ => q0.is_imaginary(),
            ConjugationMode::UnitCircleQ => num_traits::One::is_one(&q0.norm_sq()),
        }
    }
}

/// A reduced fraction `num/den` of polynomials in `q`.
///
/// Invariants: `den` is monic and nonzero, `gcd(num, den) = 1`, and zero is
/// stored as `0/1`. Equality is therefore structural.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Scalar {
    num: QPoly,
    den: QPoly,
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar { num: QPoly::zero(), den: QPoly::one() }
    }

    pub fn one() -> Self {
        Scalar { num: QPoly::one(), den: QPoly::one() }
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::constant(GaussianRational::from_int(n))
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        Scalar::constant(GaussianRational::from_ratio(num, den))
    }

    pub fn constant(c: GaussianRational) -> Self {
        Scalar { num: QPoly::constant(c), den: QPoly::one() }
    }

    pub fn i() -> Self {
        Scalar::constant(GaussianRational::i())
    }

    pub fn q() -> Self {
        Scalar::q_pow(1)
    }

    /// `q^k` for any integer `k`.
    pub fn q_pow(k: i32) -> Self {
        let mono = QPoly::monomial(GaussianRational::one(), k.unsigned_abs() as usize);
        if k >= 0 {
            Scalar { num: mono, den: QPoly::one() }
        } else {
            Scalar { num: QPoly::one(), den: mono }
        }
    }

    /// `c * q^k`.
    pub fn monomial(c: GaussianRational, k: i32) -> Self {
        &Scalar::constant(c) * &Scalar::q_pow(k)
    }

    pub fn from_poly(p: QPoly) -> Self {
        Scalar { num: p, den: QPoly::one() }
    }

    /// Build `num/den` and reduce. Fails if `den` is zero.
    pub fn from_fraction(num: QPoly, den: QPoly) -> Result<Self, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Scalar::reduce(num, den))
    }

    pub fn numerator(&self) -> &QPoly {
        &self.num
    }

    pub fn denominator(&self) -> &QPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// The value as an element of Q(i) when it does not depend on `q`.
    pub fn as_constant(&self) -> Option<GaussianRational> {
        if self.den.is_one() {
            self.num.as_constant()
        } else {
            None
        }
    }

    fn reduce(num: QPoly, den: QPoly) -> Scalar {
        if num.is_zero() {
            return Scalar::zero();
        }
        let (num, den) = if den.is_monomial() || num.is_monomial() {
            // Only a power of q can be shared.
            let v = num.valuation().unwrap().min(den.valuation().unwrap());
            (num.shift_down(v), den.shift_down(v))
        } else {
            let g = num.gcd(&den);
            if g.is_one() {
                (num, den)
            } else {
                (num.div_rem(&g).0, den.div_rem(&g).0)
            }
        };
        let lead = den.leading().unwrap().clone();
        if lead.is_one() {
            Scalar { num, den }
        } else {
            let inv = lead.inv().unwrap();
            Scalar { num: num.scale(&inv), den: den.scale(&inv) }
        }
    }

    pub fn inv(&self) -> Result<Scalar, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Scalar::reduce(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &Scalar) -> Result<Scalar, ScalarError> {
        Ok(self * &rhs.inv()?)
    }

    /// Integer power; negative exponents of zero fail.
    pub fn pow(&self, exp: i32) -> Result<Scalar, ScalarError> {
        let base = if exp < 0 { self.inv()? } else { self.clone() };
        let mut e = exp.unsigned_abs();
        let mut acc = Scalar::one();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(acc)
    }

    /// Antilinear field automorphism: `i -> -i`, and `q` mapped per `mode`.
    pub fn conjugate(&self, mode: ConjugationMode) -> Scalar {
        let n = self.num.conj_coeffs();
        let d = self.den.conj_coeffs();
        match mode {
            ConjugationMode::RealQ => Scalar::reduce(n, d),
            ConjugationMode::ImaginaryQ => Scalar::reduce(n.negate_var(), d.negate_var()),
            ConjugationMode::UnitCircleQ => {
                // n(1/q)/d(1/q) = q^(deg d - deg n) * rev(n)/rev(d)
                let dn = n.degree().unwrap_or(0);
                let dd = d.degree().unwrap_or(0);
                let (rn, rd) = (n.reversed(), d.reversed());
                if dd >= dn {
                    Scalar::reduce(rn.shift_up(dd - dn), rd)
                } else {
                    Scalar::reduce(rn, rd.shift_up(dn - dd))
                }
            }
        }
    }

    /// Evaluate at `q = q0`. Roots of unity and zero are rejected.
    pub fn specialize(&self, q0: &GaussianRational) -> Result<GaussianRational, ScalarError> {
        check_specialization_point(q0)?;
        let d = self.den.eval(q0);
        if d.is_zero() {
            return Err(ScalarError::PoleAtSpecialization(q0.to_string()));
        }
        Ok(&self.num.eval(q0) / &d)
    }
}

pub(crate) fn check_specialization_point(q0: &GaussianRational) -> Result<(), ScalarError> {
    if q0.is_zero() || q0.is_root_of_unity() {
        return Err(ScalarError::InvalidSpecialization(q0.to_string()));
    }
    Ok(())
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            if self.den.is_one() {
                return Scalar { num: self.num.add(&rhs.num), den: QPoly::one() };
            }
            return Scalar::reduce(self.num.add(&rhs.num), self.den.clone());
        }
        if self.den.is_monomial() && rhs.den.is_monomial() {
            // q^a and q^b: bring both over q^max(a, b)
            let a = self.den.degree().unwrap();
            let b = rhs.den.degree().unwrap();
            let m = a.max(b);
            let num = self.num.shift_up(m - a).add(&rhs.num.shift_up(m - b));
            return Scalar::reduce(num, QPoly::monomial(GaussianRational::one(), m));
        }
        let num = self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den));
        Scalar::reduce(num, self.den.mul(&rhs.den))
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        if self.is_zero() || rhs.is_zero() {
            return Scalar::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return Scalar { num: self.num.mul(&rhs.num), den: QPoly::one() };
        }
        if let Some(c) = self.as_constant() {
            return Scalar { num: rhs.num.scale(&c), den: rhs.den.clone() };
        }
        if let Some(c) = rhs.as_constant() {
            return Scalar { num: self.num.scale(&c), den: self.den.clone() };
        }
        Scalar::reduce(self.num.mul(&rhs.num), self.den.mul(&rhs.den))
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { num: self.num.neg(), den: self.den.clone() }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar { (&self).$m(&rhs) }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar { (&self).$m(rhs) }
        }
        impl $tr<Scalar> for &Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar { self.$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl From<GaussianRational> for Scalar {
    fn from(c: GaussianRational) -> Self {
        Scalar::constant(c)
    }
}

impl std::iter::Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |acc, x| &acc + &x)
    }
}
