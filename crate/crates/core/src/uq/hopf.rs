//! Coproduct, counit and antipode.

use std::collections::BTreeMap;

use super::{uq_mul, Pbw, UqElem, UqGenerator};
use crate::scalar::Scalar;

/// Sweedler summands of `Delta(g)`.
pub fn coproduct_gen(g: UqGenerator) -> Vec<(UqElem, UqElem)> {
    use UqGenerator::*;
    match g {
        K => vec![(K.to_elem(), K.to_elem())],
        Kinv => vec![(Kinv.to_elem(), Kinv.to_elem())],
        E => vec![(UqElem::one(), E.to_elem()), (E.to_elem(), K.to_elem())],
        F => vec![(F.to_elem(), UqElem::one()), (Kinv.to_elem(), F.to_elem())],
    }
}

/// `eps(e^i k^m f^j)` is 1 when `i = j = 0` and 0 otherwise.
pub fn counit(a: &UqElem) -> Scalar {
    a.terms().filter(|((i, _, j), _)| *i == 0 && *j == 0).map(|(_, c)| c.clone()).sum()
}

pub fn antipode_gen(g: UqGenerator) -> UqElem {
    use UqGenerator::*;
    match g {
        K => Kinv.to_elem(),
        Kinv => K.to_elem(),
        E => -(&E.to_elem() * &Kinv.to_elem()),
        F => -(&K.to_elem() * &F.to_elem()),
    }
}

/// Linear antiautomorphism extending [`antipode_gen`].
pub fn antipode(a: &UqElem) -> UqElem {
    let s_e = antipode_gen(UqGenerator::E);
    let s_f = antipode_gen(UqGenerator::F);
    let mut out = UqElem::zero();
    for (&(i, m, j), c) in a.terms() {
        // S(e^i k^m f^j) = S(f)^j k^-m S(e)^i
        let mono = &(&s_f.pow(j) * &UqElem::monomial(0, -m, 0)) * &s_e.pow(i);
        out = &out + &mono.scale(c);
    }
    out
}

/// An element of `U (x) U`, used to check the bialgebra axioms.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct UqTensor {
    terms: BTreeMap<(Pbw, Pbw), Scalar>,
}

impl UqTensor {
    pub fn zero() -> Self {
        UqTensor::default()
    }

    pub fn from_pairs<'a, I: IntoIterator<Item = &'a (UqElem, UqElem)>>(pairs: I) -> Self {
        let mut out = UqTensor::zero();
        for (a, b) in pairs {
            for (ka, ca) in a.terms() {
                for (kb, cb) in b.terms() {
                    out.add_term((*ka, *kb), ca * cb);
                }
            }
        }
        out
    }

    /// `Delta(g)` for a generator.
    pub fn coproduct(g: UqGenerator) -> Self {
        UqTensor::from_pairs(&coproduct_gen(g))
    }

    fn add_term(&mut self, key: (Pbw, Pbw), c: Scalar) {
        if c.is_zero() {
            return;
        }
        let s = self.terms.get(&key).map(|v| v + &c).unwrap_or(c);
        if s.is_zero() {
            self.terms.remove(&key);
        } else {
            self.terms.insert(key, s);
        }
    }

    pub fn add(&self, other: &UqTensor) -> UqTensor {
        let mut out = self.clone();
        for (k, v) in &other.terms {
            out.add_term(*k, v.clone());
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> UqTensor {
        let mut out = UqTensor::zero();
        for (k, v) in &self.terms {
            out.add_term(*k, v * c);
        }
        out
    }

    /// Factorwise product `(a (x) b)(c (x) d) = ac (x) bd`.
    pub fn mul(&self, other: &UqTensor) -> UqTensor {
        let mut out = UqTensor::zero();
        for ((a1, a2), ca) in &self.terms {
            for ((b1, b2), cb) in &other.terms {
                let left = uq_mul(&UqElem::monomial(a1.0, a1.1, a1.2), &UqElem::monomial(b1.0, b1.1, b1.2));
                let right = uq_mul(&UqElem::monomial(a2.0, a2.1, a2.2), &UqElem::monomial(b2.0, b2.1, b2.2));
                let c = ca * cb;
                for (kl, cl) in left.terms() {
                    for (kr, cr) in right.terms() {
                        out.add_term((*kl, *kr), &(&c * cl) * cr);
                    }
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Apply `f` to the left factor and `g` to the right, then multiply.
    pub fn contract<F, G>(&self, f: F, g: G) -> UqElem
    where
        F: Fn(&UqElem) -> UqElem,
        G: Fn(&UqElem) -> UqElem,
    {
        let mut out = UqElem::zero();
        for ((a, b), c) in &self.terms {
            let left = f(&UqElem::monomial(a.0, a.1, a.2));
            let right = g(&UqElem::monomial(b.0, b.1, b.2));
            out = &out + &uq_mul(&left, &right).scale(c);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use UqGenerator::*;

    #[test]
    fn coproduct_examples() {
        assert_eq!(coproduct_gen(E), vec![(UqElem::one(), E.to_elem()), (E.to_elem(), K.to_elem())]);
        assert_eq!(coproduct_gen(F), vec![(F.to_elem(), UqElem::one()), (Kinv.to_elem(), F.to_elem())]);
        assert_eq!(coproduct_gen(K), vec![(K.to_elem(), K.to_elem())]);
    }

    #[test]
    fn counit_examples() {
        assert!(counit(&UqElem::monomial(0, 3, 0)).is_one());
        assert!(counit(&E.to_elem()).is_zero());
        let x = &UqElem::scalar(Scalar::from_int(5)) + &UqElem::term(Scalar::from_int(2), 1, 1, 1);
        assert_eq!(counit(&x), Scalar::from_int(5));
    }

    #[test]
    fn antipode_examples() {
        assert_eq!(antipode_gen(E), -UqElem::monomial(1, -1, 0));
        assert_eq!(antipode_gen(K), Kinv.to_elem());
        // -k f in PBW form is just -(0, 1, 1)
        assert_eq!(antipode_gen(F), -UqElem::monomial(0, 1, 1));
    }

    #[test]
    fn antipode_is_antimultiplicative() {
        let x = &E.to_elem() * &F.to_elem();
        assert_eq!(antipode(&x), &antipode_gen(F) * &antipode_gen(E));
        let y = &(&K.to_elem() * &F.to_elem()) * &E.to_elem();
        assert_eq!(antipode(&y), &(&antipode_gen(E) * &antipode_gen(F)) * &antipode_gen(K));
    }
}
