//! The quantum disc: generators `z`, `z*` with `z z* = q^2 z* z + 1 - q^2`.
//!
//! Elements are kept in the normal basis `z^i z*^j`. Multiplication
//! straightens every `z*^b z^c` block with the rule
//! `z*^b z = q^(-2b) z z*^b + (1 - q^(-2b)) z*^(b-1)`.

mod graded;

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::rc::Rc;

use crate::scalar::{ConjugationMode, Scalar};
use crate::terms;

pub use graded::{y_pochhammer_identity, GradedForm, YPolynomial};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DiscError {
    #[error("polynomial in y has a nonzero constant term and is not divisible by y")]
    NotDivisibleByY,
}

/// A generator of the disc.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    Z,
    Zs,
}

impl Letter {
    pub fn name(self) -> &'static str {
        match self {
            Letter::Z => "z",
            Letter::Zs => "zs",
        }
    }
}

/// `sum c_ij z^i z*^j`, keyed by `(i, j)`. No zero coefficients are stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct DiscElem {
    terms: BTreeMap<(u32, u32), Scalar>,
}

type Straightened = Rc<Vec<((u32, u32), Scalar)>>;

thread_local! {
    static STRAIGHTEN: RefCell<HashMap<(u32, u32), Straightened>> = RefCell::new(HashMap::new());
}

/// Normal form of `z*^b z^c` as a list of `((i, j), coeff)`.
fn straighten(b: u32, c: u32) -> Straightened {
    if b == 0 || c == 0 {
        return Rc::new(vec![((c, b), Scalar::one())]);
    }
    if let Some(hit) = STRAIGHTEN.with(|m| m.borrow().get(&(b, c)).cloned()) {
        return hit;
    }
    // z*^b z^c = (q^(-2b) z z*^b + (1 - q^(-2b)) z*^(b-1)) z^(c-1)
    let twist = Scalar::q_pow(-2 * b as i32);
    let rest = &Scalar::one() - &twist;
    let mut acc = DiscElem::zero();
    for ((i, j), s) in straighten(b, c - 1).iter() {
        acc.add_term((i + 1, *j), &twist * s);
    }
    for (key, s) in straighten(b - 1, c - 1).iter() {
        acc.add_term(*key, &rest * s);
    }
    let out: Straightened = Rc::new(acc.terms.into_iter().collect());
    STRAIGHTEN.with(|m| m.borrow_mut().insert((b, c), out.clone()));
    out
}

impl DiscElem {
    pub fn zero() -> Self {
        DiscElem { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        DiscElem::scalar(Scalar::one())
    }

    pub fn scalar(c: Scalar) -> Self {
        DiscElem::term(c, 0, 0)
    }

    pub fn z() -> Self {
        DiscElem::monomial(1, 0)
    }

    pub fn zs() -> Self {
        DiscElem::monomial(0, 1)
    }

    pub fn letter(l: Letter) -> Self {
        match l {
            Letter::Z => DiscElem::z(),
            Letter::Zs => DiscElem::zs(),
        }
    }

    /// `y = 1 - z z*`.
    pub fn y() -> Self {
        let mut out = DiscElem::one();
        out.add_term((1, 1), Scalar::from_int(-1));
        out
    }

    /// `z^i z*^j`.
    pub fn monomial(i: u32, j: u32) -> Self {
        DiscElem::term(Scalar::one(), i, j)
    }

    /// `c z^i z*^j`.
    pub fn term(c: Scalar, i: u32, j: u32) -> Self {
        let mut out = DiscElem::zero();
        out.add_term((i, j), c);
        out
    }

    pub fn from_terms<I: IntoIterator<Item = ((u32, u32), Scalar)>>(it: I) -> Self {
        let mut out = DiscElem::zero();
        for (k, c) in it {
            out.add_term(k, c);
        }
        out
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &Scalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, i: u32, j: u32) -> Scalar {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The scalar value when `self` is a multiple of the unit.
    pub fn as_scalar(&self) -> Option<Scalar> {
        match self.terms.len() {
            0 => Some(Scalar::zero()),
            1 => self.terms.get(&(0, 0)).cloned(),
            _ => None,
        }
    }

    /// Largest `i + j` among the terms; 0 for the zero element.
    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|(i, j)| i + j).max().unwrap_or(0)
    }

    pub(crate) fn add_term(&mut self, key: (u32, u32), c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn scale(&self, c: &Scalar) -> DiscElem {
        if c.is_zero() {
            return DiscElem::zero();
        }
        DiscElem { terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect() }
    }

    pub fn map_coeffs<F: FnMut(&Scalar) -> Scalar>(&self, mut f: F) -> DiscElem {
        DiscElem::from_terms(self.terms.iter().map(|(k, v)| (*k, f(v))))
    }

    pub fn pow(&self, e: u32) -> DiscElem {
        let mut acc = DiscElem::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Antilinear antiautomorphism with `z <-> z*`. Coefficients are
    /// conjugated per `mode`; in `UnitCircleQ` mode this is not a ring
    /// antiautomorphism, since `conj(q^2) != q^2` there.
    pub fn star(&self, mode: ConjugationMode) -> DiscElem {
        DiscElem { terms: self.terms.iter().map(|(&(i, j), c)| ((j, i), c.conjugate(mode))).collect() }
    }

    /// Splits into homogeneous components `i - j = k`.
    pub fn homogeneous_parts(&self) -> BTreeMap<i64, DiscElem> {
        let mut out: BTreeMap<i64, DiscElem> = BTreeMap::new();
        for (&(i, j), c) in &self.terms {
            out.entry(i as i64 - j as i64).or_default().terms.insert((i, j), c.clone());
        }
        out
    }

    /// True when every term has `i - j = k`.
    pub fn is_homogeneous_of(&self, k: i64) -> bool {
        self.terms.keys().all(|&(i, j)| i as i64 - j as i64 == k)
    }

    /// Each homogeneous component as `z^k p(y)` or `p(y) z*^|k|`.
    pub fn grade_decompose(&self) -> BTreeMap<i64, GradedForm> {
        graded::grade_decompose(self)
    }

    pub fn from_graded(g: &GradedForm) -> DiscElem {
        graded::from_graded(g)
    }

    /// Product of a word of generators, multiplied left to right.
    pub fn from_word(word: &[Letter]) -> DiscElem {
        word.iter().fold(DiscElem::one(), |acc, l| &acc * &DiscElem::letter(*l))
    }

    /// Evaluate every coefficient at `q = q0`, keeping the result exact.
    pub fn specialize(&self, q0: &crate::scalar::GaussianRational) -> Result<DiscElem, crate::ScalarError> {
        let mut out = DiscElem::zero();
        for (k, c) in &self.terms {
            out.add_term(*k, Scalar::constant(c.specialize(q0)?));
        }
        Ok(out)
    }
}

/// Product of `a` and `b`.
pub fn disc_mul(a: &DiscElem, b: &DiscElem) -> DiscElem {
    let mut out = DiscElem::zero();
    for (&(a_i, a_j), ca) in &a.terms {
        for (&(b_i, b_j), cb) in &b.terms {
            let c = ca * cb;
            if a_j == 0 || b_i == 0 {
                out.add_term((a_i + b_i, a_j + b_j), c);
                continue;
            }
            for ((i, j), s) in straighten(a_j, b_i).iter() {
                out.add_term((a_i + i, j + b_j), &c * s);
            }
        }
    }
    out
}

impl Add for &DiscElem {
    type Output = DiscElem;
    fn add(self, rhs: &DiscElem) -> DiscElem {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(*k, c.clone());
        }
        out
    }
}

impl Sub for &DiscElem {
    type Output = DiscElem;
    fn sub(self, rhs: &DiscElem) -> DiscElem {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(*k, -c);
        }
        out
    }
}

impl Mul for &DiscElem {
    type Output = DiscElem;
    fn mul(self, rhs: &DiscElem) -> DiscElem {
        disc_mul(self, rhs)
    }
}

impl Neg for &DiscElem {
    type Output = DiscElem;
    fn neg(self) -> DiscElem {
        DiscElem { terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect() }
    }
}

impl Neg for DiscElem {
    type Output = DiscElem;
    fn neg(self) -> DiscElem {
        -&self
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for DiscElem {
            type Output = DiscElem;
            fn $m(self, rhs: DiscElem) -> DiscElem { (&self).$m(&rhs) }
        }
        impl $tr<&DiscElem> for DiscElem {
            type Output = DiscElem;
            fn $m(self, rhs: &DiscElem) -> DiscElem { (&self).$m(rhs) }
        }
        impl $tr<DiscElem> for &DiscElem {
            type Output = DiscElem;
            fn $m(self, rhs: DiscElem) -> DiscElem { self.$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Mul<&DiscElem> for &Scalar {
    type Output = DiscElem;
    fn mul(self, rhs: &DiscElem) -> DiscElem {
        rhs.scale(self)
    }
}

impl From<Scalar> for DiscElem {
    fn from(c: Scalar) -> Self {
        DiscElem::scalar(c)
    }
}

/// Highest total degree first, then higher powers of `z`.
impl fmt::Display for DiscElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut keys: Vec<_> = self.terms.keys().copied().collect();
        keys.sort_by_key(|k| std::cmp::Reverse((k.0 + k.1, k.0)));
        terms::write_sum(
            f,
            keys.into_iter()
                .map(|(i, j)| (&self.terms[&(i, j)], terms::join(&[terms::power("z", i), terms::power("zs", j)]))),
        )
    }
}
