//! U_q(sl2) in the PBW basis `e^i k^m f^j`.
//!
//! Relations: `k e = q^2 e k`, `k f = q^-2 f k`,
//! `e f - f e = (k - k^-1)/(q - q^-1)`.

mod hopf;
mod star;

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::rc::Rc;

use crate::scalar::Scalar;
use crate::terms;

pub use hopf::{antipode, antipode_gen, coproduct_gen, counit, UqTensor};
pub use star::{antipode_star, star_elem, star_gen, InvolutionForm};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize, serde::Deserialize)]
pub enum UqGenerator {
    K,
    Kinv,
    E,
    F,
}

impl UqGenerator {
    pub const ALL: [UqGenerator; 4] = [UqGenerator::K, UqGenerator::Kinv, UqGenerator::E, UqGenerator::F];

    pub fn name(self) -> &'static str {
        match self {
            UqGenerator::K => "k",
            UqGenerator::Kinv => "kinv",
            UqGenerator::E => "e",
            UqGenerator::F => "f",
        }
    }

    pub fn from_name(s: &str) -> Option<UqGenerator> {
        UqGenerator::ALL.into_iter().find(|g| g.name() == s)
    }

    pub fn to_elem(self) -> UqElem {
        match self {
            UqGenerator::K => UqElem::monomial(0, 1, 0),
            UqGenerator::Kinv => UqElem::monomial(0, -1, 0),
            UqGenerator::E => UqElem::monomial(1, 0, 0),
            UqGenerator::F => UqElem::monomial(0, 0, 1),
        }
    }
}

impl fmt::Display for UqGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// PBW exponents `(i, m, j)` of `e^i k^m f^j`.
pub type Pbw = (u32, i32, u32);

/// `sum c e^i k^m f^j`. No zero coefficients are stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct UqElem {
    terms: BTreeMap<Pbw, Scalar>,
}

type Reordered = Rc<Vec<(Pbw, Scalar)>>;

thread_local! {
    static REORDER: RefCell<HashMap<(u32, u32), Reordered>> = RefCell::new(HashMap::new());
}

/// `(k - k^-1)/(q - q^-1)` as PBW terms `(m, coeff)`.
fn cartan_terms() -> [(i32, Scalar); 2] {
    let inv = (Scalar::q() - Scalar::q_pow(-1)).inv().expect("q - 1/q is nonzero");
    [(1, inv.clone()), (-1, -inv)]
}

/// PBW form of `f^b e^c`, moving one `f` past one `e` at a time.
fn reorder(b: u32, c: u32) -> Reordered {
    if b == 0 || c == 0 {
        return Rc::new(vec![((c, 0, b), Scalar::one())]);
    }
    if let Some(hit) = REORDER.with(|m| m.borrow().get(&(b, c)).cloned()) {
        return hit;
    }
    let mut acc = UqElem::zero();
    if b == 1 {
        // f e^c = (e f - H) e^(c-1) = e (f e^(c-1)) - H e^(c-1)
        for &((i, m, j), ref s) in reorder(1, c - 1).iter() {
            acc.add_term((i + 1, m, j), s.clone());
        }
        // k^n e^(c-1) = q^(2n(c-1)) e^(c-1) k^n
        for (n, s) in cartan_terms() {
            let twist = Scalar::q_pow(2 * n * (c as i32 - 1));
            acc.add_term((c - 1, n, 0), -(&s * &twist));
        }
    } else {
        // f^b e^c = f^(b-1) (f e^c)
        for &((i, l, j), ref s) in reorder(1, c).iter() {
            for &((i2, l2, j2), ref s2) in reorder(b - 1, i).iter() {
                // e^i2 k^l2 f^j2 k^l f^j = q^(2 l j2) e^i2 k^(l2+l) f^(j2+j)
                let twist = Scalar::q_pow(2 * l * j2 as i32);
                acc.add_term((i2, l2 + l, j2 + j), &(s * s2) * &twist);
            }
        }
    }
    let out: Reordered = Rc::new(acc.terms.into_iter().collect());
    REORDER.with(|m| m.borrow_mut().insert((b, c), out.clone()));
    out
}

impl UqElem {
    pub fn zero() -> Self {
        UqElem { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        UqElem::scalar(Scalar::one())
    }

    pub fn scalar(c: Scalar) -> Self {
        UqElem::term(c, 0, 0, 0)
    }

    /// `e^i k^m f^j`.
    pub fn monomial(i: u32, m: i32, j: u32) -> Self {
        UqElem::term(Scalar::one(), i, m, j)
    }

    pub fn term(c: Scalar, i: u32, m: i32, j: u32) -> Self {
        let mut out = UqElem::zero();
        out.add_term((i, m, j), c);
        out
    }

    pub fn from_terms<I: IntoIterator<Item = (Pbw, Scalar)>>(it: I) -> Self {
        let mut out = UqElem::zero();
        for (k, c) in it {
            out.add_term(k, c);
        }
        out
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Pbw, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, key: Pbw) -> Scalar {
        self.terms.get(&key).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn as_scalar(&self) -> Option<Scalar> {
        match self.terms.len() {
            0 => Some(Scalar::zero()),
            1 => self.terms.get(&(0, 0, 0)).cloned(),
            _ => None,
        }
    }

    pub(crate) fn add_term(&mut self, key: Pbw, c: Scalar) {
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

    pub fn scale(&self, c: &Scalar) -> UqElem {
        if c.is_zero() {
            return UqElem::zero();
        }
        UqElem { terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect() }
    }

    pub fn pow(&self, e: u32) -> UqElem {
        let mut acc = UqElem::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Inverse of a pure power `c k^m`, the only invertible monomials.
    pub fn inverse(&self) -> Option<UqElem> {
        if self.terms.len() != 1 {
            return None;
        }
        let (&(i, m, j), c) = self.terms.iter().next().unwrap();
        if i != 0 || j != 0 {
            return None;
        }
        Some(UqElem::term(c.inv().ok()?, 0, -m, 0))
    }
}

/// Product in PBW normal form.
pub fn uq_mul(a: &UqElem, b: &UqElem) -> UqElem {
    let mut out = UqElem::zero();
    for (&(a_i, a_m, a_j), ca) in &a.terms {
        for (&(b_i, b_m, b_j), cb) in &b.terms {
            let c = ca * cb;
            // e^a_i k^a_m (f^a_j e^b_i) k^b_m f^b_j
            for &((i, l, j), ref s) in reorder(a_j, b_i).iter() {
                let twist = Scalar::q_pow(2 * a_m * i as i32 + 2 * b_m * j as i32);
                out.add_term((a_i + i, a_m + l + b_m, j + b_j), &(&c * s) * &twist);
            }
        }
    }
    out
}

impl Add for &UqElem {
    type Output = UqElem;
    fn add(self, rhs: &UqElem) -> UqElem {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(*k, c.clone());
        }
        out
    }
}

impl Sub for &UqElem {
    type Output = UqElem;
    fn sub(self, rhs: &UqElem) -> UqElem {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(*k, -c);
        }
        out
    }
}

impl Mul for &UqElem {
    type Output = UqElem;
    fn mul(self, rhs: &UqElem) -> UqElem {
        uq_mul(self, rhs)
    }
}

impl Neg for &UqElem {
    type Output = UqElem;
    fn neg(self) -> UqElem {
        UqElem { terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect() }
    }
}

impl Neg for UqElem {
    type Output = UqElem;
    fn neg(self) -> UqElem {
        -&self
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for UqElem {
            type Output = UqElem;
            fn $m(self, rhs: UqElem) -> UqElem { (&self).$m(&rhs) }
        }
        impl $tr<&UqElem> for UqElem {
            type Output = UqElem;
            fn $m(self, rhs: &UqElem) -> UqElem { (&self).$m(rhs) }
        }
        impl $tr<UqElem> for &UqElem {
            type Output = UqElem;
            fn $m(self, rhs: UqElem) -> UqElem { self.$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl From<UqGenerator> for UqElem {
    fn from(g: UqGenerator) -> Self {
        g.to_elem()
    }
}

fn k_power(m: i32) -> String {
    match m {
        0 => String::new(),
        m if m > 0 => terms::power("k", m as u32),
        m => terms::power("kinv", m.unsigned_abs()),
    }
}

impl fmt::Display for UqElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut keys: Vec<_> = self.terms.keys().copied().collect();
        keys.sort_by_key(|k| std::cmp::Reverse((k.0 + k.2, k.0, k.1)));
        terms::write_sum(
            f,
            keys.into_iter().map(|(i, m, j)| {
                (&self.terms[&(i, m, j)], terms::join(&[terms::power("e", i), k_power(m), terms::power("f", j)]))
            }),
        )
    }
}
