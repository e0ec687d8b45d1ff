//! Extending generator images to the whole disc.

use std::collections::HashMap;

use super::SymmetryAction;
use crate::disc::{DiscElem, Letter};
use crate::scalar::Scalar;
use crate::uq::{coproduct_gen, counit, UqElem, UqGenerator};

/// One Sweedler summand, with `None` for the unit.
type Summand = (Option<UqGenerator>, Option<UqGenerator>);

fn as_generator(x: &UqElem) -> Option<UqGenerator> {
    if x.as_scalar().is_some_and(|c| c.is_one()) {
        return None;
    }
    let g = UqGenerator::ALL.into_iter().find(|g| g.to_elem() == *x);
    Some(g.expect("coproduct of a generator has generator or unit legs"))
}

fn summands(g: UqGenerator) -> Vec<Summand> {
    coproduct_gen(g).iter().map(|(a, b)| (as_generator(a), as_generator(b))).collect()
}

/// Applies an action with a cache keyed by generator and monomial.
pub struct Evaluator<'a> {
    action: &'a SymmetryAction,
    coproducts: HashMap<UqGenerator, Vec<Summand>>,
    cache: HashMap<(UqGenerator, (u32, u32)), DiscElem>,
}

impl<'a> Evaluator<'a> {
    pub fn new(action: &'a SymmetryAction) -> Self {
        let coproducts = UqGenerator::ALL.into_iter().map(|g| (g, summands(g))).collect();
        Evaluator { action, coproducts, cache: HashMap::new() }
    }

    pub fn action(&self) -> &SymmetryAction {
        self.action
    }

    fn letter_image(&self, g: Option<UqGenerator>, l: Letter) -> DiscElem {
        match g {
            None => DiscElem::letter(l),
            Some(g) => self.action.image_ref(g, l).cloned().unwrap_or_default(),
        }
    }

    fn unit_image(g: Option<UqGenerator>) -> Scalar {
        match g {
            None => Scalar::one(),
            Some(g) => counit(&g.to_elem()),
        }
    }

    /// `pi(g)(z^i z*^j)`, peeling off the first letter.
    fn apply_monomial(&mut self, g: UqGenerator, key: (u32, u32)) -> DiscElem {
        if key == (0, 0) {
            return DiscElem::scalar(Self::unit_image(Some(g)));
        }
        if let Some(hit) = self.cache.get(&(g, key)) {
            return hit.clone();
        }
        let (first, rest) = if key.0 > 0 { (Letter::Z, (key.0 - 1, key.1)) } else { (Letter::Zs, (0, key.1 - 1)) };
        let mut out = DiscElem::zero();
        for (h1, h2) in self.coproducts[&g].clone() {
            let left = self.letter_image(h1, first);
            if left.is_zero() {
                continue;
            }
            let right = match h2 {
                None => DiscElem::monomial(rest.0, rest.1),
                Some(h2) => self.apply_monomial(h2, rest),
            };
            out = &out + &(&left * &right);
        }
        self.cache.insert((g, key), out.clone());
        out
    }

    pub fn apply_gen(&mut self, g: UqGenerator, a: &DiscElem) -> DiscElem {
        let mut out = DiscElem::zero();
        for (&key, c) in a.terms() {
            out = &out + &self.apply_monomial(g, key).scale(c);
        }
        out
    }

    /// `pi(g)` on a free word, expanded through the coproduct without
    /// normalizing the word first.
    pub fn apply_gen_word(&mut self, g: UqGenerator, word: &[Letter]) -> DiscElem {
        self.apply_opt_word(Some(g), word)
    }

    fn apply_opt_word(&mut self, g: Option<UqGenerator>, word: &[Letter]) -> DiscElem {
        let Some(g) = g else {
            return DiscElem::from_word(word);
        };
        let Some((first, rest)) = word.split_first() else {
            return DiscElem::scalar(Self::unit_image(Some(g)));
        };
        let mut out = DiscElem::zero();
        for (h1, h2) in self.coproducts[&g].clone() {
            let left = self.letter_image(h1, *first);
            if left.is_zero() {
                continue;
            }
            out = &out + &(&left * &self.apply_opt_word(h2, rest));
        }
        out
    }

    /// `pi(x)(a)` with `pi(e^i k^m f^j) = pi(e)^i pi(k)^m pi(f)^j`.
    pub fn apply_uq(&mut self, x: &UqElem, a: &DiscElem) -> DiscElem {
        let mut out = DiscElem::zero();
        for (&(i, m, j), c) in x.terms() {
            let mut v = a.clone();
            for _ in 0..j {
                v = self.apply_gen(UqGenerator::F, &v);
            }
            let kg = if m >= 0 { UqGenerator::K } else { UqGenerator::Kinv };
            for _ in 0..m.unsigned_abs() {
                v = self.apply_gen(kg, &v);
            }
            for _ in 0..i {
                v = self.apply_gen(UqGenerator::E, &v);
            }
            out = &out + &v.scale(c);
        }
        out
    }

    /// Apply a sequence of generators, rightmost first.
    pub fn apply_seq(&mut self, gens: &[UqGenerator], a: &DiscElem) -> DiscElem {
        gens.iter().rev().fold(a.clone(), |v, g| self.apply_gen(*g, &v))
    }
}
