//! The real forms (A)-(E) of U_q(sl2).

use std::fmt;
use std::str::FromStr;

use super::{antipode_gen, UqElem, UqGenerator};
use crate::scalar::{ConjugationMode, Scalar};

/// A Hopf star structure. `k* = k` in every form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum InvolutionForm {
    /// `e* = f k`, `f* = k^-1 e`, `q` real.
    A,
    /// `e* = -f k`, `f* = -k^-1 e`, `q` real.
    B,
    /// `e* = e`, `f* = f`, `|q| = 1`.
    C,
    /// `e* = i f k`, `f* = i k^-1 e`, `q` imaginary.
    D,
    /// `e* = -i f k`, `f* = -i k^-1 e`, `q` imaginary.
    E,
}

impl InvolutionForm {
    pub const ALL: [InvolutionForm; 5] =
        [InvolutionForm::A, InvolutionForm::B, InvolutionForm::C, InvolutionForm::D, InvolutionForm::E];

    pub fn mode(self) -> ConjugationMode {
        match self {
            InvolutionForm::A | InvolutionForm::B => ConjugationMode::RealQ,
            InvolutionForm::C => ConjugationMode::UnitCircleQ,
            InvolutionForm::D | InvolutionForm::E => ConjugationMode::ImaginaryQ,
        }
    }

    /// The scalar in `e* = c f k`, `f* = c k^-1 e`; `None` for form C.
    fn twist(self) -> Option<Scalar> {
        match self {
            InvolutionForm::A => Some(Scalar::one()),
            InvolutionForm::B => Some(Scalar::from_int(-1)),
            InvolutionForm::C => None,
            InvolutionForm::D => Some(Scalar::i()),
            InvolutionForm::E => Some(-Scalar::i()),
        }
    }
}

impl fmt::Display for InvolutionForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for InvolutionForm {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "A" | "a" => Ok(InvolutionForm::A),
            "B" | "b" => Ok(InvolutionForm::B),
            "C" | "c" => Ok(InvolutionForm::C),
            "D" | "d" => Ok(InvolutionForm::D),
            "E" | "e" => Ok(InvolutionForm::E),
            _ => Err(format!("unknown involution form `{s}`; expected one of A, B, C, D, E")),
        }
    }
}

pub fn star_gen(g: UqGenerator, form: InvolutionForm) -> UqElem {
    use UqGenerator::*;
    match (g, form.twist()) {
        (K | Kinv, _) => g.to_elem(),
        (E | F, None) => g.to_elem(),
        (E, Some(c)) => (&F.to_elem() * &K.to_elem()).scale(&c),
        (F, Some(c)) => (&Kinv.to_elem() * &E.to_elem()).scale(&c),
    }
}

/// Antilinear antimultiplicative extension of [`star_gen`].
pub fn star_elem(x: &UqElem, form: InvolutionForm) -> UqElem {
    let e_star = star_gen(UqGenerator::E, form);
    let f_star = star_gen(UqGenerator::F, form);
    let mode = form.mode();
    let mut out = UqElem::zero();
    for (&(i, m, j), c) in x.terms() {
        // (c e^i k^m f^j)* = conj(c) (f*)^j k^m (e*)^i
        let mono = &(&f_star.pow(j) * &UqElem::monomial(0, m, 0)) * &e_star.pow(i);
        out = &out + &mono.scale(&c.conjugate(mode));
    }
    out
}

/// `S(g)*`.
pub fn antipode_star(g: UqGenerator, form: InvolutionForm) -> UqElem {
    star_elem(&antipode_gen(g), form)
}
