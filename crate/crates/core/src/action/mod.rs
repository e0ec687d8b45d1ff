//! Actions of U_q(sl2) on the quantum disc.
//!
//! A [`SymmetryAction`] stores the images of `k`, `k^-1`, `e`, `f` on `z`
//! and `z*`. The [`Evaluator`] extends them to all of the disc through the
//! coproduct, and [`verify`] checks that the result is a module algebra.

mod classify;
mod engine;
mod involution;
mod series;
mod verify;
mod weight;

use std::collections::BTreeMap;

use crate::disc::{DiscElem, Letter};
use crate::scalar::ScalarError;
use crate::uq::UqGenerator;

pub use classify::{are_isomorphic, classify, conjugate_by_automorphism};
pub use engine::Evaluator;
pub use involution::check_involution;
pub use series::{construct_series, SeriesParams, SeriesTag};
pub use verify::{verify, CheckRecord, VerificationReport};
pub use weight::{grading_jump, weight_constant, GradingJump};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ActionError {
    #[error("degenerate parameter: {0}")]
    DegenerateParameter(String),
    #[error("series {tag} takes {expected} parameters")]
    ParameterMismatch { tag: SeriesTag, expected: &'static str },
    #[error("k does not act on z and z* by reciprocal scalars")]
    NotAWeightAction,
    #[error("no integer n with |n| <= {bound} solves alpha^n = q^2 for alpha = {alpha}")]
    NoIntegerJump { alpha: String, bound: u32 },
    #[error("action matches no row of the classification")]
    Unclassifiable,
    #[error("conjugating scalar must be nonzero")]
    ZeroScalar,
    #[error("q = {q0} is not admissible for involution form {form}")]
    ModeMismatch { q0: String, form: String },
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// Images of the four generators on `z` and `z*`. Any images are accepted,
/// so that invalid candidates can be built and rejected by [`verify`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetryAction {
    images: BTreeMap<(UqGenerator, Letter), DiscElem>,
    pub label: Option<String>,
}

impl SymmetryAction {
    /// The action with every image zero.
    pub fn zero() -> Self {
        SymmetryAction { images: BTreeMap::new(), label: None }
    }

    pub fn with_image(mut self, g: UqGenerator, at: Letter, image: DiscElem) -> Self {
        self.set_image(g, at, image);
        self
    }

    pub fn set_image(&mut self, g: UqGenerator, at: Letter, image: DiscElem) {
        if image.is_zero() {
            self.images.remove(&(g, at));
        } else {
            self.images.insert((g, at), image);
        }
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn image(&self, g: UqGenerator, at: Letter) -> DiscElem {
        self.images.get(&(g, at)).cloned().unwrap_or_default()
    }

    pub(crate) fn image_ref(&self, g: UqGenerator, at: Letter) -> Option<&DiscElem> {
        self.images.get(&(g, at))
    }

    /// All eight images in a fixed order.
    pub fn images(&self) -> Vec<(UqGenerator, Letter, DiscElem)> {
        let mut out = Vec::with_capacity(8);
        for g in UqGenerator::ALL {
            for l in [Letter::Z, Letter::Zs] {
                out.push((g, l, self.image(g, l)));
            }
        }
        out
    }

    /// Same images, ignoring labels.
    pub fn same_images(&self, other: &SymmetryAction) -> bool {
        self.images() == other.images()
    }
}
