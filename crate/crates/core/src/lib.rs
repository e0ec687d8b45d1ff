//! Exact symbolic kernel for U_q(sl2)-symmetries on the quantum disc.
//!
//! The coefficient field is Q(i)(q) with `q` a free symbol ([`scalar`]).
//! [`disc`] implements the quantum disc in the normal basis `z^i z*^j`,
//! [`uq`] the Hopf algebra U_q(sl2) in the PBW basis `e^i k^m f^j`, and
//! [`action`] the module-algebra engine, the verifier and the classification
//! of symmetries. [`qseries`] holds the closed-form action formulas and the
//! integer obstruction for larger grading jumps.

pub mod action;
pub mod action_file;
pub mod disc;
pub mod parse;
pub mod qseries;
pub mod scalar;
pub mod uq;

mod terms;

pub use action::{
    are_isomorphic, check_involution, classify, conjugate_by_automorphism, construct_series, grading_jump, verify,
    weight_constant, ActionError, Evaluator, GradingJump, SeriesParams, SeriesTag, SymmetryAction, VerificationReport,
};
pub use action_file::{ActionFile, ActionFileError, QMode};
pub use disc::{DiscElem, GradedForm, YPolynomial};
pub use parse::{parse_constant, parse_disc_expr, parse_scalar_expr, parse_uq_expr, ParseError};
pub use qseries::{
    closed_form_action, commutator_highest_coefficient, nonexistence_scan, q_pochhammer, AnsatzDegrees, JumpSign,
    NonexistenceReport, QSeriesError, Target,
};
pub use scalar::{ConjugationMode, GaussianRational, QPoly, Scalar, ScalarError};
pub use uq::{InvolutionForm, UqElem, UqGenerator};
