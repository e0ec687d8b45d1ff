//! The weight constant and the grading jump.

use std::fmt;

use super::{ActionError, SymmetryAction};
use crate::disc::{DiscElem, Letter};
use crate::scalar::Scalar;
use crate::uq::UqGenerator;

/// Largest `|n|` tried when solving `alpha^n = q^2`.
pub const JUMP_SEARCH_BOUND: u32 = 64;

/// The integer `n` with `pi(e) A_k ⊆ A_(k+n)` and `pi(f) A_k ⊆ A_(k-n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
pub struct GradingJump {
    pub value: i64,
}

impl fmt::Display for GradingJump {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// `alpha` with `pi(k)(z) = alpha z` and `pi(k)(z*) = alpha^-1 z*`.
pub fn weight_constant(action: &SymmetryAction) -> Result<Scalar, ActionError> {
    let kz = action.image(UqGenerator::K, Letter::Z);
    let alpha = kz.coeff(1, 0);
    if alpha.is_zero() || kz != DiscElem::z().scale(&alpha) {
        return Err(ActionError::NotAWeightAction);
    }
    let inv = alpha.inv()?;
    if action.image(UqGenerator::K, Letter::Zs) != DiscElem::zs().scale(&inv) {
        return Err(ActionError::NotAWeightAction);
    }
    Ok(alpha)
}

pub fn grading_jump(action: &SymmetryAction) -> Result<GradingJump, ActionError> {
    jump_for_weight(&weight_constant(action)?)
}

/// `0` for `alpha = ±1`, else the `n` with `alpha^n = q^2`.
pub fn jump_for_weight(alpha: &Scalar) -> Result<GradingJump, ActionError> {
    let minus_one = Scalar::from_int(-1);
    if alpha.is_one() || *alpha == minus_one {
        return Ok(GradingJump { value: 0 });
    }
    let target = Scalar::q_pow(2);
    let inv = alpha.inv()?;
    let (mut up, mut down) = (Scalar::one(), Scalar::one());
    for n in 1..=JUMP_SEARCH_BOUND as i64 {
        up = &up * alpha;
        down = &down * &inv;
        if up == target {
            return Ok(GradingJump { value: n });
        }
        if down == target {
            return Ok(GradingJump { value: -n });
        }
    }
    Err(ActionError::NoIntegerJump { alpha: alpha.to_string(), bound: JUMP_SEARCH_BOUND })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn jump(alpha: Scalar) -> i64 {
        jump_for_weight(&alpha).unwrap().value
    }

    #[test]
    fn jump_examples() {
        assert_eq!(jump(Scalar::q_pow(2)), 1);
        assert_eq!(jump(Scalar::from_int(-1)), 0);
        assert_eq!(jump(Scalar::q_pow(-2)), -1);
        assert_eq!(jump(Scalar::q()), 2);
        assert!(matches!(jump_for_weight(&Scalar::q_pow(3)), Err(ActionError::NoIntegerJump { .. })));
    }

    #[test]
    fn not_a_weight_action() {
        let act = SymmetryAction::zero().with_image(UqGenerator::K, Letter::Z, DiscElem::zs());
        assert_eq!(weight_constant(&act), Err(ActionError::NotAWeightAction));
        let act = SymmetryAction::zero()
            .with_image(UqGenerator::K, Letter::Z, DiscElem::z().scale(&Scalar::q_pow(2)))
            .with_image(UqGenerator::K, Letter::Zs, DiscElem::zs().scale(&Scalar::q_pow(2)));
        assert_eq!(weight_constant(&act), Err(ActionError::NotAWeightAction));
    }
}
