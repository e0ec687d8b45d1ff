//! The six families of symmetries and their generator images.

use std::fmt;
use std::str::FromStr;

use super::{ActionError, SymmetryAction};
use crate::disc::{DiscElem, Letter};
use crate::scalar::Scalar;
use crate::uq::UqGenerator;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SeriesTag {
    ZeroPlus,
    ZeroMinus,
    OneA,
    OneB,
    MinusOneA,
    MinusOneB,
}

impl SeriesTag {
    pub const ALL: [SeriesTag; 6] = [
        SeriesTag::ZeroPlus,
        SeriesTag::ZeroMinus,
        SeriesTag::OneA,
        SeriesTag::OneB,
        SeriesTag::MinusOneA,
        SeriesTag::MinusOneB,
    ];

    /// The grading jump shared by every member of the family.
    pub fn jump(self) -> i64 {
        match self {
            SeriesTag::ZeroPlus | SeriesTag::ZeroMinus => 0,
            SeriesTag::OneA | SeriesTag::OneB => 1,
            SeriesTag::MinusOneA | SeriesTag::MinusOneB => -1,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            SeriesTag::ZeroPlus => "0+",
            SeriesTag::ZeroMinus => "0-",
            SeriesTag::OneA => "1a",
            SeriesTag::OneB => "1b",
            SeriesTag::MinusOneA => "-1a",
            SeriesTag::MinusOneB => "-1b",
        }
    }

    /// Whether the family is parametrized by `(b0, b1)`, `(a0, a1)` or nothing.
    fn param_kind(self) -> &'static str {
        match self {
            SeriesTag::ZeroPlus | SeriesTag::ZeroMinus => "no",
            SeriesTag::OneA | SeriesTag::MinusOneA => "(b0, b1)",
            SeriesTag::OneB | SeriesTag::MinusOneB => "(a0, a1)",
        }
    }
}

impl fmt::Display for SeriesTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SeriesTag {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        let norm = s.trim().replace('\u{2212}', "-");
        SeriesTag::ALL
            .into_iter()
            .find(|t| t.as_str() == norm)
            .ok_or_else(|| format!("unknown series `{s}`; expected one of 0+, 0-, 1a, 1b, -1a, -1b"))
    }
}

/// Parameters of a family: `(b0, b1)` for 1a/-1a, `(a0, a1)` for 1b/-1b.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum SeriesParams {
    None,
    B { b0: Scalar, b1: Scalar },
    A { a0: Scalar, a1: Scalar },
}

impl SeriesParams {
    pub fn b(b0: impl Into<Scalar>, b1: impl Into<Scalar>) -> Self {
        SeriesParams::B { b0: b0.into(), b1: b1.into() }
    }

    pub fn a(a0: impl Into<Scalar>, a1: impl Into<Scalar>) -> Self {
        SeriesParams::A { a0: a0.into(), a1: a1.into() }
    }

    /// Named parameter values in a fixed order.
    pub fn named(&self) -> Vec<(&'static str, &Scalar)> {
        match self {
            SeriesParams::None => vec![],
            SeriesParams::B { b0, b1 } => vec![("b0", b0), ("b1", b1)],
            SeriesParams::A { a0, a1 } => vec![("a0", a0), ("a1", a1)],
        }
    }
}

impl fmt::Display for SeriesParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.named().iter().map(|(n, v)| format!("{n} = {v}")).collect();
        write!(f, "{}", parts.join(", "))
    }
}

fn q(k: i32) -> Scalar {
    Scalar::q_pow(k)
}

fn nonzero(name: &str, v: &Scalar) -> Result<Scalar, ActionError> {
    v.inv().map_err(|_| ActionError::DegenerateParameter(format!("{name} must be nonzero")))
}

/// `c0 + c1 y + c2 y^2` in the disc.
fn in_y(c0: Scalar, c1: Scalar, c2: Scalar) -> DiscElem {
    crate::disc::YPolynomial::from_coeffs(vec![c0, c1, c2]).to_disc()
}

fn weights(alpha: Scalar) -> SymmetryAction {
    let inv = alpha.inv().expect("weight constant is nonzero");
    SymmetryAction::zero()
        .with_image(UqGenerator::K, Letter::Z, DiscElem::z().scale(&alpha))
        .with_image(UqGenerator::K, Letter::Zs, DiscElem::zs().scale(&inv))
        .with_image(UqGenerator::Kinv, Letter::Z, DiscElem::z().scale(&inv))
        .with_image(UqGenerator::Kinv, Letter::Zs, DiscElem::zs().scale(&alpha))
}

/// The member of family `tag` with parameters `params`.
pub fn construct_series(tag: SeriesTag, params: &SeriesParams) -> Result<SymmetryAction, ActionError> {
    use Letter::{Zs, Z};
    use UqGenerator::{E, F};
    let mismatch = || ActionError::ParameterMismatch { tag, expected: tag.param_kind() };
    let action = match (tag, params) {
        (SeriesTag::ZeroPlus, SeriesParams::None) => weights(Scalar::one()),
        (SeriesTag::ZeroMinus, SeriesParams::None) => weights(Scalar::from_int(-1)),
        (SeriesTag::OneA, SeriesParams::B { b0, b1 }) => {
            let ib0 = nonzero("b0", b0)?;
            weights(q(2))
                .with_image(E, Z, DiscElem::term(&q(1) * &ib0, 2, 0))
                .with_image(E, Zs, DiscElem::scalar(-(&q(-1) * &ib0)))
                .with_image(F, Z, in_y(-b0, Scalar::zero(), -b1))
                .with_image(F, Zs, DiscElem::term(&q(2) * b0, 0, 2))
        }
        (SeriesTag::OneB, SeriesParams::A { a0, a1 }) => {
            let ia0 = nonzero("a0", a0)?;
            weights(q(2))
                .with_image(E, Z, DiscElem::term(&q(2) * a0, 2, 0))
                .with_image(E, Zs, in_y(-a0, Scalar::zero(), -a1))
                .with_image(F, Z, DiscElem::scalar(-(&q(-1) * &ia0)))
                .with_image(F, Zs, DiscElem::term(&q(1) * &ia0, 0, 2))
        }
        (SeriesTag::MinusOneA, SeriesParams::B { b0, b1 }) => {
            let ib1 = nonzero("b1", b1)?;
            weights(q(-2))
                .with_image(E, Z, DiscElem::scalar(&q(-1) * &ib1))
                .with_image(F, Z, DiscElem::term(-(&q(2) * b1), 2, 0))
                .with_image(F, Zs, in_y(&(-(&q(-2) * b0)) + b1, -(&(Scalar::one() + q(-2)) * b1), Scalar::zero()))
        }
        (SeriesTag::MinusOneB, SeriesParams::A { a0, a1 }) => {
            let ia1 = nonzero("a1", a1)?;
            weights(q(-2))
                .with_image(E, Z, in_y(&(-(&q(-2) * a0)) + a1, -(&(Scalar::one() + q(-2)) * a1), Scalar::zero()))
                .with_image(E, Zs, DiscElem::term(-(&q(2) * a1), 0, 2))
                .with_image(F, Zs, DiscElem::scalar(&q(-1) * &ia1))
        }
        _ => return Err(mismatch()),
    };
    let label = if matches!(params, SeriesParams::None) { tag.to_string() } else { format!("{tag} ({params})") };
    Ok(action.with_label(label))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::action::Evaluator;

    fn b(b0: i64, b1: i64) -> SeriesParams {
        SeriesParams::b(b0, b1)
    }

    #[test]
    fn table_images() {
        let act = construct_series(SeriesTag::MinusOneA, &b(3, 2)).unwrap();
        // -q^-2 b0 + b1 - (1 + q^-2) b1 y with y = 1 - z z*
        let expected = &DiscElem::scalar(&(-(&q(-2) * &Scalar::from_int(3))) + &Scalar::from_int(2))
            - &DiscElem::y().scale(&(&(Scalar::one() + q(-2)) * &Scalar::from_int(2)));
        assert_eq!(act.image(UqGenerator::F, Letter::Zs), expected);

        let act = construct_series(SeriesTag::OneB, &SeriesParams::a(1, 0)).unwrap();
        assert_eq!(act.image(UqGenerator::F, Letter::Z), DiscElem::scalar(-q(-1)));
    }

    #[test]
    fn degenerate_parameters() {
        assert!(matches!(construct_series(SeriesTag::OneA, &b(0, 1)), Err(ActionError::DegenerateParameter(_))));
        assert!(matches!(
            construct_series(SeriesTag::MinusOneB, &SeriesParams::a(1, 0)),
            Err(ActionError::DegenerateParameter(_))
        ));
        assert!(matches!(
            construct_series(SeriesTag::OneA, &SeriesParams::None),
            Err(ActionError::ParameterMismatch { .. })
        ));
    }

    #[test]
    fn tag_names_round_trip() {
        for t in SeriesTag::ALL {
            assert_eq!(t.as_str().parse::<SeriesTag>().unwrap(), t);
        }
        assert_eq!("\u{2212}1a".parse::<SeriesTag>().unwrap(), SeriesTag::MinusOneA);
    }

    /// The table also lists the images of `y`; they follow from the others.
    #[test]
    fn images_of_y_match_table() {
        let y = DiscElem::y();
        let yp = |c: Vec<Scalar>| crate::disc::YPolynomial::from_coeffs(c).to_disc();
        let (b0, b1) = (Scalar::from_int(3), Scalar::from_int(5));
        let zero = Scalar::zero;

        let act = construct_series(SeriesTag::OneA, &SeriesParams::b(b0.clone(), b1.clone())).unwrap();
        let mut ev = Evaluator::new(&act);
        let ib0 = b0.inv().unwrap();
        assert_eq!(ev.apply_gen(UqGenerator::E, &y), (&DiscElem::z() * &y).scale(&(&q(-1) * &ib0)));
        assert_eq!(ev.apply_gen(UqGenerator::F, &y), &yp(vec![zero(), b0.clone(), b1.clone()]) * &DiscElem::zs());

        let (a0, a1) = (Scalar::from_int(-2), Scalar::from_int(7));
        let act = construct_series(SeriesTag::OneB, &SeriesParams::a(a0.clone(), a1.clone())).unwrap();
        let mut ev = Evaluator::new(&act);
        let ia0 = a0.inv().unwrap();
        assert_eq!(ev.apply_gen(UqGenerator::E, &y), &DiscElem::z() * &yp(vec![zero(), a0.clone(), a1.clone()]));
        assert_eq!(ev.apply_gen(UqGenerator::F, &y), (&y * &DiscElem::zs()).scale(&(&q(-1) * &ia0)));

        let act = construct_series(SeriesTag::MinusOneA, &SeriesParams::b(b0.clone(), b1.clone())).unwrap();
        let mut ev = Evaluator::new(&act);
        let ib1 = b1.inv().unwrap();
        assert_eq!(ev.apply_gen(UqGenerator::E, &y), DiscElem::zs().scale(&-(&q(1) * &ib1)));
        assert_eq!(ev.apply_gen(UqGenerator::F, &y), &DiscElem::z() * &yp(vec![b0.clone(), b1.clone()]));

        let act = construct_series(SeriesTag::MinusOneB, &SeriesParams::a(a0.clone(), a1.clone())).unwrap();
        let mut ev = Evaluator::new(&act);
        let ia1 = a1.inv().unwrap();
        assert_eq!(ev.apply_gen(UqGenerator::E, &y), &yp(vec![a0.clone(), a1.clone()]) * &DiscElem::zs());
        assert_eq!(ev.apply_gen(UqGenerator::F, &y), DiscElem::z().scale(&-(&q(1) * &ia1)));
    }
}
