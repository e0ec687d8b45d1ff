//! Checking that an action makes the disc a module algebra.

use std::fmt;

use super::{Evaluator, SymmetryAction};
use crate::disc::{DiscElem, Letter};
use crate::scalar::Scalar;
use crate::uq::{counit, UqGenerator};

/// One named comparison of two normal forms.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct CheckRecord {
    pub name: String,
    pub lhs: String,
    pub rhs: String,
    pub passed: bool,
}

impl CheckRecord {
    pub fn compare(name: impl Into<String>, lhs: &DiscElem, rhs: &DiscElem) -> Self {
        CheckRecord { name: name.into(), lhs: lhs.to_string(), rhs: rhs.to_string(), passed: lhs == rhs }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct VerificationReport {
    pub passed: bool,
    pub degree_bound: u32,
    pub checks: Vec<CheckRecord>,
}

impl VerificationReport {
    pub fn new(degree_bound: u32, checks: Vec<CheckRecord>) -> Self {
        VerificationReport { passed: checks.iter().all(|c| c.passed), degree_bound, checks }
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "[{}] {}", if c.passed { "pass" } else { "FAIL" }, c.name)?;
            if !c.passed {
                writeln!(f, "    lhs: {}", c.lhs)?;
                writeln!(f, "    rhs: {}", c.rhs)?;
            }
        }
        let failed = self.failures().count();
        write!(
            f,
            "{}: {} checks, {} failed, degree bound {}",
            if self.passed { "PASSED" } else { "FAILED" },
            self.checks.len(),
            failed,
            self.degree_bound
        )
    }
}

/// Sides of an operator identity evaluated at `a`.
type Identity = fn(&mut Evaluator<'_>, &DiscElem) -> (DiscElem, DiscElem);

fn identities() -> [(&'static str, Identity); 5] {
    use UqGenerator::*;
    [
        ("k kinv = id", |ev, a| (ev.apply_seq(&[K, Kinv], a), a.clone())),
        ("kinv k = id", |ev, a| (ev.apply_seq(&[Kinv, K], a), a.clone())),
        ("k e = q^2 e k", |ev, a| (ev.apply_seq(&[K, E], a), ev.apply_seq(&[E, K], a).scale(&Scalar::q_pow(2)))),
        ("k f = q^-2 f k", |ev, a| (ev.apply_seq(&[K, F], a), ev.apply_seq(&[F, K], a).scale(&Scalar::q_pow(-2)))),
        // multiplied through by q - q^-1 to keep denominators monomial
        ("(q - q^-1)(e f - f e) = k - kinv", |ev, a| {
            let ef = ev.apply_seq(&[E, F], a);
            let fe = ev.apply_seq(&[F, E], a);
            let lhs = (&ef - &fe).scale(&(Scalar::q() - Scalar::q_pow(-1)));
            (lhs, &ev.apply_gen(K, a) - &ev.apply_gen(Kinv, a))
        }),
    ]
}

/// Runs the unit, relation and operator checks; see [`VerificationReport`].
/// Bounds below 2 are raised to 2.
pub fn verify(action: &SymmetryAction, degree_bound: u32) -> VerificationReport {
    let bound = degree_bound.max(2);
    let mut ev = Evaluator::new(action);
    let mut checks = Vec::new();

    for g in UqGenerator::ALL {
        let lhs = ev.apply_gen(g, &DiscElem::one());
        let rhs = DiscElem::scalar(counit(&g.to_elem()));
        checks.push(CheckRecord::compare(format!("{g}(1) = eps({g}) 1"), &lhs, &rhs));
    }

    let q2 = Scalar::q_pow(2);
    for g in UqGenerator::ALL {
        let lhs = ev.apply_gen_word(g, &[Letter::Z, Letter::Zs]);
        let rhs = &ev.apply_gen_word(g, &[Letter::Zs, Letter::Z]).scale(&q2)
            + &DiscElem::scalar(&(&Scalar::one() - &q2) * &counit(&g.to_elem()));
        checks.push(CheckRecord::compare(format!("{g}(z zs) = {g}(q^2 zs z + 1 - q^2)"), &lhs, &rhs));
    }

    for (name, id) in identities() {
        for l in [Letter::Z, Letter::Zs] {
            let (lhs, rhs) = id(&mut ev, &DiscElem::letter(l));
            checks.push(CheckRecord::compare(format!("{name} on {}", l.name()), &lhs, &rhs));
        }
    }

    for (name, id) in identities() {
        let mut failure = None;
        let mut count = 0;
        'outer: for d in 0..=bound {
            for i in 0..=d {
                let a = DiscElem::monomial(i, d - i);
                let (lhs, rhs) = id(&mut ev, &a);
                count += 1;
                if lhs != rhs {
                    failure = Some((a, lhs, rhs));
                    break 'outer;
                }
            }
        }
        let name = format!("{name} on monomials of degree <= {bound}");
        checks.push(match failure {
            None => {
                let summary = format!("agree on {count} monomials");
                CheckRecord { name, lhs: summary.clone(), rhs: summary, passed: true }
            }
            Some((a, lhs, rhs)) => CheckRecord {
                name: format!("{name} (first failure at {a})"),
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
                passed: false,
            },
        });
    }

    VerificationReport::new(bound, checks)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::action::{construct_series, SeriesParams, SeriesTag};

    #[test]
    fn one_a_passes() {
        let act = construct_series(SeriesTag::OneA, &SeriesParams::b(1, 0)).unwrap();
        let report = verify(&act, 4);
        assert!(report.passed, "{report}");
    }

    #[test]
    fn zero_plus_passes() {
        let act = construct_series(SeriesTag::ZeroPlus, &SeriesParams::None).unwrap();
        assert!(verify(&act, 4).passed);
    }

    #[test]
    fn tampered_fails_on_commutator() {
        let act = construct_series(SeriesTag::OneA, &SeriesParams::b(1, 0)).unwrap().with_image(
            UqGenerator::E,
            Letter::Z,
            DiscElem::monomial(2, 0),
        );
        let report = verify(&act, 4);
        assert!(!report.passed);
        let failed: Vec<_> = report.failures().map(|c| c.name.clone()).collect();
        assert!(failed.iter().any(|n| n == "(q - q^-1)(e f - f e) = k - kinv on z"), "{failed:?}");
    }

    #[test]
    fn bound_is_clamped() {
        let act = construct_series(SeriesTag::ZeroMinus, &SeriesParams::None).unwrap();
        assert_eq!(verify(&act, 0).degree_bound, 2);
    }
}
