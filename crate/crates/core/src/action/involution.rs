//! Compatibility of an action with a star structure:
//! `(pi(x) a)* = pi(S(x)*) a*`.

use super::{ActionError, CheckRecord, Evaluator, SymmetryAction, VerificationReport};
use crate::disc::{DiscElem, Letter};
use crate::scalar::{check_specialization_point, GaussianRational};
use crate::uq::{antipode, antipode_star, star_elem, InvolutionForm, UqElem, UqGenerator};

struct Compat<'a, 'b> {
    ev: Evaluator<'a>,
    form: InvolutionForm,
    q0: Option<&'b GaussianRational>,
}

impl Compat<'_, '_> {
    fn record(&mut self, name: String, x: &UqElem, s_star: &UqElem, a: &DiscElem) -> Result<CheckRecord, ActionError> {
        let mode = self.form.mode();
        let lhs = self.ev.apply_uq(x, a).star(mode);
        let rhs = self.ev.apply_uq(s_star, &a.star(mode));
        let (lhs, rhs) = match self.q0 {
            Some(q0) => (lhs.specialize(q0)?, rhs.specialize(q0)?),
            None => (lhs, rhs),
        };
        Ok(CheckRecord::compare(name, &lhs, &rhs))
    }
}

/// Checks compatibility on generators of both algebras, then on all
/// monomials up to `degree_bound` and on products of two generators.
/// With `q0`, both sides are evaluated at `q = q0`, which must suit the
/// conjugation mode of `form`.
pub fn check_involution(
    action: &SymmetryAction,
    form: InvolutionForm,
    q0: Option<&GaussianRational>,
    degree_bound: u32,
) -> Result<VerificationReport, ActionError> {
    if let Some(q0) = q0 {
        check_specialization_point(q0)?;
        if !form.mode().admits(q0) {
            return Err(ActionError::ModeMismatch { q0: q0.to_string(), form: form.to_string() });
        }
    }
    let mut cx = Compat { ev: Evaluator::new(action), form, q0 };
    let mut checks = Vec::new();

    for g in UqGenerator::ALL {
        let s_star = antipode_star(g, form);
        for l in [Letter::Z, Letter::Zs] {
            checks.push(cx.record(format!("({g}, {})", l.name()), &g.to_elem(), &s_star, &DiscElem::letter(l))?);
        }
    }

    for g in UqGenerator::ALL {
        let s_star = antipode_star(g, form);
        let mut failure = None;
        let mut count = 0;
        'outer: for d in 2..=degree_bound {
            for i in 0..=d {
                let rec = cx.record(String::new(), &g.to_elem(), &s_star, &DiscElem::monomial(i, d - i))?;
                count += 1;
                if !rec.passed {
                    failure = Some((DiscElem::monomial(i, d - i), rec));
                    break 'outer;
                }
            }
        }
        let name = format!("({g}, monomials of degree 2..={degree_bound})");
        checks.push(match failure {
            None => {
                let summary = format!("agree on {count} monomials");
                CheckRecord { name, lhs: summary.clone(), rhs: summary, passed: true }
            }
            Some((a, rec)) => CheckRecord { name: format!("{name} (first failure at {a})"), ..rec },
        });
    }

    for g1 in UqGenerator::ALL {
        for g2 in UqGenerator::ALL {
            let x = &g1.to_elem() * &g2.to_elem();
            let s_star = star_elem(&antipode(&x), form);
            for l in [Letter::Z, Letter::Zs] {
                let name = format!("({g1} {g2}, {})", l.name());
                checks.push(cx.record(name, &x, &s_star, &DiscElem::letter(l))?);
            }
        }
    }

    Ok(VerificationReport::new(degree_bound, checks))
}
