//! Matching actions against the six families, and isomorphism.

use super::{construct_series, grading_jump, weight_constant, ActionError, SeriesParams, SeriesTag, SymmetryAction};
use crate::disc::{DiscElem, Letter};
use crate::scalar::Scalar;
use crate::uq::UqGenerator;

fn q(k: i32) -> Scalar {
    Scalar::q_pow(k)
}

/// Coefficient of `y^t` in the degree-0 component of `a`.
fn y_coeff(a: &DiscElem, t: usize) -> Scalar {
    a.grade_decompose().get(&0).map(|g| g.poly.coeff(t)).unwrap_or_else(Scalar::zero)
}

/// Candidate parameters read off fixed images; each is confirmed by
/// rebuilding the family member and comparing all eight images.
fn candidates(action: &SymmetryAction, jump: i64) -> Vec<(SeriesTag, SeriesParams)> {
    use Letter::{Zs, Z};
    use UqGenerator::{E, F};
    let img = |g, l| action.image(g, l);
    let mut out = Vec::new();
    match jump {
        0 => {
            if let Ok(alpha) = weight_constant(action) {
                let tag = if alpha.is_one() { SeriesTag::ZeroPlus } else { SeriesTag::ZeroMinus };
                out.push((tag, SeriesParams::None));
            }
        }
        1 => {
            let lead = img(E, Z).coeff(2, 0);
            if let Ok(inv) = lead.inv() {
                // e(z) = q b0^-1 z^2, f(z) = -b0 - b1 y^2
                let b0 = &q(1) * &inv;
                let b1 = -y_coeff(&img(F, Z), 2);
                out.push((SeriesTag::OneA, SeriesParams::B { b0, b1 }));
            }
            if !lead.is_zero() {
                // e(z) = q^2 a0 z^2, e(z*) = -a0 - a1 y^2
                let a0 = &lead * &q(-2);
                let a1 = -y_coeff(&img(E, Zs), 2);
                out.push((SeriesTag::OneB, SeriesParams::A { a0, a1 }));
            }
        }
        -1 => {
            if let Some(Ok(inv)) = img(E, Z).as_scalar().map(|c| c.inv()) {
                // e(z) = q^-1 b1^-1, f(z*) = (-q^-2 b0 + b1) - (1 + q^-2) b1 y
                let b1 = &q(-1) * &inv;
                let b0 = &q(2) * &(&b1 - &y_coeff(&img(F, Zs), 0));
                out.push((SeriesTag::MinusOneA, SeriesParams::B { b0, b1 }));
            }
            if let Some(Ok(inv)) = img(F, Zs).as_scalar().map(|c| c.inv()) {
                // f(z*) = q^-1 a1^-1, e(z) = (-q^-2 a0 + a1) - (1 + q^-2) a1 y
                let a1 = &q(-1) * &inv;
                let a0 = &q(2) * &(&a1 - &y_coeff(&img(E, Z), 0));
                out.push((SeriesTag::MinusOneB, SeriesParams::A { a0, a1 }));
            }
        }
        _ => {}
    }
    out
}

/// Every family member equal to `action`. Members of the overlap of 1a and
/// 1b are reported under both tags.
pub fn classify(action: &SymmetryAction) -> Result<Vec<(SeriesTag, SeriesParams)>, ActionError> {
    let jump = grading_jump(action)?.value;
    let matches: Vec<_> = candidates(action, jump)
        .into_iter()
        .filter(|(tag, params)| construct_series(*tag, params).is_ok_and(|built| built.same_images(action)))
        .collect();
    if matches.is_empty() {
        return Err(ActionError::Unclassifiable);
    }
    Ok(matches)
}

/// `Psi_c(z^i z*^j) = c^(i-j) z^i z*^j`.
fn rescale(a: &DiscElem, c: &Scalar, c_inv: &Scalar) -> DiscElem {
    DiscElem::from_terms(a.terms().map(|(&(i, j), v)| {
        let factor = if i >= j { c.pow((i - j) as i32) } else { c_inv.pow((j - i) as i32) };
        ((i, j), v * &factor.expect("nonzero base"))
    }))
}

/// `Psi_c pi(g) Psi_c^-1` for the automorphism `z -> c z`, `z* -> c^-1 z*`.
pub fn conjugate_by_automorphism(action: &SymmetryAction, c: &Scalar) -> Result<SymmetryAction, ActionError> {
    let c_inv = c.inv().map_err(|_| ActionError::ZeroScalar)?;
    let mut out = SymmetryAction::zero();
    out.label = action.label.clone();
    for (g, l, img) in action.images() {
        let moved = rescale(&img, c, &c_inv);
        let factor = match l {
            Letter::Z => &c_inv,
            Letter::Zs => c,
        };
        out.set_image(g, l, moved.scale(factor));
    }
    Ok(out)
}

/// Candidate `c` taking family member `p1` to `p2` under conjugation.
fn witness(tag: SeriesTag, p1: &SeriesParams, p2: &SeriesParams) -> Option<Scalar> {
    use SeriesParams::{A, B};
    let ratio = |x: &Scalar, y: &Scalar| x.checked_div(y).ok();
    match (tag, p1, p2) {
        (SeriesTag::ZeroPlus | SeriesTag::ZeroMinus, _, _) => Some(Scalar::one()),
        (SeriesTag::OneA, B { b0, .. }, B { b0: b0p, .. }) => ratio(b0, b0p),
        (SeriesTag::OneB, A { a0, .. }, A { a0: a0p, .. }) => ratio(a0p, a0),
        (SeriesTag::MinusOneA, B { b1, .. }, B { b1: b1p, .. }) => ratio(b1p, b1),
        (SeriesTag::MinusOneB, A { a1, .. }, A { a1: a1p, .. }) => ratio(a1, a1p),
        _ => None,
    }
}

/// A scalar `c` with `Psi_c pi1 Psi_c^-1 = pi2`, if one exists. Both actions
/// must belong to the classified families.
pub fn are_isomorphic(a1: &SymmetryAction, a2: &SymmetryAction) -> Result<Option<Scalar>, ActionError> {
    let c1 = classify(a1)?;
    let c2 = classify(a2)?;
    for (t1, p1) in &c1 {
        for (t2, p2) in &c2 {
            if t1 != t2 {
                continue;
            }
            if let Some(c) = witness(*t1, p1, p2) {
                if conjugate_by_automorphism(a1, &c)?.same_images(a2) {
                    return Ok(Some(c));
                }
            }
        }
    }
    Ok(None)
}
