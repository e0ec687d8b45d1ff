//! Printing of linear combinations `sum c * m` shared by both algebras.

use std::fmt;

use crate::scalar::Scalar;

/// Writes the terms in the given order. An empty monomial text stands for
/// the unit. The output parses back with the expression grammar.
pub(crate) fn write_sum<'a, I>(f: &mut fmt::Formatter<'_>, terms: I) -> fmt::Result
where
    I: IntoIterator<Item = (&'a Scalar, String)>,
{
    let mut first = true;
    for (c, mono) in terms {
        let negative = c.numerator().leading().is_some_and(|l| l.looks_negative());
        let mag = if negative { -c } else { c.clone() };
        if first {
            if negative {
                write!(f, "-")?;
            }
        } else {
            write!(f, "{}", if negative { " - " } else { " + " })?;
        }
        first = false;
        let wrap = !mag.denominator().is_one() || mag.numerator().coeffs().iter().filter(|x| !x.is_zero()).count() > 1;
        let text = if wrap { format!("({mag})") } else { mag.to_string() };
        match (mono.is_empty(), mag.is_one()) {
            (true, _) => write!(f, "{text}")?,
            (false, true) => write!(f, "{mono}")?,
            (false, false) => write!(f, "{text}*{mono}")?,
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

/// `name`, `name^e`, or nothing for `e == 0`.
pub(crate) fn power(name: &str, e: u32) -> String {
    match e {
        0 => String::new(),
        1 => name.to_string(),
        _ => format!("{name}^{e}"),
    }
}

pub(crate) fn join(parts: &[String]) -> String {
    parts.iter().filter(|p| !p.is_empty()).cloned().collect::<Vec<_>>().join("*")
}
