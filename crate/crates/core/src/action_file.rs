//! JSON action files.
//!
//! Full form:
//!
//! ```json
//! { "q_mode": "symbolic", "label": "...",
//!   "images": { "k": {"z": "q^2*z", "zs": "q^-2*zs"}, "kinv": {...}, "e": {...}, "f": {...} } }
//! ```
//!
//! Series shorthand: `{ "series": "1a", "b0": "1", "b1": "0" }`, with `a0`,
//! `a1` for the b-families and no parameters for `0+`, `0-`. `q_mode` and
//! `label` are optional in both forms.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::action::{construct_series, ActionError, SeriesParams, SeriesTag, SymmetryAction};
use crate::disc::Letter;
use crate::parse::{parse_constant, parse_disc_expr, parse_scalar_expr, ParseError};
use crate::scalar::{ConjugationMode, GaussianRational, Scalar};
use crate::uq::UqGenerator;

#[derive(Debug, thiserror::Error)]
pub enum ActionFileError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("in `{field}`: {source}")]
    Expr { field: String, source: ParseError },
    #[error("invalid q_mode `{0}`; expected symbolic, real:<rational> or imaginary:<rational>")]
    QMode(String),
    #[error("series `{tag}` takes {expected} parameters")]
    Params { tag: SeriesTag, expected: &'static str },
    #[error("{0}")]
    Series(String),
    #[error(transparent)]
    Action(#[from] ActionError),
}

/// How `q` is treated when a star structure is involved.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub enum QMode {
    #[default]
    Symbolic,
    /// `q` is the given real rational.
    Real(GaussianRational),
    /// `q` is `i` times the given rational; stored as the full value.
    Imaginary(GaussianRational),
}

impl QMode {
    /// The specialization point, if any.
    pub fn point(&self) -> Option<&GaussianRational> {
        match self {
            QMode::Symbolic => None,
            QMode::Real(v) | QMode::Imaginary(v) => Some(v),
        }
    }

    pub fn conjugation(&self) -> Option<ConjugationMode> {
        match self {
            QMode::Symbolic => None,
            QMode::Real(_) => Some(ConjugationMode::RealQ),
            QMode::Imaginary(_) => Some(ConjugationMode::ImaginaryQ),
        }
    }
}

impl FromStr for QMode {
    type Err = ActionFileError;
    fn from_str(s: &str) -> Result<Self, ActionFileError> {
        let bad = || ActionFileError::QMode(s.to_string());
        if s.trim() == "symbolic" {
            return Ok(QMode::Symbolic);
        }
        let (kind, value) = s.split_once(':').ok_or_else(bad)?;
        let v = parse_constant(value).map_err(|_| bad())?;
        if !v.is_real() || v.is_zero() {
            return Err(bad());
        }
        match kind.trim() {
            "real" => Ok(QMode::Real(v)),
            "imaginary" => Ok(QMode::Imaginary(&v * &GaussianRational::i())),
            _ => Err(bad()),
        }
    }
}

impl fmt::Display for QMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QMode::Symbolic => write!(f, "symbolic"),
            QMode::Real(v) => write!(f, "real:{v}"),
            QMode::Imaginary(v) => write!(f, "imaginary:{}", v * &GaussianRational::i().conj()),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Pair {
    z: String,
    zs: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Images {
    k: Pair,
    kinv: Pair,
    e: Pair,
    f: Pair,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FullForm {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    q_mode: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    label: Option<String>,
    images: Images,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
struct Shorthand {
    series: String,
    q_mode: Option<String>,
    label: Option<String>,
    b0: Option<String>,
    b1: Option<String>,
    a0: Option<String>,
    a1: Option<String>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
enum RawFile {
    Full(FullForm),
    Series(Shorthand),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ActionFile {
    pub q_mode: QMode,
    pub action: SymmetryAction,
}

fn scalar_field(name: &str, text: &str) -> Result<Scalar, ActionFileError> {
    parse_scalar_expr(text).map_err(|source| ActionFileError::Expr { field: name.to_string(), source })
}

fn q_mode(text: Option<&str>) -> Result<QMode, ActionFileError> {
    text.map_or(Ok(QMode::Symbolic), str::parse)
}

impl ActionFile {
    pub fn new(action: SymmetryAction) -> Self {
        ActionFile { q_mode: QMode::Symbolic, action }
    }

    pub fn from_json(text: &str) -> Result<Self, ActionFileError> {
        match serde_json::from_str::<RawFile>(text)? {
            RawFile::Full(full) => Self::from_full(full),
            RawFile::Series(s) => Self::from_shorthand(s),
        }
    }

    fn from_full(full: FullForm) -> Result<Self, ActionFileError> {
        let mut action = SymmetryAction::zero();
        let Images { k, kinv, e, f } = full.images;
        for (g, pair) in [(UqGenerator::K, k), (UqGenerator::Kinv, kinv), (UqGenerator::E, e), (UqGenerator::F, f)] {
            for (l, text) in [(Letter::Z, &pair.z), (Letter::Zs, &pair.zs)] {
                let image = parse_disc_expr(text)
                    .map_err(|source| ActionFileError::Expr { field: format!("images.{g}.{}", l.name()), source })?;
                action.set_image(g, l, image);
            }
        }
        action.label = full.label;
        Ok(ActionFile { q_mode: q_mode(full.q_mode.as_deref())?, action })
    }

    fn from_shorthand(s: Shorthand) -> Result<Self, ActionFileError> {
        let tag: SeriesTag = s.series.parse().map_err(ActionFileError::Series)?;
        let pick = |a: &Option<String>, name: &str| a.as_deref().map(|t| scalar_field(name, t)).transpose();
        let b = (pick(&s.b0, "b0")?, pick(&s.b1, "b1")?);
        let a = (pick(&s.a0, "a0")?, pick(&s.a1, "a1")?);
        let params = match (b, a) {
            ((None, None), (None, None)) => SeriesParams::None,
            ((Some(b0), Some(b1)), (None, None)) => SeriesParams::B { b0, b1 },
            ((None, None), (Some(a0), Some(a1))) => SeriesParams::A { a0, a1 },
            _ => return Err(ActionFileError::Params { tag, expected: "exactly one of (b0, b1) or (a0, a1) or no" }),
        };
        let mut action = construct_series(tag, &params)?;
        if let Some(label) = s.label {
            action.label = Some(label);
        }
        Ok(ActionFile { q_mode: q_mode(s.q_mode.as_deref())?, action })
    }

    /// The full form, with fields in a fixed order.
    pub fn to_json(&self) -> String {
        let img = |g| Pair {
            z: self.action.image(g, Letter::Z).to_string(),
            zs: self.action.image(g, Letter::Zs).to_string(),
        };
        let full = FullForm {
            q_mode: Some(self.q_mode.to_string()),
            label: self.action.label.clone(),
            images: Images {
                k: img(UqGenerator::K),
                kinv: img(UqGenerator::Kinv),
                e: img(UqGenerator::E),
                f: img(UqGenerator::F),
            },
        };
        serde_json::to_string_pretty(&full).expect("plain strings serialize")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shorthand_matches_construct_series() {
        let file = ActionFile::from_json(r#"{"series": "1a", "b0": "2", "b1": "q^-1"}"#).unwrap();
        let built = construct_series(SeriesTag::OneA, &SeriesParams::b(2, Scalar::q_pow(-1))).unwrap();
        assert!(file.action.same_images(&built));
        assert_eq!(file.q_mode, QMode::Symbolic);
    }

    #[test]
    fn full_form_round_trip() {
        let act =
            construct_series(SeriesTag::MinusOneB, &SeriesParams::a(Scalar::from_ratio(1, 3), Scalar::i())).unwrap();
        let mut file = ActionFile::new(act);
        file.q_mode = "real:1/2".parse().unwrap();
        let back = ActionFile::from_json(&file.to_json()).unwrap();
        assert_eq!(back, file);
    }

    #[test]
    fn q_modes() {
        assert_eq!(
            "imaginary:-1/2".parse::<QMode>().unwrap(),
            QMode::Imaginary(GaussianRational::from_parts(0, 1, -1, 2))
        );
        assert_eq!(QMode::Imaginary(GaussianRational::from_parts(0, 1, -1, 2)).to_string(), "imaginary:-1/2");
        assert!("real:0".parse::<QMode>().is_err());
        assert!("real:i".parse::<QMode>().is_err());
        assert!("complex:1".parse::<QMode>().is_err());
    }

    #[test]
    fn bad_files() {
        assert!(matches!(ActionFile::from_json(r#"{"series": "2a"}"#), Err(ActionFileError::Series(_))));
        assert!(matches!(
            ActionFile::from_json(r#"{"series": "1a", "a0": "1", "a1": "0"}"#),
            Err(ActionFileError::Action(ActionError::ParameterMismatch { .. }))
        ));
        assert!(matches!(ActionFile::from_json(r#"{"series": "1a", "b0": "1"}"#), Err(ActionFileError::Params { .. })));
        let bad = r#"{"images": {"k": {"z": "z +", "zs": "zs"}, "kinv": {"z": "z", "zs": "zs"},
                      "e": {"z": "0", "zs": "0"}, "f": {"z": "0", "zs": "0"}}}"#;
        match ActionFile::from_json(bad) {
            Err(ActionFileError::Expr { field, .. }) => assert_eq!(field, "images.k.z"),
            other => panic!("{other:?}"),
        }
        assert!(matches!(ActionFile::from_json("{"), Err(ActionFileError::Json(_))));
    }
}
