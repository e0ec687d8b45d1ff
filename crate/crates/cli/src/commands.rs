use std::fs;
use std::io::Read;

use anyhow::{anyhow, bail, Context, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use qdisc_core::{
    are_isomorphic, check_involution, classify, construct_series, grading_jump, nonexistence_scan, parse_constant,
    parse_disc_expr, parse_scalar_expr, parse_uq_expr, verify, ActionFile, Evaluator, GaussianRational, Scalar,
    SeriesParams, SeriesTag, SymmetryAction, VerificationReport,
};

use crate::{Cli, Command};

/// What a command prints, in both output styles.
pub struct Report {
    pub ok: bool,
    pub text: String,
    pub json: Value,
}

pub fn run(cli: &Cli) -> Result<Report> {
    match &cli.command {
        Command::Verify { file } => {
            let file = load(file)?;
            let report = verify(&file.action, cli.degree);
            Ok(verification("verify", report, json!({})))
        }
        Command::Classify { file } => classify_cmd(&load(file)?.action),
        Command::Act { file, uq, disc } => {
            let file = load(file)?;
            let x = parse_uq_expr(uq).with_context(|| format!("in U_q expression `{uq}`"))?;
            let a = parse_disc_expr(disc).with_context(|| format!("in disc expression `{disc}`"))?;
            let image = Evaluator::new(&file.action).apply_uq(&x, &a).to_string();
            Ok(Report {
                ok: true,
                text: image.clone(),
                json: json!({ "command": "act", "uq": x.to_string(), "disc": a.to_string(), "image": image }),
            })
        }
        Command::Involution { file, form, q } => {
            let file = load(file)?;
            let q0 = match q {
                Some(text) => Some(parse_point(text)?),
                None => file.q_mode.point().cloned(),
            };
            let report = check_involution(&file.action, *form, q0.as_ref(), cli.degree)?;
            let q_text = q0.map_or("symbolic".to_string(), |v| v.to_string());
            let mut r = verification("involution", report, json!({ "form": form.to_string(), "q": q_text }));
            r.text = format!("involution form {form}, q = {q_text}\n{}", r.text);
            Ok(r)
        }
        Command::Scan { nmax } => {
            let report = nonexistence_scan(*nmax);
            let mut json = serde_json::to_value(&report)?;
            json["command"] = json!("scan");
            Ok(Report { ok: report.certified, text: report.to_string(), json })
        }
        Command::Series { tag, b0, b1, a0, a1, seed } => {
            let action = match seed {
                Some(seed) => random_series(*tag, *seed),
                None => construct_series(*tag, &series_params(*tag, b0, b1, a0, a1)?)?,
            };
            let text = ActionFile::new(action).to_json();
            let json = serde_json::from_str(&text)?;
            Ok(Report { ok: true, text, json })
        }
        Command::Iso { first, second } => {
            let (a1, a2) = (load(first)?.action, load(second)?.action);
            let witness = are_isomorphic(&a1, &a2).context("isomorphism test needs classified actions")?;
            let text = match &witness {
                Some(c) => format!("isomorphic: z -> c z with c = {c}"),
                None => "not isomorphic".to_string(),
            };
            let json = json!({
                "command": "iso",
                "isomorphic": witness.is_some(),
                "witness": witness.as_ref().map(Scalar::to_string),
            });
            Ok(Report { ok: witness.is_some(), text, json })
        }
        Command::Selftest { seed } => Ok(selftest(*seed, cli.degree)),
    }
}

fn verification(command: &str, report: VerificationReport, extra: Value) -> Report {
    let mut json = json!({ "command": command });
    if let (Value::Object(out), Value::Object(extra)) = (&mut json, extra) {
        out.extend(extra);
    }
    if let (Value::Object(out), Ok(Value::Object(body))) = (&mut json, serde_json::to_value(&report)) {
        out.extend(body);
    }
    Report { ok: report.passed, text: report.to_string(), json }
}

fn classify_cmd(action: &SymmetryAction) -> Result<Report> {
    match classify(action) {
        Ok(rows) => {
            let text: Vec<_> = rows
                .iter()
                .map(|(tag, params)| match params {
                    SeriesParams::None => tag.to_string(),
                    _ => format!("{tag}: {params}"),
                })
                .collect();
            let matches: Vec<Value> = rows
                .iter()
                .map(|(tag, params)| {
                    let params: serde_json::Map<_, _> =
                        params.named().into_iter().map(|(n, v)| (n.to_string(), json!(v.to_string()))).collect();
                    json!({ "series": tag.to_string(), "params": params })
                })
                .collect();
            Ok(Report { ok: true, text: text.join("\n"), json: json!({ "command": "classify", "matches": matches }) })
        }
        Err(e) => {
            let jump = grading_jump(action).ok().map(|j| j.value);
            Ok(Report {
                ok: false,
                text: format!("unclassified: {e}"),
                json: json!({ "command": "classify", "matches": [], "reason": e.to_string(), "jump": jump }),
            })
        }
    }
}

fn read_input(path: &str) -> Result<String> {
    if path == "-" {
        let mut text = String::new();
        std::io::stdin().read_to_string(&mut text).context("reading standard input")?;
        Ok(text)
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {path}"))
    }
}

fn load(path: &str) -> Result<ActionFile> {
    let text = read_input(path)?;
    ActionFile::from_json(&text).with_context(|| format!("loading action file {path}"))
}

/// `1/2`, `-3`, `i/2`, `-i/3` or the shorthand `i1/2` for `i * 1/2`.
fn parse_point(text: &str) -> Result<GaussianRational> {
    let t = text.trim();
    let (sign, rest) = match t.strip_prefix('-') {
        Some(r) => (-1, r),
        None => (1, t),
    };
    let value = match rest.strip_prefix('i') {
        Some(r) if r.starts_with(|c: char| c.is_ascii_digit()) => {
            let v = parse_constant(r).with_context(|| format!("invalid value for --q: `{text}`"))?;
            &v * &GaussianRational::i()
        }
        _ => parse_constant(rest).with_context(|| format!("invalid value for --q: `{text}`"))?,
    };
    Ok(if sign < 0 { -value } else { value })
}

fn series_params(
    tag: SeriesTag,
    b0: &Option<String>,
    b1: &Option<String>,
    a0: &Option<String>,
    a1: &Option<String>,
) -> Result<SeriesParams> {
    let scalar = |name: &str, v: &Option<String>| -> Result<Option<Scalar>> {
        v.as_deref().map(|t| parse_scalar_expr(t).with_context(|| format!("in --{name}"))).transpose()
    };
    let b = (scalar("b0", b0)?, scalar("b1", b1)?);
    let a = (scalar("a0", a0)?, scalar("a1", a1)?);
    match (b, a) {
        ((None, None), (None, None)) => Ok(SeriesParams::None),
        ((Some(b0), Some(b1)), (None, None)) => Ok(SeriesParams::B { b0, b1 }),
        ((None, None), (Some(a0), Some(a1))) => Ok(SeriesParams::A { a0, a1 }),
        _ => bail!("series {tag} takes both of --b0/--b1, both of --a0/--a1, or neither"),
    }
}

fn random_gaussian(rng: &mut ChaCha8Rng) -> Scalar {
    let (re, den, im) = (rng.gen_range(-4..=4), rng.gen_range(1..=3), rng.gen_range(-3..=3));
    Scalar::constant(GaussianRational::from_parts(re, den, im, 1))
}

/// A random admissible member of `tag`; retries until the parameters are nondegenerate.
fn random_series(tag: SeriesTag, seed: u64) -> SymmetryAction {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let (x, y) = (random_gaussian(&mut rng), random_gaussian(&mut rng));
        let params = match tag {
            SeriesTag::ZeroPlus | SeriesTag::ZeroMinus => SeriesParams::None,
            SeriesTag::OneA | SeriesTag::MinusOneA => SeriesParams::B { b0: x, b1: y },
            SeriesTag::OneB | SeriesTag::MinusOneB => SeriesParams::A { a0: x, a1: y },
        };
        if let Ok(action) = construct_series(tag, &params) {
            return action;
        }
    }
}

fn selftest(seed: u64, degree: u32) -> Report {
    let mut lines = Vec::new();
    let mut entries = Vec::new();
    let mut ok = true;
    for (n, tag) in SeriesTag::ALL.into_iter().enumerate() {
        let action = random_series(tag, seed.wrapping_add(n as u64));
        let report = verify(&action, degree);
        let jump = grading_jump(&action).map(|j| j.value).map_err(|e| anyhow!(e));
        let passed = report.passed && jump.as_ref().is_ok_and(|&j| j == tag.jump());
        ok &= passed;
        let label = action.label.clone().unwrap_or_else(|| tag.to_string());
        lines.push(format!("[{}] verify {label} at degree {degree}", if passed { "pass" } else { "FAIL" }));
        entries.push(json!({ "series": tag.to_string(), "label": label, "passed": passed }));
    }
    let scan = nonexistence_scan(20);
    ok &= scan.certified;
    lines.push(format!("[{}] nonexistence scan up to 20", if scan.certified { "pass" } else { "FAIL" }));
    lines.push(if ok { "selftest passed".into() } else { "selftest FAILED".into() });
    Report {
        ok,
        text: lines.join("\n"),
        json: json!({ "command": "selftest", "seed": seed, "degree_bound": degree, "series": entries, "scan_certified": scan.certified, "passed": ok }),
    }
}
