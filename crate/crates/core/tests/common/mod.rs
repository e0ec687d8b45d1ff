//! Seeded property suites shared by the `properties` and `acceptance` targets.
#![allow(dead_code)]

use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed, TestCaseError, TestRunner};

use qdisc_core::disc::Letter;
use qdisc_core::uq::{antipode, counit, star_elem, UqTensor};
use qdisc_core::{
    classify, conjugate_by_automorphism, construct_series, grading_jump, parse_disc_expr, parse_scalar_expr,
    parse_uq_expr, verify, ConjugationMode, DiscElem, GaussianRational, GradedForm, InvolutionForm, Scalar,
    SeriesParams, SeriesTag, UqElem, UqGenerator, YPolynomial,
};

pub const SEED: u64 = 0x5eed_d15c;

pub struct Property {
    pub name: &'static str,
    pub run: fn(u32) -> Result<(), String>,
}

fn check<S>(cases: u32, strategy: S, test: impl Fn(S::Value) -> Result<(), TestCaseError>) -> Result<(), String>
where
    S: Strategy,
    S::Value: std::fmt::Debug,
{
    let config = Config { cases, rng_seed: RngSeed::Fixed(SEED), failure_persistence: None, ..Config::default() };
    TestRunner::new(config).run(&strategy, test).map_err(|e| e.to_string())
}

pub fn gaussian() -> impl Strategy<Value = GaussianRational> {
    (-4i64..=4, 1i64..=3, -3i64..=3).prop_map(|(a, b, c)| GaussianRational::from_parts(a, b, c, 1))
}

pub fn nonzero_gaussian() -> impl Strategy<Value = GaussianRational> {
    gaussian().prop_filter("nonzero", |g| !g.is_zero())
}

fn laurent() -> impl Strategy<Value = Scalar> {
    prop::collection::vec((gaussian(), -2i32..=2), 1..=3)
        .prop_map(|ts| ts.into_iter().map(|(c, k)| Scalar::monomial(c, k)).sum())
}

/// Laurent polynomials in `q`, sometimes divided by `1 + c q^m`.
pub fn scalar() -> impl Strategy<Value = Scalar> {
    (laurent(), prop::option::of((1i64..=3, 1i32..=2))).prop_map(|(num, den)| match den {
        None => num,
        Some((c, m)) => num.checked_div(&(&Scalar::one() + &(&Scalar::from_int(c) * &Scalar::q_pow(m)))).unwrap(),
    })
}

pub fn nonzero_scalar() -> impl Strategy<Value = Scalar> {
    scalar().prop_filter("nonzero", |s| !s.is_zero())
}

pub fn disc_elem(max_degree: u32) -> impl Strategy<Value = DiscElem> {
    prop::collection::vec(((0..=max_degree), (0..=max_degree), scalar()), 0..=3).prop_map(move |ts| {
        DiscElem::from_terms(ts.into_iter().filter(|(i, j, _)| i + j <= max_degree).map(|(i, j, c)| ((i, j), c)))
    })
}

pub fn uq_elem(max_exp: u32) -> impl Strategy<Value = UqElem> {
    let m = max_exp as i32;
    prop::collection::vec(((0..=max_exp), (-m..=m), (0..=max_exp), scalar()), 0..=3)
        .prop_map(|ts| UqElem::from_terms(ts.into_iter().map(|(i, k, j, c)| ((i, k, j), c))))
}

fn ensure(ok: bool, what: &str) -> Result<(), TestCaseError> {
    if ok {
        Ok(())
    } else {
        Err(TestCaseError::fail(what.to_string()))
    }
}

fn q(k: i32) -> Scalar {
    Scalar::q_pow(k)
}

const MODES: [ConjugationMode; 3] = [ConjugationMode::RealQ, ConjugationMode::ImaginaryQ, ConjugationMode::UnitCircleQ];

fn field_axioms(cases: u32) -> Result<(), String> {
    check(cases, (scalar(), scalar(), scalar()), |(a, b, c)| {
        ensure(&(&a + &b) + &c == &a + &(&b + &c), "additive associativity")?;
        ensure(&a + &b == &b + &a, "additive commutativity")?;
        ensure(&(&a * &b) * &c == &a * &(&b * &c), "multiplicative associativity")?;
        ensure(&a * &b == &b * &a, "multiplicative commutativity")?;
        ensure(&a * &(&b + &c) == &(&a * &b) + &(&a * &c), "distributivity")?;
        ensure((&a + &(-&a)).is_zero(), "additive inverse")?;
        if let Ok(inv) = a.inv() {
            ensure((&a * &inv).is_one(), "multiplicative inverse")?;
        } else {
            ensure(a.is_zero(), "only zero lacks an inverse")?;
        }
        Ok(())
    })
}

fn conjugation(cases: u32) -> Result<(), String> {
    check(cases, (scalar(), scalar()), |(a, b)| {
        for mode in MODES {
            ensure(a.conjugate(mode).conjugate(mode) == a, "involutive")?;
            ensure((&a * &b).conjugate(mode) == &a.conjugate(mode) * &b.conjugate(mode), "multiplicative")?;
            ensure((&a + &b).conjugate(mode) == &a.conjugate(mode) + &b.conjugate(mode), "additive")?;
        }
        Ok(())
    })
}

fn specialization(cases: u32) -> Result<(), String> {
    let points = [
        (GaussianRational::from_ratio(1, 2), ConjugationMode::RealQ),
        (GaussianRational::from_ratio(-3, 2), ConjugationMode::RealQ),
        (GaussianRational::from_parts(0, 1, 1, 3), ConjugationMode::ImaginaryQ),
        (GaussianRational::from_parts(3, 5, 4, 5), ConjugationMode::UnitCircleQ),
    ];
    check(cases, (scalar(), scalar()), move |(a, b)| {
        for (q0, mode) in &points {
            let (Ok(sa), Ok(sb)) = (a.specialize(q0), b.specialize(q0)) else {
                continue;
            };
            if let Ok(s) = (&a + &b).specialize(q0) {
                ensure(s == &sa + &sb, "sum")?;
            }
            if let Ok(p) = (&a * &b).specialize(q0) {
                ensure(p == &sa * &sb, "product")?;
            }
            if let Ok(c) = a.conjugate(*mode).specialize(q0) {
                ensure(c == sa.conj(), "conjugation commutes with evaluation at an admissible point")?;
            }
        }
        Ok(())
    })
}

fn disc_associativity(cases: u32) -> Result<(), String> {
    let mono = (0u32..=2, 0u32..=2);
    check(
        cases,
        (mono.clone(), mono.clone(), mono, disc_elem(2), disc_elem(2), disc_elem(2)),
        |(m1, m2, m3, a, b, c)| {
            let (x, y, z) =
                (DiscElem::monomial(m1.0, m1.1), DiscElem::monomial(m2.0, m2.1), DiscElem::monomial(m3.0, m3.1));
            ensure(&(&x * &y) * &z == &x * &(&y * &z), "monomials")?;
            ensure(&(&a * &b) * &c == &a * &(&b * &c), "elements")?;
            ensure(&a * &(&b + &c) == &(&a * &b) + &(&a * &c), "distributivity")
        },
    )
}

fn quasicommutation(cases: u32) -> Result<(), String> {
    check(cases, (0u32..=4, 0u32..=4), |(i, j)| {
        let zzs = DiscElem::monomial(1, 1);
        let rel = &(&(&DiscElem::zs() * &DiscElem::z()).scale(&q(2)) + &DiscElem::one()) - &DiscElem::scalar(q(2));
        ensure(zzs == rel, "defining relation")?;
        let a = DiscElem::monomial(i, j);
        let y = DiscElem::y();
        ensure(&DiscElem::z() * &y == (&y * &DiscElem::z()).scale(&q(2)), "z y = q^2 y z")?;
        ensure(&a * &zzs == &a * &rel, "relation inside products")
    })
}

fn disc_star(cases: u32) -> Result<(), String> {
    // with |q| = 1 the star does not respect the defining relation
    let (z, zs) = (DiscElem::z(), DiscElem::zs());
    let unit = ConjugationMode::UnitCircleQ;
    if (&zs * &z).star(unit) == &z.star(unit) * &zs.star(unit) {
        return Err("unit-circle star unexpectedly antimultiplicative on zs z".into());
    }
    check(cases, (disc_elem(3), disc_elem(3)), |(a, b)| {
        for mode in MODES {
            ensure(a.star(mode).star(mode) == a, "involutive")?;
        }
        for mode in [ConjugationMode::RealQ, ConjugationMode::ImaginaryQ] {
            ensure((&a * &b).star(mode) == &b.star(mode) * &a.star(mode), "antimultiplicative")?;
        }
        Ok(())
    })
}

fn uq_star(cases: u32) -> Result<(), String> {
    check(cases, (uq_elem(2), uq_elem(2)), |(x, y)| {
        for form in InvolutionForm::ALL {
            ensure(star_elem(&star_elem(&x, form), form) == x, "involutive")?;
            ensure(star_elem(&(&x * &y), form) == &star_elem(&y, form) * &star_elem(&x, form), "antimultiplicative")?;
        }
        Ok(())
    })
}

fn graded_round_trip(cases: u32) -> Result<(), String> {
    check(cases, disc_elem(5), |a| {
        let parts = a.grade_decompose();
        let back = parts.values().fold(DiscElem::zero(), |acc, g| &acc + &DiscElem::from_graded(g));
        ensure(back == a, "recomposition")?;
        for (k, g) in &parts {
            ensure(DiscElem::from_graded(g).is_homogeneous_of(*k), "homogeneous components")?;
            ensure(g.degree == *k, "degree label")?;
        }
        Ok(())
    })
}

fn tau_law(cases: u32) -> Result<(), String> {
    let poly = prop::collection::vec(scalar(), 0..=4).prop_map(YPolynomial::from_coeffs);
    check(cases, (poly, nonzero_scalar()), |(p, beta)| {
        let psi = p.mul(&YPolynomial::y());
        let lhs = psi.tau().unwrap().rescale_arg(&beta);
        let rhs = psi.rescale_arg(&beta).tau().unwrap().scale(&beta.inv().unwrap());
        ensure(lhs == rhs, "tau(psi)(beta y) = beta^-1 tau(psi(beta y))")
    })
}

fn pochhammer(_cases: u32) -> Result<(), String> {
    for t in 0..=6 {
        let p = qdisc_core::q_pochhammer(&YPolynomial::y(), 2, t);
        let lhs = DiscElem::monomial(t, t);
        if GradedForm::new(0, p.clone()).to_disc() != lhs {
            return Err(format!("z^{t} z*^{t} differs from (y; q^2)_{t}"));
        }
        if lhs.grade_decompose().get(&0).map(|g| &g.poly) != Some(&p) {
            return Err(format!("graded form of z^{t} z*^{t}"));
        }
    }
    Ok(())
}

fn pbw_associativity(cases: u32) -> Result<(), String> {
    let mono = (0u32..=3, -3i32..=3, 0u32..=3);
    check(cases, (mono.clone(), mono.clone(), mono), |(a, b, c)| {
        let (x, y, z) =
            (UqElem::monomial(a.0, a.1, a.2), UqElem::monomial(b.0, b.1, b.2), UqElem::monomial(c.0, c.1, c.2));
        ensure(&(&x * &y) * &z == &x * &(&y * &z), "monomials up to exponent 3")
    })
}

/// `Delta` extended multiplicatively to PBW terms.
fn delta(x: &UqElem) -> UqTensor {
    use UqGenerator::*;
    let mut out = UqTensor::zero();
    for (&(i, m, j), c) in x.terms() {
        let (kg, kp) = if m >= 0 { (K, m as u32) } else { (Kinv, m.unsigned_abs()) };
        let mut t = UqTensor::from_pairs(&[(UqElem::scalar(c.clone()), UqElem::one())]);
        for (g, p) in [(E, i), (kg, kp), (F, j)] {
            for _ in 0..p {
                t = t.mul(&UqTensor::coproduct(g));
            }
        }
        out = out.add(&t);
    }
    out
}

fn hopf_axioms(_cases: u32) -> Result<(), String> {
    use UqGenerator::*;
    let d = UqTensor::coproduct;
    let fail = |what: &str| Err(what.to_string());
    if d(K).mul(&d(E)) != d(E).mul(&d(K)).scale(&q(2)) {
        return fail("Delta(k e) = q^2 Delta(e k)");
    }
    if d(K).mul(&d(F)) != d(F).mul(&d(K)).scale(&q(-2)) {
        return fail("Delta(k f) = q^-2 Delta(f k)");
    }
    let unit = UqTensor::from_pairs(&[(UqElem::one(), UqElem::one())]);
    if d(K).mul(&d(Kinv)) != unit {
        return fail("Delta(k kinv) = 1");
    }
    let comm = d(E).mul(&d(F)).add(&d(F).mul(&d(E)).scale(&Scalar::from_int(-1))).scale(&(&q(1) - &q(-1)));
    if comm != d(K).add(&d(Kinv).scale(&Scalar::from_int(-1))) {
        return fail("Delta respects the commutator relation");
    }
    let id = |x: &UqElem| x.clone();
    let eps = |x: &UqElem| UqElem::scalar(counit(x));
    for g in UqGenerator::ALL {
        let x = g.to_elem();
        if d(g).contract(eps, id) != x || d(g).contract(id, eps) != x {
            return fail("counit axiom");
        }
        let unit = UqElem::scalar(counit(&x));
        if d(g).contract(antipode, id) != unit || d(g).contract(id, antipode) != unit {
            return fail("antipode axiom");
        }
        for form in InvolutionForm::ALL {
            let starred: Vec<_> = qdisc_core::uq::coproduct_gen(g)
                .iter()
                .map(|(a, b)| (star_elem(a, form), star_elem(b, form)))
                .collect();
            let lhs = delta(&star_elem(&x, form));
            if lhs != UqTensor::from_pairs(&starred) {
                return fail("Delta is a star homomorphism");
            }
            if form != InvolutionForm::C && star_elem(&antipode(&star_elem(&antipode(&x), form)), form) != x {
                return fail("S(S(x*)*) = x");
            }
        }
    }
    Ok(())
}

fn parse_round_trip(cases: u32) -> Result<(), String> {
    check(cases, (disc_elem(3), uq_elem(2), scalar()), |(a, x, s)| {
        ensure(parse_disc_expr(&a.to_string()).ok() == Some(a.clone()), "disc")?;
        ensure(parse_uq_expr(&x.to_string()).ok() == Some(x.clone()), "uq")?;
        ensure(parse_scalar_expr(&s.to_string()).ok() == Some(s.clone()), "scalar")
    })
}

pub fn series_params(tag: SeriesTag) -> BoxedStrategy<SeriesParams> {
    match tag {
        SeriesTag::ZeroPlus | SeriesTag::ZeroMinus => Just(SeriesParams::None).boxed(),
        SeriesTag::OneA => (nonzero_gaussian(), gaussian()).prop_map(|(x, y)| SeriesParams::b(x, y)).boxed(),
        SeriesTag::OneB => (nonzero_gaussian(), gaussian()).prop_map(|(x, y)| SeriesParams::a(x, y)).boxed(),
        SeriesTag::MinusOneA => (gaussian(), nonzero_gaussian()).prop_map(|(x, y)| SeriesParams::b(x, y)).boxed(),
        SeriesTag::MinusOneB => (gaussian(), nonzero_gaussian()).prop_map(|(x, y)| SeriesParams::a(x, y)).boxed(),
    }
}

fn tagged_series() -> impl Strategy<Value = (SeriesTag, SeriesParams)> {
    prop::sample::select(SeriesTag::ALL.to_vec()).prop_flat_map(|t| (Just(t), series_params(t)))
}

fn action_invariants(cases: u32) -> Result<(), String> {
    check(cases, (tagged_series(), nonzero_gaussian()), |((tag, params), c)| {
        let act = construct_series(tag, &params).unwrap();
        ensure(verify(&act, 3).passed, "family members verify")?;
        ensure(grading_jump(&act).map(|j| j.value) == Ok(tag.jump()), "grading jump")?;
        ensure(classify(&act).unwrap().contains(&(tag, params.clone())), "classification recovers parameters")?;
        let moved = conjugate_by_automorphism(&act, &Scalar::constant(c)).unwrap();
        ensure(verify(&moved, 3).passed, "conjugates verify")?;
        ensure(grading_jump(&moved).map(|j| j.value) == Ok(tag.jump()), "jump is invariant")?;
        ensure(classify(&moved).unwrap().iter().any(|(t, _)| *t == tag), "family is invariant")?;
        let mut ev = qdisc_core::Evaluator::new(&act);
        ensure(
            ev.apply_gen(UqGenerator::K, &DiscElem::letter(Letter::Z)) == act.image(UqGenerator::K, Letter::Z),
            "engine agrees with images",
        )
    })
}

pub fn all() -> Vec<Property> {
    vec![
        Property { name: "field axioms", run: field_axioms },
        Property { name: "conjugation", run: conjugation },
        Property { name: "specialization", run: specialization },
        Property { name: "disc associativity", run: disc_associativity },
        Property { name: "quasicommutation", run: quasicommutation },
        Property { name: "disc star", run: disc_star },
        Property { name: "uq star", run: uq_star },
        Property { name: "graded round trip", run: graded_round_trip },
        Property { name: "tau division law", run: tau_law },
        Property { name: "pochhammer identity", run: pochhammer },
        Property { name: "pbw associativity", run: pbw_associativity },
        Property { name: "hopf axioms", run: hopf_axioms },
        Property { name: "parse round trip", run: parse_round_trip },
        Property { name: "action invariants", run: action_invariants },
    ]
}
