//! End-to-end acceptance suite. Runs without the libtest harness so that the
//! verdict of every criterion is printed on its own line, even on success.
//!
//! Tolerances: every comparison is exact integer equality; there is no
//! floating point anywhere in the suite. Runtime limits are wall-clock and are
//! enforced per criterion.

use std::collections::BTreeSet;
use std::sync::Arc;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use hilbcoeff::explorer::{
    buchsbaum_probe, check_e1_bound, check_g1_bounds, check_growth_envelope, explore_module_lambda,
    polynomial_power_scaling, semigroup_power_scaling, SampleSet, SamplerConfig,
};
use hilbcoeff::groebner::{GroebnerBasis, IdealHandle, Length, RingPresentation, DEFAULT_PAIR_BUDGET};
use hilbcoeff::hilbert::{
    check_identities, e_coeffs, f_coeffs, g_coeffs, i_invariant, IdealPair, ModuleSpec, DEFAULT_N_MAX,
};
use hilbcoeff::monomial::MonomialOrder;
use hilbcoeff::parse::{parse_document, parse_poly, parse_poly_list, RingDocument};
use hilbcoeff::poly::{PolyRing, Polynomial};
use hilbcoeff::semigroup::{
    delta_sets, e1_interpolated, e1_via_blowup, NumericalSemigroup, SemigroupIdeal, DEFAULT_GAP_CAP,
};

/// Exact equality everywhere; kept as a named constant so the report states it.
const TOLERANCE: i64 = 0;

const POLY2: &str = include_str!("../examples/poly2.ring");
const QUADRIC_PAIR: &str = include_str!("../examples/quadric_pair.ring");
const IDEALIZATION: &str = include_str!("../examples/idealization.ring");

/// Seed shared by every sampled family in the suite.
const SEED: u64 = 20_240_917;

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn doc(text: &str) -> RingDocument {
    parse_document(text, Default::default()).expect("fixture parses")
}

fn ideal(ring: &Arc<RingPresentation>, gens: &str) -> IdealHandle {
    IdealHandle::new(ring, parse_poly_list(gens, ring.poly_ring()).unwrap()).unwrap()
}

fn named(d: &RingDocument, name: &str) -> IdealHandle {
    IdealHandle::new(&d.ring, d.ideal(name).unwrap().to_vec()).unwrap()
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn quadric_samples(count: usize, powers: std::ops::RangeInclusive<u32>) -> Result<(RingDocument, SampleSet), String> {
    let d = doc(QUADRIC_PAIR);
    let cfg = SamplerConfig {
        seed: SEED,
        sample_count: count,
        power_range: powers,
        ..Default::default()
    };
    let set = SampleSet::sampled(&d.ring, &cfg, None).map_err(err)?;
    Ok((d, set))
}

fn criterion_1() -> Check {
    let mut checked = 0;
    let p = doc(POLY2);
    let m = IdealHandle::maximal(&p.ring);
    let mut pairs = vec![
        ("k[x,y], K=Q=m".to_string(), m.clone(), m.clone()),
        (
            "k[x,y], K=m, Q=(x^2,y^3)".to_string(),
            m.clone(),
            ideal(&p.ring, "x^2, y^3"),
        ),
    ];
    let (q, samples) = quadric_samples(5, 1..=2)?;
    let qm = IdealHandle::maximal(&q.ring);
    for (j, s) in samples.ideals.iter().enumerate() {
        pairs.push((format!("quadric pair, sample {j}"), qm.clone(), s.clone()));
    }
    for (name, k, q) in pairs {
        let report = check_identities(&IdealPair::new(k, q).map_err(err)?, DEFAULT_N_MAX).map_err(err)?;
        for c in &report.checks {
            ensure((c.lhs - c.rhs).abs() <= TOLERANCE, || {
                format!("{name}: {} gives {} vs {}", c.name, c.lhs, c.rhs)
            })?;
            checked += 1;
        }
    }
    Ok(format!("{checked} identities exact on 7 pairs"))
}

fn criterion_2() -> Check {
    let p = doc(POLY2);
    let m = IdealHandle::maximal(&p.ring);
    let pair = IdealPair::new(m.clone(), m.clone()).map_err(err)?;
    let got = [
        (
            "e(Q,R)",
            e_coeffs(&m, &ModuleSpec::Ring, DEFAULT_N_MAX).map_err(err)?.values,
            vec![1, 0, 0],
        ),
        (
            "e(Q,K)",
            e_coeffs(&m, &ModuleSpec::Ideal(m.clone()), DEFAULT_N_MAX)
                .map_err(err)?
                .values,
            vec![1, -1, 0],
        ),
        (
            "g^K(Q)",
            g_coeffs(&pair, DEFAULT_N_MAX).map_err(err)?.values,
            vec![1, -1, 1],
        ),
        (
            "f^K(Q)",
            f_coeffs(&pair, DEFAULT_N_MAX).map_err(err)?.values,
            vec![1, 0],
        ),
    ];
    for (name, values, expected) in &got {
        ensure(values == expected, || {
            format!("{name} = {values:?}, expected {expected:?}")
        })?;
    }
    Ok("e=(1,0,0) e(Q,K)=(1,-1,0) g=(1,-1,1) f=(1,0)".into())
}

fn criterion_3() -> Check {
    let a = doc(IDEALIZATION);
    let mut invariants = Vec::new();
    for n in 1..=4i64 {
        let q = ideal(&a.ring, &format!("x^{n}, y^{n}"));
        let e = e_coeffs(&q, &ModuleSpec::Ring, DEFAULT_N_MAX).map_err(err)?;
        // (-1)^{d-1} n with d = 2
        ensure(e.get(1) == -n, || {
            format!("n = {n}: e_1 = {}, expected {}", e.get(1), -n)
        })?;
        ensure(e.get(2) == 0, || format!("n = {n}: e_2 = {}", e.get(2)))?;
        invariants.push(i_invariant(&q, &ModuleSpec::Ring, DEFAULT_N_MAX).map_err(err)?.value);
    }
    ensure(invariants.windows(2).all(|w| w[0] < w[1]), || {
        format!("I(Q;A) not strictly increasing: {invariants:?}")
    })?;
    Ok(format!("e_1 = -n, e_2 = 0 for n = 1..4; I(Q;A) = {invariants:?}"))
}

fn criterion_4() -> Check {
    let (q, samples) = quadric_samples(24, 1..=2)?;
    let lambda = explore_module_lambda(&ModuleSpec::Ring, 1, &samples, DEFAULT_N_MAX).map_err(err)?;
    ensure(lambda.errors().count() == 0, || {
        "a sample failed in the Lambda sweep".into()
    })?;
    ensure(lambda.observed_set == vec![-1], || {
        format!("Lambda_1(R) = {:?}", lambda.observed_set)
    })?;
    let m = IdealHandle::maximal(&q.ring);
    let probe = buchsbaum_probe(&m, &samples, DEFAULT_N_MAX).map_err(err)?;
    ensure(probe.observed.len() == samples.ideals.len(), || {
        "a sample failed in the probe".into()
    })?;
    for rec in &probe.samples {
        let ir = rec.value.unwrap();
        let im = rec.details["I(Q;m)"];
        ensure(ir == 1, || format!("sample {}: I(Q;R) = {ir}", rec.index))?;
        ensure(im - ir == 1, || {
            format!("sample {}: I(Q;m) - I(Q;R) = {}", rec.index, im - ir)
        })?;
    }
    Ok(format!(
        "{} samples: Lambda_1(R) = {{-1}}, I(Q;R) = 1, I(Q;m) - I(Q;R) = 1",
        samples.ideals.len()
    ))
}

fn criterion_5() -> Check {
    let (q, samples) = quadric_samples(12, 1..=2)?;
    let m = IdealHandle::maximal(&q.ring);
    let g1 = check_g1_bounds(&m, &samples, &[1], DEFAULT_N_MAX).map_err(err)?;
    ensure(g1.violations.is_empty() && g1.errors().count() == 0, || {
        format!("g_1 bounds: {:?}", g1.violations)
    })?;

    let p = doc(POLY2);
    let cm_q = ideal(&p.ring, "x^2, y^3");
    let qp_q = named(&q, "q");
    let mut rows = 0;
    for (name, qq, module, i_m) in [
        ("k[x,y]", &cm_q, ModuleSpec::Ring, 0),
        ("quadric pair", &qp_q, ModuleSpec::Ring, 1),
    ] {
        let env = check_growth_envelope(qq, &module, i_m, 6, DEFAULT_N_MAX).map_err(err)?;
        let bad: Vec<u32> = env.violations().map(|r| r.n).collect();
        ensure(bad.is_empty(), || format!("{name}: envelope fails at n = {bad:?}"))?;
        rows += env.rows.len();
    }

    // |e_1(Q,M)| ≤ I(M) on the generalized Cohen–Macaulay fixtures.
    let pm = IdealHandle::maximal(&p.ring);
    let y = ideal(&p.ring, "y");
    let p_cfg = SamplerConfig {
        seed: SEED,
        sample_count: 8,
        power_range: 1..=2,
        ..Default::default()
    };
    let p_samples = SampleSet::sampled(&p.ring, &p_cfg, None).map_err(err)?;
    let line_samples = SampleSet::explicit(
        // Q must be m-primary in R; modulo y each is generated by one parameter
        vec![
            ideal(&p.ring, "x, y^2"),
            ideal(&p.ring, "x^2 + y, y^3"),
            ideal(&p.ring, "x^3 + 2*y, y^2"),
        ],
        "one parameter of R/(y)",
    );
    let fixtures = [
        ("k[x,y]", ModuleSpec::Ring, 0, &p_samples),
        ("m of k[x,y]", ModuleSpec::Ideal(pm), 1, &p_samples),
        ("k[x,y]/(y)", ModuleSpec::Quotient(y), 0, &line_samples),
        ("quadric pair", ModuleSpec::Ring, 1, &samples),
    ];
    let mut sampled = 0;
    for (name, module, i_m, set) in fixtures {
        let r = check_e1_bound(&module, i_m, set, DEFAULT_N_MAX).map_err(err)?;
        ensure(r.violations.is_empty() && r.errors().count() == 0, || {
            format!("{name}: |e_1| bound: {:?}", r.violations)
        })?;
        sampled += r.observed.len();
    }
    Ok(format!(
        "g_1 bounds on {} samples, envelope on {rows} rows, |e_1| <= I(M) on {sampled} samples; 0 violations",
        g1.observed.len()
    ))
}

fn criterion_6() -> Check {
    let p = doc(POLY2);
    let m = IdealHandle::maximal(&p.ring);
    let poly = polynomial_power_scaling(&m, &ModuleSpec::Ring, 3, DEFAULT_N_MAX).map_err(err)?;
    for row in &poly.rows {
        let k = row.k as i64;
        let expected = (k * k, (k * k - k) / 2);
        ensure(row.holds && (row.e0, row.e1) == expected, || {
            format!(
                "k[x,y], m^{k}: (e_0, e_1) = ({}, {}), expected {expected:?}",
                row.e0, row.e1
            )
        })?;
    }
    let s = NumericalSemigroup::new(&[3, 4, 5]).map_err(err)?;
    let sm = SemigroupIdeal::from_gens(&s, &[3, 4, 5]).map_err(err)?;
    let semi = semigroup_power_scaling(&sm, &s.as_ideal(), 4, DEFAULT_N_MAX).map_err(err)?;
    for row in &semi.rows {
        let k = row.k as i64;
        ensure(row.holds && (row.e0, row.e1) == (3 * k, 2), || {
            format!("<3,4,5>, m^{k}: (e_0, e_1) = ({}, {})", row.e0, row.e1)
        })?;
    }
    Ok(format!(
        "{} polynomial rows, {} semigroup rows exact",
        poly.rows.len(),
        semi.rows.len()
    ))
}

/// A random numerical semigroup with at most `max_gaps` gaps.
fn random_semigroup(rng: &mut ChaCha8Rng, max_gaps: usize) -> NumericalSemigroup {
    loop {
        let count = rng.gen_range(2..=4);
        let gens: Vec<u32> = (0..count).map(|_| rng.gen_range(3..=11)).collect();
        if let Ok(s) = NumericalSemigroup::new(&gens) {
            if s.genus() <= max_gaps && s.genus() > 0 {
                return s;
            }
        }
    }
}

fn random_semigroup_ideal(rng: &mut ChaCha8Rng, s: &NumericalSemigroup) -> SemigroupIdeal {
    let top = s.conductor() + 2 * s.multiplicity();
    let pool: Vec<u32> = (1..=top).filter(|&v| s.contains(v)).collect();
    let count = rng.gen_range(1..=3);
    let gens: Vec<u32> = pool.choose_multiple(rng, count).copied().collect();
    SemigroupIdeal::from_gens(s, &gens).unwrap()
}

fn criterion_7() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut seen = BTreeSet::new();
    let mut semigroups = Vec::new();
    while semigroups.len() < 6 {
        let s = random_semigroup(&mut rng, 12);
        if seen.insert(s.generators().to_vec()) {
            semigroups.push(s);
        }
    }
    let mut ideals = 0;
    let mut oversemigroups = 0;
    for s in &semigroups {
        let ring = s.as_ideal();
        let mut ks = vec![SemigroupIdeal::from_gens(s, s.generators()).map_err(err)?];
        while ks.len() < 4 {
            ks.push(random_semigroup_ideal(&mut rng, s));
        }
        for i in &ks {
            let blow = e1_via_blowup(i, &ring).map_err(err)? as i64;
            let fit = e1_interpolated(i, &ring, DEFAULT_N_MAX).map_err(err)?.get(1);
            ensure(blow == fit, || {
                format!("{s}, I = {:?}: blow-up {blow}, fit {fit}", i.generators())
            })?;
            let report = delta_sets(i, DEFAULT_GAP_CAP).map_err(err)?;
            ensure(report.sup_check, || {
                format!(
                    "{s}, K = {:?}: sup Delta^K = {:?}, expected {}",
                    i.generators(),
                    report.delta_k.last(),
                    report.sup_expected
                )
            })?;
            ideals += 1;
            oversemigroups += report.witnesses.len();
        }
    }
    let s = NumericalSemigroup::new(&[3, 4, 5]).map_err(err)?;
    let report = delta_sets(
        &SemigroupIdeal::from_gens(&s, &[3, 4, 5]).map_err(err)?,
        DEFAULT_GAP_CAP,
    )
    .map_err(err)?;
    ensure(report.delta_r == vec![0, 1, 2], || {
        format!("Delta_R(<3,4,5>) = {:?}", report.delta_r)
    })?;
    ensure(report.delta_r.last() == Some(&(s.genus() as i64)), || {
        "sup Delta_R != #gaps".into()
    })?;
    Ok(format!(
        "{} semigroups, {ideals} ideals, {oversemigroups} oversemigroup evaluations; Delta_R(<3,4,5>) = {{0,1,2}}",
        semigroups.len()
    ))
}

/// Counts monomials in the box below the pure powers that no generator
/// divides. Independent of the staircase code.
fn brute_force_colength(gens: &[Vec<u32>], nvars: usize) -> u64 {
    let bounds: Vec<u32> = (0..nvars)
        .map(|v| {
            gens.iter()
                .filter(|g| g.iter().enumerate().all(|(j, &e)| (j == v) == (e > 0)))
                .map(|g| g[v])
                .min()
                .expect("m-primary")
        })
        .collect();
    let mut count = 0;
    let mut exps = vec![0u32; nvars];
    loop {
        if !gens.iter().any(|g| g.iter().zip(&exps).all(|(a, b)| a <= b)) {
            count += 1;
        }
        let mut v = 0;
        loop {
            if v == nvars {
                return count;
            }
            exps[v] += 1;
            if exps[v] < bounds[v] {
                break;
            }
            exps[v] = 0;
            v += 1;
        }
    }
}

fn random_poly(rng: &mut ChaCha8Rng, ring: &Arc<PolyRing>) -> Polynomial {
    let n = ring.nvars();
    let terms: Vec<(i64, Vec<u32>)> = (0..rng.gen_range(0..=6))
        .map(|_| {
            let c = rng.gen_range(-40..=40);
            let e: Vec<u32> = (0..n).map(|_| rng.gen_range(0..=4)).collect();
            (c, e)
        })
        .collect();
    let borrowed: Vec<(i64, &[u32])> = terms.iter().map(|(c, e)| (*c, e.as_slice())).collect();
    Polynomial::from_coefficients(ring, &borrowed)
}

fn criterion_8() -> Check {
    // Gröbner post-check on the fixtures and on ideals built from them.
    let mut bases = 0;
    for text in [POLY2, QUADRIC_PAIR, IDEALIZATION] {
        let d = doc(text);
        let m = IdealHandle::maximal(&d.ring);
        let mut handles = vec![m.clone(), m.power(3).map_err(err)?];
        handles.extend(d.ideals.iter().map(|(name, _)| named(&d, name)));
        let mut polys = vec![d.ring.relations().to_vec()];
        for h in &handles {
            let mut gens = d.ring.relations().to_vec();
            gens.extend(h.generators().iter().cloned());
            polys.push(gens);
        }
        for gens in polys {
            let gb = GroebnerBasis::compute(d.ring.poly_ring(), &gens, DEFAULT_PAIR_BUDGET).map_err(err)?;
            ensure(gb.satisfies_buchberger_criterion() && gb.is_reduced(), || {
                format!(
                    "basis of {:?} fails the post-check",
                    gens.iter().map(|g| g.to_string()).collect::<Vec<_>>()
                )
            })?;
            bases += 1;
        }
    }
    let field = hilbcoeff::field::PrimeField::new(32003).map_err(err)?;
    let lex =
        Arc::new(PolyRing::new(vec!["x".into(), "y".into(), "z".into()], field, MonomialOrder::Lex).map_err(err)?);
    let cubic = parse_poly_list("y - x^2, z - x^3", &lex).map_err(err)?;
    let gb = GroebnerBasis::compute(&lex, &cubic, DEFAULT_PAIR_BUDGET).map_err(err)?;
    ensure(gb.satisfies_buchberger_criterion(), || "twisted cubic in lex".into())?;
    bases += 1;

    // Staircase lengths against brute-force counting.
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 8);
    for trial in 0..100 {
        let nvars = rng.gen_range(1..=3);
        let names = ["x", "y", "z"][..nvars].join(", ");
        let d = doc(&format!("vars {names};"));
        let mut gens: Vec<Vec<u32>> = (0..nvars)
            .map(|v| {
                (0..nvars)
                    .map(|j| if j == v { rng.gen_range(1..=7) } else { 0 })
                    .collect()
            })
            .collect();
        for _ in 0..rng.gen_range(0..=4) {
            gens.push((0..nvars).map(|_| rng.gen_range(0..=5)).collect());
        }
        let polys: Vec<Polynomial> = gens
            .iter()
            .map(|e| Polynomial::from_coefficients(d.ring.poly_ring(), &[(1, e.as_slice())]))
            .collect();
        let got = IdealHandle::new(&d.ring, polys).map_err(err)?.length().map_err(err)?;
        let expected = brute_force_colength(&gens, nvars);
        ensure(got == Length::Finite(expected), || {
            format!("trial {trial}: {gens:?} has length {got}, brute force {expected}")
        })?;
    }

    // Parser round trip.
    let d = doc("vars a, b, c, d;");
    let pr = d.ring.poly_ring();
    for trial in 0..500 {
        let f = random_poly(&mut rng, pr);
        let text = f.to_string();
        let back = parse_poly(&text, pr).map_err(|e| format!("trial {trial}: `{text}` does not parse: {e}"))?;
        ensure(back == f, || format!("trial {trial}: `{text}` reparses as `{back}`"))?;
    }
    Ok(format!(
        "{bases} bases pass the S-pair check; 100 staircase and 500 parser trials agree"
    ))
}

struct Criterion {
    id: u32,
    title: &'static str,
    limit: Duration,
    run: fn() -> Check,
}

fn main() {
    let criteria = [
        Criterion {
            id: 1,
            title: "identity suite",
            limit: Duration::from_secs(10),
            run: criterion_1,
        },
        Criterion {
            id: 2,
            title: "coefficient regression",
            limit: Duration::from_secs(10),
            run: criterion_2,
        },
        Criterion {
            id: 3,
            title: "non-GCM growth of e_1",
            limit: Duration::from_secs(60),
            run: criterion_3,
        },
        Criterion {
            id: 4,
            title: "Buchsbaum constancy",
            limit: Duration::from_secs(120),
            run: criterion_4,
        },
        Criterion {
            id: 5,
            title: "bound suites",
            limit: Duration::from_secs(60),
            run: criterion_5,
        },
        Criterion {
            id: 6,
            title: "scaling law",
            limit: Duration::from_secs(30),
            run: criterion_6,
        },
        Criterion {
            id: 7,
            title: "blow-up equivalence",
            limit: Duration::from_secs(30),
            run: criterion_7,
        },
        Criterion {
            id: 8,
            title: "engine oracles",
            limit: Duration::from_secs(60),
            run: criterion_8,
        },
    ];
    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let verdict = match outcome {
            Ok(detail) if elapsed <= c.limit => Ok(detail),
            Ok(detail) => Err(format!("{detail}; exceeded the {}s limit", c.limit.as_secs())),
            Err(e) => Err(e),
        };
        match verdict {
            Ok(detail) => println!(
                "criterion {} PASS  {:<24} {:>7.2}s / {:>3}s  {detail}",
                c.id,
                c.title,
                elapsed.as_secs_f64(),
                c.limit.as_secs()
            ),
            Err(detail) => {
                failed += 1;
                println!(
                    "criterion {} FAIL  {:<24} {:>7.2}s / {:>3}s  {detail}",
                    c.id,
                    c.title,
                    elapsed.as_secs_f64(),
                    c.limit.as_secs()
                );
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
