//! Acceptance criteria 1 to 11, one test each.
//!
//! Every comparison is exact: the arithmetic is symbolic, so the only
//! tolerances are the pinned orders below and the wall-clock limits.
//! Each test prints one `criterion N: PASS|FAIL ...` line; run with
//! `cargo test -p drinfeld-cli --test acceptance -- --nocapture` to see them.

use std::process::Command;
use std::time::{Duration, Instant};

use drinfeld_core::expansions::bounds::{Params, TheoremId};
use drinfeld_core::expansions::verify::{specialization_check, suite, verify, VerificationReport, DEFAULT_BUDGET};
use drinfeld_core::expansions::{congruence_violations, homogeneity_violations};
use drinfeld_core::skewring::skew_convolution;
use drinfeld_core::{
    CoefficientDomain, CoefficientElement, Expansions, FieldSpec, GenericModule, Monomial, Order, PolyT,
    RationalFunction, RingSpec, SkewPolynomial, TruncatedSeries,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Seed of every randomized check in this file.
const SEED: u64 = 0x5eed_0d1f;
/// Random specialization points per verified identity.
const SPECIALIZATION_POINTS: usize = 20;
/// Random triples for skew-ring associativity.
const SKEW_TRIPLES: usize = 100;
/// Depth of the exp/log inverse check.
const EXP_LOG_K_MAX: usize = 6;

fn k(k: u32) -> Params {
    Params { k, ..Default::default() }
}

fn jd(j: u32, d: u32) -> Params {
    Params { k: 0, j, d }
}

fn report(criterion: u32, ok: bool, detail: &str) {
    println!("criterion {criterion}: {} {detail}", if ok { "PASS" } else { "FAIL" });
}

/// Runs the checks, prints the criterion line and asserts pass and budget.
fn run_reports(criterion: u32, checks: &[(TheoremId, u64, u32, Params)], limit: Duration) -> Vec<VerificationReport> {
    let start = Instant::now();
    let reports: Vec<VerificationReport> = checks.iter().map(|&(t, q, r, p)| verify(t, q, r, p).unwrap()).collect();
    let elapsed = start.elapsed();
    let ok = reports.iter().all(|r| r.pass) && elapsed < limit;
    let detail: Vec<String> = reports.iter().map(|r| r.to_text()).collect();
    report(criterion, ok, &format!("({} ms) {}", elapsed.as_millis(), detail.join("; ")));
    assert!(elapsed < limit, "criterion {criterion}: {elapsed:?} exceeds {limit:?}");
    for r in &reports {
        assert!(r.pass, "criterion {criterion}: {}", r.to_text());
    }
    reports
}

#[test]
fn criterion_01_eisenstein_theorem() {
    let checks = [(3, 3, 1, 54), (3, 3, 2, 162), (5, 3, 1, 300), (3, 4, 1, 162)];
    let list: Vec<_> = checks.iter().map(|&(q, r, kk, _)| (TheoremId::Eisenstein, q, r, k(kk))).collect();
    let start = Instant::now();
    let reports: Vec<_> = list.iter().map(|&(t, q, r, p)| verify(t, q, r, p).unwrap()).collect();
    for (rep, &(.., n)) in reports.iter().zip(&checks) {
        assert_eq!(rep.n, n);
    }
    let limit = Duration::from_secs(60 * checks.len() as u64);
    let ok = reports.iter().all(|r| r.pass) && start.elapsed() < limit;
    let detail: Vec<String> = reports.iter().map(|r| r.to_text()).collect();
    report(1, ok, &format!("({} ms) {}", start.elapsed().as_millis(), detail.join("; ")));
    for r in &reports {
        assert!(r.pass, "criterion 1: {}", r.to_text());
    }
}

#[test]
fn criterion_02_eisenstein_q2() {
    let reports = run_reports(
        2,
        &[(TheoremId::Eisenstein, 2, 3, k(1)), (TheoremId::Eisenstein, 2, 3, k(2))],
        Duration::from_secs(5),
    );
    assert_eq!(reports.iter().map(|r| r.n).collect::<Vec<_>>(), vec![7, 14]);
}

#[test]
fn criterion_03_g_theorem() {
    let mut checks = Vec::new();
    for (q, r, n) in [(3, 3, 54), (2, 3, 11), (3, 4, 162)] {
        for kk in 1..=r {
            checks.push((TheoremId::G, q, r, k(kk), n));
        }
    }
    let start = Instant::now();
    let reports: Vec<_> = checks.iter().map(|&(t, q, r, p, _)| verify(t, q, r, p).unwrap()).collect();
    let elapsed = start.elapsed();
    for (rep, c) in reports.iter().zip(&checks) {
        assert_eq!(rep.n, c.4);
    }
    let ok = reports.iter().all(|r| r.pass) && elapsed < Duration::from_secs(360);
    let detail: Vec<String> = reports.iter().map(|r| r.to_text()).collect();
    report(3, ok, &format!("({} ms) {}", elapsed.as_millis(), detail.join("; ")));
    for r in &reports {
        assert!(r.pass, "criterion 3: {}", r.to_text());
    }
}

#[test]
fn criterion_04_nonvanishing_counts() {
    let mut checks = Vec::new();
    for (q, r) in [(3, 3), (2, 3), (3, 4)] {
        for kk in 1..=r {
            checks.push((TheoremId::GCount, q, r, k(kk)));
        }
    }
    for (q, r, kk) in [(3, 3, 1), (3, 3, 2), (5, 3, 1), (3, 4, 1), (2, 3, 1), (2, 3, 2)] {
        checks.push((TheoremId::EisensteinCount, q, r, k(kk)));
    }
    run_reports(4, &checks, Duration::from_secs(120));
}

#[test]
fn criterion_05_theta_sigma_bounds() {
    let reports = run_reports(
        5,
        &[(TheoremId::Theta, 3, 3, jd(1, 1)), (TheoremId::Sigma, 2, 3, jd(1, 1)), (TheoremId::Sigma, 2, 3, jd(2, 1))],
        Duration::from_secs(10),
    );
    assert_eq!(reports[0].n, 54);
}

#[test]
fn criterion_06_tate_eisenstein() {
    let reports =
        run_reports(6, &[(TheoremId::Tate, 3, 3, k(1)), (TheoremId::Tate, 2, 3, k(1))], Duration::from_secs(30));
    assert_eq!(reports.iter().map(|r| r.n).collect::<Vec<_>>(), vec![54, 11]);
}

#[test]
fn criterion_07_pi_orders() {
    // (q-1)(q^{r-1}-1) is 16 at (3,3) and 3 at (2,3).
    let expected = [(TheoremId::Pi1, 3, 16), (TheoremId::Pi1, 2, 3), (TheoremId::Pi2, 3, 432), (TheoremId::Pi2, 2, 24)];
    let checks: Vec<_> = expected.iter().map(|&(t, q, _)| (t, q, 3, Params::default())).collect();
    let reports = run_reports(7, &checks, Duration::from_secs(120));
    for (rep, &(.., n)) in reports.iter().zip(&expected) {
        assert_eq!(rep.residual_order, Order::Finite(n), "{}", rep.to_text());
    }
}

#[test]
fn criterion_08_h_theorem() {
    let reports = run_reports(
        8,
        &[(TheoremId::H, 2, 3, Params::default()), (TheoremId::H, 3, 3, Params::default())],
        Duration::from_secs(180),
    );
    assert_eq!(reports.iter().map(|r| r.n).collect::<Vec<_>>(), vec![24, 432]);
    for r in &reports {
        assert!(r.notes.iter().any(|n| n.starts_with("first_deviation=")));
    }
}

#[test]
fn criterion_09_delta_cross_route() {
    let reports = run_reports(
        9,
        &[(TheoremId::Delta, 3, 3, Params::default()), (TheoremId::Delta, 2, 3, Params::default())],
        Duration::from_secs(120),
    );
    assert_eq!(reports.iter().map(|r| r.n).collect::<Vec<_>>(), vec![54, 11]);
}

fn field_axioms_hold(f: &FieldSpec) -> bool {
    let els: Vec<_> = f.elements().collect();
    let (zero, one) = (els[0], els[1]);
    for &a in &els {
        if f.add(a, zero) != a || f.mul(a, one) != a || f.add(a, f.neg(a)) != zero {
            return false;
        }
        if !a.is_zero() && f.mul(a, f.inv(a).unwrap()) != one {
            return false;
        }
        for &b in &els {
            if f.add(a, b) != f.add(b, a) || f.mul(a, b) != f.mul(b, a) {
                return false;
            }
            for &c in &els {
                let assoc =
                    f.add(f.add(a, b), c) == f.add(a, f.add(b, c)) && f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c));
                let distrib = f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c));
                if !assoc || !distrib {
                    return false;
                }
            }
        }
    }
    f.inv(zero).is_err()
}

fn random_element(rg: &RingSpec, rng: &mut ChaCha8Rng) -> CoefficientElement {
    let f = rg.field();
    let mut acc = rg.zero();
    for _ in 0..rng.gen_range(1..=3) {
        let codes: Vec<u32> = (0..rng.gen_range(1..=3)).map(|_| rng.gen_range(0..f.q())).collect();
        let p = PolyT::from_codes(f, &codes).unwrap();
        let g: Vec<u32> = (0..rg.num_g()).map(|_| rng.gen_range(0..3)).collect();
        let m = Monomial::new(&g, rng.gen_range(-2..=2));
        acc = rg.add(&acc, &rg.term(m, RationalFunction::from(p)));
    }
    acc
}

fn emitted_expansions(q: u32, r: u32) -> Vec<(String, TruncatedSeries<RingSpec>, i64)> {
    let rg = RingSpec::for_q(q, r).unwrap();
    let ex = Expansions::new(&rg);
    let qq = q as i64;
    let prec = 60;
    let mut out = Vec::new();
    for kk in 1..=2 {
        let e = ex.eisenstein_a_expansion(kk, prec).unwrap();
        out.push((e.label, e.series, e.claimed_weight));
        let e = ex.eisenstein_closed(kk, prec).unwrap();
        out.push((e.label + " closed", e.series, e.claimed_weight));
    }
    for kk in 1..=r {
        let g = ex.g_series(kk, prec).unwrap();
        out.push((g.label, g.series, g.claimed_weight));
        let g = ex.g_closed(kk, prec).unwrap();
        out.push((g.label + " closed", g.series, g.claimed_weight));
        out.push((format!("E(L) {kk}"), ex.tate_eisenstein(kk, prec).unwrap(), qq.pow(kk) - 1));
    }
    for (j, d) in [(1, 1), (2, 1), (1, 2)] {
        out.push((format!("Θ({j},{d})"), ex.theta(j, d, prec).unwrap(), qq.pow(j) - 1));
        out.push((format!("Σ({j},{d})"), ex.sigma(j, d, prec).unwrap(), 0));
    }
    out.push(("Π(1)".into(), ex.pi(1, prec).unwrap(), 0));
    out.push(("Π(2)".into(), ex.pi(2, prec).unwrap(), 0));
    out.push(("H".into(), ex.h_normalized(prec).unwrap(), 0));
    out.push(("Π(1)^-1".into(), ex.h_closed(prec).unwrap(), 0));
    out.push(("Δ".into(), ex.delta_product(prec).unwrap(), qq.pow(r) - 1));
    out
}

#[test]
fn criterion_10_property_suites() {
    let start = Instant::now();
    let mut failures = Vec::new();

    for (p, e) in [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2)] {
        let f = FieldSpec::new(p, e).unwrap();
        if !field_axioms_hold(&f) {
            failures.push(format!("field axioms F_{}", f.q()));
        }
    }

    for (q, r) in [(2, 3), (3, 3)] {
        let rg = RingSpec::for_q(q, r).unwrap();
        let m = GenericModule::new(&rg);
        let a = m.generic_alphas(EXP_LOG_K_MAX).unwrap();
        let b = m.generic_betas(EXP_LOG_K_MAX).unwrap();
        let mut unit = vec![rg.zero(); EXP_LOG_K_MAX + 1];
        unit[0] = rg.one();
        if skew_convolution(&rg, &a, &b, EXP_LOG_K_MAX) != unit || skew_convolution(&rg, &b, &a, EXP_LOG_K_MAX) != unit
        {
            failures.push(format!("exp/log at q={q} r={r}"));
        }
    }

    let rg = RingSpec::for_q(3, 3).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for i in 0..SKEW_TRIPLES {
        let mut poly = || {
            let n = rng.gen_range(1..=3);
            SkewPolynomial::from_dense(&rg, (0..n).map(|_| random_element(&rg, &mut rng)).collect())
        };
        let (a, b, c) = (poly(), poly(), poly());
        let left = a.skew_mul(&b).unwrap().skew_mul(&c).unwrap();
        let right = a.skew_mul(&b.skew_mul(&c).unwrap()).unwrap();
        if left != right {
            failures.push(format!("skew associativity, triple {i}"));
        }
    }

    let mut series_checked = 0;
    for (q, r) in [(2, 3), (3, 3)] {
        let rg = RingSpec::for_q(q, r).unwrap();
        for (label, s, w) in emitted_expansions(q, r) {
            if !homogeneity_violations(&rg, &s, w).is_empty() || !congruence_violations(&s, w).is_empty() {
                failures.push(format!("weight check of {label} at q={q} r={r}"));
            }
            series_checked += 1;
        }
    }

    let mut identities = 0;
    for (q, r) in [(2, 3), (3, 3)] {
        for (t, p) in suite(q, r, DEFAULT_BUDGET) {
            match specialization_check(t, q, r, p, SPECIALIZATION_POINTS, SEED) {
                Ok(n) if n == SPECIALIZATION_POINTS => identities += 1,
                Ok(n) => failures.push(format!("{t} {p:?}: only {n} points")),
                Err(e) => failures.push(format!("{t} {p:?} at q={q} r={r}: {e}")),
            }
        }
    }

    let elapsed = start.elapsed();
    let ok = failures.is_empty() && elapsed < Duration::from_secs(60);
    report(
        10,
        ok,
        &format!(
            "({} ms) {series_checked} expansions weight-checked, {identities} identities specialized at {SPECIALIZATION_POINTS} points; failures: {failures:?}",
            elapsed.as_millis()
        ),
    );
    assert!(failures.is_empty(), "{failures:?}");
    assert!(elapsed < Duration::from_secs(60), "{elapsed:?}");
}

fn run_dmf(args: &[&str]) -> (Option<i32>, Vec<u8>) {
    let out = Command::new(env!("CARGO_BIN_EXE_dmf")).args(args).output().unwrap();
    (out.status.code(), out.stdout)
}

#[test]
fn criterion_11_determinism() {
    let base = ["verify", "all", "--q", "3", "--r", "3"];
    let mut ok = true;
    for format in ["text", "json"] {
        let one = run_dmf(&[&base[..], &["--format", format, "--threads", "1"]].concat());
        let eight = run_dmf(&[&base[..], &["--format", format, "--threads", "8"]].concat());
        ok &= one == eight && !one.1.is_empty();
    }
    report(11, ok, "verify all --q 3 --r 3 with --threads 1 and 8, text and json");
    assert!(ok);
}
