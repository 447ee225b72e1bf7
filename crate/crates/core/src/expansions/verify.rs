//! Machine checks of the closed formulas and order bounds.

use std::time::Instant;

use rayon::prelude::*;
use serde_json::{json, Map, Value};

use super::bounds::{bound, Params, TheoremId};
use super::{congruence_violations, homogeneity_violations, Expansions};
use crate::coeffring::RingSpec;
use crate::domain::CoefficientDomain;
use crate::error::{Error, Result};
use crate::ratfunc::PolyT;
use crate::specialize::SpecializedRing;
use crate::tseries::{Order, TruncatedSeries};

/// Default precision budget of `verify all`: checks whose bound exceeds it
/// are skipped.
pub const DEFAULT_BUDGET: u64 = 500;

#[derive(Clone, Debug, PartialEq)]
pub struct VerificationReport {
    pub theorem: TheoremId,
    pub q: u64,
    pub r: u32,
    pub params: Params,
    /// The bound (or exact order) the statement claims.
    pub n: u64,
    pub residual_order: Order,
    pub pass: bool,
    /// Extra observations, e.g. the first deviation of a sharpness check.
    pub notes: Vec<String>,
    pub ms: u128,
}

fn param_names(t: TheoremId) -> &'static [&'static str] {
    match t {
        TheoremId::Eisenstein | TheoremId::EisensteinCount | TheoremId::G | TheoremId::GCount => &["k"],
        TheoremId::Tate => &["i"],
        TheoremId::Theta | TheoremId::Sigma => &["j", "d"],
        _ => &[],
    }
}

impl VerificationReport {
    fn param_values(&self) -> Vec<(&'static str, u64)> {
        let mut v = vec![("q", self.q), ("r", self.r as u64)];
        for name in param_names(self.theorem) {
            let x = match *name {
                "k" | "i" => self.params.k,
                "j" => self.params.j,
                _ => self.params.d,
            };
            v.push((name, x as u64));
        }
        v
    }

    /// JSON object; the wall time is included only on request so that the
    /// default output is reproducible.
    pub fn to_json(&self, with_ms: bool) -> Value {
        let mut params = Map::new();
        for (k, v) in self.param_values() {
            params.insert(k.to_string(), json!(v));
        }
        let residual = match self.residual_order {
            Order::Finite(n) => json!(n),
            Order::AtLeast(n) => json!(format!(">={n}")),
        };
        let mut obj = Map::new();
        obj.insert("theorem".into(), json!(self.theorem.name()));
        obj.insert("params".into(), Value::Object(params));
        obj.insert("N".into(), json!(self.n));
        obj.insert("residual_order".into(), residual);
        obj.insert("pass".into(), json!(self.pass));
        if !self.notes.is_empty() {
            obj.insert("notes".into(), json!(self.notes));
        }
        if with_ms {
            obj.insert("ms".into(), json!(self.ms as u64));
        }
        Value::Object(obj)
    }

    /// One line: status, theorem, parameters, bound and residual order.
    pub fn to_text(&self) -> String {
        let params: Vec<String> = self.param_values().iter().map(|(k, v)| format!("{k}={v}")).collect();
        let mut line = format!(
            "{} {} {} N={} residual_order={}",
            if self.pass { "PASS" } else { "FAIL" },
            self.theorem,
            params.join(" "),
            self.n,
            self.residual_order
        );
        for n in &self.notes {
            line.push_str(&format!(" [{n}]"));
        }
        line
    }
}

/// Both sides of a verified identity and the modulus of the comparison.
pub struct Identity<D: CoefficientDomain> {
    pub lhs: TruncatedSeries<D>,
    pub rhs: TruncatedSeries<D>,
    pub modulus: u64,
}

/// Working precision used for `theorem`: the bound itself, slightly more
/// for the exact-order statements so the order is observable, and `2N` for
/// the search for the first deviation of `h`.
pub fn working_precision(theorem: TheoremId, n: u64) -> u64 {
    match theorem {
        TheoremId::Pi1 | TheoremId::Pi2 => n + 2,
        TheoremId::H => 2 * n,
        _ => n,
    }
}

/// Computes the two sides compared by `theorem`.
pub fn identity_sides<D: CoefficientDomain>(ex: &Expansions<D>, theorem: TheoremId, p: Params) -> Result<Identity<D>> {
    let dom = ex.domain();
    let q = dom.q();
    let r = dom.rank();
    let n = bound(theorem, q, r, p)?;
    let m = working_precision(theorem, n);
    let (lhs, rhs) = match theorem {
        TheoremId::Eisenstein | TheoremId::EisensteinCount => {
            (ex.eisenstein_a_expansion(p.k, m)?.series, ex.eisenstein_closed(p.k, m)?.series)
        }
        TheoremId::Theta => (ex.theta(p.j, p.d, m)?, TruncatedSeries::zero(dom, m)),
        TheoremId::Sigma => {
            let lhs = ex.sigma(p.j, p.d, m)?;
            let rhs = if q == 2 && p.d == 1 {
                let e1 = 2u64.pow(r - 1) - 1;
                let e2 = 2u64.pow(r + p.j - 1) - 2u64.pow(p.j);
                TruncatedSeries::new(dom, vec![(e1, dom.delta_pow(-1)), (e2, dom.delta_pow(-(2i64.pow(p.j))))], m)?
            } else {
                TruncatedSeries::zero(dom, m)
            };
            (lhs, rhs)
        }
        TheoremId::Tate => {
            let lead = TruncatedSeries::monomial(dom, dom.neg(&dom.one()), q.pow(p.k) - 1, m);
            (ex.tate_eisenstein(p.k, m)?, lead)
        }
        TheoremId::G | TheoremId::GCount => (ex.g_series(p.k, m)?.series, ex.g_closed(p.k, m)?.series),
        TheoremId::G1Eisenstein => {
            let b1 = dom.from_poly(&PolyT::bracket(1, dom.base_field())?);
            let e = ex.eisenstein_a_expansion(1, m)?.series.scale(&b1);
            (ex.g_series(1, m)?.series, e)
        }
        TheoremId::Pi1 => (ex.pi(1, m)?, ex.pi1_closed(m)?),
        TheoremId::Pi2 => (ex.pi(2, m)?, TruncatedSeries::one(dom, m)),
        TheoremId::H => (ex.h_normalized(m)?, ex.h_closed(m)?),
        TheoremId::Delta => (ex.g_series(r, m)?.series, ex.delta_product(m)?),
    };
    Ok(Identity { lhs, rhs, modulus: m })
}

/// Weight of both sides of `theorem`.
pub fn claimed_weight(theorem: TheoremId, q: u64, r: u32, p: Params) -> i64 {
    let w = |e: u32| q.pow(e) as i64 - 1;
    match theorem {
        TheoremId::Eisenstein | TheoremId::EisensteinCount | TheoremId::G | TheoremId::GCount | TheoremId::Tate => {
            w(p.k)
        }
        TheoremId::Theta => w(p.j),
        TheoremId::G1Eisenstein => w(1),
        TheoremId::Delta => w(r),
        TheoremId::Sigma | TheoremId::Pi1 | TheoremId::Pi2 | TheoremId::H => 0,
    }
}

fn check_params(theorem: TheoremId, r: u32, p: Params) -> Result<()> {
    let bad = |msg: &str| Err(Error::Config(msg.to_string()));
    match theorem {
        TheoremId::G | TheoremId::GCount if !(1..=r).contains(&p.k) => bad("g_k needs 1 <= k <= r"),
        TheoremId::Eisenstein | TheoremId::EisensteinCount | TheoremId::Tate if p.k < 1 => bad("k must be at least 1"),
        TheoremId::Theta | TheoremId::Sigma if p.j < 1 || p.d < 1 => bad("j and d must be at least 1"),
        _ => Ok(()),
    }
}

/// Runs one check symbolically.
pub fn verify(theorem: TheoremId, q: u64, r: u32, p: Params) -> Result<VerificationReport> {
    let start = Instant::now();
    let rg = RingSpec::for_q(q as u32, r)?;
    check_params(theorem, r, p)?;
    let ex = Expansions::new(&rg);
    let n = bound(theorem, q, r, p)?;
    let id = identity_sides(&ex, theorem, p)?;
    let diff = id.lhs.sub(&id.rhs)?;
    let mut notes = Vec::new();
    let (residual_order, mut pass) = match theorem {
        TheoremId::EisensteinCount | TheoremId::GCount => {
            let expected: Vec<u64> = id.rhs.support().into_iter().filter(|&e| e < n).collect();
            let got: Vec<u64> = id.lhs.support().into_iter().filter(|&e| e < n).collect();
            let want = match theorem {
                TheoremId::EisensteinCount => p.k as usize + 1,
                _ if p.k < r => 2 * p.k as usize,
                _ => 2 * r as usize - 1,
            };
            notes.push(format!("count={} expected={}", got.len(), want));
            let extra = id.lhs.truncate(n).terms().iter().find(|(e, _)| !expected.contains(e)).map(|(e, _)| *e);
            let ord = extra.map_or(Order::AtLeast(n), Order::Finite);
            (ord, got.len() == want && got == expected)
        }
        TheoremId::Pi1 => {
            let one = TruncatedSeries::one(&rg, id.modulus);
            let ord = id.lhs.sub(&one)?.order();
            let routes = diff.order().is_at_least(id.modulus);
            notes.push(format!("closed_route={}", if routes { "agrees" } else { "differs" }));
            (ord, ord == Order::Finite(n) && routes)
        }
        TheoremId::Pi2 => (diff.order(), diff.order() == Order::Finite(n)),
        TheoremId::H => {
            let ord = diff.order();
            notes.push(format!("first_deviation={ord}"));
            (ord, ord.is_at_least(n))
        }
        _ => (diff.order(), diff.order().is_at_least(n)),
    };
    let w = claimed_weight(theorem, q, r, p);
    for (side, f) in [("lhs", &id.lhs), ("rhs", &id.rhs)] {
        let bad = homogeneity_violations(&rg, f, w);
        if !bad.is_empty() {
            notes.push(format!("{side} not homogeneous of weight {w} at t^{}", bad[0]));
            pass = false;
        }
        let bad = congruence_violations(f, w);
        if !bad.is_empty() {
            notes.push(format!("{side} exponent {} not congruent to {w} mod q-1", bad[0]));
            pass = false;
        }
    }
    if diff.prec() < n {
        notes.push(format!("insufficient precision {}", diff.prec()));
        pass = false;
    }
    Ok(VerificationReport { theorem, q, r, params: p, n, residual_order, pass, notes, ms: start.elapsed().as_millis() })
}

/// Every `(theorem, params)` pair of the suite at `(q, r)` whose bound fits
/// in `budget`, in canonical order.
pub fn suite(q: u64, r: u32, budget: u64) -> Vec<(TheoremId, Params)> {
    let mut out = Vec::new();
    let fits = |t: TheoremId, p: Params| bound(t, q, r, p).is_ok_and(|n| n <= budget);
    for t in TheoremId::ALL {
        let candidates: Vec<Params> = match t {
            TheoremId::Eisenstein | TheoremId::EisensteinCount | TheoremId::G | TheoremId::GCount | TheoremId::Tate => {
                (1..=r).map(|k| Params { k, ..Default::default() }).collect()
            }
            TheoremId::Theta | TheoremId::Sigma => {
                (1..=2).flat_map(|d| (1..=2).map(move |j| Params { j, d, k: 0 })).collect()
            }
            _ => vec![Params::default()],
        };
        out.extend(candidates.into_iter().filter(|&p| fits(t, p)).map(|p| (t, p)));
    }
    out
}

/// Runs the whole suite; reports come back in [`suite`] order whatever the
/// thread count.
pub fn verify_all(q: u64, r: u32, budget: u64) -> Result<Vec<VerificationReport>> {
    RingSpec::for_q(q as u32, r)?;
    suite(q, r, budget).into_par_iter().map(|(t, p)| verify(t, q, r, p)).collect()
}

/// Recomputes both sides of `theorem` at `points` random specialization
/// points and compares them with the images of the symbolic sides.
/// Returns the number of points checked.
pub fn specialization_check(theorem: TheoremId, q: u64, r: u32, p: Params, points: usize, seed: u64) -> Result<usize> {
    let rg = RingSpec::for_q(q as u32, r)?;
    check_params(theorem, r, p)?;
    let sym = identity_sides(&Expansions::new(&rg), theorem, p)?;
    let f = rg.field();
    let m = crate::specialize::default_extension_degree(f.q());
    let avoid: Vec<PolyT> = (1..m.min(r + 3)).map(|k| PolyT::bracket(k, f)).collect::<Result<_>>()?;
    let pts = SpecializedRing::sample(&rg, points, seed, &avoid)?;
    pts.par_iter()
        .map(|pt| {
            let num = identity_sides(&Expansions::new(pt), theorem, p)?;
            for (s, v) in [(&sym.lhs, &num.lhs), (&sym.rhs, &num.rhs)] {
                let image = s.map_domain(pt, |c| pt.specialize(c))?;
                let m = image.prec().min(v.prec());
                if !image.eq_mod(v, m)? {
                    return Err(Error::Domain(format!("{theorem}: specialization mismatch at {pt:?}")));
                }
            }
            Ok(())
        })
        .collect::<Result<Vec<()>>>()?;
    Ok(points)
}
