//! Canonical text and JSON forms of symbolic series.
//!
//! Text uses `Δ'`, `g'_i`, polynomials in `T` with descending powers and
//! ascending `t`-powers, e.g.
//! `g_2 = Δ' − g'_1^3·t^2 + g'_1·t^6 − (T^3−T)·t^8 + O(t^54)`.
//! Prime-field scalars print as symmetric integers; other scalars print as
//! their integer code in angle brackets.

use serde_json::{json, Value};

use crate::coeffring::{CoefficientElement, Monomial, RingSpec};
use crate::gfq::{FieldElement, FieldSpec};
use crate::ratfunc::{PolyT, RationalFunction};
use crate::tseries::TruncatedSeries;

const MINUS: char = '\u{2212}';

fn scalar_text(f: &FieldSpec, c: FieldElement) -> (bool, String) {
    match f.signed_prime(c) {
        Some(v) => (v < 0, v.unsigned_abs().to_string()),
        None => (false, format!("⟨{}⟩", c.value())),
    }
}

/// Polynomial in `T`, highest power first, without surrounding parentheses.
pub fn poly_text(f: &FieldSpec, p: &PolyT) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, &c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let (neg, mag) = scalar_text(f, c);
        if out.is_empty() {
            if neg {
                out.push(MINUS);
            }
        } else {
            out.push(if neg { MINUS } else { '+' });
        }
        let power = match i {
            0 => String::new(),
            1 => "T".into(),
            _ => format!("T^{i}"),
        };
        if mag != "1" || i == 0 {
            out.push_str(&mag);
        }
        out.push_str(&power);
    }
    out
}

fn is_single_term(p: &PolyT) -> bool {
    p.coeffs().iter().filter(|c| !c.is_zero()).count() == 1
}

fn rational_text(f: &FieldSpec, x: &RationalFunction) -> String {
    let num = poly_text(f, x.num());
    if x.den().is_one() {
        return num;
    }
    let wrap = |p: &PolyT, s: String| if is_single_term(p) { s } else { format!("({s})") };
    format!("{}/{}", wrap(x.num(), num), wrap(x.den(), poly_text(f, x.den())))
}

pub fn monomial_text(m: &Monomial) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.gexp().iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(format!("g'_{}", i + 1)),
            _ => parts.push(format!("g'_{}^{e}", i + 1)),
        }
    }
    match m.dexp() {
        0 => {}
        1 => parts.push("Δ'".into()),
        d if d < 0 => parts.push(format!("Δ'^({MINUS}{})", -d)),
        d => parts.push(format!("Δ'^{d}")),
    }
    parts.join("·")
}

/// One term `x·m` of a coefficient with its sign split off. `x` is flipped
/// to a leading coefficient that is positive when that is possible.
fn term_text(f: &FieldSpec, m: &Monomial, x: &RationalFunction) -> (bool, String) {
    let lead = x.num().lead();
    let neg = f.signed_prime(lead).is_some_and(|v| v < 0);
    let x = if neg { x.neg(f) } else { x.clone() };
    let mono = monomial_text(m);
    let rat = rational_text(f, &x);
    let body = if mono.is_empty() {
        rat
    } else if x.is_one() {
        mono
    } else if x.den().is_one() && is_single_term(x.num()) {
        format!("{rat}·{mono}")
    } else {
        format!("({rat})·{mono}")
    };
    (neg, body)
}

/// Coefficient as `(negative, body)`; `body` is parenthesized when it has
/// several terms or is a bare polynomial with several terms.
pub fn element_text(f: &FieldSpec, c: &CoefficientElement) -> (bool, String) {
    let terms = c.terms();
    if terms.len() == 1 {
        let (m, x) = &terms[0];
        let (neg, body) = term_text(f, m, x);
        let bare_sum = m.is_one() && x.den().is_one() && !is_single_term(x.num());
        return (neg, if bare_sum { format!("({body})") } else { body });
    }
    let mut out = String::new();
    for (i, (m, x)) in terms.iter().enumerate() {
        let (neg, body) = term_text(f, m, x);
        match (i, neg) {
            (0, true) => out.push(MINUS),
            (0, false) => {}
            (_, true) => out.push_str(&format!(" {MINUS} ")),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(&body);
    }
    (false, format!("({out})"))
}

/// `label = a_0 + a_1·t + … + O(t^prec)`.
pub fn series_text(ring: &RingSpec, label: &str, s: &TruncatedSeries<RingSpec>) -> String {
    let f = ring.field();
    let mut out = format!("{label} =");
    for (i, (n, c)) in s.terms().iter().enumerate() {
        let (neg, body) = element_text(f, c);
        let sep = match (i, neg) {
            (0, true) => format!(" {MINUS}"),
            (0, false) => " ".into(),
            (_, true) => format!(" {MINUS} "),
            (_, false) => " + ".into(),
        };
        out.push_str(&sep);
        let tpow = match n {
            0 => String::new(),
            1 => "t".into(),
            _ => format!("t^{n}"),
        };
        match (body == "1", tpow.is_empty()) {
            (true, false) => out.push_str(&tpow),
            (_, true) => out.push_str(&body),
            (false, false) => out.push_str(&format!("{body}·{tpow}")),
        }
    }
    if s.terms().is_empty() {
        out.push_str(&format!(" O(t^{})", s.prec()));
    } else {
        out.push_str(&format!(" + O(t^{})", s.prec()));
    }
    out
}

pub fn element_json(c: &CoefficientElement) -> Value {
    Value::Array(
        c.terms()
            .iter()
            .map(|(m, x)| {
                json!({
                    "monomial": {"g": m.gexp(), "delta": m.dexp()},
                    "num": x.num().codes(),
                    "den": x.den().codes(),
                })
            })
            .collect(),
    )
}

/// `{"prec": M, "terms": [{"n": n, "coeff": [...]}]}` with ascending `n`.
pub fn series_json(s: &TruncatedSeries<RingSpec>) -> Value {
    let terms: Vec<Value> = s.terms().iter().map(|(n, c)| json!({"n": n, "coeff": element_json(c)})).collect();
    json!({"prec": s.prec(), "terms": terms})
}
