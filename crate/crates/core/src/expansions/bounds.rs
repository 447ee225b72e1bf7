//! Error bounds `N` of the verified statements, one table keyed by theorem.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Every statement the verifier knows about.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum TheoremId {
    /// A-expansion of `E_{q^k-1}` against its closed form.
    Eisenstein,
    /// Exactly `k+1` nonzero coefficients of `E_{q^k-1}` below `N`.
    EisensteinCount,
    /// Lower bound for `o(Θ(j,d))`.
    Theta,
    /// Lower bound for `o(Σ(j,d))`, or the two-term display when `q = 2, d = 1`.
    Sigma,
    /// `E_{q^i-1}(L) = -t^{q^i-1} + o(t^N)`.
    Tate,
    /// Recursion for `g_k` against the closed form.
    G,
    /// Exactly `2k` (resp. `2r-1`) nonzero coefficients of `g_k` below `N`.
    GCount,
    /// `g_1 = g'_1 + [1] E_{q-1}` with the A-expansion of `E_{q-1}`.
    G1Eisenstein,
    /// `o(Π(1) - 1) = (q-1)(q^{r-1}-1)` and the closed product formula.
    Pi1,
    /// `o(Π(2) - 1) = (q-1)(q^{2r-1}-q^r)`.
    Pi2,
    /// `H ≡ Π(1)^{-1}`.
    H,
    /// `g_r = -Δ'^q t^{q-1} H^{q-1}`.
    Delta,
}

impl TheoremId {
    pub const ALL: [TheoremId; 12] = [
        TheoremId::Eisenstein,
        TheoremId::EisensteinCount,
        TheoremId::Theta,
        TheoremId::Sigma,
        TheoremId::Tate,
        TheoremId::G,
        TheoremId::GCount,
        TheoremId::G1Eisenstein,
        TheoremId::Pi1,
        TheoremId::Pi2,
        TheoremId::H,
        TheoremId::Delta,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TheoremId::Eisenstein => "eisenstein",
            TheoremId::EisensteinCount => "eisenstein_count",
            TheoremId::Theta => "theta",
            TheoremId::Sigma => "sigma",
            TheoremId::Tate => "tate",
            TheoremId::G => "g",
            TheoremId::GCount => "g_count",
            TheoremId::G1Eisenstein => "g1_eisenstein",
            TheoremId::Pi1 => "pi1",
            TheoremId::Pi2 => "pi2",
            TheoremId::H => "h",
            TheoremId::Delta => "delta",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let alias = match s {
            "g_closed" | "g_series" => "g",
            "pi1_order" => "pi1",
            "pi2_order" => "pi2",
            "h_closed" => "h",
            other => other,
        };
        TheoremId::ALL
            .into_iter()
            .find(|t| t.name() == alias)
            .ok_or_else(|| Error::Config(format!("unknown theorem '{s}'")))
    }
}

/// Parameters beyond `(q, r)`; unused ones stay zero.
#[derive(Clone, Copy, Default, PartialEq, Eq, Debug)]
pub struct Params {
    pub k: u32,
    pub j: u32,
    pub d: u32,
}

fn pw(q: u64, e: u32) -> u64 {
    q.pow(e)
}

fn need(cond: bool, what: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Config(what.to_string()))
    }
}

/// The exponent `N` for `theorem` at `(q, r)`.
///
/// For [`TheoremId::Pi1`] and [`TheoremId::Pi2`] this is the exact order
/// claimed; for [`TheoremId::H`] it is the modulus of the normalized
/// comparison; for [`TheoremId::Sigma`] with `(q, d) = (2, 1)` it is the
/// precision of the two-term display.
pub fn bound(theorem: TheoremId, q: u64, r: u32, p: Params) -> Result<u64> {
    need(r >= 3, "rank must be at least 3")?;
    let s = r - 1;
    let top = s.saturating_mul(p.d.max(1)).saturating_add(p.j).saturating_add(p.k).saturating_add(r);
    need(q.checked_pow(top).is_some_and(|v| v < 1 << 50), "parameters too large")?;
    Ok(match theorem {
        TheoremId::Eisenstein | TheoremId::EisensteinCount => {
            need(p.k >= 1, "k must be at least 1")?;
            if q == 2 {
                pw(2, p.k - 1) * (pw(2, r) - 1)
            } else {
                3 * (q - 1) * pw(q, p.k + r - 2)
            }
        }
        TheoremId::Theta => {
            need(p.j >= 1 && p.d >= 1, "j and d must be at least 1")?;
            if q == 2 && p.d == 1 {
                pw(2, r + p.j - 1) - 1
            } else {
                let e = s * p.d;
                3 * pw(q, e + p.j) - 2 * pw(q, e + p.j - 1) - pw(q, e)
            }
        }
        TheoremId::Sigma => {
            need(p.j >= 1 && p.d >= 1, "j and d must be at least 1")?;
            if q == 2 && p.d == 1 {
                pw(2, r + p.j - 1)
            } else {
                let e = s * p.d;
                2 * (pw(q, e + p.j) - pw(q, e + p.j - 1))
            }
        }
        TheoremId::Tate => {
            need(p.k >= 1, "i (given as k) must be at least 1")?;
            let i = p.k;
            if q == 2 {
                pw(2, r + i) - pw(2, r - 1) - 1
            } else {
                3 * pw(q, r + i - 1) - (2 * pw(q, i - 1) + 1) * pw(q, r - 1)
            }
        }
        TheoremId::G | TheoremId::GCount | TheoremId::G1Eisenstein | TheoremId::Delta => {
            if q == 2 {
                3 * pw(2, r - 1) - 1
            } else {
                3 * (q - 1) * pw(q, r - 1)
            }
        }
        TheoremId::Pi1 => (q - 1) * (pw(q, s) - 1),
        TheoremId::Pi2 | TheoremId::H => (q - 1) * (pw(q, 2 * r - 1) - pw(q, r)),
    })
}

/// Crude bound `q^r - q^{r-2}` for non-special Eisenstein series; recorded
/// for reference only, nothing is verified against it.
pub fn nonspecial_eisenstein_bound(q: u64, r: u32) -> u64 {
    pw(q, r) - pw(q, r - 2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(k: u32, j: u32, d: u32) -> Params {
        Params { k, j, d }
    }

    #[test]
    fn instantiated_bounds() {
        let b = |t, q, r, pr| bound(t, q, r, pr).unwrap();
        assert_eq!(b(TheoremId::Eisenstein, 3, 3, p(1, 0, 0)), 54);
        assert_eq!(b(TheoremId::Eisenstein, 3, 3, p(2, 0, 0)), 162);
        assert_eq!(b(TheoremId::Eisenstein, 5, 3, p(1, 0, 0)), 300);
        assert_eq!(b(TheoremId::Eisenstein, 3, 4, p(1, 0, 0)), 162);
        assert_eq!(b(TheoremId::Eisenstein, 2, 3, p(1, 0, 0)), 7);
        assert_eq!(b(TheoremId::Eisenstein, 2, 3, p(2, 0, 0)), 14);
        assert_eq!(b(TheoremId::Theta, 3, 3, p(0, 1, 1)), 54);
        assert_eq!(b(TheoremId::Theta, 2, 3, p(0, 1, 1)), 7);
        assert_eq!(b(TheoremId::Sigma, 3, 3, p(0, 1, 1)), 36);
        assert_eq!(b(TheoremId::Sigma, 2, 3, p(0, 2, 1)), 16);
        assert_eq!(b(TheoremId::Tate, 3, 3, p(1, 0, 0)), 54);
        assert_eq!(b(TheoremId::Tate, 2, 3, p(1, 0, 0)), 11);
        assert_eq!(b(TheoremId::G, 3, 3, p(0, 0, 0)), 54);
        assert_eq!(b(TheoremId::G, 2, 3, p(0, 0, 0)), 11);
        assert_eq!(b(TheoremId::G, 3, 4, p(0, 0, 0)), 162);
        assert_eq!(b(TheoremId::Pi1, 3, 3, p(0, 0, 0)), 16);
        assert_eq!(b(TheoremId::Pi1, 2, 3, p(0, 0, 0)), 3);
        assert_eq!(b(TheoremId::Pi2, 3, 3, p(0, 0, 0)), 432);
        assert_eq!(b(TheoremId::Pi2, 2, 3, p(0, 0, 0)), 24);
        assert_eq!(nonspecial_eisenstein_bound(3, 3), 24);
    }

    #[test]
    fn parsing_and_errors() {
        assert_eq!("g_closed".parse::<TheoremId>().unwrap(), TheoremId::G);
        assert_eq!("pi2_order".parse::<TheoremId>().unwrap(), TheoremId::Pi2);
        assert!("nope".parse::<TheoremId>().is_err());
        assert!(bound(TheoremId::Eisenstein, 3, 3, p(0, 0, 0)).is_err());
        assert!(bound(TheoremId::G, 3, 2, p(0, 0, 0)).is_err());
        for t in TheoremId::ALL {
            assert_eq!(t.name().parse::<TheoremId>().unwrap(), t);
        }
    }
}
