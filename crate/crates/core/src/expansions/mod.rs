//! t-expansions of the special Eisenstein series, the coefficient forms
//! `g_k` and the normalized `h`-product, together with the auxiliary sums
//! `Θ(j,d)`, `Σ(j,d)`, `Π(d)` and the Tate-lattice values `E_{q^i-1}(L)`.
//!
//! Everything is generic over [`CoefficientDomain`], so the same code runs
//! symbolically and at numeric specialization points.

pub mod bounds;
mod eisenstein;
mod gforms;
mod product;
mod sums;
pub mod verify;

use rayon::prelude::*;

use crate::coeffring::RingSpec;
use crate::domain::CoefficientDomain;
use crate::drinfeld::GenericModule;
use crate::error::Result;
use crate::ratfunc::PolyT;
use crate::tseries::TruncatedSeries;

pub use bounds::{bound, nonspecial_eisenstein_bound, Params, TheoremId};
pub use verify::{verify, verify_all, VerificationReport};

/// A computed expansion with the weight the form is claimed to have.
#[derive(Clone, Debug)]
pub struct ExpansionResult<D: CoefficientDomain> {
    pub series: TruncatedSeries<D>,
    pub claimed_weight: i64,
    pub label: String,
}

/// Entry point for all expansions over one coefficient domain.
pub struct Expansions<D: CoefficientDomain> {
    module: GenericModule<D>,
}

impl<D: CoefficientDomain> Expansions<D> {
    pub fn new(dom: &D) -> Self {
        Expansions { module: GenericModule::new(dom) }
    }

    pub fn module(&self) -> &GenericModule<D> {
        &self.module
    }

    pub fn domain(&self) -> &D {
        self.module.domain()
    }

    fn q(&self) -> u64 {
        self.domain().q()
    }

    fn s(&self) -> u32 {
        self.domain().s()
    }

    /// Applies `f` to every monic polynomial of degree `d`, in parallel,
    /// keeping the enumeration order.
    fn map_monic<T, F>(&self, d: u32, f: F) -> Result<Vec<T>>
    where
        T: Send,
        F: Fn(&PolyT) -> Result<T> + Sync + Send,
    {
        self.module.monic(d).par_iter().map(f).collect()
    }

    /// `f^{q^j}` modulo `t^m`, reading only the part of `f` that matters.
    fn frob_to(&self, f: &TruncatedSeries<D>, j: u32, m: u64) -> TruncatedSeries<D> {
        let step = self.q().pow(j);
        f.truncate(m.div_ceil(step)).frobenius(j).truncate(m)
    }

    fn constant(&self, c: D::Elem, prec: u64) -> TruncatedSeries<D> {
        TruncatedSeries::monomial(self.domain(), c, 0, prec)
    }
}

/// Exponents `n` whose coefficient is not homogeneous of weight `w - n`.
pub fn homogeneity_violations(ring: &RingSpec, f: &TruncatedSeries<RingSpec>, w: i64) -> Vec<u64> {
    f.terms().iter().filter(|(n, c)| !ring.is_homogeneous(c, w - *n as i64)).map(|(n, _)| *n).collect()
}

/// Exponents not congruent to `w` modulo `q - 1`.
pub fn congruence_violations<D: CoefficientDomain>(f: &TruncatedSeries<D>, w: i64) -> Vec<u64> {
    let m = f.domain().q() as i64 - 1;
    f.terms().iter().filter(|(n, _)| m > 1 && (*n as i64 - w).rem_euclid(m) != 0).map(|(n, _)| *n).collect()
}
