//! Numeric images of the coefficient ring: `T`, `g'_1, …, g'_{s-1}` and `Δ'`
//! are sent to values in an extension `F_{q^m}`.
//!
//! [`SpecializedRing`] implements [`CoefficientDomain`], so every series
//! computation can be replayed at a point and compared against the image of
//! the symbolic result.

use std::fmt;
use std::sync::Arc;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::coeffring::{CoefficientElement, RingSpec};
use crate::domain::CoefficientDomain;
use crate::error::{Error, Result};
use crate::gfq::{FieldElement, FieldSpec, MAX_EXT_Q};
use crate::ratfunc::{PolyT, RationalFunction};

/// A point `(T, g'_1, …, g'_{s-1}, Δ')` in `F_{q^m}` together with the
/// arithmetic of that field.
#[derive(Clone)]
pub struct SpecializedRing {
    base: Arc<FieldSpec>,
    big: Arc<FieldSpec>,
    embed: Arc<Vec<FieldElement>>,
    r: u32,
    t: FieldElement,
    g: Vec<FieldElement>,
    delta: FieldElement,
    delta_inv: FieldElement,
}

impl fmt::Debug for SpecializedRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SpecializedRing(F_{}, T={:?}, g={:?}, delta={:?})", self.big.q(), self.t, self.g, self.delta)
    }
}

/// Largest `m` with `q^m ≤ 2^16`.
pub fn default_extension_degree(q: u32) -> u32 {
    let mut m = 1;
    while (q as u64).pow(m + 1) <= MAX_EXT_Q as u64 {
        m += 1;
    }
    m
}

impl SpecializedRing {
    /// Builds the point with explicit values in `big`.
    pub fn new(
        ring: &RingSpec,
        big: Arc<FieldSpec>,
        t: FieldElement,
        g: Vec<FieldElement>,
        delta: FieldElement,
    ) -> Result<Self> {
        let base = ring.field().clone();
        let embed = Arc::new(base.embedding_into(&big)?);
        if g.len() != ring.num_g() {
            return Err(Error::SpecMismatch);
        }
        let delta_inv = big.inv(delta).map_err(|_| Error::BadSpecialization)?;
        Ok(SpecializedRing { base, big, embed, r: ring.r(), t, g, delta, delta_inv })
    }

    /// Uniform random point in `F_{q^m}` with `Δ' ≠ 0`.
    pub fn random<R: Rng>(ring: &RingSpec, big: &Arc<FieldSpec>, rng: &mut R) -> Result<Self> {
        let n = big.q();
        let mut pick = || big.element(rng.gen_range(0..n)).expect("in range");
        let t = pick();
        let g = (0..ring.num_g()).map(|_| pick()).collect();
        let delta = loop {
            let d = pick();
            if !d.is_zero() {
                break d;
            }
        };
        Self::new(ring, big.clone(), t, g, delta)
    }

    /// `count` reproducible random points from a ChaCha stream seeded by
    /// `seed`, each avoiding the zeros of the supplied denominators.
    pub fn sample(ring: &RingSpec, count: usize, seed: u64, avoid: &[PolyT]) -> Result<Vec<Self>> {
        let f = ring.field();
        let big = FieldSpec::large(f.p(), f.e() * default_extension_degree(f.q()))?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut out = Vec::with_capacity(count);
        let mut tries = 0;
        while out.len() < count {
            tries += 1;
            if tries > 100 * count + 100 {
                return Err(Error::BadSpecialization);
            }
            let pt = Self::random(ring, &big, &mut rng)?;
            if avoid.iter().all(|p| !p.eval_embedded(pt.t, &big, &pt.embed).is_zero()) {
                out.push(pt);
            }
        }
        Ok(out)
    }

    pub fn field(&self) -> &Arc<FieldSpec> {
        &self.big
    }

    pub fn t_value(&self) -> FieldElement {
        self.t
    }

    /// Image of a polynomial in `T`.
    pub fn eval_poly(&self, p: &PolyT) -> FieldElement {
        p.eval_embedded(self.t, &self.big, &self.embed)
    }

    /// Image of a symbolic coefficient.
    pub fn specialize(&self, x: &CoefficientElement) -> Result<FieldElement> {
        let b = &*self.big;
        let mut acc = FieldElement::ZERO;
        for (m, c) in x.terms() {
            let mut v = c.eval_embedded(self.t, b, &self.embed)?;
            for (gi, &a) in self.g.iter().zip(m.gexp()) {
                v = b.mul(v, b.pow(*gi, a as u64));
            }
            let d = m.dexp();
            let base = if d >= 0 { self.delta } else { self.delta_inv };
            v = b.mul(v, b.pow(base, d.unsigned_abs()));
            acc = b.add(acc, v);
        }
        Ok(acc)
    }
}

impl CoefficientDomain for SpecializedRing {
    type Elem = FieldElement;

    fn base_field(&self) -> &FieldSpec {
        &self.base
    }

    fn rank(&self) -> u32 {
        self.r
    }

    fn same_domain(&self, other: &Self) -> bool {
        *self.big == *other.big
            && self.r == other.r
            && self.t == other.t
            && self.g == other.g
            && self.delta == other.delta
    }

    fn zero(&self) -> FieldElement {
        FieldElement::ZERO
    }

    fn one(&self) -> FieldElement {
        FieldElement::ONE
    }

    fn is_zero(&self, x: &FieldElement) -> bool {
        x.is_zero()
    }

    fn add(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        self.big.add(*a, *b)
    }

    fn neg(&self, a: &FieldElement) -> FieldElement {
        self.big.neg(*a)
    }

    fn mul(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        self.big.mul(*a, *b)
    }

    fn frobenius_pow(&self, x: &FieldElement, j: u32) -> FieldElement {
        self.big.pow_q_power(*x, self.base.q() as u64, j)
    }

    fn invert_unit(&self, x: &FieldElement) -> Result<FieldElement> {
        self.big.inv(*x).map_err(|_| Error::NotInvertible)
    }

    fn from_base(&self, c: FieldElement) -> FieldElement {
        self.embed[c.value() as usize]
    }

    fn from_poly(&self, p: &PolyT) -> FieldElement {
        self.eval_poly(p)
    }

    fn from_ratfunc(&self, f: &RationalFunction) -> Result<FieldElement> {
        f.eval_embedded(self.t, &self.big, &self.embed)
    }

    fn generator(&self, i: u32) -> FieldElement {
        let s = self.r - 1;
        match i {
            0 => self.t,
            i if i == s => self.delta,
            i if i > s => FieldElement::ZERO,
            i => self.g[(i - 1) as usize],
        }
    }

    fn delta_pow(&self, e: i64) -> FieldElement {
        let base = if e >= 0 { self.delta } else { self.delta_inv };
        self.big.pow(base, e.unsigned_abs())
    }
}
