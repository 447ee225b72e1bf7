//! The coefficient ring `F_q(T)[g'_1, …, g'_{s-1}][Δ'^{±1}]`, `s = r - 1`.
//!
//! Elements are sparse sums `Σ c_m · m` over monomials
//! `m = g'_1^{a_1} ⋯ g'_{s-1}^{a_{s-1}} Δ'^b` with nonzero rational
//! coefficients `c_m ∈ F_q(T)`. Terms are kept sorted by `(b, a)` and zero
//! coefficients are never stored, so structural equality is equality.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use smallvec::SmallVec;

use crate::domain::CoefficientDomain;
use crate::error::{Error, Result};
use crate::gfq::{FieldElement, FieldSpec};
use crate::ratfunc::{PolyT, RationalFunction};

/// `g'_1^{g[0]} ⋯ g'_{s-1}^{g[s-2]} · Δ'^{delta}`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    pub(crate) delta: i64,
    pub(crate) g: SmallVec<[u32; 4]>,
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.delta.cmp(&other.delta).then_with(|| self.g.cmp(&other.g))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Monomial {
    pub fn one(s: u32) -> Self {
        Monomial { delta: 0, g: SmallVec::from_elem(0, (s - 1) as usize) }
    }

    pub fn new(g: &[u32], delta: i64) -> Self {
        Monomial { delta, g: SmallVec::from_slice(g) }
    }

    pub fn gexp(&self) -> &[u32] {
        &self.g
    }

    pub fn dexp(&self) -> i64 {
        self.delta
    }

    pub fn is_one(&self) -> bool {
        self.delta == 0 && self.g.iter().all(|&a| a == 0)
    }

    fn mul(&self, other: &Self) -> Self {
        Monomial { delta: self.delta + other.delta, g: self.g.iter().zip(&other.g).map(|(a, b)| a + b).collect() }
    }

    fn scale_exponents(&self, n: u64) -> Self {
        Monomial { delta: self.delta * n as i64, g: self.g.iter().map(|&a| (a as u64 * n) as u32).collect() }
    }
}

/// Element of the coefficient ring; see the module docs.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct CoefficientElement {
    terms: Vec<(Monomial, RationalFunction)>,
}

impl fmt::Debug for CoefficientElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries(self.terms.iter().map(|(m, c)| (m.g.as_slice(), m.delta, c.num().codes(), c.den().codes())))
            .finish()
    }
}

impl CoefficientElement {
    pub fn terms(&self) -> &[(Monomial, RationalFunction)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Whether every coefficient is a polynomial in `T`.
    pub fn is_polynomial_in_t(&self) -> bool {
        self.terms.iter().all(|(_, c)| c.is_polynomial())
    }
}

struct RingInner {
    field: Arc<FieldSpec>,
    r: u32,
}

/// Ring description: the constant field and the rank `r ≥ 3`.
#[derive(Clone)]
pub struct RingSpec(Arc<RingInner>);

impl fmt::Debug for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RingSpec(q={}, r={})", self.0.field.q(), self.0.r)
    }
}

impl PartialEq for RingSpec {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || (self.0.r == other.0.r && *self.0.field == *other.0.field)
    }
}
impl Eq for RingSpec {}

impl RingSpec {
    pub fn new(field: Arc<FieldSpec>, r: u32) -> Result<Self> {
        if r < 3 {
            return Err(Error::OutOfRange(format!("rank r = {r} must be at least 3")));
        }
        Ok(RingSpec(Arc::new(RingInner { field, r })))
    }

    /// Convenience constructor for `F_{p^e}`.
    pub fn with_field(p: u32, e: u32, r: u32) -> Result<Self> {
        Self::new(FieldSpec::new(p, e)?, r)
    }

    /// Looks up `F_q` from its size.
    pub fn for_q(q: u32, r: u32) -> Result<Self> {
        let (p, e) = prime_power(q).ok_or_else(|| Error::Config(format!("q = {q} is not a prime power")))?;
        Self::with_field(p, e, r)
    }

    pub fn field(&self) -> &Arc<FieldSpec> {
        &self.0.field
    }

    pub fn r(&self) -> u32 {
        self.0.r
    }

    /// Number of generic generators `g'_1..g'_{s-1}` plus `Δ'`.
    pub fn num_g(&self) -> usize {
        (self.0.r - 2) as usize
    }

    fn mono_one(&self) -> Monomial {
        Monomial::one(self.0.r - 1)
    }

    /// Builds an element from arbitrary terms, merging duplicates and
    /// dropping zeros.
    pub fn from_terms(&self, terms: Vec<(Monomial, RationalFunction)>) -> Result<CoefficientElement> {
        if terms.iter().any(|(m, _)| m.g.len() != self.num_g()) {
            return Err(Error::SpecMismatch);
        }
        Ok(self.normalize(terms))
    }

    fn normalize(&self, mut terms: Vec<(Monomial, RationalFunction)>) -> CoefficientElement {
        let f = &*self.0.field;
        terms.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        let mut out: Vec<(Monomial, RationalFunction)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = lc.add(&c, f),
                _ => {
                    if let Some((_, lc)) = out.last() {
                        if lc.is_zero() {
                            out.pop();
                        }
                    }
                    out.push((m, c))
                }
            }
        }
        if out.last().is_some_and(|(_, c)| c.is_zero()) {
            out.pop();
        }
        CoefficientElement { terms: out }
    }

    pub fn term(&self, m: Monomial, c: RationalFunction) -> CoefficientElement {
        debug_assert_eq!(m.g.len(), self.num_g());
        if c.is_zero() {
            CoefficientElement::default()
        } else {
            CoefficientElement { terms: vec![(m, c)] }
        }
    }

    pub fn constant(&self, c: RationalFunction) -> CoefficientElement {
        self.term(self.mono_one(), c)
    }

    /// `g'_i` for `1 ≤ i ≤ s-1`.
    pub fn g(&self, i: u32) -> CoefficientElement {
        self.generator(i)
    }

    pub fn delta(&self) -> CoefficientElement {
        self.delta_pow(1)
    }

    pub fn checked_add(&self, a: &CoefficientElement, b: &CoefficientElement) -> Result<CoefficientElement> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.add(a, b))
    }

    pub fn checked_mul(&self, a: &CoefficientElement, b: &CoefficientElement) -> Result<CoefficientElement> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.mul(a, b))
    }

    /// Confirms `x` has this ring's monomial shape.
    pub fn check(&self, x: &CoefficientElement) -> Result<()> {
        if x.terms.iter().all(|(m, _)| m.g.len() == self.num_g()) {
            Ok(())
        } else {
            Err(Error::SpecMismatch)
        }
    }

    pub fn scale(&self, x: &CoefficientElement, c: &RationalFunction) -> CoefficientElement {
        let f = &*self.0.field;
        if c.is_zero() {
            return CoefficientElement::default();
        }
        CoefficientElement { terms: x.terms.iter().map(|(m, a)| (m.clone(), a.mul(c, f))).collect() }
    }

    /// Weight `Σ a_i (q^i - 1) + b (q^s - 1)`; `F_q(T)` has weight 0.
    pub fn weight(&self, m: &Monomial) -> i64 {
        let q = self.0.field.q() as i64;
        let s = self.0.r - 1;
        let gw: i64 = m.g.iter().enumerate().map(|(i, &a)| a as i64 * (q.pow(i as u32 + 1) - 1)).sum();
        gw + m.delta * (q.pow(s) - 1)
    }

    pub fn is_homogeneous(&self, x: &CoefficientElement, w: i64) -> bool {
        x.terms.iter().all(|(m, _)| self.weight(m) == w)
    }

    /// `x^(q^j)`: exponents scale by `q^j`, coefficients by [`RationalFunction::q_power`].
    pub fn frobenius(&self, x: &CoefficientElement, j: u32) -> CoefficientElement {
        if j == 0 {
            return x.clone();
        }
        let f = &*self.0.field;
        let n = (f.q() as u64).pow(j);
        CoefficientElement { terms: x.terms.iter().map(|(m, c)| (m.scale_exponents(n), c.q_power(j, f))).collect() }
    }
}

/// `(p, e)` with `p^e = q`, if `q` is a prime power.
pub fn prime_power(q: u32) -> Option<(u32, u32)> {
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut e = 0;
    let mut n = q;
    while n.is_multiple_of(p) {
        n /= p;
        e += 1;
    }
    (n == 1).then_some((p, e))
}

fn merge_add(
    f: &FieldSpec,
    a: &[(Monomial, RationalFunction)],
    b: &[(Monomial, RationalFunction)],
) -> Vec<(Monomial, RationalFunction)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            Ordering::Less => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Greater => {
                out.push(b[j].clone());
                j += 1;
            }
            Ordering::Equal => {
                let c = a[i].1.add(&b[j].1, f);
                if !c.is_zero() {
                    out.push((a[i].0.clone(), c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

impl CoefficientDomain for RingSpec {
    type Elem = CoefficientElement;

    fn base_field(&self) -> &FieldSpec {
        &self.0.field
    }

    fn rank(&self) -> u32 {
        self.0.r
    }

    fn same_domain(&self, other: &Self) -> bool {
        self == other
    }

    fn zero(&self) -> CoefficientElement {
        CoefficientElement::default()
    }

    fn one(&self) -> CoefficientElement {
        self.constant(RationalFunction::one())
    }

    fn is_zero(&self, x: &CoefficientElement) -> bool {
        x.is_zero()
    }

    fn add(&self, a: &CoefficientElement, b: &CoefficientElement) -> CoefficientElement {
        if a.is_zero() {
            return b.clone();
        }
        if b.is_zero() {
            return a.clone();
        }
        CoefficientElement { terms: merge_add(&self.0.field, &a.terms, &b.terms) }
    }

    fn add_assign(&self, a: &mut CoefficientElement, b: &CoefficientElement) {
        if b.is_zero() {
            return;
        }
        if a.is_zero() {
            *a = b.clone();
            return;
        }
        a.terms = merge_add(&self.0.field, &a.terms, &b.terms);
    }

    fn neg(&self, a: &CoefficientElement) -> CoefficientElement {
        let f = &*self.0.field;
        CoefficientElement { terms: a.terms.iter().map(|(m, c)| (m.clone(), c.neg(f))).collect() }
    }

    fn mul(&self, a: &CoefficientElement, b: &CoefficientElement) -> CoefficientElement {
        let f = &*self.0.field;
        if a.is_zero() || b.is_zero() {
            return CoefficientElement::default();
        }
        let (small, big) = if a.terms.len() <= b.terms.len() { (a, b) } else { (b, a) };
        if small.terms.len() == 1 {
            // Multiplying by a single term preserves the order.
            let (m0, c0) = &small.terms[0];
            return CoefficientElement { terms: big.terms.iter().map(|(m, c)| (m.mul(m0), c.mul(c0, f))).collect() };
        }
        let mut acc = Vec::with_capacity(a.terms.len() * b.terms.len());
        for (ma, ca) in &small.terms {
            for (mb, cb) in &big.terms {
                acc.push((ma.mul(mb), ca.mul(cb, f)));
            }
        }
        self.normalize(acc)
    }

    fn frobenius_pow(&self, x: &CoefficientElement, j: u32) -> CoefficientElement {
        self.frobenius(x, j)
    }

    fn invert_unit(&self, x: &CoefficientElement) -> Result<CoefficientElement> {
        match x.terms.as_slice() {
            [(m, c)] if m.g.iter().all(|&a| a == 0) && c.num().degree() == Some(0) && c.is_polynomial() => {
                let inv = c.inv(&self.0.field)?;
                Ok(self.term(Monomial { delta: -m.delta, g: m.g.clone() }, inv))
            }
            _ => Err(Error::NotInvertible),
        }
    }

    fn from_base(&self, c: FieldElement) -> CoefficientElement {
        self.constant(RationalFunction::constant(c))
    }

    fn from_poly(&self, p: &PolyT) -> CoefficientElement {
        self.constant(p.clone().into())
    }

    fn from_ratfunc(&self, f: &RationalFunction) -> Result<CoefficientElement> {
        Ok(self.constant(f.clone()))
    }

    fn generator(&self, i: u32) -> CoefficientElement {
        let s = self.0.r - 1;
        match i {
            0 => self.from_poly(&PolyT::t()),
            i if i == s => self.delta_pow(1),
            i if i > s => self.zero(),
            i => {
                let mut m = self.mono_one();
                m.g[(i - 1) as usize] = 1;
                self.term(m, RationalFunction::one())
            }
        }
    }

    fn delta_pow(&self, e: i64) -> CoefficientElement {
        let mut m = self.mono_one();
        m.delta = e;
        self.term(m, RationalFunction::one())
    }
}
