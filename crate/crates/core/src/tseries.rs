//! Truncated power series `Σ_{n<M} c_n t^n` with explicit precision `M`.
//!
//! Storage is sparse: only nonzero coefficients, ascending in `n`. Every
//! operation computes the precision it can guarantee, and comparisons
//! beyond it are refused.

use std::fmt;

use crate::domain::CoefficientDomain;
use crate::error::{Error, Result};

/// Vanishing order of a truncated series.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Order {
    /// Smallest exponent with a nonzero coefficient.
    Finite(u64),
    /// No nonzero coefficient below the precision.
    AtLeast(u64),
}

impl Order {
    /// The order, or the precision when no term is known.
    pub fn lower_bound(self) -> u64 {
        match self {
            Order::Finite(n) | Order::AtLeast(n) => n,
        }
    }

    pub fn is_at_least(self, n: u64) -> bool {
        self.lower_bound() >= n
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Order::Finite(n) => write!(f, "{n}"),
            Order::AtLeast(n) => write!(f, ">={n}"),
        }
    }
}

#[derive(Clone)]
pub struct TruncatedSeries<D: CoefficientDomain> {
    dom: D,
    terms: Vec<(u64, D::Elem)>,
    prec: u64,
}

impl<D: CoefficientDomain> fmt::Debug for TruncatedSeries<D> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("TruncatedSeries").field("prec", &self.prec).field("terms", &self.terms).finish()
    }
}

impl<D: CoefficientDomain> PartialEq for TruncatedSeries<D> {
    fn eq(&self, other: &Self) -> bool {
        self.prec == other.prec && self.terms == other.terms && self.dom.same_domain(&other.dom)
    }
}

/// Sorts by exponent, merges equal exponents and drops zeros.
fn collect_terms<D: CoefficientDomain>(dom: &D, mut raw: Vec<(u64, D::Elem)>) -> Vec<(u64, D::Elem)> {
    raw.sort_by_key(|(n, _)| *n);
    let mut out: Vec<(u64, D::Elem)> = Vec::with_capacity(raw.len());
    for (n, c) in raw {
        match out.last_mut() {
            Some((m, acc)) if *m == n => dom.add_assign(acc, &c),
            _ => {
                if out.last().is_some_and(|(_, c)| dom.is_zero(c)) {
                    out.pop();
                }
                out.push((n, c));
            }
        }
    }
    if out.last().is_some_and(|(_, c)| dom.is_zero(c)) {
        out.pop();
    }
    out
}

impl<D: CoefficientDomain> TruncatedSeries<D> {
    /// Builds a series from arbitrary terms; exponents `≥ prec` are dropped.
    pub fn new(dom: &D, terms: Vec<(u64, D::Elem)>, prec: u64) -> Result<Self> {
        if prec == 0 {
            return Err(Error::OutOfRange("series precision must be at least 1".into()));
        }
        let raw = terms.into_iter().filter(|(n, _)| *n < prec).collect();
        Ok(TruncatedSeries { dom: dom.clone(), terms: collect_terms(dom, raw), prec })
    }

    pub fn zero(dom: &D, prec: u64) -> Self {
        TruncatedSeries { dom: dom.clone(), terms: Vec::new(), prec: prec.max(1) }
    }

    pub fn one(dom: &D, prec: u64) -> Self {
        Self::monomial(dom, dom.one(), 0, prec)
    }

    /// `c·t^n` modulo `t^prec`.
    pub fn monomial(dom: &D, c: D::Elem, n: u64, prec: u64) -> Self {
        let mut s = Self::zero(dom, prec);
        if n < s.prec && !dom.is_zero(&c) {
            s.terms.push((n, c));
        }
        s
    }

    pub fn domain(&self) -> &D {
        &self.dom
    }

    pub fn prec(&self) -> u64 {
        self.prec
    }

    pub fn terms(&self) -> &[(u64, D::Elem)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(u64, D::Elem)> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn order(&self) -> Order {
        match self.terms.first() {
            Some((n, _)) => Order::Finite(*n),
            None => Order::AtLeast(self.prec),
        }
    }

    pub fn support(&self) -> Vec<u64> {
        self.terms.iter().map(|(n, _)| *n).collect()
    }

    /// Coefficient of `t^n`; fails when `n` is beyond the precision.
    pub fn coefficient(&self, n: u64) -> Result<D::Elem> {
        if n >= self.prec {
            return Err(Error::InsufficientPrecision { requested: n + 1, available: self.prec });
        }
        Ok(self
            .terms
            .binary_search_by_key(&n, |(m, _)| *m)
            .map(|i| self.terms[i].1.clone())
            .unwrap_or_else(|_| self.dom.zero()))
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.dom.same_domain(&other.dom) {
            Ok(())
        } else {
            Err(Error::SpecMismatch)
        }
    }

    /// Reduction modulo `t^m` (never raises the precision).
    pub fn truncate(&self, m: u64) -> Self {
        let prec = self.prec.min(m.max(1));
        TruncatedSeries {
            dom: self.dom.clone(),
            terms: self.terms.iter().filter(|(n, _)| *n < prec).cloned().collect(),
            prec,
        }
    }

    /// Equality of both series modulo `t^m`.
    pub fn eq_mod(&self, other: &Self, m: u64) -> Result<bool> {
        self.check(other)?;
        let avail = self.prec.min(other.prec);
        if m > avail {
            return Err(Error::InsufficientPrecision { requested: m, available: avail });
        }
        let a = self.terms.iter().take_while(|(n, _)| *n < m);
        let b = other.terms.iter().take_while(|(n, _)| *n < m);
        Ok(a.eq(b))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let prec = self.prec.min(other.prec);
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        loop {
            let na = a.get(i).map(|t| t.0).filter(|&n| n < prec);
            let nb = b.get(j).map(|t| t.0).filter(|&n| n < prec);
            match (na, nb) {
                (None, None) => break,
                (Some(x), Some(y)) if x == y => {
                    let c = self.dom.add(&a[i].1, &b[j].1);
                    if !self.dom.is_zero(&c) {
                        out.push((x, c));
                    }
                    i += 1;
                    j += 1;
                }
                (Some(x), Some(y)) if x < y => {
                    out.push(a[i].clone());
                    i += 1;
                }
                (Some(_), None) => {
                    out.push(a[i].clone());
                    i += 1;
                }
                _ => {
                    out.push(b[j].clone());
                    j += 1;
                }
            }
        }
        Ok(TruncatedSeries { dom: self.dom.clone(), terms: out, prec })
    }

    pub fn neg(&self) -> Self {
        TruncatedSeries {
            dom: self.dom.clone(),
            terms: self.terms.iter().map(|(n, c)| (*n, self.dom.neg(c))).collect(),
            prec: self.prec,
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &D::Elem) -> Self {
        let terms = if self.dom.is_zero(c) {
            Vec::new()
        } else {
            let raw = self.terms.iter().map(|(n, x)| (*n, self.dom.mul(x, c)));
            raw.filter(|(_, x)| !self.dom.is_zero(x)).collect()
        };
        TruncatedSeries { dom: self.dom.clone(), terms, prec: self.prec }
    }

    /// Multiplication by `t^k`; the precision rises by `k`.
    pub fn shift(&self, k: u64) -> Self {
        TruncatedSeries {
            dom: self.dom.clone(),
            terms: self.terms.iter().map(|(n, c)| (n + k, c.clone())).collect(),
            prec: self.prec.saturating_add(k),
        }
    }

    /// Division by `t^k`; fails unless every stored exponent is `≥ k`.
    pub fn shift_down(&self, k: u64) -> Result<Self> {
        if self.terms.first().is_some_and(|(n, _)| *n < k) {
            return Err(Error::Domain(format!("series is not divisible by t^{k}")));
        }
        if self.prec <= k {
            return Err(Error::InsufficientPrecision { requested: k + 1, available: self.prec });
        }
        Ok(TruncatedSeries {
            dom: self.dom.clone(),
            terms: self.terms.iter().map(|(n, c)| (n - k, c.clone())).collect(),
            prec: self.prec - k,
        })
    }

    /// Product. If `f` is known mod `t^M_f` and has order `o_f`, and likewise
    /// for `g`, the product is known mod `t^min(M_f + o_g, M_g + o_f)`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let of = self.order().lower_bound();
        let og = other.order().lower_bound();
        let prec = self.prec.saturating_add(og).min(other.prec.saturating_add(of));
        let mut raw = Vec::new();
        for (n, a) in &self.terms {
            for (m, b) in &other.terms {
                if n + m >= prec {
                    break;
                }
                raw.push((n + m, self.dom.mul(a, b)));
            }
        }
        Ok(TruncatedSeries { dom: self.dom.clone(), terms: collect_terms(&self.dom, raw), prec })
    }

    /// `f^e` by repeated squaring; `f^0 = 1` at `f`'s precision.
    pub fn pow(&self, mut e: u64) -> Result<Self> {
        let mut acc = Self::one(&self.dom, self.prec);
        if e == 0 {
            return Ok(acc);
        }
        let mut base = self.clone();
        let mut first = true;
        while e > 0 {
            if e & 1 == 1 {
                acc = if first { base.clone() } else { acc.mul(&base)? };
                first = false;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// `f^(q^j)`: exponents scale by `q^j`, coefficients go through the
    /// domain's Frobenius, and the precision scales by `q^j`.
    pub fn frobenius(&self, j: u32) -> Self {
        let step = self.dom.q().pow(j);
        TruncatedSeries {
            dom: self.dom.clone(),
            terms: self.terms.iter().map(|(n, c)| (n * step, self.dom.frobenius_pow(c, j))).collect(),
            prec: self.prec.saturating_mul(step),
        }
    }

    /// Multiplicative inverse modulo `t^prec`; the constant term must be a unit.
    pub fn invert(&self) -> Result<Self> {
        let c0 = match self.terms.first() {
            Some((0, c)) => c,
            _ => return Err(Error::NotInvertible),
        };
        let cinv = self.dom.invert_unit(c0)?;
        let neg_cinv = self.dom.neg(&cinv);
        let prec = self.prec;
        let tail: Vec<&(u64, D::Elem)> = self.terms[1..].iter().collect();
        let mut g: Vec<Option<D::Elem>> = vec![None; prec as usize];
        g[0] = Some(cinv);
        let mut out = vec![(0u64, g[0].clone().unwrap())];
        for n in 1..prec {
            let mut acc: Option<D::Elem> = None;
            for (e, fe) in &tail {
                if *e > n {
                    break;
                }
                if let Some(gv) = &g[(n - e) as usize] {
                    let p = self.dom.mul(fe, gv);
                    match &mut acc {
                        Some(a) => self.dom.add_assign(a, &p),
                        None => acc = Some(p),
                    }
                }
            }
            if let Some(a) = acc {
                let v = self.dom.mul(&neg_cinv, &a);
                if !self.dom.is_zero(&v) {
                    out.push((n, v.clone()));
                    g[n as usize] = Some(v);
                }
            }
        }
        Ok(TruncatedSeries { dom: self.dom.clone(), terms: out, prec })
    }

    /// Sum of many series at the minimum of their precisions.
    pub fn sum<'a, I>(dom: &D, prec: u64, items: I) -> Result<Self>
    where
        I: IntoIterator<Item = &'a Self>,
        D: 'a,
    {
        let mut prec = prec;
        let mut raw = Vec::new();
        for s in items {
            if !s.dom.same_domain(dom) {
                return Err(Error::SpecMismatch);
            }
            prec = prec.min(s.prec);
            raw.extend(s.terms.iter().cloned());
        }
        let raw = raw.into_iter().filter(|(n, _)| *n < prec).collect();
        Ok(TruncatedSeries { dom: dom.clone(), terms: collect_terms(dom, raw), prec: prec.max(1) })
    }

    /// Applies a coefficient map into another domain.
    pub fn map_domain<E, F>(&self, dom: &E, mut f: F) -> Result<TruncatedSeries<E>>
    where
        E: CoefficientDomain,
        F: FnMut(&D::Elem) -> Result<E::Elem>,
    {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (n, c) in &self.terms {
            let v = f(c)?;
            if !dom.is_zero(&v) {
                terms.push((*n, v));
            }
        }
        Ok(TruncatedSeries { dom: dom.clone(), terms, prec: self.prec })
    }
}
