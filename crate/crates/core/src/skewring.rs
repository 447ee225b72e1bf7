//! Twisted polynomials `Σ c_i τ^i` with `τ c = c^q τ`.
//!
//! Under `τ^n ↦ X^{q^n}` the product is composition of `F_q`-linear
//! polynomials.

use std::fmt;

use crate::domain::CoefficientDomain;
use crate::error::{Error, Result};

#[derive(Clone)]
pub struct SkewPolynomial<D: CoefficientDomain> {
    dom: D,
    coeffs: Vec<(u32, D::Elem)>,
}

impl<D: CoefficientDomain> fmt::Debug for SkewPolynomial<D> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.coeffs.iter()).finish()
    }
}

impl<D: CoefficientDomain> PartialEq for SkewPolynomial<D> {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs && self.dom.same_domain(&other.dom)
    }
}

impl<D: CoefficientDomain> SkewPolynomial<D> {
    /// Builds `Σ c_i τ^i` from `(i, c_i)` pairs in any order.
    pub fn new(dom: &D, mut coeffs: Vec<(u32, D::Elem)>) -> Self {
        coeffs.sort_by_key(|(i, _)| *i);
        let mut out: Vec<(u32, D::Elem)> = Vec::with_capacity(coeffs.len());
        for (i, c) in coeffs {
            match out.last_mut() {
                Some((j, acc)) if *j == i => dom.add_assign(acc, &c),
                _ => out.push((i, c)),
            }
        }
        out.retain(|(_, c)| !dom.is_zero(c));
        SkewPolynomial { dom: dom.clone(), coeffs: out }
    }

    /// From the dense list `c_0, c_1, …`.
    pub fn from_dense(dom: &D, coeffs: Vec<D::Elem>) -> Self {
        Self::new(dom, coeffs.into_iter().enumerate().map(|(i, c)| (i as u32, c)).collect())
    }

    pub fn constant(dom: &D, c: D::Elem) -> Self {
        Self::new(dom, vec![(0, c)])
    }

    pub fn one(dom: &D) -> Self {
        Self::constant(dom, dom.one())
    }

    pub fn tau(dom: &D) -> Self {
        Self::new(dom, vec![(1, dom.one())])
    }

    pub fn domain(&self) -> &D {
        &self.dom
    }

    pub fn terms(&self) -> &[(u32, D::Elem)] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// τ-degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.coeffs.last().map(|(i, _)| *i)
    }

    pub fn coeff(&self, i: u32) -> D::Elem {
        self.coeffs.iter().find(|(j, _)| *j == i).map(|(_, c)| c.clone()).unwrap_or_else(|| self.dom.zero())
    }

    /// Dense coefficient list up to the degree.
    pub fn dense(&self) -> Vec<D::Elem> {
        let n = self.degree().map_or(0, |d| d as usize + 1);
        let mut v = vec![self.dom.zero(); n];
        for (i, c) in &self.coeffs {
            v[*i as usize] = c.clone();
        }
        v
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.dom.same_domain(&other.dom) {
            Ok(())
        } else {
            Err(Error::SpecMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut all = self.coeffs.clone();
        all.extend(other.coeffs.iter().cloned());
        Ok(Self::new(&self.dom, all))
    }

    pub fn neg(&self) -> Self {
        SkewPolynomial {
            dom: self.dom.clone(),
            coeffs: self.coeffs.iter().map(|(i, c)| (*i, self.dom.neg(c))).collect(),
        }
    }

    /// Left multiplication by a scalar: `c · f`.
    pub fn scale(&self, c: &D::Elem) -> Self {
        Self::new(&self.dom, self.coeffs.iter().map(|(i, x)| (*i, self.dom.mul(c, x))).collect())
    }

    /// `(Σ a_i τ^i)(Σ b_j τ^j) = Σ a_i b_j^{q^i} τ^{i+j}`.
    pub fn skew_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut raw = Vec::with_capacity(self.coeffs.len() * other.coeffs.len());
        for (i, a) in &self.coeffs {
            for (j, b) in &other.coeffs {
                raw.push((i + j, self.dom.mul(a, &self.dom.frobenius_pow(b, *i))));
            }
        }
        Ok(Self::new(&self.dom, raw))
    }

    /// Value of the additive polynomial `Σ c_i x^{q^i}`.
    pub fn eval_additive(&self, x: &D::Elem) -> D::Elem {
        let mut acc = self.dom.zero();
        for (i, c) in &self.coeffs {
            let v = self.dom.mul(c, &self.dom.frobenius_pow(x, *i));
            self.dom.add_assign(&mut acc, &v);
        }
        acc
    }

    pub fn map_domain<E, F>(&self, dom: &E, mut f: F) -> Result<SkewPolynomial<E>>
    where
        E: CoefficientDomain,
        F: FnMut(&D::Elem) -> Result<E::Elem>,
    {
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for (i, c) in &self.coeffs {
            coeffs.push((*i, f(c)?));
        }
        Ok(SkewPolynomial::new(dom, coeffs))
    }
}

/// First `k_max + 1` coefficients of the inverse of `f = 1 + f_1 τ + …` in
/// the skew power series ring, from `Σ_{i+j=k} f_i g_j^{q^i} = 0` for `k > 0`.
pub fn formal_inverse_coeffs<D: CoefficientDomain>(dom: &D, f: &[D::Elem], k_max: usize) -> Result<Vec<D::Elem>> {
    if f.first() != Some(&dom.one()) {
        return Err(Error::NotNormalized);
    }
    let mut g = vec![dom.one()];
    for k in 1..=k_max {
        let mut acc = dom.zero();
        for i in 1..=k.min(f.len() - 1) {
            if dom.is_zero(&f[i]) {
                continue;
            }
            let t = dom.mul(&f[i], &dom.frobenius_pow(&g[k - i], i as u32));
            dom.add_assign(&mut acc, &t);
        }
        g.push(dom.neg(&acc));
    }
    Ok(g)
}

/// Coefficient of `τ^k` in `f · g` for coefficient lists, `k ≤ k_max`.
pub fn skew_convolution<D: CoefficientDomain>(dom: &D, f: &[D::Elem], g: &[D::Elem], k_max: usize) -> Vec<D::Elem> {
    (0..=k_max)
        .map(|k| {
            let mut acc = dom.zero();
            for i in 0..=k {
                if let (Some(a), Some(b)) = (f.get(i), g.get(k - i)) {
                    let t = dom.mul(a, &dom.frobenius_pow(b, i as u32));
                    dom.add_assign(&mut acc, &t);
                }
            }
            acc
        })
        .collect()
}
