//! The generic rank-`s` Drinfeld module `φ'_T = T + g'_1 τ + … + Δ' τ^s`
//! and the objects derived from it: `φ'_a`, `Δ'_a`, `S_a`, `t_a`, and the
//! logarithm coefficients `β'_k` with `E'_{q^k-1} = -β'_k`.

use std::sync::Mutex;

use crate::domain::CoefficientDomain;
use crate::error::{Error, Result};
use crate::ratfunc::{PolyT, RationalFunction};
use crate::skewring::{formal_inverse_coeffs, SkewPolynomial};
use crate::tseries::TruncatedSeries;

pub struct GenericModule<D: CoefficientDomain> {
    dom: D,
    phi_t: SkewPolynomial<D>,
    powers: Mutex<Vec<SkewPolynomial<D>>>,
    betas: Mutex<Vec<D::Elem>>,
}

/// `S_a(X) = Δ'_a^{-1} X^{q^{sd}} φ'_a(X^{-1})`, stored by exponent.
#[derive(Clone, Debug)]
pub struct ReciprocalPolynomial<D: CoefficientDomain> {
    pub a: PolyT,
    pub d: u32,
    /// `(exponent, coefficient)`, ascending; exponents are `0` and
    /// `q^{sd} - q^i`.
    pub terms: Vec<(u64, D::Elem)>,
}

impl<D: CoefficientDomain> ReciprocalPolynomial<D> {
    pub fn to_series(&self, dom: &D, prec: u64) -> Result<TruncatedSeries<D>> {
        TruncatedSeries::new(dom, self.terms.clone(), prec)
    }
}

impl<D: CoefficientDomain> GenericModule<D> {
    pub fn new(dom: &D) -> Self {
        let s = dom.s();
        let phi_t = SkewPolynomial::new(dom, (0..=s).map(|i| (i, dom.generator(i))).collect());
        GenericModule {
            dom: dom.clone(),
            powers: Mutex::new(vec![SkewPolynomial::one(dom), phi_t.clone()]),
            phi_t,
            betas: Mutex::new(vec![dom.one()]),
        }
    }

    pub fn domain(&self) -> &D {
        &self.dom
    }

    pub fn phi_t(&self) -> &SkewPolynomial<D> {
        &self.phi_t
    }

    /// `q^{s d}`, the order of `t_a` for `deg a = d`.
    pub fn qsd(&self, d: u32) -> u64 {
        self.dom.q().pow(self.dom.s() * d)
    }

    /// `φ'_{T^i}` for `i ≤ n`, computed as `φ'_T · φ'_{T^{i-1}}`.
    fn power(&self, n: usize) -> Result<SkewPolynomial<D>> {
        let mut p = self.powers.lock().expect("cache lock");
        while p.len() <= n {
            let next = self.phi_t.skew_mul(p.last().expect("nonempty"))?;
            p.push(next);
        }
        Ok(p[n].clone())
    }

    /// `φ'_a = Σ c_i φ'_{T^i}` for `a = Σ c_i T^i ≠ 0`.
    pub fn phi_a(&self, a: &PolyT) -> Result<SkewPolynomial<D>> {
        let deg = a.degree().ok_or_else(|| Error::Domain("φ_a needs a ≠ 0".into()))?;
        let mut acc = SkewPolynomial::new(&self.dom, Vec::new());
        for i in 0..=deg {
            let c = a.coeff(i);
            if c.is_zero() {
                continue;
            }
            acc = acc.add(&self.power(i)?.scale(&self.dom.from_base(c)))?;
        }
        Ok(acc)
    }

    /// `Δ'_{(d)} = Δ'^{(q^{sd}-1)/(q^s-1)}`.
    pub fn delta_d(&self, d: u32) -> D::Elem {
        let qs = self.dom.q().pow(self.dom.s());
        self.dom.delta_pow(((self.qsd(d) - 1) / (qs - 1)) as i64)
    }

    pub fn s_a(&self, a: &PolyT) -> Result<ReciprocalPolynomial<D>> {
        let phi = self.phi_a(a)?;
        let d = a.degree().expect("nonzero") as u32;
        let top = self.dom.s() * d;
        let lead_inv = self.dom.invert_unit(&phi.coeff(top))?;
        let q = self.dom.q();
        let n = q.pow(top);
        let mut terms: Vec<(u64, D::Elem)> =
            phi.terms().iter().map(|(i, c)| (n - q.pow(*i), self.dom.mul(c, &lead_inv))).collect();
        terms.sort_by_key(|(e, _)| *e);
        Ok(ReciprocalPolynomial { a: a.clone(), d, terms })
    }

    /// `t_a = Δ'_a^{-1} t^{q^{sd}} / S_a(t)` modulo `t^prec`.
    pub fn t_a_series(&self, a: &PolyT, prec: u64) -> Result<TruncatedSeries<D>> {
        let sa = self.s_a(a)?;
        let n = self.qsd(sa.d);
        if n >= prec {
            return Ok(TruncatedSeries::zero(&self.dom, prec));
        }
        let phi_lead = self.phi_a(a)?.coeff(self.dom.s() * sa.d);
        let lead_inv = self.dom.invert_unit(&phi_lead)?;
        let inv = sa.to_series(&self.dom, prec - n)?.invert()?;
        Ok(inv.shift(n).scale(&lead_inv))
    }

    /// `β'_0, …, β'_{k_max}` from
    /// `β'_k [k] = -(g'_k + Σ_{1≤i<k} β'_i (g'_{k-i})^{q^i})`.
    pub fn generic_betas(&self, k_max: usize) -> Result<Vec<D::Elem>> {
        let mut b = self.betas.lock().expect("cache lock");
        let f = self.dom.base_field();
        while b.len() <= k_max {
            let k = b.len();
            let mut acc = self.dom.generator(k as u32);
            for (i, bi) in b.iter().enumerate().skip(1) {
                let g = self.dom.generator((k - i) as u32);
                if self.dom.is_zero(&g) {
                    continue;
                }
                let t = self.dom.mul(bi, &self.dom.frobenius_pow(&g, i as u32));
                self.dom.add_assign(&mut acc, &t);
            }
            let bracket = PolyT::bracket(k as u32, f)?;
            let inv = self.dom.from_ratfunc(&RationalFunction::from(bracket).inv(f)?)?;
            b.push(self.dom.neg(&self.dom.mul(&acc, &inv)));
        }
        Ok(b[..=k_max].to_vec())
    }

    /// `E'_{q^k-1} = -β'_k`, with `E'_0 = -1`.
    pub fn eisenstein_prime(&self, k: usize) -> Result<D::Elem> {
        Ok(self.dom.neg(&self.generic_betas(k)?[k]))
    }

    /// Exponential coefficients `α'_0, …, α'_{k_max}`, the skew inverse of the β'.
    pub fn generic_alphas(&self, k_max: usize) -> Result<Vec<D::Elem>> {
        formal_inverse_coeffs(&self.dom, &self.generic_betas(k_max)?, k_max)
    }

    /// All monic polynomials of degree `d`.
    pub fn monic(&self, d: u32) -> Vec<PolyT> {
        PolyT::monic_enumerate(d as usize, self.dom.base_field())
    }
}
