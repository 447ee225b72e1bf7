//! Polynomials and reduced rational functions in `T` over `F_q`.

use crate::error::{Error, Result};
use crate::gfq::{FieldElement, FieldSpec};

/// Polynomial in `T`; `coeffs[i]` is the `T^i` coefficient, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct PolyT {
    coeffs: Vec<FieldElement>,
}

impl PolyT {
    pub fn zero() -> Self {
        PolyT { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        PolyT { coeffs: vec![FieldElement::ONE] }
    }

    pub fn constant(c: FieldElement) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The indeterminate `T`.
    pub fn t() -> Self {
        PolyT { coeffs: vec![FieldElement::ZERO, FieldElement::ONE] }
    }

    pub fn monomial(c: FieldElement, n: usize) -> Self {
        let mut coeffs = vec![FieldElement::ZERO; n + 1];
        coeffs[n] = c;
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<FieldElement>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        PolyT { coeffs }
    }

    /// Builds a polynomial from ascending integer codes, validating each one.
    pub fn from_codes(field: &FieldSpec, codes: &[u32]) -> Result<Self> {
        let coeffs = codes.iter().map(|&c| field.element(c)).collect::<Result<Vec<_>>>()?;
        Ok(Self::from_coeffs(coeffs))
    }

    pub fn codes(&self) -> Vec<u32> {
        self.coeffs.iter().map(|c| c.value()).collect()
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> FieldElement {
        self.coeffs.get(i).copied().unwrap_or(FieldElement::ZERO)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0] == FieldElement::ONE
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> FieldElement {
        self.coeffs.last().copied().unwrap_or(FieldElement::ZERO)
    }

    pub fn is_monic(&self) -> bool {
        self.lead() == FieldElement::ONE
    }

    pub fn add(&self, other: &Self, f: &FieldSpec) -> Self {
        let (long, short) = if self.coeffs.len() >= other.coeffs.len() { (self, other) } else { (other, self) };
        let mut coeffs = long.coeffs.clone();
        for (c, &s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c = f.add(*c, s);
        }
        Self::from_coeffs(coeffs)
    }

    pub fn neg(&self, f: &FieldSpec) -> Self {
        PolyT { coeffs: self.coeffs.iter().map(|&c| f.neg(c)).collect() }
    }

    pub fn sub(&self, other: &Self, f: &FieldSpec) -> Self {
        self.add(&other.neg(f), f)
    }

    pub fn scale(&self, c: FieldElement, f: &FieldSpec) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        PolyT { coeffs: self.coeffs.iter().map(|&x| f.mul(x, c)).collect() }
    }

    pub fn mul(&self, other: &Self, f: &FieldSpec) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.is_one() {
            return other.clone();
        }
        if other.is_one() {
            return self.clone();
        }
        let n = self.coeffs.len() + other.coeffs.len() - 1;
        if f.e() == 1 {
            // Prime field: accumulate integers, reduce once.
            let p = f.p() as u64;
            let mut acc = vec![0u64; n];
            for (i, a) in self.coeffs.iter().enumerate() {
                let a = a.value() as u64;
                if a == 0 {
                    continue;
                }
                for (j, b) in other.coeffs.iter().enumerate() {
                    acc[i + j] += a * b.value() as u64;
                }
            }
            return Self::from_coeffs(acc.into_iter().map(|v| FieldElement::from_code((v % p) as u32)).collect());
        }
        let mut out = vec![FieldElement::ZERO; n];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Self::from_coeffs(out)
    }

    pub fn divmod(&self, div: &Self, f: &FieldSpec) -> Result<(Self, Self)> {
        let dd = div.degree().ok_or(Error::DivisionByZero)?;
        let lead_inv = f.inv(div.lead())?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quo = vec![FieldElement::ZERO; rem.len() - dd];
        for top in (dd..rem.len()).rev() {
            let c = f.mul(rem[top], lead_inv);
            if c.is_zero() {
                continue;
            }
            quo[top - dd] = c;
            for (i, &d) in div.coeffs.iter().enumerate() {
                let k = top - dd + i;
                rem[k] = f.sub(rem[k], f.mul(c, d));
            }
        }
        rem.truncate(dd);
        Ok((Self::from_coeffs(quo), Self::from_coeffs(rem)))
    }

    /// Exact quotient; the caller guarantees divisibility.
    fn div_exact(&self, div: &Self, f: &FieldSpec) -> Self {
        let (q, r) = self.divmod(div, f).expect("nonzero divisor");
        debug_assert!(r.is_zero());
        q
    }

    pub fn make_monic(&self, f: &FieldSpec) -> Self {
        if self.is_zero() || self.is_monic() {
            return self.clone();
        }
        self.scale(f.inv(self.lead()).expect("nonzero lead"), f)
    }

    /// Monic greatest common divisor (`gcd(0, 0) = 0`).
    pub fn gcd(&self, other: &Self, f: &FieldSpec) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.divmod(&b, f).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.make_monic(f)
    }

    pub fn eval(&self, x: FieldElement, f: &FieldSpec) -> FieldElement {
        self.coeffs.iter().rev().fold(FieldElement::ZERO, |acc, &c| f.add(f.mul(acc, x), c))
    }

    /// Evaluates at `x` in a larger field, mapping coefficients through
    /// `embed` (indexed by coefficient code).
    pub fn eval_embedded(&self, x: FieldElement, big: &FieldSpec, embed: &[FieldElement]) -> FieldElement {
        self.coeffs.iter().rev().fold(FieldElement::ZERO, |acc, &c| big.add(big.mul(acc, x), embed[c.value() as usize]))
    }

    /// `f(T)^(q^j) = f(T^(q^j))`, valid because coefficients lie in `F_q`.
    pub fn q_power(&self, j: u32, f: &FieldSpec) -> Self {
        if j == 0 || self.coeffs.len() <= 1 {
            return self.clone();
        }
        let step = (f.q() as usize).pow(j);
        let mut coeffs = vec![FieldElement::ZERO; (self.coeffs.len() - 1) * step + 1];
        for (i, &c) in self.coeffs.iter().enumerate() {
            coeffs[i * step] = c;
        }
        PolyT { coeffs }
    }

    /// All `q^d` monic polynomials of degree `d`, in ascending order of the
    /// integer `Σ code(c_i)·q^i` (so `c_0` varies fastest).
    pub fn monic_enumerate(d: usize, f: &FieldSpec) -> Vec<PolyT> {
        let q = f.q() as usize;
        let count = q.pow(d as u32);
        (0..count)
            .map(|mut v| {
                let mut coeffs = vec![FieldElement::ZERO; d + 1];
                for c in coeffs.iter_mut().take(d) {
                    *c = FieldElement::from_code((v % q) as u32);
                    v /= q;
                }
                coeffs[d] = FieldElement::ONE;
                PolyT { coeffs }
            })
            .collect()
    }

    /// `[k] = T^(q^k) - T`.
    pub fn bracket(k: u32, f: &FieldSpec) -> Result<Self> {
        if k < 1 {
            return Err(Error::Domain("[k] requires k >= 1".into()));
        }
        let n = (f.q() as usize).pow(k);
        let mut coeffs = vec![FieldElement::ZERO; n + 1];
        coeffs[n] = FieldElement::ONE;
        coeffs[1] = f.neg(FieldElement::ONE);
        Ok(PolyT { coeffs })
    }
}

/// Reduced fraction `num/den`, `den` monic, `gcd(num, den) = 1`, zero is `0/1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RationalFunction {
    num: PolyT,
    den: PolyT,
}

impl Default for RationalFunction {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<PolyT> for RationalFunction {
    fn from(num: PolyT) -> Self {
        RationalFunction { num, den: PolyT::one() }
    }
}

impl RationalFunction {
    pub fn zero() -> Self {
        PolyT::zero().into()
    }

    pub fn one() -> Self {
        PolyT::one().into()
    }

    pub fn constant(c: FieldElement) -> Self {
        PolyT::constant(c).into()
    }

    pub fn new(num: PolyT, den: PolyT, f: &FieldSpec) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = num.gcd(&den, f);
        let (mut num, mut den) = if g.is_one() { (num, den) } else { (num.div_exact(&g, f), den.div_exact(&g, f)) };
        if !den.is_monic() {
            let li = f.inv(den.lead())?;
            num = num.scale(li, f);
            den = den.scale(li, f);
        }
        Ok(RationalFunction { num, den })
    }

    pub fn num(&self) -> &PolyT {
        &self.num
    }

    pub fn den(&self) -> &PolyT {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn add(&self, other: &Self, f: &FieldSpec) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den.is_one() && other.den.is_one() {
            return self.num.add(&other.num, f).into();
        }
        if self.den == other.den {
            let num = self.num.add(&other.num, f);
            return Self::new(num, self.den.clone(), f).expect("nonzero denominator");
        }
        let g = self.den.gcd(&other.den, f);
        let a = self.den.div_exact(&g, f);
        let b = other.den.div_exact(&g, f);
        let num = self.num.mul(&b, f).add(&other.num.mul(&a, f), f);
        let den = a.mul(&other.den, f);
        Self::new(num, den, f).expect("nonzero denominator")
    }

    pub fn neg(&self, f: &FieldSpec) -> Self {
        RationalFunction { num: self.num.neg(f), den: self.den.clone() }
    }

    pub fn sub(&self, other: &Self, f: &FieldSpec) -> Self {
        self.add(&other.neg(f), f)
    }

    pub fn scale(&self, c: FieldElement, f: &FieldSpec) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RationalFunction { num: self.num.scale(c, f), den: self.den.clone() }
    }

    pub fn mul(&self, other: &Self, f: &FieldSpec) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.den.is_one() && other.den.is_one() {
            return self.num.mul(&other.num, f).into();
        }
        // Cross-cancel before multiplying.
        let g1 = self.num.gcd(&other.den, f);
        let g2 = other.num.gcd(&self.den, f);
        let (n1, d2) = (self.num.div_exact(&g1, f), other.den.div_exact(&g1, f));
        let (n2, d1) = (other.num.div_exact(&g2, f), self.den.div_exact(&g2, f));
        let num = n1.mul(&n2, f);
        let den = d1.mul(&d2, f);
        let li = f.inv(den.lead()).expect("nonzero lead");
        RationalFunction { num: num.scale(li, f), den: den.scale(li, f) }
    }

    pub fn inv(&self, f: &FieldSpec) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let li = f.inv(self.num.lead())?;
        Ok(RationalFunction { num: self.den.scale(li, f), den: self.num.scale(li, f) })
    }

    pub fn div(&self, other: &Self, f: &FieldSpec) -> Result<Self> {
        Ok(self.mul(&other.inv(f)?, f))
    }

    /// `f^(q^j)`; numerator and denominator stay coprime and monic-ness is kept.
    pub fn q_power(&self, j: u32, f: &FieldSpec) -> Self {
        RationalFunction { num: self.num.q_power(j, f), den: self.den.q_power(j, f) }
    }

    /// Evaluates at `x` in a (possibly larger) field; fails when the
    /// denominator vanishes there.
    pub fn eval_embedded(&self, x: FieldElement, big: &FieldSpec, embed: &[FieldElement]) -> Result<FieldElement> {
        let d = self.den.eval_embedded(x, big, embed);
        if d.is_zero() {
            return Err(Error::BadSpecialization);
        }
        Ok(big.mul(self.num.eval_embedded(x, big, embed), big.inv(d)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::sync::Arc;

    fn poly(f: &FieldSpec, codes: &[u32]) -> PolyT {
        PolyT::from_codes(f, codes).unwrap()
    }

    #[test]
    fn monic_enumeration_order() {
        let f3 = FieldSpec::new(3, 1).unwrap();
        let got: Vec<_> = PolyT::monic_enumerate(1, &f3).iter().map(PolyT::codes).collect();
        assert_eq!(got, vec![vec![0, 1], vec![1, 1], vec![2, 1]]);
        let f2 = FieldSpec::new(2, 1).unwrap();
        let got: Vec<_> = PolyT::monic_enumerate(2, &f2).iter().map(PolyT::codes).collect();
        // T^2, T^2+1, T^2+T, T^2+T+1
        assert_eq!(got, vec![vec![0, 0, 1], vec![1, 0, 1], vec![0, 1, 1], vec![1, 1, 1]]);
        assert_eq!(PolyT::monic_enumerate(0, &f3), vec![PolyT::one()]);
    }

    #[test]
    fn monic_enumeration_golden_f4() {
        let f4 = FieldSpec::new(2, 2).unwrap();
        let got: Vec<_> = PolyT::monic_enumerate(2, &f4).iter().map(PolyT::codes).collect();
        assert_eq!(got.len(), 16);
        assert_eq!(&got[..5], &[vec![0, 0, 1], vec![1, 0, 1], vec![2, 0, 1], vec![3, 0, 1], vec![0, 1, 1]]);
        assert_eq!(got[15], vec![3, 3, 1]);
    }

    #[test]
    fn gcd_is_monic() {
        let f3 = FieldSpec::new(3, 1).unwrap();
        // T^2 - 1 and T - 1
        let a = poly(&f3, &[2, 0, 1]);
        let b = poly(&f3, &[2, 1]);
        assert_eq!(a.gcd(&b, &f3), poly(&f3, &[2, 1]));
        let b2 = b.scale(f3.from_int(2), &f3);
        assert_eq!(a.gcd(&b2, &f3), poly(&f3, &[2, 1]));
    }

    #[test]
    fn divmod_by_zero() {
        let f3 = FieldSpec::new(3, 1).unwrap();
        assert_eq!(PolyT::t().divmod(&PolyT::zero(), &f3), Err(Error::DivisionByZero));
    }

    #[test]
    fn brackets() {
        let f3 = FieldSpec::new(3, 1).unwrap();
        assert_eq!(PolyT::bracket(1, &f3).unwrap(), poly(&f3, &[0, 2, 0, 1]));
        let f2 = FieldSpec::new(2, 1).unwrap();
        assert_eq!(PolyT::bracket(2, &f2).unwrap(), poly(&f2, &[0, 1, 0, 0, 1]));
        assert!(matches!(PolyT::bracket(0, &f3), Err(Error::Domain(_))));
    }

    #[test]
    fn rational_examples() {
        let f3 = FieldSpec::new(3, 1).unwrap();
        let t_minus_1: RationalFunction = poly(&f3, &[2, 1]).into();
        assert_eq!(t_minus_1.q_power(1, &f3), poly(&f3, &[2, 0, 0, 1]).into());
        let b1: RationalFunction = PolyT::bracket(1, &f3).unwrap().into();
        let inv = b1.inv(&f3).unwrap();
        assert_eq!(inv.num(), &PolyT::one());
        assert_eq!(inv.den(), &poly(&f3, &[0, 2, 0, 1]));
        let f2 = FieldSpec::new(2, 1).unwrap();
        let one_over_t = RationalFunction::new(PolyT::one(), PolyT::t(), &f2).unwrap();
        assert!(one_over_t.add(&one_over_t, &f2).is_zero());
        assert_eq!(RationalFunction::zero().inv(&f2), Err(Error::DivisionByZero));
    }

    #[test]
    fn reduction_is_canonical() {
        let f5 = FieldSpec::new(5, 1).unwrap();
        // (2T^2 - 2)/(3T - 3) = (2T + 2)/3 -> num (4T+4), den 1
        let r = RationalFunction::new(poly(&f5, &[3, 0, 2]), poly(&f5, &[2, 3]), &f5).unwrap();
        assert_eq!(r.den(), &PolyT::one());
        assert_eq!(r.num(), &poly(&f5, &[4, 4]));
    }

    fn arb_poly(q: u32, max_len: usize) -> impl Strategy<Value = Vec<u32>> {
        prop::collection::vec(0..q, 0..max_len)
    }

    fn field_for(idx: usize) -> Arc<FieldSpec> {
        match idx {
            0 => FieldSpec::new(2, 1),
            1 => FieldSpec::new(3, 1),
            2 => FieldSpec::new(2, 2),
            _ => FieldSpec::new(5, 1),
        }
        .unwrap()
    }

    proptest! {
        #[test]
        fn q_power_is_a_ring_homomorphism(
            idx in 0usize..4, a in arb_poly(2, 6), b in arb_poly(2, 6),
            c in arb_poly(2, 5), d in arb_poly(2, 5), j in 0u32..3,
        ) {
            let f = field_for(idx);
            let lift = |v: &[u32]| PolyT::from_codes(&f, v).unwrap();
            let mut den1 = lift(&c);
            den1 = den1.add(&PolyT::monomial(FieldElement::ONE, 5), &f);
            let mut den2 = lift(&d);
            den2 = den2.add(&PolyT::monomial(FieldElement::ONE, 4), &f);
            let x = RationalFunction::new(lift(&a), den1, &f).unwrap();
            let y = RationalFunction::new(lift(&b), den2, &f).unwrap();
            prop_assert_eq!(x.mul(&y, &f).q_power(j, &f), x.q_power(j, &f).mul(&y.q_power(j, &f), &f));
            prop_assert_eq!(x.add(&y, &f).q_power(j, &f), x.q_power(j, &f).add(&y.q_power(j, &f), &f));
            // Naive repeated multiplication agrees.
            let qj = (f.q() as usize).pow(j);
            let mut naive = RationalFunction::one();
            for _ in 0..qj { naive = naive.mul(&x, &f); }
            prop_assert_eq!(naive, x.q_power(j, &f));
        }

        #[test]
        fn inverse_law(idx in 0usize..4, a in arb_poly(2, 7), b in arb_poly(2, 7)) {
            let f = field_for(idx);
            let num = PolyT::from_codes(&f, &a).unwrap();
            let den = PolyT::from_codes(&f, &b).unwrap().add(&PolyT::monomial(FieldElement::ONE, 7), &f);
            let x = RationalFunction::new(num, den, &f).unwrap();
            prop_assume!(!x.is_zero());
            prop_assert!(x.mul(&x.inv(&f).unwrap(), &f).is_one());
            let back = x.sub(&x, &f);
            prop_assert!(back.is_zero());
        }

        #[test]
        fn divmod_reconstructs(idx in 0usize..4, a in arb_poly(2, 9), b in arb_poly(2, 5)) {
            let f = field_for(idx);
            let x = PolyT::from_codes(&f, &a).unwrap();
            let y = PolyT::from_codes(&f, &b).unwrap();
            prop_assume!(!y.is_zero());
            let (qu, re) = x.divmod(&y, &f).unwrap();
            prop_assert_eq!(qu.mul(&y, &f).add(&re, &f), x);
            prop_assert!(re.degree().is_none_or(|d| d < y.degree().unwrap()));
        }
    }
}
