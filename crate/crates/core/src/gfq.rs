//! Finite fields `F_q`, `q = p^e`, in the power-basis representation.
//!
//! An element is stored as its canonical integer code `Σ digits[i]·p^i`,
//! where `digits` are the coordinates with respect to `1, x, …, x^{e-1}` and
//! `x` is a root of the field's defining modulus. The [`FieldSpec`] owns the
//! lookup tables; elements are bare `Copy` values.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Largest field accepted as a coefficient field.
pub const MAX_BASE_Q: u32 = 16;
/// Largest field accepted as a specialization target.
pub const MAX_EXT_Q: u32 = 1 << 16;

/// Element of a finite field, stored as its canonical integer code.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FieldElement(u16);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    /// Canonical integer encoding `Σ digits[i]·p^i`.
    #[inline]
    pub fn value(self) -> u32 {
        self.0 as u32
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub(crate) fn from_code(v: u32) -> Self {
        debug_assert!(v < MAX_EXT_Q);
        FieldElement(v as u16)
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Description of `F_{p^e}` together with its arithmetic tables.
pub struct FieldSpec {
    p: u32,
    e: u32,
    q: u32,
    modulus: Vec<u32>,
    exp: Vec<u16>,
    log: Vec<u32>,
    add_tab: Option<Vec<u16>>,
    neg_tab: Vec<u16>,
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.e == other.e && self.modulus == other.modulus
    }
}
impl Eq for FieldSpec {}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldSpec").field("p", &self.p).field("e", &self.e).field("modulus", &self.modulus).finish()
    }
}

pub(crate) fn is_prime(n: u32) -> bool {
    n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

// Polynomials over F_p as ascending coefficient vectors (used only while
// building the tables).
fn fp_trim(v: &mut Vec<u32>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn fp_rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let mut r = a.to_vec();
    fp_trim(&mut r);
    let dm = m.len() - 1;
    let lead_inv = fp_inv(m[dm], p);
    while r.len() > dm {
        let top = r.len() - 1;
        let c = r[top] * lead_inv % p;
        let shift = top - dm;
        for (i, &mi) in m.iter().enumerate() {
            r[shift + i] = (r[shift + i] + p * p - c * mi % p) % p;
        }
        fp_trim(&mut r);
    }
    r
}

fn fp_inv(a: u32, p: u32) -> u32 {
    (1..p).find(|b| a * b % p == 1).expect("nonzero element of F_p")
}

fn fp_mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u32; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    out
}

fn decode(mut v: u32, p: u32, e: u32) -> Vec<u32> {
    (0..e)
        .map(|_| {
            let d = v % p;
            v /= p;
            d
        })
        .collect()
}

fn encode(digits: &[u32], p: u32) -> u32 {
    digits.iter().rev().fold(0, |acc, &d| acc * p + d)
}

/// Irreducibility over `F_p` by trial division against all monics of
/// degree `1..=deg/2`.
fn is_irreducible(poly: &[u32], p: u32) -> bool {
    let deg = poly.len() as u32 - 1;
    for d in 1..=deg / 2 {
        for low in 0..p.pow(d) {
            let mut cand = decode(low, p, d);
            cand.push(1);
            if fp_rem(poly, &cand, p).is_empty() {
                return false;
            }
        }
    }
    true
}

impl FieldSpec {
    /// Coefficient field `F_{p^e}` with `p^e ≤ 16`.
    pub fn new(p: u32, e: u32) -> Result<Arc<FieldSpec>> {
        Self::build(p, e, MAX_BASE_Q)
    }

    /// Field `F_{p^e}` with `p^e ≤ 2^16`, used as a specialization target.
    pub fn large(p: u32, e: u32) -> Result<Arc<FieldSpec>> {
        Self::build(p, e, MAX_EXT_Q)
    }

    fn build(p: u32, e: u32, limit: u32) -> Result<Arc<FieldSpec>> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if e == 0 || p > 13 {
            return Err(Error::UnsupportedField { p, e });
        }
        let q =
            (p as u64).checked_pow(e).filter(|&q| q <= limit as u64).ok_or(Error::UnsupportedField { p, e })? as u32;
        let modulus = Self::least_irreducible(p, e);

        // Multiplication of codes through polynomial arithmetic.
        let mulmod = |a: u32, b: u32| -> u32 {
            let prod = fp_mul(&decode(a, p, e), &decode(b, p, e), p);
            let mut r = fp_rem(&prod, &modulus, p);
            r.resize(e as usize, 0);
            encode(&r, p)
        };
        // Least primitive element by code.
        let order = q - 1;
        let mut exp = vec![0u16; q as usize];
        let mut log = vec![0u32; q as usize];
        if q == 2 {
            exp[0] = 1;
        } else {
            'search: for g in 2..q {
                let mut x = 1u32;
                for i in 0..order {
                    exp[i as usize] = x as u16;
                    x = mulmod(x, g);
                    if x == 1 && i + 1 < order {
                        continue 'search;
                    }
                }
                break;
            }
        }
        for i in 0..order {
            log[exp[i as usize] as usize] = i;
        }
        let add_code = |a: u32, b: u32| -> u32 {
            let (da, db) = (decode(a, p, e), decode(b, p, e));
            let s: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
            encode(&s, p)
        };
        let neg_tab: Vec<u16> = (0..q)
            .map(|a| {
                let d: Vec<u32> = decode(a, p, e).iter().map(|x| (p - x) % p).collect();
                encode(&d, p) as u16
            })
            .collect();
        let add_tab = (q <= 256).then(|| {
            let mut t = vec![0u16; (q * q) as usize];
            for a in 0..q {
                for b in 0..q {
                    t[(a * q + b) as usize] = add_code(a, b) as u16;
                }
            }
            t
        });
        Ok(Arc::new(FieldSpec { p, e, q, modulus, exp, log, add_tab, neg_tab }))
    }

    /// Least monic irreducible of degree `e`, comparing the ascending
    /// coefficient tuple `(c_0, …, c_{e-1})` lexicographically.
    fn least_irreducible(p: u32, e: u32) -> Vec<u32> {
        for v in 0..p.pow(e) {
            // c_0 is the most significant position of the enumeration.
            let mut coeffs: Vec<u32> = decode(v, p, e).into_iter().rev().collect();
            coeffs.push(1);
            if e == 1 || is_irreducible(&coeffs, p) {
                return coeffs;
            }
        }
        unreachable!("irreducible polynomials exist in every degree")
    }

    pub fn p(&self) -> u32 {
        self.p
    }
    pub fn e(&self) -> u32 {
        self.e
    }
    pub fn q(&self) -> u32 {
        self.q
    }
    /// Ascending `F_p` coefficients of the defining modulus (monic, degree `e`).
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn element(&self, value: u32) -> Result<FieldElement> {
        if value < self.q {
            Ok(FieldElement::from_code(value))
        } else {
            Err(Error::Domain(format!("{value} is not an element of F_{}", self.q)))
        }
    }

    /// Reduces an integer into the prime subfield.
    pub fn from_int(&self, n: i64) -> FieldElement {
        FieldElement::from_code(n.rem_euclid(self.p as i64) as u32)
    }

    pub fn digits(&self, x: FieldElement) -> Vec<u32> {
        decode(x.value(), self.p, self.e)
    }

    pub fn from_digits(&self, digits: &[u32]) -> Result<FieldElement> {
        if digits.len() != self.e as usize || digits.iter().any(|&d| d >= self.p) {
            return Err(Error::Domain(format!("bad digit vector {digits:?}")));
        }
        Ok(FieldElement::from_code(encode(digits, self.p)))
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.q).map(FieldElement::from_code)
    }

    #[inline]
    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        match &self.add_tab {
            Some(t) => FieldElement(t[(a.value() * self.q + b.value()) as usize]),
            None => {
                if self.e == 1 {
                    return FieldElement(((a.value() + b.value()) % self.p) as u16);
                }
                let (mut x, mut y, mut out, mut place) = (a.value(), b.value(), 0u32, 1u32);
                while x > 0 || y > 0 {
                    out += ((x % self.p + y % self.p) % self.p) * place;
                    x /= self.p;
                    y /= self.p;
                    place *= self.p;
                }
                FieldElement::from_code(out)
            }
        }
    }

    #[inline]
    pub fn neg(&self, a: FieldElement) -> FieldElement {
        FieldElement(self.neg_tab[a.0 as usize])
    }

    #[inline]
    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if a.is_zero() || b.is_zero() {
            return FieldElement::ZERO;
        }
        let s = self.log[a.0 as usize] + self.log[b.0 as usize];
        let n = self.q - 1;
        FieldElement(self.exp[(if s >= n { s - n } else { s }) as usize])
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.q - 1;
        Ok(FieldElement(self.exp[((n - self.log[a.0 as usize]) % n) as usize]))
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: FieldElement, n: u64) -> FieldElement {
        if n == 0 {
            return FieldElement::ONE;
        }
        if a.is_zero() {
            return FieldElement::ZERO;
        }
        let ord = (self.q - 1) as u64;
        let l = (self.log[a.0 as usize] as u64 * (n % ord)) % ord;
        FieldElement(self.exp[l as usize])
    }

    /// `a^(base_q^j)` for a field of size `base_q` contained in this one.
    pub fn pow_q_power(&self, a: FieldElement, base_q: u64, j: u32) -> FieldElement {
        if a.is_zero() {
            return a;
        }
        let ord = (self.q - 1) as u64;
        let mut e = 1u64 % ord.max(1);
        for _ in 0..j {
            e = e * (base_q % ord.max(1)) % ord.max(1);
        }
        if ord == 1 {
            return a;
        }
        self.pow(a, if e == 0 { ord } else { e })
    }

    /// The `q^j`-power Frobenius of this field; the identity on `F_q`.
    pub fn frobenius(&self, a: FieldElement, j: u32) -> FieldElement {
        self.pow_q_power(a, self.q as u64, j)
    }

    /// Symmetric integer representative of a prime-field element, if `a`
    /// lies in the prime field.
    pub fn signed_prime(&self, a: FieldElement) -> Option<i64> {
        let v = a.value();
        (v < self.p).then(|| if v > self.p / 2 { v as i64 - self.p as i64 } else { v as i64 })
    }

    /// Embedding of this field into `big` (same characteristic, `e | big.e`),
    /// as the image of every element indexed by code. The generator is sent to
    /// the least root of the modulus in `big`.
    pub fn embedding_into(&self, big: &FieldSpec) -> Result<Vec<FieldElement>> {
        if self.p != big.p || !big.e.is_multiple_of(self.e) {
            return Err(Error::SpecMismatch);
        }
        let eval = |coeffs: &[u32], x: FieldElement| {
            coeffs.iter().rev().fold(FieldElement::ZERO, |acc, &c| big.add(big.mul(acc, x), FieldElement::from_code(c)))
        };
        let root = big.elements().find(|&x| eval(&self.modulus, x).is_zero()).ok_or(Error::SpecMismatch)?;
        Ok(self.elements().map(|a| eval(&self.digits(a), root)).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(f: &FieldSpec, v: u32) -> FieldElement {
        f.element(v).unwrap()
    }

    #[test]
    fn prime_field_modulus_is_x() {
        let f = FieldSpec::new(3, 1).unwrap();
        assert_eq!(f.q(), 3);
        assert_eq!(f.modulus(), &[0, 1]);
    }

    #[test]
    fn f4_modulus_from_brute_force_scan() {
        // Monic quadratics over F_2 without a root in F_2.
        let irreducible: Vec<[u32; 3]> = (0..4)
            .map(|v| [v & 1, v >> 1, 1])
            .filter(|c| (0..2).all(|x| (c[0] + c[1] * x + c[2] * x * x) % 2 != 0))
            .collect();
        assert_eq!(irreducible, vec![[1, 1, 1]]);
        let f = FieldSpec::new(2, 2).unwrap();
        assert_eq!(f.modulus(), &irreducible[0]);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert_eq!(FieldSpec::new(4, 1).unwrap_err(), Error::NotPrime(4));
        assert!(matches!(FieldSpec::new(2, 5), Err(Error::UnsupportedField { .. })));
        assert!(matches!(FieldSpec::new(17, 1), Err(Error::UnsupportedField { .. })));
        assert!(FieldSpec::large(2, 16).is_ok());
    }

    #[test]
    fn small_examples() {
        let f3 = FieldSpec::new(3, 1).unwrap();
        assert_eq!(f3.add(el(&f3, 1), el(&f3, 2)), FieldElement::ZERO);
        let f5 = FieldSpec::new(5, 1).unwrap();
        assert_eq!(f5.inv(el(&f5, 2)).unwrap(), el(&f5, 3));
        assert_eq!(f5.inv(FieldElement::ZERO), Err(Error::DivisionByZero));
        // F_4 = F_2[x]/(x^2+x+1): x has code 2, x+1 has code 3.
        let f4 = FieldSpec::new(2, 2).unwrap();
        assert_eq!(f4.mul(el(&f4, 2), el(&f4, 2)), el(&f4, 3));
        assert_eq!(f4.digits(el(&f4, 3)), vec![1, 1]);
    }

    #[test]
    fn canonical_moduli() {
        let f8 = FieldSpec::new(2, 3).unwrap();
        assert_eq!(f8.modulus(), &[1, 0, 1, 1]);
        let f9 = FieldSpec::new(3, 2).unwrap();
        assert_eq!(f9.modulus(), &[1, 0, 1]);
        let f16 = FieldSpec::new(2, 4).unwrap();
        assert_eq!(f16.modulus(), &[1, 0, 0, 1, 1]);
    }

    #[test]
    fn field_axioms_exhaustive() {
        for (p, e) in [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2)] {
            let f = FieldSpec::new(p, e).unwrap();
            let els: Vec<_> = f.elements().collect();
            for &a in &els {
                assert_eq!(f.add(a, f.neg(a)), FieldElement::ZERO);
                assert_eq!(f.frobenius(a, 1), a);
                if !a.is_zero() {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), FieldElement::ONE);
                    assert_eq!(f.pow(a, (f.q() - 1) as u64), FieldElement::ONE);
                }
                for &b in &els {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for &c in &els {
                        assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn embedding_is_a_ring_homomorphism() {
        let small = FieldSpec::new(3, 2).unwrap();
        let big = FieldSpec::large(3, 6).unwrap();
        let emb = small.embedding_into(&big).unwrap();
        for a in small.elements() {
            for b in small.elements() {
                let (ea, eb) = (emb[a.value() as usize], emb[b.value() as usize]);
                assert_eq!(emb[small.add(a, b).value() as usize], big.add(ea, eb));
                assert_eq!(emb[small.mul(a, b).value() as usize], big.mul(ea, eb));
            }
        }
        // The image is fixed by the 9-power map.
        for &x in &emb {
            assert_eq!(big.pow_q_power(x, 9, 1), x);
        }
    }
}
