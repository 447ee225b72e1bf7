//! The interface shared by every coefficient ring the series machinery runs
//! over: the symbolic ring [`RingSpec`](crate::coeffring::RingSpec) and the
//! numeric image at a specialization point
//! ([`SpecializedRing`](crate::specialize::SpecializedRing)).

use std::fmt;

use crate::error::Result;
use crate::gfq::{FieldElement, FieldSpec};
use crate::ratfunc::{PolyT, RationalFunction};

/// A commutative `F_q(T)`-algebra containing the generic rank-`s` coefficients
/// `g'_1, …, g'_{s-1}` and the unit `Δ'`.
///
/// Elements are plain values; the domain object carries the context.
#[allow(clippy::wrong_self_convention)]
pub trait CoefficientDomain: Clone + Send + Sync + fmt::Debug {
    type Elem: Clone + PartialEq + fmt::Debug + Send + Sync;

    fn base_field(&self) -> &FieldSpec;

    /// Size of the constant field `F_q`.
    fn q(&self) -> u64 {
        self.base_field().q() as u64
    }

    /// The rank `r` of the forms under study.
    fn rank(&self) -> u32;

    /// Rank `s = r - 1` of the generic module.
    fn s(&self) -> u32 {
        self.rank() - 1
    }

    fn same_domain(&self, other: &Self) -> bool;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, x: &Self::Elem) -> bool;

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn add_assign(&self, a: &mut Self::Elem, b: &Self::Elem) {
        *a = self.add(a, b);
    }

    /// The ring endomorphism `x ↦ x^(q^j)`.
    fn frobenius_pow(&self, x: &Self::Elem, j: u32) -> Self::Elem;

    /// Inverse of a unit; errors on non-units.
    fn invert_unit(&self, x: &Self::Elem) -> Result<Self::Elem>;

    fn from_base(&self, c: FieldElement) -> Self::Elem;
    fn from_poly(&self, p: &PolyT) -> Self::Elem;
    fn from_ratfunc(&self, f: &RationalFunction) -> Result<Self::Elem>;

    /// `g'_i` with the conventions `g'_0 = T`, `g'_s = Δ'`, `g'_i = 0` for `i > s`.
    fn generator(&self, i: u32) -> Self::Elem;

    /// `Δ'^e` for any integer `e`.
    fn delta_pow(&self, e: i64) -> Self::Elem;

    fn scale_int(&self, x: &Self::Elem, n: i64) -> Self::Elem {
        self.mul(x, &self.from_base(self.base_field().from_int(n)))
    }
}
