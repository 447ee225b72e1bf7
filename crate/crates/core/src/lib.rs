//! Exact t-expansions of Drinfeld modular forms for `GL(r, F_q[T])`, `r ≥ 3`.
//!
//! The crate is layered bottom-up: finite fields ([`gfq`]), rational
//! functions in `T` ([`ratfunc`]), the coefficient ring ([`coeffring`]) and its
//! numeric specializations ([`specialize`]), truncated series ([`tseries`]),
//! twisted polynomials ([`skewring`]), the generic Drinfeld module
//! ([`drinfeld`]) and finally the expansions and their verification
//! ([`expansions`]).

pub mod coeffring;
pub mod domain;
pub mod drinfeld;
pub mod error;
pub mod expansions;
pub mod gfq;
pub mod ratfunc;
pub mod render;
pub mod skewring;
pub mod specialize;
pub mod tseries;

pub use coeffring::{CoefficientElement, Monomial, RingSpec};
pub use domain::CoefficientDomain;
pub use drinfeld::{GenericModule, ReciprocalPolynomial};
pub use error::{Error, Result};
pub use expansions::{ExpansionResult, Expansions};
pub use gfq::{FieldElement, FieldSpec};
pub use ratfunc::{PolyT, RationalFunction};
pub use skewring::SkewPolynomial;
pub use specialize::SpecializedRing;
pub use tseries::{Order, TruncatedSeries};
