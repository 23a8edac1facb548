//! Exact finite-field hypergeometric functions.
//!
//! Character sums over F_q take values in Z[ζ_(q-1)]; this crate evaluates
//! them exactly in the power basis modulo the cyclotomic polynomial, so every
//! identity check is an equality test on integer vectors.
//!
//! * [`field`]: canonical F_q tables (log/exp, addition).
//! * [`cyclo`]: the ring Z[ζ_n].
//! * [`chars`]: multiplicative characters and the [`Fq`] context.
//! * [`hyper`]: Jacobi sums, binomials, ₂F₁, F₁ and F_D^(n).
//! * [`identities`]: a registry of identities and a verification engine.
//! * [`classical`]: complex-valued counterparts for numerical comparison.

pub mod chars;
pub mod classical;
pub mod cyclo;
pub mod error;
pub mod field;
pub mod hyper;
pub mod identities;

pub use chars::{Char, Fq};
pub use cyclo::{CycInt, CycloRing};
pub use error::{Error, Result};
pub use field::{Elem, FieldTable};
pub use hyper::{FdInstance, GenFnInstance, GenFnVariant, Normalization, Scaled};
