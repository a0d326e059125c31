//! Explicit constants for a zero-free region of the Riemann zeta function of
//! Vinogradov–Korobov shape, together with the numerical machinery used to
//! re-derive and certify them.
//!
//! Everything numeric is generic over [`Real`]; [`Mp`] is the
//! multiprecision type used for the reported values.

// Guards are written `!(x > 0)` so that NaN fails them.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod bernoulli;
pub mod complexcheck;
pub mod cplx;
pub mod error;
pub mod mollifier;
pub mod mp;
pub mod quad;
pub mod report;
pub mod roots;
pub mod scalar;
pub mod suites;
pub mod theorems;
pub mod trig;
pub mod zeros;
pub mod zetatools;

pub use error::{Error, Result};
pub use mp::Mp;
pub use scalar::{Real, Scalar};

pub type Kernel = mollifier::MollifierKernel<Mp>;
pub type KernelF64 = mollifier::MollifierKernel<f64>;
pub type Coefficients = trig::TrigCoefficients<Mp>;
pub type Complex = cplx::C<Mp>;
