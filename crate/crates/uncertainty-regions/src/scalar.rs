//! Scalar abstraction for the analytic core.
//!
//! All closed-form geometry and region formulas are generic over [`Real`],
//! so the same code paths can be instantiated at `f64` (the default used by
//! the oracle, the CLI and the acceptance suite) or `f32`. Tolerances scale
//! with the precision of the scalar type.

use std::fmt;
use std::iter::Sum;

use num_traits::{Float, FromPrimitive, NumAssign};

/// Floating-point scalar usable by the analytic core.
pub trait Real:
    Float + FromPrimitive + NumAssign + Sum + fmt::Debug + fmt::Display + Copy + 'static
{
    /// Tolerance for algebraic identities evaluated on exact inputs.
    fn tol_algebraic() -> Self;

    /// Tolerance for positivity / eigenvalue-flavoured checks.
    fn tol_eigen() -> Self;

    /// Shorthand for lifting an `f64` literal into `Self`.
    #[inline]
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("literal representable in scalar type")
    }

    #[inline]
    fn half() -> Self {
        Self::lit(0.5)
    }

    #[inline]
    fn two() -> Self {
        Self::lit(2.0)
    }
}

impl Real for f64 {
    #[inline]
    fn tol_algebraic() -> Self {
        1e-12
    }
    #[inline]
    fn tol_eigen() -> Self {
        1e-10
    }
}

impl Real for f32 {
    #[inline]
    fn tol_algebraic() -> Self {
        1e-5
    }
    #[inline]
    fn tol_eigen() -> Self {
        1e-4
    }
}

/// Clamp a value that should be non-negative but may carry floating-point
/// noise slightly below zero. Values below `-tol_algebraic` are left alone so
/// genuine contract violations stay visible.
#[inline]
pub fn clamp_nonneg<T: Real>(x: T) -> T {
    if x < T::zero() && x > -T::tol_algebraic() {
        T::zero()
    } else {
        x
    }
}
