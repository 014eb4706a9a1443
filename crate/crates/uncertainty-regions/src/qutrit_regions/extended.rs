//! Qubit observables embedded into a third dimension by a zero block.
//!
//! States of the block form `w·ρ₂ ⊕ (1−w)` reach every attainable variance
//! pair, so the whole region analysis runs over `(w, r_a, r_b)`.

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Block-state parameters: weight `w` of the qubit block and in-plane Bloch
/// components `(r_a, r_b)` of its Bloch vector.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExtendedPairParams<T> {
    pub w: T,
    pub r_a: T,
    pub r_b: T,
}

impl<T: Real> ExtendedPairParams<T> {
    pub fn new(w: T, r_a: T, r_b: T) -> Result<Self> {
        if w < T::zero() || w > T::one() {
            return Err(Error::invariant(format!("w must lie in [0, 1], got {w}")));
        }
        if r_a * r_a + r_b * r_b > T::one() + T::tol_algebraic() {
            return Err(Error::invariant("(r_a, r_b) must lie in the closed unit disk"));
        }
        Ok(Self { w, r_a, r_b })
    }
}

/// `(Var(A), Var(B)) = (w − w²(a·r)², w − w²(b·r)²)` where
/// `b·r = cosAB·r_a + sinAB·r_b`. For orthogonal Bloch vectors this reduces
/// to `(w − w² r_a², w − w² r_b²)`.
pub fn extended_variances<T: Real>(p: &ExtendedPairParams<T>, cos_ab: T) -> Result<(T, T)> {
    if cos_ab.abs() > T::one() + T::tol_algebraic() {
        return Err(Error::invalid("cosAB must lie in [−1, 1]"));
    }
    let sin_ab = (T::one() - cos_ab * cos_ab).max(T::zero()).sqrt();
    let ar = p.r_a;
    let br = cos_ab * p.r_a + sin_ab * p.r_b;
    let w = p.w;
    Ok((w - w * w * ar * ar, w - w * w * br * br))
}

/// Both block weights solving `Var(A) = X` at `u = r_a²`:
/// `w± = (1 ± √(1−4Xu)) / (2u)`; the `+` root diverges as `u → 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WSolutions<T> {
    pub minus: T,
    /// `None` encodes the `+∞` limit at `u = 0`.
    pub plus: Option<T>,
}

pub fn extended_w_solutions<T: Real>(x: T, u: T) -> Result<WSolutions<T>> {
    if x < T::zero() || x > T::one() || u < T::zero() || u > T::one() {
        return Err(Error::invalid("X and u must lie in [0, 1]"));
    }
    if u == T::zero() {
        return Ok(WSolutions {
            minus: x,
            plus: None,
        });
    }
    let disc = T::one() - T::lit(4.0) * x * u;
    if disc < T::zero() {
        return Err(Error::infeasible(
            "1 − 4Xu < 0: the block weight would be complex",
        ));
    }
    let root = disc.sqrt();
    let denom = T::two() * u;
    Ok(WSolutions {
        minus: (T::one() - root) / denom,
        plus: Some((T::one() + root) / denom),
    })
}

/// Minimum of Var(B) at fixed Var(A) = X: `X(1−X)`, reached at `r_a² = 0`.
pub fn extended_min_var_b<T: Real>(x: T) -> Result<T> {
    if x < T::zero() || x > T::one() {
        return Err(Error::invalid("X must lie in [0, 1]"));
    }
    Ok(x * (T::one() - x))
}

/// Membership in the extended-pair region (standard-deviation scale):
/// `Δ(B) ≥ Δ(A)√(1−Δ(A)²)` together with the mirrored condition.
pub fn extended_region_contains<T: Real>(d_a: T, d_b: T) -> Result<bool> {
    for v in [d_a, d_b] {
        if v < T::zero() || v > T::one() {
            return Err(Error::invalid("standard deviations must lie in [0, 1]"));
        }
    }
    let lower_b = d_a * (T::one() - d_a * d_a).max(T::zero()).sqrt();
    let lower_a = d_b * (T::one() - d_b * d_b).max(T::zero()).sqrt();
    Ok(d_b >= lower_b - T::tol_algebraic() && d_a >= lower_a - T::tol_algebraic())
}

/// Closed-form derivatives `w₋'(u)` and `Y₋'(u)` used to witness that the
/// minimum over `u = r_a²` sits at `u = 0`.
pub fn extended_monotonicity_witness<T: Real>(x: T, u: T) -> Result<(T, T)> {
    if u <= T::zero() {
        return Err(Error::invalid("u must be strictly positive"));
    }
    let disc = T::one() - T::lit(4.0) * x * u;
    if disc <= T::zero() {
        return Err(Error::infeasible(
            "derivative formulas require 1 − 4Xu > 0",
        ));
    }
    let w = extended_w_solutions(x, u)?.minus;
    let denom = u * disc.sqrt();
    let w_prime = (w - x) / denom;
    let y_prime = T::two() * (w - x) * (T::one() - w) / denom;
    Ok((w_prime, y_prime))
}
