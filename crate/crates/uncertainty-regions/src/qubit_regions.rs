//! Closed-form qubit uncertainty regions: the tight pair boundaries, the
//! orthogonal-triple region, the reference lower bounds, and the vector
//! identity suite behind the Schrödinger equality.

use crate::curve::{CurveSegment, FormulaId, SampledCurve};
use crate::error::{Error, Result};
use crate::quantum::{
    qubit_schrodinger_bound, qubit_variance, QubitObservable, QubitState, Scale, UncertaintyPoint,
    Vec3,
};
use crate::scalar::Real;

/// A canonicalized pair of sharp qubit observables.
///
/// If the Bloch vectors subtend an obtuse angle, `b` is flipped to `−b`
/// before anything else: relabelling the outcomes of `B` leaves every
/// variance unchanged, so the region is invariant and the cached cosine is
/// always non-negative.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QubitPair<T> {
    a: Vec3<T>,
    b: Vec3<T>,
    cos: T,
    sin: T,
}

impl<T: Real> QubitPair<T> {
    pub fn new(a: Vec3<T>, b: Vec3<T>) -> Result<Self> {
        if !a.is_unit() || !b.is_unit() {
            return Err(Error::invariant("pair Bloch vectors must be unit length"));
        }
        let b = if a.dot(b) < T::zero() { -b } else { b };
        let cos = a.dot(b);
        let sin = a.cross(b).norm();
        let pythagoras = (cos * cos + sin * sin - T::one()).abs();
        if pythagoras > T::tol_eigen() {
            return Err(Error::invariant("pair cosine/sine are inconsistent"));
        }
        Ok(Self { a, b, cos, sin })
    }

    /// Pair at angle `θ` in the xy-plane: `a = x̂`, `b = (cosθ, sinθ, 0)`.
    pub fn from_angle(theta: T) -> Result<Self> {
        let a = Vec3::new(T::one(), T::zero(), T::zero());
        let b = Vec3::new(theta.cos(), theta.sin(), T::zero());
        // renormalize to absorb trig roundoff
        let b = b.normalized().expect("trig direction is non-zero");
        Self::new(a, b)
    }

    pub fn a(&self) -> Vec3<T> {
        self.a
    }

    pub fn b(&self) -> Vec3<T> {
        self.b
    }

    /// `a·b = cos θ` (non-negative after canonicalization).
    pub fn cos_angle(&self) -> T {
        self.cos
    }

    /// `‖a×b‖ = sin θ`.
    pub fn sin_angle(&self) -> T {
        self.sin
    }

    /// In-plane unit vector orthogonal to `a` on the side of `b`.
    pub fn a_perp(&self) -> Vec3<T> {
        let raw = self.b - self.a.scale(self.cos);
        raw.normalized().unwrap_or_else(|| {
            // degenerate pair (θ = 0): any perpendicular direction works
            let probe = if self.a.x.abs() < T::half() {
                Vec3::new(T::one(), T::zero(), T::zero())
            } else {
                Vec3::new(T::zero(), T::one(), T::zero())
            };
            self.a.cross(probe).normalized().expect("probe not parallel")
        })
    }

    pub fn observables(&self) -> (QubitObservable<T>, QubitObservable<T>) {
        (
            QubitObservable::new(self.a).expect("a is unit"),
            QubitObservable::new(self.b).expect("b is unit"),
        )
    }
}

fn check_unit_interval<T: Real>(name: &str, v: T) -> Result<()> {
    if v < T::zero() || v > T::one() {
        return Err(Error::invalid(format!("{name} must lie in [0, 1], got {v}")));
    }
    Ok(())
}

/// Tight lower boundary: the minimum of Δ(B) over all states with
/// Δ(A) = `d_a`, equal to `|d_a cosθ − sinθ √(1−d_a²)|`.
pub fn min_sdev_b<T: Real>(pair: &QubitPair<T>, d_a: T) -> Result<T> {
    check_unit_interval("Δ(A)", d_a)?;
    let rest = (T::one() - d_a * d_a).max(T::zero()).sqrt();
    Ok((d_a * pair.cos - pair.sin * rest).abs())
}

/// Upper boundary: `d_a cosθ + sinθ √(1−d_a²)` while Δ(A) < cosθ, then 1.
pub fn max_sdev_b<T: Real>(pair: &QubitPair<T>, d_a: T) -> Result<T> {
    check_unit_interval("Δ(A)", d_a)?;
    if d_a < pair.cos {
        let rest = (T::one() - d_a * d_a).max(T::zero()).sqrt();
        Ok(d_a * pair.cos + pair.sin * rest)
    } else {
        Ok(T::one())
    }
}

/// Membership in the pair uncertainty region (standard-deviation scale).
pub fn pair_region_contains<T: Real>(
    pair: &QubitPair<T>,
    point: &UncertaintyPoint<T>,
) -> Result<bool> {
    if point.scale != Scale::StdDev {
        return Err(Error::invalid(
            "pair region membership expects standard-deviation scale",
        ));
    }
    let (u, v) = (point.u1, point.u2);
    if u < T::zero() || u > T::one() || v < T::zero() || v > T::one() {
        return Ok(false);
    }
    Ok(min_sdev_b(pair, u)? <= v && v <= max_sdev_b(pair, u)?)
}

/// Reference bound `Δ(A) + Δ(B) ≥ ½‖[A,B]‖ = sinθ`.
pub fn blw_straight_bound<T: Real>(pair: &QubitPair<T>) -> T {
    pair.sin
}

/// Reference bound `Var(A) + Var(B) ≥ 1 − √(1 − ¼‖[A,B]‖²) = 1 − |cosθ|`.
pub fn blw_curved_bound<T: Real>(pair: &QubitPair<T>) -> T {
    T::one() - pair.cos.abs()
}

/// Membership in the (σx, σy, σz) triple region:
/// `Δx² + Δy² + Δz² ≥ 2` inside the unit cube.
pub fn triple_region_contains<T: Real>(dx: T, dy: T, dz: T) -> Result<bool> {
    check_unit_interval("Δ(σx)", dx)?;
    check_unit_interval("Δ(σy)", dy)?;
    check_unit_interval("Δ(σz)", dz)?;
    Ok(dx * dx + dy * dy + dz * dz >= T::two())
}

/// Residuals of the three equivalent cross-product identities.
///
/// The first is the Pythagoras split of `‖a×b‖²‖r‖²`, the second its
/// sum-of-variances rearrangement, the third the product-minus-bound form
/// whose right side is `‖a×b‖²(1−‖r‖²)`.
pub fn lagrange_identity_residuals<T: Real>(a: Vec3<T>, b: Vec3<T>, r: Vec3<T>) -> (T, T, T) {
    let axb = a.cross(b);
    let s2 = axb.norm_sq();
    let ar = a.dot(r);
    let br = b.dot(r);
    let ab = a.dot(b);
    let cr = axb.dot(r);
    let r2 = r.norm_sq();
    let one = T::one();
    let two = T::two();

    let id1 = s2 * r2 - (cr * cr + axb.cross(r).norm_sq());

    let lhs2 = (one - ar * ar) + (one - br * br) + (s2 - cr * cr);
    let rhs2 = s2 * (one - r2) + two * (one - ab * ar * br);
    let id2 = lhs2 - rhs2;

    let cov = ab - ar * br;
    let lhs3 = (one - ar * ar) * (one - br * br) - (cr * cr + cov * cov);
    let id3 = lhs3 - s2 * (one - r2);

    (id1.abs(), id2.abs(), id3.abs())
}

/// For a unit `r` in the plane of `a` and `b`, `‖a×b‖ = ‖x − y‖` with
/// `x = r − a(a·r)`, `y = r − b(b·r)`. Returns the absolute defect.
pub fn planar_decomposition_check<T: Real>(a: Vec3<T>, b: Vec3<T>, r: Vec3<T>) -> Result<T> {
    if !r.is_unit() {
        return Err(Error::invalid("r must be a unit vector"));
    }
    let axb = a.cross(b);
    let s = axb.norm();
    if s > T::zero() {
        let out_of_plane = (axb.dot(r) / s).abs();
        if out_of_plane > T::tol_eigen() {
            return Err(Error::invalid(format!(
                "r must lie in span{{a, b}}, out-of-plane component {out_of_plane}"
            )));
        }
    }
    let x = r - a.scale(a.dot(r));
    let y = r - b.scale(b.dot(r));
    Ok((s - (x - y).norm()).abs())
}

/// Residual of the equality `Var(A)Var(B) − S(A,B,ρ) = sin²θ (1−‖r‖²)`.
pub fn schrodinger_equality_residual<T: Real>(pair: &QubitPair<T>, state: &QubitState<T>) -> T {
    let (obs_a, obs_b) = pair.observables();
    let va = qubit_variance(&obs_a, state);
    let vb = qubit_variance(&obs_b, state);
    let s = qubit_schrodinger_bound(&obs_a, &obs_b, state);
    let r2 = state.bloch().norm_sq();
    (va * vb - s - pair.sin * pair.sin * (T::one() - r2)).abs()
}

/// Sampled boundary polylines for the pair region: the tight lower and upper
/// boundaries over Δ(A) ∈ [0, 1] plus the two reference bound curves.
pub fn pair_boundary_segments<T: Real>(
    pair: &QubitPair<T>,
    grid_n: usize,
) -> Result<Vec<SampledCurve<T>>> {
    if grid_n < 2 {
        return Err(Error::invalid("grid_n must be at least 2"));
    }
    let one = T::one();
    let zero = T::zero();
    let mut out = Vec::with_capacity(4);

    let lower = CurveSegment::new(FormulaId::PairLower, zero, one, Scale::StdDev)?;
    out.push(SampledCurve::from_fn(lower, grid_n, |x| {
        min_sdev_b(pair, x).expect("x in domain")
    })?);

    let upper = CurveSegment::new(FormulaId::PairUpper, zero, one, Scale::StdDev)?;
    out.push(SampledCurve::from_fn(upper, grid_n, |x| {
        max_sdev_b(pair, x).expect("x in domain")
    })?);

    // Δ(A) + Δ(B) = sinθ
    let s = blw_straight_bound(pair);
    let straight = CurveSegment::new(FormulaId::BlwStraight, zero, s, Scale::StdDev)?;
    out.push(SampledCurve::from_fn(straight, grid_n, move |x| s - x)?);

    // Var(A) + Var(B) = 1 − |cosθ|, drawn in standard-deviation coordinates
    let level = blw_curved_bound(pair);
    let reach = level.max(zero).sqrt();
    let curved = CurveSegment::new(FormulaId::BlwCurved, zero, reach, Scale::StdDev)?;
    out.push(SampledCurve::from_fn(curved, grid_n, move |x| {
        (level - x * x).max(zero).sqrt()
    })?);

    Ok(out)
}
