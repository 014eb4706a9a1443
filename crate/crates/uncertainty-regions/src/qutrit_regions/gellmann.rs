//! The qutrit pair A = diag(1, −1, 0), B = the symmetric 1↔3 flip.
//!
//! Everything here works in variance scale; conversion to standard deviation
//! belongs to the plotting layer. States are parametrised by
//! `(ρ11, ρ33, ρ13)` with `ρ12 = ρ23 = 0`, which reaches the whole region.
//!
//! The published list of bounding curves gives the segment between
//! `x = 15/64` and `x = 1/4` as `1 − x`; that line lies strictly inside the
//! region (its own neighbours fail to meet it, and dense rasterization of the
//! feasible states puts the lower edge elsewhere). The consistent segment,
//! which joins `(15/64, 1/16)` on the small-x arc to the B-eigenstate point
//! `(1/4, 0)`, is `1 − 4x`, and that is what this module uses.

use crate::curve::{CurveSegment, FormulaId};
use crate::error::{Error, Result};
use crate::quantum::Scale;
use crate::scalar::{clamp_nonneg, Real};

/// Reduced-state parameters `ρ11, ρ33, ρ13 = re13 + i·im13` (with
/// `ρ22 = 1 − ρ11 − ρ33` implied).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GellMannStateParams<T> {
    pub rho11: T,
    pub rho33: T,
    pub re13: T,
    pub im13: T,
}

impl<T: Real> GellMannStateParams<T> {
    pub fn new(rho11: T, rho33: T, re13: T, im13: T) -> Result<Self> {
        let tol = T::tol_algebraic();
        if rho11 < -tol || rho33 < -tol || rho11 + rho33 > T::one() + tol {
            return Err(Error::invariant(
                "diagonal entries must be non-negative with ρ11 + ρ33 ≤ 1",
            ));
        }
        if re13 * re13 + im13 * im13 > rho11 * rho33 + tol {
            return Err(Error::invariant("|ρ13|² must not exceed ρ11·ρ33"));
        }
        Ok(Self {
            rho11,
            rho33,
            re13,
            im13,
        })
    }
}

/// `(Var(A), Var(B)) = (ρ11 + ρ22 − (ρ11 − ρ22)², ρ11 + ρ33 − 4(Re ρ13)²)`.
pub fn gm_variances<T: Real>(p: &GellMannStateParams<T>) -> (T, T) {
    let rho22 = T::one() - p.rho11 - p.rho33;
    let d = p.rho11 - rho22;
    let four = T::lit(4.0);
    (
        clamp_nonneg(p.rho11 + rho22 - d * d),
        clamp_nonneg(p.rho11 + p.rho33 - four * p.re13 * p.re13),
    )
}

/// Which root of the quadratic for `ρ33` at fixed `Var(A) = x` is meant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GmBranch {
    Plus,
    Minus,
}

/// `ρ33± = ½(1 − 4ρ11 ± √(1 + 8ρ11 − 4x))`.
pub fn gm_rho33<T: Real>(x: T, rho11: T, branch: GmBranch) -> Result<T> {
    let four = T::lit(4.0);
    let disc = T::one() + T::lit(8.0) * rho11 - four * x;
    if disc < T::zero() {
        return Err(Error::infeasible("1 + 8ρ11 − 4x < 0: ρ33 would be complex"));
    }
    let root = disc.sqrt();
    let base = T::one() - four * rho11;
    Ok(match branch {
        GmBranch::Plus => T::half() * (base + root),
        GmBranch::Minus => T::half() * (base - root),
    })
}

/// Feasible `ρ11` intervals at fixed `Var(A) = x` for the chosen branch, as
/// forced by positivity of the state.
pub fn gm_feasible_rho11<T: Real>(x: T, branch: GmBranch) -> Vec<(T, T)> {
    let quarter = T::lit(0.25);
    let three_quarters = T::lit(0.75);
    let s1 = (T::one() - x).max(T::zero()).sqrt();
    match branch {
        GmBranch::Plus => {
            if x <= quarter {
                let s4 = (T::one() - T::lit(4.0) * x).max(T::zero()).sqrt();
                vec![
                    (T::zero(), T::half() * (T::one() - s4)),
                    (T::half() * (T::one() + s4), T::half() * (T::one() + s1)),
                ]
            } else if x <= three_quarters {
                vec![(
                    (T::lit(4.0) * x - T::one()) / T::lit(8.0),
                    T::half() * (T::one() + s1),
                )]
            } else {
                vec![(
                    T::half() * (T::one() - s1),
                    T::half() * (T::one() + s1),
                )]
            }
        }
        GmBranch::Minus => {
            if x <= quarter {
                vec![(T::zero(), T::half() * (T::one() - s1))]
            } else if x <= three_quarters {
                vec![(
                    (T::lit(4.0) * x - T::one()) / T::lit(8.0),
                    T::half() * (T::one() - s1),
                )]
            } else {
                vec![]
            }
        }
    }
}

/// Stationary points of Var(B) over `ρ11` in the minimising case
/// `(Re ρ13)² = ρ11 ρ33⁺`, with their validity on the `+` branch.
///
/// Returned as `(ρ11, valid)` for every real root of the cubic; `valid` marks
/// the window on which the root actually solves the derivative condition and
/// yields a state.
pub fn gm_stationary_rho11_min<T: Real>(x: T) -> Vec<(T, bool)> {
    let tol = T::tol_algebraic();
    let mut out = Vec::new();
    let sixteen = T::lit(16.0);
    let rho0 = (sixteen * x - T::lit(3.0)) / T::lit(32.0);
    out.push((rho0, x >= T::lit(3.0 / 16.0) - tol && x <= T::lit(15.0 / 16.0) + tol));
    let disc = T::lit(13.0) - sixteen * x;
    if disc >= T::zero() {
        let root = disc.sqrt();
        let rho_p = (T::lit(5.0) + root) / sixteen;
        out.push((
            rho_p,
            x >= T::lit(0.09) - tol && x <= T::lit(13.0 / 16.0) + tol,
        ));
        let rho_m = (T::lit(5.0) - root) / sixteen;
        let at_exceptional = (x - T::lit(9.0 / 16.0)).abs() <= tol;
        out.push((
            rho_m,
            at_exceptional || (x >= T::lit(0.75) - tol && x <= T::lit(13.0 / 16.0) + tol),
        ));
    }
    out
}

/// Stationary point of Var(B) in the maximising case `Re ρ13 = 0`:
/// `ρ11 = (3 + 4x)/8`, always admissible on the `+` branch.
pub fn gm_stationary_rho11_max<T: Real>(x: T) -> T {
    (T::lit(3.0) + T::lit(4.0) * x) / T::lit(8.0)
}

/// Evaluates one of the Gell-Mann boundary formulas at abscissa `x`.
pub fn gm_segment_value<T: Real>(formula: FormulaId, x: T) -> Result<T> {
    let four = T::lit(4.0);
    let eight = T::lit(8.0);
    let s1 = (T::one() - x).max(T::zero()).sqrt();
    Ok(match formula {
        FormulaId::GmUpperFlat => T::one(),
        FormulaId::GmUpperLine => (T::lit(9.0) - four * x) / eight,
        FormulaId::GmUpperRoot => T::half() * (T::one() + s1),
        FormulaId::GmLowerRoot | FormulaId::GmLobeBottom => T::half() * (T::one() - s1),
        FormulaId::GmLowerParabola => {
            T::two() * x * x - T::lit(2.75) * x + T::lit(153.0 / 128.0)
        }
        FormulaId::GmLowerLine => (four * x - T::one()) / eight,
        FormulaId::GmJoinLine | FormulaId::GmGapLine => T::one() - four * x,
        FormulaId::GmLobeTop => {
            T::half() * (T::one() - (T::one() - four * x).max(T::zero()).sqrt())
        }
        _ => {
            return Err(Error::invalid(format!(
                "{} is not a Gell-Mann boundary formula",
                formula.name()
            )))
        }
    })
}

/// The ten bounding curve segments, in the published order.
pub fn gm_boundary_segments<T: Real>() -> Vec<CurveSegment<T>> {
    let seg = |formula, lo: f64, hi: f64| {
        CurveSegment::new(formula, T::lit(lo), T::lit(hi), Scale::Variance).unwrap()
    };
    vec![
        seg(FormulaId::GmUpperFlat, 0.0, 0.25),
        seg(FormulaId::GmUpperLine, 0.25, 0.75),
        seg(FormulaId::GmUpperRoot, 0.75, 1.0),
        seg(FormulaId::GmLowerRoot, 15.0 / 16.0, 1.0),
        seg(FormulaId::GmLowerParabola, 13.0 / 16.0, 15.0 / 16.0),
        seg(FormulaId::GmLowerLine, 0.25, 13.0 / 16.0),
        seg(FormulaId::GmJoinLine, 15.0 / 64.0, 0.25),
        seg(FormulaId::GmLobeBottom, 0.0, 15.0 / 64.0),
        seg(FormulaId::GmLobeTop, 0.0, 3.0 / 16.0),
        seg(FormulaId::GmGapLine, 0.0, 3.0 / 16.0),
    ]
}

/// Attainable Var(B) intervals at fixed `Var(A) = x`, smallest first.
///
/// For `x` below 3/16 the region splits into two lobes separated by a band of
/// unattainable values; the gap closes at `(3/16, 1/4)`.
pub fn gm_y_intervals<T: Real>(x: T) -> Vec<(T, T)> {
    if x < T::zero() || x > T::one() {
        return vec![];
    }
    let v = |f| gm_segment_value::<T>(f, x).unwrap();
    if x <= T::lit(3.0 / 16.0) {
        vec![
            (v(FormulaId::GmLobeBottom), v(FormulaId::GmLobeTop)),
            (v(FormulaId::GmGapLine), T::one()),
        ]
    } else if x <= T::lit(15.0 / 64.0) {
        vec![(v(FormulaId::GmLobeBottom), T::one())]
    } else if x <= T::lit(0.25) {
        vec![(v(FormulaId::GmJoinLine), T::one())]
    } else if x <= T::lit(0.75) {
        vec![(v(FormulaId::GmLowerLine), v(FormulaId::GmUpperLine))]
    } else if x <= T::lit(13.0 / 16.0) {
        vec![(v(FormulaId::GmLowerLine), v(FormulaId::GmUpperRoot))]
    } else if x <= T::lit(15.0 / 16.0) {
        vec![(v(FormulaId::GmLowerParabola), v(FormulaId::GmUpperRoot))]
    } else {
        vec![(v(FormulaId::GmLowerRoot), v(FormulaId::GmUpperRoot))]
    }
}

/// Global minimum of Var(B) at `Var(A) = x` (lower envelope of the union of
/// lobes).
pub fn gm_min_var_b<T: Real>(x: T) -> T {
    gm_y_intervals(x)
        .first()
        .map(|iv| iv.0)
        .unwrap_or_else(T::nan)
}

/// Global maximum of Var(B) at `Var(A) = x`.
pub fn gm_max_var_b<T: Real>(x: T) -> T {
    gm_y_intervals(x)
        .last()
        .map(|iv| iv.1)
        .unwrap_or_else(T::nan)
}

/// Membership in the Gell-Mann uncertainty region (variance scale), with a
/// 1e-9 cushion on the boundary.
pub fn gm_region_contains<T: Real>(x: T, y: T) -> bool {
    let tol = T::lit(1e-9);
    gm_y_intervals(x)
        .iter()
        .any(|&(lo, hi)| y >= lo - tol && y <= hi + tol)
}

/// `(gm_min_var_b(x), f(x))` where `f` is the best lower bound on Var(B) the
/// Schrödinger relation can give at `Var(A) = x`.
///
/// Valid on `x ∈ [3/4, 1]`, where only the `ρ33⁺` branch contributes and the
/// feasible `ρ11` interval is `[½ − √(1−x)/2, ½ + √(1−x)/2]`. The phase
/// parameter `λ` enters linearly, so only `λ ∈ {0, 1}` is searched; the `ρ11`
/// maximisation is a dense grid with local refinement.
pub fn gm_schrodinger_gap<T: Real>(x: T) -> Result<(T, T)> {
    if x < T::lit(0.75) || x > T::one() {
        return Err(Error::invalid(
            "the Schrödinger-gap window is Var(A) ∈ [3/4, 1]",
        ));
    }
    let half_span = T::half() * (T::one() - x).max(T::zero()).sqrt();
    let (lo, hi) = (T::half() - half_span, T::half() + half_span);
    let objective = |rho11: T| -> T {
        let disc = (T::one() + T::lit(8.0) * rho11 - T::lit(4.0) * x).max(T::zero());
        let root = disc.sqrt();
        let rho33 = T::half() * (T::one() - T::lit(4.0) * rho11 + root);
        let prod = clamp_nonneg(rho11 * rho33);
        let factor = T::lit(4.0) - T::two() * root;
        // λ = 0 keeps factor², λ = 1 keeps 1
        prod * (factor * factor).max(T::one())
    };
    let n = 2000usize;
    let mut best_x = lo;
    let mut best = T::neg_infinity();
    let mut window = (lo, hi);
    for _ in 0..4 {
        let (a, b) = window;
        let step = (b - a) / T::from_usize(n).unwrap();
        for i in 0..=n {
            let r = if i == n {
                b
            } else {
                a + step * T::from_usize(i).unwrap()
            };
            let v = objective(r);
            if v > best {
                best = v;
                best_x = r;
            }
        }
        window = ((best_x - step).max(lo), (best_x + step).min(hi));
        if window.1 - window.0 <= T::tol_algebraic() {
            break;
        }
    }
    let f = if x == T::one() { T::zero() } else { best / x };
    Ok((gm_min_var_b(x), f))
}
