//! Piecewise analytic boundary arcs and their sampled polylines.

use crate::error::{Error, Result};
use crate::quantum::Scale;
use crate::scalar::Real;

/// Identifies one analytic boundary formula.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FormulaId {
    /// Tight lower boundary of the qubit pair region.
    PairLower,
    /// Upper boundary of the qubit pair region (capped at 1).
    PairUpper,
    /// Sum-of-deviations reference bound.
    BlwStraight,
    /// Sum-of-variances reference bound.
    BlwCurved,
    /// Inner circle of a fixed-Δz slice of the orthogonal-triple region.
    TripleSliceInner,
    /// Lower boundary of the extended-qubit region, Δ(B) = Δ(A)√(1−Δ(A)²).
    ExtendedLower,
    /// Mirror image of the extended lower boundary across the diagonal.
    ExtendedMirror,
    /// Dashed qubit-subfamily boundary Δ(B) = √(1−Δ(A)²).
    ExtendedQubitSub,
    /// Gell-Mann region upper edge, Var(B) = 1.
    GmUpperFlat,
    /// Gell-Mann region upper line, Var(B) = (9 − 4x)/8.
    GmUpperLine,
    /// Gell-Mann region upper arc, Var(B) = (1 + √(1−x))/2.
    GmUpperRoot,
    /// Gell-Mann region lower arc near x = 1, Var(B) = (1 − √(1−x))/2.
    GmLowerRoot,
    /// Gell-Mann region lower parabola, Var(B) = 2x² − 11x/4 + 153/128.
    GmLowerParabola,
    /// Gell-Mann region lower line, Var(B) = (4x − 1)/8.
    GmLowerLine,
    /// Line Var(B) = 1 − 4x joining the small-x arc to the B-eigenstate point.
    GmJoinLine,
    /// Bottom of the small-x lobe, Var(B) = (1 − √(1−x))/2.
    GmLobeBottom,
    /// Top of the small-x lobe, Var(B) = (1 − √(1−4x))/2.
    GmLobeTop,
    /// Bottom edge of the detached band, Var(B) = 1 − 4x near the origin.
    GmGapLine,
    /// The hyperbola xy = C.
    QpHyperbola,
    /// A tangent line of the hyperbola at scale parameter ℓ.
    QpTangentLine,
    /// A tangent ellipse of the hyperbola at scale parameter ℓ.
    QpTangentEllipse,
}

impl FormulaId {
    pub fn name(self) -> &'static str {
        match self {
            FormulaId::PairLower => "pair-lower",
            FormulaId::PairUpper => "pair-upper",
            FormulaId::BlwStraight => "blw-straight",
            FormulaId::BlwCurved => "blw-curved",
            FormulaId::TripleSliceInner => "triple-slice-inner",
            FormulaId::ExtendedLower => "extended-lower",
            FormulaId::ExtendedMirror => "extended-mirror",
            FormulaId::ExtendedQubitSub => "extended-qubit-sub",
            FormulaId::GmUpperFlat => "gm-upper-flat",
            FormulaId::GmUpperLine => "gm-upper-line",
            FormulaId::GmUpperRoot => "gm-upper-root",
            FormulaId::GmLowerRoot => "gm-lower-root",
            FormulaId::GmLowerParabola => "gm-lower-parabola",
            FormulaId::GmLowerLine => "gm-lower-line",
            FormulaId::GmJoinLine => "gm-join-line",
            FormulaId::GmLobeBottom => "gm-lobe-bottom",
            FormulaId::GmLobeTop => "gm-lobe-top",
            FormulaId::GmGapLine => "gm-gap-line",
            FormulaId::QpHyperbola => "qp-hyperbola",
            FormulaId::QpTangentLine => "qp-tangent-line",
            FormulaId::QpTangentEllipse => "qp-tangent-ellipse",
        }
    }
}

/// One analytic boundary arc: formula, domain interval and scale tag.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurveSegment<T> {
    pub formula: FormulaId,
    pub domain: (T, T),
    pub scale: Scale,
}

impl<T: Real> CurveSegment<T> {
    pub fn new(formula: FormulaId, lo: T, hi: T, scale: Scale) -> Result<Self> {
        if !(lo <= hi) {
            return Err(Error::invariant(format!(
                "segment domain must satisfy lo ≤ hi, got [{lo}, {hi}]"
            )));
        }
        Ok(Self {
            formula,
            domain: (lo, hi),
            scale,
        })
    }

    pub fn contains_x(&self, x: T) -> bool {
        self.domain.0 <= x && x <= self.domain.1
    }
}

/// A segment together with sampled points along it.
///
/// Sampling grids are uniform in the abscissa with both endpoints included
/// exactly, so emitted files are reproducible.
#[derive(Debug, Clone, PartialEq)]
pub struct SampledCurve<T> {
    pub segment: CurveSegment<T>,
    pub points: Vec<(T, T)>,
}

impl<T: Real> SampledCurve<T> {
    /// Samples `f` on a uniform `n`-point grid over the segment's domain.
    pub fn from_fn(segment: CurveSegment<T>, n: usize, f: impl Fn(T) -> T) -> Result<Self> {
        if n < 2 {
            return Err(Error::invalid("sampling grid must have at least 2 points"));
        }
        let (lo, hi) = segment.domain;
        let step = (hi - lo) / T::from_usize(n - 1).unwrap();
        let points = (0..n)
            .map(|i| {
                // pin the last point to the exact endpoint
                let x = if i == n - 1 {
                    hi
                } else {
                    lo + step * T::from_usize(i).unwrap()
                };
                (x, f(x))
            })
            .collect();
        Ok(Self { segment, points })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sampling_includes_exact_endpoints() {
        let seg = CurveSegment::new(FormulaId::GmUpperFlat, 0.0_f64, 0.25, Scale::Variance)
            .unwrap();
        let c = SampledCurve::from_fn(seg, 7, |_| 1.0).unwrap();
        assert_eq!(c.points.first().unwrap().0, 0.0);
        assert_eq!(c.points.last().unwrap().0, 0.25);
        assert_eq!(c.points.len(), 7);
    }

    #[test]
    fn invalid_domain_rejected() {
        assert!(CurveSegment::new(FormulaId::GmUpperFlat, 1.0_f64, 0.0, Scale::Variance).is_err());
        let seg =
            CurveSegment::new(FormulaId::GmUpperFlat, 0.0_f64, 1.0, Scale::Variance).unwrap();
        assert!(SampledCurve::from_fn(seg, 1, |_| 0.0).is_err());
    }
}
