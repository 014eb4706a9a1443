//! Uncertainty regions for pairs and triples of quantum observables in
//! dimensions two and three.
//!
//! The analytic core (states, observables, region boundaries, identities) is
//! generic over the floating-point scalar through the [`Real`] trait, so the
//! same formulas run in `f32` and `f64`. The oracle scans, plotting and
//! verification layers are `f64` only. Double-precision aliases for the core
//! types live at the crate root.

pub mod curve;
pub mod error;
pub mod oracle;
pub mod plot;
pub mod quantum;
pub mod qubit_regions;
pub mod qutrit_regions;
pub mod scalar;
pub mod verify;

pub use error::{Error, Result};
pub use scalar::Real;

pub type Vec3F64 = quantum::Vec3<f64>;
pub type QubitObservableF64 = quantum::QubitObservable<f64>;
pub type QubitStateF64 = quantum::QubitState<f64>;
pub type HermitianMatrix3F64 = quantum::HermitianMatrix3<f64>;
pub type QutritStateF64 = quantum::QutritState<f64>;
pub type UncertaintyPointF64 = quantum::UncertaintyPoint<f64>;
pub type ObservableF64 = quantum::Observable<f64>;
pub type DensityStateF64 = quantum::DensityState<f64>;
pub type CurveSegmentF64 = curve::CurveSegment<f64>;
pub type SampledCurveF64 = curve::SampledCurve<f64>;
pub type QubitPairF64 = qubit_regions::QubitPair<f64>;
pub type ExtendedPairParamsF64 = qutrit_regions::ExtendedPairParams<f64>;
pub type GellMannStateParamsF64 = qutrit_regions::GellMannStateParams<f64>;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn aliases_compile_and_interoperate() {
        let pair = QubitPairF64::from_angle(std::f64::consts::FRAC_PI_4).unwrap();
        let d = qubit_regions::min_sdev_b(&pair, 1.0).unwrap();
        assert!((d - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-12);
    }

    #[test]
    fn core_is_generic_over_f32() {
        let pair = qubit_regions::QubitPair::<f32>::from_angle(std::f32::consts::FRAC_PI_4)
            .unwrap();
        let d = qubit_regions::min_sdev_b(&pair, 1.0f32).unwrap();
        assert!((d - std::f32::consts::FRAC_1_SQRT_2).abs() < 1e-5);
    }
}
