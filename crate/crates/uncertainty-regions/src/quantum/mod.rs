//! Foundational state and observable representations together with their
//! moments (expectation, variance), commutator algebra and the Schrödinger
//! bound functional.
//!
//! All types are immutable values and all operations are pure functions.

mod qubit;
mod qutrit;
mod vec3;

pub use qubit::{
    bloch_to_matrix, matrix_to_bloch, qubit_anticommutator_expectation,
    qubit_commutator_expectation, qubit_expectation, qubit_schrodinger_bound, qubit_variance,
    Matrix2, QubitObservable, QubitState,
};
pub use qutrit::{
    qutrit_anticommutator_expectation, qutrit_commutator_expectation, qutrit_expectation,
    qutrit_schrodinger_bound, qutrit_variance, HermitianMatrix3, QutritState,
};
pub use vec3::Vec3;

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Uncertainty axis scale.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Scale {
    StdDev,
    Variance,
}

impl Scale {
    pub fn label(self) -> &'static str {
        match self {
            Scale::StdDev => "stddev",
            Scale::Variance => "variance",
        }
    }
}

/// A pair of uncertainty values for two observables, tagged with its scale.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UncertaintyPoint<T> {
    pub u1: T,
    pub u2: T,
    pub scale: Scale,
}

impl<T: Real> UncertaintyPoint<T> {
    pub fn new(u1: T, u2: T, scale: Scale) -> Result<Self> {
        if u1 < T::zero() || u2 < T::zero() {
            return Err(Error::invariant("uncertainty values must be non-negative"));
        }
        Ok(Self { u1, u2, scale })
    }

    pub fn std_dev(u1: T, u2: T) -> Result<Self> {
        Self::new(u1, u2, Scale::StdDev)
    }

    pub fn variance(u1: T, u2: T) -> Result<Self> {
        Self::new(u1, u2, Scale::Variance)
    }
}

/// A measurable quantity in either of the two supported dimensions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Observable<T> {
    Qubit(QubitObservable<T>),
    Qutrit(HermitianMatrix3<T>),
}

/// A quantum state in either of the two supported dimensions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum DensityState<T> {
    Qubit(QubitState<T>),
    Qutrit(QutritState<T>),
}

impl<T> Observable<T> {
    fn dim(&self) -> usize {
        match self {
            Observable::Qubit(_) => 2,
            Observable::Qutrit(_) => 3,
        }
    }
}

impl<T> DensityState<T> {
    fn dim(&self) -> usize {
        match self {
            DensityState::Qubit(_) => 2,
            DensityState::Qutrit(_) => 3,
        }
    }
}

fn mismatch<T>(obs: &Observable<T>, state: &DensityState<T>) -> Error {
    Error::DimensionMismatch {
        observable: obs.dim(),
        state: state.dim(),
    }
}

/// `⟨A⟩ = tr[ρA]`.
pub fn expectation<T: Real>(obs: &Observable<T>, state: &DensityState<T>) -> Result<T> {
    match (obs, state) {
        (Observable::Qubit(a), DensityState::Qubit(s)) => Ok(qubit_expectation(a, s)),
        (Observable::Qutrit(a), DensityState::Qutrit(s)) => Ok(qutrit_expectation(a, s)),
        _ => Err(mismatch(obs, state)),
    }
}

/// `Var(A) = ⟨A²⟩ − ⟨A⟩²`.
pub fn variance<T: Real>(obs: &Observable<T>, state: &DensityState<T>) -> Result<T> {
    match (obs, state) {
        (Observable::Qubit(a), DensityState::Qubit(s)) => Ok(qubit_variance(a, s)),
        (Observable::Qutrit(a), DensityState::Qutrit(s)) => Ok(qutrit_variance(a, s)),
        _ => Err(mismatch(obs, state)),
    }
}

/// `|⟨[A,B]⟩|`.
pub fn commutator_expectation<T: Real>(
    a: &Observable<T>,
    b: &Observable<T>,
    state: &DensityState<T>,
) -> Result<T> {
    match (a, b, state) {
        (Observable::Qubit(a), Observable::Qubit(b), DensityState::Qubit(s)) => {
            Ok(qubit_commutator_expectation(a, b, s))
        }
        (Observable::Qutrit(a), Observable::Qutrit(b), DensityState::Qutrit(s)) => {
            Ok(qutrit_commutator_expectation(a, b, s))
        }
        _ => Err(mismatch(a, state)),
    }
}

/// Schrödinger bound `S(A,B,ρ)`.
pub fn schrodinger_bound<T: Real>(
    a: &Observable<T>,
    b: &Observable<T>,
    state: &DensityState<T>,
) -> Result<T> {
    match (a, b, state) {
        (Observable::Qubit(a), Observable::Qubit(b), DensityState::Qubit(s)) => {
            Ok(qubit_schrodinger_bound(a, b, s))
        }
        (Observable::Qutrit(a), Observable::Qutrit(b), DensityState::Qutrit(s)) => {
            Ok(qutrit_schrodinger_bound(a, b, s))
        }
        _ => Err(mismatch(a, state)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimension_mismatch_is_an_error() {
        let a = Observable::Qubit(QubitObservable::<f64>::sigma_z());
        let third = 1.0 / 3.0;
        let s = DensityState::Qutrit(
            QutritState::from_gm_params(third, third, num_complex::Complex::new(0.0, 0.0))
                .unwrap(),
        );
        assert!(matches!(
            expectation(&a, &s),
            Err(Error::DimensionMismatch { .. })
        ));
        assert!(variance(&a, &s).is_err());
        let b = Observable::Qubit(QubitObservable::<f64>::sigma_x());
        assert!(commutator_expectation(&a, &b, &s).is_err());
        assert!(schrodinger_bound(&a, &b, &s).is_err());
    }

    #[test]
    fn dispatch_agrees_with_direct_calls() {
        let a = QubitObservable::<f64>::sigma_x();
        let s = QubitState::new(Vec3::new(0.1, 0.2, 0.3)).unwrap();
        let e1 = expectation(&Observable::Qubit(a), &DensityState::Qubit(s)).unwrap();
        assert_eq!(e1, qubit_expectation(&a, &s));
    }
}
