use num_complex::Complex;

use crate::error::{Error, Result};
use crate::quantum::Vec3;
use crate::scalar::{clamp_nonneg, Real};

/// Sharp, ±1-valued qubit observable `a·σ` with a unit Bloch vector.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QubitObservable<T> {
    bloch: Vec3<T>,
}

impl<T: Real> QubitObservable<T> {
    pub fn new(bloch: Vec3<T>) -> Result<Self> {
        if !bloch.is_finite() {
            return Err(Error::invariant("observable Bloch vector must be finite"));
        }
        if !bloch.is_unit() {
            return Err(Error::invariant(format!(
                "observable Bloch vector must be unit length, got norm {}",
                bloch.norm()
            )));
        }
        Ok(Self { bloch })
    }

    /// Normalizes the direction, rejecting only the zero vector.
    pub fn from_direction(dir: Vec3<T>) -> Result<Self> {
        let bloch = dir
            .normalized()
            .ok_or_else(|| Error::invariant("observable direction must be non-zero"))?;
        Ok(Self { bloch })
    }

    pub fn bloch(&self) -> Vec3<T> {
        self.bloch
    }

    pub fn sigma_x() -> Self {
        Self {
            bloch: Vec3::new(T::one(), T::zero(), T::zero()),
        }
    }

    pub fn sigma_y() -> Self {
        Self {
            bloch: Vec3::new(T::zero(), T::one(), T::zero()),
        }
    }

    pub fn sigma_z() -> Self {
        Self {
            bloch: Vec3::new(T::zero(), T::zero(), T::one()),
        }
    }
}

/// Qubit density state `ρ = ½(I + r·σ)` with `‖r‖ ≤ 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QubitState<T> {
    bloch: Vec3<T>,
}

impl<T: Real> QubitState<T> {
    pub fn new(bloch: Vec3<T>) -> Result<Self> {
        if !bloch.is_finite() {
            return Err(Error::invariant("state Bloch vector must be finite"));
        }
        if bloch.norm() > T::one() + T::tol_algebraic() {
            return Err(Error::invariant(format!(
                "state Bloch vector must have norm ≤ 1, got {}",
                bloch.norm()
            )));
        }
        Ok(Self { bloch })
    }

    pub fn maximally_mixed() -> Self {
        Self {
            bloch: Vec3::zero(),
        }
    }

    /// Pure state in the given direction.
    pub fn pure_in(dir: Vec3<T>) -> Result<Self> {
        let bloch = dir
            .normalized()
            .ok_or_else(|| Error::invariant("pure state direction must be non-zero"))?;
        Ok(Self { bloch })
    }

    pub fn bloch(&self) -> Vec3<T> {
        self.bloch
    }

    pub fn is_pure(&self) -> bool {
        (self.bloch.norm() - T::one()).abs() <= T::tol_algebraic()
    }
}

/// `⟨A⟩ρ = a·r`.
pub fn qubit_expectation<T: Real>(obs: &QubitObservable<T>, state: &QubitState<T>) -> T {
    obs.bloch().dot(state.bloch())
}

/// `Var(A) = 1 − (a·r)²`, clamped against roundoff below zero.
pub fn qubit_variance<T: Real>(obs: &QubitObservable<T>, state: &QubitState<T>) -> T {
    let e = qubit_expectation(obs, state);
    clamp_nonneg(T::one() - e * e)
}

/// `|⟨[A,B]⟩| = 2|(a×b)·r|`.
pub fn qubit_commutator_expectation<T: Real>(
    a: &QubitObservable<T>,
    b: &QubitObservable<T>,
    state: &QubitState<T>,
) -> T {
    let c = a.bloch().cross(b.bloch());
    (T::two() * c.dot(state.bloch())).abs()
}

/// `⟨{A,B}⟩ = 2 a·b` (independent of the state for ±1-valued qubit pairs).
pub fn qubit_anticommutator_expectation<T: Real>(
    a: &QubitObservable<T>,
    b: &QubitObservable<T>,
) -> T {
    T::two() * a.bloch().dot(b.bloch())
}

/// Schrödinger bound `S(A,B,ρ) = ¼|⟨[A,B]⟩|² + ¼(⟨{A,B}⟩ − 2⟨A⟩⟨B⟩)²`.
pub fn qubit_schrodinger_bound<T: Real>(
    a: &QubitObservable<T>,
    b: &QubitObservable<T>,
    state: &QubitState<T>,
) -> T {
    let comm = qubit_commutator_expectation(a, b, state);
    let cov = qubit_anticommutator_expectation(a, b)
        - T::two() * qubit_expectation(a, state) * qubit_expectation(b, state);
    let quarter = T::lit(0.25);
    quarter * comm * comm + quarter * cov * cov
}

/// 2×2 complex matrix, row major.
pub type Matrix2<T> = [[Complex<T>; 2]; 2];

/// `ρ = ½(I + r·σ)` as an explicit matrix.
pub fn bloch_to_matrix<T: Real>(state: &QubitState<T>) -> Matrix2<T> {
    let r = state.bloch();
    let h = T::half();
    [
        [
            Complex::new(h * (T::one() + r.z), T::zero()),
            Complex::new(h * r.x, -h * r.y),
        ],
        [
            Complex::new(h * r.x, h * r.y),
            Complex::new(h * (T::one() - r.z), T::zero()),
        ],
    ]
}

/// Inverse of [`bloch_to_matrix`]; rejects non-Hermitian or non-unit-trace input.
pub fn matrix_to_bloch<T: Real>(m: &Matrix2<T>) -> Result<QubitState<T>> {
    let tol = T::tol_algebraic();
    let herm_ok = (m[0][0].im).abs() <= tol
        && (m[1][1].im).abs() <= tol
        && (m[0][1].re - m[1][0].re).abs() <= tol
        && (m[0][1].im + m[1][0].im).abs() <= tol;
    if !herm_ok {
        return Err(Error::invariant("matrix is not Hermitian"));
    }
    let trace = m[0][0].re + m[1][1].re;
    if (trace - T::one()).abs() > tol {
        return Err(Error::invariant(format!(
            "matrix trace must be 1, got {trace}"
        )));
    }
    let r = Vec3::new(
        T::two() * m[1][0].re,
        T::two() * m[1][0].im,
        m[0][0].re - m[1][1].re,
    );
    QubitState::new(r)
}
