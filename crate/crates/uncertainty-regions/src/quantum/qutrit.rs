use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::{clamp_nonneg, Real};

/// 3×3 Hermitian complex matrix, row major.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HermitianMatrix3<T> {
    entries: [[Complex<T>; 3]; 3],
}

impl<T: Real> HermitianMatrix3<T> {
    pub fn new(entries: [[Complex<T>; 3]; 3]) -> Result<Self> {
        let tol = T::tol_algebraic();
        for i in 0..3 {
            for j in 0..3 {
                let d = entries[i][j] - entries[j][i].conj();
                if d.re.abs() > tol || d.im.abs() > tol {
                    return Err(Error::invariant(format!(
                        "matrix is not Hermitian at entry ({i},{j})"
                    )));
                }
            }
        }
        Ok(Self { entries })
    }

    pub fn from_real_diag(d0: T, d1: T, d2: T) -> Self {
        let z = Complex::new(T::zero(), T::zero());
        let c = |x| Complex::new(x, T::zero());
        Self {
            entries: [[c(d0), z, z], [z, c(d1), z], [z, z, c(d2)]],
        }
    }

    /// Diagonal observable `diag(1, −1, 0)`.
    pub fn gell_mann_a() -> Self {
        Self::from_real_diag(T::one(), -T::one(), T::zero())
    }

    /// Symmetric 1↔3 flip observable.
    pub fn gell_mann_b() -> Self {
        let z = Complex::new(T::zero(), T::zero());
        let one = Complex::new(T::one(), T::zero());
        Self {
            entries: [[z, z, one], [z, z, z], [one, z, z]],
        }
    }

    pub fn entries(&self) -> &[[Complex<T>; 3]; 3] {
        &self.entries
    }

    pub fn trace(&self) -> Complex<T> {
        self.entries[0][0] + self.entries[1][1] + self.entries[2][2]
    }

    pub fn matmul(&self, o: &Self) -> [[Complex<T>; 3]; 3] {
        matmul3(&self.entries, &o.entries)
    }
}

pub(crate) fn matmul3<T: Real>(
    a: &[[Complex<T>; 3]; 3],
    b: &[[Complex<T>; 3]; 3],
) -> [[Complex<T>; 3]; 3] {
    let zero = Complex::new(T::zero(), T::zero());
    let mut out = [[zero; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            let mut acc = zero;
            for (k, bk) in b.iter().enumerate() {
                acc = acc + a[i][k] * bk[j];
            }
            out[i][j] = acc;
        }
    }
    out
}

fn trace_product<T: Real>(a: &[[Complex<T>; 3]; 3], b: &[[Complex<T>; 3]; 3]) -> Complex<T> {
    let mut acc = Complex::new(T::zero(), T::zero());
    for i in 0..3 {
        for (k, bk) in b.iter().enumerate() {
            acc = acc + a[i][k] * bk[i];
        }
    }
    acc
}

/// Qutrit density state: Hermitian, positive semi-definite, trace 1.
///
/// Positivity is checked through closed-form principal minors instead of an
/// iterative eigensolver, keeping the check deterministic. All seven principal
/// minors are tested: the leading three alone do not certify semi-definiteness
/// on the boundary (a zero leading 1×1 minor hides the rest of its row).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QutritState<T> {
    matrix: HermitianMatrix3<T>,
}

impl<T: Real> QutritState<T> {
    pub fn new(matrix: HermitianMatrix3<T>) -> Result<Self> {
        let tr = matrix.trace();
        if (tr.re - T::one()).abs() > T::tol_algebraic() {
            return Err(Error::invariant(format!("trace must be 1, got {}", tr.re)));
        }
        let tol = T::tol_eigen();
        let m = &matrix.entries;
        // 1×1 principal minors
        for i in 0..3 {
            if m[i][i].re < -tol {
                return Err(Error::invariant(format!(
                    "diagonal entry ({i},{i}) is negative"
                )));
            }
        }
        // 2×2 principal minors
        for (i, j) in [(0, 1), (0, 2), (1, 2)] {
            let minor = m[i][i].re * m[j][j].re - m[i][j].norm_sqr();
            if minor < -tol {
                return Err(Error::invariant(format!(
                    "2×2 principal minor ({i},{j}) is negative"
                )));
            }
        }
        if det3(m).re < -tol {
            return Err(Error::invariant("determinant is negative"));
        }
        Ok(Self { matrix })
    }

    /// Reduced state of the 1–3 block family: `ρ12 = ρ23 = 0`,
    /// `ρ22 = 1 − ρ11 − ρ33`.
    pub fn from_gm_params(rho11: T, rho33: T, rho13: Complex<T>) -> Result<Self> {
        let z = Complex::new(T::zero(), T::zero());
        let c = |x| Complex::new(x, T::zero());
        let rho22 = T::one() - rho11 - rho33;
        let m = HermitianMatrix3::new([
            [c(rho11), z, rho13],
            [z, c(rho22), z],
            [rho13.conj(), z, c(rho33)],
        ])?;
        Self::new(m)
    }

    pub fn matrix(&self) -> &HermitianMatrix3<T> {
        &self.matrix
    }
}

fn det3<T: Real>(m: &[[Complex<T>; 3]; 3]) -> Complex<T> {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

/// `⟨A⟩ = tr[ρA]`.
pub fn qutrit_expectation<T: Real>(obs: &HermitianMatrix3<T>, state: &QutritState<T>) -> T {
    trace_product(&state.matrix.entries, &obs.entries).re
}

/// `Var(A) = ⟨A²⟩ − ⟨A⟩²`, clamped against roundoff below zero.
pub fn qutrit_variance<T: Real>(obs: &HermitianMatrix3<T>, state: &QutritState<T>) -> T {
    let sq = matmul3(&obs.entries, &obs.entries);
    let second = trace_product(&state.matrix.entries, &sq).re;
    let first = qutrit_expectation(obs, state);
    clamp_nonneg(second - first * first)
}

/// `|⟨[A,B]⟩| = |tr[ρ(AB − BA)]|`.
pub fn qutrit_commutator_expectation<T: Real>(
    a: &HermitianMatrix3<T>,
    b: &HermitianMatrix3<T>,
    state: &QutritState<T>,
) -> T {
    let ab = matmul3(&a.entries, &b.entries);
    let ba = matmul3(&b.entries, &a.entries);
    let mut comm = ab;
    for i in 0..3 {
        for j in 0..3 {
            comm[i][j] = comm[i][j] - ba[i][j];
        }
    }
    let e = trace_product(&state.matrix.entries, &comm);
    // the commutator of Hermitian matrices is anti-Hermitian, so the
    // expectation is purely imaginary
    (e.re * e.re + e.im * e.im).sqrt()
}

/// `⟨{A,B}⟩ = tr[ρ(AB + BA)]`.
pub fn qutrit_anticommutator_expectation<T: Real>(
    a: &HermitianMatrix3<T>,
    b: &HermitianMatrix3<T>,
    state: &QutritState<T>,
) -> T {
    let ab = matmul3(&a.entries, &b.entries);
    let ba = matmul3(&b.entries, &a.entries);
    let mut acom = ab;
    for i in 0..3 {
        for j in 0..3 {
            acom[i][j] = acom[i][j] + ba[i][j];
        }
    }
    trace_product(&state.matrix.entries, &acom).re
}

/// Schrödinger bound for a qutrit pair.
pub fn qutrit_schrodinger_bound<T: Real>(
    a: &HermitianMatrix3<T>,
    b: &HermitianMatrix3<T>,
    state: &QutritState<T>,
) -> T {
    let comm = qutrit_commutator_expectation(a, b, state);
    let cov = qutrit_anticommutator_expectation(a, b, state)
        - T::two() * qutrit_expectation(a, state) * qutrit_expectation(b, state);
    let quarter = T::lit(0.25);
    quarter * comm * comm + quarter * cov * cov
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gell_mann_moments_on_diagonal_state() {
        let a = HermitianMatrix3::<f64>::gell_mann_a();
        let rho = QutritState::from_gm_params(0.5, 0.2, Complex::new(0.0, 0.0)).unwrap();
        // ⟨A⟩ = ρ11 − ρ22
        assert!((qutrit_expectation(&a, &rho) - (0.5 - 0.3)).abs() < 1e-14);
    }

    #[test]
    fn gell_mann_b_expectation_from_re13() {
        let b = HermitianMatrix3::<f64>::gell_mann_b();
        let rho = QutritState::from_gm_params(0.4, 0.4, Complex::new(0.2, 0.0)).unwrap();
        assert!((qutrit_expectation(&b, &rho) - 0.4).abs() < 1e-14);
    }

    #[test]
    fn variance_of_a_in_maximally_mixed() {
        let a = HermitianMatrix3::<f64>::gell_mann_a();
        let third = 1.0 / 3.0;
        let rho = QutritState::from_gm_params(third, third, Complex::new(0.0, 0.0)).unwrap();
        assert!((qutrit_variance(&a, &rho) - 2.0 / 3.0).abs() < 1e-14);
    }

    #[test]
    fn commutator_examples() {
        let a = HermitianMatrix3::<f64>::gell_mann_a();
        let b = HermitianMatrix3::<f64>::gell_mann_b();
        // common eigenstate diag(0,1,0)
        let rho = QutritState::from_gm_params(0.0, 0.0, Complex::new(0.0, 0.0)).unwrap();
        assert_eq!(qutrit_commutator_expectation(&a, &b, &rho), 0.0);
        assert_eq!(qutrit_schrodinger_bound(&a, &b, &rho), 0.0);
        // ρ13 = 0.3i gives |⟨[A,B]⟩| = 0.6
        let rho = QutritState::from_gm_params(0.4, 0.4, Complex::new(0.0, 0.3)).unwrap();
        assert!((qutrit_commutator_expectation(&a, &b, &rho) - 0.6).abs() < 1e-14);
    }

    #[test]
    fn positivity_rejected_for_indefinite_matrix() {
        // trace 1, all leading principal minors ≥ 0, but indefinite
        let m = HermitianMatrix3::from_real_diag(0.0, -1.0, 2.0);
        assert!(QutritState::new(m).is_err());
        // overlarge coherence violates the 2×2 minor
        assert!(QutritState::from_gm_params(0.1, 0.1, Complex::new(0.3, 0.0)).is_err());
    }

    #[test]
    fn trace_enforced() {
        let m = HermitianMatrix3::from_real_diag(0.5, 0.2, 0.2);
        assert!(QutritState::new(m).is_err());
    }
}
