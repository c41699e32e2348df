//! The chiral operator `C = e^{−iπσx/2} ⊗ e^{−iπJy/ħ}` and the pairing it
//! induces.
//!
//! `C` anticommutes with the Hamiltonian at every field point, so `Cψ` is an
//! eigenvector with eigenvalue `−λ` whenever `ψ` has eigenvalue `λ`. `C = iR`
//! with `R` a real antidiagonal sign matrix, which lets the anticommutator be
//! checked entirely in real arithmetic.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matrix::{kron, CMatrix2, CMatrix4, CMatrix8, CVector8, Matrix, Matrix4, Matrix8};
use crate::model::{pauli_matrices, spin_matrices};

const CONSTRUCTION_TOL: f64 = 1e-14;

/// Sign pattern of `R = C/i`: row `k` has its single nonzero entry in column
/// `7 − k`.
const ANTIDIAGONAL_SIGNS: [f64; 8] = [1.0, -1.0, 1.0, -1.0, 1.0, -1.0, 1.0, -1.0];

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChiralOperator {
    pub c: CMatrix8,
    /// Real factor with `c = i r`.
    pub r: Matrix8,
}

/// `R` written out entry by entry.
pub fn chiral_sign_matrix() -> Matrix8 {
    Matrix8::from_fn(|i, j| if i + j == 7 { ANTIDIAGONAL_SIGNS[i] } else { 0.0 })
}

/// `e^{−iπσx/2} = cos(π/2) I − i sin(π/2) σx`.
pub fn doublet_rotation() -> CMatrix2 {
    let sx = pauli_matrices().x;
    let half = std::f64::consts::FRAC_PI_2;
    CMatrix2::identity().scale(Complex64::from(half.cos())) - sx.scale(Complex64::new(0.0, half.sin()))
}

/// `e^{−iπJy/ħ}` from the spectral decomposition of `Jy`. The eigenvalues
/// `m ∈ {±3/2, ±1/2}` are known, so each spectral projector is the Lagrange
/// product `Π_{m'≠m} (Jy − m') / (m − m')`.
pub fn rotor_rotation() -> CMatrix4 {
    let jy = spin_matrices().y;
    let ms = [1.5, 0.5, -0.5, -1.5];
    let mut out = CMatrix4::zeros();
    for &m in &ms {
        let mut proj = CMatrix4::identity();
        for &other in ms.iter().filter(|&&o| o != m) {
            let factor = (jy - CMatrix4::identity().scale(Complex64::from(other)))
                .scale(Complex64::from(1.0 / (m - other)));
            proj = proj * factor;
        }
        let phase = Complex64::from_polar(1.0, -std::f64::consts::PI * m);
        out = out + proj.scale(phase);
    }
    out
}

/// Wigner `d^{3/2}(π)` in the `M = 3/2, 1/2, −1/2, −3/2` order:
/// `⟨m'|e^{−iπJy}|m⟩ = (−1)^{j−m} δ_{m',−m}`.
pub fn wigner_d_pi() -> Matrix4 {
    let mut d = Matrix4::zeros();
    for col in 0..4 {
        // j − m = col
        d[(3 - col, col)] = if col % 2 == 0 { 1.0 } else { -1.0 };
    }
    d
}

/// Build `C` by both routes and insist they agree. The explicit matrix is
/// the returned value.
pub fn build_chiral_operator() -> Result<ChiralOperator> {
    let r = chiral_sign_matrix();
    let c = r.to_complex().scale(Complex64::i());

    let rotor = rotor_rotation();
    let wigner_gap = (rotor - wigner_d_pi().to_complex()).max_abs();
    let from_exponentials: CMatrix8 = kron(&doublet_rotation(), &rotor);
    let deviation = (from_exponentials - c).max_abs().max(wigner_gap);
    if deviation > CONSTRUCTION_TOL {
        return Err(Error::ConstructionMismatch { deviation });
    }
    Ok(ChiralOperator { c, r })
}

/// `ab + ba`
pub fn anticommutator<T: crate::matrix::Scalar, const N: usize>(
    a: &Matrix<T, N>,
    b: &Matrix<T, N>,
) -> Matrix<T, N> {
    a.anticommutator(b)
}

/// `‖{H, C}‖_F / ‖H‖_F`, evaluated as `‖{H, R}‖_F` since `i` is a scalar.
pub fn anticommutation_residual(h: &Matrix8, op: &ChiralOperator) -> f64 {
    let norm = h.frobenius_norm();
    if norm == 0.0 {
        return 0.0;
    }
    h.anticommutator(&op.r).frobenius_norm() / norm
}

/// `Cψ`.
pub fn pair_eigenvector(psi_plus: &CVector8, op: &ChiralOperator) -> CVector8 {
    op.c.mul_vec(psi_plus)
}

/// `‖{M₁⊗M₂, M₃⊗M₄} − ½([M₁,M₃]⊗[M₂,M₄] + {M₁,M₃}⊗{M₂,M₄})‖_F`.
pub fn kron_anticommutator_identity_check(
    m1: &CMatrix2,
    m2: &CMatrix4,
    m3: &CMatrix2,
    m4: &CMatrix4,
) -> f64 {
    let a: CMatrix8 = kron(m1, m2);
    let b: CMatrix8 = kron(m3, m4);
    let lhs = a.anticommutator(&b);
    let comm: CMatrix8 = kron(&m1.commutator(m3), &m2.commutator(m4));
    let anti: CMatrix8 = kron(&m1.anticommutator(m3), &m2.anticommutator(m4));
    let rhs = (comm + anti).scale(Complex64::from(0.5));
    (lhs - rhs).frobenius_norm()
}
