//! The 8×8 Stark-Zeeman Hamiltonian of ground-state OH and its building blocks.
//!
//! Basis ordering follows the parity basis `|J=3/2, M, Ω̄, ε⟩`: rows 0..4 are
//! the lower (−ħΔ/2) lambda-doublet manifold with M = 3/2, 1/2, −1/2, −3/2,
//! rows 4..8 the upper manifold in the same M order. In tensor language the
//! row index is `4 * doublet + rotor`, i.e. the doublet factor comes first.
//!
//! Two constructions are provided and deliberately share no code: an entry by
//! entry transcription ([`build_hamiltonian`]) and an assembly from Kronecker
//! products of Pauli and spin-3/2 matrices ([`build_kronecker_form`]).

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::constants::{BOHR_MAGNETON, DEBYE, HBAR};
use crate::error::{Error, Result};
use crate::matrix::{kron, CMatrix2, CMatrix4, Matrix2, Matrix4, Matrix8};

/// Molecule-specific constants.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MolecularParameters {
    /// Lambda-doubling angular frequency, rad/s.
    pub delta: f64,
    /// Electric dipole moment, C·m.
    pub mu_e: f64,
}

impl MolecularParameters {
    /// OH X²Π₃/₂: Δ = 2π × 1.667 GHz, μ_e = 1.66 D.
    pub const OH: MolecularParameters = MolecularParameters {
        delta: 2.0 * PI * 1.667e9,
        mu_e: 1.66 * DEBYE,
    };

    pub fn new(delta: f64, mu_e: f64) -> Result<Self> {
        if !(delta.is_finite() && delta > 0.0) {
            return Err(Error::InvalidInput(format!(
                "lambda-doubling frequency must be positive, got {delta}"
            )));
        }
        if !(mu_e.is_finite() && mu_e > 0.0) {
            return Err(Error::InvalidInput(format!(
                "dipole moment must be positive, got {mu_e}"
            )));
        }
        Ok(Self { delta, mu_e })
    }

    /// Construct from Δ/2π in GHz and μ_e in debye.
    pub fn from_lab_units(delta_ghz: f64, mu_e_debye: f64) -> Result<Self> {
        Self::new(2.0 * PI * delta_ghz * 1e9, mu_e_debye * DEBYE)
    }

    /// ħΔ in joules. This is the energy unit used for all dimensionless work.
    pub fn doublet_splitting(&self) -> f64 {
        HBAR * self.delta
    }
}

impl Default for MolecularParameters {
    fn default() -> Self {
        Self::OH
    }
}

/// Field configuration: B along the lab z axis, E at angle θ to it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FieldPoint {
    /// Tesla.
    pub b: f64,
    /// V/m.
    pub e: f64,
    /// Radians, in [0, π].
    pub theta: f64,
}

impl FieldPoint {
    pub fn new(b: f64, e: f64, theta: f64) -> Result<Self> {
        if !(b.is_finite() && b >= 0.0) {
            return Err(Error::InvalidInput(format!("B must be >= 0, got {b}")));
        }
        if !(e.is_finite() && e >= 0.0) {
            return Err(Error::InvalidInput(format!("E must be >= 0, got {e}")));
        }
        if !(0.0..=PI).contains(&theta) {
            return Err(Error::InvalidInput(format!(
                "theta must lie in [0, pi], got {theta}"
            )));
        }
        Ok(Self { b, e, theta })
    }

    /// Construct from B in tesla, E in kV/cm and θ in degrees.
    pub fn from_lab_units(b_tesla: f64, e_kv_per_cm: f64, theta_deg: f64) -> Result<Self> {
        Self::new(b_tesla, e_kv_per_cm * 1e5, theta_deg.to_radians())
    }

    pub fn zero() -> Self {
        Self {
            b: 0.0,
            e: 0.0,
            theta: 0.0,
        }
    }
}

/// Spin-3/2 angular momentum matrices in units of ħ, `J_z` diagonal.
#[derive(Debug, Clone, Copy)]
pub struct SpinMatrices {
    pub x: CMatrix4,
    pub y: CMatrix4,
    pub z: CMatrix4,
}

pub fn spin_matrices() -> SpinMatrices {
    let s3 = 3f64.sqrt();
    let jx = Matrix4::from_fn(|i, j| 0.5 * [[0.0, s3, 0.0, 0.0], [s3, 0.0, 2.0, 0.0], [0.0, 2.0, 0.0, s3], [0.0, 0.0, s3, 0.0]][i][j]);
    // J_y = (i/2) * A with A real antisymmetric
    let a = [
        [0.0, -s3, 0.0, 0.0],
        [s3, 0.0, -2.0, 0.0],
        [0.0, 2.0, 0.0, -s3],
        [0.0, 0.0, s3, 0.0],
    ];
    let jy = CMatrix4::from_fn(|i, j| Complex64::new(0.0, 0.5 * a[i][j]));
    let jz = Matrix4::from_diagonal(&[1.5, 0.5, -0.5, -1.5]);
    SpinMatrices {
        x: jx.to_complex(),
        y: jy,
        z: jz.to_complex(),
    }
}

/// Pauli matrices.
#[derive(Debug, Clone, Copy)]
pub struct PauliMatrices {
    pub x: CMatrix2,
    pub y: CMatrix2,
    pub z: CMatrix2,
}

pub fn pauli_matrices() -> PauliMatrices {
    let i = Complex64::i();
    let o = Complex64::from(1.0);
    let z = Complex64::from(0.0);
    PauliMatrices {
        x: crate::matrix::Matrix([[z, o], [o, z]]),
        y: crate::matrix::Matrix([[z, -i], [i, z]]),
        z: crate::matrix::Matrix([[o, z], [z, -o]]),
    }
}

/// The Hamiltonian written out entry by entry, in joules.
pub fn build_hamiltonian(p: &MolecularParameters, f: &FieldPoint) -> Matrix8 {
    let half_d = HBAR * p.delta / 2.0;
    let mb = BOHR_MAGNETON * f.b;
    let me = p.mu_e * f.e;
    let (s, c) = f.theta.sin_cos();
    let s3 = 3f64.sqrt();

    let mut h = Matrix8::zeros();
    let diag = [
        -half_d - 1.2 * mb,
        -half_d - 0.4 * mb,
        -half_d + 0.4 * mb,
        -half_d + 1.2 * mb,
        half_d - 1.2 * mb,
        half_d - 0.4 * mb,
        half_d + 0.4 * mb,
        half_d + 1.2 * mb,
    ];
    for (k, d) in diag.into_iter().enumerate() {
        h[(k, k)] = d;
    }

    let upper = [
        (0, 4, 0.6 * me * c),
        (0, 5, -s3 / 5.0 * me * s),
        (1, 4, -s3 / 5.0 * me * s),
        (1, 5, 0.2 * me * c),
        (1, 6, -0.4 * me * s),
        (2, 5, -0.4 * me * s),
        (2, 6, -0.2 * me * c),
        (2, 7, -s3 / 5.0 * me * s),
        (3, 6, -s3 / 5.0 * me * s),
        (3, 7, -0.6 * me * c),
    ];
    for (i, j, v) in upper {
        h[(i, j)] = v;
        h[(j, i)] = v;
    }
    h
}

/// Real Pauli and spin matrices needed by the Kronecker assembly.
fn real_factors() -> (Matrix2, Matrix2, Matrix4, Matrix4) {
    let pauli = pauli_matrices();
    let spin = spin_matrices();
    (
        pauli.x.real_part(),
        pauli.z.real_part(),
        spin.x.real_part(),
        spin.z.real_part(),
    )
}

/// `(2μ_e E / 5ħ) σx ⊗ (J_z cosθ − J_x sinθ)`, the electric coupling term.
pub fn coupling_term(p: &MolecularParameters, f: &FieldPoint) -> Matrix8 {
    let (sx, _, jx, jz) = real_factors();
    let (s, c) = f.theta.sin_cos();
    let rotor = jz.scale(c) - jx.scale(s);
    kron::<f64, 2, 4, 8>(&sx, &rotor).scale(2.0 * p.mu_e * f.e / 5.0)
}

/// The same Hamiltonian assembled from Kronecker products:
///
/// ```text
/// H = −(ħΔ/2) σz⊗I₄ − (4μ_B B/5ħ) I₂⊗J_z + (2μ_e E/5ħ) σx⊗(J_z cosθ − J_x sinθ)
/// ```
pub fn build_kronecker_form(p: &MolecularParameters, f: &FieldPoint) -> Matrix8 {
    let (_, sz, _, jz) = real_factors();
    let doublet = kron::<f64, 2, 4, 8>(&sz, &Matrix4::identity()).scale(-HBAR * p.delta / 2.0);
    let zeeman = kron::<f64, 2, 4, 8>(&Matrix2::identity(), &jz).scale(-4.0 * BOHR_MAGNETON * f.b / 5.0);
    doublet + zeeman + coupling_term(p, f)
}

/// `H / ħΔ`: the Hamiltonian in the dimensionless unit used by the
/// polynomial and eigensolver machinery.
pub fn dimensionless_hamiltonian(p: &MolecularParameters, f: &FieldPoint) -> Matrix8 {
    build_hamiltonian(p, f).scale(1.0 / p.doublet_splitting())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::CMatrix4;

    fn c(x: f64) -> Complex64 {
        Complex64::from(x)
    }

    #[test]
    fn jz_is_diagonal_three_one() {
        let s = spin_matrices();
        assert_eq!(s.z.diagonal(), [c(1.5), c(0.5), c(-0.5), c(-1.5)]);
        assert_eq!(s.y[(0, 1)], Complex64::new(0.0, -3f64.sqrt() / 2.0));
        assert_eq!(s.x[(1, 2)], c(1.0));
    }

    #[test]
    fn su2_commutators() {
        let s = spin_matrices();
        let i = Complex64::i();
        let cases = [(s.x, s.y, s.z), (s.y, s.z, s.x), (s.z, s.x, s.y)];
        for (a, b, r) in cases {
            let res = a.commutator(&b) - r.scale(i);
            assert!(res.max_abs() <= 1e-15, "{res:?}");
        }
    }

    #[test]
    fn casimir_is_fifteen_quarters() {
        let s = spin_matrices();
        let j2 = s.x * s.x + s.y * s.y + s.z * s.z;
        let res = j2 - CMatrix4::identity().scale(c(3.75));
        assert!(res.max_abs() <= 1e-15);
    }

    #[test]
    fn pauli_algebra() {
        let p = pauli_matrices();
        let i = Complex64::i();
        let id = CMatrix2::identity();
        assert_eq!(p.x * p.x, id);
        assert_eq!(p.y * p.y, id);
        assert_eq!(p.z * p.z, id);
        assert_eq!(p.x * p.y, p.z.scale(i));
        assert_eq!(p.y * p.z, p.x.scale(i));
        assert_eq!(p.z * p.x, p.y.scale(i));
        assert_eq!(p.x.anticommutator(&p.z), CMatrix2::zeros());
    }

    #[test]
    fn field_free_limit() {
        let p = MolecularParameters::OH;
        let h = build_hamiltonian(&p, &FieldPoint::new(0.0, 0.0, 1.1).unwrap());
        let hd = HBAR * p.delta / 2.0;
        let expect = Matrix8::from_diagonal(&[-hd, -hd, -hd, -hd, hd, hd, hd, hd]);
        assert_eq!(h, expect);
        let k = build_kronecker_form(&p, &FieldPoint::zero());
        assert_eq!(k, expect);
    }

    #[test]
    fn transverse_field_kills_cosine_entries() {
        let p = MolecularParameters::OH;
        let f = FieldPoint::from_lab_units(0.0, 2.0, 90.0).unwrap();
        let h = build_hamiltonian(&p, &f);
        let me = p.mu_e * f.e;
        for (i, j) in [(0, 4), (1, 5), (2, 6), (3, 7)] {
            assert!(h[(i, j)].abs() <= 1e-16 * me);
        }
        let expected = -(3f64.sqrt() / 5.0) * me;
        assert!((h[(0, 5)] - expected).abs() <= 1e-15 * me);
    }

    #[test]
    fn collinear_coupling_is_diagonal_per_block() {
        let p = MolecularParameters::OH;
        let f = FieldPoint::from_lab_units(0.0, 3.0, 0.0).unwrap();
        let h = build_kronecker_form(&p, &f);
        for i in 0..4 {
            for j in 4..8 {
                if j - 4 != i {
                    assert_eq!(h[(i, j)], 0.0);
                }
            }
        }
        assert!((h[(0, 4)] - 0.6 * p.mu_e * f.e).abs() <= 1e-15 * p.mu_e * f.e);
    }

    #[test]
    fn invalid_inputs_rejected() {
        assert!(MolecularParameters::new(0.0, 1.0).is_err());
        assert!(MolecularParameters::new(1.0, -1.0).is_err());
        assert!(FieldPoint::new(-1.0, 0.0, 0.0).is_err());
        assert!(FieldPoint::new(0.0, 0.0, 3.5).is_err());
        assert!(FieldPoint::new(0.0, 0.0, PI).is_ok());
    }
}
