//! Unitary time evolution and doublet ⊗ rotor structure.
//!
//! States use the Hamiltonian's basis ordering, `index = 4·doublet + rotor`,
//! so the 8-dimensional space factorises as (2-level doublet) ⊗ (4-level
//! J = 3/2 rotor).

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matrix::{inner, kron, vec_norm, CMatrix2, CMatrix4, CMatrix8, CVector8, Matrix, Matrix8};
use crate::constants::HBAR;
use crate::model::{build_hamiltonian, FieldPoint, MolecularParameters};
use crate::oracle::hamiltonian_eigensystem;
use crate::symmetry::doublet_rotation;

const NORM_TOL: f64 = 1e-12;
const DENSITY_TOL: f64 = 1e-12;

/// Normalised 8-component state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StateVector(CVector8);

impl StateVector {
    pub fn new(amplitudes: CVector8) -> Result<Self> {
        let n = vec_norm(&amplitudes);
        if (n - 1.0).abs() > NORM_TOL {
            return Err(Error::InvalidInput(format!("state norm is {n}, expected 1")));
        }
        Ok(Self(amplitudes))
    }

    /// Scale `amplitudes` to unit norm.
    pub fn normalized(amplitudes: CVector8) -> Result<Self> {
        let n = vec_norm(&amplitudes);
        if n == 0.0 || !n.is_finite() {
            return Err(Error::InvalidInput("cannot normalise a zero state".into()));
        }
        Ok(Self(amplitudes.map(|a| a / n)))
    }

    pub fn basis(k: usize) -> Self {
        let mut a = [Complex64::from(0.0); 8];
        a[k] = Complex64::from(1.0);
        Self(a)
    }

    pub fn amplitudes(&self) -> &CVector8 {
        &self.0
    }

    pub fn populations(&self) -> [f64; 8] {
        self.0.map(|a| a.norm_sqr())
    }

    /// `|ψ⟩⟨ψ|`
    pub fn density(&self) -> CMatrix8 {
        CMatrix8::from_fn(|i, j| self.0[i] * self.0[j].conj())
    }

    pub fn overlap(&self, other: &StateVector) -> Complex64 {
        inner(&self.0, &other.0)
    }

    /// `⟨ψ|A|ψ⟩` for Hermitian `A`.
    pub fn expectation(&self, op: &CMatrix8) -> f64 {
        inner(&self.0, &op.mul_vec(&self.0)).re
    }
}

/// `U(t) = V e^{−iΛt/ħ} Vᵀ` from the Jacobi eigendecomposition.
pub fn propagator(p: &MolecularParameters, f: &FieldPoint, t: f64) -> Result<CMatrix8> {
    if !t.is_finite() {
        return Err(Error::InvalidInput(format!("time must be finite, got {t}")));
    }
    let es = hamiltonian_eigensystem(p, f)?;
    let phases = es.values.map(|e| Complex64::from_polar(1.0, -e * t / HBAR));
    let v = es.vectors;
    Ok(CMatrix8::from_fn(|i, j| {
        (0..8).fold(Complex64::from(0.0), |acc, k| {
            acc + phases[k] * (v[(i, k)] * v[(j, k)])
        })
    }))
}

pub fn evolve(
    p: &MolecularParameters,
    f: &FieldPoint,
    psi: &StateVector,
    t: f64,
) -> Result<StateVector> {
    let u = propagator(p, f, t)?;
    Ok(StateVector(u.mul_vec(&psi.0)))
}

/// Hermitian, unit-trace `N`×`N` density matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DensityMatrix<const N: usize>(Matrix<Complex64, N>);

pub type DensityMatrix2 = DensityMatrix<2>;
pub type DensityMatrix4 = DensityMatrix<4>;

impl<const N: usize> DensityMatrix<N> {
    pub fn new(m: Matrix<Complex64, N>) -> Result<Self> {
        check_density(&m)?;
        Ok(Self(m))
    }

    pub fn matrix(&self) -> &Matrix<Complex64, N> {
        &self.0
    }

    pub fn trace(&self) -> f64 {
        self.0.trace().re
    }

    /// `Tr ρ²`
    pub fn purity(&self) -> f64 {
        (self.0 * self.0).trace().re
    }
}

impl DensityMatrix2 {
    /// Von Neumann entropy in nats from the closed-form 2×2 eigenvalues.
    pub fn entropy(&self) -> f64 {
        let det = self.0.determinant().re;
        let disc = (1.0 - 4.0 * det).max(0.0).sqrt();
        [(1.0 + disc) / 2.0, (1.0 - disc) / 2.0]
            .iter()
            .filter(|&&x| x > 0.0)
            .map(|&x| -x * x.ln())
            .sum()
    }
}

fn check_density<const N: usize>(m: &Matrix<Complex64, N>) -> Result<()> {
    let herm = (*m - m.adjoint()).max_abs();
    if herm > DENSITY_TOL {
        return Err(Error::InvalidInput(format!(
            "density matrix is not Hermitian (deviation {herm:e})"
        )));
    }
    let tr = m.trace();
    if (tr - Complex64::from(1.0)).norm() > DENSITY_TOL {
        return Err(Error::InvalidInput(format!("density matrix trace is {tr}")));
    }
    Ok(())
}

/// Reduced state of the doublet: `ρ₂[a][b] = Σ_j ρ[4a+j][4b+j]`.
pub fn partial_trace_rotor(rho8: &CMatrix8) -> Result<DensityMatrix2> {
    check_density(rho8)?;
    Ok(DensityMatrix(CMatrix2::from_fn(|a, b| {
        (0..4).fold(Complex64::from(0.0), |acc, j| acc + rho8[(4 * a + j, 4 * b + j)])
    })))
}

/// Reduced state of the rotor: `ρ₄[j][k] = Σ_a ρ[4a+j][4a+k]`.
pub fn partial_trace_doublet(rho8: &CMatrix8) -> Result<DensityMatrix4> {
    check_density(rho8)?;
    Ok(DensityMatrix(CMatrix4::from_fn(|j, k| {
        (0..2).fold(Complex64::from(0.0), |acc, a| acc + rho8[(4 * a + j, 4 * a + k)])
    })))
}

/// `e^{−iπσx/2} ⊗ I₄`: exchanges the two doublet manifolds, leaving the rotor
/// alone.
pub fn pseudo_spin_flip() -> CMatrix8 {
    kron(&doublet_rotation(), &CMatrix4::identity())
}

/// One sample of a trajectory.
#[derive(Debug, Clone, PartialEq)]
pub struct TrajectoryPoint {
    pub t: f64,
    pub populations: [f64; 8],
    /// Purity of the reduced doublet state.
    pub doublet_purity: f64,
    /// `⟨H⟩` in joules.
    pub energy: f64,
}

/// Evolve `psi0` to each time in `times` (diagonalising once).
pub fn trajectory(
    p: &MolecularParameters,
    f: &FieldPoint,
    psi0: &StateVector,
    times: &[f64],
) -> Result<Vec<TrajectoryPoint>> {
    let es = hamiltonian_eigensystem(p, f)?;
    let h = build_hamiltonian(p, f).to_complex();
    let v: Matrix8 = es.vectors;
    // coefficients in the eigenbasis
    let coeffs: [Complex64; 8] = std::array::from_fn(|k| {
        (0..8).fold(Complex64::from(0.0), |acc, i| acc + v[(i, k)] * psi0.0[i])
    });
    times
        .iter()
        .map(|&t| {
            if !t.is_finite() {
                return Err(Error::InvalidInput(format!("time must be finite, got {t}")));
            }
            let amps: CVector8 = std::array::from_fn(|i| {
                (0..8).fold(Complex64::from(0.0), |acc, k| {
                    acc + v[(i, k)] * coeffs[k] * Complex64::from_polar(1.0, -es.values[k] * t / HBAR)
                })
            });
            let psi = StateVector(amps);
            let reduced = partial_trace_rotor(&psi.density())?;
            Ok(TrajectoryPoint {
                t,
                populations: psi.populations(),
                doublet_purity: reduced.purity(),
                energy: psi.expectation(&h),
            })
        })
        .collect()
}

/// Times in `(0, t_max]` where `⟨O⟩(t) − level` changes sign, located by
/// bisection after sampling at `samples` uniform steps.
pub fn crossing_times(
    p: &MolecularParameters,
    f: &FieldPoint,
    psi0: &StateVector,
    op: &CMatrix8,
    level: f64,
    t_max: f64,
    samples: usize,
) -> Result<Vec<f64>> {
    if !(t_max > 0.0 && t_max.is_finite()) || samples < 2 {
        return Err(Error::InvalidInput("need t_max > 0 and at least 2 samples".into()));
    }
    let es = hamiltonian_eigensystem(p, f)?;
    let v = es.vectors;
    let coeffs: [Complex64; 8] = std::array::from_fn(|k| {
        (0..8).fold(Complex64::from(0.0), |acc, i| acc + v[(i, k)] * psi0.0[i])
    });
    let g = |t: f64| {
        let amps: CVector8 = std::array::from_fn(|i| {
            (0..8).fold(Complex64::from(0.0), |acc, k| {
                acc + v[(i, k)] * coeffs[k] * Complex64::from_polar(1.0, -es.values[k] * t / HBAR)
            })
        });
        StateVector(amps).expectation(op) - level
    };
    let dt = t_max / samples as f64;
    let mut out = Vec::new();
    let (mut a, mut ga) = (0.0, g(0.0));
    for k in 1..=samples {
        let b = dt * k as f64;
        let gb = g(b);
        if ga == 0.0 && a > 0.0 {
            out.push(a);
        } else if ga * gb < 0.0 {
            let (mut lo, mut hi, mut glo) = (a, b, ga);
            for _ in 0..200 {
                let mid = 0.5 * (lo + hi);
                if mid <= lo || mid >= hi {
                    break;
                }
                let gm = g(mid);
                if gm == 0.0 {
                    lo = mid;
                    hi = mid;
                    break;
                }
                if (gm < 0.0) == (glo < 0.0) {
                    lo = mid;
                    glo = gm;
                } else {
                    hi = mid;
                }
            }
            out.push(0.5 * (lo + hi));
        }
        a = b;
        ga = gb;
    }
    Ok(out)
}
