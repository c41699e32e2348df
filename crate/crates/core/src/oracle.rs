//! Cyclic Jacobi eigensolver for real symmetric 8×8 matrices.
//!
//! This is the ground truth the closed-form spectrum is checked against, so it
//! has no dependencies beyond [`crate::matrix`].

use crate::error::{Error, Result};
use crate::matrix::Matrix8;

const MAX_SWEEPS: usize = 100;
const SYMMETRY_TOL: f64 = 1e-13;
const CONVERGENCE_TOL: f64 = 1e-14;

/// Eigenvalues in ascending order with the matching eigenvectors as columns.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EigenSystem {
    pub values: [f64; 8],
    pub vectors: Matrix8,
}

impl EigenSystem {
    pub fn vector(&self, k: usize) -> [f64; 8] {
        self.vectors.column(k)
    }
}

fn off_diagonal_norm(a: &Matrix8) -> f64 {
    let mut s = 0.0;
    for i in 0..8 {
        for j in 0..8 {
            if i != j {
                s += a[(i, j)] * a[(i, j)];
            }
        }
    }
    s.sqrt()
}

/// Full eigendecomposition by cyclic-by-row Jacobi rotations.
pub fn jacobi_eigen(m: &Matrix8) -> Result<EigenSystem> {
    let norm = m.frobenius_norm();
    let asymmetry = m.asymmetry();
    if asymmetry > SYMMETRY_TOL * norm {
        return Err(Error::NotSymmetric { asymmetry });
    }

    let mut a = *m;
    let mut v = Matrix8::identity();
    let target = CONVERGENCE_TOL * norm;

    let mut sweeps = 0;
    let mut off = off_diagonal_norm(&a);
    while off > target {
        if sweeps == MAX_SWEEPS {
            return Err(Error::NoConvergence {
                sweeps,
                off_norm: off,
            });
        }
        for p in 0..7 {
            for q in (p + 1)..8 {
                let apq = a[(p, q)];
                if apq == 0.0 {
                    continue;
                }
                // zero a[p][q]: tan of the rotation angle from the smaller root
                let tau = (a[(q, q)] - a[(p, p)]) / (2.0 * apq);
                let t = tau.signum() / (tau.abs() + (1.0 + tau * tau).sqrt());
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;

                for k in 0..8 {
                    let akp = a[(k, p)];
                    let akq = a[(k, q)];
                    a[(k, p)] = c * akp - s * akq;
                    a[(k, q)] = s * akp + c * akq;
                }
                for k in 0..8 {
                    let apk = a[(p, k)];
                    let aqk = a[(q, k)];
                    a[(p, k)] = c * apk - s * aqk;
                    a[(q, k)] = s * apk + c * aqk;
                }
                a[(p, q)] = 0.0;
                a[(q, p)] = 0.0;

                for k in 0..8 {
                    let vkp = v[(k, p)];
                    let vkq = v[(k, q)];
                    v[(k, p)] = c * vkp - s * vkq;
                    v[(k, q)] = s * vkp + c * vkq;
                }
            }
        }
        sweeps += 1;
        off = off_diagonal_norm(&a);
    }

    let mut order: [usize; 8] = std::array::from_fn(|i| i);
    order.sort_by(|&i, &j| a[(i, i)].total_cmp(&a[(j, j)]));
    Ok(EigenSystem {
        values: order.map(|i| a[(i, i)]),
        vectors: Matrix8::from_fn(|r, c| v[(r, order[c])]),
    })
}

/// Frobenius norms `(‖MV − VΛ‖, ‖VᵀV − I‖)`.
pub fn residual_norms(m: &Matrix8, es: &EigenSystem) -> (f64, f64) {
    let lambda = Matrix8::from_diagonal(&es.values);
    let defect = (*m * es.vectors - es.vectors * lambda).frobenius_norm();
    let orth = (es.vectors.transpose() * es.vectors - Matrix8::identity()).frobenius_norm();
    (defect, orth)
}

/// Jacobi eigenvalues of the Hamiltonian, computed in units of ħΔ and
/// returned in joules together with the (unit-free) eigenvectors.
pub fn hamiltonian_eigensystem(
    p: &crate::model::MolecularParameters,
    f: &crate::model::FieldPoint,
) -> Result<EigenSystem> {
    let unit = p.doublet_splitting();
    let es = jacobi_eigen(&crate::model::dimensionless_hamiltonian(p, f))?;
    Ok(EigenSystem {
        values: es.values.map(|x| x * unit),
        vectors: es.vectors,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diagonal_input_sorted() {
        let d = [3.0, -1.0, 2.0, 0.5, -7.0, 4.0, 1.0, 0.0];
        let es = jacobi_eigen(&Matrix8::from_diagonal(&d)).unwrap();
        let mut sorted = d;
        sorted.sort_by(f64::total_cmp);
        assert_eq!(es.values, sorted);
        // permutation of the identity
        for c in 0..8 {
            let col = es.vector(c);
            assert_eq!(col.iter().filter(|x| x.abs() == 1.0).count(), 1);
            assert_eq!(col.iter().filter(|x| **x == 0.0).count(), 7);
        }
        assert_eq!(residual_norms(&Matrix8::from_diagonal(&d), &es), (0.0, 0.0));
    }

    #[test]
    fn two_by_two_blocks() {
        let mut m = Matrix8::zeros();
        let blocks = [(2.0, 1.0), (-1.0, 0.5), (0.0, 3.0), (5.0, -2.0)];
        for (k, (a, b)) in blocks.iter().enumerate() {
            let i = 2 * k;
            m[(i, i)] = *a;
            m[(i + 1, i + 1)] = *a;
            m[(i, i + 1)] = *b;
            m[(i + 1, i)] = *b;
        }
        let es = jacobi_eigen(&m).unwrap();
        let mut expected: Vec<f64> = blocks.iter().flat_map(|(a, b)| [a + b, a - b]).collect();
        expected.sort_by(f64::total_cmp);
        for (x, y) in es.values.iter().zip(&expected) {
            assert!((x - y).abs() < 1e-14);
        }
    }

    #[test]
    fn identity_residuals_vanish() {
        let es = EigenSystem {
            values: [1.0; 8],
            vectors: Matrix8::identity(),
        };
        assert_eq!(residual_norms(&Matrix8::identity(), &es), (0.0, 0.0));
    }

    #[test]
    fn asymmetric_input_rejected() {
        let mut m = Matrix8::identity();
        m[(0, 3)] = 1e-3;
        assert!(matches!(jacobi_eigen(&m), Err(Error::NotSymmetric { .. })));
    }

    #[test]
    fn hamiltonian_residuals_within_contract() {
        use crate::model::{dimensionless_hamiltonian, FieldPoint, MolecularParameters};
        let h = dimensionless_hamiltonian(
            &MolecularParameters::OH,
            &FieldPoint::new(0.1, 2e5, std::f64::consts::FRAC_PI_2).unwrap(),
        );
        let es = jacobi_eigen(&h).unwrap();
        let (defect, orth) = residual_norms(&h, &es);
        let n = h.frobenius_norm();
        assert!(defect <= 1e-12 * n, "{defect}");
        assert!(orth <= 1e-12, "{orth}");
    }
}
