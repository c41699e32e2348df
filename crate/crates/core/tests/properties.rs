use std::f64::consts::PI;

use num_complex::Complex64;
use proptest::prelude::*;

use oh_stark_zeeman::charpoly::charpoly_oracle;
use oh_stark_zeeman::dynamics::{evolve, partial_trace_doublet, partial_trace_rotor, propagator, StateVector};
use oh_stark_zeeman::matrix::CMatrix8;
use oh_stark_zeeman::model::{coupling_term, dimensionless_hamiltonian};
use oh_stark_zeeman::symmetry::build_chiral_operator;
use oh_stark_zeeman::{
    build_hamiltonian, build_kronecker_form, even_coefficients, jacobi_eigen, scale_variables,
    solve_spectrum, FieldPoint, MolecularParameters,
};

const OH: MolecularParameters = MolecularParameters::OH;

fn field() -> impl Strategy<Value = FieldPoint> {
    (0.0..=2.0f64, 0.0..=1e6f64, 0.0..=PI).prop_map(|(b, e, t)| FieldPoint::new(b, e, t).unwrap())
}

fn state() -> impl Strategy<Value = StateVector> {
    prop::array::uniform8((-1.0..1.0f64, -1.0..1.0f64))
        .prop_filter("nonzero", |a| a.iter().any(|(x, y)| x.abs() + y.abs() > 1e-3))
        .prop_map(|a| StateVector::normalized(a.map(|(x, y)| Complex64::new(x, y))).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn hamiltonian_is_real_symmetric_and_traceless(f in field()) {
        let h = build_hamiltonian(&OH, &f);
        let n = h.frobenius_norm();
        prop_assert!((h - h.transpose()).max_abs() <= 1e-14 * n);
        prop_assert!(h.trace().abs() <= 1e-14 * n);
    }

    #[test]
    fn kronecker_form_matches_entrywise(f in field()) {
        let h = build_hamiltonian(&OH, &f);
        prop_assert!((h - build_kronecker_form(&OH, &f)).max_abs() <= 1e-14 * h.frobenius_norm());
    }

    #[test]
    fn fields_enter_linearly(f in field(), s in 0.1..3.0f64) {
        let zero = build_hamiltonian(&OH, &FieldPoint { b: 0.0, e: 0.0, theta: f.theta });
        let h1 = build_hamiltonian(&OH, &f) - zero;
        let scaled = FieldPoint { b: f.b * s, e: f.e * s, theta: f.theta };
        let hs = build_hamiltonian(&OH, &scaled) - zero;
        prop_assert!((hs - h1.scale(s)).max_abs() <= 1e-13 * hs.frobenius_norm().max(1e-30));
    }

    #[test]
    fn coupling_interpolates_between_axes(f in field()) {
        let along = coupling_term(&OH, &FieldPoint { theta: 0.0, ..f });
        let across = coupling_term(&OH, &FieldPoint { theta: PI / 2.0, ..f });
        let (s, c) = f.theta.sin_cos();
        let mixed = coupling_term(&OH, &f);
        prop_assert!((mixed - along.scale(c) - across.scale(s)).max_abs() <= 1e-14 * along.frobenius_norm().max(1e-30));
    }

    #[test]
    fn supplementary_angles_share_a_spectrum(f in field()) {
        let mirror = FieldPoint { theta: PI - f.theta, ..f };
        let a = even_coefficients(&scale_variables(&OH, &f)).as_array();
        let b = even_coefficients(&scale_variables(&OH, &mirror)).as_array();
        for (x, y) in a.iter().zip(&b) {
            prop_assert!((x - y).abs() <= 1e-12 * x.abs().max(1.0));
        }
    }

    #[test]
    fn spectrum_pairs_and_matches_oracle(f in field()) {
        let s = solve_spectrum(&OH, &f).unwrap();
        let h = dimensionless_hamiltonian(&OH, &f);
        let es = jacobi_eigen(&h).unwrap();
        let unit = OH.doublet_splitting();
        for k in 0..8 {
            prop_assert!((s.eigenvalues[k] + s.eigenvalues[7 - k]).abs() <= 1e-12 * s.max_abs());
            prop_assert!((s.eigenvalues[k] / unit - es.values[k]).abs() <= 1e-10 * es.values[7].abs());
        }
    }

    #[test]
    fn jacobi_is_similarity_invariant(f in field(), g in field()) {
        // eigenvectors of an unrelated Hamiltonian give an orthogonal Q
        let q = jacobi_eigen(&dimensionless_hamiltonian(&OH, &g)).unwrap().vectors;
        let h = dimensionless_hamiltonian(&OH, &f);
        let a = jacobi_eigen(&h).unwrap().values;
        let b = jacobi_eigen(&(q.transpose() * h * q)).unwrap().values;
        for k in 0..8 {
            prop_assert!((a[k] - b[k]).abs() <= 1e-12 * a[7].abs());
        }
    }

    #[test]
    fn odd_coefficients_vanish(f in field()) {
        prop_assert!(charpoly_oracle(&dimensionless_hamiltonian(&OH, &f)).odd_residual() <= 1e-12);
    }

    #[test]
    fn chiral_conjugation_flips_sign(f in field()) {
        let op = build_chiral_operator().unwrap();
        let h = build_hamiltonian(&OH, &f).to_complex();
        let flipped = op.c * h * op.c;
        prop_assert!((flipped + h).frobenius_norm() <= 1e-13 * h.frobenius_norm());
    }

    #[test]
    fn propagators_compose_and_stay_unitary(f in field(), t1 in 0.0..5e-9f64, t2 in 0.0..5e-9f64) {
        let u1 = propagator(&OH, &f, t1).unwrap();
        let u2 = propagator(&OH, &f, t2).unwrap();
        let u12 = propagator(&OH, &f, t1 + t2).unwrap();
        prop_assert!((u1.adjoint() * u1 - CMatrix8::identity()).max_abs() <= 1e-11);
        prop_assert!((u2 * u1 - u12).max_abs() <= 1e-10);
    }

    #[test]
    fn energy_is_conserved(f in field(), psi in state(), t in 0.0..5e-9f64) {
        let h = build_hamiltonian(&OH, &f).to_complex();
        let later = evolve(&OH, &f, &psi, t).unwrap();
        let (e0, e1) = (psi.expectation(&h), later.expectation(&h));
        prop_assert!((e0 - e1).abs() <= 1e-10 * h.frobenius_norm());
    }

    #[test]
    fn reduced_purities_agree(psi in state()) {
        let rho = psi.density();
        let a = partial_trace_rotor(&rho).unwrap();
        let b = partial_trace_doublet(&rho).unwrap();
        prop_assert!((a.purity() - b.purity()).abs() <= 1e-10);
        prop_assert!((a.trace() - 1.0).abs() <= 1e-12);
        prop_assert!((b.trace() - 1.0).abs() <= 1e-12);
    }
}
