//! Acceptance criteria, one printed PASS/FAIL line each.
//!

use std::f64::consts::{FRAC_PI_2, PI};
use std::io::{self, Write};
use std::process::Command;
use std::time::{Duration, Instant};

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use oh_stark_zeeman::analytic::collinear_block_eigenvalues;
use oh_stark_zeeman::charpoly::{charpoly_oracle, even_coefficient_deviation};
use oh_stark_zeeman::dynamics::{partial_trace_doublet, partial_trace_rotor, propagator, StateVector};
use oh_stark_zeeman::matrix::CMatrix8;
use oh_stark_zeeman::model::dimensionless_hamiltonian;
use oh_stark_zeeman::oracle::hamiltonian_eigensystem;
use oh_stark_zeeman::sweep::{relative_deviation, run_sweep, SweepConfig};
use oh_stark_zeeman::symmetry::{anticommutation_residual, build_chiral_operator};
use oh_stark_zeeman::verify::{parity_period_error, verify_with, Corruption};
use oh_stark_zeeman::{
    build_hamiltonian, even_coefficients, jacobi_eigen, scale_variables, solve_spectrum,
    EnergyUnit, FieldPoint, MolecularParameters,
};

const GRID: usize = 10_000;
const OH: MolecularParameters = MolecularParameters::OH;

fn grid(seed: u64, n: usize) -> Vec<FieldPoint> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|_| {
            FieldPoint::new(
                rng.gen_range(0.0..=2.0),
                rng.gen_range(0.0..=1e6),
                rng.gen_range(0.0..=PI),
            )
            .unwrap()
        })
        .collect()
}

fn degenerate_points() -> Vec<FieldPoint> {
    let mut pts = Vec::new();
    for theta in [0.0, FRAC_PI_2, PI] {
        for (b, e) in [(0.0, 0.0), (0.0, 2e5), (0.0, 1e6), (0.7, 0.0), (2.0, 0.0), (0.7, 2e5), (1.3, 8e5)] {
            pts.push(FieldPoint::new(b, e, theta).unwrap());
        }
    }
    pts
}

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome { passed, detail: detail.into() }
}

fn criterion_1() -> Outcome {
    let pts = grid(1, GRID);
    let start = Instant::now();
    let worst = pts
        .iter()
        .map(|f| charpoly_oracle(&dimensionless_hamiltonian(&OH, f)).odd_residual())
        .fold(0.0, f64::max);
    let elapsed = start.elapsed();
    outcome(
        worst <= 1e-12 && elapsed < Duration::from_secs(5),
        format!("odd coefficients: worst {worst:.2e} (tol 1e-12) over {GRID} points in {elapsed:.2?} (limit 5 s)"),
    )
}

fn criterion_2() -> Outcome {
    let worst = grid(1, GRID)
        .iter()
        .map(|f| {
            let closed = even_coefficients(&scale_variables(&OH, f));
            even_coefficient_deviation(&closed, &charpoly_oracle(&dimensionless_hamiltonian(&OH, f)))
        })
        .fold(0.0, f64::max);
    outcome(worst <= 1e-10, format!("closed-form even coefficients vs oracle: worst {worst:.2e} (tol 1e-10)"))
}

fn criterion_3() -> Outcome {
    let pts = grid(1, GRID);
    let start = Instant::now();
    let mut worst: f64 = 0.0;
    let mut failures = 0;
    for f in pts.iter().chain(&degenerate_points()) {
        match (solve_spectrum(&OH, f), hamiltonian_eigensystem(&OH, f)) {
            (Ok(a), Ok(o)) => worst = worst.max(relative_deviation(&a.eigenvalues, &o.values)),
            _ => failures += 1,
        }
    }
    let elapsed = start.elapsed();
    outcome(
        worst <= 1e-10 && failures == 0 && elapsed < Duration::from_secs(10),
        format!(
            "analytic vs Jacobi: worst {worst:.2e} (tol 1e-10), {failures} solver errors, {} points incl. degenerate in {elapsed:.2?} (limit 10 s)",
            GRID + degenerate_points().len()
        ),
    )
}

fn criterion_4() -> Outcome {
    let op = match build_chiral_operator() {
        Ok(op) => op,
        Err(e) => return outcome(false, format!("construction failed: {e}")),
    };
    let mut entrywise = true;
    for i in 0..8 {
        for j in 0..8 {
            let expected = if i + j == 7 {
                Complex64::new(0.0, if i % 2 == 0 { 1.0 } else { -1.0 })
            } else {
                Complex64::from(0.0)
            };
            entrywise &= op.c[(i, j)] == expected;
        }
    }
    let square = (op.c * op.c - CMatrix8::identity()).max_abs();
    let det = (op.c.determinant() - Complex64::from(1.0)).norm();
    let worst = grid(2, 2000)
        .iter()
        .chain(&degenerate_points())
        .map(|f| anticommutation_residual(&build_hamiltonian(&OH, f), &op))
        .fold(0.0, f64::max);
    outcome(
        entrywise && square <= 1e-15 && det <= 1e-14 && worst <= 1e-13,
        format!("entrywise {entrywise}, |C^2 - I| {square:.1e}, |det C - 1| {det:.1e}, ||{{H,C}}||/||H|| worst {worst:.1e} (tol 1e-13)"),
    )
}

fn criterion_5() -> Outcome {
    let op = build_chiral_operator().unwrap();
    let (mut pair_worst, mut mirror_worst): (f64, f64) = (0.0, 0.0);
    for f in grid(3, 2000).iter().chain(&degenerate_points()) {
        let h = dimensionless_hamiltonian(&OH, f);
        let es = jacobi_eigen(&h).unwrap();
        let norm = h.frobenius_norm();
        let hc = h.to_complex();
        for k in 0..8 {
            let image = op.c.mul_vec(&es.vector(k).map(Complex64::from));
            let defect = hc
                .mul_vec(&image)
                .iter()
                .zip(&image)
                .map(|(a, b)| (a + b * es.values[k]).norm_sqr())
                .sum::<f64>()
                .sqrt();
            pair_worst = pair_worst.max(defect / norm);
            let scale = es.values[7].abs().max(es.values[0].abs());
            mirror_worst = mirror_worst.max((es.values[k] + es.values[7 - k]).abs() / scale);
        }
    }
    outcome(
        pair_worst <= 1e-10 && mirror_worst <= 1e-10,
        format!("||H(Cpsi) + lambda Cpsi||/||H|| worst {pair_worst:.1e}, |lambda_k + lambda_(9-k)| worst {mirror_worst:.1e} (tol 1e-10)"),
    )
}

fn criterion_6() -> Outcome {
    let cfg = SweepConfig {
        track_branches: true,
        ..Default::default()
    };
    let res = match run_sweep(&cfg) {
        Ok(r) => r,
        Err(e) => return outcome(false, format!("sweep failed: {e}")),
    };
    let mut symmetric = true;
    let mut permutations = true;
    for r in &res.records {
        let scale = r.eigenvalues[7].abs();
        for k in 0..8 {
            symmetric &= (r.eigenvalues[k] + r.eigenvalues[7 - k]).abs() <= 1e-10 * scale;
        }
        let mut ids = r.branches.unwrap();
        ids.sort();
        permutations &= ids == [1, 2, 3, 4, 5, 6, 7, 8];
    }
    let zero = run_sweep(&SweepConfig {
        b_steps: 1,
        e_field: 0.0,
        ..Default::default()
    })
    .unwrap();
    let z = zero.records[0].eigenvalues;
    let zero_ok = z[..4].iter().all(|x| (x + 0.0400).abs() < 5e-5)
        && z[4..].iter().all(|x| (x - 0.0400).abs() < 5e-5);
    outcome(
        res.records.len() == 501
            && symmetric
            && permutations
            && zero_ok
            && res.max_deviation <= 1e-10
            && res.unit == EnergyUnit::Kelvin,
        format!(
            "{} points, 8 branches/point {permutations}, symmetric {symmetric}, zero field {:+.4} K / {:+.4} K, worst deviation {:.1e} (tol 1e-10), {} refine-grid warnings",
            res.records.len(),
            z[0],
            z[7],
            res.max_deviation,
            res.warnings.len()
        ),
    )
}

fn criterion_7() -> Outcome {
    let mut worst: f64 = 0.0;
    for (k, f) in grid(4, 3000).iter().enumerate() {
        let f = FieldPoint::new(f.b, f.e, if k % 2 == 0 { 0.0 } else { PI }).unwrap();
        let a = solve_spectrum(&OH, &f).unwrap();
        worst = worst.max(relative_deviation(&a.eigenvalues, &collinear_block_eigenvalues(&OH, &f)));
    }
    outcome(worst <= 1e-10, format!("collinear 2x2-block formula: worst {worst:.1e} (tol 1e-10)"))
}

fn criterion_8() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let (mut unitarity, mut schmidt): (f64, f64) = (0.0, 0.0);
    for f in grid(6, 300) {
        let t = rng.gen_range(0.0..20.0 / OH.delta);
        let u = propagator(&OH, &f, t).unwrap();
        unitarity = unitarity.max((u.adjoint() * u - CMatrix8::identity()).max_abs());
        let psi0 = StateVector::normalized(std::array::from_fn(|_| {
            Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
        }))
        .unwrap();
        let psi = StateVector::normalized(u.mul_vec(psi0.amplitudes())).unwrap();
        let rho = psi.density();
        let a = partial_trace_rotor(&rho).unwrap().purity();
        let b = partial_trace_doublet(&rho).unwrap().purity();
        schmidt = schmidt.max((a - b).abs());
    }
    let period = parity_period_error(&OH).unwrap_or(f64::INFINITY);
    outcome(
        unitarity <= 1e-11 && period <= 1e-6 && schmidt <= 1e-10,
        format!("unitarity {unitarity:.1e} (1e-11), parity period rel. error {period:.1e} (1e-6), Schmidt purity gap {schmidt:.1e} (1e-10)"),
    )
}

fn criterion_9() -> Outcome {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_ohsz"))
        .args(["verify", "--seed", "42", "--samples", "1000"])
        .output()
        .expect("run ohsz");
    let elapsed = start.elapsed();
    let code = out.status.code();

    let mut undetected = Vec::new();
    for i in 0..8 {
        for j in 0..8 {
            let r = verify_with(42, 10, Some(Corruption::new(i, j).unwrap())).unwrap();
            if r.passed() {
                undetected.push((i, j));
            }
        }
    }
    outcome(
        code == Some(0) && elapsed < Duration::from_secs(10) && undetected.is_empty(),
        format!(
            "verify --seed 42 --samples 1000: exit {code:?} in {elapsed:.2?} (limit 10 s); 1% corruption undetected at {} of 64 entries",
            undetected.len()
        ),
    )
}

#[test]
fn acceptance_criteria() {
    let criteria: [(u8, fn() -> Outcome); 9] = [
        (1, criterion_1),
        (2, criterion_2),
        (3, criterion_3),
        (4, criterion_4),
        (5, criterion_5),
        (6, criterion_6),
        (7, criterion_7),
        (8, criterion_8),
        (9, criterion_9),
    ];
    let mut failed = Vec::new();
    for (n, check) in criteria {
        let o = check();
        // direct handle, so the line shows up without --nocapture
        let _ = writeln!(
            io::stderr(),
            "criterion {n}: {} | {}",
            if o.passed { "PASS" } else { "FAIL" },
            o.detail
        );
        if !o.passed {
            failed.push(n);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
