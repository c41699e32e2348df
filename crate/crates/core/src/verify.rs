//! Randomised self-check of every invariant the crate relies on.
//!
//! [`verify_all`] draws field points from a seeded ChaCha8 stream and runs
//! each check over all of them. A [`Corruption`] perturbs one Hamiltonian
//! entry before the checks see it; a healthy suite must then report failures.

use std::f64::consts::PI;
use std::fmt;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::analytic::{collinear_block_eigenvalues, lambda_sq_scale, solve_quartic_in_lambda_sq, solve_spectrum};
use crate::charpoly::{charpoly_oracle, even_coefficient_deviation, even_coefficients, scale_variables};
use crate::dynamics::{crossing_times, partial_trace_doublet, partial_trace_rotor, propagator, StateVector};
use crate::error::{Error, Result};
use crate::matrix::{kron, CMatrix4, CMatrix8, Matrix8};
use crate::model::{
    build_hamiltonian, build_kronecker_form, dimensionless_hamiltonian, pauli_matrices, FieldPoint,
    MolecularParameters,
};
use crate::oracle::{jacobi_eigen, residual_norms};
use crate::symmetry::{anticommutation_residual, build_chiral_operator};

pub const B_MAX: f64 = 2.0;
pub const E_MAX: f64 = 1e6;

/// Perturb entry `(row, col)` and its mirror: scale by 1.01, or add
/// `0.01·max|H|` when the entry is zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Corruption {
    pub row: usize,
    pub col: usize,
}

impl Corruption {
    pub fn new(row: usize, col: usize) -> Result<Self> {
        if row >= 8 || col >= 8 {
            return Err(Error::Config(format!("entry ({row}, {col}) is outside 8×8")));
        }
        Ok(Self { row, col })
    }

    pub fn apply(&self, h: &Matrix8) -> Matrix8 {
        let mut out = *h;
        let x = h[(self.row, self.col)];
        let y = if x != 0.0 { x * 1.01 } else { 0.01 * h.max_abs() };
        out[(self.row, self.col)] = y;
        out[(self.col, self.row)] = y;
        out
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CheckOutcome {
    pub name: &'static str,
    /// Worst observed value of the checked quantity.
    pub worst: f64,
    pub tolerance: f64,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerifyReport {
    pub seed: u64,
    pub samples: usize,
    pub corruption: Option<Corruption>,
    pub checks: Vec<CheckOutcome>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckOutcome> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "seed {} | {} samples", self.seed, self.samples)?;
        if let Some(c) = self.corruption {
            writeln!(f, "corrupted entry ({}, {})", c.row, c.col)?;
        }
        for c in &self.checks {
            writeln!(
                f,
                "{} {:<28} worst {:>10.3e}  tol {:.0e}",
                if c.passed { "PASS" } else { "FAIL" },
                c.name,
                c.worst,
                c.tolerance
            )?;
        }
        write!(f, "{}", if self.passed() { "all checks passed" } else { "verification FAILED" })
    }
}

struct Tally {
    name: &'static str,
    tolerance: f64,
    worst: f64,
    // NaN or an error anywhere fails the check
    broken: bool,
}

impl Tally {
    fn new(name: &'static str, tolerance: f64) -> Self {
        Self { name, tolerance, worst: 0.0, broken: false }
    }

    fn record(&mut self, x: f64) {
        if x.is_nan() {
            self.broken = true;
        } else {
            self.worst = self.worst.max(x);
        }
    }

    fn record_result(&mut self, r: Result<f64>) {
        match r {
            Ok(x) => self.record(x),
            Err(_) => self.broken = true,
        }
    }

    fn finish(self) -> CheckOutcome {
        let worst = if self.broken { f64::INFINITY } else { self.worst };
        CheckOutcome {
            name: self.name,
            worst,
            tolerance: self.tolerance,
            passed: worst <= self.tolerance,
        }
    }
}

fn max_rel(a: &[f64; 8], b: &[f64; 8]) -> f64 {
    let scale = b.iter().fold(0.0f64, |m, x| m.max(x.abs())).max(f64::MIN_POSITIVE);
    a.iter().zip(b).map(|(x, y)| (x - y).abs() / scale).fold(0.0, f64::max)
}

fn random_field(rng: &mut ChaCha8Rng) -> FieldPoint {
    FieldPoint::new(
        rng.gen_range(0.0..=B_MAX),
        rng.gen_range(0.0..=E_MAX),
        rng.gen_range(0.0..=PI),
    )
    .expect("sampled ranges are valid")
}

fn random_orthogonal(rng: &mut ChaCha8Rng) -> Result<Matrix8> {
    let a = Matrix8::from_fn(|_, _| rng.gen_range(-1.0..1.0));
    Ok(jacobi_eigen(&(a + a.transpose()))?.vectors)
}

fn random_state(rng: &mut ChaCha8Rng) -> Result<StateVector> {
    StateVector::normalized(std::array::from_fn(|_| {
        Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
    }))
}

/// Run every check on `samples` random field points.
pub fn verify_all(seed: u64, samples: usize) -> Result<VerifyReport> {
    verify_with(seed, samples, None)
}

pub fn verify_with(seed: u64, samples: usize, corruption: Option<Corruption>) -> Result<VerifyReport> {
    if samples == 0 {
        return Err(Error::Config("samples must be positive".into()));
    }
    let p = MolecularParameters::OH;
    let corrupt = |h: Matrix8| corruption.map_or(h, |c| c.apply(&h));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let mut structure = Tally::new("symmetric_trace_free", 1e-14);
    let mut kron_form = Tally::new("kronecker_form", 1e-14);
    let mut linearity = Tally::new("field_linearity", 1e-14);
    let mut odd = Tally::new("odd_coefficients_vanish", 1e-12);
    let mut even = Tally::new("even_coefficients", 1e-10);
    let mut vieta = Tally::new("vieta_relations", 1e-10);
    let mut closed = Tally::new("closed_form_vs_oracle", 1e-10);
    let mut residuals = Tally::new("jacobi_residuals", 1e-12);
    let mut similarity = Tally::new("similarity_invariance", 1e-12);
    let mut anti = Tally::new("anticommutation", 1e-13);
    let mut pairing = Tally::new("pairing_theorem", 1e-10);
    let mut mirror = Tally::new("spectral_symmetry", 1e-10);
    let mut collinear = Tally::new("collinear_blocks", 1e-10);
    let mut unitarity = Tally::new("propagator_unitarity", 1e-11);
    let mut composition = Tally::new("propagator_composition", 1e-10);
    let mut energy = Tally::new("energy_conservation", 1e-10);
    let mut schmidt = Tally::new("schmidt_purity", 1e-10);

    let mut construction = Tally::new("chiral_construction", 1e-12);
    let op = match build_chiral_operator() {
        Ok(op) => {
            let c = op.c;
            construction.record((c * c - CMatrix8::identity()).max_abs());
            construction.record((c.adjoint() * c - CMatrix8::identity()).max_abs());
            construction.record((c.determinant() - Complex64::from(1.0)).norm());
            Some(op)
        }
        Err(_) => {
            construction.broken = true;
            None
        }
    };

    for k in 0..samples {
        let f = random_field(&mut rng);
        let h = corrupt(build_hamiltonian(&p, &f));
        let hd = corrupt(dimensionless_hamiltonian(&p, &f));
        let h_max = h.max_abs();
        let hd_norm = hd.frobenius_norm();

        structure.record((h.asymmetry() / h_max).max(h.trace().abs() / h_max));
        kron_form.record((h - build_kronecker_form(&p, &f)).max_abs() / h_max);
        {
            let at = |b, e| build_hamiltonian(&p, &FieldPoint::new(b, e, f.theta).unwrap());
            let combo = h - at(f.b, 0.0) - at(0.0, f.e) + at(0.0, 0.0);
            linearity.record(combo.max_abs() / h_max);
        }

        let s = scale_variables(&p, &f);
        let c = even_coefficients(&s);
        let poly = charpoly_oracle(&hd);
        odd.record(poly.odd_residual());
        even.record(even_coefficient_deviation(&c, &poly));

        vieta.record_result(solve_quartic_in_lambda_sq(&c).map(|x| {
            let scale = lambda_sq_scale(&c);
            let sum = (x.iter().sum::<f64>() + c.p6).abs() / scale;
            let prod = (x.iter().product::<f64>() - c.p0).abs() / scale.powi(4);
            sum.max(prod)
        }));

        let es = match jacobi_eigen(&hd) {
            Ok(es) => es,
            Err(_) => {
                for t in [&mut closed, &mut residuals, &mut similarity, &mut pairing, &mut mirror] {
                    t.broken = true;
                }
                continue;
            }
        };
        let unit = p.doublet_splitting();
        closed.record_result(
            solve_spectrum(&p, &f).map(|sp| max_rel(&sp.eigenvalues, &es.values.map(|x| x * unit))),
        );
        let (defect, orth) = residual_norms(&hd, &es);
        residuals.record((defect / hd_norm).max(orth));
        similarity.record_result(random_orthogonal(&mut rng).and_then(|q| {
            let rotated = jacobi_eigen(&(q.transpose() * hd * q))?;
            Ok(max_rel(&rotated.values, &es.values))
        }));

        let lam_max = es.values.iter().fold(0.0f64, |m, x| m.max(x.abs()));
        for i in 0..8 {
            mirror.record((es.values[i] + es.values[7 - i]).abs() / lam_max);
        }
        if let Some(op) = &op {
            anti.record(anticommutation_residual(&hd, op));
            for i in 0..8 {
                let image = op.r.mul_vec(&es.vector(i));
                let r = hd.mul_vec(&image);
                let defect = r
                    .iter()
                    .zip(&image)
                    .map(|(a, b)| (a + es.values[i] * b).powi(2))
                    .sum::<f64>()
                    .sqrt();
                pairing.record(defect / lam_max);
            }
        }

        // collinear fields: alternate θ = 0 and θ = π
        let fc = FieldPoint::new(f.b, f.e, if k % 2 == 0 { 0.0 } else { PI }).unwrap();
        let blocks = collinear_block_eigenvalues(&p, &fc);
        collinear.record_result(solve_spectrum(&p, &fc).map(|sp| max_rel(&sp.eigenvalues, &blocks)));
        collinear.record_result(
            jacobi_eigen(&corrupt(dimensionless_hamiltonian(&p, &fc)))
                .map(|es| max_rel(&es.values.map(|x| x * unit), &blocks)),
        );

        // dynamics on the unmodified generator
        let t_scale = 10.0 / p.delta;
        let (t1, t2) = (rng.gen_range(0.0..t_scale), rng.gen_range(0.0..t_scale));
        let dyn_check = (|| -> Result<(f64, f64, f64, f64)> {
            let u1 = propagator(&p, &f, t1)?;
            let u2 = propagator(&p, &f, t2)?;
            let u12 = propagator(&p, &f, t1 + t2)?;
            let unit_err = (u1.adjoint() * u1 - CMatrix8::identity()).max_abs();
            let comp_err = (u12 - u1 * u2).max_abs();
            let psi0 = random_state(&mut rng)?;
            let psi_t = StateVector::normalized(u1.mul_vec(psi0.amplitudes()))?;
            let hc = build_hamiltonian(&p, &f).to_complex();
            let scale = hc.frobenius_norm();
            let drift = (psi_t.expectation(&hc) - psi0.expectation(&hc)).abs() / scale;
            let rho = psi_t.density();
            let pur = (partial_trace_rotor(&rho)?.purity() - partial_trace_doublet(&rho)?.purity()).abs();
            Ok((unit_err, comp_err, drift, pur))
        })();
        match dyn_check {
            Ok((a, b, c, d)) => {
                unitarity.record(a);
                composition.record(b);
                energy.record(c);
                schmidt.record(d);
            }
            Err(_) => {
                for t in [&mut unitarity, &mut composition, &mut energy, &mut schmidt] {
                    t.broken = true;
                }
            }
        }
    }

    let mut period = Tally::new("parity_period", 1e-6);
    period.record_result(parity_period_error(&p));

    Ok(VerifyReport {
        seed,
        samples,
        corruption,
        checks: [
            structure, kron_form, linearity, odd, even, vieta, closed, residuals, similarity,
            construction, anti, pairing, mirror, collinear, unitarity, composition, energy,
            schmidt, period,
        ]
        .into_iter()
        .map(Tally::finish)
        .collect(),
    })
}

/// Relative error of the zero-field `⟨σx⊗I⟩` oscillation period against
/// `2π/Δ`, measured from zero crossings.
pub fn parity_period_error(p: &MolecularParameters) -> Result<f64> {
    let mut a = [Complex64::from(0.0); 8];
    a[0] = Complex64::from(1.0);
    a[4] = Complex64::from(1.0);
    let psi = StateVector::normalized(a)?;
    let sx: CMatrix8 = kron(&pauli_matrices().x, &CMatrix4::identity());
    let expected = 2.0 * PI / p.delta;
    let t = crossing_times(p, &FieldPoint::zero(), &psi, &sx, 0.0, 3.2 * expected, 96)?;
    if t.len() < 5 {
        return Err(Error::InvalidInput(format!("found only {} crossings", t.len())));
    }
    // crossings alternate direction; same-direction crossings are one period apart
    let periods = [t[2] - t[0], t[3] - t[1], t[4] - t[2]];
    Ok(periods
        .iter()
        .map(|x| (x / expected - 1.0).abs())
        .fold(0.0, f64::max))
}
