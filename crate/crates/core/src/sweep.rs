//! Magnetic-field sweeps, single-point reports and their file formats.

use std::fmt;
use std::io::{Read, Write};

use serde::Serialize;

use crate::analytic::{collinear_block_eigenvalues, solve_spectrum, StateLabel};
use crate::constants::{convert_energy, EnergyUnit};
use crate::error::{Error, Result};
use crate::model::{build_hamiltonian, FieldPoint, MolecularParameters};
use crate::oracle::{hamiltonian_eigensystem, EigenSystem};
use crate::symmetry::{anticommutation_residual, build_chiral_operator};

/// Analytic and oracle spectra must agree to this relative tolerance at every
/// sweep point.
pub const SWEEP_AGREEMENT_TOL: f64 = 1e-9;
/// Matched eigenvector overlaps below this trigger a refine-grid warning.
pub const MIN_BRANCH_OVERLAP: f64 = 0.9;

#[derive(Debug, Clone, PartialEq)]
pub struct SweepConfig {
    pub b_start: f64,
    pub b_stop: f64,
    pub b_steps: usize,
    /// V/m.
    pub e_field: f64,
    /// Radians.
    pub theta: f64,
    pub params: MolecularParameters,
    pub unit: EnergyUnit,
    pub track_branches: bool,
}

impl Default for SweepConfig {
    /// 0 → 0.5 T in 501 points at E = 2 kV/cm, θ = π/2, energies in kelvin.
    fn default() -> Self {
        Self {
            b_start: 0.0,
            b_stop: 0.5,
            b_steps: 501,
            e_field: 2e5,
            theta: std::f64::consts::FRAC_PI_2,
            params: MolecularParameters::OH,
            unit: EnergyUnit::Kelvin,
            track_branches: false,
        }
    }
}

impl SweepConfig {
    pub fn validate(&self) -> Result<()> {
        if self.b_steps < 1 {
            return Err(Error::Config("b_steps must be at least 1".into()));
        }
        if !(self.b_start.is_finite() && self.b_stop.is_finite()) {
            return Err(Error::Config("B range must be finite".into()));
        }
        if self.b_stop < self.b_start {
            return Err(Error::Config(format!(
                "b_stop ({}) must not be below b_start ({})",
                self.b_stop, self.b_start
            )));
        }
        // field point validation covers sign and angle range
        FieldPoint::new(self.b_start, self.e_field, self.theta)
            .map_err(|e| Error::Config(e.to_string()))?;
        Ok(())
    }

    pub fn grid(&self) -> Vec<f64> {
        if self.b_steps == 1 {
            return vec![self.b_start];
        }
        let step = (self.b_stop - self.b_start) / (self.b_steps - 1) as f64;
        (0..self.b_steps)
            .map(|i| {
                if i + 1 == self.b_steps {
                    self.b_stop
                } else {
                    self.b_start + step * i as f64
                }
            })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepRecord {
    /// Tesla.
    pub b: f64,
    /// V/m.
    pub e: f64,
    /// Radians.
    pub theta: f64,
    /// Ascending, in the sweep's unit.
    pub eigenvalues: [f64; 8],
    /// Branch identity (1..=8) of each sorted slot, when tracking.
    pub branches: Option<[u8; 8]>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RefineGrid {
    pub index: usize,
    pub b: f64,
    pub min_overlap: f64,
}

impl fmt::Display for RefineGrid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "refine grid near B = {} T (point {}): weakest branch overlap {:.3}",
            self.b, self.index, self.min_overlap
        )
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepResult {
    pub unit: EnergyUnit,
    pub records: Vec<SweepRecord>,
    pub warnings: Vec<RefineGrid>,
    /// Worst analytic/oracle relative deviation seen.
    pub max_deviation: f64,
}

/// Relative deviation `max |a − b| / max |b|`.
pub fn relative_deviation(analytic: &[f64; 8], oracle: &[f64; 8]) -> f64 {
    let scale = oracle.iter().fold(0.0f64, |m, x| m.max(x.abs()));
    if scale == 0.0 {
        return analytic.iter().fold(0.0f64, |m, x| m.max(x.abs()));
    }
    analytic
        .iter()
        .zip(oracle)
        .map(|(a, b)| (a - b).abs() / scale)
        .fold(0.0, f64::max)
}

/// Match the current eigenvectors to the previous ones by greedy maximal
/// `|⟨v_prev|v_cur⟩|`. Returns the branch ids of the current slots and the
/// weakest matched overlap.
pub fn match_branches(prev: &EigenSystem, prev_ids: &[u8; 8], cur: &EigenSystem) -> ([u8; 8], f64) {
    let mut overlap = [[0.0f64; 8]; 8];
    for (i, row) in overlap.iter_mut().enumerate() {
        let a = prev.vector(i);
        for (j, o) in row.iter_mut().enumerate() {
            let b = cur.vector(j);
            *o = a.iter().zip(&b).map(|(x, y)| x * y).sum::<f64>().abs();
        }
    }
    let mut ids = [0u8; 8];
    let mut used_prev = [false; 8];
    let mut used_cur = [false; 8];
    let mut weakest = f64::INFINITY;
    for _ in 0..8 {
        let mut best = (0, 0, -1.0);
        for i in (0..8).filter(|&i| !used_prev[i]) {
            for j in (0..8).filter(|&j| !used_cur[j]) {
                if overlap[i][j] > best.2 {
                    best = (i, j, overlap[i][j]);
                }
            }
        }
        let (i, j, o) = best;
        used_prev[i] = true;
        used_cur[j] = true;
        ids[j] = prev_ids[i];
        weakest = weakest.min(o);
    }
    (ids, weakest)
}

pub fn run_sweep(cfg: &SweepConfig) -> Result<SweepResult> {
    cfg.validate()?;
    let mut records = Vec::with_capacity(cfg.b_steps);
    let mut warnings = Vec::new();
    let mut max_deviation: f64 = 0.0;
    let mut previous: Option<(EigenSystem, [u8; 8])> = None;

    for (index, b) in cfg.grid().into_iter().enumerate() {
        let f = FieldPoint::new(b, cfg.e_field, cfg.theta)?;
        let spectrum = solve_spectrum(&cfg.params, &f)?;
        let es = hamiltonian_eigensystem(&cfg.params, &f)?;
        let deviation = relative_deviation(&spectrum.eigenvalues, &es.values);
        if !(deviation <= SWEEP_AGREEMENT_TOL) {
            return Err(Error::MismatchAtPoint { b, deviation });
        }
        max_deviation = max_deviation.max(deviation);

        let branches = if cfg.track_branches {
            let ids = match &previous {
                None => std::array::from_fn(|k| k as u8 + 1),
                Some((prev, prev_ids)) => {
                    let (ids, weakest) = match_branches(prev, prev_ids, &es);
                    if weakest < MIN_BRANCH_OVERLAP {
                        warnings.push(RefineGrid {
                            index,
                            b,
                            min_overlap: weakest,
                        });
                    }
                    ids
                }
            };
            previous = Some((es, ids));
            Some(ids)
        } else {
            None
        };

        records.push(SweepRecord {
            b,
            e: cfg.e_field,
            theta: cfg.theta,
            eigenvalues: spectrum.eigenvalues.map(|x| convert_energy(x, cfg.unit)),
            branches,
        });
    }

    Ok(SweepResult {
        unit: cfg.unit,
        records,
        warnings,
        max_deviation,
    })
}

fn csv_header(with_branches: bool) -> Vec<String> {
    let mut h = vec!["b_tesla".to_string(), "e_vpm".into(), "theta_rad".into()];
    h.extend((1..=8).map(|k| format!("ev{k}")));
    if with_branches {
        h.extend((1..=8).map(|k| format!("branch{k}")));
    }
    h
}

fn fmt17(x: f64) -> String {
    format!("{x:.16e}")
}

/// `b_tesla,e_vpm,theta_rad,ev1..ev8[,branch1..branch8]`, 17 significant
/// digits per value.
pub fn write_csv<W: Write>(records: &[SweepRecord], out: W) -> Result<()> {
    let with_branches = records.first().is_some_and(|r| r.branches.is_some());
    let io = |e: csv::Error| Error::InvalidInput(format!("csv: {e}"));
    let mut w = csv::Writer::from_writer(out);
    w.write_record(csv_header(with_branches)).map_err(io)?;
    for r in records {
        let mut row = vec![fmt17(r.b), fmt17(r.e), fmt17(r.theta)];
        row.extend(r.eigenvalues.iter().map(|&x| fmt17(x)));
        if with_branches {
            let ids = r.branches.ok_or_else(|| {
                Error::InvalidInput("records mix tracked and untracked branches".into())
            })?;
            row.extend(ids.iter().map(|k| k.to_string()));
        }
        w.write_record(row).map_err(io)?;
    }
    w.flush()
        .map_err(|e| Error::InvalidInput(format!("csv: {e}")))
}

pub fn read_csv<R: Read>(input: R) -> Result<Vec<SweepRecord>> {
    let bad = |msg: String| Error::InvalidInput(format!("csv: {msg}"));
    let mut rdr = csv::Reader::from_reader(input);
    let headers = rdr.headers().map_err(|e| bad(e.to_string()))?.clone();
    let with_branches = match headers.len() {
        11 => false,
        19 => true,
        n => return Err(bad(format!("expected 11 or 19 columns, found {n}"))),
    };
    if headers.iter().collect::<Vec<_>>() != csv_header(with_branches) {
        return Err(bad("unexpected header".into()));
    }
    let num = |s: &str| s.parse::<f64>().map_err(|e| bad(format!("`{s}`: {e}")));
    rdr.records()
        .map(|row| {
            let row = row.map_err(|e| bad(e.to_string()))?;
            let eigenvalues = {
                let mut v = [0.0; 8];
                for (k, slot) in v.iter_mut().enumerate() {
                    *slot = num(&row[3 + k])?;
                }
                v
            };
            let branches = if with_branches {
                let mut ids = [0u8; 8];
                for (k, slot) in ids.iter_mut().enumerate() {
                    *slot = row[11 + k]
                        .parse()
                        .map_err(|e| bad(format!("branch id: {e}")))?;
                }
                Some(ids)
            } else {
                None
            };
            Ok(SweepRecord {
                b: num(&row[0])?,
                e: num(&row[1])?,
                theta: num(&row[2])?,
                eigenvalues,
                branches,
            })
        })
        .collect()
}

#[derive(Serialize)]
struct JsonRecord<'a> {
    b: f64,
    eigenvalues: &'a [f64; 8],
    #[serde(skip_serializing_if = "Option::is_none")]
    branches: Option<&'a [u8; 8]>,
}

/// JSON array of `{b, eigenvalues, branches}` objects.
pub fn write_json<W: Write>(records: &[SweepRecord], out: W) -> Result<()> {
    let rows: Vec<JsonRecord> = records
        .iter()
        .map(|r| JsonRecord {
            b: r.b,
            eigenvalues: &r.eigenvalues,
            branches: r.branches.as_ref(),
        })
        .collect();
    serde_json::to_writer_pretty(out, &rows).map_err(|e| Error::InvalidInput(format!("json: {e}")))
}

/// Diagnostics for a single field point.
#[derive(Debug, Clone, PartialEq)]
pub struct PointReport {
    pub field: FieldPoint,
    pub unit: EnergyUnit,
    /// `(label, eigenvalue in unit, partner slot)`, ascending.
    pub rows: Vec<(StateLabel, f64, usize)>,
    /// Jacobi eigenvalues in unit.
    pub oracle: [f64; 8],
    pub max_deviation: f64,
    /// `‖{H, C}‖_F / ‖H‖_F`
    pub anticommutation_residual: f64,
    /// 2×2-block eigenvalues, present when the fields are collinear.
    pub collinear_reference: Option<[f64; 8]>,
}

pub fn eigen_point(
    b: f64,
    e: f64,
    theta: f64,
    params: &MolecularParameters,
    unit: EnergyUnit,
) -> Result<PointReport> {
    let f = FieldPoint::new(b, e, theta)?;
    let spectrum = solve_spectrum(params, &f)?;
    let es = hamiltonian_eigensystem(params, &f)?;
    let op = build_chiral_operator()?;
    let h = build_hamiltonian(params, &f);
    let collinear = theta == 0.0 || theta == std::f64::consts::PI;
    Ok(PointReport {
        field: f,
        unit,
        rows: (0..8)
            .map(|i| {
                (
                    spectrum.labels[i],
                    convert_energy(spectrum.eigenvalues[i], unit),
                    spectrum.partner(i),
                )
            })
            .collect(),
        oracle: es.values.map(|x| convert_energy(x, unit)),
        max_deviation: relative_deviation(&spectrum.eigenvalues, &es.values),
        anticommutation_residual: anticommutation_residual(&h, &op),
        collinear_reference: collinear
            .then(|| collinear_block_eigenvalues(params, &f).map(|x| convert_energy(x, unit))),
    })
}

impl fmt::Display for PointReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "B = {} T, E = {} V/m, theta = {} rad",
            self.field.b, self.field.e, self.field.theta
        )?;
        write!(f, "{:>4}  {:>10}  {:>24}  {:>24}  {:>7}", "slot", "label", format!("analytic [{}]", self.unit), format!("oracle [{}]", self.unit), "partner")?;
        if self.collinear_reference.is_some() {
            write!(f, "  {:>24}", "2x2 blocks")?;
        }
        writeln!(f)?;
        for (i, (label, value, partner)) in self.rows.iter().enumerate() {
            write!(
                f,
                "{:>4}  {:>10}  {:>24.16e}  {:>24.16e}  {:>7}",
                i + 1,
                label.to_string(),
                value,
                self.oracle[i],
                partner + 1
            )?;
            if let Some(reference) = &self.collinear_reference {
                write!(f, "  {:>24.16e}", reference[i])?;
            }
            writeln!(f)?;
        }
        writeln!(f, "max relative deviation (analytic vs oracle): {:.3e}", self.max_deviation)?;
        write!(f, "anticommutator residual ||HC+CH||/||H||:    {:.3e}", self.anticommutation_residual)
    }
}
