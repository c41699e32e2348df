use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;

use oh_stark_zeeman::dynamics::{trajectory, StateVector};
use oh_stark_zeeman::sweep::{eigen_point, run_sweep, write_csv, write_json, SweepConfig};
use oh_stark_zeeman::verify::verify_all;
use oh_stark_zeeman::{convert_energy, EnergyUnit, Error, FieldPoint, MolecularParameters};

#[derive(Parser)]
#[command(name = "ohsz", version, about = "Stark-Zeeman spectrum of ground-state OH")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Closed-form spectrum over a range of B, cross-checked at every point.
    Sweep(SweepArgs),
    /// Labelled spectrum and diagnostics at one field point.
    Eigen(PointArgs),
    /// Propagate a basis state and print populations over time.
    Evolve(EvolveArgs),
    /// Randomised invariant checks.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct Molecule {
    /// Λ-doublet splitting.
    #[arg(long, default_value_t = 1.667)]
    delta_ghz: f64,
    /// Electric dipole moment.
    #[arg(long, default_value_t = 1.66)]
    mu_e_debye: f64,
}

impl Molecule {
    fn params(&self) -> Result<MolecularParameters, Error> {
        MolecularParameters::from_lab_units(self.delta_ghz, self.mu_e_debye)
    }
}

#[derive(Args)]
struct Fields {
    #[arg(long, default_value_t = 2.0)]
    e_kvcm: f64,
    #[arg(long, default_value_t = 90.0)]
    theta_deg: f64,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Args)]
struct SweepArgs {
    #[arg(long, default_value_t = 0.0)]
    b_start: f64,
    #[arg(long, default_value_t = 0.5)]
    b_stop: f64,
    /// Number of grid points, endpoints included.
    #[arg(long, default_value_t = 501)]
    b_steps: usize,
    #[command(flatten)]
    fields: Fields,
    #[command(flatten)]
    molecule: Molecule,
    /// J, K or GHz.
    #[arg(long, default_value = "K")]
    unit: EnergyUnit,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
    /// Write here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Label branches by eigenvector continuity.
    #[arg(long)]
    track_branches: bool,
}

#[derive(Args)]
struct PointArgs {
    #[arg(long, default_value_t = 0.0)]
    b: f64,
    #[command(flatten)]
    fields: Fields,
    #[command(flatten)]
    molecule: Molecule,
    #[arg(long, default_value = "K")]
    unit: EnergyUnit,
}

#[derive(Args)]
struct EvolveArgs {
    #[arg(long, default_value_t = 0.0)]
    b: f64,
    #[command(flatten)]
    fields: Fields,
    #[command(flatten)]
    molecule: Molecule,
    /// Basis index 0..7 (4·doublet + rotor) of the initial state.
    #[arg(long, default_value_t = 0)]
    initial: usize,
    /// Superpose with a second basis state, equal weights.
    #[arg(long)]
    with: Option<usize>,
    /// End time in nanoseconds.
    #[arg(long, default_value_t = 2.0)]
    t_stop_ns: f64,
    #[arg(long, default_value_t = 200)]
    t_steps: usize,
    #[arg(long, default_value = "K")]
    unit: EnergyUnit,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, default_value_t = 42)]
    seed: u64,
    #[arg(long, default_value_t = 1000)]
    samples: usize,
}

enum Failure {
    Usage(String),
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::MismatchAtPoint { .. }
            | Error::ImaginaryResidue { .. }
            | Error::NegativeRoot { .. }
            | Error::NoConvergence { .. }
            | Error::ConstructionMismatch { .. } => Failure::Check(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn output(path: &Option<PathBuf>) -> Result<Box<dyn Write>, Failure> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn field(b: f64, f: &Fields) -> Result<FieldPoint, Failure> {
    Ok(FieldPoint::from_lab_units(b, f.e_kvcm, f.theta_deg)?)
}

fn sweep(a: SweepArgs) -> Result<(), Failure> {
    let f = field(a.b_start, &a.fields)?;
    let cfg = SweepConfig {
        b_start: a.b_start,
        b_stop: a.b_stop,
        b_steps: a.b_steps,
        e_field: f.e,
        theta: f.theta,
        params: a.molecule.params()?,
        unit: a.unit,
        track_branches: a.track_branches,
    };
    let res = run_sweep(&cfg)?;
    for w in &res.warnings {
        eprintln!("warning: {w}");
    }
    let mut out = output(&a.out)?;
    match a.format {
        Format::Csv => write_csv(&res.records, &mut out)?,
        Format::Json => write_json(&res.records, &mut out)?,
    }
    out.flush()?;
    eprintln!(
        "{} points, max analytic/oracle deviation {:.2e}",
        res.records.len(),
        res.max_deviation
    );
    Ok(())
}

fn eigen(a: PointArgs) -> Result<(), Failure> {
    let f = field(a.b, &a.fields)?;
    let report = eigen_point(f.b, f.e, f.theta, &a.molecule.params()?, a.unit)?;
    println!("{report}");
    Ok(())
}

fn evolve(a: EvolveArgs) -> Result<(), Failure> {
    let f = field(a.b, &a.fields)?;
    let p = a.molecule.params()?;
    if a.initial > 7 || a.with.is_some_and(|k| k > 7) {
        return Err(Failure::Usage("basis indices run from 0 to 7".into()));
    }
    if a.t_steps == 0 || !(a.t_stop_ns > 0.0) {
        return Err(Failure::Usage("need --t-steps >= 1 and --t-stop-ns > 0".into()));
    }
    let mut amps = [Complex64::from(0.0); 8];
    amps[a.initial] = Complex64::from(1.0);
    if let Some(k) = a.with {
        amps[k] += Complex64::from(1.0);
    }
    let psi0 = StateVector::normalized(amps)?;
    let dt = a.t_stop_ns * 1e-9 / a.t_steps as f64;
    let times: Vec<f64> = (0..=a.t_steps).map(|k| k as f64 * dt).collect();
    let traj = trajectory(&p, &f, &psi0, &times)?;

    let mut out = output(&a.out)?;
    write!(out, "t_s")?;
    for k in 1..=8 {
        write!(out, ",pop{k}")?;
    }
    writeln!(out, ",doublet_purity,energy_{}", a.unit)?;
    for pt in traj {
        write!(out, "{:.16e}", pt.t)?;
        for x in pt.populations {
            write!(out, ",{x:.16e}")?;
        }
        writeln!(
            out,
            ",{:.16e},{:.16e}",
            pt.doublet_purity,
            convert_energy(pt.energy, a.unit)
        )?;
    }
    out.flush()?;
    Ok(())
}

fn verify(a: VerifyArgs) -> Result<(), Failure> {
    let report = verify_all(a.seed, a.samples)?;
    println!("{report}");
    if report.passed() {
        Ok(())
    } else {
        Err(Failure::Check(format!(
            "{} check(s) failed",
            report.failures().count()
        )))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Sweep(a) => sweep(a),
        Command::Eigen(a) => eigen(a),
        Command::Evolve(a) => evolve(a),
        Command::Verify(a) => verify(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
