//! Default magnetic-field sweep (E = 2 kV/cm, θ = 90°, 0 to 0.5 T) as CSV.
//!
//! ```bash
//! cargo run --example field_sweep -- sweep.csv
//! ```
//! Without an argument a short summary is printed instead.

use oh_stark_zeeman::sweep::{read_csv, run_sweep, write_csv, SweepConfig};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cfg = SweepConfig {
        track_branches: true,
        ..Default::default()
    };
    let res = run_sweep(&cfg)?;

    if let Some(path) = std::env::args().nth(1) {
        write_csv(&res.records, std::fs::File::create(&path)?)?;
        let back = read_csv(std::fs::File::open(&path)?)?;
        assert_eq!(back, res.records);
        println!("wrote {} rows to {path}", back.len());
    }

    println!("points: {}, worst analytic/oracle deviation {:.1e}", res.records.len(), res.max_deviation);
    for w in &res.warnings {
        println!("  {w}");
    }
    for r in res.records.iter().step_by(100) {
        let ev: Vec<String> = r.eigenvalues.iter().map(|x| format!("{x:+.4}")).collect();
        println!("B = {:.2} T  [K] {}", r.b, ev.join(" "));
    }
    Ok(())
}
