//! Labelled spectrum at a single field point, with the oracle alongside.
//!
//! ```bash
//! cargo run --example spectrum_at_point -- 0.2 2.0 90
//! ```
//! Arguments: B in tesla, E in kV/cm, θ in degrees.

use oh_stark_zeeman::sweep::eigen_point;
use oh_stark_zeeman::{EnergyUnit, FieldPoint, MolecularParameters};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<f64> = std::env::args()
        .skip(1)
        .map(|a| a.parse())
        .collect::<Result<_, _>>()?;
    let (b, e_kvcm, theta_deg) = match args.as_slice() {
        [] => (0.2, 2.0, 90.0),
        [b, e, t] => (*b, *e, *t),
        _ => return Err("expected: B[T] E[kV/cm] theta[deg]".into()),
    };
    let f = FieldPoint::from_lab_units(b, e_kvcm, theta_deg)?;
    let p = MolecularParameters::OH;

    let report = eigen_point(f.b, f.e, f.theta, &p, EnergyUnit::Kelvin)?;
    println!("{report}\n");

    // same point, parallel fields: the 2x2-block column appears
    let report = eigen_point(f.b, f.e, 0.0, &p, EnergyUnit::Gigahertz)?;
    println!("{report}");
    Ok(())
}
