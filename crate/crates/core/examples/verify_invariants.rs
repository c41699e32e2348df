//! Seeded invariant suite, then the same suite with one Hamiltonian entry
//! perturbed by 1 %.

use oh_stark_zeeman::verify::{verify_all, verify_with, Corruption};

fn main() -> oh_stark_zeeman::Result<()> {
    let report = verify_all(42, 1000)?;
    println!("{report}\n");

    let bad = verify_with(42, 50, Some(Corruption::new(0, 4)?))?;
    println!("{bad}");
    let failed: Vec<_> = bad.failures().map(|c| c.name).collect();
    println!("\nnegative control tripped: {}", failed.join(", "));
    Ok(())
}
