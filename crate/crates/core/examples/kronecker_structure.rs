//! The Hamiltonian written out entry by entry agrees with the
//! doublet ⊗ rotor Kronecker construction.

use oh_stark_zeeman::matrix::kron;
use oh_stark_zeeman::model::{coupling_term, pauli_matrices, spin_matrices};
use oh_stark_zeeman::{build_hamiltonian, build_kronecker_form, FieldPoint, MolecularParameters};

fn main() -> oh_stark_zeeman::Result<()> {
    let s = spin_matrices();
    let sp = pauli_matrices();
    println!("Jz (units of hbar):");
    for i in 0..4 {
        println!("  {:?}", (0..4).map(|j| s.z[(i, j)].re).collect::<Vec<_>>());
    }
    let casimir = s.x * s.x + s.y * s.y + s.z * s.z;
    println!("J^2 diagonal: {:?}", casimir.diagonal().map(|z| z.re));

    let sx_jz = kron::<_, 2, 4, 8>(&sp.x, &s.z);
    println!("sigma_x (x) Jz, row 0: {:?}", (0..8).map(|j| sx_jz[(0, j)].re).collect::<Vec<_>>());

    let p = MolecularParameters::OH;
    let f = FieldPoint::from_lab_units(0.3, 5.0, 40.0)?;
    let h = build_hamiltonian(&p, &f);
    let k = build_kronecker_form(&p, &f);
    println!("\nmax |H_entries - H_kron| / max|H| = {:.2e}", (h - k).max_abs() / h.max_abs());
    println!("trace H = {:.2e} J, asymmetry = {:e}", h.trace(), h.asymmetry());

    let c = coupling_term(&p, &f);
    println!("electric coupling block, rows 0..4 x cols 4..8 (units of 1e-26 J):");
    for i in 0..4 {
        let row: Vec<String> = (4..8).map(|j| format!("{:+.4}", c[(i, j)] / 1e-26)).collect();
        println!("  {}", row.join(" "));
    }
    Ok(())
}
