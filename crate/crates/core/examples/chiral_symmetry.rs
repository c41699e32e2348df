//! The chiral operator C, its anticommutation with H and the ±λ pairing of
//! eigenvectors.

use num_complex::Complex64;
use oh_stark_zeeman::oracle::hamiltonian_eigensystem;
use oh_stark_zeeman::symmetry::{anticommutation_residual, build_chiral_operator, pair_eigenvector};
use oh_stark_zeeman::{build_hamiltonian, FieldPoint, MolecularParameters};

fn main() -> oh_stark_zeeman::Result<()> {
    let op = build_chiral_operator()?;
    println!("C (nonzero entries):");
    for i in 0..8 {
        for j in 0..8 {
            let z = op.c[(i, j)];
            if z != Complex64::from(0.0) {
                println!("  C[{i}][{j}] = {z}");
            }
        }
    }
    println!("det C = {}", op.c.determinant());

    let p = MolecularParameters::OH;
    let f = FieldPoint::from_lab_units(0.25, 3.0, 60.0)?;
    let h = build_hamiltonian(&p, &f);
    println!("\n||HC + CH|| / ||H|| = {:.1e}", anticommutation_residual(&h, &op));

    let es = hamiltonian_eigensystem(&p, &f)?;
    let hc = h.to_complex();
    for k in 0..4 {
        let psi = es.vector(k).map(Complex64::from);
        let image = pair_eigenvector(&psi, &op);
        let h_image = hc.mul_vec(&image);
        // H (Cψ) should be −λ (Cψ)
        let defect: f64 = h_image
            .iter()
            .zip(&image)
            .map(|(a, b)| (a + b * es.values[k]).norm_sqr())
            .sum::<f64>()
            .sqrt();
        println!(
            "lambda_{k} = {:+.6e} J -> C psi has eigenvalue {:+.6e} J (defect {:.1e} J)",
            es.values[k],
            es.values[7 - k],
            defect
        );
    }
    Ok(())
}
