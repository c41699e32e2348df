//! Faddeev-LeVerrier coefficients of H against the closed-form even ones.
//!
//! Everything is in units of ħΔ, so the coefficients are O(1).

use oh_stark_zeeman::charpoly::{even_coefficient_deviation, hamiltonian_charpoly};
use oh_stark_zeeman::{even_coefficients, scale_variables, FieldPoint, MolecularParameters};

fn main() -> oh_stark_zeeman::Result<()> {
    let p = MolecularParameters::OH;
    for (b, e, th) in [(0.0, 0.0, 0.0), (0.1, 2.0, 90.0), (1.5, 8.0, 30.0), (0.4, 0.0, 0.0)] {
        let f = FieldPoint::from_lab_units(b, e, th)?;
        let s = scale_variables(&p, &f);
        let closed = even_coefficients(&s);
        let oracle = hamiltonian_charpoly(&p, &f);

        println!("B = {b} T, E = {e} kV/cm, theta = {th} deg");
        println!("  scaled [J]: b~ = {:.4e}, e~ = {:.4e}, d~ = {:.4e}", s.b_t, s.e_t, s.d_t);
        for n in (0..=8).rev() {
            let closed_n = match n {
                0 => Some(closed.p0),
                2 => Some(closed.p2),
                4 => Some(closed.p4),
                6 => Some(closed.p6),
                8 => Some(1.0),
                _ => None,
            };
            match closed_n {
                Some(c) => println!("  p{n}: oracle {:+.15e}   closed {:+.15e}", oracle.p[n], c),
                None => println!("  p{n}: oracle {:+.3e}", oracle.p[n]),
            }
        }
        println!(
            "  odd residual {:.1e}, even deviation {:.1e}\n",
            oracle.odd_residual(),
            even_coefficient_deviation(&closed, &oracle)
        );
    }
    Ok(())
}
