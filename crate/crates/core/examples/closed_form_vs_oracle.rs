//! Random-grid agreement between the closed-form spectrum and the Jacobi
//! eigensolver, plus the awkward degenerate points.

use std::time::Instant;

use oh_stark_zeeman::oracle::hamiltonian_eigensystem;
use oh_stark_zeeman::sweep::relative_deviation;
use oh_stark_zeeman::{solve_spectrum, FieldPoint, MolecularParameters};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() -> oh_stark_zeeman::Result<()> {
    let p = MolecularParameters::OH;
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let n = 10_000;
    let start = Instant::now();
    let mut worst = (0.0, FieldPoint::zero());
    for _ in 0..n {
        let f = FieldPoint::new(
            rng.gen_range(0.0..=2.0),
            rng.gen_range(0.0..=1e6),
            rng.gen_range(0.0..=std::f64::consts::PI),
        )?;
        let a = solve_spectrum(&p, &f)?;
        let o = hamiltonian_eigensystem(&p, &f)?;
        let d = relative_deviation(&a.eigenvalues, &o.values);
        if d > worst.0 {
            worst = (d, f);
        }
    }
    println!(
        "{n} points in {:.2?}: worst relative deviation {:.2e} at {:?}",
        start.elapsed(),
        worst.0,
        worst.1
    );

    let half_pi = std::f64::consts::FRAC_PI_2;
    for (b, e, th) in [
        (0.0, 0.0, 0.0),
        (0.0, 5e5, half_pi),
        (0.7, 0.0, 1.0),
        (0.7, 5e5, 0.0),
        (0.7, 5e5, half_pi),
        (0.7, 5e5, std::f64::consts::PI),
    ] {
        let f = FieldPoint::new(b, e, th)?;
        let a = solve_spectrum(&p, &f)?;
        let o = hamiltonian_eigensystem(&p, &f)?;
        println!(
            "B={b:<4} E={e:<8} theta={th:.4}: deviation {:.1e}",
            relative_deviation(&a.eigenvalues, &o.values)
        );
    }
    Ok(())
}
