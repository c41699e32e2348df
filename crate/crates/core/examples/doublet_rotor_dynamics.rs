//! Time evolution viewed as two coupled subsystems: the parity doublet and
//! the J = 3/2 rotor.

use num_complex::Complex64;
use oh_stark_zeeman::dynamics::{
    partial_trace_doublet, partial_trace_rotor, pseudo_spin_flip, trajectory, StateVector,
};
use oh_stark_zeeman::matrix::{kron, CMatrix4, CMatrix8};
use oh_stark_zeeman::model::pauli_matrices;
use oh_stark_zeeman::verify::parity_period_error;
use oh_stark_zeeman::{FieldPoint, MolecularParameters};

fn main() -> oh_stark_zeeman::Result<()> {
    let p = MolecularParameters::OH;
    println!(
        "zero-field <sigma_x> period vs 2pi/Delta: relative error {:.1e}",
        parity_period_error(&p)?
    );

    // start in one doublet component with M = 3/2 and switch on E ∥ B
    let f = FieldPoint::from_lab_units(0.1, 5.0, 30.0)?;
    let psi0 = StateVector::basis(0);
    let period = 2.0 * std::f64::consts::PI / p.delta;
    let times: Vec<f64> = (0..=8).map(|k| k as f64 * period / 4.0).collect();
    println!("\n   t/T    P(0)    P(4)  doublet purity  <H> [J]");
    for pt in trajectory(&p, &f, &psi0, &times)? {
        println!(
            "{:6.2}  {:.4}  {:.4}  {:14.6}  {:+.6e}",
            pt.t / period,
            pt.populations[0],
            pt.populations[4],
            pt.doublet_purity,
            pt.energy
        );
    }

    // Schmidt: both reductions of a pure state have equal purity
    let psi = StateVector::normalized(std::array::from_fn(|k| Complex64::new(k as f64, 1.0)))?;
    let rho = psi.density();
    let (a, b) = (partial_trace_rotor(&rho)?, partial_trace_doublet(&rho)?);
    println!("\npurity doublet {:.12}, rotor {:.12}, entropy {:.6}", a.purity(), b.purity(), a.entropy());

    // π rotation of the doublet pseudo-spin swaps the two parity manifolds
    let u = pseudo_spin_flip();
    let flipped = StateVector::new(u.mul_vec(StateVector::basis(1).amplitudes()))?;
    println!("flip |1> -> populations {:?}", flipped.populations());
    let sz: CMatrix8 = kron(&pauli_matrices().z, &CMatrix4::identity());
    println!("<sigma_z> before {:+.1}, after {:+.1}", StateVector::basis(1).expectation(&sz), flipped.expectation(&sz));
    Ok(())
}
