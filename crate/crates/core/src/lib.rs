//! Exact Stark-Zeeman spectrum of ground-state OH (X²Π₃/₂, J = 3/2) in
//! combined electric and magnetic fields.
//!
//! The 8×8 effective Hamiltonian anticommutes with a fixed unitary `C`, so its
//! characteristic polynomial is even and the spectrum follows from a quartic
//! in λ². This crate evaluates that closed form, checks it against a
//! Faddeev-LeVerrier polynomial and a Jacobi eigensolver, verifies the chiral
//! symmetry, runs field sweeps and propagates states.

pub mod analytic;
pub mod charpoly;
pub mod constants;
pub mod dynamics;
pub mod error;
pub mod matrix;
pub mod model;
pub mod oracle;
pub mod sweep;
pub mod symmetry;
pub mod verify;


pub use charpoly::{charpoly_oracle, even_coefficients, scale_variables};
pub use constants::{convert_energy, EnergyUnit, PhysicalConstants};
pub use error::{Error, Result};
pub use matrix::{CMatrix8, Matrix8};
pub use model::{build_hamiltonian, build_kronecker_form, FieldPoint, MolecularParameters};
pub use oracle::{jacobi_eigen, EigenSystem};

pub use analytic::{solve_quartic_in_lambda_sq, solve_spectrum, Spectrum, StateLabel};
pub use symmetry::ChiralOperator;
