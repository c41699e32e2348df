//! Pinned physical constants (CODATA 2018) and energy unit conversion.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// Reduced Planck constant, J·s.
pub const HBAR: f64 = 1.054571817e-34;
/// Bohr magneton, J/T.
pub const BOHR_MAGNETON: f64 = 9.2740100783e-24;
/// One debye in C·m.
pub const DEBYE: f64 = 3.33564095e-30;
/// Boltzmann constant, J/K.
pub const BOLTZMANN: f64 = 1.380649e-23;

/// The constant set as a value, for code that wants to carry it around.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalConstants {
    pub hbar: f64,
    pub mu_b: f64,
    pub debye: f64,
    pub k_b: f64,
}

impl PhysicalConstants {
    pub const CODATA_2018: PhysicalConstants = PhysicalConstants {
        hbar: HBAR,
        mu_b: BOHR_MAGNETON,
        debye: DEBYE,
        k_b: BOLTZMANN,
    };
}

impl Default for PhysicalConstants {
    fn default() -> Self {
        Self::CODATA_2018
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum EnergyUnit {
    Joule,
    #[default]
    Kelvin,
    Gigahertz,
}

impl EnergyUnit {
    /// Joules per one of this unit.
    pub fn joules_per_unit(self) -> f64 {
        match self {
            EnergyUnit::Joule => 1.0,
            EnergyUnit::Kelvin => BOLTZMANN,
            EnergyUnit::Gigahertz => 2.0 * std::f64::consts::PI * HBAR * 1e9,
        }
    }
}

impl FromStr for EnergyUnit {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "J" => Ok(EnergyUnit::Joule),
            "K" => Ok(EnergyUnit::Kelvin),
            "GHz" => Ok(EnergyUnit::Gigahertz),
            other => Err(Error::UnknownUnit(other.to_string())),
        }
    }
}

impl fmt::Display for EnergyUnit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EnergyUnit::Joule => "J",
            EnergyUnit::Kelvin => "K",
            EnergyUnit::Gigahertz => "GHz",
        })
    }
}

/// Convert an energy in joules to `unit`.
pub fn convert_energy(joules: f64, unit: EnergyUnit) -> f64 {
    match unit {
        EnergyUnit::Joule => joules,
        _ => joules / unit.joules_per_unit(),
    }
}

/// String-keyed variant of [`convert_energy`] for callers holding a unit name.
pub fn convert_energy_named(joules: f64, unit: &str) -> Result<f64, Error> {
    Ok(convert_energy(joules, unit.parse()?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn zero_is_zero_everywhere() {
        for u in [EnergyUnit::Joule, EnergyUnit::Kelvin, EnergyUnit::Gigahertz] {
            assert_eq!(convert_energy(0.0, u), 0.0);
        }
    }

    #[test]
    fn half_lambda_doublet_in_kelvin_and_ghz() {
        let half = HBAR * 2.0 * PI * 1.667e9 / 2.0;
        // h * 1.667 GHz / 2 / k_B with h = 2π·ħ
        let expected_k = 2.0 * PI * HBAR * 1.667e9 / 2.0 / BOLTZMANN;
        assert!((convert_energy(half, EnergyUnit::Kelvin) - expected_k).abs() < 1e-15);
        assert!((convert_energy(half, EnergyUnit::Kelvin) - 0.0400).abs() < 5e-5);
        assert!((convert_energy(half, EnergyUnit::Gigahertz) - 0.8335).abs() < 1e-12);
    }

    #[test]
    fn unknown_unit_rejected() {
        assert_eq!(
            convert_energy_named(1.0, "eV"),
            Err(Error::UnknownUnit("eV".into()))
        );
        assert_eq!(convert_energy_named(2.5, "J"), Ok(2.5));
    }
}
