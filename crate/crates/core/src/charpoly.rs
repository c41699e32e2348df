//! Characteristic polynomial of the Hamiltonian.
//!
//! `P(λ) = det(H − λI) = Σ pₙ λⁿ` with `p₈ = 1`. Chiral symmetry kills every
//! odd coefficient, so the octic collapses to a quartic in λ². The even
//! coefficients have closed forms in the scaled variables `B̃ = 4μ_B B`,
//! `Ẽ = 2μ_e E`, `Δ̃ = 5ħΔ`; [`charpoly_oracle`] computes all nine
//! coefficients of any 8×8 matrix independently by the Faddeev-LeVerrier
//! trace recurrence.
//!
//! Eighth powers of joule-sized energies sit near 1e-190, so all coefficient
//! work happens with energies measured in units of ħΔ.

use std::ops::{Add, Div, Mul, Neg, Sub};

use twofloat::TwoFloat;

use crate::constants::{BOHR_MAGNETON, HBAR};
use crate::matrix::Matrix8;
use crate::model::{dimensionless_hamiltonian, FieldPoint, MolecularParameters};

/// `B̃`, `Ẽ`, `Δ̃` in joules together with the field angle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScaledVariables {
    pub b_t: f64,
    pub e_t: f64,
    pub d_t: f64,
    pub theta: f64,
}

impl ScaledVariables {
    /// ħΔ = Δ̃/5, the energy unit of the dimensionless coefficients.
    pub fn energy_unit(&self) -> f64 {
        self.d_t / 5.0
    }

    /// `max(Δ̃, B̃, Ẽ)` in units of ħΔ.
    pub fn spectral_scale(&self) -> f64 {
        self.d_t.max(self.b_t).max(self.e_t) / self.energy_unit()
    }
}

pub fn scale_variables(p: &MolecularParameters, f: &FieldPoint) -> ScaledVariables {
    ScaledVariables {
        b_t: 4.0 * BOHR_MAGNETON * f.b,
        e_t: 2.0 * p.mu_e * f.e,
        d_t: 5.0 * HBAR * p.delta,
        theta: f.theta,
    }
}

/// `p₀, p₂, p₄, p₆` of the quartic in λ², dimensionless (unit ħΔ).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvenCoefficients {
    pub p0: f64,
    pub p2: f64,
    pub p4: f64,
    pub p6: f64,
}

impl EvenCoefficients {
    pub fn as_array(&self) -> [f64; 4] {
        [self.p0, self.p2, self.p4, self.p6]
    }

    /// Quartic `x⁴ + p₆x³ + p₄x² + p₂x + p₀` evaluated at `x = λ²`.
    pub fn eval_quartic(&self, x: f64) -> f64 {
        (((x + self.p6) * x + self.p4) * x + self.p2) * x + self.p0
    }
}

/// Closed-form even coefficients at the field angle carried by `s`.
pub fn even_coefficients(s: &ScaledVariables) -> EvenCoefficients {
    let unit = s.energy_unit();
    even_coefficients_from_harmonics(
        s.b_t / unit,
        s.e_t / unit,
        s.d_t / unit,
        (2.0 * s.theta).cos(),
        (4.0 * s.theta).cos(),
    )
}

/// The closed forms with the angle entering only through `cos 2θ` and
/// `cos 4θ`. Inputs are `B̃, Ẽ, Δ̃` in any common energy unit.
pub fn even_coefficients_from_harmonics(
    b: f64,
    e: f64,
    d: f64,
    cos2: f64,
    cos4: f64,
) -> EvenCoefficients {
    let [p0, p2, p4, p6] = harmonic_forms(b, e, d, cos2, cos4);
    EvenCoefficients { p0, p2, p4, p6 }
}

/// Arithmetic needed by [`harmonic_forms`].
pub trait Field:
    Copy
    + From<f64>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
}

impl<T> Field for T where
    T: Copy
        + From<f64>
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Div<Output = T>
        + Neg<Output = T>
{
}

/// `[p₀, p₂, p₄, p₆]` in whatever arithmetic `T` provides.
pub fn harmonic_forms<T: Field>(b: T, e: T, d: T, cos2: T, cos4: T) -> [T; 4] {
    let k = T::from;
    let (b2, e2, d2) = (b * b, e * e, d * d);
    let (b4, e4, d4) = (b2 * b2, e2 * e2, d2 * d2);
    let (b6, e6, d6) = (b4 * b2, e4 * e2, d4 * d2);
    let (b8, e8, d8) = (b4 * b4, e4 * e4, d4 * d4);

    let p0 = (k(81.0) * b8 + k(324.0) * b4 * e4 + k(81.0) * e8 - k(180.0) * b6 * d2
        + k(756.0) * b4 * e2 * d2
        - k(756.0) * b2 * e4 * d2
        + k(180.0) * e6 * d2
        + k(118.0) * b4 * d4
        - k(264.0) * b2 * e2 * d4
        + k(118.0) * e4 * d4
        - k(20.0) * b2 * d6
        + k(20.0) * e2 * d6
        + d8
        - k(4.0)
            * b2
            * e2
            * (k(81.0) * b4 + k(81.0) * e4 + k(54.0) * b2 * d2 - k(54.0) * e2 * d2 - k(7.0) * d4)
            * cos2
        + k(162.0) * b4 * e4 * cos4)
        / k(1e8);

    let p2 = (-k(9.0) * b6 - k(9.0) * e6 - d6 / k(5.0) - k(59.0) / k(5.0) * e4 * d2
        - k(3.0) * e2 * d4
        - k(9.0) * b4 * e2
        - k(23.0) / k(5.0) * b4 * d2
        - k(9.0) * b2 * e4
        + b2 * d4
        + k(48.0) / k(5.0) * b2 * e2 * d2
        + k(2.0) * b2 * e2 * (k(9.0) * b2 + k(9.0) * e2 + k(17.0) / k(5.0) * d2) * cos2)
        / k(50000.0);

    let p4 = (k(59.0) * b4 + k(36.0) * b2 * e2 + k(10.0) * b2 * d2 - k(82.0) * b2 * e2 * cos2
        + k(59.0) * e4
        + k(30.0) * e2 * d2
        + k(3.0) * d4)
        / k(5000.0);

    let p6 = -(b2 + e2 + d2 / k(5.0)) / k(5.0);

    [p0, p2, p4, p6]
}

/// The quartic scaled by 10⁸ so every coefficient is an integer polynomial
/// in `B̃, Ẽ, Δ̃, cos 2θ, cos 4θ`: `10⁸x⁴ + c₆x³ + c₄x² + c₂x + c₀`.
pub fn cleared_forms<T: Field>(b: T, e: T, d: T, cos2: T, cos4: T) -> [T; 4] {
    let k = T::from;
    let (b2, e2, d2) = (b * b, e * e, d * d);
    let (b4, e4, d4) = (b2 * b2, e2 * e2, d2 * d2);
    let (b6, e6, d6) = (b4 * b2, e4 * e2, d4 * d2);
    let (b8, e8, d8) = (b4 * b4, e4 * e4, d4 * d4);

    let c0 = k(81.0) * b8 + k(324.0) * b4 * e4 + k(81.0) * e8 - k(180.0) * b6 * d2
        + k(756.0) * b4 * e2 * d2
        - k(756.0) * b2 * e4 * d2
        + k(180.0) * e6 * d2
        + k(118.0) * b4 * d4
        - k(264.0) * b2 * e2 * d4
        + k(118.0) * e4 * d4
        - k(20.0) * b2 * d6
        + k(20.0) * e2 * d6
        + d8
        - k(4.0)
            * b2
            * e2
            * (k(81.0) * b4 + k(81.0) * e4 + k(54.0) * b2 * d2 - k(54.0) * e2 * d2 - k(7.0) * d4)
            * cos2
        + k(162.0) * b4 * e4 * cos4;

    let c2 = k(400.0)
        * (-k(45.0) * b6 - k(45.0) * e6 - d6 - k(59.0) * e4 * d2 - k(15.0) * e2 * d4
            - k(45.0) * b4 * e2
            - k(23.0) * b4 * d2
            - k(45.0) * b2 * e4
            + k(5.0) * b2 * d4
            + k(48.0) * b2 * e2 * d2
            + k(2.0) * b2 * e2 * (k(45.0) * b2 + k(45.0) * e2 + k(17.0) * d2) * cos2);

    let c4 = k(20000.0)
        * (k(59.0) * b4 + k(36.0) * b2 * e2 + k(10.0) * b2 * d2 - k(82.0) * b2 * e2 * cos2
            + k(59.0) * e4
            + k(30.0) * e2 * d2
            + k(3.0) * d4);

    let c6 = -k(4e6) * (k(5.0) * b2 + k(5.0) * e2 + d2);

    [c0, c2, c4, c6]
}

/// [`cleared_forms`] re-expanded about `x₀ = Δ̃²/100` (the zero-field root,
/// in the same units): coefficients of `y⁰..y³` in `Q(x₀ + y)`. Every term
/// carries a field factor, so these stay accurate in relative terms as the
/// fields go to zero and the four roots bunch up at `x₀`.
pub fn shifted_cleared_forms<T: Field>(b: T, e: T, d: T, cos2: T, cos4: T) -> [T; 4] {
    let k = T::from;
    let (b2, e2, d2) = (b * b, e * e, d * d);
    let (b4, e4, d4) = (b2 * b2, e2 * e2, d2 * d2);
    let (b6, e6) = (b4 * b2, e4 * e2);
    let (b8, e8) = (b4 * b4, e4 * e4);

    let s0 = k(9.0)
        * (k(9.0) * b8 - k(36.0) * b6 * e2 * cos2 - k(40.0) * b6 * d2
            + k(16.0) * b4 * e2 * d2 * cos2
            + k(18.0) * b4 * e4 * cos4
            + k(16.0) * b4 * d4
            + k(64.0) * b4 * e2 * d2
            + k(36.0) * b4 * e4
            + k(64.0) * b2 * e4 * d2 * cos2
            - k(36.0) * b2 * e6 * cos2
            - k(104.0) * b2 * e4 * d2
            + k(9.0) * e8);

    let s1 = -k(1200.0)
        * (k(15.0) * b6 - k(30.0) * b4 * e2 * cos2 - k(12.0) * b4 * d2 + k(15.0) * b4 * e2
            + k(16.0) * b2 * e2 * d2 * cos2
            - k(30.0) * b2 * e4 * cos2
            - k(28.0) * b2 * e2 * d2
            + k(15.0) * b2 * e4
            + k(15.0) * e6);

    let s2 = k(20000.0)
        * (k(59.0) * b4 - k(82.0) * b2 * e2 * cos2 - k(20.0) * b2 * d2 + k(36.0) * b2 * e2
            + k(59.0) * e4);

    let s3 = -k(2e7) * (b2 + e2);

    [s0, s1, s2, s3]
}

const CLEARED_LEAD: f64 = 1e8;

/// A cleared quartic `10⁸y⁴ + c₃y³ + c₂y² + c₁y + c₀` in double-double
/// arithmetic, with `x = shift + y`. Used to polish roots the f64
/// coefficients cannot resolve (near-degenerate pairs). Only additions and
/// multiplications are involved, so the extra precision survives.
///
/// `cos 4θ` is derived from the rounded `cos 2θ` so both harmonics describe
/// the same angle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PreciseCoefficients {
    /// `c₀..c₃`
    pub c: [TwoFloat; 4],
    pub shift: TwoFloat,
}

type Forms = fn(TwoFloat, TwoFloat, TwoFloat, TwoFloat, TwoFloat) -> [TwoFloat; 4];

impl PreciseCoefficients {
    /// The quartic in `x = λ²` itself.
    pub fn new(s: &ScaledVariables) -> Self {
        Self::build(s, cleared_forms, false)
    }

    /// The quartic in `y = λ² − Δ̃²/100`, for weak fields.
    pub fn shifted(s: &ScaledVariables) -> Self {
        Self::build(s, shifted_cleared_forms, true)
    }

    fn build(s: &ScaledVariables, forms: Forms, shifted: bool) -> Self {
        let t = TwoFloat::from;
        let unit = s.energy_unit();
        let d = t(s.d_t / unit);
        let cos2 = t((2.0 * s.theta).cos());
        let cos4 = t(2.0) * cos2 * cos2 - t(1.0);
        let c = forms(t(s.b_t / unit), t(s.e_t / unit), d, cos2, cos4);
        let shift = if shifted { d * d * t(0.01) } else { t(0.0) };
        Self { c, shift }
    }

    /// Monic f64 coefficients of the quartic in `y` (`p₀..p₆` naming).
    pub fn rounded(&self) -> EvenCoefficients {
        let f = |c: TwoFloat| (c.hi() + c.lo()) / CLEARED_LEAD;
        EvenCoefficients {
            p0: f(self.c[0]),
            p2: f(self.c[1]),
            p4: f(self.c[2]),
            p6: f(self.c[3]),
        }
    }

    /// `x = shift + y`
    pub fn unshift(&self, y: f64) -> f64 {
        let x = self.shift + TwoFloat::from(y);
        x.hi() + x.lo()
    }

    /// `Q(y)`, `Q'(y)`, `Q''(y)`.
    pub fn eval(&self, y: f64) -> [f64; 3] {
        let t = TwoFloat::from;
        let [c0, c1, c2, c3] = self.c;
        let y = t(y);
        let lead = t(CLEARED_LEAD);
        let q = (((lead * y + c3) * y + c2) * y + c1) * y + c0;
        let d1 = ((t(4.0) * lead * y + t(3.0) * c3) * y + t(2.0) * c2) * y + c1;
        let d2 = (t(12.0) * lead * y + t(6.0) * c3) * y + t(2.0) * c2;
        [q, d1, d2].map(|v| v.hi() + v.lo())
    }

    /// Sum of Horner term magnitudes at `y`, for rounding bounds.
    pub fn term_scale(&self, y: f64) -> f64 {
        let a = y.abs();
        let [c0, c1, c2, c3] = self.c.map(|v| v.hi().abs());
        (((CLEARED_LEAD * a + c3) * a + c2) * a + c1) * a + c0
    }
}

/// All nine coefficients `p₀..p₈` of `det(M − λI)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CharPolyCoefficients {
    pub p: [f64; 9],
    /// Energy (in joules) that one unit of the matrix entries represents;
    /// `pₙ` carries the dimension `energy_unit^(8−n)`.
    pub energy_unit: f64,
}

impl CharPolyCoefficients {
    pub fn even(&self) -> EvenCoefficients {
        EvenCoefficients {
            p0: self.p[0],
            p2: self.p[2],
            p4: self.p[4],
            p6: self.p[6],
        }
    }

    /// `max |p_odd| / max(|p₀|, |p₂|, |p₄|, |p₆|, 1)`.
    pub fn odd_residual(&self) -> f64 {
        let odd = [1, 3, 5, 7].iter().fold(0.0f64, |a, &k| a.max(self.p[k].abs()));
        let even = [0, 2, 4, 6].iter().fold(1.0f64, |a, &k| a.max(self.p[k].abs()));
        odd / even
    }

    /// Root-bound scale `R = max_k |p_k|^(1/(8−k))`. Every eigenvalue lies
    /// within `2R`, so `R^(8−n)` is the natural magnitude of `pₙ`.
    pub fn root_scale(&self) -> f64 {
        (0..8)
            .map(|k| self.p[k].abs().powf(1.0 / (8 - k) as f64))
            .fold(0.0, f64::max)
    }
}

/// Faddeev-LeVerrier: with `M₀ = 0`, `c₈ = 1`,
/// `M_k = A M_{k−1} + c_{9−k} I` and `c_{8−k} = −tr(A M_k)/k`.
pub fn charpoly_oracle(m: &Matrix8) -> CharPolyCoefficients {
    let mut c = [0.0; 9];
    c[8] = 1.0;
    let mut mk = Matrix8::zeros();
    for k in 1..=8 {
        let mut next = *m * mk;
        for i in 0..8 {
            next[(i, i)] += c[9 - k];
        }
        mk = next;
        c[8 - k] = -(*m * mk).trace() / k as f64;
    }
    CharPolyCoefficients {
        p: c,
        energy_unit: 1.0,
    }
}

/// Oracle coefficients of the Hamiltonian at `(p, f)` in units of ħΔ.
pub fn hamiltonian_charpoly(p: &MolecularParameters, f: &FieldPoint) -> CharPolyCoefficients {
    CharPolyCoefficients {
        energy_unit: p.doublet_splitting(),
        ..charpoly_oracle(&dimensionless_hamiltonian(p, f))
    }
}

/// Worst deviation of the closed-form even coefficients from `oracle`,
/// with `pₙ` measured against `R^(8−n)` (see [`CharPolyCoefficients::root_scale`]).
pub fn even_coefficient_deviation(closed: &EvenCoefficients, oracle: &CharPolyCoefficients) -> f64 {
    let r = oracle.root_scale().max(f64::MIN_POSITIVE);
    closed
        .as_array()
        .iter()
        .zip([0, 2, 4, 6])
        .map(|(v, n)| (v - oracle.p[n]).abs() / r.powi(8 - n as i32))
        .fold(0.0, f64::max)
}
