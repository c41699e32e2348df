//! Closed-form eigenvalues.
//!
//! With `x = λ²` the characteristic polynomial is the quartic
//! `x⁴ + p₆x³ + p₄x² + p₂x + p₀`, whose roots are
//!
//! ```text
//! x = −p₆/4 ± √g₁/2 ± √(g₂ ± g₃)/2
//!
//! g₁ = −2p₄/3 + p₆²/4 + 2^{1/3} h₂/(3h₃) + h₃/(3·2^{1/3})
//! g₂ = −4p₄/3 + p₆²/2 − 2^{1/3} h₂/(3h₃) − h₃/(3·2^{1/3})
//! g₃ = (−8p₂ + 4p₄p₆ − p₆³) / (4√g₁)
//! h₁ = 27p₂² − 72p₀p₄ + 2p₄³ − 9p₂p₄p₆ + 27p₀p₆²
//! h₂ = 12p₀ + p₄² − 3p₂p₆
//! h₃ = (h₁ + √(h₁² − 4h₂³))^{1/3}
//! ```
//!
//! For a real symmetric H all four roots are real and nonnegative, yet
//! `h₁² − 4h₂³` is generically negative, so the intermediates are complex.
//! The eight eigenvalues are `±√x`.
//!
//! Two things spoil the formulas in plain f64. Repeated or nearly repeated
//! roots (B = 0 pairs M with −M, and near-crossings) come back split by
//! O(√ε); [`refine_roots`] re-centres such pairs on the root of `q'` and
//! polishes everything by Newton against double-double coefficients. In weak
//! fields all four roots bunch up at `(ħΔ/2)²` and the coefficients cancel
//! catastrophically, so below `max(B̃, Ẽ) = Δ̃` the same formulas are applied to
//! the quartic re-expanded about that point.

use std::cmp::Ordering;
use std::fmt;

use num_complex::Complex64;

use crate::charpoly::{
    even_coefficients, scale_variables, EvenCoefficients, PreciseCoefficients, ScaledVariables,
};
use crate::error::{Error, Result};
use crate::model::{FieldPoint, MolecularParameters};
use crate::oracle::hamiltonian_eigensystem;
use crate::matrix::Matrix8;

const IMAGINARY_TOL: f64 = 1e-9;
const NEGATIVE_TOL: f64 = 1e-12;
const DEGENERATE_TOL: f64 = 1e-14;
/// Below `SMALL_G1 · S²`, `g₃` is taken from `g₃² = (g₁ − g₂)² − 16R` instead
/// of dividing by `√g₁`.
const SMALL_G1: f64 = 1e-8;
/// Inner radicands `g₂ ± g₃` this close to zero are treated as exact zeros.
const RADICAND_TOL: f64 = 1e-11;
/// Adjacent roots closer than `CLUSTER_TOL · S` are refined as a pair.
const CLUSTER_TOL: f64 = 1e-6;

/// Complex intermediates of the quartic solution.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuarticIntermediates {
    pub g1: Complex64,
    pub g2: Complex64,
    pub g3: Complex64,
    pub h1: Complex64,
    pub h2: Complex64,
    pub h3: Complex64,
}

/// Magnitude of the λ² roots implied by the coefficients:
/// `max(|p₆|, |p₄|^½, |p₂|^⅓, |p₀|^¼)`.
pub fn lambda_sq_scale(c: &EvenCoefficients) -> f64 {
    c.p6
        .abs()
        .max(c.p4.abs().sqrt())
        .max(c.p2.abs().cbrt())
        .max(c.p0.abs().powf(0.25))
}

pub fn quartic_intermediates(c: &EvenCoefficients) -> QuarticIntermediates {
    let EvenCoefficients { p0, p2, p4, p6 } = *c;
    let s = lambda_sq_scale(c).max(f64::MIN_POSITIVE);
    let cbrt2 = 2f64.cbrt();

    let h1 = 27.0 * p2 * p2 - 72.0 * p0 * p4 + 2.0 * p4.powi(3) - 9.0 * p2 * p4 * p6
        + 27.0 * p0 * p6 * p6;
    let h2 = 12.0 * p0 + p4 * p4 - 3.0 * p2 * p6;
    let root = Complex64::from(h1 * h1 - 4.0 * h2.powi(3)).sqrt();
    // Both signs of the radical give the same g's; take the one without
    // cancellation.
    let h1c = Complex64::from(h1);
    let base = if (h1c + root).norm() >= (h1c - root).norm() {
        h1c + root
    } else {
        h1c - root
    };
    let h3 = base.cbrt();

    let tail = -2.0 * p4 / 3.0 + p6 * p6 / 4.0;
    let mixed = if h3.norm() <= DEGENERATE_TOL * s.powi(2) {
        // h₁ = h₂ = 0: fully (or triply) degenerate quartic
        Complex64::from(0.0)
    } else {
        cbrt2 * h2 / (3.0 * h3) + h3 / (3.0 * cbrt2)
    };
    let g1 = tail + mixed;
    let g2 = 2.0 * tail - mixed;

    let numerator = -8.0 * p2 + 4.0 * p4 * p6 - p6.powi(3);
    let g1_re = g1.re.max(0.0);
    let g3 = if g1_re > SMALL_G1 * s * s {
        Complex64::from(numerator / (4.0 * g1_re.sqrt()))
    } else {
        // depressed quartic y⁴ + Py² + Qy + R with y = x + p₆/4
        let r = p0 - p6 * p2 / 4.0 + p6 * p6 * p4 / 16.0 - 3.0 * p6.powi(4) / 256.0;
        let g3_sq = (g1 - g2) * (g1 - g2) - 16.0 * r;
        let mag = g3_sq.sqrt();
        if numerator < 0.0 {
            -mag
        } else {
            mag
        }
    };

    QuarticIntermediates {
        g1,
        g2,
        g3,
        h1: h1c,
        h2: Complex64::from(h2),
        h3,
    }
}

fn clamp_radicand(z: Complex64, s: f64) -> Complex64 {
    if z.norm() <= RADICAND_TOL * s * s {
        Complex64::from(z.re.max(0.0))
    } else {
        z
    }
}

/// The four λ² roots in formula order
/// `[+√g₁ +√(g₂+g₃), +√g₁ −√(g₂+g₃), −√g₁ +√(g₂−g₃), −√g₁ −√(g₂−g₃)]`,
/// in the units the coefficients are expressed in.
pub fn solve_quartic_in_lambda_sq(c: &EvenCoefficients) -> Result<[f64; 4]> {
    solve_real_quartic(c, false)
}

/// Same formulas for any real-rooted monic quartic; negative roots are
/// rejected unless `allow_negative`.
pub fn solve_real_quartic(c: &EvenCoefficients, allow_negative: bool) -> Result<[f64; 4]> {
    let s = lambda_sq_scale(c);
    if s == 0.0 {
        return Ok([0.0; 4]);
    }
    let q = quartic_intermediates(c);

    if q.g1.im.abs() > IMAGINARY_TOL * s * s || q.g1.re < -IMAGINARY_TOL * s * s {
        return Err(Error::ImaginaryResidue {
            index: 0,
            residue: q.g1.im.abs().max(-q.g1.re),
            tolerance: IMAGINARY_TOL * s * s,
        });
    }
    let sqrt_g1 = q.g1.re.max(0.0).sqrt();
    let plus = clamp_radicand(q.g2 + q.g3, s).sqrt();
    let minus = clamp_radicand(q.g2 - q.g3, s).sqrt();
    let centre = -c.p6 / 4.0;

    let roots = [
        centre + sqrt_g1 / 2.0 + plus / 2.0,
        centre + sqrt_g1 / 2.0 - plus / 2.0,
        centre - sqrt_g1 / 2.0 + minus / 2.0,
        centre - sqrt_g1 / 2.0 - minus / 2.0,
    ];

    let mut out = [0.0; 4];
    for (k, z) in roots.iter().enumerate() {
        let tol = IMAGINARY_TOL * s;
        if z.im.abs() > tol {
            return Err(Error::ImaginaryResidue {
                index: k,
                residue: z.im.abs(),
                tolerance: tol,
            });
        }
        if !allow_negative && z.re < -NEGATIVE_TOL * s {
            return Err(Error::NegativeRoot {
                value: z.re,
                tolerance: NEGATIVE_TOL * s,
            });
        }
        out[k] = if allow_negative { z.re } else { z.re.max(0.0) };
    }
    Ok(out)
}

/// Rounding bound for the double-double evaluation of the quartic at `x`.
fn evaluation_bound(q: &PreciseCoefficients, x: f64) -> f64 {
    64.0 * f64::EPSILON * f64::EPSILON * q.term_scale(x)
}

/// Polish the formula roots against the double-double quartic.
///
/// Pairs closer than `CLUSTER_TOL · S` are re-centred on the nearby root of
/// `q'` (simple even when `q` has a double root there) and merged when `q`
/// vanishes at the centre to within its rounding bound; otherwise they are
/// split by `±√(−2q/q'')`. Isolated roots get guarded Newton steps. Formula
/// order is preserved so labels stay attached.
pub fn refine_roots(q: &PreciseCoefficients, roots: &[f64; 4]) -> [f64; 4] {
    let s = lambda_sq_scale(&q.rounded());
    if s == 0.0 {
        return *roots;
    }
    let mut order = [0usize, 1, 2, 3];
    order.sort_by(|&i, &j| roots[i].total_cmp(&roots[j]));
    let sorted = order.map(|i| roots[i]);
    let close: [bool; 3] =
        std::array::from_fn(|k| sorted[k + 1] - sorted[k] <= CLUSTER_TOL * s);

    let mut refined = sorted;
    let mut k = 0;
    while k < 4 {
        let pair = k < 3 && close[k] && !(k > 0 && close[k - 1]) && !(k < 2 && close[k + 1]);
        let triple_or_more = (k < 3 && close[k]) && !pair;
        if pair {
            let (lo, hi) = refine_pair(q, sorted[k], sorted[k + 1]);
            refined[k] = lo;
            refined[k + 1] = hi;
            k += 2;
        } else if triple_or_more {
            // left as returned by the formulas
            while k < 3 && close[k] {
                k += 1;
            }
            k += 1;
        } else {
            let gap = neighbour_gap(&sorted, k);
            refined[k] = newton_guarded(q, sorted[k], gap / 2.0);
            k += 1;
        }
    }

    let mut out = [0.0; 4];
    for (slot, &i) in order.iter().enumerate() {
        out[i] = refined[slot];
    }
    out
}

fn neighbour_gap(sorted: &[f64; 4], k: usize) -> f64 {
    let left = if k > 0 { sorted[k] - sorted[k - 1] } else { f64::INFINITY };
    let right = if k < 3 { sorted[k + 1] - sorted[k] } else { f64::INFINITY };
    left.min(right)
}

fn newton_guarded(q: &PreciseCoefficients, x0: f64, max_step: f64) -> f64 {
    let mut x = x0;
    let [mut fx, mut dx, _] = q.eval(x);
    for _ in 0..8 {
        if dx == 0.0 || fx == 0.0 {
            break;
        }
        let step = fx / dx;
        if !step.is_finite() || step.abs() > max_step {
            break;
        }
        let y = x - step;
        let [fy, dy, _] = q.eval(y);
        if fy.abs() >= fx.abs() {
            break;
        }
        x = y;
        fx = fy;
        dx = dy;
    }
    x
}

fn refine_pair(q: &PreciseCoefficients, a: f64, b: f64) -> (f64, f64) {
    let mut centre = 0.5 * (a + b);
    for _ in 0..8 {
        let [_, d1, d2] = q.eval(centre);
        if d2 == 0.0 {
            break;
        }
        let step = d1 / d2;
        if !step.is_finite() {
            break;
        }
        centre -= step;
        if step.abs() <= f64::EPSILON * centre.abs() {
            break;
        }
    }
    let [value, _, d2] = q.eval(centre);
    if value.abs() <= evaluation_bound(q, centre) {
        return (centre, centre);
    }
    let half_split_sq = -2.0 * value / d2;
    if !(half_split_sq > 0.0) {
        return (centre, centre);
    }
    let h = half_split_sq.sqrt();
    let lo = newton_guarded(q, centre - h, h);
    let hi = newton_guarded(q, centre + h, h);
    (lo.min(hi), lo.max(hi))
}

/// e/f symmetry label.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    E,
    F,
}

/// `(M, ε)` tag naming which closed-form expression produced an eigenvalue.
/// These are formula names, not adiabatic state labels.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct StateLabel {
    /// 2M, one of ±3, ±1.
    pub two_m: i8,
    pub parity: Parity,
}

impl StateLabel {
    const fn new(two_m: i8, parity: Parity) -> Self {
        Self { two_m, parity }
    }

    pub fn m(&self) -> f64 {
        self.two_m as f64 / 2.0
    }
}

impl fmt::Display for StateLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = match self.parity {
            Parity::E => 'e',
            Parity::F => 'f',
        };
        let sign = if self.two_m < 0 { "-" } else { "" };
        write!(f, "({sign}{}/2,{p})", self.two_m.abs())
    }
}

/// Label of `+√x_k` for the k-th formula root.
pub const POSITIVE_LABELS: [StateLabel; 4] = [
    StateLabel::new(3, Parity::F),
    StateLabel::new(3, Parity::E),
    StateLabel::new(1, Parity::F),
    StateLabel::new(1, Parity::E),
];

/// Label of `−√x_k`, the chiral partner of `POSITIVE_LABELS[k]`.
pub const NEGATIVE_LABELS: [StateLabel; 4] = [
    StateLabel::new(-3, Parity::E),
    StateLabel::new(-3, Parity::F),
    StateLabel::new(-1, Parity::E),
    StateLabel::new(-1, Parity::F),
];

/// Eight eigenvalues with their formula labels and ±λ partners.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    /// Joules, ascending.
    pub eigenvalues: [f64; 8],
    pub labels: [StateLabel; 8],
    /// `(i, j)` with `eigenvalues[i] = −eigenvalues[j]`; `i` holds `−√x`.
    pub pairing: [(usize, usize); 4],
    /// Orthonormal eigenvectors as columns, when attached.
    pub eigenvectors: Option<Matrix8>,
    /// λ² roots in formula order, units of `energy_unit²`.
    pub lambda_sq: [f64; 4],
    /// ħΔ in joules.
    pub energy_unit: f64,
}

impl Spectrum {
    /// Assemble from λ² roots in formula order (units of `energy_unit²`).
    pub fn from_lambda_sq(lambda_sq: [f64; 4], energy_unit: f64) -> Self {
        let mut entries: Vec<(f64, StateLabel, usize, bool)> = Vec::with_capacity(8);
        for (k, x) in lambda_sq.iter().enumerate() {
            let lam = x.sqrt() * energy_unit;
            entries.push((-lam, NEGATIVE_LABELS[k], k, false));
            entries.push((lam, POSITIVE_LABELS[k], k, true));
        }
        // ties (only at λ = 0 or exact degeneracy) keep negative partners first
        entries.sort_by(|a, b| match a.0.total_cmp(&b.0) {
            Ordering::Equal => a.3.cmp(&b.3),
            o => o,
        });
        let eigenvalues = std::array::from_fn(|i| entries[i].0);
        let labels = std::array::from_fn(|i| entries[i].1);
        let pairing = std::array::from_fn(|k| {
            let neg = entries.iter().position(|e| e.2 == k && !e.3).unwrap();
            let pos = entries.iter().position(|e| e.2 == k && e.3).unwrap();
            (neg, pos)
        });
        Spectrum {
            eigenvalues,
            labels,
            pairing,
            eigenvectors: None,
            lambda_sq,
            energy_unit,
        }
    }

    pub fn max_abs(&self) -> f64 {
        self.eigenvalues.iter().fold(0.0, |a, x| a.max(x.abs()))
    }

    /// `max |λᵢ + λⱼ|` over the pairs, relative to `max |λ|`.
    pub fn pairing_residual(&self) -> f64 {
        let scale = self.max_abs().max(f64::MIN_POSITIVE);
        self.pairing
            .iter()
            .map(|&(i, j)| (self.eigenvalues[i] + self.eigenvalues[j]).abs() / scale)
            .fold(0.0, f64::max)
    }

    pub fn label_of(&self, label: StateLabel) -> Option<f64> {
        self.labels
            .iter()
            .position(|l| *l == label)
            .map(|i| self.eigenvalues[i])
    }

    pub fn partner(&self, index: usize) -> usize {
        self.pairing
            .iter()
            .find_map(|&(i, j)| {
                if i == index {
                    Some(j)
                } else if j == index {
                    Some(i)
                } else {
                    None
                }
            })
            .expect("every slot belongs to a pair")
    }
}

/// Fields below this fraction of `Δ̃` are solved in the shifted variable.
const WEAK_FIELD: f64 = 1.0;

/// Both `B̃` and `Ẽ` well below `Δ̃`: all λ² sit near `(ħΔ/2)²`.
pub fn is_weak_field(s: &ScaledVariables) -> bool {
    s.b_t.max(s.e_t) < WEAK_FIELD * s.d_t
}

/// λ² roots from the closed form, either directly in `x = λ²` or in the
/// shifted variable `y = x − Δ̃²/100`, polished in double-double.
pub fn closed_form_roots(s: &ScaledVariables, shifted: bool) -> Result<[f64; 4]> {
    if shifted {
        let q = PreciseCoefficients::shifted(s);
        let raw = solve_real_quartic(&q.rounded(), true)?;
        let mut x = refine_roots(&q, &raw).map(|y| q.unshift(y));
        // roots far below the shift lost digits to cancellation in unshift
        let shift = q.unshift(0.0);
        if x.iter().any(|&v| v < 0.25 * shift) {
            let qx = PreciseCoefficients::new(s);
            let mut sorted = x;
            sorted.sort_by(f64::total_cmp);
            for v in x.iter_mut().filter(|v| **v < 0.25 * shift) {
                let k = sorted.iter().position(|w| w == v).unwrap();
                *v = newton_guarded(&qx, *v, neighbour_gap(&sorted, k) / 2.0);
            }
        }
        for &v in &x {
            if v < -NEGATIVE_TOL {
                return Err(Error::NegativeRoot { value: v, tolerance: NEGATIVE_TOL });
            }
        }
        Ok(x.map(|v| v.max(0.0)))
    } else {
        let raw = solve_quartic_in_lambda_sq(&even_coefficients(s))?;
        Ok(refine_roots(&PreciseCoefficients::new(s), &raw).map(|v| v.max(0.0)))
    }
}

/// Closed-form spectrum at a field point.
pub fn solve_spectrum(p: &MolecularParameters, f: &FieldPoint) -> Result<Spectrum> {
    let s = scale_variables(p, f);
    let primary = is_weak_field(&s);
    // the other expansion rescues points where one loses the radicals'
    // imaginary parts to cancellation
    let roots = closed_form_roots(&s, primary)
        .or_else(|err| closed_form_roots(&s, !primary).map_err(|_| err))?;
    Ok(Spectrum::from_lambda_sq(roots, s.energy_unit()))
}

/// [`solve_spectrum`] with Jacobi eigenvectors attached in the same order.
pub fn solve_spectrum_with_eigenvectors(
    p: &MolecularParameters,
    f: &FieldPoint,
) -> Result<Spectrum> {
    let mut spectrum = solve_spectrum(p, f)?;
    spectrum.eigenvectors = Some(hamiltonian_eigensystem(p, f)?.vectors);
    Ok(spectrum)
}

/// At θ = 0 or π the Hamiltonian splits into 2×2 blocks, one per M:
/// `−(4μ_B B M/5) ± √((ħΔ/2)² + (2μ_e E M/5)²)`, returned ascending.
/// Only meaningful when `sin θ = 0`.
pub fn collinear_block_eigenvalues(p: &MolecularParameters, f: &FieldPoint) -> [f64; 8] {
    use crate::constants::{BOHR_MAGNETON, HBAR};
    let half_d = HBAR * p.delta / 2.0;
    let mut out = Vec::with_capacity(8);
    for m in [1.5, 0.5, -0.5, -1.5] {
        let shift = -4.0 * BOHR_MAGNETON * f.b * m / 5.0;
        let coupling = 2.0 * p.mu_e * f.e * m / 5.0;
        let r = half_d.hypot(coupling);
        out.push(shift - r);
        out.push(shift + r);
    }
    out.sort_by(f64::total_cmp);
    out.try_into().unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constants::{BOHR_MAGNETON, HBAR};
    use std::f64::consts::{FRAC_PI_2, PI};

    fn rel_close(a: &[f64], b: &[f64], tol: f64) -> bool {
        let scale = b.iter().fold(0.0f64, |m, x| m.max(x.abs()));
        a.iter().zip(b).all(|(x, y)| (x - y).abs() <= tol * scale)
    }

    #[test]
    fn zero_field_is_fourfold() {
        let p = MolecularParameters::OH;
        let c = even_coefficients(&scale_variables(&p, &FieldPoint::zero()));
        let roots = solve_quartic_in_lambda_sq(&c).unwrap();
        for r in roots {
            assert!((r - 0.25).abs() < 1e-15, "{r}");
        }
        let s = solve_spectrum(&p, &FieldPoint::zero()).unwrap();
        let hd = HBAR * p.delta / 2.0;
        let expect = [-hd, -hd, -hd, -hd, hd, hd, hd, hd];
        assert!(rel_close(&s.eigenvalues, &expect, 1e-15));
    }

    #[test]
    fn magnetic_only_roots_are_shifted_doublets() {
        let p = MolecularParameters::OH;
        let f = FieldPoint::new(0.3, 0.0, 0.7).unwrap();
        let unit = p.doublet_splitting();
        let mb = BOHR_MAGNETON * f.b / unit;
        let mut expected: Vec<f64> = [1.2, 0.4, -0.4, -1.2]
            .iter()
            .map(|k| (0.5 + k * mb).powi(2))
            .collect();
        expected.sort_by(f64::total_cmp);
        let c = even_coefficients(&scale_variables(&p, &f));
        let mut roots = solve_quartic_in_lambda_sq(&c).unwrap().to_vec();
        roots.sort_by(f64::total_cmp);
        assert!(rel_close(&roots, &expected, 1e-12), "{roots:?} vs {expected:?}");
    }

    #[test]
    fn collinear_fields_match_block_formula() {
        let p = MolecularParameters::OH;
        for theta in [0.0, PI] {
            let f = FieldPoint::new(0.42, 6.5e5, theta).unwrap();
            let s = solve_spectrum(&p, &f).unwrap();
            assert!(rel_close(&s.eigenvalues, &collinear_block_eigenvalues(&p, &f), 1e-10));
        }
    }

    #[test]
    fn labels_and_pairs() {
        let p = MolecularParameters::OH;
        let f = FieldPoint::new(0.2, 2e5, FRAC_PI_2).unwrap();
        let s = solve_spectrum(&p, &f).unwrap();
        assert!(s.pairing_residual() < 1e-15);
        for k in 0..4 {
            let pos = s.label_of(POSITIVE_LABELS[k]).unwrap();
            let neg = s.label_of(NEGATIVE_LABELS[k]).unwrap();
            assert_eq!(pos, -neg);
            assert!(pos >= 0.0);
        }
        for i in 0..8 {
            assert_eq!(s.partner(s.partner(i)), i);
        }
        assert_eq!(POSITIVE_LABELS[0].to_string(), "(3/2,f)");
        assert_eq!(NEGATIVE_LABELS[3].to_string(), "(-1/2,f)");
    }

    #[test]
    fn vieta_relations() {
        let p = MolecularParameters::OH;
        let f = FieldPoint::new(1.3, 7.7e5, 2.2).unwrap();
        let c = even_coefficients(&scale_variables(&p, &f));
        let r = solve_quartic_in_lambda_sq(&c).unwrap();
        let sum: f64 = r.iter().sum();
        let prod: f64 = r.iter().product();
        assert!((sum + c.p6).abs() <= 1e-12 * c.p6.abs());
        assert!((prod - c.p0).abs() <= 1e-9 * c.p0.abs());
    }

    #[test]
    fn double_roots_are_merged() {
        // B = 0: M and −M share a λ² root
        let p = MolecularParameters::OH;
        let f = FieldPoint::new(0.0, 4e5, 1.0).unwrap();
        let s = solve_spectrum(&p, &f).unwrap();
        let es = hamiltonian_eigensystem(&p, &f).unwrap();
        assert!(rel_close(&s.eigenvalues, &es.values, 1e-12));
    }

    #[test]
    fn rejects_coefficients_without_real_roots() {
        // x⁴ + 1: no real roots
        let c = EvenCoefficients { p0: 1.0, p2: 0.0, p4: 0.0, p6: 0.0 };
        assert!(solve_quartic_in_lambda_sq(&c).is_err());
        // (x + 1)(x − 1)(x − 2)(x − 3): one negative root
        let c = EvenCoefficients { p0: -6.0, p2: 5.0, p4: 5.0, p6: -5.0 };
        assert!(matches!(
            solve_quartic_in_lambda_sq(&c),
            Err(Error::NegativeRoot { .. })
        ));
    }

    #[test]
    fn weak_fields_use_the_shifted_expansion() {
        let p = MolecularParameters::OH;
        for (b, e, th) in [(0.0, 1.0, 0.7), (1e-6, 1e2, 1.2), (1e-4, 1e4, 0.0), (3e-4, 2e5, FRAC_PI_2)] {
            let f = FieldPoint::new(b, e, th).unwrap();
            assert!(is_weak_field(&scale_variables(&p, &f)));
            let s = solve_spectrum(&p, &f).unwrap();
            let es = hamiltonian_eigensystem(&p, &f).unwrap();
            assert!(rel_close(&s.eigenvalues, &es.values, 1e-13), "{f:?}");
        }
        assert!(!is_weak_field(&scale_variables(&p, &FieldPoint::new(0.5, 2e5, 1.0).unwrap())));
    }

    #[test]
    fn both_expansions_agree_where_both_work() {
        let p = MolecularParameters::OH;
        let s = scale_variables(&p, &FieldPoint::new(0.3, 4e5, 0.4).unwrap());
        let mut a = closed_form_roots(&s, false).unwrap();
        let mut b = closed_form_roots(&s, true).unwrap();
        a.sort_by(f64::total_cmp);
        b.sort_by(f64::total_cmp);
        for k in 0..4 {
            assert!((a[k] - b[k]).abs() <= 1e-13 * a[3]);
        }
    }
}
