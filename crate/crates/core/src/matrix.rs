//! Small fixed-size dense matrices.
//!
//! Everything in this crate lives in dimensions 2, 4 and 8, so matrices are
//! stack arrays parameterised by a const dimension. The same type serves real
//! Hamiltonians and the complex operators (chiral operator, propagators,
//! density matrices).

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_complex::Complex64;
use num_traits::Num;

/// Scalar field a [`Matrix`] can be built over.
pub trait Scalar: Copy + Num + Neg<Output = Self> + fmt::Debug {
    fn modulus_sqr(self) -> f64;
    fn conj(self) -> Self;
    fn from_real(x: f64) -> Self;

    fn modulus(self) -> f64 {
        self.modulus_sqr().sqrt()
    }
}

impl Scalar for f64 {
    fn modulus_sqr(self) -> f64 {
        self * self
    }
    fn conj(self) -> Self {
        self
    }
    fn from_real(x: f64) -> Self {
        x
    }
    fn modulus(self) -> f64 {
        self.abs()
    }
}

impl Scalar for Complex64 {
    fn modulus_sqr(self) -> f64 {
        self.norm_sqr()
    }
    fn conj(self) -> Self {
        Complex64::conj(&self)
    }
    fn from_real(x: f64) -> Self {
        Complex64::new(x, 0.0)
    }
    fn modulus(self) -> f64 {
        self.norm()
    }
}

/// Square `N`×`N` matrix stored row-major.
#[derive(Clone, Copy, PartialEq)]
pub struct Matrix<T, const N: usize>(pub [[T; N]; N]);

pub type Matrix2 = Matrix<f64, 2>;
pub type Matrix4 = Matrix<f64, 4>;
/// Real 8×8 matrix; the Hamiltonian type.
pub type Matrix8 = Matrix<f64, 8>;
pub type CMatrix2 = Matrix<Complex64, 2>;
pub type CMatrix4 = Matrix<Complex64, 4>;
pub type CMatrix8 = Matrix<Complex64, 8>;
pub type CVector8 = [Complex64; 8];

impl<T: Scalar, const N: usize> Matrix<T, N> {
    pub fn zeros() -> Self {
        Matrix([[T::zero(); N]; N])
    }

    pub fn identity() -> Self {
        Self::from_fn(|i, j| if i == j { T::one() } else { T::zero() })
    }

    pub fn from_fn(mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut m = Self::zeros();
        for i in 0..N {
            for j in 0..N {
                m.0[i][j] = f(i, j);
            }
        }
        m
    }

    pub fn from_diagonal(d: &[T; N]) -> Self {
        Self::from_fn(|i, j| if i == j { d[i] } else { T::zero() })
    }

    pub fn diagonal(&self) -> [T; N] {
        std::array::from_fn(|i| self.0[i][i])
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(|i, j| self.0[j][i])
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self::from_fn(|i, j| self.0[j][i].conj())
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(T) -> U) -> Matrix<U, N> {
        Matrix::from_fn(|i, j| f(self.0[i][j]))
    }

    pub fn scale(&self, s: T) -> Self {
        self.map(|x| x * s)
    }

    pub fn trace(&self) -> T {
        (0..N).fold(T::zero(), |acc, i| acc + self.0[i][i])
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.0
            .iter()
            .flatten()
            .map(|x| x.modulus_sqr())
            .sum::<f64>()
            .sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.0
            .iter()
            .flatten()
            .fold(0.0, |acc, x| acc.max(x.modulus()))
    }

    /// `AB - BA`
    pub fn commutator(&self, other: &Self) -> Self {
        *self * *other - *other * *self
    }

    /// `AB + BA`
    pub fn anticommutator(&self, other: &Self) -> Self {
        *self * *other + *other * *self
    }

    pub fn mul_vec(&self, v: &[T; N]) -> [T; N] {
        std::array::from_fn(|i| {
            (0..N).fold(T::zero(), |acc, j| acc + self.0[i][j] * v[j])
        })
    }

    pub fn column(&self, j: usize) -> [T; N] {
        std::array::from_fn(|i| self.0[i][j])
    }

    /// Determinant by Gaussian elimination with partial pivoting.
    pub fn determinant(&self) -> T {
        let mut a = self.0;
        let mut det = T::one();
        for k in 0..N {
            let pivot = (k..N)
                .max_by(|&r, &s| a[r][k].modulus().total_cmp(&a[s][k].modulus()))
                .unwrap_or(k);
            if a[pivot][k].modulus() == 0.0 {
                return T::zero();
            }
            if pivot != k {
                a.swap(pivot, k);
                det = -det;
            }
            det = det * a[k][k];
            for r in (k + 1)..N {
                let factor = a[r][k] / a[k][k];
                for c in k..N {
                    a[r][c] = a[r][c] - factor * a[k][c];
                }
            }
        }
        det
    }
}

impl<const N: usize> Matrix<f64, N> {
    pub fn to_complex(&self) -> Matrix<Complex64, N> {
        self.map(Complex64::from)
    }

    /// Largest `|m[i][j] - m[j][i]|`.
    pub fn asymmetry(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for i in 0..N {
            for j in (i + 1)..N {
                worst = worst.max((self.0[i][j] - self.0[j][i]).abs());
            }
        }
        worst
    }
}

impl<const N: usize> Matrix<Complex64, N> {
    pub fn real_part(&self) -> Matrix<f64, N> {
        Matrix::from_fn(|i, j| self.0[i][j].re)
    }

    pub fn imag_part(&self) -> Matrix<f64, N> {
        Matrix::from_fn(|i, j| self.0[i][j].im)
    }
}

/// Kronecker product `a ⊗ b`; the output dimension must equal `A * B`.
pub fn kron<T: Scalar, const A: usize, const B: usize, const AB: usize>(
    a: &Matrix<T, A>,
    b: &Matrix<T, B>,
) -> Matrix<T, AB> {
    const { assert!(A * B == AB, "kron: output dimension must be A*B") };
    Matrix::from_fn(|i, j| a.0[i / B][j / B] * b.0[i % B][j % B])
}

impl<T: Scalar, const N: usize> Add for Matrix<T, N> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::from_fn(|i, j| self.0[i][j] + rhs.0[i][j])
    }
}

impl<T: Scalar, const N: usize> Sub for Matrix<T, N> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::from_fn(|i, j| self.0[i][j] - rhs.0[i][j])
    }
}

impl<T: Scalar, const N: usize> Neg for Matrix<T, N> {
    type Output = Self;
    fn neg(self) -> Self {
        self.map(|x| -x)
    }
}

impl<T: Scalar, const N: usize> Mul for Matrix<T, N> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Self::from_fn(|i, j| {
            (0..N).fold(T::zero(), |acc, k| acc + self.0[i][k] * rhs.0[k][j])
        })
    }
}

impl<T, const N: usize> Index<(usize, usize)> for Matrix<T, N> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.0[i][j]
    }
}

impl<T, const N: usize> IndexMut<(usize, usize)> for Matrix<T, N> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.0[i][j]
    }
}

impl<T: fmt::Debug, const N: usize> fmt::Debug for Matrix<T, N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

/// Euclidean norm of a vector.
pub fn vec_norm<T: Scalar, const N: usize>(v: &[T; N]) -> f64 {
    v.iter().map(|x| x.modulus_sqr()).sum::<f64>().sqrt()
}

/// `⟨a|b⟩ = Σ conj(a_i) b_i`
pub fn inner<T: Scalar, const N: usize>(a: &[T; N], b: &[T; N]) -> T {
    a.iter()
        .zip(b)
        .fold(T::zero(), |acc, (x, y)| acc + x.conj() * *y)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kron_of_identities_is_identity() {
        let k: Matrix<f64, 8> = kron(&Matrix2::identity(), &Matrix4::identity());
        assert_eq!(k, Matrix8::identity());
    }

    #[test]
    fn kron_block_layout() {
        let a = Matrix2::from_fn(|i, j| (2 * i + j + 1) as f64);
        let b = Matrix4::from_fn(|i, j| (i * 4 + j) as f64);
        let k: Matrix8 = kron(&a, &b);
        // block (1,0) is a[1][0] * b = 3b
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(k[(4 + i, j)], 3.0 * b[(i, j)]);
            }
        }
    }

    #[test]
    fn determinant_of_permutation() {
        // single transposition
        let mut p = Matrix4::identity();
        p.0.swap(0, 3);
        assert_eq!(p.determinant(), -1.0);
        let d = Matrix4::from_diagonal(&[1.0, 2.0, 3.0, 4.0]);
        assert_eq!(d.determinant(), 24.0);
    }

    #[test]
    fn complex_adjoint_and_inner() {
        let i = Complex64::i();
        let m = CMatrix2::from_fn(|r, c| Complex64::new(r as f64, c as f64));
        let a = m.adjoint();
        assert_eq!(a[(0, 1)], Complex64::new(1.0, 0.0));
        assert_eq!(a[(1, 0)], Complex64::new(0.0, -1.0));
        let v = [i, Complex64::from(1.0)];
        assert_eq!(inner(&v, &v), Complex64::from(2.0));
    }
}
