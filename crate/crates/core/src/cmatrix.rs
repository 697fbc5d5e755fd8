//! Dense complex-matrix kernel: arithmetic, Hermitian eigendecomposition via
//! cyclic Jacobi rotations, matrix exponential by scaling-and-squaring, PSD
//! square root, and the predicate checks used by every other module.
//!
//! All values are immutable after construction; every operation is a pure
//! function. Dimensions are desk-scale (<= 64 by design), so plain dense
//! algorithms are used throughout.

use num_complex::Complex64;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

/// Default tolerance for algebraic identity checks in double precision.
pub const DEFAULT_TOL: f64 = 1e-10;

/// Dense square matrix of complex values, row-major storage.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    dim: usize,
    data: Vec<Complex64>,
}

impl ComplexMatrix {
    pub fn zeros(dim: usize) -> Self {
        ComplexMatrix {
            dim,
            data: vec![Complex64::new(0.0, 0.0); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m[(i, i)] = Complex64::new(1.0, 0.0);
        }
        m
    }

    /// Builds from row-major complex rows. Rejects non-square or non-finite input.
    pub fn from_rows(rows: &[Vec<Complex64>]) -> Result<Self, Error> {
        let dim = rows.len();
        for (i, row) in rows.iter().enumerate() {
            if row.len() != dim {
                return Err(Error::NotSquare {
                    rows: dim,
                    cols: row.len(),
                });
            }
            for (j, z) in row.iter().enumerate() {
                if !z.re.is_finite() || !z.im.is_finite() {
                    return Err(Error::NonFinite { row: i, col: j });
                }
            }
        }
        Ok(ComplexMatrix {
            dim,
            data: rows.iter().flatten().copied().collect(),
        })
    }

    pub fn from_real_rows(rows: &[Vec<f64>]) -> Result<Self, Error> {
        let complex: Vec<Vec<Complex64>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| Complex64::new(x, 0.0)).collect())
            .collect();
        Self::from_rows(&complex)
    }

    /// Diagonal matrix from real entries.
    pub fn diag(entries: &[f64]) -> Self {
        let mut m = Self::zeros(entries.len());
        for (i, &x) in entries.iter().enumerate() {
            m[(i, i)] = Complex64::new(x, 0.0);
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn row(&self, i: usize) -> &[Complex64] {
        &self.data[i * self.dim..(i + 1) * self.dim]
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim);
        ComplexMatrix {
            dim: self.dim,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim);
        ComplexMatrix {
            dim: self.dim,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, s: Complex64) -> Self {
        ComplexMatrix {
            dim: self.dim,
            data: self.data.iter().map(|a| a * s).collect(),
        }
    }

    pub fn scale_re(&self, s: f64) -> Self {
        self.scale(Complex64::new(s, 0.0))
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim);
        let n = self.dim;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self[(i, k)];
                if a == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for j in 0..n {
                    out[(i, j)] += a * other[(k, j)];
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(self.dim, v.len());
        (0..self.dim)
            .map(|i| (0..self.dim).map(|j| self[(i, j)] * v[j]).sum())
            .collect()
    }

    pub fn adjoint(&self) -> Self {
        let n = self.dim;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                out[(i, j)] = self[(j, i)].conj();
            }
        }
        out
    }

    pub fn transpose(&self) -> Self {
        let n = self.dim;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                out[(i, j)] = self[(j, i)];
            }
        }
        out
    }

    pub fn commutator(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.dim).map(|i| self[(i, i)]).sum()
    }

    /// Largest entry magnitude.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!(self.dim, other.dim);
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Frobenius inner product <A, B> = tr(A† B).
    pub fn frobenius_inner(&self, other: &Self) -> Complex64 {
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.dim == other.dim && self.max_abs_diff(other) <= tol
    }

    /// Determinant via LU with partial pivoting.
    pub fn det(&self) -> Complex64 {
        let n = self.dim;
        let mut a = self.data.clone();
        let mut det = Complex64::new(1.0, 0.0);
        for col in 0..n {
            let pivot = (col..n)
                .max_by(|&i, &j| {
                    a[i * n + col]
                        .norm()
                        .partial_cmp(&a[j * n + col].norm())
                        .unwrap()
                })
                .unwrap();
            if a[pivot * n + col].norm() == 0.0 {
                return Complex64::new(0.0, 0.0);
            }
            if pivot != col {
                for j in 0..n {
                    a.swap(col * n + j, pivot * n + j);
                }
                det = -det;
            }
            det *= a[col * n + col];
            for i in col + 1..n {
                let f = a[i * n + col] / a[col * n + col];
                for j in col..n {
                    let sub = f * a[col * n + j];
                    a[i * n + j] -= sub;
                }
            }
        }
        det
    }

    /// Inverse via Gauss-Jordan with partial pivoting.
    pub fn inverse(&self) -> Result<Self, Error> {
        let n = self.dim;
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        for col in 0..n {
            let pivot = (col..n)
                .max_by(|&i, &j| {
                    a[(i, col)].norm().partial_cmp(&a[(j, col)].norm()).unwrap()
                })
                .unwrap();
            if a[(pivot, col)].norm() < 1e-300 {
                return Err(Error::Singular);
            }
            if pivot != col {
                for j in 0..n {
                    let t = a[(col, j)];
                    a[(col, j)] = a[(pivot, j)];
                    a[(pivot, j)] = t;
                    let t = inv[(col, j)];
                    inv[(col, j)] = inv[(pivot, j)];
                    inv[(pivot, j)] = t;
                }
            }
            let p = a[(col, col)];
            for j in 0..n {
                a[(col, j)] /= p;
                inv[(col, j)] /= p;
            }
            for i in 0..n {
                if i == col {
                    continue;
                }
                let f = a[(i, col)];
                if f.norm() == 0.0 {
                    continue;
                }
                for j in 0..n {
                    let s = f * a[(col, j)];
                    a[(i, j)] -= s;
                    let s = f * inv[(col, j)];
                    inv[(i, j)] -= s;
                }
            }
        }
        Ok(inv)
    }

    /// Kronecker product, (self ⊗ other).
    pub fn kron(&self, other: &Self) -> Self {
        let n = self.dim;
        let m = other.dim;
        let mut out = Self::zeros(n * m);
        for i in 0..n {
            for j in 0..n {
                for k in 0..m {
                    for l in 0..m {
                        out[(i * m + k, j * m + l)] = self[(i, j)] * other[(k, l)];
                    }
                }
            }
        }
        out
    }
}

impl std::ops::Index<(usize, usize)> for ComplexMatrix {
    type Output = Complex64;
    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.data[i * self.dim + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for ComplexMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        &mut self.data[i * self.dim + j]
    }
}

// JSON wire format: {"dim": n, "entries": [[[re,im],...],...]} row-major.
#[derive(Serialize, Deserialize)]
struct MatrixWire {
    dim: usize,
    entries: Vec<Vec<[f64; 2]>>,
}

impl Serialize for ComplexMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let entries = (0..self.dim)
            .map(|i| self.row(i).iter().map(|z| [z.re, z.im]).collect())
            .collect();
        MatrixWire {
            dim: self.dim,
            entries,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ComplexMatrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let wire = MatrixWire::deserialize(deserializer)?;
        if wire.entries.len() != wire.dim {
            return Err(D::Error::custom("matrix entries do not match declared dim"));
        }
        let rows: Vec<Vec<Complex64>> = wire
            .entries
            .iter()
            .map(|r| r.iter().map(|&[re, im]| Complex64::new(re, im)).collect())
            .collect();
        ComplexMatrix::from_rows(&rows).map_err(D::Error::custom)
    }
}

/// Eigendecomposition of a Hermitian matrix: ascending real eigenvalues and
/// a unitary matrix of column eigenvectors.
#[derive(Debug, Clone)]
pub struct HermitianEigenDecomposition {
    pub eigenvalues: Vec<f64>,
    pub eigenvectors: ComplexMatrix,
}

impl HermitianEigenDecomposition {
    /// V · diag(w) · V†.
    pub fn reconstruct(&self) -> ComplexMatrix {
        let v = &self.eigenvectors;
        let d = ComplexMatrix::diag(&self.eigenvalues);
        v.mul(&d).mul(&v.adjoint())
    }
}

pub fn is_hermitian(m: &ComplexMatrix, tol: f64) -> bool {
    m.max_abs_diff(&m.adjoint()) <= tol
}

pub fn is_unitary(m: &ComplexMatrix, tol: f64) -> bool {
    m.mul(&m.adjoint())
        .max_abs_diff(&ComplexMatrix::identity(m.dim()))
        <= tol
}

pub fn is_positive_semidefinite(m: &ComplexMatrix, tol: f64) -> Result<bool, Error> {
    let eig = eig_hermitian_tol(m, tol)?;
    Ok(eig.eigenvalues.iter().all(|&w| w >= -tol))
}

pub fn eig_hermitian(m: &ComplexMatrix) -> Result<HermitianEigenDecomposition, Error> {
    eig_hermitian_tol(m, DEFAULT_TOL)
}

/// Cyclic Jacobi eigensolver for Hermitian matrices. Deterministic: sweeps
/// the strict upper triangle in row-major order until the off-diagonal
/// Frobenius norm is negligible relative to the matrix scale.
pub fn eig_hermitian_tol(
    m: &ComplexMatrix,
    herm_tol: f64,
) -> Result<HermitianEigenDecomposition, Error> {
    let dev = m.max_abs_diff(&m.adjoint());
    if dev > herm_tol {
        return Err(Error::NotHermitian { deviation: dev });
    }
    let n = m.dim();
    // Work on the Hermitian part so roundoff-level asymmetry cannot leak in.
    let mut a = m.add(&m.adjoint()).scale_re(0.5);
    let mut v = ComplexMatrix::identity(n);
    let scale = a.frobenius_norm().max(1e-300);

    for _sweep in 0..100 {
        let off: f64 = (0..n)
            .flat_map(|p| (p + 1..n).map(move |q| (p, q)))
            .map(|(p, q)| a[(p, q)].norm_sqr())
            .sum::<f64>()
            .sqrt();
        if off <= 1e-15 * scale {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let beta = a[(p, q)];
                let b = beta.norm();
                if b <= 1e-300 {
                    continue;
                }
                // Phase rotation makes the (p,q) entry real, then a real
                // Givens rotation annihilates it.
                let u = beta / b; // e^{i phi}
                let alpha = a[(p, p)].re;
                let gamma = a[(q, q)].re;
                let tau = (gamma - alpha) / (2.0 * b);
                let t = if tau >= 0.0 {
                    -1.0 / (tau + (1.0 + tau * tau).sqrt())
                } else {
                    1.0 / (-tau + (1.0 + tau * tau).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                // Combined unitary acting on columns p, q:
                //   col_p' = c*col_p + s*conj(u)*col_q
                //   col_q' = -s*u*col_p + c*col_q
                let cu = Complex64::new(c, 0.0);
                let su = u.conj() * s;
                let nsu = -u * s;
                for i in 0..n {
                    let aip = a[(i, p)];
                    let aiq = a[(i, q)];
                    a[(i, p)] = aip * cu + aiq * su;
                    a[(i, q)] = aip * nsu + aiq * cu;
                }
                for j in 0..n {
                    let apj = a[(p, j)];
                    let aqj = a[(q, j)];
                    a[(p, j)] = apj * cu.conj() + aqj * su.conj();
                    a[(q, j)] = apj * nsu.conj() + aqj * cu.conj();
                }
                for i in 0..n {
                    let vip = v[(i, p)];
                    let viq = v[(i, q)];
                    v[(i, p)] = vip * cu + viq * su;
                    v[(i, q)] = vip * nsu + viq * cu;
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(i, i)].re.partial_cmp(&a[(j, j)].re).unwrap());
    let eigenvalues: Vec<f64> = order.iter().map(|&i| a[(i, i)].re).collect();
    let mut vectors = ComplexMatrix::zeros(n);
    for (col, &src) in order.iter().enumerate() {
        for i in 0..n {
            vectors[(i, col)] = v[(i, src)];
        }
    }
    Ok(HermitianEigenDecomposition {
        eigenvalues,
        eigenvectors: vectors,
    })
}

/// Matrix exponential via scaling-and-squaring with a truncated Taylor
/// series. Converges for any finite input; absolute error well below 1e-12
/// for norms up to desk scale.
pub fn mat_exp(m: &ComplexMatrix) -> ComplexMatrix {
    let n = m.dim();
    let norm = m.max_abs() * n as f64;
    let s = if norm > 0.5 {
        (norm / 0.5).log2().ceil() as u32
    } else {
        0
    };
    let b = m.scale_re(1.0 / 2f64.powi(s as i32));

    let mut result = ComplexMatrix::identity(n);
    let mut term = ComplexMatrix::identity(n);
    for k in 1..=40 {
        term = term.mul(&b).scale_re(1.0 / k as f64);
        result = result.add(&term);
        if term.max_abs() < 1e-20 {
            break;
        }
    }
    for _ in 0..s {
        result = result.mul(&result);
    }
    result
}

/// Hermitian PSD square root: R with R·R = M, R Hermitian PSD.
pub fn psd_sqrt(m: &ComplexMatrix) -> Result<ComplexMatrix, Error> {
    psd_sqrt_tol(m, DEFAULT_TOL)
}

pub fn psd_sqrt_tol(m: &ComplexMatrix, tol: f64) -> Result<ComplexMatrix, Error> {
    let eig = eig_hermitian_tol(m, tol)?;
    if let Some(&w) = eig.eigenvalues.iter().find(|&&w| w < -tol) {
        return Err(Error::NotPositiveSemidefinite { eigenvalue: w });
    }
    let roots: Vec<f64> = eig.eigenvalues.iter().map(|&w| w.max(0.0).sqrt()).collect();
    let v = &eig.eigenvectors;
    Ok(v.mul(&ComplexMatrix::diag(&roots)).mul(&v.adjoint()))
}

/// Inverse square root of a Hermitian positive definite matrix.
pub fn pd_inv_sqrt(m: &ComplexMatrix, tol: f64) -> Result<ComplexMatrix, Error> {
    let eig = eig_hermitian_tol(m, tol)?;
    if let Some(&w) = eig.eigenvalues.iter().find(|&&w| w <= tol) {
        return Err(Error::NotPositiveSemidefinite { eigenvalue: w });
    }
    let roots: Vec<f64> = eig.eigenvalues.iter().map(|&w| 1.0 / w.sqrt()).collect();
    let v = &eig.eigenvectors;
    Ok(v.mul(&ComplexMatrix::diag(&roots)).mul(&v.adjoint()))
}

/// Solves the Hermitian positive definite system G x = b by Gaussian
/// elimination with partial pivoting. Used for least-squares expansions.
pub fn solve(g: &ComplexMatrix, b: &[Complex64]) -> Result<Vec<Complex64>, Error> {
    let n = g.dim();
    if b.len() != n {
        return Err(Error::DimensionMismatch {
            left: n,
            right: b.len(),
        });
    }
    let mut a = g.clone();
    let mut x: Vec<Complex64> = b.to_vec();
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&i, &j| a[(i, col)].norm().partial_cmp(&a[(j, col)].norm()).unwrap())
            .unwrap();
        if a[(pivot, col)].norm() < 1e-300 {
            return Err(Error::Singular);
        }
        if pivot != col {
            for j in 0..n {
                let t = a[(col, j)];
                a[(col, j)] = a[(pivot, j)];
                a[(pivot, j)] = t;
            }
            x.swap(col, pivot);
        }
        for i in col + 1..n {
            let f = a[(i, col)] / a[(col, col)];
            for j in col..n {
                let s = f * a[(col, j)];
                a[(i, j)] -= s;
            }
            let s = f * x[col];
            x[i] -= s;
        }
    }
    for i in (0..n).rev() {
        let mut acc = x[i];
        for j in i + 1..n {
            acc -= a[(i, j)] * x[j];
        }
        x[i] = acc / a[(i, i)];
    }
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn pauli_x() -> ComplexMatrix {
        ComplexMatrix::from_real_rows(&[vec![0.0, 1.0], vec![1.0, 0.0]]).unwrap()
    }

    #[test]
    fn hermitian_predicate() {
        assert!(is_hermitian(&pauli_x(), 1e-12));
        assert!(is_hermitian(&ComplexMatrix::zeros(3), 1e-12));
        // Boost generator layout: i off-diagonal symmetric is anti-Hermitian.
        let kx = ComplexMatrix::from_rows(&[
            vec![c(0.0, 0.0), c(0.0, 1.0)],
            vec![c(0.0, 1.0), c(0.0, 0.0)],
        ])
        .unwrap();
        assert!(!is_hermitian(&kx, 1e-12));
    }

    #[test]
    fn unitary_predicate() {
        assert!(is_unitary(&ComplexMatrix::identity(3), 1e-12));
        let r90 = ComplexMatrix::from_real_rows(&[vec![0.0, -1.0], vec![1.0, 0.0]]).unwrap();
        assert!(is_unitary(&r90, 1e-12));
        let d = ComplexMatrix::from_real_rows(&[vec![1.0, 1.0], vec![0.0, -1.0]]).unwrap();
        assert!(!is_unitary(&d, 1e-12));
    }

    #[test]
    fn psd_predicate() {
        let d = ComplexMatrix::from_real_rows(&[vec![1.0, 1.0], vec![0.0, -1.0]]).unwrap();
        let dtd = d.adjoint().mul(&d);
        assert!(dtd.approx_eq(
            &ComplexMatrix::from_real_rows(&[vec![1.0, 1.0], vec![1.0, 2.0]]).unwrap(),
            1e-14
        ));
        assert!(is_positive_semidefinite(&dtd, 1e-10).unwrap());
        assert!(is_positive_semidefinite(&ComplexMatrix::identity(2), 1e-10).unwrap());
        assert!(!is_positive_semidefinite(&ComplexMatrix::diag(&[1.0, -1.0]), 1e-10).unwrap());
        assert!(is_positive_semidefinite(&d, 1e-10).is_err());
    }

    #[test]
    fn eig_small_cases() {
        // Involutive reflection: eigenvalues {-1, +1}.
        let p = ComplexMatrix::from_real_rows(&[vec![0.0, 1.0], vec![1.0, 0.0]]).unwrap();
        let e = eig_hermitian(&p).unwrap();
        assert!((e.eigenvalues[0] + 1.0).abs() < 1e-12);
        assert!((e.eigenvalues[1] - 1.0).abs() < 1e-12);

        // X_z of the 3D rotation basis: eigenvalues {-1, 0, 1}.
        let xz = ComplexMatrix::from_rows(&[
            vec![c(0.0, 0.0), c(0.0, 1.0), c(0.0, 0.0)],
            vec![c(0.0, -1.0), c(0.0, 0.0), c(0.0, 0.0)],
            vec![c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)],
        ])
        .unwrap();
        let e = eig_hermitian(&xz).unwrap();
        for (got, want) in e.eigenvalues.iter().zip([-1.0, 0.0, 1.0]) {
            assert!((got - want).abs() < 1e-12);
        }

        let e = eig_hermitian(&ComplexMatrix::identity(3)).unwrap();
        assert!(e.eigenvalues.iter().all(|&w| (w - 1.0).abs() < 1e-13));

        // (3 +- sqrt(5))/2 for [[1,1],[1,2]].
        let m = ComplexMatrix::from_real_rows(&[vec![1.0, 1.0], vec![1.0, 2.0]]).unwrap();
        let e = eig_hermitian(&m).unwrap();
        let s5 = 5f64.sqrt();
        assert!((e.eigenvalues[0] - (3.0 - s5) / 2.0).abs() < 1e-12);
        assert!((e.eigenvalues[1] - (3.0 + s5) / 2.0).abs() < 1e-12);
    }

    #[test]
    fn eig_reconstruction_random() {
        let mut rng = crate::random::rng(42);
        for dim in 2..=8 {
            let h = crate::random::random_hermitian(&mut rng, dim);
            let e = eig_hermitian(&h).unwrap();
            assert!(e.reconstruct().max_abs_diff(&h) <= 1e-10);
            assert!(is_unitary(&e.eigenvectors, 1e-10));
            for w in e.eigenvalues.windows(2) {
                assert!(w[0] <= w[1]);
            }
        }
    }

    #[test]
    fn eig_rejects_non_hermitian() {
        let m = ComplexMatrix::from_real_rows(&[vec![0.0, 1.0], vec![0.0, 0.0]]).unwrap();
        assert!(eig_hermitian(&m).is_err());
    }

    #[test]
    fn exp_zero_is_identity() {
        assert!(mat_exp(&ComplexMatrix::zeros(4)).approx_eq(&ComplexMatrix::identity(4), 1e-15));
    }

    #[test]
    fn exp_rotation_quarter_turn() {
        // X = -i R'(0) for the 2D rotation curve; exp(i (pi/2) X) = R(pi/2).
        let x = ComplexMatrix::from_rows(&[
            vec![c(0.0, 0.0), c(0.0, 1.0)],
            vec![c(0.0, -1.0), c(0.0, 0.0)],
        ])
        .unwrap();
        let ix = x.scale(c(0.0, 1.0)).scale_re(std::f64::consts::FRAC_PI_2);
        let r = mat_exp(&ix);
        let want = ComplexMatrix::from_real_rows(&[vec![0.0, -1.0], vec![1.0, 0.0]]).unwrap();
        assert!(r.approx_eq(&want, 1e-12));
    }

    #[test]
    fn exp_diagonal() {
        let theta = 0.37;
        let sz = ComplexMatrix::diag(&[1.0, -1.0]);
        let got = mat_exp(&sz.scale(c(0.0, theta)));
        let want = ComplexMatrix::from_rows(&[
            vec![Complex64::from_polar(1.0, theta), c(0.0, 0.0)],
            vec![c(0.0, 0.0), Complex64::from_polar(1.0, -theta)],
        ])
        .unwrap();
        assert!(got.approx_eq(&want, 1e-13));
    }

    #[test]
    fn exp_of_hermitian_times_i_is_unitary() {
        let mut rng = crate::random::rng(7);
        for _ in 0..20 {
            let h = crate::random::random_hermitian(&mut rng, 4);
            let theta = crate::random::uniform(&mut rng, -3.0, 3.0);
            let u = mat_exp(&h.scale(c(0.0, theta)));
            assert!(is_unitary(&u, 1e-10));
        }
    }

    #[test]
    fn det_exp_equals_exp_trace() {
        let mut rng = crate::random::rng(11);
        for _ in 0..20 {
            let a = crate::random::random_matrix(&mut rng, 4);
            let lhs = mat_exp(&a).det();
            let rhs = a.trace().exp();
            assert!((lhs - rhs).norm() <= 1e-9 * rhs.norm().max(1.0));
        }
    }

    #[test]
    fn sqrt_diagonal_and_general() {
        assert!(psd_sqrt(&ComplexMatrix::identity(3))
            .unwrap()
            .approx_eq(&ComplexMatrix::identity(3), 1e-13));
        let got = psd_sqrt(&ComplexMatrix::diag(&[4.0, 9.0])).unwrap();
        assert!(got.approx_eq(&ComplexMatrix::diag(&[2.0, 3.0]), 1e-12));

        let s = ComplexMatrix::from_real_rows(&[vec![2.0, 1.0], vec![1.0, 3.0]]).unwrap();
        let r = psd_sqrt(&s).unwrap();
        assert!(is_hermitian(&r, 1e-12));
        assert!(r.mul(&r).approx_eq(&s, 1e-10));

        assert!(psd_sqrt(&ComplexMatrix::diag(&[1.0, -1.0])).is_err());
    }

    #[test]
    fn sqrt_random_psd() {
        let mut rng = crate::random::rng(3);
        for _ in 0..10 {
            let a = crate::random::random_matrix(&mut rng, 5);
            let m = a.adjoint().mul(&a);
            let r = psd_sqrt(&m).unwrap();
            assert!(r.mul(&r).max_abs_diff(&m) <= 1e-10 * m.max_abs().max(1.0));
        }
    }

    #[test]
    fn inverse_round_trip() {
        let mut rng = crate::random::rng(19);
        let a = crate::random::random_matrix(&mut rng, 5);
        let inv = a.inverse().unwrap();
        assert!(a.mul(&inv).approx_eq(&ComplexMatrix::identity(5), 1e-10));
    }

    #[test]
    fn json_round_trip_and_rejection() {
        let m = ComplexMatrix::from_rows(&[
            vec![c(1.5, -0.25), c(0.0, 1.0)],
            vec![c(std::f64::consts::PI, 0.0), c(-2.0, 3.0)],
        ])
        .unwrap();
        let text = serde_json::to_string(&m).unwrap();
        let back: ComplexMatrix = serde_json::from_str(&text).unwrap();
        assert_eq!(m, back);

        assert!(serde_json::from_str::<ComplexMatrix>(
            r#"{"dim":2,"entries":[[[1,0],[0,0]]]}"#
        )
        .is_err());
        assert!(serde_json::from_str::<ComplexMatrix>(
            r#"{"dim":1,"entries":[[[1e999,0]]]}"#
        )
        .is_err());
    }
}
