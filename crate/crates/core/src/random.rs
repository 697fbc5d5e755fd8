//! Seeded sampling helpers. Every random draw in the crate goes through a
//! ChaCha stream keyed by an explicit seed so reports are reproducible.

use num_complex::Complex64;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::cmatrix::{eig_hermitian, ComplexMatrix};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn uniform(rng: &mut ChaCha8Rng, lo: f64, hi: f64) -> f64 {
    rng.gen_range(lo..hi)
}

/// Matrix with entries uniform in [-1, 1] on both components.
pub fn random_matrix(rng: &mut ChaCha8Rng, dim: usize) -> ComplexMatrix {
    let mut m = ComplexMatrix::zeros(dim);
    for i in 0..dim {
        for j in 0..dim {
            m[(i, j)] = Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
        }
    }
    m
}

pub fn random_hermitian(rng: &mut ChaCha8Rng, dim: usize) -> ComplexMatrix {
    let a = random_matrix(rng, dim);
    a.add(&a.adjoint()).scale_re(0.5)
}

/// 2-norm condition number from the singular values of M.
pub fn condition_number(m: &ComplexMatrix) -> f64 {
    let gram = m.adjoint().mul(m);
    let eig = eig_hermitian(&gram).expect("gram matrix is Hermitian");
    let max = eig.eigenvalues.last().copied().unwrap_or(0.0).max(0.0);
    let min = eig.eigenvalues.first().copied().unwrap_or(0.0).max(0.0);
    if min == 0.0 {
        f64::INFINITY
    } else {
        (max / min).sqrt()
    }
}

/// Random invertible matrix with condition number at most `max_cond`,
/// resampled until the bound holds.
pub fn random_invertible(rng: &mut ChaCha8Rng, dim: usize, max_cond: f64) -> ComplexMatrix {
    loop {
        let m = random_matrix(rng, dim);
        if condition_number(&m) <= max_cond {
            return m;
        }
    }
}
