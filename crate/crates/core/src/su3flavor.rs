//! The eight 3x3 flavor generators (Gell-Mann matrices), their structure
//! constants, the determinant/trace identity behind tracelessness, the
//! weights of the fundamental triplet, and exact rational hypercharge
//! arithmetic.

use num_complex::Complex64;
use num_rational::Rational64;
use serde::Serialize;

use crate::cmatrix::{mat_exp, ComplexMatrix, DEFAULT_TOL};
use crate::error::Error;
use crate::liecore::{structure_constants, GeneratorBasis, StructureConstants};

const I: Complex64 = Complex64::new(0.0, 1.0);

/// The alpha-th generator matrix, alpha in 1..=8. All are Hermitian and
/// traceless; the eighth is diag(1, 1, -2)/sqrt(3) so that
/// trace(lambda_a lambda_b) = 2 delta_ab across the whole set.
pub fn gell_mann(alpha: usize) -> Result<ComplexMatrix, Error> {
    let z = Complex64::new(0.0, 0.0);
    let one = Complex64::new(1.0, 0.0);
    let rows = match alpha {
        1 => [vec![z, one, z], vec![one, z, z], vec![z, z, z]],
        2 => [vec![z, -I, z], vec![I, z, z], vec![z, z, z]],
        3 => [vec![one, z, z], vec![z, -one, z], vec![z, z, z]],
        4 => [vec![z, z, one], vec![z, z, z], vec![one, z, z]],
        5 => [vec![z, z, -I], vec![z, z, z], vec![I, z, z]],
        6 => [vec![z, z, z], vec![z, z, one], vec![z, one, z]],
        7 => [vec![z, z, z], vec![z, z, -I], vec![z, I, z]],
        8 => {
            let r = 1.0 / 3.0_f64.sqrt();
            return Ok(ComplexMatrix::diag(&[r, r, -2.0 * r]));
        }
        _ => return Err(Error::IndexOutOfRange(alpha)),
    };
    ComplexMatrix::from_rows(&rows).map_err(Into::into)
}

/// All eight generators in index order.
pub fn gell_mann_all() -> Vec<ComplexMatrix> {
    (1..=8).map(|a| gell_mann(a).unwrap()).collect()
}

/// The basis {lambda_alpha / 2} used for the flavor algebra.
pub fn su3_basis() -> GeneratorBasis {
    GeneratorBasis::new(
        "su3",
        gell_mann_all().into_iter().map(|l| l.scale_re(0.5)).collect(),
    )
    .expect("half Gell-Mann matrices are independent")
}

/// f tensor of [X_a, X_b] = i f_ab^c X_c on {lambda/2}; f_123 = 1.
pub fn su3_structure_constants() -> StructureConstants {
    structure_constants(&su3_basis()).expect("flavor algebra closes")
}

/// Per-generator |det(exp(i t X)) - 1| for random real t, confirming that
/// traceless generators exponentiate to determinant-1 matrices.
#[derive(Debug, Clone)]
pub struct TracelessDeterminantReport {
    /// Worst |det - 1| per generator, index order.
    pub max_defect_per_generator: Vec<f64>,
    pub max_defect: f64,
}

pub fn verify_traceless_determinant_identity(
    basis: &GeneratorBasis,
    trials: usize,
    seed: u64,
) -> TracelessDeterminantReport {
    let mut rng = crate::random::rng(seed);
    let mut per = Vec::with_capacity(basis.len());
    for x in &basis.generators {
        let mut worst: f64 = 0.0;
        for _ in 0..trials {
            let t = crate::random::uniform(&mut rng, -3.0, 3.0);
            let u = mat_exp(&x.scale(I * t));
            worst = worst.max((u.det() - Complex64::new(1.0, 0.0)).norm());
        }
        per.push(worst);
    }
    let max = per.iter().copied().fold(0.0, f64::max);
    TracelessDeterminantReport {
        max_defect_per_generator: per,
        max_defect: max,
    }
}

/// A simultaneous eigenvalue pair of the two commuting diagonal generators
/// X3 = lambda_3/2 and X8 = lambda_8/2.
#[derive(Debug, Clone, Serialize)]
pub struct WeightPoint {
    pub label: String,
    pub i3: f64,
    pub x8: f64,
}

/// Weights of the three standard basis states. X3 and X8 are both
/// diagonal, so each pair is read off the diagonals exactly.
pub fn fundamental_weights() -> Vec<WeightPoint> {
    let x3 = gell_mann(3).unwrap().scale_re(0.5);
    let x8 = gell_mann(8).unwrap().scale_re(0.5);
    (0..3)
        .map(|k| WeightPoint {
            label: format!("e{}", k + 1),
            i3: x3[(k, k)].re,
            x8: x8[(k, k)].re,
        })
        .collect()
}

/// CSV export of the weight diagram with header `label,i3,x8`. When
/// `with_hypercharge` is set, an extra `y` column carries the conventional
/// normalization (2/sqrt(3)) * x8.
pub fn weights_csv(points: &[WeightPoint], with_hypercharge: bool) -> String {
    let mut out = String::new();
    if with_hypercharge {
        out.push_str("label,i3,x8,y\n");
    } else {
        out.push_str("label,i3,x8\n");
    }
    for p in points {
        if with_hypercharge {
            let y = 2.0 / 3.0_f64.sqrt() * p.x8;
            out.push_str(&format!("{},{},{},{}\n", p.label, p.i3, p.x8, y));
        } else {
            out.push_str(&format!("{},{},{}\n", p.label, p.i3, p.x8));
        }
    }
    out
}

/// Exact rational quantum numbers with hypercharge
/// Y = baryon number + strangeness.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FlavorQuantumNumbers {
    pub baryon_number: Rational64,
    pub strangeness: Rational64,
    pub hypercharge: Rational64,
}

pub fn hypercharge(baryon_number: Rational64, strangeness: Rational64) -> FlavorQuantumNumbers {
    FlavorQuantumNumbers {
        baryon_number,
        strangeness,
        hypercharge: baryon_number + strangeness,
    }
}

/// Max |trace| over all eight generators.
pub fn max_trace_defect() -> f64 {
    gell_mann_all()
        .iter()
        .map(|l| l.trace().norm())
        .fold(0.0, f64::max)
}

/// Max |trace(lambda_a lambda_b) - 2 delta_ab| over all pairs.
pub fn max_orthonormality_defect() -> f64 {
    let all = gell_mann_all();
    let mut worst: f64 = 0.0;
    for (a, la) in all.iter().enumerate() {
        for (b, lb) in all.iter().enumerate() {
            let want = if a == b { 2.0 } else { 0.0 };
            worst = worst.max((la.mul(lb).trace() - Complex64::new(want, 0.0)).norm());
        }
    }
    worst
}

pub fn all_hermitian_traceless(tol: f64) -> bool {
    gell_mann_all()
        .iter()
        .all(|l| crate::cmatrix::is_hermitian(l, tol) && l.trace().norm() <= tol)
}

/// Checks that random real combinations of {lambda/2} stay Hermitian and
/// traceless; returns the worst defect.
pub fn random_combination_defect(trials: usize, seed: u64) -> f64 {
    let basis = su3_basis();
    let mut rng = crate::random::rng(seed);
    let mut worst: f64 = 0.0;
    for _ in 0..trials {
        let mut m = ComplexMatrix::zeros(3);
        for x in &basis.generators {
            let c = crate::random::uniform(&mut rng, -2.0, 2.0);
            m = m.add(&x.scale_re(c));
        }
        worst = worst.max(m.max_abs_diff(&m.adjoint()));
        worst = worst.max(m.trace().norm());
    }
    worst
}

pub const WEIGHT_TOL: f64 = DEFAULT_TOL;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cmatrix::eig_hermitian;
    use crate::liecore::levi_civita;
    use crate::so3su2::{pauli, Axis};

    #[test]
    fn printed_matrices() {
        let l1 = gell_mann(1).unwrap();
        assert_eq!(l1[(0, 1)], Complex64::new(1.0, 0.0));
        assert_eq!(l1[(1, 0)], Complex64::new(1.0, 0.0));
        assert_eq!(l1[(2, 2)], Complex64::new(0.0, 0.0));
        assert!(gell_mann(0).is_err());
        assert!(gell_mann(9).is_err());
    }

    #[test]
    fn hermitian_traceless_orthonormal() {
        assert!(all_hermitian_traceless(1e-15));
        assert!(max_trace_defect() < 1e-15);
        assert!(max_orthonormality_defect() < 1e-12);
    }

    #[test]
    fn isospin_block_embeds_pauli() {
        for (alpha, axis) in [(1, Axis::X), (2, Axis::Y), (3, Axis::Z)] {
            let l = gell_mann(alpha).unwrap();
            let s = pauli(axis);
            for i in 0..2 {
                for j in 0..2 {
                    assert_eq!(l[(i, j)], s[(i, j)]);
                }
            }
        }
    }

    #[test]
    fn lambda8_eigenvalues() {
        let eig = eig_hermitian(&gell_mann(8).unwrap()).unwrap();
        let r = 1.0 / 3.0_f64.sqrt();
        assert!((eig.eigenvalues[0] + 2.0 * r).abs() < 1e-12);
        assert!((eig.eigenvalues[1] - r).abs() < 1e-12);
        assert!((eig.eigenvalues[2] - r).abs() < 1e-12);
    }

    #[test]
    fn determinant_identity_report() {
        let report = verify_traceless_determinant_identity(&su3_basis(), 25, 3);
        assert!(report.max_defect < 1e-10, "{report:?}");
        // lambda_3 at t = 0.7: diagonal closed form e^{i0.35} e^{-i0.35}.
        let u = mat_exp(&gell_mann(3).unwrap().scale_re(0.5).scale(I * 0.7));
        assert!((u.det() - Complex64::new(1.0, 0.0)).norm() < 1e-12);
        // A traced generator fails the identity: det exp(i t diag(1,0,0))
        // = e^{it} != 1.
        let traced = GeneratorBasis::new(
            "traced",
            vec![ComplexMatrix::diag(&[1.0, 0.0, 0.0])],
        )
        .unwrap();
        let report = verify_traceless_determinant_identity(&traced, 25, 3);
        assert!(report.max_defect > 0.1);
    }

    #[test]
    fn structure_constants_values() {
        let f = su3_structure_constants();
        assert!(f.max_residual < 1e-10);
        assert!(f.max_imag() < 1e-10);
        assert!(f.antisymmetry_defect() < 1e-10);
        assert!((f.f[0][1][2].re - 1.0).abs() < 1e-10);
        for a in 0..8 {
            for c in 0..8 {
                assert!(f.f[a][a][c].norm() < 1e-12);
            }
        }
        // The (1,2,3) slice is the su(2) tensor: on {sigma/2} the constants
        // are plain epsilon, and the lambda/2 embedding preserves that.
        for a in 0..3 {
            for b in 0..3 {
                for c in 0..3 {
                    let want = levi_civita(a + 1, b + 1, c + 1).unwrap() as f64;
                    assert!((f.f[a][b][c].re - want).abs() < 1e-10);
                }
            }
        }
    }

    #[test]
    fn weights_match_expected_values() {
        let w = fundamental_weights();
        let s6 = 3.0_f64.sqrt() / 6.0;
        let s3 = 3.0_f64.sqrt() / 3.0;
        assert_eq!(w[0].label, "e1");
        assert!((w[0].i3 - 0.5).abs() < 1e-15 && (w[0].x8 - s6).abs() < 1e-15);
        assert!((w[1].i3 + 0.5).abs() < 1e-15 && (w[1].x8 - s6).abs() < 1e-15);
        assert!(w[2].i3.abs() < 1e-15 && (w[2].x8 + s3).abs() < 1e-15);
        let (si3, sx8) = w.iter().fold((0.0, 0.0), |acc, p| (acc.0 + p.i3, acc.1 + p.x8));
        assert!(si3.abs() < 1e-14 && sx8.abs() < 1e-14);
    }

    #[test]
    fn weights_are_simultaneous_eigenpairs() {
        let x3 = gell_mann(3).unwrap().scale_re(0.5);
        let x8 = gell_mann(8).unwrap().scale_re(0.5);
        assert!(x3.commutator(&x8).max_abs() < 1e-15);
        for (k, p) in fundamental_weights().iter().enumerate() {
            let mut v = vec![Complex64::new(0.0, 0.0); 3];
            v[k] = Complex64::new(1.0, 0.0);
            let r3 = x3.mul_vec(&v);
            let r8 = x8.mul_vec(&v);
            for i in 0..3 {
                assert!((r3[i] - v[i] * p.i3).norm() < 1e-12);
                assert!((r8[i] - v[i] * p.x8).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn csv_format() {
        let csv = weights_csv(&fundamental_weights(), false);
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some("label,i3,x8"));
        let first = lines.next().unwrap();
        assert!(first.starts_with("e1,0.5,"));
        assert_eq!(csv.lines().count(), 4);
        let with_y = weights_csv(&fundamental_weights(), true);
        assert!(with_y.starts_with("label,i3,x8,y\n"));
        // y = (2/sqrt 3) * x8 = 1/3 for e1.
        let e1 = with_y.lines().nth(1).unwrap();
        let y: f64 = e1.rsplit(',').next().unwrap().parse().unwrap();
        assert!((y - 1.0 / 3.0).abs() < 1e-12);
    }

    #[test]
    fn hypercharge_exact() {
        let ud = hypercharge(Rational64::new(1, 3), Rational64::new(0, 1));
        assert_eq!(ud.hypercharge, Rational64::new(1, 3));
        let strange = hypercharge(Rational64::new(1, 3), Rational64::new(-1, 1));
        assert_eq!(strange.hypercharge, Rational64::new(-2, 3));
        let vacuum = hypercharge(Rational64::new(0, 1), Rational64::new(0, 1));
        assert_eq!(vacuum.hypercharge, Rational64::new(0, 1));
    }

    #[test]
    fn random_combinations_stay_in_algebra() {
        assert!(random_combination_defect(50, 9) < 1e-13);
    }
}
