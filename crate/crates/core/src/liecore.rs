//! Matrix Lie group machinery: generators extracted numerically from
//! parametrized curves, the exponential map, structure constants solved by
//! least squares, Lie-bracket property checks, and scalar-rescale
//! comparison of two generator algebras.

use num_complex::Complex64;
use serde::Deserialize;

use crate::cmatrix::{eig_hermitian, mat_exp, solve, ComplexMatrix};
use crate::error::Error;

const I: Complex64 = Complex64::new(0.0, 1.0);

/// Tolerance separating genuine non-closure of a bracket from roundoff.
pub const CLOSURE_TOL: f64 = 1e-8;

/// A differentiable family of matrices D(α) with D(0) expected to be the
/// identity. Curves may supply an exact derivative at zero per parameter;
/// otherwise a finite difference is used.
pub struct ParamCurve {
    pub dim: usize,
    pub param_count: usize,
    pub at_zero_is_identity: bool,
    pub evaluate: Box<dyn Fn(&[f64]) -> ComplexMatrix + Sync>,
    /// Optional exact ∂D/∂α_j at α = 0, indexed by parameter.
    pub analytic_derivative: Option<Box<dyn Fn(usize) -> ComplexMatrix + Sync>>,
}

impl ParamCurve {
    pub fn new(
        dim: usize,
        param_count: usize,
        evaluate: impl Fn(&[f64]) -> ComplexMatrix + Sync + 'static,
    ) -> Self {
        ParamCurve {
            dim,
            param_count,
            at_zero_is_identity: true,
            evaluate: Box::new(evaluate),
            analytic_derivative: None,
        }
    }

    pub fn with_derivative(
        mut self,
        derivative: impl Fn(usize) -> ComplexMatrix + Sync + 'static,
    ) -> Self {
        self.analytic_derivative = Some(Box::new(derivative));
        self
    }

    pub fn at(&self, alpha: &[f64]) -> ComplexMatrix {
        (self.evaluate)(alpha)
    }
}

/// An ordered, linearly independent list of same-dimension generator
/// matrices.
#[derive(Debug, Clone)]
pub struct GeneratorBasis {
    pub name: String,
    pub generators: Vec<ComplexMatrix>,
}

impl GeneratorBasis {
    /// Builds a basis after checking all generators share a dimension and
    /// their vectorizations are linearly independent (full-rank Gram).
    pub fn new(name: &str, generators: Vec<ComplexMatrix>) -> Result<Self, Error> {
        let dim = generators
            .first()
            .map(|g| g.dim())
            .ok_or(Error::DependentBasis)?;
        for g in &generators {
            if g.dim() != dim {
                return Err(Error::DimensionMismatch {
                    left: dim,
                    right: g.dim(),
                });
            }
        }
        let gram = gram_matrix(&generators);
        let eig = eig_hermitian(&gram)?;
        let max = eig.eigenvalues.last().copied().unwrap_or(0.0);
        if eig.eigenvalues[0] <= 1e-12 * max.max(1.0) {
            return Err(Error::DependentBasis);
        }
        Ok(GeneratorBasis {
            name: name.to_string(),
            generators,
        })
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.generators[0].dim()
    }

    /// Every generator multiplied by the same real scalar.
    pub fn scaled(&self, s: f64) -> GeneratorBasis {
        GeneratorBasis {
            name: format!("{}*{s}", self.name),
            generators: self.generators.iter().map(|g| g.scale_re(s)).collect(),
        }
    }

    /// Parses {"name":..., "generators":[matrix,...]}.
    pub fn from_json(text: &str) -> Result<Self, Error> {
        #[derive(Deserialize)]
        struct Wire {
            name: String,
            generators: Vec<ComplexMatrix>,
        }
        let wire: Wire = serde_json::from_str(text)?;
        GeneratorBasis::new(&wire.name, wire.generators)
    }
}

fn gram_matrix(mats: &[ComplexMatrix]) -> ComplexMatrix {
    let k = mats.len();
    let mut gram = ComplexMatrix::zeros(k);
    for a in 0..k {
        for b in 0..k {
            gram[(a, b)] = mats[a].frobenius_inner(&mats[b]);
        }
    }
    gram
}

/// Expands `target` in the span of `mats` by least squares; returns the
/// coefficients and the Frobenius norm of the residual.
fn expand_in_span(
    mats: &[ComplexMatrix],
    target: &ComplexMatrix,
) -> Result<(Vec<Complex64>, f64), Error> {
    let gram = gram_matrix(mats);
    let rhs: Vec<Complex64> = mats.iter().map(|m| m.frobenius_inner(target)).collect();
    let coeffs = solve(&gram, &rhs)?;
    let mut recon = ComplexMatrix::zeros(target.dim());
    for (c, m) in coeffs.iter().zip(mats) {
        recon = recon.add(&m.scale(*c));
    }
    Ok((coeffs, recon.sub(target).frobenius_norm()))
}

/// X_j = −i ∂D/∂α_j at α = 0. Uses the curve's exact derivative when
/// supplied, else a Richardson-extrapolated central difference with the
/// given step. Returns the generator and an error estimate.
pub fn extract_generator(
    curve: &ParamCurve,
    j: usize,
    h: f64,
) -> Result<(ComplexMatrix, f64), Error> {
    if j >= curve.param_count {
        return Err(Error::ParameterOutOfRange {
            index: j,
            count: curve.param_count,
        });
    }
    let zero = vec![0.0; curve.param_count];
    let at_zero = curve.at(&zero);
    let dev = at_zero.max_abs_diff(&ComplexMatrix::identity(curve.dim));
    if curve.at_zero_is_identity && dev > 1e-10 {
        return Err(Error::CurveNotIdentity { deviation: dev });
    }

    if let Some(exact) = &curve.analytic_derivative {
        return Ok((exact(j).scale(-I), 0.0));
    }

    let central = |step: f64| -> ComplexMatrix {
        let mut plus = zero.clone();
        let mut minus = zero.clone();
        plus[j] = step;
        minus[j] = -step;
        curve
            .at(&plus)
            .sub(&curve.at(&minus))
            .scale_re(1.0 / (2.0 * step))
    };
    let d_h = central(h);
    let d_h2 = central(h / 2.0);
    // One Richardson level kills the O(h^2) term of the central difference.
    let richardson = d_h2.scale_re(4.0 / 3.0).sub(&d_h.scale_re(1.0 / 3.0));
    let err_estimate = richardson.max_abs_diff(&d_h2);
    Ok((richardson.scale(-I), err_estimate))
}

/// D(α) = exp(i α^j X_j).
pub fn exp_map(basis: &GeneratorBasis, alpha: &[f64]) -> Result<ComplexMatrix, Error> {
    if alpha.len() != basis.len() {
        return Err(Error::CoefficientLengthMismatch {
            got: alpha.len(),
            expected: basis.len(),
        });
    }
    let mut m = ComplexMatrix::zeros(basis.dim());
    for (a, x) in alpha.iter().zip(&basis.generators) {
        m = m.add(&x.scale(I * *a));
    }
    Ok(mat_exp(&m))
}

/// The tensor f with [X_a, X_b] = i f_ab^c X_c, plus the worst expansion
/// residual encountered while solving for it.
#[derive(Debug, Clone)]
pub struct StructureConstants {
    pub f: Vec<Vec<Vec<Complex64>>>,
    pub max_residual: f64,
}

impl StructureConstants {
    pub fn len(&self) -> usize {
        self.f.len()
    }

    pub fn is_empty(&self) -> bool {
        self.f.is_empty()
    }

    pub fn max_abs_diff(&self, other: &StructureConstants) -> f64 {
        let n = self.len();
        let mut worst: f64 = 0.0;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    worst = worst.max((self.f[a][b][c] - other.f[a][b][c]).norm());
                }
            }
        }
        worst
    }

    pub fn max_imag(&self) -> f64 {
        self.f
            .iter()
            .flatten()
            .flatten()
            .map(|z| z.im.abs())
            .fold(0.0, f64::max)
    }

    pub fn antisymmetry_defect(&self) -> f64 {
        let n = self.len();
        let mut worst: f64 = 0.0;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    worst = worst.max((self.f[a][b][c] + self.f[b][a][c]).norm());
                }
            }
        }
        worst
    }
}

/// Solves [X_a, X_b] = i f_ab^c X_c for every pair by least squares over
/// vectorized matrices. Errors when a bracket leaves the span of the basis
/// beyond [`CLOSURE_TOL`].
pub fn structure_constants(basis: &GeneratorBasis) -> Result<StructureConstants, Error> {
    structure_constants_tol(basis, CLOSURE_TOL)
}

pub fn structure_constants_tol(
    basis: &GeneratorBasis,
    closure_tol: f64,
) -> Result<StructureConstants, Error> {
    let n = basis.len();
    let scale = basis
        .generators
        .iter()
        .map(|g| g.frobenius_norm())
        .fold(0.0, f64::max)
        .max(1.0);
    let mut f = vec![vec![vec![Complex64::new(0.0, 0.0); n]; n]; n];
    let mut max_residual: f64 = 0.0;
    for a in 0..n {
        for b in 0..n {
            let target = basis.generators[a]
                .commutator(&basis.generators[b])
                .scale(-I);
            let (coeffs, residual) = expand_in_span(&basis.generators, &target)?;
            if residual > closure_tol * scale {
                return Err(Error::NotClosed { residual });
            }
            max_residual = max_residual.max(residual);
            f[a][b].copy_from_slice(&coeffs);
        }
    }
    Ok(StructureConstants { f, max_residual })
}

/// Max residuals of the four defining bracket properties, measured on
/// random linear combinations of the basis.
#[derive(Debug, Clone, Copy)]
pub struct BracketPropertyReport {
    pub alternating: f64,
    pub bilinearity: f64,
    pub antisymmetry: f64,
    pub jacobi: f64,
}

impl BracketPropertyReport {
    pub fn worst(&self) -> f64 {
        self.alternating
            .max(self.bilinearity)
            .max(self.antisymmetry)
            .max(self.jacobi)
    }
}

/// Checks [A,A] = 0, bilinearity, antisymmetry, and the Jacobi identity on
/// `trials` random coefficient vectors drawn from the seeded generator.
/// Residuals are scaled by the cube of the largest operand norm so they are
/// comparable across bases.
pub fn verify_bracket_properties(
    basis: &GeneratorBasis,
    trials: usize,
    seed: u64,
) -> BracketPropertyReport {
    let mut rng = crate::random::rng(seed);
    let draw = |rng: &mut rand_chacha::ChaCha8Rng| {
        let mut m = ComplexMatrix::zeros(basis.dim());
        for g in &basis.generators {
            let w = Complex64::new(
                crate::random::uniform(rng, -1.0, 1.0),
                crate::random::uniform(rng, -1.0, 1.0),
            );
            m = m.add(&g.scale(w));
        }
        m
    };
    let mut report = BracketPropertyReport {
        alternating: 0.0,
        bilinearity: 0.0,
        antisymmetry: 0.0,
        jacobi: 0.0,
    };
    for _ in 0..trials {
        let a = draw(&mut rng);
        let b = draw(&mut rng);
        let c = draw(&mut rng);
        let s = Complex64::new(
            crate::random::uniform(&mut rng, -2.0, 2.0),
            crate::random::uniform(&mut rng, -2.0, 2.0),
        );
        let norm = a
            .frobenius_norm()
            .max(b.frobenius_norm())
            .max(c.frobenius_norm())
            .max(1.0);
        let unit = 1.0 / (norm * norm * norm);

        report.alternating = report
            .alternating
            .max(a.commutator(&a).max_abs() * unit);
        // [sA + B, C] = s[A, C] + [B, C]
        let lhs = a.scale(s).add(&b).commutator(&c);
        let rhs = a.commutator(&c).scale(s).add(&b.commutator(&c));
        report.bilinearity = report.bilinearity.max(lhs.max_abs_diff(&rhs) * unit);
        report.antisymmetry = report
            .antisymmetry
            .max(a.commutator(&b).add(&b.commutator(&a)).max_abs() * unit);
        let jac = a
            .commutator(&b.commutator(&c))
            .add(&b.commutator(&c.commutator(&a)))
            .add(&c.commutator(&a.commutator(&b)));
        report.jacobi = report.jacobi.max(jac.max_abs() * unit);
    }
    report
}

/// Searches for a real s > 0 with f(b1) = s·f(b2) elementwise under the
/// fixed index pairing, where scaling a basis by s scales its constant
/// tensor by s. Returns None when no positive scalar matches within `tol`.
pub fn algebras_isomorphic_by_rescale(
    b1: &GeneratorBasis,
    b2: &GeneratorBasis,
    tol: f64,
) -> Result<Option<f64>, Error> {
    if b1.len() != b2.len() {
        return Err(Error::DimensionMismatch {
            left: b1.len(),
            right: b2.len(),
        });
    }
    let f1 = structure_constants(b1)?;
    let f2 = structure_constants(b2)?;
    let s = match rescale_ratio(&f1, &f2) {
        Some(s) => s,
        None => return Ok(None),
    };
    if s <= 0.0 {
        return Ok(None);
    }
    let n = f1.len();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if (f1.f[a][b][c] - f2.f[a][b][c] * s).norm() > tol {
                    return Ok(None);
                }
            }
        }
    }
    Ok(Some(s))
}

/// Least-squares real ratio s minimizing |f1 − s·f2|; None when f2 is all
/// zeros while f1 is not.
pub fn rescale_ratio(f1: &StructureConstants, f2: &StructureConstants) -> Option<f64> {
    let mut num = 0.0;
    let mut den = 0.0;
    for (x, y) in f1.f.iter().flatten().flatten().zip(f2.f.iter().flatten().flatten()) {
        num += (y.conj() * x).re;
        den += y.norm_sqr();
    }
    if den < 1e-30 {
        let f1_zero = f1.f.iter().flatten().flatten().all(|z| z.norm() < 1e-12);
        return if f1_zero { Some(1.0) } else { None };
    }
    Some(num / den)
}

/// Totally antisymmetric symbol on indices 1..=3.
pub fn levi_civita(i: usize, j: usize, k: usize) -> Result<i32, Error> {
    for &x in &[i, j, k] {
        if !(1..=3).contains(&x) {
            return Err(Error::IndexOutOfRange(x));
        }
    }
    Ok(match (i, j, k) {
        (1, 2, 3) | (2, 3, 1) | (3, 1, 2) => 1,
        (3, 2, 1) | (1, 3, 2) | (2, 1, 3) => -1,
        _ => 0,
    })
}

pub fn kronecker_delta(i: usize, j: usize) -> i32 {
    (i == j) as i32
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::so3su2::{pauli_basis, so3_rotation, so3_x_basis, Axis};

    fn so2_curve() -> ParamCurve {
        ParamCurve::new(2, 1, |alpha: &[f64]| {
            let (s, c) = alpha[0].sin_cos();
            ComplexMatrix::from_real_rows(&[vec![c, -s], vec![s, c]]).unwrap()
        })
    }

    #[test]
    fn so2_generator_extraction() {
        let (x, err) = extract_generator(&so2_curve(), 0, 1e-5).unwrap();
        let want =
            ComplexMatrix::from_rows(&[vec![Complex64::new(0.0, 0.0), I], vec![-I, Complex64::new(0.0, 0.0)]])
                .unwrap();
        assert!(x.approx_eq(&want, 1e-9), "err estimate {err:e}");
        assert!(err < 1e-8);
    }

    #[test]
    fn constant_identity_curve_has_zero_generator() {
        let curve = ParamCurve::new(3, 1, |_| ComplexMatrix::identity(3));
        let (x, _) = extract_generator(&curve, 0, 1e-5).unwrap();
        assert!(x.max_abs() < 1e-9);
    }

    #[test]
    fn quaternion_x_curve_gives_sigma_x() {
        // cosθ·1 + sinθ·I in the 2x2 quaternion image; generator is σ_x.
        let curve = ParamCurve::new(2, 1, |alpha: &[f64]| {
            let (s, c) = alpha[0].sin_cos();
            crate::so3su2::QUATERNION_ONE
                .matrix()
                .scale_re(c)
                .add(&crate::so3su2::QUATERNION_I.matrix().scale_re(s))
        });
        let (x, _) = extract_generator(&curve, 0, 1e-5).unwrap();
        let sigma_x = ComplexMatrix::from_real_rows(&[vec![0.0, 1.0], vec![1.0, 0.0]]).unwrap();
        assert!(x.approx_eq(&sigma_x, 1e-9));
    }

    #[test]
    fn non_identity_curve_rejected() {
        let curve = ParamCurve::new(2, 1, |_| ComplexMatrix::identity(2).scale_re(2.0));
        assert!(matches!(
            extract_generator(&curve, 0, 1e-5),
            Err(Error::CurveNotIdentity { .. })
        ));
    }

    #[test]
    fn analytic_derivative_preferred() {
        let curve = so2_curve().with_derivative(|_| {
            ComplexMatrix::from_real_rows(&[vec![0.0, -1.0], vec![1.0, 0.0]]).unwrap()
        });
        let (x, err) = extract_generator(&curve, 0, 1e-5).unwrap();
        assert_eq!(err, 0.0);
        let want =
            ComplexMatrix::from_rows(&[vec![Complex64::new(0.0, 0.0), I], vec![-I, Complex64::new(0.0, 0.0)]])
                .unwrap();
        assert!(x.approx_eq(&want, 1e-14));
    }

    #[test]
    fn exp_map_reproduces_so2_rotation() {
        let (x, _) = extract_generator(&so2_curve(), 0, 1e-5).unwrap();
        let basis = GeneratorBasis::new("so2", vec![x]).unwrap();
        for k in 0..20 {
            let theta = -3.0 + 0.3 * k as f64;
            let got = exp_map(&basis, &[theta]).unwrap();
            assert!(got.approx_eq(&so2_curve().at(&[theta]), 1e-8));
        }
        assert!(exp_map(&basis, &[0.0])
            .unwrap()
            .approx_eq(&ComplexMatrix::identity(2), 1e-14));
    }

    #[test]
    fn exp_map_abelian_additivity() {
        let (x, _) = extract_generator(&so2_curve(), 0, 1e-5).unwrap();
        let basis = GeneratorBasis::new("so2", vec![x]).unwrap();
        let a = exp_map(&basis, &[0.7]).unwrap();
        let b = exp_map(&basis, &[1.9]).unwrap();
        let ab = exp_map(&basis, &[2.6]).unwrap();
        assert!(a.mul(&b).approx_eq(&ab, 1e-10));
    }

    #[test]
    fn exp_map_hermitian_basis_unitary() {
        let basis = pauli_basis();
        let out = exp_map(&basis, &[0.3, -1.1, 2.4]).unwrap();
        assert!(crate::cmatrix::is_unitary(&out, 1e-10));
    }

    #[test]
    fn exp_map_length_mismatch() {
        let basis = pauli_basis();
        assert!(matches!(
            exp_map(&basis, &[1.0]),
            Err(Error::CoefficientLengthMismatch { got: 1, expected: 3 })
        ));
    }

    #[test]
    fn pauli_structure_constants_are_two_epsilon() {
        let f = structure_constants(&pauli_basis()).unwrap();
        assert!(f.max_residual < 1e-12);
        assert!(f.max_imag() < 1e-12);
        assert!(f.antisymmetry_defect() < 1e-12);
        for a in 0..3 {
            for b in 0..3 {
                for c in 0..3 {
                    let want = 2.0 * levi_civita(a + 1, b + 1, c + 1).unwrap() as f64;
                    assert!((f.f[a][b][c].re - want).abs() < 1e-10);
                }
            }
        }
    }

    #[test]
    fn abelian_basis_all_zero() {
        let basis = GeneratorBasis::new(
            "diag",
            vec![ComplexMatrix::diag(&[1.0, -1.0])],
        )
        .unwrap();
        let f = structure_constants(&basis).unwrap();
        assert!(f.f[0][0][0].norm() < 1e-14);
    }

    #[test]
    fn printed_so3_basis_constants_are_minus_epsilon() {
        // Exact commutator arithmetic on the 3x3 basis yields f = -eps,
        // not the factor 2 sometimes quoted for the 2x2 half-spin basis.
        let f = structure_constants(&so3_x_basis()).unwrap();
        for a in 0..3 {
            for b in 0..3 {
                for c in 0..3 {
                    let want = -(levi_civita(a + 1, b + 1, c + 1).unwrap() as f64);
                    assert!((f.f[a][b][c].re - want).abs() < 1e-10, "({a},{b},{c})");
                }
            }
        }
    }

    #[test]
    fn non_closed_basis_rejected() {
        // {σ_x, σ_y} alone: bracket gives σ_z, outside the span.
        let p = pauli_basis();
        let basis =
            GeneratorBasis::new("xy", vec![p.generators[0].clone(), p.generators[1].clone()])
                .unwrap();
        assert!(matches!(
            structure_constants(&basis),
            Err(Error::NotClosed { .. })
        ));
    }

    #[test]
    fn dependent_basis_rejected() {
        let p = pauli_basis();
        let res = GeneratorBasis::new(
            "dep",
            vec![
                p.generators[0].clone(),
                p.generators[0].scale_re(2.0),
            ],
        );
        assert!(matches!(res, Err(Error::DependentBasis)));
    }

    #[test]
    fn bracket_properties_hold() {
        let report = verify_bracket_properties(&pauli_basis(), 100, 7);
        assert!(report.worst() < 1e-12, "{report:?}");
        let single = GeneratorBasis::new(
            "one",
            vec![ComplexMatrix::from_real_rows(&[vec![1.0, 2.0], vec![3.0, 4.0]]).unwrap()],
        )
        .unwrap();
        let report = verify_bracket_properties(&single, 10, 1);
        assert_eq!(report.alternating, 0.0);
    }

    #[test]
    fn rescale_pauli_vs_itself_and_half() {
        let p = pauli_basis();
        let s = algebras_isomorphic_by_rescale(&p, &p, 1e-10).unwrap().unwrap();
        assert!((s - 1.0).abs() < 1e-10);
        // f({σ/2}) = eps, f({σ}) = 2 eps: ratio 1/2.
        let half = p.scaled(0.5);
        let s = algebras_isomorphic_by_rescale(&half, &p, 1e-10)
            .unwrap()
            .unwrap();
        assert!((s - 0.5).abs() < 1e-10);
    }

    #[test]
    fn rescale_pauli_vs_printed_so3_fails() {
        // Signed ratio is -2; no positive scalar matches.
        let res = algebras_isomorphic_by_rescale(&pauli_basis(), &so3_x_basis(), 1e-8).unwrap();
        assert!(res.is_none());
        let f1 = structure_constants(&pauli_basis()).unwrap();
        let f2 = structure_constants(&so3_x_basis()).unwrap();
        let raw = rescale_ratio(&f1, &f2).unwrap();
        assert!((raw + 2.0).abs() < 1e-10);
    }

    #[test]
    fn epsilon_and_delta_values() {
        assert_eq!(levi_civita(1, 2, 3).unwrap(), 1);
        assert_eq!(levi_civita(3, 2, 1).unwrap(), -1);
        assert_eq!(levi_civita(1, 1, 2).unwrap(), 0);
        assert!(levi_civita(0, 1, 2).is_err());
        assert!(levi_civita(1, 2, 4).is_err());
        assert_eq!(kronecker_delta(2, 2), 1);
        assert_eq!(kronecker_delta(1, 2), 0);
    }

    #[test]
    fn so3_curves_match_exp_of_extracted_generator() {
        for axis in [Axis::X, Axis::Y, Axis::Z] {
            let curve = ParamCurve::new(3, 1, move |alpha: &[f64]| so3_rotation(axis, alpha[0]));
            let (x, _) = extract_generator(&curve, 0, 1e-5).unwrap();
            let basis = GeneratorBasis::new("so3-axis", vec![x]).unwrap();
            for k in 0..20 {
                let theta = -3.0 + 0.31 * k as f64;
                let got = exp_map(&basis, &[theta]).unwrap();
                assert!(got.approx_eq(&so3_rotation(axis, theta), 1e-8));
            }
        }
    }

    #[test]
    fn basis_json_round_trip() {
        let p = pauli_basis();
        let text = serde_json::to_string(&serde_json::json!({
            "name": p.name,
            "generators": p.generators,
        }))
        .unwrap();
        let back = GeneratorBasis::from_json(&text).unwrap();
        assert_eq!(back.len(), 3);
        assert!(back.generators[0].approx_eq(&p.generators[0], 0.0));
    }
}
