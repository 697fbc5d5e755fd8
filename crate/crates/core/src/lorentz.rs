//! Spacetime symmetry machinery: the Minkowski metric, verification and
//! four-way classification of Lorentz transformations, rotation and boost
//! generators with their algebra, the N-plus/N-minus decomposition, the 2D
//! chiral representations with the parity action, and the 5x5 affine
//! realization of translations with the full commutator table.

use num_complex::Complex64;
use serde::Serialize;

use crate::cmatrix::{mat_exp, ComplexMatrix};
use crate::error::Error;
use crate::liecore::{levi_civita, GeneratorBasis};
use crate::so3su2::{pauli, Axis};

const I: Complex64 = Complex64::new(0.0, 1.0);

/// diag(-1, 1, 1, 1).
pub fn minkowski_metric() -> ComplexMatrix {
    ComplexMatrix::diag(&[-1.0, 1.0, 1.0, 1.0])
}

/// True iff L eta L^T = eta within tol.
pub fn verify_lorentz(l: &ComplexMatrix, tol: f64) -> bool {
    if l.dim() != 4 {
        return false;
    }
    let eta = minkowski_metric();
    l.mul(&eta).mul(&l.transpose()).max_abs_diff(&eta) <= tol
}

/// The four connected components, keyed by (sign det, sign of the
/// time-time entry).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LorentzClassification {
    pub det_sign: i32,
    pub time_sign: i32,
    /// 1: det +1, time +; 2: det -1, time +; 3: det +1, time -;
    /// 4: det -1, time -.
    pub category: u8,
}

/// Classifies a verified Lorentz matrix; errors when the time-time entry
/// has magnitude below 1, which no metric-preserving matrix allows.
pub fn classify(l: &ComplexMatrix, tol: f64) -> Result<LorentzClassification, Error> {
    if !verify_lorentz(l, tol) {
        let eta = minkowski_metric();
        let dev = l.mul(&eta).mul(&l.transpose()).max_abs_diff(&eta);
        return Err(Error::NotLorentz { deviation: dev });
    }
    let l00 = l[(0, 0)].re;
    if l00.abs() < 1.0 - tol.max(1e-9) {
        return Err(Error::InvalidTimeComponent { value: l00 });
    }
    let det_sign = if l.det().re >= 0.0 { 1 } else { -1 };
    let time_sign = if l00 >= 0.0 { 1 } else { -1 };
    let category = match (det_sign > 0, time_sign > 0) {
        (true, true) => 1,
        (false, true) => 2,
        (true, false) => 3,
        (false, false) => 4,
    };
    Ok(LorentzClassification {
        det_sign,
        time_sign,
        category,
    })
}

/// Spatial inversion diag(1, -1, -1, -1).
pub fn parity_inversion() -> ComplexMatrix {
    ComplexMatrix::diag(&[1.0, -1.0, -1.0, -1.0])
}

/// Time reversal diag(-1, 1, 1, 1).
pub fn time_reversal() -> ComplexMatrix {
    ComplexMatrix::diag(&[-1.0, 1.0, 1.0, 1.0])
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GeneratorKind {
    Rotation,
    Boost,
}

/// 4x4 generators in the convention L = exp(i theta X). Rotations embed
/// the standard spin-1 angular momentum matrices in the spatial block
/// (satisfying [J_i, J_j] = i eps_ijk J_k); boosts put the symmetric
/// i-pattern in the time-space slots.
pub fn lorentz_generator(kind: GeneratorKind, axis: Axis) -> ComplexMatrix {
    let mut m = ComplexMatrix::zeros(4);
    match kind {
        GeneratorKind::Rotation => {
            // Spatial block (rows/cols 1..=3): J_x = [[0,0,0],[0,0,-i],[0,i,0]] etc.
            let (a, b) = match axis {
                Axis::X => (2, 3),
                Axis::Y => (3, 1),
                Axis::Z => (1, 2),
            };
            m[(a, b)] = -I;
            m[(b, a)] = I;
        }
        GeneratorKind::Boost => {
            let i = match axis {
                Axis::X => 1,
                Axis::Y => 2,
                Axis::Z => 3,
            };
            m[(0, i)] = I;
            m[(i, 0)] = I;
        }
    }
    m
}

pub fn rotation_generators() -> Vec<ComplexMatrix> {
    [Axis::X, Axis::Y, Axis::Z]
        .map(|a| lorentz_generator(GeneratorKind::Rotation, a))
        .to_vec()
}

pub fn boost_generators() -> Vec<ComplexMatrix> {
    [Axis::X, Axis::Y, Axis::Z]
        .map(|a| lorentz_generator(GeneratorKind::Boost, a))
        .to_vec()
}

/// All six generators {J_x, J_y, J_z, K_x, K_y, K_z} as one basis.
pub fn lorentz_basis() -> GeneratorBasis {
    let mut gens = rotation_generators();
    gens.extend(boost_generators());
    GeneratorBasis::new("lorentz", gens).expect("six generators are independent")
}

/// exp(i theta K_axis): a pure boost with cosh/-sinh time-space mixing.
pub fn boost(axis: Axis, theta: f64) -> ComplexMatrix {
    mat_exp(&lorentz_generator(GeneratorKind::Boost, axis).scale(I * theta))
}

/// 4D spatial rotation exp(i theta J_axis).
pub fn spacetime_rotation(axis: Axis, theta: f64) -> ComplexMatrix {
    mat_exp(&lorentz_generator(GeneratorKind::Rotation, axis).scale(I * theta))
}

/// The coordinate velocity dx/dt of the boosted time axis: for a boost by
/// theta along x, (1,0,0,0) goes to (cosh, -sinh, 0, 0) and the ratio is
/// -tanh(theta).
pub fn boost_coordinate_velocity(theta: f64) -> f64 {
    let v = boost(Axis::X, theta).mul_vec(&[
        Complex64::new(1.0, 0.0),
        Complex64::new(0.0, 0.0),
        Complex64::new(0.0, 0.0),
        Complex64::new(0.0, 0.0),
    ]);
    v[1].re / v[0].re
}

/// Residuals of the pairwise commutator relations among {J, K}:
/// [J_i, J_j] = i eps J_k, [J_i, K_j] = i eps K_k, [K_i, K_j] = -i eps J_k.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct AlgebraResiduals {
    pub jj: f64,
    pub jk: f64,
    pub kk: f64,
}

impl AlgebraResiduals {
    pub fn worst(&self) -> f64 {
        self.jj.max(self.jk).max(self.kk)
    }
}

fn algebra_residuals_of(j: &[ComplexMatrix], k: &[ComplexMatrix]) -> AlgebraResiduals {
    let mut res = AlgebraResiduals {
        jj: 0.0,
        jk: 0.0,
        kk: 0.0,
    };
    let dim = j[0].dim();
    for a in 0..3 {
        for b in 0..3 {
            let mut want_j = ComplexMatrix::zeros(dim);
            let mut want_k = ComplexMatrix::zeros(dim);
            for c in 0..3 {
                let eps = levi_civita(a + 1, b + 1, c + 1).unwrap() as f64;
                if eps != 0.0 {
                    want_j = want_j.add(&j[c].scale(I * eps));
                    want_k = want_k.add(&k[c].scale(I * eps));
                }
            }
            res.jj = res.jj.max(j[a].commutator(&j[b]).max_abs_diff(&want_j));
            res.jk = res.jk.max(j[a].commutator(&k[b]).max_abs_diff(&want_k));
            res.kk = res
                .kk
                .max(k[a].commutator(&k[b]).max_abs_diff(&want_j.scale_re(-1.0)));
        }
    }
    res
}

/// Commutator residuals for the 4D generators.
pub fn lorentz_algebra_report() -> AlgebraResiduals {
    algebra_residuals_of(&rotation_generators(), &boost_generators())
}

/// Residuals of the decoupling N+- = J +- iK: both families satisfy
/// [N_a, N_b] = 2i eps N_c within themselves and commute across.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct NDecompositionResiduals {
    pub plus_plus: f64,
    pub minus_minus: f64,
    pub cross: f64,
}

impl NDecompositionResiduals {
    pub fn worst(&self) -> f64 {
        self.plus_plus.max(self.minus_minus).max(self.cross)
    }
}

pub fn n_plus() -> Vec<ComplexMatrix> {
    rotation_generators()
        .iter()
        .zip(&boost_generators())
        .map(|(j, k)| j.add(&k.scale(I)))
        .collect()
}

pub fn n_minus() -> Vec<ComplexMatrix> {
    rotation_generators()
        .iter()
        .zip(&boost_generators())
        .map(|(j, k)| j.sub(&k.scale(I)))
        .collect()
}

pub fn n_decomposition() -> NDecompositionResiduals {
    let np = n_plus();
    let nm = n_minus();
    let mut res = NDecompositionResiduals {
        plus_plus: 0.0,
        minus_minus: 0.0,
        cross: 0.0,
    };
    for a in 0..3 {
        for b in 0..3 {
            let mut want_p = ComplexMatrix::zeros(4);
            let mut want_m = ComplexMatrix::zeros(4);
            for c in 0..3 {
                let eps = levi_civita(a + 1, b + 1, c + 1).unwrap() as f64;
                if eps != 0.0 {
                    want_p = want_p.add(&np[c].scale(I * 2.0 * eps));
                    want_m = want_m.add(&nm[c].scale(I * 2.0 * eps));
                }
            }
            res.plus_plus = res
                .plus_plus
                .max(np[a].commutator(&np[b]).max_abs_diff(&want_p));
            res.minus_minus = res
                .minus_minus
                .max(nm[a].commutator(&nm[b]).max_abs_diff(&want_m));
            res.cross = res.cross.max(nm[a].commutator(&np[b]).max_abs());
        }
    }
    res
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Handedness {
    Left,
    Right,
}

/// A 2D representation of the Lorentz algebra: J = sigma/2 and
/// K = -i sigma/2 (left) or K = +i sigma/2 (right).
#[derive(Debug, Clone)]
pub struct ChiralRep {
    pub handedness: Handedness,
    pub j: Vec<ComplexMatrix>,
    pub k: Vec<ComplexMatrix>,
}

pub fn chiral_rep(handedness: Handedness) -> ChiralRep {
    let sign = match handedness {
        Handedness::Left => -1.0,
        Handedness::Right => 1.0,
    };
    let axes = [Axis::X, Axis::Y, Axis::Z];
    ChiralRep {
        handedness,
        j: axes.map(|a| pauli(a).scale_re(0.5)).to_vec(),
        k: axes.map(|a| pauli(a).scale(I * (0.5 * sign))).to_vec(),
    }
}

impl ChiralRep {
    /// The vanishing combination: N-minus for left, N-plus for right.
    pub fn vanishing_combination_max(&self) -> f64 {
        let sign = match self.handedness {
            Handedness::Left => -1.0,
            Handedness::Right => 1.0,
        };
        self.j
            .iter()
            .zip(&self.k)
            .map(|(j, k)| j.add(&k.scale(I * sign)).max_abs())
            .fold(0.0, f64::max)
    }

    pub fn algebra_residuals(&self) -> AlgebraResiduals {
        algebra_residuals_of(&self.j, &self.k)
    }
}

/// Parity keeps J and negates K, which swaps handedness — mirroring the 4D
/// identity T_p J T_p^T = J, T_p K T_p^T = -K.
pub fn parity_flip(rep: &ChiralRep) -> ChiralRep {
    ChiralRep {
        handedness: match rep.handedness {
            Handedness::Left => Handedness::Right,
            Handedness::Right => Handedness::Left,
        },
        j: rep.j.clone(),
        k: rep.k.iter().map(|k| k.scale_re(-1.0)).collect(),
    }
}

/// The 5x5 affine representation: Lorentz generators in the upper 4x4
/// block, translation generators in the last column. exp(i a P_mu)
/// translates the corresponding coordinate by a.
#[derive(Debug, Clone)]
pub struct PoincareAffineRep {
    pub j: Vec<ComplexMatrix>,
    pub k: Vec<ComplexMatrix>,
    /// P_x, P_y, P_z.
    pub p_spatial: Vec<ComplexMatrix>,
    pub p_t: ComplexMatrix,
}

pub fn poincare_affine() -> PoincareAffineRep {
    let lift = |m4: &ComplexMatrix| {
        let mut m = ComplexMatrix::zeros(5);
        for r in 0..4 {
            for c in 0..4 {
                m[(r, c)] = m4[(r, c)];
            }
        }
        m
    };
    let j = rotation_generators().iter().map(&lift).collect();
    let k = boost_generators().iter().map(&lift).collect();
    let p_spatial = (1..4)
        .map(|i| {
            let mut m = ComplexMatrix::zeros(5);
            m[(i, 4)] = -I;
            m
        })
        .collect();
    let mut p_t = ComplexMatrix::zeros(5);
    p_t[(0, 4)] = I;
    PoincareAffineRep {
        j,
        k,
        p_spatial,
        p_t,
    }
}

/// Residuals of the translation commutators in the affine representation.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct PoincareResiduals {
    /// [J_i, P_j] = i eps_ijk P_k
    pub jp: f64,
    /// [J_i, P_t] = 0
    pub jpt: f64,
    /// [K_i, P_j] = -i delta_ij P_t
    pub kp: f64,
    /// [K_i, P_t] = -i P_i
    pub kpt: f64,
    /// [P_mu, P_nu] = 0
    pub pp: f64,
    /// Residual of the verbatim reading "[J_i, K_j] = i delta_ij P_t",
    /// which the oracle refutes: reported, not asserted.
    pub verbatim_jk_pt: f64,
}

impl PoincareResiduals {
    pub fn worst_expected(&self) -> f64 {
        self.jp.max(self.jpt).max(self.kp).max(self.kpt).max(self.pp)
    }
}

pub fn poincare_commutators() -> PoincareResiduals {
    let rep = poincare_affine();
    let mut res = PoincareResiduals {
        jp: 0.0,
        jpt: 0.0,
        kp: 0.0,
        kpt: 0.0,
        pp: 0.0,
        verbatim_jk_pt: 0.0,
    };
    for a in 0..3 {
        for b in 0..3 {
            let mut want = ComplexMatrix::zeros(5);
            for c in 0..3 {
                let eps = levi_civita(a + 1, b + 1, c + 1).unwrap() as f64;
                if eps != 0.0 {
                    want = want.add(&rep.p_spatial[c].scale(I * eps));
                }
            }
            res.jp = res
                .jp
                .max(rep.j[a].commutator(&rep.p_spatial[b]).max_abs_diff(&want));
            let delta = if a == b { 1.0 } else { 0.0 };
            res.kp = res.kp.max(
                rep.k[a]
                    .commutator(&rep.p_spatial[b])
                    .max_abs_diff(&rep.p_t.scale(-I * delta)),
            );
            res.verbatim_jk_pt = res.verbatim_jk_pt.max(
                rep.j[a]
                    .commutator(&rep.k[b])
                    .max_abs_diff(&rep.p_t.scale(I * delta)),
            );
        }
        res.jpt = res.jpt.max(rep.j[a].commutator(&rep.p_t).max_abs());
        res.kpt = res.kpt.max(
            rep.k[a]
                .commutator(&rep.p_t)
                .max_abs_diff(&rep.p_spatial[a].scale(-I)),
        );
    }
    let all_p: Vec<&ComplexMatrix> = rep
        .p_spatial
        .iter()
        .chain(std::iter::once(&rep.p_t))
        .collect();
    for a in &all_p {
        for b in &all_p {
            res.pp = res.pp.max(a.commutator(b).max_abs());
        }
    }
    res
}
