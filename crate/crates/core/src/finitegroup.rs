//! Finite groups as Cayley tables: axiom verification, representation
//! checks, regular representations, equivalence testing, and the
//! constructive unitarization of an arbitrary finite-group representation.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::cmatrix::{
    eig_hermitian, is_unitary, pd_inv_sqrt, psd_sqrt, ComplexMatrix, DEFAULT_TOL,
};
use crate::error::{AxiomViolation, Error};

/// A finite group given by its element labels and full multiplication table,
/// `table[a][b] = index of f(a, b)`. Construct through
/// [`verify_group_axioms`], which checks every axiom exhaustively.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FiniteGroup {
    pub elements: Vec<String>,
    pub table: Vec<Vec<usize>>,
    #[serde(skip, default)]
    pub identity_index: usize,
}

impl FiniteGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn compose(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        (0..self.order())
            .find(|&b| self.compose(a, b) == self.identity_index)
            .expect("validated group has inverses")
    }
}

/// Validates the four group axioms over the full table and returns the
/// group, or the first violated axiom with a witness.
pub fn verify_group_axioms(elements: &[String], table: &[Vec<usize>]) -> Result<FiniteGroup, Error> {
    let n = elements.len();
    if table.len() != n {
        return Err(Error::NotSquare {
            rows: n,
            cols: table.len(),
        });
    }
    for (i, row) in table.iter().enumerate() {
        if row.len() != n {
            return Err(Error::NotSquare {
                rows: n,
                cols: row.len(),
            });
        }
        for (j, &v) in row.iter().enumerate() {
            if v >= n {
                return Err(AxiomViolation::Closure { a: i, b: j, value: v }.into());
            }
        }
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if table[table[a][b]][c] != table[a][table[b][c]] {
                    return Err(AxiomViolation::Associativity { a, b, c }.into());
                }
            }
        }
    }
    let identity_index = (0..n)
        .find(|&e| (0..n).all(|a| table[e][a] == a && table[a][e] == a))
        .ok_or(AxiomViolation::NoIdentity)?;
    for a in 0..n {
        let has_inverse = (0..n)
            .any(|b| table[a][b] == identity_index && table[b][a] == identity_index);
        if !has_inverse {
            return Err(AxiomViolation::NoInverse { element: a }.into());
        }
    }
    Ok(FiniteGroup {
        elements: elements.to_vec(),
        table: table.to_vec(),
        identity_index,
    })
}

/// A map from group elements to invertible matrices, one image per element
/// in element order.
#[derive(Debug, Clone)]
pub struct Representation {
    pub group: FiniteGroup,
    pub images: Vec<ComplexMatrix>,
}

impl Representation {
    pub fn new(group: FiniteGroup, images: Vec<ComplexMatrix>) -> Result<Self, Error> {
        if images.len() != group.order() {
            return Err(Error::ImageCountMismatch {
                images: images.len(),
                order: group.order(),
            });
        }
        let dim = images[0].dim();
        for img in &images {
            if img.dim() != dim {
                return Err(Error::DimensionMismatch {
                    left: dim,
                    right: img.dim(),
                });
            }
        }
        for (i, img) in images.iter().enumerate() {
            if img.det().norm() < 1e-12 {
                return Err(Error::SingularImage { index: i });
            }
        }
        Ok(Representation { group, images })
    }

    pub fn dim(&self) -> usize {
        self.images[0].dim()
    }

    pub fn image(&self, element: usize) -> &ComplexMatrix {
        &self.images[element]
    }

    /// Conjugates every image by S: g -> S^{-1} D(g) S.
    pub fn conjugate(&self, s: &ComplexMatrix) -> Result<Self, Error> {
        let s_inv = s.inverse()?;
        let images = self
            .images
            .iter()
            .map(|d| s_inv.mul(d).mul(s))
            .collect();
        Representation::new(self.group.clone(), images)
    }
}

/// Witness for a failed homomorphism check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HomomorphismFailure {
    pub a: usize,
    pub b: usize,
}

/// Checks the identity condition and the homomorphism property
/// D(a)D(b) = D(f(a,b)) over all pairs. Returns the first failing pair.
pub fn verify_representation(rep: &Representation, tol: f64) -> Result<(), HomomorphismFailure> {
    let n = rep.group.order();
    let e = rep.group.identity_index;
    if !rep
        .image(e)
        .approx_eq(&ComplexMatrix::identity(rep.dim()), tol)
    {
        return Err(HomomorphismFailure { a: e, b: e });
    }
    for a in 0..n {
        for b in 0..n {
            let lhs = rep.image(a).mul(rep.image(b));
            let rhs = rep.image(rep.group.compose(a, b));
            if lhs.max_abs_diff(rhs) > tol {
                return Err(HomomorphismFailure { a, b });
            }
        }
    }
    Ok(())
}

pub fn is_representation(rep: &Representation, tol: f64) -> bool {
    verify_representation(rep, tol).is_ok()
}

/// Regular representation: |G|-dimensional 0/1 permutation matrices with
/// k(R) b_j = basis vector of f(R, element_j); element order in the group
/// fixes the basis order.
pub fn build_regular_representation(group: &FiniteGroup) -> Representation {
    let n = group.order();
    let images = (0..n)
        .map(|r| {
            let mut m = ComplexMatrix::zeros(n);
            for j in 0..n {
                m[(group.compose(r, j), j)] = Complex64::new(1.0, 0.0);
            }
            m
        })
        .collect();
    Representation {
        group: group.clone(),
        images,
    }
}

/// Result of the averaging construction that makes a representation unitary.
#[derive(Debug, Clone)]
pub struct UnitarizationResult {
    /// S = sum over g of D(g)† D(g); Hermitian positive definite.
    pub s: ComplexMatrix,
    pub s_half: ComplexMatrix,
    /// D'(g) = S^{1/2} D(g) S^{-1/2}; every image unitary.
    pub unitarized: Representation,
}

/// Conjugates by the positive square root of the group average S so that
/// every image becomes unitary. Fails only on corrupted input where S is
/// numerically singular.
pub fn unitarize(rep: &Representation) -> Result<UnitarizationResult, Error> {
    let dim = rep.dim();
    let mut s = ComplexMatrix::zeros(dim);
    for d in &rep.images {
        s = s.add(&d.adjoint().mul(d));
    }
    let s_half = psd_sqrt(&s)?;
    let s_half_inv = pd_inv_sqrt(&s, DEFAULT_TOL)?;
    let images = rep
        .images
        .iter()
        .map(|d| s_half.mul(d).mul(&s_half_inv))
        .collect();
    Ok(UnitarizationResult {
        s,
        s_half,
        unitarized: Representation {
            group: rep.group.clone(),
            images,
        },
    })
}

/// Searches for an invertible intertwiner S with
/// rep2(g) = S^{-1} rep1(g) S for all g, via the nullspace of the stacked
/// commutation constraints. Returns None when no invertible intertwiner
/// exists within tolerance.
pub fn are_equivalent(
    rep1: &Representation,
    rep2: &Representation,
    tol: f64,
) -> Result<Option<ComplexMatrix>, Error> {
    let d = rep1.dim();
    if d != rep2.dim() {
        return Err(Error::DimensionMismatch {
            left: d,
            right: rep2.dim(),
        });
    }
    // vec(D1 S - S D2) = (I (x) D1 - D2^T (x) I) vec(S), column-major vec.
    // Accumulate the normal matrix of all constraints; its near-null space
    // spans the intertwiners.
    let eye = ComplexMatrix::identity(d);
    let mut normal = ComplexMatrix::zeros(d * d);
    for (d1, d2) in rep1.images.iter().zip(&rep2.images) {
        let k = eye.kron(d1).sub(&d2.transpose().kron(&eye));
        normal = normal.add(&k.adjoint().mul(&k));
    }
    let eig = eig_hermitian(&normal)?;
    let scale = eig.eigenvalues.last().copied().unwrap_or(1.0).max(1.0);
    let null_cols: Vec<usize> = (0..d * d)
        .filter(|&i| eig.eigenvalues[i].abs() <= tol * scale)
        .collect();
    if null_cols.is_empty() {
        return Ok(None);
    }

    let unvec = |v: &[Complex64]| {
        let mut s = ComplexMatrix::zeros(d);
        for col in 0..d {
            for row in 0..d {
                s[(row, col)] = v[col * d + row];
            }
        }
        s
    };
    let check = |s: &ComplexMatrix| -> bool {
        if s.det().norm() < 1e-8 {
            return false;
        }
        let s_inv = match s.inverse() {
            Ok(inv) => inv,
            Err(_) => return false,
        };
        rep1.images
            .iter()
            .zip(&rep2.images)
            .all(|(d1, d2)| s_inv.mul(d1).mul(s).max_abs_diff(d2) <= tol.max(1e-8))
    };

    // Single null vectors first, then deterministic combinations.
    let mut candidates: Vec<ComplexMatrix> = Vec::new();
    for &col in &null_cols {
        let v: Vec<Complex64> = (0..d * d).map(|i| eig.eigenvectors[(i, col)]).collect();
        candidates.push(unvec(&v));
    }
    let mut rng = crate::random::rng(0x5eed);
    for _ in 0..16 {
        let mut v = vec![Complex64::new(0.0, 0.0); d * d];
        for &col in &null_cols {
            let w = Complex64::new(
                crate::random::uniform(&mut rng, -1.0, 1.0),
                crate::random::uniform(&mut rng, -1.0, 1.0),
            );
            for i in 0..d * d {
                v[i] += w * eig.eigenvectors[(i, col)];
            }
        }
        candidates.push(unvec(&v));
    }
    Ok(candidates.into_iter().find(check))
}

/// Rotation group of the square: {R_0, R_90, R_180, R_270} under
/// composition.
pub fn c4() -> FiniteGroup {
    let elements = ["R_0", "R_90", "R_180", "R_270"]
        .map(String::from)
        .to_vec();
    let table = (0..4)
        .map(|a| (0..4).map(|b| (a + b) % 4).collect())
        .collect::<Vec<Vec<usize>>>();
    verify_group_axioms(&elements, &table).expect("cyclic table is a group")
}

/// The 2D rotation images of the square-symmetry group.
pub fn c4_planar_representation() -> Representation {
    let rot = |c: f64, s: f64| {
        ComplexMatrix::from_real_rows(&[vec![c, -s], vec![s, c]]).unwrap()
    };
    Representation::new(
        c4(),
        vec![
            rot(1.0, 0.0),
            rot(0.0, 1.0),
            rot(-1.0, 0.0),
            rot(0.0, -1.0),
        ],
    )
    .expect("rotation images are invertible")
}

/// Parity group {1, P} with P^2 = 1.
pub fn parity_group() -> FiniteGroup {
    let elements = ["1", "P"].map(String::from).to_vec();
    let table = vec![vec![0, 1], vec![1, 0]];
    verify_group_axioms(&elements, &table).expect("parity table is a group")
}

/// Symmetric group S3, the smallest non-abelian group. Elements are the six
/// permutations of three letters, composed left-to-right.
pub fn s3() -> FiniteGroup {
    let perms: [[usize; 3]; 6] = [
        [0, 1, 2],
        [1, 0, 2],
        [0, 2, 1],
        [2, 1, 0],
        [1, 2, 0],
        [2, 0, 1],
    ];
    let labels = ["e", "(12)", "(23)", "(13)", "(123)", "(132)"]
        .map(String::from)
        .to_vec();
    let compose = |p: &[usize; 3], q: &[usize; 3]| -> [usize; 3] {
        [q[p[0]], q[p[1]], q[p[2]]]
    };
    let table: Vec<Vec<usize>> = perms
        .iter()
        .map(|p| {
            perms
                .iter()
                .map(|q| {
                    let r = compose(p, q);
                    perms.iter().position(|x| *x == r).unwrap()
                })
                .collect()
        })
        .collect();
    verify_group_axioms(&labels, &table).expect("permutation table is a group")
}

/// Max deviation from unitarity over all images.
pub fn max_unitarity_defect(rep: &Representation) -> f64 {
    rep.images
        .iter()
        .map(|m| {
            m.mul(&m.adjoint())
                .max_abs_diff(&ComplexMatrix::identity(m.dim()))
        })
        .fold(0.0, f64::max)
}

pub fn all_images_unitary(rep: &Representation, tol: f64) -> bool {
    rep.images.iter().all(|m| is_unitary(m, tol))
}

/// Parses the group file format {"elements": [...], "table": [[...]]} and
/// validates the axioms.
pub fn group_from_json(text: &str) -> Result<FiniteGroup, Error> {
    #[derive(Deserialize)]
    struct Wire {
        elements: Vec<String>,
        table: Vec<Vec<usize>>,
    }
    let wire: Wire = serde_json::from_str(text)?;
    verify_group_axioms(&wire.elements, &wire.table)
}
