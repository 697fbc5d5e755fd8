//! Rotations in two and three dimensions, Pauli matrices, quaternions with
//! their 2x2 complex matrix image, the double-cover conjugation map from
//! unit quaternions to rotations, and the isospin doublet with ladder
//! operators.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::cmatrix::ComplexMatrix;
use crate::error::Error;
use crate::liecore::GeneratorBasis;

const I: Complex64 = Complex64::new(0.0, 1.0);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Axis {
    X,
    Y,
    Z,
}

/// 2D rotation by theta.
pub fn so2_rotation(theta: f64) -> ComplexMatrix {
    let (s, c) = theta.sin_cos();
    ComplexMatrix::from_real_rows(&[vec![c, -s], vec![s, c]]).unwrap()
}

/// 3D rotation by theta about a coordinate axis.
pub fn so3_rotation(axis: Axis, theta: f64) -> ComplexMatrix {
    let (s, c) = theta.sin_cos();
    let rows = match axis {
        Axis::X => [
            vec![1.0, 0.0, 0.0],
            vec![0.0, c, -s],
            vec![0.0, s, c],
        ],
        Axis::Y => [
            vec![c, 0.0, s],
            vec![0.0, 1.0, 0.0],
            vec![-s, 0.0, c],
        ],
        Axis::Z => [
            vec![c, -s, 0.0],
            vec![s, c, 0.0],
            vec![0.0, 0.0, 1.0],
        ],
    };
    ComplexMatrix::from_real_rows(&rows).unwrap()
}

/// The 3x3 generator X = -i dR/dtheta at 0 for the axis rotations, in the
/// convention R(theta) = exp(i theta X).
pub fn so3_generator(axis: Axis) -> ComplexMatrix {
    let z = Complex64::new(0.0, 0.0);
    let rows = match axis {
        Axis::X => [vec![z, z, z], vec![z, z, I], vec![z, -I, z]],
        Axis::Y => [vec![z, z, -I], vec![z, z, z], vec![I, z, z]],
        Axis::Z => [vec![z, I, z], vec![-I, z, z], vec![z, z, z]],
    };
    ComplexMatrix::from_rows(&rows).unwrap()
}

pub fn so3_x_basis() -> GeneratorBasis {
    GeneratorBasis::new(
        "so3",
        vec![
            so3_generator(Axis::X),
            so3_generator(Axis::Y),
            so3_generator(Axis::Z),
        ],
    )
    .expect("axis generators are independent")
}

pub fn pauli(axis: Axis) -> ComplexMatrix {
    let z = Complex64::new(0.0, 0.0);
    let one = Complex64::new(1.0, 0.0);
    let rows = match axis {
        Axis::X => [vec![z, one], vec![one, z]],
        Axis::Y => [vec![z, -I], vec![I, z]],
        Axis::Z => [vec![one, z], vec![z, -one]],
    };
    ComplexMatrix::from_rows(&rows).unwrap()
}

pub fn pauli_basis() -> GeneratorBasis {
    GeneratorBasis::new(
        "pauli",
        vec![pauli(Axis::X), pauli(Axis::Y), pauli(Axis::Z)],
    )
    .expect("pauli matrices are independent")
}

/// Half-Pauli spin basis {sigma_i / 2}; eigenvalues +-1/2.
pub fn spin_half_basis() -> GeneratorBasis {
    pauli_basis().scaled(0.5)
}

/// 2x2 real-matrix image of the complex unit (rotation by pi/2).
pub fn u1_imaginary_unit() -> ComplexMatrix {
    ComplexMatrix::from_real_rows(&[vec![0.0, -1.0], vec![1.0, 0.0]]).unwrap()
}

/// Image of e^{i theta} = cos theta + i sin theta under the 2x2 embedding
/// of complex numbers; equals the 2D rotation matrix.
pub fn u1_image(theta: f64) -> ComplexMatrix {
    ComplexMatrix::identity(2)
        .scale_re(theta.cos())
        .add(&u1_imaginary_unit().scale_re(theta.sin()))
}

/// A quaternion a + bI + cJ + dK over the 2x2 matrix basis
/// I = [[0,i],[i,0]], J = [[0,1],[-1,0]], K = [[i,0],[0,-i]].
/// With this basis the products run I*J = -K, J*K = -I, K*I = -J (the
/// matrix images fix the orientation; I^2 = J^2 = K^2 = -1 still holds).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Quaternion {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
}

pub const QUATERNION_ONE: Quaternion = Quaternion { a: 1.0, b: 0.0, c: 0.0, d: 0.0 };
pub const QUATERNION_I: Quaternion = Quaternion { a: 0.0, b: 1.0, c: 0.0, d: 0.0 };
pub const QUATERNION_J: Quaternion = Quaternion { a: 0.0, b: 0.0, c: 1.0, d: 0.0 };
pub const QUATERNION_K: Quaternion = Quaternion { a: 0.0, b: 0.0, c: 0.0, d: 1.0 };

impl Quaternion {
    pub fn new(a: f64, b: f64, c: f64, d: f64) -> Self {
        Quaternion { a, b, c, d }
    }

    pub fn norm(&self) -> f64 {
        (self.a * self.a + self.b * self.b + self.c * self.c + self.d * self.d).sqrt()
    }

    pub fn neg(&self) -> Self {
        Quaternion::new(-self.a, -self.b, -self.c, -self.d)
    }

    /// The 2x2 complex matrix image a*1 + b*I + c*J + d*K.
    pub fn matrix(&self) -> ComplexMatrix {
        ComplexMatrix::from_rows(&[
            vec![
                Complex64::new(self.a, self.d),
                Complex64::new(self.c, self.b),
            ],
            vec![
                Complex64::new(-self.c, self.b),
                Complex64::new(self.a, -self.d),
            ],
        ])
        .unwrap()
    }

    pub fn approx_eq(&self, other: &Quaternion, tol: f64) -> bool {
        (self.a - other.a).abs() <= tol
            && (self.b - other.b).abs() <= tol
            && (self.c - other.c).abs() <= tol
            && (self.d - other.d).abs() <= tol
    }
}

/// Product consistent with the 2x2 matrix images (I*J = -K orientation).
pub fn quat_mul(p: &Quaternion, q: &Quaternion) -> Quaternion {
    Quaternion {
        a: p.a * q.a - p.b * q.b - p.c * q.c - p.d * q.d,
        b: p.a * q.b + p.b * q.a - p.c * q.d + p.d * q.c,
        c: p.a * q.c + p.c * q.a + p.b * q.d - p.d * q.b,
        d: p.a * q.d + p.d * q.a - p.b * q.c + p.c * q.b,
    }
}

/// Negates the three imaginary coefficients; matrix image is the adjoint.
pub fn quat_conj(q: &Quaternion) -> Quaternion {
    Quaternion::new(q.a, -q.b, -q.c, -q.d)
}

/// xI + yJ + zK as a pure-imaginary quaternion.
pub fn embed_vector(x: f64, y: f64, z: f64) -> Quaternion {
    Quaternion::new(0.0, x, y, z)
}

/// Reads back (x, y, z); errors when the real part is not negligible.
pub fn extract_vector(q: &Quaternion) -> Result<[f64; 3], Error> {
    let scale = q.norm().max(1.0);
    if q.a.abs() > 1e-10 * scale {
        return Err(Error::NonPureQuaternion { real: q.a });
    }
    Ok([q.b, q.c, q.d])
}

/// Rotates a 3-vector by conjugating its quaternion embedding with the
/// unit quaternion t: m' = conj(t) * m * t. With this module's basis
/// orientation that ordering realizes the right-handed rotation whose
/// matrix form is [`so3_rotation`].
pub fn rotate_by_conjugation(t: &Quaternion, v: [f64; 3]) -> Result<[f64; 3], Error> {
    let n = t.norm();
    if (n - 1.0).abs() > 1e-10 {
        return Err(Error::NonUnitQuaternion { norm: n });
    }
    let m = embed_vector(v[0], v[1], v[2]);
    let rotated = quat_mul(&quat_mul(&quat_conj(t), &m), t);
    extract_vector(&rotated)
}

/// The 3x3 rotation realized by conjugation with t (columns are the images
/// of the basis vectors).
pub fn rotation_matrix_of(t: &Quaternion) -> Result<ComplexMatrix, Error> {
    let mut m = ComplexMatrix::zeros(3);
    for (col, v) in [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]]
        .into_iter()
        .enumerate()
    {
        let image = rotate_by_conjugation(t, v)?;
        for row in 0..3 {
            m[(row, col)] = Complex64::new(image[row], 0.0);
        }
    }
    Ok(m)
}

/// Unit quaternion cos(theta/2) + sin(theta/2) * (x I + y J + z K) whose
/// conjugation action rotates by theta about the given unit axis
/// (half-angle convention: conjugation doubles the quaternion angle).
pub fn su2_from_axis_angle(axis: [f64; 3], theta: f64) -> Result<Quaternion, Error> {
    let n = (axis[0] * axis[0] + axis[1] * axis[1] + axis[2] * axis[2]).sqrt();
    if (n - 1.0).abs() > 1e-10 {
        return Err(Error::NonUnitAxis { norm: n });
    }
    let (s, c) = (theta / 2.0).sin_cos();
    Ok(Quaternion::new(c, s * axis[0], s * axis[1], s * axis[2]))
}

/// The full-angle form cos(theta) + sin(theta) * u, exposed verbatim; its
/// conjugation action rotates by 2*theta, which is testable against
/// [`su2_from_axis_angle`].
pub fn full_angle_quaternion(axis: [f64; 3], theta: f64) -> Result<Quaternion, Error> {
    su2_from_axis_angle(axis, 2.0 * theta)
}

/// A two-component complex state in the doublet.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IsospinState {
    pub components: [Complex64; 2],
}

impl IsospinState {
    pub fn norm(&self) -> f64 {
        (self.components[0].norm_sqr() + self.components[1].norm_sqr()).sqrt()
    }

    pub fn approx_eq(&self, other: &IsospinState, tol: f64) -> bool {
        (self.components[0] - other.components[0]).norm() <= tol
            && (self.components[1] - other.components[1]).norm() <= tol
    }
}

/// The +1/2 eigenstate of sigma_z (up-type member of the doublet).
pub fn proton() -> IsospinState {
    IsospinState {
        components: [Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)],
    }
}

/// The -1/2 eigenstate of sigma_z (down-type member of the doublet).
pub fn neutron() -> IsospinState {
    IsospinState {
        components: [Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0)],
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Ladder {
    Plus,
    Minus,
}

/// I_+ = (sigma_x + i sigma_y)/2 or I_- = (sigma_x - i sigma_y)/2.
pub fn ladder(which: Ladder) -> ComplexMatrix {
    let sign = match which {
        Ladder::Plus => 1.0,
        Ladder::Minus => -1.0,
    };
    pauli(Axis::X)
        .add(&pauli(Axis::Y).scale(I * sign))
        .scale_re(0.5)
}

/// Result of acting with an operator on a doublet state; the zero vector is
/// a tagged outcome, not an error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum LadderOutcome {
    State(IsospinState),
    Annihilated,
}

pub fn apply_isospin(op: &ComplexMatrix, state: &IsospinState) -> LadderOutcome {
    let out = op.mul_vec(&state.components);
    let result = IsospinState {
        components: [out[0], out[1]],
    };
    if result.norm() < 1e-12 {
        LadderOutcome::Annihilated
    } else {
        LadderOutcome::State(result)
    }
}
