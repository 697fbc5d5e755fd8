//! Classifies spacetime transformations into the four components of the
//! full Lorentz group and shows a boost acting on a four-velocity.

use num_complex::Complex64;
use symlab::lorentz::{boost, classify, parity_inversion, time_reversal};
use symlab::so3su2::Axis;
use symlab::ComplexMatrix;

fn main() {
    let theta = std::f64::consts::FRAC_PI_2;
    let b = boost(Axis::X, theta);
    let cases = [
        ("identity", ComplexMatrix::identity(4)),
        ("x-boost", b.clone()),
        ("parity * boost", parity_inversion().mul(&b)),
        ("parity * time-reversal * boost", parity_inversion().mul(&time_reversal()).mul(&b)),
        ("time-reversal * boost", time_reversal().mul(&b)),
    ];
    for (name, l) in &cases {
        let c = classify(l, 1e-10).unwrap();
        println!(
            "{name:32} det sign = {:+}, Lambda^0_0 sign = {:+}, category {}",
            c.det_sign, c.time_sign, c.category
        );
    }

    let v = b.mul_vec(&[
        Complex64::new(1.0, 0.0),
        Complex64::new(0.0, 0.0),
        Complex64::new(0.0, 0.0),
        Complex64::new(0.0, 0.0),
    ]);
    println!(
        "\nboost(x, pi/2) maps the rest four-velocity to ({:.6}, {:.6}, 0, 0); cosh = {:.6}, -sinh = {:.6}",
        v[0].re,
        v[1].re,
        theta.cosh(),
        -theta.sinh()
    );
}
