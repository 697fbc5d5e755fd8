//! Rotates a vector two ways: by conjugating its quaternion embedding
//! with a unit quaternion, and by the matching 3x3 rotation matrix. Both
//! q and -q produce the same rotation.

use symlab::so3su2::{rotate_by_conjugation, rotation_matrix_of, su2_from_axis_angle};

fn main() {
    let axis = [0.0, 0.0, 1.0];
    let theta = std::f64::consts::FRAC_PI_2;
    let q = su2_from_axis_angle(axis, theta).unwrap();

    let v = [1.0, 0.0, 0.0];
    let rotated = rotate_by_conjugation(&q, v).unwrap();
    println!("conjugation sends {v:?} to {rotated:?}");

    let r = rotation_matrix_of(&q).unwrap();
    println!("matching rotation matrix:");
    for i in 0..3 {
        let row: Vec<f64> = r.row(i).iter().map(|z| (z.re * 1e12).round() / 1e12).collect();
        println!("  {row:?}");
    }

    let r_neg = rotation_matrix_of(&q.neg()).unwrap();
    println!(
        "R(q) and R(-q) differ by {:.1e}: the map is two-to-one",
        r.max_abs_diff(&r_neg)
    );
}
