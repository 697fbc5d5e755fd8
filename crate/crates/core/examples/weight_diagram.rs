//! Prints the weight points of the defining flavor triplet as CSV, the
//! boundary format for plotting tools.

use symlab::su3flavor::{fundamental_weights, weights_csv};

fn main() {
    print!("{}", weights_csv(&fundamental_weights(), true));
}
