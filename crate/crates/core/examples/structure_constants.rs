//! Solves for the structure constants of the Pauli and Gell-Mann bases
//! and prints the nonzero components.

use symlab::liecore::structure_constants;
use symlab::so3su2::pauli_basis;
use symlab::su3flavor::su3_structure_constants;

fn main() {
    let f2 = structure_constants(&pauli_basis()).unwrap();
    println!("Pauli basis, [X_a, X_b] = i f_ab^c X_c (nonzero f):");
    print_nonzero(&f2.f);

    let f3 = su3_structure_constants();
    println!("half-Gell-Mann basis (closure residual {:.1e}):", f3.max_residual);
    print_nonzero(&f3.f);
}

fn print_nonzero(f: &[Vec<Vec<num_complex::Complex64>>]) {
    for (a, fa) in f.iter().enumerate() {
        for (b, fab) in fa.iter().enumerate() {
            for (c, v) in fab.iter().enumerate() {
                if v.norm() > 1e-9 && a < b {
                    println!("  f_{}{}^{} = {:+.4}", a + 1, b + 1, c + 1, v.re);
                }
            }
        }
    }
}
