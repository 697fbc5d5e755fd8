//! Turns a non-unitary representation of the two-element parity group into
//! an equivalent unitary one by averaging the Gram matrix over the group.

use symlab::cmatrix::ComplexMatrix;
use symlab::finitegroup::{max_unitarity_defect, parity_group, unitarize, Representation};

fn main() {
    let d = ComplexMatrix::from_real_rows(&[vec![1.0, 1.0], vec![0.0, -1.0]]).unwrap();
    let rep = Representation::new(parity_group(), vec![ComplexMatrix::identity(2), d]).unwrap();
    println!("unitarity defect before: {:.3e}", max_unitarity_defect(&rep));

    let result = unitarize(&rep).unwrap();
    println!("group-averaged Gram matrix S:");
    for i in 0..2 {
        println!("  {:?}", result.s.row(i).iter().map(|z| z.re).collect::<Vec<_>>());
    }
    println!(
        "unitarity defect after:  {:.3e}",
        max_unitarity_defect(&result.unitarized)
    );
}
