//! Builds the regular representation of the four quarter-turn rotations
//! from its Cayley table and checks the homomorphism property.

use symlab::finitegroup::{build_regular_representation, c4, verify_representation};

fn main() {
    let group = c4();
    let reg = build_regular_representation(&group);
    for (g, name) in group.elements.iter().enumerate() {
        println!("R({name}):");
        for i in 0..4 {
            let row: Vec<u8> = reg.image(g).row(i).iter().map(|z| z.re as u8).collect();
            println!("  {row:?}");
        }
    }
    println!(
        "homomorphism property: {}",
        if verify_representation(&reg, 0.0).is_ok() { "exact" } else { "violated" }
    );
}
