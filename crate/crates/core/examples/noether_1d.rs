//! Evolves a Gaussian pulse of the free scalar field on a periodic 1D
//! lattice and reports how well the lattice conserves the charges built
//! from the energy-momentum tensor.

use symlab::noether::{conservation_report, InitialCondition, LatticeConfig};

fn main() {
    let config = LatticeConfig {
        spatial_dims: 1,
        extent: 256,
        dx: 1.0,
        dt: 0.05,
        mass: 1.0,
        steps: 2000,
    };
    let ic = InitialCondition::parse("gaussian").unwrap();
    let rep = conservation_report(&config, &ic, 200).unwrap();

    println!("t        energy           P_x            BO_x");
    for s in &rep.samples {
        println!("{:6.1}  {:.12}  {:+.3e}  {:+.6e}", s.t, s.e, s.p[0], s.bo[0]);
    }
    println!("\nmax relative energy drift: {:.3e}", rep.energy_max_rel_drift);
    println!("energy drift rate per unit time: {:.3e}", rep.energy_drift_rate);
    println!("max absolute momentum drift: {:.3e}", rep.momentum_max_abs_drift);
    println!("max boost-charge drift: {:.3e}", rep.boost_max_rel_drift);
    println!("interior divergence residual: {:.3e}", rep.divergence_residual);
}
