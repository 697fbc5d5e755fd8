//! Checks the commutator table of the 5x5 affine representation that
//! adjoins spacetime translations to rotations and boosts, and shows a
//! translation acting on an event.

use num_complex::Complex64;
use symlab::cmatrix::mat_exp;
use symlab::lorentz::{poincare_affine, poincare_commutators};

fn main() {
    let res = poincare_commutators();
    println!("[J_i, P_j] = i eps_ijk P_k      residual {:.1e}", res.jp);
    println!("[J_i, P_t] = 0                  residual {:.1e}", res.jpt);
    println!("[K_i, P_j] = -i delta_ij P_t    residual {:.1e}", res.kp);
    println!("[K_i, P_t] = -i P_i             residual {:.1e}", res.kpt);
    println!("[P_mu, P_nu] = 0                residual {:.1e}", res.pp);
    println!(
        "verbatim reading [J_i, K_j] = i delta_ij P_t is refuted: residual {:.3}",
        res.verbatim_jk_pt
    );

    let rep = poincare_affine();
    let translate = mat_exp(&rep.p_spatial[0].scale(Complex64::new(0.0, 2.5)));
    let event = [1.0, 3.0, 0.0, 0.0, 1.0].map(|x| Complex64::new(x, 0.0));
    let moved = translate.mul_vec(&event);
    println!(
        "\nexp(i 2.5 P_x) moves the event x = 3 to x = {:.1}",
        moved[1].re
    );
}
