//! symlab: a numerical toolkit for symmetry computations — finite groups
//! and their representations, matrix Lie groups and algebras, rotations and
//! their spin double cover, flavor multiplets, spacetime symmetry, and
//! lattice checks of the conservation laws those symmetries generate.
//!
//! Everything is built on a small dense complex-matrix kernel
//! ([`cmatrix`]) with a Jacobi Hermitian eigensolver and a
//! scaling-and-squaring matrix exponential; no external linear-algebra
//! dependency.

pub mod cmatrix;
pub mod error;
pub mod finitegroup;
pub mod liecore;
pub mod lorentz;
pub mod noether;
pub mod random;
pub mod report;
pub mod suites;
pub mod so3su2;
pub mod su3flavor;

pub use cmatrix::ComplexMatrix;
pub use error::Error;
