//! Exact arithmetic and enumeration for the Eisenstein lattice `(E⁵, h)` of
//! signature (4,1), its reflection group, the reduced quadratic space
//! `(F₃⁵, q)`, the 27 lines of the marking lattice with the Weyl group
//! `W(E₆)`, the complex hyperbolic 4-ball, and Brieskorn monodromy data.

pub mod ball;
pub mod closure;
pub mod e6_weyl;
pub mod eisenstein;
pub mod error;
pub mod finite_orthogonal;
pub mod hermitian;
pub mod milnor;

pub use eisenstein::{EisensteinInt, F3Elem};
pub use error::{Error, Result};
pub use finite_orthogonal::{F3Matrix, F3Vector};
pub use hermitian::{Isometry, LatticeVector};
