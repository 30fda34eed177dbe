//! Dense matrix arithmetic, seeded randomness and oracle utilities
//! shared by every other module.

mod gradcheck;
mod matrix;
mod orthonormal;
mod rng;

pub use gradcheck::finite_difference_gradient;
pub use matrix::{frobenius_norm, pairwise_sq_distances, Matrix};
pub use orthonormal::orthonormalize_columns;
pub use rng::Rng;
