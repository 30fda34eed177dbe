//! Gradient-based competitive clustering with CHL-induced topology.
//!
//! Two provably related architectures estimate a set of prototypes
//! (cluster centroids) by plain gradient descent on the loss
//! `L = Q + lambda * ||E||_F`, where `Q` is the quantization error and
//! `E` is the distance-weighted matrix of Competitive Hebbian Learning
//! edges:
//!
//! * the **base layer** (`gbc`), whose weight matrix *is* the prototype
//!   matrix and which therefore has no forward pass;
//! * the **dual layer** (`dgbc`), trained on the transpose of the input,
//!   whose *outputs* are the prototypes;
//! * a **deep dual** variant (`deep_dgbc`) that stacks tanh layers in
//!   front of the linear dual output.
//!
//! Module map:
//!
//! * [`numerics`] — dense row-major matrices, seeded randomness, finite
//!   differences, Gram-Schmidt orthonormalization.
//! * [`datasets`] — deterministic synthetic generators (spiral, moons,
//!   circles, hypercube clusters), standardization, CSV import/export.
//! * [`topology`] — CHL edges, quantization error, the penalized loss
//!   and its analytic gradient with respect to prototypes.
//! * [`layers`] — the three architectures with forward maps and
//!   hand-derived backward maps, duality-condition checks, persistence.
//! * [`training`] — the per-epoch training loop, multi-seed harness and
//!   metric traces.
//! * [`evaluation`] — pruning, connected components and the
//!   cluster-accuracy metric.

pub mod datasets;
pub mod error;
pub mod evaluation;
pub mod layers;
pub mod numerics;
pub mod topology;
pub mod training;

pub use error::{Error, Result};
