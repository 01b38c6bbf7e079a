//! Data-driven uncertainty sets for robust linear optimization.
//!
//! The crate learns uncertainty sets from scenario data with one-class
//! piecewise-affine networks, optimizes linear objectives over the learned
//! sets region by region, and solves robust linear programs by iterative
//! scenario generation. A weighted-l1-kernel support vector clustering set
//! and a discrete-scenario set are included as comparison baselines.
//!
//! Module map:
//! - [`numlin`]: dense matrices, norms, Cholesky, seeded randomness
//! - [`pwa`]: piecewise-affine networks, activation patterns, region algebra
//! - [`svdd`]: one-class training (center, losses, gradients, radius)
//! - [`lp`]: dense two-phase simplex
//! - [`adversarial`]: worst-case scenario search over network sets
//! - [`svc`]: support vector clustering baseline
//! - [`master`]: robust problems and the scenario-generation loop
//! - [`datagen`]: synthetic scenario families and CSV I/O

pub mod adversarial;
pub mod datagen;
pub mod error;
pub mod lp;
pub mod master;
pub mod numlin;
pub mod pwa;
pub mod svc;
pub mod svdd;

pub use error::{Error, Result};
pub use numlin::{Matrix, Norm, Rng};


