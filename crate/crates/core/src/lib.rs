//! Temporal point process models trained by directly fitting the conditional
//! density of inter-event times, instead of a conditional intensity function.
//!
//! The crate provides:
//!
//! - [`diff`]: a small reverse-mode automatic differentiation engine over
//!   dense `f64` tensors, plus an Adam optimizer. Every model in the crate is
//!   trained through it.
//! - [`dist`]: closed-form densities on the positive reals (log-normal
//!   mixture, Gompertz, exponential) with log-PDF, CDF, mean and sampling,
//!   both plain and reparametrized.
//! - [`flow`]: invertible-transform density heads (deep sigmoidal and
//!   sum-of-squares polynomial layers), the cumulative-intensity baseline
//!   with a nonnegative-weight network, and intensity/CDF utilities.
//! - [`encoder`]: a gated recurrent history encoder, context assembly and the
//!   affine parameter heads.
//! - [`generators`]: synthetic event-sequence simulators with exact
//!   log-likelihood oracles under the true process.
//! - [`data`]: event sequences, JSONL datasets, splits and input scaling.
//! - [`model`]: the decoder families wired to the encoder, plus checkpoints.
//! - [`train`]: maximum-likelihood training with early stopping, mark and
//!   metadata conditioning, and the three missing-data strategies.

pub mod data;
pub mod diff;
pub mod dist;
pub mod encoder;
pub mod flow;
pub mod generators;
pub mod model;
pub mod special;
pub mod train;

pub use data::{Dataset, EventSequence};
pub use diff::{Adam, ParamId, ParamStore, Tape, Tensor, Val};
pub use model::{Checkpoint, DecoderKind, TppModel};
pub use train::{TrainConfig, Trainer};
