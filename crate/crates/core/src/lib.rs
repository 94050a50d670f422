//! Numerical radius, its dual norm, operator and nuclear norms, and the
//! spectral and nuclear norms of real `2 × m × n` tensors, all computed by a
//! self-contained semidefinite-programming solver with independent oracles.

pub mod cli;
pub mod error;
pub mod io;
pub mod linalg;
pub mod oracle;
pub mod radius;
pub mod sdp;
pub mod tensor;

pub use error::{Error, Result};
