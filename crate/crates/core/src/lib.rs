//! Overlapped-repetition Shor codes: construction, verification, decoding,
//! and Monte Carlo simulation.
//!
//! The crate builds four stabilizer-code families from repetition codes that
//! share bits (the classical `[k(d-l)+l, k, d]` overlapped repetition code):
//!
//! - `shor`: the standard `[[d^2, 1, d]]` Shor code,
//! - `outer`: overlapped code as outer code over `[d,1,d]` inner blocks,
//! - `inner`: overlapped code as inner code under repetition outer codes,
//! - `double`: overlapped code in both roles.
//!
//! Every structural claim about these codes (parameters, generator counts,
//! stabilizer weights, distances, decoder rule counts, rates) is checked by
//! independent brute-force machinery in [`verifier`] and [`decoder`] rather
//! than assumed. Claimed distances are recorded as claims and confirmed or
//! refuted by exhaustive search.

pub mod builder;
pub mod classical;
pub mod decoder;
pub mod gf2;
pub mod json;
pub mod pauli;
pub mod simulator;
pub mod verifier;

use thiserror::Error;

/// Schema tag carried by every JSON document this crate emits.
pub const SCHEMA: &str = "overlap-shor/1";

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("capacity exceeded: {0}")]
    Capacity(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unsupported code: {0}")]
    UnsupportedCode(String),
    #[error("malformed document: {0}")]
    Malformed(String),
}

pub type Result<T> = std::result::Result<T, Error>;
