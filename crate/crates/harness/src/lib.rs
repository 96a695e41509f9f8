//! Instance files, random instance generation, verification oracles,
//! numeric self-tests and SVG rendering around the piercing pipeline.

pub mod generate;
pub mod instance;
pub mod oracles;
pub mod selftest;
pub mod svg;
pub mod verify;

pub use generate::{generate_helly_instance, generate_instance, generate_tight_instance};
pub use instance::{Instance, PointsFile};
pub use verify::{verify_piercing, VerificationReport};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("geometry error: {0}")]
    Geometry(#[from] geopierce_core::Error),

    #[error("instance generation failed after {0} attempts")]
    GenerationFailed(usize),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("malformed instance file: {0}")]
    Json(#[from] serde_json::Error),

    #[error("invalid instance: {0}")]
    InvalidInstance(String),

    #[error("self-test failed: {0}")]
    SelfTestFailed(String),
}

pub type Result<T> = std::result::Result<T, HarnessError>;
