//! File formats, configuration and the command-line driver around the
//! `synthref-core` generation logic.

pub mod annotations;
pub mod cli;
pub mod config;
pub mod dataset;
pub mod detections;
pub mod error;
pub mod lexicon;
pub mod pipeline;

pub use cli::run_cli;
pub use error::{PipelineError, EXIT_IO, EXIT_OK, EXIT_VALIDATION};
