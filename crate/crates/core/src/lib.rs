pub mod cli;
pub mod error;
pub mod forms;
pub mod gallery;
pub mod geom;
pub mod invol;
pub mod joinf;
pub mod qfield;

pub use error::{Error, Result};
