//! File formats, tables, plots and the `ur-kit` command line on top of
//! [`ur_core`].

pub mod cli;
pub mod error;
pub mod formats;
pub mod svg;
pub mod table;

pub use error::{KitError, Result};
