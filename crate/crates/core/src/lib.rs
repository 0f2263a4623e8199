pub mod convex;
pub mod error;
pub mod rational;

pub use error::{Error, Result};
pub mod extended;
pub mod tropical;
pub mod series;
pub mod intersect;
pub mod oracle;
pub mod cli;
