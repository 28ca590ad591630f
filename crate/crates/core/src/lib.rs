pub mod algebra;
pub mod error;

pub use error::{Error, Result};
pub mod model;
pub mod group;
pub mod enumerate;
pub mod families;
pub mod guess;
pub mod classify;
