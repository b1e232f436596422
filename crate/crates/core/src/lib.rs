//! Tableaux on staircase-minus-rectangle and shifted shapes: bijections,
//! insertion algorithms, exact counting and uniform sampling.

pub mod error;
pub mod shapes;
pub mod tableaux;
pub mod words;
pub mod insertion;
pub mod bijections;
pub mod counting;
pub mod sampling;
pub mod verify;
pub mod io;

pub use error::{Error, Result};
