pub mod bipoly;
pub mod blocks;
pub mod catalog;
pub mod cli;
pub mod dickson;
pub mod error;
pub mod families;
pub mod obstruction;
pub mod pell;
pub mod poly;
pub mod pte;
pub mod rational;
pub mod reps;
pub mod stdpairs;

pub use error::{Error, Result};
pub use poly::{LinearSubst, Poly};
pub use rational::Rational;
