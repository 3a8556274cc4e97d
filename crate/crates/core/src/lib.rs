//! Limit 0-cycles of families of Cartier divisors on degenerating plane curves.
//!
//! The library evaluates the twisting-certificate formula for the limit
//! cycle of a divisor `V(d)` on a family `F(t; x, y, z) = 0`, and checks it
//! against an independent route through t-saturation and zero-dimensional
//! solving. Everything is exact over the rationals; algebraic points are
//! carried as Galois orbits keyed by their Chow forms.

pub mod cycles;
pub mod error;
pub mod factor;
pub mod flex;
pub mod groebner;
pub mod intersect;
pub mod limits;
pub(crate) mod linalg;
pub mod poly;

pub use error::{Error, Result};
