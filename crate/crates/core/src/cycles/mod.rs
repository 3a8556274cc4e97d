//! Number fields, closed points of the projective plane, and 0-cycles.

mod cycle;
mod numfield;
mod point;

pub use cycle::{CycleEntry, ZeroCycle};
pub use numfield::NfElem;
pub use point::{make_closed_point, ClosedPoint};
