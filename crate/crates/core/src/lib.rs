//! Exact plane-geometry kernel for parabola tangency problems.
//!
//! All arithmetic is over arbitrary-precision rationals, so every predicate
//! (collinear, concyclic, tangent, equidistant) is decided with zero
//! tolerance. The modules build on each other:
//!
//! * [`rational`]: the exact scalar.
//! * [`euclid`]: points, canonical lines, circles, pedal points,
//!   circumcircles and the known-root line/circle intersection.
//! * [`parabola`]: focus/directrix parabolas and the pedal tangency test.
//! * [`theorems`]: Simson–Wallace, Lambert and its converse as checks that
//!   return [`TheoremReport`]s.
//! * [`parbelos`]: the parbelos figure with its tangent rectangle, and the
//!   verification of the tangency property and its corollaries.

mod error;
pub mod euclid;
pub mod parabola;
pub mod parbelos;
pub mod rational;
pub mod theorems;

pub use error::GeomError;
pub use euclid::{Circle, Line, Point, Segment};
pub use parabola::{CanonicalElements, Parabola, Side};
pub use parbelos::{ParbelosFigure, ParbelosInputs, Similarity};
pub use rational::{make_rational, Rational};
pub use theorems::{Check, TheoremReport, Witness};

pub type Result<T> = std::result::Result<T, GeomError>;
