//! Exact point-line incidence structure of finite planar point sets, and the
//! constant machinery behind the weak Dirac and Beck-type line bounds.
//!
//! Everything is computed over exact rationals. Infinite series that appear
//! in the bound constants are handled as rigorous [`Interval`] enclosures.
//!
//! ```
//! use incidence_core::{generators, Arrangement};
//!
//! let grid = generators::grid(3, 3).unwrap();
//! let arr = Arrangement::build(&grid).unwrap();
//! assert_eq!(arr.num_lines(), 20);
//! assert_eq!(arr.incidences(), 48);
//! ```

pub mod arrangement;
pub mod bounds;
mod error;
pub mod generators;
pub mod geometry;
pub mod interval;
pub mod io;
pub mod oracle;
pub mod rational;
pub mod verify;

pub use arrangement::{Arrangement, IncidenceBreakdown, LineRecord, PointSet};
pub use bounds::{CrossingConstants, GraphSize};
pub use error::{Error, Result};
pub use geometry::{line_through, orient, LineKey, Orientation, Point};
pub use interval::Interval;
pub use rational::Rational;
pub use verify::{verify_theorems, TheoremCheck, TheoremReport, VerifyContext};
