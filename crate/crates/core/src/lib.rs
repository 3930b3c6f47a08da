//! Exact degree-based irregularity measures for simple graphs, with
//! bound checking over generated families and exhaustively enumerated
//! small graphs.
//!
//! ```
//! use irreg_core::{generators, measures, rational};
//!
//! let g = generators::complete_multipartite(&[2, 3, 5]).unwrap();
//! let ms = measures::measure_set(&g);
//! assert_eq!(ms.s, rational::int(12));
//! assert_eq!(ms.omega, Some(rational::ratio(13, 100)));
//! ```

pub mod canon;
pub mod enumeration;
pub mod error;
pub mod formats;
pub mod generators;
pub mod graph;
pub mod measures;
pub mod rational;
pub mod spectral;
pub mod verifier;

pub use canon::{canonical_code, CanonicalCode};
pub use error::{Error, Result};
pub use graph::{Classification, DegreeStats, Graph};
pub use measures::{measure_set, MeasureSet};
pub use rational::Rational;
