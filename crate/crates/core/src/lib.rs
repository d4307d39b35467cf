//! Exact counting of symmetric and non-symmetric peaks over set partitions.
//!
//! A set partition of `[n]` with `k` blocks is handled in its restricted
//! growth form. Three independent routes compute the peak totals:
//!
//! * [`enumeration`]: exhaustive generation of every partition in a class,
//! * [`closed_form`]: finite sums of Stirling numbers of the second kind,
//! * [`series`]: coefficient extraction from truncated generating functions.
//!
//! [`verify`] runs them against each other.

pub mod cli;
pub mod closed_form;
pub mod enumeration;
mod error;
pub mod routes;
pub mod series;
pub mod stirling;
pub mod verify;
pub mod words;

pub use closed_form::Statistic;
pub use enumeration::{AggregateTotals, PartitionClass, RgsIter};
pub use error::{Error, Result};
pub use routes::{compute_total, Method};
pub use series::{IntSeries, PeakKind, QPoly, XSeries};
pub use stirling::StirlingTable;
pub use words::{Rgs, StatBundle, Word};
