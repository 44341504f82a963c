//! Polarity graphs of finite projective planes, their structural and spectral
//! invariants, and searches for large induced triangle-free subgraphs that
//! avoid absolute points.

pub mod error;
pub mod gf;
pub mod graph;
pub mod plane;
pub mod polarity;

pub use error::{Error, Result};
pub use gf::{Fe, Field, FieldElem};
pub use graph::{Construction, GraphDescriptor, LoopedView, PolarityGraph, SimpleGraph};
pub use plane::{IncidencePlane, ProjPoint, ValidationReport};
pub use polarity::{Polarity, PolarityKind};
pub mod analysis;
pub mod cli;
pub mod io;
pub mod search;
pub mod spectral;
