//! Binary self-dual codes from bicubic planar graphs, their lifts to the
//! ring `R2 = F2 + uF2 + vF2 + uvF2`, exhaustive analysis of the Gray
//! images, and the building-up extension to length 66.

pub mod analysis;
pub mod enumerate;
pub mod error;
pub mod extension;
pub mod gf2;
pub mod graph;
pub mod lift;
pub mod registry;
pub mod repro;
pub mod store;
pub mod ring;
pub mod tables;

pub use analysis::{CodeType, EnumeratorReport, Family, WeightDistribution};
pub use error::{Error, Result};
pub use gf2::{BinaryCode, BinaryMatrix, BitVector};
pub use graph::PlanarBicubicGraph;
pub use ring::{R2Matrix, R2Vector, R2};
