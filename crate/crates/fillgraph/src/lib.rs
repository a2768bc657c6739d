//! Filling systems on closed orientable surfaces, modelled as 4-regular
//! fat graphs whose straight-through cycles are the curves.

pub mod analysis;
pub mod cli;
pub mod families;
pub mod fatgraph;
pub mod io;
pub mod ops;
pub mod oracle;
pub mod synthesis;

pub use fatgraph::{
    CanonicalForm, Dart, Dir, FatGraph, FillingIssue, FillingReport, GraphError, HalfEdge,
    StandardCycle, SurfaceSignature,
};
