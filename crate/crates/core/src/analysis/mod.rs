//! Structural analysis of polarity graphs.

mod bound;
mod certificate;
mod mixing;
mod structure;
mod triangles;

pub use bound::{triangle_free_bound, TriangleFreeBound};
pub use certificate::{verify_certificate, verify_vertex_set, Certificate, Verdict, Violation};
pub use mixing::{edge_count, eml_check, MixingCheck};
pub use structure::{
    c4_witness, diameter, is_c4_free, neighborhood_split, parsons_partition, NeighborhoodSplit,
    ParsonsPartition,
};
pub use triangles::{triangles, TriangleHypergraph, Triple};
