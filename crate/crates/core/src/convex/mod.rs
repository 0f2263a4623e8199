//! Exact rational polyhedral geometry.

pub mod complex;
pub mod dd;
pub mod fan;
pub mod lattice;
pub mod lp;
pub mod polyhedron;
pub mod volume;

pub use complex::PolyhedralComplex;
pub use fan::{normal_fan, Fan};
pub use polyhedron::{Cone, Polyhedron};
pub use volume::{lattice_volume, minkowski_sum, mixed_volume};
