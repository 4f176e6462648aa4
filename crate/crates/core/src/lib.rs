//! Exact computations in the Fock-space model of the torus-equivariant
//! homology of Hilbert schemes of points on the plane.

pub mod cli;
pub mod error;
pub mod exact;
pub mod fock;
pub mod hilbloc;
pub mod jack;
pub mod partitions;
pub mod report;
pub mod symfunc;

pub use error::Error;
