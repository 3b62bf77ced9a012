//! Sperner numbers of finite posets in Boolean lattices, their left
//! adjoints, and minimum generating sets of direct powers of finite
//! distributive lattices.

pub mod bigcomb;
pub mod bits;
pub mod decimal;
pub mod embedding;
pub mod error;
pub mod estimates;
pub mod genset;
pub mod oracle;
pub mod poset;
pub mod sperner;
pub mod tables;
pub mod witness;

pub use bigcomb::{afsb, binom, fsb, left_adjoint, BigNat, MonotoneFn};
pub use bits::Subset;
pub use error::{Error, Result};
pub use estimates::Pattern;
pub use poset::{DistLattice, Lattice, Poset, SubsetAssignment};
pub use sperner::{Kind, Method, PosetProfile, SpernerResult};
