//! Partial Brauer and Motzkin monoids and their relatives: diagrams, Green's
//! structure, ideals, generating sets, and twisted diagram algebras.

pub mod algebra;
pub mod combinatorics;
pub mod diagram;
pub mod error;
pub mod monoid;
pub mod random;
pub mod structure;

pub use algebra::{AlgebraElement, Polynomial2};
pub use diagram::{Diagram, DiagramStats, FamilyFlags, Point, ProductResult};
pub use error::{Error, Result};
pub use monoid::{Family, GreenRelation};
