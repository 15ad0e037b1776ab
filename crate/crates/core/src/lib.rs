//! Exact computations on G-Hilbert schemes of finite abelian groups acting
//! diagonally on affine space: G-clusters, the map to the quotient, tangent
//! and relative tangent spaces, and the stratification data behind the McKay
//! correspondence.

pub mod cli;
pub mod cluster;
pub mod cyclotomic;
pub mod error;
pub mod group_rep;
pub mod linalg;
pub mod monomial;
pub mod tangent;

pub use error::{Error, Result};
