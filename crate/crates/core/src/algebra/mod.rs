//! Twisted diagram algebras and the cellular structure of the Motzkin one.

pub mod cell;
pub mod element;
pub mod linalg;
pub mod poly;

pub use cell::{
    cell_action, check_cellular_axiom, gram_matrix, gram_rank_at, semisimple_check, CellAction, GramMatrix, GramRank,
};
pub use element::{twist, AlgebraElement};
pub use poly::Polynomial2;

use num_rational::BigRational;

use crate::error::{Error, Result};

/// Parses `p/q` or an integer.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    s.trim().parse::<BigRational>().map_err(|e| Error::Parse(format!("bad rational {s:?}: {e}")))
}
