//! Cell modules of the twisted Motzkin algebra and their Gram matrices.

use num_rational::BigRational;
use serde::Serialize;

use super::linalg::rational_rank;
use super::poly::Polynomial2;
use crate::diagram::Diagram;
use crate::error::{Error, Result};
use crate::monoid::{projections, Family};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CellAction {
    /// Zero when the rank drops.
    pub coefficient: Polynomial2,
    pub result: Option<Diagram>,
}

/// `α · C_β` in the cell module of rank `rank(β)`.
pub fn cell_action(a: &Diagram, b: &Diagram) -> Result<CellAction> {
    if !b.is_projection() {
        return Err(Error::NotAProjection(b.to_string()));
    }
    for d in [a, b] {
        if !Family::M.contains(d) {
            return Err(Error::FamilyMismatch(format!("{d} is not planar")));
        }
    }
    let prod = a.multiply(b)?;
    if prod.product.rank() < b.rank() {
        return Ok(CellAction { coefficient: Polynomial2::zero(), result: None });
    }
    let result = prod.product.compose(&a.star());
    debug_assert!(result.is_projection());
    Ok(CellAction { coefficient: Polynomial2::monomial(prod.loops, prod.paths), result: Some(result) })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GramMatrix {
    pub n: usize,
    pub r: usize,
    pub basis: Vec<Diagram>,
    pub entries: Vec<Vec<Polynomial2>>,
}

fn gram_entry(b: &Diagram, c: &Diagram, r: usize) -> Polynomial2 {
    let p = b.multiply(c).expect("same degree");
    if p.product.rank() == r {
        Polynomial2::monomial(p.loops, p.paths)
    } else {
        Polynomial2::zero()
    }
}

/// Gram matrix of the rank-`r` cell module, on the projections of
/// `D_r(M_n)` in canonical order.
pub fn gram_matrix(n: usize, r: usize) -> Result<GramMatrix> {
    let basis = projections(Family::M, n, r)?;
    let entries = basis.iter().map(|b| basis.iter().map(|c| gram_entry(b, c, r)).collect()).collect();
    Ok(GramMatrix { n, r, basis, entries })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GramRank {
    pub matrix_rank: usize,
    pub radical_dim: usize,
    pub dim_l: usize,
}

impl GramMatrix {
    pub fn is_symmetric(&self) -> bool {
        let k = self.entries.len();
        (0..k).all(|i| (0..i).all(|j| self.entries[i][j] == self.entries[j][i]))
    }

    pub fn rank_at(&self, x: &BigRational, y: &BigRational) -> GramRank {
        let m: Vec<Vec<BigRational>> =
            self.entries.iter().map(|row| row.iter().map(|p| p.eval(x, y)).collect()).collect();
        let matrix_rank = rational_rank(&m);
        GramRank { matrix_rank, radical_dim: self.basis.len() - matrix_rank, dim_l: matrix_rank }
    }
}

pub fn gram_rank_at(n: usize, r: usize, x: &BigRational, y: &BigRational) -> Result<GramRank> {
    Ok(gram_matrix(n, r)?.rank_at(x, y))
}

/// Every cell form is non-degenerate at `(x, y)`.
pub fn semisimple_check(n: usize, x: &BigRational, y: &BigRational) -> Result<bool> {
    for r in 0..=n {
        if gram_rank_at(n, r, x, y)?.radical_dim != 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Brute-force check of the cellular multiplication rule on the diagram
/// basis of the twisted Motzkin algebra: with `C_{s,t}` the element joining
/// the upper half of `s` to the lower half of `t`,
/// `C_{s1,t1} ⋆ C_{s2,t2}` is `φ(t1, s2) C_{s1,t2}` when it stays in rank `r`
/// and falls to lower rank exactly when `φ(t1, s2) = 0`.
pub fn check_cellular_axiom(n: usize) -> Result<bool> {
    for r in 0..=n {
        let g = gram_matrix(n, r)?;
        let cells: Vec<Vec<Diagram>> = g
            .basis
            .iter()
            .map(|s| g.basis.iter().map(|t| Diagram::join_halves(s, t)).collect::<Result<_>>())
            .collect::<Result<_>>()?;
        let k = g.basis.len();
        for s1 in 0..k {
            for t1 in 0..k {
                for s2 in 0..k {
                    for t2 in 0..k {
                        let p = cells[s1][t1].multiply(&cells[s2][t2])?;
                        let phi = &g.entries[t1][s2];
                        let ok = if p.product.rank() == r {
                            p.product == cells[s1][t2] && *phi == Polynomial2::monomial(p.loops, p.paths)
                        } else {
                            phi.is_zero()
                        };
                        if !ok {
                            return Ok(false);
                        }
                    }
                }
            }
        }
    }
    Ok(true)
}
