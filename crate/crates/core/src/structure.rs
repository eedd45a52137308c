//! Named generators, the normal form, nesting and cosparse predicates,
//! membership tests for `⟨D_r⟩` and the idempotent-generated parts, and
//! generating sets of minimal size.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::combinatorics::check_rank;
use crate::diagram::Diagram;
use crate::error::{Error, Result};
use crate::monoid::{self, Family, DEFAULT_LIMIT};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Generator {
    /// Order-preserving map from `A` onto `[|A|]`.
    Lambda(Vec<usize>),
    Rho(Vec<usize>),
    Id(Vec<usize>),
    Sigma(usize, usize),
    Tau(usize, usize),
    Eps(usize),
    TauAdj(usize),
    Mu(usize),
    Alpha(usize),
    /// The shift `i ↦ i + 1`.
    Beta,
}

impl Generator {
    pub fn build(&self, n: usize) -> Result<Diagram> {
        match self {
            Generator::Lambda(a) => lambda(n, a),
            Generator::Rho(a) => rho(n, a),
            Generator::Id(a) => id_set(n, a),
            Generator::Sigma(i, j) => sigma(n, *i, *j),
            Generator::Tau(i, j) => tau(n, *i, *j),
            Generator::Eps(k) => eps(n, *k),
            Generator::TauAdj(j) => tau(n, *j, j + 1),
            Generator::Mu(k) => mu(n, *k),
            Generator::Alpha(j) => alpha(n, *j),
            Generator::Beta => Ok(shift(n)),
        }
    }
}

fn check_points(n: usize, pts: &[usize]) -> Result<()> {
    if let Some(&p) = pts.iter().find(|&&p| p == 0 || p > n) {
        return Err(Error::OutOfRange { point: p.to_string(), n });
    }
    Ok(())
}

fn sorted_set(n: usize, a: &[usize]) -> Result<Vec<usize>> {
    check_points(n, a)?;
    let set: BTreeSet<usize> = a.iter().copied().collect();
    if set.len() != a.len() {
        return Err(Error::InvalidParameter(format!("{a:?} has repeated points")));
    }
    Ok(set.into_iter().collect())
}

pub fn lambda(n: usize, a: &[usize]) -> Result<Diagram> {
    let a = sorted_set(n, a)?;
    Ok(Diagram::from_pairs(n, a.iter().enumerate().map(|(k, &ak)| (ak - 1, n + k))))
}

pub fn rho(n: usize, a: &[usize]) -> Result<Diagram> {
    Ok(lambda(n, a)?.star())
}

pub fn id_set(n: usize, a: &[usize]) -> Result<Diagram> {
    let a = sorted_set(n, a)?;
    Ok(Diagram::from_pairs(n, a.iter().map(|&i| (i - 1, n + i - 1))))
}

fn ordered_pair(n: usize, i: usize, j: usize) -> Result<(usize, usize)> {
    check_points(n, &[i, j])?;
    if i >= j {
        return Err(Error::InvalidParameter(format!("need i < j, got {i}, {j}")));
    }
    Ok((i - 1, j - 1))
}

pub fn sigma(n: usize, i: usize, j: usize) -> Result<Diagram> {
    let (i, j) = ordered_pair(n, i, j)?;
    Ok(Diagram::from_pairs(
        n,
        (0..n).map(|k| {
            (
                k,
                n + if k == i {
                    j
                } else if k == j {
                    i
                } else {
                    k
                },
            )
        }),
    ))
}

pub fn tau(n: usize, i: usize, j: usize) -> Result<Diagram> {
    let (i, j) = ordered_pair(n, i, j)?;
    Ok(Diagram::from_pairs(n, (0..n).filter(|&k| k != i && k != j).map(|k| (k, n + k)).chain([(i, j), (n + i, n + j)])))
}

pub fn eps(n: usize, k: usize) -> Result<Diagram> {
    check_points(n, &[k])?;
    Ok(Diagram::from_pairs(n, (0..n).filter(|&i| i + 1 != k).map(|i| (i, n + i))))
}

pub fn mu(n: usize, k: usize) -> Result<Diagram> {
    check_points(n, &[k, k + 2])?;
    let k = k - 1;
    Ok(Diagram::from_pairs(
        n,
        (0..n).filter(|&i| i < k || i > k + 2).map(|i| (i, n + i)).chain([(k, k + 2), (n + k, n + k + 2)]),
    ))
}

pub fn alpha(n: usize, j: usize) -> Result<Diagram> {
    check_points(n, &[j, j + 1])?;
    let j = j - 1;
    Ok(Diagram::from_pairs(n, (0..n).filter(|&i| i != j && i != j + 1).map(|i| (i, n + i)).chain([(j + 1, n + j)])))
}

pub fn shift(n: usize) -> Diagram {
    Diagram::from_pairs(n, (0..n.saturating_sub(1)).map(|i| (i, n + i + 1)))
}

/// `α = β·λ·γ·ρ·δ` with `β, δ` idempotents of the same rank, `λ = λ_dom(α)`,
/// `ρ = ρ_codom(α)` and `γ` a permutation of `[r]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NormalForm {
    pub beta: Diagram,
    pub lam: Diagram,
    pub gam: Diagram,
    pub rho: Diagram,
    pub delta: Diagram,
}

impl NormalForm {
    pub fn recompose(&self) -> Diagram {
        let xi = self.beta.compose(&self.lam);
        let zeta = self.rho.compose(&self.delta);
        xi.compose(&self.gam).compose(&zeta)
    }
}

pub fn normal_form(a: &Diagram) -> NormalForm {
    let n = a.degree();
    let mate = a.mate_slice();
    let dom = a.dom();
    let codom = a.codom();
    let r = dom.len();

    let mut beta: Vec<u32> = (0..2 * n as u32).collect();
    let mut delta = beta.clone();
    for i in 0..n {
        let w = mate[i] as usize;
        if w < n {
            beta[i] = w as u32;
        } else {
            beta[i] = (n + i) as u32;
            beta[n + i] = i as u32;
        }
        let w = mate[n + i] as usize;
        if w >= n {
            delta[n + i] = w as u32;
        } else {
            delta[n + i] = i as u32;
            delta[i] = (n + i) as u32;
        }
    }
    let gam = Diagram::from_pairs(
        n,
        dom.iter().enumerate().map(|(k, &i)| {
            let j = mate[i - 1] as usize - n + 1;
            let pk = codom.iter().position(|&c| c == j).expect("codomain point");
            (k, n + pk)
        }),
    );
    debug_assert_eq!(gam.rank(), r);
    NormalForm {
        beta: Diagram::from_mate_unchecked(n, beta),
        lam: lambda(n, &dom).expect("domain is in range"),
        gam,
        rho: rho(n, &codom).expect("codomain is in range"),
        delta: Diagram::from_mate_unchecked(n, delta),
    }
}

pub fn is_sparse(a: &[usize], n: usize) -> bool {
    let set: BTreeSet<usize> = a.iter().copied().collect();
    set.iter().all(|&i| i >= 1 && i <= n && !set.contains(&(i + 1)))
}

/// The complement in `[n]` has no two consecutive elements.
pub fn is_cosparse(a: &[usize], n: usize) -> bool {
    let set: BTreeSet<usize> = a.iter().copied().collect();
    let comp: Vec<usize> = (1..=n).filter(|i| !set.contains(i)).collect();
    is_sparse(&comp, n)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Upper,
    Lower,
}

/// Non-transversal blocks on one side, as sorted 1-based point lists.
fn side_blocks(a: &Diagram, side: Side) -> Vec<Vec<usize>> {
    let n = a.degree();
    let off = if side == Side::Upper { 0 } else { n };
    let mate = a.mate_slice();
    let mut out = Vec::new();
    for i in 0..n {
        let w = mate[off + i] as usize;
        if w < off || w >= off + n {
            continue;
        }
        let j = w - off;
        if j == i {
            out.push(vec![i + 1]);
        } else if j > i {
            out.push(vec![i + 1, j + 1]);
        }
    }
    out
}

fn nested_by(a: &[usize], b: &[usize]) -> bool {
    b.len() == 2 && b[0] < a[0] && a[a.len() - 1] < b[1]
}

/// Length of the longest chain `A ≺ B_1 ≺ … ≺ B_d` of enclosing hooks.
pub fn nesting_depth(a: &Diagram, side: Side, block: &[usize]) -> Result<usize> {
    let mut block = block.to_vec();
    block.sort_unstable();
    let blocks = side_blocks(a, side);
    if !blocks.contains(&block) {
        return Err(Error::NotANontransversalBlock(format!("{block:?}")));
    }
    Ok(depths(&blocks)[blocks.iter().position(|b| *b == block).unwrap()])
}

/// Nesting depth of every block in `blocks`.
fn depths(blocks: &[Vec<usize>]) -> Vec<usize> {
    // enclosing blocks are strictly wider, so process widest first
    let mut order: Vec<usize> = (0..blocks.len()).collect();
    order.sort_by_key(|&i| std::cmp::Reverse(blocks[i][blocks[i].len() - 1] - blocks[i][0]));
    let mut depth = vec![0usize; blocks.len()];
    for (pos, &i) in order.iter().enumerate() {
        depth[i] = order[..pos]
            .iter()
            .filter(|&&j| nested_by(&blocks[i], &blocks[j]))
            .map(|&j| depth[j] + 1)
            .max()
            .unwrap_or(0);
    }
    depth
}

/// Nesting depths of the singleton blocks on one side.
pub fn singleton_depths(a: &Diagram, side: Side) -> Vec<(usize, usize)> {
    let blocks = side_blocks(a, side);
    let d = depths(&blocks);
    blocks.iter().zip(d).filter(|(b, _)| b.len() == 1).map(|(b, d)| (b[0], d)).collect()
}

pub fn has_unnested_singleton(a: &Diagram, side: Side) -> bool {
    singleton_depths(a, side).iter().any(|&(_, d)| d == 0)
}

fn require_family(a: &Diagram, family: Family) -> Result<()> {
    if !family.contains(a) {
        return Err(Error::FamilyMismatch(format!("{a} is not in {family}_{}", a.degree())));
    }
    Ok(())
}

/// Characterized membership of `a` in `⟨D_r⟩` for `PB_n` or `M_n`,
/// valid for `r ≤ n - 2`.
pub fn in_ideal_generated_by_dr(a: &Diagram, family: Family, r: usize) -> Result<bool> {
    let n = a.degree();
    if !matches!(family, Family::PB | Family::M) {
        return Err(Error::FamilyMismatch(format!("no characterization for {family}")));
    }
    require_family(a, family)?;
    if r + 2 > n {
        return Err(Error::OutOfTheoremRange(format!("<D_{r}> in degree {n} needs r <= n-2")));
    }
    let s = a.rank();
    if s > r {
        return Ok(false);
    }
    if s == r || (r - s).is_multiple_of(2) {
        return Ok(true);
    }
    Ok(match family {
        Family::PB => {
            (n - r).is_multiple_of(2) || {
                let ups = singleton_depths(a, Side::Upper);
                let downs = singleton_depths(a, Side::Lower);
                !ups.is_empty() && !downs.is_empty()
            }
        }
        _ => {
            let k = (r - s - 1) / 2;
            let ok = |side| singleton_depths(a, side).iter().any(|&(_, d)| d <= k);
            ok(Side::Upper) && ok(Side::Lower)
        }
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Basis {
    /// Decided by a closed characterization.
    Theorem,
    /// Decided by computing a closure.
    Closure,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Membership {
    pub member: bool,
    pub basis: Basis,
}

/// Membership in `⟨D_r⟩`, falling back to an explicit closure outside the
/// characterized range.
pub fn dr_membership(a: &Diagram, family: Family, r: usize) -> Result<Membership> {
    match in_ideal_generated_by_dr(a, family, r) {
        Ok(member) => Ok(Membership { member, basis: Basis::Theorem }),
        Err(Error::OutOfTheoremRange(_)) => {
            let dr = monoid::enumerate(family, a.degree(), Some(r))?;
            let cl = monoid::closure(&dr, DEFAULT_LIMIT)?;
            Ok(Membership { member: cl.contains(a), basis: Basis::Closure })
        }
        Err(e) => Err(e),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Scope {
    /// `⟨E(PB_n)⟩`.
    PbWhole,
    /// `⟨E(I_r(PB_n))⟩` for `r ≤ n - 2`, which is all of `I_r`.
    PbIdeal(usize),
    /// `⟨E(M_n)⟩`.
    MWhole,
    /// `⟨E(I_r(M_n))⟩` for `1 ≤ r ≤ n - 2`.
    MIdeal(usize),
}

impl Scope {
    pub fn family(self) -> Family {
        match self {
            Scope::PbWhole | Scope::PbIdeal(_) => Family::PB,
            Scope::MWhole | Scope::MIdeal(_) => Family::M,
        }
    }
}

fn cosparse_id_or_noncosparse(a: &Diagram, max_rank: usize) -> bool {
    let n = a.degree();
    let dom = a.dom();
    let codom = a.codom();
    let is_id = a == &id_set(n, &dom).expect("domain is in range");
    (is_id && is_cosparse(&dom, n) && dom.len() <= max_rank) || (!is_cosparse(&dom, n) && !is_cosparse(&codom, n))
}

/// Characterized membership in the idempotent-generated subsemigroup.
pub fn in_idempotent_generated(a: &Diagram, scope: Scope) -> Result<bool> {
    let n = a.degree();
    require_family(a, scope.family())?;
    match scope {
        Scope::PbWhole => Ok(a.rank() + 2 <= n || a.is_idempotent()),
        Scope::PbIdeal(r) => {
            if r + 2 > n {
                return Err(Error::OutOfTheoremRange(format!("E(I_{r}(PB_{n})) needs r <= n-2")));
            }
            Ok(a.rank() <= r)
        }
        Scope::MWhole => Ok(cosparse_id_or_noncosparse(a, n)),
        Scope::MIdeal(r) => {
            if r == 0 || r + 2 > n {
                return Err(Error::OutOfTheoremRange(format!("E(I_{r}(M_{n})) needs 1 <= r <= n-2")));
            }
            Ok(a.rank() <= r && cosparse_id_or_noncosparse(a, r))
        }
    }
}

/// Projections of `D_{r-1}(M_n)` with no unnested singleton block.
pub fn sigma_set(n: usize, r: usize) -> Result<Vec<Diagram>> {
    if r == 0 {
        return Ok(Vec::new());
    }
    Ok(monoid::projections(Family::M, n, r - 1)?
        .into_iter()
        .filter(|p| !has_unnested_singleton(p, Side::Upper))
        .collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Target {
    IdealPb(usize),
    IdealM(usize),
    IdempotentGeneratedPb,
    IdempotentGeneratedM,
    WholeM,
}

pub fn minimal_generating_set(target: Target, n: usize) -> Result<Vec<Diagram>> {
    match target {
        Target::IdealPb(r) => {
            if r + 2 > n {
                return Err(Error::OutOfTheoremRange(format!("I_{r}(PB_{n}) needs r <= n-2")));
            }
            let mut g = monoid::projections(Family::PB, n, r)?;
            if r >= 1 && check_rank(Family::B, n, r - 1).is_ok() {
                g.extend(monoid::projections(Family::B, n, r - 1)?);
            }
            Ok(g)
        }
        Target::IdealM(r) => {
            if r >= n {
                return Err(Error::OutOfTheoremRange(format!("I_{r}(M_{n}) needs r <= n-1")));
            }
            let mut g = monoid::dclass_generating_set(Family::M, n, r)?;
            g.extend(sigma_set(n, r)?);
            Ok(g)
        }
        Target::IdempotentGeneratedPb => {
            let mut g = vec![Diagram::identity(n)];
            for k in 1..=n {
                g.push(eps(n, k)?);
            }
            for i in 1..=n {
                for j in i + 1..=n {
                    g.push(tau(n, i, j)?);
                }
            }
            Ok(g)
        }
        Target::IdempotentGeneratedM => {
            if n < 2 {
                return Err(Error::OutOfTheoremRange(format!("E(M_{n}) needs n >= 2")));
            }
            let mut g = vec![Diagram::identity(n)];
            for k in 1..=n {
                g.push(eps(n, k)?);
            }
            for j in 1..n {
                g.push(tau(n, j, j + 1)?);
            }
            for k in 1..n - 1 {
                g.push(mu(n, k)?);
            }
            Ok(g)
        }
        Target::WholeM => {
            if n == 0 {
                return Ok(vec![Diagram::identity(0)]);
            }
            let mut g = vec![Diagram::identity(n), shift(n)];
            for j in 1..n {
                g.push(alpha(n, j)?);
            }
            for j in 1..n {
                g.push(tau(n, j, j + 1)?);
            }
            Ok(g)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(n: usize, s: &str) -> Diagram {
        Diagram::parse_text(n, s).unwrap()
    }

    #[test]
    fn generator_examples() {
        let a = [1, 3, 4, 6];
        assert_eq!(lambda(7, &a).unwrap(), d(7, "{1,1'},{3,2'},{4,3'},{6,4'}"));
        assert_eq!(rho(7, &a).unwrap(), d(7, "{1,1'},{2,3'},{3,4'},{4,6'}"));
        assert_eq!(id_set(5, &[1, 2, 3, 4, 5]).unwrap(), Diagram::identity(5));
        let t = tau(5, 2, 4).unwrap();
        assert!(t.is_projection() && t.rank() == 3);
        let m = mu(5, 2).unwrap();
        assert!(m.is_projection() && m.rank() == 2 && m.is_planar());
        assert_eq!(m, d(5, "{1,1'},{2,4},{5,5'},{2',4'}"));
        assert_eq!(eps(2, 1).unwrap(), d(2, "{2,2'}"));
        assert_eq!(alpha(3, 1).unwrap(), d(3, "{2,1'},{3,3'}"));
        assert_eq!(shift(3), d(3, "{1,2'},{2,3'}"));
        assert_eq!(sigma(2, 1, 2).unwrap(), d(2, "{1,2'},{2,1'}"));
        assert!(matches!(eps(3, 4), Err(Error::OutOfRange { .. })));
        assert!(tau(3, 2, 2).is_err());
        assert_eq!(Generator::TauAdj(1).build(2).unwrap(), d(2, "{1,2},{1',2'}"));
    }

    #[test]
    fn lambda_rho_identities() {
        for mask in 0u32..32 {
            let a: Vec<usize> = (1..=5).filter(|i| mask >> (i - 1) & 1 == 1).collect();
            let l = lambda(5, &a).unwrap();
            let r = rho(5, &a).unwrap();
            assert_eq!(l.compose(&r), id_set(5, &a).unwrap());
            let first: Vec<usize> = (1..=a.len()).collect();
            assert_eq!(r.compose(&l), id_set(5, &first).unwrap());
            assert_eq!(l.star(), r);
        }
    }

    #[test]
    fn normal_form_example() {
        let a = d(8, "{1,2},{3,4'},{4,7},{5,1'},{2',3'},{5',6'},{7',8'}");
        let nf = normal_form(&a);
        assert_eq!(nf.beta, d(8, "{1,2},{3,3'},{4,7},{5,5'}"));
        assert_eq!(nf.lam, lambda(8, &[3, 5]).unwrap());
        assert_eq!(nf.gam, d(8, "{1,2'},{2,1'}"));
        assert_eq!(nf.rho, rho(8, &[1, 4]).unwrap());
        assert_eq!(nf.delta, d(8, "{1,1'},{4,4'},{2',3'},{5',6'},{7',8'}"));
        assert_eq!(nf.recompose(), a);
        assert!(nf.beta.is_idempotent() && nf.delta.is_idempotent());
        let id = normal_form(&Diagram::identity(4));
        for f in [&id.beta, &id.lam, &id.gam, &id.rho, &id.delta] {
            assert_eq!(*f, Diagram::identity(4));
        }
    }

    #[test]
    fn sparse_sets() {
        assert!(is_cosparse(&[2, 4], 4));
        assert!(!is_cosparse(&[1], 4));
        let count = (0u32..16)
            .filter(|mask| {
                let a: Vec<usize> = (1..=4).filter(|i| mask >> (i - 1) & 1 == 1).collect();
                is_cosparse(&a, 4)
            })
            .count();
        assert_eq!(count, 8);
        assert!(is_sparse(&[1, 3], 4) && !is_sparse(&[2, 3], 4));
    }

    #[test]
    fn nesting_examples() {
        let a = d(12, "{2,10},{11,12},{3,6},{7,9},{4,5},{2',10'},{11',12'},{3',6'},{7',9'},{4',5'}");
        let blocks: [&[usize]; 7] = [&[1], &[2, 10], &[11, 12], &[3, 6], &[7, 9], &[4, 5], &[8]];
        let got: Vec<usize> = blocks.iter().map(|b| nesting_depth(&a, Side::Upper, b).unwrap()).collect();
        assert_eq!(got, vec![0, 0, 0, 1, 1, 2, 2]);
        assert!(matches!(nesting_depth(&a, Side::Upper, &[1, 2]), Err(Error::NotANontransversalBlock(_))));
        let b = d(7, "{1,1'},{3,7},{4,5},{3',7'},{4',5'}");
        assert_eq!(nesting_depth(&b, Side::Upper, &[4, 5]).unwrap(), 1);
        assert_eq!(nesting_depth(&b, Side::Upper, &[6]).unwrap(), 1);
        assert_eq!(nesting_depth(&b, Side::Upper, &[2]).unwrap(), 0);
        assert_eq!(nesting_depth(&b, Side::Lower, &[3, 7]).unwrap(), 0);
        assert!(has_unnested_singleton(&b, Side::Upper));
    }

    #[test]
    fn membership_examples() {
        let p = d(3, "{1,3},{1',3'}");
        assert!(!in_ideal_generated_by_dr(&p, Family::M, 1).unwrap());
        let a = d(5, "{1,1'},{2,3},{4',5'}");
        assert!(in_ideal_generated_by_dr(&a, Family::PB, 2).unwrap());
        let top = d(5, "{1,1'},{2,2'}");
        assert!(in_ideal_generated_by_dr(&top, Family::PB, 2).unwrap());
        assert!(matches!(in_ideal_generated_by_dr(&top, Family::PB, 4), Err(Error::OutOfTheoremRange(_))));
        let m = dr_membership(&top, Family::PB, 4).unwrap();
        assert_eq!(m, Membership { member: true, basis: Basis::Closure });

        let x = lambda(4, &[1, 3]).unwrap().compose(&rho(4, &[1, 2]).unwrap());
        assert!(!in_idempotent_generated(&x, Scope::MWhole).unwrap());
        assert!(in_idempotent_generated(&id_set(4, &[2, 4]).unwrap(), Scope::MWhole).unwrap());
        assert!(matches!(
            in_idempotent_generated(&sigma(3, 1, 2).unwrap(), Scope::MWhole),
            Err(Error::FamilyMismatch(_))
        ));
    }

    #[test]
    fn generating_set_sizes() {
        assert_eq!(minimal_generating_set(Target::IdealPb(1), 4).unwrap().len(), 19);
        assert_eq!(minimal_generating_set(Target::IdempotentGeneratedM, 4).unwrap().len(), 10);
        assert_eq!(minimal_generating_set(Target::WholeM, 3).unwrap().len(), 6);
        assert_eq!(minimal_generating_set(Target::IdealM(2), 5).unwrap().len(), 32);
        assert_eq!(minimal_generating_set(Target::IdempotentGeneratedPb, 5).unwrap().len(), 16);
    }
}
