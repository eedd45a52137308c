//! The seven diagram families, enumeration, Green's relations, egg-boxes,
//! ideals and generated subsemigroups.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use num_traits::ToPrimitive;
use serde::Serialize;

use crate::combinatorics::{self, check_rank};
use crate::diagram::{Diagram, FamilyFlags};
use crate::error::{Error, Result};

/// Default cardinality guard for enumeration and closure.
pub const DEFAULT_LIMIT: usize = 5_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Family {
    /// Partial Brauer monoid.
    PB,
    /// Brauer monoid.
    B,
    /// Motzkin monoid.
    M,
    /// Symmetric inverse monoid.
    I,
    /// Jones (Temperley-Lieb) monoid.
    J,
    /// Order-preserving partial bijections.
    O,
    /// Symmetric group.
    S,
}

impl Family {
    pub const ALL: [Family; 7] = [Family::PB, Family::B, Family::M, Family::I, Family::J, Family::O, Family::S];

    pub fn name(self) -> &'static str {
        match self {
            Family::PB => "PB",
            Family::B => "B",
            Family::M => "M",
            Family::I => "I",
            Family::J => "J",
            Family::O => "O",
            Family::S => "S",
        }
    }

    pub fn needs_parity(self) -> bool {
        matches!(self, Family::B | Family::J)
    }

    /// H-classes are trivial.
    pub fn is_aperiodic(self) -> bool {
        matches!(self, Family::M | Family::J | Family::O)
    }

    fn allows_singletons(self) -> bool {
        matches!(self, Family::PB | Family::M | Family::I | Family::O)
    }

    fn allows_hooks(self) -> bool {
        matches!(self, Family::PB | Family::B | Family::M | Family::J)
    }

    fn planar(self) -> bool {
        matches!(self, Family::M | Family::J | Family::O)
    }

    pub fn flag(self, f: &FamilyFlags) -> bool {
        match self {
            Family::PB => f.partial_brauer,
            Family::B => f.brauer,
            Family::M => f.planar,
            Family::I => f.sym_inverse,
            Family::J => f.jones,
            Family::O => f.order,
            Family::S => f.permutation,
        }
    }

    pub fn contains(self, d: &Diagram) -> bool {
        self.flag(&d.families())
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Family> {
        Ok(match s.to_ascii_lowercase().as_str() {
            "pb" => Family::PB,
            "b" => Family::B,
            "m" => Family::M,
            "i" => Family::I,
            "j" => Family::J,
            "o" => Family::O,
            "s" => Family::S,
            _ => return Err(Error::Parse(format!("unknown family {s:?}"))),
        })
    }
}

struct Search<'a, F: FnMut(&Diagram)> {
    family: Family,
    n: usize,
    rank: Option<usize>,
    mate: Vec<u32>,
    chords: Vec<(usize, usize)>,
    transversals: usize,
    visit: &'a mut F,
}

impl<F: FnMut(&Diagram)> Search<'_, F> {
    fn pos(&self, v: usize) -> usize {
        if v < self.n {
            v
        } else {
            3 * self.n - 1 - v
        }
    }

    fn crosses(&self, v: usize, w: usize) -> bool {
        let (p, q) = {
            let (a, b) = (self.pos(v), self.pos(w));
            (a.min(b), a.max(b))
        };
        self.chords.iter().any(|&(a, b)| {
            let inside = |x: usize| p < x && x < q;
            inside(a) != inside(b)
        })
    }

    fn go(&mut self, from: usize) {
        let n = self.n;
        let v = match (from..2 * n).find(|&v| self.mate[v] == u32::MAX) {
            Some(v) => v,
            None => {
                if self.rank.is_none_or(|r| r == self.transversals) {
                    (self.visit)(&Diagram::from_mate_unchecked(n, self.mate.clone()));
                }
                return;
            }
        };
        if let Some(r) = self.rank {
            let free_upper = (v..n).filter(|&u| self.mate[u] == u32::MAX).count();
            if self.transversals > r || self.transversals + free_upper < r {
                return;
            }
        }
        if self.family.allows_singletons() {
            self.mate[v] = v as u32;
            self.go(v + 1);
            self.mate[v] = u32::MAX;
        }
        for w in v + 1..2 * n {
            if self.mate[w] != u32::MAX {
                continue;
            }
            let transversal = v < n && w >= n;
            if !transversal && !self.family.allows_hooks() {
                continue;
            }
            if self.family.planar() && self.crosses(v, w) {
                continue;
            }
            self.mate[v] = w as u32;
            self.mate[w] = v as u32;
            self.transversals += transversal as usize;
            let (pv, pw) = (self.pos(v), self.pos(w));
            self.chords.push((pv, pw));
            self.go(v + 1);
            self.chords.pop();
            self.transversals -= transversal as usize;
            self.mate[v] = u32::MAX;
            self.mate[w] = u32::MAX;
        }
    }
}

fn check_enumeration(family: Family, n: usize, rank: Option<usize>) -> Result<usize> {
    let size = match rank {
        Some(r) => {
            check_rank(family, n, r)?;
            combinatorics::dclass_size(family, n, r)?
        }
        None => combinatorics::family_size(family, n),
    };
    Ok(size.to_usize().unwrap_or(usize::MAX))
}

/// Streams every diagram of the family (of rank `rank`, if given) in
/// ascending canonical order, without materializing the list.
pub fn for_each_diagram<F: FnMut(&Diagram)>(family: Family, n: usize, rank: Option<usize>, mut visit: F) -> Result<()> {
    if let Some(r) = rank {
        check_rank(family, n, r)?;
    }
    let mut search =
        Search { family, n, rank, mate: vec![u32::MAX; 2 * n], chords: Vec::new(), transversals: 0, visit: &mut visit };
    search.go(0);
    Ok(())
}

pub fn enumerate(family: Family, n: usize, rank: Option<usize>) -> Result<Vec<Diagram>> {
    enumerate_limited(family, n, rank, DEFAULT_LIMIT)
}

pub fn enumerate_limited(family: Family, n: usize, rank: Option<usize>, limit: usize) -> Result<Vec<Diagram>> {
    let size = check_enumeration(family, n, rank)?;
    if size > limit {
        return Err(Error::TooLarge { what: format!("{family}_{n}"), size: size.to_string(), limit });
    }
    let mut out = Vec::with_capacity(size);
    for_each_diagram(family, n, rank, |d| out.push(d.clone()))?;
    Ok(out)
}

/// The ideal `I_r`: all elements of rank at most `r`.
pub fn ideal(family: Family, n: usize, r: usize) -> Result<BTreeSet<Diagram>> {
    if r > n {
        return Err(Error::RankOutOfRange { n, r });
    }
    let size = combinatorics::ideal_size(family, n, r)?.to_usize().unwrap_or(usize::MAX);
    if size > DEFAULT_LIMIT {
        return Err(Error::TooLarge {
            what: format!("I_{r}({family}_{n})"),
            size: size.to_string(),
            limit: DEFAULT_LIMIT,
        });
    }
    let mut out = BTreeSet::new();
    for s in 0..=r {
        if check_rank(family, n, s).is_ok() {
            for_each_diagram(family, n, Some(s), |d| {
                out.insert(d.clone());
            })?;
        }
    }
    Ok(out)
}

/// Projections of rank `r`, in canonical order. A projection is determined by
/// its upper half, so only upper halves are searched.
pub fn projections(family: Family, n: usize, r: usize) -> Result<Vec<Diagram>> {
    check_rank(family, n, r)?;
    let mut out = Vec::new();
    let mut upper = vec![u32::MAX; n];
    upper_halves(n, 0, &mut upper, &mut |half| {
        let mut mate = vec![0u32; 2 * n];
        for i in 0..n {
            let w = half[i] as usize;
            if w == n + i {
                mate[i] = (n + i) as u32;
                mate[n + i] = i as u32;
            } else {
                mate[i] = w as u32;
                mate[n + i] = (n + w) as u32;
            }
        }
        let d = Diagram::from_mate_unchecked(n, mate);
        if d.rank() == r && family.contains(&d) {
            out.push(d);
        }
    });
    out.sort();
    Ok(out)
}

/// Upper halves of projections: each point is a singleton, a transversal
/// (encoded as `n + i`) or paired with a later point.
fn upper_halves(n: usize, from: usize, half: &mut Vec<u32>, visit: &mut dyn FnMut(&[u32])) {
    let Some(v) = (from..n).find(|&v| half[v] == u32::MAX) else {
        visit(half);
        return;
    };
    half[v] = v as u32;
    upper_halves(n, v + 1, half, visit);
    half[v] = (n + v) as u32;
    upper_halves(n, v + 1, half, visit);
    for w in v + 1..n {
        if half[w] == u32::MAX {
            half[v] = w as u32;
            half[w] = v as u32;
            upper_halves(n, v + 1, half, visit);
            half[w] = u32::MAX;
        }
    }
    half[v] = u32::MAX;
}

pub fn idempotents(family: Family, n: usize, rank: Option<usize>) -> Result<Vec<Diagram>> {
    Ok(enumerate(family, n, rank)?.into_iter().filter(Diagram::is_idempotent).collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GreenRelation {
    R,
    L,
    H,
    D,
    J,
}

impl GreenRelation {
    pub const ALL: [GreenRelation; 5] =
        [GreenRelation::R, GreenRelation::L, GreenRelation::H, GreenRelation::D, GreenRelation::J];
}

impl FromStr for GreenRelation {
    type Err = Error;

    fn from_str(s: &str) -> Result<GreenRelation> {
        Ok(match s.to_ascii_uppercase().as_str() {
            "R" => GreenRelation::R,
            "L" => GreenRelation::L,
            "H" => GreenRelation::H,
            "D" => GreenRelation::D,
            "J" => GreenRelation::J,
            _ => return Err(Error::Parse(format!("unknown relation {s:?}"))),
        })
    }
}

/// Green's relations via domains, kernels and ranks.
pub fn green_related(a: &Diagram, b: &Diagram, rel: GreenRelation) -> Result<bool> {
    if a.degree() != b.degree() {
        return Err(Error::DegreeMismatch(a.degree(), b.degree()));
    }
    let r = || a.upper_key() == b.upper_key();
    let l = || a.lower_key() == b.lower_key();
    Ok(match rel {
        GreenRelation::R => r(),
        GreenRelation::L => l(),
        GreenRelation::H => r() && l(),
        GreenRelation::D | GreenRelation::J => a.rank() == b.rank(),
    })
}

/// Green's relations computed from principal ideals by brute force over a
/// whole family of one degree.
pub struct GreenOracle {
    index: HashMap<Diagram, usize>,
    r_id: Vec<usize>,
    l_id: Vec<usize>,
    j_id: Vec<usize>,
    rl_pairs: HashSet<(usize, usize)>,
}

type Bits = Vec<u64>;

fn set_bit(b: &mut Bits, i: usize) {
    b[i / 64] |= 1 << (i % 64);
}

fn bits_iter(b: &Bits) -> impl Iterator<Item = usize> + '_ {
    b.iter().enumerate().flat_map(|(w, &word)| (0..64).filter(move |k| word >> k & 1 == 1).map(move |k| w * 64 + k))
}

impl GreenOracle {
    pub fn new(family: Family, n: usize, limit: usize) -> Result<GreenOracle> {
        let elems = enumerate_limited(family, n, None, limit)?;
        let size = elems.len();
        let index: HashMap<Diagram, usize> = elems.iter().cloned().enumerate().map(|(i, d)| (d, i)).collect();
        let words = size.div_ceil(64);
        let class_ids = |ideals: Vec<Bits>| -> (Vec<usize>, Vec<Bits>) {
            let mut ids = HashMap::new();
            let mut distinct = Vec::new();
            let assigned = ideals
                .into_iter()
                .map(|b| {
                    *ids.entry(b.clone()).or_insert_with(|| {
                        distinct.push(b);
                        distinct.len() - 1
                    })
                })
                .collect();
            (assigned, distinct)
        };
        let right: Vec<Bits> = elems
            .iter()
            .map(|x| {
                let mut b = vec![0u64; words];
                for s in &elems {
                    set_bit(&mut b, index[&x.compose(s)]);
                }
                b
            })
            .collect();
        let left: Vec<Bits> = elems
            .iter()
            .map(|x| {
                let mut b = vec![0u64; words];
                for s in &elems {
                    set_bit(&mut b, index[&s.compose(x)]);
                }
                b
            })
            .collect();
        let (r_id, r_ideals) = class_ids(right);
        let (l_id, _) = class_ids(left);
        let two_sided: Vec<Bits> = r_ideals
            .iter()
            .map(|ri| {
                let mut b = vec![0u64; words];
                for y in bits_iter(ri) {
                    for s in &elems {
                        set_bit(&mut b, index[&s.compose(&elems[y])]);
                    }
                }
                b
            })
            .collect();
        let (j_of_r, _) = class_ids(two_sided);
        let j_id = r_id.iter().map(|&r| j_of_r[r]).collect();
        let rl_pairs = r_id.iter().copied().zip(l_id.iter().copied()).collect();
        Ok(GreenOracle { index, r_id, l_id, j_id, rl_pairs })
    }

    pub fn len(&self) -> usize {
        self.r_id.len()
    }

    pub fn is_empty(&self) -> bool {
        self.r_id.is_empty()
    }

    pub fn related(&self, a: &Diagram, b: &Diagram, rel: GreenRelation) -> Result<bool> {
        let find = |d: &Diagram| {
            self.index
                .get(d)
                .copied()
                .ok_or_else(|| Error::FamilyMismatch(format!("{d} is not in the enumerated family")))
        };
        let (i, j) = (find(a)?, find(b)?);
        Ok(match rel {
            GreenRelation::R => self.r_id[i] == self.r_id[j],
            GreenRelation::L => self.l_id[i] == self.l_id[j],
            GreenRelation::H => self.r_id[i] == self.r_id[j] && self.l_id[i] == self.l_id[j],
            // x D y iff some z has x R z and z L y
            GreenRelation::D => self.rl_pairs.contains(&(self.r_id[i], self.l_id[j])),
            GreenRelation::J => self.j_id[i] == self.j_id[j],
        })
    }
}

/// One-shot definitional check; builds a [`GreenOracle`] for the family.
pub fn green_oracle(a: &Diagram, b: &Diagram, rel: GreenRelation, family: Family, n: usize) -> Result<bool> {
    GreenOracle::new(family, n, DEFAULT_LIMIT)?.related(a, b, rel)
}

#[derive(Clone, Debug, Serialize)]
pub struct EggBox {
    pub family: Family,
    pub n: usize,
    pub rank: usize,
    /// The projection of each R-class (rows).
    pub rows: Vec<Diagram>,
    /// The projection of each L-class (columns).
    pub cols: Vec<Diagram>,
    pub cells: Vec<Vec<Vec<Diagram>>>,
    pub idempotent: Vec<Vec<bool>>,
}

impl EggBox {
    pub fn hclass_sizes(&self) -> BTreeSet<usize> {
        self.cells.iter().flatten().map(Vec::len).collect()
    }

    pub fn size(&self) -> usize {
        self.cells.iter().flatten().map(Vec::len).sum()
    }

    pub fn to_dot(&self) -> String {
        let mut s = format!(
            "digraph eggbox {{\n  label=\"D_{}({}_{})\";\n  node [shape=box];\n",
            self.rank, self.family, self.n
        );
        for (i, row) in self.cells.iter().enumerate() {
            for (j, cell) in row.iter().enumerate() {
                let label = cell.first().map(|d| d.to_string()).unwrap_or_default();
                let style = if self.idempotent[i][j] { ", style=filled, fillcolor=gray80" } else { "" };
                s.push_str(&format!(
                    "  h_{i}_{j} [label=\"{label}\\n|H|={}\", rank={}, row={i}, col={j}, pos=\"{j},-{i}!\"{style}];\n",
                    cell.len(),
                    self.rank
                ));
            }
        }
        s.push_str("}\n");
        s
    }
}

pub fn egg_box(family: Family, n: usize, r: usize) -> Result<EggBox> {
    let elems = enumerate(family, n, Some(r))?;
    let rows = projections(family, n, r)?;
    let cols = rows.clone();
    let row_of: HashMap<Vec<u32>, usize> = rows.iter().enumerate().map(|(i, p)| (p.upper_key(), i)).collect();
    let col_of: HashMap<Vec<u32>, usize> = cols.iter().enumerate().map(|(j, p)| (p.lower_key(), j)).collect();
    let mut cells = vec![vec![Vec::new(); cols.len()]; rows.len()];
    for d in elems {
        let i = row_of[&d.upper_key()];
        let j = col_of[&d.lower_key()];
        cells[i][j].push(d);
    }
    let idempotent = cells
        .iter()
        .map(|row: &Vec<Vec<Diagram>>| row.iter().map(|c| c.iter().any(Diagram::is_idempotent)).collect())
        .collect();
    Ok(EggBox { family, n, rank: r, rows, cols, cells, idempotent })
}

/// The subsemigroup generated by `gens`. Every product of generators is a
/// shorter product times one generator, so right multiplication suffices.
pub fn closure(gens: &[Diagram], bound: usize) -> Result<BTreeSet<Diagram>> {
    let Some(first) = gens.first() else {
        return Ok(BTreeSet::new());
    };
    let n = first.degree();
    if let Some(g) = gens.iter().find(|g| g.degree() != n) {
        return Err(Error::DegreeMismatch(n, g.degree()));
    }
    #[cfg(debug_assertions)]
    let flags = gens.iter().map(Diagram::families).reduce(and_flags).unwrap();
    let mut seen: HashSet<Diagram> = HashSet::new();
    let mut frontier: Vec<Diagram> = Vec::new();
    for g in gens {
        if seen.insert(g.clone()) {
            frontier.push(g.clone());
        }
    }
    if seen.len() > bound {
        return Err(Error::BoundExceeded { bound, partial: seen.len() });
    }
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for x in &frontier {
            for g in gens {
                let p = x.compose(g);
                if !seen.contains(&p) {
                    #[cfg(debug_assertions)]
                    debug_assert!(implies(&flags, &p.families()));
                    if seen.len() >= bound {
                        return Err(Error::BoundExceeded { bound, partial: seen.len() });
                    }
                    seen.insert(p.clone());
                    next.push(p);
                }
            }
        }
        frontier = next;
    }
    Ok(seen.into_iter().collect())
}

#[cfg(debug_assertions)]
fn and_flags(a: FamilyFlags, b: FamilyFlags) -> FamilyFlags {
    FamilyFlags {
        partial_brauer: a.partial_brauer && b.partial_brauer,
        brauer: a.brauer && b.brauer,
        sym_inverse: a.sym_inverse && b.sym_inverse,
        planar: a.planar && b.planar,
        jones: a.jones && b.jones,
        order: a.order && b.order,
        permutation: a.permutation && b.permutation,
    }
}

#[cfg(debug_assertions)]
fn implies(held: &FamilyFlags, got: &FamilyFlags) -> bool {
    Family::ALL.iter().all(|f| !f.flag(held) || f.flag(got))
}

/// `|P(D_r)|` elements whose closure contains `D_r`, for an aperiodic family:
/// with projections `p_1, …, p_k`, the elements joining the upper half of
/// `p_i` to the lower half of `p_{i+1}` (indices mod `k`).
pub fn dclass_generating_set(family: Family, n: usize, r: usize) -> Result<Vec<Diagram>> {
    if !family.is_aperiodic() {
        return Err(Error::FamilyMismatch(format!("{family} is not aperiodic")));
    }
    let ps = projections(family, n, r)?;
    let k = ps.len();
    (0..k).map(|i| Diagram::join_halves(&ps[i], &ps[(i + 1) % k])).collect()
}
