//! The diagram value type: a partition of `{1..n} ∪ {1'..n'}` into blocks of
//! size at most two, stored as an involution on `2n` point indices.
//!
//! Upper vertex `i` (1-based) has index `i - 1`, lower vertex `i'` has index
//! `n + i - 1`. A singleton block is a fixed point of the involution.

use std::fmt;
use std::ops::Mul;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A boundary vertex, 1-based as written on the page.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Point {
    Upper(usize),
    Lower(usize),
}

impl Point {
    fn index(self, n: usize) -> Result<usize> {
        let (k, off) = match self {
            Point::Upper(k) => (k, 0),
            Point::Lower(k) => (k, n),
        };
        if k == 0 || k > n {
            return Err(Error::OutOfRange { point: self.to_string(), n });
        }
        Ok(off + k - 1)
    }

    fn from_index(v: usize, n: usize) -> Point {
        if v < n {
            Point::Upper(v + 1)
        } else {
            Point::Lower(v - n + 1)
        }
    }

    /// JSON encoding: upper `k` is `k`, lower `k'` is `-k`.
    pub fn to_signed(self) -> i64 {
        match self {
            Point::Upper(k) => k as i64,
            Point::Lower(k) => -(k as i64),
        }
    }

    pub fn from_signed(x: i64) -> Result<Point> {
        match x {
            0 => Err(Error::Parse("point 0 does not exist".into())),
            x if x > 0 => Ok(Point::Upper(x as usize)),
            x => Ok(Point::Lower(x.unsigned_abs() as usize)),
        }
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Point::Upper(k) => write!(f, "{k}"),
            Point::Lower(k) => write!(f, "{k}'"),
        }
    }
}

/// An element of the partial Brauer monoid of degree `n`.
///
/// Equality, hashing and ordering are by `(n, mate)`; the derived order is the
/// canonical encoding order used by enumeration.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Diagram {
    n: usize,
    mate: Box<[u32]>,
}

/// The product diagram together with the number of floating loops and paths
/// of the product graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductResult {
    pub product: Diagram,
    pub loops: u32,
    pub paths: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiagramStats {
    pub rank: usize,
    pub dom: Vec<usize>,
    pub codom: Vec<usize>,
    pub ker: Vec<Vec<usize>>,
    pub coker: Vec<Vec<usize>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyFlags {
    pub partial_brauer: bool,
    pub brauer: bool,
    pub sym_inverse: bool,
    pub planar: bool,
    pub jones: bool,
    pub order: bool,
    pub permutation: bool,
}

impl Diagram {
    /// Builds a diagram from its non-singleton (or singleton) blocks; unlisted
    /// points become singletons.
    pub fn new<B: AsRef<[Point]>>(n: usize, blocks: &[B]) -> Result<Diagram> {
        if 2 * n > u32::MAX as usize {
            return Err(Error::InvalidParameter(format!("degree {n} is too large")));
        }
        let mut mate: Vec<u32> = vec![u32::MAX; 2 * n];
        for block in blocks {
            let block = block.as_ref();
            if block.len() > 2 {
                return Err(Error::OversizedBlock(block.iter().map(|p| p.to_string()).collect()));
            }
            let mut idx = Vec::with_capacity(2);
            for &p in block {
                let v = p.index(n)?;
                if mate[v] != u32::MAX || idx.contains(&v) {
                    return Err(Error::DuplicatePoint(p.to_string()));
                }
                idx.push(v);
            }
            match idx[..] {
                [v] => mate[v] = v as u32,
                [v, w] => {
                    mate[v] = w as u32;
                    mate[w] = v as u32;
                }
                _ => {}
            }
        }
        for (v, m) in mate.iter_mut().enumerate() {
            if *m == u32::MAX {
                *m = v as u32;
            }
        }
        Ok(Diagram { n, mate: mate.into_boxed_slice() })
    }

    /// Builds a diagram from a list of index pairs (0-based, lower points
    /// offset by `n`). Used by constructors that already know the layout.
    pub(crate) fn from_pairs(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Diagram {
        let mut mate: Vec<u32> = (0..2 * n as u32).collect();
        for (v, w) in pairs {
            debug_assert!(mate[v] == v as u32 && mate[w] == w as u32 && v != w);
            mate[v] = w as u32;
            mate[w] = v as u32;
        }
        Diagram { n, mate: mate.into_boxed_slice() }
    }

    /// Checks the involution property of a raw mate array.
    pub fn from_mate(n: usize, mate: Vec<u32>) -> Result<Diagram> {
        if mate.len() != 2 * n {
            return Err(Error::InvalidParameter(format!("mate array has length {} but degree is {n}", mate.len())));
        }
        for (v, &w) in mate.iter().enumerate() {
            let w = w as usize;
            if w >= 2 * n {
                return Err(Error::OutOfRange { point: w.to_string(), n });
            }
            if mate[w] as usize != v {
                return Err(Error::DuplicatePoint(Point::from_index(w, n).to_string()));
            }
        }
        Ok(Diagram { n, mate: mate.into_boxed_slice() })
    }

    pub(crate) fn from_mate_unchecked(n: usize, mate: Vec<u32>) -> Diagram {
        debug_assert!(mate.iter().enumerate().all(|(v, &w)| mate[w as usize] as usize == v));
        Diagram { n, mate: mate.into_boxed_slice() }
    }

    pub fn identity(n: usize) -> Diagram {
        Diagram::from_pairs(n, (0..n).map(|i| (i, n + i)))
    }

    /// The rank-0 diagram whose blocks are all singletons.
    pub fn singletons(n: usize) -> Diagram {
        Diagram::from_pairs(n, std::iter::empty())
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn mate_slice(&self) -> &[u32] {
        &self.mate
    }

    /// The partner of a point, or the point itself if it is a singleton.
    pub fn partner(&self, p: Point) -> Result<Point> {
        let v = p.index(self.n)?;
        Ok(Point::from_index(self.mate[v] as usize, self.n))
    }

    /// Non-singleton blocks in canonical order.
    pub fn blocks(&self) -> Vec<(Point, Point)> {
        let n = self.n;
        self.mate
            .iter()
            .enumerate()
            .filter(|&(v, &w)| (w as usize) > v)
            .map(|(v, &w)| (Point::from_index(v, n), Point::from_index(w as usize, n)))
            .collect()
    }

    /// All blocks, singletons included, ordered by their least point.
    pub fn all_blocks(&self) -> Vec<Vec<Point>> {
        let n = self.n;
        self.mate
            .iter()
            .enumerate()
            .filter(|&(v, &w)| (w as usize) >= v)
            .map(|(v, &w)| {
                if w as usize == v {
                    vec![Point::from_index(v, n)]
                } else {
                    vec![Point::from_index(v, n), Point::from_index(w as usize, n)]
                }
            })
            .collect()
    }

    pub fn rank(&self) -> usize {
        let n = self.n;
        self.mate[..n].iter().filter(|&&w| w as usize >= n).count()
    }

    pub fn is_transversal_upper(&self, i: usize) -> bool {
        self.mate[i] as usize >= self.n
    }

    /// Upper half as a key: upper partner index, own index for a singleton,
    /// `u32::MAX` for a transversal. Two diagrams are R-related in any of the
    /// families iff their upper keys agree.
    pub fn upper_key(&self) -> Vec<u32> {
        let n = self.n as u32;
        self.mate[..self.n].iter().map(|&w| if w >= n { u32::MAX } else { w }).collect()
    }

    /// Lower half as a key, dual to [`Diagram::upper_key`].
    pub fn lower_key(&self) -> Vec<u32> {
        let n = self.n as u32;
        self.mate[self.n..].iter().map(|&w| if w < n { u32::MAX } else { w - n }).collect()
    }

    pub fn dom(&self) -> Vec<usize> {
        (0..self.n).filter(|&i| self.mate[i] as usize >= self.n).map(|i| i + 1).collect()
    }

    pub fn codom(&self) -> Vec<usize> {
        let n = self.n;
        (0..n).filter(|&j| (self.mate[n + j] as usize) < n).map(|j| j + 1).collect()
    }

    pub fn stats(&self) -> DiagramStats {
        let n = self.n;
        let classes = |off: usize| -> Vec<Vec<usize>> {
            let mut out = Vec::new();
            for i in 0..n {
                let w = self.mate[off + i] as usize;
                let same_side = w >= off && w < off + n;
                if !same_side || w == off + i {
                    out.push(vec![i + 1]);
                } else if w > off + i {
                    out.push(vec![i + 1, w - off + 1]);
                }
            }
            out
        };
        DiagramStats { rank: self.rank(), dom: self.dom(), codom: self.codom(), ker: classes(0), coker: classes(n) }
    }

    /// Reflection in the horizontal axis.
    pub fn star(&self) -> Diagram {
        let n = self.n;
        let flip = |v: usize| if v < n { v + n } else { v - n };
        let mut mate = vec![0u32; 2 * n];
        for v in 0..2 * n {
            mate[flip(v)] = flip(self.mate[v] as usize) as u32;
        }
        Diagram { n, mate: mate.into_boxed_slice() }
    }

    /// Concatenates the product graph and reads off the product together with
    /// its floating loop and path counts.
    pub fn multiply(&self, other: &Diagram) -> Result<ProductResult> {
        if self.n != other.n {
            return Err(Error::DegreeMismatch(self.n, other.n));
        }
        let (product, loops, paths) = product_graph(self.n, &self.mate, &other.mate, true);
        Ok(ProductResult { product, loops, paths })
    }

    /// Product without floating counts. Panics on a degree mismatch.
    pub fn compose(&self, other: &Diagram) -> Diagram {
        assert_eq!(self.n, other.n, "degree mismatch in diagram product");
        product_graph(self.n, &self.mate, &other.mate, false).0
    }

    /// Floating loop and path counts of the product graph.
    pub fn floating(&self, other: &Diagram) -> Result<(u32, u32)> {
        let r = self.multiply(other)?;
        Ok((r.loops, r.paths))
    }

    pub fn is_idempotent(&self) -> bool {
        &self.compose(self) == self
    }

    pub fn is_projection(&self) -> bool {
        self.star() == *self && self.is_idempotent()
    }

    pub fn is_brauer(&self) -> bool {
        self.mate.iter().enumerate().all(|(v, &w)| w as usize != v)
    }

    /// No upper or lower hooks.
    pub fn is_sym_inverse(&self) -> bool {
        let n = self.n;
        self.mate.iter().enumerate().all(|(v, &w)| (v < n) != ((w as usize) < n) || w as usize == v)
    }

    /// Non-crossing as chords on the boundary cycle `1, …, n, n', …, 1'`.
    pub fn is_planar(&self) -> bool {
        let n = self.n;
        let pos = |v: usize| if v < n { v } else { 3 * n - 1 - v };
        let mut at = vec![0usize; 2 * n];
        for v in 0..2 * n {
            at[pos(v)] = v;
        }
        let mut stack: Vec<usize> = Vec::new();
        for p in 0..2 * n {
            let v = at[p];
            let w = self.mate[v] as usize;
            if w == v {
                continue;
            }
            let q = pos(w);
            if q > p {
                stack.push(q);
            } else if stack.pop() != Some(p) {
                return false;
            }
        }
        true
    }

    pub fn families(&self) -> FamilyFlags {
        let brauer = self.is_brauer();
        let sym_inverse = self.is_sym_inverse();
        let planar = self.is_planar();
        FamilyFlags {
            partial_brauer: true,
            brauer,
            sym_inverse,
            planar,
            jones: brauer && planar,
            order: sym_inverse && planar,
            permutation: brauer && sym_inverse,
        }
    }

    /// Lays the boundary out on a line in the order `1, …, n, n', …, 1'`,
    /// relabels it `1, …, 2n` and mirrors it, giving a rank-0 projection of
    /// degree `2n`.
    pub fn unfold(&self) -> Diagram {
        let n = self.n;
        let m = 2 * n;
        let pos = |v: usize| if v < n { v } else { 3 * n - 1 - v };
        let mut mate = vec![0u32; 2 * m];
        for v in 0..m {
            let p = pos(v);
            let q = pos(self.mate[v] as usize);
            mate[p] = q as u32;
            mate[m + p] = (m + q) as u32;
        }
        Diagram { n: m, mate: mate.into_boxed_slice() }
    }

    /// The diagram with the upper half of `upper` and the lower half of
    /// `lower`, its transversals joining `dom(upper)` to `codom(lower)` in
    /// increasing order.
    pub fn join_halves(upper: &Diagram, lower: &Diagram) -> Result<Diagram> {
        let n = upper.n;
        if lower.n != n {
            return Err(Error::DegreeMismatch(n, lower.n));
        }
        let dom = upper.dom();
        let codom = lower.codom();
        if dom.len() != codom.len() {
            return Err(Error::InvalidParameter(format!("halves have ranks {} and {}", dom.len(), codom.len())));
        }
        let mut mate: Vec<u32> = (0..2 * n as u32).collect();
        for i in 0..n {
            let w = upper.mate[i] as usize;
            if w < n {
                mate[i] = w as u32;
            }
            let w = lower.mate[n + i] as usize;
            if w >= n {
                mate[n + i] = w as u32;
            }
        }
        for (&i, &j) in dom.iter().zip(&codom) {
            mate[i - 1] = (n + j - 1) as u32;
            mate[n + j - 1] = (i - 1) as u32;
        }
        Ok(Diagram { n, mate: mate.into_boxed_slice() })
    }

    /// Parses either the canonical text form (`{1,3},{2,3'}`, which needs the
    /// degree) or the JSON form (which carries it).
    pub fn parse(s: &str, n: Option<usize>) -> Result<Diagram> {
        let t = s.trim();
        if t.starts_with('{') && t.contains("\"n\"") {
            return Diagram::from_json(t);
        }
        match n {
            Some(n) => Diagram::parse_text(n, t),
            None => Err(Error::Parse("the text form needs an explicit degree".into())),
        }
    }

    pub fn parse_text(n: usize, s: &str) -> Result<Diagram> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut blocks: Vec<Vec<Point>> = Vec::new();
        let mut rest = s.as_str();
        while !rest.is_empty() {
            let body = rest.strip_prefix('{').ok_or_else(|| Error::Parse(format!("expected '{{' at {rest:?}")))?;
            let close = body.find('}').ok_or_else(|| Error::Parse("unclosed block".into()))?;
            let inner = &body[..close];
            let mut block = Vec::new();
            if !inner.is_empty() {
                for tok in inner.split(',') {
                    block.push(parse_point(tok)?);
                }
            }
            blocks.push(block);
            rest = &body[close + 1..];
            if let Some(r) = rest.strip_prefix(',') {
                rest = r;
            } else if !rest.is_empty() {
                return Err(Error::Parse(format!("expected ',' at {rest:?}")));
            }
        }
        Diagram::new(n, &blocks)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_json_repr()).expect("diagram json")
    }

    pub fn from_json(s: &str) -> Result<Diagram> {
        let repr: DiagramJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        repr.into_diagram()
    }

    fn to_json_repr(&self) -> DiagramJson {
        DiagramJson {
            n: self.n,
            blocks: self.blocks().into_iter().map(|(a, b)| vec![a.to_signed(), b.to_signed()]).collect(),
        }
    }
}

fn parse_point(tok: &str) -> Result<Point> {
    let (digits, lower) = match tok.strip_suffix('\'').or_else(|| tok.strip_suffix('′')) {
        Some(d) => (d, true),
        None => (tok, false),
    };
    let k: usize = digits.parse().map_err(|_| Error::Parse(format!("bad point {tok:?}")))?;
    Ok(if lower { Point::Lower(k) } else { Point::Upper(k) })
}

#[derive(Serialize, Deserialize)]
struct DiagramJson {
    n: usize,
    blocks: Vec<Vec<i64>>,
}

impl DiagramJson {
    fn into_diagram(self) -> Result<Diagram> {
        let blocks = self
            .blocks
            .iter()
            .map(|b| b.iter().map(|&x| Point::from_signed(x)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Diagram::new(self.n, &blocks)
    }
}

impl Serialize for Diagram {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json_repr().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Diagram {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        DiagramJson::deserialize(deserializer)?.into_diagram().map_err(serde::de::Error::custom)
    }
}

/// Canonical text form. A diagram with only singleton blocks prints as `{}`.
impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let blocks = self.blocks();
        if blocks.is_empty() {
            return f.write_str("{}");
        }
        for (k, (a, b)) in blocks.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{{{a},{b}}}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Diagram[{}]({self})", self.n)
    }
}

impl Mul for &Diagram {
    type Output = Diagram;

    fn mul(self, rhs: &Diagram) -> Diagram {
        self.compose(rhs)
    }
}

/// Walks the product graph. Vertices: top row of `a` (its upper points), the
/// middle row (lower of `a` = upper of `b`), and the bottom row of `b`. Every
/// vertex has degree at most two, so each component is a path or a cycle and
/// can be traced directly.
fn product_graph(n: usize, a: &[u32], b: &[u32], count: bool) -> (Diagram, u32, u32) {
    const UNSET: u32 = u32::MAX;
    let mut out = vec![UNSET; 2 * n];
    let mut seen = vec![false; n];

    for i in 0..n {
        if out[i] != UNSET {
            continue;
        }
        let mut p = a[i] as usize;
        if p == i {
            out[i] = i as u32;
            continue;
        }
        if p < n {
            out[i] = p as u32;
            out[p] = i as u32;
            continue;
        }
        loop {
            let k = p - n;
            seen[k] = true;
            let q = b[k] as usize;
            if q == k {
                out[i] = i as u32;
                break;
            }
            if q >= n {
                out[i] = q as u32;
                out[q] = i as u32;
                break;
            }
            seen[q] = true;
            let r = a[n + q] as usize;
            if r == n + q {
                out[i] = i as u32;
                break;
            }
            if r < n {
                out[i] = r as u32;
                out[r] = i as u32;
                break;
            }
            p = r;
        }
    }

    for v in n..2 * n {
        if out[v] != UNSET {
            continue;
        }
        let mut q = b[v] as usize;
        if q == v {
            out[v] = v as u32;
            continue;
        }
        if q >= n {
            out[v] = q as u32;
            out[q] = v as u32;
            continue;
        }
        loop {
            seen[q] = true;
            let r = a[n + q] as usize;
            if r == n + q {
                out[v] = v as u32;
                break;
            }
            if r < n {
                out[v] = r as u32;
                out[r] = v as u32;
                break;
            }
            let k = r - n;
            seen[k] = true;
            let s = b[k] as usize;
            if s == k {
                out[v] = v as u32;
                break;
            }
            if s >= n {
                out[v] = s as u32;
                out[s] = v as u32;
                break;
            }
            q = s;
        }
    }

    let (mut loops, mut paths) = (0u32, 0u32);
    if count {
        let mut stack = Vec::new();
        for k in 0..n {
            if seen[k] {
                continue;
            }
            seen[k] = true;
            stack.push(k);
            let (mut verts, mut degree) = (0usize, 0usize);
            while let Some(u) = stack.pop() {
                verts += 1;
                let x = a[n + u] as usize;
                if x != n + u {
                    degree += 1;
                    let w = x - n;
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
                let y = b[u] as usize;
                if y != u {
                    degree += 1;
                    if !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
            if degree / 2 == verts {
                loops += 1;
            } else {
                paths += 1;
            }
        }
    }

    (Diagram::from_mate_unchecked(n, out), loops, paths)
}

#[cfg(test)]
mod tests {
    use super::*;
    use Point::{Lower as L, Upper as U};

    pub(crate) fn d(n: usize, s: &str) -> Diagram {
        Diagram::parse_text(n, s).unwrap()
    }

    #[test]
    fn builds_the_pb6_example() {
        let alpha = Diagram::new(6, &[vec![U(1), U(3)], vec![U(2), L(3)], vec![U(5), U(6)], vec![L(4), L(5)]]).unwrap();
        assert_eq!(alpha.to_string(), "{1,3},{2,3'},{5,6},{4',5'}");
        assert_eq!(alpha.rank(), 1);
        assert_eq!(alpha.dom(), vec![2]);
        assert_eq!(alpha.codom(), vec![3]);
        assert_eq!(d(6, "{1,3},{2,3'},{5,6},{4',5'}"), alpha);
    }

    #[test]
    fn degenerate_degrees() {
        let e = Diagram::new::<Vec<Point>>(0, &[]).unwrap();
        assert_eq!(e, Diagram::identity(0));
        assert_eq!(e.rank(), 0);
        let s = Diagram::new::<Vec<Point>>(3, &[]).unwrap();
        assert_eq!(s.rank(), 0);
        assert_eq!(s.to_string(), "{}");
        assert_eq!(d(3, "{}"), s);
        assert_eq!(d(3, ""), s);
        assert_eq!(d(3, "{1},{2'}"), s);
    }

    #[test]
    fn construction_errors() {
        assert!(matches!(Diagram::new(2, &[vec![U(3)]]), Err(Error::OutOfRange { .. })));
        assert!(matches!(Diagram::new(2, &[vec![U(0)]]), Err(Error::OutOfRange { .. })));
        assert!(matches!(Diagram::new(2, &[vec![U(1), L(1)], vec![U(1), U(2)]]), Err(Error::DuplicatePoint(_))));
        assert!(matches!(Diagram::new(2, &[vec![U(1), U(1)]]), Err(Error::DuplicatePoint(_))));
        assert!(matches!(Diagram::new(3, &[vec![U(1), U(2), U(3)]]), Err(Error::OversizedBlock(_))));
        assert!(Diagram::from_mate(2, vec![1, 0, 3, 3]).is_err());
        assert!(Diagram::parse_text(2, "{1,2").is_err());
        assert!(Diagram::parse_text(2, "{1,x}").is_err());
    }

    #[test]
    fn json_round_trip() {
        let a = d(6, "{1,3},{2,3'},{5,6},{4',5'}");
        let js = a.to_json();
        assert_eq!(js, r#"{"n":6,"blocks":[[1,3],[2,-3],[5,6],[-4,-5]]}"#);
        assert_eq!(Diagram::from_json(&js).unwrap(), a);
        assert_eq!(Diagram::parse(&js, None).unwrap(), a);
        assert!(Diagram::parse("{1,3}", None).is_err());
    }

    #[test]
    fn figure_one_product() {
        let a = d(12, "{1,3},{2,2'},{5,9},{6,8},{10,11},{12,11'},{3',6'},{4',5'},{7',10'},{8',9'}");
        let b = d(12, "{2,3},{4,7'},{5,4'},{6,5'},{8,9},{10,12},{1',3'},{8',9'},{11',12'}");
        let r = a.multiply(&b).unwrap();
        assert_eq!(r.product, d(12, "{1,3},{2,5'},{5,9},{6,8},{10,11},{1',3'},{4',7'},{8',9'},{11',12'}"));
        assert_eq!((r.loops, r.paths), (1, 2));
    }

    #[test]
    fn small_products() {
        let tau = d(2, "{1,2},{1',2'}");
        let r = tau.multiply(&tau).unwrap();
        assert_eq!((r.product.clone(), r.loops, r.paths), (tau.clone(), 1, 0));
        let eps = d(2, "{2,2'}");
        let r = eps.multiply(&eps).unwrap();
        assert_eq!((r.product.clone(), r.loops, r.paths), (eps.clone(), 0, 1));
        let one = Diagram::identity(2);
        let r = one.multiply(&tau).unwrap();
        assert_eq!((r.product, r.loops, r.paths), (tau.clone(), 0, 0));
        assert!(matches!(one.multiply(&Diagram::identity(3)), Err(Error::DegreeMismatch(2, 3))));
    }

    #[test]
    fn star_examples() {
        let a = d(6, "{1,3},{2,3'},{5,6},{4',5'}");
        assert_eq!(a.star(), d(6, "{4,5},{3,2'},{1',3'},{5',6'}"));
        assert_eq!(Diagram::identity(4).star(), Diagram::identity(4));
    }

    #[test]
    fn stats_of_pb8_example() {
        let e = d(8, "{4,6'},{7,5'},{8,8'},{1',2'},{3',4'}");
        let s = e.stats();
        assert_eq!(s.rank, 3);
        assert_eq!(s.dom, vec![4, 7, 8]);
        assert_eq!(s.codom, vec![5, 6, 8]);
        assert!(s.ker.iter().all(|c| c.len() == 1));
        let nontrivial: Vec<_> = s.coker.iter().filter(|c| c.len() == 2).cloned().collect();
        assert_eq!(nontrivial, vec![vec![1, 2], vec![3, 4]]);
        let id = Diagram::identity(5).stats();
        assert_eq!(id.rank, 5);
        assert_eq!(id.dom, vec![1, 2, 3, 4, 5]);
        assert_eq!(id.codom, id.dom);
    }

    #[test]
    fn family_flags() {
        let alpha = d(6, "{1,3},{2,3'},{5,6},{4',5'}");
        let beta = d(6, "{1,3},{4,3'},{5,6},{4',5'}");
        assert!(beta.is_planar());
        assert!(!alpha.is_planar());
        let f = Diagram::identity(4).families();
        assert!(f.brauer && f.sym_inverse && f.planar && f.jones && f.order && f.permutation);
        let sigma = d(2, "{1,2'},{2,1'}");
        let f = sigma.families();
        assert!(f.permutation && !f.planar);
        // the M_7 example with hooks {3,7},{4,5} on both sides
        assert!(d(7, "{1,1'},{3,7},{4,5},{3',7'},{4',5'}").is_planar());
    }

    #[test]
    fn idempotents_and_projections() {
        let e20 = d(
            20,
            "{1,7'},{8,8'},{20,17'},{2,7},{3,4},{5,6},{9,12},{13,18},{14,17},{15,16},\
             {1',4'},{2',3'},{9',16'},{10',11'},{12',15'},{13',14'},{18',20'}",
        );
        assert!(e20.is_planar());
        assert!(e20.is_idempotent());
        assert!(!e20.is_projection());
        assert!(d(4, "{1,3},{1',3'},{2,2'}").is_projection());
        assert!(!d(2, "{1,2'},{2,1'}").is_idempotent());
    }

    #[test]
    fn unfold_examples() {
        let a = d(6, "{2,3'},{3,6},{4,5},{1',2'},{4',6'}");
        let u = a.unfold();
        assert_eq!(u, d(12, "{2,10},{3,6},{4,5},{7,9},{11,12},{2',10'},{3',6'},{4',5'},{7',9'},{11',12'}"));
        assert!(u.is_projection() && u.rank() == 0 && u.is_planar());
        assert_eq!(Diagram::identity(1).unfold(), d(2, "{1,2},{1',2'}"));
    }
}
