//! Verification suites. They use only the public library surface.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use diagram_monoids::algebra::{check_cellular_axiom, gram_matrix, gram_rank_at, semisimple_check, twist, Polynomial2};
use diagram_monoids::combinatorics::{
    dclass_size, ideal_size, motzkin, motzkin_m, rank_of_ideal, rank_of_idempotent_generated, rclass_count,
    riordan_mprime,
};
use diagram_monoids::monoid::{
    closure, enumerate, green_related, ideal, idempotents, projections, GreenOracle, GreenRelation,
};
use diagram_monoids::random::{random_pb, Sampler};
use diagram_monoids::structure::{
    id_set, in_ideal_generated_by_dr, in_idempotent_generated, minimal_generating_set, normal_form, sigma_set, Scope,
    Target,
};
use diagram_monoids::{Diagram, Error, Family, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::golden;
use crate::report::{Claim, VerificationReport};

pub const DEFAULT_SEED: u64 = 0x5eed;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableKind {
    Motzkin,
    Riordan,
    IdealSize,
    Rank,
    IdempotentGeneratedRank,
}

impl TableKind {
    pub const ALL: [TableKind; 5] = [
        TableKind::Motzkin,
        TableKind::Riordan,
        TableKind::IdealSize,
        TableKind::Rank,
        TableKind::IdempotentGeneratedRank,
    ];

    fn label(self, family: Family, n: usize, r: Option<usize>) -> String {
        let r = r.unwrap_or(0);
        match self {
            TableKind::Motzkin => format!("m({n},{r})"),
            TableKind::Riordan => format!("m'({n},{r})"),
            TableKind::IdealSize => format!("|I_{r}({family}_{n})|"),
            TableKind::Rank => format!("rank I_{r}({family}_{n})"),
            TableKind::IdempotentGeneratedRank => format!("rank E({family}_{n})"),
        }
    }

    fn indexed_by_rank(self) -> bool {
        self != TableKind::IdempotentGeneratedRank
    }
}

impl FromStr for TableKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "m" | "motzkin" => TableKind::Motzkin,
            "mprime" | "riordan" => TableKind::Riordan,
            "ideal-size" | "size" => TableKind::IdealSize,
            "rank" => TableKind::Rank,
            "idempotent-rank" | "erank" => TableKind::IdempotentGeneratedRank,
            _ => return Err(Error::Parse(format!("unknown table {s:?}"))),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub n: usize,
    pub r: Option<usize>,
    pub value: String,
}

/// The embedded reference table, if one exists for this kind and family.
pub fn golden_table(kind: TableKind, family: Family) -> Option<Vec<TableRow>> {
    let tri: &[&[u64]] = match (kind, family) {
        (TableKind::Motzkin, _) => golden::MOTZKIN_TRIANGLE,
        (TableKind::Riordan, _) => golden::RIORDAN_TRIANGLE,
        (TableKind::IdealSize, Family::PB) => golden::PB_IDEAL_SIZES,
        (TableKind::IdealSize, Family::M) => golden::M_IDEAL_SIZES,
        (TableKind::Rank, Family::PB) => golden::PB_IDEAL_RANKS,
        (TableKind::Rank, Family::M) => golden::M_IDEAL_RANKS,
        (TableKind::IdempotentGeneratedRank, Family::PB | Family::M) => {
            let row = if family == Family::PB {
                golden::PB_IDEMPOTENT_GENERATED_RANKS
            } else {
                golden::M_IDEMPOTENT_GENERATED_RANKS
            };
            return Some(row.iter().enumerate().map(|(n, v)| TableRow { n, r: None, value: v.to_string() }).collect());
        }
        _ => return None,
    };
    let mut rows = Vec::new();
    for (n, row) in tri.iter().enumerate() {
        for (r, v) in row.iter().enumerate() {
            rows.push(TableRow { n, r: Some(r), value: v.to_string() });
        }
    }
    Some(rows)
}

fn table_value(kind: TableKind, family: Family, n: usize, r: Option<usize>) -> Result<Option<String>> {
    let v = match (kind, r) {
        (TableKind::Motzkin, Some(r)) => motzkin_m(n as i64, r as i64),
        (TableKind::Riordan, Some(r)) => riordan_mprime(n as i64, r as i64),
        (TableKind::IdealSize, Some(r)) => ideal_size(family, n, r)?,
        (TableKind::Rank, Some(r)) => match rank_of_ideal(family, n, r) {
            Ok(v) => v.rank,
            Err(Error::ParityInvalid { .. }) => return Ok(None),
            Err(e) => return Err(e),
        },
        (TableKind::IdempotentGeneratedRank, None) => rank_of_idempotent_generated(family, n, None)?,
        _ => return Ok(None),
    };
    Ok(Some(v.to_string()))
}

/// Computes a table for `n ≤ max_n` from the closed formulas.
pub fn compute_table(kind: TableKind, family: Family, max_n: usize) -> Result<Vec<TableRow>> {
    let mut rows = Vec::new();
    for n in 0..=max_n {
        let ranks: Vec<Option<usize>> = if kind.indexed_by_rank() { (0..=n).map(Some).collect() } else { vec![None] };
        for r in ranks {
            if let Some(value) = table_value(kind, family, n, r)? {
                rows.push(TableRow { n, r, value });
            }
        }
    }
    Ok(rows)
}

/// Compares computed values with the embedded tables. Rows with `n > max_n`
/// are skipped, except for the idempotent-generated ranks which are always
/// checked in full.
pub fn compare_table(rep: &mut VerificationReport, kind: TableKind, family: Family, max_n: usize) -> Result<()> {
    let Some(gold) = golden_table(kind, family) else {
        return Err(Error::InvalidParameter(format!("no reference table for {kind:?} of {family}")));
    };
    for row in gold {
        if kind.indexed_by_rank() && row.n > max_n {
            continue;
        }
        let computed = table_value(kind, family, row.n, row.r)?.unwrap_or_else(|| "-".into());
        rep.compare(kind.label(family, row.n, row.r), &row.value, computed);
    }
    Ok(())
}

pub fn tables(max_n: usize) -> Result<VerificationReport> {
    let mut rep = VerificationReport::new("tables");
    compare_table(&mut rep, TableKind::Motzkin, Family::M, max_n)?;
    compare_table(&mut rep, TableKind::Riordan, Family::M, max_n)?;
    for kind in [TableKind::IdealSize, TableKind::Rank, TableKind::IdempotentGeneratedRank] {
        for family in [Family::PB, Family::M] {
            compare_table(&mut rep, kind, family, max_n)?;
        }
    }
    // The rank columns with r ≤ n - 2 double as idempotent ranks.
    for (family, tri) in [(Family::PB, golden::PB_IDEAL_RANKS), (Family::M, golden::M_IDEAL_RANKS)] {
        for (n, row) in tri.iter().enumerate().take(max_n + 1).skip(2) {
            for (r, v) in row.iter().enumerate().take(n - 1) {
                let computed = rank_of_idempotent_generated(family, n, Some(r))?;
                rep.compare(format!("idrank E(I_{r}({family}_{n}))"), v, computed);
            }
        }
    }
    Ok(rep)
}

fn valid_ranks(family: Family, n: usize) -> Vec<usize> {
    (0..=n).filter(|&r| rclass_count(family, n, r).is_ok()).collect()
}

/// Sizes of enumerated D-classes and projection sets against the formulas.
pub fn enumeration(families: &[(Family, usize)]) -> Result<VerificationReport> {
    let mut rep = VerificationReport::new("enumeration");
    for &(family, max_n) in families {
        for n in 0..=max_n {
            for r in valid_ranks(family, n) {
                let d = enumerate(family, n, Some(r))?;
                rep.compare(format!("|D_{r}({family}_{n})|"), dclass_size(family, n, r)?, d.len());
                let p = projections(family, n, r)?;
                rep.compare(format!("|P(D_{r}({family}_{n}))|"), rclass_count(family, n, r)?, p.len());
            }
        }
    }
    Ok(rep)
}

/// Characterized Green's relations against the definitional oracle on every
/// ordered pair.
pub fn green(family: Family, n: usize, limit: usize) -> Result<VerificationReport> {
    let mut rep = VerificationReport::new("green");
    let oracle = GreenOracle::new(family, n, limit)?;
    let all = enumerate(family, n, None)?;
    for rel in GreenRelation::ALL {
        let mut agree = 0usize;
        let mut shown = 0;
        for a in &all {
            for b in &all {
                let fast = green_related(a, b, rel)?;
                let slow = oracle.related(a, b, rel)?;
                if fast == slow {
                    agree += 1;
                } else if shown < 5 {
                    shown += 1;
                    rep.compare(format!("{rel:?}({a}, {b}) in {family}_{n}"), slow, fast);
                }
            }
        }
        rep.compare(format!("{rel:?} agreements on {family}_{n}"), all.len() * all.len(), agree);
    }
    Ok(rep)
}

fn gen_closure(g: &[Diagram], limit: usize) -> Result<BTreeSet<Diagram>> {
    closure(g, limit)
}

/// Records whether `computed` is exactly `expected`.
pub fn set_claim(
    rep: &mut VerificationReport,
    id: String,
    expected: &BTreeSet<Diagram>,
    computed: &BTreeSet<Diagram>,
) -> bool {
    let exp = format!("{} elements", expected.len());
    let com = if expected == computed {
        exp.clone()
    } else {
        format!(
            "{} elements, {} missing, {} extra",
            computed.len(),
            expected.difference(computed).count(),
            computed.difference(expected).count()
        )
    };
    rep.push(Claim { id, pass: exp == com, expected: exp, computed: com })
}

fn idempotents_up_to(n: usize, r: usize) -> Result<Vec<Diagram>> {
    Ok(idempotents(Family::M, n, None)?.into_iter().filter(|d| d.rank() <= r).collect())
}

#[derive(Clone, Copy, Debug)]
pub struct ClosureSizes {
    /// Largest degree for the ideal, whole-monoid and inverse-monoid checks.
    pub max_n: usize,
    /// Largest degree for the idempotent-generated part of `PB_n`.
    pub max_n_pb_idempotents: usize,
}

/// Generation statements checked by explicit closure.
pub fn closure_theorems(sizes: ClosureSizes, limit: usize) -> Result<VerificationReport> {
    let mut rep = VerificationReport::new("closure");
    let max_n = sizes.max_n;

    for n in 2..=max_n {
        for r in 0..=n - 2 {
            let g = minimal_generating_set(Target::IdealPb(r), n)?;
            let c = gen_closure(&g, limit)?;
            set_claim(
                &mut rep,
                format!("<P(D_{r}) u P(D_{r}-1(B_{n}))> = I_{r}(PB_{n})"),
                &ideal(Family::PB, n, r)?,
                &c,
            );
        }
    }

    for n in 1..=max_n {
        for r in 1..n {
            let target = ideal(Family::M, n, r)?;
            let g = minimal_generating_set(Target::IdealM(r), n)?;
            set_claim(&mut rep, format!("<Gamma u Sigma> = I_{r}(M_{n})"), &target, &gen_closure(&g, limit)?);

            // With the generators replaced by bare projections only the
            // idempotent-generated part is reached.
            let mut p = projections(Family::M, n, r)?;
            p.extend(sigma_set(n, r)?);
            let reached = gen_closure(&p, limit)?;
            rep.check(format!("<P(D_{r}(M_{n})) u Sigma> inside I_{r}(M_{n})"), reached.is_subset(&target));
            if r + 2 <= n {
                let e_part = gen_closure(&idempotents_up_to(n, r)?, limit)?;
                set_claim(&mut rep, format!("<P(D_{r}(M_{n})) u Sigma> = <E(I_{r}(M_{n}))>"), &e_part, &reached);
            }
            rep.compare(format!("<P(D_{r}(M_{n})) u Sigma> = I_{r}(M_{n})"), r < n / 2, reached == target);
        }
    }

    for n in 1..=max_n {
        let g = minimal_generating_set(Target::WholeM, n)?;
        rep.compare(format!("|generators of M_{n}|"), 2 * n, g.len());
        let all: BTreeSet<Diagram> = enumerate(Family::M, n, None)?.into_iter().collect();
        set_claim(&mut rep, format!("<2n set> = M_{n}"), &all, &gen_closure(&g, limit)?);
    }

    for n in 2..=sizes.max_n_pb_idempotents {
        let mut expected = ideal(Family::PB, n, n - 2)?;
        expected.extend(idempotents(Family::PB, n, None)?.into_iter().filter(|d| d.rank() + 1 >= n));
        let c = gen_closure(&idempotents(Family::PB, n, None)?, limit)?;
        set_claim(&mut rep, format!("<E(PB_{n})> = E(D_{n} u D_{}) u I_{}", n - 1, n - 2), &expected, &c);
    }

    for n in 0..=max_n {
        let expected: BTreeSet<Diagram> = enumerate(Family::M, n, None)?
            .into_iter()
            .filter(|a| in_idempotent_generated(a, Scope::MWhole).unwrap_or(false))
            .collect();
        let c = gen_closure(&idempotents(Family::M, n, None)?, limit)?;
        set_claim(&mut rep, format!("<E(M_{n})> = cosparse set"), &expected, &c);
        if n >= 2 {
            let g = minimal_generating_set(Target::IdempotentGeneratedM, n)?;
            rep.compare(format!("|idempotent generators of E(M_{n})|"), 3 * n - 2, g.len());
            set_claim(&mut rep, format!("<3n-2 set> = E(M_{n})"), &expected, &gen_closure(&g, limit)?);
        }
    }

    for family in [Family::I, Family::O] {
        for n in 1..=max_n {
            for r in 0..n {
                let c = gen_closure(&enumerate(family, n, Some(r))?, limit)?;
                set_claim(&mut rep, format!("<D_{r}({family}_{n})> = I_{r}({family}_{n})"), &ideal(family, n, r)?, &c);
            }
        }
    }
    Ok(rep)
}

/// Closed membership predicates against closure membership on every element.
pub fn membership(max_m: usize, max_pb: usize, limit: usize) -> Result<VerificationReport> {
    let mut rep = VerificationReport::new("membership");
    for (family, max_n) in [(Family::M, max_m), (Family::PB, max_pb)] {
        for n in 0..=max_n {
            let all = enumerate(family, n, None)?;
            let agree_on = |rep: &mut VerificationReport,
                            id: String,
                            gen: &BTreeSet<Diagram>,
                            pred: &dyn Fn(&Diagram) -> Result<bool>|
             -> Result<()> {
                let mut ok = 0;
                for a in &all {
                    if pred(a)? == gen.contains(a) {
                        ok += 1;
                    }
                }
                rep.compare(id, all.len(), ok);
                Ok(())
            };
            for r in 0..=n.saturating_sub(2) {
                if n < 2 {
                    break;
                }
                let gen = gen_closure(&enumerate(family, n, Some(r))?, limit)?;
                agree_on(&mut rep, format!("<D_{r}({family}_{n})>"), &gen, &|a| {
                    in_ideal_generated_by_dr(a, family, r)
                })?;
            }
            let whole = if family == Family::M { Scope::MWhole } else { Scope::PbWhole };
            let e = gen_closure(&idempotents(family, n, None)?, limit)?;
            agree_on(&mut rep, format!("<E({family}_{n})>"), &e, &|a| in_idempotent_generated(a, whole))?;
            for r in 0..=n.saturating_sub(2) {
                if n < 2 {
                    break;
                }
                let scope = match family {
                    Family::M if r >= 1 => Scope::MIdeal(r),
                    Family::M => continue,
                    _ => Scope::PbIdeal(r),
                };
                let gens: Vec<Diagram> = idempotents(family, n, None)?.into_iter().filter(|d| d.rank() <= r).collect();
                let e = gen_closure(&gens, limit)?;
                agree_on(&mut rep, format!("<E(I_{r}({family}_{n}))>"), &e, &|a| in_idempotent_generated(a, scope))?;
            }
        }
    }
    Ok(rep)
}

/// Dropping any single generator from the constructed sets loses part of
/// the target.
pub fn minimality(max_n: usize, limit: usize) -> Result<VerificationReport> {
    let mut rep = VerificationReport::new("minimality");
    let mut cases: Vec<(String, Vec<Diagram>, usize, String)> = Vec::new();
    for n in 2..=max_n {
        for r in 0..=n - 2 {
            let g = minimal_generating_set(Target::IdealPb(r), n)?;
            let size = ideal(Family::PB, n, r)?.len();
            cases.push((format!("I_{r}(PB_{n})"), g, size, rank_of_ideal(Family::PB, n, r)?.rank.to_string()));
        }
    }
    for n in 1..=max_n {
        for r in 1..n {
            let g = minimal_generating_set(Target::IdealM(r), n)?;
            let size = ideal(Family::M, n, r)?.len();
            cases.push((format!("I_{r}(M_{n})"), g, size, rank_of_ideal(Family::M, n, r)?.rank.to_string()));
        }
        let g = minimal_generating_set(Target::WholeM, n)?;
        cases.push((format!("M_{n}"), g, enumerate(Family::M, n, None)?.len(), (2 * n).to_string()));
    }
    for (id, g, target, rank) in cases {
        rep.compare(format!("|generators of {id}|"), rank, g.len());
        let mut all_smaller = true;
        for i in 0..g.len() {
            let mut h = g.clone();
            h.remove(i);
            if gen_closure(&h, limit)?.len() >= target {
                all_smaller = false;
                rep.check(format!("{id} without {}", g[i]), false);
            }
        }
        rep.check(format!("{id}: each removal shrinks the closure"), all_smaller);
    }
    Ok(rep)
}

pub fn normal_forms(cases: &[(Family, usize)]) -> Result<VerificationReport> {
    let mut rep = VerificationReport::new("normal-form");
    for &(family, n) in cases {
        let all = enumerate(family, n, None)?;
        let (mut ok, mut planar, mut planar_ok) = (0, 0, 0);
        for a in &all {
            let nf = normal_form(a);
            if &nf.recompose() == a {
                ok += 1;
            }
            if a.is_planar() {
                planar += 1;
                let first: Vec<usize> = (1..=a.rank()).collect();
                if nf.gam == id_set(n, &first)? {
                    planar_ok += 1;
                }
            }
        }
        rep.compare(format!("recomposition on {family}_{n}"), all.len(), ok);
        rep.compare(format!("identity gamma for planar elements of {family}_{n}"), planar, planar_ok);
    }
    Ok(rep)
}

#[derive(Clone, Copy, Debug)]
pub struct IdentityCounts {
    pub cocycle_triples: usize,
    pub assoc_triples: usize,
    pub involution_pairs: usize,
}

impl Default for IdentityCounts {
    fn default() -> Self {
        IdentityCounts { cocycle_triples: 1000, assoc_triples: 100, involution_pairs: 1000 }
    }
}

/// Randomized twist and twisted-algebra identities.
pub fn identities(seed: u64, counts: IdentityCounts) -> Result<VerificationReport> {
    let mut rep = VerificationReport::new("identities");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let (mut assoc, mut cocycle) = (0, 0);
    for _ in 0..counts.cocycle_triples {
        let (a, b, c) = (random_pb(5, &mut rng), random_pb(5, &mut rng), random_pb(5, &mut rng));
        let ab = a.compose(&b);
        let bc = b.compose(&c);
        if ab.compose(&c) == a.compose(&bc) {
            assoc += 1;
        }
        let lhs = &twist(&a, &b)? * &twist(&ab, &c)?;
        let rhs = &twist(&b, &c)? * &twist(&a, &bc)?;
        if lhs == rhs {
            cocycle += 1;
        }
    }
    rep.compare("associativity on PB_5 triples", counts.cocycle_triples, assoc);
    rep.compare("cocycle identity on PB_5 triples", counts.cocycle_triples, cocycle);

    let m4 = Sampler::new(Family::M, 4)?;
    let mut ok = 0;
    for _ in 0..counts.assoc_triples {
        let (u, v, w) = (m4.element(3, &mut rng), m4.element(3, &mut rng), m4.element(3, &mut rng));
        if u.mul(&v)?.mul(&w)? == u.mul(&v.mul(&w)?)? {
            ok += 1;
        }
    }
    rep.compare("twisted associativity on 3-term elements of M_4", counts.assoc_triples, ok);

    let pb5 = Sampler::new(Family::PB, 5)?;
    let (mut anti, mut basis) = (0, 0);
    for _ in 0..counts.involution_pairs {
        let (u, v) = (pb5.element(3, &mut rng), pb5.element(3, &mut rng));
        if u.mul(&v)?.star() == v.star().mul(&u.star())? {
            anti += 1;
        }
        let (a, b) = (pb5.sample(&mut rng), pb5.sample(&mut rng));
        if a.compose(&b).star() == b.star().compose(&a.star()) && twist(&a, &b)? == twist(&b.star(), &a.star())? {
            basis += 1;
        }
    }
    rep.compare("anti-involution on 3-term elements of PB_5", counts.involution_pairs, anti);
    rep.compare("anti-involution on PB_5 diagram pairs", counts.involution_pairs, basis);
    Ok(rep)
}

fn int(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

fn render_matrix(m: &[Vec<Polynomial2>]) -> String {
    let rows: Vec<String> =
        m.iter().map(|row| format!("[{}]", row.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(", "))).collect();
    format!("[{}]", rows.join(", "))
}

/// Gram matrices of the cell modules of the twisted Motzkin algebra.
pub fn gram(max_n: usize, max_cellular: usize) -> Result<VerificationReport> {
    let mut rep = VerificationReport::new("gram");
    let (x, y) = (Polynomial2::x(), Polynomial2::y());
    let expected = vec![vec![&y * &y, y.clone()], vec![y.clone(), x.clone()]];
    rep.compare("gram_matrix(2,0)", render_matrix(&expected), render_matrix(&gram_matrix(2, 0)?.entries));
    rep.compare("radical_dim(2,0) at (1,1)", 1, gram_rank_at(2, 0, &int(1), &int(1))?.radical_dim);

    let (two, one) = (int(2), int(1));
    for n in 0..=max_n {
        rep.compare(format!("semisimple_check({n}) at (2,1)"), true, semisimple_check(n, &two, &one)?);
        let mut squares = 0usize;
        let mut radicals = Vec::new();
        for r in 0..=n {
            let g = gram_rank_at(n, r, &two, &one)?;
            squares += g.dim_l * g.dim_l;
            if g.radical_dim > 0 {
                radicals.push(format!("r={r}:{}", g.radical_dim));
            }
        }
        let id = format!("sum of dim_L(r)^2 at (2,1), n={n}");
        let computed = if radicals.is_empty() {
            squares.to_string()
        } else {
            format!("{squares} (radicals {})", radicals.join(" "))
        };
        rep.compare(id, motzkin(2 * n), computed);
        for r in 0..=n {
            rep.check(format!("gram_matrix({n},{r}) symmetric"), gram_matrix(n, r)?.is_symmetric());
        }
    }
    for n in 0..=max_cellular {
        rep.check(format!("cellular rule on M_{n}"), check_cellular_axiom(n)?);
    }
    Ok(rep)
}

/// `unfold` is a bijection onto the rank-0 projections in double degree.
pub fn unfold(max_m: usize, max_pb: usize) -> Result<VerificationReport> {
    let mut rep = VerificationReport::new("unfold");
    for (family, max_n) in [(Family::M, max_m), (Family::PB, max_pb)] {
        for n in 1..=max_n {
            let all = enumerate(family, n, None)?;
            let image: BTreeSet<Diagram> = all.iter().map(Diagram::unfold).collect();
            rep.compare(format!("unfold injective on {family}_{n}"), all.len(), image.len());
            let target: BTreeSet<Diagram> = projections(family, 2 * n, 0)?.into_iter().collect();
            set_claim(&mut rep, format!("unfold({family}_{n}) = P(D_0({family}_{}))", 2 * n), &target, &image);
        }
    }
    Ok(rep)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Tables,
    Enumeration,
    Green,
    Closure,
    Membership,
    Minimality,
    NormalForm,
    Identities,
    Gram,
    Unfold,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::Tables,
        Suite::Enumeration,
        Suite::Green,
        Suite::Closure,
        Suite::Membership,
        Suite::Minimality,
        Suite::NormalForm,
        Suite::Identities,
        Suite::Gram,
        Suite::Unfold,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Tables => "tables",
            Suite::Enumeration => "enumeration",
            Suite::Green => "green",
            Suite::Closure => "closure",
            Suite::Membership => "membership",
            Suite::Minimality => "minimality",
            Suite::NormalForm => "normal-form",
            Suite::Identities => "identities",
            Suite::Gram => "gram",
            Suite::Unfold => "unfold",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Debug)]
pub struct SuiteOptions {
    /// Replaces every default top degree of the suite when set.
    pub max_n: Option<usize>,
    pub seed: u64,
    pub limit: usize,
    /// For the Green suite: a single monoid instead of the default pair.
    pub family: Option<Family>,
    pub n: Option<usize>,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            max_n: None,
            seed: DEFAULT_SEED,
            limit: diagram_monoids::monoid::DEFAULT_LIMIT,
            family: None,
            n: None,
        }
    }
}

pub fn run_suite(suite: Suite, opts: &SuiteOptions) -> Result<VerificationReport> {
    let top = |default: usize| opts.max_n.unwrap_or(default);
    match suite {
        Suite::Tables => tables(top(10)),
        Suite::Enumeration => {
            let mut fams = vec![(Family::PB, top(5))];
            fams.extend([Family::M, Family::B, Family::I, Family::J, Family::O].map(|f| (f, top(6))));
            enumeration(&fams)
        }
        Suite::Green => match (opts.family, opts.n) {
            (Some(f), n) => green(f, n.or(opts.max_n).unwrap_or(3), opts.limit),
            _ => {
                let mut rep = green(Family::PB, top(3), opts.limit)?;
                rep.merge(green(Family::M, top(4), opts.limit)?);
                rep.claims.iter_mut().for_each(|c| c.id = c.id.trim_start_matches("green/").to_string());
                Ok(rep)
            }
        },
        Suite::Closure => closure_theorems(ClosureSizes { max_n: top(5), max_n_pb_idempotents: top(4) }, opts.limit),
        Suite::Membership => membership(top(5), top(4), opts.limit),
        Suite::Minimality => minimality(top(4), opts.limit),
        Suite::NormalForm => normal_forms(&[(Family::PB, top(4)), (Family::M, top(5))]),
        Suite::Identities => identities(opts.seed, IdentityCounts::default()),
        Suite::Gram => gram(top(5), top(3)),
        Suite::Unfold => unfold(top(4), top(3)),
    }
}
