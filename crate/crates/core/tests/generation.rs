use std::collections::BTreeSet;

use diagram_monoids::monoid::{closure, enumerate, ideal, idempotents, DEFAULT_LIMIT};
use diagram_monoids::structure::{
    in_ideal_generated_by_dr, in_idempotent_generated, minimal_generating_set, Scope, Target,
};
use diagram_monoids::{Diagram, Family};

fn cl(g: &[Diagram]) -> BTreeSet<Diagram> {
    closure(g, DEFAULT_LIMIT).unwrap()
}

#[test]
fn pb_ideals_from_projections() {
    for n in 2..=4 {
        for r in 0..=n - 2 {
            let g = minimal_generating_set(Target::IdealPb(r), n).unwrap();
            assert_eq!(cl(&g), ideal(Family::PB, n, r).unwrap(), "n={n} r={r}");
        }
    }
}

#[test]
fn m_ideals_from_chain_and_sigma() {
    for n in 1..=4 {
        for r in 0..n {
            let g = minimal_generating_set(Target::IdealM(r), n).unwrap();
            assert_eq!(cl(&g), ideal(Family::M, n, r).unwrap(), "n={n} r={r}");
        }
    }
}

#[test]
fn whole_motzkin_from_2n_elements() {
    for n in 1..=4 {
        let g = minimal_generating_set(Target::WholeM, n).unwrap();
        assert_eq!(g.len(), 2 * n);
        assert_eq!(cl(&g).len(), enumerate(Family::M, n, None).unwrap().len());
    }
}

#[test]
fn idempotent_generated_parts() {
    for n in 0..=3 {
        let e = cl(&idempotents(Family::PB, n, None).unwrap());
        for a in enumerate(Family::PB, n, None).unwrap() {
            assert_eq!(e.contains(&a), in_idempotent_generated(&a, Scope::PbWhole).unwrap(), "{a:?}");
        }
    }
    for n in 0..=4 {
        let e = cl(&idempotents(Family::M, n, None).unwrap());
        for a in enumerate(Family::M, n, None).unwrap() {
            assert_eq!(e.contains(&a), in_idempotent_generated(&a, Scope::MWhole).unwrap(), "{a:?}");
        }
        if n >= 2 {
            let g = minimal_generating_set(Target::IdempotentGeneratedM, n).unwrap();
            assert_eq!(cl(&g), e);
        }
        let g = minimal_generating_set(Target::IdempotentGeneratedPb, n).unwrap();
        assert_eq!(cl(&g), cl(&idempotents(Family::PB, n, None).unwrap()));
    }
}

#[test]
fn dr_membership_matches_closure() {
    for family in [Family::PB, Family::M] {
        for n in 2..=4 {
            for r in 0..=n - 2 {
                let gen = cl(&enumerate(family, n, Some(r)).unwrap());
                for a in ideal(family, n, r).unwrap() {
                    assert_eq!(
                        gen.contains(&a),
                        in_ideal_generated_by_dr(&a, family, r).unwrap(),
                        "{family} n={n} r={r} {a:?}"
                    );
                }
            }
        }
    }
}

#[test]
fn m_ideal_idempotent_parts() {
    for n in 3..=5 {
        for r in 1..=n - 2 {
            let e =
                cl(&idempotents(Family::M, n, None).unwrap().into_iter().filter(|d| d.rank() <= r).collect::<Vec<_>>());
            for a in ideal(Family::M, n, r).unwrap() {
                assert_eq!(e.contains(&a), in_idempotent_generated(&a, Scope::MIdeal(r)).unwrap(), "n={n} r={r} {a:?}");
            }
        }
    }
}
