use diagram_monoids::monoid::enumerate;
use diagram_monoids::{Diagram, Family};
use proptest::prelude::*;

/// Any involution on `2n` points, built from a shuffled pairing.
fn any_diagram(max_n: usize) -> impl Strategy<Value = Diagram> {
    (0..=max_n).prop_flat_map(|n| (Just(n), Just((0..2 * n).collect::<Vec<usize>>()).prop_shuffle(), 0..=n)).prop_map(
        |(n, order, pairs)| {
            let mut mate: Vec<u32> = (0..2 * n as u32).collect();
            for k in 0..pairs {
                let (a, b) = (order[2 * k], order[2 * k + 1]);
                mate[a] = b as u32;
                mate[b] = a as u32;
            }
            Diagram::from_mate(n, mate).unwrap()
        },
    )
}

fn triple(max_n: usize) -> impl Strategy<Value = (Diagram, Diagram, Diagram)> {
    (1..=max_n).prop_flat_map(|n| (fixed(n), fixed(n), fixed(n)))
}

fn fixed(n: usize) -> impl Strategy<Value = Diagram> {
    (Just((0..2 * n).collect::<Vec<usize>>()).prop_shuffle(), 0..=n).prop_map(move |(order, pairs)| {
        let mut mate: Vec<u32> = (0..2 * n as u32).collect();
        for k in 0..pairs {
            let (a, b) = (order[2 * k], order[2 * k + 1]);
            mate[a] = b as u32;
            mate[b] = a as u32;
        }
        Diagram::from_mate(n, mate).unwrap()
    })
}

fn subset(a: &[usize], b: &[usize]) -> bool {
    a.iter().all(|x| b.contains(x))
}

proptest! {
    #[test]
    fn text_and_json_round_trip(d in any_diagram(9)) {
        prop_assert_eq!(Diagram::parse_text(d.degree(), &d.to_string()).unwrap(), d.clone());
        prop_assert_eq!(Diagram::from_json(&d.to_json()).unwrap(), d);
    }

    #[test]
    fn associativity_and_cocycle((a, b, c) in triple(7)) {
        let ab = a.multiply(&b).unwrap();
        let bc = b.multiply(&c).unwrap();
        let ab_c = ab.product.multiply(&c).unwrap();
        let a_bc = a.multiply(&bc.product).unwrap();
        prop_assert_eq!(&ab_c.product, &a_bc.product);
        prop_assert_eq!(ab.loops + ab_c.loops, a_bc.loops + bc.loops);
        prop_assert_eq!(ab.paths + ab_c.paths, a_bc.paths + bc.paths);
    }

    #[test]
    fn regular_star_axioms((a, b, _c) in triple(7)) {
        prop_assert_eq!(a.star().star(), a.clone());
        prop_assert_eq!(a.compose(&b).star(), b.star().compose(&a.star()));
        prop_assert_eq!(a.compose(&a.star()).compose(&a), a.clone());
        let p = a.compose(&a.star());
        let q = a.star().compose(&a);
        prop_assert!(p.is_projection() && q.is_projection());
        prop_assert_eq!(p.rank(), a.rank());
    }

    #[test]
    fn product_containments((a, b, _c) in triple(7)) {
        let ab = a.compose(&b);
        let (sa, sb, sab) = (a.stats(), b.stats(), ab.stats());
        prop_assert!(sab.rank <= sa.rank.min(sb.rank));
        prop_assert!(subset(&sab.dom, &sa.dom));
        prop_assert!(subset(&sab.codom, &sb.codom));
        prop_assert!(sa.ker.iter().all(|c| c.len() == 1 || sab.ker.contains(c)));
        prop_assert!(sb.coker.iter().all(|c| c.len() == 1 || sab.coker.contains(c)));
        prop_assert_eq!(sab.dom.len(), sab.rank);
    }

    #[test]
    fn family_flags_closed((a, b, _c) in triple(6)) {
        for f in Family::ALL {
            if f.contains(&a) && f.contains(&b) {
                prop_assert!(f.contains(&a.compose(&b)));
            }
            if f.contains(&a) {
                prop_assert!(f.contains(&a.star()));
            }
        }
    }
}

#[test]
fn exhaustive_small_degree_laws() {
    for n in 0..=2 {
        let all = enumerate(Family::PB, n, None).unwrap();
        for a in &all {
            for b in &all {
                for c in &all {
                    assert_eq!(a.compose(b).compose(c), a.compose(&b.compose(c)));
                }
            }
        }
    }
    let all = enumerate(Family::PB, 3, None).unwrap();
    for f in Family::ALL {
        let members: Vec<&Diagram> = all.iter().filter(|d| f.contains(d)).collect();
        for a in &members {
            assert!(f.contains(&a.star()));
            for b in &members {
                assert!(f.contains(&a.compose(b)), "{f} not closed");
            }
        }
    }
}

#[test]
fn unfold_is_a_bijection_onto_rank_zero_projections() {
    use diagram_monoids::monoid::projections;
    use std::collections::BTreeSet;
    for (family, max_n) in [(Family::M, 3), (Family::PB, 2)] {
        for n in 0..=max_n {
            let all = enumerate(family, n, None).unwrap();
            let image: BTreeSet<Diagram> = all.iter().map(Diagram::unfold).collect();
            assert_eq!(image.len(), all.len());
            let target: BTreeSet<Diagram> = projections(family, 2 * n, 0).unwrap().into_iter().collect();
            assert_eq!(image, target, "{family} n={n}");
        }
    }
}
