use diagram_monoids::monoid::{egg_box, enumerate, green_related, GreenOracle, GreenRelation, DEFAULT_LIMIT};
use diagram_monoids::Family;

#[test]
fn characterization_matches_definition() {
    for (family, n) in [(Family::PB, 2), (Family::M, 3), (Family::I, 3), (Family::J, 4), (Family::O, 3), (Family::B, 3)]
    {
        let oracle = GreenOracle::new(family, n, DEFAULT_LIMIT).unwrap();
        let all = enumerate(family, n, None).unwrap();
        for a in &all {
            for b in &all {
                for rel in GreenRelation::ALL {
                    assert_eq!(
                        oracle.related(a, b, rel).unwrap(),
                        green_related(a, b, rel).unwrap(),
                        "{family} {rel:?} {a:?} {b:?}"
                    );
                }
            }
        }
    }
}

#[test]
fn egg_boxes_have_one_projection_per_row_and_column() {
    for family in Family::ALL {
        for n in 0..=4 {
            for r in 0..=n {
                if family.needs_parity() && (n - r) % 2 == 1 {
                    continue;
                }
                let eb = egg_box(family, n, r).unwrap();
                let expected = if family.is_aperiodic() { 1 } else { (1..=r).product::<usize>() };
                assert!(eb.hclass_sizes().iter().all(|&s| s == expected), "{family} {n} {r}");
                for (i, row) in eb.cells.iter().enumerate() {
                    let count = row.iter().flatten().filter(|d| d.is_projection()).count();
                    assert_eq!(count, 1);
                    assert!(row[i].contains(&eb.rows[i]));
                }
                for j in 0..eb.cols.len() {
                    let count = eb.cells.iter().flat_map(|row| &row[j]).filter(|d| d.is_projection()).count();
                    assert_eq!(count, 1);
                }
            }
        }
    }
}
