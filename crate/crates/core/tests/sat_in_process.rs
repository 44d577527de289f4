//! Encodings solved in process with varisat, so the pipeline is exercised
//! without an external binary.

use std::collections::BTreeSet;

use ldimkit::sat::{
    decode_realizer, encode_with, parse_dimacs, write_cnf, ClauseCounts, EncodeOptions,
};
use ldimkit::{verify_local_realizer, Poset};
use proptest::prelude::*;
use varisat::{ExtendFormula, Lit, Solver};

fn solve(poset: &Poset, k: usize, d: usize, options: EncodeOptions) -> Option<BTreeSet<i32>> {
    let ((cnf, map), _) = encode_with(poset, k, d, options);
    let mut solver = Solver::new();
    for clause in &cnf.clauses {
        let lits: Vec<Lit> = clause
            .iter()
            .map(|&l| Lit::from_dimacs(l as isize))
            .collect();
        solver.add_clause(&lits);
    }
    if !solver.solve().unwrap() {
        return None;
    }
    let model = solver
        .model()
        .unwrap()
        .into_iter()
        .map(|l| l.to_dimacs() as i32)
        .filter(|&l| l > 0)
        .collect::<BTreeSet<_>>();
    let family = decode_realizer(&model, &map).unwrap();
    let report = verify_local_realizer(poset, &family).unwrap();
    assert!(report.accepted, "{poset} k = {k} d = {d}");
    assert!(report.frequency <= d);
    assert!(family.size() <= k);
    Some(model)
}

fn small_poset() -> impl Strategy<Value = Poset> {
    prop_oneof![
        (1usize..=2).prop_map(|n| Poset::boolean(n).unwrap()),
        (2usize..=3).prop_map(|n| Poset::singleton(n).unwrap()),
        (1usize..=4).prop_map(|k| Poset::chain(k).unwrap()),
        (1usize..=4).prop_map(|k| Poset::antichain(k).unwrap()),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn satisfiable_instances_decode_to_realizers(
        poset in small_poset(),
        k in 1usize..=6,
        d in 1usize..=3,
        first in any::<bool>(),
    ) {
        solve(&poset, k, d, EncodeOptions { used_orders_first: first });
    }

    #[test]
    fn clause_counts_match_prediction(poset in small_poset(), k in 1usize..=4, d in 1usize..=3) {
        let ((cnf, map), counts) = encode_with(&poset, k, d, EncodeOptions::default());
        let n = poset.ground_size();
        let strict = ldimkit::sat::strict_pairs(&poset);
        prop_assert_eq!(counts, ClauseCounts::predicted(n, strict, k, d));
        prop_assert_eq!(cnf.clauses.len(), counts.total());
        prop_assert_eq!(cnf.variable_count, map.variable_count());
    }
}

#[test]
fn symmetry_breaking_keeps_satisfiability() {
    for (poset, k, d) in [
        (Poset::boolean(2).unwrap(), 4, 2),
        (Poset::boolean(2).unwrap(), 4, 1),
        (Poset::antichain(3).unwrap(), 3, 2),
        (Poset::singleton(3).unwrap(), 8, 2),
    ] {
        let plain = solve(&poset, k, d, EncodeOptions::default()).is_some();
        let broken = solve(
            &poset,
            k,
            d,
            EncodeOptions {
                used_orders_first: true,
            },
        )
        .is_some();
        assert_eq!(plain, broken, "{poset} k = {k} d = {d}");
    }
}

#[test]
fn dimacs_round_trip_preserves_formula() {
    let ((cnf, _), _) = encode_with(&Poset::boolean(2).unwrap(), 2, 2, EncodeOptions::default());
    let mut buf = Vec::new();
    write_cnf(&cnf, &mut buf).unwrap();
    let back = parse_dimacs(std::str::from_utf8(&buf).unwrap()).unwrap();
    assert_eq!(back, cnf);
}
