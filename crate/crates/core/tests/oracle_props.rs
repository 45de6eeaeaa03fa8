mod common;

use std::collections::HashSet;

use common::strategies::*;
use common::*;
use mesp::{
    all_pairs, enumerate_shortest_paths, exact_mesp, exact_projection_gap, exact_source_mesp,
    EnumerationBudget, Error,
};
use proptest::prelude::*;

proptest! {
    #[test]
    fn enumeration_is_complete_and_duplicate_free(g in any_graph(10)) {
        let d = all_pairs(&g);
        let fw = floyd_warshall(&g);
        let budget = EnumerationBudget::default();
        let n = g.vertex_count();
        for s in 0..n {
            for t in 0..n {
                let paths = enumerate_shortest_paths(&g, &d, s, t, &budget).unwrap();
                prop_assert!(paths.iter().all(|p| p.is_shortest() && p.first() == s && p.last() == t));
                let distinct: HashSet<&[usize]> = paths.iter().map(|p| p.vertices()).collect();
                prop_assert_eq!(distinct.len(), paths.len());
                prop_assert_eq!(paths.len() as u64, count_shortest_paths(&g, &fw, s, t));
            }
        }
    }

    #[test]
    fn oracle_matches_brute_force(g in any_graph(9)) {
        let d = all_pairs(&g);
        let fw = floyd_warshall(&g);
        let budget = EnumerationBudget::default();
        let best = exact_mesp(&g, &d, &budget).unwrap();
        prop_assert_eq!(best.eccentricity, brute_mesp(&g, &fw));
        prop_assert_eq!(ecc_of_set(&fw, best.best_path.vertices()), best.eccentricity);
        for s in 0..g.vertex_count() {
            let r = exact_source_mesp(&g, &d, s, &budget).unwrap();
            prop_assert_eq!(r.eccentricity, brute_source_mesp(&g, &fw, s));
            prop_assert!(r.eccentricity >= best.eccentricity);
        }
    }

    #[test]
    fn projection_gap_matches_definition(g in any_graph(10)) {
        let d = all_pairs(&g);
        let budget = EnumerationBudget::default();
        let pg = exact_projection_gap(&g, &d, &budget).unwrap();
        prop_assert_eq!(pg, brute_projection_gap(&g, &floyd_warshall(&g)));
        let doubled = EnumerationBudget::new(2 * budget.max_paths(), 2 * budget.max_total()).unwrap();
        prop_assert_eq!(exact_projection_gap(&g, &d, &doubled).unwrap(), pg);
    }
}

#[test]
fn budgets_are_enforced() {
    let g = common::cycle_with_trees(8, 8, 0, 0);
    let d = all_pairs(&g);
    let tiny = EnumerationBudget::new(1, 1000).unwrap();
    assert!(matches!(
        enumerate_shortest_paths(&g, &d, 0, 4, &tiny),
        Err(Error::BudgetExceeded { .. })
    ));
    assert!(EnumerationBudget::new(0, 1).is_err());
}
