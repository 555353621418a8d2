use grundy_core::welter::{full_descendant, split_target, target_full_value, PsiOracle};
use grundy_core::young::{
    diagram_to_position, find_pprime_subdiagram, hook_lengths, move_matches_hook, position_to_diagram, psi_diagram,
    remove_hook, remove_hook_cells, tableau_count,
};
use grundy_core::{psi, psi_sum, Base, SumPosition, WelterPosition, YoungDiagram};
use num_bigint::BigUint;
use proptest::prelude::*;

fn distinct(max: u64, len: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = Vec<u64>> {
    prop::collection::btree_set(0..max, len).prop_map(|s| s.into_iter().collect::<Vec<_>>()).prop_shuffle()
}

fn diagram() -> impl Strategy<Value = YoungDiagram> {
    prop::collection::vec(0u64..7, 0..6).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        YoungDiagram::new(v).unwrap()
    })
}

fn prime() -> impl Strategy<Value = u64> {
    prop::sample::select(vec![2u64, 3, 5, 7])
}

proptest! {
    #[test]
    fn diagram_position_round_trip(a in distinct(30, 1..=6)) {
        let y = position_to_diagram(&a).unwrap();
        let mut sorted = a.clone();
        sorted.sort_unstable_by(|x, y| y.cmp(x));
        prop_assert_eq!(diagram_to_position(&y, a.len()).unwrap(), sorted);
    }

    #[test]
    fn longest_walk_is_cell_count(a in distinct(30, 1..=6)) {
        let y = position_to_diagram(&a).unwrap();
        prop_assert_eq!(WelterPosition::new(a).unwrap().longest_walk(), y.size());
        prop_assert_eq!(hook_lengths(&y).len() as u64, y.size());
    }

    #[test]
    fn welter_moves_remove_hooks(a in distinct(20, 1..=5), s in 0usize..5, drop in 1u64..20) {
        let s = s % a.len();
        prop_assume!(drop <= a[s]);
        let mut b = a.clone();
        b[s] -= drop;
        prop_assume!(b.iter().filter(|&&x| x == b[s]).count() == 1);
        let (i, j) = move_matches_hook(&a, &b).unwrap();
        let y = position_to_diagram(&a).unwrap();
        prop_assert_eq!(y.hook_length(i, j).unwrap(), drop);
        prop_assert_eq!(remove_hook(&y, i, j).unwrap(), position_to_diagram(&b).unwrap());
    }

    #[test]
    fn hook_removal_agrees_on_cells(y in diagram(), i in 1usize..6, j in 1u64..7) {
        prop_assume!(y.contains_cell(i, j));
        prop_assert_eq!(remove_hook(&y, i, j).unwrap(), remove_hook_cells(&y, i, j).unwrap());
    }

    #[test]
    fn psi_is_at_most_cell_count(p in prime(), y in diagram()) {
        prop_assert!(psi_diagram(Base::new(p).unwrap(), &y) <= y.size());
    }

    #[test]
    fn psi_invariant_under_permutation(p in 2u64..7, a in distinct(40, 1..=5)) {
        let base = Base::new(p).unwrap();
        let mut b = a.clone();
        b.reverse();
        prop_assert_eq!(psi(base, &a).unwrap(), psi(base, &b).unwrap());
    }

    #[test]
    fn pprime_subdiagram_postconditions(p in prime(), y in diagram()) {
        let base = Base::new(p).unwrap();
        let z = find_pprime_subdiagram(base, &y).unwrap();
        prop_assert!(y.includes(&z));
        prop_assert_eq!(z.size(), psi_diagram(base, &y));
        prop_assert!(tableau_count(&z) % BigUint::from(p) != BigUint::from(0u32));
    }

    #[test]
    fn split_meets_target(p in prime(), alphas in prop::collection::vec(0u64..200, 1..4)) {
        let base = Base::new(p).unwrap();
        let beta = target_full_value(base, &alphas);
        let split = split_target(base, &alphas, beta).unwrap();
        prop_assert_eq!(split.len(), alphas.len());
        prop_assert!(split.iter().zip(&alphas).all(|(b, a)| b <= a));
        prop_assert_eq!(base.nim_sum(split.iter().copied()), beta);
        prop_assert_eq!(split.iter().sum::<u64>(), beta);
    }

    #[test]
    fn full_descendants_by_closed_form(p in prime(), a in distinct(12, 1..=3), b in distinct(12, 1..=2)) {
        let base = Base::new(p).unwrap();
        let start = SumPosition::from_coords(vec![a, b]).unwrap();
        let value = psi_sum(base, &start).unwrap();
        let mut oracle = PsiOracle::new(base);
        let z = full_descendant(&mut oracle, &start, None).unwrap();
        prop_assert!(start.dominates(&z));
        prop_assert_eq!(psi_sum(base, &z).unwrap(), value);
        let cells: u64 = z.parts().iter().map(|w| w.longest_walk()).sum();
        prop_assert_eq!(cells, value);
    }
}
