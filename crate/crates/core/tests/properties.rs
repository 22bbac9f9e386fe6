use proptest::prelude::*;

use gvm_core::bruhat::{decide_hom, leq_bruteforce, leq_theta, Reason};
use gvm_core::obstruction::{degenerate, find_witness, relating_element};
use gvm_core::translation::{coordinate_count, degeneration_trace, level_counts, shift, Direction};
use gvm_core::weights::{
    antidominant_representative, contract, expand, is_theta_antidominant, same_orbit,
    simple_root_cone, BlockWeight, Composition,
};
use gvm_core::weyl::{apply, ThetaWeylElement, DEFAULT_ORBIT_CAP};

/// A weight together with a random block-size-preserving rearrangement.
fn pair(
    max_k: usize,
    max_part: usize,
    lo: i64,
    hi: i64,
) -> impl Strategy<Value = (BlockWeight, BlockWeight)> {
    prop::collection::vec(1..=max_part, 2..=max_k).prop_flat_map(move |parts| {
        let k = parts.len();
        (
            Just(parts),
            prop::collection::vec(lo..=hi, k),
            prop::collection::vec(any::<u32>(), k),
        )
            .prop_map(|(parts, entries, keys)| {
                let comp = Composition::new(parts.clone()).unwrap();
                let tgt = BlockWeight::new(comp.clone(), entries.clone()).unwrap();
                // shuffle each class by sorting its positions on random keys
                let mut src = entries.clone();
                for class in comp.classes() {
                    let mut order = class.positions.clone();
                    order.sort_by_key(|&j| (keys[j - 1], j));
                    for (&to, &from) in class.positions.iter().zip(&order) {
                        src[to - 1] = entries[from - 1];
                    }
                }
                (tgt, BlockWeight::new(comp, src).unwrap())
            })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1024))]

    #[test]
    fn contract_inverts_expand((x, _) in pair(6, 4, -50, 50)) {
        prop_assert_eq!(contract(&expand(&x), x.composition()).unwrap(), x);
    }

    #[test]
    fn representative_is_antidominant_and_generates((x, y) in pair(7, 3, -5, 5)) {
        let (lambda, g) = antidominant_representative(&x);
        prop_assert!(is_theta_antidominant(&lambda));
        prop_assert_eq!(apply(&g, &lambda).unwrap(), x.clone());
        prop_assert!(same_orbit(&x, &y).unwrap());
        prop_assert_eq!(antidominant_representative(&y).0, lambda);
    }

    #[test]
    fn relating_element_preserves_orbit_and_norms((x, y) in pair(7, 3, -5, 5)) {
        let g: ThetaWeylElement = relating_element(&y, &x).unwrap();
        prop_assert_eq!(apply(&g, &x).unwrap(), y.clone());
        for lvl in -8..8 {
            let lc = level_counts(&x, lvl);
            prop_assert_eq!(lc.norm, coordinate_count(&x, lvl));
            prop_assert_eq!(lc.norm, level_counts(&y, lvl).norm);
            prop_assert!(lc.psi_top.iter().all(|i| lc.phi.contains(i)));
            prop_assert!(lc.psi_bot.iter().all(|i| lc.phi.contains(i)));
        }
    }

    #[test]
    fn shifts_invert((x, _) in pair(6, 3, -20, 20), mask in prop::collection::vec(any::<bool>(), 6)) {
        let s: Vec<usize> = (1..=x.k()).filter(|&i| mask[i - 1]).collect();
        let up = shift(&x, &s, Direction::Raise).unwrap();
        prop_assert_eq!(shift(&up, &s, Direction::Lower).unwrap(), x.clone());
        for &i in &s {
            prop_assert_eq!(up.entry(i), x.entry(i) + 1);
        }
    }

    #[test]
    fn comparable_pairs_lie_in_the_cone((tgt, src) in pair(6, 3, -3, 3)) {
        if leq_theta(&src, &tgt).unwrap() {
            prop_assert!(simple_root_cone(&tgt, &src).unwrap().in_cone());
        }
    }

    #[test]
    fn tableau_order_matches_search((tgt, src) in pair(6, 2, -2, 3)) {
        prop_assert_eq!(
            leq_theta(&src, &tgt).unwrap(),
            leq_bruteforce(&src, &tgt, DEFAULT_ORBIT_CAP).unwrap()
        );
    }

    /// Wider entry ranges and longer compositions than the exhaustive sweep.
    #[test]
    fn non_comparable_pairs_degenerate_cleanly((tgt, src) in pair(8, 4, -6, 8)) {
        let d = decide_hom(&src, &tgt).unwrap();
        match d.reason {
            Reason::Comparable => {
                prop_assert!(d.exists);
                prop_assert!(d.chain.is_some());
            }
            Reason::NotComparable => {
                let w = find_witness(&src, &tgt).unwrap();
                prop_assert_eq!(Some(w), d.witness);
                let pair = degenerate(&tgt, &src, &w).unwrap();
                let trace = degeneration_trace(&tgt, &src, &w).unwrap();
                prop_assert_eq!(&trace.end.target, &pair.mu_bar);
                prop_assert_eq!(&trace.end.source, &pair.nu_bar);
                for st in &trace.stages {
                    prop_assert!(st.legality.verdict());
                    let g = st.legality.level;
                    let k = st.shift.target_blocks.len();
                    prop_assert_eq!(coordinate_count(&st.before.target, g) - coordinate_count(&st.after.target, g), k);
                    prop_assert_eq!(coordinate_count(&st.before.source, g) - coordinate_count(&st.after.source, g), k);
                }
            }
            Reason::NotSameOrbit => prop_assert!(false, "generated pairs share an orbit"),
        }
    }
}
