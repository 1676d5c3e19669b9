use jump_queue::perm::{
    contains_pattern, is_231_avoiding, left_to_right_maxima, stage_decompose, Permutation,
};
use proptest::prelude::*;

fn permutation(max_len: usize) -> impl Strategy<Value = Permutation> {
    (0..=max_len)
        .prop_flat_map(|n| Just((1..=n as u32).collect::<Vec<_>>()).prop_shuffle())
        .prop_map(|v| Permutation::new(v).unwrap())
}

proptest! {
    #[test]
    fn occurrences_are_order_isomorphic(host in permutation(12), pattern in permutation(5)) {
        if let Some(occ) = contains_pattern(&host, &pattern) {
            prop_assert!(occ.is_occurrence_of(&host, &pattern));
        }
    }

    #[test]
    fn longer_patterns_never_occur(host in permutation(6), extra in 1usize..4) {
        let pattern = Permutation::identity(host.len() + extra);
        prop_assert!(contains_pattern(&host, &pattern).is_none());
    }

    #[test]
    fn linear_231_test_matches_generic_search(perm in permutation(14)) {
        let generic = contains_pattern(&perm, &Permutation::from_digits("231").unwrap()).is_none();
        prop_assert_eq!(is_231_avoiding(&perm), generic);
    }

    #[test]
    fn stages_reassemble(perm in permutation(30)) {
        let d = stage_decompose(&perm);
        prop_assert_eq!(d.concat(), perm.values().to_vec());
        let maxima: Vec<u32> = left_to_right_maxima(&perm).into_iter().map(|(_, v)| v).collect();
        let heads: Vec<u32> = d.stages.iter().map(|s| s.maximum).collect();
        prop_assert_eq!(&heads, &maxima);
        for stage in &d.stages {
            prop_assert!(stage.tail.iter().all(|&v| v < stage.maximum));
        }
    }

    #[test]
    fn text_round_trip(perm in permutation(20)) {
        prop_assert_eq!(perm.to_string().parse::<Permutation>().unwrap(), perm);
    }
}
