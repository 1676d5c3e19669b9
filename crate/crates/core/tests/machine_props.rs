use jump_queue::machine::{
    forbidden_patterns, producible_set, recognize, replay, Discipline, RecognitionResult,
};
use jump_queue::perm::{avoids_all, Permutation};
use jump_queue::Limits;
use proptest::prelude::*;

fn permutation(max_len: usize) -> impl Strategy<Value = Permutation> {
    (0..=max_len)
        .prop_flat_map(|n| Just((1..=n as u32).collect::<Vec<_>>()).prop_shuffle())
        .prop_map(|v| Permutation::new(v).unwrap())
}

fn discipline() -> impl Strategy<Value = Discipline> {
    prop_oneof![Just(Discipline::Loose), Just(Discipline::Strict)]
}

#[test]
fn strict_is_at_least_as_severe_as_loose() {
    let limits = Limits::default();
    for n in 0..=8 {
        let strict = producible_set(n, Discipline::Strict, &limits).unwrap();
        let loose = producible_set(n, Discipline::Loose, &limits).unwrap();
        assert!(strict.is_subset(&loose), "n={n}");
    }
}

#[test]
fn producible_set_is_independent_of_worker_count() {
    let limits = Limits::default();
    let single = rayon_pool(1).install(|| producible_set(7, Discipline::Strict, &limits).unwrap());
    let many = rayon_pool(4).install(|| producible_set(7, Discipline::Strict, &limits).unwrap());
    assert_eq!(single, many);
}

fn rayon_pool(threads: usize) -> rayon::ThreadPool {
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    // Random hosts longer than the exhaustive range.
    #[test]
    fn recognition_matches_pattern_avoidance(perm in permutation(13), d in discipline()) {
        let avoids = avoids_all(&perm, &forbidden_patterns(d));
        let result = recognize(&perm, d);
        prop_assert_eq!(result.is_producible(), avoids);
        match result {
            RecognitionResult::Producible(trace) => {
                let end = replay(perm.len(), d, &trace.records()).unwrap();
                prop_assert!(end.is_terminal());
                prop_assert_eq!(end.output(), perm.values());
            }
            RecognitionResult::NotProducible { blocked_at, witness } => {
                let w = witness.expect("a forbidden pattern occurs");
                prop_assert!(w.occurrence.is_occurrence_of(&perm, &w.pattern));
                prop_assert!(blocked_at >= 1 && blocked_at <= perm.len());
            }
        }
    }

    #[test]
    fn every_state_along_a_trace_is_well_formed(perm in permutation(10), d in discipline()) {
        if let RecognitionResult::Producible(trace) = recognize(&perm, d) {
            let mut state = jump_queue::init(perm.len(), d);
            for op in trace.operations() {
                prop_assert!(state.legal_operations().contains(&op));
                state = state.apply_operation(op).unwrap();
                prop_assert!(state.check_invariants().is_ok());
            }
        }
    }
}
