mod common;

use common::{conifold, split_conifold, three_loops};
use dimerlab_core::paths::{
    default_len_bound, find_non_cancellative_pair, CancellativityVerdict, Equivalence, PathWord,
    RewriteSystem, Separation, Side, DEFAULT_BUDGET,
};

#[test]
fn the_small_fixtures_are_cancellative() {
    for q in [conifold(), three_loops()] {
        let verdict = find_non_cancellative_pair(&q, default_len_bound(&q), DEFAULT_BUDGET);
        match verdict {
            CancellativityVerdict::CancellativeUpTo { complete, .. } => assert!(complete),
            CancellativityVerdict::NonCancellative(pair) => {
                panic!("unexpected witness: {:?}", pair)
            }
        }
    }
}

#[test]
fn splitting_the_conifold_breaks_cancellativity() {
    let q = split_conifold();
    let verdict = find_non_cancellative_pair(&q, default_len_bound(&q), DEFAULT_BUDGET);
    let pair = match verdict {
        CancellativityVerdict::NonCancellative(pair) => pair,
        other => panic!("expected a witness, got {:?}", other),
    };
    // Both sides of the witness run from the central vertex 0 to vertex 1,
    // threading opposite halves of the two faces; the single arrow z glues
    // them into one relation.
    assert_eq!(
        pair.p,
        PathWord::new(&q, 0, vec![6, 1, 4, 3, 7, 0]).unwrap()
    );
    assert_eq!(
        pair.q,
        PathWord::new(&q, 0, vec![7, 0, 4, 3, 6, 1]).unwrap()
    );
    assert_eq!(pair.r, PathWord::new(&q, 3, vec![2]).unwrap());
    assert_eq!(pair.side, Side::Left);
    assert_eq!(pair.separation, Separation::ClassExhausted { explored: 1 });
}

#[test]
fn the_witness_pair_composes_to_equivalent_words() {
    let q = split_conifold();
    let rw = RewriteSystem::new(&q);
    let p = PathWord::new(&q, 0, vec![6, 1, 4, 3, 7, 0]).unwrap();
    let qq = PathWord::new(&q, 0, vec![7, 0, 4, 3, 6, 1]).unwrap();
    let r = PathWord::new(&q, 3, vec![2]).unwrap();
    assert_eq!(
        rw.equivalent(&r.then(&q, &p), &r.then(&q, &qq), DEFAULT_BUDGET),
        Equivalence::Equivalent
    );
    assert!(matches!(
        rw.equivalent(&p, &qq, DEFAULT_BUDGET),
        Equivalence::Inequivalent(Separation::ClassExhausted { .. })
    ));
}

#[test]
fn rewriting_preserves_matching_counts_and_homology() {
    let q = split_conifold();
    let rw = RewriteSystem::new(&q);
    let r = PathWord::new(&q, 3, vec![2]).unwrap();
    let p = PathWord::new(&q, 0, vec![6, 1, 4, 3, 7, 0]).unwrap();
    let qq = PathWord::new(&q, 0, vec![7, 0, 4, 3, 6, 1]).unwrap();
    let rp = r.then(&q, &p);
    let rq = r.then(&q, &qq);
    assert_eq!(
        rw.matching_counts(&rp.arrows),
        rw.matching_counts(&rq.arrows)
    );
    assert_eq!(q.homology_class(&rp.arrows), q.homology_class(&rq.arrows));
}

#[test]
fn starving_the_search_reports_incompleteness() {
    let q = split_conifold();
    match find_non_cancellative_pair(&q, default_len_bound(&q), 0) {
        CancellativityVerdict::CancellativeUpTo { complete, .. } => assert!(!complete),
        CancellativityVerdict::NonCancellative(pair) => {
            panic!("a starved search cannot certify {:?}", pair)
        }
    }
}
