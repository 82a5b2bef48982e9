mod common;

use common::{conifold, split_conifold, three_loops};
use dimerlab_core::matchings::{n_d, nondegenerate, perfect_matchings, simple_matchings};

#[test]
fn each_fixture_arrow_is_its_own_perfect_matching() {
    // In all three fixtures every arrow lies on both faces exactly once, so
    // the perfect matchings are precisely the singletons.
    for q in [conifold(), split_conifold(), three_loops()] {
        let pm = perfect_matchings(&q);
        let singletons: Vec<Vec<usize>> = (0..q.arrows.len()).map(|a| vec![a]).collect();
        assert_eq!(pm, singletons);
        assert!(nondegenerate(&q, &pm));
    }
}

#[test]
fn simplicity_depends_on_what_removal_disconnects() {
    // Removing any conifold arrow leaves a two-cycle through the other
    // three, so all four matchings are simple.
    assert_eq!(simple_matchings(&conifold()).len(), 4);
    // Loops at a single vertex cannot disconnect anything.
    assert_eq!(simple_matchings(&three_loops()).len(), 3);
    // In the split conifold every outer vertex has a single arrow in and a
    // single arrow out, so removing any arrow strands one of them.
    assert_eq!(
        simple_matchings(&split_conifold()),
        Vec::<Vec<usize>>::new()
    );
}

#[test]
fn matching_counts_add_along_concatenation() {
    let q = split_conifold();
    let pm = perfect_matchings(&q);
    let left = [6usize, 1, 4, 3];
    let right = [7usize, 0];
    let whole = [6usize, 1, 4, 3, 7, 0];
    for d in &pm {
        assert_eq!(n_d(&left, d) + n_d(&right, d), n_d(&whole, d));
    }
    assert_eq!(
        pm.iter().map(|d| n_d(&whole, d)).collect::<Vec<_>>(),
        vec![1, 1, 0, 1, 1, 0, 1, 1]
    );
}
