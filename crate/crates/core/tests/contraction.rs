mod common;

use common::{conifold, split_conifold, splitting_arrows};
use dimerlab_core::contraction::{Contraction, CycleGrading};
use dimerlab_core::paths::{PathWord, DEFAULT_BUDGET};

#[test]
fn contracting_the_splitting_arrows_recovers_the_conifold_exactly() {
    let q = split_conifold();
    let c = Contraction::contract(&q, &splitting_arrows()).unwrap();
    // Not just isomorphic: the same vertex numbering, arrow order, labels,
    // windings, and face rotations as the hand-written fixture.
    assert_eq!(*c.target(), conifold());
    for (source, target) in [
        (0, Some(0)),
        (1, Some(1)),
        (2, Some(2)),
        (3, Some(3)),
        (4, None),
    ] {
        assert_eq!(c.arrow_image(source), target);
    }
    assert_eq!(c.vertex_image(0), 0);
    assert_eq!(c.vertex_image(4), 0);
    assert_eq!(c.vertex_image(5), 0);
    assert_eq!(c.vertex_image(1), 1);
    assert_eq!(c.vertex_image(2), 1);
    assert_eq!(c.vertex_image(3), 1);
}

#[test]
fn the_contraction_respects_every_relation() {
    let q = split_conifold();
    let c = Contraction::contract(&q, &splitting_arrows()).unwrap();
    c.relations_preserved(&q, DEFAULT_BUDGET).unwrap();
}

#[test]
fn path_images_forget_only_the_contracted_arrows() {
    let q = split_conifold();
    let c = Contraction::contract(&q, &splitting_arrows()).unwrap();
    let p = PathWord::new(&q, 0, vec![6, 1, 4, 3, 7, 0]).unwrap();
    let image = c.psi(&p);
    assert_eq!(image, PathWord::new(c.target(), 0, vec![1, 3, 0]).unwrap());
    assert_eq!(
        q.homology_class(&p.arrows),
        c.target().homology_class(&image.arrows)
    );
}

#[test]
fn cycle_images_grade_against_the_target_matchings() {
    let q = split_conifold();
    let c = Contraction::contract(&q, &splitting_arrows()).unwrap();
    let grading = CycleGrading::new(c.target());
    assert_eq!(grading.width(), 4);
    // A unit cycle crosses each simple matching once.
    let unit = PathWord::new(&q, 0, vec![6, 1, 5, 2, 7, 0, 4, 3]).unwrap();
    assert_eq!(c.cycle_image(&grading, &unit).exps(), &[1, 1, 1, 1]);
    // A four-arrow cycle through the outer vertices hits only two.
    let quarter = PathWord::new(&q, 0, vec![6, 1, 4, 3]).unwrap();
    assert_eq!(c.cycle_image(&grading, &quarter).exps(), &[0, 1, 0, 1]);
}
