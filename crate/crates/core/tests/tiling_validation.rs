mod common;

use common::{conifold, split_conifold, three_loops};
use dimerlab_core::tiling::{Arrow, DimerQuiver, Face, FaceColor, ValidationError};

#[test]
fn the_fixture_tilings_validate() {
    for q in [conifold(), split_conifold(), three_loops()] {
        let report = q.validation_report();
        assert!(report.ok(), "unexpected failures: {:?}", report);
        assert!(q.validate().is_ok());
    }
}

#[test]
fn every_check_is_named_and_listed_once() {
    let report = conifold().validation_report();
    let names: Vec<&str> = report.checks.iter().map(|c| c.name).collect();
    let mut dedup = names.clone();
    dedup.dedup();
    assert_eq!(names, dedup);
    assert_eq!(names.len(), 7);
}

#[test]
fn losing_a_face_breaks_coverage_and_the_euler_count() {
    let mut q = conifold();
    q.faces.pop();
    let errors = q.validate().unwrap_err();
    assert!(errors
        .iter()
        .any(|e| matches!(e, ValidationError::ArrowFaceCoverage { .. })));
    assert!(errors
        .iter()
        .any(|e| matches!(e, ValidationError::EulerCharacteristic { .. })));
}

#[test]
fn a_nonzero_face_winding_is_rejected() {
    let mut q = three_loops();
    q.arrows[2] = Arrow::labeled(0, 0, (-1, 2), "w");
    let errors = q.validate().unwrap_err();
    assert!(errors.iter().any(|e| matches!(
        e,
        ValidationError::FaceNotContractible {
            face: _,
            winding: (0, 1)
        }
    )));
}

#[test]
fn a_dangling_arrow_reference_is_a_structural_error() {
    let q = DimerQuiver {
        vertices: 1,
        arrows: vec![Arrow::new(0, 0, (1, 0))],
        faces: vec![
            Face {
                boundary: vec![0, 9],
                color: FaceColor::Plus,
            },
            Face {
                boundary: vec![0],
                color: FaceColor::Minus,
            },
        ],
    };
    let errors = q.validate().unwrap_err();
    assert!(errors
        .iter()
        .any(|e| matches!(e, ValidationError::UnknownArrowInFace { .. })));
}
