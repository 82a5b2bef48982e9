//! Quivers embedded in the two-torus whose faces tile it.
//!
//! A [`DimerQuiver`] is the dual picture of a brane tiling: a directed graph
//! on the torus whose complement is a disjoint union of oriented disk faces,
//! each bounded by a directed cycle. Faces come in two orientation classes
//! (plus and minus), and every arrow borders exactly one face of each class.
//! Instead of an explicit embedding we store one homology class per arrow;
//! contractibility of each face then pins the topology down.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

pub type VertexId = usize;
pub type ArrowId = usize;
pub type FaceId = usize;

/// Homology class of a walk on the torus, as winding numbers around the two
/// fundamental cycles.
pub type HomologyClass = (i64, i64);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub tail: VertexId,
    pub head: VertexId,
    pub winding: HomologyClass,
    pub label: Option<String>,
}

impl Arrow {
    pub fn new(tail: VertexId, head: VertexId, winding: HomologyClass) -> Arrow {
        Arrow {
            tail,
            head,
            winding,
            label: None,
        }
    }

    pub fn labeled(tail: VertexId, head: VertexId, winding: HomologyClass, label: &str) -> Arrow {
        Arrow {
            tail,
            head,
            winding,
            label: Some(String::from(label)),
        }
    }
}

/// Boundary orientation class of a face. Every arrow lies on one plus face
/// and one minus face.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum FaceColor {
    Plus,
    Minus,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    /// Arrows in traversal order: the head of each is the tail of the next,
    /// cyclically.
    pub boundary: Vec<ArrowId>,
    pub color: FaceColor,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ValidationError {
    ArrowEndpointOutOfRange {
        arrow: ArrowId,
    },
    UnknownArrowInFace {
        face: FaceId,
        arrow: ArrowId,
    },
    FaceTooShort {
        face: FaceId,
    },
    BrokenFaceCycle {
        face: FaceId,
        position: usize,
    },
    /// Each arrow must appear exactly once on a plus face and once on a
    /// minus face.
    ArrowFaceCoverage {
        arrow: ArrowId,
        plus: usize,
        minus: usize,
    },
    FaceNotContractible {
        face: FaceId,
        winding: HomologyClass,
    },
    EulerCharacteristic {
        value: i64,
    },
    DisconnectedQuiver,
}

impl fmt::Display for ValidationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ValidationError::ArrowEndpointOutOfRange { arrow } => {
                write!(f, "arrow {arrow} has an endpoint outside the vertex range")
            }
            ValidationError::UnknownArrowInFace { face, arrow } => {
                write!(f, "face {face} references unknown arrow {arrow}")
            }
            ValidationError::FaceTooShort { face } => {
                write!(f, "face {face} has fewer than two boundary arrows")
            }
            ValidationError::BrokenFaceCycle { face, position } => {
                write!(f, "face {face} boundary breaks at position {position}: head does not meet the next tail")
            }
            ValidationError::ArrowFaceCoverage { arrow, plus, minus } => {
                write!(f, "arrow {arrow} lies on {plus} plus and {minus} minus faces, expected one of each")
            }
            ValidationError::FaceNotContractible { face, winding } => {
                write!(
                    f,
                    "face {face} has winding ({}, {}), expected (0, 0)",
                    winding.0, winding.1
                )
            }
            ValidationError::EulerCharacteristic { value } => {
                write!(f, "Euler characteristic is {value}, a torus tiling needs 0")
            }
            ValidationError::DisconnectedQuiver => write!(f, "the quiver is not connected"),
        }
    }
}

/// One named tiling axiom with its violations. `ran` is false when an
/// earlier structural failure (bad indices) made the check meaningless.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationCheck {
    pub name: &'static str,
    pub ran: bool,
    pub failures: Vec<ValidationError>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub checks: Vec<ValidationCheck>,
}

impl ValidationReport {
    pub fn ok(&self) -> bool {
        self.checks.iter().all(|c| c.ran && c.failures.is_empty())
    }

    pub fn failures(&self) -> Vec<&ValidationError> {
        self.checks.iter().flat_map(|c| c.failures.iter()).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimerQuiver {
    pub vertices: usize,
    pub arrows: Vec<Arrow>,
    pub faces: Vec<Face>,
}

impl DimerQuiver {
    /// Checks every tiling axiom and reports each by name, in a fixed order.
    /// When index checks fail the dependent checks are marked as not run.
    pub fn validation_report(&self) -> ValidationReport {
        let mut endpoints = Vec::new();
        for (id, a) in self.arrows.iter().enumerate() {
            if a.tail >= self.vertices || a.head >= self.vertices {
                endpoints.push(ValidationError::ArrowEndpointOutOfRange { arrow: id });
            }
        }
        let mut indices = Vec::new();
        for (fid, face) in self.faces.iter().enumerate() {
            for &a in &face.boundary {
                if a >= self.arrows.len() {
                    indices.push(ValidationError::UnknownArrowInFace {
                        face: fid,
                        arrow: a,
                    });
                }
            }
        }
        let structural_ok = endpoints.is_empty() && indices.is_empty();

        let mut checks = alloc::vec![
            ValidationCheck {
                name: "arrow endpoints in range",
                ran: true,
                failures: endpoints
            },
            ValidationCheck {
                name: "face boundaries reference known arrows",
                ran: true,
                failures: indices,
            },
        ];
        type CheckFn = fn(&DimerQuiver) -> Vec<ValidationError>;
        let dependent: [(&'static str, CheckFn); 5] = [
            (
                "face boundaries are directed cycles of length at least two",
                check_face_cycles,
            ),
            (
                "each arrow lies on one face of each color",
                check_face_coverage,
            ),
            ("faces are contractible", check_contractible),
            ("Euler characteristic is zero", check_euler),
            ("quiver is connected", check_connected),
        ];
        for (name, run) in dependent {
            checks.push(if structural_ok {
                ValidationCheck {
                    name,
                    ran: true,
                    failures: run(self),
                }
            } else {
                ValidationCheck {
                    name,
                    ran: false,
                    failures: Vec::new(),
                }
            });
        }
        ValidationReport { checks }
    }

    /// Convenience wrapper over [`Self::validation_report`], flattening the
    /// failures in report order.
    pub fn validate(&self) -> Result<(), Vec<ValidationError>> {
        let report = self.validation_report();
        if report.ok() {
            Ok(())
        } else {
            Err(report.failures().into_iter().cloned().collect())
        }
    }

    /// Sum of the windings along a walk.
    pub fn homology_class(&self, arrows: &[ArrowId]) -> HomologyClass {
        arrows.iter().fold((0, 0), |(x, y), &a| {
            let w = self.arrows[a].winding;
            (x + w.0, y + w.1)
        })
    }

    /// Arrows leaving `v`, in id order.
    pub fn out_arrows(&self, v: VertexId) -> Vec<ArrowId> {
        (0..self.arrows.len())
            .filter(|&a| self.arrows[a].tail == v)
            .collect()
    }

    /// The faces whose boundary uses `a`, in face id order. Exactly two on a
    /// valid tiling.
    pub fn faces_containing(&self, a: ArrowId) -> Vec<FaceId> {
        (0..self.faces.len())
            .filter(|&f| self.faces[f].boundary.contains(&a))
            .collect()
    }

    /// Longest face boundary, zero when there are no faces.
    pub fn max_face_len(&self) -> usize {
        self.faces
            .iter()
            .map(|f| f.boundary.len())
            .max()
            .unwrap_or(0)
    }
}

fn check_face_cycles(q: &DimerQuiver) -> Vec<ValidationError> {
    let mut errors = Vec::new();
    for (fid, face) in q.faces.iter().enumerate() {
        if face.boundary.len() < 2 {
            errors.push(ValidationError::FaceTooShort { face: fid });
            continue;
        }
        for (pos, &a) in face.boundary.iter().enumerate() {
            let next = face.boundary[(pos + 1) % face.boundary.len()];
            if q.arrows[a].head != q.arrows[next].tail {
                errors.push(ValidationError::BrokenFaceCycle {
                    face: fid,
                    position: pos,
                });
            }
        }
    }
    errors
}

fn check_face_coverage(q: &DimerQuiver) -> Vec<ValidationError> {
    let mut errors = Vec::new();
    for id in 0..q.arrows.len() {
        let mut plus = 0;
        let mut minus = 0;
        for face in &q.faces {
            let n = face.boundary.iter().filter(|&&a| a == id).count();
            match face.color {
                FaceColor::Plus => plus += n,
                FaceColor::Minus => minus += n,
            }
        }
        if plus != 1 || minus != 1 {
            errors.push(ValidationError::ArrowFaceCoverage {
                arrow: id,
                plus,
                minus,
            });
        }
    }
    errors
}

fn check_contractible(q: &DimerQuiver) -> Vec<ValidationError> {
    let mut errors = Vec::new();
    for (fid, face) in q.faces.iter().enumerate() {
        let w = q.homology_class(&face.boundary);
        if w != (0, 0) {
            errors.push(ValidationError::FaceNotContractible {
                face: fid,
                winding: w,
            });
        }
    }
    errors
}

fn check_euler(q: &DimerQuiver) -> Vec<ValidationError> {
    let euler = q.vertices as i64 - q.arrows.len() as i64 + q.faces.len() as i64;
    if euler == 0 {
        Vec::new()
    } else {
        alloc::vec![ValidationError::EulerCharacteristic { value: euler }]
    }
}

fn check_connected(q: &DimerQuiver) -> Vec<ValidationError> {
    if q.vertices == 0 {
        return alloc::vec![ValidationError::DisconnectedQuiver];
    }
    let mut seen = alloc::vec![false; q.vertices];
    let mut stack = alloc::vec![0usize];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for a in &q.arrows {
            for (x, y) in [(a.tail, a.head), (a.head, a.tail)] {
                if x == v && !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
    }
    if seen.into_iter().all(|s| s) {
        Vec::new()
    } else {
        alloc::vec![ValidationError::DisconnectedQuiver]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    /// Two vertices, four arrows, two square faces. The tiling whose center
    /// is the conifold coordinate ring.
    fn conifold() -> DimerQuiver {
        DimerQuiver {
            vertices: 2,
            arrows: vec![
                Arrow::labeled(0, 1, (0, 0), "x"),
                Arrow::labeled(0, 1, (-1, -1), "y"),
                Arrow::labeled(1, 0, (1, 0), "z"),
                Arrow::labeled(1, 0, (0, 1), "w"),
            ],
            faces: vec![
                Face {
                    boundary: vec![0, 2, 1, 3],
                    color: FaceColor::Plus,
                },
                Face {
                    boundary: vec![0, 3, 1, 2],
                    color: FaceColor::Minus,
                },
            ],
        }
    }

    #[test]
    fn conifold_quiver_is_a_valid_tiling() {
        let report = conifold().validation_report();
        assert!(report.ok(), "{:?}", report.failures());
        assert_eq!(report.checks.len(), 7);
    }

    #[test]
    fn missing_face_breaks_coverage_and_euler() {
        let mut q = conifold();
        q.faces.pop();
        let errors = q.validate().unwrap_err();
        assert!(errors
            .iter()
            .any(|e| matches!(e, ValidationError::ArrowFaceCoverage { minus: 0, .. })));
        assert!(errors.contains(&ValidationError::EulerCharacteristic { value: -1 }));
    }

    #[test]
    fn shuffled_boundary_breaks_the_face_cycle() {
        let mut q = conifold();
        q.faces[0].boundary = vec![0, 1, 2, 3];
        let errors = q.validate().unwrap_err();
        assert!(errors
            .iter()
            .any(|e| matches!(e, ValidationError::BrokenFaceCycle { face: 0, .. })));
    }

    #[test]
    fn bad_winding_is_caught_by_contractibility() {
        let mut q = conifold();
        q.arrows[2].winding = (2, 0);
        let errors = q.validate().unwrap_err();
        assert_eq!(
            errors
                .iter()
                .filter(|e| matches!(e, ValidationError::FaceNotContractible { .. }))
                .count(),
            2
        );
    }

    #[test]
    fn structural_errors_suppress_dependent_checks() {
        let q = DimerQuiver {
            vertices: 1,
            arrows: vec![Arrow::new(0, 3, (0, 0))],
            faces: vec![Face {
                boundary: vec![7],
                color: FaceColor::Plus,
            }],
        };
        let report = q.validation_report();
        assert!(!report.ok());
        assert_eq!(
            report.failures(),
            vec![
                &ValidationError::ArrowEndpointOutOfRange { arrow: 0 },
                &ValidationError::UnknownArrowInFace { face: 0, arrow: 7 },
            ]
        );
        assert!(report.checks.iter().skip(2).all(|c| !c.ran));
    }

    #[test]
    fn homology_adds_along_walks() {
        let q = conifold();
        assert_eq!(q.homology_class(&[0, 2]), (1, 0));
        assert_eq!(q.homology_class(&[1, 3]), (-1, 0));
        assert_eq!(q.homology_class(&[0, 2, 1, 3]), (0, 0));
        assert_eq!(q.homology_class(&[]), (0, 0));
    }

    #[test]
    fn incidence_helpers_agree_with_the_picture() {
        let q = conifold();
        assert_eq!(q.out_arrows(0), vec![0, 1]);
        assert_eq!(q.out_arrows(1), vec![2, 3]);
        assert_eq!(q.faces_containing(2), vec![0, 1]);
        assert_eq!(q.max_face_len(), 4);
    }
}
