//! Collapsing a forest of arrows into a smaller dimer tiling.
//!
//! Contracting an arrow merges its endpoints. As long as the contracted
//! arrows contain no undirected cycle, the quotient carries an induced
//! tiling: faces drop the contracted arrows and every surviving path maps
//! through. Windings are renormalized by a potential on each merged
//! component so that contracted arrows become invisible to homology, which
//! keeps the homology class of every cycle intact.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec::Vec;
use core::fmt;

use crate::matchings::{n_d, simple_matchings};
use crate::monomial::Monomial;
use crate::paths::{Equivalence, PathWord, RewriteSystem, Separation};
use crate::tiling::{Arrow, ArrowId, DimerQuiver, Face, HomologyClass, ValidationError, VertexId};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ContractionError {
    UnknownArrow {
        arrow: ArrowId,
    },
    /// This arrow closes an undirected cycle with the ones before it (a
    /// loop closes one on its own), so the set is not a forest.
    NotAForest {
        arrow: ArrowId,
    },
    /// The quotient fails to be a dimer tiling.
    InvalidTarget(Vec<ValidationError>),
}

impl fmt::Display for ContractionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ContractionError::UnknownArrow { arrow } => write!(f, "no arrow with id {arrow}"),
            ContractionError::NotAForest { arrow } => {
                write!(
                    f,
                    "arrow {arrow} closes an undirected cycle in the contracted set"
                )
            }
            ContractionError::InvalidTarget(errors) => {
                write!(f, "contracted tiling is invalid: ")?;
                for (i, e) in errors.iter().enumerate() {
                    if i > 0 {
                        write!(f, "; ")?;
                    }
                    write!(f, "{e}")?;
                }
                Ok(())
            }
        }
    }
}

/// A quotient of a dimer tiling by a forest of arrows, together with the
/// induced map on vertices, arrows, and paths.
#[derive(Clone, Debug)]
pub struct Contraction {
    target: DimerQuiver,
    vertex_map: Vec<VertexId>,
    arrow_map: Vec<Option<ArrowId>>,
    contracted: BTreeSet<ArrowId>,
}

impl Contraction {
    /// Contracts the given arrows of a validated tiling.
    ///
    /// Each merged component is rooted at its least vertex; target vertices
    /// are numbered by root order and target arrows by source order, so the
    /// quotient is a fixed function of the input. Face boundaries are
    /// rotated to start at their least arrow.
    pub fn contract(
        q: &DimerQuiver,
        arrows: &BTreeSet<ArrowId>,
    ) -> Result<Contraction, ContractionError> {
        for &a in arrows {
            if a >= q.arrows.len() {
                return Err(ContractionError::UnknownArrow { arrow: a });
            }
        }

        // Union-find over the contracted arrows, attaching larger roots
        // under smaller ones so every root is the least vertex of its
        // component.
        let mut parent: Vec<VertexId> = (0..q.vertices).collect();
        fn root(parent: &mut [VertexId], mut v: VertexId) -> VertexId {
            while parent[v] != v {
                parent[v] = parent[parent[v]];
                v = parent[v];
            }
            v
        }
        for &a in arrows {
            let rt = root(&mut parent, q.arrows[a].tail);
            let rh = root(&mut parent, q.arrows[a].head);
            if rt == rh {
                return Err(ContractionError::NotAForest { arrow: a });
            }
            parent[rt.max(rh)] = rt.min(rh);
        }

        let mut roots: Vec<VertexId> = (0..q.vertices).map(|v| root(&mut parent, v)).collect();
        let mut distinct = roots.clone();
        distinct.sort_unstable();
        distinct.dedup();
        let vertex_map: Vec<VertexId> = roots
            .drain(..)
            .map(|r| distinct.binary_search(&r).unwrap())
            .collect();

        // A potential per vertex cancels the windings of contracted arrows,
        // so merged vertices agree about where they sit on the torus.
        let mut adjacent: Vec<Vec<(VertexId, HomologyClass)>> = alloc::vec![Vec::new(); q.vertices];
        for &a in arrows {
            let ar = &q.arrows[a];
            adjacent[ar.tail].push((ar.head, ar.winding));
            adjacent[ar.head].push((ar.tail, (-ar.winding.0, -ar.winding.1)));
        }
        let mut potential: Vec<Option<HomologyClass>> = alloc::vec![None; q.vertices];
        for &r in &distinct {
            potential[r] = Some((0, 0));
            let mut queue = VecDeque::from([r]);
            while let Some(v) = queue.pop_front() {
                let at = potential[v].unwrap();
                for &(next, delta) in &adjacent[v] {
                    if potential[next].is_none() {
                        potential[next] = Some((at.0 + delta.0, at.1 + delta.1));
                        queue.push_back(next);
                    }
                }
            }
        }

        let mut arrow_map: Vec<Option<ArrowId>> = alloc::vec![None; q.arrows.len()];
        let mut target_arrows = Vec::new();
        for (a, ar) in q.arrows.iter().enumerate() {
            if arrows.contains(&a) {
                continue;
            }
            arrow_map[a] = Some(target_arrows.len());
            let pt = potential[ar.tail].unwrap();
            let ph = potential[ar.head].unwrap();
            target_arrows.push(Arrow {
                tail: vertex_map[ar.tail],
                head: vertex_map[ar.head],
                winding: (ar.winding.0 + pt.0 - ph.0, ar.winding.1 + pt.1 - ph.1),
                label: ar.label.clone(),
            });
        }

        let faces = q
            .faces
            .iter()
            .map(|f| {
                let image: Vec<ArrowId> = f.boundary.iter().filter_map(|&a| arrow_map[a]).collect();
                let start = image
                    .iter()
                    .enumerate()
                    .min_by_key(|&(_, a)| a)
                    .map_or(0, |(i, _)| i);
                let mut boundary = image[start..].to_vec();
                boundary.extend_from_slice(&image[..start]);
                Face {
                    boundary,
                    color: f.color,
                }
            })
            .collect();

        let target = DimerQuiver {
            vertices: distinct.len(),
            arrows: target_arrows,
            faces,
        };
        target.validate().map_err(ContractionError::InvalidTarget)?;
        Ok(Contraction {
            target,
            vertex_map,
            arrow_map,
            contracted: arrows.clone(),
        })
    }

    pub fn target(&self) -> &DimerQuiver {
        &self.target
    }

    pub fn contracted(&self) -> &BTreeSet<ArrowId> {
        &self.contracted
    }

    pub fn vertex_image(&self, v: VertexId) -> VertexId {
        self.vertex_map[v]
    }

    pub fn arrow_image(&self, a: ArrowId) -> Option<ArrowId> {
        self.arrow_map[a]
    }

    /// The induced map on paths: contracted arrows vanish, the rest map
    /// through. Images of composable paths stay composable.
    pub fn psi(&self, p: &PathWord) -> PathWord {
        PathWord {
            base: self.vertex_map[p.base],
            arrows: p.arrows.iter().filter_map(|&a| self.arrow_map[a]).collect(),
        }
    }

    /// Checks that every relation of the source maps to an equivalence in
    /// the target, within the given rewrite budget.
    pub fn relations_preserved(
        &self,
        source: &DimerQuiver,
        budget: usize,
    ) -> Result<(), RelationFailure> {
        relations_preserved(
            source,
            &self.target,
            &self.vertex_map,
            &self.arrow_map,
            budget,
        )
    }

    /// Monomial image of a source cycle: push through `psi`, then grade.
    pub fn cycle_image(&self, grading: &CycleGrading, p: &PathWord) -> Monomial {
        grading.image(&self.psi(p).arrows)
    }
}

/// A source relation whose two sides stop agreeing after mapping.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationFailure {
    pub arrow: ArrowId,
    pub detail: RelationBreak,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RelationBreak {
    /// A mapped side does not compose in the target, or the sides end up
    /// with different endpoints.
    ImageNotAPath,
    Inequivalent(Separation),
    /// The rewrite budget ran out before the images were joined.
    Unsettled,
}

impl fmt::Display for RelationFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "relation of arrow {} breaks: ", self.arrow)?;
        match &self.detail {
            RelationBreak::ImageNotAPath => write!(f, "an image side is not a path"),
            RelationBreak::Inequivalent(s) => write!(f, "images are inequivalent ({s})"),
            RelationBreak::Unsettled => write!(f, "undecided within budget"),
        }
    }
}

/// Relation preservation for an arbitrary vertex and arrow assignment.
/// [`Contraction::relations_preserved`] passes its own maps; tests can probe
/// hand-built ones.
pub fn relations_preserved(
    source: &DimerQuiver,
    target: &DimerQuiver,
    vertex_map: &[VertexId],
    arrow_map: &[Option<ArrowId>],
    budget: usize,
) -> Result<(), RelationFailure> {
    let source_rules = RewriteSystem::new(source);
    let target_rules = RewriteSystem::new(target);
    for rule in source_rules.rules() {
        let base = vertex_map[source.arrows[rule.arrow].head];
        let image = |side: &[ArrowId]| {
            let arrows: Vec<ArrowId> = side.iter().filter_map(|&a| arrow_map[a]).collect();
            PathWord::new(target, base, arrows)
        };
        let fail = |detail| {
            Err(RelationFailure {
                arrow: rule.arrow,
                detail,
            })
        };
        let (lhs, rhs) = match (image(&rule.lhs), image(&rule.rhs)) {
            (Ok(l), Ok(r)) => (l, r),
            _ => return fail(RelationBreak::ImageNotAPath),
        };
        if lhs.head(target) != rhs.head(target) {
            return fail(RelationBreak::ImageNotAPath);
        }
        match target_rules.equivalent(&lhs, &rhs, budget) {
            Equivalence::Equivalent => {}
            Equivalence::Inequivalent(s) => return fail(RelationBreak::Inequivalent(s)),
            Equivalence::Unsettled => return fail(RelationBreak::Unsettled),
        }
    }
    Ok(())
}

/// Grades cycles of a tiling by how often each simple matching meets them.
/// The matchings sit in a fixed list order; coordinate `i` of an image
/// counts the arrows shared with matching `i`.
#[derive(Clone, Debug)]
pub struct CycleGrading {
    matchings: Vec<Vec<ArrowId>>,
}

impl CycleGrading {
    pub fn new(target: &DimerQuiver) -> CycleGrading {
        CycleGrading {
            matchings: simple_matchings(target),
        }
    }

    pub fn matchings(&self) -> &[Vec<ArrowId>] {
        &self.matchings
    }

    pub fn width(&self) -> usize {
        self.matchings.len()
    }

    pub fn image(&self, word: &[ArrowId]) -> Monomial {
        Monomial::new(self.matchings.iter().map(|d| n_d(word, d)).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tiling::FaceColor;
    use alloc::vec;

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
    fn empty_contraction_is_the_identity() {
        let q = conifold();
        let c = Contraction::contract(&q, &BTreeSet::new()).unwrap();
        assert_eq!(*c.target(), q);
        assert_eq!(c.vertex_image(1), 1);
        assert_eq!(c.arrow_image(3), Some(3));
    }

    #[test]
    fn contracting_one_arrow_merges_the_conifold_to_three_loops() {
        let q = conifold();
        let c = Contraction::contract(&q, &BTreeSet::from([2])).unwrap();
        let t = c.target();
        assert_eq!(t.vertices, 1);
        // The potential shifts windings so the contracted arrow carries
        // none; each loop still closes up to total winding zero per face.
        assert_eq!(
            t.arrows,
            vec![
                Arrow::labeled(0, 0, (1, 0), "x"),
                Arrow::labeled(0, 0, (0, -1), "y"),
                Arrow::labeled(0, 0, (-1, 1), "w"),
            ]
        );
        assert_eq!(t.faces[0].boundary, vec![0, 1, 2]);
        assert_eq!(t.faces[1].boundary, vec![0, 2, 1]);
        assert_eq!(c.arrow_image(2), None);
        assert_eq!(c.arrow_image(3), Some(2));
    }

    #[test]
    fn psi_drops_contracted_arrows_and_preserves_cycle_homology() {
        let q = conifold();
        let c = Contraction::contract(&q, &BTreeSet::from([2])).unwrap();
        let sigma = PathWord::new(&q, 0, vec![0, 2, 1, 3]).unwrap();
        let image = c.psi(&sigma);
        assert_eq!(image, PathWord::new(c.target(), 0, vec![0, 1, 2]).unwrap());
        for cycle in [vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3]] {
            let p = PathWord::new(&q, 0, cycle).unwrap();
            assert_eq!(
                c.target().homology_class(&c.psi(&p).arrows),
                q.homology_class(&p.arrows)
            );
        }
    }

    #[test]
    fn forest_violations_are_rejected() {
        let q = conifold();
        assert_eq!(
            Contraction::contract(&q, &BTreeSet::from([0, 1])).unwrap_err(),
            ContractionError::NotAForest { arrow: 1 }
        );
        assert_eq!(
            Contraction::contract(&q, &BTreeSet::from([9])).unwrap_err(),
            ContractionError::UnknownArrow { arrow: 9 }
        );
    }

    #[test]
    fn relations_survive_a_legal_contraction() {
        let q = conifold();
        let c = Contraction::contract(&q, &BTreeSet::from([2])).unwrap();
        assert_eq!(c.relations_preserved(&q, 1000), Ok(()));
    }

    #[test]
    fn relation_check_catches_a_target_with_the_wrong_faces() {
        // Both faces read the same word, so the target imposes no
        // relations at all and the source relations cannot map through.
        let q = conifold();
        let mut broken = conifold();
        broken.faces[1].boundary = broken.faces[0].boundary.clone();
        broken.validate().unwrap();
        let failure = relations_preserved(
            &q,
            &broken,
            &[0, 1],
            &[Some(0), Some(1), Some(2), Some(3)],
            1000,
        )
        .unwrap_err();
        assert_eq!(failure.arrow, 0);
        assert_eq!(
            failure.detail,
            RelationBreak::Inequivalent(Separation::ClassExhausted { explored: 1 })
        );
    }

    #[test]
    fn grading_counts_matching_crossings() {
        let q = conifold();
        let grading = CycleGrading::new(&q);
        assert_eq!(grading.width(), 4);
        assert_eq!(grading.image(&[0, 2]).exps(), &[1, 0, 1, 0]);
        assert_eq!(grading.image(&[0, 2, 1, 3]).exps(), &[1, 1, 1, 1]);
        assert_eq!(grading.image(&[]).exps(), &[0, 0, 0, 0]);
    }
}
