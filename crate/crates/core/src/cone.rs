//! Face enumeration for the rational cone spanned by a monomial set, and
//! vanishing loci of monomial ideals.
//!
//! Exponent vectors live in the nonnegative orthant, so the cone they span is
//! always pointed. Supporting hyperplanes are found by scanning subsets of
//! generators one short of the span rank: every facet contains such a subset,
//! so the scan sees every facet, and any extra supporting hyperplanes it
//! finds only contribute faces that exist anyway. Faces are then the
//! intersections of the recorded contact sets, each identified by the set of
//! generators lying on it.
//!
//! A monomial prime of the semigroup algebra corresponds to a face; its
//! height is the span rank minus the face rank, which for a finitely
//! generated domain over a field is exact.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use crate::lattice;
use crate::monomial::{MemberError, Monomial};
use crate::semigroup::SemigroupAlgebra;

/// A face of the cone, named by the generators lying on it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeFace {
    /// Indices into the generator list, sorted.
    pub support: Vec<usize>,
    /// Rank of the lattice spanned by the supported generators.
    pub rank: usize,
}

/// The full face lattice of the cone spanned by a generator list.
#[derive(Clone, Debug)]
pub struct FaceLattice {
    /// Rank of the lattice generated by all exponent vectors.
    pub ambient_rank: usize,
    /// Every face, sorted by rank and then by support.
    pub faces: Vec<ConeFace>,
    /// Hermite basis of the full generator lattice (span coordinates refer
    /// to this basis).
    span_basis: Vec<Vec<i128>>,
    /// Supporting functionals in span coordinates, with their contact sets.
    normals: Vec<(Vec<i128>, BTreeSet<usize>)>,
}

impl FaceLattice {
    pub fn build(gens: &[Monomial]) -> FaceLattice {
        let rows: Vec<Vec<i64>> = gens.iter().map(|g| g.signed_exps()).collect();
        let span_basis = lattice::hermite_basis(&lattice::widen(&rows));
        let rank = span_basis.len();
        let coords: Vec<Vec<i128>> = gens
            .iter()
            .map(|g| span_coords(&span_basis, g).expect("generator lies in its own span"))
            .collect();

        let m = gens.len();
        let mut normals: Vec<(Vec<i128>, BTreeSet<usize>)> = Vec::new();
        let mut seen = BTreeSet::new();
        if rank > 0 {
            for subset in subsets_of_size(m, rank - 1) {
                let picked: Vec<Vec<i128>> = subset.iter().map(|&i| coords[i].clone()).collect();
                let kernel = lattice::kernel_basis(&picked, rank);
                if kernel.len() != 1 {
                    continue;
                }
                let mut normal = kernel.into_iter().next().unwrap();
                lattice::primitive(&mut normal);
                let dots: Vec<i128> = coords
                    .iter()
                    .map(|c| c.iter().zip(&normal).map(|(a, b)| a * b).sum())
                    .collect();
                if dots.iter().any(|&d| d < 0) {
                    if dots.iter().any(|&d| d > 0) {
                        continue;
                    }
                    for x in normal.iter_mut() {
                        *x = -*x;
                    }
                }
                if seen.insert(normal.clone()) {
                    let contact = dots
                        .iter()
                        .enumerate()
                        .filter(|(_, &d)| d == 0)
                        .map(|(i, _)| i)
                        .collect();
                    normals.push((normal, contact));
                }
            }
        }

        // Faces are intersections of contact sets; close under intersection
        // starting from the whole cone.
        let full: BTreeSet<usize> = (0..m).collect();
        let mut supports: BTreeSet<BTreeSet<usize>> = BTreeSet::new();
        supports.insert(full);
        loop {
            let mut fresh: Vec<BTreeSet<usize>> = Vec::new();
            for s in &supports {
                for (_, contact) in &normals {
                    let cut: BTreeSet<usize> = s.intersection(contact).copied().collect();
                    if !supports.contains(&cut) {
                        fresh.push(cut);
                    }
                }
            }
            if fresh.is_empty() {
                break;
            }
            supports.extend(fresh);
        }

        let mut faces: Vec<ConeFace> = supports
            .into_iter()
            .map(|s| {
                let picked: Vec<Vec<i64>> = s.iter().map(|&i| gens[i].signed_exps()).collect();
                ConeFace {
                    rank: lattice::rank(&picked),
                    support: s.into_iter().collect(),
                }
            })
            .collect();
        faces.sort_by(|a, b| (a.rank, &a.support).cmp(&(b.rank, &b.support)));

        FaceLattice {
            ambient_rank: rank,
            faces,
            span_basis,
            normals,
        }
    }

    /// Whether the exponent vector `point` (which must lie in the cone) lies
    /// on the face with the given support.
    pub fn face_contains(&self, support: &[usize], point: &Monomial) -> bool {
        let coords =
            span_coords(&self.span_basis, point).expect("point must lie in the generator lattice");
        let support: BTreeSet<usize> = support.iter().copied().collect();
        self.normals
            .iter()
            .filter(|(_, contact)| support.is_subset(contact))
            .all(|(n, _)| n.iter().zip(&coords).map(|(a, b)| a * b).sum::<i128>() == 0)
    }
}

/// Coordinates of a monomial with respect to a Hermite basis, when it lies in
/// that lattice.
fn span_coords(basis: &[Vec<i128>], m: &Monomial) -> Option<Vec<i128>> {
    let mut v: Vec<i128> = m.exps().iter().map(|&e| e as i128).collect();
    let mut coords = Vec::with_capacity(basis.len());
    for row in basis {
        let p = row.iter().position(|&x| x != 0)?;
        let c = if v[p] % row[p] == 0 {
            v[p] / row[p]
        } else {
            return None;
        };
        for (a, b) in v.iter_mut().zip(row) {
            *a -= c * b;
        }
        coords.push(c);
    }
    if v.iter().all(|&x| x == 0) {
        Some(coords)
    } else {
        None
    }
}

fn subsets_of_size(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    go(0, n, k, &mut cur, &mut out);
    out
}

/// One maximal face avoiding a monomial ideal, with the height of the
/// corresponding monomial prime.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocusFace {
    pub support: Vec<usize>,
    pub rank: usize,
    pub height: usize,
}

/// The faces of the cone disjoint from a monomial ideal, i.e. the components
/// of the ideal's vanishing locus, together with the smallest prime height
/// among them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialIdealLocus {
    pub algebra_rank: usize,
    pub maximal_faces: Vec<LocusFace>,
    pub min_height: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LocusError {
    /// An ideal generator is not a member of the algebra.
    NotInAlgebra {
        index: usize,
    },
    /// An ideal generator is the trivial monomial, so the ideal is the unit
    /// ideal and has empty vanishing locus.
    TrivialGenerator {
        index: usize,
    },
    /// Height and dimension were requested for the zero ideal, which has no
    /// height.
    EmptyIdeal,
    Member(MemberError),
}

impl fmt::Display for LocusError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LocusError::NotInAlgebra { index } => {
                write!(f, "ideal generator {index} is not a member of the algebra")
            }
            LocusError::TrivialGenerator { index } => {
                write!(
                    f,
                    "ideal generator {index} is trivial, the ideal is the unit ideal"
                )
            }
            LocusError::EmptyIdeal => {
                write!(
                    f,
                    "the zero ideal has no height; give at least one generator"
                )
            }
            LocusError::Member(e) => write!(f, "{e}"),
        }
    }
}

impl From<MemberError> for LocusError {
    fn from(e: MemberError) -> Self {
        LocusError::Member(e)
    }
}

/// Computes the maximal cone faces disjoint from the ideal generated by
/// `ideal_gens` inside `algebra`, with prime heights.
pub fn locus_of(
    algebra: &SemigroupAlgebra,
    ideal_gens: &[Monomial],
) -> Result<MonomialIdealLocus, LocusError> {
    for (index, g) in ideal_gens.iter().enumerate() {
        if g.is_trivial() {
            return Err(LocusError::TrivialGenerator { index });
        }
        if !algebra.contains(g)? {
            return Err(LocusError::NotInAlgebra { index });
        }
    }
    let lat = algebra.face_lattice();
    let disjoint: Vec<&ConeFace> = lat
        .faces
        .iter()
        .filter(|face| {
            ideal_gens
                .iter()
                .all(|d| !lat.face_contains(&face.support, d))
        })
        .collect();
    let mut maximal: Vec<LocusFace> = disjoint
        .iter()
        .filter(|face| {
            let sup: BTreeSet<usize> = face.support.iter().copied().collect();
            !disjoint.iter().any(|other| {
                let other_sup: BTreeSet<usize> = other.support.iter().copied().collect();
                sup.len() < other_sup.len() && sup.is_subset(&other_sup)
            })
        })
        .map(|face| LocusFace {
            support: face.support.clone(),
            rank: face.rank,
            height: lat.ambient_rank - face.rank,
        })
        .collect();
    maximal.sort_by(|a, b| (a.height, &a.support).cmp(&(b.height, &b.support)));
    let min_height = maximal
        .iter()
        .map(|f| f.height)
        .min()
        .unwrap_or(lat.ambient_rank);
    Ok(MonomialIdealLocus {
        algebra_rank: lat.ambient_rank,
        maximal_faces: maximal,
        min_height,
    })
}

/// Geometric height of the ideal (smallest prime height over the locus) and
/// the geometric dimension `dim_r - ght`. The zero ideal is rejected; the
/// callers measure maximal ideals, which always have generators.
pub fn ght_gdim(
    algebra: &SemigroupAlgebra,
    ideal_gens: &[Monomial],
    dim_r: usize,
) -> Result<(usize, i64), LocusError> {
    if ideal_gens.is_empty() {
        return Err(LocusError::EmptyIdeal);
    }
    let locus = locus_of(algebra, ideal_gens)?;
    Ok((locus.min_height, dim_r as i64 - locus.min_height as i64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::SemigroupAlgebra;
    use alloc::vec;

    fn m(exps: &[u32]) -> Monomial {
        Monomial::new(exps.to_vec())
    }

    fn plane() -> SemigroupAlgebra {
        SemigroupAlgebra::new(2, vec![m(&[1, 0]), m(&[0, 1])]).unwrap()
    }

    fn quadric_cone() -> SemigroupAlgebra {
        SemigroupAlgebra::new(
            4,
            vec![
                m(&[1, 0, 1, 0]),
                m(&[1, 0, 0, 1]),
                m(&[0, 1, 1, 0]),
                m(&[0, 1, 0, 1]),
            ],
        )
        .unwrap()
    }

    #[test]
    fn plane_cone_has_four_faces() {
        let alg = plane();
        let lat = alg.face_lattice();
        assert_eq!(lat.ambient_rank, 2);
        let ranks: Vec<usize> = lat.faces.iter().map(|f| f.rank).collect();
        assert_eq!(ranks, vec![0, 1, 1, 2]);
    }

    #[test]
    fn quadric_cone_face_lattice() {
        // Cone over a square: the origin, four extreme rays, four facets,
        // and the cone itself. The diagonal generator pairs span interior
        // planes, not faces.
        let alg = quadric_cone();
        let lat = alg.face_lattice();
        assert_eq!(lat.ambient_rank, 3);
        assert_eq!(lat.faces.len(), 10);
        let facets: Vec<&ConeFace> = lat.faces.iter().filter(|f| f.rank == 2).collect();
        assert_eq!(facets.len(), 4);
        for f in &facets {
            assert_eq!(f.support.len(), 2);
            // adjacent generators only: xz,xw / xz,yz / xw,yw / yz,yw
            assert_ne!(f.support, vec![0, 3]);
            assert_ne!(f.support, vec![1, 2]);
        }
    }

    #[test]
    fn sigma_lies_only_on_the_full_cone() {
        let alg = quadric_cone();
        let lat = alg.face_lattice();
        let sigma = m(&[1, 1, 1, 1]);
        for face in &lat.faces {
            let inside = lat.face_contains(&face.support, &sigma);
            assert_eq!(inside, face.support.len() == 4, "face {:?}", face.support);
        }
    }

    #[test]
    fn locus_of_interior_point_is_the_facets() {
        let alg = quadric_cone();
        let locus = locus_of(&alg, &[m(&[1, 1, 1, 1])]).unwrap();
        assert_eq!(locus.algebra_rank, 3);
        assert_eq!(locus.maximal_faces.len(), 4);
        assert!(locus.maximal_faces.iter().all(|f| f.height == 1));
        assert_eq!(locus.min_height, 1);
    }

    #[test]
    fn locus_on_the_plane_matches_hand_count() {
        // Ideal (x) in k[x,y]: the y-axis is the one maximal face avoiding
        // it, of prime height one.
        let alg = plane();
        let locus = locus_of(&alg, &[m(&[1, 0])]).unwrap();
        assert_eq!(locus.maximal_faces.len(), 1);
        assert_eq!(locus.maximal_faces[0].support, vec![1]);
        assert_eq!(locus.min_height, 1);
        assert_eq!(ght_gdim(&alg, &[m(&[1, 0])], 2).unwrap(), (1, 1));
    }

    #[test]
    fn ideal_meeting_every_ray_leaves_only_the_origin() {
        let alg = plane();
        let locus = locus_of(&alg, &[m(&[1, 0]), m(&[0, 1])]).unwrap();
        assert_eq!(locus.maximal_faces.len(), 1);
        assert!(locus.maximal_faces[0].support.is_empty());
        assert_eq!(locus.min_height, 2);
        assert_eq!(
            ght_gdim(&alg, &[m(&[1, 0]), m(&[0, 1])], 2).unwrap(),
            (2, 0)
        );
    }

    #[test]
    fn empty_ideal_leaves_the_whole_cone() {
        let alg = plane();
        let locus = locus_of(&alg, &[]).unwrap();
        assert_eq!(locus.min_height, 0);
        assert_eq!(locus.maximal_faces.len(), 1);
        assert_eq!(locus.maximal_faces[0].support, vec![0, 1]);
        // Height of the zero ideal is undefined, not zero.
        assert_eq!(ght_gdim(&alg, &[], 2), Err(LocusError::EmptyIdeal));
    }

    #[test]
    fn locus_rejects_foreign_and_trivial_generators() {
        let alg = quadric_cone();
        assert_eq!(
            locus_of(&alg, &[m(&[1, 0, 0, 0])]),
            Err(LocusError::NotInAlgebra { index: 0 })
        );
        assert_eq!(
            locus_of(&alg, &[m(&[0, 0, 0, 0])]),
            Err(LocusError::TrivialGenerator { index: 0 })
        );
    }
}
