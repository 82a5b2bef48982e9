//! Affine semigroup algebras presented by monomial generators.
//!
//! A [`SemigroupAlgebra`] owns a canonical generator list (trivial and
//! redundant generators removed, sorted), the Hermite basis of the lattice
//! the generators span, and the face lattice of their cone. Everything
//! downstream (membership, Krull dimension, monomial ideal loci) reads off
//! this one structure.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::cone::FaceLattice;
use crate::lattice;
use crate::monomial::{semigroup_member, MemberError, Monomial};

/// Rank of the lattice spanned by the exponent vectors of `monos`. This is
/// the Krull dimension of the algebra they generate.
pub fn lattice_rank(monos: &[Monomial]) -> usize {
    let rows: Vec<Vec<i64>> = monos.iter().map(|m| m.signed_exps()).collect();
    lattice::rank(&rows)
}

/// Whether two monomial sets span the same lattice.
pub fn same_lattice(a: &[Monomial], b: &[Monomial]) -> bool {
    let ra: Vec<Vec<i64>> = a.iter().map(|m| m.signed_exps()).collect();
    let rb: Vec<Vec<i64>> = b.iter().map(|m| m.signed_exps()).collect();
    lattice::lattice_eq(&ra, &rb)
}

#[derive(Clone, Debug)]
pub struct SemigroupAlgebra {
    width: usize,
    gens: Vec<Monomial>,
    rank: usize,
    faces: FaceLattice,
}

impl SemigroupAlgebra {
    /// Builds the algebra generated by `gens` inside monomials of the given
    /// width. The generator list is reduced to the unique minimal one (the
    /// atoms of the semigroup). Every generator must have the stated width.
    pub fn new(width: usize, gens: Vec<Monomial>) -> Result<SemigroupAlgebra, MemberError> {
        for g in &gens {
            assert!(g.width() == width, "width mismatch");
        }
        let distinct: BTreeSet<Monomial> = gens.into_iter().filter(|g| !g.is_trivial()).collect();
        let distinct: Vec<Monomial> = distinct.into_iter().collect();
        let mut atoms = Vec::new();
        for (i, g) in distinct.iter().enumerate() {
            let others: Vec<Monomial> = distinct
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, h)| h.clone())
                .collect();
            if !semigroup_member(g, &others)? {
                atoms.push(g.clone());
            }
        }
        let rank = lattice_rank(&atoms);
        let faces = FaceLattice::build(&atoms);
        Ok(SemigroupAlgebra {
            width,
            gens: atoms,
            rank,
            faces,
        })
    }

    pub fn width(&self) -> usize {
        self.width
    }

    /// The minimal generator list, in canonical monomial order.
    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    /// Krull dimension of the algebra.
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn face_lattice(&self) -> &FaceLattice {
        &self.faces
    }

    /// Whether `m` lies in the semigroup generated by the atoms.
    pub fn contains(&self, m: &Monomial) -> Result<bool, MemberError> {
        semigroup_member(m, &self.gens)
    }

    /// Every member of degree at most `bound`, in canonical order. The
    /// trivial monomial is always included.
    pub fn monomials_up_to(&self, bound: u32) -> Vec<Monomial> {
        let mut seen = BTreeSet::from([Monomial::one(self.width)]);
        let mut frontier = alloc::vec![Monomial::one(self.width)];
        while let Some(m) = frontier.pop() {
            for g in &self.gens {
                if m.degree() + g.degree() <= bound {
                    let next = m.mul(g);
                    if seen.insert(next.clone()) {
                        frontier.push(next);
                    }
                }
            }
        }
        seen.into_iter().collect()
    }

    /// Whether the given monomials span the same lattice as this algebra's
    /// generators. Used to compare fraction fields: two monomial algebras
    /// have equal fraction fields exactly when their exponent lattices agree.
    pub fn same_lattice_as(&self, monos: &[Monomial]) -> bool {
        same_lattice(&self.gens, monos)
    }

    /// Reduces `cands` to a minimal generating set of the monomial ideal
    /// they generate: a candidate is dropped when another one divides it
    /// with quotient in the semigroup.
    pub fn minimal_ideal_gens(&self, cands: &[Monomial]) -> Result<Vec<Monomial>, MemberError> {
        let distinct: BTreeSet<Monomial> = cands.iter().cloned().collect();
        let mut kept: Vec<Monomial> = Vec::new();
        // Canonical order is degree-ascending, so a generator always
        // precedes anything it generates.
        for d in distinct {
            let mut redundant = false;
            for k in &kept {
                if let Some(q) = k.quotient_of(&d) {
                    if q.is_trivial() || self.contains(&q)? {
                        redundant = true;
                        break;
                    }
                }
            }
            if !redundant {
                kept.push(d);
            }
        }
        Ok(kept)
    }
}
