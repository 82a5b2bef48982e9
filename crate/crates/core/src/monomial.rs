//! Exponent-vector monomials and semigroup membership.
//!
//! A monomial is an exponent vector over a fixed coordinate list (one
//! coordinate per simple matching of the contracted quiver, in matching-list
//! order). The toolkit never multiplies out polynomials; every algebraic
//! question is asked of these vectors directly.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

/// Largest total degree `semigroup_member` will take on. The membership walk
/// visits a subset of the box under its target, so the cap bounds work and
/// memory before either can grow past desk scale.
pub const MEMBER_DEGREE_CAP: u32 = 64;

/// An exponent vector. Width is the number of coordinates; the zero vector is
/// the trivial monomial `1`.
///
/// Monomials order by total degree first, then by exponent vector in
/// descending lexicographic order. With coordinates named `x, y, z, w` this
/// lists `xz` before `xw` before `yz`, matching how generator sets are
/// conventionally written, and every report in the crate inherits that order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    /// The trivial monomial (all exponents zero).
    pub fn one(width: usize) -> Self {
        Monomial {
            exps: vec![0; width],
        }
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn width(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_trivial(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// Componentwise sum. Panics if the widths differ; mixing coordinate
    /// systems is a caller bug, not a data condition.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        assert_eq!(
            self.width(),
            other.width(),
            "monomial width mismatch: {} vs {}",
            self.width(),
            other.width()
        );
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Monomial {
        Monomial {
            exps: self.exps.iter().map(|e| e * n).collect(),
        }
    }

    /// Whether `self` divides `other` componentwise.
    pub fn divides(&self, other: &Monomial) -> bool {
        assert_eq!(
            self.width(),
            other.width(),
            "monomial width mismatch: {} vs {}",
            self.width(),
            other.width()
        );
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self` when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if self.divides(other) {
            Some(Monomial {
                exps: other
                    .exps
                    .iter()
                    .zip(&self.exps)
                    .map(|(b, a)| b - a)
                    .collect(),
            })
        } else {
            None
        }
    }

    /// Exponents as signed entries, for lattice arithmetic.
    pub fn signed_exps(&self) -> Vec<i64> {
        self.exps.iter().map(|&e| e as i64).collect()
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Monomial{:?}", self.exps)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.exps.cmp(&self.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Failure channel for [`semigroup_member`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MemberError {
    /// The target degree exceeds [`MEMBER_DEGREE_CAP`]. Raising the cap is a
    /// code change on purpose: a query this large is almost certainly a bug
    /// in the caller's windowing.
    DegreeCapExceeded { degree: u32 },
}

impl fmt::Display for MemberError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MemberError::DegreeCapExceeded { degree } => write!(
                f,
                "membership target has degree {degree}, above the cap of {MEMBER_DEGREE_CAP}"
            ),
        }
    }
}

/// Decides whether `target` lies in the additive semigroup generated by
/// `gens` (the trivial monomial always does).
///
/// Walks the sums of generators that stay componentwise under `target`,
/// recording visited vectors, so the answer is exact. Work is bounded by the
/// box under `target`, hence the degree cap.
pub fn semigroup_member(target: &Monomial, gens: &[Monomial]) -> Result<bool, MemberError> {
    for g in gens {
        assert_eq!(
            g.width(),
            target.width(),
            "generator width {} does not match target width {}",
            g.width(),
            target.width()
        );
    }
    let degree = target.degree();
    if degree > MEMBER_DEGREE_CAP {
        return Err(MemberError::DegreeCapExceeded { degree });
    }
    if target.is_trivial() {
        return Ok(true);
    }
    let gens: Vec<&Monomial> = gens.iter().filter(|g| !g.is_trivial()).collect();
    let mut seen = alloc::collections::BTreeSet::new();
    let mut queue = alloc::collections::VecDeque::new();
    let start = Monomial::one(target.width());
    seen.insert(start.clone());
    queue.push_back(start);
    while let Some(cur) = queue.pop_front() {
        for g in &gens {
            let next = cur.mul(g);
            if !next.divides(target) {
                continue;
            }
            if next == *target {
                return Ok(true);
            }
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(exps: &[u32]) -> Monomial {
        Monomial::new(exps.to_vec())
    }

    #[test]
    fn product_adds_exponents() {
        assert_eq!(m(&[1, 0, 1, 0]).mul(&m(&[0, 1, 0, 1])), m(&[1, 1, 1, 1]));
    }

    #[test]
    fn divisibility_is_componentwise() {
        assert!(m(&[1, 0]).divides(&m(&[2, 3])));
        assert!(!m(&[1, 0]).divides(&m(&[0, 3])));
        assert_eq!(m(&[1, 0]).quotient_of(&m(&[2, 3])), Some(m(&[1, 3])));
        assert_eq!(m(&[1, 4]).quotient_of(&m(&[2, 3])), None);
    }

    #[test]
    #[should_panic(expected = "width mismatch")]
    fn width_mismatch_is_a_caller_bug() {
        m(&[1, 0]).mul(&m(&[1, 0, 0]));
    }

    #[test]
    fn ordering_is_degree_then_descending_lex() {
        // xz < xw < yz < yw among the degree-two quadric cone generators.
        let xz = m(&[1, 0, 1, 0]);
        let xw = m(&[1, 0, 0, 1]);
        let yz = m(&[0, 1, 1, 0]);
        let yw = m(&[0, 1, 0, 1]);
        let mut v = alloc::vec![yw.clone(), xz.clone(), yz.clone(), xw.clone()];
        v.sort();
        assert_eq!(v, alloc::vec![xz, xw, yz, yw]);
        assert!(m(&[0, 0, 0, 0]) < m(&[1, 0, 0, 0]));
        assert!(m(&[2, 0, 0, 0]) < m(&[1, 0, 0, 1]));
    }

    #[test]
    fn membership_on_the_quadric_cone() {
        let gens = [
            m(&[1, 0, 1, 0]),
            m(&[1, 0, 0, 1]),
            m(&[0, 1, 1, 0]),
            m(&[0, 1, 0, 1]),
        ];
        // sigma = xz * yw
        assert_eq!(semigroup_member(&m(&[1, 1, 1, 1]), &gens), Ok(true));
        assert_eq!(semigroup_member(&m(&[2, 1, 2, 1]), &gens), Ok(true));
        // x alone is not a product of the degree-two generators
        assert_eq!(semigroup_member(&m(&[1, 0, 0, 0]), &gens), Ok(false));
        // degree parity obstruction
        assert_eq!(semigroup_member(&m(&[1, 1, 1, 0]), &gens), Ok(false));
        // the trivial monomial is the empty product
        assert_eq!(semigroup_member(&m(&[0, 0, 0, 0]), &gens), Ok(true));
    }

    #[test]
    fn membership_ignores_trivial_generators() {
        let gens = [m(&[0, 0]), m(&[1, 1])];
        assert_eq!(semigroup_member(&m(&[2, 2]), &gens), Ok(true));
        assert_eq!(semigroup_member(&m(&[1, 0]), &gens), Ok(false));
    }

    #[test]
    fn membership_degree_cap_is_explicit() {
        let gens = [m(&[1])];
        assert_eq!(semigroup_member(&m(&[64]), &gens), Ok(true));
        assert_eq!(
            semigroup_member(&m(&[65]), &gens),
            Err(MemberError::DegreeCapExceeded { degree: 65 })
        );
    }
}
