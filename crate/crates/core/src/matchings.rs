//! Perfect and simple matchings of a dimer quiver, and matching counts
//! along paths.
//!
//! A perfect matching is a set of arrows meeting the boundary of every face
//! exactly once. Enumeration is exact cover over the faces with a
//! fewest-candidates-first branching rule, so the output order is a fixed
//! function of the input. A matching is simple when deleting it leaves the
//! quiver strongly connected, which is what lets every vertex carry the
//! corresponding one-dimensional representation.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::tiling::{ArrowId, DimerQuiver};

/// All perfect matchings, each sorted by arrow id, the list sorted
/// lexicographically.
pub fn perfect_matchings(q: &DimerQuiver) -> Vec<Vec<ArrowId>> {
    let nf = q.faces.len();
    assert!(nf <= 64, "face count beyond the bitmask width");
    let arrow_mask: Vec<u64> = (0..q.arrows.len())
        .map(|a| q.faces_containing(a).iter().fold(0u64, |m, &f| m | 1 << f))
        .collect();
    let full: u64 = if nf == 64 { !0 } else { (1u64 << nf) - 1 };

    let mut out: Vec<Vec<ArrowId>> = Vec::new();
    let mut chosen: Vec<ArrowId> = Vec::new();
    cover(q, &arrow_mask, full, 0, &mut chosen, &mut out);
    out.sort();
    out
}

fn cover(
    q: &DimerQuiver,
    arrow_mask: &[u64],
    full: u64,
    covered: u64,
    chosen: &mut Vec<ArrowId>,
    out: &mut Vec<Vec<ArrowId>>,
) {
    if covered == full {
        let mut d = chosen.clone();
        d.sort_unstable();
        out.push(d);
        return;
    }
    // Branch on the uncovered face with the fewest usable arrows, lowest
    // face id on ties.
    let usable = |a: usize| arrow_mask[a] != 0 && arrow_mask[a] & covered == 0;
    let mut pick = None;
    for f in 0..q.faces.len() {
        if covered & (1 << f) != 0 {
            continue;
        }
        let n = (0..arrow_mask.len())
            .filter(|&a| usable(a) && arrow_mask[a] & (1 << f) != 0)
            .count();
        if pick.is_none_or(|(best, _)| n < best) {
            pick = Some((n, f));
        }
    }
    let (n, f) = pick.expect("covered != full implies an uncovered face");
    if n == 0 {
        return;
    }
    for a in 0..arrow_mask.len() {
        if usable(a) && arrow_mask[a] & (1 << f) != 0 {
            chosen.push(a);
            cover(q, arrow_mask, full, covered | arrow_mask[a], chosen, out);
            chosen.pop();
        }
    }
}

/// Whether every arrow lies in at least one perfect matching. The algebraic
/// theory assumes this; the caller gets a flag rather than an error.
pub fn nondegenerate(q: &DimerQuiver, perfect: &[Vec<ArrowId>]) -> bool {
    (0..q.arrows.len()).all(|a| perfect.iter().any(|d| d.contains(&a)))
}

/// Whether deleting the matching leaves the quiver strongly connected.
pub fn is_simple(q: &DimerQuiver, d: &[ArrowId]) -> bool {
    let dropped: BTreeSet<ArrowId> = d.iter().copied().collect();
    let kept: Vec<ArrowId> = (0..q.arrows.len())
        .filter(|a| !dropped.contains(a))
        .collect();
    strongly_connected(q, &kept)
}

/// The simple matchings among the perfect ones, in enumeration order.
pub fn simple_matchings(q: &DimerQuiver) -> Vec<Vec<ArrowId>> {
    perfect_matchings(q)
        .into_iter()
        .filter(|d| is_simple(q, d))
        .collect()
}

/// How many arrows of the path lie in the matching, with multiplicity. This
/// count is invariant under the tiling's path rewriting, which is what makes
/// it usable as a coordinate.
pub fn n_d(path: &[ArrowId], d: &[ArrowId]) -> u32 {
    path.iter().filter(|a| d.contains(a)).count() as u32
}

/// Kosaraju's two-pass check restricted to a subset of arrows. A single
/// vertex with no arrows counts as strongly connected.
fn strongly_connected(q: &DimerQuiver, arrows: &[ArrowId]) -> bool {
    let n = q.vertices;
    if n == 0 {
        return false;
    }
    let mut fwd = alloc::vec![Vec::new(); n];
    let mut bwd = alloc::vec![Vec::new(); n];
    for &a in arrows {
        fwd[q.arrows[a].tail].push(q.arrows[a].head);
        bwd[q.arrows[a].head].push(q.arrows[a].tail);
    }

    let mut order = Vec::with_capacity(n);
    let mut seen = alloc::vec![false; n];
    for start in 0..n {
        if seen[start] {
            continue;
        }
        // Iterative DFS recording finish order.
        let mut stack = alloc::vec![(start, 0usize)];
        seen[start] = true;
        while let Some(&mut (v, ref mut i)) = stack.last_mut() {
            if *i < fwd[v].len() {
                let w = fwd[v][*i];
                *i += 1;
                if !seen[w] {
                    seen[w] = true;
                    stack.push((w, 0));
                }
            } else {
                order.push(v);
                stack.pop();
            }
        }
    }

    // One backward sweep from the last-finished vertex must reach everything.
    let root = *order.last().expect("n > 0");
    let mut reached = alloc::vec![false; n];
    let mut stack = alloc::vec![root];
    reached[root] = true;
    let mut count = 1;
    while let Some(v) = stack.pop() {
        for &w in &bwd[v] {
            if !reached[w] {
                reached[w] = true;
                count += 1;
                stack.push(w);
            }
        }
    }
    if count != n {
        return false;
    }
    // And a forward sweep, to rule out one-way reachability.
    let mut reached = alloc::vec![false; n];
    let mut stack = alloc::vec![root];
    reached[root] = true;
    let mut count = 1;
    while let Some(v) = stack.pop() {
        for &w in &fwd[v] {
            if !reached[w] {
                reached[w] = true;
                count += 1;
                stack.push(w);
            }
        }
    }
    count == n
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tiling::{Arrow, Face, FaceColor};
    use alloc::vec;

    fn conifold() -> DimerQuiver {
        DimerQuiver {
            vertices: 2,
            arrows: vec![
                Arrow::new(0, 1, (0, 0)),
                Arrow::new(0, 1, (-1, -1)),
                Arrow::new(1, 0, (1, 0)),
                Arrow::new(1, 0, (0, 1)),
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

    /// One vertex, three loops, two triangle faces. Its center is k[x,y,z].
    fn three_loops() -> DimerQuiver {
        DimerQuiver {
            vertices: 1,
            arrows: vec![
                Arrow::new(0, 0, (1, 0)),
                Arrow::new(0, 0, (0, 1)),
                Arrow::new(0, 0, (-1, -1)),
            ],
            faces: vec![
                Face {
                    boundary: vec![0, 1, 2],
                    color: FaceColor::Plus,
                },
                Face {
                    boundary: vec![0, 2, 1],
                    color: FaceColor::Minus,
                },
            ],
        }
    }

    #[test]
    fn conifold_matchings_are_the_four_singletons() {
        let q = conifold();
        assert_eq!(q.validate(), Ok(()));
        assert_eq!(
            perfect_matchings(&q),
            vec![vec![0], vec![1], vec![2], vec![3]]
        );
    }

    #[test]
    fn conifold_matchings_are_all_simple() {
        let q = conifold();
        assert_eq!(simple_matchings(&q).len(), 4);
        assert!(nondegenerate(&q, &perfect_matchings(&q)));
    }

    #[test]
    fn single_vertex_matchings_are_simple() {
        let q = three_loops();
        assert_eq!(q.validate(), Ok(()));
        assert_eq!(perfect_matchings(&q), vec![vec![0], vec![1], vec![2]]);
        assert_eq!(simple_matchings(&q).len(), 3);
    }

    #[test]
    fn deleting_all_return_arrows_is_not_simple() {
        let q = conifold();
        assert!(!is_simple(&q, &[2, 3]));
        assert!(is_simple(&q, &[0]));
    }

    #[test]
    fn path_counts_respect_multiplicity() {
        assert_eq!(n_d(&[0, 2, 0, 2], &[0]), 2);
        assert_eq!(n_d(&[0, 2, 0, 2], &[1]), 0);
        assert_eq!(n_d(&[], &[0]), 0);
    }

    #[test]
    fn cover_agrees_with_brute_force() {
        for q in [conifold(), three_loops()] {
            let fast = perfect_matchings(&q);
            let e = q.arrows.len();
            let mut slow = Vec::new();
            for bits in 0u32..(1 << e) {
                let d: Vec<usize> = (0..e).filter(|&a| bits & (1 << a) != 0).collect();
                let exact = q
                    .faces
                    .iter()
                    .all(|f| f.boundary.iter().filter(|a| d.contains(a)).count() == 1);
                if exact {
                    slow.push(d);
                }
            }
            slow.sort();
            assert_eq!(fast, slow);
        }
    }
}
