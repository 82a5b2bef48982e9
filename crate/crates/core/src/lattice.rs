//! Exact integer linear algebra: ranks, Hermite normal forms, kernels.
//!
//! Everything here runs over `i128` with Euclidean row reduction, so results
//! are exact at the matrix sizes this crate meets (a handful of rows of
//! single-digit width with small entries). The Hermite normal form is the
//! canonical one (positive pivots, entries above each pivot reduced into
//! `[0, pivot)`), which makes lattice equality a plain comparison.

use alloc::vec;
use alloc::vec::Vec;

fn row_sub(rows: &mut [Vec<i128>], i: usize, j: usize, q: i128) {
    if q == 0 {
        return;
    }
    let rj = rows[j].clone();
    for (a, b) in rows[i].iter_mut().zip(rj) {
        *a -= q * b;
    }
}

fn floor_div(a: i128, b: i128) -> i128 {
    let q = a / b;
    if (a % b != 0) && ((a < 0) != (b < 0)) {
        q - 1
    } else {
        q
    }
}

/// Row-reduces `m` to Hermite normal form in place, applying the same row
/// operations to `u`. Returns the rank (rows `0..rank` of `m` are the basis;
/// rows of `u` beyond `rank` span the kernel of the original matrix).
fn reduce(m: &mut [Vec<i128>], u: &mut [Vec<i128>]) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        loop {
            let mut best: Option<usize> = None;
            for i in r..rows {
                if m[i][c] != 0 {
                    let better = match best {
                        None => true,
                        Some(b) => m[i][c].abs() < m[b][c].abs(),
                    };
                    if better {
                        best = Some(i);
                    }
                }
            }
            let Some(b) = best else { break };
            m.swap(r, b);
            u.swap(r, b);
            let mut clean = true;
            for i in r + 1..rows {
                if m[i][c] != 0 {
                    let q = m[i][c] / m[r][c];
                    row_sub(m, i, r, q);
                    row_sub(u, i, r, q);
                    if m[i][c] != 0 {
                        clean = false;
                    }
                }
            }
            if clean {
                if m[r][c] < 0 {
                    for x in m[r].iter_mut() {
                        *x = -*x;
                    }
                    for x in u[r].iter_mut() {
                        *x = -*x;
                    }
                }
                for j in 0..r {
                    let q = floor_div(m[j][c], m[r][c]);
                    row_sub(m, j, r, q);
                    row_sub(u, j, r, q);
                }
                r += 1;
                break;
            }
        }
    }
    r
}

/// Canonical basis of the lattice spanned by `rows`: the nonzero rows of the
/// Hermite normal form.
pub fn hermite_basis(rows: &[Vec<i128>]) -> Vec<Vec<i128>> {
    let mut m: Vec<Vec<i128>> = rows.to_vec();
    let n = m.len();
    let mut u: Vec<Vec<i128>> = vec![vec![]; n];
    let rank = reduce(&mut m, &mut u);
    m.truncate(rank);
    m
}

/// Rank of the integer span of `rows`.
pub fn rank(rows: &[Vec<i64>]) -> usize {
    hermite_basis(&widen(rows)).len()
}

/// Whether two generating sets span the same lattice.
pub fn lattice_eq(a: &[Vec<i64>], b: &[Vec<i64>]) -> bool {
    hermite_basis(&widen(a)) == hermite_basis(&widen(b))
}

/// Whether `v` lies in the lattice spanned by the Hermite basis `basis`.
pub fn hermite_contains(basis: &[Vec<i128>], v: &[i128]) -> bool {
    let mut v = v.to_vec();
    for row in basis {
        let p = match row.iter().position(|&x| x != 0) {
            Some(p) => p,
            None => continue,
        };
        if v[p] != 0 {
            if v[p] % row[p] != 0 {
                return false;
            }
            let q = v[p] / row[p];
            for (a, b) in v.iter_mut().zip(row) {
                *a -= q * b;
            }
        }
    }
    v.iter().all(|&x| x == 0)
}

/// Basis for the integer kernel `{ v : A v = 0 }` of the matrix with rows
/// `a`, each row of width `width`.
pub fn kernel_basis(a: &[Vec<i128>], width: usize) -> Vec<Vec<i128>> {
    // Row-reduce the transpose while tracking the transform; transform rows
    // aligned with zero rows of the reduction kill every column of the
    // transpose, i.e. every row of `a`.
    let mut t: Vec<Vec<i128>> = (0..width)
        .map(|c| a.iter().map(|row| row[c]).collect())
        .collect();
    let mut u: Vec<Vec<i128>> = (0..width)
        .map(|i| {
            let mut e = vec![0; width];
            e[i] = 1;
            e
        })
        .collect();
    let rank = reduce(&mut t, &mut u);
    u.split_off(rank)
}

pub fn widen(rows: &[Vec<i64>]) -> Vec<Vec<i128>> {
    rows.iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect()
}

/// Divides through by the gcd of the entries (a zero vector is returned
/// unchanged).
pub fn primitive(v: &mut [i128]) {
    let mut g: i128 = 0;
    for &x in v.iter() {
        g = gcd(g, x.abs());
    }
    if g > 1 {
        for x in v.iter_mut() {
            *x /= g;
        }
    }
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rows(data: &[&[i64]]) -> Vec<Vec<i64>> {
        data.iter().map(|r| r.to_vec()).collect()
    }

    #[test]
    fn quadric_cone_generators_have_rank_three() {
        let m = rows(&[&[1, 0, 1, 0], &[1, 0, 0, 1], &[0, 1, 1, 0], &[0, 1, 0, 1]]);
        assert_eq!(rank(&m), 3);
    }

    #[test]
    fn rank_handles_degenerate_input() {
        assert_eq!(rank(&rows(&[&[0, 0], &[0, 0]])), 0);
        assert_eq!(rank(&[]), 0);
        assert_eq!(rank(&rows(&[&[2, 4], &[1, 2], &[3, 6]])), 1);
    }

    #[test]
    fn hermite_basis_is_canonical() {
        // Two generating sets of the same lattice reduce to the same basis.
        let a = widen(&rows(&[&[2, 1], &[0, 3]]));
        let b = widen(&rows(&[&[2, 4], &[2, 1], &[4, 2]]));
        assert_eq!(hermite_basis(&a), hermite_basis(&b));
        assert!(lattice_eq(
            &rows(&[&[1, 0, 1, 0], &[1, 0, 0, 1], &[0, 1, 1, 0], &[0, 1, 0, 1]]),
            &rows(&[&[1, 1, 1, 1], &[1, 0, 1, 0], &[1, 0, 0, 1], &[0, 1, 1, 0]]),
        ));
        assert!(!lattice_eq(
            &rows(&[&[2, 0], &[0, 1]]),
            &rows(&[&[1, 0], &[0, 1]])
        ));
    }

    #[test]
    fn hermite_membership_matches_construction() {
        let basis = hermite_basis(&widen(&rows(&[&[2, 1, 0], &[0, 3, 1]])));
        assert!(hermite_contains(&basis, &[2, 1, 0]));
        assert!(hermite_contains(&basis, &[2, 4, 1]));
        assert!(hermite_contains(&basis, &[-2, -1, 0]));
        assert!(!hermite_contains(&basis, &[1, 0, 0]));
    }

    #[test]
    fn kernel_vectors_annihilate_the_rows() {
        let a = widen(&rows(&[
            &[1, 0, 1, 0],
            &[1, 0, 0, 1],
            &[0, 1, 1, 0],
            &[0, 1, 0, 1],
        ]));
        let k = kernel_basis(&a, 4);
        assert_eq!(k.len(), 1);
        for v in &k {
            for row in &a {
                let dot: i128 = row.iter().zip(v).map(|(a, b)| a * b).sum();
                assert_eq!(dot, 0);
            }
        }
    }
}
