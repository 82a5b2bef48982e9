#![allow(dead_code)]

use std::collections::BTreeSet;

use dimerlab_core::tiling::{Arrow, DimerQuiver, Face, FaceColor};

/// The suspended pinch point resolution: two vertices, four arrows, two
/// square faces. Cancellative, and its center is the full cone over the
/// quadric.
pub fn conifold() -> DimerQuiver {
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

/// The conifold with each of its four arrows split in two by an extra
/// vertex. The four splitting arrows form a forest, and contracting them
/// recovers the conifold exactly; the splitting destroys cancellativity
/// and every simple matching.
pub fn split_conifold() -> DimerQuiver {
    DimerQuiver {
        vertices: 6,
        arrows: vec![
            Arrow::labeled(5, 1, (0, 0), "x"),
            Arrow::labeled(4, 1, (-1, -1), "y"),
            Arrow::labeled(3, 0, (1, 0), "z"),
            Arrow::labeled(2, 0, (0, 1), "w"),
            Arrow::labeled(1, 2, (0, 0), "a"),
            Arrow::labeled(1, 3, (0, 0), "b"),
            Arrow::labeled(0, 4, (0, 0), "c"),
            Arrow::labeled(0, 5, (0, 0), "d"),
        ],
        faces: vec![
            Face {
                boundary: vec![0, 5, 2, 6, 1, 4, 3, 7],
                color: FaceColor::Plus,
            },
            Face {
                boundary: vec![0, 4, 3, 6, 1, 5, 2, 7],
                color: FaceColor::Minus,
            },
        ],
    }
}

/// The splitting arrows of [`split_conifold`].
pub fn splitting_arrows() -> BTreeSet<usize> {
    BTreeSet::from([4, 5, 6, 7])
}

/// One vertex carrying three loops and two triangular faces.
pub fn three_loops() -> DimerQuiver {
    DimerQuiver {
        vertices: 1,
        arrows: vec![
            Arrow::labeled(0, 0, (1, 0), "x"),
            Arrow::labeled(0, 0, (0, -1), "y"),
            Arrow::labeled(0, 0, (-1, 1), "w"),
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
