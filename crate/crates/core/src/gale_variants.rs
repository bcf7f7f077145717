//! Concrete coordinates for the six extremal diagram variants.
//!
//! Each variant encodes a nonpyramidal `d`-polytope with `d + 3` vertices
//! and exactly four missing edges. The shared skeleton of (ii)-(iv) is a
//! fan of five directions `T, U, V, W, X` (vertices `0..5`) whose
//! circle-consecutive pairs are the four missing edges, plus a block of
//! `d - 2` co-located points opposite `V`. The variants differ only in how
//! many of the five fan directions form exactly diametral pairs: none for
//! (ii), `{U, X}` for (iii), `{T, W}` and `{U, X}` for (iv).
//!
//! (i) replaces the fifth fan point by two extra vertices opposite the
//! middle of the fan, (v) is three directions with two doubled antipodes,
//! and (vi) is four doubled directions forming two diametral pairs, the
//! diagram of a free join of two quadrilaterals.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::gale::{Dir, VariantTag};

fn dir(x: i64, y: i64) -> Dir {
    [
        BigRational::from(BigInt::from(x)),
        BigRational::from(BigInt::from(y)),
    ]
}

fn repeat(x: i64, y: i64, count: usize) -> impl Iterator<Item = Dir> {
    std::iter::repeat_with(move || dir(x, y)).take(count)
}

/// Direction lists per variant; callers guarantee `tag.admits(d)`.
pub(crate) fn variant_dirs(tag: VariantTag, d: usize) -> Vec<Dir> {
    match tag {
        // t, u, v, w on a closed semicircle with T, W diametral; a, b
        // strictly between -U and -V. Missing edges tu, uv, vw, ab.
        VariantTag::I => vec![
            dir(0, 1),
            dir(1, 1),
            dir(1, 0),
            dir(0, -1),
            dir(-5, -1),
            dir(-3, -2),
        ],
        // Fan t, u, v, w, x with no diametral pair; block at -V.
        VariantTag::II => {
            let mut dirs = vec![dir(-3, 2), dir(1, 1), dir(1, 0), dir(1, -1), dir(-3, -2)];
            dirs.extend(repeat(-1, 0, d - 2));
            dirs
        }
        // Same fan with X = -U: one diametral pair among the five.
        VariantTag::III => {
            let mut dirs = vec![dir(-3, 2), dir(1, 1), dir(1, 0), dir(1, -1), dir(-1, -1)];
            dirs.extend(repeat(-1, 0, d - 2));
            dirs
        }
        // W = -T and X = -U: two diametral pairs among the five.
        VariantTag::IV => {
            let mut dirs = vec![dir(-1, 1), dir(1, 1), dir(1, 0), dir(1, -1), dir(-1, -1)];
            dirs.extend(repeat(-1, 0, d - 2));
            dirs
        }
        // u, v, w plus two points at -U and two at -W. Missing edges uv,
        // vw and the two co-located pairs.
        VariantTag::V => vec![
            dir(3, 4),
            dir(1, 0),
            dir(3, -4),
            dir(-3, -4),
            dir(-3, -4),
            dir(-3, 4),
            dir(-3, 4),
        ],
        // Two doubled diametral pairs: the free join of two quadrilaterals.
        // Missing edges are the four co-located pairs.
        VariantTag::VI => vec![
            dir(1, 0),
            dir(1, 0),
            dir(-1, 0),
            dir(-1, 0),
            dir(0, 1),
            dir(0, 1),
            dir(0, -1),
            dir(0, -1),
        ],
    }
}
