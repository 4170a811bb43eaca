//! Hand transcription of the published classification table for the cubic
//! surface (r = 6), kept independent of the library's enumeration code.
#![allow(dead_code)]

use std::collections::BTreeSet;

/// `(β², d, multiplicities, dim M_β)` for one instantiated row.
pub type Row = (i64, i64, [i64; 6], i64);

/// A row key up to permutation of the multiplicities.
pub type Key = (i64, i64, Vec<i64>);

pub fn key(self_int: i64, d: i64, m: &[i64]) -> Key {
    let mut m = m.to_vec();
    m.sort_unstable();
    (self_int, d, m)
}

/// The three fixed blocks exactly as printed: β² = −1, 0 and 4.
pub fn printed_fixed_blocks() -> Vec<Row> {
    vec![
        (-1, 0, [-1, 0, 0, 0, 0, 0], 3),
        (-1, 1, [1, 1, 0, 0, 0, 0], 3),
        (-1, 2, [1, 1, 1, 1, 1, 0], 3),
        (0, 1, [1, 0, 0, 0, 0, 0], 4),
        (0, 2, [1, 1, 1, 1, 0, 0], 4),
        (0, 3, [2, 1, 1, 1, 1, 1], 4),
        (4, 4, [2, 2, 2, 0, 0, 0], 8),
        (4, 6, [4, 2, 2, 2, 2, 0], 8),
        (4, 8, [4, 4, 4, 2, 2, 2], 8),
        (4, 10, [4, 4, 4, 4, 4, 4], 8),
    ]
}

/// The β² = 1 + 2t block as printed (eight rows), labelled with the block's β².
pub fn printed_odd_block(t: i64) -> Vec<Row> {
    let n = 1 + 2 * t;
    let dim = 5 + 2 * t;
    vec![
        (n, 1 + t, [t, 0, 0, 0, 0, 0], dim),
        (n, 2 + t, [1 + t, 1, 1, 0, 0, 0], dim),
        (n, 2 + 2 * t, [1 + t, 1 + t, 1 + t, 1 + t, 0, 0], dim),
        (n, 3 + t, [2 + t, 1, 1, 1, 1, 0], dim),
        (n, 3 + 2 * t, [2 + t, 1 + t, 1 + t, 1 + t, 1, 0], dim),
        (n, 3 + 3 * t, [2 + 2 * t, 1 + t, 1 + t, 1 + t, 1 + t, t], dim),
        (n, 4 + 2 * t, [2 + t, 2 + t, 2 + t, 1 + t, 1, 1], dim),
        (n, 4 + 3 * t, [2 + 2 * t, 2 + t, 2 + t, 1 + t, 1 + t, 1 + t], dim),
    ]
}

/// The β² = 2 + 2t block as printed (nine rows).
pub fn printed_even_block(t: i64) -> Vec<Row> {
    let n = 2 + 2 * t;
    let dim = 6 + 2 * t;
    vec![
        (n, 2 + t, [1 + t, 1, 0, 0, 0, 0], dim),
        (n, 3 + t, [2 + t, 1, 1, 1, 0, 0], dim),
        (n, 3 + 2 * t, [2 + t, 1 + t, 1 + t, 1 + t, 0, 0], dim),
        (n, 4 + 2 * t, [2 + t, 2 + t, 2 + t, 1 + t, 1, 0], dim),
        (n, 4 + t, [3 + t, 1, 1, 1, 1, 1], dim),
        (n, 4 + 3 * t, [3 + 2 * t, 1 + t, 1 + t, 1 + t, 1 + t, 1 + t], dim),
        (n, 5 + 2 * t, [3 + t, 2 + t, 2 + t, 2 + t, 1, 1], dim),
        (n, 5 + 3 * t, [3 + 2 * t, 2 + t, 2 + t, 2 + t, 1 + t, 1 + t], dim),
        (n, 6 + 3 * t, [3 + 2 * t, 3 + t, 2 + t, 2 + t, 2 + t, 2 + t], dim),
    ]
}

/// Every printed row instantiated at `t = 0..=t_max`.
pub fn printed_rows(t_max: i64) -> Vec<Row> {
    let mut rows = printed_fixed_blocks();
    for t in 0..=t_max {
        rows.extend(printed_odd_block(t));
        rows.extend(printed_even_block(t));
    }
    rows
}

/// The printed table with three corrections:
/// - the third β² = 1+2t row reads `(1+t,1+t,1+t,t,0,0)`; as printed its
///   square is 0 for every t;
/// - the β² = 1+2t block gains the row `d = 5+3t, (2+2t,2+t,2+t,2+t,2+t,2+t)`
///   (the block is typeset with nine rows but lists eight);
/// - the β² = 4 block gains the plane conic class `(2;0,0,0,0,0,0)`.
pub fn corrected_rows(t_max: i64) -> Vec<Row> {
    let mut rows = printed_fixed_blocks();
    rows.push((4, 2, [0; 6], 8));
    for t in 0..=t_max {
        let mut odd = printed_odd_block(t);
        odd[2].2 = [1 + t, 1 + t, 1 + t, t, 0, 0];
        odd.push((1 + 2 * t, 5 + 3 * t, [2 + 2 * t, 2 + t, 2 + t, 2 + t, 2 + t, 2 + t], 5 + 2 * t));
        rows.extend(odd);
        rows.extend(printed_even_block(t));
    }
    rows
}

/// Keys with their dim column; duplicates (rows colliding at small t) merge.
pub fn keyed(rows: &[Row]) -> BTreeSet<(Key, i64)> {
    rows.iter().map(|(n, d, m, dim)| (key(*n, *d, m), *dim)).collect()
}

/// Direct evaluation of β² and −K·β on the cubic surface.
pub fn square_and_degree(d: i64, m: &[i64]) -> (i64, i64) {
    let sq = d * d - m.iter().map(|x| x * x).sum::<i64>();
    let anti = 3 * d - m.iter().sum::<i64>();
    (sq, anti)
}
