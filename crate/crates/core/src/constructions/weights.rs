use std::collections::HashMap;

use serde::Serialize;

/// Minimal weights have s at most this.
pub const WEIGHT_S_BOUND: u32 = 10;

/// A weight (A, s) with zero first row and sum of entries 3s - 1. `rows[0]` and
/// `rows[1]` are the second and third rows of A; column c belongs to slicing c.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CubeWeight {
    pub rows: [[u32; 3]; 2],
    pub s: u32,
}

impl CubeWeight {
    /// From the tuple (a21, a31; a22, a32; a23, a33).
    pub const fn from_tuple(t: [u32; 6]) -> Self {
        let s = (t[0] + t[1] + t[2] + t[3] + t[4] + t[5] + 1) / 3;
        CubeWeight { rows: [[t[0], t[2], t[4]], [t[1], t[3], t[5]]], s }
    }

    pub fn tuple(&self) -> [u32; 6] {
        let r = &self.rows;
        [r[0][0], r[1][0], r[0][1], r[1][1], r[0][2], r[1][2]]
    }

    fn entry(&self, row: usize, col: usize) -> u32 {
        if row == 0 {
            0
        } else {
            self.rows[row - 1][col]
        }
    }

    /// The valuation bounds max(s - a_i1 - a_j2 - a_k3, 0), indexed 9i + 3j + k.
    pub fn bounds(&self) -> [u32; 27] {
        std::array::from_fn(|f| {
            let (i, j, k) = (f / 9, f / 3 % 3, f % 3);
            let used = self.entry(i, 0) + self.entry(j, 1) + self.entry(k, 2);
            self.s.saturating_sub(used)
        })
    }
}

pub const TAUS: [[u32; 6]; 6] = [
    [1, 1, 0, 0, 0, 0],
    [0, 1, 0, 1, 0, 0],
    [1, 2, 0, 1, 0, 1],
    [1, 1, 1, 1, 0, 1],
    [1, 2, 1, 2, 1, 1],
    [2, 3, 1, 2, 1, 2],
];

fn compositions(total: u32, parts: usize, prefix: &mut Vec<u32>, out: &mut Vec<[u32; 6]>) {
    if parts == 1 {
        prefix.push(total);
        out.push(std::array::from_fn(|i| prefix[i]));
        prefix.pop();
        return;
    }
    for first in 0..=total {
        prefix.push(first);
        compositions(total - first, parts - 1, prefix, out);
        prefix.pop();
    }
}

/// The minimal elements of the set of weights with s <= WEIGHT_S_BOUND, ordered by
/// their valuation bounds.
pub fn enumerate_minimal_weights() -> Vec<CubeWeight> {
    let mut by_bounds: HashMap<[u32; 27], Vec<CubeWeight>> = HashMap::new();
    for s in 1..=WEIGHT_S_BOUND {
        let mut tuples = Vec::new();
        compositions(3 * s - 1, 6, &mut Vec::new(), &mut tuples);
        for t in tuples {
            let w = CubeWeight::from_tuple(t);
            by_bounds.entry(w.bounds()).or_default().push(w);
        }
    }
    let mut vectors: Vec<[u32; 27]> = by_bounds.keys().copied().collect();
    vectors.sort_by_key(|b| (b.iter().sum::<u32>(), *b));
    let mut minimal: Vec<[u32; 27]> = Vec::new();
    for b in vectors {
        if !minimal.iter().any(|m| m.iter().zip(&b).all(|(x, y)| x <= y)) {
            minimal.push(b);
        }
    }
    let mut out: Vec<CubeWeight> = minimal.iter().flat_map(|b| by_bounds[b].clone()).collect();
    out.sort();
    out
}

/// Weights with a_2i <= a_3i for each slicing and a_31 >= a_32 >= a_33.
pub fn symmetry_filter(ws: &[CubeWeight]) -> Vec<CubeWeight> {
    ws.iter()
        .filter(|w| {
            let r = &w.rows;
            (0..3).all(|c| r[0][c] <= r[1][c]) && r[1][0] >= r[1][1] && r[1][1] >= r[1][2]
        })
        .copied()
        .collect()
}
