//! Sequences obtained by filtering the classes with second width `n`.
//!
//! A class fits in `[0, n]²` and has an edge of lattice length `n` only if
//! its second width is exactly `n`, so every sequence here is a filter over
//! the normal forms with `w2 = n`.

use serde::Serialize;

use super::enumerate_s;
use crate::lattice::Triangle;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OeisSequences {
    pub nmax: u64,
    /// Classes in `[0, n]²` with an edge of lattice length `n`, for `n = 1..=nmax`.
    pub long_edge: Vec<u64>,
    /// As `long_edge`, dropping zero-volume classes.
    pub long_edge_nondegenerate: Vec<u64>,
    /// `a_n`: classes with second width `n` and no edge of lattice length
    /// `n`, for `n = 0..=nmax`.
    pub no_long_edge: Vec<u64>,
    /// `a_n − a_{n−1}` for `n = 1..=nmax`.
    pub differences: Vec<i64>,
}

impl OeisSequences {
    /// The differences from `n = 2` on. Every class inside the unit square
    /// has an edge of length one, so `a_0 = a_1 = 0` and the first
    /// difference is always zero.
    pub fn staircase(&self) -> &[i64] {
        self.differences.get(1..).unwrap_or(&[])
    }
}

fn has_edge_of_length(t: &Triangle, n: i64) -> bool {
    t.edge_lengths().contains(&n)
}

pub fn oeis_sequences(nmax: u64) -> OeisSequences {
    let mut long_edge = Vec::new();
    let mut long_edge_nondegenerate = Vec::new();
    let mut no_long_edge = Vec::new();
    for n in 0..=nmax {
        let (mut with, mut with_nondeg, mut without) = (0u64, 0u64, 0u64);
        for w1 in 0..=n {
            for nf in enumerate_s(w1, n).expect("w1 <= n") {
                if has_edge_of_length(&nf.triangle, n as i64) {
                    with += 1;
                    if !nf.triangle.is_degenerate() {
                        with_nondeg += 1;
                    }
                } else {
                    without += 1;
                }
            }
        }
        if n > 0 {
            long_edge.push(with);
            long_edge_nondegenerate.push(with_nondeg);
        }
        no_long_edge.push(without);
    }
    let differences = no_long_edge.windows(2).map(|w| w[1] as i64 - w[0] as i64).collect();
    OeisSequences {
        nmax,
        long_edge,
        long_edge_nondegenerate,
        no_long_edge,
        differences,
    }
}
