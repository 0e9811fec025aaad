//! Listing and counting triangle classes by width.
//!
//! [`enumerate_s`] writes out the normal forms of every class with widths
//! `(w1, w2)`. The closed forms below count the same sets without listing
//! them, and the generating functions in [`series`] expand to the same
//! numbers.

mod oeis;
mod qsimplex;
pub mod series;

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::canonical::{Family, NormalForm};
use crate::error::{Error, Result};

pub use oeis::{oeis_sequences, OeisSequences};
pub use qsimplex::{lattice_points_nq, HalfSpace, QSimplex};
pub use series::{bivariate_series_coeffs, hilbert_coeffs, SeriesCoeffs};

fn check_order(w1: u64, w2: u64) -> Result<()> {
    if w1 > w2 {
        Err(Error::WidthOrder { w1, w2 })
    } else {
        Ok(())
    }
}

/// Every normal form with widths `(w1, w2)`, ordered by family, then `x2`,
/// `y0`, `y1`.
pub fn enumerate_s(w1: u64, w2: u64) -> Result<Vec<NormalForm>> {
    check_order(w1, w2)?;
    let (w1, w2) = (w1 as i64, w2 as i64);
    let mut out = Vec::new();
    if w1 == 0 {
        for y1 in 0..=w2 / 2 {
            out.push(NormalForm::from_params(Family::Segment, 0, w2, 0, 0, y1));
        }
        return Ok(out);
    }
    for y1 in 0..w1 {
        if y1 <= (w2 - y1).rem_euclid(w1) {
            out.push(NormalForm::from_params(Family::LongEdge, w1, w2, 0, 0, y1));
        }
    }
    for x2 in 1..=w1 / 2 {
        let low = if w1 == w2 { x2 } else { 0 };
        for y1 in low..=w1 - x2 {
            out.push(NormalForm::from_params(Family::ShortEdge1, w1, w2, x2, 0, y1));
        }
    }
    if w1 < w2 {
        for x2 in (2..).take_while(|&x2| 2 * x2 < w1) {
            for y0 in 1..x2 {
                out.push(NormalForm::from_params(Family::ShortEdge2, w1, w2, x2, y0, 0));
            }
        }
    }
    Ok(out)
}

/// Number of classes with widths exactly `(w1, w2)`, by closed form.
pub fn count_closed(w1: u64, w2: u64) -> Result<u64> {
    check_order(w1, w2)?;
    let even = |n: u64| n.is_multiple_of(2);
    Ok(if w1 == 0 {
        w2 / 2 + 1
    } else if w1 == w2 {
        if even(w1) {
            w1 * w1 / 4 + w1 / 2 + 1
        } else {
            (w1 + 1) * (w1 + 1) / 4
        }
    } else if even(w1) {
        w1 * w1 / 2 + if even(w2) { 2 } else { 1 }
    } else {
        (w1 * w1).div_ceil(2)
    })
}

/// Number of classes with a representative inside `[0, w1] × [0, w2]`, by
/// the parity-cased quartic.
pub fn count_rect_cumulative(w1: u64, w2: u64) -> Result<u64> {
    check_order(w1, w2)?;
    let (a, b) = (w1 as i128, w2 as i128);
    // All terms scaled by 24.
    let common = -3 * a.pow(4) + 4 * a.pow(3) * b - 4 * a.pow(3) + 6 * a * a * b - 6 * a * a + 26 * a * b + 6 * b * b;
    let parity = match (a % 2 == 0, b % 2 == 0) {
        (true, true) => 4 * a + 24 * b + 24,
        (true, false) => -2 * a + 24 * b + 18,
        (false, true) => 16 * a + 12 * b + 21,
        (false, false) => 10 * a + 12 * b + 21,
    };
    let scaled = common + parity;
    assert!(
        scaled % 24 == 0 && scaled >= 0,
        "quartic count is not a natural number at ({w1}, {w2})"
    );
    u64::try_from(scaled / 24).map_err(|_| Error::InvalidArgument(format!("count at ({w1}, {w2}) overflows u64")))
}

/// Number of classes with a representative inside `[0, n]²`.
pub fn count_square(n: u64) -> u64 {
    count_rect_cumulative(n, n).expect("n <= n")
}

/// Class counts for every cell `0 ≤ w1 ≤ w2 ≤ max_w2` with `w1 ≤ max_w1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CountTable {
    pub max_w1: u64,
    pub max_w2: u64,
    pub entries: BTreeMap<(u64, u64), u64>,
}

impl CountTable {
    fn cells(max_w1: u64, max_w2: u64) -> Vec<(u64, u64)> {
        (0..=max_w1.min(max_w2))
            .flat_map(|w1| (w1..=max_w2).map(move |w2| (w1, w2)))
            .collect()
    }

    /// Counts obtained by listing every normal form, one cell per task.
    pub fn enumerated(max_w1: u64, max_w2: u64) -> CountTable {
        let entries = Self::cells(max_w1, max_w2)
            .into_par_iter()
            .map(|(w1, w2)| ((w1, w2), enumerate_s(w1, w2).map(|v| v.len() as u64).unwrap_or(0)))
            .collect();
        CountTable {
            max_w1,
            max_w2,
            entries,
        }
    }

    pub fn closed(max_w1: u64, max_w2: u64) -> CountTable {
        let entries = Self::cells(max_w1, max_w2)
            .into_iter()
            .map(|(w1, w2)| ((w1, w2), count_closed(w1, w2).unwrap_or(0)))
            .collect();
        CountTable {
            max_w1,
            max_w2,
            entries,
        }
    }

    pub fn get(&self, w1: u64, w2: u64) -> Option<u64> {
        self.entries.get(&(w1, w2)).copied()
    }
}
