//! Exact power-series expansion of the counting generating functions.
//!
//! Both rational functions have denominators with constant term 1, so the
//! quotient is computed coefficient by coefficient with integer arithmetic.

use serde::Serialize;

/// Dense bivariate polynomial, `coeffs[i][j]` multiplying `t^i s^j`.
type Poly2 = Vec<Vec<i64>>;

fn poly2_mul(a: &Poly2, b: &Poly2) -> Poly2 {
    let rows = a.len() + b.len() - 1;
    let cols = a[0].len() + b[0].len() - 1;
    let mut out = vec![vec![0; cols]; rows];
    for (i, ra) in a.iter().enumerate() {
        for (j, &ca) in ra.iter().enumerate() {
            if ca == 0 {
                continue;
            }
            for (k, rb) in b.iter().enumerate() {
                for (l, &cb) in rb.iter().enumerate() {
                    out[i + k][j + l] += ca * cb;
                }
            }
        }
    }
    out
}

fn poly2_from_terms(terms: &[(usize, usize, i64)]) -> Poly2 {
    let rows = terms.iter().map(|t| t.0).max().unwrap_or(0) + 1;
    let cols = terms.iter().map(|t| t.1).max().unwrap_or(0) + 1;
    let mut p = vec![vec![0; cols]; rows];
    for &(i, j, c) in terms {
        p[i][j] += c;
    }
    p
}

fn poly2_pow(base: &Poly2, e: u32) -> Poly2 {
    (0..e).fold(vec![vec![1]], |acc, _| poly2_mul(&acc, base))
}

/// Numerator of the bivariate counting series:
/// `1 − st + s²t² − s³t + s⁴t³ − s⁵t² + s⁶t³ − s⁷t⁴`, as `(t power, s power, coeff)`.
const BIVARIATE_NUMERATOR: [(usize, usize, i64); 8] = [
    (0, 0, 1),
    (1, 1, -1),
    (2, 2, 1),
    (1, 3, -1),
    (3, 4, 1),
    (2, 5, -1),
    (3, 6, 1),
    (4, 7, -1),
];

/// `(1 − s)²(1 + s)(1 − st)³(1 + st)`.
fn bivariate_denominator() -> Poly2 {
    let one_minus_s = poly2_from_terms(&[(0, 0, 1), (0, 1, -1)]);
    let one_plus_s = poly2_from_terms(&[(0, 0, 1), (0, 1, 1)]);
    let one_minus_st = poly2_from_terms(&[(0, 0, 1), (1, 1, -1)]);
    let one_plus_st = poly2_from_terms(&[(0, 0, 1), (1, 1, 1)]);
    let mut d = poly2_pow(&one_minus_s, 2);
    d = poly2_mul(&d, &one_plus_s);
    d = poly2_mul(&d, &poly2_pow(&one_minus_st, 3));
    poly2_mul(&d, &one_plus_st)
}

/// Coefficients of `Σ c(w1, w2) t^w1 s^w2` up to total degree `max_deg`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeriesCoeffs {
    pub max_deg: usize,
    /// `coeffs[w1][w2]`, zero beyond the truncation.
    coeffs: Vec<Vec<i64>>,
}

impl SeriesCoeffs {
    /// Coefficient of `t^w1 s^w2`, or `None` beyond the truncation order.
    pub fn get(&self, w1: usize, w2: usize) -> Option<i64> {
        (w1 + w2 <= self.max_deg).then(|| self.coeffs[w1][w2])
    }

    /// `(w1, w2, coeff)` for every monomial within the truncation, ordered
    /// by total degree and then by `w1`.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, i64)> + '_ {
        (0..=self.max_deg).flat_map(move |deg| (0..=deg).map(move |w1| (w1, deg - w1, self.coeffs[w1][deg - w1])))
    }
}

/// Expands the bivariate counting series by long division.
pub fn bivariate_series_coeffs(max_deg: usize) -> SeriesCoeffs {
    let n = max_deg + 1;
    let num = poly2_from_terms(&BIVARIATE_NUMERATOR);
    let den = bivariate_denominator();
    debug_assert_eq!(den[0][0], 1);
    let at = |p: &Poly2, i: usize, j: usize| p.get(i).and_then(|r| r.get(j)).copied().unwrap_or(0);
    let mut c = vec![vec![0i64; n]; n];
    for deg in 0..n {
        for i in 0..=deg {
            let j = deg - i;
            let mut acc = at(&num, i, j);
            for (a, row) in den.iter().enumerate().take(i + 1) {
                for (b, &d) in row.iter().enumerate().take(j + 1) {
                    if (a, b) != (0, 0) && d != 0 {
                        acc -= d * c[i - a][j - b];
                    }
                }
            }
            c[i][j] = acc;
        }
    }
    SeriesCoeffs { max_deg, coeffs: c }
}

/// First `len` coefficients of `num / den` for univariate polynomials with `den[0] = 1`.
pub fn series_quotient(num: &[i64], den: &[i64], len: usize) -> Vec<i64> {
    assert_eq!(den.first(), Some(&1), "denominator must have constant term 1");
    let mut out = vec![0i64; len];
    for n in 0..len {
        let mut acc = num.get(n).copied().unwrap_or(0);
        for (k, &d) in den.iter().enumerate().skip(1).take(n) {
            acc -= d * out[n - k];
        }
        out[n] = acc;
    }
    out
}

fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Coefficients `0..=nmax` of `(1 − t⁸) / ((1 − t²)³ (1 − t)³)`.
pub fn hilbert_coeffs(nmax: usize) -> Vec<u64> {
    let num = [1, 0, 0, 0, 0, 0, 0, 0, -1];
    let den = [[1, 0, -1].as_slice(); 3]
        .into_iter()
        .chain([[1, -1].as_slice(); 3])
        .fold(vec![1i64], |acc, f| poly_mul(&acc, f));
    series_quotient(&num, &den, nmax + 1)
        .into_iter()
        .map(|c| u64::try_from(c).expect("Hilbert series coefficients are nonnegative"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quotient_of_geometric_series() {
        assert_eq!(series_quotient(&[1], &[1, -1], 5), [1, 1, 1, 1, 1]);
        assert_eq!(series_quotient(&[1], &[1, -2, 1], 5), [1, 2, 3, 4, 5]);
    }

    #[test]
    fn denominator_matches_direct_product() {
        let d = bivariate_denominator();
        // (1 − s)²(1 + s) = 1 − s − s² + s³ at t⁰.
        assert_eq!(&d[0][..4], &[1, -1, -1, 1]);
        // Degree in t is four, all in the st factors.
        assert_eq!(d.len(), 5);
    }

    #[test]
    fn bivariate_examples() {
        let c = bivariate_series_coeffs(6);
        assert_eq!(c.get(0, 0), Some(1));
        assert_eq!(c.get(2, 2), Some(3));
        assert_eq!(c.get(2, 3), Some(3));
        assert_eq!(c.get(3, 2), Some(0));
        assert_eq!(c.get(4, 3), None);
    }

    #[test]
    fn hilbert_examples() {
        assert_eq!(&hilbert_coeffs(2), &[1, 3, 9]);
    }
}
