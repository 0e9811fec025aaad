//! Lattice points in dilates of the rational 4-simplex `Q`.

use num_integer::Integer;
use num_rational::Ratio;
use rayon::prelude::*;

type Q = Ratio<i64>;

fn q(n: i64, d: i64) -> Q {
    Ratio::new(n, d)
}

/// `normal · x ≤ offset`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HalfSpace {
    pub normal: [i64; 4],
    pub offset: Q,
}

impl HalfSpace {
    /// Whether the lattice point `x` satisfies the inequality scaled by `dilation`.
    pub fn contains_dilated(&self, x: [i64; 4], dilation: i64) -> bool {
        let lhs: i64 = self.normal.iter().zip(x).map(|(a, b)| a * b).sum();
        Q::from_integer(lhs) <= self.offset * dilation
    }
}

/// The simplex with vertices `(½,0,0,0)`, `(0,½,0,0)`, `(0,0,½,0)`,
/// `(0,0,0,1)` and `(−1,−1,−1,−1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QSimplex {
    pub vertices: [[Q; 4]; 5],
}

impl Default for QSimplex {
    fn default() -> Self {
        let z = Q::from_integer(0);
        let half = q(1, 2);
        let one = Q::from_integer(1);
        let m = Q::from_integer(-1);
        QSimplex {
            vertices: [
                [half, z, z, z],
                [z, half, z, z],
                [z, z, half, z],
                [z, z, z, one],
                [m, m, m, m],
            ],
        }
    }
}

fn det3(m: [[Q; 3]; 3]) -> Q {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

fn dot(a: &[i64; 4], b: &[Q; 4]) -> Q {
    a.iter().zip(b).map(|(&x, &y)| y * x).sum()
}

impl QSimplex {
    /// One inequality per facet, each facet spanned by four of the five
    /// vertices and oriented so the fifth vertex satisfies it strictly.
    pub fn facets(&self) -> Vec<HalfSpace> {
        (0..5)
            .map(|omit| {
                let pts: Vec<[Q; 4]> = (0..5).filter(|&i| i != omit).map(|i| self.vertices[i]).collect();
                let diffs: Vec<[Q; 4]> = pts[1..]
                    .iter()
                    .map(|p| [0, 1, 2, 3].map(|k| p[k] - pts[0][k]))
                    .collect();
                // Generalized cross product of the three edge vectors.
                let normal_q: [Q; 4] = [0, 1, 2, 3].map(|j| {
                    let cols: Vec<usize> = (0..4).filter(|&c| c != j).collect();
                    let minor = [0, 1, 2].map(|r| [0, 1, 2].map(|c| diffs[r][cols[c]]));
                    let d = det3(minor);
                    if j % 2 == 0 {
                        d
                    } else {
                        -d
                    }
                });
                let lcm = normal_q.iter().fold(1i64, |acc, c| acc.lcm(c.denom()));
                let ints = normal_q.map(|c| (c * lcm).to_integer());
                let g = ints.iter().fold(0i64, |acc, c| acc.gcd(c));
                let mut normal = ints.map(|c| c / g);
                let mut offset = dot(&normal, &pts[0]);
                if dot(&normal, &self.vertices[omit]) > offset {
                    normal = normal.map(|c| -c);
                    offset = -offset;
                }
                HalfSpace { normal, offset }
            })
            .collect()
    }

    /// Integer box `[lo_k, hi_k]` containing the dilate by `n`.
    pub fn bounding_box(&self, n: i64) -> [(i64, i64); 4] {
        [0, 1, 2, 3].map(|k| {
            let coords = self.vertices.map(|v| v[k] * n);
            let lo = coords.iter().min().expect("five vertices").ceil().to_integer();
            let hi = coords.iter().max().expect("five vertices").floor().to_integer();
            (lo, hi)
        })
    }
}

/// `|nQ ∩ Z⁴|`, by testing every point of the bounding box against the facets.
pub fn lattice_points_nq(n: u64) -> u64 {
    let simplex = QSimplex::default();
    let facets = simplex.facets();
    let n = n as i64;
    let bx = simplex.bounding_box(n);
    (bx[0].0..=bx[0].1)
        .into_par_iter()
        .map(|a| {
            let mut count = 0u64;
            for b in bx[1].0..=bx[1].1 {
                for c in bx[2].0..=bx[2].1 {
                    for d in bx[3].0..=bx[3].1 {
                        let x = [a, b, c, d];
                        if facets.iter().all(|h| h.contains_dilated(x, n)) {
                            count += 1;
                        }
                    }
                }
            }
            count
        })
        .sum()
}
