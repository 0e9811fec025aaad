//! Boundary and interior point counts of triangles and the structure of
//! the set of realized `(b, i)` pairs.
//!
//! Interior counts come from Pick's theorem, `V = 2i + b − 2` with `V` the
//! normalized volume, so nothing here walks lattice points.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, BTreeSet};

use num_integer::Integer;
use num_rational::Ratio;
use rayon::prelude::*;
use serde::Serialize;

use crate::enumeration::enumerate_s;
use crate::error::{Error, Result};
use crate::lattice::{complement, width_along, DualVector, Point, Triangle, UnimodularAffineMap};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct BIPoint {
    pub b: i64,
    pub i: i64,
}

impl BIPoint {
    pub const fn new(b: i64, i: i64) -> Self {
        BIPoint { b, i }
    }

    /// Normalized volume of any triangle realizing this pair.
    pub fn volume(&self) -> i64 {
        2 * self.i + self.b - 2
    }
}

fn nondegenerate(t: &Triangle) -> Result<()> {
    if t.is_degenerate() {
        Err(Error::Degenerate(*t))
    } else {
        Ok(())
    }
}

pub fn boundary_interior(t: &Triangle) -> Result<BIPoint> {
    nondegenerate(t)?;
    let b: i64 = t.edge_lengths().iter().sum();
    let v = t.normalized_volume();
    let twice_i = v - b + 2;
    debug_assert!(twice_i >= 0 && twice_i % 2 == 0);
    Ok(BIPoint::new(b, twice_i / 2))
}

/// `ehr(n) = c2·n² + c1·n + c0`, the number of lattice points in the n-th dilate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct EhrhartPolynomial {
    pub c2: Ratio<i64>,
    pub c1: Ratio<i64>,
    pub c0: Ratio<i64>,
}

impl EhrhartPolynomial {
    pub fn from_bi(p: BIPoint) -> Self {
        EhrhartPolynomial {
            c2: Ratio::new(2 * p.i + p.b - 2, 2),
            c1: Ratio::new(p.b, 2),
            c0: Ratio::from_integer(1),
        }
    }

    pub fn eval(&self, n: i64) -> i64 {
        let v = self.c2 * n * n + self.c1 * n + self.c0;
        assert!(v.is_integer(), "Ehrhart polynomial took a non-integer value");
        v.to_integer()
    }
}

pub fn ehrhart_polynomial(t: &Triangle) -> Result<EhrhartPolynomial> {
    boundary_interior(t).map(EhrhartPolynomial::from_bi)
}

/// Width of a triangle along the primitive normal of one of its edges.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct EdgeWidth {
    /// Edge `j` joins vertex `j` to vertex `j + 1 (mod 3)`.
    pub edge: usize,
    /// Lattice length of the edge.
    pub length: i64,
    pub width: i64,
}

pub fn edge_widths(t: &Triangle) -> Result<[EdgeWidth; 3]> {
    nondegenerate(t)?;
    Ok([0, 1, 2].map(|edge| {
        let (p, q) = t.edge(edge);
        let d = q - p;
        let length = d.x.gcd(&d.y);
        let normal = DualVector::new(-d.y / length, d.x / length);
        EdgeWidth {
            edge,
            length,
            width: width_along(t, normal),
        }
    }))
}

/// An edge moved to the positive x-axis with the opposite vertex above it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct EdgeFrame {
    /// `T(0, (length, 0), (a, width))` with `0 ≤ a < width`.
    pub triangle: Triangle,
    pub map: UnimodularAffineMap,
    pub length: i64,
    pub apex_x: i64,
    pub width: i64,
}

/// Maps edge `edge` of `t` onto `[0, l] × {0}` with the third vertex at
/// height `w > 0`, then shears the apex into `0 ≤ a < w`.
pub fn edge_frame(t: &Triangle, edge: usize) -> Result<EdgeFrame> {
    nondegenerate(t)?;
    if edge > 2 {
        return Err(Error::InvalidArgument(format!("edge index {edge} is not 0, 1 or 2")));
    }
    let (p, q) = t.edge(edge);
    let apex = t.vertices[(edge + 2) % 3];
    let d = q - p;
    let len = d.x.gcd(&d.y);
    let dir = Point::new(d.x / len, d.y / len);
    let along = complement(dir);
    let mut normal = DualVector::new(-dir.y, dir.x);
    if normal.dot(apex - p) < 0 {
        normal = -normal;
    }
    let linear = UnimodularAffineMap::from_rows([along, normal]).expect("completed basis");
    let to_origin = UnimodularAffineMap::translation(-p).then(&linear);
    let raised = to_origin.apply(apex);
    let shift = Integer::div_floor(&raised.x, &raised.y);
    let shear = UnimodularAffineMap::new([[1, -shift], [0, 1]], [0, 0]).expect("shear");
    let map = to_origin.then(&shear);
    let triangle = Triangle::new(map.apply(p), map.apply(q), map.apply(apex));
    let [_, end, top] = triangle.vertices;
    debug_assert_eq!(map.apply(p), Point::ORIGIN);
    debug_assert_eq!(end, Point::new(len, 0));
    Ok(EdgeFrame {
        triangle,
        map,
        length: len,
        apex_x: top.x,
        width: top.y,
    })
}

/// `T_k = T(0, (l + k·w, 0), (a, w))` in the frame of [`edge_frame`].
pub fn extend_edge(t: &Triangle, edge: usize, k: i64) -> Result<Triangle> {
    let frame = edge_frame(t, edge)?;
    let length = frame.length + k * frame.width;
    if length <= 0 {
        return Err(Error::EdgeCollapsed { edge, k, length });
    }
    Ok(Triangle::new(
        Point::ORIGIN,
        Point::new(length, 0),
        Point::new(frame.apex_x, frame.width),
    ))
}

/// The line `i − base.i = (w − 1)/2 · (b − base.b)` through a realized pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct EdgeExtensionLine {
    pub w: i64,
    pub base: BIPoint,
}

impl EdgeExtensionLine {
    pub fn slope(&self) -> Ratio<i64> {
        Ratio::new(self.w - 1, 2)
    }

    pub fn contains(&self, p: BIPoint) -> bool {
        2 * (p.i - self.base.i) == (self.w - 1) * (p.b - self.base.b)
    }

    /// The pair realized by the k-th extension.
    pub fn point_at(&self, k: i64) -> BIPoint {
        let step = k * self.w;
        BIPoint::new(self.base.b + step, self.base.i + step * (self.w - 1) / 2)
    }
}

/// Strict membership in the open cone between `i = (c−1)/2·b − (c−1)` and
/// `i = c/2·b − c(c+2)`.
pub fn cone_contains(c: u32, p: BIPoint) -> bool {
    let c = i64::from(c);
    let twice_i = 2 * p.i;
    p.b >= 0 && p.i >= 0 && (c - 1) * p.b - 2 * (c - 1) < twice_i && twice_i < c * p.b - 2 * c * (c + 2)
}

/// `m` with `i = (w − 1)/2 · b + m`.
pub fn strip_line_index(p: BIPoint, w: i64) -> Ratio<i64> {
    Ratio::from_integer(p.i) - Ratio::new((w - 1) * p.b, 2)
}

/// `[1 − w², 1 − w]`, the range of strip indices for edge width `w`.
pub fn strip_range(w: i64) -> (i64, i64) {
    (1 - w * w, 1 - w)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GcdPairSet {
    pub a: u64,
    pub b: u64,
    pub pairs: BTreeSet<(u64, u64)>,
}

/// `{(gcd(a, c), gcd(a, b − c)) : c ∈ Z}`; `c` over one period `0..a` suffices.
pub fn gcd_pair_set(a: u64, b: u64) -> Result<GcdPairSet> {
    if a == 0 || b == 0 {
        return Err(Error::InvalidArgument(format!(
            "gcd_pair_set needs a, b >= 1, got ({a}, {b})"
        )));
    }
    let (ai, bi) = (a as i64, b as i64);
    let pairs = (0..ai).map(|c| (ai.gcd(&c) as u64, ai.gcd(&(bi - c)) as u64)).collect();
    Ok(GcdPairSet { a, b, pairs })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BiLimits {
    pub max_b: i64,
    pub max_i: i64,
    pub max_w2: u64,
}

/// Aggregate over all classes realizing one `(b, i)` pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BiRecord {
    pub b: i64,
    pub i: i64,
    /// Largest second width among the realizing classes.
    pub max_w2: i64,
    /// Some realizing class has an edge of lattice length equal to its second width.
    pub has_long_edge: bool,
    /// Number of realizing classes.
    pub count: u64,
    /// Every edge width seen among the realizing classes.
    pub edge_widths: BTreeSet<i64>,
}

impl BiRecord {
    pub fn point(&self) -> BIPoint {
        BIPoint::new(self.b, self.i)
    }

    fn absorb(&mut self, other: BiRecord) {
        self.max_w2 = self.max_w2.max(other.max_w2);
        self.has_long_edge |= other.has_long_edge;
        self.count += other.count;
        self.edge_widths.extend(other.edge_widths);
    }
}

type BiMap = BTreeMap<(i64, i64), BiRecord>;

fn merge(mut a: BiMap, b: BiMap) -> BiMap {
    for (key, rec) in b {
        match a.get_mut(&key) {
            Some(existing) => existing.absorb(rec),
            None => {
                a.insert(key, rec);
            }
        }
    }
    a
}

/// `(b, i)` data of every nondegenerate class with `w2 ≤ max_w2`, `b ≤ max_b`
/// and `i ≤ max_i`, sorted by `b` then `i`.
pub fn bi_dataset(limits: BiLimits) -> Vec<BiRecord> {
    let cells: Vec<(u64, u64)> = (1..=limits.max_w2)
        .flat_map(|w2| (1..=w2).map(move |w1| (w1, w2)))
        .collect();
    let merged = cells
        .into_par_iter()
        .map(|(w1, w2)| {
            let mut local = BiMap::new();
            for nf in enumerate_s(w1, w2).expect("w1 <= w2") {
                let t = nf.triangle;
                let p = boundary_interior(&t).expect("classes with w1 > 0 are nondegenerate");
                if p.b > limits.max_b || p.i > limits.max_i {
                    continue;
                }
                let widths = edge_widths(&t).expect("nondegenerate");
                let rec = BiRecord {
                    b: p.b,
                    i: p.i,
                    max_w2: nf.w2,
                    has_long_edge: widths.iter().any(|e| e.length == nf.w2),
                    count: 1,
                    edge_widths: widths.iter().map(|e| e.width).collect(),
                };
                match local.entry((p.b, p.i)) {
                    Entry::Occupied(mut e) => e.get_mut().absorb(rec),
                    Entry::Vacant(e) => {
                        e.insert(rec);
                    }
                }
            }
            local
        })
        .reduce(BiMap::new, merge);
    merged.into_values().collect()
}
