//! Exact integer geometry in the plane.
//!
//! Everything here works on `i64` with overflow checks enabled in every
//! build profile of the workspace, so an overflowing computation panics
//! instead of silently wrapping.
//!
//! The width of a triangle along a dual vector `u` is
//! `max(u·v) - min(u·v)` over its vertices. The first and second widths are
//! the lexicographically smallest pair of widths along two linearly
//! independent dual vectors.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;
use serde::ser::SerializeTuple;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A point of the lattice Z².
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point {
    pub x: i64,
    pub y: i64,
}

impl Point {
    pub const ORIGIN: Point = Point { x: 0, y: 0 };

    pub const fn new(x: i64, y: i64) -> Self {
        Point { x, y }
    }
}

impl Add for Point {
    type Output = Point;
    fn add(self, rhs: Point) -> Point {
        Point::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Sub for Point {
    type Output = Point;
    fn sub(self, rhs: Point) -> Point {
        Point::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Neg for Point {
    type Output = Point;
    fn neg(self) -> Point {
        Point::new(-self.x, -self.y)
    }
}

impl Mul<Point> for i64 {
    type Output = Point;
    fn mul(self, rhs: Point) -> Point {
        Point::new(self * rhs.x, self * rhs.y)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

impl Serialize for Point {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut tup = serializer.serialize_tuple(2)?;
        tup.serialize_element(&self.x)?;
        tup.serialize_element(&self.y)?;
        tup.end()
    }
}

/// `det(a, b) = a.x·b.y − a.y·b.x`.
pub fn cross(a: Point, b: Point) -> i64 {
    a.x * b.y - a.y * b.x
}

/// Number of lattice steps between two lattice points; zero when they coincide.
pub fn lattice_length(a: Point, b: Point) -> i64 {
    let d = b - a;
    d.x.gcd(&d.y)
}

/// An integer linear functional `(a, b)·(x, y) = a·x + b·y` on Z².
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DualVector {
    pub a: i64,
    pub b: i64,
}

impl DualVector {
    pub const fn new(a: i64, b: i64) -> Self {
        DualVector { a, b }
    }

    pub fn dot(self, p: Point) -> i64 {
        self.a * p.x + self.b * p.y
    }

    pub fn is_zero(self) -> bool {
        self.a == 0 && self.b == 0
    }

    pub fn is_primitive(self) -> bool {
        !self.is_zero() && self.a.gcd(&self.b) == 1
    }

    /// Sign convention: `a > 0`, or `a == 0` and `b > 0`.
    pub fn has_canonical_sign(self) -> bool {
        self.a > 0 || (self.a == 0 && self.b > 0)
    }

    pub fn canonical(self) -> Self {
        if self.has_canonical_sign() || self.is_zero() {
            self
        } else {
            -self
        }
    }

    pub fn is_independent_of(self, other: DualVector) -> bool {
        self.a * other.b - self.b * other.a != 0
    }
}

impl Neg for DualVector {
    type Output = DualVector;
    fn neg(self) -> DualVector {
        DualVector::new(-self.a, -self.b)
    }
}

impl Sub for DualVector {
    type Output = DualVector;
    fn sub(self, rhs: DualVector) -> DualVector {
        DualVector::new(self.a - rhs.a, self.b - rhs.b)
    }
}

impl Mul<DualVector> for i64 {
    type Output = DualVector;
    fn mul(self, rhs: DualVector) -> DualVector {
        DualVector::new(self * rhs.a, self * rhs.b)
    }
}

impl fmt::Display for DualVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

impl Serialize for DualVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut tup = serializer.serialize_tuple(2)?;
        tup.serialize_element(&self.a)?;
        tup.serialize_element(&self.b)?;
        tup.end()
    }
}

/// A primitive `u` with `u·d = ±1`, i.e. a functional completing `d` to a
/// unimodular pair. `d` must be primitive.
pub(crate) fn complement(d: Point) -> DualVector {
    let eg = d.x.extended_gcd(&d.y);
    debug_assert_eq!(eg.gcd, 1);
    DualVector::new(eg.x, eg.y)
}

/// `x ↦ M·x + t` with `det M = ±1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct UnimodularAffineMap {
    matrix: [[i64; 2]; 2],
    translation: [i64; 2],
}

impl UnimodularAffineMap {
    pub fn new(matrix: [[i64; 2]; 2], translation: [i64; 2]) -> Result<Self> {
        let det = matrix[0][0] * matrix[1][1] - matrix[0][1] * matrix[1][0];
        if det.abs() != 1 {
            return Err(Error::NotUnimodular(det));
        }
        Ok(UnimodularAffineMap { matrix, translation })
    }

    pub const IDENTITY: UnimodularAffineMap = UnimodularAffineMap {
        matrix: [[1, 0], [0, 1]],
        translation: [0, 0],
    };

    pub fn translation(t: Point) -> Self {
        UnimodularAffineMap {
            matrix: [[1, 0], [0, 1]],
            translation: [t.x, t.y],
        }
    }

    /// The linear map whose output coordinates are the functionals `rows`.
    pub fn from_rows(rows: [DualVector; 2]) -> Result<Self> {
        Self::new([[rows[0].a, rows[0].b], [rows[1].a, rows[1].b]], [0, 0])
    }

    pub fn matrix(&self) -> [[i64; 2]; 2] {
        self.matrix
    }

    pub fn translation_part(&self) -> Point {
        Point::new(self.translation[0], self.translation[1])
    }

    pub fn det(&self) -> i64 {
        let m = self.matrix;
        m[0][0] * m[1][1] - m[0][1] * m[1][0]
    }

    pub fn apply(&self, p: Point) -> Point {
        let m = self.matrix;
        Point::new(
            m[0][0] * p.x + m[0][1] * p.y + self.translation[0],
            m[1][0] * p.x + m[1][1] * p.y + self.translation[1],
        )
    }

    /// `other ∘ self`: apply `self` first.
    pub fn then(&self, other: &UnimodularAffineMap) -> UnimodularAffineMap {
        let (a, b) = (other.matrix, self.matrix);
        let mut matrix = [[0; 2]; 2];
        for (i, row) in matrix.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = a[i][0] * b[0][j] + a[i][1] * b[1][j];
            }
        }
        let t = other.apply(self.translation_part());
        UnimodularAffineMap {
            matrix,
            translation: [t.x, t.y],
        }
    }

    pub fn inverse(&self) -> UnimodularAffineMap {
        let m = self.matrix;
        let det = self.det();
        // det = ±1, so the adjugate divided by det is integral.
        let inv = [[m[1][1] * det, -m[0][1] * det], [-m[1][0] * det, m[0][0] * det]];
        let lin = UnimodularAffineMap {
            matrix: inv,
            translation: [0, 0],
        };
        let t = lin.apply(self.translation_part());
        UnimodularAffineMap {
            matrix: inv,
            translation: [-t.x, -t.y],
        }
    }

    /// The functional `u ∘ self⁻¹`, which measures images the way `u`
    /// measures preimages: `transport(u)·apply(x) = u·x + const`.
    pub fn transport(&self, u: DualVector) -> DualVector {
        let inv = self.inverse().matrix;
        DualVector::new(u.a * inv[0][0] + u.b * inv[1][0], u.a * inv[0][1] + u.b * inv[1][1])
    }
}

impl Serialize for UnimodularAffineMap {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = serializer.serialize_struct("UnimodularAffineMap", 2)?;
        st.serialize_field("matrix", &self.matrix)?;
        st.serialize_field("translation", &self.translation)?;
        st.end()
    }
}

/// A lattice triangle `T(v1, v2, v3)`. Degenerate triples are allowed and
/// the vertex order is kept as recorded.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Triangle {
    pub vertices: [Point; 3],
}

impl Triangle {
    pub const fn new(v1: Point, v2: Point, v3: Point) -> Self {
        Triangle { vertices: [v1, v2, v3] }
    }

    /// From `x1 y1 x2 y2 x3 y3`.
    pub const fn from_coords(c: [i64; 6]) -> Self {
        Triangle::new(Point::new(c[0], c[1]), Point::new(c[2], c[3]), Point::new(c[4], c[5]))
    }

    pub fn coords(&self) -> [i64; 6] {
        let [a, b, c] = self.vertices;
        [a.x, a.y, b.x, b.y, c.x, c.y]
    }

    /// `|det(v2 − v1, v3 − v1)|`, twice the Euclidean area.
    pub fn normalized_volume(&self) -> i64 {
        let [a, b, c] = self.vertices;
        cross(b - a, c - a).abs()
    }

    pub fn is_degenerate(&self) -> bool {
        self.normalized_volume() == 0
    }

    pub fn is_point(&self) -> bool {
        let [a, b, c] = self.vertices;
        a == b && b == c
    }

    /// Edge `j` runs from vertex `j` to vertex `j + 1 (mod 3)`.
    pub fn edge(&self, j: usize) -> (Point, Point) {
        (self.vertices[j % 3], self.vertices[(j + 1) % 3])
    }

    fn edge_vectors(&self) -> [Point; 3] {
        let [a, b, c] = self.vertices;
        [b - a, c - b, a - c]
    }

    pub fn edge_lengths(&self) -> [i64; 3] {
        [0, 1, 2].map(|j| {
            let (p, q) = self.edge(j);
            lattice_length(p, q)
        })
    }

    pub fn width_along(&self, u: DualVector) -> i64 {
        width_along(self, u)
    }

    pub fn map(&self, m: &UnimodularAffineMap) -> Triangle {
        Triangle {
            vertices: self.vertices.map(|v| m.apply(v)),
        }
    }

    pub fn scaled(&self, lambda: i64) -> Triangle {
        Triangle {
            vertices: self.vertices.map(|v| lambda * v),
        }
    }

    pub fn translated(&self, t: Point) -> Triangle {
        Triangle {
            vertices: self.vertices.map(|v| v + t),
        }
    }

    /// Vertices sorted, for comparing vertex multisets.
    pub fn sorted_vertices(&self) -> [Point; 3] {
        let mut v = self.vertices;
        v.sort();
        v
    }
}

impl fmt::Display for Triangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.vertices;
        write!(f, "T({a},{b},{c})")
    }
}

impl Serialize for Triangle {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.vertices.serialize(serializer)
    }
}

pub fn width_along(t: &Triangle, u: DualVector) -> i64 {
    let vals = t.vertices.map(|v| u.dot(v));
    let max = vals.iter().max().copied().unwrap_or(0);
    let min = vals.iter().min().copied().unwrap_or(0);
    max - min
}

pub fn normalized_volume(t: &Triangle) -> i64 {
    t.normalized_volume()
}

/// Applies `m` to every vertex, keeping the vertex order.
pub fn apply_map(t: &Triangle, m: &UnimodularAffineMap) -> Triangle {
    t.map(m)
}

/// First and second lattice width with witnesses.
///
/// Witnesses are primitive, sign-canonical, and among all minimizers the
/// lexicographically smallest `(a, b)`. They are absent only for the point
/// triangle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct WidthProfile {
    pub w1: i64,
    pub w2: i64,
    pub u1: Option<DualVector>,
    pub u2: Option<DualVector>,
}

/// The box `[0, w] × [0, h]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Rectangle {
    pub w: i64,
    pub h: i64,
}

impl Rectangle {
    pub fn contains(&self, t: &Triangle) -> bool {
        t.vertices
            .iter()
            .all(|v| (0..=self.w).contains(&v.x) && (0..=self.h).contains(&v.y))
    }
}

/// Among `base − μ·step`, the integer `μ` minimizing the width of `t`.
///
/// The width is `max_j |c_j − μ·a_j|` over the edge vectors, a convex
/// piecewise-linear function of `μ`, so its real minimum sits at one of the
/// finitely many breakpoints and the integer minimum at a floor or ceiling
/// of one of them.
fn best_shift(t: &Triangle, base: DualVector, step: DualVector) -> i64 {
    let edges = t.edge_vectors();
    let c = edges.map(|e| base.dot(e));
    let a = edges.map(|e| step.dot(e));
    let mut candidates = vec![0i64];
    let mut push_ratio = |num: i64, den: i64| {
        if den != 0 {
            candidates.push(Integer::div_floor(&num, &den));
            candidates.push(Integer::div_ceil(&num, &den));
        }
    };
    for j in 0..3 {
        push_ratio(c[j], a[j]);
        for k in (j + 1)..3 {
            push_ratio(c[j] - c[k], a[j] - a[k]);
            push_ratio(c[j] + c[k], a[j] + a[k]);
        }
    }
    candidates
        .into_iter()
        .min_by_key(|&mu| (width_along(t, base - mu * step), mu.abs(), mu))
        .unwrap_or(0)
}

/// Gauss reduction of the dual lattice under the width norm of `t`.
///
/// In the plane the reduced basis attains both successive minima for any
/// norm, so the width along the second vector bounds the second width.
fn reduced_dual_basis(t: &Triangle) -> (DualVector, DualVector) {
    let norm = |u: DualVector| width_along(t, u);
    let (mut b1, mut b2) = (DualVector::new(1, 0), DualVector::new(0, 1));
    if norm(b1) > norm(b2) {
        std::mem::swap(&mut b1, &mut b2);
    }
    loop {
        let mu = best_shift(t, b2, b1);
        let r = b2 - mu * b1;
        if norm(r) >= norm(b1) {
            return (b1, r);
        }
        b2 = b1;
        b1 = r;
    }
}

/// Every sign-canonical primitive `u` with `width_along(t, u) ≤ bound`,
/// paired with its width. `t` must be nondegenerate.
///
/// With `e1, e2` two edge vectors, such a `u` has `|u·e1|, |u·e2| ≤ bound`,
/// so it is recovered from one of the finitely many targets
/// `(u·e1, u·e2) ∈ [−bound, bound]²` by solving the 2×2 system.
pub fn dual_vectors_within(t: &Triangle, bound: i64) -> Vec<(i64, DualVector)> {
    let [v1, v2, v3] = t.vertices;
    let (e1, e2) = (v2 - v1, v3 - v1);
    let det = cross(e1, e2);
    assert!(det != 0, "dual_vectors_within needs a nondegenerate triangle");
    let mut out = Vec::new();
    for c1 in -bound..=bound {
        for c2 in -bound..=bound {
            let na = c1 * e2.y - c2 * e1.y;
            let nb = c2 * e1.x - c1 * e2.x;
            if na % det != 0 || nb % det != 0 {
                continue;
            }
            let u = DualVector::new(na / det, nb / det);
            if !u.has_canonical_sign() || !u.is_primitive() {
                continue;
            }
            let w = width_along(t, u);
            if w <= bound {
                out.push((w, u));
            }
        }
    }
    out.sort();
    out
}

/// Primitive direction of a degenerate non-point triangle, with the lattice
/// length of its hull segment.
fn segment_direction(t: &Triangle) -> (Point, i64) {
    let [a, b, c] = t.vertices;
    let (p, q) = [(a, b), (b, c), (c, a)]
        .into_iter()
        .max_by_key(|&(p, q)| lattice_length(p, q))
        .expect("three pairs");
    let len = lattice_length(p, q);
    let d = q - p;
    (Point::new(d.x / len, d.y / len), len)
}

pub fn width_profile(t: &Triangle) -> WidthProfile {
    if t.is_point() {
        return WidthProfile {
            w1: 0,
            w2: 0,
            u1: None,
            u2: None,
        };
    }
    if t.is_degenerate() {
        let (d, len) = segment_direction(t);
        return WidthProfile {
            w1: 0,
            w2: len,
            u1: Some(DualVector::new(-d.y, d.x).canonical()),
            u2: Some(complement(d).canonical()),
        };
    }
    let (_, b2) = reduced_dual_basis(t);
    let bound = width_along(t, b2);
    let found = dual_vectors_within(t, bound);
    // Distinct sign-canonical primitive vectors are pairwise independent,
    // so the two smallest entries realize the lexicographic minimum.
    let (w1, u1) = found[0];
    let (w2, u2) = found[1];
    WidthProfile {
        w1,
        w2,
        u1: Some(u1),
        u2: Some(u2),
    }
}

/// Result of [`fit_to_rectangle`]: `triangle = apply_map(input, map)` lies in `rect`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RectangleFit {
    pub triangle: Triangle,
    pub map: UnimodularAffineMap,
    pub rect: Rectangle,
}

/// Moves `t` into `[0, w1] × [0, w2]` touching all four sides.
pub fn fit_to_rectangle(t: &Triangle) -> RectangleFit {
    let first = t.vertices[0];
    if t.is_point() {
        let map = UnimodularAffineMap::translation(-first);
        return RectangleFit {
            triangle: t.map(&map),
            map,
            rect: Rectangle { w: 0, h: 0 },
        };
    }
    let profile = width_profile(t);
    let (x_axis, y_axis) = (DualVector::new(1, 0), DualVector::new(0, 1));
    let (u1, v) = if width_along(t, x_axis) == profile.w1 && width_along(t, y_axis) == profile.w2 {
        // Already fits its box up to translation.
        (x_axis, y_axis)
    } else {
        let u1 = profile.u1.expect("non-point triangles have witnesses");
        // Any v with det(u1, v) = 1, then the shear v − μ·u1 of least width.
        let v = {
            let c = complement(Point::new(u1.a, u1.b));
            DualVector::new(-c.b, c.a)
        };
        (u1, v - best_shift(t, v, u1) * u1)
    };
    let linear = UnimodularAffineMap::from_rows([u1, v]).expect("u1 and v form a basis");
    let image = t.map(&linear);
    let min_x = image.vertices.iter().map(|p| p.x).min().unwrap_or(0);
    let min_y = image.vertices.iter().map(|p| p.y).min().unwrap_or(0);
    let map = linear.then(&UnimodularAffineMap::translation(Point::new(-min_x, -min_y)));
    let triangle = t.map(&map);
    let rect = Rectangle {
        w: profile.w1,
        h: profile.w2,
    };
    debug_assert_eq!(width_along(t, v), profile.w2);
    debug_assert!(rect.contains(&triangle));
    RectangleFit { triangle, map, rect }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tri(c: [i64; 6]) -> Triangle {
        Triangle::from_coords(c)
    }

    #[test]
    fn width_along_examples() {
        assert_eq!(width_along(&tri([0, 0, 3, 0, 0, 4]), DualVector::new(1, 0)), 3);
        assert_eq!(width_along(&tri([0, 0, 2, 1, 1, 2]), DualVector::new(1, 1)), 3);
        assert_eq!(width_along(&tri([0, 0, 1, 0, 0, 1]), DualVector::new(0, 1)), 1);
    }

    #[test]
    fn normalized_volume_examples() {
        assert_eq!(tri([0, 0, 1, 0, 0, 1]).normalized_volume(), 1);
        assert_eq!(tri([0, 0, 3, 0, 0, 4]).normalized_volume(), 12);
        assert_eq!(tri([0, 0, 2, 4, 1, 2]).normalized_volume(), 0);
        assert!(tri([0, 0, 2, 4, 1, 2]).is_degenerate());
    }

    #[test]
    fn apply_map_examples() {
        let unit = tri([0, 0, 1, 0, 0, 1]);
        assert_eq!(apply_map(&unit, &UnimodularAffineMap::IDENTITY), unit);
        let shift = UnimodularAffineMap::translation(Point::new(5, 5));
        assert_eq!(apply_map(&unit, &shift), tri([5, 5, 6, 5, 5, 6]));
        let swap = UnimodularAffineMap::new([[0, 1], [1, 0]], [0, 0]).unwrap();
        assert_eq!(apply_map(&tri([0, 0, 1, 2, 3, 1]), &swap), tri([0, 0, 2, 1, 1, 3]));
    }

    #[test]
    fn rejects_non_unimodular_matrix() {
        assert_eq!(
            UnimodularAffineMap::new([[2, 0], [0, 1]], [0, 0]),
            Err(Error::NotUnimodular(2))
        );
        assert_eq!(
            UnimodularAffineMap::new([[1, 2], [2, 4]], [1, 1]),
            Err(Error::NotUnimodular(0))
        );
    }

    #[test]
    fn map_inverse_and_composition() {
        let m = UnimodularAffineMap::new([[2, 1], [1, 1]], [3, -4]).unwrap();
        let p = Point::new(7, -2);
        assert_eq!(m.inverse().apply(m.apply(p)), p);
        assert_eq!(m.then(&m.inverse()), UnimodularAffineMap::IDENTITY);
        let n = UnimodularAffineMap::new([[0, -1], [1, 3]], [1, 0]).unwrap();
        assert_eq!(m.then(&n).apply(p), n.apply(m.apply(p)));
    }

    #[test]
    fn transport_preserves_widths() {
        let t = tri([0, 0, 1, 2, 3, 1]);
        let m = UnimodularAffineMap::new([[3, 2], [1, 1]], [2, 9]).unwrap();
        for u in [DualVector::new(1, 0), DualVector::new(2, -3), DualVector::new(0, 1)] {
            assert_eq!(width_along(&t.map(&m), m.transport(u)), width_along(&t, u));
        }
    }

    #[test]
    fn profile_examples() {
        let p = width_profile(&tri([0, 0, 1, 0, 0, 1]));
        assert_eq!((p.w1, p.w2), (1, 1));
        assert_eq!(p.u1, Some(DualVector::new(0, 1)));
        assert_eq!(p.u2, Some(DualVector::new(1, 0)));

        let p = width_profile(&tri([0, 0, 0, 2, 0, 5]));
        assert_eq!((p.w1, p.w2), (0, 5));
        assert_eq!(p.u1, Some(DualVector::new(1, 0)));
        assert_eq!(width_along(&tri([0, 0, 0, 2, 0, 5]), p.u2.unwrap()), 5);

        let p = width_profile(&tri([0, 0, 1, 2, 3, 1]));
        assert_eq!((p.w1, p.w2), (2, 3));
        assert_eq!(p.u1, Some(DualVector::new(0, 1)));
    }

    #[test]
    fn profile_point_triangle_has_no_witnesses() {
        let p = width_profile(&tri([7, 7, 7, 7, 7, 7]));
        assert_eq!(
            p,
            WidthProfile {
                w1: 0,
                w2: 0,
                u1: None,
                u2: None
            }
        );
    }

    #[test]
    fn profile_of_segment_with_repeated_vertex() {
        let t = tri([1, 1, 4, 7, 1, 1]);
        let p = width_profile(&t);
        assert_eq!((p.w1, p.w2), (0, 3));
        assert_eq!(width_along(&t, p.u1.unwrap()), 0);
        assert!(p.u1.unwrap().is_independent_of(p.u2.unwrap()));
    }

    #[test]
    fn profile_of_long_thin_triangle() {
        // Skewed far away from the axes; true widths are (1, 2).
        let m = UnimodularAffineMap::new([[1000, 999], [1, 1]], [-5, 3]).unwrap();
        let t = tri([0, 0, 1, 0, 0, 2]).map(&m);
        let p = width_profile(&t);
        assert_eq!((p.w1, p.w2), (1, 2));
    }

    #[test]
    fn fit_examples() {
        let unit = tri([0, 0, 1, 0, 0, 1]);
        let fit = fit_to_rectangle(&unit);
        assert_eq!(fit.triangle, unit);
        assert_eq!(fit.map, UnimodularAffineMap::IDENTITY);
        assert_eq!(fit.rect, Rectangle { w: 1, h: 1 });

        let t = tri([0, 0, 1, 2, 3, 1]);
        let fit = fit_to_rectangle(&t);
        assert_eq!(fit.rect, Rectangle { w: 2, h: 3 });
        assert!(fit.rect.contains(&fit.triangle));
        assert_eq!(t.map(&fit.map), fit.triangle);

        let fit = fit_to_rectangle(&tri([7, 7, 7, 7, 7, 7]));
        assert_eq!(fit.triangle, tri([0; 6]));
        assert_eq!(fit.rect, Rectangle { w: 0, h: 0 });
    }

    #[test]
    fn fit_of_segment_is_vertical() {
        let fit = fit_to_rectangle(&tri([2, 1, 8, 4, 4, 2]));
        assert_eq!(fit.rect, Rectangle { w: 0, h: 3 });
        assert!(fit.triangle.vertices.iter().all(|v| v.x == 0));
        let ys: Vec<_> = fit.triangle.vertices.iter().map(|v| v.y).collect();
        assert!(ys.contains(&0) && ys.contains(&3));
    }
}
