//! Normal forms and affine unimodular equivalence.
//!
//! Every normal form is written `T((0, y0), (w1, y1), (x2, w2))`; each
//! family fixes some of the parameters:
//!
//! | family       | shape                          | constraints                                                  |
//! |--------------|--------------------------------|--------------------------------------------------------------|
//! | `Segment`    | `T(0, (0, y1), (0, w2))`       | `w1 = 0`, `0 ≤ y1 ≤ w2/2`                                    |
//! | `LongEdge`   | `T(0, (w1, y1), (0, w2))`      | `0 ≤ y1 ≤ (w2 − y1) mod w1`                                  |
//! | `ShortEdge1` | `T(0, (w1, y1), (x2, w2))`     | `0 < x2 ≤ w1/2`, `0 ≤ y1 ≤ w1 − x2`, `y1 ≥ x2` if `w1 = w2`   |
//! | `ShortEdge2` | `T((0, y0), (w1, 0), (x2, w2))`| `1 < x2 < w1/2`, `0 < y0 < x2`, `w1 < w2`                    |
//!
//! with `0 ≤ w1 ≤ w2`. Each class of triangles with widths `(w1, w2)` has
//! exactly one representative in this list.

use serde::Serialize;

use crate::enumeration::enumerate_s;
use crate::homogeneous::{vertex_map, Perm};
use crate::lattice::{fit_to_rectangle, lattice_length, Point, Triangle, UnimodularAffineMap};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Family {
    Segment,
    LongEdge,
    ShortEdge1,
    ShortEdge2,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct NormalForm {
    pub family: Family,
    pub w1: i64,
    pub w2: i64,
    pub x2: i64,
    pub y0: i64,
    pub y1: i64,
    pub triangle: Triangle,
}

impl NormalForm {
    /// Builds `T((0, y0), (w1, y1), (x2, w2))` without checking constraints.
    pub(crate) fn from_params(family: Family, w1: i64, w2: i64, x2: i64, y0: i64, y1: i64) -> Self {
        NormalForm {
            family,
            w1,
            w2,
            x2,
            y0,
            y1,
            triangle: Triangle::new(Point::new(0, y0), Point::new(w1, y1), Point::new(x2, w2)),
        }
    }
}

/// The normal form `t` literally is, vertex order included.
pub fn membership_s(t: &Triangle) -> Option<NormalForm> {
    let [p0, p1, p2] = t.vertices;
    if p0.x != 0 {
        return None;
    }
    let (y0, w1, y1, x2, w2) = (p0.y, p1.x, p1.y, p2.x, p2.y);
    if w1 < 0 || w1 > w2 {
        return None;
    }
    let family = if w1 == 0 {
        (y0 == 0 && x2 == 0 && y1 >= 0 && 2 * y1 <= w2).then_some(Family::Segment)
    } else if y0 == 0 && x2 == 0 {
        (y1 >= 0 && y1 <= (w2 - y1).rem_euclid(w1)).then_some(Family::LongEdge)
    } else if y0 == 0 {
        let ok = x2 > 0 && 2 * x2 <= w1 && y1 >= 0 && y1 <= w1 - x2 && (w1 < w2 || y1 >= x2);
        ok.then_some(Family::ShortEdge1)
    } else {
        let ok = y1 == 0 && x2 > 1 && 2 * x2 < w1 && y0 > 0 && y0 < x2 && w1 < w2;
        ok.then_some(Family::ShortEdge2)
    }?;
    Some(NormalForm::from_params(family, w1, w2, x2, y0, y1))
}

/// Lattice data of a degenerate triangle: hull length and the distance of
/// the middle vertex from the nearer end.
fn segment_invariant(t: &Triangle) -> (i64, i64) {
    let [a, b, c] = t.vertices;
    let pairs = [(a, b, c), (b, c, a), (c, a, b)];
    let (p, q, mid) = pairs
        .into_iter()
        .max_by_key(|&(p, q, _)| lattice_length(p, q))
        .expect("three pairs");
    let len = lattice_length(p, q);
    let l = lattice_length(p, mid);
    (len, l.min(len - l))
}

/// Normal form and a map carrying the vertex multiset of a degenerate `t`
/// onto it.
fn canonicalize_segment(t: &Triangle) -> (NormalForm, UnimodularAffineMap) {
    let (len, y1) = segment_invariant(t);
    let nf = NormalForm::from_params(Family::Segment, 0, len, 0, 0, y1);
    let fit = fit_to_rectangle(t);
    let mut map = fit.map;
    let mut ys = fit.triangle.vertices.map(|v| v.y);
    ys.sort();
    if ys[1] != y1 {
        let flip = UnimodularAffineMap::new([[1, 0], [0, -1]], [0, len]).expect("reflection");
        map = map.then(&flip);
    }
    debug_assert_eq!(t.map(&map).sorted_vertices(), nf.triangle.sorted_vertices());
    (nf, map)
}

/// A unimodular affine map sending the vertex multiset of `a` onto that of
/// `b`, if one exists.
pub fn equivalence_witness(a: &Triangle, b: &Triangle) -> Option<UnimodularAffineMap> {
    match (a.is_degenerate(), b.is_degenerate()) {
        (true, true) => {
            if segment_invariant(a) != segment_invariant(b) {
                return None;
            }
            let (_, ma) = canonicalize_segment(a);
            let (_, mb) = canonicalize_segment(b);
            Some(ma.then(&mb.inverse()))
        }
        (false, false) => {
            if a.normalized_volume() != b.normalized_volume() {
                return None;
            }
            Perm::ALL.iter().find_map(|&sigma| vertex_map(a, b, sigma))
        }
        _ => None,
    }
}

pub fn are_equivalent(a: &Triangle, b: &Triangle) -> bool {
    equivalence_witness(a, b).is_some()
}

/// The normal form of `t` together with a map carrying `t`'s vertex
/// multiset onto the normal form's.
pub fn canonicalize(t: &Triangle) -> (NormalForm, UnimodularAffineMap) {
    if t.is_degenerate() {
        return canonicalize_segment(t);
    }
    let fit = fit_to_rectangle(t);
    let volume = t.normalized_volume();
    let (w1, w2) = (fit.rect.w as u64, fit.rect.h as u64);
    enumerate_s(w1, w2)
        .expect("fitted rectangle has w1 <= w2")
        .into_iter()
        .filter(|nf| nf.triangle.normalized_volume() == volume)
        .find_map(|nf| equivalence_witness(&fit.triangle, &nf.triangle).map(|m| (nf, fit.map.then(&m))))
        .unwrap_or_else(|| panic!("no normal form with widths ({w1}, {w2}) matches {t}"))
}

pub fn canonical_form(t: &Triangle) -> NormalForm {
    canonicalize(t).0
}
