//! Brute-force oracles shared by the integration tests. Nothing here calls
//! into the library except to build and read `Triangle`s.

#![allow(dead_code)]

use rand::Rng;
use trilab::{Triangle, UnimodularAffineMap};

pub type Pt = (i64, i64);

pub fn pts(t: &Triangle) -> [Pt; 3] {
    t.vertices.map(|p| (p.x, p.y))
}

pub fn tri(c: [i64; 6]) -> Triangle {
    Triangle::from_coords(c)
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

fn cross(o: Pt, a: Pt, b: Pt) -> i64 {
    (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
}

pub fn width_along(t: &Triangle, a: i64, b: i64) -> i64 {
    let v: Vec<i64> = pts(t).iter().map(|p| a * p.0 + b * p.1).collect();
    v.iter().max().unwrap() - v.iter().min().unwrap()
}

/// Successive width minima by scanning a box of dual vectors. The box is
/// large enough to contain every dual vector of width at most `cap` when the
/// triangle is nondegenerate; degenerate inputs use `fallback`.
pub fn widths_brute(t: &Triangle, fallback: i64) -> (i64, i64) {
    let [p0, p1, p2] = pts(t);
    let cap = {
        let xs = [p0.0, p1.0, p2.0];
        let ys = [p0.1, p1.1, p2.1];
        (xs.iter().max().unwrap() - xs.iter().min().unwrap()).max(ys.iter().max().unwrap() - ys.iter().min().unwrap())
    };
    let d = cross(p0, p1, p2).abs();
    let bound = if d == 0 {
        fallback
    } else {
        let (e1, e2) = ((p1.0 - p0.0, p1.1 - p0.1), (p2.0 - p0.0, p2.1 - p0.1));
        // |u·e1|, |u·e2| <= cap, then Cramer.
        let bx = cap * (e1.1.abs() + e2.1.abs());
        let by = cap * (e1.0.abs() + e2.0.abs());
        bx.max(by) / d + 1
    };
    let mut all = Vec::new();
    for a in -bound..=bound {
        for b in -bound..=bound {
            if (a, b) != (0, 0) && gcd(a, b) == 1 {
                all.push((width_along(t, a, b), a, b));
            }
        }
    }
    all.sort();
    let (w1, a1, b1) = all[0];
    let w2 = all
        .iter()
        .find(|&&(_, a, b)| a1 * b - b1 * a != 0)
        .map(|&(w, _, _)| w)
        .unwrap();
    (w1, w2)
}

/// Interior and boundary lattice points, by scanning the bounding box.
pub fn bi_brute(t: &Triangle) -> (i64, i64) {
    let [a, b, c] = pts(t);
    let orient = cross(a, b, c).signum();
    assert_ne!(orient, 0);
    let (lo_x, hi_x) = (a.0.min(b.0).min(c.0), a.0.max(b.0).max(c.0));
    let (lo_y, hi_y) = (a.1.min(b.1).min(c.1), a.1.max(b.1).max(c.1));
    let (mut boundary, mut interior) = (0, 0);
    for x in lo_x..=hi_x {
        for y in lo_y..=hi_y {
            let p = (x, y);
            let s = [cross(a, b, p), cross(b, c, p), cross(c, a, p)].map(|v| v * orient);
            if s.iter().all(|&v| v > 0) {
                interior += 1;
            } else if s.iter().all(|&v| v >= 0) {
                boundary += 1;
            }
        }
    }
    (boundary, interior)
}

/// Lattice points of the dilate `n·t`.
pub fn dilate_points_brute(t: &Triangle, n: i64) -> i64 {
    if n == 0 {
        return 1;
    }
    let (b, i) = bi_brute(&t.scaled(n));
    b + i
}

fn collinear_invariant(t: &Triangle) -> (i64, i64) {
    let mut p = pts(t);
    p.sort();
    let l = |a: Pt, b: Pt| gcd(b.0 - a.0, b.1 - a.1);
    let (x, y) = (l(p[0], p[1]), l(p[1], p[2]));
    (x.min(y), x.max(y))
}

/// Some affine `x ↦ Mx + c`, `det M = ±1`, sending vertex `i` of `a` to
/// vertex `σ(i)` of `b` for one of the six `σ`.
pub fn equivalent_brute(a: &Triangle, b: &Triangle) -> bool {
    let (pa, pb) = (pts(a), pts(b));
    let da = cross(pa[0], pa[1], pa[2]);
    let db = cross(pb[0], pb[1], pb[2]);
    if da == 0 || db == 0 {
        return da == 0 && db == 0 && collinear_invariant(a) == collinear_invariant(b);
    }
    if da.abs() != db.abs() {
        return false;
    }
    const PERMS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    PERMS.iter().any(|s| {
        let q = [pb[s[0]], pb[s[1]], pb[s[2]]];
        // M [e1 e2] = [f1 f2] with e, f edge vectors from vertex 0.
        let e1 = (pa[1].0 - pa[0].0, pa[1].1 - pa[0].1);
        let e2 = (pa[2].0 - pa[0].0, pa[2].1 - pa[0].1);
        let f1 = (q[1].0 - q[0].0, q[1].1 - q[0].1);
        let f2 = (q[2].0 - q[0].0, q[2].1 - q[0].1);
        // M = F · adj(E) / det(E)
        let m = [
            [f1.0 * e2.1 - f2.0 * e1.1, -f1.0 * e2.0 + f2.0 * e1.0],
            [f1.1 * e2.1 - f2.1 * e1.1, -f1.1 * e2.0 + f2.1 * e1.0],
        ];
        m.iter().flatten().all(|v| v % da == 0) && {
            let m = m.map(|r| r.map(|v| v / da));
            (m[0][0] * m[1][1] - m[0][1] * m[1][0]).abs() == 1
        }
    })
}

pub fn random_unimodular<R: Rng>(rng: &mut R, entry_bound: i64, shift_bound: i64) -> UnimodularAffineMap {
    loop {
        let m = [[0; 2]; 2].map(|r| r.map(|_: i64| rng.random_range(-entry_bound..=entry_bound)));
        if (m[0][0] * m[1][1] - m[0][1] * m[1][0]).abs() == 1 {
            let c = [0; 2].map(|_: i64| rng.random_range(-shift_bound..=shift_bound));
            return UnimodularAffineMap::new(m, c).unwrap();
        }
    }
}

pub fn random_triangle<R: Rng>(rng: &mut R, hi: i64) -> Triangle {
    tri([0; 6].map(|_: i64| rng.random_range(0..=hi)))
}

pub fn random_nondegenerate<R: Rng>(rng: &mut R, hi: i64) -> Triangle {
    loop {
        let t = random_triangle(rng, hi);
        let [a, b, c] = pts(&t);
        if cross(a, b, c) != 0 {
            return t;
        }
    }
}

/// Every vertex multiset inside `[0, n]²`.
pub fn all_triangles_in_square(n: i64) -> Vec<Triangle> {
    let points: Vec<Pt> = (0..=n).flat_map(|x| (0..=n).map(move |y| (x, y))).collect();
    let mut out = Vec::new();
    for i in 0..points.len() {
        for j in i..points.len() {
            for k in j..points.len() {
                let (a, b, c) = (points[i], points[j], points[k]);
                out.push(tri([a.0, a.1, b.0, b.1, c.0, c.1]));
            }
        }
    }
    out
}

/// One line per normal form of the golden file: `((w1, w2), coords)`.
pub fn golden_normal_forms() -> Vec<((u64, u64), [i64; 6])> {
    let text = include_str!("../golden/normal_forms_w4.txt");
    text.lines()
        .filter(|l| !l.starts_with('#') && !l.trim().is_empty())
        .map(|l| {
            let v: Vec<i64> = l.split_whitespace().map(|s| s.parse().unwrap()).collect();
            ((v[0] as u64, v[1] as u64), v[2..8].try_into().unwrap())
        })
        .collect()
}
