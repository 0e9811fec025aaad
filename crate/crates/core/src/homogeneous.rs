//! Triangles embedded at height one in Z³.
//!
//! A triangle `T(v1, v2, v3)` gives the matrix `A_T` whose columns are
//! `(x_i, y_i, 1)`. An affine map sending vertex `i` to vertex `σ(i)` is a
//! matrix `U` with `U·A_T = σA_T`, so `U = σA_T · adj(A_T) / det(A_T)`.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::lattice::{Triangle, UnimodularAffineMap};

/// A permutation of the three vertices, `i ↦ self.0[i]` (0-based).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm(pub [usize; 3]);

impl Perm {
    pub const IDENTITY: Perm = Perm([0, 1, 2]);

    /// All of S3: `()`, `(12)`, `(13)`, `(23)`, `(123)`, `(132)`.
    pub const ALL: [Perm; 6] = [
        Perm([0, 1, 2]),
        Perm([1, 0, 2]),
        Perm([2, 1, 0]),
        Perm([0, 2, 1]),
        Perm([1, 2, 0]),
        Perm([2, 0, 1]),
    ];

    pub fn apply(self, i: usize) -> usize {
        self.0[i]
    }

    /// `other ∘ self`.
    pub fn then(self, other: Perm) -> Perm {
        Perm(self.0.map(|i| other.0[i]))
    }

    pub fn inverse(self) -> Perm {
        let mut inv = [0; 3];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j] = i;
        }
        Perm(inv)
    }

    pub fn order(self) -> usize {
        let mut p = self;
        let mut n = 1;
        while p != Perm::IDENTITY {
            p = p.then(self);
            n += 1;
        }
        n
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = [false; 3];
        let mut out = String::new();
        for start in 0..3 {
            if seen[start] || self.0[start] == start {
                continue;
            }
            out.push('(');
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                out.push_str(&(i + 1).to_string());
                i = self.0[i];
            }
            out.push(')');
        }
        if out.is_empty() {
            out.push_str("()");
        }
        f.write_str(&out)
    }
}

impl Serialize for Perm {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Mat3(pub [[i64; 3]; 3]);

impl Mat3 {
    /// Columns `(x, y, 1)` of the vertices taken in the order `σ(0), σ(1), σ(2)`.
    pub fn of_triangle(t: &Triangle, sigma: Perm) -> Mat3 {
        let cols = [0, 1, 2].map(|c| t.vertices[sigma.apply(c)]);
        Mat3([cols.map(|v| v.x), cols.map(|v| v.y), [1; 3]])
    }

    pub fn mul(&self, other: &Mat3) -> Mat3 {
        let mut m = [[0; 3]; 3];
        for (i, row) in m.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = (0..3).map(|k| self.0[i][k] * other.0[k][j]).sum();
            }
        }
        Mat3(m)
    }

    pub fn det(&self) -> i64 {
        let m = &self.0;
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    }

    pub fn adjugate(&self) -> Mat3 {
        let m = &self.0;
        let mut adj = [[0; 3]; 3];
        for (i, row) in adj.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                // adj[i][j] is the (j, i) cofactor.
                let r: Vec<usize> = (0..3).filter(|&r| r != j).collect();
                let c: Vec<usize> = (0..3).filter(|&c| c != i).collect();
                let minor = m[r[0]][c[0]] * m[r[1]][c[1]] - m[r[0]][c[1]] * m[r[1]][c[0]];
                *cell = if (i + j) % 2 == 0 { minor } else { -minor };
            }
        }
        Mat3(adj)
    }
}

/// The matrix `(σA_target)·A_source⁻¹` when it is integral, as an affine
/// map of the plane. `source` must be nondegenerate.
///
/// The bottom row of the product is always `(0, 0, 1)`, since the bottom
/// rows of both vertex matrices are all ones.
pub(crate) fn vertex_map(source: &Triangle, target: &Triangle, sigma: Perm) -> Option<UnimodularAffineMap> {
    let a = Mat3::of_triangle(source, Perm::IDENTITY);
    let det = a.det();
    debug_assert!(det != 0);
    let numer = Mat3::of_triangle(target, sigma).mul(&a.adjugate());
    if numer.0.iter().flatten().any(|&e| e % det != 0) {
        return None;
    }
    let u = numer.0.map(|row| row.map(|e| e / det));
    debug_assert_eq!(u[2], [0, 0, 1]);
    UnimodularAffineMap::new([[u[0][0], u[0][1]], [u[1][0], u[1][1]]], [u[0][2], u[1][2]]).ok()
}
