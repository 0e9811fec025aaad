//! Affine automorphism groups of nondegenerate triangles.
//!
//! An automorphism permutes the vertices, and the permutation determines
//! it, so `Aut(T)` is a subgroup of S3. [`aut_oracle`] tests each
//! permutation with an exact integrality check. [`aut_classify`] reads the
//! group straight off the normal form parameters.

use std::fmt;

use serde::Serialize;

use crate::canonical::{canonicalize, Family, NormalForm};
use crate::error::{Error, Result};
use crate::homogeneous::vertex_map;
use crate::lattice::Triangle;

pub use crate::homogeneous::Perm;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum AutGroup {
    S3,
    /// Generated by a 3-cycle.
    C3,
    /// Generated by a transposition.
    C2,
    Trivial,
}

impl fmt::Display for AutGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AutGroup::S3 => "S3",
            AutGroup::C3 => "C3",
            AutGroup::C2 => "C2",
            AutGroup::Trivial => "Trivial",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct AutClass {
    pub group: AutGroup,
    /// Realized vertex permutations, in the order of [`Perm::ALL`].
    pub permutations: Vec<Perm>,
}

impl AutClass {
    fn from_perms(mut permutations: Vec<Perm>) -> AutClass {
        permutations.sort_by_key(|p| Perm::ALL.iter().position(|q| q == p));
        let group = match permutations.len() {
            6 => AutGroup::S3,
            3 => AutGroup::C3,
            2 => AutGroup::C2,
            1 => AutGroup::Trivial,
            n => panic!("{n} permutations cannot form a subgroup of S3"),
        };
        AutClass { group, permutations }
    }

    /// Closed under composition and inverses, and contains the identity.
    pub fn is_subgroup(&self) -> bool {
        let has = |p: &Perm| self.permutations.contains(p);
        has(&Perm::IDENTITY)
            && self.permutations.iter().all(|p| has(&p.inverse()))
            && self
                .permutations
                .iter()
                .all(|p| self.permutations.iter().all(|q| has(&p.then(*q))))
    }
}

/// Tests every vertex permutation `σ` for an integral `U_σ = σA_T · A_T⁻¹`.
pub fn aut_oracle(t: &Triangle) -> Result<AutClass> {
    if t.is_degenerate() {
        return Err(Error::Degenerate(*t));
    }
    let perms = Perm::ALL
        .into_iter()
        .filter(|&sigma| vertex_map(t, t, sigma).is_some())
        .collect();
    Ok(AutClass::from_perms(perms))
}

/// The automorphism group of a normal form, decided from its parameters.
pub fn aut_classify(nf: &NormalForm) -> Result<AutClass> {
    if nf.family == Family::Segment || nf.w1 <= 0 {
        return Err(Error::Degenerate(nf.triangle));
    }
    let NormalForm {
        family, w1, w2, x2, y1, ..
    } = *nf;
    let square = w1 == w2;
    let long = family == Family::LongEdge;
    let short1 = family == Family::ShortEdge1;
    let [id, p12, p13, p23, c123, c132] = Perm::ALL;

    let perms = if square && ((long && y1 == 0) || (short1 && 2 * x2 == w1 && 2 * y1 == w1)) {
        Perm::ALL.to_vec()
    } else if square && short1 && x2 == w1 - y1 && 2 * y1 != w1 {
        vec![id, c123, c132]
    } else if long && y1.rem_euclid(w1) == (w2 - y1).rem_euclid(w1) && (y1 > 0 || w1 < w2) {
        // The reflection in the long vertical edge swaps its endpoints.
        vec![id, p13]
    } else if short1 && 2 * x2 == w1 && (y1 == 0 || (2 * y1 == w1 && w1 < w2)) {
        vec![id, p12]
    } else if short1 && square && x2 == y1 && 2 * y1 < w1 {
        vec![id, p23]
    } else {
        vec![id]
    };
    Ok(AutClass::from_perms(perms))
}

/// `Aut(t)` via the normal form, with permutations relabelled to `t`'s own
/// vertex order.
pub fn aut_group(t: &Triangle) -> Result<AutClass> {
    if t.is_degenerate() {
        return Err(Error::Degenerate(*t));
    }
    let (nf, map) = canonicalize(t);
    let image = nf.triangle.vertices;
    // tau sends the index of a vertex of t to the index of its image in nf.
    let tau = Perm(t.vertices.map(|v| {
        let w = map.apply(v);
        image
            .iter()
            .position(|&p| p == w)
            .expect("map carries vertices onto vertices")
    }));
    let class = aut_classify(&nf)?;
    let perms = class
        .permutations
        .into_iter()
        .map(|sigma| tau.then(sigma).then(tau.inverse()))
        .collect();
    Ok(AutClass::from_perms(perms))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canonical::{canonical_form, membership_s};

    fn tri(c: [i64; 6]) -> Triangle {
        Triangle::from_coords(c)
    }

    fn nf(c: [i64; 6]) -> NormalForm {
        membership_s(&tri(c)).expect("normal form")
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(aut_oracle(&tri([0, 0, 1, 0, 0, 1])).unwrap().group, AutGroup::S3);
        assert_eq!(aut_oracle(&tri([0, 0, 3, 1, 2, 3])).unwrap().group, AutGroup::C3);
        assert_eq!(aut_oracle(&tri([0, 0, 3, 0, 0, 5])).unwrap().group, AutGroup::Trivial);
    }

    #[test]
    fn oracle_rejects_degenerate() {
        let t = tri([0, 0, 1, 1, 2, 2]);
        assert_eq!(aut_oracle(&t), Err(Error::Degenerate(t)));
    }

    #[test]
    fn classify_examples() {
        assert_eq!(aut_classify(&nf([0, 0, 4, 0, 0, 4])).unwrap().group, AutGroup::S3);
        assert_eq!(aut_classify(&nf([0, 0, 2, 1, 1, 2])).unwrap().group, AutGroup::S3);
        assert_eq!(aut_classify(&nf([0, 0, 3, 1, 0, 5])).unwrap().group, AutGroup::C2);
        assert_eq!(aut_classify(&nf([0, 0, 3, 0, 0, 5])).unwrap().group, AutGroup::Trivial);
    }

    #[test]
    fn classify_three_cycle_from_canonical_form() {
        let t = tri([0, 0, 3, 1, 2, 3]);
        let c = canonical_form(&t);
        let class = aut_classify(&c).unwrap();
        assert_eq!(class.group, AutGroup::C3);
        assert_eq!(class, aut_oracle(&c.triangle).unwrap());
    }

    #[test]
    fn classify_rejects_segments() {
        assert!(aut_classify(&nf([0, 0, 0, 1, 0, 4])).is_err());
    }

    #[test]
    fn relabelled_group_matches_oracle() {
        for c in [
            [0, 0, 3, 1, 0, 5],
            [5, 0, 0, 0, 3, 1],
            [2, 3, 0, 0, 3, 1],
            [1, 1, 4, 2, 3, 4],
            [0, 0, 2, 0, 1, 3],
        ] {
            let t = tri(c);
            assert_eq!(aut_group(&t), aut_oracle(&t), "{t}");
        }
    }

    #[test]
    fn transposition_fixes_the_right_vertex() {
        let class = aut_oracle(&tri([0, 0, 3, 1, 0, 5])).unwrap();
        assert_eq!(class.permutations, [Perm::IDENTITY, Perm([2, 1, 0])]);
        assert!(class.is_subgroup());
    }
}
