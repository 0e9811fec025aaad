//! Lattice triangles up to unimodular affine equivalence.
//!
//! Classes are indexed by their first and second lattice widths. Each class
//! has a unique normal form fitting in `[0, w1] × [0, w2]`, and everything
//! here is exact `i64` arithmetic.
//!
//! ```
//! use trilab::{canonical_form, Triangle};
//!
//! let t = Triangle::from_coords([0, 0, 3, 1, 2, 3]);
//! let nf = canonical_form(&t);
//! assert_eq!((nf.w1, nf.w2), (3, 3));
//! ```

pub mod automorphism;
pub mod canonical;
pub mod ehrhart;
pub mod enumeration;
pub mod error;
mod homogeneous;
pub mod lattice;

pub use automorphism::{aut_classify, aut_group, aut_oracle, AutClass, AutGroup, Perm};
pub use canonical::{
    are_equivalent, canonical_form, canonicalize, equivalence_witness, membership_s, Family, NormalForm,
};
pub use ehrhart::{
    bi_dataset, boundary_interior, cone_contains, edge_widths, ehrhart_polynomial, extend_edge, gcd_pair_set,
    strip_line_index, strip_range, BIPoint, BiLimits, BiRecord, EdgeExtensionLine, EdgeWidth, EhrhartPolynomial,
    GcdPairSet,
};
pub use enumeration::{
    bivariate_series_coeffs, count_closed, count_rect_cumulative, count_square, enumerate_s, hilbert_coeffs,
    lattice_points_nq, oeis_sequences, CountTable, OeisSequences, SeriesCoeffs,
};
pub use error::{Error, Result};
pub use lattice::{
    fit_to_rectangle, normalized_volume, width_along, width_profile, DualVector, Point, Rectangle, RectangleFit,
    Triangle, UnimodularAffineMap, WidthProfile,
};
