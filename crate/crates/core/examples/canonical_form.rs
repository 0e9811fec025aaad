//! Push random unimodular images of one triangle back to a single normal form.
//!
//! cargo run --example canonical_form

use trilab::{are_equivalent, canonicalize, Triangle, UnimodularAffineMap};

fn main() {
    let t = Triangle::from_coords([0, 0, 3, 1, 2, 3]);
    let maps = [
        UnimodularAffineMap::IDENTITY,
        UnimodularAffineMap::new([[2, 1], [1, 1]], [5, -3]).unwrap(),
        UnimodularAffineMap::new([[0, 1], [1, 0]], [0, 0]).unwrap(),
        UnimodularAffineMap::new([[-3, 7], [1, -2]], [10, 10]).unwrap(),
    ];
    for m in maps {
        let image = t.map(&m);
        let (nf, to_nf) = canonicalize(&image);
        println!(
            "{image:<28} -> {:?} {}  via {:?}",
            nf.family,
            nf.triangle,
            to_nf.matrix()
        );
    }

    let a = Triangle::from_coords([0, 0, 4, 0, 0, 2]);
    let b = Triangle::from_coords([0, 0, 2, 0, 0, 4]);
    let c = Triangle::from_coords([0, 0, 4, 0, 1, 2]);
    println!("{a} ~ {b}: {}", are_equivalent(&a, &b));
    println!("{a} ~ {c}: {}", are_equivalent(&a, &c));
}
