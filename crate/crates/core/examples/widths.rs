//! Lattice widths of a few triangles, and the box each one fits in.
//!
//! cargo run --example widths

use trilab::{fit_to_rectangle, width_profile, Triangle, UnimodularAffineMap};

fn main() {
    let skew = UnimodularAffineMap::new([[7, 5], [4, 3]], [-2, 9]).expect("det 1");
    let triangles = [
        Triangle::from_coords([0, 0, 1, 0, 0, 1]),
        Triangle::from_coords([0, 0, 3, 0, 0, 4]),
        Triangle::from_coords([0, 0, 1, 2, 3, 1]),
        Triangle::from_coords([0, 0, 3, 0, 0, 4]).map(&skew),
        Triangle::from_coords([2, 1, 8, 4, 4, 2]),
    ];
    for t in triangles {
        let p = width_profile(&t);
        let fit = fit_to_rectangle(&t);
        println!("{t}");
        println!(
            "  widths ({}, {})  witnesses {:?} {:?}",
            p.w1,
            p.w2,
            p.u1.map(|u| u.to_string()),
            p.u2.map(|u| u.to_string())
        );
        println!("  fits [0,{}]x[0,{}] as {}", fit.rect.w, fit.rect.h, fit.triangle);
    }
}
