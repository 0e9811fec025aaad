//! The sets {(gcd(a,c), gcd(a,b-c))} depend on b only through gcd(a,b).
//!
//! cargo run --example gcd_sets

use num_integer::gcd;
use trilab::gcd_pair_set;

fn main() {
    for (a, b) in [(4, 6), (12, 18), (12, 30), (9, 1)] {
        let g = gcd_pair_set(a, b).unwrap();
        println!("G({a},{b}) = {:?}", g.pairs);
    }
    let mismatches = (1..=60u64)
        .flat_map(|a| (1..=60u64).map(move |b| (a, b)))
        .filter(|&(a, b)| gcd_pair_set(a, b).unwrap().pairs != gcd_pair_set(a, gcd(a, b)).unwrap().pairs)
        .count();
    println!("pairs with 1 <= a, b <= 60 where G(a,b) != G(a,gcd(a,b)): {mismatches}");
}
