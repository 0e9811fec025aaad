//! Automorphism groups, read off the normal form and checked against
//! a direct search over vertex permutations.
//!
//! cargo run --example automorphisms

use std::collections::BTreeMap;

use trilab::{aut_classify, aut_group, aut_oracle, enumerate_s, Triangle};

fn main() {
    for c in [
        [0, 0, 4, 0, 0, 4],
        [0, 0, 3, 1, 2, 3],
        [0, 0, 3, 1, 0, 5],
        [0, 0, 3, 0, 0, 5],
        [5, 1, 2, 2, 0, 0],
    ] {
        let t = Triangle::from_coords(c);
        let class = aut_group(&t).unwrap();
        let perms: Vec<String> = class.permutations.iter().map(|p| p.to_string()).collect();
        println!("{t:<24} {:<8} {}", class.group.to_string(), perms.join(" "));
    }

    let mut tally = BTreeMap::new();
    for w2 in 1..=10 {
        for w1 in 1..=w2 {
            for nf in enumerate_s(w1, w2).unwrap() {
                let class = aut_classify(&nf).unwrap();
                assert_eq!(class, aut_oracle(&nf.triangle).unwrap());
                *tally.entry(class.group.to_string()).or_insert(0) += 1;
            }
        }
    }
    println!("\nnondegenerate classes with w2 <= 10: {tally:?}");
}
