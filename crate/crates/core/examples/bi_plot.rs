//! Writes the (b, i) scatter data for triangles with w2, b, i <= 100 and
//! checks the empty cones.
//!
//! cargo run --release --example bi_plot -- out.csv

use std::fs;

use trilab::{bi_dataset, cone_contains, BiLimits};

fn main() {
    let out = std::env::args().nth(1).unwrap_or_else(|| "bi.csv".into());
    let records = bi_dataset(BiLimits {
        max_b: 100,
        max_i: 100,
        max_w2: 100,
    });
    let mut csv = String::from("b,i,max_w2,has_long_edge,count\n");
    for r in &records {
        csv.push_str(&format!(
            "{},{},{},{},{}\n",
            r.b, r.i, r.max_w2, r.has_long_edge, r.count
        ));
    }
    fs::write(&out, csv).expect("write csv");
    println!("{} realized pairs written to {out}", records.len());
    for c in 1..=8 {
        let inside: Vec<_> = records
            .iter()
            .filter(|r| cone_contains(c, r.point()))
            .map(|r| (r.b, r.i))
            .collect();
        println!("cone {c}: {} points inside {inside:?}", inside.len());
    }
}
