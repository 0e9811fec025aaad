//! Counts of classes with and without an edge as long as the second width.
//!
//! cargo run --release --example oeis_sequences [nmax]

use trilab::oeis_sequences;

fn main() {
    let nmax = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(12);
    let s = oeis_sequences(nmax);
    println!("with a long edge:       {:?}", s.long_edge);
    println!("  nondegenerate only:   {:?}", s.long_edge_nondegenerate);
    println!("without a long edge:    {:?}", s.no_long_edge);
    println!("first differences:      {:?}", s.differences);
}
