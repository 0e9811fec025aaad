//! Every class with both widths at most 4, grouped by (w1, w2).
//!
//! cargo run --example enumerate_classes [max_w2]

use trilab::{count_closed, enumerate_s};

fn main() {
    let max: u64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(4);
    let mut total = 0;
    for w2 in 0..=max {
        for w1 in 0..=w2 {
            let forms = enumerate_s(w1, w2).unwrap();
            assert_eq!(forms.len() as u64, count_closed(w1, w2).unwrap());
            total += forms.len();
            println!("({w1},{w2}): {} classes", forms.len());
            for nf in forms {
                println!("    {:<11?} {}", nf.family, nf.triangle);
            }
        }
    }
    println!("{total} classes in all");
}
