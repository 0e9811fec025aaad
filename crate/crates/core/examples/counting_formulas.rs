//! Class counts four ways: enumeration, closed forms, lattice points of nQ,
//! and power series.
//!
//! cargo run --release --example counting_formulas

use trilab::{bivariate_series_coeffs, count_closed, count_square, hilbert_coeffs, lattice_points_nq, CountTable};

fn main() {
    let n = 8;
    let table = CountTable::enumerated(n, n);
    println!("classes with widths (w1, w2), w1 down, w2 across");
    for w1 in 0..=n {
        let row: Vec<String> = (0..=n)
            .map(|w2| table.get(w1, w2).map_or("   .".into(), |c| format!("{c:4}")))
            .collect();
        println!("{}", row.join(""));
    }

    let series = bivariate_series_coeffs(2 * n as usize);
    let agree = (0..=n).all(|w2| {
        (0..=w2).all(|w1| series.get(w1 as usize, w2 as usize) == count_closed(w1, w2).ok().map(|c| c as i64))
    });
    println!("series coefficients match the closed form: {agree}");

    let hilbert = hilbert_coeffs(n as usize);
    println!("\n n  square  |nQ|  series");
    for k in 0..=n {
        println!(
            "{k:2} {:7} {:5} {:7}",
            count_square(k),
            lattice_points_nq(k),
            hilbert[k as usize]
        );
    }
}
