//! Boundary and interior counts, and how stretching an edge moves them
//! along a line.
//!
//! cargo run --example ehrhart_lines

use trilab::{boundary_interior, edge_widths, ehrhart_polynomial, extend_edge, strip_line_index, Triangle};

fn main() {
    let t = Triangle::from_coords([0, 0, 3, 0, 0, 4]);
    let e = ehrhart_polynomial(&t).unwrap();
    println!("{t}: ehr(n) = {}n^2 + {}n + {}", e.c2, e.c1, e.c0);
    for n in 0..4 {
        println!("  ehr({n}) = {}", e.eval(n));
    }

    for ew in edge_widths(&t).unwrap() {
        println!("edge {} (length {}, width {}):", ew.edge, ew.length, ew.width);
        for k in 0..4 {
            let tk = extend_edge(&t, ew.edge, k).unwrap();
            let p = boundary_interior(&tk).unwrap();
            println!(
                "  k={k} {tk:<24} (b,i) = ({},{})  m = {}",
                p.b,
                p.i,
                strip_line_index(p, ew.width)
            );
        }
    }

    let square = Triangle::from_coords([0, 0, 2, 0, 0, 2]);
    let p = boundary_interior(&square).unwrap();
    println!(
        "{square}: (b,i) = ({},{}), on i = 3b/2 - 9: {}",
        p.b,
        p.i,
        2 * p.i == 3 * p.b - 18
    );
}
