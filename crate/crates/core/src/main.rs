//! `trilab`: command-line access to the triangle classification.
//!
//! Every subcommand prints one JSON object (or CSV) to stdout. Exit code 2
//! means the arguments did not parse, 1 means the input was rejected.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::Ratio;
use serde_json::{json, Value};

use trilab::{
    aut_group, aut_oracle, bi_dataset, bivariate_series_coeffs, boundary_interior, canonicalize, cone_contains,
    count_closed, count_rect_cumulative, count_square, edge_widths, ehrhart_polynomial, enumerate_s,
    equivalence_witness, gcd_pair_set, hilbert_coeffs, lattice_points_nq, oeis_sequences, strip_line_index,
    strip_range, width_profile, BiLimits, BiRecord, Error, Triangle,
};

/// Largest integer every JSON consumer reads exactly.
const EXACT_LIMIT: u64 = 1 << 53;

#[derive(Parser)]
#[command(
    name = "trilab",
    version,
    about = "Lattice triangles classified by their lattice widths"
)]
struct Cli {
    /// Worker threads for the parallel subcommands.
    #[arg(long, global = true, env = "TRILAB_THREADS")]
    threads: Option<usize>,

    /// Write the JSON result to this file instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    json: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct TriangleArg {
    /// x1 y1 x2 y2 x3 y3
    #[arg(num_args = 6, required = true, allow_negative_numbers = true, value_name = "COORD")]
    coords: Vec<i64>,
}

impl TriangleArg {
    fn triangle(&self) -> Triangle {
        Triangle::from_coords(self.coords.clone().try_into().expect("clap enforces six values"))
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// First and second lattice width with witnesses.
    Widths(TriangleArg),
    /// Normal form, family and the map reaching it.
    Canon(TriangleArg),
    /// Whether two triangles are equivalent, with a witness map.
    Equiv {
        /// x1 y1 x2 y2 x3 y3 of the first triangle, then of the second
        #[arg(num_args = 12, required = true, allow_negative_numbers = true, value_name = "COORD")]
        coords: Vec<i64>,
    },
    /// List the normal forms with widths (w1, w2).
    Enumerate {
        #[arg(long)]
        w1: u64,
        #[arg(long)]
        w2: u64,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Number of classes with widths (w1, w2).
    Count {
        #[arg(long)]
        w1: u64,
        #[arg(long)]
        w2: u64,
        /// Count classes fitting in [0, w1] x [0, w2] instead.
        #[arg(long)]
        cumulative: bool,
    },
    /// Number of classes fitting in [0, n]^2.
    SquareCount {
        #[arg(long)]
        n: u64,
        /// Compare with the lattice points of nQ.
        #[arg(long)]
        check_q: bool,
        /// Compare with the Hilbert series coefficient.
        #[arg(long)]
        check_series: bool,
    },
    /// Coefficients of the bivariate counting series.
    Series {
        #[arg(long)]
        max_deg: usize,
    },
    /// Affine automorphism group.
    Aut {
        #[command(flatten)]
        triangle: TriangleArg,
        /// Test every vertex permutation directly.
        #[arg(long)]
        oracle: bool,
    },
    /// Boundary and interior counts and the Ehrhart polynomial.
    Ehrhart {
        #[command(flatten)]
        triangle: TriangleArg,
        /// Also evaluate at this dilation factor.
        #[arg(long, value_name = "N")]
        dilate: Option<i64>,
    },
    /// Realized (b, i) pairs, with cone and strip checks.
    BiDataset {
        #[arg(long)]
        max_b: i64,
        #[arg(long)]
        max_i: i64,
        #[arg(long)]
        max_w2: u64,
        /// Check cones c = 1..=CONES.
        #[arg(long, default_value_t = 8)]
        cones: u32,
        #[arg(long, value_name = "PATH")]
        csv: Option<PathBuf>,
        #[arg(long, value_name = "PATH")]
        svg: Option<PathBuf>,
    },
    /// The set {(gcd(a, c), gcd(a, b - c))}.
    GcdSet {
        #[arg(long)]
        a: u64,
        #[arg(long)]
        b: u64,
    },
    /// Sequences of classes with and without a long edge.
    Oeis {
        #[arg(long)]
        nmax: u64,
    },
}

enum Output {
    Json(Value),
    Text(String),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::FAILURE;
        }
    }
    let result = run(cli.command).and_then(|out| emit(out, cli.json.as_deref()));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error(transparent)]
    Domain(#[from] Error),
    #[error("{0}")]
    Io(#[from] io::Error),
}

fn emit(out: Output, json_path: Option<&Path>) -> Result<(), CliError> {
    let text = match out {
        Output::Json(v) => format!("{v}\n"),
        Output::Text(s) => s,
    };
    match json_path {
        Some(p) => fs::write(p, text)?,
        None => io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn exact(n: u64) -> Value {
    if n <= EXACT_LIMIT {
        json!(n)
    } else {
        json!(n.to_string())
    }
}

fn ratio(r: Ratio<i64>) -> Value {
    if r.is_integer() {
        json!(r.to_integer())
    } else {
        json!(r.to_string())
    }
}

fn run(command: Command) -> Result<Output, CliError> {
    let out = match command {
        Command::Widths(t) => {
            let t = t.triangle();
            let p = width_profile(&t);
            json!({"schema": "widths/1", "w1": p.w1, "w2": p.w2, "u1": p.u1, "u2": p.u2, "triangle": t})
        }
        Command::Canon(t) => {
            let t = t.triangle();
            let (nf, map) = canonicalize(&t);
            json!({
                "schema": "canon/1",
                "family": nf.family,
                "w1": nf.w1,
                "w2": nf.w2,
                "x2": nf.x2,
                "y0": nf.y0,
                "y1": nf.y1,
                "triangle": nf.triangle,
                "map": map,
            })
        }
        Command::Equiv { coords } => {
            let a = Triangle::from_coords(coords[..6].try_into().expect("six"));
            let b = Triangle::from_coords(coords[6..].try_into().expect("six"));
            let witness = equivalence_witness(&a, &b);
            json!({"schema": "equiv/1", "equivalent": witness.is_some(), "witness": witness})
        }
        Command::Enumerate { w1, w2, format } => {
            let forms = enumerate_s(w1, w2)?;
            match format {
                Format::Json => {
                    let triangles: Vec<Value> = forms
                        .iter()
                        .map(|nf| json!({"family": nf.family, "triangle": nf.triangle}))
                        .collect();
                    json!({"schema": "enumerate/1", "w1": w1, "w2": w2, "count": forms.len(), "triangles": triangles})
                }
                Format::Csv => {
                    let mut s = String::from("family,x1,y1,x2,y2,x3,y3\n");
                    for nf in &forms {
                        let c = nf.triangle.coords().map(|v| v.to_string()).join(",");
                        s.push_str(&format!("{:?},{c}\n", nf.family));
                    }
                    return Ok(Output::Text(s));
                }
            }
        }
        Command::Count { w1, w2, cumulative } => {
            let count = if cumulative {
                count_rect_cumulative(w1, w2)?
            } else {
                count_closed(w1, w2)?
            };
            json!({"schema": "count/1", "w1": w1, "w2": w2, "cumulative": cumulative, "count": exact(count)})
        }
        Command::SquareCount {
            n,
            check_q,
            check_series,
        } => {
            let count = count_square(n);
            let mut v = json!({"schema": "square-count/1", "n": n, "count": exact(count)});
            let mut agree = true;
            if check_q {
                let q = lattice_points_nq(n);
                agree &= q == count;
                v["q_points"] = exact(q);
            }
            if check_series {
                let h = hilbert_coeffs(n as usize)[n as usize];
                agree &= h == count;
                v["series"] = exact(h);
            }
            if check_q || check_series {
                v["agree"] = json!(agree);
            }
            v
        }
        Command::Series { max_deg } => {
            let coeffs: Vec<Value> = bivariate_series_coeffs(max_deg)
                .iter()
                .map(|(w1, w2, c)| json!([w1, w2, c]))
                .collect();
            json!({"schema": "series/1", "max_deg": max_deg, "coefficients": coeffs})
        }
        Command::Aut { triangle, oracle } => {
            let t = triangle.triangle();
            let class = if oracle { aut_oracle(&t)? } else { aut_group(&t)? };
            json!({
                "schema": "aut/1",
                "method": if oracle { "oracle" } else { "normal-form" },
                "group": class.group.to_string(),
                "permutations": class.permutations,
            })
        }
        Command::Ehrhart { triangle, dilate } => {
            let t = triangle.triangle();
            let p = boundary_interior(&t)?;
            let e = ehrhart_polynomial(&t)?;
            let widths: Vec<Value> = edge_widths(&t)?
                .iter()
                .map(|w| json!({"edge": w.edge, "length": w.length, "width": w.width}))
                .collect();
            let mut v = json!({
                "schema": "ehrhart/1",
                "b": p.b,
                "i": p.i,
                "volume": p.volume(),
                "coefficients": [ratio(e.c2), ratio(e.c1), ratio(e.c0)],
                "edge_widths": widths,
            });
            if let Some(n) = dilate {
                if n < 0 {
                    return Err(Error::InvalidArgument(format!("dilation {n} is negative")).into());
                }
                v["dilate"] = json!(n);
                v["points"] = json!(e.eval(n));
            }
            v
        }
        Command::BiDataset {
            max_b,
            max_i,
            max_w2,
            cones,
            csv,
            svg,
        } => {
            let records = bi_dataset(BiLimits { max_b, max_i, max_w2 });
            if let Some(path) = &csv {
                fs::write(path, bi_csv(&records))?;
            }
            if let Some(path) = &svg {
                fs::write(path, bi_svg(&records, max_b, max_i))?;
            }
            let cone_report: Vec<Value> = (1..=cones)
                .map(|c| {
                    let inside: Vec<[i64; 2]> = records
                        .iter()
                        .filter(|r| cone_contains(c, r.point()))
                        .map(|r| [r.b, r.i])
                        .collect();
                    json!({"c": c, "points_inside": inside})
                })
                .collect();
            let strip_violations: Vec<Value> = records
                .iter()
                .flat_map(|r| r.edge_widths.iter().map(move |&w| (r, w)))
                .filter(|&(r, w)| {
                    let m = strip_line_index(r.point(), w);
                    let (lo, hi) = strip_range(w);
                    m < Ratio::from_integer(lo) || m > Ratio::from_integer(hi)
                })
                .map(|(r, w)| json!([r.b, r.i, w]))
                .collect();
            let mut v = json!({
                "schema": "bi-dataset/1",
                "max_b": max_b,
                "max_i": max_i,
                "max_w2": max_w2,
                "points": records.len(),
                "cones": cone_report,
                "strip_violations": strip_violations,
            });
            if csv.is_none() {
                v["records"] = json!(records
                    .iter()
                    .map(|r| json!([r.b, r.i, r.max_w2, r.has_long_edge, r.count]))
                    .collect::<Vec<_>>());
            }
            v
        }
        Command::GcdSet { a, b } => {
            let g = gcd_pair_set(a, b)?;
            let reduced = gcd_pair_set(a, num_integer::gcd(a, b))?;
            json!({
                "schema": "gcd-set/1",
                "a": a,
                "b": b,
                "pairs": g.pairs,
                "equals_reduced": g.pairs == reduced.pairs,
            })
        }
        Command::Oeis { nmax } => {
            let s = oeis_sequences(nmax);
            json!({
                "schema": "oeis/1",
                "nmax": nmax,
                "long_edge": s.long_edge,
                "long_edge_nondegenerate": s.long_edge_nondegenerate,
                "no_long_edge": s.no_long_edge,
                "differences": s.differences,
                "staircase": s.staircase(),
            })
        }
    };
    Ok(Output::Json(out))
}

fn bi_csv(records: &[BiRecord]) -> String {
    let mut s = String::from("b,i,max_w2,has_long_edge,count\n");
    for r in records {
        s.push_str(&format!(
            "{},{},{},{},{}\n",
            r.b, r.i, r.max_w2, r.has_long_edge, r.count
        ));
    }
    s
}

fn bi_svg(records: &[BiRecord], max_b: i64, max_i: i64) -> String {
    const SCALE: i64 = 6;
    const PAD: i64 = 20;
    let (w, h) = (max_b.max(1) * SCALE + 2 * PAD, max_i.max(1) * SCALE + 2 * PAD);
    let top_w2 = records.iter().map(|r| r.max_w2).max().unwrap_or(1).max(1);
    let mut s = format!("<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w}\" height=\"{h}\">\n");
    for r in records {
        let hue = 240 - 240 * r.max_w2 / top_w2;
        s.push_str(&format!(
            "<circle cx=\"{}\" cy=\"{}\" r=\"2\" fill=\"hsl({hue},80%,45%)\"/>\n",
            PAD + r.b * SCALE,
            h - PAD - r.i * SCALE
        ));
    }
    s.push_str("</svg>\n");
    s
}
