use std::fmt::Write as _;

use hochschild_core::algebra::{center_dimension, dim_algebra, hom_space_basis};
use hochschild_core::cohomology::{
    check_kernel_basis, hh_dimensions, params_echo, CohomologyReport, ParamsEcho,
};
use hochschild_core::resolution::{
    dump_table, linearity_check, minimality_check, verify_complex, Resolution, RowRecord,
};
use hochschild_core::{AlgebraParams, VertexId};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::config::{Command, Format, RunConfig};

/// Rendered output plus whether every check passed.
pub struct Outcome {
    pub text: String,
    pub ok: bool,
}

pub fn run(config: &RunConfig) -> Outcome {
    let p = &config.params;
    let n = config.max_n;
    match config.command {
        Command::Dims => dims(p, n, config.format, false),
        Command::OracleCheck => dims(p, n, config.format, true),
        Command::VerifyComplex => complex(p, n, config.format),
        Command::KernelBasisCheck => kernel_bases(p, n, config.format),
        Command::AlgebraInfo => algebra_info(p, config.format),
        Command::ResolutionDump => resolution_dump(p, n, config.format),
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn to_csv<T: Serialize>(rows: &[T]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r).expect("serializable");
    }
    String::from_utf8(w.into_inner().expect("in-memory")).expect("utf-8")
}

fn params_line(echo: &ParamsEcho) -> String {
    let field = match echo.p {
        Some(p) => format!("F_{p}(t)"),
        None => "Q".to_string(),
    };
    format!(
        "T = {}, K = {field}, q = ({}), char | 2T+1: {}",
        echo.t,
        echo.q.join(", "),
        if echo.char_divides { "yes" } else { "no" }
    )
}

#[derive(Serialize)]
struct DegreeCsv {
    n: u32,
    hom_dim: u64,
    ker_dim: u64,
    rank: u64,
    hh: u64,
    hh_oracle: u64,
    #[serde(rename = "match")]
    matches: bool,
}

fn dims(p: &AlgebraParams, nmax: u32, format: Format, summary: bool) -> Outcome {
    let report = hh_dimensions(nmax, p).expect("parameters validated at configuration");
    let text = match format {
        Format::Json => to_json(&report),
        Format::Csv => to_csv(
            &report
                .degrees
                .iter()
                .map(|d| DegreeCsv {
                    n: d.n,
                    hom_dim: d.hom_dim,
                    ker_dim: d.ker_dim,
                    rank: d.rank,
                    hh: d.hh,
                    hh_oracle: d.hh_oracle,
                    matches: d.matches,
                })
                .collect::<Vec<_>>(),
        ),
        Format::Table => dims_table(&report, summary),
    };
    Outcome {
        text,
        ok: report.all_match,
    }
}

fn dims_table(report: &CohomologyReport, summary: bool) -> String {
    let mut s = String::new();
    writeln!(s, "{}", params_line(&report.params)).unwrap();
    writeln!(
        s,
        "{:>4} {:>8} {:>8} {:>8} {:>5} {:>10} {:>10} {:>10} {:>6}",
        "n", "hom_dim", "ker_dim", "rank", "hh", "hh_oracle", "ker_oracle", "hom_oracle", "match"
    )
    .unwrap();
    for d in &report.degrees {
        writeln!(
            s,
            "{:>4} {:>8} {:>8} {:>8} {:>5} {:>10} {:>10} {:>10} {:>6}",
            d.n,
            d.hom_dim,
            d.ker_dim,
            d.rank,
            d.hh,
            d.hh_oracle,
            d.ker_oracle,
            d.hom_oracle,
            d.matches
        )
        .unwrap();
    }
    if summary {
        let bad: Vec<String> = report
            .degrees
            .iter()
            .filter(|d| !d.matches)
            .map(|d| d.n.to_string())
            .collect();
        if bad.is_empty() {
            writeln!(s, "all degrees match").unwrap();
        } else {
            writeln!(s, "mismatch at n = {}", bad.join(", ")).unwrap();
        }
    }
    s
}

#[derive(Serialize, Deserialize)]
struct ComplexCheck {
    params: ParamsEcho,
    max_n: u32,
    complex: bool,
    residuals: Vec<String>,
    minimal: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    linear: Option<bool>,
}

#[derive(Serialize)]
struct CheckCsv<'a> {
    check: &'a str,
    passed: bool,
}

fn complex(p: &AlgebraParams, nmax: u32, format: Format) -> Outcome {
    let report = verify_complex(nmax, p);
    let check = ComplexCheck {
        params: params_echo(p),
        max_n: nmax,
        complex: report.passed(),
        residuals: report.residuals.iter().map(|r| r.to_string()).collect(),
        minimal: minimality_check(nmax, p),
        linear: linearity_check(p, nmax).ok(),
    };
    let ok = check.complex && check.minimal && check.linear != Some(false);
    let mut rows = vec![
        CheckCsv {
            check: "complex",
            passed: check.complex,
        },
        CheckCsv {
            check: "minimal",
            passed: check.minimal,
        },
    ];
    if let Some(linear) = check.linear {
        rows.push(CheckCsv {
            check: "linear",
            passed: linear,
        });
    }
    let text = match format {
        Format::Json => to_json(&check),
        Format::Csv => to_csv(&rows),
        Format::Table => {
            let mut s = String::new();
            writeln!(s, "{}", params_line(&check.params)).unwrap();
            for r in &rows {
                writeln!(
                    s,
                    "{:<8} n ≤ {:<3} {}",
                    r.check,
                    nmax,
                    if r.passed { "ok" } else { "FAILED" }
                )
                .unwrap();
            }
            for r in &check.residuals {
                writeln!(s, "  {r}").unwrap();
            }
            s
        }
    };
    Outcome { text, ok }
}

#[derive(Serialize, Deserialize)]
struct KernelRow {
    n: u32,
    listed: usize,
    kernel_dim: usize,
    rank: usize,
    in_kernel: bool,
    independent: bool,
    complete: bool,
}

#[derive(Serialize, Deserialize)]
struct KernelReport {
    params: ParamsEcho,
    degrees: Vec<KernelRow>,
    outside_kernel: Vec<String>,
    all_passed: bool,
}

fn kernel_bases(p: &AlgebraParams, nmax: u32, format: Format) -> Outcome {
    let checks: Vec<_> = (0..=nmax)
        .into_par_iter()
        .map(|n| check_kernel_basis(n, p))
        .collect();
    let report = KernelReport {
        params: params_echo(p),
        degrees: checks
            .iter()
            .map(|c| KernelRow {
                n: c.n,
                listed: c.listed,
                kernel_dim: c.kernel_dim,
                rank: c.rank,
                in_kernel: c.in_kernel(),
                independent: c.independent(),
                complete: c.complete(),
            })
            .collect(),
        outside_kernel: checks
            .iter()
            .flat_map(|c| {
                c.outside_kernel
                    .iter()
                    .map(move |v| format!("n={}: {v}", c.n))
            })
            .collect(),
        all_passed: checks.iter().all(|c| c.passed()),
    };
    let text = match format {
        Format::Json => to_json(&report),
        Format::Csv => to_csv(&report.degrees),
        Format::Table => {
            let mut s = String::new();
            writeln!(s, "{}", params_line(&report.params)).unwrap();
            writeln!(
                s,
                "{:>4} {:>7} {:>10} {:>5} {:>10} {:>12} {:>9}",
                "n", "listed", "kernel_dim", "rank", "in_kernel", "independent", "complete"
            )
            .unwrap();
            for d in &report.degrees {
                writeln!(
                    s,
                    "{:>4} {:>7} {:>10} {:>5} {:>10} {:>12} {:>9}",
                    d.n, d.listed, d.kernel_dim, d.rank, d.in_kernel, d.independent, d.complete
                )
                .unwrap();
            }
            for v in &report.outside_kernel {
                writeln!(s, "not in kernel: {v}").unwrap();
            }
            s
        }
    };
    Outcome {
        text,
        ok: report.all_passed,
    }
}

#[derive(Serialize, Deserialize)]
struct AlgebraInfo {
    params: ParamsEcho,
    dim: usize,
    expected_dim: usize,
    /// hom_dims[i][j] = dim e_i A e_j
    hom_dims: Vec<Vec<usize>>,
    center_dim: usize,
    expected_center_dim: usize,
}

#[derive(Serialize)]
struct HomCsv {
    i: usize,
    j: usize,
    dim: usize,
}

fn algebra_info(p: &AlgebraParams, format: Format) -> Outcome {
    let t = p.t as usize;
    let info = AlgebraInfo {
        params: params_echo(p),
        dim: dim_algebra(p),
        expected_dim: 32 * t + 16,
        hom_dims: VertexId::all()
            .map(|i| {
                VertexId::all()
                    .map(|j| hom_space_basis(i, j, p).len())
                    .collect()
            })
            .collect(),
        center_dim: center_dimension(p),
        expected_center_dim: 2 * t + 1,
    };
    let ok = info.dim == info.expected_dim && info.center_dim == info.expected_center_dim;
    let text = match format {
        Format::Json => to_json(&info),
        Format::Csv => {
            let rows: Vec<HomCsv> = (0..4)
                .flat_map(|i| (0..4).map(move |j| (i, j)))
                .map(|(i, j)| HomCsv {
                    i,
                    j,
                    dim: info.hom_dims[i][j],
                })
                .collect();
            to_csv(&rows)
        }
        Format::Table => {
            let mut s = String::new();
            writeln!(s, "{}", params_line(&info.params)).unwrap();
            writeln!(
                s,
                "dim A      = {} (expected {})",
                info.dim, info.expected_dim
            )
            .unwrap();
            writeln!(
                s,
                "dim Z(A)   = {} (expected {})",
                info.center_dim, info.expected_center_dim
            )
            .unwrap();
            writeln!(s, "dim e_i A e_j:").unwrap();
            writeln!(s, "     j=0 j=1 j=2 j=3").unwrap();
            for (i, row) in info.hom_dims.iter().enumerate() {
                let cells: Vec<String> = row.iter().map(|d| format!("{d:>3}")).collect();
                writeln!(s, "i={i} {}", cells.join(" ")).unwrap();
            }
            s
        }
    };
    Outcome { text, ok }
}

#[derive(Serialize, Deserialize)]
struct Dump {
    params: ParamsEcho,
    rows: Vec<RowRecord>,
}

#[derive(Serialize)]
struct TermCsv<'a> {
    degree: u32,
    i: u8,
    j: u32,
    coeff: &'a str,
    left: &'a str,
    target_i: u8,
    target_j: u32,
    right: &'a str,
}

fn resolution_dump(p: &AlgebraParams, nmax: u32, format: Format) -> Outcome {
    let res = Resolution::build(p, nmax);
    let dump = Dump {
        params: params_echo(p),
        rows: (1..=nmax).flat_map(|n| dump_table(res.table(n))).collect(),
    };
    let text = match format {
        Format::Json => to_json(&dump),
        Format::Csv => {
            let rows: Vec<TermCsv> = dump
                .rows
                .iter()
                .flat_map(|r| {
                    r.terms.iter().map(move |t| TermCsv {
                        degree: r.degree,
                        i: r.i,
                        j: r.j,
                        coeff: &t.coeff,
                        left: &t.left,
                        target_i: t.target.i,
                        target_j: t.target.j,
                        right: &t.right,
                    })
                })
                .collect();
            to_csv(&rows)
        }
        Format::Table => {
            let mut s = String::new();
            writeln!(s, "{}", params_line(&dump.params)).unwrap();
            for r in &dump.rows {
                let terms: Vec<String> = r
                    .terms
                    .iter()
                    .map(|t| {
                        format!(
                            "({})*{}*p^{}_({},{})*{}",
                            t.coeff,
                            t.left,
                            r.degree - 1,
                            t.target.i,
                            t.target.j,
                            t.right
                        )
                    })
                    .collect();
                writeln!(
                    s,
                    "d^{}(p^{}_({},{})) = {}",
                    r.degree,
                    r.degree,
                    r.i,
                    r.j,
                    terms.join(" + ")
                )
                .unwrap();
            }
            s
        }
    };
    Outcome { text, ok: true }
}
