//! Acceptance suite: one PASS/FAIL line per criterion.

use std::collections::HashMap;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use hochschild_core::algebra::{
    algebra_basis, center_dimension, dim_algebra, multiply_paths, normalize_word,
};
use hochschild_core::cohomology::{
    check_kernel_basis, hh_dimensions, hom_dim_oracle, ker_dim_oracle, CochainComplex,
};
use hochschild_core::linalg::{rank_of_rows, SparseRow};
use hochschild_core::resolution::{linearity_check, minimality_check, verify_complex, Resolution};
use hochschild_core::{AlgebraElement, AlgebraParams, Backend, FieldSpec, Scalar, VertexId, Word};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn rational(q: [i64; 4]) -> FieldSpec {
    FieldSpec::rational(q).unwrap()
}

fn ratfunc(p: u64, q: [&str; 4]) -> FieldSpec {
    FieldSpec::parse(Backend::RationalFunction { p }, &q).unwrap()
}

fn specs() -> Vec<FieldSpec> {
    vec![
        rational([2, 1, 1, 1]),
        rational([2, 3, 5, 7]),
        ratfunc(3, ["t", "1", "1", "1"]),
        ratfunc(5, ["t", "2", "t+1", "3"]),
    ]
}

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn check(cond: bool, ok: impl Into<String>, fail: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(ok.into())
    } else {
        Err(fail())
    }
}

fn timed_dims(t: u32, spec: FieldSpec, nmax: u32, expected: &[u64], limit: Duration) -> Outcome {
    let start = Instant::now();
    let report = hh_dimensions(nmax, &AlgebraParams::new(t, spec)).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let dims = report.hh_dims();
    check(
        dims == expected && report.all_match && elapsed < limit,
        format!("hh = {dims:?} in {elapsed:.2?}"),
        || {
            format!(
                "hh = {dims:?} (want {expected:?}), all_match = {}, {elapsed:.2?}",
                report.all_match
            )
        },
    )
}

fn c1() -> Outcome {
    let expected = [1, 2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0];
    let out = timed_dims(
        0,
        rational([2, 1, 1, 1]),
        12,
        &expected,
        Duration::from_secs(10),
    )?;
    check(expected.iter().sum::<u64>() == 4, out, || {
        "total ≠ 4".into()
    })
}

fn c2() -> Outcome {
    timed_dims(
        1,
        rational([2, 1, 1, 1]),
        9,
        &[3, 4, 3, 2, 2, 2, 2, 2, 2, 2],
        Duration::from_secs(60),
    )
}

fn c3() -> Outcome {
    let spec = ratfunc(3, ["t", "1", "1", "1"]);
    timed_dims(
        1,
        spec,
        9,
        &[3, 5, 4, 2, 2, 4, 4, 2, 2, 4],
        Duration::from_secs(120),
    )
}

fn c4() -> Outcome {
    let mut runs = 0;
    for t in 0..3 {
        for spec in specs() {
            let report = verify_complex(12, &AlgebraParams::new(t, spec));
            if let Some(r) = report.residuals.first() {
                return Err(format!("T={t}: {r}"));
            }
            runs += 1;
        }
    }
    Ok(format!("{runs} runs, all residuals zero"))
}

fn c5() -> Outcome {
    for t in 0..3 {
        let p = AlgebraParams::new(t, rational([2, 3, 5, 7]));
        let complex = CochainComplex::compute(&Resolution::build(&p, 13), 12);
        for n in 0..=12u32 {
            let got = complex.hom_dims[n as usize] as u64;
            if got != hom_dim_oracle(n, t) {
                return Err(format!("T={t} n={n}: {got} vs {}", hom_dim_oracle(n, t)));
            }
        }
    }
    Ok("n ≤ 12, T ∈ {0,1,2}".into())
}

fn c6() -> Outcome {
    let cases = [
        (0, rational([2, 1, 1, 1])),
        (1, rational([2, 1, 1, 1])),
        (1, ratfunc(3, ["t", "1", "1", "1"])),
    ];
    for (t, spec) in cases {
        let p = AlgebraParams::new(t, spec);
        let cd = p.spec.char_divides(2 * t as u64 + 1);
        let complex = CochainComplex::compute(&Resolution::build(&p, 11), 10);
        for m in 0..=10usize {
            let want = ker_dim_oracle(m as i64 - 1, t, cd).map_err(|e| e.to_string())?;
            if complex.ker_dim(m) as u64 != want {
                return Err(format!(
                    "T={t} cd={cd} m={m}: {} vs {want}",
                    complex.ker_dim(m)
                ));
            }
        }
    }
    Ok("m ≤ 10, T ∈ {0,1}, both branches".into())
}

fn c7() -> Outcome {
    let cases = [
        (0, rational([2, 1, 1, 1])),
        (1, rational([2, 1, 1, 1])),
        (1, ratfunc(3, ["t", "1", "1", "1"])),
    ];
    for (t, spec) in cases {
        let p = AlgebraParams::new(t, spec);
        for n in 0..=8 {
            let c = check_kernel_basis(n, &p);
            if !c.passed() {
                return Err(format!("T={t} n={n}: {c:?}"));
            }
        }
    }
    Ok("n ≤ 8: in kernel, independent, complete".into())
}

fn words(len: usize) -> Vec<Vec<u8>> {
    (0..1usize << len)
        .map(|bits| (0..len).map(|b| ((bits >> b) & 1) as u8).collect())
        .collect()
}

/// Ideal relations at vertex i as (coefficient, letters).
fn relations(i: usize, p: &AlgebraParams) -> Vec<Vec<(Scalar, Vec<u8>)>> {
    let one = p.spec.one();
    let s = p.socle_length() as usize;
    let (a, b) = if i.is_multiple_of(2) {
        (0u8, 1u8)
    } else {
        (1, 0)
    };
    vec![
        vec![(one.clone(), vec![0, 1])],
        vec![(one.clone(), vec![1, 0])],
        vec![(p.spec.q(i as i64).clone(), vec![a; s]), (one, vec![b; s])],
    ]
}

/// dim A from words of each length modulo the span of u·r·v.
fn word_oracle(p: &AlgebraParams) -> usize {
    let mut total = 0;
    for d in 0..=p.socle_length() as usize + 1 {
        let mut index = HashMap::new();
        for start in 0..4usize {
            for w in words(d) {
                let next = index.len();
                index.insert((start, w), next);
            }
        }
        let mut rows: Vec<SparseRow> = Vec::new();
        for start in 0..4usize {
            for a in 0..=d {
                for rel in relations((start + a) % 4, p) {
                    let len = rel[0].1.len();
                    if a + len > d {
                        continue;
                    }
                    for u in words(a) {
                        for v in words(d - a - len) {
                            let mut row: SparseRow = rel
                                .iter()
                                .map(|(c, m)| {
                                    let w: Vec<u8> = u.iter().chain(m).chain(&v).copied().collect();
                                    (index[&(start, w)], c.clone())
                                })
                                .collect();
                            row.sort_by_key(|(c, _)| *c);
                            rows.push(row);
                        }
                    }
                }
            }
        }
        total += index.len() - rank_of_rows(rows);
    }
    total
}

fn c8() -> Outcome {
    for t in 0..2 {
        let p = AlgebraParams::new(t, rational([2, 3, 5, 7]));
        let (oracle, dim) = (word_oracle(&p), dim_algebra(&p));
        if oracle != dim || dim != 32 * t as usize + 16 {
            return Err(format!("T={t}: dim {dim}, word oracle {oracle}"));
        }
    }
    let tuples = [
        rational([2, 1, 1, 1]),
        rational([2, 3, 5, 7]),
        rational([-3, 1, 2, 1]),
        ratfunc(3, ["t", "1", "1", "1"]),
    ];
    for t in 0..3 {
        for spec in &tuples {
            let p = AlgebraParams::new(t, spec.clone());
            let z = center_dimension(&p);
            if z != 2 * t as usize + 1 {
                return Err(format!("T={t}: center {z}"));
            }
            if dim_algebra(&p) != 32 * t as usize + 16 {
                return Err(format!("T={t}: dim {}", dim_algebra(&p)));
            }
            for i in 0..4usize {
                for rel in relations(i, &p) {
                    let mut sum = AlgebraElement::zero();
                    for (c, letters) in rel {
                        sum.add_scaled(
                            &normalize_word(
                                &Word::from_letters(VertexId::new(i as i64), &letters),
                                &p,
                            ),
                            &c,
                        );
                    }
                    if !sum.is_empty() {
                        return Err(format!("T={t}: relation at e{i} gives {sum}"));
                    }
                }
            }
            let basis = algebra_basis(&p);
            for a in &basis {
                for b in &basis {
                    let ab = multiply_paths(a, b, &p);
                    for c in &basis {
                        let left = ab.as_ref().and_then(|(s, ab)| {
                            multiply_paths(ab, c, &p).map(|(s2, x)| (s * &s2, x))
                        });
                        let right = multiply_paths(b, c, &p).and_then(|(s, bc)| {
                            multiply_paths(a, &bc, &p).map(|(s2, x)| (&s * &s2, x))
                        });
                        if left != right {
                            return Err(format!("T={t}: ({a})({b})({c}) not associative"));
                        }
                    }
                }
            }
        }
    }
    Ok("dim A = 32T+16 (word oracle), center 2T+1, relations vanish, associative".into())
}

fn random_rational(rng: &mut StdRng) -> String {
    let n: i64 = loop {
        let n = rng.gen_range(-9..=9);
        if n != 0 {
            break n;
        }
    };
    format!("{n}/{}", rng.gen_range(1..=9))
}

fn random_ratfunc(rng: &mut StdRng, p: u64) -> String {
    let poly = |rng: &mut StdRng, nonzero: bool| loop {
        let c: Vec<u64> = (0..3).map(|_| rng.gen_range(0..p)).collect();
        if c.iter().any(|&x| x != 0) || !nonzero {
            break format!("({}*t^2+{}*t+{})", c[2], c[1], c[0]);
        }
    };
    format!("{}/{}", poly(rng, true), poly(rng, true))
}

fn c9() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let mut counts = [0usize; 2];
    for (slot, count) in counts.iter_mut().enumerate() {
        while *count < 1000 {
            let (backend, q): (Backend, Vec<String>) = if slot == 0 {
                (
                    Backend::Rational,
                    (0..4).map(|_| random_rational(&mut rng)).collect(),
                )
            } else {
                let p = [2, 3, 5, 7][rng.gen_range(0..4)];
                (
                    Backend::RationalFunction { p },
                    (0..4).map(|_| random_ratfunc(&mut rng, p)).collect(),
                )
            };
            let refs: Vec<&str> = q.iter().map(String::as_str).collect();
            let Ok(spec) = FieldSpec::parse(backend, &refs) else {
                continue;
            };
            let s = |u: u32, v: i64| spec.s_product(u, v);
            let (r, t, u) = (
                rng.gen_range(0..9u32),
                rng.gen_range(0..9u32),
                rng.gen_range(-8..16i64),
            );
            let first = &s(r, u) * &s(t, r as i64 + u) == s(r + t, u);
            let last = s(2 * t, 2 * t as i64 + u) == s(2 * t, u + 2);
            let four =
                &(&s(t, u) * &s(t, u + 1)) * &(&s(t, u + 2) * &s(t, u + 3)) == s(4, 0).pow(t);
            if !(first && last && four) {
                return Err(format!("q={q:?} r={r} t={t} u={u}"));
            }
            *count += 1;
        }
    }
    Ok(format!(
        "{} rational, {} F_p(t) instances",
        counts[0], counts[1]
    ))
}

fn c10() -> Outcome {
    for spec in specs() {
        let p = AlgebraParams::new(0, spec);
        if linearity_check(&p, 12) != Ok(true) {
            return Err("T=0 linearity failed".into());
        }
    }
    for t in 0..3 {
        for spec in specs() {
            if !minimality_check(12, &AlgebraParams::new(t, spec)) {
                return Err(format!("T={t}: minimality failed"));
            }
        }
    }
    Ok("linear at T=0, minimal for T ∈ {0,1,2}, n ≤ 12".into())
}

fn c11() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_hochschild");
    let cases: [&[&str]; 2] = [
        &["dims", "--q", "1,1,1,1"],
        &["dims", "--field", "ratfunc", "--p", "3", "--q", "t,1/t,2,2"],
    ];
    for args in cases {
        let out = Command::new(bin)
            .args(args)
            .output()
            .map_err(|e| e.to_string())?;
        let stderr = String::from_utf8_lossy(&out.stderr);
        if out.status.code() != Some(2) || stderr.lines().count() != 1 || !out.stdout.is_empty() {
            return Err(format!(
                "{args:?}: exit {:?}, stderr {stderr:?}",
                out.status.code()
            ));
        }
    }
    Ok("both rejected with exit code 2".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("T=0 over Q: HH dims n ≤ 12 (< 10 s)", c1),
        ("T=1 over Q: HH dims n ≤ 9 (< 60 s)", c2),
        ("T=1 over F_3(t): HH dims n ≤ 9 (< 120 s)", c3),
        ("∂∂ = 0 for T ≤ 2, n ≤ 12, both backends", c4),
        ("hom dimensions", c5),
        ("kernel dimensions", c6),
        ("explicit kernel bases", c7),
        ("algebra suite", c8),
        ("S-product identities", c9),
        ("linearity and minimality", c10),
        ("configuration guard", c11),
    ];
    let mut failed = 0;
    for (k, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(detail) => println!("criterion {:>2} [PRIMARY] PASS  {name}: {detail}", k + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} [PRIMARY] FAIL  {name}: {detail}", k + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
