//! Explicit bases of Ker δ^n, transcribed case by case, and the check that
//! they really are bases.

use crate::algebra::AlgebraParams;
use crate::linalg::{Echelon, SparseRow};
use crate::scalars::Scalar;

use super::{char_branch, delta_matrix, HomVector};

/// Accumulates one cochain from β-labels with S-product coefficients.
struct Cochain<'a> {
    params: &'a AlgebraParams,
    v: HomVector,
}

impl<'a> Cochain<'a> {
    fn new(n: u32, params: &'a AlgebraParams) -> Self {
        Cochain {
            params,
            v: HomVector::zero(n),
        }
    }

    /// `+ c β^{n,k}_{l,i,j}`
    fn term(mut self, c: Scalar, l: i64, i: i64, j: i64, k: u32) -> Self {
        self.v.add_beta(c, l, i, j as u32, k, self.params);
        self
    }

    fn plus(self, l: i64, i: i64, j: i64, k: u32) -> Self {
        let one = self.params.spec.one();
        self.term(one, l, i, j, k)
    }

    fn minus(self, l: i64, i: i64, j: i64, k: u32) -> Self {
        let m = -&self.params.spec.one();
        self.term(m, l, i, j, k)
    }

    fn done(self) -> HomVector {
        self.v
    }
}

/// The listed basis of Ker δ^n.
pub fn listed_kernel_basis(n: u32, params: &AlgebraParams) -> Vec<HomVector> {
    if params.t == 0 {
        basis_t0(n, params)
    } else {
        basis_positive_t(n, params)
    }
}

fn basis_t0(n: u32, p: &AlgebraParams) -> Vec<HomVector> {
    let s = |u: i64, v: i64| p.spec.s_product(u as u32, v);
    let m = (n / 4) as i64;
    let nn = n as i64;
    let mut out = Vec::new();
    match (n % 4, m) {
        (0, 0) => {
            let v = (0..4).fold(Cochain::new(0, p), |acc, j| acc.plus(0, j, 0, 0));
            out.push(v.done());
        }
        (0, _) | (3, _) => {}
        (1, 0) => {
            for r in 0..3 {
                out.push(
                    Cochain::new(1, p)
                        .plus(r, r, 0, 0)
                        .plus(r + 1, r, 1, 0)
                        .minus(r, r + 1, 1, 0)
                        .minus(r + 1, r + 1, 0, 0)
                        .done(),
                );
            }
            out.push(Cochain::new(1, p).plus(0, 0, 0, 0).plus(1, 0, 1, 0).done());
            out.push(
                Cochain::new(1, p)
                    .plus(1, 0, 1, 0)
                    .plus(0, 1, 1, 0)
                    .plus(1, 2, 1, 0)
                    .plus(0, 3, 1, 0)
                    .done(),
            );
        }
        (1, _) => {
            for r in 0..4 {
                for u in 0..=4 * m {
                    out.push(
                        Cochain::new(n, p)
                            .term(s(u, r), r, r, u, 0)
                            .plus(r + 1, r, u + 1, 0)
                            .term(-&s(4 * m - u, u + r + 1), r, r + 1, u + 1, 0)
                            .minus(r + 1, r + 1, u, 0)
                            .done(),
                    );
                }
            }
        }
        _ => {
            for r in 0..4 {
                for u in 0..=nn {
                    out.push(Cochain::new(n, p).plus(0, r, u, 0).done());
                }
            }
        }
    }
    out
}

fn basis_positive_t(n: u32, p: &AlgebraParams) -> Vec<HomVector> {
    let t = p.t;
    let s = |u: i64, v: i64| p.spec.s_product(u as u32, v);
    let m = (n / 4) as i64;
    let mut out = Vec::new();
    match (n % 4, m) {
        (0, 0) => {
            out.push(
                (0..4)
                    .fold(Cochain::new(0, p), |acc, j| acc.plus(0, j, 0, 0))
                    .done(),
            );
            for l in 0..2 {
                for k in 1..=t {
                    out.push(
                        (0..4)
                            .fold(Cochain::new(0, p), |acc, j| acc.plus(l, j, 0, k))
                            .done(),
                    );
                }
            }
        }
        (0, _) => {
            for r in 0..4 {
                for u in 0..2 * m {
                    for k in 1..=t {
                        out.push(
                            Cochain::new(n, p)
                                .term(s(u, r), r, r, u, k)
                                .plus(r, r + 1, u, k)
                                .done(),
                        );
                    }
                }
            }
            for r in 0..4 {
                for u in 2 * m + 1..=4 * m {
                    for k in 1..=t {
                        out.push(
                            Cochain::new(n, p)
                                .plus(r, r + 1, u, k)
                                .term(s(4 * m - u, r + u + 1), r, r + 2, u, k)
                                .done(),
                        );
                    }
                }
            }
            for l in 0..2 {
                for k in 1..=t {
                    out.push(
                        Cochain::new(n, p)
                            .term(s(4 * m, 0), l, l, 2 * m, k)
                            .term(s(2 * m, l + 2), l, l + 1, 2 * m, k)
                            .term(&s(2 * m, l + 2) * &s(2 * m, l + 3), l, l + 2, 2 * m, k)
                            .term(s(2 * m, l + 3), l, l + 3, 2 * m, k)
                            .done(),
                    );
                }
            }
        }
        (1, 0) => {
            for r in 0..4 {
                for k in 1..=t {
                    out.push(Cochain::new(1, p).plus(r, r, 0, k).done());
                    out.push(Cochain::new(1, p).plus(r, r + 1, 1, k).done());
                }
            }
            out.push(Cochain::new(1, p).plus(0, 0, 0, 0).plus(1, 0, 1, 0).done());
            for r in 0..3 {
                out.push(
                    Cochain::new(1, p)
                        .plus(r, r, 0, 0)
                        .plus(r + 1, r, 1, 0)
                        .minus(r, r + 1, 1, 0)
                        .minus(r + 1, r + 1, 0, 0)
                        .done(),
                );
            }
            if char_branch(p) {
                out.push(Cochain::new(1, p).plus(0, 1, 1, 0).plus(0, 3, 1, 0).done());
                out.push(Cochain::new(1, p).plus(1, 0, 1, 0).plus(1, 2, 1, 0).done());
            } else {
                out.push(
                    Cochain::new(1, p)
                        .plus(0, 1, 1, 0)
                        .plus(0, 3, 1, 0)
                        .plus(1, 0, 1, 0)
                        .plus(1, 2, 1, 0)
                        .done(),
                );
            }
        }
        (1, _) => {
            // the four-term shape with the outer and inner k-levels given
            let square = |r: i64, u: i64, outer: u32, inner: u32| {
                Cochain::new(n, p)
                    .term(s(u, r), r, r, u, outer)
                    .plus(r + 1, r, u + 1, inner)
                    .term(-&s(4 * m - u, u + r + 1), r, r + 1, u + 1, inner)
                    .minus(r + 1, r + 1, u, outer)
                    .done()
            };
            for r in 0..4 {
                for u in 0..2 * m {
                    out.push(square(r, u, 0, t));
                }
            }
            for r in 0..4 {
                for u in 2 * m + 1..=4 * m {
                    out.push(square(r, u, t, 0));
                }
            }
            for r in 0..4 {
                for u in 0..=2 * m {
                    for k in 1..=t {
                        out.push(Cochain::new(n, p).plus(r, r, u, k).done());
                    }
                }
            }
            for r in 0..4 {
                for u in 2 * m + 1..=4 * m + 1 {
                    for k in 1..=t {
                        out.push(Cochain::new(n, p).plus(r + 1, r, u, k).done());
                    }
                }
            }
            let middle = |r: i64| {
                Cochain::new(n, p)
                    .term(s(2 * m, r), r, r, 2 * m, 0)
                    .plus(r + 1, r, 2 * m + 1, 0)
                    .term(-&s(2 * m, r + 3), r, r + 1, 2 * m + 1, 0)
                    .minus(r + 1, r + 1, 2 * m, 0)
                    .done()
            };
            out.push(middle(0));
            out.push(middle(1));
            if char_branch(p) {
                for r in 0..2 {
                    for l in 0..2 {
                        out.push(
                            Cochain::new(n, p)
                                .term(s(2 * m, r + l), r + l, r, 2 * m + l, 0)
                                .term(s(2 * m, r + l + 3), r + l, r + 2, 2 * m + l, 0)
                                .done(),
                        );
                    }
                }
            } else {
                out.push(middle(2));
                out.push(middle(3));
            }
        }
        (2, _) => {
            for r in 0..4 {
                for u in 0..=2 * m {
                    for k in 0..t {
                        out.push(
                            Cochain::new(n, p)
                                .term(s(u, r), r, r, u, k)
                                .plus(r, r + 1, u, k)
                                .done(),
                        );
                    }
                }
            }
            for r in 0..4 {
                for u in 2 * m + 2..=4 * m + 2 {
                    for k in 0..t {
                        out.push(
                            Cochain::new(n, p)
                                .plus(r, r + 1, u, k)
                                .term(s(4 * m - u + 2, u + r + 1), r, r + 2, u, k)
                                .done(),
                        );
                    }
                }
            }
            for l in 0..2 {
                for k in 0..t {
                    out.push(
                        Cochain::new(n, p)
                            .term(s(2 * m, l), l, l + 3, 2 * m + 1, k)
                            .term(&s(2 * m, l) * &s(2 * m + 1, l + 2), l, l + 2, 2 * m + 1, k)
                            .term(s(2 * m, l + 3), l, l + 1, 2 * m + 1, k)
                            .term(s(4 * m + 1, l), l, l, 2 * m + 1, k)
                            .done(),
                    );
                }
            }
            for r in 0..4 {
                for u in 0..=4 * m + 2 {
                    out.push(Cochain::new(n, p).plus(0, r, u, t).done());
                }
            }
        }
        _ => {
            for r in 0..4 {
                for u in 0..=2 * m + 1 {
                    for k in 0..t {
                        out.push(Cochain::new(n, p).plus(r, r, u, k).done());
                    }
                }
            }
            for r in 0..4 {
                for u in 2 * m + 2..=4 * m + 3 {
                    for k in 0..t {
                        out.push(Cochain::new(n, p).plus(r, r + 1, u, k).done());
                    }
                }
            }
        }
    }
    out
}

/// Outcome of checking a listed kernel basis against δ^n.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelBasisCheck {
    pub n: u32,
    pub listed: usize,
    pub kernel_dim: usize,
    /// Vectors with δ^n v ≠ 0, rendered.
    pub outside_kernel: Vec<String>,
    pub rank: usize,
}

impl KernelBasisCheck {
    pub fn in_kernel(&self) -> bool {
        self.outside_kernel.is_empty()
    }

    pub fn independent(&self) -> bool {
        self.rank == self.listed
    }

    pub fn complete(&self) -> bool {
        self.listed == self.kernel_dim
    }

    pub fn passed(&self) -> bool {
        self.in_kernel() && self.independent() && self.complete()
    }
}

pub fn check_kernel_basis(n: u32, params: &AlgebraParams) -> KernelBasisCheck {
    let delta = delta_matrix(n, params);
    let zero = params.spec.zero();
    let vectors = listed_kernel_basis(n, params);
    let outside_kernel = vectors
        .iter()
        .filter(|v| delta.apply(v, &zero).iter().any(|c| !c.is_zero()))
        .map(|v| v.to_string())
        .collect();
    let mut ech = Echelon::new();
    for v in &vectors {
        let row: SparseRow = v
            .coordinates(&delta.cols, &zero)
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .collect();
        ech.insert(row);
    }
    KernelBasisCheck {
        n,
        listed: vectors.len(),
        kernel_dim: delta.matrix.ncols() - delta.rank(),
        outside_kernel,
        rank: ech.rank(),
    }
}
