//! Hochschild cohomology from the cochain complex Hom_{A^e}(R•, A).
//!
//! A cochain in degree n is determined by its values on the generators
//! p^n_{i,j}, each in e_i A e_{i+n}. Coordinates use the basis β^{n,k}_{l,i,j}
//! sending p^n_{i,j} to e_i x_l^{4k+t} (t = n mod 4) and every other
//! generator to zero. The identifications between different (l, k) labels
//! are resolved through the algebra's normal form, so each
//! [`HomBasisIndex`] names exactly one basis vector.

mod kernel_basis;
mod oracle;

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{
    hom_space_basis, letter, multiply_paths, normalize_power, AlgebraElement, AlgebraParams,
    BasisPath, VertexId,
};
use crate::linalg::Matrix;
use crate::resolution::{DifferentialTable, GenIndex, Resolution};
use crate::scalars::{Scalar, ScalarError};

pub use kernel_basis::{check_kernel_basis, listed_kernel_basis, KernelBasisCheck};
pub use oracle::{hh_oracle, hom_dim_oracle, ker_dim_oracle};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CohomologyError {
    #[error("cochain of degree {vector} evaluated on a generator of degree {generator}")]
    DegreeMismatch { vector: u32, generator: u32 },
    #[error("kernel-dimension index {0} is below -1")]
    IndexBelowRange(i64),
    #[error(transparent)]
    Params(#[from] ScalarError),
}

/// Canonical label of a basis cochain β^{n,k}_{l,i,j}.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HomBasisIndex {
    pub n: u32,
    pub i: VertexId,
    pub j: u32,
    pub k: u32,
    pub l: u8,
}

impl HomBasisIndex {
    fn from_path(n: u32, i: VertexId, j: u32, path: &BasisPath) -> Self {
        let residue = n % 4;
        HomBasisIndex {
            n,
            i,
            j,
            k: (path.power() - residue) / 4,
            l: path.letter(),
        }
    }

    /// The value e_i x_l^{4k+t} on p^n_{i,j}.
    pub fn value(&self, params: &AlgebraParams) -> BasisPath {
        let power = 4 * self.k + self.n % 4;
        let (_, path) =
            normalize_power(self.i, self.l, power, params).expect("basis index inside the algebra");
        path
    }

    pub fn generator(&self) -> GenIndex {
        GenIndex {
            n: self.n,
            i: self.i,
            j: self.j,
        }
    }
}

impl fmt::Display for HomBasisIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "β^({},{})_({},{},{})",
            self.n, self.k, self.l, self.i, self.j
        )
    }
}

/// Ordered basis of (R^n)^*: by i, then j, then the order of e_i A e_{i+n}.
pub fn hom_basis(n: u32, params: &AlgebraParams) -> Vec<HomBasisIndex> {
    let mut out = Vec::new();
    for i in VertexId::all() {
        let paths = hom_space_basis(i, i.shift(n as i64), params);
        for j in 0..=n {
            out.extend(paths.iter().map(|p| HomBasisIndex::from_path(n, i, j, p)));
        }
    }
    out
}

/// A cochain in β-coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomVector {
    n: u32,
    coeffs: BTreeMap<HomBasisIndex, Scalar>,
}

impl HomVector {
    pub fn zero(n: u32) -> Self {
        HomVector {
            n,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn unit(index: HomBasisIndex, params: &AlgebraParams) -> Self {
        let mut v = HomVector::zero(index.n);
        v.add(index, params.spec.one());
        v
    }

    pub fn degree(&self) -> u32 {
        self.n
    }

    pub fn coeffs(&self) -> impl Iterator<Item = (&HomBasisIndex, &Scalar)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&mut self, index: HomBasisIndex, c: Scalar) {
        assert_eq!(index.n, self.n, "index degree");
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(index).or_insert_with(|| c.zero_like());
        *slot = &*slot + &c;
        if slot.is_zero() {
            self.coeffs.remove(&index);
        }
    }

    /// Adds `c * β^{n,k}_{l,i,j}` for arbitrary labels, with l read mod 2,
    /// i mod 4, and the β-identifications applied.
    pub fn add_beta(&mut self, c: Scalar, l: i64, i: i64, j: u32, k: u32, params: &AlgebraParams) {
        let vertex = VertexId::new(i);
        let power = 4 * k + self.n % 4;
        let (scale, path) =
            normalize_power(vertex, letter(l), power, params).expect("β label beyond the socle");
        let index = HomBasisIndex::from_path(self.n, vertex, j, &path);
        self.add(index, &c * &scale);
    }

    /// Dense coordinates in the order of `basis`.
    pub fn coordinates(&self, basis: &[HomBasisIndex], zero: &Scalar) -> Vec<Scalar> {
        basis
            .iter()
            .map(|b| self.coeffs.get(b).cloned().unwrap_or_else(|| zero.clone()))
            .collect()
    }
}

impl fmt::Display for HomVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (n, (b, c)) in self.coeffs.iter().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}*{b}")?;
        }
        Ok(())
    }
}

/// The value of a cochain on a generator.
pub fn evaluate_hom(
    v: &HomVector,
    g: &GenIndex,
    params: &AlgebraParams,
) -> Result<AlgebraElement, CohomologyError> {
    if v.n != g.n {
        return Err(CohomologyError::DegreeMismatch {
            vector: v.n,
            generator: g.n,
        });
    }
    let mut out = AlgebraElement::zero();
    for (index, c) in v.coeffs() {
        if index.i == g.i && index.j == g.j {
            out.add_term(index.value(params), c.clone());
        }
    }
    Ok(out)
}

/// Matrix of δ^n : (R^n)^* → (R^{n+1})^*, φ ↦ φ ∘ ∂^{n+1}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomMatrix {
    pub n: u32,
    pub rows: Vec<HomBasisIndex>,
    pub cols: Vec<HomBasisIndex>,
    pub matrix: Matrix,
}

impl HomMatrix {
    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    /// δ^n applied to a degree-n cochain, as coordinates in the row basis.
    pub fn apply(&self, v: &HomVector, zero: &Scalar) -> Vec<Scalar> {
        self.matrix.mul_vec(&v.coordinates(&self.cols, zero), zero)
    }
}

pub fn rank(m: &HomMatrix) -> usize {
    m.rank()
}

/// Builds δ^n from the table of ∂^{n+1}.
pub fn delta_matrix_from(next: &DifferentialTable, params: &AlgebraParams) -> HomMatrix {
    let n = next.degree() - 1;
    let rows = hom_basis(n + 1, params);
    let cols = hom_basis(n, params);
    let row_pos: BTreeMap<HomBasisIndex, usize> =
        rows.iter().enumerate().map(|(r, b)| (*b, r)).collect();
    // columns grouped by the generator they are supported on
    let mut by_generator: BTreeMap<(VertexId, u32), Vec<(usize, BasisPath)>> = BTreeMap::new();
    for (c, b) in cols.iter().enumerate() {
        by_generator
            .entry((b.i, b.j))
            .or_default()
            .push((c, b.value(params)));
    }
    let zero = params.spec.zero();
    let mut matrix = Matrix::zeros(rows.len(), cols.len(), &zero);
    for (g, terms) in next.rows() {
        for term in terms {
            let Some(columns) = by_generator.get(&(term.target.i, term.target.j)) else {
                continue;
            };
            for (col, value) in columns {
                let Some((c1, lv)) = multiply_paths(&term.left, value, params) else {
                    continue;
                };
                let Some((c2, path)) = multiply_paths(&lv, &term.right, params) else {
                    continue;
                };
                let index = HomBasisIndex::from_path(n + 1, g.i, g.j, &path);
                let row = row_pos[&index];
                matrix.add_to(row, *col, &(&(&term.coeff * &c1) * &c2));
            }
        }
    }
    HomMatrix {
        n,
        rows,
        cols,
        matrix,
    }
}

pub fn delta_matrix(n: u32, params: &AlgebraParams) -> HomMatrix {
    delta_matrix_from(&crate::resolution::differential(n + 1, params), params)
}

/// Ranks and dimensions of the cochain complex in degrees 0..=nmax.
#[derive(Clone, Debug)]
pub struct CochainComplex {
    pub hom_dims: Vec<usize>,
    pub ranks: Vec<usize>,
}

impl CochainComplex {
    pub fn compute(res: &Resolution, nmax: u32) -> Self {
        assert!(res.max_degree() > nmax, "resolution too short");
        let params = res.params();
        let per_degree: Vec<(usize, usize)> = (0..=nmax)
            .into_par_iter()
            .map(|n| {
                let m = delta_matrix_from(res.table(n + 1), params);
                (m.cols.len(), m.rank())
            })
            .collect();
        CochainComplex {
            hom_dims: per_degree.iter().map(|d| d.0).collect(),
            ranks: per_degree.iter().map(|d| d.1).collect(),
        }
    }

    pub fn ker_dim(&self, n: usize) -> usize {
        self.hom_dims[n] - self.ranks[n]
    }

    pub fn hh_dim(&self, n: usize) -> usize {
        let incoming = if n == 0 { 0 } else { self.ranks[n - 1] };
        self.ker_dim(n) - incoming
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParamsEcho {
    #[serde(rename = "T")]
    pub t: u32,
    pub field: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub p: Option<u64>,
    pub q: Vec<String>,
    pub char_divides: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeRecord {
    pub n: u32,
    pub hom_dim: u64,
    pub ker_dim: u64,
    pub rank: u64,
    pub hh: u64,
    pub hh_oracle: u64,
    pub ker_oracle: u64,
    pub hom_oracle: u64,
    #[serde(rename = "match")]
    pub matches: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohomologyReport {
    pub params: ParamsEcho,
    pub degrees: Vec<DegreeRecord>,
    pub all_match: bool,
}

impl CohomologyReport {
    pub fn hh_dims(&self) -> Vec<u64> {
        self.degrees.iter().map(|d| d.hh).collect()
    }
}

pub fn params_echo(params: &AlgebraParams) -> ParamsEcho {
    let spec = &params.spec;
    ParamsEcho {
        t: params.t,
        field: spec.backend().name().to_string(),
        p: spec.backend().prime(),
        q: spec.params().iter().map(|q| q.to_string()).collect(),
        char_divides: char_branch(params),
    }
}

/// Whether the characteristic divides 2T+1.
pub fn char_branch(params: &AlgebraParams) -> bool {
    params.spec.char_divides(2 * params.t as u64 + 1)
}

/// HH^n(A) for 0 ≤ n ≤ nmax, alongside the closed forms.
pub fn hh_dimensions(
    nmax: u32,
    params: &AlgebraParams,
) -> Result<CohomologyReport, CohomologyError> {
    crate::scalars::FieldSpec::new(params.spec.backend(), params.spec.params().clone())?;
    let res = Resolution::build(params, nmax + 1);
    let complex = CochainComplex::compute(&res, nmax);
    Ok(report_from(&complex, params, nmax))
}

pub fn report_from(
    complex: &CochainComplex,
    params: &AlgebraParams,
    nmax: u32,
) -> CohomologyReport {
    let cd = char_branch(params);
    let degrees: Vec<DegreeRecord> = (0..=nmax)
        .map(|n| {
            let nu = n as usize;
            let hom_dim = complex.hom_dims[nu] as u64;
            let ker_dim = complex.ker_dim(nu) as u64;
            let hh = complex.hh_dim(nu) as u64;
            let hh_o = hh_oracle(n, params.t, cd);
            let ker_o = ker_dim_oracle(n as i64 - 1, params.t, cd).expect("index ≥ -1");
            let hom_o = hom_dim_oracle(n, params.t);
            DegreeRecord {
                n,
                hom_dim,
                ker_dim,
                rank: complex.ranks[nu] as u64,
                hh,
                hh_oracle: hh_o,
                ker_oracle: ker_o,
                hom_oracle: hom_o,
                matches: hh == hh_o && ker_dim == ker_o && hom_dim == hom_o,
            }
        })
        .collect();
    CohomologyReport {
        params: params_echo(params),
        all_match: degrees.iter().all(|d| d.matches),
        degrees,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::FieldSpec;

    fn params(t: u32) -> AlgebraParams {
        AlgebraParams::new(t, FieldSpec::rational([2, 1, 1, 1]).unwrap())
    }

    #[test]
    fn basis_sizes() {
        assert_eq!(hom_basis(0, &params(0)).len(), 4);
        assert!(hom_basis(3, &params(0)).is_empty());
        assert_eq!(hom_basis(2, &params(1)).len(), 36);
        for t in 0..3 {
            for n in 0..9 {
                assert_eq!(hom_basis(n, &params(t)).len() as u64, hom_dim_oracle(n, t));
            }
        }
    }

    #[test]
    fn evaluation() {
        let p = params(1);
        let b0 = hom_basis(0, &p)[0];
        let v = HomVector::unit(b0, &p);
        let at = |i| evaluate_hom(&v, &GenIndex::new(0, i, 0), &p).unwrap();
        assert_eq!(
            at(0),
            AlgebraElement::from_path(BasisPath::idempotent(VertexId::new(0)), p.spec.one())
        );
        assert!(at(1).is_zero());
        let socle = hom_basis(2, &p)
            .into_iter()
            .find(|b| b.k == p.t && b.i == VertexId::new(3) && b.j == 1)
            .unwrap();
        let v = HomVector::unit(socle, &p);
        let value = evaluate_hom(&v, &GenIndex::new(2, 3, 1), &p).unwrap();
        assert_eq!(
            value,
            AlgebraElement::from_path(BasisPath::socle(VertexId::new(3), &p), p.spec.one())
        );
        assert_eq!(
            evaluate_hom(&v, &GenIndex::new(1, 3, 1), &p),
            Err(CohomologyError::DegreeMismatch {
                vector: 2,
                generator: 1
            })
        );
    }

    #[test]
    fn beta_identifications() {
        let p = params(1);
        let mut a = HomVector::zero(4);
        a.add_beta(p.spec.one(), 1, 2, 0, 0, &p);
        let mut b = HomVector::zero(4);
        b.add_beta(p.spec.one(), 0, 2, 0, 0, &p);
        assert_eq!(a, b);
        // β^{2,T}_{i+1,i,j} = -q_i β^{2,T}_{i,i,j}
        for i in 0..4 {
            let mut lhs = HomVector::zero(2);
            lhs.add_beta(p.spec.one(), i + 1, i, 1, p.t, &p);
            let mut rhs = HomVector::zero(2);
            rhs.add_beta(-p.spec.q(i), i, i, 1, p.t, &p);
            assert_eq!(lhs, rhs, "vertex {i}");
        }
    }

    #[test]
    fn first_coboundary_t0() {
        let p = params(0);
        let d0 = delta_matrix(0, &p);
        assert_eq!((d0.matrix.nrows(), d0.matrix.ncols()), (16, 4));
        assert_eq!(d0.rank(), 3);
        let d2 = delta_matrix(2, &p);
        assert_eq!((d2.matrix.nrows(), d2.matrix.ncols()), (0, 12));
        assert_eq!(d2.rank(), 0);
    }

    #[test]
    fn small_report() {
        let report = hh_dimensions(4, &params(0)).unwrap();
        assert_eq!(report.hh_dims(), [1, 2, 1, 0, 0]);
        assert!(report.all_match);
    }
}
