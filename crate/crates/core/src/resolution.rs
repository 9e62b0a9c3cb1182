//! The minimal projective bimodule resolution (R•, ∂) of A.
//!
//! R^n is free on generators p^n_{i,j} (0 ≤ i ≤ 3, 0 ≤ j ≤ n), each the
//! tensor `o(g) ⊗ t(g)` of the endpoints of a uniform element g^n_{i,j} of
//! KΓ. The differentials are transcribed term by term; nothing here
//! corrects a formula, the checks only report.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{
    letter, multiply_paths, normalize_power, normalize_word, AlgebraElement, AlgebraParams,
    BasisPath, VertexId, Word,
};
use crate::scalars::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ResolutionError {
    #[error("generator index j = {j} out of range for degree {n}")]
    IndexOutOfRange { n: u32, j: u32 },
    #[error("the linearity check only applies at T = 0 (got T = {0})")]
    NotKoszul(u32),
    #[error("degree {0} is below the minimum {1} for this check")]
    DegreeTooSmall(u32, u32),
}

/// The generator p^n_{i,j}.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GenIndex {
    pub n: u32,
    pub i: VertexId,
    pub j: u32,
}

impl GenIndex {
    pub fn new(n: u32, i: i64, j: u32) -> Self {
        GenIndex {
            n,
            i: VertexId::new(i),
            j,
        }
    }

    pub fn origin(&self) -> VertexId {
        self.i
    }

    pub fn terminus(&self) -> VertexId {
        self.i.shift(self.n as i64)
    }
}

impl fmt::Display for GenIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "p^{}_({},{})", self.n, self.i, self.j)
    }
}

/// The 4(n+1) generators of R^n ordered by i then j.
pub fn gens(n: u32) -> Vec<GenIndex> {
    VertexId::all()
        .flat_map(|i| (0..=n).map(move |j| GenIndex { n, i, j }))
        .collect()
}

/// Element of the path algebra KΓ (no relations applied).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct KGammaElement {
    terms: BTreeMap<Word, Scalar>,
}

impl KGammaElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_word(w: Word, c: Scalar) -> Self {
        let mut out = Self::zero();
        out.add_term(w, c);
        out
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Scalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, w: &Word) -> Option<&Scalar> {
        self.terms.get(w)
    }

    pub fn add_term(&mut self, w: Word, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(existing) => {
                let sum = &*existing + &c;
                if sum.is_zero() {
                    self.terms.remove(&w);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(w, c);
            }
        }
    }

    /// `c * self * x_l^k`.
    fn append_scaled(&self, c: &Scalar, l: i64, k: u32, out: &mut KGammaElement) {
        for (w, coeff) in &self.terms {
            out.add_term(w.clone().then(letter(l), k), coeff * c);
        }
    }

    /// `self * w`; words whose endpoints do not meet contribute zero.
    pub fn right_mul(&self, w: &Word, c: &Scalar) -> KGammaElement {
        let mut out = KGammaElement::zero();
        for (word, coeff) in &self.terms {
            if let Some(cat) = word.concat(w) {
                out.add_term(cat, coeff * c);
            }
        }
        out
    }

    pub fn add(&mut self, other: &KGammaElement) {
        for (w, c) in &other.terms {
            self.add_term(w.clone(), c.clone());
        }
    }

    /// Image in A.
    pub fn to_algebra(&self, params: &AlgebraParams) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for (w, c) in &self.terms {
            out.add_scaled(&normalize_word(w, params), c);
        }
        out
    }
}

impl fmt::Display for KGammaElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (w, c)) in self.terms.iter().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}*{w}")?;
        }
        Ok(())
    }
}

/// All g^k_{i,j} for k ≤ n at a fixed origin vertex, indexed `[k][j]`.
pub fn expand_levels(n: u32, i: VertexId, params: &AlgebraParams) -> Vec<Vec<KGammaElement>> {
    let spec = &params.spec;
    let long = 4 * params.t + 1;
    let one = spec.one();
    let iv = i.value();
    let s = |u: i64, v: i64| spec.s_product(u as u32, v);

    let mut levels = vec![vec![KGammaElement::from_word(
        Word::trivial(i),
        one.clone(),
    )]];
    for deg in 1..=n as i64 {
        let prev = &levels[deg as usize - 1];
        let mut level = Vec::with_capacity(deg as usize + 1);
        for j in 0..=deg {
            let mut g = KGammaElement::zero();
            let ju = j as usize;
            if deg % 2 == 1 {
                let m = (deg - 1) / 2;
                if j == 0 {
                    prev[0].append_scaled(&one, iv, 1, &mut g);
                } else if j <= m {
                    prev[ju - 1].append_scaled(&s(2 * m - j + 1, iv + j - 1), iv + 1, long, &mut g);
                    prev[ju].append_scaled(&one, iv, 1, &mut g);
                } else if j <= 2 * m {
                    prev[ju - 1].append_scaled(&s(2 * m - j + 1, iv + j - 1), iv + 1, 1, &mut g);
                    prev[ju].append_scaled(&one, iv, long, &mut g);
                } else {
                    prev[2 * m as usize].append_scaled(&one, iv + 1, 1, &mut g);
                }
            } else {
                let m = deg / 2;
                if j == 0 {
                    prev[0].append_scaled(&one, iv + 1, 1, &mut g);
                } else if j < m {
                    prev[ju - 1].append_scaled(&s(2 * m - j, iv + j - 1), iv, long, &mut g);
                    prev[ju].append_scaled(&one, iv + 1, 1, &mut g);
                } else if j == m {
                    prev[ju - 1].append_scaled(&s(m, iv + m - 1), iv, long, &mut g);
                    prev[ju].append_scaled(&one, iv + 1, long, &mut g);
                } else if j < 2 * m {
                    prev[ju - 1].append_scaled(&s(2 * m - j, iv + j - 1), iv, 1, &mut g);
                    prev[ju].append_scaled(&one, iv + 1, long, &mut g);
                } else {
                    prev[(2 * m - 1) as usize].append_scaled(&one, iv, 1, &mut g);
                }
            }
            level.push(g);
        }
        levels.push(level);
    }
    levels
}

/// The uniform element g^n_{i,j} of KΓ.
pub fn expand_g(
    n: u32,
    i: i64,
    j: u32,
    params: &AlgebraParams,
) -> Result<KGammaElement, ResolutionError> {
    if j > n {
        return Err(ResolutionError::IndexOutOfRange { n, j });
    }
    let mut levels = expand_levels(n, VertexId::new(i), params);
    Ok(levels.swap_remove(n as usize).swap_remove(j as usize))
}

/// One summand `coeff * left ⊗ p_target ⊗ right` of a differential row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BimoduleTerm {
    pub coeff: Scalar,
    pub left: BasisPath,
    pub target: GenIndex,
    pub right: BasisPath,
}

impl BimoduleTerm {
    fn sort_key(&self) -> (GenIndex, BasisPath, BasisPath) {
        (self.target, self.left, self.right)
    }
}

impl fmt::Display for BimoduleTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} * {} {} {}",
            self.coeff, self.left, self.target, self.right
        )
    }
}

/// ∂^n on the generators of R^n. Degree 0 is the multiplication map
/// R^0 → A and carries no rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DifferentialTable {
    n: u32,
    rows: BTreeMap<GenIndex, Vec<BimoduleTerm>>,
}

impl DifferentialTable {
    /// Assembles a table from explicit rows, for inspection tools and tests.
    pub fn from_rows(n: u32, rows: BTreeMap<GenIndex, Vec<BimoduleTerm>>) -> Self {
        DifferentialTable { n, rows }
    }

    pub fn degree(&self) -> u32 {
        self.n
    }

    pub fn is_multiplication_map(&self) -> bool {
        self.n == 0
    }

    pub fn row(&self, g: &GenIndex) -> &[BimoduleTerm] {
        self.rows.get(g).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn rows(&self) -> impl Iterator<Item = (&GenIndex, &Vec<BimoduleTerm>)> {
        self.rows.iter()
    }

    pub fn terms(&self) -> impl Iterator<Item = &BimoduleTerm> {
        self.rows.values().flatten()
    }
}

/// Collects the terms of one row, resolving path endpoints and merging
/// duplicate (left, target, right) triples.
struct RowBuilder<'a> {
    params: &'a AlgebraParams,
    origin: VertexId,
    target_degree: u32,
    terms: BTreeMap<(GenIndex, BasisPath, BasisPath), Scalar>,
}

impl<'a> RowBuilder<'a> {
    fn new(params: &'a AlgebraParams, origin: VertexId, target_degree: u32) -> Self {
        RowBuilder {
            params,
            origin,
            target_degree,
            terms: BTreeMap::new(),
        }
    }

    /// `coeff * x_{left_l}^{left_k} p_{ti, tj} x_{right_l}^{right_k}`.
    fn push(
        &mut self,
        coeff: Scalar,
        (left_l, left_k): (i64, u32),
        ti: i64,
        tj: i64,
        (right_l, right_k): (i64, u32),
    ) {
        let target = GenIndex::new(self.target_degree, ti, tj as u32);
        debug_assert_eq!(
            self.origin.shift(left_k as i64),
            target.i,
            "left path misses target"
        );
        let (cl, left) = normalize_power(self.origin, letter(left_l), left_k, self.params)
            .expect("left path within socle length");
        let (cr, right) = normalize_power(target.terminus(), letter(right_l), right_k, self.params)
            .expect("right path within socle length");
        let c = &(&coeff * &cl) * &cr;
        let key = (target, left, right);
        let entry = self
            .terms
            .entry(key)
            .or_insert_with(|| self.params.spec.zero());
        *entry = &*entry + &c;
    }

    fn finish(self) -> Vec<BimoduleTerm> {
        let mut out: Vec<BimoduleTerm> = self
            .terms
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|((target, left, right), coeff)| BimoduleTerm {
                coeff,
                left,
                target,
                right,
            })
            .collect();
        out.sort_by_key(BimoduleTerm::sort_key);
        out
    }
}

fn odd_row(params: &AlgebraParams, i: i64, j: i64, m: i64) -> Vec<BimoduleTerm> {
    let spec = &params.spec;
    let long = 4 * params.t + 1;
    let s = |u: i64, v: i64| spec.s_product(u as u32, v);
    let one = spec.one();
    let minus = -&one;
    let mut row = RowBuilder::new(params, VertexId::new(i), (2 * m) as u32);
    let e = |l: i64| (l, 0u32);
    if j == 0 {
        row.push(one.clone(), e(0), i, 0, (i, 1));
        row.push(minus.clone(), (i, 1), i + 1, 0, e(0));
    } else if j < m + 1 {
        row.push(s(2 * m - j + 1, i + j - 1), e(0), i, j - 1, (i + 1, long));
        row.push(one.clone(), e(0), i, j, (i, 1));
        row.push(-&s(j, i), (i, 1), i + 1, j, e(0));
        row.push(minus.clone(), (i + 1, long), i + 1, j - 1, e(0));
    } else if j < 2 * m + 1 {
        row.push(s(2 * m - j + 1, i + j - 1), e(0), i, j - 1, (i + 1, 1));
        row.push(one.clone(), e(0), i, j, (i, long));
        row.push(-&s(j, i), (i, long), i + 1, j, e(0));
        row.push(minus.clone(), (i + 1, 1), i + 1, j - 1, e(0));
    } else {
        row.push(one.clone(), e(0), i, 2 * m, (i + 1, 1));
        row.push(minus, (i + 1, 1), i + 1, 2 * m, e(0));
    }
    row.finish()
}

fn even_row(params: &AlgebraParams, i: i64, j: i64, m: i64) -> Vec<BimoduleTerm> {
    let spec = &params.spec;
    let t = params.t;
    let long = 4 * t + 1;
    let s = |u: i64, v: i64| spec.s_product(u as u32, v);
    let one = spec.one();
    let mut row = RowBuilder::new(params, VertexId::new(i), (2 * m - 1) as u32);
    let e = |l: i64| (l, 0u32);
    if j == 0 {
        row.push(one.clone(), e(0), i, 0, (i + 1, 1));
        row.push(one.clone(), (i, 1), i + 1, 0, e(0));
    } else if j < m {
        row.push(s(2 * m - j, i + j - 1), e(0), i, j - 1, (i, long));
        row.push(one.clone(), e(0), i, j, (i + 1, 1));
        row.push(s(j, i), (i, 1), i + 1, j, e(0));
        row.push(one.clone(), (i + 1, long), i + 1, j - 1, e(0));
    } else if j == m {
        for k in 0..=t {
            let (lo, hi) = (4 * k, 4 * t - 4 * k);
            row.push(s(m, i + m - 1), (i, lo), i, m - 1, (i, hi + 1));
            row.push(s(m, i), (i, lo + 1), i + 1, m, (i, hi));
            row.push(one.clone(), (i + 1, lo), i, m, (i + 1, hi + 1));
            row.push(one.clone(), (i + 1, lo + 1), i + 1, m - 1, (i + 1, hi));
        }
        let twisted = &s(m, i + 3).inv() * &s(m, i + m + 2);
        for k in 0..t {
            let (lo, hi) = (4 * k + 2, 4 * t - 4 * k - 2);
            row.push(s(m, i), (i, lo), i + 2, m - 1, (i, hi + 1));
            row.push(s(m, i + m - 1), (i, lo + 1), i + 3, m, (i, hi));
            row.push(twisted.clone(), (i + 1, lo), i + 2, m, (i + 1, hi + 1));
            row.push(twisted.clone(), (i + 1, lo + 1), i + 3, m - 1, (i + 1, hi));
        }
    } else if j < 2 * m {
        row.push(s(2 * m - j, i + j - 1), e(0), i, j - 1, (i, 1));
        row.push(one.clone(), e(0), i, j, (i + 1, long));
        row.push(s(j, i), (i, long), i + 1, j, e(0));
        row.push(one.clone(), (i + 1, 1), i + 1, j - 1, e(0));
    } else {
        row.push(one.clone(), e(0), i, 2 * m - 1, (i, 1));
        row.push(one, (i + 1, 1), i + 1, 2 * m - 1, e(0));
    }
    row.finish()
}

/// The table of ∂^n.
pub fn differential(n: u32, params: &AlgebraParams) -> DifferentialTable {
    let mut rows = BTreeMap::new();
    if n == 0 {
        return DifferentialTable { n, rows };
    }
    for g in gens(n) {
        let (i, j) = (g.i.value(), g.j as i64);
        let row = if n % 2 == 1 {
            odd_row(params, i, j, (n as i64 - 1) / 2)
        } else {
            even_row(params, i, j, n as i64 / 2)
        };
        rows.insert(g, row);
    }
    DifferentialTable { n, rows }
}

/// ∂^0, …, ∂^nmax, built in parallel.
#[derive(Clone, Debug)]
pub struct Resolution {
    params: AlgebraParams,
    tables: Vec<DifferentialTable>,
}

impl Resolution {
    pub fn build(params: &AlgebraParams, nmax: u32) -> Self {
        let tables = (0..=nmax)
            .into_par_iter()
            .map(|n| differential(n, params))
            .collect();
        Resolution {
            params: params.clone(),
            tables,
        }
    }

    pub fn params(&self) -> &AlgebraParams {
        &self.params
    }

    pub fn max_degree(&self) -> u32 {
        self.tables.len() as u32 - 1
    }

    pub fn table(&self, n: u32) -> &DifferentialTable {
        &self.tables[n as usize]
    }

    pub fn tables(&self) -> &[DifferentialTable] {
        &self.tables
    }
}

/// Element of the free bimodule on degree-n generators, in coordinates
/// (left path, generator, right path).
pub type BimoduleElement = BTreeMap<(BasisPath, GenIndex, BasisPath), Scalar>;

/// ∂^n applied to `u p v` for a single degree-n generator term.
fn apply_term(
    term: &BimoduleTerm,
    table: &DifferentialTable,
    params: &AlgebraParams,
    out: &mut BimoduleElement,
) {
    for inner in table.row(&term.target) {
        let Some((cl, left)) = multiply_paths(&term.left, &inner.left, params) else {
            continue;
        };
        let Some((cr, right)) = multiply_paths(&inner.right, &term.right, params) else {
            continue;
        };
        let c = &(&(&term.coeff * &inner.coeff) * &cl) * &cr;
        let slot = out
            .entry((left, inner.target, right))
            .or_insert_with(|| params.spec.zero());
        *slot = &*slot + &c;
    }
}

/// A nonzero coefficient left over in ∂^n ∂^{n+1}(p).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Residual {
    /// Degree of the outer differential's source generator.
    pub generator: GenIndex,
    pub terms: Vec<String>,
}

impl fmt::Display for Residual {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "∂∂({}) = {}", self.generator, self.terms.join(" + "))
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ComplexReport {
    /// Number of generators checked per composite ∂^n ∂^{n+1}, indexed by n.
    pub checked: Vec<(u32, usize)>,
    pub residuals: Vec<Residual>,
}

impl ComplexReport {
    pub fn passed(&self) -> bool {
        self.residuals.is_empty()
    }
}

/// ∂^{n} ∂^{n+1}(p) for one generator p of degree n+1 ≥ 2.
pub fn compose(
    outer: &DifferentialTable,
    inner: &DifferentialTable,
    g: &GenIndex,
    params: &AlgebraParams,
) -> BimoduleElement {
    let mut acc = BimoduleElement::new();
    for term in outer.row(g) {
        apply_term(term, inner, params, &mut acc);
    }
    acc.retain(|_, c| !c.is_zero());
    acc
}

/// ∂^0 ∂^1(p) in A: each term `u p^0 v` goes to `u v`.
pub fn augment(table: &DifferentialTable, g: &GenIndex, params: &AlgebraParams) -> AlgebraElement {
    let mut out = AlgebraElement::zero();
    for term in table.row(g) {
        if let Some((c, path)) = multiply_paths(&term.left, &term.right, params) {
            out.add_term(path, &term.coeff * &c);
        }
    }
    out
}

fn check_degree(res: &Resolution, n: u32) -> (usize, Vec<Residual>) {
    let params = res.params();
    let outer = res.table(n + 1);
    let mut residuals = Vec::new();
    let generators = gens(n + 1);
    for g in &generators {
        if n == 0 {
            let value = augment(outer, g, params);
            if !value.is_zero() {
                residuals.push(Residual {
                    generator: *g,
                    terms: value.terms().map(|(p, c)| format!("{c}*{p}")).collect(),
                });
            }
        } else {
            let value = compose(outer, res.table(n), g, params);
            if !value.is_empty() {
                residuals.push(Residual {
                    generator: *g,
                    terms: value
                        .iter()
                        .map(|((l, target, r), c)| format!("{c}*{l} {target} {r}"))
                        .collect(),
                });
            }
        }
    }
    (generators.len(), residuals)
}

/// Checks ∂^n ∂^{n+1} = 0 for 0 ≤ n ≤ nmax − 1 (n = 0 being ∂^0 ∂^1 = 0 in A).
pub fn verify_complex(nmax: u32, params: &AlgebraParams) -> ComplexReport {
    let res = Resolution::build(params, nmax.max(1));
    verify_resolution(&res, nmax)
}

pub fn verify_resolution(res: &Resolution, nmax: u32) -> ComplexReport {
    let per_degree: Vec<(u32, usize, Vec<Residual>)> = (0..nmax.min(res.max_degree()))
        .into_par_iter()
        .map(|n| {
            let (count, residuals) = check_degree(res, n);
            (n, count, residuals)
        })
        .collect();
    let mut report = ComplexReport::default();
    for (n, count, residuals) in per_degree {
        report.checked.push((n, count));
        report.residuals.extend(residuals);
    }
    report
}

/// Every term carries a path of positive length on at least one side.
pub fn table_is_minimal(table: &DifferentialTable) -> bool {
    table
        .terms()
        .all(|t| !t.left.is_empty() || !t.right.is_empty())
}

pub fn minimality_check(nmax: u32, params: &AlgebraParams) -> bool {
    (1..=nmax)
        .into_par_iter()
        .all(|n| table_is_minimal(&differential(n, params)))
}

/// Every term has one arrow on exactly one side.
pub fn table_is_linear(table: &DifferentialTable) -> bool {
    table.terms().all(|t| t.left.len() + t.right.len() == 1)
}

/// Linear-resolution witness, only meaningful at T = 0.
pub fn linearity_check(params: &AlgebraParams, nmax: u32) -> Result<bool, ResolutionError> {
    if params.t != 0 {
        return Err(ResolutionError::NotKoszul(params.t));
    }
    Ok((1..=nmax).all(|n| table_is_linear(&differential(n, params))))
}

/// Whether every g^n_{i,j} maps to zero in A (i.e. lies in the ideal).
pub fn g_in_ideal_check(n: u32, params: &AlgebraParams) -> Result<bool, ResolutionError> {
    if n < 2 {
        return Err(ResolutionError::DegreeTooSmall(n, 2));
    }
    Ok(VertexId::all().all(|i| {
        expand_levels(n, i, params)[n as usize]
            .iter()
            .all(|g| g.to_algebra(params).is_zero())
    }))
}

/// Rebuilds g^n_{i,j} from the row of ∂^n: the terms with a trivial left
/// path, read as `c * g^{n-1}_{target} * right` in KΓ.
pub fn reconstruct_from_row(g: &GenIndex, params: &AlgebraParams) -> KGammaElement {
    let table = differential(g.n, params);
    let lower: Vec<Vec<KGammaElement>> = VertexId::all()
        .map(|i| expand_levels(g.n - 1, i, params).swap_remove(g.n as usize - 1))
        .collect();
    let mut out = KGammaElement::zero();
    for term in table.row(g) {
        if !term.left.is_trivial() {
            continue;
        }
        let source = &lower[term.target.i.index()][term.target.j as usize];
        out.add(&source.right_mul(&term.right.to_word(), &term.coeff));
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TargetRecord {
    pub i: u8,
    pub j: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermRecord {
    pub coeff: String,
    pub left: String,
    pub target: TargetRecord,
    pub right: String,
}

/// One generator row of a `resolution-dump`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RowRecord {
    pub degree: u32,
    pub i: u8,
    pub j: u32,
    pub terms: Vec<TermRecord>,
}

pub fn dump_table(table: &DifferentialTable) -> Vec<RowRecord> {
    table
        .rows()
        .map(|(g, terms)| RowRecord {
            degree: g.n,
            i: g.i.index() as u8,
            j: g.j,
            terms: terms
                .iter()
                .map(|t| TermRecord {
                    coeff: t.coeff.to_string(),
                    left: t.left.to_string(),
                    target: TargetRecord {
                        i: t.target.i.index() as u8,
                        j: t.target.j,
                    },
                    right: t.right.to_string(),
                })
                .collect(),
        })
        .collect()
}
