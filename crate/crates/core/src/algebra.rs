//! The algebra A_T(q0,q1,q2,q3): the cyclic double quiver on four vertices
//! modulo the mixed products `x_l x_{l+1}` and the socle relations
//! `e_i(q_i x_i^{4T+2} + x_{i+1}^{4T+2})`.
//!
//! Every nonzero path in A is a pure power `e_i x_l^k`, so elements are
//! stored over [`BasisPath`]s directly. The socle at each vertex is
//! represented by the letter-0 power `e_i x_0^{4T+2}`.

use std::collections::BTreeMap;
use std::fmt;

use crate::linalg::{rank_of_rows, SparseRow};
use crate::scalars::{FieldSpec, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraParams {
    pub t: u32,
    pub spec: FieldSpec,
}

impl AlgebraParams {
    pub fn new(t: u32, spec: FieldSpec) -> Self {
        AlgebraParams { t, spec }
    }

    /// Length of the longest nonzero path, 4T+2.
    pub fn socle_length(&self) -> u32 {
        4 * self.t + 2
    }
}

/// A vertex index, always reduced mod 4.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexId(u8);

impl VertexId {
    pub fn new(i: i64) -> Self {
        VertexId(i.rem_euclid(4) as u8)
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn value(self) -> i64 {
        self.0 as i64
    }

    pub fn shift(self, by: i64) -> Self {
        VertexId::new(self.value() + by)
    }

    pub fn all() -> impl Iterator<Item = VertexId> {
        (0..4).map(VertexId)
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Letter of `x_l`, reduced mod 2.
pub fn letter(l: i64) -> u8 {
    l.rem_euclid(2) as u8
}

/// A path in the quiver, stored as maximal runs of a single letter.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    start: VertexId,
    runs: Vec<(u8, u32)>,
}

impl Word {
    pub fn trivial(start: VertexId) -> Self {
        Word {
            start,
            runs: Vec::new(),
        }
    }

    /// `e_start x_l^k`.
    pub fn power(start: VertexId, l: i64, k: u32) -> Self {
        Word::trivial(start).then(letter(l), k)
    }

    /// The arrow a_{l,m}.
    pub fn arrow(l: i64, m: i64) -> Self {
        Word::power(VertexId::new(m), l, 1)
    }

    pub fn from_letters(start: VertexId, letters: &[u8]) -> Self {
        letters
            .iter()
            .fold(Word::trivial(start), |w, &l| w.then(l, 1))
    }

    /// Appends `x_l^k`, merging with the last run when the letter matches.
    pub fn then(mut self, l: u8, k: u32) -> Self {
        if k == 0 {
            return self;
        }
        match self.runs.last_mut() {
            Some((last, len)) if *last == l => *len += k,
            _ => self.runs.push((l, k)),
        }
        self
    }

    pub fn start(&self) -> VertexId {
        self.start
    }

    pub fn len(&self) -> u32 {
        self.runs.iter().map(|(_, k)| k).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.runs.is_empty()
    }

    pub fn end(&self) -> VertexId {
        self.start.shift(self.len() as i64)
    }

    pub fn runs(&self) -> &[(u8, u32)] {
        &self.runs
    }

    /// Concatenation; `None` when the endpoints do not meet.
    pub fn concat(&self, other: &Word) -> Option<Word> {
        if self.end() != other.start {
            return None;
        }
        Some(
            other
                .runs
                .iter()
                .fold(self.clone(), |w, &(l, k)| w.then(l, k)),
        )
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.start)?;
        for (l, k) in &self.runs {
            if *k == 1 {
                write!(f, "*x{l}")?;
            } else {
                write!(f, "*x{l}^{k}")?;
            }
        }
        Ok(())
    }
}

/// A canonical basis element `e_i x_l^k` of A. Field order gives the basis
/// order: start vertex, then power, then letter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BasisPath {
    start: VertexId,
    power: u32,
    letter: u8,
}

impl BasisPath {
    pub fn idempotent(i: VertexId) -> Self {
        BasisPath {
            start: i,
            power: 0,
            letter: 0,
        }
    }

    /// The socle representative `e_i x_0^{4T+2}`.
    pub fn socle(i: VertexId, params: &AlgebraParams) -> Self {
        BasisPath {
            start: i,
            power: params.socle_length(),
            letter: 0,
        }
    }

    /// `e_i x_l^k` for `k <= 4T+1`, where no rewriting is needed.
    pub fn short_power(i: VertexId, l: i64, k: u32, params: &AlgebraParams) -> Self {
        assert!(k < params.socle_length(), "power {k} needs the socle rule");
        if k == 0 {
            return BasisPath::idempotent(i);
        }
        BasisPath {
            start: i,
            power: k,
            letter: letter(l),
        }
    }

    pub fn start(&self) -> VertexId {
        self.start
    }

    pub fn end(&self) -> VertexId {
        self.start.shift(self.power as i64)
    }

    pub fn letter(&self) -> u8 {
        self.letter
    }

    pub fn power(&self) -> u32 {
        self.power
    }

    pub fn len(&self) -> u32 {
        self.power
    }

    pub fn is_empty(&self) -> bool {
        self.power == 0
    }

    pub fn is_trivial(&self) -> bool {
        self.power == 0
    }

    pub fn to_word(&self) -> Word {
        Word::power(self.start, self.letter as i64, self.power)
    }
}

impl fmt::Display for BasisPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.power == 0 {
            write!(f, "e{}", self.start)
        } else {
            write!(f, "e{}*x{}^{}", self.start, self.letter, self.power)
        }
    }
}

/// A finite linear combination of basis paths with nonzero coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AlgebraElement {
    terms: BTreeMap<BasisPath, Scalar>,
}

impl AlgebraElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_path(path: BasisPath, coeff: Scalar) -> Self {
        let mut out = Self::zero();
        out.add_term(path, coeff);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BasisPath, &Scalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, path: &BasisPath) -> Option<&Scalar> {
        self.terms.get(path)
    }

    pub fn add_term(&mut self, path: BasisPath, coeff: Scalar) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(&path) {
            Some(existing) => {
                let sum = &*existing + &coeff;
                if sum.is_zero() {
                    self.terms.remove(&path);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(path, coeff);
            }
        }
    }

    pub fn add_scaled(&mut self, other: &AlgebraElement, factor: &Scalar) {
        for (path, c) in &other.terms {
            self.add_term(*path, c * factor);
        }
    }

    pub fn scaled(&self, factor: &Scalar) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        out.add_scaled(self, factor);
        out
    }

    pub fn sub(&self, other: &AlgebraElement) -> AlgebraElement {
        let mut out = self.clone();
        for (path, c) in &other.terms {
            out.add_term(*path, -c);
        }
        out
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (path, c)) in self.terms.iter().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}*{path}")?;
        }
        Ok(())
    }
}

/// Scalar relating the letter-1 socle to the canonical one at vertex `i`:
/// `e_i x_1^{4T+2} = c * e_i x_0^{4T+2}` with `c = -q_i` for even `i` and
/// `c = -q_i^{-1}` for odd `i`.
pub fn socle_swap_scalar(i: VertexId, params: &AlgebraParams) -> Scalar {
    let q = params.spec.q(i.value());
    if i.value() % 2 == 0 {
        -q
    } else {
        -&q.inv()
    }
}

/// Image of a pure power `e_i x_l^k` in A as a (scalar, basis path) pair.
pub fn normalize_power(
    i: VertexId,
    l: u8,
    k: u32,
    params: &AlgebraParams,
) -> Option<(Scalar, BasisPath)> {
    let one = params.spec.one();
    let top = params.socle_length();
    if k == 0 {
        Some((one, BasisPath::idempotent(i)))
    } else if k < top {
        Some((
            one,
            BasisPath {
                start: i,
                power: k,
                letter: l,
            },
        ))
    } else if k == top {
        let coeff = if l == 0 {
            one
        } else {
            socle_swap_scalar(i, params)
        };
        Some((coeff, BasisPath::socle(i, params)))
    } else {
        None
    }
}

/// The image of a word of KΓ in A, in canonical form.
pub fn normalize_word(w: &Word, params: &AlgebraParams) -> AlgebraElement {
    match w.runs() {
        [] => AlgebraElement::from_path(BasisPath::idempotent(w.start), params.spec.one()),
        [(l, k)] => match normalize_power(w.start, *l, *k, params) {
            Some((c, path)) => AlgebraElement::from_path(path, c),
            None => AlgebraElement::zero(),
        },
        // a letter change contains x_l x_{l+1}
        _ => AlgebraElement::zero(),
    }
}

/// Product of two basis paths in A.
pub fn multiply_paths(
    a: &BasisPath,
    b: &BasisPath,
    params: &AlgebraParams,
) -> Option<(Scalar, BasisPath)> {
    if a.end() != b.start {
        return None;
    }
    if a.is_trivial() {
        return Some((params.spec.one(), *b));
    }
    if b.is_trivial() {
        return Some((params.spec.one(), *a));
    }
    if a.letter != b.letter {
        return None;
    }
    normalize_power(a.start, a.letter, a.power + b.power, params)
}

pub fn multiply(a: &AlgebraElement, b: &AlgebraElement, params: &AlgebraParams) -> AlgebraElement {
    let mut out = AlgebraElement::zero();
    for (pa, ca) in a.terms() {
        for (pb, cb) in b.terms() {
            if let Some((c, path)) = multiply_paths(pa, pb, params) {
                out.add_term(path, &(ca * cb) * &c);
            }
        }
    }
    out
}

/// Ordered basis of `e_i A e_j`: ascending power, letter 0 before 1, socle last.
pub fn hom_space_basis(i: VertexId, j: VertexId, params: &AlgebraParams) -> Vec<BasisPath> {
    let t = params.t;
    let residue = (j.value() - i.value()).rem_euclid(4) as u32;
    let mut out = Vec::new();
    match residue {
        0 => {
            out.push(BasisPath::idempotent(i));
            for k in 1..=t {
                for l in 0..2 {
                    out.push(BasisPath::short_power(i, l, 4 * k, params));
                }
            }
        }
        1 => {
            for k in 0..=t {
                for l in 0..2 {
                    out.push(BasisPath::short_power(i, l, 4 * k + 1, params));
                }
            }
        }
        2 => {
            for k in 0..t {
                for l in 0..2 {
                    out.push(BasisPath::short_power(i, l, 4 * k + 2, params));
                }
            }
            out.push(BasisPath::socle(i, params));
        }
        _ => {
            for k in 0..t {
                for l in 0..2 {
                    out.push(BasisPath::short_power(i, l, 4 * k + 3, params));
                }
            }
        }
    }
    out
}

/// Every basis path of A, grouped by start then end vertex residue.
pub fn algebra_basis(params: &AlgebraParams) -> Vec<BasisPath> {
    let mut out: Vec<BasisPath> = VertexId::all()
        .flat_map(|i| VertexId::all().flat_map(move |j| hom_space_basis(i, j, params)))
        .collect();
    out.sort();
    out
}

pub fn dim_algebra(params: &AlgebraParams) -> usize {
    VertexId::all()
        .flat_map(|i| VertexId::all().map(move |j| (i, j)))
        .map(|(i, j)| hom_space_basis(i, j, params).len())
        .sum()
}

/// Dimension of the center, from the linear system `z g = g z` over all
/// basis elements `g`.
pub fn center_dimension(params: &AlgebraParams) -> usize {
    let basis = algebra_basis(params);
    let one = params.spec.one();
    // commutator [b_c, g] for every unknown coordinate c, regrouped into one
    // equation per (g, output basis path)
    let mut equations: BTreeMap<(usize, BasisPath), SparseRow> = BTreeMap::new();
    for (g_idx, g) in basis.iter().enumerate() {
        let g_elem = AlgebraElement::from_path(*g, one.clone());
        for (col, b) in basis.iter().enumerate() {
            let b_elem = AlgebraElement::from_path(*b, one.clone());
            let comm = multiply(&b_elem, &g_elem, params).sub(&multiply(&g_elem, &b_elem, params));
            for (path, c) in comm.terms() {
                equations
                    .entry((g_idx, *path))
                    .or_default()
                    .push((col, c.clone()));
            }
        }
    }
    basis.len() - rank_of_rows(equations.into_values())
}
