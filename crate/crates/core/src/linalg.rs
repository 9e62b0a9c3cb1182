//! Exact rank computations over a [`Scalar`] field.

use std::collections::BTreeMap;

use crate::scalars::Scalar;

/// Sparse row: `(column, nonzero entry)` sorted by column.
pub type SparseRow = Vec<(usize, Scalar)>;

/// Row-echelon basis built one vector at a time. Each stored pivot row is
/// scaled so that its leading entry is one.
#[derive(Debug, Default, Clone)]
pub struct Echelon {
    pivots: BTreeMap<usize, SparseRow>,
}

/// `target - factor * source` on sparse rows.
fn axpy(target: &SparseRow, factor: &Scalar, source: &SparseRow) -> SparseRow {
    let mut out = Vec::with_capacity(target.len() + source.len());
    let (mut a, mut b) = (target.iter().peekable(), source.iter().peekable());
    loop {
        match (a.peek(), b.peek()) {
            (Some((ca, va)), Some((cb, vb))) => {
                if ca < cb {
                    out.push((*ca, va.clone()));
                    a.next();
                } else if cb < ca {
                    out.push((*cb, -&(factor * vb)));
                    b.next();
                } else {
                    let v = va - &(factor * vb);
                    if !v.is_zero() {
                        out.push((*ca, v));
                    }
                    a.next();
                    b.next();
                }
            }
            (Some((ca, va)), None) => {
                out.push((*ca, va.clone()));
                a.next();
            }
            (None, Some((cb, vb))) => {
                out.push((*cb, -&(factor * vb)));
                b.next();
            }
            (None, None) => break,
        }
    }
    out
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduces `row` against the current pivots; the result is zero iff the
    /// row lies in their span.
    pub fn reduce(&self, mut row: SparseRow) -> SparseRow {
        row.retain(|(_, v)| !v.is_zero());
        let mut start = 0;
        while start < row.len() {
            let col = row[start].0;
            match self.pivots.get(&col) {
                Some(pivot) => {
                    let factor = row[start].1.clone();
                    row = axpy(&row, &factor, pivot);
                    start = row.partition_point(|(c, _)| *c < col);
                }
                None => start += 1,
            }
        }
        row
    }

    /// Adds a row; returns whether it increased the rank.
    pub fn insert(&mut self, row: SparseRow) -> bool {
        let reduced = self.reduce(row);
        let Some((col, lead)) = reduced.first().cloned() else {
            return false;
        };
        let inv = lead.inv();
        let normalized = reduced.into_iter().map(|(c, v)| (c, &v * &inv)).collect();
        self.pivots.insert(col, normalized);
        true
    }
}

/// Rank of a set of sparse rows.
pub fn rank_of_rows<I: IntoIterator<Item = SparseRow>>(rows: I) -> usize {
    let mut ech = Echelon::new();
    for row in rows {
        ech.insert(row);
    }
    ech.rank()
}

/// Dense matrix of exact scalars.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Vec<Scalar>>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize, zero: &Scalar) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![vec![zero.clone(); cols]; rows],
        }
    }

    pub fn from_rows(cols: usize, data: Vec<Vec<Scalar>>) -> Self {
        assert!(data.iter().all(|r| r.len() == cols), "ragged matrix");
        Matrix {
            rows: data.len(),
            cols,
            data,
        }
    }

    pub fn identity(size: usize, one: &Scalar) -> Self {
        let zero = one.zero_like();
        let mut m = Matrix::zeros(size, size, &zero);
        for k in 0..size {
            m.data[k][k] = one.clone();
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r][c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.data[r][c] = v;
    }

    pub fn add_to(&mut self, r: usize, c: usize, v: &Scalar) {
        let cell = &mut self.data[r][c];
        *cell = &*cell + v;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r]
    }

    pub fn sparse_rows(&self) -> impl Iterator<Item = SparseRow> + '_ {
        self.data.iter().map(|row| {
            row.iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(c, v)| (c, v.clone()))
                .collect()
        })
    }

    /// Exact rank by Gaussian elimination.
    pub fn rank(&self) -> usize {
        rank_of_rows(self.sparse_rows())
    }

    pub fn nullity(&self) -> usize {
        self.cols - self.rank()
    }

    /// `M v`; `v` has one entry per column. Zero-sized inputs need `zero`.
    pub fn mul_vec(&self, v: &[Scalar], zero: &Scalar) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols);
        self.data
            .iter()
            .map(|row| {
                row.iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(zero.clone(), |acc, (a, b)| &acc + &(a * b))
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::Backend;

    fn s(n: i64) -> Scalar {
        Scalar::from_int(Backend::Rational, n)
    }

    fn dense(rows: &[&[i64]]) -> Matrix {
        let cols = rows.first().map_or(0, |r| r.len());
        Matrix::from_rows(
            cols,
            rows.iter()
                .map(|r| r.iter().map(|&v| s(v)).collect())
                .collect(),
        )
    }

    #[test]
    fn zero_and_identity() {
        assert_eq!(Matrix::zeros(3, 4, &s(0)).rank(), 0);
        assert_eq!(Matrix::identity(5, &s(1)).rank(), 5);
        assert_eq!(Matrix::zeros(0, 7, &s(0)).nullity(), 7);
    }

    #[test]
    fn dependent_rows() {
        let m = dense(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1], &[0, 2, 2]]);
        assert_eq!(m.rank(), 2);
        assert_eq!(m.nullity(), 1);
    }

    #[test]
    fn reduce_late_pivot() {
        // second row has its lead to the right of a pivot it also touches
        let m = dense(&[&[0, 1, 1], &[1, 1, 0], &[1, 0, -1]]);
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn mul_vec_kernel() {
        let m = dense(&[&[1, 2, 3], &[2, 4, 6]]);
        let v = [s(1), s(1), s(-1)];
        assert!(m.mul_vec(&v, &s(0)).iter().all(Scalar::is_zero));
    }

    #[test]
    fn function_field_rank() {
        let b = Backend::RationalFunction { p: 3 };
        let t = Scalar::indeterminate(b).unwrap();
        let one = Scalar::from_int(b, 1);
        let m = Matrix::from_rows(
            2,
            vec![vec![t.clone(), one.clone()], vec![&t * &t, t.clone()]],
        );
        assert_eq!(m.rank(), 1);
    }
}
