use std::fmt;

use super::rational::Rational;

/// Dense matrix over the rationals.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix {
    cols: usize,
    rows: Vec<Vec<Rational>>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { cols, rows: vec![vec![Rational::ZERO; cols]; rows] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.rows[i][i] = Rational::ONE;
        }
        m
    }

    /// Builds a matrix from rows; every row must have `cols` entries.
    pub fn from_rows(rows: Vec<Vec<Rational>>, cols: usize) -> Self {
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix rows");
        Matrix { cols, rows }
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        Self::from_rows(
            rows.iter().map(|r| r.iter().map(|&v| Rational::from_integer(v)).collect()).collect(),
            cols,
        )
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.rows[r][c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        self.rows[r][c] = v;
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.rows[r]
    }

    pub fn push_row(&mut self, row: Vec<Rational>) {
        assert_eq!(row.len(), self.cols, "row length mismatch");
        self.rows.push(row);
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols);
        self.rows
            .iter()
            .map(|r| {
                r.iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect()
    }

    /// Reduced row echelon form and pivot columns. Pivots are chosen at the
    /// leftmost possible column, taking the first nonzero row below the
    /// current pivot row.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut rows = self.rows.clone();
        let pivots = rref_in_place(&mut rows, self.cols, true);
        (Matrix { cols: self.cols, rows }, pivots)
    }

    pub fn rank(&self) -> usize {
        let mut rows = self.rows.clone();
        rref_in_place(&mut rows, self.cols, false).len()
    }

    /// Basis of the right null space, one vector per free column, with a 1
    /// in that column and zeros in the other free columns.
    pub fn kernel_basis(&self) -> Vec<Vec<Rational>> {
        let mut rows = self.rows.clone();
        let pivots = rref_in_place(&mut rows, self.cols, true);
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut v = vec![Rational::ZERO; self.cols];
                v[f] = Rational::ONE;
                for (i, &p) in pivots.iter().enumerate() {
                    v[p] = -&rows[i][f];
                }
                v
            })
            .collect()
    }
}

/// Gauss-Jordan elimination in place. Returns pivot columns; the first
/// `pivots.len()` rows hold the echelon rows afterwards. With `full` the
/// rows are normalized and reduced above pivots too.
fn rref_in_place(rows: &mut [Vec<Rational>], cols: usize, full: bool) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut pr = 0;
    for c in 0..cols {
        if pr == rows.len() {
            break;
        }
        let Some(sel) = (pr..rows.len()).find(|&r| !rows[r][c].is_zero()) else {
            continue;
        };
        rows.swap(pr, sel);
        let inv = rows[pr][c].recip();
        if !inv.is_one() {
            for v in rows[pr][c..].iter_mut() {
                if !v.is_zero() {
                    *v = &*v * &inv;
                }
            }
        }
        let (head, tail) = rows.split_at_mut(pr);
        let (prow, below) = tail.split_first_mut().expect("pivot row");
        let nz: Vec<usize> = (c..cols).filter(|&j| !prow[j].is_zero()).collect();
        let eliminate = |row: &mut Vec<Rational>| {
            let f = row[c].clone();
            if f.is_zero() {
                return;
            }
            for &j in &nz {
                let t = &f * &prow[j];
                row[j] -= &t;
            }
        };
        below.iter_mut().for_each(eliminate);
        if full {
            head.iter_mut().for_each(eliminate);
        }
        pivots.push(c);
        pr += 1;
    }
    pivots
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.rows {
            let cells: Vec<String> = r.iter().map(|v| v.to_string()).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

pub fn rank(m: &Matrix) -> usize {
    m.rank()
}

pub fn kernel_basis(m: &Matrix) -> Vec<Vec<Rational>> {
    m.kernel_basis()
}

/// Incrementally maintained reduced echelon basis of a subspace of `Q^dim`.
#[derive(Clone, Debug)]
pub struct EchelonBasis {
    dim: usize,
    rows: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
}

impl EchelonBasis {
    pub fn new(dim: usize) -> Self {
        EchelonBasis { dim, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduces `v` against the basis in place.
    pub fn reduce(&self, v: &mut [Rational]) {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let f = v[p].clone();
            if f.is_zero() {
                continue;
            }
            for (j, r) in row.iter().enumerate().skip(p) {
                if !r.is_zero() {
                    let t = &f * r;
                    v[j] -= &t;
                }
            }
        }
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(Rational::is_zero)
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, v: Vec<Rational>) -> bool {
        assert_eq!(v.len(), self.dim);
        let mut w = v;
        self.reduce(&mut w);
        let Some(p) = w.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = w[p].recip();
        for x in w[p..].iter_mut() {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        for row in self.rows.iter_mut() {
            let f = row[p].clone();
            if f.is_zero() {
                continue;
            }
            for j in p..self.dim {
                if !w[j].is_zero() {
                    let t = &f * &w[j];
                    row[j] -= &t;
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, w);
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(v: i64) -> Rational {
        Rational::from_integer(v)
    }

    #[test]
    fn kernel_examples() {
        assert!(Matrix::identity(2).kernel_basis().is_empty());
        assert_eq!(Matrix::zeros(2, 3).kernel_basis().len(), 3);
        assert_eq!(Matrix::from_i64(&[vec![1, 1]]).kernel_basis(), vec![vec![r(-1), r(1)]]);
    }

    #[test]
    fn rank_examples() {
        assert_eq!(Matrix::identity(4).rank(), 4);
        let outer = Matrix::from_i64(&[vec![1, 2, 3], vec![2, 4, 6], vec![-1, -2, -3]]);
        assert_eq!(outer.rank(), 1);
        let vandermonde = Matrix::from_i64(&[vec![1, 0, 0], vec![1, 1, 1], vec![1, 2, 4]]);
        assert_eq!(vandermonde.rank(), 3);
    }

    #[test]
    fn rref_is_canonical() {
        let m = Matrix::from_i64(&[vec![0, 2, 4], vec![1, 1, 1], vec![1, 2, 3]]);
        let (rr, piv) = m.rref();
        assert_eq!(piv, vec![0, 1]);
        assert_eq!(rr.row(0), &[r(1), r(0), r(-1)]);
        assert_eq!(rr.row(1), &[r(0), r(1), r(2)]);
    }

    #[test]
    fn echelon_basis_matches_rank() {
        let mut e = EchelonBasis::new(3);
        assert!(e.insert(vec![r(1), r(2), r(3)]));
        assert!(!e.insert(vec![r(2), r(4), r(6)]));
        assert!(e.insert(vec![r(0), r(1), r(1)]));
        assert_eq!(e.rank(), 2);
        assert!(e.contains(&[r(1), r(3), r(4)]));
        assert!(!e.contains(&[r(0), r(0), r(1)]));
    }
}
