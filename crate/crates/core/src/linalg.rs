//! Dense linear algebra over a finite field: row reduction, kernels,
//! solving, and incremental echelon bases.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};

pub type Vector = Vec<FieldElement>;

pub fn zero_vector(field: &Field, n: usize) -> Vector {
    vec![field.zero(); n]
}

pub fn add_assign(field: &Field, dst: &mut [FieldElement], src: &[FieldElement]) {
    for (d, &s) in dst.iter_mut().zip(src) {
        *d = field.add(*d, s);
    }
}

pub fn scaled(field: &Field, v: &[FieldElement], c: FieldElement) -> Vector {
    v.iter().map(|&x| field.mul(x, c)).collect()
}

pub fn weight(v: &[FieldElement]) -> usize {
    v.iter().filter(|x| !x.is_zero()).count()
}

pub fn support(v: &[FieldElement]) -> Vec<usize> {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, _)| i)
        .collect()
}

pub fn hamming_distance(a: &[FieldElement], b: &[FieldElement]) -> usize {
    a.iter().zip(b).filter(|(x, y)| x != y).count()
}

/// Dense row-major matrix over a finite field.
#[derive(Clone)]
pub struct Matrix {
    field: Arc<Field>,
    rows: usize,
    cols: usize,
    a: Vec<FieldElement>,
}

impl Matrix {
    pub fn zero(field: Arc<Field>, rows: usize, cols: usize) -> Matrix {
        let z = field.zero();
        Matrix {
            field,
            rows,
            cols,
            a: vec![z; rows * cols],
        }
    }

    pub fn from_rows(field: Arc<Field>, rows: Vec<Vector>) -> Result<Matrix> {
        let ncols = rows.first().map(|r| r.len()).unwrap_or(0);
        let mut a = Vec::with_capacity(rows.len() * ncols);
        for r in &rows {
            if r.len() != ncols {
                return Err(Error::LengthMismatch {
                    expected: ncols,
                    got: r.len(),
                });
            }
            for &e in r {
                if !field.owns(e) {
                    return Err(Error::FieldMismatch);
                }
                a.push(e);
            }
        }
        Ok(Matrix {
            field,
            rows: rows.len(),
            cols: ncols,
            a,
        })
    }

    pub fn identity(field: Arc<Field>, n: usize) -> Matrix {
        let mut m = Matrix::zero(field, n, n);
        for i in 0..n {
            let one = m.field.one();
            m.set(i, i, one);
        }
        m
    }

    pub fn field(&self) -> &Arc<Field> {
        &self.field
    }
    pub fn nrows(&self) -> usize {
        self.rows
    }
    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> FieldElement {
        self.a[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: FieldElement) {
        self.a[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[FieldElement] {
        &self.a[r * self.cols..(r + 1) * self.cols]
    }

    pub fn rows_vec(&self) -> Vec<Vector> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    /// Row vector times matrix: u * A, u of length nrows.
    pub fn row_times(&self, u: &[FieldElement]) -> Vector {
        assert_eq!(u.len(), self.rows);
        let f = &self.field;
        let mut out = zero_vector(f, self.cols);
        for (i, &c) in u.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (o, &g) in out.iter_mut().zip(self.row(i)) {
                *o = f.add(*o, f.mul(c, g));
            }
        }
        out
    }

    /// Matrix times column vector: A * x, x of length ncols.
    pub fn times_col(&self, x: &[FieldElement]) -> Vector {
        assert_eq!(x.len(), self.cols);
        let f = &self.field;
        (0..self.rows)
            .map(|r| {
                let mut acc = f.zero();
                for (&a, &b) in self.row(r).iter().zip(x) {
                    acc = f.add(acc, f.mul(a, b));
                }
                acc
            })
            .collect()
    }

    /// Reduced row echelon form; returns the RREF matrix and the pivot
    /// columns in ascending order.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let f = self.field.clone();
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0usize;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(pr) = (row..m.rows).find(|&r| !m.at(r, col).is_zero()) else {
                continue;
            };
            for c in 0..m.cols {
                let tmp = m.at(row, c);
                m.set(row, c, m.at(pr, c));
                m.set(pr, c, tmp);
            }
            let inv = f.inv(m.at(row, col)).expect("pivot is nonzero");
            for c in 0..m.cols {
                m.set(row, c, f.mul(m.at(row, c), inv));
            }
            for r in 0..m.rows {
                if r == row {
                    continue;
                }
                let factor = m.at(r, col);
                if factor.is_zero() {
                    continue;
                }
                for c in 0..m.cols {
                    let v = f.sub(m.at(r, c), f.mul(factor, m.at(row, c)));
                    m.set(r, c, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right kernel {x : A x = 0}, one vector per non-pivot
    /// column, ordered by that column.
    pub fn kernel_basis(&self) -> Vec<Vector> {
        let f = &self.field;
        let (r, pivots) = self.rref();
        let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
        let mut basis = Vec::new();
        for j in 0..self.cols {
            if pivot_set.contains(&j) {
                continue;
            }
            let mut v = zero_vector(f, self.cols);
            v[j] = f.one();
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(r.at(i, j));
            }
            basis.push(v);
        }
        basis
    }

    /// Solve A x = b. Returns a particular solution together with a basis of
    /// the homogeneous kernel, or None when inconsistent.
    pub fn solve_affine(&self, b: &[FieldElement]) -> Option<(Vector, Vec<Vector>)> {
        assert_eq!(b.len(), self.rows);
        let f = self.field.clone();
        let mut aug = Matrix::zero(f.clone(), self.rows, self.cols + 1);
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug.set(r, c, self.at(r, c));
            }
            aug.set(r, self.cols, b[r]);
        }
        let (r, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return None; // a pivot landed in the constant column
        }
        let mut x = zero_vector(&f, self.cols);
        for (i, &pc) in pivots.iter().enumerate() {
            x[pc] = r.at(i, self.cols);
        }
        Some((x, self.kernel_basis()))
    }

    /// Parity-check matrix for the row space: an (n - k) x n matrix H with
    /// c h^T = 0 for every codeword c of the row space and row h of H.
    pub fn parity_check(&self) -> Matrix {
        let rows = self.kernel_basis();
        Matrix::from_rows(self.field.clone(), rows).expect("kernel rows are well formed")
    }
}

/// A growing basis kept in reduced echelon form; used for span dimensions,
/// independence tests and membership.
#[derive(Clone)]
pub struct EchelonBasis {
    field: Arc<Field>,
    n: usize,
    rows: Vec<Vector>,
    pivots: Vec<usize>,
}

impl EchelonBasis {
    pub fn new(field: Arc<Field>, n: usize) -> EchelonBasis {
        EchelonBasis {
            field,
            n,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Echelon rows, sorted by pivot column.
    pub fn rows(&self) -> Vec<Vector> {
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&i| self.pivots[i]);
        order.iter().map(|&i| self.rows[i].clone()).collect()
    }

    /// Residual of v after elimination against the basis.
    pub fn reduce(&self, v: &[FieldElement]) -> Vector {
        assert_eq!(v.len(), self.n);
        let f = &self.field;
        let mut w = v.to_vec();
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            let c = w[pc];
            if c.is_zero() {
                continue;
            }
            for (wi, &ri) in w.iter_mut().zip(row) {
                *wi = f.sub(*wi, f.mul(c, ri));
            }
        }
        w
    }

    pub fn contains(&self, v: &[FieldElement]) -> bool {
        self.reduce(v).iter().all(|x| x.is_zero())
    }

    /// Insert v if independent of the current basis; returns true when the
    /// dimension grew.
    pub fn add(&mut self, v: &[FieldElement]) -> bool {
        let f = self.field.clone();
        let mut w = self.reduce(v);
        let Some(pc) = w.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = f.inv(w[pc]).expect("leading entry nonzero");
        for x in w.iter_mut() {
            *x = f.mul(*x, inv);
        }
        // back-eliminate the new pivot from existing rows
        for row in self.rows.iter_mut() {
            let c = row[pc];
            if c.is_zero() {
                continue;
            }
            for (ri, &wi) in row.iter_mut().zip(&w) {
                *ri = f.sub(*ri, f.mul(c, wi));
            }
        }
        self.rows.push(w);
        self.pivots.push(pc);
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;

    fn vecf(f: &Field, vals: &[i64]) -> Vector {
        vals.iter().map(|&v| f.from_int(v)).collect()
    }

    #[test]
    fn rref_and_rank() {
        let f = Field::prime(3).unwrap();
        let m = Matrix::from_rows(
            f.clone(),
            vec![
                vecf(&f, &[1, 1, 0, 0]),
                vecf(&f, &[0, 1, 1, 1]),
                vecf(&f, &[1, 2, 1, 1]), // row0 + row1
            ],
        )
        .unwrap();
        assert_eq!(m.rank(), 2);
        let (r, pivots) = m.rref();
        assert_eq!(pivots, vec![0, 1]);
        assert!(r.row(2).iter().all(|x| x.is_zero()));
    }

    #[test]
    fn kernel_is_orthogonal_to_rows() {
        let f = Field::prime(5).unwrap();
        let m = Matrix::from_rows(
            f.clone(),
            vec![vecf(&f, &[1, 2, 3, 4, 0]), vecf(&f, &[0, 1, 1, 0, 2])],
        )
        .unwrap();
        let ker = m.kernel_basis();
        assert_eq!(ker.len(), 3);
        for v in &ker {
            assert!(m.times_col(v).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn parity_check_annihilates_generator() {
        let f = Field::prime(2).unwrap();
        let g = Matrix::from_rows(
            f.clone(),
            vec![
                vecf(&f, &[1, 1, 0, 0, 0, 0]),
                vecf(&f, &[0, 0, 1, 1, 0, 0]),
                vecf(&f, &[0, 0, 0, 1, 1, 1]),
            ],
        )
        .unwrap();
        let h = g.parity_check();
        assert_eq!(h.nrows(), 3);
        for r in 0..g.nrows() {
            let c = g.row(r);
            for hr in 0..h.nrows() {
                let mut acc = f.zero();
                for (x, y) in c.iter().zip(h.row(hr)) {
                    acc = f.add(acc, f.mul(*x, *y));
                }
                assert!(acc.is_zero());
            }
        }
    }

    #[test]
    fn solve_affine_consistent_and_inconsistent() {
        let f = Field::prime(7).unwrap();
        let m = Matrix::from_rows(
            f.clone(),
            vec![
                vecf(&f, &[1, 2, 0]),
                vecf(&f, &[0, 1, 1]),
                vecf(&f, &[1, 3, 1]),
            ],
        )
        .unwrap();
        // row2 = row0 + row1, so the rhs must satisfy b2 = b0 + b1
        let inconsistent = vecf(&f, &[3, 4, 1]);
        assert!(m.solve_affine(&inconsistent).is_none());
        let rhs = vecf(&f, &[3, 4, 0]); // 3 + 4 = 0 mod 7
        let (x, ker) = m.solve_affine(&rhs).unwrap();
        assert_eq!(m.times_col(&x), rhs);
        assert_eq!(ker.len() + m.rank(), 3);
    }

    #[test]
    fn echelon_basis_tracks_dim_and_membership() {
        let f = Field::prime(3).unwrap();
        let mut basis = EchelonBasis::new(f.clone(), 4);
        assert!(basis.add(&vecf(&f, &[1, 1, 0, 0])));
        assert!(!basis.add(&vecf(&f, &[2, 2, 0, 0])));
        assert!(basis.add(&vecf(&f, &[0, 1, 1, 1])));
        assert_eq!(basis.dim(), 2);
        assert!(basis.contains(&vecf(&f, &[1, 2, 1, 1])));
        assert!(!basis.contains(&vecf(&f, &[1, 0, 0, 1])));
    }
}
