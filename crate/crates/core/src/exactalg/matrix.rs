use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{abs, format_rational, Rational};
use crate::{Error, Result};

/// Dense row-major matrix over ℚ.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix { rows, cols, entries: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn diagonal(diag: &[Rational]) -> Self {
        let mut m = Self::zeros(diag.len(), diag.len());
        for (i, d) in diag.iter().enumerate() {
            m[(i, i)] = d.clone();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        RatMatrix { rows, cols, entries }
    }

    /// Builds a matrix from rows; all rows must have the same length.
    /// `cols` fixes the width when `rows` is empty.
    pub fn from_rows(rows: Vec<Vec<Rational>>, cols: usize) -> Result<Self> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch { expected: (n, cols), found: (n, row.len()) });
            }
            entries.extend(row);
        }
        Ok(RatMatrix { rows: n, cols, entries })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    /// Keeps the listed columns, in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> Self {
        Self::from_fn(self.rows, cols.len(), |i, j| self[(i, cols[j])].clone())
    }

    pub fn select_rows(&self, rows: &[usize]) -> Self {
        Self::from_fn(rows.len(), self.cols, |i, j| self[(rows[i], j)].clone())
    }

    pub fn mul(&self, rhs: &RatMatrix) -> Result<RatMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch {
                expected: (self.cols, rhs.cols),
                found: (rhs.rows, rhs.cols),
            });
        }
        let mut out = RatMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Applies the matrix to a column vector.
    pub fn apply(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch { expected: (self.cols, 1), found: (v.len(), 1) });
        }
        Ok((0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect())
    }

    /// Rank over ℚ by fraction-free (Bareiss) elimination.
    pub fn rank(&self) -> usize {
        let mut a = self.integer_rows().0;
        bareiss_echelon(&mut a, self.cols).len()
    }

    /// Basis of the right null space, one vector per free column of the
    /// reduced row echelon form. Empty iff the matrix has full column rank.
    pub fn kernel_basis(&self) -> Vec<Vec<Rational>> {
        let mut a: Vec<Vec<Rational>> = (0..self.rows).map(|i| self.row(i).to_vec()).collect();
        let mut pivots: Vec<usize> = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !a[i][c].is_zero()) else {
                continue;
            };
            a.swap(r, p);
            let inv = a[r][c].recip();
            for x in a[r].iter_mut() {
                *x *= &inv;
            }
            let pivot_row = a[r].clone();
            for (i, row) in a.iter_mut().enumerate() {
                if i == r || row[c].is_zero() {
                    continue;
                }
                let factor = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    if !y.is_zero() {
                        *x -= &factor * y;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|c| !pivots.contains(c)) {
            let mut v = vec![Rational::zero(); self.cols];
            v[free] = Rational::one();
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = -a[i][free].clone();
            }
            basis.push(v);
        }
        basis
    }

    /// Exact inverse. Forward elimination is fraction-free on the
    /// integer-scaled augmented matrix; back substitution is rational.
    pub fn inverse(&self) -> Result<RatMatrix> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch {
                expected: (self.rows, self.rows),
                found: (self.rows, self.cols),
            });
        }
        let n = self.rows;
        let (mut a, scales) = self.integer_rows();
        for (i, row) in a.iter_mut().enumerate() {
            row.extend((0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }));
        }
        let pivots = bareiss_echelon(&mut a, n);
        if pivots.len() < n {
            return Err(Error::SingularMatrix { dimension: n, rank: pivots.len() });
        }
        // a[..][..n] is now upper triangular with nonzero diagonal.
        let mut x: Vec<Vec<Rational>> = vec![Vec::new(); n];
        for i in (0..n).rev() {
            let mut rhs: Vec<Rational> =
                a[i][n..].iter().map(|v| Rational::from_integer(v.clone())).collect();
            for k in i + 1..n {
                if a[i][k].is_zero() {
                    continue;
                }
                let coef = Rational::from_integer(a[i][k].clone());
                for (r, xv) in rhs.iter_mut().zip(&x[k]) {
                    if !xv.is_zero() {
                        *r -= &coef * xv;
                    }
                }
            }
            let d = Rational::from_integer(a[i][i].clone());
            for r in rhs.iter_mut() {
                *r /= &d;
            }
            x[i] = rhs;
        }
        // A_int = S·A, hence A⁻¹ = A_int⁻¹·S.
        Ok(RatMatrix::from_fn(n, n, |i, j| &x[i][j] * Rational::from_integer(scales[j].clone())))
    }

    /// Strict row diagonal dominance: |a_ii| > Σ_{j≠i} |a_ij| for every row.
    /// Non-square matrices are never dominant.
    pub fn is_diag_dominant(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                let off: Rational =
                    (0..self.cols).filter(|&j| j != i).map(|j| abs(&self[(i, j)])).sum();
                abs(&self[(i, i)]) > off
            })
    }

    /// Strict column diagonal dominance: |a_jj| > Σ_{i≠j} |a_ij| for every column.
    pub fn is_col_diag_dominant(&self) -> bool {
        self.is_square() && self.transpose().is_diag_dominant()
    }

    /// Columns violating strict column dominance.
    pub fn col_dominance_failures(&self) -> Vec<usize> {
        (0..self.cols.min(self.rows))
            .filter(|&j| {
                let off: Rational =
                    (0..self.rows).filter(|&i| i != j).map(|i| abs(&self[(i, j)])).sum();
                abs(&self[(j, j)]) <= off
            })
            .collect()
    }

    /// Entries rendered as `p/q` strings, row by row.
    pub fn to_cells(&self) -> Vec<Vec<String>> {
        (0..self.rows).map(|i| self.row(i).iter().map(format_rational).collect()).collect()
    }

    /// Each row multiplied by the lcm of its denominators, plus those factors.
    fn integer_rows(&self) -> (Vec<Vec<BigInt>>, Vec<BigInt>) {
        let mut rows = Vec::with_capacity(self.rows);
        let mut scales = Vec::with_capacity(self.rows);
        for i in 0..self.rows {
            let row = self.row(i);
            let l = row.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
            rows.push(row.iter().map(|q| q.numer() * (&l / q.denom())).collect());
            scales.push(l);
        }
        (rows, scales)
    }
}

/// In-place fraction-free row echelon reduction, searching pivots only in the
/// first `pivot_cols` columns. Returns the pivot columns.
fn bareiss_echelon(a: &mut [Vec<BigInt>], pivot_cols: usize) -> Vec<usize> {
    let m = a.len();
    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..pivot_cols {
        if r == m {
            break;
        }
        let Some(p) = (r..m).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let (top, rest) = a.split_at_mut(r + 1);
        let pivot_row = &top[r];
        for row in rest.iter_mut() {
            let lead = core::mem::take(&mut row[c]);
            for j in c + 1..row.len() {
                let num = &row[j] * &pivot_row[c] - &lead * &pivot_row[j];
                let (q, rem) = num.div_rem(&prev);
                debug_assert!(rem.is_zero(), "Bareiss division must be exact");
                row[j] = q;
            }
        }
        prev = a[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    pivots
}

impl core::ops::Index<(usize, usize)> for RatMatrix {
    type Output = Rational;

    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of bounds");
        &self.entries[i * self.cols + j]
    }
}

impl core::ops::IndexMut<(usize, usize)> for RatMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of bounds");
        &mut self.entries[i * self.cols + j]
    }
}

impl fmt::Debug for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RatMatrix {}x{} [", self.rows, self.cols)?;
        for row in self.to_cells() {
            writeln!(f, "  {}", row.join(", "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{int, rat};
    use alloc::string::ToString;

    fn m(rows: &[&[i64]]) -> RatMatrix {
        let cols = rows.first().map_or(0, |r| r.len());
        RatMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect(), cols)
            .unwrap()
    }

    #[test]
    fn rank_examples() {
        assert_eq!(RatMatrix::identity(2).rank(), 2);
        assert_eq!(RatMatrix::zeros(2, 2).rank(), 0);
        assert_eq!(m(&[&[1, 2], &[2, 4]]).rank(), 1);
        assert_eq!(m(&[&[0, 0, 1], &[0, 0, 2], &[1, 0, 0]]).rank(), 2);
    }

    #[test]
    fn kernel_examples() {
        assert!(RatMatrix::identity(3).kernel_basis().is_empty());
        assert_eq!(RatMatrix::zeros(2, 2).kernel_basis().len(), 2);
        let k = m(&[&[1, 1]]).kernel_basis();
        assert_eq!(k, vec![vec![int(-1), int(1)]]);
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(RatMatrix::identity(3).inverse().unwrap(), RatMatrix::identity(3));
        let d = RatMatrix::diagonal(&[int(2), int(3)]);
        assert_eq!(d.inverse().unwrap(), RatMatrix::diagonal(&[rat(1, 2), rat(1, 3)]));
        let a = m(&[&[1, 1], &[1, 2]]);
        let inv = a.inverse().unwrap();
        assert_eq!(inv, m(&[&[2, -1], &[-1, 1]]));
        assert_eq!(inv.mul(&a).unwrap(), RatMatrix::identity(2));
    }

    #[test]
    fn inverse_of_rational_matrix() {
        let a = RatMatrix::from_rows(
            vec![vec![rat(1, 2), rat(1, 3)], vec![rat(-5, 7), int(4)]],
            2,
        )
        .unwrap();
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv).unwrap(), RatMatrix::identity(2));
    }

    #[test]
    fn singular_inverse_is_an_error() {
        assert_eq!(
            m(&[&[1, 2], &[2, 4]]).inverse(),
            Err(Error::SingularMatrix { dimension: 2, rank: 1 })
        );
        assert!(m(&[&[1, 2, 3]]).inverse().is_err());
    }

    #[test]
    fn dominance_examples() {
        assert!(RatMatrix::diagonal(&[int(5), int(5)]).is_diag_dominant());
        assert!(!m(&[&[1, 2], &[2, 1]]).is_diag_dominant());
        // row-dominant but not column-dominant
        let a = m(&[&[3, 1, 1], &[2, 4, 1], &[2, 0, 5]]);
        assert!(a.is_diag_dominant());
        assert!(!a.is_col_diag_dominant());
        assert_eq!(a.col_dominance_failures(), vec![0]);
        assert!(a.transpose().is_col_diag_dominant());
    }

    #[test]
    fn cells_use_explicit_denominators() {
        let a = RatMatrix::from_rows(vec![vec![rat(1, 2), int(-3)]], 2).unwrap();
        assert_eq!(a.to_cells(), vec![vec!["1/2".to_string(), "-3/1".to_string()]]);
    }
}
