//! Exact rational linear algebra.
//!
//! Everything here works over `BigRational`, so row reduction is exact and
//! the reduced row-echelon form is canonical. [`Subspace`] keeps its basis in
//! that form, which turns subspace comparison into a structural equality.

use std::fmt;

use num::{BigInt, BigRational, One, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Dense row-major matrix of rationals.
#[derive(Clone, PartialEq, Eq)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    /// Builds a matrix from explicit rows; `cols` fixes the width so that a
    /// matrix with no rows still has a well-defined shape.
    pub fn from_rows(cols: usize, rows: Vec<Vec<Rational>>) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        let nrows = rows.len();
        for row in rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: row.len(),
                });
            }
            data.extend(row);
        }
        Ok(QMatrix {
            rows: nrows,
            cols,
            data,
        })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&x| rat(x)).collect())
            .collect();
        Self::from_rows(cols, rows).expect("ragged integer matrix")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: Rational) {
        self.data[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vectors(&self) -> impl Iterator<Item = &[Rational]> {
        (0..self.rows).map(move |r| self.row(r))
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        Ok(self
            .row_vectors()
            .map(|row| dot(row, v))
            .collect())
    }

    pub fn transpose(&self) -> QMatrix {
        let mut t = QMatrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    /// Reduced row-echelon form and pivot columns. Zero rows end up at the
    /// bottom, so the shape is preserved.
    pub fn rref(&self) -> (QMatrix, Vec<usize>) {
        let mut rows: Vec<Vec<Rational>> = self.row_vectors().map(|r| r.to_vec()).collect();
        let pivots = rref_in_place(&mut rows, self.cols);
        let data = rows.into_iter().flatten().collect();
        (
            QMatrix {
                rows: self.rows,
                cols: self.cols,
                data,
            },
            pivots,
        )
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// The null space `{v : self * v = 0}` as a subspace of `Q^cols`.
    pub fn kernel_basis(&self) -> Subspace {
        let mut rows: Vec<Vec<Rational>> = self.row_vectors().map(|r| r.to_vec()).collect();
        kernel_of_rows(&mut rows, self.cols)
    }

    /// One solution of `self * x = b`, if the system is consistent.
    pub fn solve(&self, b: &[Rational]) -> Result<Option<Vec<Rational>>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                found: b.len(),
            });
        }
        let mut rows: Vec<Vec<Rational>> = self
            .row_vectors()
            .zip(b)
            .map(|(r, bi)| {
                let mut row = r.to_vec();
                row.push(bi.clone());
                row
            })
            .collect();
        let pivots = rref_in_place(&mut rows, self.cols + 1);
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![Rational::zero(); self.cols];
        for (i, &p) in pivots.iter().enumerate() {
            x[p] = rows[i][self.cols].clone();
        }
        Ok(Some(x))
    }
}

impl fmt::Debug for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QMatrix {}x{} [", self.rows, self.cols)?;
        for (i, row) in self.row_vectors().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            write!(f, "{}", cells.join(", "))?;
        }
        write!(f, "]")
    }
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

/// Gauss–Jordan elimination on a list of equal-length rows. Pivots are taken
/// column by column, using the topmost unprocessed row with a nonzero entry.
fn rref_in_place(rows: &mut [Vec<Rational>], cols: usize) -> Vec<usize> {
    let nrows = rows.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..cols {
        if r == nrows {
            break;
        }
        let Some(sel) = (r..nrows).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, sel);
        let lead = rows[r][col].clone();
        if !lead.is_one() {
            let inv = lead.recip();
            for x in rows[r][col..].iter_mut() {
                if !x.is_zero() {
                    *x *= &inv;
                }
            }
        }
        let pivot_row = std::mem::take(&mut rows[r]);
        let support: Vec<usize> = (col..cols).filter(|&j| !pivot_row[j].is_zero()).collect();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for &j in &support {
                let delta = &factor * &pivot_row[j];
                row[j] -= delta;
            }
        }
        rows[r] = pivot_row;
        pivots.push(col);
        r += 1;
    }
    pivots
}

fn kernel_of_rows(rows: &mut [Vec<Rational>], cols: usize) -> Subspace {
    let pivots = rref_in_place(rows, cols);
    let mut is_pivot = vec![false; cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut vectors = Vec::new();
    for free in (0..cols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![Rational::zero(); cols];
        v[free] = Rational::one();
        for (i, &p) in pivots.iter().enumerate() {
            let entry = &rows[i][free];
            if !entry.is_zero() {
                v[p] = -entry.clone();
            }
        }
        vectors.push(v);
    }
    Subspace::from_vectors_unchecked(cols, vectors)
}

/// A linear subspace of `Q^n`, stored as a reduced row-echelon basis with
/// rows ordered by pivot column.
#[derive(Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient_dim: usize,
    basis: QMatrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: QMatrix::zeros(0, ambient_dim),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: QMatrix::identity(ambient_dim),
            pivots: (0..ambient_dim).collect(),
        }
    }

    /// The span of the given vectors.
    pub fn span<I>(ambient_dim: usize, vectors: I) -> Result<Self>
    where
        I: IntoIterator<Item = Vec<Rational>>,
    {
        let vectors: Vec<Vec<Rational>> = vectors.into_iter().collect();
        if let Some(bad) = vectors.iter().find(|v| v.len() != ambient_dim) {
            return Err(Error::DimensionMismatch {
                expected: ambient_dim,
                found: bad.len(),
            });
        }
        Ok(Self::from_vectors_unchecked(ambient_dim, vectors))
    }

    fn from_vectors_unchecked(ambient_dim: usize, mut vectors: Vec<Vec<Rational>>) -> Self {
        vectors.retain(|v| v.iter().any(|x| !x.is_zero()));
        let pivots = rref_in_place(&mut vectors, ambient_dim);
        vectors.truncate(pivots.len());
        let basis = QMatrix::from_rows(ambient_dim, vectors).expect("rows have ambient width");
        Subspace {
            ambient_dim,
            basis,
            pivots,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_zero(&self) -> bool {
        self.pivots.is_empty()
    }

    pub fn basis(&self) -> &QMatrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> impl Iterator<Item = &[Rational]> {
        self.basis.row_vectors()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn check_ambient(&self, other: usize) -> Result<()> {
        if self.ambient_dim != other {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                found: other,
            });
        }
        Ok(())
    }

    /// Compares spans through the canonical reduced bases.
    pub fn subspace_equal(&self, other: &Subspace) -> Result<bool> {
        self.check_ambient(other.ambient_dim)?;
        Ok(self.pivots == other.pivots && self.basis == other.basis)
    }

    /// Coordinates of `v` in the reduced basis, or `None` when `v` is not in
    /// the span.
    pub fn coordinates(&self, v: &[Rational]) -> Result<Option<Vec<Rational>>> {
        self.check_ambient(v.len())?;
        let coords: Vec<Rational> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut residual = v.to_vec();
        for (c, row) in coords.iter().zip(self.basis.row_vectors()) {
            if c.is_zero() {
                continue;
            }
            for (r, x) in residual.iter_mut().zip(row) {
                if !x.is_zero() {
                    *r -= c * x;
                }
            }
        }
        Ok(residual.iter().all(Zero::is_zero).then_some(coords))
    }

    pub fn contains(&self, v: &[Rational]) -> Result<bool> {
        Ok(self.coordinates(v)?.is_some())
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool> {
        self.check_ambient(other.ambient_dim)?;
        for row in self.basis_vectors() {
            if !other.contains(row)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other.ambient_dim)?;
        let vectors = self
            .basis_vectors()
            .chain(other.basis_vectors())
            .map(|r| r.to_vec());
        Subspace::span(self.ambient_dim, vectors)
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Subspace(dim {} in Q^{}, {:?})",
            self.dim(),
            self.ambient_dim,
            self.basis
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| rat(x)).collect()
    }

    #[test]
    fn rref_identity_is_fixed() {
        let id = QMatrix::identity(2);
        let (r, p) = id.rref();
        assert_eq!(r, id);
        assert_eq!(p, vec![0, 1]);
    }

    #[test]
    fn rref_rank_one() {
        let (r, p) = QMatrix::from_i64(&[&[1, 2], &[2, 4]]).rref();
        assert_eq!(r, QMatrix::from_i64(&[&[1, 2], &[0, 0]]));
        assert_eq!(p, vec![0]);
    }

    #[test]
    fn rref_zero() {
        let z = QMatrix::zeros(3, 3);
        let (r, p) = z.rref();
        assert_eq!(r, z);
        assert!(p.is_empty());
    }

    #[test]
    fn rref_normalizes_fractions() {
        let (r, p) = QMatrix::from_i64(&[&[2, 1], &[4, 3]]).rref();
        assert_eq!(r, QMatrix::identity(2));
        assert_eq!(p, vec![0, 1]);
        let (r, _) = QMatrix::from_i64(&[&[3, 1, 0]]).rref();
        assert_eq!(r.get(0, 1), &ratio(1, 3));
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(QMatrix::identity(3).kernel_basis().dim(), 0);
        let k = QMatrix::zeros(2, 3).kernel_basis();
        assert!(k.subspace_equal(&Subspace::full(3)).unwrap());
        let k = QMatrix::from_i64(&[&[1, 1]]).kernel_basis();
        let expected = Subspace::span(2, vec![v(&[1, -1])]).unwrap();
        assert!(k.subspace_equal(&expected).unwrap());
    }

    #[test]
    fn kernel_of_empty_row_set_is_everything() {
        let m = QMatrix::from_rows(4, vec![]).unwrap();
        assert_eq!(m.kernel_basis().dim(), 4);
    }

    #[test]
    fn subspace_equality() {
        let a = Subspace::span(2, vec![v(&[1, 0])]).unwrap();
        let b = Subspace::span(2, vec![v(&[2, 0])]).unwrap();
        let c = Subspace::span(2, vec![v(&[0, 1])]).unwrap();
        assert!(a.subspace_equal(&b).unwrap());
        assert!(!a.subspace_equal(&c).unwrap());
        assert!(Subspace::zero(2).subspace_equal(&Subspace::zero(2)).unwrap());
        assert_eq!(
            a.subspace_equal(&Subspace::zero(3)),
            Err(Error::DimensionMismatch {
                expected: 2,
                found: 3
            })
        );
    }

    #[test]
    fn membership_examples() {
        let s = Subspace::span(2, vec![v(&[1, 0])]).unwrap();
        assert_eq!(s.coordinates(&v(&[3, 0])).unwrap(), Some(v(&[3])));
        assert_eq!(s.coordinates(&v(&[0, 1])).unwrap(), None);
        assert_eq!(s.coordinates(&v(&[0, 0])).unwrap(), Some(v(&[0])));
        assert!(s.coordinates(&v(&[1])).is_err());
    }

    #[test]
    fn solve_finds_particular_solution() {
        let a = QMatrix::from_i64(&[&[1, 1], &[1, -1]]);
        let x = a.solve(&v(&[3, 1])).unwrap().unwrap();
        assert_eq!(x, v(&[2, 1]));
        let singular = QMatrix::from_i64(&[&[1, 1], &[2, 2]]);
        assert_eq!(singular.solve(&v(&[1, 3])).unwrap(), None);
    }

    #[test]
    fn sum_and_inclusion() {
        let a = Subspace::span(3, vec![v(&[1, 0, 0])]).unwrap();
        let b = Subspace::span(3, vec![v(&[0, 1, 1])]).unwrap();
        let s = a.sum(&b).unwrap();
        assert_eq!(s.dim(), 2);
        assert!(a.is_subspace_of(&s).unwrap());
        assert!(!s.is_subspace_of(&a).unwrap());
    }
}
