//! Exact rational linear algebra.
//!
//! Everything here works over [`Rational`] (arbitrary precision, always
//! reduced). Rank is computed by fraction-free (Bareiss) elimination over the
//! integers after clearing denominators; subspace bookkeeping uses an
//! incrementally maintained reduced row echelon form.

use std::fmt;
use std::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

pub type Rational = num_rational::BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Serializes a rational as `"p/q"` (or `"p"` when integral).
pub fn format_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Returns the value as an `i64` if it is an integer that fits.
pub fn as_integer(q: &Rational) -> Option<i64> {
    if q.is_integer() {
        q.numer().to_i64()
    } else {
        None
    }
}

/// Dense row-major rational matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix rows");
        Self {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|row| row.iter().map(|&x| rat(x)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn set_column(&mut self, j: usize, values: &[Rational]) {
        assert_eq!(values.len(), self.rows);
        for (i, v) in values.iter().enumerate() {
            self[(i, j)] = v.clone();
        }
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = Rational::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += a * b;
                    }
                }
                acc
            })
            .collect()
    }

    pub fn trace(&self) -> Rational {
        (0..self.rows.min(self.cols))
            .map(|i| self[(i, i)].clone())
            .fold(Rational::zero(), |a, b| a + b)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let x = &self[(i, j)];
                    if i == j {
                        x.is_one()
                    } else {
                        x.is_zero()
                    }
                })
            })
    }

    /// Rank via fraction-free elimination.
    pub fn rank(&self) -> usize {
        bareiss_rank(self)
    }

    pub fn nullity(&self) -> usize {
        self.cols - self.rank()
    }

    /// Basis of the right null space `{x : A x = 0}`.
    pub fn null_space(&self) -> Vec<Vec<Rational>> {
        let mut ech = RowEchelon::new(self.cols);
        for i in 0..self.rows {
            ech.insert(self.row(i).to_vec());
        }
        ech.null_space()
    }

    /// Block matrix assembled from a grid of equally sized blocks.
    pub fn from_blocks(blocks: &[Vec<Matrix>]) -> Matrix {
        let br = blocks.len();
        let bc = blocks.first().map_or(0, Vec::len);
        if br == 0 || bc == 0 {
            return Matrix::zeros(0, 0);
        }
        let h = blocks[0][0].rows;
        let w = blocks[0][0].cols;
        let mut out = Matrix::zeros(br * h, bc * w);
        for (bi, row) in blocks.iter().enumerate() {
            assert_eq!(row.len(), bc);
            for (bj, block) in row.iter().enumerate() {
                assert!(block.rows == h && block.cols == w);
                for i in 0..h {
                    for j in 0..w {
                        out[(bi * h + i, bj * w + j)] = block[(i, j)].clone();
                    }
                }
            }
        }
        out
    }

    pub fn to_strings(&self) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(format_rational).collect())
            .collect()
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Rational;

    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for row in self.to_strings() {
            writeln!(f, "  {}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

/// Clears the denominators of a rational row, returning integers.
fn integral_row(row: &[Rational]) -> Vec<BigInt> {
    let lcm = row
        .iter()
        .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    row.iter()
        .map(|q| q.numer() * (&lcm / q.denom()))
        .collect()
}

/// Bareiss fraction-free elimination; returns the rank.
fn bareiss_rank(m: &Matrix) -> usize {
    let mut a: Vec<Vec<BigInt>> = (0..m.rows).map(|i| integral_row(m.row(i))).collect();
    let rows = m.rows;
    let cols = m.cols;
    let mut prev = BigInt::one();
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        for r in rank + 1..rows {
            for c in col + 1..cols {
                let v = (&a[rank][col] * &a[r][c] - &a[r][col] * &a[rank][c]) / &prev;
                a[r][c] = v;
            }
            a[r][col] = BigInt::zero();
        }
        prev = a[rank][col].clone();
        rank += 1;
    }
    rank
}

/// Reduced row echelon form maintained under insertion.
///
/// Rows are kept sorted by pivot column, each pivot normalized to one and
/// cleared from every other row.
#[derive(Clone, Debug)]
pub struct RowEchelon {
    width: usize,
    rows: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
}

impl RowEchelon {
    pub fn new(width: usize) -> Self {
        Self {
            width,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    /// Columns without a pivot, in increasing order.
    pub fn free_columns(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.width];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.width).filter(|&c| !is_pivot[c]).collect()
    }

    /// Reduces `v` modulo the current row space; the result vanishes on every
    /// pivot column.
    pub fn reduce(&self, mut v: Vec<Rational>) -> Vec<Rational> {
        assert_eq!(v.len(), self.width);
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let f = v[p].clone();
            for (x, r) in v.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x -= &f * r;
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.reduce(v.to_vec()).iter().all(Zero::is_zero)
    }

    /// Adds `v` to the spanning set. Returns whether the rank grew.
    pub fn insert(&mut self, v: Vec<Rational>) -> bool {
        let mut v = self.reduce(v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let lead = v[p].clone();
        for x in v.iter_mut() {
            if !x.is_zero() {
                *x /= &lead;
            }
        }
        for row in self.rows.iter_mut() {
            if row[p].is_zero() {
                continue;
            }
            let f = row[p].clone();
            for (x, r) in row.iter_mut().zip(&v) {
                if !r.is_zero() {
                    *x -= &f * r;
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, v);
        true
    }

    /// Coordinates of `v` (which must lie in the row space) in the echelon basis.
    pub fn coordinates(&self, v: &[Rational]) -> Option<Vec<Rational>> {
        let coords: Vec<Rational> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut recon = vec![Rational::zero(); self.width];
        for (c, row) in coords.iter().zip(&self.rows) {
            if c.is_zero() {
                continue;
            }
            for (x, r) in recon.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x += c * r;
                }
            }
        }
        (recon == v).then_some(coords)
    }

    /// Basis of `{x : r · x = 0 for every row r}`.
    pub fn null_space(&self) -> Vec<Vec<Rational>> {
        self.free_columns()
            .into_iter()
            .map(|f| {
                let mut x = vec![Rational::zero(); self.width];
                x[f] = Rational::one();
                for (row, &p) in self.rows.iter().zip(&self.pivots) {
                    x[p] = -row[f].clone();
                }
                x
            })
            .collect()
    }
}

/// Rank of the span of a family of vectors of common length `width`.
pub fn span_rank<I>(width: usize, vectors: I) -> usize
where
    I: IntoIterator<Item = Vec<Rational>>,
{
    let mut ech = RowEchelon::new(width);
    for v in vectors {
        ech.insert(v);
        if ech.rank() == width {
            break;
        }
    }
    ech.rank()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_of_small_matrices() {
        assert_eq!(Matrix::from_i64_rows(&[&[1, 2], &[2, 4]]).rank(), 1);
        assert_eq!(Matrix::from_i64_rows(&[&[0, 0], &[0, 0]]).rank(), 0);
        assert_eq!(Matrix::identity(4).rank(), 4);
        let m = Matrix::from_i64_rows(&[&[2, -1, 0], &[-1, 2, -1], &[0, -1, 2]]);
        assert_eq!(m.rank(), 3);
        assert_eq!(Matrix::from_i64_rows(&[&[1, 0], &[0, 1], &[1, 1]]).rank(), 2);
    }

    #[test]
    fn rank_with_fractions() {
        let m = Matrix::from_rows(vec![
            vec![ratio(1, 2), ratio(1, 3)],
            vec![ratio(3, 2), rat(1)],
        ]);
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn echelon_reduces_and_reports_coordinates() {
        let mut e = RowEchelon::new(3);
        assert!(e.insert(vec![rat(1), rat(1), rat(0)]));
        assert!(e.insert(vec![rat(0), rat(1), rat(1)]));
        assert!(!e.insert(vec![rat(1), rat(2), rat(1)]));
        assert_eq!(e.rank(), 2);
        assert_eq!(e.free_columns(), vec![2]);
        let v = vec![rat(2), rat(3), rat(1)];
        let c = e.coordinates(&v).unwrap();
        assert_eq!(c, vec![rat(2), rat(3)]);
        assert!(e.coordinates(&[rat(0), rat(0), rat(1)]).is_none());
    }

    #[test]
    fn null_space_is_annihilated() {
        let m = Matrix::from_i64_rows(&[&[1, 2, 3], &[2, 4, 6]]);
        let ns = m.null_space();
        assert_eq!(ns.len(), 2);
        for x in ns {
            assert!(m.mul_vec(&x).iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn formats_rationals() {
        assert_eq!(format_rational(&ratio(-3, 6)), "-1/2");
        assert_eq!(format_rational(&rat(4)), "4");
    }

    proptest::proptest! {
        #[test]
        fn bareiss_rank_matches_echelon_rank(entries in proptest::collection::vec(-3i64..4, 12)) {
            let rows: Vec<Vec<Rational>> = entries.chunks(4).map(|c| c.iter().map(|&x| rat(x)).collect()).collect();
            let m = Matrix::from_rows(rows.clone());
            proptest::prop_assert_eq!(m.rank(), span_rank(4, rows));
            proptest::prop_assert_eq!(m.rank(), m.transpose().rank());
        }
    }
}
