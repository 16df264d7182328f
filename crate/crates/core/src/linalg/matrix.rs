use std::fmt;
use std::ops::{Index, IndexMut};

use num_traits::{One, Zero};

use super::{kernel_basis, rat, render_rational, row_reduce, Rational, Rationals, Subspace, UniPoly};

/// Dense matrix over the rationals, stored row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMatrix { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    /// Panics if the rows are ragged.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        QMatrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect())
    }

    /// Builds a `rows × cols` matrix from its row-major entries.
    pub fn from_flat(rows: usize, cols: usize, data: Vec<Rational>) -> Self {
        assert_eq!(data.len(), rows * cols);
        QMatrix { rows, cols, data }
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

    /// Row-major entries; this is the vectorization used for spans of matrices.
    pub fn as_flat(&self) -> &[Rational] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
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

    pub fn mul(&self, other: &QMatrix) -> QMatrix {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
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
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    pub fn add(&self, other: &QMatrix) -> QMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        QMatrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &QMatrix) -> QMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        QMatrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, c: &Rational) -> QMatrix {
        let data = self.data.iter().map(|a| a * c).collect();
        QMatrix { rows: self.rows, cols: self.cols, data }
    }

    /// `self·other − other·self`.
    pub fn commutator(&self, other: &QMatrix) -> QMatrix {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn trace(&self) -> Rational {
        assert!(self.is_square());
        (0..self.rows).fold(Rational::zero(), |acc, i| acc + &self[(i, i)])
    }

    /// `tr(self · other)` without forming the product.
    pub fn trace_of_product(&self, other: &QMatrix) -> Rational {
        assert_eq!((self.rows, self.cols), (other.cols, other.rows));
        let mut acc = Rational::zero();
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                let b = &other[(k, i)];
                if !a.is_zero() && !b.is_zero() {
                    acc += a * b;
                }
            }
        }
        acc
    }

    pub fn pow(&self, e: usize) -> QMatrix {
        assert!(self.is_square());
        let mut acc = Self::identity(self.rows);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn is_nilpotent(&self) -> bool {
        self.pow(self.rows).is_zero()
    }

    /// Some rational `c` with `self = c·I`, if one exists.
    pub fn scalar_multiple_of_identity(&self) -> Option<Rational> {
        if !self.is_square() {
            return None;
        }
        let c = if self.rows == 0 { Rational::zero() } else { self[(0, 0)].clone() };
        for i in 0..self.rows {
            for j in 0..self.cols {
                let expected = if i == j { &c } else { &Rational::zero() };
                if &self[(i, j)] != expected {
                    return None;
                }
            }
        }
        Some(c)
    }

    /// The unique reduced row-echelon form and the rank. The returned matrix
    /// has the same shape as `self`, with zero rows at the bottom.
    pub fn rref(&self) -> (QMatrix, usize) {
        let mut rows = self.row_vecs();
        let pivots = row_reduce(&Rationals, &mut rows, self.cols).expect("rationals never fail");
        let rank = pivots.len();
        rows.resize(self.rows, vec![Rational::zero(); self.cols]);
        let out = QMatrix { rows: self.rows, cols: self.cols, data: rows.into_iter().flatten().collect() };
        (out, rank)
    }

    pub fn rank(&self) -> usize {
        self.rref().1
    }

    pub fn kernel(&self) -> Subspace {
        let basis = kernel_basis(&Rationals, &self.row_vecs(), self.cols).expect("rationals never fail");
        Subspace::from_rref_unchecked(self.cols, basis)
    }

    pub fn row_space(&self) -> Subspace {
        Subspace::span(self.cols, self.row_vecs())
    }

    pub fn inverse(&self) -> Option<QMatrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        if n == 0 {
            return Some(self.clone());
        }
        let rows: Vec<Vec<Rational>> = (0..n)
            .map(|i| {
                let mut r = self.row(i).to_vec();
                r.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
                r
            })
            .collect();
        let mut rows = rows;
        let pivots = row_reduce(&Rationals, &mut rows, 2 * n).expect("rationals never fail");
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(QMatrix::from_rows(rows.into_iter().map(|r| r[n..].to_vec()).collect()))
    }

    /// Characteristic polynomial `det(λI − M)` by the Faddeev–LeVerrier
    /// recurrence, exact over the rationals.
    pub fn char_poly(&self) -> UniPoly {
        assert!(self.is_square(), "char_poly needs a square matrix");
        let n = self.rows;
        let mut coeffs = vec![Rational::zero(); n + 1];
        coeffs[n] = Rational::one();
        let mut m = QMatrix::zeros(n, n);
        for k in 1..=n {
            // M_k = A·M_{k−1} + c_{n−k+1}·I
            let mut next = self.mul(&m);
            for i in 0..n {
                next[(i, i)] += &coeffs[n - k + 1];
            }
            m = next;
            coeffs[n - k] = -self.trace_of_product(&m) / rat(k as i64);
        }
        UniPoly::new(coeffs)
    }

    /// Evaluates `p(M)` by Horner's scheme.
    pub fn eval_poly(&self, p: &UniPoly) -> QMatrix {
        assert!(self.is_square());
        let n = self.rows;
        let mut acc = QMatrix::zeros(n, n);
        for c in p.coeffs().iter().rev() {
            acc = acc.mul(self);
            for i in 0..n {
                acc[(i, i)] += c;
            }
        }
        acc
    }

    /// Copy of the `rows × cols` block starting at the top-left corner.
    pub fn top_left(&self, rows: usize, cols: usize) -> QMatrix {
        let mut out = QMatrix::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                out[(i, j)] = self[(i, j)].clone();
            }
        }
        out
    }

    pub fn render_rows(&self) -> Vec<Vec<String>> {
        (0..self.rows).map(|i| self.row(i).iter().map(render_rational).collect()).collect()
    }
}

impl Index<(usize, usize)> for QMatrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for QMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.render_rows().iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            write!(f, "{}", row.join(", "))?;
        }
        write!(f, "]")
    }
}
