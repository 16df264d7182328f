use num_traits::{One, Zero};

use super::{is_zero_vec, kernel_basis, row_reduce, Rational, Rationals};

/// A linear subspace of `Q^ambient`, held as a reduced row-echelon basis.
///
/// The RREF basis is canonical, so two subspaces are equal exactly when their
/// bases are equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        let basis = (0..ambient).map(|i| unit(ambient, i)).collect();
        Subspace { ambient, basis, pivots: (0..ambient).collect() }
    }

    pub fn span<I>(ambient: usize, vectors: I) -> Self
    where
        I: IntoIterator<Item = Vec<Rational>>,
    {
        let mut rows: Vec<Vec<Rational>> = vectors.into_iter().filter(|v| !is_zero_vec(v)).collect();
        for v in &rows {
            assert_eq!(v.len(), ambient, "vector length does not match ambient dimension");
        }
        let pivots = row_reduce(&Rationals, &mut rows, ambient).expect("rationals never fail");
        Subspace { ambient, basis: rows, pivots }
    }

    pub(crate) fn from_rref_unchecked(ambient: usize, basis: Vec<Vec<Rational>>) -> Self {
        let pivots = basis
            .iter()
            .map(|row| row.iter().position(|x| !x.is_zero()).expect("nonzero basis row"))
            .collect();
        Subspace { ambient, basis, pivots }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// `v` minus its reduction against the basis; zero iff `v` is in the span.
    pub fn residual(&self, v: &[Rational]) -> Vec<Rational> {
        let mut r = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if r[p].is_zero() {
                continue;
            }
            let f = r[p].clone();
            for (x, b) in r.iter_mut().zip(row) {
                if !b.is_zero() {
                    *x -= &f * b;
                }
            }
        }
        r
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        is_zero_vec(&self.residual(v))
    }

    /// Coordinates of `v` in the RREF basis, or `None` if `v` is outside.
    pub fn coordinates(&self, v: &[Rational]) -> Option<Vec<Rational>> {
        let coords: Vec<Rational> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut rebuilt = vec![Rational::zero(); self.ambient];
        for (c, row) in coords.iter().zip(&self.basis) {
            if c.is_zero() {
                continue;
            }
            for (x, b) in rebuilt.iter_mut().zip(row) {
                *x += c * b;
            }
        }
        (rebuilt.as_slice() == v).then_some(coords)
    }

    /// Adds `v` to the span, keeping the basis reduced. Returns whether the
    /// dimension grew.
    pub fn insert(&mut self, v: &[Rational]) -> bool {
        let mut r = self.residual(v);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = r[p].recip();
        for x in r.iter_mut() {
            *x *= &inv;
        }
        for row in self.basis.iter_mut() {
            if row[p].is_zero() {
                continue;
            }
            let f = row[p].clone();
            for (x, b) in row.iter_mut().zip(&r) {
                if !b.is_zero() {
                    *x -= &f * b;
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.basis.insert(at, r);
        true
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut out = self.clone();
        for v in &other.basis {
            out.insert(v);
        }
        out
    }

    pub fn intersect(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        // a·A = b·B: kernel of the stacked transpose system
        let (da, db) = (self.dim(), other.dim());
        if da == 0 || db == 0 {
            return Subspace::zero(self.ambient);
        }
        let rows: Vec<Vec<Rational>> = (0..self.ambient)
            .map(|k| {
                self.basis
                    .iter()
                    .map(|v| v[k].clone())
                    .chain(other.basis.iter().map(|v| -&v[k]))
                    .collect()
            })
            .collect();
        let ker = kernel_basis(&Rationals, &rows, da + db).expect("rationals never fail");
        Subspace::span(
            self.ambient,
            ker.into_iter().map(|coeffs| combine(&self.basis, &coeffs[..da], self.ambient)),
        )
    }
}

pub(crate) fn unit(n: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); n];
    v[i] = Rational::one();
    v
}

pub(crate) fn combine(vectors: &[Vec<Rational>], coeffs: &[Rational], ambient: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); ambient];
    for (c, v) in coeffs.iter().zip(vectors) {
        if c.is_zero() {
            continue;
        }
        for (x, y) in out.iter_mut().zip(v) {
            if !y.is_zero() {
                *x += c * y;
            }
        }
    }
    out
}
