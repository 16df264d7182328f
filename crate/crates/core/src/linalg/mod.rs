//! Exact scalar arithmetic and the dense linear-algebra kernels used by every
//! other module.
//!
//! Scalars are [`Rational`] (arbitrary precision, always reduced). Number-field
//! arithmetic is provided for eigenvalue computations whose roots are not
//! rational; both fields implement [`Field`] so that row reduction and kernels
//! are written once.

mod factor;
mod matrix;
mod numberfield;
mod subspace;
mod unipoly;

pub use factor::{factor_bounded, Factorization};
pub use matrix::QMatrix;
pub use numberfield::{nf_kernel, NfElem, NumberField};
pub use subspace::Subspace;
pub(crate) use subspace::unit;
pub use unipoly::UniPoly;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

/// Exact rational scalar. Always stored in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("number-field modulus is reducible: zero divisor encountered")]
    ModulusReducible,
    #[error("number-field modulus must be monic of degree 1..=4, got degree {0}")]
    BadModulus(usize),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
}

/// A field whose elements can be manipulated exactly.
///
/// The field value carries whatever context the elements need (for the
/// rationals nothing, for a number field its modulus).
pub trait Field {
    type Elem: Clone + PartialEq + std::fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// Inverse of a nonzero element. Fails only when the field is not
    /// actually a field (reducible modulus).
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem, LinalgError>;
    fn from_rational(&self, q: &Rational) -> Self::Elem;
}

/// The field of rational numbers.
#[derive(Debug, Clone, Copy, Default)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = Rational;

    fn zero(&self) -> Rational {
        Rational::zero()
    }
    fn one(&self) -> Rational {
        Rational::one()
    }
    fn is_zero(&self, a: &Rational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &Rational, b: &Rational) -> Rational {
        a + b
    }
    fn sub(&self, a: &Rational, b: &Rational) -> Rational {
        a - b
    }
    fn mul(&self, a: &Rational, b: &Rational) -> Rational {
        a * b
    }
    fn neg(&self, a: &Rational) -> Rational {
        -a
    }
    fn inv(&self, a: &Rational) -> Result<Rational, LinalgError> {
        Ok(a.recip())
    }
    fn from_rational(&self, q: &Rational) -> Rational {
        q.clone()
    }
}

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Canonical text rendering: `p/q`, or `p` when the denominator is 1.
pub fn render_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(Rational::new(n, d))
            }
        }
        None => s.parse::<BigInt>().ok().map(Rational::from_integer),
    }
}

/// Brings `rows` to reduced row-echelon form in place, over any field.
/// Zero rows are dropped; returns the pivot columns.
pub fn row_reduce<F: Field>(
    field: &F,
    rows: &mut Vec<Vec<F::Elem>>,
    ncols: usize,
) -> Result<Vec<usize>, LinalgError> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !field.is_zero(&rows[i][c])) else {
            continue;
        };
        rows.swap(r, p);
        let inv = field.inv(&rows[r][c])?;
        for x in rows[r].iter_mut() {
            if !field.is_zero(x) {
                *x = field.mul(x, &inv);
            }
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || field.is_zero(&row[c]) {
                continue;
            }
            let factor = row[c].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                if !field.is_zero(p) {
                    *x = field.sub(x, &field.mul(&factor, p));
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    Ok(pivots)
}

/// Basis of `{v : M v = 0}` where `M` is given by its rows. The basis is
/// returned in reduced row-echelon form.
pub fn kernel_basis<F: Field>(
    field: &F,
    rows: &[Vec<F::Elem>],
    ncols: usize,
) -> Result<Vec<Vec<F::Elem>>, LinalgError> {
    let mut reduced = rows.to_vec();
    let pivots = row_reduce(field, &mut reduced, ncols)?;
    let mut is_pivot = vec![false; ncols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![field.zero(); ncols];
        v[free] = field.one();
        for (row, &p) in reduced.iter().zip(&pivots) {
            if !field.is_zero(&row[free]) {
                v[p] = field.neg(&row[free]);
            }
        }
        basis.push(v);
    }
    row_reduce(field, &mut basis, ncols)?;
    Ok(basis)
}

pub(crate) fn is_zero_vec(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}
