//! Lie algebras of square rational matrices under the commutator.

use num_traits::Zero;
use thiserror::Error;

use crate::linalg::{QMatrix, Rational, Subspace};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LieError {
    #[error("span is not closed under the bracket")]
    NotClosed,
    #[error("matrices must all be {0}x{0}")]
    Shape(usize),
}

/// A bracket-closed span of `size × size` matrices. The basis is the RREF of
/// the row-major vectorizations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixLieAlgebra {
    size: usize,
    span: Subspace,
}

impl MatrixLieAlgebra {
    /// Validates closure; use [`close_under_bracket`] to generate instead.
    pub fn new(size: usize, matrices: &[QMatrix]) -> Result<Self, LieError> {
        let span = flat_span(size, matrices)?;
        let l = MatrixLieAlgebra { size, span };
        let basis = l.basis();
        for x in &basis {
            for y in &basis {
                if !l.span.contains(x.commutator(y).as_flat()) {
                    return Err(LieError::NotClosed);
                }
            }
        }
        Ok(l)
    }

    pub fn zero(size: usize) -> Self {
        MatrixLieAlgebra { size, span: Subspace::zero(size * size) }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn dim(&self) -> usize {
        self.span.dim()
    }

    pub fn basis(&self) -> Vec<QMatrix> {
        self.span.basis().iter().map(|v| QMatrix::from_flat(self.size, self.size, v.clone())).collect()
    }

    pub fn contains(&self, x: &QMatrix) -> bool {
        self.span.contains(x.as_flat())
    }

    pub fn is_subalgebra_of(&self, other: &MatrixLieAlgebra) -> bool {
        other.span.contains_subspace(&self.span)
    }

    pub fn is_abelian(&self) -> bool {
        let b = self.basis();
        b.iter().all(|x| b.iter().all(|y| x.commutator(y).is_zero()))
    }

    /// `[L, L]`.
    pub fn derived(&self) -> MatrixLieAlgebra {
        self.bracket_with(self)
    }

    /// Span of `[x, y]` for `x ∈ self`, `y ∈ other`. An ideal when `other` is
    /// an ideal of `self` or vice versa.
    pub fn bracket_with(&self, other: &MatrixLieAlgebra) -> MatrixLieAlgebra {
        let mut span = Subspace::zero(self.size * self.size);
        let (a, b) = (self.basis(), other.basis());
        for x in &a {
            for y in &b {
                span.insert(x.commutator(y).as_flat());
            }
        }
        MatrixLieAlgebra { size: self.size, span }
    }

    /// `dim L^{(0)}, dim L^{(1)}, ...` until the dimension stops changing.
    pub fn derived_series(&self) -> Vec<usize> {
        self.derived_chain().iter().map(MatrixLieAlgebra::dim).collect()
    }

    /// The last term of the derived series, `[S, S] = S`.
    pub fn perfect_core(&self) -> MatrixLieAlgebra {
        self.derived_chain().pop().expect("chain starts with self")
    }

    pub fn is_solvable(&self) -> bool {
        self.perfect_core().dim() == 0
    }

    /// `dim L, dim [L,L], dim [L,[L,L]], ...` until the dimension stops changing.
    pub fn lower_central_series(&self) -> Vec<usize> {
        let mut dims = vec![self.dim()];
        let mut current = self.clone();
        while current.dim() > 0 {
            let next = self.bracket_with(&current);
            if next.dim() == current.dim() {
                break;
            }
            dims.push(next.dim());
            current = next;
        }
        dims
    }

    pub fn is_nilpotent(&self) -> bool {
        self.lower_central_series().last() == Some(&0)
    }

    /// `ad x` on `L` in the basis of [`MatrixLieAlgebra::basis`].
    pub fn ad(&self, x: &QMatrix) -> QMatrix {
        let cols: Vec<Vec<Rational>> = self
            .basis()
            .iter()
            .map(|b| self.span.coordinates(x.commutator(b).as_flat()).expect("x lies in L"))
            .collect();
        if cols.is_empty() {
            return QMatrix::zeros(0, 0);
        }
        QMatrix::from_rows(cols).transpose()
    }

    /// Gram matrix of `κ(x, y) = tr(ad x · ad y)` on the basis.
    pub fn killing_form(&self) -> QMatrix {
        let ads: Vec<QMatrix> = self.basis().iter().map(|x| self.ad(x)).collect();
        let d = ads.len();
        let mut rows = vec![vec![Rational::zero(); d]; d];
        for i in 0..d {
            for j in i..d {
                let v = ads[i].trace_of_product(&ads[j]);
                rows[j][i] = v.clone();
                rows[i][j] = v;
            }
        }
        if d == 0 {
            return QMatrix::zeros(0, 0);
        }
        QMatrix::from_rows(rows)
    }

    pub fn killing_form_nondegenerate(&self) -> bool {
        let k = self.killing_form();
        k.rank() == k.rows()
    }

    /// Kernel of the Killing form as a subalgebra. For a perfect algebra this
    /// is its solvable radical, and the quotient is semisimple.
    pub fn killing_kernel(&self) -> MatrixLieAlgebra {
        let k = self.killing_form();
        let basis = self.basis();
        let mut span = Subspace::zero(self.size * self.size);
        if !basis.is_empty() {
            for c in k.kernel().basis() {
                let x = basis.iter().zip(c).fold(QMatrix::zeros(self.size, self.size), |acc, (b, c)| acc.add(&b.scale(c)));
                span.insert(x.as_flat());
            }
        }
        MatrixLieAlgebra { size: self.size, span }
    }

    fn derived_chain(&self) -> Vec<MatrixLieAlgebra> {
        let mut chain = vec![self.clone()];
        loop {
            let last = chain.last().expect("nonempty");
            if last.dim() == 0 {
                return chain;
            }
            let next = last.derived();
            if next.dim() == last.dim() {
                return chain;
            }
            chain.push(next);
        }
    }
}

/// Smallest bracket-closed span containing `matrices`.
pub fn close_under_bracket(size: usize, matrices: &[QMatrix]) -> Result<MatrixLieAlgebra, LieError> {
    let mut span = flat_span(size, matrices)?;
    loop {
        let basis: Vec<QMatrix> = span.basis().iter().map(|v| QMatrix::from_flat(size, size, v.clone())).collect();
        let before = span.dim();
        for (i, x) in basis.iter().enumerate() {
            for y in &basis[i + 1..] {
                span.insert(x.commutator(y).as_flat());
            }
        }
        if span.dim() == before {
            return Ok(MatrixLieAlgebra { size, span });
        }
    }
}

/// Cartan's criterion: `tr(ad x · ad y) = 0` for `x ∈ L`, `y ∈ [L, L]`.
pub fn cartan_solvable(l: &MatrixLieAlgebra) -> bool {
    let d = l.derived();
    let ad_l: Vec<QMatrix> = l.basis().iter().map(|x| l.ad(x)).collect();
    d.basis().iter().all(|y| {
        let ad_y = l.ad(y);
        ad_l.iter().all(|ad_x| ad_x.trace_of_product(&ad_y).is_zero())
    })
}

/// `Some(λ_i)` with `X_i = λ_i·I` for every input matrix, else `None`.
pub fn is_scalar_image(matrices: &[QMatrix]) -> Option<Vec<Rational>> {
    matrices.iter().map(QMatrix::scalar_multiple_of_identity).collect()
}

fn flat_span(size: usize, matrices: &[QMatrix]) -> Result<Subspace, LieError> {
    if matrices.iter().any(|m| m.rows() != size || m.cols() != size) {
        return Err(LieError::Shape(size));
    }
    Ok(Subspace::span(size * size, matrices.iter().map(|m| m.as_flat().to_vec())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::LocalAlgebra;
    use crate::catalog::{chain, example};
    use crate::derivations::DerivationSpace;
    use crate::linalg::rat;
    use proptest::prelude::*;

    fn m(rows: &[&[i64]]) -> QMatrix {
        QMatrix::from_i64(rows)
    }

    fn der_algebra(name: &str) -> (DerivationSpace, MatrixLieAlgebra) {
        let d = DerivationSpace::new(&LocalAlgebra::from_presentation(&example(name).unwrap()).unwrap());
        let l = MatrixLieAlgebra::new(d.ambient(), d.basis()).unwrap();
        (d, l)
    }

    #[test]
    fn sl2_is_generated_by_e_and_f() {
        let e = m(&[&[0, 1], &[0, 0]]);
        let f = m(&[&[0, 0], &[1, 0]]);
        let l = close_under_bracket(2, &[e.clone(), f]).unwrap();
        assert_eq!(l.dim(), 3);
        assert!(l.contains(&m(&[&[1, 0], &[0, -1]])));
        assert_eq!(l.lower_central_series(), [3]);
        assert!(!l.is_nilpotent());
        assert!(!l.is_solvable());
        assert!(!cartan_solvable(&l));
        assert!(l.killing_form_nondegenerate());

        let single = close_under_bracket(2, &[e]).unwrap();
        assert_eq!(single.dim(), 1);
        assert!(single.is_abelian());
    }

    #[test]
    fn rejects_unclosed_span() {
        let e = m(&[&[0, 1], &[0, 0]]);
        let f = m(&[&[0, 0], &[1, 0]]);
        assert_eq!(MatrixLieAlgebra::new(2, &[e, f]), Err(LieError::NotClosed));
    }

    #[test]
    fn strictly_upper_triangular_is_nilpotent() {
        let l = MatrixLieAlgebra::new(
            3,
            &[m(&[&[0, 1, 0], &[0, 0, 0], &[0, 0, 0]]), m(&[&[0, 0, 1], &[0, 0, 0], &[0, 0, 0]]), m(&[&[0, 0, 0], &[0, 0, 1], &[0, 0, 0]])],
        )
        .unwrap();
        assert_eq!(l.lower_central_series(), [3, 1, 0]);
        assert!(l.is_nilpotent());
        assert!(cartan_solvable(&l));
    }

    #[test]
    fn abelian_series() {
        let l = MatrixLieAlgebra::new(2, &[QMatrix::identity(2), m(&[&[0, 1], &[0, 0]])]).unwrap();
        assert_eq!(l.derived_series(), [2, 0]);
        assert!(cartan_solvable(&l));
        assert!(MatrixLieAlgebra::zero(3).is_solvable());
        assert!(cartan_solvable(&MatrixLieAlgebra::zero(3)));
    }

    #[test]
    fn example5_contains_a_simple_three_dimensional_core() {
        let (d, l) = der_algebra("example5");
        assert_eq!(l.dim(), 7);
        // the β block is an so3-module, so it survives every bracket
        assert_eq!(l.derived_series(), [7, 6]);
        assert!(!l.is_solvable());
        assert!(!cartan_solvable(&l));
        let core = l.perfect_core();
        assert!(!core.is_abelian());
        assert_eq!(core.killing_form().rank(), 3);
        let radical = core.killing_kernel();
        assert_eq!(radical.dim(), 3);
        assert!(radical.is_abelian());
        let rep_kernel = MatrixLieAlgebra::new(d.ambient(), d.rep_kernel().basis()).unwrap();
        assert_eq!(radical, rep_kernel);

        let image = close_under_bracket(d.q(), &d.rho_image()).unwrap();
        let so3 = image.perfect_core();
        assert_eq!(so3.dim(), 3);
        assert!(so3.killing_form_nondegenerate());
        assert!(so3.basis().iter().all(|x| x.transpose() == x.scale(&rat(-1))));
    }

    #[test]
    fn example4_and_example3_are_solvable() {
        for name in ["example3", "example4"] {
            let (_, l) = der_algebra(name);
            assert!(l.is_solvable(), "{name}");
            assert!(cartan_solvable(&l), "{name}");
        }
    }

    #[test]
    fn scalar_images() {
        let (d, _) = der_algebra("example3");
        assert!(is_scalar_image(&d.rho_image()).is_some());
        let (d, _) = der_algebra("example4");
        assert!(is_scalar_image(&d.rho_image()).is_none());
        assert_eq!(is_scalar_image(&[]), Some(vec![]));
        assert_eq!(is_scalar_image(&[QMatrix::identity(2).scale(&rat(3))]), Some(vec![rat(3)]));
    }

    #[test]
    fn example3_annihilator_has_nilpotent_image() {
        let (d, _) = der_algebra("example3");
        let ann = d.socle_annihilator();
        let rho: Vec<QMatrix> = ann.basis().iter().map(|x| d.rho(x)).collect();
        let image = close_under_bracket(d.q(), &rho).unwrap();
        assert!(image.is_nilpotent());
    }

    #[test]
    fn subalgebras_of_solvable_algebras_are_solvable() {
        for name in ["example2", "example3", "example4"] {
            let (d, l) = der_algebra(name);
            for sub in [d.socle_annihilator(), d.rep_kernel()] {
                let s = MatrixLieAlgebra::new(d.ambient(), sub.basis()).unwrap();
                assert!(s.is_subalgebra_of(&l));
                assert!(s.is_solvable());
            }
        }
        let d = DerivationSpace::new(&LocalAlgebra::from_presentation(&chain(6)).unwrap());
        let rk = MatrixLieAlgebra::new(d.ambient(), d.rep_kernel().basis()).unwrap();
        assert!(rk.is_solvable());
    }

    fn gl_entry(n: usize, i: usize, j: usize, c: i64) -> QMatrix {
        let mut rows = vec![vec![rat(0); n]; n];
        rows[i][j] = rat(c);
        QMatrix::from_rows(rows)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn derived_series_agrees_with_cartan(gens in prop::collection::vec((0usize..3, 0usize..3, -2i64..=2), 1..4)) {
            let mats: Vec<QMatrix> = gens.iter().map(|&(i, j, c)| gl_entry(3, i, j, c)).collect();
            let l = close_under_bracket(3, &mats).unwrap();
            prop_assert_eq!(l.is_solvable(), cartan_solvable(&l));
            let ds = l.derived_series();
            prop_assert!(ds.windows(2).all(|w| w[1] < w[0]));
            let lcs = l.lower_central_series();
            prop_assert!(lcs.windows(2).all(|w| w[1] < w[0]));
        }
    }
}
