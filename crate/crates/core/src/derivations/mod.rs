//! The Lie algebra `Der(A)`, realized inside `gl(m)`.
//!
//! All matrices act on `m` in the adapted frame of [`LocalAlgebra::cotangent`]
//! and are written with columns as images: column `b` holds the coordinates
//! of `ξ(a_b)`. The top-left `q × q` block is `ρ(ξ)` on `V = m/m^2`.

use std::sync::Arc;

use num_traits::Zero;

use crate::algebra::{Cotangent, LocalAlgebra};
use crate::linalg::{kernel_basis, QMatrix, Rational, Rationals, Subspace};
use crate::poly::MultiPoly;

#[derive(Debug)]
struct Context {
    algebra: LocalAlgebra,
    cotangent: Cotangent,
    socle: Subspace,
}

#[derive(Debug, Clone)]
pub struct DerivationSpace {
    ctx: Arc<Context>,
    basis: Vec<QMatrix>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedRep {
    pub source: QMatrix,
    pub rho: QMatrix,
}

impl DerivationSpace {
    pub fn new(a: &LocalAlgebra) -> Self {
        let (algebra, cotangent) = a.adapted();
        let socle = restrict_to_m(&algebra.socle());
        let k = algebra.dim() - 1;
        let table = algebra.structure_tensor();
        // unknown X[a][b] at a*k + b; structure constants of m shifted by one
        let c = |i: usize, j: usize, p: usize| &table[i + 1][j + 1][p + 1];
        let mut rows = Vec::new();
        for i in 0..k {
            for j in i..k {
                for o in 0..k {
                    let mut row = vec![Rational::zero(); k * k];
                    for p in 0..k {
                        row[o * k + p] += c(i, j, p);
                    }
                    for a in 0..k {
                        row[a * k + i] -= c(a, j, o);
                        row[a * k + j] -= c(i, a, o);
                    }
                    if row.iter().any(|x| !x.is_zero()) {
                        rows.push(row);
                    }
                }
            }
        }
        let basis = kernel_basis(&Rationals, &rows, k * k)
            .expect("rationals form a field")
            .into_iter()
            .map(|v| QMatrix::from_flat(k, k, v))
            .collect();
        DerivationSpace { ctx: Arc::new(Context { algebra, cotangent, socle }), basis }
    }

    /// The algebra in the adapted basis these matrices are written in.
    pub fn algebra(&self) -> &LocalAlgebra {
        &self.ctx.algebra
    }

    pub fn cotangent(&self) -> &Cotangent {
        &self.ctx.cotangent
    }

    pub fn q(&self) -> usize {
        self.ctx.cotangent.q
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[QMatrix] {
        &self.basis
    }

    /// Size of the matrices, `n − 1`.
    pub fn ambient(&self) -> usize {
        self.ctx.algebra.dim() - 1
    }

    /// `Soc(A)` in coordinates of the adapted frame of `m`.
    pub fn socle(&self) -> &Subspace {
        &self.ctx.socle
    }

    pub fn combination(&self, coeffs: &[Rational]) -> QMatrix {
        let k = self.ambient();
        self.basis.iter().zip(coeffs).fold(QMatrix::zeros(k, k), |acc, (b, c)| acc.add(&b.scale(c)))
    }

    pub fn contains(&self, x: &QMatrix) -> bool {
        self.span().contains(x.as_flat())
    }

    pub fn span(&self) -> Subspace {
        let k = self.ambient();
        Subspace::span(k * k, self.basis.iter().map(|b| b.as_flat().to_vec()))
    }

    pub fn rho(&self, x: &QMatrix) -> QMatrix {
        x.top_left(self.q(), self.q())
    }

    pub fn induced_rep(&self, x: &QMatrix) -> InducedRep {
        InducedRep { source: x.clone(), rho: self.rho(x) }
    }

    pub fn rho_image(&self) -> Vec<QMatrix> {
        self.basis.iter().map(|b| self.rho(b)).collect()
    }

    /// `ξ` on `Soc(A)` in the socle's own basis.
    pub fn socle_action(&self, x: &QMatrix) -> QMatrix {
        let soc = &self.ctx.socle;
        let cols: Vec<Vec<Rational>> = soc
            .basis()
            .iter()
            .map(|s| soc.coordinates(&x.mul_vec(s)).expect("derivations preserve the socle"))
            .collect();
        QMatrix::from_rows(cols).transpose()
    }

    /// The single entry of [`DerivationSpace::socle_action`] for Gorenstein algebras.
    pub fn socle_scalar(&self, x: &QMatrix) -> Option<Rational> {
        let m = self.socle_action(x);
        (m.rows() == 1).then(|| m[(0, 0)].clone())
    }

    /// `{ξ : ξ(Soc(A)) = 0}`.
    pub fn socle_annihilator(&self) -> DerivationSpace {
        let soc = self.ctx.socle.clone();
        self.subspace_where(move |x| soc.basis().iter().flat_map(|s| x.mul_vec(s)).collect())
    }

    /// `{ξ : ρ(ξ) = 0}`, the derivations sending `m` into `m^2`.
    pub fn rep_kernel(&self) -> DerivationSpace {
        let q = self.q();
        self.subspace_where(move |x| x.top_left(q, q).as_flat().to_vec())
    }

    /// Independent Leibniz check on all pairs of the full basis `1, a_1, ...`.
    pub fn is_derivation(&self, x: &QMatrix) -> bool {
        let alg = &self.ctx.algebra;
        let n = alg.dim();
        if x.rows() != n - 1 || x.cols() != n - 1 {
            return false;
        }
        let apply = |v: &[Rational]| {
            let mut out = vec![Rational::zero(); n];
            out[1..].clone_from_slice(&x.mul_vec(&v[1..]));
            out
        };
        let e = |i: usize| crate::linalg::unit(n, i);
        for i in 0..n {
            for j in 0..n {
                let lhs = apply(&alg.mul(&e(i), &e(j)));
                let mut rhs = alg.mul(&apply(&e(i)), &e(j));
                for (r, t) in rhs.iter_mut().zip(alg.mul(&e(i), &apply(&e(j)))) {
                    *r += t;
                }
                if lhs != rhs {
                    return false;
                }
            }
        }
        true
    }

    /// `ξ(m^i) ⊆ m^i` for every `i`: block-lower-triangular along the levels.
    pub fn preserves_filtration(&self, x: &QMatrix) -> bool {
        let levels = &self.ctx.cotangent.levels;
        (0..x.rows()).all(|a| (0..x.cols()).all(|b| levels[a] >= levels[b] || x[(a, b)].is_zero()))
    }

    pub fn preserves_socle(&self, x: &QMatrix) -> bool {
        self.ctx.socle.basis().iter().all(|s| self.ctx.socle.contains(&x.mul_vec(s)))
    }

    /// Whether `m^{r-1}·ξ(m) = 0` identically in the coordinates of a generic
    /// `m ∈ m`.
    pub fn kills_top_power(&self, x: &QMatrix) -> bool {
        let alg = &self.ctx.algebra;
        let n = alg.dim();
        let k = n - 1;
        let r = alg.nilpotency_index();
        let mut generic = vec![MultiPoly::zero(k); n];
        for (i, g) in generic.iter_mut().enumerate().skip(1) {
            *g = MultiPoly::var(k, i - 1);
        }
        let mut image = vec![MultiPoly::zero(k); n];
        for a in 0..k {
            for b in 0..k {
                let c = &x[(a, b)];
                if !c.is_zero() {
                    image[a + 1].add_assign(&generic[b + 1].scale(c));
                }
            }
        }
        let lower = alg.pow_generic(&generic, r.saturating_sub(1));
        alg.mul_generic(&lower, &image).iter().all(MultiPoly::is_zero)
    }

    /// Restricts to the kernel of a linear condition on derivations.
    fn subspace_where<F>(&self, f: F) -> DerivationSpace
    where
        F: Fn(&QMatrix) -> Vec<Rational>,
    {
        let k = self.ambient();
        let values: Vec<Vec<Rational>> = self.basis.iter().map(&f).collect();
        let width = values.first().map_or(0, Vec::len);
        let rows: Vec<Vec<Rational>> = (0..width).map(|e| values.iter().map(|v| v[e].clone()).collect()).collect();
        let coeffs = kernel_basis(&Rationals, &rows, self.dim()).expect("rationals form a field");
        let sub = Subspace::span(k * k, coeffs.iter().map(|c| self.combination(c).as_flat().to_vec()));
        DerivationSpace {
            ctx: Arc::clone(&self.ctx),
            basis: sub.basis().iter().map(|v| QMatrix::from_flat(k, k, v.clone())).collect(),
        }
    }
}

fn restrict_to_m(s: &Subspace) -> Subspace {
    Subspace::span(s.ambient() - 1, s.basis().iter().map(|v| v[1..].to_vec()))
}
