//! Deciding full null-index: for every nonzero derivation `ξ` and every
//! eigenvalue `λ` of `ρ(ξ)` on `V`, some eigenvector `v ∈ V_λ` has
//! `P_A(v) ≠ 0`.
//!
//! The condition quantifies over infinitely many derivations. The verdict is
//! therefore three-valued: a certificate, a checkable counterexample, or the
//! evidence gathered before giving up.

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::algebra::{AlgebraError, IndexPolynomial, LocalAlgebra};
use crate::derivations::DerivationSpace;
use crate::lie::is_scalar_image;
use crate::linalg::{factor_bounded, nf_kernel, row_reduce, Field, NfElem, NumberField, QMatrix, Rational, Subspace, UniPoly};
use crate::poly::{Monomial, MultiPoly};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NullIndexConfig {
    pub sample_count: usize,
    /// Inclusive integer range for witness-search coefficients.
    pub coeff_range: (i64, i64),
    /// Largest number of lifted basis elements combined at once.
    pub max_terms: usize,
    pub seed: u64,
}

impl Default for NullIndexConfig {
    fn default() -> Self {
        NullIndexConfig { sample_count: 64, coeff_range: (-2, 2), max_terms: 3, seed: 0x5EED }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    /// `dim V = 1`: every nonzero `v` has `P_A(v) = c·v^r ≠ 0`.
    TrivialV,
    /// `ρ(ξ_i) = λ_i·I` for every basis derivation, so `V_λ = V`.
    ScalarImage { scalars: Vec<Rational> },
    /// `ρ(Der A) ⊆ span(I, X)`: the eigenspaces of every `ρ(ξ)` are those of
    /// `X` or all of `V`, and none of `X`'s eigenspaces is killed by `P_A`.
    ExhaustiveEigen { pencil: QMatrix, eigenspaces: Vec<(UniPoly, usize)> },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    /// Coefficients on the derivation basis.
    pub coefficients: Vec<Rational>,
    pub rho: QMatrix,
    /// Minimal polynomial of the eigenvalue; the eigenvalue is `θ` in
    /// `Q[θ]/(minimal_polynomial)`.
    pub minimal_polynomial: UniPoly,
    pub eigenbasis: Vec<Vec<NfElem>>,
}

impl Witness {
    pub fn field(&self) -> NumberField {
        NumberField::new(self.minimal_polynomial.clone()).expect("witness fields are valid")
    }

    /// The eigenvalue when it is rational.
    pub fn rational_eigenvalue(&self) -> Option<Rational> {
        (self.minimal_polynomial.degree() == Some(1)).then(|| -&self.minimal_polynomial.coeffs()[0])
    }

    /// Re-checks everything from scratch: `ρ` is the image of the stated
    /// combination, every basis vector is an eigenvector, the basis spans
    /// the whole eigenspace, and `P_A` vanishes identically on it.
    pub fn verify(&self, d: &DerivationSpace, p: &IndexPolynomial) -> bool {
        if self.coefficients.len() != d.dim() || d.rho(&d.combination(&self.coefficients)) != self.rho {
            return false;
        }
        let Ok(field) = NumberField::new(self.minimal_polynomial.clone()) else {
            return false;
        };
        if !self.rho.char_poly().rem(&self.minimal_polynomial).is_zero() {
            return false;
        }
        let shifted = shifted_rows(&field, &self.rho);
        let q = self.rho.rows();
        for k in &self.eigenbasis {
            if k.len() != q || k.iter().all(|x| field.is_zero(x)) {
                return false;
            }
            for row in &shifted {
                let dot = row.iter().zip(k).fold(field.zero(), |acc, (a, b)| field.add(&acc, &field.mul(a, b)));
                if !field.is_zero(&dot) {
                    return false;
                }
            }
        }
        let mut basis = self.eigenbasis.clone();
        let mut reduced = shifted;
        let (Ok(independent), Ok(rank)) = (row_reduce(&field, &mut basis, q), row_reduce(&field, &mut reduced, q)) else {
            return false;
        };
        independent.len() == self.eigenbasis.len()
            && self.eigenbasis.len() == q - rank.len()
            && p_vanishes_on_eigenspace(&p.poly, &field, &self.eigenbasis)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NullIndexVerdict {
    Full { certificate: Certificate },
    NotFull { witness: Box<Witness> },
    Unknown { samples: usize, combinations: usize, unfactored: usize },
}

impl NullIndexVerdict {
    pub fn is_full(&self) -> bool {
        matches!(self, NullIndexVerdict::Full { .. })
    }

    pub fn is_not_full(&self) -> bool {
        matches!(self, NullIndexVerdict::NotFull { .. })
    }

    pub fn label(&self) -> &'static str {
        match self {
            NullIndexVerdict::Full { certificate: Certificate::TrivialV } => "full(trivial-V)",
            NullIndexVerdict::Full { certificate: Certificate::ScalarImage { .. } } => "full(scalar-image)",
            NullIndexVerdict::Full { certificate: Certificate::ExhaustiveEigen { .. } } => "full(exhaustive-eigen)",
            NullIndexVerdict::NotFull { .. } => "not-full",
            NullIndexVerdict::Unknown { .. } => "unknown",
        }
    }

    /// Re-checks a certificate or witness against the derivations it was
    /// computed from. `Unknown` carries no claim and verifies trivially.
    pub fn verify(&self, d: &DerivationSpace, p: &IndexPolynomial) -> bool {
        match self {
            NullIndexVerdict::Full { certificate: Certificate::TrivialV } => d.q() == 1 && !p.poly.is_zero(),
            NullIndexVerdict::Full { certificate: Certificate::ScalarImage { scalars } } => {
                let q = d.q();
                scalars.len() == d.dim()
                    && d.basis().iter().zip(scalars).all(|(x, l)| d.rho(x) == QMatrix::identity(q).scale(l))
            }
            NullIndexVerdict::Full { certificate: Certificate::ExhaustiveEigen { pencil, eigenspaces } } => {
                let q = d.q();
                let mut span = Subspace::span(q * q, [QMatrix::identity(q).as_flat().to_vec(), pencil.as_flat().to_vec()]);
                let covered = d.rho_image().iter().all(|x| !span.insert(x.as_flat()));
                let fresh = exhaustive_eigen(p, pencil);
                covered && fresh.as_ref() == Some(eigenspaces)
            }
            NullIndexVerdict::NotFull { witness } => witness.verify(d, p),
            NullIndexVerdict::Unknown { .. } => true,
        }
    }
}

/// Runs the cascade on a Gorenstein algebra.
pub fn check_full_null_index(a: &LocalAlgebra, config: &NullIndexConfig) -> Result<NullIndexVerdict, AlgebraError> {
    let p = a.index_polynomial()?;
    let d = DerivationSpace::new(a);
    Ok(verdict(&d, &p, config))
}

/// The cascade, with derivations and `P_A` already at hand.
pub fn verdict(d: &DerivationSpace, p: &IndexPolynomial, config: &NullIndexConfig) -> NullIndexVerdict {
    let q = d.q();
    if q == 1 {
        return NullIndexVerdict::Full { certificate: Certificate::TrivialV };
    }
    let images = d.rho_image();
    if let Some(scalars) = is_scalar_image(&images) {
        return NullIndexVerdict::Full { certificate: Certificate::ScalarImage { scalars } };
    }

    let lifted = lifted_basis(d);
    let mut span = Subspace::span(q * q, [QMatrix::identity(q).as_flat().to_vec()]);
    for &i in &lifted {
        span.insert(images[i].as_flat());
    }
    if span.dim() == 2 {
        let (i, pencil) = images.iter().enumerate().find(|(_, x)| x.scalar_multiple_of_identity().is_none()).expect("non-scalar image");
        match eigen_scan(p, pencil) {
            EigenScan::Killed(minimal_polynomial, eigenbasis) => {
                let mut coefficients = vec![Rational::zero(); d.dim()];
                coefficients[i] = Rational::one();
                let witness = Witness { coefficients, rho: pencil.clone(), minimal_polynomial, eigenbasis };
                return NullIndexVerdict::NotFull { witness: Box::new(witness) };
            }
            EigenScan::Survives(eigenspaces) => {
                return NullIndexVerdict::Full {
                    certificate: Certificate::ExhaustiveEigen { pencil: pencil.clone(), eigenspaces },
                };
            }
            EigenScan::Unfactored => {}
        }
    }

    let combos = combinations(lifted.len(), config);
    let search = combos.par_iter().map(|c| probe(d, p, &lifted, c)).collect::<Vec<_>>();
    let mut unfactored = 0;
    for outcome in search {
        match outcome {
            Probe::Hit(w) => return NullIndexVerdict::NotFull { witness: w },
            Probe::Unfactored => unfactored += 1,
            Probe::Pass => {}
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let samples: Vec<Vec<Rational>> = (0..config.sample_count)
        .map(|_| {
            lifted
                .iter()
                .map(|_| Rational::new(rng.gen_range(-9i64..=9).into(), rng.gen_range(1i64..=4).into()))
                .collect()
        })
        .collect();
    let sampled = samples.par_iter().map(|c| probe(d, p, &lifted, c)).collect::<Vec<_>>();
    for outcome in sampled {
        match outcome {
            Probe::Hit(w) => return NullIndexVerdict::NotFull { witness: w },
            Probe::Unfactored => unfactored += 1,
            Probe::Pass => {}
        }
    }
    NullIndexVerdict::Unknown { samples: config.sample_count, combinations: combos.len(), unfactored }
}

/// Whether `P_A(Σ c_j k_j)` is the zero polynomial in the formal `c_j`,
/// i.e. no vector of the span has `P_A(v) ≠ 0`.
pub fn p_vanishes_on_eigenspace(p: &MultiPoly, field: &NumberField, basis: &[Vec<NfElem>]) -> bool {
    let m = basis.len();
    let d = field.degree();
    let theta = m;
    let nv = m + 1;
    // coordinate i of the generic vector, as a polynomial in c_1..c_m and θ
    let images: Vec<MultiPoly> = (0..p.nvars())
        .map(|i| {
            let mut acc = MultiPoly::zero(nv);
            for (j, k) in basis.iter().enumerate() {
                for (l, c) in k[i].0.iter().enumerate() {
                    if !c.is_zero() {
                        let mut e = vec![0; nv];
                        e[j] = 1;
                        e[theta] = l as u32;
                        acc.add_term(Monomial::from_exponents(e), c.clone());
                    }
                }
            }
            acc
        })
        .collect();
    let expanded = p.substitute(&images);
    reduce_theta(&expanded, theta, field.modulus(), d).is_zero()
}

/// `Σ_i ∂P/∂v_i(v)·(ρ v)_i`, identically zero when `ρ` preserves `P` to first order.
pub fn differential_identity_check(p: &MultiPoly, rho: &QMatrix) -> bool {
    differential_form(p, rho).is_zero()
}

pub fn differential_form(p: &MultiPoly, rho: &QMatrix) -> MultiPoly {
    let q = p.nvars();
    let mut acc = MultiPoly::zero(q);
    for i in 0..q {
        let partial = p.partial_derivative(i);
        let mut image = MultiPoly::zero(q);
        for j in 0..q {
            if !rho[(i, j)].is_zero() {
                image.add_assign(&MultiPoly::var(q, j).scale(&rho[(i, j)]));
            }
        }
        acc.add_assign(&partial.mul(&image));
    }
    acc
}

enum EigenScan {
    Killed(UniPoly, Vec<Vec<NfElem>>),
    Survives(Vec<(UniPoly, usize)>),
    Unfactored,
}

enum Probe {
    Hit(Box<Witness>),
    Unfactored,
    Pass,
}

fn eigen_scan(p: &IndexPolynomial, x: &QMatrix) -> EigenScan {
    let f = factor_bounded(&x.char_poly());
    if !f.is_complete() {
        return EigenScan::Unfactored;
    }
    let mut survived = Vec::new();
    for (factor, _) in &f.factors {
        let Ok(field) = NumberField::new(factor.clone()) else {
            return EigenScan::Unfactored;
        };
        let Ok(basis) = nf_kernel(&field, &shifted_rows(&field, x), x.cols()) else {
            return EigenScan::Unfactored;
        };
        if p_vanishes_on_eigenspace(&p.poly, &field, &basis) {
            return EigenScan::Killed(factor.clone(), basis);
        }
        survived.push((factor.clone(), basis.len()));
    }
    EigenScan::Survives(survived)
}

fn exhaustive_eigen(p: &IndexPolynomial, x: &QMatrix) -> Option<Vec<(UniPoly, usize)>> {
    match eigen_scan(p, x) {
        EigenScan::Survives(s) => Some(s),
        _ => None,
    }
}

fn probe(d: &DerivationSpace, p: &IndexPolynomial, lifted: &[usize], coeffs: &[Rational]) -> Probe {
    let mut coefficients = vec![Rational::zero(); d.dim()];
    for (&i, c) in lifted.iter().zip(coeffs) {
        coefficients[i] = c.clone();
    }
    let rho = d.rho(&d.combination(&coefficients));
    if rho.is_zero() {
        return Probe::Pass;
    }
    match eigen_scan(p, &rho) {
        EigenScan::Killed(minimal_polynomial, eigenbasis) => {
            Probe::Hit(Box::new(Witness { coefficients, rho, minimal_polynomial, eigenbasis }))
        }
        EigenScan::Survives(_) => Probe::Pass,
        EigenScan::Unfactored => Probe::Unfactored,
    }
}

/// Indices of basis derivations whose `ρ`-images are linearly independent
/// and span `ρ(Der A)`.
fn lifted_basis(d: &DerivationSpace) -> Vec<usize> {
    let q = d.q();
    let mut span = Subspace::zero(q * q);
    d.rho_image().iter().enumerate().filter(|(_, x)| span.insert(x.as_flat())).map(|(i, _)| i).collect()
}

/// Coefficient vectors with at most `max_terms` nonzero entries drawn from
/// `coeff_range`, by support size and then lexicographically. Of a vector
/// and its negative only one is kept, since both have the same eigenspaces.
fn combinations(len: usize, config: &NullIndexConfig) -> Vec<Vec<Rational>> {
    let (lo, hi) = config.coeff_range;
    let values: Vec<i64> = (lo..=hi).filter(|&v| v != 0).collect();
    let mut out = Vec::new();
    for size in 1..=config.max_terms.min(len) {
        for support in subsets(len, size) {
            for assignment in assignments(&values, size) {
                let first = assignment[0];
                if first < 0 && values.contains(&-first) {
                    continue;
                }
                let mut c = vec![Rational::zero(); len];
                for (&pos, &v) in support.iter().zip(&assignment) {
                    c[pos] = Rational::from_integer(v.into());
                }
                out.push(c);
            }
        }
    }
    out
}

fn assignments(values: &[i64], size: usize) -> Vec<Vec<i64>> {
    (0..size).fold(vec![Vec::new()], |acc, _| {
        acc.into_iter()
            .flat_map(|prefix| {
                values.iter().map(move |&v| {
                    let mut next = prefix.clone();
                    next.push(v);
                    next
                })
            })
            .collect()
    })
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if k > n {
        return Vec::new();
    }
    let mut out = Vec::new();
    for first in 0..=n - k {
        for rest in subsets(n - first - 1, k - 1) {
            let mut s = vec![first];
            s.extend(rest.into_iter().map(|r| r + first + 1));
            out.push(s);
        }
    }
    out
}

/// Rows of `X − θI` over the field.
fn shifted_rows(field: &NumberField, x: &QMatrix) -> Vec<Vec<NfElem>> {
    let theta = field.generator();
    (0..x.rows())
        .map(|i| {
            (0..x.cols())
                .map(|j| {
                    let e = field.from_rational(&x[(i, j)]);
                    if i == j {
                        field.sub(&e, &theta)
                    } else {
                        e
                    }
                })
                .collect()
        })
        .collect()
}

/// Rewrites every power `θ^e` with `e ≥ d` using `modulus(θ) = 0`.
fn reduce_theta(p: &MultiPoly, theta: usize, modulus: &UniPoly, d: usize) -> MultiPoly {
    let mut current = p.clone();
    loop {
        let mut done = MultiPoly::zero(p.nvars());
        let mut changed = false;
        for (m, c) in current.terms() {
            let e = m.exponents()[theta] as usize;
            if e < d {
                done.add_term(m.clone(), c.clone());
                continue;
            }
            changed = true;
            let mut base = m.exponents().to_vec();
            for (l, f) in modulus.coeffs()[..d].iter().enumerate() {
                if f.is_zero() {
                    continue;
                }
                base[theta] = (e - d + l) as u32;
                done.add_term(Monomial::from_exponents(base.clone()), -(c * f));
            }
        }
        if !changed {
            return done;
        }
        current = done;
    }
}
