use num_traits::{One, Zero};

use super::{AlgebraError, LocalAlgebra};
use crate::linalg::{unit, QMatrix, Rational, Subspace};
use crate::poly::{indexed_names, MultiPoly};

/// `A = m^0 ⊇ m ⊇ m^2 ⊇ ... ⊇ m^r ≠ 0`, with `m^{r+1} = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Filtration {
    powers: Vec<Subspace>,
    zero: Subspace,
}

impl Filtration {
    pub(super) fn trivial(n: usize) -> Self {
        Filtration { powers: vec![Subspace::full(n)], zero: Subspace::zero(n) }
    }

    pub(super) fn compute(alg: &LocalAlgebra) -> Result<Self, AlgebraError> {
        let n = alg.dim();
        let m = Subspace::span(n, alg.m_basis.iter().map(|&i| unit(n, i)));
        let mut powers = vec![Subspace::full(n)];
        let mut current = m;
        while !current.is_zero() {
            let mut next = Subspace::zero(n);
            for &i in &alg.m_basis {
                for v in current.basis() {
                    next.insert(&alg.mul(&unit(n, i), v));
                }
            }
            if next.dim() == current.dim() {
                let culprit = alg
                    .m_basis
                    .iter()
                    .find(|&&i| {
                        let mut p = unit(n, i);
                        for _ in 0..n {
                            p = alg.mul(&p, &unit(n, i));
                        }
                        p.iter().any(|c| !c.is_zero())
                    })
                    .map_or_else(|| "maximal ideal".to_string(), |&i| alg.labels[i].clone());
                return Err(AlgebraError::NotLocal(format!("{culprit} is not nilpotent")));
            }
            powers.push(current);
            current = next;
        }
        Ok(Filtration { powers, zero: Subspace::zero(n) })
    }

    pub fn r(&self) -> usize {
        self.powers.len() - 1
    }

    /// `m^i`; zero for `i > r`.
    pub fn power(&self, i: usize) -> &Subspace {
        self.powers.get(i).unwrap_or(&self.zero)
    }

    pub fn powers(&self) -> &[Subspace] {
        &self.powers
    }

    pub fn dims(&self) -> Vec<usize> {
        self.powers.iter().map(Subspace::dim).collect()
    }
}

/// The cotangent space `V = m/m^2` together with a basis of `m` adapted to
/// the whole filtration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cotangent {
    pub q: usize,
    /// Basis of `m` in the algebra's coordinates; the first `q` vectors
    /// project to a basis of `V`, and those of level `≥ i` span `m^i`.
    pub frame: Vec<Vec<Rational>>,
    pub levels: Vec<usize>,
    /// `q × n` matrix sending an element to its `V`-coordinates.
    pub projection: QMatrix,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexPolynomial {
    /// Homogeneous of degree `r` in `x1..xq`, leading coefficient 1.
    pub poly: MultiPoly,
    pub degree: usize,
    /// `m^r = scale · poly(v) · s` before normalization.
    pub scale: Rational,
    /// Position of `s` in the adapted frame of `m` (always the last vector).
    pub socle_generator_index: usize,
    /// `s` in the algebra's own coordinates.
    pub socle_generator: Vec<Rational>,
    pub socle_label: String,
}

impl IndexPolynomial {
    pub fn variables(&self) -> Vec<String> {
        indexed_names("x", self.poly.nvars())
    }

    pub fn render(&self) -> String {
        self.poly.render(&self.variables())
    }
}

impl LocalAlgebra {
    /// `(k_0, ..., k_r)` with `k_i = dim m^i/m^{i+1}`.
    pub fn hilbert_samuel(&self) -> Vec<usize> {
        let f = &self.filtration;
        (0..=f.r()).map(|i| f.power(i).dim() - f.power(i + 1).dim()).collect()
    }

    /// `{a ∈ m : a·m = 0}`.
    pub fn socle(&self) -> Subspace {
        let n = self.dim();
        let k = self.m_basis.len();
        let mut rows = Vec::new();
        for &j in &self.m_basis {
            for p in 0..n {
                rows.push(self.m_basis.iter().map(|&i| self.table[i][j][p].clone()).collect::<Vec<_>>());
            }
        }
        let local = if rows.is_empty() { Subspace::full(k) } else { QMatrix::from_rows(rows).kernel() };
        Subspace::span(
            n,
            local.basis().iter().map(|v| {
                let mut full = vec![Rational::zero(); n];
                for (c, &i) in v.iter().zip(&self.m_basis) {
                    full[i] = c.clone();
                }
                full
            }),
        )
    }

    pub fn is_gorenstein(&self) -> bool {
        self.socle().dim() == 1
    }

    pub fn cotangent(&self) -> Cotangent {
        let n = self.dim();
        let f = &self.filtration;
        let mut frame = Vec::new();
        let mut levels = Vec::new();
        for i in 1..=f.r() {
            let target = f.power(i);
            let mut span = f.power(i + 1).clone();
            let candidates = self.m_basis.iter().map(|&j| unit(n, j)).chain(target.basis().iter().cloned());
            for c in candidates {
                if span.dim() == target.dim() {
                    break;
                }
                if target.contains(&c) && span.insert(&c) {
                    frame.push(c);
                    levels.push(i);
                }
            }
        }
        let q = levels.iter().filter(|&&l| l == 1).count();
        let mut basis = vec![self.unit_vector()];
        basis.extend(frame.iter().cloned());
        let inv = QMatrix::from_rows(basis).transpose().inverse().expect("adapted frame is a basis");
        let projection = QMatrix::from_rows((1..=q).map(|i| inv.row(i).to_vec()).collect());
        Cotangent { q, frame, levels, projection }
    }

    /// This algebra in the basis `[1, a_1, ..., a_{n-1}]` of [`LocalAlgebra::cotangent`].
    pub fn adapted(&self) -> (LocalAlgebra, Cotangent) {
        let cot = self.cotangent();
        let mut basis = vec![self.unit_vector()];
        basis.extend(cot.frame.iter().cloned());
        (self.rebase(&basis), cot)
    }

    /// `P_A` with `m^r = P_A(π(m))·s`, normalized to leading coefficient 1.
    pub fn index_polynomial(&self) -> Result<IndexPolynomial, AlgebraError> {
        let soc = self.socle().dim();
        if soc != 1 {
            return Err(AlgebraError::NotGorenstein(soc));
        }
        let (adapted, cot) = self.adapted();
        let r = self.nilpotency_index();
        let q = cot.q;
        let n = self.dim();
        let s_index = n - 1;
        let mut generic = vec![MultiPoly::zero(q); n];
        for (i, g) in generic.iter_mut().enumerate().skip(1).take(q) {
            *g = MultiPoly::var(q, i - 1);
        }
        let power = adapted.pow_generic(&generic, r);
        for (i, c) in power.iter().enumerate() {
            if i != s_index && !c.is_zero() {
                return Err(AlgebraError::SupportLeak(adapted.labels[i].clone()));
            }
        }
        let raw = power[s_index].clone();
        let Some((_, lead)) = raw.leading() else {
            return Err(AlgebraError::ZeroIndexPolynomial);
        };
        let scale = lead.clone();
        let poly = raw.scale(&(Rational::one() / &scale));
        let socle_generator = cot.frame[s_index - 1].clone();
        Ok(IndexPolynomial {
            poly,
            degree: r,
            scale,
            socle_generator_index: s_index - 1,
            socle_label: self.render_element(&socle_generator),
            socle_generator,
        })
    }
}
