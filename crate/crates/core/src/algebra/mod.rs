//! Finite-dimensional local algebras given by structure constants.

mod invariants;

pub use invariants::{Cotangent, Filtration, IndexPolynomial};

use num_traits::{One, Zero};
use thiserror::Error;

use crate::linalg::{render_rational, unit, QMatrix, Rational, Subspace};
use crate::poly::{buchberger, structure_constants, validate_local, MultiPoly, PolyError, Presentation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("malformed structure constants: {0}")]
    Malformed(String),
    #[error("no basis vector acts as the unit")]
    NoUnit,
    #[error("multiplication is not commutative: {left} * {right}")]
    NotCommutative { left: String, right: String },
    #[error("multiplication is not associative: ({a} * {b}) * {c}")]
    NotAssociative { a: String, b: String, c: String },
    #[error("not a local algebra: {0}")]
    NotLocal(String),
    #[error(transparent)]
    Presentation(#[from] PolyError),
    #[error("algebra is not Gorenstein (socle has dimension {0})")]
    NotGorenstein(usize),
    #[error("generic power of the maximal ideal leaks onto basis vector {0} outside the socle line")]
    SupportLeak(String),
    #[error("index polynomial vanished identically")]
    ZeroIndexPolynomial,
}

/// `A = Q·1 ⊕ m` with the non-unit basis vectors spanning `m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalAlgebra {
    labels: Vec<String>,
    table: Vec<Vec<Vec<Rational>>>,
    unit: usize,
    m_basis: Vec<usize>,
    graded: bool,
    filtration: Filtration,
}

impl LocalAlgebra {
    /// `table[i][j]` holds the coordinates of `b_i·b_j`. The basis must
    /// contain the unit, and the remaining basis vectors must span the
    /// maximal ideal.
    pub fn from_structure_constants(table: Vec<Vec<Vec<Rational>>>, labels: Vec<String>) -> Result<Self, AlgebraError> {
        let n = labels.len();
        if n == 0 {
            return Err(AlgebraError::Malformed("empty basis".into()));
        }
        if table.len() != n || table.iter().any(|row| row.len() != n || row.iter().any(|v| v.len() != n)) {
            return Err(AlgebraError::Malformed(format!("expected a {n}x{n}x{n} tensor")));
        }
        let unit = (0..n)
            .find(|&u| (0..n).all(|j| is_unit_vector(&table[u][j], j) && is_unit_vector(&table[j][u], j)))
            .ok_or(AlgebraError::NoUnit)?;
        for i in 0..n {
            for j in i + 1..n {
                if table[i][j] != table[j][i] {
                    return Err(AlgebraError::NotCommutative { left: labels[i].clone(), right: labels[j].clone() });
                }
            }
        }
        let m_basis: Vec<usize> = (0..n).filter(|&i| i != unit).collect();
        let mut alg = LocalAlgebra { labels, table, unit, m_basis, graded: false, filtration: Filtration::trivial(n) };
        for &i in &alg.m_basis {
            for &j in &alg.m_basis {
                if !alg.table[i][j][unit].is_zero() {
                    return Err(AlgebraError::NotLocal(format!(
                        "{} * {} has a unit component",
                        alg.labels[i], alg.labels[j]
                    )));
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                let ij = &alg.table[i][j];
                for k in 0..n {
                    let left = alg.mul_basis_right(ij, k);
                    let right = alg.mul_basis_right(&alg.table[j][k], i);
                    if left != right {
                        return Err(AlgebraError::NotAssociative {
                            a: alg.labels[i].clone(),
                            b: alg.labels[j].clone(),
                            c: alg.labels[k].clone(),
                        });
                    }
                }
            }
        }
        alg.filtration = Filtration::compute(&alg)?;
        Ok(alg)
    }

    /// Gröbner basis, locality check and structure constants in one step.
    pub fn from_presentation(p: &Presentation) -> Result<Self, AlgebraError> {
        let g = buchberger(p)?;
        validate_local(p, &g).map_err(|e| AlgebraError::NotLocal(e.to_string()))?;
        let sc = structure_constants(&g, p.variables());
        let mut alg = Self::from_structure_constants(sc.table, sc.labels)?;
        alg.graded = p.is_standard_graded();
        Ok(alg)
    }

    pub fn with_graded_flag(mut self, graded: bool) -> Self {
        self.graded = graded;
        self
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn structure_tensor(&self) -> &[Vec<Vec<Rational>>] {
        &self.table
    }

    pub fn unit_index(&self) -> usize {
        self.unit
    }

    pub fn m_basis(&self) -> &[usize] {
        &self.m_basis
    }

    pub fn is_graded(&self) -> bool {
        self.graded
    }

    pub fn filtration(&self) -> &Filtration {
        &self.filtration
    }

    /// Nilpotency index: the largest `r` with `m^r ≠ 0`.
    pub fn nilpotency_index(&self) -> usize {
        self.filtration.r()
    }

    pub fn unit_vector(&self) -> Vec<Rational> {
        unit(self.dim(), self.unit)
    }

    pub fn maximal_ideal(&self) -> Subspace {
        self.filtration.power(1).clone()
    }

    pub fn mul(&self, a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        let n = self.dim();
        let mut out = vec![Rational::zero(); n];
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if bj.is_zero() {
                    continue;
                }
                let c = ai * bj;
                for (o, t) in out.iter_mut().zip(&self.table[i][j]) {
                    if !t.is_zero() {
                        *o += &c * t;
                    }
                }
            }
        }
        out
    }

    /// Multiplication by `b_k` as an `n×n` matrix (columns are images).
    pub fn multiplication_matrix(&self, k: usize) -> QMatrix {
        let n = self.dim();
        let mut rows = vec![vec![Rational::zero(); n]; n];
        for j in 0..n {
            for (p, row) in rows.iter_mut().enumerate() {
                row[j] = self.table[k][j][p].clone();
            }
        }
        QMatrix::from_rows(rows)
    }

    /// Product of elements whose coordinates are polynomials.
    pub fn mul_generic(&self, a: &[MultiPoly], b: &[MultiPoly]) -> Vec<MultiPoly> {
        let n = self.dim();
        let nvars = a.first().map_or(0, MultiPoly::nvars);
        let mut out = vec![MultiPoly::zero(nvars); n];
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if bj.is_zero() {
                    continue;
                }
                let prod = ai.mul(bj);
                for (o, t) in out.iter_mut().zip(&self.table[i][j]) {
                    if !t.is_zero() {
                        o.add_assign(&prod.scale(t));
                    }
                }
            }
        }
        out
    }

    pub fn pow_generic(&self, a: &[MultiPoly], e: usize) -> Vec<MultiPoly> {
        let nvars = a.first().map_or(0, MultiPoly::nvars);
        let mut acc: Vec<MultiPoly> = (0..self.dim())
            .map(|i| if i == self.unit { MultiPoly::one(nvars) } else { MultiPoly::zero(nvars) })
            .collect();
        for _ in 0..e {
            acc = self.mul_generic(&acc, a);
        }
        acc
    }

    /// Re-expresses the algebra in a new basis. `basis[0]` must be the unit;
    /// the rest must span `m`. Labels are rendered in the old basis.
    pub fn rebase(&self, basis: &[Vec<Rational>]) -> LocalAlgebra {
        let n = self.dim();
        assert_eq!(basis.len(), n);
        let cols = QMatrix::from_rows(basis.to_vec()).transpose();
        let inv = cols.inverse().expect("rebase requires a basis");
        let mut table = vec![vec![Vec::new(); n]; n];
        for i in 0..n {
            for j in i..n {
                let coords = inv.mul_vec(&self.mul(&basis[i], &basis[j]));
                table[j][i] = coords.clone();
                table[i][j] = coords;
            }
        }
        let labels = basis.iter().map(|v| self.render_element(v)).collect();
        let mut alg = LocalAlgebra {
            labels,
            table,
            unit: 0,
            m_basis: (1..n).collect(),
            graded: self.graded,
            filtration: Filtration::trivial(n),
        };
        alg.filtration = Filtration::compute(&alg).expect("rebasing preserves locality");
        alg
    }

    /// `2*t^2 - 1/2*s`, highest basis index first.
    pub fn render_element(&self, v: &[Rational]) -> String {
        let mut out = String::new();
        for (i, c) in v.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let label = &self.labels[i];
            let negative = c < &Rational::zero();
            let mag = if negative { -c } else { c.clone() };
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let bare = label == "1";
            if mag.is_one() {
                out.push_str(label);
            } else if bare {
                out.push_str(&render_rational(&mag));
            } else if label.contains([' ', '+', '-']) {
                out.push_str(&format!("{}*({label})", render_rational(&mag)));
            } else {
                out.push_str(&format!("{}*{label}", render_rational(&mag)));
            }
        }
        if out.is_empty() {
            "0".into()
        } else {
            out
        }
    }

    fn mul_basis_right(&self, a: &[Rational], k: usize) -> Vec<Rational> {
        let n = self.dim();
        let mut out = vec![Rational::zero(); n];
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (o, t) in out.iter_mut().zip(&self.table[i][k]) {
                if !t.is_zero() {
                    *o += ai * t;
                }
            }
        }
        out
    }
}

fn is_unit_vector(v: &[Rational], j: usize) -> bool {
    v.iter().enumerate().all(|(i, c)| if i == j { c.is_one() } else { c.is_zero() })
}

#[cfg(test)]
mod tests;
