//! Lower bounds on `dim Der(A)` and Schulze's solvability criterion.

mod staircase;

pub use staircase::{count_order_ideals, enumerate_order_ideals, enumerate_staircases, Staircase, STAIRCASE_VARIABLES};

use serde::Serialize;

use crate::algebra::LocalAlgebra;
use crate::derivations::DerivationSpace;
use crate::linalg::{rat, QMatrix, Rational};
use crate::poly::{Monomial, MultiPoly, Presentation};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub bound: &'static str,
    pub lhs: usize,
    pub rhs: usize,
    pub applicable: bool,
    /// `None` when the bound does not apply.
    pub holds: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl BoundReport {
    fn inequality(bound: &'static str, lhs: usize, rhs: usize) -> Self {
        BoundReport { bound, lhs, rhs, applicable: true, holds: Some(lhs >= rhs), note: None }
    }

    pub fn is_equality(&self) -> bool {
        self.applicable && self.lhs == self.rhs
    }
}

/// `dim Der(A) ≥ dim(m/m^2) · dim Soc(A)`.
pub fn check_perepechko(a: &LocalAlgebra, d: &DerivationSpace) -> BoundReport {
    BoundReport::inequality("perepechko", d.dim(), d.q() * a.socle().dim())
}

/// `dim Der(A) ≥ n − dim Soc(A)`, stated for non-negatively graded algebras.
pub fn check_yau(a: &LocalAlgebra, d: &DerivationSpace) -> BoundReport {
    let mut report = BoundReport::inequality("yau", d.dim(), a.dim() - a.socle().dim());
    if !a.is_graded() {
        report.applicable = false;
        report.holds = None;
        report.note = Some("graded only".into());
    }
    report
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SchulzeReport {
    pub k: usize,
    pub l: u32,
    pub dim_i_mod_pi: usize,
    /// `dim(I/pI) < k + l − 1`; when true, `Der(A)` is solvable.
    pub hypothesis: bool,
}

impl SchulzeReport {
    pub fn bound_report(&self) -> BoundReport {
        BoundReport {
            bound: "schulze",
            lhs: self.dim_i_mod_pi,
            rhs: self.k + self.l as usize - 1,
            applicable: true,
            holds: Some(self.hypothesis),
            note: (!self.hypothesis).then(|| "criterion precondition failed".to_string()),
        }
    }
}

/// `k` is the number of variables, `l` the least order of a nonzero relation
/// and `dim(I/pI)` the minimal number of generators of `I` in the local ring.
/// `r` is the nilpotency index of the quotient, so `p^{r+1} ⊆ I` and the
/// computation is exact modulo `p^{r+2}`.
pub fn schulze_criterion(p: &Presentation, r: usize) -> SchulzeReport {
    let k = p.nvars();
    let relations: Vec<&MultiPoly> = p.relations().iter().filter(|f| !f.is_zero()).collect();
    let l = relations.iter().filter_map(|f| f.order()).min().unwrap_or(r as u32 + 1);
    let top = r as u32 + 1;
    let monomials = monomials_up_to(k, top);
    let products = |min_degree: u32| -> Vec<Vec<Rational>> {
        let mut rows = Vec::new();
        for m in monomials.iter().filter(|m| m.degree() >= min_degree) {
            for f in &relations {
                let g = f.mul_term(m, &rat(1)).truncate(top);
                if !g.is_zero() {
                    rows.push(monomials.iter().map(|x| g.coeff(x)).collect());
                }
            }
        }
        rows
    };
    let rank = |rows: Vec<Vec<_>>| if rows.is_empty() { 0 } else { QMatrix::from_rows(rows).rank() };
    let dim_i_mod_pi = rank(products(0)) - rank(products(1));
    SchulzeReport { k, l, dim_i_mod_pi, hypothesis: dim_i_mod_pi + 1 < k + l as usize }
}

fn monomials_up_to(nvars: usize, degree: u32) -> Vec<Monomial> {
    let mut out = vec![Monomial::one(nvars)];
    let mut frontier = out.clone();
    for _ in 0..degree {
        let mut next: Vec<Monomial> = Vec::new();
        for m in &frontier {
            for i in 0..nvars {
                let x = m.mul(&Monomial::var(nvars, i));
                if !next.contains(&x) {
                    next.push(x);
                }
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChristophersenRecord {
    pub n: usize,
    pub dim_der: usize,
    pub bound_holds: bool,
    pub equality: bool,
    /// Hilbert–Samuel sequence `(1, 1, ..., 1)`, the shape of `Q[t]/(t^n)`.
    pub is_chain: bool,
}

/// Infinitesimal form of `dim Aut(A)° ≥ n − 1`.
pub fn christophersen_check(a: &LocalAlgebra, d: &DerivationSpace) -> ChristophersenRecord {
    let n = a.dim();
    let dim_der = d.dim();
    ChristophersenRecord {
        n,
        dim_der,
        bound_holds: dim_der + 1 >= n,
        equality: dim_der + 1 == n,
        is_chain: a.hilbert_samuel().iter().all(|&k| k == 1),
    }
}

#[cfg(test)]
mod tests;
