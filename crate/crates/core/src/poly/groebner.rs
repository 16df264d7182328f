use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use num_traits::Zero;

use super::{Monomial, MultiPoly, PolyError, Presentation};
use crate::linalg::Rational;

/// Reduced, monic Gröbner basis for the graded-lex order, together with the
/// standard monomials when the quotient is finite-dimensional.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    nvars: usize,
    generators: Vec<MultiPoly>,
    standard: Option<Vec<Monomial>>,
}

impl GroebnerBasis {
    pub fn generators(&self) -> &[MultiPoly] {
        &self.generators
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.generators.iter().map(|g| g.leading_monomial().unwrap().clone()).collect()
    }

    /// Standard monomials in increasing graded-lex order (so `1` comes
    /// first), or `None` if there are infinitely many.
    pub fn standard_monomials(&self) -> Option<&[Monomial]> {
        self.standard.as_deref()
    }

    pub fn is_standard(&self, m: &Monomial) -> bool {
        !self.generators.iter().any(|g| g.leading_monomial().unwrap().divides(m))
    }
}

/// Reason a presentation does not define a finite-dimensional local algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NotLocal {
    /// No leading monomial is a pure power of this variable.
    InfiniteStaircase { variable: String },
    /// The variable is not nilpotent in the quotient.
    NotNilpotent { variable: String },
}

impl fmt::Display for NotLocal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NotLocal::InfiniteStaircase { variable } => {
                write!(f, "quotient is infinite-dimensional: no power of {variable} is a leading monomial")
            }
            NotLocal::NotNilpotent { variable } => write!(f, "{variable} is not nilpotent in the quotient"),
        }
    }
}

/// Leading-term reduction of `f` by `basis`, deterministic (the first
/// generator whose leading monomial divides the current leading term wins).
fn reduce(f: &MultiPoly, basis: &[MultiPoly]) -> MultiPoly {
    let mut p = f.clone();
    let mut rem = MultiPoly::zero(f.nvars());
    while let Some((m, c)) = p.leading().map(|(m, c)| (m.clone(), c.clone())) {
        let reducer = basis.iter().find_map(|g| {
            let (gm, gc) = g.leading()?;
            gm.quotient_of(&m).map(|q| (g, q, gc.clone()))
        });
        match reducer {
            Some((g, q, gc)) => {
                let factor = &c / &gc;
                for (gm, gcoef) in g.terms() {
                    p.add_term(gm.mul(&q), -(&factor * gcoef));
                }
            }
            None => {
                p.add_term(m.clone(), -c.clone());
                rem.add_term(m, c);
            }
        }
    }
    rem
}

pub fn normal_form(f: &MultiPoly, g: &GroebnerBasis) -> MultiPoly {
    reduce(f, &g.generators)
}

fn s_polynomial(f: &MultiPoly, g: &MultiPoly) -> MultiPoly {
    let (fm, fc) = f.leading().unwrap();
    let (gm, gc) = g.leading().unwrap();
    let l = fm.lcm(gm);
    let a = f.mul_term(&fm.quotient_of(&l).unwrap(), &gc.clone());
    let b = g.mul_term(&gm.quotient_of(&l).unwrap(), &fc.clone());
    a.sub(&b)
}

/// Buchberger's algorithm with the normal selection strategy (smallest lcm
/// first) and the coprime-leading-monomial criterion.
pub fn buchberger(p: &Presentation) -> Result<GroebnerBasis, PolyError> {
    let cap = p.degree_cap();
    let nvars = p.nvars();
    let mut basis: Vec<MultiPoly> = Vec::new();
    for r in p.relations() {
        if r.total_degree() > cap {
            return Err(PolyError::DegreeCapExceeded { cap });
        }
        let nf = reduce(r, &basis);
        if !nf.is_zero() {
            basis.push(nf.monic());
        }
    }
    // (lcm, i, j) ordered by lcm in graded-lex order
    let mut pairs: BTreeSet<(Monomial, usize, usize)> = BTreeSet::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pairs.insert((pair_lcm(&basis, i, j), i, j));
        }
    }
    while let Some(pair) = pairs.pop_first() {
        let (l, i, j) = pair;
        if l.degree() > cap {
            return Err(PolyError::DegreeCapExceeded { cap });
        }
        let (mi, mj) = (basis[i].leading_monomial().unwrap(), basis[j].leading_monomial().unwrap());
        if mi.is_coprime(mj) {
            continue;
        }
        let h = reduce(&s_polynomial(&basis[i], &basis[j]), &basis);
        if h.is_zero() {
            continue;
        }
        if h.total_degree() > cap {
            return Err(PolyError::DegreeCapExceeded { cap });
        }
        basis.push(h.monic());
        let k = basis.len() - 1;
        for i in 0..k {
            pairs.insert((pair_lcm(&basis, i, k), i, k));
        }
    }
    let generators = auto_reduce(basis);
    let standard = enumerate_standard(nvars, &generators);
    Ok(GroebnerBasis { nvars, generators, standard })
}

fn pair_lcm(basis: &[MultiPoly], i: usize, j: usize) -> Monomial {
    basis[i].leading_monomial().unwrap().lcm(basis[j].leading_monomial().unwrap())
}

/// Minimal, fully inter-reduced, monic basis sorted by leading monomial.
fn auto_reduce(mut basis: Vec<MultiPoly>) -> Vec<MultiPoly> {
    basis.sort_by(|a, b| a.leading_monomial().cmp(&b.leading_monomial()));
    let mut minimal: Vec<MultiPoly> = Vec::new();
    for g in basis {
        let lm = g.leading_monomial().unwrap();
        if !minimal.iter().any(|h| h.leading_monomial().unwrap().divides(lm)) {
            minimal.push(g);
        }
    }
    let mut reduced = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<MultiPoly> = minimal.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, g)| g.clone()).collect();
        let (lm, lc) = minimal[i].leading().map(|(m, c)| (m.clone(), c.clone())).unwrap();
        let tail = minimal[i].sub(&MultiPoly::term(lm.clone(), lc.clone()));
        let mut g = reduce(&tail, &others);
        g.add_term(lm, lc);
        reduced.push(g.monic());
    }
    reduced
}

fn enumerate_standard(nvars: usize, gens: &[MultiPoly]) -> Option<Vec<Monomial>> {
    let lms: Vec<&Monomial> = gens.iter().map(|g| g.leading_monomial().unwrap()).collect();
    for v in 0..nvars {
        if !lms.iter().any(|m| m.pure_power_variable() == Some(v)) {
            return None;
        }
    }
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::from([Monomial::one(nvars)]);
    while let Some(m) = queue.pop_front() {
        if seen.contains(&m) || lms.iter().any(|l| l.divides(&m)) {
            continue;
        }
        for v in 0..nvars {
            queue.push_back(m.mul(&Monomial::var(nvars, v)));
        }
        seen.insert(m);
    }
    Some(seen.into_iter().collect())
}

/// Checks that the quotient is finite-dimensional and every variable is
/// nilpotent in it.
pub fn validate_local(p: &Presentation, g: &GroebnerBasis) -> Result<(), NotLocal> {
    let lms = g.leading_monomials();
    for (v, name) in p.variables().iter().enumerate() {
        if !lms.iter().any(|m| m.pure_power_variable() == Some(v)) {
            return Err(NotLocal::InfiniteStaircase { variable: name.clone() });
        }
    }
    let size = g.standard_monomials().map_or(0, <[Monomial]>::len);
    for (v, name) in p.variables().iter().enumerate() {
        let x = MultiPoly::var(p.nvars(), v);
        let mut power = MultiPoly::one(p.nvars());
        let mut nilpotent = false;
        for _ in 0..=size {
            power = normal_form(&power.mul(&x), g);
            if power.is_zero() {
                nilpotent = true;
                break;
            }
        }
        if !nilpotent {
            return Err(NotLocal::NotNilpotent { variable: name.clone() });
        }
    }
    Ok(())
}

/// Multiplication table of the quotient in its standard-monomial basis:
/// `table[i][j]` holds the coordinates of `b_i · b_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureConstants {
    pub labels: Vec<String>,
    pub table: Vec<Vec<Vec<Rational>>>,
}

impl StructureConstants {
    pub fn dim(&self) -> usize {
        self.labels.len()
    }
}

/// Basis order: by degree, then with earlier variables first (`1, t, s, t^2, ...`).
/// Panics if the quotient is infinite-dimensional; call [`validate_local`] first.
pub fn structure_constants(g: &GroebnerBasis, names: &[String]) -> StructureConstants {
    let mut std = g.standard_monomials().expect("finite quotient required").to_vec();
    std.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| b.exponents().cmp(a.exponents())));
    let n = std.len();
    let index = |m: &Monomial| std.iter().position(|x| x == m).expect("normal form is standard");
    let mut table = vec![vec![vec![Rational::zero(); n]; n]; n];
    for i in 0..n {
        for j in i..n {
            let prod = MultiPoly::term(std[i].mul(&std[j]), Rational::from_integer(1.into()));
            let nf = normal_form(&prod, g);
            let mut coords = vec![Rational::zero(); n];
            for (m, c) in nf.terms() {
                coords[index(m)] = c.clone();
            }
            table[j][i] = coords.clone();
            table[i][j] = coords;
        }
    }
    let labels = std.iter().map(|m| m.render(names)).collect();
    StructureConstants { labels, table }
}
