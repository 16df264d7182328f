use std::collections::{BTreeSet, HashSet};
use std::fmt;

use crate::linalg::rat;
use crate::poly::{Monomial, MultiPoly, Presentation};

pub const STAIRCASE_VARIABLES: [&str; 3] = ["t", "s", "u"];

/// A finite division-closed set of monomials containing `1`, stored with
/// unused variables dropped and in canonical form under variable
/// permutation: the permutation whose monomial list (in basis order) is
/// lexicographically largest, so `{1, t, t^2}` rather than `{1, s, s^2}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Staircase {
    nvars: usize,
    monomials: Vec<Vec<u32>>,
}

impl Staircase {
    /// `None` unless the set contains `1` and is closed under division.
    pub fn new(nvars: usize, monomials: impl IntoIterator<Item = Vec<u32>>) -> Option<Self> {
        let set: BTreeSet<Vec<u32>> = monomials.into_iter().collect();
        if set.iter().any(|m| m.len() != nvars) || !set.contains(&vec![0; nvars]) || !is_order_ideal(&set) {
            return None;
        }
        Some(canonicalize(nvars, &set))
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn dim(&self) -> usize {
        self.monomials.len()
    }

    /// Exponent vectors by degree, then with earlier variables first.
    pub fn monomials(&self) -> &[Vec<u32>] {
        &self.monomials
    }

    pub fn is_chain(&self) -> bool {
        self.nvars <= 1
    }

    /// Minimal monomials outside the staircase.
    pub fn corners(&self) -> Vec<Vec<u32>> {
        let set: BTreeSet<Vec<u32>> = self.monomials.iter().cloned().collect();
        let mut out = addable(self.nvars, &set);
        sort_basis_order(&mut out);
        out
    }

    /// `Q[t, s, u]/(corners)` on the variables in use. `None` for `{1}`.
    pub fn presentation(&self) -> Option<Presentation> {
        if self.nvars == 0 {
            return None;
        }
        let names: Vec<String> = STAIRCASE_VARIABLES[..self.nvars].iter().map(|s| s.to_string()).collect();
        let relations = self
            .corners()
            .into_iter()
            .map(|e| MultiPoly::term(Monomial::from_exponents(e), rat(1)))
            .collect();
        Some(Presentation::new(names, relations).expect("corners of a staircase on its own variables have degree at least 2"))
    }

    /// Sort key for reports: size, variable count, then the monomial list.
    pub fn key(&self) -> (usize, usize, Vec<Vec<u32>>) {
        (self.dim(), self.nvars, self.monomials.clone())
    }

    pub fn encoding(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Staircase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = STAIRCASE_VARIABLES[..self.nvars].iter().map(|s| s.to_string()).collect();
        let parts: Vec<String> =
            self.monomials.iter().map(|e| Monomial::from_exponents(e.clone()).render(&names)).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

fn is_order_ideal(set: &BTreeSet<Vec<u32>>) -> bool {
    set.iter().all(|m| predecessors_in(set, m))
}

fn addable(nvars: usize, set: &BTreeSet<Vec<u32>>) -> Vec<Vec<u32>> {
    let mut out = BTreeSet::new();
    for m in set {
        for i in 0..nvars {
            let mut c = m.clone();
            c[i] += 1;
            if !set.contains(&c) && predecessors_in(set, &c) {
                out.insert(c);
            }
        }
    }
    out.into_iter().collect()
}

fn predecessors_in(set: &BTreeSet<Vec<u32>>, c: &[u32]) -> bool {
    (0..c.len()).filter(|&i| c[i] > 0).all(|i| {
        let mut d = c.to_vec();
        d[i] -= 1;
        set.contains(&d)
    })
}

fn sort_basis_order(v: &mut [Vec<u32>]) {
    v.sort_by(|a, b| {
        let da: u32 = a.iter().sum();
        let db: u32 = b.iter().sum();
        da.cmp(&db).then_with(|| b.cmp(a))
    });
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

fn canonicalize(nvars: usize, set: &BTreeSet<Vec<u32>>) -> Staircase {
    let used: Vec<usize> = (0..nvars).filter(|&i| set.iter().any(|m| m[i] > 0)).collect();
    let k = used.len();
    let mut best: Option<Vec<Vec<u32>>> = None;
    for perm in permutations(k) {
        let mut list: Vec<Vec<u32>> = set.iter().map(|m| perm.iter().map(|&p| m[used[p]]).collect()).collect();
        sort_basis_order(&mut list);
        if best.as_ref().is_none_or(|b| list > *b) {
            best = Some(list);
        }
    }
    Staircase { nvars: k, monomials: best.expect("at least one permutation") }
}

/// Every order ideal of size `1..=max_dim` in exactly `nvars` variables,
/// without identifying permutations. Each set is listed in basis order.
pub fn enumerate_order_ideals(max_dim: usize, nvars: usize) -> Vec<Vec<Vec<u32>>> {
    let mut out = Vec::new();
    if max_dim == 0 {
        return out;
    }
    let mut level: HashSet<BTreeSet<Vec<u32>>> = HashSet::new();
    level.insert(BTreeSet::from([vec![0; nvars]]));
    for size in 1..=max_dim {
        let mut sorted: Vec<Vec<Vec<u32>>> = level.iter().map(|s| s.iter().cloned().collect()).collect();
        for s in &mut sorted {
            sort_basis_order(s);
        }
        sorted.sort();
        out.extend(sorted);
        if size == max_dim {
            break;
        }
        let mut next = HashSet::new();
        for s in &level {
            for c in addable(nvars, s) {
                let mut grown = s.clone();
                grown.insert(c);
                next.insert(grown);
            }
        }
        level = next;
    }
    out
}

pub fn count_order_ideals(size: usize, nvars: usize) -> usize {
    enumerate_order_ideals(size, nvars).iter().filter(|s| s.len() == size).count()
}

/// Staircases of size `1..=max_dim` on at most `max_vars` variables, one per
/// permutation class, ordered by [`Staircase::key`].
pub fn enumerate_staircases(max_dim: usize, max_vars: usize) -> Vec<Staircase> {
    let mut seen = HashSet::new();
    let mut out: Vec<Staircase> = enumerate_order_ideals(max_dim, max_vars)
        .into_iter()
        .map(|s| Staircase::new(max_vars, s).expect("enumerated sets are staircases"))
        .filter(|s| seen.insert(s.clone()))
        .collect();
    out.sort_by_key(Staircase::key);
    out
}
