//! Bounded factorization of rational univariate polynomials.
//!
//! Rational roots are always extracted completely. What remains of each
//! square-free part is split only when its degree is at most four; larger
//! pieces are reported as unfactored instead of guessed at.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{Rational, UniPoly};

const DIVISOR_SEARCH_LIMIT: u64 = 2_000_000;
const QUARTIC_COEFF_LIMIT: i64 = 100_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    /// Leading coefficient of the input.
    pub leading: Rational,
    /// Monic irreducible factors with multiplicities, linear factors first
    /// in increasing root order.
    pub factors: Vec<(UniPoly, usize)>,
    /// Monic remainder that could not be split within the degree bound.
    pub unfactored: Option<UniPoly>,
}

impl Factorization {
    pub fn product(&self) -> UniPoly {
        let mut acc = UniPoly::constant(self.leading.clone());
        for (f, m) in &self.factors {
            acc = acc.mul(&f.pow(*m));
        }
        if let Some(u) = &self.unfactored {
            acc = acc.mul(u);
        }
        acc
    }

    pub fn is_complete(&self) -> bool {
        self.unfactored.is_none()
    }

    pub fn rational_roots(&self) -> Vec<(Rational, usize)> {
        self.factors
            .iter()
            .filter(|(f, _)| f.degree() == Some(1))
            .map(|(f, m)| (-&f.coeffs()[0], *m))
            .collect()
    }
}

pub fn factor_bounded(p: &UniPoly) -> Factorization {
    if p.is_zero() {
        return Factorization { leading: Rational::zero(), factors: Vec::new(), unfactored: None };
    }
    let leading = p.leading();
    let monic = p.monic();
    let mut linear = Vec::new();
    let mut higher = Vec::new();
    let mut unfactored = UniPoly::one();

    for (part, mult) in square_free_parts(&monic) {
        let Some(roots) = rational_roots(&part) else {
            unfactored = unfactored.mul(&part.pow(mult));
            continue;
        };
        let mut rest = part.clone();
        for r in &roots {
            rest = rest.div_rem(&UniPoly::linear(r)).0;
            linear.push((r.clone(), mult));
        }
        match rest.degree() {
            Some(0) | None => {}
            Some(1..=3) => higher.push((rest.monic(), mult)),
            Some(4) => match split_quartic(&rest) {
                QuarticSplit::Irreducible => higher.push((rest.monic(), mult)),
                QuarticSplit::Quadratics(a, b) => {
                    higher.push((a, mult));
                    higher.push((b, mult));
                }
                QuarticSplit::GaveUp => unfactored = unfactored.mul(&rest.pow(mult)),
            },
            Some(_) => unfactored = unfactored.mul(&rest.pow(mult)),
        }
    }

    linear.sort_by(|a, b| a.0.cmp(&b.0));
    higher.sort_by(|a, b| {
        a.0.degree().cmp(&b.0.degree()).then_with(|| a.0.coeffs().cmp(b.0.coeffs()))
    });
    let mut factors: Vec<(UniPoly, usize)> =
        linear.into_iter().map(|(r, m)| (UniPoly::linear(&r), m)).collect();
    factors.extend(higher);
    let unfactored = (unfactored.degree() != Some(0)).then_some(unfactored);
    Factorization { leading, factors, unfactored }
}

/// Yun's square-free decomposition of a monic polynomial: pairwise coprime
/// square-free monic parts `a_i` with `p = Π a_i^i`.
fn square_free_parts(p: &UniPoly) -> Vec<(UniPoly, usize)> {
    let mut out = Vec::new();
    if p.degree().unwrap_or(0) == 0 {
        return out;
    }
    let mut c = p.gcd(&p.derivative());
    let mut w = p.div_rem(&c).0;
    let mut i = 1;
    while w.degree().unwrap_or(0) > 0 {
        let y = w.gcd(&c);
        let z = w.div_rem(&y).0.monic();
        if z.degree().unwrap_or(0) > 0 {
            out.push((z, i));
        }
        i += 1;
        c = c.div_rem(&y).0;
        w = y;
    }
    out
}

/// All rational roots of `p`, by the rational-root theorem. `None` when the
/// divisor search would exceed the work bound.
fn rational_roots(p: &UniPoly) -> Option<Vec<Rational>> {
    let ints = p.primitive_integer();
    let mut roots = Vec::new();
    let mut start = 0;
    while start < ints.len() && ints[start].is_zero() {
        start += 1;
    }
    if start > 0 {
        roots.push(Rational::zero());
    }
    let trimmed = &ints[start..];
    if trimmed.len() <= 1 {
        return Some(roots);
    }
    let num_divs = divisors(&trimmed[0])?;
    let den_divs = divisors(trimmed.last().unwrap())?;
    let q = UniPoly::from_integers(trimmed);
    let mut found = Vec::new();
    for a in &num_divs {
        for b in &den_divs {
            for sign in [1, -1] {
                let cand = Rational::new(a * BigInt::from(sign), b.clone());
                if !found.contains(&cand) && q.eval(&cand).is_zero() {
                    found.push(cand);
                }
            }
        }
    }
    roots.extend(found);
    roots.sort();
    Some(roots)
}

fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let n = n.abs();
    if n.is_zero() {
        return Some(Vec::new());
    }
    let root = n.sqrt();
    if root > BigInt::from(DIVISOR_SEARCH_LIMIT) {
        return None;
    }
    let limit = root.to_u64().unwrap_or(0);
    let mut small = Vec::new();
    let mut large = Vec::new();
    for d in 1..=limit {
        let d = BigInt::from(d);
        if n.is_multiple_of(&d) {
            let other = &n / &d;
            if other != d {
                large.push(other);
            }
            small.push(d);
        }
    }
    small.extend(large.into_iter().rev());
    Some(small)
}

enum QuarticSplit {
    Irreducible,
    Quadratics(UniPoly, UniPoly),
    GaveUp,
}

/// Splits a quartic without rational roots into two integer quadratics if
/// possible (Gauss's lemma makes integer trial factorization complete).
fn split_quartic(p: &UniPoly) -> QuarticSplit {
    let f = p.primitive_integer();
    let [a0, a1, a2, a3, a4] = match <[BigInt; 5]>::try_from(f) {
        Ok(c) => c,
        Err(_) => return QuarticSplit::GaveUp,
    };
    let (Some(lead_divs), Some(const_divs)) = (divisors(&a4), divisors(&a0)) else {
        return QuarticSplit::GaveUp;
    };
    let bound = coefficient_bound(&[&a0, &a1, &a2, &a3, &a4]);
    for b2 in &lead_divs {
        let c2 = &a4 / b2;
        for d in &const_divs {
            for sign in [1, -1] {
                let b0 = d * BigInt::from(sign);
                let c0 = &a0 / &b0;
                // b2·c1 + b1·c2 = a3 and b1·c0 + b0·c1 = a1
                let det = &c2 * &b0 - b2 * &c0;
                let mut candidates = Vec::new();
                if !det.is_zero() {
                    let n1 = &a3 * &b0 - b2 * &a1;
                    let n2 = &c2 * &a1 - &c0 * &a3;
                    if n1.is_multiple_of(&det) && n2.is_multiple_of(&det) {
                        candidates.push((n1 / &det, n2 / &det));
                    }
                } else {
                    let Some(bound) = bound else { return QuarticSplit::GaveUp };
                    for b1 in -bound..=bound {
                        let b1 = BigInt::from(b1);
                        let num = &a3 - &b1 * &c2;
                        if num.is_multiple_of(b2) {
                            candidates.push((b1, num / b2));
                        }
                    }
                }
                for (b1, c1) in candidates {
                    let ok_a3 = b2 * &c1 + &b1 * &c2 == a3;
                    let ok_a2 = b2 * &c0 + &b1 * &c1 + &b0 * &c2 == a2;
                    let ok_a1 = &b1 * &c0 + &b0 * &c1 == a1;
                    if ok_a1 && ok_a2 && ok_a3 {
                        let q1 = UniPoly::from_integers(&[b0.clone(), b1, b2.clone()]).monic();
                        let q2 = UniPoly::from_integers(&[c0.clone(), c1, c2.clone()]).monic();
                        let (q1, q2) = if q1.coeffs() <= q2.coeffs() { (q1, q2) } else { (q2, q1) };
                        return QuarticSplit::Quadratics(q1, q2);
                    }
                }
            }
        }
    }
    QuarticSplit::Irreducible
}

/// Bound on coefficients of integer factors (Mignotte-style, `2^4·‖f‖₂`).
fn coefficient_bound(coeffs: &[&BigInt]) -> Option<i64> {
    let norm_sq: BigInt = coeffs.iter().map(|c| *c * *c).sum();
    let bound = (norm_sq.sqrt() + BigInt::one()) * BigInt::from(16);
    bound.to_i64().filter(|&b| b <= QUARTIC_COEFF_LIMIT)
}
