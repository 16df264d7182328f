//! The named example algebras and the two infinite families they come from.

use crate::poly::{indexed_names, Monomial, MultiPoly, Presentation};
use crate::linalg::Rational;
use num_traits::One;

/// `(name, presentation text)` for the shipped catalog files.
pub const EXAMPLES: [(&str, &str); 5] = [
    ("example1", include_str!("../../../catalog/example1.pres")),
    ("example2", include_str!("../../../catalog/example2.pres")),
    ("example3", include_str!("../../../catalog/example3.pres")),
    ("example4", include_str!("../../../catalog/example4.pres")),
    ("example5", include_str!("../../../catalog/example5.pres")),
];

pub fn example(name: &str) -> Option<Presentation> {
    EXAMPLES.iter().find(|e| e.0 == name).map(|e| Presentation::parse(e.1).expect("catalog files parse"))
}

/// `Q[t]/(t^n)`, of dimension `n`.
pub fn chain(n: u32) -> Presentation {
    let rel = MultiPoly::term(Monomial::from_exponents(vec![n]), Rational::one());
    Presentation::new(vec!["t".into()], vec![rel]).expect("valid for n >= 2")
}

/// `Q[x_1..x_k]/(x_i x_j)`, of dimension `k + 1` with `m^2 = 0`.
pub fn square_zero(k: usize) -> Presentation {
    let mut rels = Vec::new();
    for i in 0..k {
        for j in i..k {
            let mut e = vec![0; k];
            e[i] += 1;
            e[j] += 1;
            rels.push(MultiPoly::term(Monomial::from_exponents(e), Rational::one()));
        }
    }
    Presentation::new(indexed_names("x", k), rels).expect("valid for 1 <= k <= 4")
}
