use std::fmt;

use num_traits::Zero;

use super::{kernel_basis, render_rational, Field, LinalgError, Rational, UniPoly};

/// `Q[θ]/(modulus)` for a monic irreducible modulus of degree at most four.
///
/// Degree one is allowed and is just another copy of the rationals, with
/// `θ` equal to the root of the modulus.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct NumberField {
    modulus: UniPoly,
}

/// Element of a [`NumberField`]: coefficients of `1, θ, θ², ...`, always
/// of length `degree`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct NfElem(pub Vec<Rational>);

impl NumberField {
    pub const MAX_DEGREE: usize = 4;

    pub fn new(modulus: UniPoly) -> Result<Self, LinalgError> {
        let deg = modulus.degree().unwrap_or(0);
        if !(1..=Self::MAX_DEGREE).contains(&deg) || !modulus.is_monic() {
            return Err(LinalgError::BadModulus(deg));
        }
        Ok(NumberField { modulus })
    }

    pub fn modulus(&self) -> &UniPoly {
        &self.modulus
    }

    pub fn degree(&self) -> usize {
        self.modulus.degree().unwrap()
    }

    /// The class of `θ`.
    pub fn generator(&self) -> NfElem {
        self.reduce(&UniPoly::x())
    }

    fn reduce(&self, p: &UniPoly) -> NfElem {
        let r = p.rem(&self.modulus);
        let mut c = r.coeffs().to_vec();
        c.resize(self.degree(), Rational::zero());
        NfElem(c)
    }

    fn lift(&self, a: &NfElem) -> UniPoly {
        UniPoly::new(a.0.clone())
    }

    /// `Some(q)` if the element is the rational `q`.
    pub fn as_rational(&self, a: &NfElem) -> Option<Rational> {
        a.0[1..].iter().all(Zero::is_zero).then(|| a.0[0].clone())
    }

    pub fn render(&self, a: &NfElem) -> String {
        self.lift(a).render("θ")
    }
}

impl Field for NumberField {
    type Elem = NfElem;

    fn zero(&self) -> NfElem {
        NfElem(vec![Rational::zero(); self.degree()])
    }
    fn one(&self) -> NfElem {
        self.from_rational(&Rational::from_integer(1.into()))
    }
    fn is_zero(&self, a: &NfElem) -> bool {
        a.0.iter().all(Zero::is_zero)
    }
    fn add(&self, a: &NfElem, b: &NfElem) -> NfElem {
        NfElem(a.0.iter().zip(&b.0).map(|(x, y)| x + y).collect())
    }
    fn sub(&self, a: &NfElem, b: &NfElem) -> NfElem {
        NfElem(a.0.iter().zip(&b.0).map(|(x, y)| x - y).collect())
    }
    fn mul(&self, a: &NfElem, b: &NfElem) -> NfElem {
        if self.degree() == 1 {
            return NfElem(vec![&a.0[0] * &b.0[0]]);
        }
        self.reduce(&self.lift(a).mul(&self.lift(b)))
    }
    fn neg(&self, a: &NfElem) -> NfElem {
        NfElem(a.0.iter().map(|x| -x).collect())
    }
    fn inv(&self, a: &NfElem) -> Result<NfElem, LinalgError> {
        let (g, s, _) = self.lift(a).ext_gcd(&self.modulus);
        if g.degree() != Some(0) {
            return Err(LinalgError::ModulusReducible);
        }
        Ok(self.reduce(&s))
    }
    fn from_rational(&self, q: &Rational) -> NfElem {
        let mut c = vec![Rational::zero(); self.degree()];
        c[0] = q.clone();
        NfElem(c)
    }
}

impl fmt::Debug for NumberField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q[θ]/({})", self.modulus.render("θ"))
    }
}

impl fmt::Debug for NfElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(render_rational).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

/// Exact kernel of a matrix over a number field, given by rows.
pub fn nf_kernel(field: &NumberField, rows: &[Vec<NfElem>], ncols: usize) -> Result<Vec<Vec<NfElem>>, LinalgError> {
    kernel_basis(field, rows, ncols)
}
