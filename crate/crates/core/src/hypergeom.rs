//! Gauss hypergeometric series and the characters
//! `f = K^a 2F1(a, a + 1/3, 2a + 5/6; K)` as q-expansions.

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::forms::hauptmodul_k;
use crate::series::{compose, int, rat, QSeries, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HypergeomError {
    #[error("lower parameter {0} is a nonpositive integer")]
    NonpositiveLowerParameter(Rational),
}

/// Rising factorial `x (x+1) ... (x+n-1)`; 1 when `n = 0`.
pub fn pochhammer(x: &Rational, n: usize) -> Rational {
    (0..n).fold(Rational::one(), |acc, k| acc * (x + int(k as i64)))
}

/// Parameters `(a', b'; c')` of `2F1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HypergeomParams {
    pub a_p: Rational,
    pub b_p: Rational,
    pub c_p: Rational,
}

impl HypergeomParams {
    pub fn new(a_p: Rational, b_p: Rational, c_p: Rational) -> Result<Self, HypergeomError> {
        if c_p.is_integer() && !c_p.is_positive() {
            return Err(HypergeomError::NonpositiveLowerParameter(c_p));
        }
        Ok(HypergeomParams { a_p, b_p, c_p })
    }

    /// `(a, a + 1/3; 2a + 5/6)`, the parameters attached to indicial root `a`.
    pub fn for_character(a: &Rational) -> Result<Self, HypergeomError> {
        Self::new(a.clone(), a + rat(1, 3), a * int(2) + rat(5, 6))
    }

    /// Coefficients `(a')_n (b')_n / ((c')_n n!)` for `n < terms`, built from
    /// the term ratio.
    pub fn coefficients(&self, terms: usize) -> Vec<Rational> {
        let mut out = Vec::with_capacity(terms);
        let mut term = Rational::one();
        for n in 0..terms {
            if n > 0 {
                let k = int(n as i64 - 1);
                term =
                    term * (&self.a_p + &k) * (&self.b_p + &k) / ((&self.c_p + &k) * int(n as i64));
            }
            out.push(term.clone());
        }
        out
    }
}

/// `2F1(a', b'; c'; z)` truncated to `terms` coefficients, as a series in the
/// formal variable `z` (exponent 0).
pub fn gauss_2f1_series(params: &HypergeomParams, terms: usize) -> QSeries {
    QSeries::new(Rational::zero(), params.coefficients(terms.max(1)))
}

/// `K^a 2F1(a, a+1/3, 2a+5/6; K)` normalized to leading coefficient 1.
///
/// `K^a = (1728 q)^a (1 + X)^a`; the constant `1728^a` is dropped by the
/// normalization, leaving `q^a (1 + X)^a 2F1(...; K)`.
pub fn character_series(a: &Rational, terms: usize) -> Result<QSeries, HypergeomError> {
    let params = HypergeomParams::for_character(a)?;
    let terms = terms.max(1);
    let k = hauptmodul_k(terms);
    let unit = k.shift(&int(-1)).scale(&rat(1, 1728));
    let outer = params.coefficients(terms);
    let hyper = compose(&outer, &k).truncate(terms);
    let prefactor = unit
        .pow_rational(a)
        .expect("K/(1728 q) has constant term 1");
    let f = prefactor.mul(&hyper).shift(a);
    Ok(f.normalize().expect("leading coefficient is 1"))
}

/// `24 a (72 (6a + 2) / (12a + 5) - 31)`, the closed form of the `q^1`
/// coefficient of [`character_series`].
pub fn first_coefficient(a: &Rational) -> Rational {
    let frac = (a * int(6) + int(2)) * int(72) / (a * int(12) + int(5));
    a * int(24) * (frac - int(31))
}
