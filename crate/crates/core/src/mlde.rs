//! Serre derivatives and the monic order-2 MLDE
//! `theta^2 f - (1/6) E2 theta f - k1 E4 f = 0`, solved by Frobenius series
//! at the regular singular point `q = 0`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::forms::{e2, e4};
use crate::series::{int, rat, QSeries, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MldeError {
    #[error("indicial equation x^2 - x/6 - k1 = 0 has no rational roots for k1 = {k1}")]
    IrrationalRoots { k1: Rational },
    #[error("{root} is not an indicial root for k1 = {k1}")]
    NotARoot {
        k1: Box<Rational>,
        root: Box<Rational>,
    },
    #[error("resonance at n = {n}: the roots differ by a positive integer")]
    Resonance { n: usize },
}

/// `D_k f = theta f - (k/12) E2 f`.
pub fn serre_derivative(f: &QSeries, k: i64) -> QSeries {
    let correction = e2(f.terms()).mul(f).scale(&rat(k, 12));
    f.theta()
        .sub(&correction)
        .expect("E2 has exponent 0 so both terms share f's exponent")
}

/// The two indicial roots, ordered ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndicialData {
    pub roots: (Rational, Rational),
}

impl IndicialData {
    pub fn sum(&self) -> Rational {
        &self.roots.0 + &self.roots.1
    }

    pub fn product(&self) -> Rational {
        &self.roots.0 * &self.roots.1
    }

    /// The root other than `root`.
    pub fn partner(&self, root: &Rational) -> Option<&Rational> {
        if root == &self.roots.0 {
            Some(&self.roots.1)
        } else if root == &self.roots.1 {
            Some(&self.roots.0)
        } else {
            None
        }
    }
}

fn rational_sqrt(x: &Rational) -> Option<Rational> {
    if x.is_negative() {
        return None;
    }
    let (p, q): (&BigInt, &BigInt) = (x.numer(), x.denom());
    let (sp, sq) = (p.sqrt(), q.sqrt());
    (&sp * &sp == *p && &sq * &sq == *q).then(|| Rational::new(sp, sq))
}

/// Roots of `x^2 - x/6 - k1 = 0`.
pub fn indicial_roots(k1: &Rational) -> Result<IndicialData, MldeError> {
    let disc = rat(1, 36) + int(4) * k1;
    let root = rational_sqrt(&disc).ok_or_else(|| MldeError::IrrationalRoots { k1: k1.clone() })?;
    let half = rat(1, 2);
    let lo = (rat(1, 6) - &root) * &half;
    let hi = (rat(1, 6) + &root) * &half;
    Ok(IndicialData { roots: (lo, hi) })
}

fn indicial_polynomial(x: &Rational, k1: &Rational) -> Rational {
    x * x - x / int(6) - k1
}

/// Normalized Frobenius solution `q^root (1 + c_1 q + ...)` with `terms`
/// coefficients.
///
/// Equating coefficients of `q^{root+n}` gives
/// `c_n P(root+n) = (1/6) sum_{k>=1} e2_k (root+n-k) c_{n-k} + k1 sum_{k>=1} e4_k c_{n-k}`
/// with `P(x) = x^2 - x/6 - k1`.
pub fn frobenius_solve(k1: &Rational, root: &Rational, terms: usize) -> Result<QSeries, MldeError> {
    if !indicial_polynomial(root, k1).is_zero() {
        return Err(MldeError::NotARoot {
            k1: Box::new(k1.clone()),
            root: Box::new(root.clone()),
        });
    }
    let terms = terms.max(1);
    let e2 = e2(terms);
    let e4 = e4(terms);
    let sixth = rat(1, 6);
    let mut c: Vec<Rational> = Vec::with_capacity(terms);
    c.push(Rational::one());
    for n in 1..terms {
        let shifted = root + int(n as i64);
        let denom = indicial_polynomial(&shifted, k1);
        if denom.is_zero() {
            return Err(MldeError::Resonance { n });
        }
        let mut from_e2 = Rational::zero();
        let mut from_e4 = Rational::zero();
        for k in 1..=n {
            let prev = &c[n - k];
            if prev.is_zero() {
                continue;
            }
            from_e2 += e2.coeff(k) * (&shifted - int(k as i64)) * prev;
            from_e4 += e4.coeff(k) * prev;
        }
        c.push((from_e2 * &sixth + from_e4 * k1) / denom);
    }
    Ok(QSeries::new(root.clone(), c))
}

/// Left-hand side `theta^2 f - (1/6) E2 theta f - k1 E4 f`.
pub fn mlde_residual(f: &QSeries, k1: &Rational) -> QSeries {
    let n = f.terms();
    let tf = f.theta();
    let first = tf.theta();
    let second = e2(n).mul(&tf).scale(&rat(1, 6));
    let third = e4(n).mul(f).scale(k1);
    first
        .sub(&second)
        .and_then(|s| s.sub(&third))
        .expect("all terms share f's exponent")
}

/// `(D_0^2 + k1 E4) f = 0` with a fixed truncation order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MldeOrder2 {
    pub k1: Rational,
    pub terms: usize,
}

impl MldeOrder2 {
    pub fn new(k1: Rational, terms: usize) -> Self {
        MldeOrder2 { k1, terms }
    }

    /// The equation whose indicial roots are `a` and `1/6 - a`.
    pub fn from_root(a: &Rational, terms: usize) -> Self {
        let b = rat(1, 6) - a;
        Self::new(-(a * &b), terms)
    }

    pub fn indicial_roots(&self) -> Result<IndicialData, MldeError> {
        indicial_roots(&self.k1)
    }

    pub fn solve(&self, root: &Rational) -> Result<QSeries, MldeError> {
        frobenius_solve(&self.k1, root, self.terms)
    }

    /// Frobenius solutions for the lower and upper root.
    pub fn fundamental_pair(&self) -> Result<(QSeries, QSeries), MldeError> {
        let roots = self.indicial_roots()?;
        Ok((self.solve(&roots.roots.0)?, self.solve(&roots.roots.1)?))
    }

    pub fn residual(&self, f: &QSeries) -> QSeries {
        mlde_residual(f, &self.k1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms::{delta3, eta};
    use proptest::prelude::*;

    fn ints(s: &QSeries, upto: usize) -> Vec<i64> {
        s.coeffs()[..upto]
            .iter()
            .map(|c| crate::series::as_integer(c).unwrap())
            .collect()
    }

    #[test]
    fn serre_derivative_basics() {
        assert!(serre_derivative(&QSeries::one(6), 0).is_zero());
        let f = QSeries::monomial(rat(1, 4), 6);
        assert_eq!(serre_derivative(&f, 0).coeff(0), &rat(1, 4));
        // D^2 = D_2 o D_0 reproduces the MLDE operator without the E4 term.
        let f = frobenius_solve(&rat(5, 576), &rat(-1, 24), 12).unwrap();
        let d2 = serre_derivative(&serre_derivative(&f, 0), 2);
        let e4f = e4(12).mul(&f).scale(&rat(5, 576));
        assert!(d2
            .sub(&e4f)
            .unwrap()
            .agrees_with(&mlde_residual(&f, &rat(5, 576))));
    }

    #[test]
    fn indicial_examples() {
        let r = indicial_roots(&int(0)).unwrap();
        assert_eq!(r.roots, (int(0), rat(1, 6)));
        let r = indicial_roots(&rat(5, 576)).unwrap();
        assert_eq!(r.roots, (rat(-1, 24), rat(5, 24)));
        let r = indicial_roots(&rat(11, 3600)).unwrap();
        assert_eq!(r.roots, (rat(-1, 60), rat(11, 60)));
        assert!(matches!(
            indicial_roots(&rat(1, 7)),
            Err(MldeError::IrrationalRoots { .. })
        ));
        assert!(matches!(
            indicial_roots(&rat(-1, 10)),
            Err(MldeError::IrrationalRoots { .. })
        ));
    }

    #[test]
    fn frobenius_examples() {
        let f = frobenius_solve(&rat(5, 576), &rat(-1, 24), 9).unwrap();
        assert_eq!(ints(&f, 9), vec![1, 3, 4, 7, 13, 19, 29, 43, 62]);
        let f = frobenius_solve(&rat(11, 3600), &rat(-1, 60), 7).unwrap();
        assert_eq!(ints(&f, 7), vec![1, 1, 1, 1, 2, 2, 3]);
        let f = frobenius_solve(&int(0), &int(0), 10).unwrap();
        assert_eq!(f, QSeries::one(10));
    }

    #[test]
    fn frobenius_errors() {
        assert!(matches!(
            frobenius_solve(&rat(5, 576), &rat(1, 24), 5),
            Err(MldeError::NotARoot { .. })
        ));
        // roots -5/12 and 7/12 differ by 1
        let k1 = -(rat(-5, 12) * rat(7, 12));
        assert_eq!(
            frobenius_solve(&k1, &rat(-5, 12), 5),
            Err(MldeError::Resonance { n: 1 })
        );
        assert!(frobenius_solve(&k1, &rat(7, 12), 5).is_ok());
    }

    #[test]
    fn residual_examples() {
        let f = delta3(24).div(&eta(24).pow_int(2).unwrap()).unwrap();
        assert!(mlde_residual(&f, &rat(1, 48)).is_zero());
        assert!(!mlde_residual(&QSeries::one(6), &rat(5, 576)).is_zero());
    }

    #[test]
    fn fundamental_pair_has_distinct_exponents() {
        let eq = MldeOrder2::from_root(&rat(11, 60), 16);
        let (lo, hi) = eq.fundamental_pair().unwrap();
        assert_eq!(lo.exponent(), &rat(-1, 60));
        assert_eq!(hi.exponent(), &rat(11, 60));
        assert!(eq.residual(&lo).is_zero() && eq.residual(&hi).is_zero());
    }

    proptest! {
        #[test]
        fn indicial_postconditions(p in -60i64..60, q in prop::sample::select(vec![1i64, 2, 3, 4, 5, 6, 8, 12, 24, 60])) {
            let a = rat(p, q);
            let eq = MldeOrder2::from_root(&a, 4);
            let roots = eq.indicial_roots().unwrap();
            prop_assert_eq!(roots.sum(), rat(1, 6));
            prop_assert_eq!(roots.product(), -eq.k1.clone());
        }

        #[test]
        fn frobenius_residual_vanishes(p in -40i64..40, q in prop::sample::select(vec![5i64, 7, 8, 12, 24, 60])) {
            let a = rat(p, q);
            let eq = MldeOrder2::from_root(&a, 14);
            let b = rat(1, 6) - &a;
            prop_assume!(!(&b - &a).is_integer() || b <= a);
            let f = eq.solve(&a).unwrap();
            prop_assert!(eq.residual(&f).is_zero());
        }
    }
}
