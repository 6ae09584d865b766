//! Truncated q-series with exact rational coefficients.
//!
//! A [`QSeries`] stores `q^e * (c_0 + c_1 q + ... + c_{N-1} q^{N-1})` where the
//! leading exponent `e` is any rational and `N` is the number of coefficients
//! that are known to be correct. Every operation propagates that count, so two
//! series can always be compared over their common valid range.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
pub type Rational = BigRational;

/// Default number of stored coefficients.
pub const DEFAULT_TERMS: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("leading exponents {left} and {right} do not differ by an integer")]
    Misaligned {
        left: Box<Rational>,
        right: Box<Rational>,
    },
    #[error("leading coefficient is zero; series is not invertible")]
    NonUnit,
    #[error("leading coefficient is {0}, expected 1")]
    NotNormalized(Rational),
}

/// Builds a rational from a numerator/denominator pair of machine integers.
pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Builds an integral rational.
pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// Fractional part in `[0, 1)`.
pub fn frac(x: &Rational) -> Rational {
    x - x.floor()
}

/// Returns the integer value of `x` if it has denominator 1.
pub fn as_integer(x: &Rational) -> Option<i64> {
    if x.is_integer() {
        x.to_integer().to_i64()
    } else {
        None
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QSeries {
    exponent: Rational,
    coeffs: Vec<Rational>,
}

impl QSeries {
    /// Panics if `coeffs` is empty: a series always carries at least one
    /// valid coefficient.
    pub fn new(exponent: Rational, coeffs: Vec<Rational>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a q-series needs at least one coefficient"
        );
        QSeries { exponent, coeffs }
    }

    pub fn from_integers(exponent: Rational, coeffs: &[i64]) -> Self {
        Self::new(exponent, coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn zero(terms: usize) -> Self {
        Self::new(Rational::zero(), vec![Rational::zero(); terms.max(1)])
    }

    pub fn one(terms: usize) -> Self {
        Self::monomial(Rational::zero(), terms)
    }

    /// `q^exponent` known to `terms` coefficients.
    pub fn monomial(exponent: Rational, terms: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); terms.max(1)];
        coeffs[0] = Rational::one();
        Self::new(exponent, coeffs)
    }

    pub fn exponent(&self) -> &Rational {
        &self.exponent
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `q^{e+n}`.
    pub fn coeff(&self, n: usize) -> &Rational {
        &self.coeffs[n]
    }

    /// Number of valid coefficients.
    pub fn terms(&self) -> usize {
        self.coeffs.len()
    }

    pub fn leading(&self) -> &Rational {
        &self.coeffs[0]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_normalized(&self) -> bool {
        self.coeffs[0].is_one()
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// Index and value of the first non-integral coefficient.
    pub fn first_non_integral(&self) -> Option<(usize, &Rational)> {
        self.coeffs
            .iter()
            .enumerate()
            .find(|(_, c)| !c.is_integer())
    }

    /// Index and value of the first negative coefficient.
    pub fn first_negative(&self) -> Option<(usize, &Rational)> {
        self.coeffs
            .iter()
            .enumerate()
            .find(|(_, c)| c.is_negative())
    }

    pub fn truncate(&self, terms: usize) -> Self {
        let terms = terms.clamp(1, self.terms());
        Self::new(self.exponent.clone(), self.coeffs[..terms].to_vec())
    }

    /// True when both series have the same leading exponent and agree on
    /// every coefficient inside their common valid range.
    pub fn agrees_with(&self, other: &Self) -> bool {
        self.exponent == other.exponent
            && self.coeffs.iter().zip(&other.coeffs).all(|(x, y)| x == y)
    }

    /// Multiplies by `q^shift` without touching the coefficients.
    pub fn shift(&self, shift: &Rational) -> Self {
        Self::new(&self.exponent + shift, self.coeffs.clone())
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        Self::new(
            self.exponent.clone(),
            self.coeffs.iter().map(|c| c * factor).collect(),
        )
    }

    pub fn neg(&self) -> Self {
        Self::new(
            self.exponent.clone(),
            self.coeffs.iter().map(|c| -c).collect(),
        )
    }

    /// Divides through by the leading coefficient.
    pub fn normalize(&self) -> Result<Self, SeriesError> {
        if self.coeffs[0].is_zero() {
            return Err(SeriesError::NonUnit);
        }
        let lead = self.coeffs[0].recip();
        Ok(self.scale(&lead))
    }

    /// Drops leading zero coefficients, moving the exponent up accordingly.
    /// An all-zero series is returned unchanged.
    pub fn trim_leading_zeros(&self) -> Self {
        match self.coeffs.iter().position(|c| !c.is_zero()) {
            None | Some(0) => self.clone(),
            Some(k) => Self::new(&self.exponent + int(k as i64), self.coeffs[k..].to_vec()),
        }
    }

    /// Sum of two series whose exponents differ by an integer. The result
    /// starts at the smaller exponent and is valid up to the first point
    /// where either input stops being valid.
    pub fn add(&self, other: &Self) -> Result<Self, SeriesError> {
        let gap = &other.exponent - &self.exponent;
        if !gap.is_integer() {
            return Err(SeriesError::Misaligned {
                left: Box::new(self.exponent.clone()),
                right: Box::new(other.exponent.clone()),
            });
        }
        let gap = gap.to_integer().to_i64().expect("exponent gap fits in i64");
        let (low, high, offset) = if gap >= 0 {
            (self, other, gap as usize)
        } else {
            (other, self, (-gap) as usize)
        };
        let terms = low.terms().min(offset + high.terms());
        let mut coeffs = low.coeffs[..terms].to_vec();
        for (i, c) in high.coeffs.iter().enumerate() {
            let at = offset + i;
            if at >= terms {
                break;
            }
            coeffs[at] += c;
        }
        Ok(Self::new(low.exponent.clone(), coeffs))
    }

    pub fn sub(&self, other: &Self) -> Result<Self, SeriesError> {
        self.add(&other.neg())
    }

    /// Cauchy product; exponents add and the valid range is the shorter one.
    pub fn mul(&self, other: &Self) -> Self {
        let terms = self.terms().min(other.terms());
        let coeffs = convolve(&self.coeffs, &other.coeffs, terms);
        Self::new(&self.exponent + &other.exponent, coeffs)
    }

    /// Multiplicative inverse; requires a nonzero leading coefficient.
    pub fn invert(&self) -> Result<Self, SeriesError> {
        let lead = &self.coeffs[0];
        if lead.is_zero() {
            return Err(SeriesError::NonUnit);
        }
        let lead_inv = lead.recip();
        let mut out: Vec<Rational> = Vec::with_capacity(self.terms());
        out.push(lead_inv.clone());
        for n in 1..self.terms() {
            let mut acc = Rational::zero();
            for k in 1..=n {
                if !self.coeffs[k].is_zero() {
                    acc += &self.coeffs[k] * &out[n - k];
                }
            }
            out.push(-acc * &lead_inv);
        }
        Ok(Self::new(-&self.exponent, out))
    }

    pub fn div(&self, other: &Self) -> Result<Self, SeriesError> {
        Ok(self.mul(&other.invert()?))
    }

    /// Integer power by repeated squaring; negative powers go through
    /// [`QSeries::invert`].
    pub fn pow_int(&self, power: i64) -> Result<Self, SeriesError> {
        let base = if power < 0 {
            self.invert()?
        } else {
            self.clone()
        };
        let mut e = power.unsigned_abs();
        let mut acc = Self::one(self.terms());
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&sq);
            }
            e >>= 1;
            if e > 0 {
                sq = sq.mul(&sq);
            }
        }
        Ok(acc)
    }

    /// `x^r` for a normalized `x = q^e (1 + X)`, computed with Newton's
    /// binomial series `sum_k C(r, k) X^k`. The exponent becomes `r * e`.
    pub fn pow_rational(&self, r: &Rational) -> Result<Self, SeriesError> {
        if !self.is_normalized() {
            return Err(SeriesError::NotNormalized(self.coeffs[0].clone()));
        }
        let n = self.terms();
        let mut tail = self.coeffs.clone();
        tail[0] = Rational::zero();
        let mut out = Accumulator::new(n);
        out.add_scaled(&Rational::one(), &QSeries::one(n).coeffs, 0);
        // X^k has valuation >= k, so only indices k.. are ever nonzero.
        let mut power = tail.clone();
        let mut binom = Rational::one();
        for k in 1..n {
            binom = binom * (r - int(k as i64 - 1)) / int(k as i64);
            if binom.is_zero() {
                break;
            }
            out.add_scaled(&binom, &power, k);
            if k + 1 < n {
                power = convolve_from(&power, &tail, n, k + 1);
            }
        }
        Ok(Self::new(&self.exponent * r, out.finish()))
    }

    /// `theta = q d/dq`: the coefficient of `q^{e+n}` picks up a factor `e+n`.
    pub fn theta(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(n, c)| c * (&self.exponent + int(n as i64)))
            .collect();
        Self::new(self.exponent.clone(), coeffs)
    }

    /// Substitutes `q -> q^m` (i.e. `tau -> m tau`). The number of stored
    /// coefficients is unchanged.
    pub fn rescale(&self, m: u32) -> Self {
        assert!(m >= 1, "rescale factor must be positive");
        let m = m as usize;
        let mut coeffs = vec![Rational::zero(); self.terms()];
        for (i, c) in self.coeffs.iter().enumerate() {
            let at = i * m;
            if at >= coeffs.len() {
                break;
            }
            coeffs[at] = c.clone();
        }
        Self::new(&self.exponent * int(m as i64), coeffs)
    }

    /// Coefficients as `f64`, for numerical evaluation.
    pub fn coeffs_f64(&self) -> Vec<f64> {
        self.coeffs
            .iter()
            .map(|c| c.to_f64().unwrap_or(f64::NAN))
            .collect()
    }
}

/// Truncated Cauchy product of two dense coefficient vectors.
pub(crate) fn convolve(x: &[Rational], y: &[Rational], terms: usize) -> Vec<Rational> {
    convolve_from(x, y, terms, 0)
}

/// Like [`convolve`] but only fills indices `>= start`; lower entries are zero.
///
/// Works on integer numerators over a common denominator so each output
/// coefficient is reduced once.
fn convolve_from(x: &[Rational], y: &[Rational], terms: usize, start: usize) -> Vec<Rational> {
    let terms = terms.min(x.len()).min(y.len());
    let (xn, dx) = common_denominator(&x[..terms]);
    let (yn, dy) = common_denominator(&y[..terms]);
    let mut acc = vec![BigInt::zero(); terms];
    for (i, xi) in xn.iter().enumerate() {
        if xi.is_zero() {
            continue;
        }
        let from = start.saturating_sub(i);
        for j in from..terms - i {
            let yj = &yn[j];
            if !yj.is_zero() {
                acc[i + j] += xi * yj;
            }
        }
    }
    let denom = dx * dy;
    acc.into_iter()
        .map(|n| Rational::new(n, denom.clone()))
        .collect()
}

/// Numerators over the least common denominator.
pub(crate) fn common_denominator(v: &[Rational]) -> (Vec<BigInt>, BigInt) {
    let d = v
        .iter()
        .filter(|c| !c.is_zero())
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let numers = v.iter().map(|c| c.numer() * (&d / c.denom())).collect();
    (numers, d)
}

/// Composes `sum_n outer[n] z^n` with a series `inner` whose leading exponent
/// is a positive integer `p`. The result has exponent 0 and is valid up to
/// `q^{min(p + inner.terms(), p * outer.len())}`.
pub fn compose(outer: &[Rational], inner: &QSeries) -> QSeries {
    let p = as_integer(inner.exponent())
        .filter(|&p| p >= 1)
        .expect("inner series must have a positive integral leading exponent") as usize;
    let terms = (p + inner.terms()).min(p * outer.len().max(1));
    let mut dense = vec![Rational::zero(); terms];
    for (i, c) in inner.coeffs().iter().enumerate() {
        if p + i < terms {
            dense[p + i] = c.clone();
        }
    }
    let mut out = Accumulator::new(terms);
    if let Some(c0) = outer.first() {
        out.add_scaled(c0, &QSeries::one(terms).coeffs, 0);
    }
    let mut power = dense.clone();
    for (n, c) in outer.iter().enumerate().skip(1) {
        if n * p >= terms {
            break;
        }
        out.add_scaled(c, &power, n * p);
        if (n + 1) * p < terms {
            power = convolve_from(&power, &dense, terms, (n + 1) * p);
        }
    }
    QSeries::new(Rational::zero(), out.finish())
}

/// Running sum of scaled coefficient vectors, kept as integer numerators
/// over one common denominator.
struct Accumulator {
    numers: Vec<BigInt>,
    denom: BigInt,
}

impl Accumulator {
    fn new(terms: usize) -> Self {
        Accumulator {
            numers: vec![BigInt::zero(); terms],
            denom: BigInt::one(),
        }
    }

    /// Adds `c * v[i]` for `i >= from`.
    fn add_scaled(&mut self, c: &Rational, v: &[Rational], from: usize) {
        if c.is_zero() {
            return;
        }
        let end = self.numers.len().min(v.len());
        if from >= end {
            return;
        }
        let (vn, vd) = common_denominator(&v[from..end]);
        let term_denom = vd * c.denom();
        let lcm = self.denom.lcm(&term_denom);
        let up = &lcm / &self.denom;
        if !up.is_one() {
            self.numers.iter_mut().for_each(|x| *x *= &up);
        }
        let factor = c.numer() * (&lcm / &term_denom);
        for (slot, x) in self.numers[from..end].iter_mut().zip(&vn) {
            if !x.is_zero() {
                *slot += &factor * x;
            }
        }
        self.denom = lcm;
    }

    fn finish(self) -> Vec<Rational> {
        let d = self.denom;
        self.numers
            .into_iter()
            .map(|n| Rational::new(n, d.clone()))
            .collect()
    }
}

fn fmt_power(f: &mut fmt::Formatter<'_>, exponent: &Rational) -> fmt::Result {
    if exponent.is_one() {
        write!(f, "q")
    } else if exponent.is_integer() && !exponent.is_negative() {
        write!(f, "q^{exponent}")
    } else {
        write!(f, "q^({exponent})")
    }
}

impl fmt::Display for QSeries {
    /// `q^(e) * (c0 + c1*q + ... + O(q^N))`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.exponent.is_zero() {
            fmt_power(f, &self.exponent)?;
            write!(f, " * ")?;
        }
        write!(f, "(")?;
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            let abs = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            if n == 0 {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                fmt_power(f, &int(n as i64))?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(")?;
        fmt_power(f, &int(self.terms() as i64))?;
        write!(f, "))")
    }
}

/// Parses `"P/Q"` or `"P"` into a rational.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    let (numer, denom) = match text.split_once('/') {
        Some((p, q)) => (
            p.trim().parse::<BigInt>().ok()?,
            q.trim().parse::<BigInt>().ok()?,
        ),
        None => (text.parse::<BigInt>().ok()?, BigInt::one()),
    };
    if denom.is_zero() {
        return None;
    }
    Some(Rational::new(numer, denom))
}

/// Greatest common divisor helper for `u64`.
pub(crate) fn gcd_u64(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn series(exp: Rational, c: &[i64]) -> QSeries {
        QSeries::from_integers(exp, c)
    }

    /// Euler's pentagonal-number expansion of prod (1 - q^n), built from the
    /// generalized pentagonal numbers directly.
    fn pentagonal(terms: usize) -> Vec<i64> {
        let mut c = vec![0i64; terms];
        for k in 0i64.. {
            let mut touched = false;
            for g in [k * (3 * k - 1) / 2, k * (3 * k + 1) / 2] {
                if (g as usize) < terms {
                    c[g as usize] = if k % 2 == 0 { 1 } else { -1 };
                    touched = true;
                }
            }
            if !touched {
                break;
            }
        }
        c
    }

    fn partitions(terms: usize) -> Vec<i64> {
        let mut p = vec![0i64; terms];
        p[0] = 1;
        for part in 1..terms {
            for n in part..terms {
                p[n] += p[n - part];
            }
        }
        p
    }

    #[test]
    fn add_cancels_and_aligns() {
        let e = rat(1, 4);
        let x = series(e.clone(), &[1, 1]);
        let y = series(e.clone(), &[1, -1]);
        assert_eq!(x.add(&y).unwrap(), series(e.clone(), &[2, 0]));
        assert_eq!(x.add(&QSeries::zero(2).shift(&e)).unwrap(), x);
    }

    #[test]
    fn add_rejects_fractional_gap() {
        let x = QSeries::monomial(rat(1, 3), 4);
        let y = QSeries::monomial(rat(-1, 12), 4);
        assert!(matches!(x.add(&y), Err(SeriesError::Misaligned { .. })));
    }

    #[test]
    fn add_with_offset_keeps_overlap() {
        let x = series(int(0), &[1, 2, 3, 4]);
        let y = series(int(2), &[10, 20, 30, 40]);
        let s = x.add(&y).unwrap();
        assert_eq!(s, series(int(0), &[1, 2, 13, 24]));
        let s = y.add(&x).unwrap();
        assert_eq!(s, series(int(0), &[1, 2, 13, 24]));
    }

    #[test]
    fn mul_difference_of_squares() {
        let x = series(rat(1, 24), &[1, -1, 0, 0]);
        let y = series(rat(-1, 24), &[1, 1, 0, 0]);
        assert_eq!(x.mul(&y), series(int(0), &[1, 0, -1, 0]));
        assert_eq!(x.mul(&QSeries::one(4)), x);
    }

    #[test]
    fn eta_squared_leading_terms() {
        let eta = QSeries::from_integers(rat(1, 24), &pentagonal(8));
        let sq = eta.mul(&eta);
        assert_eq!(sq.exponent(), &rat(1, 12));
        assert_eq!(
            sq.coeffs()[..4],
            series(int(0), &[1, -2, -1, 2]).coeffs()[..]
        );
    }

    #[test]
    fn invert_geometric_and_partitions() {
        let x = series(int(0), &[1, -1, 0, 0, 0]);
        assert_eq!(x.invert().unwrap(), series(int(0), &[1, 1, 1, 1, 1]));
        let m = QSeries::monomial(rat(1, 24), 3);
        assert_eq!(m.invert().unwrap(), QSeries::monomial(rat(-1, 24), 3));
        let eta = QSeries::from_integers(rat(1, 24), &pentagonal(30));
        let inv = eta.invert().unwrap();
        assert_eq!(inv.exponent(), &rat(-1, 24));
        assert_eq!(inv, QSeries::from_integers(rat(-1, 24), &partitions(30)));
        assert_eq!(series(int(0), &[0, 1]).invert(), Err(SeriesError::NonUnit));
    }

    #[test]
    fn pow_rational_small_cases() {
        let x = series(int(0), &[1, 1, 0, 0]);
        assert_eq!(
            x.pow_rational(&int(2)).unwrap(),
            series(int(0), &[1, 2, 1, 0])
        );
        assert_eq!(x.pow_rational(&int(0)).unwrap(), QSeries::one(4));
        let y = series(int(0), &[2, 1]);
        assert!(matches!(
            y.pow_rational(&int(2)),
            Err(SeriesError::NotNormalized(_))
        ));
        let m = QSeries::monomial(rat(1, 3), 3);
        assert_eq!(m.pow_rational(&rat(3, 2)).unwrap().exponent(), &rat(1, 2));
    }

    #[test]
    fn pow_rational_square_root_squares_back() {
        let x = series(int(0), &[1, 5, -3, 7, 2, 0, 1]);
        let root = x.pow_rational(&rat(1, 2)).unwrap();
        assert_eq!(root.mul(&root), x);
    }

    #[test]
    fn theta_examples() {
        assert!(QSeries::one(5).theta().is_zero());
        let m = QSeries::monomial(rat(1, 4), 2).theta();
        assert_eq!(m.coeff(0), &rat(1, 4));
        let x = series(rat(-1, 24), &[1, 3]).theta();
        assert_eq!(x.coeffs(), &[rat(-1, 24), rat(23, 8)]);
    }

    #[test]
    fn rescale_examples() {
        let x = series(int(0), &[1, 1, 0, 0, 0]);
        assert_eq!(x.rescale(3), series(int(0), &[1, 0, 0, 1, 0]));
        let eta = QSeries::from_integers(rat(1, 24), &pentagonal(10));
        assert_eq!(eta.rescale(2).exponent(), &rat(1, 12));
        let d3 = eta.rescale(3).pow_int(3).unwrap().div(&eta).unwrap();
        assert_eq!(d3.exponent(), &rat(1, 3));
    }

    #[test]
    fn trim_and_normalize() {
        let x = series(rat(1, 2), &[0, 0, 3, 6]);
        let t = x.trim_leading_zeros();
        assert_eq!(t, series(rat(5, 2), &[3, 6]));
        assert_eq!(t.normalize().unwrap(), series(rat(5, 2), &[1, 2]));
    }

    #[test]
    fn compose_geometric() {
        // 1/(1-z) composed with z = q/(1-q) gives (1-q)/(1-2q).
        let outer = vec![int(1); 8];
        let inner = QSeries::new(int(1), vec![int(1); 8]);
        let got = compose(&outer, &inner);
        let expected = series(int(0), &[1, 1, 2, 4, 8, 16, 32, 64]);
        assert!(got.agrees_with(&expected));
    }

    #[test]
    fn display_and_parse() {
        let x = series(rat(-1, 24), &[1, 3, 0, -4]);
        assert_eq!(x.to_string(), "q^(-1/24) * (1 + 3*q - 4*q^3 + O(q^4))");
        assert_eq!(parse_rational("-7/60"), Some(rat(-7, 60)));
        assert_eq!(parse_rational("4/6"), Some(rat(2, 3)));
        assert_eq!(parse_rational("12"), Some(int(12)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("x"), None);
    }

    /// Derivative recurrence for f^r (f_0 = 1): n g_n = sum ((r+1)k - n) f_k g_{n-k}.
    fn power_by_recurrence(x: &QSeries, r: &Rational) -> Vec<Rational> {
        let f = x.coeffs();
        let mut g = vec![Rational::one()];
        for n in 1..f.len() {
            let mut acc = Rational::zero();
            for k in 1..=n {
                acc += (r.clone() + int(1)) * int(k as i64) * &f[k] * &g[n - k]
                    - int(n as i64) * &f[k] * &g[n - k];
            }
            g.push(acc / int(n as i64));
        }
        g
    }

    fn arb_rational() -> impl Strategy<Value = Rational> {
        (-20i64..=20, 1i64..=6).prop_map(|(p, q)| rat(p, q))
    }

    fn arb_series(exp_denom: i64) -> impl Strategy<Value = QSeries> {
        (-12i64..=12, prop::collection::vec(arb_rational(), 6..10))
            .prop_map(move |(e, c)| QSeries::new(rat(e, exp_denom), c))
    }

    fn arb_unit_series() -> impl Strategy<Value = QSeries> {
        arb_series(24).prop_map(|s| {
            let mut c = s.coeffs().to_vec();
            c[0] = Rational::one();
            QSeries::new(s.exponent().clone(), c)
        })
    }

    proptest! {
        #[test]
        fn mul_commutative_associative(x in arb_series(12), y in arb_series(5), z in arb_series(7)) {
            prop_assert_eq!(x.mul(&y), y.mul(&x));
            prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
        }

        #[test]
        fn invert_is_involution(x in arb_unit_series()) {
            let inv = x.invert().unwrap();
            prop_assert_eq!(inv.invert().unwrap(), x.clone());
            prop_assert!(x.mul(&inv).agrees_with(&QSeries::one(x.terms())));
        }

        #[test]
        fn pow_rational_adds_exponents(x in arb_unit_series(), p in arb_rational(), r in arb_rational()) {
            let lhs = x.pow_rational(&p).unwrap().mul(&x.pow_rational(&r).unwrap());
            let rhs = x.pow_rational(&(&p + &r)).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn pow_rational_matches_recurrence(x in arb_unit_series(), r in arb_rational()) {
            let got = x.pow_rational(&r).unwrap();
            prop_assert_eq!(got.coeffs().to_vec(), power_by_recurrence(&x, &r));
        }

        #[test]
        fn pow_rational_integer_matches_repeated_mul(x in arb_unit_series(), k in 0i64..5) {
            prop_assert_eq!(x.pow_rational(&int(k)).unwrap(), x.pow_int(k).unwrap());
        }

        #[test]
        fn theta_is_derivation(x in arb_series(24), y in arb_series(60)) {
            let lhs = x.mul(&y).theta();
            let rhs = x.theta().mul(&y).add(&x.mul(&y.theta())).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn rescale_is_homomorphism(x in arb_series(24), y in arb_series(3), m in 1u32..5) {
            prop_assert_eq!(x.mul(&y).rescale(m), x.rescale(m).mul(&y.rescale(m)));
        }

        #[test]
        fn coefficients_stay_reduced(x in arb_series(24), y in arb_series(24)) {
            for c in x.mul(&y).coeffs().iter().chain(x.add(&y.shift(&(x.exponent() - y.exponent()))).unwrap().coeffs()) {
                prop_assert!(c.denom() > &BigInt::zero());
                prop_assert!(c.numer().gcd(c.denom()).is_one() || c.is_zero());
            }
        }
    }
}
