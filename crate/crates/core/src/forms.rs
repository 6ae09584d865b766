//! q-expansions of the modular objects used throughout the pipeline.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Pow, Zero};
use thiserror::Error;

use crate::series::{int, rat, QSeries, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormsError {
    #[error("no Eisenstein series of weight {0} in the catalog (supported: 2, 4, 6)")]
    UnsupportedWeight(u32),
    #[error("unknown form `{0}`")]
    UnknownForm(String),
}

/// Sum of `d^power` over the positive divisors `d` of `n`.
pub fn divisor_sum(n: u64, power: u32) -> BigInt {
    assert!(n >= 1);
    let mut total = BigInt::zero();
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            total += BigInt::from(d).pow(power);
            let e = n / d;
            if e != d {
                total += BigInt::from(e).pow(power);
            }
        }
        d += 1;
    }
    total
}

pub fn sigma1(n: u64) -> u64 {
    u64::try_from(divisor_sum(n, 1)).expect("sigma_1 fits in u64")
}

/// Level-1 Eisenstein series with constant term 1:
/// `E2 = 1 - 24 sum sigma_1(n) q^n`, `E4 = 1 + 240 sum sigma_3(n) q^n`,
/// `E6 = 1 - 504 sum sigma_5(n) q^n`.
pub fn eisenstein(weight: u32, terms: usize) -> Result<QSeries, FormsError> {
    let scale: i64 = match weight {
        2 => -24,
        4 => 240,
        6 => -504,
        other => return Err(FormsError::UnsupportedWeight(other)),
    };
    let mut coeffs = Vec::with_capacity(terms);
    coeffs.push(Rational::one());
    for n in 1..terms as u64 {
        coeffs.push(Rational::from_integer(divisor_sum(n, weight - 1) * scale));
    }
    Ok(QSeries::new(Rational::zero(), coeffs))
}

pub fn e2(terms: usize) -> QSeries {
    eisenstein(2, terms).expect("weight 2 is supported")
}

pub fn e4(terms: usize) -> QSeries {
    eisenstein(4, terms).expect("weight 4 is supported")
}

pub fn e6(terms: usize) -> QSeries {
    eisenstein(6, terms).expect("weight 6 is supported")
}

/// `Delta = (E4^3 - E6^2) / 1728 = q - 24 q^2 + ...`.
pub fn discriminant(terms: usize) -> QSeries {
    // One extra term is consumed by the vanishing constant coefficient.
    let e4 = e4(terms + 1);
    let e6 = e6(terms + 1);
    let cube = e4.pow_int(3).expect("nonnegative power");
    let diff = cube.sub(&e6.mul(&e6)).expect("aligned at exponent 0");
    diff.trim_leading_zeros()
        .scale(&rat(1, 1728))
        .truncate(terms)
}

/// `j = E4^3 / Delta = q^{-1} + 744 + 196884 q + ...`.
pub fn j_function(terms: usize) -> QSeries {
    let cube = e4(terms).pow_int(3).expect("nonnegative power");
    cube.div(&discriminant(terms))
        .expect("Delta has unit leading coefficient")
}

/// `K / (1728 q) = Delta / (q E4^3) = 1 - 744 q + 356652 q^2 - ...`.
pub fn hauptmodul_k_unit(terms: usize) -> QSeries {
    let cube = e4(terms).pow_int(3).expect("nonnegative power");
    discriminant(terms)
        .div(&cube)
        .expect("E4 is a unit")
        .shift(&int(-1))
}

/// The level-1 hauptmodul `K = 1728 / j = 1728 q (1 - 744 q + ...)`.
pub fn hauptmodul_k(terms: usize) -> QSeries {
    hauptmodul_k_unit(terms).scale(&int(1728)).shift(&int(1))
}

/// Dedekind eta `q^{1/24} prod (1 - q^n)`.
pub fn eta(terms: usize) -> QSeries {
    let mut coeffs = vec![Rational::zero(); terms.max(1)];
    coeffs[0] = Rational::one();
    for part in 1..coeffs.len() {
        for n in (part..coeffs.len()).rev() {
            let prev = coeffs[n - part].clone();
            coeffs[n] -= prev;
        }
    }
    QSeries::new(rat(1, 24), coeffs)
}

/// `Delta_3 = eta(3 tau)^3 / eta(tau) = q^{1/3} (1 + q + 2 q^2 + ...)`.
pub fn delta3(terms: usize) -> QSeries {
    let eta = eta(terms);
    eta.rescale(3)
        .pow_int(3)
        .expect("nonnegative power")
        .div(&eta)
        .expect("eta has unit leading coefficient")
}

/// Character of `Z/3`: `(d/3)` as +1, -1, 0 for `d = 1, 2, 0 mod 3`.
pub fn legendre3(d: u64) -> i64 {
    match d % 3 {
        1 => 1,
        2 => -1,
        _ => 0,
    }
}

/// `I_3 = 1 + 6 sum_n (sum_{d|n} (d/3)) q^n`.
pub fn i3(terms: usize) -> QSeries {
    let mut coeffs = Vec::with_capacity(terms);
    coeffs.push(Rational::one());
    for n in 1..terms as u64 {
        let s: i64 = (1..=n).filter(|d| n % d == 0).map(legendre3).sum();
        coeffs.push(int(6 * s));
    }
    QSeries::new(Rational::zero(), coeffs)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FormName {
    E2,
    E4,
    E6,
    Delta,
    J,
    K,
    Eta,
    Delta3,
    I3,
}

impl FormName {
    pub const ALL: [FormName; 9] = [
        FormName::E2,
        FormName::E4,
        FormName::E6,
        FormName::Delta,
        FormName::J,
        FormName::K,
        FormName::Eta,
        FormName::Delta3,
        FormName::I3,
    ];

    pub fn entry(self) -> FormCatalogEntry {
        let (weight, level) = match self {
            FormName::E2 => (int(2), 1),
            FormName::E4 => (int(4), 1),
            FormName::E6 => (int(6), 1),
            FormName::Delta => (int(12), 1),
            FormName::J | FormName::K => (int(0), 1),
            FormName::Eta => (rat(1, 2), 1),
            FormName::Delta3 | FormName::I3 => (int(1), 3),
        };
        FormCatalogEntry {
            name: self,
            weight,
            level,
        }
    }

    pub fn leading_exponent(self) -> Rational {
        match self {
            FormName::E2 | FormName::E4 | FormName::E6 | FormName::I3 => int(0),
            FormName::Delta | FormName::K => int(1),
            FormName::J => int(-1),
            FormName::Eta => rat(1, 24),
            FormName::Delta3 => rat(1, 3),
        }
    }

    pub fn series(self, terms: usize) -> QSeries {
        match self {
            FormName::E2 => e2(terms),
            FormName::E4 => e4(terms),
            FormName::E6 => e6(terms),
            FormName::Delta => discriminant(terms),
            FormName::J => j_function(terms),
            FormName::K => hauptmodul_k(terms),
            FormName::Eta => eta(terms),
            FormName::Delta3 => delta3(terms),
            FormName::I3 => i3(terms),
        }
    }
}

impl fmt::Display for FormName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            FormName::E2 => "E2",
            FormName::E4 => "E4",
            FormName::E6 => "E6",
            FormName::Delta => "Delta",
            FormName::J => "j",
            FormName::K => "K",
            FormName::Eta => "eta",
            FormName::Delta3 => "Delta3",
            FormName::I3 => "I3",
        };
        f.write_str(s)
    }
}

impl FromStr for FormName {
    type Err = FormsError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        FormName::ALL
            .into_iter()
            .find(|f| f.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| FormsError::UnknownForm(s.to_string()))
    }
}

/// Weight is rational because eta has weight 1/2; level is informational.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormCatalogEntry {
    pub name: FormName,
    pub weight: Rational,
    pub level: u32,
}
