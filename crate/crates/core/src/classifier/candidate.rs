//! Candidate central charges and the series-level filters.

use num_traits::{Signed, Zero};

use super::exponents::pair_for;
use super::pythagorean::PythagoreanPair;
use super::ClassifyError;
use crate::hypergeom::character_series;
use crate::series::{int, rat, QSeries, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum KnownVoa {
    A1,
    A2,
    G2,
    D4,
    F4,
    E6,
    E7,
    YangLee,
}

impl KnownVoa {
    pub const ALL: [KnownVoa; 8] = [
        KnownVoa::A1,
        KnownVoa::A2,
        KnownVoa::G2,
        KnownVoa::D4,
        KnownVoa::F4,
        KnownVoa::E6,
        KnownVoa::E7,
        KnownVoa::YangLee,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            KnownVoa::A1 => "L(A1,1)",
            KnownVoa::A2 => "L(A2,1)",
            KnownVoa::G2 => "L(G2,1)",
            KnownVoa::D4 => "L(D4,1)",
            KnownVoa::F4 => "L(F4,1)",
            KnownVoa::E6 => "L(E6,1)",
            KnownVoa::E7 => "L(E7,1)",
            KnownVoa::YangLee => "Vir(c_{2,5})",
        }
    }

    /// Short label used in tables (`A1`, ..., `Yang-Lee`).
    pub fn label(&self) -> &'static str {
        match self {
            KnownVoa::A1 => "A1",
            KnownVoa::A2 => "A2",
            KnownVoa::G2 => "G2",
            KnownVoa::D4 => "D4",
            KnownVoa::F4 => "F4",
            KnownVoa::E6 => "E6",
            KnownVoa::E7 => "E7",
            KnownVoa::YangLee => "Yang-Lee",
        }
    }

    /// Number of simple modules. For the level-1 affine algebras this is the
    /// order of the weight lattice modulo the root lattice.
    pub fn simple_module_count(&self) -> u32 {
        match self {
            KnownVoa::A1 | KnownVoa::G2 | KnownVoa::F4 | KnownVoa::E7 | KnownVoa::YangLee => 2,
            KnownVoa::A2 | KnownVoa::E6 => 3,
            KnownVoa::D4 => 4,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Identified(KnownVoa),
    EliminatedExponent,
    /// First non-integral coefficient of `f1`.
    EliminatedIntegrality {
        index: usize,
        value: Rational,
    },
    /// First negative coefficient of `f2`, or `index = None` when the
    /// effective central charge is not positive.
    EliminatedPositivity {
        index: Option<usize>,
        value: Rational,
    },
    EliminatedLie,
    EliminatedDiscreteSeries,
    ResidualSMatrix,
}

impl Verdict {
    pub fn is_eliminated(&self) -> bool {
        !matches!(self, Verdict::Identified(_) | Verdict::ResidualSMatrix)
    }

    /// Survived the exponent, integrality and positivity filters.
    pub fn passed_series_filters(&self) -> bool {
        !matches!(
            self,
            Verdict::EliminatedExponent
                | Verdict::EliminatedIntegrality { .. }
                | Verdict::EliminatedPositivity { index: Some(_), .. }
        )
    }

    pub fn tag(&self) -> &'static str {
        match self {
            Verdict::Identified(_) => "Identified",
            Verdict::EliminatedExponent => "EliminatedExponent",
            Verdict::EliminatedIntegrality { .. } => "EliminatedIntegrality",
            Verdict::EliminatedPositivity { .. } => "EliminatedPositivity",
            Verdict::EliminatedLie => "EliminatedLie",
            Verdict::EliminatedDiscreteSeries => "EliminatedDiscreteSeries",
            Verdict::ResidualSMatrix => "ResidualSMatrix",
        }
    }
}

/// One sign choice of `c = (-(22 + m) +- s) / 10`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Candidate {
    pub s: u64,
    pub m: u64,
    pub c: Rational,
    pub a: Rational,
    pub b: Rational,
    /// Conformal weight `b + c/24` of the second module.
    pub h: Rational,
    /// `c - 24 min(0, h)`.
    pub c_tilde: Rational,
    pub k1: Rational,
    pub verdict: Option<Verdict>,
}

impl Candidate {
    pub fn from_central_charge(s: u64, m: u64, c: Rational) -> Result<Self, ClassifyError> {
        if c == int(10) {
            return Err(ClassifyError::CentralChargeTen);
        }
        let a = -&c / int(24);
        let b = rat(1, 6) - &a;
        let h = &b + &c / int(24);
        let h_min = if h.is_negative() {
            h.clone()
        } else {
            Rational::zero()
        };
        let c_tilde = &c - h_min * int(24);
        let k1 = -(&a * &b);
        Ok(Candidate {
            s,
            m,
            c,
            a,
            b,
            h,
            c_tilde,
            k1,
            verdict: None,
        })
    }

    /// `5c^2 + (22 + m)c - 10m = 0`.
    pub fn satisfies_dimension_law(&self) -> bool {
        let m = int(self.m as i64);
        let lhs = &self.c * &self.c * int(5) + (int(22) + &m) * &self.c - m * int(10);
        lhs.is_zero() && dim_v1(&self.c) == int(self.m as i64)
    }
}

/// `dim V_1 = c (5c + 22) / (10 - c)`.
pub fn dim_v1(c: &Rational) -> Rational {
    c * (c * int(5) + int(22)) / (int(10) - c)
}

/// Both sign choices for one Pythagorean solution, `+s` first.
pub fn candidates_from_pair(pair: PythagoreanPair) -> Result<[Candidate; 2], ClassifyError> {
    let base = -int(22 + pair.m as i64);
    let s = int(pair.s as i64);
    let plus = (&base + &s) / int(10);
    let minus = (&base - &s) / int(10);
    Ok([
        Candidate::from_central_charge(pair.s, pair.m, plus)?,
        Candidate::from_central_charge(pair.s, pair.m, minus)?,
    ])
}

/// `frac(a)` is one of the admissible T-exponents.
pub fn exponent_filter(cand: &Candidate) -> bool {
    pair_for(&cand.a).is_some()
}

/// Outcome of a coefficient test on a normalized character.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FilterOutcome {
    Pass,
    Fail { index: usize, value: Rational },
}

impl FilterOutcome {
    pub fn passed(&self) -> bool {
        matches!(self, FilterOutcome::Pass)
    }
}

/// `f1 = character_series(a)` has integral coefficients through `terms`.
pub fn integrality_filter(cand: &Candidate, terms: usize) -> Result<FilterOutcome, ClassifyError> {
    let f1 = character_series(&cand.a, terms)?;
    Ok(integrality_of(&f1))
}

pub fn integrality_of(f: &QSeries) -> FilterOutcome {
    match f.first_non_integral() {
        Some((index, value)) => FilterOutcome::Fail {
            index,
            value: value.clone(),
        },
        None => FilterOutcome::Pass,
    }
}

/// The partner `f2 = character_series(b)` has no negative coefficient.
pub fn positivity_filter(cand: &Candidate, terms: usize) -> Result<FilterOutcome, ClassifyError> {
    let f2 = character_series(&cand.b, terms)?;
    Ok(positivity_of(&f2))
}

pub fn positivity_of(f: &QSeries) -> FilterOutcome {
    match f.first_negative() {
        Some((index, value)) => FilterOutcome::Fail {
            index,
            value: value.clone(),
        },
        None => FilterOutcome::Pass,
    }
}

/// The unique positive member of `{-24a, -24b}`.
pub fn effective_central_charge(a: &Rational, b: &Rational) -> Result<Rational, ClassifyError> {
    let ca = -a * int(24);
    let cb = -b * int(24);
    match (ca.is_positive(), cb.is_positive()) {
        (true, false) => Ok(ca),
        (false, true) => Ok(cb),
        _ => Err(ClassifyError::EffectiveCentralCharge {
            a: a.to_string(),
            b: b.to_string(),
        }),
    }
}
