//! Enumerates central-charge candidates and runs the elimination cascade:
//! T-exponents, integrality of `f1`, positivity of `f2`, effective central
//! charge, Lie algebra structure of `V_1`, and the discrete series.

mod candidate;
mod discrete;
mod exponents;
mod lie;
mod pythagorean;

use rayon::prelude::*;
use thiserror::Error;

pub use candidate::{
    candidates_from_pair, dim_v1, effective_central_charge, exponent_filter, integrality_filter,
    integrality_of, positivity_filter, positivity_of, Candidate, FilterOutcome, KnownVoa, Verdict,
};
pub use discrete::{discrete_series_contains, discrete_series_value, discrete_series_witness};
pub use exponents::{admissible_pairs, admissible_residues, pair_for, ExponentPair};
pub use lie::{reductive_enumerate, simple_algebras, LieFamily, LieSolution, SimpleLie};
pub use pythagorean::{pythagorean_pairs, PythagoreanPair};

use crate::hypergeom::{character_series, HypergeomError};
use crate::series::Rational;
use num_traits::{Signed, ToPrimitive};

/// Truncation depth for the integrality and positivity filters.
pub const DEFAULT_FILTER_TERMS: usize = 32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("central charge 10 is excluded (c = -24a != 10)")]
    CentralChargeTen,
    #[error("expected exactly one of -24a, -24b positive for a = {a}, b = {b}")]
    EffectiveCentralCharge { a: String, b: String },
    #[error(transparent)]
    Hypergeom(#[from] HypergeomError),
}

/// Why a surviving candidate was identified, kept for reporting.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Analysis {
    /// Reductive algebras compatible with `dim V_1 = m` and rank `<= c~`.
    pub lie_solutions: Vec<LieSolution>,
    /// Subset that also passes the discrete-series requirement.
    pub admissible: Vec<LieSolution>,
    /// Discrete-series witness `(p, q)` for `c - rank` where it was needed.
    pub witnesses: Vec<(LieSolution, (u64, u64))>,
    /// Identification rests on a level-1 fact imported rather than computed
    /// (the G2 and F4 cases).
    pub imported_level_one: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassifiedCandidate {
    pub candidate: Candidate,
    pub verdict: Verdict,
    pub analysis: Option<Analysis>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub terms: usize,
    pub candidates: Vec<ClassifiedCandidate>,
}

impl Classification {
    /// Candidates that passed the exponent, integrality and positivity
    /// filters.
    pub fn series_survivors(&self) -> impl Iterator<Item = &ClassifiedCandidate> {
        self.candidates
            .iter()
            .filter(|c| c.verdict.passed_series_filters())
    }

    pub fn identified(&self) -> Vec<KnownVoa> {
        let mut out: Vec<KnownVoa> = self
            .candidates
            .iter()
            .filter_map(|c| match &c.verdict {
                Verdict::Identified(v) => Some(v.clone()),
                _ => None,
            })
            .collect();
        out.sort();
        out
    }

    pub fn residual(&self) -> Vec<&ClassifiedCandidate> {
        self.candidates
            .iter()
            .filter(|c| c.verdict == Verdict::ResidualSMatrix)
            .collect()
    }

    /// Eliminated after surviving the series filters (Lie, discrete series,
    /// or effective central charge).
    pub fn late_eliminations(&self) -> Vec<&ClassifiedCandidate> {
        self.series_survivors()
            .filter(|c| c.verdict.is_eliminated())
            .collect()
    }

    /// Identified theories with exactly two simple modules.
    pub fn two_module_theories(&self) -> Vec<KnownVoa> {
        self.identified()
            .into_iter()
            .filter(|v| v.simple_module_count() == 2)
            .collect()
    }
}

/// All candidates in Pythagorean order (by `m`, then `+s` before `-s`).
pub fn all_candidates() -> Vec<Candidate> {
    pythagorean_pairs()
        .into_iter()
        .flat_map(|p| candidates_from_pair(p).expect("no pair yields c = 10"))
        .collect()
}

/// Runs the full cascade; per-candidate work is independent and runs in
/// parallel.
pub fn classify(terms: usize) -> Result<Classification, ClassifyError> {
    let candidates = all_candidates()
        .into_par_iter()
        .map(|cand| classify_one(cand, terms))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Classification { terms, candidates })
}

/// Verdict for a single candidate.
pub fn classify_one(
    mut cand: Candidate,
    terms: usize,
) -> Result<ClassifiedCandidate, ClassifyError> {
    let (verdict, analysis) = decide(&cand, terms)?;
    cand.verdict = Some(verdict.clone());
    Ok(ClassifiedCandidate {
        candidate: cand,
        verdict,
        analysis,
    })
}

fn decide(cand: &Candidate, terms: usize) -> Result<(Verdict, Option<Analysis>), ClassifyError> {
    if !exponent_filter(cand) {
        return Ok((Verdict::EliminatedExponent, None));
    }
    let f1 = character_series(&cand.a, terms)?;
    if let FilterOutcome::Fail { index, value } = integrality_of(&f1) {
        return Ok((Verdict::EliminatedIntegrality { index, value }, None));
    }
    let f2 = character_series(&cand.b, terms)?;
    if let FilterOutcome::Fail { index, value } = positivity_of(&f2) {
        return Ok((
            Verdict::EliminatedPositivity {
                index: Some(index),
                value,
            },
            None,
        ));
    }
    if !cand.c_tilde.is_positive() {
        return Ok((
            Verdict::EliminatedPositivity {
                index: None,
                value: cand.c_tilde.clone(),
            },
            None,
        ));
    }
    Ok(structural_verdict(cand))
}

/// Lie-theoretic stage, applied to candidates with a valid character pair.
fn structural_verdict(cand: &Candidate) -> (Verdict, Option<Analysis>) {
    let max_rank = cand.c_tilde.floor().to_integer().to_u64().unwrap_or(0);
    // V_1 = 0 is the only option when m = 0.
    let lie_solutions = if cand.m == 0 {
        vec![LieSolution::new(Vec::new(), 0)]
    } else {
        reductive_enumerate(cand.m, max_rank)
    };
    let mut analysis = Analysis {
        lie_solutions: lie_solutions.clone(),
        admissible: Vec::new(),
        witnesses: Vec::new(),
        imported_level_one: false,
    };
    if lie_solutions.is_empty() {
        return (Verdict::EliminatedLie, Some(analysis));
    }
    // c~ < rank + 1 forces c - rank into the discrete series.
    for sol in &lie_solutions {
        let rank = Rational::from_integer((sol.rank() as i64).into());
        if cand.c_tilde < &rank + Rational::from_integer(1.into()) {
            if let Some(w) = discrete_series_witness(&(&cand.c - &rank)) {
                analysis.witnesses.push((sol.clone(), w));
                analysis.admissible.push(sol.clone());
            }
        } else {
            analysis.admissible.push(sol.clone());
        }
    }
    if analysis.admissible.is_empty() {
        return (Verdict::EliminatedDiscreteSeries, Some(analysis));
    }

    // c~ = 2/5 pins down the Yang-Lee model (and excludes c != -22/5).
    if cand.c_tilde == crate::series::rat(2, 5) {
        let verdict = if cand.c == crate::series::rat(-22, 5) {
            Verdict::Identified(KnownVoa::YangLee)
        } else {
            Verdict::EliminatedLie
        };
        return (verdict, Some(analysis));
    }

    // c = rank = c~: a lattice theory, so V_1 must be simply laced.
    let lattice: Vec<&LieSolution> = analysis
        .admissible
        .iter()
        .filter(|s| {
            let rank = Rational::from_integer((s.rank() as i64).into());
            cand.c == rank && cand.c_tilde == rank && s.is_simply_laced()
        })
        .collect();
    if let [only] = lattice.as_slice() {
        if let Some(voa) = only.as_simple().and_then(affine_voa) {
            return (Verdict::Identified(voa), Some(analysis));
        }
    }

    // Non-simply-laced G2 / F4 with c != rank: level one is imported.
    if let [only] = analysis.admissible.as_slice() {
        if let Some(simple) = only.as_simple() {
            if matches!(simple.family, LieFamily::G | LieFamily::F) {
                if let Some(voa) = affine_voa(simple) {
                    analysis.imported_level_one = true;
                    return (Verdict::Identified(voa), Some(analysis));
                }
            }
        }
    }

    (Verdict::ResidualSMatrix, Some(analysis))
}

fn affine_voa(alg: SimpleLie) -> Option<KnownVoa> {
    use LieFamily::*;
    match (alg.family, alg.rank) {
        (A, 1) => Some(KnownVoa::A1),
        (A, 2) => Some(KnownVoa::A2),
        (G, 2) => Some(KnownVoa::G2),
        (D, 4) => Some(KnownVoa::D4),
        (F, 4) => Some(KnownVoa::F4),
        (E, 6) => Some(KnownVoa::E6),
        (E, 7) => Some(KnownVoa::E7),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::{int, rat};

    fn verdict_for(c: Rational) -> Verdict {
        let pair = pythagorean_pairs()
            .into_iter()
            .find(|p| candidates_from_pair(*p).unwrap().iter().any(|x| x.c == c))
            .unwrap();
        let cand = candidates_from_pair(pair)
            .unwrap()
            .into_iter()
            .find(|x| x.c == c)
            .unwrap();
        classify_one(cand, 16).unwrap().verdict
    }

    #[test]
    fn case_verdicts() {
        assert_eq!(verdict_for(int(7)), Verdict::Identified(KnownVoa::E7));
        assert_eq!(verdict_for(int(-5)), Verdict::EliminatedDiscreteSeries);
        assert_eq!(verdict_for(rat(14, 5)), Verdict::Identified(KnownVoa::G2));
        assert_eq!(verdict_for(rat(2, 5)), Verdict::EliminatedLie);
        assert_eq!(verdict_for(rat(38, 5)), Verdict::EliminatedLie);
        assert_eq!(verdict_for(int(0)), Verdict::EliminatedExponent);
        assert_eq!(verdict_for(int(-6)), Verdict::ResidualSMatrix);
        assert!(matches!(
            verdict_for(int(-70)),
            Verdict::EliminatedIntegrality { index: 2, .. }
        ));
        assert!(matches!(
            verdict_for(int(-20)),
            Verdict::EliminatedPositivity { index: Some(1), .. }
        ));
    }

    #[test]
    fn g2_candidate_roots() {
        let cands = all_candidates();
        let g2 = cands.iter().find(|c| c.c == rat(14, 5)).unwrap();
        assert_eq!((g2.a.clone(), g2.b.clone()), (rat(-7, 60), rat(17, 60)));
    }

    #[test]
    fn classification_is_order_independent() {
        let forward = classify(12).unwrap();
        let mut cands = all_candidates();
        cands.reverse();
        let mut backward: Vec<ClassifiedCandidate> = cands
            .into_iter()
            .map(|c| classify_one(c, 12).unwrap())
            .collect();
        backward.reverse();
        assert_eq!(forward.candidates, backward);
    }
}
