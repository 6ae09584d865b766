//! The admissible T-exponent pairs `{m1, m2}` with `m1 + m2 = 7/6`.

use crate::series::{frac, rat, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExponentPair {
    pub m1: Rational,
    pub m2: Rational,
}

impl ExponentPair {
    fn new(m1: (i64, i64), m2: (i64, i64)) -> Self {
        ExponentPair {
            m1: rat(m1.0, m1.1),
            m2: rat(m2.0, m2.1),
        }
    }

    pub fn contains(&self, residue: &Rational) -> bool {
        &self.m1 == residue || &self.m2 == residue
    }
}

/// The nine irreducible congruence representations with `m1 + m2 = 7/6`.
pub fn admissible_pairs() -> Vec<ExponentPair> {
    [
        ((5, 6), (1, 3)),
        ((3, 4), (5, 12)),
        ((11, 12), (1, 4)),
        ((23, 24), (5, 24)),
        ((17, 24), (11, 24)),
        ((53, 60), (17, 60)),
        ((47, 60), (23, 60)),
        ((41, 60), (29, 60)),
        ((59, 60), (11, 60)),
    ]
    .into_iter()
    .map(|(m1, m2)| ExponentPair::new(m1, m2))
    .collect()
}

/// All 18 residues appearing in [`admissible_pairs`].
pub fn admissible_residues() -> Vec<Rational> {
    admissible_pairs()
        .into_iter()
        .flat_map(|p| [p.m1, p.m2])
        .collect()
}

/// The pair containing `frac(x)`, if any.
pub fn pair_for(x: &Rational) -> Option<ExponentPair> {
    let r = frac(x);
    admissible_pairs().into_iter().find(|p| p.contains(&r))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::{Signed, Zero};

    #[test]
    fn pairs_sum_to_seven_sixths_and_lie_in_unit_interval() {
        let pairs = admissible_pairs();
        assert_eq!(pairs.len(), 9);
        for p in &pairs {
            assert_eq!(&p.m1 + &p.m2, rat(7, 6));
            for m in [&p.m1, &p.m2] {
                assert!(!m.is_negative() && m < &rat(1, 1) && !m.is_zero());
            }
        }
        let mut residues = admissible_residues();
        residues.sort();
        residues.dedup();
        assert_eq!(residues.len(), 18);
    }

    #[test]
    fn lookup() {
        assert!(pair_for(&rat(-1, 24)).is_some());
        assert!(pair_for(&rat(-49, 120)).is_none());
        assert_eq!(pair_for(&rat(35, 12)).unwrap().m1, rat(11, 12));
    }
}
