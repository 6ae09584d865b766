//! Nonnegative solutions of `s^2 + 120^2 = (m + 122)^2`.

use num_integer::Integer;

/// One solution `(s, m)`; `m` is the candidate `dim V_1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PythagoreanPair {
    pub s: u64,
    pub m: u64,
}

impl PythagoreanPair {
    pub fn verify(&self) -> bool {
        let hyp = self.m + 122;
        self.s * self.s + 120 * 120 == hyp * hyp
    }
}

/// Every solution, sorted by `m`. Writes `120^2 = (m + 122 - s)(m + 122 + s)`
/// and walks the factor pairs `d1 <= d2` of equal parity.
pub fn pythagorean_pairs() -> Vec<PythagoreanPair> {
    const LEG: u64 = 120 * 120;
    let mut out = Vec::new();
    let mut d1 = 1u64;
    while d1 * d1 <= LEG {
        if LEG.is_multiple_of(d1) {
            let d2 = LEG / d1;
            if d1.is_even() == d2.is_even() {
                let hyp = (d1 + d2) / 2;
                let s = (d2 - d1) / 2;
                if hyp >= 122 {
                    let pair = PythagoreanPair { s, m: hyp - 122 };
                    debug_assert!(pair.verify());
                    out.push(pair);
                }
            }
        }
        d1 += 1;
    }
    out.sort_by_key(|p| (p.m, p.s));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn census_matches_brute_force() {
        let pairs = pythagorean_pairs();
        assert_eq!(pairs.len(), 22);
        // Brute force over m; hypotenuse h = m + 122 forces s < h.
        let mut brute = Vec::new();
        for m in 0u64..10_000 {
            let h = m + 122;
            let s2 = h * h - 14400;
            let s = (s2 as f64).sqrt().round() as u64;
            for cand in s.saturating_sub(1)..=s + 1 {
                if cand * cand == s2 {
                    brute.push(PythagoreanPair { s: cand, m });
                }
            }
        }
        assert_eq!(pairs, brute);
        assert!(pairs.iter().all(PythagoreanPair::verify));
    }

    #[test]
    fn known_members() {
        let pairs = pythagorean_pairs();
        for (s, m) in [(3599, 3479), (22, 0), (90, 28), (225, 133)] {
            assert!(pairs.contains(&PythagoreanPair { s, m }), "({s}, {m})");
        }
        assert!(!pairs.contains(&PythagoreanPair { s: 0, m: 28 }));
    }
}
