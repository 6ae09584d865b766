//! Reductive Lie algebras of a given dimension and bounded rank.
//!
//! Simple summands are enumerated over A (rank >= 1), B (>= 2), C (>= 3),
//! D (>= 4) and the exceptionals so that isomorphic low-rank aliases
//! (B1 = C1 = A1, C2 = B2, D2 = A1 + A1, D3 = A3) are counted once.

use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LieFamily {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl fmt::Display for LieFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            LieFamily::A => "A",
            LieFamily::B => "B",
            LieFamily::C => "C",
            LieFamily::D => "D",
            LieFamily::E => "E",
            LieFamily::F => "F",
            LieFamily::G => "G",
        };
        f.write_str(c)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimpleLie {
    pub family: LieFamily,
    pub rank: u32,
}

impl SimpleLie {
    pub const fn new(family: LieFamily, rank: u32) -> Self {
        SimpleLie { family, rank }
    }

    /// `None` for a (family, rank) that is not a canonical simple algebra.
    pub fn dimension(&self) -> Option<u64> {
        let l = self.rank as u64;
        match (self.family, self.rank) {
            (LieFamily::A, r) if r >= 1 => Some(l * (l + 2)),
            (LieFamily::B, r) if r >= 2 => Some(l * (2 * l + 1)),
            (LieFamily::C, r) if r >= 3 => Some(l * (2 * l + 1)),
            (LieFamily::D, r) if r >= 4 => Some(l * (2 * l - 1)),
            (LieFamily::E, 6) => Some(78),
            (LieFamily::E, 7) => Some(133),
            (LieFamily::E, 8) => Some(248),
            (LieFamily::F, 4) => Some(52),
            (LieFamily::G, 2) => Some(14),
            _ => None,
        }
    }

    pub fn is_simply_laced(&self) -> bool {
        matches!(self.family, LieFamily::A | LieFamily::D | LieFamily::E)
    }
}

impl fmt::Display for SimpleLie {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

/// Canonical simple algebras with dimension at most `max_dim` and rank at
/// most `max_rank`, sorted by (family, rank).
pub fn simple_algebras(max_dim: u64, max_rank: u32) -> Vec<SimpleLie> {
    let mut out = Vec::new();
    for family in [LieFamily::A, LieFamily::B, LieFamily::C, LieFamily::D] {
        for rank in 1..=max_rank {
            let alg = SimpleLie::new(family, rank);
            match alg.dimension() {
                Some(d) if d <= max_dim => out.push(alg),
                Some(_) => break,
                None => {}
            }
        }
    }
    for alg in [
        SimpleLie::new(LieFamily::E, 6),
        SimpleLie::new(LieFamily::E, 7),
        SimpleLie::new(LieFamily::E, 8),
        SimpleLie::new(LieFamily::F, 4),
        SimpleLie::new(LieFamily::G, 2),
    ] {
        if alg.rank <= max_rank && alg.dimension().is_some_and(|d| d <= max_dim) {
            out.push(alg);
        }
    }
    out.sort();
    out
}

/// A reductive Lie algebra: semisimple part as a sorted multiset of simple
/// summands plus an abelian summand of the given rank.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LieSolution {
    pub simple_summands: Vec<SimpleLie>,
    pub abelian_rank: u64,
}

impl LieSolution {
    pub fn new(mut simple_summands: Vec<SimpleLie>, abelian_rank: u64) -> Self {
        simple_summands.sort();
        LieSolution {
            simple_summands,
            abelian_rank,
        }
    }

    pub fn dimension(&self) -> u64 {
        self.simple_summands
            .iter()
            .map(|s| s.dimension().expect("canonical summand"))
            .sum::<u64>()
            + self.abelian_rank
    }

    pub fn rank(&self) -> u64 {
        self.simple_summands
            .iter()
            .map(|s| s.rank as u64)
            .sum::<u64>()
            + self.abelian_rank
    }

    /// Root system is of type ADE (abelian part allowed).
    pub fn is_simply_laced(&self) -> bool {
        self.simple_summands.iter().all(SimpleLie::is_simply_laced)
    }

    /// Single simple summand and no centre.
    pub fn as_simple(&self) -> Option<SimpleLie> {
        match (self.simple_summands.as_slice(), self.abelian_rank) {
            ([only], 0) => Some(*only),
            _ => None,
        }
    }
}

impl fmt::Display for LieSolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self
            .simple_summands
            .iter()
            .map(ToString::to_string)
            .collect();
        match self.abelian_rank {
            0 => {}
            1 => parts.push("u(1)".into()),
            r => parts.push(format!("u(1)^{r}")),
        }
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join("+"))
        }
    }
}

/// All reductive Lie algebras of dimension `dim` and rank at most `max_rank`.
pub fn reductive_enumerate(dim: u64, max_rank: u64) -> Vec<LieSolution> {
    let rank_cap = u32::try_from(max_rank).unwrap_or(u32::MAX);
    let pool = simple_algebras(dim, rank_cap);
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    extend(&pool, 0, dim, max_rank, &mut chosen, &mut out);
    out.sort();
    out
}

fn extend(
    pool: &[SimpleLie],
    start: usize,
    dim_left: u64,
    rank_left: u64,
    chosen: &mut Vec<SimpleLie>,
    out: &mut Vec<LieSolution>,
) {
    // Fill the rest with an abelian summand (its rank equals its dimension).
    if dim_left <= rank_left {
        out.push(LieSolution::new(chosen.clone(), dim_left));
    }
    for (i, alg) in pool.iter().enumerate().skip(start) {
        let d = alg.dimension().expect("pool is canonical");
        let r = alg.rank as u64;
        if d > dim_left || r > rank_left {
            continue;
        }
        chosen.push(*alg);
        extend(pool, i, dim_left - d, rank_left - r, chosen, out);
        chosen.pop();
    }
}
