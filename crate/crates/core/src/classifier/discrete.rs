//! Membership in the Virasoro discrete series `c_{p,q} = 1 - 6 (p-q)^2 / (pq)`.

use num_traits::{Signed, ToPrimitive};

use crate::series::{gcd_u64, int, Rational};

/// Returns a witness `(p, q)` with `p < q`, `gcd(p, q) = 1`, `p, q >= 2` and
/// `c_{p,q} = x`.
///
/// With `gcd(p, q) = 1` the fraction `(p-q)^2 / (pq)` is already reduced,
/// so `(1 - x) / 6` must have denominator exactly `pq` and numerator
/// `(p-q)^2`; only the factorizations of that denominator need checking.
pub fn discrete_series_witness(x: &Rational) -> Option<(u64, u64)> {
    let y = (int(1) - x) / int(6);
    if !y.is_positive() {
        return None;
    }
    let numer = y.numer().to_u64()?;
    let denom = y.denom().to_u64()?;
    let mut p = 2u64;
    while p * p < denom {
        if denom % p == 0 {
            let q = denom / p;
            if gcd_u64(p, q) == 1 && (q - p) * (q - p) == numer {
                return Some((p, q));
            }
        }
        p += 1;
    }
    None
}

pub fn discrete_series_contains(x: &Rational) -> bool {
    discrete_series_witness(x).is_some()
}

/// `c_{p,q}` itself.
pub fn discrete_series_value(p: u64, q: u64) -> Rational {
    let d = p.abs_diff(q) as i64;
    int(1) - int(6 * d * d) / int((p * q) as i64)
}
