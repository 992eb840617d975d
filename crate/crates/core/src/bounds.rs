//! Closed-form bounds on goodness and on independent sets.

use crate::error::{Error, Result};
use crate::system::check_order;

/// Upper bound on the largest `ell` for which an STS(v) can be `ell`-good.
///
/// `2s` for `v = 6s + 1` and `2s + 1` for `v = 6s + 3`. The first bound is
/// only stated for `s >= 2`; for `v = 7` we return 3, since the Fano plane
/// has no 4-good sequencing.
pub fn lmax_upper_bound(v: usize) -> Result<usize> {
    check_order(v)?;
    if v < 7 {
        return Err(Error::BadOrder(v));
    }
    let s = v / 6;
    Ok(match (v % 6, s) {
        (1, 1) => 3,
        (1, _) => 2 * s,
        _ => 2 * s + 1,
    })
}

fn binom2(n: u64) -> u64 {
    n * n.saturating_sub(1) / 2
}

/// Order from which every STS(v) has an `ell`-good sequencing, via the
/// quartic `(3l^4 - 14l^3 + 27l^2 - 24l + 12) / 4`.
pub fn blackburn_etzion_threshold(ell: u32) -> Result<u64> {
    if ell < 3 {
        return Err(Error::InvalidParameter(format!("ell must be at least 3, got {ell}")));
    }
    let l = ell as i128;
    let quartic = 3 * l.pow(4) - 14 * l.pow(3) + 27 * l.pow(2) - 24 * l + 12;
    debug_assert_eq!(quartic % 4, 0);
    let value = (quartic / 4) as u64;
    assert_eq!(value, blackburn_etzion_binomial(ell), "threshold forms disagree at ell={ell}");
    Ok(value)
}

/// The same threshold in binomial form, `(2l + 3 C(l-1,2)) C(l-1,2) + l`.
pub fn blackburn_etzion_binomial(ell: u32) -> u64 {
    let l = ell as u64;
    let c = binom2(l - 1);
    (2 * l + 3 * c) * c + l
}

/// `(floor(sqrt(2v)), max independent size)`: the guaranteed size of an
/// independent set and the largest size any STS(v) can have.
pub fn independence_bounds(v: usize) -> Result<(usize, usize)> {
    check_order(v)?;
    let lower = (2 * v).isqrt();
    let upper = match v % 12 {
        3 | 7 => v.div_ceil(2),
        _ => (v - 1) / 2,
    };
    Ok((lower, upper))
}

/// Minimum size of a maximal independent set: the least `m` with
/// `m(m+1)/2 >= v`, i.e. `ceil((sqrt(8v+1) - 1) / 2)`.
pub fn maximal_independent_lower_bound(v: usize) -> usize {
    (0..).find(|m| m * (m + 1) / 2 >= v).unwrap_or(0)
}

/// Class-size threshold `(l^2 - 3l + 6) / 2` of the colour-class construction.
pub fn colour_class_threshold(ell: usize) -> usize {
    (ell * ell + 6 - 3 * ell) / 2
}
