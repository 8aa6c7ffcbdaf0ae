use crate::error::{Error, Result};
use crate::numtheory::gcd;

/// Smallest prime `p` with `p | 2^k - 1` and `p ∤ 2^i - 1` for `1 <= i < k`.
///
/// Strips from `2^k - 1` every factor shared with `2^d - 1` for proper
/// divisors `d` of `k`; what remains is a product of primitive primes, each
/// congruent to 1 modulo `k`.
pub fn primitive_prime_divisor(k: u32) -> Result<u64> {
    if k < 2 {
        return Err(Error::domain(format!("primitive divisor needs k >= 2, got {k}")));
    }
    if k > 64 {
        return Err(Error::Resource {
            what: "primitive prime divisor of 2^k - 1".into(),
            reached: k as usize,
            cap: 64,
        });
    }
    let mersenne = |e: u32| -> u64 {
        if e == 64 {
            u64::MAX
        } else {
            (1u64 << e) - 1
        }
    };
    let mut rest = mersenne(k);
    for d in (1..k).filter(|d| k % d == 0) {
        loop {
            let g = gcd(rest, mersenne(d));
            if g == 1 {
                break;
            }
            rest /= g;
        }
    }
    if rest == 1 {
        return Err(Error::domain(format!("2^{k} - 1 has no primitive prime divisor")));
    }
    let step = k as u64;
    let mut p = step + 1;
    while p.checked_mul(p).is_some_and(|sq| sq <= rest) {
        if rest % p == 0 {
            return Ok(p);
        }
        p += step;
    }
    Ok(rest)
}
