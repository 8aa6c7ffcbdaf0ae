//! Exhaustive identities in the twisted ring for enumerable degrees.

use rayon::prelude::*;

use crate::constructions::{make_su, psi_u, sylow_scalar, TwistedRing, TwistedRingElem};
use crate::error::{Error, Result};
use crate::groupkit::{FiniteGroup, Subgroup};

use super::ClaimResult;

/// Derived length of `S` for `k = 4`: `S' = S_2` and `[S_2, S_2] <= S_4 = 1`.
pub const TWISTED_K4_DERIVED_LENGTH: usize = 2;

/// All of `S_u`, in coefficient order.
pub fn units_in(ring: &TwistedRing, u: usize) -> Result<Vec<TwistedRingElem>> {
    let k = ring.degree();
    if u == 0 || u > k {
        return Err(Error::domain(format!("S_u needs 1 <= u <= {k}")));
    }
    let q = ring.field().size();
    let free = (k - u) as u32;
    let total = q
        .checked_pow(free)
        .filter(|&t| t <= 1 << 24)
        .ok_or_else(|| Error::Resource {
            what: format!("enumeration of S_{u} for k = {k}"),
            reached: usize::MAX,
            cap: 1 << 24,
        })?;
    (0..total)
        .map(|mut code| {
            let mut coeffs = vec![0u64; k];
            coeffs[0] = 1;
            for c in coeffs.iter_mut().skip(u) {
                *c = code % q;
                code /= q;
            }
            ring.from_coeffs(&coeffs)
        })
        .collect()
}

/// `psi_u` is additive on `S_u` and vanishes exactly on `S_{u+1}`.
pub fn psi_homomorphism_check(ring: &TwistedRing, u: usize) -> Result<ClaimResult> {
    let id = format!("twisted_k{}.psi_{u}_homomorphism", ring.degree());
    let units = units_in(ring, u)?;
    let bad = units.par_iter().find_map_any(|s| {
        let ps = psi_u(s, u).ok()?;
        units.iter().find_map(|t| {
            let lhs = psi_u(&s.mul(t), u).ok()?;
            (lhs != ps.add(&psi_u(t, u).ok()?))
                .then(|| format!("s={} t={}", s.describe(), t.describe()))
        })
    });
    if let Some(w) = bad {
        return Ok(ClaimResult::new(id, false, "false", w));
    }
    let kernel_bad = units.iter().find(|s| {
        let zero = psi_u(s, u).map(|a| a.is_zero()).unwrap_or(false);
        zero != (s.valuation() > u)
    });
    if let Some(s) = kernel_bad {
        return Ok(ClaimResult::new(id, false, "false", format!("kernel mismatch at {}", s.describe())));
    }
    Ok(ClaimResult::new(
        id,
        true,
        "true",
        format!("{} pairs, kernel S_{}", units.len() * units.len(), u + 1),
    ))
}

/// `psi_{u+v}([s, t]) = a b^(2^u) + b a^(2^v)` for `s ∈ S_u`, `t ∈ S_v`.
pub fn commutator_coefficient_check(ring: &TwistedRing, u: usize, v: usize) -> Result<ClaimResult> {
    let k = ring.degree();
    let id = format!("twisted_k{k}.commutator_coefficient_{u}_{v}");
    if u + v >= k {
        return Err(Error::domain(format!("needs u + v < {k}")));
    }
    let su = units_in(ring, u)?;
    let sv = units_in(ring, v)?;
    let bad = su.par_iter().find_map_any(|s| {
        let a = psi_u(s, u).ok()?;
        let si = s.inv_principal().ok()?;
        sv.iter().find_map(|t| {
            let b = psi_u(t, v).ok()?;
            let c = si.mul(&t.inv_principal().ok()?).mul(s).mul(t);
            let expect = a.mul(&b.frobenius(u as u32)).add(&b.mul(&a.frobenius(v as u32)));
            (psi_u(&c, u + v).ok()? != expect)
                .then(|| format!("s={} t={}", s.describe(), t.describe()))
        })
    });
    Ok(match bad {
        Some(w) => ClaimResult::new(id, false, "false", w),
        None => ClaimResult::new(
            id,
            true,
            "true",
            format!("{} pairs", su.len() * sv.len()),
        ),
    })
}

/// Order of `[S_u, S_v]` inside `S`, which must lie in `S_{u+v}` and equal
/// it when `u` is odd and `u + v < k`.
pub fn filtration_check(s: &FiniteGroup, k: usize, u: usize, v: usize) -> Result<ClaimResult> {
    let su = make_su(s, u)?;
    let sv = make_su(s, v)?;
    let target: Subgroup = make_su(s, (u + v).min(k))?;
    let comm = s.commutator_subgroup(&su, &sv);
    let contained = comm.is_subset_of(&target);
    let equal_required = u % 2 == 1 && u + v < k;
    let holds = contained && (!equal_required || comm == target);
    Ok(ClaimResult::new(
        format!("twisted_k{k}.commutator_S{u}_S{v}"),
        holds,
        comm.order().to_string(),
        format!(
            "|S_{}|={}{}",
            (u + v).min(k),
            target.order(),
            if equal_required { " equality required" } else { "" }
        ),
    ))
}

/// Every nontrivial scalar of `P` fixes only `1` in `S` under conjugation.
pub fn fixed_point_free_check(g: &FiniteGroup, s: &Subgroup, p: &Subgroup, k: usize) -> ClaimResult {
    let worst = p
        .nontrivial()
        .map(|h| (h, g.fixed_points(s, h).len()))
        .max_by_key(|&(_, n)| n);
    let holds = g.acts_fixed_point_freely(s, p);
    ClaimResult::new(
        format!("twisted_k{k}.p_fixed_point_free"),
        holds,
        holds.to_string(),
        match worst {
            Some((h, n)) => format!("|P|={} max fixed points {n} at {}", p.order(), g.describe(h)),
            None => "P trivial".into(),
        },
    )
}

/// Ring conjugation by a scalar `g ∈ P` scales coefficient `u` by
/// `g^(2^u - 1)`, for every `s ∈ S`.
pub fn scalar_conjugation_check(ring: &TwistedRing) -> Result<ClaimResult> {
    let k = ring.degree();
    let (gamma, order) = sylow_scalar(k)?;
    let f = ring.field();
    let units = units_in(ring, 1)?;
    for e in 0..order {
        let g = f.pow_bits(gamma, e as u128);
        let gi = f.inv_bits(g).expect("nonzero");
        let (cg, cgi) = (ring.constant(g), ring.constant(gi));
        if let Some(s) = units.iter().find(|s| cgi.mul(s).mul(&cg) != s.scale_by(g)) {
            return Ok(ClaimResult::new(
                format!("twisted_k{k}.scalar_conjugation"),
                false,
                "false",
                format!("g={g:#x} s={}", s.describe()),
            ));
        }
    }
    Ok(ClaimResult::new(
        format!("twisted_k{k}.scalar_conjugation"),
        true,
        "true",
        format!("{} scalars x {} units", order, units.len()),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{make_s, make_twisted_group, twisted_parts};

    #[test]
    fn k2_identities() {
        let r = TwistedRing::new(2).unwrap();
        assert_eq!(units_in(&r, 1).unwrap().len(), 4);
        assert_eq!(units_in(&r, 2).unwrap().len(), 1);
        assert!(psi_homomorphism_check(&r, 1).unwrap().holds);
        assert!(scalar_conjugation_check(&r).unwrap().holds);
        let g = make_twisted_group(2).unwrap();
        let parts = twisted_parts(&g).unwrap();
        assert!(fixed_point_free_check(&g, &parts.s, &parts.p, 2).holds);
    }

    #[test]
    fn k4_small_layers() {
        let r = TwistedRing::new(4).unwrap();
        assert!(psi_homomorphism_check(&r, 3).unwrap().holds);
        assert!(psi_homomorphism_check(&r, 2).unwrap().holds);
        assert!(commutator_coefficient_check(&r, 1, 2).unwrap().holds);
        assert!(commutator_coefficient_check(&r, 2, 2).is_err());
        let s = make_s(4).unwrap();
        let c = filtration_check(&s, 4, 1, 1).unwrap();
        assert!(c.holds, "{c}");
        assert_eq!(c.observed, "256");
        assert_eq!(s.derived_length().unwrap(), TWISTED_K4_DERIVED_LENGTH);
    }
}
