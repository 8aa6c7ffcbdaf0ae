//! Checkers for the elementary facts about real elements, normal
//! 2-complements and quotients.

use crate::error::Result;
use crate::groupkit::{FiniteGroup, Subgroup};
use crate::numtheory::{is_power_of, is_prime, p_part};

use super::{satisfies_p, satisfies_r, ClaimResult};

fn is_two_element(g: &FiniteGroup, x: u32) -> bool {
    g.element_order(x).is_power_of_two()
}

/// Every real `x` is inverted by some 2-element.
pub fn elem_prop_inverting_two_element(g: &FiniteGroup) -> ClaimResult {
    let mut checked = 0;
    for c in g.conjugacy_classes().iter().filter(|c| c.is_real) {
        let x = c.representative;
        let xi = g.inv(x);
        checked += 1;
        let found = g.any_element(|y| is_two_element(g, y) && g.mul(x, y) == g.mul(y, xi));
        if found.is_none() {
            return ClaimResult::new(
                "elem_prop.1",
                false,
                "false",
                format!("no 2-element inverts {}", g.describe(x)),
            );
        }
    }
    ClaimResult::new("elem_prop.1", true, "true", format!("{checked} real classes"))
}

/// Powers of real elements are real.
pub fn elem_prop_powers_real(g: &FiniteGroup) -> ClaimResult {
    let mut checked = 0;
    for c in g.conjugacy_classes().iter().filter(|c| c.is_real) {
        let x = c.representative;
        for m in 1..c.element_order as i64 {
            checked += 1;
            let y = g.pow(x, m);
            if !g.is_real(y) {
                return ClaimResult::new(
                    "elem_prop.2",
                    false,
                    "false",
                    format!("{}^{m} is not real", g.describe(x)),
                );
            }
        }
    }
    ClaimResult::new("elem_prop.2", true, "true", format!("{checked} powers"))
}

/// A real coset `xN` of odd order contains a real element of `G`.
pub fn elem_prop_odd_coset_lift(g: &FiniteGroup, normals: &[Subgroup]) -> Result<ClaimResult> {
    let mut checked = 0;
    for n in normals {
        if n.is_trivial() || n.order() == g.order() {
            continue;
        }
        let quot = g.quotient(n)?;
        let qg = quot.group();
        for c in qg.conjugacy_classes() {
            if !c.is_real || c.element_order % 2 == 0 || c.element_order == 1 {
                continue;
            }
            checked += 1;
            if !quot.coset(c.representative).iter().any(|&y| g.is_real(y)) {
                return Ok(ClaimResult::new(
                    "elem_prop.3",
                    false,
                    "false",
                    format!(
                        "coset of {} modulo a normal subgroup of order {} has no real element",
                        g.describe(quot.representative(c.representative)),
                        n.order()
                    ),
                ));
            }
        }
    }
    Ok(ClaimResult::new(
        "elem_prop.3",
        true,
        "true",
        format!("{checked} odd real cosets"),
    ))
}

/// A Sylow 2-subgroup acting nontrivially on an odd-order normal subgroup
/// `K` inverts some `1 != x ∈ K`.
pub fn elem_prop_two_group_action(g: &FiniteGroup, normals: &[Subgroup]) -> ClaimResult {
    let q = g.sylow(2);
    let mut checked = 0;
    for k in normals {
        if k.is_trivial() || k.order() % 2 == 0 {
            continue;
        }
        let nontrivial = q
            .generators()
            .iter()
            .any(|&s| k.generators().iter().any(|&x| g.conj(x, s) != x));
        if !nontrivial {
            continue;
        }
        checked += 1;
        let inverted = k
            .nontrivial()
            .any(|x| q.members().iter().any(|&s| g.conj(x, s) == g.inv(x)));
        if !inverted {
            return ClaimResult::new(
                "elem_prop.4",
                false,
                "false",
                format!("no element of a normal subgroup of order {} is inverted", k.order()),
            );
        }
    }
    ClaimResult::new(
        "elem_prop.4",
        true,
        "true",
        format!("{checked} odd normal subgroups with nontrivial action"),
    )
}

/// If real `x`, `y` of distinct prime orders commute and are inverted by the
/// same `g`, then `xy` is inverted by `g` and has order `o(x) o(y)`.
/// Checked up to conjugacy: `x` runs over class representatives.
pub fn suff_cond_check(g: &FiniteGroup) -> ClaimResult {
    let mut instances = 0usize;
    for c in g.conjugacy_classes().iter() {
        let p = c.element_order;
        if !c.is_real || !is_prime(p as u64) {
            continue;
        }
        let x = c.representative;
        let partners: Vec<u32> = g
            .centralizer(&[x])
            .members()
            .iter()
            .copied()
            .filter(|&y| {
                let q = g.element_order(y);
                q != p && is_prime(q as u64)
            })
            .collect();
        if partners.is_empty() {
            continue;
        }
        for h in g.inverting_elements(x) {
            for &y in &partners {
                if g.conj(y, h) != g.inv(y) {
                    continue;
                }
                instances += 1;
                let xy = g.mul(x, y);
                let ok = g.conj(xy, h) == g.inv(xy)
                    && g.element_order(xy) == p * g.element_order(y);
                if !ok {
                    return ClaimResult::new(
                        "lemma_suff_cond",
                        false,
                        "false",
                        format!(
                            "x={} y={} g={}",
                            g.describe(x),
                            g.describe(y),
                            g.describe(h)
                        ),
                    );
                }
            }
        }
    }
    ClaimResult::new(
        "lemma_suff_cond",
        true,
        "true",
        format!("{instances} instances"),
    )
}

/// The normal 2-complement, if `G` has one.
pub fn normal_two_complement(g: &FiniteGroup) -> Option<Subgroup> {
    let odd_part = g.order() / p_part(g.order() as u64, 2) as usize;
    let odd: Vec<u32> = g
        .elements()
        .filter(|&x| g.element_order(x) % 2 == 1)
        .collect();
    if odd.len() != odd_part {
        return None;
    }
    let k = g.subgroup_generated(&odd);
    (k.order() == odd_part).then_some(k)
}

/// `[K, Q] = K` when `G = K ⋊ Q` with `K` the normal 2-complement and
/// `O^{2'}(G) = G`. `None` when `G` is outside that setting.
pub fn interder_kq_check(g: &FiniteGroup) -> Option<ClaimResult> {
    if g.o2prime().order() != g.order() {
        return None;
    }
    let k = normal_two_complement(g)?;
    let q = g.sylow(2);
    let kq = g.commutator_subgroup(&k, &q);
    Some(ClaimResult::equals(
        "lemma_interder_kq",
        kq.order(),
        k.order(),
        format!("|K|={} |Q|={}", k.order(), q.order()),
    ))
}

/// With `G = K ⋊ Q`, `O^{2'}(G) = G`, `Q` having a unique involution `z` and
/// `C_K(z) = C_K(Q)`: `K` abelian iff `C_K(z) = 1` iff `z` inverts `K`.
/// `None` when the hypotheses fail.
pub fn abel_k_check(g: &FiniteGroup) -> Option<ClaimResult> {
    if g.o2prime().order() != g.order() || is_power_of(g.order() as u64, 2) {
        return None;
    }
    let k = normal_two_complement(g)?;
    let q = g.sylow(2);
    let involutions: Vec<u32> = q
        .members()
        .iter()
        .copied()
        .filter(|&x| g.element_order(x) == 2)
        .collect();
    let [z] = involutions.as_slice() else {
        return None;
    };
    let ckz = g.centralizer_in(&k, &[*z]);
    let ckq = g.centralizer_in(&k, q.generators());
    if ckz != ckq {
        return None;
    }
    let (kg, _) = g.subgroup_as_group(&k);
    let abelian = kg.is_abelian();
    let trivial_fixed = ckz.is_trivial();
    let inverts = k.members().iter().all(|&x| g.conj(x, *z) == g.inv(x));
    let holds = abelian == trivial_fixed && trivial_fixed == inverts;
    Some(ClaimResult::new(
        "lemma_abel_k",
        holds,
        holds.to_string(),
        format!(
            "|K|={} abelian={abelian} C_K(z)=1:{trivial_fixed} z_inverts_K={inverts}",
            k.order()
        ),
    ))
}

fn quotient_property(
    id: &str,
    g: &FiniteGroup,
    normals: &[Subgroup],
    property: fn(&FiniteGroup) -> ClaimResult,
) -> Result<Option<ClaimResult>> {
    if !property(g).holds {
        return Ok(None);
    }
    for n in normals {
        let quot = g.quotient(n)?;
        let r = property(quot.group());
        if !r.holds {
            return Ok(Some(ClaimResult::new(
                id,
                false,
                "false",
                format!("quotient by a normal subgroup of order {}: {}", n.order(), r.witness),
            )));
        }
    }
    Ok(Some(ClaimResult::new(
        id,
        true,
        "true",
        format!("{} quotients", normals.len()),
    )))
}

/// P passes to every quotient; `None` if `G` itself fails P.
pub fn p_quotient_check(g: &FiniteGroup, normals: &[Subgroup]) -> Result<Option<ClaimResult>> {
    quotient_property("lemma_p_quotient", g, normals, satisfies_p)
}

/// R passes to every quotient; `None` if `G` itself fails R.
pub fn r_quotient_check(g: &FiniteGroup, normals: &[Subgroup]) -> Result<Option<ClaimResult>> {
    quotient_property("lemma_r_quotient", g, normals, satisfies_r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::make_named;
    use crate::groupkit::NORMAL_SUBGROUP_CAP;

    fn named(n: &str, p: u32) -> FiniteGroup {
        make_named(n, Some(p)).unwrap()
    }

    #[test]
    fn elementary_properties_on_s4_and_d6() {
        for g in [named("symmetric", 4), named("dihedral", 6), named("cyclic", 10)] {
            let normals = g.normal_subgroups(NORMAL_SUBGROUP_CAP).unwrap();
            assert!(elem_prop_inverting_two_element(&g).holds);
            assert!(elem_prop_powers_real(&g).holds);
            assert!(elem_prop_odd_coset_lift(&g, &normals).unwrap().holds);
            assert!(elem_prop_two_group_action(&g, &normals).holds);
            assert!(suff_cond_check(&g).holds);
        }
    }

    #[test]
    fn suff_cond_finds_instances_in_d6() {
        let r = suff_cond_check(&named("dihedral", 6));
        assert!(r.holds);
        assert_ne!(r.witness, "0 instances");
    }

    #[test]
    fn two_complements() {
        assert_eq!(normal_two_complement(&named("symmetric", 3)).unwrap().order(), 3);
        assert!(normal_two_complement(&named("alternating", 4)).is_none());
        assert!(normal_two_complement(&named("symmetric", 4)).is_none());
        assert_eq!(normal_two_complement(&named("dihedral", 5)).unwrap().order(), 5);
    }

    #[test]
    fn interder_and_abel_on_dihedral() {
        let d5 = named("dihedral", 5);
        assert!(interder_kq_check(&d5).unwrap().holds);
        let a = abel_k_check(&d5).unwrap();
        assert!(a.holds, "{a}");
        assert!(a.witness.contains("abelian=true"));
        // C6 has O^2' = C2
        assert!(interder_kq_check(&named("cyclic", 6)).is_none());
    }

    #[test]
    fn quotient_checks() {
        let s4 = named("symmetric", 4);
        let normals = s4.normal_subgroups(NORMAL_SUBGROUP_CAP).unwrap();
        assert_eq!(normals.len(), 4);
        assert!(p_quotient_check(&s4, &normals).unwrap().unwrap().holds);
        assert!(r_quotient_check(&s4, &normals).unwrap().unwrap().holds);
        let d6 = named("dihedral", 6);
        let normals = d6.normal_subgroups(NORMAL_SUBGROUP_CAP).unwrap();
        assert!(p_quotient_check(&d6, &normals).unwrap().is_none());
    }
}
