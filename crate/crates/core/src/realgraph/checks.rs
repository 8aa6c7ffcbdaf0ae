use crate::constructions::{make_g150, make_h199650};
use crate::error::{Error, Result};
use crate::groupkit::{FiniteGroup, Subgroup};
use crate::numtheory::{is_power_of, is_prime_power_or_one};

use super::{
    components, fmt_set, prime_graph, real_prime_graph, real_spectrum, satisfies_p, ClaimResult,
};

fn require(check: &str, failures: Vec<&str>) -> Result<()> {
    if failures.is_empty() {
        Ok(())
    } else {
        Err(Error::precondition(check, failures.join("; ")))
    }
}

/// Among any three primes dividing `|G|`, two are joined in the prime graph.
pub fn lucido_check(g: &FiniteGroup) -> Result<ClaimResult> {
    require(
        "lucido",
        if g.is_solvable() { vec![] } else { vec!["G is not solvable"] },
    )?;
    let graph = prime_graph(g);
    let v = &graph.vertices;
    for a in 0..v.len() {
        for b in a + 1..v.len() {
            for c in b + 1..v.len() {
                let (p, q, r) = (v[a], v[b], v[c]);
                if !graph.has_edge(p, q) && !graph.has_edge(p, r) && !graph.has_edge(q, r) {
                    return Ok(ClaimResult::new(
                        "lucido",
                        false,
                        "false",
                        format!("independent primes {}", fmt_set([p, q, r])),
                    ));
                }
            }
        }
    }
    let edges: Vec<String> = graph.edges.iter().map(|[p, q]| format!("{p}-{q}")).collect();
    Ok(ClaimResult::new(
        "lucido",
        true,
        "true",
        format!("primes {} edges {}", fmt_set(v), fmt_set(edges)),
    ))
}

/// Every prime dividing `|G|` is the order of a real element, for solvable
/// `G` with `O^{2'}(G) = G`. Without the second condition odd-order groups
/// are counterexamples.
pub fn dmn_vertex_check(g: &FiniteGroup) -> Result<ClaimResult> {
    let mut failures = Vec::new();
    if !g.is_solvable() {
        failures.push("G is not solvable");
    }
    if g.o2prime().order() != g.order() {
        failures.push("O^2'(G) < G");
    }
    require("dmn_vertices", failures)?;
    let real = real_prime_graph(g).vertices;
    let all = g.prime_divisors();
    let holds = real == all;
    Ok(ClaimResult::new(
        "dmn_vertices",
        holds,
        fmt_set(&real),
        format!("prime divisors {}", fmt_set(&all)),
    ))
}

/// The two sides of the equivalence "P holds" and "G = N ⋊ (K ⋊ Q) is
/// 2-Frobenius with K a cyclic p-group, Q a cyclic 2-group, all element
/// orders prime powers and K inverted by the involution of Q".
#[derive(Debug, Clone)]
pub struct TheoremA {
    pub satisfies_p: bool,
    pub prime: Option<u64>,
    pub n: Subgroup,
    pub k: Option<Subgroup>,
    pub q: Option<Subgroup>,
    /// Named sub-checks of the structural side, in evaluation order.
    pub checks: Vec<(&'static str, bool)>,
}

impl TheoremA {
    pub fn structure_holds(&self) -> bool {
        !self.checks.is_empty() && self.checks.iter().all(|&(_, ok)| ok)
    }

    pub fn holds(&self) -> bool {
        self.satisfies_p == self.structure_holds()
    }

    pub fn claim(&self) -> ClaimResult {
        let order = |h: &Option<Subgroup>| h.as_ref().map_or(0, |h| h.order());
        let failed: Vec<&str> = self
            .checks
            .iter()
            .filter(|(_, ok)| !ok)
            .map(|&(name, _)| name)
            .collect();
        ClaimResult::new(
            "theorem_a",
            self.holds(),
            self.holds().to_string(),
            format!(
                "P={} structure={} |N|={} |K|={} |Q|={}{}",
                self.satisfies_p,
                self.structure_holds(),
                self.n.order(),
                order(&self.k),
                order(&self.q),
                if failed.is_empty() {
                    String::new()
                } else {
                    format!(" failed {}", fmt_set(failed))
                }
            ),
        )
    }
}

/// Evaluates both sides of the equivalence for a solvable `G` with
/// `O^{2'}(G) = G`, `O_2(G) > 1` and `G` not a 2-group.
///
/// `N = O_2(G)`. In a decomposition `N ⋊ (K ⋊ Q)` the subgroup `K` is a
/// Sylow p-subgroup, so up to conjugacy it is the one we compute. `N K`
/// Frobenius with kernel `N` forces `N_N(K) = C_N(K) = 1`, hence `K Q` is
/// all of `N_G(K)`, and `Q` is a Sylow 2-subgroup of it.
pub fn theorem_a_check(g: &FiniteGroup) -> Result<TheoremA> {
    let n = g.p_core(2);
    let mut failures = Vec::new();
    if !g.is_solvable() {
        failures.push("G is not solvable");
    }
    if g.o2prime().order() != g.order() {
        failures.push("O^2'(G) < G");
    }
    if is_power_of(g.order() as u64, 2) {
        failures.push("G is a 2-group");
    }
    if n.is_trivial() {
        failures.push("O_2(G) = 1");
    }
    require("theorem_a", failures)?;

    let sp = satisfies_p(g).holds;
    let primes = g.prime_divisors();
    let mut checks = vec![("two_primes", primes.len() == 2)];
    let mut out = TheoremA {
        satisfies_p: sp,
        prime: None,
        n: n.clone(),
        k: None,
        q: None,
        checks: Vec::new(),
    };
    if primes.len() != 2 {
        out.checks = checks;
        return Ok(out);
    }
    let p = primes[1];
    out.prime = Some(p);
    let k = g.sylow(p);
    let h = g.normalizer(&k);
    let meets_trivially = h.members().iter().all(|&x| x == 0 || !n.contains(x));
    let complement = h.order() * n.order() == g.order() && meets_trivially;
    checks.push(("normalizer_complements_n", complement));
    if complement {
        let q = g.sylow_in(&h, 2);
        let nk = g.join(&n, &k);
        checks.push(("two_frobenius", g.is_2frobenius(&n, &nk).unwrap_or(false)));
        checks.push(("k_cyclic", is_cyclic(g, &k)));
        checks.push(("q_cyclic", is_cyclic(g, &q)));
        checks.push((
            "prime_power_orders",
            g.conjugacy_classes()
                .iter()
                .all(|c| is_prime_power_or_one(c.element_order as u64)),
        ));
        let involutions: Vec<_> = q
            .members()
            .iter()
            .copied()
            .filter(|&x| g.element_order(x) == 2)
            .collect();
        let inverts = involutions.len() == 1 && {
            let z = involutions[0];
            k.members().iter().all(|&x| g.conj(x, z) == g.inv(x))
        };
        checks.push(("k_inverted_by_involution", inverts));
        out.q = Some(q);
    }
    out.k = Some(k);
    out.checks = checks;
    Ok(out)
}

pub(crate) fn is_cyclic(g: &FiniteGroup, h: &Subgroup) -> bool {
    h.members()
        .iter()
        .any(|&x| g.element_order(x) as usize == h.order())
}

/// `π(ω_ℝ(G))` is `{2}` or `{2, p}`.
pub fn corollary_spectrum_check(g: &FiniteGroup) -> Result<ClaimResult> {
    let mut failures = Vec::new();
    if !g.is_solvable() {
        failures.push("G is not solvable");
    }
    if !satisfies_p(g).holds {
        failures.push("G does not satisfy P");
    }
    if g.p_core(2).is_trivial() {
        failures.push("O_2(G) = 1");
    }
    require("corollary", failures)?;
    let primes = real_spectrum(g).primes;
    let holds = primes == [2] || (primes.len() == 2 && primes[0] == 2);
    Ok(ClaimResult::new(
        "corollary",
        holds,
        fmt_set(&primes),
        format!("real orders {}", fmt_set(real_spectrum(g).orders)),
    ))
}

/// Exactly one prime `p` has `O_p(G)` outside `Z(G)`.
pub fn fitting_prime_check(g: &FiniteGroup) -> Result<ClaimResult> {
    let mut failures = Vec::new();
    if g.order() == 1 {
        failures.push("G is trivial");
    }
    if !g.is_solvable() {
        failures.push("G is not solvable");
    }
    if g.o2prime().order() != g.order() {
        failures.push("O^2'(G) < G");
    }
    if !g.p_core(2).is_trivial() {
        failures.push("O_2(G) > 1");
    }
    if !satisfies_p(g).holds {
        failures.push("G does not satisfy P");
    }
    require("fitting_prime", failures)?;
    let z = g.center();
    let mut witness = Vec::new();
    let mut outside = Vec::new();
    for p in g.prime_divisors() {
        let core = g.p_core(p);
        witness.push(format!("|O_{p}|={}", core.order()));
        if !core.is_subset_of(&z) {
            outside.push(p);
        }
    }
    let observed = match outside.as_slice() {
        [p] => p.to_string(),
        _ => fmt_set(&outside),
    };
    Ok(ClaimResult::new(
        "fitting_prime",
        outside.len() == 1,
        observed,
        format!("{} |Z|={}", witness.join(" "), z.order()),
    ))
}

/// Count of components of the real prime graph, failing unless the graph
/// is edgeless with exactly `expected` components.
pub fn edgeless_components_claim(id: &str, g: &FiniteGroup, expected: usize) -> ClaimResult {
    let graph = real_prime_graph(g);
    let parts = components(&graph);
    let blocks: Vec<String> = parts.blocks.iter().map(fmt_set).collect();
    let mut c = ClaimResult::equals(
        id,
        parts.count(),
        expected,
        format!(
            "vertices {} edges {} blocks {}",
            fmt_set(&graph.vertices),
            graph.edges.len(),
            blocks.join(" ")
        ),
    );
    if !graph.is_edgeless() {
        c.holds = false;
    }
    c
}

/// Real prime graphs of the order-150 and order-199650 groups: edgeless with
/// 3 and 4 components.
pub fn theorem_b_witnesses() -> Result<(ClaimResult, ClaimResult)> {
    let g = make_g150()?;
    let h = make_h199650()?;
    Ok((
        edgeless_components_claim("theorem_b.g150.components", &g, 3),
        edgeless_components_claim("theorem_b.h199650.components", &h, 4),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{make_named, make_twisted_group};

    #[test]
    fn theorem_a_on_s4() {
        let s4 = make_named("symmetric", Some(4)).unwrap();
        let t = theorem_a_check(&s4).unwrap();
        assert!(t.satisfies_p);
        assert!(t.structure_holds(), "{:?}", t.checks);
        assert!(t.holds());
        assert_eq!(t.n.order(), 4);
        assert_eq!(t.k.as_ref().unwrap().order(), 3);
        assert_eq!(t.q.as_ref().unwrap().order(), 2);
        assert_eq!(t.prime, Some(3));
    }

    #[test]
    fn theorem_a_twisted_k2() {
        let g = make_twisted_group(2).unwrap();
        let t = theorem_a_check(&g).unwrap();
        assert!(t.satisfies_p && t.structure_holds(), "{:?}", t.checks);
    }

    #[test]
    fn theorem_a_preconditions() {
        let err = theorem_a_check(&make_named("dihedral", Some(4)).unwrap()).unwrap_err();
        assert!(matches!(err, Error::Precondition { .. }));
        assert!(err.to_string().contains("2-group"));
        // A4: O^2' is V4
        assert!(theorem_a_check(&make_named("alternating", Some(4)).unwrap()).is_err());
        assert!(theorem_a_check(&make_named("symmetric", Some(5)).unwrap()).is_err());
    }

    #[test]
    fn corollary_and_fitting_gates() {
        let s4 = make_named("symmetric", Some(4)).unwrap();
        let c = corollary_spectrum_check(&s4).unwrap();
        assert!(c.holds);
        assert_eq!(c.observed, "{2,3}");
        assert!(matches!(fitting_prime_check(&s4), Err(Error::Precondition { .. })));
        let d4 = make_named("dihedral", Some(4)).unwrap();
        assert_eq!(corollary_spectrum_check(&d4).unwrap().observed, "{2}");
    }

    #[test]
    fn lucido_and_dmn_small() {
        let c2 = make_named("cyclic", Some(2)).unwrap();
        let d = dmn_vertex_check(&c2).unwrap();
        assert!(d.holds);
        assert_eq!(d.observed, "{2}");
        assert!(lucido_check(&make_named("cyclic", Some(6)).unwrap()).unwrap().holds);
        assert!(lucido_check(&make_named("symmetric", Some(5)).unwrap()).is_err());
        // C3 has no real element of order 3, and is gated out
        assert!(dmn_vertex_check(&make_named("cyclic", Some(3)).unwrap()).is_err());
        assert!(dmn_vertex_check(&make_named("alternating", Some(4)).unwrap()).is_err());
        assert!(dmn_vertex_check(&make_named("dihedral", Some(5)).unwrap()).unwrap().holds);
    }
}
