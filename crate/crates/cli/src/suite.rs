//! The claim registry behind `verify-paper`.
//!
//! Each claim group names the groups it reads. All of them are built, with
//! class tables and (where asked) normal-subgroup lattices, before any claim
//! runs; claims then share them read-only and fan out across threads.
//! Output order is the registry order, independent of scheduling.

use std::collections::BTreeMap;
use std::fmt::Display;

use rayon::prelude::*;
use realgraph_core::constructions::{
    catalog, h199650_action, make_matrix_group, make_s, make_su, sample_ring_identities_seeded,
    tn_sequence, twisted_parts, CatalogEntry, GroupSpec,
};
use realgraph_core::groupkit::{close, FiniteGroup, Subgroup, DEFAULT_CAP, NORMAL_SUBGROUP_CAP};
use realgraph_core::numtheory::{is_prime_power_or_one, prime_factors};
use realgraph_core::realgraph::{
    abel_k_check, commutator_coefficient_check, corollary_spectrum_check, dmn_vertex_check,
    edgeless_components_claim, elem_prop_inverting_two_element, elem_prop_odd_coset_lift,
    elem_prop_powers_real, elem_prop_two_group_action, filtration_check, fitting_prime_check,
    fixed_point_free_check, fmt_set, fmt_tuple, interder_kq_check, lucido_check,
    p_quotient_check, prime_graph, psi_homomorphism_check, r_quotient_check, real_prime_graph,
    real_spectrum, satisfies_p, scalar_conjugation_check, suff_cond_check, theorem_a_check,
    ClaimResult, TWISTED_K4_DERIVED_LENGTH,
};
use realgraph_core::{Error, Result};

use crate::error::{CliError, EXIT_CLAIM_FAILED, EXIT_OK};

pub const DEFAULT_SEED: u64 = 0xC0FFEE;
pub const DEFAULT_SAMPLES: usize = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuiteConfig {
    /// Seed for the sampled ring identities.
    pub seed: u64,
    pub samples: usize,
    /// Enumeration cap for every group built by the suite.
    pub cap: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: DEFAULT_SEED,
            samples: DEFAULT_SAMPLES,
            cap: DEFAULT_CAP,
        }
    }
}

#[derive(Debug, Clone)]
struct Need {
    spec: GroupSpec,
    normals: bool,
}

fn need(spec: GroupSpec, normals: bool) -> Need {
    Need { spec, normals }
}

struct Prepared {
    group: Result<FiniteGroup>,
    normals: Option<Result<Vec<Subgroup>>>,
}

/// Groups shared by the claims of one run.
pub struct Context {
    config: SuiteConfig,
    prepared: BTreeMap<String, Prepared>,
}

impl Context {
    fn prepare(config: SuiteConfig, needs: Vec<Need>, overrides: &[(GroupSpec, FiniteGroup)]) -> Self {
        let mut merged: BTreeMap<String, Need> = BTreeMap::new();
        for n in needs {
            merged
                .entry(n.spec.label())
                .and_modify(|m| m.normals |= n.normals)
                .or_insert(n);
        }
        let prepared = merged
            .into_par_iter()
            .map(|(label, n)| {
                let group = match overrides.iter().find(|(s, _)| s.label() == label) {
                    Some((_, g)) => Ok(g.clone()),
                    None => n.spec.build(config.cap),
                };
                let normals = match &group {
                    Ok(g) => {
                        g.conjugacy_classes();
                        n.normals.then(|| g.normal_subgroups(NORMAL_SUBGROUP_CAP))
                    }
                    Err(_) => None,
                };
                (label, Prepared { group, normals })
            })
            .collect();
        Context { config, prepared }
    }

    fn entry(&self, spec: &GroupSpec) -> &Prepared {
        self.prepared
            .get(&spec.label())
            .unwrap_or_else(|| panic!("{} was not declared by its claim group", spec.label()))
    }

    fn group(&self, spec: &GroupSpec) -> Result<&FiniteGroup> {
        self.entry(spec).group.as_ref().map_err(Clone::clone)
    }

    fn normals(&self, spec: &GroupSpec) -> Result<&[Subgroup]> {
        match &self.entry(spec).normals {
            Some(r) => r.as_deref().map_err(Clone::clone),
            None => panic!("normal subgroups of {} were not requested", spec.label()),
        }
    }
}

/// A named family of claims.
pub struct ClaimGroup {
    pub name: &'static str,
    needs: fn() -> Vec<Need>,
    run: fn(&Context) -> Result<Vec<ClaimResult>>,
}

/// Every claim group, in output order.
pub fn registry() -> Vec<ClaimGroup> {
    macro_rules! group {
        ($name:expr, $needs:expr, $run:expr) => {
            ClaimGroup {
                name: $name,
                needs: $needs,
                run: $run,
            }
        };
    }
    vec![
        group!("example_g150", || vec![need(GroupSpec::PaperG150, true)], example_g150),
        group!("theorem_b.g150", || vec![need(GroupSpec::PaperG150, false)], |cx| {
            Ok(vec![edgeless_components_claim(
                "theorem_b.g150.components",
                cx.group(&GroupSpec::PaperG150)?,
                3,
            )])
        }),
        group!("theorem_b.h199650", || vec![need(GroupSpec::PaperH199650, false)], |cx| {
            Ok(vec![edgeless_components_claim(
                "theorem_b.h199650.components",
                cx.group(&GroupSpec::PaperH199650)?,
                4,
            )])
        }),
        group!("example_h199650", || vec![need(GroupSpec::PaperH199650, false)], example_h199650),
        group!("twisted_k4", || vec![need(GroupSpec::Twisted(4), false)], twisted_k4),
        group!("twisted_k2", || vec![need(GroupSpec::Twisted(2), false)], twisted_k2),
        group!("twisted_k8", Vec::new, twisted_k8),
        group!("theorem_a_s4", || vec![need(s4(), false)], theorem_a_s4),
        group!("theorem_a", || catalog_needs(false, false), |cx| per_member(cx, false, theorem_a_member)),
        group!("corollary", || catalog_needs(true, false), |cx| per_member(cx, true, corollary_member)),
        group!("fitting_prime", || catalog_needs(true, false), |cx| per_member(cx, true, fitting_member)),
        group!("lemma_elem_prop", || catalog_needs(true, true), |cx| per_member(cx, true, elem_prop_member)),
        group!("lemma_suff_cond", || catalog_needs(true, false), |cx| per_member(cx, true, suff_cond_member)),
        group!("lemma_interder_kq", || catalog_needs(false, false), |cx| {
            per_member(cx, false, |cx, e, g| complement_member(cx, e, g, "lemma_interder_kq", interder_kq_check))
        }),
        group!("lemma_abel_k", || catalog_needs(false, false), |cx| {
            per_member(cx, false, |cx, e, g| complement_member(cx, e, g, "lemma_abel_k", abel_k_check))
        }),
        group!("lemma_p_quotient", || catalog_needs(false, true), |cx| {
            per_member(cx, false, |cx, e, g| quotient_member(cx, e, g, "lemma_p_quotient", p_quotient_check))
        }),
        group!("lemma_r_quotient", || catalog_needs(false, true), |cx| {
            per_member(cx, false, |cx, e, g| quotient_member(cx, e, g, "lemma_r_quotient", r_quotient_check))
        }),
        group!("lucido", || catalog_needs(true, false), |cx| per_member(cx, true, lucido_member)),
        group!("dmn_vertices", || catalog_needs(true, false), |cx| per_member(cx, true, dmn_member)),
        group!("graph_invariants", || catalog_needs(true, false), |cx| per_member(cx, true, invariants_member)),
    ]
}

/// Claim groups touched by any selector. A selector is a prefix of claim
/// ids; it picks a group when it is a prefix of the group name or extends
/// the name past a `.`.
fn select<'a>(groups: &'a [ClaimGroup], only: &[String]) -> std::result::Result<Vec<&'a ClaimGroup>, CliError> {
    if only.is_empty() {
        return Ok(groups.iter().collect());
    }
    for sel in only {
        if !groups.iter().any(|g| touches(g.name, sel)) {
            let names: Vec<&str> = groups.iter().map(|g| g.name).collect();
            return Err(CliError::usage(format!(
                "no claim matches `{sel}`; groups are {}",
                names.join(", ")
            )));
        }
    }
    Ok(groups.iter().filter(|g| only.iter().any(|s| touches(g.name, s))).collect())
}

fn touches(group: &str, sel: &str) -> bool {
    group.starts_with(sel)
        || sel
            .strip_prefix(group)
            .is_some_and(|rest| rest.starts_with('.'))
}

/// Runs the selected claims. `overrides` replace the group built for a spec
/// with the same label, which lets a test feed in a corrupted construction.
pub fn run_suite_with(
    config: SuiteConfig,
    only: &[String],
    overrides: &[(GroupSpec, FiniteGroup)],
) -> std::result::Result<Vec<ClaimResult>, CliError> {
    let groups = registry();
    let chosen = select(&groups, only)?;
    let needs = chosen.iter().flat_map(|g| (g.needs)()).collect();
    let cx = Context::prepare(config, needs, overrides);
    let results: Vec<Vec<ClaimResult>> = chosen
        .par_iter()
        .map(|g| match (g.run)(&cx) {
            Ok(claims) => claims,
            Err(e) => vec![ClaimResult::new(g.name, false, "error", e.to_string())],
        })
        .collect();
    let selected: Vec<ClaimResult> = results
        .into_iter()
        .flatten()
        .filter(|c| only.is_empty() || only.iter().any(|s| c.id.starts_with(s.as_str())))
        .collect();
    if selected.is_empty() {
        return Err(CliError::usage(format!("no claim id starts with {}", only.join(" or "))));
    }
    Ok(selected)
}

pub fn run_suite(config: SuiteConfig, only: &[String]) -> std::result::Result<Vec<ClaimResult>, CliError> {
    run_suite_with(config, only, &[])
}

/// One line per claim and a closing tally; exit code 0 iff all hold.
pub fn render(results: &[ClaimResult]) -> (String, i32) {
    let mut out = String::new();
    for r in results {
        out.push_str(&r.to_string());
        out.push('\n');
    }
    let failed = results.iter().filter(|r| !r.holds).count();
    out.push_str(&format!("{} claims, {failed} failed\n", results.len()));
    (out, if failed == 0 { EXIT_OK } else { EXIT_CLAIM_FAILED })
}

fn s4() -> GroupSpec {
    GroupSpec::named("symmetric", Some(4))
}

/// Catalog members, with normal-subgroup lattices for the full members when
/// `normals` is set; class-level-only members only when `class_level` is.
fn catalog_needs(class_level: bool, normals: bool) -> Vec<Need> {
    catalog()
        .into_iter()
        .filter(|e| class_level || !e.class_level_only)
        .map(|e| need(e.spec, normals && !e.class_level_only))
        .collect()
}

/// Runs `f` on every catalog member, skipping class-level-only members
/// unless `class_level` is set.
fn per_member(
    cx: &Context,
    class_level: bool,
    f: impl Fn(&Context, &CatalogEntry, &FiniteGroup) -> Result<Vec<ClaimResult>> + Sync,
) -> Result<Vec<ClaimResult>> {
    let members: Vec<CatalogEntry> = catalog()
        .into_iter()
        .filter(|e| class_level || !e.class_level_only)
        .collect();
    let per: Vec<Result<Vec<ClaimResult>>> = members
        .par_iter()
        .map(|e| f(cx, e, cx.group(&e.spec)?))
        .collect();
    per.into_iter().try_fold(Vec::new(), |mut acc, r| {
        acc.extend(r?);
        Ok(acc)
    })
}

fn eq<T: PartialEq + Display>(id: impl Into<String>, observed: T, expected: T, witness: impl Into<String>) -> ClaimResult {
    ClaimResult::equals(id, observed, expected, witness)
}

/// A checker outcome under a new id; a checker error becomes a failed claim.
fn checked(id: impl Into<String>, r: Result<ClaimResult>) -> ClaimResult {
    match r {
        Ok(c) => c.with_id(id),
        Err(e) => ClaimResult::new(id, false, "error", e.to_string()),
    }
}

/// `checked`, additionally requiring the observed value to be `expected`.
fn checked_value(id: impl Into<String>, r: Result<ClaimResult>, expected: &str) -> ClaimResult {
    let c = checked(id, r);
    let holds = c.holds && c.observed == expected;
    let witness = if holds || c.observed == "error" {
        c.witness
    } else {
        format!("expected {expected}; {}", c.witness)
    };
    ClaimResult { holds, witness, ..c }
}

fn flag(id: impl Into<String>, holds: bool, witness: impl Into<String>) -> ClaimResult {
    ClaimResult::new(id, holds, holds.to_string(), witness)
}

/// Every element order is 1 or a prime power.
fn prime_power_orders(id: String, g: &FiniteGroup) -> ClaimResult {
    let orders: std::collections::BTreeSet<u32> =
        g.conjugacy_classes().iter().map(|c| c.element_order).collect();
    let bad = g
        .conjugacy_classes()
        .iter()
        .find(|c| !is_prime_power_or_one(c.element_order as u64));
    match bad {
        None => flag(id, true, format!("element orders {}", fmt_set(&orders))),
        Some(c) => flag(
            id,
            false,
            format!("order {}: {}", c.element_order, g.describe(c.representative)),
        ),
    }
}

fn exponent(g: &FiniteGroup, h: &Subgroup) -> u64 {
    h.members().iter().fold(1u64, |acc, &x| {
        let o = g.element_order(x) as u64;
        acc / realgraph_core::numtheory::gcd(acc, o) * o
    })
}

fn is_abelian(g: &FiniteGroup, h: &Subgroup) -> bool {
    let gens = h.generators();
    gens.iter()
        .all(|&a| gens.iter().all(|&b| g.mul(a, b) == g.mul(b, a)))
}

fn orders_of(hs: &[Subgroup]) -> Vec<usize> {
    hs.iter().map(|h| h.order()).collect()
}

fn example_g150(cx: &Context) -> Result<Vec<ClaimResult>> {
    let g = cx.group(&GroupSpec::PaperG150)?;
    let id = |s: &str| format!("example_g150.{s}");
    let spectrum = real_spectrum(g);
    let real = real_prime_graph(g);
    let normals = cx.normals(&GroupSpec::PaperG150)?;
    let series = g.derived_series();
    let f = g.fitting();
    let quot = g.quotient(&f)?;
    Ok(vec![
        eq(id("order"), g.order(), 150, ""),
        eq(id("real_orders"), fmt_set(&spectrum.orders), "{1,2,3,5}".into(), ""),
        satisfies_p(g).with_id(id("satisfies_P")),
        eq(id("real_prime_graph_edges"), real.edges.len(), 0, format!("vertices {}", fmt_set(&real.vertices))),
        eq(id("center_order"), g.center().order(), 1, ""),
        eq(id("o2_order"), g.p_core(2).order(), 1, ""),
        eq(id("o2prime_order"), g.o2prime().order(), 150, ""),
        eq(id("normal_subgroup_orders"), fmt_set(orders_of(normals)), "{1,25,75,150}".into(), ""),
        eq(id("derived_series_orders"), fmt_tuple(orders_of(&series)), "(150,75,25,1)".into(), ""),
        eq(id("fitting_order"), f.order(), 25, ""),
        flag(id("fitting_is_second_derived"), series.get(2) == Some(&f), "F(G) = G''"),
        flag(
            id("fitting_elementary_abelian"),
            is_abelian(g, &f) && exponent(g, &f) == 5,
            format!("exponent {}", exponent(g, &f)),
        ),
        eq(
            id("quotient_by_fitting_order"),
            quot.order(),
            6,
            format!("center order {}", quot.group().center().order()),
        ),
        flag(id("quotient_by_fitting_centerless"), quot.group().center().is_trivial(), "G/F(G) has trivial center"),
        checked_value(id("fitting_prime"), fitting_prime_check(g), "5"),
    ])
}

fn example_h199650(cx: &Context) -> Result<Vec<ClaimResult>> {
    let g = cx.group(&GroupSpec::PaperH199650)?;
    let id = |s: &str| format!("example_h199650.{s}");
    let action = h199650_action();
    let gen_orders = action
        .iter()
        .map(|m| close(std::slice::from_ref(m), cx.config.cap).map(|c| c.order()))
        .collect::<Result<Vec<_>>>()?;
    let matrix_order = make_matrix_group(&action, cx.config.cap)?.order();
    let spectrum = real_spectrum(g);
    let real = real_prime_graph(g);
    let series = g.derived_series();
    let third = series
        .get(3)
        .cloned()
        .ok_or_else(|| Error::Domain("derived series shorter than 4 terms".into()))?;
    let third_exp = exponent(g, &third);
    Ok(vec![
        eq(id("generator_orders"), fmt_tuple(&gen_orders), "(2,3,5,5)".into(), ""),
        eq(id("matrix_group_order"), matrix_order, 150, ""),
        eq(id("order"), g.order(), 199650, ""),
        eq(id("real_orders"), fmt_set(&spectrum.orders), "{1,2,3,5,11}".into(), ""),
        satisfies_p(g).with_id(id("satisfies_P")),
        eq(id("real_prime_graph_edges"), real.edges.len(), 0, format!("vertices {}", fmt_set(&real.vertices))),
        eq(id("center_order"), g.center().order(), 1, ""),
        flag(id("solvable"), g.is_solvable(), ""),
        eq(
            id("derived_series_orders"),
            fmt_tuple(orders_of(&series)),
            "(199650,99825,33275,1331,1)".into(),
            "",
        ),
        ClaimResult {
            holds: third_exp == 11 && is_abelian(g, &third) && third.order() == 1331,
            ..eq(
                id("third_derived_exponent"),
                third_exp,
                11,
                format!("order {} abelian {}", third.order(), is_abelian(g, &third)),
            )
        },
        flag(id("fitting_is_third_derived"), g.fitting() == third, "F(H) = H'''"),
        checked_value(id("fitting_prime"), fitting_prime_check(g), "11"),
    ])
}

fn twisted_k4(cx: &Context) -> Result<Vec<ClaimResult>> {
    const K: usize = 4;
    let g = cx.group(&GroupSpec::Twisted(K))?;
    let id = |s: &str| format!("twisted_k4.{s}");
    let s = make_s(K)?;
    let ring = realgraph_core::constructions::TwistedRing::new(K)?;
    let parts = twisted_parts(g)?;
    let mut out = vec![eq(id("s_order"), s.order(), 4096, "")];
    for u in 1..=K {
        let expected = 16usize.pow((K - u) as u32);
        out.push(eq(id(&format!("s_{u}_order")), make_su(&s, u)?.order(), expected, "16^(4-u)"));
    }
    for u in 1..K {
        out.push(psi_homomorphism_check(&ring, u)?);
    }
    for (u, v) in [(1, 1), (1, 2), (2, 1)] {
        out.push(commutator_coefficient_check(&ring, u, v)?);
    }
    for u in 1..K {
        for v in 1..K {
            out.push(filtration_check(&s, K, u, v)?);
        }
    }
    let dl = s.derived_length()?;
    out.push(eq(id("derived_length"), dl, TWISTED_K4_DERIVED_LENGTH, "golden value"));
    let bounded: Vec<u32> = (1..)
        .take_while(|&n| tn_sequence(n).is_ok_and(|t| t <= (K - 1) as u64))
        .collect();
    out.push(flag(
        id("derived_length_bound"),
        bounded.iter().all(|&n| dl > n as usize) && dl >= 2,
        format!("dl(S)={dl}; k-1 >= t_n for n in {}", fmt_set(&bounded)),
    ));
    out.push(eq(id("p_order"), parts.p.order(), 5, ""));
    out.push(fixed_point_free_check(g, &parts.s, &parts.p, K));
    out.push(scalar_conjugation_check(&ring)?);
    out.push(eq(id("order"), g.order(), 81920, "4096*5*4"));
    out.push(prime_power_orders(id("prime_power_orders"), g));
    let o2 = g.p_core(2);
    out.push(flag(id("o2_is_s"), o2 == parts.s, format!("|O_2|={}", o2.order())));
    out.push(eq(id("o2prime_order"), g.o2prime().order(), 81920, ""));
    out.push(satisfies_p(g).with_id(id("satisfies_P")));
    out.push(eq(id("real_primes"), fmt_set(real_spectrum(g).primes), "{2,5}".into(), ""));
    out.push(flag(id("two_frobenius"), g.is_2frobenius(&parts.s, &parts.sp)?, "N = S, M = S P"));
    out.push(checked(id("theorem_a"), theorem_a_check(g).map(|t| t.claim())));
    out.push(checked_value(id("corollary"), corollary_spectrum_check(g), "{2,5}"));
    Ok(out)
}

fn twisted_k2(cx: &Context) -> Result<Vec<ClaimResult>> {
    let g = cx.group(&GroupSpec::Twisted(2))?;
    let parts = twisted_parts(g)?;
    Ok(vec![
        eq("twisted_k2.order", g.order(), 24, ""),
        flag("twisted_k2.two_frobenius", g.is_2frobenius(&parts.s, &parts.sp)?, "N = S, M = S P"),
        prime_power_orders("twisted_k2.prime_power_orders".into(), g),
        checked("twisted_k2.theorem_a", theorem_a_check(g).map(|t| t.claim())),
    ])
}

fn twisted_k8(cx: &Context) -> Result<Vec<ClaimResult>> {
    let sampled = sample_ring_identities_seeded(8, cx.config.seed, cx.config.samples)?;
    Ok(sampled
        .into_iter()
        .map(|s| {
            let witness = match &s.first_failure {
                Some(w) => format!("{} of {} failed, first {w}", s.failures, s.checked),
                None => format!("{} samples, seed {:#x}", s.checked, cx.config.seed),
            };
            flag(format!("twisted_k8.{}", s.name), s.holds(), witness)
        })
        .collect())
}

fn theorem_a_s4(cx: &Context) -> Result<Vec<ClaimResult>> {
    let g = cx.group(&s4())?;
    let id = |s: &str| format!("theorem_a_s4.{s}");
    let t = theorem_a_check(g)?;
    let mut out = vec![t.claim().with_id(id("theorem_a"))];
    out.extend(t.checks.iter().map(|&(name, ok)| flag(id(name), ok, "")));
    let k = t.k.clone().ok_or_else(|| Error::Domain("no Sylow subgroup K".into()))?;
    let q = t.q.clone().ok_or_else(|| Error::Domain("no subgroup Q".into()))?;
    let m = g.join(&t.n, &k);
    let quot = g.quotient(&t.n)?;
    out.extend([
        satisfies_p(g).with_id(id("satisfies_P")),
        eq(id("n_order"), t.n.order(), 4, "Klein four"),
        eq(id("m_order"), m.order(), 12, "A_4"),
        flag(id("m_frobenius_kernel_n"), g.is_frobenius_with_kernel(&m, &t.n), "M Frobenius with kernel N"),
        flag(
            id("quotient_frobenius_kernel_m"),
            quot.group().is_frobenius_with_kernel(&quot.group().whole(), &quot.image(&m)),
            "G/N Frobenius with kernel M/N",
        ),
        eq(id("k_order"), k.order(), 3, ""),
        eq(id("q_order"), q.order(), 2, ""),
    ]);
    Ok(out)
}

fn label_id(prefix: &str, e: &CatalogEntry) -> String {
    format!("{prefix}.{}", e.spec.label())
}

/// Turns a checker result into a claim, dropping members outside the
/// checker's hypotheses.
fn applicable(id: String, r: Result<ClaimResult>) -> Result<Vec<ClaimResult>> {
    match r {
        Ok(c) => Ok(vec![c.with_id(id)]),
        Err(Error::Precondition { .. }) => Ok(vec![]),
        Err(e) => Err(e),
    }
}

fn theorem_a_member(_: &Context, e: &CatalogEntry, g: &FiniteGroup) -> Result<Vec<ClaimResult>> {
    applicable(label_id("theorem_a", e), theorem_a_check(g).map(|t| t.claim()))
}

fn corollary_member(_: &Context, e: &CatalogEntry, g: &FiniteGroup) -> Result<Vec<ClaimResult>> {
    applicable(label_id("corollary", e), corollary_spectrum_check(g))
}

fn fitting_member(_: &Context, e: &CatalogEntry, g: &FiniteGroup) -> Result<Vec<ClaimResult>> {
    applicable(label_id("fitting_prime", e), fitting_prime_check(g))
}

fn lucido_member(_: &Context, e: &CatalogEntry, g: &FiniteGroup) -> Result<Vec<ClaimResult>> {
    applicable(label_id("lucido", e), lucido_check(g))
}

fn dmn_member(_: &Context, e: &CatalogEntry, g: &FiniteGroup) -> Result<Vec<ClaimResult>> {
    applicable(label_id("dmn_vertices", e), dmn_vertex_check(g))
}

fn elem_prop_member(cx: &Context, e: &CatalogEntry, g: &FiniteGroup) -> Result<Vec<ClaimResult>> {
    let id = |n: u8| format!("lemma_elem_prop.{n}.{}", e.spec.label());
    let mut out = vec![
        elem_prop_inverting_two_element(g).with_id(id(1)),
        elem_prop_powers_real(g).with_id(id(2)),
    ];
    if !e.class_level_only {
        let normals = cx.normals(&e.spec)?;
        out.push(elem_prop_odd_coset_lift(g, normals)?.with_id(id(3)));
        out.push(elem_prop_two_group_action(g, normals).with_id(id(4)));
    }
    Ok(out)
}

fn suff_cond_member(_: &Context, e: &CatalogEntry, g: &FiniteGroup) -> Result<Vec<ClaimResult>> {
    Ok(vec![suff_cond_check(g).with_id(label_id("lemma_suff_cond", e))])
}

/// Runs a normal 2-complement checker on `G` and on `G / O_2(G)`.
fn complement_member(
    _: &Context,
    e: &CatalogEntry,
    g: &FiniteGroup,
    prefix: &str,
    check: fn(&FiniteGroup) -> Option<ClaimResult>,
) -> Result<Vec<ClaimResult>> {
    let mut out: Vec<ClaimResult> = check(g).map(|c| c.with_id(label_id(prefix, e))).into_iter().collect();
    let o2 = g.p_core(2);
    if !o2.is_trivial() && o2.order() < g.order() {
        let quot = g.quotient(&o2)?;
        if let Some(c) = check(quot.group()) {
            out.push(c.with_id(format!("{}/O2", label_id(prefix, e))));
        }
    }
    Ok(out)
}

fn quotient_member(
    cx: &Context,
    e: &CatalogEntry,
    g: &FiniteGroup,
    prefix: &str,
    check: fn(&FiniteGroup, &[Subgroup]) -> Result<Option<ClaimResult>>,
) -> Result<Vec<ClaimResult>> {
    let normals = cx.normals(&e.spec)?;
    Ok(check(g, normals)?
        .map(|c| c.with_id(label_id(prefix, e)))
        .into_iter()
        .collect())
}

/// P iff the real prime graph is edgeless, the real prime graph is a
/// subgraph of the prime graph, and odd-order groups have no nontrivial
/// real elements.
fn invariants_member(_: &Context, e: &CatalogEntry, g: &FiniteGroup) -> Result<Vec<ClaimResult>> {
    let full = prime_graph(g);
    let real = real_prime_graph(g);
    let p = satisfies_p(g).holds;
    let subgraph = real.vertices.iter().all(|v| full.vertices.contains(v))
        && real.edges.iter().all(|&[a, b]| full.has_edge(a, b));
    let odd_ok = g.order() % 2 == 0 || real_spectrum(g).orders == [1];
    let vertices_ok = real.vertices.iter().all(|&v| prime_factors(g.order() as u64).contains(&v));
    let holds = p == real.is_edgeless() && subgraph && odd_ok && vertices_ok;
    Ok(vec![flag(
        label_id("graph_invariants", e),
        holds,
        format!(
            "P={p} real edges {} full edges {} subgraph={subgraph} odd_order_ok={odd_ok}",
            real.edges.len(),
            full.edges.len()
        ),
    )])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn selection_by_prefix() {
        let groups = registry();
        let names = |only: &[&str]| -> Vec<&str> {
            let only: Vec<String> = only.iter().map(|s| s.to_string()).collect();
            select(&groups, &only).unwrap().iter().map(|g| g.name).collect()
        };
        assert_eq!(names(&["theorem_b.g150.components"]), vec!["theorem_b.g150"]);
        assert_eq!(names(&["theorem_b"]), vec!["theorem_b.g150", "theorem_b.h199650"]);
        assert_eq!(names(&["theorem_a"]), vec!["theorem_a_s4", "theorem_a"]);
        assert_eq!(names(&["theorem_a."]), vec!["theorem_a"]);
        assert_eq!(names(&["theorem_a_s4.n_order"]), vec!["theorem_a_s4"]);
        assert!(select(&groups, &["theorem_ab".to_string()]).is_err());
        assert_eq!(names(&["lemma_suff_cond"]), vec!["lemma_suff_cond"]);
        assert!(select(&groups, &["nope".to_string()]).is_err());
    }

    #[test]
    fn registry_names_are_unique() {
        let groups = registry();
        let mut names: Vec<&str> = groups.iter().map(|g| g.name).collect();
        names.sort_unstable();
        names.dedup();
        assert_eq!(names.len(), groups.len());
    }

    #[test]
    fn s4_claims_pass() {
        let r = run_suite(SuiteConfig::default(), &["theorem_a_s4".into()]).unwrap();
        assert!(r.len() >= 10);
        assert!(r.iter().all(|c| c.holds), "{:?}", r.iter().find(|c| !c.holds));
        let (text, code) = render(&r);
        assert_eq!(code, 0);
        assert!(text.ends_with(&format!("{} claims, 0 failed\n", r.len())));
    }

    #[test]
    fn filtering_drops_sibling_claims() {
        let r = run_suite(SuiteConfig::default(), &["twisted_k2.order".into()]).unwrap();
        assert_eq!(r.len(), 1);
        assert_eq!(r[0].to_string(), "twisted_k2.order = 24 PASS");
    }
}
