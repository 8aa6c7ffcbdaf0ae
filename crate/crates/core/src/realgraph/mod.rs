//! Real elements and the graphs built from them.
//!
//! The prime graph has an edge `p -- q` when some element has order
//! divisible by `pq`; the real prime graph uses real elements only. Powers
//! of real elements are real, so divisibility and exact order `pq` give the
//! same graph.

mod checks;
mod lemmas;
mod twisted_checks;

use std::collections::BTreeSet;
use std::fmt::{self, Display};

use serde::{Deserialize, Serialize};

use crate::groupkit::FiniteGroup;
use crate::numtheory::{is_prime_power_or_one, prime_factors};

pub use checks::{
    corollary_spectrum_check, dmn_vertex_check, edgeless_components_claim, fitting_prime_check, lucido_check,
    theorem_a_check, theorem_b_witnesses, TheoremA,
};
pub use lemmas::{
    abel_k_check, elem_prop_inverting_two_element, elem_prop_odd_coset_lift,
    elem_prop_powers_real, elem_prop_two_group_action, interder_kq_check, normal_two_complement,
    p_quotient_check, r_quotient_check, suff_cond_check,
};
pub use twisted_checks::{
    commutator_coefficient_check, filtration_check, fixed_point_free_check, psi_homomorphism_check,
    scalar_conjugation_check, units_in, TWISTED_K4_DERIVED_LENGTH,
};

/// Orders of the real elements and the primes dividing them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RealSpectrum {
    pub orders: Vec<u32>,
    pub primes: Vec<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GraphKind {
    Full,
    Real,
}

/// A graph on primes; vertices ascending, edges `[p, q]` with `p < q`,
/// sorted lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeGraph {
    pub kind: GraphKind,
    pub vertices: Vec<u64>,
    pub edges: Vec<[u64; 2]>,
}

impl PrimeGraph {
    pub fn is_edgeless(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn has_edge(&self, p: u64, q: u64) -> bool {
        let e = if p < q { [p, q] } else { [q, p] };
        self.edges.binary_search(&e).is_ok()
    }
}

/// Connected components, each sorted, ordered by smallest vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentPartition {
    pub blocks: Vec<Vec<u64>>,
}

impl ComponentPartition {
    pub fn count(&self) -> usize {
        self.blocks.len()
    }
}

/// Outcome of one checked claim. The witness names the element or
/// structure that decided it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimResult {
    pub id: String,
    pub holds: bool,
    pub observed: String,
    pub witness: String,
}

impl ClaimResult {
    pub fn new(
        id: impl Into<String>,
        holds: bool,
        observed: impl Into<String>,
        witness: impl Into<String>,
    ) -> Self {
        ClaimResult {
            id: id.into(),
            holds,
            observed: observed.into(),
            witness: witness.into(),
        }
    }

    /// Holds iff `observed == expected`.
    pub fn equals<T: PartialEq + Display>(
        id: impl Into<String>,
        observed: T,
        expected: T,
        witness: impl Into<String>,
    ) -> Self {
        let holds = observed == expected;
        let mut witness = witness.into();
        if !holds {
            witness = format!("expected {expected}; {witness}");
        }
        ClaimResult::new(id, holds, observed.to_string(), witness)
    }

    pub fn with_id(mut self, id: impl Into<String>) -> Self {
        self.id = id.into();
        self
    }
}

impl Display for ClaimResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} = {} {}",
            self.id,
            self.observed,
            if self.holds { "PASS" } else { "FAIL" }
        )?;
        if !self.witness.is_empty() {
            write!(f, " (witness: {})", self.witness)?;
        }
        Ok(())
    }
}

/// `{a,b,c}`
pub fn fmt_set<T: Display>(items: impl IntoIterator<Item = T>) -> String {
    let parts: Vec<String> = items.into_iter().map(|x| x.to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

/// `(a,b,c)`
pub fn fmt_tuple<T: Display>(items: impl IntoIterator<Item = T>) -> String {
    let parts: Vec<String> = items.into_iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

pub fn real_spectrum(g: &FiniteGroup) -> RealSpectrum {
    let orders: BTreeSet<u32> = g
        .conjugacy_classes()
        .iter()
        .filter(|c| c.is_real)
        .map(|c| c.element_order)
        .collect();
    let primes: BTreeSet<u64> = orders
        .iter()
        .flat_map(|&o| prime_factors(o as u64))
        .collect();
    RealSpectrum {
        orders: orders.into_iter().collect(),
        primes: primes.into_iter().collect(),
    }
}

fn graph_from_orders(kind: GraphKind, vertices: Vec<u64>, orders: &BTreeSet<u32>) -> PrimeGraph {
    let mut edges = BTreeSet::new();
    for &o in orders {
        let ps = prime_factors(o as u64);
        for (i, &p) in ps.iter().enumerate() {
            for &q in &ps[i + 1..] {
                edges.insert([p, q]);
            }
        }
    }
    PrimeGraph {
        kind,
        vertices,
        edges: edges.into_iter().collect(),
    }
}

/// Vertices: primes dividing `|G|`.
pub fn prime_graph(g: &FiniteGroup) -> PrimeGraph {
    let orders: BTreeSet<u32> = g
        .conjugacy_classes()
        .iter()
        .map(|c| c.element_order)
        .collect();
    graph_from_orders(GraphKind::Full, g.prime_divisors(), &orders)
}

/// Vertices: primes `p` with a real element of order `p`.
pub fn real_prime_graph(g: &FiniteGroup) -> PrimeGraph {
    let spec = real_spectrum(g);
    let orders: BTreeSet<u32> = spec.orders.iter().copied().collect();
    graph_from_orders(GraphKind::Real, spec.primes, &orders)
}

pub fn components(graph: &PrimeGraph) -> ComponentPartition {
    let n = graph.vertices.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut i: usize) -> usize {
        while parent[i] != i {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        i
    }
    let pos = |p: u64| {
        graph
            .vertices
            .binary_search(&p)
            .expect("edge endpoints are vertices")
    };
    for &[p, q] in &graph.edges {
        let (a, b) = (find(&mut parent, pos(p)), find(&mut parent, pos(q)));
        if a != b {
            parent[a.max(b)] = a.min(b);
        }
    }
    let mut blocks: Vec<Vec<u64>> = Vec::new();
    let mut block_of_root = vec![usize::MAX; n];
    for i in 0..n {
        let r = find(&mut parent, i);
        if block_of_root[r] == usize::MAX {
            block_of_root[r] = blocks.len();
            blocks.push(Vec::new());
        }
        blocks[block_of_root[r]].push(graph.vertices[i]);
    }
    ComponentPartition { blocks }
}

fn real_order_witness(g: &FiniteGroup, bad: impl Fn(u32) -> bool) -> Option<(u32, String)> {
    g.conjugacy_classes()
        .iter()
        .find(|c| c.is_real && bad(c.element_order))
        .map(|c| (c.element_order, g.describe(c.representative)))
}

/// Every real element has prime power order.
pub fn satisfies_p(g: &FiniteGroup) -> ClaimResult {
    match real_order_witness(g, |o| !is_prime_power_or_one(o as u64)) {
        None => ClaimResult::new(
            "satisfies_P",
            true,
            "true",
            format!("real orders {}", fmt_set(real_spectrum(g).orders)),
        ),
        Some((o, x)) => ClaimResult::new(
            "satisfies_P",
            false,
            "false",
            format!("real element of order {o}: {x}"),
        ),
    }
}

/// Every real element has 2-power or odd order.
pub fn satisfies_r(g: &FiniteGroup) -> ClaimResult {
    match real_order_witness(g, |o| o % 2 == 0 && !o.is_power_of_two()) {
        None => ClaimResult::new(
            "satisfies_R",
            true,
            "true",
            format!("real orders {}", fmt_set(real_spectrum(g).orders)),
        ),
        Some((o, x)) => ClaimResult::new(
            "satisfies_R",
            false,
            "false",
            format!("real element of order {o}: {x}"),
        ),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::make_named;

    fn named(n: &str, p: u32) -> FiniteGroup {
        make_named(n, Some(p)).unwrap()
    }

    #[test]
    fn spectra_of_small_groups() {
        assert_eq!(real_spectrum(&named("cyclic", 3)).orders, vec![1]);
        assert_eq!(real_spectrum(&named("cyclic", 6)).orders, vec![1, 2]);
        let s4 = real_spectrum(&named("symmetric", 4));
        assert_eq!(s4.orders, vec![1, 2, 3, 4]);
        assert_eq!(s4.primes, vec![2, 3]);
        // A4: the 3-cycles are not real
        assert_eq!(real_spectrum(&named("alternating", 4)).orders, vec![1, 2]);
    }

    #[test]
    fn graphs_of_c6_and_d6() {
        let c6 = named("cyclic", 6);
        let full = prime_graph(&c6);
        assert_eq!(full.vertices, vec![2, 3]);
        assert_eq!(full.edges, vec![[2, 3]]);
        let real = real_prime_graph(&c6);
        assert_eq!(real.vertices, vec![2]);
        assert!(real.is_edgeless());
        assert!(satisfies_p(&c6).holds);

        let d6 = named("dihedral", 6);
        let p = satisfies_p(&d6);
        assert!(!p.holds);
        assert!(p.witness.contains("order 6"));
        assert!(!satisfies_r(&d6).holds);
        assert!(real_prime_graph(&d6).has_edge(3, 2));
    }

    #[test]
    fn union_find_components() {
        let g = PrimeGraph {
            kind: GraphKind::Real,
            vertices: vec![2, 3, 5, 7, 11],
            edges: vec![[2, 7], [5, 11], [7, 11]],
        };
        assert_eq!(components(&g).blocks, vec![vec![2, 5, 7, 11], vec![3]]);
        let empty = PrimeGraph {
            kind: GraphKind::Full,
            vertices: vec![2, 3, 5],
            edges: vec![],
        };
        assert_eq!(components(&empty).count(), 3);
    }

    #[test]
    fn claim_display() {
        let c = ClaimResult::equals("a.b", 3, 3, "");
        assert_eq!(c.to_string(), "a.b = 3 PASS");
        let c = ClaimResult::equals("a.b", 2, 3, "x");
        assert_eq!(c.to_string(), "a.b = 2 FAIL (witness: expected 3; x)");
    }
}
