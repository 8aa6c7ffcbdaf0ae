//! Per-group summary and prime-graph rendering.

use std::fmt::Write as _;

use realgraph_core::groupkit::FiniteGroup;
use realgraph_core::realgraph::{
    components, prime_graph, real_prime_graph, real_spectrum, satisfies_p, satisfies_r, PrimeGraph,
};
use serde::{Deserialize, Serialize};

/// A prime graph with its connected components. Field order is the JSON
/// key order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphView {
    pub vertices: Vec<u64>,
    pub edges: Vec<[u64; 2]>,
    pub components: Vec<Vec<u64>>,
}

impl From<&PrimeGraph> for GraphView {
    fn from(g: &PrimeGraph) -> Self {
        GraphView {
            vertices: g.vertices.clone(),
            edges: g.edges.clone(),
            components: components(g).blocks,
        }
    }
}

impl GraphView {
    /// `graph G { ... }` with one statement per line.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph G {\n");
        for v in &self.vertices {
            let _ = writeln!(out, "  {v};");
        }
        for [p, q] in &self.edges {
            let _ = writeln!(out, "  {p} -- {q};");
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("graph serializes") + "\n"
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub group: String,
    pub order: usize,
    pub prime_divisors: Vec<u64>,
    pub class_count: usize,
    pub real_class_count: usize,
    pub real_orders: Vec<u32>,
    pub real_primes: Vec<u64>,
    pub prime_graph: GraphView,
    pub real_prime_graph: GraphView,
    pub prime_graph_components: usize,
    pub real_prime_graph_components: usize,
    pub solvable: bool,
    pub nilpotent: bool,
    #[serde(rename = "satisfies_P")]
    pub satisfies_p: bool,
    #[serde(rename = "satisfies_R")]
    pub satisfies_r: bool,
    pub center_order: usize,
    pub fitting_order: usize,
    pub o2_order: usize,
    pub o2prime_order: usize,
    pub derived_series_orders: Vec<usize>,
}

impl Report {
    pub fn new(label: &str, g: &FiniteGroup) -> Self {
        let spectrum = real_spectrum(g);
        let full = GraphView::from(&prime_graph(g));
        let real = GraphView::from(&real_prime_graph(g));
        Report {
            group: label.to_string(),
            order: g.order(),
            prime_divisors: g.prime_divisors(),
            class_count: g.conjugacy_classes().len(),
            real_class_count: g.conjugacy_classes().iter().filter(|c| c.is_real).count(),
            real_orders: spectrum.orders,
            real_primes: spectrum.primes,
            prime_graph_components: full.components.len(),
            real_prime_graph_components: real.components.len(),
            prime_graph: full,
            real_prime_graph: real,
            solvable: g.is_solvable(),
            nilpotent: g.is_nilpotent(),
            satisfies_p: satisfies_p(g).holds,
            satisfies_r: satisfies_r(g).holds,
            center_order: g.center().order(),
            fitting_order: g.fitting().order(),
            o2_order: g.p_core(2).order(),
            o2prime_order: g.o2prime().order(),
            derived_series_orders: g.derived_series().iter().map(|h| h.order()).collect(),
        }
    }

    /// Pretty JSON with keys sorted at every level.
    pub fn to_json(&self) -> String {
        let value = serde_json::to_value(self).expect("report serializes");
        serde_json::to_string_pretty(&value).expect("value serializes") + "\n"
    }

    /// One `key: value` line per field, lists in compact JSON form.
    pub fn to_text(&self) -> String {
        fn compact<T: Serialize>(v: &T) -> String {
            serde_json::to_string(v).expect("serializes")
        }
        let rows: [(&str, String); 24] = [
            ("group", self.group.clone()),
            ("order", self.order.to_string()),
            ("prime_divisors", compact(&self.prime_divisors)),
            ("class_count", self.class_count.to_string()),
            ("real_class_count", self.real_class_count.to_string()),
            ("real_orders", compact(&self.real_orders)),
            ("real_primes", compact(&self.real_primes)),
            ("prime_graph.vertices", compact(&self.prime_graph.vertices)),
            ("prime_graph.edges", compact(&self.prime_graph.edges)),
            ("prime_graph.components", compact(&self.prime_graph.components)),
            ("prime_graph_components", self.prime_graph_components.to_string()),
            ("real_prime_graph.vertices", compact(&self.real_prime_graph.vertices)),
            ("real_prime_graph.edges", compact(&self.real_prime_graph.edges)),
            ("real_prime_graph.components", compact(&self.real_prime_graph.components)),
            ("real_prime_graph_components", self.real_prime_graph_components.to_string()),
            ("solvable", self.solvable.to_string()),
            ("nilpotent", self.nilpotent.to_string()),
            ("satisfies_P", self.satisfies_p.to_string()),
            ("satisfies_R", self.satisfies_r.to_string()),
            ("center_order", self.center_order.to_string()),
            ("fitting_order", self.fitting_order.to_string()),
            ("o2_order", self.o2_order.to_string()),
            ("o2prime_order", self.o2prime_order.to_string()),
            ("derived_series_orders", compact(&self.derived_series_orders)),
        ];
        let mut out = String::new();
        for (k, v) in rows {
            let _ = writeln!(out, "{k}: {v}");
        }
        out
    }
}
