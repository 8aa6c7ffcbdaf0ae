//! Command implementations for the `realgraph` binary. Each command returns
//! its full output and exit code so it can be driven from tests.

pub mod error;
pub mod report;
pub mod specfile;
pub mod suite;

use realgraph_core::constructions::GroupSpec;
use realgraph_core::realgraph::{prime_graph, real_prime_graph};

pub use error::CliError;
pub use report::{GraphView, Report};
pub use specfile::{parse_spec, parse_spec_arg, ParseError};
pub use suite::{render, run_suite, run_suite_with, SuiteConfig};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphChoice {
    Full,
    Real,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    Dot,
    Json,
}

fn build(spec: &GroupSpec, cap: usize) -> Result<realgraph_core::groupkit::FiniteGroup, CliError> {
    Ok(spec.build(cap)?)
}

pub fn cmd_report(spec: &GroupSpec, json: bool, cap: usize) -> Result<String, CliError> {
    let g = build(spec, cap)?;
    let r = Report::new(&spec.label(), &g);
    Ok(if json { r.to_json() } else { r.to_text() })
}

pub fn cmd_graph(spec: &GroupSpec, which: GraphChoice, format: GraphFormat, cap: usize) -> Result<String, CliError> {
    let g = build(spec, cap)?;
    let graph = match which {
        GraphChoice::Full => prime_graph(&g),
        GraphChoice::Real => real_prime_graph(&g),
    };
    let view = GraphView::from(&graph);
    Ok(match format {
        GraphFormat::Dot => view.to_dot(),
        GraphFormat::Json => view.to_json(),
    })
}

/// Output and exit code: 0 when every selected claim holds, 1 otherwise.
pub fn cmd_verify_paper(config: SuiteConfig, only: &[String]) -> Result<(String, i32), CliError> {
    let results = run_suite(config, only)?;
    Ok(render(&results))
}

pub fn cmd_export_gap(spec: &GroupSpec, cap: usize) -> Result<String, CliError> {
    Ok(spec.export_gap(cap)?)
}
