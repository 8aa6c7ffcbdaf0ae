use std::process::Command;

use realgraph_cli::{render, run_suite_with, GraphView, Report, SuiteConfig};
use realgraph_core::constructions::{make_semidirect, GroupSpec, MatrixElem};

fn realgraph(args: &[&str]) -> (String, String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_realgraph"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
        out.status.code().unwrap(),
    )
}

#[test]
fn report_and_graph_commands() {
    let (out, _, code) = realgraph(&["report", "paper:g150"]);
    assert_eq!(code, 0);
    assert!(out.contains("real_orders: [1,2,3,5]\n"));

    let (out, _, code) = realgraph(&["graph", "named:cyclic:6", "--full", "--dot"]);
    assert_eq!(code, 0);
    assert_eq!(out, "graph G {\n  2;\n  3;\n  2 -- 3;\n}\n");

    let (out, _, _) = realgraph(&["graph", "paper:g150", "--real", "--json"]);
    let view: GraphView = serde_json::from_str(&out).unwrap();
    assert_eq!(view.vertices, vec![2, 3, 5]);
    assert!(view.edges.is_empty());
    assert_eq!(view.components.len(), 3);
}

#[test]
fn json_report_round_trips() {
    let (out, _, code) = realgraph(&["report", "twisted:2", "--json"]);
    assert_eq!(code, 0);
    let r: Report = serde_json::from_str(&out).unwrap();
    assert_eq!(r.order, 24);
    assert_eq!(r.to_json(), out);
}

#[test]
fn export_headers() {
    for (spec, header) in [
        ("paper:g150", "order: 150\n"),
        ("named:quaternion:8", "order: 8\n"),
        ("twisted:4", "order: 81920\n"),
    ] {
        let (out, _, code) = realgraph(&["export-gap", spec]);
        assert_eq!(code, 0, "{spec}");
        assert!(out.starts_with(header), "{spec}: {out}");
    }
}

#[test]
fn spec_files() {
    let dir = std::env::temp_dir().join(format!("realgraph-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let good = dir.join("s3.txt");
    std::fs::write(&good, "# S3 on three points\nperm n=3\n1 0 2\n1 2 0\n").unwrap();
    let (out, _, code) = realgraph(&["report", &format!("file:{}", good.display())]);
    assert_eq!(code, 0);
    assert!(out.contains("order: 6\n"));

    let semi = dir.join("semi.txt");
    std::fs::write(&semi, "semidirect p=5 n=2\n0 1; 1 0\n0 4; 1 4\n").unwrap();
    let (out, _, _) = realgraph(&["report", &format!("file:{}", semi.display())]);
    assert!(out.contains("order: 150\n"));

    let bad = dir.join("bad.txt");
    std::fs::write(&bad, "matrix p=4 n=2\n1 0; 0 1\n").unwrap();
    let (_, err, code) = realgraph(&["report", &format!("file:{}", bad.display())]);
    assert_eq!(code, 2);
    assert!(err.contains("line 2, column 1"), "{err}");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn exit_codes() {
    assert_eq!(realgraph(&["report", "named:nothing:3"]).2, 2);
    assert_eq!(realgraph(&["bogus-command"]).2, 2);
    assert_eq!(realgraph(&["graph", "paper:g150", "--real", "--full"]).2, 2);
    let (_, err, code) = realgraph(&["--cap", "100", "report", "named:symmetric:5"]);
    assert_eq!(code, 3);
    assert!(err.contains("resource"), "{err}");
    assert_eq!(realgraph(&["verify-paper", "--only", "no_such_claim"]).2, 2);
}

#[test]
fn verify_only_filters() {
    let (out, _, code) = realgraph(&["verify-paper", "--only", "lemma_suff_cond"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    let (tally, claims) = lines.split_last().unwrap();
    assert!(claims.iter().all(|l| l.starts_with("lemma_suff_cond.")), "{out}");
    assert_eq!(*tally, format!("{} claims, 0 failed", claims.len()));

    let (out, _, code) = realgraph(&["verify-paper", "--only", "theorem_b.g150.components,twisted_k2.order"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("theorem_b.g150.components = 3 PASS"));
    assert!(out.contains("twisted_k2.order = 24 PASS\n"));
    assert_eq!(out.lines().count(), 3);
}

#[test]
fn seed_changes_only_the_sampled_claims() {
    let (a, _, _) = realgraph(&["verify-paper", "--only", "twisted_k8", "--samples", "200"]);
    let (b, _, _) = realgraph(&["verify-paper", "--only", "twisted_k8", "--samples", "200", "--seed", "1f"]);
    assert!(a.contains("seed 0xc0ffee"));
    assert!(b.contains("seed 0x1f"));
    assert_eq!(a.lines().count(), b.lines().count());
}

/// The order-150 construction with its order-3 generator replaced by `-I`:
/// `(1,1)` is fixed by the swap and inverted by `-I`, giving a real element
/// of order 10.
#[test]
fn corrupted_construction_fails_with_witness() {
    let swap = MatrixElem::new(5, &[vec![0, 1], vec![1, 0]]).unwrap();
    let minus = MatrixElem::new(5, &[vec![4, 0], vec![0, 4]]).unwrap();
    let corrupted = make_semidirect(&[swap, minus], 1 << 12).unwrap();
    assert_eq!(corrupted.order(), 100);
    let only = vec!["example_g150".to_string(), "theorem_b.g150".to_string()];
    let results = run_suite_with(SuiteConfig::default(), &only, &[(GroupSpec::PaperG150, corrupted)]).unwrap();
    let line = |id: &str| results.iter().find(|c| c.id == id).unwrap().to_string();
    assert!(line("example_g150.order").starts_with("example_g150.order = 100 FAIL (witness: expected 150"));
    let p = line("example_g150.satisfies_P");
    assert!(p.contains("FAIL (witness: real element of order 10"), "{p}");
    assert!(line("theorem_b.g150.components").contains("FAIL"));
    let (_, code) = render(&results);
    assert_eq!(code, 1);
}
