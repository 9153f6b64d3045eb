//! End-to-end tests of the `voicegraph` binary: output shapes and the
//! exit-code contract (0 ok, 1 usage, 2 infeasible, 3 reference
//! mismatch).

use std::process::{Command, Output};

use voicegraph::GraphDocument;

fn voicegraph(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_voicegraph"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

fn stderr(output: &Output) -> String {
    String::from_utf8_lossy(&output.stderr).into_owned()
}

#[test]
fn build_harmonic_minor_table() {
    let out = voicegraph(&["build", "harmonic-minor"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("vertices: 10, edges: 13"));
    assert!(text.contains("Eb+"));
    assert!(text.contains("ab -- Eb+"));
    assert!(!text.contains("warning"));
}

#[test]
fn build_whole_tone_warns_disconnected() {
    let out = voicegraph(&["build", "0,2,4,6,8,10"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("vertices: 2, edges: 0"));
    assert!(text.contains("warning: graph is disconnected"));
}

#[test]
fn build_empty_spec_is_usage_error() {
    let out = voicegraph(&["build", ""]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("empty scale specification"));
}

#[test]
fn build_dot_output() {
    let out = voicegraph(&["build", "major", "--format", "dot"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("graph voice_leading {"));
    assert!(text.contains("\"C\" -- \"e\";"));
    assert!(text.trim_end().ends_with('}'));
}

#[test]
fn build_structured_parses_back() {
    let out = voicegraph(&["build", "harmonic-minor", "--format", "structured"]);
    assert!(out.status.success());
    let doc = GraphDocument::from_json(&stdout(&out)).expect("valid document");
    assert_eq!(doc.vertices.len(), 10);
    assert_eq!(doc.edges.len(), 13);
    assert_eq!(doc.scale.mask, "101101011001");
}

#[test]
fn build_transpose_and_unicode_flags() {
    let out = voicegraph(&["build", "major@2", "--format", "dot", "--unicode"]);
    assert!(out.status.success());
    let transposed = voicegraph(&[
        "build",
        "major",
        "--transpose",
        "2",
        "--format",
        "dot",
        "--unicode",
    ]);
    assert_eq!(stdout(&out), stdout(&transposed));
    assert!(stdout(&out).contains('\u{266d}'));
}

#[test]
fn metrics_hexatonic() {
    let out = voicegraph(&["metrics", "hexatonic"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("regular: yes (degree 3)"));
    assert!(text.contains("Euler class: neither"));
    assert!(text.contains("Hamiltonian circuits: 6 undirected, 12 directed"));
    assert!(text.contains("self-centred: yes"));
}

#[test]
fn metrics_octatonic_is_eulerian() {
    let out = voicegraph(&["metrics", "octatonic"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("Euler class: Eulerian"));
}

#[test]
fn metrics_mixolydian_augmented() {
    let out = voicegraph(&["metrics", "mixolydian-augmented"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("radius: 2"));
    assert!(text.contains("diameter: 4"));
    assert!(text.contains("self-centred: no"));
    assert!(text.contains("central vertices: F"));
}

#[test]
fn metrics_ham_cap_makes_run_infeasible() {
    let out = voicegraph(&["metrics", "chromatic", "--ham-cap", "1000"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stdout(&out).contains("enumeration capped"));
    assert!(stderr(&out).contains("budget"));
}

#[test]
fn centrality_harmonic_minor_table() {
    let out = voicegraph(&["centrality", "harmonic-minor"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("4/9"));
    assert!(text.contains("0.563"));
    assert!(text.contains("0.255"));
    assert!(text.contains("limit 1/rho = 0.361"));
}

#[test]
fn centrality_with_communicability() {
    let out = voicegraph(&["centrality", "harmonic-minor", "--communicability"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("communicability:"));
    assert!(text.contains("1.859"));
    assert!(text.contains("4.500"));
}

#[test]
fn centrality_single_vertex_suppressed() {
    let out = voicegraph(&["centrality", "0,4,7"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("single vertex: measures suppressed"));
}

#[test]
fn centrality_disconnected_notice() {
    let out = voicegraph(&["centrality", "whole-tone"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("notice: graph disconnected"));
    // Degree column still rendered, suppressed measures dashed out.
    assert!(text.contains('-'));
}

#[test]
fn centrality_alpha_out_of_range() {
    let out = voicegraph(&["centrality", "harmonic-minor", "--alpha", "0.4"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("alpha"));
}

#[test]
fn centrality_structured_includes_report() {
    let out = voicegraph(&[
        "centrality",
        "harmonic-minor",
        "--format",
        "structured",
        "--communicability",
    ]);
    assert!(out.status.success());
    let doc = GraphDocument::from_json(&stdout(&out)).expect("valid document");
    let report = doc.centrality.expect("centrality block");
    assert_eq!(report.degree.iter().max(), Some(&4));
    let comm = doc.communicability.expect("communicability block");
    assert_eq!(comm.len(), 10);
}

#[test]
fn census_default_bounds_pass_reference_check() {
    let out = voicegraph(&["census"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(
        text.contains("empty: 642, disconnected: 2, self-centred: 1857, non-self-centred: 1516")
    );
    assert!(text.contains("total: 4017"));
    assert!(text.contains("reference check: ok"));
}

#[test]
fn census_chromatic_only() {
    let out = voicegraph(&["census", "--min", "12", "--max", "12"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("self-centred: 1"));
    assert!(text.contains("total: 1"));
    assert!(!text.contains("reference check"));
}

#[test]
fn census_triads_only() {
    let out = voicegraph(&["census", "--min", "3", "--max", "3"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("total: 220"));
}

#[test]
fn census_writes_detail_records() {
    let dir = std::env::temp_dir().join("voicegraph-census-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("details.csv");
    let out = voicegraph(&[
        "census",
        "--min",
        "3",
        "--max",
        "3",
        "--details",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let body = std::fs::read_to_string(&path).unwrap();
    let mut lines = body.lines();
    assert_eq!(
        lines.next(),
        Some("mask,category,vertices,edges,radius,diameter")
    );
    assert_eq!(body.lines().count(), 221);
    assert!(body.contains("111000000000,empty,0,0,,"));
    assert!(body.contains("100010010000,self-centred,1,0,0,0"));
    std::fs::remove_file(&path).ok();
}

#[test]
fn census_rejects_bad_bounds() {
    let out = voicegraph(&["census", "--min", "9", "--max", "3"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn compare_isomorphic_extensions() {
    let out = voicegraph(&["compare", "0,2,4,5,6,7,9,11", "0,1,2,4,5,7,9,11"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("isomorphic: yes"));
    assert!(text.contains(" -> "));
}

#[test]
fn compare_embedding_into_larger() {
    let out = voicegraph(&["compare", "0,2,4,5,6,7,9,11", "0,2,4,5,7,8,9,11"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("isomorphic: no"));
    assert!(text.contains("subgraph embedding (A into B): yes"));
}

#[test]
fn compare_scale_with_itself() {
    let out = voicegraph(&["compare", "hexatonic", "hexatonic"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("isomorphic: yes"));
}

#[test]
fn walks_by_name_and_index() {
    let by_name = voicegraph(&["walks", "major", "C", "e", "3"]);
    assert!(by_name.status.success());
    assert!(stdout(&by_name).contains("walks of length 3 from C to e: 3"));

    let by_index = voicegraph(&["walks", "major", "0", "4", "3"]);
    assert_eq!(stdout(&by_index), stdout(&by_name));
}

#[test]
fn walks_unknown_triad_is_usage_error() {
    let out = voicegraph(&["walks", "major", "Q", "e", "3"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("no triad named"));
}

#[test]
fn walks_overflow_is_infeasible() {
    let out = voicegraph(&["walks", "chromatic", "C", "C", "64"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unknown_subcommand_is_usage_error() {
    let out = voicegraph(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn output_is_deterministic_across_runs() {
    for args in [
        vec!["centrality", "harmonic-minor", "--communicability"],
        vec!["build", "chromatic", "--format", "structured"],
        vec!["metrics", "octatonic"],
    ] {
        let first = voicegraph(&args);
        let second = voicegraph(&args);
        assert_eq!(first.stdout, second.stdout);
    }
}
