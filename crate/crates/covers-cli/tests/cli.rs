//! End-to-end command tests driven through `run`, including exit codes and
//! byte stability of the outputs.

use std::path::PathBuf;
use std::sync::atomic::{AtomicU32, Ordering};

use covers_cli::{exit_code, run};

fn instance(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../instances")
        .join(name);
    path.to_str().unwrap().to_string()
}

fn invoke(args: &[&str]) -> (i32, String, String) {
    let owned: Vec<String> = args.iter().map(|s| s.to_string()).collect();
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(&owned, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

static SCRATCH: AtomicU32 = AtomicU32::new(0);

fn scratch_path(tag: &str) -> String {
    let k = SCRATCH.fetch_add(1, Ordering::Relaxed);
    std::env::temp_dir()
        .join(format!("covers-cli-test-{}-{k}-{tag}", std::process::id()))
        .to_str()
        .unwrap()
        .to_string()
}

#[test]
fn xi_both_on_the_worked_example() {
    let (code, out, _) = invoke(&["xi", &instance("k3_fig2.cover"), "--method", "both"]);
    assert_eq!(code, exit_code::OK);
    assert!(out.contains("xi coefficients = [8, 12, 6, 1]"), "{out}");
    assert!(out.contains("xi = 8 + 12t + 6t^2 + t^3"), "{out}");
    assert!(out.contains("degree = 3"), "{out}");
    assert!(out.contains("constant term = 8"), "{out}");
    assert!(out.contains("methods agree: yes"), "{out}");
}

#[test]
fn xi_on_the_cube_instance() {
    // both engines agree on this vector; xi(1) = 16 and xi(-1) = 0 follow
    let (code, out, _) = invoke(&["xi", &instance("k4_cube_fig1.cover"), "--method", "both"]);
    assert_eq!(code, exit_code::OK);
    assert!(out.contains("xi coefficients = [2, 0, 0, 8, 6]"), "{out}");
    assert!(out.contains("methods agree: yes"), "{out}");
}

#[test]
fn xi_outputs_are_byte_identical_across_runs() {
    let first = invoke(&["xi", &instance("k3_fig2.cover"), "--method", "both"]);
    let second = invoke(&["xi", &instance("k3_fig2.cover"), "--method", "both"]);
    assert_eq!(first, second);
}

#[test]
fn xi_stats_and_method_validation() {
    let (code, out, _) = invoke(&["xi", &instance("path3.cover"), "--stats"]);
    assert_eq!(code, exit_code::OK);
    assert!(out.contains("stats dc: nodes="), "{out}");

    let (code, _, err) = invoke(&["xi", &instance("path3.cover"), "--method", "fast"]);
    assert_eq!(code, exit_code::USAGE);
    assert!(err.contains("unknown method"), "{err}");

    let (code, _, err) = invoke(&["xi", "/nonexistent/file.cover"]);
    assert_eq!(code, exit_code::INPUT);
    assert!(err.contains("cannot read"), "{err}");

    let (code, _, err) = invoke(&["xi", &instance("path3.cover"), "--verbose"]);
    assert_eq!(code, exit_code::USAGE);
    assert!(err.contains("unknown flag"), "{err}");
}

#[test]
fn eval_at_integers() {
    let (code, out, _) = invoke(&["eval", &instance("k3_fig2.cover"), "--at", "-2"]);
    assert_eq!(code, exit_code::OK);
    assert!(out.contains("xi(-2) = 0"), "{out}");

    let (code, out, _) = invoke(&["eval", &instance("k3_fig2.cover"), "--at", "1"]);
    assert_eq!(code, exit_code::OK);
    assert!(out.contains("xi(1) = 27"), "{out}");

    let (code, _, _) = invoke(&["eval", &instance("k3_fig2.cover"), "--at", "x"]);
    assert_eq!(code, exit_code::USAGE);
}

#[test]
fn verify_congruence_reports_quotient() {
    let (code, out, _) = invoke(&["verify", &instance("k3_fig2.cover"), "--suite", "congruence"]);
    assert_eq!(code, exit_code::OK);
    assert!(out.contains("xi(-2) = 0"), "{out}");
    assert!(out.contains("modulus r^n = 27"), "{out}");
    assert!(out.contains("divisible: yes (quotient 0)"), "{out}");
    assert!(out.contains("PASS congruence"), "{out}");
}

#[test]
fn verify_twofold_exit_codes() {
    // r = 3 violates the precondition
    let (code, _, err) = invoke(&["verify", &instance("k3_fig2.cover"), "--suite", "twofold"]);
    assert_eq!(code, exit_code::PRECONDITION);
    assert!(err.contains("r = 2"), "{err}");

    // K4 has odd valencies, so the class is 0 and the suite passes
    let (code, out, _) = invoke(&["verify", &instance("k4_cube_fig1.cover"), "--suite", "twofold"]);
    assert_eq!(code, exit_code::OK);
    assert!(out.contains("eulerian (all valencies even): no"), "{out}");
    assert!(out.contains("xi(-1) = 0"), "{out}");
    assert!(out.contains("PASS twofold"), "{out}");
}

#[test]
fn verify_tree_suite() {
    let (code, out, _) = invoke(&["verify", &instance("path3.cover"), "--suite", "tree"]);
    assert_eq!(code, exit_code::OK);
    assert!(out.contains("closed form = [2, 4, 2]"), "{out}");
    assert!(out.contains("PASS tree"), "{out}");

    let (code, _, err) = invoke(&["verify", &instance("k3_fig2.cover"), "--suite", "tree"]);
    assert_eq!(code, exit_code::PRECONDITION);
    assert!(err.contains("tree"), "{err}");
}

#[test]
fn verify_recurrence_and_all() {
    let (code, out, _) = invoke(&["verify", &instance("k3_fig2.cover"), "--suite", "recurrence"]);
    assert_eq!(code, exit_code::OK);
    assert!(out.contains("recurrence verified on 3 non-loop edges"), "{out}");

    let (code, out, _) = invoke(&["verify", &instance("k3_fig2.cover"), "--suite", "all"]);
    assert_eq!(code, exit_code::OK);
    assert!(out.contains("PASS congruence"), "{out}");
    assert!(out.contains("PASS recurrence"), "{out}");
    assert!(out.contains("SKIP twofold"), "{out}");
    assert!(out.contains("SKIP tree"), "{out}");

    let (code, out, _) = invoke(&["verify", &instance("path3.cover"), "--suite", "all"]);
    assert_eq!(code, exit_code::OK);
    assert!(out.contains("PASS twofold"), "{out}");
    assert!(out.contains("PASS tree"), "{out}");
}

#[test]
fn zeta_lists_terms_deterministically() {
    let (code, out, _) = invoke(&["zeta", &instance("path3.cover")]);
    assert_eq!(code, exit_code::OK);
    assert!(out.contains("zeta terms (t-power s-power coefficient):"), "{out}");
    // 2-fold path cover: coefficients collected in ascending (t, s) order
    assert!(out.contains("zeta = "), "{out}");
    let again = invoke(&["zeta", &instance("path3.cover")]);
    assert_eq!(again.1, out);
}

#[test]
fn gen_is_reproducible_and_validated() {
    let a = invoke(&["gen", "--n", "4", "--r", "3", "--edges", "5", "--loops", "1", "--seed", "42"]);
    let b = invoke(&["gen", "--n", "4", "--r", "3", "--edges", "5", "--loops", "1", "--seed", "42"]);
    assert_eq!(a.0, exit_code::OK);
    assert_eq!(a, b);
    assert!(a.1.starts_with("# generated: n=4 r=3 edges=5 loops=1 seed=42\n"), "{}", a.1);

    // the emitted document parses back into a working instance
    let path = scratch_path("gen.cover");
    let (code, _, _) = invoke(&[
        "gen", "--n", "4", "--r", "3", "--edges", "5", "--loops", "1", "--seed", "42", "-o", &path,
    ]);
    assert_eq!(code, exit_code::OK);
    let (code, out, _) = invoke(&["xi", &path, "--method", "both"]);
    assert_eq!(code, exit_code::OK);
    assert!(out.contains("methods agree: yes"), "{out}");
    std::fs::remove_file(&path).ok();

    // impossible parameters are a clean input error
    let (code, _, err) = invoke(&["gen", "--n", "1", "--r", "2", "--edges", "1"]);
    assert_eq!(code, exit_code::INPUT);
    assert!(err.contains("distinct vertices"), "{err}");

    let (code, _, _) = invoke(&["gen", "--r", "2"]);
    assert_eq!(code, exit_code::USAGE);
}

#[test]
fn budget_guard_surfaces_as_exit_code() {
    let path = scratch_path("big.cover");
    let (code, _, _) = invoke(&["gen", "--n", "20", "--r", "3", "--seed", "7", "-o", &path]);
    assert_eq!(code, exit_code::OK);
    let (code, _, err) = invoke(&["xi", &path, "--method", "brute"]);
    assert_eq!(code, exit_code::BUDGET);
    assert!(err.contains("exceed the enumeration budget of 100000000"), "{err}");
    let (code, _, _) = invoke(&["zeta", &path]);
    assert_eq!(code, exit_code::BUDGET);
    // contraction-deletion has no such bound
    let (code, _, _) = invoke(&["xi", &path, "--method", "dc"]);
    assert_eq!(code, exit_code::OK);
    std::fs::remove_file(&path).ok();
}

#[test]
fn expand_and_check_cover_round_trip() {
    let graph_path = scratch_path("cube.graph");
    let map_path = scratch_path("cube.map");
    let (code, out, _) = invoke(&[
        "expand",
        &instance("k4_cube_fig1.cover"),
        "-o",
        &graph_path,
        "--map",
        &map_path,
    ]);
    assert_eq!(code, exit_code::OK);
    assert!(out.contains("expansion written to"), "{out}");

    let base_path = scratch_path("k4.graph");
    std::fs::write(
        &base_path,
        "vertex a\nvertex b\nvertex c\nvertex d\n\
         edge a b\nedge b c\nedge c d\nedge d a\nedge a c\nedge b d\n",
    )
    .unwrap();

    let (code, out, _) = invoke(&["check-cover", &graph_path, &base_path, &map_path]);
    assert_eq!(code, exit_code::OK, "{out}");
    assert!(out.contains("covering map: valid"), "{out}");
    for v in ["a", "b", "c", "d"] {
        assert!(out.contains(&format!("fibre {v} = 2")), "{out}");
    }
    for p in [&graph_path, &map_path, &base_path] {
        std::fs::remove_file(p).ok();
    }
}

#[test]
fn expand_output_lists_fibres() {
    let (code, out, _) = invoke(&["expand", &instance("k3_fig2.cover")]);
    assert_eq!(code, exit_code::OK);
    assert!(out.contains("# fibre a: a:1 a:2 a:3"), "{out}");
    assert!(out.contains("vertex a:1"), "{out}");
    assert!(out.contains("# lift of a-b"), "{out}");
    // 9 lifted edges for the triangle at r = 3
    assert_eq!(out.matches("\nedge ").count(), 9, "{out}");
}

#[test]
fn check_cover_rejects_non_covers() {
    let cover_path = scratch_path("k2.graph");
    let base_path = scratch_path("loop.graph");
    let map_path = scratch_path("collapse.map");
    std::fs::write(&cover_path, "vertex x\nvertex y\nedge x y\n").unwrap();
    std::fs::write(&base_path, "vertex z\nedge z z\n").unwrap();
    std::fs::write(&map_path, "x z\ny z\n").unwrap();
    let (code, _, err) = invoke(&["check-cover", &cover_path, &base_path, &map_path]);
    assert_eq!(code, exit_code::VIOLATION);
    assert!(err.contains("covering map: INVALID"), "{err}");
    for p in [&cover_path, &base_path, &map_path] {
        std::fs::remove_file(p).ok();
    }
}

#[test]
fn ug_classification_and_ratio_parsing() {
    let (code, out, _) = invoke(&[
        "ug",
        &instance("k3_fig2.cover"),
        "--eps",
        "1/10",
        "--delta",
        "1/10",
    ]);
    assert_eq!(code, exit_code::OK);
    assert!(out.contains("max satisfied = 3 of 3 edges"), "{out}");
    assert!(out.contains("case (a), deg >= (1-1/10)|E|: yes"), "{out}");
    assert!(out.contains("case (b), deg <= 1/10|E|: no"), "{out}");

    let (code, _, err) = invoke(&["ug", &instance("k3_fig2.cover"), "--eps", "2", "--delta", "1/2"]);
    assert_eq!(code, exit_code::USAGE);
    assert!(err.contains("p/q"), "{err}");

    let (code, _, _) = invoke(&["ug", &instance("k3_fig2.cover"), "--eps", "3/2", "--delta", "1/2"]);
    assert_eq!(code, exit_code::USAGE);
}

#[test]
fn parse_diagnostics_reach_the_user() {
    let path = scratch_path("bad.cover");
    std::fs::write(&path, "r 3\nvertex a\nvertex b\nedge a b [2,2,1]\n").unwrap();
    let (code, _, err) = invoke(&["xi", &path]);
    assert_eq!(code, exit_code::INPUT);
    assert!(err.contains("line 4"), "{err}");
    assert!(err.contains("not a bijection"), "{err}");
    std::fs::remove_file(&path).ok();
}

#[test]
fn usage_paths() {
    let (code, _, err) = invoke(&[]);
    assert_eq!(code, exit_code::USAGE);
    assert!(err.contains("usage: covers"), "{err}");

    let (code, _, err) = invoke(&["frobnicate"]);
    assert_eq!(code, exit_code::USAGE);
    assert!(err.contains("unknown command"), "{err}");

    let (code, out, _) = invoke(&["help"]);
    assert_eq!(code, exit_code::OK);
    assert!(out.contains("usage: covers"), "{out}");
}
