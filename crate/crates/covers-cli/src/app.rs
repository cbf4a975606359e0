//! Command dispatch for the `covers` binary.
//!
//! Every command is a pure function from arguments and input files to text,
//! so integration tests drive [`run`] directly with byte buffers. Outputs are
//! deterministic; the only run-dependent field is the wall-clock entry behind
//! `--stats`.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io::Write;

use covers::analysis::{
    self, check_two_fold, congruence_report, tree_closed_form, ug_classify, Ratio,
};
use covers::cover::{fibre_sizes, validate_covering_map, CoverInstance};
use covers::engine::{self, xi_brute, xi_dc, EngineError, EngineStats, XiResult};
use covers::multigraph::VertexId;
use num_bigint::BigInt;

use crate::format::{GraphDocument, InstanceDocument, parse_vertex_map};

/// Stable exit codes; see the README table.
pub mod exit_code {
    pub const OK: i32 = 0;
    /// Command-line usage errors (unknown command, bad flags).
    pub const USAGE: i32 = 2;
    /// Unreadable files, malformed documents, invalid parameters.
    pub const INPUT: i32 = 3;
    /// Enumeration refused: transversal count above the budget.
    pub const BUDGET: i32 = 4;
    /// `xi --method both` found disagreeing polynomials.
    pub const MISMATCH: i32 = 5;
    /// A verify suite or covering-map check failed.
    pub const VIOLATION: i32 = 6;
    /// A suite's precondition does not hold (r ≠ 2, base not a tree).
    pub const PRECONDITION: i32 = 7;
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn new(code: i32, message: impl Into<String>) -> Failure {
        Failure {
            code,
            message: message.into(),
        }
    }
}

type CmdResult = Result<String, Failure>;

const USAGE: &str = "\
usage: covers <command> [args]

commands:
  xi <file> [--method brute|dc|both] [--stats]   transversal polynomial
  zeta <file>                                    bivariate refinement
  eval <file> --at <int>                         evaluate xi exactly
  verify <file> --suite congruence|twofold|tree|recurrence|all
  expand <file> [-o <graph-out>] [--map <map-out>]
  check-cover <cover-file> <base-file> <map-file>
  gen --n <n> --r <r> [--edges <e>] [--loops <l>] [--seed <s>] [-o <file>]
  ug <file> --eps <p/q> --delta <p/q>            unique-games classification
";

/// Runs one command line (without the binary name). Returns the exit code;
/// results go to `out`, diagnostics to `err`.
pub fn run(args: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let result = match args.first().map(String::as_str) {
        Some("xi") => cmd_xi(&args[1..]),
        Some("zeta") => cmd_zeta(&args[1..]),
        Some("eval") => cmd_eval(&args[1..]),
        Some("verify") => cmd_verify(&args[1..]),
        Some("expand") => cmd_expand(&args[1..]),
        Some("check-cover") => cmd_check_cover(&args[1..]),
        Some("gen") => cmd_gen(&args[1..]),
        Some("ug") => cmd_ug(&args[1..]),
        Some("help") | Some("--help") | Some("-h") => {
            let _ = out.write_all(USAGE.as_bytes());
            return exit_code::OK;
        }
        Some(other) => Err(Failure::new(
            exit_code::USAGE,
            format!("unknown command `{other}`\n{USAGE}"),
        )),
        None => Err(Failure::new(exit_code::USAGE, USAGE)),
    };
    match result {
        Ok(text) => {
            let _ = out.write_all(text.as_bytes());
            exit_code::OK
        }
        Err(failure) => {
            let _ = writeln!(err, "error: {}", failure.message.trim_end());
            failure.code
        }
    }
}

// ---- argument helpers ----------------------------------------------------

struct Args<'a> {
    positional: Vec<&'a str>,
    flags: BTreeMap<&'a str, Option<&'a str>>,
}

/// Splits arguments into positionals and flags. `value_flags` take a value,
/// `bool_flags` stand alone; anything else starting with a dash is rejected.
fn split_args<'a>(
    args: &'a [String],
    value_flags: &[&str],
    bool_flags: &[&str],
) -> Result<Args<'a>, Failure> {
    let mut positional = Vec::new();
    let mut flags = BTreeMap::new();
    let mut k = 0;
    while k < args.len() {
        let arg = args[k].as_str();
        if arg.starts_with('-') {
            if value_flags.contains(&arg) {
                let value = args
                    .get(k + 1)
                    .map(String::as_str)
                    .ok_or_else(|| Failure::new(exit_code::USAGE, format!("{arg} needs a value")))?;
                flags.insert(arg, Some(value));
                k += 2;
            } else if bool_flags.contains(&arg) {
                flags.insert(arg, None);
                k += 1;
            } else {
                return Err(Failure::new(exit_code::USAGE, format!("unknown flag `{arg}`")));
            }
        } else {
            positional.push(arg);
            k += 1;
        }
    }
    Ok(Args { positional, flags })
}

fn load_instance(path: &str) -> Result<(CoverInstance, Vec<String>), Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::new(exit_code::INPUT, format!("cannot read {path}: {e}")))?;
    let doc = InstanceDocument::parse(&text)
        .map_err(|e| Failure::new(exit_code::INPUT, format!("{path}: {e}")))?;
    doc.to_cover()
        .map_err(|e| Failure::new(exit_code::INPUT, format!("{path}: {e}")))
}

fn engine_failure(e: EngineError) -> Failure {
    let code = match e {
        EngineError::BudgetExceeded { .. } => exit_code::BUDGET,
        _ => exit_code::INPUT,
    };
    Failure::new(code, e.to_string())
}

fn describe(c: &CoverInstance) -> String {
    format!(
        "instance: {} vertices, {} edges, r = {}\n",
        c.vertex_count(),
        c.edge_count(),
        c.r()
    )
}

fn polynomial_block(poly: &covers::IntPolynomial) -> String {
    let degree = poly
        .degree()
        .map_or_else(|| "-inf".to_string(), |d| d.to_string());
    format!(
        "xi coefficients = {}\nxi = {}\ndegree = {}\nconstant term = {}\n",
        poly.coeff_list(),
        poly,
        degree,
        poly.constant_term()
    )
}

fn stats_line(label: &str, stats: &EngineStats) -> String {
    format!(
        "stats {label}: nodes={} leaves={} max-depth={} wall-us={}\n",
        stats.nodes,
        stats.leaves,
        stats.max_depth,
        stats.wall.as_micros()
    )
}

// ---- xi -------------------------------------------------------------------

fn cmd_xi(args: &[String]) -> CmdResult {
    let parsed = split_args(args, &["--method"], &["--stats"])?;
    let [path] = parsed.positional.as_slice() else {
        return Err(Failure::new(exit_code::USAGE, "xi needs exactly one instance file"));
    };
    let method = parsed.flags.get("--method").copied().flatten().unwrap_or("dc");
    let with_stats = parsed.flags.contains_key("--stats");
    let (cover, _) = load_instance(path)?;

    let mut text = describe(&cover);
    let mut results: Vec<(&str, XiResult)> = Vec::new();
    match method {
        "dc" => results.push(("dc", xi_dc(&cover))),
        "brute" => results.push(("brute", xi_brute(&cover).map_err(engine_failure)?)),
        "both" => {
            results.push(("dc", xi_dc(&cover)));
            results.push(("brute", xi_brute(&cover).map_err(engine_failure)?));
        }
        other => {
            return Err(Failure::new(
                exit_code::USAGE,
                format!("unknown method `{other}` (want brute, dc or both)"),
            ))
        }
    }

    if method == "both" {
        let agree = results[0].1.poly == results[1].1.poly;
        if !agree {
            for (label, result) in &results {
                let _ = writeln!(text, "method {label}: {}", result.poly.coeff_list());
            }
            text.push_str("methods agree: NO\n");
            return Err(Failure::new(exit_code::MISMATCH, text));
        }
        text.push_str(&polynomial_block(&results[0].1.poly));
        text.push_str("methods agree: yes\n");
    } else {
        text.push_str(&polynomial_block(&results[0].1.poly));
    }
    if with_stats {
        for (label, result) in &results {
            text.push_str(&stats_line(label, &result.stats));
        }
    }
    Ok(text)
}

// ---- zeta -----------------------------------------------------------------

fn cmd_zeta(args: &[String]) -> CmdResult {
    let parsed = split_args(args, &[], &[])?;
    let [path] = parsed.positional.as_slice() else {
        return Err(Failure::new(exit_code::USAGE, "zeta needs exactly one instance file"));
    };
    let (cover, _) = load_instance(path)?;
    let zeta = engine::zeta_brute(&cover).map_err(engine_failure)?;
    let mut text = describe(&cover);
    text.push_str("zeta terms (t-power s-power coefficient):\n");
    for (t, s, c) in zeta.terms() {
        let _ = writeln!(text, "{t} {s} {c}");
    }
    let _ = writeln!(text, "zeta = {zeta}");
    Ok(text)
}

// ---- eval -----------------------------------------------------------------

fn cmd_eval(args: &[String]) -> CmdResult {
    let parsed = split_args(args, &["--at"], &[])?;
    let [path] = parsed.positional.as_slice() else {
        return Err(Failure::new(exit_code::USAGE, "eval needs exactly one instance file"));
    };
    let at_text = parsed
        .flags
        .get("--at")
        .copied()
        .flatten()
        .ok_or_else(|| Failure::new(exit_code::USAGE, "eval needs --at <int>"))?;
    let at: BigInt = at_text
        .parse()
        .map_err(|_| Failure::new(exit_code::USAGE, format!("--at wants an integer, got `{at_text}`")))?;
    let (cover, _) = load_instance(path)?;
    let xi = xi_dc(&cover).poly;
    let mut text = describe(&cover);
    let _ = writeln!(text, "xi = {xi}");
    let _ = writeln!(text, "xi({at}) = {}", xi.eval(&at));
    Ok(text)
}

// ---- verify ---------------------------------------------------------------

fn cmd_verify(args: &[String]) -> CmdResult {
    let parsed = split_args(args, &["--suite"], &[])?;
    let [path] = parsed.positional.as_slice() else {
        return Err(Failure::new(exit_code::USAGE, "verify needs exactly one instance file"));
    };
    let suite = parsed.flags.get("--suite").copied().flatten().unwrap_or("all");
    let (cover, _) = load_instance(path)?;

    let mut text = describe(&cover);
    match suite {
        "congruence" => {
            let body = suite_congruence(&cover).map_err(|f| prefixed(f, &text))?;
            text.push_str(&body);
        }
        "twofold" => {
            let body = suite_twofold(&cover).map_err(|f| prefixed(f, &text))?;
            text.push_str(&body);
        }
        "tree" => {
            let body = suite_tree(&cover).map_err(|f| prefixed(f, &text))?;
            text.push_str(&body);
        }
        "recurrence" => {
            let body = suite_recurrence(&cover).map_err(|f| prefixed(f, &text))?;
            text.push_str(&body);
        }
        "all" => {
            let mut violation = false;
            for (name, applicable) in [
                ("congruence", true),
                ("recurrence", true),
                ("twofold", cover.r() == 2),
                ("tree", cover.base().is_tree()),
            ] {
                if !applicable {
                    let _ = writeln!(text, "SKIP {name} (precondition not met)");
                    continue;
                }
                let outcome = match name {
                    "congruence" => suite_congruence(&cover),
                    "recurrence" => suite_recurrence(&cover),
                    "twofold" => suite_twofold(&cover),
                    _ => suite_tree(&cover),
                };
                match outcome {
                    Ok(body) => text.push_str(&body),
                    Err(failure) if failure.code == exit_code::VIOLATION => {
                        text.push_str(&failure.message);
                        violation = true;
                    }
                    Err(failure) => return Err(prefixed(failure, &text)),
                }
            }
            if violation {
                return Err(Failure::new(exit_code::VIOLATION, text));
            }
        }
        other => {
            return Err(Failure::new(
                exit_code::USAGE,
                format!("unknown suite `{other}` (want congruence, twofold, tree, recurrence or all)"),
            ))
        }
    }
    Ok(text)
}

fn prefixed(failure: Failure, context: &str) -> Failure {
    Failure::new(failure.code, format!("{context}{}", failure.message))
}

fn suite_congruence(c: &CoverInstance) -> CmdResult {
    let xi = xi_dc(c).poly;
    let report = congruence_report(&xi, c.vertex_count(), c.r());
    let mut text = String::new();
    let at = -BigInt::from(c.r() - 1);
    let _ = writeln!(text, "xi({at}) = {}", report.value);
    let _ = writeln!(text, "modulus r^n = {}", report.modulus);
    match &report.quotient {
        Some(q) => {
            let _ = writeln!(text, "divisible: yes (quotient {q})");
        }
        None => {
            let _ = writeln!(text, "divisible: NO");
        }
    }
    let _ = writeln!(
        text,
        "constant term zero: {}",
        if report.constant_term_zero { "yes" } else { "no" }
    );
    if let Some(extended) = report.extended_modulus_holds {
        let strengthened = &report.modulus * BigInt::from(c.r() - 1);
        let _ = writeln!(text, "extended modulus r^n(r-1) = {strengthened}");
        let _ = writeln!(text, "extended divisible: {}", if extended { "yes" } else { "NO" });
        if !extended {
            text.push_str("FAIL congruence\n");
            return Err(Failure::new(exit_code::VIOLATION, text));
        }
    }
    if report.holds {
        text.push_str("PASS congruence\n");
        Ok(text)
    } else {
        text.push_str("FAIL congruence\n");
        Err(Failure::new(exit_code::VIOLATION, text))
    }
}

fn suite_twofold(c: &CoverInstance) -> CmdResult {
    let report = check_two_fold(c).map_err(|e| Failure::new(exit_code::PRECONDITION, e.to_string()))?;
    let mut text = String::new();
    let _ = writeln!(
        text,
        "eulerian (all valencies even): {}",
        if report.eulerian { "yes" } else { "no" }
    );
    let _ = writeln!(text, "xi(-1) = {}", report.value);
    let _ = writeln!(text, "class: {}", report.class);
    if report.consistent {
        text.push_str("PASS twofold\n");
        Ok(text)
    } else {
        text.push_str("FAIL twofold\n");
        Err(Failure::new(exit_code::VIOLATION, text))
    }
}

fn suite_tree(c: &CoverInstance) -> CmdResult {
    if !c.base().is_tree() {
        return Err(Failure::new(
            exit_code::PRECONDITION,
            "tree suite needs a tree base (connected, loop-free, |E| = n-1)",
        ));
    }
    let expected = tree_closed_form(c.vertex_count(), c.r());
    let got = xi_dc(c).poly;
    let mut text = String::new();
    let _ = writeln!(text, "closed form = {}", expected.coeff_list());
    let _ = writeln!(text, "computed    = {}", got.coeff_list());
    if got == expected {
        text.push_str("PASS tree\n");
        Ok(text)
    } else {
        text.push_str("FAIL tree\n");
        Err(Failure::new(exit_code::VIOLATION, text))
    }
}

fn suite_recurrence(c: &CoverInstance) -> CmdResult {
    let whole = xi_brute(c).map_err(engine_failure)?.poly;
    let mut checked = 0;
    let mut text = String::new();
    for rec in c.base().edges() {
        if rec.is_loop() {
            continue;
        }
        let contracted = xi_brute(&c.contract(rec.id).expect("non-loop edge"))
            .map_err(engine_failure)?
            .poly;
        let deleted = xi_brute(&c.delete(rec.id).expect("edge exists"))
            .map_err(engine_failure)?
            .poly;
        let combined = contracted.mul_t_minus_one().add(&deleted);
        if combined != whole {
            let _ = writeln!(
                text,
                "edge {}: (t-1)*xi(contract) + xi(delete) = {} but xi = {}",
                rec.id,
                combined.coeff_list(),
                whole.coeff_list()
            );
            text.push_str("FAIL recurrence\n");
            return Err(Failure::new(exit_code::VIOLATION, text));
        }
        checked += 1;
    }
    let _ = writeln!(text, "recurrence verified on {checked} non-loop edges (oracle both sides)");
    text.push_str("PASS recurrence\n");
    Ok(text)
}

// ---- expand ----------------------------------------------------------------

fn cmd_expand(args: &[String]) -> CmdResult {
    let parsed = split_args(args, &["-o", "--map"], &[])?;
    let [path] = parsed.positional.as_slice() else {
        return Err(Failure::new(exit_code::USAGE, "expand needs exactly one instance file"));
    };
    let (cover, labels) = load_instance(path)?;
    let x = cover.expand();

    let name_of = |v: VertexId| -> String {
        let (bv, i) = x.label(v);
        format!("{}:{}", labels[bv.0 as usize], i)
    };

    let mut graph_text = String::new();
    let _ = writeln!(
        graph_text,
        "# expansion: r = {}, {} base vertices, {} base edges",
        cover.r(),
        cover.vertex_count(),
        cover.edge_count()
    );
    for (bv, label) in cover.base().vertices().iter().zip(&labels) {
        let fibre: Vec<String> = x.fibre(*bv).into_iter().map(&name_of).collect();
        let _ = writeln!(graph_text, "# fibre {label}: {}", fibre.join(" "));
    }
    for &bv in cover.base().vertices() {
        for v in x.fibre(bv) {
            let _ = writeln!(graph_text, "vertex {}", name_of(v));
        }
    }
    for rec in x.graph().edges() {
        let origin = cover.base().edge(x.origin_of(rec.id)).expect("origin exists");
        let _ = writeln!(
            graph_text,
            "edge {} {}  # lift of {}-{}",
            name_of(rec.tail),
            name_of(rec.head),
            labels[origin.tail.0 as usize],
            labels[origin.head.0 as usize]
        );
    }

    if let Some(map_path) = parsed.flags.get("--map").copied().flatten() {
        let mut map_text = String::new();
        for &v in x.graph().vertices() {
            let (bv, _) = x.label(v);
            let _ = writeln!(map_text, "{} {}", name_of(v), labels[bv.0 as usize]);
        }
        std::fs::write(map_path, map_text)
            .map_err(|e| Failure::new(exit_code::INPUT, format!("cannot write {map_path}: {e}")))?;
    }
    if let Some(out_path) = parsed.flags.get("-o").copied().flatten() {
        std::fs::write(out_path, &graph_text)
            .map_err(|e| Failure::new(exit_code::INPUT, format!("cannot write {out_path}: {e}")))?;
        Ok(format!("expansion written to {out_path}\n"))
    } else {
        Ok(graph_text)
    }
}

// ---- check-cover ------------------------------------------------------------

fn cmd_check_cover(args: &[String]) -> CmdResult {
    let parsed = split_args(args, &[], &[])?;
    let [cover_path, base_path, map_path] = parsed.positional.as_slice() else {
        return Err(Failure::new(
            exit_code::USAGE,
            "check-cover needs <cover-file> <base-file> <map-file>",
        ));
    };
    let read = |p: &str| {
        std::fs::read_to_string(p)
            .map_err(|e| Failure::new(exit_code::INPUT, format!("cannot read {p}: {e}")))
    };
    let cover_doc = GraphDocument::parse(&read(cover_path)?)
        .map_err(|e| Failure::new(exit_code::INPUT, format!("{cover_path}: {e}")))?;
    let base_doc = GraphDocument::parse(&read(base_path)?)
        .map_err(|e| Failure::new(exit_code::INPUT, format!("{base_path}: {e}")))?;
    let pairs = parse_vertex_map(&read(map_path)?)
        .map_err(|e| Failure::new(exit_code::INPUT, format!("{map_path}: {e}")))?;

    let (cover_graph, cover_labels) = cover_doc.to_multigraph();
    let (base_graph, base_labels) = base_doc.to_multigraph();
    let cover_index: BTreeMap<&str, VertexId> = cover_labels
        .iter()
        .enumerate()
        .map(|(k, l)| (l.as_str(), VertexId(k as u32)))
        .collect();
    let base_index: BTreeMap<&str, VertexId> = base_labels
        .iter()
        .enumerate()
        .map(|(k, l)| (l.as_str(), VertexId(k as u32)))
        .collect();

    let mut h = BTreeMap::new();
    for (cl, bl) in &pairs {
        let &cv = cover_index.get(cl.as_str()).ok_or_else(|| {
            Failure::new(exit_code::INPUT, format!("{map_path}: unknown cover vertex `{cl}`"))
        })?;
        let &bv = base_index.get(bl.as_str()).ok_or_else(|| {
            Failure::new(exit_code::INPUT, format!("{map_path}: unknown base vertex `{bl}`"))
        })?;
        h.insert(cv, bv);
    }

    let check = validate_covering_map(&cover_graph, &base_graph, &h);
    let mut text = String::new();
    if check.ok {
        text.push_str("covering map: valid\n");
        let sizes = fibre_sizes(&cover_graph, &base_graph, &h)
            .map_err(|e| Failure::new(exit_code::VIOLATION, e.to_string()))?;
        for (bv, size) in sizes {
            let _ = writeln!(text, "fibre {} = {size}", base_labels[bv.0 as usize]);
        }
        Ok(text)
    } else {
        text.push_str("covering map: INVALID\n");
        for failure in &check.failures {
            let _ = writeln!(text, "  {failure}");
        }
        Err(Failure::new(exit_code::VIOLATION, text))
    }
}

// ---- gen ---------------------------------------------------------------------

fn cmd_gen(args: &[String]) -> CmdResult {
    let parsed = split_args(args, &["--n", "--r", "--edges", "--loops", "--seed", "-o"], &[])?;
    if !parsed.positional.is_empty() {
        return Err(Failure::new(exit_code::USAGE, "gen takes only flags"));
    }
    let number = |name: &str, default: Option<u64>| -> Result<u64, Failure> {
        match parsed.flags.get(name).copied().flatten() {
            Some(text) => text
                .parse::<u64>()
                .map_err(|_| Failure::new(exit_code::USAGE, format!("{name} wants an integer, got `{text}`"))),
            None => default.ok_or_else(|| Failure::new(exit_code::USAGE, format!("{name} is required"))),
        }
    };
    let n = number("--n", None)? as u32;
    let r = number("--r", None)? as u32;
    let edges = number("--edges", Some(0))? as u32;
    let loops = number("--loops", Some(0))? as u32;
    let seed = number("--seed", Some(0))?;

    let cover = analysis::generate_random(n, r, edges, loops, seed)
        .map_err(|e| Failure::new(exit_code::INPUT, e.to_string()))?;
    let width = (n.max(1) - 1).to_string().len();
    let labels: Vec<String> = (0..n).map(|k| format!("v{k:0width$}")).collect();
    let doc = InstanceDocument::from_cover(&cover, &labels);
    let mut text = format!("# generated: n={n} r={r} edges={edges} loops={loops} seed={seed}\n");
    text.push_str(&doc.canonical());

    if let Some(out_path) = parsed.flags.get("-o").copied().flatten() {
        std::fs::write(out_path, &text)
            .map_err(|e| Failure::new(exit_code::INPUT, format!("cannot write {out_path}: {e}")))?;
        Ok(format!("instance written to {out_path}\n"))
    } else {
        Ok(text)
    }
}

// ---- ug ----------------------------------------------------------------------

fn cmd_ug(args: &[String]) -> CmdResult {
    let parsed = split_args(args, &["--eps", "--delta"], &[])?;
    let [path] = parsed.positional.as_slice() else {
        return Err(Failure::new(exit_code::USAGE, "ug needs exactly one instance file"));
    };
    let ratio = |name: &str| -> Result<Ratio, Failure> {
        let text = parsed
            .flags
            .get(name)
            .copied()
            .flatten()
            .ok_or_else(|| Failure::new(exit_code::USAGE, format!("{name} is required (p/q)")))?;
        let (p, q) = text
            .split_once('/')
            .ok_or_else(|| Failure::new(exit_code::USAGE, format!("{name} wants p/q, got `{text}`")))?;
        let parse = |s: &str| {
            s.parse::<u64>()
                .map_err(|_| Failure::new(exit_code::USAGE, format!("{name} wants p/q, got `{text}`")))
        };
        Ratio::new(parse(p)?, parse(q)?)
            .map_err(|e| Failure::new(exit_code::USAGE, e.to_string()))
    };
    let eps = ratio("--eps")?;
    let delta = ratio("--delta")?;
    let (cover, _) = load_instance(path)?;
    let report = ug_classify(&cover, eps, delta);

    let mut text = describe(&cover);
    let _ = writeln!(
        text,
        "max satisfied = {} of {} edges",
        report.max_satisfied, report.total_edges
    );
    let _ = writeln!(
        text,
        "case (a), deg >= (1-{eps})|E|: {}",
        if report.case_a { "yes" } else { "no" }
    );
    let _ = writeln!(
        text,
        "case (b), deg <= {delta}|E|: {}",
        if report.case_b { "yes" } else { "no" }
    );
    Ok(text)
}
