use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use edgeblocks::distinguish::NestedMember;
use edgeblocks::generation::default_k_max;
use edgeblocks::oracle::{brute_blocks, brute_efficient_distinguishers, brute_lambda};
use edgeblocks::treecut::verify_k_block_decomposition;
use edgeblocks::{
    block_hierarchy, build_nested_set_with, build_tree_cut, check_equivalence, efficient_distinguishers, lambda,
    load_graph, Error, Level, Multigraph, DEFAULT_ENUMERATION_CAP,
};
use serde_json::{json, Value};

/// Edge-block decompositions, nested bond sets and tree-cut decompositions
/// of finite multigraphs.
#[derive(Debug, Parser)]
#[command(name = "edgeblocks", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// The k-edge-blocks for every k.
    Blocks(RunConfig),
    /// A nested set of bonds distinguishing all edge-blocks efficiently.
    Nested(RunConfig),
    /// The tree-cut decomposition of the members of order below k.
    Treecut(RunConfig),
    /// Check that the nested set distinguishes efficiently and generates all cuts.
    Verify(RunConfig),
    /// Compare fast paths with brute-force oracles (at most 16 vertices).
    OracleCheck(RunConfig),
}

#[derive(Debug, Args)]
struct RunConfig {
    /// Graph document (JSON).
    #[arg(long)]
    input: PathBuf,
    /// Connectivity level; must be at least 1.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    k: Option<u64>,
    /// Root vertex of the decomposition tree.
    #[arg(long, default_value_t = 0)]
    root: usize,
    /// Abort when a minimum-cut enumeration exceeds this many separations.
    #[arg(long, default_value_t = DEFAULT_ENUMERATION_CAP)]
    cap: usize,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Text,
}

enum Failure {
    Config(String),
    Core(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

/// A rendered report and whether every check in it passed.
struct Report {
    body: String,
    passed: bool,
}

impl Report {
    fn ok(body: String) -> Self {
        Report { body, passed: true }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let config = match &cli.command {
        Command::Blocks(c) | Command::Nested(c) | Command::Treecut(c) | Command::Verify(c) | Command::OracleCheck(c) => c,
    };
    let result = load(config).and_then(|g| match &cli.command {
        Command::Blocks(c) => blocks(&g, c),
        Command::Nested(c) => nested(&g, c),
        Command::Treecut(c) => treecut(&g, c),
        Command::Verify(c) => verify(&g, c),
        Command::OracleCheck(c) => oracle_check(&g, c),
    });
    let report = match result {
        Ok(r) => r,
        Err(Failure::Config(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
        Err(Failure::Core(e)) => {
            eprintln!("error: {e}");
            return ExitCode::from(if e.is_internal() { 3 } else { 2 });
        }
    };
    let written = match &config.output {
        Some(path) => std::fs::write(path, &report.body).map_err(|e| format!("{}: {e}", path.display())),
        None => {
            print!("{}", report.body);
            Ok(())
        }
    };
    if let Err(msg) = written {
        eprintln!("error: {msg}");
        return ExitCode::from(2);
    }
    if report.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn load(c: &RunConfig) -> Result<Multigraph, Failure> {
    let text = std::fs::read_to_string(&c.input).map_err(|e| Failure::Config(format!("{}: {e}", c.input.display())))?;
    let g = load_graph(&text)?;
    g.ensure_connected()?;
    Ok(g)
}

fn no_dot(c: &RunConfig, command: &str) -> Result<(), Failure> {
    if c.format == Format::Dot {
        return Err(Failure::Config(format!("{command} has no DOT output")));
    }
    Ok(())
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("reports serialize");
    s.push('\n');
    s
}

fn level_text(l: Level) -> String {
    match l {
        Level::Finite(k) => k.to_string(),
        Level::Unbounded => "inf".into(),
    }
}

fn blocks(g: &Multigraph, c: &RunConfig) -> Result<Report, Failure> {
    let h = block_hierarchy(g)?;
    let ks: Vec<u64> = match c.k {
        Some(k) => vec![k],
        None => (1..=h.max_level() + 1).collect(),
    };
    let mut levels = Vec::new();
    for &k in &ks {
        levels.push((k, h.k_blocks(k)?));
    }
    let body = match c.format {
        Format::Json => pretty(&json!({
            "vertices": g.vertex_count(),
            "hierarchy": h.to_json(),
            "levels": levels.iter().map(|(k, b)| json!({"k": k, "blocks": b})).collect::<Vec<_>>(),
        })),
        Format::Text => {
            let mut out = String::new();
            for (k, bs) in &levels {
                let sets: Vec<String> = bs.iter().map(|b| b.to_string()).collect();
                let _ = writeln!(out, "k={k}: {}", sets.join(" "));
            }
            out
        }
        Format::Dot => {
            let mut out = String::from("digraph blocks {\n  node [shape=box];\n");
            for (i, b) in h.blocks().iter().enumerate() {
                let names: Vec<String> = b.set.iter().map(|v| g.display_vertex(v)).collect();
                let _ = writeln!(
                    out,
                    "  b{i} [label=\"{{{}}}\\nk={}..{}\"];",
                    names.join(","),
                    b.k_lo,
                    level_text(b.k_hi)
                );
            }
            for (i, b) in h.blocks().iter().enumerate() {
                if let Some(p) = b.parent {
                    let _ = writeln!(out, "  b{p} -> b{i};");
                }
            }
            out.push_str("}\n");
            out
        }
    };
    Ok(Report::ok(body))
}

fn restricted(members: &[NestedMember], k: Option<u64>) -> Vec<&NestedMember> {
    members.iter().filter(|m| k.is_none_or(|k| m.separation.order() < k)).collect()
}

fn nested(g: &Multigraph, c: &RunConfig) -> Result<Report, Failure> {
    no_dot(c, "nested")?;
    let built = build_nested_set_with(g, c.cap)?;
    let members = restricted(built.nested.members(), c.k);
    let body = match c.format {
        Format::Text => {
            let mut out = String::new();
            for m in &members {
                let _ = writeln!(out, "order {}  {}  serves {} pair(s)", m.separation.order(), m.separation, m.distinguishes.len());
            }
            out
        }
        _ => pretty(&json!({
            "below": c.k,
            "repair_count": built.nested.repair_count(),
            "members": members,
        })),
    };
    Ok(Report::ok(body))
}

fn treecut(g: &Multigraph, c: &RunConfig) -> Result<Report, Failure> {
    let built = build_nested_set_with(g, c.cap)?;
    let set = match c.k {
        Some(k) => built.nested.below(k),
        None => built.nested.separations(),
    };
    let d = build_tree_cut(g, &set, c.root)?;
    d.check(g)?;
    let check = c.k.map(|k| verify_k_block_decomposition(g, &d, k)).transpose()?;
    let passed = check.as_ref().is_none_or(|r| r.passed);
    let body = match c.format {
        Format::Dot => d.to_dot(g),
        Format::Json => pretty(&json!({
            "k": c.k,
            "root": c.root,
            "decomposition": d.to_json(),
            "k_block_check": check,
        })),
        Format::Text => {
            let mut out = String::new();
            for (t, node) in d.nodes().iter().enumerate() {
                let parent = node.parent.map_or("-".to_string(), |p| p.to_string());
                let _ = writeln!(out, "node {t} parent {parent} part {}", node.part);
            }
            for e in d.edges() {
                let _ = writeln!(out, "edge {}-{} order {} cut {}", e.parent, e.child, e.separation.order(), e.separation);
            }
            if let Some(r) = &check {
                let _ = writeln!(out, "k-blocks at k={}: {}", r.k, if r.passed { "match" } else { "MISMATCH" });
            }
            out
        }
    };
    Ok(Report { body, passed })
}

fn verify(g: &Multigraph, c: &RunConfig) -> Result<Report, Failure> {
    no_dot(c, "verify")?;
    let built = build_nested_set_with(g, c.cap)?;
    let k_max = match c.k {
        Some(k) => k,
        None => default_k_max(g)?,
    };
    let r = check_equivalence(g, &built.nested.separations(), k_max)?;
    let passed = r.passed() && r.equivalent;
    let body = match c.format {
        Format::Text => {
            let d = &r.distinguishing;
            let mut out = String::new();
            let _ = writeln!(out, "members: {}", built.nested.len());
            let _ = writeln!(out, "nested: {}  bonds: {}  distinguishing: {}  efficient: {}", d.nested, d.bonds, d.distinguishing, d.efficient);
            for l in &r.levels {
                let _ = writeln!(out, "k={}: {}/{} cuts generated", l.k, l.generated, l.cuts);
            }
            let _ = writeln!(out, "witnesses replay: {}", r.witnesses_replay);
            let _ = writeln!(out, "verdict: {}", if passed { "PASS" } else { "FAIL" });
            out
        }
        _ => pretty(&json!({ "passed": passed, "report": r })),
    };
    Ok(Report { body, passed })
}

fn oracle_check(g: &Multigraph, c: &RunConfig) -> Result<Report, Failure> {
    no_dot(c, "oracle-check")?;
    let n = g.vertex_count();
    let h = block_hierarchy(g)?;
    let mut mismatches: Vec<String> = Vec::new();
    let mut queries = 0;
    for u in 0..n {
        for v in u + 1..n {
            let (fast, brute) = (lambda(g, u, v)?, brute_lambda(g, u, v)?);
            if fast != brute {
                mismatches.push(format!("lambda({u},{v}): {fast} vs {brute}"));
            }
            queries += 1;
        }
    }
    let levels = h.max_level() + 1;
    for k in 1..=levels {
        if h.k_blocks(k)? != brute_blocks(g, k)? {
            mismatches.push(format!("k-blocks at k={k}"));
        }
    }
    let pairs = h.block_pairs()?;
    for pair in &pairs {
        let fast = efficient_distinguishers(g, pair, c.cap)?;
        if fast != brute_efficient_distinguishers(g, &pair.first, &pair.second)? {
            mismatches.push(format!("efficient distinguishers of {pair}"));
        }
    }
    let passed = mismatches.is_empty();
    let body = match c.format {
        Format::Text => {
            let mut out = format!("{queries} lambda queries, {levels} levels, {} block pairs\n", pairs.len());
            for m in &mismatches {
                let _ = writeln!(out, "mismatch: {m}");
            }
            let _ = writeln!(out, "verdict: {}", if passed { "PASS" } else { "FAIL" });
            out
        }
        _ => pretty(&json!({
            "passed": passed,
            "lambda_queries": queries,
            "levels": levels,
            "block_pairs": pairs.len(),
            "mismatches": mismatches,
        })),
    };
    Ok(Report { body, passed })
}
