//! `chromacore` command line. Exit codes: 0 success, 1 counterexample found
//! by `verify`, 2 input or usage error, 3 solver capability exceeded.

use std::io::Write;
use std::path::Path;

use clap::{Parser, Subcommand};
use serde_json::json;

use crate::coloring::chromatic_number;
use crate::corefinder::{oracle_core, CoreFinder, DEFAULT_SEARCH_LIMIT};
use crate::error::{Error, Result};
use crate::families::{jaco_graph, petersen, FamilySpec, JacoSpec};
use crate::graph::Graph;
use crate::harness::claims::{claim_ids, registry, verify_all, verify_claim, Limits, SEARCH_LIMIT_ENV};
use crate::harness::edgelist::parse_edge_list;
use crate::harness::graph6::{emit_graph6, parse_graph6};
use crate::products::ProductKind;

pub const EXIT_OK: i32 = 0;
pub const EXIT_COUNTEREXAMPLE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_CAPABILITY: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "chromacore", version, about = "Chromatic cores, exact colouring and claim verification for small graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Chromatic number with a witness colouring.
    Chi {
        /// graph6, edge-list file, family token or expression such as `strong(cycle:5,cycle:5)`
        graph: String,
    },
    /// Minimum-structor-index chromatic core.
    Core {
        graph: String,
        /// Every minimum core instead of the lexicographically first.
        #[arg(long)]
        all: bool,
        /// Exhaustive subset sweep (order at most 10).
        #[arg(long)]
        oracle: bool,
        /// Largest component searched exactly.
        #[arg(long)]
        search_limit: Option<usize>,
    },
    /// Check a registered claim (or `all`) and print its JSON report.
    Verify {
        claim: String,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Corpus/solver bound as key=value (order, search, trees).
        #[arg(long = "limit", value_name = "KEY=VALUE")]
        limits: Vec<String>,
        /// Include wall-clock runtime (makes output nondeterministic).
        #[arg(long)]
        timing: bool,
    },
    /// Print a family member as graph6.
    Gen { spec: String },
    /// List registered claim ids.
    Claims,
}

/// Runs the CLI on `argv` (including the program name).
pub fn run_cli<I, S>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { write!(err, "{text}") } else { write!(out, "{text}") };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if e.is_capability() {
                EXIT_CAPABILITY
            } else {
                EXIT_INPUT
            }
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Chi { graph } => {
            let g = parse_graph_arg(&graph)?;
            let r = chromatic_number(&g)?;
            let v = json!({ "order": g.order(), "size": g.size(), "chi": r.chi, "coloring": r.witness, "clique": r.clique });
            writeln!(out, "{v}")?;
        }
        Command::Core { graph, all, oracle, search_limit } => {
            let g = parse_graph_arg(&graph)?;
            let value = if oracle {
                let o = oracle_core(&g)?;
                if all {
                    let certs: Vec<_> = o.argmin.iter().map(|&s| crate::corefinder::CoreCertificate { vertices: s, ..o.certificate(&g) }).collect();
                    serde_json::to_value(certs)
                } else {
                    serde_json::to_value(o.certificate(&g))
                }
            } else {
                let limit = match search_limit {
                    Some(l) => l,
                    None => default_search_limit()?,
                };
                let finder = CoreFinder::new(limit);
                if all {
                    serde_json::to_value(finder.enumerate_cores(&g)?)
                } else {
                    serde_json::to_value(finder.find_core(&g)?)
                }
            };
            writeln!(out, "{}", value.expect("certificates serialize"))?;
        }
        Command::Verify { claim, seed, limits: assignments, timing } => {
            let mut limits = Limits::from_env()?;
            for a in &assignments {
                limits.apply(a)?;
            }
            let mut reports = if claim == "all" { verify_all(seed, &limits)? } else { vec![verify_claim(&claim, seed, &limits)?] };
            if !timing {
                for r in &mut reports {
                    r.runtime_ms = None;
                }
            }
            let found = reports.iter().any(|r| !r.counterexamples.is_empty());
            let text = if claim == "all" {
                serde_json::to_string_pretty(&reports)
            } else {
                serde_json::to_string_pretty(&reports[0])
            };
            writeln!(out, "{}", text.expect("reports serialize"))?;
            return Ok(if found { EXIT_COUNTEREXAMPLE } else { EXIT_OK });
        }
        Command::Gen { spec } => {
            let g = parse_named(&spec)?;
            writeln!(out, "{}", emit_graph6(&g)?)?;
        }
        Command::Claims => {
            for c in registry() {
                let status = serde_json::to_value(c.status).expect("status serializes");
                writeln!(out, "{:<22} {:<10} {}", c.id, status.as_str().unwrap_or(""), c.description)?;
            }
            debug_assert_eq!(claim_ids().len(), registry().len());
        }
    }
    Ok(EXIT_OK)
}

fn default_search_limit() -> Result<usize> {
    match std::env::var(SEARCH_LIMIT_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Error::InvalidParameter(format!("{SEARCH_LIMIT_ENV} must be an integer, got `{v}`"))),
        Err(_) => Ok(DEFAULT_SEARCH_LIMIT),
    }
}

/// A family token, `jaco:n,m,c` or `petersen`.
fn parse_named(token: &str) -> Result<Graph> {
    let token = token.trim();
    if token == "petersen" {
        return Ok(petersen());
    }
    if token.starts_with("jaco:") {
        return jaco_graph(token.parse::<JacoSpec>()?);
    }
    token.parse::<FamilySpec>()?.generate()
}

/// Graph argument: an existing file (edge list, or graph6 on the first
/// line), an expression `op(a[,b])`, a family token, or a graph6 string.
pub fn parse_graph_arg(arg: &str) -> Result<Graph> {
    let arg = arg.trim();
    let path = Path::new(arg);
    if path.is_file() {
        let text = std::fs::read_to_string(path)?;
        return parse_file_contents(&text);
    }
    if let Some(open) = arg.find('(') {
        if !arg.ends_with(')') {
            return Err(Error::InvalidParameter(format!("unbalanced expression `{arg}`")));
        }
        let op = &arg[..open];
        let args = split_args(&arg[open + 1..arg.len() - 1])?;
        let graphs: Vec<Graph> = args.iter().map(|a| parse_graph_arg(a)).collect::<Result<_>>()?;
        let unary = |f: fn(&Graph) -> Result<Graph>| -> Result<Graph> {
            match graphs.as_slice() {
                [g] => f(g),
                _ => Err(Error::InvalidParameter(format!("`{op}` takes one graph"))),
            }
        };
        return match op {
            "complement" => unary(|g| Ok(g.complement())),
            "mycielski" => unary(|g| g.mycielski()),
            "line" => unary(|g| g.line_graph()),
            _ => {
                let kind: ProductKind = op.parse()?;
                match graphs.as_slice() {
                    [g, h] => kind.apply(g, h),
                    _ => Err(Error::InvalidParameter(format!("`{op}` takes two graphs"))),
                }
            }
        };
    }
    if arg.contains(':') || arg == "petersen" {
        return parse_named(arg);
    }
    parse_graph6(arg)
}

fn parse_file_contents(text: &str) -> Result<Graph> {
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        .ok_or(Error::EdgeList { line: 1, reason: "empty file".into() })?;
    if first.split_whitespace().count() == 2 && first.split_whitespace().all(|t| t.parse::<usize>().is_ok()) {
        parse_edge_list(text)
    } else {
        parse_graph6(first)
    }
}

/// Splits on top-level commas, re-attaching bare integers to the preceding
/// token so `strong(jaco:5,1,0,cycle:4)` reads as two arguments.
fn split_args(s: &str) -> Result<Vec<String>> {
    let mut parts: Vec<String> = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    for ch in s.chars() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            _ => {}
        }
        if depth < 0 {
            return Err(Error::InvalidParameter(format!("unbalanced expression `{s}`")));
        }
        if ch == ',' && depth == 0 {
            parts.push(std::mem::take(&mut cur));
        } else {
            cur.push(ch);
        }
    }
    if depth != 0 {
        return Err(Error::InvalidParameter(format!("unbalanced expression `{s}`")));
    }
    parts.push(cur);
    let mut merged: Vec<String> = Vec::new();
    for p in parts {
        let p = p.trim().to_string();
        match merged.last_mut() {
            Some(prev) if !p.is_empty() && p.chars().all(|c| c.is_ascii_digit()) && prev.contains(':') && !prev.contains('(') => {
                prev.push(',');
                prev.push_str(&p);
            }
            _ => merged.push(p),
        }
    }
    Ok(merged)
}
