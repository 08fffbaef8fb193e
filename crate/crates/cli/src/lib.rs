//! The `uidiso` command-line tool.
//!
//! Exit codes: 0 for success (isomorphic, permissible, or a completed
//! report), 1 for a negative verdict, 2 for usage and input errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

use uidiso::census::{census_row_with, CensusRow, MAX_CENSUS_N};
use uidiso::{
    check_permissible, generate_all_uids, generate_uid, oracle_isomorphism, parse_edge_list,
    parse_graph6, find_isomorphism_rooted, Graph, IsoMapping, IsoResult, PermissibilityVerdict,
    Reason, Side, Uid,
};

mod bench;

pub use bench::{run_bench, BenchRow};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "uidiso", version, about = "Isomorphism testing for permissible graphs")]
struct Cli {
    #[command(flatten)]
    global: GlobalArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct GlobalArgs {
    /// Input format; by default `.g6` files are graph6 and anything else an
    /// edge list.
    #[arg(long, value_enum, global = true, default_value_t = Format::Auto)]
    format: Format,
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Use the parallel UID and census paths.
    #[arg(long, global = true)]
    parallel: bool,
    /// Also write a run report (command, input digest, payload, wall time).
    #[arg(long, global = true, value_name = "PATH")]
    report: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Auto,
    Graph6,
    EdgeList,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decide whether a graph is permissible.
    Check { graph: PathBuf },
    /// Print the UID of one vertex, or of every vertex.
    Uid {
        graph: PathBuf,
        /// External label of the root vertex.
        #[arg(long)]
        vertex: Option<String>,
    },
    /// Decide isomorphism of two permissible graphs.
    Iso {
        first: PathBuf,
        second: PathBuf,
        /// External label of the root in the first graph.
        #[arg(long)]
        root: Option<String>,
    },
    /// Decide isomorphism by brute-force permutation search.
    OracleIso { first: PathBuf, second: PathBuf },
    /// Count isomorphism classes for n = 1..=N.
    Census {
        #[arg(long)]
        max_n: usize,
    },
    /// Time each phase on random permissible graphs.
    Bench {
        #[arg(long, default_value_t = 6)]
        min_n: usize,
        #[arg(long, default_value_t = 30)]
        max_n: usize,
        #[arg(long, default_value_t = 10)]
        samples: usize,
        /// Edge probability on top of a random spanning tree.
        #[arg(long, default_value_t = 0.3)]
        edge_prob: f64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

/// What a run produced: the JSON payload, its text rendering and the exit
/// code.
struct Outcome {
    payload: Value,
    text: String,
    exit: i32,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct RunReport {
    pub command: String,
    pub inputs_digest: String,
    pub payload: Value,
    pub wall_time_ms: f64,
}

#[derive(Debug)]
struct CliError(String);

impl<E: std::fmt::Display> From<E> for CliError {
    fn from(e: E) -> Self {
        CliError(e.to_string())
    }
}

/// Runs the tool on `argv` (including the program name) and returns the
/// exit code.
pub fn run_cli<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = if e.use_stderr() {
                write!(err, "{e}")
            } else {
                write!(out, "{e}")
            };
            return code;
        }
    };
    let started = Instant::now();
    let mut digest = Sha256::new();
    let result = execute(&cli, &mut digest);
    let outcome = match result {
        Ok(outcome) => outcome,
        Err(CliError(message)) => {
            let _ = writeln!(err, "error: {message}");
            return EXIT_USAGE;
        }
    };
    let wall_time_ms = started.elapsed().as_secs_f64() * 1e3;

    let printed = if cli.global.json {
        writeln!(out, "{}", serde_json::to_string_pretty(&outcome.payload).expect("json"))
    } else {
        write!(out, "{}", outcome.text)
    };
    if printed.is_err() {
        return EXIT_USAGE;
    }
    if let Some(path) = &cli.global.report {
        let report = RunReport {
            command: command_name(&cli.command).to_string(),
            inputs_digest: format!("{:x}", digest.finalize()),
            payload: outcome.payload,
            wall_time_ms,
        };
        let body = serde_json::to_string_pretty(&report).expect("json");
        if let Err(e) = std::fs::write(path, body) {
            let _ = writeln!(err, "error: cannot write report {}: {e}", path.display());
            return EXIT_USAGE;
        }
    }
    outcome.exit
}

fn command_name(command: &Command) -> &'static str {
    match command {
        Command::Check { .. } => "check",
        Command::Uid { .. } => "uid",
        Command::Iso { .. } => "iso",
        Command::OracleIso { .. } => "oracle-iso",
        Command::Census { .. } => "census",
        Command::Bench { .. } => "bench",
    }
}

fn execute(cli: &Cli, digest: &mut Sha256) -> Result<Outcome, CliError> {
    let global = &cli.global;
    let mut load = |path: &Path| load_graph(path, global.format, digest);
    match &cli.command {
        Command::Check { graph } => Ok(check(&load(graph)?)),
        Command::Uid { graph, vertex } => uid(&load(graph)?, vertex.as_deref(), global.parallel),
        Command::Iso {
            first,
            second,
            root,
        } => {
            let (g1, g2) = (load(first)?, load(second)?);
            let root = match root {
                Some(label) => vertex_of(&g1, label)?,
                None => 0,
            };
            Ok(iso(&g1, &g2, root))
        }
        Command::OracleIso { first, second } => oracle(&load(first)?, &load(second)?),
        Command::Census { max_n } => {
            digest.update(format!("census {max_n}"));
            census(*max_n, global.parallel)
        }
        Command::Bench {
            min_n,
            max_n,
            samples,
            edge_prob,
            seed,
        } => {
            digest.update(format!("bench {min_n} {max_n} {samples} {edge_prob} {seed}"));
            bench(*min_n, *max_n, *samples, *edge_prob, *seed)
        }
    }
}

fn parse_graph_bytes(path: &Path, bytes: &[u8], graph6: Option<bool>) -> Result<Graph, String> {
    let graph6 = graph6.unwrap_or_else(|| path.extension().is_some_and(|e| e == "g6"));
    let parsed = if graph6 {
        parse_graph6(bytes).map_err(|e| e.to_string())
    } else {
        let text = std::str::from_utf8(bytes).map_err(|e| format!("not UTF-8: {e}"))?;
        parse_edge_list(text).map_err(|e| e.to_string())
    };
    parsed.map_err(|e| format!("{}: {e}", path.display()))
}

fn load_graph(path: &Path, format: Format, digest: &mut Sha256) -> Result<Graph, CliError> {
    let bytes = std::fs::read(path).map_err(|e| CliError(format!("{}: {e}", path.display())))?;
    digest.update((bytes.len() as u64).to_le_bytes());
    digest.update(&bytes);
    let graph6 = match format {
        Format::Auto => None,
        Format::Graph6 => Some(true),
        Format::EdgeList => Some(false),
    };
    parse_graph_bytes(path, &bytes, graph6).map_err(CliError)
}

fn vertex_of(g: &Graph, label: &str) -> Result<usize, CliError> {
    g.vertex_by_label(label)
        .ok_or_else(|| CliError(format!("no vertex labelled {label:?}")))
}

fn reason_name(reason: Reason) -> &'static str {
    match reason {
        Reason::NotConnected => "NotConnected",
        Reason::DuplicateNeighborKey => "DuplicateNeighborKey",
        Reason::Permissible => "Permissible",
    }
}

fn verdict_json(g: &Graph, verdict: &PermissibilityVerdict) -> Value {
    let mut obj = Map::new();
    obj.insert("permissible".into(), json!(verdict.permissible));
    obj.insert("reason".into(), json!(reason_name(verdict.reason)));
    if let Some(w) = verdict.witness {
        obj.insert(
            "witness".into(),
            json!({"vertex": g.label(w.vertex), "x": g.label(w.x), "y": g.label(w.y)}),
        );
    }
    Value::Object(obj)
}

fn verdict_text(g: &Graph, verdict: &PermissibilityVerdict) -> String {
    match (verdict.reason, verdict.witness) {
        (Reason::Permissible, _) => "permissible".to_string(),
        (Reason::NotConnected, _) => "not permissible: graph is not connected".to_string(),
        (Reason::DuplicateNeighborKey, Some(w)) => {
            let key = uidiso::NeighborKey::of(g, w.x);
            format!(
                "not permissible: neighbours {} and {} of vertex {} share key ({}, {:?})",
                g.label(w.x),
                g.label(w.y),
                g.label(w.vertex),
                key.degree,
                key.neighbor_degrees
            )
        }
        (Reason::DuplicateNeighborKey, None) => "not permissible".to_string(),
    }
}

fn check(g: &Graph) -> Outcome {
    let verdict = check_permissible(g);
    Outcome {
        payload: verdict_json(g, &verdict),
        text: format!("{}\n", verdict_text(g, &verdict)),
        exit: if verdict.permissible { EXIT_OK } else { EXIT_NEGATIVE },
    }
}

fn uid_rows(g: &Graph, uid: &Uid) -> (Vec<String>, Vec<i64>) {
    (uid.labelled_vertex_row(g), uid.degree_row())
}

fn uid_text(g: &Graph, uid: &Uid) -> String {
    let (vertices, degrees) = uid_rows(g, uid);
    let degrees: Vec<String> = degrees.iter().map(i64::to_string).collect();
    format!("vertex {}\ndegree {}\n", vertices.join(" "), degrees.join(" "))
}

fn uid(g: &Graph, vertex: Option<&str>, parallel: bool) -> Result<Outcome, CliError> {
    if let Some(label) = vertex {
        let uid = generate_uid(g, vertex_of(g, label)?)?;
        let (vertices, degrees) = uid_rows(g, &uid);
        return Ok(Outcome {
            payload: json!({"vertexRow": vertices, "degreeRow": degrees}),
            text: uid_text(g, &uid),
            exit: EXIT_OK,
        });
    }
    let uids = generate_all_uids(g, parallel)?;
    let payload = uids
        .iter()
        .map(|u| {
            let (vertices, degrees) = uid_rows(g, u);
            json!({"root": g.label(u.root), "vertexRow": vertices, "degreeRow": degrees})
        })
        .collect();
    let text = uids
        .iter()
        .map(|u| format!("# root {}\n{}", g.label(u.root), uid_text(g, u)))
        .collect::<Vec<_>>()
        .join("\n");
    Ok(Outcome {
        payload: Value::Array(payload),
        text,
        exit: EXIT_OK,
    })
}

fn mapping_json(g1: &Graph, g2: &Graph, m: &IsoMapping) -> Value {
    let map: Map<String, Value> = m
        .labelled_pairs(g1, g2)
        .into_iter()
        .map(|(a, b)| (a, Value::String(b)))
        .collect();
    Value::Object(map)
}

fn mapping_text(g1: &Graph, g2: &Graph, m: &IsoMapping) -> String {
    m.labelled_pairs(g1, g2)
        .iter()
        .map(|(a, b)| format!("{a}→{b}"))
        .collect::<Vec<_>>()
        .join(" ")
}

fn found(g1: &Graph, g2: &Graph, mapping: Option<&IsoMapping>) -> Outcome {
    match mapping {
        Some(m) => Outcome {
            payload: json!({"verdict": "isomorphic", "mapping": mapping_json(g1, g2, m)}),
            text: format!("isomorphic\n{}\n", mapping_text(g1, g2, m)),
            exit: EXIT_OK,
        },
        None => Outcome {
            payload: json!({"verdict": "non-isomorphic"}),
            text: "non-isomorphic\n".to_string(),
            exit: EXIT_NEGATIVE,
        },
    }
}

fn iso(g1: &Graph, g2: &Graph, root: usize) -> Outcome {
    match find_isomorphism_rooted(g1, g2, root) {
        IsoResult::Isomorphic(m) => found(g1, g2, Some(&m)),
        IsoResult::NotIsomorphic => found(g1, g2, None),
        IsoResult::Inapplicable { side, verdict } => {
            let (name, g) = match side {
                Side::First => ("first", g1),
                Side::Second => ("second", g2),
            };
            let mut reason = verdict_json(g, &verdict);
            reason
                .as_object_mut()
                .expect("object")
                .insert("graph".into(), json!(name));
            Outcome {
                payload: json!({"verdict": "inapplicable", "reason": reason}),
                text: format!("inapplicable: {name} graph {}\n", verdict_text(g, &verdict)),
                exit: EXIT_NEGATIVE,
            }
        }
    }
}

fn oracle(g1: &Graph, g2: &Graph) -> Result<Outcome, CliError> {
    let mapping = oracle_isomorphism(g1, g2)?;
    Ok(found(g1, g2, mapping.as_ref()))
}

fn census_json(row: &CensusRow) -> Value {
    json!({
        "n": row.n,
        "total": row.total,
        "connected": row.connected,
        "trees": row.trees,
        "permissible": row.permissible,
        "fraction": (row.fraction * 1e4).round() / 1e4,
    })
}

fn census(max_n: usize, parallel: bool) -> Result<Outcome, CliError> {
    if !(1..=MAX_CENSUS_N).contains(&max_n) {
        return Err(CliError(format!(
            "--max-n must lie in 1..={MAX_CENSUS_N}, got {max_n}"
        )));
    }
    let rows = (1..=max_n)
        .map(|n| census_row_with(n, parallel))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Outcome {
        payload: Value::Array(rows.iter().map(census_json).collect()),
        text: rows.iter().map(|r| r.to_tsv() + "\n").collect(),
        exit: EXIT_OK,
    })
}

fn bench(
    min_n: usize,
    max_n: usize,
    samples: usize,
    edge_prob: f64,
    seed: u64,
) -> Result<Outcome, CliError> {
    if min_n == 0 || min_n > max_n {
        return Err(CliError(format!("need 1 <= --min-n <= --max-n, got {min_n}..{max_n}")));
    }
    if !(0.0..=1.0).contains(&edge_prob) {
        return Err(CliError(format!("--edge-prob must lie in [0, 1], got {edge_prob}")));
    }
    let rows = run_bench(min_n..=max_n, samples, edge_prob, seed);
    let mut text = String::from("# n\tsamples\tpreprocess_us\tcheck_us\tuid_us\tmatch_us\n");
    for row in &rows {
        text.push_str(&row.to_tsv());
        text.push('\n');
    }
    Ok(Outcome {
        payload: serde_json::to_value(&rows).expect("json"),
        text,
        exit: EXIT_OK,
    })
}
