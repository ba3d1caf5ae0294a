//! `ids` command-line front end.
//!
//! Exit codes: 0 affirmative answer, 1 negative answer (with a certificate
//! where one exists), 2 usage, input or limit error.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use rand::rngs::StdRng;
use rand::SeedableRng;
use serde_json::json;

use crate::error::{Error, Result};
use crate::generate;
use crate::graph::{is_forest, Graph, VertexSet};
use crate::profiles::{enumerate_with, EnumerationConfig, DEFAULT_VERTEX_LIMIT};
use crate::reductions::{
    build_idsc_gadget, build_mids_gadget, build_scb_gadget, check_scb, solve_spp, GadgetMeta, IntegerSet,
    DEFAULT_BISECTION_CAP,
};
use crate::solver::{check_ids_with, solve_mids_exact_with, vc_upper_bound};
use crate::transform::odd_transform;
use crate::tree::{check_ids_tree, nonleaf_transform, solve_mids_tree};

pub const EXIT_YES: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "ids", version, about = "Information dominating sets under the local majority rule")]
pub struct RunConfig {
    /// Largest graph (vertex count) that may be enumerated exhaustively.
    #[arg(long, global = true, default_value_t = DEFAULT_VERTEX_LIMIT as u64, value_parser = clap::value_parser!(u64).range(1..=64))]
    pub limit: u64,

    /// Largest number of bisections `scb` may scan.
    #[arg(long, global = true, default_value_t = DEFAULT_BISECTION_CAP, value_parser = positive_u128)]
    pub cap: u128,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Worker threads (default: all cores).
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub jobs: Option<u64>,

    /// Seed for `random`.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    #[command(subcommand)]
    pub command: Command,
}

fn positive_u128(s: &str) -> std::result::Result<u128, String> {
    match s.parse::<u128>() {
        Ok(0) => Err("must be positive".into()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Count (and optionally list) the valid opinion profiles.
    Enumerate {
        graph: PathBuf,
        /// Print every profile.
        #[arg(long)]
        profiles: bool,
    },
    /// Decide whether a set of vertices is an IDS.
    Check {
        graph: PathBuf,
        /// Vertex labels, separate or comma-joined.
        #[arg(required = true, num_args = 1.., value_delimiter = ',')]
        labels: Vec<String>,
        /// Use exhaustive checking even on forests.
        #[arg(long)]
        exact: bool,
    },
    /// Find a minimum IDS.
    Mids {
        graph: PathBuf,
        /// Use exhaustive search even on forests.
        #[arg(long)]
        exact: bool,
        /// Report the vertex-cover upper bound instead of an exact answer.
        #[arg(long, conflicts_with = "exact")]
        upper_bound: bool,
        /// Only search sets of at most this size.
        #[arg(long)]
        max_size: Option<usize>,
    },
    /// Write the odd-degree transformation and its vertex map.
    Transform {
        graph: PathBuf,
        /// Output prefix: writes `<out>.edges` and `<out>.map.json`.
        #[arg(long)]
        out: PathBuf,
    },
    /// Write a reduction gadget and its metadata.
    Gadget {
        #[arg(value_enum)]
        kind: GadgetArg,
        /// Positive integers for `scb`/`mids`, e.g. `1,1,2`.
        integers: Option<String>,
        /// Even-degree input graph for `idsc`.
        #[arg(long)]
        graph: Option<PathBuf>,
        /// Output prefix: writes `<out>.edges` and `<out>.meta.json`.
        #[arg(long)]
        out: PathBuf,
    },
    /// Search for a strong community bisection.
    Scb { graph: PathBuf },
    /// Search for an equal-sum partition.
    Spp { integers: String },
    /// Print a random graph in edge-list form.
    Random {
        #[arg(long, short)]
        n: usize,
        /// Edge probability (ignored with --forest).
        #[arg(long, short, default_value_t = 0.3)]
        p: f64,
        #[arg(long)]
        forest: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GadgetArg {
    Scb,
    Idsc,
    Mids,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let config = match RunConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_YES };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs.unwrap_or(0) as usize)
        .build();
    let mut buffer = Vec::new();
    let result = match pool {
        Ok(pool) => pool.install(|| execute(&config, &mut buffer)),
        Err(e) => Err(Error::Internal(e.to_string())),
    };
    let _ = out.write_all(&buffer);
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_ERROR
        }
    }
}

fn read_graph(path: &Path) -> Result<Graph> {
    Graph::parse(&fs::read_to_string(path)?)
}

fn emit(out: &mut dyn Write, format: Format, text: &str, value: serde_json::Value) -> Result<()> {
    match format {
        Format::Text => write!(out, "{text}")?,
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&value)?)?,
    }
    Ok(())
}

fn with_suffix(prefix: &Path, suffix: &str) -> PathBuf {
    let mut s = prefix.as_os_str().to_owned();
    s.push(suffix);
    PathBuf::from(s)
}

pub fn execute(config: &RunConfig, out: &mut dyn Write) -> Result<i32> {
    let enumeration = EnumerationConfig::with_limit(config.limit as usize);
    match &config.command {
        Command::Enumerate { graph, profiles } => {
            let g = read_graph(graph)?;
            let u = enumerate_with(&g, &enumeration)?;
            let mut text = format!("|U| = {}\n", u.len());
            if *profiles {
                for p in u.profiles() {
                    text.push_str(&format!("{p}\n"));
                }
            }
            let mut value = u.to_json();
            value["count"] = json!(u.len());
            emit(out, config.format, &text, value)?;
            Ok(EXIT_YES)
        }
        Command::Check { graph, labels, exact } => {
            let g = read_graph(graph)?;
            let d = g.vertex_set(labels)?;
            if is_forest(&g) && !exact {
                check_tree(&g, &d, config.format, out)
            } else {
                let r = check_ids_with(&g, &d, None, &enumeration)?;
                let mut text = format!("{} {}\n", if r.is_ids { "IDS" } else { "NOT IDS" }, d.display(&g));
                if let Some((a, b)) = &r.witness {
                    text.push_str(&format!("witness: {a} {b}\n"));
                }
                let mut value = r.to_json(&g, &d);
                value["method"] = json!("exact");
                emit(out, config.format, &text, value)?;
                Ok(if r.is_ids { EXIT_YES } else { EXIT_NO })
            }
        }
        Command::Mids {
            graph,
            exact,
            upper_bound,
            max_size,
        } => {
            let g = read_graph(graph)?;
            if *upper_bound {
                let b = vc_upper_bound(&g, &enumeration)?;
                let text = format!(
                    "{} size={} upper-bound {}\n",
                    b.set.display(&g),
                    b.set.len(),
                    if b.verified { "verified" } else { "unverified" }
                );
                emit(out, config.format, &text, b.to_json(&g))?;
                return Ok(EXIT_YES);
            }
            let (r, method) = if is_forest(&g) && !exact {
                (solve_mids_tree(&g)?, "tree")
            } else {
                (solve_mids_exact_with(&g, *max_size, &enumeration)?, "exact")
            };
            let mut value = r.to_json(&g);
            value["method"] = json!(method);
            if let Some(k) = r.none_within {
                emit(out, config.format, &format!("no IDS of size <= {k}\n"), value)?;
                return Ok(EXIT_NO);
            }
            if max_size.is_some_and(|k| r.size > k) {
                let k = max_size.unwrap_or_default();
                value["none_within"] = json!(k);
                emit(out, config.format, &format!("no IDS of size <= {k}\n"), value)?;
                return Ok(EXIT_NO);
            }
            let text = format!("{} size={} optimal\n", r.set.display(&g), r.size);
            emit(out, config.format, &text, value)?;
            Ok(EXIT_YES)
        }
        Command::Transform { graph, out: prefix } => {
            let g = read_graph(graph)?;
            let (gp, map) = odd_transform(&g);
            let edges = with_suffix(prefix, ".edges");
            let meta = with_suffix(prefix, ".map.json");
            fs::write(&edges, gp.to_edge_list())?;
            fs::write(&meta, serde_json::to_string_pretty(&map.to_json())? + "\n")?;
            let text = format!(
                "wrote {} ({} vertices, {} auxiliaries) and {}\n",
                edges.display(),
                gp.vertex_count(),
                map.pairs().count(),
                meta.display()
            );
            let value = json!({
                "edges_file": edges.display().to_string(),
                "map_file": meta.display().to_string(),
                "vertices": gp.vertex_count(),
                "auxiliaries": map.pairs().count(),
            });
            emit(out, config.format, &text, value)?;
            Ok(EXIT_YES)
        }
        Command::Gadget {
            kind,
            integers,
            graph,
            out: prefix,
        } => {
            let integer_set = || -> Result<IntegerSet> {
                integers
                    .as_deref()
                    .ok_or_else(|| Error::InvalidIntegers("an integer list is required".into()))?
                    .parse()
            };
            let (g, meta, candidate): (Graph, GadgetMeta, Option<VertexSet>) = match kind {
                GadgetArg::Scb => {
                    let (g, meta) = build_scb_gadget(&integer_set()?);
                    (g, meta, None)
                }
                GadgetArg::Mids => {
                    let (g, _, meta) = build_mids_gadget(&integer_set()?);
                    (g, meta, None)
                }
                GadgetArg::Idsc => {
                    let path = graph
                        .as_ref()
                        .ok_or_else(|| Error::InvalidIntegers("idsc needs --graph".into()))?;
                    let (g, d, meta) = build_idsc_gadget(&read_graph(path)?)?;
                    (g, meta, Some(d))
                }
            };
            let edges = with_suffix(prefix, ".edges");
            let meta_path = with_suffix(prefix, ".meta.json");
            let mut meta_json = serde_json::to_value(&meta)?;
            if let Some(d) = &candidate {
                meta_json["candidate"] = json!(d.members());
            }
            fs::write(&edges, g.to_edge_list())?;
            fs::write(&meta_path, serde_json::to_string_pretty(&meta_json)? + "\n")?;
            let mut text = format!("wrote {} ({} vertices)", edges.display(), g.vertex_count());
            if let Some(t) = meta.threshold {
                text.push_str(&format!(", threshold {t}"));
            }
            text.push_str(&format!(" and {}\n", meta_path.display()));
            let value = json!({
                "edges_file": edges.display().to_string(),
                "meta_file": meta_path.display().to_string(),
                "vertices": g.vertex_count(),
                "threshold": meta.threshold,
            });
            emit(out, config.format, &text, value)?;
            Ok(EXIT_YES)
        }
        Command::Scb { graph } => {
            let g = read_graph(graph)?;
            match check_scb(&g, Some(config.cap))? {
                Some(b) => {
                    let text = format!("bisection {} | {}\n", b.side_a.display(&g), b.side_b.display(&g));
                    let value = json!({"bisection": [b.side_a.labels(&g), b.side_b.labels(&g)]});
                    emit(out, config.format, &text, value)?;
                    Ok(EXIT_YES)
                }
                None => {
                    emit(out, config.format, "no strong community bisection\n", json!({"bisection": null}))?;
                    Ok(EXIT_NO)
                }
            }
        }
        Command::Spp { integers } => {
            let s: IntegerSet = integers.parse()?;
            match solve_spp(&s) {
                Some(p) => {
                    let (a, b) = (p.first_values(&s), p.second_values(&s));
                    let text = format!("partition {a:?} | {b:?}\n");
                    emit(out, config.format, &text, json!({"partition": [a, b]}))?;
                    Ok(EXIT_YES)
                }
                None => {
                    emit(out, config.format, "no equal-sum partition\n", json!({"partition": null}))?;
                    Ok(EXIT_NO)
                }
            }
        }
        Command::Random { n, p, forest } => {
            if !(0.0..=1.0).contains(p) {
                return Err(Error::InvalidIntegers(format!("edge probability {p} is outside [0, 1]")));
            }
            let mut rng = StdRng::seed_from_u64(config.seed);
            let g = if *forest {
                generate::random_forest(*n, 0.9, &mut rng)
            } else {
                generate::gnp(*n, *p, &mut rng)
            };
            emit(out, config.format, &g.to_edge_list(), g.to_json())?;
            Ok(EXIT_YES)
        }
    }
}

fn check_tree(g: &Graph, d: &VertexSet, format: Format, out: &mut dyn Write) -> Result<i32> {
    let is_ids = check_ids_tree(g, d)?;
    let mut text = format!("{} {}\n", if is_ids { "IDS" } else { "NOT IDS" }, d.display(g));
    let mut value = json!({
        "set": d.labels(g),
        "is_ids": is_ids,
        "method": "tree",
    });
    if !is_ids {
        // certificate: an edge of the odd transform left uncovered by the
        // leaf-free form of the set
        let (gp, map) = odd_transform(g);
        let cover = nonleaf_transform(&gp, &map.lift_set(d)?)?.membership();
        let uncovered = gp.edges().find(|&(a, b)| !cover[a] && !cover[b]);
        if let Some((a, b)) = uncovered {
            text.push_str(&format!("uncovered edge: {} - {}\n", gp.label(a), gp.label(b)));
            value["uncovered_edge"] = json!([gp.label(a), gp.label(b)]);
        }
    }
    emit(out, format, &text, value)?;
    Ok(if is_ids { EXIT_YES } else { EXIT_NO })
}
