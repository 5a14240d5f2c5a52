//! Command-line interface: decide link-irregularity, print link tables,
//! enumerate and search catalogs, test planarity, evaluate bounds, and run
//! the built-in claim battery.

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use linkirr::bounds::{edge_bounds, g_exact, g_lower_bound, moment_estimates};
use linkirr::data::builtin;
use linkirr::edgelist::parse_edge_list;
use linkirr::enumerate::{
    enumerate_graphs, enumerate_regular, search_link_irregular_with, GenSpec, SearchOptions,
    SearchResult,
};
use linkirr::graph::Graph;
use linkirr::graph6::{parse_graph6, write_graph6};
use linkirr::iso::canonical_graph;
use linkirr::link::verdict_explain;
use linkirr::report::{link_table_text, Report};
use linkirr::verify::{run_check, CHECK_IDS};

#[derive(Parser)]
#[command(
    name = "linkirr",
    about = "Link-irregularity toolkit: decide, enumerate, search, and verify",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Structured,
}

#[derive(Args)]
struct InputArgs {
    /// Graph source: a file (graph6 or edge list) or `builtin:<name>`.
    input: String,
    /// Vertex indexing base for edge-list files.
    #[arg(long, default_value_t = 0)]
    base: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Full report for one graph; exit 0 when link-irregular, 1 when not.
    Check {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Link degree table, or one link as graph6 with --vertex.
    Links {
        #[command(flatten)]
        input: InputArgs,
        /// Print the link of this vertex as graph6 instead of the table.
        #[arg(long)]
        vertex: Option<usize>,
    },
    /// Stream one graph6 line per isomorphism class; the count goes to
    /// standard error.
    Enumerate {
        #[arg(long)]
        n: usize,
        /// Restrict to r-regular graphs.
        #[arg(long)]
        r: Option<usize>,
        /// Keep connected graphs only.
        #[arg(long)]
        connected: bool,
    },
    /// Search a catalog for link-irregular graphs.
    Search {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: Option<usize>,
        /// Sweep every parity-feasible degree at this order.
        #[arg(long, conflicts_with = "r")]
        all_r: bool,
        /// Keep connected graphs only.
        #[arg(long)]
        connected: bool,
        /// Resumable checkpoint file for long runs.
        #[arg(long)]
        checkpoint: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Planarity with certificate; exit 0 planar, 1 nonplanar.
    Planar {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Edge-count bounds and moment estimates at an order.
    Bounds {
        #[arg(long)]
        n: u64,
        /// Also report the moment diagnostics for r-regular links.
        #[arg(long)]
        r: Option<u64>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run the built-in claim battery; exit 0 only when every check passes.
    #[command(name = "verify-paper")]
    VerifyPaper {
        /// Comma-separated check ids (default: all).
        #[arg(long, value_delimiter = ',')]
        only: Vec<String>,
    },
}

fn main() -> ExitCode {
    // Die quietly when a downstream pipe closes (enumerate | head).
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Check { input, format } => {
            let (source, g) = load(&input)?;
            let report = Report::build(&source, &g);
            match format {
                Format::Text => {
                    print!("{}", report.to_text());
                    let verdict = linkirr::is_link_irregular(&g);
                    print!("{}", verdict_explain(&g, &verdict).expect("fresh verdict"));
                }
                Format::Structured => println!("{}", report.to_json()),
            }
            Ok(if report.verdict.link_irregular { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Links { input, vertex } => {
            let (_, g) = load(&input)?;
            match vertex {
                Some(v) => {
                    if v >= g.order() {
                        bail!("vertex {v} out of range for order {}", g.order());
                    }
                    println!("{}", write_graph6(&linkirr::link(&g, v).link));
                }
                None => print!("{}", link_table_text(&g)),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Enumerate { n, r, connected } => {
            let catalog = match r {
                Some(r) => {
                    let mut spec = GenSpec::regular(n, r);
                    if connected {
                        spec = spec.connected();
                    }
                    filtered_catalog(spec)?
                }
                None => {
                    let mut spec = GenSpec::all(n);
                    if connected {
                        spec = spec.connected();
                    }
                    filtered_catalog(spec)?
                }
            };
            let mut out = String::new();
            for g in &catalog {
                out.push_str(&write_graph6(g));
                out.push('\n');
            }
            print!("{out}");
            eprintln!("{} classes", catalog.len());
            Ok(ExitCode::SUCCESS)
        }
        Command::Search { n, r, all_r, connected, checkpoint, format } => {
            let degrees: Vec<Option<usize>> = if all_r {
                (1..n).filter(|r| n * r % 2 == 0).map(Some).collect()
            } else {
                vec![r]
            };
            let mut all_ok = Vec::new();
            for degree in degrees {
                let mut spec = match degree {
                    Some(r) => GenSpec::regular(n, r),
                    None => GenSpec::all(n),
                };
                if connected {
                    spec = spec.connected();
                }
                let options = SearchOptions {
                    checkpoint: checkpoint.clone(),
                    ..Default::default()
                };
                let result = search_link_irregular_with(spec, &options)
                    .with_context(|| format!("search failed for {spec:?}"))?;
                all_ok.push(result);
            }
            match format {
                Format::Text => {
                    for res in &all_ok {
                        print!("{}", render_search_text(res));
                    }
                }
                Format::Structured => println!("{}", search_json(&all_ok)),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Planar { input, format } => {
            let (source, g) = load(&input)?;
            let res = linkirr::planar::is_planar(&g);
            match format {
                Format::Text => {
                    let report = Report::build(&source, &g);
                    println!("planar: {}", res.planar);
                    if let Some(rot) = &report.planarity.rotation {
                        println!("embedding (clockwise neighbor order):");
                        for (v, cyc) in rot.iter().enumerate() {
                            let ns: Vec<String> = cyc.iter().map(|x| x.to_string()).collect();
                            println!("  {v}: [{}]", ns.join(" "));
                        }
                    }
                    if let Some(o) = &report.planarity.obstruction {
                        println!("obstruction: {} subdivision", o.kind);
                        println!("  branch vertices: {:?}", o.branch_vertices);
                        for p in &o.paths {
                            let ps: Vec<String> = p.iter().map(|x| x.to_string()).collect();
                            println!("  path {}", ps.join("-"));
                        }
                    }
                }
                Format::Structured => {
                    let report = Report::build(&source, &g);
                    println!(
                        "{}",
                        serde_json::to_string_pretty(&report.planarity).expect("serializes")
                    );
                }
            }
            Ok(if res.planar { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Bounds { n, r, format } => {
            let report = edge_bounds(n).map_err(|e| anyhow!("{e}"))?;
            let moments = match r {
                Some(r) => {
                    let g = g_exact(r).map_err(|e| anyhow!("{e}"))?;
                    Some(moment_estimates(n, &g.into()))
                }
                None => None,
            };
            match format {
                Format::Text => {
                    println!("order: {n}");
                    println!("edge_lower (2n-5):                {}", report.edge_lower);
                    println!("edge_upper (floor((2n^2-5n+4)/4)): {}", report.edge_upper);
                    println!("counting lower bound:             {}", report.asym_lower);
                    println!("planar arithmetically possible:   {}", report.planar_possible);
                    if let Some(r) = r {
                        println!("g_lower_bound({r}):              {}", g_lower_bound(r));
                    }
                    if let Some(m) = &moments {
                        println!("link types g:                    {}", m.g);
                        println!("expected unique links:           {:.6}", m.expected_unique);
                        println!("variance ratio:                  {:.6e}", m.variance_ratio);
                    }
                    for note in &report.notes {
                        println!("note: {note}");
                    }
                }
                Format::Structured => {
                    let mut doc = serde_json::json!({
                        "n": n,
                        "edge_lower": report.edge_lower,
                        "edge_upper": report.edge_upper,
                        "asym_lower": report.asym_lower.to_string(),
                        "planar_possible": report.planar_possible,
                        "notes": report.notes,
                    });
                    if let Some(m) = &moments {
                        doc["moments"] = serde_json::json!({
                            "g": m.g.to_string(),
                            "expected_unique": m.expected_unique,
                            "variance_ratio": m.variance_ratio,
                        });
                    }
                    println!("{}", serde_json::to_string_pretty(&doc).expect("serializes"));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::VerifyPaper { only } => {
            let ids: Vec<String> = if only.is_empty() {
                CHECK_IDS.iter().map(|s| s.to_string()).collect()
            } else {
                only
            };
            let mut all_passed = true;
            for id in &ids {
                let outcome = run_check(id)
                    .ok_or_else(|| anyhow!("unknown check `{id}` (known: {CHECK_IDS:?})"))?;
                println!("{}", outcome.render());
                all_passed &= outcome.passed;
            }
            Ok(if all_passed { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
    }
}

/// Catalog for a spec, honoring the connectivity flag.
fn filtered_catalog(spec: GenSpec) -> Result<Vec<Graph>> {
    let base = match spec.regularity {
        Some(r) => enumerate_regular(spec.n, r),
        None => enumerate_graphs(spec.n),
    }
    .map_err(|e| anyhow!("{e}"))?;
    Ok(if spec.connected_only {
        base.into_iter().filter(Graph::is_connected).collect()
    } else {
        base
    })
}

/// Loads a graph from `builtin:<name>` or a file. Files holding a graph6
/// line are detected by parse; anything else is read as an edge list.
fn load(input: &InputArgs) -> Result<(String, Graph)> {
    if let Some(name) = input.input.strip_prefix("builtin:") {
        let g = builtin(name).map_err(|e| anyhow!("{e}"))?;
        return Ok((input.input.clone(), g));
    }
    let text = std::fs::read_to_string(&input.input)
        .with_context(|| format!("cannot read `{}`", input.input))?;
    let first_line = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        .unwrap_or("");
    let graph = match parse_graph6(first_line) {
        Ok(g) => g,
        Err(_) => parse_edge_list(&text, input.base).map_err(|e| anyhow!("{e}"))?,
    };
    Ok((input.input.clone(), graph))
}

fn render_search_text(res: &SearchResult) -> String {
    let mut out = String::new();
    let spec = &res.spec;
    let what = match spec.regularity {
        Some(r) => format!("{r}-regular graphs of order {}", spec.n),
        None => format!("graphs of order {}", spec.n),
    };
    out.push_str(&format!(
        "{}: {} hits / {} examined ({:.2}s)\n",
        what,
        res.hits.len(),
        res.examined,
        res.stats.elapsed.as_secs_f64()
    ));
    for hit in &res.hits {
        out.push_str(&format!("  {}\n", write_graph6(&canonical_graph(hit))));
    }
    out
}

fn search_json(results: &[SearchResult]) -> String {
    let docs: Vec<serde_json::Value> = results
        .iter()
        .map(|res| {
            serde_json::json!({
                "n": res.spec.n,
                "regularity": res.spec.regularity,
                "connected_only": res.spec.connected_only,
                "examined": res.examined,
                "hits": res.hits.iter().map(|h| write_graph6(&canonical_graph(h))).collect::<Vec<_>>(),
                "elapsed_seconds": res.stats.elapsed.as_secs_f64(),
            })
        })
        .collect();
    serde_json::to_string_pretty(&docs).expect("serializes")
}
