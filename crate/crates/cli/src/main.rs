use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use depthlab::blocks::{block_forest, forest_diameter};
use depthlab::bounds::{bound_rows, rows_to_csv};
use depthlab::constructions::{chain_graph, grohe_graph, ladder};
use depthlab::extraction::extract_induced_path;
use depthlab::harness::{render, run_suite, Format, Suite, SuiteParams};
use depthlab::io::{parse_any, to_json, to_text, GraphFile};
use depthlab::params::{
    pathwidth_layout, treedepth, treedepth2, treedepth_relative, Measure,
};
use depthlab::{Path, VertexSet};

#[derive(Parser)]
#[command(name = "depthlab", version, about = "Exact treedepth variants, constructions and verification suites")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Generate a construction.
    Gen {
        #[arg(long, value_enum)]
        family: Family,
        /// Comma-separated `key=value` list, e.g. `r=2,k=3`, `l=4,k=2`, `t=5`.
        #[arg(long, default_value = "")]
        params: String,
        /// Output file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = FileFormat::Json)]
        format: FileFormat,
    },
    /// Compute a parameter exactly, with a certificate.
    Measure {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum)]
        measure: MeasureArg,
        /// Vertex set for `tds`, e.g. `0,3,4`.
        #[arg(long)]
        set: Option<String>,
    },
    /// Extract a long induced path from a path.
    Extract {
        #[arg(long)]
        input: PathBuf,
        /// Path as `0,1,2,...`; defaults to the file's `ham_path`.
        #[arg(long)]
        path: Option<String>,
        #[arg(long)]
        k: usize,
    },
    /// Block forest of a graph.
    Forest {
        #[arg(long)]
        input: PathBuf,
    },
    /// Run a verification suite.
    Verify {
        suite: String,
        /// Comma-separated `key=value` overrides, e.g. `n_max=5,seed=7`.
        #[arg(long, default_value = "")]
        params: String,
        #[arg(long, default_value = "table")]
        format: String,
        /// List passing cases in the table too.
        #[arg(long)]
        all: bool,
        /// Record wall-clock time per case.
        #[arg(long)]
        timings: bool,
    },
    /// Tables of the recursive bound.
    Bounds {
        #[command(subcommand)]
        cmd: BoundsCmd,
    },
}

#[derive(Subcommand)]
enum BoundsCmd {
    Table {
        #[arg(long, default_value_t = 12)]
        k_max: u64,
        #[arg(long, default_value_t = 24)]
        t_max: u64,
        #[arg(long, default_value = "table")]
        format: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Grohe,
    Chain,
    Ladder,
}

#[derive(Clone, Copy, ValueEnum)]
enum FileFormat {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum MeasureArg {
    Td,
    Td2,
    Tds,
    Pw,
}

fn key_values(s: &str) -> Result<Vec<(String, String)>> {
    s.split(',')
        .filter(|p| !p.trim().is_empty())
        .map(|p| {
            let (k, v) = p
                .split_once('=')
                .ok_or_else(|| anyhow!("expected key=value, got {p:?}"))?;
            Ok((k.trim().to_string(), v.trim().to_string()))
        })
        .collect()
}

fn param(kv: &[(String, String)], names: &[&str]) -> Result<usize> {
    let (_, v) = kv
        .iter()
        .find(|(k, _)| names.contains(&k.as_str()))
        .ok_or_else(|| anyhow!("missing parameter {}", names[0]))?;
    v.parse()
        .with_context(|| format!("bad value {v:?} for {}", names[0]))
}

fn vertex_list(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| t.trim().parse().with_context(|| format!("bad vertex {t:?}")))
        .collect()
}

fn read_input(path: &PathBuf) -> Result<GraphFile> {
    let src = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Ok(parse_any(&src)?)
}

/// Write to stdout; a closed pipe (e.g. `| head`) is not an error.
fn say(text: &str) -> Result<()> {
    match io::stdout().lock().write_all(text.as_bytes()) {
        Err(e) if e.kind() != io::ErrorKind::BrokenPipe => Err(e.into()),
        _ => Ok(()),
    }
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<()> {
    match out {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => say(text),
    }
}

fn say_json(value: &serde_json::Value) -> Result<()> {
    say(&(serde_json::to_string_pretty(value)? + "\n"))
}

/// Failure of a verification suite, as opposed to a usage error.
struct SuiteFailed;

fn run(cli: Cli) -> Result<Option<SuiteFailed>> {
    match cli.cmd {
        Cmd::Gen {
            family,
            params,
            out,
            format,
        } => {
            let kv = key_values(&params)?;
            let file = match family {
                Family::Grohe => {
                    GraphFile::from(&grohe_graph(param(&kv, &["r"])?, param(&kv, &["k"])?)?)
                }
                Family::Chain => {
                    GraphFile::from(&chain_graph(param(&kv, &["l", "ell"])?, param(&kv, &["k"])?)?)
                }
                Family::Ladder => GraphFile::from(&ladder(param(&kv, &["t"])?)?),
            };
            let text = match format {
                FileFormat::Json => to_json(&file) + "\n",
                FileFormat::Text => to_text(&file.graph()?),
            };
            emit(&text, out.as_ref())?;
        }
        Cmd::Measure {
            input,
            measure,
            set,
        } => {
            let g = read_input(&input)?.graph()?;
            let value = match measure {
                MeasureArg::Td | MeasureArg::Td2 | MeasureArg::Tds => {
                    let (kind, (value, cert)) = match measure {
                        MeasureArg::Td => (Measure::Td, treedepth(&g)?),
                        MeasureArg::Td2 => (Measure::Td2, treedepth2(&g)?),
                        _ => {
                            let s = set.as_deref().ok_or_else(|| anyhow!("tds needs --set"))?;
                            let s: VertexSet = vertex_list(s)?.into_iter().collect();
                            (Measure::Tds, treedepth_relative(&g, &s)?)
                        }
                    };
                    json!({"measure": kind, "value": value, "certificate": cert})
                }
                MeasureArg::Pw => {
                    let (value, layout) = pathwidth_layout(&g)?;
                    json!({"measure": "pw", "value": value, "certificate": {"layout": layout}})
                }
            };
            say_json(&value)?;
        }
        Cmd::Extract { input, path, k } => {
            let file = read_input(&input)?;
            let g = file.graph()?;
            let p = match path {
                Some(s) => Path(vertex_list(&s)?),
                None => file
                    .ham_path
                    .clone()
                    .ok_or_else(|| anyhow!("no --path given and the input has no ham_path"))?,
            };
            let out = extract_induced_path(&g, &p, k)?;
            let value = json!({
                "path": out.path,
                "order": out.path.order(),
                "input_order": out.input_order,
                "k": out.k,
                "guarantee": format!("(2*{})^{} >= {}", out.path.order(), out.k, out.input_order),
                "guarantee_met": out.guarantee_met,
                "rounds": out.rounds,
            });
            say_json(&value)?;
        }
        Cmd::Forest { input } => {
            let g = read_input(&input)?.graph()?;
            let f = block_forest(&g);
            let mut value = serde_json::to_value(&f)?;
            if g.n() > 0 && g.is_connected() {
                value["diameter"] = json!(forest_diameter(&f)?);
            }
            say_json(&value)?;
        }
        Cmd::Verify {
            suite,
            params,
            format,
            all,
            timings,
        } => {
            let suite: Suite = suite.parse()?;
            let format: Format = format.parse()?;
            let kv = key_values(&params)?;
            let mut p = SuiteParams::for_suite(suite, kv.iter().map(|(k, v)| (k.as_str(), v.as_str())))?;
            p.timings |= timings;
            let report = run_suite(suite, &p)?;
            say(&render(&report, format, all))?;
            if !report.passed() {
                return Ok(Some(SuiteFailed));
            }
        }
        Cmd::Bounds {
            cmd: BoundsCmd::Table { k_max, t_max, format },
        } => {
            let rows = bound_rows(k_max, t_max)?;
            match format.as_str() {
                "csv" => say(&rows_to_csv(&rows))?,
                "json" => say_json(&serde_json::to_value(&rows)?)?,
                "table" => {
                    let mut text =
                        format!("{:>3} {:>3} {:>12} {:>12} {:>12}\n", "k", "t", "f", "g_lower", "g_upper");
                    for r in rows {
                        text += &format!("{:>3} {:>3} {:>12} {:>12} {:>12}\n", r.k, r.t, r.f, r.g_lower, r.g_upper);
                    }
                    say(&text)?;
                }
                other => bail!("unknown format {other:?}; expected table, csv or json"),
            }
        }
    }
    Ok(None)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(None) => ExitCode::SUCCESS,
        Ok(Some(SuiteFailed)) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
