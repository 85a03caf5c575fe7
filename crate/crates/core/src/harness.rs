//! Verification suites over graph corpora and constructions.
//!
//! Every suite turns its parameters into a list of independent cases,
//! evaluates them (in parallel, capped by `DEPTHLAB_THREADS`) and assembles
//! a [`SuiteReport`] in input order. Reports contain no timing unless asked
//! for, so identical parameters give byte-identical output.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value;

use crate::blocks::{block_forest, forest_diameter, verify_p4p5_structure};
use crate::bounds::{self, binomial, factorial, BoundTable};
use crate::constructions::{chain_graph, grohe_graph, grohe_size, intersection_graph};
use crate::error::{invalid, Error, Result};
use crate::extraction::extract_induced_path;
use crate::graph::{Graph, VertexSet};
use crate::io::GraphFile;
use crate::params::{pathwidth, td2_value, td_value, tds_value};
use crate::paths::{hamiltonian_path, longest_induced_path, longest_path};
use crate::score::{is_s_core, minimal_s_core};

/// Largest `n` for exhaustive enumeration.
pub const EXHAUSTIVE_LIMIT: usize = 6;

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

/// The labelled graph on `n` vertices whose edge set is given by the bits of
/// `code` over the pairs `(u, v)`, `u < v`, in lexicographic order.
pub fn exhaustive_graph(n: usize, code: u64) -> Graph {
    let edges = pairs(n)
        .into_iter()
        .enumerate()
        .filter(|(i, _)| code >> i & 1 == 1)
        .map(|(_, e)| e);
    Graph::new(n, edges).expect("pairs are in range")
}

/// All `2^{C(n,2)}` labelled graphs on `n` vertices.
pub fn enumerate_graphs(n: usize) -> Result<impl Iterator<Item = Graph>> {
    if n > EXHAUSTIVE_LIMIT {
        return Err(Error::Capacity {
            what: "exhaustive enumeration",
            limit: EXHAUSTIVE_LIMIT,
            got: n,
        });
    }
    let count = 1u64 << pairs(n).len();
    Ok((0..count).map(move |code| exhaustive_graph(n, code)))
}

/// `count` random graphs on `n` vertices, each pair an edge with
/// probability `p`, from a ChaCha8 stream seeded with `seed`.
pub fn random_graphs(n: usize, count: usize, seed: u64, p: f64) -> Result<Vec<Graph>> {
    if !(0.0..=1.0).contains(&p) {
        return invalid(format!("edge probability {p} outside [0, 1]"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let all = pairs(n);
    Ok((0..count)
        .map(|_| {
            let edges: Vec<_> = all.iter().copied().filter(|_| rng.gen_bool(p)).collect();
            Graph::new(n, edges).expect("pairs are in range")
        })
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Definitions,
    MainTheorem,
    P4P5,
    Diam,
    SCore,
    ConstructionsGrohe,
    ConstructionsChain,
    Extraction,
    BoundsTable,
    Tightness,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::Definitions,
        Suite::MainTheorem,
        Suite::P4P5,
        Suite::Diam,
        Suite::SCore,
        Suite::ConstructionsGrohe,
        Suite::ConstructionsChain,
        Suite::Extraction,
        Suite::BoundsTable,
        Suite::Tightness,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Definitions => "definitions",
            Suite::MainTheorem => "main-theorem",
            Suite::P4P5 => "p4p5",
            Suite::Diam => "diam",
            Suite::SCore => "s-core",
            Suite::ConstructionsGrohe => "constructions-grohe",
            Suite::ConstructionsChain => "constructions-chain",
            Suite::Extraction => "extraction",
            Suite::BoundsTable => "bounds-table",
            Suite::Tightness => "tightness",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| {
                let names: Vec<_> = Suite::ALL.iter().map(|s| s.name()).collect();
                Error::InvalidInput(format!("unknown suite {s:?}; expected one of {}", names.join(", ")))
            })
    }
}

/// Suite options. Not every suite reads every field.
#[derive(Debug, Clone, PartialEq)]
pub struct SuiteParams {
    /// Exhaustive corpus: all labelled graphs on `0..=n_max` vertices.
    pub n_max: usize,
    /// Random corpus: this many graphs at each size in `random_sizes`
    /// (the s-core suite splits it over the sizes instead).
    pub random_count: usize,
    pub random_sizes: Vec<usize>,
    pub seed: u64,
    pub edge_prob: f64,
    pub k_max: usize,
    pub t_max: usize,
    pub l_max: usize,
    pub r_max: usize,
    /// Largest vertex count for generated constructions.
    pub max_vertices: usize,
    pub timings: bool,
}

impl Default for SuiteParams {
    fn default() -> Self {
        SuiteParams {
            n_max: 6,
            random_count: 100,
            random_sizes: vec![7, 8],
            seed: 1,
            edge_prob: 0.5,
            k_max: 12,
            t_max: 24,
            l_max: 5,
            r_max: 8,
            max_vertices: 20,
            timings: false,
        }
    }
}

impl SuiteParams {
    /// Defaults for `suite`, overridden by `key=value` pairs.
    pub fn for_suite<'a, I>(suite: Suite, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (&'a str, &'a str)>,
    {
        let mut p = SuiteParams::default();
        match suite {
            Suite::SCore => {
                p.n_max = 5;
                p.random_count = 500;
                p.random_sizes = vec![6, 7, 8];
            }
            Suite::ConstructionsChain => p.k_max = 3,
            Suite::Tightness => {
                p.k_max = 3;
                p.l_max = 6;
            }
            Suite::Extraction => {
                p.random_count = 20;
                p.random_sizes = vec![7, 8, 9, 10, 11, 12];
                p.k_max = 4;
                p.l_max = 8;
                p.max_vertices = 64;
            }
            _ => {}
        }
        for (key, value) in pairs {
            p.set(key, value)?;
        }
        Ok(p)
    }

    fn set(&mut self, key: &str, value: &str) -> Result<()> {
        fn num<T: FromStr>(key: &str, value: &str) -> Result<T> {
            value
                .parse()
                .map_err(|_| Error::InvalidInput(format!("bad value {value:?} for {key}")))
        }
        match key {
            "n_max" | "n" => self.n_max = num(key, value)?,
            "random" | "count" => self.random_count = num(key, value)?,
            "sizes" => {
                self.random_sizes = if value.is_empty() {
                    vec![]
                } else {
                    value
                        .split(';')
                        .map(|v| num(key, v))
                        .collect::<Result<_>>()?
                }
            }
            "seed" => self.seed = num(key, value)?,
            "p" => self.edge_prob = num(key, value)?,
            "k_max" | "k" => self.k_max = num(key, value)?,
            "t_max" | "t" => self.t_max = num(key, value)?,
            "l_max" | "l" => self.l_max = num(key, value)?,
            "r_max" | "r" => self.r_max = num(key, value)?,
            "max_vertices" => self.max_vertices = num(key, value)?,
            "timings" => self.timings = num(key, value)?,
            _ => return invalid(format!("unknown suite parameter {key:?}")),
        }
        Ok(())
    }

    fn describe(&self, suite: Suite) -> BTreeMap<String, String> {
        let mut m = BTreeMap::new();
        let mut put = |k: &str, v: String| {
            m.insert(k.to_string(), v);
        };
        let corpus = |put: &mut dyn FnMut(&str, String)| {
            put("n_max", self.n_max.to_string());
            put("random", self.random_count.to_string());
            put(
                "sizes",
                self.random_sizes
                    .iter()
                    .map(|s| s.to_string())
                    .collect::<Vec<_>>()
                    .join(";"),
            );
            put("seed", self.seed.to_string());
            put("p", self.edge_prob.to_string());
        };
        match suite {
            Suite::Definitions | Suite::Diam => put("n_max", self.n_max.to_string()),
            Suite::MainTheorem | Suite::P4P5 | Suite::SCore => corpus(&mut put),
            Suite::Extraction => {
                corpus(&mut put);
                put("k_max", self.k_max.to_string());
                put("l_max", self.l_max.to_string());
                put("max_vertices", self.max_vertices.to_string());
            }
            Suite::ConstructionsGrohe => {
                put("max_vertices", self.max_vertices.to_string());
                put("r_max", self.r_max.to_string());
            }
            Suite::ConstructionsChain | Suite::Tightness => {
                put("k_max", self.k_max.to_string());
                put("l_max", self.l_max.to_string());
            }
            Suite::BoundsTable => {
                put("k_max", self.k_max.to_string());
                put("t_max", self.t_max.to_string());
            }
        }
        m
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Case {
    pub id: String,
    pub values: BTreeMap<String, Value>,
    pub pass: bool,
    /// Names of the checks that failed.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub failed: Vec<String>,
    /// The input, for failing cases.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub graph: Option<GraphFile>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub micros: Option<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub params: BTreeMap<String, String>,
    pub summary: Summary,
    /// Reported but never asserted.
    pub observations: BTreeMap<String, String>,
    pub cases: Vec<Case>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &Case> {
        self.cases.iter().filter(|c| !c.pass)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Table,
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "table" => Ok(Format::Table),
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            _ => invalid(format!("unknown format {s:?}; expected table, csv or json")),
        }
    }
}

fn render_values(values: &BTreeMap<String, Value>) -> String {
    values
        .iter()
        .map(|(k, v)| match v {
            Value::String(s) => format!("{k}={s}"),
            other => format!("{k}={other}"),
        })
        .collect::<Vec<_>>()
        .join(" ")
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Renders a report. The table lists every case when `all_cases` is set and
/// only failing ones otherwise; CSV and JSON always list every case.
pub fn render(report: &SuiteReport, format: Format, all_cases: bool) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("reports serialize");
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut out = String::from("suite,case,pass,failed,values,micros\n");
            for c in &report.cases {
                out.push_str(&format!(
                    "{},{},{},{},{},{}\n",
                    report.suite,
                    csv_field(&c.id),
                    c.pass,
                    csv_field(&c.failed.join(";")),
                    csv_field(&render_values(&c.values)),
                    c.micros.map(|m| m.to_string()).unwrap_or_default()
                ));
            }
            out
        }
        Format::Table => {
            let mut out = format!("suite   {}\n", report.suite);
            if !report.params.is_empty() {
                let p: Vec<_> = report.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
                out.push_str(&format!("params  {}\n", p.join(" ")));
            }
            let s = report.summary;
            out.push_str(&format!(
                "cases   {} total, {} passed, {} failed\n",
                s.total, s.passed, s.failed
            ));
            if !report.observations.is_empty() {
                out.push_str("observed\n");
                for (k, v) in &report.observations {
                    out.push_str(&format!("  {k:<28} {v}\n"));
                }
            }
            for c in &report.cases {
                if c.pass && !all_cases {
                    continue;
                }
                let status = if c.pass { "PASS" } else { "FAIL" };
                out.push_str(&format!("{status} {:<24} {}", c.id, render_values(&c.values)));
                if !c.failed.is_empty() {
                    out.push_str(&format!("  failed: {}", c.failed.join(", ")));
                }
                if let Some(m) = c.micros {
                    out.push_str(&format!("  {m}us"));
                }
                out.push('\n');
                if let Some(g) = &c.graph {
                    out.push_str(&format!("     graph {}\n", crate::io::to_json(g)));
                }
            }
            out.push_str(if report.passed() { "result  PASS\n" } else { "result  FAIL\n" });
            out
        }
    }
}

/// Collects the outcome of one case.
#[derive(Default)]
struct Checks {
    values: BTreeMap<String, Value>,
    failed: Vec<String>,
}

impl Checks {
    fn val(&mut self, key: &str, v: impl Into<Value>) {
        self.values.insert(key.to_string(), v.into());
    }

    fn check(&mut self, name: impl Into<String>, ok: bool) {
        if !ok {
            self.failed.push(name.into());
        }
    }
}

struct Input {
    id: String,
    graph: Graph,
    set: Option<VertexSet>,
}

fn thread_count() -> Option<usize> {
    std::env::var("DEPTHLAB_THREADS")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .filter(|&n: &usize| n > 0)
}

/// Runs `f` on every item, in parallel, keeping input order.
fn evaluate<T, F>(items: Vec<T>, timings: bool, f: F) -> Result<Vec<Case>>
where
    T: Send + Sync,
    F: Fn(&T) -> Result<(String, Checks, Option<GraphFile>)> + Sync + Send,
{
    let one = |item: &T| -> Result<Case> {
        let start = Instant::now();
        let (id, checks, graph) = f(item)?;
        let micros = timings.then(|| start.elapsed().as_micros() as u64);
        let pass = checks.failed.is_empty();
        Ok(Case {
            id,
            values: checks.values,
            pass,
            failed: checks.failed,
            graph: if pass { None } else { graph },
            micros,
        })
    };
    let run = || items.par_iter().map(one).collect::<Result<Vec<_>>>();
    match thread_count() {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| Error::InvalidInput(format!("thread pool: {e}")))?
            .install(run),
        None => run(),
    }
}

fn corpus(p: &SuiteParams) -> Result<Vec<Input>> {
    let mut out = Vec::new();
    for n in 0..=p.n_max {
        for (code, graph) in enumerate_graphs(n)?.enumerate() {
            out.push(Input {
                id: format!("n{n}#{code}"),
                graph,
                set: None,
            });
        }
    }
    for &n in &p.random_sizes {
        // one stream per size so sizes can be added without disturbing others
        let seed = p.seed.wrapping_add(n as u64);
        for (i, graph) in random_graphs(n, p.random_count, seed, p.edge_prob)?
            .into_iter()
            .enumerate()
        {
            out.push(Input {
                id: format!("n{n}#seed{}#{i}", p.seed),
                graph,
                set: None,
            });
        }
    }
    Ok(out)
}

fn finish(suite: Suite, p: &SuiteParams, cases: Vec<Case>, observations: BTreeMap<String, String>) -> SuiteReport {
    let passed = cases.iter().filter(|c| c.pass).count();
    SuiteReport {
        suite: suite.name().to_string(),
        params: p.describe(suite),
        summary: Summary {
            total: cases.len(),
            passed,
            failed: cases.len() - passed,
        },
        observations,
        cases,
    }
}

/// Order of a longest induced path, for `P_t`-freeness tests.
fn lip(g: &Graph) -> Result<usize> {
    Ok(longest_induced_path(g)?.order())
}

pub fn run_suite(suite: Suite, p: &SuiteParams) -> Result<SuiteReport> {
    match suite {
        Suite::Definitions => definitions(p),
        Suite::MainTheorem => main_theorem(p),
        Suite::P4P5 => p4p5(p),
        Suite::Diam => diam(p),
        Suite::SCore => s_core(p),
        Suite::ConstructionsGrohe => constructions_grohe(p),
        Suite::ConstructionsChain => constructions_chain(p),
        Suite::Extraction => extraction(p),
        Suite::BoundsTable => bounds_table(p),
        Suite::Tightness => tightness(p),
    }
}

fn definitions(p: &SuiteParams) -> Result<SuiteReport> {
    let mut items = Vec::new();
    for m in 2..=12 {
        items.push(Input {
            id: format!("path{m}"),
            graph: Graph::path(m),
            set: None,
        });
    }
    for m in 3..=12 {
        items.push(Input {
            id: format!("cycle{m}"),
            graph: Graph::cycle(m),
            set: None,
        });
    }
    let named = items.len();
    items.extend(corpus(&SuiteParams {
        random_sizes: vec![],
        ..p.clone()
    })?);
    let cases = evaluate(items, p.timings, |item| {
        let g = &item.graph;
        let mut c = Checks::default();
        let td2 = td2_value(g)?;
        let td = td_value(g)?;
        c.val("td2", td2);
        c.val("td", td);
        if item.id.starts_with("path") {
            c.check("td2(path) = 2", td2 == 2);
        } else if item.id.starts_with("cycle") {
            c.check("td2(cycle) = 3", td2 == 3);
        }
        c.check("td2 <= td", td2 <= td);
        Ok((item.id.clone(), c, Some(GraphFile::from(g))))
    })?;
    let mut obs = BTreeMap::new();
    obs.insert("named graphs".into(), named.to_string());
    Ok(finish(Suite::Definitions, p, cases, obs))
}

/// `(k, t) -> max td` among `P_t`-free corpus graphs with `td2 = k`.
type MaxTable = BTreeMap<(usize, usize), usize>;

fn main_theorem(p: &SuiteParams) -> Result<SuiteReport> {
    const TS: [usize; 3] = [4, 5, 6];
    let items = corpus(p)?;
    let cases = evaluate(items, p.timings, |item| {
        let g = &item.graph;
        let mut c = Checks::default();
        let td = td_value(g)?;
        let td2 = td2_value(g)?;
        let lp = lip(g)?;
        c.val("td", td);
        c.val("td2", td2);
        c.val("lip", lp);
        if g.n() > 0 {
            let k = td2 as u64;
            for t in TS {
                if lp < t {
                    let f = bounds::f_value(k, t as u64)?;
                    let upper = bounds::g_upper(k, t as u64)?;
                    c.check(format!("td <= f(k,{t})"), BigUint::from(td) <= f);
                    c.check(format!("f(k,{t}) < 2C"), f < upper);
                }
            }
            if lp < 3 {
                let omega = g.clique_number()?;
                c.val("omega", omega);
                c.check("P3-free: td = omega = td2", td == omega && td2 == omega);
            }
        }
        Ok((item.id.clone(), c, Some(GraphFile::from(g))))
    })?;
    let mut max: MaxTable = BTreeMap::new();
    for case in &cases {
        let get = |k: &str| case.values[k].as_u64().unwrap() as usize;
        let (td, td2, lp) = (get("td"), get("td2"), get("lip"));
        if td2 == 0 {
            continue;
        }
        for t in TS {
            if lp < t {
                let e = max.entry((td2, t)).or_insert(0);
                *e = (*e).max(td);
            }
        }
    }
    let mut obs = BTreeMap::new();
    for ((k, t), best) in max {
        let conj = bounds::g_lower(k as u64, t as u64)?;
        let f = bounds::f_value(k as u64, t as u64)?;
        obs.insert(
            format!("max td, k={k:>2}, t={t}"),
            format!("{best} (f = {f}, conjectured extremum {conj})"),
        );
    }
    Ok(finish(Suite::MainTheorem, p, cases, obs))
}

fn p4p5(p: &SuiteParams) -> Result<SuiteReport> {
    let items = corpus(p)?;
    let cases = evaluate(items, p.timings, |item| {
        let g = &item.graph;
        let mut c = Checks::default();
        let td = td_value(g)?;
        let td2 = td2_value(g)?;
        let lp = lip(g)?;
        c.val("td", td);
        c.val("td2", td2);
        c.val("lip", lp);
        if lp < 4 {
            c.check("P4-free: td = td2", td == td2);
        }
        if lp < 5 {
            let bound = binomial(td2 as u64 + 1, 2).to_usize().unwrap_or(usize::MAX);
            c.check("P5-free: td <= C(k+1,2)", td <= bound);
        }
        if g.n() > 0 && g.is_connected() {
            let report = verify_p4p5_structure(g)?;
            c.val("forest_diam", report.forest_diameter);
            let bad = report.violated();
            if !bad.is_empty() {
                c.val("violated_items", format!("{bad:?}"));
            }
            c.check("block structure items", bad.is_empty());
        }
        Ok((item.id.clone(), c, Some(GraphFile::from(g))))
    })?;
    Ok(finish(Suite::P4P5, p, cases, BTreeMap::new()))
}

fn diam(p: &SuiteParams) -> Result<SuiteReport> {
    let mut items = Vec::new();
    for n in 1..=p.n_max {
        for (code, graph) in enumerate_graphs(n)?.enumerate() {
            if graph.is_connected() {
                items.push(Input {
                    id: format!("n{n}#{code}"),
                    graph,
                    set: None,
                });
            }
        }
    }
    let cases = evaluate(items, p.timings, |item| {
        let g = &item.graph;
        let mut c = Checks::default();
        let forest = block_forest(g);
        let d = forest_diameter(&forest)?;
        let lp = lip(g)?;
        c.val("forest_diam", d);
        c.val("lip", lp);
        c.check("diameter even", d % 2 == 0);
        c.check("forest is a tree", forest.is_tree());
        c.check(
            "maximal paths have odd order",
            forest.maximal_path_orders().iter().all(|o| o % 2 == 1),
        );
        for t in 3..=6 {
            if lp < t {
                c.check(format!("P{t}-free: diam <= {}", 2 * (t - 3)), d <= 2 * (t - 3));
            }
        }
        Ok((item.id.clone(), c, Some(GraphFile::from(g))))
    })?;
    Ok(finish(Suite::Diam, p, cases, BTreeMap::new()))
}

fn random_sets(n: usize, graphs: usize, seed: u64) -> Vec<VertexSet> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..graphs)
        .map(|_| (0..n).filter(|_| rng.gen_bool(0.5)).collect())
        .collect()
}

fn s_core(p: &SuiteParams) -> Result<SuiteReport> {
    let mut items = Vec::new();
    for n in 0..=p.n_max {
        for (code, graph) in enumerate_graphs(n)?.enumerate() {
            items.push(Input {
                id: format!("n{n}#{code}"),
                graph,
                set: None,
            });
        }
    }
    // random pairs: the count is split evenly over the sizes
    let sizes = &p.random_sizes;
    for (j, &n) in sizes.iter().enumerate() {
        let count = p.random_count / sizes.len() + usize::from(j < p.random_count % sizes.len());
        let seed = p.seed.wrapping_add(n as u64);
        let graphs = random_graphs(n, count, seed, p.edge_prob)?;
        let sets = random_sets(n, count, seed ^ 0x5eed);
        for (i, (graph, set)) in graphs.into_iter().zip(sets).enumerate() {
            items.push(Input {
                id: format!("n{n}#seed{}#{i}", p.seed),
                graph,
                set: Some(set),
            });
        }
    }
    let cases = evaluate(items, p.timings, |item| {
        let g = &item.graph;
        let mut c = Checks::default();
        let sets: Vec<VertexSet> = match &item.set {
            Some(s) => vec![s.clone()],
            None => (0..1u64 << g.n()).map(VertexSet::from_mask).collect(),
        };
        let mut max_core_blocks = 0;
        for s in &sets {
            let core = minimal_s_core(g, s)?;
            let lhs = tds_value(g, s)?;
            let rhs = tds_value(&core.graph, &core.map_set(s))?;
            max_core_blocks = max_core_blocks.max(core.blocks.len());
            let ok = lhs == rhs;
            let is_core = is_s_core(g, s, &core.blocks)?;
            let minimal = core.blocks.iter().all(|&b| {
                let rest: Vec<usize> = core.blocks.iter().copied().filter(|&x| x != b).collect();
                !is_s_core(g, s, &rest).unwrap_or(true)
            });
            if !(ok && is_core && minimal) && c.failed.is_empty() {
                c.val("S", s.to_string());
                c.val("tds", lhs);
                c.val("tds_core", rhs);
            }
            c.check(format!("tds equality at S={s}"), ok);
            c.check(format!("core property at S={s}"), is_core);
            c.check(format!("minimality at S={s}"), minimal);
        }
        if let Some(s) = &item.set {
            c.val("S", s.to_string());
        } else {
            c.val("sets", sets.len());
        }
        c.val("max_core_blocks", max_core_blocks);
        Ok((item.id.clone(), c, Some(GraphFile::from(g))))
    })?;
    Ok(finish(Suite::SCore, p, cases, BTreeMap::new()))
}

/// `(r, k)` with `r <= r_max` and `|V(G_{r,k})| <= max_vertices`. The
/// single-vertex graphs `G_{r,1}` exist for every `r`, hence the cap.
pub fn grohe_params(max_vertices: usize, r_max: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for r in 1..=r_max.max(1) {
        for k in 1.. {
            match grohe_size(r, k) {
                Some(n) if n <= max_vertices => out.push((r, k)),
                _ => break,
            }
        }
    }
    out
}

fn constructions_grohe(p: &SuiteParams) -> Result<SuiteReport> {
    let list = grohe_params(p.max_vertices, p.r_max);
    let cases = evaluate(list.clone(), p.timings, |&(r, k)| {
        let g = grohe_graph(r, k)?;
        let mut c = Checks::default();
        let td = td_value(&g)?;
        let td2 = td2_value(&g)?;
        let lp = lip(&g)?;
        let lower = binomial((r + k - 1) as u64, r as u64).to_usize().unwrap_or(usize::MAX);
        c.val("n", g.n());
        c.val("td", td);
        c.val("td2", td2);
        c.val("lip", lp);
        c.val("td_lower", lower);
        c.check("td2 <= k", td2 <= k);
        c.check("P_{2r+1}-free", lp < 2 * r + 1);
        c.check("td >= C(r+k-1, r)", td >= lower);
        if r >= 2 && k >= 2 {
            let a = td_value(&grohe_graph(r - 1, k)?)?;
            let b = td_value(&grohe_graph(r, k - 1)?)?;
            c.val("td_parts", format!("{a}+{b}"));
            c.check("td >= td(G_{r-1,k}) + td(G_{r,k-1})", td >= a + b);
        }
        Ok((format!("grohe(r={r},k={k})"), c, Some(GraphFile::from(&g))))
    })?;
    Ok(finish(Suite::ConstructionsGrohe, p, cases, BTreeMap::new()))
}

fn constructions_chain(p: &SuiteParams) -> Result<SuiteReport> {
    let list: Vec<(usize, usize)> = (1..=p.l_max)
        .flat_map(|l| (1..=p.k_max).map(move |k| (l, k)))
        .collect();
    let cases = evaluate(list, p.timings, |&(l, k)| {
        let a = chain_graph(l, k)?;
        let g = &a.graph;
        let mut c = Checks::default();
        let expect = binomial((l + k - 1) as u64, k as u64).to_usize().unwrap_or(usize::MAX);
        c.val("n", g.n());
        c.check("|V| = C(l+k-1, k)", g.n() == expect);
        let ham = a.ham_path.vertices();
        c.check(
            "Hamiltonian path ending at root",
            ham.len() == g.n() && g.is_path(ham) && a.ham_path.last() == Some(a.root),
        );
        let pw = pathwidth(g)?;
        c.val("pw", pw);
        c.check("pw <= k", pw <= k);
        let (ig, omega) = intersection_graph(&a.intervals)?;
        c.val("interval_omega", omega);
        c.check("interval graph identity", &ig == g);
        c.check("interval clique number <= k+1", omega <= k + 1);
        c.check("clique number matches", g.clique_number()? == omega);
        c.check("pw <= interval clique number - 1", pw < omega.max(1));
        let root_right = a.intervals.intervals[a.root].1;
        c.check(
            "root interval rightmost",
            a.intervals
                .intervals
                .iter()
                .enumerate()
                .all(|(v, iv)| v == a.root || iv.1 < root_right),
        );
        let td2 = td2_value(g)?;
        c.val("td2", td2);
        c.check("td2 <= k+1", td2 <= k + 1);
        let lp = lip(g)?;
        c.val("lip", lp);
        c.check("P_{l+1}-free", lp <= l);
        if l == 2 {
            c.check("G_{2,k} complete on k+1 vertices", g.n() == k + 1 && g.is_complete());
        }
        Ok((format!("chain(l={l},k={k})"), c, Some(GraphFile::from(&a))))
    })?;
    Ok(finish(Suite::ConstructionsChain, p, cases, BTreeMap::new()))
}

enum ExtractInput {
    Corpus(Input),
    Chain(usize, usize),
}

fn extraction(p: &SuiteParams) -> Result<SuiteReport> {
    let mut items: Vec<ExtractInput> = corpus(p)?.into_iter().map(ExtractInput::Corpus).collect();
    for l in 1..=p.l_max {
        for k in 1..=p.k_max {
            if crate::constructions::chain_size(l, k).is_some_and(|n| n <= p.max_vertices) {
                items.push(ExtractInput::Chain(l, k));
            }
        }
    }
    let cases = evaluate(items, p.timings, |item| {
        let (id, g, path) = match item {
            ExtractInput::Corpus(input) => {
                let path = hamiltonian_path(&input.graph)?;
                (input.id.clone(), input.graph.clone(), path)
            }
            ExtractInput::Chain(l, k) => {
                let a = chain_graph(*l, *k)?;
                (format!("chain(l={l},k={k})"), a.graph, Some(a.ham_path))
            }
        };
        let mut c = Checks::default();
        c.val("n", g.n());
        let Some(path) = path.filter(|p| p.order() > 0) else {
            c.val("hamiltonian", false);
            return Ok((id, c, None));
        };
        let td2 = td2_value(&g)?;
        let k = td2.saturating_sub(1).max(1);
        c.val("td2", td2);
        c.val("k", k);
        let out = extract_induced_path(&g, &path, k)?;
        c.val("order", out.path.order());
        c.val("rounds", out.rounds.len());
        c.check("output induced", g.is_induced_path(out.path.vertices()));
        c.check("(2*order)^k >= n", out.guarantee_met);
        Ok((id, c, Some(GraphFile::from(&g))))
    })?;
    let mut obs = BTreeMap::new();
    let with_path = cases.iter().filter(|c| c.values.contains_key("order")).count();
    obs.insert("inputs with a Hamiltonian path".into(), with_path.to_string());
    Ok(finish(Suite::Extraction, p, cases, obs))
}

fn bounds_table(p: &SuiteParams) -> Result<SuiteReport> {
    let (k_max, t_max) = (p.k_max as u64, p.t_max as u64);
    if k_max == 0 || t_max < 2 {
        return invalid("bounds table needs k_max >= 1 and t_max >= 2");
    }
    let list: Vec<(u64, u64)> = (1..=k_max).flat_map(|k| (2..=t_max).map(move |t| (k, t))).collect();
    let cases = evaluate(list, p.timings, |&(k, t)| {
        let mut table = BoundTable::new();
        let f = table.f(k, t)?;
        let lower = bounds::g_lower(k, t)?;
        let upper = bounds::g_upper(k, t)?;
        let mut c = Checks::default();
        c.val("f", f.to_string());
        c.val("g_lower", lower.to_string());
        c.val("g_upper", upper.to_string());
        if t % 2 == 0 {
            c.check("f = 2C - 1", f == bounds::closed_form(k, t)?);
        }
        c.check("f < 2C", f < upper);
        c.check("C <= f", lower <= f);
        if t == 3 {
            c.check("f(k,3) = k", f == k.into());
        }
        Ok((format!("f(k={k},t={t})"), c, None))
    })?;
    let mut cases = cases;
    // Theorem-level reductions: k!·n^{1/k} >= l on the binomial ranges.
    let reduction = bounds::verify_factorial_reduction(4, 30);
    let mut c = Checks::default();
    c.val("checked", reduction.checked);
    c.check("k!*n^(1/k) >= l", reduction.failures.is_empty());
    let tight = tightness_arithmetic(4, 30);
    c.val("checked_shifted", tight.0);
    c.check("(k-1)!*n^(1/(k-1)) >= l", tight.1);
    let pass = c.failed.is_empty();
    cases.push(Case {
        id: "reductions(k<=4,l<=30)".into(),
        values: c.values,
        pass,
        failed: c.failed,
        graph: None,
        micros: None,
    });
    Ok(finish(Suite::BoundsTable, p, cases, BTreeMap::new()))
}

/// For `2 <= k <= k_max`, `l <= l_max`, and every `n` with
/// `C(l+k-3, k-1) < n <= C(l+k-2, k-1)`: `(k-1)!·n^{1/(k-1)} >= l`.
fn tightness_arithmetic(k_max: u64, l_max: u64) -> (usize, bool) {
    let mut checked = 0;
    let mut ok = true;
    for k in 2..=k_max {
        let c = factorial(k - 1);
        for l in 1..=l_max {
            let hi = binomial(l + k - 2, k - 1).to_u64().unwrap_or(0);
            let lo = if l >= 2 { binomial(l + k - 3, k - 1).to_u64().unwrap_or(0) } else { 0 };
            for n in lo + 1..=hi {
                checked += 1;
                ok &= bounds::scaled_root_at_least(&c, n, (k - 1) as u32, l);
            }
        }
    }
    (checked, ok)
}

fn tightness(p: &SuiteParams) -> Result<SuiteReport> {
    let list: Vec<(usize, usize)> = (2..=p.k_max.max(2))
        .flat_map(|k| (1..=p.l_max).map(move |l| (k, l)))
        .collect();
    let cases = evaluate(list, p.timings, |&(k, l)| {
        let a = chain_graph(l, k - 1)?;
        let g = &a.graph;
        let mut c = Checks::default();
        let n = binomial((l + k - 2) as u64, (k - 1) as u64).to_usize().unwrap_or(usize::MAX);
        let td2 = td2_value(g)?;
        let longest = if g.n() <= crate::paths::LONGEST_PATH_LIMIT {
            longest_path(g)?.order()
        } else {
            a.ham_path.order()
        };
        let lp = lip(g)?;
        c.val("n", n);
        c.val("td2", td2);
        c.val("longest_path", longest);
        c.val("lip", lp);
        c.check("td2 <= k", td2 <= k);
        c.check("path of order C(l+k-2, k-1)", longest == n && g.is_path(a.ham_path.vertices()));
        c.check("lip <= l", lp <= l);
        c.check(
            "l <= (k-1)!*n^(1/(k-1))",
            bounds::scaled_root_at_least(&factorial(k as u64 - 1), n as u64, (k - 1) as u32, l as u64),
        );
        Ok((format!("chain(l={l},k={})", k - 1), c, Some(GraphFile::from(&a))))
    })?;
    Ok(finish(Suite::Tightness, p, cases, BTreeMap::new()))
}

/// The graph in a failing case, ready to replay.
pub fn case_graph(case: &Case) -> Option<Result<Graph>> {
    case.graph.as_ref().map(|g| g.graph())
}
