//! Report schema and rendering shared by the `arrowsimp` binary.
//!
//! A report file is one JSON object:
//!
//! ```text
//! { "tool_version": "0.1.0",
//!   "command": "verify theorem9",
//!   "seed": 7,                // only when the command took a seed
//!   "input": "paley:q=11",
//!   "results": [ ... ] }      // Analysis or SuiteReport entries
//! ```
//!
//! Keys are written in declaration order, so reports diff cleanly.
//!
//! The CSV form of a suite report has one row per check with the columns
//! `suite,check,evaluated,failed,passed,first_failure_instance,first_failure_detail`.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use arrowsimp::{
    arrow_simplicity_with, cheap_witnesses, is_doubly_regular, nontrivial_module, ArcSet,
    Regularity, SearchOptions, SuiteReport, Tournament, VertexSet,
};
use serde::{Deserialize, Serialize};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportFile {
    pub tool_version: String,
    pub command: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub input: String,
    pub results: Vec<ResultEntry>,
}

impl ReportFile {
    pub fn new(command: impl Into<String>, seed: Option<u64>, input: impl Into<String>) -> Self {
        ReportFile {
            tool_version: TOOL_VERSION.to_string(),
            command: command.into(),
            seed,
            input: input.into(),
            results: Vec::new(),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum ResultEntry {
    Suite(SuiteReport),
    Analysis(Analysis),
}

// Not `untagged` on the way in: buffered content loses the integer keys of
// `s_distribution`. Dispatch on the `suite` key instead.
impl<'de> Deserialize<'de> for ResultEntry {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let v = serde_json::Value::deserialize(d)?;
        if v.get("suite").is_some() {
            serde_json::from_value(v).map(ResultEntry::Suite).map_err(D::Error::custom)
        } else {
            serde_json::from_value(v).map(ResultEntry::Analysis).map_err(D::Error::custom)
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    Exact,
    BoundsOnly,
}

/// What `analyze` reports about one tournament. In bounds-only mode `s` is
/// known only when the tournament already has a nontrivial module; the
/// witness then certifies `s_upper`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Analysis {
    pub mode: Mode,
    pub n: usize,
    pub s: Option<usize>,
    pub s_upper: usize,
    pub simple: bool,
    pub regularity: String,
    pub doubly_regular_k: Option<usize>,
    pub min_degree: usize,
    pub min_separators: usize,
    pub theorem_bound: usize,
    pub witness_module: VertexSet,
    pub witness_arcs: ArcSet,
    pub subsets_examined: Option<u64>,
    pub subsets_pruned: Option<u64>,
}

fn regularity_name(t: &Tournament) -> arrowsimp::Result<String> {
    Ok(match t.regularity_class()? {
        Regularity::Regular => "regular".into(),
        Regularity::NearRegular { .. } => "near-regular".into(),
        Regularity::Neither => "neither".into(),
    })
}

pub fn analyze(t: &Tournament, mode: Mode, opts: &SearchOptions) -> arrowsimp::Result<Analysis> {
    let regularity = regularity_name(t)?;
    let doubly_regular_k = if t.n() % 4 == 3 { is_doubly_regular(t)? } else { None };
    if mode == Mode::Exact {
        let r = arrow_simplicity_with(t, opts)?;
        return Ok(Analysis {
            mode,
            n: r.n,
            s: Some(r.s),
            s_upper: r.s,
            simple: r.simple,
            regularity,
            doubly_regular_k,
            min_degree: r.min_degree,
            min_separators: r.min_separators,
            theorem_bound: r.theorem_bound,
            witness_module: r.witness_module,
            witness_arcs: r.witness_arcs,
            subsets_examined: Some(r.subsets_examined),
            subsets_pruned: Some(r.subsets_pruned),
        });
    }
    let profile = t.global_minima()?;
    let w = cheap_witnesses(t)?;
    let module = nontrivial_module(t);
    let (s, s_upper, witness_module, witness_arcs) = match module {
        Some(m) => (Some(0), 0, m, ArcSet::default()),
        None if w.vertex_arcs.len() <= w.pair_arcs.len() => {
            (None, w.vertex_arcs.len(), w.vertex_module, w.vertex_arcs)
        }
        None => (None, w.pair_arcs.len(), w.pair_module, w.pair_arcs),
    };
    Ok(Analysis {
        mode,
        n: t.n(),
        s,
        s_upper,
        simple: module.is_none(),
        regularity,
        doubly_regular_k,
        min_degree: profile.min_degree,
        min_separators: profile.min_separators,
        theorem_bound: arrowsimp::theorem_bound(t.n()),
        witness_module,
        witness_arcs,
        subsets_examined: None,
        subsets_pruned: None,
    })
}

pub fn render_analysis(a: &Analysis) -> String {
    let yes = |b: bool| if b { "yes" } else { "no" };
    let s = match a.s {
        Some(s) => s.to_string(),
        None => format!("<= {}", a.s_upper),
    };
    let dr = match a.doubly_regular_k {
        Some(k) => format!("yes (k = {k})"),
        None => "no".into(),
    };
    let arcs: Vec<String> = a.witness_arcs.iter().map(|(x, y)| format!("{x}->{y}")).collect();
    let mut out = String::new();
    let mut line = |k: &str, v: &str| out.push_str(&format!("{k:<17} {v}\n"));
    line("n", &a.n.to_string());
    line("s", &s);
    line("simple", yes(a.simple));
    line("regularity", &a.regularity);
    line("doubly regular", &dr);
    line("min degree", &a.min_degree.to_string());
    line("min separators", &a.min_separators.to_string());
    line("theorem bound", &a.theorem_bound.to_string());
    line("witness module", &a.witness_module.to_string());
    line("witness arcs", if arcs.is_empty() { "(none)" } else { "" });
    if !arcs.is_empty() {
        out.pop();
        out.push_str(&arcs.join(" "));
        out.push('\n');
    }
    if let (Some(e), Some(p)) = (a.subsets_examined, a.subsets_pruned) {
        out.push_str(&format!("{:<17} {e} examined, {p} pruned\n", "subsets"));
    }
    out
}

pub fn render_suite(r: &SuiteReport) -> String {
    let mut out = format!("suite {} ({} instances)\n", r.suite, r.instances);
    for c in &r.checks {
        let status = if c.passed() { "ok" } else { "FAIL" };
        out.push_str(&format!("  {:<36} {:>8} evaluated {:>6} failed  {status}\n", c.name, c.evaluated, c.failed));
    }
    if !r.s_distribution.is_empty() {
        let hist: Vec<String> = r.s_distribution.iter().map(|(s, n)| format!("s={s}: {n}")).collect();
        out.push_str(&format!("  s distribution: {}\n", hist.join(", ")));
    }
    out.push_str(if r.passed() { "PASS\n" } else { "FAIL\n" });
    out
}

#[derive(Serialize)]
struct CsvRow<'a> {
    suite: &'a str,
    check: &'a str,
    evaluated: u64,
    failed: u64,
    passed: bool,
    first_failure_instance: &'a str,
    first_failure_detail: &'a str,
}

pub fn write_csv<W: Write>(reports: &[SuiteReport], out: W) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for r in reports {
        for c in &r.checks {
            let f = c.first_failure.as_ref();
            w.serialize(CsvRow {
                suite: &r.suite,
                check: &c.name,
                evaluated: c.evaluated,
                failed: c.failed,
                passed: c.passed(),
                first_failure_instance: f.map_or("", |f| &f.instance),
                first_failure_detail: f.map_or("", |f| &f.detail),
            })?;
        }
    }
    w.flush()?;
    Ok(())
}

/// The first failing check, its instance label and the instance itself,
/// ready for stderr.
pub fn failure_summary(r: &SuiteReport) -> Option<String> {
    let (check, f) = r.first_failure()?;
    Some(format!("{}: check {check} failed on {}: {}\n{}", r.suite, f.instance, f.detail, f.tournament))
}

/// Writes the first failing instance of every failed check to
/// `dir/<suite>-<check>.trn`. Creates `dir` only if there is something to
/// write.
pub fn write_fixtures(dir: &Path, reports: &[SuiteReport]) -> io::Result<Vec<PathBuf>> {
    let mut written = Vec::new();
    for r in reports {
        for c in &r.checks {
            if let Some(f) = &c.first_failure {
                fs::create_dir_all(dir)?;
                let path = dir.join(format!("{}-{}.trn", r.suite, c.name));
                fs::write(&path, &f.tournament)?;
                written.push(path);
            }
        }
    }
    Ok(written)
}
