//! Catalog sweeps comparing the graph predicates against the Scarf oracle.
//!
//! Reports are newline-delimited JSON: one flat object per
//! [`VerificationRecord`], then a final `{"summary": ...}` line.

use std::collections::BTreeMap;
use std::fmt;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::catalog::{canonical_graph6, enumerate_graphs, to_graph6};
use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::homology::FieldSpec;
use crate::monomial::MonomialIdeal;
use crate::scarf::{scarf_complex, scarf_obstruction, EngineConfig};
use crate::theorems::{self, Prediction};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Sqfree,
    Symbolic,
    Ordinary,
    Cover,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::Sqfree, Family::Symbolic, Family::Ordinary, Family::Cover];

    pub fn as_str(self) -> &'static str {
        match self {
            Family::Sqfree => "sqfree",
            Family::Symbolic => "symbolic",
            Family::Ordinary => "ordinary",
            Family::Cover => "cover",
        }
    }

    /// Catalog size swept when no vertex limit is given.
    pub fn default_max_vertices(self) -> usize {
        match self {
            Family::Sqfree => 6,
            Family::Symbolic | Family::Ordinary => 5,
            Family::Cover => 7,
        }
    }

    pub fn takes_power(self) -> bool {
        self != Family::Cover
    }

    /// Powers to test on `g` inside `[n_min, n_max]`. Squarefree powers stop
    /// at the matching number; the other powers default to `n ≤ 3`.
    pub fn powers(self, g: &SimpleGraph, n_min: usize, n_max: Option<usize>) -> Vec<Option<usize>> {
        let lo = n_min.max(2);
        match self {
            Family::Cover => vec![None],
            Family::Sqfree => {
                let top = g.matching_number().min(n_max.unwrap_or(usize::MAX));
                (lo..=top).map(Some).collect()
            }
            Family::Symbolic | Family::Ordinary => (lo..=n_max.unwrap_or(3)).map(Some).collect(),
        }
    }

    /// The ideal this family attaches to `(g, n)`.
    pub fn ideal(self, g: &SimpleGraph, n: Option<usize>) -> Result<MonomialIdeal> {
        let n = || n.ok_or_else(|| Error::Precondition(format!("{self} needs a power")));
        match self {
            Family::Sqfree => g.squarefree_power(n()?),
            Family::Symbolic => g.symbolic_power(n()?),
            Family::Ordinary => g.ordinary_power(n()?),
            Family::Cover => Ok(g.cover_ideal()),
        }
    }

    pub fn predict(self, g: &SimpleGraph, n: Option<usize>) -> Result<Prediction> {
        let n = || n.ok_or_else(|| Error::Precondition(format!("{self} needs a power")));
        match self {
            Family::Sqfree => theorems::predict_sqfree_scarf(g, n()?),
            Family::Symbolic => theorems::predict_symbolic_scarf(g, n()?),
            Family::Ordinary => theorems::predict_ordinary_scarf(g, n()?),
            Family::Cover => theorems::predict_cover_scarf(g),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.as_str() == s)
            .ok_or_else(|| Error::Parse(format!("unknown family `{s}`")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    /// Largest catalog graphs; `None` uses each family's default.
    pub max_vertices: Option<usize>,
    pub n_min: usize,
    /// Largest power; `None` uses each family's default.
    pub n_max: Option<usize>,
    pub field: FieldSpec,
    pub families: Vec<Family>,
    pub generator_cap: usize,
    /// Report destination; counterexamples go next to it.
    pub output_path: Option<PathBuf>,
    pub parallelism: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            max_vertices: None,
            n_min: 2,
            n_max: None,
            field: FieldSpec::Rationals,
            families: Family::ALL.to_vec(),
            generator_cap: EngineConfig::default().scarf_cap,
            output_path: None,
            parallelism: 1,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        if self.generator_cap == 0 || self.parallelism == 0 {
            return Err(Error::Precondition("caps and job counts must be positive".into()));
        }
        if let Some(v) = self.max_vertices {
            if v > crate::catalog::CATALOG_MAX_VERTICES {
                return Err(Error::Precondition(format!(
                    "max_vertices {v} exceeds {}",
                    crate::catalog::CATALOG_MAX_VERTICES
                )));
            }
        }
        if matches!(self.n_max, Some(hi) if hi < self.n_min) {
            return Err(Error::Precondition("empty power range".into()));
        }
        if self.families.is_empty() {
            return Err(Error::Precondition("no families selected".into()));
        }
        Ok(())
    }

    fn engine(&self) -> EngineConfig {
        EngineConfig {
            scarf_cap: self.generator_cap,
            ..EngineConfig::default()
        }
    }

    fn vertex_limit(&self, family: Family) -> usize {
        self.max_vertices.unwrap_or(family.default_max_vertices())
    }
}

/// One oracle-versus-prediction comparison.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationRecord {
    pub graph_id: String,
    pub family: Family,
    pub n: Option<usize>,
    pub oracle: bool,
    pub predicted: bool,
    pub agree: bool,
    pub field_characteristic: u64,
    pub elapsed_ms: u64,
    /// Set when the row could not be evaluated (e.g. a generator cap).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

/// Full detail for a disagreement.
#[derive(Debug, Clone, Serialize)]
pub struct Counterexample {
    pub record: VerificationRecord,
    pub edges: Vec<(String, String)>,
    pub generators: Vec<String>,
    pub scarf_faces: Vec<Vec<usize>>,
    pub obstruction: Option<String>,
    pub witness: Option<String>,
}

#[derive(Debug, Clone, Default)]
pub struct VerificationRun {
    pub records: Vec<VerificationRecord>,
    pub counterexamples: Vec<Counterexample>,
}

impl VerificationRun {
    pub fn disagreements(&self) -> usize {
        self.records.iter().filter(|r| r.error.is_none() && !r.agree).count()
    }

    pub fn errors(&self) -> usize {
        self.records.iter().filter(|r| r.error.is_some()).count()
    }

    /// 0 when everything agrees, 2 on any disagreement, 1 on row errors.
    pub fn exit_code(&self) -> i32 {
        if self.disagreements() > 0 {
            2
        } else if self.errors() > 0 {
            1
        } else {
            0
        }
    }
}

struct Evaluation {
    record: VerificationRecord,
    counterexample: Option<Counterexample>,
}

fn evaluate(
    g: &SimpleGraph,
    graph_id: &str,
    family: Family,
    n: Option<usize>,
    field: FieldSpec,
    engine: &EngineConfig,
) -> Evaluation {
    let start = Instant::now();
    let mut record = VerificationRecord {
        graph_id: graph_id.to_string(),
        family,
        n,
        oracle: false,
        predicted: false,
        agree: true,
        field_characteristic: field.characteristic(),
        elapsed_ms: 0,
        error: None,
    };
    let outcome = family.ideal(g, n).and_then(|ideal| {
        let obstruction = scarf_obstruction(&ideal, field, engine)?;
        let prediction = family.predict(g, n)?;
        Ok((ideal, obstruction, prediction))
    });
    record.elapsed_ms = start.elapsed().as_millis() as u64;
    match outcome {
        Err(e) => {
            record.error = Some(e.to_string());
            Evaluation {
                record,
                counterexample: None,
            }
        }
        Ok((ideal, obstruction, prediction)) => {
            record.oracle = obstruction.is_none();
            record.predicted = prediction.scarf;
            record.agree = record.oracle == record.predicted;
            let counterexample = (!record.agree).then(|| Counterexample {
                record: record.clone(),
                edges: g
                    .edges()
                    .iter()
                    .map(|&(u, v)| (g.name(u).to_string(), g.name(v).to_string()))
                    .collect(),
                generators: ideal
                    .generators()
                    .iter()
                    .map(|m| m.display(ideal.vars()).to_string())
                    .collect(),
                scarf_faces: scarf_complex(&ideal, engine)
                    .map(|d| d.faces().iter().map(|f| f.members.clone()).collect())
                    .unwrap_or_default(),
                obstruction: obstruction.map(|m| m.display(ideal.vars()).to_string()),
                witness: prediction.witness.map(|w| w.to_string()),
            });
            Evaluation {
                record,
                counterexample,
            }
        }
    }
}

/// Sweeps the catalog for every selected family. Rows run on a pool of
/// `parallelism` workers and come back in catalog order.
pub fn run_verification(cfg: &RunConfig) -> Result<VerificationRun> {
    cfg.validate()?;
    let engine = cfg.engine();
    let largest = cfg.families.iter().map(|&f| cfg.vertex_limit(f)).max().unwrap_or(0);
    let catalog = enumerate_graphs(largest)?;
    let ids = catalog
        .iter()
        .map(canonical_graph6)
        .collect::<Result<Vec<_>>>()?;

    let mut items = Vec::new();
    for &family in &cfg.families {
        let limit = cfg.vertex_limit(family);
        for (gi, g) in catalog.iter().enumerate() {
            if g.num_vertices() > limit {
                continue;
            }
            for n in family.powers(g, cfg.n_min, cfg.n_max) {
                items.push((gi, family, n));
            }
        }
    }

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.parallelism)
        .build()
        .map_err(|e| Error::Io(e.to_string()))?;
    let evaluations: Vec<Evaluation> = pool.install(|| {
        items
            .par_iter()
            .map(|&(gi, family, n)| evaluate(&catalog[gi], &ids[gi], family, n, cfg.field, &engine))
            .collect()
    });

    let mut run = VerificationRun::default();
    for e in evaluations {
        run.records.push(e.record);
        run.counterexamples.extend(e.counterexample);
    }
    if let Some(path) = &cfg.output_path {
        emit_report(&run.records, path)?;
        write_counterexamples(&run.counterexamples, &counterexample_path(path))?;
    }
    Ok(run)
}

pub fn counterexample_path(report: &Path) -> PathBuf {
    let mut name = report.file_name().unwrap_or_default().to_os_string();
    name.push(".counterexamples.jsonl");
    report.with_file_name(name)
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyCounts {
    pub total: usize,
    pub scarf: usize,
    pub disagreements: usize,
    pub errors: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub agreements: usize,
    pub disagreements: usize,
    pub errors: usize,
    pub per_family: BTreeMap<String, FamilyCounts>,
}

pub fn summarize(records: &[VerificationRecord]) -> Summary {
    let mut s = Summary::default();
    for r in records {
        s.total += 1;
        let fam = s.per_family.entry(r.family.to_string()).or_default();
        fam.total += 1;
        if r.error.is_some() {
            s.errors += 1;
            fam.errors += 1;
            continue;
        }
        if r.oracle {
            fam.scarf += 1;
        }
        if r.agree {
            s.agreements += 1;
        } else {
            s.disagreements += 1;
            fam.disagreements += 1;
        }
    }
    s
}

/// Writes one JSON object per record and a final summary line.
pub fn emit_report(records: &[VerificationRecord], path: &Path) -> Result<()> {
    let mut w = BufWriter::new(File::create(path)?);
    write_report(records, &mut w)?;
    w.flush()?;
    Ok(())
}

pub fn write_report<W: Write>(records: &[VerificationRecord], w: &mut W) -> Result<()> {
    let json = |e: serde_json::Error| Error::Io(e.to_string());
    for r in records {
        serde_json::to_writer(&mut *w, r).map_err(json)?;
        w.write_all(b"\n")?;
    }
    #[derive(Serialize)]
    struct Line<'a> {
        summary: &'a Summary,
    }
    serde_json::to_writer(&mut *w, &Line { summary: &summarize(records) }).map_err(json)?;
    w.write_all(b"\n")?;
    Ok(())
}

pub fn write_counterexamples(items: &[Counterexample], path: &Path) -> Result<()> {
    let mut w = BufWriter::new(File::create(path)?);
    for c in items {
        serde_json::to_writer(&mut w, c).map_err(|e| Error::Io(e.to_string()))?;
        w.write_all(b"\n")?;
    }
    w.flush()?;
    Ok(())
}

/// Verdicts for one graph across every family.
#[derive(Debug, Clone, Serialize)]
pub struct GraphAnalysis {
    pub graph6: String,
    pub matching_number: usize,
    pub chordal: bool,
    pub co_chordal: bool,
    pub bipartite: bool,
    pub ferrers: bool,
    pub rows: Vec<AnalysisRow>,
}

#[derive(Debug, Clone, Serialize)]
pub struct AnalysisRow {
    pub family: Family,
    pub n: Option<usize>,
    pub generators: usize,
    pub oracle: Option<bool>,
    pub predicted: Option<bool>,
    pub witness: Option<String>,
    pub note: Option<String>,
}

/// Runs every family on one graph for powers `n_min..=n_max`.
pub fn analyze_graph(
    g: &SimpleGraph,
    n_min: usize,
    n_max: usize,
    field: FieldSpec,
    engine: &EngineConfig,
) -> Result<GraphAnalysis> {
    let mut rows = Vec::new();
    for family in Family::ALL {
        let powers = if family.takes_power() {
            (n_min.max(1)..=n_max).map(Some).collect()
        } else {
            vec![None]
        };
        for n in powers {
            let mut row = AnalysisRow {
                family,
                n,
                generators: 0,
                oracle: None,
                predicted: None,
                witness: None,
                note: None,
            };
            match family.ideal(g, n) {
                Ok(ideal) => {
                    row.generators = ideal.len();
                    match scarf_obstruction(&ideal, field, engine) {
                        Ok(obs) => row.oracle = Some(obs.is_none()),
                        Err(e) => row.note = Some(e.to_string()),
                    }
                }
                Err(e) => row.note = Some(e.to_string()),
            }
            match family.predict(g, n) {
                Ok(p) => {
                    row.predicted = Some(p.scarf);
                    row.witness = p.witness.map(|w| w.to_string());
                }
                Err(e) => {
                    row.note.get_or_insert_with(|| format!("no prediction: {e}"));
                }
            }
            rows.push(row);
        }
    }
    Ok(GraphAnalysis {
        graph6: to_graph6(g)?,
        matching_number: g.matching_number(),
        chordal: g.is_chordal(),
        co_chordal: g.is_co_chordal(),
        bipartite: g.is_bipartite(),
        ferrers: g.is_ferrers(),
        rows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn record(family: Family, oracle: bool, predicted: bool) -> VerificationRecord {
        VerificationRecord {
            graph_id: "A_".into(),
            family,
            n: None,
            oracle,
            predicted,
            agree: oracle == predicted,
            field_characteristic: 0,
            elapsed_ms: 0,
            error: None,
        }
    }

    #[test]
    fn report_lines() {
        let mut buf = Vec::new();
        write_report(&[], &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text.lines().count(), 1);
        assert!(text.starts_with("{\"summary\":"));

        let mut buf = Vec::new();
        write_report(&[record(Family::Cover, true, true)], &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 2);
        let v: serde_json::Value = serde_json::from_str(lines[0]).unwrap();
        let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
        for k in [
            "graph_id", "family", "n", "oracle", "predicted", "agree",
            "field_characteristic", "elapsed_ms",
        ] {
            assert!(keys.contains(&k), "missing {k}");
        }
        assert_eq!(v["family"], "cover");
        assert!(v["n"].is_null());
    }

    #[test]
    fn unwritable_path_is_an_error() {
        let err = emit_report(&[], Path::new("/nonexistent-dir/report.jsonl"));
        assert!(matches!(err, Err(Error::Io(_))));
    }

    #[test]
    fn summary_counts() {
        let rows = [
            record(Family::Cover, true, true),
            record(Family::Cover, false, true),
            record(Family::Sqfree, false, false),
        ];
        let s = summarize(&rows);
        assert_eq!((s.total, s.agreements, s.disagreements), (3, 2, 1));
        assert_eq!(s.per_family["cover"].disagreements, 1);
        assert_eq!(s.per_family["sqfree"].scarf, 0);
    }

    #[test]
    fn family_parsing() {
        assert_eq!("symbolic".parse::<Family>().unwrap(), Family::Symbolic);
        assert!("cubic".parse::<Family>().is_err());
    }

    #[test]
    fn config_validation() {
        let bad = RunConfig {
            max_vertices: Some(9),
            ..RunConfig::default()
        };
        assert!(bad.validate().is_err());
        let empty = RunConfig {
            n_min: 4,
            n_max: Some(3),
            ..RunConfig::default()
        };
        assert!(empty.validate().is_err());
        assert!(RunConfig::default().validate().is_ok());
    }
}
