//! End-to-end reproduction of the published tables: every row is rebuilt
//! from its published inputs, analysed, and compared with the published
//! invariants.
//!
//! Rows whose published data cannot be reproduced as printed are reported as
//! such. With `repair` enabled, the documented recovery paths are tried and a
//! row is upgraded to [`RowStatus::Repaired`] only when exactly one corrected
//! input reproduces the published invariants.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::analysis::{self, AnalysisOptions, CodeType, EnumeratorReport, Family};
use crate::error::{Error, Result};
use crate::extension::{expand_x, extend, gray_image};
use crate::gf2::{BinaryCode, BitVector};
use crate::lift::{complete_lower, decode_upper, repair_hex, repair_substitution, UPPER_LEN};
use crate::tables::{self, ExtensionRow, LiftRow};

/// Which published table to rebuild.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TableId {
    #[serde(rename = "1")]
    Lifts1,
    #[serde(rename = "2")]
    Lifts2,
    #[serde(rename = "3")]
    Extensions,
    Equivalence,
}

impl TableId {
    pub const ALL: [TableId; 4] = [
        TableId::Lifts1,
        TableId::Lifts2,
        TableId::Extensions,
        TableId::Equivalence,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TableId::Lifts1 => "1",
            TableId::Lifts2 => "2",
            TableId::Extensions => "3",
            TableId::Equivalence => "equivalence",
        }
    }

    /// Parses `1`, `2`, `3`, `equivalence` or `all`.
    pub fn parse_selection(s: &str) -> Option<Vec<TableId>> {
        match s.to_ascii_lowercase().as_str() {
            "all" => Some(Self::ALL.to_vec()),
            other => Self::ALL
                .into_iter()
                .find(|t| t.name() == other)
                .map(|t| vec![t]),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RowStatus {
    Match,
    Mismatch,
    ErrataFlagged,
    Repaired,
}

impl fmt::Display for RowStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RowStatus::Match => "match",
            RowStatus::Mismatch => "mismatch",
            RowStatus::ErrataFlagged => "errata-flagged",
            RowStatus::Repaired => "repaired",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Expected {
    pub family: Family,
    pub beta: u32,
    /// Published pair invariants, one per code in the row.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub a12_pair: Vec<u64>,
}

/// The measured invariants of one code.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Measured {
    pub code: String,
    pub n: usize,
    pub k: usize,
    pub d: Option<usize>,
    pub self_dual: bool,
    #[serde(rename = "type")]
    pub code_type: Option<CodeType>,
    pub family: Option<Family>,
    pub beta: Option<u32>,
    pub a12_pair: Option<u64>,
    pub novelty: bool,
}

impl Measured {
    fn new(code: &str, r: &EnumeratorReport) -> Self {
        Self {
            code: code.to_string(),
            n: r.n,
            k: r.k,
            d: r.d,
            self_dual: r.self_dual,
            code_type: r.code_type,
            family: r.family,
            beta: r.beta,
            a12_pair: r.a12_pair,
            novelty: r.novelty,
        }
    }

    fn hits(&self, family: Family, beta: u32) -> bool {
        self.d == Some(12) && self.family == Some(family) && self.beta == Some(beta)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RowReport {
    pub name: String,
    /// The published input as printed.
    pub input: String,
    pub expected: Expected,
    pub measured: Vec<Measured>,
    pub status: RowStatus,
    /// The corrected input that reproduces the row, when repaired.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub correction: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    /// Wall-clock time; shown in text output only so that JSON reports are
    /// byte-identical across runs.
    #[serde(skip)]
    pub runtime: Duration,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableReport {
    pub table: TableId,
    pub rows: Vec<RowReport>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReproductionReport {
    pub repair: bool,
    pub tables: Vec<TableReport>,
}

impl ReproductionReport {
    pub fn rows(&self) -> impl Iterator<Item = &RowReport> {
        self.tables.iter().flat_map(|t| t.rows.iter())
    }

    pub fn row(&self, table: TableId, name: &str) -> Option<&RowReport> {
        self.tables
            .iter()
            .filter(|t| t.table == table)
            .flat_map(|t| t.rows.iter())
            .find(|r| r.name == name)
    }

    /// True when no row is a plain mismatch; errata-flagged and repaired
    /// rows do not fail a run.
    pub fn success(&self) -> bool {
        self.rows().all(|r| r.status != RowStatus::Mismatch)
    }

    pub fn counts(&self) -> BTreeMap<String, usize> {
        let mut m = BTreeMap::new();
        for r in self.rows() {
            *m.entry(r.status.to_string()).or_default() += 1;
        }
        m
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for t in &self.tables {
            let _ = writeln!(s, "table {}", t.table.name());
            for r in &t.rows {
                let measured: Vec<String> = r.measured.iter().map(measured_text).collect();
                let _ = writeln!(
                    s,
                    "  {:<10} {:<15} expected beta={} in {}{}  measured {}  ({:.1?})",
                    r.name,
                    r.status.to_string(),
                    r.expected.beta,
                    r.expected.family,
                    if r.expected.a12_pair.is_empty() {
                        String::new()
                    } else {
                        format!(" A12 {:?}", r.expected.a12_pair)
                    },
                    if measured.is_empty() {
                        "-".to_string()
                    } else {
                        measured.join("; ")
                    },
                    r.runtime,
                );
                if let Some(c) = &r.correction {
                    let _ = writeln!(s, "             correction: {c}");
                }
                if let Some(n) = &r.note {
                    let _ = writeln!(s, "             note: {n}");
                }
            }
        }
        let counts: Vec<String> = self
            .counts()
            .into_iter()
            .map(|(k, v)| format!("{v} {k}"))
            .collect();
        let _ = writeln!(s, "summary: {}", counts.join(", "));
        s
    }
}

fn measured_text(m: &Measured) -> String {
    let d = m.d.map_or("-".into(), |d| d.to_string());
    let mut s = format!("{} [{},{},{}]", m.code, m.n, m.k, d);
    if let (Some(f), Some(b)) = (m.family, m.beta) {
        let _ = write!(s, " beta={b} in {f}");
    }
    if let Some(a) = m.a12_pair {
        let _ = write!(s, " A12={a}");
    }
    s
}

#[derive(Clone, Debug)]
pub struct ReproOptions {
    /// Worker threads; 0 means available parallelism.
    pub threads: usize,
    /// Try the documented recovery paths for rows that do not reproduce.
    pub repair: bool,
}

impl Default for ReproOptions {
    fn default() -> Self {
        Self {
            threads: 0,
            repair: false,
        }
    }
}

/// How one lift row resolved: the analysis of the published string, and the
/// corrected string if one was needed and found.
#[derive(Clone, Debug)]
struct LiftOutcome {
    row: RowReport,
    /// Gray image used downstream (corrected when repaired).
    code: Option<BinaryCode>,
    report: Option<EnumeratorReport>,
}

fn analysis_options() -> AnalysisOptions {
    // The surrounding pool decides the parallelism.
    AnalysisOptions::with_threads(0)
}

fn lift_code(hex: &str, row: &LiftRow) -> Result<BinaryCode> {
    let upper = decode_upper(hex)?;
    let lifts = complete_lower(&upper, &row.base.matrix())?;
    if lifts.len() != 1 {
        return Err(Error::PostconditionFailed(format!(
            "{} completions of the upper triangle",
            lifts.len()
        )));
    }
    gray_image(&lifts[0].k)
}

fn describe_substitution(from: &str, to: &str) -> String {
    let diffs: Vec<String> = from
        .chars()
        .zip(to.chars())
        .enumerate()
        .filter(|(_, (a, b))| a != b)
        .map(|(i, (a, b))| format!("digit {i}: {a} -> {b}"))
        .collect();
    format!("{to} ({})", diffs.join(", "))
}

fn reproduce_lift(row: &LiftRow, repair: bool) -> LiftOutcome {
    let start = Instant::now();
    let mut out = RowReport {
        name: row.name.to_string(),
        input: row.hex.to_string(),
        expected: Expected {
            family: row.family,
            beta: row.beta,
            a12_pair: Vec::new(),
        },
        measured: Vec::new(),
        status: RowStatus::Mismatch,
        correction: None,
        note: None,
        runtime: Duration::ZERO,
    };
    let mut code = None;
    let mut report = None;
    let expected = (row.family, row.beta);

    let malformed = row.hex.len() != UPPER_LEN;
    match lift_code(row.hex, row) {
        Ok(c) => match analysis::analyze(&c, &analysis_options()) {
            Ok(r) => {
                let m = Measured::new(row.name, &r);
                out.status = if m.hits(row.family, row.beta) {
                    RowStatus::Match
                } else {
                    RowStatus::Mismatch
                };
                out.measured.push(m);
                code = Some(c);
                report = Some(r);
            }
            Err(e) => out.note = Some(e.to_string()),
        },
        Err(e) => {
            if malformed {
                out.status = RowStatus::ErrataFlagged;
            }
            out.note = Some(e.to_string());
        }
    }

    if repair && out.status != RowStatus::Match {
        let base = row.base.matrix();
        let found = if malformed {
            repair_hex(row.hex, &base, expected, 0)
        } else {
            repair_substitution(row.hex, &base, expected, 0)
        };
        match found {
            Ok(cands) if cands.len() == 1 => {
                let fix = &cands[0];
                out.status = RowStatus::Repaired;
                out.correction = Some(if malformed {
                    fix.hex.clone()
                } else {
                    describe_substitution(row.hex, &fix.hex)
                });
                out.measured.push(Measured::new(&format!("{}*", row.name), &fix.report));
                code = lift_code(&fix.hex, row).ok();
                report = Some(fix.report.clone());
            }
            Ok(cands) if cands.is_empty() => append_note(&mut out, "no single-edit repair found"),
            Ok(cands) => append_note(
                &mut out,
                &format!(
                    "ambiguous repair, {} candidates: {}",
                    cands.len(),
                    cands.iter().map(|c| c.hex.as_str()).collect::<Vec<_>>().join(", ")
                ),
            ),
            Err(e) => append_note(&mut out, &format!("repair failed: {e}")),
        }
    }
    // Only a reproducing code is handed on to later tables.
    if !matches!(out.status, RowStatus::Match | RowStatus::Repaired) {
        code = None;
        report = None;
    }
    out.runtime = start.elapsed();
    LiftOutcome { row: out, code, report }
}

fn append_note(row: &mut RowReport, text: &str) {
    row.note = Some(match row.note.take() {
        Some(n) => format!("{n}; {text}"),
        None => text.to_string(),
    });
}

/// Alternative readings of an extension vector under the `1^{32}` / `0^{32}`
/// typography: each 32-coordinate half, or the whole vector, complemented.
/// Complementing 32 coordinates keeps the weight odd.
fn x_readings(x: &BitVector) -> Vec<(String, BitVector)> {
    let n = x.len();
    let half = n / 2;
    let mask = |lo: usize, hi: usize| {
        let bits: Vec<bool> = (0..n).map(|i| (lo..hi).contains(&i)).collect();
        BitVector::from_bools(&bits).expect("short vector")
    };
    [
        ("second half complemented", mask(half, n)),
        ("first half complemented", mask(0, half)),
        ("complemented", mask(0, n)),
    ]
    .into_iter()
    .filter(|(_, m)| m.weight() % 2 == 0)
    .map(|(label, m)| (label.to_string(), x.xor(&m).expect("equal lengths")))
    .collect()
}

fn reproduce_extension(row: &ExtensionRow, base: Option<&LiftOutcome>, repair: bool) -> RowReport {
    let start = Instant::now();
    let mut out = RowReport {
        name: row.name.to_string(),
        input: format!("{} + X = {}", row.base, row.x),
        expected: Expected {
            family: row.family,
            beta: row.beta,
            a12_pair: Vec::new(),
        },
        measured: Vec::new(),
        status: RowStatus::Mismatch,
        correction: None,
        note: None,
        runtime: Duration::ZERO,
    };
    let base_row = base.map(|b| &b.row);
    let base_code = base.and_then(|b| b.code.as_ref());
    let (Some(g), Some(base_row)) = (base_code, base_row) else {
        out.note = Some(format!("base {} does not reproduce", row.base));
        out.runtime = start.elapsed();
        return out;
    };
    let base_repaired = base_row.status == RowStatus::Repaired;
    if base_repaired {
        append_note(&mut out, &format!("base {} corrected", row.base));
    }

    let x = match expand_x(row.x, g.n()) {
        Ok(x) => x,
        Err(e) => {
            out.note = Some(e.to_string());
            out.runtime = start.elapsed();
            return out;
        }
    };
    let run = |x: &BitVector| -> Result<EnumeratorReport> {
        analysis::analyze(&extend(g, x)?, &analysis_options())
    };
    match run(&x) {
        Ok(r) => {
            let m = Measured::new(row.name, &r);
            out.status = match (m.hits(row.family, row.beta), base_repaired) {
                (true, false) => RowStatus::Match,
                (true, true) => RowStatus::Repaired,
                (false, _) => RowStatus::Mismatch,
            };
            out.measured.push(m);
        }
        Err(e) => append_note(&mut out, &e.to_string()),
    }

    if repair && out.status == RowStatus::Mismatch {
        let mut screen = AnalysisOptions::with_threads(0);
        screen.enumeration.abort_below = Some(12);
        // X and X + c (c in the base code) extend to the same code up to
        // swapping the two new coordinates, so readings are compared modulo
        // the base code.
        let same_class = |a: &BitVector, b: &BitVector| g.contains(&a.xor(b).expect("equal lengths"));
        let mut hits: Vec<(String, BitVector, Measured)> = Vec::new();
        for (label, alt) in x_readings(&x) {
            if same_class(&alt, &x) || hits.iter().any(|h| same_class(&h.1, &alt)) {
                continue;
            }
            let Ok(ext) = extend(g, &alt) else { continue };
            if let Ok(Some(r)) = analysis::try_analyze(&ext, &screen) {
                let m = Measured::new(&format!("{}*", row.name), &r);
                if m.hits(row.family, row.beta) {
                    hits.push((label, alt, m));
                }
            }
        }
        match hits.len() {
            1 => {
                let (label, alt, m) = hits.pop().expect("one hit");
                out.status = RowStatus::Repaired;
                out.correction = Some(format!("X {label}: {alt}"));
                out.measured.push(m);
            }
            0 => append_note(&mut out, "no alternative reading of X reproduces the row"),
            k => append_note(&mut out, &format!("ambiguous repair, {k} readings of X qualify")),
        }
    }
    out.runtime = start.elapsed();
    out
}

fn reproduce_equivalence(
    row: &tables::EquivalenceRow,
    outcomes: &BTreeMap<&str, LiftOutcome>,
) -> RowReport {
    let start = Instant::now();
    let mut out = RowReport {
        name: format!("{}/{}", row.first, row.second),
        input: format!("{} vs {}", row.first, row.second),
        expected: Expected {
            family: row.family,
            beta: row.beta,
            a12_pair: vec![row.first_a12, row.second_a12],
        },
        measured: Vec::new(),
        status: RowStatus::Match,
        correction: None,
        note: None,
        runtime: Duration::ZERO,
    };
    let mut corrected = Vec::new();
    for (name, a12) in [(row.first, row.first_a12), (row.second, row.second_a12)] {
        let Some(o) = outcomes.get(name) else {
            out.status = RowStatus::Mismatch;
            append_note(&mut out, &format!("{name} not available"));
            continue;
        };
        match &o.report {
            Some(r) => {
                let m = Measured::new(name, r);
                if !m.hits(row.family, row.beta) || m.a12_pair != Some(a12) {
                    out.status = RowStatus::Mismatch;
                }
                out.measured.push(m);
                if o.row.status == RowStatus::Repaired {
                    corrected.push(name);
                }
            }
            None => {
                out.status = RowStatus::Mismatch;
                append_note(&mut out, &format!("{name} does not reproduce"));
            }
        }
    }
    if !corrected.is_empty() {
        append_note(&mut out, &format!("uses corrected {}", corrected.join(", ")));
        if out.status == RowStatus::Match {
            out.status = RowStatus::Repaired;
        }
    }
    out.runtime = start.elapsed();
    out
}

fn lift_rows_needed(selection: &[TableId]) -> Vec<&'static LiftRow> {
    let all: Vec<&'static LiftRow> = tables::TABLE1.iter().chain(tables::TABLE2.iter()).collect();
    let mut names: Vec<&str> = Vec::new();
    for t in selection {
        match t {
            TableId::Lifts1 => names.extend(tables::TABLE1.iter().map(|r| r.name)),
            TableId::Lifts2 => names.extend(tables::TABLE2.iter().map(|r| r.name)),
            TableId::Extensions => names.extend(tables::TABLE3.iter().map(|r| r.base)),
            TableId::Equivalence => {
                for r in tables::EQUIVALENCE.iter() {
                    names.extend([r.first, r.second]);
                }
            }
        }
    }
    all.into_iter().filter(|r| names.contains(&r.name)).collect()
}

fn run(selection: &[TableId], opts: &ReproOptions) -> ReproductionReport {
    let lifts: Vec<LiftOutcome> = lift_rows_needed(selection)
        .into_par_iter()
        .map(|r| reproduce_lift(r, opts.repair))
        .collect();
    let outcomes: BTreeMap<&str, LiftOutcome> = lifts
        .into_iter()
        .map(|o| (tables::lift_row(&o.row.name).expect("table row").name, o))
        .collect();

    let mut reports = Vec::new();
    for &t in selection {
        let rows = match t {
            TableId::Lifts1 | TableId::Lifts2 => {
                let src = if t == TableId::Lifts1 {
                    &tables::TABLE1[..]
                } else {
                    &tables::TABLE2[..]
                };
                src.iter().map(|r| outcomes[r.name].row.clone()).collect()
            }
            TableId::Extensions => tables::TABLE3
                .par_iter()
                .map(|r| reproduce_extension(r, outcomes.get(r.base), opts.repair))
                .collect(),
            TableId::Equivalence => tables::EQUIVALENCE
                .iter()
                .map(|r| reproduce_equivalence(r, &outcomes))
                .collect(),
        };
        reports.push(TableReport { table: t, rows });
    }
    ReproductionReport {
        repair: opts.repair,
        tables: reports,
    }
}

/// Rebuilds the selected tables. Lift rows shared between tables are
/// computed once; output order follows the tables.
pub fn reproduce(selection: &[TableId], opts: &ReproOptions) -> Result<ReproductionReport> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.threads)
        .build()
        .map_err(|e| Error::PostconditionFailed(format!("thread pool: {e}")))?;
    Ok(pool.install(|| run(selection, opts)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn selection_parsing() {
        assert_eq!(TableId::parse_selection("all").unwrap().len(), 4);
        assert_eq!(
            TableId::parse_selection("Equivalence").unwrap(),
            vec![TableId::Equivalence]
        );
        assert_eq!(TableId::parse_selection("3").unwrap(), vec![TableId::Extensions]);
        assert!(TableId::parse_selection("4").is_none());
    }

    #[test]
    fn needed_lifts_cover_extension_bases() {
        let names: Vec<&str> = lift_rows_needed(&[TableId::Extensions])
            .iter()
            .map(|r| r.name)
            .collect();
        assert_eq!(names, ["K1", "K3", "K4", "L1", "L4", "L9", "L15"]);
    }

    #[test]
    fn x_readings_keep_odd_weight() {
        let x = expand_x(tables::TABLE3[5].x, 64).unwrap();
        let r = x_readings(&x);
        assert_eq!(r.len(), 3);
        for (_, alt) in r {
            assert_eq!(alt.weight() % 2, 1);
        }
    }

    #[test]
    fn substitution_description() {
        assert_eq!(describe_substitution("AB7", "AB8"), "AB8 (digit 2: 7 -> 8)");
    }
}
