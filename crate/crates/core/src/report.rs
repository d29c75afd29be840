//! The three distinct Hurwitz counts, the twelve-label table they determine,
//! and the realizability scan over all data of a degree.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use crate::datum::{enumerate_compatible_data, BranchDatum};
use crate::error::{Error, Result};
use crate::moves::{count_flexible, count_very_flexible};
use crate::rigid::enumerate_in_pool;

/// ASCII names of the twelve counting methods. `_` marks conditions on the
/// base (`*`: branching points fixed, `+`: orientation preserving), `^` those
/// on the cover.
pub const LABELS: [&str; 12] = [
    "R", "R_+", "R_*", "R_*+", "R^+", "R_+^+", "R_*^+", "R_*+^+", "R_*^*", "R_*+^*", "R_*^*+",
    "R_*+^*+",
];

pub const LEGEND: &str = "\
legend: subscript (after _) restricts the base homeomorphism, superscript (after ^) the cover one;
        * = branching points fixed, + = orientation preserving.
        rigid = R_*+^*+, flexible = R_+^+, very flexible = R";

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CountReport {
    pub rigid: u64,
    pub flexible: u64,
    pub very_flexible: u64,
    pub table: BTreeMap<&'static str, u64>,
    pub genus: usize,
    pub degenerate: bool,
}

/// Fills the twelve labels from the three distinct counts.
pub fn twelve_table(
    rigid: u64,
    flexible: u64,
    very_flexible: u64,
) -> Result<BTreeMap<&'static str, u64>> {
    if !(rigid >= flexible && flexible >= very_flexible) {
        return Err(Error::Invariant(format!(
            "counts must satisfy rigid >= flexible >= very flexible, got ({rigid}, {flexible}, {very_flexible})"
        )));
    }
    if (rigid == 0 || flexible == 0 || very_flexible == 0) && rigid + flexible + very_flexible != 0
    {
        return Err(Error::Invariant(format!(
            "counts must vanish together, got ({rigid}, {flexible}, {very_flexible})"
        )));
    }
    let mut table = BTreeMap::new();
    for label in ["R", "R_+", "R_*+", "R_*"] {
        table.insert(label, very_flexible);
    }
    for label in ["R_+^+", "R_*+^+"] {
        table.insert(label, flexible);
    }
    for label in ["R_*+^*+", "R_*+^*", "R_*^*"] {
        table.insert(label, rigid);
    }
    for label in ["R_*^+", "R^+"] {
        table.insert(label, 2 * flexible);
    }
    table.insert("R_*^*+", 2 * rigid);
    debug_assert_eq!(table.len(), LABELS.len());
    Ok(table)
}

impl CountReport {
    pub fn new(rigid: u64, flexible: u64, very_flexible: u64, datum: &BranchDatum) -> Result<Self> {
        Ok(Self {
            rigid,
            flexible,
            very_flexible,
            table: twelve_table(rigid, flexible, very_flexible)?,
            genus: datum.cover_genus(),
            degenerate: datum.is_degenerate(),
        })
    }

    pub fn triple(&self) -> (u64, u64, u64) {
        (self.rigid, self.flexible, self.very_flexible)
    }

    /// Key-sorted JSON.
    pub fn to_json(&self) -> String {
        let value = serde_json::to_value(self).expect("report serializes");
        // serde_json's default map is ordered, so the value is key-sorted
        serde_json::to_string_pretty(&value).expect("value serializes")
    }

    /// Column-aligned text table.
    pub fn to_table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{:<14}{}", "genus", self.genus);
        let _ = writeln!(out, "{:<14}{}", "degenerate", self.degenerate);
        let _ = writeln!(out, "{:<14}{}", "rigid", self.rigid);
        let _ = writeln!(out, "{:<14}{}", "flexible", self.flexible);
        let _ = writeln!(out, "{:<14}{}", "very flexible", self.very_flexible);
        out.push('\n');
        for label in LABELS {
            let _ = writeln!(out, "{label:<14}{}", self.table[label]);
        }
        out.push('\n');
        out.push_str(LEGEND);
        out.push('\n');
        out
    }
}

fn count_in_pool(datum: &BranchDatum, parallel: bool) -> Result<CountReport> {
    let reps = enumerate_in_pool(datum, parallel)?;
    let flexible = count_flexible(&reps, datum)?;
    let very_flexible = count_very_flexible(&reps, datum)?;
    CountReport::new(
        reps.len() as u64,
        flexible.count as u64,
        very_flexible.count as u64,
        datum,
    )
}

fn with_pool<T: Send>(jobs: usize, f: impl FnOnce(bool) -> Result<T> + Send) -> Result<T> {
    if jobs <= 1 {
        return f(false);
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::Invariant(format!("thread pool: {e}")))?;
    pool.install(|| f(true))
}

/// Rigid, flexible and very flexible counts of a three-point datum.
pub fn count(datum: &BranchDatum, jobs: usize) -> Result<CountReport> {
    with_pool(jobs, |parallel| count_in_pool(datum, parallel))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanEntry {
    pub datum: BranchDatum,
    pub report: CountReport,
}

impl ScanEntry {
    pub fn is_exceptional(&self) -> bool {
        self.report.rigid == 0
    }
}

/// All compatible three-point data of one degree with their counts, in the
/// canonical datum order of [`enumerate_compatible_data`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanReport {
    pub degree: usize,
    pub entries: Vec<ScanEntry>,
}

impl ScanReport {
    pub fn exceptional(&self) -> impl Iterator<Item = &ScanEntry> {
        self.entries.iter().filter(|e| e.is_exceptional())
    }

    /// Exceptional data first, then the realizable ones, then a summary line.
    pub fn render(&self) -> String {
        let line = |e: &ScanEntry, tag: &str| {
            let (r, f, v) = e.report.triple();
            format!(
                "{tag:<12}{:<28}genus={}  rigid={r} flexible={f} very_flexible={v}\n",
                e.datum.to_string(),
                e.datum.cover_genus()
            )
        };
        let mut out = String::new();
        for e in self.exceptional() {
            out.push_str(&line(e, "exceptional"));
        }
        for e in self.entries.iter().filter(|e| !e.is_exceptional()) {
            out.push_str(&line(e, "realizable"));
        }
        let _ = writeln!(
            out,
            "exceptional: {} / total: {}",
            self.exceptional().count(),
            self.entries.len()
        );
        out
    }
}

/// Counts every compatible datum of `degree` (triples taken up to order).
pub fn scan(degree: usize, jobs: usize) -> Result<ScanReport> {
    let data = enumerate_compatible_data(degree);
    let entries = with_pool(jobs, |parallel| {
        let count_one = |datum: &BranchDatum| {
            count_in_pool(datum, false).map(|report| ScanEntry {
                datum: datum.clone(),
                report,
            })
        };
        if parallel {
            data.par_iter().map(count_one).collect::<Result<Vec<_>>>()
        } else {
            data.iter().map(count_one).collect::<Result<Vec<_>>>()
        }
    })?;
    Ok(ScanReport { degree, entries })
}
