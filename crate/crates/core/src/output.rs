//! Text, JSON and CSV renderings of a cohomology table.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::algebra::polynomial::format_rational;
use crate::cohomology::{CohomologyCell, CohomologyTable};
use crate::expr::format_multivector;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellRecord {
    pub q: usize,
    pub d: u32,
    pub dim_cochains: usize,
    pub rank_in: usize,
    pub rank_out: usize,
    pub dim_h: usize,
    pub representatives: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Totals {
    #[serde(rename = "0")]
    pub h0: usize,
    #[serde(rename = "1")]
    pub h1: usize,
    #[serde(rename = "2")]
    pub h2: usize,
    #[serde(rename = "3")]
    pub h3: usize,
}

/// The JSON document for one table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRecord {
    pub algebra: String,
    pub tau: Option<String>,
    pub dmax: u32,
    pub cells: Vec<CellRecord>,
    pub totals: Totals,
    pub stable: bool,
}

fn cell_record(c: &CohomologyCell) -> CellRecord {
    CellRecord {
        q: c.q,
        d: c.d,
        dim_cochains: c.dim_cochains,
        rank_in: c.rank_in,
        rank_out: c.rank_out,
        dim_h: c.dim_h,
        representatives: c.representatives.iter().map(format_multivector).collect(),
    }
}

impl TableRecord {
    pub fn new(table: &CohomologyTable) -> Self {
        let (algebra, tau) = match &table.kind {
            Some(k) => (k.name().to_string(), k.tau().map(format_rational)),
            None => ("custom".to_string(), None),
        };
        let [h0, h1, h2, h3] = table.totals;
        TableRecord {
            algebra,
            tau,
            dmax: table.dmax,
            cells: table.cells.iter().map(cell_record).collect(),
            totals: Totals { h0, h1, h2, h3 },
            stable: table.stable,
        }
    }
}

pub fn to_json(table: &CohomologyTable) -> String {
    let mut s = serde_json::to_string_pretty(&TableRecord::new(table)).expect("serializable");
    s.push('\n');
    s
}

/// One row per cell; representatives joined with `"; "`.
pub fn to_csv(table: &CohomologyTable) -> String {
    let rec = TableRecord::new(table);
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record([
        "algebra",
        "tau",
        "q",
        "d",
        "dim_cochains",
        "rank_in",
        "rank_out",
        "dim_h",
        "representatives",
    ])
    .expect("in-memory write");
    let tau = rec.tau.clone().unwrap_or_default();
    for c in &rec.cells {
        w.write_record([
            rec.algebra.clone(),
            tau.clone(),
            c.q.to_string(),
            c.d.to_string(),
            c.dim_cochains.to_string(),
            c.rank_in.to_string(),
            c.rank_out.to_string(),
            c.dim_h.to_string(),
            c.representatives.join("; "),
        ])
        .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
}

pub fn to_text(table: &CohomologyTable) -> String {
    to_text_for(table, &[0, 1, 2, 3])
}

/// Text rendering restricted to the cochain degrees in `qs`.
pub fn to_text_for(table: &CohomologyTable, qs: &[usize]) -> String {
    let rec = TableRecord::new(table);
    let mut out = String::new();
    match &rec.tau {
        Some(t) => writeln!(
            out,
            "algebra {} (tau = {t}), degrees 0..={}",
            rec.algebra, rec.dmax
        ),
        None => writeln!(out, "algebra {}, degrees 0..={}", rec.algebra, rec.dmax),
    }
    .unwrap();
    write!(out, "{:>4}", "d").unwrap();
    for d in 0..=rec.dmax {
        write!(out, "{d:>4}").unwrap();
    }
    writeln!(out, "   total").unwrap();
    for &q in qs {
        write!(out, "{:>4}", format!("H{q}")).unwrap();
        for d in 0..=rec.dmax {
            write!(out, "{:>4}", table.cell(q, d).dim_h).unwrap();
        }
        writeln!(out, "   {}", table.totals[q]).unwrap();
    }
    writeln!(out, "stable: {}", if rec.stable { "yes" } else { "no" }).unwrap();
    for c in rec.cells.iter().filter(|c| c.dim_h > 0 && qs.contains(&c.q)) {
        writeln!(out, "H{}_{}: {}", c.q, c.d, c.representatives.join(", ")).unwrap();
    }
    out
}

/// Writes a single cell (used for invariant cohomology) as text.
pub fn cell_to_text(c: &CohomologyCell) -> String {
    let r = cell_record(c);
    let mut out = format!(
        "q={} d={} dim_cochains={} rank_in={} rank_out={} dim_h={}\n",
        r.q, r.d, r.dim_cochains, r.rank_in, r.rank_out, r.dim_h
    );
    for rep in &r.representatives {
        out.push_str("  ");
        out.push_str(rep);
        out.push('\n');
    }
    out
}

pub fn cell_to_json(c: &CohomologyCell) -> String {
    let mut s = serde_json::to_string_pretty(&cell_record(c)).expect("serializable");
    s.push('\n');
    s
}
