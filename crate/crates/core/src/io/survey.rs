use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Duration;

use rayon::prelude::*;

use crate::count::{self, CountError, CountOptions};
use crate::graph::Graph;

/// Aggregate Hamilton-cycle statistics for the corpus graphs on `n` vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurveyRow {
    pub n: usize,
    /// Graphs on `n` vertices that passed the connectivity filter.
    pub graph_count: usize,
    pub hamiltonian_count: usize,
    /// Minimum over the Hamiltonian graphs only.
    pub min_hc: Option<u64>,
    pub max_hc: Option<u64>,
    /// Corpus index of the first graph attaining `max_hc`.
    pub argmax_id: Option<usize>,
    /// Graphs whose count exceeded the per-graph budget.
    pub timeouts: usize,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct SurveyOptions {
    pub cc_filter: Option<usize>,
    pub budget: Option<Duration>,
}

#[derive(Debug)]
enum Outcome {
    Filtered,
    Counted(u64),
    TimedOut,
    Failed,
}

/// Counts every corpus graph (in parallel) and aggregates per vertex count.
/// Aggregation runs in corpus order, so the result does not depend on
/// scheduling.
pub fn survey(corpus: &[Graph], opts: SurveyOptions) -> Vec<SurveyRow> {
    let outcomes: Vec<Outcome> = corpus
        .par_iter()
        .map(|g| {
            if let Some(k) = opts.cc_filter {
                match g.is_cyclically_k_edge_connected(k) {
                    Ok(true) => {}
                    Ok(false) => return Outcome::Filtered,
                    Err(_) => return Outcome::Failed,
                }
            }
            let copts = CountOptions {
                per_edge: false,
                budget: opts.budget,
            };
            match count::count_with(g, copts) {
                Ok(c) => Outcome::Counted(c.total),
                Err(CountError::Timeout(_)) => Outcome::TimedOut,
                Err(_) => Outcome::Failed,
            }
        })
        .collect();

    let mut rows: BTreeMap<usize, SurveyRow> = BTreeMap::new();
    for (id, (g, outcome)) in corpus.iter().zip(&outcomes).enumerate() {
        if let Outcome::Filtered = outcome {
            continue;
        }
        let row = rows.entry(g.n()).or_insert_with(|| SurveyRow {
            n: g.n(),
            graph_count: 0,
            hamiltonian_count: 0,
            min_hc: None,
            max_hc: None,
            argmax_id: None,
            timeouts: 0,
        });
        row.graph_count += 1;
        match *outcome {
            Outcome::Counted(0) | Outcome::Filtered => {}
            Outcome::Counted(total) => {
                row.hamiltonian_count += 1;
                row.min_hc = Some(row.min_hc.map_or(total, |m| m.min(total)));
                if row.max_hc.is_none_or(|m| total > m) {
                    row.max_hc = Some(total);
                    row.argmax_id = Some(id);
                }
            }
            Outcome::TimedOut => row.timeouts += 1,
            // Graphs the counter rejects (disconnected, too small) are not Hamiltonian.
            Outcome::Failed => {}
        }
    }
    rows.into_values().collect()
}

pub const SURVEY_CSV_HEADER: &str = "n,graphs,hamiltonian,min,max,argmax_id,timeouts";

/// CSV with a fixed column order; absent values are empty fields.
pub fn survey_csv(rows: &[SurveyRow]) -> String {
    let mut out = String::from(SURVEY_CSV_HEADER);
    out.push('\n');
    let opt = |v: Option<u64>| v.map(|x| x.to_string()).unwrap_or_default();
    for r in rows {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{}",
            r.n,
            r.graph_count,
            r.hamiltonian_count,
            opt(r.min_hc),
            opt(r.max_hc),
            opt(r.argmax_id.map(|x| x as u64)),
            r.timeouts
        );
    }
    out
}

/// Fixed-width table in the layout of the CSV.
pub fn survey_table(rows: &[SurveyRow]) -> String {
    let mut out = format!(
        "{:>5} {:>10} {:>12} {:>8} {:>8} {:>10} {:>9}\n",
        "n", "graphs", "hamiltonian", "min", "max", "argmax_id", "timeouts"
    );
    let opt = |v: Option<u64>| v.map(|x| x.to_string()).unwrap_or_else(|| "-".into());
    for r in rows {
        let _ = writeln!(
            out,
            "{:>5} {:>10} {:>12} {:>8} {:>8} {:>10} {:>9}",
            r.n,
            r.graph_count,
            r.hamiltonian_count,
            opt(r.min_hc),
            opt(r.max_hc),
            opt(r.argmax_id.map(|x| x as u64)),
            r.timeouts
        );
    }
    out
}
