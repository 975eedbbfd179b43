//! Exact `SPP(n)` for small `n`: witness searches, exclusion rules, and a
//! classification of every grid point.
//!
//! A grid point `(i, j)` is
//! - witnessed when some searched set attains it,
//! - excluded by the Sidon exclusion zone when `j <= 3n-4` and `i` is not maximal,
//! - excluded by search when `i <= 3n-4`, `j` is not maximal, and the
//!   small-sumset search (which sees every such set) never produced it,
//! - unresolved otherwise.

pub mod tables;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::bounds::{easy_bounds, sez_excludes};
use crate::error::{Error, Result};
use crate::generators::{divisors, scan_into, MAX_DIVISOR_COUNT};
use crate::par::{self, Exec};
use crate::realsearch::{small_sumset_candidate_count, small_sumset_pairs, spp_real_delta, RealWitness};
use crate::scan::GroundSet;
use crate::store::Dataset;

pub use tables::{verify_witness_tables, TableCheck};

/// Interval scanned exhaustively for witnesses.
pub const INTERVAL_N: u64 = 36;
/// Divisor subsets are swept for every `M` up to this bound.
pub const DIVISOR_SWEEP_N: u64 = 2048;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Status {
    Witnessed,
    SezExcluded,
    SearchExcluded,
    Unresolved,
}

impl Status {
    pub fn name(self) -> &'static str {
        match self {
            Status::Witnessed => "witnessed",
            Status::SezExcluded => "sezExcluded",
            Status::SearchExcluded => "searchExcluded",
            Status::Unresolved => "unresolved",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProofEntry {
    pub pair: (u32, u32),
    pub status: Status,
    pub evidence: String,
}

#[derive(Debug, Clone)]
pub struct ExactResult {
    pub n: u32,
    pub integer_pairs: BTreeSet<(u32, u32)>,
    pub real_delta: BTreeMap<(u32, u32), RealWitness>,
    pub proof_log: Vec<ProofEntry>,
    pub witnesses: Dataset,
    /// Enumeration sizes, for audit.
    pub log: Vec<String>,
}

impl ExactResult {
    /// `i,j,status,evidence` for every grid point, evidence quoted.
    pub fn certificate(&self) -> String {
        certificate(&self.proof_log)
    }

    pub fn count(&self, status: Status) -> usize {
        self.proof_log.iter().filter(|e| e.status == status).count()
    }
}

fn certificate(log: &[ProofEntry]) -> String {
    let mut out = String::from("i,j,status,evidence\n");
    for e in log {
        out.push_str(&format!("{},{},{},\"{}\"\n", e.pair.0, e.pair.1, e.status, e.evidence.replace('"', "'")));
    }
    out
}

/// Every `n`-subset of `[36]`, of `{2^0, ..., 2^⌊(3n-4)/2⌋}`, of the divisors
/// of each `M <= 2048`, and every small-sumset candidate.
pub fn witness_search(n: u32, exec: Exec) -> Result<(Dataset, Vec<String>)> {
    let k = n as usize;
    let mut log = Vec::new();
    let mut ds = scan_into(&GroundSet::interval(INTERVAL_N)?, exec, k, k, "interval-36");
    log.push(format!("[{INTERVAL_N}] subsets of size {n}: {} pairs", ds.spp_set(n).len()));

    let top = if n >= 2 { (3 * n - 4) / 2 } else { 0 };
    let powers: Vec<u64> = (0..=top).map(|e| 1u64 << e).collect();
    if powers.len() >= k {
        ds.merge_from(&scan_into(&GroundSet::new(powers)?, exec, k, k, "powers-of-2"));
    }
    log.push(format!("powers of 2 up to 2^{top}"));

    let ms: Vec<u64> = (1..=DIVISOR_SWEEP_N)
        .filter(|&m| (k..=MAX_DIVISOR_COUNT).contains(&crate::generators::divisor_count(m)))
        .collect();
    log.push(format!("divisor sweep: {} values of M <= {DIVISOR_SWEEP_N}", ms.len()));
    let swept = par::map_reduce(
        exec,
        ms,
        |m| -> Result<Dataset> {
            Ok(scan_into(&GroundSet::new(divisors(m)?)?, Exec::Sequential, k, k, "divisors"))
        },
        || Ok(Dataset::new()),
        |a, b| Ok(a?.merge(b?)),
    )?;
    ds.merge_from(&swept);

    if n >= 3 {
        ds.merge_from(&small_sumset_pairs(n, exec)?);
        log.push(format!("small-sumset candidates: {}", small_sumset_candidate_count(n)?));
    }
    Ok((ds, log))
}

/// Classifies every grid point for `n` given the witnesses found.
pub fn classify(n: u32, witnesses: &Dataset, exec: Exec) -> Result<Vec<ProofEntry>> {
    let (lo, hi) = easy_bounds(n);
    let small: BTreeSet<(u32, u32)> = if n >= 3 {
        small_sumset_pairs(n, exec)?.spp_set(n)
    } else {
        BTreeSet::new()
    };
    let searched = |i: u32, j: u32| n >= 3 && i <= 3 * n - 4 && j < hi;
    let mut out = Vec::new();
    for i in lo..=hi {
        for j in lo..=hi {
            let entry = if let Some(w) = witnesses.get(n, i, j) {
                if sez_excludes(n, i, j) || (searched(i, j) && !small.contains(&(i, j))) {
                    return Err(Error::Internal(format!("({i},{j}) is witnessed by {} but excluded", w.witness)));
                }
                ProofEntry { pair: (i, j), status: Status::Witnessed, evidence: format!("{} [{}]", w.witness, w.source) }
            } else if sez_excludes(n, i, j) {
                ProofEntry {
                    pair: (i, j),
                    status: Status::SezExcluded,
                    evidence: format!("|AA| <= {} forces a Sidon set", 3 * n - 4),
                }
            } else if searched(i, j) {
                ProofEntry {
                    pair: (i, j),
                    status: Status::SearchExcluded,
                    evidence: format!("|A+A| <= {}: not produced by the small-sumset search", 3 * n - 4),
                }
            } else {
                ProofEntry { pair: (i, j), status: Status::Unresolved, evidence: String::new() }
            };
            out.push(entry);
        }
    }
    Ok(out)
}

/// `SPP(n)` and the real-only pairs for `1 <= n <= 6`.
pub fn compute_exact(n: u32, exec: Exec) -> Result<ExactResult> {
    if !(1..=6).contains(&n) {
        return Err(Error::Domain(format!("exact computation needs 1 <= n <= 6, got {n}")));
    }
    let (witnesses, log) = witness_search(n, exec)?;
    let proof_log = classify(n, &witnesses, exec)?;
    let unresolved: Vec<String> = proof_log
        .iter()
        .filter(|e| e.status == Status::Unresolved)
        .map(|e| format!("({},{})", e.pair.0, e.pair.1))
        .collect();
    if !unresolved.is_empty() {
        return Err(Error::Incomplete(format!("unresolved grid points for n={n}: {}", unresolved.join(" "))));
    }
    let integer_pairs = proof_log.iter().filter(|e| e.status == Status::Witnessed).map(|e| e.pair).collect();
    let real_delta = if n >= 3 { spp_real_delta(n, exec)? } else { BTreeMap::new() };
    Ok(ExactResult { n, integer_pairs, real_delta, proof_log, witnesses, log })
}

/// Classification of the `n = 7` grid by the same searches.
#[derive(Debug, Clone)]
pub struct PartialReport {
    pub proof_log: Vec<ProofEntry>,
    pub unresolved: BTreeSet<(u32, u32)>,
    pub log: Vec<String>,
}

impl PartialReport {
    pub fn certificate(&self) -> String {
        certificate(&self.proof_log)
    }
}

pub fn check_spp7_partial(exec: Exec) -> Result<PartialReport> {
    let (witnesses, log) = witness_search(7, exec)?;
    let proof_log = classify(7, &witnesses, exec)?;
    let unresolved = proof_log.iter().filter(|e| e.status == Status::Unresolved).map(|e| e.pair).collect();
    Ok(PartialReport { proof_log, unresolved, log })
}
