//! Witness database keyed by `(n, |A+A|, |AA|)`.
//!
//! Each key keeps the witness with the smallest maximum element; ties go to
//! the lexicographically smallest witness and then to the smallest source tag,
//! which makes [`Dataset::merge`] associative, commutative and idempotent.
//! Witnesses are stored divided by their gcd.
//!
//! File format: UTF-8, LF line endings, header `n,sum,prod,max,set,source`,
//! one record per line sorted by key, e.g.
//! `8,20,22,12,1 2 3 4 6 8 9 12,friable`.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;
use std::io::BufRead;

use num_rational::Ratio;

use crate::bounds::{easy_bounds, grid_size, sez_excludes, spp_count_upper};
use crate::error::{Error, Result};
use crate::normalize::{norm_k, Scheme};
use crate::scan::SubsetView;
use crate::sets::{canonicalize, spp_of, PosIntSet, SppTriple};

pub const HEADER: &str = "n,sum,prod,max,set,source";
pub const EXPORT_HEADER: &str = "n,i,j,kx,ky,lx,ly,k2x,k2y,k3x,k3y";

pub type Key = (u32, u32, u32);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessRecord {
    pub triple: SppTriple,
    pub witness: PosIntSet,
    pub source: String,
}

impl WitnessRecord {
    pub fn max_element(&self) -> u64 {
        self.witness.largest()
    }

    pub fn key(&self) -> Key {
        (self.triple.n, self.triple.sum, self.triple.prod)
    }

    fn rank_cmp(&self, other: &WitnessRecord) -> Ordering {
        self.max_element()
            .cmp(&other.max_element())
            .then_with(|| self.witness.elements().cmp(other.witness.elements()))
            .then_with(|| self.source.cmp(&other.source))
    }

    fn to_line(&self, out: &mut String) {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{}",
            self.triple.n,
            self.triple.sum,
            self.triple.prod,
            self.max_element(),
            self.witness,
            self.source
        );
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IngestOutcome {
    New,
    Improved,
    Unchanged,
}

fn check_tag(tag: &str) -> Result<()> {
    if tag.is_empty() || tag.contains([',', '\n', '\r']) {
        return Err(Error::InvalidParameter(format!(
            "source tag must be nonempty without commas or newlines: {tag:?}"
        )));
    }
    Ok(())
}

/// Collection of minimal-maximum witnesses.
#[derive(Debug, Clone, Default)]
pub struct Dataset {
    records: BTreeMap<Key, WitnessRecord>,
    /// Free-form provenance notes (campaigns run, sets examined). Not persisted.
    pub log: Vec<String>,
}

impl PartialEq for Dataset {
    fn eq(&self, other: &Self) -> bool {
        self.records == other.records
    }
}

impl Eq for Dataset {}

impl Dataset {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    pub fn get(&self, n: u32, i: u32, j: u32) -> Option<&WitnessRecord> {
        self.records.get(&(n, i, j))
    }

    pub fn records(&self) -> impl Iterator<Item = &WitnessRecord> {
        self.records.values()
    }

    pub fn triples(&self) -> impl Iterator<Item = &SppTriple> {
        self.records.values().map(|r| &r.triple)
    }

    fn offer_record(&mut self, rec: WitnessRecord) -> IngestOutcome {
        match self.records.get_mut(&rec.key()) {
            None => {
                self.records.insert(rec.key(), rec);
                IngestOutcome::New
            }
            Some(cur) => {
                if rec.rank_cmp(cur) == Ordering::Less {
                    *cur = rec;
                    IngestOutcome::Improved
                } else {
                    IngestOutcome::Unchanged
                }
            }
        }
    }

    /// Canonicalizes `a`, computes its triple and keeps it if it improves the key.
    pub fn ingest(&mut self, a: &PosIntSet, source: &str) -> Result<IngestOutcome> {
        check_tag(source)?;
        let w = canonicalize(a);
        let triple = spp_of(&w);
        Ok(self.offer_record(WitnessRecord { triple, witness: w, source: source.to_string() }))
    }

    /// Like [`ingest`](Self::ingest), but first checks a caller-supplied triple.
    pub fn ingest_claimed(&mut self, a: &PosIntSet, claimed: SppTriple, source: &str) -> Result<IngestOutcome> {
        let actual = spp_of(a);
        if actual != claimed {
            return Err(Error::Validation(format!(
                "set {{{a}}} has triple {actual}, claimed {claimed}"
            )));
        }
        self.ingest(a, source)
    }

    /// Hot-path ingest from an exhaustive scan; the tag is assumed valid.
    #[inline]
    pub fn offer_view(&mut self, v: &SubsetView, source: &str) -> IngestOutcome {
        let key = (v.n(), v.sum, v.prod);
        let max = v.elements[v.elements.len() - 1] / v.gcd;
        if let Some(cur) = self.records.get(&key) {
            if cur.max_element() < max {
                return IngestOutcome::Unchanged;
            }
        }
        let w: Vec<u64> = v.elements.iter().map(|&x| x / v.gcd).collect();
        let rec = WitnessRecord {
            triple: SppTriple { n: key.0, sum: key.1, prod: key.2 },
            witness: PosIntSet::from_sorted_unchecked(w),
            source: source.to_string(),
        };
        self.offer_record(rec)
    }

    /// Key-wise minimal-maximum union.
    pub fn merge(mut self, other: Dataset) -> Dataset {
        if self.records.len() < other.records.len() {
            return other.merge(self);
        }
        for rec in other.records.into_values() {
            self.offer_record(rec);
        }
        self.log.extend(other.log);
        self
    }

    pub fn merge_from(&mut self, other: &Dataset) {
        for rec in other.records.values() {
            self.offer_record(rec.clone());
        }
        self.log.extend(other.log.iter().cloned());
    }

    pub fn spp_set(&self, n: u32) -> BTreeSet<(u32, u32)> {
        self.records
            .range((n, 0, 0)..=(n, u32::MAX, u32::MAX))
            .map(|(k, _)| (k.1, k.2))
            .collect()
    }

    pub fn sizes(&self) -> BTreeSet<u32> {
        self.records.keys().map(|k| k.0).collect()
    }

    pub fn records_for(&self, n: u32) -> impl Iterator<Item = &WitnessRecord> {
        self.records.range((n, 0, 0)..=(n, u32::MAX, u32::MAX)).map(|(_, r)| r)
    }

    /// `|SPP ∩ data|` against the full grid and against the improved bound.
    pub fn coverage(&self, n: u32) -> Result<(Ratio<u64>, Ratio<u64>)> {
        if n < 3 {
            return Err(Error::Domain("coverage needs n >= 3".into()));
        }
        let have = self.spp_set(n).len() as u64;
        Ok((Ratio::new(have, grid_size(n)), Ratio::new(have, spp_count_upper(n))))
    }

    /// `counts[k-1]` = number of stored witnesses of size `n` containing `k`.
    pub fn usage_histogram(&self, n: u32, k_max: u64) -> Vec<u64> {
        let mut counts = vec![0u64; k_max as usize];
        for r in self.records_for(n) {
            for &x in r.witness.elements() {
                if (1..=k_max).contains(&x) {
                    counts[(x - 1) as usize] += 1;
                }
            }
        }
        counts
    }

    /// Key minimizing `max(i, j)`, then `i + j`, then `i`.
    pub fn minimax_report(&self, n: u32) -> Option<&WitnessRecord> {
        self.records_for(n).min_by_key(|r| {
            let (i, j) = r.triple.pair();
            (i.max(j), i + j, i)
        })
    }

    /// Records with `K_n(i) + 2 K_n(j) <= threshold`, `n >= 3`, in key order.
    pub fn envelope_report(&self, threshold: f64) -> Vec<&WitnessRecord> {
        self.records
            .values()
            .filter(|r| r.triple.n >= 3)
            .filter(|r| {
                let t = r.triple;
                match (norm_k(t.n, t.sum as f64), norm_k(t.n, t.prod as f64)) {
                    (Ok(x), Ok(y)) => x + 2.0 * y <= threshold,
                    _ => false,
                }
            })
            .collect()
    }

    /// Full-scan revalidation of every stored record.
    pub fn revalidate(&self) -> Result<()> {
        for (key, r) in &self.records {
            let t = spp_of(&r.witness);
            if (t.n, t.sum, t.prod) != *key || t != r.triple {
                return Err(Error::Validation(format!(
                    "record {key:?} has witness {{{}}} with triple {t}",
                    r.witness
                )));
            }
            if r.witness.gcd() != 1 {
                return Err(Error::Validation(format!("record {key:?} witness is not primitive")));
            }
            let (lo, hi) = easy_bounds(t.n);
            if !(lo..=hi).contains(&t.sum) || !(lo..=hi).contains(&t.prod) {
                return Err(Error::Validation(format!("record {key:?} violates easy bounds")));
            }
            if sez_excludes(t.n, t.sum, t.prod) {
                return Err(Error::Validation(format!("record {key:?} lies in the Sidon exclusion zone")));
            }
        }
        Ok(())
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::with_capacity(64 * (self.records.len() + 1));
        out.push_str(HEADER);
        out.push('\n');
        for r in self.records.values() {
            r.to_line(&mut out);
        }
        out
    }

    pub fn from_csv(text: &str) -> Result<Dataset> {
        Self::read(text.as_bytes())
    }

    /// Reads and revalidates a dataset file.
    pub fn read<R: BufRead>(reader: R) -> Result<Dataset> {
        let mut ds = Dataset::new();
        let mut lines = reader.lines().enumerate();
        match lines.next() {
            Some((_, Ok(h))) if h == HEADER => {}
            Some((_, Ok(h))) => {
                return Err(Error::Parse { line: 1, msg: format!("expected header {HEADER:?}, got {h:?}") })
            }
            Some((_, Err(e))) => return Err(e.into()),
            None => return Err(Error::Parse { line: 1, msg: "missing header".into() }),
        }
        for (idx, line) in lines {
            let line = line?;
            let lineno = idx + 1;
            if line.is_empty() {
                continue;
            }
            let perr = |msg: String| Error::Parse { line: lineno, msg };
            let fields: Vec<&str> = line.splitn(6, ',').collect();
            if fields.len() != 6 {
                return Err(perr(format!("expected 6 fields, got {}", fields.len())));
            }
            let num = |s: &str, what: &str| -> Result<u64> {
                s.parse::<u64>().map_err(|_| perr(format!("bad {what}: {s:?}")))
            };
            let n = num(fields[0], "n")? as u32;
            let i = num(fields[1], "sum")? as u32;
            let j = num(fields[2], "prod")? as u32;
            let max = num(fields[3], "max")?;
            let witness: PosIntSet = fields[4].parse().map_err(|e: Error| perr(e.to_string()))?;
            let source = fields[5];
            check_tag(source).map_err(|e| perr(e.to_string()))?;
            if witness.largest() != max {
                return Err(perr(format!("max field {max} disagrees with witness max {}", witness.largest())));
            }
            if witness.gcd() != 1 {
                return Err(perr("witness is not gcd-primitive".into()));
            }
            let claimed = SppTriple { n, sum: i, prod: j };
            let actual = spp_of(&witness);
            if actual != claimed {
                return Err(perr(format!("witness has triple {actual}, line claims {claimed}")));
            }
            if ds.records.contains_key(&(n, i, j)) {
                return Err(perr(format!("duplicate key ({n},{i},{j})")));
            }
            ds.records.insert((n, i, j), WitnessRecord { triple: claimed, witness, source: source.to_string() });
        }
        Ok(ds)
    }

    pub fn load(path: &std::path::Path) -> Result<Dataset> {
        let f = std::fs::File::open(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        Self::read(std::io::BufReader::new(f))
    }

    pub fn save(&self, path: &std::path::Path) -> Result<()> {
        std::fs::write(path, self.to_csv()).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
    }

    /// Normalized plot data: `n,i,j,kx,ky,lx,ly,k2x,k2y,k3x,k3y` for `n >= 3`.
    pub fn export_csv(&self) -> String {
        let mut out = String::from(EXPORT_HEADER);
        out.push('\n');
        for r in self.records.values().filter(|r| r.triple.n >= 3) {
            let t = r.triple;
            let _ = write!(out, "{},{},{}", t.n, t.sum, t.prod);
            for s in [Scheme::K, Scheme::L, Scheme::K2, Scheme::K3] {
                let x = s.eval(t.n, t.sum as f64).unwrap_or(f64::NAN);
                let y = s.eval(t.n, t.prod as f64).unwrap_or(f64::NAN);
                let _ = write!(out, ",{x:.12},{y:.12}");
            }
            out.push('\n');
        }
        out
    }
}
