//! Candidate-set generators and search campaigns.
//!
//! The `enumerate_*`, `*_closure` and `divisor_subsets` functions stream
//! [`PosIntSet`]s into a sink and return how many they emitted. Campaigns
//! ([`SearchCampaign`]) feed a [`Dataset`] directly and use the incremental
//! scanner where a whole subset lattice is walked.

pub mod friable;
pub mod random;

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::par::{self, Exec};
use crate::scan::{GroundSet, MAX_GROUND};
use crate::sets::{PosIntSet, ELEMENT_CAP};
use crate::store::Dataset;

pub use friable::{friable_prefix, FriableSet};
pub use random::{derive_seed, random_divisor_subset, random_interval_subset, SplitMix64};

/// Largest divisor count accepted by [`divisor_subsets`].
pub const MAX_DIVISOR_COUNT: usize = 32;

/// Sorted divisors of `n`.
pub fn divisors(n: u64) -> Result<Vec<u64>> {
    if n == 0 {
        return Err(Error::InvalidParameter("N must be positive".into()));
    }
    let mut lo = Vec::new();
    let mut hi = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            lo.push(d);
            if d * d != n {
                hi.push(n / d);
            }
        }
        d += 1;
    }
    lo.extend(hi.into_iter().rev());
    Ok(lo)
}

pub fn divisor_count(n: u64) -> usize {
    divisors(n).map_or(0, |d| d.len())
}

/// Every nonempty `A ⊆ {1..N}` with `|A| <= n_max`, in lexicographic order.
pub fn enumerate_interval_subsets<F: FnMut(&PosIntSet)>(big_n: u64, n_max: usize, mut sink: F) -> Result<u64> {
    if big_n == 0 || big_n as usize > MAX_GROUND {
        return Err(Error::InvalidParameter(format!("N must be in 1..={MAX_GROUND}, got {big_n}")));
    }
    let ground: Vec<u64> = (1..=big_n).collect();
    Ok(subsets_of(&ground, n_max, &mut sink))
}

fn subsets_of<F: FnMut(&PosIntSet)>(ground: &[u64], n_max: usize, sink: &mut F) -> u64 {
    fn rec<F: FnMut(&PosIntSet)>(ground: &[u64], start: usize, cur: &mut Vec<u64>, n_max: usize, sink: &mut F) -> u64 {
        let mut count = 0;
        for k in start..ground.len() {
            cur.push(ground[k]);
            sink(&PosIntSet::from_sorted_unchecked(cur.clone()));
            count += 1;
            if cur.len() < n_max {
                count += rec(ground, k + 1, cur, n_max, sink);
            }
            cur.pop();
        }
        count
    }
    if n_max == 0 {
        return 0;
    }
    rec(ground, 0, &mut Vec::new(), n_max, sink)
}

/// `c·B + t` for every `B ⊆ {0..d_max}` containing `0` and `d_max`,
/// `1 <= c <= dil_max`, `1 <= t <= shift_max`.
pub fn enumerate_diameter_family<F: FnMut(&PosIntSet)>(
    d_max: u64,
    dil_max: u64,
    shift_max: u64,
    mut sink: F,
) -> Result<u64> {
    if d_max == 0 || d_max > 62 {
        return Err(Error::InvalidParameter(format!("dMax must be in 1..=62, got {d_max}")));
    }
    let mut count = 0;
    for interior in 0..(1u64 << (d_max - 1)) {
        let pattern = diameter_pattern(d_max, interior);
        for c in 1..=dil_max {
            for t in 1..=shift_max {
                sink(&place(&pattern, c, t)?);
                count += 1;
            }
        }
    }
    Ok(count)
}

fn diameter_pattern(d: u64, interior: u64) -> Vec<u64> {
    let mut p = vec![0];
    p.extend((1..d).filter(|k| interior >> (k - 1) & 1 == 1));
    p.push(d);
    p
}

fn place(pattern: &[u64], c: u64, t: u64) -> Result<PosIntSet> {
    let v = pattern
        .iter()
        .map(|&b| c.checked_mul(b).and_then(|x| x.checked_add(t)).filter(|&x| x <= ELEMENT_CAP))
        .collect::<Option<Vec<u64>>>()
        .ok_or(Error::ElementTooLarge { value: ELEMENT_CAP + 1, cap: ELEMENT_CAP })?;
    Ok(PosIntSet::from_sorted_unchecked(v))
}

/// Every nonempty subset of the divisors of `N`.
pub fn divisor_subsets<F: FnMut(&PosIntSet)>(big_n: u64, mut sink: F) -> Result<u64> {
    let divs = checked_divisors(big_n)?;
    Ok(subsets_of(&divs, divs.len(), &mut sink))
}

fn checked_divisors(big_n: u64) -> Result<Vec<u64>> {
    let divs = divisors(big_n)?;
    if divs.len() > MAX_DIVISOR_COUNT {
        return Err(Error::InvalidParameter(format!(
            "N = {big_n} has {} divisors (limit {MAX_DIVISOR_COUNT})",
            divs.len()
        )));
    }
    Ok(divs)
}

/// `A + t` for `1 <= t <= t_max`.
pub fn shift_closure<F: FnMut(&PosIntSet)>(a: &PosIntSet, t_max: u64, mut sink: F) -> Result<u64> {
    for t in 1..=t_max {
        sink(&a.shifted(t)?);
    }
    Ok(t_max)
}

/// `A ∪ {b}` for `b ∈ [1, b_max] \ A`.
pub fn augment_closure<F: FnMut(&PosIntSet)>(a: &PosIntSet, b_max: u64, mut sink: F) -> Result<u64> {
    let mut count = 0;
    for b in (1..=b_max).filter(|&b| !a.contains(b)) {
        sink(&a.with(b)?);
        count += 1;
    }
    Ok(count)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    ExhaustiveInterval,
    DiameterFamily,
    DivisorSubsets,
    RandomInterval,
    RandomDivisors,
    FriablePrefix,
    Shift,
    Augment,
}

impl Strategy {
    pub const ALL: [Strategy; 8] = [
        Strategy::ExhaustiveInterval,
        Strategy::DiameterFamily,
        Strategy::DivisorSubsets,
        Strategy::RandomInterval,
        Strategy::RandomDivisors,
        Strategy::FriablePrefix,
        Strategy::Shift,
        Strategy::Augment,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Strategy::ExhaustiveInterval => "ExhaustiveInterval",
            Strategy::DiameterFamily => "DiameterFamily",
            Strategy::DivisorSubsets => "DivisorSubsets",
            Strategy::RandomInterval => "RandomInterval",
            Strategy::RandomDivisors => "RandomDivisors",
            Strategy::FriablePrefix => "FriablePrefix",
            Strategy::Shift => "Shift",
            Strategy::Augment => "Augment",
        }
    }

    pub fn needs_seed(self) -> bool {
        matches!(self, Strategy::RandomInterval | Strategy::RandomDivisors)
    }

    pub fn needs_input(self) -> bool {
        matches!(self, Strategy::Shift | Strategy::Augment)
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Strategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key: String = s.chars().filter(|c| *c != '-' && *c != '_').collect::<String>().to_ascii_lowercase();
        Strategy::ALL
            .into_iter()
            .find(|st| st.name().to_ascii_lowercase() == key)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown strategy {s:?}")))
    }
}

/// One search run.
///
/// Parameter meaning per strategy:
///
/// | strategy | uses |
/// |---|---|
/// | ExhaustiveInterval | subsets of `{1..N}` with `nMin <= |A| <= nMax` |
/// | DiameterFamily | patterns of diameter `1..=N`, dilations `1..=dilMax`, shifts `1..=shiftMax` |
/// | DivisorSubsets | subsets of `divisors(M)` for every `M <= N` with at most 32 divisors |
/// | RandomInterval | `sampleCount` subsets of `{1..N}` per size |
/// | RandomDivisors | `sampleCount` subsets of `divisors(N)` per size |
/// | FriablePrefix | `Ψ_n^p` for primes `p <= y` while the largest element is `<= N` |
/// | Shift, Augment | closures of an input dataset with `shiftMax` / `augmentMax` |
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchCampaign {
    pub strategy: Strategy,
    pub big_n: u64,
    pub n_min: usize,
    pub n_max: usize,
    pub y: u64,
    pub seed: Option<u64>,
    pub sample_count: u64,
    pub shift_max: u64,
    pub augment_max: u64,
    pub dil_max: u64,
    pub source_tag: String,
}

impl SearchCampaign {
    pub fn new(strategy: Strategy) -> Self {
        SearchCampaign {
            strategy,
            big_n: 1,
            n_min: 1,
            n_max: 64,
            y: 2,
            seed: None,
            sample_count: 100,
            shift_max: 256,
            augment_max: 256,
            dil_max: 1,
            source_tag: default_tag(strategy).to_string(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidParameter(m));
        if self.n_min < 1 {
            return bad("nMin must be >= 1".into());
        }
        if self.n_max > 64 || self.n_max < self.n_min {
            return bad(format!("need nMin <= nMax <= 64, got {}..{}", self.n_min, self.n_max));
        }
        if self.big_n < 1 {
            return bad("N must be >= 1".into());
        }
        if self.source_tag.is_empty() || self.source_tag.contains([',', '\n', '\r']) {
            return bad(format!("bad sourceTag {:?}", self.source_tag));
        }
        if self.strategy.needs_seed() && self.seed.is_none() {
            return bad(format!("strategy {} needs an explicit seed", self.strategy));
        }
        match self.strategy {
            Strategy::ExhaustiveInterval if self.big_n as usize > MAX_GROUND => {
                bad(format!("N must be <= {MAX_GROUND} for {}", self.strategy))
            }
            Strategy::DiameterFamily if self.big_n > 62 => bad("N (largest diameter) must be <= 62".into()),
            Strategy::FriablePrefix if !friable::is_prime(self.y) => bad(format!("y = {} is not prime", self.y)),
            _ => Ok(()),
        }
    }

    /// Parses `key=value` lines; `#` starts a comment.
    pub fn parse_config(text: &str) -> Result<Self> {
        let mut strategy = None;
        let mut pairs = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| Error::Parse { line: idx + 1, msg: format!("expected key=value, got {line:?}") })?;
            let (k, v) = (k.trim(), v.trim());
            if k == "strategy" {
                strategy = Some(v.parse::<Strategy>()?);
            } else {
                pairs.push((idx + 1, k.to_string(), v.to_string()));
            }
        }
        let strategy = strategy.ok_or(Error::Parse { line: 0, msg: "missing strategy".into() })?;
        let mut c = SearchCampaign::new(strategy);
        for (line, k, v) in pairs {
            c.set(&k, &v).map_err(|e| Error::Parse { line, msg: e.to_string() })?;
        }
        c.validate()?;
        Ok(c)
    }

    /// Sets one field by its config key.
    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        let int = || -> Result<u64> {
            value
                .parse::<u64>()
                .map_err(|_| Error::InvalidParameter(format!("{key}: not an integer: {value:?}")))
        };
        match key {
            "strategy" => self.strategy = value.parse()?,
            "N" => self.big_n = int()?,
            "nMin" => self.n_min = int()? as usize,
            "nMax" => self.n_max = int()? as usize,
            "y" => self.y = int()?,
            "seed" => self.seed = Some(int()?),
            "sampleCount" => self.sample_count = int()?,
            "shiftMax" => self.shift_max = int()?,
            "augmentMax" => self.augment_max = int()?,
            "dilMax" => self.dil_max = int()?,
            "sourceTag" => self.source_tag = value.to_string(),
            _ => return Err(Error::InvalidParameter(format!("unknown key {key:?}"))),
        }
        Ok(())
    }

    /// Runs the campaign; `input` is the dataset closed under shifts or augmentation.
    pub fn run(&self, input: Option<&Dataset>, exec: Exec) -> Result<Dataset> {
        self.validate()?;
        let tag = self.source_tag.as_str();
        let (lo, hi) = (self.n_min, self.n_max);
        let mut out = match self.strategy {
            Strategy::ExhaustiveInterval => {
                let g = GroundSet::interval(self.big_n)?;
                scan_into(&g, exec, lo, hi, tag)
            }
            Strategy::DiameterFamily => {
                let items: Vec<(u64, u64)> = (1..=self.big_n)
                    .flat_map(|d| {
                        let chunks = 1u64 << (d - 1).saturating_sub(10);
                        (0..chunks).map(move |c| (d, c))
                    })
                    .collect();
                par::map_reduce(
                    exec,
                    items,
                    |(d, chunk)| -> Result<Dataset> {
                        let mut ds = Dataset::new();
                        let per = (1u64 << (d - 1)).min(1 << 10);
                        for interior in chunk * per..(chunk + 1) * per {
                            if !(lo..=hi).contains(&(interior.count_ones() as usize + 2)) {
                                continue;
                            }
                            let pattern = diameter_pattern(d, interior);
                            for c in 1..=self.dil_max {
                                for t in 1..=self.shift_max {
                                    ds.ingest(&place(&pattern, c, t)?, tag)?;
                                }
                            }
                        }
                        Ok(ds)
                    },
                    || Ok(Dataset::new()),
                    merge_results,
                )?
            }
            Strategy::DivisorSubsets => {
                let mut skipped = Vec::new();
                let mut grounds = Vec::new();
                for m in 1..=self.big_n {
                    match checked_divisors(m) {
                        Ok(d) => grounds.push(d),
                        Err(_) => skipped.push(m),
                    }
                }
                let mut ds = par::map_reduce(
                    exec,
                    grounds,
                    |d| match GroundSet::new(d) {
                        Ok(g) => scan_into(&g, Exec::Sequential, lo, hi, tag),
                        Err(_) => Dataset::new(),
                    },
                    Dataset::new,
                    Dataset::merge,
                );
                if !skipped.is_empty() {
                    ds.log.push(format!("skipped N with more than {MAX_DIVISOR_COUNT} divisors: {skipped:?}"));
                }
                ds
            }
            Strategy::RandomInterval | Strategy::RandomDivisors => {
                let seed = self.seed.expect("validated");
                let pool = if self.strategy == Strategy::RandomInterval {
                    self.big_n
                } else {
                    divisors(self.big_n)?.len() as u64
                };
                let items: Vec<(u64, u64)> = (lo as u64..=(hi as u64).min(pool))
                    .flat_map(|n| (0..self.sample_count).map(move |k| (n, k)))
                    .collect();
                let interval = self.strategy == Strategy::RandomInterval;
                par::map_reduce(
                    exec,
                    items,
                    |(n, k)| -> Result<Dataset> {
                        let s = derive_seed(seed, &[self.big_n, n, k]);
                        let a = if interval {
                            random_interval_subset(self.big_n, n, s)?
                        } else {
                            random_divisor_subset(self.big_n, n, s)?
                        };
                        let mut ds = Dataset::new();
                        ds.ingest(&a, tag)?;
                        Ok(ds)
                    },
                    || Ok(Dataset::new()),
                    merge_results,
                )?
            }
            Strategy::FriablePrefix => {
                let mut ds = Dataset::new();
                for p in friable::primes_up_to(self.y) {
                    let elems: Vec<u64> = friable::SmoothNumbers::new(p, self.big_n).take(hi).collect();
                    for n in lo..=elems.len() {
                        ds.ingest(&PosIntSet::from_sorted_unchecked(elems[..n].to_vec()), tag)?;
                    }
                }
                ds
            }
            Strategy::Shift | Strategy::Augment => {
                let input = input.ok_or_else(|| {
                    Error::InvalidParameter(format!("strategy {} needs an input dataset", self.strategy))
                })?;
                let bases: Vec<PosIntSet> = input.records().map(|r| r.witness.clone()).collect();
                let shift = self.strategy == Strategy::Shift;
                par::map_reduce(
                    exec,
                    bases,
                    |a| -> Result<Dataset> {
                        let mut ds = Dataset::new();
                        let mut res = Ok(());
                        let mut keep = |b: &PosIntSet| {
                            if res.is_ok() && (lo..=hi).contains(&b.len()) {
                                res = ds.ingest(b, tag).map(|_| ());
                            }
                        };
                        if shift {
                            shift_closure(&a, self.shift_max, &mut keep)?;
                        } else {
                            augment_closure(&a, self.augment_max, &mut keep)?;
                        }
                        res?;
                        Ok(ds)
                    },
                    || Ok(Dataset::new()),
                    merge_results,
                )?
            }
        };
        out.log.insert(0, format!("campaign {}", self.to_config().replace('\n', " ").trim_end()));
        Ok(out)
    }

    /// Effective configuration in config-file form.
    pub fn to_config(&self) -> String {
        let mut s = format!(
            "strategy={}\nN={}\nnMin={}\nnMax={}\ny={}\n",
            self.strategy, self.big_n, self.n_min, self.n_max, self.y
        );
        if let Some(seed) = self.seed {
            s.push_str(&format!("seed={seed}\n"));
        }
        s.push_str(&format!(
            "sampleCount={}\nshiftMax={}\naugmentMax={}\ndilMax={}\nsourceTag={}\n",
            self.sample_count, self.shift_max, self.augment_max, self.dil_max, self.source_tag
        ));
        s
    }
}

fn default_tag(s: Strategy) -> &'static str {
    match s {
        Strategy::ExhaustiveInterval => "interval",
        Strategy::DiameterFamily => "diameter",
        Strategy::DivisorSubsets => "divisors",
        Strategy::RandomInterval => "random",
        Strategy::RandomDivisors => "random-divisors",
        Strategy::FriablePrefix => "friable",
        Strategy::Shift => "shift",
        Strategy::Augment => "augment",
    }
}

fn merge_results(a: Result<Dataset>, b: Result<Dataset>) -> Result<Dataset> {
    Ok(a?.merge(b?))
}

/// Feeds every subset of `g` with size in `lo..=hi` into a fresh dataset.
pub fn scan_into(g: &GroundSet, exec: Exec, lo: usize, hi: usize, tag: &str) -> Dataset {
    g.scan_reduce(
        exec,
        lo,
        hi,
        Dataset::new,
        |ds, v| {
            ds.offer_view(v, tag);
        },
        Dataset::merge,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn collect<F: FnOnce(&mut dyn FnMut(&PosIntSet)) -> Result<u64>>(f: F) -> (u64, Vec<Vec<u64>>) {
        let mut v = Vec::new();
        let n = f(&mut |a: &PosIntSet| v.push(a.elements().to_vec())).unwrap();
        (n, v)
    }

    fn binom(n: u64, k: u64) -> u64 {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn divisor_lists() {
        assert_eq!(divisors(1).unwrap(), vec![1]);
        assert_eq!(divisors(12).unwrap(), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(36).unwrap(), vec![1, 2, 3, 4, 6, 9, 12, 18, 36]);
        assert!(divisors(0).is_err());
        let excluded: Vec<u64> = (1..=2048).filter(|&n| divisor_count(n) > MAX_DIVISOR_COUNT).collect();
        assert_eq!(excluded, vec![1260, 1440, 1680, 1800, 1980, 2016]);
    }

    #[test]
    fn interval_subsets() {
        assert_eq!(enumerate_interval_subsets(4, 4, |_| {}).unwrap(), 15);
        let (n, v) = collect(|s| enumerate_interval_subsets(1, 3, s));
        assert_eq!((n, v), (1, vec![vec![1]]));
        assert!(enumerate_interval_subsets(65, 2, |_| {}).is_err());
        for big in [5u64, 12, 20] {
            for n_max in [1usize, 3, 6] {
                let mut seen = std::collections::BTreeSet::new();
                let c = enumerate_interval_subsets(big, n_max, |a| {
                    assert!(a.len() <= n_max);
                    assert!(seen.insert(a.elements().to_vec()));
                })
                .unwrap();
                let want: u64 = (1..=n_max as u64).map(|k| binom(big, k)).sum();
                assert_eq!(c, want);
            }
        }
    }

    #[test]
    fn diameter_family() {
        let (n, v) = collect(|s| enumerate_diameter_family(2, 1, 1, s));
        assert_eq!(n, 2);
        assert_eq!(v, vec![vec![1, 3], vec![1, 2, 3]]);
        assert_eq!(enumerate_diameter_family(3, 1, 1, |_| {}).unwrap(), 4);
        let (_, v) = collect(|s| enumerate_diameter_family(1, 2, 2, s));
        let mut v = v;
        v.sort();
        assert_eq!(v, vec![vec![1, 2], vec![1, 3], vec![2, 3], vec![2, 4]]);
    }

    #[test]
    fn divisor_subset_counts() {
        assert_eq!(divisor_subsets(6, |_| {}).unwrap(), 15);
        assert_eq!(divisor_subsets(12, |_| {}).unwrap(), 63);
        let (n, v) = collect(|s| divisor_subsets(1, s));
        assert_eq!((n, v), (1, vec![vec![1]]));
        assert!(divisor_subsets(1260, |_| {}).is_err());
    }

    #[test]
    fn closures() {
        let s = |v: &[u64]| PosIntSet::new(v.to_vec()).unwrap();
        let (n, v) = collect(|k| shift_closure(&s(&[1, 2]), 2, k));
        assert_eq!((n, v), (2, vec![vec![2, 3], vec![3, 4]]));
        let (n, v) = collect(|k| shift_closure(&s(&[1]), 1, k));
        assert_eq!((n, v), (1, vec![vec![2]]));
        assert_eq!(shift_closure(&s(&[1, 2, 4]), 3, |_| {}).unwrap(), 3);
        let (n, v) = collect(|k| augment_closure(&s(&[1, 2]), 3, k));
        assert_eq!((n, v), (1, vec![vec![1, 2, 3]]));
        let (_, v) = collect(|k| augment_closure(&s(&[1]), 2, k));
        assert_eq!(v, vec![vec![1, 2]]);
        let (_, v) = collect(|k| augment_closure(&s(&[2, 3]), 4, k));
        assert_eq!(v, vec![vec![1, 2, 3], vec![2, 3, 4]]);
    }

    #[test]
    fn config_parsing() {
        let c = SearchCampaign::parse_config(
            "# test\nstrategy=RandomInterval\nN=50\nnMin=3\nnMax=6\nseed=7\nsampleCount=10\nsourceTag=rnd\n",
        )
        .unwrap();
        assert_eq!(c.strategy, Strategy::RandomInterval);
        assert_eq!((c.big_n, c.n_min, c.n_max, c.seed), (50, 3, 6, Some(7)));
        assert_eq!(SearchCampaign::parse_config(&c.to_config()).unwrap(), c);
        assert!(SearchCampaign::parse_config("strategy=RandomInterval\nN=50\n").is_err());
        assert!(SearchCampaign::parse_config("strategy=ExhaustiveInterval\nnMax=65\n").is_err());
        assert!(SearchCampaign::parse_config("strategy=ExhaustiveInterval\nnMin=0\n").is_err());
        assert!(SearchCampaign::parse_config("strategy=ExhaustiveInterval\nN=0\n").is_err());
        assert!(SearchCampaign::parse_config("strategy=Bogus\n").is_err());
        assert!(SearchCampaign::parse_config("strategy=FriablePrefix\nfoo=1\n").is_err());
        assert_eq!("friable-prefix".parse::<Strategy>().unwrap(), Strategy::FriablePrefix);
    }

    #[test]
    fn campaigns_match_brute_force() {
        let mut c = SearchCampaign::new(Strategy::ExhaustiveInterval);
        c.big_n = 10;
        c.n_max = 5;
        let a = c.run(None, Exec::Parallel).unwrap();
        let b = c.run(None, Exec::Sequential).unwrap();
        assert_eq!(a, b);
        let mut brute = Dataset::new();
        enumerate_interval_subsets(10, 5, |s| {
            brute.ingest(s, "interval").unwrap();
        })
        .unwrap();
        assert_eq!(a, brute);
        a.revalidate().unwrap();

        let mut d = SearchCampaign::new(Strategy::DivisorSubsets);
        d.big_n = 60;
        let ds = d.run(None, Exec::Parallel).unwrap();
        let mut brute = Dataset::new();
        for m in 1..=60 {
            divisor_subsets(m, |s| {
                brute.ingest(s, "divisors").unwrap();
            })
            .unwrap();
        }
        assert_eq!(ds, brute);
    }

    #[test]
    fn other_campaigns() {
        let mut f = SearchCampaign::new(Strategy::FriablePrefix);
        f.big_n = 12;
        f.y = 3;
        let ds = f.run(None, Exec::Sequential).unwrap();
        assert!(ds.get(8, 20, 22).is_some());
        // 2-smooth prefixes {1} and {1,2} repeat 3-smooth ones
        assert_eq!(ds.len(), 8 + 4 - 2);

        let mut r = SearchCampaign::new(Strategy::RandomDivisors);
        r.big_n = 720;
        r.n_min = 4;
        r.n_max = 8;
        r.seed = Some(3);
        r.sample_count = 20;
        let x = r.run(None, Exec::Parallel).unwrap();
        assert_eq!(x, r.run(None, Exec::Sequential).unwrap());
        r.seed = None;
        assert!(r.run(None, Exec::Sequential).is_err());

        let mut s = SearchCampaign::new(Strategy::Shift);
        s.shift_max = 3;
        assert!(s.run(None, Exec::Sequential).is_err());
        let shifted = s.run(Some(&ds), Exec::Sequential).unwrap();
        shifted.revalidate().unwrap();

        let mut dfam = SearchCampaign::new(Strategy::DiameterFamily);
        dfam.big_n = 6;
        dfam.dil_max = 2;
        dfam.shift_max = 2;
        let x = dfam.run(None, Exec::Parallel).unwrap();
        assert_eq!(x, dfam.run(None, Exec::Sequential).unwrap());
        let mut brute = Dataset::new();
        for d in 1..=6 {
            enumerate_diameter_family(d, 2, 2, |a| {
                brute.ingest(a, "diameter").unwrap();
            })
            .unwrap();
        }
        assert_eq!(x, brute);
    }
}
