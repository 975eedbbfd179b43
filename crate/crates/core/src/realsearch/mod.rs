//! Exact searches over positive real sets with a small sumset or a small
//! product set.
//!
//! A real set with `|A+A| <= 3n-4` and a repeated product is, after dilation,
//! an `n`-subset of `a + {0, ..., 2n-3}` for one of finitely many rationals
//! `a`; clearing denominators turns every candidate into an integer set.
//! A real set with `|AA| <= 3n-4` and a repeated sum is, after dilation, a set
//! of powers `r^e` with `0 <= e <= 2n-4`, where `r` in `(1, 2)` is an
//! irrational root of `x^l + ... + x^(j-1) - (1 + x + ... + x^(k-1))`.

pub mod algebraic;
pub mod poly;

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::par::{self, Exec};
use crate::sets::{PosIntSet, SppTriple};
use crate::store::Dataset;

pub use algebraic::{alg_compare, alg_is_zero, alg_spp, AlgebraicNumber, AlgebraicSet, SumClasses};
pub use poly::Poly;

/// Source tag of witnesses from [`small_sumset_pairs`].
pub const SMALL_SUMSET_TAG: &str = "small-sumset";

/// One translated interval `a + {0, ..., len-1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalSet {
    pub a: Ratio<i64>,
    pub len: u64,
}

impl RationalSet {
    /// The integer set `q·(a + offsets)` for `a = p/q`.
    pub fn cleared(&self, offsets: &[u64]) -> Result<PosIntSet> {
        let (p, q) = (*self.a.numer() as u64, *self.a.denom() as u64);
        PosIntSet::new(offsets.iter().map(|&s| p + q * s).collect())
    }
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Distinct positive `a = (ij - kl) / (k + l - i - j)` over
/// `0 <= i < k <= l < j <= 2n-4`, in increasing order.
pub fn small_sumset_a_values(n: u32) -> Result<Vec<Ratio<i64>>> {
    if n < 3 {
        return Err(Error::Domain("small-sumset search needs n >= 3".into()));
    }
    let top = 2 * n as i64 - 4;
    let mut out = BTreeSet::new();
    for i in 0..=top {
        for k in i + 1..=top {
            for l in k..=top {
                for j in l + 1..=top {
                    let den = k + l - i - j;
                    if den == 0 {
                        continue;
                    }
                    let a = Ratio::new(i * j - k * l, den);
                    if a > Ratio::zero() {
                        out.insert(a);
                    }
                }
            }
        }
    }
    Ok(out.into_iter().collect())
}

/// The intervals `a + {0, ..., 2n-3}` whose `n`-subsets contain (a dilation of)
/// every real set with a small sumset and a repeated product.
pub fn small_sumset_candidates(n: u32) -> Result<Vec<RationalSet>> {
    let len = 2 * n as u64 - 2;
    Ok(small_sumset_a_values(n)?.into_iter().map(|a| RationalSet { a, len }).collect())
}

/// Total number of candidate `n`-sets.
pub fn small_sumset_candidate_count(n: u32) -> Result<u64> {
    let bases = small_sumset_candidates(n)?;
    Ok(bases.iter().map(|b| binomial(b.len, n as u64)).sum())
}

/// Every pair attained by a candidate set, with integer witnesses.
///
/// Complete for real sets with `|A+A| <= 3n-4` and `|AA| < n(n+1)/2`.
pub fn small_sumset_pairs(n: u32, exec: Exec) -> Result<Dataset> {
    if !(3..=10).contains(&n) {
        return Err(Error::Domain(format!("small-sumset pairs are supported for 3 <= n <= 10, got {n}")));
    }
    let bases = small_sumset_candidates(n)?;
    par::map_reduce(
        exec,
        bases,
        |b| -> Result<Dataset> {
            let mut ds = Dataset::new();
            let mut err = None;
            for_each_subset(b.len as u32, n, |offs| {
                let offs: Vec<u64> = offs.iter().map(|&e| e as u64).collect();
                match b.cleared(&offs).and_then(|a| ds.ingest(&a, SMALL_SUMSET_TAG)) {
                    Ok(_) => {}
                    Err(e) => err = Some(e),
                }
            });
            match err {
                Some(e) => Err(e),
                None => Ok(ds),
            }
        },
        || Ok(Dataset::new()),
        |a, b| Ok(a?.merge(b?)),
    )
}

/// Calls `f` on every `k`-subset of `{0, ..., m-1}` in lexicographic order.
pub fn for_each_subset<F: FnMut(&[u32])>(m: u32, k: u32, mut f: F) {
    fn rec<F: FnMut(&[u32])>(m: u32, k: u32, start: u32, cur: &mut Vec<u32>, f: &mut F) {
        if cur.len() as u32 == k {
            f(cur);
            return;
        }
        let need = k - cur.len() as u32;
        for e in start..=m.saturating_sub(need) {
            if e >= m {
                break;
            }
            cur.push(e);
            rec(m, k, e + 1, cur, f);
            cur.pop();
        }
    }
    if k <= m {
        rec(m, k, 0, &mut Vec::with_capacity(k as usize), &mut f);
    }
}

/// `Σ_{d=l}^{j-1} x^d - Σ_{d=0}^{k-1} x^d`.
pub fn ratio_family_member(k: u32, l: u32, j: u32) -> Poly {
    let mut c = vec![0i64; j as usize];
    for d in l..j {
        c[d as usize] += 1;
    }
    for d in 0..k {
        c[d as usize] -= 1;
    }
    Poly::from_i64(&c)
}

/// A candidate ratio: an irrational root in `(1, 2)` with a defining polynomial.
#[derive(Debug, Clone)]
pub struct RatioRoot {
    /// Primitive integer polynomial: the gcd of every family member vanishing at the root.
    pub poly: Poly,
    pub root: AlgebraicNumber,
}

/// Exponent span used by the small-product search: `min(sum_cap - n, 2n - 4)`.
pub fn ratio_span(n: u32, sum_cap: u32) -> u32 {
    sum_cap.saturating_sub(n).min(2 * n - 4)
}

/// Distinct irrational roots in `(1, 2)` of the family members with
/// `0 < k <= l < j <= ratio_span(n, sum_cap)`, in increasing order.
pub fn ratio_polynomials(n: u32, sum_cap: u32) -> Result<Vec<RatioRoot>> {
    if n < 3 {
        return Err(Error::Domain("ratio polynomials need n >= 3".into()));
    }
    if sum_cap > n * (n + 1) / 2 - 1 {
        return Err(Error::InvalidParameter(format!(
            "sumCap must be at most n(n+1)/2 - 1 = {}",
            n * (n + 1) / 2 - 1
        )));
    }
    let span = ratio_span(n, sum_cap);
    let one = BigRational::from_integer(BigInt::from(1));
    let two = BigRational::from_integer(BigInt::from(2));
    let mut family = BTreeSet::new();
    for k in 1..=span {
        for l in k..=span {
            for j in l + 1..=span {
                family.insert(ratio_family_member(k, l, j).primitive());
            }
        }
    }
    let mut roots: Vec<(f64, RatioRoot)> = Vec::new();
    for p in &family {
        let core = p.without_rational_roots().square_free();
        for r in AlgebraicNumber::roots_in(&core, &one, &two) {
            let v = r.approx();
            match roots.iter_mut().find(|(w, x)| (w - v).abs() < 1e-9 && x.root.same_number(&r)).map(|(_, x)| x) {
                Some(x) => {
                    x.root = x.root.reduced_by(p);
                    x.poly = x.root.poly().clone();
                }
                None => roots.push((v, RatioRoot { poly: r.poly().clone(), root: r })),
            }
        }
    }
    roots.sort_by(|a, b| a.0.total_cmp(&b.0));
    Ok(roots.into_iter().map(|(_, r)| r).collect())
}

/// A real set found by the small-product search.
#[derive(Debug, Clone)]
pub struct RealWitness {
    pub triple: SppTriple,
    pub set: AlgebraicSet,
}

impl RealWitness {
    /// `poly=<ascending coefficients> interval=(lo,hi) exponents=<list>`.
    pub fn describe(&self) -> String {
        let coeffs: Vec<String> = self.set.ratio.poly().coeffs().iter().map(|c| c.to_string()).collect();
        let (lo, hi) = self.set.ratio.interval();
        let e: Vec<String> = self.set.exponents.iter().map(|e| e.to_string()).collect();
        format!("poly={} interval=({lo},{hi}) exponents={}", coeffs.join(","), e.join(","))
    }
}

/// All pairs `(i, j)` of `n`-subsets of `{ r^0, ..., r^span }` over every
/// candidate ratio, with the first witness found for each.
pub fn small_product_pairs(n: u32, exec: Exec) -> Result<BTreeMap<(u32, u32), RealWitness>> {
    let cap = n * (n + 1) / 2 - 1;
    let span = ratio_span(n, cap);
    let roots = ratio_polynomials(n, cap)?;
    let per_root = par::map_collect(exec, roots, |rr| {
        let classes = SumClasses::new(&rr.root, span);
        let mut found: BTreeMap<(u32, u32), Vec<u32>> = BTreeMap::new();
        for_each_subset(span + 1, n, |e| {
            let t = classes.spp(e);
            found.entry(t.pair()).or_insert_with(|| e.to_vec());
        });
        (rr, found)
    });
    let mut out = BTreeMap::new();
    for (rr, found) in per_root {
        for (pair, e) in found {
            out.entry(pair).or_insert_with(|| RealWitness {
                triple: SppTriple { n, sum: pair.0, prod: pair.1 },
                set: AlgebraicSet { ratio: rr.root.clone(), exponents: e },
            });
        }
    }
    Ok(out)
}

/// Pairs realized by positive reals but by no set of positive integers.
///
/// These are the small-product pairs with `|AA| <= 3n-4` and a non-maximal
/// sumset; integer sets cannot reach them.
pub fn spp_real_delta(n: u32, exec: Exec) -> Result<BTreeMap<(u32, u32), RealWitness>> {
    if !(3..=8).contains(&n) {
        return Err(Error::Domain(format!("real deltas are supported for 3 <= n <= 8, got {n}")));
    }
    let hi = n * (n + 1) / 2;
    let mut all = small_product_pairs(n, exec)?;
    all.retain(|&(i, j), _| j <= 3 * n - 4 && i < hi);
    Ok(all)
}
