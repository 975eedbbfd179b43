//! Incremental exhaustive scan over the subsets of a small ground set.
//!
//! Subsets are visited depth-first in increasing index order. Sums and
//! products of the ground set are pre-indexed, and the scan keeps per-value
//! multiplicity counters, so adding or removing an element costs `O(|A|)`
//! instead of recomputing `|A+A|` and `|AA|` from scratch.

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::par::{self, Exec};
use crate::sets::ELEMENT_CAP;

/// Largest supported ground set.
pub const MAX_GROUND: usize = 64;

/// A visited subset with its sizes.
#[derive(Debug, Clone, Copy)]
pub struct SubsetView<'a> {
    pub elements: &'a [u64],
    pub sum: u32,
    pub prod: u32,
    pub gcd: u64,
}

impl SubsetView<'_> {
    pub fn n(&self) -> u32 {
        self.elements.len() as u32
    }
}

/// Ground set with pre-indexed pairwise sums and products.
#[derive(Debug, Clone)]
pub struct GroundSet {
    elems: Vec<u64>,
    sum_idx: Vec<u16>,
    prod_idx: Vec<u16>,
    sum_classes: usize,
    prod_classes: usize,
}

fn index_table(elems: &[u64], op: impl Fn(u64, u64) -> u64) -> (Vec<u16>, usize) {
    let m = elems.len();
    let mut values: Vec<u64> = Vec::with_capacity(m * m);
    for &x in elems {
        for &y in elems {
            values.push(op(x, y));
        }
    }
    let mut distinct = values.clone();
    distinct.sort_unstable();
    distinct.dedup();
    let idx = values
        .iter()
        .map(|v| distinct.binary_search(v).unwrap() as u16)
        .collect();
    (idx, distinct.len())
}

impl GroundSet {
    pub fn new(elems: Vec<u64>) -> Result<Self> {
        if elems.is_empty() || elems.len() > MAX_GROUND {
            return Err(Error::InvalidParameter(format!(
                "ground set must have 1..={MAX_GROUND} elements, got {}",
                elems.len()
            )));
        }
        if elems[0] == 0 || elems.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidSet("ground set must be strictly increasing and positive".into()));
        }
        let max = *elems.last().unwrap();
        if max > ELEMENT_CAP {
            return Err(Error::ElementTooLarge { value: max, cap: ELEMENT_CAP });
        }
        let (sum_idx, sum_classes) = index_table(&elems, |x, y| x + y);
        let (prod_idx, prod_classes) = index_table(&elems, |x, y| x * y);
        Ok(GroundSet { elems, sum_idx, prod_idx, sum_classes, prod_classes })
    }

    /// `{1, ..., n}`.
    pub fn interval(n: u64) -> Result<Self> {
        Self::new((1..=n).collect())
    }

    pub fn elements(&self) -> &[u64] {
        &self.elems
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    /// Visits every subset with `n_min <= |A| <= n_max`, sequentially.
    pub fn scan<F: FnMut(&SubsetView)>(&self, n_min: usize, n_max: usize, mut visit: F) {
        let mut st = ScanState::new(self);
        let n_max = n_max.min(self.len());
        for first in 0..self.len() {
            st.dfs_from_prefix(&[first], n_min.max(1), n_max, &mut visit);
        }
    }

    /// Scans in independent tasks and reduces per-task accumulators.
    ///
    /// `reduce` must be associative and commutative for the result to be
    /// independent of scheduling.
    pub fn scan_reduce<R, Mk, V, Red>(
        &self,
        exec: Exec,
        n_min: usize,
        n_max: usize,
        make: Mk,
        visit: V,
        reduce: Red,
    ) -> R
    where
        R: Send,
        Mk: Fn() -> R + Sync + Send,
        V: Fn(&mut R, &SubsetView) + Sync + Send,
        Red: Fn(R, R) -> R + Sync + Send,
    {
        let n_min = n_min.max(1);
        let n_max = n_max.min(self.len());
        if n_min > n_max {
            return make();
        }
        let m = self.len();
        // Two-element prefixes balance the work; singletons are visited on their own.
        let mut tasks: Vec<Vec<usize>> = Vec::new();
        for a in 0..m {
            if n_min <= 1 {
                tasks.push(vec![a]);
            }
            if n_max >= 2 {
                for b in a + 1..m {
                    tasks.push(vec![a, b]);
                }
            }
        }
        par::map_reduce(
            exec,
            tasks,
            |prefix| {
                let mut acc = make();
                let mut st = ScanState::new(self);
                if prefix.len() == 1 {
                    st.push(prefix[0]);
                    let view = st.view();
                    visit(&mut acc, &view);
                } else {
                    st.dfs_from_prefix(&prefix, n_min, n_max, &mut |v: &SubsetView| visit(&mut acc, v));
                }
                acc
            },
            &make,
            reduce,
        )
    }
}

struct ScanState<'g> {
    g: &'g GroundSet,
    chosen: Vec<usize>,
    values: Vec<u64>,
    gcds: Vec<u64>,
    sum_cnt: Vec<u8>,
    prod_cnt: Vec<u8>,
    sums: u32,
    prods: u32,
}

impl<'g> ScanState<'g> {
    fn new(g: &'g GroundSet) -> Self {
        ScanState {
            g,
            chosen: Vec::with_capacity(g.len()),
            values: Vec::with_capacity(g.len()),
            gcds: Vec::with_capacity(g.len()),
            sum_cnt: vec![0; g.sum_classes],
            prod_cnt: vec![0; g.prod_classes],
            sums: 0,
            prods: 0,
        }
    }

    #[inline]
    fn push(&mut self, e: usize) {
        let m = self.g.len();
        let row = e * m;
        for &c in &self.chosen {
            let s = self.g.sum_idx[row + c] as usize;
            if self.sum_cnt[s] == 0 {
                self.sums += 1;
            }
            self.sum_cnt[s] += 1;
            let p = self.g.prod_idx[row + c] as usize;
            if self.prod_cnt[p] == 0 {
                self.prods += 1;
            }
            self.prod_cnt[p] += 1;
        }
        let s = self.g.sum_idx[row + e] as usize;
        if self.sum_cnt[s] == 0 {
            self.sums += 1;
        }
        self.sum_cnt[s] += 1;
        let p = self.g.prod_idx[row + e] as usize;
        if self.prod_cnt[p] == 0 {
            self.prods += 1;
        }
        self.prod_cnt[p] += 1;

        let x = self.g.elems[e];
        let g = self.gcds.last().map_or(x, |&g| g.gcd(&x));
        self.chosen.push(e);
        self.values.push(x);
        self.gcds.push(g);
    }

    #[inline]
    fn pop(&mut self) {
        let e = self.chosen.pop().unwrap();
        self.values.pop();
        self.gcds.pop();
        let m = self.g.len();
        let row = e * m;
        for &c in &self.chosen {
            let s = self.g.sum_idx[row + c] as usize;
            self.sum_cnt[s] -= 1;
            if self.sum_cnt[s] == 0 {
                self.sums -= 1;
            }
            let p = self.g.prod_idx[row + c] as usize;
            self.prod_cnt[p] -= 1;
            if self.prod_cnt[p] == 0 {
                self.prods -= 1;
            }
        }
        let s = self.g.sum_idx[row + e] as usize;
        self.sum_cnt[s] -= 1;
        if self.sum_cnt[s] == 0 {
            self.sums -= 1;
        }
        let p = self.g.prod_idx[row + e] as usize;
        self.prod_cnt[p] -= 1;
        if self.prod_cnt[p] == 0 {
            self.prods -= 1;
        }
    }

    fn view(&self) -> SubsetView<'_> {
        SubsetView {
            elements: &self.values,
            sum: self.sums,
            prod: self.prods,
            gcd: *self.gcds.last().unwrap(),
        }
    }

    fn dfs_from_prefix<F: FnMut(&SubsetView)>(
        &mut self,
        prefix: &[usize],
        n_min: usize,
        n_max: usize,
        visit: &mut F,
    ) {
        if prefix.len() > n_max {
            return;
        }
        for &e in prefix {
            self.push(e);
        }
        self.dfs(n_min, n_max, visit);
        for _ in prefix {
            self.pop();
        }
    }

    fn dfs<F: FnMut(&SubsetView)>(&mut self, n_min: usize, n_max: usize, visit: &mut F) {
        let k = self.chosen.len();
        if k >= n_min {
            visit(&self.view());
        }
        if k == n_max {
            return;
        }
        let m = self.g.len();
        let last = *self.chosen.last().unwrap();
        // need n_min - k - 1 more elements after the next one
        let need = n_min.saturating_sub(k + 1);
        let mut e = last + 1;
        while e + need < m {
            self.push(e);
            self.dfs(n_min, n_max, visit);
            self.pop();
            e += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sets::{product_size, sumset_size, PosIntSet};

    #[test]
    fn matches_direct_computation() {
        let g = GroundSet::new(vec![1, 2, 3, 4, 6, 8, 9, 12, 13]).unwrap();
        let mut count = 0;
        g.scan(1, 9, |v| {
            let a = PosIntSet::new(v.elements.to_vec()).unwrap();
            assert_eq!(v.sum as usize, sumset_size(&a));
            assert_eq!(v.prod as usize, product_size(&a));
            assert_eq!(v.gcd, a.gcd());
            count += 1;
        });
        assert_eq!(count, 511);
    }

    #[test]
    fn size_window_counts() {
        let g = GroundSet::interval(10).unwrap();
        let mut count = 0u64;
        g.scan(3, 4, |_| count += 1);
        assert_eq!(count, 120 + 210);
        let total = g.scan_reduce(Exec::Parallel, 3, 4, || 0u64, |c, _| *c += 1, |a, b| a + b);
        assert_eq!(total, 330);
        let singles = g.scan_reduce(Exec::Sequential, 1, 1, || 0u64, |c, _| *c += 1, |a, b| a + b);
        assert_eq!(singles, 10);
    }

    #[test]
    fn rejects_bad_ground_sets() {
        assert!(GroundSet::new(vec![]).is_err());
        assert!(GroundSet::new(vec![2, 1]).is_err());
        assert!(GroundSet::new((1..=65).collect()).is_err());
    }
}
