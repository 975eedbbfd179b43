//! Prototypes: weak orderings of the pairs `(i, j)`, `1 <= i <= j <= n`, that
//! increase along every row and column of the addition table.
//!
//! Pairs are indexed column by column: `(1,1), (1,2), (2,2), (1,3), (2,3), ...`.
//! The text form lists, for `j = 1..n`, the ranks of `(1,j), ..., (j,j)`,
//! separated by `;`. For example `{0, 1, 2}` has addition type `0;1 2;2 3 4`.

pub mod lp;

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::par::{self, Exec};
use crate::sets::PosIntSet;
use lp::{Constraint, System};

/// Largest order accepted by the enumerators.
pub const MAX_ORDER: usize = 7;

fn idx(i: usize, j: usize) -> usize {
    // 1-based, i <= j
    j * (j - 1) / 2 + (i - 1)
}

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (1..=n).flat_map(|j| (1..=j).map(move |i| (i, j))).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Prototype {
    n: usize,
    rank: Vec<u32>,
}

impl Prototype {
    /// Validates monotonicity and contiguity of `rank` (indexed column by column).
    pub fn new(n: usize, rank: Vec<u32>) -> Result<Self> {
        if n == 0 || rank.len() != n * (n + 1) / 2 {
            return Err(Error::InvalidParameter(format!("order {n} needs {} ranks", n * (n + 1) / 2)));
        }
        let p = Prototype { n, rank };
        for (i, j) in pairs(n) {
            if i < j && p.rank_of(i, j) >= p.rank_of(i + 1, j) {
                return Err(Error::Validation(format!("rank({i},{j}) must be below rank({},{j})", i + 1)));
            }
            if j < n && p.rank_of(i, j) >= p.rank_of(i, j + 1) {
                return Err(Error::Validation(format!("rank({i},{j}) must be below rank({i},{})", j + 1)));
            }
        }
        let mut used: Vec<u32> = p.rank.clone();
        used.sort_unstable();
        used.dedup();
        if used.iter().enumerate().any(|(k, &r)| r != k as u32) {
            return Err(Error::Validation("ranks must be contiguous from 0".into()));
        }
        Ok(p)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rank_of(&self, i: usize, j: usize) -> u32 {
        let (i, j) = if i <= j { (i, j) } else { (j, i) };
        self.rank[idx(i, j)]
    }

    pub fn class_count(&self) -> usize {
        self.rank.iter().max().map_or(0, |&m| m as usize + 1)
    }

    /// Pairs grouped by rank.
    pub fn classes(&self) -> Vec<Vec<(usize, usize)>> {
        let mut out = vec![Vec::new(); self.class_count()];
        for (i, j) in pairs(self.n) {
            out[self.rank_of(i, j) as usize].push((i, j));
        }
        out
    }

    /// The linear system in `a_2, ..., a_n` (with `a_1 = 0`) whose solutions induce this prototype.
    pub fn system(&self) -> System {
        let d = self.n - 1;
        let vec_of = |(i, j): (usize, usize)| -> Vec<i64> {
            let mut v = vec![0i64; d];
            for t in [i, j] {
                if t > 1 {
                    v[t - 2] += 1;
                }
            }
            v
        };
        let diff = |p: (usize, usize), q: (usize, usize)| -> Vec<i64> {
            vec_of(p).iter().zip(vec_of(q)).map(|(x, y)| x - y).collect()
        };
        let classes = self.classes();
        let mut sys = System { vars: d, ..Default::default() };
        for (k, c) in classes.iter().enumerate() {
            for &p in &c[1..] {
                sys.equalities.push(Constraint::new(diff(p, c[0]), 0));
            }
            if k + 1 < classes.len() {
                // strict steps become gaps of at least 1 (the system is scale invariant)
                sys.inequalities.push(Constraint::new(diff(classes[k + 1][0], c[0]), 1));
            }
        }
        sys
    }
}

impl fmt::Display for Prototype {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for j in 1..=self.n {
            if j > 1 {
                f.write_str(";")?;
            }
            for i in 1..=j {
                if i > 1 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", self.rank_of(i, j))?;
            }
        }
        Ok(())
    }
}

impl FromStr for Prototype {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let rows: Vec<&str> = s.trim().split(';').collect();
        let n = rows.len();
        let mut rank = Vec::with_capacity(n * (n + 1) / 2);
        for (j, row) in rows.iter().enumerate() {
            let vals: Vec<u32> = row
                .split_whitespace()
                .map(|t| t.parse::<u32>().map_err(|_| Error::InvalidParameter(format!("bad rank {t:?}"))))
                .collect::<Result<_>>()?;
            if vals.len() != j + 1 {
                return Err(Error::InvalidParameter(format!("row {} must have {} ranks", j + 1, j + 1)));
            }
            rank.extend(vals);
        }
        Prototype::new(n, rank)
    }
}

fn type_of<T: Ord + Clone>(n: usize, value: impl Fn(usize, usize) -> T) -> Prototype {
    let ps = pairs(n);
    let mut vals: Vec<T> = ps.iter().map(|&(i, j)| value(i, j)).collect();
    vals.sort();
    vals.dedup();
    let rank = ps.iter().map(|&(i, j)| vals.binary_search(&value(i, j)).unwrap() as u32).collect();
    Prototype { n, rank }
}

/// Weak order of the sums `a_i + a_j`.
pub fn addition_type(a: &PosIntSet) -> Prototype {
    let e = a.elements();
    type_of(e.len(), |i, j| e[i - 1] + e[j - 1])
}

/// Weak order of the products `a_i a_j`.
pub fn multiplication_type(a: &PosIntSet) -> Prototype {
    let e = a.elements();
    type_of(e.len(), |i, j| e[i - 1] as u128 * e[j - 1] as u128)
}

/// Addition type of an increasing sequence of rationals.
pub fn addition_type_of_rationals(a: &[BigRational]) -> Prototype {
    type_of(a.len(), |i, j| &a[i - 1] + &a[j - 1])
}

/// Predecessor masks of the pair poset generated by `(i,j) < (i+1,j)`, `(i,j) < (i,j+1)`.
fn predecessor_masks(n: usize) -> Vec<u32> {
    let mut pred = vec![0u32; n * (n + 1) / 2];
    for (i, j) in pairs(n) {
        let me = idx(i, j);
        if i > 1 {
            pred[me] |= 1 << idx(i - 1, j);
        }
        if j > i {
            pred[me] |= 1 << idx(i, j - 1);
        }
    }
    pred
}

fn check_order(n: usize) -> Result<()> {
    if n == 0 || n > MAX_ORDER {
        return Err(Error::InvalidParameter(format!("order must be in 1..={MAX_ORDER}, got {n}")));
    }
    Ok(())
}

/// Calls `sink` on every prototype of order `n` exactly once; returns the count.
///
/// Prototypes are built rank class by rank class: each class is a nonempty set
/// of pairs all of whose predecessors are already placed.
pub fn enumerate_prototypes<F: FnMut(&Prototype)>(n: usize, mut sink: F) -> Result<u64> {
    check_order(n)?;
    let pred = predecessor_masks(n);
    let m = pred.len();
    let mut rank = vec![0u32; m];
    let full = if m == 32 { u32::MAX } else { (1u32 << m) - 1 };
    let mut count = 0;
    build(n, &pred, full, 0, 0, &mut rank, &mut |p| {
        count += 1;
        sink(p)
    });
    Ok(count)
}

fn minimal(pred: &[u32], placed: u32, full: u32) -> u32 {
    let mut min = 0;
    let mut rest = full & !placed;
    while rest != 0 {
        let e = rest.trailing_zeros();
        rest &= rest - 1;
        if pred[e as usize] & !placed == 0 {
            min |= 1 << e;
        }
    }
    min
}

fn build<F: FnMut(&Prototype)>(n: usize, pred: &[u32], full: u32, placed: u32, r: u32, rank: &mut [u32], sink: &mut F) {
    if placed == full {
        sink(&Prototype { n, rank: rank.to_vec() });
        return;
    }
    let min = minimal(pred, placed, full);
    // every nonempty submask of the minimal elements
    let mut sub = min;
    while sub != 0 {
        let mut bits = sub;
        while bits != 0 {
            let e = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            rank[e] = r;
        }
        build(n, pred, full, placed | sub, r + 1, rank, sink);
        sub = (sub - 1) & min;
    }
}

/// Number of prototypes of order `n`, by memoized counting over placed sets.
pub fn prototype_count(n: usize) -> Result<u64> {
    check_order(n)?;
    let pred = predecessor_masks(n);
    let m = pred.len();
    let full = if m == 32 { u32::MAX } else { (1u32 << m) - 1 };
    fn go(pred: &[u32], full: u32, placed: u32, memo: &mut HashMap<u32, u64>) -> u64 {
        if placed == full {
            return 1;
        }
        if let Some(&c) = memo.get(&placed) {
            return c;
        }
        let min = minimal(pred, placed, full);
        let mut total = 0;
        let mut sub = min;
        while sub != 0 {
            total += go(pred, full, placed | sub, memo);
            sub = (sub - 1) & min;
        }
        memo.insert(placed, total);
        total
    }
    Ok(go(&pred, full, 0, &mut HashMap::new()))
}

/// A realization `0 = a_1 < a_2 < ... < a_n`, if one exists.
pub fn realize(p: &Prototype) -> Option<Vec<BigRational>> {
    let x = p.system().solve()?;
    let mut a = vec![BigRational::zero()];
    a.extend(x);
    Some(a)
}

/// Realizability with a verified rational witness.
pub fn is_realizable(p: &Prototype) -> Result<Option<Vec<BigRational>>> {
    match realize(p) {
        None => Ok(None),
        Some(a) => {
            if addition_type_of_rationals(&a) != *p {
                return Err(Error::Internal(format!("witness for {p} induces a different prototype")));
            }
            Ok(Some(a))
        }
    }
}

/// Number of realizable prototypes ("types of addition tables") of order `n`.
pub fn count_types(n: usize, exec: Exec) -> Result<u64> {
    let mut all = Vec::new();
    enumerate_prototypes(n, |p| all.push(p.clone()))?;
    par::map_reduce(
        exec,
        all,
        |p| is_realizable(&p).map(|w| w.is_some() as u64),
        || Ok(0),
        |a, b| Ok(a? + b?),
    )
}

/// Integer witness (rational witness scaled by the common denominator, shifted to start at 1).
pub fn integer_witness(a: &[BigRational]) -> Vec<BigInt> {
    let l = a.iter().fold(BigInt::from(1), |l, x| num_integer::lcm(l, x.denom().clone()));
    a.iter().map(|x| (x * BigRational::from_integer(l.clone())).to_integer() + 1).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: &[u64]) -> PosIntSet {
        PosIntSet::new(v.to_vec()).unwrap()
    }

    #[test]
    fn counts() {
        for (n, c) in [(1, 1), (2, 1), (3, 3), (4, 39), (5, 2905)] {
            assert_eq!(enumerate_prototypes(n, |_| {}).unwrap(), c);
            assert_eq!(prototype_count(n).unwrap(), c);
        }
        assert_eq!(prototype_count(6).unwrap(), 1_538_369);
        assert!(enumerate_prototypes(8, |_| {}).is_err());
        assert!(enumerate_prototypes(0, |_| {}).is_err());
    }

    #[test]
    fn enumeration_is_valid_and_distinct() {
        let mut seen = std::collections::BTreeSet::new();
        enumerate_prototypes(4, |p| {
            assert!(Prototype::new(p.n, p.rank.clone()).is_ok());
            assert!(seen.insert(p.clone()));
        })
        .unwrap();
        assert_eq!(seen.len(), 39);
    }

    #[test]
    fn types_of_small_sets() {
        let t = addition_type(&s(&[1, 2, 3]));
        assert_eq!(t.rank_of(1, 3), t.rank_of(2, 2));
        assert_eq!(t.to_string(), "0;1 2;2 3 4");
        let t = addition_type(&s(&[1, 2, 4]));
        assert!(t.rank_of(2, 2) < t.rank_of(1, 3));
        let t = addition_type(&s(&[1, 2, 5]));
        assert!(t.rank_of(2, 2) < t.rank_of(1, 3));
        let m = multiplication_type(&s(&[1, 2, 4]));
        assert_eq!(m.rank_of(1, 3), m.rank_of(2, 2));
        assert_eq!(multiplication_type(&s(&[2, 3, 5])).class_count(), 6);
        let m = multiplication_type(&s(&[1, 2, 3]));
        assert_eq!(m.class_count(), 6);
        assert!(m.rank_of(2, 3) > m.rank_of(1, 3));
    }

    #[test]
    fn text_form() {
        let p: Prototype = "0;1 2;2 3 4".parse().unwrap();
        assert_eq!(p, addition_type(&s(&[1, 2, 3])));
        assert_eq!(p.to_string().parse::<Prototype>().unwrap(), p);
        assert!("0;1 2;1 3 4".parse::<Prototype>().is_err());
        assert!("0;1".parse::<Prototype>().is_err());
        assert!("0;1 2;2 3 5".parse::<Prototype>().is_err());
        assert!("0;1 x".parse::<Prototype>().is_err());
    }

    #[test]
    fn realizability() {
        let p: Prototype = "0;1 2;2 3 4".parse().unwrap();
        let w = is_realizable(&p).unwrap().unwrap();
        assert_eq!(addition_type_of_rationals(&w), p);
        for (n, c) in [(1, 1), (2, 1), (3, 3), (4, 25), (5, 477)] {
            assert_eq!(count_types(n, Exec::Sequential).unwrap(), c, "n = {n}");
        }
        let w = integer_witness(&[BigRational::zero(), BigRational::new(1.into(), 2.into())]);
        assert_eq!(w, vec![BigInt::from(1), BigInt::from(2)]);
    }

    #[test]
    fn integer_sets_round_trip() {
        // every A ⊆ [10] with |A| <= 5: its addition type is realizable
        crate::generators::enumerate_interval_subsets(10, 5, |a| {
            let t = addition_type(a);
            let w = is_realizable(&t).unwrap().expect("integer set must be realizable");
            assert_eq!(addition_type_of_rationals(&w), t);
            assert!(is_realizable(&multiplication_type(a)).unwrap().is_some());
        })
        .unwrap();
    }
}
