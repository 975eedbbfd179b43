//! Finite sets of positive integers and their sum-product pairs.
//!
//! A [`PosIntSet`] is kept sorted and duplicate-free, with every element in
//! `1..=ELEMENT_CAP`. The cap keeps all pairwise products inside `u64`.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;

use crate::error::{Error, Result};

/// Largest admissible element.
pub const ELEMENT_CAP: u64 = 1 << 31;

/// Sorted, duplicate-free, nonempty set of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PosIntSet(Vec<u64>);

impl PosIntSet {
    /// Builds a set from a strictly increasing sequence.
    pub fn new(elements: Vec<u64>) -> Result<Self> {
        if elements.is_empty() {
            return Err(Error::InvalidSet("set is empty".into()));
        }
        if elements[0] == 0 {
            return Err(Error::InvalidSet("elements must be positive".into()));
        }
        for w in elements.windows(2) {
            if w[0] >= w[1] {
                return Err(Error::InvalidSet(format!(
                    "elements must be strictly increasing ({} then {})",
                    w[0], w[1]
                )));
            }
        }
        let max = *elements.last().unwrap();
        if max > ELEMENT_CAP {
            return Err(Error::ElementTooLarge { value: max, cap: ELEMENT_CAP });
        }
        Ok(PosIntSet(elements))
    }

    /// Builds a set from arbitrary order, dropping duplicates.
    pub fn from_unsorted(mut elements: Vec<u64>) -> Result<Self> {
        elements.sort_unstable();
        elements.dedup();
        Self::new(elements)
    }

    pub(crate) fn from_sorted_unchecked(elements: Vec<u64>) -> Self {
        debug_assert!(Self::new(elements.clone()).is_ok());
        PosIntSet(elements)
    }

    pub fn elements(&self) -> &[u64] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<u64> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn smallest(&self) -> u64 {
        self.0[0]
    }

    pub fn largest(&self) -> u64 {
        *self.0.last().unwrap()
    }

    pub fn contains(&self, x: u64) -> bool {
        self.0.binary_search(&x).is_ok()
    }

    pub fn gcd(&self) -> u64 {
        self.0.iter().fold(0, |g, &x| g.gcd(&x))
    }

    /// `A + t`, or an error if the shifted set leaves the admissible range.
    pub fn shifted(&self, t: u64) -> Result<Self> {
        let v: Vec<u64> = self.0.iter().map(|&x| x + t).collect();
        Self::new(v)
    }

    /// `c * A`.
    pub fn dilated(&self, c: u64) -> Result<Self> {
        if c == 0 {
            return Err(Error::InvalidParameter("dilation factor must be positive".into()));
        }
        let v: Vec<u64> = self
            .0
            .iter()
            .map(|&x| x.checked_mul(c).unwrap_or(u64::MAX))
            .collect();
        Self::new(v)
    }

    /// `A ∪ {b}`.
    pub fn with(&self, b: u64) -> Result<Self> {
        let mut v = self.0.clone();
        match v.binary_search(&b) {
            Ok(_) => {}
            Err(pos) => v.insert(pos, b),
        }
        Self::new(v)
    }
}

impl fmt::Display for PosIntSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, x) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

impl FromStr for PosIntSet {
    type Err = Error;

    /// Parses the literal form: space-separated decimal integers, strictly increasing.
    fn from_str(s: &str) -> Result<Self> {
        let mut v = Vec::new();
        for tok in s.split_ascii_whitespace() {
            let x: u64 = tok
                .parse()
                .map_err(|_| Error::InvalidSet(format!("not a positive integer: {tok:?}")))?;
            v.push(x);
        }
        Self::new(v)
    }
}

/// A point `(n, |A+A|, |AA|)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SppTriple {
    pub n: u32,
    pub sum: u32,
    pub prod: u32,
}

impl SppTriple {
    /// Checked constructor: both sizes must lie in `[2n-1, n(n+1)/2]`.
    pub fn new(n: u32, sum: u32, prod: u32) -> Result<Self> {
        let t = SppTriple { n, sum, prod };
        if n == 0 {
            return Err(Error::Domain("set size must be positive".into()));
        }
        let (lo, hi) = easy_range(n);
        if !(lo..=hi).contains(&sum) || !(lo..=hi).contains(&prod) {
            return Err(Error::Domain(format!(
                "pair ({sum},{prod}) outside [{lo},{hi}]^2 for n={n}"
            )));
        }
        Ok(t)
    }

    pub fn pair(&self) -> (u32, u32) {
        (self.sum, self.prod)
    }
}

impl fmt::Display for SppTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.n, self.sum, self.prod)
    }
}

pub(crate) fn easy_range(n: u32) -> (u32, u32) {
    (2 * n - 1, n * (n + 1) / 2)
}

fn distinct_count(buf: &mut [u64]) -> usize {
    buf.sort_unstable();
    let mut count = 0;
    let mut prev = None;
    for &v in buf.iter() {
        if prev != Some(v) {
            count += 1;
            prev = Some(v);
        }
    }
    count
}

fn pairwise(a: &[u64], op: impl Fn(u64, u64) -> u64) -> Vec<u64> {
    let mut buf = Vec::with_capacity(a.len() * (a.len() + 1) / 2);
    for (k, &x) in a.iter().enumerate() {
        for &y in &a[k..] {
            buf.push(op(x, y));
        }
    }
    buf
}

/// `|A+A|`.
pub fn sumset_size(a: &PosIntSet) -> usize {
    distinct_count(&mut pairwise(&a.0, |x, y| x + y))
}

/// `|AA|`.
pub fn product_size(a: &PosIntSet) -> usize {
    distinct_count(&mut pairwise(&a.0, |x, y| x * y))
}

pub fn spp_of(a: &PosIntSet) -> SppTriple {
    SppTriple {
        n: a.len() as u32,
        sum: sumset_size(a) as u32,
        prod: product_size(a) as u32,
    }
}

/// Structural flags of a set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Classification {
    pub is_ap: bool,
    pub is_gp: bool,
    pub is_sidon: bool,
    pub is_mult_sidon: bool,
}

pub fn is_arithmetic_progression(a: &[u64]) -> bool {
    a.len() < 3 || a.windows(2).all(|w| w[1] - w[0] == a[1] - a[0])
}

/// Exact over the rationals: consecutive ratios agree iff `a[k-1] a[k+1] = a[k]^2`.
pub fn is_geometric_progression(a: &[u64]) -> bool {
    a.windows(3).all(|w| w[0] * w[2] == w[1] * w[1])
}

pub fn classify(a: &PosIntSet) -> Classification {
    let n = a.len();
    let top = n * (n + 1) / 2;
    Classification {
        is_ap: is_arithmetic_progression(&a.0),
        is_gp: is_geometric_progression(&a.0),
        is_sidon: sumset_size(a) == top,
        is_mult_sidon: product_size(a) == top,
    }
}

/// Divides every element by `gcd(A)`.
pub fn canonicalize(a: &PosIntSet) -> PosIntSet {
    let g = a.gcd();
    if g == 1 {
        return a.clone();
    }
    PosIntSet(a.0.iter().map(|&x| x / g).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: &[u64]) -> PosIntSet {
        PosIntSet::new(v.to_vec()).unwrap()
    }

    #[test]
    fn sizes_from_worked_examples() {
        assert_eq!(sumset_size(&s(&[1, 2, 3, 4])), 7);
        assert_eq!(sumset_size(&s(&[1])), 1);
        assert_eq!(sumset_size(&s(&[1, 2, 4, 8, 16])), 15);
        assert_eq!(product_size(&s(&[1, 2, 3, 4])), 9);
        assert_eq!(product_size(&s(&[1, 2, 3, 4, 6, 8, 9, 12])), 22);
        assert_eq!(product_size(&s(&[1, 2, 3, 4, 5])), 14);
    }

    #[test]
    fn triples() {
        assert_eq!(spp_of(&s(&[1, 2, 3, 4, 6, 8, 9, 12])).pair(), (20, 22));
        assert_eq!(spp_of(&s(&[1, 2])), SppTriple { n: 2, sum: 3, prod: 3 });
        assert_eq!(spp_of(&s(&[1, 2, 3, 4, 6, 8])).pair(), (13, 15));
    }

    #[test]
    fn classification() {
        let c = classify(&s(&[1, 2, 4, 8, 16]));
        assert!(c.is_gp && c.is_sidon && !c.is_ap);
        assert!(classify(&s(&[1, 2, 3])).is_ap);
        let c = classify(&s(&[5, 6, 7, 8, 9, 10]));
        assert!(c.is_ap && c.is_mult_sidon && !c.is_gp);
        // ratio 3/2 is a rational GP
        assert!(classify(&s(&[4, 6, 9])).is_gp);
        assert!(!classify(&s(&[4, 6, 10])).is_gp);
    }

    #[test]
    fn canonical_form() {
        assert_eq!(canonicalize(&s(&[2, 4, 6, 8])), s(&[1, 2, 3, 4]));
        assert_eq!(canonicalize(&s(&[1, 2, 3])), s(&[1, 2, 3]));
        assert_eq!(canonicalize(&s(&[3, 6, 12, 24])), s(&[1, 2, 4, 8]));
    }

    #[test]
    fn literal_parsing() {
        let a: PosIntSet = "1 2 3 4 6 8 9 12".parse().unwrap();
        assert_eq!(a.len(), 8);
        assert_eq!(a.to_string(), "1 2 3 4 6 8 9 12");
        assert!("1 3 2".parse::<PosIntSet>().is_err());
        assert!("0 1".parse::<PosIntSet>().is_err());
        assert!("".parse::<PosIntSet>().is_err());
        assert!("1 1".parse::<PosIntSet>().is_err());
        assert!("1 x".parse::<PosIntSet>().is_err());
        let too_big = format!("1 {}", ELEMENT_CAP + 1);
        assert!(matches!(
            too_big.parse::<PosIntSet>(),
            Err(Error::ElementTooLarge { .. })
        ));
        // the cap itself is admissible and its square fits
        let edge = PosIntSet::new(vec![1, ELEMENT_CAP]).unwrap();
        assert_eq!(product_size(&edge), 3);
    }

    #[test]
    fn triple_bounds() {
        assert!(SppTriple::new(3, 5, 6).is_ok());
        assert!(SppTriple::new(3, 4, 6).is_err());
        assert!(SppTriple::new(3, 5, 7).is_err());
        assert!(SppTriple::new(1, 1, 1).is_ok());
        assert!(SppTriple::new(0, 1, 1).is_err());
    }

    /// Brute-force all subsets of [12]: easy bounds hold.
    #[test]
    fn easy_bounds_on_all_subsets_of_12() {
        for mask in 1u32..(1 << 12) {
            let v: Vec<u64> = (0..12).filter(|b| mask >> b & 1 == 1).map(|b| b + 1).collect();
            let a = PosIntSet::new(v).unwrap();
            let t = spp_of(&a);
            assert!(SppTriple::new(t.n, t.sum, t.prod).is_ok(), "{a}: {t}");
        }
    }

    /// Extremes: |A+A| = 2n-1 iff AP; |AA| = 2n-1 iff GP, over A ⊆ [16], |A| ≤ 6.
    #[test]
    fn extremes_characterize_progressions() {
        for mask in 1u32..(1 << 16) {
            if mask.count_ones() > 6 {
                continue;
            }
            let v: Vec<u64> = (0..16).filter(|b| mask >> b & 1 == 1).map(|b| b + 1).collect();
            let a = PosIntSet::new(v).unwrap();
            let n = a.len();
            let c = classify(&a);
            assert_eq!(sumset_size(&a) == 2 * n - 1, c.is_ap, "{a}");
            assert_eq!(product_size(&a) == 2 * n - 1, c.is_gp, "{a}");
        }
    }

    #[test]
    fn shift_keeps_sumset_but_not_products() {
        let a = s(&[1, 2, 4]);
        let b = a.shifted(1).unwrap();
        assert_eq!(sumset_size(&a), sumset_size(&b));
        // {1,2,4} has 1*4 = 2*2; {2,3,5} has no product collision
        assert_eq!(product_size(&a), 5);
        assert_eq!(product_size(&b), 6);
    }
}
