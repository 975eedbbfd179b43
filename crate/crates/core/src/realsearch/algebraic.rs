//! Real algebraic numbers given by an isolating interval, and exact
//! arithmetic on sets of their powers.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use super::poly::{isolate_roots, Poly, Sturm};
use crate::error::{Error, Result};
use crate::sets::SppTriple;

const MAX_BISECTIONS: usize = 256;

/// The unique root of a square-free integer polynomial in an open interval.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraicNumber {
    poly: Poly,
    lo: BigRational,
    hi: BigRational,
}

impl AlgebraicNumber {
    /// Checks that `poly` (made square-free) has exactly one root in `(lo, hi)`
    /// and that neither endpoint is a root.
    pub fn new(poly: &Poly, lo: BigRational, hi: BigRational) -> Result<Self> {
        if poly.degree() == 0 {
            return Err(Error::InvalidParameter("polynomial has no roots".into()));
        }
        let p = poly.square_free();
        if lo >= hi {
            return Err(Error::InvalidParameter("empty isolating interval".into()));
        }
        if p.eval(&lo).is_zero() || p.eval(&hi).is_zero() {
            return Err(Error::InvalidParameter("interval endpoint is a root".into()));
        }
        let k = Sturm::new(&p).count(&lo, &hi);
        if k != 1 {
            return Err(Error::InvalidParameter(format!("interval contains {k} roots, expected 1")));
        }
        Ok(AlgebraicNumber { poly: p, lo, hi })
    }

    /// All roots of `poly` in the open interval `(lo, hi)`, in increasing order.
    pub fn roots_in(poly: &Poly, lo: &BigRational, hi: &BigRational) -> Vec<AlgebraicNumber> {
        if poly.degree() == 0 {
            return Vec::new();
        }
        let p = poly.square_free();
        isolate_roots(&p, lo, hi)
            .into_iter()
            .map(|(a, b)| AlgebraicNumber { poly: p.clone(), lo: a, hi: b })
            .collect()
    }

    pub fn poly(&self) -> &Poly {
        &self.poly
    }

    pub fn interval(&self) -> (&BigRational, &BigRational) {
        (&self.lo, &self.hi)
    }

    pub fn approx(&self) -> f64 {
        let mut r = self.clone();
        while (&r.hi - &r.lo).to_f64().unwrap_or(1.0) > 1e-15 {
            r.refine();
        }
        ((&r.lo + &r.hi) / BigRational::from_integer(BigInt::from(2))).to_f64().unwrap_or(f64::NAN)
    }

    /// Halves the isolating interval.
    pub fn refine(&mut self) {
        let two = BigRational::from_integer(BigInt::from(2));
        let mut m = (&self.lo + &self.hi) / &two;
        if self.poly.eval(&m).is_zero() {
            // a rational root; keep a nondegenerate interval around it
            m = (&self.lo + &m) / &two;
        }
        let s_lo = self.poly.sign_at(&self.lo);
        let s_m = self.poly.sign_at(&m);
        if s_m == Ordering::Equal {
            let w = (&self.hi - &self.lo) / BigRational::from_integer(BigInt::from(8));
            self.lo = &m - &w;
            self.hi = &m + &w;
        } else if s_m == s_lo {
            self.lo = m;
        } else {
            self.hi = m;
        }
    }

    /// Replaces the defining polynomial by `gcd(poly, q)` when `q` also vanishes here.
    pub fn reduced_by(&self, q: &Poly) -> AlgebraicNumber {
        if alg_is_zero(q, self) {
            let g = q.gcd(&self.poly);
            AlgebraicNumber { poly: g, lo: self.lo.clone(), hi: self.hi.clone() }
        } else {
            self.clone()
        }
    }

    /// `true` when both describe the same real number.
    pub fn same_number(&self, other: &AlgebraicNumber) -> bool {
        let lo = (&self.lo).max(&other.lo);
        let hi = (&self.hi).min(&other.hi);
        if lo >= hi {
            return false;
        }
        let g = self.poly.gcd(&other.poly);
        if g.degree() == 0 {
            return false;
        }
        // a common root in the overlap is the root of both
        Sturm::new(&g).count(lo, hi) > 0
    }

    fn interval_eval(&self, q: &Poly) -> (BigRational, BigRational) {
        let mut lo = BigRational::zero();
        let mut hi = BigRational::zero();
        for a in q.coeffs().iter().rev() {
            let cands = [&lo * &self.lo, &lo * &self.hi, &hi * &self.lo, &hi * &self.hi];
            let a = BigRational::from_integer(a.clone());
            lo = cands.iter().min().unwrap() + &a;
            hi = cands.iter().max().unwrap() + &a;
        }
        (lo, hi)
    }
}

impl fmt::Display for AlgebraicNumber {
    /// `root of x^2 - x - 1 in (3/2, 2)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "root of {} in ({}, {})", self.poly, self.lo, self.hi)
    }
}

/// `q(r) == 0`, decided by the gcd of `q` with the defining polynomial of `r`.
pub fn alg_is_zero(q: &Poly, r: &AlgebraicNumber) -> bool {
    if q.is_zero() {
        return true;
    }
    let g = q.gcd(&r.poly);
    if g.degree() == 0 {
        return false;
    }
    // roots of g are roots of r.poly, which has only r in the interval
    Sturm::new(&g).count(&r.lo, &r.hi) > 0
}

/// Exact ordering of `p(r)` against `q(r)`.
pub fn alg_compare(p: &Poly, q: &Poly, r: &AlgebraicNumber) -> Result<Ordering> {
    let d = p - q;
    if alg_is_zero(&d, r) {
        return Ok(Ordering::Equal);
    }
    let mut r = r.clone();
    for _ in 0..=MAX_BISECTIONS {
        let (lo, hi) = r.interval_eval(&d);
        if lo.is_positive() {
            return Ok(Ordering::Greater);
        }
        if hi.is_negative() {
            return Ok(Ordering::Less);
        }
        r.refine();
    }
    Err(Error::Internal(format!("comparison at {r} did not separate after {MAX_BISECTIONS} bisections")))
}

/// `{ r^e : e in exponents }`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraicSet {
    pub ratio: AlgebraicNumber,
    pub exponents: Vec<u32>,
}

impl AlgebraicSet {
    pub fn new(ratio: AlgebraicNumber, exponents: Vec<u32>) -> Result<Self> {
        if exponents.is_empty() || exponents.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidSet("exponents must be nonempty and strictly increasing".into()));
        }
        Ok(AlgebraicSet { ratio, exponents })
    }

    /// `r^{0,1,2,3}`-style label.
    pub fn label(&self) -> String {
        let e: Vec<String> = self.exponents.iter().map(|e| e.to_string()).collect();
        format!("r^{{{}}}", e.join(","))
    }
}

/// Pairwise sums `r^a + r^b` (`a <= b`) grouped into classes of equal value.
///
/// `class[idx(a, b)]` is the class id; pairs are indexed in lexicographic order.
#[derive(Debug, Clone)]
pub struct SumClasses {
    span: u32,
    class: Vec<u32>,
}

impl SumClasses {
    /// Decides `r^a + r^b == r^c + r^d` for all exponent pairs up to `span`.
    pub fn new(r: &AlgebraicNumber, span: u32) -> Self {
        let pairs: Vec<(u32, u32)> = (0..=span).flat_map(|a| (a..=span).map(move |b| (a, b))).collect();
        let mut class: Vec<u32> = (0..pairs.len() as u32).collect();
        let mono = |e: u32| Poly::monomial(e as usize);
        // floating-point prefilter: values this far apart are certainly distinct
        let rf = r.approx();
        let val = |a: u32, b: u32| rf.powi(a as i32) + rf.powi(b as i32);
        for (x, &(a, b)) in pairs.iter().enumerate() {
            if class[x] != x as u32 {
                continue;
            }
            let s = &mono(a) + &mono(b);
            for (y, &(c, d)) in pairs.iter().enumerate().skip(x + 1) {
                // equal sums of distinct pairs need disjoint exponents
                if class[y] != y as u32 || a == c || a == d || b == c || b == d {
                    continue;
                }
                if (val(a, b) - val(c, d)).abs() > 1e-6 {
                    continue;
                }
                let t = &mono(c) + &mono(d);
                if alg_is_zero(&(&s - &t), r) {
                    class[y] = x as u32;
                }
            }
        }
        SumClasses { span, class }
    }

    fn idx(&self, a: u32, b: u32) -> usize {
        let (a, b) = if a <= b { (a, b) } else { (b, a) };
        let s = self.span + 1;
        (a * s - a * a.saturating_sub(1) / 2 + (b - a)) as usize
    }

    pub fn class_of(&self, a: u32, b: u32) -> u32 {
        self.class[self.idx(a, b)]
    }

    /// `(n, |S+S|, |SS|)` for `S = { r^e }`.
    pub fn spp(&self, exponents: &[u32]) -> SppTriple {
        let mut sums = BTreeSet::new();
        let mut prods = BTreeSet::new();
        for (k, &a) in exponents.iter().enumerate() {
            for &b in &exponents[k..] {
                sums.insert(self.class_of(a, b));
                prods.insert(a + b);
            }
        }
        SppTriple { n: exponents.len() as u32, sum: sums.len() as u32, prod: prods.len() as u32 }
    }
}

/// Sum-product triple of `{ r^e }`, decided exactly.
pub fn alg_spp(s: &AlgebraicSet) -> SppTriple {
    let span = *s.exponents.last().unwrap();
    SumClasses::new(&s.ratio, span).spp(&s.exponents)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn phi() -> AlgebraicNumber {
        AlgebraicNumber::new(&Poly::from_i64(&[-1, -1, 1]), q(1, 1), q(2, 1)).unwrap()
    }

    #[test]
    fn construction() {
        let p = Poly::from_i64(&[-1, -1, 1]);
        assert!(AlgebraicNumber::new(&p, q(-1, 1), q(2, 1)).is_err());
        assert!(AlgebraicNumber::new(&p, q(2, 1), q(3, 1)).is_err());
        assert!(AlgebraicNumber::new(&Poly::constant(3), q(0, 1), q(1, 1)).is_err());
        assert!((phi().approx() - 1.618033988749895).abs() < 1e-14);
        assert_eq!(phi().to_string(), "root of x^2 - x - 1 in (1, 2)");
        let roots = AlgebraicNumber::roots_in(&Poly::from_i64(&[-1, -1, 1]), &q(-5, 1), &q(5, 1));
        assert_eq!(roots.len(), 2);
        assert!(roots[0].approx() < 0.0 && roots[1].approx() > 1.0);
    }

    #[test]
    fn zero_test() {
        let r = phi();
        assert!(alg_is_zero(&Poly::from_i64(&[-1, -1, 1]), &r));
        assert!(!alg_is_zero(&Poly::from_i64(&[-1, 1]), &r));
        let extra = &Poly::from_i64(&[-1, -1, 1]) * &Poly::from_i64(&[-3, 1]);
        assert!(alg_is_zero(&extra, &r));
        // the conjugate root is outside the interval
        let conj = AlgebraicNumber::new(&extra, q(-1, 1), q(0, 1)).unwrap();
        assert!(alg_is_zero(&Poly::from_i64(&[-1, -1, 1]), &conj));
        assert!(!alg_is_zero(&Poly::from_i64(&[-3, 1]), &conj));
        assert!(alg_is_zero(&Poly::zero(), &r));
    }

    #[test]
    fn comparisons() {
        let r = phi();
        let x = Poly::monomial(1);
        let one = Poly::constant(1);
        assert_eq!(alg_compare(&x, &one, &r).unwrap(), Ordering::Greater);
        let x2 = Poly::monomial(2);
        let xp1 = Poly::from_i64(&[1, 1]);
        assert_eq!(alg_compare(&x2, &xp1, &r).unwrap(), Ordering::Equal);
        assert_eq!(alg_compare(&Poly::monomial(3), &xp1, &r).unwrap(), Ordering::Greater);
        // 2x + 1 = x^3 exactly
        assert_eq!(alg_compare(&Poly::monomial(3), &Poly::from_i64(&[1, 2]), &r).unwrap(), Ordering::Equal);
        // 1.6180339887 vs 1.6180339888
        let close = Poly::new(vec![BigInt::from(16180339888i64)]);
        let scaled = Poly::new(vec![BigInt::zero(), BigInt::from(10_000_000_000i64)]);
        assert_eq!(alg_compare(&scaled, &close, &r).unwrap(), Ordering::Less);
    }

    #[test]
    fn set_triples() {
        let r = phi();
        let s = |e: &[u32]| alg_spp(&AlgebraicSet::new(r.clone(), e.to_vec()).unwrap());
        assert_eq!(s(&[0, 1, 2, 3]), SppTriple { n: 4, sum: 9, prod: 7 });
        assert_eq!(s(&[0, 2, 3, 4]), SppTriple { n: 4, sum: 9, prod: 8 });
        assert_eq!(s(&[0]), SppTriple { n: 1, sum: 1, prod: 1 });
        assert!(AlgebraicSet::new(r, vec![1, 1]).is_err());
    }

    #[test]
    fn pair_indexing_is_a_bijection() {
        let c = SumClasses { span: 6, class: vec![0; 28] };
        let mut seen = BTreeSet::new();
        for a in 0..=6 {
            for b in a..=6 {
                assert!(seen.insert(c.idx(a, b)));
                assert_eq!(c.idx(a, b), c.idx(b, a));
            }
        }
        assert_eq!(seen.into_iter().collect::<Vec<_>>(), (0..28).collect::<Vec<_>>());
    }
}
