//! Exclusion regions and conjecture checks on sum-product pairs.
//!
//! Everything except the golden-ratio comparison is decided with exact
//! integer or rational arithmetic. The golden-ratio check is certified by
//! bracketing `φ` between consecutive Fibonacci ratios and comparing integer
//! powers, tightening the bracket until the comparison is decided.

use std::fmt::Write as _;

use num_bigint::BigUint;
use num_rational::Ratio;
use num_traits::Pow;

use crate::normalize::{norm_k, NormalizedPair};
use crate::sets::SppTriple;

/// `(2n-1, n(n+1)/2)`.
pub fn easy_bounds(n: u32) -> (u32, u32) {
    crate::sets::easy_range(n)
}

/// Pairs with `|AA| <= 3n-4` must come from Sidon sets, so anything with a
/// non-maximal sumset there is unattainable by positive integers.
pub fn sez_excludes(n: u32, i: u32, j: u32) -> bool {
    let (_, hi) = easy_bounds(n);
    (j as i64) <= 3 * n as i64 - 4 && i < hi
}

/// Improved upper bound on `|SPP(n)|`.
pub fn spp_count_upper(n: u32) -> u64 {
    assert!(n >= 3, "spp_count_upper needs n >= 3");
    let n = n as u64;
    let side = n * n - 3 * n + 4;
    side * side / 4 - (n - 2) * (n - 2) * (n - 1) / 2
}

/// Number of grid points `(n^2-3n+4)^2/4`.
pub fn grid_size(n: u32) -> u64 {
    let (lo, hi) = easy_bounds(n);
    let side = (hi - lo + 1) as u64;
    side * side
}

pub(crate) fn floor_log2(n: u32) -> u32 {
    31 - n.leading_zeros()
}

/// `|A+A|^2 |AA| (1 + floor(log2 n)) >= n^4`.
pub fn solymosi_holds(t: SppTriple) -> bool {
    let i = t.sum as u128;
    let j = t.prod as u128;
    let n = t.n as u128;
    i * i * j * (1 + floor_log2(t.n) as u128) >= n * n * n * n
}

/// `2x + y <= 4` for a point in `K` coordinates.
pub fn in_solymosi_void(p: &NormalizedPair) -> bool {
    2.0 * p.x + p.y <= 4.0
}

/// Checks `|A+A| >= 36^{-C} n^2` whenever `|AA| < C n`.
pub fn chang_bound_holds(t: SppTriple, c: Ratio<u64>) -> bool {
    assert!(*c.numer() > 0, "C must be positive");
    let (p, q) = (*c.numer(), *c.denom());
    // |AA| < (p/q) n  <=>  q |AA| < p n
    if (t.prod as u128) * (q as u128) >= (p as u128) * (t.n as u128) {
        return true;
    }
    // i >= n^2 / 36^{p/q}  <=>  i^q 36^p >= n^{2q}
    let q = u32::try_from(q).expect("denominator too large");
    let p = u32::try_from(p).expect("numerator too large");
    let lhs = BigUint::from(t.sum).pow(q) * BigUint::from(36u32).pow(p);
    let rhs = BigUint::from(t.n).pow(2 * q);
    lhs >= rhs
}

/// Squared factor used in the `|A+A||AA|^2` conjecture.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SvFactor {
    /// `(2n+1)^2`, as the conjecture is printed.
    AsPrinted,
    /// `(2n-1)^2`, the value a geometric progression attains.
    GpConsistent,
}

/// `|A+A| |AA|^2 >= n(n+1)/2 * f(n)^2`.
pub fn conjecture_sv_holds(t: SppTriple, factor: SvFactor) -> bool {
    let n = t.n as u128;
    let f = match factor {
        SvFactor::AsPrinted => 2 * n + 1,
        SvFactor::GpConsistent => 2 * n - 1,
    };
    let lhs = t.sum as u128 * (t.prod as u128).pow(2);
    lhs >= n * (n + 1) / 2 * f * f
}

/// `|A+A||AA|^2 == n(n+1)/2 (2n-1)^2`.
pub fn conjecture_sv_equality(t: SppTriple) -> bool {
    let n = t.n as u128;
    t.sum as u128 * (t.prod as u128).pow(2) == n * (n + 1) / 2 * (2 * n - 1).pow(2)
}

/// `|A+A| + |AA| >= n^φ`, certified.
pub fn golden_conjecture_holds(t: SppTriple) -> bool {
    let s = (t.sum + t.prod) as u64;
    compare_with_golden_power(s, t.n as u64) != std::cmp::Ordering::Less
}

/// Orders `s` against `n^φ`. `n^φ` is irrational for `n >= 2`, so the answer is never `Equal`
/// there; for `n = 1` the comparison is against 1.
pub fn compare_with_golden_power(s: u64, n: u64) -> std::cmp::Ordering {
    use std::cmp::Ordering::*;
    if n <= 1 {
        return s.cmp(&n);
    }
    let s_big = BigUint::from(s);
    let n_big = BigUint::from(n);
    // Consecutive Fibonacci ratios F(k+1)/F(k) alternate around φ.
    let (mut a, mut b) = (1u32, 1u32);
    for _ in 0..200 {
        let (p, q) = (a + b, a);
        // p/q = F(k+1)/F(k); odd/even steps alternate above and below φ.
        let above = (p as u64) * (p as u64) > (p as u64) * (q as u64) + (q as u64) * (q as u64);
        let lhs = Pow::pow(&s_big, q);
        let rhs = Pow::pow(&n_big, p);
        if above && lhs >= rhs {
            // s >= n^{p/q} > n^φ
            return Greater;
        }
        if !above && lhs <= rhs {
            // s <= n^{p/q} < n^φ
            return Less;
        }
        a = p;
        b = q;
    }
    unreachable!("golden-ratio comparison did not converge")
}

/// `2^floor((3n-4)/2)`.
pub fn witness_max_bound(n: u32) -> u64 {
    assert!(n >= 2, "witness_max_bound needs n >= 2");
    1u64 << ((3 * n - 4) / 2)
}

/// Region tests for a single pair.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RegionVerdict {
    pub pair: SppTriple,
    pub excluded_by_sez: bool,
    pub in_solymosi_void: bool,
    pub satisfies_conjecture_sv: bool,
    pub satisfies_conjecture_sv_variant: bool,
    pub satisfies_golden_conjecture: bool,
}

impl RegionVerdict {
    pub fn of(t: SppTriple) -> Self {
        let void = if t.n >= 3 {
            match (norm_k(t.n, t.sum as f64), norm_k(t.n, t.prod as f64)) {
                (Ok(x), Ok(y)) => in_solymosi_void(&NormalizedPair { n: t.n, x, y, scheme: crate::normalize::Scheme::K }),
                _ => false,
            }
        } else {
            false
        };
        RegionVerdict {
            pair: t,
            excluded_by_sez: sez_excludes(t.n, t.sum, t.prod),
            in_solymosi_void: void,
            satisfies_conjecture_sv: conjecture_sv_holds(t, SvFactor::AsPrinted),
            satisfies_conjecture_sv_variant: conjecture_sv_holds(t, SvFactor::GpConsistent),
            satisfies_golden_conjecture: t.n < 2 || golden_conjecture_holds(t),
        }
    }
}

/// Verdict CSV: `n,i,j,sez,void,sv_as_printed,sv_variant,golden`.
pub fn verdict_csv<'a>(triples: impl IntoIterator<Item = &'a SppTriple>) -> String {
    let mut out = String::from("n,i,j,sez,void,sv_as_printed,sv_variant,golden\n");
    for &t in triples {
        let v = RegionVerdict::of(t);
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{}",
            t.n,
            t.sum,
            t.prod,
            v.excluded_by_sez,
            v.in_solymosi_void,
            v.satisfies_conjecture_sv,
            v.satisfies_conjecture_sv_variant,
            v.satisfies_golden_conjecture
        );
    }
    out
}

/// Smallest arithmetic progression (by length) containing `a`.
pub fn enclosing_ap_length(a: &[u64]) -> u64 {
    if a.len() < 2 {
        return a.len() as u64;
    }
    let d = a
        .windows(2)
        .map(|w| w[1] - w[0])
        .fold(0, num_integer::gcd);
    (a[a.len() - 1] - a[0]) / d + 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::cmp::Ordering;

    fn t(n: u32, i: u32, j: u32) -> SppTriple {
        SppTriple { n, sum: i, prod: j }
    }

    #[test]
    fn easy() {
        assert_eq!(easy_bounds(3), (5, 6));
        assert_eq!(easy_bounds(1), (1, 1));
        assert_eq!(easy_bounds(5), (9, 15));
    }

    #[test]
    fn sez() {
        assert!(sez_excludes(5, 12, 9));
        assert!(!sez_excludes(5, 15, 9));
        assert!(!sez_excludes(3, 5, 6));
        for i in 9..=14 {
            for j in 9..=11 {
                assert!(sez_excludes(5, i, j));
            }
        }
        assert!(!sez_excludes(5, 14, 12));
    }

    #[test]
    fn corollary() {
        assert_eq!(spp_count_upper(3), 3);
        assert_eq!(spp_count_upper(4), 10);
        assert_eq!(spp_count_upper(5), 31);
        assert_eq!(spp_count_upper(6), 81);
        assert_eq!(grid_size(3), 4);
        assert_eq!(grid_size(6), 121);
    }

    #[test]
    fn solymosi() {
        assert!(solymosi_holds(t(8, 20, 22)));
        assert!(solymosi_holds(t(2, 3, 3)));
        assert!(solymosi_holds(t(32, 154, 154)));
        // 4 * 4 * 1 * (1 + 3) = 64 < 8^4
        assert!(!solymosi_holds(t(8, 4, 4)));
        assert_eq!(floor_log2(1), 0);
        assert_eq!(floor_log2(8), 3);
        assert_eq!(floor_log2(9), 3);
    }

    #[test]
    fn void() {
        let p = |x, y| NormalizedPair { n: 5, x, y, scheme: crate::normalize::Scheme::K };
        assert!(in_solymosi_void(&p(1.0, 2.0)));
        assert!(!in_solymosi_void(&p(2.0, 2.0)));
        assert!(in_solymosi_void(&p(1.2, 1.2)));
    }

    #[test]
    fn chang() {
        assert!(chang_bound_holds(t(5, 15, 9), Ratio::new(2, 1)));
        assert!(chang_bound_holds(t(6, 21, 11), Ratio::new(2, 1)));
        // hypothesis empty
        assert!(chang_bound_holds(t(5, 1, 15), Ratio::new(2, 1)));
        // hypothesis active and bound fails: 1 * 36 < 10^2 with C = 1, |AA| = 9 < 10
        assert!(!chang_bound_holds(t(10, 1, 9), Ratio::new(1, 1)));
        // fractional C: |AA| = 4 < (1/2)*10; 1^2 * 36 >= 10^2? no
        assert!(!chang_bound_holds(t(10, 1, 4), Ratio::new(1, 2)));
        assert!(chang_bound_holds(t(10, 17, 4), Ratio::new(1, 2)));
    }

    #[test]
    fn conjecture_sv_variants() {
        // 20 * 484 = 9680 < 36 * 289 = 10404
        assert!(!conjecture_sv_holds(t(8, 20, 22), SvFactor::AsPrinted));
        assert!(conjecture_sv_holds(t(8, 20, 22), SvFactor::GpConsistent));
        assert!(!conjecture_sv_holds(t(5, 15, 9), SvFactor::AsPrinted));
        assert!(conjecture_sv_holds(t(5, 15, 9), SvFactor::GpConsistent));
        assert!(conjecture_sv_equality(t(5, 15, 9)));
        assert!(!conjecture_sv_holds(t(1, 1, 1), SvFactor::AsPrinted));
        assert!(conjecture_sv_holds(t(1, 1, 1), SvFactor::GpConsistent));
    }

    #[test]
    fn golden() {
        assert!(golden_conjecture_holds(t(2, 3, 3)));
        assert!(golden_conjecture_holds(t(32, 104, 194)));
        assert!(golden_conjecture_holds(t(6, 13, 15)));
        // 32^φ ≈ 272.2: 272 is below, 273 above
        assert_eq!(compare_with_golden_power(272, 32), Ordering::Less);
        assert_eq!(compare_with_golden_power(273, 32), Ordering::Greater);
        // 2^φ ≈ 3.07
        assert_eq!(compare_with_golden_power(3, 2), Ordering::Less);
        assert_eq!(compare_with_golden_power(4, 2), Ordering::Greater);
    }

    #[test]
    fn golden_agrees_with_floating_point_away_from_the_boundary() {
        let phi = (1.0 + 5f64.sqrt()) / 2.0;
        for n in 2..=40u64 {
            let target = (n as f64).powf(phi);
            for s in 1..=3000u64 {
                let f = s as f64 - target;
                if f.abs() < 1e-6 * target {
                    continue;
                }
                let want = if f > 0.0 { Ordering::Greater } else { Ordering::Less };
                assert_eq!(compare_with_golden_power(s, n), want, "s={s} n={n}");
            }
        }
    }

    #[test]
    fn witness_bound() {
        assert_eq!(witness_max_bound(4), 16);
        assert_eq!(witness_max_bound(6), 128);
        assert_eq!(witness_max_bound(2), 2);
    }

    #[test]
    fn ap_containment() {
        assert_eq!(enclosing_ap_length(&[1, 3, 7]), 4);
        assert_eq!(enclosing_ap_length(&[5]), 1);
        assert_eq!(enclosing_ap_length(&[2, 4, 6]), 3);
    }

    #[test]
    fn verdict_rows() {
        let csv = verdict_csv(&[t(5, 15, 9), t(8, 20, 22)]);
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "n,i,j,sez,void,sv_as_printed,sv_variant,golden");
        assert_eq!(lines[1], "5,15,9,false,false,false,true,true");
        assert_eq!(lines.len(), 3);
    }
}
