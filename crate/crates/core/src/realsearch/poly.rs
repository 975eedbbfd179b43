//! Dense integer polynomials with exact root counting.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Integer polynomial, coefficients in ascending degree, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Poly {
    c: Vec<BigInt>,
}

impl Poly {
    pub fn new(mut c: Vec<BigInt>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        Poly { c }
    }

    pub fn from_i64(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn zero() -> Self {
        Poly { c: Vec::new() }
    }

    pub fn constant(v: i64) -> Self {
        Self::from_i64(&[v])
    }

    /// `x^d`.
    pub fn monomial(d: usize) -> Self {
        let mut c = vec![BigInt::zero(); d + 1];
        c[d] = BigInt::one();
        Poly { c }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.c
    }

    /// Coefficients as `i64`, if they all fit.
    pub fn coeffs_i64(&self) -> Option<Vec<i64>> {
        self.c.iter().map(|x| x.to_i64()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.c.len().saturating_sub(1)
    }

    pub fn lead(&self) -> BigInt {
        self.c.last().cloned().unwrap_or_default()
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for a in self.c.iter().rev() {
            acc = acc * x + BigRational::from_integer(a.clone());
        }
        acc
    }

    pub fn sign_at(&self, x: &BigRational) -> Ordering {
        self.eval(x).cmp(&BigRational::zero())
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.c.iter().rev().fold(0.0, |acc, a| acc * x + a.to_f64().unwrap_or(f64::NAN))
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.c
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, a)| a * BigInt::from(k))
                .collect(),
        )
    }

    pub fn content(&self) -> BigInt {
        self.c.iter().fold(BigInt::zero(), |g, a| g.gcd(a))
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let mut g = self.content();
        if self.lead().is_negative() {
            g = -g;
        }
        Poly { c: self.c.iter().map(|a| a / &g).collect() }
    }

    fn scale(&self, k: &BigInt) -> Poly {
        Poly::new(self.c.iter().map(|a| a * k).collect())
    }

    /// `(q, r)` with `lc(b)^(deg a - deg b + 1) a = q b + r`.
    pub fn pseudo_divmod(&self, b: &Poly) -> (Poly, Poly) {
        assert!(!b.is_zero(), "division by the zero polynomial");
        if self.is_zero() || self.degree() < b.degree() {
            return (Poly::zero(), self.clone());
        }
        let lb = b.lead();
        let mut r = self.clone();
        let mut q = Poly::zero();
        let mut steps = self.degree() - b.degree() + 1;
        while !r.is_zero() && r.degree() >= b.degree() {
            let d = r.degree() - b.degree();
            let t = Poly::monomial(d).scale(&r.lead());
            q = &q.scale(&lb) + &t;
            r = &r.scale(&lb) - &(&t * b);
            steps -= 1;
        }
        let f = num_traits::pow(lb, steps);
        (q.scale(&f), r.scale(&f))
    }

    pub fn pseudo_rem(&self, b: &Poly) -> Poly {
        self.pseudo_divmod(b).1
    }

    /// Primitive gcd with positive leading coefficient (the zero polynomial if both are zero).
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.primitive(), other.primitive());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive();
            a = b;
            b = r;
        }
        a.primitive()
    }

    /// Exact quotient up to a constant factor, made primitive.
    pub fn div_primitive(&self, b: &Poly) -> Poly {
        let (q, r) = self.pseudo_divmod(b);
        debug_assert!(r.is_zero(), "inexact division");
        q.primitive()
    }

    /// `p / gcd(p, p')`, primitive.
    pub fn square_free(&self) -> Poly {
        if self.degree() == 0 {
            return self.primitive();
        }
        let g = self.gcd(&self.derivative());
        self.div_primitive(&g)
    }

    /// Rational roots, by the rational-root theorem.
    pub fn rational_roots(&self) -> Vec<BigRational> {
        let mut out = Vec::new();
        if self.is_zero() {
            return out;
        }
        let mut p = self.clone();
        if p.c[0].is_zero() {
            out.push(BigRational::zero());
            let k = p.c.iter().position(|a| !a.is_zero()).unwrap();
            p = Poly::new(p.c[k..].to_vec());
        }
        if p.degree() == 0 {
            return out;
        }
        let nums = divisors_of(&p.c[0]);
        let dens = divisors_of(&p.lead());
        let mut cands: Vec<BigRational> = Vec::new();
        for a in &nums {
            for b in &dens {
                let r = BigRational::new(a.clone(), b.clone());
                cands.push(r.clone());
                cands.push(-r);
            }
        }
        cands.sort();
        cands.dedup();
        out.extend(cands.into_iter().filter(|r| p.eval(r).is_zero()));
        out.sort();
        out
    }

    /// Removes every rational root (with multiplicity) and returns the primitive remainder.
    pub fn without_rational_roots(&self) -> Poly {
        let mut p = self.primitive();
        loop {
            let roots = p.rational_roots();
            if roots.is_empty() {
                return p;
            }
            for r in roots {
                let lin = Poly::new(vec![-r.numer().clone(), r.denom().clone()]);
                while !p.is_zero() && p.degree() > 0 && p.eval(&r).is_zero() {
                    p = p.div_primitive(&lin);
                }
            }
        }
    }
}

fn divisors_of(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let v = n.to_u64().expect("coefficient too large for the rational-root test");
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= v {
        if v % d == 0 {
            out.push(BigInt::from(d));
            out.push(BigInt::from(v / d));
        }
        d += 1;
    }
    out
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, o: &Poly) -> Poly {
        let n = self.c.len().max(o.c.len());
        Poly::new(
            (0..n)
                .map(|k| self.c.get(k).cloned().unwrap_or_default() + o.c.get(k).cloned().unwrap_or_default())
                .collect(),
        )
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, o: &Poly) -> Poly {
        self + &(-o)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { c: self.c.iter().map(|a| -a).collect() }
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut c = vec![BigInt::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            for (j, b) in o.c.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        Poly::new(c)
    }
}

impl fmt::Display for Poly {
    /// Human form, highest degree first, e.g. `x^2 - x - 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (d, a) in self.c.iter().enumerate().rev() {
            if a.is_zero() {
                continue;
            }
            let neg = a.is_negative();
            let mag = a.abs();
            match (first, neg) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            let unit = mag.is_one() && d > 0;
            if !unit {
                write!(f, "{mag}")?;
            }
            match d {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{d}")?,
            }
        }
        Ok(())
    }
}

impl std::str::FromStr for Poly {
    type Err = crate::error::Error;

    /// Parses sums of terms like `3x^2`, `-x`, `7`; `r` is accepted as the variable too.
    fn from_str(s: &str) -> crate::error::Result<Self> {
        let bad = || crate::error::Error::InvalidParameter(format!("bad polynomial {s:?}"));
        let t: String = s.chars().filter(|c| !c.is_whitespace()).map(|c| if c == 'r' { 'x' } else { c }).collect();
        if t.is_empty() {
            return Err(bad());
        }
        let mut terms = Vec::new();
        let mut start = 0;
        for (k, c) in t.char_indices() {
            if (c == '+' || c == '-') && k > start {
                terms.push(&t[start..k]);
                start = k;
            }
        }
        terms.push(&t[start..]);
        let mut c: Vec<BigInt> = Vec::new();
        for term in terms {
            let (neg, body) = match term.as_bytes().first() {
                Some(b'-') => (true, &term[1..]),
                Some(b'+') => (false, &term[1..]),
                _ => (false, term),
            };
            let (coef, deg) = match body.find('x') {
                None => (body.parse::<BigInt>().map_err(|_| bad())?, 0),
                Some(p) => {
                    let coef = if p == 0 { BigInt::one() } else { body[..p].parse::<BigInt>().map_err(|_| bad())? };
                    let deg = match &body[p + 1..] {
                        "" => 1,
                        e => e.strip_prefix('^').ok_or_else(bad)?.parse::<usize>().map_err(|_| bad())?,
                    };
                    (coef, deg)
                }
            };
            if c.len() <= deg {
                c.resize(deg + 1, BigInt::zero());
            }
            c[deg] += if neg { -coef } else { coef };
        }
        Ok(Poly::new(c))
    }
}

/// Sturm chain of a square-free polynomial.
#[derive(Debug, Clone)]
pub struct Sturm {
    chain: Vec<Poly>,
}

impl Sturm {
    pub fn new(p: &Poly) -> Self {
        let mut chain = vec![p.clone()];
        if p.degree() > 0 {
            chain.push(p.derivative());
            loop {
                let n = chain.len();
                let (a, b) = (&chain[n - 2], &chain[n - 1]);
                if b.degree() == 0 {
                    break;
                }
                let e = a.degree() - b.degree() + 1;
                let mut r = -&a.pseudo_rem(b);
                if b.lead().is_negative() && e % 2 == 1 {
                    r = -&r;
                }
                if r.is_zero() {
                    break;
                }
                // dividing by the (positive) content keeps the sign pattern
                let g = r.content();
                let r = Poly::new(r.c.iter().map(|a| a / &g).collect());
                chain.push(r);
            }
        }
        Sturm { chain }
    }

    fn variations(&self, x: &BigRational) -> usize {
        let mut count = 0;
        let mut prev = Ordering::Equal;
        for p in &self.chain {
            let s = p.sign_at(x);
            if s == Ordering::Equal {
                continue;
            }
            if prev != Ordering::Equal && s != prev {
                count += 1;
            }
            prev = s;
        }
        count
    }

    /// Number of distinct roots in the half-open interval `(a, b]`.
    pub fn count(&self, a: &BigRational, b: &BigRational) -> usize {
        self.variations(a).saturating_sub(self.variations(b))
    }
}

/// Disjoint open intervals, each containing exactly one root of `p` in `(lo, hi)`.
///
/// `p` must be square-free; the returned endpoints are never roots.
pub fn isolate_roots(p: &Poly, lo: &BigRational, hi: &BigRational) -> Vec<(BigRational, BigRational)> {
    let mut out = Vec::new();
    if p.degree() == 0 {
        return out;
    }
    let sturm = Sturm::new(p);
    let nudge = |a: &BigRational, b: &BigRational, target: BigRational| -> BigRational {
        // move off a root, staying strictly inside (a, b)
        let mut x = target;
        let mut k = 3i64;
        while p.eval(&x).is_zero() {
            x = a + (b - a) / BigRational::from_integer(BigInt::from(k));
            k += 1;
        }
        x
    };
    let lo = if p.eval(lo).is_zero() {
        nudge(lo, hi, lo + (hi - lo) / BigRational::from_integer(BigInt::from(1 << 20)))
    } else {
        lo.clone()
    };
    let hi = if p.eval(hi).is_zero() {
        nudge(&lo, hi, hi - (hi - &lo) / BigRational::from_integer(BigInt::from(1 << 20)))
    } else {
        hi.clone()
    };
    let mut stack = vec![(lo, hi)];
    while let Some((a, b)) = stack.pop() {
        match sturm.count(&a, &b) {
            0 => {}
            1 => out.push((a, b)),
            _ => {
                let two = BigRational::from_integer(BigInt::from(2));
                let m = nudge(&a, &b, (&a + &b) / two);
                stack.push((m.clone(), b));
                stack.push((a, m));
            }
        }
    }
    out.sort();
    out
}
