//! Logarithmic normalizations that map `[2n-1, n(n+1)/2]` onto `[1, 2]`.
//!
//! * `K` : `log_n x + m_n x + b_n`, the affine correction fixed by both endpoints.
//! * `L` : plain `log_n x`.
//! * `K2`: `log_n((2x - 3n) / (1 - 2/n))`.
//! * `K3`: an affine map applied to `log x`, fixed by both endpoints.
//!
//! All evaluation is in `f64`; the schemes feed plot coordinates.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::sets::SppTriple;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Scheme {
    K,
    L,
    K2,
    K3,
}

impl Scheme {
    pub const ALL: [Scheme; 4] = [Scheme::K, Scheme::L, Scheme::K2, Scheme::K3];

    pub fn eval(self, n: u32, x: f64) -> Result<f64> {
        match self {
            Scheme::K => norm_k(n, x),
            Scheme::L => norm_l(n, x),
            Scheme::K2 => norm_k2(n, x),
            Scheme::K3 => norm_k3(n, x),
        }
    }
}

impl fmt::Display for Scheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Scheme::K => "K",
            Scheme::L => "L",
            Scheme::K2 => "K2",
            Scheme::K3 => "K3",
        })
    }
}

impl FromStr for Scheme {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "K" => Ok(Scheme::K),
            "L" => Ok(Scheme::L),
            "K2" => Ok(Scheme::K2),
            "K3" => Ok(Scheme::K3),
            _ => Err(Error::InvalidParameter(format!("unknown scheme {s:?}"))),
        }
    }
}

/// A normalized sum-product point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NormalizedPair {
    pub n: u32,
    pub x: f64,
    pub y: f64,
    pub scheme: Scheme,
}

fn require_n(n: u32) -> Result<f64> {
    if n < 3 {
        return Err(Error::Domain(format!("normalization needs n >= 3, got {n}")));
    }
    Ok(n as f64)
}

fn log_base(n: f64, x: f64) -> f64 {
    x.ln() / n.ln()
}

/// Slope `m_n` and intercept `b_n` of the `K` scheme.
pub fn k_coefficients(n: u32) -> Result<(f64, f64)> {
    let nf = require_n(n)?;
    let c_n1_2 = (nf - 1.0) * (nf - 2.0) / 2.0;
    let c_np1_2 = nf * (nf + 1.0) / 2.0;
    let m = log_base(nf, (4.0 * nf - 2.0) / (nf + 1.0)) / c_n1_2;
    let b = (nf * nf - 7.0 * nf + 4.0) / (nf * nf - 3.0 * nf + 2.0)
        + ((2.0 * nf - 1.0) * log_base(nf, c_np1_2) - c_np1_2 * log_base(nf, 2.0 * nf - 1.0)) / c_n1_2;
    Ok((m, b))
}

pub fn norm_k(n: u32, x: f64) -> Result<f64> {
    let nf = require_n(n)?;
    let lo = 2.0 * nf - 1.0;
    let hi = nf * (nf + 1.0) / 2.0;
    if !(lo..=hi).contains(&x) {
        return Err(Error::Domain(format!("K_{n} is defined on [{lo}, {hi}], got {x}")));
    }
    let (m, b) = k_coefficients(n)?;
    Ok(log_base(nf, x) + m * x + b)
}

pub fn norm_l(n: u32, x: f64) -> Result<f64> {
    let nf = require_n(n)?;
    if x < 1.0 {
        return Err(Error::Domain(format!("L_{n} needs x >= 1, got {x}")));
    }
    Ok(log_base(nf, x))
}

pub fn norm_k2(n: u32, x: f64) -> Result<f64> {
    let nf = require_n(n)?;
    if x <= 1.5 * nf {
        return Err(Error::Domain(format!("K2_{n} needs x > 3n/2 = {}, got {x}", 1.5 * nf)));
    }
    Ok(log_base(nf, (2.0 * x - 3.0 * nf) / (1.0 - 2.0 / nf)))
}

pub fn norm_k3(n: u32, x: f64) -> Result<f64> {
    let nf = require_n(n)?;
    if x < 1.0 {
        return Err(Error::Domain(format!("K3_{n} needs x >= 1, got {x}")));
    }
    let q = 2.0 * (1.0 - 2.0 * nf).powi(2);
    Ok((nf * (nf + 1.0) * x / q).ln() / (nf * (nf + 1.0) / (4.0 * nf - 2.0)).ln())
}

pub fn nspp_point(t: SppTriple, scheme: Scheme) -> Result<NormalizedPair> {
    Ok(NormalizedPair {
        n: t.n,
        x: scheme.eval(t.n, t.sum as f64)?,
        y: scheme.eval(t.n, t.prod as f64)?,
        scheme,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const TOL: f64 = 1e-9;

    #[test]
    fn endpoints() {
        for n in 3..=32u32 {
            let lo = (2 * n - 1) as f64;
            let hi = (n * (n + 1) / 2) as f64;
            for s in [Scheme::K, Scheme::K2, Scheme::K3] {
                assert!((s.eval(n, lo).unwrap() - 1.0).abs() <= TOL, "{s} n={n}");
                assert!((s.eval(n, hi).unwrap() - 2.0).abs() <= TOL, "{s} n={n}");
            }
        }
    }

    #[test]
    fn plain_log() {
        assert!((norm_l(4, 16.0).unwrap() - 2.0).abs() < 1e-15);
        assert_eq!(norm_l(7, 1.0).unwrap(), 0.0);
        assert!((norm_l(9, 3.0).unwrap() - 0.5).abs() < 1e-15);
    }

    #[test]
    fn strictly_increasing_on_grid() {
        for n in 3..=32u32 {
            let lo = 2 * n - 1;
            let hi = n * (n + 1) / 2;
            for s in Scheme::ALL {
                let mut prev = f64::NEG_INFINITY;
                for x in lo..=hi {
                    let v = s.eval(n, x as f64).unwrap();
                    assert!(v > prev, "{s} not increasing at n={n}, x={x}");
                    prev = v;
                }
            }
        }
    }

    #[test]
    fn k_and_k3_differ_inside() {
        for n in 4..=32u32 {
            let lo = 2 * n - 1;
            let hi = n * (n + 1) / 2;
            let gap = (lo + 1..hi)
                .map(|x| (norm_k(n, x as f64).unwrap() - norm_k3(n, x as f64).unwrap()).abs())
                .fold(0.0, f64::max);
            assert!(gap > 1e-6, "K and K3 coincide for n={n}");
        }
    }

    #[test]
    fn domain_errors() {
        assert!(norm_k(2, 3.0).is_err());
        assert!(norm_k(8, 14.0).is_err());
        assert!(norm_k(8, 37.0).is_err());
        assert!(norm_k2(6, 9.0).is_err());
        assert!(norm_k2(6, 8.0).is_err());
        assert!(norm_k2(6, 9.5).is_ok());
    }

    #[test]
    fn points() {
        let p = nspp_point(SppTriple { n: 3, sum: 5, prod: 6 }, Scheme::K).unwrap();
        assert!((p.x - 1.0).abs() < TOL && (p.y - 2.0).abs() < TOL);
        let p = nspp_point(SppTriple { n: 3, sum: 6, prod: 5 }, Scheme::K).unwrap();
        assert!((p.x - 2.0).abs() < TOL && (p.y - 1.0).abs() < TOL);
        let p = nspp_point(SppTriple { n: 8, sum: 20, prod: 22 }, Scheme::L).unwrap();
        assert!((p.x - 20f64.ln() / 8f64.ln()).abs() < 1e-15);
        assert!((p.y - 22f64.ln() / 8f64.ln()).abs() < 1e-15);
    }
}
