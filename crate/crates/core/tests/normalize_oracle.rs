//! Normalization schemes against 50-digit reference values produced by
//! `tests/oracles/normalize.py` (mpmath).

use spp_core::normalize::Scheme;

const REFERENCE: &[(&str, u32, u32, f64)] = &[
    ("K", 8, 20, 1.27620024532836112732626),
    ("K", 8, 22, 1.377176518139171371893611),
    ("K", 14, 55, 1.443839818160452971553993),
    ("K", 14, 43, 1.275901134138297355910523),
    ("K", 32, 154, 1.333554058138727359723051),
    ("L", 8, 20, 1.440642698295787449290106),
    ("L", 32, 194, 1.519982568437425535965244),
    ("K2", 6, 15, 1.613147192765458413129754),
    ("K2", 6, 19, 1.898244401703927173073233),
    ("K2", 20, 100, 1.684730969727014993565121),
    ("K3", 10, 30, 1.429730823527830569460311),
    ("K3", 5, 12, 1.563170794626324658154449),
    ("K3", 32, 300, 1.734090295704076564597592),
];

#[test]
fn matches_high_precision_reference() {
    for &(scheme, n, x, want) in REFERENCE {
        let s: Scheme = scheme.parse().unwrap();
        let got = s.eval(n, x as f64).unwrap();
        assert!((got - want).abs() <= 1e-9, "{scheme}({n},{x}) = {got}, reference {want}");
    }
}

#[test]
fn interior_values_lie_strictly_between_endpoints() {
    for &(scheme, n, x, _) in REFERENCE {
        let s: Scheme = scheme.parse().unwrap();
        if s == Scheme::L {
            continue;
        }
        let v = s.eval(n, x as f64).unwrap();
        assert!(v > 1.0 && v < 2.0, "{scheme}({n},{x}) = {v}");
    }
}
