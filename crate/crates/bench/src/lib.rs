//! Fixtures shared by the benchmarks.

use eiscong::HalfIntegralMatrix;

pub fn matrix(s: &str) -> HalfIntegralMatrix {
    s.parse().expect("fixture matrices are well formed")
}

/// `(p, T)` pairs of increasing cost for the local series.
pub fn local_series_cases() -> Vec<(&'static str, u64, HalfIntegralMatrix)> {
    vec![
        ("unary_p2", 2, matrix("16")),
        ("binary_p3", 3, matrix("3,0,6")),
        ("ternary_identity_p2", 2, matrix("1,0,0,1,0,1")),
        ("ternary_p2", 2, matrix("2,1,0,2,1,4")),
        ("ternary_p3", 3, matrix("3,0,0,3,0,3")),
    ]
}
