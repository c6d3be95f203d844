mod common;

use common::*;
use eiscong::HalfIntegralMatrix;
use std::time::Instant;

#[test]
fn unary_forms_up_to_64() {
    for p in [2u64, 3, 5] {
        for b in 1..=32 {
            let m = HalfIntegralMatrix::diag(&[b]).unwrap();
            oracle_matches(p, &m, full_j(p, &m)).unwrap();
        }
    }
}

#[test]
fn binary_forms_up_to_64() {
    let forms = binary_forms(64);
    for p in [2u64, 3, 5] {
        let t = Instant::now();
        let mut strat = 0;
        for m in &forms {
            if oracle_matches(p, m, full_j(p, m)).unwrap() == OracleKind::Stratified {
                strat += 1;
            }
        }
        eprintln!(
            "p={p}: {} forms, {strat} via kernel strata, {:?}",
            forms.len(),
            t.elapsed()
        );
    }
}

#[test]
fn ternary_sample_through_x4() {
    for s in ["1,0,0,1,0,1", "1,1,1,1,1,1", "1,0,0,1,0,2", "2,1,1,2,1,2"] {
        let m: HalfIntegralMatrix = s.parse().unwrap();
        for p in [2u64, 3] {
            oracle_matches(p, &m, 4).unwrap();
        }
    }
}
