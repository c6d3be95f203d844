mod common;

use common::*;
use eiscong::qexp::{hecke_t, miller_basis};
use eiscong::{local_f, HalfIntegralMatrix};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn local_f_is_a_class_invariant(seed in any::<u64>(), n in 1usize..=3, pi in 0usize..3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = [2u64, 3, 5][pi];
        let b = random_pd(&mut rng, n);
        let u = random_unimodular(&mut rng, n);
        let c = b.transform(&u).unwrap();
        prop_assert_eq!(local_f(p, &b).unwrap(), local_f(p, &c).unwrap(), "B={} UBU^t={}", b, c);
    }

    #[test]
    fn nondeg_part_invariants(seed in any::<u64>(), n in 1usize..=3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let t = random_psd(&mut rng, n);
        let u = random_unimodular(&mut rng, n);
        let s = t.transform(&u).unwrap();
        let (a, b) = (t.nondeg_part().unwrap(), s.nondeg_part().unwrap());
        prop_assert_eq!(a.matrix.size(), t.rank());
        prop_assert_eq!(a.det2, b.det2);
        prop_assert!(a.matrix.is_pd());
        if t.rank() % 2 == 0 {
            prop_assert_eq!(t.chi_star().unwrap(), s.chi_star().unwrap());
        }
        for p in [2u64, 3] {
            prop_assert_eq!(local_f(p, &a.matrix).unwrap(), local_f(p, &b.matrix).unwrap());
        }
    }

    #[test]
    fn padding_keeps_nondeg_part(seed in any::<u64>(), n in 1usize..=2) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let t = random_pd(&mut rng, n);
        let padded = t.pad_zero(3 - n).unwrap();
        let part = padded.nondeg_part().unwrap();
        prop_assert_eq!(part.det2, t.det2());
        prop_assert_eq!(local_f(3, &part.matrix).unwrap(), local_f(3, &t).unwrap());
    }
}

#[test]
fn transform_recovers_nondeg_block() {
    let t: HalfIntegralMatrix = "1,1,0,1,0,0".parse().unwrap();
    let part = t.nondeg_part().unwrap();
    let u = part.transform;
    let moved = t.transform(&u).unwrap();
    assert_eq!(moved, part.matrix.pad_zero(1).unwrap());
}

#[test]
fn hecke_operators_commute_on_miller_bases() {
    for k in [12u32, 16, 20, 24, 28] {
        let basis = miller_basis(k, 120).unwrap();
        for f in &basis.modular {
            for (p, q) in [(2u64, 3u64), (2, 5), (3, 5), (2, 7)] {
                let pq = hecke_t(p, &hecke_t(q, f).unwrap()).unwrap();
                let qp = hecke_t(q, &hecke_t(p, f).unwrap()).unwrap();
                let prec = pq.precision().min(qp.precision());
                assert_eq!(pq.truncate(prec), qp.truncate(prec), "k={k} p={p} q={q}");
                assert!(basis.in_modular_span(&pq), "k={k}: T({p})T({q}) left M_k");
            }
        }
    }
}
