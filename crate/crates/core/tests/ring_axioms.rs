//! Ring axioms for every scalar ring, on seeded random elements.

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use quasidet::scalar::{BlockRing, Codec, MatRing, QRing, QSeriesRing, SampleProfile, SampleRing, TruncRing};

fn triple<R: SampleRing>(ring: &R, seed: u64) -> [R::Elem; 3] {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = SampleProfile::default();
    [0; 3].map(|_| ring.sample(&mut rng, &p))
}

fn check_axioms<R: SampleRing>(ring: &R, seed: u64) -> Result<(), TestCaseError> {
    let [a, b, c] = triple(ring, seed);
    let r = ring;
    prop_assert_eq!(r.add(&r.add(&a, &b), &c), r.add(&a, &r.add(&b, &c)));
    prop_assert_eq!(r.add(&a, &b), r.add(&b, &a));
    prop_assert_eq!(r.add(&a, &r.zero()), a.clone());
    prop_assert!(r.is_zero(&r.add(&a, &r.neg(&a))));
    prop_assert_eq!(r.mul(&r.mul(&a, &b), &c), r.mul(&a, &r.mul(&b, &c)));
    prop_assert_eq!(r.mul(&a, &r.one()), a.clone());
    prop_assert_eq!(r.mul(&r.one(), &a), a.clone());
    prop_assert_eq!(r.mul(&a, &r.add(&b, &c)), r.add(&r.mul(&a, &b), &r.mul(&a, &c)));
    prop_assert_eq!(r.mul(&r.add(&a, &b), &c), r.add(&r.mul(&a, &c), &r.mul(&b, &c)));
    if let Some(inv) = r.try_inv(&a) {
        prop_assert_eq!(r.mul(&a, &inv), r.one());
        prop_assert_eq!(r.mul(&inv, &a), r.one());
    }
    prop_assert!(r.try_inv(&r.zero()).is_none());
    // Rational constants are central.
    let k = r.from_int(7);
    prop_assert_eq!(r.mul(&k, &a), r.mul(&a, &k));
    Ok(())
}

fn check_codec<R: SampleRing + Codec>(ring: &R, seed: u64) -> Result<(), TestCaseError> {
    for x in triple(ring, seed) {
        prop_assert_eq!(ring.decode(&ring.encode(&x)).unwrap(), x);
    }
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rationals(seed in any::<u64>()) {
        check_axioms(&QRing, seed)?;
        check_codec(&QRing, seed)?;
    }

    #[test]
    fn matrices(seed in any::<u64>(), d in 1usize..=3) {
        check_axioms(&MatRing::new(d), seed)?;
        check_codec(&MatRing::new(d), seed)?;
    }

    #[test]
    fn truncated_over_matrices(seed in any::<u64>(), order in 0usize..=2) {
        check_axioms(&TruncRing::new(MatRing::new(2), order), seed)?;
    }

    #[test]
    fn blocks(seed in any::<u64>(), m in 1usize..=3) {
        check_axioms(&BlockRing::new(QRing, m), seed)?;
    }

    #[test]
    fn q_series(seed in any::<u64>()) {
        check_axioms(&QSeriesRing::new(3), seed)?;
    }
}
