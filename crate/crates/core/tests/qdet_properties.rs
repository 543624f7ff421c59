//! Cross-checks of the quasideterminant engine against independent routes.

use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use quasidet::linalg::DenseQ;
use quasidet::quasidet::matrix_inverse;
use quasidet::scalar::{MatRing, QRing, SampleProfile, SampleRing};
use quasidet::{qdet, Error, Method, NcMatrix};

fn random<R: SampleRing>(ring: &R, n: usize, seed: u64) -> NcMatrix<R::Elem> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = SampleProfile::default();
    NcMatrix::from_fn(n, n, |_, _| ring.sample(&mut rng, &p))
}

fn defined<T>(r: Result<T, Error>) -> Result<Option<T>, TestCaseError> {
    match r {
        Ok(v) => Ok(Some(v)),
        Err(e) if e.is_domain() => Ok(None),
        Err(e) => Err(TestCaseError::fail(e.to_string())),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn definitions_agree(seed in any::<u64>(), n in 1usize..=4, d in 1usize..=2, p in 1usize..=4, q in 1usize..=4) {
        prop_assume!(p <= n && q <= n);
        let ring = MatRing::new(d);
        let a = random(&ring, n, seed);
        let rec = defined(qdet(&ring, &a, p, q, Method::Recursive))?;
        let inv = defined(qdet(&ring, &a, p, q, Method::MinorInverse))?;
        if let (Some(x), Some(y)) = (rec, inv) {
            prop_assert_eq!(x, y);
        }
    }

    #[test]
    fn commutative_ratio_of_determinants(seed in any::<u64>(), n in 1usize..=5, p in 1usize..=5, q in 1usize..=5) {
        prop_assume!(p <= n && q <= n);
        let a = random(&QRing, n, seed);
        let dense = |m: &NcMatrix<BigRational>| DenseQ::from_fn(m.nrows(), m.ncols(), |r, c| m.at(r, c).clone());
        let det = dense(&a).det_bareiss();
        let minor = if n == 1 { BigRational::one() } else { dense(&a.delete_row_col(p, q).unwrap()).det_bareiss() };
        if let Some(x) = defined(qdet(&QRing, &a, p, q, Method::Auto))? {
            let sign = if (p + q) % 2 == 0 { BigRational::one() } else { -BigRational::one() };
            prop_assert_eq!(x * minor, sign * det);
        } else {
            prop_assert!(minor.is_zero() || det.is_zero());
        }
    }

    #[test]
    fn inverse_is_two_sided(seed in any::<u64>(), n in 1usize..=4, d in 1usize..=2) {
        let ring = MatRing::new(d);
        let a = random(&ring, n, seed);
        if let Some(b) = defined(matrix_inverse(&ring, &a))? {
            let id = NcMatrix::identity(&ring, n);
            prop_assert_eq!(a.mul(&ring, &b).unwrap(), id.clone());
            prop_assert_eq!(b.mul(&ring, &a).unwrap(), id);
        }
    }
}
