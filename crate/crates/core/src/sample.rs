//! Seeded sampling of evaluation points.
//!
//! Every random stream is derived from `(seed, label, n, d, index)`, so a
//! cell of a parallel run sees exactly the values a serial run would.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::formula::EvalAssignment;
use crate::scalar::{SampleProfile, SampleRing};

/// FNV-1a, 64-bit.
pub fn fnv1a(s: &str) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in s.bytes() {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    h
}

fn splitmix(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    x ^ (x >> 31)
}

/// Seed of the stream for sample `index` of cell `(label, n, d)`.
pub fn stream_seed(seed: u64, label: &str, n: usize, d: usize, index: usize) -> u64 {
    [fnv1a(label), n as u64, d as u64, index as u64].iter().fold(splitmix(seed), |acc, &x| splitmix(acc ^ x))
}

pub fn stream(seed: u64, label: &str, n: usize, d: usize, index: usize) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(stream_seed(seed, label, n, d, index))
}

/// Independent values for `vars`, drawn in the given order.
pub fn sample_assignment<R, G>(vars: &[String], ring: &R, rng: &mut G, profile: &SampleProfile) -> EvalAssignment<R::Elem>
where
    R: SampleRing,
    G: rand::Rng + ?Sized,
{
    vars.iter().map(|v| (v.clone(), ring.sample(rng, profile))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{MatRing, QRing};

    #[test]
    fn same_seed_same_assignment() {
        let vars = vec!["x".to_string(), "y".to_string()];
        let ring = MatRing::new(2);
        let p = SampleProfile::default();
        let a = sample_assignment(&vars, &ring, &mut stream(7, "t", 1, 2, 0), &p);
        let b = sample_assignment(&vars, &ring, &mut stream(7, "t", 1, 2, 0), &p);
        assert_eq!(a, b);
        let c = sample_assignment(&vars, &ring, &mut stream(7, "t", 1, 2, 1), &p);
        assert_ne!(a, c);
        let x = sample_assignment(&vars[..1], &QRing, &mut stream(1, "t", 1, 1, 0), &p);
        assert_eq!(x, sample_assignment(&vars[..1], &QRing, &mut stream(1, "t", 1, 1, 0), &p));
    }

    #[test]
    fn streams_separate_cells() {
        let seeds: std::collections::HashSet<u64> =
            (0..4).flat_map(|n| (1..4).map(move |d| stream_seed(0xC0FFEE, "ID", n, d, 0))).collect();
        assert_eq!(seeds.len(), 12);
    }

    #[test]
    fn sampled_rationals_respect_bounds() {
        let p = SampleProfile::default();
        let mut rng = stream(3, "bounds", 0, 0, 0);
        for _ in 0..200 {
            let q = p.sample_rational(&mut rng);
            assert!(q.denom() <= &10.into());
            assert!(q.numer().magnitude() <= &10u32.into());
        }
    }
}
