//! Seeded input generators shared by the benchmarks.

use num_bigint::BigInt;
use quatlat::HurwitzQuaternion;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `count` Lipschitz integers with coordinates in `[-radius, radius]`.
pub fn lipschitz_batch(count: usize, radius: i64, seed: u64) -> Vec<HurwitzQuaternion> {
    let mut r = rng(seed);
    (0..count)
        .map(|_| {
            let c: [BigInt; 4] =
                std::array::from_fn(|_| BigInt::from(r.gen_range(-radius..=radius)));
            HurwitzQuaternion::from_coords(c)
        })
        .collect()
}

/// Nonzero Lipschitz integers, for use as divisors.
pub fn nonzero_batch(count: usize, radius: i64, seed: u64) -> Vec<HurwitzQuaternion> {
    let mut out = lipschitz_batch(count, radius, seed);
    for q in &mut out {
        if q.is_zero() {
            *q = HurwitzQuaternion::one();
        }
    }
    out
}
