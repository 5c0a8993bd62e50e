//! Seeded samplers for bounded-denominator strategies, weights and games.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::game::{BimatrixGame, Matrix, MixedProfile, MixedStrategy};
use crate::rational::{self, Rational};

/// Upper bound on the integer weights drawn for a random strategy.
pub const WEIGHT_BOUND: u64 = 64;
/// Denominator of random mixing weights.
pub const WEIGHT_DENOMINATOR: i64 = 64;

pub type SampleRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SampleRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Independent stream `stream` under the same seed.
pub fn rng_stream(seed: u64, stream: u64) -> SampleRng {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    r.set_stream(stream);
    r
}

/// Integer weights in `[0, WEIGHT_BOUND]`, normalized; redrawn if all zero.
pub fn random_strategy<R: Rng>(rng: &mut R, n: usize) -> MixedStrategy {
    loop {
        let w: Vec<u64> = (0..n).map(|_| rng.gen_range(0..=WEIGHT_BOUND)).collect();
        if let Ok(s) = MixedStrategy::from_weights(&w) {
            return s;
        }
    }
}

pub fn random_pure<R: Rng>(rng: &mut R, n: usize) -> MixedStrategy {
    MixedStrategy::pure(n, rng.gen_range(0..n))
}

pub fn random_profile<R: Rng>(rng: &mut R, g: &BimatrixGame) -> MixedProfile {
    MixedProfile::new(random_strategy(rng, g.rows()), random_strategy(rng, g.cols()))
}

pub fn random_pure_profile<R: Rng>(rng: &mut R, g: &BimatrixGame) -> MixedProfile {
    MixedProfile::new(random_pure(rng, g.rows()), random_pure(rng, g.cols()))
}

/// Dyadic weight `k/64` with `k` uniform in `0..=64`.
pub fn random_weight<R: Rng>(rng: &mut R) -> Rational {
    rational::frac(rng.gen_range(0..=WEIGHT_DENOMINATOR), WEIGHT_DENOMINATOR)
}

/// Dyadic weight strictly inside `(0, 1)`.
pub fn random_interior_weight<R: Rng>(rng: &mut R) -> Rational {
    rational::frac(rng.gen_range(1..WEIGHT_DENOMINATOR), WEIGHT_DENOMINATOR)
}

/// Uniform rational in `[lo, hi]` among fractions with denominator `1..=max_den`.
pub fn random_rational<R: Rng>(rng: &mut R, lo: &Rational, hi: &Rational, max_den: i64) -> Rational {
    assert!(lo <= hi && max_den >= 1);
    let d = rng.gen_range(1..=max_den);
    let den = num_bigint::BigInt::from(d);
    let lo_n = (lo * &den).ceil().to_integer();
    let hi_n = (hi * &den).floor().to_integer();
    if lo_n > hi_n {
        // no multiple of 1/d in range; fall back to the lower end
        return lo.clone();
    }
    let span: i64 = i64::try_from(&hi_n - &lo_n).expect("range fits i64");
    let n = lo_n + rng.gen_range(0..=span);
    Rational::new(n, den)
}

pub fn random_integer_matrix<R: Rng>(rng: &mut R, rows: usize, cols: usize, bound: i64) -> Matrix {
    Matrix::from_fn(rows, cols, |_, _| rational::int(rng.gen_range(-bound..=bound))).expect("dims ≥ 1")
}

pub fn random_integer_game<R: Rng>(rng: &mut R, rows: usize, cols: usize, bound: i64) -> BimatrixGame {
    let u1 = random_integer_matrix(rng, rows, cols, bound);
    let u2 = random_integer_matrix(rng, rows, cols, bound);
    BimatrixGame::new(u1, u2).expect("same shape")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    #[test]
    fn strategies_are_valid_and_seeded() {
        let mut a = rng(5);
        let mut b = rng(5);
        for n in 1..8 {
            let s = random_strategy(&mut a, n);
            assert!(MixedStrategy::new(s.probs().to_vec()).is_ok());
            assert!(s.probs().iter().all(|p| *p.denom() <= num_bigint::BigInt::from(64 * n as i64)));
            assert_eq!(s, random_strategy(&mut b, n));
        }
    }

    #[test]
    fn streams_differ() {
        let x: u64 = rng_stream(1, 0).gen();
        let y: u64 = rng_stream(1, 1).gen();
        assert_ne!(x, y);
    }

    #[test]
    fn random_rational_in_range() {
        let mut r = rng(9);
        let (lo, hi) = (frac(1, 2), int(8));
        for _ in 0..500 {
            let q = random_rational(&mut r, &lo, &hi, 8);
            assert!(q >= lo && q <= hi);
            assert!(*q.denom() <= num_bigint::BigInt::from(8));
        }
    }

    #[test]
    fn weights_in_unit_interval() {
        let mut r = rng(2);
        for _ in 0..200 {
            assert!(rational::is_in_unit_interval(&random_weight(&mut r)));
            let w = random_interior_weight(&mut r);
            assert!(w > rational::zero() && w < rational::one());
        }
    }
}
