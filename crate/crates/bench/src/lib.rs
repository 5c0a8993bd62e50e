//! Fixtures shared by the criterion benches.

use zerosum_core::gen::{self, Family, GenSpec};
use zerosum_core::BimatrixGame;

/// Square sizes exercised by the benches.
pub const SIZES: [usize; 4] = [2, 5, 10, 20];

/// Seeded square game from `family`; panics only on a generator bug.
pub fn fixture(family: Family, n: usize, seed: u64) -> BimatrixGame {
    gen::gen(&GenSpec::new(family, n, n, seed)).expect("generator rejected a valid spec")
}
