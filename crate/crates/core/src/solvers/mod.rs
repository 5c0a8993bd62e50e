//! Exact minimax solving of zero-sum games and a support-enumeration
//! equilibrium oracle.

pub mod simplex;
mod support;

pub use support::{support_enumeration, Equilibrium, EquilibriumSet, DEFAULT_MAX_DIM};

use num_traits::{Signed, Zero};

use crate::adversarial::{self, AffineTransform};
use crate::error::{Error, Result};
use crate::game::{BimatrixGame, Matrix, MixedStrategy};
use crate::rational::{self, Rational};

/// Value and optimal strategies of a zero-sum game, from the row player's side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinimaxSolution {
    pub value: Rational,
    pub row_strategy: MixedStrategy,
    pub col_strategy: MixedStrategy,
}

impl MinimaxSolution {
    /// The row strategy secures at least `value` against every column and the
    /// column strategy concedes at most `value` against every row.
    pub fn certifies(&self, v1: &Matrix) -> bool {
        v1.vec_mul(self.row_strategy.probs()).iter().all(|p| *p >= self.value)
            && v1.mul_vec(self.col_strategy.probs()).iter().all(|p| *p <= self.value)
    }
}

/// Solves `max_x min_j xᵀ V e_j` for the row payoffs `V = v₁` of a zero-sum game.
///
/// `V` is shifted to be strictly positive, then the column player's
/// `max 1ᵀy s.t. V y ≤ 1, y ≥ 0` is solved by simplex; the row strategy is read
/// off the dual.
pub fn minimax_solve(z: &BimatrixGame) -> Result<MinimaxSolution> {
    if let Some((i, j)) = z.first_nonzero_sum_cell() {
        return Err(Error::NotZeroSum(i, j));
    }
    minimax_of_matrix(z.u1())
}

/// Same as [`minimax_solve`] for a bare row-payoff matrix.
pub fn minimax_of_matrix(v: &Matrix) -> Result<MinimaxSolution> {
    let min = v.min();
    let shift = if min.is_positive() { Rational::zero() } else { rational::one() - min };
    let a = v.to_rows().into_iter().map(|r| r.into_iter().map(|x| x + &shift).collect()).collect::<Vec<Vec<_>>>();
    let ones_b = vec![rational::one(); v.rows()];
    let ones_c = vec![rational::one(); v.cols()];
    let lp = simplex::maximize(&a, &ones_b, &ones_c)?;
    if !lp.objective.is_positive() {
        return Err(Error::Internal("nonpositive LP optimum for a positive matrix".into()));
    }
    let scale = lp.objective.recip();
    let normalize = |xs: Vec<Rational>| MixedStrategy::new(xs.into_iter().map(|x| x * &scale).collect());
    let sol = MinimaxSolution {
        value: &scale - &shift,
        row_strategy: normalize(lp.dual)?,
        col_strategy: normalize(lp.primal)?,
    };
    if !sol.certifies(v) {
        return Err(Error::Internal("minimax strategies fail their guarantees".into()));
    }
    Ok(sol)
}

/// Whether normalizing `g` by `t` leaves the equilibrium strategy set
/// unchanged, with every first-player payoff recovered as `(v₁ + β)/α`.
pub fn equilibrium_invariance_check(g: &BimatrixGame, t: &AffineTransform, max_dim: usize) -> Result<bool> {
    let z = adversarial::to_zero_sum(g, t);
    let original = support_enumeration(g, max_dim)?;
    let normalized = support_enumeration(&z, max_dim)?;
    if original.profiles() != normalized.profiles() {
        return Ok(false);
    }
    Ok(normalized.equilibria.iter().all(|e| {
        let back = adversarial::to_original_scale(t, &e.payoff1);
        original
            .find(&e.row, &e.col)
            .is_some_and(|o| o.payoff1 == back && o.payoff2 == e.payoff2)
    }))
}

/// Whether every listed equilibrium pays the first player exactly `value`.
pub fn value_matches_equilibria(value: &Rational, set: &EquilibriumSet) -> bool {
    set.equilibria.iter().all(|e| e.payoff1 == *value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    fn zs(rows: &[&[i64]]) -> BimatrixGame {
        let u1 = Matrix::from_i64(rows).unwrap();
        let u2 = u1.map(|x| -x);
        BimatrixGame::new(u1, u2).unwrap()
    }

    fn half() -> MixedStrategy {
        MixedStrategy::uniform(2)
    }

    #[test]
    fn matching_pennies() {
        let s = minimax_solve(&zs(&[&[1, -1], &[-1, 1]])).unwrap();
        assert_eq!(s.value, int(0));
        assert_eq!((s.row_strategy, s.col_strategy), (half(), half()));
    }

    #[test]
    fn identity_game() {
        let s = minimax_solve(&zs(&[&[1, 0], &[0, 1]])).unwrap();
        assert_eq!(s.value, frac(1, 2));
        assert_eq!((s.row_strategy, s.col_strategy), (half(), half()));
    }

    #[test]
    fn single_cell() {
        for c in [-4, 0, 7] {
            let s = minimax_solve(&zs(&[&[c]])).unwrap();
            assert_eq!(s.value, int(c));
            assert_eq!(s.row_strategy, MixedStrategy::pure(1, 0));
        }
    }

    #[test]
    fn dungeon_quest() {
        // rock-paper-scissors with a double-damage blow; value 1/12
        let s = minimax_solve(&zs(&[&[0, 2, -1], &[-1, 0, 1], &[1, -1, 0]])).unwrap();
        assert_eq!(s.value, frac(1, 12));
        assert!(s.certifies(&Matrix::from_i64(&[&[0, 2, -1], &[-1, 0, 1], &[1, -1, 0]]).unwrap()));
    }

    #[test]
    fn saddle_point() {
        let s = minimax_solve(&zs(&[&[3, 5], &[1, 2]])).unwrap();
        assert_eq!(s.value, int(3));
        assert_eq!(s.row_strategy, MixedStrategy::pure(2, 0));
        assert_eq!(s.col_strategy, MixedStrategy::pure(2, 0));
    }

    #[test]
    fn rejects_non_zero_sum() {
        let g = BimatrixGame::from_i64(&[&[1, 2]], &[&[-1, -1]]).unwrap();
        assert_eq!(minimax_solve(&g).unwrap_err(), Error::NotZeroSum(0, 1));
    }

    #[test]
    fn value_is_affine_equivariant() {
        let base = zs(&[&[4, -3, 2], &[-1, 5, 0]]);
        let v = minimax_solve(&base).unwrap();
        let t = AffineTransform::new(frac(5, 3), frac(-7, 2)).unwrap();
        let scaled = base.u1().map(|x| t.alpha() * x - t.beta());
        let g = BimatrixGame::new(scaled.clone(), scaled.map(|x| -x)).unwrap();
        let w = minimax_solve(&g).unwrap();
        assert_eq!(w.value, t.alpha() * &v.value - t.beta());
        assert!(w.certifies(&scaled));
        assert!(v.certifies(base.u1()));
        let carried = MinimaxSolution { value: w.value.clone(), ..v };
        assert!(carried.certifies(&scaled));
    }

    #[test]
    fn invariance_examples() {
        let pennies = zs(&[&[1, -1], &[-1, 1]]);
        assert!(equilibrium_invariance_check(&pennies, &AffineTransform::identity(), 5).unwrap());
        let g = BimatrixGame::from_i64(&[&[1, -1], &[-1, 1]], &[&[1, 5], &[5, 1]]).unwrap();
        let t = AffineTransform::new(int(2), int(3)).unwrap();
        assert!(equilibrium_invariance_check(&g, &t, 5).unwrap());
        let z = adversarial::to_zero_sum(&g, &t);
        let eq = support_enumeration(&z, 5).unwrap();
        assert_eq!(eq.equilibria.len(), 1);
        assert_eq!(eq.equilibria[0].payoff1, int(-3));
        assert_eq!(adversarial::to_original_scale(&t, &eq.equilibria[0].payoff1), int(0));
    }
}
