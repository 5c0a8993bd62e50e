//! Strategic zero-sum detection: positive weights `λ₁, λ₂` and
//! opponent-dependent offsets with `λ₁·u₁[i][j] + λ₂·u₂[i][j] = a[i] + b[j]`.
//!
//! Adding a function of the opponent's action to a player's payoff leaves
//! their best replies unchanged, so such a game is strategically equivalent to
//! the zero-sum game `⟨λ₁·u₁ − b, λ₂·u₂ − a⟩`.

use num_traits::{Signed, Zero};

use crate::game::{BimatrixGame, Matrix};
use crate::rational::{self, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MvDecomposition {
    pub lambda1: Rational,
    pub lambda2: Rational,
    /// `a`, with `a[0] = 0`.
    pub row_offsets: Vec<Rational>,
    pub col_offsets: Vec<Rational>,
}

impl MvDecomposition {
    /// Re-checks every cell equation and the sign conditions.
    pub fn verifies(&self, g: &BimatrixGame) -> bool {
        self.lambda1.is_positive()
            && self.lambda2.is_positive()
            && self.row_offsets.len() == g.rows()
            && self.col_offsets.len() == g.cols()
            && g.cells().all(|(i, j)| {
                &self.lambda1 * g.u1().get(i, j) + &self.lambda2 * g.u2().get(i, j)
                    == &self.row_offsets[i] + &self.col_offsets[j]
            })
    }

    /// `⟨λ₁·u₁ − b, λ₂·u₂ − a⟩`: zero-sum with the same best replies as `g`.
    pub fn zero_sum_equivalent(&self, g: &BimatrixGame) -> BimatrixGame {
        let v1 = Matrix::from_fn(g.rows(), g.cols(), |i, j| &self.lambda1 * g.u1().get(i, j) - &self.col_offsets[j])
            .expect("nonempty");
        let v2 = Matrix::from_fn(g.rows(), g.cols(), |i, j| &self.lambda2 * g.u2().get(i, j) - &self.row_offsets[i])
            .expect("nonempty");
        BimatrixGame::new(v1, v2).expect("same shape")
    }
}

/// Finds the decomposition with `λ₁ = 1` and `a[0] = 0`, or `None`.
///
/// Differencing each cell equation against the first row and column removes
/// the offsets and leaves `c₁[i][j] + λ₂·c₂[i][j] = 0` for the interaction
/// contrasts `cₖ[i][j] = uₖ[i][j] − uₖ[i][0] − uₖ[0][j] + uₖ[0][0]`. That
/// single-unknown system pins `λ₂` unless every `c₂` vanishes, in which case
/// any `λ₂ > 0` works and `λ₂ = 1` is reported.
pub fn strategically_zero_sum_detect(g: &BimatrixGame) -> Option<MvDecomposition> {
    let contrast = |m: &Matrix, i: usize, j: usize| m.get(i, j) - m.get(i, 0) - m.get(0, j) + m.get(0, 0);
    let mut lambda2: Option<Rational> = None;
    for i in 1..g.rows() {
        for j in 1..g.cols() {
            let c1 = contrast(g.u1(), i, j);
            let c2 = contrast(g.u2(), i, j);
            if c2.is_zero() {
                if !c1.is_zero() {
                    return None;
                }
                continue;
            }
            let l = -c1 / c2;
            match &lambda2 {
                None => lambda2 = Some(l),
                Some(prev) if *prev != l => return None,
                Some(_) => {}
            }
        }
    }
    let lambda2 = lambda2.unwrap_or_else(rational::one);
    if !lambda2.is_positive() {
        return None;
    }
    let lambda1 = rational::one();
    let combined = |i: usize, j: usize| &lambda1 * g.u1().get(i, j) + &lambda2 * g.u2().get(i, j);
    let col_offsets: Vec<Rational> = (0..g.cols()).map(|j| combined(0, j)).collect();
    let row_offsets: Vec<Rational> = (0..g.rows()).map(|i| combined(i, 0) - &col_offsets[0]).collect();
    let d = MvDecomposition { lambda1, lambda2, row_offsets, col_offsets };
    d.verifies(g).then_some(d)
}
