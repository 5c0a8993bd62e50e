use std::collections::BTreeMap;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::game::{BimatrixGame, Matrix, MixedStrategy};
use crate::linalg;
use crate::rational::{self, Rational};

/// Largest dimension accepted by [`support_enumeration`] unless overridden.
pub const DEFAULT_MAX_DIM: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Equilibrium {
    pub row: MixedStrategy,
    pub col: MixedStrategy,
    pub payoff1: Rational,
    pub payoff2: Rational,
}

/// Equilibria sorted by `(row, col)`, without duplicates.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct EquilibriumSet {
    pub equilibria: Vec<Equilibrium>,
}

impl EquilibriumSet {
    pub fn profiles(&self) -> Vec<(&MixedStrategy, &MixedStrategy)> {
        self.equilibria.iter().map(|e| (&e.row, &e.col)).collect()
    }

    pub fn find(&self, row: &MixedStrategy, col: &MixedStrategy) -> Option<&Equilibrium> {
        self.equilibria.iter().find(|e| e.row == *row && e.col == *col)
    }

    pub fn len(&self) -> usize {
        self.equilibria.len()
    }

    pub fn is_empty(&self) -> bool {
        self.equilibria.is_empty()
    }
}

/// All equilibria with equal-size supports whose indifference systems are
/// nonsingular. Complete for nondegenerate games.
pub fn support_enumeration(g: &BimatrixGame, max_dim: usize) -> Result<EquilibriumSet> {
    if g.rows() > max_dim || g.cols() > max_dim {
        return Err(Error::TooLarge { rows: g.rows(), cols: g.cols(), max: max_dim });
    }
    let (a, b) = (g.u1(), g.u2());
    let bt = b.transpose();
    let mut found = BTreeMap::new();
    for k in 1..=g.rows().min(g.cols()) {
        for rows in subsets(g.rows(), k) {
            // row player's mix must make the column player indifferent on J
            let candidate_cols = subsets(g.cols(), k);
            for cols in candidate_cols {
                let Some((y, v)) = indifference(a, &rows, &cols, g.cols()) else {
                    continue;
                };
                let Some((x, w)) = indifference(&bt, &cols, &rows, g.rows()) else {
                    continue;
                };
                if !best_response(a, &y, &v) || !best_response(&bt, &x, &w) {
                    continue;
                }
                let x = MixedStrategy::new(x).expect("nonnegative and normalized");
                let y = MixedStrategy::new(y).expect("nonnegative and normalized");
                found.entry((x, y)).or_insert((v, w));
            }
        }
    }
    Ok(EquilibriumSet {
        equilibria: found
            .into_iter()
            .map(|((row, col), (payoff1, payoff2))| Equilibrium { row, col, payoff1, payoff2 })
            .collect(),
    })
}

/// Mixed strategy over `support` (for the player choosing columns of `m`)
/// that makes every row in `active` earn the same payoff `v`. Returns the
/// full-length strategy and `v`, or `None` if the system is singular or the
/// solution has a negative weight.
fn indifference(m: &Matrix, active: &[usize], support: &[usize], n: usize) -> Option<(Vec<Rational>, Rational)> {
    let k = support.len();
    let mut lhs = Vec::with_capacity(k + 1);
    for &i in active {
        let mut row: Vec<Rational> = support.iter().map(|&j| m.get(i, j).clone()).collect();
        row.push(-rational::one());
        lhs.push(row);
    }
    let mut norm = vec![rational::one(); k];
    norm.push(Rational::zero());
    lhs.push(norm);
    let mut rhs = vec![Rational::zero(); k];
    rhs.push(rational::one());

    let sol = linalg::solve_unique(&lhs, &rhs)?;
    if sol[..k].iter().any(Signed::is_negative) {
        return None;
    }
    let mut full = vec![Rational::zero(); n];
    for (&j, p) in support.iter().zip(&sol) {
        full[j] = p.clone();
    }
    Some((full, sol[k].clone()))
}

fn best_response(m: &Matrix, opponent: &[Rational], value: &Rational) -> bool {
    m.mul_vec(opponent).iter().all(|p| p <= value)
}

/// All `k`-subsets of `0..n` in lexicographic order.
fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    if k > n {
        return out;
    }
    loop {
        out.push(cur.clone());
        let Some(i) = (0..k).rev().find(|&i| cur[i] != i + n - k) else {
            return out;
        };
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    #[test]
    fn subsets_enumerate() {
        assert_eq!(subsets(3, 2), vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
        assert_eq!(subsets(4, 2).len(), 6);
        assert_eq!(subsets(2, 0), vec![Vec::<usize>::new()]);
        assert!(subsets(2, 3).is_empty());
    }

    #[test]
    fn matching_pennies() {
        let g = BimatrixGame::from_i64(&[&[1, -1], &[-1, 1]], &[&[-1, 1], &[1, -1]]).unwrap();
        let eq = support_enumeration(&g, DEFAULT_MAX_DIM).unwrap();
        assert_eq!(eq.len(), 1);
        let e = &eq.equilibria[0];
        assert_eq!((&e.row, &e.col), (&MixedStrategy::uniform(2), &MixedStrategy::uniform(2)));
        assert_eq!((e.payoff1.clone(), e.payoff2.clone()), (int(0), int(0)));
    }

    #[test]
    fn prisoners_dilemma() {
        let g = BimatrixGame::from_i64(&[&[3, 0], &[5, 1]], &[&[3, 5], &[0, 1]]).unwrap();
        let eq = support_enumeration(&g, DEFAULT_MAX_DIM).unwrap();
        assert_eq!(eq.len(), 1);
        let e = &eq.equilibria[0];
        assert_eq!((&e.row, &e.col), (&MixedStrategy::pure(2, 1), &MixedStrategy::pure(2, 1)));
        assert_eq!((e.payoff1.clone(), e.payoff2.clone()), (int(1), int(1)));
    }

    #[test]
    fn single_cell() {
        let g = BimatrixGame::from_i64(&[&[2]], &[&[-9]]).unwrap();
        let eq = support_enumeration(&g, DEFAULT_MAX_DIM).unwrap();
        assert_eq!(eq.len(), 1);
        assert_eq!(eq.equilibria[0].payoff2, int(-9));
    }

    #[test]
    fn battle_of_the_sexes_has_three() {
        let g = BimatrixGame::from_i64(&[&[2, 0], &[0, 1]], &[&[1, 0], &[0, 2]]).unwrap();
        let eq = support_enumeration(&g, DEFAULT_MAX_DIM).unwrap();
        assert_eq!(eq.len(), 3);
        let mixed = eq.equilibria.iter().find(|e| e.row.support().len() == 2).unwrap();
        assert_eq!(mixed.row.probs(), &[frac(2, 3), frac(1, 3)]);
        assert_eq!(mixed.col.probs(), &[frac(1, 3), frac(2, 3)]);
        assert_eq!(mixed.payoff1, frac(2, 3));
    }

    #[test]
    fn too_large() {
        let g = BimatrixGame::from_i64(&[&[0; 6]], &[&[0; 6]]).unwrap();
        assert_eq!(
            support_enumeration(&g, 5).unwrap_err(),
            Error::TooLarge { rows: 1, cols: 6, max: 5 }
        );
    }
}
