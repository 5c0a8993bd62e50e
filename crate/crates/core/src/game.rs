//! Finite bimatrix games, mixed strategies and bilinear expected utility.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::Rng;

use crate::error::{Error, Result};
use crate::rational::{self, Rational};
use crate::sample;

/// Dense row-major matrix of rationals with at least one row and column.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
    // data[k] == scaled[k] / scale
    scaled: Vec<BigInt>,
    scale: BigInt,
}

/// Integer numerators over a common denominator.
fn common_denominator(xs: &[Rational]) -> (Vec<BigInt>, BigInt) {
    let den = xs.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let nums = xs.iter().map(|x| x.numer() * (&den / x.denom())).collect();
    (nums, den)
}

impl Matrix {
    fn build(rows: usize, cols: usize, data: Vec<Rational>) -> Matrix {
        let (scaled, scale) = common_denominator(&data);
        Matrix { rows, cols, data, scaled, scale }
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if r == 0 || c == 0 {
            return Err(Error::EmptyGame);
        }
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::RaggedMatrix);
        }
        Ok(Matrix::build(r, c, rows.into_iter().flatten().collect()))
    }

    pub fn from_i64(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|row| row.iter().map(|&v| rational::int(v)).collect())
                .collect(),
        )
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::EmptyGame);
        }
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Ok(Matrix::build(rows, cols, data))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    /// Entries in row-major order.
    pub fn entries(&self) -> &[Rational] {
        &self.data
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        self.data.chunks(self.cols).map(<[_]>::to_vec).collect()
    }

    pub fn map(&self, f: impl Fn(&Rational) -> Rational) -> Matrix {
        Matrix::build(self.rows, self.cols, self.data.iter().map(f).collect())
    }

    pub fn is_constant(&self) -> bool {
        self.data.iter().all(|v| *v == self.data[0])
    }

    pub fn min(&self) -> &Rational {
        self.data.iter().min().expect("matrix is nonempty")
    }

    pub fn max(&self) -> &Rational {
        self.data.iter().max().expect("matrix is nonempty")
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone()).expect("nonempty")
    }

    /// `xᵀ M y`, accumulated in integers over a common denominator.
    pub fn bilinear(&self, x: &[Rational], y: &[Rational]) -> Rational {
        let (xn, xd) = common_denominator(x);
        let (yn, yd) = common_denominator(y);
        let mut total = BigInt::zero();
        for (i, xi) in xn.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            let mut row_sum = BigInt::zero();
            for (m, yj) in self.scaled[i * self.cols..(i + 1) * self.cols].iter().zip(&yn) {
                if !yj.is_zero() && !m.is_zero() {
                    row_sum += m * yj;
                }
            }
            total += xi * row_sum;
        }
        Rational::new(total, xd * yd * &self.scale)
    }

    /// `M y`, the payoff of each pure row against `y`.
    pub fn mul_vec(&self, y: &[Rational]) -> Vec<Rational> {
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(y).map(|(m, v)| m * v).sum())
            .collect()
    }

    /// `xᵀ M`, the payoff of each pure column against `x`.
    pub fn vec_mul(&self, x: &[Rational]) -> Vec<Rational> {
        (0..self.cols)
            .map(|j| (0..self.rows).map(|i| &x[i] * self.get(i, j)).sum())
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Player {
    One,
    Two,
}

impl Player {
    pub fn other(self) -> Player {
        match self {
            Player::One => Player::Two,
            Player::Two => Player::One,
        }
    }
}

/// Two equally shaped payoff matrices over `S₁ × S₂`. Immutable once built.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BimatrixGame {
    u1: Matrix,
    u2: Matrix,
}

impl BimatrixGame {
    pub fn new(u1: Matrix, u2: Matrix) -> Result<Self> {
        if u1.shape() != u2.shape() {
            return Err(Error::ShapeMismatch(u1.rows, u1.cols, u2.rows, u2.cols));
        }
        Ok(BimatrixGame { u1, u2 })
    }

    pub fn from_rows(u1: Vec<Vec<Rational>>, u2: Vec<Vec<Rational>>) -> Result<Self> {
        Self::new(Matrix::from_rows(u1)?, Matrix::from_rows(u2)?)
    }

    pub fn from_i64(u1: &[&[i64]], u2: &[&[i64]]) -> Result<Self> {
        Self::new(Matrix::from_i64(u1)?, Matrix::from_i64(u2)?)
    }

    pub fn rows(&self) -> usize {
        self.u1.rows
    }

    pub fn cols(&self) -> usize {
        self.u1.cols
    }

    pub fn u1(&self) -> &Matrix {
        &self.u1
    }

    pub fn u2(&self) -> &Matrix {
        &self.u2
    }

    pub fn payoffs(&self, player: Player) -> &Matrix {
        match player {
            Player::One => &self.u1,
            Player::Two => &self.u2,
        }
    }

    /// Pure profiles `(i, j)` in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> {
        let cols = self.cols();
        (0..self.rows() * cols).map(move |k| (k / cols, k % cols))
    }

    pub fn is_zero_sum(&self) -> bool {
        self.first_nonzero_sum_cell().is_none()
    }

    pub fn first_nonzero_sum_cell(&self) -> Option<(usize, usize)> {
        self.cells()
            .find(|&(i, j)| !(self.u1.get(i, j) + self.u2.get(i, j)).is_zero())
    }

    /// Number of actions available to `player`.
    pub fn actions(&self, player: Player) -> usize {
        match player {
            Player::One => self.rows(),
            Player::Two => self.cols(),
        }
    }

    pub fn check_profile(&self, p: &MixedProfile) -> Result<()> {
        for (expected, actual) in [(self.rows(), p.row.len()), (self.cols(), p.col.len())] {
            if expected != actual {
                return Err(Error::DimensionMismatch { expected, actual });
            }
        }
        Ok(())
    }
}

/// A point of the probability simplex: nonnegative entries summing to one.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MixedStrategy(Vec<Rational>);

impl MixedStrategy {
    pub fn new(probs: Vec<Rational>) -> Result<Self> {
        if probs.is_empty() {
            return Err(Error::InvalidStrategy("empty".into()));
        }
        if probs.iter().any(Signed::is_negative) {
            return Err(Error::InvalidStrategy("negative entry".into()));
        }
        let total: Rational = probs.iter().sum();
        if total != rational::one() {
            return Err(Error::InvalidStrategy(format!("entries sum to {total}")));
        }
        Ok(MixedStrategy(probs))
    }

    pub fn pure(n: usize, k: usize) -> Self {
        assert!(k < n, "action {k} out of range for {n} actions");
        MixedStrategy((0..n).map(|i| rational::int((i == k) as i64)).collect())
    }

    pub fn uniform(n: usize) -> Self {
        assert!(n > 0);
        MixedStrategy(vec![rational::frac(1, n as i64); n])
    }

    /// Normalizes nonnegative integer weights. Fails if all are zero.
    pub fn from_weights(weights: &[u64]) -> Result<Self> {
        let total: u64 = weights.iter().sum();
        if total == 0 {
            return Err(Error::InvalidStrategy("all weights zero".into()));
        }
        Ok(MixedStrategy(
            weights
                .iter()
                .map(|&w| rational::frac(w as i64, total as i64))
                .collect(),
        ))
    }

    pub fn probs(&self) -> &[Rational] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Indices with positive probability.
    pub fn support(&self) -> Vec<usize> {
        (0..self.0.len()).filter(|&i| self.0[i].is_positive()).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MixedProfile {
    pub row: MixedStrategy,
    pub col: MixedStrategy,
}

impl MixedProfile {
    pub fn new(row: MixedStrategy, col: MixedStrategy) -> Self {
        MixedProfile { row, col }
    }

    pub fn pure(g: &BimatrixGame, i: usize, j: usize) -> Self {
        MixedProfile {
            row: MixedStrategy::pure(g.rows(), i),
            col: MixedStrategy::pure(g.cols(), j),
        }
    }

    pub fn uniform(g: &BimatrixGame) -> Self {
        MixedProfile {
            row: MixedStrategy::uniform(g.rows()),
            col: MixedStrategy::uniform(g.cols()),
        }
    }

    pub fn strategy(&self, player: Player) -> &MixedStrategy {
        match player {
            Player::One => &self.row,
            Player::Two => &self.col,
        }
    }

    /// `(s, p₋ᵢ)`: this profile with `player`'s strategy replaced.
    pub fn with(&self, player: Player, s: MixedStrategy) -> MixedProfile {
        match player {
            Player::One => MixedProfile { row: s, col: self.col.clone() },
            Player::Two => MixedProfile { row: self.row.clone(), col: s },
        }
    }
}

/// `Σ x(s₁) y(s₂) ν(s₁, s₂)` for `player`'s payoff matrix ν.
pub fn expected_utility(g: &BimatrixGame, player: Player, p: &MixedProfile) -> Result<Rational> {
    g.check_profile(p)?;
    Ok(g.payoffs(player).bilinear(p.row.probs(), p.col.probs()))
}

/// `w·p + (1−w)·q`, entrywise.
pub fn mix(p: &MixedStrategy, q: &MixedStrategy, w: &Rational) -> Result<MixedStrategy> {
    if p.len() != q.len() {
        return Err(Error::DimensionMismatch { expected: p.len(), actual: q.len() });
    }
    if !rational::is_in_unit_interval(w) {
        return Err(Error::WeightOutOfRange(w.to_string()));
    }
    let rest = rational::one() - w;
    Ok(MixedStrategy(
        p.0.iter().zip(&q.0).map(|(a, b)| w * a + &rest * b).collect(),
    ))
}

/// Checks both coordinate-wise linearity identities of `E_{u₁}` and `E_{u₂}`
/// on `samples` random tuples `(σ, τ, α, β)`, exactly.
pub fn verify_bilinearity(g: &BimatrixGame, samples: usize, seed: u64) -> bool {
    let mut rng = sample::rng(seed);
    (0..samples).all(|_| {
        let sigma = sample::random_profile(&mut rng, g);
        let tau = sample::random_profile(&mut rng, g);
        let a = sample::random_weight(&mut rng);
        let b = sample::random_weight(&mut rng);
        bilinear_at(g, &sigma, &tau, &a, &b) && {
            // pure corners exercise the degenerate weights too
            let w = if rng.gen_bool(0.5) { rational::zero() } else { rational::one() };
            bilinear_at(g, &sigma, &tau, &w, &b)
        }
    })
}

fn bilinear_at(g: &BimatrixGame, s: &MixedProfile, t: &MixedProfile, a: &Rational, b: &Rational) -> bool {
    let one = rational::one();
    let x = mix(&s.row, &t.row, a).expect("same game");
    let y = mix(&s.col, &t.col, b).expect("same game");
    [Player::One, Player::Two].into_iter().all(|pl| {
        let m = g.payoffs(pl);
        let joint = m.bilinear(x.probs(), y.probs());
        let first = a * m.bilinear(s.row.probs(), y.probs()) + (&one - a) * m.bilinear(t.row.probs(), y.probs());
        let second = b * m.bilinear(x.probs(), s.col.probs()) + (&one - b) * m.bilinear(x.probs(), t.col.probs());
        joint == first && joint == second
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    fn pennies() -> BimatrixGame {
        BimatrixGame::from_i64(&[&[1, -1], &[-1, 1]], &[&[-1, 1], &[1, -1]]).unwrap()
    }

    fn strat(v: &[(i64, i64)]) -> MixedStrategy {
        MixedStrategy::new(v.iter().map(|&(n, d)| frac(n, d)).collect()).unwrap()
    }

    #[test]
    fn new_game_validates_shape() {
        let g = pennies();
        assert_eq!((g.rows(), g.cols()), (2, 2));
        let g = BimatrixGame::from_i64(&[&[3]], &[&[-3]]).unwrap();
        assert_eq!((g.rows(), g.cols()), (1, 1));
        let err = BimatrixGame::from_i64(&[&[1, 2], &[3, 4]], &[&[1, 2, 3], &[4, 5, 6]]).unwrap_err();
        assert_eq!(err, Error::ShapeMismatch(2, 2, 2, 3));
        assert_eq!(BimatrixGame::from_rows(vec![], vec![]).unwrap_err(), Error::EmptyGame);
        assert_eq!(
            BimatrixGame::from_rows(vec![vec![]], vec![vec![]]).unwrap_err(),
            Error::EmptyGame
        );
        assert_eq!(Matrix::from_i64(&[&[1, 2], &[3]]).unwrap_err(), Error::RaggedMatrix);
    }

    #[test]
    fn expected_utility_examples() {
        let g = pennies();
        let p = MixedProfile::pure(&g, 0, 0);
        assert_eq!(expected_utility(&g, Player::One, &p).unwrap(), int(1));

        let p = MixedProfile::new(strat(&[(1, 3), (2, 3)]), strat(&[(1, 4), (3, 4)]));
        assert_eq!(expected_utility(&g, Player::One, &p).unwrap(), frac(1, 6));

        let g = BimatrixGame::from_i64(&[&[0, 1], &[2, 4]], &[&[0, 0], &[0, 0]]).unwrap();
        assert_eq!(expected_utility(&g, Player::One, &MixedProfile::uniform(&g)).unwrap(), frac(7, 4));
    }

    #[test]
    fn expected_utility_rejects_wrong_dimensions() {
        let g = pennies();
        let p = MixedProfile::new(MixedStrategy::uniform(3), MixedStrategy::uniform(2));
        assert_eq!(
            expected_utility(&g, Player::One, &p).unwrap_err(),
            Error::DimensionMismatch { expected: 2, actual: 3 }
        );
    }

    #[test]
    fn point_masses_recover_entries() {
        let g = BimatrixGame::from_i64(&[&[4, -2, 7], &[0, 9, -5]], &[&[1, 2, 3], &[4, 5, 6]]).unwrap();
        for (i, j) in g.cells() {
            let p = MixedProfile::pure(&g, i, j);
            assert_eq!(&expected_utility(&g, Player::One, &p).unwrap(), g.u1().get(i, j));
            assert_eq!(&expected_utility(&g, Player::Two, &p).unwrap(), g.u2().get(i, j));
        }
    }

    #[test]
    fn mix_examples() {
        let p = strat(&[(1, 3), (2, 3)]);
        let q = strat(&[(1, 1), (0, 1)]);
        assert_eq!(mix(&p, &q, &int(1)).unwrap(), p);
        assert_eq!(
            mix(&MixedStrategy::pure(2, 0), &MixedStrategy::pure(2, 1), &frac(1, 2)).unwrap(),
            strat(&[(1, 2), (1, 2)])
        );
        assert_eq!(mix(&p, &q, &frac(3, 4)).unwrap(), strat(&[(1, 2), (1, 2)]));
    }

    #[test]
    fn mix_errors() {
        let p = MixedStrategy::uniform(2);
        assert!(matches!(mix(&p, &p, &frac(5, 4)), Err(Error::WeightOutOfRange(_))));
        assert!(matches!(mix(&p, &p, &frac(-1, 4)), Err(Error::WeightOutOfRange(_))));
        assert_eq!(
            mix(&p, &MixedStrategy::uniform(3), &frac(1, 2)).unwrap_err(),
            Error::DimensionMismatch { expected: 2, actual: 3 }
        );
    }

    #[test]
    fn strategy_validation() {
        assert!(MixedStrategy::new(vec![frac(1, 2), frac(1, 3)]).is_err());
        assert!(MixedStrategy::new(vec![frac(3, 2), frac(-1, 2)]).is_err());
        assert!(MixedStrategy::new(vec![]).is_err());
        assert!(MixedStrategy::from_weights(&[0, 0]).is_err());
        assert_eq!(MixedStrategy::from_weights(&[1, 3]).unwrap(), strat(&[(1, 4), (3, 4)]));
    }

    #[test]
    fn bilinearity_holds() {
        assert!(verify_bilinearity(&pennies(), 100, 7));
        assert!(verify_bilinearity(&BimatrixGame::from_i64(&[&[3]], &[&[-3]]).unwrap(), 100, 7));
        let mut rng = sample::rng(11);
        for _ in 0..10 {
            let g = sample::random_integer_game(&mut rng, 3, 3, 20);
            assert!(verify_bilinearity(&g, 100, 3));
        }
    }
}
