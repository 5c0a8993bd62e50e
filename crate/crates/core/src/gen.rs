//! Seeded game families.
//!
//! | family              | construction                                   |
//! |---------------------|------------------------------------------------|
//! | `disguised-zero-sum` | integer core `u₁`, `u₂ = −α·u₁ + β`            |
//! | `ordinal-not-affine` | `u₂ = −u₁³`: order-reversing, never affine     |
//! | `strategic-zero-sum` | zero-sum core plus opponent-dependent offsets |
//! | `uniform`            | independent integer entries                    |
//!
//! Every draw is checked against its family's defining property and redrawn
//! if it misses.

use std::fmt;
use std::str::FromStr;

use rand::Rng;

use crate::adversarial::{self, AffineTransform, DetectionResult};
use crate::error::{Error, Result};
use crate::game::{BimatrixGame, Matrix};
use crate::mv;
use crate::rational::{self, Rational};
use crate::sample::{self, SampleRng};

const MAX_REDRAWS: usize = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    DisguisedZeroSum,
    OrdinalNotAffine,
    StrategicZeroSum,
    Uniform,
}

impl Family {
    pub const ALL: [Family; 4] = [
        Family::DisguisedZeroSum,
        Family::OrdinalNotAffine,
        Family::StrategicZeroSum,
        Family::Uniform,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::DisguisedZeroSum => "disguised-zero-sum",
            Family::OrdinalNotAffine => "ordinal-not-affine",
            Family::StrategicZeroSum => "strategic-zero-sum",
            Family::Uniform => "uniform",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key: String = s.chars().filter(|c| c.is_ascii_alphanumeric()).collect::<String>().to_ascii_lowercase();
        Family::ALL
            .into_iter()
            .find(|f| f.name().replace('-', "") == key)
            .ok_or_else(|| Error::BadSpec(format!("unknown family {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenSpec {
    pub family: Family,
    pub rows: usize,
    pub cols: usize,
    pub seed: u64,
    /// Integer entries are drawn from `[−value_bound, value_bound]`.
    pub value_bound: i64,
    pub alpha_range: (Rational, Rational),
    pub beta_range: (Rational, Rational),
    /// Largest denominator of the drawn `α`, `β` and offset scales.
    pub max_denominator: i64,
}

impl GenSpec {
    pub fn new(family: Family, rows: usize, cols: usize, seed: u64) -> Self {
        GenSpec {
            family,
            rows,
            cols,
            seed,
            value_bound: 20,
            alpha_range: (rational::frac(1, 2), rational::int(8)),
            beta_range: (rational::int(-10), rational::int(10)),
            max_denominator: 8,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.rows == 0 || self.cols == 0 {
            return Err(Error::BadSpec("dimensions must be at least 1".into()));
        }
        if self.value_bound < 1 {
            return Err(Error::BadSpec("value bound must be positive".into()));
        }
        if self.max_denominator < 1 {
            return Err(Error::BadSpec("max denominator must be positive".into()));
        }
        let (alo, ahi) = &self.alpha_range;
        if *alo <= rational::zero() || alo > ahi {
            return Err(Error::BadSpec("alpha range must be positive and ordered".into()));
        }
        if self.beta_range.0 > self.beta_range.1 {
            return Err(Error::BadSpec("beta range must be ordered".into()));
        }
        if self.family == Family::OrdinalNotAffine && self.rows * self.cols < 3 {
            return Err(Error::BadSpec("ordinal-not-affine needs at least 3 cells".into()));
        }
        Ok(())
    }
}

/// A generated game together with the transform planted in it, if any.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generated {
    pub game: BimatrixGame,
    pub planted: Option<AffineTransform>,
}

pub fn gen(spec: &GenSpec) -> Result<BimatrixGame> {
    generate(spec).map(|g| g.game)
}

pub fn generate(spec: &GenSpec) -> Result<Generated> {
    spec.validate()?;
    let mut rng = sample::rng(spec.seed);
    for _ in 0..MAX_REDRAWS {
        let drawn = match spec.family {
            Family::DisguisedZeroSum => draw_disguised(&mut rng, spec),
            Family::OrdinalNotAffine => draw_ordinal(&mut rng, spec),
            Family::StrategicZeroSum => draw_strategic(&mut rng, spec),
            Family::Uniform => Some(Generated {
                game: sample::random_integer_game(&mut rng, spec.rows, spec.cols, spec.value_bound),
                planted: None,
            }),
        };
        if let Some(g) = drawn {
            return Ok(g);
        }
    }
    Err(Error::BadSpec(format!("no {} game found for {}x{}", spec.family, spec.rows, spec.cols)))
}

/// `⟨u₁, −α·u₁ + β⟩`.
pub fn disguise(core: Matrix, t: &AffineTransform) -> BimatrixGame {
    let u2 = core.map(|x| t.predict_u2(x));
    BimatrixGame::new(core, u2).expect("same shape")
}

/// `⟨u₁, −u₁³⟩`.
pub fn ordinal_not_affine(u1: Matrix) -> BimatrixGame {
    let u2 = u1.map(|x| -(x * x * x));
    BimatrixGame::new(u1, u2).expect("same shape")
}

fn draw_disguised(rng: &mut SampleRng, spec: &GenSpec) -> Option<Generated> {
    let core = sample::random_integer_matrix(rng, spec.rows, spec.cols, spec.value_bound);
    let alpha = sample::random_rational(rng, &spec.alpha_range.0, &spec.alpha_range.1, spec.max_denominator);
    let beta = sample::random_rational(rng, &spec.beta_range.0, &spec.beta_range.1, spec.max_denominator);
    let t = AffineTransform::new(alpha, beta).ok()?;
    // A constant core cannot carry its transform unless the game is 1x1.
    if core.is_constant() && spec.rows * spec.cols > 1 {
        return None;
    }
    let game = disguise(core, &t);
    match adversarial::detect_affine(&game) {
        DetectionResult::Adversarial(found) if found == t => {}
        DetectionResult::Degenerate(_) if spec.rows * spec.cols == 1 => {}
        _ => return None,
    }
    Some(Generated { game, planted: Some(t) })
}

fn draw_ordinal(rng: &mut SampleRng, spec: &GenSpec) -> Option<Generated> {
    let u1 = sample::random_integer_matrix(rng, spec.rows, spec.cols, spec.value_bound);
    let mut distinct = u1.entries().to_vec();
    distinct.sort();
    distinct.dedup();
    if distinct.len() < 3 {
        return None;
    }
    let game = ordinal_not_affine(u1);
    // The cube is affine on three values summing to zero, e.g. {−a, 0, a}.
    (adversarial::pure_ordinal_competitive(&game) && !adversarial::is_adversarial(&game))
        .then_some(Generated { game, planted: None })
}

fn draw_strategic(rng: &mut SampleRng, spec: &GenSpec) -> Option<Generated> {
    let (m, n, bound) = (spec.rows, spec.cols, spec.value_bound);
    let core = sample::random_integer_matrix(rng, m, n, bound);
    let col_shift: Vec<i64> = (0..n).map(|_| rng.gen_range(-bound..=bound)).collect();
    let row_shift: Vec<i64> = (0..m).map(|_| rng.gen_range(-bound..=bound)).collect();
    let scale = sample::random_rational(rng, &rational::frac(1, 2), &rational::int(4), spec.max_denominator);
    let u1 = Matrix::from_fn(m, n, |i, j| core.get(i, j) + rational::int(col_shift[j])).ok()?;
    let u2 = Matrix::from_fn(m, n, |i, j| &scale * (rational::int(row_shift[i]) - core.get(i, j))).ok()?;
    let game = BimatrixGame::new(u1, u2).ok()?;
    mv::strategically_zero_sum_detect(&game).map(|_| Generated { game, planted: None })
}
