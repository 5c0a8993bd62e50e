//! Deciding whether a game's mixed extension is strictly competitive.
//!
//! For finite games the mixed extension is adversarial exactly when
//! `u₂ = −α·u₁ + β` entrywise for some `α > 0`. [`detect_affine`] recovers that
//! unique pair from two anchor cells with distinct `u₁` values and verifies it
//! on every cell; entrywise agreement carries over to all mixed profiles by
//! bilinearity of expected utility.

use std::fmt;

use num_traits::{Signed, Zero};
use rand::Rng;

use crate::error::{Error, Result};
use crate::game::{expected_utility, BimatrixGame, MixedProfile, Player};
use crate::rational::{self, Rational};
use crate::sample;

/// Pure profile `(row, col)`, zero-based.
pub type Cell = (usize, usize);

/// `x ↦ α·x + β` with `α > 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AffineTransform {
    alpha: Rational,
    beta: Rational,
}

impl AffineTransform {
    pub fn new(alpha: Rational, beta: Rational) -> Result<Self> {
        if !alpha.is_positive() {
            return Err(Error::AlphaNonpositive(alpha.to_string()));
        }
        Ok(AffineTransform { alpha, beta })
    }

    pub fn identity() -> Self {
        AffineTransform { alpha: rational::one(), beta: rational::zero() }
    }

    pub fn alpha(&self) -> &Rational {
        &self.alpha
    }

    pub fn beta(&self) -> &Rational {
        &self.beta
    }

    /// The value `u₂` must take where `u₁` is `u1`: `−α·u1 + β`.
    pub fn predict_u2(&self, u1: &Rational) -> Rational {
        &self.beta - &self.alpha * u1
    }

    /// Whether `u₂ = −α·u₁ + β` holds on every listed `(u₁, u₂)` pair.
    pub fn compatible_with<'a>(&self, values: impl IntoIterator<Item = (&'a Rational, &'a Rational)>) -> bool {
        values.into_iter().all(|(a, b)| self.predict_u2(a) == *b)
    }
}

impl fmt::Display for AffineTransform {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(alpha={}, beta={})", self.alpha, self.beta)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// The candidate pair from the anchors fails at `cell`.
    AffineMismatch {
        alpha: Rational,
        beta: Rational,
        cell: Cell,
        expected: Rational,
        actual: Rational,
    },
    /// Pure profiles where the order reversal breaks.
    OrdinalViolation { sigma: Cell, tau: Cell },
    /// The anchors force a scale `α ≤ 0`.
    AlphaNonpositive { anchors: [Cell; 2], alpha: Rational, beta: Rational },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DetectionResult {
    Adversarial(AffineTransform),
    /// Both payoff matrices constant; the transform is the canonical `α = 1`.
    Degenerate(AffineTransform),
    NotAdversarial(Witness),
}

impl DetectionResult {
    pub fn is_adversarial(&self) -> bool {
        !matches!(self, DetectionResult::NotAdversarial(_))
    }

    pub fn transform(&self) -> Option<&AffineTransform> {
        match self {
            DetectionResult::Adversarial(t) | DetectionResult::Degenerate(t) => Some(t),
            DetectionResult::NotAdversarial(_) => None,
        }
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            DetectionResult::NotAdversarial(w) => Some(w),
            _ => None,
        }
    }
}

/// Whether a pair of outcomes breaks `u₁(σ) ≥ u₁(τ) ⟺ u₂(σ) ≤ u₂(τ)`.
pub fn breaks_reversal(u1_sigma: &Rational, u1_tau: &Rational, u2_sigma: &Rational, u2_tau: &Rational) -> bool {
    (u1_sigma >= u1_tau) != (u2_sigma <= u2_tau)
}

/// First ordered pair of pure profiles, in row-major lexicographic order,
/// violating the reversal biconditional.
pub fn pure_ordinal_violation(g: &BimatrixGame) -> Option<(Cell, Cell)> {
    let (u1, u2) = (g.u1(), g.u2());
    for s in g.cells() {
        for t in g.cells() {
            if breaks_reversal(u1.get(s.0, s.1), u1.get(t.0, t.1), u2.get(s.0, s.1), u2.get(t.0, t.1)) {
                return Some((s, t));
            }
        }
    }
    None
}

pub fn pure_ordinal_competitive(g: &BimatrixGame) -> bool {
    pure_ordinal_violation(g).is_none()
}

/// Solves `u₂(pₖ) = −α·u₁(pₖ) + β` for `k = 1, 2`. `None` when the `u₁`
/// values coincide.
fn solve_pair(a1: &Rational, b1: &Rational, a2: &Rational, b2: &Rational) -> Option<(Rational, Rational)> {
    if a1 == a2 {
        return None;
    }
    let alpha = (b1 - b2) / (a2 - a1);
    let beta = b1 + &alpha * a1;
    Some((alpha, beta))
}

/// Detection with explicitly chosen anchor cells. `None` if the anchors have
/// equal `u₁` values, since they then determine nothing.
pub fn detect_affine_with_anchors(g: &BimatrixGame, p1: Cell, p2: Cell) -> Option<DetectionResult> {
    let (u1, u2) = (g.u1(), g.u2());
    let (alpha, beta) = solve_pair(u1.get(p1.0, p1.1), u2.get(p1.0, p1.1), u1.get(p2.0, p2.1), u2.get(p2.0, p2.1))?;
    if !alpha.is_positive() {
        return Some(DetectionResult::NotAdversarial(Witness::AlphaNonpositive {
            anchors: [p1, p2],
            alpha,
            beta,
        }));
    }
    let t = AffineTransform { alpha, beta };
    for (i, j) in g.cells() {
        let expected = t.predict_u2(u1.get(i, j));
        if expected != *u2.get(i, j) {
            return Some(DetectionResult::NotAdversarial(Witness::AffineMismatch {
                alpha: t.alpha,
                beta: t.beta,
                cell: (i, j),
                expected,
                actual: u2.get(i, j).clone(),
            }));
        }
    }
    Some(DetectionResult::Adversarial(t))
}

/// Row-major-first pair of cells with distinct `u₁` values.
pub fn default_anchors(g: &BimatrixGame) -> Option<[Cell; 2]> {
    let u1 = g.u1();
    let first = u1.get(0, 0);
    g.cells().find(|&(i, j)| u1.get(i, j) != first).map(|c| [(0, 0), c])
}

pub fn detect_affine(g: &BimatrixGame) -> DetectionResult {
    match default_anchors(g) {
        Some([p1, p2]) => detect_affine_with_anchors(g, p1, p2).expect("anchors have distinct u1"),
        None => {
            let c1 = g.u1().get(0, 0);
            if g.u2().is_constant() {
                let beta = g.u2().get(0, 0) + c1;
                DetectionResult::Degenerate(AffineTransform { alpha: rational::one(), beta })
            } else {
                let (sigma, tau) = pure_ordinal_violation(g).expect("constant u1 with varying u2 breaks reversal");
                DetectionResult::NotAdversarial(Witness::OrdinalViolation { sigma, tau })
            }
        }
    }
}

pub fn is_adversarial(g: &BimatrixGame) -> bool {
    detect_affine(g).is_adversarial()
}

/// A pair `(α, β)`, `α > 0`, with `E_{u₂}(pₖ) = −α·E_{u₁}(pₖ) + β` on all three
/// profiles, or `None`.
///
/// The pair comes from the first two profiles with distinct `E_{u₁}`. If all
/// three `E_{u₁}` coincide the pair is `α = 1`, `β = E_{u₂}(p₁) + E_{u₁}(p₁)`,
/// provided the `E_{u₂}` values coincide as well.
pub fn three_profile_compatibility(
    g: &BimatrixGame,
    p1: &MixedProfile,
    p2: &MixedProfile,
    p3: &MixedProfile,
) -> Result<Option<AffineTransform>> {
    let mut values = Vec::with_capacity(3);
    for p in [p1, p2, p3] {
        values.push((expected_utility(g, Player::One, p)?, expected_utility(g, Player::Two, p)?));
    }
    let pairs = [(0, 1), (0, 2), (1, 2)];
    let candidate = pairs.iter().find_map(|&(a, b)| {
        let ((a1, b1), (a2, b2)) = (&values[a], &values[b]);
        solve_pair(a1, b1, a2, b2)
    });
    let (alpha, beta) = match candidate {
        Some(c) => c,
        None => {
            let (e1, e2) = &values[0];
            if values.iter().all(|(_, v2)| v2 == e2) {
                (rational::one(), e2 + e1)
            } else {
                return Ok(None);
            }
        }
    };
    if !alpha.is_positive() {
        return Ok(None);
    }
    let t = AffineTransform { alpha, beta };
    Ok(t.compatible_with(values.iter().map(|(a, b)| (a, b))).then_some(t))
}

/// Randomized search for mixed profiles `(σ, τ)` breaking the reversal
/// biconditional. Draws pure×pure, pure×mixed and mixed×mixed pairs with equal
/// probability. Mixed draws are the barycenter one time in eight. Finding
/// nothing proves nothing; use [`is_adversarial`] for a decision.
pub fn find_mixed_violation(g: &BimatrixGame, budget: usize, seed: u64) -> Option<(MixedProfile, MixedProfile)> {
    let mut rng = sample::rng(seed);
    for _ in 0..budget {
        let (s, t) = match rng.gen_range(0..3) {
            0 => (sample::random_pure_profile(&mut rng, g), sample::random_pure_profile(&mut rng, g)),
            1 => (sample::random_pure_profile(&mut rng, g), mixed_draw(&mut rng, g)),
            _ => (mixed_draw(&mut rng, g), mixed_draw(&mut rng, g)),
        };
        if let Some(pair) = violating_orientation(g, s, t) {
            return Some(pair);
        }
    }
    None
}

fn mixed_draw<R: Rng>(rng: &mut R, g: &BimatrixGame) -> MixedProfile {
    if rng.gen_ratio(1, 8) {
        MixedProfile::uniform(g)
    } else {
        sample::random_profile(rng, g)
    }
}

fn violating_orientation(g: &BimatrixGame, s: MixedProfile, t: MixedProfile) -> Option<(MixedProfile, MixedProfile)> {
    if profiles_violate(g, &s, &t) {
        Some((s, t))
    } else if profiles_violate(g, &t, &s) {
        Some((t, s))
    } else {
        None
    }
}

/// Exact check of the reversal biconditional for the ordered pair `(σ, τ)`.
pub fn profiles_violate(g: &BimatrixGame, sigma: &MixedProfile, tau: &MixedProfile) -> bool {
    let (u1, u2) = (g.u1(), g.u2());
    let e = |m: &crate::Matrix, p: &MixedProfile| m.bilinear(p.row.probs(), p.col.probs());
    breaks_reversal(&e(u1, sigma), &e(u1, tau), &e(u2, sigma), &e(u2, tau))
}

/// `⟨α·u₁ − β, u₂⟩`. Zero-sum whenever `t` was detected on `g`.
pub fn to_zero_sum(g: &BimatrixGame, t: &AffineTransform) -> BimatrixGame {
    let v1 = g.u1().map(|x| &t.alpha * x - &t.beta);
    BimatrixGame::new(v1, g.u2().clone()).expect("shape preserved")
}

/// `u₁ = (v₁ + β) / α`: maps a payoff of the normalized game back to the
/// original first-player scale.
pub fn to_original_scale(t: &AffineTransform, v1: &Rational) -> Rational {
    (v1 + &t.beta) / &t.alpha
}

/// Whether `g` has every cell equal to zero in `u₁ + u₂`.
pub fn sums_to_zero(g: &BimatrixGame) -> bool {
    g.cells().all(|(i, j)| (g.u1().get(i, j) + g.u2().get(i, j)).is_zero())
}
