//! Sampled audit of the ordered bilinear mixture-space axioms for the
//! preference a game's payoffs induce on mixed profiles.
//!
//! The preference is `σ ≾ τ ⟺ U(σ) ≤ U(τ)` for a represented utility `U`
//! (either `−E_{u₁}` or `E_{u₂}`). Indifference is equality of `U` and strict
//! preference is strict inequality, so every axiom reduces to exact rational
//! comparisons on sampled profiles and weights.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use rand::Rng;
use serde::Serialize;

use crate::error::Error;
use crate::game::{mix, BimatrixGame, MixedProfile, MixedStrategy, Player};
use crate::rational::{self, Rational};
use crate::sample::{self, SampleRng};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Lens {
    /// `U = −E_{u₁}`.
    NegU1,
    /// `U = E_{u₂}`.
    U2,
}

impl Lens {
    pub fn name(self) -> &'static str {
        match self {
            Lens::NegU1 => "neg-u1",
            Lens::U2 => "u2",
        }
    }
}

impl fmt::Display for Lens {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Lens {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.to_ascii_lowercase().replace('_', "-").as_str() {
            "neg-u1" | "negu1" => Ok(Lens::NegU1),
            "u2" => Ok(Lens::U2),
            _ => Err(Error::Parse(format!("unknown lens {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct InducedPreference<'a> {
    pub game: &'a BimatrixGame,
    pub lens: Lens,
}

impl<'a> InducedPreference<'a> {
    pub fn new(game: &'a BimatrixGame, lens: Lens) -> Self {
        InducedPreference { game, lens }
    }

    pub fn utility(&self, p: &MixedProfile) -> Rational {
        let (x, y) = (p.row.probs(), p.col.probs());
        match self.lens {
            Lens::NegU1 => -self.game.u1().bilinear(x, y),
            Lens::U2 => self.game.u2().bilinear(x, y),
        }
    }

    /// `p ≾ q`.
    pub fn weakly_below(&self, p: &MixedProfile, q: &MixedProfile) -> bool {
        self.utility(p) <= self.utility(q)
    }
}

/// Weights `(α, β) ∈ (0,1)²` such that `(α·pᵢ ⊕ (1−α)·rᵢ, p₋ᵢ) ≺ q ≺
/// (β·pᵢ ⊕ (1−β)·rᵢ, p₋ᵢ)`, chosen so the two mixtures sit at the midpoints
/// of `(U(p), U(q))` and `(U(q), U(rᵢ, p₋ᵢ))`. `None` unless
/// `p ≺ q ≺ (rᵢ, p₋ᵢ)`.
pub fn solvability_witness(
    pref: &InducedPreference,
    p: &MixedProfile,
    q: &MixedProfile,
    r: &MixedStrategy,
    player: Player,
) -> Option<(Rational, Rational)> {
    let up = pref.utility(p);
    let uq = pref.utility(q);
    let ur = pref.utility(&p.with(player, r.clone()));
    if !(up < uq && uq < ur) {
        return None;
    }
    let two = rational::int(2);
    let span = &ur - &up;
    let low_mid = (&up + &uq) / &two;
    let high_mid = (&uq + &ur) / &two;
    Some(((&ur - low_mid) / &span, (&ur - high_mid) / span))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomAudit {
    pub axiom: &'static str,
    pub samples: usize,
    /// Samples whose preconditions held.
    pub checked: usize,
    pub vacuous: usize,
    pub failures: usize,
    pub first_counterexample: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub lens: &'static str,
    pub samples: usize,
    pub seed: u64,
    pub axioms: Vec<AxiomAudit>,
    pub pass: bool,
}

impl AxiomReport {
    pub fn axiom(&self, name: &str) -> Option<&AxiomAudit> {
        self.axioms.iter().find(|a| a.axiom == name)
    }
}

enum Outcome {
    Pass,
    Vacuous,
    Fail(String),
}

struct Tally {
    audit: AxiomAudit,
}

impl Tally {
    fn new(axiom: &'static str) -> Self {
        Tally {
            audit: AxiomAudit {
                axiom,
                samples: 0,
                checked: 0,
                vacuous: 0,
                failures: 0,
                first_counterexample: None,
            },
        }
    }

    fn record(&mut self, o: Outcome) {
        let a = &mut self.audit;
        a.samples += 1;
        match o {
            Outcome::Pass => a.checked += 1,
            Outcome::Vacuous => a.vacuous += 1,
            Outcome::Fail(why) => {
                a.checked += 1;
                a.failures += 1;
                a.first_counterexample.get_or_insert(why);
            }
        }
    }
}

type Check = fn(&InducedPreference, &mut SampleRng) -> Outcome;

const AXIOMS: [(&str, Check); 5] = [
    ("MS1", total_preorder),
    ("MS2", commutativity),
    ("MS3", distributivity),
    ("MS4", solvability),
    ("MS5", independence),
];

/// Runs `samples` draws per axiom, each axiom on its own seed stream.
pub fn audit_mixture_axioms(g: &BimatrixGame, lens: Lens, samples: usize, seed: u64) -> AxiomReport {
    let pref = InducedPreference::new(g, lens);
    let axioms: Vec<AxiomAudit> = AXIOMS
        .iter()
        .enumerate()
        .map(|(k, (name, check))| {
            let mut rng = sample::rng_stream(seed, k as u64);
            let mut tally = Tally::new(name);
            for _ in 0..samples {
                tally.record(check(&pref, &mut rng));
            }
            tally.audit
        })
        .collect();
    let pass = axioms.iter().all(|a| a.failures == 0);
    AxiomReport { lens: lens.name(), samples, seed, axioms, pass }
}

fn random_player(rng: &mut SampleRng) -> Player {
    if rng.gen_bool(0.5) {
        Player::One
    } else {
        Player::Two
    }
}

fn random_strategy_for(rng: &mut SampleRng, g: &BimatrixGame, player: Player) -> MixedStrategy {
    sample::random_strategy(rng, g.actions(player))
}

fn show(p: &MixedProfile) -> String {
    let v = |s: &MixedStrategy| s.probs().iter().map(rational::to_ratio_string).collect::<Vec<_>>().join(",");
    format!("([{}],[{}])", v(&p.row), v(&p.col))
}

fn total_preorder(pref: &InducedPreference, rng: &mut SampleRng) -> Outcome {
    let g = pref.game;
    let (p, q, r) = (sample::random_profile(rng, g), sample::random_profile(rng, g), sample::random_profile(rng, g));
    let total = pref.weakly_below(&p, &q) || pref.weakly_below(&q, &p);
    let transitive = !(pref.weakly_below(&p, &q) && pref.weakly_below(&q, &r)) || pref.weakly_below(&p, &r);
    if total && transitive {
        Outcome::Pass
    } else {
        Outcome::Fail(format!("p={} q={} r={}", show(&p), show(&q), show(&r)))
    }
}

fn commutativity(pref: &InducedPreference, rng: &mut SampleRng) -> Outcome {
    let g = pref.game;
    let i = random_player(rng);
    let (pi, qi) = (random_strategy_for(rng, g, i), random_strategy_for(rng, g, i));
    let r = sample::random_profile(rng, g);
    let a = sample::random_weight(rng);
    let lhs = r.with(i, mix(&pi, &qi, &a).expect("same player"));
    let rhs = r.with(i, mix(&qi, &pi, &(rational::one() - &a)).expect("same player"));
    if pref.utility(&lhs) == pref.utility(&rhs) {
        Outcome::Pass
    } else {
        Outcome::Fail(format!("lhs={} rhs={} alpha={a}", show(&lhs), show(&rhs)))
    }
}

fn distributivity(pref: &InducedPreference, rng: &mut SampleRng) -> Outcome {
    let g = pref.game;
    let i = random_player(rng);
    let (pi, qi) = (random_strategy_for(rng, g, i), random_strategy_for(rng, g, i));
    let r = sample::random_profile(rng, g);
    let (a, b) = (sample::random_weight(rng), sample::random_weight(rng));
    let inner = mix(&pi, &qi, &a).expect("same player");
    let lhs = r.with(i, mix(&inner, &qi, &b).expect("same player"));
    let rhs = r.with(i, mix(&pi, &qi, &(&a * &b)).expect("same player"));
    if pref.utility(&lhs) == pref.utility(&rhs) {
        Outcome::Pass
    } else {
        Outcome::Fail(format!("lhs={} rhs={} alpha={a} beta={b}", show(&lhs), show(&rhs)))
    }
}

fn solvability(pref: &InducedPreference, rng: &mut SampleRng) -> Outcome {
    let g = pref.game;
    let (mut p, mut q) = (sample::random_profile(rng, g), sample::random_profile(rng, g));
    if pref.utility(&p) > pref.utility(&q) {
        std::mem::swap(&mut p, &mut q);
    }
    let i = random_player(rng);
    let r = random_strategy_for(rng, g, i);
    let Some((a, b)) = solvability_witness(pref, &p, &q, &r, i) else {
        return Outcome::Vacuous;
    };
    let (zero, one) = (Rational::zero(), rational::one());
    let interior = |w: &Rational| *w > zero && *w < one;
    let pi = p.strategy(i);
    let low = p.with(i, mix(pi, &r, &a).expect("interior weight"));
    let high = p.with(i, mix(pi, &r, &b).expect("interior weight"));
    let uq = pref.utility(&q);
    if interior(&a) && interior(&b) && pref.utility(&low) < uq && uq < pref.utility(&high) {
        Outcome::Pass
    } else {
        Outcome::Fail(format!("p={} q={} r={:?} alpha={a} beta={b}", show(&p), show(&q), r.probs()))
    }
}

/// Constructs `sⱼ` with `(sⱼ, q₋ⱼ) ∼ (rᵢ, p₋ᵢ)` when the target utility is
/// reachable, by mixing the best and worst pure replies against `q₋ⱼ`.
fn matching_strategy(pref: &InducedPreference, q: &MixedProfile, j: Player, target: &Rational) -> Option<MixedStrategy> {
    let n = pref.game.actions(j);
    let values: Vec<Rational> = (0..n)
        .map(|k| pref.utility(&q.with(j, MixedStrategy::pure(n, k))))
        .collect();
    let lo = (0..n).min_by(|&a, &b| values[a].cmp(&values[b])).expect("nonempty");
    let hi = (0..n).max_by(|&a, &b| values[a].cmp(&values[b])).expect("nonempty");
    if *target < values[lo] || *target > values[hi] {
        return None;
    }
    if values[lo] == values[hi] {
        return Some(MixedStrategy::pure(n, lo));
    }
    let w = (target - &values[lo]) / (&values[hi] - &values[lo]);
    mix(&MixedStrategy::pure(n, hi), &MixedStrategy::pure(n, lo), &w).ok()
}

fn independence(pref: &InducedPreference, rng: &mut SampleRng) -> Outcome {
    let g = pref.game;
    let (mut p, mut q) = (sample::random_profile(rng, g), sample::random_profile(rng, g));
    if pref.utility(&p) > pref.utility(&q) {
        std::mem::swap(&mut p, &mut q);
    }
    let (i, j) = (random_player(rng), random_player(rng));
    let r = random_strategy_for(rng, g, i);
    let a = sample::random_interior_weight(rng);
    if pref.utility(&p) == pref.utility(&q) {
        return Outcome::Vacuous;
    }
    let target = pref.utility(&p.with(i, r.clone()));
    let Some(s) = matching_strategy(pref, &q, j, &target) else {
        return Outcome::Vacuous;
    };
    if pref.utility(&q.with(j, s.clone())) != target {
        return Outcome::Vacuous;
    }
    let lhs = p.with(i, mix(p.strategy(i), &r, &a).expect("interior weight"));
    let rhs = q.with(j, mix(q.strategy(j), &s, &a).expect("interior weight"));
    if pref.utility(&lhs) < pref.utility(&rhs) {
        Outcome::Pass
    } else {
        Outcome::Fail(format!("p={} q={} alpha={a}", show(&p), show(&q)))
    }
}
