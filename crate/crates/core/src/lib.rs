//! Exact analysis of finite two-player games.
//!
//! A game's mixed extension is strictly competitive exactly when the second
//! player's payoff matrix is a positive affine transform of the negated first
//! payoff matrix. This crate decides that relation with exact rational
//! arithmetic, returns the transform or a concrete witness, rescales the game
//! to zero-sum form and solves it by linear programming.
//!
//! ```
//! use zerosum_core::{adversarial, BimatrixGame, Matrix};
//!
//! let u1 = Matrix::from_i64(&[&[1, -1], &[-1, 1]]).unwrap();
//! let u2 = Matrix::from_i64(&[&[1, 5], &[5, 1]]).unwrap();
//! let game = BimatrixGame::new(u1, u2).unwrap();
//!
//! let t = adversarial::detect_affine(&game).transform().cloned().unwrap();
//! assert_eq!(t.alpha().to_string(), "2");
//! assert_eq!(t.beta().to_string(), "3");
//! ```

pub mod adversarial;
pub mod axioms;
pub mod error;
pub mod format;
pub mod game;
pub mod gen;
pub mod harness;
pub mod linalg;
pub mod mv;
pub mod rational;
pub mod sample;
pub mod solvers;

pub use adversarial::{AffineTransform, Cell, DetectionResult, Witness};
pub use error::{Error, Result};
pub use game::{BimatrixGame, Matrix, MixedProfile, MixedStrategy, Player};
pub use rational::Rational;
