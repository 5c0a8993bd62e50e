//! JSON wire formats. Rationals are written as `"n/d"` strings; no field is
//! ever a float.
//!
//! Game file:
//!
//! ```json
//! {"rows": 2, "cols": 2,
//!  "u1": [[1, -1], [-1, 1]],
//!  "u2": [["-1/1", "1"], [1, "-1/1"]]}
//! ```
//!
//! Entries may be JSON integers or `"n/d"` strings with `d > 0`. Cells are
//! reported zero-based as `[row, col]`.

use serde::{Deserialize, Serialize};

use crate::adversarial::{DetectionResult, Witness};
use crate::error::{Error, Result};
use crate::game::{BimatrixGame, Matrix, MixedStrategy};
use crate::mv::MvDecomposition;
use crate::rational::{self, to_ratio_string, Rational};
use crate::solvers::{EquilibriumSet, MinimaxSolution};

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
enum Entry {
    Int(i64),
    Text(String),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GameFile {
    rows: usize,
    cols: usize,
    u1: Vec<Vec<Entry>>,
    u2: Vec<Vec<Entry>>,
}

fn matrix_from_entries(name: &str, rows: usize, cols: usize, m: Vec<Vec<Entry>>) -> Result<Matrix> {
    if m.len() != rows {
        return Err(Error::Parse(format!("{name} has {} rows, header says {rows}", m.len())));
    }
    let parsed = m
        .into_iter()
        .enumerate()
        .map(|(i, row)| {
            if row.len() != cols {
                return Err(Error::Parse(format!("{name} row {i} has {} entries, header says {cols}", row.len())));
            }
            row.into_iter()
                .map(|e| match e {
                    Entry::Int(n) => Ok(rational::int(n)),
                    Entry::Text(s) => rational::parse_ratio(&s),
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Matrix::from_rows(parsed)
}

pub fn parse_game(text: &str) -> Result<BimatrixGame> {
    let file: GameFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    if file.rows == 0 || file.cols == 0 {
        return Err(Error::EmptyGame);
    }
    let u1 = matrix_from_entries("u1", file.rows, file.cols, file.u1)?;
    let u2 = matrix_from_entries("u2", file.rows, file.cols, file.u2)?;
    BimatrixGame::new(u1, u2)
}

fn entries(m: &Matrix) -> Vec<Vec<Entry>> {
    m.to_rows()
        .iter()
        .map(|row| row.iter().map(|v| Entry::Text(to_ratio_string(v))).collect())
        .collect()
}

/// Pretty-printed game file with every entry as `"n/d"`.
pub fn game_to_json(g: &BimatrixGame) -> String {
    let file = GameFile {
        rows: g.rows(),
        cols: g.cols(),
        u1: entries(g.u1()),
        u2: entries(g.u2()),
    };
    serde_json::to_string_pretty(&file).expect("serializable")
}

pub fn ratios(v: &[Rational]) -> Vec<String> {
    v.iter().map(to_ratio_string).collect()
}

pub fn strategy(s: &MixedStrategy) -> Vec<String> {
    ratios(s.probs())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum WitnessJson {
    AffineMismatch { cell: [usize; 2], expected: String, actual: String },
    OrdinalViolation { sigma: [usize; 2], tau: [usize; 2] },
    AlphaNonpositive { anchors: [[usize; 2]; 2] },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DetectionJson {
    pub status: &'static str,
    pub alpha: Option<String>,
    pub beta: Option<String>,
    pub witness: Option<WitnessJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<&'static str>,
}

impl From<&DetectionResult> for DetectionJson {
    fn from(r: &DetectionResult) -> Self {
        let pair = |a: &Rational, b: &Rational| (Some(to_ratio_string(a)), Some(to_ratio_string(b)));
        match r {
            DetectionResult::Adversarial(t) => {
                let (alpha, beta) = pair(t.alpha(), t.beta());
                DetectionJson { status: "adversarial", alpha, beta, witness: None, note: None }
            }
            DetectionResult::Degenerate(t) => {
                let (alpha, beta) = pair(t.alpha(), t.beta());
                DetectionJson {
                    status: "degenerate",
                    alpha,
                    beta,
                    witness: None,
                    note: Some("both payoffs constant"),
                }
            }
            DetectionResult::NotAdversarial(w) => {
                let ((alpha, beta), witness) = match w {
                    Witness::AffineMismatch { alpha, beta, cell, expected, actual } => (
                        pair(alpha, beta),
                        WitnessJson::AffineMismatch {
                            cell: [cell.0, cell.1],
                            expected: to_ratio_string(expected),
                            actual: to_ratio_string(actual),
                        },
                    ),
                    Witness::OrdinalViolation { sigma, tau } => (
                        (None, None),
                        WitnessJson::OrdinalViolation { sigma: [sigma.0, sigma.1], tau: [tau.0, tau.1] },
                    ),
                    Witness::AlphaNonpositive { anchors, alpha, beta } => (
                        pair(alpha, beta),
                        WitnessJson::AlphaNonpositive {
                            anchors: [[anchors[0].0, anchors[0].1], [anchors[1].0, anchors[1].1]],
                        },
                    ),
                };
                DetectionJson { status: "not_adversarial", alpha, beta, witness: Some(witness), note: None }
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MinimaxJson {
    pub value: String,
    pub row_strategy: Vec<String>,
    pub col_strategy: Vec<String>,
}

impl From<&MinimaxSolution> for MinimaxJson {
    fn from(s: &MinimaxSolution) -> Self {
        MinimaxJson {
            value: to_ratio_string(&s.value),
            row_strategy: strategy(&s.row_strategy),
            col_strategy: strategy(&s.col_strategy),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EquilibriumJson {
    pub row: Vec<String>,
    pub col: Vec<String>,
    pub payoff1: String,
    pub payoff2: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EquilibriaJson {
    pub equilibria: Vec<EquilibriumJson>,
}

impl From<&EquilibriumSet> for EquilibriaJson {
    fn from(s: &EquilibriumSet) -> Self {
        EquilibriaJson {
            equilibria: s
                .equilibria
                .iter()
                .map(|e| EquilibriumJson {
                    row: strategy(&e.row),
                    col: strategy(&e.col),
                    payoff1: to_ratio_string(&e.payoff1),
                    payoff2: to_ratio_string(&e.payoff2),
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MvJson {
    pub status: &'static str,
    pub lambda1: Option<String>,
    pub lambda2: Option<String>,
    pub row_offsets: Option<Vec<String>>,
    pub col_offsets: Option<Vec<String>>,
}

impl From<Option<&MvDecomposition>> for MvJson {
    fn from(d: Option<&MvDecomposition>) -> Self {
        match d {
            Some(d) => MvJson {
                status: "strategic_zero_sum",
                lambda1: Some(to_ratio_string(&d.lambda1)),
                lambda2: Some(to_ratio_string(&d.lambda2)),
                row_offsets: Some(ratios(&d.row_offsets)),
                col_offsets: Some(ratios(&d.col_offsets)),
            },
            None => MvJson { status: "none_found", lambda1: None, lambda2: None, row_offsets: None, col_offsets: None },
        }
    }
}
