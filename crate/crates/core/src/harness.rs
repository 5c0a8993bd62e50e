//! Detection-versus-enumeration benchmark records and their CSV form.

use std::io::Write;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::adversarial::{self, DetectionResult};
use crate::error::{Error, Result};
use crate::game::BimatrixGame;
use crate::gen::{self, Family, GenSpec};
use crate::mv;
use crate::solvers::{self, MinimaxSolution};

pub const CSV_HEADER: &str = "family,rows,cols,seed,detect_ns,lp_ns,enum_ns,agree";

#[derive(Debug, Clone)]
pub struct BenchConfig {
    pub families: Vec<Family>,
    pub sizes: Vec<(usize, usize)>,
    pub seeds: Vec<u64>,
    /// Support enumeration runs only when both dimensions are at most this.
    pub enum_cap: usize,
}

impl BenchConfig {
    pub fn new(families: Vec<Family>, sizes: Vec<(usize, usize)>, seeds: Vec<u64>) -> Self {
        BenchConfig { families, sizes, seeds, enum_cap: solvers::DEFAULT_MAX_DIM }
    }
}

/// One benchmark cell. Timings are wall-clock nanoseconds; `None` marks a
/// stage that did not run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BenchRecord {
    pub family: &'static str,
    pub rows: usize,
    pub cols: usize,
    pub seed: u64,
    pub detect_ns: u64,
    pub lp_ns: Option<u64>,
    pub enum_ns: Option<u64>,
    /// Whether every enumerated equilibrium pays the LP value in the zero-sum
    /// form. Set only when both paths ran.
    pub agree: Option<bool>,
}

impl BenchRecord {
    /// The record without its timing columns, for determinism checks.
    pub fn key(&self) -> (&'static str, usize, usize, u64, bool, bool, Option<bool>) {
        (self.family, self.rows, self.cols, self.seed, self.lp_ns.is_some(), self.enum_ns.is_some(), self.agree)
    }
}

fn elapsed_ns(start: Instant) -> u64 {
    u64::try_from(start.elapsed().as_nanos()).unwrap_or(u64::MAX)
}

/// Zero-sum game with the same equilibria as `g`, via the affine transform if
/// one exists, else via a strategic decomposition.
fn zero_sum_route(g: &BimatrixGame, detection: &DetectionResult) -> Option<BimatrixGame> {
    match detection.transform() {
        Some(t) => Some(adversarial::to_zero_sum(g, t)),
        None => mv::strategically_zero_sum_detect(g).map(|d| d.zero_sum_equivalent(g)),
    }
}

pub fn run_cell(family: Family, rows: usize, cols: usize, seed: u64, enum_cap: usize) -> Result<BenchRecord> {
    let g = gen::gen(&GenSpec::new(family, rows, cols, seed))?;

    let start = Instant::now();
    let detection = adversarial::detect_affine(&g);
    let detect_ns = elapsed_ns(start);

    let start = Instant::now();
    let solved: Option<(BimatrixGame, MinimaxSolution)> = match zero_sum_route(&g, &detection) {
        Some(z) => {
            let s = solvers::minimax_solve(&z)?;
            Some((z, s))
        }
        None => None,
    };
    let lp_ns = solved.as_ref().map(|_| elapsed_ns(start));

    let (enum_ns, equilibria) = if rows <= enum_cap && cols <= enum_cap {
        let start = Instant::now();
        let set = solvers::support_enumeration(&g, enum_cap)?;
        (Some(elapsed_ns(start)), Some(set))
    } else {
        (None, None)
    };

    let agree = match (&solved, &equilibria) {
        (Some((z, s)), Some(set)) => Some(set.equilibria.iter().all(|e| {
            z.u1().bilinear(e.row.probs(), e.col.probs()) == s.value
        })),
        _ => None,
    };

    Ok(BenchRecord {
        family: family.name(),
        rows,
        cols,
        seed,
        detect_ns,
        lp_ns,
        enum_ns,
        agree,
    })
}

/// Runs every `(family, size, seed)` cell in parallel and returns the records
/// sorted by family, size and seed. Cells a family cannot fill (fewer than
/// three cells for `ordinal-not-affine`) are skipped.
pub fn run_bench(config: &BenchConfig) -> Result<Vec<BenchRecord>> {
    let mut cells = Vec::new();
    for &family in &config.families {
        for &(rows, cols) in &config.sizes {
            if family == Family::OrdinalNotAffine && rows * cols < 3 {
                continue;
            }
            for &seed in &config.seeds {
                cells.push((family, rows, cols, seed));
            }
        }
    }
    let mut records = cells
        .par_iter()
        .map(|&(f, r, c, s)| run_cell(f, r, c, s, config.enum_cap).map(|rec| (f, rec)))
        .collect::<Result<Vec<_>>>()?;
    records.sort_by(|(fa, a), (fb, b)| (fa, a.rows, a.cols, a.seed).cmp(&(fb, b.rows, b.cols, b.seed)));
    Ok(records.into_iter().map(|(_, r)| r).collect())
}

pub fn write_csv<W: Write>(records: &[BenchRecord], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for r in records {
        w.serialize(r).map_err(|e| Error::Internal(e.to_string()))?;
    }
    if records.is_empty() {
        w.write_record(CSV_HEADER.split(',')).map_err(|e| Error::Internal(e.to_string()))?;
    }
    w.flush().map_err(|e| Error::Internal(e.to_string()))?;
    Ok(())
}

/// Parses `"n"` (square) or `"RxC"`.
pub fn parse_size(s: &str) -> Result<(usize, usize)> {
    let bad = || Error::Parse(format!("invalid size {s:?}"));
    let dims = match s.split_once(['x', 'X']) {
        Some((r, c)) => (r.trim().parse().map_err(|_| bad())?, c.trim().parse().map_err(|_| bad())?),
        None => {
            let n = s.trim().parse().map_err(|_| bad())?;
            (n, n)
        }
    };
    if dims.0 == 0 || dims.1 == 0 {
        return Err(bad());
    }
    Ok(dims)
}
