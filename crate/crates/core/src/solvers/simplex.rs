//! Dense tableau simplex over exact rationals with Bland's pivot rule.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LpSolution {
    pub objective: Rational,
    pub primal: Vec<Rational>,
    /// Shadow prices of the `≤` rows; an optimal solution of the dual.
    pub dual: Vec<Rational>,
    pub pivots: usize,
}

/// `max cᵀx  s.t.  A x ≤ b, x ≥ 0` with `b ≥ 0`, so the slack basis is
/// feasible from the start.
///
/// Bland's rule (lowest-index entering column, lowest-index leaving basic
/// variable among ratio ties) rules out cycling. Each row is scaled to
/// integers and the tableau is pivoted fraction-free: every entry is an
/// integer over the common denominator `det` (the previous pivot), and the
/// update divides by `det` exactly.
pub fn maximize(a: &[Vec<Rational>], b: &[Rational], c: &[Rational]) -> Result<LpSolution> {
    let m = a.len();
    let n = c.len();
    assert_eq!(b.len(), m);
    assert!(a.iter().all(|r| r.len() == n));
    if b.iter().any(Signed::is_negative) {
        return Err(Error::Internal("negative right-hand side".into()));
    }
    let width = n + m;

    let row_scale: Vec<BigInt> = (0..m).map(|i| lcm_of_denominators(a[i].iter().chain([&b[i]]))).collect();
    let obj_scale = lcm_of_denominators(c.iter());
    let scaled = |x: &Rational, k: &BigInt| (x * Rational::from_integer(k.clone())).to_integer();

    let mut tab: Vec<Vec<BigInt>> = (0..m)
        .map(|i| {
            let mut row = Vec::with_capacity(width + 1);
            row.extend(a[i].iter().map(|x| scaled(x, &row_scale[i])));
            row.extend((0..m).map(|k| BigInt::from((k == i) as i64)));
            row.push(scaled(&b[i], &row_scale[i]));
            row
        })
        .collect();
    // objective row z − cᵀx = 0; a negative entry marks an improving column
    let mut obj: Vec<BigInt> = c
        .iter()
        .map(|x| -scaled(x, &obj_scale))
        .chain((0..=m).map(|_| BigInt::zero()))
        .collect();
    let mut basis: Vec<usize> = (n..width).collect();
    let mut det = BigInt::one();
    let mut pivots = 0;

    while let Some(enter) = (0..width).find(|&j| obj[j].is_negative()) {
        let mut leave: Option<usize> = None;
        for i in 0..m {
            if !tab[i][enter].is_positive() {
                continue;
            }
            leave = match leave {
                None => Some(i),
                Some(l) => {
                    // compare rhs_i / t_i against rhs_l / t_l
                    let lhs = &tab[i][width] * &tab[l][enter];
                    let rhs = &tab[l][width] * &tab[i][enter];
                    if lhs < rhs || (lhs == rhs && basis[i] < basis[l]) {
                        Some(i)
                    } else {
                        Some(l)
                    }
                }
            };
        }
        let Some(row) = leave else {
            return Err(Error::Unbounded);
        };
        pivot(&mut tab, &mut obj, &mut det, row, enter);
        basis[row] = enter;
        pivots += 1;
    }

    let over_det = |x: &BigInt| Rational::new(x.clone(), det.clone());
    let mut primal = vec![Rational::zero(); n];
    for (i, &var) in basis.iter().enumerate() {
        if var < n {
            primal[var] = over_det(&tab[i][width]);
        }
    }
    let obj_scale = Rational::from_integer(obj_scale);
    let dual = (0..m)
        .map(|i| over_det(&obj[n + i]) * Rational::from_integer(row_scale[i].clone()) / &obj_scale)
        .collect();
    Ok(LpSolution {
        objective: over_det(&obj[width]) / &obj_scale,
        primal,
        dual,
        pivots,
    })
}

fn lcm_of_denominators<'a>(xs: impl Iterator<Item = &'a Rational>) -> BigInt {
    xs.fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
}

fn pivot(tab: &mut [Vec<BigInt>], obj: &mut [BigInt], det: &mut BigInt, row: usize, col: usize) {
    let pivot_row = tab[row].clone();
    let p = pivot_row[col].clone();
    let update = |r: &mut Vec<BigInt>| {
        let f = r[col].clone();
        for (x, s) in r.iter_mut().zip(&pivot_row) {
            let mut v = &*x * &p;
            if !f.is_zero() && !s.is_zero() {
                v -= &f * s;
            }
            *x = v / &*det;
        }
    };
    for (i, r) in tab.iter_mut().enumerate() {
        if i != row {
            update(r);
        }
    }
    let mut o = obj.to_vec();
    update(&mut o);
    obj.clone_from_slice(&o);
    *det = p;
}
