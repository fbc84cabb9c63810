//! Exact feasibility of `A x >= 1` over the rationals.
//!
//! An open homogeneous system `A x > 0` is feasible exactly when its
//! homogenized form `A x >= 1` is, so this is the only test topes need.
//! The test is phase one of a dense simplex method with Bland's rule, run on
//! `A u - A w - s + a = 1` with all variables nonnegative and objective
//! `min sum(a)`.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Returns true iff some rational `x` satisfies `row . x >= 1` for every row.
pub fn is_feasible(rows: &[Vec<BigRational>]) -> bool {
    let m = rows.len();
    if m == 0 {
        return true;
    }
    let d = rows[0].len();
    // columns: u (d) | w (d) | surplus (m) | artificial (m) | rhs
    let n = 2 * d + 2 * m;
    let art = 2 * d + m;
    let mut tab: Vec<Vec<BigRational>> = rows
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = vec![BigRational::zero(); n + 1];
            for (j, x) in row.iter().enumerate() {
                r[j] = x.clone();
                r[d + j] = -x;
            }
            r[2 * d + i] = -BigRational::one();
            r[art + i] = BigRational::one();
            r[n] = BigRational::one();
            r
        })
        .collect();
    let mut basis: Vec<usize> = (art..art + m).collect();

    // reduced costs of min sum(a) with the artificial basis priced out
    let mut cost = vec![BigRational::zero(); n + 1];
    for row in &tab {
        for j in 0..art {
            cost[j] -= &row[j];
        }
        cost[n] -= &row[n];
    }

    while let Some(enter) = (0..n).find(|&j| cost[j].is_negative()) {
        let mut leave: Option<(usize, BigRational)> = None;
        for i in 0..m {
            if !tab[i][enter].is_positive() {
                continue;
            }
            let ratio = &tab[i][n] / &tab[i][enter];
            let better = match &leave {
                None => true,
                Some((l, best)) => ratio < *best || (ratio == *best && basis[i] < basis[*l]),
            };
            if better {
                leave = Some((i, ratio));
            }
        }
        // The phase-one objective is bounded below by zero.
        let (r, _) = leave.expect("phase-one objective is bounded");
        pivot(&mut tab, &mut cost, r, enter);
        basis[r] = enter;
    }
    // cost[n] holds -(current objective)
    cost[n].is_zero()
}

fn pivot(tab: &mut [Vec<BigRational>], cost: &mut [BigRational], r: usize, c: usize) {
    let p = tab[r][c].clone();
    for x in tab[r].iter_mut() {
        *x /= &p;
    }
    let pivot_row = tab[r].clone();
    for (i, row) in tab.iter_mut().enumerate() {
        if i == r || row[c].is_zero() {
            continue;
        }
        let f = row[c].clone();
        for (x, y) in row.iter_mut().zip(&pivot_row) {
            if !y.is_zero() {
                *x -= &f * y;
            }
        }
    }
    if !cost[c].is_zero() {
        let f = cost[c].clone();
        for (x, y) in cost.iter_mut().zip(&pivot_row) {
            if !y.is_zero() {
                *x -= &f * y;
            }
        }
    }
}
