//! Exact feasibility for small systems `A y >= b, y >= 0` (phase-one
//! simplex with Bland's rule over rationals).

use num_traits::{One, Signed, Zero};

use crate::Rational;

/// Returns some `y >= 0` with `A y >= b`, or `None` if the system is
/// infeasible. Every row of `a` must have length `vars`.
pub(crate) fn feasible_point(vars: usize, a: &[Vec<Rational>], b: &[Rational]) -> Option<Vec<Rational>> {
    let m = a.len();
    // columns: y (vars) | surplus (m) | artificial (one per row with b > 0)
    let needs_art: Vec<bool> = b.iter().map(|x| x.is_positive()).collect();
    let art_count = needs_art.iter().filter(|&&x| x).count();
    let cols = vars + m + art_count;
    let mut t: Vec<Vec<Rational>> = Vec::with_capacity(m);
    let mut rhs: Vec<Rational> = Vec::with_capacity(m);
    let mut basis: Vec<usize> = Vec::with_capacity(m);
    let mut next_art = vars + m;
    for k in 0..m {
        let mut row = vec![Rational::zero(); cols];
        if needs_art[k] {
            // a y - s + z = b
            row[..vars].clone_from_slice(&a[k]);
            row[vars + k] = -Rational::one();
            row[next_art] = Rational::one();
            basis.push(next_art);
            next_art += 1;
            rhs.push(b[k].clone());
        } else {
            // -a y + s = -b, with -b >= 0
            for (dst, src) in row[..vars].iter_mut().zip(&a[k]) {
                *dst = -src.clone();
            }
            row[vars + k] = Rational::one();
            basis.push(vars + k);
            rhs.push(-b[k].clone());
        }
        t.push(row);
    }

    let is_art = |c: usize| c >= vars + m;
    // reduced costs of the phase-one objective (sum of artificials)
    let mut w = vec![Rational::zero(); cols];
    for x in &mut w[vars + m..] {
        *x = Rational::one();
    }
    for k in 0..m {
        if is_art(basis[k]) {
            for c in 0..cols {
                w[c] -= &t[k][c];
            }
        }
    }

    while let Some(enter) = (0..cols).find(|&c| w[c].is_negative()) {
        let mut leave: Option<usize> = None;
        for k in 0..m {
            if !t[k][enter].is_positive() {
                continue;
            }
            let ratio = &rhs[k] / &t[k][enter];
            leave = match leave {
                None => Some(k),
                Some(best) => {
                    let best_ratio = &rhs[best] / &t[best][enter];
                    if ratio < best_ratio || (ratio == best_ratio && basis[k] < basis[best]) {
                        Some(k)
                    } else {
                        Some(best)
                    }
                }
            };
        }
        // phase one is bounded below by zero, so a leaving row always exists
        let leave = leave.expect("phase-one objective is bounded");
        pivot(&mut t, &mut rhs, &mut w, leave, enter);
        basis[leave] = enter;
    }

    let infeasibility: Rational = (0..m)
        .filter(|&k| is_art(basis[k]))
        .map(|k| rhs[k].clone())
        .fold(Rational::zero(), |acc, x| acc + x);
    if infeasibility.is_positive() {
        return None;
    }
    let mut y = vec![Rational::zero(); vars];
    for k in 0..m {
        if basis[k] < vars {
            y[basis[k]] = rhs[k].clone();
        }
    }
    Some(y)
}

fn pivot(t: &mut [Vec<Rational>], rhs: &mut [Rational], w: &mut [Rational], row: usize, col: usize) {
    let p = t[row][col].clone();
    for x in t[row].iter_mut() {
        *x /= &p;
    }
    rhs[row] /= &p;
    let pivot_row = t[row].clone();
    let pivot_rhs = rhs[row].clone();
    for k in 0..t.len() {
        if k == row || t[k][col].is_zero() {
            continue;
        }
        let f = t[k][col].clone();
        for (x, pr) in t[k].iter_mut().zip(&pivot_row) {
            if !pr.is_zero() {
                *x -= &f * pr;
            }
        }
        rhs[k] -= &f * &pivot_rhs;
    }
    if !w[col].is_zero() {
        let f = w[col].clone();
        for (x, pr) in w.iter_mut().zip(&pivot_row) {
            if !pr.is_zero() {
                *x -= &f * pr;
            }
        }
    }
}
