//! Gaussian elimination over Q(q,t).

use crate::arith::RatQT;

/// Basis of `{c : sum_j c_j cols[j] = 0}`, where every column has length `nrows`.
pub fn null_space(cols: &[Vec<RatQT>], nrows: usize) -> Vec<Vec<RatQT>> {
    let ncols = cols.len();
    let mut a: Vec<Vec<RatQT>> = (0..nrows).map(|r| cols.iter().map(|c| c[r].clone()).collect()).collect();
    let mut pivots: Vec<usize> = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        if row == nrows {
            break;
        }
        let Some(p) = (row..nrows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(row, p);
        let inv = a[row][col].inv().expect("nonzero pivot");
        for x in a[row].iter_mut() {
            *x = &*x * &inv;
        }
        for r in 0..nrows {
            if r != row && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in col..ncols {
                    if !a[row][c].is_zero() {
                        let d = &a[row][c] * &f;
                        a[r][c] = &a[r][c] - &d;
                    }
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![RatQT::zero(); ncols];
        v[free] = RatQT::one();
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = -&a[r][free];
        }
        basis.push(v);
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kernel_of_rank_one() {
        let t = RatQT::t();
        // columns (1, t) and (t, t^2) are dependent
        let cols = vec![vec![RatQT::one(), t.clone()], vec![t.clone(), &t * &t]];
        let ns = null_space(&cols, 2);
        assert_eq!(ns.len(), 1);
        let v = &ns[0];
        let r0 = &v[0] + &(&v[1] * &t);
        assert!(r0.is_zero());
    }
}
