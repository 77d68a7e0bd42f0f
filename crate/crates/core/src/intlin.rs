//! Integer linear systems `A x = b` via column Hermite reduction.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Some integer solution of `A x = b`, or `None` if there is none.
///
/// Column operations bring `A` to lower echelon form `H = A U` with `U`
/// unimodular; `H y = b` is then solved by forward substitution and
/// `x = U y`.
pub fn solve(a: &[Vec<BigInt>], b: &[BigInt]) -> Option<Vec<BigInt>> {
    let m = a.len();
    let n = a.first().map_or(0, Vec::len);
    let mut h: Vec<Vec<BigInt>> = a.to_vec();
    let mut u: Vec<Vec<BigInt>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect();
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut col = 0;
    for r in 0..m {
        if col == n {
            break;
        }
        for c in col + 1..n {
            if h[r][c].is_zero() {
                continue;
            }
            let x = h[r][col].clone();
            let y = h[r][c].clone();
            let e = x.extended_gcd(&y);
            let (g, s, t) = (e.gcd, e.x, e.y);
            let (xg, yg) = (&x / &g, &y / &g);
            combine(&mut h, col, c, &s, &t, &yg, &xg);
            combine(&mut u, col, c, &s, &t, &yg, &xg);
        }
        if !h[r][col].is_zero() {
            if h[r][col].is_negative() {
                negate_col(&mut h, col);
                negate_col(&mut u, col);
            }
            pivots.push((r, col));
            col += 1;
        }
    }
    let mut y = vec![BigInt::zero(); n];
    let mut next = pivots.iter().peekable();
    for r in 0..m {
        let acc: BigInt = (0..col).map(|c| &h[r][c] * &y[c]).sum();
        let rhs = &b[r] - acc;
        match next.peek() {
            Some(&&(pr, pc)) if pr == r => {
                next.next();
                let (q, rem) = rhs.div_rem(&h[r][pc]);
                if !rem.is_zero() {
                    return None;
                }
                y[pc] = q;
            }
            _ => {
                if !rhs.is_zero() {
                    return None;
                }
            }
        }
    }
    Some((0..n).map(|i| (0..n).map(|j| &u[i][j] * &y[j]).sum()).collect())
}

/// Columns `(p, c) <- (s p + t c, -yg p + xg c)`; unimodular since `s xg + t yg = 1`.
fn combine(m: &mut [Vec<BigInt>], p: usize, c: usize, s: &BigInt, t: &BigInt, yg: &BigInt, xg: &BigInt) {
    for row in m.iter_mut() {
        let vp = row[p].clone();
        let vc = row[c].clone();
        row[p] = s * &vp + t * &vc;
        row[c] = xg * &vc - yg * &vp;
    }
}

fn negate_col(m: &mut [Vec<BigInt>], p: usize) {
    for row in m.iter_mut() {
        row[p] = -row[p].clone();
    }
}

pub fn solve_i64(a: &[Vec<i64>], b: &[i64]) -> Option<Vec<i64>> {
    let a: Vec<Vec<BigInt>> = a.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let b: Vec<BigInt> = b.iter().map(|&x| BigInt::from(x)).collect();
    solve(&a, &b).map(|x| x.iter().map(|v| i64::try_from(v).expect("solution fits in i64")).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn check(a: &[Vec<i64>], x: &[i64], b: &[i64]) -> bool {
        a.iter().zip(b).all(|(row, bi)| row.iter().zip(x).map(|(p, q)| p * q).sum::<i64>() == *bi)
    }

    #[test]
    fn small_systems() {
        let a = vec![vec![2, 4], vec![1, 3]];
        let x = solve_i64(&a, &[6, 4]).unwrap();
        assert!(check(&a, &x, &[6, 4]));
        // 2x = 1 has no integer solution
        assert_eq!(solve_i64(&[vec![2]], &[1]), None);
        // inconsistent over Q
        assert_eq!(solve_i64(&[vec![1, 1], vec![1, 1]], &[1, 2]), None);
        // underdetermined
        let a = vec![vec![6, 10, 15]];
        let x = solve_i64(&a, &[1]).unwrap();
        assert!(check(&a, &x, &[1]));
    }

    proptest! {
        #[test]
        fn recovers_planted_solutions(
            a in prop::collection::vec(prop::collection::vec(-4i64..=4, 4), 1..6),
            x in prop::collection::vec(-5i64..=5, 4),
        ) {
            let b: Vec<i64> = a.iter().map(|r| r.iter().zip(&x).map(|(p, q)| p * q).sum()).collect();
            let sol = solve_i64(&a, &b);
            prop_assert!(sol.is_some());
            prop_assert!(check(&a, &sol.unwrap(), &b));
        }

        #[test]
        fn never_returns_a_wrong_answer(
            a in prop::collection::vec(prop::collection::vec(-4i64..=4, 3), 1..5),
            b0 in prop::collection::vec(-6i64..=6, 5),
        ) {
            let b = &b0[..a.len()];
            if let Some(x) = solve_i64(&a, b) {
                prop_assert!(check(&a, &x, b));
            }
        }
    }
}
