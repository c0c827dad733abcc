//! Exact dense linear algebra over the rationals.
//!
//! Matrices are row-major `Vec<Vec<BigRational>>`. Everything here is
//! exact; sizes in this crate stay in the low hundreds.

use num_bigint::BigInt;
use num_rational::{BigRational, Rational64};
use num_traits::{One, Zero};

pub type BigQ = BigRational;

pub fn big(n: i64) -> BigQ {
    BigQ::from_integer(BigInt::from(n))
}

pub fn from_q64(q: Rational64) -> BigQ {
    BigQ::new(BigInt::from(*q.numer()), BigInt::from(*q.denom()))
}

pub fn int_matrix(rows: &[Vec<i64>]) -> Vec<Vec<BigQ>> {
    rows.iter().map(|r| r.iter().map(|&x| big(x)).collect()).collect()
}

pub fn transpose<T: Clone>(m: &[Vec<T>]) -> Vec<Vec<T>> {
    if m.is_empty() {
        return Vec::new();
    }
    (0..m[0].len()).map(|j| m.iter().map(|row| row[j].clone()).collect()).collect()
}

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(m: &mut [Vec<BigQ>]) -> Vec<usize> {
    let rows = m.len();
    if rows == 0 {
        return Vec::new();
    }
    let cols = m[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = BigQ::one() / m[r][c].clone();
        for x in m[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                let (top, rest) = if i < r {
                    let (a, b) = m.split_at_mut(r);
                    (&b[0], &mut a[i])
                } else {
                    let (a, b) = m.split_at_mut(i);
                    (&a[r], &mut b[0])
                };
                for (x, y) in rest.iter_mut().zip(top.iter()) {
                    if !y.is_zero() {
                        *x = &*x - &f * y;
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(m: &[Vec<BigQ>]) -> usize {
    let mut w = m.to_vec();
    rref(&mut w).len()
}

/// Basis of the right kernel `{x : m x = 0}`.
pub fn nullspace(m: &[Vec<BigQ>], cols: usize) -> Vec<Vec<BigQ>> {
    let mut w = m.to_vec();
    let pivots = rref(&mut w);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![BigQ::zero(); cols];
            v[f] = BigQ::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -w[row][f].clone();
            }
            v
        })
        .collect()
}

/// Solves `m x = b`, returning one solution if the system is consistent.
pub fn solve(m: &[Vec<BigQ>], b: &[BigQ]) -> Option<Vec<BigQ>> {
    let cols = m.first().map_or(0, |r| r.len());
    let mut aug: Vec<Vec<BigQ>> = m
        .iter()
        .zip(b)
        .map(|(row, x)| {
            let mut r = row.clone();
            r.push(x.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.contains(&cols) {
        return None;
    }
    let mut x = vec![BigQ::zero(); cols];
    for (row, &p) in pivots.iter().enumerate() {
        x[p] = aug[row][cols].clone();
    }
    Some(x)
}

pub fn mat_mul(a: &[Vec<BigQ>], b: &[Vec<BigQ>]) -> Vec<Vec<BigQ>> {
    let inner = b.len();
    let cols = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    let mut s = BigQ::zero();
                    for k in 0..inner {
                        if !row[k].is_zero() && !b[k][j].is_zero() {
                            s += &row[k] * &b[k][j];
                        }
                    }
                    s
                })
                .collect()
        })
        .collect()
}

/// Scales a rational vector to the primitive integer vector on the same ray
/// with positive first nonzero entry.
pub fn primitive_integer(v: &[BigQ]) -> Vec<BigInt> {
    use num_integer::Integer;
    let mut l = BigInt::one();
    for x in v {
        l = l.lcm(x.denom());
    }
    let ints: Vec<BigInt> = v.iter().map(|x| (x * &l).to_integer()).collect();
    let mut g = BigInt::zero();
    for x in &ints {
        g = g.gcd(x);
    }
    if g.is_zero() {
        return ints;
    }
    let sign = ints.iter().find(|x| !x.is_zero()).map_or(BigInt::one(), |x| {
        if *x < BigInt::zero() {
            -BigInt::one()
        } else {
            BigInt::one()
        }
    });
    ints.into_iter().map(|x| x / &g * &sign).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_and_kernel_of_affine_a1() {
        let m = int_matrix(&[vec![2, -2], vec![-2, 2]]);
        assert_eq!(rank(&m), 1);
        let k = nullspace(&m, 2);
        assert_eq!(k.len(), 1);
        assert_eq!(primitive_integer(&k[0]), vec![BigInt::from(1), BigInt::from(1)]);
    }

    #[test]
    fn solve_detects_inconsistency() {
        let m = int_matrix(&[vec![1, 1], vec![2, 2]]);
        assert!(solve(&m, &[big(1), big(3)]).is_none());
        let x = solve(&m, &[big(1), big(2)]).unwrap();
        assert_eq!(&x[0] + &x[1], big(1));
    }

    #[test]
    fn rref_identity_is_fixed() {
        let mut m = int_matrix(&[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);
        assert_eq!(rref(&mut m), vec![0, 1, 2]);
    }
}
