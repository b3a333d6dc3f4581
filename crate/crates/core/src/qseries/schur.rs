//! Principal specializations `s_λ(1, p, …, p^{n−1})` through Jacobi–Trudi.

use super::laurent::LaurentPoly;
use super::ring::{Rational, Ring};
use crate::partitions::Partition;

pub type PPoly = LaurentPoly<Rational>;

/// `h_k(1, p, …, p^{n−1})` for `k = 0..=kmax`, from
/// `h_k(x_1..x_j) = h_k(x_1..x_{j−1}) + x_j h_{k−1}(x_1..x_j)`.
pub fn complete_homogeneous_principal(n: usize, kmax: usize) -> Vec<PPoly> {
    let mut h: Vec<PPoly> = (0..=kmax)
        .map(|k| if k == 0 { PPoly::one() } else { PPoly::zero() })
        .collect();
    for j in 0..n {
        let xj = PPoly::var_pow(0, j as i32);
        for k in 1..=kmax {
            let add = xj.times(&h[k - 1]);
            h[k] = h[k].plus(&add);
        }
    }
    h
}

/// `s_λ(1, p, …, p^{n−1}) = det(h_{λ_i − i + j})`.
pub fn schur_principal(lambda: &Partition, n: usize) -> PPoly {
    let l = lambda.length();
    if l == 0 {
        return PPoly::one();
    }
    let kmax = lambda.part(1) as usize + l;
    let h = complete_homogeneous_principal(n, kmax);
    let matrix: Vec<Vec<PPoly>> = (1..=l)
        .map(|i| {
            (1..=l)
                .map(|j| {
                    let k = lambda.part(i) as i64 - i as i64 + j as i64;
                    if k < 0 {
                        PPoly::zero()
                    } else {
                        h[k as usize].clone()
                    }
                })
                .collect()
        })
        .collect();
    let cols: Vec<usize> = (0..l).collect();
    determinant(&matrix, 0, &cols)
}

/// Cofactor expansion along rows, skipping zero entries.
fn determinant(m: &[Vec<PPoly>], row: usize, cols: &[usize]) -> PPoly {
    if cols.is_empty() {
        return PPoly::one();
    }
    let mut acc = PPoly::zero();
    for (idx, &c) in cols.iter().enumerate() {
        let entry = &m[row][c];
        if entry.is_zero() {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let minor = determinant(m, row + 1, &rest);
        let term = entry.times(&minor);
        acc = if idx % 2 == 0 { acc.plus(&term) } else { acc.minus(&term) };
    }
    acc
}

/// `p^{b(λ)} ∏_{□} (1 − p^{n + c_□})`, the numerator side of the hook-content formula.
pub fn content_side(lambda: &Partition, n: usize) -> PPoly {
    let mut acc = PPoly::var_pow(0, lambda.b_statistic() as i32);
    for c in lambda.contents() {
        let e = n as i64 + c;
        acc = acc.times(&PPoly::one().minus(&PPoly::var_pow(0, e as i32)));
    }
    acc
}

/// `∏_{□} (1 − p^{h_□})`.
pub fn hook_side(lambda: &Partition) -> PPoly {
    lambda.hooks().into_iter().fold(PPoly::one(), |acc, h| {
        acc.times(&PPoly::one().minus(&PPoly::var_pow(0, h as i32)))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qseries::ring::rational;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn poly(c: &[i64]) -> PPoly {
        c.iter().enumerate().fold(PPoly::zero(), |acc, (k, &x)| {
            acc.plus(&PPoly::monomial(vec![k as i32], rational(x, 1)))
        })
    }

    /// Semistandard fillings with entries `0..n`, weighted by `p^{Σ entries}`.
    fn ssyt_oracle(lambda: &Partition, n: usize) -> PPoly {
        let cells: Vec<(usize, usize)> = lambda.cells().collect();
        let mut filling = vec![0usize; cells.len()];
        let mut acc = PPoly::zero();
        fn go(
            idx: usize,
            cells: &[(usize, usize)],
            filling: &mut [usize],
            n: usize,
            acc: &mut PPoly,
        ) {
            if idx == cells.len() {
                let e: usize = filling.iter().sum();
                *acc = acc.plus(&PPoly::var_pow(0, e as i32));
                return;
            }
            let (i, j) = cells[idx];
            let left = if j > 1 {
                cells.iter().position(|&c| c == (i, j - 1)).map(|k| filling[k])
            } else {
                None
            };
            let above = if i > 1 {
                cells.iter().position(|&c| c == (i - 1, j)).map(|k| filling[k] + 1)
            } else {
                None
            };
            let lo = left.unwrap_or(0).max(above.unwrap_or(0));
            for v in lo..n {
                filling[idx] = v;
                go(idx + 1, cells, filling, n, acc);
            }
        }
        go(0, &cells, &mut filling, n, &mut acc);
        acc
    }

    #[test]
    fn small_cases() {
        assert_eq!(schur_principal(&p("1"), 2), poly(&[1, 1]));
        assert!(schur_principal(&p("1,1"), 1).is_zero());
        assert_eq!(schur_principal(&Partition::empty(), 3), PPoly::one());
    }

    #[test]
    fn jacobi_trudi_matches_tableaux() {
        for lam in crate::partitions::partitions_up_to(6) {
            for n in 1..=4 {
                assert_eq!(schur_principal(&lam, n), ssyt_oracle(&lam, n), "{lam} n={n}");
            }
        }
    }

    #[test]
    fn two_one_in_three_variables() {
        // p(1 − p⁴)(1 − p²)/(1 − p)² = p + 2p² + 2p³ + 2p⁴ + p⁵
        let lam = p("2,1");
        let s = schur_principal(&lam, 3);
        assert_eq!(s.times(&hook_side(&lam)), content_side(&lam, 3));
        assert_eq!(s, poly(&[0, 1, 2, 2, 2, 1]));
    }
}
