//! Truncated power series over pluggable coefficient rings, partition-sum
//! builders, and the multivariate layers used by the Macdonald, Jacobi and
//! hook-content identities.

pub mod laurent;
pub mod macdonald;
pub mod ring;
pub mod schur;
pub mod series;

pub use laurent::LaurentPoly;
pub use ring::{rational, Field, Rational, Ring};
pub use series::{eta_like_product, log_euler_product, product_of_binomials, TruncatedSeries};

use crate::partitions::{enumerate_partitions, Partition};

/// `Σ_{|λ| ≤ N} q^{|λ|} ∏_{h ∈ H_r(λ)} ρ(h)`, optionally with a marker `x^{#H_r(λ)}`.
pub fn partition_sum_series<C: Ring>(
    rho: impl Fn(u64) -> C,
    r: u64,
    order: usize,
    marker: Option<&C>,
) -> TruncatedSeries<C> {
    assert!(r >= 1, "partition_sum_series: r must be positive");
    let weights: Vec<C> = (0..=order as u64)
        .map(|h| {
            let w = if h == 0 { C::one() } else { rho(h) };
            match marker {
                Some(x) => w.times(x),
                None => w,
            }
        })
        .collect();
    let coeffs = (0..=order as u64)
        .map(|n| {
            enumerate_partitions(n)
                .iter()
                .map(|lam| hook_product(lam, r, &weights))
                .fold(C::zero(), |acc, w| acc.plus(&w))
        })
        .collect();
    TruncatedSeries::new(order, coeffs)
}

/// `Σ_{λ ∈ set} q^{|λ|} ∏_{h ∈ H(λ)} ρ(h)` over an explicit family of partitions.
pub fn restricted_sum_series<'a, C: Ring>(
    family: impl IntoIterator<Item = &'a Partition>,
    rho: impl Fn(u64) -> C,
    order: usize,
) -> TruncatedSeries<C> {
    let weights: Vec<C> = (0..=order as u64)
        .map(|h| if h == 0 { C::one() } else { rho(h) })
        .collect();
    let mut coeffs = vec![C::zero(); order + 1];
    for lam in family {
        let n = lam.size() as usize;
        if n > order {
            continue;
        }
        coeffs[n] = coeffs[n].plus(&hook_product(lam, 1, &weights));
    }
    TruncatedSeries::new(order, coeffs)
}

fn hook_product<C: Ring>(lam: &Partition, r: u64, weights: &[C]) -> C {
    lam.hooks()
        .into_iter()
        .filter(|h| h % r == 0)
        .fold(C::one(), |acc, h| acc.times(&weights[h as usize]))
}
