use std::collections::BTreeSet;

use num::Signed;

use super::{Check, VerificationReport};
use crate::qseries::macdonald::{macdonald_lhs, macdonald_rhs, macdonald_terms};
use crate::qseries::{
    eta_like_product, partition_sum_series, product_of_binomials, rational, LaurentPoly, Rational, Ring,
    TruncatedSeries,
};

type Q = Rational;
type P = LaurentPoly<Rational>;

/// `ρ(h) = 1 − β/h²` with `β` the variable of index 0.
fn no_weight(h: u64) -> P {
    P::one().minus(&P::var(0).scaled(&rational(1, (h * h) as i64)))
}

/// `∏_{m≥1} 1/(1 − q^m)`, inverted over `ℚ` and embedded.
fn euler_inverse<R: Ring>(order: usize) -> TruncatedSeries<R> {
    product_of_binomials(order, (1..=order).map(|m| (m, Q::one(), 1)))
        .inverse()
        .expect("unit constant term")
        .map(R::from_rational)
}

/// `Σ_λ q^{|λ|} ∏ (1 − β/h²) = ∏ (1 − q^m)^{β−1}` in `ℚ[β]`.
pub fn verify_nekrasov_okounkov(order: usize) -> VerificationReport {
    let mut c = Check::new("nekrasov-okounkov", "Q[beta]", order, true);
    let lhs = partition_sum_series(no_weight, 1, order, None);
    let rhs = eta_like_product(&P::var(0).minus(&P::one()), order);
    c.series_equal("beta", &lhs, &rhs);
    if order >= 1 {
        let expected = P::one().minus(&P::var(0));
        c.ensure(lhs.coeff(1) == expected && rhs.coeff(1) == expected, || {
            format!("q^1: {} and {} should both be 1 - beta", lhs.coeff(1), rhs.coeff(1))
        });
    }
    let zero = |s: &TruncatedSeries<P>| s.map(|p| p.specialize(0, &Q::zero()).expect("polynomial in beta"));
    let euler: TruncatedSeries<P> = euler_inverse(order);
    c.series_equal("beta=0", &zero(&lhs), &euler);
    c.series_equal("beta=0 product", &zero(&rhs), &euler);
    c.finish()
}

/// `Σ_λ q^{|λ|} = exp Σ q^k/(k(1 − q^k)) = ∏ 1/(1 − q^m)` over `ℚ`.
pub fn verify_partition_generating_function(order: usize) -> VerificationReport {
    let mut c = Check::new("partition-generating-function", "Q", order, true);
    let lhs = partition_sum_series(|_| Q::one(), 1, order, None);
    let mut log = vec![Q::zero(); order + 1];
    for k in 1..=order {
        for j in 1..=order / k {
            log[k * j] += rational(1, k as i64);
        }
    }
    let exp_form = TruncatedSeries::new(order, log).exp().expect("no constant term");
    let product: TruncatedSeries<Q> = euler_inverse(order);
    c.series_equal("exp form", &lhs, &exp_form);
    c.series_equal("product form", &lhs, &product);
    c.detail(
        "coefficients",
        lhs.coefficients().iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","),
    );
    c.finish()
}

/// `∏_{n≥0} (1 + a x^{n+1})(1 + x^n/a)(1 − x^{n+1}) = Σ_n a^n x^{n(n+1)/2}` in `ℚ[a, 1/a]`.
pub fn verify_jacobi(order: usize) -> VerificationReport {
    let mut c = Check::new("jacobi", "Q[a,1/a]", order, true);
    let lhs = jacobi_product(order);
    let rhs = jacobi_sum(order);
    c.series_equal("a", &lhs, &rhs);
    let at_minus_one = |s: &TruncatedSeries<P>| s.map(|p| p.specialize(0, &Q::from_int(-1)).expect("nonzero value"));
    let zero = TruncatedSeries::<P>::zero_to(order);
    c.series_equal("a=-1 product", &at_minus_one(&lhs), &zero);
    c.series_equal("a=-1 sum", &at_minus_one(&rhs), &zero);
    c.finish()
}

pub(crate) fn jacobi_product(order: usize) -> TruncatedSeries<P> {
    let one = TruncatedSeries::<P>::one_to(order);
    let a = P::var(0);
    let inv = P::var_pow(0, -1);
    let mut acc = one.clone();
    for n in 0..=order {
        acc = acc
            .times(&one.plus(&TruncatedSeries::monomial(order, n + 1, a.clone())))
            .times(&one.plus(&TruncatedSeries::monomial(order, n, inv.clone())))
            .times(&one.minus(&TruncatedSeries::monomial(order, n + 1, P::one())));
    }
    acc
}

pub(crate) fn jacobi_sum(order: usize) -> TruncatedSeries<P> {
    let mut coeffs = vec![P::zero(); order + 1];
    let bound = order as i64 + 1;
    for n in -bound - 1..=bound {
        let e = n * (n + 1) / 2;
        if e <= order as i64 {
            coeffs[e as usize] = coeffs[e as usize].plus(&P::var_pow(0, n as i32));
        }
    }
    TruncatedSeries::new(order, coeffs)
}

/// The type `A_t` Macdonald identity, with every enumerated `a` checked for
/// the sign rule and the integrality of `Ω(a)`.
pub fn verify_macdonald(t: u64, order: usize) -> VerificationReport {
    let mut c = Check::new("macdonald", "Q[x1..xt,1/x1..1/xt]", order, true).param("t", t);
    let terms = macdonald_terms(t, order);
    let target = (t * (t + 1) / 2) as i64;
    for term in &terms {
        let residues: BTreeSet<i64> = term.a.iter().map(|x| x.rem_euclid(t as i64)).collect();
        let distinct = residues.len() == t as usize;
        c.ensure(term.a.iter().sum::<i64>() == target, || format!("{:?} has the wrong sum", term.a));
        c.ensure(distinct == (term.epsilon != 0), || {
            format!("{:?}: epsilon {} disagrees with residue distinctness", term.a, term.epsilon)
        });
        if term.epsilon != 0 {
            c.ensure(term.omega.is_integer() && !term.omega.is_negative(), || {
                format!("{:?}: Omega = {} is not a nonnegative integer", term.a, term.omega)
            });
        }
    }
    c.detail("vectors", terms.len().to_string());
    c.detail("nonzero", terms.iter().filter(|x| x.epsilon != 0).count().to_string());
    if c.mismatch.is_none() {
        let lhs = macdonald_lhs(t, order);
        let rhs = macdonald_rhs(t, order);
        c.series_equal("x", &lhs, &rhs);
    }
    c.finish()
}

/// `Σ_λ q^{|λ|} x^{#H_r(λ)} ∏_{h ∈ H_r(λ)} ρ(h) = f_r(x q^r)^r ∏ (1 − q^{rk})^r / (1 − q^k)`
/// with `ρ(h) = 1 − β/h²` and `f_r(y) = Σ_λ y^{|λ|} ∏ ρ(r h)` expanded as a
/// partition sum. Variables: `β` is 0, `x` is 1.
pub fn verify_multiplication(r: u64, order: usize) -> VerificationReport {
    let mut c = Check::new("multiplication", "Q[beta,x]", order, true).param("r", r);
    let x = P::var(1);
    let lhs = partition_sum_series(no_weight, r, order, Some(&x));
    let inner = order / r as usize;
    let f_r = partition_sum_series(|h| no_weight(r * h), 1, inner, None);
    let substituted = TruncatedSeries::new(order, f_r.coefficients()).substitute_power(r as usize, &x);
    let numerator = product_of_binomials(
        order,
        (1..=order / r as usize).map(|k| (k * r as usize, P::one(), r as u32)),
    );
    let euler: TruncatedSeries<P> = euler_inverse(order);
    let rhs = substituted.pow(r as u32).times(&numerator).times(&euler);
    c.series_equal("beta,x", &lhs, &rhs);
    if r == 1 {
        let at_one = |s: &TruncatedSeries<P>| s.map(|p| p.specialize(1, &Q::one()).expect("polynomial in x"));
        let no = eta_like_product(&P::var(0).minus(&P::one()), order);
        c.series_equal("x=1 against the eta product", &at_one(&lhs), &no);
    }
    c.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_orders() {
        assert!(verify_nekrasov_okounkov(1).passed());
        assert!(verify_partition_generating_function(6).passed());
        assert!(verify_jacobi(4).passed());
        assert!(verify_macdonald(2, 2).passed());
        assert!(verify_multiplication(1, 5).passed());
        assert!(verify_multiplication(2, 6).passed());
    }

    #[test]
    fn jacobi_constant_term() {
        let p = jacobi_product(3);
        assert_eq!(p.coeff(0), P::one().plus(&P::var_pow(0, -1)));
        assert_eq!(jacobi_sum(3).coeff(0), p.coeff(0));
    }

    #[test]
    fn broken_identity_is_reported() {
        let mut c = Check::new("demo", "Q[beta]", 3, true);
        let lhs = partition_sum_series(no_weight, 1, 3, None);
        let rhs = eta_like_product(&P::var(0), 3);
        c.series_equal("beta", &lhs, &rhs);
        let r = c.finish();
        assert!(!r.passed());
        assert!(r.mismatch.unwrap().contains("q^1"));
    }
}
