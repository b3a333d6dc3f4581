//! The type `A_t` Macdonald identity as a power series in `q` with Laurent
//! polynomial coefficients in `x_1, …, x_t` (variable indices `0..t`).

use std::collections::BTreeSet;

use num::{BigInt, Signed};
use serde::Serialize;

use super::laurent::LaurentPoly;
use super::ring::{Rational, Ring};
use super::series::{TruncatedSeries, EXACT_ORDER};

/// One vector `a ∈ M_t` with its sign `ε(a)` and exponent `Ω(a)`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MacdonaldTerm {
    pub a: Vec<i64>,
    pub epsilon: i8,
    #[serde(serialize_with = "crate::identities::ser_display")]
    pub omega: Rational,
}

/// `ε(a)`: the sign of the permutation `i ↦ res_t a_i` of `(res_t 1, …, res_t t)`,
/// or `0` when two residues coincide.
pub fn epsilon(a: &[i64], t: u64) -> i8 {
    let t = t as i64;
    // position j (0-based) holds value res(a_j); target is the permutation σ with a_j ≡ σ(j)
    let perm: Vec<usize> = a
        .iter()
        .map(|&x| {
            let r = x.rem_euclid(t);
            // residue r corresponds to the integer in 1..=t congruent to it
            if r == 0 { t as usize - 1 } else { r as usize - 1 }
        })
        .collect();
    let distinct: BTreeSet<usize> = perm.iter().copied().collect();
    if distinct.len() != perm.len() {
        return 0;
    }
    permutation_sign(&perm)
}

fn permutation_sign(perm: &[usize]) -> i8 {
    let mut seen = vec![false; perm.len()];
    let mut sign = 1i8;
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut j = start;
        while !seen[j] {
            seen[j] = true;
            j = perm[j];
            len += 1;
        }
        if len % 2 == 0 {
            sign = -sign;
        }
    }
    sign
}

/// `Ω(a) = (a_1² + ⋯ + a_t² − 1² − ⋯ − t²)/(2t)`.
pub fn omega(a: &[i64]) -> Rational {
    let t = a.len() as i64;
    let sq: i64 = a.iter().map(|x| x * x).sum::<i64>() - (1..=t).map(|i| i * i).sum::<i64>();
    Rational::new(BigInt::from(sq), BigInt::from(2 * t))
}

/// Every `a ∈ M_t` with `Ω(a) ≤ order`, in lexicographic order.
pub fn macdonald_terms(t: u64, order: usize) -> Vec<MacdonaldTerm> {
    assert!(t >= 2, "the Macdonald identity needs t >= 2");
    let ti = t as i64;
    let target: i64 = ti * (ti + 1) / 2;
    let bound = 2 * ti * order as i64 + (1..=ti).map(|i| i * i).sum::<i64>();
    let amax = (bound as f64).sqrt().floor() as i64 + 1;
    let mut out = Vec::new();
    let mut a = Vec::with_capacity(t as usize);
    collect(ti, target, bound, amax, &mut a, &mut out);
    out
}

fn collect(t: i64, target: i64, bound: i64, amax: i64, a: &mut Vec<i64>, out: &mut Vec<MacdonaldTerm>) {
    let partial: i64 = a.iter().map(|x| x * x).sum();
    if a.len() as i64 == t - 1 {
        let last = target - a.iter().sum::<i64>();
        if partial + last * last <= bound {
            a.push(last);
            out.push(MacdonaldTerm {
                epsilon: epsilon(a, t as u64),
                omega: omega(a),
                a: a.clone(),
            });
            a.pop();
        }
        return;
    }
    for x in -amax..=amax {
        if partial + x * x > bound {
            continue;
        }
        a.push(x);
        collect(t, target, bound, amax, a, out);
        a.pop();
    }
}

/// `Σ_{a ∈ M_t, Ω(a) ≤ N} ε(a) q^{Ω(a)} x_1^{1−a_1} ⋯ x_t^{t−a_t}`.
///
/// Panics if a term with `ε(a) ≠ 0` has a non-integral or negative `Ω(a)`.
pub fn macdonald_rhs(t: u64, order: usize) -> TruncatedSeries<LaurentPoly<Rational>> {
    let mut coeffs = vec![LaurentPoly::zero(); order + 1];
    for term in macdonald_terms(t, order) {
        if term.epsilon == 0 {
            continue;
        }
        assert!(
            term.omega.is_integer() && !term.omega.is_negative(),
            "Ω({:?}) = {} is not a nonnegative integer",
            term.a,
            term.omega
        );
        let n: usize = term.omega.to_integer().try_into().expect("small exponent");
        if n > order {
            continue;
        }
        let exps: Vec<i32> = term
            .a
            .iter()
            .enumerate()
            .map(|(i, &ai)| (i as i64 + 1 - ai) as i32)
            .collect();
        let mono = LaurentPoly::monomial(exps, Rational::from_int(term.epsilon as i64));
        coeffs[n] = coeffs[n].plus(&mono);
    }
    TruncatedSeries::new(order, coeffs)
}

/// `∏_{m≥1} ((1−q^m)^{t−1} ∏_{j<i} (1 − (x_i/x_j) q^{m−1})(1 − (x_j/x_i) q^m))`.
pub fn macdonald_lhs(t: u64, order: usize) -> TruncatedSeries<LaurentPoly<Rational>> {
    assert!(t >= 2, "the Macdonald identity needs t >= 2");
    type P = LaurentPoly<Rational>;
    let ratio = |num: usize, den: usize| P::var(num).times(&P::var_pow(den, -1));
    let factor = |k: usize, c: P| {
        TruncatedSeries::one_to(order).minus(&TruncatedSeries::monomial(order, k, c))
    };
    let mut acc = TruncatedSeries::<P>::one_to(order);
    for m in 1..=order + 1 {
        if m <= order {
            acc = acc.times(&factor(m, P::one()).pow(t as u32 - 1));
        }
        for i in 0..t as usize {
            for j in 0..i {
                acc = acc.times(&factor(m - 1, ratio(i, j)));
                if m <= order {
                    acc = acc.times(&factor(m, ratio(j, i)));
                }
            }
        }
    }
    debug_assert_ne!(acc.order(), EXACT_ORDER);
    acc
}
