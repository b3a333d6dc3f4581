use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{complex_json, Check, VerificationReport};
use crate::error::Error;
use crate::partitions::{enumerate_t_cores, partitions_up_to, Partition};
use crate::qseries::ring::rational_to_f64;
use crate::qseries::{
    partition_sum_series, product_of_binomials, rational, restricted_sum_series, LaurentPoly, Rational, Ring,
    TruncatedSeries,
};

type C = Complex64;
type S = LaurentPoly<Complex64>;
type Q = LaurentPoly<Rational>;

const I: C = C::new(0.0, 1.0);

fn cf(x: f64) -> C {
    C::new(x, 0.0)
}

/// `sin(k z)` for `k = 0..=kmax`, refusing samples where one vanishes for `k ≥ 1`.
fn sines(z: C, kmax: usize) -> Result<Vec<C>, Error> {
    (0..=kmax)
        .map(|k| {
            let s = (z * k as f64).sin();
            if k > 0 && s.norm() < 1e-9 {
                Err(Error::SingularSample(format!("sin({k}z) = 0 at z = {z}")))
            } else {
                Ok(s)
            }
        })
        .collect()
}

/// Series with `log` coefficients given by `f(n)`, exponentiated.
fn exp_of(order: usize, f: impl Fn(usize) -> C) -> TruncatedSeries<C> {
    let mut log = vec![C::zero(); order + 1];
    for (n, slot) in log.iter_mut().enumerate().skip(1) {
        *slot = f(n);
    }
    TruncatedSeries::new(order, log).exp().expect("no constant term")
}

fn divisors(n: usize) -> impl Iterator<Item = usize> {
    (1..=n).filter(move |k| n % k == 0)
}

/// `Σ_λ q^{|λ|} ∏_{h ∈ H_r(λ)} (1 − sin²(tz)/sin²(hz))` against
/// `exp Σ_k (q^k/(k(1−q^k)) − r q^{rk}/(k(1−q^{rk})) · sin²(tkz)/sin²(rkz))`.
pub fn verify_sin_family(r: u64, t: C, z: C, order: usize) -> Result<VerificationReport, Error> {
    let mut c = Check::new("sin-family", "C", order, false)
        .param("r", r)
        .param("t", complex_json(t))
        .param("z", complex_json(z));
    let sin = sines(z, order.max(r as usize * order))?;
    let st2 = (t * z).sin().powi(2);
    let lhs = partition_sum_series(|h| C::one() - st2 / sin[h as usize].powi(2), r, order, None);
    let ru = r as usize;
    let rhs = exp_of(order, |n| {
        let mut acc = C::zero();
        for k in divisors(n) {
            acc += cf(1.0 / k as f64);
        }
        if n % ru == 0 {
            for k in divisors(n / ru) {
                let ratio = (t * z * k as f64).sin().powi(2) / sin[ru * k].powi(2);
                acc -= cf(r as f64 / k as f64) * ratio;
            }
        }
        acc
    });
    c.series_close("sum vs exp", &lhs, &rhs);
    Ok(c.finish())
}

/// The identity with `s = e^{2itz}` as a polynomial variable and `z` numeric,
/// compared in `ℂ[s]`, together with the `s = 0` (sine, cosine and sinh
/// forms) and `s = −1` (cosecant and cotangent forms) specializations.
///
/// With `at = Some(s0)` both sides are also evaluated at `s = s0`.
pub fn verify_poly_s_family(z: C, at: Option<C>, order: usize) -> Result<VerificationReport, Error> {
    let mut c = Check::new("poly-s-family", "C[s]", order, false).param("z", complex_json(z));
    if let Some(s0) = at {
        c = c.param("s", complex_json(s0));
    }
    let sin = sines(z, order)?;
    let inv4 = |k: usize| C::one() / (cf(4.0) * sin[k].powi(2));
    let s = S::var(0);
    let lhs = partition_sum_series(
        |h| {
            let sm1 = s.minus(&S::one());
            s.plus(&sm1.times(&sm1).times(&S::constant(inv4(h as usize))))
        },
        1,
        order,
        None,
    );
    let mut log = vec![S::zero(); order + 1];
    for (n, slot) in log.iter_mut().enumerate().skip(1) {
        for k in divisors(n) {
            let j = (n / k) as i32;
            let sk = S::var_pow(0, k as i32);
            let skm1 = sk.minus(&S::one());
            let body = sk.plus(&skm1.times(&skm1).times(&S::constant(inv4(k))));
            let term = S::var_pow(0, k as i32 * (j - 1))
                .times(&body)
                .times(&S::constant(cf(1.0 / k as f64)));
            *slot = slot.plus(&term);
        }
    }
    let rhs = TruncatedSeries::new(order, log).exp().expect("no constant term");
    c.series_close("s-polynomial", &lhs, &rhs);
    if let Some(s0) = at {
        let eval = |side: &TruncatedSeries<S>| {
            side.map(|p| p.evaluate(|x| *x, |_| s0).unwrap_or(C::new(f64::NAN, f64::NAN)))
        };
        c.series_close("at s", &eval(&lhs), &eval(&rhs));
    }
    for n in 0..=order {
        for (name, side) in [("lhs", &lhs), ("rhs", &rhs)] {
            let deg = side.coeff(n).max_degree(0).unwrap_or(0);
            c.ensure(deg <= 2 * n as i32, || format!("{name} q^{n} has degree {deg} in s"));
        }
    }

    let sum = |rho: &dyn Fn(usize) -> C| partition_sum_series(|h| rho(h as usize), 1, order, None);

    let s0 = sum(&|h| inv4(h));
    c.series_close("s=0", &s0, &exp_of(order, |n| inv4(n) / cf(n as f64)));

    let cos = |k: usize| (z * k as f64).cos();
    let cosine = sum(&|h| C::one() / (cf(2.0) - cf(2.0) * cos(h)));
    c.series_close(
        "cosine form",
        &cosine,
        &exp_of(order, |n| C::one() / (cf(2.0 * n as f64) * (C::one() - cos(n)))),
    );

    let sinh2 = |k: usize| (z * k as f64).sinh().powi(2);
    let sinh_form = sum(&|h| -C::one() / (cf(4.0) * sinh2(h)));
    c.series_close(
        "sinh form",
        &sinh_form,
        &exp_of(order, |n| -C::one() / (cf(4.0 * n as f64) * sinh2(n))),
    );

    let minus_one = sum(&|h| -C::one() + C::one() / sin[h].powi(2));
    c.series_close(
        "s=-1",
        &minus_one,
        &exp_of(order, |n| {
            divisors(n)
                .map(|k| {
                    let j = n / k;
                    let sk = if k % 2 == 0 { 1.0 } else { -1.0 };
                    let body = cf(sk) + cf(2.0 - 2.0 * sk) / (cf(4.0) * sin[k].powi(2));
                    cf(sk.powi(j as i32 - 1) / k as f64) * body
                })
                .sum()
        }),
    );

    let cot2 = |k: usize| (cos(k) / sin[k]).powi(2);
    let cot = sum(&|h| cot2(h));
    c.series_close(
        "cotangent form",
        &cot,
        &exp_of(order, |n| {
            divisors(n)
                .map(|m| {
                    let j = n / m;
                    if m % 2 == 1 {
                        let sign = if j % 2 == 1 { 1.0 } else { -1.0 };
                        cf(sign / m as f64) * cot2(m)
                    } else {
                        cf(1.0 / m as f64)
                    }
                })
                .sum()
        }),
    );
    c.series_close("cotangent vs s=-1", &cot, &minus_one);
    Ok(c.finish())
}

/// The sine family at `r = 1`, `t = 2` equals the Jacobi triple product sum
/// at `a = −e^{2iz}`, divided by `1 + 1/a`.
pub fn verify_jacobi_sin_consistency(z: C, order: usize) -> Result<VerificationReport, Error> {
    let mut c = Check::new("jacobi-sin-consistency", "C", order, false).param("z", complex_json(z));
    let sin = sines(z, order)?;
    let st2 = (z * 2.0).sin().powi(2);
    let sin_side = partition_sum_series(|h| C::one() - st2 / sin[h as usize].powi(2), 1, order, None);
    let a = -(I * z * 2.0).exp();
    let norm = C::one() + C::one() / a;
    let jacobi = super::exact::jacobi_sum(order);
    let eval = |p: &LaurentPoly<crate::qseries::Rational>| {
        p.evaluate(|q| cf(crate::qseries::ring::rational_to_f64(q)), |_| a)
            .expect("a is nonzero")
    };
    let evaluated = TruncatedSeries::new(order, (0..=order).map(|n| eval(&jacobi.coeff(n)) / norm).collect());
    c.series_close("sum side", &sin_side, &evaluated);
    let product = super::exact::jacobi_product(order);
    let evaluated_product =
        TruncatedSeries::new(order, (0..=order).map(|n| eval(&product.coeff(n)) / norm).collect());
    c.series_close("product side", &sin_side, &evaluated_product);
    Ok(c.finish())
}

/// For odd `t`, the sum over `t`-cores with `ρ(h) = 1 − sin²(tz)/sin²(hz)`
/// against the triple product form and the exponential form. The core
/// family is built from codings and, separately, by filtering all partitions.
pub fn verify_tcore_lemmas(t: u64, z: C, order: usize) -> Result<VerificationReport, Error> {
    assert!(t % 2 == 1 && t >= 3, "verify_tcore_lemmas needs an odd t >= 3");
    let mut c = Check::new("tcore-lemmas", "C", order, false)
        .param("t", t)
        .param("z", complex_json(z));
    let sin = sines(z, order)?;
    let st2 = (z * t as f64).sin().powi(2);
    let rho = |h: u64| C::one() - st2 / sin[h as usize].powi(2);
    let cores = enumerate_t_cores(t, order as u64);
    let filtered: Vec<Partition> = partitions_up_to(order as u64).filter(|p| p.is_t_core(t)).collect();
    c.ensure(cores == filtered, || format!("{} cores from codings, {} by filtering", cores.len(), filtered.len()));
    let lhs = restricted_sum_series(&cores, rho, order);
    let lhs_filtered = restricted_sum_series(&filtered, rho, order);
    c.ensure(lhs == lhs_filtered, || "restricted sums differ between the two families".to_string());

    // Both closed forms are exact in ℚ[u, 1/u] with u = e^{2iz}, evaluated at the end.
    let ti = t as i64;
    let u = (I * z * 2.0).exp();
    let mut factors = Vec::new();
    for m in 1..=order {
        factors.push((m, Q::one(), t as u32 - 1));
        for i in 1..ti {
            let d = (ti - i) as i32;
            factors.push((m, Q::var_pow(0, -d), i as u32));
            factors.push((m, Q::var_pow(0, d), i as u32));
        }
    }
    let at_u = |side: &TruncatedSeries<Q>| {
        side.map(|p| p.evaluate(|x| cf(rational_to_f64(x)), |_| u).expect("u is nonzero"))
    };
    let product = at_u(&product_of_binomials(order, factors));
    c.series_close("product form", &lhs, &product);
    // sin²(tkz)/sin²(kz) = u^{−(t−1)k} (Σ_{j<t} u^{jk})²
    let ratio = |k: usize| {
        let ks = k as i32;
        let mut dirichlet = Q::zero();
        for j in 0..ti as i32 {
            dirichlet = dirichlet.plus(&Q::var_pow(0, j * ks));
        }
        dirichlet.times(&dirichlet).times(&Q::var_pow(0, -(ti as i32 - 1) * ks))
    };
    let mut log = vec![Q::zero(); order + 1];
    for (n, slot) in log.iter_mut().enumerate().skip(1) {
        for k in divisors(n) {
            let term = Q::one().minus(&ratio(k)).scaled(&rational(1, k as i64));
            *slot = slot.plus(&term);
        }
    }
    let exp_form = at_u(&TruncatedSeries::new(order, log).exp().expect("no constant term"));
    c.series_close("exp form", &lhs, &exp_form);
    Ok(c.finish())
}

/// `sin(x−y) sin(x+y) = sin²x − sin²y` and, for `Σ u_i = 0`,
/// `∏_{i<j} sin(u_i − u_j) = ∏_{i<j} (e^{2iu_i} − e^{2iu_j})/(2i)` at random
/// complex points.
pub fn verify_sin_lemma(seed: u64, samples: usize) -> VerificationReport {
    let mut c = Check::new("sin-lemma", "C", 0, false)
        .param("seed", seed)
        .param("samples", samples);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut point = || C::new(rng.gen_range(-1.5..1.5), rng.gen_range(-0.8..0.8));
    let mut worst_a = 0.0f64;
    let mut worst_b = 0.0f64;
    for k in 0..samples {
        let (x, y) = (point(), point());
        let a = (x - y).sin() * (x + y).sin() - (x.sin().powi(2) - y.sin().powi(2));
        worst_a = worst_a.max(a.norm());
        let n = 2 + k % 5;
        let mut u: Vec<C> = (0..n - 1).map(|_| point()).collect();
        let total: C = u.iter().sum();
        u.push(-total);
        let mut lhs = C::one();
        let mut rhs = C::one();
        for i in 0..n {
            for j in i + 1..n {
                lhs *= (u[i] - u[j]).sin();
                rhs *= ((I * u[i] * 2.0).exp() - (I * u[j] * 2.0).exp()) / (I * 2.0);
            }
        }
        worst_b = worst_b.max((lhs - rhs).norm() / rhs.norm().max(1.0));
    }
    let one = |v: f64| TruncatedSeries::new(0, vec![cf(v)]);
    c.series_close("difference of squares", &one(worst_a), &one(0.0));
    c.series_close("Vandermonde product", &one(worst_b), &one(0.0));
    c.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z0() -> C {
        C::new(0.37, 0.11)
    }

    #[test]
    fn sin_family_small() {
        let t = C::new(std::f64::consts::SQRT_2, 0.0);
        for r in 1..=3 {
            let rep = verify_sin_family(r, t, z0(), 5).unwrap();
            assert!(rep.passed(), "{rep:?}");
        }
    }

    #[test]
    fn t_zero_gives_partition_counts() {
        let rep = verify_sin_family(1, C::zero(), z0(), 6).unwrap();
        assert!(rep.passed());
    }

    #[test]
    fn singular_sample_is_refused() {
        let z = C::new(std::f64::consts::PI / 2.0, 0.0);
        assert!(matches!(verify_sin_family(1, C::one(), z, 4), Err(Error::SingularSample(_))));
    }

    #[test]
    fn poly_s_small() {
        let rep = verify_poly_s_family(z0(), None, 4).unwrap();
        assert!(rep.passed(), "{rep:?}");
        assert_eq!(rep.details.len(), 7);
        let at = verify_poly_s_family(z0(), Some(C::new(0.3, -1.2)), 4).unwrap();
        assert!(at.passed() && at.details.contains_key("at s"));
    }

    #[test]
    fn jacobi_consistency_small() {
        assert!(verify_jacobi_sin_consistency(z0(), 6).unwrap().passed());
    }

    #[test]
    fn tcore_lemmas_small() {
        assert!(verify_tcore_lemmas(3, C::new(0.29, 0.07), 6).unwrap().passed());
    }

    #[test]
    fn sin_lemma_passes() {
        let rep = verify_sin_lemma(1, 10);
        assert!(rep.passed(), "{rep:?}");
    }

    #[test]
    fn wrong_sign_is_caught() {
        // flipping the sign of the sine ratio breaks the identity
        let t = C::new(1.3, 0.2);
        let z = z0();
        let sin = sines(z, 5).unwrap();
        let st2 = (t * z).sin().powi(2);
        let lhs = partition_sum_series(|h| C::one() + st2 / sin[h as usize].powi(2), 1, 5, None);
        let rhs = exp_of(5, |n| {
            divisors(n)
                .map(|k| cf(1.0 / k as f64) * (C::one() - (t * z * k as f64).sin().powi(2) / sin[k].powi(2)))
                .sum()
        });
        let mut c = Check::new("demo", "C", 5, false);
        c.series_close("x", &lhs, &rhs);
        assert!(!c.finish().passed());
    }
}
