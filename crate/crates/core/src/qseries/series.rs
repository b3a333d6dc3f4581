//! Power series in `q` truncated modulo `q^{N+1}`.

use std::fmt;

use super::ring::{rational, Field, Rational, Ring};
use crate::error::Error;

/// Order used for series that are exact (polynomial constants such as `1`).
pub const EXACT_ORDER: usize = usize::MAX;

/// `c_0 + c_1 q + … + c_N q^N + O(q^{N+1})`.
///
/// Coefficients past the stored vector are zero. Binary operations truncate
/// to the smaller order of their operands.
#[derive(Clone, Debug)]
pub struct TruncatedSeries<C> {
    order: usize,
    coeffs: Vec<C>,
}

impl<C: Ring> TruncatedSeries<C> {
    pub fn new(order: usize, mut coeffs: Vec<C>) -> Self {
        if order != EXACT_ORDER {
            coeffs.truncate(order + 1);
        }
        TruncatedSeries { order, coeffs }
    }

    pub fn zero_to(order: usize) -> Self {
        Self::new(order, Vec::new())
    }

    pub fn constant(order: usize, c: C) -> Self {
        Self::new(order, vec![c])
    }

    pub fn one_to(order: usize) -> Self {
        Self::constant(order, C::one())
    }

    /// `c q^k`, or zero if `k > order`.
    pub fn monomial(order: usize, k: usize, c: C) -> Self {
        if k > order {
            return Self::zero_to(order);
        }
        let mut coeffs = vec![C::zero(); k + 1];
        coeffs[k] = c;
        Self::new(order, coeffs)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeff(&self, n: usize) -> C {
        self.coeffs.get(n).cloned().unwrap_or_else(C::zero)
    }

    /// Coefficients `c_0..c_N` (zero-padded) for a finite order.
    pub fn coefficients(&self) -> Vec<C> {
        let len = if self.order == EXACT_ORDER {
            self.coeffs.len()
        } else {
            self.order + 1
        };
        (0..len).map(|n| self.coeff(n)).collect()
    }

    pub fn with_order(&self, order: usize) -> Self {
        Self::new(order.min(self.order), self.coeffs.clone())
    }

    fn combined_order(&self, other: &Self) -> usize {
        self.order.min(other.order)
    }

    pub fn map<D: Ring>(&self, f: impl Fn(&C) -> D) -> TruncatedSeries<D> {
        TruncatedSeries::new(self.order, self.coeffs.iter().map(f).collect())
    }

    /// Coefficient-wise scalar multiple.
    pub fn scale(&self, c: &C) -> Self {
        self.map(|x| x.times(c))
    }

    /// `f(c q^k)`: sends `a_n q^n` to `a_n c^n q^{kn}`.
    pub fn substitute_power(&self, k: usize, c: &C) -> Self {
        assert!(k >= 1, "substitute_power: k must be positive");
        let order = self.order;
        let top = if order == EXACT_ORDER {
            self.coeffs.len().saturating_sub(1) * k
        } else {
            order
        };
        let mut coeffs = vec![C::zero(); top + 1];
        let mut power = C::one();
        for (n, a) in self.coeffs.iter().enumerate() {
            if n * k > top {
                break;
            }
            coeffs[n * k] = a.times(&power);
            power = power.times(c);
        }
        Self::new(order, coeffs)
    }

    /// Index of the first coefficient where the two series differ.
    pub fn first_mismatch(&self, other: &Self) -> Option<usize>
    where
        C: PartialEq,
    {
        let order = self.combined_order(other);
        let len = if order == EXACT_ORDER {
            self.coeffs.len().max(other.coeffs.len())
        } else {
            order + 1
        };
        (0..len).find(|&n| self.coeff(n) != other.coeff(n))
    }

    /// Largest coefficient deviation `|a_n − b_n|` up to the common order.
    pub fn max_deviation(&self, other: &Self) -> f64 {
        let order = self.combined_order(other);
        let len = if order == EXACT_ORDER {
            self.coeffs.len().max(other.coeffs.len())
        } else {
            order + 1
        };
        (0..len)
            .map(|n| self.coeff(n).minus(&other.coeff(n)).magnitude())
            .fold(0.0, f64::max)
    }

    /// `exp(f)` for `f` without constant term: `n g_n = Σ_{k≥1} k f_k g_{n−k}`.
    pub fn exp(&self) -> Result<Self, Error> {
        if !self.coeff(0).is_zero() {
            return Err(Error::BadConstantTerm { expected: "0" });
        }
        let order = self.finite_order();
        let mut g = vec![C::one()];
        for n in 1..=order {
            let mut acc = C::zero();
            for k in 1..=n {
                let fk = self.coeff(k);
                if fk.is_zero() {
                    continue;
                }
                acc = acc.plus(&fk.times(&g[n - k]).scaled(&rational(k as i64, 1)));
            }
            g.push(acc.scaled(&rational(1, n as i64)));
        }
        Ok(Self::new(self.order, g))
    }

    /// `log(f)` for `f` with constant term 1.
    pub fn log(&self) -> Result<Self, Error> {
        if self.coeff(0) != C::one() {
            return Err(Error::BadConstantTerm { expected: "1" });
        }
        let order = self.finite_order();
        let mut l = vec![C::zero()];
        for n in 1..=order {
            let mut acc = self.coeff(n).scaled(&rational(n as i64, 1));
            for k in 1..n {
                let f = self.coeff(n - k);
                if f.is_zero() {
                    continue;
                }
                acc = acc.minus(&l[k].times(&f).scaled(&rational(k as i64, 1)));
            }
            l.push(acc.scaled(&rational(1, n as i64)));
        }
        Ok(Self::new(self.order, l))
    }

    /// `f^e` for a natural exponent.
    pub fn pow(&self, e: u32) -> Self {
        Ring::pow(self, e)
    }

    fn finite_order(&self) -> usize {
        assert!(
            self.order != EXACT_ORDER,
            "operation needs a finite truncation order"
        );
        self.order
    }

    pub fn format_with(&self, fmt_coeff: impl Fn(&C) -> String) -> String {
        let mut pieces = Vec::new();
        for (n, c) in self.coefficients().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let s = fmt_coeff(c);
            let s = if s.contains(' ') {
                format!("({s})")
            } else {
                s
            };
            pieces.push(match n {
                0 => s,
                1 => format!("{s}*q"),
                _ => format!("{s}*q^{n}"),
            });
        }
        if pieces.is_empty() {
            pieces.push("0".into());
        }
        if self.order != EXACT_ORDER {
            pieces.push(format!("O(q^{})", self.order + 1));
        }
        pieces.join(" + ")
    }
}

impl<C: Field> TruncatedSeries<C> {
    /// Multiplicative inverse when the constant term is invertible.
    pub fn inverse(&self) -> Option<Self> {
        let inv0 = self.coeff(0).try_inverse()?;
        let order = self.finite_order();
        let mut g = vec![inv0.clone()];
        for n in 1..=order {
            let mut acc = C::zero();
            for k in 1..=n {
                let fk = self.coeff(k);
                if !fk.is_zero() {
                    acc = acc.plus(&fk.times(&g[n - k]));
                }
            }
            g.push(acc.times(&inv0).negated());
        }
        Some(Self::new(self.order, g))
    }
}

impl<C: Ring> PartialEq for TruncatedSeries<C> {
    /// Equality modulo `q^{N+1}` for the smaller of the two orders.
    fn eq(&self, other: &Self) -> bool {
        self.first_mismatch(other).is_none()
    }
}

impl<C: Ring> Ring for TruncatedSeries<C> {
    const EXACT: bool = C::EXACT;

    fn zero() -> Self {
        Self::zero_to(EXACT_ORDER)
    }

    fn one() -> Self {
        Self::one_to(EXACT_ORDER)
    }

    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(C::is_zero)
    }

    fn plus(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|n| self.coeff(n).plus(&other.coeff(n))).collect();
        Self::new(self.combined_order(other), coeffs)
    }

    fn minus(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|n| self.coeff(n).minus(&other.coeff(n))).collect();
        Self::new(self.combined_order(other), coeffs)
    }

    fn times(&self, other: &Self) -> Self {
        let order = self.combined_order(other);
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return Self::zero_to(order);
        }
        let full = self.coeffs.len() + other.coeffs.len() - 1;
        let len = if order == EXACT_ORDER { full } else { full.min(order + 1) };
        let mut coeffs = vec![C::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate() {
            if i >= len || a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if i + j >= len {
                    break;
                }
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] = coeffs[i + j].plus(&a.times(b));
            }
        }
        Self::new(order, coeffs)
    }

    fn negated(&self) -> Self {
        self.map(C::negated)
    }

    fn from_rational(r: &Rational) -> Self {
        Self::constant(EXACT_ORDER, C::from_rational(r))
    }

    fn magnitude(&self) -> f64 {
        self.coeffs.iter().map(C::magnitude).fold(0.0, f64::max)
    }
}

impl<C: Field> Field for TruncatedSeries<C> {
    fn try_inverse(&self) -> Option<Self> {
        if self.order == EXACT_ORDER && self.coeffs.len() > 1 {
            return None;
        }
        if self.order == EXACT_ORDER {
            return self.coeff(0).try_inverse().map(|c| Self::constant(EXACT_ORDER, c));
        }
        self.inverse()
    }
}

impl<C: Ring + fmt::Display> fmt::Display for TruncatedSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format_with(|c| c.to_string()))
    }
}

/// `Σ_{m=1}^{N} log(1 − q^m)`, the logarithm of Euler's product to order `N`.
pub fn log_euler_product<C: Ring>(order: usize) -> TruncatedSeries<C> {
    let mut coeffs = vec![C::zero(); order + 1];
    for m in 1..=order {
        for j in 1..=order / m {
            coeffs[m * j] = coeffs[m * j].minus(&C::from_rational(&rational(1, j as i64)));
        }
    }
    TruncatedSeries::new(order, coeffs)
}

/// `∏_{m ≥ 1} (1 − q^m)^{e} = exp(e · Σ_m log(1 − q^m))` for a ring-valued exponent.
pub fn eta_like_product<C: Ring>(exponent: &C, order: usize) -> TruncatedSeries<C> {
    log_euler_product::<C>(order)
        .scale(exponent)
        .exp()
        .expect("log of Euler's product has no constant term")
}

/// `∏ (1 − c q^k)^{power}` over the given `(k, c, power)` factors.
pub fn product_of_binomials<C: Ring>(
    order: usize,
    factors: impl IntoIterator<Item = (usize, C, u32)>,
) -> TruncatedSeries<C> {
    let mut acc = TruncatedSeries::one_to(order);
    for (k, c, power) in factors {
        if k > order {
            continue;
        }
        let factor = TruncatedSeries::one_to(order).minus(&TruncatedSeries::monomial(order, k, c));
        acc = acc.times(&factor.pow(power));
    }
    acc
}
