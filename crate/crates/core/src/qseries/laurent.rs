//! Sparse multivariate Laurent polynomials.
//!
//! Exponent vectors are stored with trailing zeros stripped, so the number
//! of variables never has to be declared: `x_3` is `[0, 0, 1]` and the
//! constant monomial is `[]`.

use std::collections::BTreeMap;
use std::fmt;

use super::ring::{Field, Rational, Ring};

#[derive(Clone, Debug, PartialEq)]
pub struct LaurentPoly<C> {
    terms: BTreeMap<Vec<i32>, C>,
}

fn trim(mut e: Vec<i32>) -> Vec<i32> {
    while e.last() == Some(&0) {
        e.pop();
    }
    e
}

impl<C: Ring> LaurentPoly<C> {
    pub fn constant(c: C) -> Self {
        Self::monomial(Vec::new(), c)
    }

    pub fn monomial(exponents: Vec<i32>, c: C) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(trim(exponents), c);
        }
        LaurentPoly { terms }
    }

    /// The variable with index `var` raised to `power`.
    pub fn var_pow(var: usize, power: i32) -> Self {
        let mut e = vec![0; var + 1];
        e[var] = power;
        Self::monomial(e, C::one())
    }

    pub fn var(var: usize) -> Self {
        Self::var_pow(var, 1)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[i32], &C)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, exponents: &[i32]) -> C {
        self.terms
            .get(&trim(exponents.to_vec()))
            .cloned()
            .unwrap_or_else(C::zero)
    }

    /// Constant term.
    pub fn constant_term(&self) -> C {
        self.coefficient(&[])
    }

    /// Largest exponent of `var` present, if the polynomial is nonzero.
    pub fn max_degree(&self, var: usize) -> Option<i32> {
        self.terms
            .keys()
            .map(|e| e.get(var).copied().unwrap_or(0))
            .max()
    }

    pub fn min_degree(&self, var: usize) -> Option<i32> {
        self.terms
            .keys()
            .map(|e| e.get(var).copied().unwrap_or(0))
            .min()
    }

    fn insert_add(&mut self, e: Vec<i32>, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(existing) => {
                let sum = existing.plus(&c);
                if sum.is_zero() {
                    self.terms.remove(&e);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    /// Substitutes `value(var)` for every variable; negative powers invert.
    pub fn evaluate<F: Field>(&self, embed: impl Fn(&C) -> F, value: impl Fn(usize) -> F) -> Option<F> {
        let mut acc = F::zero();
        for (e, c) in &self.terms {
            let mut term = embed(c);
            for (var, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let v = value(var);
                let p = if k > 0 {
                    v.pow(k as u32)
                } else {
                    v.try_inverse()?.pow((-k) as u32)
                };
                term = term.times(&p);
            }
            acc = acc.plus(&term);
        }
        Some(acc)
    }

    /// Substitutes a constant for one variable, keeping the others symbolic.
    pub fn specialize(&self, var: usize, value: &C) -> Option<Self>
    where
        C: Field,
    {
        let inv = value.try_inverse();
        let mut out = LaurentPoly::zero();
        for (e, c) in &self.terms {
            let k = e.get(var).copied().unwrap_or(0);
            let factor = if k >= 0 {
                value.pow(k as u32)
            } else {
                inv.as_ref()?.pow((-k) as u32)
            };
            let mut e2 = e.clone();
            if var < e2.len() {
                e2[var] = 0;
            }
            out.insert_add(trim(e2), c.times(&factor));
        }
        Some(out)
    }

    pub fn map_coefficients<D: Ring>(&self, f: impl Fn(&C) -> D) -> LaurentPoly<D> {
        let mut out = LaurentPoly::zero();
        for (e, c) in &self.terms {
            out.insert_add(e.clone(), f(c));
        }
        out
    }

    /// Renders with the given variable names; missing names become `x{i}`.
    pub fn to_string_with(&self, names: &[&str], fmt_coeff: impl Fn(&C) -> String) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut pieces = Vec::new();
        for (e, c) in &self.terms {
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k != 0)
                .map(|(i, &k)| {
                    let name = names
                        .get(i)
                        .map(|s| s.to_string())
                        .unwrap_or_else(|| format!("x{}", i + 1));
                    if k == 1 {
                        name
                    } else {
                        format!("{name}^{k}")
                    }
                })
                .collect();
            let coeff = fmt_coeff(c);
            if mono.is_empty() {
                pieces.push(coeff);
            } else if coeff == "1" {
                pieces.push(mono.join("*"));
            } else {
                pieces.push(format!("({coeff})*{}", mono.join("*")));
            }
        }
        pieces.join(" + ")
    }
}

impl<C: Ring> Ring for LaurentPoly<C> {
    const EXACT: bool = C::EXACT;

    fn zero() -> Self {
        LaurentPoly {
            terms: BTreeMap::new(),
        }
    }

    fn one() -> Self {
        Self::constant(C::one())
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn plus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.insert_add(e.clone(), c.clone());
        }
        out
    }

    fn minus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.insert_add(e.clone(), c.negated());
        }
        out
    }

    fn times(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let n = e1.len().max(e2.len());
                let e: Vec<i32> = (0..n)
                    .map(|i| e1.get(i).copied().unwrap_or(0) + e2.get(i).copied().unwrap_or(0))
                    .collect();
                out.insert_add(trim(e), c1.times(c2));
            }
        }
        out
    }

    fn negated(&self) -> Self {
        self.map_coefficients(C::negated)
    }

    fn from_rational(r: &Rational) -> Self {
        Self::constant(C::from_rational(r))
    }

    fn magnitude(&self) -> f64 {
        self.terms.values().map(C::magnitude).fold(0.0, f64::max)
    }

    fn scaled(&self, r: &Rational) -> Self {
        self.map_coefficients(|c| c.scaled(r))
    }
}

impl<C: Ring + fmt::Display> fmt::Display for LaurentPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_with(&[], |c| c.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qseries::ring::rational;

    type P = LaurentPoly<Rational>;

    #[test]
    fn laurent_inverse_pair() {
        let x = P::var(0);
        let xinv = P::var_pow(0, -1);
        assert_eq!(x.times(&xinv), P::one());
    }

    #[test]
    fn cancellation_removes_terms() {
        let a = P::var(1).plus(&P::one());
        let b = a.minus(&P::var(1));
        assert_eq!(b, P::one());
        assert_eq!(b.num_terms(), 1);
    }

    #[test]
    fn binomial_square() {
        let a = P::var(0).plus(&P::var_pow(0, -1));
        let sq = a.times(&a);
        assert_eq!(sq.coefficient(&[2]), rational(1, 1));
        assert_eq!(sq.coefficient(&[0]), rational(2, 1));
        assert_eq!(sq.coefficient(&[-2]), rational(1, 1));
        assert_eq!(sq.max_degree(0), Some(2));
        assert_eq!(sq.min_degree(0), Some(-2));
    }

    #[test]
    fn evaluation_and_specialization() {
        let p = P::var(0).plus(&P::var_pow(1, -1).scaled(&rational(3, 1)));
        let v = p.evaluate(|c| c.clone(), |i| if i == 0 { rational(2, 1) } else { rational(3, 1) });
        assert_eq!(v, Some(rational(3, 1)));
        let s = p.specialize(1, &rational(3, 1)).unwrap();
        assert_eq!(s, P::var(0).plus(&P::one()));
        assert_eq!(P::var_pow(0, -1).specialize(0, &rational(0, 1)), None);
    }

    #[test]
    fn rendering() {
        let p = P::var(0).plus(&P::constant(rational(-1, 2)));
        assert_eq!(p.to_string_with(&["a"], |c| c.to_string()), "-1/2 + a");
    }
}
