//! Formal products `± ∏_k τ(k)^{e_k}` over an unspecified weight function
//! `τ: ℤ → F`.
//!
//! Two formal products are equal as ledgers exactly when they agree for
//! every choice of `τ`, so comparing exponent maps checks the multiset hook
//! length formulas for all weight functions at once. [`evaluate`] maps a
//! ledger into a concrete field when a numeric check is wanted.

use std::collections::BTreeMap;
use std::fmt;

use num_complex::Complex64;
use serde::Serialize;

use crate::coding::{v_coding, HalfInt, VtCoding};
use crate::error::Error;
use crate::partitions::Partition;
use crate::qseries::{rational, Field, Rational, Ring, TruncatedSeries};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeightLedger {
    exps: BTreeMap<i64, i64>,
    sign: i8,
}

impl Default for WeightLedger {
    fn default() -> Self {
        Self::one()
    }
}

impl WeightLedger {
    pub fn one() -> Self {
        WeightLedger {
            exps: BTreeMap::new(),
            sign: 1,
        }
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (i64, i64)>) -> Self {
        let mut l = Self::one();
        for (k, e) in pairs {
            l.bump(k, e);
        }
        l
    }

    /// Multiplies by `τ(k)^e`.
    pub fn bump(&mut self, k: i64, e: i64) {
        if e == 0 {
            return;
        }
        let entry = self.exps.entry(k).or_insert(0);
        *entry += e;
        if *entry == 0 {
            self.exps.remove(&k);
        }
    }

    pub fn exponent(&self, k: i64) -> i64 {
        self.exps.get(&k).copied().unwrap_or(0)
    }

    pub fn exponents(&self) -> &BTreeMap<i64, i64> {
        &self.exps
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }

    pub fn with_sign(mut self, sign: i8) -> Self {
        self.sign = sign;
        self
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty() && self.sign == 1
    }

    pub fn times(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&k, &e) in &other.exps {
            out.bump(k, e);
        }
        out.sign *= other.sign;
        out
    }

    pub fn inverse(&self) -> Self {
        WeightLedger {
            exps: self.exps.iter().map(|(&k, &e)| (k, -e)).collect(),
            sign: self.sign,
        }
    }

    pub fn divide(&self, other: &Self) -> Self {
        self.times(&other.inverse())
    }

    /// Replaces each argument `k` by `−k`, as folding the tableau does to entries.
    pub fn negate_arguments(&self) -> Self {
        WeightLedger {
            exps: self.exps.iter().map(|(&k, &e)| (-k, e)).collect(),
            sign: self.sign,
        }
    }

    /// `Σ e_k`, the degree of the formal product.
    pub fn total_degree(&self) -> i64 {
        self.exps.values().sum()
    }

    /// `Σ e_k k²`: the `z`-coefficient of the product under `τ(k) = 1 + zk²`.
    pub fn second_moment(&self) -> i64 {
        self.exps.iter().map(|(&k, &e)| e * k * k).sum()
    }
}

impl fmt::Display for WeightLedger {
    /// `+ (k, e_k) (k, e_k) …`, sorted by argument.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(if self.sign < 0 { "-" } else { "+" })?;
        for (k, e) in &self.exps {
            write!(f, " ({k}, {e})")?;
        }
        Ok(())
    }
}

/// Symmetry class of a weight function.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    /// `τ(−k) = −τ(k)`
    Odd,
    /// `τ(−k) = τ(k)`
    Even,
}

/// `∏_{h ∈ H(λ)} τ(h−t) τ(h+t) / τ(h)²`.
pub fn lhs_ledger(lambda: &Partition, t: u64) -> WeightLedger {
    let t = t as i64;
    let mut l = WeightLedger::one();
    for h in lambda.hooks() {
        let h = h as i64;
        l.bump(h - t, 1);
        l.bump(h + t, 1);
        l.bump(h, -2);
    }
    l
}

fn integral(x: HalfInt) -> i64 {
    x.to_int().expect("differences of a coding are integers")
}

/// `∏_{i=1}^{t−1} τ(−i)^{β_i} / τ(i)^{β_i + t − i} · ∏_{i<j} τ(v_i − v_j)`.
pub fn rhs_ledger_main(coding: &VtCoding, beta: &[u64], t: u64) -> WeightLedger {
    let ti = t as i64;
    let mut l = WeightLedger::one();
    for i in 1..ti {
        let b = beta[i as usize - 1] as i64;
        l.bump(-i, b);
        l.bump(i, -(b + ti - i));
    }
    let v = coding.values();
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            l.bump(integral(v[i] - v[j]), 1);
        }
    }
    l
}

/// The constant `C` of the odd/even simplification: `−1` exactly when
/// `t ≡ 3 (mod 4)` and `τ` is odd.
pub fn parity_sign(t: u64, parity: Parity) -> i8 {
    if parity == Parity::Odd && t % 4 == 3 {
        -1
    } else {
        1
    }
}

/// `C / ∏_{k=1}^{t−1} τ(k)^{t−k} · ∏_{i<j} τ(u_i − u_j)` with `u` the coding
/// sorted by congruence class, parity-normalized.
pub fn rhs_ledger_evenodd(coding: &VtCoding, t: u64, parity: Parity) -> Result<WeightLedger, Error> {
    let ti = t as i64;
    let mut l = WeightLedger::one().with_sign(parity_sign(t, parity));
    for k in 1..ti {
        l.bump(k, -(ti - k));
    }
    let u = coding.by_class(t);
    for i in 0..u.len() {
        for j in i + 1..u.len() {
            l.bump(integral(u[i] - u[j]), 1);
        }
    }
    parity_normalize(&l, parity)
}

/// `∏_{i=1}^{t−1} (τ(−i)/τ(i))^{β_i} · ∏_{□ ∈ μ} τ(t + c_□) / τ(h_□)`.
pub fn content_rhs_ledger(lambda: &Partition, mu: &Partition, t: u64) -> WeightLedger {
    let ti = t as i64;
    let beta = lambda.beta_counts(t);
    let mut l = WeightLedger::one();
    for i in 1..ti {
        let b = beta[i as usize - 1] as i64;
        l.bump(-i, b);
        l.bump(i, -b);
    }
    for c in mu.contents() {
        l.bump(ti + c, 1);
    }
    for h in mu.hooks() {
        l.bump(h as i64, -1);
    }
    l
}

/// Rewrites every `τ(−k)` as `±τ(k)` so all arguments are positive.
pub fn parity_normalize(ledger: &WeightLedger, parity: Parity) -> Result<WeightLedger, Error> {
    let zero = ledger.exponent(0);
    if parity == Parity::Odd && zero != 0 {
        return Err(Error::ZeroArgument(zero));
    }
    let mut out = WeightLedger::one().with_sign(ledger.sign);
    let mut flips = 0i64;
    for (&k, &e) in &ledger.exps {
        if k < 0 {
            out.bump(-k, e);
            flips += e;
        } else {
            out.bump(k, e);
        }
    }
    if parity == Parity::Odd && flips.rem_euclid(2) == 1 {
        out.sign = -out.sign;
    }
    Ok(out)
}

/// A concrete weight function `τ: ℤ → F`.
pub trait WeightAssignment {
    type Value: Field;
    fn weight(&self, k: i64) -> Self::Value;
}

/// `τ(x) = x` over the rationals.
pub struct IdentityWeight;

impl WeightAssignment for IdentityWeight {
    type Value = Rational;
    fn weight(&self, k: i64) -> Rational {
        rational(k, 1)
    }
}

/// `τ(x) = x²` over the rationals.
pub struct SquareWeight;

impl WeightAssignment for SquareWeight {
    type Value = Rational;
    fn weight(&self, k: i64) -> Rational {
        rational(k * k, 1)
    }
}

/// `τ(x) = 1 + z x²` as a power series in the formal parameter `z`.
pub struct ShiftedSquareWeight {
    pub order: usize,
}

impl WeightAssignment for ShiftedSquareWeight {
    type Value = TruncatedSeries<Rational>;
    fn weight(&self, k: i64) -> Self::Value {
        TruncatedSeries::new(self.order, vec![rational(1, 1), rational(k * k, 1)])
    }
}

/// `τ(x) = sin(xz)` at a complex sample `z`.
pub struct SineWeight {
    pub z: Complex64,
}

impl WeightAssignment for SineWeight {
    type Value = Complex64;
    fn weight(&self, k: i64) -> Complex64 {
        (self.z * k as f64).sin()
    }
}

/// `sign · ∏ τ(k)^{e_k}`.
pub fn evaluate<W: WeightAssignment>(ledger: &WeightLedger, tau: &W) -> Result<W::Value, Error> {
    let mut acc = W::Value::one();
    for (&k, &e) in &ledger.exps {
        let w = tau.weight(k);
        let factor = if e > 0 {
            w.pow(e as u32)
        } else {
            w.try_inverse()
                .ok_or(Error::DivisionByZeroWeight(k))?
                .pow((-e) as u32)
        };
        acc = acc.times(&factor);
    }
    if ledger.sign < 0 {
        acc = acc.negated();
    }
    Ok(acc)
}

/// Outcome of checking the multiset hook length formulas on one `t`-core.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LedgerCheck {
    pub main: bool,
    pub odd: bool,
    pub even: bool,
    pub content: bool,
}

impl LedgerCheck {
    pub fn all(&self) -> bool {
        self.main && self.odd && self.even && self.content
    }
}

/// Compares the hook-side ledger with the coding-side, odd/even and
/// hook-content forms for one `t`-core.
pub fn check_ledgers(lambda: &Partition, t: u64) -> Result<LedgerCheck, Error> {
    let coding = v_coding(lambda, t)?;
    let beta = lambda.beta_counts(t);
    let lhs = lhs_ledger(lambda, t);
    let main = rhs_ledger_main(&coding, &beta, t);
    let odd = parity_normalize(&main, Parity::Odd)? == rhs_ledger_evenodd(&coding, t, Parity::Odd)?
        && parity_normalize(&lhs, Parity::Odd)? == rhs_ledger_evenodd(&coding, t, Parity::Odd)?;
    let even = parity_normalize(&main, Parity::Even)? == rhs_ledger_evenodd(&coding, t, Parity::Even)?;
    let mu = crate::coding::psi_t(lambda, t)?;
    let content = lhs == content_rhs_ledger(lambda, &mu, t);
    Ok(LedgerCheck {
        main: lhs == main,
        odd,
        even,
        content,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coding::psi_t;
    use crate::partitions::enumerate_t_cores;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn lhs_examples() {
        assert!(lhs_ledger(&Partition::empty(), 4).is_one());
        assert_eq!(
            lhs_ledger(&p("1"), 2),
            WeightLedger::from_pairs([(-1, 1), (3, 1), (1, -2)])
        );
        assert_eq!(lhs_ledger(&p("6,3,3,2"), 5).total_degree(), 0);
    }

    #[test]
    fn rhs_of_empty_is_one() {
        for t in 1..9 {
            let beta = vec![0; t as usize - 1];
            assert!(rhs_ledger_main(&VtCoding::base(t), &beta, t).is_one(), "t={t}");
        }
    }

    #[test]
    fn table_one_formula() {
        let lam = p("8,4,3,2,2,1");
        let v = v_coding(&lam, 5).unwrap();
        assert_eq!(lhs_ledger(&lam, 5), rhs_ledger_main(&v, &lam.beta_counts(5), 5));
    }

    #[test]
    fn single_cell_t_two() {
        let lam = p("1");
        let v = v_coding(&lam, 2).unwrap();
        assert_eq!(v.to_string(), "3/2,-3/2");
        let rhs = rhs_ledger_main(&v, &[1], 2);
        assert_eq!(rhs, WeightLedger::from_pairs([(-1, 1), (1, -2), (3, 1)]));
        assert_eq!(rhs, lhs_ledger(&lam, 2));
        let mu = psi_t(&lam, 2).unwrap();
        assert_eq!(content_rhs_ledger(&lam, &mu, 2), lhs_ledger(&lam, 2));
    }

    #[test]
    fn content_form_on_table_one() {
        let lam = p("8,4,3,2,2,1");
        let mu = psi_t(&lam, 5).unwrap();
        assert_eq!(mu, p("14,8,7,1"));
        assert_eq!(content_rhs_ledger(&lam, &mu, 5), lhs_ledger(&lam, 5));
        assert!(content_rhs_ledger(&Partition::empty(), &Partition::empty(), 3).is_one());
    }

    #[test]
    fn parity_signs() {
        assert_eq!(parity_sign(3, Parity::Odd), -1);
        assert_eq!(parity_sign(7, Parity::Odd), -1);
        assert_eq!(parity_sign(5, Parity::Odd), 1);
        assert_eq!(parity_sign(3, Parity::Even), 1);
        for lam in enumerate_t_cores(3, 12) {
            let v = v_coding(&lam, 3).unwrap();
            let main = rhs_ledger_main(&v, &lam.beta_counts(3), 3);
            assert_eq!(
                parity_normalize(&main, Parity::Odd).unwrap(),
                rhs_ledger_evenodd(&v, 3, Parity::Odd).unwrap()
            );
        }
    }

    #[test]
    fn normalization() {
        let l = WeightLedger::from_pairs([(-1, 1), (3, 1), (1, -2)]);
        let odd = parity_normalize(&l, Parity::Odd).unwrap();
        assert_eq!(odd, WeightLedger::from_pairs([(1, -1), (3, 1)]).with_sign(-1));
        let even = parity_normalize(&l, Parity::Even).unwrap();
        assert_eq!(even.sign(), 1);
        assert_eq!(parity_normalize(&odd, Parity::Odd).unwrap(), odd);
        let zero = WeightLedger::from_pairs([(0, 1)]);
        assert_eq!(parity_normalize(&zero, Parity::Odd), Err(Error::ZeroArgument(1)));
    }

    #[test]
    fn evaluation() {
        assert_eq!(evaluate(&WeightLedger::one(), &IdentityWeight).unwrap(), rational(1, 1));
        // τ(x) = x on H((6,3,3,2)), t = 2: direct product oracle
        let lam = p("6,3,3,2");
        let direct = lam.hooks().iter().fold(rational(1, 1), |acc, &h| {
            let h = h as i64;
            acc * rational((h - 2) * (h + 2), h * h)
        });
        assert_eq!(evaluate(&lhs_ledger(&lam, 2), &IdentityWeight).unwrap(), direct);
        let bad = WeightLedger::from_pairs([(0, -1)]);
        assert_eq!(evaluate(&bad, &IdentityWeight), Err(Error::DivisionByZeroWeight(0)));
    }

    #[test]
    fn evaluation_is_multiplicative() {
        let a = lhs_ledger(&p("3,1"), 2);
        let b = lhs_ledger(&p("4,2,1"), 3);
        let ea = evaluate(&a, &SquareWeight).unwrap();
        let eb = evaluate(&b, &SquareWeight).unwrap();
        assert_eq!(evaluate(&a.times(&b), &SquareWeight).unwrap(), ea * eb);
    }

    #[test]
    fn size_formula_through_shifted_square() {
        // z-coefficient under τ(k) = 1 + zk² is Σ e_k k²; both sides must agree,
        // and the hook side is 2t²|λ|.
        let tau = ShiftedSquareWeight { order: 2 };
        for t in 1..=6u64 {
            for lam in enumerate_t_cores(t, 12) {
                let v = v_coding(&lam, t).unwrap();
                let lhs = lhs_ledger(&lam, t);
                let rhs = rhs_ledger_main(&v, &lam.beta_counts(t), t);
                let el = evaluate(&lhs, &tau).unwrap();
                let er = evaluate(&rhs, &tau).unwrap();
                assert_eq!(el, er);
                let ti = t as i64;
                assert_eq!(el.coeff(1), rational(2 * ti * ti * lam.size() as i64, 1));
                // −t²(t² − 1)/12 + t Σ v², with Σ v = 0
                let sq: i64 = v.values().iter().map(|x| x.doubled() * x.doubled()).sum();
                let closed = rational(-ti * ti * (ti * ti - 1), 12) + rational(ti * sq, 4);
                assert_eq!(rational(rhs.second_moment(), 1), closed);
            }
        }
    }

    #[test]
    fn sine_weight_agrees_numerically() {
        let tau = SineWeight {
            z: Complex64::new(0.37, 0.11),
        };
        let lam = p("8,4,3,2,2,1");
        let v = v_coding(&lam, 5).unwrap();
        let a = evaluate(&lhs_ledger(&lam, 5), &tau).unwrap();
        let b = evaluate(&rhs_ledger_main(&v, &lam.beta_counts(5), 5), &tau).unwrap();
        assert!((a - b).norm() < 1e-10);
    }

    #[test]
    fn check_ledgers_sweep() {
        for t in 1..=8 {
            for lam in enumerate_t_cores(t, 14) {
                assert!(check_ledgers(&lam, t).unwrap().all(), "{lam} t={t}");
            }
        }
    }
}
