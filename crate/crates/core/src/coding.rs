//! W/V/C-sets of a partition and the two bijections on `t`-cores:
//! `φ_t` onto `V_t`-codings and `ψ_t` onto bounded-length partitions.
//!
//! Elements of `t_0 + ℤ` (`t_0 = 0` for odd `t`, `1/2` for even `t`) are
//! stored as [`HalfInt`], i.e. as twice their value. Congruence modulo `t`
//! is congruence of the doubled values modulo `2t`.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num::{BigInt, BigRational, Integer, Signed, ToPrimitive};
use serde::{Serialize, Serializer};

use crate::error::Error;
use crate::partitions::Partition;

/// A value in `½ℤ`, stored doubled.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct HalfInt(i64);

impl HalfInt {
    pub const fn from_doubled(doubled: i64) -> Self {
        HalfInt(doubled)
    }

    pub const fn from_int(n: i64) -> Self {
        HalfInt(2 * n)
    }

    pub const fn doubled(self) -> i64 {
        self.0
    }

    pub fn is_integer(self) -> bool {
        self.0 % 2 == 0
    }

    /// The value as an integer, if it is one.
    pub fn to_int(self) -> Option<i64> {
        self.is_integer().then_some(self.0 / 2)
    }

    pub fn to_rational(self) -> BigRational {
        BigRational::new(BigInt::from(self.0), BigInt::from(2))
    }

    /// `(t + 1)/2`, the shift in `λ_i − i + (t+1)/2`.
    pub fn shift(t: u64) -> Self {
        HalfInt(t as i64 + 1)
    }

    /// Whether `self` lies in `t_0 + ℤ` for this `t`.
    pub fn fits(self, t: u64) -> bool {
        self.0.rem_euclid(2) == (t as i64 + 1).rem_euclid(2)
    }

    /// Congruence class of `self` modulo `t`, as the index `r` with `self ≡ t_0 + r`.
    pub fn class(self, t: u64) -> usize {
        debug_assert!(self.fits(t));
        let d0 = (t as i64 + 1).rem_euclid(2);
        ((self.0 - d0) / 2).rem_euclid(t as i64) as usize
    }

    pub fn step(self, k: i64) -> Self {
        HalfInt(self.0 + 2 * k)
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: HalfInt) -> HalfInt {
        HalfInt(self.0 + rhs.0)
    }
}

impl Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: HalfInt) -> HalfInt {
        HalfInt(self.0 - rhs.0)
    }
}

impl Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt(-self.0)
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

impl FromStr for HalfInt {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        let bad = || Error::InvalidHalfInt(s.to_string());
        match s.split_once('/') {
            None => s.parse::<i64>().map(HalfInt::from_int).map_err(|_| bad()),
            Some((num, den)) => {
                let num: i64 = num.trim().parse().map_err(|_| bad())?;
                match den.trim() {
                    "1" => Ok(HalfInt::from_int(num)),
                    "2" => Ok(HalfInt(num)),
                    _ => Err(bad()),
                }
            }
        }
    }
}

impl Serialize for HalfInt {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

pub(crate) fn join<T: fmt::Display>(items: &[T]) -> String {
    items
        .iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// `W(λ) = {λ_i − i + (t+1)/2 : i ≥ 1}`, kept as the finite part above `m`
/// plus the ray `{m, m−1, …}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WSet {
    head: Vec<HalfInt>,
    tail: HalfInt,
}

impl WSet {
    /// Elements strictly above `m`, decreasing.
    pub fn head(&self) -> &[HalfInt] {
        &self.head
    }

    /// `m(λ)`: the largest value with `{m, m−1, …} ⊆ W`.
    pub fn tail_bound(&self) -> HalfInt {
        self.tail
    }

    /// `M(λ) = max W`.
    pub fn top(&self) -> HalfInt {
        self.head.first().copied().unwrap_or(self.tail)
    }

    pub fn contains(&self, x: HalfInt) -> bool {
        x <= self.tail || self.head.binary_search_by(|h| x.cmp(h)).is_ok()
    }

    /// Elements of `W` that are `≥ floor`, decreasing.
    pub fn elements_down_to(&self, floor: HalfInt) -> Vec<HalfInt> {
        let mut out: Vec<HalfInt> = self.head.iter().copied().filter(|&x| x >= floor).collect();
        let mut x = self.tail;
        while x >= floor {
            out.push(x);
            x = x.step(-1);
        }
        out
    }
}

pub fn w_set(lambda: &Partition, t: u64) -> WSet {
    let c = HalfInt::shift(t);
    let head = lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| HalfInt::from_int(p as i64 - (i as i64 + 1)) + c)
        .collect();
    let tail = c.step(-(lambda.length() as i64) - 1);
    WSet { head, tail }
}

/// The `t`-maximal elements of `W(λ)`, decreasing. Defined for every partition.
pub fn v_set(lambda: &Partition, t: u64) -> Vec<HalfInt> {
    let w = w_set(lambda, t);
    let mut seen = vec![false; t as usize];
    let mut out = Vec::with_capacity(t as usize);
    for x in w.elements_down_to(w.tail_bound().step(1 - t as i64)) {
        let r = x.class(t);
        if !seen[r] {
            seen[r] = true;
            out.push(x);
        }
    }
    out
}

/// A `V_t`-coding: strictly decreasing, zero-sum, one entry per class mod `t`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VtCoding {
    values: Vec<HalfInt>,
}

impl VtCoding {
    /// Validates and wraps a candidate coding.
    pub fn new(values: Vec<HalfInt>, t: u64) -> Result<Self, Error> {
        let diag = validate_coding(&values, t);
        if !diag.is_valid() {
            return Err(Error::InvalidCoding {
                coding: join(&values),
                t,
                reason: diag.describe(),
            });
        }
        Ok(VtCoding { values })
    }

    pub fn values(&self) -> &[HalfInt] {
        &self.values
    }

    /// The base coding `((t−1)/2, (t−3)/2, …, −(t−1)/2)` of the empty partition.
    pub fn base(t: u64) -> Self {
        VtCoding {
            values: (0..t as i64)
                .map(|j| HalfInt::from_doubled(t as i64 - 1 - 2 * j))
                .collect(),
        }
    }

    /// The coding sorted by congruence class: `u_i ≡ i + t_0 (mod t)`.
    pub fn by_class(&self, t: u64) -> Vec<HalfInt> {
        let mut u = self.values.clone();
        u.sort_by_key(|x| x.class(t));
        u
    }
}

impl fmt::Display for VtCoding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join(&self.values))
    }
}

impl FromStr for VtCoding {
    type Err = Error;

    /// Parses the comma list without validating; use [`VtCoding::new`] to validate.
    fn from_str(s: &str) -> Result<Self, Error> {
        let values = s
            .split(',')
            .map(str::parse)
            .collect::<Result<Vec<HalfInt>, _>>()?;
        Ok(VtCoding { values })
    }
}

impl Serialize for VtCoding {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.values.serialize(s)
    }
}

/// `φ_t(λ)`: the `t`-maximal elements of `W(λ)` sorted decreasing.
pub fn v_coding(lambda: &Partition, t: u64) -> Result<VtCoding, Error> {
    if t == 0 {
        return Err(Error::ZeroT);
    }
    if !lambda.is_t_core(t) {
        return Err(Error::NotACore {
            partition: lambda.to_string(),
            t,
        });
    }
    Ok(VtCoding {
        values: v_set(lambda, t),
    })
}

/// `C(λ) = {M, M−1, …} \ W(λ)` together with `M(λ)` and `m(λ)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CSet {
    #[serde(rename = "C")]
    pub values: Vec<HalfInt>,
    #[serde(rename = "M")]
    pub top: HalfInt,
    #[serde(rename = "m")]
    pub tail: HalfInt,
}

pub fn c_set_and_bounds(lambda: &Partition, t: u64) -> CSet {
    let w = w_set(lambda, t);
    let (top, tail) = (w.top(), w.tail_bound());
    let mut values = Vec::new();
    let mut x = top;
    while x > tail {
        if !w.contains(x) {
            values.push(x);
        }
        x = x.step(-1);
    }
    CSet { values, top, tail }
}

/// Which of the three coding conditions a candidate vector satisfies.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CodingDiagnostics {
    pub length_ok: bool,
    pub lattice_ok: bool,
    /// One entry per congruence class modulo `t`.
    pub residues_complete: bool,
    /// Entries sum to zero.
    pub zero_sum: bool,
    /// Strictly decreasing.
    pub strictly_decreasing: bool,
}

impl CodingDiagnostics {
    pub fn is_valid(&self) -> bool {
        self.length_ok
            && self.lattice_ok
            && self.residues_complete
            && self.zero_sum
            && self.strictly_decreasing
    }

    pub fn describe(&self) -> String {
        let mut failures = Vec::new();
        if !self.length_ok {
            failures.push("wrong length");
        }
        if !self.lattice_ok {
            failures.push("entries not in t_0 + Z");
        }
        if !self.residues_complete {
            failures.push("congruence classes incomplete");
        }
        if !self.zero_sum {
            failures.push("nonzero sum");
        }
        if !self.strictly_decreasing {
            failures.push("not strictly decreasing");
        }
        if failures.is_empty() {
            "valid".to_string()
        } else {
            failures.join("; ")
        }
    }
}

pub fn validate_coding(values: &[HalfInt], t: u64) -> CodingDiagnostics {
    let length_ok = t >= 1 && values.len() == t as usize;
    let lattice_ok = t >= 1 && values.iter().all(|v| v.fits(t));
    let residues_complete = length_ok && lattice_ok && {
        let classes: BTreeSet<usize> = values.iter().map(|v| v.class(t)).collect();
        classes.len() == t as usize
    };
    let zero_sum = values.iter().map(|v| v.doubled()).sum::<i64>() == 0;
    let strictly_decreasing = values.windows(2).all(|w| w[0] > w[1]);
    CodingDiagnostics {
        length_ok,
        lattice_ok,
        residues_complete,
        zero_sum,
        strictly_decreasing,
    }
}

/// `φ_t^{-1}`: rebuilds `W = ⋃_{a ∈ V} (a − tℕ)` and reads off
/// `λ_i = w_i + i − (t+1)/2` from its decreasing enumeration.
pub fn phi_inverse(coding: &VtCoding, t: u64) -> Result<Partition, Error> {
    let v = coding.values();
    let invalid = |reason: &str| Error::InvalidCoding {
        coding: join(v),
        t,
        reason: reason.to_string(),
    };
    let diag = validate_coding(v, t);
    if !diag.is_valid() {
        return Err(invalid(&diag.describe()));
    }
    // Every class is full at or below min V, so the ray starts at `floor`.
    let floor = *v.last().expect("t >= 1");
    let mut head: Vec<HalfInt> = v
        .iter()
        .flat_map(|&a| {
            let steps = (a.doubled() - floor.doubled()) / (2 * t as i64);
            (0..=steps).map(move |k| a.step(-(k * t as i64)))
        })
        .filter(|&x| x > floor)
        .collect();
    head.sort_unstable_by(|a, b| b.cmp(a));
    let c = HalfInt::shift(t);
    if floor.step(head.len() as i64 + 1) != c {
        return Err(invalid("charge mismatch"));
    }
    let parts = head
        .iter()
        .enumerate()
        .map(|(i, &w)| {
            (w.step(i as i64 + 1) - c)
                .to_int()
                .and_then(|p| u64::try_from(p).ok())
                .ok_or_else(|| invalid("non-integral part"))
        })
        .collect::<Result<Vec<u64>, _>>()?;
    Partition::new(parts)
}

fn nonneg_integer(q: BigRational, what: &str) -> Result<u64, Error> {
    if !q.is_integer() || q.is_negative() {
        return Err(Error::NonIntegerSize(format!("{what} = {q}")));
    }
    q.to_integer()
        .to_u64()
        .ok_or_else(|| Error::NonIntegerSize(format!("{what} overflows")))
}

/// `|λ| = (v_0² + … + v_{t−1}²)/(2t) − (t² − 1)/24`.
pub fn size_from_coding(coding: &VtCoding, t: u64) -> Result<u64, Error> {
    let t = t as i64;
    let sq: i64 = coding.values().iter().map(|v| v.doubled() * v.doubled()).sum();
    // Σv² = Σd²/4 with d the doubled values.
    let q = BigRational::new(BigInt::from(sq), BigInt::from(8 * t))
        - BigRational::new(BigInt::from(t * t - 1), BigInt::from(24));
    nonneg_integer(q, "size from coding")
}

/// `ψ_t(λ)`: `μ_i = V_i − t + i + a` with `a = −min V`, trailing zeros removed.
pub fn psi_t(lambda: &Partition, t: u64) -> Result<Partition, Error> {
    let coding = v_coding(lambda, t)?;
    let v = coding.values();
    let a = -*v.last().expect("t >= 1");
    let parts = v
        .iter()
        .enumerate()
        .map(|(i, &x)| {
            let mu = x + a + HalfInt::from_int(i as i64 + 1 - t as i64);
            mu.to_int().expect("V_i + a is integral") as u64
        })
        .collect();
    Partition::new(parts)
}

/// Whether `μ` lies in the image of `ψ_t`: length at most `t − 1` and
/// `{μ_i − i mod t : 1 ≤ i ≤ t}` a complete residue system.
pub fn in_psi_image(mu: &Partition, t: u64) -> bool {
    if t == 0 || mu.length() >= t as usize {
        return false;
    }
    let classes: BTreeSet<i64> = (1..=t as usize)
        .map(|i| (mu.part(i) as i64 - i as i64).rem_euclid(t as i64))
        .collect();
    classes.len() == t as usize
}

/// Inverse of [`psi_t`]: recovers the coding from `μ` and applies `φ_t^{-1}`.
pub fn psi_inverse(mu: &Partition, t: u64) -> Result<Partition, Error> {
    if !in_psi_image(mu, t) {
        return Err(Error::InvalidCoding {
            coding: mu.to_string(),
            t,
            reason: "not in the image of psi_t".into(),
        });
    }
    let ti = t as i64;
    // Σ V_i = 0 forces t·a = |μ| + t(t−1)/2, with a in t_0 + Z.
    let a2 = 2 * mu.size() as i64 + ti * (ti - 1);
    debug_assert_eq!(a2 % ti, 0);
    let a = HalfInt::from_doubled(a2 / ti);
    let values = (1..=t as usize)
        .map(|i| HalfInt::from_int(mu.part(i) as i64 + ti - i as i64) - a)
        .collect();
    phi_inverse(&VtCoding::new(values, t)?, t)
}

/// `|λ| = −|μ|(|μ| + t + t²)/(2t²) + Σ_{i ≤ t} (μ_i² + 2(t+1−i)μ_i)/(2t)`.
pub fn size_from_mu(mu: &Partition, t: u64) -> Result<u64, Error> {
    if !in_psi_image(mu, t) {
        return Err(Error::NonIntegerSize(format!(
            "{mu} is not in the image of psi_{t}"
        )));
    }
    let ti = BigInt::from(t);
    let n = BigInt::from(mu.size());
    let mut q = -BigRational::new(&n * (&n + &ti + &ti * &ti), BigInt::from(2) * &ti * &ti);
    for i in 1..=t as usize {
        let m = BigInt::from(mu.part(i));
        let w = BigInt::from(2 * (t as i64 + 1 - i as i64));
        q += BigRational::new(&m * &m + w * &m, BigInt::from(2) * &ti);
    }
    nonneg_integer(q, "size from mu")
}

/// All `V_t`-codings whose partition has size at most `max_n`, unordered.
/// Each coding is `base_j + t·k_j` per class with `Σ k_j = 0`.
pub fn enumerate_codings(t: u64, max_n: u64) -> Vec<VtCoding> {
    assert!(t >= 1, "enumerate_codings: t must be positive");
    let ti = t as i64;
    let base = VtCoding::base(t);
    // 3·Σd² ≤ 24·t·N + t(t² − 1), d doubled entries.
    let bound = 24 * ti * max_n as i64 + ti * (ti * ti - 1);
    let dmax = ((bound / 3) as f64).sqrt().floor() as i64 + 1;
    let mut out = Vec::new();
    let mut ks = Vec::with_capacity(t as usize);
    search(&base, ti, bound, dmax, 0, 0, &mut ks, &mut out);
    out
}

#[allow(clippy::too_many_arguments)]
fn search(
    base: &VtCoding,
    t: i64,
    bound: i64,
    dmax: i64,
    ksum: i64,
    sqsum: i64,
    ks: &mut Vec<i64>,
    out: &mut Vec<VtCoding>,
) {
    let j = ks.len();
    let b = base.values()[j].doubled();
    if j + 1 == t as usize {
        let k = -ksum;
        let d = b + 2 * t * k;
        if 3 * (sqsum + d * d) <= bound {
            ks.push(k);
            let mut values: Vec<HalfInt> = ks
                .iter()
                .zip(base.values())
                .map(|(&k, &b)| b.step(k * t))
                .collect();
            values.sort_unstable_by(|a, b| b.cmp(a));
            out.push(VtCoding { values });
            ks.pop();
        }
        return;
    }
    let kmin = Integer::div_floor(&(-dmax - b), &(2 * t));
    let kmax = Integer::div_ceil(&(dmax - b), &(2 * t));
    for k in kmin..=kmax {
        let d = b + 2 * t * k;
        let s = sqsum + d * d;
        if 3 * s > bound {
            continue;
        }
        ks.push(k);
        search(base, t, bound, dmax, ksum + k, s, ks, out);
        ks.pop();
    }
}

/// Outcome of the finite-window checks of the structural lemma on `t`-cores.
pub fn check_lemma_relations(lambda: &Partition, t: u64) -> Result<(), String> {
    let v1 = v_coding(lambda, t).map_err(|e| e.to_string())?;
    let conj = lambda.conjugate();
    let v2 = v_coding(&conj, t).map_err(|e| e.to_string())?;
    let w1 = w_set(lambda, t);
    let w2 = w_set(&conj, t);
    let c1 = c_set_and_bounds(lambda, t);
    let c2 = c_set_and_bounds(&conj, t);
    let (m1_top, m2_top) = (w1.top(), w2.top());
    let v1set: BTreeSet<HalfInt> = v1.values().iter().copied().collect();
    let ti = t as i64;

    // W = ⋃_{a ∈ V} (a − tℕ): checked down to t below min V.
    let floor = v1.values().last().unwrap().step(-ti);
    let mut x = m1_top;
    while x >= floor {
        let in_union = v1.values().iter().any(|&a| {
            a >= x && (a.doubled() - x.doubled()) % (2 * ti) == 0
        });
        if w1.contains(x) != in_union {
            return Err(format!("decomposition fails at {x}"));
        }
        x = x.step(-1);
    }

    // V_1 = W_1 ∩ −W_2 on [−M_2, M_1].
    let mut x = -m2_top;
    while x <= m1_top {
        let cap = w1.contains(x) && w2.contains(-x);
        if cap != v1set.contains(&x) {
            return Err(format!("V_1 = W_1 ∩ −W_2 fails at {x}"));
        }
        x = x.step(1);
    }

    // V_2 = −V_1.
    let neg: Vec<HalfInt> = v1.values().iter().rev().map(|&x| -x).collect();
    if v2.values() != neg.as_slice() {
        return Err("V_2 = −V_1 fails".into());
    }

    // W†_1 ∩ [−M_2, M_1] = −C_2.
    let neg_c2: BTreeSet<HalfInt> = c2.values.iter().map(|&x| -x).collect();
    let mut dagger = BTreeSet::new();
    let mut x = -m2_top;
    while x <= m1_top {
        if w1.contains(x) && !v1set.contains(&x) {
            dagger.insert(x);
        }
        x = x.step(1);
    }
    if dagger != neg_c2 {
        return Err("W†_1 = −C_2 fails on the window".into());
    }

    // Σ V = 0.
    if !validate_coding(v1.values(), t).zero_sum {
        return Err("V does not sum to zero".into());
    }

    // W† ∪ V ∪ C = {M, M−1, …}, disjoint, on [m − t, M].
    let c1set: BTreeSet<HalfInt> = c1.values.iter().copied().collect();
    let mut x = m1_top;
    while x >= w1.tail_bound().step(-ti) {
        let in_w = w1.contains(x);
        let in_v = v1set.contains(&x);
        let in_c = c1set.contains(&x);
        let in_dagger = in_w && !in_v;
        let count = in_dagger as u8 + in_v as u8 + in_c as u8;
        if count != 1 || (in_v && !in_w) || (in_c && in_w) {
            return Err(format!("W† ∪ V ∪ C is not a disjoint cover at {x}"));
        }
        x = x.step(-1);
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::{enumerate_t_cores, partitions_up_to};

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn h(s: &str) -> Vec<HalfInt> {
        s.split(',').map(|x| x.parse().unwrap()).collect()
    }

    #[test]
    fn halfint_parse_and_print() {
        assert_eq!("21/2".parse::<HalfInt>().unwrap(), HalfInt::from_doubled(21));
        assert_eq!("-17/2".parse::<HalfInt>().unwrap().to_string(), "-17/2");
        assert_eq!("-4".parse::<HalfInt>().unwrap().to_string(), "-4");
        assert_eq!("6/2".parse::<HalfInt>().unwrap().to_string(), "3");
        assert!("1/3".parse::<HalfInt>().is_err());
    }

    #[test]
    fn w_set_table_one() {
        let w = w_set(&p("8,4,3,2,2,1"), 5);
        assert_eq!(w.head(), h("10,5,3,1,0,-2").as_slice());
        assert_eq!(w.tail_bound(), HalfInt::from_int(-4));
        assert_eq!(w.top(), HalfInt::from_int(10));
        assert!(w.contains(HalfInt::from_int(-11)));
        assert!(!w.contains(HalfInt::from_int(-3)));
    }

    #[test]
    fn w_set_table_two() {
        let w = w_set(&p("8,5,4,1,1,1"), 6);
        assert_eq!(w.head(), h("21/2,13/2,9/2,1/2,-1/2,-3/2").as_slice());
        assert_eq!(w.tail_bound(), "-7/2".parse().unwrap());
    }

    #[test]
    fn w_set_empty() {
        let w = w_set(&Partition::empty(), 3);
        assert!(w.head().is_empty());
        assert_eq!(w.tail_bound(), HalfInt::from_int(1));
    }

    #[test]
    fn codings_of_tables() {
        assert_eq!(
            v_coding(&p("8,4,3,2,2,1"), 5).unwrap().values(),
            h("10,3,1,-6,-8").as_slice()
        );
        assert_eq!(
            v_coding(&p("8,5,4,1,1,1"), 6).unwrap().values(),
            h("21/2,13/2,-1/2,-7/2,-9/2,-17/2").as_slice()
        );
        for t in 1..8 {
            assert_eq!(v_coding(&Partition::empty(), t).unwrap(), VtCoding::base(t));
        }
        assert!(matches!(
            v_coding(&p("6,3,3,2"), 2),
            Err(Error::NotACore { .. })
        ));
    }

    #[test]
    fn c_sets_of_table_one() {
        let c = c_set_and_bounds(&p("8,4,3,2,2,1"), 5);
        assert_eq!(c.values, h("9,8,7,6,4,2,-1,-3"));
        assert_eq!((c.top, c.tail), (HalfInt::from_int(10), HalfInt::from_int(-4)));
        let c2 = c_set_and_bounds(&p("8,4,3,2,2,1").conjugate(), 5);
        assert_eq!(c2.values, h("7,5,4,2,0,-5"));
        assert_eq!((c2.top, c2.tail), (HalfInt::from_int(8), HalfInt::from_int(-6)));
        assert!(c_set_and_bounds(&Partition::empty(), 4).values.is_empty());
    }

    #[test]
    fn c_sets_of_table_two() {
        let lam = p("8,5,4,1,1,1");
        let c = c_set_and_bounds(&lam, 6);
        assert_eq!(c.values, h("19/2,17/2,15/2,11/2,7/2,5/2,3/2,-5/2"));
        let c2 = c_set_and_bounds(&lam.conjugate(), 6);
        assert_eq!(c2.values, h("15/2,13/2,11/2,3/2,-1/2,-9/2"));
        assert_eq!(c2.top, "17/2".parse().unwrap());
        assert_eq!(c2.tail, "-11/2".parse().unwrap());
    }

    #[test]
    fn inverse_examples() {
        let v = VtCoding::new(h("10,3,1,-6,-8"), 5).unwrap();
        assert_eq!(phi_inverse(&v, 5).unwrap(), p("8,4,3,2,2,1"));
        let v = VtCoding::new(h("21/2,13/2,-1/2,-7/2,-9/2,-17/2"), 6).unwrap();
        assert_eq!(phi_inverse(&v, 6).unwrap(), p("8,5,4,1,1,1"));
        for t in 1..8 {
            assert_eq!(phi_inverse(&VtCoding::base(t), t).unwrap(), Partition::empty());
        }
    }

    #[test]
    fn sizes_from_coding() {
        let v = VtCoding::new(h("10,3,1,-6,-8"), 5).unwrap();
        assert_eq!(size_from_coding(&v, 5).unwrap(), 20);
        let v = VtCoding::new(h("21/2,13/2,-1/2,-7/2,-9/2,-17/2"), 6).unwrap();
        assert_eq!(size_from_coding(&v, 6).unwrap(), 20);
        for t in 1..8 {
            assert_eq!(size_from_coding(&VtCoding::base(t), t).unwrap(), 0);
        }
    }

    #[test]
    fn validation_diagnostics() {
        assert!(validate_coding(&h("10,3,1,-6,-8"), 5).is_valid());
        assert!(validate_coding(&h("1,0,-1"), 3).is_valid());
        // (2,0,−2) is φ_3((1)), so it must be accepted.
        assert!(validate_coding(&h("2,0,-2"), 3).is_valid());
        assert_eq!(phi_inverse(&VtCoding::new(h("2,0,-2"), 3).unwrap(), 3).unwrap(), p("1"));
        let d = validate_coding(&h("3,0,-3"), 3);
        assert!(!d.residues_complete && d.zero_sum && d.strictly_decreasing);
        let d = validate_coding(&h("2,1,0"), 3);
        assert!(d.residues_complete && !d.zero_sum);
        let d = validate_coding(&h("0,1,-1"), 3);
        assert!(!d.strictly_decreasing);
        let d = validate_coding(&h("1/2,-1/2"), 3);
        assert!(!d.length_ok);
        let d = validate_coding(&h("1,-1"), 2);
        assert!(!d.lattice_ok);
        assert!(VtCoding::new(h("3,0,-3"), 3).is_err());
    }

    #[test]
    fn psi_examples() {
        assert_eq!(psi_t(&p("8,4,3,2,2,1"), 5).unwrap(), p("14,8,7,1"));
        assert_eq!(psi_t(&p("8,5,4,1,1,1"), 6).unwrap(), p("14,11,5,3,3"));
        for t in 1..8 {
            assert_eq!(psi_t(&Partition::empty(), t).unwrap(), Partition::empty());
        }
        assert_eq!(size_from_mu(&p("14,8,7,1"), 5).unwrap(), 20);
        assert_eq!(size_from_mu(&p("14,11,5,3,3"), 6).unwrap(), 20);
        assert_eq!(size_from_mu(&Partition::empty(), 4).unwrap(), 0);
        assert!(size_from_mu(&p("1,1,1,1,1"), 5).is_err());
    }

    #[test]
    fn psi_sweep() {
        for t in 1..=7 {
            for lam in enumerate_t_cores(t, 15) {
                let mu = psi_t(&lam, t).unwrap();
                assert!(in_psi_image(&mu, t), "{lam} t={t}");
                assert_eq!(size_from_mu(&mu, t).unwrap(), lam.size());
                assert_eq!(psi_inverse(&mu, t).unwrap(), lam);
            }
        }
    }

    #[test]
    fn lemma_relations_on_tables() {
        check_lemma_relations(&p("8,4,3,2,2,1"), 5).unwrap();
        check_lemma_relations(&p("8,5,4,1,1,1"), 6).unwrap();
    }

    #[test]
    fn two_cores_are_staircases() {
        let staircases: Vec<Partition> = (0..7u64)
            .map(|k| Partition::new((1..=k).rev().collect()).unwrap())
            .filter(|s| s.size() <= 25)
            .collect();
        assert_eq!(enumerate_t_cores(2, 25), staircases);
        let filtered: Vec<Partition> = partitions_up_to(25).filter(|l| l.is_t_core(2)).collect();
        assert_eq!(filtered.len(), staircases.len());
    }
}
