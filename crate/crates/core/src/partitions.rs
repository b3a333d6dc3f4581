//! Integer partitions: hooks, contents, conjugation and enumeration.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// A partition `λ = (λ_1 ≥ λ_2 ≥ … ≥ λ_ℓ > 0)`. The empty partition is allowed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u64>,
}

impl Partition {
    /// Builds a partition, dropping trailing zero parts.
    pub fn new(mut parts: Vec<u64>) -> Result<Self, Error> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?}")));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    /// `λ_i` with 1-based `i`; zero past the last part.
    pub fn part(&self, i: usize) -> u64 {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn size(&self) -> u64 {
        self.parts.iter().sum()
    }

    pub fn length(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Transpose of the Young diagram, by column counts.
    pub fn conjugate(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0) as usize;
        let mut cols = vec![0u64; width];
        for &p in &self.parts {
            for c in cols.iter_mut().take(p as usize) {
                *c += 1;
            }
        }
        Partition { parts: cols }
    }

    /// Cells `(i, j)`, 1-based row and column, in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p as usize).map(move |j| (i + 1, j)))
    }

    /// Hook lengths of all cells in row-major order, via arm + leg + 1.
    pub fn hooks(&self) -> Vec<u64> {
        let conj = self.conjugate();
        self.cells()
            .map(|(i, j)| {
                let arm = self.part(i) - j as u64;
                let leg = conj.part(j) - i as u64;
                arm + leg + 1
            })
            .collect()
    }

    /// `H_r(λ)`: the hook lengths divisible by `r`. `r = 1` gives every hook.
    pub fn hook_multiset(&self, r: u64) -> HookMultiset {
        assert!(r >= 1, "hook_multiset: r must be positive");
        HookMultiset::from_values(self.hooks().into_iter().filter(|h| h % r == 0))
    }

    /// Contents `j − i` of all cells, row-major.
    pub fn contents(&self) -> Vec<i64> {
        self.cells().map(|(i, j)| j as i64 - i as i64).collect()
    }

    /// `(β_1, …, β_{t−1})` with `β_i = #{□ : h(□) = t − i}`.
    pub fn beta_counts(&self, t: u64) -> Vec<u64> {
        assert!(t >= 1, "beta_counts: t must be positive");
        let mut beta = vec![0u64; t as usize - 1];
        for h in self.hooks() {
            if h < t {
                beta[(t - h) as usize - 1] += 1;
            }
        }
        beta
    }

    /// `b(λ) = Σ (i − 1) λ_i`.
    pub fn b_statistic(&self) -> u64 {
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &p)| i as u64 * p)
            .sum()
    }

    /// True iff no hook length is divisible by `t`.
    pub fn is_t_core(&self, t: u64) -> bool {
        assert!(t >= 1, "is_t_core: t must be positive");
        self.hooks().iter().all(|h| h % t != 0)
    }
}

impl fmt::Display for Partition {
    /// Comma-separated parts; the empty partition prints as `-`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("-");
        }
        let mut first = true;
        for p in &self.parts {
            if !first {
                f.write_str(",")?;
            }
            first = false;
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "-" || s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<u64>()
                    .map_err(|_| Error::InvalidPartition(s.to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Partition::new(parts)
    }
}

/// A multiset of hook lengths, stored sorted ascending.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HookMultiset {
    values: Vec<u64>,
}

impl HookMultiset {
    pub fn from_values(values: impl IntoIterator<Item = u64>) -> Self {
        let mut values: Vec<u64> = values.into_iter().collect();
        values.sort_unstable();
        HookMultiset { values }
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn count(&self, h: u64) -> usize {
        self.values.iter().filter(|&&v| v == h).count()
    }
}

/// All partitions of `n` in reverse-lexicographic order, e.g. `4, 31, 22, 211, 1111`.
pub fn enumerate_partitions(n: u64) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill(n, n, &mut current, &mut out);
    out
}

fn fill(remaining: u64, max_part: u64, current: &mut Vec<u64>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition {
            parts: current.clone(),
        });
        return;
    }
    for p in (1..=max_part.min(remaining)).rev() {
        current.push(p);
        fill(remaining - p, p, current, out);
        current.pop();
    }
}

/// Every partition of size at most `max_n`, by increasing size.
pub fn partitions_up_to(max_n: u64) -> impl Iterator<Item = Partition> {
    (0..=max_n).flat_map(enumerate_partitions)
}

/// All `t`-cores of size at most `max_n`, generated from bounded `V_t`-codings
/// through the inverse bijection. Ordered by size, then reverse-lexicographically.
pub fn enumerate_t_cores(t: u64, max_n: u64) -> Vec<Partition> {
    let mut cores: Vec<Partition> = crate::coding::enumerate_codings(t, max_n)
        .into_iter()
        .map(|v| {
            crate::coding::phi_inverse(&v, t).expect("enumerated codings are valid")
        })
        .collect();
    cores.sort_by(|a, b| a.size().cmp(&b.size()).then_with(|| b.parts.cmp(&a.parts)));
    cores
}
