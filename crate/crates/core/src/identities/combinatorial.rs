use std::collections::BTreeSet;

use super::{Check, VerificationReport};
use crate::coding::{check_lemma_relations, phi_inverse, size_from_coding, v_coding};
use crate::exploded::build_window;
use crate::partitions::{enumerate_t_cores, partitions_up_to, Partition};
use crate::qseries::schur::{content_side, hook_side, schur_principal};
use crate::qseries::Ring;
use crate::weights::check_ledgers;

/// `φ_t` round trip, size formula and the structural lemma on every
/// `t`-core up to `max_size`, for each `t` in `ts`.
pub fn verify_bijection(ts: &[u64], max_size: u64) -> VerificationReport {
    let mut c = Check::new("bijection", "Z", max_size as usize, true)
        .param("t", ts.to_vec())
        .param("max_size", max_size);
    let mut cores = 0usize;
    for &t in ts {
        for lam in enumerate_t_cores(t, max_size) {
            cores += 1;
            let coding = match v_coding(&lam, t) {
                Ok(v) => v,
                Err(e) => {
                    c.fail(format!("t={t} {lam}: {e}"));
                    continue;
                }
            };
            match phi_inverse(&coding, t) {
                Ok(back) => c.ensure(back == lam, || format!("t={t} {lam}: round trip gave {back}")),
                Err(e) => c.fail(format!("t={t} {lam}: {e}")),
            }
            match size_from_coding(&coding, t) {
                Ok(n) => c.ensure(n == lam.size(), || format!("t={t} {lam}: size formula gave {n}")),
                Err(e) => c.fail(format!("t={t} {lam}: {e}")),
            }
            if let Err(e) = check_lemma_relations(&lam, t) {
                c.fail(format!("t={t} {lam}: {e}"));
            }
        }
    }
    let mut c = c.param("cores", cores);
    c.detail("cores", cores.to_string());
    c.finish()
}

/// Weight-ledger form of the multiset hook length formula, its odd/even
/// simplification and the hook-content form, on every `t`-core up to `max_size`.
pub fn verify_multiset_formula(ts: &[u64], max_size: u64) -> VerificationReport {
    let mut c = Check::new("multiset-formula", "Z[tau]", max_size as usize, true)
        .param("t", ts.to_vec())
        .param("max_size", max_size);
    let mut cores = 0usize;
    for &t in ts {
        for lam in enumerate_t_cores(t, max_size) {
            cores += 1;
            match check_ledgers(&lam, t) {
                Ok(r) => c.ensure(r.all(), || format!("t={t} {lam}: {r:?}")),
                Err(e) => c.fail(format!("t={t} {lam}: {e}")),
            }
        }
    }
    c.detail("cores", cores.to_string());
    c.finish()
}

/// Translation, fold and triangle relations on the exploded tableau of every
/// `t`-core up to `max_size`.
pub fn verify_geometry(ts: &[u64], max_size: u64) -> VerificationReport {
    let mut c = Check::new("geometry", "Z[tau]", max_size as usize, true)
        .param("t", ts.to_vec())
        .param("max_size", max_size);
    let mut cores = 0usize;
    for &t in ts {
        for lam in enumerate_t_cores(t, max_size) {
            cores += 1;
            if let Err(e) = build_window(&lam, t).check_all() {
                c.fail(format!("t={t} {lam}: {e}"));
            }
        }
    }
    c.detail("cores", cores.to_string());
    c.finish()
}

/// `s_λ(1, p, …, p^{n−1}) ∏ (1 − p^h) = p^{b(λ)} ∏ (1 − p^{n+c})`.
pub fn verify_hook_content(max_size: u64, max_n: usize) -> VerificationReport {
    let mut c = Check::new("hook-content", "Q[p]", max_size as usize, true)
        .param("max_size", max_size)
        .param("max_n", max_n);
    let mut vanishing = 0usize;
    let mut cases = 0usize;
    for lam in partitions_up_to(max_size) {
        let hooks = hook_side(&lam);
        for n in 1..=max_n {
            cases += 1;
            let s = schur_principal(&lam, n);
            let rhs = content_side(&lam, n);
            if lam.length() > n {
                vanishing += 1;
                c.ensure(s.is_zero() && rhs.is_zero(), || format!("{lam} n={n}: expected both sides to vanish"));
            }
            let lhs = s.times(&hooks);
            c.ensure(lhs == rhs, || format!("{lam} n={n}: {lhs} != {rhs}"));
        }
    }
    c.detail("cases", cases.to_string());
    c.detail("vanishing", vanishing.to_string());
    c.finish()
}

/// 2-cores are the staircases, and the coding-based `t`-core enumeration
/// agrees with filtering all partitions.
pub fn verify_core_enumeration(t_max: u64, max_size: u64) -> VerificationReport {
    let mut c = Check::new("core-enumeration", "Z", max_size as usize, true)
        .param("t_max", t_max)
        .param("max_size", max_size);
    let all: Vec<Partition> = partitions_up_to(max_size).collect();
    let staircases: BTreeSet<Partition> = (0..)
        .map(|k: u64| Partition::new((1..=k).rev().collect()).expect("staircase"))
        .take_while(|p| p.size() <= max_size)
        .collect();
    let two: BTreeSet<Partition> = enumerate_t_cores(2, max_size).into_iter().collect();
    c.ensure(two == staircases, || format!("2-cores {two:?} differ from staircases"));
    for t in 1..=t_max {
        let fast = enumerate_t_cores(t, max_size);
        let slow: Vec<Partition> = all.iter().filter(|p| p.is_t_core(t)).cloned().collect();
        let a: BTreeSet<&Partition> = fast.iter().collect();
        let b: BTreeSet<&Partition> = slow.iter().collect();
        c.ensure(fast.len() == slow.len() && a == b, || {
            format!("t={t}: {} cores from codings, {} by filtering", fast.len(), slow.len())
        });
        c.detail(format!("t={t}"), fast.len().to_string());
    }
    c.finish()
}
