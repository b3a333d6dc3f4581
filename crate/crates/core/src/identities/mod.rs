//! One verifier per generating-function identity.
//!
//! Each verifier builds the enumeration side (a sum over partitions) and the
//! closed side (a product or an exponential) independently and compares them
//! coefficient by coefficient. Exact rings are compared by equality; complex
//! evaluations report the largest coefficient deviation.

mod combinatorial;
mod exact;
mod trig;

use std::collections::BTreeMap;
use std::fmt::{self, Display};
use std::time::Instant;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Serialize, Serializer};
use serde_json::Value;

use crate::qseries::{Ring, TruncatedSeries};

pub use combinatorial::{
    verify_bijection, verify_core_enumeration, verify_geometry, verify_hook_content, verify_multiset_formula,
};
pub use exact::{
    verify_jacobi, verify_macdonald, verify_multiplication, verify_nekrasov_okounkov,
    verify_partition_generating_function,
};
pub use trig::{
    verify_jacobi_sin_consistency, verify_poly_s_family, verify_sin_family, verify_sin_lemma, verify_tcore_lemmas,
};

pub fn ser_display<T: Display, S: Serializer>(value: &T, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(value)
}

/// Absolute tolerance for complex-valued comparisons.
pub const FLOAT_TOLERANCE: f64 = 1e-8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub identity: String,
    pub params: BTreeMap<String, Value>,
    #[serde(rename = "N")]
    pub n: usize,
    pub ring: String,
    pub status: Status,
    /// `"0"` for an exact pass, the first mismatch for an exact failure,
    /// otherwise the largest coefficient deviation.
    pub deviation: String,
    pub ms: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mismatch: Option<String>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub details: BTreeMap<String, String>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// `identity  status  deviation  ms`.
    pub fn summary_line(&self) -> String {
        format!(
            "{:<28} {:<4}  N={:<3} deviation={:<10} {} ms",
            self.identity, self.status, self.n, self.deviation, self.ms
        )
    }
}

/// Collects sub-checks of one verifier and turns them into a report.
pub(crate) struct Check {
    identity: &'static str,
    ring: &'static str,
    n: usize,
    params: BTreeMap<String, Value>,
    started: Instant,
    exact: bool,
    worst: f64,
    mismatch: Option<String>,
    details: BTreeMap<String, String>,
}

impl Check {
    pub(crate) fn new(identity: &'static str, ring: &'static str, n: usize, exact: bool) -> Self {
        Check {
            identity,
            ring,
            n,
            params: BTreeMap::new(),
            started: Instant::now(),
            exact,
            worst: 0.0,
            mismatch: None,
            details: BTreeMap::new(),
        }
    }

    pub(crate) fn param(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.params.insert(key.to_string(), value.into());
        self
    }

    pub(crate) fn fail(&mut self, what: impl Into<String>) {
        if self.mismatch.is_none() {
            self.mismatch = Some(what.into());
        }
    }

    pub(crate) fn ensure(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.fail(what());
        }
    }

    pub(crate) fn detail(&mut self, key: impl Into<String>, value: impl Into<String>) {
        self.details.insert(key.into(), value.into());
    }

    /// Exact comparison of two series; records the first differing coefficient.
    pub(crate) fn series_equal<C: Ring + Display>(&mut self, label: &str, lhs: &TruncatedSeries<C>, rhs: &TruncatedSeries<C>) {
        if let Some(k) = lhs.first_mismatch(rhs) {
            self.fail(format!("{label}: q^{k}: {} != {}", lhs.coeff(k), rhs.coeff(k)));
        }
    }

    /// Tolerance comparison; records the deviation under `label`.
    pub(crate) fn series_close<C: Ring>(&mut self, label: &str, lhs: &TruncatedSeries<C>, rhs: &TruncatedSeries<C>) {
        let dev = lhs.max_deviation(rhs);
        self.detail(label, format!("{dev:.3e}"));
        self.worst = if dev.is_nan() { f64::INFINITY } else { self.worst.max(dev) };
        if !(dev < FLOAT_TOLERANCE) {
            let k = (0..=self.n)
                .max_by(|&a, &b| {
                    let da = lhs.coeff(a).minus(&rhs.coeff(a)).magnitude();
                    let db = lhs.coeff(b).minus(&rhs.coeff(b)).magnitude();
                    da.partial_cmp(&db).unwrap_or(std::cmp::Ordering::Greater)
                })
                .unwrap_or(0);
            self.fail(format!("{label}: deviation {dev:.3e} at q^{k}"));
        }
    }

    pub(crate) fn finish(self) -> VerificationReport {
        let status = if self.mismatch.is_none() { Status::Pass } else { Status::Fail };
        let deviation = if self.exact {
            match &self.mismatch {
                None => "0".to_string(),
                Some(_) => "mismatch".to_string(),
            }
        } else {
            format!("{:.3e}", self.worst)
        };
        let mut params = self.params;
        if !self.exact {
            params.insert("tolerance".into(), Value::from(FLOAT_TOLERANCE));
        }
        VerificationReport {
            identity: self.identity.to_string(),
            params,
            n: self.n,
            ring: self.ring.to_string(),
            status,
            deviation,
            ms: self.started.elapsed().as_millis() as u64,
            mismatch: self.mismatch,
            details: self.details,
        }
    }
}

pub(crate) fn complex_json(z: Complex64) -> Value {
    Value::from(crate::qseries::ring::format_complex(&z))
}

/// A complex evaluation point `(t, z)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Sample {
    #[serde(serialize_with = "ser_complex")]
    pub t: Complex64,
    #[serde(serialize_with = "ser_complex")]
    pub z: Complex64,
}

fn ser_complex<S: Serializer>(z: &Complex64, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(&crate::qseries::ring::format_complex(z))
}

/// Evaluation points for identities in a complex variable. Every `z` has a
/// nonzero imaginary part, so `sin(hz)` never vanishes for integral `h`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SamplePanel {
    pub samples: Vec<Sample>,
}

impl Default for SamplePanel {
    fn default() -> Self {
        let c = Complex64::new;
        SamplePanel {
            samples: vec![
                Sample { t: c(std::f64::consts::SQRT_2, 0.0), z: c(0.37, 0.11) },
                Sample { t: c(0.6, -0.3), z: c(0.23, 0.17) },
                Sample { t: c(1.7, 0.4), z: c(0.41, -0.09) },
                Sample { t: c(-0.8, 1.1), z: c(0.19, 0.13) },
                Sample { t: c(2.3, 0.0), z: c(0.31, 0.21) },
            ],
        }
    }
}

impl SamplePanel {
    /// `count` samples drawn from a ChaCha stream seeded with `seed`.
    pub fn seeded(seed: u64, count: usize) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let samples = (0..count)
            .map(|_| {
                let t = Complex64::new(rng.gen_range(-2.5..2.5), rng.gen_range(-1.0..1.0));
                let sign = if rng.gen_bool(0.5) { 1.0 } else { -1.0 };
                let z = Complex64::new(rng.gen_range(0.15..0.45), sign * rng.gen_range(0.05..0.22));
                Sample { t, z }
            })
            .collect();
        SamplePanel { samples }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Profile {
    Quick,
    Full,
}

/// Runs a fixed battery of verifiers, ordered by identity id.
pub fn suite(profile: Profile, panel: &SamplePanel) -> Vec<VerificationReport> {
    let mut out = Vec::new();
    let ok = |r: Result<VerificationReport, crate::Error>, id: &'static str| {
        r.unwrap_or_else(|e| {
            let mut c = Check::new(id, "C", 0, false);
            c.fail(e.to_string());
            c.finish()
        })
    };
    match profile {
        Profile::Quick => {
            out.push(verify_bijection(&(1..=5).collect::<Vec<_>>(), 15));
            out.push(verify_nekrasov_okounkov(8));
        }
        Profile::Full => {
            let ts: Vec<u64> = (1..=8).collect();
            out.push(verify_bijection(&ts, 25));
            out.push(verify_multiset_formula(&ts, 20));
            out.push(verify_geometry(&(1..=7).collect::<Vec<_>>(), 15));
            out.push(verify_nekrasov_okounkov(12));
            out.push(verify_partition_generating_function(12));
            for s in &panel.samples {
                for r in 1..=3 {
                    out.push(ok(verify_sin_family(r, s.t, s.z, 8), "sin-family"));
                }
                out.push(ok(verify_poly_s_family(s.z, None, 8), "poly-s-family"));
                out.push(ok(verify_jacobi_sin_consistency(s.z, 8), "jacobi-sin-consistency"));
                for t in [3, 5] {
                    out.push(ok(verify_tcore_lemmas(t, s.z, 10), "tcore-lemmas"));
                }
            }
            out.push(verify_jacobi(10));
            out.push(verify_macdonald(2, 4));
            out.push(verify_macdonald(3, 4));
            for r in 1..=3 {
                out.push(verify_multiplication(r, 10));
            }
            out.push(verify_hook_content(8, 5));
            out.push(verify_sin_lemma(7, 20));
            out.push(verify_core_enumeration(8, 25));
        }
    }
    out.sort_by(|a, b| a.identity.cmp(&b.identity));
    out
}
