use std::fmt::Write as _;

use hooklen::coding::{c_set_and_bounds, phi_inverse, psi_t, size_from_coding, v_set, validate_coding, w_set};
use hooklen::exploded::{build_window, RegionLabel};
use hooklen::identities::{self as ids, Profile, SamplePanel, VerificationReport};
use hooklen::partitions::enumerate_t_cores;
use hooklen::{HalfInt, Partition, VtCoding};
use num_complex::Complex64;
use serde_json::{json, Value};

use crate::{Command, Format, Identity, ProfileArg};

pub struct Output {
    pub stdout: String,
    pub code: u8,
}

fn ok(stdout: String) -> Result<Output, String> {
    Ok(Output { stdout, code: 0 })
}

pub fn run(cmd: Command) -> Result<Output, String> {
    match cmd {
        Command::CoreMap { partition, coding, t, format } => core_map(partition, coding, t, format),
        Command::Explode { partition, t, format } => explode(&partition, t, format),
        Command::Enumerate { t, max_size, format } => enumerate(t, max_size, format),
        Command::Verify {
            identity,
            t,
            r,
            trunc,
            z,
            s,
            max_size,
            seed,
            format,
        } => {
            let opts = VerifyOpts {
                t,
                r,
                trunc,
                z: z.as_deref().map(parse_complex).transpose()?,
                s: s.as_deref().map(parse_complex).transpose()?,
                max_size,
                seed,
            };
            let reports = verify(identity, &opts)?;
            reports_output(&reports, format, reports.len() == 1)
        }
        Command::Suite { profile, seed, format } => {
            let panel = seed.map_or_else(SamplePanel::default, |s| SamplePanel::seeded(s, 5));
            let profile = match profile {
                ProfileArg::Quick => Profile::Quick,
                ProfileArg::Full => Profile::Full,
            };
            reports_output(&ids::suite(profile, &panel), format, false)
        }
    }
}

fn positive_t(t: u64) -> Result<u64, String> {
    if t == 0 {
        Err("--t must be positive".into())
    } else {
        Ok(t)
    }
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    s.parse().map_err(|e: hooklen::Error| e.to_string())
}

/// `re` or `re,im`.
fn parse_complex(s: &str) -> Result<Complex64, String> {
    let bad = || format!("expected a complex number `re,im`, got `{s}`");
    let mut it = s.split(',').map(|p| p.trim().parse::<f64>());
    let re = it.next().ok_or_else(bad)?.map_err(|_| bad())?;
    let im = match it.next() {
        Some(v) => v.map_err(|_| bad())?,
        None => 0.0,
    };
    if it.next().is_some() {
        return Err(bad());
    }
    Ok(Complex64::new(re, im))
}

fn join(xs: &[HalfInt]) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

fn strs(xs: &[HalfInt]) -> Value {
    Value::from(xs.iter().map(ToString::to_string).collect::<Vec<_>>())
}

struct Side {
    w: Vec<HalfInt>,
    v: Vec<HalfInt>,
    w_dagger: Vec<HalfInt>,
    c: Vec<HalfInt>,
    top: HalfInt,
    tail: HalfInt,
}

/// The listed part of `W` stops one below `min V`; everything further down lies in `W`.
fn side(lambda: &Partition, t: u64) -> Side {
    let w = w_set(lambda, t);
    let v = v_set(lambda, t);
    let floor = v.last().expect("t >= 1").step(-1);
    let listed = w.elements_down_to(floor);
    let w_dagger = listed.iter().copied().filter(|x| !v.contains(x)).collect();
    let c = c_set_and_bounds(lambda, t);
    Side {
        w: listed,
        v,
        w_dagger,
        c: c.values,
        top: c.top,
        tail: c.tail,
    }
}

fn side_text(out: &mut String, s: &Side, suffix: &str) {
    let _ = writeln!(out, "{:<12}{},...", format!("W{suffix}"), join(&s.w));
    let _ = writeln!(out, "{:<12}{}", format!("V{suffix}"), join(&s.v));
    let _ = writeln!(out, "{:<12}{},...", format!("W_dagger{suffix}"), join(&s.w_dagger));
    let _ = writeln!(out, "{:<12}{}", format!("M{suffix}"), s.top);
    let _ = writeln!(out, "{:<12}{}", format!("m{suffix}"), s.tail);
    let _ = writeln!(out, "{:<12}{}", format!("C{suffix}"), join(&s.c));
}

fn side_json(s: &Side) -> Value {
    json!({
        "W": strs(&s.w),
        "V": strs(&s.v),
        "W_dagger": strs(&s.w_dagger),
        "M": s.top.to_string(),
        "m": s.tail.to_string(),
        "C": strs(&s.c),
    })
}

fn core_map(partition: Option<String>, coding: Option<String>, t: u64, format: Format) -> Result<Output, String> {
    let t = positive_t(t)?;
    let lambda = match (partition, coding) {
        (Some(p), None) => parse_partition(&p)?,
        (None, Some(c)) => {
            let raw: VtCoding = c.parse().map_err(|e: hooklen::Error| e.to_string())?;
            let diag = validate_coding(raw.values(), t);
            if !diag.is_valid() {
                return Err(format!("{c} is not a V_{t}-coding: {}", diag.describe()));
            }
            let v = VtCoding::new(raw.values().to_vec(), t).map_err(|e| e.to_string())?;
            phi_inverse(&v, t).map_err(|e| e.to_string())?
        }
        _ => return Err("core-map needs exactly one of --partition or --coding".into()),
    };
    let is_core = lambda.is_t_core(t);
    let one = side(&lambda, t);
    let conj = lambda.conjugate();
    let two = side(&conj, t);
    let size_check = if is_core {
        let v = VtCoding::new(one.v.clone(), t).map_err(|e| e.to_string())?;
        Some(size_from_coding(&v, t).map_err(|e| e.to_string())?)
    } else {
        None
    };
    let mu = if is_core {
        Some(psi_t(&lambda, t).map_err(|e| e.to_string())?)
    } else {
        None
    };
    let stdout = match format {
        Format::Json => {
            let mut v = json!({
                "partition": lambda.to_string(),
                "t": t,
                "size": lambda.size(),
                "is_core": is_core,
                "size_check": size_check,
                "mu": mu.as_ref().map(ToString::to_string),
                "conjugate": conj.to_string(),
            });
            let obj = v.as_object_mut().expect("object");
            for (k, val) in side_json(&one).as_object().expect("object") {
                obj.insert(k.clone(), val.clone());
            }
            obj.insert("conjugate_sets".into(), side_json(&two));
            serde_json::to_string_pretty(&v).expect("serializable") + "\n"
        }
        Format::Text => {
            let mut out = String::new();
            let _ = writeln!(out, "{:<12}{}", "lambda", lambda);
            let _ = writeln!(out, "{:<12}{}", "t", t);
            let _ = writeln!(out, "{:<12}{}", "size", lambda.size());
            let _ = writeln!(out, "{:<12}{}", "t-core", if is_core { "yes" } else { "no" });
            side_text(&mut out, &one, "");
            if let Some(n) = size_check {
                let _ = writeln!(out, "{:<12}{}", "size_check", n);
            }
            if let Some(m) = &mu {
                let _ = writeln!(out, "{:<12}{}", "mu", m);
            }
            let _ = writeln!(out, "{:<12}{}", "lambda^t", conj);
            side_text(&mut out, &two, "_2");
            out
        }
        Format::Svg => return Err("core-map supports --format text or json".into()),
    };
    ok(stdout)
}

fn explode(partition: &str, t: u64, format: Format) -> Result<Output, String> {
    let t = positive_t(t)?;
    let lambda = parse_partition(partition)?;
    let w = build_window(&lambda, t);
    let checks = lambda.is_t_core(t).then(|| w.check_all());
    let stdout = match format {
        Format::Text => {
            let mut s = w.render_ascii();
            match &checks {
                Some(Ok(())) => s.push_str("relations: pass\n"),
                Some(Err(e)) => {
                    let _ = writeln!(s, "relations: FAIL ({e})");
                }
                None => s.push_str("relations: skipped (not a t-core)\n"),
            }
            s
        }
        Format::Svg => w.render_svg(),
        Format::Json => {
            let boxes: Vec<Value> = w
                .boxes()
                .iter()
                .filter(|b| w.region(b) != RegionLabel::Other)
                .map(|b| {
                    json!({
                        "x": b.x.to_string(),
                        "y": b.y.to_string(),
                        "entry": b.entry(),
                        "region": w.region(b).name(),
                    })
                })
                .collect();
            let ((xl, xh), (yl, yh)) = w.ranges();
            let v = json!({
                "partition": lambda.to_string(),
                "t": t,
                "x_range": [xl.to_string(), xh.to_string()],
                "y_range": [yl.to_string(), yh.to_string()],
                "boxes": boxes,
                "relations": match &checks {
                    Some(Ok(())) => "pass".to_string(),
                    Some(Err(e)) => format!("fail: {e}"),
                    None => "skipped".to_string(),
                },
            });
            serde_json::to_string_pretty(&v).expect("serializable") + "\n"
        }
    };
    let code = if matches!(checks, Some(Err(_))) { 1 } else { 0 };
    Ok(Output { stdout, code })
}

fn enumerate(t: u64, max_size: u64, format: Format) -> Result<Output, String> {
    let t = positive_t(t)?;
    let cores = enumerate_t_cores(t, max_size);
    let rows: Vec<(Partition, Vec<HalfInt>)> = cores
        .into_iter()
        .map(|c| {
            let v = v_set(&c, t);
            (c, v)
        })
        .collect();
    let stdout = match format {
        Format::Json => {
            let v: Vec<Value> = rows
                .iter()
                .map(|(c, v)| json!({"partition": c.to_string(), "size": c.size(), "coding": strs(v)}))
                .collect();
            serde_json::to_string_pretty(&v).expect("serializable") + "\n"
        }
        Format::Text => {
            let mut out = String::new();
            for (c, v) in &rows {
                let _ = writeln!(out, "{:>3}  {:<24} {}", c.size(), c.to_string(), join(v));
            }
            let _ = writeln!(out, "{} {t}-cores of size at most {max_size}", rows.len());
            out
        }
        Format::Svg => return Err("enumerate supports --format text or json".into()),
    };
    ok(stdout)
}

struct VerifyOpts {
    t: Option<String>,
    r: Option<u64>,
    trunc: Option<usize>,
    z: Option<Complex64>,
    s: Option<Complex64>,
    max_size: Option<u64>,
    seed: Option<u64>,
}

impl VerifyOpts {
    fn int_t(&self) -> Result<Option<u64>, String> {
        self.t
            .as_deref()
            .map(|s| s.trim().parse::<u64>().map_err(|_| format!("--t must be a positive integer here, got `{s}`")))
            .transpose()?
            .map(positive_t)
            .transpose()
    }

    fn ts(&self, default: std::ops::RangeInclusive<u64>) -> Result<Vec<u64>, String> {
        Ok(match self.int_t()? {
            Some(t) => vec![t],
            None => default.collect(),
        })
    }

    fn panel(&self) -> SamplePanel {
        self.seed.map_or_else(SamplePanel::default, |s| SamplePanel::seeded(s, 5))
    }

    /// `(t, z)` pairs: the single sample given by `--t`/`--z`, otherwise the panel.
    fn samples(&self) -> Result<Vec<(Complex64, Complex64)>, String> {
        match self.z {
            Some(z) => {
                let t = match &self.t {
                    Some(s) => parse_complex(s)?,
                    None => Complex64::new(std::f64::consts::SQRT_2, 0.0),
                };
                Ok(vec![(t, z)])
            }
            None => Ok(self.panel().samples.iter().map(|s| (s.t, s.z)).collect()),
        }
    }
}

fn verify(identity: Identity, o: &VerifyOpts) -> Result<Vec<VerificationReport>, String> {
    let e = |r: Result<VerificationReport, hooklen::Error>| r.map_err(|e| e.to_string());
    let n = |default: usize| o.trunc.unwrap_or(default);
    let mut out = Vec::new();
    match identity {
        Identity::Bijection => out.push(ids::verify_bijection(&o.ts(1..=8)?, o.max_size.unwrap_or(25))),
        Identity::MultisetFormula => out.push(ids::verify_multiset_formula(&o.ts(1..=8)?, o.max_size.unwrap_or(20))),
        Identity::Geometry => out.push(ids::verify_geometry(&o.ts(1..=7)?, o.max_size.unwrap_or(15))),
        Identity::NekrasovOkounkov => out.push(ids::verify_nekrasov_okounkov(n(12))),
        Identity::PartitionGeneratingFunction => out.push(ids::verify_partition_generating_function(n(12))),
        Identity::SinFamily => {
            for (t, z) in o.samples()? {
                out.push(e(ids::verify_sin_family(o.r.unwrap_or(1).max(1), t, z, n(8)))?);
            }
        }
        Identity::PolySFamily => {
            for (_, z) in o.samples()? {
                out.push(e(ids::verify_poly_s_family(z, o.s, n(8)))?);
            }
        }
        Identity::Jacobi => out.push(ids::verify_jacobi(n(10))),
        Identity::JacobiSinConsistency => {
            for (_, z) in o.samples()? {
                out.push(e(ids::verify_jacobi_sin_consistency(z, n(8)))?);
            }
        }
        Identity::Macdonald => {
            for t in o.ts(2..=3)? {
                if !(2..=4).contains(&t) {
                    return Err("macdonald supports t in 2..=4".into());
                }
                out.push(ids::verify_macdonald(t, n(4)));
            }
        }
        Identity::TcoreLemmas => {
            let ts = match o.int_t()? {
                Some(t) if t % 2 == 1 && t >= 3 => vec![t],
                Some(t) => return Err(format!("tcore-lemmas needs an odd t >= 3, got {t}")),
                None => vec![3, 5],
            };
            let zs: Vec<Complex64> = match o.z {
                Some(z) => vec![z],
                None => o.panel().samples.iter().map(|s| s.z).collect(),
            };
            for t in ts {
                for &z in &zs {
                    out.push(e(ids::verify_tcore_lemmas(t, z, n(10)))?);
                }
            }
        }
        Identity::Multiplication => {
            let rs: Vec<u64> = match o.r {
                Some(0) => return Err("--r must be positive".into()),
                Some(r) => vec![r],
                None => vec![1, 2, 3],
            };
            for r in rs {
                out.push(ids::verify_multiplication(r, n(10)));
            }
        }
        Identity::HookContent => out.push(ids::verify_hook_content(o.max_size.unwrap_or(8), n(5))),
        Identity::SinLemma => out.push(ids::verify_sin_lemma(o.seed.unwrap_or(7), n(20))),
        Identity::CoreEnumeration => out.push(ids::verify_core_enumeration(
            o.int_t()?.unwrap_or(8),
            o.max_size.unwrap_or(25),
        )),
    }
    Ok(out)
}

fn reports_output(reports: &[VerificationReport], format: Format, single: bool) -> Result<Output, String> {
    let code = if reports.iter().all(VerificationReport::passed) { 0 } else { 1 };
    let stdout = match format {
        Format::Json => {
            let v = if single {
                serde_json::to_value(&reports[0])
            } else {
                serde_json::to_value(reports)
            };
            serde_json::to_string(&v.expect("serializable")).expect("serializable") + "\n"
        }
        Format::Text => {
            let mut out = String::new();
            for r in reports {
                let _ = writeln!(out, "{}", r.summary_line());
                if let Some(m) = &r.mismatch {
                    let _ = writeln!(out, "    {m}");
                }
            }
            let passed = reports.iter().filter(|r| r.passed()).count();
            let _ = writeln!(out, "{passed}/{} passed", reports.len());
            out
        }
        Format::Svg => return Err("reports support --format text or json".into()),
    };
    Ok(Output { stdout, code })
}
