//! The acceptance battery. Prints one line per criterion and fails if any
//! criterion fails.

use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use hooklen::coding::{c_set_and_bounds, v_set, w_set};
use hooklen::identities::{self as ids, SamplePanel, VerificationReport, FLOAT_TOLERANCE};
use hooklen::partitions::{enumerate_t_cores, partitions_up_to};
use hooklen::{HalfInt, Partition};

struct Outcome {
    ok: bool,
    note: String,
}

fn from_reports(reports: &[VerificationReport]) -> Outcome {
    let failed: Vec<String> = reports
        .iter()
        .filter(|r| !r.passed())
        .map(|r| format!("{} {:?}: {}", r.identity, r.params, r.mismatch.clone().unwrap_or_default()))
        .collect();
    let worst = reports
        .iter()
        .filter_map(|r| r.deviation.parse::<f64>().ok())
        .fold(0.0f64, f64::max);
    Outcome {
        ok: failed.is_empty(),
        note: if failed.is_empty() {
            format!("{} reports, max deviation {worst:.3e}", reports.len())
        } else {
            failed.join("; ")
        },
    }
}

fn within(outcome: Outcome, elapsed: Duration, budget: Duration) -> Outcome {
    let fast = elapsed < budget;
    Outcome {
        ok: outcome.ok && fast,
        note: format!("{}, {:.2?} (budget {:?})", outcome.note, elapsed, budget),
    }
}

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

fn halves(xs: &[&str]) -> Vec<HalfInt> {
    xs.iter().map(|x| x.parse().unwrap()).collect()
}

fn bin(args: &[&str]) -> String {
    let out = Command::new(env!("CARGO_BIN_EXE_hooklen")).args(args).output().unwrap();
    assert!(out.status.success());
    String::from_utf8(out.stdout).unwrap()
}

fn golden(name: &str) -> String {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "golden", name].iter().collect();
    std::fs::read_to_string(path).unwrap()
}

/// One half of a table: `W` head (the listed elements), `V`, `W†` head, `M`, `m`, `C`.
struct TableSide<'a> {
    w: &'a [&'a str],
    v: &'a [&'a str],
    w_dagger: &'a [&'a str],
    top: &'a str,
    tail: &'a str,
    c: &'a [&'a str],
}

fn table_matches(lambda: &Partition, t: u64, side: &TableSide) -> Result<(), String> {
    let w = w_set(lambda, t);
    let v = v_set(lambda, t);
    let c = c_set_and_bounds(lambda, t);
    let wl = halves(side.w);
    let floor = *wl.last().unwrap();
    if w.elements_down_to(floor) != wl {
        return Err(format!("W of {lambda}"));
    }
    if v != halves(side.v) {
        return Err(format!("V of {lambda}: {v:?}"));
    }
    let dagger: Vec<HalfInt> = w.elements_down_to(floor).into_iter().filter(|x| !v.contains(x)).collect();
    let expected = halves(side.w_dagger);
    if dagger[..expected.len()] != expected[..] {
        return Err(format!("W dagger of {lambda}"));
    }
    if c.values != halves(side.c) || c.top.to_string() != side.top || c.tail.to_string() != side.tail {
        return Err(format!("C, M or m of {lambda}"));
    }
    Ok(())
}

fn criterion_2() -> Outcome {
    let t5 = p("8,4,3,2,2,1");
    let t6 = p("8,5,4,1,1,1");
    let checks = [
        table_matches(
            &t5,
            5,
            &TableSide {
                w: &["10", "5", "3", "1", "0", "-2", "-4", "-5", "-6", "-7", "-8", "-9", "-10", "-11"],
                v: &["10", "3", "1", "-6", "-8"],
                w_dagger: &["5", "0", "-2", "-4", "-5", "-7", "-9", "-10", "-11"],
                top: "10",
                tail: "-4",
                c: &["9", "8", "7", "6", "4", "2", "-1", "-3"],
            },
        ),
        table_matches(
            &t5.conjugate(),
            5,
            &TableSide {
                w: &["8", "6", "3", "1", "-1", "-2", "-3", "-4", "-6", "-7", "-8", "-9", "-10", "-11", "-12"],
                v: &["8", "6", "-1", "-3", "-10"],
                w_dagger: &["3", "1", "-2", "-4", "-6", "-7", "-8", "-9", "-11", "-12"],
                top: "8",
                tail: "-6",
                c: &["7", "5", "4", "2", "0", "-5"],
            },
        ),
        table_matches(
            &t6,
            6,
            &TableSide {
                w: &[
                    "21/2", "13/2", "9/2", "1/2", "-1/2", "-3/2", "-7/2", "-9/2", "-11/2", "-13/2", "-15/2", "-17/2",
                    "-19/2", "-21/2",
                ],
                v: &["21/2", "13/2", "-1/2", "-7/2", "-9/2", "-17/2"],
                w_dagger: &["9/2", "1/2", "-3/2", "-11/2", "-13/2", "-15/2", "-19/2", "-21/2"],
                top: "21/2",
                tail: "-7/2",
                c: &["19/2", "17/2", "15/2", "11/2", "7/2", "5/2", "3/2", "-5/2"],
            },
        ),
        table_matches(
            &t6.conjugate(),
            6,
            &TableSide {
                w: &[
                    "17/2", "9/2", "7/2", "5/2", "1/2", "-3/2", "-5/2", "-7/2", "-11/2", "-13/2", "-15/2", "-17/2",
                    "-19/2", "-21/2", "-23/2",
                ],
                v: &["17/2", "9/2", "7/2", "1/2", "-13/2", "-21/2"],
                w_dagger: &["5/2", "-3/2", "-5/2", "-7/2", "-11/2", "-15/2", "-17/2", "-19/2", "-23/2"],
                top: "17/2",
                tail: "-11/2",
                c: &["15/2", "13/2", "11/2", "3/2", "-1/2", "-9/2"],
            },
        ),
    ];
    let mut errors: Vec<String> = checks.into_iter().filter_map(Result::err).collect();
    if t5.conjugate() != p("6,5,3,2,1,1,1,1") || t6.conjugate() != p("6,3,3,3,2,1,1,1") {
        errors.push("conjugates".into());
    }
    for (args, file) in [
        (["core-map", "--partition", "8,4,3,2,2,1", "--t", "5"], "core_map_8_4_3_2_2_1_t5.txt"),
        (["core-map", "--partition", "8,5,4,1,1,1", "--t", "6"], "core_map_8_5_4_1_1_1_t6.txt"),
    ] {
        if bin(&args) != golden(file) {
            errors.push(format!("{file} not byte-exact"));
        }
    }
    for (args, file) in [
        (["core-map", "--partition", "8,4,3,2,2,1", "--t", "5"], "core_map_8_4_3_2_2_1_t5.json"),
        (["core-map", "--partition", "8,5,4,1,1,1", "--t", "6"], "core_map_8_5_4_1_1_1_t6.json"),
    ] {
        let mut a = args.to_vec();
        a.extend(["--format", "json"]);
        if bin(&a) != golden(file) {
            errors.push(format!("{file} not byte-exact"));
        }
    }
    Outcome {
        ok: errors.is_empty(),
        note: if errors.is_empty() { "both tables field-for-field, goldens byte-exact".into() } else { errors.join("; ") },
    }
}

const PARTITION_COUNTS: [u64; 13] = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77];

fn criterion_6(panel: &SamplePanel) -> Outcome {
    let mut reports = Vec::new();
    for s in &panel.samples {
        for r in 1..=3 {
            reports.push(ids::verify_sin_family(r, s.t, s.z, 8).unwrap());
        }
    }
    let mut out = from_reports(&reports);
    let pgf = ids::verify_partition_generating_function(12);
    let expected = PARTITION_COUNTS.map(|x| x.to_string()).join(",");
    let counts_ok = pgf.passed() && pgf.details.get("coefficients") == Some(&expected);
    let at_zero = ids::verify_sin_family(1, 0.0.into(), panel.samples[0].z, 12).unwrap();
    out.ok &= counts_ok && at_zero.passed() && reports.iter().all(|r| r.deviation.parse::<f64>().unwrap() < FLOAT_TOLERANCE);
    out.note = format!("{}; t=0 against p(n) to q^12: {}", out.note, if counts_ok { "exact" } else { "MISMATCH" });
    out
}

fn criterion_13() -> Outcome {
    let report = ids::verify_core_enumeration(8, 25);
    let staircase = |p: &Partition| {
        let k = p.length() as u64;
        p.parts().iter().enumerate().all(|(i, &x)| x == k - i as u64)
    };
    let filtered: Vec<Partition> = partitions_up_to(25).filter(|p| p.is_t_core(2)).collect();
    let stairs_ok = filtered.iter().all(staircase) && filtered.len() == 7;
    let counts_ok = (1..=8).all(|t| {
        let mut a = enumerate_t_cores(t, 25);
        let mut b: Vec<Partition> = partitions_up_to(25).filter(|p| p.is_t_core(t)).collect();
        a.sort();
        b.sort();
        a == b
    });
    let mut out = from_reports(&[report]);
    out.ok &= stairs_ok && counts_ok;
    out.note = format!("{}; staircases {stairs_ok}, t<=8 counts {counts_ok}", out.note);
    out
}

fn main() {
    let panel = SamplePanel::default();
    let mut lines = Vec::new();
    let mut record = |n: usize, name: &str, outcome: Outcome| {
        let line = format!(
            "criterion {n:>2} {name:<24} {}  {}",
            if outcome.ok { "PASS" } else { "FAIL" },
            outcome.note
        );
        println!("{line}");
        lines.push((outcome.ok, line));
    };

    let start = Instant::now();
    let r = ids::verify_bijection(&(1..=8).collect::<Vec<_>>(), 25);
    record(1, "bijection sweep", within(from_reports(&[r]), start.elapsed(), Duration::from_secs(60)));

    record(2, "golden tables", criterion_2());

    record(3, "multiset formula", from_reports(&[ids::verify_multiset_formula(&(1..=8).collect::<Vec<_>>(), 20)]));

    record(4, "exploded geometry", from_reports(&[ids::verify_geometry(&(1..=7).collect::<Vec<_>>(), 15)]));

    let start = Instant::now();
    let r = ids::verify_nekrasov_okounkov(12);
    record(5, "nekrasov-okounkov", within(from_reports(&[r]), start.elapsed(), Duration::from_secs(30)));

    record(6, "sine family", criterion_6(&panel));

    let r: Vec<_> = panel.samples.iter().map(|s| ids::verify_poly_s_family(s.z, None, 8).unwrap()).collect();
    record(7, "s-polynomial family", from_reports(&r));

    record(8, "jacobi triple product", from_reports(&[ids::verify_jacobi(10)]));

    record(9, "macdonald", from_reports(&[ids::verify_macdonald(2, 4), ids::verify_macdonald(3, 4)]));

    let r: Vec<_> = [3, 5]
        .iter()
        .flat_map(|&t| panel.samples.iter().map(move |s| ids::verify_tcore_lemmas(t, s.z, 10).unwrap()))
        .collect();
    record(10, "t-core lemmas", from_reports(&r));

    let r: Vec<_> = (1..=3).map(|r| ids::verify_multiplication(r, 10)).collect();
    record(11, "multiplication theorem", from_reports(&r));

    record(12, "hook-content", from_reports(&[ids::verify_hook_content(8, 5)]));

    record(13, "classical cross-checks", criterion_13());

    let failed = lines.iter().filter(|(ok, _)| !ok).count();
    println!("{} of {} criteria passed", lines.len() - failed, lines.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
