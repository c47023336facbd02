//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
//! criterion fails.

use std::time::{Duration, Instant};

use incidence_core::bounds::{
    eps_few, few_h, few_params, few_x_by_max, scan_constants_wd, tail_sum, wd_correction, wd_h,
    wd_params, wd_x, wd_x_by_max, wd_y, SeriesKind,
};
use incidence_core::generators::{circle, collinear, grid, near_pencil, random_points};
use incidence_core::oracle::brute_force_lines;
use incidence_core::rational::{int, parse_rational, to_f64, Rational};
use incidence_core::{Arrangement, CrossingConstants, Interval, PointSet, VerifyContext};

fn q(s: &str) -> Rational {
    parse_rational(s).expect("valid literal")
}

type Criterion = Box<dyn FnOnce() -> Outcome>;

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        passed,
        detail: detail.into(),
    }
}

fn timed(limit: Option<Duration>, f: impl FnOnce() -> Outcome) -> Outcome {
    let start = Instant::now();
    let mut out = f();
    let elapsed = start.elapsed();
    out.detail = format!("{} [{:.1}s]", out.detail, elapsed.as_secs_f64());
    if let Some(limit) = limit {
        if elapsed > limit {
            out.passed = false;
            out.detail
                .push_str(&format!(" exceeds {}s budget", limit.as_secs()));
        }
    }
    out
}

fn constant_reproduction_wd() -> Outcome {
    let k = CrossingConstants::default();
    let scan = match scan_constants_wd(8, 200, &k, 4096) {
        Ok(s) => s,
        Err(e) => return outcome(false, format!("scan failed: {e}")),
    };
    let f46 = scan.row(46).expect("46 in range");
    let above = f46.lo() > &q("1/26");
    outcome(
        scan.argmax == 46 && above,
        format!(
            "argmax c={} (want 46), f(46) ~ {:.9} lo > 1/26: {above}, isolated at cutoff {}",
            scan.argmax,
            f46.midpoint_f64(),
            scan.cutoff
        ),
    )
}

fn incidence_constants() -> Outcome {
    let p = match wd_params(46, &q("1/26"), 2, &CrossingConstants::default(), 4096) {
        Ok(p) => p,
        Err(e) => return outcome(false, format!("wd_params failed: {e}")),
    };
    let delta_ok = p.delta.lo() >= &q("1/26");
    let r_ok = p.r == q("20803/8944") && p.r >= int(2);
    let width_ok = p.delta.width() < q("1/1000000");
    outcome(
        delta_ok && r_ok && width_ok,
        format!(
            "delta.lo >= 1/26: {delta_ok}; r = {} (== 20803/8944 and >= 2: {r_ok}); delta width {:.2e} < 1e-6: {width_ok}",
            p.r,
            to_f64(&p.delta.width())
        ),
    )
}

fn beck_constants() -> Outcome {
    let k = CrossingConstants::default();
    let (e44, p36) = match (eps_few(44, &k, 4096), few_params(36, &k, 4096)) {
        (Ok(e), Ok(p)) => (e, p),
        (Err(e), _) | (_, Err(e)) => return outcome(false, format!("evaluation failed: {e}")),
    };
    let lo_ok = e44.lo() >= &q("2/61");
    // 1/30.2 = 5/151
    let hi_ok = e44.hi() <= &q("5/151");
    let a_ok = p36.a.lo() >= &q("1/39");
    let b_ok = p36.b == q("206/693") && p36.b <= q("1/3");
    outcome(
        lo_ok && hi_ok && a_ok && b_ok,
        format!(
            "eps_few(44) ~ {:.9} = 1/{:.3}: lo >= 2/61: {lo_ok}, hi <= 1/30.2: {hi_ok}; \
             A(36).lo >= 1/39: {a_ok}; B(36) = {} (== 206/693 <= 1/3: {b_ok})",
            e44.midpoint_f64(),
            1.0 / e44.midpoint_f64(),
            p36.b
        ),
    )
}

fn oracle_corpus() -> Vec<PointSet> {
    let mut corpus = Vec::new();
    for seed in 0..500u64 {
        let n = 2 + seed % 39;
        let bound = 4 + seed % 5;
        corpus.push(random_points(n, seed, bound).expect("fits the box"));
    }
    for w in 2..=8 {
        for h in 2..=8 {
            corpus.push(grid(w, h).expect("valid grid"));
        }
    }
    corpus
}

fn oracle_equivalence() -> Outcome {
    let corpus = oracle_corpus();
    let mut mismatches = 0;
    for ps in &corpus {
        let arr = Arrangement::build(ps).expect("n >= 2");
        if arr.member_sets() != brute_force_lines(ps).expect("n >= 2") {
            mismatches += 1;
        }
    }
    outcome(
        mismatches == 0,
        format!("{} configurations, {mismatches} mismatches", corpus.len()),
    )
}

fn sweep_corpus() -> Vec<(String, PointSet)> {
    let mut corpus = Vec::new();
    for w in 2..=12 {
        for h in 2..=12 {
            corpus.push((format!("grid({w},{h})"), grid(w, h).unwrap()));
        }
    }
    for n in 3..=200 {
        corpus.push((format!("near_pencil({n})"), near_pencil(n).unwrap()));
    }
    for n in 3..=100 {
        corpus.push((format!("circle({n})"), circle(n).unwrap()));
    }
    for n in 2..=30 {
        corpus.push((format!("collinear({n})"), collinear(n).unwrap()));
    }
    for seed in 0..200u64 {
        let n = 5 + seed % 56;
        let bound = 4 + seed % 10;
        corpus.push((
            format!("random({n},{seed},{bound})"),
            random_points(n, seed, bound).unwrap(),
        ));
    }
    corpus
}

fn inequality_sweep() -> Outcome {
    let ctx = VerifyContext::new(CrossingConstants::default(), 4096).expect("valid cutoff");
    let corpus = sweep_corpus();
    let mut failures = Vec::new();
    let mut applicable = 0usize;
    let mut evaluated = 0usize;
    for (name, ps) in &corpus {
        let arr = Arrangement::build(ps).expect("n >= 2");
        let report = ctx.verify(&arr);
        evaluated += report.checks.len();
        applicable += report.checks.iter().filter(|c| c.applicable).count();
        for f in report.failures() {
            failures.push(format!("{name}: {f}"));
        }
    }
    let mut detail = format!(
        "{} configurations, {evaluated} checks ({applicable} applicable), {} failures",
        corpus.len(),
        failures.len()
    );
    for f in failures.iter().take(5) {
        detail.push_str(&format!("\n       {f}"));
    }
    outcome(failures.is_empty(), detail)
}

fn identity_suite() -> Outcome {
    let mut bad = Vec::new();
    for c in 8..=500u64 {
        let ci = int(c);
        let h = wd_h(c);
        let x = wd_x(c);
        let y = wd_y(c);
        if x != (&ci - int(1)) / int(2) - int(2) * &h + int(9) * &h / &ci {
            bad.push(format!("h-identity c={c}"));
        }
        let chain = [q("3/2"), (&h + int(4)) / int(4), int(2) - &h / int(5)];
        if chain.iter().any(|v| &x < v) || wd_x_by_max(c) != x {
            bad.push(format!("X-max c={c}"));
        }
        if !(y > int(-1) && y < int(0)) {
            bad.push(format!("Y-range c={c}"));
        }
        if &y * (&ci + int(1)) / (&ci * &ci * &ci) != wd_correction(c) {
            bad.push(format!("Y-bridge c={c}"));
        }
    }
    for c in 29..=500u64 {
        let ci = int(c);
        let h = few_h(c);
        let x = &h + int(1);
        if x != (&ci * &ci + int(3) * &ci - int(18)) / (int(4) * &ci - int(16)) {
            bad.push(format!("few X identity c={c}"));
        }
        let coeff = &ci - int(4) * &h + int(14) * &h / &ci;
        let closed = (&ci * &ci - int(3) * &ci - int(14)) / (int(2) * &ci * (&ci - int(4)));
        if coeff != closed || closed <= int(0) {
            bad.push(format!("few medium coefficient c={c}"));
        }
        if few_x_by_max(c) != x {
            bad.push(format!("few X-max c={c}"));
        }
    }
    outcome(
        bad.is_empty(),
        format!(
            "c in [8,500] and [29,500]: {} violations {:?}",
            bad.len(),
            bad.iter().take(5).collect::<Vec<_>>()
        ),
    )
}

fn series_enclosures() -> Outcome {
    let mut nest_failures = 0;
    for kind in [SeriesKind::InverseSquare, SeriesKind::SuccessorOverCube] {
        for c in [2u64, 8, 29, 44, 46] {
            let mut prev: Option<Interval> = None;
            let mut m = 64;
            while m <= 8192 {
                let cur = tail_sum(kind, c, m).expect("cutoff >= c");
                if let Some(p) = &prev {
                    if !p.encloses(&cur) {
                        nest_failures += 1;
                    }
                }
                prev = Some(cur);
                m *= 2;
            }
        }
    }
    let t = tail_sum(SeriesKind::InverseSquare, 2, 4096).expect("cutoff >= c");
    let reference = q("6449340668/10000000000");
    let w = t.width();
    let near = t.lo() - &w <= reference && reference <= t.hi() + &w;
    // pi^2/6 - 1 = 0.644934066848226...
    let truth = Interval::new(
        q("64493406684822/100000000000000"),
        q("64493406684823/100000000000000"),
    )
    .unwrap();
    let brackets_truth = t.overlaps(&truth);
    let narrow = w < q("24/100000");
    outcome(
        nest_failures == 0 && near && brackets_truth && narrow,
        format!(
            "nesting failures {nest_failures}; reference within own width: {near}; \
             brackets pi^2/6-1: {brackets_truth}; width {:.2e} < 2.4e-4: {narrow}",
            to_f64(&w)
        ),
    )
}

fn main() {
    let criteria: Vec<(&str, Criterion)> = vec![
        (
            "AC1 weak Dirac constant scan",
            Box::new(|| timed(Some(Duration::from_secs(60)), constant_reproduction_wd)),
        ),
        (
            "AC2 incidence constants at c=46",
            Box::new(|| timed(None, incidence_constants)),
        ),
        (
            "AC3 Beck-refinement constants",
            Box::new(|| timed(None, beck_constants)),
        ),
        (
            "AC4 oracle equivalence",
            Box::new(|| timed(Some(Duration::from_secs(120)), oracle_equivalence)),
        ),
        (
            "AC5 inequality sweep",
            Box::new(|| timed(None, inequality_sweep)),
        ),
        (
            "AC6 algebraic identities",
            Box::new(|| timed(None, identity_suite)),
        ),
        (
            "AC7 series enclosures",
            Box::new(|| timed(None, series_enclosures)),
        ),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let out = run();
        if !out.passed {
            failed += 1;
        }
        println!(
            "[{}] {name}: {}",
            if out.passed { "PASS" } else { "FAIL" },
            out.detail
        );
    }
    println!("[INFO] AC8 scope: universally quantified statements are exercised on the AC5 corpus, the AC4 oracle and the AC1-AC3 constants");
    if failed > 0 {
        println!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
    println!("all acceptance criteria passed");
}
