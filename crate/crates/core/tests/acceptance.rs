//! Acceptance run: one PASS/FAIL line per criterion, every comparison exact.
//! Indented lines under a criterion give details and, where a claim is
//! false as stated, the check of the form that does hold.
//!
//! Exits non-zero when any criterion fails.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::Instant;

use rayon::prelude::*;

use qcomb::identities::{check_named, join_lah, oracle, split_lah, Ctx, Grid, Span, Status};
use qcomb::numbers::{bell_q, hsu_shiue, lah_q, lah_q_closed, lah_q_recurrence, stirling1_q, stirling2_q, Value};
use qcomb::polyring::BigInt;
use qcomb::statistics::weight;
use qcomb::structures::{enum_extended_lah, Family, DEFAULT_CELL_CAP};

struct Outcome {
    ok: bool,
    summary: String,
    details: Vec<String>,
}

impl Outcome {
    fn new(ok: bool, summary: impl Into<String>) -> Self {
        Outcome {
            ok,
            summary: summary.into(),
            details: Vec::new(),
        }
    }

    fn detail(mut self, d: impl Into<String>) -> Self {
        self.details.push(d.into());
        self
    }
}

// ---- independent integer references ----

fn binom(a: i64, b: i64) -> i128 {
    if b < 0 {
        return 0;
    }
    if a < 0 {
        // C(a,b) = (-1)^b C(b-a-1, b)
        let s = if b % 2 == 0 { 1 } else { -1 };
        return s * binom(b - a - 1, b);
    }
    if b > a {
        return 0;
    }
    let mut c: i128 = 1;
    for t in 0..b {
        c = c * (a - t) as i128 / (t + 1) as i128;
    }
    c
}

/// A triangle from `T(n,k) = T(n-1,k-1) + f(n,k) T(n-1,k)`, `T(0,0) = 1`.
fn triangle(size: usize, f: impl Fn(usize, usize) -> i128) -> Vec<Vec<i128>> {
    let mut t = vec![vec![0i128; size + 1]; size + 1];
    t[0][0] = 1;
    for n in 1..=size {
        for k in 0..=n {
            let left = if k > 0 { t[n - 1][k - 1] } else { 0 };
            t[n][k] = left + f(n, k) * t[n - 1][k];
        }
    }
    t
}

fn stirling2_ref(size: usize) -> Vec<Vec<i128>> {
    triangle(size, |_, k| k as i128)
}

fn stirling1_ref(size: usize) -> Vec<Vec<i128>> {
    triangle(size, |n, _| n as i128 - 1)
}

fn lah_ref(size: usize) -> Vec<Vec<i128>> {
    triangle(size, |n, k| (n + k) as i128 - 1)
}

/// Bell numbers from the Bell triangle.
fn bell_ref(count: usize) -> Vec<i128> {
    let mut out = vec![1i128];
    let mut row = vec![1i128];
    while out.len() < count {
        let mut next = vec![*row.last().unwrap()];
        for &x in &row {
            let last = *next.last().unwrap();
            next.push(last + x);
        }
        out.push(next[0]);
        row = next;
    }
    out
}

fn big(v: i128) -> BigInt {
    BigInt::from(v)
}

fn at1(v: &qcomb::polyring::QPoly) -> BigInt {
    v.coeff_sum()
}

// ---- criteria ----

fn oracle_equivalence() -> Outcome {
    let mut cells = Vec::new();
    for r in 0..=2 {
        for (family, max_n) in [(Family::Partitions, 8), (Family::Perms, 8), (Family::Lah, 7)] {
            for n in 0..=max_n {
                for k in 0..=n {
                    cells.push((family, n, k, r));
                }
            }
        }
    }
    let bad: Vec<String> = cells
        .par_iter()
        .filter_map(|&(family, n, k, r)| {
            let engine: Value = match family {
                Family::Partitions => stirling2_q(n, k, r).into(),
                Family::Perms => stirling1_q(n, k, r).into(),
                _ => lah_q(n, k, r).into(),
            };
            match oracle(family, n, k, r, DEFAULT_CELL_CAP) {
                Ok(o) if o == engine => None,
                Ok(o) => Some(format!("{}({n},{k},{r}): engine {engine}, oracle {o}", family.name())),
                Err(e) => Some(e.to_string()),
            }
        })
        .collect();
    let o = Outcome::new(
        bad.is_empty(),
        format!("engines equal enumeration oracles, r in 0..2 ({} cells)", cells.len()),
    );
    bad.into_iter().take(3).fold(o, Outcome::detail)
}

fn weighted_count() -> Outcome {
    let cells: Vec<(usize, usize)> = (0..=7).flat_map(|n| (0..=n).map(move |k| (n, k))).collect();
    let bad: Vec<String> = cells
        .par_iter()
        .filter_map(|&(n, k)| match oracle(Family::ExtLah, n, k, 0, DEFAULT_CELL_CAP) {
            Ok(o) if o == Value::from(hsu_shiue(n, k)) => None,
            Ok(o) => Some(format!("({n},{k}): {} != {o}", hsu_shiue(n, k))),
            Err(e) => Some(e.to_string()),
        })
        .collect();
    let o = Outcome::new(
        bad.is_empty(),
        "generalized Stirling numbers equal weighted counts of extended Lah distributions, n <= 7",
    );
    bad.into_iter().take(3).fold(o, Outcome::detail)
}

fn run_identities(names: &[&str]) -> (Vec<String>, Vec<String>) {
    let ctx = Ctx::default();
    let mut lines = Vec::new();
    let mut failed = Vec::new();
    for name in names {
        let r = check_named(name, &Grid::default(), &ctx).expect("registered");
        if r.status != Status::Pass {
            failed.push(name.to_string());
        }
        lines.push(r.line());
    }
    (lines, failed)
}

fn identity_suite() -> Outcome {
    let suite = [
        "I-SPIVEY", "I-MEZO-1", "I-MEZO-2", "I-PE1", "I-P1E1", "I-P1E2", "I-P2E1", "I-P2E2",
        "I-T3E1", "I-T3E2", "I-T4E1", "I-T4E2", "I-T4E3", "I-T4C1", "I-T5E1", "I-T5E2",
    ];
    let (lines, failed) = run_identities(&suite);
    let mut o = Outcome::new(
        failed.is_empty(),
        format!("{} identities on their default grids, {} failing {:?}", suite.len(), failed.len(), failed),
    );
    for l in lines.into_iter().filter(|l| !l.starts_with("PASS")) {
        o = o.detail(l);
    }
    let corrected: Vec<&str> = suite.iter().map(|&n| if n == "I-PE1" { "I-PE1-CORR" } else { n }).collect();
    let (_, still) = run_identities(&corrected);
    let (corr_line, _) = run_identities(&["I-PE1-CORR"]);
    o.detail(format!(
        "with the q^C(r,2) weight restored (I-PE1-CORR): {} failing; {}",
        still.len(),
        corr_line[0]
    ))
}

fn minus_one() -> Outcome {
    let m1 = BigInt::from(-1);
    let mut problems = Vec::new();
    for n in 0..=20i64 {
        for k in 0..=n {
            let plain = big(if (k * (k - 1) / 2) % 2 == 0 { 1 } else { -1 } * binom(n - k / 2 - 1, n - k));
            let got = stirling2_q(n as usize, k as usize, 0).eval(&m1);
            if got != plain {
                problems.push(format!("r=0 closed form at ({n},{k}): {got} != {plain}"));
            }
            let s1 = if (k * (k + 1) / 2) % 2 == 0 { 1 } else { -1 };
            let one = big(s1 * binom(n - (k + 1) / 2, k / 2));
            let got = stirling2_q(n as usize, k as usize, 1).eval(&m1);
            if got != one {
                problems.push(format!("r=1 closed form at ({n},{k}): {got} != {one}"));
            }
        }
    }
    let bin_grid = Grid {
        m: Some(Span::new(1, 10)),
        n: Some(Span::new(1, 10)),
        k: None,
        r: None,
        max_total: None,
    };
    let mut bin_lines = Vec::new();
    for name in ["I-BIN-1", "I-BIN-2", "I-BIN-3", "I-BIN-4"] {
        let r = check_named(name, &bin_grid, &Ctx::default()).expect("registered");
        if r.status != Status::Pass {
            problems.push(r.line());
        }
        bin_lines.push(format!("{} {} ({} cells)", r.status, name, r.cells_checked));
    }

    // Literal parity claim: even r gives the r = 0 values, odd r the r = 1 values.
    let mut parity_bad = None;
    let mut signed_bad = None;
    for r in 0..=4usize {
        for n in 0..=12 {
            for k in 0..=n {
                let base = stirling2_q(n, k, r % 2).eval(&m1);
                let got = stirling2_q(n, k, r).eval(&m1);
                if parity_bad.is_none() && got != base {
                    parity_bad = Some(format!("(n,k,r)=({n},{k},{r}): {got} != {base}"));
                }
                let sign = if (r * r.saturating_sub(1) / 2) % 2 == 0 { 1 } else { -1 };
                if signed_bad.is_none() && got != &base * BigInt::from(sign) {
                    signed_bad = Some(format!("({n},{k},{r})"));
                }
            }
        }
    }
    if let Some(p) = &parity_bad {
        problems.push(format!("evaluations at q=-1 do not depend on r only through its parity: {p}"));
    }
    let mut o = Outcome::new(
        problems.is_empty(),
        "q=-1 closed forms (n <= 20), I-BIN-1..4 (1 <= m,n <= 10), parity in r (r <= 4, n <= 12)",
    );
    for p in problems.iter().take(4) {
        o = o.detail(p.clone());
    }
    o = o.detail(bin_lines.join(", "));
    o.detail(match signed_bad {
        None => "with the sign (-1)^C(r,2): S^(r) at q=-1 equals (-1)^C(r,2) times the r mod 2 value for all r <= 4, n <= 12".to_string(),
        Some(c) => format!("signed parity also fails at {c}"),
    })
}

fn lah_closed_and_qbin() -> Outcome {
    let mut problems = Vec::new();
    for n in 0..=20 {
        for k in 0..=n {
            if lah_q_closed(n, k) != lah_q_recurrence(n, k) {
                problems.push(format!("closed form differs from recurrence at ({n},{k})"));
            }
        }
    }
    let grid = Grid {
        m: Some(Span::new(0, 6)),
        n: Some(Span::new(0, 6)),
        k: Some(Span::new(0, 6)),
        r: None,
        max_total: None,
    };
    let r = check_named("I-QBIN", &grid, &Ctx::default()).expect("registered");
    if r.status != Status::Pass {
        problems.push(r.line());
    }
    let o = Outcome::new(
        problems.is_empty(),
        format!("q-Lah closed form equals recurrence (n <= 20); I-QBIN on {} cells", r.cells_checked),
    );
    problems.into_iter().take(3).fold(o, Outcome::detail)
}

fn connection_constants() -> Outcome {
    let mut problems = Vec::new();
    let r = check_named("I-GENREC", &Grid::default(), &Ctx::default()).expect("registered");
    if r.status != Status::Pass {
        problems.push(r.line());
    }
    let s2 = stirling2_ref(10);
    let lah = lah_ref(10);
    let mut alpha_minus = None;
    let mut alpha_plus = None;
    let mut minus_is_delta = true;
    for n in 0..=10 {
        for k in 0..=n {
            let h = hsu_shiue(n, k);
            if h.eval_int([0, 1, 0, 0]) != big(s2[n][k]) {
                problems.push(format!("(0,1,0) at ({n},{k}) is not S(n,k)"));
            }
            let got = h.eval_int([-1, 1, 0, 0]);
            if alpha_minus.is_none() && got != big(lah[n][k]) {
                alpha_minus = Some(format!("(n,k)=({n},{k}): {got} != L = {}", lah[n][k]));
            }
            if alpha_plus.is_none() && h.eval_int([1, 1, 0, 0]) != big(lah[n][k]) {
                alpha_plus = Some(format!("({n},{k})"));
            }
            if got != big(i128::from(n == k)) {
                minus_is_delta = false;
            }
        }
    }
    if let Some(c) = &alpha_minus {
        problems.push(format!("(alpha,beta,r)=(-1,1,0) does not give the Lah triangle: {c}"));
    }
    let mut o = Outcome::new(
        problems.is_empty(),
        "connection-constant identity (n <= 8) and classical specializations (n <= 10)",
    );
    for p in problems {
        o = o.detail(p);
    }
    o = o.detail(format!("{} I-GENREC ({} cells, symbolic in x, alpha, beta, r)", r.status, r.cells_checked));
    o = o.detail(match alpha_plus {
        None => "(alpha,beta,r)=(1,1,0) gives the Lah triangle for all n <= 10".into(),
        Some(c) => format!("(1,1,0) also misses the Lah triangle at {c}"),
    });
    if minus_is_delta {
        o = o.detail("(alpha,beta,r)=(-1,1,0) gives the identity matrix for all n <= 10");
    }
    o
}

fn bijection() -> Outcome {
    let mut cases = Vec::new();
    for total in 2..=6 {
        for m in 1..total {
            for k in 0..=total {
                cases.push((m, total - m, k));
            }
        }
    }
    let results: Vec<(usize, Option<String>)> = cases
        .par_iter()
        .map(|&(m, n, k)| {
            let mut count = 0;
            for lambda in enum_extended_lah(m + n, k) {
                count += 1;
                let fail = |why: &str| Some(format!("m={m} n={n} {lambda}: {why}"));
                let s = match split_lah(&lambda, m, n) {
                    Ok(s) => s,
                    Err(e) => return (count, fail(&e.to_string())),
                };
                match join_lah(&s, m, n) {
                    Ok(back) if back == lambda => {}
                    _ => return (count, fail("join does not invert split")),
                }
                if weight(&lambda) != &weight(&s.sigma) * &weight(&s.tau) {
                    return (count, fail("weight is not the product"));
                }
                let sig: BTreeSet<usize> = s.sigma.blocks().iter().flatten().copied().collect();
                let rest: Vec<usize> = (1..=m + n).filter(|e| !sig.contains(e)).collect();
                let blocks: BTreeSet<&Vec<usize>> = lambda.blocks().iter().collect();
                for b in s.tau.true_block_indices() {
                    let back: Vec<usize> = s.tau.blocks()[b].iter().map(|&e| rest[e - 1]).collect();
                    if !blocks.contains(&back) {
                        return (count, fail("a true block of tau is not a block of lambda"));
                    }
                }
                if s.tau.true_blocks() + s.j != k {
                    return (count, fail("true blocks do not add up"));
                }
            }
            (count, None)
        })
        .collect();
    let checked: usize = results.iter().map(|r| r.0).sum();
    let bad: Vec<String> = results.into_iter().filter_map(|r| r.1).collect();
    let o = Outcome::new(
        bad.is_empty(),
        format!("split/join round trip, weight product and true blocks on {checked} distributions, m+n <= 6"),
    );
    bad.into_iter().take(3).fold(o, Outcome::detail)
}

fn sanity_values() -> Outcome {
    let mut problems = Vec::new();
    let bells = bell_ref(7);
    let expected = [1, 1, 2, 5, 15, 52, 203];
    for (n, &b) in expected.iter().enumerate() {
        if bells[n] != b || at1(&bell_q(n, 0)) != big(b) {
            problems.push(format!("Bell({n}) != {b}"));
        }
    }
    if stirling1_ref(4)[4][2] != 11 || at1(&stirling1_q(4, 2, 0)) != big(11) {
        problems.push("c(4,2) != 11".into());
    }
    if lah_ref(3)[3][2] != 6 || at1(&lah_q(3, 2, 0)) != big(6) {
        problems.push("L(3,2) != 6".into());
    }
    let mut fact: i128 = 1;
    for n in 0..=7usize {
        if n > 0 {
            fact *= n as i128;
        }
        let listed = enum_extended_lah(n, 0).count() as i128;
        if listed != fact || hsu_shiue(n, 0).eval_int([1, 1, 1, 0]) != big(fact) {
            problems.push(format!("|L*_({n},0)| != {n}!"));
        }
    }
    let o = Outcome::new(problems.is_empty(), "Bell numbers, c(4,2) = 11, L(3,2) = 6, |L*_(n,0)| = n! for n <= 7");
    problems.into_iter().fold(o, Outcome::detail)
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("1", oracle_equivalence),
        ("2", weighted_count),
        ("3", identity_suite),
        ("4", minus_one),
        ("5", lah_closed_and_qbin),
        ("6", connection_constants),
        ("7", bijection),
        ("8", sanity_values),
    ];
    let mut failures = 0;
    for (id, run) in criteria {
        let start = Instant::now();
        let o = run();
        let status = if o.ok { "PASS" } else { "FAIL" };
        println!("{status} criterion {id}: {} [{:.2?}]", o.summary, start.elapsed());
        for d in &o.details {
            println!("     {d}");
        }
        failures += usize::from(!o.ok);
    }
    println!("{} of 8 criteria pass", 8 - failures);
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
