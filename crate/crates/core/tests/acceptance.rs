//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Values are exact; no tolerance applies anywhere.

use std::process::ExitCode;
use std::time::Instant;

use depthlab::bounds::{closed_form, f_value};
use depthlab::constructions::{chain_graph, grohe_graph};
use depthlab::harness::{enumerate_graphs, run_suite, Suite, SuiteParams, SuiteReport};
use depthlab::params::{check_certificate, td2_value, td_value, treedepth2};
use depthlab::paths::is_pt_free;
use depthlab::Graph;
use num_bigint::BigUint;

/// Plain `u128` binomial via Pascal's rule, independent of the library.
fn choose(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let mut row = vec![1u128];
    for _ in 0..n {
        let mut next = vec![1u128; row.len() + 1];
        for i in 1..row.len() {
            next[i] = row[i - 1] + row[i];
        }
        row = next;
    }
    row[k as usize]
}

/// The bound recursion written out directly.
fn f_plain(k: u64, t: u64) -> u128 {
    match (k, t) {
        (1, _) | (_, 2) => 1,
        (k, 3) => k as u128,
        (k, t) => f_plain(k, t - 2) + f_plain(k - 1, t) + 1,
    }
}

fn suite(s: Suite) -> SuiteReport {
    let p = SuiteParams::for_suite(s, []).expect("default params");
    run_suite(s, &p).unwrap_or_else(|e| panic!("{s}: {e}"))
}

fn summary(r: &SuiteReport) -> String {
    let mut s = format!("{}: {}/{} cases pass", r.suite, r.summary.passed, r.summary.total);
    if let Some(c) = r.failures().next() {
        s.push_str(&format!("; first failure {} ({})", c.id, c.failed.join(", ")));
    }
    s
}

type Outcome = (bool, String);
type Criterion = (&'static str, fn() -> Outcome);

fn criterion_1() -> Outcome {
    let mut ok = true;
    let mut notes = Vec::new();
    for m in 2..=12 {
        let (v, cert) = treedepth2(&Graph::path(m)).unwrap();
        ok &= v == 2 && check_certificate(&Graph::path(m), &cert);
    }
    for m in 3..=12 {
        let (v, cert) = treedepth2(&Graph::cycle(m)).unwrap();
        ok &= v == 3 && check_certificate(&Graph::cycle(m), &cert);
    }
    notes.push(format!("paths/cycles {}", if ok { "ok" } else { "wrong" }));
    let r = suite(Suite::Definitions);
    ok &= r.passed();
    notes.push(summary(&r));
    (ok, notes.join("; "))
}

fn criterion_2() -> Outcome {
    let r = suite(Suite::MainTheorem);
    let seed = &r.params["seed"];
    (r.passed(), format!("{} (seed {seed})", summary(&r)))
}

fn criterion_3() -> Outcome {
    let r = suite(Suite::P4P5);
    (r.passed(), summary(&r))
}

fn criterion_4() -> Outcome {
    let mut bad = 0;
    for k in 1..=12u64 {
        for t in (2..=24u64).step_by(2) {
            let r = (t - 1) / 2;
            let expect = 2 * choose(r + k - 1, r) - 1;
            let f = f_value(k, t).unwrap();
            if f != BigUint::from(expect)
                || f != closed_form(k, t).unwrap()
                || f_plain(k, t) != expect
            {
                bad += 1;
            }
        }
    }
    let mut p3_free = 0;
    let mut p3_bad = 0;
    for n in 0..=6 {
        for g in enumerate_graphs(n).unwrap() {
            if is_pt_free(&g, 3).unwrap() {
                p3_free += 1;
                let omega = g.clique_number().unwrap();
                if td_value(&g).unwrap() != omega || td2_value(&g).unwrap() != omega {
                    p3_bad += 1;
                }
            }
        }
    }
    (
        bad == 0 && p3_bad == 0,
        format!("closed form mismatches {bad}/144; P3-free graphs {p3_free}, td = omega = td2 violations {p3_bad}"),
    )
}

fn criterion_5() -> Outcome {
    let r = suite(Suite::Diam);
    (r.passed(), summary(&r))
}

fn criterion_6() -> Outcome {
    let r = suite(Suite::SCore);
    (r.passed(), summary(&r))
}

fn criterion_7() -> Outcome {
    let sizes = [((2, 2), 4), ((3, 2), 8), ((4, 2), 16), ((2, 3), 15)];
    let sizes_ok = sizes
        .iter()
        .all(|&((r, k), n)| grohe_graph(r, k).unwrap().n() == n);
    let r = suite(Suite::ConstructionsGrohe);
    let has_all = sizes
        .iter()
        .all(|((r_, k), _)| r.cases.iter().any(|c| c.id == format!("grohe(r={r_},k={k})")));
    (
        sizes_ok && has_all && r.passed(),
        format!("sizes {}; {}", if sizes_ok { "ok" } else { "wrong" }, summary(&r)),
    )
}

fn criterion_8() -> Outcome {
    let mut sizes_ok = true;
    for l in 1..=5u64 {
        for k in 1..=3u64 {
            let a = chain_graph(l as usize, k as usize).unwrap();
            sizes_ok &= a.graph.n() as u128 == choose(l + k - 1, k);
        }
    }
    for k in 1..=3 {
        sizes_ok &= chain_graph(2, k).unwrap().graph == Graph::complete(k + 1);
    }
    let r = suite(Suite::ConstructionsChain);
    (
        sizes_ok && r.passed() && r.summary.total == 15,
        format!("sizes and G(2,k) {}; {}", if sizes_ok { "ok" } else { "wrong" }, summary(&r)),
    )
}

fn criterion_9() -> Outcome {
    let r = suite(Suite::Extraction);
    let ran = r.cases.iter().filter(|c| c.values.contains_key("order")).count();
    (r.passed() && ran > 0, format!("{}; {ran} extractions", summary(&r)))
}

fn criterion_10() -> Outcome {
    let r = suite(Suite::Tightness);
    (r.passed() && r.summary.total == 12, summary(&r))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("definitions sanity", criterion_1),
        ("main bound on P_t-free graphs", criterion_2),
        ("P4-free and P5-free bounds", criterion_3),
        ("closed form of the recursion", criterion_4),
        ("block forest diameter", criterion_5),
        ("S-core equality", criterion_6),
        ("lower-bound construction", criterion_7),
        ("chain construction", criterion_8),
        ("induced path extraction", criterion_9),
        ("tightness on chain graphs", criterion_10),
    ];
    let mut all = true;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let (ok, detail) = run();
        all &= ok;
        println!(
            "criterion {:>2} {} {name}: {detail} [{:.1}s]",
            i + 1,
            if ok { "PASS" } else { "FAIL" },
            start.elapsed().as_secs_f64()
        );
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
