//! The acceptance gate: one PASS/FAIL line per criterion.
//!
//! Every identity is exact (zero residual, no tolerance); the only pinned
//! numbers are the wall-clock limits.

use std::io::Write;
use std::process::Command;
use std::time::{Duration, Instant};

use pq_core::bialgebra::{verify_cobracket_via_s, verify_cybe};
use pq_core::centralizer::{verify_brauer_centralizer, SolveMode};
use pq_core::periplectic::verify_manin_triple;
use pq_core::qbrauer::{verify_brauer, verify_module_homs, verify_ps_formula, verify_q1_degeneration};
use pq_core::report::VerificationReport;
use pq_core::smatrix::{verify_decomposition, verify_proof_lemmas, verify_qybe, Mode};
use pq_core::uqpn::{verify_classical_limit, verify_cobracket_limit, verify_pbw, verify_relations, verify_representations};

struct Outcome {
    pass: bool,
    note: String,
}

fn all_pass(reports: &[VerificationReport]) -> Outcome {
    let failed: Vec<String> = reports.iter().filter(|r| !r.pass).map(|r| r.text_line()).collect();
    Outcome {
        pass: failed.is_empty(),
        note: if failed.is_empty() { format!("{} reports", reports.len()) } else { failed.join("; ") },
    }
}

fn param(r: &VerificationReport, key: &str) -> Option<u64> {
    r.params.get(key).and_then(|v| v.as_u64())
}

fn line(s: String) {
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "{s}");
    let _ = out.flush();
}

fn criterion(id: u32, name: &str, limit: Duration, f: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let out = f();
    let took = start.elapsed();
    let in_time = took <= limit;
    let pass = out.pass && in_time;
    line(format!(
        "{} {id:>2} {name}: {} ({:.2}s, limit {}s)",
        if pass { "PASS" } else { "FAIL" },
        out.note,
        took.as_secs_f64(),
        limit.as_secs()
    ));
    pass
}

fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

#[test]
fn acceptance() {
    let mut results = Vec::new();
    results.push(criterion(1, "Manin supertriple n=1..3", secs(10), || all_pass(&(1..=3).map(verify_manin_triple).collect::<Vec<_>>())));
    results.push(criterion(2, "classical Yang-Baxter n=1..3", secs(30), || all_pass(&(1..=3).map(verify_cybe).collect::<Vec<_>>())));
    results.push(criterion(3, "cobracket closed form vs [X(x)1+1(x)X, s] n=1..3", secs(30), || {
        all_pass(&(1..=3).map(verify_cobracket_via_s).collect::<Vec<_>>())
    }));
    results.push(criterion(4, "quantum Yang-Baxter, symbolic, n=1..3", secs(300), || {
        all_pass(&(1..=3).map(|n| verify_qybe(n, Mode::Symbolic, 0)).collect::<Vec<_>>())
    }));
    results.push(criterion(5, "proof lemmas and S decomposition n=1..3", secs(300), || {
        let mut r: Vec<_> = (1..=3).map(verify_proof_lemmas).collect();
        r.extend((1..=3).map(verify_decomposition));
        all_pass(&r)
    }));
    results.push(criterion(6, "relation extraction vs closed form (n<=2 symbolic, n=3 at 5 sampled q)", secs(300), || {
        let mut r: Vec<_> = (1..=2).map(|n| verify_relations(n, Mode::Symbolic, 0)).collect();
        let sampled = verify_relations(3, Mode::Sampled, 2024);
        let points = sampled.details.iter().filter(|d| d.name.starts_with("closed form at q=")).count();
        r.push(sampled);
        let mut o = all_pass(&r);
        o.pass &= points >= 5;
        o.note = format!("{}, {points} sample points at n=3", o.note);
        o
    }));
    results.push(criterion(7, "relations annihilated by rho_l, n<=2, l<=3", secs(300), || {
        all_pass(&(1..=2).map(|n| verify_representations(n, 3)).collect::<Vec<_>>())
    }));
    results.push(criterion(8, "classical limit n<=2", secs(300), || all_pass(&(1..=2).map(verify_classical_limit).collect::<Vec<_>>())));
    results.push(criterion(9, "cobracket limit n<=2", secs(300), || all_pass(&(1..=2).map(verify_cobracket_limit).collect::<Vec<_>>())));
    results.push(criterion(10, "PBW straightening of quadratic words n<=2", secs(300), || {
        all_pass(&(1..=2).map(|n| verify_pbw(n, 3, 17)).collect::<Vec<_>>())
    }));
    results.push(criterion(11, "q-Brauer relations, two-leg identities and PS formula, n<=3, l<=3", secs(120), || {
        let mut r = Vec::new();
        for n in 1..=3 {
            r.push(verify_ps_formula(n));
            for l in 2..=3 {
                r.push(verify_brauer(n, l));
            }
        }
        all_pass(&r)
    }));
    results.push(criterion(12, "theta and eps are module maps, n<=2", secs(300), || {
        all_pass(&(1..=2).map(verify_module_homs).collect::<Vec<_>>())
    }));
    results.push(criterion(13, "centralizer at (2,2) symbolic and (2,3) evaluation-verified", secs(600), || {
        let a = verify_brauer_centralizer(2, 2, SolveMode::Symbolic, 0);
        let b = verify_brauer_centralizer(2, 3, SolveMode::EvaluationVerified, 7);
        let dims = |r: &VerificationReport| {
            (param(r, "commutant_dim"), param(r, "image_dim"), param(r, "image_dim_q1"), param(r, "classical_commutant_dim"))
        };
        let (ca, ia, qa, cla) = dims(&a);
        let (cb, ib, qb, clb) = dims(&b);
        let three = [ca, ia, qa, cla].iter().all(|x| *x == Some(3));
        let agree = cb.is_some() && cb == ib && ib == qb && qb == clb;
        let mut o = all_pass(&[a, b]);
        o.pass &= three && agree;
        o.note = format!("(2,2): commutant {ca:?}, image {ia:?}, classical {cla:?}; (2,3): commutant {cb:?}, image {ib:?}, q=1 {qb:?}");
        o
    }));
    results.push(criterion(14, "q=1 degeneration of the token images, n<=3, l<=3", secs(300), || {
        let mut r = Vec::new();
        for n in 1..=3 {
            for l in 2..=3 {
                r.push(verify_q1_degeneration(n, l));
            }
        }
        all_pass(&r)
    }));
    results.push(criterion(15, "two runs of `verify all --n 2 --l 2` give identical JSON", secs(300), || {
        let run = || {
            Command::new(env!("CARGO_BIN_EXE_pq"))
                .args(["verify", "all", "--n", "2", "--l", "2", "--format", "json"])
                .env_remove("PQ_CACHE_DIR")
                .output()
                .expect("pq runs")
        };
        let (a, b) = (run(), run());
        let same = a.stdout == b.stdout && !a.stdout.is_empty();
        Outcome {
            pass: same && a.status.success() && b.status.success(),
            note: format!("{} bytes, identical: {same}, exit {:?}", a.stdout.len(), a.status.code()),
        }
    }));
    let failed = results.iter().filter(|p| !**p).count();
    line(format!("{} of {} criteria pass", results.len() - failed, results.len()));
    assert_eq!(failed, 0, "acceptance criteria failed");
}
