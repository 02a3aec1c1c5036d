//! Commutants on tensor space: the q-Brauer algebra as the centralizer of the
//! quantum group, the q-Schur superalgebra, and the classical comparison.

use std::time::Instant;

use pq_core::centralizer::{verify_brauer_centralizer, verify_double_centralizer, CommutantProblem, SolveMode};

fn main() {
    let n: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(2);
    let l: usize = std::env::args().nth(2).and_then(|a| a.parse().ok()).unwrap_or(2);
    let double = std::env::args().any(|a| a == "--double");
    let p = CommutantProblem::uqpn(n, l).unwrap();
    println!("quantum group side: {} generators, unknowns after weight reduction {:?}", p.generators.len(), p.unknown_counts());

    for mode in [SolveMode::EvaluationVerified, SolveMode::Symbolic] {
        let t = Instant::now();
        let r = verify_brauer_centralizer(n, l, mode, 7);
        println!("{}  ({:.2}s)", r.text_line(), t.elapsed().as_secs_f64());
    }
    if double {
        let t = Instant::now();
        let r = verify_double_centralizer(n, l);
        println!("{}  ({:.2}s)", r.text_line(), t.elapsed().as_secs_f64());
    }
}
