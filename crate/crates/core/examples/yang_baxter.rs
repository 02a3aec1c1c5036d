//! Classical and quantum Yang-Baxter checks for the periplectic S-matrix.

use pq_core::bialgebra::verify_cybe;
use pq_core::smatrix::{build_s, verify_decomposition, verify_proof_lemmas, verify_qybe, Mode};

fn main() {
    let n: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(2);
    let s = build_s(n);
    println!("S for n={n}: {} nonzero entries on a {}-dimensional space", s.op.nnz(), s.op.space().dim_legs(2));
    for r in [
        verify_cybe(n),
        verify_decomposition(n),
        verify_qybe(n, Mode::Symbolic, 0),
        verify_qybe(n, Mode::Sampled, 11),
        verify_proof_lemmas(n),
    ] {
        println!("{}", r.text_line());
    }
}
