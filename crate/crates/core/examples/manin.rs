//! The Manin triple behind p_n and the supercobracket it induces.

use pq_core::bialgebra::{cobracket, verify_casimir_duality, verify_cobracket_via_s};
use pq_core::periplectic::{pn_tags, verify_manin_triple};
use pq_core::uqpn::verify_cobracket_limit;

fn main() {
    let n: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(2);
    println!("{}", verify_manin_triple(n).text_line());
    println!("casimir duality: {:?}", verify_casimir_duality(n));
    for t in pn_tags(n).into_iter().take(4) {
        let d = cobracket(t);
        println!("delta(E[{},{}]) has {} terms", t.i, t.j, d.len());
        for ((a, b), c) in &d {
            println!("  {c} E[{},{}] (x) E[{},{}]", a.i, a.j, b.i, b.j);
        }
    }
    println!("{}", verify_cobracket_via_s(n).text_line());
    println!("{}", verify_cobracket_limit(n).text_line());
}
