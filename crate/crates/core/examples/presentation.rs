//! Relations of the RTT presentation, the vector representation and PBW straightening.

use pq_core::smatrix::Mode;
use pq_core::uqpn::{
    extract_relations, parse_word, verify_classical_limit, verify_cobracket_limit, verify_pbw, verify_relations,
    verify_representations, AlgebraElement, Straightener,
};
use pq_core::scalar::Frac;

fn main() -> pq_core::Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(2);
    let rels = extract_relations(n);
    println!("n={n}: {} nonzero quadratic relations", rels.len());
    if let Some(r) = rels.relations.first() {
        println!("  first, read off at {:?}: {}", r.index, r.element);
    }

    let st = Straightener::new(n)?;
    let word = if n >= 2 { "t(1,-2) t(2,2)" } else { "t(1,-1) t(1,1)" };
    if let Some(w) = parse_word(n, word)? {
        let e = AlgebraElement::from_word(w, Frac::one());
        let (r, steps) = st.straighten_counted(&e)?;
        println!("straighten {word} -> {r} ({steps} steps)");
    }

    for r in [
        verify_relations(n, Mode::Symbolic, 0),
        verify_representations(n, 3),
        verify_pbw(n, 2, 1),
        verify_classical_limit(n),
        verify_cobracket_limit(n),
    ] {
        println!("{}", r.text_line());
    }
    Ok(())
}
