//! The q-Brauer action on tensor space: relations, module maps and image dimensions.

use pq_core::qbrauer::{
    format_brauer_word, image_span, parse_brauer_word, verify_brauer, verify_module_homs, verify_ps_formula,
    verify_q1_degeneration, BrauerRep,
};

fn main() {
    let n: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(2);
    let l: usize = std::env::args().nth(2).and_then(|a| a.parse().ok()).unwrap_or(3);
    let rep = BrauerRep::new(n, l).expect("at least two legs");
    let w = parse_brauer_word(l, "c1 t1").unwrap();
    let op = rep.evaluate_word(&w).unwrap();
    println!("{} acts on {} dimensions with {} nonzero entries", format_brauer_word(&w), op.space().dim_legs(l), op.nnz());

    let mut reports = vec![verify_brauer(n, l), verify_ps_formula(n), verify_q1_degeneration(n, l)];
    if n <= 2 {
        reports.push(verify_module_homs(n));
    }
    for r in reports {
        println!("{}", r.text_line());
    }

    let span = image_span(&rep).unwrap();
    println!("image algebra: dimension {} (new words per length: {:?})", span.dim(), span.growth);
    for w in span.words.iter().take(8) {
        println!("  {}", format_brauer_word(w));
    }
}
