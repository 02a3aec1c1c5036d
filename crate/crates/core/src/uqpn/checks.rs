//! Verification reports for the presentation: relations, representations and PBW straightening.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::report::{ReportBuilder, VerificationReport};
use crate::scalar::{Frac, Scalar};
use crate::smatrix::{sample_q_values, Mode};
use crate::superspace::SuperSpace;
use crate::uqpn::element::AlgebraElement;
use crate::uqpn::pbw::{is_reduced_element, Straightener};
use crate::uqpn::relations::{all_generators_coassociative, closed_form_relation, counit_candidate_holds, extract_relations};
use crate::uqpn::representation::Representation;
use crate::uqpn::symbol::{generators, word_parity, Letter};

/// Mechanical extraction against the closed form, plus coproduct checks.
pub fn verify_relations(n: usize, mode: Mode, seed: u64) -> VerificationReport {
    let mut rb = ReportBuilder::new("relations", "RTT extraction equals the closed-form relations")
        .param("n", n)
        .param("mode", serde_json::to_value(mode).unwrap());
    let rels = extract_relations(n);
    let idx = SuperSpace::new(n).indices();
    let mut quads = Vec::new();
    for &i in &idx {
        for &j in &idx {
            for &k in &idx {
                for &l in &idx {
                    quads.push((i, j, k, l));
                }
            }
        }
    }
    let zero = AlgebraElement::zero();
    match mode {
        Mode::Symbolic => {
            let bad: Vec<String> = quads
                .iter()
                .filter(|&&(i, j, k, l)| *rels.get((i, j, k, l)).unwrap_or(&zero) != closed_form_relation(n, i, j, k, l))
                .map(|q| format!("{q:?}"))
                .collect();
            rb.detail(
                "closed form",
                bad.is_empty(),
                if bad.is_empty() { format!("{} quadruples agree exactly", quads.len()) } else { format!("differ at {}", bad.join(" ")) },
            );
        }
        Mode::Sampled => {
            rb.set_param("seed", seed);
            for x in sample_q_values(seed, 5) {
                let mut agree = 0usize;
                let mut err = None;
                for &(i, j, k, l) in &quads {
                    let a = rels.get((i, j, k, l)).unwrap_or(&zero).specialize(&x);
                    let b = closed_form_relation(n, i, j, k, l).specialize(&x);
                    match (a, b) {
                        (Ok(a), Ok(b)) if a == b => agree += 1,
                        (Ok(_), Ok(_)) => {}
                        (Err(e), _) | (_, Err(e)) => err = Some(e.to_string()),
                    }
                }
                rb.detail(
                    format!("closed form at q={x}"),
                    agree == quads.len() && err.is_none(),
                    format!("{agree} of {} quadruples agree{}", quads.len(), err.map(|e| format!("; {e}")).unwrap_or_default()),
                );
            }
        }
    }
    rb.set_param("relations", rels.len());
    rb.detail("coassociative", all_generators_coassociative(n), "(Δ⊗1)Δ = (1⊗Δ)Δ on every generator");
    let counit = generators(n).into_iter().all(|g| counit_candidate_holds(n, g));
    rb.detail("counit candidate", counit, "ε(t_ij) = δ_ij satisfies (ε⊗1)Δ = id = (1⊗ε)Δ on generators");
    rb.finish()
}

/// Every extracted relation maps to zero under `ρ_l`, `1 ≤ l ≤ max_legs`.
pub fn verify_representations(n: usize, max_legs: usize) -> VerificationReport {
    let mut rb = ReportBuilder::new("representations", "relations hold in the tensor powers of the vector representation")
        .param("n", n)
        .param("l", max_legs);
    let rels = extract_relations(n);
    for l in 1..=max_legs {
        let r = Representation::new(n, l).and_then(|rep| rep.failing_relations(&rels));
        rb.detail_result(format!("rho_{l}"), r, |bad| {
            (bad.is_empty(), format!("{} of {} relations annihilated", rels.len() - bad.len(), rels.len()))
        });
    }
    rb.finish()
}

// random homogeneous element with words of length 2..=max_len
fn random_element(rng: &mut ChaCha8Rng, n: usize, terms: usize, max_len: usize) -> AlgebraElement {
    let gens = generators(n);
    let mut e = AlgebraElement::zero();
    let target: u8 = rng.gen_range(0..2);
    let mut added = 0;
    while added < terms {
        let len = rng.gen_range(2..=max_len);
        let w: Vec<Letter> = (0..len).map(|_| Letter::T(gens[rng.gen_range(0..gens.len())])).collect();
        if word_parity(&w) != target {
            continue;
        }
        added += 1;
        let c: i64 = rng.gen_range(-3..=3);
        e.add_term(w, Frac::from(Scalar::from_int(if c == 0 { 1 } else { c })));
    }
    e
}

/// Straightening terminates on reduced monomials and preserves every `ρ_l`.
pub fn verify_pbw(n: usize, max_legs: usize, seed: u64) -> VerificationReport {
    let mut rb = ReportBuilder::new("pbw", "straightening spans by reduced monomials")
        .param("n", n)
        .param("l", max_legs)
        .param("seed", seed);
    let st = match Straightener::new(n) {
        Ok(s) => s,
        Err(e) => {
            rb.detail("rewriting table", false, e.to_string());
            return rb.finish();
        }
    };
    rb.detail("rewriting table", true, format!("{} rules from a relation span of rank {}", st.rules().len(), st.relation_rank()));
    let reps: Vec<Representation> = (1..=max_legs).filter_map(|l| Representation::new(n, l).ok()).collect();
    let gens = generators(n);
    let mut reduced = true;
    let mut preserved = true;
    let mut max_steps = 0usize;
    let mut errors = Vec::new();
    for &a in &gens {
        for &b in &gens {
            let e = AlgebraElement::from_word(vec![Letter::T(a), Letter::T(b)], Frac::one());
            match st.straighten_counted(&e) {
                Ok((r, steps)) => {
                    max_steps = max_steps.max(steps);
                    reduced &= is_reduced_element(&r);
                    preserved &= reps.iter().all(|rep| rep.agree(&e, &r).unwrap_or(false));
                }
                Err(err) => errors.push(err.to_string()),
            }
        }
    }
    rb.detail("quadratic words terminate", errors.is_empty(), format!("{} words, at most {max_steps} steps{}", gens.len() * gens.len(), if errors.is_empty() { String::new() } else { format!("; {}", errors.join("; ")) }));
    rb.detail("quadratic output reduced", reduced, "every output word is a reduced monomial");
    rb.detail("quadratic rho-preserving", preserved, format!("rho_l(straighten(w)) = rho_l(w) for l <= {max_legs}"));

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut ok = true;
    let mut idem = true;
    let samples = 12;
    for _ in 0..samples {
        let e = random_element(&mut rng, n, 3, 4);
        match st.straighten(&e) {
            Ok(r) => {
                ok &= is_reduced_element(&r) && reps.iter().all(|rep| rep.agree(&e, &r).unwrap_or(false));
                idem &= st.straighten(&r).map(|x| x == r).unwrap_or(false);
            }
            Err(_) => ok = false,
        }
    }
    rb.detail("random elements", ok, format!("{samples} random elements of degree <= 4 straighten to reduced, rho-equal elements"));
    rb.detail("idempotent", idem, "straightening a straightened element changes nothing");
    rb.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reports_n1() {
        for r in [verify_relations(1, Mode::Symbolic, 0), verify_relations(1, Mode::Sampled, 5), verify_representations(1, 3), verify_pbw(1, 2, 1)] {
            assert!(r.pass, "{}", r.text_line());
        }
    }
}
