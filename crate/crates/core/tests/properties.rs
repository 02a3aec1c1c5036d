use proptest::prelude::*;

use pq_core::centralizer::supercommutes;
use pq_core::linalg::{flatten_frac, Echelon};
use pq_core::qbrauer::{format_brauer_word, image_span, parse_brauer_word, tokens, BrauerRep, Token};
use pq_core::scalar::{Frac, Scalar};
use pq_core::uqpn::{extract_relations, RelationSet, Representation};

fn word(l: usize, max_len: usize) -> impl Strategy<Value = Vec<Token>> {
    let toks = tokens(l);
    proptest::collection::vec(proptest::sample::select(toks), 0..=max_len)
}

fn scalar() -> impl Strategy<Value = Scalar> {
    proptest::collection::vec((-3i32..=3, -5i64..=5), 0..4).prop_map(|ts| {
        ts.into_iter().fold(Scalar::zero(), |acc, (e, c)| &acc + &Scalar::monomial(pq_core::scalar::rat_int(c), e))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn evaluation_is_multiplicative(a in word(3, 4), b in word(3, 4)) {
        let rep = BrauerRep::new(2, 3).unwrap();
        let ab: Vec<Token> = a.iter().chain(b.iter()).copied().collect();
        let lhs = rep.evaluate_word(&ab).unwrap();
        let rhs = rep.evaluate_word(&a).unwrap().compose(&rep.evaluate_word(&b).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn word_images_commute_with_the_quantum_group(w in word(3, 5)) {
        let rep = BrauerRep::new(1, 3).unwrap();
        let rho = Representation::new(1, 3).unwrap();
        let gens: Vec<_> = pq_core::uqpn::generators(1).into_iter().map(|g| rho.image(g).clone()).collect();
        prop_assert!(supercommutes(&rep.evaluate_word(&w).unwrap(), &gens));
    }

    #[test]
    fn long_words_lie_in_the_stabilized_span(w in word(3, 9)) {
        let rep = BrauerRep::new(1, 3).unwrap();
        let span = image_span(&rep).unwrap();
        let mut e = Echelon::new();
        for op in &span.ops {
            e.insert(&flatten_frac(op));
        }
        prop_assert!(e.contains(&flatten_frac(&rep.evaluate_word(&w).unwrap())));
    }

    #[test]
    fn brauer_words_round_trip(w in word(4, 6)) {
        let text = format_brauer_word(&w);
        let back = if w.is_empty() { Vec::new() } else { parse_brauer_word(4, &text).unwrap() };
        prop_assert_eq!(back, w);
    }

    #[test]
    fn fractions_round_trip(a in scalar(), b in scalar()) {
        prop_assume!(!b.is_zero());
        let f = Frac::new(a, b).unwrap();
        let back: Frac = f.to_string().parse().unwrap();
        prop_assert_eq!(back, f);
    }
}

#[test]
fn relation_sets_round_trip() {
    for n in 1..=2 {
        let r = extract_relations(n);
        assert_eq!(RelationSet::from_json(&r.to_json()).unwrap(), r);
    }
}
