mod common;

use std::collections::HashSet;

use invbraid::eval::{
    eval_word, normal_form_representatives, rho_b, verify_presentation, EvalContext,
};
use invbraid::perm::cardinality_formula;
use invbraid::presentation::{epsilon_block, relations_for, BlockVariant, PresentationId};
use invbraid::{EnumerationCaps, Generator, SignedPartialPerm, Word};
use rand::Rng;

#[test]
fn every_table_verifies() {
    for id in PresentationId::ALL {
        let max = if id.is_signed() { 4 } else { 5 };
        for n in 1..=max {
            let report = verify_presentation(id, n).unwrap();
            assert!(
                report.all_equal,
                "{id} at n={n}: {:?}",
                report.failures().next()
            );
            assert_eq!(report.pairs.len(), relations_for(id, n).len());
        }
    }
}

#[test]
fn dropping_a_relation_side_is_detected() {
    // Sanity check on the checker: a false relation must be reported.
    let w = Word::parse("e s1", 2).unwrap();
    let v = Word::parse("s1 e", 2).unwrap();
    let ctx = EvalContext::signed(2);
    assert_ne!(eval_word(&w, ctx).unwrap(), eval_word(&v, ctx).unwrap());
}

#[test]
fn balanced_generators_are_conjugates_of_epsilon() {
    for n in 2..=5 {
        for i in 1..n {
            let target = rho_b(&Word::new(n, vec![Generator::EpsI(i + 1)]).unwrap()).unwrap();
            for (a, b) in [
                (Generator::Sigma(i), Generator::Sigma(i)),
                (Generator::SigmaInv(i), Generator::SigmaInv(i)),
                (Generator::Sigma(i), Generator::SigmaInv(i)),
                (Generator::SigmaInv(i), Generator::Sigma(i)),
            ] {
                let w = Word::new(n, vec![a, Generator::EpsI(i), b]).unwrap();
                assert_eq!(rho_b(&w).unwrap(), target);
            }
        }
        let e = Word::new(n, vec![Generator::Eps]).unwrap();
        let e1 = Word::new(n, vec![Generator::EpsI(1)]).unwrap();
        assert_eq!(rho_b(&e).unwrap(), rho_b(&e1).unwrap());
    }
}

#[test]
fn free_reduction_preserves_images() {
    let mut rng = common::rng(1);
    for _ in 0..1000 {
        let n = rng.gen_range(1..=4);
        let w = common::random_word(&mut rng, n, 24, &common::alphabet(n, true, true));
        let r = w.free_reduce();
        assert!(r.len() <= w.len());
        assert_eq!(r.free_reduce(), r);
        assert_eq!(rho_b(&w).unwrap(), rho_b(&r).unwrap(), "{w}");
    }
}

#[test]
fn epsilon_blocks_agree() {
    for n in 0..=5 {
        for k in 0..=n {
            let c = epsilon_block(k, n, BlockVariant::Conjugated).unwrap();
            let p = epsilon_block(k, n, BlockVariant::Product).unwrap();
            assert_eq!(p.len(), n - k);
            assert_eq!(rho_b(&c).unwrap(), rho_b(&p).unwrap(), "k={k} n={n}");
        }
    }
    assert_eq!(
        epsilon_block(4, 5, BlockVariant::Product)
            .unwrap()
            .to_string(),
        "e5"
    );
}

#[test]
fn normal_form_images_cover_the_monoid() {
    let caps = EnumerationCaps::default();
    for n in 1..=3 {
        for signed in [true, false] {
            let words = normal_form_representatives(n, signed, caps).unwrap();
            let ctx = EvalContext { rank: n, signed };
            let images: HashSet<SignedPartialPerm> =
                words.iter().map(|w| eval_word(w, ctx).unwrap()).collect();
            assert_eq!(cardinality_formula(n, signed), images.len().into());
            assert_eq!(words.len(), images.len());
        }
    }
}
