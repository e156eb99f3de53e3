mod common;

use std::collections::HashSet;

use invbraid::perm::{cardinality_formula, enumerate_elements, unit_group_order};
use invbraid::{Arrow, EnumerationCaps, Sign, SignedPartialPerm};
use proptest::prelude::*;

fn all(n: usize, signed: bool) -> Vec<SignedPartialPerm> {
    enumerate_elements(n, signed, EnumerationCaps::default())
        .unwrap()
        .collect()
}

/// Composition by explicit lookup in a table of images of `±v_j`.
fn compose_by_table(a: &SignedPartialPerm, b: &SignedPartialPerm) -> SignedPartialPerm {
    let n = a.n();
    let image = |p: &SignedPartialPerm, x: i64| -> Option<i64> {
        let j = x.unsigned_abs() as usize;
        let arrow = p.get(j)?;
        let y = arrow.target as i64 * arrow.sign.as_i8() as i64;
        Some(if x < 0 { -y } else { y })
    };
    let map = (1..=n as i64)
        .map(|j| {
            let y = image(b, image(a, j)?)?;
            Some(Arrow::new(
                y.unsigned_abs() as usize,
                if y < 0 { Sign::Minus } else { Sign::Plus },
            ))
        })
        .collect();
    SignedPartialPerm::from_arrows(map).unwrap()
}

#[test]
fn composition_matches_lookup_table_on_rank_two() {
    let elems = all(2, true);
    assert_eq!(elems.len(), 17);
    let id = SignedPartialPerm::identity(2);
    for a in &elems {
        assert_eq!(id.then(a).unwrap(), *a);
        assert_eq!(a.then(&id).unwrap(), *a);
        for b in &elems {
            assert_eq!(a.then(b).unwrap(), compose_by_table(a, b));
        }
    }
}

#[test]
fn negation_commutes_with_every_element() {
    for a in all(3, true) {
        let minus = |x: i64| -x;
        for j in 1..=3i64 {
            for x in [j, -j] {
                let apply = |x: i64| {
                    let arrow = a.get(x.unsigned_abs() as usize)?;
                    let y = arrow.target as i64 * arrow.sign.as_i8() as i64;
                    Some(if x < 0 { -y } else { y })
                };
                assert_eq!(apply(minus(x)), apply(x).map(minus));
            }
        }
    }
}

#[test]
fn enumeration_has_no_duplicates() {
    for n in 0..=4 {
        let elems = all(n, true);
        let distinct: HashSet<_> = elems.iter().collect();
        assert_eq!(distinct.len(), elems.len());
    }
}

#[test]
fn enumeration_matches_formulas() {
    for n in 0..=4 {
        let elems = all(n, true);
        assert_eq!(cardinality_formula(n, true), elems.len().into());
        let units = elems.iter().filter(|a| a.is_unit()).count();
        assert_eq!(unit_group_order(n, true), units.into());
    }
    for n in 0..=5 {
        let elems = all(n, false);
        assert!(elems.iter().all(SignedPartialPerm::is_unsigned));
        assert_eq!(cardinality_formula(n, false), elems.len().into());
        let units = elems.iter().filter(|a| a.is_unit()).count();
        assert_eq!(unit_group_order(n, false), units.into());
    }
}

#[test]
fn idempotents_commute_and_number_two_to_the_n() {
    for n in 0..=4 {
        let idems: Vec<_> = all(n, true)
            .into_iter()
            .filter(|a| a.is_idempotent())
            .collect();
        assert_eq!(idems.len(), 1 << n);
        for e in &idems {
            assert_eq!(e.then(e).unwrap(), *e);
            for f in &idems {
                assert_eq!(e.then(f).unwrap(), f.then(e).unwrap());
            }
        }
    }
}

#[test]
fn factorisation_round_trips() {
    for n in 0..=4 {
        for a in all(n, true) {
            let d = a.factorise();
            assert!(d.idem.is_idempotent());
            assert!(d.unit.is_unit());
            assert_eq!(d.idem.domain(), a.domain());
            assert_eq!(d.recompose(), a);
        }
    }
}

#[test]
fn inverse_is_an_anti_homomorphism() {
    let elems = all(2, true);
    for a in &elems {
        assert_eq!(a.inverse().inverse(), *a);
        for b in &elems {
            assert_eq!(
                a.then(b).unwrap().inverse(),
                b.inverse().then(&a.inverse()).unwrap()
            );
        }
    }
}

#[test]
fn empty_map_is_the_zero() {
    for n in 0..=3 {
        let z = SignedPartialPerm::empty(n);
        for a in all(n, true) {
            assert_eq!(z.then(&a).unwrap(), z);
            assert_eq!(a.then(&z).unwrap(), z);
        }
    }
}

#[test]
fn counting_formulas_grow_exactly() {
    assert_eq!(cardinality_formula(6, true).to_string(), "291793");
    assert_eq!(cardinality_formula(8, false).to_string(), "1441729");
    assert_eq!(
        unit_group_order(20, true).to_string(),
        "2551082656125828464640000"
    );
}

fn element(n: usize) -> impl Strategy<Value = SignedPartialPerm> {
    (Just(n), any::<u64>()).prop_map(|(n, seed)| {
        let mut rng = common::rng(seed);
        let mut a = common::random_unsigned(&mut rng, n);
        let flips: Vec<bool> = (0..n).map(|j| (seed >> j) & 1 == 1).collect();
        let map = a
            .arrows()
            .iter()
            .zip(flips)
            .map(|(x, f)| x.map(|x| Arrow::new(x.target, if f { x.sign.flip() } else { x.sign })))
            .collect();
        a = SignedPartialPerm::from_arrows(map).unwrap();
        a
    })
}

proptest! {
    #[test]
    fn text_and_json_round_trip(a in (0usize..=8).prop_flat_map(element)) {
        prop_assert_eq!(a.to_string().parse::<SignedPartialPerm>().unwrap(), a.clone());
        prop_assert_eq!(SignedPartialPerm::from_json(&a.to_json()).unwrap(), a);
    }
}
