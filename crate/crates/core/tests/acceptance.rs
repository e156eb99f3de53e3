//! Acceptance suite: one line per criterion, non-zero exit on any failure.
//!
//! Run with `cargo test -p invbraid --test acceptance`.

mod common;

use std::collections::HashSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use invbraid::abelian::abelianize;
use invbraid::eval::{
    certify_surjectivity, check_diagram, normal_form_representatives, rho_b, verify_presentation,
};
use invbraid::free::PartialFreeIso;
use invbraid::perm::{cardinality_formula, enumerate_elements, unit_group_order};
use invbraid::presentation::{epsilon_block, relations_for, BlockVariant, PresentationId};
use invbraid::{EnumerationCaps, Generator, SignedPartialPerm, Word};
use num_bigint::BigUint;
use rand::Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

const SIGNED_CARDINALITY: [u64; 5] = [1, 3, 17, 139, 1473];
const UNSIGNED_CARDINALITY: [u64; 6] = [1, 2, 7, 34, 209, 1546];
const UNIT_ORDER: [u64; 5] = [1, 2, 8, 48, 384];

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn caps() -> EnumerationCaps {
    EnumerationCaps::default()
}

/// Counts injective signed maps by running over every function
/// `{1..n} → {undefined, ±1, …, ±n}`.
fn brute_force_count(n: usize, signed: bool) -> u64 {
    let choices = if signed { 2 * n + 1 } else { n + 1 } as u64;
    let total = choices.pow(n as u32);
    (0..total)
        .filter(|&code| {
            let mut used = vec![false; n];
            let mut c = code;
            for _ in 0..n {
                let digit = (c % choices) as usize;
                c /= choices;
                if digit == 0 {
                    continue;
                }
                let target = (digit - 1) % n;
                if std::mem::replace(&mut used[target], true) {
                    return false;
                }
            }
            true
        })
        .count() as u64
}

fn cardinality() -> Outcome {
    let start = Instant::now();
    for (n, &frozen) in SIGNED_CARDINALITY.iter().enumerate() {
        let formula = cardinality_formula(n, true);
        let enumerated = enumerate_elements(n, true, caps()).unwrap().count() as u64;
        let oracle = brute_force_count(n, true);
        ensure(
            formula == BigUint::from(frozen) && enumerated == frozen && oracle == frozen,
            || format!("signed n={n}: formula {formula}, enumerated {enumerated}, oracle {oracle}"),
        )?;
    }
    for (n, &frozen) in UNSIGNED_CARDINALITY.iter().enumerate() {
        let formula = cardinality_formula(n, false);
        let enumerated = enumerate_elements(n, false, caps()).unwrap().count() as u64;
        let oracle = brute_force_count(n, false);
        ensure(
            formula == BigUint::from(frozen) && enumerated == frozen && oracle == frozen,
            || {
                format!(
                    "unsigned n={n}: formula {formula}, enumerated {enumerated}, oracle {oracle}"
                )
            },
        )?;
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(10), || {
        format!("took {elapsed:?}")
    })?;
    Ok(format!("I(B_4) = 1473, I_5 = 1546, {elapsed:.2?}"))
}

fn unit_count() -> Outcome {
    for (n, &frozen) in UNIT_ORDER.iter().enumerate() {
        let units = enumerate_elements(n, true, caps())
            .unwrap()
            .filter(SignedPartialPerm::is_unit)
            .count() as u64;
        let order = unit_group_order(n, true);
        ensure(units == frozen && order == BigUint::from(frozen), || {
            format!("n={n}: {units} units, formula {order}")
        })?;
    }
    Ok("|W(B_4)| = 384".into())
}

fn presentations() -> Outcome {
    let start = Instant::now();
    let ids = [
        PresentationId::Br,
        PresentationId::Ibn,
        PresentationId::IbnBal,
        PresentationId::In,
        PresentationId::Brb,
        PresentationId::Ibb,
        PresentationId::IbbBal,
        PresentationId::IbnQuot,
        PresentationId::IbbQuot,
    ];
    let mut checked = 0;
    for id in ids {
        for n in 2..=4 {
            let report = verify_presentation(id, n).map_err(|e| e.to_string())?;
            checked += report.pairs.len();
            let first_failure = report.failures().next().map(|bad| {
                format!(
                    "{id} n={n}: {} = {} gives {} vs {}",
                    bad.lhs, bad.rhs, bad.image_lhs, bad.image_rhs
                )
            });
            if let Some(msg) = first_failure {
                return Err(msg);
            }
        }
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(5), || {
        format!("took {elapsed:?}")
    })?;
    Ok(format!(
        "{checked} relation pairs, 0 failures, {elapsed:.2?}"
    ))
}

fn surjectivity() -> Outcome {
    for n in 1..=3 {
        ensure(certify_surjectivity(n, caps()).unwrap(), || {
            format!("n={n} has an element without a witness")
        })?;
    }
    Ok("n = 1, 2, 3".into())
}

fn normal_form_count() -> Outcome {
    for n in [2, 3] {
        let words = normal_form_representatives(n, true, caps()).unwrap();
        let images: HashSet<SignedPartialPerm> = words.iter().map(|w| rho_b(w).unwrap()).collect();
        let expected = SIGNED_CARDINALITY[n] as usize;
        ensure(images.len() == expected && words.len() == expected, || {
            format!(
                "n={n}: {} words, {} distinct images, expected {expected}",
                words.len(),
                images.len()
            )
        })?;
    }
    Ok("17 and 139 distinct images".into())
}

fn epsilon_blocks() -> Outcome {
    for n in 0..=5 {
        for k in 0..=n {
            let conj = rho_b(&epsilon_block(k, n, BlockVariant::Conjugated).unwrap()).unwrap();
            let prod = rho_b(&epsilon_block(k, n, BlockVariant::Product).unwrap()).unwrap();
            let expected = SignedPartialPerm::idempotent_on(n, 1..=k);
            ensure(conj == prod && prod == expected, || {
                format!("k={k} n={n}: conjugated {conj}, product {prod}")
            })?;
        }
    }
    Ok("0 <= k <= n <= 5".into())
}

fn inverse_axioms() -> Outcome {
    for n in 0..=3 {
        let all: Vec<SignedPartialPerm> = enumerate_elements(n, true, caps()).unwrap().collect();
        for a in &all {
            let inverses: Vec<&SignedPartialPerm> = all
                .iter()
                .filter(|b| {
                    let aba = a.then(b).unwrap().then(a).unwrap();
                    let bab = b.then(a).unwrap().then(b).unwrap();
                    aba == *a && bab == **b
                })
                .collect();
            ensure(inverses.len() == 1 && *inverses[0] == a.inverse(), || {
                format!("{a}: {} inverses found", inverses.len())
            })?;
        }
    }
    Ok("unique inverses in I(B_n), n <= 3".into())
}

fn efn_splitting() -> Outcome {
    for n in 0..=4 {
        for a in enumerate_elements(n, false, caps()).unwrap() {
            let f = PartialFreeIso::include(&a).unwrap();
            ensure(*f.project() == a, || {
                format!("project(include({a})) differs")
            })?;
        }
    }
    let mut rng = common::rng(8);
    for _ in 0..1000 {
        let n = rng.gen_range(1..=4);
        let f = common::random_efn(&mut rng, n, 4);
        let g = common::random_efn(&mut rng, n, 4);
        let lhs = f.then(&g).unwrap();
        let rhs = f.project().then(g.project()).unwrap();
        ensure(*lhs.project() == rhs, || {
            format!("project not multiplicative on {f} / {g}")
        })?;
    }
    Ok("exhaustive n <= 4, 1000 random pairs".into())
}

fn abelianization() -> Outcome {
    let mut pairs = 0;
    for n in 1..=4 {
        for r in relations_for(PresentationId::Ibb, n).pairs {
            pairs += 1;
            ensure(abelianize(&r.lhs) == abelianize(&r.rhs), || {
                format!("{} = {} at n={n}", r.lhs, r.rhs)
            })?;
        }
    }
    let mut rng = common::rng(9);
    for _ in 0..1000 {
        let n = rng.gen_range(1..=4);
        let w = common::random_word(&mut rng, n, 20, &common::alphabet(n, true, true));
        let cut = rng.gen_range(0..=w.len());
        let (u, v) = w.split_at(cut);
        ensure(abelianize(&w) == abelianize(&u) + abelianize(&v), || {
            format!("not multiplicative on {u} | {v}")
        })?;
    }
    for _ in 0..1000 {
        let n = rng.gen_range(2..=4);
        let w = common::random_word(&mut rng, n, 20, &common::alphabet(n, true, true));
        let square = if rng.gen_bool(0.5) {
            Generator::Tau
        } else {
            Generator::Sigma(rng.gen_range(1..n))
        };
        let pos = rng.gen_range(0..=w.len());
        let mut letters = w.letters().to_vec();
        letters.splice(pos..pos, [square, square]);
        let widened = Word::new(n, letters).unwrap();
        ensure(
            abelianize(&w).to_mod2() == abelianize(&widened).to_mod2(),
            || format!("mod-2 image changed by inserting {square}{square} into {w}"),
        )?;
    }
    Ok(format!("{pairs} IBB pairs, 1000 splits, 1000 insertions"))
}

fn diagram() -> Outcome {
    let mut rng = common::rng(10);
    let letters = common::alphabet(4, false, true);
    for _ in 0..1000 {
        let w = common::random_word(&mut rng, 4, 30, &letters);
        ensure(check_diagram(&w, 4).unwrap(), || {
            format!("square fails on {w}")
        })?;
    }
    Ok("1000 random words at n = 4".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("cardinality of I(B_n) and I_n", cardinality),
        ("unit group order", unit_count),
        ("presentation verification", presentations),
        ("surjectivity", surjectivity),
        ("normal-form counting", normal_form_count),
        ("epsilon-block equality", epsilon_blocks),
        ("inverse-monoid axioms", inverse_axioms),
        ("EF_n splitting", efn_splitting),
        ("abelianization well-definedness", abelianization),
        ("diagram commutativity", diagram),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("PASS  {:>2}. {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL  {:>2}. {name}: {why}", i + 1);
            }
        }
    }
    println!("{} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
