#![allow(dead_code)]

use invbraid::free::{FreeWord, PartialFreeIso};
use invbraid::{Generator, SignedPartialPerm, Word};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// Letters of the type-B alphabet at rank `n`, optionally with ε letters.
pub fn alphabet(n: usize, with_eps: bool, with_tau: bool) -> Vec<Generator> {
    let mut out = Vec::new();
    for i in 1..n {
        out.push(Generator::Sigma(i));
        out.push(Generator::SigmaInv(i));
    }
    if with_tau && n >= 1 {
        out.push(Generator::Tau);
        out.push(Generator::TauInv);
    }
    if with_eps {
        if n >= 1 {
            out.push(Generator::Eps);
        }
        out.extend((1..=n).map(Generator::EpsI));
    }
    out
}

pub fn random_word(rng: &mut StdRng, n: usize, max_len: usize, letters: &[Generator]) -> Word {
    let len = rng.gen_range(0..=max_len);
    let ls = (0..len).map(|_| *letters.choose(rng).unwrap()).collect();
    Word::new(n, ls).unwrap()
}

pub fn random_unsigned(rng: &mut StdRng, n: usize) -> SignedPartialPerm {
    let mut targets: Vec<usize> = (1..=n).collect();
    targets.shuffle(rng);
    let map = targets
        .into_iter()
        .map(|t| rng.gen_bool(0.75).then_some(invbraid::Arrow::plus(t)))
        .collect();
    SignedPartialPerm::from_arrows(map).unwrap()
}

pub fn random_free_word(rng: &mut StdRng, gens: &[usize], max_len: usize) -> FreeWord {
    if gens.is_empty() {
        return FreeWord::default();
    }
    let len = rng.gen_range(0..=max_len);
    let letters: Vec<(usize, i8)> = (0..len)
        .map(|_| {
            (
                *gens.choose(rng).unwrap(),
                if rng.gen_bool(0.5) { 1 } else { -1 },
            )
        })
        .collect();
    FreeWord::new(&letters)
}

pub fn random_efn(rng: &mut StdRng, n: usize, max_conj: usize) -> PartialFreeIso {
    let a = random_unsigned(rng, n);
    let image = a.image();
    let conj = a
        .arrows()
        .iter()
        .map(|x| x.map(|_| random_free_word(rng, &image, max_conj)))
        .collect();
    PartialFreeIso::new(a, conj).unwrap()
}
