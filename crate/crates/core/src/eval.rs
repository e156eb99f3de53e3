//! Evaluation of words as signed partial permutations.
//!
//! σ_i swaps `v_i` and `v_{i+1}` keeping signs, τ negates `v_1`, ε_i is the
//! partial identity missing `v_i` and ε = ε_1. Inverse letters evaluate to the
//! inverses of their base letters, so τ⁻¹ and τ have the same image. A word
//! evaluates to the left-to-right product of its letters.

use itertools::Itertools;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::perm::{enumerate_elements, Arrow, EnumerationCaps, Sign, SignedPartialPerm};
use crate::presentation::{normal_form_word, relations_for, PresentationId};
use crate::word::{word, Generator, Word};

/// Selects the target monoid: `I(B_n)` when `signed`, otherwise `I_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EvalContext {
    pub rank: usize,
    pub signed: bool,
}

impl EvalContext {
    pub fn signed(rank: usize) -> Self {
        EvalContext { rank, signed: true }
    }

    pub fn unsigned(rank: usize) -> Self {
        EvalContext {
            rank,
            signed: false,
        }
    }
}

pub fn eval_generator(g: Generator, ctx: EvalContext) -> Result<SignedPartialPerm> {
    let n = ctx.rank;
    if !g.is_valid_at(n) {
        return Err(Error::InvalidLetter {
            letter: g.to_string(),
            rank: n,
        });
    }
    let mut map: Vec<Option<Arrow>> = (1..=n).map(|j| Some(Arrow::plus(j))).collect();
    match g {
        Generator::Sigma(i) | Generator::SigmaInv(i) => map.swap(i - 1, i),
        Generator::Tau | Generator::TauInv => {
            if !ctx.signed {
                return Err(Error::TauUnsigned);
            }
            map[0] = Some(Arrow::minus(1));
        }
        Generator::Eps => map[0] = None,
        Generator::EpsI(i) => map[i - 1] = None,
    }
    SignedPartialPerm::from_arrows(map)
}

pub fn eval_word(w: &Word, ctx: EvalContext) -> Result<SignedPartialPerm> {
    if w.rank() != ctx.rank {
        return Err(Error::RankMismatch(w.rank(), ctx.rank));
    }
    w.letters()
        .iter()
        .try_fold(SignedPartialPerm::identity(ctx.rank), |acc, &g| {
            acc.then(&eval_generator(g, ctx)?)
        })
}

/// ρ_B: evaluation into `I(B_n)` at the word's own rank.
pub fn rho_b(w: &Word) -> Result<SignedPartialPerm> {
    eval_word(w, EvalContext::signed(w.rank()))
}

/// ρ_n: evaluation into `I_n` at the word's own rank.
pub fn rho_n(w: &Word) -> Result<SignedPartialPerm> {
    eval_word(w, EvalContext::unsigned(w.rank()))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairReport {
    pub lhs: String,
    pub rhs: String,
    pub image_lhs: String,
    pub image_rhs: String,
    pub equal: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub id: String,
    pub n: usize,
    pub pairs: Vec<PairReport>,
    pub all_equal: bool,
}

impl VerificationReport {
    pub fn failures(&self) -> impl Iterator<Item = &PairReport> {
        self.pairs.iter().filter(|p| !p.equal)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serialization is infallible")
    }
}

/// Evaluates both sides of every relation of `id` at rank `n`. Type-B tables
/// evaluate into `I(B_n)`, the others into `I_n`.
pub fn verify_presentation(id: PresentationId, n: usize) -> Result<VerificationReport> {
    let ctx = EvalContext {
        rank: n,
        signed: id.is_signed(),
    };
    let table = relations_for(id, n);
    let pairs = table
        .pairs
        .iter()
        .map(|r| {
            let l = eval_word(&r.lhs, ctx)?;
            let rr = eval_word(&r.rhs, ctx)?;
            Ok(PairReport {
                lhs: r.lhs.to_string(),
                rhs: r.rhs.to_string(),
                image_lhs: l.to_string(),
                image_rhs: rr.to_string(),
                equal: l == rr,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(VerificationReport {
        id: id.name().to_string(),
        n,
        all_equal: pairs.iter().all(|p| p.equal),
        pairs,
    })
}

/// Signed permutation matrices acting on row vectors; `rows[j][t]` is the
/// coefficient of `v_t` in the image of `v_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
struct SignedMatrix {
    n: usize,
    rows: Vec<i32>,
}

impl SignedMatrix {
    fn identity(n: usize) -> Self {
        let mut rows = vec![0; n * n];
        for j in 0..n {
            rows[j * n + j] = 1;
        }
        SignedMatrix { n, rows }
    }

    fn generator(g: Generator, n: usize) -> Result<Self> {
        let mut m = SignedMatrix::identity(n);
        match g {
            Generator::Sigma(i) | Generator::SigmaInv(i) => {
                let (a, b) = (i - 1, i);
                m.rows[a * n + a] = 0;
                m.rows[b * n + b] = 0;
                m.rows[a * n + b] = 1;
                m.rows[b * n + a] = 1;
            }
            Generator::Tau | Generator::TauInv => m.rows[0] = -1,
            Generator::Eps | Generator::EpsI(_) => return Err(Error::EpsilonInWord),
        }
        Ok(m)
    }

    fn mul(&self, rhs: &SignedMatrix) -> SignedMatrix {
        let n = self.n;
        let mut rows = vec![0; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.rows[i * n + k];
                if a != 0 {
                    for j in 0..n {
                        rows[i * n + j] += a * rhs.rows[k * n + j];
                    }
                }
            }
        }
        SignedMatrix { n, rows }
    }

    fn to_perm(&self) -> SignedPartialPerm {
        let n = self.n;
        let map = (0..n)
            .map(|j| {
                (0..n).find_map(|t| match self.rows[j * n + t] {
                    1 => Some(Arrow::plus(t + 1)),
                    -1 => Some(Arrow::minus(t + 1)),
                    _ => None,
                })
            })
            .collect();
        SignedPartialPerm::from_arrows(map).expect("signed permutation matrix")
    }
}

/// Image of an ε-free word in `W(B_n)` computed through signed permutation
/// matrices, independently of [`eval_word`].
pub fn weyl_image(w: &Word, n: usize) -> Result<SignedPartialPerm> {
    if w.contains_epsilon() {
        return Err(Error::EpsilonInWord);
    }
    let w = w.at_rank(n)?;
    let mut m = SignedMatrix::identity(n);
    for &g in w.letters() {
        m = m.mul(&SignedMatrix::generator(g, n)?);
    }
    Ok(m.to_perm())
}

/// Whether the square `Br(B_n) → W(B_n) ⊂ I(B_n)` and
/// `Br(B_n) ⊂ IB(B_n) → I(B_n)` agree on `w`.
pub fn check_diagram(w: &Word, n: usize) -> Result<bool> {
    let via_group = weyl_image(w, n)?;
    let via_monoid = eval_word(&w.at_rank(n)?, EvalContext::signed(n))?;
    Ok(via_group.is_unit() && via_group == via_monoid)
}

/// A word in τ and σ_i evaluating to the unit `u`.
///
/// Every negative sign at source `j` contributes `σ_{j-1}…σ_1 τ σ_1…σ_{j-1}`;
/// the underlying permutation is then written by bubble-sorting its one-line
/// notation and recording the adjacent swaps.
pub fn weyl_lift(u: &SignedPartialPerm) -> Result<Word> {
    if !u.is_unit() {
        return Err(Error::NotUnit);
    }
    let n = u.n();
    let mut letters = Vec::new();
    for j in 1..=n {
        if u.get(j).map(|a| a.sign) == Some(Sign::Minus) {
            letters.extend((1..j).rev().map(Generator::Sigma));
            letters.push(Generator::Tau);
            letters.extend((1..j).map(Generator::Sigma));
        }
    }
    let mut line: Vec<usize> = u.arrows().iter().flatten().map(|a| a.target).collect();
    // Swapping positions i, i+1 left-multiplies by σ_i; the recorded swaps
    // s_1, …, s_m satisfy π = σ_{s_1} ⋯ σ_{s_m}.
    let mut sorted = false;
    while !sorted {
        sorted = true;
        for i in 1..n {
            if line[i - 1] > line[i] {
                line.swap(i - 1, i);
                letters.push(Generator::Sigma(i));
                sorted = false;
            }
        }
    }
    Ok(word(n, letters))
}

/// The word `ε_{i_1} ⋯ ε_{i_m} · weyl_lift(g)` for the factorisation `a = e g`.
pub fn surjectivity_witness(a: &SignedPartialPerm) -> Word {
    let d = a.factorise();
    let n = a.n();
    let mut letters: Vec<Generator> = (1..=n)
        .filter(|&j| d.idem.get(j).is_none())
        .map(Generator::EpsI)
        .collect();
    let lift = weyl_lift(&d.unit).expect("factorisation yields a unit");
    letters.extend_from_slice(lift.letters());
    word(n, letters)
}

/// Checks that every element of `I(B_n)` is the image of its witness word.
pub fn certify_surjectivity(n: usize, caps: EnumerationCaps) -> Result<bool> {
    let ctx = EvalContext::signed(n);
    for a in enumerate_elements(n, true, caps)? {
        if eval_word(&surjectivity_witness(&a), ctx)? != a {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Product of ε_i over the given indices.
pub fn idempotent_word(n: usize, deleted: &[usize]) -> Result<Word> {
    Word::new(n, deleted.iter().map(|&i| Generator::EpsI(i)).collect())
}

/// All normal-form representatives at rank `n`, with the middle braid ranging
/// over the Weyl lifts of `W(B_k)` (or `Σ_k` when `signed` is false).
pub fn normal_form_representatives(
    n: usize,
    signed: bool,
    caps: EnumerationCaps,
) -> Result<Vec<Word>> {
    caps.check(n, signed)?;
    let mut out = Vec::new();
    for k in 0..=n {
        let middles: Vec<Word> = enumerate_elements(k, signed, caps)?
            .filter(SignedPartialPerm::is_unit)
            .map(|u| weyl_lift(&u))
            .collect::<Result<_>>()?;
        for i_seq in (0..n).combinations(k) {
            for j_seq in (0..n).combinations(k) {
                for x in &middles {
                    out.push(normal_form_word(k, &i_seq, &j_seq, x, n)?);
                }
            }
        }
    }
    Ok(out)
}
