//! Relation tables for the braid, inverse braid and type-B monoids, plus the
//! word builders used by the normal form of partial braids.
//!
//! Every table is plain data: a list of `(lhs, rhs)` word pairs with all index
//! ranges expanded for the requested rank. Families whose generators do not
//! exist at that rank are simply absent.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::word::{word, Generator, Word};

use Generator::{Eps, EpsI, Sigma, SigmaInv, Tau, TauInv};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PresentationId {
    /// Artin presentation of the braid group `Br_n`.
    Br,
    /// Inverse braid monoid `IB_n` with the single idempotent ε.
    Ibn,
    /// `IB_n` in the balanced generators ε_1, …, ε_n.
    IbnBal,
    /// Popova's presentation of the rook monoid `I_n`.
    In,
    /// Type-B braid group `Br(B_n)`.
    Brb,
    /// Inverse braid monoid of type B, generators σ_i, τ, ε.
    Ibb,
    /// Type B monoid over the balanced presentation.
    IbbBal,
    /// `IB_n` with `σ_i² = 1` added; redundant relations kept.
    IbnQuot,
    /// The quotient presenting `I(B_n)`.
    IbbQuot,
}

impl PresentationId {
    pub const ALL: [PresentationId; 9] = [
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

    pub fn name(self) -> &'static str {
        match self {
            PresentationId::Br => "BR",
            PresentationId::Ibn => "IBN",
            PresentationId::IbnBal => "IBN_BAL",
            PresentationId::In => "IN",
            PresentationId::Brb => "BRB",
            PresentationId::Ibb => "IBB",
            PresentationId::IbbBal => "IBB_BAL",
            PresentationId::IbnQuot => "IBN_QUOT",
            PresentationId::IbbQuot => "IBB_QUOT",
        }
    }

    /// Whether the table lives over the type-B alphabet (evaluates into
    /// signed partial permutations).
    pub fn is_signed(self) -> bool {
        matches!(
            self,
            PresentationId::Brb
                | PresentationId::Ibb
                | PresentationId::IbbBal
                | PresentationId::IbbQuot
        )
    }
}

impl fmt::Display for PresentationId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PresentationId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        PresentationId::ALL
            .into_iter()
            .find(|id| id.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownPresentation(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    pub lhs: Word,
    pub rhs: Word,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationTable {
    pub id: PresentationId,
    pub rank: usize,
    pub pairs: Vec<Relation>,
}

impl RelationTable {
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn contains(&self, lhs: &str, rhs: &str) -> bool {
        self.pairs
            .iter()
            .any(|r| r.lhs.to_string() == lhs && r.rhs.to_string() == rhs)
    }
}

struct Builder {
    n: usize,
    pairs: Vec<Relation>,
}

impl Builder {
    fn push(&mut self, lhs: Vec<Generator>, rhs: Vec<Generator>) {
        self.pairs.push(Relation {
            lhs: word(self.n, lhs),
            rhs: word(self.n, rhs),
        });
    }

    fn sigmas(&self) -> std::ops::Range<usize> {
        1..self.n.max(1)
    }

    fn sigma_invertible(&mut self) {
        for i in self.sigmas() {
            self.push(vec![Sigma(i), SigmaInv(i)], vec![]);
            self.push(vec![SigmaInv(i), Sigma(i)], vec![]);
        }
    }

    fn tau_invertible(&mut self) {
        if self.n >= 1 {
            self.push(vec![Tau, TauInv], vec![]);
            self.push(vec![TauInv, Tau], vec![]);
        }
    }

    fn sigma_square(&mut self) {
        for i in self.sigmas() {
            self.push(vec![Sigma(i), Sigma(i)], vec![]);
        }
    }

    fn tau_square(&mut self) {
        if self.n >= 1 {
            self.push(vec![Tau, Tau], vec![]);
        }
    }

    /// Far commutation and the braid relation.
    fn braid(&mut self) {
        for i in self.sigmas() {
            for j in i + 2..self.n {
                self.push(vec![Sigma(i), Sigma(j)], vec![Sigma(j), Sigma(i)]);
            }
        }
        for i in 1..self.n.saturating_sub(1) {
            self.push(
                vec![Sigma(i), Sigma(i + 1), Sigma(i)],
                vec![Sigma(i + 1), Sigma(i), Sigma(i + 1)],
            );
        }
    }

    fn type_b(&mut self) {
        if self.n >= 2 {
            self.push(
                vec![Tau, Sigma(1), Tau, Sigma(1)],
                vec![Sigma(1), Tau, Sigma(1), Tau],
            );
        }
        for i in 2..self.n {
            self.push(vec![Tau, Sigma(i)], vec![Sigma(i), Tau]);
        }
    }

    /// The ε relations shared by the inverse braid presentations, without the
    /// `ε = εσ_1² = σ_1²ε` pair.
    fn eps_core(&mut self) {
        for i in 2..self.n {
            self.push(vec![Eps, Sigma(i)], vec![Sigma(i), Eps]);
        }
        if self.n >= 2 {
            let es1e = vec![Eps, Sigma(1), Eps];
            self.push(es1e.clone(), vec![Sigma(1), Eps, Sigma(1), Eps]);
            self.push(es1e, vec![Eps, Sigma(1), Eps, Sigma(1)]);
        }
        if self.n >= 1 {
            self.push(vec![Eps], vec![Eps, Eps]);
        }
    }

    fn eps_sigma_square(&mut self) {
        if self.n >= 2 {
            self.push(vec![Eps], vec![Eps, Sigma(1), Sigma(1)]);
            self.push(vec![Eps], vec![Sigma(1), Sigma(1), Eps]);
        }
    }

    fn eps_tau(&mut self, eps: Generator) {
        if self.n >= 1 {
            self.push(vec![eps, Tau], vec![eps]);
            self.push(vec![Tau, eps], vec![eps]);
        }
    }

    fn balanced(&mut self) {
        let n = self.n;
        for i in self.sigmas() {
            for j in (1..=n).filter(|&j| j != i && j != i + 1) {
                self.push(vec![EpsI(j), Sigma(i)], vec![Sigma(i), EpsI(j)]);
            }
            self.push(vec![EpsI(i), Sigma(i)], vec![Sigma(i), EpsI(i + 1)]);
            self.push(vec![EpsI(i + 1), Sigma(i)], vec![Sigma(i), EpsI(i)]);
        }
        for i in 1..=n {
            self.push(vec![EpsI(i)], vec![EpsI(i), EpsI(i)]);
        }
        for i in self.sigmas() {
            let e = EpsI(i + 1);
            self.push(vec![e, Sigma(i), Sigma(i)], vec![e]);
            self.push(vec![Sigma(i), Sigma(i), e], vec![e]);
        }
        for i in self.sigmas() {
            let pair = vec![EpsI(i), EpsI(i + 1)];
            self.push(vec![EpsI(i), EpsI(i + 1), Sigma(i)], pair.clone());
            self.push(vec![Sigma(i), EpsI(i), EpsI(i + 1)], pair);
        }
    }
}

/// The complete relation list of presentation `id` at rank `n`.
pub fn relations_for(id: PresentationId, n: usize) -> RelationTable {
    let mut b = Builder {
        n,
        pairs: Vec::new(),
    };
    match id {
        PresentationId::Br => {
            b.sigma_invertible();
            b.braid();
        }
        PresentationId::Ibn => {
            b.sigma_invertible();
            b.eps_core();
            b.eps_sigma_square();
            b.braid();
        }
        PresentationId::In => {
            b.sigma_square();
            b.eps_core();
            b.braid();
        }
        PresentationId::IbnQuot => {
            b.sigma_invertible();
            b.eps_core();
            b.eps_sigma_square();
            b.braid();
            b.sigma_square();
        }
        PresentationId::IbnBal => {
            b.sigma_invertible();
            b.balanced();
            b.braid();
        }
        PresentationId::Brb => {
            b.sigma_invertible();
            b.tau_invertible();
            b.type_b();
            b.braid();
        }
        PresentationId::Ibb => {
            b.sigma_invertible();
            b.tau_invertible();
            b.type_b();
            b.braid();
            b.eps_core();
            b.eps_sigma_square();
            b.eps_tau(Eps);
        }
        PresentationId::IbbBal => {
            b.sigma_invertible();
            b.balanced();
            b.braid();
            b.tau_invertible();
            b.type_b();
            b.eps_tau(EpsI(1));
        }
        PresentationId::IbbQuot => {
            b.tau_square();
            b.sigma_square();
            b.type_b();
            b.braid();
            b.eps_core();
            b.eps_tau(Eps);
        }
    }
    RelationTable {
        id,
        rank: n,
        pairs: b.pairs,
    }
}

/// Parses a presentation name and builds its table.
pub fn relations_named(name: &str, n: usize) -> Result<RelationTable> {
    Ok(relations_for(name.parse()?, n))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BlockVariant {
    /// Built from the single idempotent ε and descending σ runs.
    Conjugated,
    /// `ε_{k+1} ε_{k+2} … ε_n`.
    Product,
}

/// σ_from σ_{from-1} … σ_to; empty when `from < to`.
fn descending(from: usize, to: usize) -> impl Iterator<Item = Generator> {
    (to..=from).rev().map(Sigma)
}

/// σ_from σ_{from+1} … σ_to; empty when `to < from`.
fn ascending(from: usize, to: usize) -> impl Iterator<Item = Generator> {
    (from..=to).map(Sigma)
}

/// Word for the partial braid keeping the first `k` strings and deleting the
/// remaining `n - k`.
///
/// The conjugated variant is `E σ_{n-1}…σ_{k+1} E σ_{n-1}…σ_{k+2} E … E σ_{n-1} E`
/// where `E = σ_{n-1}…σ_1 ε σ_1…σ_{n-1}` deletes the last string.
pub fn epsilon_block(k: usize, n: usize, variant: BlockVariant) -> Result<Word> {
    if k > n {
        return Err(Error::OutOfRange {
            value: k,
            range: format!("0..={n}"),
        });
    }
    let letters: Vec<Generator> = match variant {
        BlockVariant::Product => (k + 1..=n).map(EpsI).collect(),
        BlockVariant::Conjugated if k == n => Vec::new(),
        BlockVariant::Conjugated => {
            let last: Vec<Generator> = descending(n - 1, 1)
                .chain([Eps])
                .chain(ascending(1, n - 1))
                .collect();
            let mut out = Vec::new();
            for m in k + 1..n {
                out.extend_from_slice(&last);
                out.extend(descending(n - 1, m));
            }
            out.extend_from_slice(&last);
            out
        }
    };
    Ok(word(n, letters))
}

fn check_index_run(name: &str, seq: &[usize], k: usize, n: usize) -> Result<()> {
    if seq.len() != k {
        return Err(Error::MalformedSequence(format!(
            "{name} has length {} but k = {k}",
            seq.len()
        )));
    }
    if seq.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::MalformedSequence(format!(
            "{name} must be strictly ascending: {seq:?}"
        )));
    }
    if let Some(&bad) = seq.iter().find(|&&i| i + 1 > n) {
        return Err(Error::MalformedSequence(format!(
            "{name} entry {bad} exceeds {}",
            n.saturating_sub(1)
        )));
    }
    Ok(())
}

/// Assembles the representative
/// `σ_{i_1}…σ_1 ⋯ σ_{i_k}…σ_k · ε_{k+1,n} · x · ε_{k+1,n} · σ_k…σ_{j_k} ⋯ σ_1…σ_{j_1}`.
///
/// Each run `σ_{i_m}…σ_m` is the descending product and is empty when
/// `i_m < m`; likewise on the right. `x` must be a braid word (no ε) valid at
/// rank `k`.
pub fn normal_form_word(
    k: usize,
    i_seq: &[usize],
    j_seq: &[usize],
    x: &Word,
    n: usize,
) -> Result<Word> {
    if k > n {
        return Err(Error::OutOfRange {
            value: k,
            range: format!("0..={n}"),
        });
    }
    check_index_run("i_seq", i_seq, k, n)?;
    check_index_run("j_seq", j_seq, k, n)?;
    if x.contains_epsilon() {
        return Err(Error::EpsilonInWord);
    }
    if let Some(bad) = x.letters().iter().find(|g| !g.is_valid_at(k)) {
        return Err(Error::InvalidLetter {
            letter: bad.to_string(),
            rank: k,
        });
    }
    let block = epsilon_block(k, n, BlockVariant::Product)?;
    let mut letters: Vec<Generator> = Vec::new();
    for (m, &i) in (1..=k).zip(i_seq) {
        letters.extend(descending(i, m));
    }
    letters.extend_from_slice(block.letters());
    letters.extend_from_slice(x.letters());
    letters.extend_from_slice(block.letters());
    for (m, &j) in (1..k + 1).zip(j_seq).rev() {
        letters.extend(ascending(m, j));
    }
    Ok(word(n, letters))
}
