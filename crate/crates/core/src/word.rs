//! Letters and words over the partial-braid alphabets.
//!
//! Text grammar: tokens separated by whitespace or `*`; `s<i>` is σ_i,
//! `S<i>` is σ_i⁻¹, `t` is τ, `T` is τ⁻¹, `e` is ε and `e<i>` is ε_i.
//! The empty string is the empty word.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    Sigma(usize),
    SigmaInv(usize),
    Tau,
    TauInv,
    /// ε, the first string deleted. Acts exactly like `EpsI(1)`.
    Eps,
    EpsI(usize),
}

impl Generator {
    pub fn is_valid_at(self, rank: usize) -> bool {
        match self {
            Generator::Sigma(i) | Generator::SigmaInv(i) => i >= 1 && i < rank,
            Generator::Tau | Generator::TauInv | Generator::Eps => rank >= 1,
            Generator::EpsI(i) => i >= 1 && i <= rank,
        }
    }

    /// Smallest rank at which the letter exists.
    pub fn min_rank(self) -> usize {
        match self {
            Generator::Sigma(i) | Generator::SigmaInv(i) => i + 1,
            Generator::Tau | Generator::TauInv | Generator::Eps => 1,
            Generator::EpsI(i) => i,
        }
    }

    pub fn is_epsilon(self) -> bool {
        matches!(self, Generator::Eps | Generator::EpsI(_))
    }

    /// Letter-wise inverse; ε letters are their own inverses.
    pub fn inverse(self) -> Generator {
        match self {
            Generator::Sigma(i) => Generator::SigmaInv(i),
            Generator::SigmaInv(i) => Generator::Sigma(i),
            Generator::Tau => Generator::TauInv,
            Generator::TauInv => Generator::Tau,
            e => e,
        }
    }

    fn cancels(self, next: Generator) -> bool {
        !self.is_epsilon() && self.inverse() == next
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::Sigma(i) => write!(f, "s{i}"),
            Generator::SigmaInv(i) => write!(f, "S{i}"),
            Generator::Tau => f.write_str("t"),
            Generator::TauInv => f.write_str("T"),
            Generator::Eps => f.write_str("e"),
            Generator::EpsI(i) => write!(f, "e{i}"),
        }
    }
}

fn parse_token(tok: &str) -> Result<Generator> {
    let bad = || Error::Parse(format!("unknown token `{tok}`"));
    let (head, digits) = tok.split_at_checked(1).ok_or_else(bad)?;
    let index = || -> Result<usize> {
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        digits.parse().map_err(|_| bad())
    };
    match head {
        "t" if digits.is_empty() => Ok(Generator::Tau),
        "T" if digits.is_empty() => Ok(Generator::TauInv),
        "e" if digits.is_empty() => Ok(Generator::Eps),
        "e" => Ok(Generator::EpsI(index()?)),
        "s" => Ok(Generator::Sigma(index()?)),
        "S" => Ok(Generator::SigmaInv(index()?)),
        _ => Err(bad()),
    }
}

/// A finite word at a fixed ambient rank. The empty word is the identity.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word {
    rank: usize,
    letters: Vec<Generator>,
}

impl Word {
    pub fn new(rank: usize, letters: Vec<Generator>) -> Result<Self> {
        if let Some(&bad) = letters.iter().find(|g| !g.is_valid_at(rank)) {
            return Err(Error::InvalidLetter {
                letter: bad.to_string(),
                rank,
            });
        }
        Ok(Word { rank, letters })
    }

    pub fn empty(rank: usize) -> Self {
        Word {
            rank,
            letters: Vec::new(),
        }
    }

    /// Parses `text` and checks every letter against `rank`.
    pub fn parse(text: &str, rank: usize) -> Result<Self> {
        Word::new(rank, parse_letters(text)?)
    }

    /// Parses `text` at the smallest rank that admits all of its letters.
    pub fn parse_unranked(text: &str) -> Result<Self> {
        let letters = parse_letters(text)?;
        let rank = letters.iter().map(|g| g.min_rank()).max().unwrap_or(0);
        Word::new(rank, letters)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn letters(&self) -> &[Generator] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Result<Word> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch(self.rank, other.rank));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(Word {
            rank: self.rank,
            letters,
        })
    }

    /// Same letters read at a larger rank.
    pub fn at_rank(&self, rank: usize) -> Result<Word> {
        Word::new(rank, self.letters.clone())
    }

    /// Reversed word with each letter inverted (ε letters kept).
    pub fn formal_inverse(&self) -> Word {
        Word {
            rank: self.rank,
            letters: self.letters.iter().rev().map(|g| g.inverse()).collect(),
        }
    }

    pub fn split_at(&self, mid: usize) -> (Word, Word) {
        let (l, r) = self.letters.split_at(mid);
        (
            Word {
                rank: self.rank,
                letters: l.to_vec(),
            },
            Word {
                rank: self.rank,
                letters: r.to_vec(),
            },
        )
    }

    pub fn contains_epsilon(&self) -> bool {
        self.letters.iter().any(|g| g.is_epsilon())
    }

    /// Deletes adjacent σ_iσ_i⁻¹, σ_i⁻¹σ_i, ττ⁻¹ and τ⁻¹τ pairs until none
    /// remain. Nothing else is rewritten.
    pub fn free_reduce(&self) -> Word {
        let mut out: Vec<Generator> = Vec::with_capacity(self.letters.len());
        for &g in &self.letters {
            match out.last() {
                Some(&last) if last.cancels(g) => {
                    out.pop();
                }
                _ => out.push(g),
            }
        }
        Word {
            rank: self.rank,
            letters: out,
        }
    }
}

fn parse_letters(text: &str) -> Result<Vec<Generator>> {
    text.split(|c: char| c.is_whitespace() || c == '*')
        .filter(|t| !t.is_empty())
        .map(parse_token)
        .collect()
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, g) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

/// Builds a word from letters already known to be valid at `rank`.
pub(crate) fn word(rank: usize, letters: Vec<Generator>) -> Word {
    debug_assert!(letters.iter().all(|g| g.is_valid_at(rank)));
    Word { rank, letters }
}
