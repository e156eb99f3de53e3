//! Signed partial permutations.
//!
//! An element of `I(B_n)` is a partial bijection of `{±v_1, …, ±v_n}` that
//! commutes with negation. Only the image of each `+v_j` is stored; the image
//! of `-v_j` is its negation, so the domain is automatically closed under
//! sign change. Elements whose defined signs are all `+` form the rook monoid
//! `I_n`; total elements form the hyperoctahedral group `W(B_n)`.
//!
//! Composition is left-to-right throughout the crate: `a.then(&b)` applies
//! `a` first and `b` second, matching the right-action notation `(x)σ`.
//!
//! Indices are 1-based in every public API and in the text forms.

use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use itertools::Itertools;
use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const MAX_RANK: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn from_i8(v: i8) -> Option<Sign> {
        match v {
            1 => Some(Sign::Plus),
            -1 => Some(Sign::Minus),
            _ => None,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

/// Image of `+v_j`: the signed basis vector `sign · v_target`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Arrow {
    pub target: usize,
    pub sign: Sign,
}

impl Arrow {
    pub fn new(target: usize, sign: Sign) -> Self {
        Arrow { target, sign }
    }

    pub fn plus(target: usize) -> Self {
        Arrow::new(target, Sign::Plus)
    }

    pub fn minus(target: usize) -> Self {
        Arrow::new(target, Sign::Minus)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "JsonRepr", into = "JsonRepr")]
pub struct SignedPartialPerm {
    map: Vec<Option<Arrow>>,
}

impl SignedPartialPerm {
    /// Builds an element from the images of `+v_1, …, +v_n`.
    pub fn from_arrows(map: Vec<Option<Arrow>>) -> Result<Self> {
        let n = map.len();
        if n > MAX_RANK {
            return Err(Error::RankTooLarge(n));
        }
        let mut seen = vec![false; n];
        for arrow in map.iter().flatten() {
            if arrow.target == 0 || arrow.target > n {
                return Err(Error::OutOfRange {
                    value: arrow.target,
                    range: format!("1..={n}"),
                });
            }
            if std::mem::replace(&mut seen[arrow.target - 1], true) {
                return Err(Error::Parse(format!(
                    "target {} is hit twice; map is not injective",
                    arrow.target
                )));
            }
        }
        Ok(SignedPartialPerm { map })
    }

    pub fn identity(n: usize) -> Self {
        SignedPartialPerm {
            map: (1..=n).map(|j| Some(Arrow::plus(j))).collect(),
        }
    }

    /// The empty map, the zero of the monoid.
    pub fn empty(n: usize) -> Self {
        SignedPartialPerm { map: vec![None; n] }
    }

    /// Partial identity on the given 1-based indices.
    pub fn idempotent_on(n: usize, domain: impl IntoIterator<Item = usize>) -> Self {
        let mut map = vec![None; n];
        for j in domain {
            map[j - 1] = Some(Arrow::plus(j));
        }
        SignedPartialPerm { map }
    }

    pub fn n(&self) -> usize {
        self.map.len()
    }

    /// Image of `+v_j`, `j` 1-based.
    pub fn get(&self, j: usize) -> Option<Arrow> {
        self.map[j - 1]
    }

    pub fn arrows(&self) -> &[Option<Arrow>] {
        &self.map
    }

    /// Sorted 1-based indices where the element is defined.
    pub fn domain(&self) -> Vec<usize> {
        (1..=self.n())
            .filter(|&j| self.map[j - 1].is_some())
            .collect()
    }

    /// Sorted 1-based indices hit by the element.
    pub fn image(&self) -> Vec<usize> {
        let mut out: Vec<usize> = self.map.iter().flatten().map(|a| a.target).collect();
        out.sort_unstable();
        out
    }

    /// Number of strands kept (size of the unsigned domain).
    pub fn size(&self) -> usize {
        self.map.iter().flatten().count()
    }

    pub fn is_unit(&self) -> bool {
        self.map.iter().all(Option::is_some)
    }

    pub fn is_unsigned(&self) -> bool {
        self.map.iter().flatten().all(|a| a.sign == Sign::Plus)
    }

    pub fn is_idempotent(&self) -> bool {
        self.map
            .iter()
            .enumerate()
            .all(|(i, a)| a.is_none_or(|a| a.target == i + 1 && a.sign == Sign::Plus))
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Self) -> Result<Self> {
        if self.n() != other.n() {
            return Err(Error::RankMismatch(self.n(), other.n()));
        }
        let map = self
            .map
            .iter()
            .map(|a| {
                let a = (*a)?;
                let b = other.map[a.target - 1]?;
                Some(Arrow::new(b.target, a.sign * b.sign))
            })
            .collect();
        Ok(SignedPartialPerm { map })
    }

    /// The relational inverse: the unique `b` with `aba = a` and `bab = b`.
    pub fn inverse(&self) -> Self {
        let mut map = vec![None; self.n()];
        for (i, a) in self.map.iter().enumerate() {
            if let Some(a) = a {
                map[a.target - 1] = Some(Arrow::new(i + 1, a.sign));
            }
        }
        SignedPartialPerm { map }
    }

    /// Splits `self` as an idempotent followed by a unit.
    ///
    /// The unit keeps every arrow of `self` and sends the remaining sources to
    /// the remaining targets in increasing order, with sign `+`.
    pub fn factorise(&self) -> Decomposition {
        let n = self.n();
        let idem = SignedPartialPerm::idempotent_on(n, self.domain());
        let mut hit = vec![false; n];
        for a in self.map.iter().flatten() {
            hit[a.target - 1] = true;
        }
        let mut free_targets = (1..=n).filter(|&t| !hit[t - 1]);
        let map = self
            .map
            .iter()
            .map(|a| a.or_else(|| free_targets.next().map(Arrow::plus)))
            .collect();
        Decomposition {
            idem,
            unit: SignedPartialPerm { map },
        }
    }

    /// Forgets the signs, giving the underlying element of `I_n`.
    pub fn unsigned_part(&self) -> Self {
        SignedPartialPerm {
            map: self
                .map
                .iter()
                .map(|a| a.map(|a| Arrow::plus(a.target)))
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("element serialization is infallible")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// `M = EG`: an element as an idempotent followed by a unit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub idem: SignedPartialPerm,
    pub unit: SignedPartialPerm,
}

impl Decomposition {
    pub fn recompose(&self) -> SignedPartialPerm {
        self.idem
            .then(&self.unit)
            .expect("decomposition parts share a rank")
    }
}

impl fmt::Display for SignedPartialPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, a) in self.map.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            match a {
                Some(a) => write!(f, "{}->{}{}", i + 1, a.sign.symbol(), a.target)?,
                None => write!(f, "{}->.", i + 1)?,
            }
        }
        f.write_str("]")
    }
}

impl FromStr for SignedPartialPerm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|s| s.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("expected `[...]`, got `{s}`")))?;
        if inner.trim().is_empty() {
            return Ok(SignedPartialPerm::empty(0));
        }
        let mut map = Vec::new();
        for (pos, entry) in inner.split(',').enumerate() {
            let (src, dst) = entry
                .trim()
                .split_once("->")
                .ok_or_else(|| Error::Parse(format!("entry `{entry}` lacks `->`")))?;
            let src: usize = src
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad source index in `{entry}`")))?;
            if src != pos + 1 {
                return Err(Error::Parse(format!(
                    "entries must be listed in order; expected {} got {src}",
                    pos + 1
                )));
            }
            let dst = dst.trim();
            let arrow = if dst == "." {
                None
            } else {
                let (sign, digits) = match dst.split_at_checked(1) {
                    Some(("+", rest)) => (Sign::Plus, rest),
                    Some(("-", rest)) => (Sign::Minus, rest),
                    _ => return Err(Error::Parse(format!("target `{dst}` needs a sign"))),
                };
                let target = digits
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad target in `{entry}`")))?;
                Some(Arrow::new(target, sign))
            };
            map.push(arrow);
        }
        SignedPartialPerm::from_arrows(map)
    }
}

#[derive(Serialize, Deserialize)]
struct JsonRepr {
    n: usize,
    map: Vec<Option<(usize, i8)>>,
}

impl From<SignedPartialPerm> for JsonRepr {
    fn from(p: SignedPartialPerm) -> Self {
        JsonRepr {
            n: p.n(),
            map: p
                .map
                .iter()
                .map(|a| a.map(|a| (a.target, a.sign.as_i8())))
                .collect(),
        }
    }
}

impl TryFrom<JsonRepr> for SignedPartialPerm {
    type Error = Error;

    fn try_from(r: JsonRepr) -> Result<Self> {
        if r.map.len() != r.n {
            return Err(Error::Parse(format!(
                "`n` is {} but `map` has {} entries",
                r.n,
                r.map.len()
            )));
        }
        let map = r
            .map
            .into_iter()
            .map(|e| {
                e.map(|(t, s)| {
                    Sign::from_i8(s)
                        .map(|s| Arrow::new(t, s))
                        .ok_or_else(|| Error::Parse(format!("sign must be 1 or -1, got {s}")))
                })
                .transpose()
            })
            .collect::<Result<Vec<_>>>()?;
        SignedPartialPerm::from_arrows(map)
    }
}

/// Largest ranks `enumerate_elements` will walk.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationCaps {
    pub signed: usize,
    pub unsigned: usize,
}

impl Default for EnumerationCaps {
    fn default() -> Self {
        EnumerationCaps {
            signed: 6,
            unsigned: 8,
        }
    }
}

impl EnumerationCaps {
    pub fn cap(&self, signed: bool) -> usize {
        if signed {
            self.signed
        } else {
            self.unsigned
        }
    }

    pub fn check(&self, n: usize, signed: bool) -> Result<()> {
        let cap = self.cap(signed);
        if n > cap {
            Err(Error::CapExceeded { rank: n, cap })
        } else {
            Ok(())
        }
    }
}

/// Every element of `I(B_n)` (or `I_n` when `signed` is false), each once.
///
/// Order: by domain size, then domain subset lexicographically, then the
/// target arrangement lexicographically, then the sign vector read as a
/// binary number with `+` before `-` and the first source most significant.
pub fn enumerate_elements(
    n: usize,
    signed: bool,
    caps: EnumerationCaps,
) -> Result<impl Iterator<Item = SignedPartialPerm>> {
    caps.check(n, signed)?;
    Ok((0..=n).flat_map(move |k| {
        (1..=n).combinations(k).flat_map(move |domain| {
            (1..=n).permutations(k).flat_map(move |targets| {
                let sign_vectors: u64 = if signed { 1 << k } else { 1 };
                let domain = domain.clone();
                (0..sign_vectors).map(move |bits| {
                    let mut map = vec![None; n];
                    for (pos, (&src, &dst)) in domain.iter().zip(&targets).enumerate() {
                        let sign = if bits >> (k - 1 - pos) & 1 == 1 {
                            Sign::Minus
                        } else {
                            Sign::Plus
                        };
                        map[src - 1] = Some(Arrow::new(dst, sign));
                    }
                    SignedPartialPerm { map }
                })
            })
        })
    }))
}

fn binomial(n: usize, k: usize) -> BigUint {
    (0..k).fold(BigUint::from(1u32), |acc, i| acc * (n - i) / (i + 1))
}

fn factorial(k: usize) -> BigUint {
    (1..=k).fold(BigUint::from(1u32), |acc, i| acc * i)
}

/// `Σ_k 2^k C(n,k)^2 k!` for the signed monoid, `Σ_k C(n,k)^2 k!` otherwise.
pub fn cardinality_formula(n: usize, signed: bool) -> BigUint {
    (0..=n)
        .map(|k| {
            let c = binomial(n, k);
            let weight = if signed {
                BigUint::from(1u32) << k
            } else {
                BigUint::from(1u32)
            };
            weight * &c * &c * factorial(k)
        })
        .sum()
}

/// `2^n n!` for `W(B_n)`, `n!` for `Σ_n`.
pub fn unit_group_order(n: usize, signed: bool) -> BigUint {
    let f = factorial(n);
    if signed {
        f << n
    } else {
        f
    }
}
