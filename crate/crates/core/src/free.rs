//! Partial conjugating isomorphisms of a free group.
//!
//! An element pairs a partial permutation `a ∈ I_n` with conjugators `w_i`,
//! realizing `x_i ↦ w_i⁻¹ x_{a(i)} w_i` on the generators in the domain of
//! `a`. Conjugators only use generators from the image of `a` and are stored
//! without leading `x_{a(i)}^{±1}` letters, which would not change the
//! realized map; this makes the representation unique.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{Arrow, SignedPartialPerm};

/// A freely reduced word in `x_1, …, x_n`; letters are `(index, ±1)`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct FreeWord {
    letters: Vec<(usize, i8)>,
}

/// Cancels adjacent `x x⁻¹` and `x⁻¹ x` pairs until none remain.
pub fn reduce_free(letters: &[(usize, i8)]) -> FreeWord {
    let mut out: Vec<(usize, i8)> = Vec::with_capacity(letters.len());
    for &(i, e) in letters {
        debug_assert!(e == 1 || e == -1);
        match out.last() {
            Some(&(j, f)) if j == i && f == -e => {
                out.pop();
            }
            _ => out.push((i, e)),
        }
    }
    FreeWord { letters: out }
}

/// Sets every generator outside `alive` to 1, then reduces.
pub fn kill_generators(w: &FreeWord, alive: &BTreeSet<usize>) -> FreeWord {
    let kept: Vec<_> = w
        .letters
        .iter()
        .copied()
        .filter(|(i, _)| alive.contains(i))
        .collect();
    reduce_free(&kept)
}

impl FreeWord {
    pub fn new(letters: &[(usize, i8)]) -> FreeWord {
        reduce_free(letters)
    }

    pub fn generator(i: usize) -> FreeWord {
        FreeWord {
            letters: vec![(i, 1)],
        }
    }

    pub fn letters(&self) -> &[(usize, i8)] {
        &self.letters
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn inverse(&self) -> FreeWord {
        FreeWord {
            letters: self.letters.iter().rev().map(|&(i, e)| (i, -e)).collect(),
        }
    }

    pub fn mul(&self, rhs: &FreeWord) -> FreeWord {
        let mut all = self.letters.clone();
        all.extend_from_slice(&rhs.letters);
        reduce_free(&all)
    }

    /// `self⁻¹ x_target self`, reduced.
    pub fn conjugate_of(&self, target: usize) -> FreeWord {
        self.inverse().mul(&FreeWord::generator(target)).mul(self)
    }

    /// Splits a reduced word of shape `u⁻¹ x_t u` into `(t, u)`.
    pub fn as_conjugate(&self) -> Option<(usize, FreeWord)> {
        let len = self.letters.len();
        if len.is_multiple_of(2) {
            return None;
        }
        let m = len / 2;
        let (t, e) = self.letters[m];
        if e != 1 {
            return None;
        }
        let u = FreeWord {
            letters: self.letters[m + 1..].to_vec(),
        };
        if self.letters[..m] != u.inverse().letters[..] {
            return None;
        }
        Some((t, u))
    }

    pub fn generators(&self) -> BTreeSet<usize> {
        self.letters.iter().map(|&(i, _)| i).collect()
    }

    fn strip_leading(&self, t: usize) -> FreeWord {
        let skip = self.letters.iter().take_while(|&&(i, _)| i == t).count();
        FreeWord {
            letters: self.letters[skip..].to_vec(),
        }
    }

    pub fn parse(text: &str) -> Result<FreeWord> {
        let text = text.trim();
        if text == "1" {
            return Ok(FreeWord::default());
        }
        let letters = text
            .split_whitespace()
            .map(|tok| {
                let bad = || Error::Parse(format!("bad free-group letter `{tok}`"));
                let body = tok.strip_prefix('x').ok_or_else(bad)?;
                let (idx, exp) = match body.split_once('^') {
                    Some((idx, "-1")) => (idx, -1),
                    Some((idx, "1")) => (idx, 1),
                    Some(_) => return Err(bad()),
                    None => (body, 1),
                };
                let idx: usize = idx.parse().map_err(|_| bad())?;
                if idx == 0 {
                    return Err(bad());
                }
                Ok((idx, exp))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(reduce_free(&letters))
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        for (k, &(i, e)) in self.letters.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            if e < 0 {
                write!(f, "x{i}^-1")?;
            } else {
                write!(f, "x{i}")?;
            }
        }
        Ok(())
    }
}

/// An element `f_a` of `EF_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "JsonRepr", into = "JsonRepr")]
pub struct PartialFreeIso {
    perm: SignedPartialPerm,
    conj: Vec<Option<FreeWord>>,
}

impl PartialFreeIso {
    /// `conj[j-1]` must be present exactly when `perm` is defined at `j`.
    pub fn new(perm: SignedPartialPerm, conj: Vec<Option<FreeWord>>) -> Result<Self> {
        if !perm.is_unsigned() {
            return Err(Error::SignedInput);
        }
        if conj.len() != perm.n() {
            return Err(Error::RankMismatch(perm.n(), conj.len()));
        }
        let image: BTreeSet<usize> = perm.image().into_iter().collect();
        let mut stored = Vec::with_capacity(conj.len());
        for (j, (arrow, w)) in perm.arrows().iter().zip(conj).enumerate() {
            match (arrow, w) {
                (Some(a), Some(w)) => {
                    if let Some(bad) = w.generators().difference(&image).next() {
                        return Err(Error::Parse(format!(
                            "conjugator of x{} uses x{bad}, outside the image",
                            j + 1
                        )));
                    }
                    stored.push(Some(w.strip_leading(a.target)));
                }
                (None, None) => stored.push(None),
                _ => {
                    return Err(Error::Parse(format!(
                        "conjugator presence does not match the domain at x{}",
                        j + 1
                    )))
                }
            }
        }
        Ok(PartialFreeIso { perm, conj: stored })
    }

    /// `w_i = 1` for every `i` in the domain.
    pub fn include(a: &SignedPartialPerm) -> Result<Self> {
        let conj = a
            .arrows()
            .iter()
            .map(|x| x.map(|_| FreeWord::default()))
            .collect();
        PartialFreeIso::new(a.clone(), conj)
    }

    pub fn n(&self) -> usize {
        self.perm.n()
    }

    pub fn project(&self) -> &SignedPartialPerm {
        &self.perm
    }

    pub fn conjugator(&self, i: usize) -> Option<&FreeWord> {
        self.conj[i - 1].as_ref()
    }

    /// The reduced word `w_i⁻¹ x_{a(i)} w_i`, if `x_i` is in the domain.
    pub fn image_of(&self, i: usize) -> Option<FreeWord> {
        let a = self.perm.get(i)?;
        Some(self.conj[i - 1].as_ref()?.conjugate_of(a.target))
    }

    /// Applies the map to a word on its domain generators; letters outside
    /// the domain are sent to 1.
    pub fn apply(&self, w: &FreeWord) -> FreeWord {
        let mut out = FreeWord::default();
        for &(i, e) in w.letters() {
            if let Some(img) = self.image_of(i) {
                out = out.mul(&if e < 0 { img.inverse() } else { img });
            }
        }
        out
    }

    /// `self` followed by `other`, defined on the domain of the composite
    /// partial permutation.
    ///
    /// Generators outside the domain of `other` are deleted from each
    /// conjugator before `other` is applied, and the result is restricted to
    /// generators in the image of the composite.
    pub fn then(&self, other: &PartialFreeIso) -> Result<PartialFreeIso> {
        let perm = self.perm.then(&other.perm)?;
        let dom_other: BTreeSet<usize> = other.perm.domain().into_iter().collect();
        let image: BTreeSet<usize> = perm.image().into_iter().collect();
        let conj: Vec<Option<FreeWord>> = (1..=self.n())
            .map(|i| {
                let target = perm.get(i)?.target;
                let mid = self.perm.get(i)?.target;
                let w = kill_generators(self.conj[i - 1].as_ref()?, &dom_other);
                let u = other.conj[mid - 1].as_ref()?;
                let c = kill_generators(&u.mul(&other.apply(&w)), &image);
                let c = c.strip_leading(target);
                if cfg!(debug_assertions) {
                    let full = kill_generators(&other.apply(&self.image_of(i)?), &image);
                    let (t, extracted) = full
                        .as_conjugate()
                        .expect("composite image is a conjugate of a generator");
                    assert_eq!((t, &extracted), (target, &c));
                }
                Some(c)
            })
            .collect();
        PartialFreeIso::new(perm, conj)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serialization is infallible")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }

    /// Parses `x1 -> x2^-1 x1 x2 ; x2 -> x2` at rank `n`.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let mut arrows = vec![None; n];
        let mut conj = vec![None; n];
        for entry in text.split(';').map(str::trim).filter(|e| !e.is_empty()) {
            let (src, img) = entry
                .split_once("->")
                .ok_or_else(|| Error::Parse(format!("entry `{entry}` lacks `->`")))?;
            let src = FreeWord::parse(src)?;
            let i = match src.letters() {
                [(i, 1)] if *i <= n => *i,
                _ => return Err(Error::Parse(format!("bad source in `{entry}`"))),
            };
            if arrows[i - 1].is_some() {
                return Err(Error::Parse(format!("x{i} listed twice")));
            }
            let (t, u) = FreeWord::parse(img)?.as_conjugate().ok_or_else(|| {
                Error::Parse(format!("`{img}` is not a conjugate of a generator"))
            })?;
            if t == 0 || t > n {
                return Err(Error::OutOfRange {
                    value: t,
                    range: format!("1..={n}"),
                });
            }
            arrows[i - 1] = Some(Arrow::plus(t));
            conj[i - 1] = Some(u);
        }
        PartialFreeIso::new(SignedPartialPerm::from_arrows(arrows)?, conj)
    }
}

impl fmt::Display for PartialFreeIso {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for i in 1..=self.n() {
            if let Some(img) = self.image_of(i) {
                if !first {
                    f.write_str(" ; ")?;
                }
                first = false;
                write!(f, "x{i} -> {img}")?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct JsonEntry {
    target: usize,
    conj: Vec<(usize, i8)>,
}

#[derive(Serialize, Deserialize)]
struct JsonRepr {
    n: usize,
    map: Vec<Option<JsonEntry>>,
}

impl From<PartialFreeIso> for JsonRepr {
    fn from(f: PartialFreeIso) -> Self {
        JsonRepr {
            n: f.n(),
            map: f
                .perm
                .arrows()
                .iter()
                .zip(&f.conj)
                .map(|(a, w)| {
                    Some(JsonEntry {
                        target: a.as_ref()?.target,
                        conj: w.as_ref()?.letters.clone(),
                    })
                })
                .collect(),
        }
    }
}

impl TryFrom<JsonRepr> for PartialFreeIso {
    type Error = Error;

    fn try_from(r: JsonRepr) -> Result<Self> {
        if r.map.len() != r.n {
            return Err(Error::Parse("`n` does not match `map` length".into()));
        }
        let mut arrows = Vec::with_capacity(r.n);
        let mut conj = Vec::with_capacity(r.n);
        for e in r.map {
            match e {
                Some(e) => {
                    if e.conj.iter().any(|&(i, x)| i == 0 || (x != 1 && x != -1)) {
                        return Err(Error::Parse("bad conjugator letter".into()));
                    }
                    arrows.push(Some(Arrow::plus(e.target)));
                    conj.push(Some(reduce_free(&e.conj)));
                }
                None => {
                    arrows.push(None);
                    conj.push(None);
                }
            }
        }
        PartialFreeIso::new(SignedPartialPerm::from_arrows(arrows)?, conj)
    }
}
