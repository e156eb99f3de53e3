//! Abelianization of the type-B inverse braid monoid.
//!
//! The target is `E ⊕ Z²` with `E = {0, ε}` the monoid on one idempotent,
//! modulo `ε + τ = ε` and `ε + σ = ε`. Every class containing ε collapses to
//! a single absorbing value, so an image is either [`AbelianImage::Absorbed`]
//! or a pair of integer degrees. Notation is additive.

use std::fmt;
use std::ops::Add;

use crate::word::{Generator, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AbelianImage {
    Absorbed,
    Free { tau_deg: i64, sigma_deg: i64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AbelianImageMod2 {
    Absorbed,
    Free { tau_parity: u8, sigma_parity: u8 },
}

impl AbelianImage {
    pub const ZERO: AbelianImage = AbelianImage::Free {
        tau_deg: 0,
        sigma_deg: 0,
    };

    pub fn free(tau_deg: i64, sigma_deg: i64) -> Self {
        AbelianImage::Free { tau_deg, sigma_deg }
    }

    /// Image in the abelianization of `I(B_n)`: degrees reduced mod 2.
    pub fn to_mod2(self) -> AbelianImageMod2 {
        match self {
            AbelianImage::Absorbed => AbelianImageMod2::Absorbed,
            AbelianImage::Free { tau_deg, sigma_deg } => AbelianImageMod2::Free {
                tau_parity: tau_deg.rem_euclid(2) as u8,
                sigma_parity: sigma_deg.rem_euclid(2) as u8,
            },
        }
    }
}

pub fn ab_add(x: AbelianImage, y: AbelianImage) -> AbelianImage {
    match (x, y) {
        (
            AbelianImage::Free {
                tau_deg: t1,
                sigma_deg: s1,
            },
            AbelianImage::Free {
                tau_deg: t2,
                sigma_deg: s2,
            },
        ) => AbelianImage::free(t1 + t2, s1 + s2),
        _ => AbelianImage::Absorbed,
    }
}

impl Add for AbelianImage {
    type Output = AbelianImage;

    fn add(self, rhs: AbelianImage) -> AbelianImage {
        ab_add(self, rhs)
    }
}

fn letter_image(g: Generator) -> AbelianImage {
    match g {
        Generator::Eps | Generator::EpsI(_) => AbelianImage::Absorbed,
        Generator::Tau => AbelianImage::free(1, 0),
        Generator::TauInv => AbelianImage::free(-1, 0),
        Generator::Sigma(_) => AbelianImage::free(0, 1),
        Generator::SigmaInv(_) => AbelianImage::free(0, -1),
    }
}

pub fn abelianize(w: &Word) -> AbelianImage {
    w.letters()
        .iter()
        .fold(AbelianImage::ZERO, |acc, &g| acc + letter_image(g))
}

impl fmt::Display for AbelianImage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AbelianImage::Absorbed => f.write_str("eps"),
            AbelianImage::Free { tau_deg, sigma_deg } => write!(f, "({tau_deg}, {sigma_deg})"),
        }
    }
}

impl fmt::Display for AbelianImageMod2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AbelianImageMod2::Absorbed => f.write_str("eps"),
            AbelianImageMod2::Free {
                tau_parity,
                sigma_parity,
            } => write!(f, "({tau_parity}, {sigma_parity})"),
        }
    }
}
