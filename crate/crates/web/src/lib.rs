//! Browser bindings for the static demo page in `www/`.
//!
//! Every function takes plain strings and returns a string, or throws the
//! error message as a string.

use invbraid::abelian::abelianize;
use invbraid::eval::{rho_b, verify_presentation};
use invbraid::presentation::PresentationId;
use invbraid::render::render_svg;
use invbraid::{SignedPartialPerm, Word};
use wasm_bindgen::prelude::*;

/// Largest rank the page accepts; diagrams get unreadable beyond this.
pub const MAX_DEMO_RANK: usize = 12;

fn image(word: &str, n: usize) -> Result<SignedPartialPerm, String> {
    if n > MAX_DEMO_RANK {
        return Err(format!(
            "rank {n} is above the demo limit of {MAX_DEMO_RANK}"
        ));
    }
    let w = Word::parse(word, n).map_err(|e| e.to_string())?;
    rho_b(&w).map_err(|e| e.to_string())
}

/// Text form of the signed partial permutation `word` evaluates to.
#[wasm_bindgen]
pub fn evaluate(word: &str, n: usize) -> Result<String, String> {
    image(word, n).map(|a| a.to_string())
}

/// Strand diagram of the image of `word` as an SVG document.
#[wasm_bindgen]
pub fn render(word: &str, n: usize) -> Result<String, String> {
    image(word, n).map(|a| render_svg(&a))
}

/// JSON verification report for the presentation `id` at rank `n`.
#[wasm_bindgen]
pub fn verify(id: &str, n: usize) -> Result<String, String> {
    if n > 6 {
        return Err(format!("rank {n} is above the demo limit of 6"));
    }
    let id: PresentationId = id.parse().map_err(|e: invbraid::Error| e.to_string())?;
    verify_presentation(id, n)
        .map(|r| r.to_json())
        .map_err(|e| e.to_string())
}

/// Abelianization of a word: `eps` or `(tau_deg, sigma_deg)`.
#[wasm_bindgen(js_name = abelianize)]
pub fn abelianize_word(word: &str, mod2: bool) -> Result<String, String> {
    let w = Word::parse_unranked(word).map_err(|e| e.to_string())?;
    let image = abelianize(&w);
    Ok(if mod2 {
        image.to_mod2().to_string()
    } else {
        image.to_string()
    })
}
