//! `invbraid` — evaluate, verify and count in the type-B inverse braid monoid.
//!
//! Words compose left to right: `u v` means "apply u, then v".

use std::io::{self, BufWriter, Write as _};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use invbraid::abelian::{abelianize, AbelianImage};
use invbraid::eval::{eval_word, surjectivity_witness, verify_presentation, EvalContext};
use invbraid::perm::{cardinality_formula, enumerate_elements, MAX_RANK};
use invbraid::presentation::PresentationId;
use invbraid::render::{render_dot, render_text};
use invbraid::{EnumerationCaps, Error, SignedPartialPerm, Word};
use serde_json::json;

const EXIT_VERIFY_FAILED: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_CAP: u8 = 3;

#[derive(Parser)]
#[command(
    name = "invbraid",
    version,
    about = "Inverse braid monoids of type B and their signed partial permutations",
    after_help = "Words: tokens separated by spaces or `*`; s<i> = sigma_i, S<i> = its inverse, \
                  t / T = tau and its inverse, e = eps, e<i> = eps_i. Composition is left to right."
)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the signed partial permutation a word evaluates to.
    Eval {
        #[arg(long)]
        n: usize,
        word: String,
        /// Evaluate into the rook monoid (words may not contain tau).
        #[arg(long)]
        unsigned: bool,
    },
    /// Evaluate two words and print the image of their product.
    Compose {
        #[arg(long)]
        n: usize,
        first: String,
        second: String,
    },
    /// Check every defining relation of a presentation in its image monoid.
    Verify {
        #[arg(long)]
        presentation: String,
        #[arg(long)]
        n: usize,
    },
    /// Count elements by formula and, within the caps, by enumeration.
    Count {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        unsigned: bool,
    },
    /// List every element, one per line.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        unsigned: bool,
    },
    /// Print a representative word for an element given as text or JSON.
    NormalForm {
        #[arg(long)]
        n: usize,
        element: String,
    },
    /// Image of a word in the abelianization.
    Abelianize {
        word: String,
        /// Check letters against this rank instead of inferring it.
        #[arg(long)]
        n: Option<usize>,
        /// Reduce the degrees mod 2.
        #[arg(long)]
        mod2: bool,
    },
    /// Strand diagram of the image of a word.
    Render {
        #[arg(long)]
        n: usize,
        word: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Dot,
}

enum Failure {
    Lib(Error),
    Verify,
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

fn check_rank(n: usize) -> Result<usize, Error> {
    if n > MAX_RANK {
        Err(Error::RankTooLarge(n))
    } else {
        Ok(n)
    }
}

fn parse_element(text: &str, n: usize) -> Result<SignedPartialPerm, Error> {
    let a = if text.trim_start().starts_with('{') {
        SignedPartialPerm::from_json(text)?
    } else {
        text.parse()?
    };
    if a.n() != n {
        return Err(Error::RankMismatch(a.n(), n));
    }
    Ok(a)
}

fn element_json(a: &SignedPartialPerm) -> serde_json::Value {
    serde_json::to_value(a).expect("element serialization is infallible")
}

fn run(cli: Cli, out: &mut impl io::Write) -> Result<(), Failure> {
    let json = cli.json;
    match cli.command {
        Command::Eval { n, word, unsigned } => {
            let n = check_rank(n)?;
            let w = Word::parse(&word, n)?;
            let ctx = EvalContext {
                rank: n,
                signed: !unsigned,
            };
            let a = eval_word(&w, ctx)?;
            if json {
                writeln!(out, "{}", a.to_json())?;
            } else {
                writeln!(out, "{a}")?;
            }
        }
        Command::Compose { n, first, second } => {
            let n = check_rank(n)?;
            let ctx = EvalContext::signed(n);
            let a = eval_word(&Word::parse(&first, n)?, ctx)?;
            let b = eval_word(&Word::parse(&second, n)?, ctx)?;
            let ab = a.then(&b)?;
            if json {
                let v = json!({
                    "first": element_json(&a),
                    "second": element_json(&b),
                    "product": element_json(&ab),
                });
                writeln!(out, "{v}")?;
            } else {
                writeln!(out, "{ab}")?;
            }
        }
        Command::Verify { presentation, n } => {
            let n = check_rank(n)?;
            let id: PresentationId = presentation.parse()?;
            let report = verify_presentation(id, n)?;
            if json {
                writeln!(out, "{}", report.to_json())?;
            } else {
                for bad in report.failures() {
                    writeln!(
                        out,
                        "FAIL {} = {}: {} vs {}",
                        bad.lhs, bad.rhs, bad.image_lhs, bad.image_rhs
                    )?;
                }
                let failed = report.failures().count();
                writeln!(
                    out,
                    "{id} n={n}: {} relations, {failed} failed",
                    report.pairs.len()
                )?;
            }
            if !report.all_equal {
                return Err(Failure::Verify);
            }
        }
        Command::Count { n, unsigned } => {
            let n = check_rank(n)?;
            let signed = !unsigned;
            let formula = cardinality_formula(n, signed);
            let enumerated = match enumerate_elements(n, signed, EnumerationCaps::default()) {
                Ok(it) => Some(it.count()),
                Err(Error::CapExceeded { .. }) => None,
                Err(e) => return Err(e.into()),
            };
            if json {
                let v = json!({
                    "n": n,
                    "signed": signed,
                    "formula": formula.to_string(),
                    "enumerated": enumerated,
                });
                writeln!(out, "{v}")?;
            } else {
                match enumerated {
                    Some(count) => writeln!(out, "formula {formula}, enumerated {count}")?,
                    None => writeln!(
                        out,
                        "formula {formula}, enumerated skipped (rank above cap {})",
                        EnumerationCaps::default().cap(signed)
                    )?,
                }
            }
        }
        Command::Enumerate { n, unsigned } => {
            let n = check_rank(n)?;
            for a in enumerate_elements(n, !unsigned, EnumerationCaps::default())? {
                if json {
                    writeln!(out, "{}", a.to_json())?;
                } else {
                    writeln!(out, "{a}")?;
                }
            }
        }
        Command::NormalForm { n, element } => {
            let n = check_rank(n)?;
            let a = parse_element(&element, n)?;
            let w = surjectivity_witness(&a);
            if json {
                let v = json!({ "element": element_json(&a), "word": w.to_string() });
                writeln!(out, "{v}")?;
            } else {
                writeln!(out, "{w}")?;
            }
        }
        Command::Abelianize { word, n, mod2 } => {
            let w = match n {
                Some(n) => Word::parse(&word, check_rank(n)?)?,
                None => Word::parse_unranked(&word)?,
            };
            let image = abelianize(&w);
            let text = if mod2 {
                image.to_mod2().to_string()
            } else {
                image.to_string()
            };
            if json {
                let v = match image {
                    AbelianImage::Absorbed => json!({ "absorbed": true }),
                    AbelianImage::Free { tau_deg, sigma_deg } => {
                        let (t, s) = if mod2 {
                            (tau_deg.rem_euclid(2), sigma_deg.rem_euclid(2))
                        } else {
                            (tau_deg, sigma_deg)
                        };
                        json!({ "absorbed": false, "tau_deg": t, "sigma_deg": s })
                    }
                };
                writeln!(out, "{v}")?;
            } else {
                writeln!(out, "{text}")?;
            }
        }
        Command::Render { n, word, format } => {
            let n = check_rank(n)?;
            let a = eval_word(&Word::parse(&word, n)?, EvalContext::signed(n))?;
            let diagram = match format {
                Format::Text => render_text(&a),
                Format::Dot => render_dot(&a),
            };
            if json {
                let format = match format {
                    Format::Text => "text",
                    Format::Dot => "dot",
                };
                let v =
                    json!({ "element": element_json(&a), "format": format, "diagram": diagram });
                writeln!(out, "{v}")?;
            } else {
                write!(out, "{diagram}")?;
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = run(cli, &mut out);
    let flushed = out.flush();
    match result.and(flushed.map_err(Failure::Io)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verify) => ExitCode::from(EXIT_VERIFY_FAILED),
        Err(Failure::Lib(e @ (Error::CapExceeded { .. } | Error::RankTooLarge(_)))) => {
            eprintln!("invbraid: {e}");
            ExitCode::from(EXIT_CAP)
        }
        Err(Failure::Lib(e)) => {
            eprintln!("invbraid: {e}");
            ExitCode::from(EXIT_PARSE)
        }
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failure::Io(e)) => {
            eprintln!("invbraid: {e}");
            ExitCode::FAILURE
        }
    }
}
