//! The `nhopf` command line.

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use natural_hopf::alphabet::{disjoint_sum, realize_forest};
use natural_hopf::enumerate::TermCatalog;
use natural_hopf::hopf::{antipode, classify_profile, coproduct_basis, hilbert_dims, ForestComb};
use natural_hopf::lincomb::map_legs;
use natural_hopf::positions::{alphabet_lengths, alphabet_positions, pos_word, render_position_letter, weight};
use natural_hopf::quotient::{
    fdb_coproduct, mas_coproduct, phi_expand, phr_coproduct, ByContent, ByDegree, ByInfix, Phrase,
};
use natural_hopf::syntax::{
    parse_count_phrase, parse_forest, parse_multiset_phrase, parse_trimmed_forest, parse_word_phrase, Render,
};
use natural_hopf::trimmed::{charge, length_polynomial, nck_coproduct_basis, trim, untrim};
use natural_hopf::wqsym::wqsym_decompose;
use natural_hopf::{ForestLikeAlphabet, LinComb, Polynomial, Signature};

use crate::acceptance;
use crate::format::{
    lincomb_rows, lincomb_text, polynomial_rows, polynomial_text, tensor_rows, tensor_text, to_json, Coeff, Format,
};
use crate::sigfile::{parse_profile, read_signature};

/// Environment variable holding the default output format.
pub const FORMAT_ENV: &str = "NHOPF_FORMAT";

#[derive(Debug, Parser)]
#[command(name = "nhopf", version, about = "Natural Hopf algebras of free operads")]
struct Cli {
    /// Signature file with one `name arity` pair per line
    #[arg(long, global = true, conflicts_with = "profile")]
    sig: Option<PathBuf>,

    /// Signature given by its profile, e.g. `0,1,1,1`; generators are named a, b, c, ...
    #[arg(long, global = true)]
    profile: Option<String>,

    #[arg(long, global = true, value_enum, env = FORMAT_ENV, default_value = "text")]
    format: Format,

    /// Longest label or length kept in truncated alphabets [default: degree + 2]
    #[arg(short = 'L', global = true)]
    max_len: Option<usize>,

    /// Largest label entry of position alphabets [default: largest arity]
    #[arg(short = 'J', global = true)]
    max_entry: Option<usize>,

    #[command(subcommand)]
    verb: Verb,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum AlphabetKind {
    Lengths,
    Positions,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum QuotientKind {
    /// classes of terms with equal content
    Mas,
    /// classes of binary terms with equal infix reading
    Int,
    /// classes of binary terms with equal degree
    Fdb,
}

#[derive(Debug, Subcommand)]
enum Verb {
    /// Degree and arity of a forest
    Stats { forest: String },
    /// Concatenation of forests
    Product {
        #[arg(required = true)]
        forests: Vec<String>,
    },
    /// Coproduct of a forest
    Coproduct { forest: String },
    /// Antipode of a forest
    Antipode { forest: String },
    /// Dimensions of the graded components 0..=n
    Hilbert {
        #[arg(long)]
        n: usize,
    },
    /// Commutativity and cocommutativity of the signature's Hopf algebra
    Classify,
    /// Polynomial realization of a forest over a truncated alphabet
    Realize {
        forest: String,
        #[arg(long, value_enum, default_value = "lengths")]
        alphabet: AlphabetKind,
    },
    /// Checks the doubling identity for a forest over two copies of the lengths alphabet
    ThetaCheck { forest: String },
    /// Position word of a forest and its weight
    Pos { forest: String },
    /// Packed decorated words whose M-polynomials sum to the realization of a forest
    DecomposeWqsym { forest: String },
    /// Trimmed forest of a forest
    Trim { forest: String },
    /// Number of forests with the given trim
    Charge { trimmed: String },
    /// All forests with the given trim
    Untrim { trimmed: String },
    /// Coproduct of a trimmed forest
    NckCoproduct { trimmed: String },
    /// Realization over the lengths alphabet shared by all untrimmings
    LengthPoly { trimmed: String },
    /// Sum of the forests of a quotient phrase
    Phi {
        phrase: String,
        #[arg(long, value_enum)]
        quotient: QuotientKind,
    },
    /// Coproduct of a multiset phrase such as `{a,b,b} ; {c}`
    MasCoproduct { phrase: String },
    /// Coproduct of a count phrase such as `120 ; 1`, with arity parameter r
    FdbCoproduct {
        phrase: String,
        #[arg(long)]
        r: usize,
    },
    /// Coproduct of a phrase of words such as `aab, b`
    PhrCoproduct { phrase: String },
    /// Runs the acceptance suite
    SelfTest {
        /// Run a single criterion
        #[arg(long)]
        only: Option<usize>,
    },
}

/// A failure of a precondition on otherwise well-formed arguments.
struct DomainError(String);

impl<E: std::fmt::Display> From<E> for DomainError {
    fn from(e: E) -> Self {
        DomainError(e.to_string())
    }
}

type Outcome = Result<String, DomainError>;

/// Runs the command line; returns the process exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            let _ = if code == 0 { out.write_all(rendered.as_bytes()) } else { err.write_all(rendered.as_bytes()) };
            return code;
        }
    };
    let (result, code) = match execute(&cli) {
        Ok(text) => (out.write_all(text.as_bytes()), 0),
        Err(DomainError(message)) => (writeln!(err, "error: {message}"), 1),
    };
    match result {
        Ok(()) => code,
        Err(_) => 1,
    }
}

fn signature(cli: &Cli) -> Result<Signature, DomainError> {
    match (&cli.sig, &cli.profile) {
        (Some(path), _) => Ok(read_signature(path)?),
        (None, Some(profile)) => Ok(parse_profile(profile)?),
        (None, None) => Ok(Signature::from_profile(&[0, 1, 1, 1])),
    }
}

fn emit_lincomb<K: Ord + Clone + Render>(x: &LinComb<K>, sig: &Signature, format: Format) -> String {
    let rows = lincomb_rows(x, |k| k.render(sig));
    match format {
        Format::Text => lincomb_text(&rows),
        Format::Json => to_json(&rows),
    }
}

fn emit_tensor<K: Ord + Clone + Render>(x: &LinComb<(K, K)>, sig: &Signature, format: Format) -> String {
    let rows = tensor_rows(x, |k| k.render(sig));
    match format {
        Format::Text => tensor_text(&rows),
        Format::Json => to_json(&rows),
    }
}

fn emit_polynomial(p: &Polynomial, alphabet: &ForestLikeAlphabet, format: Format) -> String {
    let rows = polynomial_rows(p, alphabet);
    match format {
        Format::Text => polynomial_text(&rows),
        Format::Json => to_json(&rows),
    }
}

fn parse_degree_phrase(text: &str) -> Result<Phrase<usize>, DomainError> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Phrase::new(Vec::new()));
    }
    let entries = text
        .split(';')
        .map(|e| {
            e.trim()
                .parse::<usize>()
                .map_err(|_| DomainError(format!("`{}` is not a degree", e.trim())))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Phrase::new(entries))
}

fn execute(cli: &Cli) -> Outcome {
    let sig = signature(cli)?;
    let format = cli.format;
    let forest = |text: &str| parse_forest(text, &sig);
    let max_len = |degree: usize| cli.max_len.unwrap_or(degree + 2);
    let max_entry = cli.max_entry.unwrap_or(sig.max_arity());
    Ok(match &cli.verb {
        Verb::Stats { forest: text } => {
            let f = forest(text)?;
            match format {
                Format::Text => format!("degree={} arity={}\n", f.degree(), f.arity()),
                Format::Json => to_json(&serde_json::json!({ "degree": f.degree(), "arity": f.arity() })),
            }
        }
        Verb::Product { forests } => {
            let mut x = ForestComb::one();
            for text in forests {
                x = x.mul(&ForestComb::basis(forest(text)?));
            }
            emit_lincomb(&x, &sig, format)
        }
        Verb::Coproduct { forest: text } => emit_tensor(&coproduct_basis(&forest(text)?), &sig, format),
        Verb::Antipode { forest: text } => emit_lincomb(&antipode(&ForestComb::basis(forest(text)?)), &sig, format),
        Verb::Hilbert { n } => {
            let dims = hilbert_dims(&sig, *n);
            match format {
                Format::Text => {
                    let parts: Vec<String> = dims.iter().map(ToString::to_string).collect();
                    format!("{}\n", parts.join(" "))
                }
                Format::Json => to_json(&dims.into_iter().map(Coeff).collect::<Vec<_>>()),
            }
        }
        Verb::Classify => {
            let s = classify_profile(&sig);
            match format {
                Format::Text => format!("commutative={} cocommutative={}\n", s.commutative, s.cocommutative),
                Format::Json => to_json(&serde_json::json!({
                    "commutative": s.commutative,
                    "cocommutative": s.cocommutative,
                })),
            }
        }
        Verb::Realize { forest: text, alphabet } => {
            let f = forest(text)?;
            let len = max_len(f.degree());
            match alphabet {
                AlphabetKind::Lengths => {
                    let al = alphabet_lengths(&sig, len);
                    emit_polynomial(&realize_forest(&f, al.alphabet()), al.alphabet(), format)
                }
                AlphabetKind::Positions => {
                    let ap = alphabet_positions(&sig, len, max_entry);
                    emit_polynomial(&realize_forest(&f, ap.alphabet()), ap.alphabet(), format)
                }
            }
        }
        Verb::ThetaCheck { forest: text } => {
            let f = forest(text)?;
            let al = alphabet_lengths(&sig, max_len(f.degree()));
            let sum = disjoint_sum(al.alphabet(), al.alphabet());
            let split = sum.theta_split(&realize_forest(&f, sum.alphabet()));
            let expected = map_legs(
                &coproduct_basis(&f),
                |l| realize_forest(l, al.alphabet()),
                |r| realize_forest(r, al.alphabet()),
            );
            if split != expected {
                return Err(DomainError("doubling identity fails".into()));
            }
            match format {
                Format::Text => format!("holds terms={}\n", split.len()),
                Format::Json => to_json(&serde_json::json!({ "holds": true, "terms": split.len() })),
            }
        }
        Verb::Pos { forest: text } => {
            let letters = pos_word(&forest(text)?);
            let names: Vec<String> = letters.iter().map(|l| render_position_letter(&sig, l)).collect();
            let w = weight(&letters);
            match format {
                Format::Text => format!("{}\nweight={w}\n", names.join(" ")),
                Format::Json => to_json(&serde_json::json!({ "word": names, "weight": w })),
            }
        }
        Verb::DecomposeWqsym { forest: text } => emit_lincomb(&wqsym_decompose(&forest(text)?), &sig, format),
        Verb::Trim { forest: text } => {
            let t = trim(&forest(text)?).render(&sig);
            match format {
                Format::Text => format!("{t}\n"),
                Format::Json => to_json(&serde_json::json!({ "trimmed": t })),
            }
        }
        Verb::Charge { trimmed } => {
            let t = parse_trimmed_forest(trimmed, &sig)?;
            let ch = charge(&t, &sig);
            match format {
                Format::Text => format!("{ch}\n"),
                Format::Json => to_json(&serde_json::json!({ "charge": Coeff(ch) })),
            }
        }
        Verb::Untrim { trimmed } => {
            let t = parse_trimmed_forest(trimmed, &sig)?;
            emit_lincomb(&LinComb::from_keys(untrim(&t, &sig)), &sig, format)
        }
        Verb::NckCoproduct { trimmed } => {
            let t = parse_trimmed_forest(trimmed, &sig)?;
            emit_tensor(&nck_coproduct_basis(&t), &sig, format)
        }
        Verb::LengthPoly { trimmed } => {
            let t = parse_trimmed_forest(trimmed, &sig)?;
            let al = alphabet_lengths(&sig, max_len(t.degree()));
            emit_polynomial(&length_polynomial(&t, &al), al.alphabet(), format)
        }
        Verb::Phi { phrase, quotient } => {
            let mut catalog = TermCatalog::new(&sig);
            let x = match quotient {
                QuotientKind::Mas => phi_expand(&parse_multiset_phrase(phrase, &sig)?, &ByContent, &mut catalog),
                QuotientKind::Int => phi_expand(&parse_word_phrase(phrase, &sig)?, &ByInfix::new(&sig)?, &mut catalog),
                QuotientKind::Fdb => phi_expand(&parse_degree_phrase(phrase)?, &ByDegree::new(&sig)?, &mut catalog),
            };
            emit_lincomb(&x, &sig, format)
        }
        Verb::MasCoproduct { phrase } => {
            let x = parse_multiset_phrase(phrase, &sig)?;
            emit_tensor(&mas_coproduct(&x, &sig), &sig, format)
        }
        Verb::FdbCoproduct { phrase, r } => {
            let x = parse_count_phrase(phrase)?;
            emit_tensor(&fdb_coproduct(*r, &x)?, &sig, format)
        }
        Verb::PhrCoproduct { phrase } => {
            let x = parse_word_phrase(phrase, &sig)?;
            emit_tensor(&phr_coproduct(&x), &sig, format)
        }
        Verb::SelfTest { only } => {
            let outcomes = match only {
                Some(id) => vec![acceptance::run_one(*id)
                    .ok_or_else(|| DomainError(format!("no criterion {id}")))?],
                None => acceptance::run_all(),
            };
            let text = match format {
                Format::Text => {
                    let mut s: String = outcomes.iter().map(|o| o.line() + "\n").collect();
                    let passed = outcomes.iter().filter(|o| o.passed).count();
                    s.push_str(&format!("{passed} passed, {} failed\n", outcomes.len() - passed));
                    s
                }
                Format::Json => to_json(
                    &outcomes
                        .iter()
                        .map(|o| {
                            serde_json::json!({
                                "id": o.id,
                                "title": o.title,
                                "passed": o.passed,
                                "detail": o.detail,
                            })
                        })
                        .collect::<Vec<_>>(),
                ),
            };
            if outcomes.iter().any(|o| !o.passed) {
                return Err(DomainError(format!("acceptance suite failed\n{text}")));
            }
            text
        }
    })
}
