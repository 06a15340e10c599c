//! Command handlers: thin wrappers over the library calls, with stable
//! structured output (one word per line, `_` for the empty word) and exit
//! code 2 for found witnesses and counterexamples.

use std::fmt::Write as _;
use std::fs;

use bicat_core::bicat::{is_phi_power, phi_pair, strong_bicat, strong_cat, word_power, WordSet};
use bicat_core::combinatorics::primitive_root;
use bicat_core::equation::{lang_equation_check, EquationOutcome, EquationVariant, Side};
use bicat_core::lang::{
    closure_layers, lang_bicat, lang_power, plus_closure_truncated, words_from_text,
};
use bicat_core::nfa::{LangEquivalence, Nfa};
use bicat_core::predicate::{closed_check, ClosedCheck, LangPredicate};
use bicat_core::{Involution, Word};
use bicat_oracle::{verify, Bounds, Status, TheoremId};

use crate::{Command, LangCmd, WordCmd};

pub struct Outcome {
    pub text: String,
    pub exit: u8,
}

#[derive(Debug)]
pub enum CliError {
    Core(bicat_core::Error),
    Oracle(bicat_oracle::OracleError),
    Io(String, std::io::Error),
    Usage(String),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Oracle(e) => write!(f, "{e}"),
            CliError::Io(path, e) => write!(f, "{path}: {e}"),
            CliError::Usage(msg) => write!(f, "{msg}"),
        }
    }
}

impl From<bicat_core::Error> for CliError {
    fn from(e: bicat_core::Error) -> Self {
        CliError::Core(e)
    }
}

impl From<bicat_oracle::OracleError> for CliError {
    fn from(e: bicat_oracle::OracleError) -> Self {
        CliError::Oracle(e)
    }
}

fn read(path: &str) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Io(path.to_string(), e))
}

/// `dna`, an inline spec containing `->`, or a file path.
fn load_involution(spec: &str) -> Result<Involution, CliError> {
    if spec == "dna" {
        return Ok(Involution::dna());
    }
    if spec.contains("->") {
        return Ok(Involution::parse_inline(spec)?);
    }
    Ok(Involution::parse_file(&read(spec)?)?)
}

/// Word-list or NFA file, recognized by the leading `alphabet:` field.
enum LangInput {
    Words(WordSet),
    Automaton(Nfa),
}

fn load_language(inv: &Involution, path: &str) -> Result<LangInput, CliError> {
    let text = read(path)?;
    let is_nfa = text
        .lines()
        .find(|l| !l.trim().is_empty())
        .map(|l| l.trim().starts_with("alphabet:"))
        .unwrap_or(false);
    if is_nfa {
        let nfa = Nfa::from_text(&text)?;
        if nfa.alphabet() != inv.alphabet() {
            return Err(CliError::Core(bicat_core::Error::AlphabetMismatch));
        }
        Ok(LangInput::Automaton(nfa))
    } else {
        Ok(LangInput::Words(words_from_text(inv.alphabet(), &text)?))
    }
}

fn load_words(inv: &Involution, path: &str) -> Result<WordSet, CliError> {
    match load_language(inv, path)? {
        LangInput::Words(w) => Ok(w),
        LangInput::Automaton(_) => Err(CliError::Usage(format!(
            "{path}: this subcommand takes a word-list file, not an automaton"
        ))),
    }
}

fn load_nfa(path: &str) -> Result<Nfa, CliError> {
    let text = read(path)?;
    Ok(Nfa::from_text(&text)?)
}

fn parse_word(inv: &Involution, text: &str) -> Result<Word, CliError> {
    Ok(inv.alphabet().parse_word(text)?)
}

fn render_set(inv: &Involution, set: &WordSet) -> String {
    let mut out = String::new();
    for w in set {
        out.push_str(&inv.alphabet().format_word(w));
        out.push('\n');
    }
    out
}

fn ok(text: String) -> Result<Outcome, CliError> {
    Ok(Outcome { text, exit: 0 })
}

fn with_header(human: bool, header: &str, mut text: String) -> String {
    if human {
        text.insert_str(0, &format!("# {header}\n"));
    }
    text
}

pub fn run(command: Command, human: bool) -> Result<Outcome, CliError> {
    match command {
        Command::Word { cmd } => run_word(cmd, human),
        Command::Lang { cmd } => run_lang(cmd, human),
        Command::Verify {
            theorem,
            inv,
            max_len,
            lang_len,
            exponent,
            closure_len,
            budget,
        } => {
            let Some(id) = TheoremId::parse(&theorem) else {
                let catalog: Vec<String> = TheoremId::ALL
                    .iter()
                    .map(|t| format!("  {:20} {}", t.id(), t.summary()))
                    .collect();
                return Err(CliError::Usage(format!(
                    "unknown theorem `{theorem}`; available:\n{}",
                    catalog.join("\n")
                )));
            };
            let theta = load_involution(&inv.inv)?;
            let mut bounds = Bounds::default();
            if let Some(n) = max_len {
                bounds.word_len = n;
            }
            if let Some(n) = lang_len {
                bounds.lang_word_len = n;
            }
            if let Some(n) = exponent {
                bounds.exponent = n;
            }
            if let Some(n) = closure_len {
                bounds.closure_len = n;
            }
            if let Some(n) = budget {
                bounds.budget = n;
            }
            let report = verify(id, &theta, &bounds)?;
            let exit = match report.status() {
                Status::AllPass => 0,
                Status::Counterexample => 2,
            };
            Ok(Outcome {
                text: report.render(),
                exit,
            })
        }
    }
}

fn run_word(cmd: WordCmd, human: bool) -> Result<Outcome, CliError> {
    match cmd {
        WordCmd::Apply { inv, word } => {
            let inv = load_involution(&inv.inv)?;
            let w = parse_word(&inv, &word)?;
            let image = inv.apply(&w);
            ok(with_header(
                human,
                "involution image",
                format!("{}\n", inv.alphabet().format_word(&image)),
            ))
        }
        WordCmd::Pair { inv, word } => {
            let inv = load_involution(&inv.inv)?;
            let w = parse_word(&inv, &word)?;
            let set = phi_pair(&inv, &w);
            ok(with_header(
                human,
                "pair {u, phi(u)}",
                render_set(&inv, &set),
            ))
        }
        WordCmd::Cat { inv, u, v } => {
            let inv = load_involution(&inv.inv)?;
            let u = parse_word(&inv, &u)?;
            let v = parse_word(&inv, &v)?;
            let set = strong_cat(&inv, &u, &v);
            ok(with_header(
                human,
                "strong catenation",
                render_set(&inv, &set),
            ))
        }
        WordCmd::Bicat { inv, u, v } => {
            let inv = load_involution(&inv.inv)?;
            let u = parse_word(&inv, &u)?;
            let v = parse_word(&inv, &v)?;
            let set = strong_bicat(&inv, &u, &v);
            ok(with_header(
                human,
                "strong bi-catenation",
                render_set(&inv, &set),
            ))
        }
        WordCmd::Power { inv, word, n } => {
            let inv = load_involution(&inv.inv)?;
            let w = parse_word(&inv, &word)?;
            let set = word_power(&inv, &w, n);
            ok(with_header(human, "iterated power", render_set(&inv, &set)))
        }
        WordCmd::IsPalindrome { inv, word } => {
            let inv = load_involution(&inv.inv)?;
            let w = parse_word(&inv, &word)?;
            ok(format!("{}\n", inv.is_theta_palindrome(&w)?))
        }
        WordCmd::PrimitiveRoot { inv, word } => {
            let inv = load_involution(&inv.inv)?;
            let w = parse_word(&inv, &word)?;
            let r = primitive_root(&w)?;
            ok(format!(
                "{} {}\n",
                inv.alphabet().format_word(&r.root),
                r.exponent
            ))
        }
        WordCmd::IsPhiPower { inv, word, base } => {
            let inv = load_involution(&inv.inv)?;
            let w = parse_word(&inv, &word)?;
            let base = parse_word(&inv, &base)?;
            ok(format!("{}\n", is_phi_power(&inv, &w, &base)?))
        }
    }
}

fn run_lang(cmd: LangCmd, human: bool) -> Result<Outcome, CliError> {
    match cmd {
        LangCmd::Bicat { inv, lang1, lang2 } => {
            let inv = load_involution(&inv.inv)?;
            let l1 = load_words(&inv, &lang1)?;
            let l2 = load_words(&inv, &lang2)?;
            let set = lang_bicat(&inv, &l1, &l2);
            ok(with_header(
                human,
                "language bi-catenation",
                render_set(&inv, &set),
            ))
        }
        LangCmd::Power { inv, lang, n } => {
            let inv = load_involution(&inv.inv)?;
            let l = load_words(&inv, &lang)?;
            let set = lang_power(&inv, &l, n);
            ok(with_header(human, "language power", render_set(&inv, &set)))
        }
        LangCmd::Plus { inv, lang, max_len } => {
            let inv = load_involution(&inv.inv)?;
            let l = load_words(&inv, &lang)?;
            let set = plus_closure_truncated(&inv, &l, max_len)?;
            ok(with_header(
                human,
                "plus-closure (truncated)",
                render_set(&inv, &set),
            ))
        }
        LangCmd::Layers {
            inv,
            n,
            lang,
            max_len,
        } => {
            let inv = load_involution(&inv.inv)?;
            let l = load_words(&inv, &lang)?;
            let layers = closure_layers(&inv, &l, n, max_len)?;
            let mut text = String::new();
            for (i, layer) in layers.iter().enumerate() {
                writeln!(text, "layer {i}").unwrap();
                text.push_str(&render_set(&inv, layer));
            }
            ok(with_header(human, "iterative closure layers", text))
        }
        LangCmd::Closure { inv, lang } => {
            let inv = load_involution(&inv.inv)?;
            let nfa = match load_language(&inv, &lang)? {
                LangInput::Words(l) => Nfa::from_words(inv.alphabet().clone(), &l),
                LangInput::Automaton(nfa) => nfa,
            };
            let closed = nfa.iter_closure(&inv)?;
            ok(closed.to_text())
        }
        LangCmd::Enumerate { nfa, max_len } => {
            let nfa = load_nfa(&nfa)?;
            let mut text = String::new();
            for w in &nfa.enumerate(max_len) {
                text.push_str(&nfa.alphabet().format_word(w));
                text.push('\n');
            }
            ok(text)
        }
        LangCmd::Equiv { nfa1, nfa2 } => {
            let a = load_nfa(&nfa1)?;
            let b = load_nfa(&nfa2)?;
            match a.equivalent(&b)? {
                LangEquivalence::Equivalent => ok("Equivalent\n".to_string()),
                LangEquivalence::Witness(w) => Ok(Outcome {
                    text: format!(
                        "Witness {} {}\n",
                        a.alphabet().format_word(&w),
                        if a.accepts(&w) { "left" } else { "right" }
                    ),
                    exit: 2,
                }),
            }
        }
        LangCmd::ClosedCheck { inv, lang, bound } => {
            let inv = load_involution(&inv.inv)?;
            let pred = parse_predicate(&inv, &lang)?;
            match closed_check(&inv, &pred, bound) {
                ClosedCheck::Closed => ok("Closed\n".to_string()),
                ClosedCheck::Counterexample { u, v, w } => Ok(Outcome {
                    text: format!(
                        "Counterexample u={} v={} w={}\n",
                        inv.alphabet().format_word(&u),
                        inv.alphabet().format_word(&v),
                        inv.alphabet().format_word(&w)
                    ),
                    exit: 2,
                }),
            }
        }
        LangCmd::Equation {
            inv,
            variant,
            u,
            v,
            nfa,
        } => {
            let inv = load_involution(&inv.inv)?;
            let Some(variant) = EquationVariant::parse(&variant) else {
                let tokens: Vec<&str> = EquationVariant::ALL.iter().map(|v| v.token()).collect();
                return Err(CliError::Usage(format!(
                    "unknown variant `{variant}`; available: {}",
                    tokens.join(" ")
                )));
            };
            let u = parse_word(&inv, &u)?;
            let v = parse_word(&inv, &v)?;
            let l = match load_language(&inv, &nfa)? {
                LangInput::Words(set) => Nfa::from_words(inv.alphabet().clone(), &set),
                LangInput::Automaton(nfa) => nfa,
            };
            match lang_equation_check(&inv, &u, &v, &l, variant)? {
                EquationOutcome::Holds => ok("Holds\n".to_string()),
                EquationOutcome::Witness { word, side } => Ok(Outcome {
                    text: format!(
                        "Witness {} {}\n",
                        inv.alphabet().format_word(&word),
                        match side {
                            Side::Left => "left",
                            Side::Right => "right",
                        }
                    ),
                    exit: 2,
                }),
            }
        }
    }
}

/// `count-eq=a,b`, `count-sum=a,b,c`, `count-all-eq=a,b,c`, `words=<file>`,
/// `nfa=<file>`.
fn parse_predicate(inv: &Involution, spec: &str) -> Result<LangPredicate, CliError> {
    let (kind, rest) = spec.split_once('=').ok_or_else(|| {
        CliError::Usage("predicate spec must look like `count-eq=a,b` or `words=<file>`".into())
    })?;
    let letters = |expected: usize| -> Result<Vec<bicat_core::Letter>, CliError> {
        let parts: Vec<&str> = rest.split(',').collect();
        if parts.len() != expected {
            return Err(CliError::Usage(format!(
                "predicate `{kind}` takes {expected} comma-separated letters"
            )));
        }
        parts
            .iter()
            .map(|p| inv.alphabet().letter(p.trim()).map_err(CliError::Core))
            .collect()
    };
    match kind {
        "count-eq" => {
            let ls = letters(2)?;
            Ok(LangPredicate::CountEq(ls[0], ls[1]))
        }
        "count-sum" => {
            let ls = letters(3)?;
            Ok(LangPredicate::CountSumEq(ls[0], ls[1], ls[2]))
        }
        "count-all-eq" => {
            let ls = letters(3)?;
            Ok(LangPredicate::CountAllEq(ls[0], ls[1], ls[2]))
        }
        "words" => Ok(LangPredicate::Finite(load_words(inv, rest)?)),
        "nfa" => {
            let nfa = load_nfa(rest)?;
            if nfa.alphabet() != inv.alphabet() {
                return Err(CliError::Core(bicat_core::Error::AlphabetMismatch));
            }
            Ok(LangPredicate::Automaton(nfa))
        }
        other => Err(CliError::Usage(format!("unknown predicate kind `{other}`"))),
    }
}
