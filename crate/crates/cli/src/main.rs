mod commands;

use clap::{Args, Parser, Subcommand, ValueEnum};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "bicat",
    version,
    about = "Word and language operations under (anti)morphic involutions, with exhaustive theorem verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output mode: structured is the stable testing contract.
    #[arg(long, global = true, value_enum, default_value_t = OutputMode::Structured)]
    output: OutputMode,
    /// Worker threads for verification runs (0 = all cores). Output is
    /// independent of this setting.
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputMode {
    Human,
    Structured,
}

#[derive(Args)]
struct InvOpt {
    /// Involution source: `dna`, an inline spec like `a<->b antimorphic`,
    /// or a file path.
    #[arg(long)]
    inv: String,
}

#[derive(Subcommand)]
enum Command {
    /// Word-level operations.
    Word {
        #[command(subcommand)]
        cmd: WordCmd,
    },
    /// Language-level operations on word-list and automaton files.
    Lang {
        #[command(subcommand)]
        cmd: LangCmd,
    },
    /// Run one exhaustive verification from the catalog.
    Verify {
        /// Theorem id; an unknown id lists the catalog.
        theorem: String,
        #[command(flatten)]
        inv: InvOpt,
        /// Maximum length of each quantified word variable.
        #[arg(long)]
        max_len: Option<usize>,
        /// Maximum member length for enumerated finite languages.
        #[arg(long)]
        lang_len: Option<usize>,
        /// Maximum exponent for generated template instances.
        #[arg(long)]
        exponent: Option<usize>,
        /// Truncation length for closure scans.
        #[arg(long)]
        closure_len: Option<usize>,
        /// Ceiling on estimated elementary comparisons.
        #[arg(long)]
        budget: Option<u64>,
    },
}

#[derive(Subcommand)]
enum WordCmd {
    /// Apply the involution to a word.
    Apply {
        #[command(flatten)]
        inv: InvOpt,
        word: String,
    },
    /// The pair {u, phi(u)}.
    Pair {
        #[command(flatten)]
        inv: InvOpt,
        word: String,
    },
    /// Strong catenation: all four image combinations of uv.
    Cat {
        #[command(flatten)]
        inv: InvOpt,
        u: String,
        v: String,
    },
    /// Strong bi-catenation: both concatenation orders of the pairs.
    Bicat {
        #[command(flatten)]
        inv: InvOpt,
        u: String,
        v: String,
    },
    /// Iterated power of a word.
    Power {
        #[command(flatten)]
        inv: InvOpt,
        word: String,
        n: usize,
    },
    /// Whether the word equals its image under an antimorphic involution.
    IsPalindrome {
        #[command(flatten)]
        inv: InvOpt,
        word: String,
    },
    /// Shortest root and exponent.
    PrimitiveRoot {
        #[command(flatten)]
        inv: InvOpt,
        word: String,
    },
    /// Whether the word is a block product of the base and its image,
    /// starting with the base.
    IsPhiPower {
        #[command(flatten)]
        inv: InvOpt,
        word: String,
        base: String,
    },
}

#[derive(Subcommand)]
enum LangCmd {
    /// Bi-catenation of two finite languages.
    Bicat {
        #[command(flatten)]
        inv: InvOpt,
        lang1: String,
        lang2: String,
    },
    /// n-th power of a finite language.
    Power {
        #[command(flatten)]
        inv: InvOpt,
        lang: String,
        n: usize,
    },
    /// All words of the plus-closure up to a length bound.
    Plus {
        #[command(flatten)]
        inv: InvOpt,
        lang: String,
        #[arg(long)]
        max_len: usize,
    },
    /// Layers 0..n of the iterative closure, truncated to a length bound.
    Layers {
        #[command(flatten)]
        inv: InvOpt,
        n: usize,
        lang: String,
        #[arg(long)]
        max_len: usize,
    },
    /// Iterative closure as an automaton, emitted in the NFA file format.
    Closure {
        #[command(flatten)]
        inv: InvOpt,
        lang: String,
    },
    /// Exactly the accepted words up to a length bound.
    Enumerate {
        nfa: String,
        #[arg(long)]
        max_len: usize,
    },
    /// Language equality of two automata.
    Equiv { nfa1: String, nfa2: String },
    /// Bounded closure check of a membership predicate.
    ClosedCheck {
        #[command(flatten)]
        inv: InvOpt,
        /// Predicate: `count-eq=a,b`, `count-sum=a,b,c`, `count-all-eq=a,b,c`,
        /// `words=<file>`, or `nfa=<file>`.
        #[arg(long)]
        lang: String,
        #[arg(long)]
        bound: usize,
    },
    /// Decide a word-language equation `uL = <side>` by automata
    /// equivalence.
    Equation {
        #[command(flatten)]
        inv: InvOpt,
        /// One of ul-lv, ul-ltv, ul-tlv, ul-tltv, ul-vl, ul-tvl, ul-vtl,
        /// ul-tvtl (t marks a theta image).
        #[arg(long)]
        variant: String,
        u: String,
        v: String,
        nfa: String,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.jobs > 0 {
        // ignore failure: the pool may already exist in tests
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(cli.jobs)
            .build_global();
    }
    let human = cli.output == OutputMode::Human;
    match commands::run(cli.command, human) {
        Ok(outcome) => {
            print!("{}", outcome.text);
            ExitCode::from(outcome.exit)
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(1)
        }
    }
}
