//! Exhaustive, bounded verification of the word- and language-level results
//! about strong bi-catenation: every routine enumerates its full input
//! domain up to the configured length bounds (never sampling), evaluates
//! both sides of the claim, and reports counterexamples with full context.

pub mod catalog;
pub mod forms;
pub mod report;
mod routines;

use bicat_core::{Error as CoreError, Involution};
use thiserror::Error;

pub use catalog::TheoremId;
pub use report::{ReportBuilder, Status, VerificationReport};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error("estimated {estimated} elementary comparisons exceed the budget of {budget}; lower the bounds")]
    BudgetExceeded { estimated: u64, budget: u64 },
    #[error("unknown theorem id `{0}`")]
    UnknownTheorem(String),
    #[error("form family {family} expects {expected} words")]
    BadArity {
        family: &'static str,
        expected: usize,
    },
}

/// Per-variable enumeration bounds. Every verification is exhaustive within
/// these; exceeding the budget is an error, never a reason to sample.
#[derive(Debug, Clone)]
pub struct Bounds {
    /// Maximum length of each quantified word variable.
    pub word_len: usize,
    /// Word length for the triple-product searches (associativity and
    /// inclusion witnesses), which enumerate |W|^3 triples of set products.
    pub triple_len: usize,
    /// Maximum member length when enumerating finite languages.
    pub lang_word_len: usize,
    /// Maximum exponent for generated template instances.
    pub exponent: usize,
    /// Length truncation for closures and bounded language scans.
    pub closure_len: usize,
    /// Ceiling on estimated elementary comparisons per run.
    pub budget: u64,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            word_len: 4,
            triple_len: 2,
            lang_word_len: 2,
            exponent: 3,
            closure_len: 6,
            budget: 100_000_000,
        }
    }
}

impl Bounds {
    pub fn with_word_len(mut self, n: usize) -> Self {
        self.word_len = n;
        self
    }

    pub(crate) fn check_budget(&self, estimated: u64) -> Result<(), OracleError> {
        if estimated > self.budget {
            Err(OracleError::BudgetExceeded {
                estimated,
                budget: self.budget,
            })
        } else {
            Ok(())
        }
    }
}

/// Runs the exhaustive verification routine for one catalog entry.
/// Deterministic: identical inputs produce bit-identical reports, regardless
/// of how many worker threads execute the enumeration.
pub fn verify(
    theorem: TheoremId,
    theta: &Involution,
    bounds: &Bounds,
) -> Result<VerificationReport, OracleError> {
    if theorem.requires_antimorphic() {
        theta.require_antimorphic().map_err(OracleError::Core)?;
    }
    match theorem {
        TheoremId::Omr1 => routines::bicat::omr1(theta, bounds),
        TheoremId::BicatPhiClosure => routines::bicat::bicat_phi_closure(theta, bounds),
        TheoremId::BwProperties => routines::bicat::bw_properties(theta, bounds),
        TheoremId::AssocSufficient => routines::bicat::assoc_sufficient(theta, bounds),
        TheoremId::Lemch => routines::langs::lemch(theta, bounds),
        TheoremId::Pro1212 => routines::langs::pro1212(theta, bounds),
        TheoremId::Pro1213 => routines::langs::pro1213(theta, bounds),
        TheoremId::PlusClosed => routines::langs::plus_closed(theta, bounds),
        TheoremId::ClosedTransfer => routines::langs::closed_transfer(theta, bounds),
        TheoremId::BoolClosure => routines::langs::bool_closure(theta, bounds),
        TheoremId::ClCharacterization => routines::langs::cl_characterization(theta, bounds),
        TheoremId::Pcj1 => routines::conjugacy::pcj(theta, bounds, 1),
        TheoremId::Pcj2 => routines::conjugacy::pcj(theta, bounds, 2),
        TheoremId::Pcj3 => routines::conjugacy::pcj(theta, bounds, 3),
        TheoremId::Pcj4 => routines::conjugacy::pcj(theta, bounds, 4),
        TheoremId::Lus1 => routines::words::lus1(theta, bounds),
        TheoremId::Mr1 => routines::conjugacy::mr1(theta, bounds),
        TheoremId::Reflem7 => routines::words::reflem7(theta, bounds),
        TheoremId::Reflem8 => routines::words::reflem8(theta, bounds),
        TheoremId::Refcor8 => routines::words::refcor8(theta, bounds),
        TheoremId::Lemconj => routines::words::lemconj(theta, bounds),
        TheoremId::Lpow => routines::words::lpow(theta, bounds),
        TheoremId::Gg1a => routines::words::gg1a(theta, bounds),
        TheoremId::Gg1b => routines::words::gg1b(theta, bounds),
        TheoremId::Palpro1 => routines::words::palpro1(theta, bounds),
        TheoremId::Eqth3 => routines::words::eqth3(theta, bounds),
        TheoremId::Teq1 => routines::equations::teq(theta, bounds, 1),
        TheoremId::Teq2 => routines::equations::teq(theta, bounds, 2),
        TheoremId::Teq3 => routines::equations::teq(theta, bounds, 3),
        TheoremId::Teq4 => routines::equations::teq(theta, bounds, 4),
        TheoremId::Teq5 => routines::equations::teq5(theta, bounds),
        TheoremId::Lemeq5 => routines::equations::lemeq5(theta, bounds),
    }
}

/// The standard verification profiles.
pub mod profiles {
    use bicat_core::Involution;

    /// {a,b} with a ↔ b, antimorphic.
    pub fn ab_swap() -> Involution {
        Involution::parse_inline("a<->b antimorphic").unwrap()
    }

    /// {a,b} with both letters fixed, antimorphic (plain reversal).
    pub fn ab_identity() -> Involution {
        Involution::parse_inline("a->a b->b antimorphic").unwrap()
    }

    /// {a,b,c} with a ↔ b and c fixed, antimorphic.
    pub fn abc_swap_fixed() -> Involution {
        Involution::parse_inline("a<->b c->c antimorphic").unwrap()
    }
}
