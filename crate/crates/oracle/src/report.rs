//! Verification reports with a stable, byte-reproducible rendering.

use bicat_core::Involution;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    AllPass,
    Counterexample,
}

/// Outcome of one verification run. `status` is `AllPass` exactly when the
/// counterexample count is zero; rendered field order is fixed.
#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub theorem: String,
    pub profile: String,
    pub bounds: Vec<(String, String)>,
    pub cases_checked: u64,
    pub counterexample_count: u64,
    pub counterexamples: Vec<String>,
    pub witness_count: u64,
    pub witnesses: Vec<String>,
    pub notes: Vec<String>,
}

impl VerificationReport {
    pub fn status(&self) -> Status {
        if self.counterexample_count == 0 {
            Status::AllPass
        } else {
            Status::Counterexample
        }
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("theorem: {}\n", self.theorem));
        out.push_str(&format!("profile: {}\n", self.profile));
        let bounds = self
            .bounds
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(" ");
        out.push_str(&format!("bounds: {bounds}\n"));
        out.push_str(&format!("casesChecked: {}\n", self.cases_checked));
        let status = match self.status() {
            Status::AllPass => "AllPass",
            Status::Counterexample => "Counterexample",
        };
        out.push_str(&format!("status: {status}\n"));
        out.push_str(&format!("counterexamples: {}\n", self.counterexample_count));
        for c in &self.counterexamples {
            out.push_str(&format!("counterexample: {c}\n"));
        }
        out.push_str(&format!("witnesses: {}\n", self.witness_count));
        for w in &self.witnesses {
            out.push_str(&format!("witness: {w}\n"));
        }
        for n in &self.notes {
            out.push_str(&format!("note: {n}\n"));
        }
        out
    }
}

const MAX_COUNTEREXAMPLES_SHOWN: usize = 25;
const MAX_WITNESSES_SHOWN: usize = 12;

/// Accumulates a report; witness and counterexample listings are capped
/// deterministically while counts stay exact.
pub struct ReportBuilder {
    report: VerificationReport,
}

impl ReportBuilder {
    pub fn new(theorem: &str, theta: &Involution) -> Self {
        ReportBuilder {
            report: VerificationReport {
                theorem: theorem.to_string(),
                profile: theta.describe(),
                bounds: Vec::new(),
                cases_checked: 0,
                counterexample_count: 0,
                counterexamples: Vec::new(),
                witness_count: 0,
                witnesses: Vec::new(),
                notes: Vec::new(),
            },
        }
    }

    pub fn bound(&mut self, name: &str, value: impl ToString) -> &mut Self {
        self.report
            .bounds
            .push((name.to_string(), value.to_string()));
        self
    }

    pub fn cases(&mut self, n: u64) -> &mut Self {
        self.report.cases_checked += n;
        self
    }

    pub fn counterexample(&mut self, text: String) -> &mut Self {
        self.report.counterexample_count += 1;
        if self.report.counterexamples.len() < MAX_COUNTEREXAMPLES_SHOWN {
            self.report.counterexamples.push(text);
        }
        self
    }

    pub fn witness(&mut self, text: String) -> &mut Self {
        self.report.witness_count += 1;
        if self.report.witnesses.len() < MAX_WITNESSES_SHOWN {
            self.report.witnesses.push(text);
        }
        self
    }

    pub fn note(&mut self, text: String) -> &mut Self {
        self.report.notes.push(text);
        self
    }

    pub fn has_counterexamples(&self) -> bool {
        self.report.counterexample_count > 0
    }

    pub fn finish(self) -> VerificationReport {
        self.report
    }
}
