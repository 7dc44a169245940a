//! Runs the whole catalog and compares every verdict with the expected one.

use serde::Serialize;

use super::algebra::FiniteAlgebra;
use super::catalog::catalog;
use super::check::{auto_mode, check_law, hunt, CheckError, Verdict, DEFAULT_SAMPLES};
use super::model::RelModel;
use super::term::{Expected, Law};
use crate::space::{SearchMode, DEFAULT_SEED};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteOptions {
    /// Largest universe on which valid laws are checked.
    pub n: usize,
    /// Enumerate whenever the space is small enough; otherwise always sample above `n = 1`.
    pub exhaustive: bool,
    pub samples: usize,
    pub seed: u64,
    /// Largest universe the hunter searches for refuted laws.
    pub hunt_n: usize,
    /// Only laws whose name starts with this prefix.
    pub filter: Option<String>,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions { n: 2, exhaustive: true, samples: DEFAULT_SAMPLES, seed: DEFAULT_SEED, hunt_n: 3, filter: None }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteEntry {
    pub law: String,
    pub expected: Expected,
    /// One verdict per model and universe size searched.
    pub verdicts: Vec<Verdict>,
    pub mismatch: bool,
}

impl SuiteEntry {
    /// The refuting verdict if any, else the last one.
    pub fn verdict(&self) -> &Verdict {
        self.verdicts.iter().find(|v| v.is_refuted()).or(self.verdicts.last()).expect("at least one verdict")
    }

    pub fn line(&self) -> String {
        let line = self.verdict().line(&self.law);
        if self.mismatch {
            format!("{line} MISMATCH expected {}", expected_word(self.expected))
        } else {
            line
        }
    }
}

fn expected_word(e: Expected) -> &'static str {
    match e {
        Expected::Valid => "valid",
        Expected::Refuted => "refuted",
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteReport {
    pub options: SuiteOptions,
    pub entries: Vec<SuiteEntry>,
}

impl SuiteReport {
    pub fn mismatches(&self) -> Vec<&SuiteEntry> {
        self.entries.iter().filter(|e| e.mismatch).collect()
    }

    pub fn ok(&self) -> bool {
        self.entries.iter().all(|e| !e.mismatch)
    }

    pub fn lines(&self) -> Vec<String> {
        self.entries.iter().map(SuiteEntry::line).collect()
    }
}

/// Runs one law the way the suite does.
pub fn run_law(law: &Law, opts: &SuiteOptions) -> Result<SuiteEntry, CheckError> {
    let mut verdicts = Vec::new();
    if law.model.covers_algebra() {
        verdicts.push(check_law(law, &FiniteAlgebra::builtin(), SearchMode::Exhaustive)?);
    }
    if law.model.covers_relations() {
        match law.expected {
            Expected::Valid => {
                for n in 1..=opts.n.max(1) {
                    let m = RelModel::of_size(n)?;
                    let mode = if n == 1 {
                        SearchMode::Exhaustive
                    } else if opts.exhaustive {
                        auto_mode(law, &m, opts.samples, opts.seed)?
                    } else {
                        SearchMode::Sampled { samples: opts.samples, seed: opts.seed }
                    };
                    let v = check_law(law, &m, mode)?;
                    let stop = v.is_refuted();
                    verdicts.push(v);
                    if stop {
                        break;
                    }
                }
            }
            Expected::Refuted => verdicts.push(hunt(law, opts.hunt_n, opts.samples, opts.seed)?.verdict),
        }
    }
    let refuted = verdicts.iter().any(Verdict::is_refuted);
    let mismatch = match law.expected {
        Expected::Valid => refuted,
        // a law stated for both models is refuted if either model refutes it
        Expected::Refuted => !refuted,
    };
    Ok(SuiteEntry { law: law.name.clone(), expected: law.expected, verdicts, mismatch })
}

pub fn run_suite_with(opts: &SuiteOptions) -> Result<SuiteReport, CheckError> {
    let entries = catalog()
        .iter()
        .filter(|l| opts.filter.as_deref().is_none_or(|p| l.name.starts_with(p)))
        .map(|l| run_law(l, opts))
        .collect::<Result<_, _>>()?;
    Ok(SuiteReport { options: opts.clone(), entries })
}

/// Valid laws are checked at every size up to `n`; refuted ones are hunted up
/// to size 3.
pub fn run_suite(n: usize, mode: SearchMode) -> Result<SuiteReport, CheckError> {
    let opts = match mode {
        SearchMode::Exhaustive => SuiteOptions { n, ..SuiteOptions::default() },
        SearchMode::Sampled { samples, seed } => SuiteOptions { n, exhaustive: false, samples, seed, ..SuiteOptions::default() },
    };
    run_suite_with(&opts)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn filtered_run() {
        let opts = SuiteOptions { filter: Some("cl1".into()), ..SuiteOptions::default() };
        let report = run_suite_with(&opts).unwrap();
        let names: Vec<_> = report.entries.iter().map(|e| e.law.as_str()).collect();
        assert_eq!(names, ["cl1", "cl10", "cl11"]);
        assert!(report.ok(), "{:?}", report.lines());
    }

    #[test]
    fn mismatch_is_flagged() {
        let mut law = catalog().into_iter().find(|l| l.name == "join-comm").unwrap();
        law.expected = Expected::Refuted;
        let e = run_law(&law, &SuiteOptions { n: 1, hunt_n: 1, ..SuiteOptions::default() }).unwrap();
        assert!(e.mismatch);
        assert!(e.line().ends_with("MISMATCH expected refuted"));
    }
}
