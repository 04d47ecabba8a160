//! Executable verifiers for the structure theorems about groups whose
//! prime-power-order subgroups satisfy the partial Π-property, the lemmas
//! they rest on, and a corpus sweep producing one [`VerdictReport`] per
//! check.
//!
//! Hypotheses are evaluated, never assumed. Conclusions are evaluated only
//! when every hypothesis holds, and every matching case is reported.

mod context;
mod corpus;
mod lemmas;
mod theorems;

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::embed::{PiFactorRecord, PiWitness};
use crate::error::{Error, Result};
use crate::group::{Group, Subgroup};

pub use context::Lab;
pub use corpus::{
    admissible_d, builtin_corpus, run_corpus, run_entry, run_entry_timed, CheckId, CheckSpec, Corpus, CorpusEntry,
};
pub use lemmas::{check_lemma, LemmaParams, LEMMA_IDS};
pub use theorems::{check_theorem_a, check_theorem_b, check_theorem_c};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "lowercase"))]
pub enum Outcome {
    /// Hypotheses hold and some conclusion case holds.
    Pass,
    /// Some hypothesis fails.
    Vacuous,
    /// Hypotheses hold and no conclusion case holds, or evaluation hit an
    /// unexpected error.
    Fail,
    /// A cap was exceeded before the verdict was known.
    Indeterminate,
}

impl Outcome {
    pub fn as_str(self) -> &'static str {
        match self {
            Outcome::Pass => "pass",
            Outcome::Vacuous => "vacuous",
            Outcome::Fail => "fail",
            Outcome::Indeterminate => "indeterminate",
        }
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Hypothesis {
    pub name: String,
    pub holds: bool,
}

/// A passing chief series for one subgroup, with the subgroup and the
/// series terms given by generators.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SeriesWitness {
    pub subject: String,
    pub series: Vec<String>,
    pub series_orders: Vec<usize>,
    pub per_factor: Vec<PiFactorRecord>,
}

impl SeriesWitness {
    pub fn new(g: &Group, subject: String, w: &PiWitness) -> SeriesWitness {
        SeriesWitness {
            subject,
            series: w.series.terms().iter().map(|t| describe(g, t)).collect(),
            series_orders: w.series.terms().iter().map(Subgroup::order).collect(),
            per_factor: w.per_factor.clone(),
        }
    }
}

/// Outcome of one theorem or lemma check on one group.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct VerdictReport {
    pub group_name: String,
    pub theorem_id: String,
    pub p: u64,
    pub d: Option<u64>,
    pub hypotheses: Vec<Hypothesis>,
    pub hypotheses_hold: bool,
    pub conclusion_cases: Vec<String>,
    /// `!hypotheses_hold || !conclusion_cases.is_empty()` for determinate
    /// reports; false for indeterminate ones.
    pub pass: bool,
    pub outcome: Outcome,
    pub facts: BTreeMap<String, String>,
    pub witnesses: Vec<SeriesWitness>,
    pub error: Option<String>,
    /// Wall-clock microseconds, filled in by runners that can measure it.
    #[cfg_attr(feature = "serde", serde(default, skip_serializing_if = "Option::is_none"))]
    pub timing_us: Option<u64>,
}

impl VerdictReport {
    pub fn is_fail(&self) -> bool {
        self.outcome == Outcome::Fail
    }

    /// A report for a check that could not run at all.
    pub fn errored(group_name: &str, theorem_id: &str, p: u64, d: Option<u64>, e: &Error) -> VerdictReport {
        let mut draft = Draft::named(group_name, theorem_id, p, d);
        draft.r.error = Some(e.to_string());
        draft.r.outcome = if e.is_cap() { Outcome::Indeterminate } else { Outcome::Fail };
        draft.r
    }
}

/// Subgroup by generators in cycle notation, e.g. `<(1 2)(3 4), (1 2 3)>`.
pub fn describe(g: &Group, h: &Subgroup) -> String {
    if h.is_trivial() {
        return "1".into();
    }
    let gens: Vec<String> = h.gens().iter().map(|&x| g.element(x).to_cycle_string()).collect();
    alloc::format!("<{}>", gens.join(", "))
}

/// A report under construction.
pub(crate) struct Draft {
    r: VerdictReport,
}

impl Draft {
    pub(crate) fn new(g: &Group, id: &str, p: u64, d: Option<u64>) -> Draft {
        Draft::named(g.name().unwrap_or("unnamed"), id, p, d)
    }

    fn named(group_name: &str, id: &str, p: u64, d: Option<u64>) -> Draft {
        Draft {
            r: VerdictReport {
                group_name: group_name.into(),
                theorem_id: id.into(),
                p,
                d,
                hypotheses: Vec::new(),
                hypotheses_hold: false,
                conclusion_cases: Vec::new(),
                pass: false,
                outcome: Outcome::Fail,
                facts: BTreeMap::new(),
                witnesses: Vec::new(),
                error: None,
                timing_us: None,
            },
        }
    }

    pub(crate) fn hyp(&mut self, name: &str, holds: bool) -> bool {
        self.r.hypotheses.push(Hypothesis { name: name.into(), holds });
        holds
    }

    pub(crate) fn holds(&self) -> bool {
        self.r.hypotheses.iter().all(|h| h.holds)
    }

    pub(crate) fn fact(&mut self, key: &str, value: impl fmt::Display) {
        self.r.facts.insert(key.into(), value.to_string());
    }

    pub(crate) fn case(&mut self, label: &str) {
        self.r.conclusion_cases.push(label.into());
    }

    pub(crate) fn case_if(&mut self, label: &str, cond: bool) {
        if cond {
            self.case(label);
        }
    }

    pub(crate) fn witness(&mut self, w: SeriesWitness) {
        self.r.witnesses.push(w);
    }

    /// Runs `body`, turning errors into indeterminate or failed reports.
    pub(crate) fn run(mut self, body: impl FnOnce(&mut Draft) -> Result<()>) -> VerdictReport {
        match body(&mut self) {
            Ok(()) => self.finish(),
            Err(e) => {
                self.r.hypotheses_hold = self.holds();
                self.r.error = Some(e.to_string());
                self.r.outcome = if e.is_cap() { Outcome::Indeterminate } else { Outcome::Fail };
                self.r.pass = false;
                self.r
            }
        }
    }

    fn finish(mut self) -> VerdictReport {
        let r = &mut self.r;
        r.hypotheses_hold = r.hypotheses.iter().all(|h| h.holds);
        r.pass = !r.hypotheses_hold || !r.conclusion_cases.is_empty();
        r.outcome = match (r.hypotheses_hold, r.pass) {
            (false, _) => Outcome::Vacuous,
            (true, true) => Outcome::Pass,
            (true, false) => Outcome::Fail,
        };
        self.r
    }
}

/// Tally for lemmas quantified over instances: each instance is an
/// implication whose antecedent may or may not hold.
pub(crate) struct Instances {
    seen: usize,
    applicable: usize,
    counterexamples: Vec<String>,
}

const SHOWN_COUNTEREXAMPLES: usize = 5;

impl Instances {
    pub(crate) fn new() -> Instances {
        Instances { seen: 0, applicable: 0, counterexamples: Vec::new() }
    }

    pub(crate) fn record(
        &mut self,
        applicable: bool,
        ok: impl FnOnce() -> Result<bool>,
        who: impl FnOnce() -> String,
    ) -> Result<()> {
        self.seen += 1;
        if applicable {
            self.applicable += 1;
            if !ok()? {
                self.counterexamples.push(who());
            }
        }
        Ok(())
    }

    /// Records the antecedent as a hypothesis ("some instance satisfies
    /// it") and the conclusion as `label` when no instance fails.
    pub(crate) fn finish(self, draft: &mut Draft, hypothesis: &str, label: &str) {
        draft.fact("instances", self.seen);
        draft.fact("instances_applicable", self.applicable);
        draft.fact("counterexamples", self.counterexamples.len());
        if !self.counterexamples.is_empty() {
            let shown: Vec<String> = self.counterexamples.iter().take(SHOWN_COUNTEREXAMPLES).cloned().collect();
            draft.fact("counterexample_list", shown.join("; "));
        }
        if draft.hyp(hypothesis, self.applicable > 0) {
            draft.case_if(label, self.counterexamples.is_empty());
        }
    }
}
