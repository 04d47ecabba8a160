//! The built-in corpus of small groups and the sequential corpus runner.

use alloc::boxed::Box;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use super::context::Lab;
use super::lemmas::{d_range, d_values, LemmaParams};
use super::VerdictReport;
use crate::arith;
use crate::construct::Recipe;
use crate::error::{Error, Result};
use crate::group::Caps;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusEntry {
    pub name: String,
    pub recipe: Recipe,
}

/// Named group constructions with the caps they are built under.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Corpus {
    pub entries: Vec<CorpusEntry>,
    pub caps: Caps,
}

impl Corpus {
    pub fn new(caps: Caps) -> Self {
        Corpus { entries: Vec::new(), caps }
    }

    /// Appends an entry; names must be unique.
    pub fn push(&mut self, name: &str, recipe: Recipe) -> Result<()> {
        if self.entries.iter().any(|e| e.name == name) {
            return Err(Error::BadParameter(alloc::format!("duplicate corpus name `{name}`")));
        }
        self.entries.push(CorpusEntry { name: name.into(), recipe });
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

fn sdp(p: u64, k: usize, matrix: &[u32], m: usize) -> Recipe {
    Recipe::Semidirect { p, k, matrix: matrix.to_vec(), m }
}

fn affine(p: u64, k: usize, mats: &[&[u32]]) -> Recipe {
    Recipe::Affine { p, k, matrices: mats.iter().map(|m| m.to_vec()).collect() }
}

fn linear(p: u64, k: usize, mats: &[&[u32]]) -> Recipe {
    Recipe::Linear { p, k, matrices: mats.iter().map(|m| m.to_vec()).collect() }
}

fn dp(a: Recipe, b: Recipe) -> Recipe {
    Recipe::DirectProduct(Box::new(a), Box::new(b))
}

// Row-vector actions: a companion matrix has ones above the diagonal and
// the reversed, negated coefficients in its last row.
const C3_ON_F2_2: [u32; 4] = [0, 1, 1, 1];
const C3_ON_F2_4_DIAG: [u32; 16] = [0, 1, 0, 0, 1, 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 1];
const C3_ON_F2_4_HALF: [u32; 16] = [0, 1, 0, 0, 1, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1];
const C4_ON_F3_2: [u32; 4] = [0, 1, 2, 0];
const C4_ON_F3_4_DIAG: [u32; 16] = [0, 1, 0, 0, 2, 0, 0, 0, 0, 0, 0, 1, 0, 0, 2, 0];
const C8_ON_F3_2: [u32; 4] = [0, 1, 1, 1];
const C7_ON_F2_3: [u32; 9] = [0, 1, 0, 0, 0, 1, 1, 1, 0];
const FROBENIUS_F8: [u32; 9] = [1, 0, 0, 0, 0, 1, 0, 1, 1];
const TRANSVECTION_F2_3: [u32; 9] = [1, 1, 0, 0, 1, 0, 0, 0, 1];
const C5_ON_F2_4: [u32; 16] = [0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 1, 1, 1, 1];
const C15_ON_F2_4: [u32; 16] = [0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 1, 1, 0, 0];
const C3_ON_F5_2: [u32; 4] = [0, 1, 4, 4];
const SYM3_ON_F7_2: [&[u32]; 2] = [&[0, 1, 6, 6], &[6, 0, 1, 1]];
const Q8_ON_F3_2: [&[u32]; 2] = [&[0, 1, 2, 0], &[1, 1, 1, 2]];
const UPPER: [u32; 4] = [1, 1, 0, 1];
const LOWER: [u32; 4] = [1, 0, 1, 1];

/// The built-in corpus: every group has order at most 384.
pub fn builtin_corpus() -> Corpus {
    let mut c = Corpus::new(Caps::default());
    let entries: Vec<(&str, Recipe)> = vec![
        ("Sym3", Recipe::Symmetric(3)),
        ("Sym4", Recipe::Symmetric(4)),
        ("Sym5", Recipe::Symmetric(5)),
        ("Alt4", Recipe::Alternating(4)),
        ("Alt5", Recipe::Alternating(5)),
        ("C6", Recipe::Cyclic(6)),
        ("C2^3", Recipe::ElementaryAbelian { p: 2, k: 3 }),
        ("D8", Recipe::Dihedral(8)),
        ("D12", Recipe::Dihedral(12)),
        ("Q8", Recipe::Quaternion(8)),
        ("Q16", Recipe::Quaternion(16)),
        ("SD16", Recipe::Semidihedral(16)),
        ("C3xSym3", dp(Recipe::Cyclic(3), Recipe::Symmetric(3))),
        ("C2xSym4", dp(Recipe::Cyclic(2), Recipe::Symmetric(4))),
        ("SL(2,3)", linear(3, 2, &[&UPPER, &LOWER])),
        ("GL(2,3)", linear(3, 2, &[&UPPER, &LOWER, &[2, 0, 0, 1]])),
        ("SL(2,5)", linear(5, 2, &[&UPPER, &LOWER])),
        ("GL(3,2)", linear(2, 3, &[&C7_ON_F2_3, &TRANSVECTION_F2_3])),
        ("C2^2:C3", sdp(2, 2, &C3_ON_F2_2, 3)),
        ("C2^4:C3-diagonal", sdp(2, 4, &C3_ON_F2_4_DIAG, 3)),
        ("C2^4:C3-half", sdp(2, 4, &C3_ON_F2_4_HALF, 3)),
        ("C2^3:C7", sdp(2, 3, &C7_ON_F2_3, 7)),
        ("C2^4:C5", sdp(2, 4, &C5_ON_F2_4, 5)),
        ("C2^4:C15", sdp(2, 4, &C15_ON_F2_4, 15)),
        ("AGammaL(1,8)", affine(2, 3, &[&C7_ON_F2_3, &FROBENIUS_F8])),
        ("C3^2:C2", sdp(3, 2, &[2, 0, 0, 2], 2)),
        ("C3^2:C4", sdp(3, 2, &C4_ON_F3_2, 4)),
        ("C3^2:C8", sdp(3, 2, &C8_ON_F3_2, 8)),
        ("C3^2:Q8", affine(3, 2, &Q8_ON_F3_2)),
        ("C3^4:C4-diagonal", sdp(3, 4, &C4_ON_F3_4_DIAG, 4)),
        ("C5:C4", sdp(5, 1, &[2], 4)),
        ("C5^2:C3", sdp(5, 2, &C3_ON_F5_2, 3)),
        ("C7:C3", sdp(7, 1, &[2], 3)),
        ("C7:C6", sdp(7, 1, &[3], 6)),
        ("C7^2:Sym3", affine(7, 2, &SYM3_ON_F7_2)),
    ];
    for (name, recipe) in entries {
        c.push(name, recipe).expect("built-in names are unique");
    }
    c
}

/// What to check.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CheckId {
    TheoremA,
    TheoremB,
    TheoremC,
    Lemma(String),
}

impl CheckId {
    /// Theorems A, B, C and every lemma.
    pub fn all() -> Vec<CheckId> {
        let mut v = vec![CheckId::TheoremA, CheckId::TheoremB, CheckId::TheoremC];
        v.extend(super::LEMMA_IDS.iter().map(|s| CheckId::Lemma((*s).into())));
        v
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CheckId::TheoremA => f.write_str("A"),
            CheckId::TheoremB => f.write_str("B"),
            CheckId::TheoremC => f.write_str("C"),
            CheckId::Lemma(id) => write!(f, "lemma:{id}"),
        }
    }
}

/// Accepts `A`, `B`, `C` and `lemma:<id>`.
impl FromStr for CheckId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A" => Ok(CheckId::TheoremA),
            "B" => Ok(CheckId::TheoremB),
            "C" => Ok(CheckId::TheoremC),
            _ => match s.strip_prefix("lemma:") {
                Some(id) => {
                    d_range(id)?;
                    Ok(CheckId::Lemma(id.into()))
                }
                None => Err(Error::BadParameter(alloc::format!("unknown check `{s}`"))),
            },
        }
    }
}

/// A check with its parameter grid: `None` sweeps every prime dividing
/// `|G|`, respectively every admissible `d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckSpec {
    pub id: CheckId,
    pub p: Option<u64>,
    pub d: Option<u64>,
}

impl CheckSpec {
    pub fn sweep(id: CheckId) -> Self {
        CheckSpec { id, p: None, d: None }
    }

    /// Every check over every admissible parameter.
    pub fn everything() -> Vec<CheckSpec> {
        CheckId::all().into_iter().map(CheckSpec::sweep).collect()
    }
}

/// The values of `d` a check sweeps for a Sylow p-subgroup of the given
/// order; `[None]` for checks without a `d` parameter. Theorem C takes
/// `1 < d < |P|`.
pub fn admissible_d(id: &CheckId, p: u64, sylow_order: u64) -> Result<Vec<Option<u64>>> {
    Ok(match id {
        CheckId::TheoremA | CheckId::TheoremB => vec![None],
        CheckId::TheoremC => arith::p_powers_below(p, sylow_order).into_iter().map(Some).collect(),
        CheckId::Lemma(l) => d_values(d_range(l)?, p, sylow_order),
    })
}

/// Runs the checks on one entry. A construction failure yields one
/// report per check carrying the error.
pub fn run_entry(entry: &CorpusEntry, caps: Caps, checks: &[CheckSpec]) -> Vec<VerdictReport> {
    run_entry_with(entry, caps, checks, None)
}

/// [`run_entry`], filling `timing_us` from `clock` (microseconds).
pub fn run_entry_timed(
    entry: &CorpusEntry,
    caps: Caps,
    checks: &[CheckSpec],
    clock: &dyn Fn() -> u64,
) -> Vec<VerdictReport> {
    run_entry_with(entry, caps, checks, Some(clock))
}

fn run_entry_with(
    entry: &CorpusEntry,
    caps: Caps,
    checks: &[CheckSpec],
    clock: Option<&dyn Fn() -> u64>,
) -> Vec<VerdictReport> {
    let g = match entry.recipe.build_with(caps) {
        Ok(g) => g.with_name(entry.name.clone()),
        Err(e) => {
            return checks
                .iter()
                .map(|c| VerdictReport::errored(&entry.name, &c.id.to_string(), c.p.unwrap_or(0), c.d, &e))
                .collect()
        }
    };
    let lab = Lab::new(&g);
    let mut out = Vec::new();
    for check in checks {
        let primes = match check.p {
            Some(p) => vec![p],
            None => arith::prime_divisors(g.order() as u64),
        };
        for p in primes {
            let id = check.id.to_string();
            let sylow_order = arith::p_part(g.order() as u64, p);
            let ds = match check.d {
                Some(d) => vec![Some(d)],
                None => match admissible_d(&check.id, p, sylow_order) {
                    Ok(ds) => ds,
                    Err(e) => {
                        out.push(VerdictReport::errored(&entry.name, &id, p, None, &e));
                        continue;
                    }
                },
            };
            for d in ds {
                let start = clock.map(|c| c());
                let r = match &check.id {
                    CheckId::TheoremA => Ok(lab.theorem_a(p)),
                    CheckId::TheoremB => Ok(lab.theorem_b(p)),
                    CheckId::TheoremC => lab.theorem_c(p, d.unwrap_or(0)),
                    CheckId::Lemma(l) => lab.lemma(l, &LemmaParams { p, d, ..Default::default() }),
                };
                let r = r.map(|mut r| {
                    if let (Some(c), Some(start)) = (clock, start) {
                        r.timing_us = Some(c().saturating_sub(start));
                    }
                    r
                });
                match r {
                    Ok(r) => out.push(r),
                    // A pinned `d` outside the admissible range for this group.
                    Err(Error::BadParameter(_)) if check.d.is_some() => {}
                    Err(e) => out.push(VerdictReport::errored(&entry.name, &id, p, d, &e)),
                }
            }
        }
    }
    out
}

/// Runs every check on every entry, in corpus order.
pub fn run_corpus(corpus: &Corpus, checks: &[CheckSpec]) -> Vec<VerdictReport> {
    corpus.entries.iter().flat_map(|e| run_entry(e, corpus.caps, checks)).collect()
}
