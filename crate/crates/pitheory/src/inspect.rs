//! Single-group queries: the partial Π predicate with its evidence, and a
//! structural summary.

use std::io::{self, Write};

use pitheory_core::arith;
use pitheory_core::embed::{pi_step_in_group, satisfies_partial_pi, PiFactorRecord};
use pitheory_core::lab::{describe, SeriesWitness};
use pitheory_core::{Group, Result, Structure, Subgroup};
use serde::Serialize;

const SHOWN_SERIES: usize = 5;

/// A chief series with its first failing factor.
#[derive(Clone, Debug, Serialize)]
pub struct RejectedSeries {
    pub series: Vec<String>,
    pub series_orders: Vec<usize>,
    pub failing_factor: PiFactorRecord,
}

#[derive(Clone, Debug, Serialize)]
pub struct PiCheck {
    pub group: String,
    pub group_order: usize,
    pub subgroup: String,
    pub subgroup_order: usize,
    pub holds: bool,
    pub witness: Option<SeriesWitness>,
    /// Chief series examined when no witness exists.
    pub series_examined: usize,
    /// The first few of them, each with the factor where it fails.
    pub rejected_series: Vec<RejectedSeries>,
}

pub fn check_pi(g: &Group, h: &Subgroup) -> Result<PiCheck> {
    let (holds, witness) = satisfies_partial_pi(g, h)?;
    let mut out = PiCheck {
        group: g.name().unwrap_or("G").into(),
        group_order: g.order(),
        subgroup: describe(g, h),
        subgroup_order: h.order(),
        holds,
        witness: witness.map(|w| SeriesWitness::new(g, describe(g, h), &w)),
        series_examined: 0,
        rejected_series: Vec::new(),
    };
    if holds {
        return Ok(out);
    }
    let st = Structure::new(g);
    for series in st.chief_series(None)? {
        let series = series?;
        out.series_examined += 1;
        if out.rejected_series.len() >= SHOWN_SERIES {
            continue;
        }
        let terms = series.terms();
        let failing =
            terms.windows(2).enumerate().map(|(i, w)| pi_step_in_group(g, h, &w[0], &w[1], i + 1)).find(|r| !r.passed);
        if let Some(failing_factor) = failing {
            out.rejected_series.push(RejectedSeries {
                series: terms.iter().map(|t| describe(g, t)).collect(),
                series_orders: terms.iter().map(Subgroup::order).collect(),
                failing_factor,
            });
        }
    }
    Ok(out)
}

fn prime_set(r: &PiFactorRecord) -> String {
    let ps: Vec<String> = r.prime_set.iter().map(u64::to_string).collect();
    format!("{{{}}}", ps.join(", "))
}

fn factor_line(w: &mut dyn Write, r: &PiFactorRecord, orders: &[usize]) -> io::Result<()> {
    let i = r.factor_index;
    writeln!(
        w,
        "    factor {i} (order {}): |D| = {}, |G : N(D)| = {}, pi(D) = {}, {}",
        orders[i] / orders[i - 1],
        r.intersection_order,
        r.normalizer_index,
        prime_set(r),
        if r.passed { "passes" } else { "fails" }
    )
}

impl PiCheck {
    pub fn write_text(&self, w: &mut dyn Write) -> io::Result<()> {
        writeln!(w, "{}", self.holds)?;
        writeln!(
            w,
            "H = {} (order {}) in {} (order {})",
            self.subgroup, self.subgroup_order, self.group, self.group_order
        )?;
        if let Some(wit) = &self.witness {
            writeln!(w, "witness chief series (orders {:?}):", wit.series_orders)?;
            writeln!(w, "  {}", wit.series.join(" < "))?;
            for r in &wit.per_factor {
                factor_line(w, r, &wit.series_orders)?;
            }
        } else {
            writeln!(w, "no chief series passes ({} examined)", self.series_examined)?;
            for s in &self.rejected_series {
                writeln!(w, "  {} (orders {:?})", s.series.join(" < "), s.series_orders)?;
                factor_line(w, &s.failing_factor, &s.series_orders)?;
            }
            if self.series_examined > self.rejected_series.len() {
                writeln!(w, "  ... {} more", self.series_examined - self.rejected_series.len())?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PrimeInfo {
    pub p: u64,
    pub sylow_order: usize,
    pub o_p_order: usize,
    pub o_p_prime_order: usize,
    pub p_soluble: bool,
    pub p_length: Option<usize>,
    pub p_supersoluble: bool,
    pub p_rank: Option<u32>,
    pub hypercenter_up_order: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct GroupInfo {
    pub name: String,
    pub degree: usize,
    pub order: usize,
    pub generators: Vec<String>,
    pub exponent: usize,
    pub abelian: bool,
    pub center_order: usize,
    pub derived_order: usize,
    pub frattini_order: usize,
    pub socle_order: usize,
    pub minimal_normal_orders: Vec<usize>,
    pub normal_subgroups: usize,
    pub chief_factor_orders: Vec<usize>,
    pub supersoluble: bool,
    pub hypercenter_u_order: usize,
    pub primes: Vec<PrimeInfo>,
}

pub fn group_info(g: &Group, primes: Option<&[u64]>) -> Result<GroupInfo> {
    let st = Structure::new(g);
    let primes: Vec<u64> = match primes {
        Some(ps) => ps.to_vec(),
        None => arith::prime_divisors(g.order() as u64),
    };
    let per_prime = primes
        .iter()
        .map(|&p| {
            let (p_soluble, len) = st.p_solubility(p);
            PrimeInfo {
                p,
                sylow_order: st.sylow(p).order(),
                o_p_order: st.o_p(p).order(),
                o_p_prime_order: st.o_p_prime(p).order(),
                p_soluble,
                p_length: p_soluble.then_some(len),
                p_supersoluble: st.p_supersoluble(p),
                p_rank: st.p_rank(p).ok(),
                hypercenter_up_order: st.hypercenter_up(p).order(),
            }
        })
        .collect();
    let mut minimal: Vec<usize> = st.minimal_normals().iter().map(Subgroup::order).collect();
    minimal.sort_unstable();
    Ok(GroupInfo {
        name: g.name().unwrap_or("G").into(),
        degree: g.degree(),
        order: g.order(),
        generators: g.generators().iter().map(|x| x.to_cycle_string()).collect(),
        exponent: g.exponent(),
        abelian: g.is_abelian(),
        center_order: g.center().order(),
        derived_order: g.derived_subgroup().order(),
        frattini_order: st.frattini()?.order(),
        socle_order: st.socle().order(),
        minimal_normal_orders: minimal,
        normal_subgroups: st.normal_lattice().len(),
        chief_factor_orders: st.a_chief_series().factor_orders(),
        supersoluble: st.supersoluble(),
        hypercenter_u_order: st.hypercenter_u().order(),
        primes: per_prime,
    })
}

impl GroupInfo {
    pub fn write_text(&self, w: &mut dyn Write) -> io::Result<()> {
        writeln!(w, "{}: order {}, degree {}", self.name, self.order, self.degree)?;
        writeln!(w, "  generators: {}", self.generators.join(", "))?;
        writeln!(w, "  exponent {}, abelian {}, supersoluble {}", self.exponent, self.abelian, self.supersoluble)?;
        writeln!(
            w,
            "  |Z(G)| = {}, |G'| = {}, |Phi(G)| = {}, |Soc(G)| = {}, |Z_U(G)| = {}",
            self.center_order, self.derived_order, self.frattini_order, self.socle_order, self.hypercenter_u_order
        )?;
        writeln!(
            w,
            "  normal subgroups: {}, minimal normal orders {:?}",
            self.normal_subgroups, self.minimal_normal_orders
        )?;
        writeln!(w, "  chief factor orders: {:?}", self.chief_factor_orders)?;
        for p in &self.primes {
            let len = p.p_length.map_or("-".to_string(), |l| l.to_string());
            let rank = p.p_rank.map_or("-".to_string(), |r| r.to_string());
            writeln!(
                w,
                "  p = {}: |P| = {}, |O_p| = {}, |O_p'| = {}, p-soluble {}, p-length {}, p-supersoluble {}, p-rank {}, |Z_Up(G)| = {}",
                p.p,
                p.sylow_order,
                p.o_p_order,
                p.o_p_prime_order,
                p.p_soluble,
                len,
                p.p_supersoluble,
                rank,
                p.hypercenter_up_order
            )?;
        }
        Ok(())
    }
}
