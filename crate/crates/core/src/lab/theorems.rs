//! Verifiers for the three structure theorems.

use alloc::string::String;
use alloc::vec::Vec;

use super::context::{Lab, ModuleShape, PrimeData, Sweep};
use super::{describe, Draft, SeriesWitness, VerdictReport};
use crate::arith;
use crate::error::{Error, Result};
use crate::group::{Group, Subgroup};
use crate::structure::section_is_q8;

const SHOWN_FAILURES: usize = 3;

pub fn check_theorem_a(g: &Group, p: u64) -> VerdictReport {
    Lab::new(g).theorem_a(p)
}

pub fn check_theorem_b(g: &Group, p: u64) -> VerdictReport {
    Lab::new(g).theorem_b(p)
}

/// Errors with `BadParameter` unless `d` is a power of `p` with
/// `1 < d < |P|`.
pub fn check_theorem_c(g: &Group, p: u64, d: u64) -> Result<VerdictReport> {
    Lab::new(g).theorem_c(p, d)
}

pub(crate) fn check_prime(p: u64) -> Result<()> {
    if arith::is_prime(p) {
        Ok(())
    } else {
        Err(Error::BadParameter(alloc::format!("{p} is not prime")))
    }
}

/// Records a sweep over a family of subgroups as a hypothesis, with the
/// count, the first failures and one passing witness.
pub(crate) fn record_sweep(lab: &Lab, draft: &mut Draft, key: &str, name: &str, sweep: &Sweep) -> bool {
    let g = lab.group();
    draft.fact(&alloc::format!("{key}_checked"), sweep.checked);
    if !sweep.failing.is_empty() {
        let shown: Vec<String> = sweep.failing.iter().take(SHOWN_FAILURES).map(|h| describe(g, h)).collect();
        draft.fact(&alloc::format!("{key}_failing"), shown.join("; "));
    }
    if let Some((h, w)) = &sweep.first_witness {
        draft.witness(SeriesWitness::new(g, describe(g, h), w));
    }
    draft.hyp(name, sweep.all_pass())
}

/// The order-4 cyclic hypothesis: required only when `required` and `P`
/// is not quaternion-free, and then checked on every cyclic subgroup of
/// order 4.
pub(crate) fn cyclic_four_hypothesis(lab: &Lab, draft: &mut Draft, data: &PrimeData, required: bool) -> Result<bool> {
    cyclic_four_named(
        lab,
        draft,
        data,
        required,
        "every cyclic subgroup of P of order 4 satisfies the partial Π-property when d = 2 and P is not quaternion-free",
    )
}

pub(crate) fn cyclic_four_named(
    lab: &Lab,
    draft: &mut Draft,
    data: &PrimeData,
    required: bool,
    name: &str,
) -> Result<bool> {
    draft.fact("p_quaternion_free", data.quaternion_free);
    if !required || data.quaternion_free {
        return Ok(draft.hyp(name, true));
    }
    let sweep = lab.sweep(lab.cyclic_fours(data).into_iter())?;
    Ok(record_sweep(lab, draft, "cyclic4", name, &sweep))
}

/// `Some(H)` with `H` a Hall p'-subgroup when `P` is normal, so that
/// `G = P ⋊ H`.
pub(crate) fn semidirect(lab: &Lab, p: u64, data: &PrimeData) -> Result<Option<Subgroup>> {
    if !lab.group().is_normal(&data.sylow) {
        return Ok(None);
    }
    lab.p_complement(p)
}

pub(crate) fn o_p_prime_trivial(lab: &Lab, draft: &mut Draft, p: u64) -> bool {
    draft.hyp("O_p'(G) = 1", lab.structure().o_p_prime(p).is_trivial())
}

pub(crate) fn p_rank_above_one(lab: &Lab, draft: &mut Draft, p: u64) -> bool {
    let rank = lab.p_rank(p);
    match rank {
        Some(r) => draft.fact("p_rank", r),
        None => draft.fact("p_rank", "undefined (not p-soluble)"),
    }
    draft.hyp("the p-rank of G is greater than 1", rank.is_some_and(|r| r > 1))
}

pub(crate) fn subgroups_of_order(
    lab: &Lab,
    draft: &mut Draft,
    data: &PrimeData,
    d: usize,
    key: &str,
    name: &str,
) -> Result<bool> {
    let sweep = lab.sweep(data.of_order(d))?;
    Ok(record_sweep(lab, draft, key, name, &sweep))
}

impl Lab<'_> {
    pub fn theorem_a(&self, p: u64) -> VerdictReport {
        let g = self.group();
        Draft::new(g, "A", p, None).run(|draft| {
            check_prime(p)?;
            let data = self.prime(p)?;
            let order = data.sylow.order() as u64;
            draft.fact("sylow_order", order);
            o_p_prime_trivial(self, draft, p);
            draft.hyp("|P| >= p^2", order >= p * p);
            subgroups_of_order(
                self,
                draft,
                &data,
                (p * p) as usize,
                "order_p2",
                "every subgroup of P of order p^2 satisfies the partial Π-property",
            )?;
            if !draft.holds() {
                return Ok(());
            }
            let Some(h) = semidirect(self, p, &data)? else {
                draft.fact("semidirect", false);
                return Ok(());
            };
            draft.fact("semidirect", true);
            draft.fact("h_order", h.order());
            let h_cyclic = self.is_cyclic(&h);
            draft.fact("h_cyclic", h_cyclic);

            let st = self.structure();
            draft.case_if("1", st.p_supersoluble(p));
            let minimal = st.minimal_normals().contains(&data.sylow);
            draft.case_if("2", minimal && order == p * p);
            if order >= p.pow(4) && h_cyclic {
                if let Some(m) = self.module(&data.sylow, &g.trivial_subgroup(), &h, p)? {
                    let shape = ModuleShape::of(&m)?;
                    draft.fact("constituent_dims", shape.dims_string());
                    draft.fact("homogeneous", shape.homogeneous);
                    let s = shape.dim / 2;
                    draft.fact("s", s);
                    draft.case_if("3", shape.homogeneous_of_dim(2) && s >= 2);
                }
            }
            Ok(())
        })
    }

    pub fn theorem_b(&self, p: u64) -> VerdictReport {
        let g = self.group();
        Draft::new(g, "B", p, None).run(|draft| {
            check_prime(p)?;
            let data = self.prime(p)?;
            let order = data.sylow.order() as u64;
            draft.fact("sylow_order", order);
            o_p_prime_trivial(self, draft, p);
            draft.hyp("|P| >= p^2", order >= p * p);
            let two_max = if order >= p * p { (order / (p * p)) as usize } else { 0 };
            let sweep = self.sweep(data.of_order(two_max))?;
            record_sweep(
                self,
                draft,
                "two_maximal",
                "every 2-maximal subgroup of P satisfies the partial Π-property",
                &sweep,
            );
            if !draft.holds() {
                return Ok(());
            }
            let st = self.structure();
            draft.case_if("1", st.p_supersoluble(p));
            let p_soluble = st.is_p_soluble(p);
            let p_normal = g.is_normal(&data.sylow);
            let minimal = st.minimal_normals().contains(&data.sylow);
            draft.case_if("2", order == p * p && p_normal && minimal);
            draft.case_if("3", order == p * p && !p_soluble);
            let q8 = p == 2 && section_is_q8(g, &data.sylow, &g.trivial_subgroup());
            draft.fact("p_is_q8", q8);
            draft.case_if("4", q8);
            if order >= p.pow(3) {
                if let Some(h) = semidirect(self, p, &data)? {
                    let h_cyclic = self.is_cyclic(&h);
                    draft.fact("h_order", h.order());
                    draft.fact("h_cyclic", h_cyclic);
                    let mut meet = data.sylow.members().clone();
                    for q in data.of_order(two_max) {
                        meet.intersect_with(q.members());
                    }
                    let phi_is_meet = meet == *data.frattini.members();
                    draft.fact("frattini_order", data.frattini.order());
                    draft.fact("frattini_is_meet_of_2_maximals", phi_is_meet);
                    if let Some(m) = self.module(&data.sylow, &data.frattini, &h, p)? {
                        let shape = ModuleShape::of(&m)?;
                        draft.fact("constituent_dims", shape.dims_string());
                        draft.fact("homogeneous", shape.homogeneous);
                        draft.case_if("5", h_cyclic && phi_is_meet && shape.homogeneous_of_dim(2));
                    }
                }
            }
            Ok(())
        })
    }

    pub fn theorem_c(&self, p: u64, d: u64) -> Result<VerdictReport> {
        check_prime(p)?;
        let g = self.group();
        let data = match self.prime(p) {
            Ok(data) => data,
            Err(e) if e.is_cap() => {
                return Ok(VerdictReport::errored(g.name().unwrap_or("unnamed"), "C", p, Some(d), &e))
            }
            Err(e) => return Err(e),
        };
        let order = data.sylow.order() as u64;
        if !arith::is_p_power(d, p) || d <= 1 || d >= order {
            return Err(Error::BadParameter(alloc::format!("d = {d} is not a power of {p} with 1 < d < {order}")));
        }
        Ok(Draft::new(g, "C", p, Some(d)).run(|draft| {
            draft.fact("sylow_order", order);
            subgroups_of_order(
                self,
                draft,
                &data,
                d as usize,
                "order_d",
                "every subgroup of P of order d satisfies the partial Π-property",
            )?;
            cyclic_four_hypothesis(self, draft, &data, d == 2)?;
            o_p_prime_trivial(self, draft, p);
            p_rank_above_one(self, draft, p);
            if !draft.holds() {
                return Ok(());
            }
            let Some(h) = semidirect(self, p, &data)? else {
                draft.fact("semidirect", false);
                return Ok(());
            };
            draft.fact("semidirect", true);
            let h_cyclic = self.is_cyclic(&h);
            draft.fact("h_order", h.order());
            draft.fact("h_cyclic", h_cyclic);
            let Some(m) = self.module(&data.sylow, &data.frattini, &h, p)? else {
                return Ok(());
            };
            let shape = ModuleShape::of(&m)?;
            let log = |x: usize| arith::log_p(x as u64, p).expect("p-power") as i64;
            let n = log(d as usize) - log(data.frattini.order());
            let mm = log(order as usize) - log(data.frattini.order());
            let k = shape.k() as i64;
            draft.fact("frattini_order", data.frattini.order());
            draft.fact("k", k);
            draft.fact("m", mm);
            draft.fact("n", n);
            draft.fact("constituent_dims", shape.dims_string());
            draft.fact("homogeneous", shape.homogeneous);
            let ends: Vec<String> = shape.end_dims.iter().map(|e| alloc::format!("{e}")).collect();
            draft.fact("end_dims", ends.join(","));
            let c1 = shape.homogeneous && shape.none_absolutely_irreducible();
            let c2 = shape.constituent_dims.iter().all(|&kk| {
                let kk = kk as i64;
                n >= kk && kk >= 2 && arith::gcd(mm as u64, n as u64).is_multiple_of(kk as u64)
            });
            draft.fact("conclusion_1", c1);
            draft.fact("conclusion_2", c2);
            draft.fact("conclusion_3", h_cyclic);
            draft.case_if("1+2+3", c1 && c2 && h_cyclic);
            Ok(())
        }))
    }
}
