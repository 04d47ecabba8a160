//! Verifiers for the lemmas behind the structure theorems. Statements
//! quantified over subgroups are checked exhaustively; subgroups are taken
//! up to conjugacy wherever the statement is invariant under it.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::context::{Lab, ModuleShape, PrimeData};
use super::theorems::{
    check_prime, cyclic_four_hypothesis, cyclic_four_named, o_p_prime_trivial, p_rank_above_one, semidirect,
    subgroups_of_order,
};
use super::{describe, Draft, Instances, SeriesWitness, VerdictReport};
use crate::arith;
use crate::error::{Error, Result};
use crate::group::{Group, Subgroup};
use crate::modrep::cyclicity_criterion_check;
use crate::quotient::QuotientMap;
use crate::structure::{frattini_of, is_quaternion_free, Structure};

/// Every lemma identifier accepted by [`check_lemma`].
pub const LEMMA_IDS: &[&str] = &[
    "order-p-supersoluble",
    "p-length-one",
    "over",
    "pass",
    "order-d",
    "in",
    "hypercenter",
    "phi",
    "also",
    "Normal",
    "two",
    "completed",
    "Completed",
    "cyclic",
    "ele",
    "orderp2",
    "dim",
    "contained-in",
];

/// Parameters of a lemma check. `h` and `n` pin the subgroups of
/// `over` and `pass` instead of sweeping them.
#[derive(Clone, Debug, Default)]
pub struct LemmaParams {
    pub p: u64,
    pub d: Option<u64>,
    pub h: Option<Subgroup>,
    pub n: Option<Subgroup>,
}

impl LemmaParams {
    pub fn new(p: u64) -> Self {
        LemmaParams { p, ..Default::default() }
    }

    pub fn with_d(p: u64, d: u64) -> Self {
        LemmaParams { p, d: Some(d), ..Default::default() }
    }
}

/// Which values of `d` a lemma takes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum DRange {
    /// No `d` parameter.
    Unused,
    /// Restricts the swept subgroups when given; any p-power up to `|P|`.
    Optional,
    /// `1 < d < |P|`.
    Open,
    /// `p <= d <= |P|`.
    UpToP,
    /// `p^2 <= d < |P|`.
    FromSquare,
}

pub(crate) fn d_range(id: &str) -> Result<DRange> {
    Ok(match id {
        "order-p-supersoluble"
        | "pass"
        | "in"
        | "hypercenter"
        | "phi"
        | "also"
        | "two"
        | "completed"
        | "cyclic"
        | "contained-in" => DRange::Unused,
        "over" => DRange::Optional,
        "p-length-one" | "order-d" | "Completed" | "orderp2" | "dim" => DRange::Open,
        "Normal" => DRange::UpToP,
        "ele" => DRange::FromSquare,
        _ => return Err(Error::UnknownLemma(id.into())),
    })
}

/// The values of `d` a lemma is checked at when sweeping, given `|P|`.
pub(crate) fn d_values(range: DRange, p: u64, sylow_order: u64) -> Vec<Option<u64>> {
    let powers = |lo: u64, hi_inclusive: bool| -> Vec<Option<u64>> {
        let mut out = Vec::new();
        let mut d = lo;
        while d < sylow_order || (hi_inclusive && d == sylow_order) {
            out.push(Some(d));
            d *= p;
        }
        out
    };
    match range {
        DRange::Unused | DRange::Optional => alloc::vec![None],
        DRange::Open => powers(p, false),
        DRange::UpToP => powers(p, true),
        DRange::FromSquare => powers(p * p, false),
    }
}

fn check_d(range: DRange, p: u64, d: Option<u64>, sylow_order: u64) -> Result<()> {
    let bad = |what: &str| Err(Error::BadParameter(format!("d = {:?} must be {what}", d)));
    match (range, d) {
        (DRange::Unused, _) | (DRange::Optional, None) => Ok(()),
        (DRange::Optional, Some(d)) if arith::is_p_power(d, p) && d <= sylow_order => Ok(()),
        (DRange::Optional, Some(_)) => bad("a power of p at most |P|"),
        (_, None) => bad("given"),
        (r, Some(d)) => {
            if !arith::is_p_power(d, p) || !d_values(r, p, sylow_order).contains(&Some(d)) {
                return bad(match r {
                    DRange::Open => "a power of p with 1 < d < |P|",
                    DRange::UpToP => "a power of p with p <= d <= |P|",
                    _ => "a power of p with p^2 <= d < |P|",
                });
            }
            Ok(())
        }
    }
}

/// Checks one lemma. Errors with `UnknownLemma` for an unknown id and
/// `BadParameter` when `p` is not prime or `d` is out of range.
pub fn check_lemma(g: &Group, id: &str, params: &LemmaParams) -> Result<VerdictReport> {
    Lab::new(g).lemma(id, params)
}

fn is_elementary_abelian(g: &Group, s: &Subgroup, p: u64) -> bool {
    arith::is_p_power(s.order() as u64, p)
        && s.elements().all(|x| g.pow(x, p) == Group::IDENTITY)
        && s.gens().iter().all(|&x| s.gens().iter().all(|&y| g.commutator(x, y) == Group::IDENTITY))
}

fn p_normals(st: &Structure, p: u64) -> Vec<Subgroup> {
    st.normal_lattice()
        .normals()
        .iter()
        .filter(|n| !n.is_trivial() && arith::is_p_power(n.order() as u64, p))
        .cloned()
        .collect()
}

impl Lab<'_> {
    /// One representative per `G`-conjugacy class, in input order.
    fn class_reps<'a>(&self, subs: impl Iterator<Item = &'a Subgroup>) -> Vec<Subgroup> {
        let mut seen: BTreeSet<Subgroup> = BTreeSet::new();
        let mut out = Vec::new();
        for h in subs {
            if seen.contains(h) {
                continue;
            }
            out.push(h.clone());
            seen.extend(self.group().conjugates(h));
        }
        out
    }

    pub fn lemma(&self, id: &str, params: &LemmaParams) -> Result<VerdictReport> {
        let range = d_range(id)?;
        let p = params.p;
        check_prime(p)?;
        let g = self.group();
        let sylow_order = arith::p_part(g.order() as u64, p);
        check_d(range, p, params.d, sylow_order)?;
        let d = params.d;
        let draft = Draft::new(g, &format!("lemma:{id}"), p, if range == DRange::Unused { None } else { d });
        Ok(draft.run(|draft| {
            let data = self.prime(p)?;
            draft.fact("sylow_order", sylow_order);
            match id {
                "order-p-supersoluble" => self.lemma_p_supersoluble(draft, p, &data),
                "p-length-one" => self.lemma_p_length(draft, p, d.unwrap(), &data),
                "over" => self.lemma_over(draft, d, params, &data),
                "pass" => self.lemma_pass(draft, p, params, &data),
                "order-d" => self.lemma_order_d(draft, p, d.unwrap(), &data),
                "in" => self.lemma_in(draft, p),
                "hypercenter" => self.lemma_hypercenter(draft, p),
                "phi" => self.lemma_phi(draft, p),
                "also" => self.lemma_also(draft, p, &data),
                "Normal" => self.lemma_normal(draft, p, d.unwrap(), &data),
                "two" => self.lemma_two(draft, p, &data),
                "completed" => self.lemma_completed(draft, p, &data),
                "Completed" => self.lemma_zeng(draft, p, d.unwrap(), &data),
                "cyclic" => self.lemma_cyclic(draft, p),
                "ele" => self.lemma_ele(draft, p, d.unwrap(), &data),
                "orderp2" => self.lemma_orderp2(draft, p, d.unwrap(), &data),
                "dim" => self.lemma_dim(draft, p, d.unwrap(), &data),
                "contained-in" => self.lemma_contained_in(draft, p, &data),
                _ => unreachable!("checked by d_range"),
            }
        }))
    }

    fn order_d_hypothesis(&self, draft: &mut Draft, data: &PrimeData, d: u64) -> Result<bool> {
        subgroups_of_order(
            self,
            draft,
            data,
            d as usize,
            "order_d",
            "every subgroup of P of order d satisfies the partial Π-property",
        )
    }

    fn lemma_p_supersoluble(&self, draft: &mut Draft, p: u64, data: &PrimeData) -> Result<()> {
        subgroups_of_order(
            self,
            draft,
            data,
            p as usize,
            "order_p",
            "every subgroup of P of order p satisfies the partial Π-property",
        )?;
        cyclic_four_named(
            self,
            draft,
            data,
            p == 2,
            "every cyclic subgroup of P of order 4 satisfies the partial Π-property when p = 2 and P is not quaternion-free",
        )?;
        if draft.holds() {
            draft.case_if("p-supersoluble", self.structure().p_supersoluble(p));
        }
        Ok(())
    }

    fn lemma_p_length(&self, draft: &mut Draft, p: u64, d: u64, data: &PrimeData) -> Result<()> {
        self.order_d_hypothesis(draft, data, d)?;
        cyclic_four_hypothesis(self, draft, data, d == 2)?;
        if draft.holds() {
            let (soluble, length) = self.structure().p_solubility(p);
            draft.fact("p_soluble", soluble);
            draft.fact("p_length", length);
            draft.case_if("p-soluble-p-length-le-1", soluble && length <= 1);
        }
        Ok(())
    }

    fn lemma_over(&self, draft: &mut Draft, d: Option<u64>, params: &LemmaParams, data: &PrimeData) -> Result<()> {
        let g = self.group();
        let hs: Vec<Subgroup> = match &params.h {
            Some(h) => alloc::vec![h.clone()],
            None => self.class_reps(data.subgroups.all().iter().filter(|h| d.is_none_or(|d| h.order() as u64 == d))),
        };
        let ns: Vec<Subgroup> = match &params.n {
            Some(n) if !g.is_normal(n) => return Err(Error::NotNormal),
            Some(n) => alloc::vec![n.clone()],
            None => self
                .structure()
                .normal_lattice()
                .normals()
                .iter()
                .filter(|n| !n.is_trivial() && n.order() < g.order())
                .cloned()
                .collect(),
        };
        let mut inst = Instances::new();
        for n in &ns {
            let q = QuotientMap::new(g, n)?;
            let qlab = Lab::new(q.target());
            for h in &hs {
                let related = n.is_subgroup_of(h) || arith::gcd(h.order() as u64, n.order() as u64) == 1;
                let applicable = related && self.satisfies_pi(h)?;
                inst.record(
                    applicable,
                    || qlab.satisfies_pi(&q.push_subgroup(h)),
                    || format!("H = {}, N = {}", describe(g, h), describe(g, n)),
                )?;
            }
        }
        inst.finish(
            draft,
            "H satisfies the partial Π-property and either N <= H or gcd(|H|, |N|) = 1",
            "HN/N-satisfies",
        );
        Ok(())
    }

    fn lemma_pass(&self, draft: &mut Draft, p: u64, params: &LemmaParams, data: &PrimeData) -> Result<()> {
        let g = self.group();
        let st = self.structure();
        let hs: Vec<Subgroup> = match &params.h {
            Some(h) if !arith::is_p_power(h.order() as u64, p) => {
                return Err(Error::BadParameter("H is not a p-subgroup".into()))
            }
            Some(h) => alloc::vec![h.clone()],
            None => self.class_reps(data.subgroups.all().iter()),
        };
        if let Some(n) = &params.n {
            if !g.is_normal(n) {
                return Err(Error::NotNormal);
            }
        }
        let mut inst = Instances::new();
        let mut witness: Option<SeriesWitness> = None;
        for h in &hs {
            let ns: Vec<Subgroup> = match &params.n {
                Some(n) => alloc::vec![n.clone()],
                None => st.normal_lattice().normals().iter().filter(|n| h.is_subgroup_of(n)).cloned().collect(),
            };
            for n in &ns {
                let applicable = h.is_subgroup_of(n) && self.satisfies_pi(h)?;
                inst.record(
                    applicable,
                    || {
                        let (found, w) = st.pi_series_through(h, n, p)?;
                        if witness.is_none() {
                            if let Some(w) = &w {
                                let who = format!("H = {}, N = {}", describe(g, h), describe(g, n));
                                witness = Some(SeriesWitness::new(g, who, w));
                            }
                        }
                        Ok(found)
                    },
                    || format!("H = {}, N = {}", describe(g, h), describe(g, n)),
                )?;
            }
        }
        if let Some(w) = witness {
            draft.witness(w);
        }
        inst.finish(
            draft,
            "H is a p-subgroup contained in a normal subgroup N and satisfies the partial Π-property",
            "series-through-N",
        );
        Ok(())
    }

    fn lemma_order_d(&self, draft: &mut Draft, p: u64, d: u64, data: &PrimeData) -> Result<()> {
        if !self.order_d_hypothesis(draft, data, d)? {
            return Ok(());
        }
        let mins = self.structure().minimal_normals();
        let is_p = |m: &Subgroup| arith::is_p_power(m.order() as u64, p);
        let c1 = mins.iter().all(|m| !(m.order() as u64).is_multiple_of(p) || (is_p(m) && m.order() as u64 <= d));
        let has_d = mins.iter().any(|m| m.order() as u64 == d);
        let c2 = !has_d || mins.iter().filter(|m| is_p(m)).all(|m| m.order() as u64 == d);
        draft.fact("minimal_normal_orders", join_orders(&mins));
        draft.fact("conclusion_1", c1);
        draft.fact("conclusion_2", c2);
        draft.case_if("1+2", c1 && c2);
        Ok(())
    }

    fn lemma_in(&self, draft: &mut Draft, p: u64) -> Result<()> {
        let g = self.group();
        let zu = self.structure().hypercenter_u();
        draft.fact("z_u_order", zu.order());
        let mut inst = Instances::new();
        for q in p_normals(self.structure(), p) {
            let qf = p != 2 || is_quaternion_free(g, &q)?;
            let applicable = q.elements().all(|x| {
                let o = g.element_order(x) as u64;
                !(o == p || (!qf && o == 4)) || zu.contains(x)
            });
            inst.record(applicable, || Ok(q.is_subgroup_of(&zu)), || describe(g, &q))?;
        }
        inst.finish(
            draft,
            "P is a normal p-subgroup whose cyclic subgroups of order p, and of order 4 when P is not quaternion-free, lie in Z_U(G)",
            "P-in-Z_U",
        );
        Ok(())
    }

    fn lemma_hypercenter(&self, draft: &mut Draft, p: u64) -> Result<()> {
        let g = self.group();
        let zu = self.structure().hypercenter_u();
        let mut inst = Instances::new();
        for q in p_normals(self.structure(), p) {
            let phi = frattini_of(g, &q)?;
            let quot = QuotientMap::new(g, &phi)?;
            let zbar = Structure::new(quot.target()).hypercenter_u();
            let applicable = quot.push_subgroup(&q).is_subgroup_of(&zbar);
            inst.record(applicable, || Ok(q.is_subgroup_of(&zu)), || describe(g, &q))?;
        }
        inst.finish(draft, "P is a normal p-subgroup with P/Φ(P) <= Z_U(G/Φ(P))", "P-in-Z_U");
        Ok(())
    }

    fn lemma_phi(&self, draft: &mut Draft, p: u64) -> Result<()> {
        let g = self.group();
        let st = self.structure();
        let zup = st.hypercenter_up(p);
        let mut inst = Instances::new();
        for e in st.normal_lattice().normals() {
            if !(e.order() as u64).is_multiple_of(p) {
                continue;
            }
            let phi = frattini_of(g, e)?;
            let quot = QuotientMap::new(g, &phi)?;
            let zbar = Structure::new(quot.target()).hypercenter_up(p);
            let lhs = e.is_subgroup_of(&zup);
            let rhs = quot.push_subgroup(e).is_subgroup_of(&zbar);
            inst.record(true, || Ok(lhs == rhs), || describe(g, e))?;
        }
        inst.finish(draft, "E is a normal subgroup of G of order divisible by p", "equivalent");
        Ok(())
    }

    fn lemma_also(&self, draft: &mut Draft, p: u64, data: &PrimeData) -> Result<()> {
        let g = self.group();
        let mins: Vec<Subgroup> =
            self.structure().minimal_normals().into_iter().filter(|n| n.order() as u64 == p).collect();
        let ks = self.class_reps(data.of_order(p as usize));
        let mut inst = Instances::new();
        for n in &mins {
            for k in &ks {
                let nk = g.join(n, k);
                let applicable = self.satisfies_pi(&nk)?;
                inst.record(
                    applicable,
                    || self.satisfies_pi(k),
                    || format!("N = {}, K = {}", describe(g, n), describe(g, k)),
                )?;
            }
        }
        inst.finish(
            draft,
            "N is minimal normal of order p, |K| = p and NK satisfies the partial Π-property",
            "K-satisfies",
        );
        Ok(())
    }

    fn lemma_normal(&self, draft: &mut Draft, p: u64, d: u64, data: &PrimeData) -> Result<()> {
        if !self.order_d_hypothesis(draft, data, d)? {
            return Ok(());
        }
        let g = self.group();
        let mins: Vec<Subgroup> =
            self.structure().minimal_normals().into_iter().filter(|m| (m.order() as u64).is_multiple_of(d)).collect();
        draft.fact("minimal_normals_divisible_by_d", mins.len());
        let ok = mins.iter().all(|m| m.order() as u64 == d && is_elementary_abelian(g, m, p));
        draft.case_if("elementary-abelian-of-order-d", ok);
        Ok(())
    }

    fn lemma_two(&self, draft: &mut Draft, p: u64, data: &PrimeData) -> Result<()> {
        let g = self.group();
        if !draft.hyp("P is a normal Sylow p-subgroup", g.is_normal(&data.sylow)) {
            return Ok(());
        }
        let order = data.sylow.order() as u64;
        let mut inst = Instances::new();
        if order >= p * p {
            for h in self.class_reps(data.of_order((order / (p * p)) as usize)) {
                let applicable = self.satisfies_pi(&h)?;
                inst.record(applicable, || Ok(self.structure().partial_cap(&h)?.0), || describe(g, &h))?;
            }
        }
        inst.finish(draft, "H is a 2-maximal subgroup of P satisfying the partial Π-property", "partial-CAP");
        Ok(())
    }

    fn elementary_normal_sylow(&self, draft: &mut Draft, p: u64, data: &PrimeData) -> bool {
        let g = self.group();
        draft.hyp(
            "P is an elementary abelian normal Sylow p-subgroup",
            g.is_normal(&data.sylow) && is_elementary_abelian(g, &data.sylow, p),
        )
    }

    fn lemma_completed(&self, draft: &mut Draft, p: u64, data: &PrimeData) -> Result<()> {
        if !self.elementary_normal_sylow(draft, p, data) {
            return Ok(());
        }
        let g = self.group();
        let mut inst = Instances::new();
        for h in data.subgroups.all() {
            inst.record(true, || Ok(self.satisfies_pi(h)? == self.is_complemented(h)?), || describe(g, h))?;
        }
        draft.fact("subgroups_checked", data.subgroups.len());
        inst.finish(draft, "H is a subgroup of P", "equivalent");
        Ok(())
    }

    /// Both sides of the complementation criterion for `G = P ⋊ H`.
    fn lemma_zeng(&self, draft: &mut Draft, p: u64, d: u64, data: &PrimeData) -> Result<()> {
        if !self.elementary_normal_sylow(draft, p, data) {
            return Ok(());
        }
        let g = self.group();
        let h = self.p_complement(p)?;
        let faithful = h.as_ref().is_some_and(|h| g.intersection(h, &g.centralizer(&data.sylow)).is_trivial());
        if !draft.hyp("a Hall p'-subgroup H acts faithfully on P", faithful) {
            return Ok(());
        }
        let h = h.unwrap();
        let mut all_complemented = true;
        let mut checked = 0;
        for s in data.of_order(d as usize) {
            checked += 1;
            if !self.is_complemented(s)? {
                all_complemented = false;
                break;
            }
        }
        let m = self.module(&data.sylow, &g.trivial_subgroup(), &h, p)?.expect("elementary abelian normal section");
        let shape = ModuleShape::of(&m)?;
        let supersoluble = self.structure().supersoluble();
        let h_cyclic = self.is_cyclic(&h);
        let k = shape.k();
        let log_d = arith::log_p(d, p).unwrap() as u64;
        let log_p = arith::log_p(data.sylow.order() as u64, p).unwrap() as u64;
        let divides = k > 0 && arith::gcd(log_d, log_p).is_multiple_of(k as u64);
        let case2 = h_cyclic && shape.homogeneous_of_dim(k) && k > 1 && divides;
        draft.fact("order_d_checked", checked);
        draft.fact("all_order_d_complemented", all_complemented);
        draft.fact("supersoluble", supersoluble);
        draft.fact("h_cyclic", h_cyclic);
        draft.fact("homogeneous", shape.homogeneous);
        draft.fact("k", k);
        draft.fact("k_divides_gcd", divides);
        draft.fact("criterion", supersoluble || case2);
        draft.case_if("equivalent", all_complemented == (supersoluble || case2));
        Ok(())
    }

    fn lemma_cyclic(&self, draft: &mut Draft, p: u64) -> Result<()> {
        let g = self.group();
        let h = self.p_complement(p)?;
        if !draft.hyp("G has a Hall p'-subgroup H", h.is_some()) {
            return Ok(());
        }
        let h = h.unwrap();
        let mut inst = Instances::new();
        for v in p_normals(self.structure(), p) {
            if !self.structure().minimal_normals().contains(&v) {
                continue;
            }
            let dim = arith::log_p(v.order() as u64, p).unwrap();
            let Some(m) = self.module(&v, &g.trivial_subgroup(), &h, p)? else { continue };
            let applicable = arith::is_prime(dim as u64) && m.is_irreducible();
            inst.record(
                applicable,
                || {
                    // H acts through its image, a faithful p'-group.
                    let image_cyclic = m.image_is_cyclic(h.order()).expect("image order divides |H|");
                    let agree = image_cyclic == !m.is_absolutely_irreducible()?;
                    let faithful = m.image_order(h.order()) == Some(h.order());
                    Ok(agree && (!faithful || cyclicity_criterion_check(g, &h, &m)?))
                },
                || describe(g, &v),
            )?;
        }
        inst.finish(draft, "V is a minimal normal p-subgroup, irreducible of prime dimension under H", "equivalent");
        Ok(())
    }

    fn lemma_ele(&self, draft: &mut Draft, p: u64, d: u64, data: &PrimeData) -> Result<()> {
        let g = self.group();
        let st = self.structure();
        o_p_prime_trivial(self, draft, p);
        self.order_d_hypothesis(draft, data, d)?;
        let (socle, mins) = st.socle_and_minimal_normals();
        draft.hyp("G has a minimal normal subgroup of order d", mins.iter().any(|m| m.order() as u64 == d));
        if !draft.holds() {
            return Ok(());
        }
        let top_cyclic = QuotientMap::new(g, &socle)?.target().is_cyclic();
        let phi_trivial = st.frattini()?.is_trivial();
        let p_is_socle = data.sylow == socle;
        let homogeneous = match self.module(&data.sylow, &g.trivial_subgroup(), &g.whole(), p)? {
            Some(m) => ModuleShape::of(&m)?.homogeneous,
            None => false,
        };
        draft.fact("quotient_by_socle_cyclic", top_cyclic);
        draft.fact("frattini_trivial", phi_trivial);
        draft.fact("p_is_socle", p_is_socle);
        draft.fact("homogeneous", homogeneous);
        draft.case_if("conclusion", top_cyclic && phi_trivial && p_is_socle && homogeneous);
        Ok(())
    }

    fn lemma_orderp2(&self, draft: &mut Draft, p: u64, d: u64, data: &PrimeData) -> Result<()> {
        self.order_d_hypothesis(draft, data, d)?;
        cyclic_four_hypothesis(self, draft, data, d == 2)?;
        p_rank_above_one(self, draft, p);
        if draft.holds() {
            let bound = p * p * data.frattini.order() as u64;
            draft.fact("frattini_order", data.frattini.order());
            draft.fact("bound", bound);
            draft.case_if("d-at-least-p2-phi", d >= bound);
        }
        Ok(())
    }

    fn lemma_dim(&self, draft: &mut Draft, p: u64, d: u64, data: &PrimeData) -> Result<()> {
        let g = self.group();
        self.order_d_hypothesis(draft, data, d)?;
        cyclic_four_hypothesis(self, draft, data, d == 2)?;
        let h = semidirect(self, p, data)?;
        let elementary = is_elementary_abelian(g, &data.sylow, p);
        draft.hyp("G = P ⋊ H with H a Hall p'-subgroup and P elementary abelian", h.is_some() && elementary);
        p_rank_above_one(self, draft, p);
        if !draft.holds() {
            return Ok(());
        }
        let h = h.unwrap();
        let m = self.module(&data.sylow, &g.trivial_subgroup(), &h, p)?.expect("elementary abelian normal section");
        let shape = ModuleShape::of(&m)?;
        let k = shape.k();
        let log_d = arith::log_p(d, p).unwrap() as u64;
        let log_p = arith::log_p(data.sylow.order() as u64, p).unwrap() as u64;
        let c1 = shape.homogeneous_of_dim(k) && k > 1 && arith::gcd(log_d, log_p).is_multiple_of(k as u64);
        let c2 = shape.none_absolutely_irreducible();
        draft.fact("k", k);
        draft.fact("homogeneous", shape.homogeneous);
        draft.fact("conclusion_1", c1);
        draft.fact("conclusion_2", c2);
        draft.case_if("1+2", c1 && c2);
        Ok(())
    }

    fn lemma_contained_in(&self, draft: &mut Draft, p: u64, data: &PrimeData) -> Result<()> {
        let st = self.structure();
        draft.hyp("G is p-soluble", st.is_p_soluble(p));
        p_rank_above_one(self, draft, p);
        let order = data.sylow.order() as u64;
        draft.hyp("|P| >= p^2", order >= p * p);
        let two_max = if order >= p * p { (order / (p * p)) as usize } else { 0 };
        subgroups_of_order(
            self,
            draft,
            data,
            two_max,
            "two_maximal",
            "every 2-maximal subgroup of P satisfies the partial Π-property",
        )?;
        if draft.holds() {
            let ok = data.of_order(two_max).all(|q| data.frattini.is_subgroup_of(q));
            draft.fact("frattini_order", data.frattini.order());
            draft.case_if("phi-in-every-2-maximal", ok);
        }
        Ok(())
    }
}

fn join_orders(subs: &[Subgroup]) -> String {
    let parts: Vec<String> = subs.iter().map(|s| format!("{}", s.order())).collect();
    parts.join(",")
}
