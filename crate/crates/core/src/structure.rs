//! Per-group structure theory with cached lattices: Sylow and Hall
//! subgroups, `O_p`, `O_{p'}`, Frattini subgroup, socle, the p-solubility
//! hierarchy, hypercenters, `Ω` and quaternion-freeness.

use alloc::vec::Vec;
use core::cell::OnceCell;

use crate::arith;
use crate::chief::{ChiefFactor, ChiefSeries, ChiefSeriesIter};
use crate::error::{Error, Result};
use crate::group::{Group, Subgroup};
use crate::lattice::{NormalLattice, SubgroupLattice};

/// A group together with lazily computed lattices. Not `Sync`; build one
/// per thread.
pub struct Structure<'g> {
    g: &'g Group,
    normals: OnceCell<NormalLattice>,
    lattice: OnceCell<Result<SubgroupLattice>>,
    frattini: OnceCell<Result<Subgroup>>,
}

/// Structure invariants of a group at a prime.
#[derive(Clone, Debug)]
pub struct StructureFacts {
    pub p: u64,
    pub sylow_p: Subgroup,
    pub o_p: Subgroup,
    pub o_p_prime: Subgroup,
    pub frattini: Subgroup,
    pub socle: Subgroup,
    pub center: Subgroup,
    pub derived: Subgroup,
    pub is_p_soluble: bool,
    pub p_length: usize,
    pub is_p_supersoluble: bool,
    pub is_supersoluble: bool,
    /// `None` when the group is not p-soluble.
    pub p_rank: Option<u32>,
    pub z_u: Subgroup,
    pub z_up: Subgroup,
}

impl<'g> Structure<'g> {
    pub fn new(g: &'g Group) -> Self {
        Structure { g, normals: OnceCell::new(), lattice: OnceCell::new(), frattini: OnceCell::new() }
    }

    pub fn group(&self) -> &'g Group {
        self.g
    }

    pub fn normal_lattice(&self) -> &NormalLattice {
        self.normals.get_or_init(|| NormalLattice::new(self.g))
    }

    pub fn lattice(&self) -> Result<&SubgroupLattice> {
        self.lattice.get_or_init(|| SubgroupLattice::new(self.g)).as_ref().map_err(Clone::clone)
    }

    /// Streams chief series, optionally through a normal subgroup.
    pub fn chief_series(&self, through: Option<&Subgroup>) -> Result<ChiefSeriesIter<'_>> {
        let lat = self.normal_lattice();
        let t = match through {
            Some(n) => Some(lat.index_of(n).ok_or(Error::NotNormal)?),
            None => None,
        };
        Ok(ChiefSeriesIter::new(lat, t, self.g.caps().series))
    }

    /// The first chief series in canonical order.
    pub fn a_chief_series(&self) -> ChiefSeries {
        let lat = self.normal_lattice();
        let mut nodes = alloc::vec![lat.bottom()];
        while *nodes.last().unwrap() != lat.top() {
            nodes.push(lat.covers(*nodes.last().unwrap())[0]);
        }
        ChiefSeries::from_nodes(lat, nodes)
    }

    pub fn classify_factor(&self, below: &Subgroup, above: &Subgroup) -> Result<ChiefFactor> {
        crate::chief::classify_factor_in(self.g, self.normal_lattice(), self.frattini()?, below, above)
    }

    /// A Sylow p-subgroup: grow a p-subgroup inside its normalizer, then
    /// take the canonically least conjugate.
    pub fn sylow(&self, p: u64) -> Subgroup {
        sylow_of(self.g, &self.g.whole(), p)
    }

    /// A Hall π-subgroup. Tries a greedy join of π-elements first and
    /// falls back to the subgroup lattice.
    pub fn hall(&self, pi: &[u64]) -> Result<Subgroup> {
        let g = self.g;
        let n = g.order() as u64;
        let target: u64 =
            arith::prime_divisors(n).iter().filter(|q| pi.contains(q)).map(|&q| arith::p_part(n, q)).product();
        let mut cur = g.trivial_subgroup();
        for x in 1..g.order() {
            if cur.order() as u64 == target {
                return Ok(cur);
            }
            if cur.contains(x) || !arith::is_pi_number(g.element_order(x) as u64, pi) {
                continue;
            }
            let next = g.join_element(&cur, x);
            if arith::is_pi_number(next.order() as u64, pi) {
                cur = next;
            }
        }
        if cur.order() as u64 == target {
            return Ok(cur);
        }
        let lat = self.lattice()?;
        lat.of_order(target as usize).next().cloned().ok_or(Error::NoHallSubgroup { order: target as usize })
    }

    /// `Φ(G)`; the whole group when it is trivial.
    pub fn frattini(&self) -> Result<&Subgroup> {
        self.frattini.get_or_init(|| frattini_of(self.g, &self.g.whole())).as_ref().map_err(Clone::clone)
    }

    pub fn minimal_normals(&self) -> Vec<Subgroup> {
        let lat = self.normal_lattice();
        lat.minimal().iter().map(|&i| lat.get(i).clone()).collect()
    }

    pub fn socle_and_minimal_normals(&self) -> (Subgroup, Vec<Subgroup>) {
        let mins = self.minimal_normals();
        let socle = mins.iter().fold(self.g.trivial_subgroup(), |acc, m| self.g.join(&acc, m));
        (socle, mins)
    }

    pub fn socle(&self) -> Subgroup {
        self.socle_and_minimal_normals().0
    }

    /// Largest normal p-subgroup.
    pub fn o_p(&self, p: u64) -> Subgroup {
        let lat = self.normal_lattice();
        lat.get(lat.largest(|n| arith::is_p_power(n.order() as u64, p))).clone()
    }

    /// Largest normal subgroup of order coprime to `p`.
    pub fn o_p_prime(&self, p: u64) -> Subgroup {
        let lat = self.normal_lattice();
        lat.get(lat.largest(|n| !(n.order() as u64).is_multiple_of(p))).clone()
    }

    /// Upper p-series `1 ≤ O_{p'} ≤ O_{p',p} ≤ ...`, as normal-lattice
    /// indices, stopping when it stalls.
    pub fn upper_p_series(&self, p: u64) -> Vec<usize> {
        let lat = self.normal_lattice();
        let mut terms = alloc::vec![lat.bottom()];
        loop {
            let cur = *terms.last().unwrap();
            let a = lat.largest_over(cur, |q| q % p != 0);
            let b = lat.largest_over(a, |q| arith::is_p_power(q, p));
            if b == cur {
                return terms;
            }
            terms.push(a);
            terms.push(b);
        }
    }

    /// `(is p-soluble, p-length)`; the p-length counts nontrivial
    /// `O_{p',p}/O_{p'}` steps of the upper p-series.
    pub fn p_solubility(&self, p: u64) -> (bool, usize) {
        let lat = self.normal_lattice();
        let terms = self.upper_p_series(p);
        let soluble = *terms.last().unwrap() == lat.top();
        let mut count = 0;
        let mut i = 1;
        while i + 1 < terms.len() {
            if terms[i + 1] != terms[i] {
                count += 1;
            }
            i += 2;
        }
        (soluble, count)
    }

    pub fn is_p_soluble(&self, p: u64) -> bool {
        self.p_solubility(p).0
    }

    pub fn p_length(&self, p: u64) -> usize {
        self.p_solubility(p).1
    }

    /// Every p-divisible chief factor has order `p`.
    pub fn p_supersoluble(&self, p: u64) -> bool {
        self.a_chief_series().factor_orders().iter().all(|&o| !(o as u64).is_multiple_of(p) || o as u64 == p)
    }

    pub fn supersoluble(&self) -> bool {
        self.a_chief_series().factor_orders().iter().all(|&o| arith::is_prime(o as u64))
    }

    /// Largest `k` with a chief factor of order `p^k`; `0` for p'-groups.
    pub fn p_rank(&self, p: u64) -> Result<u32> {
        if !self.is_p_soluble(p) {
            return Err(Error::NotPSoluble { p });
        }
        Ok(self.a_chief_series().factor_orders().iter().filter_map(|&o| arith::log_p(o as u64, p)).max().unwrap_or(0))
    }

    /// Flags normal subgroups all of whose chief factors below satisfy
    /// `ok`, walking one lower cover per subgroup (first or last).
    fn hyper_flags(&self, ok: impl Fn(u64) -> bool, last_cover: bool) -> Vec<bool> {
        let lat = self.normal_lattice();
        let mut flag = alloc::vec![false; lat.len()];
        flag[0] = true;
        // Canonical order is by increasing order, so lower covers come first.
        for i in 1..lat.len() {
            let below = lat.covered(i);
            let l = if last_cover { *below.last().unwrap() } else { below[0] };
            flag[i] = flag[l] && ok((lat.get(i).order() / lat.get(l).order()) as u64);
        }
        flag
    }

    fn hyper_product(&self, flags: &[bool]) -> Subgroup {
        let lat = self.normal_lattice();
        (0..lat.len()).filter(|&i| flags[i]).fold(self.g.trivial_subgroup(), |acc, i| self.g.join(&acc, lat.get(i)))
    }

    /// `Z_U(G)`.
    pub fn hypercenter_u(&self) -> Subgroup {
        self.hyper_product(&self.hyper_flags(arith::is_prime, false))
    }

    /// `Z_{U_p}(G)`.
    pub fn hypercenter_up(&self, p: u64) -> Subgroup {
        self.hyper_product(&self.hyper_flags(|o| o % p != 0 || o == p, false))
    }

    /// `Z_U(G)` computed along last rather than first lower covers; equal
    /// to [`Structure::hypercenter_u`] by Jordan–Hölder.
    pub fn hypercenter_u_alt(&self) -> Subgroup {
        self.hyper_product(&self.hyper_flags(arith::is_prime, true))
    }

    pub fn hypercenter_up_alt(&self, p: u64) -> Subgroup {
        self.hyper_product(&self.hyper_flags(|o| o % p != 0 || o == p, true))
    }

    pub fn facts(&self, p: u64) -> Result<StructureFacts> {
        let (is_p_soluble, p_length) = self.p_solubility(p);
        Ok(StructureFacts {
            p,
            sylow_p: self.sylow(p),
            o_p: self.o_p(p),
            o_p_prime: self.o_p_prime(p),
            frattini: self.frattini()?.clone(),
            socle: self.socle(),
            center: self.g.center(),
            derived: self.g.derived_subgroup(),
            is_p_soluble,
            p_length,
            is_p_supersoluble: self.p_supersoluble(p),
            is_supersoluble: self.supersoluble(),
            p_rank: self.p_rank(p).ok(),
            z_u: self.hypercenter_u(),
            z_up: self.hypercenter_up(p),
        })
    }
}

/// A Sylow p-subgroup of `s ≤ g`, canonically least among its conjugates
/// under `s`.
pub fn sylow_of(g: &Group, s: &Subgroup, p: u64) -> Subgroup {
    let target = arith::p_part(s.order() as u64, p) as usize;
    let mut cur = g.trivial_subgroup();
    while cur.order() < target {
        // p divides |N_S(cur) : cur|, so some x in N_S(cur) \ cur has
        // x^p ∈ cur.
        let x = s
            .elements()
            .find(|&x| !cur.contains(x) && cur.contains(g.pow(x, p)) && g.normalizes(x, &cur))
            .expect("p-subgroup below the Sylow order has a p-element in its normalizer");
        cur = g.join_element(&cur, x);
    }
    g.conjugates_under(&cur, s).into_iter().min().unwrap()
}

/// `Φ(S)` for `S ≤ G`. For p-groups this is `S' S^p`; otherwise the
/// intersection of the maximal subgroups of `S` from its lattice.
pub fn frattini_of(g: &Group, s: &Subgroup) -> Result<Subgroup> {
    if s.is_trivial() {
        return Ok(s.clone());
    }
    let primes = arith::prime_divisors(s.order() as u64);
    if primes.len() == 1 {
        return Ok(p_group_frattini(g, s, primes[0]));
    }
    let lat = SubgroupLattice::within(g, s)?;
    Ok(frattini_in_lattice(g, &lat))
}

/// Intersection of the maximal subgroups of the top of a lattice.
pub fn frattini_in_lattice(g: &Group, lat: &SubgroupLattice) -> Subgroup {
    let top = lat.get(lat.top());
    let mut bits = top.members().clone();
    for &m in lat.maximal_subgroups(lat.top()) {
        bits.intersect_with(lat.get(m).members());
    }
    g.subgroup_from_bits(bits)
}

fn p_group_frattini(g: &Group, s: &Subgroup, p: u64) -> Subgroup {
    let derived = g.commutator_subgroup(s, s);
    let powers: Vec<usize> = s.elements().map(|x| g.pow(x, p)).collect();
    let pw = g.subgroup_from_indices(&powers);
    g.join(&derived, &pw)
}

/// `Ω_i(P) = ⟨x ∈ P : x^{p^i} = 1⟩`.
pub fn omega_i(g: &Group, p_sub: &Subgroup, p: u64, i: u32) -> Subgroup {
    let e = p.pow(i);
    let xs: Vec<usize> = p_sub.elements().filter(|&x| g.pow(x, e) == Group::IDENTITY).collect();
    g.subgroup_from_indices(&xs)
}

/// `Ω(P)`: `Ω_1` for odd `p` or quaternion-free 2-groups, else `Ω_2`.
pub fn omega(g: &Group, p_sub: &Subgroup, p: u64) -> Result<Subgroup> {
    if p != 2 || is_quaternion_free(g, p_sub)? {
        Ok(omega_i(g, p_sub, p, 1))
    } else {
        Ok(omega_i(g, p_sub, p, 2))
    }
}

/// Exponent of a subgroup.
pub fn exponent_of(g: &Group, s: &Subgroup) -> usize {
    s.elements().fold(1usize, |acc, x| {
        let o = g.element_order(x);
        acc / arith::gcd(acc as u64, o as u64) as usize * o
    })
}

/// Does `S/T` have the element-order profile of `Q_8` (one involution and
/// six elements of order 4)? Among groups of order 8 this characterizes `Q_8`.
pub fn section_is_q8(g: &Group, s: &Subgroup, t: &Subgroup) -> bool {
    if s.order() != 8 * t.order() {
        return false;
    }
    let mut counts = [0usize; 9];
    for x in s.elements() {
        let mut k = 1;
        let mut y = x;
        while !t.contains(y) {
            y = g.mul(y, x);
            k += 1;
        }
        counts[k] += 1;
    }
    let n = t.order();
    counts[1] == n && counts[2] == n && counts[4] == 6 * n
}

/// No section `S/T` of the 2-group `P` is isomorphic to `Q_8`.
pub fn is_quaternion_free(g: &Group, p_sub: &Subgroup) -> Result<bool> {
    if p_sub.order() < 8 {
        return Ok(true);
    }
    Ok(is_quaternion_free_in(g, &SubgroupLattice::within(g, p_sub)?))
}

/// [`is_quaternion_free`] for the top of an already computed lattice.
pub fn is_quaternion_free_in(g: &Group, lat: &SubgroupLattice) -> bool {
    for si in (0..lat.len()).rev() {
        let s = lat.get(si);
        if s.order() < 8 {
            break;
        }
        let t_order = s.order() / 8;
        for t in lat.of_order(t_order) {
            if t.is_subgroup_of(s) && g.is_normalized_by(t, s) && section_is_q8(g, s, t) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::*;
    use crate::fp::FpMatrix;

    fn sl23() -> Group {
        linear(3, 2, &[FpMatrix::square(3, &[1, 1, 0, 1]).unwrap(), FpMatrix::square(3, &[1, 0, 1, 1]).unwrap()])
            .unwrap()
    }

    #[test]
    fn sylow_subgroups() {
        let s4 = symmetric(4).unwrap();
        let st = Structure::new(&s4);
        assert_eq!(st.sylow(2).order(), 8);
        assert_eq!(st.sylow(3).order(), 3);
        let s3 = symmetric(3).unwrap();
        assert!(Structure::new(&s3).sylow(5).is_trivial());
        let g = sl23();
        let st = Structure::new(&g);
        let p = st.sylow(2);
        let pg = g.subgroup_as_group(&p).unwrap();
        assert!(crate::iso::is_isomorphic(&pg, &quaternion(8).unwrap()).unwrap());
        // Canonically least among the Sylow subgroups in the lattice.
        let lat = SubgroupLattice::new(&s4).unwrap();
        let first = lat.of_order(8).next().unwrap();
        assert_eq!(*first, Structure::new(&s4).sylow(2));
    }

    #[test]
    fn hall_subgroups() {
        let a4 = alternating(4).unwrap();
        assert_eq!(Structure::new(&a4).hall(&[3]).unwrap().order(), 3);
        let a5 = alternating(5).unwrap();
        assert_eq!(Structure::new(&a5).hall(&[2, 5]).unwrap_err(), Error::NoHallSubgroup { order: 20 });
        assert_eq!(Structure::new(&a5).hall(&[2, 3, 5]).unwrap().order(), 60);
    }

    #[test]
    fn frattini_examples() {
        let q8 = quaternion(8).unwrap();
        let st = Structure::new(&q8);
        assert_eq!(*st.frattini().unwrap(), q8.center());
        assert_eq!(st.frattini().unwrap().order(), 2);
        assert!(Structure::new(&elementary_abelian(2, 3).unwrap()).frattini().unwrap().is_trivial());
        assert_eq!(Structure::new(&cyclic(4).unwrap()).frattini().unwrap().order(), 2);
        assert_eq!(Structure::new(&cyclic(12).unwrap()).frattini().unwrap().order(), 2);
        assert!(Structure::new(&symmetric(4).unwrap()).frattini().unwrap().is_trivial());
        assert_eq!(Structure::new(&sl23()).frattini().unwrap().order(), 2);
    }

    #[test]
    fn socles() {
        let a4 = alternating(4).unwrap();
        let (soc, mins) = Structure::new(&a4).socle_and_minimal_normals();
        assert_eq!((soc.order(), mins.len()), (4, 1));
        let v = elementary_abelian(2, 2).unwrap();
        let (soc, mins) = Structure::new(&v).socle_and_minimal_normals();
        assert_eq!((soc.order(), mins.len()), (4, 3));
        let a5 = alternating(5).unwrap();
        assert_eq!(Structure::new(&a5).socle().order(), 60);
    }

    #[test]
    fn o_p_examples() {
        let s4 = symmetric(4).unwrap();
        let st = Structure::new(&s4);
        assert_eq!(st.o_p(2).order(), 4);
        assert!(st.o_p_prime(2).is_trivial());
        let s3 = symmetric(3).unwrap();
        assert_eq!(Structure::new(&s3).o_p_prime(2).order(), 3);
    }

    #[test]
    fn p_solubility_examples() {
        let s4 = symmetric(4).unwrap();
        assert_eq!(Structure::new(&s4).p_solubility(2), (true, 2));
        let a5 = alternating(5).unwrap();
        assert!(!Structure::new(&a5).p_solubility(2).0);
        let s3 = symmetric(3).unwrap();
        assert_eq!(Structure::new(&s3).p_solubility(3), (true, 1));
        assert_eq!(Structure::new(&s3).p_solubility(5), (true, 0));
    }

    #[test]
    fn supersolubility_and_rank() {
        let s3 = symmetric(3).unwrap();
        let st = Structure::new(&s3);
        assert!(st.p_supersoluble(3));
        assert_eq!(st.p_rank(3).unwrap(), 1);
        assert!(st.supersoluble());
        let a4 = alternating(4).unwrap();
        let st = Structure::new(&a4);
        assert!(!st.p_supersoluble(2));
        assert_eq!(st.p_rank(2).unwrap(), 2);
        assert!(st.p_supersoluble(5));
        let a5 = alternating(5).unwrap();
        assert_eq!(Structure::new(&a5).p_rank(2).unwrap_err(), Error::NotPSoluble { p: 2 });
    }

    #[test]
    fn hypercenters() {
        let s3 = symmetric(3).unwrap();
        assert_eq!(Structure::new(&s3).hypercenter_u().order(), 6);
        let a4 = alternating(4).unwrap();
        let st = Structure::new(&a4);
        assert!(st.hypercenter_u().is_trivial());
        assert_eq!(st.hypercenter_up(3).order(), 12);
        assert!(st.hypercenter_up(2).is_trivial());
        let s4 = symmetric(4).unwrap();
        let st = Structure::new(&s4);
        assert!(st.hypercenter_u().is_trivial());
        assert_eq!(st.hypercenter_up(3).order(), 24);
    }

    #[test]
    fn omega_and_quaternion_freeness() {
        let c4 = cyclic(4).unwrap();
        assert_eq!(omega(&c4, &c4.whole(), 2).unwrap().order(), 2);
        let q8 = quaternion(8).unwrap();
        assert!(!is_quaternion_free(&q8, &q8.whole()).unwrap());
        assert_eq!(omega(&q8, &q8.whole(), 2).unwrap().order(), 8);
        let d8 = dihedral(8).unwrap();
        assert!(is_quaternion_free(&d8, &d8.whole()).unwrap());
        let q16 = quaternion(16).unwrap();
        assert!(!is_quaternion_free(&q16, &q16.whole()).unwrap());
        let sd16 = semidihedral(16).unwrap();
        assert!(!is_quaternion_free(&sd16, &sd16.whole()).unwrap());
        assert_eq!(exponent_of(&sd16, &sd16.whole()), 8);
    }
}
