//! Subgroup embedding predicates along chief series: the partial
//! Π-property, the partial CAP-property, and complementation.
//!
//! Both chief-series predicates are decided by depth-first search over the
//! normal lattice. The condition at a chief factor `G_i/G_{i-1}` depends
//! only on the pair `(G_{i-1}, G_i)`, so failing prefixes are abandoned
//! and nodes from which no passing completion exists are remembered.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::arith;
use crate::chief::ChiefSeries;
use crate::error::{Error, Result};
use crate::group::{Group, Subgroup};
use crate::lattice::NormalLattice;
use crate::quotient::QuotientMap;
use crate::structure::Structure;

/// The partial Π condition evaluated at one chief factor.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct PiFactorRecord {
    pub factor_index: usize,
    /// `|D̄|` for `D̄ = HG_{i-1}/G_{i-1} ∩ G_i/G_{i-1}`.
    pub intersection_order: usize,
    /// `|Ḡ : N_Ḡ(D̄)|`.
    pub normalizer_index: usize,
    /// `π(D̄)`.
    pub prime_set: Vec<u64>,
    pub passed: bool,
}

/// A chief series along which every factor passes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PiWitness {
    pub series: ChiefSeries,
    pub per_factor: Vec<PiFactorRecord>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "lowercase"))]
pub enum CapMode {
    Covers,
    Avoids,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CapWitness {
    pub series: ChiefSeries,
    pub per_factor: Vec<(usize, CapMode)>,
}

/// `D* = HG_{i-1} ∩ G_i`, the preimage of `D̄` in `G`.
fn trace(g: &Group, h: &Subgroup, lo: &Subgroup, hi: &Subgroup) -> Subgroup {
    let hl = g.join(h, lo);
    g.intersection(&hl, hi)
}

fn factor_record(index: usize, d_order: usize, normalizer_index: usize) -> PiFactorRecord {
    let prime_set = arith::prime_divisors(d_order as u64);
    // D̄ = 1: the normalizer is everything, so the index is 1 and passes.
    let passed = d_order == 1 || arith::is_pi_number(normalizer_index as u64, &prime_set);
    PiFactorRecord { factor_index: index, intersection_order: d_order, normalizer_index, prime_set, passed }
}

/// The factor condition by subgroup arithmetic in `G`: by correspondence
/// `N_Ḡ(D̄) = N_G(D*)/G_{i-1}`.
pub fn pi_step_in_group(g: &Group, h: &Subgroup, lo: &Subgroup, hi: &Subgroup, index: usize) -> PiFactorRecord {
    let d = trace(g, h, lo, hi);
    let d_order = d.order() / lo.order();
    let idx = if d_order == 1 { 1 } else { g.order() / g.normalizer(&d).order() };
    factor_record(index, d_order, idx)
}

/// The factor condition computed inside a materialized quotient `G/G_{i-1}`.
pub fn pi_step_in_quotient(q: &QuotientMap, h: &Subgroup, hi: &Subgroup, index: usize) -> PiFactorRecord {
    let t = q.target();
    let hb = q.push_subgroup(h);
    let gb = q.push_subgroup(hi);
    let d = t.intersection(&hb, &gb);
    let idx = t.order() / t.normalizer(&d).order();
    factor_record(index, d.order(), idx)
}

/// Depth-first search for a chief series whose every step passes `step`,
/// restricted by `allowed(cur, next)`. Returns the node path.
fn search(
    lat: &NormalLattice,
    mut step: impl FnMut(usize, usize) -> Result<bool>,
    allowed: impl Fn(usize, usize) -> bool,
) -> Result<Option<Vec<usize>>> {
    let top = lat.top();
    let mut dead = alloc::vec![false; lat.len()];
    let mut memo: BTreeMap<(usize, usize), bool> = BTreeMap::new();
    let mut path = alloc::vec![lat.bottom()];
    let mut cursor = alloc::vec![0usize];
    while let Some(&node) = path.last() {
        if node == top {
            return Ok(Some(path));
        }
        let covers = lat.covers(node);
        let c = *cursor.last().unwrap();
        if c == covers.len() {
            dead[node] = true;
            path.pop();
            cursor.pop();
            continue;
        }
        *cursor.last_mut().unwrap() += 1;
        let next = covers[c];
        if dead[next] || !allowed(node, next) {
            continue;
        }
        let ok = match memo.get(&(node, next)) {
            Some(&v) => v,
            None => {
                let v = step(node, next)?;
                memo.insert((node, next), v);
                v
            }
        };
        if ok {
            path.push(next);
            cursor.push(0);
        }
    }
    Ok(None)
}

fn check_subgroup(g: &Group, h: &Subgroup) -> Result<()> {
    if h.members().len() != g.order() {
        return Err(Error::ElementNotInGroup);
    }
    Ok(())
}

fn pi_records(g: &Group, h: &Subgroup, series: &ChiefSeries) -> Vec<PiFactorRecord> {
    series.factors().enumerate().map(|(i, (lo, hi))| pi_step_in_group(g, h, lo, hi, i + 1)).collect()
}

impl Structure<'_> {
    /// Does `h` satisfy the partial Π-property in `G`? Returns the first
    /// passing series in canonical depth-first order.
    pub fn partial_pi(&self, h: &Subgroup) -> Result<(bool, Option<PiWitness>)> {
        let g = self.group();
        check_subgroup(g, h)?;
        let lat = self.normal_lattice();
        let found = search(lat, |lo, hi| Ok(pi_step_in_group(g, h, lat.get(lo), lat.get(hi), 0).passed), |_, _| true)?;
        Ok(match found {
            Some(nodes) => {
                let series = ChiefSeries::from_nodes(lat, nodes);
                let per_factor = pi_records(g, h, &series);
                (true, Some(PiWitness { series, per_factor }))
            }
            None => (false, None),
        })
    }

    /// The same predicate evaluated by materializing every quotient
    /// `G/G_{i-1}` met during the search.
    pub fn partial_pi_via_quotients(&self, h: &Subgroup) -> Result<bool> {
        let g = self.group();
        check_subgroup(g, h)?;
        let lat = self.normal_lattice();
        let mut quotients: BTreeMap<usize, QuotientMap> = BTreeMap::new();
        let found = search(
            lat,
            |lo, hi| {
                if let alloc::collections::btree_map::Entry::Vacant(e) = quotients.entry(lo) {
                    e.insert(QuotientMap::new(g, lat.get(lo))?);
                }
                Ok(pi_step_in_quotient(&quotients[&lo], h, lat.get(hi), 0).passed)
            },
            |_, _| true,
        )?;
        Ok(found.is_some())
    }

    /// Checks both evaluation routes on every chief factor of `G`;
    /// returns the factors `(lo, hi)` where they disagree.
    pub fn pi_route_mismatches(&self, h: &Subgroup) -> Result<Vec<(usize, usize)>> {
        let g = self.group();
        let lat = self.normal_lattice();
        let mut bad = Vec::new();
        for lo in 0..lat.len() {
            if lat.covers(lo).is_empty() {
                continue;
            }
            let q = QuotientMap::new(g, lat.get(lo))?;
            for &hi in lat.covers(lo) {
                let a = pi_step_in_group(g, h, lat.get(lo), lat.get(hi), 0);
                let b = pi_step_in_quotient(&q, h, lat.get(hi), 0);
                if a != b {
                    bad.push((lo, hi));
                }
            }
        }
        Ok(bad)
    }

    /// Does some chief series have every factor covered or avoided by `h`?
    pub fn partial_cap(&self, h: &Subgroup) -> Result<(bool, Option<CapWitness>)> {
        let g = self.group();
        check_subgroup(g, h)?;
        let lat = self.normal_lattice();
        let mode = |lo: &Subgroup, hi: &Subgroup| -> Option<CapMode> {
            let hl = g.join(h, lo);
            if hi.is_subgroup_of(&hl) {
                Some(CapMode::Covers)
            } else if g.intersection(h, hi).is_subgroup_of(lo) {
                Some(CapMode::Avoids)
            } else {
                None
            }
        };
        let found = search(lat, |lo, hi| Ok(mode(lat.get(lo), lat.get(hi)).is_some()), |_, _| true)?;
        Ok(match found {
            Some(nodes) => {
                let series = ChiefSeries::from_nodes(lat, nodes);
                let per_factor =
                    series.factors().enumerate().map(|(i, (lo, hi))| (i + 1, mode(lo, hi).unwrap())).collect();
                (true, Some(CapWitness { series, per_factor }))
            }
            None => (false, None),
        })
    }

    /// A complement `K` (`G = HK`, `H ∩ K = 1`), first in canonical lattice
    /// order.
    pub fn complement(&self, h: &Subgroup) -> Result<Option<Subgroup>> {
        let g = self.group();
        let lat = self.lattice()?;
        let n = g.order() / h.order();
        Ok(lat.of_order(n).find(|k| g.intersection(h, k).is_trivial()).cloned())
    }

    /// A chief series through the normal subgroup `n` along which every
    /// `|G : N_G(HG_{i-1} ∩ G_i)|` is a `p`-number.
    pub fn pi_series_through(&self, h: &Subgroup, n: &Subgroup, p: u64) -> Result<(bool, Option<PiWitness>)> {
        let g = self.group();
        check_subgroup(g, h)?;
        if !h.is_subgroup_of(n) || !arith::is_p_power(h.order() as u64, p) {
            return Err(Error::HypothesisViolated("H is not a p-subgroup of N".into()));
        }
        let lat = self.normal_lattice();
        let ni = lat.index_of(n).ok_or(Error::NotNormal)?;
        if !self.partial_pi(h)?.0 {
            return Err(Error::HypothesisViolated("H does not satisfy the partial Π-property".into()));
        }
        let nsub = lat.get(ni);
        let p_step = |lo: &Subgroup, hi: &Subgroup| {
            let d = trace(g, h, lo, hi);
            arith::is_p_power((g.order() / g.normalizer(&d).order()) as u64, p)
        };
        let allowed = |cur: usize, next: usize| nsub.is_subgroup_of(lat.get(cur)) || lat.get(next).is_subgroup_of(nsub);
        let found = search(lat, |lo, hi| Ok(p_step(lat.get(lo), lat.get(hi))), allowed)?;
        Ok(match found {
            Some(nodes) => {
                let series = ChiefSeries::from_nodes(lat, nodes);
                let per_factor = series
                    .factors()
                    .enumerate()
                    .map(|(i, (lo, hi))| {
                        let d = trace(g, h, lo, hi);
                        let idx = g.order() / g.normalizer(&d).order();
                        PiFactorRecord {
                            factor_index: i + 1,
                            intersection_order: d.order() / lo.order(),
                            normalizer_index: idx,
                            prime_set: alloc::vec![p],
                            passed: true,
                        }
                    })
                    .collect();
                (true, Some(PiWitness { series, per_factor }))
            }
            None => (false, None),
        })
    }
}

pub fn satisfies_partial_pi(g: &Group, h: &Subgroup) -> Result<(bool, Option<PiWitness>)> {
    Structure::new(g).partial_pi(h)
}

pub fn satisfies_partial_cap(g: &Group, h: &Subgroup) -> Result<(bool, Option<CapWitness>)> {
    Structure::new(g).partial_cap(h)
}

pub fn is_complemented(g: &Group, h: &Subgroup) -> Result<(bool, Option<Subgroup>)> {
    let k = Structure::new(g).complement(h)?;
    Ok((k.is_some(), k))
}

pub fn pi_series_through(g: &Group, h: &Subgroup, n: &Subgroup, p: u64) -> Result<(bool, Option<PiWitness>)> {
    Structure::new(g).pi_series_through(h, n, p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::*;
    use crate::fp::FpMatrix;
    use crate::perm::Permutation;

    fn perm(deg: usize, cycles: &[&[usize]]) -> Permutation {
        let c: Vec<Vec<usize>> = cycles.iter().map(|c| c.to_vec()).collect();
        Permutation::from_cycles(deg, &c).unwrap()
    }

    #[test]
    fn alt4_involution_fails() {
        let a4 = alternating(4).unwrap();
        let h = a4.subgroup_generated(&[perm(4, &[&[1, 2], &[3, 4]])]).unwrap();
        let (ok, w) = satisfies_partial_pi(&a4, &h).unwrap();
        assert!(!ok && w.is_none());
        // On the unique series, the factor V4/1 has D = H with index 3.
        let st = Structure::new(&a4);
        let s = st.a_chief_series();
        assert_eq!(s.factor_orders(), [4, 3]);
        let (lo, hi) = s.factors().next().unwrap();
        let r = pi_step_in_group(&a4, &h, lo, hi, 1);
        assert_eq!((r.intersection_order, r.normalizer_index, r.prime_set.clone(), r.passed), (2, 3, vec![2], false));
        assert!(!st.partial_pi_via_quotients(&h).unwrap());
        assert!(!satisfies_partial_cap(&a4, &h).unwrap().0);
    }

    #[test]
    fn sym3_transposition_passes() {
        let s3 = symmetric(3).unwrap();
        let h = s3.subgroup_generated(&[perm(3, &[&[1, 2]])]).unwrap();
        let (ok, w) = satisfies_partial_pi(&s3, &h).unwrap();
        assert!(ok);
        let w = w.unwrap();
        assert_eq!(w.series.factor_orders(), [3, 2]);
        assert_eq!(w.per_factor[0].intersection_order, 1);
        assert_eq!(w.per_factor[1].intersection_order, 2);
        assert_eq!(w.per_factor[1].normalizer_index, 1);
    }

    #[test]
    fn trivial_and_whole_pass() {
        for g in [symmetric(4).unwrap(), alternating(5).unwrap(), quaternion(8).unwrap()] {
            assert!(satisfies_partial_pi(&g, &g.trivial_subgroup()).unwrap().0);
            assert!(satisfies_partial_pi(&g, &g.whole()).unwrap().0);
            assert!(satisfies_partial_cap(&g, &g.whole()).unwrap().0);
        }
    }

    #[test]
    fn normal_subgroups_pass() {
        let g =
            linear(3, 2, &[FpMatrix::square(3, &[1, 1, 0, 1]).unwrap(), FpMatrix::square(3, &[1, 0, 1, 1]).unwrap()])
                .unwrap();
        let st = Structure::new(&g);
        let z = st.sylow(2);
        let zc = g.center();
        assert!(zc.is_subgroup_of(&z));
        assert!(st.partial_pi(&zc).unwrap().0);
        for n in st.normal_lattice().normals() {
            assert!(st.partial_pi(n).unwrap().0);
            assert!(st.partial_cap(n).unwrap().0);
        }
    }

    #[test]
    fn complements() {
        let a4 = alternating(4).unwrap();
        let st = Structure::new(&a4);
        let v4 = st.o_p(2);
        let k = st.complement(&v4).unwrap().unwrap();
        assert_eq!(k.order(), 3);
        let c4 = cyclic(4).unwrap();
        let c2 = c4.subgroup_from_indices(&[c4.pow(c4.generator_indices()[0], 2)]);
        assert!(!is_complemented(&c4, &c2).unwrap().0);
        assert_eq!(is_complemented(&c4, &c4.trivial_subgroup()).unwrap().1.unwrap(), c4.whole());
    }

    #[test]
    fn series_through() {
        let s3 = symmetric(3).unwrap();
        let a3 = s3.derived_subgroup();
        let (ok, w) = pi_series_through(&s3, &a3, &a3, 3).unwrap();
        assert!(ok);
        assert_eq!(w.unwrap().series.factor_orders(), [3, 2]);
        let a4 = alternating(4).unwrap();
        let st = Structure::new(&a4);
        let v4 = st.o_p(2);
        let h = a4.subgroup_generated(&[perm(4, &[&[1, 2], &[3, 4]])]).unwrap();
        assert!(matches!(st.pi_series_through(&h, &v4, 2), Err(Error::HypothesisViolated(_))));
        assert!(st.pi_series_through(&a4.trivial_subgroup(), &v4, 2).unwrap().0);
        assert!(matches!(st.pi_series_through(&v4, &a4.trivial_subgroup(), 2), Err(Error::HypothesisViolated(_))));
    }
}
