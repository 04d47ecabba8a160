//! Chief series as maximal chains in the normal-subgroup lattice, streamed
//! by depth-first search from the trivial subgroup.

use alloc::vec::Vec;

use crate::arith;
use crate::error::{Error, Result};
use crate::group::{Group, Subgroup};
use crate::lattice::NormalLattice;

/// `1 = G_0 < G_1 < ... < G_n = G` with every `G_i/G_{i-1}` a chief factor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChiefSeries {
    terms: Vec<Subgroup>,
    nodes: Vec<usize>,
}

impl ChiefSeries {
    /// Builds a series from normal-lattice indices.
    pub fn from_nodes(lat: &NormalLattice, nodes: Vec<usize>) -> ChiefSeries {
        let terms = nodes.iter().map(|&i| lat.get(i).clone()).collect();
        ChiefSeries { terms, nodes }
    }

    pub fn terms(&self) -> &[Subgroup] {
        &self.terms
    }

    /// Positions of the terms in the normal lattice they came from.
    pub fn nodes(&self) -> &[usize] {
        &self.nodes
    }

    /// Number of chief factors.
    pub fn length(&self) -> usize {
        self.terms.len() - 1
    }

    /// `(G_{i-1}, G_i)` for `i = 1..=n`.
    pub fn factors(&self) -> impl Iterator<Item = (&Subgroup, &Subgroup)> + '_ {
        self.terms.windows(2).map(|w| (&w[0], &w[1]))
    }

    pub fn factor_orders(&self) -> Vec<usize> {
        self.factors().map(|(a, b)| b.order() / a.order()).collect()
    }

    pub fn contains(&self, n: &Subgroup) -> bool {
        self.terms.contains(n)
    }
}

/// Streaming enumeration of chief series, optionally restricted to series
/// having a given normal subgroup as a term.
pub struct ChiefSeriesIter<'a> {
    lat: &'a NormalLattice,
    through: Option<usize>,
    stack: Vec<(usize, usize)>,
    emitted: usize,
    cap: usize,
    failed: bool,
}

impl<'a> ChiefSeriesIter<'a> {
    pub fn new(lat: &'a NormalLattice, through: Option<usize>, cap: usize) -> Self {
        ChiefSeriesIter { lat, through, stack: alloc::vec![(lat.bottom(), 0)], emitted: 0, cap, failed: false }
    }

    fn allowed(&self, cur: usize, next: usize) -> bool {
        match self.through {
            None => true,
            Some(n) => {
                let n = self.lat.get(n);
                n.is_subgroup_of(self.lat.get(cur)) || self.lat.get(next).is_subgroup_of(n)
            }
        }
    }
}

impl Iterator for ChiefSeriesIter<'_> {
    type Item = Result<ChiefSeries>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.failed {
            return None;
        }
        let top = self.lat.top();
        while let Some(&(node, cursor)) = self.stack.last() {
            if node == top {
                let nodes: Vec<usize> = self.stack.iter().map(|&(n, _)| n).collect();
                self.stack.pop();
                if self.emitted == self.cap {
                    self.failed = true;
                    return Some(Err(Error::SeriesCapExceeded { cap: self.cap }));
                }
                self.emitted += 1;
                return Some(Ok(ChiefSeries::from_nodes(self.lat, nodes)));
            }
            let covers = self.lat.covers(node);
            if cursor == covers.len() {
                self.stack.pop();
                continue;
            }
            self.stack.last_mut().unwrap().1 += 1;
            let next = covers[cursor];
            if self.allowed(node, next) {
                self.stack.push((next, 0));
            }
        }
        None
    }
}

/// Every chief series of `g`, in depth-first canonical order.
pub fn all_chief_series(g: &Group) -> Result<Vec<ChiefSeries>> {
    let lat = NormalLattice::new(g);
    ChiefSeriesIter::new(&lat, None, g.caps().series).collect()
}

/// Chief series having `n` as a term.
pub fn chief_series_through(g: &Group, n: &Subgroup) -> Result<Vec<ChiefSeries>> {
    let lat = NormalLattice::new(g);
    let idx = lat.index_of(n).ok_or(Error::NotNormal)?;
    ChiefSeriesIter::new(&lat, Some(idx), g.caps().series).collect()
}

/// A chief factor `above/below` with its classification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChiefFactor {
    pub below: Subgroup,
    pub above: Subgroup,
    pub order: usize,
    /// The prime `p` when the factor is a `p`-group.
    pub p_group: Option<u64>,
    /// `G` centralizes `above/below`.
    pub is_central: bool,
    /// `above ≤ Φ(G)`.
    pub is_frattini: bool,
}

/// Classifies `above/below`, checking chiefness against the normal lattice.
pub fn classify_factor_in(
    g: &Group,
    lat: &NormalLattice,
    frattini: &Subgroup,
    below: &Subgroup,
    above: &Subgroup,
) -> Result<ChiefFactor> {
    let lo = lat.index_of(below).ok_or(Error::NotNormal)?;
    let hi = lat.index_of(above).ok_or(Error::NotNormal)?;
    if !lat.is_cover(lo, hi) {
        return Err(Error::NotChief);
    }
    let order = above.order() / below.order();
    let primes = arith::prime_divisors(order as u64);
    let p_group = if primes.len() == 1 { Some(primes[0]) } else { None };
    let is_central =
        above.gens().iter().all(|&x| g.generator_indices().iter().all(|&y| below.contains(g.commutator(x, y))));
    Ok(ChiefFactor {
        below: below.clone(),
        above: above.clone(),
        order,
        p_group,
        is_central,
        is_frattini: above.is_subgroup_of(frattini),
    })
}

/// As [`classify_factor_in`], computing the lattices it needs.
pub fn classify_factor(g: &Group, below: &Subgroup, above: &Subgroup) -> Result<ChiefFactor> {
    let s = crate::structure::Structure::new(g);
    s.classify_factor(below, above)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::*;

    #[test]
    fn series_counts() {
        assert_eq!(all_chief_series(&symmetric(3).unwrap()).unwrap().len(), 1);
        assert_eq!(all_chief_series(&elementary_abelian(2, 2).unwrap()).unwrap().len(), 3);
        let a5 = alternating(5).unwrap();
        let s = all_chief_series(&a5).unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!(s[0].length(), 1);
        // C2^3: number of complete flags in F_2^3 is 7·3 = 21.
        assert_eq!(all_chief_series(&elementary_abelian(2, 3).unwrap()).unwrap().len(), 21);
    }

    #[test]
    fn series_cap() {
        let mut g = elementary_abelian(2, 3).unwrap();
        g = crate::group::Group::with_caps(
            g.degree(),
            g.generators(),
            crate::group::Caps { series: 5, ..Default::default() },
        )
        .unwrap();
        let r = all_chief_series(&g);
        assert_eq!(r.unwrap_err(), Error::SeriesCapExceeded { cap: 5 });
    }

    #[test]
    fn through() {
        let s4 = symmetric(4).unwrap();
        let v4 = {
            let a4 = s4.derived_subgroup();
            s4.commutator_subgroup(&a4, &a4)
        };
        let all = all_chief_series(&s4).unwrap();
        let thr = chief_series_through(&s4, &v4).unwrap();
        assert_eq!(all, thr);
        assert!(thr.iter().all(|s| s.contains(&v4)));
        assert_eq!(chief_series_through(&s4, &s4.trivial_subgroup()).unwrap(), all);
        let v = elementary_abelian(2, 2).unwrap();
        let c2 = v.subgroup_from_indices(&[1]);
        assert_eq!(chief_series_through(&v, &c2).unwrap().len(), 1);
        let s3 = symmetric(3).unwrap();
        let t = s3.subgroup_from_indices(&[1]);
        assert_eq!(chief_series_through(&s3, &t).unwrap_err(), Error::NotNormal);
    }

    #[test]
    fn classification() {
        let s4 = symmetric(4).unwrap();
        let a4 = s4.derived_subgroup();
        let v4 = s4.commutator_subgroup(&a4, &a4);
        let f = classify_factor(&s4, &s4.trivial_subgroup(), &v4).unwrap();
        assert_eq!((f.order, f.p_group, f.is_central), (4, Some(2), false));
        assert_eq!(classify_factor(&s4, &s4.trivial_subgroup(), &a4).unwrap_err(), Error::NotChief);
        let s3 = symmetric(3).unwrap();
        let a3 = s3.derived_subgroup();
        let f = classify_factor(&s3, &a3, &s3.whole()).unwrap();
        assert_eq!((f.order, f.is_central), (2, true));
        let f = classify_factor(&s3, &s3.trivial_subgroup(), &a3).unwrap();
        assert!(!f.is_central);
        let c2 = cyclic(2).unwrap();
        let f = classify_factor(&c2, &c2.trivial_subgroup(), &c2.whole()).unwrap();
        assert!(f.is_central);
    }
}
