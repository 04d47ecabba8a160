//! Normal-subgroup lattices (built by minimal normal extensions) and full
//! subgroup lattices (built by cyclic extension over conjugacy-class
//! representatives).

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use fixedbitset::FixedBitSet;

use crate::arith;
use crate::error::{Error, Result};
use crate::group::{Group, Subgroup};

/// All normal subgroups of a group in canonical order, with the cover
/// relation (`M` covers `N` iff `N < M` with no normal subgroup strictly
/// between, i.e. `M/N` is a chief factor).
#[derive(Clone, Debug)]
pub struct NormalLattice {
    normals: Vec<Subgroup>,
    up: Vec<Vec<usize>>,
    down: Vec<Vec<usize>>,
    index: BTreeMap<FixedBitSet, usize>,
}

fn minimal_elements(cands: Vec<Subgroup>) -> Vec<Subgroup> {
    let mut out: Vec<Subgroup> = Vec::new();
    for c in &cands {
        if !cands.iter().any(|d| d.is_proper_subgroup_of(c)) && !out.contains(c) {
            out.push(c.clone());
        }
    }
    out
}

impl NormalLattice {
    pub fn new(g: &Group) -> NormalLattice {
        // Normal closures of the conjugacy classes; every normal overgroup
        // of N contains N·⟨x^G⟩ for some x outside N.
        let class_closures: Vec<Subgroup> = {
            let mut v: Vec<Subgroup> = Vec::new();
            for class in g.conjugacy_classes().into_iter().skip(1) {
                let c = g.normal_closure(&[class[0]]);
                if !v.contains(&c) {
                    v.push(c);
                }
            }
            v
        };
        let mut found: BTreeMap<FixedBitSet, usize> = BTreeMap::new();
        let mut list: Vec<Subgroup> = alloc::vec![g.trivial_subgroup()];
        let mut raw_up: Vec<Vec<usize>> = alloc::vec![Vec::new()];
        found.insert(list[0].members().clone(), 0);
        let mut head = 0;
        while head < list.len() {
            let n = list[head].clone();
            let cands: Vec<Subgroup> =
                class_closures.iter().filter(|c| !c.is_subgroup_of(&n)).map(|c| g.join(&n, c)).collect();
            let mut ups = Vec::new();
            for m in minimal_elements(cands) {
                let id = match found.get(m.members()) {
                    Some(&id) => id,
                    None => {
                        let id = list.len();
                        found.insert(m.members().clone(), id);
                        list.push(m);
                        raw_up.push(Vec::new());
                        id
                    }
                };
                ups.push(id);
            }
            raw_up[head] = ups;
            head += 1;
        }

        // Re-index canonically.
        let mut perm: Vec<usize> = (0..list.len()).collect();
        perm.sort_by(|&a, &b| list[a].canonical_cmp(&list[b]));
        let mut rank = alloc::vec![0usize; list.len()];
        for (pos, &old) in perm.iter().enumerate() {
            rank[old] = pos;
        }
        let normals: Vec<Subgroup> = perm.iter().map(|&old| list[old].clone()).collect();
        let mut up: Vec<Vec<usize>> = alloc::vec![Vec::new(); normals.len()];
        let mut down: Vec<Vec<usize>> = alloc::vec![Vec::new(); normals.len()];
        for (old, ups) in raw_up.iter().enumerate() {
            for &o in ups {
                up[rank[old]].push(rank[o]);
                down[rank[o]].push(rank[old]);
            }
        }
        for v in up.iter_mut().chain(down.iter_mut()) {
            v.sort_unstable();
        }
        let index = normals.iter().enumerate().map(|(i, n)| (n.members().clone(), i)).collect();
        NormalLattice { normals, up, down, index }
    }

    pub fn len(&self) -> usize {
        self.normals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.normals.is_empty()
    }

    pub fn normals(&self) -> &[Subgroup] {
        &self.normals
    }

    pub fn get(&self, i: usize) -> &Subgroup {
        &self.normals[i]
    }

    pub fn bottom(&self) -> usize {
        0
    }

    pub fn top(&self) -> usize {
        self.normals.len() - 1
    }

    pub fn index_of(&self, n: &Subgroup) -> Option<usize> {
        self.index.get(n.members()).copied()
    }

    /// Normal subgroups covering `i` (chief factors starting at `i`).
    pub fn covers(&self, i: usize) -> &[usize] {
        &self.up[i]
    }

    /// Normal subgroups covered by `i`.
    pub fn covered(&self, i: usize) -> &[usize] {
        &self.down[i]
    }

    /// Is `normals[hi] / normals[lo]` a chief factor?
    pub fn is_cover(&self, lo: usize, hi: usize) -> bool {
        self.up[lo].contains(&hi)
    }

    /// Minimal normal subgroups.
    pub fn minimal(&self) -> &[usize] {
        &self.up[0]
    }

    /// Largest normal subgroup satisfying a predicate closed under
    /// products of normal subgroups.
    pub fn largest(&self, pred: impl Fn(&Subgroup) -> bool) -> usize {
        (0..self.len()).rev().find(|&i| pred(&self.normals[i])).unwrap_or(0)
    }

    /// Largest normal `M ⊇ normals[base]` whose factor order `|M|/|base|`
    /// satisfies `pred`.
    pub fn largest_over(&self, base: usize, pred: impl Fn(u64) -> bool) -> usize {
        let b = &self.normals[base];
        (0..self.len())
            .rev()
            .find(|&i| {
                let m = &self.normals[i];
                b.is_subgroup_of(m) && pred((m.order() / b.order()) as u64)
            })
            .unwrap_or(base)
    }
}

/// Every subgroup of a group (or of a subgroup `S` of it), canonically
/// ordered, with conjugacy classes under `S`, normality in `S`, and the
/// maximal-subgroup relation.
#[derive(Clone, Debug)]
pub struct SubgroupLattice {
    all: Vec<Subgroup>,
    normal: Vec<bool>,
    class: Vec<usize>,
    maximal: Vec<Vec<usize>>,
    index: BTreeMap<FixedBitSet, usize>,
}

impl SubgroupLattice {
    pub fn new(g: &Group) -> Result<SubgroupLattice> {
        SubgroupLattice::within(g, &g.whole())
    }

    /// Subgroups of `s`, with conjugation and normality taken in `s`.
    pub fn within(g: &Group, s: &Subgroup) -> Result<SubgroupLattice> {
        let cap = g.caps().lattice;
        if s.order() > cap {
            return Err(Error::LatticeCapExceeded { cap, order: s.order() });
        }
        // Cyclic subgroups of prime-power order.
        let mut cyclic: Vec<Subgroup> = Vec::new();
        {
            let mut seen: BTreeMap<FixedBitSet, ()> = BTreeMap::new();
            for x in s.elements() {
                let o = g.element_order(x) as u64;
                if o > 1 && arith::prime_divisors(o).len() == 1 {
                    let c = g.subgroup_from_indices(&[x]);
                    if seen.insert(c.members().clone(), ()).is_none() {
                        cyclic.push(c);
                    }
                }
            }
        }

        let mut found: BTreeMap<FixedBitSet, usize> = BTreeMap::new();
        let mut list: Vec<Subgroup> = Vec::new();
        let mut class: Vec<usize> = Vec::new();
        let mut reps: Vec<usize> = Vec::new();
        let add_class = |h: Subgroup,
                         found: &mut BTreeMap<FixedBitSet, usize>,
                         list: &mut Vec<Subgroup>,
                         class: &mut Vec<usize>,
                         reps: &mut Vec<usize>| {
            if found.contains_key(h.members()) {
                return;
            }
            let cid = reps.len();
            reps.push(list.len());
            for c in g.conjugates_under(&h, s) {
                found.insert(c.members().clone(), list.len());
                list.push(c);
                class.push(cid);
            }
        };
        add_class(g.trivial_subgroup(), &mut found, &mut list, &mut class, &mut reps);
        // Extend class representatives in order of increasing size.
        let mut done = 0;
        loop {
            let next = (0..reps.len()).filter(|&c| c >= done).min_by_key(|&c| (list[reps[c]].order(), c));
            let Some(c) = next else { break };
            // Keep representatives processed in order: swap into position.
            reps.swap(done, c);
            let rep = list[reps[done]].clone();
            done += 1;
            for z in &cyclic {
                if z.is_subgroup_of(&rep) {
                    continue;
                }
                let h = g.join(&rep, z);
                add_class(h, &mut found, &mut list, &mut class, &mut reps);
            }
        }

        // Canonical order.
        let mut perm: Vec<usize> = (0..list.len()).collect();
        perm.sort_by(|&a, &b| list[a].canonical_cmp(&list[b]));
        let all: Vec<Subgroup> = perm.iter().map(|&o| list[o].clone()).collect();
        // Class ids renumbered by first appearance.
        let mut renum: BTreeMap<usize, usize> = BTreeMap::new();
        let class: Vec<usize> = perm
            .iter()
            .map(|&o| {
                let n = renum.len();
                *renum.entry(class[o]).or_insert(n)
            })
            .collect();
        let normal: Vec<bool> = all.iter().map(|h| g.is_normalized_by(h, s)).collect();
        let index: BTreeMap<FixedBitSet, usize> =
            all.iter().enumerate().map(|(i, h)| (h.members().clone(), i)).collect();

        let mut maximal: Vec<Vec<usize>> = alloc::vec![Vec::new(); all.len()];
        for j in 0..all.len() {
            let mut maxes: Vec<usize> = Vec::new();
            for i in (0..j).rev() {
                if all[i].order() < all[j].order()
                    && all[i].is_subgroup_of(&all[j])
                    && !maxes.iter().any(|&m| all[i].is_subgroup_of(&all[m]))
                {
                    maxes.push(i);
                }
            }
            maxes.sort_unstable();
            maximal[j] = maxes;
        }
        Ok(SubgroupLattice { all, normal, class, maximal, index })
    }

    pub fn len(&self) -> usize {
        self.all.len()
    }

    pub fn is_empty(&self) -> bool {
        self.all.is_empty()
    }

    pub fn all(&self) -> &[Subgroup] {
        &self.all
    }

    pub fn get(&self, i: usize) -> &Subgroup {
        &self.all[i]
    }

    pub fn top(&self) -> usize {
        self.all.len() - 1
    }

    pub fn is_normal(&self, i: usize) -> bool {
        self.normal[i]
    }

    pub fn class_of(&self, i: usize) -> usize {
        self.class[i]
    }

    pub fn class_count(&self) -> usize {
        self.class.iter().copied().max().map_or(0, |m| m + 1)
    }

    /// Maximal subgroups of `all[i]`.
    pub fn maximal_subgroups(&self, i: usize) -> &[usize] {
        &self.maximal[i]
    }

    /// Maximal overgroups of `all[i]`.
    pub fn maximal_overgroups(&self, i: usize) -> Vec<usize> {
        (0..self.len()).filter(|&j| self.maximal[j].contains(&i)).collect()
    }

    pub fn index_of(&self, h: &Subgroup) -> Option<usize> {
        self.index.get(h.members()).copied()
    }

    pub fn of_order(&self, n: usize) -> impl Iterator<Item = &Subgroup> + '_ {
        self.all.iter().filter(move |h| h.order() == n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::*;

    fn brute_force_count(g: &Group) -> usize {
        // Subgroups generated by at most two elements cover every group
        // tested here.
        let mut seen: BTreeMap<FixedBitSet, ()> = BTreeMap::new();
        for a in 0..g.order() {
            for b in a..g.order() {
                seen.insert(g.closure_bits(&[a, b]), ());
            }
        }
        seen.len()
    }

    #[test]
    fn subgroup_counts() {
        let v4 = elementary_abelian(2, 2).unwrap();
        assert_eq!(SubgroupLattice::new(&v4).unwrap().len(), 5);
        let s3 = symmetric(3).unwrap();
        assert_eq!(SubgroupLattice::new(&s3).unwrap().len(), 6);
        assert_eq!(SubgroupLattice::new(&cyclic(1).unwrap()).unwrap().len(), 1);
        let s4 = symmetric(4).unwrap();
        let l = SubgroupLattice::new(&s4).unwrap();
        assert_eq!(l.len(), 30);
        assert_eq!(l.class_count(), 11);
        assert_eq!(l.len(), brute_force_count(&s4));
        let a5 = alternating(5).unwrap();
        assert_eq!(SubgroupLattice::new(&a5).unwrap().len(), 59);
        let q8 = quaternion(8).unwrap();
        assert_eq!(SubgroupLattice::new(&q8).unwrap().len(), 6);
    }

    #[test]
    fn lattice_cap() {
        let s6 = symmetric(6).unwrap();
        assert!(matches!(SubgroupLattice::new(&s6), Err(Error::LatticeCapExceeded { .. })));
    }

    #[test]
    fn normal_lattices() {
        let s4 = symmetric(4).unwrap();
        let n = NormalLattice::new(&s4);
        let orders: Vec<usize> = n.normals().iter().map(|h| h.order()).collect();
        assert_eq!(orders, [1, 4, 12, 24]);
        assert_eq!(n.covers(0), &[1]);
        let v = elementary_abelian(2, 2).unwrap();
        let n = NormalLattice::new(&v);
        assert_eq!(n.len(), 5);
        assert_eq!(n.minimal().len(), 3);
        assert_eq!(n.covered(n.top()).len(), 3);
        let l = SubgroupLattice::new(&s4).unwrap();
        let flagged = (0..l.len()).filter(|&i| l.is_normal(i)).count();
        assert_eq!(flagged, 4);
    }

    #[test]
    fn maximal_subgroups() {
        let q8 = quaternion(8).unwrap();
        let l = SubgroupLattice::new(&q8).unwrap();
        let maxes = l.maximal_subgroups(l.top());
        assert_eq!(maxes.len(), 3);
        assert!(maxes.iter().all(|&m| l.get(m).order() == 4));
    }

    #[test]
    fn within_subgroup() {
        let s4 = symmetric(4).unwrap();
        let a4 = s4.derived_subgroup();
        let l = SubgroupLattice::within(&s4, &a4).unwrap();
        assert_eq!(l.len(), 10);
        assert_eq!(*l.get(l.top()), a4);
    }
}
