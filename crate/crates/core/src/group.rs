//! Concrete permutation groups with fully enumerated, canonically sorted
//! element sets, and subgroups represented as member bitsets over the
//! ambient element indices.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::hash::{Hash, Hasher};

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Groups up to this order get a full Cayley table.
const TABLE_CAP: usize = 2048;

/// Enumeration limits shared by every derived computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Caps {
    pub closure: usize,
    pub lattice: usize,
    pub series: usize,
    pub module_dim: usize,
    pub iso: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps { closure: 5000, lattice: 512, series: 100_000, module_dim: 8, iso: 512 }
    }
}

/// A finite permutation group. Element `0` is always the identity, since
/// the identity image sequence is lexicographically least.
#[derive(Clone)]
pub struct Group {
    degree: usize,
    name: Option<String>,
    caps: Caps,
    generators: Vec<Permutation>,
    gen_idx: Vec<usize>,
    elements: Vec<Permutation>,
    table: Option<Vec<u32>>,
    inv: Vec<u32>,
    orders: Vec<u32>,
}

impl core::fmt::Debug for Group {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("Group")
            .field("name", &self.name)
            .field("degree", &self.degree)
            .field("order", &self.order())
            .field("generators", &self.generators)
            .finish()
    }
}

/// Closure of `gens` under the default caps.
pub fn group_from_generators(degree: usize, gens: &[Permutation]) -> Result<Group> {
    Group::from_generators(degree, gens)
}

impl Group {
    pub fn from_generators(degree: usize, gens: &[Permutation]) -> Result<Group> {
        Group::with_caps(degree, gens, Caps::default())
    }

    pub fn with_caps(degree: usize, gens: &[Permutation], caps: Caps) -> Result<Group> {
        for g in gens {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch { expected: degree, found: g.degree() });
            }
        }
        let generators: Vec<Permutation> = {
            let mut seen = BTreeSet::new();
            gens.iter().filter(|g| !g.is_identity() && seen.insert((*g).clone())).cloned().collect()
        };

        // Breadth-first closure, remembering how each element was reached so
        // the Cayley table can be filled one lookup per entry.
        let id = Permutation::identity(degree);
        let mut found: BTreeMap<Permutation, usize> = BTreeMap::new();
        let mut order_found: Vec<Permutation> = Vec::new();
        let mut parent: Vec<(usize, usize)> = Vec::new();
        found.insert(id.clone(), 0);
        order_found.push(id);
        parent.push((usize::MAX, usize::MAX));
        let mut head = 0;
        while head < order_found.len() {
            for (gi, g) in generators.iter().enumerate() {
                let y = &order_found[head] * g;
                if !found.contains_key(&y) {
                    if order_found.len() >= caps.closure {
                        return Err(Error::ClosureCapExceeded { cap: caps.closure });
                    }
                    found.insert(y.clone(), order_found.len());
                    order_found.push(y);
                    parent.push((head, gi));
                }
            }
            head += 1;
        }

        let n = order_found.len();
        // BTreeMap iteration is sorted: rank = canonical index.
        let mut rank = alloc::vec![0usize; n];
        for (pos, (_, &bfs)) in found.iter().enumerate() {
            rank[bfs] = pos;
        }
        let elements: Vec<Permutation> = found.into_keys().collect();

        let mut group = Group {
            degree,
            name: None,
            caps,
            gen_idx: Vec::new(),
            generators,
            elements,
            table: None,
            inv: Vec::new(),
            orders: Vec::new(),
        };
        group.gen_idx = group.generators.iter().map(|g| group.index_of(g).unwrap()).collect();

        if n <= TABLE_CAP {
            // right[g][i] = index of e_i * gen_g
            let right: Vec<Vec<u32>> = group
                .generators
                .iter()
                .map(|g| group.elements.iter().map(|e| group.index_of(&(e * g)).unwrap() as u32).collect())
                .collect();
            let mut table = alloc::vec![0u32; n * n];
            for i in 0..n {
                table[i * n] = i as u32;
            }
            // Fill columns in BFS order: e_j = e_k * g  =>  e_i e_j = (e_i e_k) g.
            for (bfs, &(par, gi)) in parent.iter().enumerate().skip(1) {
                let j = rank[bfs];
                let k = rank[par];
                for i in 0..n {
                    let ik = table[i * n + k] as usize;
                    table[i * n + j] = right[gi][ik];
                }
            }
            group.table = Some(table);
        }
        group.inv = (0..n).map(|i| group.index_of(&group.elements[i].inverse()).unwrap() as u32).collect();
        group.orders = group.elements.iter().map(|e| e.order() as u32).collect();
        Ok(group)
    }

    pub fn trivial(degree: usize) -> Group {
        Group::from_generators(degree, &[]).expect("trivial group")
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn caps(&self) -> Caps {
        self.caps
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// Generator positions in the element list.
    pub fn generator_indices(&self) -> &[usize] {
        &self.gen_idx
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        if p.degree() != self.degree {
            return None;
        }
        self.elements.binary_search(p).ok()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.index_of(p).is_some()
    }

    pub const IDENTITY: usize = 0;

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        match &self.table {
            Some(t) => t[a * self.elements.len() + b] as usize,
            None => self.index_of(&(&self.elements[a] * &self.elements[b])).unwrap(),
        }
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    /// `g^-1 x g`.
    #[inline]
    pub fn conj(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(self.inv(g), x), g)
    }

    /// `a^-1 b^-1 a b`.
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    pub fn pow(&self, x: usize, mut k: u64) -> usize {
        let mut acc = Self::IDENTITY;
        let mut base = x;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    pub fn element_order(&self, x: usize) -> usize {
        self.orders[x] as usize
    }

    pub fn exponent(&self) -> usize {
        self.orders.iter().fold(1usize, |acc, &o| acc / crate::arith::gcd(acc as u64, o as u64) as usize * o as usize)
    }

    pub fn is_abelian(&self) -> bool {
        let g = &self.gen_idx;
        g.iter().all(|&a| g.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn is_cyclic(&self) -> bool {
        self.orders.iter().any(|&o| o as usize == self.order())
    }

    fn empty_bits(&self) -> FixedBitSet {
        FixedBitSet::with_capacity(self.order())
    }

    /// Members of the subgroup generated by the given element indices.
    pub fn closure_bits(&self, gens: &[usize]) -> FixedBitSet {
        let mut bits = self.empty_bits();
        bits.insert(Self::IDENTITY);
        let mut list = alloc::vec![Self::IDENTITY];
        let mut head = 0;
        while head < list.len() {
            let x = list[head];
            for &g in gens {
                let y = self.mul(x, g);
                if !bits.contains(y) {
                    bits.insert(y);
                    list.push(y);
                }
            }
            head += 1;
        }
        bits
    }

    /// Extends a known subgroup by more generators.
    fn extend_bits(&self, base: &FixedBitSet, base_gens: &[usize], extra: &[usize]) -> FixedBitSet {
        let mut bits = base.clone();
        let mut all: Vec<usize> = base_gens.to_vec();
        all.extend_from_slice(extra);
        let mut list: Vec<usize> = base.ones().collect();
        let mut head = 0;
        while head < list.len() {
            let x = list[head];
            for &g in &all {
                let y = self.mul(x, g);
                if !bits.contains(y) {
                    bits.insert(y);
                    list.push(y);
                }
            }
            head += 1;
        }
        bits
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        let mut bits = self.empty_bits();
        bits.insert(Self::IDENTITY);
        Subgroup { members: bits, order: 1, gens: Vec::new() }
    }

    pub fn whole(&self) -> Subgroup {
        let mut bits = self.empty_bits();
        bits.insert_range(..);
        Subgroup { members: bits, order: self.order(), gens: self.gen_idx.clone() }
    }

    /// Smallest subgroup containing the given permutations.
    pub fn subgroup_generated(&self, gens: &[Permutation]) -> Result<Subgroup> {
        let idx = gens.iter().map(|g| self.index_of(g).ok_or(Error::ElementNotInGroup)).collect::<Result<Vec<_>>>()?;
        Ok(self.subgroup_from_indices(&idx))
    }

    pub fn subgroup_from_indices(&self, gens: &[usize]) -> Subgroup {
        let gens: Vec<usize> = gens.iter().copied().filter(|&g| g != Self::IDENTITY).collect();
        let members = self.closure_bits(&gens);
        let order = members.count_ones(..);
        Subgroup { members, order, gens }
    }

    /// Wraps a member set already known to be a subgroup, choosing a small
    /// generating set greedily in index order.
    pub fn subgroup_from_bits(&self, members: FixedBitSet) -> Subgroup {
        self.subgroup_from_bits_with(members, &[])
    }

    /// As [`Group::subgroup_from_bits`], seeding the generating set with
    /// elements of a known subgroup of `members`.
    pub fn subgroup_from_bits_with(&self, members: FixedBitSet, seed: &[usize]) -> Subgroup {
        let order = members.count_ones(..);
        let mut gens: Vec<usize> = seed.iter().copied().filter(|&g| g != Self::IDENTITY).collect();
        let mut cur = self.closure_bits(&gens);
        if cur.count_ones(..) < order {
            for x in members.ones() {
                if !cur.contains(x) {
                    cur = self.extend_bits(&cur, &gens, &[x]);
                    gens.push(x);
                    if cur.count_ones(..) == order {
                        break;
                    }
                }
            }
        }
        Subgroup { members, order, gens }
    }

    /// Checks that a member set is closed under the group law.
    pub fn is_subgroup_bits(&self, members: &FixedBitSet) -> bool {
        if !members.contains(Self::IDENTITY) {
            return false;
        }
        let elems: Vec<usize> = members.ones().collect();
        elems.iter().all(|&a| elems.iter().all(|&b| members.contains(self.mul(a, b))))
    }

    /// `⟨A, B⟩`.
    pub fn join(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        if b.members.is_subset(&a.members) {
            return a.clone();
        }
        if a.members.is_subset(&b.members) {
            return b.clone();
        }
        let extra: Vec<usize> = b.gens.iter().copied().filter(|&g| !a.contains(g)).collect();
        let members = self.extend_bits(&a.members, &a.gens, &extra);
        let order = members.count_ones(..);
        let mut gens = a.gens.clone();
        gens.extend(extra);
        Subgroup { members, order, gens }
    }

    /// Join with one more element.
    pub fn join_element(&self, a: &Subgroup, x: usize) -> Subgroup {
        if a.contains(x) {
            return a.clone();
        }
        let members = self.extend_bits(&a.members, &a.gens, &[x]);
        let order = members.count_ones(..);
        let mut gens = a.gens.clone();
        gens.push(x);
        Subgroup { members, order, gens }
    }

    pub fn intersection(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        let mut bits = a.members.clone();
        bits.intersect_with(&b.members);
        self.subgroup_from_bits(bits)
    }

    pub fn conjugate(&self, h: &Subgroup, g: usize) -> Subgroup {
        let mut bits = self.empty_bits();
        for x in h.members.ones() {
            bits.insert(self.conj(x, g));
        }
        let gens = h.gens.iter().map(|&x| self.conj(x, g)).collect();
        Subgroup { members: bits, order: h.order, gens }
    }

    /// Does `g` normalize `h`?
    pub fn normalizes(&self, g: usize, h: &Subgroup) -> bool {
        h.gens.iter().all(|&x| h.members.contains(self.conj(x, g)))
    }

    /// `N_G(H) = {g : H^g = H}`.
    pub fn normalizer(&self, h: &Subgroup) -> Subgroup {
        let mut bits = self.empty_bits();
        for g in 0..self.order() {
            if h.members.contains(g) || self.normalizes(g, h) {
                bits.insert(g);
            }
        }
        self.subgroup_from_bits_with(bits, &h.gens)
    }

    pub fn centralizer(&self, h: &Subgroup) -> Subgroup {
        let mut bits = self.empty_bits();
        for g in 0..self.order() {
            if h.gens.iter().all(|&x| self.mul(x, g) == self.mul(g, x)) {
                bits.insert(g);
            }
        }
        self.subgroup_from_bits(bits)
    }

    pub fn center(&self) -> Subgroup {
        self.centralizer(&self.whole())
    }

    pub fn is_normal(&self, h: &Subgroup) -> bool {
        self.gen_idx.iter().all(|&g| self.normalizes(g, h))
    }

    /// Is `h` normalized by every element of `by`?
    pub fn is_normalized_by(&self, h: &Subgroup, by: &Subgroup) -> bool {
        by.gens.iter().all(|&g| self.normalizes(g, h))
    }

    /// All conjugates of `h` under elements of `by`, in discovery order.
    pub fn conjugates_under(&self, h: &Subgroup, by: &Subgroup) -> Vec<Subgroup> {
        let mut seen: BTreeSet<FixedBitSet> = BTreeSet::new();
        seen.insert(h.members.clone());
        let mut out = alloc::vec![h.clone()];
        let mut head = 0;
        while head < out.len() {
            for &g in &by.gens {
                let c = self.conjugate(&out[head], g);
                if seen.insert(c.members.clone()) {
                    out.push(c);
                }
            }
            head += 1;
        }
        out
    }

    pub fn conjugates(&self, h: &Subgroup) -> Vec<Subgroup> {
        self.conjugates_under(h, &self.whole())
    }

    /// `Core_G(H)`: the intersection of all conjugates of `H`.
    pub fn core(&self, h: &Subgroup) -> Subgroup {
        let mut bits = h.members.clone();
        for c in self.conjugates(h) {
            bits.intersect_with(&c.members);
        }
        self.subgroup_from_bits(bits)
    }

    /// Smallest normal subgroup containing the given elements.
    pub fn normal_closure(&self, elems: &[usize]) -> Subgroup {
        let mut sub = self.subgroup_from_indices(elems);
        loop {
            let mut grew = false;
            let gens = sub.gens.clone();
            for &x in &gens {
                for &g in &self.gen_idx {
                    let y = self.conj(x, g);
                    if !sub.contains(y) {
                        sub = self.join_element(&sub, y);
                        grew = true;
                    }
                }
            }
            if !grew {
                return sub;
            }
        }
    }

    /// Derived subgroup `G'`.
    pub fn derived_subgroup(&self) -> Subgroup {
        let g = &self.gen_idx;
        let comms: Vec<usize> =
            g.iter().flat_map(|&a| g.iter().map(move |&b| (a, b))).map(|(a, b)| self.commutator(a, b)).collect();
        self.normal_closure(&comms)
    }

    /// `[A, B]` for subgroups normalized by each other's generators.
    pub fn commutator_subgroup(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        let comms: Vec<usize> = a
            .gens
            .iter()
            .flat_map(|&x| b.gens.iter().map(move |&y| (x, y)))
            .map(|(x, y)| self.commutator(x, y))
            .collect();
        // Normal closure inside ⟨A, B⟩.
        let ab = self.join(a, b);
        let mut sub = self.subgroup_from_indices(&comms);
        loop {
            let mut grew = false;
            for x in sub.gens.clone() {
                for &g in &ab.gens {
                    let y = self.conj(x, g);
                    if !sub.contains(y) {
                        sub = self.join_element(&sub, y);
                        grew = true;
                    }
                }
            }
            if !grew {
                return sub;
            }
        }
    }

    /// Conjugacy classes as sorted index lists, ordered by least member.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut seen = alloc::vec![false; n];
        let mut classes = Vec::new();
        for x in 0..n {
            if seen[x] {
                continue;
            }
            let mut class = alloc::vec![x];
            seen[x] = true;
            let mut queue = VecDeque::from([x]);
            while let Some(y) = queue.pop_front() {
                for &g in &self.gen_idx {
                    let z = self.conj(y, g);
                    if !seen[z] {
                        seen[z] = true;
                        class.push(z);
                        queue.push_back(z);
                    }
                }
            }
            class.sort_unstable();
            classes.push(class);
        }
        classes
    }

    /// The subgroup as a group in its own right (same degree).
    pub fn subgroup_as_group(&self, h: &Subgroup) -> Result<Group> {
        let gens: Vec<Permutation> = h.gens.iter().map(|&i| self.elements[i].clone()).collect();
        Group::with_caps(self.degree, &gens, self.caps)
    }

    /// Permutations of the members, in index order.
    pub fn permutations_of(&self, h: &Subgroup) -> Vec<Permutation> {
        h.members.ones().map(|i| self.elements[i].clone()).collect()
    }

    /// Histogram of element orders as sorted `(order, count)` pairs.
    pub fn order_histogram(&self) -> Vec<(usize, usize)> {
        let mut map: BTreeMap<usize, usize> = BTreeMap::new();
        for &o in &self.orders {
            *map.entry(o as usize).or_default() += 1;
        }
        map.into_iter().collect()
    }
}

/// A subgroup of some ambient [`Group`], stored as a bitset over the
/// ambient element indices plus a small generating set. Operations that
/// need the group law take the ambient group explicitly.
#[derive(Clone, Debug)]
pub struct Subgroup {
    members: FixedBitSet,
    order: usize,
    gens: Vec<usize>,
}

impl Subgroup {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn members(&self) -> &FixedBitSet {
        &self.members
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.contains(x)
    }

    pub fn elements(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.ones()
    }

    pub fn gens(&self) -> &[usize] {
        &self.gens
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn is_proper_subgroup_of(&self, other: &Subgroup) -> bool {
        self.order < other.order && self.is_subgroup_of(other)
    }

    /// Canonical lattice order: by order, then lexicographically on the
    /// sorted member indices.
    pub fn canonical_cmp(&self, other: &Subgroup) -> Ordering {
        self.order.cmp(&other.order).then_with(|| self.members.ones().cmp(other.members.ones()))
    }
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.members == other.members
    }
}

impl Eq for Subgroup {}

impl Hash for Subgroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.members.hash(state);
    }
}

impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Subgroup {
    fn cmp(&self, other: &Self) -> Ordering {
        self.canonical_cmp(other)
    }
}
