//! Factor groups realized as the regular permutation action on right
//! cosets.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::group::{Group, Subgroup};
use crate::perm::Permutation;

/// `G -> G/N`. Cosets are numbered by their least member, which is also
/// the representative returned by [`QuotientMap::pull`].
#[derive(Clone, Debug)]
pub struct QuotientMap {
    kernel: Subgroup,
    target: Group,
    coset_of: Vec<usize>,
    reps: Vec<usize>,
    push: Vec<usize>,
    pull: Vec<usize>,
}

/// `G/N`, or [`Error::NotNormal`].
pub fn quotient(g: &Group, n: &Subgroup) -> Result<QuotientMap> {
    QuotientMap::new(g, n)
}

impl QuotientMap {
    pub fn new(g: &Group, n: &Subgroup) -> Result<QuotientMap> {
        if !g.is_normal(n) {
            return Err(Error::NotNormal);
        }
        let order = g.order();
        let mut coset_of = alloc::vec![usize::MAX; order];
        let mut reps = Vec::new();
        for x in 0..order {
            if coset_of[x] != usize::MAX {
                continue;
            }
            let c = reps.len();
            reps.push(x);
            for k in n.elements() {
                coset_of[g.mul(k, x)] = c;
            }
        }
        let index = reps.len();
        let action = |x: usize| -> Permutation {
            let images = reps.iter().map(|&r| coset_of[g.mul(r, x)] as u32).collect();
            Permutation::from_images(images).expect("coset action is a permutation")
        };
        let gens: Vec<Permutation> = g.generator_indices().iter().map(|&x| action(x)).collect();
        let target = Group::with_caps(index, &gens, g.caps())?;
        let push: Vec<usize> =
            (0..order).map(|x| target.index_of(&action(x)).expect("image lies in the quotient")).collect();
        let pull: Vec<usize> = (0..target.order()).map(|t| reps[target.element(t).apply(0)]).collect();
        Ok(QuotientMap { kernel: n.clone(), target, coset_of, reps, push, pull })
    }

    pub fn kernel(&self) -> &Subgroup {
        &self.kernel
    }

    pub fn target(&self) -> &Group {
        &self.target
    }

    pub fn index(&self) -> usize {
        self.reps.len()
    }

    /// Image of a source element index.
    pub fn push(&self, x: usize) -> usize {
        self.push[x]
    }

    /// Least preimage of a target element index.
    pub fn pull(&self, t: usize) -> usize {
        self.pull[t]
    }

    pub fn coset_of(&self, x: usize) -> usize {
        self.coset_of[x]
    }

    /// `HN/N`.
    pub fn push_subgroup(&self, h: &Subgroup) -> Subgroup {
        let imgs: Vec<usize> = h.gens().iter().map(|&x| self.push[x]).collect();
        self.target.subgroup_from_indices(&imgs)
    }

    /// Full preimage of a subgroup of the target.
    pub fn pull_subgroup(&self, source: &Group, t: &Subgroup) -> Subgroup {
        let mut bits = fixedbitset::FixedBitSet::with_capacity(source.order());
        for x in 0..source.order() {
            if t.contains(self.push[x]) {
                bits.insert(x);
            }
        }
        let mut seed: Vec<usize> = self.kernel.gens().to_vec();
        seed.extend(t.gens().iter().map(|&y| self.pull[y]));
        source.subgroup_from_bits_with(bits, &seed)
    }
}
