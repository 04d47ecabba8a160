//! Per-group evaluation context shared by all checks on one group, with
//! memoized partial Π and complementation verdicts.

use alloc::collections::BTreeMap;
use alloc::rc::Rc;
use alloc::vec::Vec;
use core::cell::RefCell;

use crate::arith;
use crate::embed::PiWitness;
use crate::error::Result;
use crate::group::{Group, Subgroup};
use crate::lattice::SubgroupLattice;
use crate::modrep::{section_as_module, FpModule};
use crate::structure::{frattini_of, is_quaternion_free_in, Structure};

/// Sylow data at one prime.
pub(crate) struct PrimeData {
    pub sylow: Subgroup,
    /// Subgroups of the Sylow subgroup.
    pub subgroups: SubgroupLattice,
    pub frattini: Subgroup,
    pub quaternion_free: bool,
}

impl PrimeData {
    pub fn of_order(&self, n: usize) -> impl Iterator<Item = &Subgroup> + '_ {
        self.subgroups.of_order(n)
    }
}

/// Result of checking a family of subgroups.
pub(crate) struct Sweep {
    pub checked: usize,
    pub failing: Vec<Subgroup>,
    pub first_witness: Option<(Subgroup, Rc<PiWitness>)>,
}

impl Sweep {
    pub fn all_pass(&self) -> bool {
        self.failing.is_empty()
    }
}

/// Evaluation context for one group.
pub struct Lab<'g> {
    g: &'g Group,
    st: Structure<'g>,
    primes: RefCell<BTreeMap<u64, Rc<PrimeData>>>,
    pi: RefCell<BTreeMap<Subgroup, Option<Rc<PiWitness>>>>,
    complemented: RefCell<BTreeMap<Subgroup, bool>>,
}

impl<'g> Lab<'g> {
    pub fn new(g: &'g Group) -> Self {
        Lab {
            g,
            st: Structure::new(g),
            primes: RefCell::new(BTreeMap::new()),
            pi: RefCell::new(BTreeMap::new()),
            complemented: RefCell::new(BTreeMap::new()),
        }
    }

    pub fn group(&self) -> &'g Group {
        self.g
    }

    pub fn structure(&self) -> &Structure<'g> {
        &self.st
    }

    pub(crate) fn prime(&self, p: u64) -> Result<Rc<PrimeData>> {
        if let Some(d) = self.primes.borrow().get(&p) {
            return Ok(d.clone());
        }
        let sylow = self.st.sylow(p);
        let subgroups = SubgroupLattice::within(self.g, &sylow)?;
        let quaternion_free = p != 2 || is_quaternion_free_in(self.g, &subgroups);
        let frattini = frattini_of(self.g, &sylow)?;
        let data = Rc::new(PrimeData { sylow, subgroups, frattini, quaternion_free });
        self.primes.borrow_mut().insert(p, data.clone());
        Ok(data)
    }

    /// Partial Π verdict for `h`, with a witness when it holds. Verdicts
    /// are shared across the conjugacy class of `h`: conjugating a passing
    /// series' data by `x` gives the same normal subgroups and indices.
    pub fn pi(&self, h: &Subgroup) -> Result<Option<Rc<PiWitness>>> {
        if let Some(v) = self.pi.borrow().get(h) {
            return Ok(v.clone());
        }
        let (_, w) = self.st.partial_pi(h)?;
        let w = w.map(Rc::new);
        let mut memo = self.pi.borrow_mut();
        for c in self.g.conjugates(h) {
            memo.insert(c, w.clone());
        }
        Ok(w)
    }

    pub fn satisfies_pi(&self, h: &Subgroup) -> Result<bool> {
        Ok(self.pi(h)?.is_some())
    }

    pub(crate) fn sweep<'a>(&self, subs: impl Iterator<Item = &'a Subgroup>) -> Result<Sweep> {
        let mut s = Sweep { checked: 0, failing: Vec::new(), first_witness: None };
        for h in subs {
            s.checked += 1;
            match self.pi(h)? {
                Some(w) => {
                    if s.first_witness.is_none() {
                        s.first_witness = Some((h.clone(), w));
                    }
                }
                None => s.failing.push(h.clone()),
            }
        }
        Ok(s)
    }

    pub fn is_complemented(&self, h: &Subgroup) -> Result<bool> {
        if let Some(&v) = self.complemented.borrow().get(h) {
            return Ok(v);
        }
        let v = self.st.complement(h)?.is_some();
        let mut memo = self.complemented.borrow_mut();
        for c in self.g.conjugates(h) {
            memo.insert(c, v);
        }
        Ok(v)
    }

    pub fn is_cyclic(&self, h: &Subgroup) -> bool {
        h.elements().any(|x| self.g.element_order(x) == h.order())
    }

    /// Cyclic subgroups of order 4 of the Sylow 2-subgroup.
    pub(crate) fn cyclic_fours<'a>(&self, data: &'a PrimeData) -> Vec<&'a Subgroup> {
        data.of_order(4).filter(|h| h.elements().any(|x| self.g.element_order(x) == 4)).collect()
    }

    /// A Hall p'-subgroup, if one exists.
    pub fn p_complement(&self, p: u64) -> Result<Option<Subgroup>> {
        let others: Vec<u64> = arith::prime_divisors(self.g.order() as u64).into_iter().filter(|&q| q != p).collect();
        match self.st.hall(&others) {
            Ok(h) => Ok(Some(h)),
            Err(crate::Error::NoHallSubgroup { .. }) => Ok(None),
            Err(e) => Err(e),
        }
    }

    /// `above/below` as an `F_p[H]`-module, or `None` when it is not an
    /// elementary abelian section normalized by `h`.
    pub fn module(&self, above: &Subgroup, below: &Subgroup, h: &Subgroup, p: u64) -> Result<Option<FpModule>> {
        match section_as_module(self.g, above, below, h, p) {
            Ok(m) => Ok(Some(m)),
            Err(crate::Error::NotElementaryAbelian | crate::Error::NotNormalized) => Ok(None),
            Err(e) => Err(e),
        }
    }

    /// `p`-rank, `None` when the group is not p-soluble.
    pub fn p_rank(&self, p: u64) -> Option<u32> {
        self.st.p_rank(p).ok()
    }
}

/// Decomposition data of a semisimple module.
pub(crate) struct ModuleShape {
    pub dim: usize,
    pub homogeneous: bool,
    pub constituent_dims: Vec<usize>,
    /// `dim End(V)` for each constituent `V`.
    pub end_dims: Vec<usize>,
}

impl ModuleShape {
    pub fn of(m: &FpModule) -> Result<ModuleShape> {
        let factors = m.composition_factors();
        let end_dims = factors.iter().map(|f| crate::modrep::module_hom_space_dim(f, f)).collect::<Result<Vec<_>>>()?;
        let homogeneous = match m.is_homogeneous() {
            Ok(b) => b,
            Err(crate::Error::NotSemisimpleContext) => false,
            Err(e) => return Err(e),
        };
        Ok(ModuleShape {
            dim: m.dim(),
            homogeneous,
            constituent_dims: factors.iter().map(FpModule::dim).collect(),
            end_dims,
        })
    }

    /// Homogeneous with every constituent of dimension `k`.
    pub fn homogeneous_of_dim(&self, k: usize) -> bool {
        self.homogeneous && self.constituent_dims.iter().all(|&d| d == k)
    }

    pub fn k(&self) -> usize {
        self.constituent_dims.first().copied().unwrap_or(0)
    }

    pub fn none_absolutely_irreducible(&self) -> bool {
        self.end_dims.iter().all(|&e| e > 1)
    }

    pub fn dims_string(&self) -> alloc::string::String {
        let parts: Vec<alloc::string::String> = self.constituent_dims.iter().map(|d| alloc::format!("{d}")).collect();
        parts.join(",")
    }
}
