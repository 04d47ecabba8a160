//! `F_p[H]`-modules given by one invertible matrix per acting generator
//! (row vectors, `v ↦ v·A`): elementary abelian sections as modules,
//! submodule enumeration by spinning, homomorphism spaces, isomorphism,
//! homogeneity and absolute irreducibility.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::arith;
use crate::error::{Error, Result};
use crate::fp::{self, FpMatrix, Subspace};
use crate::group::{Group, Subgroup};

/// Matrix groups larger than this are not enumerated when deciding
/// semisimplicity.
const MATRIX_GROUP_CAP: usize = 200_000;

/// Submodule enumeration stops beyond this many submodules.
const SUBMODULE_COUNT_CAP: usize = 200_000;

/// Largest hom-space dimension searched exhaustively.
const EXHAUSTIVE_HOM_DIM: usize = 6;

const SAMPLE_SEED: u64 = 0x5eed_f00d;
const SAMPLES: usize = 64;

/// Where a module came from: the section `above/below` of `G` with the
/// conjugation action of `acting`, and the group elements chosen as basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Provenance {
    pub above: Subgroup,
    pub below: Subgroup,
    pub acting: Subgroup,
    pub basis: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FpModule {
    p: u32,
    dim: usize,
    gens: Vec<FpMatrix>,
    provenance: Option<Provenance>,
}

/// All invariant subspaces of a module, canonically ordered by dimension
/// then echelon form.
#[derive(Clone, Debug)]
pub struct SubmoduleLattice {
    pub submodules: Vec<Subspace>,
    pub irreducible: Vec<bool>,
}

impl SubmoduleLattice {
    /// Nonzero submodules with no nonzero proper submodule.
    pub fn minimal(&self) -> impl Iterator<Item = &Subspace> + '_ {
        self.submodules.iter().zip(&self.irreducible).filter(|(_, &irr)| irr).map(|(s, _)| s)
    }

    pub fn len(&self) -> usize {
        self.submodules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.submodules.is_empty()
    }
}

impl FpModule {
    pub fn new(p: u32, dim: usize, gens: Vec<FpMatrix>) -> Result<FpModule> {
        if !arith::is_prime(p as u64) {
            return Err(Error::BadParameter(alloc::format!("{p} is not prime")));
        }
        for a in &gens {
            if a.p() != p || a.rows() != dim || a.cols() != dim {
                return Err(Error::BadParameter(alloc::format!("action matrix is not {dim}x{dim} over F_{p}")));
            }
            if dim > 0 && a.inverse().is_none() {
                return Err(Error::BadParameter("action matrix is singular".into()));
            }
        }
        Ok(FpModule { p, dim, gens, provenance: None })
    }

    /// Module with every generator acting trivially.
    pub fn trivial(p: u32, dim: usize, ngens: usize) -> FpModule {
        FpModule { p, dim, gens: alloc::vec![FpMatrix::identity(p, dim); ngens], provenance: None }
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn gens(&self) -> &[FpMatrix] {
        &self.gens
    }

    pub fn provenance(&self) -> Option<&Provenance> {
        self.provenance.as_ref()
    }

    /// `V ⊕ W`.
    pub fn direct_sum(&self, other: &FpModule) -> Result<FpModule> {
        self.same_action(other)?;
        let gens = self.gens.iter().zip(&other.gens).map(|(a, b)| a.direct_sum(b)).collect();
        Ok(FpModule { p: self.p, dim: self.dim + other.dim, gens, provenance: None })
    }

    /// The same module written in the basis given by the rows of `t`.
    pub fn change_basis(&self, t: &FpMatrix) -> Result<FpModule> {
        let ti = t.inverse().ok_or_else(|| Error::BadParameter("singular change of basis".into()))?;
        let gens = self.gens.iter().map(|a| t.mul(a).mul(&ti)).collect();
        Ok(FpModule { p: self.p, dim: self.dim, gens, provenance: None })
    }

    fn same_action(&self, other: &FpModule) -> Result<()> {
        if self.p != other.p || self.gens.len() != other.gens.len() {
            return Err(Error::ActingGroupMismatch);
        }
        Ok(())
    }

    fn check_cap(&self, cap: usize) -> Result<()> {
        if self.dim > cap {
            return Err(Error::ModuleCapExceeded { cap, dim: self.dim });
        }
        Ok(())
    }

    /// Smallest submodule containing the given vectors.
    pub fn spin(&self, vectors: Vec<Vec<u32>>) -> Subspace {
        let mut s = Subspace::span(self.p, self.dim, vectors);
        let mut queue: Vec<Vec<u32>> = s.basis().to_vec();
        while let Some(v) = queue.pop() {
            for a in &self.gens {
                let w = a.vec_mul(&v);
                if !s.contains(&w) {
                    s = s.sum(&Subspace::span(self.p, self.dim, alloc::vec![w.clone()]));
                    queue.push(w);
                }
            }
        }
        s
    }

    pub fn is_invariant(&self, s: &Subspace) -> bool {
        s.basis().iter().all(|v| self.gens.iter().all(|a| s.contains(&a.vec_mul(v))))
    }

    /// Cyclic submodules `⟨v⟩` for one `v` per one-dimensional subspace.
    fn cyclic_submodules(&self) -> Vec<Subspace> {
        let mut set: BTreeSet<Subspace> = BTreeSet::new();
        for v in fp::projective_points(self.p, self.dim) {
            set.insert(self.spin(alloc::vec![v]));
        }
        set.into_iter().collect()
    }

    /// Every invariant subspace, as sums of cyclic submodules.
    pub fn submodules(&self) -> Result<SubmoduleLattice> {
        self.submodules_with_cap(8)
    }

    pub fn submodules_with_cap(&self, dim_cap: usize) -> Result<SubmoduleLattice> {
        self.check_cap(dim_cap)?;
        let cyclic = self.cyclic_submodules();
        let mut found: BTreeSet<Subspace> = BTreeSet::new();
        let zero = Subspace::zero(self.p, self.dim);
        found.insert(zero.clone());
        let mut queue = alloc::vec![zero];
        while let Some(x) = queue.pop() {
            for c in &cyclic {
                if c.is_subspace_of(&x) {
                    continue;
                }
                let y = x.sum(c);
                if found.insert(y.clone()) {
                    if found.len() > SUBMODULE_COUNT_CAP {
                        return Err(Error::ModuleCapExceeded { cap: dim_cap, dim: self.dim });
                    }
                    queue.push(y);
                }
            }
        }
        let mut submodules: Vec<Subspace> = found.into_iter().collect();
        submodules.sort_by(|a, b| a.dim().cmp(&b.dim()).then_with(|| a.cmp(b)));
        let irreducible = submodules
            .iter()
            .map(|s| s.dim() > 0 && !submodules.iter().any(|t| t.dim() > 0 && t.dim() < s.dim() && t.is_subspace_of(s)))
            .collect();
        Ok(SubmoduleLattice { submodules, irreducible })
    }

    /// Nonzero and every nonzero vector spins to the whole space.
    pub fn is_irreducible(&self) -> bool {
        self.dim > 0 && fp::projective_points(self.p, self.dim).all(|v| self.spin(alloc::vec![v]).dim() == self.dim)
    }

    /// The module restricted to an invariant subspace, in its echelon basis.
    pub fn submodule(&self, s: &Subspace) -> FpModule {
        let gens = self
            .gens
            .iter()
            .map(|a| {
                let rows: Vec<Vec<u32>> = s.basis().iter().map(|v| s.coords(&a.vec_mul(v))).collect();
                FpMatrix::from_rows(self.p, &rows, s.dim())
            })
            .collect();
        FpModule { p: self.p, dim: s.dim(), gens, provenance: None }
    }

    /// `V/S` in the basis of standard vectors at non-pivot columns of `S`.
    pub fn quotient(&self, s: &Subspace) -> FpModule {
        let free: Vec<usize> = (0..self.dim).filter(|c| !s.pivots().contains(c)).collect();
        let gens = self
            .gens
            .iter()
            .map(|a| {
                let rows: Vec<Vec<u32>> = free
                    .iter()
                    .map(|&c| {
                        let mut e = alloc::vec![0u32; self.dim];
                        e[c] = 1;
                        let w = s.reduce(&a.vec_mul(&e));
                        free.iter().map(|&f| w[f]).collect()
                    })
                    .collect();
                FpMatrix::from_rows(self.p, &rows, free.len())
            })
            .collect();
        FpModule { p: self.p, dim: free.len(), gens, provenance: None }
    }

    /// Composition factors, bottom up.
    pub fn composition_factors(&self) -> Vec<FpModule> {
        let mut out = Vec::new();
        let mut m = self.clone();
        while m.dim > 0 {
            // A cyclic submodule of least dimension is irreducible.
            let s = fp::projective_points(m.p, m.dim).map(|v| m.spin(alloc::vec![v])).min_by_key(|s| s.dim()).unwrap();
            out.push(m.submodule(&s));
            m = m.quotient(&s);
        }
        out
    }

    /// Order of the matrix group generated by the action, if at most `cap`.
    pub fn image_order(&self, cap: usize) -> Option<usize> {
        let id = FpMatrix::identity(self.p, self.dim);
        let mut seen: BTreeSet<FpMatrix> = BTreeSet::new();
        seen.insert(id.clone());
        let mut queue = alloc::vec![id];
        while let Some(x) = queue.pop() {
            for a in &self.gens {
                let y = x.mul(a);
                if seen.insert(y.clone()) {
                    if seen.len() > cap {
                        return None;
                    }
                    queue.push(y);
                }
            }
        }
        Some(seen.len())
    }

    /// Is the matrix group generated by the action cyclic? `None` when its
    /// order exceeds `cap`.
    pub fn image_is_cyclic(&self, cap: usize) -> Option<bool> {
        let n = self.image_order(cap)?;
        let id = FpMatrix::identity(self.p, self.dim);
        let mut seen: BTreeSet<FpMatrix> = BTreeSet::new();
        seen.insert(id.clone());
        let mut queue = alloc::vec![id];
        while let Some(x) = queue.pop() {
            if x.order(n) == Some(n) {
                return Some(true);
            }
            for a in &self.gens {
                let y = x.mul(a);
                if seen.insert(y.clone()) {
                    queue.push(y);
                }
            }
        }
        Some(false)
    }

    /// The acting matrix group has order prime to `p`, so the module is
    /// semisimple.
    pub fn is_coprime_action(&self) -> bool {
        self.image_order(MATRIX_GROUP_CAP).is_some_and(|n| !(n as u64).is_multiple_of(self.p as u64))
    }

    /// A sum of pairwise isomorphic irreducible submodules.
    pub fn is_homogeneous(&self) -> Result<bool> {
        if !self.is_coprime_action() {
            return Err(Error::NotSemisimpleContext);
        }
        if self.dim == 0 {
            return Ok(true);
        }
        let lat = self.submodules_with_cap(usize::MAX)?;
        let mins: Vec<FpModule> = lat.minimal().map(|s| self.submodule(s)).collect();
        for m in &mins[1..] {
            if !are_isomorphic_modules(&mins[0], m)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The irreducible constituents of a semisimple module, one per
    /// minimal submodule in a direct decomposition.
    pub fn constituents(&self) -> Vec<FpModule> {
        self.composition_factors()
    }

    pub fn is_absolutely_irreducible(&self) -> Result<bool> {
        if !self.is_irreducible() {
            return Err(Error::NotIrreducible);
        }
        Ok(module_hom_space_dim(self, self)? == 1)
    }
}

/// Basis of `Hom_H(V, W)` as `dim V × dim W` matrices `X` with
/// `A_V(h) X = X A_W(h)`.
pub fn hom_space(v: &FpModule, w: &FpModule) -> Result<Vec<FpMatrix>> {
    v.same_action(w)?;
    let (m, n, p) = (v.dim, w.dim, v.p);
    let unknowns = m * n;
    if unknowns == 0 {
        return Ok(Vec::new());
    }
    // X[i][j] is unknown i*n + j.
    let mut eqs: Vec<Vec<u32>> = Vec::new();
    for (a, b) in v.gens.iter().zip(&w.gens) {
        for i in 0..m {
            for j in 0..n {
                let mut row = alloc::vec![0u32; unknowns];
                // (A X)[i][j] = Σ_k A[i][k] X[k][j]
                for k in 0..m {
                    let c = a.get(i, k);
                    row[k * n + j] = (row[k * n + j] + c) % p;
                }
                // − (X B)[i][j] = − Σ_k X[i][k] B[k][j]
                for k in 0..n {
                    let c = b.get(k, j);
                    row[i * n + k] = (row[i * n + k] + p - c) % p;
                }
                eqs.push(row);
            }
        }
    }
    let basis = fp::nullspace(p, eqs, unknowns);
    Ok(basis.into_iter().map(|x| FpMatrix::new(p, m, n, x).expect("shape")).collect())
}

pub fn module_hom_space_dim(v: &FpModule, w: &FpModule) -> Result<usize> {
    Ok(hom_space(v, w)?.len())
}

fn combination(basis: &[FpMatrix], coeffs: &[u32]) -> FpMatrix {
    let p = basis[0].p();
    let (r, c) = (basis[0].rows(), basis[0].cols());
    let mut data = alloc::vec![0u32; r * c];
    for (b, &k) in basis.iter().zip(coeffs) {
        if k == 0 {
            continue;
        }
        for (x, &y) in data.iter_mut().zip(b.entries()) {
            *x = ((*x as u64 + k as u64 * y as u64) % p as u64) as u32;
        }
    }
    FpMatrix::new(p, r, c, data).expect("shape")
}

/// Is there an invertible intertwiner `V → W`?
pub fn are_isomorphic_modules(v: &FpModule, w: &FpModule) -> Result<bool> {
    v.same_action(w)?;
    if v.dim != w.dim {
        return Ok(false);
    }
    if v.dim == 0 {
        return Ok(true);
    }
    let basis = hom_space(v, w)?;
    if basis.is_empty() {
        return Ok(false);
    }
    let exhaustive =
        |basis: &[FpMatrix]| fp::all_vectors(v.p, basis.len()).any(|c| combination(basis, &c).inverse().is_some());
    if basis.len() <= EXHAUSTIVE_HOM_DIM {
        return Ok(exhaustive(&basis));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SAMPLE_SEED);
    for _ in 0..SAMPLES {
        let c: Vec<u32> = (0..basis.len()).map(|_| rng.next_u32() % v.p).collect();
        if combination(&basis, &c).inverse().is_some() {
            return Ok(true);
        }
    }
    // Compare composition factors; for semisimple modules they decide.
    let fv = v.composition_factors();
    let fw = w.composition_factors();
    let mut unmatched: Vec<&FpModule> = fw.iter().collect();
    for f in &fv {
        let mut hit = None;
        for (i, u) in unmatched.iter().enumerate() {
            if u.dim == f.dim && module_hom_space_dim(f, u)? > 0 {
                hit = Some(i);
                break;
            }
        }
        match hit {
            Some(i) => {
                unmatched.remove(i);
            }
            None => return Ok(false),
        }
    }
    if v.is_coprime_action() {
        return Ok(true);
    }
    Ok(exhaustive(&basis))
}

/// The section `above/below` of `G` as an `F_p[H]`-module under
/// conjugation, in the basis of canonically least coset representatives.
pub fn section_as_module(g: &Group, above: &Subgroup, below: &Subgroup, h: &Subgroup, p: u64) -> Result<FpModule> {
    if !below.is_subgroup_of(above)
        || !g.is_normalized_by(below, above)
        || !g.is_normalized_by(above, h)
        || !g.is_normalized_by(below, h)
    {
        return Err(Error::NotNormalized);
    }
    let index = (above.order() / below.order()) as u64;
    let dim = arith::log_p(index, p).ok_or(Error::NotElementaryAbelian)? as usize;
    let elementary = above.elements().all(|x| below.contains(g.pow(x, p)))
        && above.gens().iter().all(|&x| above.gens().iter().all(|&y| below.contains(g.commutator(x, y))));
    if !elementary {
        return Err(Error::NotElementaryAbelian);
    }
    // Greedy least basis.
    let mut basis: Vec<usize> = Vec::new();
    let mut span = below.clone();
    for x in above.elements() {
        if span.order() == above.order() {
            break;
        }
        if !span.contains(x) {
            basis.push(x);
            span = g.join_element(&span, x);
        }
    }
    // Coordinates of every element of `above`.
    let pp = p as u32;
    let mut coords: BTreeMap<usize, Vec<u32>> = BTreeMap::new();
    for c in fp::all_vectors(pp, dim) {
        let mut e = Group::IDENTITY;
        for (k, &b) in basis.iter().enumerate() {
            e = g.mul(e, g.pow(b, c[k] as u64));
        }
        for t in below.elements() {
            coords.insert(g.mul(e, t), c.clone());
        }
    }
    let gens = h
        .gens()
        .iter()
        .map(|&y| {
            let rows: Vec<Vec<u32>> = basis.iter().map(|&b| coords[&g.conj(b, y)].clone()).collect();
            FpMatrix::from_rows(pp, &rows, dim)
        })
        .collect();
    Ok(FpModule {
        p: pp,
        dim,
        gens,
        provenance: Some(Provenance { above: above.clone(), below: below.clone(), acting: h.clone(), basis }),
    })
}

/// For a p'-group `H` acting faithfully and irreducibly on `V` of prime
/// dimension: returns whether "`H` cyclic" agrees with "`V` not absolutely
/// irreducible". `V`'s matrices are the images of `h.gens()`.
pub fn cyclicity_criterion_check(g: &Group, h: &Subgroup, v: &FpModule) -> Result<bool> {
    if v.gens.len() != h.gens().len() {
        return Err(Error::ActingGroupMismatch);
    }
    if (h.order() as u64).is_multiple_of(v.p as u64) {
        return Err(Error::HypothesisViolated("p divides |H|".into()));
    }
    if !arith::is_prime(v.dim as u64) {
        return Err(Error::HypothesisViolated("dimension is not prime".into()));
    }
    if v.image_order(h.order()) != Some(h.order()) {
        return Err(Error::HypothesisViolated("action is not faithful".into()));
    }
    if !v.is_irreducible() {
        return Err(Error::HypothesisViolated("module is not irreducible".into()));
    }
    let cyclic = h.elements().any(|x| g.element_order(x) == h.order());
    Ok(cyclic == !v.is_absolutely_irreducible()?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::*;
    use crate::structure::Structure;

    fn alt4_module() -> (Group, FpModule) {
        let a4 = alternating(4).unwrap();
        let st = Structure::new(&a4);
        let v4 = st.o_p(2);
        let c3 = st.sylow(3);
        let m = section_as_module(&a4, &v4, &a4.trivial_subgroup(), &c3, 2).unwrap();
        (a4, m)
    }

    fn sym3_f7() -> FpModule {
        FpModule::new(
            7,
            2,
            vec![FpMatrix::square(7, &[0, 1, 6, 6]).unwrap(), FpMatrix::square(7, &[6, 0, 1, 1]).unwrap()],
        )
        .unwrap()
    }

    #[test]
    fn alt4_section() {
        let (_, m) = alt4_module();
        assert_eq!(m.dim(), 2);
        assert_eq!(m.gens().len(), 1);
        assert_eq!(m.gens()[0].order(10), Some(3));
        assert!(m.is_irreducible());
        assert_eq!(m.submodules().unwrap().len(), 2);
        assert_eq!(module_hom_space_dim(&m, &m).unwrap(), 2);
        assert!(are_isomorphic_modules(&m, &m).unwrap());
        assert!(!m.is_absolutely_irreducible().unwrap());
        let triv = FpModule::trivial(2, 1, 1);
        assert_eq!(module_hom_space_dim(&triv, &m).unwrap(), 0);
    }

    #[test]
    fn degenerate_sections() {
        let a4 = alternating(4).unwrap();
        let st = Structure::new(&a4);
        let v4 = st.o_p(2);
        let m = section_as_module(&a4, &v4, &a4.trivial_subgroup(), &a4.trivial_subgroup(), 2).unwrap();
        assert!(m.gens().iter().all(|a| a.is_identity()));
        let z = section_as_module(&a4, &v4, &v4, &a4.whole(), 2).unwrap();
        assert_eq!(z.dim(), 0);
        assert_eq!(
            section_as_module(&a4, &a4.whole(), &a4.trivial_subgroup(), &a4.whole(), 2).unwrap_err(),
            Error::NotElementaryAbelian
        );
        let c2 = a4.subgroup_from_indices(&[v4.gens()[0]]);
        assert_eq!(
            section_as_module(&a4, &c2, &a4.trivial_subgroup(), &a4.whole(), 2).unwrap_err(),
            Error::NotNormalized
        );
    }

    #[test]
    fn identity_action_counts() {
        // Gaussian binomial totals over F_2.
        for (k, total) in [(1, 2), (2, 5), (3, 16), (4, 67)] {
            assert_eq!(FpModule::trivial(2, k, 1).submodules().unwrap().len(), total);
        }
        assert!(FpModule::trivial(2, 2, 1).is_homogeneous().unwrap());
        assert!(matches!(FpModule::trivial(2, 9, 1).submodules(), Err(Error::ModuleCapExceeded { .. })));
    }

    #[test]
    fn doubled_modules() {
        let (_, m) = alt4_module();
        let d = m.direct_sum(&m).unwrap();
        assert!(d.is_homogeneous().unwrap());
        let lat = d.submodules().unwrap();
        // Minimal submodules are the F_4-lines of F_4^2: 5 = 2^2 + 1.
        assert_eq!(lat.minimal().count(), 5);
        let s = sym3_f7();
        let d = s.direct_sum(&s).unwrap();
        assert_eq!(d.submodules().unwrap().minimal().count(), 8);
        let triv = FpModule::trivial(2, 2, 1);
        let mixed = m.direct_sum(&triv).unwrap();
        assert!(!mixed.is_homogeneous().unwrap());
    }

    #[test]
    fn sym3_standard_module() {
        let s = sym3_f7();
        assert!(s.is_irreducible());
        assert!(s.is_absolutely_irreducible().unwrap());
        assert_eq!(s.image_order(100), Some(6));
        let s3 = symmetric(3).unwrap();
        // Generators of sym(3): the 3-cycle and the transposition, in the
        // order the module lists them.
        let order3 = s3.generator_indices().iter().copied().find(|&x| s3.element_order(x) == 3).unwrap();
        let order2 = s3.generator_indices().iter().copied().find(|&x| s3.element_order(x) == 2).unwrap();
        let h = s3.subgroup_from_indices(&[order3, order2]);
        assert!(cyclicity_criterion_check(&s3, &h, &s).unwrap());
    }

    #[test]
    fn cyclicity_on_alt4_module() {
        let (a4, m) = alt4_module();
        let c3 = Structure::new(&a4).sylow(3);
        assert!(cyclicity_criterion_check(&a4, &c3, &m).unwrap());
        let c1 = cyclic(1).unwrap();
        let t = FpModule::trivial(2, 1, 0);
        assert!(matches!(cyclicity_criterion_check(&c1, &c1.whole(), &t), Err(Error::HypothesisViolated(_))));
    }

    #[test]
    fn isomorphism_and_basis_change() {
        let (_, m) = alt4_module();
        let t = FpMatrix::square(2, &[1, 1, 0, 1]).unwrap();
        let m2 = m.change_basis(&t).unwrap();
        assert!(are_isomorphic_modules(&m, &m2).unwrap());
        let triv = FpModule::trivial(2, 2, 1);
        assert!(!are_isomorphic_modules(&m, &triv).unwrap());
        let other = FpModule::trivial(3, 2, 1);
        assert_eq!(are_isomorphic_modules(&m, &other).unwrap_err(), Error::ActingGroupMismatch);
    }

    #[test]
    fn quotient_and_submodule_actions() {
        let (_, m) = alt4_module();
        let triv = FpModule::trivial(2, 1, 1);
        let d = m.direct_sum(&triv).unwrap();
        let factors = d.composition_factors();
        let mut dims: Vec<usize> = factors.iter().map(|f| f.dim()).collect();
        dims.sort_unstable();
        assert_eq!(dims, [1, 2]);
        for s in d.submodules().unwrap().submodules {
            assert!(d.is_invariant(&s));
            let q = d.quotient(&s);
            assert_eq!(q.dim() + s.dim(), 3);
        }
    }
}
