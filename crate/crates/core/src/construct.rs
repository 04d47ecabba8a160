//! Built-in group constructors and the [`Recipe`] description used by the
//! corpus and by construction directives in group files.

use alloc::boxed::Box;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::arith;
use crate::error::{Error, Result};
use crate::fp::FpMatrix;
use crate::group::{Caps, Group};
use crate::perm::Permutation;

fn cycle(degree: usize, points: impl IntoIterator<Item = usize>) -> Permutation {
    let c: Vec<usize> = points.into_iter().collect();
    Permutation::from_cycles(degree, &[c]).expect("valid cycle")
}

pub fn cyclic(n: usize) -> Result<Group> {
    cyclic_with(n, Caps::default())
}

fn cyclic_with(n: usize, caps: Caps) -> Result<Group> {
    if n == 0 {
        return Err(Error::BadParameter("cyclic group of order 0".into()));
    }
    let gens = if n == 1 { Vec::new() } else { alloc::vec![cycle(n, 1..=n)] };
    Group::with_caps(n, &gens, caps)
}

pub fn symmetric(n: usize) -> Result<Group> {
    symmetric_with(n, Caps::default())
}

fn symmetric_with(n: usize, caps: Caps) -> Result<Group> {
    let n = n.max(1);
    let gens = if n < 2 { Vec::new() } else { alloc::vec![cycle(n, 1..=n), cycle(n, [1, 2])] };
    Group::with_caps(n, &gens, caps)
}

pub fn alternating(n: usize) -> Result<Group> {
    alternating_with(n, Caps::default())
}

fn alternating_with(n: usize, caps: Caps) -> Result<Group> {
    let n = n.max(1);
    let gens = match n {
        0..=2 => Vec::new(),
        3 => alloc::vec![cycle(3, [1, 2, 3])],
        _ if n % 2 == 1 => alloc::vec![cycle(n, [1, 2, 3]), cycle(n, 1..=n)],
        _ => alloc::vec![cycle(n, [1, 2, 3]), cycle(n, 2..=n)],
    };
    Group::with_caps(n, &gens, caps)
}

/// Regular representation of a group given by a multiplication rule on
/// `0..n` (with `0` the identity), generated by the listed elements.
pub fn from_rule(n: usize, mul: impl Fn(usize, usize) -> usize, gens: &[usize], caps: Caps) -> Result<Group> {
    let perms: Vec<Permutation> = gens
        .iter()
        .map(|&g| Permutation::from_images((0..n).map(|x| mul(x, g) as u32).collect()))
        .collect::<Result<_>>()?;
    Group::with_caps(n, &perms, caps)
}

/// Groups `⟨a, b⟩` with `a` of order `n`, every element `a^i b^j` for
/// `j ∈ {0,1}`, `b a b^-1 = a^r` and `b^2 = a^s`.
fn metacyclic(n: usize, r: usize, s: usize, caps: Caps) -> Result<Group> {
    let rpow = |k: usize, j: usize| if j == 0 { k % n } else { (k * r) % n };
    let mul = |x: usize, y: usize| {
        let (i, j) = (x % n, x / n);
        let (k, l) = (y % n, y / n);
        let exp = i + rpow(k, j);
        if j + l == 2 {
            (exp + s) % n
        } else {
            exp % n + n * (j + l)
        }
    };
    from_rule(2 * n, mul, &[1, n], caps)
}

/// Dihedral group of the given order (`2n`); natural action on `n` points
/// when `n ≥ 3`.
pub fn dihedral(order: usize) -> Result<Group> {
    dihedral_with(order, Caps::default())
}

fn dihedral_with(order: usize, caps: Caps) -> Result<Group> {
    if order < 2 || order % 2 == 1 {
        return Err(Error::BadParameter(format!("dihedral group needs even order, got {order}")));
    }
    let n = order / 2;
    match n {
        1 => cyclic_with(2, caps),
        2 => metacyclic(2, 1, 0, caps),
        _ => {
            let refl: Vec<Vec<usize>> =
                (1..=n / 2).map(|i| alloc::vec![i, n + 1 - i]).filter(|c| c[0] != c[1]).collect();
            let refl = Permutation::from_cycles(n, &refl)?;
            Group::with_caps(n, &[cycle(n, 1..=n), refl], caps)
        }
    }
}

/// Generalized quaternion group of order `2^k`, `k ≥ 3`.
pub fn quaternion(order: usize) -> Result<Group> {
    quaternion_with(order, Caps::default())
}

fn quaternion_with(order: usize, caps: Caps) -> Result<Group> {
    if order < 8 || !order.is_power_of_two() {
        return Err(Error::BadParameter(format!("quaternion group needs order 2^k >= 8, got {order}")));
    }
    let n = order / 2;
    metacyclic(n, n - 1, n / 2, caps)
}

/// Semidihedral group of order `2^k`, `k ≥ 4`.
pub fn semidihedral(order: usize) -> Result<Group> {
    semidihedral_with(order, Caps::default())
}

fn semidihedral_with(order: usize, caps: Caps) -> Result<Group> {
    if order < 16 || !order.is_power_of_two() {
        return Err(Error::BadParameter(format!("semidihedral group needs order 2^k >= 16, got {order}")));
    }
    let n = order / 2;
    metacyclic(n, n / 2 - 1, 0, caps)
}

/// `(C_p)^k` as `k` disjoint `p`-cycles.
pub fn elementary_abelian(p: u64, k: usize) -> Result<Group> {
    elementary_abelian_with(p, k, Caps::default())
}

fn elementary_abelian_with(p: u64, k: usize, caps: Caps) -> Result<Group> {
    check_prime(p)?;
    let p = p as usize;
    let degree = (p * k).max(1);
    let gens: Vec<Permutation> = (0..k).map(|i| cycle(degree, i * p + 1..=(i + 1) * p)).collect();
    Group::with_caps(degree, &gens, caps)
}

/// `A × B` acting on the disjoint union of the two point sets.
pub fn direct_product(a: &Group, b: &Group) -> Result<Group> {
    let ida = Permutation::identity(a.degree());
    let idb = Permutation::identity(b.degree());
    let mut gens: Vec<Permutation> = a.generators().iter().map(|g| g.juxtapose(&idb)).collect();
    gens.extend(b.generators().iter().map(|g| ida.juxtapose(g)));
    Group::with_caps(a.degree() + b.degree(), &gens, a.caps())
}

fn check_prime(p: u64) -> Result<()> {
    if arith::is_prime(p) {
        Ok(())
    } else {
        Err(Error::BadParameter(format!("{p} is not prime")))
    }
}

fn encode(v: &[u32], p: u32) -> usize {
    v.iter().rev().fold(0usize, |acc, &x| acc * p as usize + x as usize)
}

fn decode(mut code: usize, p: u32, k: usize) -> Vec<u32> {
    (0..k)
        .map(|_| {
            let d = (code % p as usize) as u32;
            code /= p as usize;
            d
        })
        .collect()
}

/// Permutation of the `p^k` vectors induced by `v ↦ v·A`.
fn linear_action(a: &FpMatrix) -> Permutation {
    let (p, k) = (a.p(), a.rows());
    let n = (p as usize).pow(k as u32);
    let images = (0..n).map(|c| encode(&a.vec_mul(&decode(c, p, k)), p) as u32).collect();
    Permutation::from_images(images).expect("invertible matrix permutes vectors")
}

fn translation(p: u32, k: usize, i: usize) -> Permutation {
    let n = (p as usize).pow(k as u32);
    let images = (0..n)
        .map(|c| {
            let mut v = decode(c, p, k);
            v[i] = (v[i] + 1) % p;
            encode(&v, p) as u32
        })
        .collect();
    Permutation::from_images(images).expect("translation")
}

fn check_matrices(p: u64, k: usize, mats: &[FpMatrix]) -> Result<()> {
    check_prime(p)?;
    for a in mats {
        if a.p() as u64 != p || a.rows() != k || a.cols() != k {
            return Err(Error::BadAction(format!("matrix is not {k}x{k} over F_{p}")));
        }
        if a.inverse().is_none() {
            return Err(Error::BadAction("singular matrix".into()));
        }
    }
    Ok(())
}

/// `(C_p)^k ⋊ C_m` with the generator of `C_m` acting by `A` on row
/// vectors. Realized as affine maps of `F_p^k`; when `A` has order
/// smaller than `m` an extra `m`-cycle on new points keeps `C_m` faithful.
pub fn semidirect_product(p: u64, k: usize, a: &FpMatrix, m: usize) -> Result<Group> {
    semidirect_product_with(p, k, a, m, Caps::default())
}

fn semidirect_product_with(p: u64, k: usize, a: &FpMatrix, m: usize, caps: Caps) -> Result<Group> {
    check_matrices(p, k, core::slice::from_ref(a))?;
    if m == 0 || !a.pow(m as u64).is_identity() {
        return Err(Error::BadAction(format!("A^{m} is not the identity")));
    }
    if arith::gcd(m as u64, p) != 1 {
        return Err(Error::BadAction(format!("gcd({m}, {p}) != 1")));
    }
    let n = (p as usize).pow(k as u32);
    let ord = a.order(m).unwrap_or(m);
    let extra = if ord < m { m } else { 0 };
    let pad = |x: Permutation| x.extend_to(n + extra);
    let mut gens: Vec<Permutation> = (0..k).map(|i| pad(translation(p as u32, k, i))).collect();
    let mut ga = linear_action(a);
    if extra > 0 {
        ga = ga.juxtapose(&cycle(extra, 1..=extra));
    }
    gens.push(pad(ga));
    Group::with_caps(n + extra, &gens, caps)
}

/// `F_p^k ⋊ ⟨mats⟩` as affine maps of `F_p^k`.
pub fn affine(p: u64, k: usize, mats: &[FpMatrix]) -> Result<Group> {
    affine_with(p, k, mats, Caps::default())
}

fn affine_with(p: u64, k: usize, mats: &[FpMatrix], caps: Caps) -> Result<Group> {
    check_matrices(p, k, mats)?;
    let n = (p as usize).pow(k as u32);
    let mut gens: Vec<Permutation> = (0..k).map(|i| translation(p as u32, k, i)).collect();
    gens.extend(mats.iter().map(linear_action));
    Group::with_caps(n, &gens, caps)
}

/// The matrix group `⟨mats⟩` acting on the nonzero vectors of `F_p^k`.
pub fn linear(p: u64, k: usize, mats: &[FpMatrix]) -> Result<Group> {
    linear_with(p, k, mats, Caps::default())
}

fn linear_with(p: u64, k: usize, mats: &[FpMatrix], caps: Caps) -> Result<Group> {
    check_matrices(p, k, mats)?;
    let n = (p as usize).pow(k as u32);
    let gens: Vec<Permutation> = mats
        .iter()
        .map(|a| {
            let full = linear_action(a);
            let images = (1..n).map(|c| full.apply(c) as u32 - 1).collect();
            Permutation::from_images(images).expect("nonzero vectors are permuted")
        })
        .collect();
    Group::with_caps(n - 1, &gens, caps)
}

/// A description of a group that can be rebuilt on demand.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Recipe {
    Cyclic(usize),
    /// Parameter is the group order.
    Dihedral(usize),
    Quaternion(usize),
    Semidihedral(usize),
    Symmetric(usize),
    Alternating(usize),
    ElementaryAbelian {
        p: u64,
        k: usize,
    },
    /// Row-major `k×k` matrix entries.
    Semidirect {
        p: u64,
        k: usize,
        matrix: Vec<u32>,
        m: usize,
    },
    Affine {
        p: u64,
        k: usize,
        matrices: Vec<Vec<u32>>,
    },
    Linear {
        p: u64,
        k: usize,
        matrices: Vec<Vec<u32>>,
    },
    DirectProduct(Box<Recipe>, Box<Recipe>),
    Generators {
        degree: usize,
        gens: Vec<Permutation>,
    },
}

fn matrices(p: u64, k: usize, entries: &[Vec<u32>]) -> Result<Vec<FpMatrix>> {
    entries.iter().map(|e| FpMatrix::new(p as u32, k, k, e.clone())).collect()
}

impl Recipe {
    pub fn build(&self) -> Result<Group> {
        self.build_with(Caps::default())
    }

    pub fn build_with(&self, caps: Caps) -> Result<Group> {
        match self {
            Recipe::Cyclic(n) => cyclic_with(*n, caps),
            Recipe::Dihedral(n) => dihedral_with(*n, caps),
            Recipe::Quaternion(n) => quaternion_with(*n, caps),
            Recipe::Semidihedral(n) => semidihedral_with(*n, caps),
            Recipe::Symmetric(n) => symmetric_with(*n, caps),
            Recipe::Alternating(n) => alternating_with(*n, caps),
            Recipe::ElementaryAbelian { p, k } => elementary_abelian_with(*p, *k, caps),
            Recipe::Semidirect { p, k, matrix, m } => {
                check_prime(*p)?;
                let a = FpMatrix::new(*p as u32, *k, *k, matrix.clone())?;
                semidirect_product_with(*p, *k, &a, *m, caps)
            }
            Recipe::Affine { p, k, matrices: m } => {
                check_prime(*p)?;
                affine_with(*p, *k, &matrices(*p, *k, m)?, caps)
            }
            Recipe::Linear { p, k, matrices: m } => {
                check_prime(*p)?;
                linear_with(*p, *k, &matrices(*p, *k, m)?, caps)
            }
            Recipe::DirectProduct(a, b) => {
                let a = a.build_with(caps)?;
                let b = b.build_with(caps)?;
                direct_product(&a, &b)
            }
            Recipe::Generators { degree, gens } => Group::with_caps(*degree, gens, caps),
        }
    }
}

fn join_entries(v: &[u32]) -> String {
    let parts: Vec<String> = v.iter().map(|x| format!("{x}")).collect();
    parts.join(",")
}

/// The construction-directive form, e.g. `sdp:2:2:0,1,1,1:3`.
/// [`Recipe::Generators`] has no directive form and prints as `gens:<degree>`.
impl fmt::Display for Recipe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Recipe::Cyclic(n) => write!(f, "cyclic:{n}"),
            Recipe::Dihedral(n) => write!(f, "dihedral:{n}"),
            Recipe::Quaternion(n) => write!(f, "quaternion:{n}"),
            Recipe::Semidihedral(n) => write!(f, "semidihedral:{n}"),
            Recipe::Symmetric(n) => write!(f, "sym:{n}"),
            Recipe::Alternating(n) => write!(f, "alt:{n}"),
            Recipe::ElementaryAbelian { p, k } => write!(f, "elemab:{p}:{k}"),
            Recipe::Semidirect { p, k, matrix, m } => write!(f, "sdp:{p}:{k}:{}:{m}", join_entries(matrix)),
            Recipe::Affine { p, k, matrices } | Recipe::Linear { p, k, matrices } => {
                let word = if matches!(self, Recipe::Affine { .. }) { "affine" } else { "linear" };
                let ms: Vec<String> = matrices.iter().map(|m| join_entries(m)).collect();
                write!(f, "{word}:{p}:{k}:{}", ms.join(";"))
            }
            Recipe::DirectProduct(a, b) => write!(f, "dp:{a}×{b}"),
            Recipe::Generators { degree, .. } => write!(f, "gens:{degree}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn orders() {
        assert_eq!(cyclic(1).unwrap().order(), 1);
        assert_eq!(cyclic(6).unwrap().order(), 6);
        assert_eq!(symmetric(4).unwrap().order(), 24);
        assert_eq!(alternating(4).unwrap().order(), 12);
        assert_eq!(alternating(5).unwrap().order(), 60);
        assert_eq!(alternating(6).unwrap().order(), 360);
        assert_eq!(dihedral(4).unwrap().order(), 4);
        assert_eq!(dihedral(8).unwrap().order(), 8);
        assert_eq!(dihedral(10).unwrap().order(), 10);
        assert_eq!(quaternion(8).unwrap().order(), 8);
        assert_eq!(quaternion(16).unwrap().order(), 16);
        assert_eq!(semidihedral(16).unwrap().order(), 16);
        assert_eq!(elementary_abelian(3, 2).unwrap().order(), 9);
        assert_eq!(elementary_abelian(2, 0).unwrap().order(), 1);
    }

    #[test]
    fn element_order_profiles() {
        // Q8: one involution; D8: five.
        let q8 = quaternion(8).unwrap();
        assert_eq!(q8.order_histogram(), vec![(1, 1), (2, 1), (4, 6)]);
        let d8 = dihedral(8).unwrap();
        assert_eq!(d8.order_histogram(), vec![(1, 1), (2, 5), (4, 2)]);
        let sd16 = semidihedral(16).unwrap();
        assert_eq!(sd16.order_histogram(), vec![(1, 1), (2, 5), (4, 6), (8, 4)]);
        let q16 = quaternion(16).unwrap();
        assert_eq!(q16.order_histogram(), vec![(1, 1), (2, 1), (4, 10), (8, 4)]);
    }

    #[test]
    fn semidirect_products() {
        let a = FpMatrix::square(2, &[0, 1, 1, 1]).unwrap();
        let g = semidirect_product(2, 2, &a, 3).unwrap();
        assert_eq!(g.order(), 12);
        let s3 = semidirect_product(3, 1, &FpMatrix::square(3, &[2]).unwrap(), 2).unwrap();
        assert_eq!(s3.order(), 6);
        assert!(!s3.is_abelian());
        let e = semidirect_product(3, 2, &FpMatrix::identity(3, 2), 1).unwrap();
        assert_eq!(e.order(), 9);
        assert!(e.is_abelian());
        // Identity action with m = 2 still gives a C2 factor.
        let c = semidirect_product(3, 1, &FpMatrix::identity(3, 1), 2).unwrap();
        assert_eq!(c.order(), 6);
        assert!(c.is_abelian());
    }

    #[test]
    fn semidirect_rejects_bad_actions() {
        let a = FpMatrix::square(2, &[0, 1, 1, 1]).unwrap();
        assert!(matches!(semidirect_product(2, 2, &a, 2), Err(Error::BadAction(_))));
        let s = FpMatrix::square(2, &[1, 1, 1, 1]).unwrap();
        assert!(matches!(semidirect_product(2, 2, &s, 3), Err(Error::BadAction(_))));
        let i = FpMatrix::identity(3, 1);
        assert!(matches!(semidirect_product(3, 1, &i, 3), Err(Error::BadAction(_))));
    }

    #[test]
    fn matrix_groups() {
        let sl23 =
            linear(3, 2, &[FpMatrix::square(3, &[1, 1, 0, 1]).unwrap(), FpMatrix::square(3, &[1, 0, 1, 1]).unwrap()])
                .unwrap();
        assert_eq!(sl23.order(), 24);
        let gl32 = linear(
            2,
            3,
            &[
                FpMatrix::square(2, &[0, 1, 0, 0, 0, 1, 1, 1, 0]).unwrap(),
                FpMatrix::square(2, &[1, 1, 0, 0, 1, 0, 0, 0, 1]).unwrap(),
            ],
        )
        .unwrap();
        assert_eq!(gl32.order(), 168);
        let agl18 = affine(
            2,
            3,
            &[
                FpMatrix::square(2, &[0, 1, 0, 0, 0, 1, 1, 1, 0]).unwrap(),
                FpMatrix::square(2, &[1, 0, 0, 0, 0, 1, 0, 1, 1]).unwrap(),
            ],
        )
        .unwrap();
        assert_eq!(agl18.order(), 168);
    }

    #[test]
    fn direct_products() {
        let c2 = cyclic(2).unwrap();
        let v = direct_product(&c2, &c2).unwrap();
        assert_eq!(v.order(), 4);
        assert_eq!(v.exponent(), 2);
        let v16 = direct_product(&v, &v).unwrap();
        assert_eq!(v16.order(), 16);
        assert_eq!(v16.exponent(), 2);
        assert_eq!(direct_product(&symmetric(3).unwrap(), &c2).unwrap().order(), 12);
    }

    #[test]
    fn recipe_display() {
        let r = Recipe::Semidirect { p: 2, k: 2, matrix: vec![0, 1, 1, 1], m: 3 };
        assert_eq!(format!("{r}"), "sdp:2:2:0,1,1,1:3");
        assert_eq!(r.build().unwrap().order(), 12);
        let d = Recipe::DirectProduct(Box::new(Recipe::Symmetric(3)), Box::new(Recipe::Cyclic(2)));
        assert_eq!(format!("{d}"), "dp:sym:3×cyclic:2");
    }
}
