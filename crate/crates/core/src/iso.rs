//! Isomorphism testing for small groups: invariant pruning followed by
//! backtracking over images of a generating set.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::group::Group;

/// Cheap isomorphism invariants.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Profile {
    order: usize,
    histogram: Vec<(usize, usize)>,
    center: usize,
    derived: usize,
    abelianization: Vec<(usize, usize)>,
    /// Multiset of (element order, centralizer order).
    classes: Vec<(usize, usize)>,
}

fn centralizer_order(g: &Group, x: usize) -> usize {
    (0..g.order()).filter(|&y| g.mul(x, y) == g.mul(y, x)).count()
}

fn profile(g: &Group) -> Profile {
    let derived = g.derived_subgroup();
    let mut ab: alloc::collections::BTreeMap<usize, usize> = Default::default();
    for x in 0..g.order() {
        let mut k = 1;
        let mut y = x;
        while !derived.contains(y) {
            y = g.mul(y, x);
            k += 1;
        }
        *ab.entry(k).or_default() += 1;
    }
    let mut classes: Vec<(usize, usize)> =
        (0..g.order()).map(|x| (g.element_order(x), centralizer_order(g, x))).collect();
    classes.sort_unstable();
    Profile {
        order: g.order(),
        histogram: g.order_histogram(),
        center: g.center().order(),
        derived: derived.order(),
        abelianization: ab.into_iter().collect(),
        classes,
    }
}

/// A short generating set: greedily add elements of largest order not yet
/// in the span.
fn greedy_generators(g: &Group) -> Vec<usize> {
    let mut by_order: Vec<usize> = (1..g.order()).collect();
    by_order.sort_by_key(|&x| core::cmp::Reverse(g.element_order(x)));
    let mut gens = Vec::new();
    let mut span = g.closure_bits(&gens);
    for x in by_order {
        if span.count_ones(..) == g.order() {
            break;
        }
        if !span.contains(x) {
            gens.push(x);
            span = g.closure_bits(&gens);
        }
    }
    gens
}

/// Extends the assignment `gens[i] ↦ imgs[i]` along the Cayley graph of
/// `⟨gens⟩`; `None` if it is not a well-defined injective homomorphism.
fn extend(a: &Group, b: &Group, gens: &[usize], imgs: &[usize]) -> Option<Vec<usize>> {
    let mut map = alloc::vec![usize::MAX; a.order()];
    let mut used = alloc::vec![false; b.order()];
    map[Group::IDENTITY] = Group::IDENTITY;
    used[Group::IDENTITY] = true;
    let mut queue = alloc::vec![Group::IDENTITY];
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        for (&s, &t) in gens.iter().zip(imgs) {
            let y = a.mul(x, s);
            let fy = b.mul(map[x], t);
            if map[y] == usize::MAX {
                if used[fy] {
                    return None;
                }
                map[y] = fy;
                used[fy] = true;
                queue.push(y);
            } else if map[y] != fy {
                return None;
            }
        }
    }
    Some(map)
}

/// An isomorphism `A → B` as an index map, if one exists.
pub fn find_isomorphism(a: &Group, b: &Group) -> Result<Option<Vec<usize>>> {
    let cap = a.caps().iso;
    for g in [a, b] {
        if g.order() > cap {
            return Err(Error::IsoCapExceeded { cap, order: g.order() });
        }
    }
    if a.order() != b.order() || profile(a) != profile(b) {
        return Ok(None);
    }
    let gens = greedy_generators(a);
    if gens.is_empty() {
        return Ok(Some(alloc::vec![Group::IDENTITY]));
    }
    let key = |g: &Group, x: usize| (g.element_order(x), centralizer_order(g, x));
    let b_keys: Vec<(usize, usize)> = (0..b.order()).map(|y| key(b, y)).collect();
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .enumerate()
        .map(|(i, &x)| {
            let k = key(a, x);
            let all = (0..b.order()).filter(|&y| b_keys[y] == k);
            if i == 0 {
                // Up to inner automorphisms of B the first image is a class
                // representative.
                let reps: Vec<usize> = b.conjugacy_classes().iter().map(|c| c[0]).collect();
                all.filter(|y| reps.contains(y)).collect()
            } else {
                all.collect()
            }
        })
        .collect();

    let mut imgs: Vec<usize> = Vec::with_capacity(gens.len());
    let mut cursor: Vec<usize> = alloc::vec![0; gens.len()];
    let mut depth = 0;
    loop {
        if cursor[depth] == candidates[depth].len() {
            if depth == 0 {
                return Ok(None);
            }
            cursor[depth] = 0;
            depth -= 1;
            imgs.pop();
            cursor[depth] += 1;
            continue;
        }
        imgs.push(candidates[depth][cursor[depth]]);
        if let Some(map) = extend(a, b, &gens[..=depth], &imgs) {
            if depth + 1 == gens.len() {
                return Ok(Some(map));
            }
            depth += 1;
            continue;
        }
        imgs.pop();
        cursor[depth] += 1;
    }
}

pub fn is_isomorphic(a: &Group, b: &Group) -> Result<bool> {
    Ok(find_isomorphism(a, b)?.is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::*;
    use crate::fp::FpMatrix;

    #[test]
    fn basic_instances() {
        let a4 = alternating(4).unwrap();
        assert!(is_isomorphic(&a4, &a4).unwrap());
        assert!(!is_isomorphic(&dihedral(8).unwrap(), &quaternion(8).unwrap()).unwrap());
        let m = FpMatrix::square(2, &[0, 1, 1, 1]).unwrap();
        let sdp = semidirect_product(2, 2, &m, 3).unwrap();
        let map = find_isomorphism(&sdp, &a4).unwrap().unwrap();
        for x in 0..sdp.order() {
            for y in 0..sdp.order() {
                assert_eq!(map[sdp.mul(x, y)], a4.mul(map[x], map[y]));
            }
        }
        assert!(is_isomorphic(&dihedral(4).unwrap(), &elementary_abelian(2, 2).unwrap()).unwrap());
        assert!(!is_isomorphic(&cyclic(4).unwrap(), &elementary_abelian(2, 2).unwrap()).unwrap());
        assert!(is_isomorphic(&dihedral(6).unwrap(), &symmetric(3).unwrap()).unwrap());
    }

    #[test]
    fn respects_cap() {
        let s6 = symmetric(6).unwrap();
        assert!(matches!(is_isomorphic(&s6, &s6), Err(Error::IsoCapExceeded { .. })));
    }

    #[test]
    fn linear_models() {
        // GL(3,2) and PSL(2,7) on 7 points vs AΓL(1,8): same order, not isomorphic.
        let gl32 = linear(
            2,
            3,
            &[
                FpMatrix::square(2, &[0, 1, 0, 0, 0, 1, 1, 1, 0]).unwrap(),
                FpMatrix::square(2, &[1, 1, 0, 0, 1, 0, 0, 0, 1]).unwrap(),
            ],
        )
        .unwrap();
        let agl = affine(
            2,
            3,
            &[
                FpMatrix::square(2, &[0, 1, 0, 0, 0, 1, 1, 1, 0]).unwrap(),
                FpMatrix::square(2, &[1, 0, 0, 0, 0, 1, 0, 1, 1]).unwrap(),
            ],
        )
        .unwrap();
        assert!(!is_isomorphic(&gl32, &agl).unwrap());
        let sl23 =
            linear(3, 2, &[FpMatrix::square(3, &[1, 1, 0, 1]).unwrap(), FpMatrix::square(3, &[1, 0, 1, 1]).unwrap()])
                .unwrap();
        assert!(!is_isomorphic(&sl23, &symmetric(4).unwrap()).unwrap());
    }
}
