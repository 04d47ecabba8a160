//! Dense permutations of `{1..n}`.
//!
//! Images are stored 0-based; cycle notation at the boundaries is 1-based.
//! Products act on the right: in `a * b` the permutation `a` is applied
//! first, matching how juxtaposed cycles are read left to right.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Mul;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation { images: (0..degree as u32).collect() }
    }

    /// Builds a permutation from 0-based images, checking bijectivity.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = alloc::vec![false; n];
        for &i in &images {
            let i = i as usize;
            if i >= n || seen[i] {
                return Err(Error::NotAPermutation(alloc::format!("{images:?}")));
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    /// Product of 1-based cycles, composed left to right.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut acc = Permutation::identity(degree);
        for cycle in cycles {
            let mut step = Permutation::identity(degree);
            let mut seen = Vec::with_capacity(cycle.len());
            for &pt in cycle {
                if pt == 0 || pt > degree {
                    return Err(Error::NotAPermutation(alloc::format!("point {pt} outside 1..={degree}")));
                }
                if seen.contains(&pt) {
                    return Err(Error::NotAPermutation(alloc::format!("point {pt} repeated in a cycle")));
                }
                seen.push(pt);
            }
            for (k, &pt) in cycle.iter().enumerate() {
                let next = cycle[(k + 1) % cycle.len()];
                step.images[pt - 1] = (next - 1) as u32;
            }
            acc = &acc * &step;
        }
        Ok(acc)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    /// Image of a 0-based point.
    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i as u32 == j)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = alloc::vec![0u32; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j as usize] = i as u32;
        }
        Permutation { images: inv }
    }

    /// `self` on the first points, `other` shifted past them.
    pub fn juxtapose(&self, other: &Permutation) -> Self {
        let shift = self.degree() as u32;
        let mut images = self.images.clone();
        images.extend(other.images.iter().map(|&x| x + shift));
        Permutation { images }
    }

    /// Extends to a larger degree by fixing the new points.
    pub fn extend_to(&self, degree: usize) -> Self {
        let mut images = self.images.clone();
        images.extend(self.images.len() as u32..degree as u32);
        Permutation { images }
    }

    pub fn order(&self) -> usize {
        let mut seen = alloc::vec![false; self.images.len()];
        let mut ord = 1usize;
        for start in 0..self.images.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.images[x] as usize;
                len += 1;
            }
            ord = ord / crate::arith::gcd(ord as u64, len as u64) as usize * len;
        }
        ord
    }

    /// Disjoint cycles (1-based), fixed points omitted.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = alloc::vec![false; self.images.len()];
        let mut out = Vec::new();
        for start in 0..self.images.len() {
            if seen[start] || self.images[start] as usize == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x + 1);
                x = self.images[x] as usize;
            }
            out.push(cycle);
        }
        out
    }

    pub fn to_cycle_string(&self) -> String {
        let mut s = String::new();
        for cycle in self.cycles() {
            s.push('(');
            for (k, pt) in cycle.iter().enumerate() {
                if k > 0 {
                    s.push(' ');
                }
                s.push_str(&alloc::format!("{pt}"));
            }
            s.push(')');
        }
        if s.is_empty() {
            s.push_str("()");
        }
        s
    }
}

impl Mul for &Permutation {
    type Output = Permutation;

    fn mul(self, rhs: &Permutation) -> Permutation {
        assert_eq!(self.degree(), rhs.degree(), "degree mismatch in product");
        Permutation { images: self.images.iter().map(|&x| rhs.images[x as usize]).collect() }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_cycle_string())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{}", self.to_cycle_string())
    }
}
