use std::fmt;

use crate::GroupError;

/// A permutation of `{0, 1, ..., degree-1}`, stored as its image array:
/// `images[i]` is where point `i` goes.
///
/// Products compose left-to-right: `(a * b)` means "apply `a`, then `b`".
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Box<[u32]>,
}

impl Perm {
    pub fn identity(degree: usize) -> Perm {
        Perm {
            images: (0..degree as u32).collect(),
        }
    }

    /// Validates that `images` is a bijection on `0..images.len()`.
    pub fn from_images(images: Vec<u32>) -> Result<Perm, GroupError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            let x = x as usize;
            if x >= n || seen[x] {
                return Err(GroupError::NotAPermutation);
            }
            seen[x] = true;
        }
        Ok(Perm {
            images: images.into_boxed_slice(),
        })
    }

    /// Builds a permutation of the given degree from disjoint cycles.
    pub fn from_cycles(degree: usize, cycles: &[&[u32]]) -> Result<Perm, GroupError> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        for cycle in cycles {
            for (i, &pt) in cycle.iter().enumerate() {
                let next = cycle[(i + 1) % cycle.len()];
                if pt as usize >= degree || images[pt as usize] != pt {
                    return Err(GroupError::NotAPermutation);
                }
                images[pt as usize] = next;
            }
        }
        Perm::from_images(images)
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, point: u32) -> u32 {
        self.images[point as usize]
    }

    #[inline]
    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// `self` then `other`.
    pub fn compose(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm {
            images: self.images.iter().map(|&x| other.images[x as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u32; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Perm {
            images: inv.into_boxed_slice(),
        }
    }

    /// Conjugate `g^-1 * self * g`.
    pub fn conjugate_by(&self, g: &Perm) -> Perm {
        // (g^-1 self g)(x) = g(self(g^-1(x))); build directly without forming g^-1.
        let mut images = vec![0u32; self.degree()];
        for (i, &gi) in g.images.iter().enumerate() {
            // point g(i) maps to g(self(i))
            images[gi as usize] = g.images[self.images[i] as usize];
        }
        Perm {
            images: images.into_boxed_slice(),
        }
    }

    pub fn pow(&self, e: i64) -> Perm {
        let mut base = if e < 0 { self.inverse() } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Perm::identity(self.degree());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose(&base);
            }
            base = base.compose(&base);
            e >>= 1;
        }
        acc
    }

    /// Cycle decomposition, fixed points omitted. Cycles start at their least
    /// point and are listed in order of that point.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() as u32 {
            if seen[start as usize] || self.images[start as usize] == start {
                seen[start as usize] = true;
                continue;
            }
            let mut cycle = vec![start];
            seen[start as usize] = true;
            let mut p = self.images[start as usize];
            while p != start {
                seen[p as usize] = true;
                cycle.push(p);
                p = self.images[p as usize];
            }
            out.push(cycle);
        }
        out
    }

    /// Multiplicative order: lcm of the cycle lengths.
    pub fn order(&self) -> u64 {
        let mut seen = vec![false; self.degree()];
        let mut ord: u64 = 1;
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut len: u64 = 0;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                p = self.images[p] as usize;
                len += 1;
            }
            ord = num_lcm(ord, len);
        }
        ord
    }
}

pub(crate) fn num_gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        num_gcd(b, a % b)
    }
}

pub(crate) fn num_lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        0
    } else {
        a / num_gcd(a, b) * b
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return write!(f, "()");
        }
        for cycle in self.cycles() {
            write!(f, "(")?;
            for (i, pt) in cycle.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{pt}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}
