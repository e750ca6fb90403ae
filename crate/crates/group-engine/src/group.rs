use std::collections::HashMap;

use crate::perm::{num_lcm, Perm};
use crate::GroupError;

/// Hard cap on full enumeration; anything bigger is out of desk scale.
pub const DEFAULT_ORDER_CAP: usize = 1_000_000;

/// A finite permutation group, fully enumerated.
///
/// Elements are stored sorted lexicographically by image array, so
/// `elements[0]` is always the identity and element indices are canonical
/// for a given (degree, element set).
#[derive(Clone)]
pub struct Group {
    degree: usize,
    gens: Vec<Perm>,
    elements: Vec<Perm>,
    index: HashMap<Perm, u32>,
}

impl std::fmt::Debug for Group {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Group")
            .field("degree", &self.degree)
            .field("order", &self.elements.len())
            .field("gens", &self.gens)
            .finish()
    }
}

impl Group {
    pub fn from_generators(degree: usize, gens: Vec<Perm>) -> Result<Group, GroupError> {
        Group::from_generators_capped(degree, gens, DEFAULT_ORDER_CAP)
    }

    pub fn from_generators_capped(
        degree: usize,
        gens: Vec<Perm>,
        cap: usize,
    ) -> Result<Group, GroupError> {
        for g in &gens {
            if g.degree() != degree {
                return Err(GroupError::DegreeMismatch);
            }
        }
        let elements = closure(degree, &gens, cap)?;
        Ok(Group::from_sorted_elements(degree, gens, elements))
    }

    /// `elements` must be the full element set (unsorted ok, duplicates not).
    pub(crate) fn from_element_list(degree: usize, mut elements: Vec<Perm>) -> Group {
        elements.sort_unstable();
        let gens = generating_subset(degree, &elements);
        Group::from_sorted_elements(degree, gens, elements)
    }

    fn from_sorted_elements(degree: usize, gens: Vec<Perm>, mut elements: Vec<Perm>) -> Group {
        elements.sort_unstable();
        let index = elements
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i as u32))
            .collect();
        Group {
            degree,
            gens,
            elements,
            index,
        }
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.degree
    }

    #[inline]
    pub fn order(&self) -> u64 {
        self.elements.len() as u64
    }

    pub fn generators(&self) -> &[Perm] {
        &self.gens
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn element(&self, i: u32) -> &Perm {
        &self.elements[i as usize]
    }

    pub fn identity(&self) -> Perm {
        Perm::identity(self.degree)
    }

    pub fn contains(&self, p: &Perm) -> bool {
        self.index.contains_key(p)
    }

    pub fn element_index(&self, p: &Perm) -> Option<u32> {
        self.index.get(p).copied()
    }

    /// Is `other` a subgroup of `self` (same degree, subset of elements)?
    pub fn has_subgroup(&self, other: &Group) -> bool {
        other.degree == self.degree
            && other.order() <= self.order()
            && other.elements.iter().all(|p| self.contains(p))
    }

    /// lcm of all element orders.
    pub fn exponent(&self) -> u64 {
        self.elements
            .iter()
            .fold(1u64, |acc, p| num_lcm(acc, p.order()))
    }

    pub fn is_abelian(&self) -> bool {
        self.gens.iter().enumerate().all(|(i, a)| {
            self.gens[i + 1..]
                .iter()
                .all(|b| a.compose(b) == b.compose(a))
        })
    }

    pub fn is_cyclic(&self) -> bool {
        let n = self.order();
        self.elements.iter().any(|p| p.order() == n)
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    /// Subgroup generated by `seeds` inside this group's ambient symmetric group.
    pub fn subgroup_closure(&self, seeds: &[Perm]) -> Result<Group, GroupError> {
        Group::from_generators_capped(self.degree, seeds.to_vec(), self.elements.len())
    }
}

/// Breadth-first closure of the generating set.
fn closure(degree: usize, gens: &[Perm], cap: usize) -> Result<Vec<Perm>, GroupError> {
    let id = Perm::identity(degree);
    let mut seen: HashMap<Perm, ()> = HashMap::new();
    seen.insert(id.clone(), ());
    let mut frontier = vec![id];
    let mut all = Vec::new();
    while let Some(p) = frontier.pop() {
        for g in gens {
            let q = p.compose(g);
            if !seen.contains_key(&q) {
                if seen.len() >= cap {
                    return Err(GroupError::OrderCapExceeded(cap));
                }
                seen.insert(q.clone(), ());
                frontier.push(q);
            }
        }
        all.push(p);
    }
    Ok(all)
}

/// Greedy small generating subset of a known element list (sorted input).
fn generating_subset(degree: usize, elements: &[Perm]) -> Vec<Perm> {
    let mut gens: Vec<Perm> = Vec::new();
    let mut have = vec![Perm::identity(degree)];
    let mut have_set: HashMap<Perm, ()> = have.iter().map(|p| (p.clone(), ())).collect();
    for p in elements {
        if have_set.contains_key(p) {
            continue;
        }
        gens.push(p.clone());
        // re-close
        let mut frontier: Vec<Perm> = have.clone();
        while let Some(q) = frontier.pop() {
            for g in &gens {
                let r = q.compose(g);
                if !have_set.contains_key(&r) {
                    have_set.insert(r.clone(), ());
                    have.push(r.clone());
                    frontier.push(r);
                }
            }
        }
        if have.len() == elements.len() {
            break;
        }
    }
    if gens.is_empty() {
        // trivial group: keep the identity as generator for a nonempty set
        gens.push(Perm::identity(degree));
    }
    gens
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closure_of_sym3() {
        let a = Perm::from_cycles(3, &[&[0, 1]]).unwrap();
        let b = Perm::from_cycles(3, &[&[0, 1, 2]]).unwrap();
        let g = Group::from_generators(3, vec![a, b]).unwrap();
        assert_eq!(g.order(), 6);
        assert!(g.element(0).is_identity());
        assert_eq!(g.exponent(), 6);
        assert!(!g.is_abelian());
        assert!(!g.is_cyclic());
    }

    #[test]
    fn order_cap_is_enforced() {
        let a = Perm::from_cycles(7, &[&[0, 1]]).unwrap();
        let b = Perm::from_cycles(7, &[&[0, 1, 2, 3, 4, 5, 6]]).unwrap();
        let err = Group::from_generators_capped(7, vec![a, b], 100).unwrap_err();
        assert!(matches!(err, GroupError::OrderCapExceeded(100)));
    }

    #[test]
    fn generating_subset_regenerates() {
        let a = Perm::from_cycles(4, &[&[0, 1, 2, 3]]).unwrap();
        let g = Group::from_generators(4, vec![a]).unwrap();
        let rebuilt = Group::from_element_list(4, g.elements().to_vec());
        assert_eq!(rebuilt.order(), 4);
        assert!(rebuilt.generators().len() <= 2);
    }
}
