use crate::group::Group;
use crate::perm::Perm;
use crate::GroupError;

/// One conjugacy class: canonical representative (the lexicographically least
/// member), its size, the common element order, and all member indices into
/// the parent group's element list.
#[derive(Clone, Debug)]
pub struct ConjClass {
    pub rep: Perm,
    pub rep_index: u32,
    pub size: u64,
    pub element_order: u64,
    pub members: Vec<u32>,
}

/// Full conjugacy class data for a group. Classes are sorted by
/// (element order, size, representative), so the identity class is first.
#[derive(Clone, Debug)]
pub struct ClassData {
    pub classes: Vec<ConjClass>,
    /// class index of each group element, indexed by element index
    pub class_of: Vec<u32>,
}

impl ClassData {
    pub fn count(&self) -> usize {
        self.classes.len()
    }

    pub fn class_of_perm(&self, g: &Group, p: &Perm) -> Option<usize> {
        g.element_index(p).map(|i| self.class_of[i as usize] as usize)
    }

    /// Index of the class of inverses of class `c`.
    pub fn inverse_class(&self, g: &Group, c: usize) -> usize {
        let inv = self.classes[c].rep.inverse();
        self.class_of_perm(g, &inv).expect("inverse stays in group")
    }
}

/// Conjugacy classes by orbit expansion under conjugation by generators.
///
/// Scanning elements in sorted order makes the first-found member of each
/// class its lexicographically least one, which we keep as representative.
pub fn conjugacy_classes(g: &Group) -> ClassData {
    let n = g.order() as usize;
    let mut class_of = vec![u32::MAX; n];
    let mut classes: Vec<ConjClass> = Vec::new();
    for start in 0..n as u32 {
        if class_of[start as usize] != u32::MAX {
            continue;
        }
        let cid = classes.len() as u32;
        class_of[start as usize] = cid;
        let mut members = vec![start];
        let mut frontier = vec![start];
        while let Some(i) = frontier.pop() {
            let x = g.element(i);
            for gen in g.generators() {
                let y = x.conjugate_by(gen);
                let j = g.element_index(&y).expect("conjugate stays in group");
                if class_of[j as usize] == u32::MAX {
                    class_of[j as usize] = cid;
                    members.push(j);
                    frontier.push(j);
                }
            }
        }
        members.sort_unstable();
        let rep = g.element(start).clone();
        classes.push(ConjClass {
            element_order: rep.order(),
            rep,
            rep_index: start,
            size: members.len() as u64,
            members,
        });
    }

    // canonical ordering: (element order, size, representative)
    let mut order: Vec<usize> = (0..classes.len()).collect();
    order.sort_by(|&a, &b| {
        let ca = &classes[a];
        let cb = &classes[b];
        (ca.element_order, ca.size, &ca.rep).cmp(&(cb.element_order, cb.size, &cb.rep))
    });
    let mut remap = vec![0u32; classes.len()];
    for (new, &old) in order.iter().enumerate() {
        remap[old] = new as u32;
    }
    let mut sorted = Vec::with_capacity(classes.len());
    for &old in &order {
        sorted.push(classes[old].clone());
    }
    for c in class_of.iter_mut() {
        *c = remap[*c as usize];
    }
    ClassData {
        classes: sorted,
        class_of,
    }
}

/// Centralizer of `x` in `g`, by direct scan.
pub fn centralizer(g: &Group, x: &Perm) -> Result<Group, GroupError> {
    if !g.contains(x) {
        return Err(GroupError::NotInGroup);
    }
    let elems: Vec<Perm> = g
        .elements()
        .iter()
        .filter(|e| e.compose(x) == x.compose(e))
        .cloned()
        .collect();
    Ok(Group::from_element_list(g.degree(), elems))
}

/// The permutation of class indices induced by `x -> x^m`.
pub fn power_map(g: &Group, classes: &ClassData, m: i64) -> Vec<usize> {
    classes
        .classes
        .iter()
        .map(|c| {
            let p = c.rep.pow(m);
            classes
                .class_of_perm(g, &p)
                .expect("powers stay in group")
        })
        .collect()
}
