use crate::group::Group;
use crate::perm::Perm;
use crate::GroupError;

/// Normalizer of `h` in `g`, by direct scan: x normalizes iff it conjugates
/// every generator of `h` back into `h`.
pub fn normalizer(g: &Group, h: &Group) -> Result<Group, GroupError> {
    if !g.has_subgroup(h) {
        return Err(GroupError::NotASubgroup);
    }
    let elems: Vec<Perm> = g
        .elements()
        .iter()
        .filter(|x| h.generators().iter().all(|s| h.contains(&s.conjugate_by(x))))
        .cloned()
        .collect();
    Ok(Group::from_element_list(g.degree(), elems))
}

pub fn is_normal(g: &Group, h: &Group) -> bool {
    g.has_subgroup(h)
        && h.generators()
            .iter()
            .all(|s| g.generators().iter().all(|x| h.contains(&s.conjugate_by(x))))
}

/// Smallest subgroup containing `seeds` that is closed under conjugation by `g`.
pub fn normal_closure(g: &Group, seeds: &[Perm]) -> Result<Group, GroupError> {
    let mut gens: Vec<Perm> = seeds.to_vec();
    let mut current = g.subgroup_closure(&gens)?;
    loop {
        let mut grew = false;
        let mut new_gens = Vec::new();
        for s in &gens {
            for x in g.generators() {
                let c = s.conjugate_by(x);
                if !current.contains(&c) {
                    new_gens.push(c);
                    grew = true;
                }
            }
        }
        if !grew {
            return Ok(current);
        }
        gens.extend(new_gens);
        current = g.subgroup_closure(&gens)?;
    }
}

/// Derived subgroup: normal closure of the commutators of the generators.
pub fn derived_subgroup(g: &Group) -> Result<Group, GroupError> {
    let mut comms = Vec::new();
    for (i, a) in g.generators().iter().enumerate() {
        for b in &g.generators()[i..] {
            // [a,b] = a^-1 b^-1 a b
            let c = a
                .inverse()
                .compose(&b.inverse())
                .compose(a)
                .compose(b);
            if !c.is_identity() {
                comms.push(c);
            }
        }
    }
    normal_closure(g, &comms)
}

pub fn is_solvable(g: &Group) -> bool {
    let mut current = g.clone();
    loop {
        let next = derived_subgroup(&current).expect("derived subgroup fits in parent");
        if next.order() == current.order() {
            return current.is_trivial();
        }
        current = next;
    }
}

/// Frattini subgroup of a p-group: the smallest normal subgroup with
/// elementary abelian quotient, generated (as a normal subgroup) by
/// commutators and p-th powers of the generators.
pub fn frattini_subgroup(p_group: &Group, p: u64) -> Result<Group, GroupError> {
    let order = p_group.order();
    if !is_p_power(order, p) {
        return Err(GroupError::NotAPGroup);
    }
    let mut seeds = Vec::new();
    for (i, a) in p_group.generators().iter().enumerate() {
        for b in &p_group.generators()[i..] {
            let c = a.inverse().compose(&b.inverse()).compose(a).compose(b);
            if !c.is_identity() {
                seeds.push(c);
            }
        }
        let ap = a.pow(p as i64);
        if !ap.is_identity() {
            seeds.push(ap);
        }
    }
    normal_closure(p_group, &seeds)
}

fn is_p_power(mut n: u64, p: u64) -> bool {
    while n % p == 0 {
        n /= p;
    }
    n == 1
}

/// Largest normal subgroup of order coprime to p. An element lies in it
/// exactly when its normal closure is a p'-group, so it is generated by the
/// classes whose normal closures avoid p.
pub fn p_prime_core(g: &Group, p: u64, classes: &crate::classes::ClassData) -> Result<Group, GroupError> {
    let mut seeds: Vec<Perm> = Vec::new();
    for c in &classes.classes {
        if c.element_order % p == 0 {
            continue;
        }
        let ncl = normal_closure(g, std::slice::from_ref(&c.rep))?;
        if ncl.order() % p != 0 {
            seeds.push(c.rep.clone());
        }
    }
    if seeds.is_empty() {
        return Ok(Group::from_element_list(g.degree(), vec![g.identity()]));
    }
    let core = normal_closure(g, &seeds)?;
    debug_assert!(core.order() % p != 0);
    Ok(core)
}
