use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::classes::ClassData;
use crate::group::Group;
use crate::perm::Perm;
use crate::GroupError;

/// Fixed seed so Sylow subgroup selection is reproducible run to run.
const SYLOW_SEED: u64 = 0x53594c4f57;

pub fn p_part(mut n: u64, p: u64) -> u64 {
    let mut q = 1;
    while n % p == 0 {
        n /= p;
        q *= p;
    }
    q
}

/// A Sylow p-subgroup, grown greedily from p-elements: starting from the
/// trivial subgroup, adjoin (in seeded shuffled order) any p-element that
/// keeps the closure a p-group. Any proper p-subgroup sits inside the
/// normalizer-in-a-Sylow of itself, so some listed p-element always extends
/// it and the greedy pass reaches full p-part order.
pub fn sylow_subgroup(g: &Group, classes: &ClassData, p: u64) -> Result<Group, GroupError> {
    if p < 2 || !crate::construct_is_prime(p) {
        return Err(GroupError::NotPrime(p));
    }
    let target = p_part(g.order(), p);
    if target == 1 {
        return Ok(Group::from_element_list(g.degree(), vec![g.identity()]));
    }
    let mut p_elements: Vec<u32> = Vec::new();
    for c in &classes.classes {
        if c.element_order > 1 && is_power_of(c.element_order, p) {
            p_elements.extend_from_slice(&c.members);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SYLOW_SEED ^ p);
    p_elements.shuffle(&mut rng);

    let mut gens: Vec<Perm> = Vec::new();
    let mut current = g.subgroup_closure(&[])?;
    loop {
        let before = current.order();
        for &i in &p_elements {
            let x = g.element(i);
            if current.contains(x) {
                continue;
            }
            let mut trial = gens.clone();
            trial.push(x.clone());
            let bigger = g.subgroup_closure(&trial)?;
            if is_power_of(bigger.order(), p) {
                gens = trial;
                current = bigger;
                if current.order() == target {
                    return Ok(current);
                }
            }
        }
        if current.order() == before {
            return Err(GroupError::Internal(
                "sylow growth stalled below the p-part".into(),
            ));
        }
    }
}

fn is_power_of(mut n: u64, p: u64) -> bool {
    if n == 1 {
        return true;
    }
    while n % p == 0 {
        n /= p;
    }
    n == 1
}
