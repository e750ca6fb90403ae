//! Finite permutation groups at desk scale: full enumeration, conjugacy
//! classes, centralizers/normalizers, Sylow subgroups, quotients, and a
//! small library of named constructions.

mod classes;
mod construct;
mod group;
mod perm;
mod quotient;
mod subgroup;
mod sylow;

pub use classes::{centralizer, conjugacy_classes, power_map, ClassData, ConjClass};
pub use construct::{
    alt, construct, cyclic, dihedral, direct_product, elementary_abelian_semidirect, frobenius,
    quaternion, sl2_5, sym, Construction, GroupSpec,
};
pub use group::{Group, DEFAULT_ORDER_CAP};
pub use perm::Perm;
pub use quotient::{quotient_group, Quotient};
pub use subgroup::{
    derived_subgroup, frattini_subgroup, is_normal, is_solvable, normal_closure, normalizer,
    p_prime_core,
};
pub use sylow::{p_part, sylow_subgroup};

use sha2::{Digest, Sha256};

#[derive(Debug, thiserror::Error)]
pub enum GroupError {
    #[error("image array is not a permutation")]
    NotAPermutation,
    #[error("permutation degree does not match the group")]
    DegreeMismatch,
    #[error("group order exceeds enumeration cap {0}")]
    OrderCapExceeded(usize),
    #[error("element does not belong to the group")]
    NotInGroup,
    #[error("not a subgroup")]
    NotASubgroup,
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("group is not a p-group")]
    NotAPGroup,
    #[error("coset action kernel differs from the given normal subgroup")]
    QuotientKernelMismatch,
    #[error("invalid construction: {0}")]
    InvalidConstruction(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub(crate) fn construct_is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Stable fingerprint of a group: order, degree, class shape, and a digest of
/// the generator images. Used as a cache / report key.
pub fn fingerprint(g: &Group, classes: &ClassData) -> String {
    let mut hasher = Sha256::new();
    hasher.update(g.order().to_le_bytes());
    hasher.update((g.degree() as u64).to_le_bytes());
    for c in &classes.classes {
        hasher.update(c.element_order.to_le_bytes());
        hasher.update(c.size.to_le_bytes());
    }
    for gen in g.generators() {
        for &x in gen.images() {
            hasher.update(x.to_le_bytes());
        }
    }
    let digest = hasher.finalize();
    let mut out = String::with_capacity(16);
    for b in digest.iter().take(8) {
        out.push_str(&format!("{b:02x}"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fingerprints_distinguish_and_repeat() {
        let s4 = construct(&Construction::Sym(4)).unwrap();
        let cd = conjugacy_classes(&s4);
        let a = fingerprint(&s4, &cd);
        let b = fingerprint(&s4, &cd);
        assert_eq!(a, b);
        let d12 = construct(&Construction::Dihedral(12)).unwrap();
        let cd2 = conjugacy_classes(&d12);
        assert_ne!(a, fingerprint(&d12, &cd2));
    }
}
