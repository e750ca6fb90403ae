use crate::group::Group;
use crate::perm::Perm;
use crate::subgroup::is_normal;
use crate::GroupError;

/// A quotient G/N realized as a permutation group on the right cosets of N.
pub struct Quotient {
    pub group: Group,
    /// coset id of each element of the parent, indexed by parent element index
    pub coset_of: Vec<u32>,
    /// parent element index of each coset's lexicographically least member
    pub coset_reps: Vec<u32>,
    /// index of the coset containing the identity
    pub identity_coset: u32,
}

impl Quotient {
    /// Image of a parent element under the quotient map.
    pub fn image(&self, g: &Group, x: &Perm) -> Option<Perm> {
        g.element_index(x)?;
        let images: Vec<u32> = self
            .coset_reps
            .iter()
            .map(|&r| {
                let moved = g.element(r).compose(x);
                self.coset_of[g.element_index(&moved).unwrap() as usize]
            })
            .collect();
        Perm::from_images(images).ok()
    }

    /// Parent element index of a canonical preimage of a quotient element.
    pub fn preimage_rep(&self, q: &Perm) -> u32 {
        self.coset_reps[q.apply(self.identity_coset) as usize]
    }
}

/// Quotient by a normal subgroup, via the action on right cosets `N x`.
///
/// The kernel of this action is N itself whenever N is normal; we verify that
/// by checking `|image| * |N| == |G|` and report an internal error otherwise
/// rather than silently returning a proper quotient of G/N.
pub fn quotient_group(g: &Group, n: &Group) -> Result<Quotient, GroupError> {
    if !is_normal(g, n) {
        return Err(GroupError::NotNormal);
    }
    let order = g.order() as usize;
    let n_order = n.order() as usize;
    let mut coset_of = vec![u32::MAX; order];
    let mut coset_reps: Vec<u32> = Vec::new();
    for i in 0..order as u32 {
        if coset_of[i as usize] != u32::MAX {
            continue;
        }
        let cid = coset_reps.len() as u32;
        coset_reps.push(i);
        let x = g.element(i);
        for h in n.elements() {
            let hx = h.compose(x);
            let j = g.element_index(&hx).ok_or(GroupError::NotASubgroup)?;
            coset_of[j as usize] = cid;
        }
    }
    let num_cosets = coset_reps.len();
    debug_assert_eq!(num_cosets * n_order, order);
    let gen_images: Vec<Perm> = g
        .generators()
        .iter()
        .map(|gen| {
            let images: Vec<u32> = coset_reps
                .iter()
                .map(|&r| {
                    let moved = g.element(r).compose(gen);
                    coset_of[g.element_index(&moved).unwrap() as usize]
                })
                .collect();
            Perm::from_images(images)
        })
        .collect::<Result<_, _>>()?;
    let group = Group::from_generators_capped(num_cosets, gen_images, num_cosets + 1)?;
    // kernel check: the action of G on G/N must have image of size exactly |G:N|
    if group.order() as usize * n_order != order {
        return Err(GroupError::QuotientKernelMismatch);
    }
    let identity_coset = coset_of[0];
    Ok(Quotient {
        group,
        coset_of,
        coset_reps,
        identity_coset,
    })
}
