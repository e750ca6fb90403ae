//! Modular stage of table computation for non-abelian groups: the joint
//! eigenvectors of the class-sum matrices over F_l are the central
//! characters, and the character degrees follow from the first
//! orthogonality relation. Everything here happens modulo the working
//! prime; the exact values are reconstructed afterwards from the residues.

use group_engine::{ClassData, Group};

use crate::modl::{poly_roots, Fl, MatFl};
use crate::CharTableError;

/// Character data modulo the working prime, one row per irreducible, in
/// eigenvector-discovery order (the caller sorts).
pub struct ModularTable {
    pub degrees: Vec<u64>,
    pub rows_modl: Vec<Vec<u64>>,
}

/// Transposed class-sum matrix: entry (j, t) counts x in class i with
/// x^(-1) * rep_j in class t, reduced mod l. Row vectors w with
/// w A = lambda w are the central-character candidates.
fn class_matrix(g: &Group, cd: &ClassData, i: usize, f: Fl) -> MatFl {
    let k = cd.count();
    let mut a = MatFl::zero(k, k);
    for &xi in &cd.classes[i].members {
        let xinv = g.element(xi).inverse();
        for j in 0..k {
            let prod = xinv.compose(&cd.classes[j].rep);
            let idx = g.element_index(&prod).expect("class product stays in the group");
            let t = cd.class_of[idx as usize] as usize;
            a.data[j * k + t] += 1;
        }
    }
    for v in a.data.iter_mut() {
        *v %= f.l;
    }
    a
}

/// Joint row-eigenvector computation: the full space F_l^k is split along
/// eigenvalues of one class matrix at a time (classes in ascending order of
/// element order, so coarse geometric splits happen first) until every
/// invariant subspace is a line. Each subspace is kept as a reduced
/// row-echelon basis with its pivot columns, so the restriction of the next
/// class matrix is read off directly.
pub fn modular_table(
    g: &Group,
    cd: &ClassData,
    f: Fl,
) -> Result<ModularTable, CharTableError> {
    let k = cd.count();
    debug_assert_eq!(cd.classes[0].element_order, 1, "identity class must come first");
    let mut spaces: Vec<(MatFl, Vec<usize>)> = vec![(MatFl::identity(k), (0..k).collect())];
    for i in 1..k {
        if spaces.iter().all(|(b, _)| b.rows == 1) {
            break;
        }
        let a = class_matrix(g, cd, i, f);
        let mut next: Vec<(MatFl, Vec<usize>)> = Vec::with_capacity(spaces.len());
        for (b, piv) in spaces {
            let dim = b.rows;
            if dim == 1 {
                next.push((b, piv));
                continue;
            }
            // restriction R of the action w -> w A to the row space of B:
            // B A = R B, and since B is in rref, R = (B A) at the pivot columns
            let ba = b.matmul(&a, f);
            let mut r = MatFl::zero(dim, dim);
            for rr in 0..dim {
                for (cc, &pc) in piv.iter().enumerate() {
                    r.set(rr, cc, ba.at(rr, pc));
                }
            }
            let roots = poly_roots(&r.charpoly(f), f);
            if roots.len() <= 1 {
                next.push((b, piv));
                continue;
            }
            let mut rt = MatFl::zero(dim, dim);
            for x in 0..dim {
                for y in 0..dim {
                    rt.set(y, x, r.at(x, y));
                }
            }
            let mut split_total = 0;
            for &lam in &roots {
                let mut m = rt.clone();
                for d in 0..dim {
                    m.set(d, d, f.sub(m.at(d, d), lam));
                }
                // rows c with c R = lam c; mapped back to row vectors c B
                let coeffs = m.nullspace(f);
                if coeffs.rows == 0 {
                    return Err(CharTableError::Internal(
                        "eigenvalue with empty eigenspace".into(),
                    ));
                }
                split_total += coeffs.rows;
                let mut nb = coeffs.matmul(&b, f);
                let npiv = nb.rref(f);
                if npiv.len() != coeffs.rows {
                    return Err(CharTableError::Internal(
                        "eigenspace basis lost rank under change of coordinates".into(),
                    ));
                }
                nb.data.truncate(npiv.len() * k);
                nb.rows = npiv.len();
                next.push((nb, npiv));
            }
            if split_total != dim {
                return Err(CharTableError::Internal(
                    "class matrix not diagonalizable on invariant subspace".into(),
                ));
            }
        }
        spaces = next;
    }
    if spaces.len() != k || spaces.iter().any(|(b, _)| b.rows != 1) {
        return Err(CharTableError::Internal(
            "class matrices failed to separate the central characters".into(),
        ));
    }

    // normalize: omega_0 = 1 at the identity class
    let mut omegas: Vec<Vec<u64>> = Vec::with_capacity(k);
    for (b, _) in &spaces {
        let w = b.row(0);
        if w[0] == 0 {
            return Err(CharTableError::Internal(
                "central character vanishes at the identity class".into(),
            ));
        }
        let inv = f.inv(w[0]);
        omegas.push(w.iter().map(|&x| f.mul(x, inv)).collect());
    }

    // degrees from the first orthogonality relation:
    // d^2 = |G| / sum_j omega_j conj(omega_j) / |K_j|, with the unique
    // integer square root below sqrt(|G|) < l/2 recovered by scan
    let order = g.order();
    let inv_class: Vec<usize> = (0..k).map(|j| cd.inverse_class(g, j)).collect();
    let size_inv: Vec<u64> = (0..k).map(|j| f.inv(cd.classes[j].size % f.l)).collect();
    let gmod = order % f.l;
    let dmax = order.isqrt();
    let mut degrees = Vec::with_capacity(k);
    let mut rows_modl = Vec::with_capacity(k);
    for w in &omegas {
        let mut s = 0u64;
        for j in 0..k {
            s = f.add(s, f.mul(f.mul(w[j], w[inv_class[j]]), size_inv[j]));
        }
        if s == 0 {
            return Err(CharTableError::Internal(
                "degree normalization sum vanished".into(),
            ));
        }
        let d2 = f.mul(gmod, f.inv(s));
        let d = (1..=dmax)
            .find(|&d| f.mul(d, d) == d2)
            .ok_or_else(|| CharTableError::Internal("no integer degree matches".into()))?;
        rows_modl.push((0..k).map(|j| f.mul(d, f.mul(w[j], size_inv[j]))).collect());
        degrees.push(d);
    }
    let sq: u128 = degrees.iter().map(|&d| d as u128 * d as u128).sum();
    if sq != order as u128 {
        return Err(CharTableError::Internal(
            "degree squares do not sum to the group order".into(),
        ));
    }
    Ok(ModularTable { degrees, rows_modl })
}
