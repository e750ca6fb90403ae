//! Matrix groups over a prime field, shadowed by their permutation action
//! on the vectors of `F_p^n`.

use std::collections::HashMap;

use bounds_numbers::is_prime_u64;
use group_engine::{Group, Perm, DEFAULT_ORDER_CAP};
use serde::{Deserialize, Serialize};

use crate::AffineError;

/// A finite subgroup of `GL_n(p)` whose order is coprime to `p`, carried
/// together with its faithful permutation action on all `p^n` vectors.
///
/// Matrices are flat row-major slices of length `n²` with entries reduced
/// mod `p`, acting on column vectors. Vector `v` is encoded as the point
/// `Σ v[i]·p^i`, exactly the encoding used by the affine constructions in
/// `group-engine`, so the two views can be mixed freely.
#[derive(Debug, Clone)]
pub struct MatGroup {
    pub p: u64,
    pub n: usize,
    /// Generators as given, reduced mod `p`.
    pub generators: Vec<Vec<u64>>,
    /// Order of the group; always coprime to `p` and equal to the shadow's
    /// order.
    pub order: u64,
    /// The action on the `p^n` vectors, one point per vector.
    pub perm_shadow: Group,
}

impl MatGroup {
    /// Closes the given invertible matrices into a group through the
    /// permutation shadow.
    ///
    /// Fails if `p` is not prime, a generator is singular or misshapen,
    /// `p^n` exceeds the enumeration cap, or the closed group's order is
    /// divisible by `p` (the coprimality requirement is a constructor-level
    /// invariant: every operation in this crate assumes it).
    pub fn new(p: u64, n: usize, mats: &[Vec<u64>]) -> Result<MatGroup, AffineError> {
        if !is_prime_u64(p) {
            return Err(AffineError::NotPrime(p));
        }
        if n == 0 {
            return Err(AffineError::BadDimension(n));
        }
        let q = checked_point_count(p, n)?;
        let mut generators = Vec::with_capacity(mats.len());
        for (index, m) in mats.iter().enumerate() {
            if m.len() != n * n {
                return Err(AffineError::MatrixShape {
                    expected: n * n,
                    got: m.len(),
                });
            }
            let reduced: Vec<u64> = m.iter().map(|&x| x % p).collect();
            if rank_mod(p, n, &reduced) != n {
                return Err(AffineError::SingularGenerator { index });
            }
            generators.push(reduced);
        }
        let perms = generators
            .iter()
            .map(|m| matrix_perm(p, n, q, m))
            .collect::<Result<Vec<_>, _>>()?;
        let perm_shadow = Group::from_generators(q, perms)?;
        let order = perm_shadow.order();
        if order % p == 0 {
            return Err(AffineError::NotCoprime { p, order });
        }
        Ok(MatGroup {
            p,
            n,
            generators,
            order,
            perm_shadow,
        })
    }

    /// The matrix of the `i`-th shadow element, recovered from the images
    /// of the basis vectors (column `j` is the image of `e_j`).
    pub fn element_matrix(&self, i: u32) -> Vec<u64> {
        let g = self.perm_shadow.element(i);
        let mut mat = vec![0u64; self.n * self.n];
        let mut basis_index = 1usize;
        for j in 0..self.n {
            let image = index_to_vec(self.p, self.n, g.apply(basis_index as u32) as usize);
            for (row, &entry) in image.iter().enumerate() {
                mat[row * self.n + j] = entry;
            }
            basis_index *= self.p as usize;
        }
        mat
    }
}

/// JSON shape for matrix-group input: generators as nested rows,
/// `{"p": 11, "n": 2, "generators": [[[0,1],[10,4]], ...]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MatGroupSpec {
    pub p: u64,
    pub n: usize,
    pub generators: Vec<Vec<Vec<u64>>>,
}

impl MatGroupSpec {
    /// Flattens the row lists and closes the group.
    pub fn build(&self) -> Result<MatGroup, AffineError> {
        let expected = self.n * self.n;
        let mut flat = Vec::with_capacity(self.generators.len());
        for mat in &self.generators {
            let m: Vec<u64> = mat.iter().flatten().copied().collect();
            if mat.iter().any(|row| row.len() != self.n) || m.len() != expected {
                return Err(AffineError::MatrixShape {
                    expected,
                    got: m.len(),
                });
            }
            flat.push(m);
        }
        MatGroup::new(self.p, self.n, &flat)
    }
}

/// `p^n` as a point count, or the cap error if it cannot be enumerated.
pub(crate) fn checked_point_count(p: u64, n: usize) -> Result<usize, AffineError> {
    let cap = DEFAULT_ORDER_CAP as u128;
    let mut q: u128 = 1;
    for _ in 0..n {
        q *= p as u128;
        if q > cap {
            return Err(AffineError::CapExceeded {
                needed: q,
                cap: DEFAULT_ORDER_CAP as u64,
            });
        }
    }
    Ok(q as usize)
}

fn matrix_perm(p: u64, n: usize, q: usize, mat: &[u64]) -> Result<Perm, AffineError> {
    let images: Vec<u32> = (0..q)
        .map(|i| {
            let v = index_to_vec(p, n, i);
            vec_to_index(p, &mat_vec(p, n, mat, &v)) as u32
        })
        .collect();
    Perm::from_images(images).map_err(AffineError::from)
}

pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    (a as u128 * b as u128 % p as u128) as u64
}

pub(crate) fn mat_vec(p: u64, n: usize, mat: &[u64], v: &[u64]) -> Vec<u64> {
    (0..n)
        .map(|i| {
            let mut acc: u128 = 0;
            for j in 0..n {
                acc = (acc + mat[i * n + j] as u128 * v[j] as u128) % p as u128;
            }
            acc as u64
        })
        .collect()
}

pub(crate) fn mat_mul(p: u64, n: usize, a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut out = vec![0u64; n * n];
    for i in 0..n {
        for j in 0..n {
            let mut acc: u128 = 0;
            for k in 0..n {
                acc = (acc + a[i * n + k] as u128 * b[k * n + j] as u128) % p as u128;
            }
            out[i * n + j] = acc as u64;
        }
    }
    out
}

pub(crate) fn mat_identity(n: usize) -> Vec<u64> {
    let mut m = vec![0u64; n * n];
    for i in 0..n {
        m[i * n + i] = 1;
    }
    m
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, p);
        }
        b = mul_mod(b, b, p);
        e >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

/// Rank of an `n×n` matrix over `F_p` by Gaussian elimination; safe for
/// primes of any size expressible in `u64`.
pub(crate) fn rank_mod(p: u64, n: usize, mat: &[u64]) -> usize {
    let mut a: Vec<Vec<u64>> = (0..n).map(|i| mat[i * n..(i + 1) * n].to_vec()).collect();
    let mut rank = 0;
    for col in 0..n {
        let Some(pivot) = (rank..n).find(|&r| a[r][col] % p != 0) else {
            continue;
        };
        a.swap(rank, pivot);
        let inv = inv_mod(a[rank][col], p);
        for r in 0..n {
            if r != rank && a[r][col] != 0 {
                let f = mul_mod(a[r][col], inv, p);
                for c in 0..n {
                    let sub = mul_mod(f, a[rank][c], p);
                    a[r][c] = (a[r][c] + p - sub) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// `dim ker(m − 1)`, the dimension of the fixed space of `m` on `F_p^n`.
pub(crate) fn fixed_space_dim(p: u64, n: usize, mat: &[u64]) -> usize {
    let mut shifted = mat.to_vec();
    for i in 0..n {
        shifted[i * n + i] = (shifted[i * n + i] + p - 1) % p;
    }
    n - rank_mod(p, n, &shifted)
}

/// Inverse of an invertible matrix over `F_p` by Gauss–Jordan elimination.
pub(crate) fn mat_inverse(p: u64, n: usize, mat: &[u64]) -> Option<Vec<u64>> {
    let mut a: Vec<Vec<u64>> = (0..n).map(|i| mat[i * n..(i + 1) * n].to_vec()).collect();
    let mut b: Vec<Vec<u64>> = (0..n)
        .map(|i| (0..n).map(|j| u64::from(i == j)).collect())
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| a[r][col] % p != 0)?;
        a.swap(col, pivot);
        b.swap(col, pivot);
        let inv = inv_mod(a[col][col], p);
        for c in 0..n {
            a[col][c] = mul_mod(a[col][c], inv, p);
            b[col][c] = mul_mod(b[col][c], inv, p);
        }
        for r in 0..n {
            if r != col && a[r][col] != 0 {
                let f = a[r][col];
                for c in 0..n {
                    let sub = mul_mod(f, a[col][c], p);
                    a[r][c] = (a[r][c] + p - sub) % p;
                    let sub = mul_mod(f, b[col][c], p);
                    b[r][c] = (b[r][c] + p - sub) % p;
                }
            }
        }
    }
    Some(b.concat())
}

pub(crate) fn index_to_vec(p: u64, n: usize, mut idx: usize) -> Vec<u64> {
    let mut v = vec![0u64; n];
    for slot in v.iter_mut() {
        *slot = (idx % p as usize) as u64;
        idx /= p as usize;
    }
    v
}

pub(crate) fn vec_to_index(p: u64, v: &[u64]) -> usize {
    v.iter()
        .rev()
        .fold(0usize, |acc, &c| acc * p as usize + c as usize)
}

/// Validates generator matrices and closes them by breadth-first
/// multiplication, entirely in matrix arithmetic — no vectors are ever
/// touched, so `p` may be astronomically large. Returns the reduced
/// generators and the full element list.
pub(crate) fn symbolic_elements(
    p: u64,
    n: usize,
    mats: &[Vec<u64>],
) -> Result<(Vec<Vec<u64>>, Vec<Vec<u64>>), AffineError> {
    if !is_prime_u64(p) {
        return Err(AffineError::NotPrime(p));
    }
    if n == 0 {
        return Err(AffineError::BadDimension(n));
    }
    let mut gens = Vec::with_capacity(mats.len());
    for (index, m) in mats.iter().enumerate() {
        if m.len() != n * n {
            return Err(AffineError::MatrixShape {
                expected: n * n,
                got: m.len(),
            });
        }
        let reduced: Vec<u64> = m.iter().map(|&x| x % p).collect();
        if rank_mod(p, n, &reduced) != n {
            return Err(AffineError::SingularGenerator { index });
        }
        gens.push(reduced);
    }
    let cap = DEFAULT_ORDER_CAP;
    let mut seen: HashMap<Vec<u64>, usize> = HashMap::new();
    let mut elements = vec![mat_identity(n)];
    seen.insert(elements[0].clone(), 0);
    let mut cursor = 0;
    while cursor < elements.len() {
        let current = elements[cursor].clone();
        cursor += 1;
        for g in &gens {
            let next = mat_mul(p, n, &current, g);
            if !seen.contains_key(&next) {
                if elements.len() >= cap {
                    return Err(AffineError::CapExceeded {
                        needed: elements.len() as u128 + 1,
                        cap: cap as u64,
                    });
                }
                seen.insert(next.clone(), elements.len());
                elements.push(next);
            }
        }
    }
    if elements.len() as u64 % p == 0 {
        return Err(AffineError::NotCoprime {
            p,
            order: elements.len() as u64,
        });
    }
    Ok((gens, elements))
}

/// Number of conjugacy classes of the matrix group with the given element
/// list: each class is flooded from an unvisited element by conjugation
/// with the generators.
pub(crate) fn matrix_class_count(
    p: u64,
    n: usize,
    gens: &[Vec<u64>],
    elements: &[Vec<u64>],
) -> Result<u64, AffineError> {
    let mut actions = Vec::with_capacity(gens.len());
    for g in gens {
        let inv = mat_inverse(p, n, g)
            .ok_or_else(|| AffineError::Internal("generator lost invertibility".into()))?;
        actions.push((g.clone(), inv));
    }
    let mut seen: HashMap<&[u64], bool> = elements.iter().map(|m| (m.as_slice(), false)).collect();
    let mut count = 0u64;
    for start in elements {
        if seen[start.as_slice()] {
            continue;
        }
        count += 1;
        let mut frontier = vec![start.clone()];
        *seen.get_mut(start.as_slice()).unwrap() = true;
        while let Some(x) = frontier.pop() {
            for (g, g_inv) in &actions {
                let conj = mat_mul(p, n, &mat_mul(p, n, g_inv, &x), g);
                let visited = seen
                    .get_mut(conj.as_slice())
                    .ok_or_else(|| AffineError::Internal("conjugate left the element list".into()))?;
                if !*visited {
                    *visited = true;
                    frontier.push(conj);
                }
            }
        }
    }
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sl2_5_in_gl2_11() -> Vec<Vec<u64>> {
        vec![vec![0, 1, 10, 4], vec![0, 2, 5, 0]]
    }

    #[test]
    fn closure_orders_match_expectations() {
        let h = MatGroup::new(5, 1, &[vec![2]]).unwrap();
        assert_eq!(h.order, 4);
        assert_eq!(h.perm_shadow.degree(), 5);

        let trivial = MatGroup::new(7, 1, &[vec![1]]).unwrap();
        assert_eq!(trivial.order, 1);

        let h = MatGroup::new(11, 2, &sl2_5_in_gl2_11()).unwrap();
        assert_eq!(h.order, 120);
        assert_eq!(h.perm_shadow.degree(), 121);
    }

    #[test]
    fn constructor_rejects_bad_input() {
        assert!(matches!(
            MatGroup::new(6, 1, &[vec![1]]),
            Err(AffineError::NotPrime(6))
        ));
        assert!(matches!(
            MatGroup::new(5, 0, &[]),
            Err(AffineError::BadDimension(0))
        ));
        assert!(matches!(
            MatGroup::new(5, 2, &[vec![1, 1]]),
            Err(AffineError::MatrixShape { expected: 4, got: 2 })
        ));
        assert!(matches!(
            MatGroup::new(5, 2, &[vec![1, 1, 2, 2]]),
            Err(AffineError::SingularGenerator { index: 0 })
        ));
        // 101^3 vectors exceed the million-point cap.
        assert!(matches!(
            MatGroup::new(101, 3, &[]),
            Err(AffineError::CapExceeded { .. })
        ));
        // GL_2(3) has order 48, divisible by 3: not a coprime action.
        let gl23 = [
            vec![1, 1, 0, 1],
            vec![0, 2, 1, 0],
            vec![2, 0, 0, 1],
        ];
        assert!(matches!(
            MatGroup::new(3, 2, &gl23),
            Err(AffineError::NotCoprime { p: 3, order: 48 })
        ));
    }

    #[test]
    fn element_matrices_reproduce_the_shadow() {
        let h = MatGroup::new(11, 2, &sl2_5_in_gl2_11()).unwrap();
        for i in 0..h.order as u32 {
            let m = h.element_matrix(i);
            assert_eq!(rank_mod(11, 2, &m), 2);
            let rebuilt = matrix_perm(11, 2, 121, &m).unwrap();
            assert_eq!(&rebuilt, h.perm_shadow.element(i));
        }
    }

    #[test]
    fn symbolic_closure_matches_shadow_closure() {
        let (gens, elements) = symbolic_elements(11, 2, &sl2_5_in_gl2_11()).unwrap();
        assert_eq!(elements.len(), 120);
        // Quaternion subgroup of SL_2(3): eight elements, five classes.
        let q8 = [vec![0, 2, 1, 0], vec![1, 1, 1, 2]];
        let (q8_gens, q8_elements) = symbolic_elements(3, 2, &q8).unwrap();
        assert_eq!(q8_elements.len(), 8);
        assert_eq!(matrix_class_count(3, 2, &q8_gens, &q8_elements).unwrap(), 5);
        assert_eq!(matrix_class_count(11, 2, &gens, &elements).unwrap(), 9);
    }

    #[test]
    fn inverse_and_rank_are_consistent() {
        let m = vec![2, 3, 1, 4]; // det 5 = 0 mod 5, invertible mod 7
        assert_eq!(rank_mod(5, 2, &m), 1);
        assert_eq!(rank_mod(7, 2, &m), 2);
        let inv = mat_inverse(7, 2, &m).unwrap();
        assert_eq!(mat_mul(7, 2, &m, &inv), mat_identity(2));
        assert!(mat_inverse(5, 2, &m).is_none());
    }

    #[test]
    fn fixed_space_dimensions() {
        assert_eq!(fixed_space_dim(5, 2, &mat_identity(2)), 2);
        // −1 on F_5^2 fixes only the origin.
        assert_eq!(fixed_space_dim(5, 2, &[4, 0, 0, 4]), 0);
        // A transvection fixes a line.
        assert_eq!(fixed_space_dim(5, 2, &[1, 1, 0, 1]), 1);
    }

    #[test]
    fn json_spec_round_trip() {
        let spec: MatGroupSpec = serde_json::from_str(
            r#"{"p": 11, "n": 2, "generators": [[[0,1],[10,4]], [[0,2],[5,0]]]}"#,
        )
        .unwrap();
        let h = spec.build().unwrap();
        assert_eq!(h.order, 120);
        let bad: MatGroupSpec =
            serde_json::from_str(r#"{"p": 5, "n": 2, "generators": [[[1,0],[0]]]}"#).unwrap();
        assert!(matches!(bad.build(), Err(AffineError::MatrixShape { .. })));
    }
}
