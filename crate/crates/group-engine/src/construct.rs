use serde::{Deserialize, Serialize};

use crate::group::Group;
use crate::perm::Perm;
use crate::GroupError;

/// Named group constructions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Construction {
    Cyclic(u64),
    Dihedral(u64),
    Sym(u32),
    Alt(u32),
    /// C_{p^n} : C_e with e | p-1 acting faithfully and fixed-point-freely
    Frobenius(u64, u32, u64),
    /// F_p^n : H with H given by invertible matrices (row-major, mod p),
    /// acting affinely on p^n points
    ElementaryAbelianSemidirect {
        p: u64,
        n: u32,
        matrices: Vec<Vec<u64>>,
    },
    /// SL(2,5) on the 24 nonzero vectors of F_5^2
    Sl2_5,
    /// quaternion group of order 8, regular representation
    Quaternion,
    DirectProduct(Vec<Construction>),
}

/// JSON input form: either explicit generators or a named construction.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupSpec {
    Explicit {
        degree: usize,
        generators: Vec<Vec<u32>>,
    },
    Named {
        construct: String,
        #[serde(default, skip_serializing_if = "Vec::is_empty")]
        params: Vec<u64>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        matrices: Option<Vec<Vec<u64>>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        factors: Option<Vec<GroupSpec>>,
    },
}

impl GroupSpec {
    pub fn build(&self) -> Result<Group, GroupError> {
        match self {
            GroupSpec::Explicit { degree, generators } => {
                let gens = generators
                    .iter()
                    .map(|v| Perm::from_images(v.clone()))
                    .collect::<Result<Vec<_>, _>>()?;
                Group::from_generators(*degree, gens)
            }
            GroupSpec::Named { .. } => construct(&self.to_construction()?),
        }
    }

    pub fn to_construction(&self) -> Result<Construction, GroupError> {
        let GroupSpec::Named {
            construct: name,
            params,
            matrices,
            factors,
        } = self
        else {
            return Err(GroupError::InvalidConstruction(
                "explicit generator spec has no construction name".into(),
            ));
        };
        let want = |k: usize| -> Result<(), GroupError> {
            if params.len() == k {
                Ok(())
            } else {
                Err(GroupError::InvalidConstruction(format!(
                    "{name} expects {k} numeric parameter(s), got {}",
                    params.len()
                )))
            }
        };
        match name.as_str() {
            "cyclic" => {
                want(1)?;
                Ok(Construction::Cyclic(params[0]))
            }
            "dihedral" => {
                want(1)?;
                Ok(Construction::Dihedral(params[0]))
            }
            "sym" => {
                want(1)?;
                Ok(Construction::Sym(params[0] as u32))
            }
            "alt" => {
                want(1)?;
                Ok(Construction::Alt(params[0] as u32))
            }
            "frobenius" => {
                want(3)?;
                Ok(Construction::Frobenius(params[0], params[1] as u32, params[2]))
            }
            "elementary_abelian_semidirect" => {
                want(2)?;
                let mats = matrices.clone().ok_or_else(|| {
                    GroupError::InvalidConstruction(
                        "elementary_abelian_semidirect requires \"matrices\"".into(),
                    )
                })?;
                Ok(Construction::ElementaryAbelianSemidirect {
                    p: params[0],
                    n: params[1] as u32,
                    matrices: mats,
                })
            }
            "sl2_5" => Ok(Construction::Sl2_5),
            "quaternion" => {
                if params.as_slice() != [8] && !params.is_empty() {
                    return Err(GroupError::InvalidConstruction(
                        "only quaternion order 8 is supported".into(),
                    ));
                }
                Ok(Construction::Quaternion)
            }
            "direct_product" => {
                let fs = factors.clone().ok_or_else(|| {
                    GroupError::InvalidConstruction("direct_product requires \"factors\"".into())
                })?;
                Ok(Construction::DirectProduct(
                    fs.iter()
                        .map(|f| f.to_construction())
                        .collect::<Result<Vec<_>, _>>()?,
                ))
            }
            other => Err(GroupError::InvalidConstruction(format!(
                "unknown construction {other:?}"
            ))),
        }
    }
}

pub fn construct(c: &Construction) -> Result<Group, GroupError> {
    match *c {
        Construction::Cyclic(n) => cyclic(n),
        Construction::Dihedral(n) => dihedral(n),
        Construction::Sym(n) => sym(n),
        Construction::Alt(n) => alt(n),
        Construction::Frobenius(p, n, e) => frobenius(p, n, e),
        Construction::ElementaryAbelianSemidirect { p, n, ref matrices } => {
            elementary_abelian_semidirect(p, n, matrices)
        }
        Construction::Sl2_5 => sl2_5(),
        Construction::Quaternion => quaternion(),
        Construction::DirectProduct(ref factors) => {
            let groups = factors
                .iter()
                .map(construct)
                .collect::<Result<Vec<_>, _>>()?;
            direct_product(&groups)
        }
    }
}

pub fn cyclic(n: u64) -> Result<Group, GroupError> {
    if n == 0 {
        return Err(GroupError::InvalidConstruction("cyclic(0)".into()));
    }
    let n = n as usize;
    let shift: Vec<u32> = (0..n).map(|i| ((i + 1) % n) as u32).collect();
    Group::from_generators(n, vec![Perm::from_images(shift)?])
}

pub fn dihedral(n: u64) -> Result<Group, GroupError> {
    match n {
        0 => Err(GroupError::InvalidConstruction("dihedral(0)".into())),
        1 => cyclic(2),
        2 => {
            // Klein four group on 4 points
            let a = Perm::from_cycles(4, &[&[0, 1]])?;
            let b = Perm::from_cycles(4, &[&[2, 3]])?;
            Group::from_generators(4, vec![a, b])
        }
        n => {
            let n = n as usize;
            let rot: Vec<u32> = (0..n).map(|i| ((i + 1) % n) as u32).collect();
            let refl: Vec<u32> = (0..n).map(|i| ((n - i) % n) as u32).collect();
            Group::from_generators(
                n,
                vec![Perm::from_images(rot)?, Perm::from_images(refl)?],
            )
        }
    }
}

pub fn sym(n: u32) -> Result<Group, GroupError> {
    if n == 0 {
        return Err(GroupError::InvalidConstruction("sym(0)".into()));
    }
    let n = n as usize;
    if n == 1 {
        return Group::from_generators(1, vec![]);
    }
    let transposition = Perm::from_cycles(n, &[&[0, 1]])?;
    let cycle: Vec<u32> = (0..n).map(|i| ((i + 1) % n) as u32).collect();
    Group::from_generators(n, vec![transposition, Perm::from_images(cycle)?])
}

pub fn alt(n: u32) -> Result<Group, GroupError> {
    if n == 0 {
        return Err(GroupError::InvalidConstruction("alt(0)".into()));
    }
    let n = n as usize;
    if n <= 2 {
        return Group::from_generators(n, vec![]);
    }
    if n == 3 {
        return Group::from_generators(3, vec![Perm::from_cycles(3, &[&[0, 1, 2]])?]);
    }
    let three_cycle = Perm::from_cycles(n, &[&[0, 1, 2]])?;
    let big = if n % 2 == 1 {
        let c: Vec<u32> = (0..n).map(|i| ((i + 1) % n) as u32).collect();
        Perm::from_images(c)?
    } else {
        // (1 2 ... n-1), fixing 0
        let mut c: Vec<u32> = (0..n as u32).collect();
        for i in 1..n {
            c[i] = (i % (n - 1) + 1) as u32;
        }
        Perm::from_images(c)?
    };
    Group::from_generators(n, vec![three_cycle, big])
}

fn pow_mod(b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc: u128 = 1;
    let mm = m as u128;
    let mut bb = (b % m) as u128;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * bb % mm;
        }
        bb = bb * bb % mm;
        e >>= 1;
    }
    acc as u64
}

fn mult_order(m: u64, modulus: u64) -> u64 {
    let mut x = m % modulus;
    let mut ord = 1;
    while x != 1 {
        x = x * m % modulus;
        ord += 1;
        assert!(ord <= modulus, "not a unit");
    }
    ord
}

fn is_prime_small(p: u64) -> bool {
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

/// C_{p^n} : C_e, acting on p^n points: x -> x + 1 and x -> m*x (mod p^n),
/// where m is the least unit whose order mod p^n and mod p is exactly e.
/// Requires e | p - 1, which makes the action of the complement
/// fixed-point-free on the nonzero part.
pub fn frobenius(p: u64, n: u32, e: u64) -> Result<Group, GroupError> {
    if !is_prime_small(p) {
        return Err(GroupError::InvalidConstruction(format!("{p} is not prime")));
    }
    if n == 0 || e == 0 || (p - 1) % e != 0 {
        return Err(GroupError::InvalidConstruction(format!(
            "need n >= 1 and e | p-1; got p={p}, n={n}, e={e}"
        )));
    }
    let q = p
        .checked_pow(n)
        .filter(|&q| q <= crate::group::DEFAULT_ORDER_CAP as u64)
        .ok_or(GroupError::OrderCapExceeded(crate::group::DEFAULT_ORDER_CAP))?;
    let translation: Vec<u32> = (0..q).map(|i| ((i + 1) % q) as u32).collect();
    let mut gens = vec![Perm::from_images(translation)?];
    if e > 1 {
        let mut chosen = None;
        for m in 2..q {
            if m % p == 0 {
                continue;
            }
            if mult_order(m, q) == e && mult_order(m % p, p) == e {
                chosen = Some(m);
                break;
            }
        }
        let m = chosen.ok_or_else(|| {
            GroupError::InvalidConstruction(format!("no multiplier of order {e} mod {q}"))
        })?;
        let mult: Vec<u32> = (0..q).map(|i| (i * m % q) as u32).collect();
        gens.push(Perm::from_images(mult)?);
    }
    Group::from_generators(q as usize, gens)
}

fn mat_vec(p: u64, n: usize, mat: &[u64], v: &[u64]) -> Vec<u64> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| mat[i * n + j] * v[j] % p)
                .sum::<u64>()
                % p
        })
        .collect()
}

fn vec_to_index(p: u64, v: &[u64]) -> usize {
    v.iter().rev().fold(0usize, |acc, &c| acc * p as usize + c as usize)
}

fn index_to_vec(p: u64, n: usize, mut idx: usize) -> Vec<u64> {
    let mut v = vec![0u64; n];
    for slot in v.iter_mut() {
        *slot = (idx % p as usize) as u64;
        idx /= p as usize;
    }
    v
}

fn mat_is_invertible(p: u64, n: usize, mat: &[u64]) -> bool {
    // Gaussian elimination over F_p
    let mut a: Vec<Vec<u64>> = (0..n).map(|i| mat[i * n..(i + 1) * n].to_vec()).collect();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| a[r][col] % p != 0) else {
            return false;
        };
        a.swap(col, pivot);
        let inv = pow_mod(a[col][col], p - 2, p);
        for r in 0..n {
            if r != col && a[r][col] != 0 {
                let f = a[r][col] * inv % p;
                for c in 0..n {
                    let sub = f * a[col][c] % p;
                    a[r][c] = (a[r][c] + p - sub % p) % p;
                }
            }
        }
    }
    true
}

/// F_p^n : <matrices>, acting affinely on the p^n vectors of F_p^n.
/// Point i encodes the vector with digits of i base p.
pub fn elementary_abelian_semidirect(
    p: u64,
    n: u32,
    matrices: &[Vec<u64>],
) -> Result<Group, GroupError> {
    if !is_prime_small(p) {
        return Err(GroupError::InvalidConstruction(format!("{p} is not prime")));
    }
    let n = n as usize;
    let q = (p as usize)
        .checked_pow(n as u32)
        .filter(|&q| q <= crate::group::DEFAULT_ORDER_CAP)
        .ok_or(GroupError::OrderCapExceeded(crate::group::DEFAULT_ORDER_CAP))?;
    let mut gens = Vec::new();
    // translations by basis vectors
    for b in 0..n {
        let images: Vec<u32> = (0..q)
            .map(|i| {
                let mut v = index_to_vec(p, n, i);
                v[b] = (v[b] + 1) % p;
                vec_to_index(p, &v) as u32
            })
            .collect();
        gens.push(Perm::from_images(images)?);
    }
    for m in matrices {
        if m.len() != n * n {
            return Err(GroupError::InvalidConstruction(format!(
                "matrix has {} entries, expected {}",
                m.len(),
                n * n
            )));
        }
        let m: Vec<u64> = m.iter().map(|&x| x % p).collect();
        if !mat_is_invertible(p, n, &m) {
            return Err(GroupError::InvalidConstruction("singular matrix".into()));
        }
        let images: Vec<u32> = (0..q)
            .map(|i| {
                let v = index_to_vec(p, n, i);
                vec_to_index(p, &mat_vec(p, n, &m, &v)) as u32
            })
            .collect();
        gens.push(Perm::from_images(images)?);
    }
    Group::from_generators(q, gens)
}

/// SL(2,5) by its two elementary-transvection generators, acting on the
/// 24 nonzero vectors of F_5^2 (vector (a,b) -> position among nonzero).
pub fn sl2_5() -> Result<Group, GroupError> {
    let p = 5u64;
    let nonzero: Vec<(u64, u64)> = (0..p)
        .flat_map(|b| (0..p).map(move |a| (a, b)))
        .filter(|&(a, b)| (a, b) != (0, 0))
        .collect();
    let pos = |a: u64, b: u64| nonzero.iter().position(|&(x, y)| (x, y) == (a, b)).unwrap() as u32;
    let act = |m: [[u64; 2]; 2]| -> Result<Perm, GroupError> {
        let images: Vec<u32> = nonzero
            .iter()
            .map(|&(a, b)| {
                let na = (m[0][0] * a + m[0][1] * b) % p;
                let nb = (m[1][0] * a + m[1][1] * b) % p;
                pos(na, nb)
            })
            .collect();
        Perm::from_images(images)
    };
    let upper = act([[1, 1], [0, 1]])?;
    let lower = act([[1, 0], [1, 1]])?;
    Group::from_generators(24, vec![upper, lower])
}

/// Quaternion group of order 8 in its regular representation.
/// Points encode 1, -1, i, -i, j, -j, k, -k in that order.
pub fn quaternion() -> Result<Group, GroupError> {
    let by_i = Perm::from_images(vec![2, 3, 1, 0, 7, 6, 4, 5])?;
    let by_j = Perm::from_images(vec![4, 5, 6, 7, 1, 0, 3, 2])?;
    Group::from_generators(8, vec![by_i, by_j])
}

/// Direct product acting on the disjoint union of the factors' domains.
pub fn direct_product(factors: &[Group]) -> Result<Group, GroupError> {
    if factors.is_empty() {
        return Err(GroupError::InvalidConstruction("empty direct product".into()));
    }
    let degree: usize = factors.iter().map(|g| g.degree()).sum();
    let mut gens = Vec::new();
    let mut offset = 0usize;
    for g in factors {
        for gen in g.generators() {
            let mut images: Vec<u32> = (0..degree as u32).collect();
            for (i, &x) in gen.images().iter().enumerate() {
                images[offset + i] = offset as u32 + x;
            }
            gens.push(Perm::from_images(images)?);
        }
        offset += g.degree();
    }
    Group::from_generators(degree, gens)
}
