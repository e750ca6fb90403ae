//! Partition of the irreducible characters into p-blocks. Two characters
//! lie in the same block exactly when their central characters agree after
//! reduction modulo a prime ideal above p: the central character values
//! |K| chi(g) / chi(1) are algebraic integers in Z[zeta_n], and reduction
//! sends zeta_n to a root of unity of order n_p' in the finite field
//! F_(p^k), k the multiplicative order of p mod n_p'. The reduction target
//! is built deterministically (first irreducible modulus, first field
//! element powering to an element of exact order n_p'), so block labels are
//! reproducible run to run.

use bounds_numbers::{factorize_u64, is_prime_u64};
use num_bigint::BigUint;

use crate::table::CharacterTable;
use crate::CharTableError;

/// The finite field F_(p^k) as F_p[x] / (modulus), elements dense
/// low-to-high coefficient vectors of length k.
struct Fq {
    p: u64,
    k: usize,
    /// Monic irreducible of degree k, low-to-high, length k + 1.
    modulus: Vec<u64>,
}

impl Fq {
    /// Deterministic construction: scan monic polynomials of degree k in
    /// ascending base-p order of their coefficient vector and keep the
    /// first irreducible one.
    fn find(p: u64, k: usize) -> Fq {
        assert!(k >= 1);
        let mut counter = 0u64;
        loop {
            let mut modulus = vec![0u64; k + 1];
            let mut c = counter;
            for slot in modulus.iter_mut().take(k) {
                *slot = c % p;
                c /= p;
            }
            assert_eq!(c, 0, "irreducible search exhausted degree-{k} polynomials");
            modulus[k] = 1;
            let cand = Fq { p, k, modulus };
            if cand.modulus_is_irreducible() {
                return cand;
            }
            counter += 1;
        }
    }

    fn zero(&self) -> Vec<u64> {
        vec![0; self.k]
    }

    fn one(&self) -> Vec<u64> {
        let mut v = self.zero();
        v[0] = 1;
        v
    }

    fn is_one(&self, a: &[u64]) -> bool {
        a[0] == 1 && a[1..].iter().all(|&c| c == 0)
    }

    fn add_assign(&self, a: &mut [u64], b: &[u64]) {
        for (x, &y) in a.iter_mut().zip(b) {
            *x = (*x + y) % self.p;
        }
    }

    fn scale(&self, a: &[u64], c: u64) -> Vec<u64> {
        a.iter().map(|&x| x * c % self.p).collect()
    }

    fn mul(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let mut prod = vec![0u64; 2 * self.k - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % self.p;
            }
        }
        self.reduce(prod)
    }

    fn reduce(&self, mut prod: Vec<u64>) -> Vec<u64> {
        for i in (self.k..prod.len()).rev() {
            let c = prod[i];
            if c == 0 {
                continue;
            }
            prod[i] = 0;
            for (j, &mc) in self.modulus.iter().take(self.k).enumerate() {
                // x^i = x^(i-k) * (x^k) = -x^(i-k) * (modulus - x^k)
                let sub = c * mc % self.p;
                let slot = &mut prod[i - self.k + j];
                *slot = (*slot + self.p - sub) % self.p;
            }
        }
        prod.truncate(self.k);
        prod
    }

    fn pow_big(&self, a: &[u64], e: &BigUint) -> Vec<u64> {
        let mut acc = self.one();
        let mut base = a.to_vec();
        for i in 0..e.bits() {
            if e.bit(i) {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
        }
        acc
    }

    fn pow(&self, a: &[u64], e: u64) -> Vec<u64> {
        self.pow_big(a, &BigUint::from(e))
    }

    /// Irreducibility of the modulus: x^(p^k) ≡ x and, for every prime q
    /// dividing k, gcd(x^(p^(k/q)) - x, modulus) = 1.
    fn modulus_is_irreducible(&self) -> bool {
        if self.k == 1 {
            return true;
        }
        let x = {
            let mut v = self.zero();
            v[1] = 1;
            v
        };
        // iterated Frobenius images x^(p^i)
        let mut frob = x.clone();
        let mut images = Vec::with_capacity(self.k);
        for _ in 0..self.k {
            frob = self.pow(&frob, self.p);
            images.push(frob.clone());
        }
        if images[self.k - 1] != x {
            return false;
        }
        for (q, _) in factorize_u64(self.k as u64) {
            let mut diff = images[self.k / q as usize - 1].clone();
            // diff = x^(p^(k/q)) - x
            diff[1] = (diff[1] + self.p - 1) % self.p;
            if !self.coprime_to_modulus(&diff) {
                return false;
            }
        }
        true
    }

    /// gcd(poly, modulus) = 1 over F_p.
    fn coprime_to_modulus(&self, poly: &[u64]) -> bool {
        let fp = crate::modl::Fl::new(self.p);
        let mut a = self.modulus.clone();
        let mut b = poly.to_vec();
        let trim = |v: &mut Vec<u64>| {
            while v.last() == Some(&0) {
                v.pop();
            }
        };
        trim(&mut a);
        trim(&mut b);
        while !b.is_empty() {
            // a mod b
            let lead = *b.last().unwrap();
            let inv = fp.inv(lead);
            while a.len() >= b.len() {
                let c = fp.mul(*a.last().unwrap(), inv);
                let shift = a.len() - b.len();
                if c != 0 {
                    for (i, &bc) in b.iter().enumerate() {
                        a[shift + i] = fp.sub(a[shift + i], fp.mul(c, bc));
                    }
                }
                trim(&mut a);
                if a.is_empty() {
                    break;
                }
            }
            std::mem::swap(&mut a, &mut b);
        }
        a.len() == 1
    }
}

/// How the reduction field was built; recorded so results can be reproduced.
#[derive(Clone, Debug, serde::Serialize)]
pub struct BlockFieldInfo {
    /// Order of the root of unity surviving reduction (p'-part of the
    /// exponent).
    pub root_order: u64,
    /// Degree of the reduction field over F_p.
    pub extension_degree: usize,
    /// Monic irreducible modulus, low-to-high coefficients.
    pub modulus: Vec<u64>,
    /// The chosen root of exact order `root_order`.
    pub root: Vec<u64>,
    /// zeta_n maps to root^embedding_exponent.
    pub embedding_exponent: u64,
}

/// The p-block partition of a character table's rows.
#[derive(Clone, Debug, serde::Serialize)]
pub struct BlockDistribution {
    pub prime: u64,
    /// Block id of each row; ids are assigned in row order.
    pub block_of: Vec<usize>,
    /// Row indices of each block.
    pub blocks: Vec<Vec<usize>>,
    /// Block containing the trivial character.
    pub principal_block_id: usize,
    /// True when p does not divide the group order: every character is
    /// alone in its block and the partition carries no modular content.
    pub degenerate: bool,
    pub field: BlockFieldInfo,
}

/// Partition the rows of `t` into p-blocks by reducing central characters
/// modulo a prime ideal above p.
pub fn block_distribution(
    t: &CharacterTable,
    p: u64,
) -> Result<BlockDistribution, CharTableError> {
    if !is_prime_u64(p) {
        return Err(CharTableError::InvalidPrime(p));
    }
    let k = t.k();
    let n = t.exponent;
    let order = t.group.order();

    if order % p != 0 {
        // defect-zero everywhere: singleton blocks
        return Ok(BlockDistribution {
            prime: p,
            block_of: (0..k).collect(),
            blocks: (0..k).map(|i| vec![i]).collect(),
            principal_block_id: t.trivial_row,
            degenerate: true,
            field: BlockFieldInfo {
                root_order: 1,
                extension_degree: 1,
                modulus: vec![0, 1],
                root: vec![1],
                embedding_exponent: 0,
            },
        });
    }

    // p'-part m of the exponent and the p-part n_p, so n = n_p * m
    let mut m = n;
    let mut n_p = 1u64;
    while m % p == 0 {
        m /= p;
        n_p *= p;
    }
    // degree of the reduction field: multiplicative order of p mod m
    let ext = if m == 1 {
        1
    } else {
        let mut e = 1usize;
        let mut pw = p % m;
        while pw != 1 {
            pw = pw * p % m;
            e += 1;
        }
        e
    };
    let fq = Fq::find(p, ext);
    let q_minus_1 = BigUint::from(p).pow(ext as u32) - BigUint::from(1u32);
    let cofactor = &q_minus_1 / BigUint::from(m);
    let m_factors = factorize_u64(m);

    // first element (in base-p vector order) powering to exact order m
    let mut root = fq.one();
    if m > 1 {
        let mut counter = 1u64;
        'search: loop {
            let mut v = fq.zero();
            let mut c = counter;
            for slot in v.iter_mut() {
                *slot = c % p;
                c /= p;
            }
            assert_eq!(c, 0, "no element of exact order {m} found");
            counter += 1;
            if v.iter().all(|&x| x == 0) {
                continue;
            }
            let u = fq.pow_big(&v, &cofactor);
            if u.iter().all(|&x| x == 0) {
                continue;
            }
            for &(r, _) in &m_factors {
                if fq.is_one(&fq.pow(&u, m / r)) {
                    continue 'search;
                }
            }
            debug_assert!(fq.is_one(&fq.pow(&u, m)));
            root = u;
            break;
        }
    }

    // zeta_n -> root^c with c * n_p ≡ 1 (mod m): kills the p-power part and
    // restricts to the identity on order-m roots
    let c_embed = if m == 1 {
        0
    } else {
        (1..m).find(|c| c * (n_p % m) % m == 1).expect("n_p invertible mod m")
    };
    let upow: Vec<Vec<u64>> = {
        let mut v = Vec::with_capacity(m as usize);
        let mut cur = fq.one();
        for _ in 0..m {
            v.push(cur.clone());
            cur = fq.mul(&cur, &root);
        }
        v
    };

    // key of a row: the reduced central character, concatenated over classes
    let mut block_ids: std::collections::HashMap<Vec<u64>, usize> =
        std::collections::HashMap::new();
    let mut block_of = Vec::with_capacity(k);
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for r in 0..k {
        let degree = t.degrees[r] as i64;
        let mut key: Vec<u64> = Vec::with_capacity(k * ext);
        for j in 0..k {
            let size = t.classes.classes[j].size as i64;
            let scaled = t.rows[r][j].scale(size);
            let central = scaled.div_exact(degree).ok_or_else(|| {
                CharTableError::Internal(
                    "central character value not integral".into(),
                )
            })?;
            let mut acc = fq.zero();
            for &(e, coef) in &central.terms {
                let cm = coef.rem_euclid(p as i64) as u64;
                if cm == 0 {
                    continue;
                }
                let exp = (e as u64 * c_embed) % m.max(1);
                fq.add_assign(&mut acc, &fq.scale(&upow[exp as usize], cm));
            }
            key.extend_from_slice(&acc);
        }
        let next_id = blocks.len();
        let id = *block_ids.entry(key).or_insert(next_id);
        if id == next_id {
            blocks.push(Vec::new());
        }
        blocks[id].push(r);
        block_of.push(id);
    }

    Ok(BlockDistribution {
        prime: p,
        principal_block_id: block_of[t.trivial_row],
        block_of,
        blocks,
        degenerate: false,
        field: BlockFieldInfo {
            root_order: m,
            extension_degree: ext,
            modulus: fq.modulus.clone(),
            root,
            embedding_exponent: c_embed,
        },
    })
}
