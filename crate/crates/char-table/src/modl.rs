//! Arithmetic and linear algebra over the prime fields F_l used as the
//! modular workspace for table computation: scalar ops, matrix echelon
//! forms, characteristic polynomials, primitive roots, and mixed-radix
//! discrete Fourier transforms of lengths dividing l - 1.

use bounds_numbers::{factorize_u64, is_prime_u64};

use crate::CharTableError;

/// The prime field F_l with l < 2^62, all ops by u128 widening.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Fl {
    pub l: u64,
}

impl Fl {
    pub fn new(l: u64) -> Fl {
        debug_assert!(is_prime_u64(l));
        Fl { l }
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.l {
            s - self.l
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.l - b
        }
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        (a as u128 * b as u128 % self.l as u128) as u64
    }

    pub fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1u64;
        base %= self.l;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    #[inline]
    pub fn inv(&self, a: u64) -> u64 {
        debug_assert!(a % self.l != 0, "inverting zero mod {}", self.l);
        self.pow(a, self.l - 2)
    }

    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.l - a
        }
    }

    /// Smallest primitive root of F_l.
    pub fn primitive_root(&self) -> u64 {
        let factors = factorize_u64(self.l - 1);
        'cand: for g in 2..self.l {
            for &(q, _) in &factors {
                if self.pow(g, (self.l - 1) / q) == 1 {
                    continue 'cand;
                }
            }
            return g;
        }
        unreachable!("every prime field has a primitive root")
    }

    /// A fixed element of exact multiplicative order n (requires n | l - 1):
    /// the (l-1)/n-th power of the smallest primitive root.
    pub fn root_of_unity(&self, n: u64) -> u64 {
        assert_eq!((self.l - 1) % n, 0, "order must divide l - 1");
        self.pow(self.primitive_root(), (self.l - 1) / n)
    }
}

/// Smallest prime l ≡ 1 (mod n) with l > lower, skipping any in `exclude`.
pub fn select_prime(n: u64, lower: u64, exclude: &[u64]) -> Result<u64, CharTableError> {
    let mut l = n + 1;
    while l <= lower {
        l += n;
    }
    for _ in 0..2_000_000u64 {
        if is_prime_u64(l) && !exclude.contains(&l) {
            return Ok(l);
        }
        l = l
            .checked_add(n)
            .ok_or(CharTableError::Internal("prime search overflow".into()))?;
    }
    Err(CharTableError::PrimeSearchExhausted { modulus: n, lower })
}

/// Dense row-major matrix over F_l.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatFl {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<u64>,
}

impl MatFl {
    pub fn zero(rows: usize, cols: usize) -> MatFl {
        MatFl {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> MatFl {
        let mut m = MatFl::zero(n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    #[inline]
    pub fn at(&self, r: usize, c: usize) -> u64 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u64) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[u64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn matmul(&self, other: &MatFl, f: Fl) -> MatFl {
        assert_eq!(self.cols, other.rows);
        let mut out = MatFl::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for t in 0..self.cols {
                let a = self.at(i, t);
                if a == 0 {
                    continue;
                }
                let base = t * other.cols;
                let obase = i * other.cols;
                for j in 0..other.cols {
                    out.data[obase + j] =
                        f.add(out.data[obase + j], f.mul(a, other.data[base + j]));
                }
            }
        }
        out
    }

    /// In-place reduced row echelon form; returns the pivot column of each
    /// pivot row (in order).
    pub fn rref(&mut self, f: Fl) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(pr) = (row..self.rows).find(|&r| self.at(r, col) != 0) else {
                continue;
            };
            self.data.swap_chunks(pr, row, self.cols);
            let inv = f.inv(self.at(row, col));
            for c in col..self.cols {
                let v = f.mul(self.at(row, c), inv);
                self.set(row, c, v);
            }
            for r in 0..self.rows {
                if r != row && self.at(r, col) != 0 {
                    let factor = self.at(r, col);
                    for c in col..self.cols {
                        let v = f.sub(self.at(r, c), f.mul(factor, self.at(row, c)));
                        self.set(r, c, v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    /// Basis (as rows) of the right nullspace {v : M v = 0}.
    pub fn nullspace(&self, f: Fl) -> MatFl {
        let mut m = self.clone();
        let pivots = m.rref(f);
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = MatFl::zero(free.len(), self.cols);
        for (bi, &fc) in free.iter().enumerate() {
            basis.set(bi, fc, 1);
            for (pr, &pc) in pivots.iter().enumerate() {
                let v = m.at(pr, fc);
                if v != 0 {
                    basis.set(bi, pc, f.neg(v));
                }
            }
        }
        basis
    }

    /// Characteristic polynomial coefficients (monic, low-to-high degree) of
    /// a square matrix, via reduction to Hessenberg form and the standard
    /// leading-minor recurrence.
    pub fn charpoly(&self, f: Fl) -> Vec<u64> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        if n == 0 {
            return vec![1];
        }
        let mut h = self.clone();
        // similarity reduction to upper Hessenberg
        for col in 0..n.saturating_sub(2) {
            let Some(pr) = (col + 1..n).find(|&r| h.at(r, col) != 0) else {
                continue;
            };
            if pr != col + 1 {
                h.data.swap_chunks(pr, col + 1, n);
                for r in 0..n {
                    let a = h.at(r, pr);
                    let b = h.at(r, col + 1);
                    h.set(r, pr, b);
                    h.set(r, col + 1, a);
                }
            }
            let inv = f.inv(h.at(col + 1, col));
            for r in col + 2..n {
                let factor = f.mul(h.at(r, col), inv);
                if factor == 0 {
                    continue;
                }
                for c in 0..n {
                    let v = f.sub(h.at(r, c), f.mul(factor, h.at(col + 1, c)));
                    h.set(r, c, v);
                }
                for rr in 0..n {
                    let v = f.add(h.at(rr, col + 1), f.mul(factor, h.at(rr, r)));
                    h.set(rr, col + 1, v);
                }
            }
        }
        // p_0 = 1, p_k = charpoly of leading k×k block of H:
        // p_k(x) = (x - h_kk) p_{k-1}(x) - sum_{i<k-1} h_{ik} (prod subdiag) p_i(x)
        let mut polys: Vec<Vec<u64>> = vec![vec![1]];
        for k in 0..n {
            let mut p = vec![0u64; k + 2];
            let prev = &polys[k];
            for (i, &c) in prev.iter().enumerate() {
                p[i + 1] = f.add(p[i + 1], c);
                p[i] = f.sub(p[i], f.mul(h.at(k, k), c));
            }
            let mut beta = 1u64; // product of subdiagonal entries h_{j+1,j}
            for i in (0..k).rev() {
                beta = f.mul(beta, h.at(i + 1, i));
                if beta == 0 {
                    break;
                }
                let coeff = f.mul(h.at(i, k), beta);
                if coeff == 0 {
                    continue;
                }
                for (d, &c) in polys[i].iter().enumerate() {
                    p[d] = f.sub(p[d], f.mul(coeff, c));
                }
            }
            polys.push(p);
        }
        polys.pop().unwrap()
    }
}

trait SwapChunks {
    fn swap_chunks(&mut self, a: usize, b: usize, width: usize);
}

impl SwapChunks for Vec<u64> {
    fn swap_chunks(&mut self, a: usize, b: usize, width: usize) {
        if a == b {
            return;
        }
        let (lo, hi) = (a.min(b), a.max(b));
        let (left, right) = self.split_at_mut(hi * width);
        left[lo * width..(lo + 1) * width].swap_with_slice(&mut right[..width]);
    }
}

/// All roots in F_l of a polynomial (low-to-high coefficients), by direct
/// scan; each root is reported once with its multiplicity ignored.
pub fn poly_roots(coeffs: &[u64], f: Fl) -> Vec<u64> {
    let mut roots = Vec::new();
    for x in 0..f.l {
        let mut acc = 0u64;
        for &c in coeffs.iter().rev() {
            acc = f.add(f.mul(acc, x), c);
        }
        if acc == 0 {
            roots.push(x);
        }
    }
    roots
}

/// In-place mixed-radix DFT: given v of length d and a root w of exact order
/// d in F_l, replaces v by (sum_t v[t] w^(e t))_e. Lengths are split by their
/// smallest prime factor; prime lengths fall back to the quadratic formula.
pub fn dft(v: &[u64], w: u64, f: Fl) -> Vec<u64> {
    let d = v.len() as u64;
    debug_assert_eq!(f.pow(w, d), 1);
    if d <= 1 {
        return v.to_vec();
    }
    let r = (2..=d).find(|p| d % p == 0 && is_prime_u64(*p)).unwrap();
    if r == d {
        // prime length: naive transform
        let mut out = vec![0u64; d as usize];
        for (e, slot) in out.iter_mut().enumerate() {
            let we = f.pow(w, e as u64);
            let mut acc = 0u64;
            let mut pw = 1u64;
            for &x in v {
                acc = f.add(acc, f.mul(x, pw));
                pw = f.mul(pw, we);
            }
            *slot = acc;
        }
        return out;
    }
    let s = d / r;
    // decimate in time: v[t] with t = q r + residue
    let sub_w = f.pow(w, r);
    let subs: Vec<Vec<u64>> = (0..r)
        .map(|res| {
            let slice: Vec<u64> = (0..s).map(|q| v[(q * r + res) as usize]).collect();
            dft(&slice, sub_w, f)
        })
        .collect();
    let mut out = vec![0u64; d as usize];
    for e in 0..d {
        let mut acc = 0u64;
        for (res, sub) in subs.iter().enumerate() {
            // term for residue class `res`: w^(e res) * subs[res][e mod s]
            let tw = f.pow(w, e * res as u64 % d);
            acc = f.add(acc, f.mul(tw, sub[(e % s) as usize]));
        }
        out[e as usize] = acc;
    }
    out
}

/// Inverse DFT: recovers multiplicities m with v[t] = sum_e m[e] w^(e t).
pub fn inverse_dft(v: &[u64], w: u64, f: Fl) -> Vec<u64> {
    let d = v.len() as u64;
    if d == 0 {
        return Vec::new();
    }
    let w_inv = f.inv(w);
    let mut out = dft(v, w_inv, f);
    let dinv = f.inv(d % f.l);
    for x in out.iter_mut() {
        *x = f.mul(*x, dinv);
    }
    out
}
