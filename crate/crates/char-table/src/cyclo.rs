//! Exact arithmetic in the cyclotomic field Q(zeta_n): values are integer
//! polynomials in zeta_n kept in canonical reduced form modulo the n-th
//! cyclotomic polynomial, so equality, conjugation, and serialization are
//! all coefficient-wise. A per-conductor `Reducer` caches the cyclotomic
//! polynomial and the rewrite rows x^e mod Phi_n for e in [phi(n), n).

use bounds_numbers::factorize_u64;

use crate::modl::Fl;
use crate::CharTableError;

/// Shared reduction context for one conductor n.
#[derive(Debug)]
pub struct Reducer {
    pub n: u64,
    pub phi: usize,
    /// Phi_n, low-to-high coefficients, monic of degree phi.
    pub cyclotomic: Vec<i64>,
    /// x^(phi + i) mod Phi_n as sparse (exponent, coeff) rows, i in [0, n - phi).
    rewrite: Vec<Vec<(u32, i64)>>,
    /// Largest |coefficient| over all rewrite rows (at least 1); used by
    /// callers to certify coefficient bounds after one reduction.
    pub max_rewrite_coeff: u64,
}

fn divisors(n: u64) -> Vec<u64> {
    let mut out = vec![1u64];
    for (p, e) in factorize_u64(n) {
        let prev = out.clone();
        let mut q = 1;
        for _ in 0..e {
            q *= p;
            out.extend(prev.iter().map(|d| d * q));
        }
    }
    out.sort_unstable();
    out
}

/// Exact division of integer polynomials (low-to-high), erroring if the
/// division leaves a remainder or a coefficient overflows i64.
fn poly_div_exact(num: &[i64], den: &[i64]) -> Result<Vec<i64>, CharTableError> {
    let dd = den.len() - 1;
    assert_eq!(den[dd], 1, "divisor must be monic");
    if num.len() < den.len() {
        return Err(CharTableError::Internal("degree underflow in poly division".into()));
    }
    let mut rem: Vec<i64> = num.to_vec();
    let qd = num.len() - den.len();
    let mut quot = vec![0i64; qd + 1];
    for qi in (0..=qd).rev() {
        let c = rem[qi + dd];
        quot[qi] = c;
        if c == 0 {
            continue;
        }
        for (di, &dcoef) in den.iter().enumerate() {
            let slot = &mut rem[qi + di];
            *slot = slot
                .checked_sub(c.checked_mul(dcoef).ok_or(CharTableError::CoefficientOverflow)?)
                .ok_or(CharTableError::CoefficientOverflow)?;
        }
    }
    if rem.iter().any(|&c| c != 0) {
        return Err(CharTableError::Internal("inexact cyclotomic division".into()));
    }
    Ok(quot)
}

/// Phi_n for every divisor context, by dividing x^n - 1 by the cyclotomic
/// polynomials of the proper divisors of n (computed in ascending order).
pub fn cyclotomic_polynomial(n: u64) -> Result<Vec<i64>, CharTableError> {
    let mut memo: Vec<(u64, Vec<i64>)> = Vec::new();
    for d in divisors(n) {
        let mut poly = vec![0i64; d as usize + 1];
        poly[0] = -1;
        poly[d as usize] = 1;
        let mut f = poly;
        for (e, phi_e) in &memo {
            if d % e == 0 {
                f = poly_div_exact(&f, phi_e)?;
            }
        }
        memo.push((d, f));
    }
    Ok(memo.pop().unwrap().1)
}

impl Reducer {
    pub fn new(n: u64) -> Result<Reducer, CharTableError> {
        assert!(n >= 1);
        let cyclotomic = cyclotomic_polynomial(n)?;
        let phi = cyclotomic.len() - 1;
        // dense iteration: row(e+1) = shift(row(e)), folding the overflow of
        // x^phi back in via x^phi = -(Phi_n - x^phi)
        let fold: Vec<i64> = cyclotomic[..phi].iter().map(|&c| -c).collect();
        let mut rewrite = Vec::with_capacity((n as usize).saturating_sub(phi));
        let mut dense = fold.clone();
        let mut max_c: u64 = 1;
        for _e in phi as u64..n {
            let sparse: Vec<(u32, i64)> = dense
                .iter()
                .enumerate()
                .filter(|(_, &c)| c != 0)
                .map(|(i, &c)| (i as u32, c))
                .collect();
            for &(_, c) in &sparse {
                max_c = max_c.max(c.unsigned_abs());
            }
            rewrite.push(sparse);
            // multiply by x
            let top = dense[phi - 1];
            for i in (1..phi).rev() {
                dense[i] = dense[i - 1];
            }
            dense[0] = 0;
            if top != 0 {
                for (i, &fc) in fold.iter().enumerate() {
                    dense[i] = dense[i]
                        .checked_add(top.checked_mul(fc).ok_or(CharTableError::CoefficientOverflow)?)
                        .ok_or(CharTableError::CoefficientOverflow)?;
                }
            }
        }
        Ok(Reducer {
            n,
            phi,
            cyclotomic,
            rewrite,
            max_rewrite_coeff: max_c,
        })
    }

    /// Reduce a dense accumulation over exponents [0, n) to canonical sparse
    /// terms of degree < phi(n).
    pub fn reduce_dense(&self, acc: &[i128]) -> Vec<(u32, i64)> {
        debug_assert_eq!(acc.len(), self.n as usize);
        let mut low = vec![0i128; self.phi];
        low.copy_from_slice(&acc[..self.phi]);
        for (i, &c) in acc[self.phi..].iter().enumerate() {
            if c == 0 {
                continue;
            }
            for &(exp, rc) in &self.rewrite[i] {
                low[exp as usize] += c * rc as i128;
            }
        }
        low.iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(e, &c)| {
                (
                    e as u32,
                    i64::try_from(c).expect("cyclotomic coefficient exceeds i64"),
                )
            })
            .collect()
    }
}

/// A canonical cyclotomic integer: sparse terms (exponent, coefficient),
/// exponents strictly below phi(conductor), sorted, no zero coefficients.
///
/// Deserialization trusts its input to already be canonical; only feed it
/// data this library serialized.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize, serde::Deserialize)]
pub struct CycValue {
    pub conductor: u64,
    pub terms: Vec<(u32, i64)>,
}

impl CycValue {
    pub fn zero(n: u64) -> CycValue {
        CycValue { conductor: n, terms: Vec::new() }
    }

    pub fn integer(n: u64, c: i64) -> CycValue {
        if c == 0 {
            Self::zero(n)
        } else {
            CycValue { conductor: n, terms: vec![(0, c)] }
        }
    }

    pub fn one(n: u64) -> CycValue {
        Self::integer(n, 1)
    }

    /// Canonical form of sum of c * zeta_n^e over the given terms; exponents
    /// are taken mod n.
    pub fn from_terms(red: &Reducer, terms: impl IntoIterator<Item = (u64, i64)>) -> CycValue {
        let mut acc = vec![0i128; red.n as usize];
        for (e, c) in terms {
            acc[(e % red.n) as usize] += c as i128;
        }
        CycValue { conductor: red.n, terms: red.reduce_dense(&acc) }
    }

    pub fn root(red: &Reducer, e: u64) -> CycValue {
        Self::from_terms(red, [(e, 1)])
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True when the canonical form lies in Q (degree-0 polynomial).
    pub fn is_rational(&self) -> bool {
        self.terms.iter().all(|&(e, _)| e == 0)
    }

    pub fn as_integer(&self) -> Option<i64> {
        match self.terms.as_slice() {
            [] => Some(0),
            [(0, c)] => Some(*c),
            _ => None,
        }
    }

    pub fn add(&self, other: &CycValue) -> CycValue {
        debug_assert_eq!(self.conductor, other.conductor);
        let mut terms = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() || j < other.terms.len() {
            let take_left = j == other.terms.len()
                || (i < self.terms.len() && self.terms[i].0 <= other.terms[j].0);
            let take_right = i == self.terms.len()
                || (j < other.terms.len() && other.terms[j].0 <= self.terms[i].0);
            if take_left && take_right {
                let c = self.terms[i].1.checked_add(other.terms[j].1).expect("overflow");
                if c != 0 {
                    terms.push((self.terms[i].0, c));
                }
                i += 1;
                j += 1;
            } else if take_left {
                terms.push(self.terms[i]);
                i += 1;
            } else {
                terms.push(other.terms[j]);
                j += 1;
            }
        }
        CycValue { conductor: self.conductor, terms }
    }

    pub fn neg(&self) -> CycValue {
        CycValue {
            conductor: self.conductor,
            terms: self.terms.iter().map(|&(e, c)| (e, -c)).collect(),
        }
    }

    pub fn sub(&self, other: &CycValue) -> CycValue {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: i64) -> CycValue {
        if c == 0 {
            return CycValue::zero(self.conductor);
        }
        CycValue {
            conductor: self.conductor,
            terms: self
                .terms
                .iter()
                .map(|&(e, t)| (e, t.checked_mul(c).expect("overflow")))
                .collect(),
        }
    }

    pub fn mul(&self, other: &CycValue, red: &Reducer) -> CycValue {
        debug_assert_eq!(self.conductor, red.n);
        debug_assert_eq!(other.conductor, red.n);
        let mut acc = vec![0i128; red.n as usize];
        for &(e1, c1) in &self.terms {
            for &(e2, c2) in &other.terms {
                let e = (e1 as u64 + e2 as u64) % red.n;
                acc[e as usize] += c1 as i128 * c2 as i128;
            }
        }
        CycValue { conductor: red.n, terms: red.reduce_dense(&acc) }
    }

    /// Galois action zeta_n -> zeta_n^m (m coprime to n).
    pub fn galois(&self, m: u64, red: &Reducer) -> CycValue {
        // single-term values (every entry of an abelian table) skip the
        // dense accumulator
        if let [(e, c)] = self.terms.as_slice() {
            let em = (*e as u64 * m % red.n) as usize;
            let terms = if em < red.phi {
                vec![(em as u32, *c)]
            } else {
                red.rewrite[em - red.phi]
                    .iter()
                    .map(|&(re, rc)| (re, rc.checked_mul(*c).expect("overflow")))
                    .collect()
            };
            return CycValue { conductor: self.conductor, terms };
        }
        CycValue::from_terms(
            red,
            self.terms.iter().map(|&(e, c)| (e as u64 * m % red.n.max(1), c)),
        )
    }

    /// Complex conjugate (the Galois element zeta -> zeta^(n-1)).
    pub fn conj(&self, red: &Reducer) -> CycValue {
        if red.n <= 2 {
            return self.clone();
        }
        self.galois(red.n - 1, red)
    }

    /// Exact division by a nonzero integer, if every coefficient divides.
    pub fn div_exact(&self, d: i64) -> Option<CycValue> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for &(e, c) in &self.terms {
            if c % d != 0 {
                return None;
            }
            terms.push((e, c / d));
        }
        Some(CycValue { conductor: self.conductor, terms })
    }

    /// Image in F_l under zeta_n -> omega, where omega has exact order n.
    pub fn eval_modl(&self, omega: u64, f: Fl) -> u64 {
        let mut acc = 0u64;
        for &(e, c) in &self.terms {
            let cm = if c >= 0 {
                c as u64 % f.l
            } else {
                f.neg(c.unsigned_abs() % f.l)
            };
            acc = f.add(acc, f.mul(cm, f.pow(omega, e as u64)));
        }
        acc
    }

    /// Numerical evaluation (for sanity bounds only, never for assertions).
    pub fn eval_complex(&self) -> (f64, f64) {
        let n = self.conductor as f64;
        let (mut re, mut im) = (0.0, 0.0);
        for &(e, c) in &self.terms {
            let theta = 2.0 * std::f64::consts::PI * e as f64 / n;
            re += c as f64 * theta.cos();
            im += c as f64 * theta.sin();
        }
        (re, im)
    }
}
