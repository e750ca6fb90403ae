//! Evaluators for the order bounds used by the classification arguments:
//! factorial-power bounds on completely reducible permutation/linear groups,
//! the logarithmic bound for groups of odd order coprime to p, the
//! 2*sqrt(p-1) lower bound on class numbers, and the exponential lower bound
//! on partition growth. Every real-valued quantity is sandwiched by exact
//! rational intervals before any floor/ceiling is taken.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::One;
use serde::Serialize;

use crate::interval::{default_eps, exp_rational, ln_rational, sqrt_int, RatInterval};
use crate::partition::partition_count;
use crate::primes::is_prime_u64;
use crate::BoundsError;

/// Exact outcome of evaluating one of the supported inequalities. Either the
/// bound is an integer (and `value` holds it exactly), or it is irrational
/// and we report the certified floor and ceiling that bracket it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum BoundValue {
    Exact(BigUint),
    Bracketed { floor: BigUint, ceiling: BigUint },
}

impl BoundValue {
    pub fn ceiling(&self) -> BigUint {
        match self {
            BoundValue::Exact(v) => v.clone(),
            BoundValue::Bracketed { ceiling, .. } => ceiling.clone(),
        }
    }

    pub fn floor(&self) -> BigUint {
        match self {
            BoundValue::Exact(v) => v.clone(),
            BoundValue::Bracketed { floor, .. } => floor.clone(),
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, BoundValue::Exact(_))
    }
}

/// A named, reproducible bound evaluation with its inputs recorded.
#[derive(Clone, Debug, Serialize)]
pub struct BoundEvaluation {
    pub name: &'static str,
    pub inputs: Vec<(&'static str, u64)>,
    pub value: BoundValue,
}

/// Which order bound to evaluate for a group of degree/rank `r`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrderBoundKind {
    /// d!^((r-1)/(d-1)) for groups with no alternating composition factor of
    /// degree above d (requires d >= 4).
    NoLargeAlt { d: u32 },
    /// 24^((r-1)/3) for primitive groups avoiding large alternating factors.
    PrimitiveNotAlt,
    /// (log p)^(2(r-1)) for odd-order coprime linear groups.
    LogP { p: u64 },
}

/// Exact ceiling of base^(num/den) for integers base >= 1, num >= 0, den >= 1,
/// via an integer `den`-th root of base^num. Also reports whether the power
/// is itself an integer.
fn pow_fractional_ceil(base: u64, num: u32, den: u32) -> BoundValue {
    assert!(base >= 1 && den >= 1);
    if num == 0 {
        return BoundValue::Exact(BigUint::one());
    }
    let n = BigUint::from(base).pow(num);
    let root = n.nth_root(den);
    if root.pow(den) == n {
        BoundValue::Exact(root)
    } else {
        BoundValue::Bracketed {
            ceiling: &root + BigUint::one(),
            floor: root,
        }
    }
}

fn factorial(d: u32) -> u64 {
    (2..=d as u64).product::<u64>().max(1)
}

/// Evaluate one of the permutation/linear order bounds at rank `r`,
/// returning a certified integer enclosure.
pub fn perm_order_bound(kind: OrderBoundKind, r: u32) -> Result<BoundEvaluation, BoundsError> {
    if r < 1 {
        return Err(BoundsError::DomainError("rank r must be at least 1"));
    }
    match kind {
        OrderBoundKind::NoLargeAlt { d } => {
            if d < 4 {
                return Err(BoundsError::DomainError(
                    "factorial bound requires degree parameter d >= 4",
                ));
            }
            if d > 20 {
                return Err(BoundsError::InputTooLarge {
                    what: "factorial bound degree",
                    got: d as u64,
                    cap: 20,
                });
            }
            Ok(BoundEvaluation {
                name: "no_large_alt",
                inputs: vec![("d", d as u64), ("r", r as u64)],
                value: pow_fractional_ceil(factorial(d), r - 1, d - 1),
            })
        }
        OrderBoundKind::PrimitiveNotAlt => Ok(BoundEvaluation {
            name: "primitive_not_alt",
            inputs: vec![("r", r as u64)],
            value: pow_fractional_ceil(24, r - 1, 3),
        }),
        OrderBoundKind::LogP { p } => {
            if !is_prime_u64(p) {
                return Err(BoundsError::NotPrime(p));
            }
            if p < 3 {
                return Err(BoundsError::DomainError("log bound needs p >= 3"));
            }
            Ok(BoundEvaluation {
                name: "log_p",
                inputs: vec![("p", p), ("r", r as u64)],
                value: log_power_bound(p, 2 * (r - 1))?,
            })
        }
    }
}

/// Certified enclosure of (ln p)^e as a BoundValue, narrowing the interval
/// until the floor and ceiling are pinned down. (ln p)^e is irrational for
/// every prime p and e >= 1, so narrowing terminates; e = 0 gives exactly 1.
fn log_power_bound(p: u64, e: u32) -> Result<BoundValue, BoundsError> {
    if e == 0 {
        return Ok(BoundValue::Exact(BigUint::one()));
    }
    let x = BigRational::from(BigInt::from(p));
    let mut eps = default_eps();
    for _ in 0..8 {
        let iv = ln_rational(&x, &eps)?.pow_u32(e);
        if let (Some(f), Some(c)) = (iv.try_floor(), iv.try_ceil()) {
            let floor = f.to_biguint().ok_or(BoundsError::DomainError("negative bound"))?;
            let ceiling = c.to_biguint().ok_or(BoundsError::DomainError("negative bound"))?;
            return Ok(if floor == ceiling {
                BoundValue::Exact(floor)
            } else {
                BoundValue::Bracketed { floor, ceiling }
            });
        }
        eps /= BigRational::from(BigInt::from(1000));
    }
    Err(BoundsError::PrecisionExceeded("(log p)^e enclosure"))
}

/// The class-number lower bound 2*sqrt(p-1), with a flag for whether p-1 is
/// a perfect square (the regime where the bound is attained exactly).
#[derive(Clone, Debug, Serialize)]
pub struct BrauerBound {
    pub evaluation: BoundEvaluation,
    pub p_minus_one_is_square: bool,
}

pub fn brauer_min_k(p: u64) -> Result<BrauerBound, BoundsError> {
    if !is_prime_u64(p) {
        return Err(BoundsError::NotPrime(p));
    }
    let m = BigUint::from(4 * (p - 1));
    let root = m.sqrt();
    let exact = &root * &root == m;
    let value = if exact {
        BoundValue::Exact(root)
    } else {
        BoundValue::Bracketed {
            ceiling: &root + BigUint::one(),
            floor: root,
        }
    };
    let s = BigUint::from(p - 1).sqrt();
    Ok(BrauerBound {
        evaluation: BoundEvaluation {
            name: "brauer_min_k",
            inputs: vec![("p", p)],
            value,
        },
        p_minus_one_is_square: &s * &s == BigUint::from(p - 1),
    })
}

/// Check the partition growth inequality pi(d) >= e^(2*sqrt(d)) / 14 with
/// certified interval arithmetic: returns true only when 14*pi(d) is at
/// least the certified upper end of e^(2*sqrt(d)), and false only when it is
/// below the certified lower end, narrowing until one side is settled.
pub fn partition_growth_check(d: u64) -> Result<bool, BoundsError> {
    if d < 1 {
        return Err(BoundsError::DomainError("partition growth check needs d >= 1"));
    }
    let pi = partition_count(d)?;
    let lhs = BigRational::from(BigInt::from(pi * BigUint::from(14u32)));
    let mut eps = default_eps();
    for _ in 0..8 {
        let root = sqrt_int(d, &eps);
        let two_sqrt = root.scale(&BigRational::from(BigInt::from(2)));
        // e^x is monotone, so the enclosure of e^(2 sqrt d) is
        // [exp(lo).lo, exp(hi).hi]
        let lo_iv = exp_rational(&two_sqrt.lo, &eps)?;
        let hi_iv = exp_rational(&two_sqrt.hi, &eps)?;
        let rhs = RatInterval { lo: lo_iv.lo, hi: hi_iv.hi };
        if lhs >= rhs.hi {
            return Ok(true);
        }
        if lhs < rhs.lo {
            return Ok(false);
        }
        eps /= BigRational::from(BigInt::from(1000));
    }
    Err(BoundsError::PrecisionExceeded("partition growth comparison"))
}
