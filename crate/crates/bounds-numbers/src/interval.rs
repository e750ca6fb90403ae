use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::BoundsError;

/// Target half-width for certified enclosures, 10^-9, tightened further when
/// a floor/ceiling decision needs it.
pub fn default_eps() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(1_000_000_000u64))
}

/// A closed interval with exact rational endpoints, guaranteed to contain the
/// real value it stands for.
#[derive(Clone, Debug, PartialEq)]
pub struct RatInterval {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl RatInterval {
    pub fn point(x: BigRational) -> Self {
        RatInterval { lo: x.clone(), hi: x }
    }

    pub fn from_int(n: u64) -> Self {
        Self::point(BigRational::from(BigInt::from(n)))
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn add(&self, other: &Self) -> Self {
        RatInterval {
            lo: &self.lo + &other.lo,
            hi: &self.hi + &other.hi,
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_negative() {
            RatInterval {
                lo: &self.hi * c,
                hi: &self.lo * c,
            }
        } else {
            RatInterval {
                lo: &self.lo * c,
                hi: &self.hi * c,
            }
        }
    }

    /// Product of intervals with nonnegative lower endpoints.
    pub fn mul_nonneg(&self, other: &Self) -> Self {
        assert!(
            !self.lo.is_negative() && !other.lo.is_negative(),
            "mul_nonneg needs nonnegative intervals"
        );
        RatInterval {
            lo: &self.lo * &other.lo,
            hi: &self.hi * &other.hi,
        }
    }

    /// Integer power of a nonnegative interval.
    pub fn pow_u32(&self, e: u32) -> Self {
        assert!(!self.lo.is_negative());
        let mut acc = RatInterval::point(BigRational::one());
        for _ in 0..e {
            acc = acc.mul_nonneg(self);
        }
        acc
    }

    /// Certified floor of the enclosed value, if the interval pins one down.
    pub fn try_floor(&self) -> Option<BigInt> {
        let f_lo = self.lo.floor().to_integer();
        let f_hi = self.hi.floor().to_integer();
        (f_lo == f_hi).then_some(f_lo)
    }

    /// Certified ceiling of the enclosed value, if pinned down.
    pub fn try_ceil(&self) -> Option<BigInt> {
        let c_lo = self.lo.ceil().to_integer();
        let c_hi = self.hi.ceil().to_integer();
        (c_lo == c_hi).then_some(c_lo)
    }

    pub fn to_f64(&self) -> f64 {
        ((&self.lo + &self.hi) / BigRational::from(BigInt::from(2)))
            .to_f64()
            .unwrap_or(f64::NAN)
    }
}

fn big_rat(n: i64, d: u64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// ln 2 enclosed within `eps`, via 2*atanh(1/3).
pub fn ln2(eps: &BigRational) -> RatInterval {
    atanh_times_two(&big_rat(1, 3), eps)
}

/// 2 * atanh(t) = ln((1+t)/(1-t)) for rational 0 <= t < 1, enclosed within eps.
/// Series 2*sum t^(2i+1)/(2i+1); the tail after N terms is below
/// 2 t^(2N+1) / ((2N+1)(1-t^2)).
fn atanh_times_two(t: &BigRational, eps: &BigRational) -> RatInterval {
    assert!(!t.is_negative() && t < &BigRational::one());
    if t.is_zero() {
        return RatInterval::point(BigRational::zero());
    }
    let t2 = t * t;
    let mut sum = BigRational::zero();
    let mut power = t.clone(); // t^(2i+1)
    let mut i: u64 = 0;
    loop {
        sum += &power / BigRational::from(BigInt::from(2 * i + 1));
        power *= &t2;
        i += 1;
        // remaining tail bound (before doubling)
        let tail = &power / ((BigRational::one() - &t2) * BigRational::from(BigInt::from(2 * i + 1)));
        if &(tail.clone() + tail.clone()) < eps {
            let two = BigRational::from(BigInt::from(2));
            let lo = &sum * &two;
            let hi = (&sum + &tail) * &two;
            return RatInterval { lo, hi };
        }
    }
}

/// Natural log of a positive rational, enclosed within roughly `eps`.
/// Range-reduces by powers of two into [1, 2), then uses atanh.
pub fn ln_rational(x: &BigRational, eps: &BigRational) -> Result<RatInterval, BoundsError> {
    if !x.is_positive() {
        return Err(BoundsError::DomainError("log of non-positive value"));
    }
    let one = BigRational::one();
    let two = BigRational::from(BigInt::from(2));
    let mut y = x.clone();
    let mut k: i64 = 0;
    while y >= two {
        y /= &two;
        k += 1;
    }
    while y < one {
        y *= &two;
        k -= 1;
    }
    // ln x = k ln2 + ln y, y in [1,2): ln y = 2 atanh((y-1)/(y+1))
    let sub_eps = eps / BigRational::from(BigInt::from(2 * (k.unsigned_abs().max(1) + 1)));
    let l2 = ln2(&sub_eps);
    let t = (&y - &one) / (&y + &one);
    let ly = atanh_times_two(&t, &sub_eps);
    let kl2 = l2.scale(&BigRational::from(BigInt::from(k)));
    Ok(kl2.add(&ly))
}

/// e^x for rational x >= 0, enclosed within *relative* width `eps`
/// (hi <= lo * (1 + eps)). Splits x = E + f with integer E and 0 <= f < 1,
/// computes e by series once, powers it, and multiplies by the series for
/// e^f. Containment is exact regardless of eps; eps only budgets the width.
pub fn exp_rational(x: &BigRational, eps: &BigRational) -> Result<RatInterval, BoundsError> {
    if x.is_negative() {
        return Err(BoundsError::DomainError("exp of negative value not needed"));
    }
    let e_int = x.floor().to_integer();
    let frac = x - BigRational::from(e_int.clone());
    let e_u32: u32 = e_int
        .to_u32()
        .ok_or(BoundsError::DomainError("exponent too large"))?;
    // series for e and e^f; tail after N terms of sum x^i/i! is
    // <= x^N/N! * 1/(1 - x/(N+1)) <= 2 x^N/N! once N+1 >= 2x
    let series = |x: &BigRational, eps: &BigRational| -> RatInterval {
        let mut sum = BigRational::one();
        let mut term = BigRational::one();
        let mut i: u64 = 1;
        loop {
            term = term * x / BigRational::from(BigInt::from(i));
            sum += &term;
            i += 1;
            if BigRational::from(BigInt::from(i)) >= x * BigRational::from(BigInt::from(2)) {
                let tail = &term * BigRational::from(BigInt::from(2));
                if &tail < eps {
                    return RatInterval {
                        lo: sum.clone(),
                        hi: sum + tail,
                    };
                }
            }
        }
    };
    // Each factor contributes at most its own relative width; splitting the
    // budget across the E copies of e and the fractional factor keeps the
    // total relative width under eps (the series eps is absolute, and both
    // series values are >= 1, so absolute width bounds relative width).
    let shrink = BigRational::from(BigInt::from(4 * (e_u32 as u64 + 2)));
    let sub_eps = eps / shrink;
    let e_enclosure = series(&BigRational::one(), &sub_eps);
    let ef = series(&frac, &sub_eps);
    Ok(e_enclosure.pow_u32(e_u32).mul_nonneg(&ef))
}

/// sqrt(n) for an integer n >= 0 enclosed within eps, by scaled integer sqrt.
pub fn sqrt_int(n: u64, eps: &BigRational) -> RatInterval {
    // find t with 1/2^t < eps, then isqrt(n * 4^t) / 2^t brackets sqrt(n)
    let mut t: u32 = 1;
    let one = BigInt::one();
    while BigRational::new(one.clone(), BigInt::from(2u64).pow(t)) >= *eps {
        t += 1;
    }
    let scaled = BigUint::from(n) << (2 * t);
    let s = scaled.sqrt();
    let denom = BigInt::from(2u64).pow(t);
    let lo = BigRational::new(BigInt::from(s.clone()), denom.clone());
    let hi = BigRational::new(BigInt::from(s + BigUint::one()), denom);
    RatInterval { lo, hi }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_encloses(iv: &RatInterval, value: f64, eps: f64) {
        let lo = iv.lo.to_f64().unwrap();
        let hi = iv.hi.to_f64().unwrap();
        assert!(lo <= value + eps && value - eps <= hi, "{value} not in [{lo}, {hi}]");
        assert!(hi - lo < 1e-6, "interval too wide: {}", hi - lo);
    }

    #[test]
    fn ln_values() {
        let eps = default_eps();
        assert_encloses(&ln2(&eps), std::f64::consts::LN_2, 1e-12);
        let x = BigRational::from(BigInt::from(17));
        assert_encloses(&ln_rational(&x, &eps).unwrap(), 17f64.ln(), 1e-12);
        let x = BigRational::new(BigInt::from(3), BigInt::from(4));
        assert_encloses(&ln_rational(&x, &eps).unwrap(), 0.75f64.ln(), 1e-12);
        assert!(ln_rational(&BigRational::zero(), &eps).is_err());
    }

    #[test]
    fn exp_values() {
        let eps = default_eps();
        for v in [0.0f64, 1.0, 2.5, 10.0, 20.25] {
            let x = BigRational::new(BigInt::from((v * 4.0) as i64), BigInt::from(4));
            let iv = exp_rational(&x, &eps).unwrap();
            let expected = (x.to_f64().unwrap()).exp();
            let lo = iv.lo.to_f64().unwrap();
            let hi = iv.hi.to_f64().unwrap();
            assert!(lo <= expected && expected <= hi, "e^{v}: {expected} not in [{lo}, {hi}]");
            assert!((hi - lo) / expected < 1e-8);
        }
    }

    #[test]
    fn sqrt_values() {
        let eps = default_eps();
        for n in [0u64, 1, 2, 17, 1000, 999_983] {
            let iv = sqrt_int(n, &eps);
            let s = (n as f64).sqrt();
            let lo = iv.lo.to_f64().unwrap();
            let hi = iv.hi.to_f64().unwrap();
            assert!(lo <= s && s <= hi);
            assert!(hi - lo < 1e-9 + 1e-12);
        }
    }

    #[test]
    fn certified_rounding() {
        let iv = RatInterval {
            lo: BigRational::new(BigInt::from(299), BigInt::from(100)),
            hi: BigRational::new(BigInt::from(301), BigInt::from(100)),
        };
        // straddles 3: neither floor nor ceiling is certified
        assert!(iv.try_floor().is_none());
        assert!(iv.try_ceil().is_none());
        let iv = RatInterval {
            lo: BigRational::new(BigInt::from(301), BigInt::from(100)),
            hi: BigRational::new(BigInt::from(302), BigInt::from(100)),
        };
        assert_eq!(iv.try_floor().unwrap(), BigInt::from(3));
        assert_eq!(iv.try_ceil().unwrap(), BigInt::from(4));
    }
}
