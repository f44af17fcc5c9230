//! Exact-arithmetic helpers for the irrational sides of the bounds.
//!
//! A `SqrtSum` is a nonnegative value r + Σ aᵢ·√cᵢ with rational r, aᵢ and
//! integer radicands cᵢ. Perfect-square radicands are folded into the
//! rational part on entry, so a sum with any surviving radical is
//! irrational and every comparison against a rational is decidable by
//! refining rational square-root enclosures.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Clone, Debug, Default)]
pub struct SqrtSum {
    rational: BigRational,
    /// (coefficient, radicand), radicand not a perfect square, coefficient ≥ 0
    terms: Vec<(BigRational, BigUint)>,
}

impl SqrtSum {
    pub fn zero() -> Self {
        SqrtSum::default()
    }

    pub fn from_rational(r: BigRational) -> Self {
        SqrtSum {
            rational: r,
            terms: Vec::new(),
        }
    }

    /// Adds coef·√radicand; perfect squares fold into the rational part.
    pub fn add_sqrt_term(&mut self, coef: BigRational, radicand: BigUint) {
        assert!(!coef.is_negative(), "SqrtSum terms must be nonnegative");
        if coef.is_zero() || radicand.is_zero() {
            return;
        }
        let root = radicand.sqrt();
        if &root * &root == radicand {
            self.rational += coef * BigRational::from(BigInt::from(root));
            return;
        }
        for (c, r) in &mut self.terms {
            if *r == radicand {
                *c += coef;
                return;
            }
        }
        self.terms.push((coef, radicand));
    }

    /// Adds coef/√radicand as coef/radicand · √radicand.
    pub fn add_inv_sqrt_term(&mut self, coef: BigRational, radicand: BigUint) {
        if radicand.is_zero() {
            panic!("division by √0");
        }
        let scaled = coef / BigRational::from(BigInt::from(radicand.clone()));
        self.add_sqrt_term(scaled, radicand);
    }

    pub fn is_rational(&self) -> bool {
        self.terms.is_empty()
    }

    /// Rational enclosure [lo, hi] with hi − lo ≤ #terms · 2^−bits · Σ coefs.
    pub fn bounds(&self, bits: u32) -> (BigRational, BigRational) {
        let mut lo = self.rational.clone();
        let mut hi = self.rational.clone();
        for (coef, radicand) in &self.terms {
            let (slo, shi) = sqrt_bounds(radicand, bits);
            lo += coef * slo;
            hi += coef * shi;
        }
        (lo, hi)
    }

    /// Compares against a rational exactly. Decidable because a nonempty
    /// term list makes the value irrational (radicands are square-free of
    /// perfect squares and coefficients positive).
    pub fn cmp_rational(&self, rhs: &BigRational) -> std::cmp::Ordering {
        if self.is_rational() {
            return self.rational.cmp(rhs);
        }
        let mut bits = 64;
        loop {
            let (lo, hi) = self.bounds(bits);
            if lo > *rhs {
                return std::cmp::Ordering::Greater;
            }
            if hi < *rhs {
                return std::cmp::Ordering::Less;
            }
            bits *= 2;
            assert!(bits <= 1 << 16, "sqrt-sum comparison failed to resolve");
        }
    }

    /// Smallest-denominator style rational upper rounding at 2^−bits.
    pub fn upper_rounding(&self, bits: u32) -> BigRational {
        self.bounds(bits).1
    }

    pub fn lower_rounding(&self, bits: u32) -> BigRational {
        self.bounds(bits).0
    }

    pub fn to_f64(&self) -> f64 {
        let (lo, hi) = self.bounds(96);
        let l = lo.to_f64().unwrap_or(f64::NAN);
        let h = hi.to_f64().unwrap_or(f64::NAN);
        (l + h) / 2.0
    }
}

/// Rational enclosure of √c at 2^−bits resolution: floor/ceil of
/// √(c·4^bits) / 2^bits.
pub fn sqrt_bounds(c: &BigUint, bits: u32) -> (BigRational, BigRational) {
    let scaled = c << (2 * bits);
    let root = scaled.sqrt();
    let denom = BigInt::from(BigUint::one() << bits);
    let lo = BigRational::new(BigInt::from(root.clone()), denom.clone());
    let hi = BigRational::new(BigInt::from(root + BigUint::one()), denom);
    (lo, hi)
}

/// Natural logarithm of a positive rational as a fixed-point enclosure.
///
/// Accuracy: the returned value differs from ln(x) by less than 2^−(bits−16);
/// with bits = 384 that is far beyond 50 decimal digits.
pub fn ln_rational(x: &BigRational, bits: u32) -> BigRational {
    assert!(x.is_positive(), "log of nonpositive value");
    let num = x.numer().to_biguint().unwrap();
    let den = x.denom().to_biguint().unwrap();
    ln_biguint(&num, bits) - ln_biguint(&den, bits)
}

/// ln of a positive integer: x = 2^e · m with m ∈ [1,2), then
/// ln m = 2·atanh((m−1)/(m+1)) summed in fixed point.
pub fn ln_biguint(x: &BigUint, bits: u32) -> BigRational {
    assert!(!x.is_zero());
    let scale = BigInt::from(BigUint::one() << bits);
    if x.is_one() {
        return BigRational::zero();
    }
    let e = x.bits() - 1;
    // z = (x - 2^e) / (x + 2^e) in fixed point
    let pow = BigUint::one() << e;
    let z_num = BigInt::from(x - &pow) << bits;
    let z_den = BigInt::from(x + &pow);
    let z = z_num / z_den;
    let ln_m = atanh_fixed(&z, bits) * BigInt::from(2);
    let ln2 = ln2_fixed(bits);
    let total = ln_m + ln2 * BigInt::from(e);
    BigRational::new(total, scale)
}

/// atanh of a fixed-point value z·2^−bits with |z·2^−bits| ≤ 1/3; returns
/// the fixed-point mantissa.
fn atanh_fixed(z: &BigInt, bits: u32) -> BigInt {
    let z2 = (z * z) >> bits;
    let mut term = z.clone();
    let mut total = BigInt::zero();
    let mut k: u64 = 1;
    while !term.is_zero() {
        total += &term / BigInt::from(k);
        term = (&term * &z2) >> bits;
        k += 2;
    }
    total
}

fn ln2_fixed(bits: u32) -> BigInt {
    // ln 2 = 2 atanh(1/3)
    let third = BigInt::from(BigUint::one() << bits) / BigInt::from(3);
    atanh_fixed(&third, bits) * BigInt::from(2)
}

/// Renders a rational as a decimal string with `digits` fractional digits,
/// truncated toward zero.
pub fn decimal_string(x: &BigRational, digits: u32) -> String {
    let sign = if x.is_negative() { "-" } else { "" };
    let abs = x.abs();
    let scaled = (abs.numer() * BigInt::from(10u32).pow(digits)) / abs.denom();
    let s = scaled.to_string();
    let s = format!("{:0>width$}", s, width = (digits + 1) as usize);
    let split = s.len() - digits as usize;
    format!("{sign}{}.{}", &s[..split], &s[split..])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn perfect_squares_fold_to_rational() {
        let mut s = SqrtSum::zero();
        s.add_sqrt_term(rat(1, 2), BigUint::from(9u32));
        assert!(s.is_rational());
        assert_eq!(s.cmp_rational(&rat(3, 2)), std::cmp::Ordering::Equal);
    }

    #[test]
    fn sqrt_two_comparisons() {
        let mut s = SqrtSum::zero();
        s.add_sqrt_term(BigRational::one(), BigUint::from(2u32));
        assert_eq!(s.cmp_rational(&rat(141421356, 100000000)), std::cmp::Ordering::Greater);
        assert_eq!(s.cmp_rational(&rat(141421357, 100000000)), std::cmp::Ordering::Less);
    }

    #[test]
    fn inv_sqrt_term() {
        // 1/√3 = √3/3 ≈ 0.57735
        let mut s = SqrtSum::zero();
        s.add_inv_sqrt_term(BigRational::one(), BigUint::from(3u32));
        assert_eq!(s.cmp_rational(&rat(577, 1000)), std::cmp::Ordering::Greater);
        assert_eq!(s.cmp_rational(&rat(578, 1000)), std::cmp::Ordering::Less);
    }

    #[test]
    fn bounds_bracket_value() {
        let mut s = SqrtSum::zero();
        s.add_sqrt_term(rat(3, 1), BigUint::from(3u32)); // 3√3
        s.add_sqrt_term(rat(2, 1), BigUint::from(2u32)); // + 2√2
        let (lo, hi) = s.bounds(128);
        assert!(lo < hi);
        let value = 3.0 * 3.0f64.sqrt() + 2.0 * 2.0f64.sqrt();
        assert!((s.to_f64() - value).abs() < 1e-12);
        assert!(lo.to_f64().unwrap() <= value && value <= hi.to_f64().unwrap());
    }

    #[test]
    fn ln_matches_f64() {
        for x in [2u64, 3, 10, 40320, 1_000_000_007] {
            let got = ln_rational(&BigRational::from(BigInt::from(x)), 384)
                .to_f64()
                .unwrap();
            assert!((got - (x as f64).ln()).abs() < 1e-12, "ln {x}");
        }
        let half = rat(1, 2);
        assert!((ln_rational(&half, 384).to_f64().unwrap() + std::f64::consts::LN_2).abs() < 1e-12);
    }

    #[test]
    fn ln_self_consistency_high_precision() {
        // ln(a*b) = ln a + ln b to well below the target precision
        let bits = 384;
        let a = BigUint::from(123456u64);
        let b = BigUint::from(987654u64);
        let lhs = ln_biguint(&(a.clone() * b.clone()), bits);
        let rhs = ln_biguint(&a, bits) + ln_biguint(&b, bits);
        let diff = (lhs - rhs).abs();
        let tol = BigRational::new(BigInt::one(), BigInt::from(BigUint::one() << 300));
        assert!(diff < tol);
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(decimal_string(&rat(1, 4), 4), "0.2500");
        assert_eq!(decimal_string(&rat(-7, 2), 2), "-3.50");
        assert_eq!(decimal_string(&rat(5, 1), 1), "5.0");
    }
}
