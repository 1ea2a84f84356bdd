//! Exact number types shared by the counting and checking code.
//!
//! Counts are unbounded nonnegative integers and every mean is an exact,
//! reduced rational. Floats only ever appear in human-facing columns.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use std::ops::AddAssign;

/// Exact nonnegative integer (subtree and spanning-tree counts).
pub type Count = BigUint;

/// Exact rational, always reduced with a positive denominator.
pub type Ratio = BigRational;

/// `num / den` as a reduced rational. Panics on a zero denominator.
pub fn ratio(num: &Count, den: &Count) -> Ratio {
    assert!(!den.is_zero(), "zero denominator");
    Ratio::new(BigInt::from(num.clone()), BigInt::from(den.clone()))
}

pub fn ratio_from_ints(num: i64, den: i64) -> Ratio {
    Ratio::new(BigInt::from(num), BigInt::from(den))
}

pub fn to_f64(r: &Ratio) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Lossless string form of an exact rational, `p/q` (or `p` for integers).
pub fn ratio_string(r: &Ratio) -> String {
    r.to_string()
}

/// Render a float with 12 significant digits.
pub fn sig12(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let exp = x.abs().log10().floor() as i32;
    if !(-5..=15).contains(&exp) {
        return format!("{x:.11e}");
    }
    let decimals = (11 - exp).max(0) as usize;
    format!("{x:.decimals$}")
}

pub fn binomial(n: u64, k: u64) -> Count {
    if k > n {
        return Count::zero();
    }
    let k = k.min(n - k);
    let mut acc = Count::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

pub fn pow(base: u64, exp: u64) -> Count {
    num_traits::pow(Count::from(base), exp as usize)
}

/// Running sum that stays in `u128` until it would overflow.
#[derive(Clone, Debug, Default)]
pub(crate) struct Accumulator {
    small: u128,
    big: Count,
}

impl Accumulator {
    pub fn add_small(&mut self, x: u128) {
        match self.small.checked_add(x) {
            Some(s) => self.small = s,
            None => {
                self.big += self.small;
                self.small = x;
            }
        }
    }

    pub fn add_big(&mut self, x: &Count) {
        self.big += x;
    }

    pub fn value(&self) -> Count {
        &self.big + self.small
    }
}

impl AddAssign<&Accumulator> for Accumulator {
    fn add_assign(&mut self, rhs: &Accumulator) {
        self.big += &rhs.big;
        self.add_small(rhs.small);
    }
}

/// A spanning-tree count from the determinant kernel: native when it fits.
#[derive(Clone, Debug)]
pub(crate) enum Kappa {
    Small(u128),
    Big(Count),
}

impl Kappa {
    pub fn into_count(self) -> Count {
        match self {
            Kappa::Small(x) => Count::from(x),
            Kappa::Big(x) => x,
        }
    }

    /// Adds `self * factor` into `acc`.
    pub fn add_scaled_to(&self, factor: u64, acc: &mut Accumulator) {
        match self {
            Kappa::Small(x) => match x.checked_mul(factor as u128) {
                Some(y) => acc.add_small(y),
                None => acc.add_big(&(Count::from(*x) * factor)),
            },
            Kappa::Big(x) => acc.add_big(&(x * factor)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), Count::from(10u32));
        assert_eq!(binomial(0, 0), Count::one());
        assert_eq!(binomial(3, 4), Count::zero());
        assert_eq!(binomial(60, 30), "118264581564861424".parse().unwrap());
    }

    #[test]
    fn accumulator_spills_to_bigint() {
        let mut acc = Accumulator::default();
        acc.add_small(u128::MAX);
        acc.add_small(2);
        assert_eq!(acc.value(), Count::from(u128::MAX) + 2u32);
    }

    #[test]
    fn sig12_formatting() {
        assert_eq!(sig12(7.0 / 3.0), "2.33333333333");
        assert_eq!(sig12(58.0 / 19.0), "3.05263157895");
        assert_eq!(sig12(1.0), "1.00000000000");
    }

    #[test]
    fn ratio_rendering_is_reduced() {
        let r = ratio(&Count::from(30u32), &Count::from(14u32));
        assert_eq!(ratio_string(&r), "15/7");
        assert_eq!(ratio_string(&ratio_from_ints(4, 2)), "2");
    }
}
