//! Best rational approximation with a bounded denominator.
//!
//! The search descends the Stern-Brocot tree towards the target. Every
//! fraction strictly between the current bounds has a denominator of at least
//! `lo.den + hi.den`, so once that sum exceeds the cap, the answer is the
//! closer of the two bounds. Ties go to the smaller denominator, then the
//! smaller numerator.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::rational::Fraction;

/// Largest denominator cap accepted by [`best_approximation`].
pub const MAX_APPROX_DEN: u64 = 1_000_000_000;
/// Most fractional digits a [`Decimal`] may carry.
pub const MAX_DECIMAL_DIGITS: usize = 18;

/// A decimal literal in `[0, 1]` held as the exact rational `digits / 10^k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decimal {
    text: String,
    value: Fraction,
}

impl Decimal {
    pub fn value(&self) -> Fraction {
        self.value
    }

    pub fn as_str(&self) -> &str {
        &self.text
    }
}

impl fmt::Display for Decimal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.text)
    }
}

impl FromStr for Decimal {
    type Err = Error;

    /// Accepts `digits` or `digits.digits`, e.g. `"1"`, `"0.5"`, `"0.70710678"`.
    fn from_str(s: &str) -> Result<Decimal> {
        let err = |reason| Error::Parse {
            input: s.to_owned(),
            reason,
        };
        let (int, frac) = match s.split_once('.') {
            Some((int, frac)) => (int, frac),
            None => (s, ""),
        };
        let all_digits = |p: &str| p.bytes().all(|b| b.is_ascii_digit());
        if int.is_empty() || !all_digits(int) || !all_digits(frac) || (s.contains('.') && frac.is_empty()) {
            return Err(err("expected a decimal such as 0.75"));
        }
        if frac.len() > MAX_DECIMAL_DIGITS {
            return Err(err("too many fractional digits"));
        }
        let int = int.trim_start_matches('0');
        if int.len() > 1 {
            return Err(err("value must lie in [0, 1]"));
        }
        let scale = 10u64.pow(frac.len() as u32);
        let int_part: u64 = if int.is_empty() { 0 } else { int.parse().expect("digits") };
        let frac_part: u64 = if frac.is_empty() { 0 } else { frac.parse().expect("digits") };
        let num = int_part * scale + frac_part;
        if num > scale {
            return Err(err("value must lie in [0, 1]"));
        }
        Ok(Decimal {
            text: s.to_owned(),
            value: Fraction::new(num, scale)?,
        })
    }
}

/// Cross-product distance `|v - c| * v.den * c.den`.
fn scaled_error(v: Fraction, c: (u128, u128)) -> u128 {
    (v.num() as u128 * c.1).abs_diff(c.0 * v.den() as u128)
}

/// The fraction with denominator `<= max_den` closest to `value`.
pub fn best_approximation(value: Fraction, max_den: u64) -> Result<Fraction> {
    if max_den == 0 {
        return Err(Error::ZeroOrder);
    }
    Error::limit("max_den", max_den, MAX_APPROX_DEN)?;
    if value > Fraction::ONE {
        return Err(Error::OutOfRange(value.to_string()));
    }
    if !value.is_interior() || value.den() <= max_den {
        return Ok(value);
    }

    let cap = max_den as u128;
    let (vn, vd) = (value.num() as u128, value.den() as u128);
    let (mut lo, mut hi) = ((0u128, 1u128), (1u128, 1u128));
    loop {
        let m = (lo.0 + hi.0, lo.1 + hi.1);
        if m.1 > cap {
            break;
        }
        // value has a denominator above the cap, so it never equals m
        let above_lo = vn * lo.1 - vd * lo.0;
        let below_hi = vd * hi.0 - vn * hi.1;
        if vn * m.1 < vd * m.0 {
            let k = ((below_hi - 1) / above_lo).min((cap - hi.1) / lo.1);
            hi = (hi.0 + k * lo.0, hi.1 + k * lo.1);
        } else {
            let k = ((above_lo - 1) / below_hi).min((cap - lo.1) / hi.1);
            lo = (lo.0 + k * hi.0, lo.1 + k * hi.1);
        }
    }

    let lo_err = scaled_error(value, lo)
        .checked_mul(hi.1)
        .ok_or(Error::Overflow("best_approximation"))?;
    let hi_err = scaled_error(value, hi)
        .checked_mul(lo.1)
        .ok_or(Error::Overflow("best_approximation"))?;
    let pick = match lo_err.cmp(&hi_err) {
        Ordering::Less => lo,
        Ordering::Greater => hi,
        Ordering::Equal if (lo.1, lo.0) <= (hi.1, hi.0) => lo,
        Ordering::Equal => hi,
    };
    Fraction::new(pick.0 as u64, pick.1 as u64)
}
