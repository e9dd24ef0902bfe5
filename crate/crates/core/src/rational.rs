//! Reduced fractions, the Euclidean algorithm and the mediant.
//!
//! All arithmetic is on 64-bit integers. Every multiply and add that could
//! leave that range is checked and reported as [`Error::Overflow`]; nothing
//! wraps.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A nonnegative rational number in lowest terms.
///
/// Equality is structural, which coincides with value equality because the
/// representation is canonical. `Ord` compares values by cross-multiplication
/// in 128-bit arithmetic, so it is exact for every pair of fractions; use
/// [`compare`] when the 64-bit overflow contract matters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Fraction {
    num: u64,
    den: u64,
}

impl Fraction {
    pub const ZERO: Fraction = Fraction { num: 0, den: 1 };
    pub const ONE: Fraction = Fraction { num: 1, den: 1 };
    /// Root of the Stern-Brocot tree.
    pub const HALF: Fraction = Fraction { num: 1, den: 2 };

    /// Reduces `num/den` to lowest terms.
    pub fn new(num: u64, den: u64) -> Result<Fraction> {
        if den == 0 {
            return Err(Error::ZeroDenominator);
        }
        let g = euclid(num, den);
        Ok(Fraction {
            num: num / g,
            den: den / g,
        })
    }

    /// Caller guarantees `den >= 1` and `gcd(num, den) == 1`.
    pub(crate) const fn from_reduced(num: u64, den: u64) -> Fraction {
        Fraction { num, den }
    }

    pub fn num(self) -> u64 {
        self.num
    }

    pub fn den(self) -> u64 {
        self.den
    }

    /// The same value as an unreduced representation, for use with [`mediant`].
    pub fn raw(self) -> RawFraction {
        RawFraction {
            num: self.num,
            den: self.den,
        }
    }

    /// True for values strictly between 0/1 and 1/1.
    pub fn is_interior(self) -> bool {
        self.num > 0 && self.num < self.den
    }
}

impl Ord for Fraction {
    fn cmp(&self, other: &Self) -> Ordering {
        let lhs = self.num as u128 * other.den as u128;
        let rhs = other.num as u128 * self.den as u128;
        lhs.cmp(&rhs)
    }
}

impl PartialOrd for Fraction {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl FromStr for Fraction {
    type Err = Error;

    /// Parses `"num/den"` (ASCII, no whitespace). Unreduced input is reduced.
    fn from_str(s: &str) -> Result<Fraction> {
        let parse_err = |reason| Error::Parse {
            input: s.to_owned(),
            reason,
        };
        let (num, den) = s.split_once('/').ok_or_else(|| parse_err("expected num/den"))?;
        let part = |p: &str| -> Result<i64> {
            let digits = p.strip_prefix('-').unwrap_or(p);
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(parse_err("numerator and denominator must be decimal integers"));
            }
            p.parse().map_err(|_| parse_err("integer does not fit in 64 bits"))
        };
        make_fraction(part(num)?, part(den)?)
    }
}

impl TryFrom<String> for Fraction {
    type Error = Error;

    fn try_from(s: String) -> Result<Fraction> {
        s.parse()
    }
}

impl From<Fraction> for String {
    fn from(f: Fraction) -> String {
        f.to_string()
    }
}

/// A fraction as written, not necessarily in lowest terms.
///
/// The mediant depends on the representation: `1/2 ⊕ 1/3 = 2/5` but
/// `2/4 ⊕ 1/3 = 3/7`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RawFraction {
    pub num: u64,
    pub den: u64,
}

impl RawFraction {
    pub fn new(num: u64, den: u64) -> Result<RawFraction> {
        if den == 0 {
            return Err(Error::ZeroDenominator);
        }
        Ok(RawFraction { num, den })
    }

    pub fn reduce(self) -> Fraction {
        // den >= 1 is a type invariant
        let g = euclid(self.num, self.den);
        Fraction::from_reduced(self.num / g, self.den / g)
    }

    pub fn is_reduced(self) -> bool {
        euclid(self.num, self.den) == 1
    }
}

impl From<Fraction> for RawFraction {
    fn from(f: Fraction) -> RawFraction {
        f.raw()
    }
}

impl fmt::Display for RawFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

/// Result of [`extended_gcd`]: `a*x + b*y = g`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExtGcdResult {
    pub g: u64,
    pub x: i64,
    pub y: i64,
}

/// Two fractions `left < right` related by `right.num*left.den - left.num*right.den = 1`
/// whenever they come from a Farey row or a Stern-Brocot walk.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct NeighborPair {
    pub left: Fraction,
    pub right: Fraction,
}

impl NeighborPair {
    pub fn new(left: Fraction, right: Fraction) -> NeighborPair {
        NeighborPair { left, right }
    }

    /// `right.num*left.den - left.num*right.den`, exact.
    pub fn determinant(&self) -> i128 {
        cross_det(self.left, self.right)
    }

    pub fn is_unimodular(&self) -> bool {
        self.determinant() == 1
    }
}

/// `q.num*p.den - p.num*q.den` in 128-bit arithmetic.
pub(crate) fn cross_det(p: Fraction, q: Fraction) -> i128 {
    q.num as i128 * p.den as i128 - p.num as i128 * q.den as i128
}

/// Builds a reduced fraction from signed input.
pub fn make_fraction(num: i64, den: i64) -> Result<Fraction> {
    if den == 0 {
        return Err(Error::ZeroDenominator);
    }
    if num < 0 {
        return Err(Error::NegativeInput(num));
    }
    if den < 0 {
        return Err(Error::NegativeInput(den));
    }
    Fraction::new(num as u64, den as u64)
}

fn euclid(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Greatest common divisor by the remainder recursion.
pub fn gcd(a: u64, b: u64) -> Result<u64> {
    if a == 0 && b == 0 {
        return Err(Error::BothZero);
    }
    Ok(euclid(a, b))
}

/// Extended Euclidean algorithm.
///
/// The coefficients are normalized so that `0 <= x < b/g` (for `b = 0` the
/// result is `x = 1, y = 0`). When `b/g = 1` this forces `x = 0, y = 1`.
pub fn extended_gcd(a: u64, b: u64) -> Result<ExtGcdResult> {
    if a == 0 && b == 0 {
        return Err(Error::BothZero);
    }
    if b == 0 {
        return Ok(ExtGcdResult { g: a, x: 1, y: 0 });
    }

    // a*s + b*t = r for the two most recent remainders
    let (mut r0, mut r1) = (a as i128, b as i128);
    let (mut s0, mut s1) = (1i128, 0i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    let g = r0;
    // shift along (b/g, -a/g) so that x lands in [0, b/g)
    let (step_x, step_y) = (b as i128 / g, a as i128 / g);
    let x = s0.rem_euclid(step_x);
    let k = (x - s0) / step_x;
    let y = t0 - k * step_y;

    let to_i64 = |v: i128| i64::try_from(v).map_err(|_| Error::Overflow("extended_gcd coefficient"));
    Ok(ExtGcdResult {
        g: g as u64,
        x: to_i64(x)?,
        y: to_i64(y)?,
    })
}

/// `(p.num + q.num) / (p.den + q.den)`, not reduced.
pub fn mediant(p: RawFraction, q: RawFraction) -> Result<RawFraction> {
    let num = p.num.checked_add(q.num).ok_or(Error::Overflow("mediant numerator"))?;
    let den = p.den.checked_add(q.den).ok_or(Error::Overflow("mediant denominator"))?;
    Ok(RawFraction { num, den })
}

/// Compares by cross-multiplication in 64-bit arithmetic.
pub fn compare(p: Fraction, q: Fraction) -> Result<Ordering> {
    let lhs = p.num.checked_mul(q.den).ok_or(Error::Overflow("compare"))?;
    let rhs = q.num.checked_mul(p.den).ok_or(Error::Overflow("compare"))?;
    Ok(lhs.cmp(&rhs))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn frac(n: u64, d: u64) -> Fraction {
        Fraction::new(n, d).unwrap()
    }

    fn raw(n: u64, d: u64) -> RawFraction {
        RawFraction::new(n, d).unwrap()
    }

    fn gcd_by_trial(a: u64, b: u64) -> u64 {
        (1..=a.max(b)).rev().find(|&d| a.is_multiple_of(d) && b.is_multiple_of(d)).unwrap()
    }

    fn reduced_up_to(max_den: u64) -> Vec<Fraction> {
        let mut out = Vec::new();
        for den in 1..=max_den {
            for num in 0..=den {
                if euclid(num, den) == 1 {
                    out.push(Fraction::from_reduced(num, den));
                }
            }
        }
        out
    }

    #[test]
    fn make_fraction_reduces() {
        assert_eq!(make_fraction(2, 4), Ok(frac(1, 2)));
        assert_eq!(make_fraction(0, 7).map(|f| (f.num(), f.den())), Ok((0, 1)));
        assert_eq!(make_fraction(3, 7).map(|f| (f.num(), f.den())), Ok((3, 7)));
    }

    #[test]
    fn make_fraction_errors() {
        assert_eq!(make_fraction(1, 0), Err(Error::ZeroDenominator));
        assert_eq!(make_fraction(-1, 2), Err(Error::NegativeInput(-1)));
        assert_eq!(make_fraction(1, -2), Err(Error::NegativeInput(-2)));
    }

    #[test]
    fn reduction_is_idempotent() {
        for f in reduced_up_to(40) {
            assert_eq!(make_fraction(f.num() as i64, f.den() as i64), Ok(f));
        }
    }

    #[test]
    fn parse_and_display() {
        assert_eq!("3/7".parse::<Fraction>(), Ok(frac(3, 7)));
        assert_eq!("6/14".parse::<Fraction>(), Ok(frac(3, 7)));
        assert_eq!(frac(6, 14).to_string(), "3/7");
        assert_eq!("1/0".parse::<Fraction>(), Err(Error::ZeroDenominator));
        assert_eq!("-1/2".parse::<Fraction>(), Err(Error::NegativeInput(-1)));
        for bad in ["", "3", "3/", "/7", " 3/7", "3/7 ", "3 /7", "+3/7", "a/b", "1/2/3"] {
            assert_eq!(bad.parse::<Fraction>().map_err(|e| e.name()), Err("Parse"), "{bad:?}");
        }
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(gcd(240, 46), Ok(gcd_by_trial(240, 46)));
        assert_eq!(gcd(240, 46), Ok(2));
        assert_eq!(gcd(7, 0), Ok(7));
        assert_eq!(gcd(5, 7), Ok(1));
        assert_eq!(gcd(0, 0), Err(Error::BothZero));
    }

    #[test]
    fn extended_gcd_examples() {
        assert_eq!(extended_gcd(5, 7), Ok(ExtGcdResult { g: 1, x: 3, y: -2 }));
        assert_eq!(extended_gcd(0, 1), Ok(ExtGcdResult { g: 1, x: 0, y: 1 }));
        assert_eq!(extended_gcd(6, 4), Ok(ExtGcdResult { g: 2, x: 1, y: -1 }));
        assert_eq!(extended_gcd(7, 0), Ok(ExtGcdResult { g: 7, x: 1, y: 0 }));
        assert_eq!(extended_gcd(0, 0), Err(Error::BothZero));
    }

    #[test]
    fn extended_gcd_examples_match_exhaustive_search() {
        // smallest x in [0, b/g) with a*x = g (mod b)
        for (a, b) in [(5u64, 7u64), (6, 4), (240, 46)] {
            let g = gcd_by_trial(a, b);
            let x = (0..b / g).find(|x| (a * x) % b == g % b).unwrap();
            let r = extended_gcd(a, b).unwrap();
            assert_eq!((r.g, r.x), (g, x as i64));
        }
    }

    #[test]
    fn extended_gcd_identity_exhaustive() {
        for a in 1..=500u64 {
            for b in 1..=500u64 {
                let r = extended_gcd(a, b).unwrap();
                assert_eq!(a as i128 * r.x as i128 + b as i128 * r.y as i128, r.g as i128);
                assert_eq!(a % r.g, 0);
                assert_eq!(b % r.g, 0);
                let step = (b / r.g) as i64;
                if step > 1 {
                    assert!((0..step).contains(&r.x), "({a}, {b}) -> {r:?}");
                }
            }
        }
    }

    #[test]
    fn extended_gcd_is_greatest() {
        // trial division is quadratic in the range; sample a sub-grid
        for a in (1..=500u64).step_by(7) {
            for b in (1..=500u64).step_by(11) {
                assert_eq!(extended_gcd(a, b).unwrap().g, gcd_by_trial(a, b));
            }
        }
    }

    #[test]
    fn extended_gcd_large_inputs() {
        let r = extended_gcd(u64::MAX, u64::MAX - 1).unwrap();
        assert_eq!((r.g, r.x, r.y), (1, 1, -1));
        // x = (b + 1) / 2 = 2^63 does not fit in i64
        assert_eq!(extended_gcd(2, u64::MAX), Err(Error::Overflow("extended_gcd coefficient")));
    }

    #[test]
    fn mediant_examples() {
        assert_eq!(mediant(raw(0, 1), raw(1, 1)), Ok(raw(1, 2)));
        assert_eq!(mediant(raw(1, 3), raw(1, 2)), Ok(raw(2, 5)));
        let m = mediant(raw(1, 2), raw(2, 4)).unwrap();
        assert_eq!(m, raw(3, 6));
        assert_eq!(m.reduce(), frac(1, 2));
        assert!(matches!(
            mediant(raw(u64::MAX, u64::MAX), raw(1, 1)),
            Err(Error::Overflow(_))
        ));
    }

    #[test]
    fn mediant_lies_strictly_between() {
        let all = reduced_up_to(50);
        for &p in &all {
            for &q in &all {
                if p >= q {
                    continue;
                }
                let m = mediant(p.raw(), q.raw()).unwrap();
                let (a, b, c, d) = (p.num() as i128, p.den() as i128, q.num() as i128, q.den() as i128);
                // numerators of m - p = (bc - ad) / (b(b+d)) and q - m = (bc - ad) / (d(b+d))
                let left_gap = (a + c) * b - a * (b + d);
                let right_gap = c * (b + d) - (a + c) * d;
                assert!(left_gap > 0 && right_gap > 0);
                let m = m.reduce();
                assert!(p < m && m < q, "{p} {m} {q}");
            }
        }
    }

    #[test]
    fn compare_examples() {
        assert_eq!(compare(frac(1, 3), frac(1, 2)), Ok(Ordering::Less));
        assert_eq!(compare(frac(2, 4), frac(1, 2)), Ok(Ordering::Equal));
        assert_eq!(compare(frac(3, 7), frac(2, 5)), Ok(Ordering::Greater));
        let huge = frac(u64::MAX - 1, u64::MAX);
        assert!(matches!(compare(huge, frac(1, 3)), Err(Error::Overflow(_))));
        assert_eq!(huge.cmp(&frac(1, 3)), Ordering::Greater);
    }

    #[test]
    fn compare_is_a_total_order() {
        let all = reduced_up_to(30);
        let cmp = |p, q| compare(p, q).unwrap();
        for &p in &all {
            for &q in &all {
                let pq = cmp(p, q);
                assert_eq!(pq, cmp(q, p).reverse());
                assert_eq!(pq == Ordering::Equal, p == q);
                assert_eq!(pq, p.cmp(&q));
                for &r in &all {
                    if pq != Ordering::Greater && cmp(q, r) != Ordering::Greater {
                        assert_ne!(cmp(p, r), Ordering::Greater);
                    }
                }
            }
        }
    }

    #[test]
    fn neighbor_determinant() {
        assert_eq!(NeighborPair::new(frac(2, 5), frac(1, 2)).determinant(), 1);
        assert!(!NeighborPair::new(frac(1, 3), frac(2, 3)).is_unimodular());
    }

    #[test]
    fn serde_as_string() {
        let json = serde_json::to_string(&frac(3, 7)).unwrap();
        assert_eq!(json, "\"3/7\"");
        assert_eq!(serde_json::from_str::<Fraction>("\"2/4\"").unwrap(), frac(1, 2));
    }
}
