//! Bezout certificates `m*x + n*y = 1` for coprime `m, n`.
//!
//! [`bezout_via_tree`] reads the certificate off the Stern-Brocot tree: if
//! `m/n` is created from the bounds `m1/n1 < m2/n2`, those bounds satisfy
//! `m2*n1 - m1*n2 = 1`, and so does the pair `(m1/n1, m/n)`, giving
//! `n1*m - m1*n = 1`. [`bezout_via_euclid`] takes it from the extended
//! Euclidean algorithm instead, so the two can check each other.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::{extended_gcd, gcd, Fraction};
use crate::stern_brocot::creation_neighbors;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct BezoutCertificate {
    pub m: u64,
    pub n: u64,
    pub x: i64,
    pub y: i64,
}

#[derive(Serialize)]
struct CertificateJson {
    m: u64,
    n: u64,
    x: i64,
    y: i64,
    check: &'static str,
}

impl BezoutCertificate {
    /// `{"m":..,"n":..,"x":..,"y":..,"check":"m*x+n*y=1"}`, keys in that order.
    pub fn to_json(&self) -> String {
        let doc = CertificateJson {
            m: self.m,
            n: self.n,
            x: self.x,
            y: self.y,
            check: "m*x+n*y=1",
        };
        serde_json::to_string(&doc).expect("plain struct serializes")
    }
}

fn require_coprime(m: u64, n: u64) -> Result<()> {
    let g = gcd(m, n)?;
    if g == 1 {
        Ok(())
    } else {
        Err(Error::NotCoprime { m, n, gcd: g })
    }
}

fn to_i64(v: u64) -> Result<i64> {
    i64::try_from(v).map_err(|_| Error::Overflow("certificate coefficient"))
}

/// Certificate from the creation neighbors of `m/n` (or `n/m`).
///
/// For `m < n` the result satisfies `0 < x <= n` and `-m <= y <= 0`.
/// For `m > n` the pair is solved as `(n, m)` and the coefficients swapped.
pub fn bezout_via_tree(m: u64, n: u64) -> Result<BezoutCertificate> {
    require_coprime(m, n)?;
    if m == n {
        // coprime forces m = n = 1
        return Ok(BezoutCertificate { m, n, x: 1, y: 0 });
    }
    let (small, large) = if m < n { (m, n) } else { (n, m) };
    if small == 0 {
        // (0, 1) or (1, 0)
        let (x, y) = if m == 0 { (0, 1) } else { (1, 0) };
        return Ok(BezoutCertificate { m, n, x, y });
    }
    let left = creation_neighbors(Fraction::new(small, large)?)?.left;
    // left.den * small - left.num * large = 1
    let (a, b) = (to_i64(left.den())?, -to_i64(left.num())?);
    let (x, y) = if m < n { (a, b) } else { (b, a) };
    Ok(BezoutCertificate { m, n, x, y })
}

/// Certificate from [`extended_gcd`], with `0 <= x < n`.
///
/// `(1, 1)` is answered with `x = 1, y = 0` to agree with the tree.
pub fn bezout_via_euclid(m: u64, n: u64) -> Result<BezoutCertificate> {
    require_coprime(m, n)?;
    if m == 1 && n == 1 {
        return Ok(BezoutCertificate { m, n, x: 1, y: 0 });
    }
    let r = extended_gcd(m, n)?;
    Ok(BezoutCertificate { m, n, x: r.x, y: r.y })
}

/// Whether `m*x + n*y = 1`, evaluated in checked 64-bit arithmetic.
pub fn verify_certificate(c: &BezoutCertificate) -> Result<bool> {
    let overflow = || Error::Overflow("verify_certificate");
    let m = i64::try_from(c.m).map_err(|_| overflow())?;
    let n = i64::try_from(c.n).map_err(|_| overflow())?;
    let mx = m.checked_mul(c.x).ok_or_else(overflow)?;
    let ny = n.checked_mul(c.y).ok_or_else(overflow)?;
    Ok(mx.checked_add(ny).ok_or_else(overflow)? == 1)
}
