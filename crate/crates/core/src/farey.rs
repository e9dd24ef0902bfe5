//! Farey rows.
//!
//! `F_n` is the increasing list of reduced fractions in `[0, 1]` with
//! denominator at most `n`, so `F_1 = [0/1, 1/1]` and `F_2 = [0/1, 1/2, 1/1]`.
//!
//! [`farey_row`] builds the rows one order at a time: row `k + 1` is row `k`
//! with the mediant `(a+c)/(b+d)` inserted between every adjacent pair
//! `a/b, c/d` whose denominators satisfy `b + d <= k + 1`. That costs
//! `sum |F_k|`, roughly cubic in `n`. [`FareyStream`] applies the same
//! insertion rule depth-first and yields `F_n` in `O(|F_n|)` time and `O(n)`
//! memory, which is what large orders need.

use crate::error::{Error, Result};
use crate::rational::{cross_det, extended_gcd, mediant, Fraction, NeighborPair};

/// Default ceiling on the order accepted by [`farey_row`], [`farey_length`]
/// and [`FareyStream`].
pub const MAX_ORDER: u64 = 100_000;

/// Ceiling for the quadratic enumeration in [`farey_row_oracle`].
pub const ORACLE_MAX_ORDER: u64 = 2_000;

/// One Farey row together with the order it was generated for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FareyRow {
    order: u64,
    terms: Vec<Fraction>,
}

impl FareyRow {
    /// Wraps an arbitrary list of terms. The order is taken to be the largest
    /// denominator. Rejects lists that are empty, not strictly increasing, or
    /// do not run from `0/1` to `1/1`.
    pub fn from_terms(terms: Vec<Fraction>) -> Result<FareyRow> {
        let shape_ok = terms.first() == Some(&Fraction::ZERO)
            && terms.last() == Some(&Fraction::ONE)
            && terms.windows(2).all(|w| w[0] < w[1]);
        if !shape_ok {
            return Err(Error::Parse {
                input: format!("{terms:?}"),
                reason: "a row must increase strictly from 0/1 to 1/1",
            });
        }
        let order = terms.iter().map(|f| f.den()).max().unwrap_or(1);
        Ok(FareyRow { order, terms })
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn terms(&self) -> &[Fraction] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn into_terms(self) -> Vec<Fraction> {
        self.terms
    }

    /// Adjacent pairs, left to right.
    pub fn neighbor_pairs(&self) -> impl Iterator<Item = NeighborPair> + '_ {
        self.terms.windows(2).map(|w| NeighborPair::new(w[0], w[1]))
    }
}

fn check_order(n: u64, limit: u64) -> Result<()> {
    if n == 0 {
        return Err(Error::ZeroOrder);
    }
    Error::limit("order", n, limit)
}

/// Rows `F_1, F_2, ...` produced by repeated mediant insertion.
///
/// Each call to `next` materializes a fresh row from the previous one.
#[derive(Debug, Clone)]
pub struct FareyLevels {
    row: Option<FareyRow>,
}

impl FareyLevels {
    pub fn new() -> FareyLevels {
        FareyLevels { row: None }
    }
}

impl Default for FareyLevels {
    fn default() -> Self {
        Self::new()
    }
}

impl Iterator for FareyLevels {
    type Item = FareyRow;

    fn next(&mut self) -> Option<FareyRow> {
        let next = match &self.row {
            None => FareyRow {
                order: 1,
                terms: vec![Fraction::ZERO, Fraction::ONE],
            },
            Some(prev) => insert_mediants(prev),
        };
        self.row = Some(next.clone());
        Some(next)
    }
}

fn insert_mediants(prev: &FareyRow) -> FareyRow {
    let order = prev.order + 1;
    let mut terms = Vec::with_capacity(prev.terms.len() + order as usize);
    for pair in prev.terms.windows(2) {
        let (left, right) = (pair[0], pair[1]);
        terms.push(left);
        if left.den() + right.den() <= order {
            // denominators are at most `order`, so this cannot overflow
            let m = mediant(left.raw(), right.raw()).expect("mediant of row terms");
            // adjacent terms are unimodular, which makes their mediant reduced
            debug_assert!(m.is_reduced());
            terms.push(Fraction::from_reduced(m.num, m.den));
        }
    }
    terms.push(Fraction::ONE);
    FareyRow { order, terms }
}

/// `F_n` by mediant insertion, starting from `F_1 = [0/1, 1/1]`.
pub fn farey_row(n: u64) -> Result<FareyRow> {
    farey_row_with_limit(n, MAX_ORDER)
}

pub fn farey_row_with_limit(n: u64, limit: u64) -> Result<FareyRow> {
    check_order(n, limit)?;
    Ok(FareyLevels::new()
        .nth((n - 1) as usize)
        .expect("FareyLevels never ends"))
}

/// `F_n` by brute force: enumerate every `a/b` with `0 <= a <= b <= n`,
/// reduce, sort and deduplicate. Shares nothing with the insertion path
/// except the [`Fraction`] type.
pub fn farey_row_oracle(n: u64) -> Result<FareyRow> {
    check_order(n, ORACLE_MAX_ORDER)?;
    let mut terms = Vec::new();
    for b in 1..=n {
        for a in 0..=b {
            terms.push(Fraction::new(a, b)?);
        }
    }
    terms.sort_unstable();
    terms.dedup();
    Ok(FareyRow { order: n, terms })
}

/// Streams the terms of `F_n` in increasing order without storing the row.
///
/// Works on the interval between the last emitted term and the top of a stack
/// of pending right ends: while their mediant still has denominator `<= n` it
/// becomes the new right end, otherwise the right end is emitted.
#[derive(Debug, Clone)]
pub struct FareyStream {
    order: u64,
    left: Option<Fraction>,
    pending: Vec<Fraction>,
}

impl FareyStream {
    pub fn new(n: u64) -> Result<FareyStream> {
        Self::with_limit(n, MAX_ORDER)
    }

    pub fn with_limit(n: u64, limit: u64) -> Result<FareyStream> {
        check_order(n, limit)?;
        Ok(FareyStream {
            order: n,
            left: None,
            pending: vec![Fraction::ONE],
        })
    }
}

impl Iterator for FareyStream {
    type Item = Fraction;

    fn next(&mut self) -> Option<Fraction> {
        let Some(left) = self.left else {
            self.left = Some(Fraction::ZERO);
            return Some(Fraction::ZERO);
        };
        loop {
            let right = *self.pending.last()?;
            if left.den() + right.den() <= self.order {
                let m = mediant(left.raw(), right.raw()).expect("mediant of row terms");
                debug_assert!(m.is_reduced());
                self.pending.push(Fraction::from_reduced(m.num, m.den));
            } else {
                self.pending.pop();
                self.left = Some(right);
                return Some(right);
            }
        }
    }
}

/// Euler's totient for `0..=n` by a linear sieve.
pub fn totients(n: u64) -> Vec<u64> {
    let n = n as usize;
    let mut phi = vec![0u64; n + 1];
    let mut primes: Vec<usize> = Vec::new();
    if n >= 1 {
        phi[1] = 1;
    }
    for i in 2..=n {
        if phi[i] == 0 {
            phi[i] = (i - 1) as u64;
            primes.push(i);
        }
        for &p in &primes {
            let ip = i * p;
            if ip > n {
                break;
            }
            if i % p == 0 {
                phi[ip] = phi[i] * p as u64;
                break;
            }
            phi[ip] = phi[i] * (p as u64 - 1);
        }
    }
    phi
}

/// `|F_n| = 1 + phi(1) + ... + phi(n)`, without building the row.
pub fn farey_length(n: u64) -> Result<u64> {
    check_order(n, MAX_ORDER)?;
    Ok(1 + totients(n).iter().sum::<u64>())
}

/// The terms immediately left and right of `f` in `F_n`.
///
/// Computed directly: the left neighbor `a/b` is the unique term with
/// `p*b - a*q = 1` and the largest `b <= n`, and symmetrically on the right.
pub fn farey_neighbors(f: Fraction, n: u64) -> Result<NeighborPair> {
    if n == 0 {
        return Err(Error::ZeroOrder);
    }
    if f.den() > n {
        return Err(Error::NotInRow {
            fraction: f.to_string(),
            order: n,
        });
    }
    if !f.is_interior() {
        return Err(Error::Endpoint(f.to_string()));
    }
    let (p, q) = (f.num(), f.den());
    // q >= 2 here, so the inverse lies in 1..q
    let inv = extended_gcd(p, q)?.x as u64;
    let largest_in_class = |residue: u64| residue + (n - residue) / q * q;

    let b = largest_in_class(inv);
    let a = ((p as u128 * b as u128 - 1) / q as u128) as u64;
    let d = largest_in_class(q - inv);
    let c = ((p as u128 * d as u128 + 1) / q as u128) as u64;

    let pair = NeighborPair::new(Fraction::new(a, b)?, Fraction::new(c, d)?);
    debug_assert_eq!(cross_det(pair.left, f), 1);
    debug_assert_eq!(cross_det(f, pair.right), 1);
    Ok(pair)
}

/// Largest denominator among the row's terms.
pub fn row_order(row: &FareyRow) -> u64 {
    row.terms.iter().map(|f| f.den()).max().unwrap_or(0)
}
