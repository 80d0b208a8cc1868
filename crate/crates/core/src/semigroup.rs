//! The numerical semigroup generated by two coprime integers.

use crate::error::{Error, Result};

/// Largest supported value of `p * q`.
pub const MAX_PRODUCT: i64 = 1 << 31;

pub(crate) fn gcd(mut a: i64, mut b: i64) -> i64 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

/// The semigroup `{a*p + b*q : a, b >= 0}` for coprime `p, q >= 2`.
///
/// Construction sieves membership on `[0, p*q]`; everything above the
/// Frobenius number `p*q - p - q` is a member, so the table is complete.
/// Neither generator is required to be the smaller one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Semigroup {
    p: i64,
    q: i64,
    gaps: Vec<i64>,
    member: Vec<bool>,
}

impl Semigroup {
    pub fn new(p: i64, q: i64) -> Result<Self> {
        if p < 2 {
            return Err(Error::GeneratorTooSmall {
                name: "p",
                value: p,
            });
        }
        if q < 2 {
            return Err(Error::GeneratorTooSmall {
                name: "q",
                value: q,
            });
        }
        let g = gcd(p, q);
        if g != 1 {
            return Err(Error::NotCoprime { p, q, gcd: g });
        }
        let pq = p
            .checked_mul(q)
            .filter(|&pq| pq <= MAX_PRODUCT)
            .ok_or(Error::OutOfRange { p, q })?;

        let len = pq as usize + 1;
        let mut member = vec![false; len];
        member[0] = true;
        for n in 1..len {
            let from_p = n >= p as usize && member[n - p as usize];
            let from_q = n >= q as usize && member[n - q as usize];
            member[n] = from_p || from_q;
        }
        let gaps = (0..len as i64).filter(|&n| !member[n as usize]).collect();
        Ok(Semigroup { p, q, gaps, member })
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    /// Sorted gaps, `Z>=0 \ Γ`.
    pub fn gaps(&self) -> &[i64] {
        &self.gaps
    }

    pub fn is_gap(&self, n: i64) -> bool {
        self.gaps.binary_search(&n).is_ok()
    }

    /// Membership for any integer; negative numbers are never members.
    pub fn contains(&self, n: i64) -> bool {
        match usize::try_from(n) {
            Err(_) => false,
            Ok(i) if i < self.member.len() => self.member[i],
            Ok(_) => true,
        }
    }

    /// Number of gaps, `(p-1)(q-1)/2`.
    pub fn delta(&self) -> i64 {
        (self.p - 1) * (self.q - 1) / 2
    }

    pub fn frobenius(&self) -> i64 {
        self.p * self.q - self.p - self.q
    }

    /// Smallest `c` with `[c, ∞) ⊆ Γ`.
    pub fn conductor(&self) -> i64 {
        self.frobenius() + 1
    }
}

/// All coprime pairs `(p, q)` with `p, q >= 2` and `p + q <= bound`,
/// ordered by `p + q`, then by `p`.
pub fn coprime_pairs(bound: i64) -> Vec<(i64, i64)> {
    let mut pairs = Vec::new();
    for sum in 4..=bound {
        for p in 2..=sum - 2 {
            let q = sum - p;
            if gcd(p, q) == 1 {
                pairs.push((p, q));
            }
        }
    }
    pairs
}
