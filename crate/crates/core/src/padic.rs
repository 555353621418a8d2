//! Carry-free base-`p` arithmetic.
//!
//! Digits are little-endian: index `L` is the coefficient of `p^L`. The base
//! need not be prime here; callers that make degree claims check primality
//! with [`Base::require_prime`].

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A radix `p >= 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u64", into = "u64")]
pub struct Base(u64);

impl TryFrom<u64> for Base {
    type Error = Error;

    fn try_from(p: u64) -> Result<Self> {
        Base::new(p)
    }
}

impl From<Base> for u64 {
    fn from(b: Base) -> u64 {
        b.0
    }
}

impl fmt::Display for Base {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// p-adic order, with `Infinite` standing for `ord_p(0)`.
///
/// Variant order makes every finite order compare below `Infinite`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Order {
    Finite(u32),
    Infinite,
}

impl Order {
    pub fn finite(self) -> Option<u32> {
        match self {
            Order::Finite(n) => Some(n),
            Order::Infinite => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        self == Order::Infinite
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Order::Finite(n) => n.fmt(f),
            Order::Infinite => f.write_str("∞"),
        }
    }
}

impl Base {
    pub fn new(p: u64) -> Result<Self> {
        if p < 2 {
            return Err(Error::InvalidBase(p));
        }
        Ok(Base(p))
    }

    pub const fn get(self) -> u64 {
        self.0
    }

    pub fn is_prime(self) -> bool {
        let p = self.0;
        let mut d = 2;
        while d * d <= p {
            if p % d == 0 {
                return false;
            }
            d += 1;
        }
        true
    }

    pub fn require_prime(self) -> Result<Self> {
        if self.is_prime() {
            Ok(self)
        } else {
            Err(Error::CompositeBase(self.0))
        }
    }

    /// `p^exp`, panicking on overflow.
    pub fn pow(self, exp: u32) -> u64 {
        self.0.checked_pow(exp).unwrap_or_else(|| panic!("{}^{} overflows u64", self.0, exp))
    }

    /// The `L`th base-`p` digit of `a`.
    pub fn digit(self, a: u64, level: u32) -> u64 {
        match self.0.checked_pow(level) {
            Some(w) => (a / w) % self.0,
            None => 0,
        }
    }

    /// All digits of `a`, least significant first; empty for 0.
    pub fn digits(self, mut a: u64) -> Vec<u64> {
        let mut out = Vec::new();
        while a > 0 {
            out.push(a % self.0);
            a /= self.0;
        }
        out
    }

    pub fn from_digits(self, digits: &[u64]) -> u64 {
        digits.iter().rev().fold(0, |acc, &d| acc * self.0 + d)
    }

    /// Addition without carrying.
    pub fn nim_sum<I>(self, xs: I) -> u64
    where
        I: IntoIterator<Item = u64>,
    {
        let p = self.0;
        let mut acc: Vec<u64> = Vec::new();
        for x in xs {
            let mut x = x;
            let mut level = 0;
            while x > 0 {
                if level == acc.len() {
                    acc.push(0);
                }
                acc[level] = (acc[level] + x % p) % p;
                x /= p;
                level += 1;
            }
        }
        self.from_digits(&acc)
    }

    /// Subtraction without borrowing.
    pub fn nim_diff(self, x: u64, y: u64) -> u64 {
        let p = self.0;
        let (mut x, mut y) = (x, y);
        let mut out = 0;
        let mut weight = 1u64;
        while x > 0 || y > 0 {
            let d = (x % p + p - y % p) % p;
            out += d * weight;
            x /= p;
            y /= p;
            if x > 0 || y > 0 {
                weight *= p;
            }
        }
        out
    }

    pub fn ord(self, a: u64) -> Order {
        if a == 0 {
            return Order::Infinite;
        }
        let mut a = a;
        let mut n = 0;
        while a % self.0 == 0 {
            a /= self.0;
            n += 1;
        }
        Order::Finite(n)
    }

    /// Minimum of the componentwise orders. Callers pass absolute
    /// differences `|a^i - b^i|`.
    pub fn mord(self, c: &[u64]) -> Result<Order> {
        c.iter().map(|&x| self.ord(x)).min().ok_or(Error::EmptyVector)
    }

    fn finite_ord(self, h: u64) -> Result<u32> {
        self.ord(h).finite().ok_or(Error::ZeroArgument)
    }

    /// `p^(ord_p(h)+1) - 1`: digits `p-1` in positions `0..=ord_p(h)`.
    pub fn repdigit_allnines(self, h: u64) -> Result<u64> {
        let n = self.finite_ord(h)?;
        Ok(self.pow(n + 1) - 1)
    }

    /// `1 + p + ... + p^ord_p(h)`: digits `1` in positions `0..=ord_p(h)`.
    pub fn pnorm(self, h: u64) -> Result<u64> {
        let n = self.finite_ord(h)?;
        Ok((0..=n).map(|l| self.pow(l)).sum())
    }

    /// Legendre's formula for `ord_p(n!)`. Only meaningful for prime `p`.
    pub fn factorial_order(self, n: u64) -> u64 {
        let mut total = 0;
        let mut q = n;
        while q > 0 {
            q /= self.0;
            total += q;
        }
        total
    }
}
