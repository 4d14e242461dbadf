use std::fmt;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use super::{binomial, serialize_bigint};
use crate::error::{Error, Result};

/// `b = m_top · binom(n-1+d, d) + binom(m_d, d) + … + binom(m_s, s)` with
/// `n+d-2 ≥ m_d > … > m_s ≥ s ≥ 1`.
///
/// `ms[0]` is `m_d`, `ms[1]` is `m_{d-1}` and so on; an empty `ms` means
/// `s = d + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BinomialExpansion {
    pub b: i64,
    pub n: i64,
    pub d: i64,
    pub m_top: i64,
    pub ms: Vec<i64>,
}

impl BinomialExpansion {
    /// Lowest index `s` carrying a term (`d + 1` when there is none).
    pub fn s(&self) -> i64 {
        self.d + 1 - self.ms.len() as i64
    }

    /// Pairs `(m_i, i)` from `i = d` downwards.
    pub fn terms(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.ms.iter().enumerate().map(move |(k, &m)| (m, self.d - k as i64))
    }

    /// Sum of the expansion; equals `b`.
    pub fn value(&self) -> BigInt {
        let top = BigInt::from(self.m_top) * binomial(self.n - 1 + self.d, self.d);
        self.terms().fold(top, |acc, (m, i)| acc + binomial(m, i))
    }

    /// `b^⟨d⟩ = m_top · binom(n+d, d+1) + Σ binom(m_i + 1, i + 1)`.
    pub fn growth(&self) -> BigInt {
        if self.b == 0 {
            return BigInt::zero();
        }
        let top = BigInt::from(self.m_top) * binomial(self.n + self.d, self.d + 1);
        self.terms().fold(top, |acc, (m, i)| acc + binomial(m + 1, i + 1))
    }
}

impl fmt::Display for BinomialExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b == 0 {
            return write!(f, "0");
        }
        write!(f, "{} = ", self.b)?;
        let mut parts = Vec::new();
        if self.m_top > 0 {
            parts.push(format!("{}·C({},{})", self.m_top, self.n - 1 + self.d, self.d));
        }
        parts.extend(self.terms().map(|(m, i)| format!("C({m},{i})")));
        write!(f, "{}", parts.join(" + "))
    }
}

/// Largest `m ≥ i` with `binom(m, i) ≤ r`, for `r ≥ 1` and `i ≥ 1`.
fn largest_m(r: &BigInt, i: i64) -> i64 {
    let mut hi = i;
    while binomial(hi, i) <= *r {
        hi = i + 2 * (hi - i + 1);
    }
    let mut lo = i;
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if binomial(mid, i) <= *r {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

/// The `d`-binomial expansion of `b` relative to `n` variables.
pub fn d_binomial_expansion(b: i64, n: i64, d: i64) -> Result<BinomialExpansion> {
    if b < 0 || n < 1 || d < 0 {
        return Err(Error::ExpansionImpossible { b, n, d });
    }
    let block = binomial(n - 1 + d, d);
    let big_b = BigInt::from(b);
    let m_top = (&big_b / &block).to_i64().expect("quotient at most b");
    let mut r = big_b - BigInt::from(m_top) * &block;
    let mut ms = Vec::new();
    let mut i = d;
    while !r.is_zero() && i >= 1 {
        let m = largest_m(&r, i);
        r -= binomial(m, i);
        ms.push(m);
        i -= 1;
    }
    let expansion = BinomialExpansion { b, n, d, m_top, ms };
    let cap_ok = expansion.ms.first().is_none_or(|&m| m <= n + d - 2);
    if !r.is_zero() || !cap_ok {
        return Err(Error::ExpansionImpossible { b, n, d });
    }
    Ok(expansion)
}

/// `b^⟨d⟩`; zero for `b = 0`.
pub fn macaulay_growth(b: i64, n: i64, d: i64) -> Result<BigInt> {
    if b == 0 && n >= 1 {
        return Ok(BigInt::zero());
    }
    Ok(d_binomial_expansion(b, n, d)?.growth())
}

#[derive(Serialize)]
struct ExpansionJson<'a> {
    #[serde(flatten)]
    expansion: &'a BinomialExpansion,
    s: i64,
    #[serde(serialize_with = "serialize_bigint")]
    growth: BigInt,
}

impl BinomialExpansion {
    /// JSON object with the expansion, `s` and the growth value.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(ExpansionJson {
            expansion: self,
            s: self.s(),
            growth: self.growth(),
        })
        .expect("plain data serialises")
    }
}
