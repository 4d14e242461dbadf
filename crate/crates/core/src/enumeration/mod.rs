//! Face-vector calculus: f ↔ h conversion, the h′ and h″ vectors of a
//! complex with known Betti numbers, module binomial expansions and the
//! inequalities they feed.

mod bounds;
mod expansion;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::homology::BettiTable;

pub use bounds::{
    check_bstar_bounds, check_bstar_upper_bounds, check_module_macaulay, soderberg_check, BStarBoundRow,
    BStarBounds, LowerBoundRow, MacaulayCheck, MacaulayRow, SoderbergCheck, SoderbergRow,
};
pub use expansion::{d_binomial_expansion, macaulay_growth, BinomialExpansion};

/// `binom(a, j)` for any integer `a`: the falling factorial over `j!` for
/// `j > 0`, `1` for `j = 0` and `0` for `j < 0`.
pub fn binomial(a: i64, j: i64) -> BigInt {
    match j {
        j if j < 0 => BigInt::zero(),
        0 => BigInt::one(),
        j => {
            let mut num = BigInt::one();
            let mut den = BigInt::one();
            for i in 0..j {
                num *= a - i;
                den *= i + 1;
            }
            num / den
        }
    }
}

pub(crate) fn binomial_i64(a: i64, j: i64) -> i64 {
    binomial(a, j).to_i64().expect("binomial coefficient fits in i64")
}

pub(crate) fn serialize_bigint<S: Serializer>(v: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

/// `h_j = Σ_{i=0}^{j} (-1)^{j-i} binom(d-i, j-i) f_{i-1}` for `0 ≤ j ≤ d`,
/// where `f = (f_{-1}, …, f_{d-1})`.
pub fn h_from_f(f: &[i64], d: usize) -> Result<Vec<i64>> {
    if f.len() != d + 1 {
        return Err(Error::LengthMismatch { expected: d + 1, actual: f.len() });
    }
    let d = d as i64;
    Ok((0..=d)
        .map(|j| {
            (0..=j)
                .map(|i| sign(j - i) * binomial_i64(d - i, j - i) * f[i as usize])
                .sum()
        })
        .collect())
}

/// Inverse of [`h_from_f`]: `f_{j-1} = Σ_{i=0}^{j} binom(d-i, j-i) h_i`.
pub fn f_from_h(h: &[i64], d: usize) -> Result<Vec<i64>> {
    if h.len() != d + 1 {
        return Err(Error::LengthMismatch { expected: d + 1, actual: h.len() });
    }
    let d = d as i64;
    Ok((0..=d)
        .map(|j| (0..=j).map(|i| binomial_i64(d - i, j - i) * h[i as usize]).sum())
        .collect())
}

fn sign(e: i64) -> i64 {
    if e % 2 == 0 {
        1
    } else {
        -1
    }
}

fn beta(betti: &BettiTable, j: i64) -> i64 {
    betti.get(j as isize) as i64
}

/// `h'_j = h_j + binom(d, j) Σ_{i=0}^{j-1} (-1)^{j-i-1} β_{i-1}`.
pub fn h_prime(h: &[i64], betti: &BettiTable, d: usize) -> Result<Vec<i64>> {
    if h.len() != d + 1 {
        return Err(Error::LengthMismatch { expected: d + 1, actual: h.len() });
    }
    let dd = d as i64;
    Ok((0..=dd)
        .map(|j| {
            let alt: i64 = (0..j).map(|i| sign(j - i - 1) * beta(betti, i - 1)).sum();
            h[j as usize] + binomial_i64(dd, j) * alt
        })
        .collect())
}

/// `h''_j = h'_j - binom(d, j) β_{j-1}` for `j < d` and `h''_d = β_{d-1}`.
pub fn h_double_prime(h_prime: &[i64], betti: &BettiTable, d: usize) -> Result<Vec<i64>> {
    if h_prime.len() != d + 1 {
        return Err(Error::LengthMismatch { expected: d + 1, actual: h_prime.len() });
    }
    let dd = d as i64;
    Ok((0..=dd)
        .map(|j| {
            if j == dd {
                beta(betti, dd - 1)
            } else {
                h_prime[j as usize] - binomial_i64(dd, j) * beta(betti, j - 1)
            }
        })
        .collect())
}

/// The face numbers of a complex together with everything derived from
/// them and its Betti numbers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HVectorBundle {
    /// Size of the ground set, used as the number of variables.
    pub n: u32,
    pub d: usize,
    pub f: Vec<i64>,
    pub h: Vec<i64>,
    pub h_prime: Vec<i64>,
    pub h_double_prime: Vec<i64>,
    pub betti: BettiTable,
}

impl HVectorBundle {
    pub fn new(complex: &SimplicialComplex, betti: BettiTable) -> Result<Self> {
        let d = complex.d();
        let f = complex.f_vector();
        let h = h_from_f(&f, d)?;
        let h_prime = h_prime(&h, &betti, d)?;
        let h_double_prime = h_double_prime(&h_prime, &betti, d)?;
        Ok(HVectorBundle {
            n: complex.n(),
            d,
            f,
            h,
            h_prime,
            h_double_prime,
            betti,
        })
    }

    pub fn beta(&self, j: i64) -> i64 {
        beta(&self.betti, j)
    }
}

pub(crate) fn to_usize(v: &[i64]) -> Option<Vec<usize>> {
    v.iter().map(|&x| usize::try_from(x).ok()).collect()
}

pub(crate) fn is_nonneg(v: &BigInt) -> bool {
    !v.is_negative()
}
