use num_bigint::BigInt;
use serde::Serialize;

use super::{binomial, is_nonneg, macaulay_growth, serialize_bigint, HVectorBundle};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MacaulayRow {
    pub j: usize,
    /// `h(j+1)`.
    pub next: i64,
    /// `h(j)^⟨j⟩`.
    #[serde(serialize_with = "serialize_bigint")]
    pub bound: BigInt,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MacaulayCheck {
    pub n: u32,
    pub rows: Vec<MacaulayRow>,
    pub pass: bool,
}

/// Growth condition `h(j+1) ≤ h(j)^⟨j⟩` for a function that could be the
/// Hilbert function of a module over `K[x_1, …, x_n]` generated in degree 0.
pub fn check_module_macaulay(hfun: &[i64], n: u32) -> Result<MacaulayCheck> {
    let rows = hfun
        .windows(2)
        .enumerate()
        .map(|(j, w)| {
            let bound = macaulay_growth(w[0], n as i64, j as i64)?;
            Ok(MacaulayRow {
                j,
                next: w[1],
                pass: BigInt::from(w[1]) <= bound,
                bound,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(MacaulayCheck {
        n,
        pass: rows.iter().all(|r| r.pass),
        rows,
    })
}

/// Upper bound on `h'_{j+1}` for `1 ≤ j ≤ d-2`, with both sides of the
/// minimum.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BStarBoundRow {
    pub j: usize,
    /// `h'_{j+1}`.
    pub h_prime_next: i64,
    /// `(h''_j)^⟨j⟩`.
    #[serde(serialize_with = "serialize_bigint")]
    pub growth_branch: BigInt,
    /// `(h''_{j+2})^⟨d-j-2⟩ + β_j binom(d, j+1)`.
    #[serde(serialize_with = "serialize_bigint")]
    pub dual_branch: BigInt,
    pub pass: bool,
}

/// `h''_{d-j} · β_{d-1} ≥ h''_j` for `1 ≤ j ≤ d-1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LowerBoundRow {
    pub j: usize,
    pub h_double_prime_dual: i64,
    pub h_double_prime: i64,
    pub beta_top: i64,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BStarBounds {
    pub n: u32,
    pub d: usize,
    pub upper: Vec<BStarBoundRow>,
    pub lower: Vec<LowerBoundRow>,
    pub pass: bool,
}

fn upper_rows(bundle: &HVectorBundle) -> Result<Vec<BStarBoundRow>> {
    let d = bundle.d;
    let n = bundle.n as i64;
    let hpp = &bundle.h_double_prime;
    (1..d.saturating_sub(1))
        .map(|j| {
            let growth_branch = macaulay_growth(hpp[j], n, j as i64)?;
            let dual_branch = macaulay_growth(hpp[j + 2], n, (d - j - 2) as i64)?
                + BigInt::from(bundle.beta(j as i64)) * binomial(d as i64, j as i64 + 1);
            let next = bundle.h_prime[j + 1];
            Ok(BStarBoundRow {
                j,
                h_prime_next: next,
                pass: BigInt::from(next) <= growth_branch && BigInt::from(next) <= dual_branch,
                growth_branch,
                dual_branch,
            })
        })
        .collect()
}

/// Both families of face-vector inequalities for Buchsbaum* complexes.
/// The lower family divides by `β_{d-1}`, so it needs `β_{d-1} ≠ 0`.
pub fn check_bstar_bounds(bundle: &HVectorBundle) -> Result<BStarBounds> {
    let d = bundle.d;
    let beta_top = bundle.beta(d as i64 - 1);
    if beta_top == 0 {
        return Err(Error::BettiZero);
    }
    let hpp = &bundle.h_double_prime;
    let lower: Vec<LowerBoundRow> = (1..d)
        .map(|j| LowerBoundRow {
            j,
            h_double_prime_dual: hpp[d - j],
            h_double_prime: hpp[j],
            beta_top,
            pass: hpp[d - j] * beta_top >= hpp[j],
        })
        .collect();
    let upper = upper_rows(bundle)?;
    Ok(BStarBounds {
        n: bundle.n,
        d,
        pass: upper.iter().all(|r| r.pass) && lower.iter().all(|r| r.pass),
        upper,
        lower,
    })
}

/// Only the upper family, which makes sense for any `β_{d-1}`.
pub fn check_bstar_upper_bounds(bundle: &HVectorBundle) -> Result<BStarBounds> {
    let upper = upper_rows(bundle)?;
    Ok(BStarBounds {
        n: bundle.n,
        d: bundle.d,
        pass: upper.iter().all(|r| r.pass),
        upper,
        lower: Vec::new(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SoderbergRow {
    pub j: usize,
    #[serde(serialize_with = "serialize_bigint")]
    pub det: BigInt,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SoderbergCheck {
    pub n: u32,
    pub d: usize,
    pub rows: Vec<SoderbergRow>,
    pub pass: bool,
}

impl SoderbergCheck {
    pub fn det(&self, j: usize) -> Option<&BigInt> {
        self.rows.iter().find(|r| r.j == j).map(|r| &r.det)
    }
}

fn det3(m: [[BigInt; 3]; 3]) -> BigInt {
    &m[0][0] * (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1]) - &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
        + &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0])
}

/// Determinants
/// `| h''_{j-1} h''_j h''_{j+1} ; r_{j-1} r_j r_{j+1} ; r_{d-j+1} r_{d-j} r_{d-j-1} |`
/// with `r_j = binom(n-1+j, j)`, for `0 ≤ j ≤ d`. Outside that range every
/// determinant vanishes. Entries of `h''` outside `[0, d]` are zero.
pub fn soderberg_check(h_double_prime: &[i64], n: u32, d: usize) -> Result<SoderbergCheck> {
    if h_double_prime.len() != d + 1 {
        return Err(Error::LengthMismatch { expected: d + 1, actual: h_double_prime.len() });
    }
    let n = n as i64;
    let di = d as i64;
    let h = |j: i64| -> BigInt {
        usize::try_from(j)
            .ok()
            .and_then(|j| h_double_prime.get(j))
            .map_or_else(BigInt::default, |&x| BigInt::from(x))
    };
    let r = |j: i64| binomial(n - 1 + j, j);
    let rows: Vec<SoderbergRow> = (0..=di)
        .map(|j| {
            let det = det3([
                [h(j - 1), h(j), h(j + 1)],
                [r(j - 1), r(j), r(j + 1)],
                [r(di - j + 1), r(di - j), r(di - j - 1)],
            ]);
            SoderbergRow {
                j: j as usize,
                pass: is_nonneg(&det),
                det,
            }
        })
        .collect();
    Ok(SoderbergCheck {
        n: n as u32,
        d,
        pass: rows.iter().all(|r| r.pass),
        rows,
    })
}
