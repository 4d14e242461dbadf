use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::linalg::{Field, FiniteField, Matrix};

/// Number of random draws before giving up on finding a parameter system.
pub const MAX_LSOP_ATTEMPTS: usize = 64;

/// `d` linear forms in `x_1, …, x_n`; row `i` holds the coefficients of `ℓ_{i+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearForms {
    coeffs: Matrix<FiniteField>,
    seed: Option<u64>,
    attempts: usize,
}

/// Serialisable summary of how a parameter system was obtained.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LsopProvenance {
    pub seed: Option<u64>,
    pub attempts: usize,
}

impl LinearForms {
    /// Forms given explicitly, one coefficient row per form.
    pub fn from_rows(field: FiniteField, n: usize, rows: &[Vec<i64>]) -> Self {
        LinearForms {
            coeffs: Matrix::from_rows(field, n, rows),
            seed: None,
            attempts: 0,
        }
    }

    pub fn coeffs(&self) -> &Matrix<FiniteField> {
        &self.coeffs
    }

    pub fn field(&self) -> FiniteField {
        self.coeffs.field()
    }

    pub fn num_forms(&self) -> usize {
        self.coeffs.rows()
    }

    pub fn num_vars(&self) -> usize {
        self.coeffs.cols()
    }

    pub fn seed(&self) -> Option<u64> {
        self.seed
    }

    pub fn provenance(&self) -> LsopProvenance {
        LsopProvenance {
            seed: self.seed,
            attempts: self.attempts,
        }
    }

    /// Coefficient of `x_var` (1-based) in form `i`.
    pub fn coeff(&self, i: usize, var: u32) -> u32 {
        self.coeffs.get(i, var as usize - 1)
    }
}

/// The forms are a linear system of parameters of `K[Δ]` iff, for every
/// facet `F`, their restriction to the variables of `F` has rank `|F|`.
pub fn verify_lsop(complex: &SimplicialComplex, forms: &LinearForms) -> bool {
    if forms.num_forms() != complex.d() || forms.num_vars() != complex.n() as usize {
        return false;
    }
    let field = forms.field();
    complex.facets().iter().all(|facet| {
        let rows: Vec<Vec<u32>> = (0..forms.num_forms())
            .map(|i| facet.vertices().iter().map(|&v| forms.coeff(i, v)).collect())
            .collect();
        Matrix::from_residue_rows(field, facet.len(), rows).rank() == facet.len()
    })
}

/// Draws uniformly random forms from a ChaCha stream seeded with `seed`
/// until they form a parameter system of `complex`.
pub fn random_lsop(complex: &SimplicialComplex, field: FiniteField, seed: u64) -> Result<LinearForms> {
    common_random_lsop(&[complex], complex.d(), complex.n(), field, seed)
}

/// Random forms that are simultaneously a parameter system for every
/// complex in `complexes` (all on the same ground set, all of Krull
/// dimension `d`).
pub fn common_random_lsop(
    complexes: &[&SimplicialComplex],
    d: usize,
    n: u32,
    field: FiniteField,
    seed: u64,
) -> Result<LinearForms> {
    let p = field.characteristic();
    let q = field.order() as u32;
    if q <= n {
        log::warn!("{field} is small relative to {n} vertices; random forms may fail to be a parameter system");
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for attempt in 1..=MAX_LSOP_ATTEMPTS {
        let rows: Vec<Vec<u32>> = (0..d)
            .map(|_| (0..n).map(|_| rng.gen_range(0..q)).collect())
            .collect();
        let forms = LinearForms {
            coeffs: Matrix::from_residue_rows(field, n as usize, rows),
            seed: Some(seed),
            attempts: attempt,
        };
        if complexes.iter().all(|c| verify_lsop(c, &forms)) {
            return Ok(forms);
        }
    }
    Err(Error::LsopNotFound {
        p,
        attempts: MAX_LSOP_ATTEMPTS,
    })
}
