//! Finite-dimensional standard graded algebras given by multiplication
//! tables, their socles, and quotients by graded pieces of the socle.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{Echelon, FiniteField, Matrix};

/// An artinian graded algebra `A = A_0 ⊕ … ⊕ A_t` over a finite field,
/// generated in degree one by `x_1, …, x_n`. Each `A_j` has a fixed basis;
/// `mult[j][k]` is the matrix of `x_{k+1} : A_j → A_{j+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedAlgebra {
    field: FiniteField,
    num_vars: usize,
    dims: Vec<usize>,
    mult: Vec<Vec<Matrix<FiniteField>>>,
}

/// `dims[j] = dim_K [Soc A]_j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SocleProfile {
    pub dims: Vec<usize>,
}

impl SocleProfile {
    pub fn in_degree(&self, j: usize) -> usize {
        self.dims.get(j).copied().unwrap_or(0)
    }

    /// Degrees carrying socle.
    pub fn support(&self) -> Vec<usize> {
        (0..self.dims.len()).filter(|&j| self.dims[j] > 0).collect()
    }
}

impl GradedAlgebra {
    /// `dims` lists `dim A_0..=dim A_t` without trailing zeros; `mult` holds
    /// one vector of `num_vars` maps per degree `j < t`.
    pub(crate) fn new(
        field: FiniteField,
        num_vars: usize,
        dims: Vec<usize>,
        mult: Vec<Vec<Matrix<FiniteField>>>,
    ) -> Result<Self> {
        if dims.is_empty() || dims.last() == Some(&0) && dims.len() > 1 {
            return Err(Error::Invariant("graded dimensions must end in a nonzero degree".into()));
        }
        if mult.len() + 1 != dims.len() {
            return Err(Error::Invariant("one block of multiplication maps per degree below the top".into()));
        }
        for (j, maps) in mult.iter().enumerate() {
            if maps.len() != num_vars
                || maps.iter().any(|m| m.rows() != dims[j + 1] || m.cols() != dims[j])
            {
                return Err(Error::Invariant(format!("multiplication maps out of shape in degree {j}")));
            }
        }
        Ok(GradedAlgebra {
            field,
            num_vars,
            dims,
            mult,
        })
    }

    pub fn field(&self) -> FiniteField {
        self.field
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    /// `dim A_0, …, dim A_t`.
    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self, j: usize) -> usize {
        self.dims.get(j).copied().unwrap_or(0)
    }

    /// Largest degree with `A_t ≠ 0`.
    pub fn top_degree(&self) -> usize {
        self.dims.len() - 1
    }

    /// Matrix of `x_{k+1} : A_j → A_{j+1}`; `None` at or above the top degree.
    pub fn mult(&self, j: usize, k: usize) -> Option<&Matrix<FiniteField>> {
        self.mult.get(j).map(|maps| &maps[k])
    }

    /// All variables stacked: `A_j → A_{j+1}^n`.
    fn stacked(&self, j: usize) -> Matrix<FiniteField> {
        let blocks: Vec<&Matrix<FiniteField>> = self.mult[j].iter().collect();
        Matrix::vstack(self.field, self.dims[j], &blocks)
    }

    /// Basis of `[Soc A]_j = ⋂_k ker(x_k : A_j → A_{j+1})`.
    pub fn socle_basis(&self, j: usize) -> Vec<Vec<u32>> {
        if j > self.top_degree() {
            return Vec::new();
        }
        if j == self.top_degree() {
            return (0..self.dims[j])
                .map(|i| {
                    let mut v = vec![0; self.dims[j]];
                    v[i] = 1;
                    v
                })
                .collect();
        }
        self.stacked(j).kernel_basis()
    }

    pub fn socle_profile(&self) -> SocleProfile {
        let dims = (0..=self.top_degree())
            .map(|j| {
                if j == self.top_degree() {
                    self.dims[j]
                } else {
                    self.dims[j] - self.stacked(j).rank()
                }
            })
            .collect();
        SocleProfile { dims }
    }

    /// Socle concentrated in a single degree.
    pub fn is_level(&self) -> bool {
        self.socle_profile().support().len() == 1
    }

    /// `A / I` where `I = ⊕_{j ∈ degrees} [Soc A]_j`.
    ///
    /// The quotient is computed degree by degree: each piece `A_j / I_j` gets
    /// coordinate representatives from the echelon form of `I_j`, and the
    /// maps `x_k` are recomputed on those representatives. `I` must be an
    /// ideal, i.e. `x_k I_j ⊆ I_{j+1}`; this is checked and reported as an
    /// invariant violation otherwise.
    pub fn quotient_by_socle(&self, degrees: std::ops::RangeInclusive<usize>) -> Result<GradedAlgebra> {
        let f = self.field;
        let t = self.top_degree();
        let ideal: Vec<Echelon<FiniteField>> = (0..=t)
            .map(|j| {
                if degrees.contains(&j) {
                    let basis = self.socle_basis(j);
                    Matrix::from_residue_rows(f, self.dims[j], basis).echelon()
                } else {
                    Echelon::zero(f, self.dims[j])
                }
            })
            .collect();
        let reps: Vec<Vec<usize>> = ideal.iter().map(|e| e.free_columns()).collect();

        let mut mult = Vec::with_capacity(t);
        for j in 0..t {
            let mut maps = Vec::with_capacity(self.num_vars);
            for k in 0..self.num_vars {
                let m = &self.mult[j][k];
                for basis_row in 0..ideal[j].rank() {
                    let image = m.mul_vec(ideal[j].row(basis_row));
                    if !ideal[j + 1].contains(&image) {
                        return Err(Error::Invariant(format!(
                            "socle piece in degree {j} is not closed under x_{}",
                            k + 1
                        )));
                    }
                }
                let columns: Vec<Vec<u32>> = reps[j]
                    .iter()
                    .map(|&c| ideal[j + 1].quotient_coords(&m.column(c), &reps[j + 1]))
                    .collect();
                maps.push(Matrix::from_columns(f, reps[j + 1].len(), &columns));
            }
            mult.push(maps);
        }
        let mut dims: Vec<usize> = reps.iter().map(Vec::len).collect();
        while dims.len() > 1 && dims.last() == Some(&0) {
            dims.pop();
            mult.pop();
        }
        GradedAlgebra::new(f, self.num_vars, dims, mult)
    }
}
