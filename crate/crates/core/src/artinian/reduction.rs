use std::collections::HashMap;

use crate::complex::{Face, SimplicialComplex};
use crate::error::{Error, Result};
use crate::linalg::{Echelon, Field, FiniteField, Matrix};

use super::algebra::{GradedAlgebra, SocleProfile};
use super::lsop::{verify_lsop, LinearForms};

/// A monomial as the non-decreasing list of its variables (with
/// repetition), e.g. `x_1^2 x_3 = [1, 1, 3]`.
pub type Monomial = Vec<u32>;

/// `K[Δ]/ℓ` with its degree-wise monomial bases.
///
/// `[K[Δ]]_j` has the face-supported monomials of degree `j` as basis. The
/// image of `ℓ` in degree `j` is spanned by `ℓ_i · m` for all such
/// monomials `m` of degree `j-1`; the monomials at non-pivot columns of its
/// reduced echelon form represent a basis of the quotient.
#[derive(Clone, Debug)]
pub struct GradedReduction {
    forms: LinearForms,
    monomials: Vec<Vec<Monomial>>,
    representatives: Vec<Vec<usize>>,
    algebra: GradedAlgebra,
}

impl GradedReduction {
    pub fn forms(&self) -> &LinearForms {
        &self.forms
    }

    pub fn algebra(&self) -> &GradedAlgebra {
        &self.algebra
    }

    /// `dim [K[Δ]/ℓ]_j` for `j = 0..=t`.
    pub fn dims(&self) -> &[usize] {
        self.algebra.dims()
    }

    pub fn top_degree(&self) -> usize {
        self.algebra.top_degree()
    }

    /// Monomials spanning `[K[Δ]]_j`, lexicographically ordered.
    pub fn ambient_basis(&self, j: usize) -> &[Monomial] {
        self.monomials.get(j).map(Vec::as_slice).unwrap_or(&[])
    }

    /// Monomials whose classes form the chosen basis of `[K[Δ]/ℓ]_j`.
    pub fn basis_monomials(&self, j: usize) -> Vec<&Monomial> {
        self.representatives
            .get(j)
            .map(|reps| reps.iter().map(|&i| &self.monomials[j][i]).collect())
            .unwrap_or_default()
    }

    pub fn socle_profile(&self) -> SocleProfile {
        self.algebra.socle_profile()
    }
}

fn support(m: &Monomial) -> Face {
    Face::new(m.clone())
}

/// Degree-`j` face-supported monomials from those of degree `j-1`, by
/// appending a variable no smaller than the last one.
fn next_monomials(complex: &SimplicialComplex, prev: &[Monomial]) -> Vec<Monomial> {
    let n = complex.n();
    let mut out = Vec::new();
    for m in prev {
        let start = m.last().copied().unwrap_or(1);
        for k in start..=n {
            let mut next = m.clone();
            next.push(k);
            if complex.contains(&support(&next)) {
                out.push(next);
            }
        }
    }
    out.sort();
    out
}

/// Builds `K[Δ]/ℓ` degree by degree until two consecutive degrees vanish.
pub fn graded_reduction(complex: &SimplicialComplex, forms: &LinearForms) -> Result<GradedReduction> {
    if !verify_lsop(complex, forms) {
        return Err(Error::HypothesisFailed(
            "the linear forms are not a parameter system for the complex".into(),
        ));
    }
    let field: FiniteField = forms.field();
    let n = complex.n() as usize;
    let d = complex.d();

    let mut monomials: Vec<Vec<Monomial>> = vec![vec![Vec::new()]];
    let mut echelons: Vec<Echelon<FiniteField>> = vec![Echelon::zero(field, 1)];
    let mut representatives: Vec<Vec<usize>> = vec![vec![0]];

    let mut j = 0;
    loop {
        j += 1;
        let basis = next_monomials(complex, &monomials[j - 1]);
        let index: HashMap<&Monomial, usize> = basis.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let mut rows: Vec<Vec<u32>> = Vec::with_capacity(forms.num_forms() * monomials[j - 1].len());
        for i in 0..forms.num_forms() {
            for m in &monomials[j - 1] {
                let mut v = vec![0u32; basis.len()];
                for var in 1..=complex.n() {
                    let c = forms.coeff(i, var);
                    if c == 0 {
                        continue;
                    }
                    let mut prod = m.clone();
                    let pos = prod.partition_point(|&x| x <= var);
                    prod.insert(pos, var);
                    if let Some(&col) = index.get(&prod) {
                        v[col] = field.add(v[col], c);
                    }
                }
                rows.push(v);
            }
        }
        let echelon = Matrix::from_residue_rows(field, basis.len(), rows).echelon();
        drop(index);
        representatives.push(echelon.free_columns());
        echelons.push(echelon);
        monomials.push(basis);

        let dim = representatives[j].len();
        if dim > 0 && j > d {
            return Err(Error::Invariant(format!(
                "reduction is nonzero in degree {j} beyond d = {d}"
            )));
        }
        if dim == 0 && representatives[j - 1].is_empty() {
            break;
        }
        if j > d + 2 {
            return Err(Error::Invariant("reduction did not terminate by degree d + 2".into()));
        }
    }

    let dims: Vec<usize> = representatives
        .iter()
        .map(Vec::len)
        .take_while(|&dim| dim > 0)
        .collect();
    let top = dims.len() - 1;

    let mut mult = Vec::with_capacity(top);
    for deg in 0..top {
        let target = &monomials[deg + 1];
        let target_index: HashMap<&Monomial, usize> =
            target.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let mut maps = Vec::with_capacity(n);
        for var in 1..=complex.n() {
            let columns: Vec<Vec<u32>> = representatives[deg]
                .iter()
                .map(|&r| {
                    let mut prod = monomials[deg][r].clone();
                    let pos = prod.partition_point(|&x| x <= var);
                    prod.insert(pos, var);
                    match target_index.get(&prod) {
                        Some(&col) => {
                            let mut unit = vec![0u32; target.len()];
                            unit[col] = 1;
                            echelons[deg + 1].quotient_coords(&unit, &representatives[deg + 1])
                        }
                        None => vec![0u32; representatives[deg + 1].len()],
                    }
                })
                .collect();
            maps.push(Matrix::from_columns(field, representatives[deg + 1].len(), &columns));
        }
        mult.push(maps);
    }

    monomials.truncate(top + 1);
    representatives.truncate(top + 1);
    Ok(GradedReduction {
        forms: forms.clone(),
        monomials,
        representatives,
        algebra: GradedAlgebra::new(field, n, dims, mult)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::artinian::random_lsop;
    use crate::builtin::builtin;
    use crate::linalg::PrimeField;

    fn reduce(name: &str, field: FiniteField, seed: u64) -> GradedReduction {
        let c = builtin(name).unwrap();
        let forms = random_lsop(&c, field, seed).unwrap();
        graded_reduction(&c, &forms).unwrap()
    }

    fn two() -> FiniteField {
        FiniteField::generic(2).unwrap()
    }

    #[test]
    fn ambient_bases() {
        let r = reduce("simplex_boundary:2", FiniteField::default(), 0);
        assert_eq!(r.ambient_basis(1), &[vec![1], vec![2], vec![3]]);
        assert_eq!(
            r.ambient_basis(2),
            &[vec![1, 1], vec![1, 2], vec![1, 3], vec![2, 2], vec![2, 3], vec![3, 3]]
        );
    }

    #[test]
    fn dims_match_h_prime() {
        assert_eq!(reduce("simplex_boundary:2", FiniteField::default(), 0).dims(), &[1, 1, 1]);
        assert_eq!(reduce("rp2_6", two(), 0).dims(), &[1, 3, 6, 1]);
        assert_eq!(reduce("torus7", FiniteField::default(), 0).dims(), &[1, 4, 10, 1]);
        // over GF(p), p odd, RP^2 is acyclic and Cohen-Macaulay: h' = h
        assert_eq!(reduce("rp2_6", FiniteField::default(), 0).dims(), &[1, 3, 6]);
    }

    #[test]
    fn socle_profiles() {
        let p = FiniteField::default();
        assert_eq!(reduce("simplex_boundary:2", p, 0).socle_profile().dims, vec![0, 0, 1]);
        assert_eq!(reduce("rp2_6", two(), 0).socle_profile().dims, vec![0, 0, 3, 1]);
        assert_eq!(reduce("torus7", p, 0).socle_profile().dims, vec![0, 0, 6, 1]);
    }

    #[test]
    fn prime_field_gf2_for_rp2_when_a_system_exists() {
        // first 3x6 matrix over GF(2), in column-word order, that certifies
        let c = builtin("rp2_6").unwrap();
        let f: FiniteField = PrimeField::new(2).unwrap().into();
        let mut found = None;
        'search: for code in 0u32..(1 << 18) {
            let cols: Vec<u32> = (0..6).map(|i| (code >> (3 * i)) & 7).collect();
            let rows: Vec<Vec<i64>> = (0..3)
                .map(|bit| cols.iter().map(|c| ((c >> bit) & 1) as i64).collect())
                .collect();
            let forms = LinearForms::from_rows(f, 6, &rows);
            if verify_lsop(&c, &forms) {
                found = Some(forms);
                break 'search;
            }
        }
        let forms = found.expect("RP^2_6 has a parameter system over GF(2)");
        let r = graded_reduction(&c, &forms).unwrap();
        assert_eq!(r.dims(), &[1, 3, 6, 1]);
        assert_eq!(r.socle_profile().dims, vec![0, 0, 3, 1]);
    }

    #[test]
    fn rejects_non_parameter_systems() {
        let c = builtin("simplex_boundary:2").unwrap();
        let forms = LinearForms::from_rows(FiniteField::default(), 3, &[vec![1, 0, 0], vec![0, 1, 0]]);
        assert!(matches!(graded_reduction(&c, &forms), Err(Error::HypothesisFailed(_))));
    }

    #[test]
    fn basis_monomials_are_face_supported() {
        let t = builtin("torus7").unwrap();
        let r = reduce("torus7", FiniteField::default(), 1);
        for j in 0..=r.top_degree() {
            assert_eq!(r.basis_monomials(j).len(), r.dims()[j]);
            for m in r.basis_monomials(j) {
                assert!(t.contains(&Face::new(m.clone())));
            }
        }
    }
}
