//! Artinian reductions `K[Δ]/ℓ`: construction, socles, the Buchsbaum*
//! socle test, the socle lower bound with its slack, level quotients and the
//! star/deletion dimension identity.
//!
//! Every entry point samples one linear system of parameters from a seed.
//! The dimensions reported do not depend on that choice for the complexes
//! these tests are meant for, so running several seeds and comparing is the
//! intended way to spot a non-generic draw.

mod algebra;
mod lsop;
mod reduction;

use serde::Serialize;

use crate::complex::{Face, SimplicialComplex};
use crate::error::{Error, Result};
use crate::homology::{is_buchsbaum, is_two_cm, reduced_betti, BettiTable};
use crate::linalg::FiniteField;

pub use algebra::{GradedAlgebra, SocleProfile};
pub use lsop::{common_random_lsop, random_lsop, verify_lsop, LinearForms, LsopProvenance, MAX_LSOP_ATTEMPTS};
pub use reduction::{graded_reduction, GradedReduction, Monomial};

pub(crate) fn choose(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// Socle dimension predicted for a Buchsbaum* complex:
/// `binom(d, j) · β_{j-1}` for `j ≥ 1`.
pub fn expected_socle_dim(betti: &BettiTable, d: usize, j: usize) -> usize {
    choose(d, j) * betti.get(j as isize - 1)
}

/// Builds `K[Δ]/ℓ` for a random parameter system drawn from `seed`.
pub fn reduce_with_seed(complex: &SimplicialComplex, field: FiniteField, seed: u64) -> Result<GradedReduction> {
    let forms = random_lsop(complex, field, seed)?;
    graded_reduction(complex, &forms)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SocleComparison {
    pub degree: usize,
    pub actual: usize,
    pub expected: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BuchsbaumStarReport {
    pub field: FiniteField,
    pub lsop: Option<LsopProvenance>,
    pub buchsbaum: bool,
    pub holds: bool,
    pub reason: Option<String>,
    pub degrees: Vec<SocleComparison>,
}

/// Buchsbaum* test through the socle: a Buchsbaum complex is Buchsbaum*
/// iff `dim [Soc K[Δ]/ℓ]_j = binom(d, j) β_{j-1}` in every positive degree.
pub fn is_buchsbaum_star(complex: &SimplicialComplex, field: FiniteField, seed: u64) -> Result<BuchsbaumStarReport> {
    let prime = field.prime_field();
    if !is_buchsbaum(complex, prime) {
        return Ok(BuchsbaumStarReport {
            field,
            lsop: None,
            buchsbaum: false,
            holds: false,
            reason: Some(format!("not Buchsbaum over {prime}")),
            degrees: Vec::new(),
        });
    }
    let reduction = reduce_with_seed(complex, field, seed)?;
    Ok(buchsbaum_star_from(complex, &reduction, &reduced_betti(complex, prime)))
}

pub(crate) fn buchsbaum_star_from(
    complex: &SimplicialComplex,
    reduction: &GradedReduction,
    betti: &BettiTable,
) -> BuchsbaumStarReport {
    let d = complex.d();
    let socle = reduction.socle_profile();
    let degrees: Vec<SocleComparison> = (1..=d.max(reduction.top_degree()))
        .map(|j| SocleComparison {
            degree: j,
            actual: socle.in_degree(j),
            expected: expected_socle_dim(betti, d, j),
        })
        .collect();
    let mismatch = degrees.iter().find(|c| c.actual != c.expected);
    BuchsbaumStarReport {
        field: reduction.forms().field(),
        lsop: Some(reduction.forms().provenance()),
        buchsbaum: true,
        holds: mismatch.is_none(),
        reason: mismatch.map(|c| {
            format!(
                "socle has dimension {} in degree {}, expected {}",
                c.actual, c.degree, c.expected
            )
        }),
        degrees,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SlackRow {
    pub degree: usize,
    pub socle: usize,
    pub lower_bound: usize,
    pub slack: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SocleSlackReport {
    pub field: FiniteField,
    pub lsop: LsopProvenance,
    pub buchsbaum: bool,
    pub degrees: Vec<SlackRow>,
    /// Every slack is non-negative.
    pub bound_holds: bool,
    /// Slack in degree `d`, where the socle should be exactly `β_{d-1}`.
    pub top_slack: i64,
}

impl SocleSlackReport {
    /// Degrees with strictly positive slack.
    pub fn excess_degrees(&self) -> Vec<usize> {
        self.degrees.iter().filter(|r| r.slack > 0).map(|r| r.degree).collect()
    }
}

/// Compares the socle of `K[Δ]/ℓ` with the part every Buchsbaum complex is
/// guaranteed to have: `binom(d, j) β_{j-1}` in degrees `1 ≤ j ≤ d-1` and
/// `β_{d-1}` in degree `d`. The difference is the slack.
pub fn socle_lower_bound_check(complex: &SimplicialComplex, field: FiniteField, seed: u64) -> Result<SocleSlackReport> {
    let prime = field.prime_field();
    let reduction = reduce_with_seed(complex, field, seed)?;
    Ok(slack_from(
        complex,
        &reduction,
        &reduced_betti(complex, prime),
        is_buchsbaum(complex, prime),
    ))
}

pub(crate) fn slack_from(
    complex: &SimplicialComplex,
    reduction: &GradedReduction,
    betti: &BettiTable,
    buchsbaum: bool,
) -> SocleSlackReport {
    let d = complex.d();
    let socle = reduction.socle_profile();
    let degrees: Vec<SlackRow> = (1..=d.max(reduction.top_degree()))
        .map(|j| {
            let lower_bound = match j.cmp(&d) {
                std::cmp::Ordering::Less => expected_socle_dim(betti, d, j),
                std::cmp::Ordering::Equal => betti.get(d as isize - 1),
                std::cmp::Ordering::Greater => 0,
            };
            let s = socle.in_degree(j);
            SlackRow {
                degree: j,
                socle: s,
                lower_bound,
                slack: s as i64 - lower_bound as i64,
            }
        })
        .collect();
    let top_slack = degrees.iter().find(|r| r.degree == d).map(|r| r.slack).unwrap_or(0);
    SocleSlackReport {
        field: reduction.forms().field(),
        lsop: reduction.forms().provenance(),
        buchsbaum,
        bound_holds: degrees.iter().all(|r| r.slack >= 0),
        top_slack,
        degrees,
    }
}

/// `(K[Δ]/ℓ)/I` with `I = ⊕_{j=1}^{d-1} [Soc K[Δ]/ℓ]_j`.
#[derive(Clone, Debug, Serialize)]
pub struct LevelQuotient {
    pub field: FiniteField,
    pub lsop: LsopProvenance,
    pub dims: Vec<usize>,
    pub socle_dims: Vec<usize>,
    pub is_level: bool,
    /// Dimension of the socle in the top degree.
    pub cm_type: usize,
    pub socle_degree: usize,
    #[serde(skip)]
    pub algebra: GradedAlgebra,
}

pub fn level_quotient(complex: &SimplicialComplex, field: FiniteField, seed: u64) -> Result<LevelQuotient> {
    let reduction = reduce_with_seed(complex, field, seed)?;
    level_quotient_of(&reduction, complex.d())
}

pub fn level_quotient_of(reduction: &GradedReduction, d: usize) -> Result<LevelQuotient> {
    let strip = 1..=d.saturating_sub(1);
    let algebra = reduction.algebra().quotient_by_socle(strip)?;
    let socle = algebra.socle_profile();
    let top = algebra.top_degree();
    Ok(LevelQuotient {
        field: reduction.forms().field(),
        lsop: reduction.forms().provenance(),
        dims: algebra.dims().to_vec(),
        is_level: socle.support().len() == 1,
        cm_type: socle.in_degree(top),
        socle_degree: top,
        socle_dims: socle.dims,
        algebra,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StarDeletionRow {
    pub degree: usize,
    pub complex: usize,
    /// `dim [K[st k]/ℓ]_{j-1}`.
    pub star_shifted: usize,
    pub deletion: usize,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StarDeletionReport {
    pub vertex: u32,
    pub field: FiniteField,
    pub lsop: LsopProvenance,
    pub rows: Vec<StarDeletionRow>,
    pub holds: bool,
}

/// Checks `dim [K[Δ]/ℓ]_j = dim [K[st k]/ℓ]_{j-1} + dim [K[Δ_{-k}]/ℓ]_j`
/// in all degrees, with one `ℓ` that is a parameter system for all three
/// rings. Requires Δ Buchsbaum, `lk k` 2-CM and `Δ_{-k}` Buchsbaum of the
/// same dimension as Δ.
pub fn star_deletion_dim_check(
    complex: &SimplicialComplex,
    vertex: u32,
    field: FiniteField,
    seed: u64,
) -> Result<StarDeletionReport> {
    let prime = field.prime_field();
    let k = Face::vertex(vertex);
    if !complex.contains(&k) {
        return Err(Error::HypothesisFailed(format!("{vertex} is not a vertex of the complex")));
    }
    if !is_buchsbaum(complex, prime) {
        return Err(Error::HypothesisFailed(format!("complex is not Buchsbaum over {prime}")));
    }
    let link = complex.link(&k);
    if !is_two_cm(&link, prime) {
        return Err(Error::HypothesisFailed(format!("lk {vertex} is not 2-CM over {prime}")));
    }
    let deletion = complex.deletion(&k);
    if deletion.dim() != complex.dim() {
        return Err(Error::HypothesisFailed(format!(
            "deletion of {vertex} has dimension {} instead of {}",
            deletion.dim(),
            complex.dim()
        )));
    }
    if !is_buchsbaum(&deletion, prime) {
        return Err(Error::HypothesisFailed(format!("deletion of {vertex} is not Buchsbaum over {prime}")));
    }
    let star = complex.star(&k);
    let forms = common_random_lsop(&[complex, &star, &deletion], complex.d(), complex.n(), field, seed)?;
    let whole = graded_reduction(complex, &forms)?;
    let st = graded_reduction(&star, &forms)?;
    let del = graded_reduction(&deletion, &forms)?;
    let top = whole.top_degree().max(st.top_degree() + 1).max(del.top_degree());
    let rows: Vec<StarDeletionRow> = (0..=top + 1)
        .map(|j| {
            let w = whole.algebra().dim(j);
            let s = if j == 0 { 0 } else { st.algebra().dim(j - 1) };
            let e = del.algebra().dim(j);
            StarDeletionRow {
                degree: j,
                complex: w,
                star_shifted: s,
                deletion: e,
                holds: w == s + e,
            }
        })
        .collect();
    Ok(StarDeletionReport {
        vertex,
        field,
        lsop: forms.provenance(),
        holds: rows.iter().all(|r| r.holds),
        rows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtin::builtin;
    use crate::homology::is_cohen_macaulay;
    use crate::linalg::PrimeField;

    fn p() -> FiniteField {
        FiniteField::default()
    }

    fn two() -> FiniteField {
        FiniteField::generic(2).unwrap()
    }

    #[test]
    fn choose_values() {
        assert_eq!(choose(3, 2), 3);
        assert_eq!(choose(4, 0), 1);
        assert_eq!(choose(2, 3), 0);
        assert_eq!(choose(10, 5), 252);
    }

    #[test]
    fn buchsbaum_star_examples() {
        let circle = builtin("simplex_boundary:2").unwrap();
        assert!(is_buchsbaum_star(&circle, p(), 0).unwrap().holds);
        let torus = builtin("torus7").unwrap();
        let r = is_buchsbaum_star(&torus, p(), 0).unwrap();
        assert!(r.holds, "{r:?}");
        assert_eq!(
            r.degrees.iter().map(|c| (c.actual, c.expected)).collect::<Vec<_>>(),
            vec![(0, 0), (6, 6), (1, 1)]
        );
        let wedge = builtin("wedge_two_circles").unwrap();
        let r = is_buchsbaum_star(&wedge, p(), 0).unwrap();
        assert!(r.buchsbaum);
        assert!(!r.holds);
        assert!(r.degrees[0].actual > r.degrees[0].expected, "{r:?}");
    }

    #[test]
    fn non_buchsbaum_input_reports_reason() {
        let bowtie = builtin("bowtie_filled").unwrap();
        let r = is_buchsbaum_star(&bowtie, p(), 0).unwrap();
        assert!(!r.buchsbaum && !r.holds);
        assert!(r.reason.unwrap().contains("not Buchsbaum"));
    }

    #[test]
    fn slack_examples() {
        let octahedron = builtin("cross_polytope:3").unwrap();
        let r = socle_lower_bound_check(&octahedron, p(), 0).unwrap();
        assert!(r.degrees.iter().all(|row| row.slack == 0));
        let socle = reduce_with_seed(&octahedron, p(), 0).unwrap().socle_profile();
        assert_eq!(socle.support(), vec![3]);
        assert_eq!(socle.in_degree(3), 1);

        let wedge = builtin("wedge_two_circles").unwrap();
        let r = socle_lower_bound_check(&wedge, p(), 0).unwrap();
        assert!(r.bound_holds);
        assert_eq!(r.top_slack, 0);
        assert_eq!(r.excess_degrees(), vec![1]);

        let torus = builtin("torus7").unwrap();
        let r = socle_lower_bound_check(&torus, two(), 0).unwrap();
        assert!(r.degrees.iter().all(|row| row.slack == 0));
    }

    #[test]
    fn level_quotients() {
        let rp = builtin("rp2_6").unwrap();
        let q = level_quotient(&rp, two(), 0).unwrap();
        assert_eq!(q.dims, vec![1, 3, 3, 1]);
        assert_eq!(q.socle_dims, vec![0, 0, 0, 1]);
        assert!(q.is_level);
        assert_eq!((q.cm_type, q.socle_degree), (1, 3));

        let torus = builtin("torus7").unwrap();
        let q = level_quotient(&torus, p(), 0).unwrap();
        assert_eq!(q.dims, vec![1, 4, 4, 1]);
        assert_eq!(q.socle_dims, vec![0, 0, 0, 1]);

        let circle = builtin("simplex_boundary:2").unwrap();
        let q = level_quotient(&circle, p(), 0).unwrap();
        assert_eq!(q.dims, vec![1, 1, 1]);
        assert_eq!(q.socle_dims, vec![0, 0, 1]);
    }

    #[test]
    fn level_quotient_is_idempotent() {
        let torus = builtin("torus7").unwrap();
        let q = level_quotient(&torus, p(), 3).unwrap();
        assert_eq!(q.algebra.quotient_by_socle(1..=2).unwrap(), q.algebra);
    }

    #[test]
    fn star_deletion_identity() {
        for name in ["torus7", "cross_polytope:3"] {
            let c = builtin(name).unwrap();
            for v in c.vertices() {
                let r = star_deletion_dim_check(&c, v, p(), 0).unwrap();
                assert!(r.holds, "{name} vertex {v}: {r:?}");
            }
        }
    }

    #[test]
    fn star_deletion_hypotheses() {
        let filled = SimplicialComplex::from_facets(3, [vec![1, 2, 3]]).unwrap();
        let err = star_deletion_dim_check(&filled, 1, p(), 0).unwrap_err();
        assert!(matches!(err, Error::HypothesisFailed(ref m) if m.contains("lk 1") || m.contains("deletion")), "{err}");
        let torus = builtin("torus7").unwrap();
        assert!(matches!(
            star_deletion_dim_check(&torus, 9, p(), 0),
            Err(Error::HypothesisFailed(_))
        ));
        let bowtie = builtin("bowtie_filled").unwrap();
        assert!(matches!(
            star_deletion_dim_check(&bowtie, 2, p(), 0),
            Err(Error::HypothesisFailed(ref m)) if m.contains("not Buchsbaum")
        ));
    }

    #[test]
    fn rp2_in_odd_characteristic_is_cm_and_not_bstar() {
        let rp = builtin("rp2_6").unwrap();
        assert!(is_cohen_macaulay(&rp, PrimeField::new(3).unwrap()));
        let r = is_buchsbaum_star(&rp, FiniteField::generic(3).unwrap(), 0).unwrap();
        assert!(r.buchsbaum);
        // the socle sits in degree 2 with dimension h_2 = 6, but β_1 = 0
        assert!(!r.holds);
        assert_eq!(r.degrees[1], SocleComparison { degree: 2, actual: 6, expected: 0 });
    }
}
