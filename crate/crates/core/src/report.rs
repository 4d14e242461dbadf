//! One-stop analysis of a complex, serialisable to a stable JSON document.

use rayon::prelude::*;
use serde::Serialize;

use crate::artinian::{
    buchsbaum_star_from, level_quotient_of, reduce_with_seed, slack_from, GradedReduction, LsopProvenance,
};
use crate::complex::SimplicialComplex;
use crate::enumeration::{
    check_bstar_bounds, check_bstar_upper_bounds, check_module_macaulay, soderberg_check, to_usize, BStarBounds,
    HVectorBundle, MacaulayCheck, SoderbergCheck,
};
use crate::error::Result;
use crate::homology::{is_buchsbaum, is_cohen_macaulay, is_two_cm, reduced_betti, BettiTable};
use crate::linalg::{FiniteField, PrimeField};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComplexSummary {
    pub id: String,
    pub n: u32,
    pub d: usize,
    pub num_facets: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub pure: bool,
    pub cohen_macaulay: bool,
    pub buchsbaum: bool,
    pub two_cm: bool,
    /// `None` when the complex is not Buchsbaum. Taken from the first seed.
    pub buchsbaum_star: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeedResult {
    pub lsop: LsopProvenance,
    pub reduction_dims: Vec<usize>,
    pub socle: Vec<usize>,
    pub buchsbaum_star: Option<bool>,
    /// Socle dimension minus the guaranteed part, degrees `1..`.
    pub socle_slack: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LevelSummary {
    pub dims: Vec<usize>,
    pub socle: Vec<usize>,
    pub is_level: bool,
    pub cm_type: usize,
    pub socle_degree: usize,
    pub matches_h_double_prime: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundsReport {
    /// Growth condition on `h'`.
    pub h_prime_growth: Option<MacaulayCheck>,
    /// Growth condition on `h''` read backwards.
    pub reversed_h_double_prime_growth: Option<MacaulayCheck>,
    pub bstar: Option<BStarBounds>,
    pub soderberg: Option<SoderbergCheck>,
    /// Checks that could not be evaluated, with the reason.
    pub skipped: Vec<String>,
}

impl BoundsReport {
    pub fn pass(&self) -> bool {
        self.h_prime_growth.as_ref().is_none_or(|c| c.pass)
            && self.reversed_h_double_prime_growth.as_ref().is_none_or(|c| c.pass)
            && self.bstar.as_ref().is_none_or(|c| c.pass)
            && self.soderberg.as_ref().is_none_or(|c| c.pass)
    }

    pub fn new(bundle: &HVectorBundle) -> Self {
        let mut skipped = Vec::new();
        let h_prime_growth = keep(&mut skipped, "h' growth", check_module_macaulay(&bundle.h_prime, bundle.n));
        let mut reversed = bundle.h_double_prime.clone();
        reversed.reverse();
        let reversed_h_double_prime_growth = keep(&mut skipped, "reversed h'' growth", check_module_macaulay(&reversed, bundle.n));
        let bstar = match check_bstar_bounds(bundle) {
            Ok(b) => Some(b),
            Err(e) => {
                let upper = keep(&mut skipped, "Buchsbaum* upper bounds", check_bstar_upper_bounds(bundle));
                skipped.push(format!("Buchsbaum* lower bounds: {e}"));
                upper
            }
        };
        let soderberg = keep(
            &mut skipped,
            "Söderberg determinants",
            soderberg_check(&bundle.h_double_prime, bundle.n, bundle.d),
        );
        BoundsReport {
            h_prime_growth,
            reversed_h_double_prime_growth,
            bstar,
            soderberg,
            skipped,
        }
    }
}

fn keep<T>(skipped: &mut Vec<String>, name: &str, r: Result<T>) -> Option<T> {
    match r {
        Ok(v) => Some(v),
        Err(e) => {
            skipped.push(format!("{name}: {e}"));
            None
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FieldSummary {
    /// Characteristic; homology is computed over GF(p).
    pub p: u32,
    /// Field the linear forms are drawn from.
    pub forms_field: FiniteField,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub schema: u32,
    pub complex: ComplexSummary,
    pub field: FieldSummary,
    pub seeds: Vec<u64>,
    pub f: Vec<i64>,
    pub h: Vec<i64>,
    pub h_prime: Vec<i64>,
    pub h_double_prime: Vec<i64>,
    pub betti: BettiTable,
    pub classification: Classification,
    pub per_seed: Vec<SeedResult>,
    /// All seeds produced the same reduction and socle dimensions.
    pub seeds_agree: bool,
    pub h_prime_matches_reduction: bool,
    pub level_quotient: LevelSummary,
    pub bounds: BoundsReport,
}

impl AnalysisReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }
}

fn seed_result(
    complex: &SimplicialComplex,
    reduction: &GradedReduction,
    betti: &BettiTable,
    buchsbaum: bool,
) -> SeedResult {
    let slack = slack_from(complex, reduction, betti, buchsbaum);
    SeedResult {
        lsop: reduction.forms().provenance(),
        reduction_dims: reduction.dims().to_vec(),
        socle: reduction.socle_profile().dims,
        buchsbaum_star: buchsbaum.then(|| buchsbaum_star_from(complex, reduction, betti).holds),
        socle_slack: slack.degrees.iter().map(|r| r.slack).collect(),
    }
}

/// `v` equals `dims` followed by zeros.
fn matches_padded(v: &[i64], dims: &[usize]) -> bool {
    match to_usize(v) {
        Some(v) => v.len() >= dims.len() && v[..dims.len()] == *dims && v[dims.len()..].iter().all(|&x| x == 0),
        None => false,
    }
}

/// Runs every analysis on `complex` in characteristic `p`, sampling one
/// parameter system per seed. An empty seed list means seed 0.
pub fn analyse(complex: &SimplicialComplex, id: &str, p: u32, seeds: &[u64]) -> Result<AnalysisReport> {
    let seeds = if seeds.is_empty() { &[0][..] } else { seeds };
    let prime = PrimeField::new(p)?;
    let forms_field = FiniteField::generic(p)?;
    let betti = reduced_betti(complex, prime);
    let bundle = HVectorBundle::new(complex, betti.clone())?;
    let buchsbaum = is_buchsbaum(complex, prime);

    let reductions: Vec<GradedReduction> = seeds
        .par_iter()
        .map(|&s| reduce_with_seed(complex, forms_field, s))
        .collect::<Result<_>>()?;
    let per_seed: Vec<SeedResult> = reductions
        .par_iter()
        .map(|r| seed_result(complex, r, &betti, buchsbaum))
        .collect();
    let seeds_agree = per_seed
        .windows(2)
        .all(|w| w[0].reduction_dims == w[1].reduction_dims && w[0].socle == w[1].socle);

    let level = level_quotient_of(&reductions[0], complex.d())?;
    let level_quotient = LevelSummary {
        matches_h_double_prime: matches_padded(&bundle.h_double_prime, &level.dims),
        dims: level.dims,
        socle: level.socle_dims,
        is_level: level.is_level,
        cm_type: level.cm_type,
        socle_degree: level.socle_degree,
    };

    Ok(AnalysisReport {
        schema: SCHEMA_VERSION,
        complex: ComplexSummary {
            id: id.to_string(),
            n: complex.n(),
            d: complex.d(),
            num_facets: complex.facets().len(),
        },
        field: FieldSummary { p, forms_field },
        seeds: seeds.to_vec(),
        classification: Classification {
            pure: complex.is_pure(),
            cohen_macaulay: is_cohen_macaulay(complex, prime),
            buchsbaum,
            two_cm: is_two_cm(complex, prime),
            buchsbaum_star: per_seed[0].buchsbaum_star,
        },
        h_prime_matches_reduction: matches_padded(&bundle.h_prime, &per_seed[0].reduction_dims),
        seeds_agree,
        per_seed,
        level_quotient,
        bounds: BoundsReport::new(&bundle),
        f: bundle.f,
        h: bundle.h,
        h_prime: bundle.h_prime,
        h_double_prime: bundle.h_double_prime,
        betti,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtin::builtin;

    #[test]
    fn torus_report() {
        let t = builtin("torus7").unwrap();
        let r = analyse(&t, "torus7", 32003, &[0, 1, 2]).unwrap();
        assert_eq!(r.schema, 1);
        assert_eq!(r.h_prime, vec![1, 4, 10, 1]);
        assert_eq!(r.h_double_prime, vec![1, 4, 4, 1]);
        assert!(r.seeds_agree);
        assert!(r.h_prime_matches_reduction);
        assert_eq!(r.per_seed.len(), 3);
        assert_eq!(r.per_seed[2].socle, vec![0, 0, 6, 1]);
        assert_eq!(
            r.classification,
            Classification {
                pure: true,
                cohen_macaulay: false,
                buchsbaum: true,
                two_cm: false,
                buchsbaum_star: Some(true),
            }
        );
        assert!(r.level_quotient.matches_h_double_prime);
        assert!(r.bounds.pass());
        assert!(r.bounds.skipped.is_empty());
    }

    #[test]
    fn json_is_reproducible() {
        let t = builtin("rp2_6").unwrap();
        let a = analyse(&t, "rp2_6", 2, &[5]).unwrap().to_json();
        let b = analyse(&t, "rp2_6", 2, &[5]).unwrap().to_json();
        assert_eq!(a, b);
        let v: serde_json::Value = serde_json::from_str(&a).unwrap();
        assert_eq!(v["schema"], 1);
        assert_eq!(v["field"]["forms_field"]["k"], 14);
        assert_eq!(v["bounds"]["soderberg"]["pass"], true);
    }

    #[test]
    fn non_buchsbaum_report() {
        let b = builtin("bowtie_filled").unwrap();
        let r = analyse(&b, "bowtie_filled", 32003, &[0]).unwrap();
        assert!(!r.classification.buchsbaum);
        assert_eq!(r.classification.buchsbaum_star, None);
        assert_eq!(r.per_seed[0].buchsbaum_star, None);
    }
}
