//! Reduced simplicial homology over GF(p), Hochster's formula for the graded
//! pieces of local cohomology, and the Reisner-type classification
//! predicates (Cohen–Macaulay, Buchsbaum, 2-CM).

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, RwLock};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::complex::{Face, SimplicialComplex};
use crate::error::{Error, Result};
use crate::linalg::{Field, PrimeField, PrimeFieldMatrix};

/// Reduced Betti numbers `β_{-1}, β_0, …, β_{d-1}` over GF(p).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiTable {
    pub p: u32,
    /// `betti[j + 1] = β_j`.
    pub betti: Vec<usize>,
}

impl BettiTable {
    /// `β_j`, zero outside the stored range.
    pub fn get(&self, j: isize) -> usize {
        if j < -1 {
            return 0;
        }
        self.betti.get((j + 1) as usize).copied().unwrap_or(0)
    }

    /// `Σ_j (-1)^j β_j`.
    pub fn euler_characteristic(&self) -> i64 {
        self.betti
            .iter()
            .enumerate()
            .map(|(idx, &b)| if idx % 2 == 1 { b as i64 } else { -(b as i64) })
            .sum()
    }
}

/// Augmented boundary map `∂_j : C_j → C_{j-1}`; for `j = 0` the target is
/// spanned by the empty face.
pub fn boundary_matrix(complex: &SimplicialComplex, j: usize, field: PrimeField) -> PrimeFieldMatrix {
    let rows = complex.faces_of_size(j);
    let cols = complex.faces_of_size(j + 1);
    let index: HashMap<&Face, usize> = rows.iter().enumerate().map(|(i, f)| (f, i)).collect();
    let mut m = PrimeFieldMatrix::zeros(field, rows.len(), cols.len());
    for (c, face) in cols.iter().enumerate() {
        for pos in 0..face.len() {
            let r = index[&face.without_position(pos)];
            let sign = if pos % 2 == 0 { 1 } else { field.neg(1) };
            m.set(r, c, sign);
        }
    }
    m
}

/// `β_j = dim ker ∂_j − rank ∂_{j+1}` on the augmented chain complex.
/// The void complex has no chains and all Betti numbers vanish; `{∅}` has
/// `β_{-1} = 1`.
pub fn reduced_betti(complex: &SimplicialComplex, field: PrimeField) -> BettiTable {
    if complex.is_void() {
        return BettiTable {
            p: field.characteristic(),
            betti: Vec::new(),
        };
    }
    let d = complex.d();
    // ranks[j] = rank ∂_j, for j = 0..=d (∂_d is from the empty chain group)
    let ranks: Vec<usize> = (0..=d)
        .into_par_iter()
        .map(|j| boundary_matrix(complex, j, field).rank())
        .collect();
    let betti = (0..=d)
        .map(|size| {
            // chains of cardinality `size`, i.e. dimension size - 1
            let chains = complex.faces_of_size(size).len();
            let outgoing = if size == 0 { 0 } else { ranks[size - 1] };
            let incoming = ranks.get(size).copied().unwrap_or(0);
            chains - outgoing - incoming
        })
        .collect();
    BettiTable {
        p: field.characteristic(),
        betti,
    }
}

/// Memoised reduced Betti numbers of links `lk F` of one complex.
pub struct LinkHomology<'a> {
    complex: &'a SimplicialComplex,
    field: PrimeField,
    cache: RwLock<HashMap<Face, Arc<BettiTable>>>,
}

impl<'a> LinkHomology<'a> {
    pub fn new(complex: &'a SimplicialComplex, field: PrimeField) -> Self {
        LinkHomology {
            complex,
            field,
            cache: RwLock::new(HashMap::new()),
        }
    }

    pub fn complex(&self) -> &SimplicialComplex {
        self.complex
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn link_betti(&self, face: &Face) -> Arc<BettiTable> {
        if let Some(hit) = self.cache.read().unwrap().get(face) {
            return hit.clone();
        }
        let table = Arc::new(reduced_betti(&self.complex.link(face), self.field));
        self.cache
            .write()
            .unwrap()
            .entry(face.clone())
            .or_insert(table)
            .clone()
    }

    /// Faces whose link has nonvanishing homology below its top dimension.
    /// The empty face is examined only when `include_empty` is set.
    pub fn reisner_violations(&self, include_empty: bool) -> Vec<Face> {
        let faces: Vec<&Face> = self
            .complex
            .all_faces()
            .filter(|f| include_empty || !f.is_empty())
            .collect();
        let mut bad: Vec<Face> = faces
            .into_par_iter()
            .filter(|f| {
                let b = self.link_betti(f);
                // betti runs over β_{-1..dim lk F}
                let lk_dim = b.betti.len() as isize - 2;
                (-1..lk_dim).any(|i| b.get(i) != 0)
            })
            .cloned()
            .collect();
        bad.sort();
        bad
    }

    /// `dim_K [H^i_m(K[Δ])]_{-j} = Σ_{F ∈ Δ, |F| = j} β_{i-j-1}(lk F)`.
    pub fn hochster_dims(&self, i: usize) -> Result<LocalCohomologyDims> {
        let d = self.complex.d();
        if i > d {
            return Err(Error::IndexOutOfRange { index: i, max: d });
        }
        let mut dims = BTreeMap::new();
        for j in 0..=d {
            let total: usize = self
                .complex
                .faces_of_size(j)
                .par_iter()
                .map(|f| self.link_betti(f).get(i as isize - j as isize - 1))
                .sum();
            dims.insert(-(j as i64), total);
        }
        Ok(LocalCohomologyDims { index: i, dims })
    }
}

/// Graded dimensions of `H^i_m(K[Δ])` in degrees `0, -1, …, -d`; all other
/// degrees vanish.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LocalCohomologyDims {
    pub index: usize,
    pub dims: BTreeMap<i64, usize>,
}

impl LocalCohomologyDims {
    pub fn in_degree(&self, a: i64) -> usize {
        self.dims.get(&a).copied().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.dims.values().sum()
    }
}

pub fn hochster_dims(complex: &SimplicialComplex, field: PrimeField, i: usize) -> Result<LocalCohomologyDims> {
    LinkHomology::new(complex, field).hochster_dims(i)
}

/// Reisner's criterion: every link `lk F`, `F ∈ Δ` (including `∅`), has
/// vanishing reduced homology below its dimension.
pub fn is_cohen_macaulay(complex: &SimplicialComplex, field: PrimeField) -> bool {
    LinkHomology::new(complex, field).reisner_violations(true).is_empty()
}

/// Pure, with every vertex link Cohen–Macaulay. Since
/// `lk_{lk v}(G) = lk_Δ(G ∪ {v})`, this is Reisner's condition on all
/// nonempty faces of Δ.
pub fn is_buchsbaum(complex: &SimplicialComplex, field: PrimeField) -> bool {
    complex.is_pure() && LinkHomology::new(complex, field).reisner_violations(false).is_empty()
}

/// Cohen–Macaulay, and every vertex deletion is Cohen–Macaulay of the same
/// dimension.
pub fn is_two_cm(complex: &SimplicialComplex, field: PrimeField) -> bool {
    if !is_cohen_macaulay(complex, field) {
        return false;
    }
    complex.vertices().into_par_iter().all(|v| {
        let del = complex.deletion(&Face::vertex(v));
        del.dim() == complex.dim() && is_cohen_macaulay(&del, field)
    })
}
