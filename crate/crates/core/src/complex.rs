//! Finite simplicial complexes on the ground set `[n] = {1, …, n}`.
//!
//! A complex is stored by its facets; the full face poset is materialised
//! once at construction and grouped by cardinality, since every downstream
//! computation (boundary matrices, Hochster sums, monomial bases) indexes
//! faces. Links, stars and deletions keep the original vertex labels.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A face: a strictly increasing list of vertex ids.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Face(Vec<u32>);

impl Face {
    /// Sorts and deduplicates the given vertices.
    pub fn new(mut vertices: Vec<u32>) -> Self {
        vertices.sort_unstable();
        vertices.dedup();
        Face(vertices)
    }

    pub fn empty() -> Self {
        Face(Vec::new())
    }

    pub fn vertex(v: u32) -> Self {
        Face(vec![v])
    }

    pub fn vertices(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn dim(&self) -> isize {
        self.0.len() as isize - 1
    }

    pub fn contains(&self, v: u32) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn is_subset(&self, other: &Face) -> bool {
        // both sorted: merge walk
        let mut it = other.0.iter();
        'outer: for v in &self.0 {
            for w in it.by_ref() {
                if w == v {
                    continue 'outer;
                }
                if w > v {
                    return false;
                }
            }
            return false;
        }
        true
    }

    pub fn is_disjoint(&self, other: &Face) -> bool {
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].cmp(&other.0[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => return false,
            }
        }
        true
    }

    pub fn union(&self, other: &Face) -> Face {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Face::new(v)
    }

    pub fn minus(&self, other: &Face) -> Face {
        Face(self.0.iter().copied().filter(|v| !other.contains(*v)).collect())
    }

    /// The face with the vertex at position `i` removed.
    pub fn without_position(&self, i: usize) -> Face {
        let mut v = self.0.clone();
        v.remove(i);
        Face(v)
    }

    /// All subsets of the face, including the empty face and the face itself.
    pub fn subsets(&self) -> impl Iterator<Item = Face> + '_ {
        let k = self.0.len();
        assert!(k < 64, "face too large to enumerate");
        (0u64..(1u64 << k)).map(move |mask| {
            Face(
                (0..k)
                    .filter(|i| mask >> i & 1 == 1)
                    .map(|i| self.0[i])
                    .collect(),
            )
        })
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "∅");
        }
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// A finite simplicial complex given by its facets.
///
/// Complexes built through [`SimplicialComplex::from_facets`] always contain a
/// nonempty face. Two degenerate values arise as links and deletions and are
/// representable: the complex `{∅}` (one empty facet) and the void complex
/// (no faces at all, [`SimplicialComplex::is_void`]).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    n: u32,
    facets: Vec<Face>,
    /// `faces[k]` holds all faces of cardinality `k`, sorted.
    faces: Vec<Vec<Face>>,
    members: HashSet<Face>,
}

impl SimplicialComplex {
    /// Builds a complex on `[n]` from a facet list. Contained facets are
    /// dropped and the remaining facets are sorted lexicographically.
    pub fn from_facets<I, F>(n: u32, facets: I) -> Result<Self>
    where
        I: IntoIterator<Item = F>,
        F: IntoIterator<Item = u32>,
    {
        let mut list = Vec::new();
        for facet in facets {
            let face = Face::new(facet.into_iter().collect());
            if face.is_empty() {
                continue;
            }
            if let Some(&v) = face.vertices().iter().find(|&&v| v == 0 || v > n) {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            list.push(face);
        }
        if list.is_empty() {
            return Err(Error::EmptyInput);
        }
        Ok(Self::from_faces_unchecked(n, list))
    }

    /// Builds the complex generated by `generators`, which may be empty
    /// (void complex) or consist of the empty face only (`{∅}`).
    pub(crate) fn from_faces_unchecked(n: u32, generators: Vec<Face>) -> Self {
        let mut generators = generators;
        generators.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
        generators.dedup();
        let mut facets: Vec<Face> = Vec::new();
        for g in generators {
            if !facets.iter().any(|f| g.is_subset(f)) {
                facets.push(g);
            }
        }
        facets.sort();

        let d = facets.iter().map(Face::len).max().unwrap_or(0);
        let mut by_size: Vec<BTreeSet<Face>> = vec![BTreeSet::new(); if facets.is_empty() { 0 } else { d + 1 }];
        for facet in &facets {
            for s in facet.subsets() {
                by_size[s.len()].insert(s);
            }
        }
        let faces: Vec<Vec<Face>> = by_size.into_iter().map(|s| s.into_iter().collect()).collect();
        let members = faces.iter().flatten().cloned().collect();
        SimplicialComplex {
            n,
            facets,
            faces,
            members,
        }
    }

    pub(crate) fn void(n: u32) -> Self {
        Self::from_faces_unchecked(n, Vec::new())
    }

    /// Size of the ground set.
    pub fn n(&self) -> u32 {
        self.n
    }

    /// Maximal facet size, i.e. the Krull dimension of `K[Δ]`.
    pub fn d(&self) -> usize {
        self.faces.len().saturating_sub(1)
    }

    pub fn dim(&self) -> isize {
        self.d() as isize - 1
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    /// True for the complex with no faces at all (not even `∅`).
    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn contains(&self, face: &Face) -> bool {
        self.members.contains(face)
    }

    /// Vertices that actually occur in some face.
    pub fn vertices(&self) -> Vec<u32> {
        self.faces
            .get(1)
            .map(|fs| fs.iter().map(|f| f.vertices()[0]).collect())
            .unwrap_or_default()
    }

    /// Faces of cardinality `k`.
    pub fn faces_of_size(&self, k: usize) -> &[Face] {
        self.faces.get(k).map(Vec::as_slice).unwrap_or(&[])
    }

    /// All `j`-dimensional faces in lexicographic order; `j = -1` yields `[∅]`.
    pub fn faces_of_dim(&self, j: isize) -> &[Face] {
        if j < -1 {
            return &[];
        }
        self.faces_of_size((j + 1) as usize)
    }

    pub fn all_faces(&self) -> impl Iterator<Item = &Face> {
        self.faces.iter().flatten()
    }

    /// `(f_{-1}, f_0, …, f_{d-1})`.
    pub fn f_vector(&self) -> Vec<i64> {
        self.faces.iter().map(|fs| fs.len() as i64).collect()
    }

    pub fn is_pure(&self) -> bool {
        let d = self.d();
        self.facets.iter().all(|f| f.len() == d)
    }

    /// `lk F = {G : F ∪ G ∈ Δ, F ∩ G = ∅}`; void when `F ∉ Δ`.
    pub fn link(&self, face: &Face) -> SimplicialComplex {
        if !self.contains(face) {
            return Self::void(self.n);
        }
        let gens = self
            .facets
            .iter()
            .filter(|g| face.is_subset(g))
            .map(|g| g.minus(face))
            .collect();
        Self::from_faces_unchecked(self.n, gens)
    }

    /// `st F = {G : F ∪ G ∈ Δ}`; void when `F ∉ Δ`.
    pub fn star(&self, face: &Face) -> SimplicialComplex {
        if !self.contains(face) {
            return Self::void(self.n);
        }
        let gens = self
            .facets
            .iter()
            .filter(|g| face.is_subset(g))
            .cloned()
            .collect();
        Self::from_faces_unchecked(self.n, gens)
    }

    /// `Δ_{-F} = {G : F ∩ G = ∅}`.
    pub fn deletion(&self, face: &Face) -> SimplicialComplex {
        let gens = self.facets.iter().map(|g| g.minus(face)).collect();
        Self::from_faces_unchecked(self.n, gens)
    }
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "complex on [{}] with facets [", self.n)?;
        for (i, facet) in self.facets.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{facet}")?;
        }
        write!(f, "]")
    }
}
