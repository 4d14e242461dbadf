//! Built-in corpus of small triangulations.

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};

/// Six-vertex real projective plane.
pub const RP2_6: [[u32; 3]; 10] = [
    [1, 2, 3],
    [1, 2, 4],
    [1, 3, 5],
    [1, 4, 6],
    [1, 5, 6],
    [2, 3, 6],
    [2, 4, 5],
    [2, 5, 6],
    [3, 4, 5],
    [3, 4, 6],
];

/// Fixed names accepted by [`builtin`]; the parametrised families take a
/// `:k` suffix.
pub const NAMES: &[&str] = &[
    "simplex_boundary:k",
    "cross_polytope:k",
    "rp2_6",
    "torus7",
    "wedge_two_circles",
    "bowtie_filled",
];

pub fn builtin(name: &str) -> Result<SimplicialComplex> {
    let unknown = || Error::UnknownBuiltin(name.to_string());
    if let Some((family, k)) = name.split_once(':') {
        let k: u32 = k.parse().map_err(|_| unknown())?;
        if k == 0 {
            return Err(unknown());
        }
        return match family {
            "simplex_boundary" => Ok(simplex_boundary(k)),
            "cross_polytope" => Ok(cross_polytope(k)),
            _ => Err(unknown()),
        };
    }
    match name {
        "rp2_6" => SimplicialComplex::from_facets(6, RP2_6),
        "torus7" => Ok(torus7()),
        "wedge_two_circles" => SimplicialComplex::from_facets(
            5,
            [[1, 2], [1, 3], [2, 3], [1, 4], [1, 5], [4, 5]],
        ),
        "bowtie_filled" => SimplicialComplex::from_facets(5, [[1, 2, 3], [1, 4, 5]]),
        _ => Err(unknown()),
    }
}

/// Boundary of the `k`-simplex: all `k`-subsets of `[k+1]`.
pub fn simplex_boundary(k: u32) -> SimplicialComplex {
    let n = k + 1;
    let facets = (1..=n).map(|skip| (1..=n).filter(move |&v| v != skip));
    SimplicialComplex::from_facets(n, facets).expect("k >= 1")
}

/// Boundary of the `k`-dimensional cross-polytope; vertices `2i-1` and `2i`
/// are antipodal.
pub fn cross_polytope(k: u32) -> SimplicialComplex {
    let facets = (0u64..(1u64 << k)).map(|mask| {
        (0..k)
            .map(|i| 2 * i + 1 + ((mask >> i) & 1) as u32)
            .collect::<Vec<u32>>()
    });
    SimplicialComplex::from_facets(2 * k, facets).expect("k >= 1")
}

/// Möbius–Császár seven-vertex torus: triangles `{i, i+1, i+3}` and
/// `{i, i+2, i+3}` modulo 7.
pub fn torus7() -> SimplicialComplex {
    let v = |i: u32| i % 7 + 1;
    let facets = (0..7).flat_map(|i| [[v(i), v(i + 1), v(i + 3)], [v(i), v(i + 2), v(i + 3)]]);
    SimplicialComplex::from_facets(7, facets).expect("valid facets")
}
