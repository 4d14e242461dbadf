//! Facet-list text format.
//!
//! ```text
//! # triangle boundary
//! 3 2
//! 1 2
//! 1 3
//! 2 3
//! ```
//!
//! The header line is `n d` (ground-set size, maximal facet size); each
//! further line is one facet. Lines starting with `#` and blank lines are
//! ignored.

use std::fmt::Write as _;
use std::path::Path;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};

pub fn parse_facet_list(text: &str) -> Result<SimplicialComplex> {
    let mut header: Option<(u32, usize)> = None;
    let mut facets: Vec<Vec<u32>> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let nums = line
            .split_whitespace()
            .map(|tok| {
                tok.parse::<u32>().map_err(|_| Error::Parse {
                    line: line_no,
                    message: format!("`{tok}` is not a non-negative integer"),
                })
            })
            .collect::<Result<Vec<u32>>>()?;
        match header {
            None => {
                if nums.len() != 2 {
                    return Err(Error::Parse {
                        line: line_no,
                        message: "header must be `n d`".into(),
                    });
                }
                header = Some((nums[0], nums[1] as usize));
            }
            Some(_) => facets.push(nums),
        }
    }
    let (n, d) = header.ok_or(Error::Parse {
        line: 0,
        message: "missing `n d` header".into(),
    })?;
    let complex = SimplicialComplex::from_facets(n, facets)?;
    if complex.d() != d {
        return Err(Error::Parse {
            line: 1,
            message: format!("header declares d = {d} but the largest facet has {} vertices", complex.d()),
        });
    }
    Ok(complex)
}

pub fn read_facet_list(path: impl AsRef<Path>) -> Result<SimplicialComplex> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse {
        line: 0,
        message: format!("{}: {e}", path.display()),
    })?;
    parse_facet_list(&text)
}

pub fn write_facet_list(complex: &SimplicialComplex) -> String {
    let mut out = String::new();
    writeln!(out, "{} {}", complex.n(), complex.d()).unwrap();
    for facet in complex.facets() {
        let line: Vec<String> = facet.vertices().iter().map(u32::to_string).collect();
        writeln!(out, "{}", line.join(" ")).unwrap();
    }
    out
}
