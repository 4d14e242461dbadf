#![allow(dead_code)]

use std::collections::BTreeMap;

pub const CORPUS: &[&str] = &[
    "simplex_boundary:1",
    "simplex_boundary:2",
    "simplex_boundary:3",
    "simplex_boundary:4",
    "cross_polytope:2",
    "cross_polytope:3",
    "cross_polytope:4",
    "rp2_6",
    "torus7",
    "wedge_two_circles",
    "bowtie_filled",
];

pub const CHARS: &[u32] = &[2, 3, 32003];

pub const SEEDS: &[u64] = &[0, 1, 2];

/// Plain Pascal-triangle binomial, zero when `k > n` or either is negative.
pub fn choose(n: i64, k: i64) -> i64 {
    if n < 0 || k < 0 || k > n {
        return 0;
    }
    let mut row = vec![1i64];
    for _ in 0..n {
        let mut next = vec![1i64; row.len() + 1];
        for i in 1..row.len() {
            next[i] = row[i - 1] + row[i];
        }
        row = next;
    }
    row[k as usize]
}

/// Every tuple `(m_top, [m_d, …, m_s])` allowed by the expansion rules
/// whose value is at most `bmax`, grouped by value.
pub fn admissible_expansions(n: i64, d: i64, bmax: i64) -> BTreeMap<i64, Vec<(i64, Vec<i64>)>> {
    let block = choose(n - 1 + d, d);
    let mut tails: Vec<(i64, Vec<i64>)> = vec![(0, Vec::new())];
    let mut frontier: Vec<(i64, Vec<i64>)> = Vec::new();
    // decreasing sequences m_d > m_{d-1} > ... > m_s >= s >= 1 with m_d <= n+d-2
    if d >= 1 {
        for m in d..=(n + d - 2) {
            frontier.push((choose(m, d), vec![m]));
        }
    }
    while let Some((value, seq)) = frontier.pop() {
        if value > bmax {
            continue;
        }
        tails.push((value, seq.clone()));
        let i = d - seq.len() as i64;
        if i < 1 {
            continue;
        }
        let last = *seq.last().unwrap();
        for m in i..last {
            let mut next = seq.clone();
            next.push(m);
            frontier.push((value + choose(m, i), next));
        }
    }
    let mut out: BTreeMap<i64, Vec<(i64, Vec<i64>)>> = BTreeMap::new();
    for (tail_value, seq) in tails {
        let mut top = 0;
        while top * block + tail_value <= bmax {
            out.entry(top * block + tail_value).or_default().push((top, seq.clone()));
            top += 1;
        }
    }
    out
}
