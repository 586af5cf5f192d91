//! Brute-force oracles shared by the integration tests. Everything here works
//! on raw exponent vectors and edge lists and uses nothing from the library
//! beyond converting its values in and out.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use proptest::prelude::*;
use scarfness::{Monomial, MonomialIdeal, SimpleGraph, VariableSet};

pub type Exps = Vec<u32>;

pub fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

pub fn lcm(a: &[u32], b: &[u32]) -> Exps {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

pub fn gcd(a: &[u32], b: &[u32]) -> Exps {
    a.iter().zip(b).map(|(x, y)| *x.min(y)).collect()
}

pub fn mul(a: &[u32], b: &[u32]) -> Exps {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// Drops every generator divisible by a different one.
pub fn minimal(gens: impl IntoIterator<Item = Exps>) -> BTreeSet<Exps> {
    let all: BTreeSet<Exps> = gens.into_iter().collect();
    all.iter()
        .filter(|g| !all.iter().any(|h| h != *g && divides(h, g)))
        .cloned()
        .collect()
}

pub fn gens_of(ideal: &MonomialIdeal) -> BTreeSet<Exps> {
    ideal.generators().iter().map(|m| m.exponents().to_vec()).collect()
}

pub fn ideal_from(vars: &VariableSet, gens: &[Exps]) -> MonomialIdeal {
    let gens = gens.iter().map(|e| Monomial::new(e.clone())).collect();
    MonomialIdeal::new(vars.clone(), gens).unwrap()
}

pub fn member(gens: &BTreeSet<Exps>, m: &[u32]) -> bool {
    gens.iter().any(|g| divides(g, m))
}

/// All exponent vectors dividing `m`.
pub fn divisors(m: &[u32]) -> Vec<Exps> {
    let mut out = vec![vec![]];
    for &e in m {
        out = out
            .into_iter()
            .flat_map(|p: Exps| {
                (0..=e).map(move |k| {
                    let mut q = p.clone();
                    q.push(k);
                    q
                })
            })
            .collect();
    }
    out
}

pub fn monomials_up_to_degree(nvars: usize, d: u32) -> Vec<Exps> {
    divisors(&vec![d; nvars])
        .into_iter()
        .filter(|e| e.iter().sum::<u32>() <= d)
        .collect()
}

/// Scarf faces by counting the label of every subset of generators.
pub fn scarf_faces_census(gens: &[Exps]) -> BTreeSet<Vec<usize>> {
    let q = gens.len();
    let nvars = gens.first().map_or(0, Vec::len);
    let mut by_label: BTreeMap<Exps, Vec<Vec<usize>>> = BTreeMap::new();
    for mask in 0u32..1 << q {
        let members: Vec<usize> = (0..q).filter(|&i| mask >> i & 1 == 1).collect();
        let label = members.iter().fold(vec![0; nvars], |acc, &i| lcm(&acc, &gens[i]));
        by_label.entry(label).or_default().push(members);
    }
    by_label
        .into_values()
        .filter(|v| v.len() == 1)
        .map(|mut v| v.pop().unwrap())
        .collect()
}

pub fn lcm_census(gens: &[Exps]) -> BTreeSet<Exps> {
    let q = gens.len();
    (1u32..1 << q)
        .map(|mask| {
            (0..q)
                .filter(|&i| mask >> i & 1 == 1)
                .fold(vec![0; gens[0].len()], |acc, i| lcm(&acc, &gens[i]))
        })
        .collect()
}

/// Rank of an integer matrix modulo a prime.
pub fn rank_mod_p(mut rows: Vec<Vec<i64>>, p: i64) -> usize {
    for r in rows.iter_mut() {
        for x in r.iter_mut() {
            *x = x.rem_euclid(p);
        }
    }
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][c] != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = pow_mod(rows[rank][c], p - 2, p);
        for x in rows[rank].iter_mut() {
            *x = *x * inv % p;
        }
        for r in 0..rows.len() {
            if r != rank && rows[r][c] != 0 {
                let f = rows[r][c];
                let pivot_row = rows[rank].clone();
                for (x, y) in rows[r].iter_mut().zip(&pivot_row) {
                    *x = (*x - f * y).rem_euclid(p);
                }
            }
        }
        rank += 1;
    }
    rank
}

fn pow_mod(mut b: i64, mut e: i64, p: i64) -> i64 {
    let mut acc = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

/// Large prime standing in for the rationals: the boundary matrices here are
/// small with entries in {-1, 0, 1}, so their torsion never involves it.
pub const BIG_PRIME: i64 = 2_147_483_647;

/// Reduced Betti numbers in dims 0..=dim of the complex with the given faces
/// (the empty face must be present). Returns an empty vector for {∅}.
pub fn reduced_betti(faces: &BTreeSet<Vec<usize>>, p: i64) -> Vec<usize> {
    let top = faces.iter().map(Vec::len).max().unwrap_or(0);
    let by_size: Vec<Vec<&Vec<usize>>> = (0..=top + 1)
        .map(|k| faces.iter().filter(|f| f.len() == k).collect())
        .collect();
    // rank of the boundary from size-k faces to size-(k-1) faces
    let rank = |k: usize| -> usize {
        if k == 0 || k > top {
            return 0;
        }
        let rows: Vec<Vec<i64>> = by_size[k - 1]
            .iter()
            .map(|low| {
                by_size[k]
                    .iter()
                    .map(|high| {
                        if !low.iter().all(|v| high.contains(v)) {
                            return 0;
                        }
                        let j = high.iter().position(|v| !low.contains(v)).unwrap();
                        if j % 2 == 0 { 1 } else { -1 }
                    })
                    .collect()
            })
            .collect();
        rank_mod_p(rows, p)
    };
    (1..=top)
        .map(|k| by_size[k].len() - rank(k) - rank(k + 1))
        .collect()
}

/// Scarfness straight from the definition of the criterion: every divisor of
/// the top lcm, not just lattice elements, over GF(p).
pub fn scarf_by_all_divisors(gens: &[Exps], p: i64) -> bool {
    if gens.len() <= 1 {
        return true;
    }
    let faces = scarf_faces_census(gens);
    let nvars = gens[0].len();
    let labels: BTreeMap<&Vec<usize>, Exps> = faces
        .iter()
        .map(|f| (f, f.iter().fold(vec![0; nvars], |acc, &i| lcm(&acc, &gens[i]))))
        .collect();
    let top = gens.iter().fold(vec![0; nvars], |acc, g| lcm(&acc, g));
    divisors(&top).into_iter().all(|m| {
        let sub: BTreeSet<Vec<usize>> = faces
            .iter()
            .filter(|f| divides(&labels[f], &m))
            .cloned()
            .collect();
        sub.len() <= 1 || reduced_betti(&sub, p).iter().all(|&b| b == 0)
    })
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..n {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

fn edge_set(edges: &[(usize, usize)]) -> BTreeSet<(usize, usize)> {
    edges.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect()
}

pub fn brute_isomorphic(n: usize, a: &[(usize, usize)], b: &[(usize, usize)]) -> bool {
    let target = edge_set(b);
    a.len() == b.len()
        && permutations(n).into_iter().any(|p| {
            let mapped: Vec<(usize, usize)> = a.iter().map(|&(u, v)| (p[u], p[v])).collect();
            edge_set(&mapped) == target
        })
}

/// Sets of `k` pairwise disjoint edges, by choosing edge subsets.
pub fn brute_matchings(edges: &[(usize, usize)], k: usize) -> BTreeSet<BTreeSet<(usize, usize)>> {
    let m = edges.len();
    let mut out = BTreeSet::new();
    for mask in 0u64..1 << m {
        if mask.count_ones() as usize != k {
            continue;
        }
        let chosen: Vec<(usize, usize)> = (0..m).filter(|&i| mask >> i & 1 == 1).map(|i| edges[i]).collect();
        let mut used = BTreeSet::new();
        if chosen.iter().all(|&(u, v)| used.insert(u) && used.insert(v)) {
            out.insert(chosen.into_iter().collect());
        }
    }
    out
}

pub fn brute_min_covers(n: usize, edges: &[(usize, usize)]) -> BTreeSet<u64> {
    let covers: Vec<u64> = (0u64..1 << n)
        .filter(|&c| edges.iter().all(|&(u, v)| c >> u & 1 == 1 || c >> v & 1 == 1))
        .collect();
    covers
        .iter()
        .copied()
        .filter(|&c| !covers.iter().any(|&d| d != c && d & c == d))
        .collect()
}

/// Closed form for the generators of the n-th symbolic power of the
/// triangle: `x^(n-i) y^(n-i) z^i` and its two rotations for `0 ≤ i ≤ n/2`.
pub fn triangle_claim(n: u32) -> BTreeSet<Exps> {
    let mut out = BTreeSet::new();
    for i in 0..=n / 2 {
        out.insert(vec![n - i, n - i, i]);
        out.insert(vec![n - i, i, n - i]);
        out.insert(vec![i, n - i, n - i]);
    }
    out
}

/// Every graph on `n` labelled vertices, edges in `(u, v)` form with `u < v`.
pub fn labelled_graphs(n: usize) -> impl Iterator<Item = Vec<(usize, usize)>> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        (0..pairs.len())
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| pairs[i])
            .collect()
    })
}

pub fn graph(n: usize, edges: &[(usize, usize)]) -> SimpleGraph {
    SimpleGraph::indexed("x", n, edges).unwrap()
}

// ---- proptest strategies ----

/// A monomial ideal as (variable count, generator exponent vectors).
pub fn raw_ideal(max_vars: usize, max_gens: usize, max_exp: u32) -> impl Strategy<Value = (usize, Vec<Exps>)> {
    (1..=max_vars).prop_flat_map(move |nv| {
        (
            Just(nv),
            prop::collection::vec(prop::collection::vec(0..=max_exp, nv), 1..=max_gens),
        )
    })
}

pub fn exps(nvars: usize, max_exp: u32) -> impl Strategy<Value = Exps> {
    prop::collection::vec(0..=max_exp, nvars)
}

/// A graph on `min..=max` vertices as an edge list.
pub fn raw_graph(min: usize, max: usize) -> impl Strategy<Value = (usize, Vec<(usize, usize)>)> {
    (min..=max).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
        let len = pairs.len();
        (Just(n), prop::collection::vec(any::<bool>(), len)).prop_map(move |(n, keep)| {
            let edges = pairs.iter().zip(keep).filter(|(_, k)| *k).map(|(e, _)| *e).collect();
            (n, edges)
        })
    })
}
