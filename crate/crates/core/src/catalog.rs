//! graph6 encoding and an exhaustive catalog of small graphs up to isomorphism.
//!
//! graph6 here is the single-byte-header form (at most 62 vertices): one byte
//! `n + 63`, then the upper triangle of the adjacency matrix in column order
//! `x(0,1), x(0,2), x(1,2), x(0,3), ...`, six bits per byte, most significant
//! bit first, each byte offset by 63, zero padded.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{SimpleGraph, VertexMask};

/// Largest vertex count the catalog will enumerate.
pub const CATALOG_MAX_VERTICES: usize = 8;

/// Largest vertex count with a canonical form (the key must fit in 64 bits).
pub const CANONICAL_MAX_VERTICES: usize = 11;

fn g6_err(msg: impl Into<String>) -> Error {
    Error::Graph6(msg.into())
}

pub fn parse_graph6(line: &[u8]) -> Result<SimpleGraph> {
    let line = line.trim_ascii_end();
    let (&header, body) = line.split_first().ok_or_else(|| g6_err("empty input"))?;
    if let Some(&bad) = line.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(g6_err(format!("byte {bad} outside 63..=126")));
    }
    if header == 126 {
        return Err(g6_err("multi-byte headers (n > 62) are not supported"));
    }
    let n = (header - 63) as usize;
    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = nbits.div_ceil(6);
    if body.len() < nbytes {
        return Err(g6_err(format!(
            "truncated payload: {} of {nbytes} bytes",
            body.len()
        )));
    }
    if body.len() > nbytes {
        return Err(g6_err("trailing bytes after payload"));
    }
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    if (nbits..nbytes * 6).any(bit) {
        return Err(g6_err("nonzero padding bits"));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    SimpleGraph::indexed("x", n, &edges)
}

pub fn to_graph6(g: &SimpleGraph) -> Result<String> {
    let n = g.num_vertices();
    if n > 62 {
        return Err(g6_err("more than 62 vertices"));
    }
    let mut bits = Vec::with_capacity(n * n / 2);
    for j in 1..n {
        for i in 0..j {
            bits.push(g.has_edge(i, j));
        }
    }
    let mut out = String::with_capacity(1 + bits.len().div_ceil(6));
    out.push((n as u8 + 63) as char);
    for chunk in bits.chunks(6) {
        let v = chunk
            .iter()
            .enumerate()
            .fold(0u8, |acc, (k, &b)| acc | (b as u8) << (5 - k));
        out.push((v + 63) as char);
    }
    Ok(out)
}

/// Adjacency bits in graph6 order under `pos` (vertex -> new position),
/// first bit most significant.
fn key_under(g: &SimpleGraph, pos: &[usize]) -> u64 {
    let n = g.num_vertices();
    let mut inv = vec![0; n];
    for (v, &p) in pos.iter().enumerate() {
        inv[p] = v;
    }
    let total = n * n.saturating_sub(1) / 2;
    let mut key = 0u64;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if g.has_edge(inv[i], inv[j]) {
                key |= 1 << (total - 1 - k);
            }
            k += 1;
        }
    }
    key
}

/// Colour refinement starting from degrees; colours are ranked by sorted
/// signatures so the result does not depend on the labelling.
fn refined_colors(g: &SimpleGraph) -> Vec<usize> {
    let n = g.num_vertices();
    let mut color: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = crate::graph::bits(g.neighbors(v)).map(|u| color[u]).collect();
                nb.sort_unstable();
                (color[v], nb)
            })
            .collect();
        let mut distinct: Vec<&(usize, Vec<usize>)> = sigs.iter().collect();
        distinct.sort();
        distinct.dedup();
        let next: Vec<usize> = sigs
            .iter()
            .map(|s| distinct.binary_search(&s).expect("present"))
            .collect();
        let classes_before = {
            let mut c = color.clone();
            c.sort_unstable();
            c.dedup();
            c.len()
        };
        let stable = distinct.len() == classes_before;
        color = next;
        if stable {
            return color;
        }
    }
}

/// Canonical relabelling: the lexicographically smallest adjacency string
/// over all orderings that respect the refined colour classes.
pub fn canonical_form(g: &SimpleGraph) -> Result<SimpleGraph> {
    let n = g.num_vertices();
    if n > CANONICAL_MAX_VERTICES {
        return Err(Error::Precondition(format!(
            "canonical forms need at most {CANONICAL_MAX_VERTICES} vertices"
        )));
    }
    let color = refined_colors(g);
    let ncolors = color.iter().max().map_or(0, |&c| c + 1);
    let mut cells: Vec<Vec<usize>> = vec![Vec::new(); ncolors];
    for (v, &c) in color.iter().enumerate() {
        cells[c].push(v);
    }
    let mut pos = vec![usize::MAX; n];
    let mut best: Option<(u64, Vec<usize>)> = None;
    search(g, &cells, 0, 0, &mut pos, &mut best);
    let (_, pos) = best.expect("at least one ordering");
    let mut edges = Vec::new();
    for (u, v) in g.edges() {
        edges.push((pos[u], pos[v]));
    }
    SimpleGraph::indexed("x", n, &edges)
}

fn search(
    g: &SimpleGraph,
    cells: &[Vec<usize>],
    cell: usize,
    next_pos: usize,
    pos: &mut Vec<usize>,
    best: &mut Option<(u64, Vec<usize>)>,
) {
    if cell == cells.len() {
        let key = key_under(g, pos);
        if best.as_ref().is_none_or(|(b, _)| key < *b) {
            *best = Some((key, pos.clone()));
        }
        return;
    }
    let members = &cells[cell];
    let placed = members.iter().filter(|&&v| pos[v] != usize::MAX).count();
    if placed == members.len() {
        search(g, cells, cell + 1, next_pos, pos, best);
        return;
    }
    for &v in members {
        if pos[v] == usize::MAX {
            pos[v] = next_pos;
            search(g, cells, cell, next_pos + 1, pos, best);
            pos[v] = usize::MAX;
        }
    }
}

/// graph6 string of the canonical form; equal exactly for isomorphic graphs.
pub fn canonical_graph6(g: &SimpleGraph) -> Result<String> {
    to_graph6(&canonical_form(g)?)
}

/// Every isomorphism class of graphs with 2..=`max_vertices` vertices and no
/// isolated vertices, in canonical form, ordered by vertex count and then by
/// canonical adjacency string.
pub fn enumerate_graphs(max_vertices: usize) -> Result<Vec<SimpleGraph>> {
    if max_vertices > CATALOG_MAX_VERTICES {
        return Err(Error::Precondition(format!(
            "catalog limited to {CATALOG_MAX_VERTICES} vertices, asked for {max_vertices}"
        )));
    }
    let mut out = Vec::new();
    if max_vertices == 0 {
        return Ok(out);
    }
    // All classes on `n` vertices, isolated vertices included.
    let mut level: BTreeSet<(u64, SimpleGraphKey)> = BTreeSet::new();
    let one = SimpleGraph::indexed("x", 1, &[])?;
    level.insert((0, SimpleGraphKey(one)));
    for n in 2..=max_vertices {
        let mut next = BTreeSet::new();
        for (_, SimpleGraphKey(g)) in &level {
            for nbrs in 0..(1 as VertexMask) << (n - 1) {
                let mut edges = g.edges();
                edges.extend(crate::graph::bits(nbrs).map(|u| (u, n - 1)));
                let h = SimpleGraph::indexed("x", n, &edges)?;
                let c = canonical_form(&h)?;
                let key = key_under(&c, &(0..n).collect::<Vec<_>>());
                next.insert((key, SimpleGraphKey(c)));
            }
        }
        out.extend(
            next.iter()
                .filter(|(_, g)| !g.0.has_isolated_vertices())
                .map(|(_, g)| g.0.clone()),
        );
        level = next;
    }
    Ok(out)
}

/// Orders graphs by their edge lists so they can live in a `BTreeSet`.
#[derive(Clone, PartialEq, Eq)]
struct SimpleGraphKey(SimpleGraph);

impl PartialOrd for SimpleGraphKey {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for SimpleGraphKey {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.0.num_vertices(), self.0.edges()).cmp(&(other.0.num_vertices(), other.0.edges()))
    }
}
