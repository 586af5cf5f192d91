use super::{bits, SimpleGraph, VertexMask};

/// Maximal independent sets, via Bron–Kerbosch with pivoting on the
/// complement graph. The pivot is the lowest-index vertex of `P ∪ X` with the
/// most non-neighbours in `P`. Output is sorted by mask.
pub fn maximal_independent_sets(g: &SimpleGraph) -> Vec<VertexMask> {
    let n = g.num_vertices();
    let all = g.all_vertices();
    // Neighbourhoods in the complement.
    let co: Vec<VertexMask> = (0..n).map(|v| all & !g.neighbors(v) & !(1 << v)).collect();
    let mut out = Vec::new();
    bron_kerbosch(&co, 0, all, 0, &mut out);
    out.sort_unstable();
    out
}

fn bron_kerbosch(
    adj: &[VertexMask],
    r: VertexMask,
    p: VertexMask,
    x: VertexMask,
    out: &mut Vec<VertexMask>,
) {
    if p == 0 && x == 0 {
        out.push(r);
        return;
    }
    let pivot = bits(p | x)
        .max_by_key(|&u| ((adj[u] & p).count_ones(), std::cmp::Reverse(u)))
        .expect("P ∪ X is non-empty");
    let (mut p, mut x) = (p, x);
    for v in bits(p & !adj[pivot]) {
        bron_kerbosch(adj, r | 1 << v, p & adj[v], x & adj[v], out);
        p &= !(1 << v);
        x |= 1 << v;
    }
}

impl SimpleGraph {
    /// Inclusion-minimal vertex covers: complements of maximal independent
    /// sets, sorted by mask.
    pub fn minimal_vertex_covers(&self) -> Vec<VertexMask> {
        let all = self.all_vertices();
        let mut covers: Vec<VertexMask> = maximal_independent_sets(self)
            .into_iter()
            .map(|s| all & !s)
            .collect();
        covers.sort_unstable();
        covers
    }
}
