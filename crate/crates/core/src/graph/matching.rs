use super::{SimpleGraph, VertexMask};

impl SimpleGraph {
    /// All sets of `n` pairwise disjoint edges, by backtracking over the
    /// lexicographically ordered edge list. Each matching is a list of edge
    /// indices into [`SimpleGraph::edges`].
    pub fn matchings_of_size(&self, n: usize) -> Vec<Vec<(usize, usize)>> {
        let edges = self.edges();
        let mut out = Vec::new();
        let mut chosen = Vec::with_capacity(n);
        collect(&edges, 0, 0, n, &mut chosen, &mut out);
        out
    }

    pub fn matching_number(&self) -> usize {
        let edges = self.edges();
        let mut best = 0;
        max_matching(&edges, 0, 0, 0, &mut best);
        best
    }

    /// `|V| = 2n` and a matching of size `n` exists.
    pub fn has_perfect_matching_of_size(&self, n: usize) -> bool {
        self.num_vertices() == 2 * n && !self.matchings_of_size(n).is_empty()
    }
}

fn collect(
    edges: &[(usize, usize)],
    from: usize,
    used: VertexMask,
    n: usize,
    chosen: &mut Vec<(usize, usize)>,
    out: &mut Vec<Vec<(usize, usize)>>,
) {
    if chosen.len() == n {
        out.push(chosen.clone());
        return;
    }
    for (i, &(u, v)) in edges.iter().enumerate().skip(from) {
        if edges.len() - i < n - chosen.len() {
            break;
        }
        if used & (1 << u | 1 << v) != 0 {
            continue;
        }
        chosen.push((u, v));
        collect(edges, i + 1, used | 1 << u | 1 << v, n, chosen, out);
        chosen.pop();
    }
}

fn max_matching(edges: &[(usize, usize)], from: usize, used: VertexMask, size: usize, best: &mut usize) {
    *best = (*best).max(size);
    for (i, &(u, v)) in edges.iter().enumerate().skip(from) {
        if used & (1 << u | 1 << v) == 0 {
            max_matching(edges, i + 1, used | 1 << u | 1 << v, size + 1, best);
        }
    }
}
