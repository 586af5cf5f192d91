use super::{bits, SimpleGraph, VertexMask};

/// A Ferrers labelling: `x_side` ordered by increasing neighbourhood (the
/// last one sees all of `y_side`), `y_side` ordered by decreasing
/// neighbourhood (the first one sees all of `x_side`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FerrersChain {
    pub x_side: Vec<usize>,
    pub y_side: Vec<usize>,
    neighborhoods_of_y: Vec<VertexMask>,
}

impl FerrersChain {
    fn y_mask(&self, upto: usize) -> VertexMask {
        self.y_side[..upto].iter().fold(0, |m, &y| m | 1 << y)
    }

    /// `N(y1), {y1} ∪ N(y2), ..., {y1..y(m-1)} ∪ N(ym), Y`.
    pub fn cover_candidates(&self) -> Vec<VertexMask> {
        let m = self.y_side.len();
        let mut out: Vec<VertexMask> = (0..m)
            .map(|t| self.y_mask(t) | self.neighborhoods_of_y[t])
            .collect();
        out.push(self.y_mask(m));
        out
    }

    /// The candidates taken only at the indices where the neighbourhood chain
    /// of `y_side` strictly drops, plus `X` and `Y`.
    pub fn strict_step_covers(&self) -> Vec<VertexMask> {
        let m = self.y_side.len();
        let mut out = vec![self.neighborhoods_of_y[0]];
        for k in 1..m {
            if self.neighborhoods_of_y[k] != self.neighborhoods_of_y[k - 1] {
                out.push(self.y_mask(k) | self.neighborhoods_of_y[k]);
            }
        }
        out.push(self.y_mask(m));
        out
    }
}

impl SimpleGraph {
    /// A Ferrers labelling, trying both sides of the bipartition.
    pub fn ferrers_chain(&self) -> Option<FerrersChain> {
        if self.num_edges() == 0 || self.has_isolated_vertices() || !self.is_connected() {
            return None;
        }
        let ones = self.two_coloring()?;
        let zeros = self.all_vertices() & !ones;
        [(zeros, ones), (ones, zeros)]
            .into_iter()
            .find_map(|(x, y)| self.chain_for(x, y))
    }

    fn chain_for(&self, x: VertexMask, y: VertexMask) -> Option<FerrersChain> {
        let mut xs: Vec<usize> = bits(x).collect();
        xs.sort_by_key(|&v| (self.degree(v), v));
        let nested = xs
            .windows(2)
            .all(|w| self.neighbors(w[0]) & !self.neighbors(w[1]) == 0);
        if !nested || self.neighbors(*xs.last()?) != y {
            return None;
        }
        let mut ys: Vec<usize> = bits(y).collect();
        ys.sort_by_key(|&v| (std::cmp::Reverse(self.degree(v)), v));
        let neighborhoods_of_y = ys.iter().map(|&v| self.neighbors(v)).collect();
        Some(FerrersChain {
            x_side: xs,
            y_side: ys,
            neighborhoods_of_y,
        })
    }

    pub fn is_ferrers(&self) -> bool {
        self.ferrers_chain().is_some()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::covers::tests::brute_minimal_covers;
    use crate::graph::named;

    fn minimal_elements(mut sets: Vec<VertexMask>) -> Vec<VertexMask> {
        sets.sort_unstable();
        sets.dedup();
        let mut out: Vec<VertexMask> = sets
            .iter()
            .copied()
            .filter(|&s| !sets.iter().any(|&t| t != s && t & s == t))
            .collect();
        out.sort_unstable();
        out
    }

    #[test]
    fn examples() {
        assert!(named::cycle(4).is_ferrers());
        let g = SimpleGraph::from_named_edges(&[("x1", "y2"), ("x2", "y1"), ("x2", "y2")]).unwrap();
        assert!(g.is_ferrers());
        // a-b-c-d: X = {a, c} with N(a) = {b} ⊂ N(c) = {b, d} = Y.
        assert!(named::path(4).is_ferrers());
        assert!(!named::matching(2).is_ferrers());
        assert!(!named::path(6).is_ferrers());
        assert!(!named::triangle().is_ferrers());
        assert!(named::star(3).is_ferrers());
    }

    #[test]
    fn cover_formulas_match_enumeration() {
        let graphs = [
            named::cycle(4),
            named::path(4),
            named::path(3),
            named::star(4),
            SimpleGraph::from_named_edges(&[("x1", "y2"), ("x2", "y1"), ("x2", "y2")]).unwrap(),
            SimpleGraph::from_named_edges(&[
                ("a", "p"), ("b", "p"), ("b", "q"), ("c", "p"), ("c", "q"), ("c", "r"), ("d", "p"),
            ])
            .unwrap(),
        ];
        for g in graphs {
            let chain = g.ferrers_chain().expect("Ferrers");
            let covers = brute_minimal_covers(&g);
            assert_eq!(minimal_elements(chain.cover_candidates()), covers, "{g:?}");
            let mut strict = chain.strict_step_covers();
            strict.sort_unstable();
            assert_eq!(strict, covers, "{g:?}");
        }
    }
}
