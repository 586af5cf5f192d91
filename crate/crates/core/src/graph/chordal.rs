use super::{bits, SimpleGraph};

impl SimpleGraph {
    /// Maximum cardinality search. Returns vertices in visiting order; its
    /// reverse is a perfect elimination ordering iff the graph is chordal.
    pub fn maximum_cardinality_search(&self) -> Vec<usize> {
        let n = self.num_vertices();
        let mut weight = vec![0usize; n];
        let mut visited = 0u64;
        let mut order = Vec::with_capacity(n);
        for _ in 0..n {
            let v = (0..n)
                .filter(|&v| visited >> v & 1 == 0)
                .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
                .expect("unvisited vertex remains");
            visited |= 1 << v;
            order.push(v);
            for u in bits(self.neighbors(v) & !visited) {
                weight[u] += 1;
            }
        }
        order
    }

    /// Whether `order` is a perfect elimination ordering: for each vertex,
    /// its neighbours later in the order form a clique.
    pub fn is_perfect_elimination_ordering(&self, order: &[usize]) -> bool {
        let mut later = self.all_vertices();
        for &v in order {
            later &= !(1 << v);
            if !self.is_clique(self.neighbors(v) & later) {
                return false;
            }
        }
        true
    }

    pub fn is_chordal(&self) -> bool {
        let mut peo = self.maximum_cardinality_search();
        peo.reverse();
        self.is_perfect_elimination_ordering(&peo)
    }

    pub fn is_co_chordal(&self) -> bool {
        self.complement().is_chordal()
    }
}
