use super::{bits, SimpleGraph, VertexMask};
use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal};

impl SimpleGraph {
    /// Squarefree monomial on a vertex mask.
    pub fn monomial_of(&self, mask: VertexMask) -> Monomial {
        Monomial::squarefree(bits(mask), self.num_vertices())
    }

    /// Product of all vertices.
    pub fn vertex_product(&self) -> Monomial {
        self.monomial_of(self.all_vertices())
    }

    /// `I(G) = (xy : {x, y} ∈ E(G))`.
    pub fn edge_ideal(&self) -> MonomialIdeal {
        let gens = self
            .edges()
            .into_iter()
            .map(|(u, v)| self.monomial_of(1 << u | 1 << v))
            .collect();
        MonomialIdeal::new(self.vars().clone(), gens).expect("same variables")
    }

    /// `I(G)^[n]`: products of the matchings of size `n`.
    pub fn squarefree_power(&self, n: usize) -> Result<MonomialIdeal> {
        if n == 0 {
            return Err(Error::NonPositivePower);
        }
        let gens = self
            .matchings_of_size(n)
            .into_iter()
            .map(|m| self.monomial_of(m.iter().fold(0, |acc, &(u, v)| acc | 1 << u | 1 << v)))
            .collect();
        MonomialIdeal::new(self.vars().clone(), gens)
    }

    /// `I(G)^n`.
    pub fn ordinary_power(&self, n: usize) -> Result<MonomialIdeal> {
        self.edge_ideal().power(n as u32)
    }

    /// `J(G)`: one generator per minimal vertex cover.
    pub fn cover_ideal(&self) -> MonomialIdeal {
        let gens = self
            .minimal_vertex_covers()
            .into_iter()
            .map(|c| self.monomial_of(c))
            .collect();
        MonomialIdeal::new(self.vars().clone(), gens).expect("same variables")
    }

    /// `I(G)^(n)`: intersection of `p_C^n` over the minimal vertex covers `C`,
    /// folded in cover order.
    pub fn symbolic_power(&self, n: usize) -> Result<MonomialIdeal> {
        if n == 0 {
            return Err(Error::NonPositivePower);
        }
        if self.num_edges() == 0 {
            return Err(Error::EdgelessGraph);
        }
        let mut acc: Option<MonomialIdeal> = None;
        for cover in self.minimal_vertex_covers() {
            let subset: Vec<usize> = bits(cover).collect();
            let prime_power = MonomialIdeal::variable_power(self.vars().clone(), &subset, n as u32)?;
            acc = Some(match acc {
                None => prime_power,
                Some(a) => a.intersect(&prime_power)?,
            });
        }
        Ok(acc.expect("a graph with an edge has a cover"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    fn ideal(g: &SimpleGraph, s: &str) -> MonomialIdeal {
        MonomialIdeal::parse(s, g.vars()).unwrap()
    }

    #[test]
    fn edge_ideals() {
        let t = named::triangle();
        assert_eq!(t.edge_ideal(), ideal(&t, "(x1*x2, x1*x3, x2*x3)"));
        let e = named::path(2);
        assert_eq!(e.edge_ideal(), ideal(&e, "(x1*x2)"));
        let p = SimpleGraph::from_named_edges(&[("a", "b"), ("b", "c")]).unwrap();
        assert_eq!(p.edge_ideal(), ideal(&p, "(a*b, b*c)"));
    }

    #[test]
    fn squarefree_powers() {
        let p5 = named::path(5);
        assert_eq!(
            p5.squarefree_power(2).unwrap(),
            ideal(&p5, "(x1*x2*x3*x4, x1*x2*x4*x5, x2*x3*x4*x5)")
        );
        assert_eq!(p5.squarefree_power(1).unwrap(), p5.edge_ideal());
        assert!(p5.squarefree_power(3).unwrap().is_zero());
        let g = SimpleGraph::from_named_edges(&[("x1", "x2"), ("x3", "x4"), ("x3", "y1")]).unwrap();
        assert_eq!(
            g.squarefree_power(2).unwrap(),
            ideal(&g, "(x1*x2*x3*x4, x1*x2*x3*y1)")
        );
    }

    #[test]
    fn squarefree_power_is_restricted_ordinary_power() {
        for g in [named::path(5), named::complete(5), named::cycle(6), named::paw()] {
            for n in 1..=3 {
                let via_power = g
                    .ordinary_power(n)
                    .unwrap()
                    .restrict(&g.vertex_product())
                    .unwrap();
                assert_eq!(g.squarefree_power(n).unwrap(), via_power);
            }
        }
    }

    #[test]
    fn cover_ideals() {
        let p = SimpleGraph::from_named_edges(&[("a", "b"), ("b", "c")]).unwrap();
        assert_eq!(p.cover_ideal(), ideal(&p, "(b, a*c)"));
        let c4 = SimpleGraph::from_named_edges(&[("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")]).unwrap();
        assert_eq!(c4.cover_ideal(), ideal(&c4, "(a*c, b*d)"));
        let f = SimpleGraph::from_named_edges(&[("x1", "y2"), ("x2", "y1"), ("x2", "y2")]).unwrap();
        assert_eq!(f.cover_ideal(), ideal(&f, "(x1*x2, x2*y2, y1*y2)"));
    }

    #[test]
    fn symbolic_powers() {
        let t = named::triangle();
        assert_eq!(
            t.symbolic_power(2).unwrap(),
            ideal(&t, "(x1^2*x2^2, x1^2*x3^2, x2^2*x3^2, x1*x2*x3)")
        );
        assert_eq!(t.symbolic_power(1).unwrap(), t.edge_ideal());
        for g in [named::path(4), named::cycle(4), named::star(3)] {
            for n in 1..=3 {
                assert_eq!(g.symbolic_power(n).unwrap(), g.ordinary_power(n).unwrap());
            }
        }
        assert_ne!(t.symbolic_power(2).unwrap(), t.ordinary_power(2).unwrap());
        let edgeless = SimpleGraph::indexed("x", 2, &[]).unwrap();
        assert_eq!(edgeless.symbolic_power(2), Err(Error::EdgelessGraph));
    }
}
