//! Purely graph-theoretic predictions of Scarfness.
//!
//! Each predicate reads only the graph; none of them touches the Scarf
//! complex. They are meant to be compared against [`crate::scarf::is_scarf`].
//! Precondition failures are errors, never `false`: `false` is an answer.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{named, SimpleGraph, VertexMask};

/// Why a predicate said yes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// The whole graph is a perfect matching of size `n`.
    PerfectMatching { matching: Vec<(String, String)> },
    /// Leaves `leaves` hang off `joint`; the remaining vertices carry
    /// a perfect matching.
    LeavesAtJoint {
        joint: String,
        leaves: Vec<String>,
        matching: Vec<(String, String)>,
    },
    /// The graph is one of the listed shapes.
    Shape { name: &'static str },
    /// Co-chordal with this many Scarf cover pairs out of the needed `needed`.
    CoverPairs { pairs: usize, needed: usize },
    /// Clique/independent split.
    SplitPartition { clique: Vec<String>, independent: Vec<String> },
    /// Ferrers labelling.
    FerrersChain { x_side: Vec<String>, y_side: Vec<String> },
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pairs = |m: &[(String, String)]| {
            m.iter()
                .map(|(a, b)| format!("{a}{b}"))
                .collect::<Vec<_>>()
                .join(", ")
        };
        match self {
            Witness::PerfectMatching { matching } => {
                write!(f, "perfect matching {{{}}}", pairs(matching))
            }
            Witness::LeavesAtJoint {
                joint,
                leaves,
                matching,
            } => write!(
                f,
                "leaves {{{}}} at joint {joint}, matching {{{}}}",
                leaves.join(", "),
                pairs(matching)
            ),
            Witness::Shape { name } => write!(f, "graph is {name}"),
            Witness::CoverPairs { pairs, needed } => {
                write!(f, "co-chordal, {pairs} Scarf cover pairs (need {needed})")
            }
            Witness::SplitPartition {
                clique,
                independent,
            } => write!(
                f,
                "clique {{{}}}, independent {{{}}}",
                clique.join(", "),
                independent.join(", ")
            ),
            Witness::FerrersChain { x_side, y_side } => write!(
                f,
                "Ferrers X = ({}), Y = ({})",
                x_side.join(", "),
                y_side.join(", ")
            ),
        }
    }
}

/// A predicted verdict with its witness (present whenever the verdict is yes).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Prediction {
    pub scarf: bool,
    pub witness: Option<Witness>,
}

impl Prediction {
    fn yes(witness: Witness) -> Self {
        Self {
            scarf: true,
            witness: Some(witness),
        }
    }

    fn no() -> Self {
        Self {
            scarf: false,
            witness: None,
        }
    }
}

/// A prediction set against the oracle's answer.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScarfVerdict {
    pub predicted: bool,
    pub oracle: bool,
    pub witness: Option<Witness>,
}

impl ScarfVerdict {
    pub fn new(prediction: Prediction, oracle: bool) -> Self {
        Self {
            predicted: prediction.scarf,
            oracle,
            witness: prediction.witness,
        }
    }

    pub fn agrees(&self) -> bool {
        self.predicted == self.oracle
    }
}

fn names(g: &SimpleGraph, mask: VertexMask) -> Vec<String> {
    crate::graph::bits(mask).map(|v| g.name(v).to_string()).collect()
}

fn named_pairs(g: &SimpleGraph, m: &[(usize, usize)]) -> Vec<(String, String)> {
    m.iter()
        .map(|&(u, v)| (g.name(u).to_string(), g.name(v).to_string()))
        .collect()
}

/// Squarefree powers, `2 ≤ n ≤ m(G)`: Scarf iff `G` has a perfect matching
/// of size `n`, or some vertex `v` has a set `L` of leaves with
/// `|L| = |V| - 2n + 1 ≥ 2` such that the rest of the graph, without `v`
/// and `L`, has a perfect matching of size `n - 1`.
pub fn predict_sqfree_scarf(g: &SimpleGraph, n: usize) -> Result<Prediction> {
    g.require_no_isolated_vertices()?;
    let mg = g.matching_number();
    if n < 2 || n > mg {
        return Err(Error::Precondition(format!(
            "need 2 <= n <= m(G) = {mg}, got n = {n}"
        )));
    }
    let nv = g.num_vertices();
    if nv == 2 * n {
        if let Some(m) = g.matchings_of_size(n).into_iter().next() {
            return Ok(Prediction::yes(Witness::PerfectMatching {
                matching: named_pairs(g, &m),
            }));
        }
    }
    if nv < 2 * n + 1 {
        return Ok(Prediction::no());
    }
    // The leaves together with v and the n-1 matched edges use every vertex.
    let leaf_count = nv + 1 - 2 * n;
    for v in 0..nv {
        let pool: Vec<usize> = crate::graph::bits(g.leaves_with_joint(v)).collect();
        if pool.len() < leaf_count {
            continue;
        }
        for chosen in subsets_of_size(&pool, leaf_count) {
            let rest = g.induced_by_mask(g.all_vertices() & !(chosen | 1 << v));
            if let Some(m) = rest.matchings_of_size(n - 1).into_iter().next() {
                return Ok(Prediction::yes(Witness::LeavesAtJoint {
                    joint: g.name(v).to_string(),
                    leaves: names(g, chosen),
                    matching: named_pairs(&rest, &m),
                }));
            }
        }
    }
    Ok(Prediction::no())
}

fn subsets_of_size(pool: &[usize], k: usize) -> Vec<VertexMask> {
    let mut out = Vec::new();
    fn rec(pool: &[usize], k: usize, from: usize, acc: VertexMask, out: &mut Vec<VertexMask>) {
        if k == 0 {
            out.push(acc);
            return;
        }
        for i in from..pool.len() {
            if pool.len() - i < k {
                break;
            }
            rec(pool, k - 1, i + 1, acc | 1 << pool[i], out);
        }
    }
    rec(pool, k, 0, 0, &mut out);
    out
}

fn require_power_at_least_two(g: &SimpleGraph, n: usize) -> Result<()> {
    g.require_no_isolated_vertices()?;
    if g.num_edges() == 0 {
        return Err(Error::EdgelessGraph);
    }
    if n < 2 {
        return Err(Error::Precondition(format!("need n >= 2, got {n}")));
    }
    Ok(())
}

fn shape_of(g: &SimpleGraph, triangle_allowed: bool) -> Option<&'static str> {
    let shapes: [(&'static str, SimpleGraph); 4] = [
        ("an edge", named::path(2)),
        ("a path of length 2", named::path(3)),
        ("two disjoint edges", named::matching(2)),
        ("a triangle", named::triangle()),
    ];
    shapes
        .into_iter()
        .filter(|(name, _)| triangle_allowed || *name != "a triangle")
        .find(|(_, h)| g.is_isomorphic(h))
        .map(|(name, _)| name)
}

/// Symbolic powers, `n ≥ 2`: Scarf iff `G` is an edge, a path of length 2,
/// two disjoint edges, or a triangle with `n` even.
pub fn predict_symbolic_scarf(g: &SimpleGraph, n: usize) -> Result<Prediction> {
    require_power_at_least_two(g, n)?;
    Ok(match shape_of(g, n.is_multiple_of(2)) {
        Some(name) => Prediction::yes(Witness::Shape { name }),
        None => Prediction::no(),
    })
}

/// Ordinary powers, `n ≥ 2`: Scarf iff `G` is an edge, a path of length 2,
/// or two disjoint edges.
pub fn predict_ordinary_scarf(g: &SimpleGraph, n: usize) -> Result<Prediction> {
    require_power_at_least_two(g, n)?;
    Ok(match shape_of(g, false) {
        Some(name) => Prediction::yes(Witness::Shape { name }),
        None => Prediction::no(),
    })
}

/// Unordered pairs of distinct minimal covers whose union contains no third
/// minimal cover.
pub fn scarf_cover_pairs(g: &SimpleGraph) -> Vec<(VertexMask, VertexMask)> {
    let covers = g.minimal_vertex_covers();
    let mut out = Vec::new();
    for (i, &a) in covers.iter().enumerate() {
        for &b in &covers[i + 1..] {
            let union = a | b;
            let third = covers
                .iter()
                .any(|&c| c != a && c != b && c & union == c);
            if !third {
                out.push((a, b));
            }
        }
    }
    out
}

pub fn count_scarf_cover_pairs(g: &SimpleGraph) -> Result<usize> {
    g.require_no_isolated_vertices()?;
    Ok(scarf_cover_pairs(g).len())
}

/// Cover ideals: Scarf iff `G` is co-chordal and has at least `μ(J(G)) - 1`
/// Scarf cover pairs.
pub fn predict_cover_scarf(g: &SimpleGraph) -> Result<Prediction> {
    let pairs = count_scarf_cover_pairs(g)?;
    let needed = g.minimal_vertex_covers().len().saturating_sub(1);
    if g.is_co_chordal() && pairs >= needed {
        Ok(Prediction::yes(Witness::CoverPairs { pairs, needed }))
    } else {
        Ok(Prediction::no())
    }
}

/// Chordal graphs: `J(G)` is Scarf iff the vertices split into a clique `A`
/// and an independent set `B` such that each vertex of `A` has a neighbour
/// in `B` and the traces `N(x) ∩ B` for `x ∈ A` are pairwise incomparable.
pub fn predict_cover_scarf_chordal(g: &SimpleGraph) -> Result<Prediction> {
    g.require_no_isolated_vertices()?;
    if !g.is_chordal() {
        return Err(Error::Precondition("graph is not chordal".into()));
    }
    let all = g.all_vertices();
    for a in 0..=all {
        if a & !all != 0 || !g.is_clique(a) {
            continue;
        }
        let b = all & !a;
        if !g.is_independent(b) {
            continue;
        }
        let traces: Vec<VertexMask> = crate::graph::bits(a).map(|x| g.neighbors(x) & b).collect();
        if traces.contains(&0) {
            continue;
        }
        let incomparable = traces.iter().enumerate().all(|(i, &s)| {
            traces
                .iter()
                .enumerate()
                .all(|(j, &t)| i == j || (s & !t != 0 && t & !s != 0))
        });
        if incomparable {
            return Ok(Prediction::yes(Witness::SplitPartition {
                clique: names(g, a),
                independent: names(g, b),
            }));
        }
    }
    Ok(Prediction::no())
}

/// Bipartite graphs: `J(G)` is Scarf iff `G` is a Ferrers graph.
pub fn predict_cover_scarf_bipartite(g: &SimpleGraph) -> Result<Prediction> {
    g.require_no_isolated_vertices()?;
    if !g.is_bipartite() {
        return Err(Error::Precondition("graph is not bipartite".into()));
    }
    Ok(match g.ferrers_chain() {
        Some(chain) => Prediction::yes(Witness::FerrersChain {
            x_side: chain.x_side.iter().map(|&v| g.name(v).to_string()).collect(),
            y_side: chain.y_side.iter().map(|&v| g.name(v).to_string()).collect(),
        }),
        None => Prediction::no(),
    })
}
