//! Ideals attached to a graph, read as graph6 or as an edge list.
//!
//! Usage: `cargo run --example graph_ideals -- 'CR'`

use scarfness::catalog::parse_graph6;
use scarfness::graph::named;
use scarfness::{Result, SimpleGraph};

fn show(g: &SimpleGraph) -> Result<()> {
    print!("{}", g.to_edge_list());
    println!("  edge ideal        {}", g.edge_ideal());
    println!("  cover ideal       {}", g.cover_ideal());
    println!("  matching number   {}", g.matching_number());
    for n in 2..=3 {
        println!("  squarefree ^[{n}]   {}", g.squarefree_power(n)?);
        println!("  symbolic ^({n})    {} generators", g.symbolic_power(n)?.len());
        println!("  ordinary ^{n}      {} generators", g.ordinary_power(n)?.len());
    }
    println!(
        "  chordal {} co-chordal {} bipartite {} ferrers {}",
        g.is_chordal(),
        g.is_co_chordal(),
        g.is_bipartite(),
        g.is_ferrers()
    );
    Ok(())
}

fn main() -> Result<()> {
    if let Some(arg) = std::env::args().nth(1) {
        return show(&parse_graph6(arg.as_bytes())?);
    }
    let p4 = SimpleGraph::parse_edge_list("a b c d\na b\nb c\nc d\n")?;
    show(&p4)?;
    show(&named::triangle())
}
