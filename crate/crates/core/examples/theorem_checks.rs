//! Structural predictions of Scarfness next to the homological oracle.

use scarfness::graph::named;
use scarfness::scarf::is_scarf;
use scarfness::theorems::{
    predict_cover_scarf, predict_cover_scarf_bipartite, predict_cover_scarf_chordal,
    predict_ordinary_scarf, predict_sqfree_scarf, predict_symbolic_scarf, Prediction,
};
use scarfness::{EngineConfig, FieldSpec, MonomialIdeal, Result, SimpleGraph};

fn line(what: &str, p: Prediction, ideal: &MonomialIdeal) -> Result<()> {
    let oracle = is_scarf(ideal, FieldSpec::Rationals, &EngineConfig::default())?;
    let witness = p.witness.map(|w| w.to_string()).unwrap_or_default();
    println!("{what:<28} predicted {:<5} oracle {oracle:<5} {witness}", p.scarf);
    Ok(())
}

fn main() -> Result<()> {
    let spider = SimpleGraph::from_named_edges(&[
        ("x1", "x2"), ("x2", "x3"), ("x3", "y1"), ("x3", "y2"),
    ])?;
    line("spider, sqfree n=2", predict_sqfree_scarf(&spider, 2)?, &spider.squarefree_power(2)?)?;
    let p5 = named::path(5);
    line("P5, sqfree n=2", predict_sqfree_scarf(&p5, 2)?, &p5.squarefree_power(2)?)?;

    let t = named::triangle();
    for n in 2..=5 {
        line(&format!("triangle, symbolic n={n}"), predict_symbolic_scarf(&t, n)?, &t.symbolic_power(n)?)?;
    }
    let two_edges = named::matching(2);
    line("2K2, ordinary n=2", predict_ordinary_scarf(&two_edges, 2)?, &two_edges.ordinary_power(2)?)?;

    for (name, g) in [("P4", named::path(4)), ("C4", named::cycle(4)), ("P5", named::path(5))] {
        line(&format!("{name}, cover"), predict_cover_scarf(&g)?, &g.cover_ideal())?;
        if g.is_chordal() {
            line(&format!("{name}, cover (chordal)"), predict_cover_scarf_chordal(&g)?, &g.cover_ideal())?;
        }
        line(&format!("{name}, cover (bipartite)"), predict_cover_scarf_bipartite(&g)?, &g.cover_ideal())?;
    }
    Ok(())
}
