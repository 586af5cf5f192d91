//! A small catalog sweep. The full sweep lives behind `scarfness verify`.

use scarfness::catalog::{enumerate_graphs, to_graph6};
use scarfness::verify::{run_verification, summarize, Family, RunConfig};
use scarfness::Result;

fn main() -> Result<()> {
    let graphs = enumerate_graphs(4)?;
    println!("{} graphs on at most 4 vertices without isolated vertices:", graphs.len());
    for g in &graphs {
        print!(" {}", to_graph6(g)?);
    }
    println!();

    let cfg = RunConfig {
        max_vertices: Some(5),
        families: vec![Family::Sqfree, Family::Cover],
        parallelism: 4,
        ..RunConfig::default()
    };
    let run = run_verification(&cfg)?;
    for r in run.records.iter().filter(|r| r.oracle).take(8) {
        let n = r.n.map(|n| format!("n={n}")).unwrap_or_default();
        println!("{:>8} {:<7} {n} scarf", r.graph_id, r.family.as_str());
    }
    let s = summarize(&run.records);
    println!("{} rows, {} disagreements", s.total, s.disagreements);
    Ok(())
}
