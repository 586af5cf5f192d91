//! Reduced homology of simplicial complexes over Q and GF(p).

use scarfness::{FieldSpec, Result, SimplicialComplex};

fn report(name: &str, k: &SimplicialComplex) -> Result<()> {
    println!(
        "{name:>16}: dim {} chi~ {} Q {:?} GF(2) {:?} acyclic {}",
        k.dim(),
        k.reduced_euler_characteristic(),
        k.reduced_homology_ranks(FieldSpec::Rationals)?,
        k.reduced_homology_ranks(FieldSpec::GF2)?,
        k.is_acyclic(FieldSpec::Rationals)?,
    );
    Ok(())
}

fn main() -> Result<()> {
    report("path", &SimplicialComplex::from_facets([vec![0, 1], vec![1, 2]]))?;
    report("hollow triangle", &SimplicialComplex::from_facets([vec![0, 1], vec![0, 2], vec![1, 2]]))?;
    report("full triangle", &SimplicialComplex::from_facets([vec![0, 1, 2]]))?;
    report("two points", &SimplicialComplex::from_facets([vec![0], vec![1]]))?;

    // Six-vertex projective plane: torsion shows up only in characteristic 2.
    let rp2 = [
        [0, 1, 3], [0, 1, 5], [0, 2, 4], [0, 2, 5], [0, 3, 4],
        [1, 2, 3], [1, 2, 4], [1, 4, 5], [2, 3, 5], [3, 4, 5],
    ];
    report("RP^2", &SimplicialComplex::from_facets(rp2.iter().map(|f| f.to_vec())))
}
