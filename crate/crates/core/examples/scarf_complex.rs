//! Scarf complexes and the resolution test.
//!
//! Usage: `cargo run --example scarf_complex -- "(x^2*y, y*z, x*z)"`

use scarfness::scarf::{is_generic, is_scarf, is_taylor, lcm_lattice, scarf_complex, scarf_obstruction};
use scarfness::{EngineConfig, FieldSpec, MonomialIdeal, Result};

fn show(text: &str) -> Result<()> {
    let cfg = EngineConfig::default();
    let ideal = MonomialIdeal::parse_infer(text)?;
    let delta = scarf_complex(&ideal, &cfg)?;
    println!("{ideal}");
    for face in delta.faces() {
        println!("  {:?} {}", face.members, face.label.display(ideal.vars()));
    }
    println!("  lcm lattice: {} elements", lcm_lattice(&ideal, &cfg)?.len());
    println!(
        "  taylor {} generic {} scarf {}",
        is_taylor(&ideal, &cfg)?,
        is_generic(&ideal),
        is_scarf(&ideal, FieldSpec::Rationals, &cfg)?
    );
    if let Some(m) = scarf_obstruction(&ideal, FieldSpec::Rationals, &cfg)? {
        println!("  not acyclic below {}", m.display(ideal.vars()));
    }
    Ok(())
}

fn main() -> Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    if !args.is_empty() {
        return args.iter().try_for_each(|a| show(a));
    }
    show("(x*y, y*z)")?;
    show("(x^2, x*y, y^2)")?;
    // The edge ideal of a triangle: three isolated Scarf vertices below x*y*z.
    show("(x*y, x*z, y*z)")?;
    show("(x^2*y, y^2*z, z^2*x)")
}
