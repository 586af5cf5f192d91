//! Monomial arithmetic and ideal operations on a fixed variable set.

use scarfness::{Monomial, MonomialIdeal, Result, VariableSet};

fn main() -> Result<()> {
    let vars = VariableSet::new(["x", "y", "z"])?;
    let a = Monomial::parse("x^2*y", &vars)?;
    let b = Monomial::parse("y^3*z", &vars)?;
    println!("lcm = {}", a.lcm(&b)?.display(&vars));
    println!("gcd = {}", a.gcd(&b)?.display(&vars));

    // Non-minimal input is minimalized: x*y*z is dropped because x*y divides it.
    let i = MonomialIdeal::parse("(x*y, y*z, x*y*z, x^2)", &vars)?;
    let j = MonomialIdeal::parse("(x, z^2)", &vars)?;
    println!("I = {i}");
    println!("I ∩ J = {}", i.intersect(&j)?);
    println!("I * J = {}", i.product(&j)?);
    println!("I^2 = {}", i.power(2)?);

    let m = Monomial::parse("x^2*y", &vars)?;
    println!("I restricted to {} = {}", m.display(&vars), i.restrict(&m)?);
    println!("x^2*y*z in I: {}", i.contains(&Monomial::parse("x^2*y*z", &vars)?)?);

    // Variables are inferred in order of appearance.
    let k = MonomialIdeal::parse_infer("(b*c, a*c, b*d)")?;
    println!("{k} over {:?}", k.vars().names());
    Ok(())
}
