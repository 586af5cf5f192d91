//! Monomials and monomial ideals over a fixed, named variable set.
//!
//! Every [`MonomialIdeal`] is kept in minimal-generator form: no generator
//! divides another, and generators are sorted (graded, then lexicographically
//! with the first variable largest). The zero ideal has no generators and the
//! unit ideal is generated by the monomial `1`.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Ordered list of distinct variable names shared by monomials and ideals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VariableSet {
    names: Arc<[String]>,
}

impl VariableSet {
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        for (i, a) in names.iter().enumerate() {
            if names[..i].contains(a) {
                return Err(Error::DuplicateVariable(a.clone()));
            }
        }
        Ok(Self { names: names.into() })
    }

    /// `x1, ..., xn`.
    pub fn indexed(prefix: &str, n: usize) -> Self {
        Self {
            names: (1..=n).map(|i| format!("{prefix}{i}")).collect(),
        }
    }

    #[allow(clippy::len_without_is_empty)] // see `is_zero`
    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, index: usize) -> &str {
        &self.names[index]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    fn same(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.names, &other.names) || self.names == other.names
    }
}

impl fmt::Debug for VariableSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.names.iter()).finish()
    }
}

/// Exponent vector of a monomial. The all-zero vector is the unit monomial.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Box<[u32]>,
}

impl Monomial {
    pub fn new(exps: impl Into<Box<[u32]>>) -> Self {
        Self { exps: exps.into() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::new(vec![0; nvars])
    }

    pub fn var(index: usize, nvars: usize) -> Self {
        let mut e = vec![0; nvars];
        e[index] = 1;
        Self::new(e)
    }

    /// Squarefree monomial on the given variable indices.
    pub fn squarefree(indices: impl IntoIterator<Item = usize>, nvars: usize) -> Self {
        let mut e = vec![0; nvars];
        for i in indices {
            e[i] = 1;
        }
        Self::new(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    /// Indices of variables with positive exponent.
    pub fn support(&self) -> Vec<usize> {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
            .collect()
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.exps.len() == other.exps.len() {
            Ok(())
        } else {
            Err(Error::VariableMismatch)
        }
    }

    pub fn lcm(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.lcm_unchecked(other))
    }

    pub fn gcd(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Self::new(
            self.exps
                .iter()
                .zip(other.exps.iter())
                .map(|(&a, &b)| a.min(b))
                .collect::<Vec<_>>(),
        ))
    }

    /// `self | other`.
    pub fn divides(&self, other: &Self) -> Result<bool> {
        self.check(other)?;
        Ok(self.divides_unchecked(other))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        self.exps
            .iter()
            .zip(other.exps.iter())
            .map(|(&a, &b)| a.checked_add(b).ok_or(Error::ExponentOverflow))
            .collect::<Result<Vec<_>>>()
            .map(Self::new)
    }

    pub fn pow(&self, n: u32) -> Result<Self> {
        self.exps
            .iter()
            .map(|&a| a.checked_mul(n).ok_or(Error::ExponentOverflow))
            .collect::<Result<Vec<_>>>()
            .map(Self::new)
    }

    /// `self / other`, or `None` when `other` does not divide `self`.
    pub fn quotient(&self, other: &Self) -> Result<Option<Self>> {
        self.check(other)?;
        if !other.divides_unchecked(self) {
            return Ok(None);
        }
        Ok(Some(Self::new(
            self.exps
                .iter()
                .zip(other.exps.iter())
                .map(|(&a, &b)| a - b)
                .collect::<Vec<_>>(),
        )))
    }

    pub(crate) fn lcm_unchecked(&self, other: &Self) -> Self {
        Self::new(
            self.exps
                .iter()
                .zip(other.exps.iter())
                .map(|(&a, &b)| a.max(b))
                .collect::<Vec<_>>(),
        )
    }

    pub(crate) fn lcm_assign(&mut self, other: &Self) {
        for (a, &b) in self.exps.iter_mut().zip(other.exps.iter()) {
            if b > *a {
                *a = b;
            }
        }
    }

    pub(crate) fn divides_unchecked(&self, other: &Self) -> bool {
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// Renders the monomial with the given variable names, e.g. `x^2*y`.
    pub fn display<'a>(&'a self, vars: &'a VariableSet) -> impl fmt::Display + 'a {
        MonomialDisplay { mono: self, vars }
    }

    /// Parses `x^2*y*z` or `1` against a variable set.
    pub fn parse(text: &str, vars: &VariableSet) -> Result<Self> {
        let mut exps = vec![0u32; vars.len()];
        for (name, k) in parse_factors(text)? {
            let i = vars
                .index_of(&name)
                .ok_or_else(|| Error::UnknownVariable(name.clone()))?;
            exps[i] = exps[i].checked_add(k).ok_or(Error::ExponentOverflow)?;
        }
        Ok(Self::new(exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    /// Graded, then lexicographic with larger leading exponents first.
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.exps.cmp(&self.exps))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exps)
    }
}

struct MonomialDisplay<'a> {
    mono: &'a Monomial,
    vars: &'a VariableSet,
}

impl fmt::Display for MonomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.mono.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            f.write_str(self.vars.name(i))?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

fn is_ident(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Splits `x^2*y` into `[("x", 2), ("y", 1)]`. `1` yields no factors.
fn parse_factors(text: &str) -> Result<Vec<(String, u32)>> {
    let text = text.trim();
    if text == "1" {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for factor in text.split('*') {
        let factor = factor.trim();
        let (name, k) = match factor.split_once('^') {
            Some((name, k)) => {
                let k: u32 = k
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad exponent in `{factor}`")))?;
                (name.trim(), k)
            }
            None => (factor, 1),
        };
        if !is_ident(name) {
            return Err(Error::Parse(format!("bad variable name `{name}`")));
        }
        out.push((name.to_string(), k));
    }
    Ok(out)
}

fn split_ideal_text(text: &str) -> Result<Vec<&str>> {
    let t = text.trim();
    let inner = t
        .strip_prefix('(')
        .and_then(|s| s.strip_suffix(')'))
        .ok_or_else(|| Error::Parse("ideal must be written as `(m1, m2, ...)`".into()))?;
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    Ok(inner.split(',').map(str::trim).collect())
}

/// Minimal generators: drops duplicates and every monomial divisible by
/// another one in the set.
pub fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort();
    gens.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !kept.iter().any(|k| k.divides_unchecked(&g)) {
            kept.push(g);
        }
    }
    kept.sort();
    kept
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    vars: VariableSet,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Builds an ideal from arbitrary generators, minimalizing them.
    pub fn new(vars: VariableSet, gens: Vec<Monomial>) -> Result<Self> {
        if gens.iter().any(|g| g.nvars() != vars.len()) {
            return Err(Error::VariableMismatch);
        }
        Ok(Self::from_minimal(vars, minimalize(gens)))
    }

    pub(crate) fn from_minimal(vars: VariableSet, gens: Vec<Monomial>) -> Self {
        debug_assert!(gens.windows(2).all(|w| w[0] < w[1]));
        Self { vars, gens }
    }

    pub fn zero(vars: VariableSet) -> Self {
        Self {
            vars,
            gens: Vec::new(),
        }
    }

    pub fn unit(vars: VariableSet) -> Self {
        let one = Monomial::one(vars.len());
        Self {
            vars,
            gens: vec![one],
        }
    }

    /// All monomials of degree `n` supported on `subset`: the minimal
    /// generators of the `n`-th power of the prime generated by `subset`.
    pub fn variable_power(vars: VariableSet, subset: &[usize], n: u32) -> Result<Self> {
        if subset.is_empty() {
            return Err(Error::EmptyVariableSubset);
        }
        if n == 0 {
            return Err(Error::NonPositivePower);
        }
        if let Some(&bad) = subset.iter().find(|&&i| i >= vars.len()) {
            return Err(Error::UnknownVariable(format!("#{bad}")));
        }
        let mut subset = subset.to_vec();
        subset.sort_unstable();
        subset.dedup();
        let mut gens = Vec::new();
        let mut exps = vec![0u32; vars.len()];
        compositions(&subset, 0, n, &mut exps, &mut gens);
        gens.sort();
        Ok(Self::from_minimal(vars, gens))
    }

    /// Parses `(x^2*y, y*z)` against a known variable set.
    pub fn parse(text: &str, vars: &VariableSet) -> Result<Self> {
        let gens = split_ideal_text(text)?
            .into_iter()
            .map(|m| Monomial::parse(m, vars))
            .collect::<Result<Vec<_>>>()?;
        Self::new(vars.clone(), gens)
    }

    /// Parses an ideal, taking variables in order of first appearance.
    pub fn parse_infer(text: &str) -> Result<Self> {
        let mut names: Vec<String> = Vec::new();
        for m in split_ideal_text(text)? {
            for (name, _) in parse_factors(m)? {
                if !names.contains(&name) {
                    names.push(name);
                }
            }
        }
        let vars = VariableSet::new(names)?;
        Self::parse(text, &vars)
    }

    pub fn vars(&self) -> &VariableSet {
        &self.vars
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    /// Number of minimal generators.
    #[allow(clippy::len_without_is_empty)] // `is_zero` is the emptiness test
    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    pub fn contains(&self, m: &Monomial) -> Result<bool> {
        if m.nvars() != self.vars.len() {
            return Err(Error::VariableMismatch);
        }
        Ok(self.gens.iter().any(|g| g.divides_unchecked(m)))
    }

    /// lcm of all generators (`1` for the zero ideal).
    pub fn top_lcm(&self) -> Monomial {
        let mut acc = Monomial::one(self.vars.len());
        for g in &self.gens {
            acc.lcm_assign(g);
        }
        acc
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.vars.same(&other.vars) {
            Ok(())
        } else {
            Err(Error::VariableMismatch)
        }
    }

    fn check_mono(&self, m: &Monomial) -> Result<()> {
        if m.nvars() == self.vars.len() {
            Ok(())
        } else {
            Err(Error::VariableMismatch)
        }
    }

    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.lcm_unchecked(b));
            }
        }
        Ok(Self::from_minimal(self.vars.clone(), minimalize(gens)))
    }

    /// Left fold of [`intersect`](Self::intersect), minimalizing after each step.
    pub fn intersect_all<'a, I>(ideals: I) -> Result<Option<Self>>
    where
        I: IntoIterator<Item = &'a Self>,
    {
        let mut acc: Option<Self> = None;
        for q in ideals {
            acc = Some(match acc {
                None => q.clone(),
                Some(a) => a.intersect(q)?,
            });
        }
        Ok(acc)
    }

    pub fn product(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.mul(b)?);
            }
        }
        Ok(Self::from_minimal(self.vars.clone(), minimalize(gens)))
    }

    pub fn power(&self, n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::NonPositivePower);
        }
        let mut acc = self.clone();
        for _ in 1..n {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    /// The sub-ideal on the generators dividing `m`.
    pub fn restrict(&self, m: &Monomial) -> Result<Self> {
        self.check_mono(m)?;
        let gens = self
            .gens
            .iter()
            .filter(|g| g.divides_unchecked(m))
            .cloned()
            .collect();
        Ok(Self::from_minimal(self.vars.clone(), gens))
    }

    /// `m * self`.
    pub fn scale(&self, m: &Monomial) -> Result<Self> {
        self.check_mono(m)?;
        let mut gens = self
            .gens
            .iter()
            .map(|g| g.mul(m))
            .collect::<Result<Vec<_>>>()?;
        gens.sort();
        Ok(Self::from_minimal(self.vars.clone(), gens))
    }

    /// Index of a generator in the sorted generator list.
    pub fn position(&self, m: &Monomial) -> Option<usize> {
        self.gens.binary_search(m).ok()
    }
}

fn compositions(
    subset: &[usize],
    at: usize,
    remaining: u32,
    exps: &mut Vec<u32>,
    out: &mut Vec<Monomial>,
) {
    let v = subset[at];
    if at + 1 == subset.len() {
        exps[v] = remaining;
        out.push(Monomial::new(exps.clone()));
        exps[v] = 0;
        return;
    }
    for k in 0..=remaining {
        exps[v] = k;
        compositions(subset, at + 1, remaining - k, exps, out);
    }
    exps[v] = 0;
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}", g.display(&self.vars))?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MonomialIdeal{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xyz() -> VariableSet {
        VariableSet::new(["x", "y", "z"]).unwrap()
    }

    fn m(s: &str) -> Monomial {
        Monomial::parse(s, &xyz()).unwrap()
    }

    fn ideal(s: &str) -> MonomialIdeal {
        MonomialIdeal::parse(s, &xyz()).unwrap()
    }

    #[test]
    fn lcm_and_divides() {
        assert_eq!(m("x^2*y").lcm(&m("y^3")).unwrap(), m("x^2*y^3"));
        assert_eq!(m("x*z").lcm(&m("1")).unwrap(), m("x*z"));
        assert_eq!(m("x^2*y^2").lcm(&m("y^2*z^2")).unwrap(), m("x^2*y^2*z^2"));
        assert!(m("x*y").divides(&m("x*y*z")).unwrap());
        assert!(!m("x^2").divides(&m("x*y")).unwrap());
        assert!(m("1").divides(&m("x^3*z")).unwrap());
        assert_eq!(
            m("x").lcm(&Monomial::one(2)),
            Err(Error::VariableMismatch)
        );
    }

    #[test]
    fn minimalize_examples() {
        assert_eq!(ideal("(x, x*y, y)"), ideal("(x, y)"));
        assert_eq!(ideal("(x*y*z)").len(), 1);
        let i = ideal("(x^2*y^2, x^2*z^2, y^2*z^2, x*y*z, x^2*y^2*z)");
        assert_eq!(i, ideal("(x^2*y^2, x^2*z^2, y^2*z^2, x*y*z)"));
        assert_eq!(i.len(), 4);
    }

    #[test]
    fn intersections() {
        assert_eq!(ideal("(x)").intersect(&ideal("(y)")).unwrap(), ideal("(x*y)"));
        assert_eq!(
            ideal("(x, y)").intersect(&ideal("(x, z)")).unwrap(),
            ideal("(x, y*z)")
        );
        let sq = |s: &str| ideal(s).power(2).unwrap();
        let got = MonomialIdeal::intersect_all([&sq("(x,y)"), &sq("(x,z)"), &sq("(y,z)")])
            .unwrap()
            .unwrap();
        assert_eq!(got, ideal("(x^2*y^2, x^2*z^2, y^2*z^2, x*y*z)"));
        let zero = MonomialIdeal::zero(xyz());
        assert!(zero.intersect(&ideal("(x)")).unwrap().is_zero());
    }

    /// Membership oracle: a monomial lies in `I ∩ J` iff it lies in both.
    #[test]
    fn intersection_matches_membership_up_to_degree_two() {
        let vars = xyz();
        let i = ideal("(x, y)");
        let j = ideal("(x, z)");
        let meet = i.intersect(&j).unwrap();
        for a in 0..=2u32 {
            for b in 0..=2 - a {
                for c in 0..=2 - a - b {
                    let mono = Monomial::new(vec![a, b, c]);
                    let both = i.contains(&mono).unwrap() && j.contains(&mono).unwrap();
                    assert_eq!(meet.contains(&mono).unwrap(), both, "{}", mono.display(&vars));
                }
            }
        }
    }

    #[test]
    fn powers() {
        assert_eq!(ideal("(x, y)").power(2).unwrap(), ideal("(x^2, x*y, y^2)"));
        assert_eq!(ideal("(x*y, z)").power(1).unwrap(), ideal("(x*y, z)"));
        let wxyz = VariableSet::new(["w", "x", "y", "z"]).unwrap();
        let i = MonomialIdeal::parse("(w*x, y*z)", &wxyz).unwrap();
        let want = MonomialIdeal::parse("(w^2*x^2, w*x*y*z, y^2*z^2)", &wxyz).unwrap();
        assert_eq!(i.power(2).unwrap(), want);
        assert_eq!(i.power(0), Err(Error::NonPositivePower));
        assert!(MonomialIdeal::zero(xyz()).power(3).unwrap().is_zero());
    }

    #[test]
    fn restriction_and_scaling() {
        let i = ideal("(x*y, x*z, y*z)");
        assert_eq!(i.restrict(&m("x*y*z")).unwrap(), i);
        assert_eq!(i.restrict(&m("x*y")).unwrap(), ideal("(x*y)"));
        assert_eq!(i.restrict(&m("x^5*y^5*z^5")).unwrap(), i);
        assert_eq!(i.scale(&m("1")).unwrap(), i);
        assert_eq!(
            ideal("(x, y)").scale(&m("x*y*z")).unwrap(),
            ideal("(x^2*y*z, x*y^2*z)")
        );
    }

    #[test]
    fn variable_powers() {
        let vars = xyz();
        assert_eq!(
            MonomialIdeal::variable_power(vars.clone(), &[0, 1], 2).unwrap(),
            ideal("(x^2, x*y, y^2)")
        );
        assert_eq!(
            MonomialIdeal::variable_power(vars.clone(), &[0], 3).unwrap(),
            ideal("(x^3)")
        );
        assert_eq!(
            MonomialIdeal::variable_power(vars.clone(), &[0, 1, 2], 2).unwrap().len(),
            6
        );
        assert_eq!(
            MonomialIdeal::variable_power(vars, &[], 2),
            Err(Error::EmptyVariableSubset)
        );
    }

    #[test]
    fn text_round_trip() {
        let i = MonomialIdeal::parse_infer("(b^2*a, c, a*c^3)").unwrap();
        assert_eq!(i.vars().names(), ["b", "a", "c"]);
        assert_eq!(i.to_string(), "(c, b^2*a)");
        assert_eq!(m("1").display(&xyz()).to_string(), "1");
        assert!(MonomialIdeal::parse("(x, w)", &xyz()).is_err());
        assert!(MonomialIdeal::parse("x, y", &xyz()).is_err());
        assert!(MonomialIdeal::parse("()", &xyz()).unwrap().is_zero());
    }

    #[test]
    fn overflow_is_reported() {
        let big = Monomial::new(vec![u32::MAX, 0, 0]);
        assert_eq!(big.mul(&m("x")), Err(Error::ExponentOverflow));
    }

    #[test]
    fn mismatched_ideals_are_rejected() {
        let other = MonomialIdeal::parse("(a)", &VariableSet::new(["a", "b", "c"]).unwrap()).unwrap();
        assert_eq!(ideal("(x)").intersect(&other), Err(Error::VariableMismatch));
    }
}
