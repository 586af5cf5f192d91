//! Scarf complexes, lcm lattices and the resolution test for Scarfness.
//!
//! A monomial ideal is Scarf when its Scarf complex supports its minimal free
//! resolution. By the Bayer–Peeva–Sturmfels criterion that happens exactly
//! when, for every monomial `m`, the subcomplex of faces whose label divides
//! `m` is acyclic or has no vertices. That subcomplex only changes when `m`
//! crosses an lcm of generators, so it is enough to test the elements of the
//! lcm lattice.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::homology::{FieldSpec, SimplicialComplex};
use crate::monomial::{Monomial, MonomialIdeal};

/// Limits guarding the exponential parts of the engine. Exceeding a limit is
/// an error, never a silent truncation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EngineConfig {
    /// Maximum generator count for Scarf complexes and lcm lattices.
    pub scarf_cap: usize,
    /// Maximum generator count for the Taylor test.
    pub taylor_cap: usize,
    /// Maximum number of lcm-lattice elements.
    pub lattice_cap: usize,
}

impl Default for EngineConfig {
    fn default() -> Self {
        Self {
            scarf_cap: 256,
            taylor_cap: 20,
            lattice_cap: 1 << 16,
        }
    }
}

impl EngineConfig {
    fn check_scarf(&self, ideal: &MonomialIdeal) -> Result<()> {
        if ideal.len() > self.scarf_cap {
            return Err(Error::GeneratorCap {
                count: ideal.len(),
                cap: self.scarf_cap,
            });
        }
        Ok(())
    }
}

/// A set of generator indices together with their lcm.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledFace {
    pub members: Vec<usize>,
    pub label: Monomial,
}

impl LabeledFace {
    pub fn dim(&self) -> isize {
        self.members.len() as isize - 1
    }
}

/// lcm of the generators indexed by `members` (`1` when empty).
pub fn label_of(ideal: &MonomialIdeal, members: &[usize]) -> Monomial {
    let gens = ideal.generators();
    let mut acc = Monomial::one(ideal.vars().len());
    for &i in members {
        acc.lcm_assign(&gens[i]);
    }
    acc
}

/// True when no other subset of generators has the same lcm as `sigma`.
///
/// Uses the local test: `sigma` shares its label with another subset exactly
/// when some outside generator divides the label, or dropping some member
/// leaves the label unchanged.
pub fn is_scarf_face(ideal: &MonomialIdeal, sigma: &[usize]) -> bool {
    let label = label_of(ideal, sigma);
    is_scarf_face_with_label(ideal, sigma, &label)
}

fn is_scarf_face_with_label(ideal: &MonomialIdeal, sigma: &[usize], label: &Monomial) -> bool {
    let gens = ideal.generators();
    let outside_divides = gens
        .iter()
        .enumerate()
        .any(|(i, g)| !sigma.contains(&i) && g.divides_unchecked(label));
    if outside_divides {
        return false;
    }
    // A member is redundant iff it divides the lcm of the others.
    !sigma.iter().any(|&i| {
        let rest: Vec<usize> = sigma.iter().copied().filter(|&j| j != i).collect();
        gens[i].divides_unchecked(&label_of(ideal, &rest))
    })
}

/// The Scarf complex: every face of the generator simplex whose label is unique.
#[derive(Debug, Clone)]
pub struct ScarfComplex {
    ideal: MonomialIdeal,
    faces: Vec<LabeledFace>,
}

impl ScarfComplex {
    pub fn ideal(&self) -> &MonomialIdeal {
        &self.ideal
    }

    /// Faces in lexicographic order of their member lists, empty face first.
    pub fn faces(&self) -> &[LabeledFace] {
        &self.faces
    }

    pub fn faces_of_dim(&self, d: isize) -> impl Iterator<Item = &LabeledFace> {
        self.faces.iter().filter(move |f| f.dim() == d)
    }

    pub fn num_faces_of_dim(&self, d: isize) -> usize {
        self.faces_of_dim(d).count()
    }

    pub fn dim(&self) -> isize {
        self.faces.iter().map(LabeledFace::dim).max().unwrap_or(-1)
    }

    /// The underlying simplicial complex on generator indices.
    pub fn complex(&self) -> SimplicialComplex {
        SimplicialComplex::from_closed_faces(self.faces.iter().map(|f| f.members.clone()))
    }

    /// Faces whose label divides `m`.
    pub fn restrict(&self, m: &Monomial) -> Result<SimplicialComplex> {
        if m.nvars() != self.ideal.vars().len() {
            return Err(Error::VariableMismatch);
        }
        Ok(SimplicialComplex::from_closed_faces(
            self.faces
                .iter()
                .filter(|f| f.label.divides_unchecked(m))
                .map(|f| f.members.clone()),
        ))
    }

    /// Connected with exactly `vertices - 1` edges and nothing above dimension 1.
    pub fn is_tree(&self) -> bool {
        let v = self.num_faces_of_dim(0);
        self.dim() <= 1 && v > 0 && self.num_faces_of_dim(1) + 1 == v && self.complex().is_connected()
    }

    /// Checks the structural invariants: downward closed and labels distinct.
    pub fn check_invariants(&self) -> bool {
        let labels: HashSet<&Monomial> = self.faces.iter().map(|f| &f.label).collect();
        labels.len() == self.faces.len()
            && self.complex().is_downward_closed()
            && self.faces.iter().all(|f| f.label == label_of(&self.ideal, &f.members))
    }
}

/// Enumerates all Scarf faces, growing faces one generator at a time.
/// Every Scarf face is reached because dropping its largest member leaves a
/// Scarf face.
pub fn scarf_complex(ideal: &MonomialIdeal, cfg: &EngineConfig) -> Result<ScarfComplex> {
    cfg.check_scarf(ideal)?;
    let gens = ideal.generators();
    let q = gens.len();
    let mut faces = vec![LabeledFace {
        members: Vec::new(),
        label: Monomial::one(ideal.vars().len()),
    }];
    if ideal.is_unit() {
        // The single generator 1 shares the label of the empty face.
        faces.clear();
    }
    let mut frontier: Vec<LabeledFace> = (0..q)
        .map(|i| LabeledFace {
            members: vec![i],
            label: gens[i].clone(),
        })
        .filter(|f| is_scarf_face_with_label(ideal, &f.members, &f.label))
        .collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for f in &frontier {
            let last = *f.members.last().expect("non-empty face");
            for (j, g) in gens.iter().enumerate().skip(last + 1) {
                let mut members = f.members.clone();
                members.push(j);
                let label = f.label.lcm_unchecked(g);
                if is_scarf_face_with_label(ideal, &members, &label) {
                    next.push(LabeledFace { members, label });
                }
            }
        }
        faces.append(&mut frontier);
        frontier = next;
    }
    faces.sort_by(|a, b| a.members.cmp(&b.members));
    Ok(ScarfComplex {
        ideal: ideal.clone(),
        faces,
    })
}

/// All lcms of non-empty generator subsets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LcmLattice {
    elements: Vec<Monomial>,
}

impl LcmLattice {
    /// Sorted (graded) element list.
    pub fn elements(&self) -> &[Monomial] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.elements.binary_search(m).is_ok()
    }
}

/// Closure of the generators under lcm.
pub fn lcm_lattice(ideal: &MonomialIdeal, cfg: &EngineConfig) -> Result<LcmLattice> {
    cfg.check_scarf(ideal)?;
    let gens = ideal.generators();
    let mut seen: HashSet<Monomial> = gens.iter().cloned().collect();
    let mut frontier: Vec<Monomial> = gens.to_vec();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for a in &frontier {
            for g in gens {
                let l = a.lcm_unchecked(g);
                if !seen.contains(&l) {
                    if seen.len() >= cfg.lattice_cap {
                        return Err(Error::LatticeCap { cap: cfg.lattice_cap });
                    }
                    seen.insert(l.clone());
                    next.push(l);
                }
            }
        }
        frontier = next;
    }
    let mut elements: Vec<Monomial> = seen.into_iter().collect();
    elements.sort();
    Ok(LcmLattice { elements })
}

/// A lattice element whose restricted Scarf complex is neither acyclic nor
/// vertex-free, or `None` when the ideal is Scarf.
pub fn scarf_obstruction(
    ideal: &MonomialIdeal,
    field: FieldSpec,
    cfg: &EngineConfig,
) -> Result<Option<Monomial>> {
    cfg.check_scarf(ideal)?;
    if ideal.len() <= 1 {
        return Ok(None);
    }
    let complex = scarf_complex(ideal, cfg)?;
    let lattice = lcm_lattice(ideal, cfg)?;
    for m in lattice.elements() {
        let sub = complex.restrict(m)?;
        if sub.has_no_vertices() {
            continue;
        }
        // A complex with a face on all of its vertices is a cone.
        let nverts = sub.num_faces_of_size(1);
        if sub.num_faces_of_size(nverts) == 1 {
            continue;
        }
        if !sub.is_acyclic(field)? {
            return Ok(Some(m.clone()));
        }
    }
    Ok(None)
}

/// Whether the Scarf complex of `ideal` is its minimal free resolution.
/// The zero ideal and principal ideals count as Scarf.
pub fn is_scarf(ideal: &MonomialIdeal, field: FieldSpec, cfg: &EngineConfig) -> Result<bool> {
    Ok(scarf_obstruction(ideal, field, cfg)?.is_none())
}

/// Whether all `2^q` subset labels are distinct, i.e. the Taylor resolution is
/// minimal. Labels collide iff some generator divides the lcm of a set of
/// other generators, and the largest such set is all the others.
pub fn is_taylor(ideal: &MonomialIdeal, cfg: &EngineConfig) -> Result<bool> {
    if ideal.len() > cfg.taylor_cap {
        return Err(Error::GeneratorCap {
            count: ideal.len(),
            cap: cfg.taylor_cap,
        });
    }
    let gens = ideal.generators();
    Ok((0..gens.len()).all(|i| {
        let others: Vec<usize> = (0..gens.len()).filter(|&j| j != i).collect();
        !gens[i].divides_unchecked(&label_of(ideal, &others))
    }))
}

/// Generic in the sense of Miller–Sturmfels–Yanagawa: whenever two generators
/// share a positive degree in some variable, a third generator divides their
/// lcm with a quotient of full support.
pub fn is_generic(ideal: &MonomialIdeal) -> bool {
    let gens = ideal.generators();
    for (a, ma) in gens.iter().enumerate() {
        for (b, mb) in gens.iter().enumerate().skip(a + 1) {
            let shares = ma
                .exponents()
                .iter()
                .zip(mb.exponents())
                .any(|(&x, &y)| x > 0 && x == y);
            if !shares {
                continue;
            }
            let l = ma.lcm_unchecked(mb);
            let supp = l.support();
            let rescued = gens.iter().enumerate().any(|(c, mc)| {
                c != a
                    && c != b
                    && mc.divides_unchecked(&l)
                    && l.quotient(mc)
                        .ok()
                        .flatten()
                        .is_some_and(|qt| qt.support() == supp)
            });
            if !rescued {
                return false;
            }
        }
    }
    true
}
