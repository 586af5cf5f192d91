mod common;

use std::collections::BTreeSet;

use common::*;
use proptest::prelude::*;
use scarfness::scarf::{
    is_generic, is_scarf, is_scarf_face, is_taylor, lcm_lattice, scarf_complex, ScarfComplex,
};
use scarfness::{EngineConfig, FieldSpec, Monomial, MonomialIdeal, VariableSet};

const FIELDS: [FieldSpec; 2] = [FieldSpec::Rationals, FieldSpec::GF2];

fn cfg() -> EngineConfig {
    EngineConfig::default()
}

fn parse(s: &str) -> MonomialIdeal {
    MonomialIdeal::parse_infer(s).unwrap()
}

fn members(d: &ScarfComplex) -> BTreeSet<Vec<usize>> {
    d.faces().iter().map(|f| f.members.clone()).collect()
}

fn raw(ideal: &MonomialIdeal) -> Vec<Exps> {
    ideal.generators().iter().map(|m| m.exponents().to_vec()).collect()
}

#[test]
fn worked_examples_against_census() {
    let t = parse("(x*y, x*z, y*z)");
    assert!(!is_scarf_face(&t, &[0, 1]));
    let census = scarf_faces_census(&raw(&t));
    assert_eq!(census, [vec![], vec![0], vec![1], vec![2]].into_iter().collect());
    let d = scarf_complex(&t, &cfg()).unwrap();
    assert_eq!(members(&d), census);
    let xyz = Monomial::parse("x*y*z", t.vars()).unwrap();
    let below = d.restrict(&xyz).unwrap();
    assert_eq!((below.num_faces_of_size(1), below.num_faces_of_size(2)), (3, 0));
    for f in FIELDS {
        assert!(!is_scarf(&t, f, &cfg()).unwrap());
    }

    let s = parse("(x^2*y^2, x^2*z^2, y^2*z^2, x*y*z)");
    let xyz_at = s.position(&Monomial::parse("x*y*z", s.vars()).unwrap()).unwrap();
    let square_at = s.position(&Monomial::parse("x^2*y^2", s.vars()).unwrap()).unwrap();
    let mut pair = vec![xyz_at, square_at];
    pair.sort();
    assert!(is_scarf_face(&s, &pair));
    let census = scarf_faces_census(&raw(&s));
    let d = scarf_complex(&s, &cfg()).unwrap();
    assert_eq!(members(&d), census);
    assert_eq!((d.num_faces_of_dim(0), d.num_faces_of_dim(1), d.num_faces_of_dim(2)), (4, 3, 0));
    for f in d.faces_of_dim(1) {
        assert!(f.members.contains(&xyz_at), "star centred at xyz");
    }
    let lattice = lcm_lattice(&s, &cfg()).unwrap();
    assert_eq!(lattice.len(), 8);
    assert_eq!(lattice.len(), lcm_census(&raw(&s)).len());
    for f in FIELDS {
        assert!(is_scarf(&s, f, &cfg()).unwrap());
    }
}

#[test]
fn small_cases() {
    let v = VariableSet::new(["x", "y"]).unwrap();
    for f in FIELDS {
        assert!(is_scarf(&MonomialIdeal::zero(v.clone()), f, &cfg()).unwrap());
        assert!(is_scarf(&parse("(x^3*y)"), f, &cfg()).unwrap());
        assert!(is_scarf(&parse("(x, y)"), f, &cfg()).unwrap());
    }
    assert!(is_taylor(&parse("(x*y, z*w)"), &cfg()).unwrap());
    assert!(!is_taylor(&parse("(x*y, x*z, y*z)"), &cfg()).unwrap());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn local_criterion_matches_census((nv, gens) in raw_ideal(5, 8, 3)) {
        let ideal = ideal_from(&VariableSet::indexed("x", nv), &gens);
        let g = raw(&ideal);
        let d = scarf_complex(&ideal, &cfg()).unwrap();
        prop_assert!(d.check_invariants());
        prop_assert_eq!(members(&d), scarf_faces_census(&g));
        let lattice: BTreeSet<Exps> = lcm_lattice(&ideal, &cfg())
            .unwrap()
            .elements()
            .iter()
            .map(|m| m.exponents().to_vec())
            .collect();
        prop_assert_eq!(lattice, lcm_census(&g));
        prop_assert_eq!(is_taylor(&ideal, &cfg()).unwrap(), scarf_faces_census(&g).len() == 1 << g.len());
    }

    #[test]
    fn lattice_check_matches_every_divisor((nv, gens) in raw_ideal(4, 5, 2)) {
        let ideal = ideal_from(&VariableSet::indexed("x", nv), &gens);
        let g = raw(&ideal);
        prop_assert_eq!(is_scarf(&ideal, FieldSpec::Rationals, &cfg()).unwrap(), scarf_by_all_divisors(&g, BIG_PRIME));
        prop_assert_eq!(is_scarf(&ideal, FieldSpec::GF2, &cfg()).unwrap(), scarf_by_all_divisors(&g, 2));
    }

    #[test]
    fn taylor_and_generic_imply_scarf((nv, gens) in raw_ideal(6, 6, 3)) {
        let ideal = ideal_from(&VariableSet::indexed("x", nv), &gens);
        for f in FIELDS {
            let scarf = is_scarf(&ideal, f, &cfg()).unwrap();
            prop_assert!(!is_taylor(&ideal, &cfg()).unwrap() || scarf);
            prop_assert!(!is_generic(&ideal) || scarf);
        }
    }

    #[test]
    fn scaling_keeps_faces((nv, gens) in raw_ideal(5, 6, 3), m in exps(5, 3)) {
        let ideal = ideal_from(&VariableSet::indexed("x", nv), &gens);
        // S itself has no Scarf faces while m*S is principal.
        prop_assume!(!ideal.is_unit());
        let scaled = ideal.scale(&Monomial::new(m[..nv].to_vec())).unwrap();
        prop_assert_eq!(
            members(&scarf_complex(&ideal, &cfg()).unwrap()),
            members(&scarf_complex(&scaled, &cfg()).unwrap())
        );
        for f in FIELDS {
            prop_assert_eq!(is_scarf(&ideal, f, &cfg()).unwrap(), is_scarf(&scaled, f, &cfg()).unwrap());
        }
    }

    #[test]
    fn restriction_keeps_scarf_and_taylor((nv, gens) in raw_ideal(5, 6, 3), ms in prop::collection::vec(exps(5, 4), 1..=4)) {
        let ideal = ideal_from(&VariableSet::indexed("x", nv), &gens);
        let taylor = is_taylor(&ideal, &cfg()).unwrap();
        for m in ms {
            let r = ideal.restrict(&Monomial::new(m[..nv].to_vec())).unwrap();
            for f in FIELDS {
                if is_scarf(&ideal, f, &cfg()).unwrap() {
                    prop_assert!(is_scarf(&r, f, &cfg()).unwrap());
                }
            }
            if taylor {
                prop_assert!(is_taylor(&r, &cfg()).unwrap());
            }
        }
    }
}
