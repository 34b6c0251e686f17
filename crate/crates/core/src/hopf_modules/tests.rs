use super::*;
use crate::gallery::{group_algebra, groupoid_category, sweedler_hopf_algebra, FiniteGroupoid, MonoidTable};
use crate::vcat::dual_semi_hopf;

fn hopf_samples() -> Vec<(&'static str, VCatData)> {
    vec![
        ("kC4", group_algebra(&MonoidTable::cyclic(4)).unwrap()),
        ("H4", sweedler_hopf_algebra()),
        ("pair(2)", groupoid_category(&FiniteGroupoid::pair(2))),
        ("swap", groupoid_category(&FiniteGroupoid::c2_swap())),
    ]
}

fn ok(name: &str, what: &str, r: AxiomReport) {
    assert!(r.passed(), "{name} {what}: {:?}", r.first_failure());
}

#[test]
fn regular_and_free_modules_are_hopf_modules() {
    for (name, h) in hopf_samples() {
        let reg = regular_hopf_module(&h).unwrap();
        ok(name, "regular", check_hopf_module(&reg).unwrap());
        let diag: Vec<usize> = (0..h.n()).map(|x| x + 1).collect();
        let free = free_module(&h, &diag).unwrap();
        ok(name, "free", check_hopf_module(&free).unwrap());
        for x in 0..h.n() {
            assert_eq!(coinvariants(&free, x).unwrap().cols(), diag[x], "{name}");
        }
        ok(name, "free fundamental", fundamental_iso_check(&free).unwrap().1);
    }
}

#[test]
fn standard_structures_pass_their_axioms() {
    for (name, h) in hopf_samples() {
        let st = standard_structures(&h).unwrap();
        ok(name, "h1", check_hopf_opmodule(&st.h1).unwrap());
        ok(name, "h2", check_hopf_opmodule(&st.h2).unwrap());
        ok(name, "hstar1", check_hopf_module(&st.hstar1).unwrap());
        ok(name, "hstar2", check_hopf_module(&st.hstar2).unwrap());
        ok(name, "cstarop", check_hopf_opmodule(&st.cstarop).unwrap());
    }
}

#[test]
fn fundamental_theorem_on_standard_structures() {
    for (name, h) in hopf_samples() {
        let st = standard_structures(&h).unwrap();
        ok(name, "hstar1 iso", fundamental_iso_check(&st.hstar1).unwrap().1);
        ok(name, "hstar2 iso", fundamental_iso_check(&st.hstar2).unwrap().1);
        ok(name, "h1 iso", fundamental_opmodule_iso_check(&st.h1).unwrap().1);
        ok(name, "h2 iso", fundamental_opmodule_iso_check(&st.h2).unwrap().1);
        ok(name, "cstarop iso", fundamental_opmodule_iso_check(&st.cstarop).unwrap().1);
    }
}

#[test]
fn regular_module_coinvariants_are_the_units() {
    for (name, h) in hopf_samples() {
        let reg = regular_hopf_module(&h).unwrap();
        let c = h.cat().unwrap();
        for x in 0..h.n() {
            let co = coinvariants(&reg, x).unwrap();
            assert_eq!(co.cols(), 1, "{name}");
            assert_eq!(co.rank(), Matrix::hstack(&[co.clone(), c.unit[x].clone()]).rank(), "{name}");
        }
    }
}

#[test]
fn module_opmodule_transport_round_trips() {
    for (name, h) in hopf_samples() {
        let dual = dual_semi_hopf(&h).unwrap();
        let st = standard_structures(&h).unwrap();
        for m in [&st.hstar1.module, &st.hstar2.module] {
            let op = transport_module_opmodule(&h, m);
            ok(name, "transported opmodule", check_opmodule(&dual, &op).unwrap());
            assert_eq!(&transport_opmodule_module(&h, &op), m, "{name}");
        }
    }
}

#[test]
fn malformed_action_is_a_dimension_error() {
    let h = group_algebra(&MonoidTable::cyclic(2)).unwrap();
    let mut reg = regular_hopf_module(&h).unwrap();
    reg.module.action[(0, 0, 0)] = Matrix::zeros(1, 1);
    assert!(matches!(check_hopf_module(&reg), Err(Error::DimensionMismatch { .. })));
}

#[test]
fn perturbed_structures_are_rejected() {
    let h = sweedler_hopf_algebra();
    let mut st = standard_structures(&h).unwrap();
    st.hstar1.coaction[(0, 0)] = st.hstar1.coaction[(0, 0)].scale(&crate::linalg::int(2));
    assert!(!check_hopf_module(&st.hstar1).unwrap().passed());
    let lam = &mut st.h1.action[(0, 0)];
    let v = lam.get(0, 1).clone() + crate::linalg::int(1);
    lam.set(0, 1, v);
    assert!(!check_hopf_opmodule(&st.h1).unwrap().passed());
}
