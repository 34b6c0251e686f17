use super::*;
use num_traits::Zero;
use crate::frobenius::{frobenius_system_from_trace, opcat_iso_check};
use crate::gallery::{group_algebra, groupoid_category, monoid_bialgebra, sweedler_hopf_algebra, FiniteGroupoid, MonoidTable};
use crate::hopf::{op_antipode, solve_antipode};
use crate::integrals::generic_integral;

fn hopf_samples() -> Vec<(&'static str, VCatData)> {
    vec![
        ("trivial", group_algebra(&MonoidTable::trivial()).unwrap()),
        ("kC4", group_algebra(&MonoidTable::cyclic(4)).unwrap()),
        ("H4", sweedler_hopf_algebra()),
        ("pair(2)", groupoid_category(&FiniteGroupoid::pair(2))),
        ("swap", groupoid_category(&FiniteGroupoid::c2_swap())),
    ]
}

fn integrals(data: &VCatData) -> (IntegralFamily, IntegralFamily) {
    (generic_integral(data, Side::Left).unwrap().unwrap(), generic_integral(data, Side::Right).unwrap().unwrap())
}

fn ok(what: &str, r: &AxiomReport) {
    assert!(r.passed(), "{what}: {:?}", r.first_failure());
}

#[test]
fn synthesized_antipodes_match_solved_ones() {
    for (name, h) in hopf_samples() {
        let (tl, tr) = integrals(&h);
        let solved = solve_antipode(&h).unwrap();
        let qbar = diagonal_inverses(&h, &tl, PqMap::Q).unwrap();
        let (right, report) = synthesize_right_antipode(&h, &tl, &qbar).unwrap();
        ok(name, &report);
        assert_eq!(right, solved, "{name}");
        let pbar = diagonal_inverses(&h, &tr, PqMap::P).unwrap();
        let (left, report) = synthesize_left_antipode(&h, &tr, &pbar).unwrap();
        ok(name, &report);
        assert_eq!(left, solved, "{name}");
        let (both, report) = synthesize_antipode(&h, &tl, &tr).unwrap();
        ok(name, &report);
        assert_eq!(both, solved);
    }
}

#[test]
fn synthesized_op_antipodes_invert_the_antipode() {
    for (name, h) in hopf_samples() {
        let (tl, tr) = integrals(&h);
        let pbar = diagonal_inverses(&h, &tl, PqMap::P).unwrap();
        let qbar = diagonal_inverses(&h, &tr, PqMap::Q).unwrap();
        let (sbar, report) = synthesize_op_antipode(&h, Some((&tl, &pbar)), Some((&tr, &qbar))).unwrap();
        ok(name, &report);
        assert_eq!(sbar, op_antipode(&h, h.antipode().unwrap()).unwrap().0, "{name}");
        let (one_sided, report) = synthesize_op_antipode(&h, Some((&tl, &pbar)), None).unwrap();
        ok(name, &report);
        assert_eq!(one_sided, sbar);
    }
}

#[test]
fn singular_integral_is_refused() {
    let m = monoid_bialgebra(&MonoidTable::idempotent2());
    let t = generic_integral(&m, Side::Left).unwrap().unwrap();
    assert!(matches!(diagonal_inverses(&m, &t, PqMap::Q), Err(Error::SingularIntegral { map: "q", object: 0 })));
    let bogus = vec![Matrix::identity(2)];
    assert!(matches!(synthesize_right_antipode(&m, &t, &bogus), Err(Error::SingularIntegral { .. })));
    assert!(matches!(frobenius_from_hopf_integral(&m, &t), Err(Error::NotHopf(_))));
}

#[test]
fn frobenius_synthesis_on_hopf_samples() {
    for (name, h) in hopf_samples() {
        let (tl, _) = integrals(&h);
        let syn = frobenius_from_hopf_integral(&h, &tl).unwrap();
        ok(name, &syn.report);
        ok(name, &opcat_iso_check(&h, &syn.system).unwrap());
        ok(name, &nonsingularity_from_frobenius(&h, &tl, &syn.system).unwrap());
        // The trace determines the system.
        assert_eq!(frobenius_system_from_trace(&h, &syn.system.trace).unwrap(), syn.system, "{name}");
    }
}

#[test]
fn cyclic_group_synthesis_gives_the_first_casimir() {
    let h = group_algebra(&MonoidTable::cyclic(4)).unwrap();
    let (tl, _) = integrals(&h);
    let syn = frobenius_from_hopf_integral(&h, &tl).unwrap();
    let nu = &syn.system.trace.functionals[0];
    // ν is a nonzero multiple of δ_e.
    assert!(!nu.get(0, 0).is_zero());
    for i in 1..4 {
        assert!(nu.get(0, i).is_zero());
    }
}

#[test]
fn general_battery() {
    for (name, h) in hopf_samples() {
        let g = general_ls_check(&h).unwrap();
        assert!(g.all_hold(), "{name}: {g:?}");
    }
    let m = monoid_bialgebra(&MonoidTable::idempotent2());
    assert!(general_ls_check(&m).unwrap().vacuous());
}

#[test]
fn equivalence_battery_on_hopf_samples() {
    for (name, h) in hopf_samples() {
        let r = ls_report(&h).unwrap();
        assert!(r.consistent, "{name}: {:?}", r.violations);
        assert!(r.conditions.iter().all(|c| c.holds), "{name}");
        assert_eq!(r.synthesized_antipode.as_ref(), r.antipode.as_ref());
        assert_eq!(r.dual_condition, Some(true));
    }
}

#[test]
fn idempotent_monoid_is_frobenius_without_being_hopf() {
    let m = monoid_bialgebra(&MonoidTable::idempotent2());
    let r = ls_report(&m).unwrap();
    assert!(r.semi_hopf && !r.hopf);
    assert!(!r.nonsingular_left_integral && !r.nonsingular_right_integral);
    assert!(r.frobenius && r.frobenius_not_hopf);
    assert!(r.consistent, "{:?}", r.violations);
    assert!(r.conditions.iter().all(|c| !c.holds));
}
