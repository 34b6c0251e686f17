//! Randomized invariants. Hopf data is drawn from groups, groupoids and the
//! Sweedler algebra, then pushed through a random change of basis on every hom
//! so the structure constants are dense rationals.

use hopfcat::frobenius::{
    casimir_from_comult, check_frobenius_system, comult_from_casimir, dual_basis_check, local_rigidity_check,
    CasimirFamily, TraceFamily,
};
use hopfcat::gallery::{
    group_algebra, groupoid_category, monoid_bialgebra, sweedler_hopf_algebra, FiniteGroupoid, MonoidTable,
};
use hopfcat::hopf::{check_weak_hopf, fusion_map, op_antipode, pack, solve_antipode};
use hopfcat::hopf_modules::{
    check_hopf_module, coinvariants, free_module, fundamental_iso_check, regular_hopf_module,
    transport_module_opmodule, transport_opmodule_module,
};
use hopfcat::integrals::{
    antipode_transport, casimir_from_integral, check_integral, generic_integral, integral_from_casimir,
    integral_space, op_antipode_transport, pq_maps, CasimirVariant, IntegralFamily, Side,
};
use hopfcat::io::{parse_structure, write_structure, CandidateFamilies, Structure};
use hopfcat::larson_sweedler::{frobenius_from_hopf_integral, ls_report, synthesize_antipode};
use hopfcat::linalg::{eye, frac, int};
use hopfcat::vcat::{dual_category, dual_opcategory, verify_axioms, AxiomSet, PairMap, VCatData};
use hopfcat::{Matrix, Rational};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn small_rational() -> impl Strategy<Value = Rational> {
    (-4i64..=4, 1i64..=3).prop_map(|(n, d)| frac(n, d))
}

fn matrix(max_rows: usize, max_cols: usize) -> impl Strategy<Value = Matrix> {
    (0..=max_rows, 0..=max_cols).prop_flat_map(|(r, c)| {
        proptest::collection::vec(small_rational(), r * c).prop_map(move |v| Matrix::new(r, c, v))
    })
}

fn square(max: usize) -> impl Strategy<Value = Matrix> {
    (1..=max).prop_flat_map(|n| proptest::collection::vec(small_rational(), n * n).prop_map(move |v| Matrix::new(n, n, v)))
}

fn random_invertible(rng: &mut ChaCha8Rng, d: usize) -> Matrix {
    let diag = [frac(1, 1), frac(-1, 1), frac(2, 1), frac(1, 2)];
    let mut lower = Matrix::identity(d);
    let mut upper = Matrix::zeros(d, d);
    for i in 0..d {
        for j in 0..d {
            if i > j {
                lower.set(i, j, int(rng.gen_range(-1..=1)));
            } else if i < j {
                upper.set(i, j, int(rng.gen_range(-1..=1)));
            } else {
                upper.set(i, i, diag[rng.gen_range(0..diag.len())].clone());
            }
        }
    }
    &lower * &upper
}

/// Conjugates every layer by `P_{xy}`, where old coordinates are `P_{xy}` times new ones.
fn rebase(data: &VCatData, seed: u64) -> VCatData {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = data.n();
    let p = PairMap::from_fn(n, |x, y| random_invertible(&mut rng, data.dim(x, y)));
    let pinv = p.map(|_, _, m| m.invert().unwrap());
    let mut out = data.clone();
    if let Some(c) = &mut out.category {
        for ((x, y, z), m) in data.cat().unwrap().comp.iter() {
            c.comp[(x, y, z)] = &(&pinv[(x, z)] * m) * &p[(x, y)].kron(&p[(y, z)]);
        }
        for (x, u) in c.unit.iter_mut().enumerate() {
            *u = &pinv[(x, x)] * u;
        }
    }
    if let Some(o) = &mut out.opcategory {
        for ((x, y, z), m) in data.opcat().unwrap().cocomp.iter() {
            o.cocomp[(x, y, z)] = &(&pinv[(x, y)].kron(&pinv[(y, z)]) * m) * &p[(x, z)];
        }
        for (x, e) in o.counit.iter_mut().enumerate() {
            *e = &*e * &p[(x, x)];
        }
    }
    if let Some(l) = &mut out.local_comonoid {
        for ((x, y), m) in data.comonoid().unwrap().comult.iter() {
            l.comult[(x, y)] = &(&pinv[(x, y)].kron(&pinv[(x, y)]) * m) * &p[(x, y)];
            l.counit[(x, y)] = &data.comonoid().unwrap().counit[(x, y)] * &p[(x, y)];
        }
    }
    if let Some(l) = &mut out.local_monoid {
        for ((x, y), m) in data.monoid().unwrap().mult.iter() {
            l.mult[(x, y)] = &(&pinv[(x, y)] * m) * &p[(x, y)].kron(&p[(x, y)]);
            l.unit[(x, y)] = &pinv[(x, y)] * &data.monoid().unwrap().unit[(x, y)];
        }
    }
    if let Some(s) = &mut out.antipode {
        for ((x, y), m) in data.antipode().unwrap().iter() {
            s[(x, y)] = &(&pinv[(y, x)] * m) * &p[(x, y)];
        }
    }
    out
}

fn small_group(k: usize) -> MonoidTable {
    match k {
        0 => MonoidTable::trivial(),
        1..=3 => MonoidTable::cyclic(k + 1),
        _ => MonoidTable::klein_four(),
    }
}

/// `C_n` rotating `Z_k` for a divisor `k` of `n`.
fn rotation_groupoid(n: usize, k: usize) -> FiniteGroupoid {
    let act: Vec<Vec<usize>> = (0..n).map(|g| (0..k).map(|p| (p + g) % k).collect()).collect();
    FiniteGroupoid::action(&MonoidTable::cyclic(n), (0..k).map(|p| format!("p{p}")).collect(), &act).unwrap()
}

fn groupoid() -> impl Strategy<Value = FiniteGroupoid> {
    let atom = prop_oneof![
        (1usize..=3).prop_map(FiniteGroupoid::pair),
        (0usize..3).prop_map(|k| FiniteGroupoid::from_group(&small_group(k)).unwrap()),
        prop_oneof![Just((2, 2)), Just((4, 2)), Just((3, 3))]
            .prop_map(|(n, k)| rotation_groupoid(n, k)),
    ];
    (atom.clone(), proptest::option::of(atom)).prop_map(|(a, b)| match b {
        Some(b) if a.objects().len() + b.objects().len() <= 3 => a.disjoint_union(&b).unwrap(),
        _ => a,
    })
}

/// Hopf data with an antipode, already rebased.
fn hopf_data() -> impl Strategy<Value = VCatData> {
    let base = prop_oneof![
        (0usize..5).prop_map(|k| group_algebra(&small_group(k)).unwrap()),
        Just(sweedler_hopf_algebra()),
        groupoid().prop_map(|g| groupoid_category(&g)),
    ];
    (base, any::<u64>()).prop_map(|(d, seed)| rebase(&d, seed))
}

fn groupoid_data() -> impl Strategy<Value = (FiniteGroupoid, VCatData)> {
    (groupoid(), any::<u64>()).prop_map(|(g, seed)| {
        let d = rebase(&groupoid_category(&g), seed);
        (g, d)
    })
}

fn without_antipode(data: &VCatData) -> VCatData {
    let mut d = data.clone();
    d.antipode = None;
    d
}

fn config() -> ProptestConfig {
    ProptestConfig { cases: 24, ..ProptestConfig::default() }
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn rank_is_transpose_invariant(m in matrix(5, 5)) {
        prop_assert_eq!(m.rank(), m.transpose().rank());
    }

    #[test]
    fn kernel_is_annihilated_and_complements_rank(m in matrix(5, 5)) {
        let kernel = m.kernel_basis();
        for v in &kernel {
            prop_assert!(m.apply(v).iter().all(num_traits::Zero::is_zero));
        }
        prop_assert_eq!(kernel.len() + m.rank(), m.cols());
    }

    #[test]
    fn inverse_is_two_sided(m in square(4)) {
        match m.invert() {
            Ok(inv) => {
                prop_assert_eq!(&inv * &m, eye(m.rows()));
                prop_assert_eq!(&m * &inv, eye(m.rows()));
            }
            Err(_) => prop_assert!(m.rank() < m.rows()),
        }
    }

    #[test]
    fn kron_mixed_product(a in square(2), b in square(3), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let c = random_invertible(&mut rng, a.rows());
        let d = random_invertible(&mut rng, b.rows());
        prop_assert_eq!(&a.kron(&b) * &c.kron(&d), (&a * &c).kron(&(&b * &d)));
    }

    #[test]
    fn rebased_hopf_data_passes_every_layer(data in hopf_data()) {
        for set in [AxiomSet::Category, AxiomSet::LocalComonoid, AxiomSet::SemiHopf, AxiomSet::Hopf] {
            let r = verify_axioms(&data, set).unwrap();
            prop_assert!(r.passed(), "{set}: {:?}", r.first_failure());
        }
    }

    #[test]
    fn double_dual_of_a_category_is_itself(data in hopf_data()) {
        let dual = dual_opcategory(&data).unwrap();
        prop_assert!(verify_axioms(&dual, AxiomSet::Opcategory).unwrap().passed());
        let back = dual_category(&dual).unwrap();
        prop_assert_eq!(back.shape.dims, data.shape.dims.clone());
        prop_assert_eq!(back.category, data.category.clone());
    }

    #[test]
    fn counit_is_multiplicative(data in hopf_data()) {
        let c = data.cat().unwrap();
        let l = data.comonoid().unwrap();
        for ((x, y, z), m) in c.comp.iter() {
            prop_assert_eq!(&l.counit[(x, z)] * m, l.counit[(x, y)].kron(&l.counit[(y, z)]));
        }
    }

    #[test]
    fn verification_is_deterministic(data in hopf_data()) {
        let broken = {
            let mut d = data.clone();
            for s in d.antipode.as_mut().unwrap().values_mut() {
                *s = s.scale(&int(2));
            }
            d
        };
        for d in [&data, &broken] {
            prop_assert_eq!(verify_axioms(d, AxiomSet::Hopf).unwrap(), verify_axioms(d, AxiomSet::Hopf).unwrap());
        }
    }

    #[test]
    fn antipode_is_unique_and_recovered(data in hopf_data()) {
        let solved = solve_antipode(&without_antipode(&data)).unwrap();
        prop_assert_eq!(&solved, data.antipode().unwrap());
        prop_assert_eq!(solve_antipode(&data).unwrap(), solved);
    }

    #[test]
    fn op_antipode_inverts_the_antipode(data in hopf_data()) {
        let s = data.antipode().unwrap();
        let (sbar, report) = op_antipode(&data, s).unwrap();
        prop_assert!(report.passed());
        for ((x, y), m) in s.iter() {
            prop_assert_eq!(&sbar[(y, x)] * m, eye(data.dim(x, y)));
        }
    }

    #[test]
    fn fusion_maps_are_invertible(data in hopf_data()) {
        for x in 0..data.n() {
            for y in 0..data.n() {
                let f = fusion_map(&data, x, y).unwrap();
                prop_assert!(f.report.passed(), "{:?}", f.report.first_failure());
                prop_assert_eq!(f.inverse, f.formula_inverse);
            }
        }
    }

    #[test]
    fn packing_is_weak_hopf_and_grouplike_only_for_one_object(
        data in hopf_data().prop_filter("packed algebra too large", |d| d.shape.total_dim() <= 6)
    ) {
        let p = pack(&data).unwrap();
        prop_assert!(check_weak_hopf(&p).passed());
        prop_assert_eq!(p.unit_is_grouplike(), data.n() == 1);
    }

    #[test]
    fn non_group_monoids_have_no_antipode(k in 0usize..2, seed in any::<u64>()) {
        let m = if k == 0 { MonoidTable::idempotent2() } else { MonoidTable::idempotent3() };
        let data = rebase(&monoid_bialgebra(&m), seed);
        prop_assert!(verify_axioms(&data, AxiomSet::SemiHopf).unwrap().passed());
        prop_assert!(solve_antipode(&data).is_err());
    }

    #[test]
    fn free_modules_satisfy_the_dimension_law(data in hopf_data(), sizes in proptest::collection::vec(1usize..=2, 3)) {
        let m = free_module(&data, &sizes[..data.n()]).unwrap();
        prop_assert!(check_hopf_module(&m).unwrap().passed());
        for x in 0..data.n() {
            let co = coinvariants(&m, x).unwrap().cols();
            prop_assert_eq!(co, sizes[x]);
            for y in 0..data.n() {
                prop_assert_eq!(m.module.dims[(x, y)], co * data.dim(x, y));
            }
        }
        prop_assert!(fundamental_iso_check(&m).unwrap().1.passed());
    }

    #[test]
    fn module_opmodule_transport_is_an_involution(data in hopf_data()) {
        let m = regular_hopf_module(&data).unwrap().module;
        let there = transport_module_opmodule(&data, &m);
        prop_assert_eq!(transport_opmodule_module(&data, &there), m);
    }

    #[test]
    fn integral_bases_are_integrals(data in hopf_data()) {
        for side in [Side::Left, Side::Right] {
            for anchor in 0..data.n() {
                let space = integral_space(&data, anchor, side).unwrap();
                prop_assert_eq!(space.dim(), 1);
                for t in &space.basis {
                    prop_assert!(check_integral(&data, t).unwrap().passed());
                }
            }
        }
    }

    #[test]
    fn casimir_round_trip_recovers_the_integral(data in hopf_data()) {
        let t = generic_integral(&data, Side::Left).unwrap().unwrap();
        let e = casimir_from_integral(&data, &t, CasimirVariant::Left).unwrap();
        prop_assert_eq!(integral_from_casimir(&data, &e, Side::Left).unwrap(), t);
    }

    #[test]
    fn hopf_integrals_are_nonsingular_everywhere(data in hopf_data()) {
        for side in [Side::Left, Side::Right] {
            let t = generic_integral(&data, side).unwrap().unwrap();
            let pq = pq_maps(&data, &t).unwrap();
            for ((x, y), p) in pq.p.iter() {
                prop_assert_eq!(p.rank(), data.dim(x, y));
                prop_assert_eq!(pq.q[(x, y)].rank(), data.dim(x, y));
            }
        }
    }

    #[test]
    fn transports_undo_each_other(data in hopf_data()) {
        for side in [Side::Left, Side::Right] {
            let t = generic_integral(&data, side).unwrap().unwrap();
            let moved = antipode_transport(&data, &t).unwrap();
            prop_assert_eq!(moved.side, side.flipped());
            prop_assert!(check_integral(&data, &moved).unwrap().passed());
            prop_assert_eq!(op_antipode_transport(&data, &moved).unwrap(), t);
        }
    }

    #[test]
    fn hopf_integral_induces_frobenius(data in hopf_data()) {
        let t = generic_integral(&data, Side::Left).unwrap().unwrap();
        let synth = frobenius_from_hopf_integral(&data, &t).unwrap();
        prop_assert!(synth.report.passed(), "{:?}", synth.report.first_failure());
        prop_assert!(dual_basis_check(&data, &synth.system).unwrap().passed());
        prop_assert!(local_rigidity_check(&data, &synth.system).unwrap().passed());
    }

    #[test]
    fn synthesized_antipode_equals_solved(data in hopf_data()) {
        let left = generic_integral(&data, Side::Left).unwrap().unwrap();
        let right = generic_integral(&data, Side::Right).unwrap().unwrap();
        let (s, report) = synthesize_antipode(&without_antipode(&data), &left, &right).unwrap();
        prop_assert!(report.passed(), "{:?}", report.first_failure());
        prop_assert_eq!(&s, data.antipode().unwrap());
    }

    #[test]
    fn ls_report_is_consistent_with_the_dimension_law(data in hopf_data()) {
        let r = ls_report(&without_antipode(&data)).unwrap();
        prop_assert!(r.violations.is_empty(), "{:?}", r.violations);
        prop_assert!(r.hopf && r.frobenius && r.dimension_condition);
        for x in 0..data.n() {
            for y in 0..data.n() {
                if data.dim(x, y) != 0 {
                    prop_assert_eq!(data.dim(x, x), data.dim(x, y));
                    prop_assert_eq!(data.dim(y, y), data.dim(x, y));
                }
            }
        }
    }

    #[test]
    fn groupoid_frobenius_structure_survives_rebasing((_, data) in groupoid_data()) {
        prop_assert!(verify_axioms(&data, AxiomSet::Frobenius).unwrap().passed());
        let sys = casimir_from_comult(&data).unwrap();
        prop_assert!(check_frobenius_system(&data, &sys).unwrap().passed());
        prop_assert_eq!(&comult_from_casimir(&data, &sys).unwrap(), data.opcat().unwrap());
    }

    #[test]
    fn groupoid_casimir_integral_is_the_arrow_sum(g in groupoid()) {
        let data = groupoid_category(&g);
        let sys = casimir_from_comult(&data).unwrap();
        let t = integral_from_casimir(&data, &sys.casimir, Side::Left).unwrap();
        for ((x, y), v) in t.vectors.iter() {
            prop_assert_eq!(v, &Matrix::new(g.hom(x, y).len(), 1, vec![int(1); g.hom(x, y).len()]));
        }
    }

    #[test]
    fn packed_groupoid_is_the_groupoid_algebra(g in groupoid()) {
        let p = pack(&groupoid_category(&g)).unwrap();
        let n = g.objects().len();
        let d = p.dim;
        let mut expected = Matrix::zeros(d, d * d);
        for (x, y, z, w) in (0..n * n * n * n).map(|k| (k / (n * n * n), (k / (n * n)) % n, (k / n) % n, k % n)) {
            for a in 0..g.hom(x, y).len() {
                for b in 0..g.hom(z, w).len() {
                    let (i, j) = (p.offsets[(x, y)] + a, p.offsets[(z, w)] + b);
                    if y == z {
                        expected.set(p.offsets[(x, w)] + g.compose(x, y, w, a, b), i * d + j, int(1));
                    }
                }
            }
        }
        prop_assert_eq!(p.mult, expected);
        let mut unit = Matrix::zeros(d, 1);
        for x in 0..n {
            unit.set(p.offsets[(x, x)] + g.identity(x), 0, int(1));
        }
        prop_assert_eq!(p.unit, unit);
    }

    #[test]
    fn structure_files_round_trip(data in hopf_data(), scale in small_rational()) {
        let sys = {
            let t = generic_integral(&data, Side::Left).unwrap().unwrap();
            frobenius_from_hopf_integral(&data, &t).unwrap().system
        };
        let families = CandidateFamilies {
            casimir: Some(CasimirFamily::new(sys.casimir.tensors.map(|_, _, m| m.scale(&scale)))),
            trace: Some(TraceFamily::new(sys.trace.functionals)),
            left_integral: generic_integral(&data, Side::Left).unwrap(),
            right_integral: generic_integral(&data, Side::Right)
                .unwrap()
                .map(|t: IntegralFamily| t.scale(&scale)),
        };
        let s = Structure { data, families };
        prop_assert_eq!(parse_structure(&write_structure(&s)).unwrap(), s);
    }
}
