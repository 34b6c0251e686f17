//! Acceptance suite: one PASS/FAIL line per criterion, exact arithmetic.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.

use std::time::Instant;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use hopfcat::catalog::{c4_first_system, c4_second_system, fixtures, Fixture, FixtureKind};
use hopfcat::frobenius::{
    casimir_from_comult, check_casimir, check_frobenius_system, dual_basis_check, dual_frobenius, frobenius_iso_check,
    local_rigidity_check, opcat_iso_check, pack_frobenius, with_frobenius, CasimirFamily, FrobeniusSystem, TraceFamily,
};
use hopfcat::gallery::{groupoid_category, one_object, FiniteGroupoid, MonoidTable};
use hopfcat::hopf::{check_weak_hopf, pack, solve_antipode};
use hopfcat::hopf_modules::{
    coinvariants, fundamental_iso_check, fundamental_opmodule_iso_check, opmodule_coinvariants, regular_hopf_module,
    standard_structures,
};
use hopfcat::integrals::{
    casimir_from_integral, generic_integral, integral_from_casimir, left_integral_space,
    nonsingularity_report, right_integral_space, CasimirVariant, Side,
};
use hopfcat::larson_sweedler::{frobenius_from_hopf_integral, ls_report, synthesize_antipode};
use hopfcat::linalg::{int, Matrix, Rational};
use hopfcat::vcat::{dual_semi_hopf, verify_axioms, AxiomSet, OpcategoryLayer, PairMap, TripleMap, VCatData};
use hopfcat::{AxiomReport, Error};

type Verdict = Result<String, String>;

/// Criteria whose literal statement does not hold; each still runs and
/// prints FAIL. See the README section on known discrepancies.
const EXPECTED_FAILURES: &[u32] = &[3];

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn passes(what: &str, r: &AxiomReport) -> Result<(), String> {
    match r.first_failure() {
        None => Ok(()),
        Some(e) => Err(format!("{what}: `{}` fails at {:?}", e.axiom, e.indices)),
    }
}

fn err(e: Error) -> String {
    e.to_string()
}

fn fixture_data(file: &str) -> VCatData {
    fixtures().into_iter().find(|f| f.file == file).expect("listed fixture").structure.data
}

fn hopf_fixtures() -> Vec<Fixture> {
    fixtures().into_iter().filter(|f| f.kind == FixtureKind::Hopf).collect()
}

/// `v = c·w` for some nonzero rational `c`.
fn proportional(v: &Matrix, w: &Matrix) -> bool {
    if v.shape() != w.shape() || w.is_zero() || v.is_zero() {
        return false;
    }
    let k = w.entries().iter().position(|e| !e.is_zero()).expect("nonzero");
    let c = &v.entries()[k] / &w.entries()[k];
    v == &w.scale(&c)
}

fn c4() -> VCatData {
    fixture_data("c4.hopf")
}

fn system(pair: (CasimirFamily, TraceFamily)) -> FrobeniusSystem {
    FrobeniusSystem { casimir: pair.0, trace: pair.1 }
}

fn criterion_1() -> Verdict {
    let h = c4();
    let first = system(c4_first_system());
    let second = system(c4_second_system());
    for (name, sys) in [("first with unit trace", &first), ("second with g trace", &second)] {
        passes(name, &check_casimir(&h, &sys.casimir).map_err(err)?)?;
        passes(name, &check_frobenius_system(&h, sys).map_err(err)?)?;
    }
    let mismatched = FrobeniusSystem { casimir: first.casimir.clone(), trace: second.trace.clone() };
    let r = check_frobenius_system(&h, &mismatched).map_err(err)?;
    let failing: Vec<&str> = r.failures().map(|c| c.axiom.as_str()).collect();
    ensure(!failing.is_empty(), "first Casimir with g trace passes")?;
    ensure(failing.iter().all(|a| a.contains("triangle")), format!("unexpected failures {failing:?}"))?;
    ensure(r.failures().all(|c| c.witness.is_some()), "triangle failure without witness")?;
    Ok(format!("mismatched pair fails {} triangle checks", failing.len()))
}

fn criterion_2() -> Verdict {
    let h = c4();
    let sum = Matrix::column(vec![int(1); 4]);
    let first = c4_first_system().0;
    let second = c4_second_system().0;
    for (name, e) in [("first", &first), ("second", &second)] {
        let t = integral_from_casimir(&h, e, Side::Left).map_err(err)?;
        ensure(proportional(&t.vectors[(0, 0)], &sum), format!("{name} Casimir gives {:?}", t.vectors[(0, 0)]))?;
    }
    let space = left_integral_space(&h, 0).map_err(err)?;
    ensure(space.dim() == 1 && proportional(&space.basis[0].vectors[(0, 0)], &sum), "left integral space")?;
    let mut t = space.basis[0].clone();
    t.vectors[(0, 0)] = sum;
    let e = casimir_from_integral(&h, &t, CasimirVariant::Left).map_err(err)?;
    ensure(e == first, "integral does not give back the first Casimir")?;
    ensure(e != second, "integral gives the second Casimir")?;
    Ok("both Casimirs give span(Σ g^i); Σ g^i gives exactly the first".into())
}

fn criterion_3() -> Verdict {
    let km = fixture_data("km.semihopf");
    passes("semi-hopf", &verify_axioms(&km, AxiomSet::SemiHopf).map_err(err)?)?;
    match solve_antipode(&km) {
        Err(Error::NoAntipode { .. }) => {}
        other => return Err(format!("expected NoAntipode, got {other:?}")),
    }
    let space = left_integral_space(&km, 0).map_err(err)?;
    let g = Matrix::unit_vector(2, 1);
    ensure(space.dim() == 1 && proportional(&space.basis[0].vectors[(0, 0)], &g), "left integral space is not span(g)")?;
    let ns = nonsingularity_report(&km, &space.basis[0]).map_err(err)?;
    ensure(ns.p_ranks[(0, 0)] == 1 && !ns.left_nonsingular, "p-map is not of rank 1")?;

    // e ⊗ e + g ⊗ g with the trace reading off the coefficient of e
    let mut tensor = Matrix::zeros(4, 1);
    tensor.set(0, 0, int(1));
    tensor.set(3, 0, int(1));
    let stated = FrobeniusSystem {
        casimir: CasimirFamily::single(tensor),
        trace: TraceFamily::single(Matrix::unit_vector(2, 0).transpose()),
    };
    let mut r = check_casimir(&km, &stated.casimir).map_err(err)?;
    r.extend(check_frobenius_system(&km, &stated).map_err(err)?);
    if let Some(e) = r.first_failure() {
        let w = e.witness.as_ref().map(|w| format!(" on basis {}", w.basis_index)).unwrap_or_default();
        // what does hold: a Calabi-Yau system exists, so kM is Frobenius without being Hopf
        let found = ls_report(&km).map_err(err)?;
        return Err(format!(
            "semi-Hopf, NoAntipode, span(g), rank 1 all hold; stated pair fails `{}`{w}; \
             Frobenius-not-Hopf holds via {}",
            e.axiom,
            found.frobenius_source.unwrap_or_default()
        ));
    }
    Ok("stated pair is a Frobenius system".into())
}

/// `δ_{xyz}(g) = Σ_{h ∈ G(y,z)} g h^{-1} ⊗ h`, `ε_x(g) = [g = 1_x]`, computed from the tables.
fn expected_frobenius(g: &FiniteGroupoid) -> OpcategoryLayer {
    let n = g.objects().len();
    let d = |x: usize, y: usize| g.hom(x, y).len();
    OpcategoryLayer {
        cocomp: TripleMap::from_fn(n, |x, y, z| {
            let mut m = Matrix::zeros(d(x, y) * d(y, z), d(x, z));
            for a in 0..d(x, z) {
                for h in 0..d(y, z) {
                    let left = g.compose(x, z, y, a, g.inverse(y, z, h));
                    m.add_at(left * d(y, z) + h, a, &int(1));
                }
            }
            m
        }),
        counit: (0..n).map(|x| Matrix::unit_vector(d(x, x), g.identity(x)).transpose()).collect(),
    }
}

fn criterion_4() -> Verdict {
    let groupoids = [
        ("pair groupoid", FiniteGroupoid::pair(2)),
        ("one-object C2", FiniteGroupoid::from_group(&MonoidTable::cyclic(2)).map_err(err)?),
        ("C2 acting on two points", FiniteGroupoid::c2_swap()),
    ];
    for (name, g) in &groupoids {
        let data = groupoid_category(g);
        passes(name, &verify_axioms(&data, AxiomSet::Hopf).map_err(err)?)?;
        passes(name, &verify_axioms(&data, AxiomSet::Frobenius).map_err(err)?)?;
        ensure(data.opcategory.as_ref() == Some(&expected_frobenius(g)), format!("{name}: cocomposition differs"))?;
        let n = data.n();
        let l = data.local_comonoid.as_ref().ok_or("no local comonoid")?;
        let mo = data.local_monoid.as_ref().ok_or("no local monoid")?;
        for x in 0..n {
            for y in 0..n {
                let k = data.dim(x, y);
                let mut mu = Matrix::zeros(k, k * k);
                for a in 0..k {
                    mu.set(a, a * k + a, int(1));
                }
                ensure(mo.mult[(x, y)] == mu, format!("{name}: local multiplication at ({x}, {y})"))?;
                ensure(mo.unit[(x, y)] == Matrix::column(vec![int(1); k]), format!("{name}: local unit"))?;
                if k == 0 {
                    continue;
                }
                let local = one_object(
                    g.hom(x, y).to_vec(),
                    mo.mult[(x, y)].clone(),
                    mo.unit[(x, y)].clone(),
                    l.comult[(x, y)].clone(),
                    l.counit[(x, y)].clone(),
                    None,
                );
                let mut as_frobenius = local.clone();
                as_frobenius.local_comonoid = None;
                as_frobenius.opcategory = Some(OpcategoryLayer {
                    cocomp: TripleMap::from_fn(1, |_, _, _| l.comult[(x, y)].clone()),
                    counit: vec![l.counit[(x, y)].clone()],
                });
                passes(&format!("{name} local ({x}, {y})"), &verify_axioms(&as_frobenius, AxiomSet::Frobenius).map_err(err)?)?;
            }
        }
        let sys = casimir_from_comult(&data).map_err(err)?;
        let expected = PairMap::from_fn(n, |x, y| {
            let (dxy, dyx) = (data.dim(x, y), data.dim(y, x));
            let mut e = Matrix::zeros(dxy * dyx, 1);
            for a in 0..dxy {
                e.set(a * dyx + g.inverse(x, y, a), 0, int(1));
            }
            e
        });
        ensure(sys.casimir.tensors == expected, format!("{name}: Casimir is not Σ g ⊗ g⁻¹"))?;
    }
    Ok(format!("{} groupoids", groupoids.len()))
}

fn criterion_5() -> Verdict {
    let mut checked = Vec::new();
    for f in fixtures() {
        if f.structure.data.local_comonoid.is_none() {
            continue;
        }
        let r = ls_report(&f.structure.data).map_err(|e| format!("{}: {e}", f.file))?;
        ensure(r.consistent, format!("{}: {:?}", f.file, r.violations))?;
        let hopf = solve_antipode(&f.structure.data).is_ok();
        ensure(r.conditions.iter().all(|c| c.holds == hopf), format!("{}: conditions disagree with the antipode solver", f.file))?;
        checked.push(f.file);
    }
    Ok(format!("{} fixtures consistent", checked.len()))
}

fn criterion_6() -> Verdict {
    let mut n_frob = 0;
    for f in hopf_fixtures() {
        let data = &f.structure.data;
        let tl = generic_integral(data, Side::Left).map_err(err)?.ok_or("no left integral")?;
        let tr = generic_integral(data, Side::Right).map_err(err)?.ok_or("no right integral")?;
        let (s, report) = synthesize_antipode(data, &tl, &tr).map_err(|e| format!("{}: {e}", f.file))?;
        passes(f.file, &report)?;
        let solved = solve_antipode(data).map_err(err)?;
        ensure(s == solved, format!("{}: synthesized antipode differs from solved", f.file))?;
        ensure(Some(&s) == data.antipode.as_ref(), format!("{}: differs from declared antipode", f.file))?;

        let synth = frobenius_from_hopf_integral(data, &tl).map_err(|e| format!("{}: {e}", f.file))?;
        let sys = &synth.system;
        passes(f.file, &synth.report)?;
        passes(f.file, &check_casimir(data, &sys.casimir).map_err(err)?)?;
        passes(f.file, &frobenius_iso_check(data, sys).map_err(err)?)?;
        passes(f.file, &dual_basis_check(data, sys).map_err(err)?)?;
        passes(f.file, &local_rigidity_check(data, sys).map_err(err)?)?;
        passes(f.file, &verify_axioms(&with_frobenius(data, sys).map_err(err)?, AxiomSet::Frobenius).map_err(err)?)?;
        n_frob += 1;
    }
    // the known trace and Casimir of the cyclic group of order four
    let h = c4();
    let t = generic_integral(&h, Side::Left).map_err(err)?.ok_or("no integral")?;
    let sys = frobenius_from_hopf_integral(&h, &t).map_err(err)?.system;
    let (casimir, trace) = c4_first_system();
    ensure(proportional(&sys.trace.functionals[0], &trace.functionals[0]), "kC4 trace is not a multiple of δ_e")?;
    ensure(proportional(&sys.casimir.tensors[(0, 0)], &casimir.tensors[(0, 0)]), "kC4 Casimir not a multiple of #1")?;
    // groupoid and group algebra traces are multiples of the identity-detecting counit
    for f in ["c2.hopf", "klein4.hopf", "trivial.hopf", "pair2.hopf", "pair3.hopf", "c2-swap.hopf"] {
        let data = fixture_data(f);
        let t = generic_integral(&data, Side::Left).map_err(err)?.ok_or("no integral")?;
        let sys = frobenius_from_hopf_integral(&data, &t).map_err(err)?.system;
        let expected: Vec<Matrix> = match &data.opcategory {
            Some(o) => o.counit.clone(),
            None => vec![Matrix::unit_vector(data.dim(0, 0), 0).transpose()],
        };
        let flat = |v: &[Matrix]| Matrix::hstack(v);
        ensure(proportional(&flat(&sys.trace.functionals), &flat(&expected)), format!("{f}: trace not a multiple of δ_1"))?;
    }
    Ok(format!("{n_frob} Hopf fixtures; antipodes equal, Frobenius systems verified"))
}

fn criterion_7() -> Verdict {
    let mut count = 0;
    for f in hopf_fixtures() {
        let data = &f.structure.data;
        let n = data.n();
        let std = standard_structures(data).map_err(err)?;
        for (name, m) in [("regular", regular_hopf_module(data).map_err(err)?), ("H*1", std.hstar1.clone())] {
            passes(&format!("{} {name}", f.file), &fundamental_iso_check(&m).map_err(err)?.1)?;
            for x in 0..n {
                let co = coinvariants(&m, x).map_err(err)?.cols();
                for y in 0..n {
                    ensure(
                        m.module.dims[(x, y)] == co * data.dim(x, y),
                        format!("{} {name}: dim law fails at ({x}, {y})", f.file),
                    )?;
                }
            }
        }
        let h1 = &std.h1;
        passes(&format!("{} H1", f.file), &fundamental_opmodule_iso_check(h1).map_err(err)?.1)?;
        for x in 0..n {
            let co = opmodule_coinvariants(h1, x).map_err(err)?.first().map_or(0, Matrix::cols);
            for y in 0..n {
                ensure(
                    h1.opmodule.dims[(x, y)] == co * h1.base.dim(x, y),
                    format!("{} H1: dim law fails at ({x}, {y})", f.file),
                )?;
            }
            let right = right_integral_space(data, x).map_err(err)?.dim();
            ensure(right == co, format!("{}: right integrals {right} vs H1 coinvariants {co} at {x}", f.file))?;
        }
        count += 1;
    }
    Ok(format!("{count} Hopf fixtures"))
}

fn criterion_8() -> Verdict {
    for g in [FiniteGroupoid::pair(2), FiniteGroupoid::pair(3), FiniteGroupoid::c2_swap()] {
        let data = groupoid_category(&g);
        let p = pack(&data).map_err(err)?;
        passes("packed groupoid", &check_weak_hopf(&p))?;
        let one_one = (&p.unit.kron(&p.unit)).col(0);
        ensure(p.comult_of_unit() != one_one, "Δ(1) = 1 ⊗ 1 on a multi-object packing")?;
        ensure(!p.unit_is_grouplike(), "unit reported grouplike")?;
    }
    let mut reduced = 0;
    for f in hopf_fixtures().into_iter().filter(|f| f.structure.data.n() == 1) {
        let data = &f.structure.data;
        let p = pack(data).map_err(err)?;
        let back = p.as_bialgebra_data();
        ensure(
            back.category == data.category && back.local_comonoid == data.local_comonoid && back.antipode == data.antipode,
            format!("{}: packing changes the structure", f.file),
        )?;
        ensure(p.unit_is_grouplike(), format!("{}: Δ(1) ≠ 1 ⊗ 1", f.file))?;
        passes(f.file, &check_weak_hopf(&p))?;
        passes(f.file, &verify_axioms(&back, AxiomSet::Hopf).map_err(err)?)?;
        let t = generic_integral(data, Side::Left).map_err(err)?.ok_or("no integral")?;
        let sys = frobenius_from_hopf_integral(data, &t).map_err(err)?.system;
        let framed = with_frobenius(data, &sys).map_err(err)?;
        let (packed, report) = pack_frobenius(&framed).map_err(err)?;
        passes(f.file, &report)?;
        ensure(packed.comult == framed.opcategory.as_ref().unwrap().cocomp[(0, 0, 0)], "packed Frobenius comult")?;
        reduced += 1;
    }
    Ok(format!("3 groupoids weak Hopf with Δ(1) ≠ 1⊗1; {reduced} one-object fixtures unchanged"))
}

fn criterion_9() -> Verdict {
    let mut frobenius_cases = Vec::new();
    for f in hopf_fixtures() {
        let data = &f.structure.data;
        let dual = dual_semi_hopf(data).map_err(err)?;
        passes(&format!("{} dual", f.file), &verify_axioms(&dual, AxiomSet::HopfOp).map_err(err)?)?;
        let framed = match &data.opcategory {
            Some(_) => data.clone(),
            None => {
                let t = generic_integral(data, Side::Left).map_err(err)?.ok_or("no integral")?;
                let sys = frobenius_from_hopf_integral(data, &t).map_err(err)?.system;
                with_frobenius(data, &sys).map_err(err)?
            }
        };
        frobenius_cases.push((f.file.to_string(), framed));
    }
    // a cocomposition that is not Frobenius: first Casimir with the g trace
    let wrong = FrobeniusSystem { casimir: c4_first_system().0, trace: c4_second_system().1 };
    frobenius_cases.push(("kC4 mismatched".into(), with_frobenius(&c4(), &wrong).map_err(err)?));
    frobenius_cases.push(("graded kC2".into(), fixture_data("c2-graded.frobenius")));
    let mut negatives = 0;
    for (name, framed) in &frobenius_cases {
        let direct = verify_axioms(framed, AxiomSet::Frobenius).map_err(err)?.passed();
        let (_, dual_report) = dual_frobenius(framed).map_err(err)?;
        ensure(direct == dual_report.passed(), format!("{name}: Frobenius {direct} but dual {}", dual_report.passed()))?;
        if direct {
            let sys = casimir_from_comult(framed).map_err(err)?;
            passes(&format!("{name} ψ"), &opcat_iso_check(framed, &sys).map_err(err)?)?;
        } else {
            negatives += 1;
        }
    }
    ensure(negatives == 1, "the mismatched system was not rejected")?;
    Ok(format!("{} cases, {negatives} non-Frobenius rejected on both sides", frobenius_cases.len()))
}

/// A random nonzero rational with small numerator and denominator.
fn nonzero(rng: &mut ChaCha8Rng) -> Rational {
    loop {
        let p: i64 = rng.gen_range(-5..=5);
        if p != 0 {
            return Rational::new(p.into(), rng.gen_range(1..=3i64).into());
        }
    }
}

/// Adds a nonzero amount to one random entry of one random block; `None` if the chosen block is empty.
fn bump(blocks: Vec<&mut Matrix>, rng: &mut ChaCha8Rng) -> Option<String> {
    let nonempty: Vec<&mut Matrix> = blocks.into_iter().filter(|m| m.rows() * m.cols() > 0).collect();
    if nonempty.is_empty() {
        return None;
    }
    let k = rng.gen_range(0..nonempty.len());
    let m = nonempty.into_iter().nth(k).unwrap();
    let (i, j) = (rng.gen_range(0..m.rows()), rng.gen_range(0..m.cols()));
    m.add_at(i, j, &nonzero(rng));
    Some(format!("block {k} entry ({i}, {j})"))
}

fn perturb(base: &VCatData, rng: &mut ChaCha8Rng) -> Option<(VCatData, AxiomSet, String)> {
    let mut data = base.clone();
    let layer = rng.gen_range(0..8);
    let (set, name) = match layer {
        0 => (AxiomSet::Hopf, "composition"),
        1 => (AxiomSet::Hopf, "unit"),
        2 => (AxiomSet::Hopf, "local comultiplication"),
        3 => (AxiomSet::Hopf, "local counit"),
        4 => (AxiomSet::Hopf, "antipode"),
        5 => (AxiomSet::Frobenius, "cocomposition"),
        6 => (AxiomSet::Frobenius, "counit"),
        _ => (AxiomSet::SemiHopfOp, "local multiplication"),
    };
    let where_ = match layer {
        0 => bump(data.category.as_mut()?.comp.values_mut().collect(), rng),
        1 => bump(data.category.as_mut()?.unit.iter_mut().collect(), rng),
        2 => bump(data.local_comonoid.as_mut()?.comult.values_mut().collect(), rng),
        3 => bump(data.local_comonoid.as_mut()?.counit.values_mut().collect(), rng),
        4 => bump(data.antipode.as_mut()?.values_mut().collect(), rng),
        5 => bump(data.opcategory.as_mut()?.cocomp.values_mut().collect(), rng),
        6 => bump(data.opcategory.as_mut()?.counit.iter_mut().collect(), rng),
        _ => bump(data.local_monoid.as_mut()?.mult.values_mut().collect(), rng),
    }?;
    Some((data, set, format!("{name} {where_}")))
}

fn criterion_10() -> Verdict {
    let pool: Vec<(String, VCatData)> = hopf_fixtures().into_iter().map(|f| (f.file.to_string(), f.structure.data)).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_1234);
    let mut done = 0;
    let mut attempts = 0;
    while done < 100 {
        attempts += 1;
        ensure(attempts < 10_000, "could not draw 100 perturbations")?;
        let (file, base) = &pool[rng.gen_range(0..pool.len())];
        let Some((data, set, what)) = perturb(base, &mut rng) else { continue };
        let report = verify_axioms(&data, set).map_err(err)?;
        let witnessed = report.failures().any(|c| c.witness.as_ref().is_some_and(|w| w.residual.iter().any(|r| !r.is_zero())));
        ensure(witnessed, format!("{file}: perturbed {what} passes {set} without a witness"))?;
        done += 1;
    }
    Ok(format!("{done} perturbations, each caught with a nonzero residual"))
}

#[test]
fn acceptance() {
    let criteria: [(u32, &str, fn() -> Verdict); 10] = [
        (1, "kC4 Frobenius systems", criterion_1),
        (2, "kC4 integral round trip", criterion_2),
        (3, "kM Frobenius but not Hopf", criterion_3),
        (4, "groupoid suite", criterion_4),
        (5, "Larson-Sweedler consistency", criterion_5),
        (6, "synthesis equality", criterion_6),
        (7, "fundamental theorem dimension law", criterion_7),
        (8, "packing", criterion_8),
        (9, "duality", criterion_9),
        (10, "perturbation oracle", criterion_10),
    ];
    println!();
    let start = Instant::now();
    let mut failed = Vec::new();
    for (k, name, run) in criteria {
        let t = Instant::now();
        let verdict = run();
        let ms = t.elapsed().as_millis();
        match &verdict {
            Ok(detail) => println!("PASS {k:>2} {name}: {detail} [{ms} ms]"),
            Err(reason) => {
                println!("FAIL {k:>2} {name}: {reason} [{ms} ms]");
                failed.push(k);
            }
        }
    }
    let total = start.elapsed();
    println!("total {:.2} s", total.as_secs_f64());
    assert_eq!(failed, EXPECTED_FAILURES, "criteria failing differ from the documented set");
}
