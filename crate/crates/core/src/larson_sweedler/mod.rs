//! Antipodes and Frobenius systems synthesized from non-singular integrals,
//! and the battery of equivalent conditions relating them.

mod report;

pub use report::{general_ls_check, ls_report, GeneralLsReport, LSReport, LsCondition};

use crate::error::{Error, Result};
use crate::frobenius::{check_frobenius_system, frobenius_iso_check, psi_phi, FrobeniusIsos, FrobeniusSystem, TraceFamily};
use crate::hopf::{antipode_side_report, check_op_antipode, AntipodeSides};
use crate::integrals::{casimir_from_integral, pq_maps, CasimirVariant, IntegralFamily, Side};
use crate::linalg::{eye, Matrix};
use crate::report::AxiomReport;
use crate::vcat::{opposite_variants, verify_axioms, AntipodeFamily, AxiomSet, PairMap, Variant, VCatData};

/// Which of the two diagonal maps of an integral to invert.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PqMap {
    /// `p(f) = f(t_1)t_2`
    P,
    /// `q(f) = t_1 f(t_2)`
    Q,
}

/// Inverses of `p_{xx}` or `q_{xx}` for every object.
pub fn diagonal_inverses(data: &VCatData, t: &IntegralFamily, which: PqMap) -> Result<Vec<Matrix>> {
    let pq = pq_maps(data, t)?;
    let (maps, name) = match which {
        PqMap::P => (&pq.p, "p"),
        PqMap::Q => (&pq.q, "q"),
    };
    (0..data.n())
        .map(|x| maps[(x, x)].invert().map_err(|_| Error::SingularIntegral { map: name, object: x }))
        .collect()
}

fn require_inverses(data: &VCatData, t: &IntegralFamily, bars: &[Matrix], which: PqMap) -> Result<()> {
    let pq = pq_maps(data, t)?;
    let (maps, name) = match which {
        PqMap::P => (&pq.p, "p"),
        PqMap::Q => (&pq.q, "q"),
    };
    for x in 0..data.n() {
        let d = data.dim(x, x);
        let ok = bars.get(x).is_some_and(|b| b.shape() == (d, d) && &maps[(x, x)] * b == eye(d));
        if !ok {
            return Err(Error::SingularIntegral { map: name, object: x });
        }
    }
    Ok(())
}

/// `f_x = q̄_x(u_x)` or `g_y = p̄_y(u_y)` as a functional row.
fn unit_functional(data: &VCatData, bar: &Matrix, x: usize) -> Result<Matrix> {
    Ok((bar * &data.cat()?.unit[x]).transpose())
}

/// `s_{xy}(a) = t^{yx}_1 · f_x(a · t^{yx}_2)` from a left integral whose `q_{xx}` are
/// inverted by `qbar`; the report certifies the right antipode diagram.
pub fn synthesize_right_antipode(
    data: &VCatData,
    t: &IntegralFamily,
    qbar: &[Matrix],
) -> Result<(AntipodeFamily, AxiomReport)> {
    expect_side(t, Side::Left)?;
    require_inverses(data, t, qbar, PqMap::Q)?;
    let c = data.cat()?;
    let l = data.comonoid()?;
    let n = data.n();
    let f: Vec<Matrix> = (0..n).map(|x| unit_functional(data, &qbar[x], x)).collect::<Result<_>>()?;
    let s = PairMap::from_fn(n, |x, y| {
        let (dxy, dyx) = (data.dim(x, y), data.dim(y, x));
        let split = (&l.comult[(y, x)] * &t.vectors[(y, x)]).reshape(dyx, dyx);
        let pairing = (&f[x] * &c.comp[(x, y, x)]).reshape(dxy, dyx);
        &split * &pairing.transpose()
    });
    let report = antipode_side_report(data, &s, AntipodeSides::Right)?;
    Ok((s, report))
}

/// `s'_{xy}(a) = g_y(t^{yx}_1 · a) t^{yx}_2` from a right integral whose `p_{yy}` are
/// inverted by `pbar`; the report certifies the left antipode diagram.
pub fn synthesize_left_antipode(
    data: &VCatData,
    t: &IntegralFamily,
    pbar: &[Matrix],
) -> Result<(AntipodeFamily, AxiomReport)> {
    expect_side(t, Side::Right)?;
    require_inverses(data, t, pbar, PqMap::P)?;
    let c = data.cat()?;
    let l = data.comonoid()?;
    let n = data.n();
    let g: Vec<Matrix> = (0..n).map(|y| unit_functional(data, &pbar[y], y)).collect::<Result<_>>()?;
    let s = PairMap::from_fn(n, |x, y| {
        let (dxy, dyx) = (data.dim(x, y), data.dim(y, x));
        let split = (&l.comult[(y, x)] * &t.vectors[(y, x)]).reshape(dyx, dyx);
        let pairing = (&g[y] * &c.comp[(y, x, y)]).reshape(dyx, dxy);
        &split.transpose() * &pairing
    });
    let report = antipode_side_report(data, &s, AntipodeSides::Left)?;
    Ok((s, report))
}

/// Both one-sided syntheses; they must agree and the result must pass the full
/// Hopf axioms.
pub fn synthesize_antipode(
    data: &VCatData,
    left_integral: &IntegralFamily,
    right_integral: &IntegralFamily,
) -> Result<(AntipodeFamily, AxiomReport)> {
    let qbar = diagonal_inverses(data, left_integral, PqMap::Q)?;
    let pbar = diagonal_inverses(data, right_integral, PqMap::P)?;
    let (right, mut report) = synthesize_right_antipode(data, left_integral, &qbar)?;
    let (left, left_report) = synthesize_left_antipode(data, right_integral, &pbar)?;
    report.extend(left_report);
    for ((x, y), s) in right.iter() {
        report.compare("one-sided antipodes agree", &[x, y], s, &left[(x, y)]);
    }
    let mut with = data.clone();
    with.antipode = Some(right.clone());
    report.extend(verify_axioms(&with, AxiomSet::Hopf)?);
    Ok((right, report))
}

fn expect_side(t: &IntegralFamily, side: Side) -> Result<()> {
    if t.side == side {
        Ok(())
    } else {
        Err(Error::InvalidFrobeniusSystem(format!("expected a {side:?} integral family").to_lowercase()))
    }
}

/// Integrals of the opposite category: left and right swap, indices transpose.
fn opposite_integral(t: &IntegralFamily) -> IntegralFamily {
    let n = t.vectors.objects();
    IntegralFamily { side: t.side.flipped(), vectors: PairMap::from_fn(n, |x, y| t.vectors[(y, x)].clone()) }
}

/// Op-antipode (stored at `(a, b)` as `A_{a,b} -> A_{b,a}`) synthesized as an
/// antipode of the opposite category. A left integral with inverted `p`
/// yields the left op-antipode, a right integral with inverted `q` the right
/// one; with both, they must agree and invert `s` when `data` carries one.
pub fn synthesize_op_antipode(
    data: &VCatData,
    left: Option<(&IntegralFamily, &[Matrix])>,
    right: Option<(&IntegralFamily, &[Matrix])>,
) -> Result<(AntipodeFamily, AxiomReport)> {
    let mut opposite = opposite_variants(data, Variant::Op);
    opposite.antipode = None;
    let n = data.n();
    let back = |s: &AntipodeFamily| PairMap::from_fn(n, |a, b| s[(b, a)].clone());
    let mut report = AxiomReport::new();
    let mut from_left = None;
    if let Some((t, pbar)) = left {
        expect_side(t, Side::Left)?;
        let (s, _) = synthesize_left_antipode(&opposite, &opposite_integral(t), pbar)?;
        let sbar = back(&s);
        report.extend(filtered(check_op_antipode(data, &sbar)?, "left op-antipode"));
        from_left = Some(sbar);
    }
    let mut from_right = None;
    if let Some((t, qbar)) = right {
        expect_side(t, Side::Right)?;
        let (s, _) = synthesize_right_antipode(&opposite, &opposite_integral(t), qbar)?;
        let sbar = back(&s);
        report.extend(filtered(check_op_antipode(data, &sbar)?, "right op-antipode"));
        from_right = Some(sbar);
    }
    let sbar = match (from_left, from_right) {
        (Some(a), Some(b)) => {
            for ((x, y), m) in a.iter() {
                report.compare("one-sided op-antipodes agree", &[x, y], m, &b[(x, y)]);
            }
            if let Some(s) = &data.antipode {
                for x in 0..n {
                    for y in 0..n {
                        let round = &a[(y, x)] * &s[(x, y)];
                        report.compare("op-antipode inverts antipode", &[x, y], &round, &eye(data.dim(x, y)));
                    }
                }
            }
            a
        }
        (Some(a), None) | (None, Some(a)) => a,
        (None, None) => return Err(Error::InvalidFrobeniusSystem("no integral supplied".into())),
    };
    Ok((sbar, report))
}

fn filtered(report: AxiomReport, axiom: &str) -> AxiomReport {
    let mut out = AxiomReport::new();
    for e in report.entries_for(axiom) {
        out.checks.push(e.clone());
    }
    out
}

/// A synthesized Frobenius system with its module isomorphisms.
#[derive(Debug, Clone)]
pub struct FrobeniusSynthesis {
    pub system: FrobeniusSystem,
    pub isos: FrobeniusIsos,
    pub report: AxiomReport,
}

/// `(e_t, ν)` with `e_t^{xy} = (1 ⊗ s_{xy})Δ t^{xy}` and `ν_x = f_x ∘ s_{xx}^{-1}`
/// for a non-singular left integral `t` on Hopf data.
pub fn frobenius_from_hopf_integral(data: &VCatData, t: &IntegralFamily) -> Result<FrobeniusSynthesis> {
    expect_side(t, Side::Left)?;
    require_hopf(data)?;
    diagonal_inverses(data, t, PqMap::P)?;
    let qbar = diagonal_inverses(data, t, PqMap::Q)?;
    let s = data.antipode()?;
    let n = data.n();
    let functionals = (0..n)
        .map(|x| -> Result<Matrix> {
            let f = unit_functional(data, &qbar[x], x)?;
            let sinv = s[(x, x)].invert().map_err(|_| Error::NotInvertibleAntipode { pair: (x, x) })?;
            Ok(&f * &sinv)
        })
        .collect::<Result<Vec<_>>>()?;
    let casimir = casimir_from_integral(data, t, CasimirVariant::Left)?;
    let system = FrobeniusSystem { casimir, trace: TraceFamily { functionals } };
    let mut report = check_frobenius_system(data, &system)?;
    report.extend(frobenius_iso_check(data, &system)?);
    let isos = psi_phi(data, &system)?;
    let pq = pq_maps(data, t)?;
    for x in 0..n {
        for y in 0..n {
            // φ_{yx}(f) = f(t_1)s(t_2) and φ'_{xy}(f) = t_1 f(s(t_2)) on t = t^{xy}.
            let lhs = &s[(x, y)] * &pq.p[(x, y)];
            report.compare("phi factors through p", &[x, y], &lhs, &isos.phi[(y, x)]);
            let lhs = &pq.q[(x, y)] * &s[(x, y)].transpose();
            report.compare("left phi factors through q", &[x, y], &lhs, &isos.phi_left[(x, y)]);
        }
    }
    Ok(FrobeniusSynthesis { system, isos, report })
}

/// Given Hopf data and the system `e_t` induced by `t`, certifies that every
/// `p_{xy}` and `q_{xy}` is invertible together with the two factorizations.
pub fn nonsingularity_from_frobenius(data: &VCatData, t: &IntegralFamily, sys: &FrobeniusSystem) -> Result<AxiomReport> {
    require_hopf(data)?;
    let s = data.antipode()?;
    let n = data.n();
    let mut report = AxiomReport::new();
    let induced = casimir_from_integral(data, t, CasimirVariant::Left)?;
    report.assert("system induced by the integral", &[], induced == sys.casimir);
    let full = crate::frobenius::with_frobenius(data, sys)?;
    report.extend(verify_axioms(&full, AxiomSet::Frobenius)?);
    let isos = psi_phi(data, sys)?;
    let pq = pq_maps(data, t)?;
    for x in 0..n {
        for y in 0..n {
            let d = data.dim(x, y);
            report.assert("p invertible", &[x, y], pq.p[(x, y)].rank() == d);
            report.assert("q invertible", &[x, y], pq.q[(x, y)].rank() == d);
            report.compare("phi factors through p", &[x, y], &(&s[(x, y)] * &pq.p[(x, y)]), &isos.phi[(y, x)]);
            report.compare(
                "left phi factors through q",
                &[x, y],
                &(&pq.q[(x, y)] * &s[(x, y)].transpose()),
                &isos.phi_left[(x, y)],
            );
        }
    }
    Ok(report)
}

pub(crate) fn require_hopf(data: &VCatData) -> Result<()> {
    if data.antipode.is_none() {
        return Err(Error::NotHopf("no antipode layer".into()));
    }
    let report = verify_axioms(data, AxiomSet::Hopf)?;
    match report.first_failure() {
        None => Ok(()),
        Some(e) => Err(Error::NotHopf(format!("{} fails at {:?}", e.axiom, e.indices))),
    }
}

#[cfg(test)]
mod tests;
