//! The equivalence battery.

use super::{diagonal_inverses, frobenius_from_hopf_integral, require_hopf, synthesize_antipode, synthesize_right_antipode, PqMap};
use crate::error::{Error, Result};
use crate::frobenius::{find_frobenius_system, local_frobenius_check, opcat_iso_check, FrobeniusSystem};
use crate::hopf::solve_antipode;
use crate::integrals::{integral_space, nonsingularity_report, opcategory_integral_space, IntegralFamily, Side};
use crate::report::AxiomReport;
use crate::vcat::{dual_semi_hopf, verify_axioms, AntipodeFamily, AxiomSet, VCatData};

/// Candidate traces tried per object when searching for a Frobenius structure
/// on data that is neither Hopf nor carries an opcategory layer.
const FROBENIUS_SEARCH_LIMIT: usize = 400;

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct LsCondition {
    pub label: String,
    pub description: String,
    pub holds: bool,
}

#[derive(Debug, Clone)]
pub struct LSReport {
    pub semi_hopf: bool,
    pub hopf: bool,
    pub antipode_invertible: Option<bool>,
    /// Some integral of this side has every `p_{xx}` and `q_{xx}` invertible.
    pub nonsingular_left_integral: bool,
    pub nonsingular_right_integral: bool,
    /// Some left integral has every `q_{xx}` invertible.
    pub right_nonsingular_left_integral: bool,
    pub left_integral_dims: Vec<usize>,
    pub right_integral_dims: Vec<usize>,
    /// The category admits some Frobenius structure.
    pub frobenius: bool,
    pub frobenius_source: Option<String>,
    pub dimension_condition: bool,
    pub conditions: Vec<LsCondition>,
    /// Failed implications and disagreements between the conditions.
    pub violations: Vec<String>,
    pub consistent: bool,
    /// The dual opcategory satisfies the dual of "Hopf with one-dimensional integrals".
    pub dual_condition: Option<bool>,
    /// Frobenius without being Hopf.
    pub frobenius_not_hopf: bool,
    pub antipode: Option<AntipodeFamily>,
    pub synthesized_antipode: Option<AntipodeFamily>,
    pub frobenius_system: Option<FrobeniusSystem>,
    pub notes: Vec<String>,
}

/// First basis vector per anchor passing `accept`; falls back to the first
/// basis vector. Returns the summed family and whether every anchor passed.
fn choose_integral(
    data: &VCatData,
    side: Side,
    accept: impl Fn(usize, &IntegralFamily) -> bool,
    notes: &mut Vec<String>,
) -> Result<(Option<IntegralFamily>, bool)> {
    let mut total = IntegralFamily::zero(data, side);
    let mut all = true;
    for anchor in 0..data.n() {
        let space = integral_space(data, anchor, side)?;
        if space.dim() >= 2 {
            notes.push(format!(
                "{side:?} integral space at object {anchor} has dimension {}; only its basis vectors were tested",
                space.dim()
            ));
        }
        match space.basis.iter().find(|t| accept(anchor, t)).or(space.basis.first()) {
            Some(t) => {
                all &= accept(anchor, t);
                total = total.add(t);
            }
            None => return Ok((None, false)),
        }
    }
    Ok((Some(total), all))
}

fn diagonal_invertible(data: &VCatData, t: &IntegralFamily, x: usize, which: PqMap) -> bool {
    nonsingularity_report(data, t).is_ok_and(|r| {
        let ranks = if which == PqMap::P { &r.p_ranks } else { &r.q_ranks };
        ranks[(x, x)] == data.dim(x, x)
    })
}

pub fn ls_report(data: &VCatData) -> Result<LSReport> {
    let n = data.n();
    let semi_hopf = verify_axioms(data, AxiomSet::SemiHopf)?.passed();
    let mut notes = Vec::new();
    let mut violations = Vec::new();

    let solved = match solve_antipode(data) {
        Ok(s) => Some(s),
        Err(Error::NoAntipode { .. }) | Err(Error::AxiomsFailed(_)) => None,
        Err(e) => return Err(e),
    };
    let hopf = solved.is_some();
    let antipode_invertible = solved.as_ref().map(|s| s.iter().all(|(_, m)| m.rows() == m.cols() && m.rank() == m.rows()));
    let with_antipode = solved.as_ref().map(|s| {
        let mut d = data.clone();
        d.antipode = Some(s.clone());
        d
    });

    let both = |x: usize, t: &IntegralFamily| {
        diagonal_invertible(data, t, x, PqMap::P) && diagonal_invertible(data, t, x, PqMap::Q)
    };
    let (left_t, nonsingular_left_integral) = choose_integral(data, Side::Left, both, &mut notes)?;
    let (right_t, nonsingular_right_integral) = choose_integral(data, Side::Right, both, &mut Vec::new())?;
    let (q_left_t, right_nonsingular_left_integral) =
        choose_integral(data, Side::Left, |x, t| diagonal_invertible(data, t, x, PqMap::Q), &mut Vec::new())?;
    let left_integral_dims: Vec<usize> =
        (0..n).map(|x| integral_space(data, x, Side::Left).map(|s| s.dim())).collect::<Result<_>>()?;
    let right_integral_dims: Vec<usize> =
        (0..n).map(|x| integral_space(data, x, Side::Right).map(|s| s.dim())).collect::<Result<_>>()?;
    let dimension_condition = (0..n).all(|x| (0..n).all(|y| data.dim(x, y) == 0 || data.dim(x, y) == data.dim(y, y)));

    // Frobenius: synthesized from an integral on Hopf data, otherwise checked or searched.
    let mut frobenius_system = None;
    let mut frobenius_source = None;
    if let (Some(h), Some(t), true) = (&with_antipode, &left_t, nonsingular_left_integral) {
        if let Ok(syn) = frobenius_from_hopf_integral(h, t) {
            if syn.report.passed() {
                frobenius_system = Some(syn.system);
                frobenius_source = Some("synthesized from a non-singular left integral".to_string());
            }
        }
    }
    if frobenius_system.is_none() && data.opcategory.is_some() && verify_axioms(data, AxiomSet::Frobenius)?.passed() {
        frobenius_system = Some(crate::frobenius::casimir_from_comult(data)?);
        frobenius_source = Some("supplied opcategory layer".to_string());
    }
    if frobenius_system.is_none() {
        if let Some(sys) = find_frobenius_system(data, FROBENIUS_SEARCH_LIMIT)? {
            frobenius_system = Some(sys);
            frobenius_source = Some("trace search".to_string());
        }
    }
    let frobenius = frobenius_system.is_some();

    // Synthesis implications.
    let mut synthesized_antipode = None;
    if let (Some(tl), Some(tr), true, true) = (&left_t, &right_t, nonsingular_left_integral, nonsingular_right_integral) {
        match synthesize_antipode(data, tl, tr) {
            Ok((s, report)) => {
                if !report.passed() {
                    violations.push("non-singular integrals: synthesized antipode fails the Hopf axioms".into());
                }
                if solved.as_ref() != Some(&s) {
                    violations.push("non-singular integrals: synthesized antipode differs from the solved one".into());
                }
                if !s.iter().all(|(_, m)| m.rows() == m.cols() && m.rank() == m.rows()) {
                    violations.push("non-singular integrals: synthesized antipode is not invertible".into());
                }
                synthesized_antipode = Some(s);
            }
            Err(e) => violations.push(format!("non-singular integrals: antipode synthesis failed ({e})")),
        }
        if frobenius_source.as_deref() != Some("synthesized from a non-singular left integral") {
            violations.push("non-singular integrals: Frobenius synthesis failed".into());
        }
    }
    if let (Some(t), true) = (&q_left_t, right_nonsingular_left_integral) {
        let qbar = diagonal_inverses(data, t, PqMap::Q)?;
        let (s, report) = synthesize_right_antipode(data, t, &qbar)?;
        if !report.passed() {
            violations.push("right non-singular left integral: synthesized right antipode fails".into());
        }
        if dimension_condition {
            let mut d = data.clone();
            d.antipode = Some(s.clone());
            if !verify_axioms(&d, AxiomSet::Hopf)?.passed() {
                violations.push("right antipode under the dimension condition is not two-sided".into());
            }
        }
        synthesized_antipode.get_or_insert(s);
    }

    let one_dim = |dims: &[usize]| dims.iter().all(|&d| d == 1);
    let conditions = vec![
        cond("hopf-nonsingular-right", "Hopf with a non-singular right integral", hopf && nonsingular_right_integral),
        cond("nonsingular-both", "non-singular left and right integrals", nonsingular_left_integral && nonsingular_right_integral),
        cond("hopf-frobenius", "Hopf and Frobenius", hopf && frobenius),
        cond("hopf-left-lines", "Hopf with one-dimensional left integral spaces", hopf && one_dim(&left_integral_dims)),
        cond("hopf-nonsingular-left", "Hopf with a non-singular left integral", hopf && nonsingular_left_integral),
        cond("hopf-right-lines", "Hopf with one-dimensional right integral spaces", hopf && one_dim(&right_integral_dims)),
        cond(
            "dimension-law",
            "right non-singular left integral and the dimension condition",
            right_nonsingular_left_integral && dimension_condition,
        ),
        cond("hopf", "Hopf", hopf),
    ];
    let first = conditions[0].holds;
    for c in &conditions[1..] {
        if c.holds != first {
            violations.push(format!("condition `{}` disagrees with `{}`", c.label, conditions[0].label));
        }
    }

    let dual_condition = if hopf {
        let h = with_antipode.as_ref().expect("hopf data");
        let dual = dual_semi_hopf(h)?;
        let dims: Vec<usize> = (0..n)
            .map(|z| opcategory_integral_space(&dual, z, Side::Left).map(|m| m.cols()))
            .collect::<Result<_>>()?;
        Some(verify_axioms(&dual, AxiomSet::HopfOp)?.passed() && one_dim(&dims))
    } else {
        None
    };
    if let Some(dc) = dual_condition {
        if dc != first {
            violations.push("the dual condition disagrees with `hopf-nonsingular-right`".into());
        }
    }
    if hopf && frobenius && !(one_dim(&left_integral_dims) && one_dim(&right_integral_dims)) {
        violations.push("Hopf and Frobenius but some integral space is not one-dimensional".into());
    }
    if hopf && !dimension_condition {
        violations.push("Hopf but the dimension condition fails".into());
    }

    let consistent = violations.is_empty();
    Ok(LSReport {
        semi_hopf,
        hopf,
        antipode_invertible,
        nonsingular_left_integral,
        nonsingular_right_integral,
        right_nonsingular_left_integral,
        left_integral_dims,
        right_integral_dims,
        frobenius,
        frobenius_source,
        dimension_condition,
        conditions,
        violations,
        consistent,
        dual_condition,
        frobenius_not_hopf: frobenius && !hopf,
        antipode: solved,
        synthesized_antipode,
        frobenius_system,
        notes,
    })
}

fn cond(label: &str, description: &str, holds: bool) -> LsCondition {
    LsCondition { label: label.into(), description: description.into(), holds }
}

/// The conditions equivalent to Frobenius for Hopf data, plus the
/// self-duality certificate. Vacuous on non-Hopf data.
#[derive(Debug, Clone)]
pub struct GeneralLsReport {
    pub hopf: bool,
    pub frobenius: bool,
    pub left_integrals_one_dim: bool,
    pub locally_frobenius: bool,
    pub dual_integrals_one_dim: bool,
    pub iso_certified: bool,
    pub report: AxiomReport,
}

impl GeneralLsReport {
    pub fn all_hold(&self) -> bool {
        self.hopf
            && self.frobenius
            && self.left_integrals_one_dim
            && self.locally_frobenius
            && self.dual_integrals_one_dim
            && self.iso_certified
    }

    pub fn vacuous(&self) -> bool {
        !self.hopf
    }
}

pub fn general_ls_check(data: &VCatData) -> Result<GeneralLsReport> {
    let mut out = GeneralLsReport {
        hopf: false,
        frobenius: false,
        left_integrals_one_dim: false,
        locally_frobenius: false,
        dual_integrals_one_dim: false,
        iso_certified: false,
        report: AxiomReport::new(),
    };
    if require_hopf(data).is_err() {
        return Ok(out);
    }
    out.hopf = true;
    let n = data.n();
    let left = crate::integrals::generic_integral(data, Side::Left)?;
    let right = crate::integrals::generic_integral(data, Side::Right)?;
    out.left_integrals_one_dim =
        (0..n).map(|x| integral_space(data, x, Side::Left).map(|s| s.dim() == 1)).collect::<Result<Vec<_>>>()?.into_iter().all(|b| b);
    if let Some(t) = &left {
        if let Ok(syn) = frobenius_from_hopf_integral(data, t) {
            out.frobenius = syn.report.passed();
            let iso = opcat_iso_check(data, &syn.system)?;
            out.iso_certified = iso.passed();
            out.report.extend(syn.report);
            out.report.extend(iso);
        }
    }
    if let Some(t) = &right {
        let local = local_frobenius_check(data, t)?;
        out.locally_frobenius = local.passed();
        out.report.extend(local);
    }
    let dual = dual_semi_hopf(data)?;
    out.dual_integrals_one_dim = (0..n)
        .map(|z| opcategory_integral_space(&dual, z, Side::Left).map(|m| m.cols() == 1))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .all(|b| b);
    Ok(out)
}
