//! Group-graded algebras as categories on the group: `Ã_{x,y} = A_{x⁻¹y}`.

use super::MonoidTable;
use crate::error::{Error, Result};
use crate::frobenius::{frobenius_system_from_trace, with_frobenius, FrobeniusSystem, TraceFamily};
use crate::linalg::{chain, eye, Matrix};
use crate::report::AxiomReport;
use crate::vcat::{middle_swap, CategoryLayer, ComonoidLayer, PairMap, TripleMap, VCatData, VGraphShape};

/// A family of coalgebras `H_g` with graded multiplication, unit, optional
/// crossing `ψ^g_h: H_g -> H_{hgh⁻¹}` and antipodes `s_g: H_g -> H_{g⁻¹}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HopfGAlgebraData {
    pub group: MonoidTable,
    pub dims: Vec<usize>,
    pub comult: Vec<Matrix>,
    pub counit: Vec<Matrix>,
    /// `mult[g][h]: H_g ⊗ H_h -> H_{gh}`.
    pub mult: Vec<Vec<Matrix>>,
    /// Column in `H_1`.
    pub unit: Matrix,
    /// `crossing[g][h] = ψ^g_h`.
    pub crossing: Option<Vec<Vec<Matrix>>>,
    pub antipode: Vec<Matrix>,
}

impl HopfGAlgebraData {
    /// Every component equal to the same Hopf algebra `h`, with trivial crossing.
    /// Meaningful when `h` is graded trivially, e.g. for abelian `G`.
    pub fn constant(group: MonoidTable, h: &VCatData) -> Result<Self> {
        let c = h.cat()?;
        let l = h.comonoid()?;
        let s = h.antipode()?;
        let k = group.order();
        let d = h.dim(0, 0);
        Ok(HopfGAlgebraData {
            dims: vec![d; k],
            comult: vec![l.comult[(0, 0)].clone(); k],
            counit: vec![l.counit[(0, 0)].clone(); k],
            mult: vec![vec![c.comp[(0, 0, 0)].clone(); k]; k],
            unit: c.unit[0].clone(),
            crossing: Some(vec![vec![eye(d); k]; k]),
            antipode: vec![s[(0, 0)].clone(); k],
            group,
        })
    }
}

fn inverse(g: &MonoidTable, a: usize) -> Result<usize> {
    g.inverse(a).ok_or_else(|| Error::InvalidGAlgebra("grading monoid is not a group".into()))
}

fn expect(what: &str, m: &Matrix, shape: (usize, usize)) -> Result<()> {
    if m.shape() == shape {
        Ok(())
    } else {
        Err(Error::InvalidGAlgebra(format!("{what} has shape {:?}, expected {shape:?}", m.shape())))
    }
}

/// Coalgebra, multiplication, unit, crossing and antipode axioms.
/// The crossing axioms are the standard ones: `ψ^g_1 = 1`,
/// `ψ^{hgh⁻¹}_l ψ^g_h = ψ^g_{lh}`, multiplicativity, unitality and coalgebra maps.
pub fn check_hopf_g_algebra(h: &HopfGAlgebraData) -> Result<AxiomReport> {
    let g = &h.group;
    let k = g.order();
    let d = &h.dims;
    let inv: Vec<usize> = (0..k).map(|a| inverse(g, a)).collect::<Result<_>>()?;
    let e = g.identity();
    if d.len() != k || h.comult.len() != k || h.counit.len() != k || h.mult.len() != k || h.antipode.len() != k {
        return Err(Error::InvalidGAlgebra("one component per group element expected".into()));
    }
    for a in 0..k {
        expect("comultiplication", &h.comult[a], (d[a] * d[a], d[a]))?;
        expect("counit", &h.counit[a], (1, d[a]))?;
        expect("antipode", &h.antipode[a], (d[inv[a]], d[a]))?;
        for b in 0..k {
            expect("multiplication", &h.mult[a][b], (d[g.mul(a, b)], d[a] * d[b]))?;
        }
    }
    expect("unit", &h.unit, (d[e], 1))?;
    let mut r = AxiomReport::new();
    for a in 0..k {
        let delta = &h.comult[a];
        let i = eye(d[a]);
        r.compare("coassociativity", &[a], &(&delta.kron(&i) * delta), &(&i.kron(delta) * delta));
        r.compare("left counit", &[a], &(&h.counit[a].kron(&i) * delta), &i);
        r.compare("right counit", &[a], &(&i.kron(&h.counit[a]) * delta), &i);
    }
    for a in 0..k {
        for b in 0..k {
            let m = &h.mult[a][b];
            let ab = g.mul(a, b);
            for c in 0..k {
                let lhs = &h.mult[ab][c] * &m.kron(&eye(d[c]));
                let rhs = &h.mult[a][g.mul(b, c)] * &eye(d[a]).kron(&h.mult[b][c]);
                r.compare("associativity", &[a, b, c], &lhs, &rhs);
            }
            let lhs = &h.comult[ab] * m;
            let rhs = chain(&[&h.comult[a].kron(&h.comult[b]), &middle_swap(d[a], d[a], d[b], d[b]), &m.kron(m)]);
            r.compare("multiplication preserves comultiplication", &[a, b], &lhs, &rhs);
            r.compare(
                "multiplication preserves counit",
                &[a, b],
                &(&h.counit[ab] * m),
                &h.counit[a].kron(&h.counit[b]),
            );
        }
        let i = eye(d[a]);
        r.compare("right unit", &[a], &(&h.mult[a][e] * &i.kron(&h.unit)), &i);
        r.compare("left unit", &[a], &(&h.mult[e][a] * &h.unit.kron(&i)), &i);
    }
    r.compare("unit grouplike", &[], &(&h.comult[e] * &h.unit), &h.unit.kron(&h.unit));
    r.compare("unit counit", &[], &(&h.counit[e] * &h.unit), &Matrix::identity(1));
    if let Some(psi) = &h.crossing {
        let conj = |x: usize, by: usize| g.mul(g.mul(by, x), inv[by]);
        for a in 0..k {
            for b in 0..k {
                expect("crossing", &psi[a][b], (d[conj(a, b)], d[a]))?;
            }
        }
        for a in 0..k {
            r.compare("crossing at identity", &[a], &psi[a][e], &eye(d[a]));
            for b in 0..k {
                let p = &psi[a][b];
                let target = conj(a, b);
                r.compare(
                    "crossing preserves comultiplication",
                    &[a, b],
                    &(&h.comult[target] * p),
                    &(&p.kron(p) * &h.comult[a]),
                );
                r.compare("crossing preserves counit", &[a, b], &(&h.counit[target] * p), &h.counit[a]);
                r.assert("crossing invertible", &[a, b], p.rows() == p.cols() && p.rank() == p.rows());
                for l in 0..k {
                    let lhs = &psi[target][l] * p;
                    r.compare("crossing composes", &[a, b, l], &lhs, &psi[a][g.mul(l, b)]);
                }
                for c in 0..k {
                    let lhs = &psi[g.mul(a, c)][b] * &h.mult[a][c];
                    let rhs = &h.mult[target][conj(c, b)] * &p.kron(&psi[c][b]);
                    r.compare("crossing preserves multiplication", &[a, c, b], &lhs, &rhs);
                }
            }
            r.compare("crossing preserves unit", &[a], &(&psi[e][a] * &h.unit), &h.unit);
        }
    }
    for a in 0..k {
        let i = eye(d[a]);
        let unit_counit = &h.unit * &h.counit[a];
        let lhs = chain(&[&h.comult[a], &h.antipode[a].kron(&i), &h.mult[inv[a]][a]]);
        r.compare("left antipode", &[a], &lhs, &unit_counit);
        let lhs = chain(&[&h.comult[a], &i.kron(&h.antipode[a]), &h.mult[a][inv[a]]]);
        r.compare("right antipode", &[a], &lhs, &unit_counit);
    }
    Ok(r)
}

fn group_shape(g: &MonoidTable, dims: &[usize], inv: &[usize]) -> VGraphShape {
    let k = g.order();
    VGraphShape::new(g.labels().to_vec(), PairMap::from_fn(k, |x, y| dims[g.mul(inv[x], y)]))
}

/// The Hopf category on the objects of `G` with `H̃_{x,y} = H_{x⁻¹y}`.
pub fn hopf_g_algebra_to_category(h: &HopfGAlgebraData) -> Result<VCatData> {
    let report = check_hopf_g_algebra(h)?;
    if let Some(f) = report.first_failure() {
        return Err(Error::InvalidGAlgebra(format!("{} fails at {:?}", f.axiom, f.indices)));
    }
    let g = &h.group;
    let k = g.order();
    let inv: Vec<usize> = (0..k).map(|a| inverse(g, a)).collect::<Result<_>>()?;
    let grade = |x: usize, y: usize| g.mul(inv[x], y);
    let mut data = VCatData::new(group_shape(g, &h.dims, &inv));
    data.category = Some(CategoryLayer {
        comp: TripleMap::from_fn(k, |x, y, z| h.mult[grade(x, y)][grade(y, z)].clone()),
        unit: vec![h.unit.clone(); k],
    });
    data.local_comonoid = Some(ComonoidLayer {
        comult: PairMap::from_fn(k, |x, y| h.comult[grade(x, y)].clone()),
        counit: PairMap::from_fn(k, |x, y| h.counit[grade(x, y)].clone()),
    });
    data.antipode = Some(PairMap::from_fn(k, |x, y| h.antipode[grade(x, y)].clone()));
    Ok(data)
}

/// A group-graded algebra with a pairing `ρ_g: A_g ⊗ A_{g⁻¹} -> k` per element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrobeniusGAlgebraData {
    pub group: MonoidTable,
    pub dims: Vec<usize>,
    pub mult: Vec<Vec<Matrix>>,
    pub unit: Matrix,
    /// `form[g]` is a `1 × (d_g · d_{g⁻¹})` row.
    pub form: Vec<Matrix>,
}

/// The Frobenius category `Ã_{x,y} = A_{x⁻¹y}` whose forms restrict `ρ`,
/// together with the Frobenius system they induce.
pub fn frobenius_g_algebra_to_category(a: &FrobeniusGAlgebraData) -> Result<(VCatData, FrobeniusSystem)> {
    let g = &a.group;
    let k = g.order();
    let inv: Vec<usize> = (0..k).map(|x| inverse(g, x)).collect::<Result<_>>()?;
    let e = g.identity();
    let d = &a.dims;
    if d.len() != k || a.mult.len() != k || a.form.len() != k {
        return Err(Error::InvalidGAlgebra("one component per group element expected".into()));
    }
    for x in 0..k {
        expect("form", &a.form[x], (1, d[x] * d[inv[x]]))?;
        for y in 0..k {
            expect("multiplication", &a.mult[x][y], (d[g.mul(x, y)], d[x] * d[y]))?;
        }
    }
    expect("unit", &a.unit, (d[e], 1))?;
    for x in 0..k {
        let swapped = &a.form[inv[x]] * &crate::linalg::swap_map(d[x], d[inv[x]]);
        if swapped != a.form[x] {
            return Err(Error::InvalidForm(format!("pairing at {} is not symmetric", g.labels()[x])));
        }
        let table = a.form[x].reshape(d[x], d[inv[x]]);
        if d[x] != d[inv[x]] || table.rank() != d[x] {
            return Err(Error::InvalidForm(format!("pairing at {} is degenerate", g.labels()[x])));
        }
    }
    let grade = |x: usize, y: usize| g.mul(inv[x], y);
    let mut data = VCatData::new(group_shape(g, d, &inv));
    data.category = Some(CategoryLayer {
        comp: TripleMap::from_fn(k, |x, y, z| a.mult[grade(x, y)][grade(y, z)].clone()),
        unit: vec![a.unit.clone(); k],
    });
    let report = crate::vcat::verify_axioms(&data, crate::vcat::AxiomSet::Category)?;
    if let Some(f) = report.first_failure() {
        return Err(Error::InvalidGAlgebra(format!("{} fails at {:?}", f.axiom, f.indices)));
    }
    let nu = &a.form[e] * &eye(d[e]).kron(&a.unit);
    let trace = TraceFamily { functionals: vec![nu; k] };
    let induced = crate::frobenius::trace_to_form(&data, &trace)?;
    for x in 0..k {
        for y in 0..k {
            if induced.forms[(x, y)] != a.form[grade(x, y)] {
                return Err(Error::InvalidForm("pairing is not invariant under multiplication".into()));
            }
        }
    }
    let sys = frobenius_system_from_trace(&data, &trace)?;
    let full = with_frobenius(&data, &sys)?;
    Ok((full, sys))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gallery::{group_algebra, sweedler_hopf_algebra};
    use crate::linalg::int;
    use crate::vcat::{verify_axioms, AxiomSet};

    fn one() -> Matrix {
        Matrix::identity(1)
    }

    fn line_bundle() -> HopfGAlgebraData {
        HopfGAlgebraData {
            group: MonoidTable::cyclic(2),
            dims: vec![1, 1],
            comult: vec![one(); 2],
            counit: vec![one(); 2],
            mult: vec![vec![one(); 2]; 2],
            unit: one(),
            crossing: Some(vec![vec![one(); 2]; 2]),
            antipode: vec![one(); 2],
        }
    }

    #[test]
    fn line_bundle_gives_two_objects() {
        let data = hopf_g_algebra_to_category(&line_bundle()).unwrap();
        assert_eq!(data.n(), 2);
        assert!((0..2).all(|x| (0..2).all(|y| data.dim(x, y) == 1)));
        assert!(verify_axioms(&data, AxiomSet::Hopf).unwrap().passed());
    }

    #[test]
    fn trivial_grading_returns_the_algebra() {
        let h = sweedler_hopf_algebra();
        let graded = HopfGAlgebraData::constant(MonoidTable::trivial(), &h).unwrap();
        let data = hopf_g_algebra_to_category(&graded).unwrap();
        assert_eq!(data.category, h.category);
        assert_eq!(data.local_comonoid, h.local_comonoid);
        assert_eq!(data.antipode, h.antipode);
    }

    #[test]
    fn constant_group_algebra_over_c2() {
        let kc2 = group_algebra(&MonoidTable::cyclic(2)).unwrap();
        let graded = HopfGAlgebraData::constant(MonoidTable::cyclic(2), &kc2).unwrap();
        let data = hopf_g_algebra_to_category(&graded).unwrap();
        assert!(verify_axioms(&data, AxiomSet::Hopf).unwrap().passed());
        assert_eq!(data.dim(0, 1), 2);
    }

    #[test]
    fn broken_antipode_is_rejected() {
        let mut h = line_bundle();
        h.antipode[1] = Matrix::from_i64(1, 1, &[2]);
        assert!(matches!(hopf_g_algebra_to_category(&h), Err(Error::InvalidGAlgebra(_))));
        let mut h = line_bundle();
        h.crossing = Some(vec![vec![one(), Matrix::from_i64(1, 1, &[-1])]; 2]);
        let r = check_hopf_g_algebra(&h).unwrap();
        assert!(!r.passed());
    }

    fn kc2_graded(rho_g: i64) -> FrobeniusGAlgebraData {
        FrobeniusGAlgebraData {
            group: MonoidTable::cyclic(2),
            dims: vec![1, 1],
            mult: vec![vec![one(); 2]; 2],
            unit: one(),
            form: vec![one(), Matrix::from_i64(1, 1, &[rho_g])],
        }
    }

    #[test]
    fn graded_group_algebra_is_frobenius() {
        let (data, sys) = frobenius_g_algebra_to_category(&kc2_graded(1)).unwrap();
        assert_eq!(data.n(), 2);
        assert!(verify_axioms(&data, AxiomSet::Frobenius).unwrap().passed());
        assert_eq!(sys.trace.functionals, vec![Matrix::row(vec![int(1)]); 2]);
    }

    #[test]
    fn degenerate_pairing_is_rejected() {
        assert!(matches!(frobenius_g_algebra_to_category(&kc2_graded(0)), Err(Error::InvalidForm(_))));
        assert!(matches!(frobenius_g_algebra_to_category(&kc2_graded(2)), Err(Error::InvalidForm(_))));
    }

    #[test]
    fn trivial_grading_is_one_object_frobenius() {
        let a = FrobeniusGAlgebraData {
            group: MonoidTable::trivial(),
            dims: vec![1],
            mult: vec![vec![one()]],
            unit: one(),
            form: vec![Matrix::from_i64(1, 1, &[3])],
        };
        let (data, sys) = frobenius_g_algebra_to_category(&a).unwrap();
        assert_eq!(data.n(), 1);
        assert_eq!(sys.casimir.tensors[(0, 0)], Matrix::new(1, 1, vec![crate::linalg::frac(1, 3)]));
    }
}
