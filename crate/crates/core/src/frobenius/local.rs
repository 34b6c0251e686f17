//! Local Frobenius structures on dual homs and module/opmodule transport.

use super::{frobenius_system_from_trace, with_frobenius, FrobeniusSystem, TraceFamily};
use crate::error::Result;
use crate::hopf_modules::{standard_structures, ModuleData, OpmoduleData};
use crate::integrals::{IntegralFamily, Side};
use crate::error::Error;
use crate::linalg::{eye, Matrix};
use crate::report::AxiomReport;
use crate::vcat::{dual_semi_hopf, verify_axioms, AxiomSet, CategoryLayer, TripleMap, VCatData, VGraphShape};

/// For each `(x, y)`, makes `H*_{y,x}` a Frobenius algebra with trace
/// `f ↦ f(s_{xy}(t^{xy}))` and certifies `ψ_{yx}(f) = f(s(t_1))·s(t_2)` as an
/// invertible right-module map onto `H_{y,x}`.
pub fn local_frobenius_check(data: &VCatData, t: &IntegralFamily) -> Result<AxiomReport> {
    if t.side != Side::Right {
        return Err(Error::InvalidFrobeniusSystem("local Frobenius structures need a right integral".into()));
    }
    let l = data.comonoid()?;
    let s = data.antipode()?;
    let dual = dual_semi_hopf(data)?;
    let local = dual.monoid()?;
    let h2 = standard_structures(data)?.h2;
    let n = data.n();
    let mut r = AxiomReport::new();
    for x in 0..n {
        for y in 0..n {
            let k = data.dim(y, x);
            let algebra = one_object_algebra(k, local.mult[(x, y)].clone(), local.unit[(x, y)].clone());
            let trace = TraceFamily::single((&s[(x, y)] * &t.vectors[(x, y)]).transpose());
            match frobenius_system_from_trace(&algebra, &trace) {
                Ok(sys) => {
                    let full = with_frobenius(&algebra, &sys)?;
                    let report = verify_axioms(&full, AxiomSet::Frobenius)?;
                    r.assert("local frobenius algebra", &[x, y], report.passed());
                }
                Err(Error::InvalidForm(_)) => r.assert("local frobenius algebra", &[x, y], false),
                Err(e) => return Err(e),
            }
            let both = s[(x, y)].kron(&s[(x, y)]);
            let st = (&both * &(&l.comult[(x, y)] * &t.vectors[(x, y)])).reshape(k, k);
            let psi = st.transpose();
            r.assert("local frobenius iso invertible", &[x, y], psi.rank() == k);
            let lhs = &h2.action[(x, y)] * &psi.kron(&eye(k));
            let rhs = &psi * &local.mult[(x, y)];
            r.compare("local frobenius iso linear", &[x, y], &lhs, &rhs);
        }
    }
    Ok(r)
}

fn one_object_algebra(k: usize, mult: Matrix, unit: Matrix) -> VCatData {
    let mut out = VCatData::new(VGraphShape::single(k));
    out.category = Some(CategoryLayer { comp: TripleMap::from_fn(1, |_, _, _| mult.clone()), unit: vec![unit] });
    out
}

/// Module to opmodule over the Frobenius opcategory of `sys`:
/// `χ_{xzy} = (τ_{xyz} ⊗ 1)(1 ⊗ e^{yz})`.
pub fn transport_frobenius_modules(data: &VCatData, sys: &FrobeniusSystem, m: &ModuleData) -> OpmoduleData {
    let n = data.n();
    let coaction = TripleMap::from_fn(n, |x, z, y| {
        let e = &sys.casimir.tensors[(y, z)];
        &m.action[(x, y, z)].kron(&eye(data.dim(z, y))) * &eye(m.dims[(x, y)]).kron(e)
    });
    OpmoduleData { dims: m.dims.clone(), coaction }
}

/// Inverse transport: `τ_{xyz} = (1 ⊗ ν_z)(1 ⊗ m_{zyz})(χ_{xzy} ⊗ 1)`.
pub fn transport_frobenius_opmodules(data: &VCatData, sys: &FrobeniusSystem, m: &OpmoduleData) -> Result<ModuleData> {
    let c = data.cat()?;
    let n = data.n();
    let action = TripleMap::from_fn(n, |x, y, z| {
        let dm = m.dims[(x, z)];
        let contract = &eye(dm).kron(&(&sys.trace.functionals[z] * &c.comp[(z, y, z)]));
        contract * &m.coaction[(x, z, y)].kron(&eye(data.dim(y, z)))
    });
    Ok(ModuleData { dims: m.dims.clone(), action })
}
