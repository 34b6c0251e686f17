//! Casimir families, traces, Frobenius systems and their module isomorphisms.

mod forms;
mod local;

pub use forms::{
    calabi_yau_check, check_balanced, check_nondegenerate, check_symmetric, find_frobenius_system,
    form_to_trace, frobenius_system_from_trace, trace_to_form, BilinearForm, CalabiYauVerdict,
};
pub use local::{local_frobenius_check, transport_frobenius_modules, transport_frobenius_opmodules};

use crate::error::{Error, Result};
use crate::hopf::{pack_frobenius_data, PackedAlgebra};
use crate::linalg::{eye, Matrix};
use crate::report::AxiomReport;
use crate::vcat::{
    dual_category, dual_opcategory, verify_axioms, AxiomSet, OpcategoryLayer, PairMap, TripleMap, VCatData,
};

/// `e^{xy} ∈ A_{x,y} ⊗ A_{y,x}` as columns of length `d(x,y)·d(y,x)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CasimirFamily {
    pub tensors: PairMap<Matrix>,
}

/// Functionals `ν_x: A_{x,x} -> k` as `1 × d(x,x)` rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceFamily {
    pub functionals: Vec<Matrix>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrobeniusSystem {
    pub casimir: CasimirFamily,
    pub trace: TraceFamily,
}

impl CasimirFamily {
    pub fn new(tensors: PairMap<Matrix>) -> Self {
        CasimirFamily { tensors }
    }

    /// One-object Casimir element from its dense coefficient vector.
    pub fn single(coefficients: Matrix) -> Self {
        CasimirFamily { tensors: PairMap::from_fn(1, |_, _| coefficients.clone()) }
    }
}

impl TraceFamily {
    pub fn new(functionals: Vec<Matrix>) -> Self {
        TraceFamily { functionals }
    }

    pub fn single(functional: Matrix) -> Self {
        TraceFamily { functionals: vec![functional] }
    }
}

fn check_shapes(data: &VCatData, e: &CasimirFamily) -> Result<()> {
    for ((x, y), t) in e.tensors.iter() {
        let want = data.dim(x, y) * data.dim(y, x);
        if t.shape() != (want, 1) {
            return Err(Error::DimensionMismatch {
                what: "casimir".into(),
                index: vec![x, y],
                expected: (want, 1),
                found: t.shape(),
            });
        }
    }
    Ok(())
}

/// `a·e^{zy} = e^{xy}·a` for every `a ∈ A_{x,z}`.
pub fn check_casimir(data: &VCatData, e: &CasimirFamily) -> Result<AxiomReport> {
    check_shapes(data, e)?;
    let c = data.cat()?;
    let n = data.n();
    let d = |x, y| data.dim(x, y);
    let mut r = AxiomReport::new();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let left = &c.comp[(x, z, y)].kron(&eye(d(y, z))) * &eye(d(x, z)).kron(&e.tensors[(z, y)]);
                let right = &eye(d(x, y)).kron(&c.comp[(y, x, z)]) * &e.tensors[(x, y)].kron(&eye(d(x, z)));
                r.compare("casimir", &[x, y, z], &left, &right);
            }
        }
    }
    Ok(r)
}

/// Casimir property plus both trace triangles `(ν_x ⊗ 1)e^{xx} = u_x = (1 ⊗ ν_x)e^{xx}`.
pub fn check_frobenius_system(data: &VCatData, sys: &FrobeniusSystem) -> Result<AxiomReport> {
    let mut r = check_casimir(data, &sys.casimir)?;
    let c = data.cat()?;
    for x in 0..data.n() {
        let nu = &sys.trace.functionals[x];
        let dxx = data.dim(x, x);
        if nu.shape() != (1, dxx) {
            return Err(Error::DimensionMismatch { what: "trace".into(), index: vec![x], expected: (1, dxx), found: nu.shape() });
        }
        let e = &sys.casimir.tensors[(x, x)];
        r.compare("trace left triangle", &[x], &(&nu.kron(&eye(dxx)) * e), &c.unit[x]);
        r.compare("trace right triangle", &[x], &(&eye(dxx).kron(nu) * e), &c.unit[x]);
    }
    Ok(r)
}

/// Cocomposition `δ_{xyz} = (m_{xzy} ⊗ 1)(1 ⊗ e^{zy})` with counit `ν`.
pub fn comult_from_casimir(data: &VCatData, sys: &FrobeniusSystem) -> Result<OpcategoryLayer> {
    check_shapes(data, &sys.casimir)?;
    let c = data.cat()?;
    let d = |x, y| data.dim(x, y);
    Ok(OpcategoryLayer {
        cocomp: TripleMap::from_fn(data.n(), |x, y, z| {
            &c.comp[(x, z, y)].kron(&eye(d(y, z))) * &eye(d(x, z)).kron(&sys.casimir.tensors[(z, y)])
        }),
        counit: sys.trace.functionals.clone(),
    })
}

/// `e^{xy} = δ_{xyx}(u_x)` and `ν = ε`, read off an opcategory layer.
pub fn casimir_from_comult(data: &VCatData) -> Result<FrobeniusSystem> {
    let c = data.cat()?;
    let o = data.opcat()?;
    Ok(FrobeniusSystem {
        casimir: CasimirFamily { tensors: PairMap::from_fn(data.n(), |x, y| &o.cocomp[(x, y, x)] * &c.unit[x]) },
        trace: TraceFamily { functionals: o.counit.clone() },
    })
}

/// Attaches the cocomposition induced by `sys`.
pub fn with_frobenius(data: &VCatData, sys: &FrobeniusSystem) -> Result<VCatData> {
    let mut out = data.clone();
    out.opcategory = Some(comult_from_casimir(data, sys)?);
    Ok(out)
}

/// Right-module isomorphisms `ψ_{xy}: A_{x,y} -> A*_{y,x}`, `ψ(a) = ν_x(a·−)`, and
/// the candidate inverses `φ_{xy}(f) = f(e^{yx}_1)·e^{yx}_2`.
#[derive(Debug, Clone)]
pub struct FrobeniusIsos {
    pub psi: PairMap<Matrix>,
    pub phi: PairMap<Matrix>,
    /// Left-module versions `ψ'_{xy}(a) = ν_y(−·a)` and `φ'_{xy}(f) = e^{xy}_1·f(e^{xy}_2)`.
    pub psi_left: PairMap<Matrix>,
    pub phi_left: PairMap<Matrix>,
}

pub fn psi_phi(data: &VCatData, sys: &FrobeniusSystem) -> Result<FrobeniusIsos> {
    check_shapes(data, &sys.casimir)?;
    let c = data.cat()?;
    let n = data.n();
    let d = |x, y| data.dim(x, y);
    let psi = PairMap::from_fn(n, |x, y| {
        (&sys.trace.functionals[x] * &c.comp[(x, y, x)]).reshape(d(x, y), d(y, x)).transpose()
    });
    let phi = PairMap::from_fn(n, |x, y| sys.casimir.tensors[(y, x)].reshape(d(y, x), d(x, y)).transpose());
    let psi_left =
        PairMap::from_fn(n, |x, y| (&sys.trace.functionals[y] * &c.comp[(y, x, y)]).reshape(d(y, x), d(x, y)));
    let phi_left = PairMap::from_fn(n, |x, y| sys.casimir.tensors[(x, y)].reshape(d(x, y), d(y, x)));
    Ok(FrobeniusIsos { psi, phi, psi_left, phi_left })
}

/// `(f·b)(c) = f(b·c)`: the right action `A*_{y,x} ⊗ A_{y,z} -> A*_{z,x}`.
pub(crate) fn dual_right_action(data: &VCatData, x: usize, y: usize, z: usize) -> Result<Matrix> {
    let m = &data.cat()?.comp[(y, z, x)];
    let d = |a, b| data.dim(a, b);
    let (dyx, dyz, dzx) = (d(y, x), d(y, z), d(z, x));
    let mut out = Matrix::zeros(dzx, dyx * dyz);
    for i in 0..dyx {
        for j in 0..dyz {
            for k in 0..dzx {
                out.set(k, i * dyz + j, m.get(i, j * dzx + k).clone());
            }
        }
    }
    Ok(out)
}

/// `(b·f)(c) = f(c·b)`: the left action `A_{w,x} ⊗ A*_{y,x} -> A*_{y,w}`.
pub(crate) fn dual_left_action(data: &VCatData, w: usize, x: usize, y: usize) -> Result<Matrix> {
    let m = &data.cat()?.comp[(y, w, x)];
    let d = |a, b| data.dim(a, b);
    let (dwx, dyx, dyw) = (d(w, x), d(y, x), d(y, w));
    let mut out = Matrix::zeros(dyw, dwx * dyx);
    for b in 0..dwx {
        for i in 0..dyx {
            for k in 0..dyw {
                out.set(k, b * dyx + i, m.get(i, k * dwx + b).clone());
            }
        }
    }
    Ok(out)
}

/// `ψ∘φ = φ∘ψ = 1` and module linearity, for both the right and left versions.
pub fn frobenius_iso_check(data: &VCatData, sys: &FrobeniusSystem) -> Result<AxiomReport> {
    let isos = psi_phi(data, sys)?;
    let c = data.cat()?;
    let n = data.n();
    let d = |x, y| data.dim(x, y);
    let mut r = AxiomReport::new();
    for x in 0..n {
        for y in 0..n {
            r.compare("psi then phi", &[x, y], &(&isos.phi[(x, y)] * &isos.psi[(x, y)]), &eye(d(x, y)));
            r.compare("phi then psi", &[x, y], &(&isos.psi[(x, y)] * &isos.phi[(x, y)]), &eye(d(y, x)));
            r.compare(
                "left psi then phi",
                &[x, y],
                &(&isos.phi_left[(x, y)] * &isos.psi_left[(x, y)]),
                &eye(d(x, y)),
            );
            r.compare(
                "left phi then psi",
                &[x, y],
                &(&isos.psi_left[(x, y)] * &isos.phi_left[(x, y)]),
                &eye(d(y, x)),
            );
        }
    }
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let lhs = &isos.psi[(x, z)] * &c.comp[(x, y, z)];
                let rhs = &dual_right_action(data, x, y, z)? * &isos.psi[(x, y)].kron(&eye(d(y, z)));
                r.compare("psi right linear", &[x, y, z], &lhs, &rhs);
                // b ∈ A_{w,x} with w = x, a ∈ A_{y,z}: relabel as (w, x, y) = (x, y, z)
                let lhs = &isos.psi_left[(x, z)] * &c.comp[(x, y, z)];
                let rhs = &dual_left_action(data, x, y, z)? * &eye(d(x, y)).kron(&isos.psi_left[(y, z)]);
                r.compare("psi left linear", &[x, y, z], &lhs, &rhs);
            }
        }
    }
    Ok(r)
}

/// Certifies that `ψ` and `ψ'` carry the Casimir cocomposition and trace to the
/// dual opcategory structure on `A^{*,op}`.
pub fn opcat_iso_check(data: &VCatData, sys: &FrobeniusSystem) -> Result<AxiomReport> {
    let isos = psi_phi(data, sys)?;
    let own = comult_from_casimir(data, sys)?;
    let dual = dual_opcategory(data)?;
    let dual = dual.opcat()?;
    let c = data.cat()?;
    let n = data.n();
    let mut r = AxiomReport::new();
    for (name, family) in [("psi", &isos.psi), ("left psi", &isos.psi_left)] {
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let lhs = &dual.cocomp[(x, y, z)] * &family[(x, z)];
                    let rhs = &family[(x, y)].kron(&family[(y, z)]) * &own.cocomp[(x, y, z)];
                    r.compare(&format!("{name} preserves cocomposition"), &[x, y, z], &lhs, &rhs);
                }
            }
            let lhs = &c.unit[x].transpose() * &family[(x, x)];
            r.compare(&format!("{name} preserves counit"), &[x], &lhs, &own.counit[x]);
        }
    }
    Ok(r)
}

/// The dual graph `A^{*,op}` carrying both the dual opcategory (from `A`'s
/// category) and the dual category (from `A`'s opcategory), checked for Frobenius.
pub fn dual_frobenius(data: &VCatData) -> Result<(VCatData, AxiomReport)> {
    let mut opcat_only = data.clone();
    opcat_only.local_monoid = None;
    opcat_only.antipode = None;
    let cat_side = dual_category(&opcat_only)?;
    let mut out = dual_opcategory(data)?;
    out.category = cat_side.category;
    let report = verify_axioms(&out, AxiomSet::Frobenius)?;
    Ok((out, report))
}

/// `a = a·e¹_{yy}·ν_y(e²_{yy})` for every `a ∈ A_{x,y}`.
pub fn dual_basis_check(data: &VCatData, sys: &FrobeniusSystem) -> Result<AxiomReport> {
    let c = data.cat()?;
    let n = data.n();
    let d = |x, y| data.dim(x, y);
    let mut r = AxiomReport::new();
    for x in 0..n {
        for y in 0..n {
            let contracted = &eye(d(y, y)).kron(&sys.trace.functionals[y]) * &sys.casimir.tensors[(y, y)];
            let lhs = &c.comp[(x, y, y)] * &eye(d(x, y)).kron(&contracted);
            r.compare("dual basis", &[x, y], &lhs, &eye(d(x, y)));
        }
    }
    Ok(r)
}

/// `ν_y ∘ m_{yxy}` has rank `d(x,y) = d(y,x)` whenever the homs are nonzero.
pub fn local_rigidity_check(data: &VCatData, sys: &FrobeniusSystem) -> Result<AxiomReport> {
    let c = data.cat()?;
    let n = data.n();
    let mut r = AxiomReport::new();
    for x in 0..n {
        for y in 0..n {
            let (dxy, dyx) = (data.dim(x, y), data.dim(y, x));
            let pairing = (&sys.trace.functionals[y] * &c.comp[(y, x, y)]).reshape(dyx, dxy);
            r.assert("rigid pairing", &[x, y], dxy == dyx && pairing.rank() == dxy);
        }
    }
    Ok(r)
}

/// Packs the Frobenius structure into one algebra and checks the one-object axioms.
pub fn pack_frobenius(data: &VCatData) -> Result<(PackedAlgebra, AxiomReport)> {
    let p = pack_frobenius_data(data)?;
    let report = verify_axioms(&p.as_frobenius_data(), AxiomSet::Frobenius)?;
    Ok((p, report))
}
