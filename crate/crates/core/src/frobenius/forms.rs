//! Bilinear forms `Γ_{xy}: A_{x,y} ⊗ A_{y,x} -> k` and the trace/Frobenius bridge.

use num_traits::Zero;

use super::{CasimirFamily, FrobeniusSystem, TraceFamily};
use crate::error::{Error, Result};
use crate::linalg::{eye, int, swap_map, Matrix};
use crate::report::AxiomReport;
use crate::vcat::{PairMap, VCatData};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BilinearForm {
    pub forms: PairMap<Matrix>,
}

/// `Γ_{xy} = ν_x ∘ m_{xyx}`.
pub fn trace_to_form(data: &VCatData, trace: &TraceFamily) -> Result<BilinearForm> {
    let c = data.cat()?;
    Ok(BilinearForm { forms: PairMap::from_fn(data.n(), |x, y| &trace.functionals[x] * &c.comp[(x, y, x)]) })
}

/// `ν_x = Γ_{xx}(− ⊗ 1_x)`.
pub fn form_to_trace(data: &VCatData, form: &BilinearForm) -> Result<TraceFamily> {
    let c = data.cat()?;
    Ok(TraceFamily {
        functionals: (0..data.n())
            .map(|x| &form.forms[(x, x)] * &eye(data.dim(x, x)).kron(&c.unit[x]))
            .collect(),
    })
}

/// `Γ_{xz}(ab ⊗ c) = Γ_{xy}(a ⊗ bc)`.
pub fn check_balanced(data: &VCatData, form: &BilinearForm) -> Result<AxiomReport> {
    let c = data.cat()?;
    let n = data.n();
    let d = |x, y| data.dim(x, y);
    let mut r = AxiomReport::new();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let lhs = &form.forms[(x, z)] * &c.comp[(x, y, z)].kron(&eye(d(z, x)));
                let rhs = &form.forms[(x, y)] * &eye(d(x, y)).kron(&c.comp[(y, z, x)]);
                r.compare("balanced", &[x, y, z], &lhs, &rhs);
            }
        }
    }
    Ok(r)
}

/// `Γ_{yx}(b ⊗ a) = Γ_{xy}(a ⊗ b)`.
pub fn check_symmetric(data: &VCatData, form: &BilinearForm) -> Result<AxiomReport> {
    let n = data.n();
    let mut r = AxiomReport::new();
    for x in 0..n {
        for y in 0..n {
            let lhs = &form.forms[(y, x)] * &swap_map(data.dim(x, y), data.dim(y, x));
            r.compare("symmetric", &[x, y], &lhs, &form.forms[(x, y)]);
        }
    }
    Ok(r)
}

/// Both curried maps `A_{x,y} -> A*_{y,x}` and `A_{y,x} -> A*_{x,y}` are injective.
pub fn check_nondegenerate(data: &VCatData, form: &BilinearForm) -> Result<AxiomReport> {
    let n = data.n();
    let mut r = AxiomReport::new();
    for x in 0..n {
        for y in 0..n {
            let (dxy, dyx) = (data.dim(x, y), data.dim(y, x));
            let table = form.forms[(x, y)].reshape(dxy, dyx);
            r.assert("left nondegenerate", &[x, y], table.transpose().rank() == dxy);
            r.assert("right nondegenerate", &[x, y], table.rank() == dyx);
        }
    }
    Ok(r)
}

#[derive(Debug, Clone)]
pub struct CalabiYauVerdict {
    pub symmetric: bool,
    pub nondegenerate: bool,
    pub balanced: bool,
    pub calabi_yau: bool,
}

pub fn calabi_yau_check(data: &VCatData, trace: &TraceFamily) -> Result<CalabiYauVerdict> {
    let form = trace_to_form(data, trace)?;
    let symmetric = check_symmetric(data, &form)?.passed();
    let nondegenerate = check_nondegenerate(data, &form)?.passed();
    let balanced = check_balanced(data, &form)?.passed();
    Ok(CalabiYauVerdict { symmetric, nondegenerate, balanced, calabi_yau: symmetric && nondegenerate && balanced })
}

/// Inverts `ψ_{yx}` to obtain `e^{xy} = Σ_i e_i ⊗ ψ_{yx}^{-1}(e^i)`.
pub fn frobenius_system_from_trace(data: &VCatData, trace: &TraceFamily) -> Result<FrobeniusSystem> {
    let form = trace_to_form(data, trace)?;
    if !check_balanced(data, &form)?.passed() {
        return Err(Error::InvalidForm("induced form is not balanced".into()));
    }
    if !check_nondegenerate(data, &form)?.passed() {
        return Err(Error::InvalidForm("induced form is degenerate".into()));
    }
    let n = data.n();
    let tensors = PairMap::try_from_fn(n, |x, y| -> Result<Matrix> {
        let (dxy, dyx) = (data.dim(x, y), data.dim(y, x));
        // ψ_{yx}: A_{y,x} -> A*_{x,y}
        let psi = form.forms[(y, x)].reshape(dyx, dxy).transpose();
        let phi = psi.invert().map_err(|_| Error::InvalidForm(format!("pairing at ({x}, {y}) is not square")))?;
        let mut e = Matrix::zeros(dxy * dyx, 1);
        for i in 0..dxy {
            for j in 0..dyx {
                let v = phi.get(j, i);
                if !v.is_zero() {
                    e.set(i * dyx + j, 0, v.clone());
                }
            }
        }
        Ok(e)
    })?;
    Ok(FrobeniusSystem { casimir: CasimirFamily { tensors }, trace: trace.clone() })
}

/// Tries small integer traces in a fixed order until one induces a
/// non-degenerate form, at most `limit` candidates per object.
pub fn find_frobenius_system(data: &VCatData, limit: usize) -> Result<Option<FrobeniusSystem>> {
    let n = data.n();
    let mut chosen = Vec::with_capacity(n);
    for x in 0..n {
        let d = data.dim(x, x);
        let found = if d == 0 {
            Some(Matrix::zeros(1, 0))
        } else {
            candidates(d, limit).into_iter().find(|nu| local_pairings_nondegenerate(data, x, nu))
        };
        match found {
            Some(nu) => chosen.push(nu),
            None => return Ok(None),
        }
    }
    let trace = TraceFamily { functionals: chosen };
    match frobenius_system_from_trace(data, &trace) {
        Ok(sys) => Ok(Some(sys)),
        Err(Error::InvalidForm(_)) => Ok(None),
        Err(e) => Err(e),
    }
}

/// Every `Γ_{xy}` with first index `x` is non-degenerate under the trace `nu`.
fn local_pairings_nondegenerate(data: &VCatData, x: usize, nu: &Matrix) -> bool {
    let Ok(c) = data.cat() else { return false };
    (0..data.n()).all(|y| {
        let (dxy, dyx) = (data.dim(x, y), data.dim(y, x));
        let table = (nu * &c.comp[(x, y, x)]).reshape(dxy, dyx);
        dxy == dyx && table.rank() == dxy
    })
}

/// Up to `limit` rows of length `d` with entries in `{-1, 1, 2}` on their
/// support, ordered by support size, then support, then values.
fn candidates(d: usize, limit: usize) -> Vec<Matrix> {
    let values = [1i64, -1, 2];
    let mut out = Vec::new();
    for weight in 1..=d {
        let mut support: Vec<usize> = (0..weight).collect();
        loop {
            for code in 0..3usize.pow(weight as u32) {
                let mut row = vec![int(0); d];
                let mut k = code;
                for &pos in &support {
                    row[pos] = int(values[k % 3]);
                    k /= 3;
                }
                out.push(Matrix::row(row));
                if out.len() >= limit {
                    return out;
                }
            }
            // next combination in lexicographic order
            let Some(i) = (0..weight).rev().find(|&i| support[i] < d - weight + i) else { break };
            support[i] += 1;
            for j in i + 1..weight {
                support[j] = support[j - 1] + 1;
            }
        }
    }
    out
}
