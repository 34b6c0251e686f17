//! Modules, opmodules, Hopf (op)modules, coinvariants and the fundamental theorem.

mod standard;

pub use standard::{
    free_module, dual_regular_opmodule, regular_hopf_module, standard_structures, StandardStructures,
};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{chain, eye, Matrix, Rational};
use crate::report::AxiomReport;
use crate::vcat::{PairMap, TripleMap, VCatData};

/// Right module: `τ_{xyz}: M_{x,y} ⊗ A_{y,z} -> M_{x,z}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleData {
    pub dims: PairMap<usize>,
    pub action: TripleMap<Matrix>,
}

/// Right opmodule: `χ_{xyz}: N_{x,z} -> N_{x,y} ⊗ C_{y,z}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OpmoduleData {
    pub dims: PairMap<usize>,
    pub coaction: TripleMap<Matrix>,
}

/// Module over a semi-Hopf category with local coactions `ρ_{xy}: M_{x,y} -> M_{x,y} ⊗ A_{x,y}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HopfModuleData {
    pub base: VCatData,
    pub module: ModuleData,
    pub coaction: PairMap<Matrix>,
}

/// Opmodule over a semi-Hopf opcategory with local actions `λ_{xy}: N_{x,y} ⊗ C_{x,y} -> N_{x,y}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HopfOpmoduleData {
    pub base: VCatData,
    pub opmodule: OpmoduleData,
    pub action: PairMap<Matrix>,
}

fn expect_shape(what: &'static str, index: Vec<usize>, m: &Matrix, expected: (usize, usize)) -> Result<()> {
    if m.shape() == expected {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { what: what.into(), index, expected, found: m.shape() })
    }
}

/// Associativity and unit of a module over the category layer of `base`.
pub fn check_module(base: &VCatData, m: &ModuleData) -> Result<AxiomReport> {
    let c = base.cat()?;
    let n = base.n();
    let d = |x, y| base.dim(x, y);
    let dm = |x: usize, y: usize| m.dims[(x, y)];
    for ((x, y, z), t) in m.action.iter() {
        expect_shape("module action", vec![x, y, z], t, (dm(x, z), dm(x, y) * d(y, z)))?;
    }
    let mut r = AxiomReport::new();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                for w in 0..n {
                    let lhs = &m.action[(x, z, w)] * &m.action[(x, y, z)].kron(&eye(d(z, w)));
                    let rhs = &m.action[(x, y, w)] * &eye(dm(x, y)).kron(&c.comp[(y, z, w)]);
                    r.compare("action associativity", &[x, y, z, w], &lhs, &rhs);
                }
            }
            let lhs = &m.action[(x, y, y)] * &eye(dm(x, y)).kron(&c.unit[y]);
            r.compare("action unit", &[x, y], &lhs, &eye(dm(x, y)));
        }
    }
    Ok(r)
}

/// Coassociativity and counit of an opmodule over the opcategory layer of `base`.
pub fn check_opmodule(base: &VCatData, m: &OpmoduleData) -> Result<AxiomReport> {
    let o = base.opcat()?;
    let n = base.n();
    let d = |x, y| base.dim(x, y);
    let dm = |x: usize, y: usize| m.dims[(x, y)];
    for ((x, y, z), t) in m.coaction.iter() {
        expect_shape("opmodule coaction", vec![x, y, z], t, (dm(x, y) * d(y, z), dm(x, z)))?;
    }
    let mut r = AxiomReport::new();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                for w in 0..n {
                    let lhs = &m.coaction[(x, y, z)].kron(&eye(d(z, w))) * &m.coaction[(x, z, w)];
                    let rhs = &eye(dm(x, y)).kron(&o.cocomp[(y, z, w)]) * &m.coaction[(x, y, w)];
                    r.compare("coaction coassociativity", &[x, y, z, w], &lhs, &rhs);
                }
            }
            let lhs = &eye(dm(x, y)).kron(&o.counit[y]) * &m.coaction[(x, y, y)];
            r.compare("coaction counit", &[x, y], &lhs, &eye(dm(x, y)));
        }
    }
    Ok(r)
}

pub fn check_hopf_module(m: &HopfModuleData) -> Result<AxiomReport> {
    let base = &m.base;
    let c = base.cat()?;
    let l = base.comonoid()?;
    let n = base.n();
    let d = |x, y| base.dim(x, y);
    let dm = |x: usize, y: usize| m.module.dims[(x, y)];
    let mut r = check_module(base, &m.module)?;
    for ((x, y), rho) in m.coaction.iter() {
        expect_shape("local coaction", vec![x, y], rho, (dm(x, y) * d(x, y), dm(x, y)))?;
        let lhs = &rho.kron(&eye(d(x, y))) * rho;
        let rhs = &eye(dm(x, y)).kron(&l.comult[(x, y)]) * rho;
        r.compare("local coaction coassociativity", &[x, y], &lhs, &rhs);
        let lhs = &eye(dm(x, y)).kron(&l.counit[(x, y)]) * rho;
        r.compare("local coaction counit", &[x, y], &lhs, &eye(dm(x, y)));
    }
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let tau = &m.module.action[(x, y, z)];
                let lhs = &m.coaction[(x, z)] * tau;
                let rhs = chain(&[
                    &m.coaction[(x, y)].kron(&l.comult[(y, z)]),
                    &crate::vcat::middle_swap(dm(x, y), d(x, y), d(y, z), d(y, z)),
                    &tau.kron(&c.comp[(x, y, z)]),
                ]);
                r.compare("hopf module compatibility", &[x, y, z], &lhs, &rhs);
            }
        }
    }
    Ok(r)
}

pub fn check_hopf_opmodule(m: &HopfOpmoduleData) -> Result<AxiomReport> {
    let base = &m.base;
    let o = base.opcat()?;
    let l = base.monoid()?;
    let n = base.n();
    let d = |x, y| base.dim(x, y);
    let dm = |x: usize, y: usize| m.opmodule.dims[(x, y)];
    let mut r = check_opmodule(base, &m.opmodule)?;
    for ((x, y), lam) in m.action.iter() {
        expect_shape("local action", vec![x, y], lam, (dm(x, y), dm(x, y) * d(x, y)))?;
        let lhs = lam * &lam.kron(&eye(d(x, y)));
        let rhs = lam * &eye(dm(x, y)).kron(&l.mult[(x, y)]);
        r.compare("local action associativity", &[x, y], &lhs, &rhs);
        let lhs = lam * &eye(dm(x, y)).kron(&l.unit[(x, y)]);
        r.compare("local action unit", &[x, y], &lhs, &eye(dm(x, y)));
    }
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let chi = &m.opmodule.coaction[(x, y, z)];
                let lhs = chi * &m.action[(x, z)];
                let rhs = chain(&[
                    &chi.kron(&o.cocomp[(x, y, z)]),
                    &crate::vcat::middle_swap(dm(x, y), d(y, z), d(x, y), d(y, z)),
                    &m.action[(x, y)].kron(&l.mult[(y, z)]),
                ]);
                r.compare("hopf opmodule compatibility", &[x, y, z], &lhs, &rhs);
            }
        }
    }
    Ok(r)
}

/// Basis of `ker(ρ_{xx} − 1 ⊗ u_x)` as columns of a `dim M_{x,x} × k` matrix.
pub fn coinvariants(m: &HopfModuleData, x: usize) -> Result<Matrix> {
    let c = m.base.cat()?;
    let dm = m.module.dims[(x, x)];
    let diff = &m.coaction[(x, x)] - &eye(dm).kron(&c.unit[x]);
    Ok(columns(dm, diff.kernel_basis()))
}

/// Coinvariants of a Hopf opmodule at `x`: the stacked kernel of
/// `χ_{xyz} v_{xz} − (1 ⊗ η_{yz}) v_{xy}` over the unknowns `(v_{xy})_y`.
/// Returns one matrix per `y` whose columns are the components of a basis.
pub fn opmodule_coinvariants(m: &HopfOpmoduleData, x: usize) -> Result<Vec<Matrix>> {
    let l = m.base.monoid()?;
    let n = m.base.n();
    let d = |a, b| m.base.dim(a, b);
    let dm = |a: usize, b: usize| m.opmodule.dims[(a, b)];
    let starts: Vec<usize> = (0..n).scan(0, |acc, y| {
        let s = *acc;
        *acc += dm(x, y);
        Some(s)
    }).collect();
    let total: usize = (0..n).map(|y| dm(x, y)).sum();
    let mut blocks = Vec::new();
    for y in 0..n {
        for z in 0..n {
            let rows = dm(x, y) * d(y, z);
            let mut block = Matrix::zeros(rows, total);
            block.set_block(0, starts[z], &m.opmodule.coaction[(x, y, z)]);
            let trivial = -&eye(dm(x, y)).kron(&l.unit[(y, z)]);
            let existing = block.block(0, starts[y], rows, dm(x, y));
            block.set_block(0, starts[y], &(&existing + &trivial));
            blocks.push(block);
        }
    }
    let system = Matrix::vstack(&blocks);
    let kernel = if total == 0 { Vec::new() } else { system.kernel_basis() };
    Ok((0..n)
        .map(|y| {
            let pieces: Vec<Vec<Rational>> = kernel.iter().map(|v| v[starts[y]..starts[y] + dm(x, y)].to_vec()).collect();
            columns(dm(x, y), pieces)
        })
        .collect())
}

fn columns(rows: usize, vectors: Vec<Vec<Rational>>) -> Matrix {
    let mut out = Matrix::zeros(rows, vectors.len());
    for (j, v) in vectors.into_iter().enumerate() {
        for (i, e) in v.into_iter().enumerate() {
            if !e.is_zero() {
                out.set(i, j, e);
            }
        }
    }
    out
}

/// The counit `β_{xy}: M^{co}_x ⊗ A_{x,y} -> M_{x,y}` of the fundamental
/// theorem, one matrix per `(x, y)`, with an invertibility report.
pub fn fundamental_iso_check(m: &HopfModuleData) -> Result<(PairMap<Matrix>, AxiomReport)> {
    let n = m.base.n();
    let inclusions: Vec<Matrix> = (0..n).map(|x| coinvariants(m, x)).collect::<Result<_>>()?;
    let beta = PairMap::from_fn(n, |x, y| &m.module.action[(x, x, y)] * &inclusions[x].kron(&eye(m.base.dim(x, y))));
    let mut r = AxiomReport::new();
    for ((x, y), b) in beta.iter() {
        r.assert("fundamental iso", &[x, y], b.rows() == b.cols() && b.rank() == b.rows());
    }
    Ok((beta, r))
}

/// `β_{xy} = λ_{xy} ∘ (v_{xy} ⊗ 1)` for a Hopf opmodule.
pub fn fundamental_opmodule_iso_check(m: &HopfOpmoduleData) -> Result<(PairMap<Matrix>, AxiomReport)> {
    let n = m.base.n();
    let legs: Vec<Vec<Matrix>> = (0..n).map(|x| opmodule_coinvariants(m, x)).collect::<Result<_>>()?;
    let beta = PairMap::from_fn(n, |x, y| &m.action[(x, y)] * &legs[x][y].kron(&eye(m.base.dim(x, y))));
    let mut r = AxiomReport::new();
    for ((x, y), b) in beta.iter() {
        r.assert("fundamental opmodule iso", &[x, y], b.rows() == b.cols() && b.rank() == b.rows());
    }
    Ok((beta, r))
}

/// Module over `A` to opmodule over `A^{*,op}`: `χ_{xyz}(m) = Σ_i τ_{xzy}(m ⊗ e_i) ⊗ e^i`.
pub fn transport_module_opmodule(base: &VCatData, m: &ModuleData) -> OpmoduleData {
    let n = base.n();
    let coaction = TripleMap::from_fn(n, |x, y, z| {
        let (dxy, dxz, dzy) = (m.dims[(x, y)], m.dims[(x, z)], base.dim(z, y));
        let tau = &m.action[(x, z, y)];
        let mut chi = Matrix::zeros(dxy * dzy, dxz);
        for r in 0..dxy {
            for a in 0..dxz {
                for i in 0..dzy {
                    chi.set(r * dzy + i, a, tau.get(r, a * dzy + i).clone());
                }
            }
        }
        chi
    });
    OpmoduleData { dims: m.dims.clone(), coaction }
}

/// Inverse of [`transport_module_opmodule`]: `τ_{xzy}(m ⊗ a) = (1 ⊗ ev)(χ_{xyz}(m) ⊗ a)`.
pub fn transport_opmodule_module(base: &VCatData, m: &OpmoduleData) -> ModuleData {
    let n = base.n();
    let action = TripleMap::from_fn(n, |x, z, y| {
        let (dxy, dxz, dzy) = (m.dims[(x, y)], m.dims[(x, z)], base.dim(z, y));
        let chi = &m.coaction[(x, y, z)];
        let mut tau = Matrix::zeros(dxy, dxz * dzy);
        for r in 0..dxy {
            for a in 0..dxz {
                for i in 0..dzy {
                    tau.set(r, a * dzy + i, chi.get(r * dzy + i, a).clone());
                }
            }
        }
        tau
    });
    ModuleData { dims: m.dims.clone(), action }
}

#[cfg(test)]
mod tests;
