//! The regular, free and dual-basis (op)module structures on a Hopf category.

use super::{HopfModuleData, HopfOpmoduleData, ModuleData, OpmoduleData};
use crate::error::Result;
use crate::frobenius::dual_right_action;
use crate::linalg::{eye, Matrix};
use crate::vcat::{dual_semi_hopf, PairMap, TripleMap, VCatData};

/// `A` acting on itself by composition, coacting by `Δ`.
pub fn regular_hopf_module(data: &VCatData) -> Result<HopfModuleData> {
    let c = data.cat()?;
    let l = data.comonoid()?;
    Ok(HopfModuleData {
        base: data.clone(),
        module: ModuleData { dims: data.shape.dims.clone(), action: c.comp.clone() },
        coaction: l.comult.clone(),
    })
}

/// `(N ⊗ A)_{x,y} = N_x ⊗ A_{x,y}` with action `1 ⊗ m` and coaction `1 ⊗ Δ`.
pub fn free_module(data: &VCatData, diag_dims: &[usize]) -> Result<HopfModuleData> {
    let c = data.cat()?;
    let l = data.comonoid()?;
    let n = data.n();
    Ok(HopfModuleData {
        base: data.clone(),
        module: ModuleData {
            dims: PairMap::from_fn(n, |x, y| diag_dims[x] * data.dim(x, y)),
            action: TripleMap::from_fn(n, |x, y, z| eye(diag_dims[x]).kron(&c.comp[(x, y, z)])),
        },
        coaction: PairMap::from_fn(n, |x, y| eye(diag_dims[x]).kron(&l.comult[(x, y)])),
    })
}

/// `C^{*,op}` as a Hopf opmodule over a Hopf opcategory `C`:
/// `(f·c)(d) = f(μ(d ⊗ S(c)))` and `χ(f) = Σ_k e^k ⊗ (1 ⊗ f)δ(e_k)`.
pub fn dual_regular_opmodule(c: &VCatData) -> Result<HopfOpmoduleData> {
    let o = c.opcat()?;
    let l = c.monoid()?;
    let s = c.antipode()?;
    let n = c.n();
    let d = |x, y| c.dim(x, y);
    let action = PairMap::from_fn(n, |x, y| {
        let (dyx, dxy) = (d(y, x), d(x, y));
        let mu = &l.mult[(y, x)];
        let twisted = mu * &eye(dyx).kron(&s[(x, y)]);
        let mut lam = Matrix::zeros(dyx, dyx * dxy);
        for k in 0..dyx {
            for f in 0..dyx {
                for cc in 0..dxy {
                    lam.set(k, f * dxy + cc, twisted.get(f, k * dxy + cc).clone());
                }
            }
        }
        lam
    });
    let coaction = TripleMap::from_fn(n, |x, y, z| {
        let (dyx, dyz, dzx) = (d(y, x), d(y, z), d(z, x));
        let delta = &o.cocomp[(y, z, x)];
        let mut chi = Matrix::zeros(dyx * dyz, dzx);
        for k in 0..dyx {
            for r in 0..dyz {
                for f in 0..dzx {
                    chi.set(k * dyz + r, f, delta.get(r * dzx + f, k).clone());
                }
            }
        }
        chi
    });
    Ok(HopfOpmoduleData {
        base: c.clone(),
        opmodule: OpmoduleData { dims: PairMap::from_fn(n, |x, y| d(y, x)), coaction },
        action,
    })
}

/// The four dual-basis structures on a Hopf category `H` and the regular
/// opmodule of `H^{*,op}`.
#[derive(Debug, Clone)]
pub struct StandardStructures {
    /// `H` as a Hopf `H^{*,op}`-opmodule with `χ(a) = Σ a·e_i ⊗ e^i`, `a ↼ f = f(s(a_1))a_2`.
    pub h1: HopfOpmoduleData,
    /// `H^op` as a Hopf `H^{*,op}`-opmodule with `χ(a) = Σ s(e_i)·a ⊗ e^i`, `a ↼ f = a_1 f(a_2)`.
    pub h2: HopfOpmoduleData,
    /// `H*` as a Hopf `H`-module with `(f·b)(c) = f(c·s(b))`.
    pub hstar1: HopfModuleData,
    /// `H^{*,op}` as a Hopf `H`-module with `(f·b)(c) = f(b·c)`.
    pub hstar2: HopfModuleData,
    /// `(H^{*,op})^{*,op}` as a Hopf opmodule over `H^{*,op}`.
    pub cstarop: HopfOpmoduleData,
}

pub fn standard_structures(data: &VCatData) -> Result<StandardStructures> {
    let c = data.cat()?;
    let l = data.comonoid()?;
    let s = data.antipode()?;
    let dual = dual_semi_hopf(data)?;
    let n = data.n();
    let d = |x, y| data.dim(x, y);

    let h1_coaction = TripleMap::from_fn(n, |x, y, z| {
        let (dxy, dxz, dzy) = (d(x, y), d(x, z), d(z, y));
        let m = &c.comp[(x, z, y)];
        let mut chi = Matrix::zeros(dxy * dzy, dxz);
        for r in 0..dxy {
            for a in 0..dxz {
                for i in 0..dzy {
                    chi.set(r * dzy + i, a, m.get(r, a * dzy + i).clone());
                }
            }
        }
        chi
    });
    let h1_action = PairMap::from_fn(n, |x, y| {
        let (dxy, dyx) = (d(x, y), d(y, x));
        let delta = &l.comult[(x, y)];
        let mut lam = Matrix::zeros(dxy, dxy * dyx);
        for a in 0..dxy {
            for r in 0..dxy {
                for i in 0..dxy {
                    let coef = delta.get(i * dxy + r, a);
                    if num_traits::Zero::is_zero(coef) {
                        continue;
                    }
                    for f in 0..dyx {
                        lam.add_at(r, a * dyx + f, &(coef * s[(x, y)].get(f, i)));
                    }
                }
            }
        }
        lam
    });
    let h1 = HopfOpmoduleData {
        base: dual.clone(),
        opmodule: OpmoduleData { dims: data.shape.dims.clone(), coaction: h1_coaction },
        action: h1_action,
    };

    let h2_coaction = TripleMap::from_fn(n, |x, y, z| {
        let (dyx, dzx, dzy) = (d(y, x), d(z, x), d(z, y));
        let twisted = &c.comp[(y, z, x)] * &s[(z, y)].kron(&eye(dzx));
        let mut chi = Matrix::zeros(dyx * dzy, dzx);
        for r in 0..dyx {
            for a in 0..dzx {
                for i in 0..dzy {
                    chi.set(r * dzy + i, a, twisted.get(r, i * dzx + a).clone());
                }
            }
        }
        chi
    });
    let h2_action = PairMap::from_fn(n, |x, y| {
        let dyx = d(y, x);
        let delta = &l.comult[(y, x)];
        let mut lam = Matrix::zeros(dyx, dyx * dyx);
        for a in 0..dyx {
            for r in 0..dyx {
                for f in 0..dyx {
                    lam.set(r, a * dyx + f, delta.get(r * dyx + f, a).clone());
                }
            }
        }
        lam
    });
    let h2 = HopfOpmoduleData {
        base: dual.clone(),
        opmodule: OpmoduleData { dims: PairMap::from_fn(n, |x, y| d(y, x)), coaction: h2_coaction },
        action: h2_action,
    };

    let hstar1_action = TripleMap::from_fn(n, |x, y, z| {
        let (dxy, dyz, dxz) = (d(x, y), d(y, z), d(x, z));
        let twisted = &c.comp[(x, z, y)] * &eye(dxz).kron(&s[(y, z)]);
        let mut tau = Matrix::zeros(dxz, dxy * dyz);
        for k in 0..dxz {
            for f in 0..dxy {
                for b in 0..dyz {
                    tau.set(k, f * dyz + b, twisted.get(f, k * dyz + b).clone());
                }
            }
        }
        tau
    });
    let hstar1_coaction = PairMap::from_fn(n, |x, y| {
        let dxy = d(x, y);
        let delta = &l.comult[(x, y)];
        let mut rho = Matrix::zeros(dxy * dxy, dxy);
        for i in 0..dxy {
            for r in 0..dxy {
                for f in 0..dxy {
                    rho.set(i * dxy + r, f, delta.get(r * dxy + f, i).clone());
                }
            }
        }
        rho
    });
    let hstar1 = HopfModuleData {
        base: data.clone(),
        module: ModuleData { dims: data.shape.dims.clone(), action: hstar1_action },
        coaction: hstar1_coaction,
    };

    let hstar2_action =
        TripleMap::try_from_fn(n, |x, y, z| dual_right_action(data, x, y, z))?;
    let hstar2_coaction = PairMap::from_fn(n, |x, y| {
        let (dyx, dxy) = (d(y, x), d(x, y));
        let twisted = &eye(dyx).kron(&s[(y, x)]) * &l.comult[(y, x)];
        let mut rho = Matrix::zeros(dyx * dxy, dyx);
        for i in 0..dyx {
            for f in 0..dyx {
                for r in 0..dxy {
                    rho.set(i * dxy + r, f, twisted.get(f * dxy + r, i).clone());
                }
            }
        }
        rho
    });
    let hstar2 = HopfModuleData {
        base: data.clone(),
        module: ModuleData { dims: PairMap::from_fn(n, |x, y| d(y, x)), action: hstar2_action },
        coaction: hstar2_coaction,
    };

    let cstarop = dual_regular_opmodule(&dual)?;
    Ok(StandardStructures { h1, h2, hstar1, hstar2, cstarop })
}
