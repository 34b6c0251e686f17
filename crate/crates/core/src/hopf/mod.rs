//! Antipodes: solving, properties, inversion, and the fusion map.

mod packed;

pub use packed::{check_weak_hopf, pack, pack_frobenius_data, PackedAlgebra};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{chain, eye, swap_map, Matrix};
use crate::report::AxiomReport;
use crate::vcat::{verify_axioms, AntipodeFamily, AxiomSet, PairMap, VCatData};

/// Which antipode diagrams a solve should impose.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AntipodeSides {
    Right,
    Left,
    Both,
}

/// The unique antipode of semi-Hopf data, or [`Error::NoAntipode`].
pub fn solve_antipode(data: &VCatData) -> Result<AntipodeFamily> {
    let s = solve_antipode_sides(data, AntipodeSides::Both)?;
    let mut with = data.clone();
    with.antipode = Some(s.clone());
    let report = verify_axioms(&with, AxiomSet::Hopf)?;
    if !report.passed() {
        return Err(Error::AxiomsFailed("hopf (solved antipode did not verify)".into()));
    }
    Ok(s)
}

/// Solves the chosen antipode diagrams as one linear system per hom.
/// One-sided solves return one solution when several exist.
pub fn solve_antipode_sides(data: &VCatData, sides: AntipodeSides) -> Result<AntipodeFamily> {
    let c = data.cat()?;
    let l = data.comonoid()?;
    let n = data.n();
    PairMap::try_from_fn(n, |x, y| {
        let dxy = data.dim(x, y);
        let dyx = data.dim(y, x);
        let (dxx, dyy) = (data.dim(x, x), data.dim(y, y));
        let unknowns = dyx * dxy;
        let delta = &l.comult[(x, y)];
        let eps = &l.counit[(x, y)];
        let mut blocks = Vec::new();
        let mut rhs = Vec::new();
        if sides != AntipodeSides::Left {
            // m_{xyx}(a_1 ⊗ s(a_2)) = ε(a) u_x
            let m = &c.comp[(x, y, x)];
            let mut a_mat = Matrix::zeros(dxy * dxx, unknowns);
            for a in 0..dxy {
                for i in 0..dxy {
                    for j in 0..dxy {
                        let cij = delta.get(i * dxy + j, a);
                        if cij.is_zero() {
                            continue;
                        }
                        for r in 0..dxx {
                            for k in 0..dyx {
                                let v = m.get(r, i * dyx + k);
                                if !v.is_zero() {
                                    a_mat.add_at(a * dxx + r, k * dxy + j, &(cij * v));
                                }
                            }
                        }
                    }
                }
                for r in 0..dxx {
                    rhs.push(eps.get(0, a) * c.unit[x].get(r, 0));
                }
            }
            blocks.push(a_mat);
        }
        if sides != AntipodeSides::Right {
            // m_{yxy}(s(a_1) ⊗ a_2) = ε(a) u_y
            let m = &c.comp[(y, x, y)];
            let mut a_mat = Matrix::zeros(dxy * dyy, unknowns);
            for a in 0..dxy {
                for i in 0..dxy {
                    for j in 0..dxy {
                        let cij = delta.get(i * dxy + j, a);
                        if cij.is_zero() {
                            continue;
                        }
                        for r in 0..dyy {
                            for k in 0..dyx {
                                let v = m.get(r, k * dxy + j);
                                if !v.is_zero() {
                                    a_mat.add_at(a * dyy + r, k * dxy + i, &(cij * v));
                                }
                            }
                        }
                    }
                }
                for r in 0..dyy {
                    rhs.push(eps.get(0, a) * c.unit[y].get(r, 0));
                }
            }
            blocks.push(a_mat);
        }
        let system = Matrix::vstack(&blocks);
        let sol = system.solve(&rhs).map_err(|_| Error::NoAntipode { pair: (x, y) })?;
        Ok(Matrix::new(dyx, dxy, sol))
    })
}

/// The right and/or left antipode diagrams for a candidate family.
pub fn antipode_side_report(data: &VCatData, s: &AntipodeFamily, sides: AntipodeSides) -> Result<AxiomReport> {
    let c = data.cat()?;
    let l = data.comonoid()?;
    let n = data.n();
    let mut r = AxiomReport::new();
    for x in 0..n {
        for y in 0..n {
            let i = eye(data.dim(x, y));
            if sides != AntipodeSides::Left {
                let lhs = chain(&[&l.comult[(x, y)], &i.kron(&s[(x, y)]), &c.comp[(x, y, x)]]);
                r.compare("right antipode", &[x, y], &lhs, &(&c.unit[x] * &l.counit[(x, y)]));
            }
            if sides != AntipodeSides::Right {
                let lhs = chain(&[&l.comult[(x, y)], &s[(x, y)].kron(&i), &c.comp[(y, x, y)]]);
                r.compare("left antipode", &[x, y], &lhs, &(&c.unit[y] * &l.counit[(x, y)]));
            }
        }
    }
    Ok(r)
}

/// Anti-multiplicativity, anti-comultiplicativity, unitality and counitality of `s`.
pub fn check_antipode_properties(data: &VCatData, s: &AntipodeFamily) -> Result<AxiomReport> {
    let c = data.cat()?;
    let l = data.comonoid()?;
    let n = data.n();
    let d = |x, y| data.dim(x, y);
    let mut r = AxiomReport::new();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let lhs = &s[(x, z)] * &c.comp[(x, y, z)];
                let rhs = chain(&[&s[(x, y)].kron(&s[(y, z)]), &swap_map(d(y, x), d(z, y)), &c.comp[(z, y, x)]]);
                r.compare("antipode reverses composition", &[x, y, z], &lhs, &rhs);
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            let lhs = &l.comult[(y, x)] * &s[(x, y)];
            let rhs = chain(&[&l.comult[(x, y)], &s[(x, y)].kron(&s[(x, y)]), &swap_map(d(y, x), d(y, x))]);
            r.compare("antipode reverses comultiplication", &[x, y], &lhs, &rhs);
        }
    }
    for x in 0..n {
        r.compare("antipode fixes unit", &[x], &(&s[(x, x)] * &c.unit[x]), &c.unit[x]);
    }
    for x in 0..n {
        for y in 0..n {
            r.compare("antipode preserves counit", &[x, y], &(&l.counit[(y, x)] * &s[(x, y)]), &l.counit[(x, y)]);
        }
    }
    Ok(r)
}

/// Op-antipode component stored at `(x, y)` maps `A_{x,y} -> A_{y,x}` and is
/// the inverse of `s_{yx}`.
pub fn op_antipode(data: &VCatData, s: &AntipodeFamily) -> Result<(AntipodeFamily, AxiomReport)> {
    let inv = PairMap::try_from_fn(data.n(), |x, y| {
        s[(y, x)].invert().map_err(|_| Error::NotInvertibleAntipode { pair: (y, x) })
    })?;
    let report = check_op_antipode(data, &inv)?;
    Ok((inv, report))
}

/// The two diagrams making `sbar` an antipode of the opposite category.
pub fn check_op_antipode(data: &VCatData, sbar: &AntipodeFamily) -> Result<AxiomReport> {
    let c = data.cat()?;
    let l = data.comonoid()?;
    let n = data.n();
    let d = |x, y| data.dim(x, y);
    let mut r = AxiomReport::new();
    for a in 0..n {
        for b in 0..n {
            let lhs = chain(&[
                &l.comult[(a, b)],
                &eye(d(a, b)).kron(&sbar[(a, b)]),
                &swap_map(d(a, b), d(b, a)),
                &c.comp[(b, a, b)],
            ]);
            r.compare("right op-antipode", &[a, b], &lhs, &(&c.unit[b] * &l.counit[(a, b)]));
        }
    }
    for a in 0..n {
        for b in 0..n {
            let lhs = chain(&[
                &l.comult[(a, b)],
                &sbar[(a, b)].kron(&eye(d(a, b))),
                &swap_map(d(b, a), d(a, b)),
                &c.comp[(a, b, a)],
            ]);
            r.compare("left op-antipode", &[a, b], &lhs, &(&c.unit[a] * &l.counit[(a, b)]));
        }
    }
    Ok(r)
}

/// The canonical map `H_{x,x} ⊗ H_{x,y} -> H_{x,y} ⊗ H_{x,y}` with its inverse data.
#[derive(Debug, Clone)]
pub struct FusionMap {
    pub map: Matrix,
    /// Exact inverse when the map is invertible.
    pub inverse: Option<Matrix>,
    /// `(m_{xyx} ⊗ 1)(1 ⊗ s_{xy} ⊗ 1)(1 ⊗ Δ_{xy})` when an antipode is present.
    pub formula_inverse: Option<Matrix>,
    pub report: AxiomReport,
}

pub fn fusion_map(data: &VCatData, x: usize, y: usize) -> Result<FusionMap> {
    let c = data.cat()?;
    let l = data.comonoid()?;
    let (dxx, dxy) = (data.dim(x, x), data.dim(x, y));
    let map = &c.comp[(x, x, y)].kron(&eye(dxy)) * &eye(dxx).kron(&l.comult[(x, y)]);
    let inverse = map.invert().ok();
    let mut report = AxiomReport::new();
    report.assert("fusion map invertible", &[x, y], inverse.is_some());
    let formula_inverse = data.antipode.as_ref().map(|s| {
        chain(&[
            &eye(dxy).kron(&l.comult[(x, y)]),
            &eye(dxy).kron(&s[(x, y)].kron(&eye(dxy))),
            &c.comp[(x, y, x)].kron(&eye(dxy)),
        ])
    });
    if let Some(f) = &formula_inverse {
        report.compare("formula inverse after fusion", &[x, y], &(f * &map), &eye(dxx * dxy));
        report.compare("fusion after formula inverse", &[x, y], &(&map * f), &eye(dxy * dxy));
    }
    Ok(FusionMap { map, inverse, formula_inverse, report })
}
