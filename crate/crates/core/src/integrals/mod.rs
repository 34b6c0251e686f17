//! Left and right integrals, their spaces, the `p`/`q` maps and the
//! integral/Casimir dictionary.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::frobenius::CasimirFamily;
use crate::hopf::op_antipode;
use crate::hopf_modules::{opmodule_coinvariants, standard_structures};
use crate::linalg::{eye, swap_map, Matrix, Rational};
use crate::report::AxiomReport;
use crate::vcat::{Offsets, PairMap, VCatData};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn flipped(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

/// `t^{xy} ∈ A_{x,y}` as `d(x,y) × 1` columns.
///
/// Left integrals satisfy `a·t^{xy} = ε(a)·t^{zy}`; right integrals
/// `t^{xy}·b = ε(b)·t^{xz}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegralFamily {
    pub side: Side,
    pub vectors: PairMap<Matrix>,
}

/// Integrals supported on the homs sharing one fixed object: the target `y`
/// for left integrals, the source `x` for right ones.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegralSpace {
    pub anchor: usize,
    pub side: Side,
    pub basis: Vec<IntegralFamily>,
}

impl IntegralSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

impl IntegralFamily {
    pub fn zero(data: &VCatData, side: Side) -> Self {
        IntegralFamily { side, vectors: PairMap::from_fn(data.n(), |x, y| Matrix::zeros(data.dim(x, y), 1)) }
    }

    pub fn is_zero(&self) -> bool {
        self.vectors.iter().all(|(_, v)| v.is_zero())
    }

    pub fn add(&self, other: &IntegralFamily) -> IntegralFamily {
        IntegralFamily { side: self.side, vectors: self.vectors.map(|x, y, v| v + &other.vectors[(x, y)]) }
    }

    pub fn scale(&self, c: &Rational) -> IntegralFamily {
        IntegralFamily { side: self.side, vectors: self.vectors.map(|_, _, v| v.scale(c)) }
    }
}

/// The homs `(x, y)` carrying unknowns for an anchored space.
fn anchored_homs(n: usize, anchor: usize, side: Side) -> Vec<(usize, usize)> {
    match side {
        Side::Left => (0..n).map(|x| (x, anchor)).collect(),
        Side::Right => (0..n).map(|y| (anchor, y)).collect(),
    }
}

/// Integral space anchored at `anchor` on the given side.
pub fn integral_space(data: &VCatData, anchor: usize, side: Side) -> Result<IntegralSpace> {
    let c = data.cat()?;
    let l = data.comonoid()?;
    let n = data.n();
    let d = |x, y| data.dim(x, y);
    let homs = anchored_homs(n, anchor, side);
    let offsets = Offsets::new(homs.iter().map(|&(x, y)| d(x, y)));
    let mut blocks = Vec::new();
    for (slot, &(x, y)) in homs.iter().enumerate() {
        for z in 0..n {
            // Left: m_{zxy}(a ⊗ t^{xy}) - ε_{zx}(a) t^{zy}, with a = basis of A_{z,x}.
            // Right: m_{xyz}(t^{xy} ⊗ b) - ε_{yz}(b) t^{xz}, with b = basis of A_{y,z}.
            let (acting, target, mult, counit) = match side {
                Side::Left => ((z, x), (z, y), &c.comp[(z, x, y)], &l.counit[(z, x)]),
                Side::Right => ((y, z), (x, z), &c.comp[(x, y, z)], &l.counit[(y, z)]),
            };
            let da = d(acting.0, acting.1);
            let dt = d(x, y);
            let rows = d(target.0, target.1);
            let mut block = Matrix::zeros(rows * da, offsets.total);
            for a in 0..da {
                for r in 0..rows {
                    let row = a * rows + r;
                    for k in 0..dt {
                        let col = match side {
                            Side::Left => a * dt + k,
                            Side::Right => k * da + a,
                        };
                        let v = mult.get(r, col);
                        if !v.is_zero() {
                            block.add_at(row, offsets.starts[slot] + k, v);
                        }
                    }
                    let e = counit.get(0, a);
                    if !e.is_zero() {
                        block.add_at(row, offsets.starts[z] + r, &-e);
                    }
                }
            }
            blocks.push(block);
        }
    }
    let kernel = if offsets.total == 0 { Vec::new() } else { Matrix::vstack(&blocks).kernel_basis() };
    let basis = kernel
        .into_iter()
        .map(|v| {
            let mut fam = IntegralFamily::zero(data, side);
            for (slot, &(x, y)) in homs.iter().enumerate() {
                let s = offsets.starts[slot];
                fam.vectors[(x, y)] = Matrix::column(v[s..s + d(x, y)].to_vec());
            }
            fam
        })
        .collect();
    Ok(IntegralSpace { anchor, side, basis })
}

/// Left integrals `(t^{xy})_x` anchored at the target `y`.
pub fn left_integral_space(data: &VCatData, y: usize) -> Result<IntegralSpace> {
    integral_space(data, y, Side::Left)
}

/// Right integrals `(t^{xy})_y` anchored at the source `x`.
pub fn right_integral_space(data: &VCatData, x: usize) -> Result<IntegralSpace> {
    integral_space(data, x, Side::Right)
}

/// A basis of all integral families of one side: the union of the anchored bases.
pub fn integral_families(data: &VCatData, side: Side) -> Result<Vec<IntegralFamily>> {
    let mut out = Vec::new();
    for anchor in 0..data.n() {
        out.extend(integral_space(data, anchor, side)?.basis);
    }
    Ok(out)
}

/// Sum of one basis vector from each anchored space, if every anchor has one.
pub fn generic_integral(data: &VCatData, side: Side) -> Result<Option<IntegralFamily>> {
    let mut total = IntegralFamily::zero(data, side);
    for anchor in 0..data.n() {
        let space = integral_space(data, anchor, side)?;
        match space.basis.first() {
            Some(t) => total = total.add(t),
            None => return Ok(None),
        }
    }
    Ok(Some(total))
}

pub fn check_integral(data: &VCatData, t: &IntegralFamily) -> Result<AxiomReport> {
    let c = data.cat()?;
    let l = data.comonoid()?;
    let n = data.n();
    let d = |x, y| data.dim(x, y);
    let mut r = AxiomReport::new();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                match t.side {
                    Side::Left => {
                        let lhs = &c.comp[(z, x, y)] * &eye(d(z, x)).kron(&t.vectors[(x, y)]);
                        let rhs = &t.vectors[(z, y)] * &l.counit[(z, x)];
                        r.compare("left integral", &[z, x, y], &lhs, &rhs);
                    }
                    Side::Right => {
                        let lhs = &c.comp[(x, y, z)] * &t.vectors[(x, y)].kron(&eye(d(y, z)));
                        let rhs = &t.vectors[(x, z)] * &l.counit[(y, z)];
                        r.compare("right integral", &[x, y, z], &lhs, &rhs);
                    }
                }
            }
        }
    }
    Ok(r)
}

/// Integral spaces of an opcategory-with-local-monoid at `z`: the kernel of
/// `μ_{zz}(d ⊗ t) − ε_z(d)t` (left) or `μ_{zz}(t ⊗ d) − ε_z(d)t` (right),
/// as columns.
pub fn opcategory_integral_space(c: &VCatData, z: usize, side: Side) -> Result<Matrix> {
    let o = c.opcat()?;
    let l = c.monoid()?;
    let k = c.dim(z, z);
    let mu = &l.mult[(z, z)];
    let eps = &o.counit[z];
    let mut system = Matrix::zeros(k * k, k);
    for a in 0..k {
        for r in 0..k {
            for j in 0..k {
                let col = match side {
                    Side::Left => a * k + j,
                    Side::Right => j * k + a,
                };
                let v = mu.get(r, col);
                if !v.is_zero() {
                    system.add_at(a * k + r, j, v);
                }
            }
            let e = eps.get(0, a);
            if !e.is_zero() {
                system.add_at(a * k + r, r, &-e);
            }
        }
    }
    let kernel = if k == 0 { Vec::new() } else { system.kernel_basis() };
    let mut out = Matrix::zeros(k, kernel.len());
    for (j, v) in kernel.into_iter().enumerate() {
        for (i, e) in v.into_iter().enumerate() {
            out.set(i, j, e);
        }
    }
    Ok(out)
}

/// `p_{xy}(f) = f(t_1)t_2` and `q_{xy}(f) = t_1 f(t_2)` as maps `A*_{x,y} -> A_{x,y}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PqMaps {
    pub p: PairMap<Matrix>,
    pub q: PairMap<Matrix>,
}

pub fn pq_maps(data: &VCatData, t: &IntegralFamily) -> Result<PqMaps> {
    let l = data.comonoid()?;
    let n = data.n();
    let delta_t = PairMap::from_fn(n, |x, y| {
        let dxy = data.dim(x, y);
        (&l.comult[(x, y)] * &t.vectors[(x, y)]).reshape(dxy, dxy)
    });
    Ok(PqMaps { p: delta_t.map(|_, _, m| m.transpose()), q: delta_t })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NonsingularityReport {
    pub p_ranks: PairMap<usize>,
    pub q_ranks: PairMap<usize>,
    /// Every `p_{xx}` is invertible.
    pub left_nonsingular: bool,
    /// Every `q_{xx}` is invertible.
    pub right_nonsingular: bool,
}

pub fn nonsingularity_report(data: &VCatData, t: &IntegralFamily) -> Result<NonsingularityReport> {
    let pq = pq_maps(data, t)?;
    let n = data.n();
    let p_ranks = pq.p.map(|_, _, m| m.rank());
    let q_ranks = pq.q.map(|_, _, m| m.rank());
    let left_nonsingular = (0..n).all(|x| p_ranks[(x, x)] == data.dim(x, x));
    let right_nonsingular = (0..n).all(|x| q_ranks[(x, x)] == data.dim(x, x));
    Ok(NonsingularityReport { p_ranks, q_ranks, left_nonsingular, right_nonsingular })
}

/// `t^{xy} = (1 ⊗ ε_{yx}) e^{xy}`.
pub fn integral_from_casimir(data: &VCatData, e: &CasimirFamily, side: Side) -> Result<IntegralFamily> {
    let l = data.comonoid()?;
    let vectors = PairMap::from_fn(data.n(), |x, y| &eye(data.dim(x, y)).kron(&l.counit[(y, x)]) * &e.tensors[(x, y)]);
    Ok(IntegralFamily { side, vectors })
}

/// How an integral is turned into a Casimir family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CasimirVariant {
    /// `e^{xy} = (1 ⊗ s_{xy}) Δ t^{xy}` from a left integral.
    Left,
    /// `e^{yx} = (s_{xy} ⊗ 1) Δ t^{xy}` from a right integral.
    Right,
    /// `e^{xy} = (1 ⊗ s̄_{xy}) σ Δ t^{xy}` with the op-antipode `s̄`.
    LeftOp,
    /// `e^{yx} = (s̄_{xy} ⊗ 1) σ Δ t^{xy}`.
    RightOp,
}

impl CasimirVariant {
    pub const ALL: [CasimirVariant; 4] =
        [CasimirVariant::Left, CasimirVariant::Right, CasimirVariant::LeftOp, CasimirVariant::RightOp];

    pub fn integral_side(self) -> Side {
        match self {
            CasimirVariant::Left | CasimirVariant::LeftOp => Side::Left,
            CasimirVariant::Right | CasimirVariant::RightOp => Side::Right,
        }
    }
}

pub fn casimir_from_integral(data: &VCatData, t: &IntegralFamily, variant: CasimirVariant) -> Result<CasimirFamily> {
    let l = data.comonoid()?;
    let n = data.n();
    let d = |x, y| data.dim(x, y);
    let twist = match variant {
        CasimirVariant::Left | CasimirVariant::Right => data.antipode()?.clone(),
        CasimirVariant::LeftOp | CasimirVariant::RightOp => op_antipode(data, data.antipode()?)?.0,
    };
    let mut tensors = PairMap::from_fn(n, |x, y| Matrix::zeros(d(x, y) * d(y, x), 1));
    for x in 0..n {
        for y in 0..n {
            let dxy = d(x, y);
            let delta_t = &l.comult[(x, y)] * &t.vectors[(x, y)];
            let flipped = &swap_map(dxy, dxy) * &delta_t;
            let (slot, value) = match variant {
                CasimirVariant::Left => ((x, y), &eye(dxy).kron(&twist[(x, y)]) * &delta_t),
                CasimirVariant::Right => ((y, x), &twist[(x, y)].kron(&eye(dxy)) * &delta_t),
                CasimirVariant::LeftOp => ((x, y), &eye(dxy).kron(&twist[(x, y)]) * &flipped),
                CasimirVariant::RightOp => ((y, x), &twist[(x, y)].kron(&eye(dxy)) * &flipped),
            };
            tensors[slot] = value;
        }
    }
    Ok(CasimirFamily { tensors })
}

/// Moves an integral to the other side: `(s t)^{xy} = s_{yx}(t^{yx})`.
pub fn antipode_transport(data: &VCatData, t: &IntegralFamily) -> Result<IntegralFamily> {
    let s = data.antipode()?;
    Ok(IntegralFamily { side: t.side.flipped(), vectors: PairMap::from_fn(data.n(), |x, y| &s[(y, x)] * &t.vectors[(y, x)]) })
}

/// Same as [`antipode_transport`] through the op-antipode.
pub fn op_antipode_transport(data: &VCatData, t: &IntegralFamily) -> Result<IntegralFamily> {
    let (sbar, _) = op_antipode(data, data.antipode()?)?;
    Ok(IntegralFamily {
        side: t.side.flipped(),
        vectors: PairMap::from_fn(data.n(), |x, y| &sbar[(y, x)] * &t.vectors[(y, x)]),
    })
}

/// Dimension and transport checks between the integral spaces of a Hopf
/// category, its right coinvariants over the dual, and the dual's own integrals.
pub fn space_isomorphism_checks(data: &VCatData) -> Result<AxiomReport> {
    let n = data.n();
    let mut r = AxiomReport::new();
    let h1 = standard_structures(data)?.h1;
    for a in 0..n {
        let left = left_integral_space(data, a)?;
        let right = right_integral_space(data, a)?;
        r.assert("left and right integral spaces agree in dimension", &[a], left.dim() == right.dim());
        for t in &left.basis {
            let moved = antipode_transport(data, t)?;
            r.assert("antipode carries left integrals to right", &[a], check_integral(data, &moved)?.passed());
            let moved = op_antipode_transport(data, t)?;
            r.assert("op-antipode carries left integrals to right", &[a], check_integral(data, &moved)?.passed());
        }
        let coinv = opmodule_coinvariants(&h1, a)?;
        let coinv_dim = coinv.first().map_or(0, Matrix::cols);
        r.assert("right integrals match coinvariants", &[a], coinv_dim == right.dim());
    }
    Ok(r)
}

/// Fails with [`Error::SingularIntegral`] unless the integral is
/// non-singular on its own side.
pub fn require_nonsingular(data: &VCatData, t: &IntegralFamily) -> Result<NonsingularityReport> {
    let rep = nonsingularity_report(data, t)?;
    let (ok, map) = match t.side {
        Side::Left => (rep.left_nonsingular, "p"),
        Side::Right => (rep.right_nonsingular, "q"),
    };
    if ok {
        return Ok(rep);
    }
    let ranks = if t.side == Side::Left { &rep.p_ranks } else { &rep.q_ranks };
    let object = (0..data.n()).find(|&x| ranks[(x, x)] < data.dim(x, x)).unwrap_or(0);
    Err(Error::SingularIntegral { map, object })
}
