use std::fmt;
use std::str::FromStr;

use super::VCatData;
use crate::error::{Error, Result};
use crate::linalg::{chain, eye, int, swap_map, Matrix};
use crate::report::AxiomReport;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AxiomSet {
    Category,
    Opcategory,
    LocalComonoid,
    LocalMonoid,
    SemiHopf,
    SemiHopfOp,
    Hopf,
    HopfOp,
    Frobenius,
}

impl AxiomSet {
    pub const ALL: [AxiomSet; 9] = [
        AxiomSet::Category,
        AxiomSet::Opcategory,
        AxiomSet::LocalComonoid,
        AxiomSet::LocalMonoid,
        AxiomSet::SemiHopf,
        AxiomSet::SemiHopfOp,
        AxiomSet::Hopf,
        AxiomSet::HopfOp,
        AxiomSet::Frobenius,
    ];

    pub fn name(self) -> &'static str {
        match self {
            AxiomSet::Category => "category",
            AxiomSet::Opcategory => "opcategory",
            AxiomSet::LocalComonoid => "local-comonoid",
            AxiomSet::LocalMonoid => "local-monoid",
            AxiomSet::SemiHopf => "semi-hopf",
            AxiomSet::SemiHopfOp => "semi-hopf-op",
            AxiomSet::Hopf => "hopf",
            AxiomSet::HopfOp => "hopf-op",
            AxiomSet::Frobenius => "frobenius",
        }
    }
}

impl fmt::Display for AxiomSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for AxiomSet {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        AxiomSet::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| Error::Format(format!("unknown axiom set `{s}`")))
    }
}

/// Evaluates every diagram of `set` as a matrix identity per index tuple.
pub fn verify_axioms(data: &VCatData, set: AxiomSet) -> Result<AxiomReport> {
    let mut r = AxiomReport::new();
    match set {
        AxiomSet::Category => category(data, &mut r)?,
        AxiomSet::Opcategory => opcategory(data, &mut r)?,
        AxiomSet::LocalComonoid => local_comonoid(data, &mut r)?,
        AxiomSet::LocalMonoid => local_monoid(data, &mut r)?,
        AxiomSet::SemiHopf => {
            category(data, &mut r)?;
            local_comonoid(data, &mut r)?;
            bimonoid(data, &mut r)?;
        }
        AxiomSet::SemiHopfOp => {
            opcategory(data, &mut r)?;
            local_monoid(data, &mut r)?;
            op_bimonoid(data, &mut r)?;
        }
        AxiomSet::Hopf => {
            category(data, &mut r)?;
            local_comonoid(data, &mut r)?;
            bimonoid(data, &mut r)?;
            antipode(data, &mut r)?;
        }
        AxiomSet::HopfOp => {
            opcategory(data, &mut r)?;
            local_monoid(data, &mut r)?;
            op_bimonoid(data, &mut r)?;
            op_antipode(data, &mut r)?;
        }
        AxiomSet::Frobenius => {
            category(data, &mut r)?;
            opcategory(data, &mut r)?;
            frobenius(data, &mut r)?;
        }
    }
    Ok(r)
}

fn triples(n: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    (0..n).flat_map(move |x| (0..n).flat_map(move |y| (0..n).map(move |z| (x, y, z))))
}

fn quads(n: usize) -> impl Iterator<Item = (usize, usize, usize, usize)> {
    triples(n).flat_map(move |(x, y, z)| (0..n).map(move |w| (x, y, z, w)))
}

fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |x| (0..n).map(move |y| (x, y)))
}

fn category(data: &VCatData, r: &mut AxiomReport) -> Result<()> {
    let c = data.cat()?;
    let n = data.n();
    let id = |x, y| eye(data.dim(x, y));
    let m = |x, y, z| &c.comp[(x, y, z)];
    for (x, y, z, w) in quads(n) {
        let lhs = m(x, z, w) * &m(x, y, z).kron(&id(z, w));
        let rhs = m(x, y, w) * &id(x, y).kron(m(y, z, w));
        r.compare("associativity", &[x, y, z, w], &lhs, &rhs);
    }
    for (x, y) in pairs(n) {
        let lhs = m(x, x, y) * &c.unit[x].kron(&id(x, y));
        r.compare("left unit", &[x, y], &lhs, &id(x, y));
    }
    for (x, y) in pairs(n) {
        let lhs = m(x, y, y) * &id(x, y).kron(&c.unit[y]);
        r.compare("right unit", &[x, y], &lhs, &id(x, y));
    }
    Ok(())
}

fn opcategory(data: &VCatData, r: &mut AxiomReport) -> Result<()> {
    let c = data.opcat()?;
    let n = data.n();
    let id = |x, y| eye(data.dim(x, y));
    let d = |x, y, z| &c.cocomp[(x, y, z)];
    for (x, y, z, w) in quads(n) {
        let lhs = &id(x, y).kron(d(y, z, w)) * d(x, y, w);
        let rhs = &d(x, y, z).kron(&id(z, w)) * d(x, z, w);
        r.compare("coassociativity", &[x, y, z, w], &lhs, &rhs);
    }
    for (x, y) in pairs(n) {
        let lhs = &c.counit[x].kron(&id(x, y)) * d(x, x, y);
        r.compare("left counit", &[x, y], &lhs, &id(x, y));
    }
    for (x, y) in pairs(n) {
        let lhs = &id(x, y).kron(&c.counit[y]) * d(x, y, y);
        r.compare("right counit", &[x, y], &lhs, &id(x, y));
    }
    Ok(())
}

fn local_comonoid(data: &VCatData, r: &mut AxiomReport) -> Result<()> {
    let c = data.comonoid()?;
    for (x, y) in pairs(data.n()) {
        let i = eye(data.dim(x, y));
        let delta = &c.comult[(x, y)];
        let eps = &c.counit[(x, y)];
        r.compare(
            "local coassociativity",
            &[x, y],
            &(&delta.kron(&i) * delta),
            &(&i.kron(delta) * delta),
        );
        r.compare("local left counit", &[x, y], &(&eps.kron(&i) * delta), &i);
        r.compare("local right counit", &[x, y], &(&i.kron(eps) * delta), &i);
    }
    Ok(())
}

fn local_monoid(data: &VCatData, r: &mut AxiomReport) -> Result<()> {
    let c = data.monoid()?;
    for (x, y) in pairs(data.n()) {
        let i = eye(data.dim(x, y));
        let mu = &c.mult[(x, y)];
        let eta = &c.unit[(x, y)];
        r.compare(
            "local associativity",
            &[x, y],
            &(mu * &mu.kron(&i)),
            &(mu * &i.kron(mu)),
        );
        r.compare("local left unit", &[x, y], &(mu * &eta.kron(&i)), &i);
        r.compare("local right unit", &[x, y], &(mu * &i.kron(eta)), &i);
    }
    Ok(())
}

/// `(1 ⊗ σ ⊗ 1): (A ⊗ B) ⊗ (C ⊗ D) -> (A ⊗ C) ⊗ (B ⊗ D)`.
pub(crate) fn middle_swap(a: usize, b: usize, c: usize, d: usize) -> Matrix {
    eye(a).kron(&swap_map(b, c)).kron(&eye(d))
}

fn bimonoid(data: &VCatData, r: &mut AxiomReport) -> Result<()> {
    let c = data.cat()?;
    let l = data.comonoid()?;
    let n = data.n();
    let d = |x, y| data.dim(x, y);
    for (x, y, z) in triples(n) {
        let m = &c.comp[(x, y, z)];
        let lhs = &l.comult[(x, z)] * m;
        let rhs = chain(&[
            &l.comult[(x, y)].kron(&l.comult[(y, z)]),
            &middle_swap(d(x, y), d(x, y), d(y, z), d(y, z)),
            &m.kron(m),
        ]);
        r.compare("comultiplication preserves composition", &[x, y, z], &lhs, &rhs);
    }
    for x in 0..n {
        let u = &c.unit[x];
        r.compare("comultiplication preserves unit", &[x], &(&l.comult[(x, x)] * u), &u.kron(u));
    }
    for (x, y, z) in triples(n) {
        let lhs = &l.counit[(x, z)] * &c.comp[(x, y, z)];
        let rhs = l.counit[(x, y)].kron(&l.counit[(y, z)]);
        r.compare("counit preserves composition", &[x, y, z], &lhs, &rhs);
    }
    for x in 0..n {
        let lhs = &l.counit[(x, x)] * &c.unit[x];
        r.compare("counit preserves unit", &[x], &lhs, &Matrix::from_i64(1, 1, &[1]));
    }
    Ok(())
}

fn antipode(data: &VCatData, r: &mut AxiomReport) -> Result<()> {
    let c = data.cat()?;
    let l = data.comonoid()?;
    let s = data.antipode()?;
    let n = data.n();
    for (x, y) in pairs(n) {
        let i = eye(data.dim(x, y));
        let lhs = chain(&[&l.comult[(x, y)], &i.kron(&s[(x, y)]), &c.comp[(x, y, x)]]);
        let rhs = &c.unit[x] * &l.counit[(x, y)];
        r.compare("right antipode", &[x, y], &lhs, &rhs);
    }
    for (x, y) in pairs(n) {
        let i = eye(data.dim(x, y));
        let lhs = chain(&[&l.comult[(x, y)], &s[(x, y)].kron(&i), &c.comp[(y, x, y)]]);
        let rhs = &c.unit[y] * &l.counit[(x, y)];
        r.compare("left antipode", &[x, y], &lhs, &rhs);
    }
    Ok(())
}

fn op_bimonoid(data: &VCatData, r: &mut AxiomReport) -> Result<()> {
    let c = data.opcat()?;
    let l = data.monoid()?;
    let n = data.n();
    let d = |x, y| data.dim(x, y);
    for (x, y, z) in triples(n) {
        let delta = &c.cocomp[(x, y, z)];
        let lhs = delta * &l.mult[(x, z)];
        let rhs = chain(&[
            &delta.kron(delta),
            &middle_swap(d(x, y), d(y, z), d(x, y), d(y, z)),
            &l.mult[(x, y)].kron(&l.mult[(y, z)]),
        ]);
        r.compare("cocomposition preserves multiplication", &[x, y, z], &lhs, &rhs);
    }
    for (x, y, z) in triples(n) {
        let lhs = &c.cocomp[(x, y, z)] * &l.unit[(x, z)];
        let rhs = l.unit[(x, y)].kron(&l.unit[(y, z)]);
        r.compare("cocomposition preserves unit", &[x, y, z], &lhs, &rhs);
    }
    for x in 0..n {
        let e = &c.counit[x];
        r.compare("counit preserves multiplication", &[x], &(e * &l.mult[(x, x)]), &e.kron(e));
    }
    for x in 0..n {
        let lhs = &c.counit[x] * &l.unit[(x, x)];
        r.compare("counit preserves unit", &[x], &lhs, &Matrix::new(1, 1, vec![int(1)]));
    }
    Ok(())
}

/// The opcategory antipode component stored at `(a, b)` maps `C_{a,b} -> C_{b,a}`.
fn op_antipode(data: &VCatData, r: &mut AxiomReport) -> Result<()> {
    let c = data.opcat()?;
    let l = data.monoid()?;
    let s = data.antipode()?;
    let n = data.n();
    for (x, y) in pairs(n) {
        let lhs = chain(&[
            &c.cocomp[(x, y, x)],
            &eye(data.dim(x, y)).kron(&s[(y, x)]),
            &l.mult[(x, y)],
        ]);
        let rhs = &l.unit[(x, y)] * &c.counit[x];
        r.compare("right antipode", &[x, y], &lhs, &rhs);
    }
    for (x, y) in pairs(n) {
        let lhs = chain(&[
            &c.cocomp[(x, y, x)],
            &s[(x, y)].kron(&eye(data.dim(y, x))),
            &l.mult[(y, x)],
        ]);
        let rhs = &l.unit[(y, x)] * &c.counit[x];
        r.compare("left antipode", &[x, y], &lhs, &rhs);
    }
    Ok(())
}

fn frobenius(data: &VCatData, r: &mut AxiomReport) -> Result<()> {
    let c = data.cat()?;
    let o = data.opcat()?;
    let n = data.n();
    let id = |x, y| eye(data.dim(x, y));
    for (x, y, z, w) in quads(n) {
        let middle = &o.cocomp[(x, w, z)] * &c.comp[(x, y, z)];
        let left = &id(x, w).kron(&c.comp[(w, y, z)]) * &o.cocomp[(x, w, y)].kron(&id(y, z));
        let right = &c.comp[(x, y, w)].kron(&id(w, z)) * &id(x, y).kron(&o.cocomp[(y, w, z)]);
        r.compare("frobenius left", &[x, y, z, w], &left, &middle);
        r.compare("frobenius right", &[x, y, z, w], &right, &middle);
    }
    Ok(())
}
