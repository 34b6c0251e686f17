use std::fmt;
use std::str::FromStr;

use super::{
    AntipodeFamily, CategoryLayer, ComonoidLayer, MonoidLayer, OpcategoryLayer, PairMap,
    TripleMap, VCatData,
};
use crate::error::{Error, Result};
use crate::linalg::swap_map;

/// `A^{*,op}`: hom `(x, y)` is the dual of `A_{y,x}`, cocomposition is the
/// transposed composition followed by the leg swap, counit is the transposed unit.
pub fn dual_opcategory(data: &VCatData) -> Result<VCatData> {
    let c = data.cat()?;
    let n = data.n();
    let d = |x, y| data.dim(x, y);
    let mut out = VCatData::new(data.shape.transposed());
    out.opcategory = Some(OpcategoryLayer {
        cocomp: TripleMap::from_fn(n, |x, y, z| {
            &swap_map(d(z, y), d(y, x)) * &c.comp[(z, y, x)].transpose()
        }),
        counit: c.unit.iter().map(|u| u.transpose()).collect(),
    });
    Ok(out)
}

/// `A^{*,op}` with the dual local monoid `(f*g)(a) = g(a_1) f(a_2)`, unit `ε*`,
/// and the transposed antipode when one is present.
pub fn dual_semi_hopf(data: &VCatData) -> Result<VCatData> {
    let mut out = dual_opcategory(data)?;
    let l = data.comonoid()?;
    let n = data.n();
    out.local_monoid = Some(MonoidLayer {
        mult: PairMap::from_fn(n, |x, y| {
            let d = data.dim(y, x);
            &l.comult[(y, x)].transpose() * &swap_map(d, d)
        }),
        unit: PairMap::from_fn(n, |x, y| l.counit[(y, x)].transpose()),
    });
    out.antipode = data.antipode.as_ref().map(|s| s.map(|_, _, m| m.transpose()));
    Ok(out)
}

/// The category `C^{*,op}` of an opcategory `C`, with a local comonoid when `C`
/// carries a local monoid. Inverse to [`dual_semi_hopf`] under the double-dual
/// identification.
pub fn dual_category(data: &VCatData) -> Result<VCatData> {
    let o = data.opcat()?;
    let n = data.n();
    let shape = data.shape.transposed();
    let dd = |x, y| shape.dim(x, y);
    let comp = TripleMap::from_fn(n, |x, y, z| {
        &o.cocomp[(z, y, x)].transpose() * &swap_map(dd(x, y), dd(y, z))
    });
    let unit = o.counit.iter().map(|e| e.transpose()).collect();
    let local_comonoid = data.local_monoid.as_ref().map(|l| ComonoidLayer {
        comult: PairMap::from_fn(n, |x, y| {
            let d = dd(x, y);
            &swap_map(d, d) * &l.mult[(y, x)].transpose()
        }),
        counit: PairMap::from_fn(n, |x, y| l.unit[(y, x)].transpose()),
    });
    let mut out = VCatData::new(shape);
    out.category = Some(CategoryLayer { comp, unit });
    out.local_comonoid = local_comonoid;
    out.antipode = data.antipode.as_ref().map(|s| s.map(|_, _, m| m.transpose()));
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Variant {
    Op,
    Cop,
    OpCop,
    CopOp,
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::Op => "op",
            Variant::Cop => "cop",
            Variant::OpCop => "op_cop",
            Variant::CopOp => "cop_op",
        })
    }
}

impl FromStr for Variant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "op" => Ok(Variant::Op),
            "cop" => Ok(Variant::Cop),
            "op_cop" => Ok(Variant::OpCop),
            "cop_op" => Ok(Variant::CopOp),
            _ => Err(Error::Format(format!("unknown variant `{s}`"))),
        }
    }
}

/// Opposite and co-opposite structures. The antipode of each variant is
/// rebuilt from inverses of the original one and dropped if those do not exist.
pub fn opposite_variants(data: &VCatData, variant: Variant) -> VCatData {
    match variant {
        Variant::Op => op(data),
        Variant::Cop => cop(data),
        Variant::OpCop => cop(&op(data)),
        Variant::CopOp => op(&cop(data)),
    }
}

fn inverted(s: &AntipodeFamily, pick: impl Fn(usize, usize) -> (usize, usize)) -> Option<AntipodeFamily> {
    PairMap::try_from_fn(s.objects(), |x, y| s[pick(x, y)].invert()).ok()
}

fn op(data: &VCatData) -> VCatData {
    let n = data.n();
    let d = |x, y| data.dim(x, y);
    let mut out = VCatData::new(data.shape.transposed());
    out.category = data.category.as_ref().map(|c| CategoryLayer {
        comp: TripleMap::from_fn(n, |x, y, z| &c.comp[(z, y, x)] * &swap_map(d(y, x), d(z, y))),
        unit: c.unit.clone(),
    });
    out.opcategory = data.opcategory.as_ref().map(|o| OpcategoryLayer {
        cocomp: TripleMap::from_fn(n, |x, y, z| &swap_map(d(z, y), d(y, x)) * &o.cocomp[(z, y, x)]),
        counit: o.counit.clone(),
    });
    out.local_comonoid = data.local_comonoid.as_ref().map(|l| ComonoidLayer {
        comult: PairMap::from_fn(n, |x, y| l.comult[(y, x)].clone()),
        counit: PairMap::from_fn(n, |x, y| l.counit[(y, x)].clone()),
    });
    out.local_monoid = data.local_monoid.as_ref().map(|l| MonoidLayer {
        mult: PairMap::from_fn(n, |x, y| l.mult[(y, x)].clone()),
        unit: PairMap::from_fn(n, |x, y| l.unit[(y, x)].clone()),
    });
    out.antipode = data.antipode.as_ref().and_then(|s| inverted(s, |x, y| (x, y)));
    out
}

fn cop(data: &VCatData) -> VCatData {
    let mut out = data.clone();
    out.local_comonoid = data.local_comonoid.as_ref().map(|l| ComonoidLayer {
        comult: l.comult.map(|x, y, m| {
            let d = data.dim(x, y);
            &swap_map(d, d) * m
        }),
        counit: l.counit.clone(),
    });
    out.antipode = data.antipode.as_ref().and_then(|s| inverted(s, |x, y| (y, x)));
    out
}
