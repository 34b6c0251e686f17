//! Enriched graphs with structure-constant layers.
//!
//! Objects are indexed `0..n`. The hom-object `A_{x,y}` has dimension `d(x,y)`,
//! and every structure map is a [`Matrix`] between tensor products of homs.

mod axioms;
mod duals;

pub use axioms::{verify_axioms, AxiomSet};
pub use duals::{dual_category, dual_opcategory, dual_semi_hopf, opposite_variants, Variant};
pub(crate) use axioms::middle_swap;

use std::ops::{Index, IndexMut};

use crate::error::{Error, Layer, Result};
use crate::linalg::Matrix;

/// Values indexed by ordered pairs of objects.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairMap<T> {
    n: usize,
    items: Vec<T>,
}

impl<T> PairMap<T> {
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut items = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                items.push(f(x, y));
            }
        }
        PairMap { n, items }
    }

    pub fn try_from_fn<E>(n: usize, mut f: impl FnMut(usize, usize) -> Result<T, E>) -> Result<Self, E> {
        let mut items = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                items.push(f(x, y)?);
            }
        }
        Ok(PairMap { n, items })
    }

    pub fn objects(&self) -> usize {
        self.n
    }

    /// Entries in lexicographic index order.
    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize), &T)> {
        let n = self.n;
        self.items.iter().enumerate().map(move |(k, v)| ((k / n, k % n), v))
    }

    pub fn values_mut(&mut self) -> impl Iterator<Item = &mut T> {
        self.items.iter_mut()
    }

    pub fn map<U>(&self, mut f: impl FnMut(usize, usize, &T) -> U) -> PairMap<U> {
        PairMap::from_fn(self.n, |x, y| f(x, y, &self[(x, y)]))
    }
}

impl<T> Index<(usize, usize)> for PairMap<T> {
    type Output = T;
    fn index(&self, (x, y): (usize, usize)) -> &T {
        &self.items[x * self.n + y]
    }
}

impl<T> IndexMut<(usize, usize)> for PairMap<T> {
    fn index_mut(&mut self, (x, y): (usize, usize)) -> &mut T {
        &mut self.items[x * self.n + y]
    }
}

/// Values indexed by ordered triples of objects.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TripleMap<T> {
    n: usize,
    items: Vec<T>,
}

impl<T> TripleMap<T> {
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize, usize) -> T) -> Self {
        let mut items = Vec::with_capacity(n * n * n);
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    items.push(f(x, y, z));
                }
            }
        }
        TripleMap { n, items }
    }

    pub fn try_from_fn<E>(
        n: usize,
        mut f: impl FnMut(usize, usize, usize) -> Result<T, E>,
    ) -> Result<Self, E> {
        let mut items = Vec::with_capacity(n * n * n);
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    items.push(f(x, y, z)?);
                }
            }
        }
        Ok(TripleMap { n, items })
    }

    pub fn values_mut(&mut self) -> impl Iterator<Item = &mut T> {
        self.items.iter_mut()
    }

    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize, usize), &T)> {
        let n = self.n;
        self.items
            .iter()
            .enumerate()
            .map(move |(k, v)| ((k / (n * n), (k / n) % n, k % n), v))
    }
}

impl<T> Index<(usize, usize, usize)> for TripleMap<T> {
    type Output = T;
    fn index(&self, (x, y, z): (usize, usize, usize)) -> &T {
        &self.items[(x * self.n + y) * self.n + z]
    }
}

impl<T> IndexMut<(usize, usize, usize)> for TripleMap<T> {
    fn index_mut(&mut self, (x, y, z): (usize, usize, usize)) -> &mut T {
        &mut self.items[(x * self.n + y) * self.n + z]
    }
}

/// Objects, hom dimensions and optional basis labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VGraphShape {
    pub objects: Vec<String>,
    pub dims: PairMap<usize>,
    pub basis_labels: Option<PairMap<Vec<String>>>,
}

impl VGraphShape {
    pub fn new(objects: Vec<String>, dims: PairMap<usize>) -> Self {
        assert_eq!(objects.len(), dims.objects(), "object count does not match dims");
        VGraphShape { objects, dims, basis_labels: None }
    }

    /// One object named `*` with a hom of dimension `d`.
    pub fn single(d: usize) -> Self {
        VGraphShape::new(vec!["*".into()], PairMap::from_fn(1, |_, _| d))
    }

    pub fn with_labels(mut self, labels: PairMap<Vec<String>>) -> Self {
        self.basis_labels = Some(labels);
        self
    }

    pub fn n(&self) -> usize {
        self.objects.len()
    }

    pub fn dim(&self, x: usize, y: usize) -> usize {
        self.dims[(x, y)]
    }

    pub fn label(&self, x: usize, y: usize, i: usize) -> String {
        match &self.basis_labels {
            Some(l) => l[(x, y)][i].clone(),
            None => format!("b{i}"),
        }
    }

    /// Shape with homs reindexed as `(x, y) -> (y, x)`.
    pub fn transposed(&self) -> VGraphShape {
        VGraphShape {
            objects: self.objects.clone(),
            dims: PairMap::from_fn(self.n(), |x, y| self.dim(y, x)),
            basis_labels: self
                .basis_labels
                .as_ref()
                .map(|l| PairMap::from_fn(self.n(), |x, y| l[(y, x)].clone())),
        }
    }

    /// Total dimension of all hom-objects.
    pub fn total_dim(&self) -> usize {
        self.dims.iter().map(|(_, d)| *d).sum()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CategoryLayer {
    /// `m_{xyz}: A_{x,y} ⊗ A_{y,z} -> A_{x,z}`.
    pub comp: TripleMap<Matrix>,
    /// `u_x: k -> A_{x,x}`, a column.
    pub unit: Vec<Matrix>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OpcategoryLayer {
    /// `δ_{xyz}: A_{x,z} -> A_{x,y} ⊗ A_{y,z}`.
    pub cocomp: TripleMap<Matrix>,
    /// `ε_x: A_{x,x} -> k`, a row.
    pub counit: Vec<Matrix>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComonoidLayer {
    pub comult: PairMap<Matrix>,
    pub counit: PairMap<Matrix>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonoidLayer {
    pub mult: PairMap<Matrix>,
    pub unit: PairMap<Matrix>,
}

/// Antipode components `s_{xy}: A_{x,y} -> A_{y,x}`, stored at `(x, y)`.
pub type AntipodeFamily = PairMap<Matrix>;

/// A V-graph carrying any subset of the structural layers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VCatData {
    pub shape: VGraphShape,
    pub category: Option<CategoryLayer>,
    pub opcategory: Option<OpcategoryLayer>,
    pub local_comonoid: Option<ComonoidLayer>,
    pub local_monoid: Option<MonoidLayer>,
    pub antipode: Option<AntipodeFamily>,
}

impl VCatData {
    pub fn new(shape: VGraphShape) -> Self {
        VCatData {
            shape,
            category: None,
            opcategory: None,
            local_comonoid: None,
            local_monoid: None,
            antipode: None,
        }
    }

    pub fn n(&self) -> usize {
        self.shape.n()
    }

    pub fn dim(&self, x: usize, y: usize) -> usize {
        self.shape.dim(x, y)
    }

    pub fn cat(&self) -> Result<&CategoryLayer> {
        self.category.as_ref().ok_or(Error::MissingLayer(Layer::Category))
    }

    pub fn opcat(&self) -> Result<&OpcategoryLayer> {
        self.opcategory.as_ref().ok_or(Error::MissingLayer(Layer::Opcategory))
    }

    pub fn comonoid(&self) -> Result<&ComonoidLayer> {
        self.local_comonoid.as_ref().ok_or(Error::MissingLayer(Layer::LocalComonoid))
    }

    pub fn monoid(&self) -> Result<&MonoidLayer> {
        self.local_monoid.as_ref().ok_or(Error::MissingLayer(Layer::LocalMonoid))
    }

    pub fn antipode(&self) -> Result<&AntipodeFamily> {
        self.antipode.as_ref().ok_or(Error::MissingLayer(Layer::Antipode))
    }

    pub fn layers(&self) -> Vec<Layer> {
        let mut out = Vec::new();
        if self.category.is_some() {
            out.push(Layer::Category);
        }
        if self.opcategory.is_some() {
            out.push(Layer::Opcategory);
        }
        if self.local_comonoid.is_some() {
            out.push(Layer::LocalComonoid);
        }
        if self.local_monoid.is_some() {
            out.push(Layer::LocalMonoid);
        }
        if self.antipode.is_some() {
            out.push(Layer::Antipode);
        }
        out
    }

    /// Checks every present layer against the hom dimensions.
    pub fn validate(&self) -> Result<()> {
        let n = self.n();
        let d = |x, y| self.dim(x, y);
        let check = |what: &str, index: Vec<usize>, m: &Matrix, expected: (usize, usize)| {
            if m.shape() == expected {
                Ok(())
            } else {
                Err(Error::DimensionMismatch { what: what.into(), index, expected, found: m.shape() })
            }
        };
        if let Some(c) = &self.category {
            for ((x, y, z), m) in c.comp.iter() {
                check("composition", vec![x, y, z], m, (d(x, z), d(x, y) * d(y, z)))?;
            }
            for (x, u) in c.unit.iter().enumerate() {
                check("unit", vec![x], u, (d(x, x), 1))?;
            }
        }
        if let Some(c) = &self.opcategory {
            for ((x, y, z), m) in c.cocomp.iter() {
                check("cocomposition", vec![x, y, z], m, (d(x, y) * d(y, z), d(x, z)))?;
            }
            for (x, e) in c.counit.iter().enumerate() {
                check("counit", vec![x], e, (1, d(x, x)))?;
            }
        }
        if let Some(c) = &self.local_comonoid {
            for ((x, y), m) in c.comult.iter() {
                check("local comultiplication", vec![x, y], m, (d(x, y) * d(x, y), d(x, y)))?;
            }
            for ((x, y), m) in c.counit.iter() {
                check("local counit", vec![x, y], m, (1, d(x, y)))?;
            }
        }
        if let Some(c) = &self.local_monoid {
            for ((x, y), m) in c.mult.iter() {
                check("local multiplication", vec![x, y], m, (d(x, y), d(x, y) * d(x, y)))?;
            }
            for ((x, y), m) in c.unit.iter() {
                check("local unit", vec![x, y], m, (d(x, y), 1))?;
            }
        }
        if let Some(s) = &self.antipode {
            for ((x, y), m) in s.iter() {
                check("antipode", vec![x, y], m, (d(y, x), d(x, y)))?;
            }
        }
        if let Some(l) = &self.shape.basis_labels {
            for ((x, y), labels) in l.iter() {
                if labels.len() != d(x, y) {
                    return Err(Error::DimensionMismatch {
                        what: "basis labels".into(),
                        index: vec![x, y],
                        expected: (d(x, y), 1),
                        found: (labels.len(), 1),
                    });
                }
            }
        }
        debug_assert!(n == self.shape.dims.objects());
        Ok(())
    }
}

/// Unknowns for several homs laid out back to back.
#[derive(Debug, Clone)]
pub(crate) struct Offsets {
    pub starts: Vec<usize>,
    pub total: usize,
}

impl Offsets {
    pub fn new(sizes: impl IntoIterator<Item = usize>) -> Self {
        let mut starts = Vec::new();
        let mut total = 0;
        for s in sizes {
            starts.push(total);
            total += s;
        }
        Offsets { starts, total }
    }
}
