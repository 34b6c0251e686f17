//! On-disk structure files and JSON reports.
//!
//! A structure file stores every layer as a list of sparse blocks. A block
//! names its index tuple, its shape, and its nonzero entries as
//! `[row, col, "p/q"]`. Blocks that are absent from a declared layer are zero.

use std::collections::BTreeMap;
use std::str::FromStr;

use num_traits::Zero;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::frobenius::{CasimirFamily, TraceFamily};
use crate::integrals::{IntegralFamily, Side};
use crate::larson_sweedler::LSReport;
use crate::linalg::{Matrix, Rational};
use crate::report::AxiomReport;
use crate::vcat::{
    CategoryLayer, ComonoidLayer, MonoidLayer, OpcategoryLayer, PairMap, TripleMap, VCatData, VGraphShape,
};

pub const FORMAT_VERSION: &str = "hopfcat/1";

/// One matrix component of a layer.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SparseBlock {
    pub index: Vec<usize>,
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<(usize, usize, String)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CategoryBlocks {
    pub comp: Vec<SparseBlock>,
    pub unit: Vec<SparseBlock>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OpcategoryBlocks {
    pub cocomp: Vec<SparseBlock>,
    pub counit: Vec<SparseBlock>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComonoidBlocks {
    pub comult: Vec<SparseBlock>,
    pub counit: Vec<SparseBlock>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MonoidBlocks {
    pub mult: Vec<SparseBlock>,
    pub unit: Vec<SparseBlock>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LayerBlocks {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub category: Option<CategoryBlocks>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub opcategory: Option<OpcategoryBlocks>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub local_comonoid: Option<ComonoidBlocks>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub local_monoid: Option<MonoidBlocks>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub antipode: Option<Vec<SparseBlock>>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FamilyBlocks {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub casimir: Option<Vec<SparseBlock>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trace: Option<Vec<SparseBlock>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub left_integral: Option<Vec<SparseBlock>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub right_integral: Option<Vec<SparseBlock>>,
}

impl FamilyBlocks {
    fn is_empty(&self) -> bool {
        self == &FamilyBlocks::default()
    }
}

/// The serialized form of a [`Structure`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StructureFile {
    pub format: String,
    pub objects: Vec<String>,
    pub dims: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<Vec<Vec<String>>>>,
    pub layers: LayerBlocks,
    #[serde(default, skip_serializing_if = "FamilyBlocks::is_empty")]
    pub families: FamilyBlocks,
}

/// Candidate families shipped alongside the layers.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CandidateFamilies {
    pub casimir: Option<CasimirFamily>,
    pub trace: Option<TraceFamily>,
    pub left_integral: Option<IntegralFamily>,
    pub right_integral: Option<IntegralFamily>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Structure {
    pub data: VCatData,
    pub families: CandidateFamilies,
}

impl Structure {
    pub fn new(data: VCatData) -> Self {
        Structure { data, families: CandidateFamilies::default() }
    }
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    Rational::from_str(s.trim()).map_err(|e| Error::Format(format!("bad rational `{s}`: {e}")))
}

/// Lowest-terms `p/q`, or `p` for integers.
pub fn rational_string(r: &Rational) -> String {
    r.to_string()
}

pub fn parse_structure(text: &str) -> Result<Structure> {
    let file: StructureFile = serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))?;
    file.to_structure()
}

pub fn write_structure(s: &Structure) -> String {
    let v = serde_json::to_value(StructureFile::from_structure(s)).expect("structure serializes");
    to_json_text(&v)
}

/// Indented JSON with sorted keys; arrays of scalars stay on one line.
pub fn to_json_text(v: &Value) -> String {
    let mut out = String::new();
    write_value(v, 0, &mut out);
    out.push('\n');
    out
}

fn write_value(v: &Value, indent: usize, out: &mut String) {
    let pad = |k: usize| "  ".repeat(k);
    match v {
        Value::Array(items) if items.is_empty() => out.push_str("[]"),
        Value::Array(items) if items.iter().all(|i| !i.is_array() && !i.is_object()) => {
            out.push_str(&serde_json::to_string(v).expect("scalars serialize"));
        }
        Value::Array(items) => {
            out.push_str("[\n");
            for (k, item) in items.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                write_value(item, indent + 1, out);
                out.push_str(if k + 1 < items.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(indent));
            out.push(']');
        }
        Value::Object(map) if map.is_empty() => out.push_str("{}"),
        Value::Object(map) => {
            out.push_str("{\n");
            for (k, (key, item)) in map.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                out.push_str(&serde_json::to_string(key).expect("keys serialize"));
                out.push_str(": ");
                write_value(item, indent + 1, out);
                out.push_str(if k + 1 < map.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(indent));
            out.push('}');
        }
        _ => out.push_str(&serde_json::to_string(v).expect("scalars serialize")),
    }
}

pub fn read_structure_file(path: &std::path::Path) -> Result<Structure> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Format(format!("{}: {e}", path.display())))?;
    parse_structure(&text)
}

fn encode(index: Vec<usize>, m: &Matrix) -> Option<SparseBlock> {
    let mut entries = Vec::new();
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            let v = m.get(i, j);
            if !v.is_zero() {
                entries.push((i, j, rational_string(v)));
            }
        }
    }
    (!entries.is_empty()).then(|| SparseBlock { index, rows: m.rows(), cols: m.cols(), entries })
}

fn encode_pairs(p: &PairMap<Matrix>) -> Vec<SparseBlock> {
    p.iter().filter_map(|((x, y), m)| encode(vec![x, y], m)).collect()
}

fn encode_triples(t: &TripleMap<Matrix>) -> Vec<SparseBlock> {
    t.iter().filter_map(|((x, y, z), m)| encode(vec![x, y, z], m)).collect()
}

fn encode_list(v: &[Matrix]) -> Vec<SparseBlock> {
    v.iter().enumerate().filter_map(|(x, m)| encode(vec![x], m)).collect()
}

/// Decodes the blocks of one layer component; absent blocks become zero.
struct Decoder<'a> {
    what: &'a str,
    arity: usize,
    n: usize,
}

impl Decoder<'_> {
    fn decode(
        &self,
        blocks: &[SparseBlock],
        shape: impl Fn(&[usize]) -> (usize, usize),
    ) -> Result<BTreeMap<Vec<usize>, Matrix>> {
        let mut out = BTreeMap::new();
        for b in blocks {
            if b.index.len() != self.arity || b.index.iter().any(|&i| i >= self.n) {
                return Err(Error::Format(format!("{}: bad index {:?}", self.what, b.index)));
            }
            if out.contains_key(&b.index) {
                return Err(Error::Format(format!("{}: duplicate block {:?}", self.what, b.index)));
            }
            let expected = shape(&b.index);
            if (b.rows, b.cols) != expected {
                return Err(Error::DimensionMismatch {
                    what: self.what.into(),
                    index: b.index.clone(),
                    expected,
                    found: (b.rows, b.cols),
                });
            }
            let mut m = Matrix::zeros(b.rows, b.cols);
            for (r, c, v) in &b.entries {
                if *r >= b.rows || *c >= b.cols {
                    return Err(Error::Format(format!("{}: entry ({r}, {c}) outside block {:?}", self.what, b.index)));
                }
                m.set(*r, *c, parse_rational(v)?);
            }
            out.insert(b.index.clone(), m);
        }
        Ok(out)
    }

    fn pairs(&self, blocks: &[SparseBlock], shape: impl Fn(usize, usize) -> (usize, usize)) -> Result<PairMap<Matrix>> {
        let mut found = self.decode(blocks, |i| shape(i[0], i[1]))?;
        Ok(PairMap::from_fn(self.n, |x, y| {
            found.remove(&vec![x, y]).unwrap_or_else(|| {
                let (r, c) = shape(x, y);
                Matrix::zeros(r, c)
            })
        }))
    }

    fn triples(
        &self,
        blocks: &[SparseBlock],
        shape: impl Fn(usize, usize, usize) -> (usize, usize),
    ) -> Result<TripleMap<Matrix>> {
        let mut found = self.decode(blocks, |i| shape(i[0], i[1], i[2]))?;
        Ok(TripleMap::from_fn(self.n, |x, y, z| {
            found.remove(&vec![x, y, z]).unwrap_or_else(|| {
                let (r, c) = shape(x, y, z);
                Matrix::zeros(r, c)
            })
        }))
    }

    fn list(&self, blocks: &[SparseBlock], shape: impl Fn(usize) -> (usize, usize)) -> Result<Vec<Matrix>> {
        let mut found = self.decode(blocks, |i| shape(i[0]))?;
        Ok((0..self.n)
            .map(|x| {
                found.remove(&vec![x]).unwrap_or_else(|| {
                    let (r, c) = shape(x);
                    Matrix::zeros(r, c)
                })
            })
            .collect())
    }
}

impl StructureFile {
    pub fn from_structure(s: &Structure) -> StructureFile {
        let data = &s.data;
        let n = data.n();
        let layers = LayerBlocks {
            category: data
                .category
                .as_ref()
                .map(|c| CategoryBlocks { comp: encode_triples(&c.comp), unit: encode_list(&c.unit) }),
            opcategory: data
                .opcategory
                .as_ref()
                .map(|c| OpcategoryBlocks { cocomp: encode_triples(&c.cocomp), counit: encode_list(&c.counit) }),
            local_comonoid: data
                .local_comonoid
                .as_ref()
                .map(|c| ComonoidBlocks { comult: encode_pairs(&c.comult), counit: encode_pairs(&c.counit) }),
            local_monoid: data
                .local_monoid
                .as_ref()
                .map(|c| MonoidBlocks { mult: encode_pairs(&c.mult), unit: encode_pairs(&c.unit) }),
            antipode: data.antipode.as_ref().map(encode_pairs),
        };
        let f = &s.families;
        let families = FamilyBlocks {
            casimir: f.casimir.as_ref().map(|e| encode_pairs(&e.tensors)),
            trace: f.trace.as_ref().map(|t| encode_list(&t.functionals)),
            left_integral: f.left_integral.as_ref().map(|t| encode_pairs(&t.vectors)),
            right_integral: f.right_integral.as_ref().map(|t| encode_pairs(&t.vectors)),
        };
        StructureFile {
            format: FORMAT_VERSION.into(),
            objects: data.shape.objects.clone(),
            dims: (0..n).map(|x| (0..n).map(|y| data.dim(x, y)).collect()).collect(),
            labels: data
                .shape
                .basis_labels
                .as_ref()
                .map(|l| (0..n).map(|x| (0..n).map(|y| l[(x, y)].clone()).collect()).collect()),
            layers,
            families,
        }
    }

    pub fn to_structure(&self) -> Result<Structure> {
        if self.format != FORMAT_VERSION {
            return Err(Error::Format(format!("unsupported format `{}`, expected `{FORMAT_VERSION}`", self.format)));
        }
        let n = self.objects.len();
        if self.dims.len() != n || self.dims.iter().any(|row| row.len() != n) {
            return Err(Error::Format(format!("dims must be a {n} x {n} table")));
        }
        let dims = PairMap::from_fn(n, |x, y| self.dims[x][y]);
        let mut shape = VGraphShape::new(self.objects.clone(), dims);
        if let Some(labels) = &self.labels {
            if labels.len() != n || labels.iter().any(|row| row.len() != n) {
                return Err(Error::Format(format!("labels must be a {n} x {n} table")));
            }
            shape = shape.with_labels(PairMap::from_fn(n, |x, y| labels[x][y].clone()));
        }
        let d = |x: usize, y: usize| self.dims[x][y];
        let dec = |what, arity| Decoder { what, arity, n };
        let mut data = VCatData::new(shape);
        let l = &self.layers;
        if let Some(c) = &l.category {
            data.category = Some(CategoryLayer {
                comp: dec("composition", 3).triples(&c.comp, |x, y, z| (d(x, z), d(x, y) * d(y, z)))?,
                unit: dec("unit", 1).list(&c.unit, |x| (d(x, x), 1))?,
            });
        }
        if let Some(c) = &l.opcategory {
            data.opcategory = Some(OpcategoryLayer {
                cocomp: dec("cocomposition", 3).triples(&c.cocomp, |x, y, z| (d(x, y) * d(y, z), d(x, z)))?,
                counit: dec("counit", 1).list(&c.counit, |x| (1, d(x, x)))?,
            });
        }
        if let Some(c) = &l.local_comonoid {
            data.local_comonoid = Some(ComonoidLayer {
                comult: dec("local comultiplication", 2).pairs(&c.comult, |x, y| (d(x, y) * d(x, y), d(x, y)))?,
                counit: dec("local counit", 2).pairs(&c.counit, |x, y| (1, d(x, y)))?,
            });
        }
        if let Some(c) = &l.local_monoid {
            data.local_monoid = Some(MonoidLayer {
                mult: dec("local multiplication", 2).pairs(&c.mult, |x, y| (d(x, y), d(x, y) * d(x, y)))?,
                unit: dec("local unit", 2).pairs(&c.unit, |x, y| (d(x, y), 1))?,
            });
        }
        if let Some(s) = &l.antipode {
            data.antipode = Some(dec("antipode", 2).pairs(s, |x, y| (d(y, x), d(x, y)))?);
        }
        data.validate()?;

        let f = &self.families;
        let integral = |blocks: &Option<Vec<SparseBlock>>, side, what| -> Result<Option<IntegralFamily>> {
            blocks
                .as_ref()
                .map(|b| Ok(IntegralFamily { side, vectors: dec(what, 2).pairs(b, |x, y| (d(x, y), 1))? }))
                .transpose()
        };
        let families = CandidateFamilies {
            casimir: f
                .casimir
                .as_ref()
                .map(|b| dec("casimir", 2).pairs(b, |x, y| (d(x, y) * d(y, x), 1)).map(CasimirFamily::new))
                .transpose()?,
            trace: f
                .trace
                .as_ref()
                .map(|b| dec("trace", 1).list(b, |x| (1, d(x, x))).map(TraceFamily::new))
                .transpose()?,
            left_integral: integral(&f.left_integral, Side::Left, "left integral")?,
            right_integral: integral(&f.right_integral, Side::Right, "right integral")?,
        };
        Ok(Structure { data, families })
    }
}

pub fn matrix_json(m: &Matrix) -> Value {
    Value::Array((0..m.rows()).map(|i| Value::Array(m.row_vec(i).iter().map(|v| json!(rational_string(v))).collect())).collect())
}

pub fn vector_json(v: &[Rational]) -> Value {
    Value::Array(v.iter().map(|r| json!(rational_string(r))).collect())
}

/// Per-axiom tallies plus every failing entry with its witness.
pub fn axiom_report_json(r: &AxiomReport) -> Value {
    let mut tallies = serde_json::Map::new();
    for c in &r.checks {
        let entry = tallies.entry(c.axiom.clone()).or_insert_with(|| json!({"checked": 0, "failed": 0}));
        entry["checked"] = json!(entry["checked"].as_u64().unwrap_or(0) + 1);
        if !c.passed {
            entry["failed"] = json!(entry["failed"].as_u64().unwrap_or(0) + 1);
        }
    }
    let failures: Vec<Value> = r
        .failures()
        .map(|c| {
            let mut v = json!({"axiom": c.axiom, "indices": c.indices});
            if let Some(w) = &c.witness {
                v["witness"] = json!({"basis_index": w.basis_index, "residual": vector_json(&w.residual)});
            }
            v
        })
        .collect();
    json!({"passed": r.passed(), "axioms": tallies, "failures": failures})
}

pub fn integral_family_json(t: &IntegralFamily) -> Value {
    let mut homs = serde_json::Map::new();
    for ((x, y), v) in t.vectors.iter() {
        if !v.is_zero() {
            homs.insert(format!("{x},{y}"), vector_json(&v.col(0)));
        }
    }
    json!({"side": t.side, "vectors": homs})
}

fn pair_family_json(p: &PairMap<Matrix>) -> Value {
    let mut homs = serde_json::Map::new();
    for ((x, y), m) in p.iter() {
        homs.insert(format!("{x},{y}"), matrix_json(m));
    }
    Value::Object(homs)
}

pub fn ls_report_json(r: &LSReport) -> Value {
    json!({
        "semi_hopf": r.semi_hopf,
        "hopf": r.hopf,
        "antipode_invertible": r.antipode_invertible,
        "nonsingular_left_integral": r.nonsingular_left_integral,
        "nonsingular_right_integral": r.nonsingular_right_integral,
        "right_nonsingular_left_integral": r.right_nonsingular_left_integral,
        "left_integral_dims": r.left_integral_dims,
        "right_integral_dims": r.right_integral_dims,
        "frobenius": r.frobenius,
        "frobenius_source": r.frobenius_source,
        "frobenius_not_hopf": r.frobenius_not_hopf,
        "dimension_condition": r.dimension_condition,
        "conditions": r.conditions,
        "violations": r.violations,
        "consistent": r.consistent,
        "dual_condition": r.dual_condition,
        "antipode": r.antipode.as_ref().map(pair_family_json),
        "synthesized_antipode": r.synthesized_antipode.as_ref().map(pair_family_json),
        "frobenius_trace": r.frobenius_system.as_ref().map(|s| {
            Value::Array(s.trace.functionals.iter().map(matrix_json).collect())
        }),
        "notes": r.notes,
    })
}
