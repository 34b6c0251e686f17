//! Constructors for worked examples: group and monoid algebras, groupoid
//! categories, a non-cocommutative Hopf algebra, and graded-algebra translations.

mod graded;
mod groupoid;

pub use graded::{
    check_hopf_g_algebra, frobenius_g_algebra_to_category, hopf_g_algebra_to_category, FrobeniusGAlgebraData,
    HopfGAlgebraData,
};
pub use groupoid::{groupoid_category, FiniteGroupoid};

use crate::error::{Error, Result};
use crate::linalg::{int, Matrix};
use crate::vcat::{CategoryLayer, ComonoidLayer, PairMap, TripleMap, VCatData, VGraphShape};

/// Finite monoid given by its multiplication table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonoidTable {
    labels: Vec<String>,
    table: Vec<Vec<usize>>,
    identity: usize,
}

impl MonoidTable {
    /// Validates closure, associativity and a two-sided identity.
    pub fn new(labels: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::InvalidTable("empty table".into()));
        }
        if table.len() != n || table.iter().any(|r| r.len() != n || r.iter().any(|&v| v >= n)) {
            return Err(Error::InvalidTable(format!("table must be {n}x{n} with entries below {n}")));
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::InvalidTable(format!(
                            "not associative on ({}, {}, {})",
                            labels[a], labels[b], labels[c]
                        )));
                    }
                }
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| table[e][a] == a && table[a][e] == a))
            .ok_or_else(|| Error::InvalidTable("no identity element".into()))?;
        Ok(MonoidTable { labels, table, identity })
    }

    /// Cyclic group of order `n` with elements `e, g, g^2, ...`.
    pub fn cyclic(n: usize) -> Self {
        let labels = (0..n)
            .map(|i| match i {
                0 => "e".to_string(),
                1 => "g".to_string(),
                _ => format!("g^{i}"),
            })
            .collect();
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        MonoidTable::new(labels, table).expect("cyclic table is valid")
    }

    pub fn trivial() -> Self {
        MonoidTable::cyclic(1)
    }

    pub fn klein_four() -> Self {
        let labels = ["e", "a", "b", "c"].map(String::from).to_vec();
        let table = (0..4).map(|a| (0..4).map(|b| a ^ b).collect()).collect();
        MonoidTable::new(labels, table).expect("Klein table is valid")
    }

    /// `{e, g | g^2 = g}`.
    pub fn idempotent2() -> Self {
        let labels = ["e", "g"].map(String::from).to_vec();
        MonoidTable::new(labels, vec![vec![0, 1], vec![1, 1]]).expect("valid table")
    }

    /// `{e, a, b | a^2 = a, b^2 = b, ab = ba = b}`.
    pub fn idempotent3() -> Self {
        let labels = ["e", "a", "b"].map(String::from).to_vec();
        let table = vec![vec![0, 1, 2], vec![1, 1, 2], vec![2, 2, 2]];
        MonoidTable::new(labels, table).expect("valid table")
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inverse(&self, a: usize) -> Option<usize> {
        (0..self.order()).find(|&b| self.mul(a, b) == self.identity && self.mul(b, a) == self.identity)
    }

    pub fn is_group(&self) -> bool {
        (0..self.order()).all(|a| self.inverse(a).is_some())
    }
}

/// Assembles one-object data from its structure maps.
pub fn one_object(
    labels: Vec<String>,
    mult: Matrix,
    unit: Matrix,
    comult: Matrix,
    counit: Matrix,
    antipode: Option<Matrix>,
) -> VCatData {
    let d = labels.len();
    let shape = VGraphShape::single(d).with_labels(PairMap::from_fn(1, |_, _| labels.clone()));
    let mut data = VCatData::new(shape);
    data.category = Some(CategoryLayer { comp: TripleMap::from_fn(1, |_, _, _| mult.clone()), unit: vec![unit] });
    data.local_comonoid = Some(ComonoidLayer {
        comult: PairMap::from_fn(1, |_, _| comult.clone()),
        counit: PairMap::from_fn(1, |_, _| counit.clone()),
    });
    data.antipode = antipode.map(|s| PairMap::from_fn(1, |_, _| s.clone()));
    data
}

/// Monoid algebra with grouplike basis: `Δ(g) = g ⊗ g`, `ε(g) = 1`. No antipode.
pub fn monoid_bialgebra(m: &MonoidTable) -> VCatData {
    let d = m.order();
    let mut mult = Matrix::zeros(d, d * d);
    for a in 0..d {
        for b in 0..d {
            mult.set(m.mul(a, b), a * d + b, int(1));
        }
    }
    let mut comult = Matrix::zeros(d * d, d);
    for a in 0..d {
        comult.set(a * d + a, a, int(1));
    }
    let counit = Matrix::new(1, d, vec![int(1); d]);
    one_object(m.labels().to_vec(), mult, Matrix::unit_vector(d, m.identity()), comult, counit, None)
}

/// Group algebra with antipode `s(g) = g^{-1}`.
pub fn group_algebra(g: &MonoidTable) -> Result<VCatData> {
    if !g.is_group() {
        return Err(Error::InvalidTable("table is not a group".into()));
    }
    let d = g.order();
    let mut s = Matrix::zeros(d, d);
    for a in 0..d {
        s.set(g.inverse(a).expect("group element"), a, int(1));
    }
    let mut data = monoid_bialgebra(g);
    data.antipode = Some(PairMap::from_fn(1, |_, _| s.clone()));
    Ok(data)
}

/// The four-dimensional Hopf algebra generated by `g, x` with `g^2 = 1`,
/// `x^2 = 0`, `xg = -gx`, `Δ(x) = x ⊗ 1 + g ⊗ x`. Neither commutative nor
/// cocommutative, and its antipode has order four.
pub fn sweedler_hopf_algebra() -> VCatData {
    // basis g^a x^b at index a + 2b: 1, g, x, gx
    let idx = |a: usize, b: usize| a + 2 * b;
    let mut mult = Matrix::zeros(4, 16);
    for (a, b, c, e) in (0..16).map(|k| (k & 1, (k >> 1) & 1, (k >> 2) & 1, (k >> 3) & 1)) {
        if b + e > 1 {
            continue;
        }
        let sign = if b * c == 1 { -1 } else { 1 };
        mult.set(idx((a + c) % 2, b + e), idx(a, b) * 4 + idx(c, e), int(sign));
    }
    let mut comult = Matrix::zeros(16, 4);
    let mut put = |col: usize, l: usize, r: usize, v: i64| comult.set(l * 4 + r, col, int(v));
    put(0, 0, 0, 1);
    put(1, 1, 1, 1);
    put(2, 2, 0, 1);
    put(2, 1, 2, 1);
    put(3, 3, 1, 1);
    put(3, 0, 3, 1);
    let counit = Matrix::from_i64(1, 4, &[1, 1, 0, 0]);
    let antipode = Matrix::from_i64(4, 4, &[1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, -1, 0]);
    let labels = ["1", "g", "x", "gx"].map(String::from).to_vec();
    one_object(labels, mult, Matrix::unit_vector(4, 0), comult, counit, Some(antipode))
}

/// Object labels `x, y, z` for small counts and `o0, o1, ...` otherwise.
pub(crate) fn object_names(n: usize) -> Vec<String> {
    if n <= 3 {
        ["x", "y", "z"][..n].iter().map(|s| s.to_string()).collect()
    } else {
        (0..n).map(|i| format!("o{i}")).collect()
    }
}
