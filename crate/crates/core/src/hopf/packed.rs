//! Direct sum of all hom-objects with matched-index multiplication.

use num_traits::{One, Zero};

use crate::error::Result;
use crate::gallery::one_object;
use crate::linalg::{eye, Matrix, Rational};
use crate::report::AxiomReport;
use crate::vcat::{OpcategoryLayer, PairMap, TripleMap, VCatData};

/// A one-object algebra on `⊕ A_{x,y}`. `comult`/`counit` hold either the
/// packed local comonoid or a packed Frobenius cocomposition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PackedAlgebra {
    pub dim: usize,
    pub offsets: PairMap<usize>,
    pub labels: Vec<String>,
    pub mult: Matrix,
    pub unit: Matrix,
    pub comult: Matrix,
    pub counit: Matrix,
    pub antipode: Option<Matrix>,
}

fn layout(data: &VCatData) -> (PairMap<usize>, usize, Vec<String>) {
    let n = data.n();
    let mut next = 0;
    let offsets = PairMap::from_fn(n, |x, y| {
        let o = next;
        next += data.dim(x, y);
        o
    });
    let mut labels = Vec::with_capacity(next);
    for x in 0..n {
        for y in 0..n {
            for i in 0..data.dim(x, y) {
                labels.push(format!("{}:{}", pair_label(data, x, y), data.shape.label(x, y, i)));
            }
        }
    }
    (offsets, next, labels)
}

fn pair_label(data: &VCatData, x: usize, y: usize) -> String {
    format!("{}{}", data.shape.objects[x], data.shape.objects[y])
}

fn packed_multiplication(data: &VCatData, offsets: &PairMap<usize>, total: usize) -> Result<(Matrix, Matrix)> {
    let c = data.cat()?;
    let n = data.n();
    let d = |x, y| data.dim(x, y);
    let mut mult = Matrix::zeros(total, total * total);
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let m = &c.comp[(x, y, z)];
                for i in 0..d(x, y) {
                    for j in 0..d(y, z) {
                        for k in 0..d(x, z) {
                            let v = m.get(k, i * d(y, z) + j);
                            if !v.is_zero() {
                                let col = (offsets[(x, y)] + i) * total + offsets[(y, z)] + j;
                                mult.set(offsets[(x, z)] + k, col, v.clone());
                            }
                        }
                    }
                }
            }
        }
    }
    let mut unit = Matrix::zeros(total, 1);
    for x in 0..n {
        for k in 0..d(x, x) {
            unit.set(offsets[(x, x)] + k, 0, c.unit[x].get(k, 0).clone());
        }
    }
    Ok((mult, unit))
}

/// Packs the category and local comonoid (and antipode, if any).
pub fn pack(data: &VCatData) -> Result<PackedAlgebra> {
    let l = data.comonoid()?;
    let n = data.n();
    let d = |x, y| data.dim(x, y);
    let (offsets, total, labels) = layout(data);
    let (mult, unit) = packed_multiplication(data, &offsets, total)?;
    let mut comult = Matrix::zeros(total * total, total);
    let mut counit = Matrix::zeros(1, total);
    for x in 0..n {
        for y in 0..n {
            let o = offsets[(x, y)];
            let k = d(x, y);
            for a in 0..k {
                for i in 0..k {
                    for j in 0..k {
                        let v = l.comult[(x, y)].get(i * k + j, a);
                        if !v.is_zero() {
                            comult.set((o + i) * total + o + j, o + a, v.clone());
                        }
                    }
                }
                counit.set(0, o + a, l.counit[(x, y)].get(0, a).clone());
            }
        }
    }
    let antipode = data.antipode.as_ref().map(|s| {
        let mut m = Matrix::zeros(total, total);
        for x in 0..n {
            for y in 0..n {
                m.set_block(offsets[(y, x)], offsets[(x, y)], &s[(x, y)]);
            }
        }
        m
    });
    Ok(PackedAlgebra { dim: total, offsets, labels, mult, unit, comult, counit, antipode })
}

/// Packs a Frobenius category: `δ̂(a) = Σ_z δ_{xzy}(a)` for `a ∈ A_{x,y}`, counit `ε_x` on diagonal blocks.
pub fn pack_frobenius_data(data: &VCatData) -> Result<PackedAlgebra> {
    let o = data.opcat()?;
    let n = data.n();
    let d = |x, y| data.dim(x, y);
    let (offsets, total, labels) = layout(data);
    let (mult, unit) = packed_multiplication(data, &offsets, total)?;
    let mut comult = Matrix::zeros(total * total, total);
    let mut counit = Matrix::zeros(1, total);
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let delta = &o.cocomp[(x, z, y)];
                for a in 0..d(x, y) {
                    for i in 0..d(x, z) {
                        for j in 0..d(z, y) {
                            let v = delta.get(i * d(z, y) + j, a);
                            if !v.is_zero() {
                                let row = (offsets[(x, z)] + i) * total + offsets[(z, y)] + j;
                                comult.add_at(row, offsets[(x, y)] + a, v);
                            }
                        }
                    }
                }
            }
        }
        for a in 0..d(x, x) {
            counit.set(0, offsets[(x, x)] + a, o.counit[x].get(0, a).clone());
        }
    }
    Ok(PackedAlgebra { dim: total, offsets, labels, mult, unit, comult, counit, antipode: None })
}

impl PackedAlgebra {
    /// One-object data carrying the packed comonoid as a local comonoid.
    pub fn as_bialgebra_data(&self) -> VCatData {
        one_object(
            self.labels.clone(),
            self.mult.clone(),
            self.unit.clone(),
            self.comult.clone(),
            self.counit.clone(),
            self.antipode.clone(),
        )
    }

    /// One-object data carrying the packed comonoid as an opcategory layer.
    pub fn as_frobenius_data(&self) -> VCatData {
        let mut data = self.as_bialgebra_data();
        data.local_comonoid = None;
        data.antipode = None;
        data.opcategory = Some(OpcategoryLayer {
            cocomp: TripleMap::from_fn(1, |_, _, _| self.comult.clone()),
            counit: vec![self.counit.clone()],
        });
        data
    }

    /// Reads a one-object structure back as a packed algebra.
    pub fn from_one_object(data: &VCatData) -> Result<PackedAlgebra> {
        if data.n() != 1 {
            return Err(crate::Error::Format("weak Hopf checks need exactly one object".into()));
        }
        let c = data.cat()?;
        let l = data.comonoid()?;
        let dim = data.dim(0, 0);
        Ok(PackedAlgebra {
            dim,
            offsets: PairMap::from_fn(1, |_, _| 0),
            labels: (0..dim).map(|i| data.shape.label(0, 0, i)).collect(),
            mult: c.comp[(0, 0, 0)].clone(),
            unit: c.unit[0].clone(),
            comult: l.comult[(0, 0)].clone(),
            counit: l.counit[(0, 0)].clone(),
            antipode: data.antipode.as_ref().map(|s| s[(0, 0)].clone()),
        })
    }

    /// `Δ(1)` as a vector in `A ⊗ A`.
    pub fn comult_of_unit(&self) -> Vec<Rational> {
        (&self.comult * &self.unit).col(0)
    }

    pub fn unit_is_grouplike(&self) -> bool {
        self.comult_of_unit() == self.unit.kron(&self.unit).col(0)
    }
}

/// Sparse products of basis elements.
struct Products {
    dim: usize,
    table: Vec<Vec<(usize, Rational)>>,
}

impl Products {
    fn new(mult: &Matrix, dim: usize) -> Self {
        let table = (0..dim * dim)
            .map(|col| {
                (0..dim)
                    .filter_map(|k| {
                        let v = mult.get(k, col);
                        (!v.is_zero()).then(|| (k, v.clone()))
                    })
                    .collect()
            })
            .collect();
        Products { dim, table }
    }

    /// Factorwise product in `A^{⊗k}` of two tensors given as dense vectors.
    fn tensor(&self, x: &[Rational], y: &[Rational], k: u32) -> Vec<Rational> {
        let d = self.dim;
        let mut out = vec![Rational::zero(); d.pow(k)];
        let digits = |mut i: usize| {
            let mut v = vec![0; k as usize];
            for slot in v.iter_mut().rev() {
                *slot = i % d;
                i /= d;
            }
            v
        };
        for (i, xv) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            let di = digits(i);
            for (j, yv) in y.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                let dj = digits(j);
                let mut partial: Vec<(usize, Rational)> = vec![(0, xv * yv)];
                for t in 0..k as usize {
                    let terms = &self.table[di[t] * d + dj[t]];
                    partial = partial
                        .iter()
                        .flat_map(|(idx, c)| terms.iter().map(move |(m, v)| (idx * d + m, c * v)))
                        .collect();
                }
                for (idx, v) in partial {
                    out[idx] += v;
                }
            }
        }
        out
    }
}

/// Weak bialgebra identities, plus the weak antipode identities when an antipode is present.
pub fn check_weak_hopf(p: &PackedAlgebra) -> AxiomReport {
    let d = p.dim;
    let i = eye(d);
    let mut r = AxiomReport::new();
    let (mu, eta, delta, eps) = (&p.mult, &p.unit, &p.comult, &p.counit);
    r.compare("associativity", &[], &(mu * &mu.kron(&i)), &(mu * &i.kron(mu)));
    r.compare("left unit", &[], &(mu * &eta.kron(&i)), &i);
    r.compare("right unit", &[], &(mu * &i.kron(eta)), &i);
    r.compare("coassociativity", &[], &(&delta.kron(&i) * delta), &(&i.kron(delta) * delta));
    r.compare("left counit", &[], &(&eps.kron(&i) * delta), &i);
    r.compare("right counit", &[], &(&i.kron(eps) * delta), &i);

    let prod = Products::new(mu, d);
    let comult_cols: Vec<Vec<Rational>> = (0..d).map(|a| delta.col(a)).collect();
    let basis = |a: usize| {
        let mut v = vec![Rational::zero(); d];
        v[a] = Rational::one();
        v
    };

    let mut lhs = Matrix::zeros(d * d, d * d);
    let mut rhs = Matrix::zeros(d * d, d * d);
    for a in 0..d {
        for b in 0..d {
            let ab = prod.tensor(&basis(a), &basis(b), 1);
            let left = delta.apply(&ab);
            let right = prod.tensor(&comult_cols[a], &comult_cols[b], 2);
            for k in 0..d * d {
                lhs.set(k, a * d + b, left[k].clone());
                rhs.set(k, a * d + b, right[k].clone());
            }
        }
    }
    r.compare("comultiplication multiplicative", &[], &lhs, &rhs);

    // pairing ε(ab) as a d×d table
    let pair = |a: &[Rational], b: &[Rational]| -> Rational {
        let ab = prod.tensor(a, b, 1);
        eps.apply(&ab)[0].clone()
    };
    let eps_ab: Vec<Vec<Rational>> = (0..d).map(|a| (0..d).map(|b| pair(&basis(a), &basis(b))).collect()).collect();
    let mut abc = Matrix::zeros(1, d * d * d);
    let mut split1 = Matrix::zeros(1, d * d * d);
    let mut split2 = Matrix::zeros(1, d * d * d);
    for a in 0..d {
        for b in 0..d {
            let ab = prod.tensor(&basis(a), &basis(b), 1);
            for c in 0..d {
                let col = (a * d + b) * d + c;
                let whole: Rational = ab.iter().enumerate().map(|(k, v)| v * &eps_ab[k][c]).sum();
                abc.set(0, col, whole);
                let mut s1 = Rational::zero();
                let mut s2 = Rational::zero();
                for (idx, v) in comult_cols[b].iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                    let (b1, b2) = (idx / d, idx % d);
                    s1 += v * &eps_ab[a][b1] * &eps_ab[b2][c];
                    s2 += v * &eps_ab[a][b2] * &eps_ab[b1][c];
                }
                split1.set(0, col, s1);
                split2.set(0, col, s2);
            }
        }
    }
    r.compare("weak counit (first split)", &[], &abc, &split1);
    r.compare("weak counit (second split)", &[], &abc, &split2);

    let one_one = p.comult_of_unit();
    let coassoc_unit = Matrix::column((&delta.kron(&i) * delta).apply(&eta.col(0)));
    let unit_vec = eta.col(0);
    let left_factor: Vec<Rational> = one_one.iter().flat_map(|v| unit_vec.iter().map(move |u| v * u)).collect();
    let right_factor: Vec<Rational> = unit_vec.iter().flat_map(|u| one_one.iter().map(move |v| u * v)).collect();
    let first = Matrix::column(prod.tensor(&left_factor, &right_factor, 3));
    let second = Matrix::column(prod.tensor(&right_factor, &left_factor, 3));
    r.compare("weak unit (first order)", &[], &coassoc_unit, &first);
    r.compare("weak unit (second order)", &[], &coassoc_unit, &second);

    if let Some(s) = &p.antipode {
        let target = counital_target(p, &prod, &one_one);
        let source = counital_source(p, &prod, &one_one);
        r.compare("id * s = target counit map", &[], &(mu * &(&i.kron(s) * delta)), &target);
        r.compare("s * id = source counit map", &[], &(mu * &(&s.kron(&i) * delta)), &source);
        let mut sas = Matrix::zeros(d, d);
        let triple = &delta.kron(&i) * delta;
        for a in 0..d {
            let mut acc = vec![Rational::zero(); d];
            for (idx, v) in triple.col(a).iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                let (a1, a2, a3) = (idx / (d * d), (idx / d) % d, idx % d);
                let left = prod.tensor(&s.col(a1), &basis(a2), 1);
                let full = prod.tensor(&left, &s.col(a3), 1);
                for (k, w) in full.iter().enumerate() {
                    acc[k] += v * w;
                }
            }
            for (k, w) in acc.into_iter().enumerate() {
                sas.set(k, a, w);
            }
        }
        r.compare("s * id * s = s", &[], &sas, s);
    }
    r
}

/// `ε_t(a) = ε(1_1 a) 1_2`.
fn counital_target(p: &PackedAlgebra, prod: &Products, one_one: &[Rational]) -> Matrix {
    let d = p.dim;
    let mut m = Matrix::zeros(d, d);
    for a in 0..d {
        for (idx, c) in one_one.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            let (i, j) = (idx / d, idx % d);
            let prod_ia: Rational = prod.table[i * d + a].iter().map(|(k, v)| v * p.counit.get(0, *k)).sum();
            if !prod_ia.is_zero() {
                m.add_at(j, a, &(c * prod_ia));
            }
        }
    }
    m
}

/// `ε_s(a) = 1_1 ε(a 1_2)`.
fn counital_source(p: &PackedAlgebra, prod: &Products, one_one: &[Rational]) -> Matrix {
    let d = p.dim;
    let mut m = Matrix::zeros(d, d);
    for a in 0..d {
        for (idx, c) in one_one.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            let (i, j) = (idx / d, idx % d);
            let prod_aj: Rational = prod.table[a * d + j].iter().map(|(k, v)| v * p.counit.get(0, *k)).sum();
            if !prod_aj.is_zero() {
                m.add_at(i, a, &(c * prod_aj));
            }
        }
    }
    m
}
