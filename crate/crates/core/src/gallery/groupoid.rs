use super::{object_names, MonoidTable};
use crate::error::{Error, Result};
use crate::linalg::{int, Matrix};
use crate::vcat::{
    CategoryLayer, ComonoidLayer, MonoidLayer, OpcategoryLayer, PairMap, TripleMap, VCatData,
    VGraphShape,
};

/// Finite groupoid. `homs[(x, y)]` lists the arrows `y -> x`, and
/// `compose[(x, y, z)][i][j]` is the index in `homs[(x, z)]` of `g_i ∘ h_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroupoid {
    objects: Vec<String>,
    homs: PairMap<Vec<String>>,
    compose: TripleMap<Vec<Vec<usize>>>,
    identity: Vec<usize>,
    inverse: PairMap<Vec<usize>>,
}

impl FiniteGroupoid {
    /// Validates the composition table and derives identities and inverses.
    pub fn new(
        objects: Vec<String>,
        homs: PairMap<Vec<String>>,
        compose: TripleMap<Vec<Vec<usize>>>,
    ) -> Result<Self> {
        let n = objects.len();
        let size = |x, y| homs[(x, y)].len();
        let bad = |msg: String| Err(Error::InvalidGroupoid(msg));
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let t = &compose[(x, y, z)];
                    if t.len() != size(x, y)
                        || t.iter().any(|r| r.len() != size(y, z) || r.iter().any(|&k| k >= size(x, z)))
                    {
                        return bad(format!("composition table ({x}, {y}, {z}) has the wrong shape"));
                    }
                }
            }
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    for w in 0..n {
                        for a in 0..size(x, y) {
                            for b in 0..size(y, z) {
                                for c in 0..size(z, w) {
                                    let l = compose[(x, z, w)][compose[(x, y, z)][a][b]][c];
                                    let r = compose[(x, y, w)][a][compose[(y, z, w)][b][c]];
                                    if l != r {
                                        return bad(format!("composition not associative at ({x}, {y}, {z}, {w})"));
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        let mut identity = Vec::with_capacity(n);
        for x in 0..n {
            let id = (0..size(x, x)).find(|&e| {
                (0..n).all(|y| {
                    (0..size(x, y)).all(|a| compose[(x, x, y)][e][a] == a)
                        && (0..size(y, x)).all(|a| compose[(y, x, x)][a][e] == a)
                })
            });
            match id {
                Some(e) => identity.push(e),
                None => return bad(format!("object {} has no identity arrow", objects[x])),
            }
        }
        let inverse = PairMap::try_from_fn(n, |x, y| {
            (0..size(x, y))
                .map(|a| {
                    (0..size(y, x))
                        .find(|&b| compose[(x, y, x)][a][b] == identity[x] && compose[(y, x, y)][b][a] == identity[y])
                        .ok_or_else(|| Error::InvalidGroupoid(format!("arrow {} has no inverse", homs[(x, y)][a])))
                })
                .collect::<Result<Vec<_>>>()
        })?;
        Ok(FiniteGroupoid { objects, homs, compose, identity, inverse })
    }

    /// One arrow between every ordered pair of `n` objects.
    pub fn pair(n: usize) -> Self {
        let objects = object_names(n);
        let homs = PairMap::from_fn(n, |x, y| vec![format!("{}<-{}", objects[x], objects[y])]);
        let compose = TripleMap::from_fn(n, |_, _, _| vec![vec![0]]);
        FiniteGroupoid::new(objects, homs, compose).expect("pair groupoid is valid")
    }

    /// A group as a one-object groupoid.
    pub fn from_group(g: &MonoidTable) -> Result<Self> {
        if !g.is_group() {
            return Err(Error::InvalidGroupoid("table is not a group".into()));
        }
        let homs = PairMap::from_fn(1, |_, _| g.labels().to_vec());
        let compose = TripleMap::from_fn(1, |_, _, _| {
            (0..g.order()).map(|a| (0..g.order()).map(|b| g.mul(a, b)).collect()).collect()
        });
        FiniteGroupoid::new(vec!["*".into()], homs, compose)
    }

    /// Action groupoid: objects are points, arrows `y -> x` are group elements `g` with `g·y = x`.
    /// `act[g][p]` is the image of point `p` under `g`.
    pub fn action(g: &MonoidTable, points: Vec<String>, act: &[Vec<usize>]) -> Result<Self> {
        if !g.is_group() {
            return Err(Error::InvalidGroupoid("acting table is not a group".into()));
        }
        let n = points.len();
        let ok_shape = act.len() == g.order() && act.iter().all(|r| r.len() == n && r.iter().all(|&p| p < n));
        let is_action = ok_shape
            && (0..n).all(|p| act[g.identity()][p] == p)
            && (0..g.order())
                .all(|a| (0..g.order()).all(|b| (0..n).all(|p| act[g.mul(a, b)][p] == act[a][act[b][p]])));
        if !is_action {
            return Err(Error::InvalidGroupoid("table is not a group action".into()));
        }
        let arrows = PairMap::from_fn(n, |x, y| (0..g.order()).filter(|&a| act[a][y] == x).collect::<Vec<_>>());
        let homs = arrows.map(|_, y, els| {
            els.iter().map(|&a| format!("{}@{}", g.labels()[a], points[y])).collect()
        });
        let compose = TripleMap::from_fn(n, |x, y, z| {
            arrows[(x, y)]
                .iter()
                .map(|&a| {
                    arrows[(y, z)]
                        .iter()
                        .map(|&b| {
                            let ab = g.mul(a, b);
                            arrows[(x, z)].iter().position(|&c| c == ab).expect("closed under composition")
                        })
                        .collect()
                })
                .collect()
        });
        FiniteGroupoid::new(points, homs, compose)
    }

    /// The cyclic group of order two swapping two points.
    pub fn c2_swap() -> Self {
        let points = vec!["p".into(), "q".into()];
        FiniteGroupoid::action(&MonoidTable::cyclic(2), points, &[vec![0, 1], vec![1, 0]])
            .expect("swap action is valid")
    }

    /// Disjoint union with no arrows between the two parts.
    pub fn disjoint_union(&self, other: &FiniteGroupoid) -> Result<Self> {
        let n1 = self.objects.len();
        let n = n1 + other.objects.len();
        let objects: Vec<String> = self.objects.iter().chain(&other.objects).cloned().collect();
        let side = |x: usize| if x < n1 { (0, x) } else { (1, x - n1) };
        let homs = PairMap::from_fn(n, |x, y| match (side(x), side(y)) {
            ((0, a), (0, b)) => self.homs[(a, b)].clone(),
            ((1, a), (1, b)) => other.homs[(a, b)].clone(),
            _ => Vec::new(),
        });
        let compose = TripleMap::from_fn(n, |x, y, z| match (side(x), side(y), side(z)) {
            ((0, a), (0, b), (0, c)) => self.compose[(a, b, c)].clone(),
            ((1, a), (1, b), (1, c)) => other.compose[(a, b, c)].clone(),
            _ => {
                let rows = if side(x).0 == side(y).0 { homs[(x, y)].len() } else { 0 };
                vec![Vec::new(); rows]
            }
        });
        FiniteGroupoid::new(objects, homs, compose)
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn hom(&self, x: usize, y: usize) -> &[String] {
        &self.homs[(x, y)]
    }

    pub fn compose(&self, x: usize, y: usize, z: usize, a: usize, b: usize) -> usize {
        self.compose[(x, y, z)][a][b]
    }

    pub fn identity(&self, x: usize) -> usize {
        self.identity[x]
    }

    pub fn inverse(&self, x: usize, y: usize, a: usize) -> usize {
        self.inverse[(x, y)][a]
    }
}

/// Groupoid algebra with its Hopf structure (`Δg = g ⊗ g`, `s(g) = g^{-1}`),
/// its Frobenius cocomposition `δ_{xyz}(g) = Σ_h g h^{-1} ⊗ h` with counit
/// detecting identities, and the local monoid `μ(g ⊗ h) = [g = h] g`, `η = Σ g`.
pub fn groupoid_category(g: &FiniteGroupoid) -> VCatData {
    let n = g.objects.len();
    let d = |x: usize, y: usize| g.homs[(x, y)].len();
    let shape = VGraphShape::new(g.objects.clone(), PairMap::from_fn(n, d)).with_labels(g.homs.clone());
    let comp = TripleMap::from_fn(n, |x, y, z| {
        let mut m = Matrix::zeros(d(x, z), d(x, y) * d(y, z));
        for a in 0..d(x, y) {
            for b in 0..d(y, z) {
                m.set(g.compose(x, y, z, a, b), a * d(y, z) + b, int(1));
            }
        }
        m
    });
    let unit = (0..n).map(|x| Matrix::unit_vector(d(x, x), g.identity(x))).collect();
    let diagonal = |k: usize| {
        let mut m = Matrix::zeros(k * k, k);
        for a in 0..k {
            m.set(a * k + a, a, int(1));
        }
        m
    };
    let cocomp = TripleMap::from_fn(n, |x, y, z| {
        let mut m = Matrix::zeros(d(x, y) * d(y, z), d(x, z));
        for a in 0..d(x, z) {
            for h in 0..d(y, z) {
                let gh = g.compose(x, z, y, a, g.inverse(y, z, h));
                m.set(gh * d(y, z) + h, a, int(1));
            }
        }
        m
    });
    let counit = (0..n)
        .map(|x| {
            let mut e = Matrix::zeros(1, d(x, x));
            e.set(0, g.identity(x), int(1));
            e
        })
        .collect();
    let mut data = VCatData::new(shape);
    data.category = Some(CategoryLayer { comp, unit });
    data.local_comonoid = Some(ComonoidLayer {
        comult: PairMap::from_fn(n, |x, y| diagonal(d(x, y))),
        counit: PairMap::from_fn(n, |x, y| Matrix::new(1, d(x, y), vec![int(1); d(x, y)])),
    });
    data.antipode = Some(PairMap::from_fn(n, |x, y| {
        let mut s = Matrix::zeros(d(y, x), d(x, y));
        for a in 0..d(x, y) {
            s.set(g.inverse(x, y, a), a, int(1));
        }
        s
    }));
    data.opcategory = Some(OpcategoryLayer { cocomp, counit });
    data.local_monoid = Some(MonoidLayer {
        mult: PairMap::from_fn(n, |x, y| diagonal(d(x, y)).transpose()),
        unit: PairMap::from_fn(n, |x, y| Matrix::column(vec![int(1); d(x, y)])),
    });
    data
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vcat::{verify_axioms, AxiomSet};

    fn all_groupoids() -> Vec<FiniteGroupoid> {
        let c2 = FiniteGroupoid::from_group(&MonoidTable::cyclic(2)).unwrap();
        vec![
            FiniteGroupoid::pair(2),
            FiniteGroupoid::pair(3),
            c2.clone(),
            FiniteGroupoid::c2_swap(),
            c2.disjoint_union(&c2).unwrap(),
        ]
    }

    #[test]
    fn groupoid_categories_pass_all_batteries() {
        for g in all_groupoids() {
            let data = groupoid_category(&g);
            data.validate().unwrap();
            for set in [AxiomSet::Hopf, AxiomSet::Frobenius, AxiomSet::LocalMonoid] {
                let r = verify_axioms(&data, set).unwrap();
                assert!(r.passed(), "{set} failed on {:?}: {:?}", g.objects(), r.first_failure());
            }
        }
    }

    #[test]
    fn swap_action_has_one_arrow_per_pair() {
        let g = FiniteGroupoid::c2_swap();
        for x in 0..2 {
            for y in 0..2 {
                assert_eq!(g.hom(x, y).len(), 1);
            }
        }
    }

    #[test]
    fn disjoint_union_has_empty_cross_homs() {
        let c2 = FiniteGroupoid::from_group(&MonoidTable::cyclic(2)).unwrap();
        let u = c2.disjoint_union(&c2).unwrap();
        assert!(u.hom(0, 1).is_empty());
        assert_eq!(u.hom(1, 1).len(), 2);
    }

    #[test]
    fn rejects_missing_inverse() {
        let homs = PairMap::from_fn(1, |_, _| vec!["e".to_string(), "g".to_string()]);
        let compose = TripleMap::from_fn(1, |_, _, _| vec![vec![0, 1], vec![1, 1]]);
        assert!(matches!(
            FiniteGroupoid::new(vec!["*".into()], homs, compose),
            Err(Error::InvalidGroupoid(_))
        ));
    }
}
