//! Named example structures, shipped under `fixtures/` in the structure file
//! format.

use crate::frobenius::{CasimirFamily, TraceFamily};
use crate::gallery::{
    frobenius_g_algebra_to_category, group_algebra, groupoid_category, hopf_g_algebra_to_category, monoid_bialgebra,
    sweedler_hopf_algebra, FiniteGroupoid, FrobeniusGAlgebraData, HopfGAlgebraData, MonoidTable,
};
use crate::hopf::pack;
use crate::io::{CandidateFamilies, Structure};
use crate::linalg::{int, Matrix};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FixtureKind {
    /// Category, local comonoid and antipode.
    Hopf,
    /// Category and local comonoid, no antipode declared.
    SemiHopf,
    /// Category and opcategory only.
    Frobenius,
    /// One-object packing of a multi-object category.
    WeakHopf,
}

#[derive(Debug, Clone)]
pub struct Fixture {
    pub file: &'static str,
    pub kind: FixtureKind,
    pub structure: Structure,
}

impl Fixture {
    fn new(file: &'static str, kind: FixtureKind, data: crate::vcat::VCatData) -> Self {
        Fixture { file, kind, structure: Structure::new(data) }
    }
}

pub fn cyclic_group(n: usize) -> Structure {
    Structure::new(group_algebra(&MonoidTable::cyclic(n)).expect("cyclic groups are groups"))
}

/// `Σ g^i ⊗ g^j` in `kC_4 ⊗ kC_4`.
fn c4_tensor(terms: &[(usize, usize)]) -> Matrix {
    let mut m = Matrix::zeros(16, 1);
    for &(i, j) in terms {
        m.set(i * 4 + j, 0, int(1));
    }
    m
}

/// `e ⊗ e + g ⊗ g³ + g² ⊗ g² + g³ ⊗ g`, paired with the trace picking the
/// coefficient of the unit.
pub fn c4_first_system() -> (CasimirFamily, TraceFamily) {
    (
        CasimirFamily::single(c4_tensor(&[(0, 0), (1, 3), (2, 2), (3, 1)])),
        TraceFamily::single(Matrix::unit_vector(4, 0).transpose()),
    )
}

/// `e ⊗ g + g ⊗ e + g² ⊗ g³ + g³ ⊗ g²`, paired with the trace picking the
/// coefficient of `g`.
pub fn c4_second_system() -> (CasimirFamily, TraceFamily) {
    (
        CasimirFamily::single(c4_tensor(&[(0, 1), (1, 0), (2, 3), (3, 2)])),
        TraceFamily::single(Matrix::unit_vector(4, 1).transpose()),
    )
}

fn one() -> Matrix {
    Matrix::identity(1)
}

/// The trivial line bundle of coalgebras over `C_2`.
pub fn c2_line_bundle() -> HopfGAlgebraData {
    HopfGAlgebraData {
        group: MonoidTable::cyclic(2),
        dims: vec![1, 1],
        comult: vec![one(); 2],
        counit: vec![one(); 2],
        mult: vec![vec![one(); 2]; 2],
        unit: one(),
        crossing: Some(vec![vec![one(); 2]; 2]),
        antipode: vec![one(); 2],
    }
}

/// `kC_2` graded by `C_2` with the pairing `ρ(g^a, g^b) = δ_{a+b,0}`.
pub fn c2_graded_frobenius() -> FrobeniusGAlgebraData {
    FrobeniusGAlgebraData {
        group: MonoidTable::cyclic(2),
        dims: vec![1, 1],
        mult: vec![vec![one(); 2]; 2],
        unit: one(),
        form: vec![one(), one()],
    }
}

/// Every shipped fixture.
pub fn fixtures() -> Vec<Fixture> {
    use FixtureKind::*;
    let table_group = |t: MonoidTable| group_algebra(&t).expect("group table");
    let mut c4_frob = cyclic_group(4);
    let (casimir, trace) = c4_first_system();
    c4_frob.families = CandidateFamilies { casimir: Some(casimir), trace: Some(trace), ..Default::default() };
    let mut c4_bare = cyclic_group(4).data;
    c4_bare.antipode = None;
    let kc2 = table_group(MonoidTable::cyclic(2));
    let regular = HopfGAlgebraData::constant(MonoidTable::cyclic(2), &kc2).expect("constant grading");
    let (graded, sys) = frobenius_g_algebra_to_category(&c2_graded_frobenius()).expect("valid pairing");
    let mut graded = Structure::new(graded);
    graded.families.casimir = Some(sys.casimir);
    graded.families.trace = Some(sys.trace);
    let pair2 = groupoid_category(&FiniteGroupoid::pair(2));
    vec![
        Fixture::new("c4.hopf", Hopf, cyclic_group(4).data),
        Fixture { file: "c4-first-casimir.hopf", kind: Hopf, structure: c4_frob },
        Fixture::new("c4-bare.semihopf", SemiHopf, c4_bare),
        Fixture::new("c2.hopf", Hopf, kc2),
        Fixture::new("trivial.hopf", Hopf, table_group(MonoidTable::trivial())),
        Fixture::new("klein4.hopf", Hopf, table_group(MonoidTable::klein_four())),
        Fixture::new("sweedler.hopf", Hopf, sweedler_hopf_algebra()),
        Fixture::new("km.semihopf", SemiHopf, monoid_bialgebra(&MonoidTable::idempotent2())),
        Fixture::new("idempotent3.semihopf", SemiHopf, monoid_bialgebra(&MonoidTable::idempotent3())),
        Fixture::new("pair2.hopf", Hopf, pair2.clone()),
        Fixture::new("pair3.hopf", Hopf, groupoid_category(&FiniteGroupoid::pair(3))),
        Fixture::new(
            "c2-one-object.hopf",
            Hopf,
            groupoid_category(&FiniteGroupoid::from_group(&MonoidTable::cyclic(2)).expect("group")),
        ),
        Fixture::new("c2-swap.hopf", Hopf, groupoid_category(&FiniteGroupoid::c2_swap())),
        Fixture::new("c2-line.hopf", Hopf, hopf_g_algebra_to_category(&c2_line_bundle()).expect("line bundle")),
        Fixture::new("c2-regular.hopf", Hopf, hopf_g_algebra_to_category(&regular).expect("constant grading")),
        Fixture { file: "c2-graded.frobenius", kind: Frobenius, structure: graded },
        Fixture::new("pair2-packed.weakhopf", WeakHopf, pack(&pair2).expect("groupoid packs").as_bialgebra_data()),
    ]
}

pub fn fixture(file: &str) -> Option<Fixture> {
    fixtures().into_iter().find(|f| f.file == file)
}
