//! Verifies every axiom set on a few gallery structures and shows a failure witness.

use hopfcat::gallery::{group_algebra, monoid_bialgebra, sweedler_hopf_algebra, MonoidTable};
use hopfcat::hopf::solve_antipode;
use hopfcat::io::rational_string;
use hopfcat::linalg::int;
use hopfcat::vcat::{verify_axioms, AxiomSet};

fn main() -> hopfcat::Result<()> {
    let samples = [
        ("kC4", group_algebra(&MonoidTable::cyclic(4))?),
        ("Sweedler", sweedler_hopf_algebra()),
        ("k{1,e}", monoid_bialgebra(&MonoidTable::idempotent2())),
    ];
    for (name, data) in &samples {
        for set in [AxiomSet::Category, AxiomSet::SemiHopf, AxiomSet::Hopf] {
            match verify_axioms(data, set) {
                Ok(r) => println!("{name:10} {set:10} passed={}", r.passed()),
                Err(e) => println!("{name:10} {set:10} error: {e}"),
            }
        }
        match solve_antipode(data) {
            Ok(s) => println!("{name:10} antipode solved, s(0,0) is {}x{}", s[(0, 0)].rows(), s[(0, 0)].cols()),
            Err(e) => println!("{name:10} no antipode: {e}"),
        }
    }

    let mut broken = sweedler_hopf_algebra();
    broken.antipode.as_mut().unwrap()[(0, 0)].set(0, 0, int(2));
    let report = verify_axioms(&broken, AxiomSet::Hopf)?;
    if let Some(f) = report.first_failure() {
        println!("perturbed Sweedler fails `{}` at {:?}", f.axiom, f.indices);
        if let Some(w) = &f.witness {
            let residual: Vec<String> = w.residual.iter().map(rational_string).collect();
            println!("  on basis element {}: residual [{}]", w.basis_index, residual.join(", "));
        }
    }
    Ok(())
}
