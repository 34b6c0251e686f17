//! Groupoid categories: Hopf and Frobenius checks, then packing into one weak Hopf algebra.

use hopfcat::frobenius::casimir_from_comult;
use hopfcat::gallery::{groupoid_category, FiniteGroupoid, MonoidTable};
use hopfcat::hopf::{check_weak_hopf, pack};
use hopfcat::integrals::{integral_from_casimir, Side};
use hopfcat::vcat::{verify_axioms, AxiomSet};

fn main() -> hopfcat::Result<()> {
    let rotation = FiniteGroupoid::action(
        &MonoidTable::cyclic(4),
        vec!["a".into(), "b".into()],
        &[vec![0, 1], vec![1, 0], vec![0, 1], vec![1, 0]],
    )?;
    let groupoids = [
        ("pair(2)", FiniteGroupoid::pair(2)),
        ("C2 swap", FiniteGroupoid::c2_swap()),
        ("C4 on 2 points", rotation),
    ];
    for (name, g) in &groupoids {
        let data = groupoid_category(g);
        let hopf = verify_axioms(&data, AxiomSet::Hopf)?.passed();
        let frob = verify_axioms(&data, AxiomSet::Frobenius)?.passed();
        let sys = casimir_from_comult(&data)?;
        let t = integral_from_casimir(&data, &sys.casimir, Side::Left)?;
        let p = pack(&data)?;
        println!(
            "{name}: hopf={hopf} frobenius={frob} integral(0,0)={:?} packed dim={} weak hopf={} unit grouplike={}",
            t.vectors[(0, 0)].entries().iter().map(|r| r.to_string()).collect::<Vec<_>>(),
            p.dim,
            check_weak_hopf(&p).passed(),
            p.unit_is_grouplike()
        );
    }
    Ok(())
}
