//! Casimir/trace pairs on kC4: two candidate pairs checked, a third synthesized
//! from the left integral, and a trace search on a bialgebra without antipode.

use hopfcat::catalog::{c4_first_system, c4_second_system};
use hopfcat::frobenius::{calabi_yau_check, check_casimir, check_frobenius_system, find_frobenius_system, FrobeniusSystem};
use hopfcat::gallery::{group_algebra, monoid_bialgebra, MonoidTable};
use hopfcat::integrals::{generic_integral, Side};
use hopfcat::larson_sweedler::frobenius_from_hopf_integral;

fn main() -> hopfcat::Result<()> {
    let kc4 = group_algebra(&MonoidTable::cyclic(4))?;
    for (name, (casimir, trace)) in [("first", c4_first_system()), ("second", c4_second_system())] {
        let sys = FrobeniusSystem { casimir, trace };
        println!(
            "{name} pair: casimir={} frobenius={}",
            check_casimir(&kc4, &sys.casimir)?.passed(),
            check_frobenius_system(&kc4, &sys)?.passed()
        );
    }

    let t = generic_integral(&kc4, Side::Left)?.expect("kC4 has a left integral");
    let synth = frobenius_from_hopf_integral(&kc4, &t)?;
    println!("from integral: report passed={}", synth.report.passed());
    println!("calabi-yau: {:?}", calabi_yau_check(&kc4, &synth.system.trace)?);

    let km = monoid_bialgebra(&MonoidTable::idempotent2());
    match find_frobenius_system(&km, 16)? {
        Some(sys) => println!("k{{1,e}} trace found: {:?}", sys.trace.functionals[0]),
        None => println!("k{{1,e}}: no trace among the candidates"),
    }
    Ok(())
}
