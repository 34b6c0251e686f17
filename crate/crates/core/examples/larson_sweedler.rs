//! Antipode synthesis from integrals and the full condition report.

use hopfcat::gallery::{groupoid_category, monoid_bialgebra, sweedler_hopf_algebra, FiniteGroupoid, MonoidTable};
use hopfcat::integrals::{generic_integral, Side};
use hopfcat::larson_sweedler::{ls_report, synthesize_antipode};

fn main() -> hopfcat::Result<()> {
    let mut bare = sweedler_hopf_algebra();
    let expected = bare.antipode.take().expect("gallery ships an antipode");
    let left = generic_integral(&bare, Side::Left)?.expect("left integral");
    let right = generic_integral(&bare, Side::Right)?.expect("right integral");
    let (s, report) = synthesize_antipode(&bare, &left, &right)?;
    println!("Sweedler: synthesized antipode matches={} report passed={}", s == expected, report.passed());

    for (name, data) in [
        ("Sweedler", sweedler_hopf_algebra()),
        ("pair(3)", groupoid_category(&FiniteGroupoid::pair(3))),
        ("k{1,e}", monoid_bialgebra(&MonoidTable::idempotent2())),
    ] {
        let r = ls_report(&data)?;
        println!("{name}: hopf={} frobenius={} violations={}", r.hopf, r.frobenius, r.violations.len());
        for c in &r.conditions {
            println!("  [{}] {} {}", if c.holds { "x" } else { " " }, c.label, c.description);
        }
    }
    Ok(())
}
