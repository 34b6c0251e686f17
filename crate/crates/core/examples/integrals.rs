//! Integral spaces, their p/q maps and the nonsingularity verdict.

use hopfcat::gallery::{group_algebra, groupoid_category, monoid_bialgebra, sweedler_hopf_algebra, FiniteGroupoid, MonoidTable};
use hopfcat::integrals::{generic_integral, integral_space, nonsingularity_report, Side};
use hopfcat::io::rational_string;

fn main() -> hopfcat::Result<()> {
    let samples = [
        ("kC3", group_algebra(&MonoidTable::cyclic(3))?),
        ("Sweedler", sweedler_hopf_algebra()),
        ("k{1,e}", monoid_bialgebra(&MonoidTable::idempotent2())),
        ("pair(2)", groupoid_category(&FiniteGroupoid::pair(2))),
    ];
    for (name, data) in &samples {
        for side in [Side::Left, Side::Right] {
            for anchor in 0..data.n() {
                let space = integral_space(data, anchor, side)?;
                let first: Vec<String> = space
                    .basis
                    .first()
                    .map(|t| t.vectors[(anchor, anchor)].entries().iter().map(rational_string).collect())
                    .unwrap_or_default();
                println!("{name:9} {side:?} anchor {anchor}: dim {} first [{}]", space.dim(), first.join(", "));
            }
            if let Some(t) = generic_integral(data, side)? {
                let r = nonsingularity_report(data, &t)?;
                println!("{name:9} {side:?} left-nonsingular={} right-nonsingular={}", r.left_nonsingular, r.right_nonsingular);
            }
        }
    }
    Ok(())
}
