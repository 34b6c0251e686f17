//! Writes a structure file, reads it back, and reports on it in JSON.

use hopfcat::catalog::fixture;
use hopfcat::io::{axiom_report_json, parse_structure, to_json_text, write_structure};
use hopfcat::vcat::{verify_axioms, AxiomSet};

fn main() -> hopfcat::Result<()> {
    let s = fixture("c2.hopf").expect("shipped fixture").structure;
    let text = write_structure(&s);
    println!("{text}");
    let back = parse_structure(&text)?;
    assert_eq!(back, s);
    let report = verify_axioms(&back.data, AxiomSet::Hopf)?;
    println!("{}", to_json_text(&axiom_report_json(&report)));

    let err = parse_structure(r#"{"format": "hopfcat/1", "objects": ["x"], "dims": [[1]], "layers": {"braiding": []}}"#)
        .unwrap_err();
    println!("rejected: {err}");
    Ok(())
}
