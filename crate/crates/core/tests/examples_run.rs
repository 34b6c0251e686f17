//! Every shipped example runs to completion.

use std::process::Command;

const EXAMPLES: [&str; 6] = ["check_axioms", "integrals", "frobenius_systems", "larson_sweedler", "groupoids", "file_format"];

#[test]
fn examples_exit_cleanly() {
    for name in EXAMPLES {
        let out = Command::new(env!("CARGO"))
            .args(["run", "--quiet", "--example", name])
            .current_dir(env!("CARGO_MANIFEST_DIR"))
            .output()
            .expect("cargo runs");
        assert!(out.status.success(), "{name}: {}", String::from_utf8_lossy(&out.stderr));
        assert!(!out.stdout.is_empty(), "{name} printed nothing");
    }
}
