//! One PASS/FAIL line per acceptance criterion. Set `CATEGORIFY_SLOW=1` for
//! the computations beyond twelve crossings.

use categorify::verify::{criterion, Check, VerifyOptions};

/// Criterion 14 asks for a unit match between the graph series J_C and a
/// finite Jones polynomial; it does not exist, so those checks report FAIL.
fn known_defect(c: u8, check: &Check) -> bool {
    c == 14 && check.name.starts_with("J_C")
}

fn main() {
    let opts = VerifyOptions { slow: std::env::var("CATEGORIFY_SLOW").is_ok_and(|v| v == "1"), ..Default::default() };
    let mut unexpected = Vec::new();
    for c in 1..=14u8 {
        let report = criterion(c, &opts).unwrap_or_else(|e| panic!("criterion {c}: {e}"));
        if report.passed() {
            println!("PASS {c}: {}", report.title);
        } else {
            let failed: Vec<&str> = report.failures().map(|f| f.name.as_str()).collect();
            println!("FAIL {c}: {} [{}]", report.title, failed.join("; "));
        }
        for check in &report.checks {
            if known_defect(c, check) {
                assert!(!check.passed, "a unit match appeared: {} = {}", check.name, check.actual);
            } else if !check.passed {
                unexpected.push(format!("{c}: {} expected {} got {}", check.name, check.expected, check.actual));
            }
        }
    }
    if !unexpected.is_empty() {
        eprintln!("unexpected failures:\n{}", unexpected.join("\n"));
        std::process::exit(1);
    }
}
