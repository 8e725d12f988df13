//! Runs every built-in fixture against its recorded expectations.

use syzkit::corpus::{check_expectations, load_all};

type Res = Result<(), Box<dyn std::error::Error>>;

pub fn run() -> Res {
    let mut mismatches = 0;
    for fx in load_all()? {
        let checks = check_expectations(&fx)?;
        let bad: Vec<_> = checks.iter().filter(|c| !c.passed).collect();
        mismatches += bad.len();
        println!("{:<20} {:>2} fields  {}", fx.name, checks.len(), if bad.is_empty() { "ok" } else { "MISMATCH" });
        for c in bad {
            println!("    {c}");
        }
    }
    if mismatches > 0 {
        return Err(format!("{mismatches} mismatching fields").into());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Res {
    run()
}
