//! Drives the command-line front end in-process and prints its report.

use syzkit::cli::run as cli;

type Res = Result<(), Box<dyn std::error::Error>>;

pub fn run() -> Res {
    let out = cli(["syzkit", "decompose", "--fixture", "laplace-times-grad"]);
    print!("{}", out.stdout);
    if out.code != 0 {
        return Err(format!("exit code {}: {}", out.code, out.stderr).into());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Res {
    run()
}
