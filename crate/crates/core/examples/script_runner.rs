//! Runs a script file, or the bundled sample when no path is given.
//!
//!     cargo run --example script_runner -- crates/core/examples/rules.fsx

use std::path::Path;

use fsrx::script::Session;

const SAMPLE: &str = include_str!("rules.fsx");

fn main() {
    let arg = std::env::args().nth(1);
    let (text, dir) = match &arg {
        Some(path) => {
            let text = std::fs::read_to_string(path).unwrap_or_else(|e| panic!("{path}: {e}"));
            (text, Path::new(path).parent().unwrap_or(Path::new(".")).to_path_buf())
        }
        None => (SAMPLE.to_string(), std::env::temp_dir()),
    };
    match Session::with_base_dir(dir).run(&text) {
        Ok(out) => print!("{out}"),
        Err(e) => {
            eprintln!("error:{}: {e}", e.category());
            std::process::exit(e.exit_code());
        }
    }
}
