//! Obligatory replacement without context.
//!
//!     cargo run --example unconditional_replace

use fsrx::apply::apply_down;
use fsrx::regex::compile_str;

fn main() -> fsrx::Result<()> {
    let rules = [
        ("a b | c -> x ;", "abaca"),
        ("a b | b c -> x ;", "abc"),
        ("a b -> x .o. b c -> x ;", "abc"),
        ("a -> x ;", "banana"),
    ];
    for (rule, input) in rules {
        let net = compile_str(rule)?;
        let outputs: Vec<String> = apply_down(&net, input).into_iter().collect();
        println!("{rule:<28} {input:>8} => {}", outputs.join(", "));
    }
    Ok(())
}
