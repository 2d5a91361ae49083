//! The same contextual rule under each of the four context orientations,
//! plus the six auxiliary relations it is built from.

use fsrx::apply::apply_down;
use fsrx::fst::minimize;
use fsrx::regex::compile_str;
use fsrx::replace::{BracketSymbols, ConditionalParts, Orientation};

fn main() -> fsrx::Result<()> {
    let input = "abababa";
    for o in Orientation::ALL {
        let rule = format!("a b -> x {} a b _ a ;", o.separator());
        let net = minimize(&compile_str(&rule)?);
        println!(
            "{rule:<24} {:>3} states  {input} => {:?}",
            net.num_states(),
            apply_down(&net, input)
        );
    }

    let parts = ConditionalParts::build(
        &compile_str("a b ;")?,
        &compile_str("x ;")?,
        &compile_str("a b ;")?,
        &compile_str("a ;")?,
        &BracketSymbols::default(),
    )?;
    println!();
    for (name, n) in [
        ("insert brackets", &parts.insert),
        ("constrain brackets", &parts.constrain),
        ("left context", &parts.left),
        ("right context", &parts.right),
        ("replace", &parts.replace),
        ("remove brackets", &parts.remove),
    ] {
        println!("{name:<20} {:>3} states {:>4} arcs", n.num_states(), n.num_arcs());
    }
    Ok(())
}
