//! Round trip through the text format.

use fsrx::fst::equivalent;
use fsrx::regex::compile_str;
use fsrx::serialize::{read_text, write_text};

fn main() -> fsrx::Result<()> {
    let net = compile_str("a -> x || c _ ;")?;
    let text = write_text(&net);
    print!("{text}");
    let back = read_text(&text)?;
    println!("# reloaded network is equivalent: {}", equivalent(&net, &back));
    println!("# text is stable: {}", write_text(&back) == text);
    Ok(())
}
