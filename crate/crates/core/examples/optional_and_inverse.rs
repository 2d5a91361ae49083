//! Optional replacement and the right-to-left arrows.

use fsrx::apply::{apply_down, apply_up};
use fsrx::regex::compile_str;

fn main() -> fsrx::Result<()> {
    let optional = compile_str("a (->) x ;")?;
    println!("a (->) x   down aa: {:?}", apply_down(&optional, "aa"));

    let inverse = compile_str("x <- a ;")?;
    println!("x <- a     down xa: {:?}", apply_down(&inverse, "xa"));
    println!("x <- a     up   xa: {:?}", apply_up(&inverse, "xa"));

    let optional_inverse = compile_str("x (<-) a ;")?;
    println!("x (<-) a   up   aa: {:?}", apply_up(&optional_inverse, "aa"));

    let plain = compile_str("a -> x ;")?;
    println!("a -> x     up   xx: {:?}", apply_up(&plain, "xx"));
    Ok(())
}
