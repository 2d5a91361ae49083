//! Empty and unrestricted operands: deletion, free insertion, and the
//! degenerate rules that collapse to plain languages.

use fsrx::apply::{apply, split_input, ApplyConfig, Side};
use fsrx::fst::equivalent;
use fsrx::regex::compile_str;

fn main() -> fsrx::Result<()> {
    let delete = compile_str("a | b -> [] ;")?;
    println!("a | b -> []   on aba: {:?}", fsrx::apply::apply_down(&delete, "aba"));

    println!(
        "~$[] -> a|b  is ?*:        {}",
        equivalent(&compile_str("~$[] -> a | b ;")?, &compile_str("?* ;")?)
    );
    println!(
        "a|b -> ~$[]  is ~$[a|b]:   {}",
        equivalent(&compile_str("a | b -> ~$[] ;")?, &compile_str("~$[a | b] ;")?)
    );

    // [] -> a|b inserts without bound; the budget caps insertions per position
    let insert = compile_str("[] -> a | b ;")?;
    for budget in 1..=2 {
        let cfg = ApplyConfig { max_outputs: 20, max_epsilon_insertions: budget, side: Side::Down };
        let r = apply(&insert, &split_input("c", true), &cfg);
        println!("[] -> a|b  on c, budget {budget}: {:?} truncated={}", r.joined(""), r.truncated);
    }
    Ok(())
}
