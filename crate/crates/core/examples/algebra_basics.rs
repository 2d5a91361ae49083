//! The underlying calculus: boolean operations, containment, ignoring,
//! products and composition, all through the programmatic API.

use fsrx::algebra::{compose, contains, crossproduct, ignore, intersect, lower, minus, union, upper};
use fsrx::apply::{apply_down, pairs_over};
use fsrx::fst::{equivalent, minimize};
use fsrx::Fst;

fn main() -> fsrx::Result<()> {
    let ab = Fst::word(["a", "b"]);
    let ac = Fst::word(["a", "c"]);
    let either = union(&ab, &ac);
    println!("[a b] | [a c] minimizes to {} states", minimize(&either).num_states());

    let has_ab = contains(&ab)?;
    let neither = minus(&Fst::sigma_star(), &has_ab)?;
    for w in ["cab", "acb", "bba"] {
        println!("~$[a b] accepts {w}: {}", !apply_down(&neither, w).is_empty());
    }

    let noisy = ignore(&ab, &Fst::symbol("x".into()))?;
    println!("[a b]/x accepts xaxxb: {}", !apply_down(&noisy, "xaxxb").is_empty());

    let both = intersect(&has_ab, &contains(&ac)?)?;
    println!("$[a b] & $[a c] accepts acab: {}", !apply_down(&both, "acab").is_empty());

    let product = crossproduct(&ab, &Fst::word(["x"]))?;
    println!("[a b] .x. x pairs: {:?}", pairs_over(&product, 2, &[]));
    println!("projections recover operands: {}", equivalent(&upper(&product), &ab) && equivalent(&lower(&product), &Fst::word(["x"])));

    let chain = compose(&product, &crossproduct(&Fst::word(["x"]), &Fst::word(["y", "y"]))?);
    println!("[a b .x. x] .o. [x .x. y y] on ab: {:?}", apply_down(&chain, "ab"));
    Ok(())
}
