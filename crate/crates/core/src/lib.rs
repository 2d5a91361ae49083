//! A finite-state calculus with replace operators.
//!
//! Regular expressions, including obligatory, optional, inverse, and
//! context-conditioned replacement, compile to finite-state transducers
//! ([`Fst`]) that can be applied to strings, compared, saved, and drawn.
//!
//! ```
//! use fsrx::apply::apply_down;
//! use fsrx::regex::compile_str;
//!
//! let rule = compile_str("a b -> x || a b _ a ;").unwrap();
//! let out: Vec<String> = apply_down(&rule, "abababa").into_iter().collect();
//! assert_eq!(out, ["abxxa"]);
//! ```

pub mod algebra;
pub mod apply;
pub mod commands;
pub mod dot;
pub mod error;
pub mod fst;
pub mod regex;
pub mod replace;
pub mod script;
pub mod serialize;
pub mod symbol;

pub use error::{Error, Result};
pub use fst::Fst;
pub use symbol::{Label, Symbol};
