//! The regular-expression language: lexer, parser, and compiler to networks.

mod compile;
mod lexer;
mod parser;

pub use compile::{compile_str, Compiler, Definitions};
pub use lexer::{tokenize, Token, TokenKind};
pub use parser::{parse, ContextNode, Node, NodeKind};

use crate::error::Result;

/// Tokenizes and parses one expression.
pub fn parse_str(text: &str) -> Result<Node> {
    parse(&tokenize(text)?)
}
