use std::collections::HashMap;

use super::parser::{Node, NodeKind};
use crate::algebra;
use crate::error::{Error, Result};
use crate::fst::{minimize, Fst};
use crate::replace::ReplaceSpec;
use crate::symbol::Label;

/// Named networks usable as symbols in later expressions.
pub type Definitions = HashMap<String, Fst>;

/// Compiles parse trees against a set of definitions.
#[derive(Clone, Debug, Default)]
pub struct Compiler<'d> {
    defs: Option<&'d Definitions>,
    strict_names: bool,
}

impl<'d> Compiler<'d> {
    pub fn new() -> Self {
        Compiler::default()
    }

    pub fn with_definitions(defs: &'d Definitions) -> Self {
        Compiler { defs: Some(defs), strict_names: false }
    }

    /// When set, a multi-character symbol that starts with an uppercase
    /// letter must be a defined name.
    pub fn strict_names(mut self, strict: bool) -> Self {
        self.strict_names = strict;
        self
    }

    fn lookup(&self, name: &str) -> Option<&'d Fst> {
        self.defs.and_then(|d| d.get(name))
    }

    pub fn compile(&self, node: &Node) -> Result<Fst> {
        self.node(node).map_err(|e| e.with_position(node.pos))
    }

    fn node(&self, node: &Node) -> Result<Fst> {
        use NodeKind::*;
        let at = |e: Error| e.with_position(node.pos);
        let net = match &node.kind {
            Symbol(name) => match self.lookup(name) {
                Some(n) => n.clone(),
                None if self.strict_names && looks_like_definition(name) => {
                    return Err(Error::UndefinedName { name: name.clone(), line: 0 });
                }
                None => Fst::symbol(crate::symbol::Symbol::new(name)),
            },
            Pair(u, l) => minimize(&Fst::from_label(Label::new(u.clone(), l.clone()))),
            Epsilon | EmptyString => Fst::empty_string(),
            Any => Fst::any(),
            Group(inner) => self.node(inner)?,
            Option(inner) => algebra::option(&self.node(inner)?),
            Complement(inner) => algebra::complement(&self.node(inner)?).map_err(at)?,
            TermComplement(inner) => algebra::term_complement(&self.node(inner)?).map_err(at)?,
            Contains(inner) => algebra::contains(&self.node(inner)?).map_err(at)?,
            Star(inner) => algebra::star(&self.node(inner)?),
            Plus(inner) => algebra::plus(&self.node(inner)?),
            Ignore(a, b) => algebra::ignore(&self.node(a)?, &self.node(b)?).map_err(at)?,
            Concat(a, b) => algebra::concat(&self.node(a)?, &self.node(b)?),
            Union(a, b) => algebra::union(&self.node(a)?, &self.node(b)?),
            Intersect(a, b) => algebra::intersect(&self.node(a)?, &self.node(b)?).map_err(at)?,
            Minus(a, b) => algebra::minus(&self.node(a)?, &self.node(b)?).map_err(at)?,
            CrossProduct(a, b) => algebra::crossproduct(&self.node(a)?, &self.node(b)?).map_err(at)?,
            Compose(a, b) => algebra::compose(&self.node(a)?, &self.node(b)?),
            Replace { upper, lower, optional, direction, context } => {
                let mut spec = ReplaceSpec::new(self.node(upper)?, self.node(lower)?)
                    .optional(*optional)
                    .direction(*direction);
                if let Some(ctx) = context {
                    spec = spec.context(self.node(&ctx.left)?, self.node(&ctx.right)?, ctx.orientation);
                }
                spec.compile().map_err(at)?
            }
        };
        Ok(net)
    }
}

fn looks_like_definition(name: &str) -> bool {
    name.chars().count() > 1 && name.starts_with(|c: char| c.is_ascii_uppercase())
}

/// Tokenizes, parses, and compiles one expression.
pub fn compile_str(text: &str) -> Result<Fst> {
    let ast = super::parse_str(text)?;
    Compiler::new().compile(&ast)
}
