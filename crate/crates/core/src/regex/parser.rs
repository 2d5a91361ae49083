//! Recursive-descent parser. From loosest to tightest binding:
//!
//! ```text
//! expr     := replace ((".x." | ".o.") replace)*
//! replace  := boolean [arrow boolean [sep [boolean] "_" [boolean]]]
//! boolean  := concat (("|" | "&" | "-") concat)*
//! concat   := postfix postfix*
//! postfix  := prefix ("*" | "+" | "/" prefix)*
//! prefix   := ("~" | "\" | "$") prefix | atom
//! atom     := symbol | pair | "0" | "?" | "[" "]" | "[" expr "]" | "(" expr ")"
//! ```
//!
//! Binary operators of one level associate to the left.

use std::fmt;

use super::lexer::{Token, TokenKind};
use crate::error::{Error, Result};
use crate::replace::{Direction, Orientation};
use crate::symbol::Symbol;

#[derive(Clone, Debug, PartialEq)]
pub struct Node {
    pub kind: NodeKind,
    /// Byte offset of the node's first token.
    pub pos: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ContextNode {
    pub left: Box<Node>,
    pub right: Box<Node>,
    pub orientation: Orientation,
}

#[derive(Clone, Debug, PartialEq)]
pub enum NodeKind {
    Symbol(String),
    Pair(Symbol, Symbol),
    Epsilon,
    Any,
    /// `[]`, the language of the empty string.
    EmptyString,
    Group(Box<Node>),
    Option(Box<Node>),
    Complement(Box<Node>),
    TermComplement(Box<Node>),
    Contains(Box<Node>),
    Star(Box<Node>),
    Plus(Box<Node>),
    Ignore(Box<Node>, Box<Node>),
    Concat(Box<Node>, Box<Node>),
    Union(Box<Node>, Box<Node>),
    Intersect(Box<Node>, Box<Node>),
    Minus(Box<Node>, Box<Node>),
    CrossProduct(Box<Node>, Box<Node>),
    Compose(Box<Node>, Box<Node>),
    Replace {
        upper: Box<Node>,
        lower: Box<Node>,
        optional: bool,
        direction: Direction,
        context: Option<ContextNode>,
    },
}

impl Node {
    fn new(kind: NodeKind, pos: usize) -> Node {
        Node { kind, pos }
    }

    /// A replacement with a context that is not wrapped in brackets.
    fn is_bare_contextual_replace(&self) -> bool {
        matches!(&self.kind, NodeKind::Replace { context: Some(_), .. })
    }
}

fn escape(name: &str) -> String {
    let mut out = String::new();
    for c in name.chars() {
        if super::lexer::SPECIAL.contains(c) {
            out.push('%');
        }
        out.push(c);
    }
    if out == "0" {
        out.insert(0, '%');
    }
    out
}

fn side(sym: &Symbol) -> String {
    match sym {
        Symbol::Concrete(name) => escape(name),
        other => other.to_string(),
    }
}

/// Fully bracketed rendering: every operator application is wrapped in `[]`
/// and groups disappear, so two parses print the same exactly when they have
/// the same structure.
impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use NodeKind::*;
        match &self.kind {
            Symbol(name) => f.write_str(&escape(name)),
            Pair(u, l) => write!(f, "{}:{}", side(u), side(l)),
            Epsilon => f.write_str("0"),
            Any => f.write_str("?"),
            EmptyString => f.write_str("[]"),
            Group(inner) => write!(f, "{inner}"),
            Option(inner) => write!(f, "({inner})"),
            Complement(inner) => write!(f, "[~{inner}]"),
            TermComplement(inner) => write!(f, "[\\{inner}]"),
            Contains(inner) => write!(f, "[${inner}]"),
            Star(inner) => write!(f, "[{inner}*]"),
            Plus(inner) => write!(f, "[{inner}+]"),
            Ignore(a, b) => write!(f, "[{a}/{b}]"),
            Concat(a, b) => write!(f, "[{a} {b}]"),
            Union(a, b) => write!(f, "[{a} | {b}]"),
            Intersect(a, b) => write!(f, "[{a} & {b}]"),
            Minus(a, b) => write!(f, "[{a} - {b}]"),
            CrossProduct(a, b) => write!(f, "[{a} .x. {b}]"),
            Compose(a, b) => write!(f, "[{a} .o. {b}]"),
            Replace { upper, lower, optional, direction, context } => {
                let arrow = match (direction, optional) {
                    (Direction::UpperToLower, false) => "->",
                    (Direction::UpperToLower, true) => "(->)",
                    (Direction::LowerToUpper, false) => "<-",
                    (Direction::LowerToUpper, true) => "(<-)",
                };
                write!(f, "[{upper} {arrow} {lower}")?;
                if let Some(ctx) = context {
                    write!(f, " {} {} _ {}", ctx.orientation.separator(), ctx.left, ctx.right)?;
                }
                f.write_str("]")
            }
        }
    }
}

struct Parser<'a> {
    tokens: &'a [Token],
    idx: usize,
    end_pos: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&TokenKind> {
        self.tokens.get(self.idx).map(|t| &t.kind)
    }

    fn pos(&self) -> usize {
        self.tokens.get(self.idx).map_or(self.end_pos, |t| t.pos)
    }

    fn bump(&mut self) -> usize {
        let pos = self.pos();
        self.idx += 1;
        pos
    }

    fn unexpected(&self) -> Error {
        let found = self.peek().map_or_else(|| "end of input".to_string(), TokenKind::describe);
        Error::MisplacedOperator { found, position: self.pos() }
    }

    fn starts_operand(&self) -> bool {
        matches!(
            self.peek(),
            Some(
                TokenKind::Sym(_)
                    | TokenKind::Pair(..)
                    | TokenKind::Epsilon
                    | TokenKind::Any
                    | TokenKind::LBracket
                    | TokenKind::LParen
                    | TokenKind::Tilde
                    | TokenKind::Backslash
                    | TokenKind::Dollar
            )
        )
    }

    fn expr(&mut self) -> Result<Node> {
        let mut lhs = self.replace()?;
        loop {
            let op = match self.peek() {
                Some(TokenKind::CrossProduct) => NodeKind::CrossProduct,
                Some(TokenKind::Compose) => NodeKind::Compose,
                _ => return Ok(lhs),
            };
            if lhs.is_bare_contextual_replace() {
                return Err(self.bracket_needed());
            }
            let op_pos = self.bump();
            let rhs = self.replace()?;
            if rhs.is_bare_contextual_replace() {
                return Err(Error::MisplacedOperator {
                    found: "contextual replacement as an operand; wrap it in [ ]".into(),
                    position: op_pos,
                });
            }
            let pos = lhs.pos;
            lhs = Node::new(op(Box::new(lhs), Box::new(rhs)), pos);
        }
    }

    fn bracket_needed(&self) -> Error {
        Error::MisplacedOperator {
            found: format!("{} after a contextual replacement; wrap it in [ ]", self.peek().map_or_else(String::new, TokenKind::describe)),
            position: self.pos(),
        }
    }

    fn arrow(&self) -> Option<(bool, Direction)> {
        match self.peek()? {
            TokenKind::Arrow => Some((false, Direction::UpperToLower)),
            TokenKind::OptArrow => Some((true, Direction::UpperToLower)),
            TokenKind::LeftArrow => Some((false, Direction::LowerToUpper)),
            TokenKind::OptLeftArrow => Some((true, Direction::LowerToUpper)),
            _ => None,
        }
    }

    fn replace(&mut self) -> Result<Node> {
        let upper = self.boolean()?;
        let Some((optional, direction)) = self.arrow() else { return Ok(upper) };
        self.bump();
        let lower = self.boolean()?;
        let context = match self.peek() {
            Some(TokenKind::Context(orientation)) => {
                let orientation = *orientation;
                if optional || direction != Direction::UpperToLower {
                    return Err(Error::MisplacedOperator {
                        found: "context on a replacement other than `->`".into(),
                        position: self.pos(),
                    });
                }
                self.bump();
                Some(self.context(orientation)?)
            }
            _ => None,
        };
        if self.arrow().is_some() {
            return Err(self.unexpected());
        }
        let pos = upper.pos;
        Ok(Node::new(
            NodeKind::Replace { upper: Box::new(upper), lower: Box::new(lower), optional, direction, context },
            pos,
        ))
    }

    fn context(&mut self, orientation: Orientation) -> Result<ContextNode> {
        let left = if self.peek() == Some(&TokenKind::Underscore) {
            Node::new(NodeKind::EmptyString, self.pos())
        } else {
            self.boolean()?
        };
        if self.peek() != Some(&TokenKind::Underscore) {
            return Err(Error::MissingContextUnderscore { position: self.pos() });
        }
        self.bump();
        let right =
            if self.starts_operand() { self.boolean()? } else { Node::new(NodeKind::EmptyString, self.pos()) };
        if matches!(self.peek(), Some(TokenKind::Underscore | TokenKind::Context(_))) {
            return Err(Error::MultipleContexts { position: self.pos() });
        }
        Ok(ContextNode { left: Box::new(left), right: Box::new(right), orientation })
    }

    fn boolean(&mut self) -> Result<Node> {
        let mut lhs = self.concat()?;
        loop {
            let op = match self.peek() {
                Some(TokenKind::Union) => NodeKind::Union,
                Some(TokenKind::Intersect) => NodeKind::Intersect,
                Some(TokenKind::Minus) => NodeKind::Minus,
                _ => return Ok(lhs),
            };
            self.bump();
            let rhs = self.concat()?;
            let pos = lhs.pos;
            lhs = Node::new(op(Box::new(lhs), Box::new(rhs)), pos);
        }
    }

    fn concat(&mut self) -> Result<Node> {
        let mut lhs = self.postfix()?;
        while self.starts_operand() {
            let rhs = self.postfix()?;
            let pos = lhs.pos;
            lhs = Node::new(NodeKind::Concat(Box::new(lhs), Box::new(rhs)), pos);
        }
        Ok(lhs)
    }

    fn postfix(&mut self) -> Result<Node> {
        let mut node = self.prefix()?;
        loop {
            let pos = node.pos;
            node = match self.peek() {
                Some(TokenKind::Star) => {
                    self.bump();
                    Node::new(NodeKind::Star(Box::new(node)), pos)
                }
                Some(TokenKind::Plus) => {
                    self.bump();
                    Node::new(NodeKind::Plus(Box::new(node)), pos)
                }
                Some(TokenKind::Slash) => {
                    self.bump();
                    let ignored = self.prefix()?;
                    Node::new(NodeKind::Ignore(Box::new(node), Box::new(ignored)), pos)
                }
                _ => return Ok(node),
            };
        }
    }

    fn prefix(&mut self) -> Result<Node> {
        let op = match self.peek() {
            Some(TokenKind::Tilde) => NodeKind::Complement,
            Some(TokenKind::Backslash) => NodeKind::TermComplement,
            Some(TokenKind::Dollar) => NodeKind::Contains,
            _ => return self.atom(),
        };
        let pos = self.bump();
        let inner = self.prefix()?;
        Ok(Node::new(op(Box::new(inner)), pos))
    }

    fn atom(&mut self) -> Result<Node> {
        let pos = self.pos();
        let kind = match self.peek() {
            Some(TokenKind::Sym(name)) => NodeKind::Symbol(name.clone()),
            Some(TokenKind::Pair(u, l)) => NodeKind::Pair(u.clone(), l.clone()),
            Some(TokenKind::Epsilon) => NodeKind::Epsilon,
            Some(TokenKind::Any) => NodeKind::Any,
            Some(TokenKind::LBracket) => {
                self.bump();
                if self.peek() == Some(&TokenKind::RBracket) {
                    self.bump();
                    return Ok(Node::new(NodeKind::EmptyString, pos));
                }
                let inner = self.expr()?;
                if self.peek() != Some(&TokenKind::RBracket) {
                    return Err(self.unclosed(pos));
                }
                self.bump();
                return Ok(Node::new(NodeKind::Group(Box::new(inner)), pos));
            }
            Some(TokenKind::LParen) => {
                self.bump();
                let inner = self.expr()?;
                if self.peek() != Some(&TokenKind::RParen) {
                    return Err(self.unclosed(pos));
                }
                self.bump();
                return Ok(Node::new(NodeKind::Option(Box::new(inner)), pos));
            }
            Some(TokenKind::RBracket | TokenKind::RParen) => {
                return Err(Error::UnbalancedBracket { position: pos });
            }
            _ => return Err(self.unexpected()),
        };
        self.bump();
        Ok(Node::new(kind, pos))
    }

    /// An opening bracket at `open` was not closed where expected.
    fn unclosed(&self, open: usize) -> Error {
        match self.peek() {
            None | Some(TokenKind::End) => Error::UnbalancedBracket { position: open },
            Some(TokenKind::RBracket | TokenKind::RParen) => Error::UnbalancedBracket { position: self.pos() },
            Some(_) => self.unexpected(),
        }
    }
}

/// Parses one expression, optionally terminated by `;`.
pub fn parse(tokens: &[Token]) -> Result<Node> {
    let end_pos = tokens.last().map_or(0, |t| t.pos + 1);
    let mut p = Parser { tokens, idx: 0, end_pos };
    if p.peek().is_none() {
        return Err(Error::EmptyInput);
    }
    let node = p.expr()?;
    match p.peek() {
        None => {}
        Some(TokenKind::End) => {
            p.bump();
            if p.peek().is_some() {
                return Err(p.unexpected());
            }
        }
        Some(TokenKind::RBracket | TokenKind::RParen) => {
            return Err(Error::UnbalancedBracket { position: p.pos() });
        }
        Some(TokenKind::Underscore) => {
            return Err(Error::MisplacedOperator { found: "`_` outside a context".into(), position: p.pos() });
        }
        Some(_) => return Err(p.unexpected()),
    }
    Ok(node)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::regex::lexer::tokenize;

    fn p(text: &str) -> Result<Node> {
        parse(&tokenize(text)?)
    }

    fn shape(text: &str) -> String {
        p(text).unwrap().to_string()
    }

    #[test]
    fn concise_form_matches_fully_bracketed_form() {
        assert_eq!(shape("~a* b/x | c .x. d ;"), shape("[[[~[a]]* [[b]/x]] | c] .x. d ;"));
        assert_eq!(shape("~a* b/x | c .x. d ;"), "[[[[[~a]*] [b/x]] | c] .x. d]");
    }

    #[test]
    fn conditional_replacement_structure() {
        let node = p("a b -> x || a b _ a ;").unwrap();
        let NodeKind::Replace { upper, lower, optional, direction, context } = node.kind else {
            panic!("not a replacement");
        };
        assert_eq!(upper.to_string(), "[a b]");
        assert_eq!(lower.to_string(), "x");
        assert!(!optional);
        assert_eq!(direction, Direction::UpperToLower);
        let ctx = context.unwrap();
        assert_eq!(ctx.orientation, Orientation::Upward);
        assert_eq!(ctx.left.to_string(), "[a b]");
        assert_eq!(ctx.right.to_string(), "a");
    }

    #[test]
    fn option_is_not_group() {
        assert!(matches!(p("(a)").unwrap().kind, NodeKind::Option(_)));
        assert!(matches!(p("[a]").unwrap().kind, NodeKind::Group(_)));
        assert_eq!(shape("[a]"), "a");
    }

    #[test]
    fn left_associativity() {
        assert_eq!(shape("a - b - c"), "[[a - b] - c]");
        assert_eq!(shape("a .o. b .o. c"), "[[a .o. b] .o. c]");
        assert_eq!(shape("a/b/c"), "[[a/b]/c]");
        assert_eq!(shape("a | b & c"), "[[a | b] & c]");
    }

    #[test]
    fn replacement_sits_between_booleans_and_composition() {
        assert_eq!(shape("a b -> x .o. b c -> x"), "[[[a b] -> x] .o. [[b c] -> x]]");
        assert_eq!(shape("a | b -> []"), "[[a | b] -> []]");
        assert_eq!(shape("a (->) x"), "[a (->) x]");
        assert_eq!(shape("x <- a"), "[x <- a]");
        assert_eq!(shape("a -> b || _ c"), "[a -> b || [] _ c]");
        assert_eq!(shape("a -> b // c _"), "[a -> b // c _ []]");
    }

    #[test]
    fn contextual_replacement_needs_brackets_in_composition() {
        assert!(matches!(p("a -> b || c _ d .o. e"), Err(Error::MisplacedOperator { .. })));
        assert!(matches!(p("e .o. a -> b || c _ d"), Err(Error::MisplacedOperator { .. })));
        assert!(p("[a -> b || c _ d] .o. e").is_ok());
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(p("[a b"), Err(Error::UnbalancedBracket { position: 0 })));
        assert!(matches!(p("a b]"), Err(Error::UnbalancedBracket { position: 3 })));
        assert!(matches!(p("(a"), Err(Error::UnbalancedBracket { .. })));
        assert!(matches!(p("a -> b -> c"), Err(Error::MisplacedOperator { .. })));
        assert!(matches!(p("a -> b || c d"), Err(Error::MissingContextUnderscore { .. })));
        assert!(matches!(p("a -> b || c _ d _ e"), Err(Error::MultipleContexts { .. })));
        assert!(matches!(p("a -> b || c _ d || e _ f"), Err(Error::MultipleContexts { .. })));
        assert!(matches!(p("a (->) b || c _ d"), Err(Error::MisplacedOperator { .. })));
        assert!(matches!(p("| a"), Err(Error::MisplacedOperator { position: 0, .. })));
        assert!(matches!(p("a ; b"), Err(Error::MisplacedOperator { .. })));
        assert!(matches!(p("a _ b"), Err(Error::MisplacedOperator { .. })));
    }

    #[test]
    fn rendering_reparses_to_same_shape() {
        for text in ["%0 %& a:b 0:c ?", "\\[a|b] $[a b] (a)+", "a b -> x \\/ a b _ a", "%< | %> -> []"] {
            let once = shape(text);
            assert_eq!(shape(&once), once, "{text}");
        }
    }
}
