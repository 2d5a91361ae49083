use crate::error::{Error, Result};
use crate::replace::Orientation;
use crate::symbol::Symbol;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TokenKind {
    Sym(String),
    Epsilon,
    Any,
    /// `a:b`; either side may be epsilon or unknown.
    Pair(Symbol, Symbol),
    LBracket,
    RBracket,
    LParen,
    RParen,
    Tilde,
    Backslash,
    Dollar,
    Star,
    Plus,
    Slash,
    Union,
    Intersect,
    Minus,
    CrossProduct,
    Compose,
    Arrow,
    OptArrow,
    LeftArrow,
    OptLeftArrow,
    Context(Orientation),
    Underscore,
    End,
}

impl TokenKind {
    pub fn describe(&self) -> String {
        match self {
            TokenKind::Sym(s) => format!("symbol `{s}`"),
            TokenKind::Epsilon => "`0`".into(),
            TokenKind::Any => "`?`".into(),
            TokenKind::Pair(u, l) => format!("pair `{u}:{l}`"),
            TokenKind::Context(o) => format!("`{}`", o.separator()),
            TokenKind::End => "`;`".into(),
            other => {
                let text = OPERATORS.iter().find(|(_, k)| k == other).map(|(t, _)| *t).unwrap_or("?");
                format!("`{text}`")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Token {
    pub kind: TokenKind,
    /// Byte offset into the source text.
    pub pos: usize,
}

// Longest operators first.
const OPERATORS: &[(&str, TokenKind)] = &[
    ("(->)", TokenKind::OptArrow),
    ("(<-)", TokenKind::OptLeftArrow),
    (".x.", TokenKind::CrossProduct),
    (".o.", TokenKind::Compose),
    ("->", TokenKind::Arrow),
    ("<-", TokenKind::LeftArrow),
    ("||", TokenKind::Context(Orientation::Upward)),
    ("//", TokenKind::Context(Orientation::Rightward)),
    ("\\\\", TokenKind::Context(Orientation::Leftward)),
    ("\\|", TokenKind::Context(Orientation::Leftward)),
    ("\\/", TokenKind::Context(Orientation::Downward)),
    ("[", TokenKind::LBracket),
    ("]", TokenKind::RBracket),
    ("(", TokenKind::LParen),
    (")", TokenKind::RParen),
    ("~", TokenKind::Tilde),
    ("\\", TokenKind::Backslash),
    ("$", TokenKind::Dollar),
    ("*", TokenKind::Star),
    ("+", TokenKind::Plus),
    ("/", TokenKind::Slash),
    ("|", TokenKind::Union),
    ("&", TokenKind::Intersect),
    ("-", TokenKind::Minus),
    ("_", TokenKind::Underscore),
    (";", TokenKind::End),
];

/// Characters that cannot appear unescaped inside a symbol name.
pub const SPECIAL: &str = "~\\$*+/|&-()[]:;?%_<>.";

fn is_symbol_char(c: char) -> bool {
    !c.is_whitespace() && !SPECIAL.contains(c)
}

/// Names used by the text serialization for epsilon and unknown.
const RESERVED_NAMES: [&str; 2] = ["@0@", "@?@"];

struct Lexer<'a> {
    text: &'a str,
    pos: usize,
}

impl Lexer<'_> {
    fn rest(&self) -> &str {
        &self.text[self.pos..]
    }

    fn peek(&self) -> Option<char> {
        self.rest().chars().next()
    }

    /// One side of a symbol or pair: `0`, `?`, or a run of symbol characters
    /// and escapes.
    fn side(&mut self) -> Result<Option<Symbol>> {
        let start = self.pos;
        let mut name = String::new();
        let mut escaped = false;
        if self.peek() == Some('?') {
            self.pos += 1;
            return Ok(Some(Symbol::Unknown));
        }
        while let Some(c) = self.peek() {
            if c == '%' {
                let mut chars = self.rest().chars();
                chars.next();
                match chars.next() {
                    Some(e) if !e.is_whitespace() => {
                        name.push(e);
                        escaped = true;
                        self.pos += 1 + e.len_utf8();
                    }
                    _ => return Err(Error::DanglingEscape { position: self.pos }),
                }
            } else if is_symbol_char(c) {
                name.push(c);
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
        if name.is_empty() {
            return Ok(None);
        }
        if !escaped && name == "0" {
            return Ok(Some(Symbol::Epsilon));
        }
        if RESERVED_NAMES.contains(&name.as_str()) {
            return Err(Error::InvalidSymbol { text: name, position: start });
        }
        Ok(Some(Symbol::new(&name)))
    }

    fn atom(&mut self) -> Result<Option<TokenKind>> {
        let start = self.pos;
        let Some(upper) = self.side()? else { return Ok(None) };
        if self.peek() != Some(':') {
            return Ok(Some(single(upper)));
        }
        self.pos += 1;
        let Some(lower) = self.side()? else {
            return Err(Error::InvalidSymbol { text: self.text[start..self.pos].to_string(), position: start });
        };
        Ok(Some(if upper == lower { single(upper) } else { TokenKind::Pair(upper, lower) }))
    }
}

fn single(sym: Symbol) -> TokenKind {
    match sym {
        Symbol::Epsilon => TokenKind::Epsilon,
        Symbol::Unknown => TokenKind::Any,
        Symbol::Concrete(name) => TokenKind::Sym(name.to_string()),
    }
}

/// Splits regex text into tokens. Symbols are maximal runs of non-special
/// characters, so `abc` is one symbol while `a b c` is three.
pub fn tokenize(text: &str) -> Result<Vec<Token>> {
    let mut lx = Lexer { text, pos: 0 };
    let mut tokens = Vec::new();
    loop {
        while lx.peek().is_some_and(char::is_whitespace) {
            lx.pos += lx.peek().map_or(0, char::len_utf8);
        }
        let Some(c) = lx.peek() else { break };
        let pos = lx.pos;
        if let Some((op, kind)) = OPERATORS.iter().find(|(op, _)| lx.rest().starts_with(op)) {
            lx.pos += op.len();
            tokens.push(Token { kind: kind.clone(), pos });
            continue;
        }
        match lx.atom()? {
            Some(kind) => tokens.push(Token { kind, pos }),
            None => {
                return Err(Error::MisplacedOperator { found: format!("`{c}`"), position: pos });
            }
        }
    }
    if tokens.is_empty() || tokens.iter().all(|t| t.kind == TokenKind::End) {
        return Err(Error::EmptyInput);
    }
    Ok(tokens)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kinds(text: &str) -> Vec<TokenKind> {
        tokenize(text).unwrap().into_iter().map(|t| t.kind).collect()
    }

    fn sym(s: &str) -> TokenKind {
        TokenKind::Sym(s.into())
    }

    #[test]
    fn replacement_tokens() {
        use TokenKind::*;
        assert_eq!(
            kinds("a b | c -> x ;"),
            vec![sym("a"), sym("b"), Union, sym("c"), Arrow, sym("x"), End]
        );
    }

    #[test]
    fn escaped_zero_is_a_symbol() {
        assert_eq!(kinds("%0 0"), vec![sym("0"), TokenKind::Epsilon]);
        assert_eq!(kinds("%&"), vec![sym("&")]);
    }

    #[test]
    fn runs_are_single_symbols() {
        assert_eq!(kinds("abc"), vec![sym("abc")]);
        assert_eq!(kinds("a10"), vec![sym("a10")]);
    }

    #[test]
    fn pairs() {
        let a = Symbol::new("a");
        assert_eq!(kinds("a:b"), vec![TokenKind::Pair(a.clone(), Symbol::new("b"))]);
        assert_eq!(kinds("a:0"), vec![TokenKind::Pair(a.clone(), Symbol::Epsilon)]);
        assert_eq!(kinds("0:a"), vec![TokenKind::Pair(Symbol::Epsilon, a)]);
        assert_eq!(kinds("0:0"), vec![TokenKind::Epsilon]);
        assert_eq!(kinds("a:a"), vec![sym("a")]);
    }

    #[test]
    fn separators_and_arrows() {
        use TokenKind::*;
        assert_eq!(
            kinds("a (->) b <- c (<-) d"),
            vec![sym("a"), OptArrow, sym("b"), LeftArrow, sym("c"), OptLeftArrow, sym("d")]
        );
        assert_eq!(
            kinds("|| // \\\\ \\| \\/"),
            vec![
                Context(Orientation::Upward),
                Context(Orientation::Rightward),
                Context(Orientation::Leftward),
                Context(Orientation::Leftward),
                Context(Orientation::Downward),
            ]
        );
        assert_eq!(kinds(".x. .o."), vec![CrossProduct, Compose]);
        assert_eq!(kinds("\\a"), vec![Backslash, sym("a")]);
    }

    #[test]
    fn errors() {
        assert!(matches!(tokenize("a %"), Err(Error::DanglingEscape { position: 2 })));
        assert!(matches!(tokenize("   "), Err(Error::EmptyInput)));
        assert!(matches!(tokenize(";"), Err(Error::EmptyInput)));
        assert!(matches!(tokenize("a < b"), Err(Error::MisplacedOperator { position: 2, .. })));
        assert!(matches!(tokenize("@0@"), Err(Error::InvalidSymbol { .. })));
    }

    #[test]
    fn escaped_specials_are_literals() {
        for c in SPECIAL.chars() {
            let text = format!("%{c}");
            assert_eq!(kinds(&text), vec![sym(&c.to_string())], "{text}");
        }
    }
}
