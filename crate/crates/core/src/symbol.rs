//! Alphabet symbols and the upper:lower pairs that label arcs.

use std::fmt;
use std::sync::Arc;

/// An atomic alphabet element.
///
/// `Epsilon` is the empty string and `Unknown` stands for any symbol that is
/// not in the sigma of the network it appears in. The variant order is used
/// for canonical arc ordering: epsilon first, then unknown, then names.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Symbol {
    Epsilon,
    Unknown,
    Concrete(Arc<str>),
}

impl Symbol {
    /// A named symbol. Panics on an empty name.
    pub fn new(name: &str) -> Symbol {
        assert!(!name.is_empty(), "symbol names must be non-empty");
        Symbol::Concrete(Arc::from(name))
    }

    pub fn is_epsilon(&self) -> bool {
        matches!(self, Symbol::Epsilon)
    }

    pub fn is_unknown(&self) -> bool {
        matches!(self, Symbol::Unknown)
    }

    pub fn name(&self) -> Option<&str> {
        match self {
            Symbol::Concrete(name) => Some(name),
            _ => None,
        }
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Symbol::Epsilon => f.write_str("0"),
            Symbol::Unknown => f.write_str("?"),
            Symbol::Concrete(name) => f.write_str(name),
        }
    }
}

impl fmt::Debug for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl From<&str> for Symbol {
    fn from(name: &str) -> Symbol {
        Symbol::new(name)
    }
}

/// An `upper:lower` symbol pair.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Label {
    pub upper: Symbol,
    pub lower: Symbol,
}

impl Label {
    pub fn new(upper: Symbol, lower: Symbol) -> Label {
        Label { upper, lower }
    }

    pub fn identity(sym: Symbol) -> Label {
        Label { upper: sym.clone(), lower: sym }
    }

    pub fn epsilon() -> Label {
        Label::identity(Symbol::Epsilon)
    }

    pub fn is_identity(&self) -> bool {
        self.upper == self.lower
    }

    pub fn is_epsilon(&self) -> bool {
        self.upper.is_epsilon() && self.lower.is_epsilon()
    }

    pub fn inverted(&self) -> Label {
        Label { upper: self.lower.clone(), lower: self.upper.clone() }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            write!(f, "{}", self.upper)
        } else {
            write!(f, "{}:{}", self.upper, self.lower)
        }
    }
}

impl fmt::Debug for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ordering_puts_epsilon_and_unknown_first() {
        let mut syms = vec![Symbol::new("a"), Symbol::Unknown, Symbol::Epsilon];
        syms.sort();
        assert_eq!(syms, vec![Symbol::Epsilon, Symbol::Unknown, Symbol::new("a")]);
    }

    #[test]
    fn identity_labels_print_as_one_symbol() {
        assert_eq!(Label::identity(Symbol::new("a")).to_string(), "a");
        assert_eq!(Label::new(Symbol::new("a"), Symbol::Epsilon).to_string(), "a:0");
        assert_eq!(Label::identity(Symbol::Unknown).to_string(), "?");
    }

    #[test]
    #[should_panic]
    fn empty_names_are_rejected() {
        Symbol::new("");
    }
}
