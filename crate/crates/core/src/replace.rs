//! Replacement relations: unconditional, optional, inverse, and the four
//! context-conditioned variants.
//!
//! Conditional replacement is a composition of six auxiliary relations that
//! insert context markers, constrain where they may stand, perform the
//! replacement between markers, and erase them again. The orientation
//! decides on which side of the replacement each context constraint is
//! checked.

use crate::algebra::{
    complement, compose, concat, contains, crossproduct, ignore, intersect, inverse, minus, star,
    union,
};
use crate::error::{Error, Result};
use crate::fst::{harmonize_to, minimize, Fst};
use crate::symbol::Symbol;

/// Which side of the replacement the left and right contexts are checked on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Orientation {
    /// `||`: both contexts on the upper side.
    Upward,
    /// `//`: left context on the lower side, right context on the upper side.
    Rightward,
    /// `\\`: left context on the upper side, right context on the lower side.
    Leftward,
    /// `\/`: both contexts on the lower side.
    Downward,
}

impl Orientation {
    pub fn separator(self) -> &'static str {
        match self {
            Orientation::Upward => "||",
            Orientation::Rightward => "//",
            Orientation::Leftward => "\\\\",
            Orientation::Downward => "\\/",
        }
    }

    pub const ALL: [Orientation; 4] =
        [Orientation::Upward, Orientation::Rightward, Orientation::Leftward, Orientation::Downward];
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    /// `->`
    UpperToLower,
    /// `<-`
    LowerToUpper,
}

#[derive(Clone, Debug)]
pub struct Context {
    pub left: Fst,
    pub right: Fst,
    pub orientation: Orientation,
}

/// A normalized replacement: `upper -> lower`, optionally `(->)` or `<-`,
/// optionally restricted to a context.
#[derive(Clone, Debug)]
pub struct ReplaceSpec {
    pub upper: Fst,
    pub lower: Fst,
    pub optional: bool,
    pub direction: Direction,
    pub context: Option<Context>,
}

impl ReplaceSpec {
    pub fn new(upper: Fst, lower: Fst) -> ReplaceSpec {
        ReplaceSpec { upper, lower, optional: false, direction: Direction::UpperToLower, context: None }
    }

    pub fn optional(mut self, optional: bool) -> ReplaceSpec {
        self.optional = optional;
        self
    }

    pub fn direction(mut self, direction: Direction) -> ReplaceSpec {
        self.direction = direction;
        self
    }

    pub fn context(mut self, left: Fst, right: Fst, orientation: Orientation) -> ReplaceSpec {
        self.context = Some(Context { left, right, orientation });
        self
    }

    /// Builds the relation this specification denotes.
    pub fn compile(&self) -> Result<Fst> {
        match (&self.context, self.direction) {
            (None, Direction::UpperToLower) if self.optional => replace_optional(&self.upper, &self.lower),
            (None, Direction::UpperToLower) => replace(&self.upper, &self.lower),
            (None, Direction::LowerToUpper) => replace_inverse(&self.upper, &self.lower, self.optional),
            (Some(_), Direction::UpperToLower) if !self.optional => replace_conditional(self),
            (Some(_), _) => Err(Error::Unsupported("contexts are supported only with `->`".into())),
        }
    }
}

/// The internal context markers `<` and `>`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BracketSymbols {
    pub lb: Symbol,
    pub rb: Symbol,
}

impl Default for BracketSymbols {
    fn default() -> Self {
        BracketSymbols { lb: Symbol::new("<"), rb: Symbol::new(">") }
    }
}

impl BracketSymbols {
    fn lb(&self) -> Fst {
        Fst::symbol(self.lb.clone())
    }

    fn rb(&self) -> Fst {
        Fst::symbol(self.rb.clone())
    }

    /// `%< | %>`
    fn either(&self) -> Fst {
        union(&self.lb(), &self.rb())
    }

    fn as_slice(&self) -> [Symbol; 2] {
        [self.lb.clone(), self.rb.clone()]
    }
}

/// `UPPER -> LOWER`: every occurrence of UPPER is replaced by LOWER, and the
/// material between occurrences may not contain UPPER.
pub fn replace(upper: &Fst, lower: &Fst) -> Result<Fst> {
    let pair = crossproduct(upper, lower)?;
    let no_upper = complement(&contains(&minus(upper, &Fst::empty_string())?)?)?;
    Ok(concat(&star(&concat(&no_upper, &pair)), &no_upper))
}

/// `UPPER (->) LOWER`: occurrences of UPPER may or may not be replaced.
pub fn replace_optional(upper: &Fst, lower: &Fst) -> Result<Fst> {
    let pair = crossproduct(upper, lower)?;
    let anything = Fst::sigma_star();
    Ok(concat(&star(&concat(&anything, &pair)), &anything))
}

/// `UPPER <- LOWER`, the inverse of `LOWER -> UPPER` (or of `(->)` when
/// `optional`).
pub fn replace_inverse(upper: &Fst, lower: &Fst, optional: bool) -> Result<Fst> {
    let forward = if optional { replace_optional(lower, upper)? } else { replace(lower, upper)? };
    Ok(inverse(&forward))
}

/// `[] <- %< | %>`: brackets inserted freely on the lower side.
pub fn insert_brackets(b: &BracketSymbols) -> Fst {
    inverse(&remove_brackets(b))
}

/// `~$[%< %>]`
pub fn constrain_brackets(b: &BracketSymbols) -> Fst {
    let adjacent = concat(&b.lb(), &b.rb());
    complement(&contains(&adjacent).expect("acceptor")).expect("acceptor")
}

/// Every `<` is immediately preceded by LEFT and every LEFT is immediately
/// followed by `<`, ignoring brackets that do not matter.
pub fn left_context(left: &Fst, b: &BracketSymbols) -> Result<Fst> {
    // [...LEFT] = [[?* LEFT/[%<|%>]] - [?* %<]]
    let ends_in_left = minus(
        &concat(&Fst::sigma_star(), &ignore(left, &b.either())?),
        &concat(&Fst::sigma_star(), &b.lb()),
    )?;
    // [%< ...] = [%</%> ?*]
    let starts_with_lb = concat(&ignore(&b.lb(), &b.rb())?, &Fst::sigma_star());
    let unpreceded = complement(&concat(&complement(&ends_in_left)?, &starts_with_lb))?;
    let unfollowed = complement(&concat(&ends_in_left, &complement(&starts_with_lb)?))?;
    intersect(&unpreceded, &unfollowed)
}

/// Every `>` is immediately followed by RIGHT and every RIGHT is immediately
/// preceded by `>`, ignoring brackets that do not matter.
pub fn right_context(right: &Fst, b: &BracketSymbols) -> Result<Fst> {
    // [...>] = [?* %>/%<]
    let ends_with_rb = concat(&Fst::sigma_star(), &ignore(&b.rb(), &b.lb())?);
    // [RIGHT...] = [[RIGHT/[%<|%>] ?*] - [%> ?*]]
    let starts_with_right = minus(
        &concat(&ignore(right, &b.either())?, &Fst::sigma_star()),
        &concat(&b.rb(), &Fst::sigma_star()),
    )?;
    let unfollowed = complement(&concat(&ends_with_rb, &complement(&starts_with_right)?))?;
    let unpreceded = complement(&concat(&complement(&ends_with_rb)?, &starts_with_right))?;
    intersect(&unfollowed, &unpreceded)
}

/// `%< UPPER/[%<|%>] %> -> %< LOWER/[%<|%>] %>`
pub fn replace_bracketed(upper: &Fst, lower: &Fst, b: &BracketSymbols) -> Result<Fst> {
    let wrap = |n: &Fst| -> Result<Fst> { Ok(concat(&concat(&b.lb(), &ignore(n, &b.either())?), &b.rb())) };
    replace(&wrap(upper)?, &wrap(lower)?)
}

/// `%< | %> -> []`
pub fn remove_brackets(b: &BracketSymbols) -> Fst {
    replace(&b.either(), &Fst::empty_string()).expect("acceptors")
}

/// The six auxiliary relations, each extended to the same alphabet.
#[derive(Clone, Debug)]
pub struct ConditionalParts {
    pub insert: Fst,
    pub constrain: Fst,
    pub left: Fst,
    pub right: Fst,
    pub replace: Fst,
    pub remove: Fst,
}

impl ConditionalParts {
    pub fn build(upper: &Fst, lower: &Fst, left: &Fst, right: &Fst, b: &BracketSymbols) -> Result<Self> {
        for operand in [upper, lower, left, right] {
            check_operand(operand, b)?;
        }
        let mut sigma = upper.sigma().clone();
        for n in [lower, left, right] {
            sigma.extend(n.sigma().iter().cloned());
        }
        sigma.extend(b.as_slice());
        let over = |n: Fst| minimize(&harmonize_to(&n, &sigma));
        Ok(ConditionalParts {
            insert: over(insert_brackets(b)),
            constrain: over(constrain_brackets(b)),
            left: over(left_context(left, b)?),
            right: over(right_context(right, b)?),
            replace: over(replace_bracketed(upper, lower, b)?),
            remove: over(remove_brackets(b)),
        })
    }

    /// The six relations in composition order for an orientation.
    pub fn ordered(&self, orientation: Orientation) -> [&Fst; 6] {
        let (first, second, third) = match orientation {
            Orientation::Upward => (&self.left, &self.right, &self.replace),
            Orientation::Rightward => (&self.right, &self.replace, &self.left),
            Orientation::Leftward => (&self.left, &self.replace, &self.right),
            Orientation::Downward => (&self.replace, &self.left, &self.right),
        };
        [&self.insert, &self.constrain, first, second, third, &self.remove]
    }
}

fn check_operand(n: &Fst, b: &BracketSymbols) -> Result<()> {
    if !n.is_acceptor() {
        return Err(Error::NonLanguageOperand { op: "replacement", position: None });
    }
    for s in b.as_slice() {
        if n.sigma().contains(&s) {
            return Err(Error::ReservedSymbolInOperand { symbol: s.to_string() });
        }
    }
    Ok(())
}

/// Composes the six auxiliary relations in the order the orientation
/// dictates and drops the markers from the result's alphabet.
pub fn replace_conditional(spec: &ReplaceSpec) -> Result<Fst> {
    let ctx = spec
        .context
        .as_ref()
        .ok_or_else(|| Error::Unsupported("conditional replacement needs a context".into()))?;
    let b = BracketSymbols::default();
    let parts = ConditionalParts::build(&spec.upper, &spec.lower, &ctx.left, &ctx.right, &b)?;
    let chain = parts.ordered(ctx.orientation);
    let composed = chain[1..].iter().fold(chain[0].clone(), |acc, n| compose(&acc, n));
    Ok(erase_brackets(composed, &b))
}

/// Drops the markers from a network's sigma. The network must not carry
/// them on any arc.
pub fn erase_brackets(mut n: Fst, b: &BracketSymbols) -> Fst {
    n.forget_symbols(&b.as_slice());
    n
}
