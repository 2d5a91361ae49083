//! Script files: a sequence of statements run against one session.
//!
//! ```text
//! # comment
//! define Rule1 a b -> x ;
//! regex Rule1 .o. b c -> x ;
//! apply_down abc
//! apply_up xc
//! test_equivalent a | b -> ~$[] ; ~$[a | b] ;
//! print_net
//! save rule.fst
//! load rule.fst
//! dot rule.dot
//! ```
//!
//! Expression statements run to the next unescaped `;` and may span lines.
//! The other statements take the rest of their line. `apply down` and
//! `apply up` are accepted as spellings of `apply_down` and `apply_up`.

use std::fs;
use std::path::{Path, PathBuf};

use crate::apply::{apply, split_input, ApplyConfig, Applied, Side};
use crate::dot::to_dot;
use crate::error::{Error, Result};
use crate::fst::{equivalent, Fst};
use crate::regex::{parse_str, Compiler, Definitions};
use crate::serialize::{read_text, write_text};

/// Formats one application result as `input<TAB>{out1,out2}`, with a
/// trailing `...` inside the braces when enumeration was cut short.
pub fn format_applied(input: &str, applied: &Applied, sep: &str) -> String {
    let mut outs = applied.joined(sep);
    if applied.truncated {
        outs.push("...".into());
    }
    format!("{input}\t{{{}}}", outs.join(","))
}

/// Mutable state shared by the statements of a script.
#[derive(Debug, Default)]
pub struct Session {
    defs: Definitions,
    current: Option<Fst>,
    base_dir: Option<PathBuf>,
}

impl Session {
    pub fn new() -> Self {
        Session::default()
    }

    /// Resolve relative `save`/`load`/`dot` paths against `dir`.
    pub fn with_base_dir(dir: impl Into<PathBuf>) -> Self {
        Session { base_dir: Some(dir.into()), ..Default::default() }
    }

    pub fn current(&self) -> Option<&Fst> {
        self.current.as_ref()
    }

    pub fn definition(&self, name: &str) -> Option<&Fst> {
        self.defs.get(name)
    }

    fn path(&self, p: &str) -> PathBuf {
        match &self.base_dir {
            Some(dir) if Path::new(p).is_relative() => dir.join(p),
            _ => PathBuf::from(p),
        }
    }

    fn compile(&self, text: &str, line: usize) -> Result<Fst> {
        let ast = parse_str(text).map_err(|e| at_line(e, line))?;
        Compiler::with_definitions(&self.defs)
            .strict_names(true)
            .compile(&ast)
            .map_err(|e| at_line(e, line))
    }

    fn net(&self, line: usize) -> Result<&Fst> {
        self.current.as_ref().ok_or_else(|| Error::Script { line, message: "no network defined yet".into() })
    }

    /// Runs every statement of `text`, returning what the script printed.
    pub fn run(&mut self, text: &str) -> Result<String> {
        let mut out = String::new();
        let mut reader = Reader::new(text);
        while let Some((line, keyword)) = reader.keyword() {
            match keyword.as_str() {
                "define" => {
                    let rest = reader.expression(line)?;
                    let (name, expr) = rest
                        .trim_start()
                        .split_once(char::is_whitespace)
                        .ok_or_else(|| Error::Script { line, message: "define needs a name and an expression".into() })?;
                    if self.defs.contains_key(name) {
                        return Err(Error::Redefinition { name: name.into(), line });
                    }
                    let net = self.compile(expr, line)?;
                    self.defs.insert(name.into(), net);
                }
                "regex" => {
                    let expr = reader.expression(line)?;
                    self.current = Some(self.compile(&expr, line)?);
                }
                "test_equivalent" => {
                    let first = reader.expression(line)?;
                    let second = reader.expression(line)?;
                    let a = self.compile(&first, line)?;
                    let b = self.compile(&second, line)?;
                    out.push_str(if equivalent(&a, &b) { "equivalent\n" } else { "not equivalent\n" });
                }
                "apply_down" | "apply_up" | "apply" => {
                    let mut rest = reader.rest_of_line();
                    let side = match keyword.as_str() {
                        "apply_down" => Side::Down,
                        "apply_up" => Side::Up,
                        _ => {
                            let (dir, tail) = rest.trim().split_once(char::is_whitespace).unwrap_or((rest.trim(), ""));
                            let side = match dir {
                                "down" => Side::Down,
                                "up" => Side::Up,
                                _ => return Err(Error::Script { line, message: "expected `apply down` or `apply up`".into() }),
                            };
                            rest = tail.to_string();
                            side
                        }
                    };
                    let word = rest.trim();
                    let cfg = ApplyConfig { side, ..Default::default() };
                    let result = apply(self.net(line)?, &split_input(word, true), &cfg);
                    out.push_str(&format_applied(word, &result, ""));
                    out.push('\n');
                }
                "print_net" => {
                    reader.rest_of_line();
                    out.push_str(&write_text(self.net(line)?));
                }
                "save" | "load" | "dot" => {
                    let arg = reader.rest_of_line();
                    let arg = arg.trim();
                    if arg.is_empty() {
                        return Err(Error::Script { line, message: format!("{keyword} needs a path") });
                    }
                    let path = self.path(arg);
                    match keyword.as_str() {
                        "save" => fs::write(path, write_text(self.net(line)?))?,
                        "dot" => fs::write(path, to_dot(self.net(line)?))?,
                        _ => {
                            let text = fs::read_to_string(path)?;
                            self.current = Some(read_text(&text)?);
                        }
                    }
                }
                other => {
                    return Err(Error::Script { line, message: format!("unknown statement `{other}`") });
                }
            }
        }
        Ok(out)
    }
}

fn at_line(e: Error, line: usize) -> Error {
    match e {
        Error::UndefinedName { name, .. } => Error::UndefinedName { name, line },
        other => other,
    }
}

/// Character cursor over script text that skips comment lines.
struct Reader<'a> {
    lines: Vec<&'a str>,
    line: usize,
    col: usize,
}

impl<'a> Reader<'a> {
    fn new(text: &'a str) -> Self {
        Reader { lines: text.lines().collect(), line: 0, col: 0 }
    }

    fn is_comment(l: &str) -> bool {
        l.trim_start().starts_with('#')
    }

    fn current(&self) -> &'a str {
        &self.lines[self.line][self.col..]
    }

    fn next_line(&mut self) {
        self.line += 1;
        self.col = 0;
    }

    /// The next statement keyword and its 1-based line number.
    fn keyword(&mut self) -> Option<(usize, String)> {
        while self.line < self.lines.len() {
            let rest = self.current();
            if rest.trim().is_empty() || (self.col == 0 && Self::is_comment(rest)) {
                self.next_line();
                continue;
            }
            let trimmed = rest.trim_start();
            self.col += rest.len() - trimmed.len();
            let word: String = trimmed.chars().take_while(|c| !c.is_whitespace()).collect();
            self.col += word.len();
            return Some((self.line + 1, word));
        }
        None
    }

    fn rest_of_line(&mut self) -> String {
        let rest = self.current().to_string();
        self.next_line();
        rest
    }

    /// Text up to the next unescaped `;`, which is consumed.
    fn expression(&mut self, start_line: usize) -> Result<String> {
        let mut text = String::new();
        while self.line < self.lines.len() {
            if self.col == 0 && Self::is_comment(self.lines[self.line]) {
                self.next_line();
                continue;
            }
            let rest = self.current();
            let mut escaped = false;
            for (i, c) in rest.char_indices() {
                if escaped {
                    escaped = false;
                } else if c == '%' {
                    escaped = true;
                } else if c == ';' {
                    text.push_str(&rest[..i]);
                    self.col += i + 1;
                    if self.current().trim().is_empty() {
                        self.next_line();
                    }
                    return Ok(text);
                }
            }
            text.push_str(rest);
            text.push('\n');
            self.next_line();
        }
        Err(Error::Script { line: start_line, message: "expression is missing its terminating `;`".into() })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(text: &str) -> Result<String> {
        Session::new().run(text)
    }

    #[test]
    fn composed_rules_pick_first_replacement() {
        let script = "\
# rule ordering
define Rule1 a b -> x ;
define Rule2 b c -> x ;
regex Rule1 .o. Rule2 ;
apply_down abc
";
        assert_eq!(run(script).unwrap(), "abc\t{xc}\n");
    }

    #[test]
    fn empty_script_prints_nothing() {
        assert_eq!(run("").unwrap(), "");
        assert_eq!(run("# only a comment\n\n").unwrap(), "");
    }

    #[test]
    fn undefined_name_reports_symbol_and_line() {
        let err = run("define Rule1 a -> b ;\n\nregex Rule1 .o. Rule3 ;\n").unwrap_err();
        match err {
            Error::UndefinedName { name, line } => {
                assert_eq!(name, "Rule3");
                assert_eq!(line, 3);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn redefinition_is_an_error() {
        let err = run("define A1 a ;\ndefine A1 b ;\n").unwrap_err();
        assert!(matches!(err, Error::Redefinition { line: 2, .. }));
    }

    #[test]
    fn multi_line_expressions_and_equivalence() {
        let script = "\
test_equivalent a | b
   -> ~$[] ;
   ~$[a | b] ;
test_equivalent a ; b ;
regex a %; b ; apply down a;b
";
        assert_eq!(run(script).unwrap(), "equivalent\nnot equivalent\na;b\t{a;b}\n");
    }

    #[test]
    fn missing_terminator() {
        assert!(matches!(run("regex a b"), Err(Error::Script { line: 1, .. })));
    }

    #[test]
    fn apply_without_network() {
        assert!(matches!(run("apply_down a"), Err(Error::Script { line: 1, .. })));
    }

    #[test]
    fn save_load_and_dot_files() {
        let dir = tempfile::tempdir().unwrap();
        let mut session = Session::with_base_dir(dir.path());
        let out = session
            .run("regex a -> x ;\nsave r.fst\ndot r.dot\nregex b ;\nload r.fst\napply_down ab\nprint_net\n")
            .unwrap();
        assert!(out.starts_with("ab\t{xb}\nfst "));
        assert!(fs::read_to_string(dir.path().join("r.dot")).unwrap().starts_with("digraph"));
    }
}
