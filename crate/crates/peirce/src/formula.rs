//! Formulas of the implicational fragment: propositional variables and the
//! conditional as the only connective. Disjunction exists purely as surface
//! syntax and is rewritten to `(a -> b) -> b` while parsing.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

/// A purely implicational formula. Equality is structural; no normalization
/// or renaming is ever applied.
///
/// Subtrees are reference-counted: proof transformations stack formulas
/// inside ever-larger instances, and sharing keeps cloning and comparing
/// cheap where naive trees would blow up.
#[derive(Debug, Clone, Eq, Hash, PartialOrd, Ord)]
// The manual PartialEq below is the same structural equality the derive
// would produce, plus a pointer fast path, so the derived Hash stays
// consistent with it.
#[allow(clippy::derived_hash_with_manual_eq)]
pub enum Formula {
    Var(String),
    Imp(Arc<Formula>, Arc<Formula>),
}

impl PartialEq for Formula {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Formula::Var(a), Formula::Var(b)) => a == b,
            (Formula::Imp(a1, b1), Formula::Imp(a2, b2)) => {
                // Shared subtrees compare by pointer first.
                (Arc::ptr_eq(a1, a2) || a1 == a2) && (Arc::ptr_eq(b1, b2) || b1 == b2)
            }
            _ => false,
        }
    }
}

/// Shorthand for `Formula::Var`.
pub fn var(name: impl Into<String>) -> Formula {
    Formula::Var(name.into())
}

/// Shorthand for `Formula::Imp`.
pub fn imp(antecedent: Formula, consequent: Formula) -> Formula {
    Formula::Imp(Arc::new(antecedent), Arc::new(consequent))
}

/// The disjunction abbreviation: `or_of(a, b)` is `(a -> b) -> b`.
pub fn or_of(a: Formula, b: Formula) -> Formula {
    imp(imp(a, b.clone()), b)
}

impl Formula {
    /// Splits an implication into antecedent and consequent.
    pub fn as_imp(&self) -> Option<(&Formula, &Formula)> {
        match self {
            Formula::Var(_) => None,
            Formula::Imp(a, b) => Some((a, b)),
        }
    }

    /// Distinct variable names in first-occurrence (left-to-right) order.
    pub fn variables(&self) -> Vec<String> {
        fn walk(f: &Formula, seen: &mut Vec<String>) {
            match f {
                Formula::Var(name) => {
                    if !seen.iter().any(|n| n == name) {
                        seen.push(name.clone());
                    }
                }
                Formula::Imp(a, b) => {
                    walk(a, seen);
                    walk(b, seen);
                }
            }
        }
        let mut seen = Vec::new();
        walk(self, &mut seen);
        seen
    }

    /// Implication-nesting depth: variables have depth 0.
    pub fn depth(&self) -> usize {
        match self {
            Formula::Var(_) => 0,
            Formula::Imp(a, b) => 1 + a.depth().max(b.depth()),
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::Var(name) => f.write_str(name),
            Formula::Imp(a, b) => {
                // Right-associativity: only a nested antecedent needs parens.
                match **a {
                    Formula::Var(_) => write!(f, "{} -> {}", a, b),
                    Formula::Imp(..) => write!(f, "({}) -> {}", a, b),
                }
            }
        }
    }
}

/// Minimal-parenthesis concrete syntax; `parse(render(f)) == f`.
pub fn render(f: &Formula) -> String {
    f.to_string()
}

/// A total assignment of truth values to variable names.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Valuation {
    assignment: BTreeMap<String, bool>,
}

impl Valuation {
    pub fn new() -> Self {
        Valuation::default()
    }

    pub fn set(&mut self, name: impl Into<String>, value: bool) {
        self.assignment.insert(name.into(), value);
    }

    pub fn get(&self, name: &str) -> Option<bool> {
        self.assignment.get(name).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, bool)> {
        self.assignment.iter().map(|(n, v)| (n.as_str(), *v))
    }

    /// True on every variable of `f`.
    pub fn all_true(f: &Formula) -> Self {
        let mut v = Valuation::new();
        for name in f.variables() {
            v.set(name, true);
        }
        v
    }
}

impl FromIterator<(String, bool)> for Valuation {
    fn from_iter<T: IntoIterator<Item = (String, bool)>>(iter: T) -> Self {
        Valuation {
            assignment: iter.into_iter().collect(),
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (name, value) in &self.assignment {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "{}={}", name, if *value { 1 } else { 0 })?;
            first = false;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("unbound variable {0}")]
    UnboundVariable(String),
}

/// Evaluates `f` under `v`; the conditional is false only at 1 -> 0.
pub fn evaluate(f: &Formula, v: &Valuation) -> Result<bool, EvalError> {
    match f {
        Formula::Var(name) => v
            .get(name)
            .ok_or_else(|| EvalError::UnboundVariable(name.clone())),
        Formula::Imp(a, b) => Ok(!evaluate(a, v)? || evaluate(b, v)?),
    }
}

/// Exhaustive enumeration refuses formulas with more variables than this.
pub const MAX_TAUTOLOGY_VARIABLES: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TautologyError {
    #[error("formula has {count} variables; exhaustive checking is capped at {max}")]
    TooManyVariables { count: usize, max: usize },
}

/// Evaluation against a packed valuation: variable `j` of `names` is read
/// from bit `names.len() - 1 - j`, so the valuation index spells the row of
/// a conventional truth table.
pub(crate) fn evaluate_packed(f: &Formula, names: &[String], bits: u64) -> bool {
    match f {
        Formula::Var(name) => {
            let j = names
                .iter()
                .position(|n| n == name)
                .expect("variable present in name list");
            bits >> (names.len() - 1 - j) & 1 == 1
        }
        Formula::Imp(a, b) => !evaluate_packed(a, names, bits) || evaluate_packed(b, names, bits),
    }
}

/// First falsifying valuation in truth-table row order, or `None` for a
/// tautology.
pub fn counterexample(f: &Formula) -> Result<Option<Valuation>, TautologyError> {
    let names = f.variables();
    if names.len() > MAX_TAUTOLOGY_VARIABLES {
        return Err(TautologyError::TooManyVariables {
            count: names.len(),
            max: MAX_TAUTOLOGY_VARIABLES,
        });
    }
    for bits in 0..1u64 << names.len() {
        if !evaluate_packed(f, &names, bits) {
            let v = names
                .iter()
                .enumerate()
                .map(|(j, n)| (n.clone(), bits >> (names.len() - 1 - j) & 1 == 1))
                .collect();
            return Ok(Some(v));
        }
    }
    Ok(None)
}

/// True iff `f` evaluates to 1 under all `2^n` valuations of its variables.
pub fn is_tautology(f: &Formula) -> Result<bool, TautologyError> {
    Ok(counterexample(f)?.is_none())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    EmptyInput,
    UnexpectedEnd { expected: &'static str },
    UnexpectedChar { found: char, expected: &'static str },
    UnbalancedParen,
    TrailingInput,
}

/// A syntax error at a 0-based byte offset of the input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct ParseError {
    pub offset: usize,
    pub kind: ParseErrorKind,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ParseErrorKind::EmptyInput => {
                write!(f, "syntax error at offset {}: empty input", self.offset)
            }
            ParseErrorKind::UnexpectedEnd { expected } => write!(
                f,
                "syntax error at offset {}: unexpected end of input, expected {}",
                self.offset, expected
            ),
            ParseErrorKind::UnexpectedChar { found, expected } => write!(
                f,
                "syntax error at offset {}: unexpected character '{}', expected {}",
                self.offset, found, expected
            ),
            ParseErrorKind::UnbalancedParen => {
                write!(f, "unbalanced parenthesis at offset {}", self.offset)
            }
            ParseErrorKind::TrailingInput => {
                write!(f, "syntax error at offset {}: trailing input", self.offset)
            }
        }
    }
}

/// Parses the full input as one formula.
///
/// Grammar: `formula := imp ("\/" formula)?`, `imp := atom ("->" imp)?`,
/// `atom := var | "(" formula ")"`, `var := [a-z][a-z0-9]*`. Both operators
/// are right-associative and `\/` binds looser than `->`. `a \/ b` is
/// desugared to `(a -> b) -> b` on the spot; the tree never contains it.
pub fn parse(text: &str) -> Result<Formula, ParseError> {
    let mut p = Parser::new(text);
    let f = p.formula()?;
    p.skip_ws();
    if p.pos < p.bytes.len() {
        return Err(p.error_here(ParseErrorKind::TrailingInput));
    }
    Ok(f)
}

/// Parses a leading formula and reports how many bytes were consumed.
/// Used by the proof file reader, where a formula is followed by more
/// fields on the same line.
pub(crate) fn parse_prefix(text: &str) -> Result<(Formula, usize), ParseError> {
    let mut p = Parser::new(text);
    let f = p.formula()?;
    Ok((f, p.pos))
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
    open_parens: Vec<usize>,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Parser {
            bytes: text.as_bytes(),
            pos: 0,
            open_parens: Vec::new(),
        }
    }

    fn error_here(&self, kind: ParseErrorKind) -> ParseError {
        ParseError {
            offset: self.pos,
            kind,
        }
    }

    fn end_error(&self, expected: &'static str) -> ParseError {
        // Running out of input under an open paren reads better as an
        // unbalanced-parenthesis report at the offending paren.
        if let Some(&open) = self.open_parens.last() {
            return ParseError {
                offset: open,
                kind: ParseErrorKind::UnbalancedParen,
            };
        }
        self.error_here(ParseErrorKind::UnexpectedEnd { expected })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, token: &str) -> bool {
        if self.bytes[self.pos..].starts_with(token.as_bytes()) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn formula(&mut self) -> Result<Formula, ParseError> {
        let left = self.implication()?;
        let save = self.pos;
        self.skip_ws();
        if self.eat("\\/") {
            let right = self.formula()?;
            Ok(or_of(left, right))
        } else {
            self.pos = save;
            Ok(left)
        }
    }

    fn implication(&mut self) -> Result<Formula, ParseError> {
        let left = self.atom()?;
        let save = self.pos;
        self.skip_ws();
        if self.eat("->") {
            let right = self.implication()?;
            Ok(imp(left, right))
        } else {
            self.pos = save;
            Ok(left)
        }
    }

    fn atom(&mut self) -> Result<Formula, ParseError> {
        self.skip_ws();
        match self.peek() {
            None => {
                let blank = self.bytes.iter().all(|b| b.is_ascii_whitespace());
                if blank {
                    Err(self.error_here(ParseErrorKind::EmptyInput))
                } else {
                    Err(self.end_error("a formula"))
                }
            }
            Some(b'(') => {
                self.open_parens.push(self.pos);
                self.pos += 1;
                let inner = self.formula()?;
                self.skip_ws();
                match self.peek() {
                    Some(b')') => {
                        self.pos += 1;
                        self.open_parens.pop();
                        Ok(inner)
                    }
                    Some(c) => Err(self.error_here(ParseErrorKind::UnexpectedChar {
                        found: c as char,
                        expected: "')'",
                    })),
                    None => Err(self.end_error("')'")),
                }
            }
            Some(c) if c.is_ascii_lowercase() => {
                let start = self.pos;
                while self
                    .peek()
                    .is_some_and(|c| c.is_ascii_lowercase() || c.is_ascii_digit())
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.bytes[start..self.pos])
                    .expect("ascii range")
                    .to_string();
                Ok(Formula::Var(name))
            }
            Some(c) => Err(self.error_here(ParseErrorKind::UnexpectedChar {
                found: c as char,
                expected: "a variable or '('",
            })),
        }
    }
}
