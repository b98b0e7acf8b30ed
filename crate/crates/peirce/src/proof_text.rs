//! Line-based text format for proof objects.
//!
//! ```text
//! # comments run from '#' to end of line
//! basis: K S P +VE
//! hyp 1: p -> q
//! hyp 2: p
//! 1. p -> q    hyp 1
//! 2. p         hyp 2
//! 3. q         mp 1 2
//! 4. p -> q -> p    ax K A=p B=q
//! 5. ((p -> q) -> q) -> q    ve 3 3 A=p B=q Q=q
//! ```
//!
//! Every step line carries its stated formula so files stay auditable by
//! eye; the kernel validates rather than infers. Metavariable assignments
//! in `ax`/`ve` lines are written `A=<formula>`, parentheses optional.
//! Step and hypothesis numbers are 1-based and must be consecutive. A file
//! without a `basis:` line defaults to `K S`.

use std::fmt;

use thiserror::Error;

use crate::formula::{parse_prefix, Formula, ParseError};
use crate::kernel::{Basis, Justification, Proof, ProofStep};
use crate::scheme::{AxiomScheme, Metavariable, SchemeSubstitution};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ProofTextErrorKind {
    Formula(ParseError),
    UnknownBasisToken(String),
    UnknownScheme(String),
    UnknownJustification(String),
    BadHypothesisNumber { expected: usize, found: usize },
    BadStepNumber { expected: usize, found: usize },
    DuplicateBasisLine,
    MisplacedLine(&'static str),
    ExpectedToken(&'static str),
    BadMetavariable(char),
    DuplicateMetavariable(char),
    TrailingInput,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct ProofTextError {
    /// 1-based line number.
    pub line: usize,
    pub kind: ProofTextErrorKind,
}

impl fmt::Display for ProofTextError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: ", self.line)?;
        match &self.kind {
            ProofTextErrorKind::Formula(e) => write!(f, "{e}"),
            ProofTextErrorKind::UnknownBasisToken(t) => write!(f, "unknown basis token {t:?}"),
            ProofTextErrorKind::UnknownScheme(t) => write!(f, "unknown axiom scheme {t:?}"),
            ProofTextErrorKind::UnknownJustification(t) => {
                write!(
                    f,
                    "unknown justification {t:?} (expected hyp, ax, mp or ve)"
                )
            }
            ProofTextErrorKind::BadHypothesisNumber { expected, found } => {
                write!(
                    f,
                    "hypothesis number {found} out of order, expected {expected}"
                )
            }
            ProofTextErrorKind::BadStepNumber { expected, found } => {
                write!(f, "step number {found} out of order, expected {expected}")
            }
            ProofTextErrorKind::DuplicateBasisLine => write!(f, "second basis line"),
            ProofTextErrorKind::MisplacedLine(what) => write!(f, "misplaced {what} line"),
            ProofTextErrorKind::ExpectedToken(what) => write!(f, "expected {what}"),
            ProofTextErrorKind::BadMetavariable(c) => {
                write!(f, "unknown metavariable {c:?} (expected A, B, C or Q)")
            }
            ProofTextErrorKind::DuplicateMetavariable(c) => {
                write!(f, "metavariable {c:?} assigned twice")
            }
            ProofTextErrorKind::TrailingInput => write!(f, "trailing input after justification"),
        }
    }
}

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
    line: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str, line: usize) -> Self {
        Cursor { text, pos: 0, line }
    }

    fn err(&self, kind: ProofTextErrorKind) -> ProofTextError {
        ProofTextError {
            line: self.line,
            kind,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.text.len() && self.text.as_bytes()[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos >= self.text.len()
    }

    fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn number(&mut self) -> Option<usize> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            None
        } else {
            self.text[start..self.pos].parse().ok()
        }
    }

    /// A run of lowercase letters (justification keywords).
    fn word(&mut self) -> &'a str {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_lowercase()) {
            self.pos += 1;
        }
        &self.text[start..self.pos]
    }

    fn formula(&mut self) -> Result<Formula, ProofTextError> {
        self.skip_ws();
        match parse_prefix(&self.text[self.pos..]) {
            Ok((f, consumed)) => {
                self.pos += consumed;
                Ok(f)
            }
            Err(mut e) => {
                e.offset += self.pos;
                Err(self.err(ProofTextErrorKind::Formula(e)))
            }
        }
    }

    fn scheme(&mut self) -> Result<AxiomScheme, ProofTextError> {
        self.skip_ws();
        let start = self.pos;
        while self
            .peek()
            .is_some_and(|c| c.is_ascii_uppercase() || c == '\'')
        {
            self.pos += 1;
        }
        let token = &self.text[start..self.pos];
        token
            .parse()
            .map_err(|_| self.err(ProofTextErrorKind::UnknownScheme(token.to_string())))
    }

    /// `A=<formula>` pairs until end of line.
    fn bindings(&mut self) -> Result<SchemeSubstitution, ProofTextError> {
        let mut subst = SchemeSubstitution::new();
        while !self.at_end() {
            let c = self.peek().expect("not at end");
            let metavariable = Metavariable::from_char(c)
                .ok_or_else(|| self.err(ProofTextErrorKind::BadMetavariable(c)))?;
            self.pos += c.len_utf8();
            self.skip_ws();
            if !self.eat('=') {
                return Err(self.err(ProofTextErrorKind::ExpectedToken("'=' after metavariable")));
            }
            let formula = self.formula()?;
            if subst.insert(metavariable, formula).is_some() {
                return Err(self.err(ProofTextErrorKind::DuplicateMetavariable(c)));
            }
        }
        Ok(subst)
    }
}

/// Parses the proof file format. The result is *not* kernel-checked.
pub fn parse_proof(text: &str) -> Result<Proof, ProofTextError> {
    let mut basis: Option<Basis> = None;
    let mut hypotheses: Vec<Formula> = Vec::new();
    let mut steps: Vec<ProofStep> = Vec::new();

    for (line_index, raw) in text.lines().enumerate() {
        let line_number = line_index + 1;
        let content = match raw.find('#') {
            Some(i) => &raw[..i],
            None => raw,
        };
        if content.trim().is_empty() {
            continue;
        }
        let mut cursor = Cursor::new(content, line_number);
        cursor.skip_ws();

        if content.trim_start().starts_with("basis:") {
            cursor.pos = content.find("basis:").expect("just matched") + "basis:".len();
            if basis.is_some() {
                return Err(cursor.err(ProofTextErrorKind::DuplicateBasisLine));
            }
            if !hypotheses.is_empty() || !steps.is_empty() {
                return Err(cursor.err(ProofTextErrorKind::MisplacedLine("basis")));
            }
            let mut schemes = Vec::new();
            let mut vee_e = false;
            for token in content[cursor.pos..].split_whitespace() {
                if token == "+VE" {
                    vee_e = true;
                } else if let Ok(scheme) = token.parse::<AxiomScheme>() {
                    schemes.push(scheme);
                } else {
                    return Err(
                        cursor.err(ProofTextErrorKind::UnknownBasisToken(token.to_string()))
                    );
                }
            }
            basis = Some(Basis::new(schemes, vee_e));
            continue;
        }

        if content.trim_start().starts_with("hyp") {
            let word = cursor.word();
            debug_assert_eq!(word, "hyp");
            if !steps.is_empty() {
                return Err(cursor.err(ProofTextErrorKind::MisplacedLine("hypothesis")));
            }
            let found = cursor.number().ok_or_else(|| {
                cursor.err(ProofTextErrorKind::ExpectedToken("a hypothesis number"))
            })?;
            if found != hypotheses.len() + 1 {
                return Err(cursor.err(ProofTextErrorKind::BadHypothesisNumber {
                    expected: hypotheses.len() + 1,
                    found,
                }));
            }
            cursor.skip_ws();
            if !cursor.eat(':') {
                return Err(cursor.err(ProofTextErrorKind::ExpectedToken("':' after hyp number")));
            }
            let formula = cursor.formula()?;
            if !cursor.at_end() {
                return Err(cursor.err(ProofTextErrorKind::TrailingInput));
            }
            hypotheses.push(formula);
            continue;
        }

        // Step line: `N. <formula> <justification>`.
        let found = cursor
            .number()
            .ok_or_else(|| cursor.err(ProofTextErrorKind::ExpectedToken("a step number")))?;
        if found != steps.len() + 1 {
            return Err(cursor.err(ProofTextErrorKind::BadStepNumber {
                expected: steps.len() + 1,
                found,
            }));
        }
        if !cursor.eat('.') {
            return Err(cursor.err(ProofTextErrorKind::ExpectedToken("'.' after step number")));
        }
        let formula = cursor.formula()?;
        let keyword = cursor.word();
        let justification = match keyword {
            "hyp" => {
                let index = cursor.number().ok_or_else(|| {
                    cursor.err(ProofTextErrorKind::ExpectedToken("a hypothesis number"))
                })?;
                Justification::Hypothesis(index)
            }
            "ax" => {
                let scheme = cursor.scheme()?;
                let subst = cursor.bindings()?;
                Justification::Axiom(scheme, subst)
            }
            "mp" => {
                let implication = cursor.number().ok_or_else(|| {
                    cursor.err(ProofTextErrorKind::ExpectedToken("a step number"))
                })?;
                let antecedent = cursor.number().ok_or_else(|| {
                    cursor.err(ProofTextErrorKind::ExpectedToken("a step number"))
                })?;
                Justification::ModusPonens {
                    implication,
                    antecedent,
                }
            }
            "ve" => {
                let left = cursor.number().ok_or_else(|| {
                    cursor.err(ProofTextErrorKind::ExpectedToken("a step number"))
                })?;
                let right = cursor.number().ok_or_else(|| {
                    cursor.err(ProofTextErrorKind::ExpectedToken("a step number"))
                })?;
                let subst = cursor.bindings()?;
                let field = |m: Metavariable, name: &'static str| {
                    subst.get(m).cloned().ok_or(ProofTextError {
                        line: line_number,
                        kind: ProofTextErrorKind::ExpectedToken(name),
                    })
                };
                Justification::VeeElim {
                    left,
                    right,
                    a: field(Metavariable::A, "an A= assignment on the ve line")?,
                    b: field(Metavariable::B, "a B= assignment on the ve line")?,
                    q: field(Metavariable::Q, "a Q= assignment on the ve line")?,
                }
            }
            other => {
                return Err(cursor.err(ProofTextErrorKind::UnknownJustification(other.to_string())))
            }
        };
        if !cursor.at_end() {
            return Err(cursor.err(ProofTextErrorKind::TrailingInput));
        }
        steps.push(ProofStep {
            formula,
            justification,
        });
    }

    Ok(Proof {
        hypotheses,
        steps,
        basis: basis.unwrap_or_else(Basis::ks),
    })
}

fn justification_text(justification: &Justification) -> String {
    match justification {
        Justification::Hypothesis(i) => format!("hyp {i}"),
        Justification::Axiom(scheme, subst) => {
            let mut out = format!("ax {scheme}");
            for (m, f) in subst.iter() {
                out.push_str(&format!(" {m}={f}"));
            }
            out
        }
        Justification::ModusPonens {
            implication,
            antecedent,
        } => format!("mp {implication} {antecedent}"),
        Justification::VeeElim {
            left,
            right,
            a,
            b,
            q,
        } => {
            format!("ve {left} {right} A={a} B={b} Q={q}")
        }
    }
}

/// Renders a proof in the file format; output is deterministic and
/// re-parses to an equal proof.
pub fn render_proof(proof: &Proof) -> String {
    let mut out = format!("basis: {}\n", proof.basis);
    for (i, h) in proof.hypotheses.iter().enumerate() {
        out.push_str(&format!("hyp {}: {}\n", i + 1, h));
    }
    let index_width = proof.steps.len().to_string().len();
    for (i, step) in proof.steps.iter().enumerate() {
        out.push_str(&format!(
            "{:>index_width$}. {}   {}\n",
            i + 1,
            step.formula,
            justification_text(&step.justification),
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::deduction::identity_proof;
    use crate::formula::var;
    use crate::kernel::check_proof;
    use crate::theorems::{prove_or_elim, prove_vee_e_implies_peirce};

    #[test]
    fn renders_and_reparses_identity() {
        let proof = identity_proof(&var("p"));
        let text = render_proof(&proof);
        assert!(text.starts_with("basis: K S\n"));
        let parsed = parse_proof(&text).unwrap();
        assert_eq!(parsed, proof);
        check_proof(&parsed).unwrap();
    }

    #[test]
    fn round_trips_theorem_outputs() {
        let proofs = [
            prove_or_elim(&var("p"), &var("q"), &var("r")),
            prove_vee_e_implies_peirce(&var("p"), &var("q")),
        ];
        for proof in proofs {
            let text = render_proof(&proof);
            let parsed = parse_proof(&text).unwrap();
            assert_eq!(parsed, proof);
        }
    }

    #[test]
    fn parses_a_handwritten_file() {
        let text = "\
# modus ponens from two hypotheses
basis: K S
hyp 1: p
hyp 2: p -> q

1. p -> q   hyp 2
2. p        hyp 1   # the antecedent
3. q        mp 1 2
";
        let proof = parse_proof(text).unwrap();
        assert_eq!(proof.hypotheses.len(), 2);
        assert_eq!(proof.steps.len(), 3);
        let judgment = check_proof(&proof).unwrap();
        assert_eq!(judgment.to_string(), "p, p -> q ⊢ q");
    }

    #[test]
    fn parses_axiom_lines_with_composite_bindings() {
        let text = "\
basis: K S
1. (p -> q) -> r -> (p -> q)   ax K A=p -> q B=r
";
        let proof = parse_proof(text).unwrap();
        check_proof(&proof).unwrap();
    }

    #[test]
    fn parses_ve_lines() {
        let text = "\
basis: K S +VE
hyp 1: p -> p
hyp 2: q -> p
1. p -> p                 hyp 1
2. q -> p                 hyp 2
3. ((p -> q) -> q) -> p   ve 1 2 A=p B=q Q=p
";
        let proof = parse_proof(text).unwrap();
        assert!(proof.basis.vee_e());
        check_proof(&proof).unwrap();
    }

    #[test]
    fn missing_basis_line_defaults_to_ks() {
        let proof = parse_proof("1. p -> q -> p  ax K A=p B=q\n").unwrap();
        assert_eq!(proof.basis, Basis::ks());
    }

    #[test]
    fn keyword_like_variable_names_still_parse() {
        let text = "\
basis: K S
hyp 1: mp -> hyp
1. mp -> hyp   hyp 1
";
        let proof = parse_proof(text).unwrap();
        let judgment = check_proof(&proof).unwrap();
        assert_eq!(judgment.to_string(), "mp -> hyp ⊢ mp -> hyp");
    }

    #[test]
    fn error_positions_carry_line_numbers() {
        let err = parse_proof("basis: K S\n1. -> p   hyp 1\n").unwrap_err();
        assert_eq!(err.line, 2);
        assert!(matches!(err.kind, ProofTextErrorKind::Formula(_)));

        // `p -> hyp` reads as a formula over the variable `hyp`, so the
        // failure lands on the missing justification instead.
        let err = parse_proof("basis: K S\n1. p ->   hyp 1\n").unwrap_err();
        assert_eq!(err.line, 2);
        assert!(matches!(
            err.kind,
            ProofTextErrorKind::UnknownJustification(_)
        ));

        let err = parse_proof("basis: K X\n").unwrap_err();
        assert_eq!(err.line, 1);
        assert_eq!(
            err.kind,
            ProofTextErrorKind::UnknownBasisToken("X".to_string())
        );

        let err = parse_proof("2. p  hyp 1\n").unwrap_err();
        assert_eq!(
            err.kind,
            ProofTextErrorKind::BadStepNumber {
                expected: 1,
                found: 2
            }
        );

        let err = parse_proof("1. p  zap 1\n").unwrap_err();
        assert_eq!(
            err.kind,
            ProofTextErrorKind::UnknownJustification("zap".to_string())
        );

        let err = parse_proof("1. p  hyp 1 extra\n").unwrap_err();
        assert_eq!(err.kind, ProofTextErrorKind::TrailingInput);

        let err = parse_proof("1. p -> q -> p  ax K A=p B=q A=r\n").unwrap_err();
        assert_eq!(err.kind, ProofTextErrorKind::DuplicateMetavariable('A'));
    }

    #[test]
    fn hypotheses_after_steps_are_rejected() {
        let err = parse_proof("1. p  hyp 1\nhyp 1: p\n").unwrap_err();
        assert_eq!(err.line, 2);
        assert_eq!(err.kind, ProofTextErrorKind::MisplacedLine("hypothesis"));
    }

    #[test]
    fn prime_scheme_round_trips() {
        let text = "\
basis: K S P'
1. (p -> p) -> ((p -> q) -> p) -> p   ax P' A=p B=q Q=p
";
        let proof = parse_proof(text).unwrap();
        check_proof(&proof).unwrap();
        let again = parse_proof(&render_proof(&proof)).unwrap();
        assert_eq!(again, proof);
    }
}
