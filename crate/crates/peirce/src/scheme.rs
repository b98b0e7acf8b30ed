//! Axiom schemes and their instantiation. A scheme is a fixed pattern over
//! metavariables; an axiom step names the scheme and an explicit
//! substitution, and the kernel re-instantiates and compares rather than
//! pattern-matching.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::formula::{imp, Formula};

/// The four schemes the kernel knows.
///
/// * `P`: `((A -> B) -> A) -> A`, the Peirce scheme
/// * `K`: `A -> (B -> A)`, affirmation of the consequent
/// * `S`: `(A -> (B -> C)) -> ((A -> B) -> (A -> C))`, self-distributivity
/// * `PPrime`: `(A -> Q) -> (((A -> B) -> Q) -> Q)`, the Peirce equivalent
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AxiomScheme {
    P,
    K,
    S,
    PPrime,
}

impl AxiomScheme {
    /// Metavariables the scheme requires, in canonical order.
    pub fn required_metavariables(self) -> &'static [Metavariable] {
        use Metavariable::*;
        match self {
            AxiomScheme::P | AxiomScheme::K => &[A, B],
            AxiomScheme::S => &[A, B, C],
            AxiomScheme::PPrime => &[A, B, Q],
        }
    }

    fn pattern(self) -> Pattern {
        use Metavariable::*;
        match self {
            AxiomScheme::P => pat_imp(pat_imp(pat_imp(mv(A), mv(B)), mv(A)), mv(A)),
            AxiomScheme::K => pat_imp(mv(A), pat_imp(mv(B), mv(A))),
            AxiomScheme::S => pat_imp(
                pat_imp(mv(A), pat_imp(mv(B), mv(C))),
                pat_imp(pat_imp(mv(A), mv(B)), pat_imp(mv(A), mv(C))),
            ),
            AxiomScheme::PPrime => pat_imp(
                pat_imp(mv(A), mv(Q)),
                pat_imp(pat_imp(pat_imp(mv(A), mv(B)), mv(Q)), mv(Q)),
            ),
        }
    }
}

impl fmt::Display for AxiomScheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AxiomScheme::P => f.write_str("P"),
            AxiomScheme::K => f.write_str("K"),
            AxiomScheme::S => f.write_str("S"),
            AxiomScheme::PPrime => f.write_str("P'"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown axiom scheme {0:?}")]
pub struct UnknownScheme(pub String);

impl FromStr for AxiomScheme {
    type Err = UnknownScheme;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "P" => Ok(AxiomScheme::P),
            "K" => Ok(AxiomScheme::K),
            "S" => Ok(AxiomScheme::S),
            "P'" => Ok(AxiomScheme::PPrime),
            other => Err(UnknownScheme(other.to_string())),
        }
    }
}

/// Metavariable names appearing in scheme patterns.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Metavariable {
    A,
    B,
    C,
    Q,
}

impl Metavariable {
    pub fn from_char(c: char) -> Option<Self> {
        match c {
            'A' => Some(Metavariable::A),
            'B' => Some(Metavariable::B),
            'C' => Some(Metavariable::C),
            'Q' => Some(Metavariable::Q),
            _ => None,
        }
    }
}

impl fmt::Display for Metavariable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Metavariable::A => f.write_str("A"),
            Metavariable::B => f.write_str("B"),
            Metavariable::C => f.write_str("C"),
            Metavariable::Q => f.write_str("Q"),
        }
    }
}

/// An explicit binding of metavariables to formulas.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SchemeSubstitution {
    bindings: BTreeMap<Metavariable, Formula>,
}

impl SchemeSubstitution {
    pub fn new() -> Self {
        SchemeSubstitution::default()
    }

    pub fn with(mut self, m: Metavariable, f: Formula) -> Self {
        self.bindings.insert(m, f);
        self
    }

    pub fn insert(&mut self, m: Metavariable, f: Formula) -> Option<Formula> {
        self.bindings.insert(m, f)
    }

    /// Binds `A` and `B` (enough for `P` and `K`).
    pub fn ab(a: Formula, b: Formula) -> Self {
        Self::new()
            .with(Metavariable::A, a)
            .with(Metavariable::B, b)
    }

    /// Binds `A`, `B` and `C` (for `S`).
    pub fn abc(a: Formula, b: Formula, c: Formula) -> Self {
        Self::ab(a, b).with(Metavariable::C, c)
    }

    /// Binds `A`, `B` and `Q` (for `P'`).
    pub fn abq(a: Formula, b: Formula, q: Formula) -> Self {
        Self::ab(a, b).with(Metavariable::Q, q)
    }

    pub fn get(&self, m: Metavariable) -> Option<&Formula> {
        self.bindings.get(&m)
    }

    pub fn iter(&self) -> impl Iterator<Item = (Metavariable, &Formula)> {
        self.bindings.iter().map(|(m, f)| (*m, f))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SubstitutionError {
    #[error("substitution for scheme {scheme} is missing metavariable {metavariable}")]
    Missing {
        scheme: AxiomScheme,
        metavariable: Metavariable,
    },
    #[error("substitution for scheme {scheme} binds extraneous metavariable {metavariable}")]
    Extra {
        scheme: AxiomScheme,
        metavariable: Metavariable,
    },
}

/// Replaces the scheme's metavariables with the bound formulas. The
/// substitution must bind exactly the scheme's metavariables.
pub fn instantiate(
    scheme: AxiomScheme,
    subst: &SchemeSubstitution,
) -> Result<Formula, SubstitutionError> {
    let required = scheme.required_metavariables();
    for m in required {
        if subst.get(*m).is_none() {
            return Err(SubstitutionError::Missing {
                scheme,
                metavariable: *m,
            });
        }
    }
    for (m, _) in subst.iter() {
        if !required.contains(&m) {
            return Err(SubstitutionError::Extra {
                scheme,
                metavariable: m,
            });
        }
    }
    Ok(apply(&scheme.pattern(), subst))
}

/// Recovers the substitution from a scheme instance by matching the pattern
/// at the root, if the formula is an instance at all.
pub fn match_scheme(scheme: AxiomScheme, f: &Formula) -> Option<SchemeSubstitution> {
    let mut subst = SchemeSubstitution::new();
    if unify(&scheme.pattern(), f, &mut subst) {
        Some(subst)
    } else {
        None
    }
}

enum Pattern {
    Mv(Metavariable),
    Imp(Box<Pattern>, Box<Pattern>),
}

fn mv(m: Metavariable) -> Pattern {
    Pattern::Mv(m)
}

fn pat_imp(a: Pattern, b: Pattern) -> Pattern {
    Pattern::Imp(Box::new(a), Box::new(b))
}

fn apply(pattern: &Pattern, subst: &SchemeSubstitution) -> Formula {
    match pattern {
        Pattern::Mv(m) => subst.get(*m).expect("binding checked").clone(),
        Pattern::Imp(a, b) => imp(apply(a, subst), apply(b, subst)),
    }
}

fn unify(pattern: &Pattern, f: &Formula, subst: &mut SchemeSubstitution) -> bool {
    match pattern {
        Pattern::Mv(m) => match subst.get(*m) {
            Some(bound) => bound == f,
            None => {
                subst.insert(*m, f.clone());
                true
            }
        },
        Pattern::Imp(pa, pb) => match f.as_imp() {
            Some((fa, fb)) => unify(pa, fa, subst) && unify(pb, fb, subst),
            None => false,
        },
    }
}
