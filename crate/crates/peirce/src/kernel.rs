//! The trusted checker for Hilbert-style proof objects.
//!
//! Every step carries its stated formula; the kernel re-derives what the
//! step's justification yields and compares structurally. Nothing here
//! searches or infers, so the trusted surface stays a handful of equality
//! checks. A [`Judgment`] can only be obtained from [`check_proof`].

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::formula::{imp, or_of, Formula};
use crate::scheme::{instantiate, AxiomScheme, SchemeSubstitution, SubstitutionError};

/// The axiom schemes a proof may appeal to, plus whether the primitive
/// inference rule ∨E is available.
///
/// By the standing convention every basis used by the library contains `K`
/// and `S`; smaller bases remain representable so that gating experiments
/// (checking a proof against a deliberately weak basis) work.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Basis {
    schemes: BTreeSet<AxiomScheme>,
    vee_e: bool,
}

impl Basis {
    pub fn new(schemes: impl IntoIterator<Item = AxiomScheme>, vee_e: bool) -> Self {
        Basis {
            schemes: schemes.into_iter().collect(),
            vee_e,
        }
    }

    /// The standing assumption `{K, S}`, no ∨E.
    pub fn ks() -> Self {
        Basis::new([AxiomScheme::K, AxiomScheme::S], false)
    }

    /// `{P, K, S}`, no ∨E.
    pub fn pks() -> Self {
        Basis::ks().with_scheme(AxiomScheme::P)
    }

    pub fn with_scheme(mut self, scheme: AxiomScheme) -> Self {
        self.schemes.insert(scheme);
        self
    }

    pub fn with_vee_e(mut self, enabled: bool) -> Self {
        self.vee_e = enabled;
        self
    }

    pub fn contains(&self, scheme: AxiomScheme) -> bool {
        self.schemes.contains(&scheme)
    }

    pub fn vee_e(&self) -> bool {
        self.vee_e
    }

    pub fn schemes(&self) -> impl Iterator<Item = AxiomScheme> + '_ {
        self.schemes.iter().copied()
    }

    pub fn union(&self, other: &Basis) -> Basis {
        Basis {
            schemes: self.schemes.union(&other.schemes).copied().collect(),
            vee_e: self.vee_e || other.vee_e,
        }
    }

    pub fn is_superset_of(&self, other: &Basis) -> bool {
        other.schemes.is_subset(&self.schemes) && (self.vee_e || !other.vee_e)
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for scheme in [
            AxiomScheme::K,
            AxiomScheme::S,
            AxiomScheme::P,
            AxiomScheme::PPrime,
        ] {
            if self.contains(scheme) {
                if !first {
                    f.write_str(" ")?;
                }
                write!(f, "{scheme}")?;
                first = false;
            }
        }
        if self.vee_e {
            if !first {
                f.write_str(" ")?;
            }
            f.write_str("+VE")?;
        }
        Ok(())
    }
}

/// How a step claims its stated formula. Step references are 1-based and
/// must point strictly backwards.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Justification {
    /// `Hypothesis(i)` states the i-th hypothesis (1-based).
    Hypothesis(usize),
    /// An axiom-scheme instance with its explicit substitution.
    Axiom(AxiomScheme, SchemeSubstitution),
    /// Modus ponens; `implication` states `X -> Y`, `antecedent` states `X`.
    ModusPonens {
        implication: usize,
        antecedent: usize,
    },
    /// The primitive rule ∨E: from `a -> q` and `b -> q` conclude
    /// `((a -> b) -> b) -> q`. The formulas are carried explicitly because
    /// matching the conclusion shape alone is ambiguous (e.g. when `b = q`).
    VeeElim {
        left: usize,
        right: usize,
        a: Formula,
        b: Formula,
        q: Formula,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProofStep {
    pub formula: Formula,
    pub justification: Justification,
}

/// A proof object: declared hypotheses, numbered steps, and the basis the
/// steps are to be checked against. The conclusion is the last step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Proof {
    pub hypotheses: Vec<Formula>,
    pub steps: Vec<ProofStep>,
    pub basis: Basis,
}

impl Proof {
    /// Replaces the declared basis, leaving the steps untouched. Checking
    /// against a different basis is how gating experiments are run.
    pub fn with_basis(mut self, basis: Basis) -> Proof {
        self.basis = basis;
        self
    }
}

/// A checked sequent `Γ ⊢ C` over a basis. Only [`check_proof`] builds one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Judgment {
    hypotheses: Vec<Formula>,
    conclusion: Formula,
    basis: Basis,
}

impl Judgment {
    pub fn hypotheses(&self) -> &[Formula] {
        &self.hypotheses
    }

    pub fn conclusion(&self) -> &Formula {
        &self.conclusion
    }

    pub fn basis(&self) -> &Basis {
        &self.basis
    }
}

impl fmt::Display for Judgment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, h) in self.hypotheses.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{h}")?;
        }
        if self.hypotheses.is_empty() {
            write!(f, "⊢ {}", self.conclusion)
        } else {
            write!(f, " ⊢ {}", self.conclusion)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CheckError {
    #[error("proof has no steps")]
    EmptyProof,
    #[error("step {step} references step {referenced}")]
    ForwardReference { step: usize, referenced: usize },
    #[error("step {step}: hypothesis index {index} out of range ({count} hypotheses declared)")]
    HypothesisOutOfRange {
        step: usize,
        index: usize,
        count: usize,
    },
    #[error("step {step}: stated formula {stated} differs from derived formula {derived}")]
    StatedFormulaMismatch {
        step: usize,
        stated: Formula,
        derived: Formula,
    },
    #[error("axiom scheme {scheme} not in basis at step {step}")]
    SchemeNotInBasis { step: usize, scheme: AxiomScheme },
    #[error("step {step}: {source}")]
    Substitution {
        step: usize,
        source: SubstitutionError,
    },
    #[error(
        "step {step}: modus ponens shape mismatch: step {implication} states {imp_formula}, \
         which is not an implication with antecedent {ant_formula}"
    )]
    ModusPonensShape {
        step: usize,
        implication: usize,
        imp_formula: Formula,
        ant_formula: Formula,
    },
    #[error("step {step}: ∨E used while disabled in the basis")]
    VeeEDisabled { step: usize },
    #[error("step {step}: ∨E premise shape mismatch: step {premise} states {found}, expected {expected}")]
    VeeEShape {
        step: usize,
        premise: usize,
        found: Formula,
        expected: Formula,
    },
}

/// Validates every step of `proof` and returns the resulting judgment.
pub fn check_proof(proof: &Proof) -> Result<Judgment, CheckError> {
    if proof.steps.is_empty() {
        return Err(CheckError::EmptyProof);
    }
    for (index0, step) in proof.steps.iter().enumerate() {
        let number = index0 + 1;
        match &step.justification {
            Justification::Hypothesis(index) => {
                let hypothesis = if *index == 0 {
                    None
                } else {
                    proof.hypotheses.get(index - 1)
                };
                let hypothesis = hypothesis.ok_or(CheckError::HypothesisOutOfRange {
                    step: number,
                    index: *index,
                    count: proof.hypotheses.len(),
                })?;
                if *hypothesis != step.formula {
                    return Err(mismatch(number, &step.formula, hypothesis.clone()));
                }
            }
            Justification::Axiom(scheme, subst) => {
                if !proof.basis.contains(*scheme) {
                    return Err(CheckError::SchemeNotInBasis {
                        step: number,
                        scheme: *scheme,
                    });
                }
                let derived =
                    instantiate(*scheme, subst).map_err(|source| CheckError::Substitution {
                        step: number,
                        source,
                    })?;
                if derived != step.formula {
                    return Err(mismatch(number, &step.formula, derived));
                }
            }
            Justification::ModusPonens {
                implication,
                antecedent,
            } => {
                let imp_step = resolve(proof, number, *implication)?;
                let ant_step = resolve(proof, number, *antecedent)?;
                let (x, y) = match imp_step.formula.as_imp() {
                    Some((x, y)) if *x == ant_step.formula => (x, y),
                    _ => {
                        return Err(CheckError::ModusPonensShape {
                            step: number,
                            implication: *implication,
                            imp_formula: imp_step.formula.clone(),
                            ant_formula: ant_step.formula.clone(),
                        })
                    }
                };
                let _ = x;
                if *y != step.formula {
                    return Err(mismatch(number, &step.formula, y.clone()));
                }
            }
            Justification::VeeElim {
                left,
                right,
                a,
                b,
                q,
            } => {
                if !proof.basis.vee_e() {
                    return Err(CheckError::VeeEDisabled { step: number });
                }
                let left_step = resolve(proof, number, *left)?;
                let right_step = resolve(proof, number, *right)?;
                if left_step.formula.as_imp() != Some((a, q)) {
                    return Err(CheckError::VeeEShape {
                        step: number,
                        premise: *left,
                        found: left_step.formula.clone(),
                        expected: imp(a.clone(), q.clone()),
                    });
                }
                if right_step.formula.as_imp() != Some((b, q)) {
                    return Err(CheckError::VeeEShape {
                        step: number,
                        premise: *right,
                        found: right_step.formula.clone(),
                        expected: imp(b.clone(), q.clone()),
                    });
                }
                let derived = imp(or_of(a.clone(), b.clone()), q.clone());
                if derived != step.formula {
                    return Err(mismatch(number, &step.formula, derived));
                }
            }
        }
    }
    Ok(Judgment {
        hypotheses: proof.hypotheses.clone(),
        conclusion: proof.steps.last().expect("nonempty").formula.clone(),
        basis: proof.basis.clone(),
    })
}

/// The stated formula of the last step. Does not validate the proof.
pub fn conclusion_of(proof: &Proof) -> Result<&Formula, CheckError> {
    proof
        .steps
        .last()
        .map(|s| &s.formula)
        .ok_or(CheckError::EmptyProof)
}

fn resolve(proof: &Proof, current: usize, reference: usize) -> Result<&ProofStep, CheckError> {
    if reference == 0 || reference >= current {
        return Err(CheckError::ForwardReference {
            step: current,
            referenced: reference,
        });
    }
    Ok(&proof.steps[reference - 1])
}

fn mismatch(step: usize, stated: &Formula, derived: Formula) -> CheckError {
    CheckError::StatedFormulaMismatch {
        step,
        stated: stated.clone(),
        derived,
    }
}
