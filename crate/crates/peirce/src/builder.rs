//! An append-only constructor for proof objects.
//!
//! The builder computes each step's stated formula from its justification,
//! so scripted derivations are correct by construction. It is *not* part of
//! the trusted surface: everything it emits still goes through
//! [`crate::kernel::check_proof`] in tests and at the call sites that matter.
//!
//! Misuse (dangling references, malformed modus ponens) is a library bug,
//! not an input error, so the builder panics rather than returning errors.

use crate::formula::{imp, or_of, Formula};
use crate::kernel::{Basis, Justification, Proof, ProofStep};
use crate::scheme::{instantiate, AxiomScheme, SchemeSubstitution};

pub struct ProofBuilder {
    hypotheses: Vec<Formula>,
    steps: Vec<ProofStep>,
    basis: Basis,
}

impl ProofBuilder {
    pub fn new(basis: Basis, hypotheses: Vec<Formula>) -> Self {
        ProofBuilder {
            hypotheses,
            steps: Vec::new(),
            basis,
        }
    }

    /// 1-based index of the most recent step.
    pub fn last(&self) -> usize {
        self.steps.len()
    }

    pub fn step_formula(&self, index: usize) -> &Formula {
        &self.steps[index - 1].formula
    }

    fn push(&mut self, formula: Formula, justification: Justification) -> usize {
        self.steps.push(ProofStep {
            formula,
            justification,
        });
        self.steps.len()
    }

    /// References the hypothesis at `index` (1-based).
    pub fn hyp(&mut self, index: usize) -> usize {
        let formula = self.hypotheses[index - 1].clone();
        self.push(formula, Justification::Hypothesis(index))
    }

    /// References the first hypothesis structurally equal to `formula`.
    pub fn hyp_formula(&mut self, formula: &Formula) -> usize {
        let index = self
            .hypotheses
            .iter()
            .position(|h| h == formula)
            .expect("formula is among the declared hypotheses")
            + 1;
        self.push(formula.clone(), Justification::Hypothesis(index))
    }

    pub fn axiom(&mut self, scheme: AxiomScheme, subst: SchemeSubstitution) -> usize {
        let formula = instantiate(scheme, &subst).expect("substitution fits the scheme");
        self.push(formula, Justification::Axiom(scheme, subst))
    }

    /// Applies modus ponens to two earlier steps.
    pub fn mp(&mut self, implication: usize, antecedent: usize) -> usize {
        let (x, y) = self.steps[implication - 1]
            .formula
            .as_imp()
            .expect("implication step states an implication");
        assert_eq!(
            *x,
            self.steps[antecedent - 1].formula,
            "antecedent step states the implication's antecedent"
        );
        let conclusion = y.clone();
        self.push(
            conclusion,
            Justification::ModusPonens {
                implication,
                antecedent,
            },
        )
    }

    /// Applies the primitive rule ∨E to two earlier steps stating
    /// `a -> q` and `b -> q`.
    pub fn vee_e(
        &mut self,
        left: usize,
        right: usize,
        a: Formula,
        b: Formula,
        q: Formula,
    ) -> usize {
        assert_eq!(
            self.steps[left - 1].formula,
            imp(a.clone(), q.clone()),
            "left premise states a -> q"
        );
        assert_eq!(
            self.steps[right - 1].formula,
            imp(b.clone(), q.clone()),
            "right premise states b -> q"
        );
        let conclusion = imp(or_of(a.clone(), b.clone()), q.clone());
        self.push(
            conclusion,
            Justification::VeeElim {
                left,
                right,
                a,
                b,
                q,
            },
        )
    }

    /// Appends all steps of `proof`, remapping its hypothesis references to
    /// this builder's hypothesis list (each of the embedded proof's
    /// hypotheses must occur here) and shifting step references. Returns the
    /// index of the embedded conclusion.
    pub fn embed(&mut self, proof: &Proof) -> usize {
        let offset = self.steps.len();
        let hyp_map: Vec<usize> = proof
            .hypotheses
            .iter()
            .map(|h| {
                self.hypotheses
                    .iter()
                    .position(|own| own == h)
                    .expect("embedded hypothesis occurs in the builder's hypothesis list")
                    + 1
            })
            .collect();
        for step in &proof.steps {
            let justification = match &step.justification {
                Justification::Hypothesis(i) => Justification::Hypothesis(hyp_map[i - 1]),
                Justification::Axiom(scheme, subst) => Justification::Axiom(*scheme, subst.clone()),
                Justification::ModusPonens {
                    implication,
                    antecedent,
                } => Justification::ModusPonens {
                    implication: implication + offset,
                    antecedent: antecedent + offset,
                },
                Justification::VeeElim {
                    left,
                    right,
                    a,
                    b,
                    q,
                } => Justification::VeeElim {
                    left: left + offset,
                    right: right + offset,
                    a: a.clone(),
                    b: b.clone(),
                    q: q.clone(),
                },
            };
            self.steps.push(ProofStep {
                formula: step.formula.clone(),
                justification,
            });
        }
        self.steps.len()
    }

    pub fn finish(self) -> Proof {
        Proof {
            hypotheses: self.hypotheses,
            steps: self.steps,
            basis: self.basis,
        }
    }
}
