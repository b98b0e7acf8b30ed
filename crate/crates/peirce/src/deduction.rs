//! The deduction theorem as a total proof-to-proof transformation, plus the
//! derived-rule combinators built on it: weakening, proof concatenation via
//! modus ponens, hypothetical syllogism, and the K/S identity derivation.
//!
//! Discharging `a` from a deduction of `Γ ⊢ c` rewrites every step into a
//! short block concluding `a -> step`, by the standard induction:
//!
//! * a step stating `a` itself becomes an inline identity derivation;
//! * an axiom or surviving-hypothesis step `x` becomes `x`, `K`-instance
//!   `x -> (a -> x)`, modus ponens;
//! * a modus ponens step combining `x -> y` and `x` becomes an `S`-instance
//!   over the already-translated premises and two modus ponens steps.
//!
//! None of this requires the Peirce scheme: the output basis is the input
//! basis plus `{K, S}`.

use thiserror::Error;

use crate::builder::ProofBuilder;
use crate::formula::{imp, Formula};
use crate::kernel::{check_proof, conclusion_of, Basis, CheckError, Justification, Proof};
use crate::scheme::{AxiomScheme, SchemeSubstitution};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DeductionError {
    #[error("input proof fails kernel check: {0}")]
    InvalidInput(#[from] CheckError),
    #[error("cannot discharge across primitive ∨E")]
    DischargeAcrossVeeE,
    #[error("conclusion {found} is not an implication with antecedent {expected_antecedent}")]
    ConclusionShape {
        found: Formula,
        expected_antecedent: Formula,
    },
}

/// The 5-step derivation of `⊢ a -> a` over `{K, S}`.
pub fn identity_proof(a: &Formula) -> Proof {
    let mut b = ProofBuilder::new(Basis::ks(), vec![]);
    emit_identity(&mut b, a);
    b.finish()
}

/// Appends the identity block for `a`; returns the index of its conclusion.
fn emit_identity(b: &mut ProofBuilder, a: &Formula) -> usize {
    let aa = imp(a.clone(), a.clone());
    let s = b.axiom(
        AxiomScheme::S,
        SchemeSubstitution::abc(a.clone(), aa.clone(), a.clone()),
    );
    let k1 = b.axiom(AxiomScheme::K, SchemeSubstitution::ab(a.clone(), aa));
    let m1 = b.mp(s, k1);
    let k2 = b.axiom(AxiomScheme::K, SchemeSubstitution::ab(a.clone(), a.clone()));
    b.mp(m1, k2)
}

/// Discharges `a` from a kernel-valid proof of `Γ ⊢ c`, producing a proof of
/// `Γ \ {a} ⊢ a -> c`. All occurrences of `a` leave Γ; any step stating `a`
/// syntactically is translated by the identity case even if `a` also occurs
/// in Γ. Proofs containing a ∨E step are rejected.
pub fn discharge_hypothesis(proof: &Proof, a: &Formula) -> Result<Proof, DeductionError> {
    check_proof(proof)?;
    if proof
        .steps
        .iter()
        .any(|s| matches!(s.justification, Justification::VeeElim { .. }))
    {
        return Err(DeductionError::DischargeAcrossVeeE);
    }

    let kept: Vec<Formula> = proof
        .hypotheses
        .iter()
        .filter(|h| *h != a)
        .cloned()
        .collect();
    // Old 1-based hypothesis index -> new 1-based index, for survivors.
    let mut hyp_map = Vec::with_capacity(proof.hypotheses.len());
    let mut next = 0usize;
    for h in &proof.hypotheses {
        if h == a {
            hyp_map.push(None);
        } else {
            next += 1;
            hyp_map.push(Some(next));
        }
    }

    let mut out = ProofBuilder::new(proof.basis.union(&Basis::ks()), kept);
    // Index of each translated step's block conclusion (stating `a -> step`).
    let mut translated: Vec<usize> = Vec::with_capacity(proof.steps.len());
    for step in &proof.steps {
        let end = if step.formula == *a {
            emit_identity(&mut out, a)
        } else {
            match &step.justification {
                Justification::Hypothesis(i) => {
                    let new_index = hyp_map[i - 1].expect("stated formula differs from a");
                    let base = out.hyp(new_index);
                    lift_over_k(&mut out, base, &step.formula, a)
                }
                Justification::Axiom(scheme, subst) => {
                    let base = out.axiom(*scheme, subst.clone());
                    lift_over_k(&mut out, base, &step.formula, a)
                }
                Justification::ModusPonens {
                    implication,
                    antecedent,
                } => {
                    let (x, y) = proof.steps[implication - 1]
                        .formula
                        .as_imp()
                        .expect("kernel-valid modus ponens");
                    let s = out.axiom(
                        AxiomScheme::S,
                        SchemeSubstitution::abc(a.clone(), x.clone(), y.clone()),
                    );
                    let m1 = out.mp(s, translated[implication - 1]);
                    out.mp(m1, translated[antecedent - 1])
                }
                Justification::VeeElim { .. } => unreachable!("rejected above"),
            }
        };
        translated.push(end);
    }
    Ok(out.finish())
}

/// From a step stating `x`, derives `a -> x` via a K instance.
fn lift_over_k(out: &mut ProofBuilder, base: usize, x: &Formula, a: &Formula) -> usize {
    let k = out.axiom(AxiomScheme::K, SchemeSubstitution::ab(x.clone(), a.clone()));
    out.mp(k, base)
}

/// Appends the 7-step composition theorem
/// `⊢ (x -> y) -> ((z -> x) -> (z -> y))`.
pub(crate) fn emit_composition(
    b: &mut ProofBuilder,
    x: &Formula,
    y: &Formula,
    z: &Formula,
) -> usize {
    let xy = imp(x.clone(), y.clone());
    let t = b.axiom(
        AxiomScheme::S,
        SchemeSubstitution::abc(z.clone(), x.clone(), y.clone()),
    ); // (z -> (x -> y)) -> ((z -> x) -> (z -> y))
    let t_formula = b.step_formula(t).clone();
    let k1 = b.axiom(
        AxiomScheme::K,
        SchemeSubstitution::ab(t_formula.clone(), xy.clone()),
    );
    let m1 = b.mp(k1, t); // (x -> y) -> T
    let (lift, target) = t_formula.as_imp().expect("T is an implication");
    let s2 = b.axiom(
        AxiomScheme::S,
        SchemeSubstitution::abc(xy.clone(), lift.clone(), target.clone()),
    );
    let m2 = b.mp(s2, m1);
    let k2 = b.axiom(AxiomScheme::K, SchemeSubstitution::ab(xy, z.clone()));
    b.mp(m2, k2) // (x -> y) -> ((z -> x) -> (z -> y))
}

/// From an earlier step stating `x -> (y -> z)`, appends steps deriving the
/// exchanged form `y -> (x -> z)`.
pub(crate) fn emit_exchange(b: &mut ProofBuilder, premise: usize) -> usize {
    let formula = b.step_formula(premise).clone();
    let (x, rest) = formula.as_imp().expect("premise is an implication");
    let (y, z) = rest.as_imp().expect("premise consequent is an implication");
    let (x, y, z) = (x.clone(), y.clone(), z.clone());
    let s1 = b.axiom(
        AxiomScheme::S,
        SchemeSubstitution::abc(x.clone(), y.clone(), z.clone()),
    );
    let m1 = b.mp(s1, premise); // (x -> y) -> (x -> z)
    let k1 = b.axiom(AxiomScheme::K, SchemeSubstitution::ab(y.clone(), x.clone()));
    let comp = emit_composition(
        b,
        &imp(x.clone(), y.clone()),
        &imp(x.clone(), z.clone()),
        &y,
    );
    let m2 = b.mp(comp, m1); // (y -> (x -> y)) -> (y -> (x -> z))
    b.mp(m2, k1) // y -> (x -> z)
}

/// Appends the closed form of hypothetical syllogism,
/// `⊢ (x -> y) -> ((y -> z) -> (x -> z))`, as a 19-step direct script
/// (composition followed by an exchange). Used by the theorem
/// constructions to apply HS without growing a discharge stack.
pub(crate) fn emit_hs_theorem(
    b: &mut ProofBuilder,
    x: &Formula,
    y: &Formula,
    z: &Formula,
) -> usize {
    let premise = emit_composition(b, y, z, x); // (y -> z) -> ((x -> y) -> (x -> z))
    emit_exchange(b, premise)
}

/// Appends `extra` to the hypothesis list; the steps are untouched.
pub fn weaken(proof: &Proof, extra: &[Formula]) -> Result<Proof, DeductionError> {
    check_proof(proof)?;
    let mut widened = proof.clone();
    widened.hypotheses.extend_from_slice(extra);
    Ok(widened)
}

/// Concatenates a proof of `X -> Y` with a proof of `X` and closes with one
/// modus ponens, yielding `Y` over the merged hypotheses (left list first,
/// then unseen right hypotheses) and the union basis.
pub fn concat_mp(p_imp: &Proof, p_ant: &Proof) -> Result<Proof, DeductionError> {
    check_proof(p_imp)?;
    check_proof(p_ant)?;
    let imp_conclusion = conclusion_of(p_imp)?;
    let ant_conclusion = conclusion_of(p_ant)?;
    match imp_conclusion.as_imp() {
        Some((x, _)) if x == ant_conclusion => {}
        _ => {
            return Err(DeductionError::ConclusionShape {
                found: imp_conclusion.clone(),
                expected_antecedent: ant_conclusion.clone(),
            })
        }
    }
    let mut merged = p_imp.hypotheses.clone();
    for h in &p_ant.hypotheses {
        if !merged.contains(h) {
            merged.push(h.clone());
        }
    }
    let mut out = ProofBuilder::new(p_imp.basis.union(&p_ant.basis), merged);
    let left = out.embed(p_imp);
    let right = out.embed(p_ant);
    out.mp(left, right);
    Ok(out.finish())
}

/// The derived rule `a -> b, b -> c ⊢ a -> c`, built by deducing `c` from
/// `{a -> b, b -> c, a}` with two modus ponens steps and discharging `a`.
pub fn hypothetical_syllogism(a: &Formula, b: &Formula, c: &Formula) -> Proof {
    let ab = imp(a.clone(), b.clone());
    let bc = imp(b.clone(), c.clone());
    let mut inner = ProofBuilder::new(Basis::ks(), vec![ab.clone(), bc.clone(), a.clone()]);
    let h_a = inner.hyp(3);
    let h_ab = inner.hyp(1);
    let step_b = inner.mp(h_ab, h_a);
    let h_bc = inner.hyp(2);
    inner.mp(h_bc, step_b);
    let proof = discharge_hypothesis(&inner.finish(), a)
        .expect("scripted deduction is kernel-valid and ∨E-free");
    // Discharging removes *all* occurrences of `a`; when `a` coincides with
    // `b -> c` that hypothesis vanishes too, so restore it to keep the
    // contracted judgment `[a -> b, b -> c] ⊢ a -> c`.
    if *a == bc {
        weaken(&proof, std::slice::from_ref(&bc)).expect("weakening a valid proof")
    } else {
        proof
    }
}
