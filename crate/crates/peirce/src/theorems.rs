//! Executable constructions of the classical results about the Peirce
//! scheme: both directions of its equivalence with `P'`, ∨-introduction and
//! ∨-elimination, and the recovery of Peirce from the primitive rule ∨E.
//! Each constructor returns a checkable proof object over exactly the basis
//! the result is stated for.

use std::collections::BTreeSet;
use std::fmt;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use thiserror::Error;

use crate::builder::ProofBuilder;
use crate::deduction::{
    discharge_hypothesis, emit_hs_theorem, hypothetical_syllogism, identity_proof, DeductionError,
};
use crate::formula::{imp, or_of, var, Formula};
use crate::kernel::{check_proof, Basis, CheckError, Judgment, Justification, Proof};
use crate::scheme::{instantiate, AxiomScheme, SchemeSubstitution};

/// `⊢ (a -> q) -> (((a -> b) -> q) -> q)` over `{P, K, S}`.
///
/// Follows the forward direction of the equivalence: hypothetical syllogism
/// turns `a -> q` into `(q -> b) -> (a -> b)`, a second syllogism against
/// the hypothesis `(a -> b) -> q` yields `(q -> b) -> q`, a Peirce instance
/// collapses that to `q`, and two discharges close the theorem. The HS
/// applications go through the closed syllogism script so only the final
/// discharges stack.
pub fn prove_peirce_implies_prime(a: &Formula, b: &Formula, q: &Formula) -> Proof {
    let aq = imp(a.clone(), q.clone());
    let ab = imp(a.clone(), b.clone());
    let qb = imp(q.clone(), b.clone());
    let abq = imp(ab.clone(), q.clone());

    let mut inner = ProofBuilder::new(Basis::pks(), vec![aq.clone(), abq.clone()]);
    // HS on the hypothesis a -> q gives (q -> b) -> (a -> b).
    let hs1 = emit_hs_theorem(&mut inner, a, q, b);
    let h1 = inner.hyp(1);
    let m1 = inner.mp(hs1, h1);
    // HS against the hypothesis (a -> b) -> q gives (q -> b) -> q.
    let hs2 = emit_hs_theorem(&mut inner, &qb, &ab, q);
    let m2 = inner.mp(hs2, m1);
    let h2 = inner.hyp(2);
    let m3 = inner.mp(m2, h2); // (q -> b) -> q
    let peirce = inner.axiom(AxiomScheme::P, SchemeSubstitution::ab(q.clone(), b.clone()));
    inner.mp(peirce, m3); // q

    let d1 = discharge_hypothesis(&inner.finish(), &abq).expect("∨E-free by construction");
    discharge_hypothesis(&d1, &aq).expect("∨E-free by construction")
}

/// `⊢ ((a -> b) -> a) -> a` over `{P', K, S}`: instantiate `P'` with
/// `Q := a`, derive `a -> a`, and one modus ponens lands on the Peirce
/// instance.
pub fn prove_prime_implies_peirce(a: &Formula, b: &Formula) -> Proof {
    let mut out = ProofBuilder::new(Basis::ks().with_scheme(AxiomScheme::PPrime), vec![]);
    let prime = out.axiom(
        AxiomScheme::PPrime,
        SchemeSubstitution::abq(a.clone(), b.clone(), a.clone()),
    );
    let id = out.embed(&identity_proof(a));
    out.mp(prime, id);
    out.finish()
}

/// ∨-introduction, first half: `[a] ⊢ (a -> b) -> b` over `{K, S}`.
/// Deduce `b` from `{a, a -> b}` and discharge `a -> b`.
pub fn prove_or_intro_left(a: &Formula, b: &Formula) -> Proof {
    let ab = imp(a.clone(), b.clone());
    let mut inner = ProofBuilder::new(Basis::ks(), vec![a.clone(), ab.clone()]);
    let h_ab = inner.hyp(2);
    let h_a = inner.hyp(1);
    inner.mp(h_ab, h_a);
    discharge_hypothesis(&inner.finish(), &ab).expect("∨E-free by construction")
}

/// ∨-introduction, second half: `[b] ⊢ (a -> b) -> b` over `{K, S}` in
/// exactly three steps; it amounts to one K instance.
pub fn prove_or_intro_right(a: &Formula, b: &Formula) -> Proof {
    let ab = imp(a.clone(), b.clone());
    let mut out = ProofBuilder::new(Basis::ks(), vec![b.clone()]);
    let k = out.axiom(AxiomScheme::K, SchemeSubstitution::ab(b.clone(), ab));
    let h = out.hyp(1);
    out.mp(k, h);
    out.finish()
}

/// ∨-elimination as a judgment:
/// `[a -> q, b -> q] ⊢ ((a -> b) -> b) -> q` over `{P, K, S}`.
///
/// The `P'` instance supplied by [`prove_peirce_implies_prime`] gives
/// `((a -> b) -> q) -> q` under `a -> q`; hypothetical syllogism turns
/// `(a -> b) -> b` and `b -> q` into `(a -> b) -> q`; modus ponens closes
/// in on `q`, and discharging `(a -> b) -> b` produces the rule shape.
pub fn prove_or_elim(a: &Formula, b: &Formula, q: &Formula) -> Proof {
    let aq = imp(a.clone(), q.clone());
    let bq = imp(b.clone(), q.clone());
    let ab = imp(a.clone(), b.clone());
    let joined = or_of(a.clone(), b.clone());

    let t1 = prove_peirce_implies_prime(a, b, q);
    let hs = hypothetical_syllogism(&ab, b, q); // [(a->b)->b, b->q] ⊢ (a->b)->q

    let mut inner = ProofBuilder::new(Basis::pks(), vec![aq.clone(), bq.clone(), joined.clone()]);
    let e1 = inner.embed(&t1);
    let h_aq = inner.hyp(1);
    let m1 = inner.mp(e1, h_aq); // ((a -> b) -> q) -> q
    let e2 = inner.embed(&hs); // (a -> b) -> q
    inner.mp(m1, e2); // q

    discharge_hypothesis(&inner.finish(), &joined).expect("∨E-free by construction")
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TheoremError {
    #[error(transparent)]
    Kernel(#[from] CheckError),
    #[error(transparent)]
    Deduction(#[from] DeductionError),
    #[error("expected a proof with exactly one hypothesis, found {count}")]
    NotSingleHypothesis { count: usize },
    #[error("conclusions differ: {left} and {right}")]
    ConclusionMismatch { left: Formula, right: Formula },
}

/// Lifts two single-hypothesis deductions `[a] ⊢ q` and `[b] ⊢ q` to
/// `[(a -> b) -> b] ⊢ q`: discharge each input, feed the closed
/// implications into the ∨-elimination theorem, and finish with modus
/// ponens against the disjunction hypothesis.
pub fn lift_or_elim(pa: &Proof, pb: &Proof) -> Result<Proof, TheoremError> {
    let ja = check_proof(pa)?;
    let jb = check_proof(pb)?;
    if ja.hypotheses().len() != 1 {
        return Err(TheoremError::NotSingleHypothesis {
            count: ja.hypotheses().len(),
        });
    }
    if jb.hypotheses().len() != 1 {
        return Err(TheoremError::NotSingleHypothesis {
            count: jb.hypotheses().len(),
        });
    }
    if ja.conclusion() != jb.conclusion() {
        return Err(TheoremError::ConclusionMismatch {
            left: ja.conclusion().clone(),
            right: jb.conclusion().clone(),
        });
    }
    let a = ja.hypotheses()[0].clone();
    let b = jb.hypotheses()[0].clone();
    let q = ja.conclusion().clone();
    let aq = imp(a.clone(), q.clone());
    let bq = imp(b.clone(), q.clone());
    let joined = or_of(a.clone(), b.clone());

    let da = discharge_hypothesis(pa, &a)?; // ⊢ a -> q
    let db = discharge_hypothesis(pb, &b)?; // ⊢ b -> q
    let elim = prove_or_elim(&a, &b, &q);
    let elim = discharge_hypothesis(&elim, &bq).expect("∨E-free by construction");
    let elim = discharge_hypothesis(&elim, &aq).expect("∨E-free by construction");
    // ⊢ (a -> q) -> ((b -> q) -> (((a -> b) -> b) -> q))

    let basis = pa.basis.union(&pb.basis).union(&Basis::pks());
    let mut out = ProofBuilder::new(basis, vec![joined]);
    let e = out.embed(&elim);
    let ea = out.embed(&da);
    let m1 = out.mp(e, ea);
    let eb = out.embed(&db);
    let m2 = out.mp(m1, eb);
    let h = out.hyp(1);
    out.mp(m2, h);
    Ok(out.finish())
}

/// `⊢ ((a -> b) -> a) -> a` over `{K, S}` with ∨E enabled and no Peirce
/// axiom.
///
/// The single ∨E step is applied to closed premises by instantiating its
/// `Q` as `(b -> a) -> a`: `a -> Q` is a K instance and `b -> Q` is a short
/// scripted deduction, so `((a -> b) -> b) -> Q` is a closed lemma. The
/// hypothesis `(a -> b) -> a` is handled entirely by ∨E-free discharges,
/// `H -> (b -> a)` and `H -> (A ∨ B)`, which an S instance combines with
/// the lemma into `H -> a`.
pub fn prove_vee_e_implies_peirce(a: &Formula, b: &Formula) -> Proof {
    let ab = imp(a.clone(), b.clone());
    let hypothesis = imp(ab.clone(), a.clone()); // H = (a -> b) -> a
    let ba = imp(b.clone(), a.clone());
    let guard = imp(ba.clone(), a.clone()); // Q = (b -> a) -> a
    let joined = or_of(a.clone(), b.clone());

    // ⊢ b -> ((b -> a) -> a), by discharging {b, b -> a} ⊢ a twice.
    let mut scripted = ProofBuilder::new(Basis::ks(), vec![b.clone(), ba.clone()]);
    let h_ba = scripted.hyp(2);
    let h_b = scripted.hyp(1);
    scripted.mp(h_ba, h_b);
    let right_premise = discharge_hypothesis(&scripted.finish(), &ba)
        .and_then(|p| discharge_hypothesis(&p, b))
        .expect("∨E-free by construction");

    // ⊢ H -> (b -> a): under {H, b}, a K instance gives a -> b from b,
    // then H applies.
    let mut scripted = ProofBuilder::new(Basis::ks(), vec![hypothesis.clone(), b.clone()]);
    let k = scripted.axiom(AxiomScheme::K, SchemeSubstitution::ab(b.clone(), a.clone()));
    let h_b = scripted.hyp(2);
    let m1 = scripted.mp(k, h_b); // a -> b
    let h_h = scripted.hyp(1);
    scripted.mp(h_h, m1); // a
    let h_implies_ba = discharge_hypothesis(&scripted.finish(), b)
        .and_then(|p| discharge_hypothesis(&p, &hypothesis))
        .expect("∨E-free by construction");

    // ⊢ H -> ((a -> b) -> b), i.e. H -> (A ∨ B).
    let mut scripted = ProofBuilder::new(Basis::ks(), vec![hypothesis.clone(), ab.clone()]);
    let h_ab = scripted.hyp(2);
    let h_h = scripted.hyp(1);
    let m1 = scripted.mp(h_h, h_ab); // a
    scripted.mp(h_ab, m1); // b
    let h_implies_or = discharge_hypothesis(&scripted.finish(), &ab)
        .and_then(|p| discharge_hypothesis(&p, &hypothesis))
        .expect("∨E-free by construction");

    let mut out = ProofBuilder::new(Basis::ks().with_vee_e(true), vec![]);
    let left = out.axiom(
        AxiomScheme::K,
        SchemeSubstitution::ab(a.clone(), ba.clone()),
    ); // a -> Q
    let right = out.embed(&right_premise); // b -> Q
    let elim = out.vee_e(left, right, a.clone(), b.clone(), guard.clone()); // A∨B -> Q
                                                                            // ⊢ (H -> A∨B) -> ((A∨B -> Q) -> (H -> Q)), the closed syllogism form.
    let e_hs = emit_hs_theorem(&mut out, &hypothesis, &joined, &guard);
    let e_or = out.embed(&h_implies_or);
    let m1 = out.mp(e_hs, e_or); // (A∨B -> Q) -> (H -> Q)
    let m2 = out.mp(m1, elim); // H -> Q = H -> ((b -> a) -> a)
    let s = out.axiom(
        AxiomScheme::S,
        SchemeSubstitution::abc(hypothesis.clone(), ba.clone(), a.clone()),
    ); // (H -> Q) -> ((H -> (b -> a)) -> (H -> a))
    let m3 = out.mp(s, m2);
    let e_ba = out.embed(&h_implies_ba);
    out.mp(m3, e_ba); // H -> a
    out.finish()
}

/// One row of the [`verify_constructions`] report.
#[derive(Debug, Clone)]
pub struct TheoremRow {
    pub name: &'static str,
    pub label: &'static str,
    pub judgment: String,
    pub schemes_used: BTreeSet<AxiomScheme>,
    pub uses_vee_e: bool,
    pub random_trials: usize,
    pub passed: bool,
    pub failure: Option<String>,
}

impl TheoremRow {
    pub fn peirce_free(&self) -> bool {
        !self.schemes_used.contains(&AxiomScheme::P)
    }
}

#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub rows: Vec<TheoremRow>,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.rows.iter().all(|r| r.passed)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            let verdict = if row.passed { "ok" } else { "FAILED" };
            let axioms: Vec<String> = row.schemes_used.iter().map(|s| s.to_string()).collect();
            write!(
                f,
                "{:<14} {:<28} {:<6} {}  axioms used: {{{}}}",
                row.name,
                row.label,
                verdict,
                row.judgment,
                axioms.join(", "),
            )?;
            if row.uses_vee_e {
                write!(f, " +VE")?;
            }
            if row.peirce_free() {
                write!(f, "; Peirce-free")?;
            }
            if let Some(failure) = &row.failure {
                write!(f, "  [{failure}]")?;
            }
            writeln!(f, "  ({} random trials)", row.random_trials)?;
        }
        Ok(())
    }
}

fn schemes_used(proof: &Proof) -> BTreeSet<AxiomScheme> {
    proof
        .steps
        .iter()
        .filter_map(|s| match &s.justification {
            Justification::Axiom(scheme, _) => Some(*scheme),
            _ => None,
        })
        .collect()
}

fn vee_e_steps(proof: &Proof) -> usize {
    proof
        .steps
        .iter()
        .filter(|s| matches!(s.justification, Justification::VeeElim { .. }))
        .count()
}

fn random_formula(rng: &mut StdRng, max_depth: usize) -> Formula {
    let names = ["p", "q", "r"];
    if max_depth == 0 || rng.gen_bool(0.4) {
        var(names[rng.gen_range(0..names.len())])
    } else {
        imp(
            random_formula(rng, max_depth - 1),
            random_formula(rng, max_depth - 1),
        )
    }
}

/// The judgment a constructor is contracted to produce.
struct Contract {
    hypotheses: Vec<Formula>,
    conclusion: Formula,
    basis: Basis,
}

fn satisfies(judgment: &Judgment, contract: &Contract) -> Result<(), String> {
    if judgment.hypotheses() != contract.hypotheses.as_slice() {
        return Err(format!(
            "hypotheses differ: got {}, expected {}",
            judgment,
            contract
                .hypotheses
                .iter()
                .map(|h| h.to_string())
                .collect::<Vec<_>>()
                .join(", ")
        ));
    }
    if judgment.conclusion() != &contract.conclusion {
        return Err(format!(
            "conclusion differs: got {}, expected {}",
            judgment.conclusion(),
            contract.conclusion
        ));
    }
    if judgment.basis() != &contract.basis {
        return Err(format!(
            "basis differs: got {}, expected {}",
            judgment.basis(),
            contract.basis
        ));
    }
    Ok(())
}

const RANDOM_TRIALS: usize = 25;

/// Runs every construction on a fixed instance and on randomized instances,
/// kernel-checks each output against its contracted judgment and basis, and
/// reports axiom usage per theorem.
pub fn verify_constructions() -> VerificationReport {
    let mut rng = StdRng::seed_from_u64(0x5EED_CAFE);
    let mut rows = Vec::new();
    let p = var("p");
    let q = var("q");
    let r = var("r");

    {
        // Constructor, contract, and extra conditions, per theorem.
        type Entry = (
            &'static str,
            &'static str,
            Box<dyn Fn(&Formula, &Formula, &Formula) -> (Proof, Contract)>,
            Box<dyn Fn(&Proof) -> Result<(), String>>,
        );
        let entries: Vec<Entry> = vec![
            (
                "identity",
                "A -> A (no Peirce)",
                Box::new(|a, _, _| {
                    (
                        identity_proof(a),
                        Contract {
                            hypotheses: vec![],
                            conclusion: imp(a.clone(), a.clone()),
                            basis: Basis::ks(),
                        },
                    )
                }),
                Box::new(|_| Ok(())),
            ),
            (
                "hs",
                "hypothetical syllogism",
                Box::new(|a, b, c| {
                    (
                        hypothetical_syllogism(a, b, c),
                        Contract {
                            hypotheses: vec![imp(a.clone(), b.clone()), imp(b.clone(), c.clone())],
                            conclusion: imp(a.clone(), c.clone()),
                            basis: Basis::ks(),
                        },
                    )
                }),
                Box::new(|_| Ok(())),
            ),
            (
                "t1-forward",
                "P proves every P' instance",
                Box::new(|a, b, q| {
                    (
                        prove_peirce_implies_prime(a, b, q),
                        Contract {
                            hypotheses: vec![],
                            conclusion: instantiate(
                                AxiomScheme::PPrime,
                                &SchemeSubstitution::abq(a.clone(), b.clone(), q.clone()),
                            )
                            .expect("full substitution"),
                            basis: Basis::pks(),
                        },
                    )
                }),
                Box::new(|proof| {
                    if !schemes_used(proof).contains(&AxiomScheme::P) {
                        return Err("expected a Peirce axiom step".to_string());
                    }
                    Ok(())
                }),
            ),
            (
                "t1-reverse",
                "P' proves every P instance",
                Box::new(|a, b, _| {
                    (
                        prove_prime_implies_peirce(a, b),
                        Contract {
                            hypotheses: vec![],
                            conclusion: instantiate(
                                AxiomScheme::P,
                                &SchemeSubstitution::ab(a.clone(), b.clone()),
                            )
                            .expect("full substitution"),
                            basis: Basis::ks().with_scheme(AxiomScheme::PPrime),
                        },
                    )
                }),
                Box::new(|proof| {
                    let used = schemes_used(proof);
                    if used.contains(&AxiomScheme::P) {
                        return Err("must not use the Peirce axiom".to_string());
                    }
                    if !used.contains(&AxiomScheme::PPrime) {
                        return Err("expected a P' axiom step".to_string());
                    }
                    if check_proof(&proof.clone().with_basis(Basis::ks())).is_ok() {
                        return Err("should be rejected without P' in the basis".to_string());
                    }
                    Ok(())
                }),
            ),
            (
                "or-intro-left",
                "∨-introduction",
                Box::new(|a, b, _| {
                    (
                        prove_or_intro_left(a, b),
                        Contract {
                            hypotheses: vec![a.clone()],
                            conclusion: or_of(a.clone(), b.clone()),
                            basis: Basis::ks(),
                        },
                    )
                }),
                Box::new(|_| Ok(())),
            ),
            (
                "or-intro-right",
                "∨-introduction",
                Box::new(|a, b, _| {
                    (
                        prove_or_intro_right(a, b),
                        Contract {
                            hypotheses: vec![b.clone()],
                            conclusion: or_of(a.clone(), b.clone()),
                            basis: Basis::ks(),
                        },
                    )
                }),
                Box::new(|proof| {
                    if proof.steps.len() != 3 {
                        return Err(format!("expected 3 steps, found {}", proof.steps.len()));
                    }
                    let used = schemes_used(proof);
                    if used != BTreeSet::from([AxiomScheme::K]) {
                        return Err("expected K to be the only axiom used".to_string());
                    }
                    Ok(())
                }),
            ),
            (
                "or-elim",
                "∨-elimination",
                Box::new(|a, b, q| {
                    (
                        prove_or_elim(a, b, q),
                        Contract {
                            hypotheses: vec![imp(a.clone(), q.clone()), imp(b.clone(), q.clone())],
                            conclusion: imp(or_of(a.clone(), b.clone()), q.clone()),
                            basis: Basis::pks(),
                        },
                    )
                }),
                Box::new(|proof| {
                    if !schemes_used(proof).contains(&AxiomScheme::P) {
                        return Err("expected a Peirce axiom step".to_string());
                    }
                    if check_proof(&proof.clone().with_basis(Basis::ks())).is_ok() {
                        return Err("should be rejected under {K, S}".to_string());
                    }
                    Ok(())
                }),
            ),
            (
                "lift-or-elim",
                "∨-elimination (rule form)",
                Box::new(|a, b, _| {
                    let pa = prove_or_intro_left(a, b);
                    let pb = prove_or_intro_right(a, b);
                    let proof = lift_or_elim(&pa, &pb).expect("inputs satisfy the contract");
                    (
                        proof,
                        Contract {
                            hypotheses: vec![or_of(a.clone(), b.clone())],
                            conclusion: or_of(a.clone(), b.clone()),
                            basis: Basis::pks(),
                        },
                    )
                }),
                Box::new(|_| Ok(())),
            ),
            (
                "t4-reverse",
                "∨E proves every P instance",
                Box::new(|a, b, _| {
                    (
                        prove_vee_e_implies_peirce(a, b),
                        Contract {
                            hypotheses: vec![],
                            conclusion: instantiate(
                                AxiomScheme::P,
                                &SchemeSubstitution::ab(a.clone(), b.clone()),
                            )
                            .expect("full substitution"),
                            basis: Basis::ks().with_vee_e(true),
                        },
                    )
                }),
                Box::new(|proof| {
                    if vee_e_steps(proof) != 1 {
                        return Err(format!(
                            "expected exactly one ∨E step, found {}",
                            vee_e_steps(proof)
                        ));
                    }
                    let used = schemes_used(proof);
                    if !used.is_subset(&BTreeSet::from([AxiomScheme::K, AxiomScheme::S])) {
                        return Err("axioms must stay within {K, S}".to_string());
                    }
                    if check_proof(&proof.clone().with_basis(Basis::ks())).is_ok() {
                        return Err("should be rejected with ∨E disabled".to_string());
                    }
                    Ok(())
                }),
            ),
        ];

        for (name, label, construct, extra) in entries {
            let mut failure = None;
            let (fixed_proof, fixed_contract) = construct(&p, &q, &r);
            let judgment = match check_proof(&fixed_proof) {
                Ok(j) => {
                    if let Err(e) = satisfies(&j, &fixed_contract).and_then(|_| extra(&fixed_proof))
                    {
                        failure = Some(e);
                    }
                    j.to_string()
                }
                Err(e) => {
                    failure = Some(format!("kernel rejected the fixed instance: {e}"));
                    String::new()
                }
            };
            let mut trials = 0;
            while trials < RANDOM_TRIALS && failure.is_none() {
                let a = random_formula(&mut rng, 3);
                let b = random_formula(&mut rng, 3);
                let q = random_formula(&mut rng, 3);
                let (proof, contract) = construct(&a, &b, &q);
                match check_proof(&proof) {
                    Ok(j) => {
                        if let Err(e) = satisfies(&j, &contract).and_then(|_| extra(&proof)) {
                            failure = Some(format!("random instance: {e}"));
                        }
                    }
                    Err(e) => failure = Some(format!("kernel rejected a random instance: {e}")),
                }
                trials += 1;
            }
            rows.push(TheoremRow {
                name,
                label,
                judgment,
                schemes_used: schemes_used(&fixed_proof),
                uses_vee_e: vee_e_steps(&fixed_proof) > 0,
                random_trials: trials,
                passed: failure.is_none(),
                failure,
            });
        }
    }

    VerificationReport { rows }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::{parse, render};
    use crate::scheme::match_scheme;

    fn p() -> Formula {
        var("p")
    }
    fn q() -> Formula {
        var("q")
    }
    fn r() -> Formula {
        var("r")
    }

    #[test]
    fn t1_forward_contract() {
        let proof = prove_peirce_implies_prime(&p(), &q(), &r());
        let judgment = check_proof(&proof).unwrap();
        assert!(judgment.hypotheses().is_empty());
        assert_eq!(
            *judgment.conclusion(),
            parse("(p -> r) -> ((p -> q) -> r) -> r").unwrap()
        );
        assert_eq!(proof.basis, Basis::pks());
        assert_eq!(
            *judgment.conclusion(),
            instantiate(AxiomScheme::PPrime, &SchemeSubstitution::abq(p(), q(), r())).unwrap()
        );
    }

    #[test]
    fn t1_forward_degenerate() {
        let proof = prove_peirce_implies_prime(&p(), &p(), &p());
        let judgment = check_proof(&proof).unwrap();
        assert_eq!(
            *judgment.conclusion(),
            parse("(p -> p) -> ((p -> p) -> p) -> p").unwrap()
        );
    }

    #[test]
    fn t1_reverse_contract() {
        let proof = prove_prime_implies_peirce(&p(), &q());
        let judgment = check_proof(&proof).unwrap();
        assert_eq!(
            *judgment.conclusion(),
            parse("((p -> q) -> p) -> p").unwrap()
        );
        assert!(!schemes_used(&proof).contains(&AxiomScheme::P));
        // Gated without P' in the basis.
        assert!(check_proof(&proof.clone().with_basis(Basis::ks())).is_err());

        let degenerate = prove_prime_implies_peirce(&p(), &p());
        let judgment = check_proof(&degenerate).unwrap();
        assert_eq!(
            *judgment.conclusion(),
            parse("((p -> p) -> p) -> p").unwrap()
        );
    }

    #[test]
    fn theorem1_closes_at_the_object_level() {
        // Every P' instance the reverse direction appeals to is itself a
        // {P, K, S} theorem via the forward direction.
        let reverse = prove_prime_implies_peirce(&p(), &q());
        let mut prime_axioms = 0;
        for step in &reverse.steps {
            if let Justification::Axiom(AxiomScheme::PPrime, _) = &step.justification {
                prime_axioms += 1;
                let subst = match_scheme(AxiomScheme::PPrime, &step.formula).unwrap();
                let a = subst.get(crate::scheme::Metavariable::A).unwrap();
                let b = subst.get(crate::scheme::Metavariable::B).unwrap();
                let q = subst.get(crate::scheme::Metavariable::Q).unwrap();
                let witness = prove_peirce_implies_prime(a, b, q);
                let judgment = check_proof(&witness).unwrap();
                assert_eq!(*judgment.conclusion(), step.formula);
            }
        }
        assert!(prime_axioms > 0);
    }

    #[test]
    fn or_intro_left_contract() {
        let proof = prove_or_intro_left(&p(), &q());
        let judgment = check_proof(&proof).unwrap();
        assert_eq!(judgment.hypotheses(), &[p()]);
        assert_eq!(*judgment.conclusion(), parse("(p -> q) -> q").unwrap());
        assert!(!schemes_used(&proof).contains(&AxiomScheme::P));

        let degenerate = prove_or_intro_left(&p(), &p());
        let judgment = check_proof(&degenerate).unwrap();
        assert_eq!(*judgment.conclusion(), parse("(p -> p) -> p").unwrap());
    }

    #[test]
    fn or_intro_right_contract() {
        let proof = prove_or_intro_right(&p(), &q());
        assert_eq!(proof.steps.len(), 3);
        let judgment = check_proof(&proof).unwrap();
        assert_eq!(judgment.hypotheses(), &[q()]);
        assert_eq!(*judgment.conclusion(), parse("(p -> q) -> q").unwrap());
        assert_eq!(schemes_used(&proof), BTreeSet::from([AxiomScheme::K]));

        let degenerate = prove_or_intro_right(&q(), &q());
        let judgment = check_proof(&degenerate).unwrap();
        assert_eq!(*judgment.conclusion(), parse("(q -> q) -> q").unwrap());
    }

    #[test]
    fn or_elim_contract() {
        let proof = prove_or_elim(&p(), &q(), &r());
        let judgment = check_proof(&proof).unwrap();
        assert_eq!(
            judgment.hypotheses(),
            &[parse("p -> r").unwrap(), parse("q -> r").unwrap()]
        );
        assert_eq!(
            *judgment.conclusion(),
            parse("((p -> q) -> q) -> r").unwrap()
        );
        assert!(schemes_used(&proof).contains(&AxiomScheme::P));
        // Basis gating: rejected without the Peirce axiom.
        assert!(check_proof(&proof.clone().with_basis(Basis::ks())).is_err());
    }

    #[test]
    fn or_elim_on_a_desugared_disjunction() {
        let joined = or_of(p(), q());
        let proof = prove_or_elim(&p(), &q(), &joined);
        let judgment = check_proof(&proof).unwrap();
        assert_eq!(
            judgment.hypotheses(),
            &[imp(p(), joined.clone()), imp(q(), joined.clone()),]
        );
        assert_eq!(*judgment.conclusion(), imp(or_of(p(), q()), joined));
    }

    #[test]
    fn lift_or_elim_composes() {
        // [p] ⊢ p -> p and [q] ⊢ p -> p via weakened identities.
        let id = identity_proof(&p());
        let pa = crate::deduction::weaken(&id, &[p()]).unwrap();
        let pb = crate::deduction::weaken(&id, &[q()]).unwrap();
        let lifted = lift_or_elim(&pa, &pb).unwrap();
        let judgment = check_proof(&lifted).unwrap();
        assert_eq!(judgment.hypotheses(), &[or_of(p(), q())]);
        assert_eq!(*judgment.conclusion(), parse("p -> p").unwrap());
    }

    #[test]
    fn lift_or_elim_with_hypothesis_shaped_inputs() {
        // pa: [p] ⊢ q -> p via K; pb: [q -> p] ⊢ q -> p by hypothesis.
        let qp = parse("q -> p").unwrap();
        let mut pa = ProofBuilder::new(Basis::ks(), vec![p()]);
        let k = pa.axiom(AxiomScheme::K, SchemeSubstitution::ab(p(), q()));
        let h = pa.hyp(1);
        pa.mp(k, h);
        let mut pb = ProofBuilder::new(Basis::ks(), vec![qp.clone()]);
        pb.hyp(1);
        let lifted = lift_or_elim(&pa.finish(), &pb.finish()).unwrap();
        let judgment = check_proof(&lifted).unwrap();
        assert_eq!(judgment.hypotheses(), &[or_of(p(), qp.clone())]);
        assert_eq!(*judgment.conclusion(), qp);
    }

    #[test]
    fn lift_or_elim_rejects_mismatched_conclusions() {
        let mut pa = ProofBuilder::new(Basis::ks(), vec![p()]);
        let k = pa.axiom(AxiomScheme::K, SchemeSubstitution::ab(p(), r()));
        let h = pa.hyp(1);
        pa.mp(k, h); // [p] ⊢ r -> p
        let mut pb = ProofBuilder::new(Basis::ks(), vec![q()]);
        let k = pb.axiom(AxiomScheme::K, SchemeSubstitution::ab(q(), r()));
        let h = pb.hyp(1);
        pb.mp(k, h); // [q] ⊢ r -> q
        let err = lift_or_elim(&pa.finish(), &pb.finish()).unwrap_err();
        assert!(matches!(err, TheoremError::ConclusionMismatch { .. }));
    }

    #[test]
    fn t4_reverse_contract() {
        let proof = prove_vee_e_implies_peirce(&p(), &q());
        let judgment = check_proof(&proof).unwrap();
        assert!(judgment.hypotheses().is_empty());
        assert_eq!(
            *judgment.conclusion(),
            parse("((p -> q) -> p) -> p").unwrap()
        );
        assert_eq!(proof.basis, Basis::ks().with_vee_e(true));
        assert_eq!(vee_e_steps(&proof), 1);
        assert!(!schemes_used(&proof).contains(&AxiomScheme::P));
        // Rule gating: rejected with ∨E disabled.
        assert!(check_proof(&proof.clone().with_basis(Basis::ks())).is_err());

        let degenerate = prove_vee_e_implies_peirce(&p(), &p());
        let judgment = check_proof(&degenerate).unwrap();
        assert_eq!(
            *judgment.conclusion(),
            parse("((p -> p) -> p) -> p").unwrap()
        );
    }

    #[test]
    fn verify_constructions_passes() {
        let report = verify_constructions();
        assert!(report.all_passed(), "{report}");
        let intro_right = report
            .rows
            .iter()
            .find(|r| r.name == "or-intro-right")
            .unwrap();
        assert_eq!(intro_right.schemes_used, BTreeSet::from([AxiomScheme::K]));
        assert!(intro_right.peirce_free());
        let elim = report.rows.iter().find(|r| r.name == "or-elim").unwrap();
        assert!(elim.schemes_used.contains(&AxiomScheme::P));
        let rendered = report.to_string();
        assert!(rendered.contains("Peirce-free"));
    }

    #[test]
    fn closed_conclusions_are_tautologies() {
        for proof in [
            prove_peirce_implies_prime(&p(), &q(), &r()),
            prove_prime_implies_peirce(&p(), &q()),
            prove_vee_e_implies_peirce(&p(), &q()),
            identity_proof(&parse("(p -> q) -> r").unwrap()),
        ] {
            let judgment = check_proof(&proof).unwrap();
            assert!(judgment.hypotheses().is_empty());
            assert!(crate::formula::is_tautology(judgment.conclusion()).unwrap());
        }
    }

    #[test]
    fn render_of_theorem_conclusions() {
        let proof = prove_or_elim(&p(), &q(), &or_of(p(), q()));
        let judgment = check_proof(&proof).unwrap();
        assert_eq!(
            render(judgment.conclusion()),
            "((p -> q) -> q) -> (p -> q) -> q"
        );
    }
}
