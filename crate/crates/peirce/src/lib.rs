//! Implicational propositional calculus with the Peirce axiom scheme.
//!
//! The crate provides, in dependency order:
//!
//! * [`formula`]: the one-connective formula language, its concrete
//!   syntax, and Boolean-valuation semantics;
//! * [`scheme`]: axiom schemes `P`, `K`, `S`, `P'` and explicit
//!   substitution;
//! * [`kernel`]: the trusted checker for Hilbert-style proof objects over
//!   a configurable basis, with the optional primitive rule ∨E;
//! * [`builder`]: an untrusted helper for scripting proofs;
//! * [`deduction`]: the deduction theorem as a proof transformation and
//!   the derived rules built from it;
//! * [`theorems`]: constructions of the Peirce equivalents and the
//!   ∨-introduction/∨-elimination results;
//! * [`lindenbaum`]: the quotient poset of formulas under mutual
//!   derivability, with supremum and top/bottom checks;
//! * [`proof_text`]: the line-based proof file format used by the CLI.

pub mod builder;
pub mod deduction;
pub mod formula;
pub mod kernel;
pub mod lindenbaum;
pub mod proof_text;
pub mod scheme;
pub mod theorems;

pub use formula::{
    counterexample, evaluate, imp, is_tautology, or_of, parse, render, var, Formula, ParseError,
    Valuation,
};
pub use kernel::{
    check_proof, conclusion_of, Basis, CheckError, Judgment, Justification, Proof, ProofStep,
};
pub use scheme::{instantiate, AxiomScheme, Metavariable, SchemeSubstitution};
