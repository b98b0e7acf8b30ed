//! Helpers shared by the integration suites: driving the CLI binary and
//! generating seeded random formulas and kernel-valid random proofs.
//!
//! Each test binary compiles this module separately and uses a subset.
#![allow(dead_code)]

use std::path::Path;
use std::process::Output;

use rand::rngs::StdRng;
use rand::Rng;

use peirce::builder::ProofBuilder;
use peirce::formula::{imp, var, Formula};
use peirce::kernel::{Basis, Proof};
use peirce::scheme::{AxiomScheme, Metavariable, SchemeSubstitution};

pub fn run_cli(args: &[&str]) -> (i32, String, String) {
    let output: Output = std::process::Command::new(env!("CARGO_BIN_EXE_peirce"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        output.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&output.stdout).into_owned(),
        String::from_utf8_lossy(&output.stderr).into_owned(),
    )
}

pub fn golden_path(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

pub fn random_formula(rng: &mut StdRng, max_depth: usize) -> Formula {
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

fn random_substitution(rng: &mut StdRng, scheme: AxiomScheme) -> SchemeSubstitution {
    let mut subst = SchemeSubstitution::new();
    for m in scheme.required_metavariables() {
        subst.insert(*m, random_formula(rng, 2));
    }
    subst
}

/// A kernel-valid proof assembled by forward generation: hypotheses and
/// axiom instances fall from the sky, modus ponens combines whatever fits.
/// Never uses ∨E, so the output is always dischargeable.
pub fn random_proof(rng: &mut StdRng, max_steps: usize) -> Proof {
    let hypothesis_count = rng.gen_range(0..=3);
    let hypotheses: Vec<Formula> = (0..hypothesis_count)
        .map(|_| random_formula(rng, 2))
        .collect();
    let mut basis = Basis::ks();
    if rng.gen_bool(0.3) {
        basis = basis.with_scheme(AxiomScheme::P);
    }
    if rng.gen_bool(0.2) {
        basis = basis.with_scheme(AxiomScheme::PPrime);
    }
    let schemes: Vec<AxiomScheme> = basis.schemes().collect();

    let mut builder = ProofBuilder::new(basis, hypotheses.clone());
    let steps = rng.gen_range(1..=max_steps);
    for _ in 0..steps {
        let roll = rng.gen_range(0..10);
        if roll < 4 {
            // Look for an applicable modus ponens pair.
            let mut candidates = Vec::new();
            for i in 1..=builder.last() {
                if let Some((x, _)) = builder.step_formula(i).as_imp() {
                    let x = x.clone();
                    for j in 1..=builder.last() {
                        if *builder.step_formula(j) == x {
                            candidates.push((i, j));
                        }
                    }
                }
            }
            if !candidates.is_empty() {
                let (i, j) = candidates[rng.gen_range(0..candidates.len())];
                builder.mp(i, j);
                continue;
            }
        }
        if roll < 7 && !hypotheses.is_empty() {
            builder.hyp(rng.gen_range(0..hypotheses.len()) + 1);
        } else {
            let scheme = schemes[rng.gen_range(0..schemes.len())];
            let subst = random_substitution(rng, scheme);
            builder.axiom(scheme, subst);
        }
    }
    builder.finish()
}

/// Metavariable accessor that panics on absence, for matched instances.
pub fn binding(subst: &SchemeSubstitution, m: Metavariable) -> Formula {
    subst.get(m).expect("matched instance binds it").clone()
}
