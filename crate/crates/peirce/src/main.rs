use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use peirce::deduction::{discharge_hypothesis, hypothetical_syllogism, identity_proof};
use peirce::formula::{counterexample, parse, Formula};
use peirce::kernel::{check_proof, Basis, Proof};
use peirce::lindenbaum::{
    build_poset, check_join, check_top_bottom, enumerate, export_dot, poset_report,
};
use peirce::proof_text::{parse_proof, render_proof};
use peirce::scheme::AxiomScheme;
use peirce::theorems::{
    prove_or_elim, prove_or_intro_left, prove_or_intro_right, prove_peirce_implies_prime,
    prove_prime_implies_peirce, prove_vee_e_implies_peirce, verify_constructions,
};

/// Exit codes: 0 success, 2 usage or parse error, 3 proof error,
/// 4 verification failure.
#[derive(Parser)]
#[command(
    name = "peirce",
    version,
    about = "Implicational propositional calculus: formulas, proof checking, the Peirce equivalents, and the Lindenbaum poset"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a formula and print its canonical, desugared rendering
    Parse { expr: String },
    /// Decide tautology by exhaustive valuation enumeration
    Taut { expr: String },
    /// Kernel-check a proof file and print the judgment
    Check {
        file: PathBuf,
        /// Basis override, e.g. "K,S,P", "K,S,P'" or "K,S+VE"; defaults to
        /// the file's own basis line
        #[arg(long)]
        basis: Option<String>,
    },
    /// Construct a named theorem and emit it in the proof file format
    ///
    /// Names: identity (A), hs (A B C), t1-forward (A B Q),
    /// t1-reverse (A B), or-intro-left (A B), or-intro-right (A B),
    /// or-elim (A B Q), t4-reverse (A B).
    Prove {
        name: String,
        #[arg(long = "A")]
        a: Option<String>,
        #[arg(long = "B")]
        b: Option<String>,
        #[arg(long = "C")]
        c: Option<String>,
        #[arg(long = "Q")]
        q: Option<String>,
        /// Output path; the proof goes to stdout when omitted
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Discharge a hypothesis from a proof file via the deduction theorem
    Discharge {
        file: PathBuf,
        formula: String,
        /// Output path; the proof goes to stdout when omitted
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Build the Lindenbaum poset of a bounded formula universe and verify
    /// pairwise suprema, the top element, and the no-bottom surrogate
    Poset {
        #[arg(long, default_value_t = 2)]
        vars: usize,
        #[arg(long, default_value_t = 3)]
        depth: usize,
        /// Write the Hasse diagram in DOT format
        #[arg(long)]
        dot: Option<PathBuf>,
        /// Write the full JSON report
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Run every theorem construction plus the desk-scale poset checks
    Verify,
}

struct CliError {
    code: u8,
    message: String,
}

impl CliError {
    fn usage(message: impl Into<String>) -> Self {
        CliError {
            code: 2,
            message: message.into(),
        }
    }

    fn proof(message: impl Into<String>) -> Self {
        CliError {
            code: 3,
            message: message.into(),
        }
    }

    fn verification(message: impl Into<String>) -> Self {
        CliError {
            code: 4,
            message: message.into(),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("{}", e.message);
            ExitCode::from(e.code)
        }
    }
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Parse { expr } => {
            let formula = parse_formula(&expr)?;
            println!("{formula}");
            Ok(())
        }
        Command::Taut { expr } => {
            let formula = parse_formula(&expr)?;
            match counterexample(&formula).map_err(|e| CliError::usage(e.to_string()))? {
                None => println!("tautology"),
                Some(valuation) => {
                    let rendered: Vec<String> = formula
                        .variables()
                        .iter()
                        .map(|name| {
                            let value = valuation.get(name).expect("countervaluation is total");
                            format!("{}={}", name, if value { 1 } else { 0 })
                        })
                        .collect();
                    println!("countervaluation {}", rendered.join(" "));
                }
            }
            Ok(())
        }
        Command::Check { file, basis } => {
            let mut proof = read_proof(&file)?;
            if let Some(flag) = basis {
                proof = proof.with_basis(parse_basis_flag(&flag)?);
            }
            let judgment = check_proof(&proof).map_err(|e| CliError::proof(e.to_string()))?;
            println!("{judgment}");
            Ok(())
        }
        Command::Prove {
            name,
            a,
            b,
            c,
            q,
            out,
        } => {
            let proof = construct(&name, a, b, c, q)?;
            let judgment = check_proof(&proof).expect("library constructions are kernel-valid");
            write_proof(&proof, out.as_deref(), &judgment.to_string())
        }
        Command::Discharge { file, formula, out } => {
            let proof = read_proof(&file)?;
            let target = parse_formula(&formula)?;
            let discharged = discharge_hypothesis(&proof, &target)
                .map_err(|e| CliError::proof(e.to_string()))?;
            let judgment = check_proof(&discharged).expect("discharge outputs are kernel-valid");
            write_proof(&discharged, out.as_deref(), &judgment.to_string())
        }
        Command::Poset {
            vars,
            depth,
            dot,
            json,
        } => {
            let universe = enumerate(vars, depth).map_err(|e| CliError::usage(e.to_string()))?;
            let poset = build_poset(&universe);
            let laws = poset.verify_order_laws();
            let join = check_join(&poset);
            let top_bottom = check_top_bottom(&poset);

            if let Some(path) = dot {
                fs::write(&path, export_dot(&poset))
                    .map_err(|e| CliError::usage(format!("{}: {e}", path.display())))?;
            }
            if let Some(path) = json {
                let report =
                    poset_report(&universe, &poset, join.clone(), top_bottom.clone(), laws);
                fs::write(&path, report.to_json())
                    .map_err(|e| CliError::usage(format!("{}: {e}", path.display())))?;
            }

            println!(
                "universe: {} variables, depth <= {}, {} formulas",
                universe.variables.len(),
                universe.max_depth,
                universe.formulas.len()
            );
            println!("classes: {}", poset.class_count());
            println!(
                "order laws: reflexive {}, antisymmetric {}, transitive {}",
                yes_no(laws.reflexive),
                yes_no(laws.antisymmetric),
                yes_no(laws.transitive)
            );
            println!(
                "sup = [(A->B)->B] verified for {} pairs ({}^2); violations: {}",
                join.pairs_checked,
                poset.class_count(),
                join.violations.len()
            );
            for violation in &join.violations {
                println!("  violation: {violation}");
            }
            println!(
                "witnesses: {} ∨-introduction and {} ∨-elimination proofs kernel-checked, {} failures",
                join.intro_witnesses,
                join.elim_witnesses,
                join.witness_failures.len()
            );
            match top_bottom.top_class {
                Some(i) => println!(
                    "top: c{} [{}]{}",
                    i,
                    poset.classes[i].representative,
                    if top_bottom.top_unique_maximum {
                        " (unique maximum)"
                    } else {
                        " (NOT unique)"
                    }
                ),
                None => println!("top: missing"),
            }
            let minimals: Vec<String> = top_bottom
                .minimal_classes
                .iter()
                .map(|&i| format!("c{} [{}]", i, poset.classes[i].representative))
                .collect();
            println!(
                "minimal classes (bounded-universe artifact): {}",
                minimals.join(", ")
            );
            println!(
                "no class entails the fresh variable \"{}\": {}",
                top_bottom.fresh_variable,
                yes_no(!top_bottom.fresh_variable_entailed)
            );

            if laws.hold() && join.ok() && top_bottom.ok() {
                Ok(())
            } else {
                Err(CliError::verification("supremum verification failed"))
            }
        }
        Command::Verify => {
            let report = verify_constructions();
            print!("{report}");
            let universe = enumerate(2, 3).expect("desk-scale bounds");
            let poset = build_poset(&universe);
            let laws = poset.verify_order_laws();
            let join = check_join(&poset);
            let top_bottom = check_top_bottom(&poset);
            let poset_ok = laws.hold() && join.ok() && top_bottom.ok();
            println!(
                "lindenbaum (2 vars, depth 3): {} classes, {} sup pairs, {} ∨E witnesses: {}",
                poset.class_count(),
                join.pairs_checked,
                join.elim_witnesses,
                if poset_ok { "ok" } else { "FAILED" }
            );
            if report.all_passed() && poset_ok {
                Ok(())
            } else {
                Err(CliError::verification("verification failed"))
            }
        }
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn parse_formula(text: &str) -> Result<Formula, CliError> {
    parse(text).map_err(|e| CliError::usage(e.to_string()))
}

fn read_proof(path: &Path) -> Result<Proof, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::usage(format!("{}: {e}", path.display())))?;
    parse_proof(&text).map_err(|e| CliError::usage(format!("{}: {e}", path.display())))
}

fn write_proof(proof: &Proof, out: Option<&Path>, judgment: &str) -> Result<(), CliError> {
    let text = render_proof(proof);
    match out {
        Some(path) => {
            fs::write(path, text)
                .map_err(|e| CliError::usage(format!("{}: {e}", path.display())))?;
            println!("{judgment}");
        }
        None => {
            print!("{text}");
            eprintln!("{judgment}");
        }
    }
    Ok(())
}

/// Basis flags look like `K,S,P` or `K,S,P'` with an optional `+VE` suffix.
fn parse_basis_flag(flag: &str) -> Result<Basis, CliError> {
    let mut rest = flag.trim();
    let mut vee_e = false;
    if let Some(stripped) = rest.strip_suffix("+VE") {
        vee_e = true;
        rest = stripped.trim_end_matches([',', ' ']);
    }
    let mut schemes = Vec::new();
    for token in rest.split(',') {
        let token = token.trim();
        if token.is_empty() {
            continue;
        }
        let scheme: AxiomScheme = token
            .parse()
            .map_err(|_| CliError::usage(format!("unknown axiom scheme {token:?} in --basis")))?;
        schemes.push(scheme);
    }
    Ok(Basis::new(schemes, vee_e))
}

fn construct(
    name: &str,
    a: Option<String>,
    b: Option<String>,
    c: Option<String>,
    q: Option<String>,
) -> Result<Proof, CliError> {
    let need = |slot: Option<String>, flag: &str| -> Result<Formula, CliError> {
        let text = slot
            .ok_or_else(|| CliError::usage(format!("prove {name} requires --{flag} <formula>")))?;
        parse_formula(&text)
    };
    match name {
        "identity" => Ok(identity_proof(&need(a, "A")?)),
        "hs" => Ok(hypothetical_syllogism(
            &need(a, "A")?,
            &need(b, "B")?,
            &need(c, "C")?,
        )),
        "t1-forward" => Ok(prove_peirce_implies_prime(
            &need(a, "A")?,
            &need(b, "B")?,
            &need(q, "Q")?,
        )),
        "t1-reverse" => Ok(prove_prime_implies_peirce(&need(a, "A")?, &need(b, "B")?)),
        "or-intro-left" => Ok(prove_or_intro_left(&need(a, "A")?, &need(b, "B")?)),
        "or-intro-right" => Ok(prove_or_intro_right(&need(a, "A")?, &need(b, "B")?)),
        "or-elim" => Ok(prove_or_elim(
            &need(a, "A")?,
            &need(b, "B")?,
            &need(q, "Q")?,
        )),
        "t4-reverse" => Ok(prove_vee_e_implies_peirce(&need(a, "A")?, &need(b, "B")?)),
        other => Err(CliError::usage(format!(
            "unknown theorem {other:?}; expected one of identity, hs, t1-forward, t1-reverse, \
             or-intro-left, or-intro-right, or-elim, t4-reverse"
        ))),
    }
}
