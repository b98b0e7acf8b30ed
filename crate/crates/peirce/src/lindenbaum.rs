//! The Lindenbaum quotient at desk scale: enumerate a bounded universe of
//! implicational formulas, quotient it by semantic equivalence (truth-table
//! fibers), order the classes by entailment, and verify that the class of
//! `(a -> b) -> b` is the pairwise supremum, that the identity class is the
//! unique top, and that nothing entails a fresh variable.
//!
//! The order here is computed semantically (tautology of `a -> b`); the
//! syntactic side is covered by kernel-checked witnesses from the theorem
//! constructions wherever one exists.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::formula::{evaluate_packed, imp, is_tautology, or_of, var, Formula, TautologyError};
use crate::kernel::check_proof;
use crate::theorems::{prove_or_elim, prove_or_intro_left, prove_or_intro_right};

/// Upper bound on `|formulas|` for [`enumerate`].
pub const MAX_UNIVERSE_FORMULAS: u64 = 1_000_000;
/// Upper bound on the variable count, so truth tables stay enumerable.
pub const MAX_UNIVERSE_VARIABLES: usize = 24;

const LETTERS: [&str; 11] = ["p", "q", "r", "s", "t", "u", "v", "w", "x", "y", "z"];

fn variable_names(count: usize) -> Vec<String> {
    (0..count)
        .map(|i| {
            if i < LETTERS.len() {
                LETTERS[i].to_string()
            } else {
                format!("v{}", i + 1)
            }
        })
        .collect()
}

/// First name outside `taken`, for the no-bottom argument.
fn fresh_variable(taken: &[String]) -> String {
    LETTERS
        .iter()
        .map(|s| s.to_string())
        .chain((0..).map(|i| format!("v{}", i + LETTERS.len() + 1)))
        .find(|name| !taken.contains(name))
        .expect("unbounded candidate stream")
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum UniverseError {
    #[error("variable count must be at least 1")]
    NoVariables,
    #[error("variable count {count} exceeds the {max} cap")]
    TooManyVariables { count: usize, max: usize },
    #[error("universe would hold {count} formulas, above the {max} cap")]
    TooManyFormulas { count: u64, max: u64 },
}

/// Number of distinct implicational formulas over `v` variables with depth
/// at most `d`: `N(0) = v`, `N(d) = v + N(d-1)^2`.
fn formula_count(variables: u64, max_depth: usize) -> Option<u64> {
    let mut n = variables;
    for _ in 0..max_depth {
        n = n.checked_mul(n)?.checked_add(variables)?;
        if n > MAX_UNIVERSE_FORMULAS {
            return Some(n); // already over the cap; avoid huge squares
        }
    }
    Some(n)
}

/// All distinct formulas over the first `variable_count` variables with
/// implication-nesting depth at most `max_depth`, in deterministic order:
/// depth-increasing, and within one depth by the (antecedent, consequent)
/// enumeration indices.
#[derive(Debug, Clone)]
pub struct Universe {
    pub variables: Vec<String>,
    pub max_depth: usize,
    pub formulas: Vec<Formula>,
}

pub fn enumerate(variable_count: usize, max_depth: usize) -> Result<Universe, UniverseError> {
    if variable_count == 0 {
        return Err(UniverseError::NoVariables);
    }
    if variable_count > MAX_UNIVERSE_VARIABLES {
        return Err(UniverseError::TooManyVariables {
            count: variable_count,
            max: MAX_UNIVERSE_VARIABLES,
        });
    }
    match formula_count(variable_count as u64, max_depth) {
        Some(n) if n <= MAX_UNIVERSE_FORMULAS => {}
        overflow => {
            return Err(UniverseError::TooManyFormulas {
                count: overflow.unwrap_or(u64::MAX),
                max: MAX_UNIVERSE_FORMULAS,
            })
        }
    }

    let variables = variable_names(variable_count);
    // (formula, depth), in enumeration order.
    let mut flat: Vec<(Formula, usize)> = variables.iter().map(|n| (var(n.clone()), 0)).collect();
    for depth in 1..=max_depth {
        let previous = flat.len();
        for ia in 0..previous {
            for ib in 0..previous {
                if flat[ia].1.max(flat[ib].1) == depth - 1 {
                    let f = imp(flat[ia].0.clone(), flat[ib].0.clone());
                    flat.push((f, depth));
                }
            }
        }
    }
    Ok(Universe {
        variables,
        max_depth,
        formulas: flat.into_iter().map(|(f, _)| f).collect(),
    })
}

/// A truth table over all `2^v` valuations of a fixed variable list, packed
/// into 64-bit words. Row `i` assigns variable `j` the bit `v - 1 - j` of
/// `i`, so row 0 is all-zeros and the last row is all-ones.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TruthTable {
    bits: Vec<u64>,
    rows: usize,
}

impl TruthTable {
    pub fn compute(f: &Formula, variables: &[String]) -> TruthTable {
        let rows = 1usize << variables.len();
        let mut bits = vec![0u64; rows.div_ceil(64)];
        for row in 0..rows {
            if evaluate_packed(f, variables, row as u64) {
                bits[row / 64] |= 1 << (row % 64);
            }
        }
        TruthTable { bits, rows }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn get(&self, row: usize) -> bool {
        self.bits[row / 64] >> (row % 64) & 1 == 1
    }

    pub fn is_all_true(&self) -> bool {
        (0..self.rows).all(|row| self.get(row))
    }

    /// Pointwise `self <= other`.
    pub fn implies(&self, other: &TruthTable) -> bool {
        self.bits.iter().zip(&other.bits).all(|(a, b)| a & !b == 0)
    }

    pub fn or(&self, other: &TruthTable) -> TruthTable {
        TruthTable {
            bits: self
                .bits
                .iter()
                .zip(&other.bits)
                .map(|(a, b)| a | b)
                .collect(),
            rows: self.rows,
        }
    }

    /// `"0"`/`"1"` characters in row order (row 0 first).
    pub fn bit_string(&self) -> String {
        (0..self.rows)
            .map(|row| if self.get(row) { '1' } else { '0' })
            .collect()
    }
}

/// One semantic-equivalence class of the universe.
#[derive(Debug, Clone)]
pub struct EquivClass {
    pub representative: Formula,
    pub members: Vec<Formula>,
    pub truth_table: TruthTable,
}

/// The quotient poset. `leq` is indexed by class; Hasse edges point from
/// the covered class up to the covering class.
#[derive(Debug, Clone)]
pub struct Poset {
    pub variables: Vec<String>,
    pub classes: Vec<EquivClass>,
    leq: Vec<Vec<bool>>,
    pub hasse_edges: Vec<(usize, usize)>,
}

/// `a ⩽ b` in the semantic reading: `a -> b` is a tautology.
pub fn semantic_leq(a: &Formula, b: &Formula) -> Result<bool, TautologyError> {
    is_tautology(&imp(a.clone(), b.clone()))
}

/// Groups the universe into truth-table fibers, orders the class
/// representatives by [`semantic_leq`], and reduces the order to its
/// covering relation.
pub fn build_poset(universe: &Universe) -> Poset {
    let mut classes: Vec<EquivClass> = Vec::new();
    let mut index_of: HashMap<TruthTable, usize> = HashMap::new();
    for f in &universe.formulas {
        let table = TruthTable::compute(f, &universe.variables);
        match index_of.get(&table) {
            Some(&i) => classes[i].members.push(f.clone()),
            None => {
                index_of.insert(table.clone(), classes.len());
                classes.push(EquivClass {
                    representative: f.clone(),
                    members: vec![f.clone()],
                    truth_table: table,
                });
            }
        }
    }

    let n = classes.len();
    let mut leq = vec![vec![false; n]; n];
    #[allow(clippy::needless_range_loop)]
    for i in 0..n {
        for j in 0..n {
            leq[i][j] = semantic_leq(&classes[i].representative, &classes[j].representative)
                .expect("universe variable count is capped");
        }
    }

    let strict = |leq: &Vec<Vec<bool>>, i: usize, j: usize| leq[i][j] && i != j;
    let mut hasse_edges = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if strict(&leq, i, j) && (0..n).all(|k| !(strict(&leq, i, k) && strict(&leq, k, j))) {
                hasse_edges.push((i, j));
            }
        }
    }

    Poset {
        variables: universe.variables.clone(),
        classes,
        leq,
        hasse_edges,
    }
}

impl Poset {
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq[i][j]
    }

    pub fn class_of_table(&self, table: &TruthTable) -> Option<usize> {
        self.classes.iter().position(|c| &c.truth_table == table)
    }

    /// Exhaustively checks that `leq` is a partial order on classes.
    pub fn verify_order_laws(&self) -> OrderLaws {
        let n = self.class_count();
        let reflexive = (0..n).all(|i| self.leq(i, i));
        let antisymmetric =
            (0..n).all(|i| (0..n).all(|j| !(self.leq(i, j) && self.leq(j, i) && i != j)));
        let transitive = (0..n).all(|i| {
            (0..n).all(|j| (0..n).all(|k| !(self.leq(i, j) && self.leq(j, k)) || self.leq(i, k)))
        });
        OrderLaws {
            classes: n,
            reflexive,
            antisymmetric,
            transitive,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct OrderLaws {
    pub classes: usize,
    pub reflexive: bool,
    pub antisymmetric: bool,
    pub transitive: bool,
}

impl OrderLaws {
    pub fn hold(&self) -> bool {
        self.reflexive && self.antisymmetric && self.transitive
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind")]
pub enum JoinViolation {
    /// No class of the poset carries the or-table of the pair.
    MissingJoinClass {
        a: usize,
        b: usize,
    },
    /// `or_of` of the representatives evaluates differently from the
    /// bitwise or of the class tables (kept as a cross-check).
    TableMismatch {
        a: usize,
        b: usize,
    },
    NotUpperBound {
        a: usize,
        b: usize,
        join: usize,
    },
    NotLeast {
        a: usize,
        b: usize,
        join: usize,
        counterexample: usize,
    },
}

impl fmt::Display for JoinViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            JoinViolation::MissingJoinClass { a, b } => {
                write!(f, "no class carries the join table of ({a}, {b})")
            }
            JoinViolation::TableMismatch { a, b } => {
                write!(f, "or-table of ({a}, {b}) disagrees with the class tables")
            }
            JoinViolation::NotUpperBound { a, b, join } => {
                write!(f, "class {join} is not an upper bound of ({a}, {b})")
            }
            JoinViolation::NotLeast {
                a,
                b,
                join,
                counterexample,
            } => write!(
                f,
                "class {join} is not least above ({a}, {b}): {counterexample} is smaller"
            ),
        }
    }
}

/// Result of the pairwise-supremum check.
#[derive(Debug, Clone, Serialize)]
pub struct JoinReport {
    pub pairs_checked: usize,
    /// `join_table[i][j]` is the class of `or_of(rep_i, rep_j)`.
    pub join_table: Vec<Vec<Option<usize>>>,
    pub violations: Vec<JoinViolation>,
    /// Kernel-checked ∨-introduction witnesses (two per pair).
    pub intro_witnesses: usize,
    /// Kernel-checked ∨-elimination witnesses (one per common upper bound).
    pub elim_witnesses: usize,
    pub witness_failures: Vec<String>,
}

impl JoinReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty() && self.witness_failures.is_empty()
    }
}

/// For every ordered pair of classes, identifies the class of
/// `or_of(representatives)` by truth table, verifies it is the least upper
/// bound, and emits syntactic witnesses: kernel-checked ∨-introduction
/// proofs for both bounds and, for every common upper bound `c`, a
/// kernel-checked ∨-elimination judgment `[a -> c, b -> c] ⊢ (a ∨ b) -> c`.
pub fn check_join(poset: &Poset) -> JoinReport {
    let n = poset.class_count();
    let mut report = JoinReport {
        pairs_checked: 0,
        join_table: vec![vec![None; n]; n],
        violations: Vec::new(),
        intro_witnesses: 0,
        elim_witnesses: 0,
        witness_failures: Vec::new(),
    };

    for i in 0..n {
        for j in 0..n {
            report.pairs_checked += 1;
            let rep_a = &poset.classes[i].representative;
            let rep_b = &poset.classes[j].representative;
            let joined = or_of(rep_a.clone(), rep_b.clone());

            // The join class is identified by truth table, which also
            // cross-checks the bitwise route against direct evaluation.
            let by_eval = TruthTable::compute(&joined, &poset.variables);
            let by_bits = poset.classes[i]
                .truth_table
                .or(&poset.classes[j].truth_table);
            if by_eval != by_bits {
                report
                    .violations
                    .push(JoinViolation::TableMismatch { a: i, b: j });
                continue;
            }
            let join = match poset.class_of_table(&by_eval) {
                Some(k) => k,
                None => {
                    report
                        .violations
                        .push(JoinViolation::MissingJoinClass { a: i, b: j });
                    continue;
                }
            };
            report.join_table[i][j] = Some(join);

            if !(poset.leq(i, join) && poset.leq(j, join)) {
                report
                    .violations
                    .push(JoinViolation::NotUpperBound { a: i, b: j, join });
            }
            for c in 0..n {
                if poset.leq(i, c) && poset.leq(j, c) && !poset.leq(join, c) {
                    report.violations.push(JoinViolation::NotLeast {
                        a: i,
                        b: j,
                        join,
                        counterexample: c,
                    });
                }
            }

            // Syntactic witnesses for the upper-bound half.
            for (proof, hypothesis) in [
                (prove_or_intro_left(rep_a, rep_b), rep_a),
                (prove_or_intro_right(rep_a, rep_b), rep_b),
            ] {
                match check_proof(&proof) {
                    Ok(judgment)
                        if judgment.hypotheses() == std::slice::from_ref(hypothesis)
                            && judgment.conclusion() == &joined =>
                    {
                        report.intro_witnesses += 1;
                    }
                    Ok(judgment) => report.witness_failures.push(format!(
                        "∨-introduction witness for ({i}, {j}) proved {judgment}"
                    )),
                    Err(e) => report.witness_failures.push(format!(
                        "∨-introduction witness for ({i}, {j}) rejected: {e}"
                    )),
                }
            }
            // And for leastness, one ∨E judgment per common upper bound.
            for c in 0..n {
                if poset.leq(i, c) && poset.leq(j, c) {
                    let rep_c = &poset.classes[c].representative;
                    let proof = prove_or_elim(rep_a, rep_b, rep_c);
                    let expected_hyps = [
                        imp(rep_a.clone(), rep_c.clone()),
                        imp(rep_b.clone(), rep_c.clone()),
                    ];
                    let expected_conclusion = imp(joined.clone(), rep_c.clone());
                    match check_proof(&proof) {
                        Ok(judgment)
                            if judgment.hypotheses() == expected_hyps
                                && judgment.conclusion() == &expected_conclusion =>
                        {
                            report.elim_witnesses += 1;
                        }
                        Ok(judgment) => report.witness_failures.push(format!(
                            "∨-elimination witness for ({i}, {j}, {c}) proved {judgment}"
                        )),
                        Err(e) => report.witness_failures.push(format!(
                            "∨-elimination witness for ({i}, {j}, {c}) rejected: {e}"
                        )),
                    }
                }
            }
        }
    }
    report
}

/// Result of the top/bottom check.
#[derive(Debug, Clone, Serialize)]
pub struct TopBottomReport {
    pub top_class: Option<usize>,
    /// The top class is the class of `p -> p`.
    pub top_is_identity_class: bool,
    pub top_unique_maximum: bool,
    /// Minimal classes of the bounded poset. A bounded universe may well
    /// have minimal elements; the full quotient has no bottom.
    pub minimal_classes: Vec<usize>,
    pub fresh_variable: String,
    /// Every representative evaluates to 1 when every variable is 1.
    pub all_ones_hold: bool,
    /// Some representative entails the fresh variable (must stay false).
    pub fresh_variable_entailed: bool,
}

impl TopBottomReport {
    pub fn ok(&self) -> bool {
        self.top_class.is_some()
            && self.top_is_identity_class
            && self.top_unique_maximum
            && self.all_ones_hold
            && !self.fresh_variable_entailed
    }
}

/// Verifies the top element (the class of `p -> p`, unique maximum) and the
/// bounded form of the no-bottom argument: no representative semantically
/// entails a variable outside the universe, because every purely
/// implicational formula holds under the all-ones valuation.
pub fn check_top_bottom(poset: &Poset) -> TopBottomReport {
    let n = poset.class_count();
    let maxima: Vec<usize> = (0..n)
        .filter(|&i| (0..n).all(|j| poset.leq(j, i)))
        .collect();
    let top_class = maxima.first().copied();
    let top_unique_maximum = maxima.len() == 1;

    let p = var(poset.variables[0].clone());
    let identity_table = TruthTable::compute(&imp(p.clone(), p), &poset.variables);
    let top_is_identity_class = top_class
        .map(|i| poset.classes[i].truth_table == identity_table)
        .unwrap_or(false);

    let minimal_classes: Vec<usize> = (0..n)
        .filter(|&i| (0..n).all(|j| j == i || !poset.leq(j, i)))
        .collect();

    let all_ones = (1u64 << poset.variables.len()) - 1;
    let all_ones_hold = poset
        .classes
        .iter()
        .all(|c| evaluate_packed(&c.representative, &poset.variables, all_ones));

    let fresh_variable = fresh_variable(&poset.variables);
    let fresh_variable_entailed = poset.classes.iter().any(|c| {
        semantic_leq(&c.representative, &var(fresh_variable.clone()))
            .expect("variable count is capped")
    });

    TopBottomReport {
        top_class,
        top_is_identity_class,
        top_unique_maximum,
        minimal_classes,
        fresh_variable,
        all_ones_hold,
        fresh_variable_entailed,
    }
}

/// DOT rendering of the Hasse diagram; nodes are labeled by class
/// representative and ordered by class index.
pub fn export_dot(poset: &Poset) -> String {
    let mut out = String::from("digraph lindenbaum {\n  rankdir=BT;\n");
    for (i, class) in poset.classes.iter().enumerate() {
        out.push_str(&format!("  c{} [label=\"{}\"];\n", i, class.representative));
    }
    for (lower, upper) in &poset.hasse_edges {
        out.push_str(&format!("  c{lower} -> c{upper};\n"));
    }
    out.push_str("}\n");
    out
}

/// The full JSON report written by the CLI. Key order is fixed by field
/// order; truth tables and `leq` rows are bit strings indexed by valuation
/// row (row 0 = all variables 0).
#[derive(Debug, Clone, Serialize)]
pub struct PosetReport {
    pub universe: UniverseSummary,
    pub classes: Vec<ClassSummary>,
    pub leq: Vec<String>,
    pub hasse_edges: Vec<(usize, usize)>,
    pub join: JoinReport,
    pub top_bottom: TopBottomReport,
    pub order_laws: OrderLaws,
}

#[derive(Debug, Clone, Serialize)]
pub struct UniverseSummary {
    pub variable_count: usize,
    pub max_depth: usize,
    pub formula_count: usize,
    pub variables: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassSummary {
    pub index: usize,
    pub representative: String,
    pub size: usize,
    pub truth_table: String,
}

pub fn poset_report(
    universe: &Universe,
    poset: &Poset,
    join: JoinReport,
    top_bottom: TopBottomReport,
    order_laws: OrderLaws,
) -> PosetReport {
    PosetReport {
        universe: UniverseSummary {
            variable_count: universe.variables.len(),
            max_depth: universe.max_depth,
            formula_count: universe.formulas.len(),
            variables: universe.variables.clone(),
        },
        classes: poset
            .classes
            .iter()
            .enumerate()
            .map(|(index, c)| ClassSummary {
                index,
                representative: c.representative.to_string(),
                size: c.members.len(),
                truth_table: c.truth_table.bit_string(),
            })
            .collect(),
        leq: (0..poset.class_count())
            .map(|i| {
                (0..poset.class_count())
                    .map(|j| if poset.leq(i, j) { '1' } else { '0' })
                    .collect()
            })
            .collect(),
        hasse_edges: poset.hasse_edges.clone(),
        join,
        top_bottom,
        order_laws,
    }
}

impl PosetReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}
