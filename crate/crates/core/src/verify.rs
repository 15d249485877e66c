//! Exhaustive checkers for the main theorem, the two conjectures and the
//! cross-module identities, with deterministic reports.
//!
//! Every case is evaluated from primitives for its own `(λ, a, b)`; nothing is
//! cached across parameter pairs. Cases run on a rayon pool of `jobs` threads
//! and are collected in enumeration order, so reports do not depend on the
//! worker count.

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::abacus::{b_weight, core_b, core_by_ribbons, from_maya, quotient_b, quotient_by_hooks, to_maya};
use crate::enumerate::{enumerate_partitions, partitions_up_to};
use crate::error::{Error, Result};
use crate::hooks::{all_hooks, classify_hook, divisible_hooks, has_shape32_hook};
use crate::ladder::{
    colreg, is_ab_regular, is_cr_valid, is_cr_valid_lemma, ladder_through, reg, reg_via_transpose, semireg,
    AbParams,
};
use crate::mullineux::{j_b, mullineux, mullineux_transpose, mullineux_transpose_recursive, omega_psi};
use crate::partition::{BoxCoord, Partition};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Witness {
    /// A box whose hook breaks the required shape condition.
    Hook(BoxCoord),
    /// Two values that were required to agree.
    Mismatch { expected: String, actual: String },
    Note(String),
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Hypotheses {
    pub cr_valid: bool,
    pub all_divisible_hooks_shallow: bool,
    pub all_divisible_hooks_shallow_or_steep: bool,
    pub reg_valid: bool,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Conclusions {
    pub b_regular: Option<bool>,
    pub mullineux_tr_eq_colreg: Option<bool>,
    pub reg_mull_eq_tr_reg: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseRecord {
    pub partition: Partition,
    pub a: usize,
    pub b: usize,
    pub hypotheses: Hypotheses,
    pub conclusions: Conclusions,
    pub witness: Option<Witness>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub partition: Partition,
    pub a: usize,
    pub b: usize,
    /// Which statement failed. Scans of a single statement use its name.
    pub kind: String,
    pub witness: Option<Witness>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanParams {
    pub n_max: usize,
    pub pairs: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tally {
    pub examined: usize,
    pub hypothesis_ok: usize,
    pub violations: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Totals {
    pub examined: usize,
    pub hypothesis_ok: usize,
    pub violations: usize,
    pub hypothesis_failed: usize,
    /// Cases whose conclusion could not be evaluated (e.g. `M_b` of a
    /// non-`b`-regular partition).
    pub inapplicable: usize,
    /// Per-statement breakdown, for scans that run more than one.
    #[serde(skip_serializing_if = "BTreeMap::is_empty", default)]
    pub details: BTreeMap<String, Tally>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub scan: String,
    pub params: ScanParams,
    pub totals: Totals,
    pub violations: Vec<Violation>,
    pub duration_ms: u64,
}

impl VerificationReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }

    /// Turns a report of a proved statement into an error if it found any
    /// violation.
    pub fn into_result(self) -> Result<VerificationReport> {
        match self.violations.first() {
            None => Ok(self),
            Some(first) => Err(Error::ScanViolation {
                scan: self.scan.clone(),
                count: self.violations.len(),
                first: format!("{} at (a,b)=({},{}): {}", first.partition, first.a, first.b, first.kind),
            }),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// One CSV row per violation.
    pub fn csv_rows(&self) -> Vec<[String; 6]> {
        self.violations
            .iter()
            .map(|v| {
                let witness = v
                    .witness
                    .as_ref()
                    .map(|w| serde_json::to_string(w).expect("witness serializes"))
                    .unwrap_or_default();
                [
                    self.scan.clone(),
                    v.partition.to_string(),
                    v.a.to_string(),
                    v.b.to_string(),
                    v.kind.clone(),
                    witness,
                ]
            })
            .collect()
    }

    pub const CSV_HEADER: [&'static str; 6] = ["scan", "partition", "a", "b", "kind", "witness"];
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ScanOptions {
    pub jobs: usize,
    /// Lets the reverse-conjecture scanner accept non-coprime pairs.
    pub allow_non_coprime: bool,
}

impl Default for ScanOptions {
    fn default() -> Self {
        ScanOptions {
            jobs: 1,
            allow_non_coprime: false,
        }
    }
}

/// All pairs `1 <= a < b <= b_max`.
pub fn all_pairs(b_max: usize) -> Vec<(usize, usize)> {
    (2..=b_max).flat_map(|b| (1..b).map(move |a| (a, b))).collect()
}

/// What one case contributes to a report.
#[derive(Debug, Default)]
struct Outcome {
    hypothesis_ok: bool,
    inapplicable: bool,
    violation: Option<(String, Option<Witness>)>,
}

impl Outcome {
    fn skipped() -> Self {
        Outcome::default()
    }

    fn checked(failure: Option<(String, Option<Witness>)>) -> Self {
        Outcome {
            hypothesis_ok: true,
            inapplicable: false,
            violation: failure,
        }
    }

    fn inapplicable() -> Self {
        Outcome {
            hypothesis_ok: true,
            inapplicable: true,
            violation: None,
        }
    }
}

struct Case<'a> {
    lambda: &'a Partition,
    params: AbParams,
    statement: &'static str,
}

fn sort_key(v: &Violation) -> (usize, std::cmp::Reverse<Vec<usize>>, usize, usize) {
    (v.partition.size(), std::cmp::Reverse(v.partition.parts().to_vec()), v.a, v.b)
}

fn pool(jobs: usize) -> Result<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::Invariant(format!("thread pool: {e}")))
}

fn validate_pairs(pairs: &[(usize, usize)]) -> Result<Vec<AbParams>> {
    pairs.iter().map(|&(a, b)| AbParams::new(a, b)).collect()
}

/// Runs `check` on every `(λ, statement, pair)` and aggregates the outcomes.
fn run_scan<F>(
    scan: &str,
    n_max: usize,
    pairs: &[AbParams],
    statements: &[&'static str],
    jobs: usize,
    check: F,
) -> Result<VerificationReport>
where
    F: Fn(&Case<'_>) -> Outcome + Sync,
{
    let start = Instant::now();
    let partitions: Vec<Partition> = partitions_up_to(n_max).collect();
    let grid: Vec<(usize, AbParams, &'static str)> = (0..partitions.len())
        .flat_map(|i| {
            pairs
                .iter()
                .flat_map(move |&p| statements.iter().map(move |&s| (i, p, s)))
        })
        .collect();
    let outcomes: Vec<Outcome> = pool(jobs)?.install(|| {
        grid.par_iter()
            .map(|&(i, params, statement)| {
                check(&Case {
                    lambda: &partitions[i],
                    params,
                    statement,
                })
            })
            .collect()
    });

    let mut totals = Totals::default();
    let mut violations = Vec::new();
    for (&(i, params, statement), outcome) in grid.iter().zip(outcomes) {
        let tally = totals.details.entry(statement.to_string()).or_default();
        tally.examined += 1;
        totals.examined += 1;
        if !outcome.hypothesis_ok {
            totals.hypothesis_failed += 1;
            continue;
        }
        tally.hypothesis_ok += 1;
        totals.hypothesis_ok += 1;
        if outcome.inapplicable {
            totals.inapplicable += 1;
        }
        if let Some((kind, witness)) = outcome.violation {
            tally.violations += 1;
            totals.violations += 1;
            violations.push(Violation {
                partition: partitions[i].clone(),
                a: params.a(),
                b: params.b(),
                kind,
                witness,
            });
        }
    }
    if statements.len() == 1 {
        totals.details.clear();
    }
    violations.sort_by_key(sort_key);
    Ok(VerificationReport {
        scan: scan.to_string(),
        params: ScanParams {
            n_max,
            pairs: pairs.iter().map(|p| (p.a(), p.b())).collect(),
        },
        totals,
        violations,
        duration_ms: start.elapsed().as_millis() as u64,
    })
}

fn first_divisible_hook(lambda: &Partition, params: AbParams, ok: impl Fn(bool, bool) -> bool) -> Option<BoxCoord> {
    divisible_hooks(lambda, params.b())
        .find(|h| {
            let c = classify_hook(h, params);
            !ok(c.shallow, c.steep)
        })
        .map(|h| h.corner)
}

fn mismatch(expected: impl ToString, actual: impl ToString) -> Option<Witness> {
    Some(Witness::Mismatch {
        expected: expected.to_string(),
        actual: actual.to_string(),
    })
}

/// Evaluates the main theorem on one case: if `λ^{Cr_{a,b}}` is a partition
/// and every hook divisible by `b` is `(a,b)`-shallow, then `λ` is
/// `b`-regular and `λ^{M_b Tr} = λ^{Cr_{a,b}}`.
pub fn check_theorem_case(lambda: &Partition, params: AbParams) -> CaseRecord {
    let cr = colreg(lambda, params);
    let non_shallow = first_divisible_hook(lambda, params, |shallow, _| shallow);
    let non_either = first_divisible_hook(lambda, params, |shallow, steep| shallow || steep);
    let hypotheses = Hypotheses {
        cr_valid: cr.is_partition(),
        all_divisible_hooks_shallow: non_shallow.is_none(),
        all_divisible_hooks_shallow_or_steep: non_either.is_none(),
        reg_valid: reg(lambda, params).is_partition(),
    };
    let mut record = CaseRecord {
        partition: lambda.clone(),
        a: params.a(),
        b: params.b(),
        hypotheses,
        conclusions: Conclusions::default(),
        witness: None,
    };
    if !record.hypotheses.cr_valid {
        record.witness = Some(Witness::Note(format!("Cr rows {cr}")));
        return record;
    }
    if let Some(cell) = non_shallow {
        record.witness = Some(Witness::Hook(cell));
        return record;
    }
    let regular = lambda.is_b_regular(params.b());
    record.conclusions.b_regular = Some(regular);
    if !regular {
        record.witness = Some(Witness::Note(format!("not {}-regular", params.b())));
        return record;
    }
    let (mt, _) = mullineux_transpose(lambda, params.b()).expect("b-regular input");
    let equal = cr.as_partition().as_ref() == Some(&mt);
    record.conclusions.mullineux_tr_eq_colreg = Some(equal);
    if !equal {
        record.witness = mismatch(&cr, &mt);
    }
    record
}

fn theorem_outcome(lambda: &Partition, params: AbParams) -> Outcome {
    let r = check_theorem_case(lambda, params);
    if !(r.hypotheses.cr_valid && r.hypotheses.all_divisible_hooks_shallow) {
        return Outcome::skipped();
    }
    let holds = r.conclusions.b_regular == Some(true) && r.conclusions.mullineux_tr_eq_colreg == Some(true);
    Outcome::checked((!holds).then(|| ("theorem".to_string(), r.witness)))
}

/// Main theorem over every `λ` with `|λ| <= n_max` and every pair. The
/// report is returned even when it has violations; see
/// [`VerificationReport::into_result`].
pub fn run_theorem_scan(n_max: usize, pairs: &[(usize, usize)], options: &ScanOptions) -> Result<VerificationReport> {
    let pairs = validate_pairs(pairs)?;
    run_scan("theorem", n_max, &pairs, &["theorem"], options.jobs, |c| {
        theorem_outcome(c.lambda, c.params)
    })
}

/// Like [`run_theorem_scan`], failing with `ScanViolation` on any violation.
pub fn scan_theorem(n_max: usize, pairs: &[(usize, usize)], options: &ScanOptions) -> Result<VerificationReport> {
    run_theorem_scan(n_max, pairs, options)?.into_result()
}

/// Reverse conjecture: if `λ` is `b`-regular, Cr-valid and
/// `λ^{M_b Tr} = λ^{Cr_{a,b}}`, then every hook divisible by `b` is shallow.
/// Counterexamples are data, not errors.
pub fn scan_conjecture_reverse(
    n_max: usize,
    pairs: &[(usize, usize)],
    options: &ScanOptions,
) -> Result<VerificationReport> {
    let params = validate_pairs(pairs)?;
    if !options.allow_non_coprime {
        if let Some(p) = params.iter().find(|p| !p.is_coprime()) {
            return Err(Error::UnsupportedPair {
                a: p.a(),
                b: p.b(),
                reason: "the reverse conjecture is stated for co-prime pairs".into(),
            });
        }
    }
    run_scan("conjecture_reverse", n_max, &params, &["reverse"], options.jobs, |c| {
        let (lambda, p) = (c.lambda, c.params);
        if !lambda.is_b_regular(p.b()) {
            return Outcome::skipped();
        }
        let Some(cr) = colreg(lambda, p).as_partition() else {
            return Outcome::skipped();
        };
        let (mt, _) = mullineux_transpose(lambda, p.b()).expect("b-regular input");
        if mt != cr {
            return Outcome::skipped();
        }
        let bad = first_divisible_hook(lambda, p, |shallow, _| shallow);
        Outcome::checked(bad.map(|cell| ("reverse".to_string(), Some(Witness::Hook(cell)))))
    })
}

/// Fayers-type conjecture for `2a < b`, in both directions, over
/// Reg- and Cr-valid `λ`:
///
/// * `i`: all `b`-divisible hooks shallow or steep implies
///   `λ^{Reg M_b} = λ^{Tr Reg}`;
/// * `ii` (co-prime pairs only): the identity implies the hook condition.
///
/// `λ^{Reg M_b}` needs `λ^{Reg}` to be `b`-regular; cases where it is not are
/// counted as inapplicable.
pub fn scan_conjecture_fayers(
    n_max: usize,
    pairs: &[(usize, usize)],
    options: &ScanOptions,
) -> Result<VerificationReport> {
    let params = validate_pairs(pairs)?;
    if let Some(p) = params.iter().find(|p| 2 * p.a() >= p.b()) {
        return Err(Error::UnsupportedPair {
            a: p.a(),
            b: p.b(),
            reason: "the conjecture requires 2a < b".into(),
        });
    }
    run_scan("conjecture_fayers", n_max, &params, &["i", "ii"], options.jobs, |c| {
        let (lambda, p, direction) = (c.lambda, c.params, c.statement);
        if direction == "ii" && !p.is_coprime() {
            return Outcome::skipped();
        }
        let (Some(rho), Some(cr)) = (reg(lambda, p).as_partition(), colreg(lambda, p).as_partition()) else {
            return Outcome::skipped();
        };
        let bad = first_divisible_hook(lambda, p, |shallow, steep| shallow || steep);
        if direction == "i" && bad.is_some() {
            return Outcome::skipped();
        }
        if !rho.is_b_regular(p.b()) {
            return Outcome::inapplicable();
        }
        // λ^{Tr Reg} is the transpose of λ^{Cr}.
        let lhs = mullineux(&rho, p.b()).expect("b-regular input");
        let rhs = cr.transpose();
        let identity = lhs == rhs;
        match direction {
            "i" => Outcome::checked((!identity).then(|| ("i".to_string(), mismatch(&rhs, &lhs)))),
            _ if !identity => Outcome::skipped(),
            _ => Outcome::checked(bad.map(|cell| ("ii".to_string(), Some(Witness::Hook(cell))))),
        }
    })
}

/// Statements checked per `(λ, b)` by [`brute_force_cross_checks`].
const PER_B: &[&str] = &[
    "maya_round_trip",
    "core_dual_path",
    "quotient_dual_path",
    "size_identity",
    "weight_is_hook_count",
    "mullineux_involution",
    "m_recursion",
    "core_preserved_mullineux_tr",
    "dominance_reversal",
];

/// Statements checked per `(λ, a, b)`.
const PER_PAIR: &[&str] = &[
    "cr_validity_lemma",
    "reg_dual_route",
    "cr_recursion",
    "cr_recursion_shape32_free",
    "core_preserved_cr",
    "core_preserved_reg",
    "ladders_gain_where_empty",
    "colseg_j",
    "shallow_steep_bound",
    "a1_degeneration",
    "ab_regular_is_b_regular",
];

fn fail(kind: &str, witness: Option<Witness>) -> Outcome {
    Outcome::checked(Some((kind.to_string(), witness)))
}

fn pass() -> Outcome {
    Outcome::checked(None)
}

fn verdict(kind: &str, ok: bool, witness: impl FnOnce() -> Option<Witness>) -> Outcome {
    if ok {
        pass()
    } else {
        fail(kind, witness())
    }
}

fn check_per_b(lambda: &Partition, b: usize, kind: &'static str) -> Outcome {
    match kind {
        "maya_round_trip" => {
            let back = from_maya(&to_maya(lambda));
            verdict(kind, back.as_ref() == Ok(lambda), || mismatch(lambda, format!("{back:?}")))
        }
        "core_dual_path" => {
            let (x, y) = (core_b(lambda, b), core_by_ribbons(lambda, b));
            verdict(kind, x.is_ok() && x == y, || mismatch(format!("{x:?}"), format!("{y:?}")))
        }
        "quotient_dual_path" => {
            let (x, y) = (quotient_b(lambda, b), quotient_by_hooks(lambda, b));
            verdict(kind, x.is_ok() && x == y, || mismatch(format!("{x:?}"), format!("{y:?}")))
        }
        "size_identity" => {
            let (core, weight) = (core_b(lambda, b).expect("b >= 2"), b_weight(lambda, b).expect("b >= 2"));
            verdict(kind, lambda.size() == core.size() + b * weight, || {
                mismatch(lambda.size(), core.size() + b * weight)
            })
        }
        "weight_is_hook_count" => {
            let weight = b_weight(lambda, b).expect("b >= 2");
            let hooks = all_hooks(lambda).iter().filter(|h| h.hook % b == 0).count();
            verdict(kind, weight == hooks, || mismatch(hooks, weight))
        }
        "mullineux_involution" | "m_recursion" | "core_preserved_mullineux_tr" if !lambda.is_b_regular(b) => {
            Outcome::skipped()
        }
        "mullineux_involution" => {
            let m = mullineux(lambda, b).expect("b-regular input");
            if !m.is_b_regular(b) {
                return fail(kind, Some(Witness::Note(format!("M_b gave {m}, not {b}-regular"))));
            }
            let back = mullineux(&m, b).expect("b-regular input");
            verdict(kind, &back == lambda, || mismatch(lambda, back))
        }
        "m_recursion" => {
            let (direct, trace) = mullineux_transpose(lambda, b).expect("b-regular input");
            let recursive = mullineux_transpose_recursive(lambda, b);
            let sizes_ok = trace.iterates.windows(2).all(|w| w[1].size() < w[0].size());
            verdict(kind, sizes_ok && recursive.as_ref() == Ok(&direct), || {
                mismatch(direct, format!("{recursive:?}"))
            })
        }
        "core_preserved_mullineux_tr" => {
            // X_b = M_b Tr fixes the core; M_b itself transposes it.
            let (x, _) = mullineux_transpose(lambda, b).expect("b-regular input");
            core_and_weight_agree(kind, lambda, &x, b)
        }
        "dominance_reversal" => {
            // Only run once per λ, against every μ of the same size.
            if b != 2 {
                return Outcome::skipped();
            }
            let lt = lambda.transpose();
            let bad = enumerate_partitions(lambda.size())
                .find(|mu| lambda.dominated_by(mu) != mu.transpose().dominated_by(&lt));
            verdict(kind, bad.is_none(), || Some(Witness::Note(format!("against {}", bad.unwrap()))))
        }
        _ => unreachable!("unknown statement {kind}"),
    }
}

/// The partition with row lengths `first ⊕ rest`, if that is one.
fn prepend_row(first: usize, rest: &Partition) -> Option<Partition> {
    let mut rows = vec![first];
    rows.extend_from_slice(rest.parts());
    Partition::new(rows).ok()
}

fn check_per_pair(lambda: &Partition, p: AbParams, kind: &'static str) -> Outcome {
    let b = p.b();
    match kind {
        "cr_validity_lemma" => {
            let (x, y) = (is_cr_valid(lambda, p), is_cr_valid_lemma(lambda, p));
            verdict(kind, x == y, || mismatch(x, y))
        }
        "reg_dual_route" => {
            let (x, y) = (reg(lambda, p), reg_via_transpose(lambda, p));
            verdict(kind, x == y, || mismatch(&y, &x))
        }
        "shallow_steep_bound" => {
            let both = divisible_hooks(lambda, b).find(|h| {
                let c = classify_hook(h, p);
                c.shallow && c.steep
            });
            verdict(kind, both.is_none() || b < 2 * p.a(), || both.map(|h| Witness::Hook(h.corner)))
        }
        "a1_degeneration" => {
            if p.a() != 1 {
                return Outcome::skipped();
            }
            let cr_ok = is_cr_valid(lambda, p);
            let regular = is_ab_regular(lambda, p) == lambda.is_b_regular(b);
            verdict(kind, cr_ok && regular, || {
                Some(Witness::Note(format!("cr_valid={cr_ok}, regular agreement={regular}")))
            })
        }
        "ab_regular_is_b_regular" => {
            if !is_ab_regular(lambda, p) {
                return Outcome::skipped();
            }
            verdict(kind, lambda.is_b_regular(b), || None)
        }
        "core_preserved_reg" => {
            let Some(rho) = reg(lambda, p).as_partition() else {
                return Outcome::skipped();
            };
            core_and_weight_agree(kind, lambda, &rho, b)
        }
        _ if !is_cr_valid(lambda, p) => Outcome::skipped(),
        "core_preserved_cr" => {
            let cr = colreg(lambda, p).as_partition().expect("Cr-valid");
            core_and_weight_agree(kind, lambda, &cr, b)
        }
        "cr_recursion" => check_cr_recursion(kind, lambda, p),
        "cr_recursion_shape32_free" => {
            if has_shape32_hook(lambda, p) {
                return Outcome::skipped();
            }
            check_cr_recursion(kind, lambda, p)
        }
        "ladders_gain_where_empty" => {
            if has_shape32_hook(lambda, p) {
                return Outcome::skipped();
            }
            let bad = (1..=lambda.row(1)).find(|&y| {
                let rungs = ladder_through(1, y as i64, p, false);
                match rungs.iter().find(|&&c| !lambda.contains(c)) {
                    None => false,
                    Some(c) => c.row < 2 || !lambda.contains(BoxCoord::new(c.row - 1, c.col)),
                }
            });
            verdict(kind, bad.is_none(), || bad.map(|y| Witness::Hook(BoxCoord::new(1, y))))
        }
        "colseg_j" => {
            if !lambda.is_b_regular(b) || has_shape32_hook(lambda, p) {
                return Outcome::skipped();
            }
            check_colseg_j(lambda, p)
        }
        _ => unreachable!("unknown statement {kind}"),
    }
}

fn core_and_weight_agree(kind: &str, lambda: &Partition, image: &Partition, b: usize) -> Outcome {
    let x = (core_b(lambda, b).expect("b >= 2"), b_weight(lambda, b).expect("b >= 2"));
    let y = (core_b(image, b).expect("b >= 2"), b_weight(image, b).expect("b >= 2"));
    verdict(kind, x == y, || mismatch(format!("{} w{}", x.0, x.1), format!("{} w{}", y.0, y.1)))
}

/// `λ^{Cr} = (|λ| - |λ^{Sr}|) ⊕ λ^{Sr Cr}`, and iterating `Sr` rebuilds `λ^{Cr}`
/// row by row.
fn check_cr_recursion(kind: &str, lambda: &Partition, p: AbParams) -> Outcome {
    let cr = colreg(lambda, p).as_partition().expect("Cr-valid");
    let sr = match semireg(lambda, p) {
        Ok(sr) => sr,
        Err(e) => return fail(kind, Some(Witness::Note(e.to_string()))),
    };
    let Some(sr_cr) = colreg(&sr, p).as_partition() else {
        return fail(kind, Some(Witness::Note(format!("Sr gave {sr}, which is not Cr-valid"))));
    };
    if lambda.is_empty() {
        return verdict(kind, sr.is_empty(), || mismatch("0", &sr));
    }
    let one_step = prepend_row(lambda.size() - sr.size(), &sr_cr);
    if one_step.as_ref() != Some(&cr) {
        return fail(kind, mismatch(&cr, format!("{one_step:?}")));
    }
    let mut rows = Vec::new();
    let mut current = lambda.clone();
    while !current.is_empty() {
        let next = match semireg(&current, p) {
            Ok(next) => next,
            Err(e) => return fail(kind, Some(Witness::Note(e.to_string()))),
        };
        rows.push(current.size() - next.size());
        current = next;
    }
    verdict(kind, rows == cr.parts(), || mismatch(&cr, format!("{rows:?}")))
}

/// `λ^{Sr} = (λ^{J_b})_{[1,ψ]} ⊕ λ_{[ψ+2, l]}`.
fn check_colseg_j(lambda: &Partition, p: AbParams) -> Outcome {
    let kind = "colseg_j";
    let sr = semireg(lambda, p).expect("Cr-valid");
    let expected = colseg_j_prediction(lambda, p);
    verdict(kind, expected.as_ref() == Some(&sr), || mismatch(format!("{expected:?}"), sr))
}

/// The right-hand side of the `Sr`/`J_b` identity, when it is a partition.
pub fn colseg_j_prediction(lambda: &Partition, p: AbParams) -> Option<Partition> {
    let (_, psi) = omega_psi(lambda, p).ok()?;
    let head = if lambda.is_empty() {
        Partition::empty()
    } else {
        j_b(lambda, p.b()).ok()?.rows(1, psi)
    };
    head.concat(&lambda.rows(psi + 2, lambda.len())).ok()
}

/// Runs every cross-module identity over all `λ` with `|λ| <= n_max` and, as
/// applicable, every `2 <= b <= b_max` or every pair `1 <= a < b <= b_max`.
pub fn brute_force_cross_checks(n_max: usize, b_max: usize, jobs: usize) -> Result<VerificationReport> {
    if b_max < 2 {
        return Err(Error::InvalidModulus(b_max));
    }
    let pairs = validate_pairs(&all_pairs(b_max))?;
    let statements: Vec<&'static str> = PER_B.iter().chain(PER_PAIR).copied().collect();
    run_scan("selftest", n_max, &pairs, &statements, jobs, |c| {
        if PER_B.contains(&c.statement) {
            // Per-b statements run once per b, on the pair (1, b).
            if c.params.a() != 1 {
                return Outcome::skipped();
            }
            check_per_b(c.lambda, c.params.b(), c.statement)
        } else {
            check_per_pair(c.lambda, c.params, c.statement)
        }
    })
}
