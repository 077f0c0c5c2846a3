//! Exhaustive machine checks for every structural statement the library
//! relies on, each over a configurable finite range, with structured
//! pass/fail reports.
//!
//! Every suite is deterministic: inputs are enumerated in a fixed order,
//! so two runs with the same parameters produce byte-identical reports.
//! Counterexample lists are capped at [`COUNTEREXAMPLE_CAP`] entries while
//! `failures_total` keeps the true count.

use std::fmt;

use serde::Serialize;

use crate::peterson::{
    degree_check, homology_transport, phi_grassmannian, phi_index, HomologyImage, PetersonContext,
};
use crate::rootdata::{LatticeVector, RootSystemC};
use crate::shapes::{
    bracket_xi, enumerate_pc, enumerate_sp, remove_first_row, star, truncate, u_of, u_of_index,
    v_of, v_of_index, x_of, xi_of,
};
use crate::weyl::{bfs_enumerate, default_bfs_cap, min_coset_rep, AffineElement, SignedPermutation};

pub const COUNTEREXAMPLE_CAP: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub input: String,
    pub expected: String,
    pub actual: String,
}

/// Outcome of one verification suite.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub n: usize,
    pub bound: String,
    pub cases: usize,
    pub failures_total: usize,
    pub failures: Vec<Failure>,
}

impl CheckReport {
    fn new(name: &str, n: usize, bound: String) -> Self {
        CheckReport {
            name: name.to_string(),
            n,
            bound,
            cases: 0,
            failures_total: 0,
            failures: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures_total == 0
    }

    fn fail(&mut self, input: String, expected: String, actual: String) {
        self.failures_total += 1;
        if self.failures.len() < COUNTEREXAMPLE_CAP {
            self.failures.push(Failure { input, expected, actual });
        }
    }

    fn record_eq<T: PartialEq + fmt::Debug>(&mut self, input: impl fmt::Display, expected: &T, actual: &T) {
        self.cases += 1;
        if expected != actual {
            self.fail(input.to_string(), format!("{expected:?}"), format!("{actual:?}"));
        }
    }

    fn record(&mut self, input: impl fmt::Display, ok: bool, expected: &str, actual: &str) {
        self.cases += 1;
        if !ok {
            self.fail(input.to_string(), expected.to_string(), actual.to_string());
        }
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            write!(f, "PASS {} (n={}, {}): {} cases", self.name, self.n, self.bound, self.cases)?;
        } else {
            write!(
                f,
                "FAIL {} (n={}, {}): {}/{} cases failed",
                self.name, self.n, self.bound, self.failures_total, self.cases
            )?;
            for fl in &self.failures {
                write!(
                    f,
                    "\n  input={} expected={} actual={}",
                    fl.input, fl.expected, fl.actual
                )?;
            }
            if self.failures_total > self.failures.len() {
                write!(f, "\n  ... and {} more", self.failures_total - self.failures.len())?;
            }
        }
        Ok(())
    }
}

/// Counting and injectivity of the partition parametrization of the
/// length-graded Grassmannian elements, against the BFS oracle.
pub fn check_bijection(n: usize, max_weight: usize) -> CheckReport {
    let mut report = CheckReport::new("bijection", n, format!("max_weight={max_weight}"));
    let sys = RootSystemC::new(n);
    let partitions = enumerate_pc(sys, max_weight);

    let elems = match bfs_enumerate(sys, max_weight, default_bfs_cap()) {
        Ok(e) => e,
        Err(err) => {
            report.record("bfs", false, "enumeration within state cap", &err.to_string());
            return report;
        }
    };
    let mut grassmannian_counts = vec![0usize; max_weight + 1];
    for (x, d) in &elems {
        if x.is_grassmannian() {
            grassmannian_counts[*d] += 1;
        }
    }
    let mut partition_counts = vec![0usize; max_weight + 1];
    for lambda in &partitions {
        partition_counts[lambda.weight()] += 1;
    }
    for weight in 0..=max_weight {
        report.record_eq(
            format!("count at weight {weight}"),
            &grassmannian_counts[weight],
            &partition_counts[weight],
        );
    }

    let mut seen = std::collections::HashMap::new();
    for lambda in &partitions {
        let x = x_of(lambda);
        report.record(
            format!("x_of({lambda}) Grassmannian"),
            x.is_grassmannian(),
            "true",
            "false",
        );
        report.record_eq(format!("length of x_of({lambda})"), &lambda.weight(), &x.length());
        if let Some(other) = seen.insert(x, lambda.clone()) {
            report.fail(
                format!("x_of({lambda})"),
                "distinct image".to_string(),
                format!("collides with x_of({other})"),
            );
        }
    }
    report
}

/// The finite/translation factorization `x_of(lambda) =
/// v_of(lambda) t_{-xi_of(lambda)}`.
pub fn check_decomposition(n: usize, max_weight: usize) -> CheckReport {
    let mut report = CheckReport::new("decomposition", n, format!("max_weight={max_weight}"));
    let sys = RootSystemC::new(n);
    for lambda in enumerate_pc(sys, max_weight) {
        let v = AffineElement::new(v_of(&lambda), LatticeVector::zero(n));
        let rhs = v.multiply(&AffineElement::translation(-&xi_of(&lambda)));
        report.record_eq(format!("lambda={lambda}"), &x_of(&lambda), &rhs);
    }
    report
}

/// The projection identity `[xi_of(lambda)] = number of parts`.
pub fn check_bracket(n: usize, max_weight: usize) -> CheckReport {
    let mut report = CheckReport::new("bracket", n, format!("max_weight={max_weight}"));
    let sys = RootSystemC::new(n);
    for lambda in enumerate_pc(sys, max_weight) {
        report.record_eq(
            format!("lambda={lambda}"),
            &(lambda.num_parts() as i64),
            &bracket_xi(&lambda),
        );
    }
    report
}

/// The two step rules for `xi_of(lambda) - xi_of(lambda minus its first
/// row)`, plus the closed coweight form when the first part is at most
/// `n + 1`.
pub fn check_translation_steps(n: usize, max_weight: usize) -> CheckReport {
    check_translation_steps_impl(n, max_weight, true)
}

fn check_translation_steps_impl(n: usize, max_weight: usize, index_mod_n: bool) -> CheckReport {
    let mut report = CheckReport::new("translation_steps", n, format!("max_weight={max_weight}"));
    let sys = RootSystemC::new(n);
    for lambda in enumerate_pc(sys, max_weight) {
        let Some(first) = lambda.first_part() else { continue };
        let diff = &xi_of(&lambda) - &xi_of(&remove_first_row(&lambda));
        if first <= n + 1 {
            let l = lambda.num_parts();
            let (s, r) = ((l / n) as i64, l % n);
            let closed = {
                let w = sys.fundamental_coweight(n);
                let twice_s: Vec<i64> = w.doubled().iter().map(|&t| 2 * s * t).collect();
                &LatticeVector::from_halves(twice_s) + &sys.fundamental_coweight(r)
            };
            report.record_eq(format!("closed form, lambda={lambda}"), &closed, &xi_of(&lambda));
            let idx = if r == 0 && index_mod_n { n } else { r };
            let expected = if idx == 0 {
                LatticeVector::zero(n)
            } else {
                LatticeVector::eps(n, idx)
            };
            report.record_eq(format!("step, lambda={lambda}"), &expected, &diff);
        } else {
            let ok = (1..n).any(|i| diff == LatticeVector::eps(n, i));
            report.record(
                format!("step, lambda={lambda}"),
                ok,
                "eps_i with 1 <= i <= n-1",
                &diff.to_string(),
            );
        }
    }
    report
}

/// Both product rewriting rules among the `u` and `v` elements
/// (`i^*` abbreviates `n + 1 - i`):
/// `u_{i*} u_{j*} = u_{(j+1)*} u_{i*} s_{n-1}` for `1 <= i <= j <= n-1`,
/// and `v_{n+1} u_{i*} = u_{(i-1)*} v_{n+2}` for `2 <= i <= n`.
pub fn check_commutations(n: usize) -> CheckReport {
    check_commutations_impl(n, true)
}

fn check_commutations_impl(n: usize, include_last_factor: bool) -> CheckReport {
    let mut report = CheckReport::new("commutations", n, "exhaustive".to_string());
    let sys = RootSystemC::new(n);
    let dual = |i: usize| n + 1 - i;
    for i in 1..n {
        for j in i..n {
            let lhs = u_of_index(sys, dual(i)).compose(&u_of_index(sys, dual(j)));
            let mut rhs = u_of_index(sys, dual(j + 1)).compose(&u_of_index(sys, dual(i)));
            if include_last_factor {
                rhs = rhs.compose(&SignedPermutation::simple(n, n - 1));
            }
            report.record_eq(format!("first rule, i={i} j={j}"), &lhs, &rhs);
        }
    }
    for i in 2..=n {
        let lhs = v_of_index(sys, n + 1).compose(&u_of_index(sys, dual(i)));
        let rhs = u_of_index(sys, dual(i - 1)).compose(&v_of_index(sys, n + 2));
        report.record_eq(format!("second rule, i={i}"), &lhs, &rhs);
    }
    report
}

/// Coset representatives of the `v` products: `min_coset_rep(v_of(mu)) =
/// u_of(star(mu))` over all `2^n` strict partitions.
pub fn check_mcr(n: usize) -> CheckReport {
    check_mcr_impl(n, true)
}

fn check_mcr_impl(n: usize, apply_star: bool) -> CheckReport {
    let mut report = CheckReport::new("mcr", n, "all strict partitions".to_string());
    for mu in enumerate_sp(RootSystemC::new(n)) {
        let rep = min_coset_rep(&v_of(&mu.to_pc()));
        let target = if apply_star { u_of(&star(&mu)) } else { u_of(&mu) };
        report.record_eq(format!("mu={mu}"), &target, &rep);
    }
    report
}

/// The first-row generators of the ideal map to zero: for a first part
/// `>= n+1`, the image of `lambda` at localization level `k` equals the
/// image of the row-removed partition at level `k - 1`.
pub fn check_kernel(n: usize, max_weight: usize) -> CheckReport {
    let mut report = CheckReport::new("kernel", n, format!("max_weight={max_weight}"));
    let ctx = PetersonContext::new(RootSystemC::new(n));
    for lambda in enumerate_pc(ctx.sys(), max_weight) {
        if lambda.first_part().is_some_and(|p| p > n) {
            let minus = remove_first_row(&lambda);
            for k in -2..=2 {
                report.record_eq(
                    format!("lambda={lambda} k={k}"),
                    &phi_index(&ctx, &lambda, k),
                    &phi_index(&ctx, &minus, k - 1),
                );
            }
        }
    }
    report
}

/// The element form and the index form of the map agree on every
/// `x_of(lambda)`.
pub fn check_phi_consistency(n: usize, max_weight: usize) -> CheckReport {
    let mut report = CheckReport::new("phi_consistency", n, format!("max_weight={max_weight}"));
    let ctx = PetersonContext::new(RootSystemC::new(n));
    for lambda in enumerate_pc(ctx.sys(), max_weight) {
        match phi_grassmannian(&ctx, &x_of(&lambda)) {
            Ok(pair) => {
                report.record_eq(format!("lambda={lambda}"), &phi_index(&ctx, &lambda, 0), &pair)
            }
            Err(err) => report.record(
                format!("lambda={lambda}"),
                false,
                "Grassmannian image",
                &err.to_string(),
            ),
        }
    }
    report
}

/// The coset criterion on `x_of(lambda)` holds exactly when the first part
/// is at most `n + 1`.
pub fn check_peterson_cosets(n: usize, max_weight: usize) -> CheckReport {
    let mut report = CheckReport::new("peterson_cosets", n, format!("max_weight={max_weight}"));
    let sys = RootSystemC::new(n);
    for lambda in enumerate_pc(sys, max_weight) {
        let expected = lambda.first_part().is_none_or(|p| p <= n + 1);
        report.record_eq(
            format!("lambda={lambda}"),
            &expected,
            &x_of(&lambda).is_peterson_rep(),
        );
    }
    report
}

/// The homology limit: zero exactly on first part `>= n + 2`, equivalently
/// exactly where the coset criterion fails; non-zero images carry
/// `q^{k - l(lambda)}` on `star(truncate(lambda))`.
pub fn check_homology_limit(n: usize, max_weight: usize) -> CheckReport {
    let mut report = CheckReport::new("homology_limit", n, format!("max_weight={max_weight}"));
    let ctx = PetersonContext::new(RootSystemC::new(n));
    for lambda in enumerate_pc(ctx.sys(), max_weight) {
        let k = lambda.num_parts() as i64;
        let image = homology_transport(&ctx, &lambda, k);
        let big = lambda.first_part().is_some_and(|p| p >= n + 2);
        report.record_eq(format!("zero case, lambda={lambda}"), &big, &(image == HomologyImage::Zero));
        report.record_eq(
            format!("coset equivalence, lambda={lambda}"),
            &(image == HomologyImage::Zero),
            &!x_of(&lambda).is_peterson_rep(),
        );
        if let HomologyImage::Class { q_exp, mu } = image {
            report.record_eq(format!("q exponent, lambda={lambda} k={k}"), &0, &q_exp);
            report.record_eq(
                format!("target class, lambda={lambda}"),
                &star(&truncate(&lambda)),
                &mu,
            );
        }
    }
    report
}

/// The closed length formula agrees with BFS distance on every element.
pub fn check_length_oracle(n: usize, max_len: usize) -> CheckReport {
    let mut report = CheckReport::new("length_oracle", n, format!("max_len={max_len}"));
    let sys = RootSystemC::new(n);
    match bfs_enumerate(sys, max_len, default_bfs_cap()) {
        Ok(elems) => {
            for (x, d) in elems {
                report.record_eq(format!("x={x}"), &d, &x.length());
            }
        }
        Err(err) => {
            report.record("bfs", false, "enumeration within state cap", &err.to_string());
        }
    }
    report
}

/// Degree bookkeeping of the homology limit over all partitions with
/// first part at most `n + 1`.
pub fn check_degree_reversal(n: usize, max_weight: usize) -> CheckReport {
    let mut report = CheckReport::new("degree_reversal", n, format!("max_weight={max_weight}"));
    let ctx = PetersonContext::new(RootSystemC::new(n));
    for lambda in enumerate_pc(ctx.sys(), max_weight) {
        if lambda.first_part().is_none_or(|p| p <= n + 1) {
            for k in [0i64, 5] {
                report.record(
                    format!("lambda={lambda} k={k}"),
                    degree_check(&ctx, &lambda, k),
                    "degrees cancel",
                    "degree mismatch",
                );
            }
        }
    }
    report
}

/// Bounds shared by [`run_all`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyBounds {
    pub max_weight: usize,
    pub max_len: usize,
}

impl Default for VerifyBounds {
    fn default() -> Self {
        VerifyBounds { max_weight: 10, max_len: 8 }
    }
}

pub const SUITE_NAMES: [&str; 12] = [
    "bijection",
    "decomposition",
    "bracket",
    "translation_steps",
    "commutations",
    "mcr",
    "kernel",
    "phi_consistency",
    "peterson_cosets",
    "homology_limit",
    "length_oracle",
    "degree_reversal",
];

/// Runs one suite by name.
pub fn run_suite(name: &str, n: usize, bounds: VerifyBounds) -> Option<CheckReport> {
    let report = match name {
        "bijection" => check_bijection(n, bounds.max_weight),
        "decomposition" => check_decomposition(n, bounds.max_weight),
        "bracket" => check_bracket(n, bounds.max_weight),
        "translation_steps" => check_translation_steps(n, bounds.max_weight),
        "commutations" => check_commutations(n),
        "mcr" => check_mcr(n),
        "kernel" => check_kernel(n, bounds.max_weight),
        "phi_consistency" => check_phi_consistency(n, bounds.max_weight),
        "peterson_cosets" => check_peterson_cosets(n, bounds.max_weight),
        "homology_limit" => check_homology_limit(n, bounds.max_weight),
        "length_oracle" => check_length_oracle(n, bounds.max_len),
        "degree_reversal" => check_degree_reversal(n, bounds.max_weight),
        _ => return None,
    };
    Some(report)
}

/// Runs every suite at rank `n` with the given bounds.
pub fn run_all(n: usize, bounds: VerifyBounds) -> Vec<CheckReport> {
    SUITE_NAMES
        .iter()
        .map(|name| run_suite(name, n, bounds).expect("known suite name"))
        .collect()
}

/// Human-readable rendering, one suite per block.
pub fn render_text(reports: &[CheckReport]) -> String {
    let mut out = String::new();
    for r in reports {
        out.push_str(&r.to_string());
        out.push('\n');
    }
    out
}

/// Stable JSON rendering (field order fixed by struct declaration).
pub fn render_json(reports: &[CheckReport]) -> String {
    serde_json::to_string_pretty(reports).expect("reports serialize")
}
