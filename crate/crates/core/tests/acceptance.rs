//! Acceptance gate: one pass/fail line per criterion, all must pass.
//!
//! Each criterion is delegated to the matching verification suite so the
//! CLI `verify` subcommand and this gate can never drift apart; the gate
//! additionally enforces the runtime budgets.

use std::time::{Duration, Instant};

use wqfs::verify::{run_verify, SuiteReport, VerifyConfig};

struct Gate {
    failures: Vec<String>,
}

impl Gate {
    fn new() -> Self {
        Gate { failures: Vec::new() }
    }

    /// Runs one suite under the default full-size config, applies the
    /// optional runtime budget, prints the criterion line.
    fn criterion(
        &mut self,
        number: u32,
        label: &str,
        suite: &str,
        budget: Option<Duration>,
        extra: impl FnOnce(&SuiteReport) -> Option<String>,
    ) {
        let config = VerifyConfig {
            suites: Some(vec![suite.to_string()]),
            ..VerifyConfig::default()
        };
        let start = Instant::now();
        let outcome = run_verify(&config);
        let elapsed = start.elapsed();
        let problem: Option<String> = match &outcome {
            Err(e) => Some(format!("harness error: {e}")),
            Ok(report) => {
                let s = &report.suites[0];
                if let Some(e) = &s.error {
                    Some(format!("suite error: {e}"))
                } else if s.violations > 0 {
                    Some(format!(
                        "{} violation(s), witness: {}",
                        s.violations,
                        s.witness.as_deref().unwrap_or("-")
                    ))
                } else if budget.map_or(false, |b| elapsed > b) {
                    Some(format!("over budget: {elapsed:.2?}"))
                } else {
                    extra(s)
                }
            }
        };
        match problem {
            None => println!("criterion {number:2} [{label}]: PASS ({elapsed:.2?})"),
            Some(why) => {
                println!("criterion {number:2} [{label}]: FAIL ({elapsed:.2?}) — {why}");
                self.failures.push(format!("criterion {number}: {why}"));
            }
        }
    }
}

fn no_extra(_: &SuiteReport) -> Option<String> {
    None
}

#[test]
fn acceptance() {
    let mut gate = Gate::new();
    gate.criterion(
        1,
        "character engine: orthogonality, dimensions, Σd² = n!, n ≤ 8",
        "char_orthogonality",
        Some(Duration::from_secs(10)),
        no_extra,
    );
    gate.criterion(
        2,
        "D_G = 2(1 − 1/n!) for the full symmetric group, n = 3..7",
        "dg_closed_form",
        None,
        no_extra,
    );
    gate.criterion(
        3,
        "strict bound sandwich on 200 seeded random 2-generator subgroups",
        "prop1_sandwich",
        Some(Duration::from_secs(300)),
        |s| (s.instances < 200).then(|| format!("only {} subgroups tested", s.instances)),
    );
    gate.criterion(
        4,
        "exact conjugation invariance of D_H on 50 seeded pairs",
        "conjugation_invariance",
        None,
        |s| (s.instances < 50).then(|| format!("only {} pairs tested", s.instances)),
    );
    gate.criterion(
        5,
        "D_H equals Σ_λ|P_H − P_1| exactly on every tested subgroup",
        "sampling_identity",
        None,
        no_extra,
    );
    gate.criterion(
        6,
        "order-vs-minimal-degree bound over all families, exact integers",
        "theorem_a",
        None,
        no_extra,
    );
    gate.criterion(
        7,
        "coding dictionary on 100 seeded random codes, ℓ ≤ 16, k ≤ 10",
        "code_dictionary",
        None,
        |s| (s.instances < 100).then(|| format!("only {} codes tested", s.instances)),
    );
    gate.criterion(
        8,
        "2-subset action: primitive, m = 2(l−2), m ≥ (√n − 1)/2, l = 5..7",
        "babai_primitive",
        None,
        no_extra,
    );
    gate.criterion(
        9,
        "involution family: D_H strictly decreasing and below the class bound",
        "fpf_family",
        None,
        no_extra,
    );
    gate.criterion(
        10,
        "sampler: 10^5 draws for the trivial subgroup of S_6, TV < 0.02",
        "sampler_fidelity",
        None,
        no_extra,
    );
    gate.criterion(
        11,
        "binomial product inequality, exhaustive for x + y ≤ n ≤ 60",
        "binomial",
        Some(Duration::from_secs(10)),
        no_extra,
    );
    gate.criterion(
        12,
        "smallest support-k class is (2^{k/2}, 1^{n−k}); constant reported",
        "min_class_structure",
        None,
        |s| {
            match s.empirical.get("min_ratio").and_then(|r| r.parse::<f64>().ok()) {
                Some(r) if r > 0.0 => None,
                _ => Some("missing or nonpositive reported constant".into()),
            }
        },
    );
    gate.criterion(
        13,
        "weight bound |H_k| ≤ C(n,k)^{1/2}(k!)^{1/4} on derivable families; ε̂ and (D_H, m) reported",
        "theorem_bc",
        None,
        |s| {
            let has_eps = s.empirical.keys().any(|k| k.ends_with(".eps_hat"));
            let has_dhm = s.empirical.keys().any(|k| k.ends_with(".dh_m"));
            (!(has_eps && has_dhm)).then(|| "missing empirical reports".to_string())
        },
    );
    assert!(
        gate.failures.is_empty(),
        "acceptance failures:\n{}",
        gate.failures.join("\n")
    );
}
