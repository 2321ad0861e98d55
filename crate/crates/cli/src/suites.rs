use clap::ValueEnum;
use maxmatch_core::extremal::{
    check_even_theorem_with, check_structural_theorems_with, min_psi_search_with,
    verify_lower_bound_with,
};
use maxmatch_core::verify::{self, RandomTrials, SuiteReport};
use maxmatch_core::{SearchConfig, Violation};
use serde::Serialize;
use serde_json::{json, Value};

use crate::commands::{emit, to_json};
use crate::error::CliError;
use crate::{Format, GlobalArgs};

/// Random trees added to the `signs` suite on top of the exhaustive part.
const SIGN_TRIALS: usize = 1_000;
const SIGN_TRIAL_MAX_ORDER: usize = 60;
const SIGN_TRIAL_ROOTS: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    /// psi(T) >= ceil(n/2) for every tree of order 2..=n_max
    Bound,
    /// Minimizers of each order 2..=n_max equal the predicted spiders
    Characterization,
    /// Structure of minimizers for orders 8..=n_max
    Structure,
    /// Leaf-stable trees have even order, orders 3..=n_max
    Even,
    /// DP agrees with brute-force enumeration; leaf-neighbor coverage
    Oracle,
    /// Sign inequalities and root invariance
    Signs,
}

impl Suite {
    fn min_order(self) -> usize {
        match self {
            Suite::Bound | Suite::Characterization => 2,
            Suite::Structure => 8,
            Suite::Even => 3,
            Suite::Oracle | Suite::Signs => 1,
        }
    }

    fn name(self) -> &'static str {
        match self {
            Suite::Bound => "bound",
            Suite::Characterization => "characterization",
            Suite::Structure => "structure",
            Suite::Even => "even",
            Suite::Oracle => "oracle",
            Suite::Signs => "signs",
        }
    }
}

/// Result of one suite run, in both renderings.
struct Outcome {
    pass: bool,
    summary: Vec<String>,
    violations: Vec<Violation>,
    reports: Vec<Value>,
}

impl Outcome {
    fn new() -> Self {
        Outcome {
            pass: true,
            summary: Vec::new(),
            violations: Vec::new(),
            reports: Vec::new(),
        }
    }

    fn add<T: Serialize>(
        &mut self,
        pass: bool,
        summary: String,
        violations: &[Violation],
        report: &T,
    ) {
        self.pass &= pass;
        self.summary.push(summary);
        self.violations.extend_from_slice(violations);
        self.reports
            .push(serde_json::to_value(report).expect("reports serialize"));
    }

    fn add_suite(&mut self, r: &SuiteReport) {
        let line = format!(
            "{}: {} checked, {} violations",
            r.suite,
            r.checked,
            r.violations.len()
        );
        self.add(r.pass, line, &r.violations, r);
    }
}

pub fn verify(g: &GlobalArgs, suite: Suite, n_max: usize) -> Result<bool, CliError> {
    let min = suite.min_order();
    if n_max < min {
        return Err(CliError::Input(format!(
            "{} needs n_max >= {min}, got {n_max}",
            suite.name()
        )));
    }
    let cap = g.cap_search.get();
    if n_max > cap {
        return Err(CliError::CapExceeded(format!(
            "n_max {n_max} is above the search cap {cap} (raise --cap-search)"
        )));
    }
    let cfg = SearchConfig { tree_cap: cap };
    let mut out = Outcome::new();

    match suite {
        Suite::Bound => {
            let r = verify_lower_bound_with(n_max, &cfg)?;
            for o in &r.orders {
                out.summary.push(format!(
                    "n={}: {} trees, min {} >= bound {}",
                    o.n, o.trees, o.min_psi, o.bound
                ));
            }
            let line = format!("{} trees checked", r.trees_checked);
            out.add(r.pass, line, &r.violations, &r);
        }
        Suite::Characterization => {
            for n in min..=n_max {
                let r = min_psi_search_with(n, &cfg)?;
                let legs: Vec<String> = r
                    .achievers
                    .iter()
                    .map(|a| match &a.legs {
                        Some(l) => format!("{l:?}"),
                        None => a.code.clone(),
                    })
                    .collect();
                let line = format!(
                    "n={n}: min {} (bound {}), achievers {}",
                    r.min_psi,
                    r.bound,
                    legs.join(" ")
                );
                out.add(r.pass, line, &r.violations, &r);
            }
        }
        Suite::Structure => {
            for n in min..=n_max {
                let r = check_structural_theorems_with(n, &cfg)?;
                let violations: Vec<Violation> = r
                    .checks
                    .iter()
                    .flat_map(|c| {
                        c.counterexamples
                            .iter()
                            .map(|code| Violation::new(code.clone(), c.name))
                    })
                    .collect();
                let line = format!("n={n}: {} minimizers", r.minimizers.len());
                out.add(r.pass, line, &violations, &r);
            }
        }
        Suite::Even => {
            for n in min..=n_max {
                let r = check_even_theorem_with(n, &cfg)?;
                let line = format!("n={n}: {} leaf-stable trees", r.qualifying.len());
                out.add(r.pass, line, &r.violations, &r);
            }
        }
        Suite::Oracle => {
            let oracle_cap = g.cap_oracle.get();
            if n_max > oracle_cap {
                return Err(CliError::CapExceeded(format!(
                    "n_max {n_max} is above the oracle cap {oracle_cap} (raise --cap-oracle)"
                )));
            }
            out.add_suite(&verify::oracle_equivalence(n_max, &cfg, oracle_cap)?);
            out.add_suite(&verify::leaf_neighbor_coverage(n_max, &cfg, oracle_cap)?);
        }
        Suite::Signs => {
            let trials = RandomTrials {
                count: SIGN_TRIALS,
                min_order: 1,
                max_order: SIGN_TRIAL_MAX_ORDER,
                seed: g.seed,
            };
            out.add_suite(&verify::sign_invariants(
                n_max,
                &cfg,
                Some((&trials, SIGN_TRIAL_ROOTS)),
            )?);
        }
    }

    let text = match g.format.unwrap_or(Format::Json) {
        Format::Json => to_json(&json!({
            "suite": suite,
            "n_max": n_max,
            "seed": g.seed,
            "pass": out.pass,
            "reports": out.reports,
            "violations": out.violations,
        })),
        Format::Text => {
            let mut s = format!("suite: {}\nn_max: {n_max}\n", suite.name());
            for line in &out.summary {
                s.push_str(&format!("  {line}\n"));
            }
            s.push_str(&format!("violations: {}\n", out.violations.len()));
            for v in &out.violations {
                s.push_str(&format!("  {} {}\n", v.code, v.detail));
            }
            s.push_str(if out.pass { "pass\n" } else { "FAIL\n" });
            s
        }
    };
    emit(g, &text)?;
    Ok(out.pass)
}
