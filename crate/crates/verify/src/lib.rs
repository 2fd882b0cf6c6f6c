//! The verification surface of the kernel: a catalog of named checks, a
//! configurable runner producing a [`Report`], an expression parser for
//! ad-hoc reductions, and the `verify` command-line tool.

pub mod checks;
pub mod config;
pub mod expr;
pub mod report;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use daha_core::ncalg::DahaAlgebra;
use daha_core::params::{random_point, ParamValues, Params, DEFAULT_GENERICITY_BOUND};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub use checks::{catalog, Bounds, CheckInfo, Instance};
pub use config::{CheckMode, Config, ConfigError, Format, Selection, Settings};
pub use expr::{parse_expression, parse_expression_with, ParseError};
pub use report::{emit_report, CheckResult, Overall, Report, Verdict};

/// A 64-bit stream seed derived from the run seed and a label, so that each
/// check sees the same random choices however the selection is filtered.
pub fn derive_seed(seed: u64, label: &str) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in label.bytes() {
        h = (h ^ b as u64).wrapping_mul(0x0000_0100_0000_01b3);
    }
    // splitmix64 finalizer
    let mut z = h ^ seed.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// The selected catalog entries, in catalog order. An id ending in `.*`
/// selects every id with that prefix.
pub fn select(selection: &Selection) -> Result<Vec<CheckInfo>, ConfigError> {
    let all = catalog();
    let Selection::Ids(ids) = selection else { return Ok(all) };
    for id in ids {
        let hit = match id.strip_suffix('*') {
            Some(prefix) => all.iter().any(|c| c.id.starts_with(prefix)),
            None => all.iter().any(|c| &c.id == id),
        };
        if !hit {
            return Err(ConfigError::UnknownCheck(id.clone()));
        }
    }
    let wanted = |c: &CheckInfo| {
        ids.iter().any(|id| match id.strip_suffix('*') {
            Some(prefix) => c.id.starts_with(prefix),
            None => &c.id == id,
        })
    };
    Ok(all.into_iter().filter(wanted).collect())
}

fn params_echo(config: &Config) -> String {
    let mode = match config.mode {
        CheckMode::Exact => "exact",
        CheckMode::Prob => "prob",
    };
    format!(
        "{}; mode={}; trials={}; max-mn={}; max-degree={}; max-n={}",
        config.params.echo(),
        mode,
        config.trials,
        config.max_mn,
        config.max_degree,
        config.max_n
    )
}

/// Parameter instances, built on first use and shared between checks.
struct Instances {
    given: Instance,
    trials: Vec<std::cell::OnceCell<Instance>>,
    seed: u64,
}

impl Instances {
    fn trial(&self, i: usize) -> Result<&Instance, daha_core::Error> {
        if let Some(inst) = self.trials[i].get() {
            return Ok(inst);
        }
        let mut rng = ChaCha8Rng::seed_from_u64(derive_seed(self.seed, &format!("trial-point-{i}")));
        let point = random_point(&mut rng, DEFAULT_GENERICITY_BOUND);
        let inst = Instance::new(Params::from_point(&point)?);
        Ok(self.trials[i].get_or_init(|| inst))
    }
}

fn panic_message(p: Box<dyn std::any::Any + Send>) -> String {
    match p.downcast::<String>() {
        Ok(s) => format!("panic: {s}"),
        Err(p) => match p.downcast::<&str>() {
            Ok(s) => format!("panic: {s}"),
            Err(_) => "panic".into(),
        },
    }
}

/// Runs every selected check. Failures and errors of individual checks are
/// recorded in the report; only an invalid configuration is an error.
pub fn run_checks(config: &Config) -> Result<Report, ConfigError> {
    let selected = select(&config.checks)?;
    let bounds = Bounds { max_mn: config.max_mn, max_degree: config.max_degree, max_n: config.max_n };
    let specialized = config.params.assignments().is_some();
    let instances = Instances {
        given: Instance::new(config.params.clone()),
        trials: (0..config.trials).map(|_| std::cell::OnceCell::new()).collect(),
        seed: config.seed,
    };
    let symbolic = DahaAlgebra::new(ParamValues::symbolic());
    let mut results = Vec::with_capacity(selected.len());
    for info in &selected {
        let start = Instant::now();
        let random = !specialized && (config.mode == CheckMode::Prob || info.heavy);
        let count = if random { config.trials } else { 1 };
        let mut job = checks::Job {
            bounds,
            rng: ChaCha8Rng::seed_from_u64(derive_seed(config.seed, &info.id)),
            symbolic: &symbolic,
        };
        let mut verdict = Verdict::Pass;
        let mut summary = String::new();
        for i in 0..count {
            let outcome = catch_unwind(AssertUnwindSafe(|| {
                let inst = if random { instances.trial(i)? } else { &instances.given };
                checks::run_check(info.kind, inst, &mut job)
            }));
            let at = if random { format!("point {i}: ") } else { String::new() };
            match outcome {
                Ok(Ok(None)) => {}
                Ok(Ok(Some(s))) => {
                    verdict = Verdict::Fail;
                    summary = format!("{at}{s}");
                }
                Ok(Err(e)) => {
                    verdict = Verdict::Error;
                    summary = format!("{at}{e}");
                }
                Err(p) => {
                    verdict = Verdict::Error;
                    summary = format!("{at}{}", panic_message(p));
                }
            }
            if verdict != Verdict::Pass {
                break;
            }
        }
        results.push(CheckResult {
            id: info.id.clone(),
            verdict,
            residual_summary: summary,
            trials: if random { count as u64 } else { 0 },
            elapsed_ms: start.elapsed().as_millis() as u64,
        });
    }
    Ok(Report::new(params_echo(config), config.seed, results))
}

/// The id -> statement table printed by `verify catalog`.
pub fn catalog_table() -> String {
    let cat = catalog();
    let width = cat.iter().map(|c| c.id.len()).max().unwrap_or(0);
    cat.iter()
        .map(|c| {
            let heavy = if c.heavy { " [random points when symbolic]" } else { "" };
            format!("{:width$}  {}{}\n", c.id, c.description, heavy)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn config(ids: &[&str]) -> Config {
        Config { checks: Selection::Ids(ids.iter().map(|s| s.to_string()).collect()), ..Config::default() }
    }

    #[test]
    fn filtering() {
        let mut c = config(&["casimir.scalar"]);
        c.max_degree = 4;
        let r = run_checks(&c).unwrap();
        assert_eq!(r.results.len(), 1);
        assert_eq!(r.results[0].verdict, Verdict::Pass);
        assert!(r.passed());
        assert_eq!(select(&Selection::Ids(vec!["step.sym.exact.*".into()])).unwrap().len(), 4);
        assert!(matches!(run_checks(&config(&["embed.rel34"])), Err(ConfigError::UnknownCheck(_))));
    }

    #[test]
    fn heavy_checks_use_random_points() {
        let mut c = config(&["recurrence", "idempotents"]);
        c.trials = 2;
        c.max_degree = 2;
        let r = run_checks(&c).unwrap();
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.results[0].id, "idempotents");
        assert_eq!(r.results[0].trials, 0);
        assert_eq!(r.results[1].trials, 2);
    }

    #[test]
    fn seeds_separate_streams() {
        assert_ne!(derive_seed(1, "a"), derive_seed(1, "b"));
        assert_ne!(derive_seed(1, "a"), derive_seed(2, "a"));
        assert_eq!(derive_seed(5, "x"), derive_seed(5, "x"));
    }

    #[test]
    fn table_lists_every_check() {
        assert_eq!(catalog_table().lines().count(), catalog().len());
    }
}
