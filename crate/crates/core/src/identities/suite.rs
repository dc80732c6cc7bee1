use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::report::{Verdict, VerificationReport};
use super::{verify, Identity};
use crate::algebra::Index;
use crate::error::Result;
use crate::modular::PrimeRange;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteConfig {
    pub range: PrimeRange,
    /// Instances with a weight above this are left out.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_weight: Option<u32>,
    pub instances: Vec<Identity>,
}

impl SuiteConfig {
    pub fn new(range: PrimeRange, instances: Vec<Identity>) -> Self {
        Self {
            range,
            max_weight: None,
            instances,
        }
    }

    /// Every catalog id at its default parameter grid.
    pub fn default_for(range: PrimeRange) -> Self {
        Self::new(range, default_instances())
    }

    /// Instances that survive the weight filter, in configuration order.
    pub fn selected(&self) -> Vec<&Identity> {
        self.instances
            .iter()
            .filter(|i| match (self.max_weight, i.weight()) {
                (Some(max), Some(w)) => w <= max,
                _ => true,
            })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub config: SuiteConfig,
    pub reports: Vec<VerificationReport>,
    pub passed: usize,
    pub failed: usize,
    pub verdict: Verdict,
}

/// Indices of depth at most `max_depth` and weight at most `max_weight`,
/// including the empty index.
fn small_indices(max_weight: u32, max_depth: usize) -> Vec<Index> {
    let mut out = vec![Vec::new()];
    let mut frontier = vec![Vec::<u32>::new()];
    while let Some(prefix) = frontier.pop() {
        if prefix.len() == max_depth {
            continue;
        }
        let used: u32 = prefix.iter().sum();
        for k in 1..=max_weight.saturating_sub(used) {
            let mut next = prefix.clone();
            next.push(k);
            out.push(next.clone());
            frontier.push(next);
        }
    }
    let mut out: Vec<Index> = out
        .into_iter()
        .map(|e| Index::new(e).expect("positive"))
        .collect();
    out.sort();
    out
}

/// The parameter grids of the project's acceptance run.
pub fn default_instances() -> Vec<Identity> {
    let mut v = Vec::new();
    let lm_pairs = |max: u32| {
        (0..=max / 2)
            .flat_map(move |l| (0..=max - 2 * l).map(move |m| (l, m)))
            .filter(|&(l, m)| (l, m) != (0, 0))
            .collect::<Vec<_>>()
    };
    for (l, m) in lm_pairs(5) {
        v.push(Identity::Mt1 { l, m });
        v.push(Identity::Mt2 { l, m });
    }
    for (a, b, c) in [(1, 3, 2), (1, 5, 2), (3, 3, 4)] {
        for l in 0..=3 {
            for m in 0..=(3 - l) {
                if (l, m) != (0, 0) {
                    v.push(Identity::Sw { a, b, c, l, m });
                    v.push(Identity::SwStar { a, b, c, l, m });
                }
            }
        }
    }
    for l in 0..=4 {
        for m in 0..=5 {
            v.push(Identity::Muneta { l, m });
        }
    }
    let indices = small_indices(6, 2);
    for k in &indices {
        for l in &indices {
            if k.weight() + l.weight() <= 6 {
                v.push(Identity::ShuffleA2 {
                    k: k.clone(),
                    l: l.clone(),
                });
            }
        }
    }
    for r in 1..=6 {
        v.push(Identity::Zc { r });
        v.push(Identity::ZcStar { r });
    }
    for a in 0..=4 {
        for b in 0..=(4 - a) {
            v.push(Identity::TwoThree { a, b });
        }
    }
    for (l, m) in lm_pairs(4) {
        v.push(Identity::Aaa { l, m });
        v.push(Identity::Yam { l, m });
    }
    for l in 0..=40 {
        for m in 0..=40 {
            v.push(Identity::Vdm1 { l, m });
            v.push(Identity::Vdm2 { l, m });
        }
    }
    v.push(Identity::Wolstenholme);
    v
}

/// Runs every selected instance; reports keep configuration order.
pub fn run_suite(config: &SuiteConfig) -> Result<SuiteReport> {
    let selected = config.selected();
    for i in &selected {
        i.validate()?;
    }
    let reports = selected
        .par_iter()
        .map(|i| verify(i, &config.range))
        .collect::<Result<Vec<_>>>()?;
    let passed = reports.iter().filter(|r| r.passed()).count();
    let failed = reports.len() - passed;
    Ok(SuiteReport {
        config: SuiteConfig {
            instances: selected.into_iter().cloned().collect(),
            ..config.clone()
        },
        reports,
        passed,
        failed,
        verdict: Verdict::from_pass(failed == 0),
    })
}
