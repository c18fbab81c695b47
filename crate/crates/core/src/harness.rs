//! Instance generation, end-to-end equivalence verification by brute force,
//! and parameter-blowup reporting: the experiment driver behind the CLI and
//! the acceptance suite.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::compose::{compose, ComposeOutput, Strategy};
use crate::construct::Instance;
use crate::error::Error;
use crate::graph::Graph;
use crate::host::gnp_half;
use crate::ramsey::RamseyTable;
use crate::solve::{brute_force_clique, brute_force_homogeneous, clique_number, independence_number};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Target {
    Yes,
    No,
}

/// Default retry budget for rejection sampling.
pub const DEFAULT_RETRY_BUDGET: usize = 20_000;

/// Smallest instance size the generator defaults to for a given k: 5 for
/// k=3 (no smaller scale admits alpha = omega = 2 together with both
/// witnesses at n <= 4 reliably across targets) and 2k-2 otherwise.
pub fn default_instance_n(k: usize) -> usize {
    if k == 3 {
        5
    } else {
        2 * k - 2
    }
}

fn splitmix(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    x = (x ^ (x >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    x ^ (x >> 31)
}

/// Derives a stream of independent sub-seeds from a master seed.
pub fn derive_seed(master: u64, stream: u64, index: u64) -> u64 {
    splitmix(master ^ splitmix(stream ^ splitmix(index)))
}

fn plant(g: &Graph, clique: &[usize], independent: &[usize]) -> Graph {
    let mut edges: Vec<(usize, usize)> = g
        .edges()
        .into_iter()
        .filter(|&(u, v)| {
            !(independent.contains(&u) && independent.contains(&v))
        })
        .collect();
    for (i, &u) in clique.iter().enumerate() {
        for &v in &clique[i + 1..] {
            if !edges.contains(&(u.min(v), u.max(v))) {
                edges.push((u.min(v), u.max(v)));
            }
        }
    }
    Graph::from_edges(g.n(), &edges).expect("planting preserves simplicity")
}

/// Generates a legal refinement instance by seeded rejection sampling,
/// certified by the brute-force oracle: target=no means both clique and
/// independence number are exactly k-1; target=yes additionally contains a
/// k-homogeneous set. Witnesses are attached. When rejection stalls past
/// half the budget, a (k-1)-clique and (k-1)-independent set are planted on
/// disjoint blocks before certification.
pub fn gen_refinement_instance(
    n: usize,
    k: usize,
    target: Target,
    seed: u64,
) -> Result<Instance, Error> {
    gen_refinement_instance_with_budget(n, k, target, seed, DEFAULT_RETRY_BUDGET)
}

pub fn gen_refinement_instance_with_budget(
    n: usize,
    k: usize,
    target: Target,
    seed: u64,
    budget: usize,
) -> Result<Instance, Error> {
    assert!(k >= 3, "generator serves the k >= 3 composition path");
    use rand::SeedableRng;
    for attempt in 0..budget {
        let mut rng =
            rand_chacha::ChaCha8Rng::seed_from_u64(derive_seed(seed, 0xA11CE, attempt as u64));
        let mut g = gnp_half(n, &mut rng);
        if attempt >= budget / 2 && n >= 2 * k - 2 {
            let clique: Vec<usize> = (0..k - 1).collect();
            let independent: Vec<usize> = (k - 1..2 * k - 2).collect();
            g = plant(&g, &clique, &independent);
        }
        let clique = brute_force_clique(&g, k - 1, false)?;
        let independent = brute_force_clique(&g.complement(), k - 1, false)?;
        let (Some(clique), Some(independent)) = (clique, independent) else {
            continue;
        };
        let has_k = brute_force_homogeneous(&g, k, false)?.is_some();
        let accept = match target {
            Target::No => !has_k,
            Target::Yes => has_k,
        };
        if accept {
            return Ok(Instance {
                graph: g,
                k,
                witnesses: Some(crate::construct::RefinementWitnesses { clique, independent }),
            });
        }
    }
    Err(Error::RetryBudgetExhausted {
        budget,
        n,
        k,
        target: format!("{target:?}").to_lowercase(),
    })
}

/// One composed-and-verified trial.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct TrialRecord {
    pub trial: usize,
    pub targets: Vec<Target>,
    pub input_or: bool,
    pub composed_answer: bool,
    pub k_prime: usize,
    pub ell: usize,
    pub g_prime_vertices: usize,
    /// Set on all-no trials: the maximum homogeneous set size of the
    /// composed graph equals ell * (2k-2) exactly.
    pub exact_floor_holds: Option<bool>,
    pub agree: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct VerificationReport {
    pub t: usize,
    pub k: usize,
    pub strategy: String,
    pub seed: u64,
    pub n_per_instance: usize,
    pub records: Vec<TrialRecord>,
    pub passes: usize,
    pub failures: usize,
}

impl VerificationReport {
    pub fn all_pass(&self) -> bool {
        self.failures == 0 && self.passes == self.records.len()
    }

    /// Canonical JSON bytes; bit-reproducible for fixed inputs.
    pub fn to_canonical_json(&self) -> Vec<u8> {
        serde_json::to_vec_pretty(self).expect("report serializes")
    }
}

fn max_homogeneous(g: &Graph) -> usize {
    clique_number(g).max(independence_number(g))
}

/// Default cap on the composed graph size that verification will solve.
pub const DEFAULT_FEASIBILITY_CAP: usize = 80;

/// Runs `trials` random yes/no mixes (trial 0 all-no, trial 1 exactly one
/// yes, the rest random), composes each, decides both sides, and records
/// agreement. All-no trials additionally check the exact floor
/// ell * (2k-2).
pub fn verify_composition(
    t: usize,
    k: usize,
    strategy: &Strategy,
    trials: usize,
    seed: u64,
    n_per_instance: Option<usize>,
    cap: usize,
) -> Result<VerificationReport, Error> {
    assert!(k >= 3 && t >= 1 && trials >= 1);
    let n = n_per_instance.unwrap_or_else(|| default_instance_n(k));
    let table = RamseyTable::shipped();

    let trial_plans: Vec<(usize, Vec<Target>)> = (0..trials)
        .map(|trial| {
            let targets: Vec<Target> = match trial {
                0 => vec![Target::No; t],
                1 => {
                    let yes_at = derive_seed(seed, 0xBEEF, trial as u64) as usize % t;
                    (0..t)
                        .map(|i| if i == yes_at { Target::Yes } else { Target::No })
                        .collect()
                }
                _ => (0..t)
                    .map(|i| {
                        if derive_seed(seed, 0xC0105, (trial * t + i) as u64).is_multiple_of(2) {
                            Target::Yes
                        } else {
                            Target::No
                        }
                    })
                    .collect(),
            };
            (trial, targets)
        })
        .collect();

    let mut records: Vec<TrialRecord> = trial_plans
        .into_par_iter()
        .map(|(trial, targets)| -> Result<TrialRecord, Error> {
            let instances: Vec<Instance> = targets
                .iter()
                .enumerate()
                .map(|(i, &target)| {
                    gen_refinement_instance(n, k, target, derive_seed(seed, trial as u64, i as u64))
                })
                .collect::<Result<_, _>>()?;
            let input_or = targets.contains(&Target::Yes);

            let out = compose(&instances, strategy, derive_seed(seed, 0x4057, trial as u64), &table)?;
            let ComposeOutput::Composed(c) = out else {
                unreachable!("k >= 3 never takes the direct path")
            };
            let g = &c.embed.g_prime;
            if g.n() > cap {
                return Err(Error::FeasibilityCap { vertices: g.n(), cap });
            }
            let max_hom = max_homogeneous(g);
            let composed_answer = max_hom >= c.embed.k_prime;
            let exact_floor_holds =
                (!input_or).then(|| max_hom == c.host.ell * (2 * k - 2));
            let agree = input_or == composed_answer && exact_floor_holds.unwrap_or(true);
            Ok(TrialRecord {
                trial,
                targets,
                input_or,
                composed_answer,
                k_prime: c.embed.k_prime,
                ell: c.host.ell,
                g_prime_vertices: g.n(),
                exact_floor_holds,
                agree,
            })
        })
        .collect::<Result<_, _>>()?;

    records.sort_by_key(|r| r.trial);
    let passes = records.iter().filter(|r| r.agree).count();
    let failures = records.len() - passes;
    Ok(VerificationReport {
        t,
        k,
        strategy: strategy.label().to_string(),
        seed,
        n_per_instance: n,
        records,
        passes,
        failures,
    })
}

/// One row of the parameter-blowup report.
#[derive(Debug, Clone, Serialize)]
pub struct BlowupRow {
    pub t: usize,
    pub k: usize,
    pub strategy: String,
    pub ell: usize,
    pub k_prime: usize,
    pub ratio: f64,
    pub g_prime_vertices: usize,
}

/// Composes canonical all-no instance bundles for every (t, k, strategy)
/// combination and tabulates the resulting parameters. Purely descriptive.
pub fn blowup_report(
    t_values: &[usize],
    k_values: &[usize],
    strategies: &[Strategy],
) -> Result<Vec<BlowupRow>, Error> {
    let table = RamseyTable::shipped();
    let mut rows = Vec::new();
    for &t in t_values {
        for &k in k_values {
            let n = default_instance_n(k);
            let instances: Vec<Instance> = (0..t)
                .map(|i| gen_refinement_instance(n, k, Target::No, derive_seed(0, t as u64, i as u64)))
                .collect::<Result<_, _>>()?;
            for strategy in strategies {
                let out = compose(&instances, strategy, 0, &table)?;
                let ComposeOutput::Composed(c) = out else {
                    unreachable!("k >= 3 never takes the direct path")
                };
                rows.push(BlowupRow {
                    t,
                    k,
                    strategy: strategy.label().to_string(),
                    ell: c.host.ell,
                    k_prime: c.embed.k_prime,
                    ratio: c.embed.k_prime as f64 / k as f64,
                    g_prime_vertices: c.embed.g_prime.n(),
                });
            }
        }
    }
    Ok(rows)
}

pub fn blowup_csv(rows: &[BlowupRow]) -> String {
    let mut out = String::from("t,k,strategy,ell,k_prime,k_prime_over_k,g_prime_vertices\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{:.4},{}\n",
            r.t, r.k, r.strategy, r.ell, r.k_prime, r.ratio, r.g_prime_vertices
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gen_no_instance_c5_scale() {
        let inst = gen_refinement_instance(5, 3, Target::No, 1).unwrap();
        assert_eq!(clique_number(&inst.graph), 2);
        assert_eq!(independence_number(&inst.graph), 2);
        assert!(inst.check_refinement_legal().is_ok());
    }

    #[test]
    fn gen_yes_instance() {
        let inst = gen_refinement_instance(4, 3, Target::Yes, 1).unwrap();
        let max_hom = clique_number(&inst.graph).max(independence_number(&inst.graph));
        assert!(max_hom >= 3);
        assert!(inst.check_refinement_legal().is_ok());
    }

    #[test]
    fn gen_infeasible_errors() {
        let err = gen_refinement_instance_with_budget(2, 3, Target::No, 1, 200);
        assert!(matches!(err, Err(Error::RetryBudgetExhausted { .. })));
    }

    #[test]
    fn gen_is_deterministic() {
        let a = gen_refinement_instance(5, 3, Target::No, 99).unwrap();
        let b = gen_refinement_instance(5, 3, Target::No, 99).unwrap();
        assert_eq!(a.graph, b.graph);
        assert_eq!(a.witnesses, b.witnesses);
    }

    #[test]
    fn verify_small_run_passes_and_reproduces() {
        let r1 = verify_composition(2, 3, &Strategy::Turan, 6, 5, None, DEFAULT_FEASIBILITY_CAP)
            .unwrap();
        assert!(r1.all_pass(), "{r1:?}");
        let r2 = verify_composition(2, 3, &Strategy::Turan, 6, 5, None, DEFAULT_FEASIBILITY_CAP)
            .unwrap();
        assert_eq!(r1.to_canonical_json(), r2.to_canonical_json());
    }

    #[test]
    fn feasibility_cap_fires() {
        let err = verify_composition(4, 3, &Strategy::Turan, 1, 0, None, 10);
        assert!(matches!(err, Err(Error::FeasibilityCap { .. })));
    }

    #[test]
    fn blowup_rows_match_arithmetic() {
        let rows = blowup_report(&[1, 4], &[3], &[Strategy::Turan]).unwrap();
        assert_eq!(rows[0].ell, 1);
        assert_eq!(rows[0].k_prime, 5);
        assert_eq!(rows[1].ell, 2);
        assert_eq!(rows[1].k_prime, 9);
        let csv = blowup_csv(&rows);
        assert!(csv.starts_with("t,k,strategy"));
        assert!(csv.contains("4,3,turan,2,9"));
    }

    #[test]
    fn blowup_witness_t11() {
        let rows = blowup_report(&[11], &[3], &[Strategy::Witness]).unwrap();
        assert_eq!(rows[0].ell, 3);
        assert_eq!(rows[0].k_prime, 13);
    }
}
