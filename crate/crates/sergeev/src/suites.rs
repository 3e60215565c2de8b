//! Named verification suites: each check runs a family of identities at desk
//! scale and reports an instance count plus pass/fail. Both the CLI and the
//! acceptance tests drive these.

use serde::Serialize;

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub instances: usize,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub details: Option<String>,
}

impl CheckResult {
    pub fn new(name: &str, instances: usize, pass: bool) -> Self {
        CheckResult { name: name.to_string(), instances, pass, details: None }
    }

    pub fn with_details(name: &str, instances: usize, pass: bool, details: String) -> Self {
        let details = if details.is_empty() { None } else { Some(details) };
        CheckResult { name: name.to_string(), instances, pass, details }
    }
}

pub mod checks;

use crate::error::Result;
use crate::graded::AlgebraConfig;

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub schema: u32,
    pub suite: String,
    pub instance: crate::center::InstanceInfo,
    pub seed: u64,
    pub checks: Vec<CheckResult>,
    pub pass: bool,
}

pub const SUITE_NAMES: &[&str] = &[
    "signs", "hpoly", "xcycles", "cxcycles", "oddskew", "jm", "zbasis", "mbasis",
    "main-theorem", "relations", "all",
];

/// Runs one named suite at the given configuration. Exhaustive pure-sign
/// checks use their own fixed bounds; algebra-dependent checks use the
/// configured `d`, `l`, `f`.
pub fn run_suite(name: &str, cfg: &AlgebraConfig, seed: u64, guard: usize) -> Result<SuiteReport> {
    let mut out: Vec<CheckResult> = Vec::new();
    let run = |suite: &str, out: &mut Vec<CheckResult>| -> Result<()> {
        match suite {
            "signs" => {
                out.push(checks::parity_by_last_sign(8));
                out.push(checks::clifford_ordered_product_signs(cfg)?);
                out.push(checks::epsilon_shift_signs(6));
                out.push(checks::tau_shift_signs(8));
            }
            "hpoly" => {
                out.push(checks::clifford_h_commutation(cfg)?);
                out.push(checks::polynomial_h_commutation(cfg)?);
                out.push(checks::h_junction_products(cfg)?);
                out.push(checks::h_overlap_products(cfg)?);
            }
            "xcycles" => {
                out.push(checks::xcycle_centrality(cfg)?);
                out.push(checks::xcycle_rotation_sign(cfg)?);
                out.push(checks::xcycle_disjoint_commutation(cfg)?);
                out.push(checks::xcycle_junction_products(cfg)?);
                out.push(checks::poly_centralizer_structure(cfg)?);
            }
            "cxcycles" => {
                out.push(checks::cx_criterion(cfg)?);
                out.push(checks::cx_rotation_invariance(cfg)?);
                out.push(checks::cx_junction_products(cfg)?);
                out.push(checks::cx_overlap_vanishing(cfg)?);
                out.push(checks::factor_example(cfg)?);
                out.push(checks::square_zero_example(cfg)?);
                out.push(checks::simple_overlap_example(cfg)?);
            }
            "oddskew" => {
                out.push(checks::odd_skew_existence(cfg)?);
                out.push(checks::odd_skew_shape(cfg)?);
                out.push(checks::odd_skew_orbit_sums(cfg)?);
                out.push(checks::odd_skew_factorization(cfg)?);
            }
            "jm" => {
                out.push(checks::jm_small_product(cfg)?);
                out.push(checks::x_level_power_image(cfg)?);
                out.push(checks::jm_filtration(cfg)?);
                out.push(checks::kernel_compatibility(cfg, seed, 1000)?);
            }
            "zbasis" => {
                out.push(checks::z_conjugation_invariance(cfg)?);
                out.push(checks::z_family_vs_center(cfg, guard)?);
            }
            "mbasis" => {
                out.push(checks::m_centrality(cfg)?);
                out.push(checks::m_family_vs_center(cfg, guard)?);
            }
            "main-theorem" => {
                out.push(checks::main_theorem(cfg, guard)?);
                out.push(checks::symmetric_squares_central(cfg)?);
            }
            "relations" => {
                out.push(checks::graded_relations(cfg)?);
                out.push(checks::sergeev_relations(cfg)?);
                out.push(checks::affine_power_relation(cfg)?);
                out.push(checks::associativity_spot_checks(cfg, seed)?);
            }
            other => {
                return Err(crate::error::AlgebraError::BadIndexSet(format!(
                    "unknown suite {other:?}; valid names: {SUITE_NAMES:?}"
                )));
            }
        }
        Ok(())
    };

    if name == "all" {
        for s in SUITE_NAMES.iter().filter(|&&s| s != "all") {
            run(s, &mut out)?;
        }
    } else {
        run(name, &mut out)?;
    }

    let pass = out.iter().all(|c| c.pass);
    Ok(SuiteReport {
        schema: 1,
        suite: name.to_string(),
        instance: crate::center::InstanceInfo::of(cfg),
        seed,
        checks: out,
        pass,
    })
}
