//! Closed form versus oracle over a grid of `(n, k)`.
//!
//! Each point is independent, so the grid is checked on a rayon pool; the
//! report keeps grid order (n ascending, then k) whatever the thread count.

use num_bigint::{BigInt, BigUint};
use rayon::prelude::*;

use gtsg_core::GtParams;

use crate::CliError;

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub s0_max: u64,
    pub n_max: Option<u32>,
    pub k_max: Option<u32>,
    /// 0 means one thread per core.
    pub jobs: usize,
}

impl VerifyConfig {
    pub fn new(s0_max: u64) -> Self {
        Self {
            s0_max,
            n_max: None,
            k_max: None,
            jobs: 0,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub field: String,
    pub closed: String,
    pub oracle: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointReport {
    pub params: GtParams,
    pub s0: BigUint,
    pub mismatches: Vec<Mismatch>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub points: Vec<PointReport>,
}

impl VerifyReport {
    pub fn matched(&self) -> usize {
        self.points
            .iter()
            .filter(|p| p.mismatches.is_empty())
            .count()
    }

    pub fn mismatched(&self) -> usize {
        self.points.len() - self.matched()
    }

    pub fn all_match(&self) -> bool {
        self.mismatched() == 0
    }
}

/// Default `(n_max, k_max)` for a bound on `s_0`: the largest `n` with
/// `s_0(n, 1) ≤ s0_max` and the largest `k` with `s_0(1, k) ≤ s0_max`.
/// `s_0(0, k) = 2` for every `k`, so the `n = 0` row borrows the `n = 1` cap.
pub fn default_bounds(s0_max: u64) -> (u32, u32) {
    let bound = BigUint::from(s0_max);
    let s0 = |n, k| GtParams::new(n, k).expect("k ≥ 1").s0();
    let n_max = (0..64)
        .take_while(|&n| s0(n, 1) <= bound)
        .last()
        .unwrap_or(0);
    let k_max = (1..64)
        .take_while(|&k| s0(1, k) <= bound)
        .last()
        .unwrap_or(1);
    (n_max, k_max)
}

/// Grid points in report order.
pub fn grid(config: &VerifyConfig) -> Vec<GtParams> {
    let (n_def, k_def) = default_bounds(config.s0_max);
    let n_max = config.n_max.unwrap_or(n_def);
    let k_max = config.k_max.unwrap_or(k_def);
    let bound = BigUint::from(config.s0_max);
    let mut out = Vec::new();
    for n in 0..=n_max {
        for k in 1..=k_max {
            let p = GtParams::new(n, k).expect("k ≥ 1");
            if p.s0() <= bound {
                out.push(p);
            }
        }
    }
    out
}

pub fn run(config: &VerifyConfig) -> Result<VerifyReport, CliError> {
    if config.s0_max == 0 || config.k_max == Some(0) {
        return Err(CliError::Usage(
            "--s0-max and --k-max must be at least 1".into(),
        ));
    }
    let points = grid(config);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs)
        .build()
        .map_err(|e| {
            CliError::Usage(format!("cannot start {} worker threads: {e}", config.jobs))
        })?;
    let points = pool.install(|| points.par_iter().map(check_point).collect());
    Ok(VerifyReport { points })
}

fn join(vs: &[BigUint]) -> String {
    vs.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

/// Frobenius number, full Apéry set, genus and the minimal-generator fixed
/// point of one `GT(n, k)`.
pub fn check_point(p: &GtParams) -> PointReport {
    let s0 = p.s0();
    let mut mismatches = Vec::new();
    let mut miss = |field: &str, closed: String, oracle: String| {
        mismatches.push(Mismatch {
            field: field.to_string(),
            closed,
            oracle,
        });
    };

    let set = p.minimal_generating_set();
    let table = match set.apery_default() {
        Ok(t) => t,
        Err(e) => {
            miss("oracle", String::new(), e.to_string());
            return PointReport {
                params: *p,
                s0,
                mismatches,
            };
        }
    };

    let f_closed = BigInt::from(p.frobenius_closed());
    let f_oracle = table.frobenius();
    if f_closed != f_oracle {
        miss("frobenius", f_closed.to_string(), f_oracle.to_string());
    }

    let ap_closed = p.apery_set_closed();
    let ap_oracle = table.sorted_values();
    if ap_closed.len() != ap_oracle.len() {
        miss(
            "apery.size",
            ap_closed.len().to_string(),
            ap_oracle.len().to_string(),
        );
    } else if let Some(i) = (0..ap_closed.len()).find(|&i| ap_closed[i] != ap_oracle[i]) {
        miss(
            &format!("apery[{i}]"),
            ap_closed[i].to_string(),
            ap_oracle[i].to_string(),
        );
    }

    let g_oracle = table.genus();
    match p.genus_closed() {
        Ok(g) if g == g_oracle => {}
        Ok(g) => miss("genus", g.to_string(), g_oracle.to_string()),
        Err(e) => miss("genus", e.to_string(), g_oracle.to_string()),
    }

    match set.minimal_generators() {
        Ok(m) if m == set => {}
        Ok(m) => miss("minimal", join(set.gens()), join(m.gens())),
        Err(e) => miss("minimal", join(set.gens()), e.to_string()),
    }

    PointReport {
        params: *p,
        s0,
        mismatches,
    }
}
