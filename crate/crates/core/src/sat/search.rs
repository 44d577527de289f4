use std::fs::File;

use super::decode::decode_realizer;
use super::dimacs::write_cnf;
use super::encode::{encode_with, EncodeOptions};
use super::solver::{run_solver, SolverStatus};
use crate::error::{Error, Result};
use crate::poset::Poset;
use crate::realizer::{verify_local_realizer, RealizerFamily};

/// Outcome of one `(k, d)` query.
#[derive(Clone, Debug)]
pub struct InstanceOutcome {
    pub k: usize,
    pub d: usize,
    pub variables: usize,
    pub clauses: usize,
    pub status: SolverStatus,
    /// Decoded and verified realizer for satisfiable instances.
    pub realizer: Option<RealizerFamily>,
}

/// Encodes, solves and, when satisfiable, decodes and verifies one instance.
pub fn solve_instance(
    poset: &Poset,
    k: usize,
    d: usize,
    solver: &str,
    options: EncodeOptions,
) -> Result<InstanceOutcome> {
    if k == 0 || d == 0 {
        return Err(Error::parameter("k and d must be at least 1"));
    }
    let ((cnf, map), _) = encode_with(poset, k, d, options);
    let dir = tempfile::tempdir()?;
    let path = dir.path().join("instance.cnf");
    write_cnf(&cnf, &mut File::create(&path)?)?;
    let result = run_solver(&path, solver)?;
    let realizer = match (&result.status, &result.model) {
        (SolverStatus::Sat, Some(model)) => {
            let family = decode_realizer(model, &map)?;
            let report = verify_local_realizer(poset, &family)?;
            if !report.accepted || report.frequency > d {
                return Err(Error::Decode(format!(
                    "solver model decodes to a family that fails verification \
                     (accepted = {}, frequency = {})",
                    report.accepted, report.frequency
                )));
            }
            Some(family)
        }
        _ => None,
    };
    Ok(InstanceOutcome {
        k,
        d,
        variables: cnf.variable_count,
        clauses: cnf.clauses.len(),
        status: result.status,
        realizer,
    })
}

#[derive(Clone, Debug)]
pub struct LdimSearch {
    pub ldim: usize,
    pub certificate: RealizerFamily,
    /// Every query made, in order.
    pub steps: Vec<InstanceOutcome>,
}

/// Least `d` for which the instance with `k = d * |P|` orders is satisfiable.
///
/// A realizer of frequency `d` has at most `d * |P|` nonempty members, so
/// fixing `k` this way loses nothing.
pub fn ldim_exact(poset: &Poset, d_max: Option<usize>, solver: &str) -> Result<LdimSearch> {
    ldim_exact_with(poset, d_max, solver, EncodeOptions::default())
}

pub fn ldim_exact_with(
    poset: &Poset,
    d_max: Option<usize>,
    solver: &str,
    options: EncodeOptions,
) -> Result<LdimSearch> {
    let n = poset.ground_size();
    let d_max = d_max.unwrap_or(n);
    let mut steps = Vec::new();
    for d in 1..=d_max {
        let outcome = solve_instance(poset, d * n, d, solver, options)?;
        let status = outcome.status;
        let realizer = outcome.realizer.clone();
        steps.push(outcome);
        match status {
            SolverStatus::Sat => {
                return Ok(LdimSearch {
                    ldim: d,
                    certificate: realizer.expect("satisfiable outcome carries a realizer"),
                    steps,
                })
            }
            SolverStatus::Unsat => continue,
            SolverStatus::Unknown => {
                return Err(Error::Protocol(format!(
                    "solver returned UNKNOWN for d = {d}, k = {}",
                    d * n
                )))
            }
        }
    }
    Err(Error::BoundExceeded(d_max))
}
