//! Lower-bound machinery: the conflict graph of a singleton-poset realizer,
//! the Turán-style frequency floor, the multiset lower bound and the
//! signature audit behind it.

mod conflict;
mod formulas;
mod independent;
mod signature;

pub use conflict::{conflict_graph, ConflictGraph};
pub use formulas::{
    certifies, certifies_float, certifying_threshold, min_m_certifying, multiset_bound_value,
    multiset_lower_bound, turan_independence_floor, BoundReport, THRESHOLD_SLACK,
};
pub use independent::{independent_set, EXACT_LIMIT};
pub use signature::{signature_audit, SignatureAudit};

use crate::error::{Error, Result};
use crate::poset::Poset;
use crate::realizer::{verify_local_realizer, RealizerFamily};

/// Checks that `[n] \ I` occurs in at least `|I|` members of `family`, for an
/// independent set `I` of its conflict graph.
///
/// Requires `family` to realize `singleton(n)` and `|I| <= n - 2`, so that
/// `[n] \ I` is a set of size at least two.
pub fn check_ind_freq_claim(n: usize, family: &RealizerFamily, set: &[usize]) -> Result<bool> {
    let poset = Poset::singleton(n)?;
    if set.len() + 2 > n {
        return Err(Error::contract(format!(
            "|I| = {} exceeds n - 2 = {}",
            set.len(),
            n as isize - 2
        )));
    }
    if set.iter().any(|&v| v == 0 || v > n) {
        return Err(Error::contract("independent set has vertices outside [n]"));
    }
    let graph = conflict_graph(family, n)?;
    if !graph.is_independent(set) {
        return Err(Error::contract(
            "set is not independent in the conflict graph",
        ));
    }
    if !verify_local_realizer(&poset, family)?.accepted {
        return Err(Error::contract(format!("family does not realize {poset}")));
    }
    let full: u32 = (1 << n) - 1;
    let complement = set.iter().fold(full, |acc, &v| acc & !(1 << (v - 1)));
    Ok(family.occurrence_count(complement) >= set.len())
}
