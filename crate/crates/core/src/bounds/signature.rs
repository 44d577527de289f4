//! Interval signatures of the non-singleton multisets.
//!
//! Take the members of a realizer of `multiset-singleton(n, m)` that contain
//! at least one singleton multiset, concatenate them with a separator after
//! each, then delete the singletons and separators. The maximal runs left
//! over are the intervals; the signature of a multiset with two or more
//! positive multiplicities is the set of intervals containing it. Distinct
//! multisets must get distinct signatures.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::poset::{ElementId, MultisetElement, Poset};
use crate::realizer::{verify_local_realizer, RealizerFamily};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SignatureAudit {
    pub n: usize,
    pub m: usize,
    pub frequency: usize,
    /// Members containing a singleton multiset.
    pub members_with_singletons: usize,
    /// Singleton occurrences across those members.
    pub singleton_occurrences: usize,
    pub intervals: usize,
    /// `2 * frequency * |S|`.
    pub interval_bound: usize,
    pub singleton_count: usize,
    /// Multisets with two or more positive multiplicities, `m^n - n(m-1) - 1`.
    pub non_singleton_count: usize,
    /// The same count without removing the empty multiset, `m^n - n(m-1)`.
    pub count_with_empty: usize,
    pub distinct_signatures: usize,
    pub max_signature_weight: usize,
    pub injective: bool,
    /// First pair of distinct multisets sharing a signature, if any.
    pub collision: Option<(ElementId, ElementId)>,
}

impl SignatureAudit {
    pub fn holds(&self) -> bool {
        self.injective && self.intervals <= self.interval_bound
    }
}

pub fn signature_audit(n: usize, m: usize, family: &RealizerFamily) -> Result<SignatureAudit> {
    let poset = Poset::multiset_singleton(n, m)?;
    let report = verify_local_realizer(&poset, family)?;
    if !report.accepted {
        return Err(Error::contract(format!(
            "family is not a local realizer of {poset}"
        )));
    }
    let is_singleton = |id: ElementId| MultisetElement::from_id(id, n, m).is_singleton();

    let mut intervals: Vec<Vec<ElementId>> = Vec::new();
    let mut members = 0;
    let mut singleton_occurrences = 0;
    for ple in family.ples() {
        let singles = ple
            .elements()
            .iter()
            .filter(|&&id| is_singleton(id))
            .count();
        if singles == 0 {
            continue;
        }
        members += 1;
        singleton_occurrences += singles;
        let mut run = Vec::new();
        for &id in ple.elements() {
            if is_singleton(id) {
                if !run.is_empty() {
                    intervals.push(std::mem::take(&mut run));
                }
            } else {
                run.push(id);
            }
        }
        // separator after every member
        if !run.is_empty() {
            intervals.push(run);
        }
    }

    let mut signatures: HashMap<ElementId, Vec<usize>> = HashMap::new();
    for (index, interval) in intervals.iter().enumerate() {
        for &id in interval {
            signatures.entry(id).or_default().push(index);
        }
    }

    let non_singletons: Vec<ElementId> = poset
        .elements()
        .into_iter()
        .filter(|&id| !is_singleton(id))
        .collect();
    let mut owner: HashMap<Vec<usize>, ElementId> = HashMap::new();
    let mut collision = None;
    let mut max_weight = 0;
    for &id in &non_singletons {
        let sig = signatures.remove(&id).unwrap_or_default();
        max_weight = max_weight.max(sig.len());
        if let Some(&other) = owner.get(&sig) {
            collision.get_or_insert((other, id));
        } else {
            owner.insert(sig, id);
        }
    }

    let singleton_count = n * (m - 1);
    let total = poset.id_bound() as usize;
    Ok(SignatureAudit {
        n,
        m,
        frequency: report.frequency,
        members_with_singletons: members,
        singleton_occurrences,
        intervals: intervals.len(),
        interval_bound: 2 * report.frequency * singleton_count,
        singleton_count,
        non_singleton_count: non_singletons.len(),
        count_with_empty: total - singleton_count,
        distinct_signatures: owner.len(),
        max_signature_weight: max_weight,
        injective: collision.is_none(),
        collision,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::realizer::PartialLinearExtension;

    fn fam(rows: &[&[ElementId]]) -> RealizerFamily {
        RealizerFamily::new(
            rows.iter()
                .map(|r| PartialLinearExtension::new(r.to_vec()))
                .collect(),
        )
    }

    #[test]
    fn n2_m2_is_vacuous() {
        // elements 1 = {1}, 2 = {2}, 3 = {1,2}
        let f = fam(&[&[1, 2, 3], &[2, 1, 3]]);
        let audit = signature_audit(2, 2, &f).unwrap();
        assert!(audit.holds());
        assert_eq!(audit.non_singleton_count, 1);
        assert_eq!(audit.count_with_empty, 2);
        assert_eq!(audit.intervals, 2);
        assert_eq!(audit.interval_bound, 2 * 2 * 2);
    }

    #[test]
    fn rejects_non_realizers() {
        let f = fam(&[&[1, 2, 3]]);
        assert!(matches!(signature_audit(2, 2, &f), Err(Error::Contract(_))));
    }

    #[test]
    fn hand_built_realizer_of_n2_m3() {
        // codes: (a, b) -> a + 3b. Singletons 1, 2, 3, 6; the rest 4, 5, 7, 8.
        // Each order lists the large multisets not above the chosen singleton
        // first, the singleton, then the large multisets above it.
        let poset = Poset::multiset_singleton(2, 3).unwrap();
        let large = [4u32, 5, 7, 8];
        let mut rows = Vec::new();
        for s in [1u32, 2, 3, 6] {
            let (below, above): (Vec<_>, Vec<_>) =
                large.iter().partition(|&&a| !poset.leq_unchecked(s, a));
            let mut row = below.clone();
            row.push(s);
            row.extend(&above);
            rows.push(row);
        }
        let mut rev: Vec<u32> = vec![6, 3, 2, 1];
        rev.extend(large.iter().rev());
        rows.push(rev);
        let mut fwd: Vec<u32> = vec![1, 2, 3, 6];
        fwd.extend(large.iter());
        rows.push(fwd);
        let family =
            RealizerFamily::new(rows.into_iter().map(PartialLinearExtension::new).collect());
        assert!(verify_local_realizer(&poset, &family).unwrap().accepted);
        let audit = signature_audit(2, 3, &family).unwrap();
        assert!(audit.holds(), "{audit:?}");
        assert!(audit.distinct_signatures >= audit.non_singleton_count);
    }
}
