//! Partial linear extensions, realizer families and the local-realizer check.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::poset::{ElementId, Poset};

/// Default number of violations kept per kind in a report.
pub const DEFAULT_VIOLATION_CAP: usize = 100;

/// A sequence of distinct elements, intended to be a linear extension of the
/// subposet it covers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct PartialLinearExtension {
    elements: Vec<ElementId>,
}

impl PartialLinearExtension {
    pub fn new(elements: Vec<ElementId>) -> Self {
        PartialLinearExtension { elements }
    }

    pub fn elements(&self) -> &[ElementId] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn position(&self, id: ElementId) -> Option<usize> {
        self.elements.iter().position(|&x| x == id)
    }
}

impl From<Vec<ElementId>> for PartialLinearExtension {
    fn from(elements: Vec<ElementId>) -> Self {
        PartialLinearExtension::new(elements)
    }
}

/// A list of partial linear extensions with a per-element occurrence index.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RealizerFamily {
    ples: Vec<PartialLinearExtension>,
    // occurrences[id] = (member index, position), ascending by member, first
    // position only when a member repeats an element
    occurrences: Vec<Vec<(u32, u32)>>,
}

impl RealizerFamily {
    pub fn new(ples: Vec<PartialLinearExtension>) -> Self {
        let bound = ples
            .iter()
            .flat_map(|l| l.elements.iter())
            .max()
            .map_or(0, |&m| m as usize + 1);
        let mut occurrences: Vec<Vec<(u32, u32)>> = vec![Vec::new(); bound];
        for (i, ple) in ples.iter().enumerate() {
            for (pos, &id) in ple.elements.iter().enumerate() {
                let occ = &mut occurrences[id as usize];
                if occ.last().is_none_or(|&(m, _)| m != i as u32) {
                    occ.push((i as u32, pos as u32));
                }
            }
        }
        RealizerFamily { ples, occurrences }
    }

    pub fn ples(&self) -> &[PartialLinearExtension] {
        &self.ples
    }

    pub fn into_ples(self) -> Vec<PartialLinearExtension> {
        self.ples
    }

    pub fn size(&self) -> usize {
        self.ples.len()
    }

    /// Largest number of members containing a single element.
    pub fn frequency(&self) -> usize {
        self.occurrences.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// `(member index, position)` for every member containing `id`.
    pub fn occurrences(&self, id: ElementId) -> &[(u32, u32)] {
        self.occurrences
            .get(id as usize)
            .map_or(&[], |v| v.as_slice())
    }

    /// Number of members containing `id`.
    pub fn occurrence_count(&self, id: ElementId) -> usize {
        self.occurrences(id).len()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ViolationKind {
    DuplicateInPle,
    OrderViolationInPle,
    PairNeverCoOccurs,
    ComparablePairReversed,
    ComparablePairNeverWitnessed,
    IncomparablePairOneSided,
}

impl ViolationKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ViolationKind::DuplicateInPle => "duplicate-in-ple",
            ViolationKind::OrderViolationInPle => "order-violation-in-ple",
            ViolationKind::PairNeverCoOccurs => "pair-never-co-occurs",
            ViolationKind::ComparablePairReversed => "comparable-pair-reversed",
            ViolationKind::ComparablePairNeverWitnessed => "comparable-pair-never-witnessed",
            ViolationKind::IncomparablePairOneSided => "incomparable-pair-one-sided",
        }
    }
}

impl fmt::Display for ViolationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Violation {
    pub kind: ViolationKind,
    pub a: ElementId,
    pub b: ElementId,
    pub ple: Option<usize>,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({}, {})", self.kind, self.a, self.b)?;
        if let Some(i) = self.ple {
            write!(f, " in order {i}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub accepted: bool,
    pub frequency: usize,
    pub size: usize,
    pub violations: Vec<Violation>,
    /// Uncapped count per violation kind.
    #[serde(skip)]
    pub totals: BTreeMap<ViolationKind, usize>,
}

impl VerificationReport {
    fn from_violations(
        family: Option<&RealizerFamily>,
        violations: Vec<Violation>,
        cap: usize,
    ) -> Self {
        let mut totals = BTreeMap::new();
        for v in &violations {
            *totals.entry(v.kind).or_insert(0) += 1;
        }
        Self::with_totals(family, violations, totals, cap)
    }

    fn with_totals(
        family: Option<&RealizerFamily>,
        mut violations: Vec<Violation>,
        totals: BTreeMap<ViolationKind, usize>,
        cap: usize,
    ) -> Self {
        violations.sort();
        let mut kept: BTreeMap<ViolationKind, usize> = BTreeMap::new();
        violations.retain(|v| {
            let count = kept.entry(v.kind).or_insert(0);
            *count += 1;
            *count <= cap
        });
        VerificationReport {
            accepted: totals.is_empty(),
            frequency: family.map_or(0, RealizerFamily::frequency),
            size: family.map_or(0, RealizerFamily::size),
            violations,
            totals,
        }
    }

    pub fn total_violations(&self) -> usize {
        self.totals.values().sum()
    }
}

impl Serialize for PartialLinearExtension {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.elements.serialize(s)
    }
}

/// Checks that `ple` has no repeated element and never places `b` before `a`
/// when `a < b` in `poset`.
pub fn validate_ple(poset: &Poset, ple: &PartialLinearExtension) -> Result<VerificationReport> {
    for &id in ple.elements() {
        poset.check(id)?;
    }
    let violations = ple_violations(poset, ple, None);
    Ok(VerificationReport::from_violations(
        None,
        violations,
        DEFAULT_VIOLATION_CAP,
    ))
}

fn ple_violations(
    poset: &Poset,
    ple: &PartialLinearExtension,
    index: Option<usize>,
) -> Vec<Violation> {
    let mut out = Vec::new();
    let el = ple.elements();
    for (i, &a) in el.iter().enumerate() {
        for &b in &el[i + 1..] {
            if a == b {
                out.push(Violation {
                    kind: ViolationKind::DuplicateInPle,
                    a,
                    b,
                    ple: index,
                });
            } else if poset.leq_unchecked(b, a) {
                out.push(Violation {
                    kind: ViolationKind::OrderViolationInPle,
                    a: b,
                    b: a,
                    ple: index,
                });
            }
        }
    }
    out
}

pub fn verify_local_realizer(poset: &Poset, family: &RealizerFamily) -> Result<VerificationReport> {
    verify_local_realizer_capped(poset, family, DEFAULT_VIOLATION_CAP)
}

/// Local-realizer check: every member is a partial linear extension, every
/// pair of distinct elements co-occurs in some member, comparable pairs are
/// never reversed and incomparable pairs appear in both orders.
pub fn verify_local_realizer_capped(
    poset: &Poset,
    family: &RealizerFamily,
    cap: usize,
) -> Result<VerificationReport> {
    for ple in family.ples() {
        for &id in ple.elements() {
            poset.check(id)?;
        }
    }

    let mut violations = Vec::new();

    // duplicates are cheap to find from the raw sequences
    for (i, ple) in family.ples().iter().enumerate() {
        let mut seen = std::collections::HashSet::with_capacity(ple.len());
        for &id in ple.elements() {
            if !seen.insert(id) {
                violations.push(Violation {
                    kind: ViolationKind::DuplicateInPle,
                    a: id,
                    b: id,
                    ple: Some(i),
                });
            }
        }
    }

    let elements = poset.elements();
    if elements.len() == 1 && family.occurrence_count(elements[0]) == 0 {
        violations.push(Violation {
            kind: ViolationKind::PairNeverCoOccurs,
            a: elements[0],
            b: elements[0],
            ple: None,
        });
    }

    let mut totals: BTreeMap<ViolationKind, usize> = BTreeMap::new();
    for v in &violations {
        *totals.entry(v.kind).or_insert(0) += 1;
    }

    // each chunk keeps its own first `cap` per kind; chunks partition pairs by
    // their smaller element, so the global first `cap` survive
    let chunks: Vec<(Vec<Violation>, BTreeMap<ViolationKind, usize>)> = (0..elements.len())
        .into_par_iter()
        .map(|i| {
            let a = elements[i];
            let mut local = Vec::new();
            let mut counts: BTreeMap<ViolationKind, usize> = BTreeMap::new();
            let mut push = |v: Violation| {
                let c = counts.entry(v.kind).or_insert(0);
                *c += 1;
                if *c <= cap {
                    local.push(v);
                }
            };
            for &b in &elements[i + 1..] {
                check_pair(poset, family, a, b, &mut push);
            }
            (local, counts)
        })
        .collect();
    for (local, counts) in chunks {
        violations.extend(local);
        for (kind, c) in counts {
            *totals.entry(kind).or_insert(0) += c;
        }
    }

    Ok(VerificationReport::with_totals(
        Some(family),
        violations,
        totals,
        cap,
    ))
}

fn check_pair(
    poset: &Poset,
    family: &RealizerFamily,
    a: ElementId,
    b: ElementId,
    push: &mut impl FnMut(Violation),
) {
    let oa = family.occurrences(a);
    let ob = family.occurrences(b);
    let mut a_first = false;
    let mut b_first = false;
    let mut common = 0usize;
    let a_le_b = poset.leq_unchecked(a, b);
    let b_le_a = poset.leq_unchecked(b, a);
    let (mut i, mut j) = (0, 0);
    while i < oa.len() && j < ob.len() {
        let (ma, pa) = oa[i];
        let (mb, pb) = ob[j];
        if ma < mb {
            i += 1;
        } else if mb < ma {
            j += 1;
        } else {
            common += 1;
            if pa < pb {
                a_first = true;
                if b_le_a {
                    push(Violation {
                        kind: ViolationKind::OrderViolationInPle,
                        a: b,
                        b: a,
                        ple: Some(ma as usize),
                    });
                }
            } else {
                b_first = true;
                if a_le_b {
                    push(Violation {
                        kind: ViolationKind::OrderViolationInPle,
                        a,
                        b,
                        ple: Some(ma as usize),
                    });
                }
            }
            i += 1;
            j += 1;
        }
    }
    let pair = |kind| Violation {
        kind,
        a,
        b,
        ple: None,
    };
    if common == 0 {
        push(pair(ViolationKind::PairNeverCoOccurs));
    }
    if a_le_b || b_le_a {
        let (witnessed, reversed) = if a_le_b {
            (a_first, b_first)
        } else {
            (b_first, a_first)
        };
        if reversed {
            push(pair(ViolationKind::ComparablePairReversed));
        }
        if !witnessed {
            push(pair(ViolationKind::ComparablePairNeverWitnessed));
        }
    } else if common > 0 && !(a_first && b_first) {
        push(pair(ViolationKind::IncomparablePairOneSided));
    }
}

/// Lifts realizers of `p` and `q` to a realizer of `p x q` with frequency at
/// most the sum of the input frequencies.
///
/// A member `L` of `fp` becomes the order on `{(x, y) : x in L}` sorted by the
/// position of `x` in `L`, then by the canonical linear extension of `q`;
/// members of `fq` are lifted symmetrically.
pub fn lift_product(
    p: &Poset,
    q: &Poset,
    fp: &RealizerFamily,
    fq: &RealizerFamily,
) -> Result<RealizerFamily> {
    for (poset, family, side) in [(p, fp, "left"), (q, fq, "right")] {
        let report = verify_local_realizer_capped(poset, family, 1)?;
        if !report.accepted {
            return Err(Error::contract(format!(
                "{side} family is not a local realizer of {poset}"
            )));
        }
    }
    let product = Poset::product(p, q)?;
    let q_ext = q.canonical_linear_extension();
    let p_ext = p.canonical_linear_extension();
    let mut ples = Vec::with_capacity(fp.size() + fq.size());
    for l in fp.ples() {
        let lifted = l
            .elements()
            .iter()
            .flat_map(|&x| q_ext.elements().iter().map(move |&y| (x, y)))
            .map(|(x, y)| product.pair(x, y))
            .collect();
        ples.push(PartialLinearExtension::new(lifted));
    }
    for l in fq.ples() {
        let lifted = l
            .elements()
            .iter()
            .flat_map(|&y| p_ext.elements().iter().map(move |&x| (x, y)))
            .map(|(x, y)| product.pair(x, y))
            .collect();
        ples.push(PartialLinearExtension::new(lifted));
    }
    Ok(RealizerFamily::new(ples))
}

/// The classical `n` linear extensions of `boolean(n)`: order `i` puts every
/// set without `i` below every set with `i`, both blocks in canonical order.
pub fn build_standard_realizer(n: usize) -> Result<RealizerFamily> {
    let poset = Poset::boolean(n)?;
    let canonical = poset.canonical_linear_extension();
    let ples = (0..n)
        .map(|bit| {
            let (with, without): (Vec<ElementId>, Vec<ElementId>) = canonical
                .elements()
                .iter()
                .partition(|&&id| id >> bit & 1 == 1);
            PartialLinearExtension::new(without.into_iter().chain(with).collect())
        })
        .collect();
    Ok(RealizerFamily::new(ples))
}

/// How `n` splits into the blocks used by [`build_bn_realizer`]:
/// `n = 7 * sevens + 4 * fours + rest`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BooleanDecomposition {
    pub sevens: usize,
    pub fours: usize,
    pub rest: usize,
}

impl BooleanDecomposition {
    pub fn of(n: usize) -> Self {
        let sevens = n / 7;
        let r = n % 7;
        let fours = usize::from(r >= 4);
        BooleanDecomposition {
            sevens,
            fours,
            rest: r - 4 * fours,
        }
    }

    /// `5 * sevens + 3 * fours + rest`, which equals `ceil(5n / 7)`.
    pub fn frequency_bound(&self) -> usize {
        5 * self.sevens + 3 * self.fours + self.rest
    }
}

/// Realizer of `boolean(n)` assembled from copies of the embedded `B7` and `B4`
/// certificates and a standard realizer for the remainder.
pub fn build_bn_realizer(n: usize) -> Result<RealizerFamily> {
    if n == 0 {
        return Err(Error::parameter("n must be at least 1"));
    }
    let parts = BooleanDecomposition::of(n);
    let mut factors: Vec<(Poset, RealizerFamily)> = Vec::new();
    for _ in 0..parts.sevens {
        factors.push((Poset::boolean(7)?, crate::fixtures::orders7()));
    }
    for _ in 0..parts.fours {
        factors.push((Poset::boolean(4)?, crate::fixtures::orders4()));
    }
    if parts.rest > 0 {
        factors.push((
            Poset::boolean(parts.rest)?,
            build_standard_realizer(parts.rest)?,
        ));
    }
    let mut iter = factors.into_iter();
    let (mut poset, mut family) = iter.next().expect("n >= 1 yields a factor");
    for (q, fq) in iter {
        family = lift_product(&poset, &q, &family, &fq)?;
        poset = Poset::product(&poset, &q)?;
    }
    Ok(family)
}
