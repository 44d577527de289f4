//! Finite posets from the local-dimension literature, with integer element codes.
//!
//! Subsets of `[n]` are bitmasks (bit `i-1` set iff `i` is a member), multisets
//! with multiplicities below `m` are base-`m` codes (digit `i-1` is the
//! multiplicity of `i`), and chains/antichains use plain indices. A product
//! `P x Q` encodes `(p, q)` as `p + id_bound(P) * q`, so `boolean(a) x boolean(b)`
//! shares its codes with `boolean(a + b)`.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::realizer::PartialLinearExtension;

pub type ElementId = u32;

/// Parameters of one of the built-in poset families.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PosetSpec {
    Boolean(usize),
    Singleton(usize),
    Multiset(usize, usize),
    MultisetSingleton(usize, usize),
    Chain(usize),
    Antichain(usize),
}

impl FromStr for PosetSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |detail: &str| Error::Parse {
            what: "poset spec",
            detail: format!("{s:?}: {detail}"),
        };
        let mut parts = s.trim().split(':');
        let kind = parts.next().unwrap_or_default();
        let args = parts
            .map(|p| {
                p.parse::<usize>()
                    .map_err(|_| bad("expected a natural number"))
            })
            .collect::<Result<Vec<_>>>()?;
        let spec = match (kind, args.as_slice()) {
            ("boolean", &[n]) => PosetSpec::Boolean(n),
            ("singleton", &[n]) => PosetSpec::Singleton(n),
            ("multiset", &[n, m]) => PosetSpec::Multiset(n, m),
            ("multiset-singleton", &[n, m]) => PosetSpec::MultisetSingleton(n, m),
            ("chain", &[k]) => PosetSpec::Chain(k),
            ("antichain", &[k]) => PosetSpec::Antichain(k),
            _ => return Err(bad("unknown kind or wrong number of arguments")),
        };
        Ok(spec)
    }
}

impl fmt::Display for PosetSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PosetSpec::Boolean(n) => write!(f, "boolean:{n}"),
            PosetSpec::Singleton(n) => write!(f, "singleton:{n}"),
            PosetSpec::Multiset(n, m) => write!(f, "multiset:{n}:{m}"),
            PosetSpec::MultisetSingleton(n, m) => write!(f, "multiset-singleton:{n}:{m}"),
            PosetSpec::Chain(k) => write!(f, "chain:{k}"),
            PosetSpec::Antichain(k) => write!(f, "antichain:{k}"),
        }
    }
}

#[derive(Clone, Debug)]
pub enum PosetKind {
    Boolean { n: usize },
    Singleton { n: usize },
    Multiset { n: usize, m: usize },
    MultisetSingleton { n: usize, m: usize },
    Chain { k: usize },
    Antichain { k: usize },
    Product(Arc<Poset>, Arc<Poset>),
}

/// An immutable finite poset with a comparability oracle.
#[derive(Clone, Debug)]
pub struct Poset {
    kind: PosetKind,
    id_bound: ElementId,
    ground_size: usize,
}

fn checked_pow(base: usize, exp: usize) -> Result<ElementId> {
    u32::try_from(base)
        .ok()
        .and_then(|b| b.checked_pow(exp as u32))
        .ok_or_else(|| Error::parameter(format!("{base}^{exp} element codes exceed 32 bits")))
}

impl Poset {
    pub fn build(spec: &PosetSpec) -> Result<Poset> {
        let need_n = |n: usize| {
            if n == 0 {
                Err(Error::parameter("n must be at least 1"))
            } else {
                Ok(())
            }
        };
        let need_m = |m: usize| {
            if m < 2 {
                Err(Error::parameter("m must be at least 2"))
            } else {
                Ok(())
            }
        };
        let (kind, id_bound, ground_size) = match *spec {
            PosetSpec::Boolean(n) => {
                need_n(n)?;
                let b = checked_pow(2, n)?;
                (PosetKind::Boolean { n }, b, b as usize)
            }
            PosetSpec::Singleton(n) => {
                need_n(n)?;
                let b = checked_pow(2, n)?;
                (PosetKind::Singleton { n }, b, b as usize - 1)
            }
            PosetSpec::Multiset(n, m) => {
                need_n(n)?;
                need_m(m)?;
                let b = checked_pow(m, n)?;
                (PosetKind::Multiset { n, m }, b, b as usize)
            }
            PosetSpec::MultisetSingleton(n, m) => {
                need_n(n)?;
                need_m(m)?;
                let b = checked_pow(m, n)?;
                (PosetKind::MultisetSingleton { n, m }, b, b as usize - 1)
            }
            PosetSpec::Chain(k) | PosetSpec::Antichain(k) => {
                if k == 0 {
                    return Err(Error::parameter("k must be at least 1"));
                }
                let b = ElementId::try_from(k)
                    .map_err(|_| Error::parameter("k exceeds 32-bit element codes"))?;
                let kind = if matches!(spec, PosetSpec::Chain(_)) {
                    PosetKind::Chain { k }
                } else {
                    PosetKind::Antichain { k }
                };
                (kind, b, k)
            }
        };
        Ok(Poset {
            kind,
            id_bound,
            ground_size,
        })
    }

    pub fn boolean(n: usize) -> Result<Poset> {
        Poset::build(&PosetSpec::Boolean(n))
    }

    pub fn singleton(n: usize) -> Result<Poset> {
        Poset::build(&PosetSpec::Singleton(n))
    }

    pub fn multiset(n: usize, m: usize) -> Result<Poset> {
        Poset::build(&PosetSpec::Multiset(n, m))
    }

    pub fn multiset_singleton(n: usize, m: usize) -> Result<Poset> {
        Poset::build(&PosetSpec::MultisetSingleton(n, m))
    }

    pub fn chain(k: usize) -> Result<Poset> {
        Poset::build(&PosetSpec::Chain(k))
    }

    pub fn antichain(k: usize) -> Result<Poset> {
        Poset::build(&PosetSpec::Antichain(k))
    }

    /// Cartesian product with the componentwise order.
    pub fn product(p: &Poset, q: &Poset) -> Result<Poset> {
        let id_bound = p
            .id_bound
            .checked_mul(q.id_bound)
            .ok_or_else(|| Error::parameter("product element codes exceed 32 bits"))?;
        Ok(Poset {
            kind: PosetKind::Product(Arc::new(p.clone()), Arc::new(q.clone())),
            id_bound,
            ground_size: p.ground_size * q.ground_size,
        })
    }

    pub fn kind(&self) -> &PosetKind {
        &self.kind
    }

    pub fn ground_size(&self) -> usize {
        self.ground_size
    }

    /// One past the largest element code. Equals `ground_size` except for the
    /// singleton kinds, where code 0 (the empty set) is not an element.
    pub fn id_bound(&self) -> ElementId {
        self.id_bound
    }

    pub fn contains(&self, id: ElementId) -> bool {
        if id >= self.id_bound {
            return false;
        }
        match &self.kind {
            PosetKind::Singleton { .. } | PosetKind::MultisetSingleton { .. } => id != 0,
            PosetKind::Product(p, q) => {
                let (a, b) = self.split(id);
                p.contains(a) && q.contains(b)
            }
            _ => true,
        }
    }

    pub fn check(&self, id: ElementId) -> Result<()> {
        if self.contains(id) {
            Ok(())
        } else {
            Err(Error::Range {
                id,
                poset: self.to_string(),
            })
        }
    }

    /// Ground set in ascending code order.
    pub fn elements(&self) -> Vec<ElementId> {
        (0..self.id_bound).filter(|&id| self.contains(id)).collect()
    }

    /// `a <= b`, with range checking.
    pub fn leq(&self, a: ElementId, b: ElementId) -> Result<bool> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.leq_unchecked(a, b))
    }

    /// `a <= b` for codes already known to be elements.
    pub fn leq_unchecked(&self, a: ElementId, b: ElementId) -> bool {
        if a == b {
            return true;
        }
        match &self.kind {
            PosetKind::Boolean { .. } => a & !b == 0,
            PosetKind::Singleton { .. } => {
                a.count_ones() == 1 && b.count_ones() >= 2 && a & !b == 0
            }
            PosetKind::Multiset { n, m } => digits_leq(a, b, *n, *m),
            PosetKind::MultisetSingleton { n, m } => {
                support_size(a, *n, *m) == 1
                    && support_size(b, *n, *m) >= 2
                    && digits_leq(a, b, *n, *m)
            }
            PosetKind::Chain { .. } => a <= b,
            PosetKind::Antichain { .. } => false,
            PosetKind::Product(p, q) => {
                let (a1, a2) = self.split(a);
                let (b1, b2) = self.split(b);
                p.leq_unchecked(a1, b1) && q.leq_unchecked(a2, b2)
            }
        }
    }

    pub fn comparable(&self, a: ElementId, b: ElementId) -> bool {
        self.leq_unchecked(a, b) || self.leq_unchecked(b, a)
    }

    /// Splits a product code into its components.
    ///
    /// # Panics
    /// If the poset is not a product.
    pub fn split(&self, id: ElementId) -> (ElementId, ElementId) {
        match &self.kind {
            PosetKind::Product(p, _) => (id % p.id_bound, id / p.id_bound),
            _ => panic!("split called on a non-product poset"),
        }
    }

    pub fn pair(&self, a: ElementId, b: ElementId) -> ElementId {
        match &self.kind {
            PosetKind::Product(p, _) => a + p.id_bound * b,
            _ => panic!("pair called on a non-product poset"),
        }
    }

    /// Grading key used by the canonical linear extension: cardinality for
    /// sets, total multiplicity for multisets, the code itself for chains and
    /// antichains, and the sum of component keys for products.
    pub fn rank(&self, id: ElementId) -> u64 {
        match &self.kind {
            PosetKind::Boolean { .. } | PosetKind::Singleton { .. } => u64::from(id.count_ones()),
            PosetKind::Multiset { n, m } | PosetKind::MultisetSingleton { n, m } => {
                MultisetElement::from_id(id, *n, *m)
                    .multiplicities
                    .iter()
                    .map(|&x| u64::from(x))
                    .sum()
            }
            PosetKind::Chain { .. } | PosetKind::Antichain { .. } => u64::from(id),
            PosetKind::Product(p, q) => {
                let (a, b) = self.split(id);
                p.rank(a) + q.rank(b)
            }
        }
    }

    /// The ground set sorted by `(rank, id)`.
    pub fn canonical_linear_extension(&self) -> PartialLinearExtension {
        let mut elements = self.elements();
        elements.sort_by_key(|&id| (self.rank(id), id));
        PartialLinearExtension::new(elements)
    }

    /// Number of base elements `n` for the set and multiset kinds.
    pub fn base_size(&self) -> Option<usize> {
        match self.kind {
            PosetKind::Boolean { n }
            | PosetKind::Singleton { n }
            | PosetKind::Multiset { n, .. }
            | PosetKind::MultisetSingleton { n, .. } => Some(n),
            _ => None,
        }
    }
}

impl fmt::Display for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            PosetKind::Boolean { n } => write!(f, "boolean:{n}"),
            PosetKind::Singleton { n } => write!(f, "singleton:{n}"),
            PosetKind::Multiset { n, m } => write!(f, "multiset:{n}:{m}"),
            PosetKind::MultisetSingleton { n, m } => write!(f, "multiset-singleton:{n}:{m}"),
            PosetKind::Chain { k } => write!(f, "chain:{k}"),
            PosetKind::Antichain { k } => write!(f, "antichain:{k}"),
            PosetKind::Product(p, q) => write!(f, "({p} x {q})"),
        }
    }
}

fn digits_leq(mut a: ElementId, mut b: ElementId, n: usize, m: usize) -> bool {
    let m = m as ElementId;
    for _ in 0..n {
        if a % m > b % m {
            return false;
        }
        a /= m;
        b /= m;
    }
    true
}

fn support_size(mut a: ElementId, n: usize, m: usize) -> usize {
    let m = m as ElementId;
    let mut count = 0;
    for _ in 0..n {
        if !a.is_multiple_of(m) {
            count += 1;
        }
        a /= m;
    }
    count
}

/// Members of the subset of `[n]` encoded by `id`, ascending and 1-based.
pub fn subset_members(id: ElementId) -> Vec<usize> {
    (0..32)
        .filter(|b| id >> b & 1 == 1)
        .map(|b| b + 1)
        .collect()
}

pub fn subset_code(members: &[usize]) -> ElementId {
    members.iter().fold(0, |acc, &i| acc | 1 << (i - 1))
}

/// A multiset over `[n]`, stored by multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultisetElement {
    pub multiplicities: Vec<u32>,
}

impl MultisetElement {
    pub fn from_id(mut id: ElementId, n: usize, m: usize) -> Self {
        let m = m as ElementId;
        let multiplicities = (0..n)
            .map(|_| {
                let digit = id % m;
                id /= m;
                digit
            })
            .collect();
        MultisetElement { multiplicities }
    }

    pub fn to_id(&self, m: usize) -> ElementId {
        self.multiplicities
            .iter()
            .rev()
            .fold(0, |acc, &x| acc * m as ElementId + x)
    }

    pub fn support_size(&self) -> usize {
        self.multiplicities.iter().filter(|&&x| x > 0).count()
    }

    /// Exactly one element with positive multiplicity.
    pub fn is_singleton(&self) -> bool {
        self.support_size() == 1
    }

    pub fn is_included_in(&self, other: &MultisetElement) -> bool {
        self.multiplicities
            .iter()
            .zip(&other.multiplicities)
            .all(|(a, b)| a <= b)
    }
}
