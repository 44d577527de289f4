use std::fmt;

use crate::poset::{ElementId, Poset};

/// Role of a CNF variable in the realizer encoding.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VarRole {
    /// `a` precedes `b` in order `i`.
    Before {
        a: ElementId,
        b: ElementId,
        i: usize,
    },
    /// `b` precedes `a` in order `i`.
    After {
        a: ElementId,
        b: ElementId,
        i: usize,
    },
    /// `a` is used in order `i`.
    Used { a: ElementId, i: usize },
}

impl fmt::Display for VarRole {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // orders are numbered from 1 in external files
        match *self {
            VarRole::Before { a, b, i } => write!(f, "x {a} {b} {}", i + 1),
            VarRole::After { a, b, i } => write!(f, "y {a} {b} {}", i + 1),
            VarRole::Used { a, i } => write!(f, "z {a} - {}", i + 1),
        }
    }
}

/// Bijection between CNF variables `1..=V` and their roles.
///
/// Every ordered pair of distinct elements `(a, b)` and order `i` owns a
/// before/after variable pair, and every element and order owns a usage
/// variable, so `V = 2 N (N - 1) k + N k`.
#[derive(Clone, Debug)]
pub struct VarMap {
    elements: Vec<ElementId>,
    dense: Vec<u32>,
    k: usize,
}

const ABSENT: u32 = u32::MAX;

impl VarMap {
    pub fn new(poset: &Poset, k: usize) -> Self {
        let elements = poset.elements();
        let mut dense = vec![ABSENT; poset.id_bound() as usize];
        for (i, &id) in elements.iter().enumerate() {
            dense[id as usize] = i as u32;
        }
        VarMap { elements, dense, k }
    }

    pub fn orders(&self) -> usize {
        self.k
    }

    pub fn elements(&self) -> &[ElementId] {
        &self.elements
    }

    fn n(&self) -> usize {
        self.elements.len()
    }

    pub fn variable_count(&self) -> usize {
        let n = self.n();
        2 * n * n.saturating_sub(1) * self.k + n * self.k
    }

    fn index(&self, id: ElementId) -> usize {
        let d = self.dense[id as usize];
        debug_assert_ne!(d, ABSENT);
        d as usize
    }

    fn pair_slot(&self, a: usize, b: usize) -> usize {
        a * (self.n() - 1) + if b < a { b } else { b - 1 }
    }

    pub(crate) fn x_dense(&self, a: usize, b: usize, i: usize) -> i32 {
        (1 + 2 * (self.pair_slot(a, b) * self.k + i)) as i32
    }

    pub(crate) fn y_dense(&self, a: usize, b: usize, i: usize) -> i32 {
        self.x_dense(a, b, i) + 1
    }

    pub(crate) fn z_dense(&self, a: usize, i: usize) -> i32 {
        let n = self.n();
        (2 * n * (n - 1) * self.k + 1 + a * self.k + i) as i32
    }

    /// Variable for "`a` before `b` in order `i`" (`i` counted from 0).
    pub fn x(&self, a: ElementId, b: ElementId, i: usize) -> i32 {
        self.x_dense(self.index(a), self.index(b), i)
    }

    /// Variable for "`b` before `a` in order `i`".
    pub fn y(&self, a: ElementId, b: ElementId, i: usize) -> i32 {
        self.y_dense(self.index(a), self.index(b), i)
    }

    /// Variable for "`a` used in order `i`".
    pub fn z(&self, a: ElementId, i: usize) -> i32 {
        self.z_dense(self.index(a), i)
    }

    pub fn role(&self, var: i32) -> Option<VarRole> {
        if var < 1 || var as usize > self.variable_count() {
            return None;
        }
        let v = var as usize - 1;
        let n = self.n();
        let pair_vars = 2 * n * (n - 1) * self.k;
        if v >= pair_vars {
            let rest = v - pair_vars;
            return Some(VarRole::Used {
                a: self.elements[rest / self.k],
                i: rest % self.k,
            });
        }
        let is_after = v % 2 == 1;
        let slot_i = v / 2;
        let (slot, i) = (slot_i / self.k, slot_i % self.k);
        let a = slot / (n - 1);
        let r = slot % (n - 1);
        let b = if r < a { r } else { r + 1 };
        let (a, b) = (self.elements[a], self.elements[b]);
        Some(if is_after {
            VarRole::After { a, b, i }
        } else {
            VarRole::Before { a, b, i }
        })
    }
}

/// A formula in conjunctive normal form over variables `1..=variable_count`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CnfFormula {
    pub variable_count: usize,
    pub clauses: Vec<Vec<i32>>,
}

impl CnfFormula {
    pub fn new(variable_count: usize) -> Self {
        CnfFormula {
            variable_count,
            clauses: Vec::new(),
        }
    }

    pub fn add(&mut self, clause: Vec<i32>) {
        debug_assert!(!clause.is_empty());
        debug_assert!(clause
            .iter()
            .all(|l| *l != 0 && l.unsigned_abs() as usize <= self.variable_count));
        self.clauses.push(clause);
    }
}

/// Clause totals per family, as emitted by [`encode`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ClauseCounts {
    pub transitivity: usize,
    pub comparable: usize,
    pub incomparable: usize,
    pub coupling: usize,
    pub linking: usize,
    pub frequency: usize,
    /// One clause forcing the lone element into some order when the poset has
    /// a single element; pair clauses imply coverage otherwise.
    pub coverage: usize,
}

impl ClauseCounts {
    /// Closed-form totals for a poset with `n` elements, `strict` ordered pairs
    /// `a < b`, `k` orders and frequency bound `d`.
    pub fn predicted(n: usize, strict: usize, k: usize, d: usize) -> Self {
        let ordered = n * n.saturating_sub(1);
        let incomparable_ordered = ordered - 2 * strict;
        ClauseCounts {
            transitivity: 2 * k * ordered * n.saturating_sub(2),
            comparable: strict * (1 + k),
            incomparable: 2 * incomparable_ordered,
            coupling: 6 * k * ordered,
            linking: 2 * k * ordered,
            frequency: n * binomial(k, d + 1),
            coverage: usize::from(n == 1),
        }
    }

    pub fn total(&self) -> usize {
        self.transitivity
            + self.comparable
            + self.incomparable
            + self.coupling
            + self.linking
            + self.frequency
            + self.coverage
    }
}

pub(crate) fn binomial(n: usize, r: usize) -> usize {
    if r > n {
        return 0;
    }
    let r = r.min(n - r);
    (0..r).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// Options that strengthen the encoding without changing satisfiability.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct EncodeOptions {
    /// Require order `i + 1` to be used only if order `i` is. Any realizer can
    /// be permuted so its nonempty orders come first.
    pub used_orders_first: bool,
}

/// Encodes "there is a local realizer of `poset` with `k` orders and
/// frequency at most `d`".
pub fn encode(poset: &Poset, k: usize, d: usize) -> (CnfFormula, VarMap) {
    encode_with(poset, k, d, EncodeOptions::default()).0
}

pub fn encode_with(
    poset: &Poset,
    k: usize,
    d: usize,
    options: EncodeOptions,
) -> ((CnfFormula, VarMap), ClauseCounts) {
    let map = VarMap::new(poset, k);
    let mut cnf = CnfFormula::new(map.variable_count());
    let mut counts = ClauseCounts::default();
    let el = map.elements().to_vec();
    let n = el.len();

    // each order is transitive on the elements it uses
    for i in 0..k {
        for a in 0..n {
            for b in (0..n).filter(|&b| b != a) {
                for c in (0..n).filter(|&c| c != a && c != b) {
                    let used = [-map.z_dense(a, i), -map.z_dense(b, i), -map.z_dense(c, i)];
                    for var in [VarMap::x_dense, VarMap::y_dense] {
                        let mut clause = used.to_vec();
                        clause.extend([
                            -var(&map, a, b, i),
                            -var(&map, b, c, i),
                            var(&map, a, c, i),
                        ]);
                        cnf.add(clause);
                        counts.transitivity += 1;
                    }
                }
            }
        }
    }

    // comparable pairs are witnessed and never reversed; incomparable pairs
    // appear both ways
    for a in 0..n {
        for b in (0..n).filter(|&b| b != a) {
            let xs: Vec<i32> = (0..k).map(|i| map.x_dense(a, b, i)).collect();
            if poset.leq_unchecked(el[a], el[b]) {
                cnf.add(xs);
                counts.comparable += 1;
                for i in 0..k {
                    cnf.add(vec![-map.y_dense(a, b, i)]);
                    counts.comparable += 1;
                }
            } else if !poset.leq_unchecked(el[b], el[a]) {
                cnf.add(xs);
                cnf.add((0..k).map(|i| map.y_dense(a, b, i)).collect());
                counts.incomparable += 2;
            }
        }
    }

    if n == 1 {
        cnf.add((0..k).map(|i| map.z_dense(0, i)).collect());
        counts.coverage += 1;
    }

    for i in 0..k {
        for a in 0..n {
            for b in (0..n).filter(|&b| b != a) {
                let (x, y) = (map.x_dense(a, b, i), map.y_dense(a, b, i));
                let (za, zb) = (map.z_dense(a, i), map.z_dense(b, i));
                cnf.add(vec![-x, za]);
                cnf.add(vec![-x, zb]);
                cnf.add(vec![-y, za]);
                cnf.add(vec![-y, zb]);
                cnf.add(vec![-za, -zb, x, y]);
                cnf.add(vec![-x, -y]);
                counts.coupling += 6;
                // (a, b) and (b, a) describe the same relative position
                let y_rev = map.y_dense(b, a, i);
                cnf.add(vec![-x, y_rev]);
                cnf.add(vec![x, -y_rev]);
                counts.linking += 2;
            }
        }
    }

    // no element is used in more than d orders
    if d < k {
        for a in 0..n {
            for_each_subset(k, d + 1, |subset| {
                cnf.add(subset.iter().map(|&i| -map.z_dense(a, i)).collect());
                counts.frequency += 1;
            });
        }
    }

    if options.used_orders_first {
        for i in 1..k {
            // some element used in order i implies some element used in order i - 1
            for a in 0..n {
                let mut clause = vec![-map.z_dense(a, i)];
                clause.extend((0..n).map(|b| map.z_dense(b, i - 1)));
                cnf.add(clause);
            }
        }
    }

    ((cnf, map), counts)
}

/// Calls `f` on every `r`-subset of `0..n`, in lexicographic order.
fn for_each_subset(n: usize, r: usize, mut f: impl FnMut(&[usize])) {
    if r > n {
        return;
    }
    let mut idx: Vec<usize> = (0..r).collect();
    loop {
        f(&idx);
        let mut pos = r;
        while pos > 0 && idx[pos - 1] == n - r + pos - 1 {
            pos -= 1;
        }
        if pos == 0 {
            return;
        }
        idx[pos - 1] += 1;
        for j in pos..r {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Number of ordered pairs `(a, b)` with `a < b` strictly in `poset`.
pub fn strict_pairs(poset: &Poset) -> usize {
    let el = poset.elements();
    el.iter()
        .map(|&a| {
            el.iter()
                .filter(|&&b| a != b && poset.leq_unchecked(a, b))
                .count()
        })
        .sum()
}
