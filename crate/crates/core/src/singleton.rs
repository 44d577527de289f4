//! Explicit low-frequency realizer of the singleton poset.
//!
//! `[n]` is cut into blocks of width `d`. For each block `I` and each nonempty
//! `J` inside it there is one order holding every large set `A` with
//! `I \ A = J`, followed by the singletons of `J`. Two global orders `L` and
//! `L'` put all singletons below all large sets and reverse each other inside
//! both layers.

use crate::error::{Error, Result};
use crate::poset::{ElementId, Poset};
use crate::realizer::{PartialLinearExtension, RealizerFamily};

/// `max(1, ceil(log2 n - log2 log2 n))`.
pub fn default_block_width(n: usize) -> Result<usize> {
    if n < 2 {
        return Err(Error::parameter("block width needs n >= 2"));
    }
    let log = (n as f64).log2();
    let width = (log - log.log2()).ceil();
    Ok((width as usize).max(1))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockPartition {
    pub n: usize,
    pub d: usize,
    /// Blocks as bitmasks over `[n]`; all but possibly the last have `d` bits.
    pub blocks: Vec<ElementId>,
}

impl BlockPartition {
    pub fn new(n: usize, d: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::parameter("n must be at least 2"));
        }
        if d == 0 || d > n {
            return Err(Error::parameter(format!("block width {d} not in 1..={n}")));
        }
        if n > 31 {
            return Err(Error::parameter("n must be at most 31"));
        }
        let full: ElementId = (1 << n) - 1;
        let blocks = (0..n.div_ceil(d))
            .map(|i| {
                let start = d * i;
                let width = d.min(n - start);
                (((1u64 << width) - 1) << start) as ElementId & full
            })
            .collect();
        Ok(BlockPartition { n, d, blocks })
    }

    pub fn count(&self) -> usize {
        self.blocks.len()
    }

    pub fn block_of(&self, x: usize) -> usize {
        (x - 1) / self.d
    }
}

/// Returns `(2^d + 1, ceil(n/d) + 2)`; the larger of the two bounds the
/// frequency of [`build_singleton_realizer`].
pub fn singleton_frequency_bound(n: usize, d: usize) -> (usize, usize) {
    ((1 << d) + 1, n.div_ceil(d) + 2)
}

/// The singleton-poset realizer, using [`default_block_width`] when `d` is `None`.
pub fn build_singleton_realizer(n: usize, d: Option<usize>) -> Result<RealizerFamily> {
    let d = match d {
        Some(d) => d,
        None => default_block_width(n)?,
    };
    let partition = BlockPartition::new(n, d)?;
    let poset = Poset::singleton(n)?;
    let canonical = poset.canonical_linear_extension();
    let (singletons, large): (Vec<ElementId>, Vec<ElementId>) = canonical
        .elements()
        .iter()
        .partition(|&&id| id.count_ones() == 1);

    let mut ples = Vec::new();
    ples.push(PartialLinearExtension::new(
        singletons.iter().chain(&large).copied().collect(),
    ));
    ples.push(PartialLinearExtension::new(
        singletons
            .iter()
            .rev()
            .chain(large.iter().rev())
            .copied()
            .collect(),
    ));

    let mut by_id = large.clone();
    by_id.sort_unstable();
    for &block in &partition.blocks {
        // nonempty submasks of the block, ascending
        let mut j: ElementId = 0;
        loop {
            j = (j.wrapping_sub(block)) & block;
            if j == 0 {
                break;
            }
            let covered = block & !j;
            let mut order: Vec<ElementId> = by_id
                .iter()
                .copied()
                .filter(|&a| a & block == covered)
                .collect();
            order.extend((0..n).filter(|b| j >> b & 1 == 1).map(|b| 1 << b));
            ples.push(PartialLinearExtension::new(order));
        }
    }
    Ok(RealizerFamily::new(ples))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::realizer::verify_local_realizer;

    #[test]
    fn block_width_values() {
        assert_eq!(default_block_width(2).unwrap(), 1);
        assert_eq!(default_block_width(4).unwrap(), 1);
        assert_eq!(default_block_width(8).unwrap(), 2);
        assert_eq!(default_block_width(16).unwrap(), 2);
        assert!(default_block_width(1).is_err());
        assert!(default_block_width(0).is_err());
    }

    #[test]
    fn block_width_matches_direct_formula() {
        for n in 2..5000usize {
            let x = n as f64;
            let direct = (x.log2() - x.log2().log2()).ceil().max(1.0) as usize;
            assert_eq!(default_block_width(n).unwrap(), direct);
        }
    }

    #[test]
    fn partition_shapes() {
        let p = BlockPartition::new(7, 3).unwrap();
        assert_eq!(p.blocks, vec![0b111, 0b111000, 0b1000000]);
        assert_eq!(p.block_of(4), 1);
        let q = BlockPartition::new(4, 4).unwrap();
        assert_eq!(q.blocks, vec![0b1111]);
        assert!(BlockPartition::new(4, 0).is_err());
        assert!(BlockPartition::new(4, 5).is_err());
        assert!(BlockPartition::new(1, 1).is_err());
    }

    #[test]
    fn bound_values() {
        assert_eq!(singleton_frequency_bound(8, 2), (5, 6));
        assert_eq!(singleton_frequency_bound(4, 1), (3, 6));
        let (a, b) = singleton_frequency_bound(16, 2);
        assert_eq!((a, b), (5, 10));
        assert!(b as f64 <= 2.0 * 16.0 / 4.0 + 3.0);
    }

    #[test]
    fn named_examples_verify() {
        for (n, d, bound) in [(4, 2, 5), (8, 2, 6), (2, 1, 3)] {
            let f = build_singleton_realizer(n, Some(d)).unwrap();
            let report = verify_local_realizer(&Poset::singleton(n).unwrap(), &f).unwrap();
            assert!(report.accepted, "n = {n}, d = {d}");
            assert!(report.frequency <= bound);
        }
    }

    #[test]
    fn every_width_verifies() {
        for n in 2..=7 {
            let poset = Poset::singleton(n).unwrap();
            for d in 1..=n {
                let f = build_singleton_realizer(n, Some(d)).unwrap();
                assert!(verify_local_realizer(&poset, &f).unwrap().accepted);
                let (a, b) = singleton_frequency_bound(n, d);
                assert!(f.frequency() <= a.max(b));
            }
        }
    }

    #[test]
    fn occurrence_counts() {
        let (n, d) = (9, 2);
        let f = build_singleton_realizer(n, Some(d)).unwrap();
        let part = BlockPartition::new(n, d).unwrap();
        for a in 1..(1u32 << n) {
            let count = f.occurrence_count(a);
            if a.count_ones() == 1 {
                let x = a.trailing_zeros() as usize + 1;
                let block = part.blocks[part.block_of(x)];
                assert_eq!(count, 2 + (1 << (block.count_ones() - 1)));
            } else {
                let covered = part.blocks.iter().filter(|&&b| a & b == b).count();
                assert_eq!(count, part.count() + 2 - covered);
            }
        }
    }

    #[test]
    fn witnesses_exist_without_verifier() {
        let (n, d) = (7, 3);
        let f = build_singleton_realizer(n, Some(d)).unwrap();
        let part = BlockPartition::new(n, d).unwrap();
        for a in (1u32..1 << n).filter(|a| a.count_ones() > 1) {
            for x in (1..=n).filter(|&x| a >> (x - 1) & 1 == 0) {
                let block = part.blocks[part.block_of(x)];
                let j = block & !a;
                let single = 1 << (x - 1);
                let witness = f.ples().iter().find(|l| {
                    let el = l.elements();
                    let singles: ElementId = el
                        .iter()
                        .filter(|e| e.count_ones() == 1)
                        .fold(0, |acc, &e| acc | e);
                    singles == j
                        && el
                            .iter()
                            .all(|&e| e.count_ones() == 1 || e & block == block & !j)
                });
                let l = witness.expect("order for (block, J) exists");
                assert!(l.position(a).unwrap() < l.position(single).unwrap());
            }
        }
    }
}
