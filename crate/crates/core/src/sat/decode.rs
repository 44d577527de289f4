use std::collections::BTreeSet;

use super::encode::VarMap;
use crate::error::{Error, Result};
use crate::poset::ElementId;
use crate::realizer::{PartialLinearExtension, RealizerFamily};

/// Rebuilds the orders described by a satisfying assignment. Orders with no
/// used element are dropped.
pub fn decode_realizer(model: &BTreeSet<i32>, map: &VarMap) -> Result<RealizerFamily> {
    let el = map.elements();
    let n = el.len();
    let truth = |v: i32| model.contains(&v);
    let mut ples = Vec::new();
    for i in 0..map.orders() {
        let used: Vec<usize> = (0..n).filter(|&a| truth(map.z_dense(a, i))).collect();
        // a precedes b iff x(a, b) or, equivalently under the encoding, y(b, a)
        let before =
            |a: usize, b: usize| truth(map.x_dense(a, b, i)) || truth(map.y_dense(b, a, i));
        let mut ranked: Vec<(usize, usize)> = used
            .iter()
            .map(|&a| {
                let preds = used.iter().filter(|&&b| b != a && before(b, a)).count();
                (preds, a)
            })
            .collect();
        ranked.sort_unstable();
        for w in 0..ranked.len() {
            if ranked[w].0 != w {
                return Err(Error::Decode(format!(
                    "order {}: predecessor counts are not 0..{}",
                    i + 1,
                    ranked.len()
                )));
            }
        }
        for (p, &(_, a)) in ranked.iter().enumerate() {
            for &(_, b) in &ranked[p + 1..] {
                if !before(a, b) || before(b, a) {
                    return Err(Error::Decode(format!(
                        "order {}: elements {} and {} are not consistently ordered",
                        i + 1,
                        el[a],
                        el[b]
                    )));
                }
            }
        }
        if !ranked.is_empty() {
            let order: Vec<ElementId> = ranked.iter().map(|&(_, a)| el[a]).collect();
            ples.push(PartialLinearExtension::new(order));
        }
    }
    Ok(RealizerFamily::new(ples))
}
