//! Whether some proper nonempty vertex subset is a union of colour classes
//! in every optimal colouring.

use crate::error::{Error, Result};
use crate::graph_core::{bits, components, Graph};
use serde::Serialize;

/// Every partition of the vertices into exactly `m` independent sets, each
/// listed as class masks sorted by smallest vertex. Stops with an error
/// after `budget` partitions.
pub fn enumerate_colourings(g: &Graph, m: usize, budget: usize) -> Result<Vec<Vec<u64>>> {
    fn rec(
        g: &Graph,
        v: usize,
        m: usize,
        classes: &mut Vec<u64>,
        out: &mut Vec<Vec<u64>>,
        budget: usize,
    ) -> Result<()> {
        let n = g.n();
        if classes.len() + (n - v) < m {
            return Ok(());
        }
        if v == n {
            if classes.len() == m {
                if out.len() == budget {
                    return Err(Error::BudgetExceeded(format!(
                        "more than {budget} {m}-colourings"
                    )));
                }
                out.push(classes.clone());
            }
            return Ok(());
        }
        for i in 0..classes.len() {
            if classes[i] & g.neighbours(v) == 0 {
                classes[i] |= 1 << v;
                rec(g, v + 1, m, classes, out, budget)?;
                classes[i] &= !(1u64 << v);
            }
        }
        if classes.len() < m {
            classes.push(1 << v);
            rec(g, v + 1, m, classes, out, budget)?;
            classes.pop();
        }
        Ok(())
    }
    let mut out = Vec::new();
    rec(g, 0, m, &mut Vec::with_capacity(m), &mut out, budget)?;
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ZhuReport {
    pub holds: bool,
    pub m: usize,
    pub colourings_enumerated: usize,
    /// Components of the "share a class in some m-colouring" relation.
    pub components: Vec<Vec<usize>>,
    /// A valid separating set when `holds`.
    pub witness_a: Option<Vec<usize>>,
}

/// Builds the relation "u and v share a colour class in some m-colouring";
/// a separating set exists exactly when it has at least two components.
pub fn zhu_hypothesis_check(g: &Graph, m: usize, budget: usize) -> Result<ZhuReport> {
    let colourings = enumerate_colourings(g, m, budget)?;
    let mut rel = Graph::empty(g.n())?;
    for classes in &colourings {
        for &c in classes {
            let first = c.trailing_zeros() as usize;
            for v in bits(c & !(1u64 << first)) {
                rel.add_edge(first, v)?;
            }
        }
    }
    let comps = components(&rel);
    let holds = comps.len() >= 2 && !colourings.is_empty();
    Ok(ZhuReport {
        holds,
        m,
        colourings_enumerated: colourings.len(),
        witness_a: holds.then(|| comps[0].clone()),
        components: comps,
    })
}
