use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::gram::GramMatrix;
use crate::error::{Error, Result};
use crate::rational::ExactRational;

/// Coxeter diagram on nodes `0..node_count`; an absent edge means label 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoxeterDiagram {
    node_count: usize,
    edges: BTreeMap<(usize, usize), u32>,
}

impl CoxeterDiagram {
    /// Edges may be given in either orientation; repeats must agree.
    pub fn new(node_count: usize, edges: impl IntoIterator<Item = (usize, usize, u32)>) -> Result<Self> {
        if node_count == 0 {
            return Err(Error::EmptyMatrix);
        }
        let mut map = BTreeMap::new();
        for (i, j, label) in edges {
            let bad = Error::BadEdge { i, j, label, nodes: node_count };
            if i == j || i >= node_count || j >= node_count || label < 3 {
                return Err(bad);
            }
            let key = (i.min(j), i.max(j));
            if let Some(old) = map.insert(key, label) {
                if old != label {
                    return Err(bad);
                }
            }
        }
        Ok(CoxeterDiagram { node_count, edges: map })
    }

    /// Path `0 - 1 - ... - (k-1)` with simple edges.
    pub fn path(k: usize) -> Result<Self> {
        Self::new(k, (1..k).map(|i| (i - 1, i, 3)))
    }

    pub fn node_count(&self) -> usize {
        self.node_count
    }

    /// `(i, j, label)` with `i < j`, sorted.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, u32)> + '_ {
        self.edges.iter().map(|(&(i, j), &m)| (i, j, m))
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.node_count];
        for &(i, j) in self.edges.keys() {
            deg[i] += 1;
            deg[j] += 1;
        }
        deg
    }

    /// Degrees sorted in decreasing order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d = self.degrees();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    /// Rename node `i` to `perm[i]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.node_count {
            return Err(Error::BadEdge { i: perm.len(), j: 0, label: 0, nodes: self.node_count });
        }
        Self::new(self.node_count, self.edges().map(|(i, j, m)| (perm[i], perm[j], m)))
    }
}

/// `G[i][i] = 1`, `G[i][j] = -cos(pi/m)`; only `m = 3` (entry `-1/2`) is supported.
pub fn coxeter_gram(d: &CoxeterDiagram) -> Result<GramMatrix> {
    let n = d.node_count();
    let mut rows = vec![vec![ExactRational::zero(); n]; n];
    for (i, row) in rows.iter_mut().enumerate() {
        row[i] = ExactRational::one();
    }
    let half = ExactRational::new((-1).into(), 2.into());
    for (i, j, m) in d.edges() {
        if m != 3 {
            return Err(Error::UnsupportedLabel { i, j, label: m });
        }
        rows[i][j] = half.clone();
        rows[j][i] = half.clone();
    }
    GramMatrix::new(rows)
}

/// The 19-node diagram of the reflection group of `II_{17,1}`: a 17-node path
/// `0..=16` with node 17 hung on path node 2 and node 18 on path node 14.
pub fn diagram_ii17() -> CoxeterDiagram {
    let chain = (1..17).map(|i| (i - 1, i, 3));
    CoxeterDiagram::new(19, chain.chain([(2, 17, 3), (14, 18, 3)])).expect("valid edges")
}

/// Reverses the chain of [`diagram_ii17`] and swaps the two pendant nodes.
pub fn ii17_reversal() -> Vec<usize> {
    (0..17).map(|i| 16 - i).chain([18, 17]).collect()
}
