//! ℤ-gradings of a Chevalley algebra by one simple root.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use serde::Serialize;

use super::chevalley::ChevalleyAlgebra;
use super::roots::CartanType;
use crate::error::{Error, Result};
use crate::lie::LieAlgJson;
use crate::twostep::tensor::binom2;

#[derive(Clone, Debug)]
pub struct GradedAlgebra {
    pub chev: Arc<ChevalleyAlgebra>,
    /// Grading node, 0-based.
    pub node: usize,
    /// Degree of each basis element: the `α_node` coefficient of its weight.
    pub degree: Vec<i64>,
    pub pieces: BTreeMap<i64, Vec<usize>>,
}

impl GradedAlgebra {
    pub fn new(chev: Arc<ChevalleyAlgebra>, node: usize) -> Result<Self> {
        if node >= chev.rank() {
            return Err(Error::IndexRange(format!("node {} in rank {}", node + 1, chev.rank())));
        }
        let degree: Vec<i64> = (0..chev.dim()).map(|b| chev.weight(b)[node]).collect();
        let mut pieces: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
        for (b, &d) in degree.iter().enumerate() {
            pieces.entry(d).or_default().push(b);
        }
        Ok(GradedAlgebra { chev, node, degree, pieces })
    }

    pub fn dim(&self) -> usize {
        self.chev.dim()
    }

    pub fn piece(&self, d: i64) -> &[usize] {
        self.pieces.get(&d).map_or(&[], Vec::as_slice)
    }

    pub fn max_degree(&self) -> i64 {
        *self.pieces.keys().next_back().unwrap_or(&0)
    }

    /// First basis pair `(i, j)` with `[ĝ_a, ĝ_b] ⊄ ĝ_{a+b}`, if any.
    pub fn grading_witness(&self) -> Option<(usize, usize)> {
        let alg = &self.chev.alg;
        (0..self.dim())
            .flat_map(|i| (i + 1..self.dim()).map(move |j| (i, j)))
            .find(|&(i, j)| alg.bracket_basis(i, j).iter().any(|(k, _)| self.degree[*k] != self.degree[i] + self.degree[j]))
    }

    pub fn to_json(&self) -> GradedJson {
        GradedJson {
            cartan_type: self.chev.roots.cartan_type.to_string(),
            node: self.node + 1,
            degrees: self.degree.clone(),
            piece_dims: self.pieces.iter().map(|(d, v)| (*d, v.len())).collect(),
            algebra: self.chev.alg.to_json(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct GradedJson {
    pub cartan_type: String,
    /// 1-based, Bourbaki numbering.
    pub node: usize,
    pub degrees: Vec<i64>,
    pub piece_dims: BTreeMap<i64, usize>,
    pub algebra: LieAlgJson,
}

/// Connected components of the diagram with `node` removed, each as a path
/// listed from one end, or `None` if some component is not a path.
pub fn complement_chains(t: CartanType, node: usize) -> Result<Option<Vec<Vec<usize>>>> {
    let l = t.rank();
    let mut adj = vec![BTreeSet::new(); l];
    for (a, b) in t.edges()? {
        if a != node && b != node {
            adj[a].insert(b);
            adj[b].insert(a);
        }
    }
    let mut seen = vec![false; l];
    seen[node] = true;
    let mut chains = Vec::new();
    for start in 0..l {
        if seen[start] {
            continue;
        }
        let mut comp = vec![start];
        seen[start] = true;
        let mut k = 0;
        while k < comp.len() {
            for &nb in &adj[comp[k]] {
                if !seen[nb] {
                    seen[nb] = true;
                    comp.push(nb);
                }
            }
            k += 1;
        }
        if comp.iter().any(|&v| adj[v].len() > 2) {
            return Ok(None);
        }
        let end = *comp.iter().filter(|&&v| adj[v].len() <= 1).min().expect("trees have leaves");
        let mut path = vec![end];
        let mut prev = usize::MAX;
        let mut cur = end;
        while let Some(&nx) = adj[cur].iter().find(|&&v| v != prev) {
            path.push(nx);
            prev = cur;
            cur = nx;
        }
        chains.push(path);
    }
    Ok(Some(chains))
}

/// Ambient type for a supported signature.
pub fn ambient_type(m: usize, n: usize) -> Result<CartanType> {
    match (m, n) {
        (6, 2) | (5, 3) => Ok(CartanType::E(7)),
        (4, 4) => Ok(CartanType::D(7)),
        _ => Err(Error::UnsupportedSignature(m, n)),
    }
}

/// The unique node whose complement is of type `A_{m−1} × A_{n−1}` and whose
/// degree-1 piece has dimension `C(m,2)·n`. Returns the node and the two
/// chains, the first of length `m − 1`.
pub fn find_node(chev: &Arc<ChevalleyAlgebra>, m: usize, n: usize) -> Result<(usize, Vec<usize>, Vec<usize>)> {
    let t = chev.roots.cartan_type;
    let mut found = Vec::new();
    for node in 0..t.rank() {
        let Some(chains) = complement_chains(t, node)? else { continue };
        let mut sizes: Vec<usize> = chains.iter().map(Vec::len).collect();
        sizes.sort_unstable();
        let mut want = vec![m - 1, n - 1];
        want.retain(|&s| s > 0);
        want.sort_unstable();
        if sizes != want {
            continue;
        }
        let g1 = chev.roots.positive.iter().filter(|r| r[node] == 1).count();
        if g1 != binom2(m) * n {
            continue;
        }
        let mut chains = chains;
        chains.sort_by_key(|c| std::cmp::Reverse(c.len()));
        let (u, v) = if m >= n {
            (chains.remove(0), chains.pop().unwrap_or_default())
        } else {
            let v = chains.remove(0);
            (chains.pop().unwrap_or_default(), v)
        };
        found.push((node, u, v));
    }
    match found.len() {
        1 => Ok(found.pop().unwrap()),
        _ => Err(Error::NoGradingNode(m, n)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chains_of_d7_middle() {
        let c = complement_chains(CartanType::D(7), 3).unwrap().unwrap();
        assert_eq!(c, vec![vec![0, 1, 2], vec![5, 4, 6]]);
        assert_eq!(complement_chains(CartanType::E(7), 0).unwrap(), None);
    }
}
