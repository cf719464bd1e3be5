//! Simply-laced root systems in Bourbaki numbering.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CartanType {
    A(usize),
    D(usize),
    E(usize),
}

impl CartanType {
    pub fn rank(self) -> usize {
        match self {
            CartanType::A(l) | CartanType::D(l) | CartanType::E(l) => l,
        }
    }

    /// Edges of the Dynkin diagram, 0-based.
    pub fn edges(self) -> Result<Vec<(usize, usize)>> {
        match self {
            CartanType::A(l) if l >= 1 => Ok((1..l).map(|i| (i - 1, i)).collect()),
            CartanType::D(l) if l >= 4 => {
                let mut e: Vec<_> = (1..l - 1).map(|i| (i - 1, i)).collect();
                e.push((l - 3, l - 1));
                Ok(e)
            }
            CartanType::E(l) if (6..=8).contains(&l) => {
                // 1-3-4-5-..., with 2 attached to 4
                let mut e = vec![(0, 2), (1, 3)];
                e.extend((3..l).map(|i| (i - 1, i)));
                Ok(e)
            }
            other => Err(Error::Invalid(format!("unsupported Cartan type {other}"))),
        }
    }

    pub fn cartan_matrix(self) -> Result<Vec<Vec<i64>>> {
        let l = self.rank();
        let mut a = vec![vec![0i64; l]; l];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        for (i, j) in self.edges()? {
            a[i][j] = -1;
            a[j][i] = -1;
        }
        Ok(a)
    }

    pub fn parse(s: &str) -> Result<Self> {
        let bad = || Error::Invalid(format!("unknown Cartan type {s:?}"));
        let (head, rank) = s.split_at(1.min(s.len()));
        let l: usize = rank.parse().map_err(|_| bad())?;
        let t = match head {
            "A" | "a" => CartanType::A(l),
            "D" | "d" => CartanType::D(l),
            "E" | "e" => CartanType::E(l),
            _ => return Err(bad()),
        };
        t.edges()?;
        Ok(t)
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CartanType::A(l) => write!(f, "A{l}"),
            CartanType::D(l) => write!(f, "D{l}"),
            CartanType::E(l) => write!(f, "E{l}"),
        }
    }
}

pub type Root = Vec<i64>;

#[derive(Clone, Debug)]
pub struct RootSystem {
    pub cartan_type: CartanType,
    pub cartan: Vec<Vec<i64>>,
    /// Positive roots as coefficient vectors, ordered by height then lexicographically.
    pub positive: Vec<Root>,
}

pub fn height(r: &[i64]) -> i64 {
    r.iter().sum()
}

impl RootSystem {
    /// Generates positive roots from the simple ones by root strings:
    /// `α + αᵢ` is a root iff `p − ⟨α, αᵢ^∨⟩ > 0`, where `p` is the length
    /// of the `αᵢ`-string below `α`.
    pub fn new(cartan_type: CartanType) -> Result<Self> {
        let cartan = cartan_type.cartan_matrix()?;
        let l = cartan_type.rank();
        let simple: Vec<Root> = (0..l).map(|i| unit(l, i)).collect();
        let mut known: HashSet<Root> = simple.iter().cloned().collect();
        let mut layer = simple.clone();
        let mut positive = simple;
        while !layer.is_empty() {
            let mut next = Vec::new();
            for alpha in &layer {
                for i in 0..l {
                    let pairing: i64 = (0..l).map(|j| alpha[j] * cartan[j][i]).sum();
                    let mut p = 0;
                    let mut below = alpha.clone();
                    loop {
                        below[i] -= 1;
                        if known.contains(&below) {
                            p += 1;
                        } else {
                            break;
                        }
                    }
                    if p - pairing > 0 {
                        let mut up = alpha.clone();
                        up[i] += 1;
                        if known.insert(up.clone()) {
                            next.push(up);
                        }
                    }
                }
            }
            next.sort();
            positive.extend(next.iter().cloned());
            layer = next;
        }
        positive.sort_by(|a, b| height(a).cmp(&height(b)).then_with(|| a.cmp(b)));
        Ok(RootSystem { cartan_type, cartan, positive })
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    /// `(α|β)` for the symmetric form normalized by `(αᵢ|αᵢ) = 2`.
    pub fn inner(&self, a: &[i64], b: &[i64]) -> i64 {
        let l = self.rank();
        (0..l).map(|i| (0..l).map(|j| a[i] * self.cartan[i][j] * b[j]).sum::<i64>()).sum()
    }

    pub fn index_of(&self, r: &[i64]) -> Option<usize> {
        self.positive.iter().position(|p| p.as_slice() == r)
    }

    pub fn dim(&self) -> usize {
        self.rank() + 2 * self.positive.len()
    }

    pub fn highest_root(&self) -> &Root {
        self.positive.last().expect("nonempty root system")
    }
}

fn unit(l: usize, i: usize) -> Root {
    let mut r = vec![0; l];
    r[i] = 1;
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        assert_eq!(RootSystem::new(CartanType::A(1)).unwrap().positive.len(), 1);
        assert_eq!(RootSystem::new(CartanType::A(2)).unwrap().dim(), 8);
        assert_eq!(RootSystem::new(CartanType::D(4)).unwrap().positive.len(), 12);
        assert_eq!(RootSystem::new(CartanType::E(6)).unwrap().positive.len(), 36);
    }

    #[test]
    fn e7_highest_root() {
        let rs = RootSystem::new(CartanType::E(7)).unwrap();
        assert_eq!(rs.highest_root(), &vec![2, 2, 3, 4, 3, 2, 1]);
    }

    #[test]
    fn parse_types() {
        assert_eq!(CartanType::parse("E7").unwrap(), CartanType::E(7));
        assert!(CartanType::parse("E9").is_err());
        assert!(CartanType::parse("B3").is_err());
    }
}
