//! Chevalley bases of simply-laced simple Lie algebras.
//!
//! Signs come from the bimultiplicative function `ε` on the root lattice with
//! `ε(αᵢ, αⱼ) = −1` when `i = j` or when `i < j` are joined in the diagram,
//! and `+1` otherwise. With `x_α = E_α`, `y_α = −E_{−α}`:
//!
//! ```text
//! [hᵢ, x_α] = (α|αᵢ) x_α        [hᵢ, y_α] = −(α|αᵢ) y_α
//! [x_α, y_α] = h_α = Σ kᵢ hᵢ     (α = Σ kᵢ αᵢ)
//! [x_α, x_β] = ε(α,β) x_{α+β}    [y_α, y_β] = −ε(α,β) y_{α+β}
//! [x_α, y_β] = −ε(α,β) x_{α−β}  if α−β > 0
//!            =  ε(α,β) y_{β−α}  if β−α > 0
//! ```
//!
//! Basis order: `x_α` over positive roots, then `y_α` in the same order,
//! then `h_1, …, h_ℓ`.

use std::collections::HashMap;

use crate::error::Result;
use crate::exact::rat;
use crate::lie::LieAlg;

use super::roots::{CartanType, Root, RootSystem};

/// Weight of a basis element: `+α`, `−α`, or zero for the Cartan.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BasisKind {
    X(usize),
    Y(usize),
    H(usize),
}

#[derive(Clone, Debug)]
pub struct ChevalleyAlgebra {
    pub roots: RootSystem,
    pub alg: LieAlg,
    index: HashMap<Root, usize>,
}

impl ChevalleyAlgebra {
    pub fn new(cartan_type: CartanType) -> Result<Self> {
        let roots = RootSystem::new(cartan_type)?;
        let l = roots.rank();
        let np = roots.positive.len();
        let index: HashMap<Root, usize> = roots.positive.iter().cloned().enumerate().map(|(i, r)| (r, i)).collect();
        let eps = |a: &[i64], b: &[i64]| -> i64 {
            let mut s = 0i64;
            for i in 0..l {
                for j in 0..l {
                    let odd = i == j || (i < j && roots.cartan[i][j] != 0);
                    if odd {
                        s += a[i] * b[j];
                    }
                }
            }
            if s.rem_euclid(2) == 0 {
                1
            } else {
                -1
            }
        };
        let x = |r: usize| r;
        let y = |r: usize| np + r;
        let h = |i: usize| 2 * np + i;
        let mut entries = Vec::new();
        let mut push = |i: usize, j: usize, k: usize, c: i64| {
            if i < j {
                entries.push((i, j, k, rat(c)));
            } else {
                entries.push((j, i, k, rat(-c)));
            }
        };
        for (ra, a) in roots.positive.iter().enumerate() {
            for i in 0..l {
                let simple: Vec<i64> = (0..l).map(|k| i64::from(k == i)).collect();
                let w = roots.inner(a, &simple);
                if w != 0 {
                    push(h(i), x(ra), x(ra), w);
                    push(h(i), y(ra), y(ra), -w);
                }
                if a[i] != 0 {
                    push(x(ra), y(ra), h(i), a[i]);
                }
            }
            for (rb, b) in roots.positive.iter().enumerate().skip(ra + 1) {
                let sum: Root = a.iter().zip(b).map(|(p, q)| p + q).collect();
                if let Some(&rs) = index.get(&sum) {
                    let e = eps(a, b);
                    push(x(ra), x(rb), x(rs), e);
                    push(y(ra), y(rb), y(rs), -e);
                }
            }
            for (rb, b) in roots.positive.iter().enumerate() {
                if ra == rb {
                    continue;
                }
                let diff: Root = a.iter().zip(b).map(|(p, q)| p - q).collect();
                let neg: Root = diff.iter().map(|d| -d).collect();
                if let Some(&rg) = index.get(&diff) {
                    push(x(ra), y(rb), x(rg), -eps(a, b));
                } else if let Some(&rg) = index.get(&neg) {
                    push(x(ra), y(rb), y(rg), eps(a, b));
                }
            }
        }
        let mut labels: Vec<String> = Vec::with_capacity(2 * np + l);
        let fmt_root = |r: &Root| r.iter().map(i64::to_string).collect::<String>();
        labels.extend(roots.positive.iter().map(|r| format!("x{}", fmt_root(r))));
        labels.extend(roots.positive.iter().map(|r| format!("y{}", fmt_root(r))));
        labels.extend((1..=l).map(|i| format!("h{i}")));
        let alg = LieAlg::from_brackets(2 * np + l, entries)?.with_labels(labels);
        Ok(ChevalleyAlgebra { roots, alg, index })
    }

    pub fn dim(&self) -> usize {
        self.alg.dim()
    }

    pub fn rank(&self) -> usize {
        self.roots.rank()
    }

    pub fn positive_count(&self) -> usize {
        self.roots.positive.len()
    }

    pub fn x(&self, r: usize) -> usize {
        r
    }

    pub fn y(&self, r: usize) -> usize {
        self.positive_count() + r
    }

    pub fn h(&self, i: usize) -> usize {
        2 * self.positive_count() + i
    }

    /// Index of the positive root `αᵢ` in the root list.
    pub fn simple(&self, i: usize) -> usize {
        let mut r = vec![0; self.rank()];
        r[i] = 1;
        self.index[&r]
    }

    pub fn root_index(&self, r: &[i64]) -> Option<usize> {
        self.index.get(r).copied()
    }

    pub fn kind(&self, b: usize) -> BasisKind {
        let np = self.positive_count();
        if b < np {
            BasisKind::X(b)
        } else if b < 2 * np {
            BasisKind::Y(b - np)
        } else {
            BasisKind::H(b - 2 * np)
        }
    }

    /// Root (or zero) carried by a basis element.
    pub fn weight(&self, b: usize) -> Root {
        match self.kind(b) {
            BasisKind::X(r) => self.roots.positive[r].clone(),
            BasisKind::Y(r) => self.roots.positive[r].iter().map(|c| -c).collect(),
            BasisKind::H(_) => vec![0; self.rank()],
        }
    }
}
