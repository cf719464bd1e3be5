//! Automorphism groups of positive-definite integral lattices by backtracking.
//!
//! An automorphism is an integer matrix `g` whose rows `v₁,…,v_d` are the
//! images of the basis vectors, so that `g·G·gᵀ = G`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{rat, Mat};

pub type IntMat = Vec<Vec<i64>>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GramJson {
    pub gram: IntMat,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GramLattice {
    gram: IntMat,
    /// `floor(sqrt(t·(G⁻¹)ᵢᵢ))` needs the inverse diagonal.
    inv_diag: Vec<crate::exact::Rat>,
}

fn to_mat(a: &IntMat) -> Mat {
    Mat::from_rows(a.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect())
}

impl GramLattice {
    pub fn new(gram: IntMat) -> Result<Self> {
        let d = gram.len();
        if gram.iter().any(|r| r.len() != d) {
            return Err(Error::NotSquare(d, gram.iter().map(Vec::len).max().unwrap_or(0)));
        }
        let m = to_mat(&gram);
        if !m.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        // leading principal minors
        for k in 1..=d {
            let minor = Mat::from_rows((0..k).map(|i| m.row(i)[..k].to_vec()).collect());
            if minor.det()? <= rat(0) {
                return Err(Error::NotPositiveDefinite);
            }
        }
        let inv = m.inverse().ok_or(Error::Singular)?;
        Ok(GramLattice { inv_diag: (0..d).map(|i| inv[(i, i)].clone()).collect(), gram })
    }

    pub fn from_json(j: &GramJson) -> Result<Self> {
        GramLattice::new(j.gram.clone())
    }

    pub fn dim(&self) -> usize {
        self.gram.len()
    }

    pub fn gram(&self) -> &IntMat {
        &self.gram
    }

    pub fn inner(&self, u: &[i64], v: &[i64]) -> i64 {
        let mut s = 0;
        for (i, ui) in u.iter().enumerate() {
            for (j, vj) in v.iter().enumerate() {
                s += ui * self.gram[i][j] * vj;
            }
        }
        s
    }

    fn bound(&self, i: usize, t: i64) -> i64 {
        let x = rat(t) * &self.inv_diag[i];
        let mut b = 0i64;
        while rat((b + 1) * (b + 1)) <= x {
            b += 1;
        }
        b
    }

    /// All integer vectors of norm `t`, in lexicographic order.
    pub fn vectors_of_norm(&self, t: i64) -> Result<Vec<Vec<i64>>> {
        if t < 0 {
            return Err(Error::Invalid(format!("negative norm {t}")));
        }
        let d = self.dim();
        let bounds: Vec<i64> = (0..d).map(|i| self.bound(i, t)).collect();
        let mut out = Vec::new();
        let mut v = vec![0i64; d];
        self.enumerate(0, &bounds, &mut v, t, &mut out);
        Ok(out)
    }

    fn enumerate(&self, i: usize, bounds: &[i64], v: &mut Vec<i64>, t: i64, out: &mut Vec<Vec<i64>>) {
        if i == v.len() {
            if self.inner(v, v) == t {
                out.push(v.clone());
            }
            return;
        }
        for x in -bounds[i]..=bounds[i] {
            v[i] = x;
            self.enumerate(i + 1, bounds, v, t, out);
        }
        v[i] = 0;
    }

    pub fn is_automorphism(&self, g: &IntMat) -> bool {
        g.len() == self.dim() && (0..self.dim()).all(|i| (0..self.dim()).all(|j| self.inner(&g[i], &g[j]) == self.gram[i][j]))
    }

    /// Backtracking over images of the basis vectors.
    pub fn aut_group(&self) -> Result<AutGroup> {
        let d = self.dim();
        let candidates: Vec<Vec<Vec<i64>>> = (0..d).map(|i| self.vectors_of_norm(self.gram[i][i])).collect::<Result<_>>()?;
        let mut elements = Vec::new();
        let mut rows = Vec::with_capacity(d);
        self.extend(&candidates, &mut rows, &mut elements);
        // images must also form a basis of the lattice
        elements.retain(|g| det_i64(g).abs() == 1);
        elements.sort_by_cached_key(|g| g.concat());
        let order = elements.len();
        Ok(AutGroup { dim: d, elements, order })
    }

    fn extend(&self, candidates: &[Vec<Vec<i64>>], rows: &mut Vec<Vec<i64>>, out: &mut Vec<IntMat>) {
        let i = rows.len();
        if i == candidates.len() {
            out.push(rows.clone());
            return;
        }
        for v in &candidates[i] {
            if rows.iter().enumerate().all(|(j, r)| self.inner(r, v) == self.gram[j][i]) {
                rows.push(v.clone());
                self.extend(candidates, rows, out);
                rows.pop();
            }
        }
    }

    /// `P·G·Pᵀ`.
    pub fn transform(&self, p: &IntMat) -> Result<GramLattice> {
        GramLattice::new(mul(&mul(p, &self.gram), &transpose(p)))
    }
}

pub fn mul(a: &IntMat, b: &IntMat) -> IntMat {
    let (n, k, m) = (a.len(), b.len(), b.first().map_or(0, Vec::len));
    (0..n).map(|i| (0..m).map(|j| (0..k).map(|l| a[i][l] * b[l][j]).sum()).collect()).collect()
}

pub fn transpose(a: &IntMat) -> IntMat {
    let m = a.first().map_or(0, Vec::len);
    (0..m).map(|j| a.iter().map(|r| r[j]).collect()).collect()
}

pub fn identity(d: usize) -> IntMat {
    (0..d).map(|i| (0..d).map(|j| i64::from(i == j)).collect()).collect()
}

pub fn det_i64(a: &IntMat) -> i64 {
    let d = to_mat(a).det().expect("square");
    crate::exact::rat::to_i64(&d).expect("integer determinant")
}

/// Integer inverse of a unimodular matrix.
pub fn inverse(a: &IntMat) -> Option<IntMat> {
    let inv = to_mat(a).inverse()?;
    (0..a.len()).map(|i| (0..a.len()).map(|j| crate::exact::rat::to_i64(&inv[(i, j)])).collect()).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AutGroup {
    pub dim: usize,
    pub elements: Vec<IntMat>,
    pub order: usize,
}

impl AutGroup {
    pub fn contains(&self, g: &IntMat) -> bool {
        self.elements.binary_search_by(|e| e.concat().cmp(&g.concat())).is_ok()
    }

    /// Identity, products and inverses all lie in the element list.
    pub fn is_closed(&self) -> bool {
        self.contains(&identity(self.dim))
            && self.elements.iter().all(|a| inverse(a).is_some_and(|i| self.contains(&i)))
            && self.elements.iter().all(|a| self.elements.iter().all(|b| self.contains(&mul(a, b))))
    }

    /// A generating set of least size when that size is at most 3, found in
    /// lexicographic order; otherwise a greedy one.
    pub fn generators(&self) -> Vec<IntMat> {
        let generates = |gens: &[IntMat]| closure(gens, self.dim).len() == self.order;
        let e = &self.elements;
        if self.order == 1 {
            return Vec::new();
        }
        for a in 0..e.len() {
            if generates(&e[a..=a]) {
                return vec![e[a].clone()];
            }
        }
        for a in 0..e.len() {
            for b in a + 1..e.len() {
                let gens = [e[a].clone(), e[b].clone()];
                if generates(&gens) {
                    return gens.to_vec();
                }
            }
        }
        for a in 0..e.len() {
            for b in a + 1..e.len() {
                for c in b + 1..e.len() {
                    let gens = [e[a].clone(), e[b].clone(), e[c].clone()];
                    if generates(&gens) {
                        return gens.to_vec();
                    }
                }
            }
        }
        let mut gens: Vec<IntMat> = Vec::new();
        let mut sub = vec![identity(self.dim)];
        for g in e {
            if !sub.contains(g) {
                gens.push(g.clone());
                sub = closure(&gens, self.dim);
            }
        }
        gens
    }
}

pub fn closure(gens: &[IntMat], d: usize) -> Vec<IntMat> {
    let mut set = vec![identity(d)];
    let mut frontier = set.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for a in &frontier {
            for g in gens {
                let p = mul(a, g);
                if !set.contains(&p) {
                    set.push(p.clone());
                    next.push(p);
                }
            }
        }
        frontier = next;
    }
    set
}

/// Gram matrix whose automorphism group has order 24.
pub fn reference_gram() -> IntMat {
    vec![vec![4, 2, 0], vec![2, 4, 0], vec![0, 0, 31]]
}

/// Three generators of the automorphism group of [`reference_gram`].
pub fn reference_generators() -> [IntMat; 3] {
    [
        vec![vec![0, 1, 0], vec![1, 0, 0], vec![0, 0, 1]],
        vec![vec![1, -1, 0], vec![0, -1, 0], vec![0, 0, -1]],
        vec![vec![-1, 0, 0], vec![0, -1, 0], vec![0, 0, 1]],
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_lattice() {
        let l = GramLattice::new(identity(3)).unwrap();
        assert_eq!(l.vectors_of_norm(1).unwrap().len(), 6);
        let g = l.aut_group().unwrap();
        assert_eq!(g.order, 48);
        assert!(g.is_closed());
    }

    #[test]
    fn rank_one() {
        let g = GramLattice::new(vec![vec![1]]).unwrap().aut_group().unwrap();
        assert_eq!(g.elements, vec![vec![vec![-1]], vec![vec![1]]]);
    }

    #[test]
    fn reference_lattice() {
        let l = GramLattice::new(reference_gram()).unwrap();
        assert!(l.vectors_of_norm(31).unwrap().contains(&vec![0, 0, 1]));
        let v4 = l.vectors_of_norm(4).unwrap();
        assert!(v4.contains(&vec![1, 0, 0]) && v4.contains(&vec![0, -1, 0]));
        let g = l.aut_group().unwrap();
        assert_eq!(g.order, 24);
        assert!(g.is_closed());
        for gen in reference_generators() {
            assert!(g.contains(&gen));
        }
        assert_eq!(closure(&reference_generators(), 3).len(), 24);
        let gens = g.generators();
        assert!(gens.len() <= 3);
        assert_eq!(closure(&gens, 3).len(), 24);
    }

    #[test]
    fn rejects_indefinite() {
        assert_eq!(GramLattice::new(vec![vec![1, 2], vec![2, 1]]), Err(Error::NotPositiveDefinite));
        assert!(GramLattice::new(vec![vec![1, 2], vec![3, 1]]).is_err());
    }
}
