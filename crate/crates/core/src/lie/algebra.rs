//! Lie algebras over ℚ given by structure constants.

use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::subspace::{kernel_on_span, Subspace};
use crate::error::{Error, Result};
use crate::exact::{self, rat, Mat, Rat};

/// Structure constants `[b_i, b_j] = Σ_k c_ijk b_k`.
///
/// Every ordered pair `(i, j)` has a slot holding the nonzero `(k, c_ijk)`
/// terms sorted by `k`; the `(j, i)` slot is the negation, enforced on
/// construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlg {
    dim: usize,
    table: Vec<Vec<(usize, Rat)>>,
    labels: Option<Vec<String>>,
}

impl LieAlg {
    pub fn abelian(dim: usize) -> Self {
        LieAlg { dim, table: vec![Vec::new(); dim * dim], labels: None }
    }

    /// Builds from brackets `[b_i, b_j]` with `i < j` (0-based). Repeated
    /// entries are summed; `i >= j` is rejected.
    pub fn from_brackets<I>(dim: usize, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, usize, Rat)>,
    {
        let mut dense: Vec<Vec<Rat>> = Vec::new();
        let mut touched = vec![false; dim * dim];
        dense.resize_with(dim * dim, Vec::new);
        for (i, j, k, c) in entries {
            if i >= dim || j >= dim || k >= dim {
                return Err(Error::IndexRange(format!("bracket ({i},{j})->{k} in dim {dim}")));
            }
            if i >= j {
                return Err(Error::Invalid(format!("bracket index pair ({i},{j}) must satisfy i < j")));
            }
            let slot = &mut dense[i * dim + j];
            if slot.is_empty() {
                *slot = exact::zero_vec(dim);
            }
            slot[k] += c;
            touched[i * dim + j] = true;
        }
        let mut alg = LieAlg::abelian(dim);
        for i in 0..dim {
            for j in i + 1..dim {
                if !touched[i * dim + j] {
                    continue;
                }
                let terms: Vec<(usize, Rat)> =
                    dense[i * dim + j].iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, c)| (k, c.clone())).collect();
                alg.table[j * dim + i] = terms.iter().map(|(k, c)| (*k, -c.clone())).collect();
                alg.table[i * dim + j] = terms;
            }
        }
        Ok(alg)
    }

    /// Builds from a dense cube `c[i][j][k]`, checking antisymmetry.
    pub fn from_dense(c: &[Vec<Vec<Rat>>]) -> Result<Self> {
        let dim = c.len();
        let mut entries = Vec::new();
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    if c[i][j][k] != -c[j][i][k].clone() {
                        return Err(Error::Invalid(format!("constants not antisymmetric at ({i},{j},{k})")));
                    }
                    if i < j && !c[i][j][k].is_zero() {
                        entries.push((i, j, k, c[i][j][k].clone()));
                    }
                }
            }
        }
        LieAlg::from_brackets(dim, entries)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.dim);
        self.labels = Some(labels);
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Nonzero terms of `[b_i, b_j]`.
    pub fn bracket_basis(&self, i: usize, j: usize) -> &[(usize, Rat)] {
        &self.table[i * self.dim + j]
    }

    pub fn constant(&self, i: usize, j: usize, k: usize) -> Rat {
        self.bracket_basis(i, j).iter().find(|(kk, _)| *kk == k).map_or_else(Rat::zero, |(_, c)| c.clone())
    }

    pub fn bracket(&self, a: &[Rat], b: &[Rat]) -> Vec<Rat> {
        let mut out = exact::zero_vec(self.dim);
        let nz_b: Vec<usize> = (0..self.dim).filter(|&j| !b[j].is_zero()).collect();
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for &j in &nz_b {
                let terms = self.bracket_basis(i, j);
                if terms.is_empty() {
                    continue;
                }
                let s = ai * &b[j];
                for (k, c) in terms {
                    out[*k] += &s * c;
                }
            }
        }
        out
    }

    /// `ad x` as a matrix: column `j` holds `[x, b_j]`.
    pub fn ad(&self, x: &[Rat]) -> Mat {
        let cols: Vec<Vec<Rat>> = (0..self.dim).map(|j| self.bracket(x, &exact::unit_vec(self.dim, j))).collect();
        Mat::from_cols(self.dim, &cols)
    }

    fn integer_table(&self) -> Option<Vec<Vec<(usize, i64)>>> {
        self.table.iter().map(|terms| terms.iter().map(|(k, c)| exact::rat::to_i64(c).map(|v| (*k, v))).collect()).collect()
    }

    /// First triple `i < j < k` violating the Jacobi identity, if any.
    pub fn jacobi_witness(&self) -> Option<(usize, usize, usize)> {
        let d = self.dim;
        let triples: Vec<(usize, usize)> = (0..d).flat_map(|i| (i + 1..d).map(move |j| (i, j))).collect();
        if let Some(int) = self.integer_table() {
            return triples.par_iter().find_map_first(|&(i, j)| {
                let mut acc = vec![0i64; d];
                for k in j + 1..d {
                    jacobi_int(&int, d, i, j, k, &mut acc);
                    if acc.iter().any(|&x| x != 0) {
                        return Some((i, j, k));
                    }
                }
                None
            });
        }
        triples.par_iter().find_map_first(|&(i, j)| (j + 1..d).find(|&k| !exact::is_zero_vec(&self.jacobi_sum(i, j, k))).map(|k| (i, j, k)))
    }

    fn jacobi_sum(&self, i: usize, j: usize, k: usize) -> Vec<Rat> {
        let mut acc = exact::zero_vec(self.dim);
        for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
            for (p, cp) in self.bracket_basis(a, b) {
                for (q, cq) in self.bracket_basis(*p, c) {
                    acc[*q] += cp * cq;
                }
            }
        }
        acc
    }

    pub fn satisfies_jacobi(&self) -> bool {
        self.jacobi_witness().is_none()
    }

    pub fn center(&self) -> Subspace {
        let full = Subspace::full(self.dim);
        kernel_on_span(self.dim, full.basis(), |x| (0..self.dim).flat_map(|j| self.bracket(x, &exact::unit_vec(self.dim, j))).collect())
    }

    pub fn derived(&self) -> Subspace {
        let mut vecs = Vec::new();
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                let terms = self.bracket_basis(i, j);
                if terms.is_empty() {
                    continue;
                }
                let mut v = exact::zero_vec(self.dim);
                for (k, c) in terms {
                    v[*k] = c.clone();
                }
                vecs.push(v);
            }
        }
        Subspace::span(self.dim, &vecs)
    }

    /// Brackets of two subspaces, spanned.
    pub fn bracket_spaces(&self, a: &Subspace, b: &Subspace) -> Subspace {
        let mut vecs = Vec::new();
        for x in a.basis() {
            for y in b.basis() {
                vecs.push(self.bracket(x, y));
            }
        }
        Subspace::span(self.dim, &vecs)
    }

    pub fn lower_central_series(&self) -> Vec<Subspace> {
        let full = Subspace::full(self.dim);
        let mut series = vec![full.clone()];
        loop {
            let next = self.bracket_spaces(&full, series.last().unwrap());
            if next.dim() == series.last().unwrap().dim() {
                break;
            }
            let stop = next.dim() == 0;
            series.push(next);
            if stop {
                break;
            }
        }
        series
    }

    pub fn is_two_step(&self) -> bool {
        self.center().contains_subspace(&self.derived())
    }

    /// Two-step with `[L,L] = z(L)`.
    pub fn is_nondegenerate_lie(&self) -> bool {
        let z = self.center();
        let d = self.derived();
        z.contains_subspace(&d) && z.dim() == d.dim()
    }

    /// Splits a two-step algebra as `L' × A` with `A` abelian and `L'` non-degenerate.
    ///
    /// `A` extends a basis of `[L,L]` inside `z(L)` greedily from the center's
    /// echelon basis; `U'` extends `z(L)` by coordinate vectors in index order.
    /// `L'` is returned in the basis `U'` followed by the echelon basis of `[L,L]`.
    pub fn degenerate_split(&self) -> Result<(LieAlg, usize)> {
        if !self.is_two_step() {
            return Err(Error::NotTwoStep);
        }
        let z = self.center();
        let d = self.derived();
        let a = d.greedy_extension(z.basis());
        let u_idx = z.coordinate_complement();
        let mut basis: Vec<Vec<Rat>> = u_idx.iter().map(|&i| exact::unit_vec(self.dim, i)).collect();
        basis.extend(d.basis().iter().cloned());
        let sub = self.restrict_to_subalgebra(&basis)?;
        Ok((sub, a.len()))
    }

    /// Structure constants of the subalgebra spanned by `basis`, in that basis.
    pub fn restrict_to_subalgebra(&self, basis: &[Vec<Rat>]) -> Result<LieAlg> {
        let n = basis.len();
        let mut entries = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let br = self.bracket(&basis[i], &basis[j]);
                let c = exact::coords_in(basis, &br).ok_or_else(|| Error::Invalid("span is not closed under the bracket".into()))?;
                for (k, ck) in c.into_iter().enumerate() {
                    if !ck.is_zero() {
                        entries.push((i, j, k, ck));
                    }
                }
            }
        }
        LieAlg::from_brackets(n, entries)
    }

    /// Killing form Gram matrix `K(b_i, b_j) = Tr(ad b_i · ad b_j)`.
    pub fn killing(&self) -> Mat {
        let ads: Vec<Mat> = (0..self.dim).map(|i| self.ad(&exact::unit_vec(self.dim, i))).collect();
        let mut k = Mat::zeros(self.dim, self.dim);
        for i in 0..self.dim {
            for j in i..self.dim {
                let t = trace_of_product(&ads[i], &ads[j]);
                k[(i, j)] = t.clone();
                k[(j, i)] = t;
            }
        }
        k
    }

    /// Centralizer, inside `span(within)`, of the given elements.
    pub fn centralizer_in(&self, within: &Subspace, targets: &[Vec<Rat>]) -> Subspace {
        if targets.is_empty() {
            return within.clone();
        }
        kernel_on_span(self.dim, within.basis(), |z| targets.iter().flat_map(|t| self.bracket(z, t)).collect())
    }

    /// Transports the constants to the basis given by the columns of `g`.
    pub fn change_basis(&self, g: &Mat) -> Result<LieAlg> {
        if g.rows() != self.dim || g.cols() != self.dim {
            return Err(Error::Dimension(format!("base change must be {0}x{0}", self.dim)));
        }
        let ginv = g.inverse().ok_or(Error::Singular)?;
        let cols: Vec<Vec<Rat>> = (0..self.dim).map(|j| g.col(j)).collect();
        let mut entries = Vec::new();
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                let br = self.bracket(&cols[i], &cols[j]);
                for (k, c) in ginv.mul_vec(&br).into_iter().enumerate() {
                    if !c.is_zero() {
                        entries.push((i, j, k, c));
                    }
                }
            }
        }
        LieAlg::from_brackets(self.dim, entries)
    }

    pub fn to_json(&self) -> LieAlgJson {
        let mut brackets = Vec::new();
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                let terms = self.bracket_basis(i, j);
                if terms.is_empty() {
                    continue;
                }
                brackets.push(BracketJson {
                    i: i + 1,
                    j: j + 1,
                    coeffs: terms.iter().map(|(k, c)| CoeffJson { k: k + 1, c: c.clone() }).collect(),
                });
            }
        }
        LieAlgJson { dim: self.dim, brackets, labels: self.labels.clone() }
    }

    pub fn from_json(j: &LieAlgJson) -> Result<Self> {
        let mut entries = Vec::new();
        for b in &j.brackets {
            if b.i == 0 || b.j == 0 || b.i >= b.j {
                return Err(Error::Invalid(format!("bracket pair ({},{}) must satisfy 1 <= i < j", b.i, b.j)));
            }
            for c in &b.coeffs {
                if c.k == 0 {
                    return Err(Error::IndexRange("coefficient index k must be >= 1".into()));
                }
                entries.push((b.i - 1, b.j - 1, c.k - 1, c.c.clone()));
            }
        }
        let alg = LieAlg::from_brackets(j.dim, entries)?;
        match &j.labels {
            Some(l) if l.len() == j.dim => Ok(alg.with_labels(l.clone())),
            Some(_) => Err(Error::Invalid("label count must equal dim".into())),
            None => Ok(alg),
        }
    }
}

fn jacobi_int(t: &[Vec<(usize, i64)>], d: usize, i: usize, j: usize, k: usize, acc: &mut [i64]) {
    acc.iter_mut().for_each(|x| *x = 0);
    for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
        for &(p, cp) in &t[a * d + b] {
            for &(q, cq) in &t[p * d + c] {
                acc[q] += cp * cq;
            }
        }
    }
}

/// `Tr(AB)` without forming the product.
pub fn trace_of_product(a: &Mat, b: &Mat) -> Rat {
    let n = a.rows();
    let mut t = Rat::zero();
    for i in 0..n {
        for (j, x) in a.row(i).iter().enumerate() {
            if !x.is_zero() {
                let y = &b[(j, i)];
                if !y.is_zero() {
                    t += x * y;
                }
            }
        }
    }
    t
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CoeffJson {
    pub k: usize,
    #[serde(with = "crate::exact::rat::serde_rat")]
    pub c: Rat,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BracketJson {
    pub i: usize,
    pub j: usize,
    pub coeffs: Vec<CoeffJson>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct LieAlgJson {
    pub dim: usize,
    pub brackets: Vec<BracketJson>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub labels: Option<Vec<String>>,
}

/// sl(2) in the basis (h, x, y): `[h,x]=2x, [h,y]=-2y, [x,y]=h`.
pub fn sl2() -> LieAlg {
    LieAlg::from_brackets(3, [(0, 1, 1, rat(2)), (0, 2, 2, rat(-2)), (1, 2, 0, rat(1))]).expect("valid constants").with_labels(vec![
        "h".into(),
        "x".into(),
        "y".into(),
    ])
}

/// Heisenberg algebra of dimension 2k+1: `[b_i, b_{k+i}] = b_{2k}`.
pub fn heisenberg(k: usize) -> LieAlg {
    LieAlg::from_brackets(2 * k + 1, (0..k).map(|i| (i, k + i, 2 * k, rat(1)))).expect("valid constants")
}

/// Direct product with an abelian algebra of dimension `extra`.
pub fn with_abelian_factor(l: &LieAlg, extra: usize) -> LieAlg {
    let mut entries = Vec::new();
    for i in 0..l.dim() {
        for j in i + 1..l.dim() {
            for (k, c) in l.bracket_basis(i, j) {
                entries.push((i, j, *k, c.clone()));
            }
        }
    }
    LieAlg::from_brackets(l.dim() + extra, entries).expect("valid constants")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn jacobi_detects_bad_constants() {
        let bad = LieAlg::from_brackets(3, [(0, 1, 0, rat(1)), (1, 2, 1, rat(1))]).unwrap();
        assert!(bad.jacobi_witness().is_some());
        assert!(LieAlg::abelian(5).jacobi_witness().is_none());
        assert!(sl2().jacobi_witness().is_none());
    }

    #[test]
    fn rational_jacobi_path() {
        let half = exact::frac(1, 2);
        let bad = LieAlg::from_brackets(3, [(0, 1, 0, half.clone()), (1, 2, 1, half)]).unwrap();
        assert!(bad.jacobi_witness().is_some());
    }

    #[test]
    fn centers_and_derived() {
        let ab = LieAlg::abelian(4);
        assert_eq!(ab.center().dim(), 4);
        assert_eq!(ab.derived().dim(), 0);
        let h = heisenberg(1);
        assert_eq!(h.center().dim(), 1);
        assert_eq!(sl2().derived().dim(), 3);
        assert_eq!(sl2().center().dim(), 0);
    }

    #[test]
    fn two_step_and_nondegenerate() {
        assert!(!sl2().is_two_step());
        assert!(LieAlg::abelian(3).is_two_step());
        let h5 = with_abelian_factor(&heisenberg(1), 5);
        assert!(h5.is_two_step());
        assert!(!h5.is_nondegenerate_lie());
        assert!(!LieAlg::abelian(8).is_nondegenerate_lie());
        assert!(heisenberg(1).is_nondegenerate_lie());
    }

    #[test]
    fn split_off_abelian_factor() {
        let (lp, a) = with_abelian_factor(&heisenberg(1), 5).degenerate_split().unwrap();
        assert_eq!(a, 5);
        assert_eq!(lp.dim(), 3);
        assert!(lp.is_nondegenerate_lie());
        let (z, a) = LieAlg::abelian(8).degenerate_split().unwrap();
        assert_eq!((z.dim(), a), (0, 8));
        assert_eq!(sl2().degenerate_split(), Err(Error::NotTwoStep));
    }

    #[test]
    fn killing_of_sl2() {
        // h:8, x+y:8, x-y:-8
        let k = sl2().killing();
        assert_eq!(k, Mat::from_i64(3, 3, &[8, 0, 0, 0, 0, 4, 0, 4, 0]));
        assert_eq!(k.signature().unwrap(), exact::Signature::new(2, 1, 0));
    }

    #[test]
    fn killing_of_two_step_vanishes() {
        assert!(with_abelian_factor(&heisenberg(2), 2).killing().is_zero());
    }

    #[test]
    fn change_basis_round_trip() {
        let l = sl2();
        let g = Mat::from_i64(3, 3, &[1, 2, 0, 0, 1, 0, 3, 0, 1]);
        let l2 = l.change_basis(&g).unwrap();
        assert!(l2.satisfies_jacobi());
        let back = l2.change_basis(&g.inverse().unwrap()).unwrap();
        assert_eq!(back.to_json().brackets.len(), l.to_json().brackets.len());
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(back.bracket_basis(i, j), l.bracket_basis(i, j));
            }
        }
        assert_eq!(l.change_basis(&Mat::zeros(3, 3)), Err(Error::Singular));
    }

    #[test]
    fn json_round_trip() {
        let l = sl2();
        let j = serde_json::to_string(&l.to_json()).unwrap();
        let back = LieAlg::from_json(&serde_json::from_str(&j).unwrap()).unwrap();
        assert_eq!(back, l);
    }

    #[test]
    fn lower_central_series_of_heisenberg() {
        let dims: Vec<usize> = heisenberg(2).lower_central_series().iter().map(Subspace::dim).collect();
        assert_eq!(dims, vec![5, 1, 0]);
    }
}
