//! Skew tensors `e ∈ Hom(∧²ℚᵐ, ℚⁿ)` and the two-step algebras they define.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{self, rat, Mat, Rat};
use crate::lie::{LieAlg, PairMat, Subspace};

/// `e(e_i ∧ e_j) = Σ_k c·e_k` with `1 ≤ i < j ≤ m` and global `m < k ≤ m+n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewTensor {
    m: usize,
    n: usize,
    terms: BTreeMap<(usize, usize, usize), Rat>,
}

/// Position of the pair `i < j` (0-based) in lexicographic order.
pub fn pair_index(m: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < m);
    i * (2 * m - i - 1) / 2 + (j - i - 1)
}

/// All pairs `i < j` (0-based) in lexicographic order.
pub fn pairs(m: usize) -> Vec<(usize, usize)> {
    (0..m).flat_map(|i| (i + 1..m).map(move |j| (i, j))).collect()
}

pub fn binom2(m: usize) -> usize {
    m * m.saturating_sub(1) / 2
}

impl SkewTensor {
    pub fn zero(m: usize, n: usize) -> Self {
        SkewTensor { m, n, terms: BTreeMap::new() }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn signature(&self) -> (usize, usize) {
        (self.m, self.n)
    }

    /// Adds `c·e_{ij↑k}` (1-based, global `k`); `i > j` flips the sign.
    pub fn add_term(&mut self, i: usize, j: usize, k: usize, c: Rat) -> Result<()> {
        let (m, n) = (self.m, self.n);
        if i == 0 || j == 0 || i > m || j > m {
            return Err(Error::IndexRange(format!("U index ({i},{j}) outside 1..={m}")));
        }
        if i == j {
            return Err(Error::IndexRange(format!("repeated U index {i}")));
        }
        if k <= m || k > m + n {
            return Err(Error::IndexRange(format!("V index {k} outside {}..={}", m + 1, m + n)));
        }
        let (key, c) = if i < j { ((i, j, k), c) } else { ((j, i, k), -c) };
        let entry = self.terms.entry(key).or_insert_with(Rat::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
        Ok(())
    }

    pub fn from_terms<I>(m: usize, n: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, usize, Rat)>,
    {
        let mut t = SkewTensor::zero(m, n);
        for (i, j, k, c) in terms {
            t.add_term(i, j, k, c)?;
        }
        Ok(t)
    }

    /// Nonzero terms `((i, j, k), c)` in key order.
    pub fn terms(&self) -> impl Iterator<Item = (&(usize, usize, usize), &Rat)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coordinates in `ℚ^(C(m,2)·n)`: index `pair_index(i,j)·n + k_local`.
    pub fn to_coords(&self) -> Vec<Rat> {
        let mut v = exact::zero_vec(binom2(self.m) * self.n);
        for (&(i, j, k), c) in &self.terms {
            v[pair_index(self.m, i - 1, j - 1) * self.n + (k - self.m - 1)] = c.clone();
        }
        v
    }

    pub fn from_coords(m: usize, n: usize, v: &[Rat]) -> Result<Self> {
        if v.len() != binom2(m) * n {
            return Err(Error::Dimension(format!("expected {} coordinates, got {}", binom2(m) * n, v.len())));
        }
        let mut t = SkewTensor::zero(m, n);
        for (p, (i, j)) in pairs(m).into_iter().enumerate() {
            for k in 0..n {
                let c = &v[p * n + k];
                if !c.is_zero() {
                    t.terms.insert((i + 1, j + 1, m + k + 1), c.clone());
                }
            }
        }
        Ok(t)
    }

    /// Dense values `e(e_i, e_j)` as local V-vectors, 0-based, antisymmetric.
    pub fn dense(&self) -> Vec<Vec<Vec<Rat>>> {
        let (m, n) = (self.m, self.n);
        let mut d = vec![vec![exact::zero_vec(n); m]; m];
        for (&(i, j, k), c) in &self.terms {
            d[i - 1][j - 1][k - m - 1] = c.clone();
            d[j - 1][i - 1][k - m - 1] = -c.clone();
        }
        d
    }

    /// `e(u, v)` for vectors of U.
    pub fn eval(&self, u: &[Rat], v: &[Rat]) -> Vec<Rat> {
        let mut out = exact::zero_vec(self.n);
        for (&(i, j, k), c) in &self.terms {
            let w = &u[i - 1] * &v[j - 1] - &u[j - 1] * &v[i - 1];
            if !w.is_zero() {
                out[k - self.m - 1] += w * c;
            }
        }
        out
    }

    /// The `n × C(m,2)` matrix of `β_*: ∧²ℚᵐ → ℚⁿ`.
    pub fn beta_star(&self) -> Mat {
        let mut b = Mat::zeros(self.n, binom2(self.m));
        for (&(i, j, k), c) in &self.terms {
            b[(k - self.m - 1, pair_index(self.m, i - 1, j - 1))] = c.clone();
        }
        b
    }

    pub fn is_surjective(&self) -> bool {
        self.beta_star().rank() == self.n
    }

    /// `{u : e(u, ·) = 0}`.
    pub fn radical(&self) -> Subspace {
        let (m, n) = (self.m, self.n);
        let d = self.dense();
        // row (j, k), column i: e(e_i, e_j)_k
        let mut sys = Mat::zeros(m * n, m);
        for i in 0..m {
            for j in 0..m {
                for k in 0..n {
                    sys[(j * n + k, i)] = d[i][j][k].clone();
                }
            }
        }
        Subspace::span(m, &sys.kernel())
    }

    /// Surjective with trivial radical.
    pub fn is_nondegenerate(&self) -> bool {
        self.is_surjective() && self.radical().dim() == 0
    }

    /// Lie algebra action `(A, B)·e = B∘e − e(A·, ·) − e(·, A·)`.
    pub fn act(&self, x: &PairMat) -> SkewTensor {
        let (m, n) = (self.m, self.n);
        let d = self.dense();
        let mut out = SkewTensor::zero(m, n);
        for (i, j) in pairs(m) {
            let mut val = x.b.mul_vec(&d[i][j]);
            for l in 0..m {
                let ali = &x.a[(l, i)];
                if !ali.is_zero() {
                    exact::axpy(&mut val, &-ali.clone(), &d[l][j]);
                }
                let alj = &x.a[(l, j)];
                if !alj.is_zero() {
                    exact::axpy(&mut val, &-alj.clone(), &d[i][l]);
                }
            }
            for (k, c) in val.into_iter().enumerate() {
                if !c.is_zero() {
                    out.terms.insert((i + 1, j + 1, m + k + 1), c);
                }
            }
        }
        out
    }

    /// Group action `(P, Q)·e = Q∘e∘(P⁻¹ × P⁻¹)`.
    pub fn transform(&self, p: &Mat, q: &Mat) -> Result<SkewTensor> {
        if p.rows() != self.m || !p.is_square() || q.rows() != self.n || !q.is_square() {
            return Err(Error::Dimension("base change has the wrong shape".into()));
        }
        let pinv = p.inverse().ok_or(Error::Singular)?;
        let cols: Vec<Vec<Rat>> = (0..self.m).map(|i| pinv.col(i)).collect();
        let mut out = SkewTensor::zero(self.m, self.n);
        for (i, j) in pairs(self.m) {
            let val = q.mul_vec(&self.eval(&cols[i], &cols[j]));
            for (k, c) in val.into_iter().enumerate() {
                if !c.is_zero() {
                    out.terms.insert((i + 1, j + 1, self.m + k + 1), c);
                }
            }
        }
        Ok(out)
    }

    /// Grammar form, e.g. `e(1,2,7)+2*e(3,4,8)-e(3,6,7)`.
    pub fn render(&self) -> String {
        self.render_with(|i, j, k| format!("e({i},{j},{k})"), "*")
    }

    /// Compact form, e.g. `e127+2e348-e367`; requires single-digit indices.
    pub fn render_compact(&self) -> String {
        self.render_with(|i, j, k| format!("e{i}{j}{k}"), "")
    }

    fn render_with(&self, basis: impl Fn(usize, usize, usize) -> String, star: &str) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut s = String::new();
        for (n, (&(i, j, k), c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            if neg {
                s.push('-');
            } else if n > 0 {
                s.push('+');
            }
            let a = c.abs();
            if !a.is_one() {
                s.push_str(&exact::rat::to_string(&a));
                s.push_str(star);
            }
            s.push_str(&basis(i, j, k));
        }
        s
    }

    pub fn to_json(&self) -> TensorJson {
        TensorJson {
            m: self.m,
            n: self.n,
            local_k: false,
            terms: self.terms.iter().map(|(&(i, j, k), c)| TermJson { i, j, k, c: c.clone() }).collect(),
        }
    }

    pub fn from_json(j: &TensorJson) -> Result<Self> {
        let offset = if j.local_k { j.m } else { 0 };
        SkewTensor::from_terms(j.m, j.n, j.terms.iter().map(|t| (t.i, t.j, t.k + offset, t.c.clone())))
    }
}

impl fmt::Display for SkewTensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TermJson {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    #[serde(with = "crate::exact::rat::serde_rat")]
    pub c: Rat,
}

/// `local_k = true` reads `k` in `1..=n` instead of `m+1..=m+n`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TensorJson {
    pub m: usize,
    pub n: usize,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub local_k: bool,
    pub terms: Vec<TermJson>,
}

/// The algebra `U ⊕ V` with `[(u,v),(u',v')] = (0, e(u,u'))`.
pub fn tensor_to_lie(e: &SkewTensor) -> LieAlg {
    let labels = (1..=e.m + e.n).map(|i| format!("e{i}")).collect();
    LieAlg::from_brackets(e.m + e.n, e.terms.iter().map(|(&(i, j, k), c)| (i - 1, j - 1, k - 1, c.clone())))
        .expect("tensor indices are in range")
        .with_labels(labels)
}

/// Recovers a tensor from a non-degenerate two-step algebra.
///
/// `g` has as columns the new basis: coordinate vectors complementing the
/// center, then the echelon basis of the derived algebra.
pub fn lie_to_tensor(l: &LieAlg) -> Result<(SkewTensor, Mat)> {
    if !l.is_two_step() {
        return Err(Error::NotTwoStep);
    }
    if !l.is_nondegenerate_lie() {
        let (_, abelian_dim) = l.degenerate_split()?;
        return Err(Error::Degenerate { abelian_dim });
    }
    let dim = l.dim();
    let derived = l.derived();
    let u_idx = derived.coordinate_complement();
    let (m, n) = (u_idx.len(), derived.dim());
    let mut cols: Vec<Vec<Rat>> = u_idx.iter().map(|&i| exact::unit_vec(dim, i)).collect();
    cols.extend(derived.basis().iter().cloned());
    let g = Mat::from_cols(dim, &cols);
    let moved = l.change_basis(&g)?;
    let mut t = SkewTensor::zero(m, n);
    for i in 0..m {
        for j in i + 1..m {
            for (k, c) in moved.bracket_basis(i, j) {
                t.add_term(i + 1, j + 1, k + 1, c.clone())?;
            }
        }
    }
    Ok((t, g))
}

/// Random tensor with integer coefficients drawn uniformly from `-bound..=bound`.
pub fn random_tensor<R: rand::Rng>(m: usize, n: usize, bound: i64, rng: &mut R) -> SkewTensor {
    let coords: Vec<Rat> = (0..binom2(m) * n).map(|_| rat(rng.gen_range(-bound..=bound))).collect();
    SkewTensor::from_coords(m, n, &coords).expect("coordinate count matches")
}

/// Random invertible integer matrix: a product of unipotent triangular
/// factors and a signed permutation.
pub fn random_invertible<R: rand::Rng>(n: usize, rng: &mut R) -> Mat {
    let mut lower = Mat::identity(n);
    let mut upper = Mat::identity(n);
    for i in 0..n {
        for j in 0..i {
            lower[(i, j)] = rat(rng.gen_range(-2..=2));
            upper[(j, i)] = rat(rng.gen_range(-2..=2));
        }
    }
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        perm.swap(i, rng.gen_range(0..=i));
    }
    let mut p = Mat::zeros(n, n);
    for (i, &j) in perm.iter().enumerate() {
        p[(i, j)] = rat(if rng.gen_bool(0.5) { 1 } else { -1 });
    }
    let scale = Mat::diag(&(0..n).map(|_| rat(rng.gen_range(1..=2))).collect::<Vec<_>>());
    lower.mul(&upper).mul(&p).mul(&scale)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(m: usize, n: usize, terms: &[(usize, usize, usize, i64)]) -> SkewTensor {
        SkewTensor::from_terms(m, n, terms.iter().map(|&(i, j, k, c)| (i, j, k, rat(c)))).unwrap()
    }

    #[test]
    fn pair_indexing_is_lexicographic() {
        let ps = pairs(5);
        assert_eq!(ps.len(), 10);
        for (p, &(i, j)) in ps.iter().enumerate() {
            assert_eq!(pair_index(5, i, j), p);
        }
    }

    #[test]
    fn antisymmetric_normalization() {
        assert_eq!(t(5, 3, &[(3, 1, 8, 1)]), t(5, 3, &[(1, 3, 8, -1)]));
        assert_eq!(t(4, 4, &[(1, 2, 5, 1), (2, 1, 5, 1)]), SkewTensor::zero(4, 4));
        assert!(SkewTensor::from_terms(4, 4, [(1, 1, 5, rat(1))]).is_err());
        assert!(SkewTensor::from_terms(4, 4, [(1, 2, 4, rat(1))]).is_err());
    }

    #[test]
    fn radical_detects_degenerate_tensor() {
        let e = t(6, 2, &[(1, 2, 7, 1), (3, 4, 8, 1)]);
        assert!(e.is_surjective());
        assert_eq!(e.radical().dim(), 2);
        assert!(!e.is_nondegenerate());
    }

    #[test]
    fn transform_matches_action_at_first_order() {
        // stabilizer element (I, 2I)
        let e = t(4, 4, &[(1, 2, 5, 1), (1, 3, 7, 1), (2, 4, 8, 1), (3, 4, 6, 1)]);
        let x = PairMat::new(Mat::identity(4), Mat::identity(4).scale(&rat(2)));
        assert!(e.act(&x).is_zero());
    }

    #[test]
    fn lie_round_trip_for_heisenberg() {
        let h = crate::lie::heisenberg(1);
        let (e, _) = lie_to_tensor(&h).unwrap();
        assert_eq!(e, t(2, 1, &[(1, 2, 3, 1)]));
        let deg = crate::lie::with_abelian_factor(&h, 2);
        assert_eq!(lie_to_tensor(&deg).unwrap_err(), Error::Degenerate { abelian_dim: 2 });
    }

    #[test]
    fn coords_round_trip() {
        let e = t(5, 3, &[(1, 2, 6, 1), (4, 5, 8, -3)]);
        assert_eq!(SkewTensor::from_coords(5, 3, &e.to_coords()).unwrap(), e);
    }

    #[test]
    fn render_forms() {
        let e = SkewTensor::from_terms(5, 3, [(1, 2, 6, rat(1)), (1, 5, 8, rat(-1)), (2, 3, 6, rat(2))]).unwrap();
        assert_eq!(e.render(), "e(1,2,6)-e(1,5,8)+2*e(2,3,6)");
        assert_eq!(e.render_compact(), "e126-e158+2e236");
    }
}
