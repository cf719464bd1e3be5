//! Elements and subspaces of gl(m) ⊕ gl(n).
//!
//! A pair `(A, B)` is flattened to `m² + n²` coordinates: `A` row-major,
//! then `B` row-major.

use num_traits::Zero;

use super::subspace::{kernel_on_span, Subspace};
use crate::exact::{self, Mat, Rat};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairMat {
    pub a: Mat,
    pub b: Mat,
}

impl PairMat {
    pub fn zero(m: usize, n: usize) -> Self {
        PairMat { a: Mat::zeros(m, m), b: Mat::zeros(n, n) }
    }

    pub fn new(a: Mat, b: Mat) -> Self {
        assert!(a.is_square() && b.is_square());
        PairMat { a, b }
    }

    pub fn m(&self) -> usize {
        self.a.rows()
    }

    pub fn n(&self) -> usize {
        self.b.rows()
    }

    pub fn flat_dim(m: usize, n: usize) -> usize {
        m * m + n * n
    }

    pub fn to_vec(&self) -> Vec<Rat> {
        let mut v = self.a.entries().to_vec();
        v.extend_from_slice(self.b.entries());
        v
    }

    pub fn from_vec(m: usize, n: usize, v: &[Rat]) -> Self {
        assert_eq!(v.len(), Self::flat_dim(m, n));
        PairMat { a: Mat::from_vec(m, m, v[..m * m].to_vec()), b: Mat::from_vec(n, n, v[m * m..].to_vec()) }
    }

    pub fn bracket(&self, other: &PairMat) -> PairMat {
        PairMat { a: self.a.commutator(&other.a), b: self.b.commutator(&other.b) }
    }

    pub fn add(&self, other: &PairMat) -> PairMat {
        PairMat { a: self.a.add(&other.a), b: self.b.add(&other.b) }
    }

    pub fn scale(&self, s: &Rat) -> PairMat {
        PairMat { a: self.a.scale(s), b: self.b.scale(s) }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// Block-diagonal matrix acting on ℚ^(m+n).
    pub fn block_diag(&self) -> Mat {
        let (m, n) = (self.m(), self.n());
        let mut out = Mat::zeros(m + n, m + n);
        for i in 0..m {
            for j in 0..m {
                out[(i, j)] = self.a[(i, j)].clone();
            }
        }
        for i in 0..n {
            for j in 0..n {
                out[(m + i, m + j)] = self.b[(i, j)].clone();
            }
        }
        out
    }

    /// `Tr(xy)` on ℚ^(m+n).
    pub fn trace_form(&self, other: &PairMat) -> Rat {
        super::trace_of_product(&self.a, &other.a) + super::trace_of_product(&self.b, &other.b)
    }
}

/// Gram matrix of `Tr(xy)` on a basis of pair matrices.
pub fn ambient_trace_form(m: usize, n: usize, basis: &[Vec<Rat>]) -> Mat {
    let elems: Vec<PairMat> = basis.iter().map(|v| PairMat::from_vec(m, n, v)).collect();
    let d = elems.len();
    let mut g = Mat::zeros(d, d);
    for i in 0..d {
        for j in i..d {
            let t = elems[i].trace_form(&elems[j]);
            g[(i, j)] = t.clone();
            g[(j, i)] = t;
        }
    }
    g
}

/// `{z ∈ S : [z, t] = 0 for every target t}`.
pub fn centralizer_in(m: usize, n: usize, within: &Subspace, targets: &[PairMat]) -> Subspace {
    kernel_on_span(within.ambient_dim(), within.basis(), |z| {
        let z = PairMat::from_vec(m, n, z);
        targets.iter().flat_map(|t| z.bracket(t).to_vec()).collect()
    })
}

/// True iff `span(basis)` is closed under the bracket.
pub fn is_subalgebra(m: usize, n: usize, space: &Subspace) -> bool {
    let elems: Vec<PairMat> = space.basis().iter().map(|v| PairMat::from_vec(m, n, v)).collect();
    elems.iter().enumerate().all(|(i, x)| elems[i + 1..].iter().all(|y| space.contains(&x.bracket(y).to_vec())))
}

/// Structure constants of a matrix subalgebra in its echelon basis.
pub fn structure_constants(m: usize, n: usize, space: &Subspace) -> Option<super::LieAlg> {
    let basis = space.basis();
    let elems: Vec<PairMat> = basis.iter().map(|v| PairMat::from_vec(m, n, v)).collect();
    let mut entries = Vec::new();
    for i in 0..elems.len() {
        for j in i + 1..elems.len() {
            let br = elems[i].bracket(&elems[j]).to_vec();
            if exact::is_zero_vec(&br) {
                continue;
            }
            let c = exact::coords_in(basis, &br)?;
            entries.extend(c.into_iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(k, x)| (i, j, k, x)));
        }
    }
    super::LieAlg::from_brackets(elems.len(), entries).ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn trace_form_signs() {
        let split = PairMat::new(Mat::from_i64(2, 2, &[1, 0, 0, -1]), Mat::zeros(0, 0));
        assert_eq!(split.trace_form(&split), rat(2));
        let rot = PairMat::new(Mat::from_i64(2, 2, &[0, 1, -1, 0]), Mat::zeros(0, 0));
        assert_eq!(rot.trace_form(&rot), rat(-2));
    }

    #[test]
    fn flat_round_trip_and_closure() {
        let x = PairMat::new(Mat::from_i64(2, 2, &[0, 1, 0, 0]), Mat::from_i64(1, 1, &[3]));
        assert_eq!(PairMat::from_vec(2, 1, &x.to_vec()), x);
        let y = PairMat::new(Mat::from_i64(2, 2, &[0, 0, 1, 0]), Mat::zeros(1, 1));
        let h = x.bracket(&y);
        let sl2 = Subspace::span(5, &[x.to_vec(), y.to_vec(), h.to_vec()]);
        assert!(!is_subalgebra(2, 1, &Subspace::span(5, &[x.to_vec(), y.to_vec()])));
        let sl2_only = Subspace::span(5, &[PairMat::new(x.a.clone(), Mat::zeros(1, 1)).to_vec(), y.to_vec(), h.to_vec()]);
        assert!(is_subalgebra(2, 1, &sl2_only));
        assert_eq!(sl2.dim(), 3);
        assert!(is_subalgebra(2, 1, &Subspace::zero(5)));
    }

    #[test]
    fn centralizer_of_diagonal() {
        let h = PairMat::new(Mat::from_i64(2, 2, &[1, 0, 0, -1]), Mat::zeros(1, 1));
        let c = centralizer_in(2, 1, &Subspace::full(5), &[h]);
        // diagonal of gl(2) plus gl(1)
        assert_eq!(c.dim(), 3);
    }
}
