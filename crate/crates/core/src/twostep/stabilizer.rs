//! The stabilizer `𝔤ₑ ⊆ gl(m) ⊕ gl(n)` of a tensor.

use super::tensor::SkewTensor;
use crate::exact::{self, Mat, Rat};
use crate::lie::{PairMat, Subspace};

/// Matrix of `x ↦ x·e`, one column per flat coordinate of `gl(m) ⊕ gl(n)`.
pub fn action_matrix(e: &SkewTensor) -> Mat {
    let (m, n) = e.signature();
    let flat = PairMat::flat_dim(m, n);
    let cols: Vec<Vec<Rat>> = (0..flat).map(|c| e.act(&PairMat::from_vec(m, n, &exact::unit_vec(flat, c))).to_coords()).collect();
    Mat::from_cols(super::tensor::binom2(m) * n, &cols)
}

/// `{(A, B) : (A, B)·e = 0}` in flat coordinates.
pub fn stabilizer_lie(e: &SkewTensor) -> Subspace {
    let (m, n) = e.signature();
    Subspace::span(PairMat::flat_dim(m, n), &action_matrix(e).kernel())
}

/// `Ad(P, Q)` applied to a flat element.
pub fn conjugate(m: usize, n: usize, x: &[Rat], p: &Mat, q: &Mat) -> Vec<Rat> {
    let x = PairMat::from_vec(m, n, x);
    let pi = p.inverse().expect("invertible");
    let qi = q.inverse().expect("invertible");
    PairMat::new(p.mul(&x.a).mul(&pi), q.mul(&x.b).mul(&qi)).to_vec()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn zero_tensor_has_full_stabilizer() {
        assert_eq!(stabilizer_lie(&SkewTensor::zero(6, 2)).dim(), 40);
    }

    #[test]
    fn scaling_element_stabilizes() {
        let e = super::super::parse::parse_tensor("e125+e137+e248+e346", 4, 4).unwrap();
        let s = stabilizer_lie(&e);
        let d = PairMat::new(Mat::identity(4), Mat::identity(4).scale(&rat(2)));
        assert!(s.contains(&d.to_vec()));
    }
}
