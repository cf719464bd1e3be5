//! Exact arithmetic over ℚ: rationals, dense matrices, polynomials.

pub mod conic;
pub mod lll;
pub mod mat;
pub mod poly;
pub mod rat;

pub use mat::{kernel, rank, signature, solve, Mat, Signature};
pub use poly::{minpoly, minpoly_squarefree, Poly};
pub use rat::{frac, rat, Rat};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

pub fn is_zero_vec(v: &[Rat]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn zero_vec(n: usize) -> Vec<Rat> {
    vec![Rat::zero(); n]
}

pub fn unit_vec(n: usize, i: usize) -> Vec<Rat> {
    let mut v = zero_vec(n);
    v[i] = rat(1);
    v
}

/// `acc += s * v`
pub fn axpy(acc: &mut [Rat], s: &Rat, v: &[Rat]) {
    if s.is_zero() {
        return;
    }
    for (a, b) in acc.iter_mut().zip(v) {
        if !b.is_zero() {
            *a += s * b;
        }
    }
}

pub fn scale_vec(v: &[Rat], s: &Rat) -> Vec<Rat> {
    v.iter().map(|x| x * s).collect()
}

pub fn sub_vec(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn add_vec(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// Positive multiple of `v` with coprime integer entries.
pub fn primitive(v: &[Rat]) -> Vec<Rat> {
    let den = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let num = v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x.numer()));
    if num.is_zero() {
        return v.to_vec();
    }
    let s = Rat::new(den, num);
    v.iter().map(|x| x * &s).collect()
}

/// Echelon basis of the span of `vectors` (all of length `dim`): the reduced
/// row-echelon rows, each scaled to a primitive integer vector.
pub fn span_basis(dim: usize, vectors: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    if vectors.is_empty() {
        return Vec::new();
    }
    let m = Mat::from_rows(vectors.to_vec());
    debug_assert_eq!(m.cols(), dim);
    let (r, piv) = m.rref();
    (0..piv.len()).map(|i| primitive(r.row(i))).collect()
}
/// Rank of a list of vectors.
pub fn vec_rank(vectors: &[Vec<Rat>]) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    Mat::from_rows(vectors.to_vec()).rank()
}

/// Coordinates of `v` in the basis `basis` (vectors as columns), if `v` lies in its span.
pub fn coords_in(basis: &[Vec<Rat>], v: &[Rat]) -> Option<Vec<Rat>> {
    if basis.is_empty() {
        return if is_zero_vec(v) { Some(Vec::new()) } else { None };
    }
    Mat::from_cols(v.len(), basis).solve(v)
}
