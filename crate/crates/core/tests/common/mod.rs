//! Shared generators and property checks for the integration tests.

#![allow(dead_code)]

use nilreal::duality::pfaffian_pencil_classify;
use nilreal::exact::{frac, rat, Mat};
use nilreal::lie::Subspace;
use nilreal::realtype::fingerprint;
use nilreal::twostep::parse_tensor;
use nilreal::twostep::stabilizer::conjugate;
use nilreal::twostep::tensor::{random_invertible, random_tensor};
use nilreal::twostep::{stabilizer_lie, SkewTensor};
use rand::Rng;

/// Invertible matrix with non-integral rational entries.
pub fn rational_invertible<R: Rng>(n: usize, rng: &mut R) -> Mat {
    let mut lower = Mat::identity(n);
    for i in 0..n {
        for j in 0..i {
            lower[(i, j)] = frac(rng.gen_range(-2..=2), 2);
        }
    }
    let diag: Vec<_> = (0..n).map(|_| frac(rng.gen_range(1..=3) * if rng.gen_bool(0.5) { 1 } else { -1 }, rng.gen_range(1..=3))).collect();
    lower.mul(&random_invertible(n, rng)).mul(&Mat::diag(&diag))
}

pub fn random_symmetric<R: Rng>(n: usize, rng: &mut R) -> Mat {
    let mut s = Mat::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            let v = rat(rng.gen_range(-4..=4));
            s[(i, j)] = v.clone();
            s[(j, i)] = v;
        }
    }
    s
}

/// `stab((P,Q)·e) = Ad(P,Q) stab(e)`.
pub fn stabilizer_equivariant(e: &SkewTensor, p: &Mat, q: &Mat) -> bool {
    let (m, n) = e.signature();
    let moved = e.transform(p, q).unwrap();
    let conj: Vec<_> = stabilizer_lie(e).basis().iter().map(|x| conjugate(m, n, x, p, q)).collect();
    let image = Subspace::span(stabilizer_lie(e).ambient_dim(), &conj);
    let direct = stabilizer_lie(&moved);
    image.dim() == direct.dim() && image.contains_subspace(&direct)
}

pub fn fingerprint_invariant(e: &SkewTensor, p: &Mat, q: &Mat) -> bool {
    fingerprint(&e.transform(p, q).unwrap()).unwrap() == fingerprint(e).unwrap()
}

pub fn classifier_invariant(e: &SkewTensor, p: &Mat, q: &Mat) -> bool {
    pfaffian_pencil_classify(&e.transform(p, q).unwrap()).unwrap().tag == pfaffian_pencil_classify(e).unwrap().tag
}

pub fn congruence_invariant(s: &Mat, p: &Mat) -> bool {
    s.signature().unwrap() == s.congruent(p).signature().unwrap()
}

/// Both notations and JSON read back to the same tensor.
pub fn parser_round_trip(e: &SkewTensor) -> bool {
    let (m, n) = e.signature();
    let json = serde_json::to_string(&e.to_json()).unwrap();
    let back = SkewTensor::from_json(&serde_json::from_str(&json).unwrap()).unwrap();
    parse_tensor(&e.render(), m, n).as_ref() == Ok(e) && parse_tensor(&e.render_compact(), m, n).as_ref() == Ok(e) && back == *e
}

/// Tensor with small rational coefficients.
pub fn random_rational_tensor<R: Rng>(m: usize, n: usize, rng: &mut R) -> SkewTensor {
    let t = random_tensor(m, n, 3, rng);
    let d = rat(rng.gen_range(1..=4));
    SkewTensor::from_coords(m, n, &t.to_coords().iter().map(|c| c / &d).collect::<Vec<_>>()).unwrap()
}
