//! Real type of a reductive matrix Lie algebra: split and compact tori in the
//! center, the semisimple part by Killing signature, and highest weights.

pub mod cartan;
pub mod weights;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{self, minpoly_squarefree, rat, Rat, Signature};
use crate::graded::GradedContext;
use crate::lie::{matrix, PairMat, Subspace};
use crate::sl2::{self, CentralizerResult, Sl2Triple};
use crate::twostep::{stabilizer_lie, SkewTensor, WeightMultiset};

pub use weights::{canonical_weights, highest_weights, weights_match, IdealKind, WeightData};

/// `(dim, positive, negative)` of the Killing form → label.
pub const SEMISIMPLE_TYPES: [(usize, usize, usize, &str, bool); 7] = [
    (3, 2, 1, "sl2R", true),
    (3, 0, 3, "su2", false),
    (6, 4, 2, "2*sl2R", true),
    (6, 3, 3, "sl2C", false),
    (9, 6, 3, "3*sl2R", true),
    (9, 5, 4, "sl2C+sl2R", false),
    (13, 8, 5, "sp4R+sl2R", true),
];

/// `(dim, positive, negative)` of the Killing form of each simple summand.
fn summand_data(name: &str) -> Option<(usize, usize, usize)> {
    match name {
        "sl2R" => Some((3, 2, 1)),
        "su2" => Some((3, 0, 3)),
        "sl2C" => Some((6, 3, 3)),
        "sp4R" => Some((10, 6, 4)),
        _ => None,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RealTypeDescriptor {
    pub total_dim: usize,
    pub center_dim: usize,
    pub center_sig: Signature,
    pub ss_dim: usize,
    pub ss_killing_sig: Signature,
    pub type_label: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub weights_u: Option<WeightMultiset>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub weights_v: Option<WeightMultiset>,
}

/// Expected invariants parsed from a label such as `sp4R+sl2R+t` or `2t+u`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpectedType {
    pub total_dim: usize,
    pub ss_dim: usize,
    pub ss_sig: (usize, usize),
    pub split_tori: usize,
    pub compact_tori: usize,
    pub ss_label: String,
}

pub fn parse_type_label(label: &str) -> Result<ExpectedType> {
    let bad = || Error::Invalid(format!("type label {label:?}"));
    let mut e = ExpectedType { total_dim: 0, ss_dim: 0, ss_sig: (0, 0), split_tori: 0, compact_tori: 0, ss_label: String::new() };
    let mut ss_parts = Vec::new();
    for part in label.split('+') {
        let (count, name) = match part.split_once('*') {
            Some((c, name)) => (c.parse::<usize>().map_err(|_| bad())?, name),
            None => {
                let digits: String = part.chars().take_while(char::is_ascii_digit).collect();
                let rest = &part[digits.len()..];
                if rest == "t" || rest == "u" {
                    (if digits.is_empty() { 1 } else { digits.parse().map_err(|_| bad())? }, rest)
                } else if digits.is_empty() {
                    (1, part)
                } else {
                    return Err(bad());
                }
            }
        };
        match name {
            "t" => e.split_tori += count,
            "u" => e.compact_tori += count,
            _ => {
                let (d, p, q) = summand_data(name).ok_or_else(bad)?;
                e.ss_dim += count * d;
                e.ss_sig.0 += count * p;
                e.ss_sig.1 += count * q;
                ss_parts.push(part.to_string());
            }
        }
    }
    e.ss_label = ss_parts.join("+");
    e.total_dim = e.ss_dim + e.split_tori + e.compact_tori;
    Ok(e)
}

/// `(𝔷, [𝔤, 𝔤])` with a direct-sum check.
pub fn reductive_split(m: usize, n: usize, g: &Subspace) -> Result<(Subspace, Subspace)> {
    let elems: Vec<PairMat> = g.basis().iter().map(|v| PairMat::from_vec(m, n, v)).collect();
    let center = matrix::centralizer_in(m, n, g, &elems);
    let mut brackets = Vec::new();
    for (i, x) in elems.iter().enumerate() {
        for y in &elems[i + 1..] {
            brackets.push(x.bracket(y).to_vec());
        }
    }
    let ss = Subspace::span(g.ambient_dim(), &brackets);
    if !g.contains_subspace(&ss) {
        return Err(Error::NotReductive("not closed under the bracket".into()));
    }
    if center.dim() + ss.dim() != g.dim() || center.intersect(&ss).dim() != 0 {
        return Err(Error::NotReductive(format!("center ({}) and derived algebra ({}) do not span ({})", center.dim(), ss.dim(), g.dim())));
    }
    Ok((center, ss))
}

/// Signature of `Tr(xy)` on the center. Split tori count positive, compact ones negative.
pub fn torus_signature(m: usize, n: usize, center: &Subspace) -> Result<Signature> {
    let basis = center.basis();
    let mut generic = exact::zero_vec(center.ambient_dim());
    for (i, b) in basis.iter().enumerate() {
        exact::axpy(&mut generic, &rat(i as i64 + 1), b);
    }
    let semisimple = |v: &[Rat]| minpoly_squarefree(&PairMat::from_vec(m, n, v).block_diag());
    if !basis.iter().all(|b| semisimple(b)) || !semisimple(&generic) {
        return Err(Error::NotSemisimple);
    }
    let sig = matrix::ambient_trace_form(m, n, basis).signature()?;
    if sig.zero != 0 {
        return Err(Error::NotReductive("trace form degenerate on the center".into()));
    }
    Ok(sig)
}

/// Killing signature and label of a semisimple matrix algebra.
pub fn classify_semisimple(m: usize, n: usize, ss: &Subspace) -> Result<(Signature, &'static str, bool)> {
    if ss.dim() == 0 {
        return Ok((Signature::new(0, 0, 0), "", true));
    }
    let alg = matrix::structure_constants(m, n, ss).ok_or_else(|| Error::NotReductive("derived algebra not closed".into()))?;
    let sig = alg.killing().signature()?;
    if sig.zero != 0 {
        return Err(Error::NotSemisimple);
    }
    SEMISIMPLE_TYPES
        .iter()
        .find(|&&(d, p, q, _, _)| d == ss.dim() && p == sig.positive && q == sig.negative)
        .map(|&(_, _, _, label, split)| (sig, label, split))
        .ok_or(Error::UnknownType { dim: ss.dim(), pos: sig.positive, neg: sig.negative })
}

pub fn compose_label(ss_label: &str, split_tori: usize, compact_tori: usize) -> String {
    let torus = |k: usize, s: &str| match k {
        0 => None,
        1 => Some(s.to_string()),
        k => Some(format!("{k}{s}")),
    };
    [Some(ss_label.to_string()).filter(|s| !s.is_empty()), torus(split_tori, "t"), torus(compact_tori, "u")]
        .into_iter()
        .flatten()
        .collect::<Vec<_>>()
        .join("+")
}

#[derive(Clone, Debug)]
pub struct Analysis {
    pub descriptor: RealTypeDescriptor,
    pub weights: Option<WeightData>,
    pub center: Subspace,
    pub ss: Subspace,
}

pub fn describe(m: usize, n: usize, gt: &Subspace) -> Result<Analysis> {
    let (center, ss) = reductive_split(m, n, gt)?;
    let center_sig = torus_signature(m, n, &center)?;
    let (ss_killing_sig, ss_label, split) = classify_semisimple(m, n, &ss)?;
    let weights = if split && ss.dim() > 0 { Some(highest_weights(m, n, &ss)?) } else { None };
    let canon = weights.as_ref().map(|w| canonical_weights(&w.ideals, &w.weights_u, &w.weights_v));
    let descriptor = RealTypeDescriptor {
        total_dim: gt.dim(),
        center_dim: center.dim(),
        type_label: compose_label(ss_label, center_sig.positive, center_sig.negative),
        center_sig,
        ss_dim: ss.dim(),
        ss_killing_sig,
        weights_u: canon.as_ref().map(|c| c.0.clone()),
        weights_v: canon.map(|c| c.1),
    };
    Ok(Analysis { descriptor, weights, center, ss })
}

/// Dimension of a Cartan subalgebra of the complexification: the least
/// centralizer dimension over seeded random elements.
pub fn complex_rank(m: usize, n: usize, g: &Subspace) -> usize {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    (0..4)
        .map(|_| {
            let mut x = exact::zero_vec(g.ambient_dim());
            for b in g.basis() {
                exact::axpy(&mut x, &rat(rng.gen_range(-7..=7)), b);
            }
            matrix::centralizer_in(m, n, g, &[PairMat::from_vec(m, n, &x)]).dim()
        })
        .min()
        .unwrap_or(0)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Fingerprint {
    pub m: usize,
    pub n: usize,
    pub dim_ge: usize,
    pub complex_rank: usize,
    pub descriptor: RealTypeDescriptor,
}

/// Everything computed for one tensor.
#[derive(Clone, Debug)]
pub struct Pipeline {
    pub lifted: Vec<Rat>,
    pub triple: Sl2Triple,
    pub centralizer: CentralizerResult,
    pub analysis: Analysis,
    pub fingerprint: Fingerprint,
}

pub fn run_pipeline(e: &SkewTensor) -> Result<Pipeline> {
    let (m, n) = e.signature();
    if !e.is_surjective() || e.radical().dim() != 0 {
        let l = crate::twostep::tensor_to_lie(e);
        let (_, abelian_dim) = l.degenerate_split()?;
        return Err(Error::Degenerate { abelian_dim });
    }
    let ctx = GradedContext::get(m, n)?;
    let lifted = sl2::lift(ctx, e)?;
    let triple = sl2::embed_triple(ctx, &lifted)?;
    let centralizer = sl2::centralizer_triple(ctx, &triple);
    let analysis = describe(m, n, &centralizer.gt)?;
    let fingerprint = Fingerprint {
        m,
        n,
        dim_ge: stabilizer_lie(e).dim(),
        complex_rank: complex_rank(m, n, &centralizer.gt),
        descriptor: analysis.descriptor.clone(),
    };
    Ok(Pipeline { lifted, triple, centralizer, analysis, fingerprint })
}

pub fn fingerprint(e: &SkewTensor) -> Result<Fingerprint> {
    run_pipeline(e).map(|p| p.fingerprint)
}
