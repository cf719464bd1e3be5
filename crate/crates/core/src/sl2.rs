//! Homogeneous sl2-triples through degree-1 elements and their centralizers.

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{self, rat, Mat, Poly, Rat};
use crate::graded::GradedContext;
use crate::lie::{matrix, PairMat, Subspace};
use crate::twostep::SkewTensor;

/// `[h,e] = 2e`, `[h,f] = −2f`, `[e,f] = h`, in full ĝ coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sl2Triple {
    pub h: Vec<Rat>,
    pub e: Vec<Rat>,
    pub f: Vec<Rat>,
}

/// Matrix of `x ↦ [a, x]` from the basis indices `from` to the coordinates `to`.
fn ad_block(ctx: &GradedContext, a: &[Rat], from: &[usize], to: &[usize]) -> Mat {
    let alg = &ctx.graded.chev.alg;
    let dim = alg.dim();
    let cols: Vec<Vec<Rat>> = from
        .iter()
        .map(|&b| {
            let v = alg.bracket(a, &exact::unit_vec(dim, b));
            to.iter().map(|&t| v[t].clone()).collect()
        })
        .collect();
    Mat::from_cols(to.len(), &cols)
}

fn embed(dim: usize, idx: &[usize], coords: &[Rat]) -> Vec<Rat> {
    let mut v = exact::zero_vec(dim);
    for (&b, c) in idx.iter().zip(coords) {
        v[b] = c.clone();
    }
    v
}

fn restrict(v: &[Rat], idx: &[usize]) -> Vec<Rat> {
    idx.iter().map(|&b| v[b].clone()).collect()
}

impl Sl2Triple {
    pub fn relations_hold(&self, ctx: &GradedContext) -> bool {
        let alg = &ctx.graded.chev.alg;
        alg.bracket(&self.h, &self.e) == exact::scale_vec(&self.e, &rat(2))
            && alg.bracket(&self.h, &self.f) == exact::scale_vec(&self.f, &rat(-2))
            && alg.bracket(&self.e, &self.f) == self.h
    }

    /// `ad h` restricted to each graded piece.
    pub fn ad_h_blocks(&self, ctx: &GradedContext) -> Vec<(i64, Mat)> {
        ctx.graded.pieces.iter().map(|(&d, idx)| (d, ad_block(ctx, &self.h, idx, idx))).collect()
    }

    /// The minimal polynomial of `ad h` is squarefree with integer roots.
    /// Returns the roots (eigenvalues), ascending.
    pub fn ad_h_eigenvalues(&self, ctx: &GradedContext) -> Result<Vec<i64>> {
        let mut roots: Vec<Rat> = Vec::new();
        for (_, block) in self.ad_h_blocks(ctx) {
            let p: Poly = exact::minpoly(&block);
            if !p.splits_squarefree() {
                return Err(Error::NotSemisimple);
            }
            for r in p.rational_roots() {
                if !roots.contains(&r) {
                    roots.push(r);
                }
            }
        }
        roots.sort();
        roots.iter().map(|r| r.is_integer().then(|| exact::rat::to_i64(r)).flatten().ok_or(Error::NotSemisimple)).collect()
    }
}

/// Builds a triple through a nonzero `ê ∈ ĝ₁`.
///
/// `h = [ê, f′]` with `f′ ∈ ĝ₋₁` solving `[[ê, f′], ê] = 2ê`, then `f ∈ ĝ₋₁`
/// solving `[ê, f] = h` and `[h, f] = −2f`. Free variables are set to zero.
pub fn embed_triple(ctx: &GradedContext, e: &[Rat]) -> Result<Sl2Triple> {
    let g = &ctx.graded;
    let dim = g.dim();
    if exact::is_zero_vec(e) {
        return Err(Error::Invalid("cannot embed the zero element".into()));
    }
    if e.iter().enumerate().any(|(b, c)| !c.is_zero() && g.degree[b] != 1) {
        return Err(Error::Invalid("element is not homogeneous of degree 1".into()));
    }
    let (gm1, g0, g1) = (g.piece(-1), g.piece(0), g.piece(1));
    let w = ad_block(ctx, e, gm1, g0);
    // f′ ↦ [[ê,f′],ê] = −ad(ê)·w·f′
    let ad_e_on_g0 = ad_block(ctx, e, g0, g1);
    let sys = ad_e_on_g0.mul(&w).scale(&rat(-1));
    let target = exact::scale_vec(&restrict(e, g1), &rat(2));
    let fprime = sys.solve(&target).ok_or_else(|| Error::Internal("no characteristic for a nonzero element".into()))?;
    let h = embed(dim, g0, &w.mul_vec(&fprime));

    let ad_h_on_gm1 = ad_block(ctx, &h, gm1, gm1);
    let mut rows: Vec<Vec<Rat>> = (0..w.rows()).map(|r| w.row(r).to_vec()).collect();
    let shifted = ad_h_on_gm1.add(&Mat::identity(gm1.len()).scale(&rat(2)));
    rows.extend((0..shifted.rows()).map(|r| shifted.row(r).to_vec()));
    let mut rhs = restrict(&h, g0);
    rhs.extend(exact::zero_vec(gm1.len()));
    let fc = Mat::from_rows(rows).solve(&rhs).ok_or_else(|| Error::Internal("no nilpositive partner".into()))?;
    let triple = Sl2Triple { h, e: e.to_vec(), f: embed(dim, gm1, &fc) };
    if !triple.relations_hold(ctx) {
        return Err(Error::Internal("triple relations fail".into()));
    }
    Ok(triple)
}

pub fn lift(ctx: &GradedContext, e: &SkewTensor) -> Result<Vec<Rat>> {
    ctx.iso.lift(e, ctx.dim())
}

/// Centralizer of a triple in ĝ₀, in ĝ₀ basis coordinates and transported to gl(m) ⊕ gl(n).
#[derive(Clone, Debug)]
pub struct CentralizerResult {
    pub m: usize,
    pub n: usize,
    /// Basis of the centralizer in full ĝ coordinates.
    pub in_g0: Vec<Vec<Rat>>,
    /// The transported subspace in flat pair-matrix coordinates.
    pub gt: Subspace,
}

impl CentralizerResult {
    pub fn dim(&self) -> usize {
        self.gt.dim()
    }

    pub fn elements(&self) -> Vec<PairMat> {
        self.gt.basis().iter().map(|v| PairMat::from_vec(self.m, self.n, v)).collect()
    }
}

pub fn centralizer_triple(ctx: &GradedContext, t: &Sl2Triple) -> CentralizerResult {
    let g0 = ctx.graded.piece(0);
    let dim = ctx.dim();
    // commuting with e and h forces commuting with f; kernels taken one at a time
    let all: Vec<usize> = (0..dim).collect();
    let ker_e = ad_block(ctx, &t.e, g0, &all).kernel();
    let ad_h = ad_block(ctx, &t.h, g0, &all);
    let on_ker: Vec<Vec<Rat>> = ker_e.iter().map(|k| ad_h.mul_vec(k)).collect();
    let ker: Vec<Vec<Rat>> = Mat::from_cols(dim, &on_ker)
        .kernel()
        .iter()
        .map(|c| {
            let mut v = exact::zero_vec(g0.len());
            for (x, k) in c.iter().zip(&ker_e) {
                exact::axpy(&mut v, x, k);
            }
            v
        })
        .collect();
    let in_g0: Vec<Vec<Rat>> = ker.iter().map(|k| embed(dim, g0, k)).collect();
    let images: Vec<Vec<Rat>> = in_g0.iter().map(|z| ctx.ident.apply(z).to_vec()).collect();
    let (m, n) = (ctx.m, ctx.n);
    CentralizerResult { m, n, in_g0, gt: Subspace::span(PairMat::flat_dim(m, n), &images) }
}

/// The transported centralizer is a Lie subalgebra.
pub fn verify_sl2_closure(result: &CentralizerResult) -> bool {
    matrix::is_subalgebra(result.m, result.n, &result.gt)
}

/// Every transported element annihilates `e` under the tensor action.
pub fn annihilates(result: &CentralizerResult, e: &SkewTensor) -> bool {
    result.elements().iter().all(|x| e.act(x).is_zero())
}

#[derive(Clone, Debug, Serialize)]
pub struct TripleJson {
    pub h: Vec<String>,
    pub e: Vec<String>,
    pub f: Vec<String>,
}

/// Sparse `label=coeff` rendering of a ĝ element.
pub fn sparse_labels(ctx: &GradedContext, v: &[Rat]) -> Vec<String> {
    let labels = ctx.graded.chev.alg.labels().expect("Chevalley labels");
    v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(b, c)| format!("{}={}", labels[b], exact::rat::to_string(c))).collect()
}

impl Sl2Triple {
    pub fn to_json(&self, ctx: &GradedContext) -> TripleJson {
        TripleJson { h: sparse_labels(ctx, &self.h), e: sparse_labels(ctx, &self.e), f: sparse_labels(ctx, &self.f) }
    }
}
