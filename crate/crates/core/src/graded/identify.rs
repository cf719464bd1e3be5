//! `ĝ₀ ≅ sl(m) ⊕ sl(n) ⊕ ℚ` and the equivariant isomorphism `ĝ₁ ≅ Hom(∧²ℚᵐ, ℚⁿ)`.

use num_traits::Zero;

use super::chevalley::BasisKind;
use super::grading::GradedAlgebra;
use super::roots::height;
use crate::error::{Error, Result};
use crate::exact::{self, rat, Mat, Rat};
use crate::lie::PairMat;
use crate::twostep::tensor::{binom2, SkewTensor};

/// The map `dp∘ι: ĝ₀ → gl(m) ⊕ gl(n)`, where `ι` lands in `sl(m) ⊕ sl(n) ⊕ ℚ`
/// and `dp(a, b, c) = (a, b + c·I)`.
#[derive(Clone, Debug)]
pub struct G0Identification {
    pub m: usize,
    pub n: usize,
    /// Diagram nodes sent to `E_{k,k+1}` in gl(m), in order.
    pub u_chain: Vec<usize>,
    /// Diagram nodes sent to `E_{k,k+1}` in gl(n), in order.
    pub v_chain: Vec<usize>,
    /// Global indices of the ĝ₀ basis.
    pub g0: Vec<usize>,
    /// `dp(ι(b))` for each ĝ₀ basis element, aligned with `g0`.
    pub images: Vec<PairMat>,
    /// Coordinates of the grading element `z` in the Cartan basis.
    pub grading_element: Vec<Rat>,
}

fn elementary(size: usize, r: usize, c: usize) -> Mat {
    let mut e = Mat::zeros(size, size);
    e[(r, c)] = rat(1);
    e
}

impl G0Identification {
    pub fn new(g: &GradedAlgebra, m: usize, n: usize, u_chain: &[usize], v_chain: &[usize]) -> Result<Self> {
        let chev = &g.chev;
        let l = chev.rank();
        if u_chain.len() + 1 != m || v_chain.len() + 1 != n {
            return Err(Error::Internal("chain lengths do not match the signature".into()));
        }
        let g0: Vec<usize> = g.piece(0).to_vec();
        let slot: std::collections::HashMap<usize, usize> = g0.iter().enumerate().map(|(s, &b)| (b, s)).collect();
        let mut images: Vec<Option<PairMat>> = vec![None; g0.len()];
        let zero_a = Mat::zeros(m, m);
        let zero_b = Mat::zeros(n, n);
        let place = |chain_pos: Option<(bool, usize)>, f: &dyn Fn(usize, usize) -> Mat| -> PairMat {
            match chain_pos {
                Some((true, k)) => PairMat::new(f(m, k), zero_b.clone()),
                Some((false, k)) => PairMat::new(zero_a.clone(), f(n, k)),
                None => unreachable!(),
            }
        };
        let locate = |i: usize| -> Option<(bool, usize)> {
            u_chain.iter().position(|&v| v == i).map(|k| (true, k)).or_else(|| v_chain.iter().position(|&v| v == i).map(|k| (false, k)))
        };
        for i in (0..l).filter(|&i| i != g.node) {
            let pos = locate(i).ok_or_else(|| Error::Internal(format!("node {} not on a chain", i + 1)))?;
            let r = chev.simple(i);
            images[slot[&chev.x(r)]] = Some(place(Some(pos), &|s, k| elementary(s, k, k + 1)));
            images[slot[&chev.y(r)]] = Some(place(Some(pos), &|s, k| elementary(s, k + 1, k)));
            images[slot[&chev.h(i)]] = Some(place(Some(pos), &|s, k| elementary(s, k, k).sub(&elementary(s, k + 1, k + 1))));
        }
        // z = Σ c_j h_j with α_k(z) = δ_{k,node}
        let cartan = Mat::from_rows(chev.roots.cartan.iter().map(|row| row.iter().map(|&x| rat(x)).collect()).collect());
        let c = cartan.inverse().ok_or(Error::Singular)?.col(g.node);
        let mut hz = PairMat::new(zero_a.clone(), Mat::identity(n));
        for j in (0..l).filter(|&j| j != g.node) {
            let img = images[slot[&chev.h(j)]].as_ref().expect("set above");
            hz = hz.add(&img.scale(&-c[j].clone()));
        }
        images[slot[&chev.h(g.node)]] = Some(hz.scale(&c[g.node].recip()));

        // remaining degree-0 root vectors by height
        let mut order: Vec<usize> = (0..chev.positive_count()).filter(|&r| chev.roots.positive[r][g.node] == 0).collect();
        order.sort_by_key(|&r| height(&chev.roots.positive[r]));
        for r in order {
            let alpha = &chev.roots.positive[r];
            if height(alpha) == 1 {
                continue;
            }
            let (i, beta) = (0..l)
                .filter(|&i| i != g.node && alpha[i] > 0)
                .find_map(|i| {
                    let mut b = alpha.clone();
                    b[i] -= 1;
                    chev.root_index(&b).map(|rb| (i, rb))
                })
                .ok_or_else(|| Error::Internal("degree-0 root not reachable".into()))?;
            let si = chev.simple(i);
            for (gen, target, lower) in [(chev.x(si), chev.x(r), chev.x(beta)), (chev.y(si), chev.y(r), chev.y(beta))] {
                let nc = chev.alg.constant(gen, lower, target);
                if nc.is_zero() {
                    return Err(Error::Internal("zero structure constant on a root string".into()));
                }
                let a = images[slot[&gen]].as_ref().expect("simple image");
                let b = images[slot[&lower]].as_ref().expect("lower image");
                images[slot[&target]] = Some(a.bracket(b).scale(&nc.recip()));
            }
        }
        let images: Vec<PairMat> = images.into_iter().map(|x| x.expect("all ĝ₀ images set")).collect();
        let id = G0Identification { m, n, u_chain: u_chain.to_vec(), v_chain: v_chain.to_vec(), g0, images, grading_element: c };
        if let Some((a, b)) = id.homomorphism_witness(g) {
            return Err(Error::Internal(format!("identification fails on basis pair ({a},{b})")));
        }
        Ok(id)
    }

    /// First ĝ₀ basis pair where `[ι a, ι b] ≠ ι[a, b]`.
    pub fn homomorphism_witness(&self, g: &GradedAlgebra) -> Option<(usize, usize)> {
        let alg = &g.chev.alg;
        for (s, &a) in self.g0.iter().enumerate() {
            for (t, &b) in self.g0.iter().enumerate().skip(s + 1) {
                let lhs = self.images[s].bracket(&self.images[t]);
                let mut rhs = PairMat::zero(self.m, self.n);
                for (k, c) in alg.bracket_basis(a, b) {
                    let Some(pos) = self.g0.iter().position(|x| x == k) else {
                        return Some((a, b));
                    };
                    rhs = rhs.add(&self.images[pos].scale(c));
                }
                if lhs != rhs {
                    return Some((a, b));
                }
            }
        }
        None
    }

    /// Flat-coordinate matrix of the map on ĝ₀ (columns aligned with `g0`).
    pub fn matrix(&self) -> Mat {
        let cols: Vec<Vec<Rat>> = self.images.iter().map(PairMat::to_vec).collect();
        Mat::from_cols(PairMat::flat_dim(self.m, self.n), &cols)
    }

    /// Image of an element of ĝ (only its ĝ₀ coordinates are read).
    pub fn apply(&self, x: &[Rat]) -> PairMat {
        let mut out = PairMat::zero(self.m, self.n);
        for (s, &b) in self.g0.iter().enumerate() {
            if !x[b].is_zero() {
                out = out.add(&self.images[s].scale(&x[b]));
            }
        }
        out
    }
}

/// Matrix of `v ↦ X·v` on tensor coordinates.
pub fn tensor_action_matrix(m: usize, n: usize, x: &PairMat) -> Mat {
    let d = binom2(m) * n;
    let cols: Vec<Vec<Rat>> =
        (0..d).map(|c| SkewTensor::from_coords(m, n, &exact::unit_vec(d, c)).expect("sized").act(x).to_coords()).collect();
    Mat::from_cols(d, &cols)
}

/// `phi: ĝ₁ → Hom(∧²ℚᵐ, ℚⁿ)` with `phi([z, x]) = ι(z)·phi(x)`.
#[derive(Clone, Debug)]
pub struct ModuleIso {
    pub m: usize,
    pub n: usize,
    /// Global indices of the ĝ₁ basis.
    pub g1: Vec<usize>,
    /// Columns: tensor coordinates of `phi(b)` for `b` in `g1`.
    pub phi: Mat,
    phi_inv: Mat,
    /// Dimension of the lowest-weight solution space.
    pub solution_dim: usize,
}

impl ModuleIso {
    pub fn new(g: &GradedAlgebra, id: &G0Identification) -> Result<Self> {
        let chev = &g.chev;
        let (m, n) = (id.m, id.n);
        let dy = binom2(m) * n;
        let g1: Vec<usize> = g.piece(1).to_vec();
        if g1.len() != dy {
            return Err(Error::Internal(format!("dim ĝ₁ = {} but tensor space has {dy}", g1.len())));
        }
        let act_of = |b: usize| tensor_action_matrix(m, n, &id.apply(&exact::unit_vec(chev.dim(), b)));

        // lowest-weight system for i ≠ node
        let mut rows: Vec<Vec<Rat>> = Vec::new();
        for i in (0..chev.rank()).filter(|&i| i != g.node) {
            let ay = act_of(chev.y(chev.simple(i)));
            let ah = act_of(chev.h(i)).sub(&Mat::identity(dy).scale(&rat(chev.roots.cartan[i][g.node])));
            for mat in [ay, ah] {
                rows.extend((0..dy).map(|r| mat.row(r).to_vec()));
            }
        }
        let sols = Mat::from_rows(rows).kernel();
        if sols.len() != 1 {
            return Err(Error::ModuleIso(sols.len()));
        }
        let mut lowest = sols.into_iter().next().expect("one solution");
        let pivot = if lowest[n - 1].is_zero() { lowest.iter().position(|c| !c.is_zero()).expect("nonzero") } else { n - 1 };
        let s = lowest[pivot].recip();
        lowest = exact::scale_vec(&lowest, &s);

        let pos_of: std::collections::HashMap<usize, usize> = g1.iter().enumerate().map(|(p, &b)| (b, p)).collect();
        let mut images: Vec<Option<Vec<Rat>>> = vec![None; dy];
        let x_node = chev.x(chev.simple(g.node));
        images[pos_of[&x_node]] = Some(lowest);
        let mut order: Vec<usize> = g1.clone();
        order.sort_by_key(|&b| height(&chev.weight(b)));
        for b in order {
            if images[pos_of[&b]].is_some() {
                continue;
            }
            let BasisKind::X(r) = chev.kind(b) else {
                return Err(Error::Internal("ĝ₁ holds a non-positive root vector".into()));
            };
            let alpha = &chev.roots.positive[r];
            let (gen, lower) = (0..chev.rank())
                .filter(|&i| i != g.node && alpha[i] > 0)
                .find_map(|i| {
                    let mut beta = alpha.clone();
                    beta[i] -= 1;
                    let rb = chev.root_index(&beta)?;
                    images[pos_of[&chev.x(rb)]].as_ref()?;
                    Some((chev.x(chev.simple(i)), chev.x(rb)))
                })
                .ok_or_else(|| Error::Internal("ĝ₁ root not reachable from the lowest weight".into()))?;
            let nc = chev.alg.constant(gen, lower, b);
            let v = act_of(gen).mul_vec(images[pos_of[&lower]].as_ref().expect("checked"));
            images[pos_of[&b]] = Some(exact::scale_vec(&v, &nc.recip()));
        }
        let cols: Vec<Vec<Rat>> = images.into_iter().map(|v| v.expect("all ĝ₁ images set")).collect();
        let phi = Mat::from_cols(dy, &cols);
        let phi_inv = phi.inverse().ok_or_else(|| Error::Internal("module map is singular".into()))?;
        let iso = ModuleIso { m, n, g1, phi, phi_inv, solution_dim: 1 };
        if let Some(b) = iso.equivariance_witness(g, id) {
            return Err(Error::Internal(format!("module map not equivariant for ĝ₀ basis element {b}")));
        }
        Ok(iso)
    }

    /// First ĝ₀ basis element `z` with `phi∘ad z ≠ ι(z)∘phi` on ĝ₁.
    pub fn equivariance_witness(&self, g: &GradedAlgebra, id: &G0Identification) -> Option<usize> {
        let chev = &g.chev;
        let dim = chev.dim();
        id.g0.iter().copied().find(|&z| {
            let act = tensor_action_matrix(self.m, self.n, &id.apply(&exact::unit_vec(dim, z)));
            let rhs = act.mul(&self.phi);
            self.g1.iter().enumerate().any(|(p, &x)| {
                let br = chev.alg.bracket(&exact::unit_vec(dim, z), &exact::unit_vec(dim, x));
                let lhs = self.phi.mul_vec(&self.restrict(&br));
                lhs != rhs.col(p)
            })
        })
    }

    /// ĝ₁ coordinates of a full ĝ vector.
    pub fn restrict(&self, x: &[Rat]) -> Vec<Rat> {
        self.g1.iter().map(|&b| x[b].clone()).collect()
    }

    pub fn to_tensor(&self, x: &[Rat]) -> SkewTensor {
        SkewTensor::from_coords(self.m, self.n, &self.phi.mul_vec(&self.restrict(x))).expect("sized")
    }

    /// The element of ĝ₁ (in full ĝ coordinates of dimension `dim`) mapping to `e`.
    pub fn lift(&self, e: &SkewTensor, dim: usize) -> Result<Vec<Rat>> {
        if e.signature() != (self.m, self.n) {
            return Err(Error::UnsupportedSignature(e.m(), e.n()));
        }
        let c = self.phi_inv.mul_vec(&e.to_coords());
        let mut out = exact::zero_vec(dim);
        for (&b, v) in self.g1.iter().zip(c) {
            out[b] = v;
        }
        Ok(out)
    }
}
