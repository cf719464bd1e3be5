//! Split Cartan subalgebras built ideal by ideal: simple ideals from the
//! centroid with reduced integral bases, then a direct construction for `sl(2)` and `sp(4)` ideals.

use num_traits::{One, Zero};

use crate::exact::{self, conic, lll, minpoly, Mat, Rat};
use crate::lie::{kernel_on_span, matrix, trace_of_product, PairMat, Subspace};

fn ideal_elem(m: usize, n: usize, ideal: &[Vec<Rat>], c: &[Rat]) -> PairMat {
    let mut v = exact::zero_vec(PairMat::flat_dim(m, n));
    for (b, x) in ideal.iter().zip(c) {
        exact::axpy(&mut v, x, b);
    }
    PairMat::from_vec(m, n, &v)
}

fn reduced(basis: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    lll::saturated_basis(basis).into_iter().map(|v| v.into_iter().map(Rat::from).collect()).collect()
}

/// `ad` of each basis element in that basis, via a left inverse on pivot coordinates.
fn ad_matrices(m: usize, n: usize, basis: &[Vec<Rat>]) -> Option<Vec<Mat>> {
    let d = basis.len();
    let (_, pivots) = Mat::from_rows(basis.to_vec()).rref();
    let square = Mat::from_rows(basis.iter().map(|b| pivots.iter().map(|&p| b[p].clone()).collect()).collect());
    // row vector coordinates: c · square = v[pivots]
    let left = square.inverse()?;
    let elems: Vec<PairMat> = basis.iter().map(|b| PairMat::from_vec(m, n, b)).collect();
    let coords = |v: &[Rat]| -> Option<Vec<Rat>> {
        let vp: Vec<Rat> = pivots.iter().map(|&p| v[p].clone()).collect();
        let c = left.transpose().mul_vec(&vp);
        (ideal_elem(m, n, basis, &c).to_vec() == v).then_some(c)
    };
    let mut ads = vec![Mat::zeros(d, d); d];
    for i in 0..d {
        for j in 0..d {
            let c = coords(&elems[i].bracket(&elems[j]).to_vec())?;
            for (k, x) in c.into_iter().enumerate() {
                ads[i][(k, j)] = x;
            }
        }
    }
    Some(ads)
}

/// Eigenspaces of `t` (acting on coordinates in `basis`) as reduced ambient bases.
fn eigen_blocks(m: usize, n: usize, basis: &[Vec<Rat>], t: &Mat, roots: &[Rat]) -> Vec<Vec<Vec<Rat>>> {
    let full = Subspace::full(basis.len());
    roots
        .iter()
        .map(|mu| {
            let eig = kernel_on_span(basis.len(), full.basis(), |v| exact::sub_vec(&t.mul_vec(v), &exact::scale_vec(v, mu)));
            let raw: Vec<Vec<Rat>> = eig.basis().iter().map(|c| ideal_elem(m, n, basis, c).to_vec()).collect();
            reduced(&raw)
        })
        .collect()
}

/// Splits by `K⁻¹B` for invariant trace forms `B`, which is scalar on each
/// absolutely simple ideal (`K` the Killing form).
fn form_blocks(m: usize, n: usize, basis: &[Vec<Rat>], ads: &[Mat]) -> Option<Vec<Vec<Vec<Rat>>>> {
    let d = basis.len();
    let mut killing = Mat::zeros(d, d);
    for i in 0..d {
        for j in 0..d {
            killing[(i, j)] = trace_of_product(&ads[i], &ads[j]);
        }
    }
    let kinv = killing.inverse()?;
    let elems: Vec<PairMat> = basis.iter().map(|b| PairMat::from_vec(m, n, b)).collect();
    let gram = |f: &dyn Fn(&PairMat, &PairMat) -> Rat| {
        let mut g = Mat::zeros(d, d);
        for i in 0..d {
            for j in 0..d {
                g[(i, j)] = f(&elems[i], &elems[j]);
            }
        }
        g
    };
    let bu = gram(&|x, y| trace_of_product(&x.a, &y.a));
    let bv = gram(&|x, y| trace_of_product(&x.b, &y.b));
    let best = [0i64, 1, 2, -3, 5]
        .into_iter()
        .filter_map(|c| {
            let t = kinv.mul(&bu.add(&bv.scale(&exact::rat(c))));
            let p = minpoly(&t);
            p.splits_squarefree().then(|| (p.rational_roots(), t))
        })
        .max_by_key(|(r, _)| r.len())?;
    Some(eigen_blocks(m, n, basis, &best.1, &best.0))
}

/// Splits through a generic element of the centroid `{T : T·ad = ad·T}`.
fn centroid_blocks(m: usize, n: usize, basis: &[Vec<Rat>], ads: &[Mat]) -> Option<Vec<Vec<Vec<Rat>>>> {
    let d = basis.len();
    // T ↦ T·ad − ad·T imposed one basis element at a time
    let mut space = Subspace::full(d * d);
    for ad in ads {
        space = kernel_on_span(d * d, space.basis(), |v| {
            let t = Mat::from_vec(d, d, v.to_vec());
            t.mul(ad).sub(&ad.mul(&t)).into_entries()
        });
    }
    let centroid: Vec<Mat> = space.basis().iter().map(|v| Mat::from_vec(d, d, v.clone())).collect();
    let k = centroid.len();
    let (t, roots) = (1..=4i64).find_map(|s| {
        let mut t = Mat::zeros(d, d);
        let mut c = Rat::one();
        for b in &centroid {
            t = t.add(&b.scale(&c));
            c *= exact::rat(s + 1);
        }
        let p = minpoly(&t);
        let roots = p.rational_roots();
        (roots.len() == k && p.splits_squarefree()).then_some((t, roots))
    })?;
    Some(eigen_blocks(m, n, basis, &t, &roots))
}

/// Simple ideals of a semisimple matrix algebra whose centroid splits over ℚ,
/// as reduced bases of ambient pair-matrix vectors.
pub fn simple_ideals(m: usize, n: usize, ss: &Subspace) -> Option<Vec<Vec<Vec<Rat>>>> {
    if ss.dim() == 0 {
        return Some(Vec::new());
    }
    let basis = reduced(ss.basis());
    let ads = ad_matrices(m, n, &basis)?;
    let mut ideals = Vec::new();
    for block in form_blocks(m, n, &basis, &ads)? {
        // semisimple of dimension 3 or 10 is simple
        if matches!(block.len(), 3 | 10) {
            ideals.push(block);
        } else {
            let ads = ad_matrices(m, n, &block)?;
            ideals.extend(centroid_blocks(m, n, &block, &ads)?);
        }
    }
    Some(ideals)
}

/// `h` of an `sl(2)`-triple in a split three-dimensional simple ideal.
fn sl2_cartan(m: usize, n: usize, ideal: &[Vec<Rat>]) -> Option<PairMat> {
    let gram = matrix::ambient_trace_form(m, n, ideal);
    let e = ideal_elem(m, n, ideal, &conic::isotropic_vector(&gram)?);
    // z with [[e, z], e] = 2e
    let cols: Vec<Vec<Rat>> = ideal.iter().map(|b| e.bracket(&PairMat::from_vec(m, n, b)).bracket(&e).to_vec()).collect();
    let a = Mat::from_cols(PairMat::flat_dim(m, n), &cols);
    let z = a.solve(&e.scale(&exact::rat(2)).to_vec())?;
    Some(e.bracket(&ideal_elem(m, n, ideal, &z)))
}

/// Restriction of `x` to the invariant subspace spanned by `w`, in `w`-coordinates.
fn restrict(x: &Mat, w: &[Vec<Rat>]) -> Option<Mat> {
    let cols: Option<Vec<Vec<Rat>>> = w.iter().map(|v| exact::coords_in(w, &x.mul_vec(v))).collect();
    Some(Mat::from_cols(w.len(), &cols?))
}

fn skew_form(u: &[Rat], v: &[Rat], omega: &Mat) -> Rat {
    u.iter().zip(omega.mul_vec(v)).map(|(a, b)| a * b).sum()
}

/// Basis `p₁, p₂, q₁, q₂` with `ω(pᵢ, qⱼ) = δᵢⱼ` and all other pairings zero.
fn symplectic_basis(omega: &Mat) -> Option<Vec<Vec<Rat>>> {
    let mut rest: Vec<Vec<Rat>> = (0..4).map(|i| exact::unit_vec(4, i)).collect();
    let mut ps = Vec::new();
    let mut qs = Vec::new();
    while ps.len() < 2 {
        let p = rest.remove(0);
        let qi = rest.iter().position(|v| !skew_form(&p, v, omega).is_zero())?;
        let q = rest.remove(qi);
        let q = exact::scale_vec(&q, &(Rat::one() / skew_form(&p, &q, omega)));
        // project the rest onto the ω-complement of span(p, q)
        for r in &mut rest {
            let a = skew_form(r, &q, omega);
            let b = skew_form(&p, r, omega);
            exact::axpy(r, &-a, &p);
            exact::axpy(r, &-b, &q);
        }
        ps.push(p);
        qs.push(q);
    }
    Some(ps.into_iter().chain(qs).collect())
}

/// Split Cartan of an `sp(4)` ideal acting on a four-dimensional subspace of ℚᵐ or ℚⁿ.
fn sp4_cartan(m: usize, n: usize, ideal: &[Vec<Rat>]) -> Option<Vec<PairMat>> {
    let elems: Vec<PairMat> = ideal.iter().map(|b| PairMat::from_vec(m, n, b)).collect();
    for on_u in [true, false] {
        let size = if on_u { m } else { n };
        let block = |x: &PairMat| if on_u { x.a.clone() } else { x.b.clone() };
        let images: Vec<Vec<Rat>> = elems.iter().flat_map(|x| (0..size).map(move |i| block(x).col(i))).collect();
        let w = Subspace::span(size, &images);
        if w.dim() != 4 {
            continue;
        }
        let reps: Vec<Mat> = elems.iter().map(|x| restrict(&block(x), w.basis())).collect::<Option<_>>()?;
        // ω skew with Rᵀω + ωR = 0
        let pairs: Vec<(usize, usize)> = (0..4).flat_map(|i| (i + 1..4).map(move |j| (i, j))).collect();
        let omega_of = |c: &[Rat]| {
            let mut o = Mat::zeros(4, 4);
            for (k, &(i, j)) in pairs.iter().enumerate() {
                o[(i, j)] = c[k].clone();
                o[(j, i)] = -c[k].clone();
            }
            o
        };
        let mut rows = Vec::new();
        for r in &reps {
            let cols: Vec<Mat> = (0..pairs.len())
                .map(|k| {
                    let o = omega_of(&exact::unit_vec(pairs.len(), k));
                    r.transpose().mul(&o).add(&o.mul(r))
                })
                .collect();
            for e in 0..16 {
                rows.push(cols.iter().map(|c| c.entries()[e].clone()).collect());
            }
        }
        let sol = Mat::from_rows(rows).kernel();
        if sol.len() != 1 {
            return None;
        }
        let omega = omega_of(&sol[0]);
        let basis = symplectic_basis(&omega)?;
        let change = Mat::from_cols(4, &basis);
        let inv = change.inverse()?;
        let rows_of_rep: Vec<Vec<Rat>> = reps.iter().map(|r| r.entries().to_vec()).collect();
        let lin = Mat::from_cols(16, &rows_of_rep);
        let mut out = Vec::new();
        for k in 0..2 {
            let mut d = exact::zero_vec(4);
            d[k] = Rat::one();
            d[k + 2] = -Rat::one();
            let target = change.mul(&Mat::diag(&d)).mul(&inv);
            let c = lin.solve(target.entries())?;
            out.push(ideal_elem(m, n, ideal, &c));
        }
        return Some(out);
    }
    None
}

/// Split Cartan subalgebra assembled from the simple ideals, or `None` when an
/// ideal is not of type `sl(2)` or `sp(4)` or a construction step fails.
pub fn ideal_cartan(m: usize, n: usize, ss: &Subspace) -> Option<Vec<PairMat>> {
    let mut torus = Vec::new();
    for ideal in simple_ideals(m, n, ss)? {
        match ideal.len() {
            3 => torus.push(sl2_cartan(m, n, &ideal)?),
            10 => torus.extend(sp4_cartan(m, n, &ideal)?),
            _ => return None,
        }
    }
    Some(torus)
}
