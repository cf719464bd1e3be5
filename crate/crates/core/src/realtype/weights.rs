//! Split Cartan subalgebras, simple roots, and highest weights on ℚᵐ and ℚⁿ.

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{self, minpoly, Rat};
use crate::lie::{kernel_on_span, matrix, PairMat, Subspace};
use crate::twostep::WeightMultiset;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum IdealKind {
    /// `sl(ℓ+1)`
    A(usize),
    /// `sp(4)`, short simple root first.
    C2,
}

impl IdealKind {
    pub fn dim(self) -> usize {
        match self {
            IdealKind::A(l) => l * (l + 2),
            IdealKind::C2 => 10,
        }
    }

    pub fn rank(self) -> usize {
        match self {
            IdealKind::A(l) => l,
            IdealKind::C2 => 2,
        }
    }
}

/// Simple ideals of a split semisimple matrix algebra with the weights of ℚᵐ and ℚⁿ.
#[derive(Clone, Debug)]
pub struct WeightData {
    /// Ideals in reporting order (dimension descending).
    pub ideals: Vec<IdealKind>,
    pub weights_u: WeightMultiset,
    pub weights_v: WeightMultiset,
    pub cartan_dim: usize,
}

fn is_split_semisimple(x: &PairMat) -> bool {
    minpoly(&x.block_diag()).splits_squarefree()
}

fn combos(basis: &[Vec<Rat>]) -> impl Iterator<Item = Vec<Rat>> + '_ {
    let d = basis.len();
    let coeffs: [i64; 4] = [1, -1, 2, -2];
    let singles = (0..d).map(move |i| basis[i].clone());
    let pairs = (0..d).flat_map(move |i| {
        (i + 1..d).flat_map(move |j| {
            [1i64, 2].into_iter().flat_map(move |a| {
                coeffs.into_iter().map(move |b| {
                    exact::add_vec(&exact::scale_vec(&basis[i], &exact::rat(a)), &exact::scale_vec(&basis[j], &exact::rat(b)))
                })
            })
        })
    });
    let triples = (0..d).flat_map(move |i| {
        (i + 1..d).flat_map(move |j| {
            (j + 1..d).flat_map(move |k| {
                coeffs.into_iter().flat_map(move |b| {
                    coeffs.into_iter().map(move |c| {
                        let v = exact::add_vec(&basis[i], &exact::scale_vec(&basis[j], &exact::rat(b)));
                        exact::add_vec(&v, &exact::scale_vec(&basis[k], &exact::rat(c)))
                    })
                })
            })
        })
    });
    singles.chain(pairs).chain(triples)
}

fn is_split_cartan(m: usize, n: usize, ss: &Subspace, torus: &[PairMat]) -> bool {
    let c = matrix::centralizer_in(m, n, ss, torus);
    let vecs: Vec<Vec<Rat>> = torus.iter().map(PairMat::to_vec).collect();
    torus.iter().all(is_split_semisimple)
        && vecs.iter().all(|v| c.contains(v))
        && exact::vec_rank(&vecs) == torus.len()
        && c.dim() == torus.len()
}

/// A split Cartan subalgebra: first built ideal by ideal, otherwise by growing
/// a commuting family of split semisimple elements until it is its own centralizer.
pub fn split_cartan(m: usize, n: usize, ss: &Subspace) -> Result<Vec<PairMat>> {
    if let Some(torus) = super::cartan::ideal_cartan(m, n, ss).filter(|t| is_split_cartan(m, n, ss, t)) {
        return Ok(torus);
    }
    let mut torus: Vec<PairMat> = Vec::new();
    loop {
        let c = matrix::centralizer_in(m, n, ss, &torus);
        if c.dim() == torus.len() {
            return Ok(torus);
        }
        let span = Subspace::span(ss.ambient_dim(), &torus.iter().map(PairMat::to_vec).collect::<Vec<_>>());
        let pick = combos(c.basis())
            .find(|v| !span.contains(v) && is_split_semisimple(&PairMat::from_vec(m, n, v)))
            .ok_or_else(|| Error::NotSplit(format!("no split toral element in a centralizer of dim {}", c.dim())))?;
        torus.push(PairMat::from_vec(m, n, &pick));
    }
}

/// Joint eigenspaces of commuting diagonalizable operators on `space`.
fn joint_eigenspaces<F>(space: &Subspace, ops: usize, eigenvalues: impl Fn(usize) -> Vec<Rat>, apply: F) -> Vec<(Vec<Rat>, Subspace)>
where
    F: Fn(usize, &[Rat]) -> Vec<Rat>,
{
    let mut parts = vec![(Vec::new(), space.clone())];
    for k in 0..ops {
        let evs = eigenvalues(k);
        let mut next = Vec::new();
        for (w, s) in parts {
            for mu in &evs {
                let sub = kernel_on_span(space.ambient_dim(), s.basis(), |v| exact::sub_vec(&apply(k, v), &exact::scale_vec(v, mu)));
                if sub.dim() > 0 {
                    let mut w2 = w.clone();
                    w2.push(mu.clone());
                    next.push((w2, sub));
                }
            }
        }
        parts = next;
    }
    parts
}

fn lex_positive(w: &[Rat]) -> bool {
    w.iter().find(|x| !x.is_zero()).is_some_and(|x| *x > Rat::zero())
}

pub fn highest_weights(m: usize, n: usize, ss: &Subspace) -> Result<WeightData> {
    let torus = split_cartan(m, n, ss)?;
    let r = torus.len();
    let diag_evs = |x: &PairMat| minpoly(&x.block_diag()).rational_roots();
    let ad_evs = |k: usize| {
        let ev = diag_evs(&torus[k]);
        let mut out: Vec<Rat> = Vec::new();
        for a in &ev {
            for b in &ev {
                let d = a - b;
                if !out.contains(&d) {
                    out.push(d);
                }
            }
        }
        out
    };
    let spaces = joint_eigenspaces(ss, r, ad_evs, |k, v| torus[k].bracket(&PairMat::from_vec(m, n, v)).to_vec());
    let roots: Vec<(Vec<Rat>, Vec<Rat>)> = spaces
        .into_iter()
        .filter(|(w, _)| !exact::is_zero_vec(w))
        .map(|(w, s)| if s.dim() != 1 { Err(Error::NotSplit("root space of dimension > 1".into())) } else { Ok((w, s.basis()[0].clone())) })
        .collect::<Result<_>>()?;
    let positive: Vec<&(Vec<Rat>, Vec<Rat>)> = roots.iter().filter(|(w, _)| lex_positive(w)).collect();
    let simple: Vec<&(Vec<Rat>, Vec<Rat>)> = positive
        .iter()
        .copied()
        .filter(|(w, _)| !positive.iter().any(|(a, _)| positive.iter().any(|(b, _)| &exact::add_vec(a, b) == w)))
        .collect();
    if simple.len() != r {
        return Err(Error::Internal(format!("{} simple roots for a Cartan of dim {r}", simple.len())));
    }
    let torus_vecs: Vec<Vec<Rat>> = torus.iter().map(PairMat::to_vec).collect();
    let eval = |w: &[Rat], coords: &[Rat]| -> Rat { w.iter().zip(coords).map(|(a, b)| a * b).sum() };
    // coroots in torus coordinates
    let mut coroots: Vec<Vec<Rat>> = Vec::new();
    for (w, x) in &simple {
        let neg: Vec<Rat> = w.iter().map(|c| -c.clone()).collect();
        let (_, y) = roots.iter().find(|(v, _)| *v == neg).ok_or_else(|| Error::Internal("root without negative".into()))?;
        let hp = PairMat::from_vec(m, n, x).bracket(&PairMat::from_vec(m, n, y)).to_vec();
        let c = exact::coords_in(&torus_vecs, &hp).ok_or_else(|| Error::Internal("coroot outside the Cartan".into()))?;
        let a = eval(w, &c);
        if a.is_zero() {
            return Err(Error::Internal("degenerate coroot".into()));
        }
        coroots.push(exact::scale_vec(&c, &(exact::rat(2) / a)));
    }
    let cartan: Vec<Vec<Rat>> = (0..r).map(|i| (0..r).map(|j| eval(&simple[j].0, &coroots[i])).collect()).collect();

    // connected components of the diagram
    let mut comp = vec![usize::MAX; r];
    let mut comps: Vec<Vec<usize>> = Vec::new();
    for s in 0..r {
        if comp[s] != usize::MAX {
            continue;
        }
        let id = comps.len();
        let mut stack = vec![s];
        let mut members = Vec::new();
        comp[s] = id;
        while let Some(v) = stack.pop() {
            members.push(v);
            for u in 0..r {
                if comp[u] == usize::MAX && !cartan[v][u].is_zero() {
                    comp[u] = id;
                    stack.push(u);
                }
            }
        }
        members.sort_unstable();
        comps.push(members);
    }
    let minus = |k: i64| exact::rat(-k);
    let mut ideals: Vec<(IdealKind, Vec<usize>)> = Vec::new();
    for members in comps {
        let deg = |v: usize| members.iter().filter(|&&u| u != v && !cartan[v][u].is_zero()).count();
        let is_c2 = members.len() == 2 && {
            let (a, b) = (members[0], members[1]);
            &cartan[a][b] * &cartan[b][a] == exact::rat(2)
        };
        if is_c2 {
            let (a, b) = (members[0], members[1]);
            let order = if cartan[a][b] == minus(2) { vec![a, b] } else { vec![b, a] };
            ideals.push((IdealKind::C2, order));
            continue;
        }
        let simply_laced = members.iter().all(|&v| members.iter().all(|&u| u == v || cartan[v][u].is_zero() || cartan[v][u] == minus(1)));
        if !simply_laced || members.iter().any(|&v| deg(v) > 2) || (members.len() > 1 && members.iter().all(|&v| deg(v) == 2)) {
            return Err(Error::NotSplit("simple ideal of unsupported type".into()));
        }
        let start = *members.iter().find(|&&v| deg(v) <= 1).expect("paths have ends");
        let mut path = vec![start];
        while path.len() < members.len() {
            let last = *path.last().unwrap();
            let next = *members.iter().find(|&&u| !path.contains(&u) && !cartan[last][u].is_zero()).expect("connected path");
            path.push(next);
        }
        ideals.push((IdealKind::A(members.len()), path));
    }
    ideals.sort_by_key(|(k, _)| std::cmp::Reverse(k.dim()));
    let order: Vec<usize> = ideals.iter().flat_map(|(_, p)| p.iter().copied()).collect();

    let module_weights = |on_u: bool| -> Result<WeightMultiset> {
        let size = if on_u { m } else { n };
        let mat = |p: &PairMat| if on_u { p.a.clone() } else { p.b.clone() };
        let raise: Vec<exact::Mat> = simple.iter().map(|(_, x)| mat(&PairMat::from_vec(m, n, x))).collect();
        let full = Subspace::full(size);
        let top = kernel_on_span(size, full.basis(), |v| raise.iter().flat_map(|x| x.mul_vec(v)).collect());
        let tm: Vec<exact::Mat> = torus.iter().map(mat).collect();
        let parts = joint_eigenspaces(&top, r, |k| minpoly(&tm[k]).rational_roots(), |k, v| tm[k].mul_vec(v));
        let mut out = Vec::new();
        for (w, s) in parts {
            let labels: Vec<i64> = order
                .iter()
                .map(|&i| {
                    let x = eval(&w, &coroots[i]);
                    if !x.is_integer() {
                        return Err(Error::Internal("non-integral weight".into()));
                    }
                    exact::rat::to_i64(&x).ok_or_else(|| Error::Internal("weight overflow".into()))
                })
                .collect::<Result<_>>()?;
            out.extend(std::iter::repeat_n(labels, s.dim()));
        }
        out.sort_by(|a, b| b.cmp(a));
        Ok(out)
    };
    Ok(WeightData {
        ideals: ideals.iter().map(|(k, _)| *k).collect(),
        weights_u: module_weights(true)?,
        weights_v: module_weights(false)?,
        cartan_dim: r,
    })
}

/// Relabelings allowed when comparing weight tables: permutations of ideals of
/// equal kind and the diagram flip on each `A_ℓ`, `ℓ ≥ 2`.
fn symmetries(ideals: &[IdealKind]) -> Vec<Vec<(usize, bool)>> {
    let k = ideals.len();
    let mut perms: Vec<Vec<usize>> = vec![Vec::new()];
    for _ in 0..k {
        perms = perms
            .into_iter()
            .flat_map(|p| (0..k).filter(|i| !p.contains(i)).map(|i| [p.clone(), vec![i]].concat()).collect::<Vec<_>>())
            .collect();
    }
    let perms: Vec<Vec<usize>> = perms.into_iter().filter(|p| p.iter().enumerate().all(|(i, &j)| ideals[i] == ideals[j])).collect();
    let flippable: Vec<usize> = (0..k).filter(|&i| matches!(ideals[i], IdealKind::A(l) if l >= 2)).collect();
    let mut out = Vec::new();
    for p in &perms {
        for mask in 0..(1u32 << flippable.len()) {
            let mut flips = vec![false; k];
            for (b, &i) in flippable.iter().enumerate() {
                flips[i] = mask & (1 << b) != 0;
            }
            out.push(p.iter().enumerate().map(|(i, &j)| (j, flips[i])).collect());
        }
    }
    out
}

fn apply_symmetry(ideals: &[IdealKind], sym: &[(usize, bool)], w: &WeightMultiset) -> WeightMultiset {
    let offsets: Vec<usize> = ideals
        .iter()
        .scan(0, |acc, k| {
            let o = *acc;
            *acc += k.rank();
            Some(o)
        })
        .collect();
    let mut out: WeightMultiset = w
        .iter()
        .map(|t| {
            sym.iter()
                .flat_map(|&(src, flip)| {
                    let seg = &t[offsets[src]..offsets[src] + ideals[src].rank()];
                    let mut seg = seg.to_vec();
                    if flip {
                        seg.reverse();
                    }
                    seg
                })
                .collect()
        })
        .collect();
    out.sort_by(|a, b| b.cmp(a));
    out
}

/// Lexicographically greatest representative of `(U, V)` under the relabelings.
pub fn canonical_weights(ideals: &[IdealKind], u: &WeightMultiset, v: &WeightMultiset) -> (WeightMultiset, WeightMultiset) {
    symmetries(ideals).iter().map(|s| (apply_symmetry(ideals, s, u), apply_symmetry(ideals, s, v))).max().expect("identity symmetry exists")
}

/// True iff some relabeling takes `(u, v)` to `(u2, v2)`.
pub fn weights_match(ideals: &[IdealKind], u: &WeightMultiset, v: &WeightMultiset, u2: &WeightMultiset, v2: &WeightMultiset) -> bool {
    let width: usize = ideals.iter().map(|k| k.rank()).sum();
    let shaped = |w: &WeightMultiset| w.iter().all(|t| t.len() == width);
    shaped(u) && shaped(v) && shaped(u2) && shaped(v2) && canonical_weights(ideals, u, v) == canonical_weights(ideals, u2, v2)
}
