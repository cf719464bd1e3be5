use crate::exact::{self, Mat, Rat};

/// A linear subspace of ℚ^d, stored by a reduced row-echelon basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<Vec<Rat>>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace { ambient_dim, basis: Vec::new() }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Subspace { ambient_dim, basis: (0..ambient_dim).map(|i| exact::unit_vec(ambient_dim, i)).collect() }
    }

    pub fn span(ambient_dim: usize, vectors: &[Vec<Rat>]) -> Self {
        Subspace { ambient_dim, basis: exact::span_basis(ambient_dim, vectors) }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Rat>] {
        &self.basis
    }

    pub fn contains(&self, v: &[Rat]) -> bool {
        exact::is_zero_vec(v) || exact::coords_in(&self.basis, v).is_some()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut all = self.basis.clone();
        all.extend(other.basis.iter().cloned());
        Subspace::span(self.ambient_dim, &all)
    }

    pub fn intersect(&self, other: &Subspace) -> Subspace {
        if self.dim() == 0 || other.dim() == 0 {
            return Subspace::zero(self.ambient_dim);
        }
        // a in self ∩ other  <=>  Σ x_i s_i - Σ y_j o_j = 0
        let mut cols = self.basis.clone();
        cols.extend(other.basis.iter().map(|v| v.iter().map(|x| -x.clone()).collect()));
        let sys = Mat::from_cols(self.ambient_dim, &cols);
        let vecs: Vec<Vec<Rat>> = sys
            .kernel()
            .into_iter()
            .map(|k| {
                let mut v = exact::zero_vec(self.ambient_dim);
                for (c, b) in k.iter().zip(&self.basis) {
                    exact::axpy(&mut v, c, b);
                }
                v
            })
            .collect();
        Subspace::span(self.ambient_dim, &vecs)
    }

    /// Coordinate vectors `e_i`, in index order, that extend `self` to the whole space.
    pub fn coordinate_complement(&self) -> Vec<usize> {
        let mut current = self.basis.clone();
        let mut rank = current.len();
        let mut chosen = Vec::new();
        for i in 0..self.ambient_dim {
            if rank == self.ambient_dim {
                break;
            }
            current.push(exact::unit_vec(self.ambient_dim, i));
            let r = exact::vec_rank(&current);
            if r > rank {
                rank = r;
                chosen.push(i);
            } else {
                current.pop();
            }
        }
        chosen
    }

    /// Vectors from `candidates`, in order, that extend `self` to a basis of `self + span(candidates)`.
    pub fn greedy_extension(&self, candidates: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
        let mut current = self.basis.clone();
        let mut rank = current.len();
        let mut chosen = Vec::new();
        for c in candidates {
            current.push(c.clone());
            let r = exact::vec_rank(&current);
            if r > rank {
                rank = r;
                chosen.push(c.clone());
            } else {
                current.pop();
            }
        }
        chosen
    }
}

/// Kernel of a linear map restricted to `span(basis)`, mapped back to ambient coordinates.
pub fn kernel_on_span<F>(ambient_dim: usize, basis: &[Vec<Rat>], map: F) -> Subspace
where
    F: Fn(&[Rat]) -> Vec<Rat>,
{
    if basis.is_empty() {
        return Subspace::zero(ambient_dim);
    }
    let images: Vec<Vec<Rat>> = basis.iter().map(|b| map(b)).collect();
    let out_dim = images[0].len();
    if out_dim == 0 {
        return Subspace::span(ambient_dim, basis);
    }
    let sys = Mat::from_cols(out_dim, &images);
    let vecs: Vec<Vec<Rat>> = sys
        .kernel()
        .into_iter()
        .map(|k| {
            let mut v = exact::zero_vec(ambient_dim);
            for (c, b) in k.iter().zip(basis) {
                exact::axpy(&mut v, c, b);
            }
            v
        })
        .collect();
    Subspace::span(ambient_dim, &vecs)
}
