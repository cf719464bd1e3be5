//! Dense matrices over `Rat` with exact Gaussian elimination.

use std::fmt;
use std::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rat::{rat, Rat};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

/// Counts of positive, negative and zero squares of a real symmetric form.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default, serde::Serialize, serde::Deserialize)]
pub struct Signature {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

impl Signature {
    pub fn new(positive: usize, negative: usize, zero: usize) -> Self {
        Signature { positive, negative, zero }
    }

    pub fn dim(&self) -> usize {
        self.positive + self.negative + self.zero
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.positive, self.negative, self.zero)
    }
}

impl Index<(usize, usize)> for Mat {
    type Output = Rat;
    fn index(&self, (r, c): (usize, usize)) -> &Rat {
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for Mat {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Rat {
        &mut self.data[r * self.cols + c]
    }
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat { rows, cols, data: vec![Rat::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rat::one();
        }
        m
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<Rat>) -> Self {
        assert_eq!(data.len(), rows * cols, "entry count must equal rows*cols");
        Mat { rows, cols, data }
    }

    pub fn from_i64(rows: usize, cols: usize, entries: &[i64]) -> Self {
        Mat::from_vec(rows, cols, entries.iter().map(|&x| rat(x)).collect())
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row);
        }
        Mat { rows: r, cols: c, data }
    }

    /// Matrix whose columns are the given vectors (all of length `rows`).
    pub fn from_cols(rows: usize, cols: &[Vec<Rat>]) -> Self {
        let mut m = Mat::zeros(rows, cols.len());
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (i, x) in col.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        m
    }

    pub fn diag(entries: &[Rat]) -> Self {
        let mut m = Mat::zeros(entries.len(), entries.len());
        for (i, x) in entries.iter().enumerate() {
            m[(i, i)] = x.clone();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[Rat] {
        &self.data
    }

    pub fn into_entries(self) -> Vec<Rat> {
        self.data
    }

    pub fn row(&self, r: usize) -> &[Rat] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn col(&self, c: usize) -> Vec<Rat> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn trace(&self) -> Rat {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)].clone()).sum()
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let (a, da) = self.integer_form();
        let (b, db) = other.integer_form();
        let prod = int_product(&a, &b, self.rows, self.cols, other.cols);
        Mat::from_integers(self.rows, other.cols, prod, &(da * db))
    }

    /// Entries as integers over one common denominator.
    fn integer_form(&self) -> (Vec<BigInt>, BigInt) {
        let den = self.data.iter().fold(BigInt::one(), |acc, x| if x.denom().is_one() { acc } else { acc.lcm(x.denom()) });
        let nums = self.data.iter().map(|x| if x.denom() == &den { x.numer().clone() } else { x.numer() * (&den / x.denom()) }).collect();
        (nums, den)
    }

    fn from_integers(rows: usize, cols: usize, nums: Vec<BigInt>, den: &BigInt) -> Mat {
        let data = nums
            .into_iter()
            .map(|x| {
                if x.is_zero() {
                    Rat::zero()
                } else if den.is_one() {
                    Rat::from(x)
                } else {
                    Rat::new(x, den.clone())
                }
            })
            .collect();
        Mat { rows, cols, data }
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = Rat::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += a * b;
                    }
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        Mat { rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        Mat { rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, s: &Rat) -> Mat {
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a * s).collect() }
    }

    /// Commutator `self*other - other*self`.
    pub fn commutator(&self, other: &Mat) -> Mat {
        assert!(self.is_square() && self.rows == other.rows && other.is_square(), "commutator shape mismatch");
        let n = self.rows;
        let (a, da) = self.integer_form();
        let (b, db) = other.integer_form();
        let ab = int_product(&a, &b, n, n, n);
        let ba = int_product(&b, &a, n, n, n);
        let diff = ab.into_iter().zip(ba).map(|(x, y)| x - y).collect();
        Mat::from_integers(n, n, diff, &(da * db))
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self) -> (Mat, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        (m, pivots)
    }

    /// Gauss–Jordan on primitive integer rows, normalized to `Rat` at the end.
    fn rref_in_place(&mut self) -> Vec<usize> {
        let (rows, cols) = (self.rows, self.cols);
        let mut m: Vec<Vec<BigInt>> = self.data.chunks(cols.max(1)).take(rows).map(integer_row).collect();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(p) = (r..rows).filter(|&i| !m[i][c].is_zero()).min_by_key(|&i| m[i][c].bits()) else {
                continue;
            };
            m.swap(p, r);
            let pivot_row = std::mem::take(&mut m[r]);
            for row in m.iter_mut().filter(|row| !row.is_empty() && !row[c].is_zero()) {
                let g = pivot_row[c].gcd(&row[c]);
                let (a, b) = (&pivot_row[c] / &g, &row[c] / &g);
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    let t = &a * &*x;
                    *x = if y.is_zero() { t } else { t - &b * y };
                }
                make_primitive(row);
            }
            m[r] = pivot_row;
            pivots.push(c);
            r += 1;
        }
        for (i, row) in m.iter().enumerate() {
            let lead = pivots.get(i).map(|&c| row[c].clone());
            for (j, x) in row.iter().enumerate() {
                self.data[i * cols + j] = match &lead {
                    Some(l) => Rat::new(x.clone(), l.clone()),
                    None => Rat::zero(),
                };
            }
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right null space `{x : self*x = 0}`, one vector per free column.
    pub fn kernel(&self) -> Vec<Vec<Rat>> {
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![None; self.cols];
        for (row, &c) in pivots.iter().enumerate() {
            is_pivot[c] = Some(row);
        }
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if is_pivot[free].is_some() {
                continue;
            }
            let mut v = vec![Rat::zero(); self.cols];
            v[free] = Rat::one();
            for (row, &c) in pivots.iter().enumerate() {
                v[c] = -r[(row, free)].clone();
            }
            basis.push(v);
        }
        basis
    }

    /// Some `x` with `self*x = b`; free variables are set to zero.
    pub fn solve(&self, b: &[Rat]) -> Option<Vec<Rat>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = Mat::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, self.cols)] = b[i].clone();
        }
        let pivots = aug.rref_in_place();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![Rat::zero(); self.cols];
        for (row, &c) in pivots.iter().enumerate() {
            x[c] = aug[(row, self.cols)].clone();
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Mat> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut aug = Mat::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = Rat::one();
        }
        let pivots = aug.rref_in_place();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Mat::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = aug[(i, n + j)].clone();
            }
        }
        Some(inv)
    }

    pub fn det(&self) -> Result<Rat> {
        if !self.is_square() {
            return Err(Error::NotSquare(self.rows, self.cols));
        }
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Rat::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m[(i, c)].is_zero()) else {
                return Ok(Rat::zero());
            };
            if p != c {
                for j in 0..n {
                    m.data.swap(p * n + j, c * n + j);
                }
                det = -det;
            }
            let piv = m[(c, c)].clone();
            det *= &piv;
            for i in c + 1..n {
                let f = &m[(i, c)] / &piv;
                if f.is_zero() {
                    continue;
                }
                for j in c..n {
                    let d = &f * &m[(c, j)];
                    m[(i, j)] -= d;
                }
            }
        }
        Ok(det)
    }

    /// `Pᵀ · self · P`.
    pub fn congruent(&self, p: &Mat) -> Mat {
        p.transpose().mul(self).mul(p)
    }

    /// Signature of the symmetric form, by congruence diagonalization.
    ///
    /// Pivot choice: the diagonal entry of largest absolute value among the
    /// remaining indices. When the remaining diagonal is zero but the block is
    /// not, a hyperbolic 2x2 block `[[0,b],[b,0]]` is split off as `(1,1)`.
    pub fn signature(&self) -> Result<Signature> {
        if !self.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        let mut a = self.clone();
        let mut active: Vec<usize> = (0..a.rows).collect();
        let mut sig = Signature::default();
        while !active.is_empty() {
            let best = active
                .iter()
                .copied()
                .filter(|&i| !a[(i, i)].is_zero())
                .max_by(|&i, &j| a[(i, i)].abs().cmp(&a[(j, j)].abs()).then(j.cmp(&i)));
            if let Some(k) = best {
                let piv = a[(k, k)].clone();
                if piv.is_positive() {
                    sig.positive += 1;
                } else {
                    sig.negative += 1;
                }
                active.retain(|&i| i != k);
                schur_step(&mut a, &active, &[k], &[vec![piv.recip()]]);
                continue;
            }
            let pair =
                active.iter().enumerate().find_map(|(pi, &i)| active[pi + 1..].iter().find(|&&j| !a[(i, j)].is_zero()).map(|&j| (i, j)));
            match pair {
                Some((i, j)) => {
                    let b_inv = a[(i, j)].recip();
                    sig.positive += 1;
                    sig.negative += 1;
                    active.retain(|&x| x != i && x != j);
                    let z = Rat::zero();
                    schur_step(&mut a, &active, &[i, j], &[vec![z.clone(), b_inv.clone()], vec![b_inv, z]]);
                }
                None => {
                    sig.zero += active.len();
                    break;
                }
            }
        }
        Ok(sig)
    }
}

/// In-place Schur complement: `a[r][s] -= Σ a[r][p] · inv[p][q] · a[q][s]` over the
/// eliminated index block, for `r, s` ranging over `rest`.
fn schur_step(a: &mut Mat, rest: &[usize], block: &[usize], inv: &[Vec<Rat>]) {
    let coupling: Vec<Vec<Rat>> = rest
        .iter()
        .map(|&r| {
            (0..block.len())
                .map(|q| {
                    let mut acc = Rat::zero();
                    for (p, &bp) in block.iter().enumerate() {
                        if !a[(r, bp)].is_zero() && !inv[p][q].is_zero() {
                            acc += &a[(r, bp)] * &inv[p][q];
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect();
    for (ri, &r) in rest.iter().enumerate() {
        for &s in rest {
            let mut d = Rat::zero();
            for (q, &bq) in block.iter().enumerate() {
                if !coupling[ri][q].is_zero() && !a[(bq, s)].is_zero() {
                    d += &coupling[ri][q] * &a[(bq, s)];
                }
            }
            if !d.is_zero() {
                a[(r, s)] -= d;
            }
        }
    }
}

impl fmt::Display for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.data.iter().map(|x| x.to_string()).collect();
        let w = cells.iter().map(String::len).max().unwrap_or(1);
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{:>w$}", cells[i * self.cols + j])?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

pub fn kernel(m: &Mat) -> Vec<Vec<Rat>> {
    m.kernel()
}

pub fn rank(m: &Mat) -> usize {
    m.rank()
}

pub fn solve(m: &Mat, b: &[Rat]) -> Option<Vec<Rat>> {
    m.solve(b)
}

pub fn signature(s: &Mat) -> Result<Signature> {
    s.signature()
}

/// Row-major product of an `r × k` and a `k × c` integer matrix.
fn int_product(a: &[BigInt], b: &[BigInt], r: usize, k: usize, c: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); r * c];
    for i in 0..r {
        for l in 0..k {
            let x = &a[i * k + l];
            if x.is_zero() {
                continue;
            }
            for j in 0..c {
                let y = &b[l * c + j];
                if !y.is_zero() {
                    out[i * c + j] += x * y;
                }
            }
        }
    }
    out
}

/// The row scaled to coprime integers.
fn integer_row(row: &[Rat]) -> Vec<BigInt> {
    let den = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let mut out: Vec<BigInt> = row.iter().map(|x| x.numer() * (&den / x.denom())).collect();
    make_primitive(&mut out);
    out
}

fn make_primitive(row: &mut [BigInt]) {
    let g = row.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in row.iter_mut() {
            *x /= &g;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat::frac;

    #[test]
    fn kernel_of_identity_and_zero() {
        assert!(Mat::identity(3).kernel().is_empty());
        assert_eq!(Mat::zeros(2, 3).kernel().len(), 3);
    }

    #[test]
    fn rank_one_outer_product() {
        let u = [rat(1), rat(-2), frac(1, 3)];
        let v = [rat(3), rat(0), rat(5), rat(-1)];
        let m = Mat::from_vec(3, 4, u.iter().flat_map(|a| v.iter().map(move |b| a * b)).collect());
        assert_eq!(m.rank(), 1);
        assert_eq!(Mat::identity(5).rank(), 5);
    }

    #[test]
    fn solve_cases() {
        let b = vec![rat(1), rat(2), rat(3)];
        assert_eq!(Mat::identity(3).solve(&b), Some(b.clone()));
        assert_eq!(Mat::zeros(3, 3).solve(&b), None);
    }

    #[test]
    fn signature_examples() {
        let d = Mat::diag(&[rat(1), rat(-2), rat(0)]);
        assert_eq!(d.signature().unwrap(), Signature::new(1, 1, 1));
        let g = Mat::from_i64(2, 2, &[4, 2, 2, 4]);
        assert_eq!(g.signature().unwrap(), Signature::new(2, 0, 0));
        let h = Mat::from_i64(3, 3, &[0, 1, 0, 1, 0, 0, 0, 0, 0]);
        assert_eq!(h.signature().unwrap(), Signature::new(1, 1, 1));
        let ns = Mat::from_i64(2, 2, &[0, 1, 2, 0]);
        assert_eq!(ns.signature(), Err(Error::NotSymmetric));
    }

    #[test]
    fn hyperbolic_pairs_then_pivots() {
        // [[0,1,1],[1,0,1],[1,1,0]] has eigenvalues 2,-1,-1
        let m = Mat::from_i64(3, 3, &[0, 1, 1, 1, 0, 1, 1, 1, 0]);
        assert_eq!(m.signature().unwrap(), Signature::new(1, 2, 0));
    }

    #[test]
    fn inverse_and_det() {
        let m = Mat::from_i64(3, 3, &[2, 1, 0, 0, 1, 4, 1, 0, 1]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Mat::identity(3));
        assert_eq!(m.det().unwrap(), rat(6));
        assert!(Mat::from_i64(2, 2, &[1, 2, 2, 4]).inverse().is_none());
    }
}
