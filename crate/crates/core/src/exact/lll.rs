//! Exact LLL reduction of integer lattice bases.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::Rat;

fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// LLL with `δ = 3/4` on linearly independent integer rows, with
/// incremental Gram–Schmidt updates.
pub fn reduce(mut b: Vec<Vec<BigInt>>) -> Vec<Vec<BigInt>> {
    let n = b.len();
    if n < 2 {
        return b;
    }
    let delta = Rat::new(BigInt::from(3), BigInt::from(4));
    let mut mu = vec![vec![Rat::zero(); n]; n];
    let mut norms: Vec<Rat> = Vec::with_capacity(n);
    let mut bstar: Vec<Vec<Rat>> = Vec::with_capacity(n);
    for i in 0..n {
        let bi: Vec<Rat> = b[i].iter().cloned().map(Rat::from).collect();
        let mut v = bi.clone();
        for j in 0..i {
            let num: Rat = bi.iter().zip(&bstar[j]).map(|(x, y)| x * y).sum();
            mu[i][j] = num / &norms[j];
            for (x, y) in v.iter_mut().zip(&bstar[j]) {
                *x -= &mu[i][j] * y;
            }
        }
        norms.push(v.iter().map(|x| x * x).sum());
        bstar.push(v);
    }
    let size_reduce = |b: &mut Vec<Vec<BigInt>>, mu: &mut Vec<Vec<Rat>>, k: usize, j: usize| {
        let q = mu[k][j].round().to_integer();
        if q.is_zero() {
            return;
        }
        let bj = b[j].clone();
        for (x, y) in b[k].iter_mut().zip(&bj) {
            *x -= &q * y;
        }
        let qr = Rat::from(q);
        mu[k][j] -= &qr;
        for l in 0..j {
            let t = &qr * &mu[j][l];
            mu[k][l] -= t;
        }
    };
    let mut k = 1;
    while k < n {
        size_reduce(&mut b, &mut mu, k, k - 1);
        let m = mu[k][k - 1].clone();
        if norms[k] < (&delta - &m * &m) * &norms[k - 1] {
            let big = &norms[k] + &m * &m * &norms[k - 1];
            mu[k][k - 1] = &m * &norms[k - 1] / &big;
            norms[k] = &norms[k - 1] * &norms[k] / &big;
            norms[k - 1] = big;
            b.swap(k, k - 1);
            for j in 0..k - 1 {
                let t = mu[k][j].clone();
                mu[k][j] = std::mem::replace(&mut mu[k - 1][j], t);
            }
            for i in k + 1..n {
                let t = mu[i][k].clone();
                mu[i][k] = &mu[i][k - 1] - &m * &t;
                mu[i][k - 1] = t + &mu[k][k - 1] * &mu[i][k];
            }
            k = (k - 1).max(1);
        } else {
            for j in (0..k - 1).rev() {
                size_reduce(&mut b, &mut mu, k, j);
            }
            k += 1;
        }
    }
    b
}

/// LLL-reduced basis of the integer points of `span(basis)`.
pub fn saturated_basis(basis: &[Vec<Rat>]) -> Vec<Vec<BigInt>> {
    let (r, pivots) = super::Mat::from_rows(basis.to_vec()).rref();
    let d = pivots.len();
    let rows: Vec<Vec<Rat>> = (0..d).map(|i| r.row(i).to_vec()).collect();
    // integer points are `Σ cᵢ rowsᵢ` with `c ∈ ℤᵈ` subject to one congruence per column
    let mut lat: Vec<Vec<BigInt>> = (0..d).map(|i| (0..d).map(|j| BigInt::from(u8::from(i == j))).collect()).collect();
    let ncols = rows.first().map_or(0, Vec::len);
    for col in 0..ncols {
        let den = rows.iter().fold(BigInt::one(), |acc, row| acc.lcm(row[col].denom()));
        if den.is_one() {
            continue;
        }
        let a: Vec<BigInt> = rows.iter().map(|row| (&row[col] * Rat::from(den.clone())).to_integer()).collect();
        let mut f: Vec<BigInt> = lat.iter().map(|c| dot(c, &a).mod_floor(&den)).collect();
        for k in 1..d {
            if f[k].is_zero() {
                continue;
            }
            let e = f[0].extended_gcd(&f[k]);
            let (u, v) = (&f[k] / &e.gcd, &f[0] / &e.gcd);
            let r0: Vec<BigInt> = lat[0].iter().zip(&lat[k]).map(|(p, q)| &e.x * p + &e.y * q).collect();
            let rk: Vec<BigInt> = lat[0].iter().zip(&lat[k]).map(|(p, q)| &u * p - &v * q).collect();
            lat[0] = r0;
            lat[k] = rk;
            f[0] = e.gcd;
            f[k] = BigInt::zero();
        }
        let step = &den / f[0].gcd(&den);
        lat[0] = lat[0].iter().map(|x| x * &step).collect();
        lat = reduce(lat);
    }
    let points: Vec<Vec<BigInt>> = lat
        .iter()
        .map(|c| {
            let mut x = super::zero_vec(ncols);
            for (ci, row) in c.iter().zip(&rows) {
                super::axpy(&mut x, &Rat::from(ci.clone()), row);
            }
            x.into_iter().map(|v| v.to_integer()).collect()
        })
        .collect();
    reduce(points)
}

/// Largest absolute entry.
pub fn height(v: &[BigInt]) -> BigInt {
    v.iter().map(|x| x.abs()).max().unwrap_or_default()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    #[test]
    fn reduces_skewed_basis() {
        let b = ints(&[&[1, 0, 0], &[1000, 1, 0], &[37, 999, 1]]);
        let r = reduce(b);
        assert!(r.iter().all(|v| height(v) <= BigInt::one()));
    }

    #[test]
    fn saturation_finds_small_points() {
        // span of (1/7)(1, 2, 3) and (0, 1/5, 1) holds (1, 2, 3) and (0, 1, 5)
        let b = vec![
            vec![Rat::new(1.into(), 7.into()), Rat::new(2.into(), 7.into()), Rat::new(3.into(), 7.into())],
            vec![Rat::zero(), Rat::new(1.into(), 5.into()), Rat::one()],
        ];
        let s = saturated_basis(&b);
        assert_eq!(s.len(), 2);
        assert!(s.iter().all(|v| height(v) <= BigInt::from(5)));
    }
}
