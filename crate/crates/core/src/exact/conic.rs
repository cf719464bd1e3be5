//! Rational isotropic vectors of quadratic forms by Legendre descent.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{Mat, Rat};

fn factor(n: &BigInt) -> Vec<(BigInt, usize)> {
    let mag = n.magnitude().clone();
    if mag.is_one() || mag.is_zero() {
        return Vec::new();
    }
    num_prime::nt_funcs::factorize(mag).into_iter().map(|(p, e)| (BigInt::from(p), e)).collect()
}

/// `n = core · s²` with `core` squarefree and carrying the sign of `n`.
fn squarefree(n: &BigInt) -> (BigInt, BigInt) {
    let mut core = if n.is_negative() { -BigInt::one() } else { BigInt::one() };
    let mut s = BigInt::one();
    for (p, e) in factor(n) {
        if e % 2 == 1 {
            core *= &p;
        }
        s *= num_traits::pow(p, e / 2);
    }
    (core, s)
}

fn sqrt_mod_prime(a: &BigInt, p: &BigInt) -> Option<BigInt> {
    let a = a.mod_floor(p);
    if a.is_zero() || *p == BigInt::from(2) {
        return Some(a);
    }
    let one = BigInt::one();
    let half = (p - &one) >> 1;
    if a.modpow(&half, p) != one {
        return None;
    }
    // Tonelli–Shanks
    let mut q = p - &one;
    let mut s = 0u32;
    while q.is_even() {
        q >>= 1;
        s += 1;
    }
    let mut z = BigInt::from(2);
    while z.modpow(&half, p) == one {
        z += 1;
    }
    let mut c = z.modpow(&q, p);
    let mut r = a.modpow(&((&q + &one) >> 1), p);
    let mut t = a.modpow(&q, p);
    let mut m = s;
    while t != one {
        let mut i = 0u32;
        let mut t2 = t.clone();
        while t2 != one {
            t2 = (&t2 * &t2).mod_floor(p);
            i += 1;
        }
        let b = c.modpow(&(BigInt::one() << (m - i - 1) as usize), p);
        r = (&r * &b).mod_floor(p);
        c = (&b * &b).mod_floor(p);
        t = (&t * &c).mod_floor(p);
        m = i;
    }
    Some(r)
}

/// A square root of `a` modulo the squarefree `n > 0`, by CRT.
fn sqrt_mod(a: &BigInt, n: &BigInt) -> Option<BigInt> {
    let mut x = BigInt::zero();
    let mut modulus = BigInt::one();
    for (p, _) in factor(n) {
        let r = sqrt_mod_prime(a, &p)?;
        // x ≡ r (mod p), x ≡ x (mod modulus)
        let inv = modinv(&modulus, &p)?;
        let k = ((&r - &x) * inv).mod_floor(&p);
        x += &modulus * k;
        modulus *= &p;
    }
    Some(x.mod_floor(&modulus.max(BigInt::one())))
}

fn modinv(a: &BigInt, p: &BigInt) -> Option<BigInt> {
    let e = a.extended_gcd(p);
    e.gcd.is_one().then(|| e.x.mod_floor(p))
}

/// Nontrivial integer solution of `x² = a y² + b z²` for squarefree nonzero `a`, `b`.
fn descent(a: &BigInt, b: &BigInt) -> Option<[BigInt; 3]> {
    let (zero, one) = (BigInt::zero(), BigInt::one());
    if a.is_one() {
        return Some([one.clone(), one, zero]);
    }
    if b.is_one() {
        return Some([one.clone(), zero, one]);
    }
    if a.is_negative() && b.is_negative() {
        return None;
    }
    if a.abs() > b.abs() {
        let [x, y, z] = descent(b, a)?;
        return Some([x, z, y]);
    }
    let nb = b.abs();
    let mut t = sqrt_mod(a, &nb)?;
    if &t * 2 > nb {
        t = &nb - t;
    }
    let kp = (&t * &t - a) / b;
    let (k, s) = squarefree(&kp);
    let [x1, y1, z1] = descent(a, &k)?;
    Some([&t * &x1 + a * &y1, &x1 + &t * &y1, &k * &s * &z1])
}

fn int(r: &Rat) -> (BigInt, BigInt) {
    (r.numer().clone(), r.denom().clone())
}

/// Nonzero `X` with `Σ dᵢ Xᵢ² = 0` for three nonzero rationals.
pub fn solve_diagonal(d: [&Rat; 3]) -> Option<[Rat; 3]> {
    // dᵢ = pᵢ/qᵢ: with Yᵢ = Xᵢ/qᵢ the form is Σ pᵢqᵢ Yᵢ², then strip squares
    let mut f = Vec::with_capacity(3);
    let mut scale = Vec::with_capacity(3);
    for di in d {
        let (p, q) = int(di);
        let (core, s) = squarefree(&(&p * &q));
        f.push(core);
        // Xᵢ = qᵢ Yᵢ = qᵢ Zᵢ / sᵢ
        scale.push(Rat::new(q, s));
    }
    // (f₁Z₁)² = −f₁f₂ Z₂² − f₁f₃ Z₃²
    let (ca, sa) = squarefree(&-(&f[0] * &f[1]));
    let (cb, sb) = squarefree(&-(&f[0] * &f[2]));
    let [x, y, z] = descent(&ca, &cb)?;
    let zs = [Rat::new(x, f[0].clone()), Rat::new(y, sa), Rat::new(z, sb)];
    Some([&zs[0] * &scale[0], &zs[1] * &scale[1], &zs[2] * &scale[2]])
}

fn form(q: &Mat, u: &[Rat], v: &[Rat]) -> Rat {
    let qv = q.mul_vec(v);
    u.iter().zip(&qv).map(|(a, b)| a * b).sum()
}

/// Nonzero `v` with `vᵀ q v = 0` for a symmetric `q`, or `None` when the
/// search finds none. Complete for nondegenerate forms of size at most 3:
/// diagonalizes by congruence, then solves binary and ternary subforms.
pub fn isotropic_vector(q: &Mat) -> Option<Vec<Rat>> {
    let n = q.rows();
    let mut rest: Vec<Vec<Rat>> = (0..n).map(|i| super::unit_vec(n, i)).collect();
    let mut basis: Vec<(Vec<Rat>, Rat)> = Vec::new();
    while !rest.is_empty() {
        let p = rest.remove(0);
        let norm = form(q, &p, &p);
        if norm.is_zero() {
            return Some(p);
        }
        for r in &mut rest {
            let c = form(q, r, &p) / &norm;
            super::axpy(r, &-c, &p);
        }
        basis.push((p, norm));
    }
    let combine = |coeffs: &[(usize, Rat)]| {
        let mut v = super::zero_vec(n);
        for (i, c) in coeffs {
            super::axpy(&mut v, c, &basis[*i].0);
        }
        v
    };
    let k = basis.len();
    for i in 0..k {
        for j in i + 1..k {
            // dᵢx² + dⱼy² = 0 needs −dᵢ/dⱼ = r²
            let ratio = -(&basis[i].1 / &basis[j].1);
            if let Some(r) = rational_sqrt(&ratio) {
                return Some(combine(&[(i, Rat::one()), (j, r)]));
            }
        }
    }
    for i in 0..k {
        for j in i + 1..k {
            for l in j + 1..k {
                if let Some(x) = solve_diagonal([&basis[i].1, &basis[j].1, &basis[l].1]) {
                    let [a, b, c] = x;
                    return Some(combine(&[(i, a), (j, b), (l, c)]));
                }
            }
        }
    }
    None
}

fn rational_sqrt(r: &Rat) -> Option<Rat> {
    if r.is_negative() {
        return None;
    }
    let sq = |n: &BigInt| {
        let s = n.sqrt();
        (&s * &s == *n).then_some(s)
    };
    Some(Rat::new(sq(r.numer())?, sq(r.denom())?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{frac, rat};

    fn check(d: [i64; 3]) {
        let dr = d.map(rat);
        let x = solve_diagonal([&dr[0], &dr[1], &dr[2]]).unwrap_or_else(|| panic!("{d:?}"));
        assert!(x.iter().any(|c| !c.is_zero()));
        let s: Rat = x.iter().zip(&dr).map(|(a, b)| b * a * a).sum();
        assert!(s.is_zero(), "{d:?}");
    }

    #[test]
    fn legendre_examples() {
        check([1, 1, -2]);
        check([3, 5, -2]);
        check([1, -1, 7]);
        check([13, 17, -1]);
        check([12, 18, -30]);
        check([-5, 41, 1 - 41 * 5]);
    }

    #[test]
    fn anisotropic_forms() {
        assert!(solve_diagonal([&rat(1), &rat(1), &rat(1)]).is_none());
        // x² + y² = 3z² has no rational solution
        assert!(solve_diagonal([&rat(1), &rat(1), &rat(-3)]).is_none());
    }

    #[test]
    fn general_forms() {
        let q =
            Mat::from_rows(vec![vec![frac(3, 2), rat(1), rat(0)], vec![rat(1), rat(-7), frac(5, 3)], vec![rat(0), frac(5, 3), rat(11)]]);
        let v = isotropic_vector(&q).unwrap();
        assert!(form(&q, &v, &v).is_zero() && v.iter().any(|c| !c.is_zero()));
        // Killing-type form of sl2: 2xz + y²/2 ... hyperbolic
        let h = Mat::from_i64(3, 3, &[8, 0, 0, 0, 0, 4, 0, 4, 0]);
        let v = isotropic_vector(&h).unwrap();
        assert!(form(&h, &v, &v).is_zero());
    }

    #[test]
    fn sqrt_mod_composite() {
        let r = sqrt_mod(&BigInt::from(2), &BigInt::from(7 * 17)).unwrap();
        assert_eq!((&r * &r - 2) % (7 * 17), BigInt::zero());
        assert!(sqrt_mod(&BigInt::from(3), &BigInt::from(7)).is_none());
    }
}
