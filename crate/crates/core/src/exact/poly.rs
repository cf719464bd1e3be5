//! Univariate polynomials over `Rat` and minimal polynomials of matrices.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::mat::Mat;
use super::rat::Rat;

/// Coefficients from constant term upward; no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly(Vec<Rat>);

impl Poly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly(coeffs)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn lead(&self) -> Option<&Rat> {
        self.0.last()
    }

    pub fn monic(&self) -> Poly {
        match self.lead() {
            None => self.clone(),
            Some(l) => {
                let inv = l.recip();
                Poly(self.0.iter().map(|c| c * &inv).collect())
            }
        }
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(self.0.iter().enumerate().skip(1).map(|(i, c)| c * Rat::from_integer(BigInt::from(i))).collect())
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.0.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Quotient and remainder of division by a nonzero polynomial.
    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        let dd = d.degree().expect("division by zero polynomial");
        let mut r = self.0.clone();
        if r.len() <= dd {
            return (Poly(Vec::new()), self.clone());
        }
        let inv = d.0[dd].recip();
        let mut q = vec![Rat::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = &r[k + dd] * &inv;
            if c.is_zero() {
                continue;
            }
            for (i, dc) in d.0.iter().enumerate() {
                r[k + i] -= &c * dc;
            }
            q[k] = c;
        }
        (Poly::new(q), Poly::new(r))
    }

    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gcd(&self.derivative()).degree() == Some(0)
    }

    /// Distinct rational roots, ascending: Sturm isolation of the real roots,
    /// then the simplest rational in each shrinking interval is tested.
    pub fn rational_roots(&self) -> Vec<Rat> {
        let Some(deg) = self.degree() else {
            return Vec::new();
        };
        if deg == 0 {
            return Vec::new();
        }
        let sf = self.div_rem(&self.gcd(&self.derivative())).0;
        let lcm = sf.0.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = sf.0.iter().map(|c| (c * Rat::from_integer(lcm.clone())).to_integer()).collect();
        let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        // a rational root a/b has b dividing the leading coefficient
        let lead = (ints.last().expect("nonzero") / &content).abs();
        let resolution = Rat::new(BigInt::one(), &lead * &lead * 2);
        let chain = sturm_chain(&sf);
        let lc = sf.lead().expect("nonzero").clone();
        let bound = Rat::one() + sf.0.iter().map(|c| (c / &lc).abs()).max().expect("nonzero");
        let mut roots = Vec::new();
        let mut stack = vec![(-bound.clone(), bound)];
        while let Some((lo, hi)) = stack.pop() {
            // roots in (lo, hi]
            let count = sign_changes(&chain, &lo) - sign_changes(&chain, &hi);
            if count == 0 {
                continue;
            }
            if count > 1 {
                let mid = (&lo + &hi) / Rat::from_integer(BigInt::from(2));
                stack.push((lo, mid.clone()));
                stack.push((mid, hi));
                continue;
            }
            let (mut lo, mut hi) = (lo, hi);
            for step in 0.. {
                let done = &hi - &lo < resolution;
                if step % 8 == 0 || done {
                    let cand = simplest_in(&lo, &hi);
                    if sf.eval(&cand).is_zero() {
                        roots.push(cand);
                        break;
                    }
                }
                if done {
                    break;
                }
                let mid = (&lo + &hi) / Rat::from_integer(BigInt::from(2));
                if sign_changes(&chain, &lo) - sign_changes(&chain, &mid) == 1 {
                    hi = mid;
                } else {
                    lo = mid;
                }
            }
        }
        roots.sort();
        roots
    }

    /// Number of distinct real roots.
    pub fn real_root_count(&self) -> usize {
        let Some(lc) = self.lead() else {
            return 0;
        };
        let bound = Rat::one() + self.0.iter().map(|c| (c / lc).abs()).max().expect("nonzero");
        let chain = sturm_chain(self);
        sign_changes(&chain, &-bound.clone()) - sign_changes(&chain, &bound)
    }

    /// True when the polynomial is a product of distinct linear factors over ℚ.
    pub fn splits_squarefree(&self) -> bool {
        match self.degree() {
            None => false,
            Some(d) => self.is_squarefree() && self.real_root_count() == d && self.rational_roots().len() == d,
        }
    }
}

/// Primitive integer coefficients with the sign of the original leading term.
fn primitive_ints(p: &Poly) -> Vec<BigInt> {
    let lcm = p.0.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = p.0.iter().map(|c| (c * Rat::from_integer(lcm.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if g.is_zero() {
        ints
    } else {
        ints.into_iter().map(|c| c / &g).collect()
    }
}

/// Sturm sequence, each term scaled to a primitive integer polynomial.
fn sturm_chain(p: &Poly) -> Vec<Vec<BigInt>> {
    let mut chain = vec![p.clone(), p.derivative()];
    loop {
        let k = chain.len();
        let r = chain[k - 2].div_rem(&chain[k - 1]).1;
        if r.is_zero() {
            return chain.iter().map(primitive_ints).collect();
        }
        let next = Poly::new(primitive_ints(&r).into_iter().map(|c| Rat::from_integer(-c)).collect());
        chain.push(next);
    }
}

/// Sign of `p(a/b)` for `b > 0`, from `Σ cᵢ aⁱ b^(d−i)`.
fn sign_at(p: &[BigInt], a: &BigInt, b: &BigInt) -> i8 {
    let mut acc = BigInt::zero();
    let mut bpow = BigInt::one();
    // Horner on the homogenized form: acc = acc·a + cᵢ·b^(d−i)
    for c in p.iter().rev() {
        acc = acc * a + c * &bpow;
        bpow *= b;
    }
    if acc.is_positive() {
        1
    } else if acc.is_negative() {
        -1
    } else {
        0
    }
}

fn sign_changes(chain: &[Vec<BigInt>], x: &Rat) -> usize {
    let signs: Vec<i8> = chain.iter().map(|p| sign_at(p, x.numer(), x.denom())).filter(|&s| s != 0).collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// The rational of least denominator in `(lo, hi]`.
fn simplest_in(lo: &Rat, hi: &Rat) -> Rat {
    if hi.is_negative() {
        -simplest(&-hi, &-lo, false, true)
    } else if !lo.is_negative() {
        simplest(lo, hi, true, false)
    } else {
        Rat::zero()
    }
}

/// Least-denominator rational between `0 ≤ lo < hi`, with either end open.
fn simplest(lo: &Rat, hi: &Rat, lo_open: bool, hi_open: bool) -> Rat {
    let fl = lo.floor();
    let c = if lo.is_integer() && !lo_open { lo.clone() } else { &fl + Rat::one() };
    if c < *hi || (c == *hi && !hi_open) {
        return c;
    }
    // x = fl + 1/y with y between 1/(hi − fl) and 1/(lo − fl)
    let y_lo = Rat::one() / (hi - &fl);
    let y = if *lo == fl {
        let f = y_lo.floor();
        if y_lo.is_integer() && !hi_open {
            f
        } else {
            f + Rat::one()
        }
    } else {
        simplest(&y_lo, &(Rat::one() / (lo - &fl)), hi_open, lo_open)
    };
    fl + Rat::one() / y
}

/// Minimal polynomial (monic) of a square matrix, by the first linear
/// dependence among `I, M, M², ...`.
pub fn minpoly(m: &Mat) -> Poly {
    assert!(m.is_square(), "minimal polynomial needs a square matrix");
    let n = m.rows();
    if n == 0 {
        return Poly::new(vec![Rat::one()]);
    }
    // minpoly of the integer matrix `d·m`, then `x ↦ d·x`
    let d = m.entries().iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let scaled = m.scale(&Rat::from(d.clone()));
    // fraction-free elimination of the powers, each row tracking its combination of powers
    let mut reduced: Vec<(usize, Vec<BigInt>, Vec<BigInt>)> = Vec::new();
    let mut power = Mat::identity(n);
    for k in 0..=n {
        let mut v: Vec<BigInt> = power.entries().iter().map(Rat::to_integer).collect();
        let mut combo = vec![BigInt::zero(); n + 1];
        combo[k] = BigInt::one();
        for (piv, rv, rc) in &reduced {
            if v[*piv].is_zero() {
                continue;
            }
            let g = rv[*piv].gcd(&v[*piv]);
            let (a, b) = (&rv[*piv] / &g, &v[*piv] / &g);
            for (x, y) in v.iter_mut().zip(rv).chain(combo.iter_mut().zip(rc)) {
                *x = &a * &*x - &b * y;
            }
            let c = v.iter().chain(&combo).fold(BigInt::zero(), |acc, x| acc.gcd(x));
            if !c.is_one() {
                v.iter_mut().chain(combo.iter_mut()).for_each(|x| *x /= &c);
            }
        }
        match v.iter().position(|x| !x.is_zero()) {
            None => {
                let dr = Rat::from(d);
                let mut scale = Rat::one();
                let coeffs = combo[..=k]
                    .iter()
                    .map(|c| {
                        let out = Rat::from(c.clone()) * &scale;
                        scale *= &dr;
                        out
                    })
                    .collect();
                return Poly::new(coeffs).monic();
            }
            Some(p) => reduced.push((p, v, combo)),
        }
        power = power.mul(&scaled);
    }
    unreachable!("Cayley-Hamilton bounds the degree by n")
}

/// True iff the minimal polynomial has no repeated factor.
pub fn minpoly_squarefree(m: &Mat) -> bool {
    minpoly(m).is_squarefree()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat::{frac, rat};

    fn from_roots(roots: &[Rat]) -> Poly {
        roots.iter().fold(Poly::new(vec![Rat::one()]), |acc, r| {
            let mut c = vec![Rat::zero(); acc.0.len() + 1];
            for (i, a) in acc.0.iter().enumerate() {
                c[i + 1] += a;
                c[i] -= a * r;
            }
            Poly::new(c)
        })
    }

    #[test]
    fn rational_roots_of_large_height() {
        let big = Rat::new("123456789012345678901234567".parse().unwrap(), "98765432109876543".parse().unwrap());
        let roots = vec![-big.clone(), Rat::new(3.into(), 7.into()), rat(0), big.clone(), rat(5)];
        let mut p = from_roots(&roots);
        // times an irreducible quadratic and a repeated factor
        p = Poly::new({
            let q = [rat(-2), rat(0), rat(1)];
            let mut c = vec![Rat::zero(); p.0.len() + 2];
            for (i, a) in p.0.iter().enumerate() {
                for (j, b) in q.iter().enumerate() {
                    c[i + j] += a * b;
                }
            }
            c
        });
        p = Poly::new({
            let mut c = vec![Rat::zero(); p.0.len() + 1];
            for (i, a) in p.0.iter().enumerate() {
                c[i + 1] += a;
                c[i] -= a * rat(5);
            }
            c
        });
        let mut want = roots;
        want.sort();
        assert_eq!(p.rational_roots(), want);
    }

    #[test]
    fn simplest_rationals() {
        assert_eq!(simplest_in(&frac(1, 3), &frac(1, 2)), frac(1, 2));
        assert_eq!(simplest_in(&frac(3, 10), &frac(2, 5)), frac(1, 3));
        assert_eq!(simplest_in(&frac(-5, 2), &frac(-9, 4)), frac(-7, 3));
        assert_eq!(simplest_in(&rat(-1), &rat(1)), rat(0));
        assert_eq!(simplest_in(&rat(2), &frac(5, 2)), frac(5, 2));
    }

    #[test]
    fn squarefree_examples() {
        assert!(minpoly_squarefree(&Mat::diag(&[rat(1), rat(2), rat(3)])));
        assert!(!minpoly_squarefree(&Mat::from_i64(2, 2, &[0, 1, 0, 0])));
        assert!(minpoly_squarefree(&Mat::identity(4)));
    }

    #[test]
    fn minpoly_of_diag_with_repeats() {
        let p = minpoly(&Mat::diag(&[rat(2), rat(2), rat(-1)]));
        // (x-2)(x+1) = x² - x - 2
        assert_eq!(p, Poly::new(vec![rat(-2), rat(-1), rat(1)]));
        assert_eq!(p.rational_roots(), vec![rat(-1), rat(2)]);
        assert!(p.splits_squarefree());
    }

    #[test]
    fn rotation_does_not_split() {
        let p = minpoly(&Mat::from_i64(2, 2, &[0, 1, -1, 0]));
        assert!(p.is_squarefree());
        assert!(!p.splits_squarefree());
    }

    #[test]
    fn gcd_and_division() {
        let a = Poly::new(vec![rat(-1), rat(0), rat(1)]);
        let b = Poly::new(vec![rat(1), rat(1)]);
        let (q, r) = a.div_rem(&b);
        assert!(r.is_zero());
        assert_eq!(q, Poly::new(vec![rat(-1), rat(1)]));
        assert_eq!(a.gcd(&b), b);
    }
}
