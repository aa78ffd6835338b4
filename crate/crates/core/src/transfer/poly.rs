//! Exact polynomial helpers. Coefficient vectors are in ascending order of
//! powers unless a function says otherwise.

use num_bigint::{BigInt, BigUint};
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type RatPoly = Vec<BigRational>;

/// `det(xI - M)` by Berkowitz's division-free algorithm, ascending.
pub fn char_poly(m: &[Vec<BigInt>]) -> Vec<BigInt> {
    let n = m.len();
    if n == 0 {
        return vec![BigInt::one()];
    }
    // Descending coefficient vector of the trailing 1x1 minor, grown one
    // row/column at a time from the bottom-right corner.
    let last = n - 1;
    let mut poly = vec![BigInt::one(), -m[last][last].clone()];
    for r in (0..last).rev() {
        let size = n - r - 1;
        let a = &m[r][r];
        let row: Vec<&BigInt> = (r + 1..n).map(|j| &m[r][j]).collect();
        let mut col: Vec<BigInt> = (r + 1..n).map(|i| m[i][r].clone()).collect();
        let mut q = Vec::with_capacity(size + 2);
        q.push(BigInt::one());
        q.push(-a.clone());
        for _ in 0..size {
            let rc: BigInt = row.iter().zip(&col).map(|(x, y)| *x * y).sum();
            q.push(-rc);
            col = (r + 1..n)
                .map(|i| (r + 1..n).zip(&col).map(|(j, y)| &m[i][j] * y).sum())
                .collect();
        }
        let next: Vec<BigInt> = (0..=size + 1)
            .map(|i| (0..=i.min(size)).map(|j| &q[i - j] * &poly[j]).sum())
            .collect();
        poly = next;
    }
    poly.reverse();
    poly
}

/// Evaluates an ascending integer polynomial at an integer.
pub fn eval_int(p: &[BigInt], x: &BigInt) -> BigInt {
    p.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
}

pub fn eval_rat(p: &[BigRational], x: &BigRational) -> BigRational {
    p.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + c)
}

fn trim(p: &mut RatPoly) {
    while p.len() > 1 && p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

pub fn to_rat(p: &[BigInt]) -> RatPoly {
    p.iter().map(|c| BigRational::from_integer(c.clone())).collect()
}

/// Clears denominators and divides out the content; leading coefficient positive.
pub fn primitive(p: &[BigRational]) -> Vec<BigInt> {
    let lcm = p.iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
    let ints: Vec<BigInt> = p.iter().map(|c| (c * &lcm).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
    let mut out: Vec<BigInt> = if g.is_zero() { ints } else { ints.iter().map(|c| c / &g).collect() };
    while out.len() > 1 && out.last().is_some_and(Zero::is_zero) {
        out.pop();
    }
    if out.last().is_some_and(Signed::is_negative) {
        out.iter_mut().for_each(|c| *c = -c.clone());
    }
    out
}

/// Quotient and remainder of `a / b` over the rationals.
pub fn div_rem(a: &[BigRational], b: &[BigRational]) -> (RatPoly, RatPoly) {
    let mut b = b.to_vec();
    trim(&mut b);
    assert!(!b.last().expect("nonempty").is_zero(), "division by zero polynomial");
    let mut rem = a.to_vec();
    trim(&mut rem);
    let db = b.len() - 1;
    if rem.len() <= db {
        return (vec![BigRational::zero()], rem);
    }
    let lead = b[db].clone();
    let mut quot = vec![BigRational::zero(); rem.len() - db];
    for i in (0..quot.len()).rev() {
        let f = &rem[i + db] / &lead;
        if !f.is_zero() {
            for (j, bj) in b.iter().enumerate() {
                rem[i + j] = &rem[i + j] - &f * bj;
            }
        }
        quot[i] = f;
    }
    rem.truncate(db.max(1));
    trim(&mut rem);
    (quot, rem)
}

pub fn is_zero_poly(p: &[BigRational]) -> bool {
    p.iter().all(Zero::is_zero)
}

fn derivative(p: &[BigRational]) -> RatPoly {
    if p.len() <= 1 {
        return vec![BigRational::zero()];
    }
    p.iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
        .collect()
}

fn gcd(a: &[BigRational], b: &[BigRational]) -> RatPoly {
    let (mut x, mut y) = (a.to_vec(), b.to_vec());
    trim(&mut x);
    trim(&mut y);
    while !is_zero_poly(&y) {
        let (_, r) = div_rem(&x, &y);
        x = y;
        y = r;
    }
    x
}

/// `p / gcd(p, p')`: same roots, all simple.
pub fn squarefree(p: &[BigRational]) -> RatPoly {
    let g = gcd(p, &derivative(p));
    if g.len() <= 1 {
        let mut out = p.to_vec();
        trim(&mut out);
        return out;
    }
    div_rem(p, &g).0
}

/// Minimal recurrence of `seq` by Berlekamp–Massey, returned as the
/// ascending characteristic polynomial `x^L + c_1 x^{L-1} + … + c_L`.
pub fn berlekamp_massey(seq: &[BigUint]) -> RatPoly {
    let s: Vec<BigRational> = seq
        .iter()
        .map(|x| BigRational::from_integer(BigInt::from(x.clone())))
        .collect();
    let mut c = vec![BigRational::one()];
    let mut b = vec![BigRational::one()];
    let mut l = 0usize;
    let mut m = 1usize;
    let mut last = BigRational::one();
    for n in 0..s.len() {
        let mut d = s[n].clone();
        for i in 1..=l.min(c.len() - 1) {
            d += &c[i] * &s[n - i];
        }
        if d.is_zero() {
            m += 1;
            continue;
        }
        let coef = &d / &last;
        let t = c.clone();
        if c.len() < b.len() + m {
            c.resize(b.len() + m, BigRational::zero());
        }
        for (i, bi) in b.iter().enumerate() {
            c[i + m] = &c[i + m] - &coef * bi;
        }
        if 2 * l <= n {
            l = n + 1 - l;
            b = t;
            last = d;
            m = 1;
        } else {
            m += 1;
        }
    }
    c.resize(l + 1, BigRational::zero());
    c.reverse();
    c
}

/// Number of sign changes of the Sturm chain at `x`, zeros skipped.
fn sign_changes(chain: &[RatPoly], x: &BigRational) -> usize {
    let mut prev = 0i8;
    let mut changes = 0;
    for p in chain {
        let v = eval_rat(p, x);
        let s = if v.is_positive() {
            1
        } else if v.is_negative() {
            -1
        } else {
            0
        };
        if s != 0 {
            if prev != 0 && s != prev {
                changes += 1;
            }
            prev = s;
        }
    }
    changes
}

fn sturm_chain(p: &[BigRational]) -> Vec<RatPoly> {
    let mut chain = vec![p.to_vec(), derivative(p)];
    loop {
        let n = chain.len();
        if is_zero_poly(&chain[n - 1]) || chain[n - 1].len() == 1 {
            break;
        }
        let (_, r) = div_rem(&chain[n - 2], &chain[n - 1]);
        if is_zero_poly(&r) {
            break;
        }
        chain.push(r.into_iter().map(|c| -c).collect());
    }
    chain
}

/// Largest real root of `p` to within `tol`, by Sturm isolation and
/// bisection on exact rationals. `None` if `p` has no real root.
pub fn largest_real_root(p: &[BigRational], tol: f64) -> Option<f64> {
    let p = squarefree(p);
    if p.len() <= 1 {
        return None;
    }
    let lead = p.last().expect("nonempty").abs();
    let bound = BigRational::one() + p.iter().map(|c| c.abs() / &lead).fold(BigRational::zero(), |a, b| a.max(b));
    let chain = sturm_chain(&p);
    let upper = sign_changes(&chain, &bound);
    let mut lo = -bound.clone();
    let mut hi = bound;
    if sign_changes(&chain, &lo) == upper {
        return None;
    }
    let tol = BigRational::from_float(tol).expect("finite tolerance");
    let two = BigRational::from_integer(BigInt::from(2));
    while &hi - &lo > tol {
        let mid = (&lo + &hi) / &two;
        if sign_changes(&chain, &mid) > upper {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    ((lo + hi) / two).to_f64()
}

/// All complex roots by Durand–Kerner on `f64` coefficients.
pub fn complex_roots(p: &[BigRational]) -> Vec<Complex64> {
    let mut coeffs: Vec<f64> = p.iter().map(|c| c.to_f64().unwrap_or(f64::NAN)).collect();
    while coeffs.len() > 1 && coeffs.last() == Some(&0.0) {
        coeffs.pop();
    }
    let mut zero_roots = 0;
    while coeffs.len() > 1 && coeffs[0] == 0.0 {
        coeffs.remove(0);
        zero_roots += 1;
    }
    let deg = coeffs.len() - 1;
    let lead = coeffs[deg];
    let monic: Vec<f64> = coeffs.iter().map(|c| c / lead).collect();
    let eval = |z: Complex64| monic.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c);
    let radius = 1.0 + monic[..deg].iter().fold(0.0f64, |a, c| a.max(c.abs()));
    let seed = Complex64::new(0.4, 0.9);
    let mut roots: Vec<Complex64> = (0..deg).map(|i| seed.powu(i as u32) * radius.min(1.0)).collect();
    for _ in 0..2000 {
        let mut delta = 0.0f64;
        for i in 0..deg {
            let mut denom = Complex64::new(1.0, 0.0);
            for j in 0..deg {
                if i != j {
                    denom *= roots[i] - roots[j];
                }
            }
            let step = eval(roots[i]) / denom;
            roots[i] -= step;
            delta = delta.max(step.norm());
        }
        if delta < 1e-14 * radius {
            break;
        }
    }
    roots.extend(std::iter::repeat_n(Complex64::new(0.0, 0.0), zero_roots));
    roots
}
