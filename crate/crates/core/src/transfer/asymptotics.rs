use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use super::poly::{self, to_rat};
use super::{build_transfer_system, TransferError, TransferSystem};

/// Growth of `typed_count(w, c, k)`.
///
/// When the counts vanish outside one residue class mod `period`, the
/// subsequence `a_{residue + period·j}` is analysed instead, and
/// `dominant_root` is its per-`period` growth factor.
#[derive(Debug, Clone, PartialEq)]
pub struct GrowthConstants {
    /// `det(xI - M)` of the reduced system, leading coefficient first.
    pub char_poly: Vec<BigInt>,
    /// Minimal recurrence of the analysed subsequence, leading coefficient first.
    pub recurrence: Vec<BigInt>,
    pub period: usize,
    pub residue: usize,
    pub dominant_root: f64,
    /// `a_k / dominant_root^{(k - residue) / period}` at `k = prefactor_k`.
    pub prefactor: f64,
    pub prefactor_k: usize,
    /// Relative change of the prefactor estimate over the last period.
    pub prefactor_drift: f64,
}

impl GrowthConstants {
    /// `A·B^j` with `k = residue + period·j`; `None` off the residue class.
    pub fn estimate(&self, k: usize) -> Option<f64> {
        if k < self.residue || !(k - self.residue).is_multiple_of(self.period) {
            return None;
        }
        let j = ((k - self.residue) / self.period) as f64;
        Some(self.prefactor * self.dominant_root.powf(j))
    }
}

/// Root tolerance for the dominant root.
const ROOT_TOL: f64 = 1e-13;
/// Extra terms beyond what the recurrence degree needs; the prefactor
/// converges geometrically in the ratio of the top two roots.
const MIN_TERMS: usize = 80;

fn ln_big(x: &BigUint) -> f64 {
    let bits = x.bits();
    let shift = bits.saturating_sub(64);
    (x >> shift).to_f64().expect("fits in f64").ln() + shift as f64 * std::f64::consts::LN_2
}

fn descending(mut p: Vec<BigInt>) -> Vec<BigInt> {
    p.reverse();
    p
}

pub fn growth_constants(w: usize, c: usize) -> Result<GrowthConstants, TransferError> {
    growth_constants_of(&build_transfer_system(w, c, true)?)
}

pub fn growth_constants_of(sys: &TransferSystem) -> Result<GrowthConstants, TransferError> {
    let ell = sys.dim();
    let int_matrix: Vec<Vec<BigInt>> = sys
        .matrix
        .iter()
        .map(|r| r.iter().map(|x| BigInt::from(x.clone())).collect())
        .collect();
    let char_poly = poly::char_poly(&int_matrix);

    // Any residue subsequence satisfies a recurrence of degree <= ell, so
    // 2·ell + 2 terms past the transient pin it down.
    let probe = sys.counts_up_to(2 * ell + 2);
    let nonzero: Vec<usize> = (0..probe.len()).filter(|&k| !probe[k].is_zero()).collect();
    let (first, rest) = match nonzero.split_first() {
        Some((&f, r)) if !r.is_empty() => (f, r),
        _ => return Err(TransferError::VanishingCounts { w: sys.width, c: sys.pairs }),
    };
    let period = rest.iter().fold(0usize, |g, &k| g.gcd(&(k - first)));
    let residue = first % period;

    let terms = (2 * ell + 4).max(MIN_TERMS);
    let all = sys.counts_up_to(residue + period * terms);
    let sub: Vec<BigUint> = (0..=terms).map(|j| all[residue + period * j].clone()).collect();
    let rec = poly::berlekamp_massey(&sub);

    let root = poly::largest_real_root(&rec, ROOT_TOL).ok_or(TransferError::NoRealDominantRoot {
        modulus: max_modulus(&rec),
    })?;
    let modulus = max_modulus(&rec);
    if root <= 0.0 || modulus > root * (1.0 + 1e-9) {
        return Err(TransferError::NoRealDominantRoot { modulus });
    }

    let estimate = |j: usize| (ln_big(&sub[j]) - j as f64 * root.ln()).exp();
    let j = terms;
    let prefactor = estimate(j);
    let drift = ((prefactor - estimate(j - 1)) / prefactor).abs();
    Ok(GrowthConstants {
        char_poly: descending(char_poly),
        recurrence: descending(poly::primitive(&rec)),
        period,
        residue,
        dominant_root: root,
        prefactor,
        prefactor_k: residue + period * j,
        prefactor_drift: drift,
    })
}

fn max_modulus(p: &[num_rational::BigRational]) -> f64 {
    poly::complex_roots(p).iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// Whether the count recurrence divides the characteristic polynomial, as
/// it must when the period is 1. Always false for longer periods.
pub fn recurrence_divides_char_poly(g: &GrowthConstants) -> bool {
    if g.period != 1 {
        return false;
    }
    let asc = |p: &[BigInt]| to_rat(&p.iter().rev().cloned().collect::<Vec<_>>());
    let (_, r) = poly::div_rem(&asc(&g.char_poly), &asc(&g.recurrence));
    poly::is_zero_poly(&r)
}
