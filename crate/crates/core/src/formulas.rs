//! Closed-form Hamilton-cycle counts, evaluated exactly.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormulaError {
    #[error("bad parameters: {0}")]
    BadParameters(String),
}

/// Memoized Fibonacci numbers with `F_1 = F_2 = 1` (and `F_0 = 0`).
#[derive(Debug, Clone)]
pub struct FibCache {
    values: Vec<BigUint>,
}

impl Default for FibCache {
    fn default() -> Self {
        FibCache {
            values: vec![BigUint::zero(), BigUint::one()],
        }
    }
}

impl FibCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&mut self, n: usize) -> &BigUint {
        while self.values.len() <= n {
            let len = self.values.len();
            let next = &self.values[len - 1] + &self.values[len - 2];
            self.values.push(next);
        }
        &self.values[n]
    }
}

/// Hamilton cycles of the planar generalized Petersen graph `P(m, 2)`, `m` even:
/// `2(F_{m/2+1} + F_{m/2-1} - 1)`, plus `m` when `m ≡ 4 (mod 6)`.
pub fn schwenk_count(m: usize) -> Result<BigUint, FormulaError> {
    if !m.is_multiple_of(2) || m < 10 {
        return Err(FormulaError::BadParameters(format!(
            "P(m,2) formula needs even m >= 10, got {m}"
        )));
    }
    let mut fib = FibCache::new();
    let h = m / 2;
    let base = fib.get(h + 1).clone() + fib.get(h - 1) - 1u32;
    let mut count = base * 2u32;
    if m % 6 == 4 {
        count += m;
    }
    Ok(count)
}

/// Hamilton cycles in the `m`-ring of `k`-ladders:
/// `2^m + m(k-1)^{m-1}` for odd `k`, `2 + mk(k-1)^{m-2}` for even `k`.
pub fn rl_count(m: usize, k: usize) -> Result<BigUint, FormulaError> {
    if m < 2 || k < 2 {
        return Err(FormulaError::BadParameters(format!(
            "ring of ladders needs m >= 2 and k >= 2, got ({m}, {k})"
        )));
    }
    let km1 = BigUint::from(k - 1);
    let m_big = BigUint::from(m);
    Ok(if k % 2 == 1 {
        (BigUint::one() << m) + &m_big * km1.pow((m - 1) as u32)
    } else {
        BigUint::from(2u32) + m_big * k * km1.pow((m - 2) as u32)
    })
}

/// Hamilton cycles of the width-5 nanotube `N(5, k)`:
/// `5·2^k + 20·12^{(k-1)/2}` for odd `k` and `5·2^k` for even `k`.
pub fn n5_count(k: usize) -> Result<BigUint, FormulaError> {
    if k < 1 {
        return Err(FormulaError::BadParameters("N(5,k) needs k >= 1".into()));
    }
    let type2 = BigUint::from(5u32) << k;
    if k.is_multiple_of(2) {
        return Ok(type2);
    }
    let type4 = BigUint::from(20u32) * BigUint::from(12u32).pow(((k - 1) / 2) as u32);
    Ok(type2 + type4)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(x: u64) -> BigUint {
        BigUint::from(x)
    }

    #[test]
    fn fibonacci_indexing() {
        let mut f = FibCache::new();
        assert_eq!(*f.get(1), big(1));
        assert_eq!(*f.get(2), big(1));
        assert_eq!(*f.get(4), big(3));
        assert_eq!(*f.get(6), big(8));
        assert_eq!(*f.get(90), big(2_880_067_194_370_816_120));
    }

    #[test]
    fn schwenk_table_values() {
        let expected = [(10, 30), (12, 34), (14, 56), (16, 108), (18, 150), (32, 4412)];
        for (m, hc) in expected {
            assert_eq!(schwenk_count(m).unwrap(), big(hc), "m = {m}");
        }
        assert!(schwenk_count(9).is_err());
        assert!(schwenk_count(8).is_err());
    }

    #[test]
    fn rl_values() {
        assert_eq!(rl_count(5, 4).unwrap(), big(542));
        assert_eq!(rl_count(2, 2).unwrap(), big(6));
        assert_eq!(rl_count(3, 3).unwrap(), big(20));
        assert!(rl_count(1, 4).is_err());
    }

    #[test]
    fn n5_values() {
        assert_eq!(n5_count(1).unwrap(), big(30));
        assert_eq!(n5_count(2).unwrap(), big(20));
        assert_eq!(n5_count(3).unwrap(), big(280));
        assert_eq!(n5_count(4).unwrap(), big(80));
        assert_eq!(n5_count(5).unwrap(), big(3040));
        assert!(n5_count(0).is_err());
    }
}
