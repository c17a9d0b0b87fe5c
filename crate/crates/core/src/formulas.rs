//! Closed forms for the order complex of `P(a,b)`.
//!
//! Two binomial conventions are in play and kept apart on purpose:
//! [`binom_conv`] (zero out of range except `C(−1,−1) = 1`) feeds the Betti
//! formula only, while [`binom`] is the plain binomial used by the Euler
//! characteristic formulas.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Plain binomial: `C(n,k)` for `0 ≤ k ≤ n`, zero otherwise.
pub fn binom(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// [`binom`] with the single exception `C(−1,−1) = 1`.
pub fn binom_conv(n: i64, k: i64) -> BigInt {
    if n == -1 && k == -1 {
        BigInt::one()
    } else {
        binom(n, k)
    }
}

fn require(ok: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::Contract(msg()))
    }
}

fn require_ab(a: i64, b: i64) -> Result<()> {
    require(2 <= a && a <= b, || format!("need 2 ≤ a ≤ b, got a = {a}, b = {b}"))
}

/// Rank of `H̃ᵢ(Δ(P(a,b)))`:
///
/// `2 Σ_{t=0}^{i} C(a−3−i, t−1) · [C(i,t) C(b−2−i, i−t) + C(i,t−1) C(b−3−i, i−t)]`,
/// zero for `i > a − 2`.
pub fn betti_formula(a: i64, b: i64, i: i64) -> Result<BigInt> {
    require_ab(a, b)?;
    require(i >= 0, || format!("degree must be non-negative, got {i}"))?;
    if i > a - 2 {
        return Ok(BigInt::zero());
    }
    let c = binom_conv;
    let sum: BigInt = (0..=i)
        .map(|t| c(a - 3 - i, t - 1) * (c(i, t) * c(b - 2 - i, i - t) + c(i, t - 1) * c(b - 3 - i, i - t)))
        .sum();
    Ok(sum * 2)
}

/// All reduced Betti numbers of `Δ(P(a,b))` in degrees `0..=a−2`.
pub fn betti_sequence(a: i64, b: i64) -> Result<Vec<BigInt>> {
    (0..=a - 2).map(|i| betti_formula(a, b, i)).collect()
}

/// Top degree with nonzero non-reduced homology of `Δ(P(a,b))`, −1 for the
/// empty complex.
pub fn t_top(a: i64, b: i64) -> Result<i64> {
    require(0 <= a && a <= b, || format!("need 0 ≤ a ≤ b, got a = {a}, b = {b}"))?;
    Ok(match (a, b) {
        (0..=1, 0..=1) => -1,
        (0..=1, _) | (2, _) | (3, 3) => 0,
        (3, _) => 1,
        _ if b >= 2 * a - 2 => a - 2,
        _ => {
            // ⌈(2a − 2 − b) / 3⌉, numerator positive here
            let k = (2 * a - 2 - b + 2) / 3;
            a - 2 - k
        }
    })
}

/// Reduced Euler characteristic of `Δ(P(a,b))`:
/// `(−1)ᵃ · 2 · Σ_{h=0}^{⌊a/2⌋−1} (−1)ʰ C(a−2,h) C(b−a, a−2−2h)`.
pub fn euler_formula(a: i64, b: i64) -> Result<BigInt> {
    require_ab(a, b)?;
    let sum: BigInt = (0..a / 2)
        .map(|h| {
            let term = binom(a - 2, h) * binom(b - a, a - 2 - 2 * h);
            if h % 2 == 0 {
                term
            } else {
                -term
            }
        })
        .sum();
    let signed = if a % 2 == 0 { sum } else { -sum };
    Ok(signed * 2)
}

/// Coefficients `c(a,b)` of `2u²v² / (2uv − u − v + 1)` for `a, b ≤ max`,
/// indexed `[a][b]`.
///
/// Filled by `c(a,b) = c(a−1,b) + c(a,b−1) − 2c(a−1,b−1) + 2[a=b=2]`, with
/// `c = 0` outside `a, b ≥ 2`.
pub fn euler_gf_table(max: usize) -> Vec<Vec<BigInt>> {
    let mut c = vec![vec![BigInt::zero(); max + 1]; max + 1];
    for a in 2..=max {
        for b in 2..=max {
            let mut v = &c[a - 1][b] + &c[a][b - 1] - &c[a - 1][b - 1] * 2;
            if a == 2 && b == 2 {
                v += 2;
            }
            c[a][b] = v;
        }
    }
    c
}

/// Coefficient of `uᵃvᵇ`; agrees with [`euler_formula`] on `2 ≤ a ≤ b`.
pub fn euler_gf_coeff(a: i64, b: i64) -> Result<BigInt> {
    require_ab(a, b)?;
    let table = euler_gf_table(b as usize);
    Ok(table[a as usize][b as usize].clone())
}

/// `χ̃(Δ(P(a,a)))`: zero for odd `a`, else `(−1)^{(a−2)/2} · 2 · C(a−2, (a−2)/2)`.
pub fn euler_diagonal(a: i64) -> Result<BigInt> {
    require(a >= 2, || format!("need a ≥ 2, got {a}"))?;
    if a % 2 == 1 {
        return Ok(BigInt::zero());
    }
    let h = (a - 2) / 2;
    let v = binom(a - 2, h) * 2;
    Ok(if h % 2 == 0 { v } else { -v })
}
