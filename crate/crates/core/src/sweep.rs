//! Consistency sweeps over `2 ≤ a ≤ b`: closed forms against the homology
//! oracle, falling-chain counts and Möbius numbers.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::complex::order_complex_with;
use crate::error::Result;
use crate::formulas::{betti_formula, euler_formula, euler_gf_table, t_top};
use crate::homology::homology_with;
use crate::limits::Limits;
use crate::multidegree::Multidegree;
use crate::par;
use crate::poset::{make_proper_div_poset_with, mobius};
use crate::shellability::betti_via_fch_with;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Check {
    /// Betti formula equals oracle reduced Betti numbers.
    FormulaVsOracle,
    /// The oracle reports no torsion.
    TorsionFree,
    /// Betti formula equals falling-chain counts.
    FormulaVsFallingChains,
    /// Euler formula, generating function, alternating Betti sum, Möbius
    /// number and f-vector agree.
    EulerChain,
    /// Nonzero non-reduced homology exactly in degrees `0..=t_top`.
    Persistence,
}

impl Check {
    pub const ALL: [Check; 5] = [
        Check::FormulaVsOracle,
        Check::TorsionFree,
        Check::FormulaVsFallingChains,
        Check::EulerChain,
        Check::Persistence,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::FormulaVsOracle => "betti formula = homology",
            Check::TorsionFree => "torsion-free",
            Check::FormulaVsFallingChains => "betti formula = falling chains",
            Check::EulerChain => "euler chain",
            Check::Persistence => "persistence",
        }
    }
}

/// First disagreement found for one check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub a: u32,
    pub b: u32,
    /// Homology degree, when the check is per degree.
    pub degree: Option<usize>,
    pub detail: String,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.degree {
            Some(i) => write!(f, "(a, b, i) = ({}, {}, {}): {}", self.a, self.b, i, self.detail),
            None => write!(f, "(a, b) = ({}, {}): {}", self.a, self.b, self.detail),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub check: Check,
    pub cases: usize,
    pub first_failure: Option<Mismatch>,
}

/// Per-pair results, one flag per entry of [`Check::ALL`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairOutcome {
    pub a: u32,
    pub b: u32,
    pub passed: Vec<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepReport {
    pub outcomes: Vec<CheckOutcome>,
    /// In increasing `(a, b)` order.
    pub pairs: Vec<PairOutcome>,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.outcomes.iter().all(|o| o.first_failure.is_none())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepOptions {
    pub a_max: u32,
    pub b_max: u32,
    /// Add one to every degree-zero value of the Betti formula. Used to
    /// check that the sweep notices a wrong formula.
    pub mutate: bool,
    pub limits: Limits,
}

impl SweepOptions {
    pub fn new(a_max: u32, b_max: u32) -> Self {
        SweepOptions {
            a_max,
            b_max,
            mutate: false,
            limits: Limits::default(),
        }
    }
}

fn formula(opts: &SweepOptions, a: u32, b: u32, i: usize) -> BigInt {
    let v = betti_formula(a.into(), b.into(), i as i64).expect("2 ≤ a ≤ b");
    if opts.mutate && i == 0 {
        v + 1
    } else {
        v
    }
}

/// Runs every check on each pair `2 ≤ a ≤ b` with `a ≤ a_max`, `b ≤ b_max`,
/// pairs in parallel. The first failure reported per check is the one with
/// the smallest `(a, b)`.
pub fn run_sweep(opts: &SweepOptions) -> Result<SweepReport> {
    let pairs: Vec<(u32, u32)> = (2..=opts.a_max)
        .flat_map(|a| (a.max(2)..=opts.b_max).map(move |b| (a, b)))
        .collect();
    let gf = euler_gf_table(opts.b_max.max(2) as usize);
    let results = par::map(&pairs, |&(a, b)| check_pair(opts, &gf, a, b));
    let mut outcomes: Vec<CheckOutcome> = Check::ALL
        .iter()
        .map(|&check| CheckOutcome {
            check,
            cases: 0,
            first_failure: None,
        })
        .collect();
    let mut pair_outcomes = Vec::with_capacity(pairs.len());
    for (&(a, b), r) in pairs.iter().zip(results) {
        let r = r?;
        pair_outcomes.push(PairOutcome {
            a,
            b,
            passed: r.iter().map(Option::is_none).collect(),
        });
        for (k, failure) in r.into_iter().enumerate() {
            let o = &mut outcomes[k];
            o.cases += 1;
            if o.first_failure.is_none() {
                o.first_failure = failure;
            }
        }
    }
    Ok(SweepReport {
        outcomes,
        pairs: pair_outcomes,
    })
}

fn check_pair(opts: &SweepOptions, gf: &[Vec<BigInt>], a: u32, b: u32) -> Result<Vec<Option<Mismatch>>> {
    let miss = |degree: Option<usize>, detail: String| Some(Mismatch { a, b, degree, detail });
    let p = make_proper_div_poset_with(&Multidegree::new(vec![a, b])?, &opts.limits)?;
    let k = order_complex_with(&p, &opts.limits)?;
    let h = homology_with(&k, true, &opts.limits)?;
    let top = (a as usize - 2).max(h.betti.len().saturating_sub(1));
    let formula_seq: Vec<BigInt> = (0..=top).map(|i| formula(opts, a, b, i)).collect();

    let vs_oracle = (0..=top).find_map(|i| {
        let got = BigInt::from(h.betti(i));
        (got != formula_seq[i]).then(|| miss(Some(i), format!("formula {} vs homology {}", formula_seq[i], got)))?
    });

    let torsion = h
        .torsion
        .iter()
        .position(|t| !t.is_empty())
        .and_then(|i| miss(Some(i), format!("torsion factors {:?}", h.torsion[i])));

    let fch = betti_via_fch_with(a, b, &opts.limits)?;
    let vs_fch = (0..=top).find_map(|i| {
        let got = BigInt::from(fch.get(i).copied().unwrap_or(0));
        (got != formula_seq[i]).then(|| miss(Some(i), format!("formula {} vs falling chains {}", formula_seq[i], got)))?
    });

    let euler = euler_formula(a.into(), b.into())?;
    let alt: BigInt = formula_seq
        .iter()
        .enumerate()
        .map(|(i, x)| if i % 2 == 0 { x.clone() } else { -x.clone() })
        .sum();
    let values = [
        ("generating function", gf[a as usize][b as usize].clone()),
        ("alternating betti sum", alt),
        ("Möbius number", BigInt::from(mobius(&p)?)),
        ("f-vector", BigInt::from(k.reduced_euler_char_with(&opts.limits)?)),
    ];
    let chain = values
        .iter()
        .find(|(_, v)| *v != euler)
        .and_then(|(what, v)| miss(None, format!("euler formula {euler} vs {what} {v}")));

    let t = t_top(a.into(), b.into())?;
    let persistence = (0..=top + 1).find_map(|i| {
        let nonreduced = formula_seq.get(i).cloned().unwrap_or_else(BigInt::zero) + if i == 0 { BigInt::one() } else { BigInt::zero() };
        let oracle = h.betti(i) + usize::from(i == 0);
        let expect = (i as i64) <= t;
        if (!nonreduced.is_zero()) != expect || (oracle != 0) != expect {
            miss(Some(i), format!("t_top = {t}, formula rank {nonreduced}, homology rank {oracle}"))
        } else {
            None
        }
    });

    Ok(vec![vs_oracle, torsion, vs_fch, chain, persistence])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sweep_passes() {
        let report = run_sweep(&SweepOptions::new(5, 6)).unwrap();
        assert!(report.passed(), "{report:?}");
        assert_eq!(report.outcomes.len(), Check::ALL.len());
        // pairs 2 ≤ a ≤ 5, a ≤ b ≤ 6
        assert_eq!(report.outcomes[0].cases, 5 + 4 + 3 + 2);
    }

    #[test]
    fn mutation_is_caught() {
        let mut opts = SweepOptions::new(3, 3);
        opts.mutate = true;
        let report = run_sweep(&opts).unwrap();
        assert!(!report.passed());
        let first = report.outcomes[0].first_failure.clone().unwrap();
        assert_eq!((first.a, first.b, first.degree), (2, 2, Some(0)));
        assert_eq!(report.pairs.len(), 3);
        assert!(report.pairs.iter().all(|p| !p.passed[0]));
    }

    #[test]
    fn smallest_region() {
        assert!(run_sweep(&SweepOptions::new(2, 2)).unwrap().passed());
        assert_eq!(run_sweep(&SweepOptions::new(1, 1)).unwrap().outcomes[0].cases, 0);
    }
}
