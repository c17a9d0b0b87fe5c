use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

/// Exponent vector of a monomial `x₁^e₁ ⋯ xₙ^eₙ`, with `n ≥ 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Multidegree(Vec<u32>);

impl Multidegree {
    pub fn new(exponents: Vec<u32>) -> Result<Self> {
        if exponents.is_empty() {
            return Err(Error::contract("a multidegree needs at least one coordinate"));
        }
        Ok(Multidegree(exponents))
    }

    pub fn zero(n: usize) -> Result<Self> {
        Multidegree::new(vec![0; n])
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn max_exponent(&self) -> u32 {
        self.0.iter().copied().max().unwrap_or(0)
    }

    /// Coordinatewise: both zero, or strictly smaller. Vectors of different
    /// arity never divide each other.
    pub fn properly_divides(&self, other: &Multidegree) -> bool {
        self.len() == other.len()
            && self
                .0
                .iter()
                .zip(&other.0)
                .all(|(&u, &v)| (u == 0 && v == 0) || u < v)
    }

    /// The partial order: equal, or properly dividing.
    pub fn leq(&self, other: &Multidegree) -> bool {
        self == other || self.properly_divides(other)
    }

    pub fn lt(&self, other: &Multidegree) -> bool {
        self != other && self.properly_divides(other)
    }

    /// Copy with coordinate `i` removed.
    pub fn without(&self, i: usize) -> Result<Multidegree> {
        if i >= self.len() {
            return Err(Error::contract(format!(
                "coordinate {i} out of range for {self}"
            )));
        }
        let mut e = self.0.clone();
        e.remove(i);
        Multidegree::new(e)
    }
}

impl From<Multidegree> for Vec<u32> {
    fn from(m: Multidegree) -> Self {
        m.0
    }
}

impl fmt::Display for Multidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str(")")
    }
}

/// Accepts `3,4`, `(3,4)` or `3 4`.
impl FromStr for Multidegree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let exps = inner
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<u32>()
                    .map_err(|_| Error::parse(1, format!("bad exponent `{t}` in `{s}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        if exps.is_empty() {
            return Err(Error::parse(1, format!("empty multidegree `{s}`")));
        }
        Multidegree::new(exps)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn md(v: &[u32]) -> Multidegree {
        Multidegree::new(v.to_vec()).unwrap()
    }

    #[test]
    fn proper_division_examples() {
        assert!(md(&[0, 1]).properly_divides(&md(&[0, 2])));
        assert!(md(&[1, 0]).properly_divides(&md(&[2, 3])));
        assert!(!md(&[1, 1]).properly_divides(&md(&[1, 2])));
        assert!(!md(&[0, 1]).properly_divides(&md(&[1, 2, 3])));
        // the zero vector divides itself properly but is not strictly below itself
        assert!(md(&[0, 0]).properly_divides(&md(&[0, 0])));
        assert!(!md(&[0, 0]).lt(&md(&[0, 0])));
    }

    #[test]
    fn empty_rejected() {
        assert!(Multidegree::new(vec![]).is_err());
        assert!("".parse::<Multidegree>().is_err());
    }

    #[test]
    fn parse_and_display() {
        let m: Multidegree = "(4,4)".parse().unwrap();
        assert_eq!(m, md(&[4, 4]));
        assert_eq!("1, 0,5".parse::<Multidegree>().unwrap().to_string(), "(1,0,5)");
        assert!("1,x".parse::<Multidegree>().is_err());
    }

    /// Reflexivity, antisymmetry and transitivity of `leq`, exhaustively for
    /// entries ≤ 5 and n ≤ 3.
    #[test]
    fn order_axioms_exhaustive() {
        for (n, max) in [(1usize, 5u32), (2, 5), (3, 5)] {
            let mut all = vec![vec![]];
            for _ in 0..n {
                all = all
                    .into_iter()
                    .flat_map(|v: Vec<u32>| {
                        (0..=max).map(move |e| {
                            let mut w = v.clone();
                            w.push(e);
                            w
                        })
                    })
                    .collect();
            }
            let all: Vec<Multidegree> = all.into_iter().map(|v| md(&v)).collect();
            for u in &all {
                assert!(u.leq(u));
                for v in &all {
                    if u.leq(v) && v.leq(u) {
                        assert_eq!(u, v);
                    }
                    if !u.leq(v) {
                        continue;
                    }
                    for w in &all {
                        if v.leq(w) {
                            assert!(u.leq(w), "{u} ≤ {v} ≤ {w}");
                        }
                    }
                }
            }
        }
    }
}
