//! Falling chains of `P(a,b)*` under the labeling induced by the
//! dual-lexicographic atom ordering, via their label-free description:
//! no interior step goes to the least atom, and no interior element other
//! than the last one is a border element.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{guard, Error, Result};
use crate::limits::Limits;
use crate::multidegree::Multidegree;
use crate::par;
use crate::poset::{make_proper_div_poset_with, Label, Poset};

use super::rao::least_atom;

/// A maximal chain of `P(a,b)*`, from `(a,b)` down to `(0,0)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct FallingChain {
    pub elements: Vec<Multidegree>,
}

impl FallingChain {
    pub fn length(&self) -> usize {
        self.elements.len().saturating_sub(1)
    }
}

/// `(1,k)`, `(k,1)`, `(0,k)` or `(k,0)` with `k ≥ 2`.
pub fn is_border(e: &Multidegree) -> Result<bool> {
    match *e.exponents() {
        [c, d] => Ok((c <= 1 && d >= 2) || (d <= 1 && c >= 2)),
        _ => Err(Error::contract(format!("border elements live in two coordinates, got {e}"))),
    }
}

pub fn falling_chains(a: u32, b: u32, length: Option<usize>) -> Result<Vec<FallingChain>> {
    falling_chains_with(a, b, length, &Limits::default())
}

/// All falling chains of `P(a,b)*`, optionally only those of one length.
/// Output is in lexicographic order of element indices of `P(a,b)`, read
/// from the top down.
pub fn falling_chains_with(a: u32, b: u32, length: Option<usize>, limits: &Limits) -> Result<Vec<FallingChain>> {
    if !(2 <= a && a <= b) {
        return Err(Error::contract(format!("need 2 ≤ a ≤ b, got a = {a}, b = {b}")));
    }
    let p = make_proper_div_poset_with(&Multidegree::new(vec![a, b])?, limits)?;
    let top = p.top().expect("bounded");
    let zero = p.bottom().expect("bounded");
    let degree = |x: usize| match p.label(x) {
        Label::Degree(m) => m.clone(),
        _ => unreachable!("P(a,b) carries degree labels"),
    };
    let info: Vec<(bool, Option<usize>)> = (0..p.len())
        .map(|x| {
            let m = degree(x);
            let least = (!m.is_zero()).then(|| {
                let l = least_atom(&m).expect("nonzero");
                p.find_degree(&l).expect("least atom is an element")
            });
            (is_border(&m).expect("two coordinates"), least)
        })
        .collect();
    let walk = Walk {
        p: &p,
        zero,
        info: &info,
        length,
        limit: limits.chains,
    };
    let firsts = p.covers_down(top).to_vec();
    let parts = par::map(&firsts, |&first| walk.from(top, first));
    let mut out = Vec::new();
    for part in parts {
        for chain in part? {
            out.push(FallingChain {
                elements: chain.into_iter().map(degree).collect(),
            });
        }
        guard("falling chains", out.len(), limits.chains)?;
    }
    Ok(out)
}

struct Walk<'a> {
    p: &'a Poset,
    zero: usize,
    /// per element: border flag and the index of its least atom
    info: &'a [(bool, Option<usize>)],
    length: Option<usize>,
    limit: usize,
}

impl Walk<'_> {
    /// May the chain step from `x` to `y` (dual order, so `y < x` in `P`)?
    fn step_ok(&self, x: usize, y: usize) -> bool {
        if y == self.zero {
            return true;
        }
        // interior element: not the least atom below x, and not a border
        // element. The last interior element covers (0,0) and is one of
        // (1,0), (0,1), (1,1), never a border element, so the border test
        // can be applied to every interior position.
        Some(y) != self.info[x].1 && !self.info[y].0
    }

    fn from(&self, top: usize, first: usize) -> Result<Vec<Vec<usize>>> {
        let mut out = Vec::new();
        if !self.step_ok(top, first) {
            return Ok(out);
        }
        let mut path = vec![top, first];
        let mut stack: Vec<(usize, usize)> = vec![(first, 0)];
        while let Some(frame) = stack.last_mut() {
            let x = frame.0;
            if x == self.zero {
                if self.length.is_none_or(|l| l == path.len() - 1) {
                    out.push(path.clone());
                    guard("falling chains", out.len(), self.limit)?;
                }
                stack.pop();
                path.pop();
                continue;
            }
            let downs = self.p.covers_down(x);
            let too_long = self.length.is_some_and(|l| path.len() > l);
            if too_long || frame.1 >= downs.len() {
                stack.pop();
                path.pop();
                continue;
            }
            let y = downs[frame.1];
            frame.1 += 1;
            if self.step_ok(x, y) {
                path.push(y);
                stack.push((y, 0));
            }
        }
        Ok(out)
    }
}

/// Number of chains of each length.
pub fn histogram(chains: &[FallingChain]) -> BTreeMap<usize, usize> {
    let mut h = BTreeMap::new();
    for c in chains {
        *h.entry(c.length()).or_insert(0) += 1;
    }
    h
}

/// Reduced Betti numbers of `Δ(P(a,b))` in degrees `0..=a−2`, counted as
/// falling chains of length `i + 2`.
pub fn betti_via_fch(a: u32, b: u32) -> Result<Vec<usize>> {
    betti_via_fch_with(a, b, &Limits::default())
}

pub fn betti_via_fch_with(a: u32, b: u32, limits: &Limits) -> Result<Vec<usize>> {
    let h = histogram(&falling_chains_with(a, b, None, limits)?);
    Ok((0..=a as usize - 2).map(|i| h.get(&(i + 2)).copied().unwrap_or(0)).collect())
}

/// The tail of a falling chain: the penultimate element is `(1,0)`, `(1,1)`
/// or `(0,1)`; coming into `(1,0)` drops the first coordinate by exactly
/// one and the second by at least two, symmetrically for `(0,1)`.
pub fn increments_check(c: &FallingChain) -> bool {
    let n = c.elements.len();
    if n < 3 {
        return false;
    }
    let pair = |m: &Multidegree| match *m.exponents() {
        [x, y] => Some((x as i64, y as i64)),
        _ => None,
    };
    let (Some(prev), Some(pen), Some(last)) = (pair(&c.elements[n - 3]), pair(&c.elements[n - 2]), pair(&c.elements[n - 1]))
    else {
        return false;
    };
    if last != (0, 0) {
        return false;
    }
    let (u, v) = (prev.0 - pen.0, prev.1 - pen.1);
    match pen {
        (1, 1) => true,
        (1, 0) => u == 1 && v >= 2,
        (0, 1) => u >= 2 && v == 1,
        _ => false,
    }
}
