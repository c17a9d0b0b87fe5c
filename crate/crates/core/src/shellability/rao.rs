//! Recursive atom orderings.
//!
//! Intervals are never materialised: the interval `[x, 1̂]` of a bounded
//! poset is addressed by `x`, its atoms are the upper covers of `x`, and its
//! length is the depth of `x`.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::sync::Arc;

use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;

use crate::error::{guard, Error, Result};
use crate::limits::Limits;
use crate::multidegree::Multidegree;
use crate::poset::{dual, make_proper_div_poset_with, Poset};

/// A recursive atom ordering of `[element, 1̂]`.
///
/// `children[k]` orders the interval above `ordering[k]`, and is `None`
/// exactly when that interval has length at most one. Children are shared
/// between parents where possible.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RaoCertificate {
    pub element: usize,
    pub ordering: Vec<usize>,
    pub children: Vec<Option<Arc<RaoCertificate>>>,
}

impl RaoCertificate {
    /// Number of distinct nodes.
    pub fn node_count(&self) -> usize {
        fn walk(c: &RaoCertificate, seen: &mut HashSet<*const RaoCertificate>) -> usize {
            if !seen.insert(c as *const _) {
                return 0;
            }
            1 + c.children.iter().flatten().map(|ch| walk(ch, seen)).sum::<usize>()
        }
        walk(self, &mut HashSet::new())
    }

    /// Nested JSON view with element labels taken from `poset`.
    pub fn json<'a>(&'a self, poset: &'a Poset) -> RaoJson<'a> {
        RaoJson { poset, cert: self }
    }
}

/// Serializes a certificate as
/// `{"element": .., "ordering": [..], "children": [{..} | null, ..]}`.
pub struct RaoJson<'a> {
    poset: &'a Poset,
    cert: &'a RaoCertificate,
}

impl Serialize for RaoJson<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let label = |i: usize| self.poset.label(i).to_string();
        let children: Vec<Option<RaoJson<'_>>> = self
            .cert
            .children
            .iter()
            .map(|c| c.as_deref().map(|cert| RaoJson { poset: self.poset, cert }))
            .collect();
        let mut st = s.serialize_struct("RaoCertificate", 3)?;
        st.serialize_field("element", &label(self.cert.element))?;
        st.serialize_field("ordering", &self.cert.ordering.iter().map(|&i| label(i)).collect::<Vec<_>>())?;
        st.serialize_field("children", &children)?;
        st.end()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RaoCondition {
    /// Atoms above earlier atoms do not come first in a child ordering.
    AtomsFirst,
    /// Some common upper bound of two atoms has no suitable atom below it.
    Crossing,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RaoViolation {
    pub condition: RaoCondition,
    /// Bottom of the interval where the check failed.
    pub interval: usize,
    /// The later atom `p′`.
    pub atom: usize,
    /// For [`RaoCondition::Crossing`]: an earlier atom `p` and the bound `q`.
    pub earlier: Option<usize>,
    pub bound: Option<usize>,
}

impl fmt::Display for RaoViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.condition {
            RaoCondition::AtomsFirst => write!(
                f,
                "condition (i) fails in the interval above element {}: the ordering above atom {} does not start with the atoms above earlier atoms",
                self.interval, self.atom
            ),
            RaoCondition::Crossing => write!(
                f,
                "condition (ii) fails in the interval above element {}: atoms {} before {} lie below {}, with no atom of [{}, 1̂] between an earlier atom and it",
                self.interval,
                self.earlier.unwrap_or(usize::MAX),
                self.atom,
                self.bound.unwrap_or(usize::MAX),
                self.atom
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RaoVerdict {
    Valid,
    Violated(RaoViolation),
}

impl RaoVerdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, RaoVerdict::Valid)
    }
}

/// `(earlier, bound)` witnessing a failure of condition (ii) for atom `next`
/// after the atoms in `before`, or `None`.
fn crossing(p: &Poset, before: &[usize], next: usize) -> Option<(usize, usize)> {
    let ups = p.covers_up(next);
    for q in p.above_set(next).ones() {
        let Some(&earlier) = before.iter().find(|&&s| p.less(s, q)) else {
            continue;
        };
        let ok = ups
            .iter()
            .any(|&q1| p.leq(q1, q) && before.iter().any(|&s| p.less(s, q1)));
        if !ok {
            return Some((earlier, q));
        }
    }
    None
}

/// Atoms of `[next, 1̂]` lying above one of `before`.
fn forced_first(p: &Poset, before: &[usize], next: usize) -> Vec<usize> {
    p.covers_up(next)
        .iter()
        .copied()
        .filter(|&y| before.iter().any(|&s| p.less(s, y)))
        .collect()
}

/// Checks both conditions in every interval reached by the certificate.
///
/// A certificate that does not fit the poset (orderings that are not
/// permutations of the atoms, missing or surplus children) is an error
/// rather than a violation.
pub fn verify_rao(p: &Poset, cert: &RaoCertificate) -> Result<RaoVerdict> {
    let (bottom, _) = p.bounds("recursive atom ordering")?;
    if cert.element != bottom {
        return Err(Error::contract("certificate root is not the bottom element"));
    }
    let depth = p.depths();
    let mut done = HashSet::new();
    Ok(match verify_node(p, &depth, cert, &mut done)? {
        None => RaoVerdict::Valid,
        Some(v) => RaoVerdict::Violated(v),
    })
}

fn verify_node(
    p: &Poset,
    depth: &[usize],
    cert: &RaoCertificate,
    done: &mut HashSet<*const RaoCertificate>,
) -> Result<Option<RaoViolation>> {
    if !done.insert(cert as *const _) {
        return Ok(None);
    }
    let x = cert.element;
    if x >= p.len() {
        return Err(Error::contract(format!("certificate element {x} out of range")));
    }
    let mut sorted = cert.ordering.clone();
    sorted.sort_unstable();
    if sorted != p.covers_up(x) {
        return Err(Error::contract(format!(
            "ordering at {} is not a permutation of its atoms",
            p.label(x)
        )));
    }
    if cert.children.len() != cert.ordering.len() {
        return Err(Error::contract(format!("child count mismatch at {}", p.label(x))));
    }
    for (&a, child) in cert.ordering.iter().zip(&cert.children) {
        match child {
            Some(c) if c.element != a => {
                return Err(Error::contract(format!("child for {} is rooted elsewhere", p.label(a))))
            }
            Some(_) if depth[a] <= 1 => {
                return Err(Error::contract(format!("surplus child for {}", p.label(a))))
            }
            None if depth[a] > 1 => return Err(Error::contract(format!("missing child for {}", p.label(a)))),
            _ => {}
        }
    }
    if depth[x] <= 1 {
        return Ok(None);
    }
    for (k, (&next, child)) in cert.ordering.iter().zip(&cert.children).enumerate() {
        let before = &cert.ordering[..k];
        if let Some((earlier, bound)) = crossing(p, before, next) {
            return Ok(Some(RaoViolation {
                condition: RaoCondition::Crossing,
                interval: x,
                atom: next,
                earlier: Some(earlier),
                bound: Some(bound),
            }));
        }
        if let Some(c) = child {
            let mut first = forced_first(p, before, next);
            let mut head = c.ordering[..first.len()].to_vec();
            first.sort_unstable();
            head.sort_unstable();
            if first != head {
                return Ok(Some(RaoViolation {
                    condition: RaoCondition::AtomsFirst,
                    interval: x,
                    atom: next,
                    earlier: None,
                    bound: None,
                }));
            }
            if let Some(v) = verify_node(p, depth, c, done)? {
                return Ok(Some(v));
            }
        }
    }
    Ok(None)
}

pub fn search_rao(p: &Poset) -> Result<Option<RaoCertificate>> {
    search_rao_with(p, &Limits::default())
}

/// Exhaustive search for a recursive atom ordering.
///
/// Returns the first certificate in lexicographic order of atom indices at
/// every interval, or `None` once the whole space has been ruled out.
/// Whether an ordering can be completed depends only on the set of atoms
/// placed so far, so failed prefixes are remembered as sets; child searches
/// are remembered by interval and by the set of atoms they must put first.
pub fn search_rao_with(p: &Poset, limits: &Limits) -> Result<Option<RaoCertificate>> {
    let (bottom, _) = p.bounds("recursive atom ordering")?;
    guard("recursive atom ordering elements", p.len(), limits.rao_elements)?;
    let widest = (0..p.len()).map(|x| p.covers_up(x).len()).max().unwrap_or(0);
    guard("atoms per interval", widest, 64)?;
    let mut s = Search {
        p,
        depth: p.depths(),
        memo: HashMap::new(),
    };
    if s.depth[bottom] <= 1 {
        let ordering = p.covers_up(bottom).to_vec();
        let children = vec![None; ordering.len()];
        return Ok(Some(RaoCertificate {
            element: bottom,
            ordering,
            children,
        }));
    }
    Ok(s.solve(bottom, 0).map(Arc::unwrap_or_clone))
}

struct Search<'a> {
    p: &'a Poset,
    depth: Vec<usize>,
    memo: HashMap<(usize, u64), Option<Arc<RaoCertificate>>>,
}

impl Search<'_> {
    /// Ordering of `[x, 1̂]` whose first atoms are those in `first` (a mask
    /// over the upper covers of `x`).
    fn solve(&mut self, x: usize, first: u64) -> Option<Arc<RaoCertificate>> {
        if let Some(hit) = self.memo.get(&(x, first)) {
            return hit.clone();
        }
        let atoms = self.p.covers_up(x).to_vec();
        let mut order = Vec::with_capacity(atoms.len());
        let mut children = Vec::with_capacity(atoms.len());
        let mut dead = HashSet::new();
        let found = self.extend(&atoms, first, 0, &mut order, &mut children, &mut dead);
        let result = found.then(|| {
            Arc::new(RaoCertificate {
                element: x,
                ordering: order.iter().map(|&k| atoms[k]).collect(),
                children,
            })
        });
        self.memo.insert((x, first), result.clone());
        result
    }

    fn extend(
        &mut self,
        atoms: &[usize],
        first: u64,
        placed: u64,
        order: &mut Vec<usize>,
        children: &mut Vec<Option<Arc<RaoCertificate>>>,
        dead: &mut HashSet<u64>,
    ) -> bool {
        if order.len() == atoms.len() {
            return true;
        }
        if dead.contains(&placed) {
            return false;
        }
        let must = first & !placed;
        let before: Vec<usize> = order.iter().map(|&k| atoms[k]).collect();
        for k in 0..atoms.len() {
            let bit = 1u64 << k;
            if placed & bit != 0 || (must != 0 && must & bit == 0) {
                continue;
            }
            let next = atoms[k];
            if crossing(self.p, &before, next).is_some() {
                continue;
            }
            let child = if self.depth[next] > 1 {
                let ups = self.p.covers_up(next);
                let forced = forced_first(self.p, &before, next);
                let mask = ups
                    .iter()
                    .enumerate()
                    .filter(|(_, y)| forced.contains(y))
                    .fold(0u64, |m, (j, _)| m | (1 << j));
                match self.solve(next, mask) {
                    Some(c) => Some(c),
                    None => continue,
                }
            } else {
                None
            };
            order.push(k);
            children.push(child);
            if self.extend(atoms, first, placed | bit, order, children, dead) {
                return true;
            }
            order.pop();
            children.pop();
        }
        dead.insert(placed);
        false
    }
}

/// `b̄`: every nonzero coordinate decremented.
pub fn least_atom(b: &Multidegree) -> Result<Multidegree> {
    if b.is_zero() {
        return Err(Error::contract("the zero multidegree has no atoms below it"));
    }
    Multidegree::new(b.exponents().iter().map(|&e| e.saturating_sub(1)).collect())
}

/// Dual lexicographic comparison: at the first differing coordinate the
/// larger entry comes first.
pub fn dual_lex_cmp(c: &Multidegree, d: &Multidegree) -> std::cmp::Ordering {
    d.exponents().cmp(c.exponents())
}

/// The dual-lexicographic certificate on `P(a)*`, returned with that poset.
///
/// Coordinates with `aᵢ ≤ 1` vanish on every element except the bottom, so
/// atoms are compared on the remaining coordinates only.
pub fn dual_lex_certificate(a: &Multidegree) -> Result<(Poset, RaoCertificate)> {
    dual_lex_certificate_with(a, &Limits::default())
}

pub fn dual_lex_certificate_with(a: &Multidegree, limits: &Limits) -> Result<(Poset, RaoCertificate)> {
    let star = dual(&make_proper_div_poset_with(a, limits)?);
    let keep: Vec<usize> = (0..a.len()).filter(|&i| a.exponents()[i] >= 2).collect();
    let key = |x: usize| -> Vec<u32> {
        let m = star.label(x).as_degree().expect("degree labels");
        keep.iter().map(|&i| m.exponents()[i]).collect()
    };
    let depth = star.depths();
    let bottom = star.bottom().expect("P(a)* is bounded");
    let mut nodes: Vec<Option<Arc<RaoCertificate>>> = vec![None; star.len()];
    // children before parents: walk a linear extension backwards
    for &x in star.linear_extension().iter().rev() {
        if depth[x] <= 1 && x != bottom {
            continue;
        }
        let mut ordering = star.covers_up(x).to_vec();
        ordering.sort_by_key(|&c| std::cmp::Reverse(key(c)));
        let children = ordering.iter().map(|&y| nodes[y].clone()).collect();
        nodes[x] = Some(Arc::new(RaoCertificate {
            element: x,
            ordering,
            children,
        }));
    }
    let root = nodes[bottom].take().expect("root node built");
    drop(nodes);
    Ok((star, Arc::unwrap_or_clone(root)))
}
