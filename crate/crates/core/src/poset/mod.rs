//! Finite posets stored as Hasse diagrams.
//!
//! Elements are addressed by index; every element carries an opaque
//! [`Label`]. A [`Poset`] keeps both the cover relation (in both directions)
//! and the strict comparability relation as bitsets, so order queries are O(1)
//! and the cover lists are always the transitive reduction of the order.

mod build;
mod iso;
mod ops;
mod text;

use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::multidegree::Multidegree;
use crate::par;

pub use build::{
    make_boolean_lattice, make_boolean_lattice_with, make_chain, make_proper_div_poset,
    make_proper_div_poset_with, proper_product, proper_product_many, proper_product_with,
};
pub use iso::{is_isomorphic, is_isomorphic_with};
pub use ops::{atoms, dual, interval, maximal_chains, maximal_chains_with, mobius, MaximalChain};

/// Opaque element label. Equality is structural.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    /// Position in a chain.
    Index(usize),
    /// Exponent vector (elements of `P(a₁,…,aₙ)`).
    Degree(Multidegree),
    /// Subset of `{1,…,n}` as a bitmask (elements of `Bₙ`).
    Subset { bits: u64, n: u32 },
    /// Element of a proper-division product.
    Tuple(Vec<Label>),
    /// Free text, as read from a poset file.
    Text(String),
}

impl Label {
    pub fn as_degree(&self) -> Option<&Multidegree> {
        match self {
            Label::Degree(m) => Some(m),
            _ => None,
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Index(i) => write!(f, "{i}"),
            Label::Degree(m) => write!(f, "{m}"),
            Label::Subset { bits, n } => {
                f.write_str("{")?;
                let mut first = true;
                for i in 0..*n {
                    if bits >> i & 1 == 1 {
                        if !first {
                            f.write_str(",")?;
                        }
                        write!(f, "{}", i + 1)?;
                        first = false;
                    }
                }
                f.write_str("}")
            }
            Label::Tuple(parts) => {
                f.write_str("<")?;
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        f.write_str(";")?;
                    }
                    write!(f, "{p}")?;
                }
                f.write_str(">")
            }
            Label::Text(s) => f.write_str(s),
        }
    }
}

/// A finite poset.
#[derive(Clone, PartialEq, Eq)]
pub struct Poset {
    labels: Vec<Label>,
    /// `up[i]`: elements covering `i`, ascending.
    up: Vec<Vec<usize>>,
    /// `down[i]`: elements covered by `i`, ascending.
    down: Vec<Vec<usize>>,
    /// Strict up-sets.
    above: Vec<FixedBitSet>,
    /// Strict down-sets.
    below: Vec<FixedBitSet>,
    /// A linear extension.
    topo: Vec<usize>,
    bottom: Option<usize>,
    top: Option<usize>,
}

impl fmt::Debug for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Poset")
            .field("elements", &self.len())
            .field("covers", &self.cover_count())
            .field("bottom", &self.bottom)
            .field("top", &self.top)
            .finish()
    }
}

impl Poset {
    /// Builds a poset from a strict order given as a predicate. The predicate
    /// must be irreflexive and transitive; antisymmetry is checked.
    pub fn from_relation<F>(labels: Vec<Label>, less: F) -> Result<Poset>
    where
        F: Fn(usize, usize) -> bool + Sync + Send,
    {
        let n = labels.len();
        let above = par::map_range(n, |i| {
            let mut row = FixedBitSet::with_capacity(n);
            for j in 0..n {
                if i != j && less(i, j) {
                    row.insert(j);
                }
            }
            row
        });
        Poset::from_above(labels, above)
    }

    /// Builds a poset from cover pairs `(i, j)` meaning `i` is covered by `j`.
    /// Pairs implied by transitivity are accepted and dropped.
    pub fn from_covers(labels: Vec<Label>, covers: &[(usize, usize)]) -> Result<Poset> {
        let n = labels.len();
        let mut succ: Vec<Vec<usize>> = vec![Vec::new(); n];
        let mut indeg = vec![0usize; n];
        for &(i, j) in covers {
            if i >= n || j >= n {
                return Err(Error::contract(format!(
                    "cover {i} < {j} refers to a missing element"
                )));
            }
            if i == j {
                return Err(Error::contract(format!("cover {i} < {i} is a loop")));
            }
            succ[i].push(j);
            indeg[j] += 1;
        }
        // Kahn order, then closure in reverse.
        let mut order = Vec::with_capacity(n);
        let mut stack: Vec<usize> = (0..n).rev().filter(|&i| indeg[i] == 0).collect();
        while let Some(i) = stack.pop() {
            order.push(i);
            for &j in &succ[i] {
                indeg[j] -= 1;
                if indeg[j] == 0 {
                    stack.push(j);
                }
            }
        }
        if order.len() != n {
            return Err(Error::contract("cover relation contains a cycle"));
        }
        let mut above = vec![FixedBitSet::with_capacity(n); n];
        for &i in order.iter().rev() {
            let mut row = FixedBitSet::with_capacity(n);
            for &j in &succ[i] {
                row.insert(j);
                row.union_with(&above[j]);
            }
            above[i] = row;
        }
        Poset::from_above(labels, above)
    }

    /// Core constructor from strict up-sets (assumed transitive).
    pub(crate) fn from_above(labels: Vec<Label>, above: Vec<FixedBitSet>) -> Result<Poset> {
        let n = labels.len();
        debug_assert_eq!(above.len(), n);
        let mut below = vec![FixedBitSet::with_capacity(n); n];
        for (i, row) in above.iter().enumerate() {
            if row.contains(i) {
                return Err(Error::contract(format!("element {i} is below itself")));
            }
            for j in row.ones() {
                below[j].insert(i);
            }
        }
        for (i, row) in above.iter().enumerate() {
            if !row.is_disjoint(&below[i]) {
                return Err(Error::contract(format!(
                    "relation is not antisymmetric at element {i}"
                )));
            }
        }
        let up: Vec<Vec<usize>> = par::map_range(n, |i| {
            let strict = &above[i];
            let mut implied = FixedBitSet::with_capacity(n);
            for z in strict.ones() {
                implied.union_with(&above[z]);
            }
            strict.difference(&implied).collect()
        });
        let mut down = vec![Vec::new(); n];
        for (i, ups) in up.iter().enumerate() {
            for &j in ups {
                down[j].push(i);
            }
        }
        // strict order implies strictly larger down-sets
        let mut topo: Vec<usize> = (0..n).collect();
        topo.sort_by_key(|&i| (below[i].count_ones(..), i));
        let minimal: Vec<usize> = (0..n).filter(|&i| down[i].is_empty()).collect();
        let maximal: Vec<usize> = (0..n).filter(|&i| up[i].is_empty()).collect();
        let bottom = (minimal.len() == 1).then(|| minimal[0]);
        let top = (maximal.len() == 1).then(|| maximal[0]);
        Ok(Poset {
            labels,
            up,
            down,
            above,
            below,
            topo,
            bottom,
            top,
        })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &Label {
        &self.labels[i]
    }

    /// Index of the element carrying `label`, if any.
    pub fn find(&self, label: &Label) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Index of the element labelled by this multidegree.
    pub fn find_degree(&self, m: &Multidegree) -> Option<usize> {
        self.labels
            .iter()
            .position(|l| matches!(l, Label::Degree(d) if d == m))
    }

    /// Elements covering `i`, ascending.
    pub fn covers_up(&self, i: usize) -> &[usize] {
        &self.up[i]
    }

    /// Elements covered by `i`, ascending.
    pub fn covers_down(&self, i: usize) -> &[usize] {
        &self.down[i]
    }

    /// All cover pairs `(i, j)` with `i` covered by `j`, sorted.
    pub fn cover_pairs(&self) -> Vec<(usize, usize)> {
        self.up
            .iter()
            .enumerate()
            .flat_map(|(i, ups)| ups.iter().map(move |&j| (i, j)))
            .collect()
    }

    pub fn cover_count(&self) -> usize {
        self.up.iter().map(Vec::len).sum()
    }

    pub fn is_cover(&self, i: usize, j: usize) -> bool {
        self.up[i].binary_search(&j).is_ok()
    }

    /// Strict order `i < j`.
    pub fn less(&self, i: usize, j: usize) -> bool {
        self.above[i].contains(j)
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        i == j || self.less(i, j)
    }

    pub(crate) fn above_set(&self, i: usize) -> &FixedBitSet {
        &self.above[i]
    }

    pub(crate) fn below_set(&self, i: usize) -> &FixedBitSet {
        &self.below[i]
    }

    /// A linear extension of the order.
    pub fn linear_extension(&self) -> &[usize] {
        &self.topo
    }

    pub fn bottom(&self) -> Option<usize> {
        self.bottom
    }

    pub fn top(&self) -> Option<usize> {
        self.top
    }

    pub fn is_bounded(&self) -> bool {
        self.bottom.is_some() && self.top.is_some()
    }

    pub(crate) fn bounds(&self, what: &str) -> Result<(usize, usize)> {
        match (self.bottom, self.top) {
            (Some(b), Some(t)) => Ok((b, t)),
            _ => Err(Error::contract(format!("{what} needs a bounded poset"))),
        }
    }

    /// Length of the longest chain ending at each element.
    pub fn heights(&self) -> Vec<usize> {
        let mut h = vec![0usize; self.len()];
        for &i in &self.topo {
            h[i] = self.down[i].iter().map(|&j| h[j] + 1).max().unwrap_or(0);
        }
        h
    }

    /// Length of the longest chain starting at each element.
    pub fn depths(&self) -> Vec<usize> {
        let mut d = vec![0usize; self.len()];
        for &i in self.topo.iter().rev() {
            d[i] = self.up[i].iter().map(|&j| d[j] + 1).max().unwrap_or(0);
        }
        d
    }

    /// `ℓ(P)`: the maximal length of a chain.
    pub fn length(&self) -> usize {
        self.heights().into_iter().max().unwrap_or(0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_covers_drops_implied_edges() {
        let labels = (0..3).map(Label::Index).collect();
        let p = Poset::from_covers(labels, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(p.cover_pairs(), vec![(0, 1), (1, 2)]);
        assert!(p.less(0, 2));
        assert_eq!(p.bottom(), Some(0));
        assert_eq!(p.top(), Some(2));
    }

    #[test]
    fn cycles_rejected() {
        let labels = (0..2).map(Label::Index).collect();
        assert!(Poset::from_covers(labels, &[(0, 1), (1, 0)]).is_err());
        let labels: Vec<Label> = (0..2).map(Label::Index).collect();
        assert!(Poset::from_relation(labels, |_, _| true).is_err());
    }

    #[test]
    fn antichain_is_unbounded() {
        let labels = (0..3).map(Label::Index).collect();
        let p = Poset::from_covers(labels, &[]).unwrap();
        assert_eq!(p.bottom(), None);
        assert_eq!(p.top(), None);
        assert_eq!(p.length(), 0);
    }

    #[test]
    fn subset_labels_print_one_based() {
        let l = Label::Subset { bits: 0b101, n: 3 };
        assert_eq!(l.to_string(), "{1,3}");
        assert_eq!(Label::Subset { bits: 0, n: 3 }.to_string(), "{}");
    }
}
