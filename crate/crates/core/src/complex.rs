//! Simplicial complexes given by their facets, and order complexes of
//! bounded posets.

use std::fmt::Write as _;

use crate::error::{guard, Error, Result};
use crate::limits::Limits;
use crate::par;
use crate::poset::{maximal_chains_with, Label, Poset};

/// A finite simplicial complex stored by its facets.
///
/// Facets are sorted vertex-index lists forming an antichain, kept in
/// lexicographic order. Every vertex lies in at least one facet, so isolated
/// vertices are 0-dimensional facets. The empty complex has no vertices and
/// no facets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertices: Vec<Label>,
    facets: Vec<Vec<usize>>,
}

impl SimplicialComplex {
    pub fn empty() -> Self {
        SimplicialComplex {
            vertices: Vec::new(),
            facets: Vec::new(),
        }
    }

    /// Builds a complex from generating faces. Faces contained in other faces
    /// are dropped; empty faces are ignored.
    pub fn from_facets(vertices: Vec<Label>, faces: Vec<Vec<usize>>) -> Result<Self> {
        let n = vertices.len();
        let mut faces: Vec<Vec<usize>> = faces
            .into_iter()
            .filter(|f| !f.is_empty())
            .map(|mut f| {
                f.sort_unstable();
                f.dedup();
                f
            })
            .collect();
        if let Some(bad) = faces.iter().flatten().find(|&&v| v >= n) {
            return Err(Error::contract(format!("facet vertex {bad} out of range (|V| = {n})")));
        }
        faces.sort_unstable();
        faces.dedup();
        // larger faces first so containment only has to look at kept facets
        let mut by_size: Vec<usize> = (0..faces.len()).collect();
        by_size.sort_by_key(|&i| std::cmp::Reverse(faces[i].len()));
        let mut keep = vec![false; faces.len()];
        let mut kept: Vec<usize> = Vec::new();
        for i in by_size {
            if !kept.iter().any(|&k| is_subset(&faces[i], &faces[k])) {
                keep[i] = true;
                kept.push(i);
            }
        }
        let facets: Vec<Vec<usize>> = faces
            .into_iter()
            .zip(keep)
            .filter_map(|(f, k)| k.then_some(f))
            .collect();
        let mut covered = vec![false; n];
        for &v in facets.iter().flatten() {
            covered[v] = true;
        }
        if let Some(v) = covered.iter().position(|c| !c) {
            return Err(Error::contract(format!("vertex {v} lies in no facet")));
        }
        Ok(SimplicialComplex { vertices, facets })
    }

    pub fn vertices(&self) -> &[Label] {
        &self.vertices
    }

    pub fn facets(&self) -> &[Vec<usize>] {
        &self.facets
    }

    pub fn is_empty(&self) -> bool {
        self.facets.is_empty()
    }

    /// Largest facet dimension, `None` for the empty complex.
    pub fn dim(&self) -> Option<usize> {
        self.facets.iter().map(|f| f.len() - 1).max()
    }

    pub fn is_pure(&self) -> bool {
        self.facets.windows(2).all(|w| w[0].len() == w[1].len())
    }

    pub fn faces(&self) -> Result<Vec<Vec<Vec<usize>>>> {
        self.faces_with(&Limits::default())
    }

    /// All nonempty faces, grouped by dimension, each group sorted
    /// lexicographically and free of duplicates.
    ///
    /// Generated top-down: the faces of dimension `k` are the `k`-dimensional
    /// facets together with the codimension-one faces of dimension `k + 1`.
    pub fn faces_with(&self, limits: &Limits) -> Result<Vec<Vec<Vec<usize>>>> {
        let Some(d) = self.dim() else {
            return Ok(Vec::new());
        };
        let mut by_dim: Vec<Vec<Vec<usize>>> = vec![Vec::new(); d + 1];
        for f in &self.facets {
            by_dim[f.len() - 1].push(f.clone());
        }
        let mut total = 0usize;
        for k in (0..=d).rev() {
            let mut layer = std::mem::take(&mut by_dim[k]);
            if k < d {
                let upper = &by_dim[k + 1];
                let drops = par::map(upper, |f| {
                    (0..f.len())
                        .map(|j| {
                            let mut g = f.clone();
                            g.remove(j);
                            g
                        })
                        .collect::<Vec<_>>()
                });
                layer.extend(drops.into_iter().flatten());
            }
            par::sort_unstable(&mut layer);
            layer.dedup();
            total += layer.len();
            guard("faces", total, limits.faces)?;
            by_dim[k] = layer;
        }
        Ok(by_dim)
    }

    pub fn f_vector(&self) -> Result<Vec<usize>> {
        self.f_vector_with(&Limits::default())
    }

    pub fn f_vector_with(&self, limits: &Limits) -> Result<Vec<usize>> {
        Ok(self.faces_with(limits)?.iter().map(Vec::len).collect())
    }

    /// `−1 + Σ (−1)ⁱ fᵢ`.
    pub fn reduced_euler_char(&self) -> Result<i128> {
        self.reduced_euler_char_with(&Limits::default())
    }

    pub fn reduced_euler_char_with(&self, limits: &Limits) -> Result<i128> {
        Ok(euler_from_f_vector(&self.f_vector_with(limits)?))
    }

    /// Facet-list text format: `vertices: <k>`, then one facet per line.
    pub fn to_text(&self) -> String {
        let mut out = format!("vertices: {}\n", self.vertices.len());
        for f in &self.facets {
            let line: Vec<String> = f.iter().map(usize::to_string).collect();
            let _ = writeln!(out, "{}", line.join(" "));
        }
        out
    }

    /// Reads the facet-list format; vertices get [`Label::Index`] labels.
    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty());
        let (ln, header) = lines.next().ok_or_else(|| Error::parse(1, "empty input"))?;
        let n: usize = header
            .strip_prefix("vertices:")
            .ok_or_else(|| Error::parse(ln, "expected `vertices: <k>`"))?
            .trim()
            .parse()
            .map_err(|_| Error::parse(ln, "bad vertex count"))?;
        let mut facets = Vec::new();
        for (ln, line) in lines {
            let facet = line
                .split_whitespace()
                .map(|t| {
                    t.parse::<usize>()
                        .ok()
                        .filter(|&v| v < n)
                        .ok_or_else(|| Error::parse(ln, format!("bad vertex `{t}`")))
                })
                .collect::<Result<Vec<_>>>()?;
            facets.push(facet);
        }
        SimplicialComplex::from_facets((0..n).map(Label::Index).collect(), facets)
    }
}

pub(crate) fn euler_from_f_vector(f: &[usize]) -> i128 {
    f.iter()
        .enumerate()
        .fold(-1i128, |acc, (i, &x)| if i % 2 == 0 { acc + x as i128 } else { acc - x as i128 })
}

fn is_subset(small: &[usize], big: &[usize]) -> bool {
    if small.len() > big.len() {
        return false;
    }
    let mut it = big.iter();
    small.iter().all(|x| it.any(|y| y == x))
}

pub fn order_complex(p: &Poset) -> Result<SimplicialComplex> {
    order_complex_with(p, &Limits::default())
}

/// `Δ(p)`: chains of `p` with bottom and top removed. Vertices keep the
/// poset's index order (minus the two bounds) and labels.
pub fn order_complex_with(p: &Poset, limits: &Limits) -> Result<SimplicialComplex> {
    let (bottom, top) = p.bounds("order complex")?;
    if bottom == top {
        return Ok(SimplicialComplex::empty());
    }
    let mut index = vec![usize::MAX; p.len()];
    let mut vertices = Vec::with_capacity(p.len() - 2);
    for x in 0..p.len() {
        if x != bottom && x != top {
            index[x] = vertices.len();
            vertices.push(p.label(x).clone());
        }
    }
    let chain_limits = Limits {
        chains: limits.chains.min(limits.faces),
        ..limits.clone()
    };
    let chains = maximal_chains_with(p, &chain_limits)?;
    // maximal chains of a bounded poset run bottom to top, so the inner
    // parts are exactly the maximal chains of the open poset
    let mut facets: Vec<Vec<usize>> = chains
        .iter()
        .map(|c| {
            let inner = &c.elements[1..c.elements.len() - 1];
            let mut f: Vec<usize> = inner.iter().map(|&x| index[x]).collect();
            f.sort_unstable();
            f
        })
        .filter(|f| !f.is_empty())
        .collect();
    facets.sort_unstable();
    facets.dedup();
    Ok(SimplicialComplex { vertices, facets })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multidegree::Multidegree;
    use crate::poset::{dual, make_boolean_lattice, make_chain, make_proper_div_poset, mobius};

    fn pdiv(v: &[u32]) -> Poset {
        make_proper_div_poset(&Multidegree::new(v.to_vec()).unwrap()).unwrap()
    }

    fn idx(n: usize) -> Vec<Label> {
        (0..n).map(Label::Index).collect()
    }

    #[test]
    fn p33_is_a_tree() {
        let k = order_complex(&pdiv(&[3, 3])).unwrap();
        assert_eq!(k.vertices().len(), 8);
        assert_eq!(k.facets().len(), 7);
        assert!(k.facets().iter().all(|f| f.len() == 2));
        assert_eq!(k.f_vector().unwrap(), vec![8, 7]);
        assert_eq!(k.reduced_euler_char().unwrap(), 0);
    }

    #[test]
    fn p22_is_three_points() {
        let k = order_complex(&pdiv(&[2, 2])).unwrap();
        assert_eq!(k.facets(), &[vec![0], vec![1], vec![2]]);
        assert!(k.is_pure());
        assert_eq!(k.f_vector().unwrap(), vec![3]);
        assert_eq!(k.reduced_euler_char().unwrap(), 2);
    }

    #[test]
    fn small_posets_give_the_empty_complex() {
        for v in [[1u32, 1], [0, 0], [1, 0], [0, 1]] {
            let k = order_complex(&pdiv(&v)).unwrap();
            assert!(k.is_empty());
            assert_eq!(k.dim(), None);
            assert!(k.f_vector().unwrap().is_empty());
            assert_eq!(k.reduced_euler_char().unwrap(), -1);
        }
    }

    #[test]
    fn p44_is_not_pure() {
        let k = order_complex(&pdiv(&[4, 4])).unwrap();
        assert!(!k.is_pure());
        let one = SimplicialComplex::from_facets(idx(3), vec![vec![0, 1, 2]]).unwrap();
        assert!(one.is_pure());
    }

    #[test]
    fn dual_has_the_same_faces() {
        for v in [[4u32, 4], [3, 5], [2, 6]] {
            let p = pdiv(&v);
            assert_eq!(order_complex(&dual(&p)).unwrap(), order_complex(&p).unwrap());
        }
    }

    #[test]
    fn from_facets_normalises() {
        let k = SimplicialComplex::from_facets(idx(4), vec![vec![2, 0], vec![0, 1, 2], vec![3], vec![1]])
            .unwrap();
        assert_eq!(k.facets(), &[vec![0, 1, 2], vec![3]]);
        assert!(SimplicialComplex::from_facets(idx(3), vec![vec![0, 1]]).is_err());
        assert!(SimplicialComplex::from_facets(idx(2), vec![vec![0, 5]]).is_err());
    }

    #[test]
    fn faces_of_a_tetrahedron() {
        let k = SimplicialComplex::from_facets(idx(4), vec![vec![0, 1, 2, 3]]).unwrap();
        let faces = k.faces().unwrap();
        assert_eq!(faces.iter().map(Vec::len).collect::<Vec<_>>(), vec![4, 6, 4, 1]);
        assert_eq!(faces[1][0], vec![0, 1]);
        assert_eq!(k.reduced_euler_char().unwrap(), 0);
        let limits = Limits {
            faces: 10,
            ..Limits::default()
        };
        assert!(k.f_vector_with(&limits).unwrap_err().is_guard());
    }

    #[test]
    fn euler_characteristic_is_the_mobius_number() {
        for v in [[2u32, 2], [3, 3], [4, 4], [3, 6], [5, 5]] {
            let p = pdiv(&v);
            assert_eq!(order_complex(&p).unwrap().reduced_euler_char().unwrap(), mobius(&p).unwrap());
        }
        for n in 1..=4 {
            let b = make_boolean_lattice(n).unwrap();
            assert_eq!(order_complex(&b).unwrap().reduced_euler_char().unwrap(), mobius(&b).unwrap());
        }
        // the identity needs 0̂ ≠ 1̂: a single point has μ = 1 but an empty Δ
        let point = make_boolean_lattice(0).unwrap();
        assert_eq!(mobius(&point).unwrap(), 1);
        assert_eq!(order_complex(&point).unwrap().reduced_euler_char().unwrap(), -1);
        assert_eq!(order_complex(&make_chain(4)).unwrap().reduced_euler_char().unwrap(), 0);
    }

    #[test]
    fn text_round_trip() {
        let k = order_complex(&pdiv(&[3, 3])).unwrap();
        let text = k.to_text();
        assert!(text.starts_with("vertices: 8\n"));
        let back = SimplicialComplex::from_text(&text).unwrap();
        assert_eq!(back.facets(), k.facets());
        assert!(SimplicialComplex::from_text("vertices: 2\n0 7\n").is_err());
        assert!(SimplicialComplex::from_text("vertices: 0\n").unwrap().is_empty());
    }
}
