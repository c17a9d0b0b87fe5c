use fixedbitset::FixedBitSet;

use super::Poset;
use crate::error::{guard, Error, Result};
use crate::limits::Limits;
use crate::par;

/// Order dual: same elements and indices, every cover reversed.
pub fn dual(p: &Poset) -> Poset {
    let mut topo = p.topo.clone();
    topo.reverse();
    Poset {
        labels: p.labels.clone(),
        up: p.down.clone(),
        down: p.up.clone(),
        above: p.below.clone(),
        below: p.above.clone(),
        topo,
        bottom: p.top,
        top: p.bottom,
    }
}

/// The interval `[lo, hi]` as a poset of its own, elements in index order.
pub fn interval(p: &Poset, lo: usize, hi: usize) -> Result<Poset> {
    if lo >= p.len() || hi >= p.len() {
        return Err(Error::contract("interval endpoint out of range"));
    }
    if !p.leq(lo, hi) {
        return Err(Error::contract(format!(
            "interval [{}, {}] is empty: {} is not below {}",
            p.label(lo),
            p.label(hi),
            p.label(lo),
            p.label(hi)
        )));
    }
    let members: Vec<usize> = (0..p.len())
        .filter(|&x| p.leq(lo, x) && p.leq(x, hi))
        .collect();
    let labels = members.iter().map(|&x| p.label(x).clone()).collect();
    let n = members.len();
    let above = members
        .iter()
        .map(|&x| {
            let mut row = FixedBitSet::with_capacity(n);
            for (k, &y) in members.iter().enumerate() {
                if p.less(x, y) {
                    row.insert(k);
                }
            }
            row
        })
        .collect();
    Poset::from_above(labels, above)
}

/// Elements covering the bottom, in index order.
pub fn atoms(p: &Poset) -> Result<Vec<usize>> {
    let bottom = p
        .bottom()
        .ok_or_else(|| Error::contract("atoms need a bottom element"))?;
    Ok(p.covers_up(bottom).to_vec())
}

/// One maximal chain, as element indices from bottom to top.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MaximalChain {
    pub elements: Vec<usize>,
}

impl MaximalChain {
    /// Number of elements minus one.
    pub fn length(&self) -> usize {
        self.elements.len().saturating_sub(1)
    }
}

pub fn maximal_chains(p: &Poset) -> Result<Vec<MaximalChain>> {
    maximal_chains_with(p, &Limits::default())
}

/// All maximal chains in lexicographic order of their index sequences.
///
/// Maximal chains are exactly the cover paths from a minimal to a maximal
/// element; the walk is split over the starting covers and merged in order.
pub fn maximal_chains_with(p: &Poset, limits: &Limits) -> Result<Vec<MaximalChain>> {
    let starts: Vec<usize> = (0..p.len()).filter(|&i| p.covers_down(i).is_empty()).collect();
    // (start, first step) seeds keep the merged output lexicographic
    let mut seeds: Vec<Vec<usize>> = Vec::new();
    for &s in &starts {
        if p.covers_up(s).is_empty() {
            seeds.push(vec![s]);
        } else {
            seeds.extend(p.covers_up(s).iter().map(|&t| vec![s, t]));
        }
    }
    let parts = par::map(&seeds, |seed| walk_from(p, seed, limits.chains));
    let mut out = Vec::new();
    for part in parts {
        out.extend(part?);
        guard("maximal chains", out.len(), limits.chains)?;
    }
    Ok(out)
}

fn walk_from(p: &Poset, seed: &[usize], limit: usize) -> Result<Vec<MaximalChain>> {
    let mut out = Vec::new();
    let mut path = seed.to_vec();
    // stack of (element, next child position)
    let mut stack: Vec<(usize, usize)> = vec![(*seed.last().expect("nonempty seed"), 0)];
    while let Some(frame) = stack.last_mut() {
        let ups = p.covers_up(frame.0);
        if ups.is_empty() {
            out.push(MaximalChain {
                elements: path.clone(),
            });
            guard("maximal chains", out.len(), limit)?;
            stack.pop();
            if stack.is_empty() {
                break;
            }
            path.pop();
            continue;
        }
        if frame.1 < ups.len() {
            let y = ups[frame.1];
            frame.1 += 1;
            path.push(y);
            stack.push((y, 0));
        } else {
            stack.pop();
            if stack.is_empty() {
                break;
            }
            path.pop();
        }
    }
    Ok(out)
}

/// `μ(0̂, 1̂)` by the recursion `μ(x,x) = 1`, `Σ_{x≤z≤y} μ(x,z) = 0`.
pub fn mobius(p: &Poset) -> Result<i128> {
    let (bottom, top) = p.bounds("Möbius function")?;
    let mut mu: Vec<i128> = vec![0; p.len()];
    for &y in p.linear_extension() {
        if y == bottom {
            mu[y] = 1;
        } else if p.less(bottom, y) {
            let s: i128 = p.below_set(y).ones().map(|z| mu[z]).sum();
            mu[y] = -s;
        }
    }
    Ok(mu[top])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multidegree::Multidegree;
    use crate::poset::{is_isomorphic, make_boolean_lattice, make_chain, make_proper_div_poset, Label};

    fn pdiv(v: &[u32]) -> Poset {
        make_proper_div_poset(&Multidegree::new(v.to_vec()).unwrap()).unwrap()
    }

    fn deg(p: &Poset, v: &[u32]) -> usize {
        p.find_degree(&Multidegree::new(v.to_vec()).unwrap()).unwrap()
    }

    #[test]
    fn dual_is_an_involution() {
        let p = pdiv(&[3, 2]);
        assert_eq!(dual(&dual(&p)), p);
        let c4 = make_chain(3);
        assert!(is_isomorphic(&dual(&c4), &c4).unwrap().is_some());
        assert_eq!(dual(&p).bottom(), p.top());
    }

    #[test]
    fn intervals() {
        let b3 = make_boolean_lattice(3).unwrap();
        assert_eq!(interval(&b3, 0, 7).unwrap(), b3);
        let point = interval(&b3, 5, 5).unwrap();
        assert_eq!(point.len(), 1);
        assert!(matches!(interval(&b3, 1, 2), Err(Error::Contract(_))));
    }

    #[test]
    fn dual_intervals_are_smaller_proper_division_posets() {
        for a in 1..=4u32 {
            for b in 1..=4u32 {
                let star = dual(&pdiv(&[a, b]));
                let zero = deg(&star, &[0, 0]);
                for x in 0..star.len() {
                    let m = star.label(x).as_degree().unwrap().clone();
                    if m.exponents() == [a, b] {
                        continue;
                    }
                    let iv = interval(&star, x, zero).unwrap();
                    let expected = dual(&make_proper_div_poset(&m).unwrap());
                    assert!(is_isomorphic(&iv, &expected).unwrap().is_some(), "{m} in P({a},{b})*");
                }
            }
        }
    }

    #[test]
    fn atoms_of_p44() {
        let p = pdiv(&[4, 4]);
        let got: Vec<&Label> = atoms(&p).unwrap().into_iter().map(|i| p.label(i)).collect();
        // index order is lexicographic: (0,1) < (1,0) < (1,1)
        let want: Vec<Label> = [[0u32, 1], [1, 0], [1, 1]]
            .iter()
            .map(|v| Label::Degree(Multidegree::new(v.to_vec()).unwrap()))
            .collect();
        assert_eq!(got, want.iter().collect::<Vec<_>>());
        for k in 2..6 {
            assert_eq!(atoms(&make_chain(k - 1)).unwrap().len(), 1);
        }
        for n in 0..5 {
            assert_eq!(atoms(&make_boolean_lattice(n).unwrap()).unwrap().len(), n);
        }
        let anti = Poset::from_covers((0..2).map(Label::Index).collect(), &[]).unwrap();
        assert!(atoms(&anti).is_err());
        assert!(atoms(&make_chain(0)).unwrap().is_empty());
    }

    #[test]
    fn maximal_chain_counts() {
        let star = dual(&pdiv(&[2, 2]));
        let chains = maximal_chains(&star).unwrap();
        assert_eq!(chains.len(), 3);
        assert!(chains.iter().all(|c| c.length() == 2));
        assert_eq!(maximal_chains(&make_chain(4)).unwrap().len(), 1);
        for v in [[3u32, 5], [4, 4], [1, 6]] {
            let p = pdiv(&v);
            let longest = maximal_chains(&p).unwrap().iter().map(|c| c.length()).max();
            assert_eq!(longest, Some(v[0].max(v[1]) as usize));
        }
    }

    #[test]
    fn maximal_chains_are_sorted_and_guarded() {
        let p = pdiv(&[4, 3]);
        let chains = maximal_chains(&p).unwrap();
        let mut sorted = chains.clone();
        sorted.sort();
        assert_eq!(chains, sorted);
        let limits = Limits {
            chains: 3,
            ..Limits::default()
        };
        assert!(maximal_chains_with(&p, &limits).unwrap_err().is_guard());
    }

    #[test]
    fn mobius_values() {
        assert_eq!(mobius(&make_chain(0)).unwrap(), 1);
        assert_eq!(mobius(&make_chain(1)).unwrap(), -1);
        for k in 2..6 {
            assert_eq!(mobius(&make_chain(k)).unwrap(), 0);
        }
        assert_eq!(mobius(&make_boolean_lattice(3).unwrap()).unwrap(), -1);
        assert_eq!(mobius(&pdiv(&[4, 4])).unwrap(), -4);
        let anti = Poset::from_covers((0..2).map(Label::Index).collect(), &[]).unwrap();
        assert!(mobius(&anti).is_err());
    }

    /// Brute-force Möbius recursion over all intervals, independent of the
    /// single-row recursion above.
    #[test]
    fn mobius_matches_full_table() {
        for n in 0..=4 {
            let b = make_boolean_lattice(n).unwrap();
            let len = b.len();
            let mut table = vec![vec![0i128; len]; len];
            for x in 0..len {
                for &y in b.linear_extension() {
                    if x == y {
                        table[x][y] = 1;
                    } else if b.less(x, y) {
                        table[x][y] = -(0..len)
                            .filter(|&z| b.leq(x, z) && b.less(z, y))
                            .map(|z| table[x][z])
                            .sum::<i128>();
                    }
                }
            }
            let expected = if n % 2 == 0 { 1 } else { -1 };
            assert_eq!(table[0][len - 1], expected);
            assert_eq!(mobius(&b).unwrap(), expected);
        }
    }
}
