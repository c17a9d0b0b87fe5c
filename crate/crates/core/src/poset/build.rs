use super::{Label, Poset};
use crate::error::{guard, Error, Result};
use crate::limits::Limits;
use crate::multidegree::Multidegree;

/// The chain `C_{k+1}` of length `k` (k + 1 elements).
pub fn make_chain(length: usize) -> Poset {
    let labels = (0..=length).map(Label::Index).collect();
    let covers: Vec<(usize, usize)> = (0..length).map(|i| (i, i + 1)).collect();
    Poset::from_covers(labels, &covers).expect("a chain is a valid poset")
}

pub fn make_boolean_lattice(n: usize) -> Result<Poset> {
    make_boolean_lattice_with(n, &Limits::default())
}

/// Subsets of `{1,…,n}` ordered by inclusion, indexed by bitmask.
pub fn make_boolean_lattice_with(n: usize, limits: &Limits) -> Result<Poset> {
    guard("Boolean lattice rank", n, limits.boolean_rank.min(63))?;
    let size = 1usize << n;
    guard("poset elements", size, limits.elements)?;
    let labels = (0..size)
        .map(|b| Label::Subset {
            bits: b as u64,
            n: n as u32,
        })
        .collect();
    Poset::from_relation(labels, |i, j| i != j && i & j == i)
}

pub fn make_proper_div_poset(a: &Multidegree) -> Result<Poset> {
    make_proper_div_poset_with(a, &Limits::default())
}

/// `P(a₁,…,aₙ)`: all multidegrees properly dividing `a`, plus `a` itself,
/// ordered by proper divisibility. Elements are indexed lexicographically with
/// the top last.
pub fn make_proper_div_poset_with(a: &Multidegree, limits: &Limits) -> Result<Poset> {
    let exps = a.exponents();
    let mut count: usize = 1;
    for &e in exps {
        count = count
            .checked_mul(e.max(1) as usize)
            .filter(|&c| c <= limits.elements)
            .ok_or(Error::Guard {
                what: "poset elements",
                limit: limits.elements,
                actual: usize::MAX,
            })?;
    }
    let total = count + usize::from(!a.is_zero());
    guard("poset elements", total, limits.elements)?;

    // odometer over coordinates: b_i < a_i, or b_i = 0 when a_i = 0
    let mut elements: Vec<Multidegree> = Vec::with_capacity(total);
    let mut cur = vec![0u32; exps.len()];
    loop {
        elements.push(Multidegree::new(cur.clone())?);
        let mut i = exps.len();
        let advanced = loop {
            if i == 0 {
                break false;
            }
            i -= 1;
            if cur[i] + 1 < exps[i] {
                cur[i] += 1;
                cur[i + 1..].iter_mut().for_each(|c| *c = 0);
                break true;
            }
        };
        if !advanced {
            break;
        }
    }
    if !a.is_zero() {
        elements.push(a.clone());
    }
    debug_assert_eq!(elements.len(), total);
    let less_src = elements.clone();
    Poset::from_relation(elements.into_iter().map(Label::Degree).collect(), move |i, j| {
        less_src[i].lt(&less_src[j])
    })
}

pub fn proper_product(p: &Poset, q: &Poset) -> Result<Poset> {
    proper_product_many(&[p, q])
}

pub fn proper_product_with(p: &Poset, q: &Poset, limits: &Limits) -> Result<Poset> {
    product_impl(&[p, q], limits)
}

/// `P₁ ×ₚ ⋯ ×ₚ Pₙ`: tuples `≤ₚ (1̂,…,1̂)` where in every coordinate either
/// both entries are the factor's bottom or the entry strictly increases.
/// Elements are indexed lexicographically by factor indices.
pub fn proper_product_many(factors: &[&Poset]) -> Result<Poset> {
    product_impl(factors, &Limits::default())
}

fn product_impl(factors: &[&Poset], limits: &Limits) -> Result<Poset> {
    if factors.is_empty() {
        return Err(Error::contract("proper product of zero factors"));
    }
    let bounds = factors
        .iter()
        .map(|f| f.bounds("proper division product"))
        .collect::<Result<Vec<_>>>()?;

    // per factor: admissible entries of a non-top tuple
    let admissible: Vec<Vec<usize>> = factors
        .iter()
        .zip(&bounds)
        .map(|(f, &(bot, top))| {
            if bot == top {
                vec![bot]
            } else {
                (0..f.len()).filter(|&x| f.less(x, top)).collect()
            }
        })
        .collect();
    let mut count: usize = 1;
    for adm in &admissible {
        count = count.saturating_mul(adm.len());
    }
    guard("poset elements", count.saturating_add(1), limits.elements)?;

    let mut tuples: Vec<Vec<usize>> = vec![vec![]];
    for adm in &admissible {
        tuples = tuples
            .into_iter()
            .flat_map(|t| {
                adm.iter().map(move |&x| {
                    let mut t = t.clone();
                    t.push(x);
                    t
                })
            })
            .collect();
    }
    let top: Vec<usize> = bounds.iter().map(|&(_, t)| t).collect();
    if !tuples.contains(&top) {
        tuples.push(top);
    }
    tuples.sort();

    let labels = tuples
        .iter()
        .map(|t| {
            Label::Tuple(
                t.iter()
                    .zip(factors)
                    .map(|(&x, f)| f.label(x).clone())
                    .collect(),
            )
        })
        .collect();
    let factors: Vec<&Poset> = factors.to_vec();
    Poset::from_relation(labels, |i, j| {
        let (s, t) = (&tuples[i], &tuples[j]);
        s != t
            && s.iter().zip(t).enumerate().all(|(k, (&x, &y))| {
                let bot = bounds[k].0;
                (x == bot && y == bot) || factors[k].less(x, y)
            })
    })
}
