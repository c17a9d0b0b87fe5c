use std::collections::{BTreeMap, VecDeque};

use super::Poset;
use crate::error::{guard, Result};
use crate::limits::Limits;

pub fn is_isomorphic(p: &Poset, q: &Poset) -> Result<Option<Vec<usize>>> {
    is_isomorphic_with(p, q, &Limits::default())
}

/// Exact isomorphism test. Returns a witness `w` with `p.less(i, j)` iff
/// `q.less(w[i], w[j])`, or `None`.
///
/// Elements are colour-refined by cover degrees, heights, depths and the
/// colours of their cover neighbours; the backtracking then only pairs
/// elements of equal colour and checks cover adjacency against everything
/// already mapped.
pub fn is_isomorphic_with(p: &Poset, q: &Poset, limits: &Limits) -> Result<Option<Vec<usize>>> {
    guard("isomorphism elements", p.len().max(q.len()), limits.iso_elements)?;
    if p.len() != q.len() || p.cover_count() != q.cover_count() {
        return Ok(None);
    }
    let n = p.len();
    if n == 0 {
        return Ok(Some(Vec::new()));
    }
    let (cp, cq) = refine(p, q);
    let histogram = |c: &[usize]| {
        let mut h = BTreeMap::new();
        for &x in c {
            *h.entry(x).or_insert(0usize) += 1;
        }
        h
    };
    let hist = histogram(&cp);
    if hist != histogram(&cq) {
        return Ok(None);
    }

    // visit p in BFS order over the undirected Hasse diagram, starting each
    // component at an element of the rarest colour
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    let mut starts: Vec<usize> = (0..n).collect();
    starts.sort_by_key(|&x| (hist[&cp[x]], x));
    for s in starts {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            order.push(x);
            for &y in p.covers_up(x).iter().chain(p.covers_down(x)) {
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
    }

    let mut by_colour: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for x in 0..n {
        by_colour.entry(cq[x]).or_default().push(x);
    }

    let mut fwd = vec![usize::MAX; n];
    let mut used = vec![false; n];
    // per depth: next candidate position to try
    let mut cursor = vec![0usize; n];
    let mut depth = 0usize;
    loop {
        if depth == n {
            return Ok(Some(fwd));
        }
        let v = order[depth];
        let cands = &by_colour[&cp[v]];
        let mut placed = false;
        while cursor[depth] < cands.len() {
            let w = cands[cursor[depth]];
            cursor[depth] += 1;
            if !used[w] && consistent(p, q, &fwd, &used, v, w) {
                fwd[v] = w;
                used[w] = true;
                placed = true;
                break;
            }
        }
        if placed {
            depth += 1;
            if depth < n {
                cursor[depth] = 0;
            }
            continue;
        }
        if depth == 0 {
            return Ok(None);
        }
        depth -= 1;
        let back = order[depth];
        used[fwd[back]] = false;
        fwd[back] = usize::MAX;
    }
}

fn consistent(p: &Poset, q: &Poset, fwd: &[usize], used: &[bool], v: usize, w: usize) -> bool {
    let check = |pn: &[usize], qn: &[usize]| {
        let mut mapped = 0usize;
        for &u in pn {
            let img = fwd[u];
            if img != usize::MAX {
                if qn.binary_search(&img).is_err() {
                    return false;
                }
                mapped += 1;
            }
        }
        mapped == qn.iter().filter(|&&x| used[x]).count()
    };
    check(p.covers_up(v), q.covers_up(w)) && check(p.covers_down(v), q.covers_down(w))
}

/// Joint colour refinement of both posets so that colours are comparable.
fn refine(p: &Poset, q: &Poset) -> (Vec<usize>, Vec<usize>) {
    let seed = |x: &Poset| -> Vec<(usize, usize, usize, usize, usize, usize)> {
        let h = x.heights();
        let d = x.depths();
        (0..x.len())
            .map(|i| {
                (
                    x.covers_down(i).len(),
                    x.covers_up(i).len(),
                    h[i],
                    d[i],
                    x.below_set(i).count_ones(..),
                    x.above_set(i).count_ones(..),
                )
            })
            .collect()
    };
    let (sp, sq) = (seed(p), seed(q));
    let mut ids = BTreeMap::new();
    for s in sp.iter().chain(&sq) {
        let next = ids.len();
        ids.entry(*s).or_insert(next);
    }
    let mut cp: Vec<usize> = sp.iter().map(|s| ids[s]).collect();
    let mut cq: Vec<usize> = sq.iter().map(|s| ids[s]).collect();
    let mut classes = ids.len();
    loop {
        let sig = |x: &Poset, c: &[usize], i: usize| {
            let mut ups: Vec<usize> = x.covers_up(i).iter().map(|&j| c[j]).collect();
            let mut downs: Vec<usize> = x.covers_down(i).iter().map(|&j| c[j]).collect();
            ups.sort_unstable();
            downs.sort_unstable();
            (c[i], ups, downs)
        };
        let np: Vec<_> = (0..p.len()).map(|i| sig(p, &cp, i)).collect();
        let nq: Vec<_> = (0..q.len()).map(|i| sig(q, &cq, i)).collect();
        let mut ids = BTreeMap::new();
        for s in np.iter().chain(&nq) {
            let next = ids.len();
            ids.entry(s.clone()).or_insert(next);
        }
        let new_classes = ids.len();
        cp = np.iter().map(|s| ids[s]).collect();
        cq = nq.iter().map(|s| ids[s]).collect();
        if new_classes == classes {
            return (cp, cq);
        }
        classes = new_classes;
    }
}
