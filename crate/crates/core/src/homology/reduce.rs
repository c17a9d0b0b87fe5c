//! Sparse column reduction over ℤ.
//!
//! Columns are reduced left to right until their lowest nonzero rows are
//! pairwise distinct, using only unimodular column operations: a multiple
//! of the pivot when the pivot divides the colliding entry, otherwise an
//! extended-gcd combination that replaces the pivot by the gcd. The result
//! has the same rank and the same invariant factors as the input.
//!
//! When every pivot is a unit the matrix has no torsion. Otherwise the
//! non-unit columns are cleared against the unit pivots and the small
//! remainder goes through the dense Smith normal form.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::dense::{smith_normal_form, IntMatrix};

pub(crate) trait Coef: Clone + Debug + PartialEq {
    fn from_i64(v: i64) -> Self;
    fn to_big(&self) -> BigInt;
    fn is_zero(&self) -> bool;
    fn is_unit(&self) -> bool;
    /// `x·a + y·b`, or `None` on overflow.
    fn lin(x: &Self, a: &Self, y: &Self, b: &Self) -> Option<Self>;
    /// `None` when `self ∤ b`, else `b / self`.
    fn quotient(&self, b: &Self) -> Option<Self>;
    /// `(g, s, t)` with `g = s·a + t·b = gcd(a, b) > 0`.
    fn ext_gcd(a: &Self, b: &Self) -> Option<(Self, Self, Self)>;
    fn neg(&self) -> Option<Self>;
}

impl Coef for i64 {
    fn from_i64(v: i64) -> Self {
        v
    }
    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn is_unit(&self) -> bool {
        *self == 1 || *self == -1
    }
    fn lin(x: &Self, a: &Self, y: &Self, b: &Self) -> Option<Self> {
        x.checked_mul(*a)?.checked_add(y.checked_mul(*b)?)
    }
    fn quotient(&self, b: &Self) -> Option<Self> {
        (b.checked_rem(*self)? == 0).then(|| b / self)
    }
    fn ext_gcd(a: &Self, b: &Self) -> Option<(Self, Self, Self)> {
        let e = (*a as i128).extended_gcd(&(*b as i128));
        let (g, s, t) = if e.gcd < 0 { (-e.gcd, -e.x, -e.y) } else { (e.gcd, e.x, e.y) };
        Some((g.try_into().ok()?, s.try_into().ok()?, t.try_into().ok()?))
    }
    fn neg(&self) -> Option<Self> {
        self.checked_neg()
    }
}

impl Coef for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn to_big(&self) -> BigInt {
        self.clone()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_unit(&self) -> bool {
        self.abs().is_one()
    }
    fn lin(x: &Self, a: &Self, y: &Self, b: &Self) -> Option<Self> {
        Some(x * a + y * b)
    }
    fn quotient(&self, b: &Self) -> Option<Self> {
        b.is_multiple_of(self).then(|| b / self)
    }
    fn ext_gcd(a: &Self, b: &Self) -> Option<(Self, Self, Self)> {
        let e = a.extended_gcd(b);
        Some(if e.gcd.is_negative() { (-e.gcd, -e.x, -e.y) } else { (e.gcd, e.x, e.y) })
    }
    fn neg(&self) -> Option<Self> {
        Some(-self)
    }
}

type Col<C> = Vec<(u32, C)>;

/// `x·a + y·b` over sorted sparse columns.
fn combine<C: Coef>(x: &C, a: &[(u32, C)], y: &C, b: &[(u32, C)]) -> Option<Col<C>> {
    let zero = C::from_i64(0);
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let (row, v) = match (a.get(i), b.get(j)) {
            (Some(p), Some(q)) if p.0 == q.0 => {
                i += 1;
                j += 1;
                (p.0, C::lin(x, &p.1, y, &q.1)?)
            }
            (Some(p), Some(q)) if p.0 < q.0 => {
                i += 1;
                (p.0, C::lin(x, &p.1, &zero, &zero)?)
            }
            (Some(p), None) => {
                i += 1;
                (p.0, C::lin(x, &p.1, &zero, &zero)?)
            }
            (_, Some(q)) => {
                j += 1;
                (q.0, C::lin(&zero, &zero, y, &q.1)?)
            }
            (None, None) => unreachable!(),
        };
        if !v.is_zero() {
            out.push((row, v));
        }
    }
    Some(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Reduction {
    pub rank: usize,
    /// Rows holding a unit pivot, usable for clearing the next map down.
    pub unit_rows: Vec<u32>,
    /// Invariant factors greater than one, ascending; empty unless requested.
    pub torsion: Vec<BigInt>,
}

/// Reduces the given columns of a `rows`-row matrix. Columns listed in
/// `skip` are treated as zero.
pub(crate) fn reduce(rows: usize, columns: &[Vec<(u32, i64)>], skip: &[bool], torsion: bool) -> Reduction {
    reduce_as::<i64>(rows, columns, skip, torsion)
        .unwrap_or_else(|| reduce_as::<BigInt>(rows, columns, skip, torsion).expect("big integers do not overflow"))
}

fn reduce_as<C: Coef>(rows: usize, columns: &[Vec<(u32, i64)>], skip: &[bool], want_torsion: bool) -> Option<Reduction> {
    const NONE: u32 = u32::MAX;
    let one = C::from_i64(1);
    let mut pivot_of_row = vec![NONE; rows];
    let mut pivots: Vec<Col<C>> = Vec::new();
    for (j, src) in columns.iter().enumerate() {
        if skip.get(j).copied().unwrap_or(false) {
            continue;
        }
        let mut col: Col<C> = src.iter().map(|(r, v)| (*r, C::from_i64(*v))).collect();
        while let Some((low, a)) = col.last().cloned() {
            let slot = pivot_of_row[low as usize];
            if slot == NONE {
                pivot_of_row[low as usize] = pivots.len() as u32;
                pivots.push(col);
                break;
            }
            let piv = &pivots[slot as usize];
            let p = piv.last().expect("pivot columns are nonzero").1.clone();
            match p.quotient(&a) {
                Some(q) => col = combine(&one, &col, &q.neg()?, piv)?,
                None => {
                    let (g, s, t) = C::ext_gcd(&p, &a)?;
                    let pg = g.quotient(&p).expect("gcd divides");
                    let ag = g.quotient(&a).expect("gcd divides");
                    let new_pivot = combine(&s, piv, &t, &col)?;
                    col = combine(&pg, &col, &ag.neg()?, piv)?;
                    pivots[slot as usize] = new_pivot;
                }
            }
        }
    }

    let mut unit_rows: Vec<u32> = Vec::new();
    let mut non_unit: Vec<usize> = Vec::new();
    for (slot, col) in pivots.iter().enumerate() {
        let (low, v) = col.last().expect("pivot columns are nonzero");
        if v.is_unit() {
            unit_rows.push(*low);
        } else {
            non_unit.push(slot);
        }
    }
    unit_rows.sort_unstable();
    let rank = pivots.len();
    if !want_torsion || non_unit.is_empty() {
        return Some(Reduction {
            rank,
            unit_rows,
            torsion: Vec::new(),
        });
    }

    // clear the non-unit columns at every unit-pivot row, highest row
    // first; each step only changes rows below the one being cleared
    let mut residual: Vec<Col<C>> = Vec::with_capacity(non_unit.len());
    for &slot in &non_unit {
        let mut col = pivots[slot].clone();
        let mut idx = col.len();
        while idx > 0 {
            idx -= 1;
            let r = col[idx].0;
            let s = pivot_of_row[r as usize];
            if s == NONE || s as usize == slot {
                continue;
            }
            let piv = &pivots[s as usize];
            let u = &piv.last().expect("pivot columns are nonzero").1;
            if !u.is_unit() {
                continue;
            }
            let q = u.quotient(&col[idx].1).expect("units divide");
            col = combine(&one, &col, &q.neg()?, piv)?;
            idx = col.partition_point(|&(row, _)| row < r);
        }
        residual.push(col);
    }
    let mut used: Vec<u32> = residual.iter().flatten().map(|&(r, _)| r).collect();
    used.sort_unstable();
    used.dedup();
    let mut dense = IntMatrix::zeros(used.len(), residual.len());
    for (j, col) in residual.iter().enumerate() {
        for (r, v) in col {
            let i = used.binary_search(r).expect("row collected");
            dense.set(i, j, v.to_big());
        }
    }
    let snf = smith_normal_form(&dense);
    debug_assert_eq!(snf.rank, residual.len());
    Some(Reduction {
        rank,
        unit_rows,
        torsion: snf.torsion(),
    })
}
