use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Dense row-major matrix of arbitrary-precision integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    /// Panics if the rows have different lengths.
    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        IntMatrix {
            rows: rows.len(),
            cols,
            data: rows.iter().flatten().cloned().map(Into::into).collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        self.data[r * self.cols + c] = v;
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for c in 0..self.cols {
                self.data.swap(a * self.cols + c, b * self.cols + c);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for r in 0..self.rows {
                self.data.swap(r * self.cols + a, r * self.cols + b);
            }
        }
    }

    /// row[dst] -= q · row[src]
    fn row_sub(&mut self, dst: usize, src: usize, q: &BigInt, from: usize) {
        for c in from..self.cols {
            let s = &self.data[src * self.cols + c];
            if !s.is_zero() {
                let v = q * s;
                self.data[dst * self.cols + c] -= v;
            }
        }
    }

    /// col[dst] -= q · col[src]
    fn col_sub(&mut self, dst: usize, src: usize, q: &BigInt, from: usize) {
        for r in from..self.rows {
            let s = &self.data[r * self.cols + src];
            if !s.is_zero() {
                let v = q * s;
                self.data[r * self.cols + dst] -= v;
            }
        }
    }

    fn row_add(&mut self, dst: usize, src: usize, from: usize) {
        for c in from..self.cols {
            let s = self.data[src * self.cols + c].clone();
            self.data[dst * self.cols + c] += s;
        }
    }
}

/// Invariant factors and rank of an integer matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithForm {
    /// `d₁ | d₂ | … | d_r`, all positive.
    pub factors: Vec<BigInt>,
    pub rank: usize,
}

impl SmithForm {
    /// Factors greater than one.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.factors.iter().filter(|d| !d.is_one()).cloned().collect()
    }
}

/// Smith normal form by unimodular row and column operations, always
/// pivoting on a nonzero entry of least magnitude.
pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let mut a = m.clone();
    let (rows, cols) = (a.rows, a.cols);
    let mut factors = Vec::new();
    for t in 0..rows.min(cols) {
        let Some((pr, pc)) = min_entry(&a, t) else {
            break;
        };
        a.swap_rows(t, pr);
        a.swap_cols(t, pc);
        loop {
            let p = a.get(t, t).clone();
            let mut dirty = false;
            for r in t + 1..rows {
                if !a.get(r, t).is_zero() {
                    let q = a.get(r, t).div_floor(&p);
                    a.row_sub(r, t, &q, t);
                    dirty |= !a.get(r, t).is_zero();
                }
            }
            for c in t + 1..cols {
                if !a.get(t, c).is_zero() {
                    let q = a.get(t, c).div_floor(&p);
                    a.col_sub(c, t, &q, t);
                    dirty |= !a.get(t, c).is_zero();
                }
            }
            if dirty {
                // a smaller remainder appeared in row or column t
                let (pr, pc) = min_in_cross(&a, t);
                a.swap_rows(t, pr);
                a.swap_cols(t, pc);
                continue;
            }
            // the pivot must divide the whole remaining block
            let bad = (t + 1..rows).find(|&r| (t + 1..cols).any(|c| !a.get(r, c).is_multiple_of(&p)));
            match bad {
                Some(r) => a.row_add(t, r, t),
                None => break,
            }
        }
        factors.push(a.get(t, t).abs());
    }
    let rank = factors.len();
    SmithForm { factors, rank }
}

fn min_entry(a: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for r in t..a.rows {
        for c in t..a.cols {
            let v = a.get(r, c);
            if !v.is_zero() && best.is_none_or(|(br, bc)| v.abs() < a.get(br, bc).abs()) {
                best = Some((r, c));
                if v.abs().is_one() {
                    return best;
                }
            }
        }
    }
    best
}

fn min_in_cross(a: &IntMatrix, t: usize) -> (usize, usize) {
    let mut best = (t, t);
    let cand = (t..a.rows).map(|r| (r, t)).chain((t + 1..a.cols).map(|c| (t, c)));
    for (r, c) in cand {
        let v = a.get(r, c);
        let b = a.get(best.0, best.1);
        if !v.is_zero() && (b.is_zero() || v.abs() < b.abs()) {
            best = (r, c);
        }
    }
    best
}

/// Rank over ℚ by fraction-free (Bareiss) elimination.
pub fn bareiss_rank(m: &IntMatrix) -> usize {
    let mut a = m.clone();
    let (rows, cols) = (a.rows, a.cols);
    let mut prev = BigInt::one();
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pr) = (rank..rows).find(|&r| !a.get(r, c).is_zero()) else {
            continue;
        };
        a.swap_rows(rank, pr);
        let p = a.get(rank, c).clone();
        for r in rank + 1..rows {
            let f = a.get(r, c).clone();
            for k in c..cols {
                let v = (&p * a.get(r, k) - &f * a.get(rank, k)) / &prev;
                a.set(r, k, v);
            }
        }
        prev = p;
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| x.into()).collect()
    }

    #[test]
    fn identity() {
        let s = smith_normal_form(&IntMatrix::identity(3));
        assert_eq!(s.factors, big(&[1, 1, 1]));
        assert_eq!(s.rank, 3);
        assert!(s.torsion().is_empty());
    }

    #[test]
    fn two_by_two() {
        let s = smith_normal_form(&IntMatrix::from_rows(&[vec![2, 4], vec![6, 8]]));
        assert_eq!(s.factors, big(&[2, 4]));
        assert_eq!(s.rank, 2);
    }

    #[test]
    fn zero_and_empty() {
        assert_eq!(smith_normal_form(&IntMatrix::zeros(3, 4)).rank, 0);
        assert_eq!(smith_normal_form(&IntMatrix::zeros(0, 0)).factors, vec![]);
        assert_eq!(bareiss_rank(&IntMatrix::zeros(2, 5)), 0);
    }

    #[test]
    fn needs_the_divisibility_fix() {
        // diag(2, 3) ~ diag(1, 6)
        let s = smith_normal_form(&IntMatrix::from_rows(&[vec![2, 0], vec![0, 3]]));
        assert_eq!(s.factors, big(&[1, 6]));
        let s = smith_normal_form(&IntMatrix::from_rows(&[vec![4, 0, 0], vec![0, 6, 0], vec![0, 0, 10]]));
        assert_eq!(s.factors, big(&[2, 2, 60]));
    }

    #[test]
    fn rank_deficient() {
        let m = IntMatrix::from_rows(&[vec![1, 2, 3], vec![2, 4, 6], vec![1, 0, 1]]);
        assert_eq!(smith_normal_form(&m).rank, 2);
        assert_eq!(bareiss_rank(&m), 2);
    }
}
