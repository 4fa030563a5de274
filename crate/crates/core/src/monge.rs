//! Min-plus algebra on Monge matrices.
//!
//! Every product is reduced to row minima of a totally monotone matrix and
//! solved with SMAWK, always returning the leftmost minimizing column.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::types::Cost;

/// Values that can be added and compared.
pub trait MinPlus: Copy + Ord {
    fn plus(self, rhs: Self) -> Self;
}

impl MinPlus for Cost {
    #[inline]
    fn plus(self, rhs: Cost) -> Cost {
        self + rhs
    }
}

impl MinPlus for i128 {
    #[inline]
    fn plus(self, rhs: i128) -> i128 {
        self + rhs
    }
}

impl MinPlus for i64 {
    #[inline]
    fn plus(self, rhs: i64) -> i64 {
        self + rhs
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MongeError {
    #[error("dimension mismatch: {0} vs {1}")]
    Dimension(usize, usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Copy> Matrix<T> {
    pub fn filled(rows: usize, cols: usize, v: T) -> Matrix<T> {
        Matrix { rows, cols, data: vec![v; rows * cols] }
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> T) -> Matrix<T> {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Matrix<T> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> T {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn map<U: Copy>(&self, f: impl Fn(T) -> U) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|&v| f(v)).collect() }
    }
}

fn smawk_rec<T: Ord, F: Fn(usize, usize) -> T>(
    rows: &[usize],
    cols: &[usize],
    f: &F,
    out: &mut [usize],
) {
    if rows.is_empty() {
        return;
    }
    let mut st: Vec<usize> = Vec::with_capacity(rows.len());
    for &c in cols {
        while let Some(&top) = st.last() {
            let r = rows[st.len() - 1];
            if f(r, top) <= f(r, c) {
                break;
            }
            st.pop();
        }
        if st.len() < rows.len() {
            st.push(c);
        }
    }
    let odd: Vec<usize> = rows.iter().skip(1).step_by(2).copied().collect();
    smawk_rec(&odd, &st, f, out);
    let mut k = 0;
    for i in (0..rows.len()).step_by(2) {
        let r = rows[i];
        let stop = if i + 1 < rows.len() { out[rows[i + 1]] } else { *st.last().unwrap() };
        let mut best = st[k];
        let mut bv = f(r, best);
        while st[k] != stop {
            k += 1;
            let v = f(r, st[k]);
            if v < bv {
                bv = v;
                best = st[k];
            }
        }
        out[r] = best;
    }
}

/// Leftmost row minima of a totally monotone `rows × cols` matrix given by
/// `f`. Uses `O(rows + cols)` evaluations.
pub fn smawk_row_minima<T: Ord, F: Fn(usize, usize) -> T>(
    rows: usize,
    cols: usize,
    f: F,
) -> Vec<usize> {
    let mut out = vec![0; rows];
    if rows == 0 || cols == 0 {
        return out;
    }
    let r: Vec<usize> = (0..rows).collect();
    let c: Vec<usize> = (0..cols).collect();
    smawk_rec(&r, &c, &f, &mut out);
    out
}

/// Leftmost row minima by scanning.
pub fn naive_row_minima<T: MinPlus>(m: &Matrix<T>) -> Vec<usize> {
    (0..m.rows())
        .map(|i| {
            let row = m.row(i);
            let mut best = 0;
            for (j, &v) in row.iter().enumerate() {
                if v < row[best] {
                    best = j;
                }
            }
            best
        })
        .collect()
}

/// `C[i][j] = min_t A[i][t] + B[t][j]` for Monge `B`, together with the
/// leftmost minimizing `t` per entry.
pub fn monge_minplus_arg<T: MinPlus>(
    a: &Matrix<T>,
    b: &Matrix<T>,
) -> Result<(Matrix<T>, Matrix<u32>), MongeError> {
    if a.cols() != b.rows() {
        return Err(MongeError::Dimension(a.cols(), b.rows()));
    }
    let (p, q, r) = (a.rows(), a.cols(), b.cols());
    let mut data = Vec::with_capacity(p * r);
    let mut args = Vec::with_capacity(p * r);
    if q == 0 {
        return Err(MongeError::Dimension(0, 0));
    }
    for i in 0..p {
        let ai = a.row(i);
        let arg = smawk_row_minima(r, q, |j, t| ai[t].plus(b.get(t, j)));
        for (j, &t) in arg.iter().enumerate() {
            data.push(ai[t].plus(b.get(t, j)));
            args.push(t as u32);
        }
    }
    Ok((Matrix { rows: p, cols: r, data }, Matrix { rows: p, cols: r, data: args }))
}

/// Min-plus product of Monge matrices via one SMAWK per output row.
pub fn monge_minplus<T: MinPlus>(a: &Matrix<T>, b: &Matrix<T>) -> Result<Matrix<T>, MongeError> {
    Ok(monge_minplus_arg(a, b)?.0)
}

/// Cubic reference product.
pub fn naive_minplus<T: MinPlus>(a: &Matrix<T>, b: &Matrix<T>) -> Result<Matrix<T>, MongeError> {
    if a.cols() != b.rows() {
        return Err(MongeError::Dimension(a.cols(), b.rows()));
    }
    Ok(Matrix::from_fn(a.rows(), b.cols(), |i, j| {
        (0..a.cols()).map(|t| a.get(i, t).plus(b.get(t, j))).min().unwrap()
    }))
}

/// `out[j] = min_t v[t] + M[t][j]` with the leftmost minimizing `t`.
pub fn vec_minplus_arg<T: MinPlus>(
    v: &[T],
    m: &Matrix<T>,
) -> Result<(Vec<T>, Vec<usize>), MongeError> {
    if v.len() != m.rows() || v.is_empty() {
        return Err(MongeError::Dimension(v.len(), m.rows()));
    }
    let arg = smawk_row_minima(m.cols(), m.rows(), |j, t| v[t].plus(m.get(t, j)));
    let vals = arg.iter().enumerate().map(|(j, &t)| v[t].plus(m.get(t, j))).collect();
    Ok((vals, arg))
}

pub fn vec_minplus<T: MinPlus>(v: &[T], m: &Matrix<T>) -> Result<Vec<T>, MongeError> {
    Ok(vec_minplus_arg(v, m)?.0)
}

/// Min-plus powers of one square Monge matrix, keyed by exponent.
#[derive(Clone, Debug)]
pub struct PowerTable<T> {
    pub powers: BTreeMap<u64, Matrix<T>>,
}

impl<T: MinPlus> PowerTable<T> {
    pub fn get(&self, e: u64) -> &Matrix<T> {
        &self.powers[&e]
    }
}

/// `D^e` by the floor/ceil descent; every matrix computed on the way is a
/// true power of `D` and is kept in the returned table.
pub fn monge_power_table<T: MinPlus>(d: &Matrix<T>, e: u64) -> PowerTable<T> {
    assert!(e >= 1, "exponent must be positive");
    assert_eq!(d.rows(), d.cols(), "power of a non-square matrix");
    let mut powers = BTreeMap::new();
    powers.insert(1, d.clone());
    fill_power(&mut powers, e);
    PowerTable { powers }
}

fn fill_power<T: MinPlus>(powers: &mut BTreeMap<u64, Matrix<T>>, e: u64) {
    if powers.contains_key(&e) {
        return;
    }
    let (lo, hi) = (e / 2, e - e / 2);
    fill_power(powers, hi);
    fill_power(powers, lo);
    let m = monge_minplus(&powers[&lo], &powers[&hi]).expect("square powers");
    powers.insert(e, m);
}

pub fn monge_power<T: MinPlus>(d: &Matrix<T>, e: u64) -> Matrix<T> {
    monge_power_table(d, e).powers.remove(&e).unwrap()
}

/// Adjacent `2 × 2` Monge check.
pub fn is_monge<T: MinPlus>(m: &Matrix<T>) -> bool {
    for i in 0..m.rows().saturating_sub(1) {
        for j in 0..m.cols().saturating_sub(1) {
            let lhs = m.get(i, j).plus(m.get(i + 1, j + 1));
            let rhs = m.get(i, j + 1).plus(m.get(i + 1, j));
            if lhs > rhs {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(rows: Vec<Vec<u64>>) -> Matrix<Cost> {
        Matrix::from_rows(rows.into_iter().map(|r| r.into_iter().map(Cost::new).collect()).collect())
    }

    #[test]
    fn smawk_small() {
        assert_eq!(smawk_row_minima(1, 1, |_, _| 5), vec![0]);
        let m = c(vec![vec![1, 2], vec![2, 1]]);
        assert_eq!(smawk_row_minima(2, 2, |i, j| m.get(i, j)), vec![0, 1]);
    }

    #[test]
    fn smawk_prefers_leftmost() {
        let m = c(vec![vec![3, 1, 1, 2], vec![4, 1, 1, 1], vec![5, 2, 1, 0]]);
        assert!(is_monge(&m));
        assert_eq!(smawk_row_minima(3, 4, |i, j| m.get(i, j)), vec![1, 1, 3]);
        assert_eq!(naive_row_minima(&m), vec![1, 1, 3]);
    }

    #[test]
    fn identity_and_line_metric() {
        let a = c(vec![vec![0, 3, 5], vec![2, 0, 1]]);
        let id = Matrix::from_fn(3, 3, |i, j| if i == j { Cost::ZERO } else { Cost::INF });
        assert_eq!(monge_minplus(&a, &id).unwrap(), a);
        let l = c(vec![vec![0, 1], vec![1, 0]]);
        assert_eq!(monge_minplus(&l, &l).unwrap(), l);
        assert!(monge_minplus(&a, &a).is_err());
    }

    #[test]
    fn vec_examples() {
        let id = Matrix::from_fn(3, 3, |i, j| if i == j { Cost::ZERO } else { Cost::INF });
        assert_eq!(vec_minplus(&[Cost::ZERO; 3], &id).unwrap(), vec![Cost::ZERO; 3]);
        let m = c(vec![vec![1, 2, 4], vec![0, 1, 2], vec![3, 1, 0]]);
        let v = [Cost::INF, Cost::new(5), Cost::INF];
        assert_eq!(vec_minplus(&v, &m).unwrap(), vec![Cost::new(5), Cost::new(6), Cost::new(7)]);
    }

    #[test]
    fn is_monge_examples() {
        assert!(is_monge(&c(vec![vec![4, 0, 9]])));
        assert!(is_monge(&c(vec![vec![0, 3], vec![0, 0]])));
        assert!(!is_monge(&c(vec![vec![1, 0], vec![0, 1]])));
    }

    #[test]
    fn powers_are_consistent() {
        let d = Matrix::from_fn(5, 5, |i, j| (i as i64 - j as i64).abs() * 2 + (i as i64 - j as i64).pow(2));
        assert!(is_monge(&d));
        let t = monge_power_table(&d, 5);
        assert!(t.powers.contains_key(&2) && t.powers.contains_key(&3));
        let mut naive = d.clone();
        for _ in 1..5 {
            naive = naive_minplus(&naive, &d).unwrap();
        }
        assert_eq!(t.get(5), &naive);
        assert_eq!(monge_power(&d, 1), d);
    }
}
