//! Division-free determinants over commutative rings.

use std::collections::HashMap;

pub trait RingElem: Clone {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
}

/// Laplace expansion along the last row of each leading minor, memoised on
/// the set of columns in use. Costs at most `2^r · r` ring multiplications
/// and far fewer on sparse (e.g. Hessenberg) matrices, since zero entries
/// are never expanded.
pub fn determinant<T: RingElem>(matrix: &[Vec<T>]) -> T {
    let r = matrix.len();
    assert!(r < 64, "determinant: matrix too large");
    assert!(matrix.iter().all(|row| row.len() == r), "determinant: not square");
    let full: u64 = if r == 0 { 0 } else { u64::MAX >> (64 - r) };
    let mut memo = HashMap::new();
    minor(matrix, full, &mut memo)
}

fn minor<T: RingElem>(m: &[Vec<T>], cols: u64, memo: &mut HashMap<u64, T>) -> T {
    if cols == 0 {
        return T::one();
    }
    if let Some(v) = memo.get(&cols) {
        return v.clone();
    }
    let k = cols.count_ones() as usize;
    let row = &m[k - 1];
    let mut acc = T::zero();
    let mut pos = 0;
    for (j, entry) in row.iter().enumerate() {
        if cols & (1 << j) == 0 {
            continue;
        }
        if !entry.is_zero() {
            let sub = minor(m, cols & !(1 << j), memo);
            if !sub.is_zero() {
                let term = entry.mul(&sub);
                acc = if (k - 1 + pos).is_multiple_of(2) {
                    acc.add(&term)
                } else {
                    acc.add(&term.neg())
                };
            }
        }
        pos += 1;
    }
    memo.insert(cols, acc.clone());
    acc
}
