use super::IntMatrix;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Coefficient ring for fraction-free elimination. `None` signals overflow.
pub(crate) trait Coef: Clone + PartialEq + std::fmt::Debug {
    fn from_big(v: &BigInt) -> Option<Self>;
    fn is_zero(&self) -> bool;
    /// `a*x - b*y`
    fn cross(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self>;
    fn gcd(a: &Self, b: &Self) -> Self;
    fn div_exact(&self, d: &Self) -> Self;
    fn is_one(&self) -> bool;
    fn abs(&self) -> Self;
}

impl Coef for i64 {
    fn from_big(v: &BigInt) -> Option<Self> {
        v.to_i64()
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn cross(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self> {
        a.checked_mul(*x)?.checked_sub(b.checked_mul(*y)?)
    }
    fn gcd(a: &Self, b: &Self) -> Self {
        Integer::gcd(a, b)
    }
    fn div_exact(&self, d: &Self) -> Self {
        self / d
    }
    fn is_one(&self) -> bool {
        *self == 1
    }
    fn abs(&self) -> Self {
        i64::abs(*self)
    }
}

impl Coef for BigInt {
    fn from_big(v: &BigInt) -> Option<Self> {
        Some(v.clone())
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn cross(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self> {
        Some(a * x - b * y)
    }
    fn gcd(a: &Self, b: &Self) -> Self {
        Integer::gcd(a, b)
    }
    fn div_exact(&self, d: &Self) -> Self {
        self / d
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
    fn abs(&self) -> Self {
        Signed::abs(self)
    }
}

type SparseVec<T> = Vec<(usize, T)>;

/// `p*v - q*w`, sorted and without zeros.
fn combine<T: Coef>(p: &T, v: &SparseVec<T>, q: &T, w: &SparseVec<T>) -> Option<SparseVec<T>> {
    let zero = || T::from_big(&BigInt::zero()).expect("zero fits");
    let mut out = Vec::with_capacity(v.len() + w.len());
    let (mut i, mut j) = (0, 0);
    while i < v.len() || j < w.len() {
        let ci = v.get(i).map_or(usize::MAX, |e| e.0);
        let cj = w.get(j).map_or(usize::MAX, |e| e.0);
        let (c, val) = if ci < cj {
            i += 1;
            (ci, T::cross(p, &v[i - 1].1, &zero(), &zero())?)
        } else if cj < ci {
            j += 1;
            (cj, T::cross(&zero(), &zero(), q, &w[j - 1].1)?)
        } else {
            i += 1;
            j += 1;
            (ci, T::cross(p, &v[i - 1].1, q, &w[j - 1].1)?)
        };
        if !val.is_zero() {
            out.push((c, val));
        }
    }
    Some(out)
}

/// Divides out the gcd of the entries.
fn make_primitive<T: Coef>(v: &mut SparseVec<T>) {
    let Some(first) = v.first() else { return };
    let mut g = first.1.abs();
    for (_, x) in v.iter().skip(1) {
        if g.is_one() {
            return;
        }
        g = T::gcd(&g, x);
    }
    if !g.is_one() && !g.is_zero() {
        for (_, x) in v.iter_mut() {
            *x = x.div_exact(&g);
        }
    }
}

/// Row echelon basis grown one vector at a time.
#[derive(Debug, Clone)]
pub(crate) struct Echelon<T> {
    rows: Vec<SparseVec<T>>,
    pivot_row: std::collections::HashMap<usize, usize>,
}

impl<T: Coef> Echelon<T> {
    pub(crate) fn new() -> Self {
        Echelon {
            rows: Vec::new(),
            pivot_row: Default::default(),
        }
    }

    /// Reduces `v` against the basis. Returns `Some(true)` if it was
    /// independent (and is now part of the basis), `None` on overflow.
    pub(crate) fn insert(&mut self, mut v: SparseVec<T>) -> Option<bool> {
        make_primitive(&mut v);
        while let Some((lead, a)) = v.first().cloned() {
            match self.pivot_row.get(&lead) {
                None => {
                    self.pivot_row.insert(lead, self.rows.len());
                    self.rows.push(v);
                    return Some(true);
                }
                Some(&r) => {
                    let row = &self.rows[r];
                    let p = &row[0].1;
                    let g = T::gcd(p, &a);
                    let (pp, aa) = (p.div_exact(&g), a.div_exact(&g));
                    v = combine(&pp, &v, &aa, row)?;
                    make_primitive(&mut v);
                }
            }
        }
        Some(false)
    }

    pub(crate) fn rank(&self) -> usize {
        self.rows.len()
    }

    pub(crate) fn into_rows(self) -> Vec<SparseVec<T>> {
        self.rows
    }
}

fn convert<T: Coef>(v: &[(usize, BigInt)]) -> Option<SparseVec<T>> {
    v.iter().map(|(c, x)| Some((*c, T::from_big(x)?))).collect()
}

/// Ranks after each successive insertion; `out[i]` is the rank of the first
/// `i + 1` vectors.
fn prefix_ranks_with<T: Coef>(vectors: &[Vec<(usize, BigInt)>]) -> Option<Vec<usize>> {
    let mut e = Echelon::<T>::new();
    let mut out = Vec::with_capacity(vectors.len());
    for v in vectors {
        e.insert(convert(v)?)?;
        out.push(e.rank());
    }
    Some(out)
}

/// Rank of each prefix of `vectors` (sparse `(index, value)` lists).
///
/// Runs in checked `i64` arithmetic and restarts with big integers on
/// overflow.
pub fn prefix_ranks(vectors: &[Vec<(usize, BigInt)>]) -> Vec<usize> {
    prefix_ranks_with::<i64>(vectors)
        .or_else(|| prefix_ranks_with::<BigInt>(vectors))
        .expect("big-integer elimination cannot overflow")
}

pub fn rank(m: &IntMatrix) -> usize {
    prefix_ranks(m.row_vectors()).last().copied().unwrap_or(0)
}

/// Public incremental echelon basis over the integers.
#[derive(Debug, Clone)]
pub struct EchelonBasis {
    inner: Echelon<BigInt>,
}

impl Default for EchelonBasis {
    fn default() -> Self {
        Self::new()
    }
}

impl EchelonBasis {
    pub fn new() -> Self {
        EchelonBasis {
            inner: Echelon::new(),
        }
    }

    /// Returns whether `v` was independent of the vectors inserted so far.
    pub fn insert(&mut self, v: &[(usize, BigInt)]) -> bool {
        self.inner
            .insert(v.to_vec())
            .expect("big-integer elimination cannot overflow")
    }

    pub fn rank(&self) -> usize {
        self.inner.rank()
    }
}

/// Integer basis of the right kernel {x : M x = 0}; each vector is primitive.
pub fn kernel_basis(m: &IntMatrix) -> Vec<Vec<BigInt>> {
    let cols = m.cols();
    let mut e = Echelon::<BigInt>::new();
    for r in m.row_vectors() {
        e.insert(r.clone()).expect("no overflow");
    }
    // back-substitute to reduced form, fraction-free
    let mut rows = e.into_rows();
    rows.sort_by_key(|r| r[0].0);
    for i in (0..rows.len()).rev() {
        let (pc, pv) = rows[i][0].clone();
        for k in 0..i {
            let Ok(pos) = rows[k].binary_search_by_key(&pc, |e| e.0) else {
                continue;
            };
            let a = rows[k][pos].1.clone();
            let g = Integer::gcd(&pv, &a);
            let (pp, aa) = (&pv / &g, &a / &g);
            let mut v = combine(&pp, &rows[k], &aa, &rows[i]).expect("no overflow");
            make_primitive(&mut v);
            rows[k] = v;
        }
    }
    let pivots: Vec<usize> = rows.iter().map(|r| r[0].0).collect();
    let is_pivot = {
        let mut p = vec![false; cols];
        for &c in &pivots {
            p[c] = true;
        }
        p
    };
    let mut lcm = BigInt::one();
    for r in &rows {
        lcm = Integer::lcm(&lcm, &r[0].1);
    }
    let mut basis = Vec::new();
    for f in (0..cols).filter(|&c| !is_pivot[c]) {
        let mut x = vec![BigInt::zero(); cols];
        x[f] = lcm.clone();
        for r in &rows {
            if let Ok(pos) = r.binary_search_by_key(&f, |e| e.0) {
                let (pc, pv) = &r[0];
                x[*pc] = -(&r[pos].1 * &lcm) / pv;
            }
        }
        let g = x.iter().fold(BigInt::zero(), |g, v| Integer::gcd(&g, v));
        if !Zero::is_zero(&g) {
            for v in x.iter_mut() {
                *v = &*v / &g;
            }
        }
        basis.push(x);
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: &[(usize, i64)]) -> Vec<(usize, BigInt)> {
        v.iter().map(|&(c, x)| (c, BigInt::from(x))).collect()
    }

    #[test]
    fn rank_of_small_matrices() {
        assert_eq!(rank(&IntMatrix::from_dense(&[vec![1, 2], vec![2, 4]])), 1);
        assert_eq!(rank(&IntMatrix::from_dense(&[vec![2, 0], vec![0, 3]])), 2);
        assert_eq!(rank(&IntMatrix::zeros(3, 4)), 0);
    }

    #[test]
    fn overflow_falls_back_to_bigint() {
        let huge = i64::MAX / 2;
        let vs = vec![
            big(&[(0, huge), (1, 3)]),
            big(&[(0, 3), (1, huge)]),
            big(&[(0, huge + 3), (1, huge + 3)]),
        ];
        assert!(prefix_ranks_with::<i64>(&vs).is_none());
        assert_eq!(prefix_ranks(&vs), vec![1, 2, 2]);
    }

    #[test]
    fn kernel_vectors_are_annihilated() {
        let m = IntMatrix::from_dense(&[vec![1, 1, 0, 2], vec![0, 2, 2, 0]]);
        let k = kernel_basis(&m);
        assert_eq!(k.len(), 2);
        for x in &k {
            for r in 0..m.rows() {
                let s: BigInt = m.row(r).iter().map(|(c, v)| v * &x[*c]).sum();
                assert!(Zero::is_zero(&s));
            }
        }
    }

    #[test]
    fn echelon_basis_detects_dependence() {
        let mut e = EchelonBasis::new();
        assert!(e.insert(&big(&[(0, 2), (2, 4)])));
        assert!(!e.insert(&big(&[(0, -1), (2, -2)])));
        assert!(e.insert(&big(&[(1, 1)])));
        assert_eq!(e.rank(), 2);
    }
}
