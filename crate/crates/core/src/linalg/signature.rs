use super::IntMatrix;
use crate::error::{Error, Result};
use num_rational::BigRational;
use num_traits::{Signed, Zero};

/// Signature (#positive - #negative eigenvalues) of a symmetric integer
/// matrix, by congruence diagonalization over the rationals.
pub fn symmetric_signature(m: &IntMatrix) -> Result<i64> {
    if !m.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let n = m.rows();
    let mut a: Vec<Vec<BigRational>> = vec![vec![BigRational::zero(); n]; n];
    for (r, c, v) in m.entries() {
        a[r][c] = BigRational::from_integer(v.clone());
    }
    let mut live: Vec<usize> = (0..n).collect();
    let mut sig = 0i64;
    while !live.is_empty() {
        if let Some(pos) = live.iter().position(|&i| !a[i][i].is_zero()) {
            let p = live.swap_remove(pos);
            let piv = a[p][p].clone();
            sig += if piv.is_positive() { 1 } else { -1 };
            let col: Vec<BigRational> = live.iter().map(|&i| a[i][p].clone()).collect();
            for (x, &i) in live.iter().enumerate() {
                if col[x].is_zero() {
                    continue;
                }
                let f = &col[x] / &piv;
                for (y, &j) in live.iter().enumerate() {
                    if !col[y].is_zero() {
                        let t = &f * &col[y];
                        a[i][j] -= t;
                    }
                }
            }
            continue;
        }
        // zero diagonal: pair off a nonzero off-diagonal entry as a
        // hyperbolic 2x2 block, which has signature 0
        let found = live.iter().enumerate().find_map(|(x, &i)| {
            live.iter()
                .enumerate()
                .find(|&(_, &j)| !a[i][j].is_zero())
                .map(|(y, _)| (x, y))
        });
        let Some((x, y)) = found else { break };
        let (i, j) = (live[x], live[y]);
        let b = a[i][j].clone();
        live.retain(|&k| k != i && k != j);
        // Schur complement against [[0, b], [b, 0]], whose inverse is
        // [[0, 1/b], [1/b, 0]]
        let ci: Vec<BigRational> = live.iter().map(|&k| a[k][i].clone()).collect();
        let cj: Vec<BigRational> = live.iter().map(|&k| a[k][j].clone()).collect();
        for (u, &k) in live.iter().enumerate() {
            for (v, &l) in live.iter().enumerate() {
                let t = (&ci[u] * &cj[v] + &cj[u] * &ci[v]) / &b;
                if !t.is_zero() {
                    a[k][l] -= t;
                }
            }
        }
    }
    Ok(sig)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dense_signature(rows: &[Vec<i64>]) -> Result<i64> {
        symmetric_signature(&IntMatrix::from_dense(rows))
    }
    use num_traits::One;
    use proptest::prelude::*;

    /// Characteristic polynomial by Faddeev-LeVerrier, coefficients of
    /// x^n, x^{n-1}, ..., x^0.
    fn char_poly(a: &[Vec<i64>]) -> Vec<BigRational> {
        let n = a.len();
        let am: Vec<Vec<BigRational>> = a
            .iter()
            .map(|r| {
                r.iter()
                    .map(|&v| BigRational::from_integer(v.into()))
                    .collect()
            })
            .collect();
        let mul = |x: &Vec<Vec<BigRational>>, y: &Vec<Vec<BigRational>>| {
            let mut z = vec![vec![BigRational::zero(); n]; n];
            for i in 0..n {
                for k in 0..n {
                    if x[i][k].is_zero() {
                        continue;
                    }
                    for j in 0..n {
                        z[i][j] += &x[i][k] * &y[k][j];
                    }
                }
            }
            z
        };
        let mut coeffs = vec![BigRational::one()];
        let mut mk = vec![vec![BigRational::zero(); n]; n];
        for k in 1..=n {
            let mut next = mul(&am, &mk);
            for (i, row) in next.iter_mut().enumerate() {
                row[i] += &coeffs[k - 1];
            }
            mk = next;
            let amk = mul(&am, &mk);
            let tr: BigRational = (0..n).map(|i| amk[i][i].clone()).sum();
            coeffs.push(-tr / BigRational::from_integer((k as i64).into()));
        }
        coeffs
    }

    fn sign_changes(c: &[BigRational]) -> i64 {
        let signs: Vec<bool> = c
            .iter()
            .filter(|v| !v.is_zero())
            .map(|v| v.is_positive())
            .collect();
        signs.windows(2).filter(|w| w[0] != w[1]).count() as i64
    }

    /// For a real-rooted polynomial Descartes' rule is exact.
    fn oracle_signature(a: &[Vec<i64>]) -> i64 {
        let c = char_poly(a);
        let n = c.len() - 1;
        let pos = sign_changes(&c);
        let neg_coeffs: Vec<BigRational> = c
            .iter()
            .enumerate()
            .map(|(i, v)| {
                if (n - i) % 2 == 1 {
                    -v.clone()
                } else {
                    v.clone()
                }
            })
            .collect();
        pos - sign_changes(&neg_coeffs)
    }

    #[test]
    fn small_cases() {
        assert_eq!(dense_signature(&[vec![0, 1], vec![1, 0]]).unwrap(), 0);
        assert_eq!(dense_signature(&[vec![2, 1], vec![1, 2]]).unwrap(), 2);
        assert_eq!(dense_signature(&[vec![-3]]).unwrap(), -1);
        assert_eq!(dense_signature(&[]).unwrap(), 0);
        assert_eq!(
            dense_signature(&[vec![0, 0, 1], vec![0, 0, 1], vec![1, 1, 0]]).unwrap(),
            0
        );
    }

    #[test]
    fn asymmetric_rejected() {
        assert!(matches!(
            dense_signature(&[vec![0, 1], vec![2, 0]]),
            Err(Error::NotSymmetric)
        ));
    }

    fn symmetric(max: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
        (0..=max).prop_flat_map(|n| {
            proptest::collection::vec(-3i64..=3, n * n).prop_map(move |v| {
                let mut m = vec![vec![0; n]; n];
                for i in 0..n {
                    for j in 0..=i {
                        let x = v[i * n + j];
                        // sparse zero diagonals exercise the hyperbolic branch
                        let x = if i == j && x.abs() < 2 { 0 } else { x };
                        m[i][j] = x;
                        m[j][i] = x;
                    }
                }
                m
            })
        })
    }

    proptest! {
        #[test]
        fn matches_characteristic_polynomial(m in symmetric(6)) {
            prop_assert_eq!(dense_signature(&m).unwrap(), oracle_signature(&m));
        }
    }
}
