use super::cube::Cube;
use super::poly::KhPolynomial;
use crate::error::{Error, Result};
use crate::linalg::{rank, IntMatrix};
use rayon::prelude::*;
use std::collections::{BTreeMap, HashMap};

/// A basis word: a state and a choice of 1 or X on each of its circles
/// (bit set = X).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Generator {
    pub state: u64,
    pub mask: u64,
    pub i: i32,
    pub j: i32,
}

/// Enumerates all basis words with their bigradings.
pub fn generators(cube: &Cube) -> Vec<Generator> {
    let (np, nm) = (cube.n_plus as i32, cube.n_minus as i32);
    let mut out = Vec::new();
    for (bits, res) in cube.vertices.iter().enumerate() {
        let r = (bits as u64).count_ones() as i32;
        let k = res.circle_count() as u32;
        for mask in 0..1u64 << k {
            let x = mask.count_ones() as i32;
            out.push(Generator {
                state: bits as u64,
                mask,
                i: r - nm,
                j: (k as i32 - 2 * x) + r + np - 2 * nm,
            });
        }
    }
    out
}

/// Matrix of the cube differential from `src` to `dst` generators.
pub(crate) fn differential_matrix(
    cube: &Cube,
    src: &[Generator],
    dst: &[Generator],
    lee: bool,
) -> Result<IntMatrix> {
    let index: HashMap<(u64, u64), usize> = dst
        .iter()
        .enumerate()
        .map(|(r, g)| ((g.state, g.mask), r))
        .collect();
    let mut triplets = Vec::new();
    let mut buf = Vec::new();
    for (c, g) in src.iter().enumerate() {
        for m in (0..cube.n).filter(|&m| g.state >> m & 1 == 0) {
            let edge = cube.edge(g.state, m).expect("edge present");
            edge.apply(g.mask, lee, &mut buf);
            let t = g.state | 1 << m;
            for &(mask, v) in &buf {
                let r = *index.get(&(t, mask)).ok_or_else(|| {
                    Error::Internal(format!(
                        "differential leaves the target degree at state {t:b}"
                    ))
                })?;
                triplets.push((r, c, v));
            }
        }
    }
    Ok(IntMatrix::from_triplets(dst.len(), src.len(), triplets))
}

/// The Khovanov chain complex split by bidegree.
#[derive(Debug, Clone)]
pub struct BigradedComplex {
    pub n_plus: usize,
    pub n_minus: usize,
    groups: BTreeMap<(i32, i32), Vec<Generator>>,
    /// `d[(i, j)]` maps C^{i,j} to C^{i+1,j}.
    d: BTreeMap<(i32, i32), IntMatrix>,
}

impl BigradedComplex {
    pub fn from_cube(cube: &Cube) -> Result<Self> {
        let mut groups: BTreeMap<(i32, i32), Vec<Generator>> = BTreeMap::new();
        for g in generators(cube) {
            groups.entry((g.i, g.j)).or_default().push(g);
        }
        let empty = Vec::new();
        let keys: Vec<(i32, i32)> = groups.keys().copied().collect();
        let d = keys
            .par_iter()
            .map(|&(i, j)| {
                let dst = groups.get(&(i + 1, j)).unwrap_or(&empty);
                differential_matrix(cube, &groups[&(i, j)], dst, false).map(|m| ((i, j), m))
            })
            .collect::<Result<BTreeMap<_, _>>>()?;
        let complex = BigradedComplex {
            n_plus: cube.n_plus,
            n_minus: cube.n_minus,
            groups,
            d,
        };
        complex.check_d_squared()?;
        Ok(complex)
    }

    pub fn bidegrees(&self) -> impl Iterator<Item = (i32, i32)> + '_ {
        self.groups.keys().copied()
    }

    pub fn generators(&self, i: i32, j: i32) -> &[Generator] {
        self.groups.get(&(i, j)).map_or(&[], Vec::as_slice)
    }

    pub fn differential(&self, i: i32, j: i32) -> Option<&IntMatrix> {
        self.d.get(&(i, j))
    }

    /// Total chain-group dimension in each homological degree.
    pub fn dims_by_degree(&self) -> BTreeMap<i32, usize> {
        let mut out = BTreeMap::new();
        for (&(i, _), g) in &self.groups {
            *out.entry(i).or_insert(0) += g.len();
        }
        out
    }

    fn check_d_squared(&self) -> Result<()> {
        for (&(i, j), d0) in &self.d {
            if let Some(d1) = self.d.get(&(i + 1, j)) {
                if d1.rows() > 0 && d0.cols() > 0 && !d1.mul(d0).is_zero() {
                    return Err(Error::Internal(format!("d² ≠ 0 at bidegree ({i}, {j})")));
                }
            }
        }
        Ok(())
    }

    /// dim Kh^{i,j} = dim C^{i,j} - rank d^{i,j} - rank d^{i-1,j}.
    pub fn homology(&self) -> KhPolynomial {
        let ranks: HashMap<(i32, i32), usize> =
            self.d.par_iter().map(|(&k, m)| (k, rank(m))).collect();
        let mut p = KhPolynomial::default();
        for (&(i, j), g) in &self.groups {
            let out = ranks.get(&(i, j)).copied().unwrap_or(0);
            let inc = ranks.get(&(i - 1, j)).copied().unwrap_or(0);
            p.add(i, j, g.len() - out - inc);
        }
        p
    }
}

/// Khovanov homology of a built cube.
pub fn khovanov_homology(cube: &Cube) -> Result<KhPolynomial> {
    Ok(BigradedComplex::from_cube(cube)?.homology())
}
