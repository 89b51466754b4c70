use crate::coloring::coloring_of;
use crate::diagram::{resolve_state, Diagram, Resolution, State};
use crate::error::{Error, Result};
use std::collections::VecDeque;

/// How the local change at one crossing acts on circles.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeMap {
    /// Source circles `a`, `b` merge into target circle `c`.
    Merge { a: usize, b: usize, c: usize },
    /// Source circle `c` splits into target circles `a`, `b`.
    Split { c: usize, a: usize, b: usize },
    /// One circle in, one circle out; carries the zero map.
    SingleCycle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BuilderKind {
    SourceSink,
    General,
}

/// An edge of the cube from `source` to `source` with bit `bit` set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub source: State,
    pub bit: usize,
    pub map: EdgeMap,
    pub sign: i8,
    /// Circles untouched by the edge: (source circle, target circle).
    pub carry: Vec<(usize, usize)>,
    /// Source circles on which the involution 1 ↦ 1, X ↦ -X acts first.
    pub theta_source: u64,
    /// Target circles on which the involution acts last.
    pub theta_target: u64,
}

fn parity_sign(mask: u64) -> i64 {
    if mask.count_ones() % 2 == 1 {
        -1
    } else {
        1
    }
}

impl Edge {
    /// Image of the basis word `mask` (bit set = X on that circle), with
    /// the edge sign applied. With `lee` the maps gain X⊗X ↦ 1 and
    /// X ↦ X⊗X + 1⊗1.
    pub fn apply(&self, mask: u64, lee: bool, out: &mut Vec<(u64, i64)>) {
        out.clear();
        let s = i64::from(self.sign) * parity_sign(mask & self.theta_source);
        let mut base = 0u64;
        for &(x, y) in &self.carry {
            if mask >> x & 1 == 1 {
                base |= 1 << y;
            }
        }
        match self.map {
            EdgeMap::Merge { a, b, c } => match (mask >> a & 1, mask >> b & 1) {
                (0, 0) => out.push((base, s)),
                (1, 1) => {
                    if lee {
                        out.push((base, s));
                    }
                }
                _ => out.push((base | 1 << c, s)),
            },
            EdgeMap::Split { c, a, b } => {
                if mask >> c & 1 == 0 {
                    out.push((base | 1 << b, s));
                    out.push((base | 1 << a, s));
                } else {
                    out.push((base | 1 << a | 1 << b, s));
                    if lee {
                        out.push((base, s));
                    }
                }
            }
            EdgeMap::SingleCycle => {}
        }
        for (t, v) in out.iter_mut() {
            *v *= parity_sign(*t & self.theta_target);
        }
    }
}

/// Bar-Natan sign: -1 iff an odd number of 1s precede position `m`.
pub fn bar_natan_sign(state: State, m: usize) -> i8 {
    if state.ones_before(m) % 2 == 1 {
        -1
    } else {
        1
    }
}

/// The cube of resolutions with its edge maps.
#[derive(Debug, Clone)]
pub struct Cube {
    pub n: usize,
    pub n_plus: usize,
    pub n_minus: usize,
    pub kind: BuilderKind,
    /// Indexed by state bits.
    pub vertices: Vec<Resolution>,
    /// Chosen circle orientations, `true` = the circle's reference direction.
    pub orientation: Vec<Vec<bool>>,
    edges: Vec<Option<Edge>>,
}

/// Largest crossing count for which a full cube is built.
pub const MAX_CUBE_CROSSINGS: usize = 20;

impl Cube {
    pub fn edge(&self, state: u64, m: usize) -> Option<&Edge> {
        self.edges[state as usize * self.n + m].as_ref()
    }

    pub fn edges(&self) -> impl Iterator<Item = &Edge> {
        self.edges.iter().flatten()
    }

    pub fn vertex(&self, state: u64) -> &Resolution {
        &self.vertices[state as usize]
    }

    pub fn has_single_cycle(&self) -> bool {
        self.edges().any(|e| e.map == EdgeMap::SingleCycle)
    }

    /// Circle counts grouped by number of 1-smoothings.
    pub fn circle_counts_by_level(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.n + 1];
        for (bits, r) in self.vertices.iter().enumerate() {
            out[(bits as u64).count_ones() as usize].push(r.circle_count());
        }
        out
    }
}

fn check_size(d: &Diagram) -> Result<()> {
    if d.n() > MAX_CUBE_CROSSINGS {
        return Err(Error::TooLarge {
            crossings: d.n(),
            limit: MAX_CUBE_CROSSINGS,
        });
    }
    Ok(())
}

fn resolve_all(d: &Diagram) -> Result<Vec<Resolution>> {
    (0..1u64 << d.n())
        .map(|b| resolve_state(d, State::from_bits(b, d.n())))
        .collect()
}

/// Does the chosen direction of circle `x` at `r` agree with circle `y` at
/// `s` on `arc`?
fn agrees(r: &Resolution, ox: bool, s: &Resolution, oy: bool, arc: usize) -> bool {
    (r.arc_forward[arc] == ox) == (s.arc_forward[arc] == oy)
}

fn first_arc(r: &Resolution, circle: usize) -> usize {
    r.circles[circle][0].0
}

fn classify(
    d: &Diagram,
    vertices: &[Resolution],
    orientation: &[Vec<bool>],
    bits: u64,
    m: usize,
    decorated: bool,
) -> Edge {
    let n = d.n();
    let src = &vertices[bits as usize];
    let tgt_bits = bits | 1 << m;
    let tgt = &vertices[tgt_bits as usize];
    let (os, ot) = (&orientation[bits as usize], &orientation[tgt_bits as usize]);
    let at_src = src.circles_at(d, m);
    let at_tgt = tgt.circles_at(d, m);
    let mut carry = Vec::new();
    let mut theta_source = 0u64;
    let mut theta_target = 0u64;
    for (x, &ox) in os.iter().enumerate().take(src.circle_count()) {
        if at_src.contains(&x) {
            continue;
        }
        let arc = first_arc(src, x);
        let y = tgt.arc_circle[arc];
        carry.push((x, y));
        if decorated && !agrees(src, ox, tgt, ot[y], arc) {
            theta_source |= 1 << x;
        }
    }
    let map = match (at_src.len(), at_tgt.len()) {
        (2, 1) => {
            let (a, b, c) = (at_src[0], at_src[1], at_tgt[0]);
            if decorated {
                for x in [a, b] {
                    if !agrees(src, os[x], tgt, ot[c], first_arc(src, x)) {
                        theta_source |= 1 << x;
                    }
                }
            }
            EdgeMap::Merge { a, b, c }
        }
        (1, 2) => {
            let (c, a, b) = (at_src[0], at_tgt[0], at_tgt[1]);
            if decorated {
                for y in [a, b] {
                    if !agrees(src, os[c], tgt, ot[y], first_arc(tgt, y)) {
                        theta_target |= 1 << y;
                    }
                }
            }
            EdgeMap::Split { c, a, b }
        }
        _ => EdgeMap::SingleCycle,
    };
    Edge {
        source: State::from_bits(bits, n),
        bit: m,
        map,
        sign: bar_natan_sign(State::from_bits(bits, n), m),
        carry,
        theta_source,
        theta_target,
    }
}

fn all_edges(
    d: &Diagram,
    vertices: &[Resolution],
    orientation: &[Vec<bool>],
    decorated: bool,
) -> Vec<Option<Edge>> {
    let n = d.n();
    let mut edges = vec![None; (1usize << n) * n];
    for bits in 0..1u64 << n {
        for m in (0..n).filter(|&m| bits >> m & 1 == 0) {
            edges[bits as usize * n + m] =
                Some(classify(d, vertices, orientation, bits, m, decorated));
        }
    }
    edges
}

/// Cube for checkerboard-colorable diagrams: plain m and Δ, Bar-Natan signs.
pub fn build_cube_source_sink(d: &Diagram) -> Result<Cube> {
    check_size(d)?;
    coloring_of(d)?;
    let vertices = resolve_all(d)?;
    let orientation: Vec<Vec<bool>> = vertices
        .iter()
        .map(|r| vec![true; r.circle_count()])
        .collect();
    let edges = all_edges(d, &vertices, &orientation, false);
    if let Some(e) = edges
        .iter()
        .flatten()
        .find(|e| e.map == EdgeMap::SingleCycle)
    {
        return Err(Error::SingleCycleFound {
            crossing: d.crossings()[e.bit].label as usize,
        });
    }
    Ok(Cube {
        n: d.n(),
        n_plus: d.n_plus(),
        n_minus: d.n_minus(),
        kind: BuilderKind::SourceSink,
        vertices,
        orientation,
        edges,
    })
}

/// Orients every circle by a breadth-first sweep from the all-1 state,
/// matching each new circle to its parent state's directions on as many
/// arcs as possible.
fn spanning_tree_orientations(n: usize, vertices: &[Resolution]) -> Vec<Vec<bool>> {
    let mut orientation: Vec<Option<Vec<bool>>> = vec![None; vertices.len()];
    let top = (1usize << n) - 1;
    orientation[top] = Some(vec![true; vertices[top].circle_count()]);
    let mut queue = VecDeque::from([top]);
    while let Some(p) = queue.pop_front() {
        for m in 0..n {
            let child = p ^ (1 << m);
            if orientation[child].is_some() {
                continue;
            }
            let (pr, cr) = (&vertices[p], &vertices[child]);
            let po = orientation[p].as_ref().expect("parent oriented");
            let mut votes = vec![0i64; cr.circle_count()];
            for arc in 0..cr.arc_circle.len() {
                let x = pr.arc_circle[arc];
                let y = cr.arc_circle[arc];
                votes[y] += if agrees(pr, po[x], cr, true, arc) {
                    1
                } else {
                    -1
                };
            }
            orientation[child] = Some(votes.iter().map(|&v| v >= 0).collect());
            queue.push_back(child);
        }
    }
    orientation
        .into_iter()
        .map(|o| o.expect("cube is connected"))
        .collect()
}

/// Solves for edge signs making every square anticommute.
fn solve_signs(n: usize, edges: &mut [Option<Edge>]) -> Result<()> {
    let idx = |bits: u64, m: usize| bits as usize * n + m;
    let num_vars = edges.len();
    let words = num_vars.div_ceil(64) + 1;
    let rhs_bit = num_vars;
    let mut rows: Vec<Vec<u64>> = Vec::new();
    let mut buf1 = Vec::new();
    let mut buf2 = Vec::new();
    for bits in 0..1u64 << n {
        for m in 0..n {
            for m2 in m + 1..n {
                if bits >> m & 1 == 1 || bits >> m2 & 1 == 1 {
                    continue;
                }
                let path = [
                    (idx(bits, m), idx(bits | 1 << m, m2)),
                    (idx(bits, m2), idx(bits | 1 << m2, m)),
                ];
                let e = |i: usize| edges[i].as_ref().expect("edge present");
                let k = e(path[0].0).carry.len()
                    + match e(path[0].0).map {
                        EdgeMap::Merge { .. } => 2,
                        _ => 1,
                    };
                let mut lambda: Option<i64> = None;
                let mut zero1 = true;
                let mut zero2 = true;
                let mut consistent = true;
                for mask in 0..1u64 << k {
                    let c1 = compose(e(path[0].0), e(path[0].1), mask, &mut buf1);
                    let c2 = compose(e(path[1].0), e(path[1].1), mask, &mut buf2);
                    zero1 &= c1.is_empty();
                    zero2 &= c2.is_empty();
                    if c1.is_empty() && c2.is_empty() {
                        continue;
                    }
                    let l = if c1 == c2 {
                        1
                    } else if c1.iter().zip(&c2).all(|(a, b)| a.0 == b.0 && a.1 == -b.1)
                        && c1.len() == c2.len()
                    {
                        -1
                    } else {
                        consistent = false;
                        break;
                    };
                    if *lambda.get_or_insert(l) != l {
                        consistent = false;
                        break;
                    }
                }
                if !consistent || zero1 != zero2 {
                    return Err(Error::Internal(format!(
                        "square at state {bits:b}, bits {m},{m2} does not commute up to sign"
                    )));
                }
                let Some(l) = lambda else { continue };
                // unsigned composites satisfy P1 = l*P2; the signs need
                // s1*s2*s3*s4 = -l
                let mut row = vec![0u64; words];
                for v in [path[0].0, path[0].1, path[1].0, path[1].1] {
                    row[v / 64] ^= 1 << (v % 64);
                }
                if l == 1 {
                    row[rhs_bit / 64] ^= 1 << (rhs_bit % 64);
                }
                rows.push(row);
            }
        }
    }
    let solution = gf2_solve(rows, num_vars)
        .ok_or_else(|| Error::Internal("no consistent edge signs".into()))?;
    for (v, e) in edges.iter_mut().enumerate() {
        if let Some(e) = e {
            e.sign = if solution[v] { -1 } else { 1 };
        }
    }
    Ok(())
}

/// Unsigned composite `g ∘ f` on one basis word, sorted.
fn compose(f: &Edge, g: &Edge, mask: u64, out: &mut Vec<(u64, i64)>) -> Vec<(u64, i64)> {
    let unsigned = |e: &Edge| Edge {
        sign: 1,
        ..e.clone()
    };
    let (f, g) = (unsigned(f), unsigned(g));
    f.apply(mask, false, out);
    let mid = out.clone();
    let mut acc = std::collections::BTreeMap::new();
    let mut tmp = Vec::new();
    for (w, c) in mid {
        g.apply(w, false, &mut tmp);
        for &(t, v) in &tmp {
            *acc.entry(t).or_insert(0i64) += c * v;
        }
    }
    acc.into_iter().filter(|&(_, v)| v != 0).collect()
}

/// Gaussian elimination over GF(2); the last used bit of each row is the
/// right-hand side. Free variables are set to 0.
fn gf2_solve(mut rows: Vec<Vec<u64>>, num_vars: usize) -> Option<Vec<bool>> {
    let get = |r: &Vec<u64>, v: usize| r[v / 64] >> (v % 64) & 1 == 1;
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut r0 = 0;
    for v in 0..num_vars {
        let Some(p) = (r0..rows.len()).find(|&r| get(&rows[r], v)) else {
            continue;
        };
        rows.swap(r0, p);
        let pivot = rows[r0].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != r0 && get(row, v) {
                for (a, b) in row.iter_mut().zip(&pivot) {
                    *a ^= b;
                }
            }
        }
        pivots.push((r0, v));
        r0 += 1;
    }
    if rows[r0..].iter().any(|r| get(r, num_vars)) {
        return None;
    }
    let mut x = vec![false; num_vars];
    for (r, v) in pivots {
        x[v] = get(&rows[r], num_vars);
    }
    Some(x)
}

/// Cube for any connected diagram: circle orientations from a spanning
/// tree, maps twisted by the involution where orientations disagree, zero
/// maps on single-cycle edges, and signs solved so squares anticommute.
pub fn build_cube_general(d: &Diagram) -> Result<Cube> {
    check_size(d)?;
    d.require_connected()?;
    let n = d.n();
    let vertices = resolve_all(d)?;
    let orientation = spanning_tree_orientations(n, &vertices);
    let mut edges = all_edges(d, &vertices, &orientation, true);
    solve_signs(n, &mut edges)?;
    Ok(Cube {
        n,
        n_plus: d.n_plus(),
        n_minus: d.n_minus(),
        kind: BuilderKind::General,
        vertices,
        orientation,
        edges,
    })
}

pub fn build_cube(d: &Diagram, kind: BuilderKind) -> Result<Cube> {
    match kind {
        BuilderKind::SourceSink => build_cube_source_sink(d),
        BuilderKind::General => build_cube_general(d),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::parse_gauss_code;

    #[test]
    fn left_trefoil_levels() {
        let d = parse_gauss_code("O1-U2-O3-U1-O2-U3-").unwrap();
        let cube = build_cube_source_sink(&d).unwrap();
        assert_eq!(
            cube.circle_counts_by_level(),
            vec![vec![3], vec![2, 2, 2], vec![1, 1, 1], vec![2]]
        );
        assert_eq!(cube.edges().count(), 12);
    }

    #[test]
    fn virtual_trefoil_has_single_cycles() {
        let d = parse_gauss_code("O1+O2+U1+U2+").unwrap();
        assert!(matches!(
            build_cube_source_sink(&d),
            Err(Error::NotColorable)
        ));
        let cube = build_cube_general(&d).unwrap();
        assert!(cube.has_single_cycle());
    }

    #[test]
    fn bar_natan_signs() {
        let s = State::from_slice(&[true, false, true]);
        assert_eq!(bar_natan_sign(s, 1), -1);
        assert_eq!(bar_natan_sign(s, 0), 1);
    }

    #[test]
    fn gf2_inconsistent() {
        // x0 = 1 and x0 = 0
        let rows = vec![vec![0b11u64], vec![0b01u64]];
        assert!(gf2_solve(rows, 1).is_none());
    }
}
