use super::{Diagram, HalfEdge};
use crate::error::{Error, Result};

/// A choice of 0- or 1-smoothing at every crossing; bit `m` is crossing `m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct State {
    bits: u64,
    len: usize,
}

impl State {
    pub const MAX_CROSSINGS: usize = 63;

    pub fn from_bits(bits: u64, len: usize) -> Self {
        assert!(len <= Self::MAX_CROSSINGS);
        let mask = if len == 64 {
            u64::MAX
        } else {
            (1u64 << len) - 1
        };
        State {
            bits: bits & mask,
            len,
        }
    }

    pub fn from_slice(bits: &[bool]) -> Self {
        let v = bits
            .iter()
            .enumerate()
            .fold(0u64, |acc, (i, &b)| acc | ((b as u64) << i));
        State::from_bits(v, bits.len())
    }

    pub fn zeros(len: usize) -> Self {
        State::from_bits(0, len)
    }

    pub fn ones(len: usize) -> Self {
        State::from_bits(u64::MAX, len)
    }

    pub fn bits(self) -> u64 {
        self.bits
    }

    pub fn len(self) -> usize {
        self.len
    }

    pub fn is_empty(self) -> bool {
        self.len == 0
    }

    pub fn get(self, m: usize) -> bool {
        (self.bits >> m) & 1 == 1
    }

    pub fn with(self, m: usize, value: bool) -> Self {
        let bits = if value {
            self.bits | (1 << m)
        } else {
            self.bits & !(1 << m)
        };
        State {
            bits,
            len: self.len,
        }
    }

    /// Number of 1-smoothings, r_α.
    pub fn weight(self) -> usize {
        self.bits.count_ones() as usize
    }

    /// Number of 1s strictly before position `m`.
    pub fn ones_before(self, m: usize) -> usize {
        (self.bits & ((1u64 << m) - 1)).count_ones() as usize
    }

    /// The dual state ᾱ.
    pub fn complement(self) -> Self {
        State::from_bits(!self.bits, self.len)
    }
}

impl std::fmt::Display for State {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for m in 0..self.len {
            f.write_str(if self.get(m) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// The circles of a smoothed diagram.
///
/// Each circle is a cyclic list of `(arc, forward)` steps. Circles are
/// numbered by their smallest arc and oriented so that this arc is
/// traversed forward.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Resolution {
    pub state: State,
    pub circles: Vec<Vec<(usize, bool)>>,
    pub arc_circle: Vec<usize>,
    /// Direction in which the circle's reference orientation traverses each arc.
    pub arc_forward: Vec<bool>,
}

impl Resolution {
    /// k_α.
    pub fn circle_count(&self) -> usize {
        self.circles.len()
    }

    /// Circles meeting crossing `c`, ascending, without repeats.
    pub fn circles_at(&self, d: &Diagram, c: usize) -> Vec<usize> {
        let mut v: Vec<usize> = (0..4)
            .map(|s| self.arc_circle[d.arc_at(HalfEdge::new(c, s)).0])
            .collect();
        v.sort_unstable();
        v.dedup();
        v
    }
}

/// Partner of `h` under the smoothing of its crossing. The 0-smoothing joins
/// each over half-edge to the under half-edge clockwise from it.
pub(crate) fn smoothing_partner(d: &Diagram, h: HalfEdge, one: bool) -> HalfEdge {
    let rot = d.rotation(h.crossing());
    let p = rot
        .iter()
        .position(|&x| x == h)
        .expect("half-edge at crossing");
    let q = if one {
        [1, 0, 3, 2][p]
    } else {
        [3, 2, 1, 0][p]
    };
    rot[q]
}

/// Splices every crossing according to `state` and traces the circles.
pub fn resolve_state(d: &Diagram, state: State) -> Result<Resolution> {
    if state.len() != d.n() {
        return Err(Error::LengthMismatch {
            expected: d.n(),
            got: state.len(),
        });
    }
    let arcs = d.arcs();
    let mut arc_circle = vec![usize::MAX; arcs.len()];
    let mut arc_forward = vec![true; arcs.len()];
    let mut circles = Vec::new();
    for a0 in 0..arcs.len() {
        if arc_circle[a0] != usize::MAX {
            continue;
        }
        let id = circles.len();
        let mut steps = Vec::new();
        let (mut a, mut fwd) = (a0, true);
        loop {
            arc_circle[a] = id;
            arc_forward[a] = fwd;
            steps.push((a, fwd));
            let exit = if fwd { arcs[a].end } else { arcs[a].start };
            let Some(h) = exit else { break };
            let p = smoothing_partner(d, h, state.get(h.crossing()));
            let (b, is_start) = d.arc_at(p);
            a = b;
            fwd = is_start;
            if a == a0 && fwd {
                break;
            }
            debug_assert!(arc_circle[a] == usize::MAX, "arc revisited");
        }
        circles.push(steps);
    }
    Ok(Resolution {
        state,
        circles,
        arc_circle,
        arc_forward,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::parse_gauss_code;

    #[test]
    fn left_trefoil_extreme_states() {
        let d = parse_gauss_code("O1-U2-O3-U1-O2-U3-").unwrap();
        let r0 = resolve_state(&d, State::zeros(3)).unwrap();
        let r1 = resolve_state(&d, State::ones(3)).unwrap();
        assert_eq!(r0.circle_count(), 3);
        assert_eq!(r1.circle_count(), 2);
    }

    #[test]
    fn unknot_has_one_circle() {
        let d = crate::diagram::Diagram::unknot();
        let r = resolve_state(&d, State::zeros(0)).unwrap();
        assert_eq!(r.circle_count(), 1);
    }

    #[test]
    fn length_mismatch() {
        let d = parse_gauss_code("O1-U2-O3-U1-O2-U3-").unwrap();
        assert!(matches!(
            resolve_state(&d, State::zeros(2)),
            Err(Error::LengthMismatch {
                expected: 3,
                got: 2
            })
        ));
    }

    #[test]
    fn every_arc_in_one_circle() {
        let d = parse_gauss_code("O1+O2+U1+U2+").unwrap();
        for bits in 0..4 {
            let r = resolve_state(&d, State::from_bits(bits, 2)).unwrap();
            let total: usize = r.circles.iter().map(|c| c.len()).sum();
            assert_eq!(total, d.arcs().len());
        }
    }

    #[test]
    fn state_helpers() {
        let s = State::from_slice(&[true, false, true, true]);
        assert_eq!(s.weight(), 3);
        assert_eq!(s.ones_before(3), 2);
        assert_eq!(s.complement().weight(), 1);
        assert_eq!(s.to_string(), "1011");
    }
}
