//! Signed Gauss-code diagrams of oriented virtual links.
//!
//! A diagram is a list of components, each a cyclic sequence of crossing
//! visits `O<label><sign>` / `U<label><sign>`. Virtual crossings are implicit:
//! everything computed here depends only on the abstract link diagram, which
//! the Gauss code determines.
//!
//! Local model at a crossing: four half-edges (over-in, over-out, under-in,
//! under-out) arranged counterclockwise as
//!
//! * `ε = +1`: over-in, under-in, over-out, under-out
//! * `ε = -1`: over-in, under-out, over-out, under-in
//!
//! so the over strand always sits at rotation positions 0 and 2.

mod parse;
mod state;
mod surface;

use std::fmt;

pub use state::{resolve_state, Resolution, State};
pub use surface::{trace_faces, Face, SurfaceData};

use crate::error::{Error, Result};

/// Which strand of a crossing a visit passes along.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Strand {
    Over,
    Under,
}

impl Strand {
    pub fn flip(self) -> Self {
        match self {
            Strand::Over => Strand::Under,
            Strand::Under => Strand::Over,
        }
    }

    fn letter(self) -> char {
        match self {
            Strand::Over => 'O',
            Strand::Under => 'U',
        }
    }
}

/// One `O3-`-style token of a Gauss code.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Token {
    pub label: u32,
    pub strand: Strand,
    /// Writhe ε of the crossing, `+1` or `-1`.
    pub sign: i8,
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = if self.sign > 0 { '+' } else { '-' };
        write!(f, "{}{}{}", self.strand.letter(), self.label, s)
    }
}

/// Position of a visit inside the component list.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct VisitPos {
    pub component: usize,
    pub index: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Crossing {
    pub label: u32,
    pub sign: i8,
    pub over: VisitPos,
    pub under: VisitPos,
}

/// Half-edge id: `4 * crossing + slot`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HalfEdge(pub u32);

impl HalfEdge {
    pub const OVER_IN: u32 = 0;
    pub const OVER_OUT: u32 = 1;
    pub const UNDER_IN: u32 = 2;
    pub const UNDER_OUT: u32 = 3;

    pub fn new(crossing: usize, slot: u32) -> Self {
        HalfEdge(crossing as u32 * 4 + slot)
    }

    pub fn crossing(self) -> usize {
        (self.0 / 4) as usize
    }

    pub fn slot(self) -> u32 {
        self.0 % 4
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// An edge of the 4-valent graph, oriented along its component. Crossing-free
/// components have a single loop arc with no endpoints.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Arc {
    pub component: usize,
    pub start: Option<HalfEdge>,
    pub end: Option<HalfEdge>,
}

/// A validated oriented virtual link diagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagram {
    components: Vec<Vec<Token>>,
    crossings: Vec<Crossing>,
    arcs: Vec<Arc>,
    /// arc incident to each half-edge, and whether the half-edge is its start
    half_edge_arc: Vec<(usize, bool)>,
}

impl Diagram {
    /// Builds a diagram from token lists, validating the Gauss-code invariants.
    /// Crossings are indexed in order of first appearance.
    pub fn from_components(components: Vec<Vec<Token>>) -> Result<Self> {
        let mut index_of = std::collections::HashMap::new();
        let mut labels = Vec::new();
        let mut over: Vec<Option<VisitPos>> = Vec::new();
        let mut under: Vec<Option<VisitPos>> = Vec::new();
        let mut signs: Vec<i8> = Vec::new();
        for (ci, comp) in components.iter().enumerate() {
            for (vi, tok) in comp.iter().enumerate() {
                let idx = *index_of.entry(tok.label).or_insert_with(|| {
                    labels.push(tok.label);
                    over.push(None);
                    under.push(None);
                    signs.push(tok.sign);
                    labels.len() - 1
                });
                if signs[idx] != tok.sign {
                    return Err(Error::SignConflict { label: tok.label });
                }
                let slot = match tok.strand {
                    Strand::Over => &mut over[idx],
                    Strand::Under => &mut under[idx],
                };
                if slot.is_some() {
                    return Err(Error::LabelCountMismatch { label: tok.label });
                }
                *slot = Some(VisitPos {
                    component: ci,
                    index: vi,
                });
            }
        }
        let mut crossings = Vec::with_capacity(labels.len());
        for (i, &label) in labels.iter().enumerate() {
            match (over[i], under[i]) {
                (Some(o), Some(u)) => crossings.push(Crossing {
                    label,
                    sign: signs[i],
                    over: o,
                    under: u,
                }),
                _ => return Err(Error::LabelCountMismatch { label }),
            }
        }

        let mut arcs = Vec::new();
        let mut half_edge_arc = vec![(usize::MAX, false); 4 * crossings.len()];
        for (ci, comp) in components.iter().enumerate() {
            if comp.is_empty() {
                arcs.push(Arc {
                    component: ci,
                    start: None,
                    end: None,
                });
                continue;
            }
            let m = comp.len();
            for t in 0..m {
                let from = comp[t];
                let to = comp[(t + 1) % m];
                let fc = index_of[&from.label];
                let tc = index_of[&to.label];
                let start = HalfEdge::new(
                    fc,
                    match from.strand {
                        Strand::Over => HalfEdge::OVER_OUT,
                        Strand::Under => HalfEdge::UNDER_OUT,
                    },
                );
                let end = HalfEdge::new(
                    tc,
                    match to.strand {
                        Strand::Over => HalfEdge::OVER_IN,
                        Strand::Under => HalfEdge::UNDER_IN,
                    },
                );
                let a = arcs.len();
                half_edge_arc[start.index()] = (a, true);
                half_edge_arc[end.index()] = (a, false);
                arcs.push(Arc {
                    component: ci,
                    start: Some(start),
                    end: Some(end),
                });
            }
        }

        Ok(Diagram {
            components,
            crossings,
            arcs,
            half_edge_arc,
        })
    }

    /// The crossing-free unknot.
    pub fn unknot() -> Self {
        Diagram::from_components(vec![Vec::new()]).expect("unknot is valid")
    }

    pub fn components(&self) -> &[Vec<Token>] {
        &self.components
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    /// Crossing count.
    pub fn n(&self) -> usize {
        self.crossings.len()
    }

    pub fn n_plus(&self) -> usize {
        self.crossings.iter().filter(|c| c.sign > 0).count()
    }

    pub fn n_minus(&self) -> usize {
        self.crossings.iter().filter(|c| c.sign < 0).count()
    }

    pub fn writhe(&self) -> i64 {
        self.crossings.iter().map(|c| c.sign as i64).sum()
    }

    pub fn crossing_index(&self, label: u32) -> Option<usize> {
        self.crossings.iter().position(|c| c.label == label)
    }

    /// Arc incident to `h` and whether `h` is that arc's start.
    pub fn arc_at(&self, h: HalfEdge) -> (usize, bool) {
        self.half_edge_arc[h.index()]
    }

    /// Counterclockwise half-edges around crossing `c`; over strand at positions 0 and 2.
    pub fn rotation(&self, c: usize) -> [HalfEdge; 4] {
        let h = |slot| HalfEdge::new(c, slot);
        if self.crossings[c].sign > 0 {
            [
                h(HalfEdge::OVER_IN),
                h(HalfEdge::UNDER_IN),
                h(HalfEdge::OVER_OUT),
                h(HalfEdge::UNDER_OUT),
            ]
        } else {
            [
                h(HalfEdge::OVER_IN),
                h(HalfEdge::UNDER_OUT),
                h(HalfEdge::OVER_OUT),
                h(HalfEdge::UNDER_IN),
            ]
        }
    }

    /// Rotation position (0..4) of a half-edge at its crossing.
    pub fn rotation_position(&self, h: HalfEdge) -> usize {
        let rot = self.rotation(h.crossing());
        rot.iter()
            .position(|&x| x == h)
            .expect("half-edge belongs to its crossing")
    }

    /// Groups link components that share crossings. Blocks are listed in order
    /// of their smallest component index.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let k = self.components.len();
        let mut parent: Vec<usize> = (0..k).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let next = p[y];
                p[y] = r;
                y = next;
            }
            r
        }
        for c in &self.crossings {
            let a = find(&mut parent, c.over.component);
            let b = find(&mut parent, c.under.component);
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        let mut block_of = vec![usize::MAX; k];
        for i in 0..k {
            let r = find(&mut parent, i);
            if block_of[r] == usize::MAX {
                block_of[r] = blocks.len();
                blocks.push(Vec::new());
            }
            blocks[block_of[r]].push(i);
        }
        blocks
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() == 1
    }

    pub(crate) fn require_connected(&self) -> Result<()> {
        let blocks = self.connected_components().len();
        if blocks == 1 {
            Ok(())
        } else {
            Err(Error::DisconnectedDiagram { blocks })
        }
    }

    /// True iff every component alternates O/U cyclically.
    pub fn is_alternating(&self) -> bool {
        self.components.iter().all(|comp| {
            let m = comp.len();
            (0..m).all(|t| comp[t].strand != comp[(t + 1) % m].strand)
        })
    }

    /// Canonical Gauss-code text.
    pub fn to_code(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, comp) in self.components.iter().enumerate() {
            if i > 0 {
                f.write_str(";")?;
            }
            if comp.is_empty() {
                f.write_str("()")?;
            }
            for tok in comp {
                write!(f, "{tok}")?;
            }
        }
        Ok(())
    }
}

impl std::str::FromStr for Diagram {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_gauss_code(s)
    }
}

/// Parses a signed Gauss code such as `O1-U2-O3-U1-O2-U3-`.
pub fn parse_gauss_code(text: &str) -> Result<Diagram> {
    let components = parse::tokenize(text)?;
    Diagram::from_components(components)
}
