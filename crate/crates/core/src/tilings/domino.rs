//! Domino geometry shared by the Aztec diamond and the skew-Aztec
//! rectangle.
//!
//! Squares are diamonds centered on the sublattice ξ+η odd; corners live
//! on ξ+η even; a domino covers a blue square and one of its four
//! diagonal white neighbours. The kind of a domino is named after where
//! its white square sits relative to the blue one:
//!
//! * `HL` — white at (+1,+1); horizontal, blue square on the left.
//! * `HR` — white at (−1,−1); horizontal, blue square on the right.
//! * `VU` — white at (+1,−1); vertical, blue square on top.
//! * `VD` — white at (−1,+1); vertical, blue square at the bottom.

use crate::domains::DomainSpec;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

pub type Pt = (i64, i64);

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DominoKind {
    HL,
    HR,
    VU,
    VD,
}

pub const DOMINO_KINDS: [DominoKind; 4] = [DominoKind::HL, DominoKind::HR, DominoKind::VU, DominoKind::VD];

impl DominoKind {
    /// Offset of the white square relative to the blue anchor.
    pub fn white_offset(self) -> Pt {
        match self {
            DominoKind::HL => (1, 1),
            DominoKind::HR => (-1, -1),
            DominoKind::VU => (1, -1),
            DominoKind::VD => (-1, 1),
        }
    }

    pub fn from_white_offset(d: Pt) -> Option<Self> {
        match d {
            (1, 1) => Some(DominoKind::HL),
            (-1, -1) => Some(DominoKind::HR),
            (1, -1) => Some(DominoKind::VU),
            (-1, 1) => Some(DominoKind::VD),
            _ => None,
        }
    }

    pub fn is_vertical(self) -> bool {
        matches!(self, DominoKind::VU | DominoKind::VD)
    }

    /// Red dots mark dominoes whose blue square is west of the white one.
    pub fn carries_red_dot(self) -> bool {
        matches!(self, DominoKind::HL | DominoKind::VU)
    }

    /// A level curve runs vertically through the blue square of these kinds.
    pub fn carries_blue_dot(self) -> bool {
        matches!(self, DominoKind::HL | DominoKind::VD)
    }

    /// Dual level curve (green family) through the blue square.
    pub fn carries_green_dot(self) -> bool {
        matches!(self, DominoKind::VU | DominoKind::HR)
    }
}

/// A finite region of the diamond lattice together with the blue/white
/// split. Both domino domains reduce to this.
#[derive(Clone, Debug)]
pub struct DominoRegion {
    pub blues: Vec<Pt>,
    pub whites: Vec<Pt>,
    blue_set: std::collections::BTreeSet<Pt>,
    white_set: std::collections::BTreeSet<Pt>,
}

impl DominoRegion {
    pub fn for_domain(domain: &DomainSpec) -> Option<DominoRegion> {
        match *domain {
            DomainSpec::AztecDiamond { n } => Some(Self::aztec(n as i64)),
            DomainSpec::SkewRectangle { n, m, big_m } => {
                Some(Self::skew_rectangle(n as i64, m as i64, big_m as i64))
            }
            DomainSpec::CutHexagon { .. } => None,
        }
    }

    /// Aztec diamond of order n: blue squares form an n × (n+1) grid at
    /// (odd ξ, even η), whites the dual (n+1) × n grid.
    pub fn aztec(n: i64) -> DominoRegion {
        let mut blues = Vec::new();
        let mut whites = Vec::new();
        for xi in 0..=(2 * n) {
            for eta in 0..=(2 * n) {
                if (xi + eta) % 2 == 0 {
                    continue;
                }
                if xi % 2 != 0 {
                    blues.push((xi, eta));
                } else {
                    whites.push((xi, eta));
                }
            }
        }
        Self::from_lists(blues, whites)
    }

    /// Skew-Aztec rectangle with width n and long sides carrying m + M
    /// squares. For m = n this is exactly the union of two overlapping
    /// Aztec diamonds shifted by (2M, −2); the cuts are the two boundary
    /// steps next to the strip lines ξ = 2(M−1) and ξ = 2m.
    pub fn skew_rectangle(n: i64, m: i64, big_m: i64) -> DominoRegion {
        let mut blues = Vec::new();
        let mut whites = Vec::new();
        for xi in (0..=(2 * (m + big_m - 1))).step_by(2) {
            for eta in (-1..=(2 * n - 1)).step_by(2) {
                if eta == -1 && xi < 2 * big_m {
                    continue;
                }
                blues.push((xi, eta));
            }
        }
        let mut xi = 1;
        while xi <= 2 * (m + big_m) - 1 {
            for eta in (0..=(2 * n)).step_by(2) {
                if eta == 2 * n && xi > 2 * m - 1 {
                    continue;
                }
                whites.push((xi, eta));
            }
            xi += 2;
        }
        Self::from_lists(blues, whites)
    }

    fn from_lists(mut blues: Vec<Pt>, mut whites: Vec<Pt>) -> DominoRegion {
        blues.sort_unstable();
        whites.sort_unstable();
        let blue_set = blues.iter().copied().collect();
        let white_set = whites.iter().copied().collect();
        DominoRegion { blues, whites, blue_set, white_set }
    }

    #[inline]
    pub fn has_blue(&self, p: Pt) -> bool {
        self.blue_set.contains(&p)
    }

    #[inline]
    pub fn has_white(&self, p: Pt) -> bool {
        self.white_set.contains(&p)
    }

    pub fn has_square(&self, p: Pt) -> bool {
        self.has_blue(p) || self.has_white(p)
    }

    pub fn n_squares(&self) -> usize {
        self.blues.len() + self.whites.len()
    }

    /// All corners (ξ+η even) incident to at least one square.
    pub fn corners(&self) -> Vec<Pt> {
        let mut set = std::collections::BTreeSet::new();
        for &(x, e) in self.blues.iter().chain(self.whites.iter()) {
            for d in [(1, 0), (-1, 0), (0, 1), (0, -1)] {
                set.insert((x + d.0, e + d.1));
            }
        }
        set.into_iter().collect()
    }
}

/// A domino tiling as a map blue anchor → kind. The map covers every blue
/// square; validity additionally requires the implied whites to partition
/// the white squares.
pub type DominoTiling = BTreeMap<Pt, DominoKind>;

pub fn white_partner(blue: Pt, kind: DominoKind) -> Pt {
    let d = kind.white_offset();
    (blue.0 + d.0, blue.1 + d.1)
}

/// Check that a candidate assignment is a perfect matching of the region.
pub fn is_valid_tiling(region: &DominoRegion, tiles: &DominoTiling) -> bool {
    if tiles.len() != region.blues.len() {
        return false;
    }
    let mut used = std::collections::BTreeSet::new();
    for (&b, &k) in tiles {
        if !region.has_blue(b) {
            return false;
        }
        let w = white_partner(b, k);
        if !region.has_white(w) || !used.insert(w) {
            return false;
        }
    }
    used.len() == region.whites.len()
}

pub fn count_vertical(tiles: &DominoTiling) -> u64 {
    tiles.values().filter(|k| k.is_vertical()).count() as u64
}

/// Integer height function on the corners of the region.
///
/// Rule per directed corner edge with the blue square on the left
/// (white-left edges are the negated reverse): unmatched edges get
/// {(1,−1): +1, else 0}, edges interior to a domino get that minus one.
/// Heights are normalized so the minimum over all corners is 0. The
/// boundary trace is tiling-independent and the height drop along a
/// strip line counts the red dots on it.
pub fn height_field(region: &DominoRegion, tiles: &DominoTiling) -> BTreeMap<Pt, i64> {
    let corners = region.corners();
    let corner_set: std::collections::BTreeSet<Pt> = corners.iter().copied().collect();

    // domino id per square, to test whether an edge is interior
    let mut domino_of: BTreeMap<Pt, usize> = BTreeMap::new();
    for (id, (&b, &k)) in tiles.iter().enumerate() {
        domino_of.insert(b, id);
        domino_of.insert(white_partner(b, k), id);
    }

    let delta = |c: Pt, d: Pt| -> Option<i64> {
        // squares left/right of the directed edge c -> c+d
        let (left, right) = match d {
            (1, 1) => ((c.0, c.1 + 1), (c.0 + 1, c.1)),
            (1, -1) => ((c.0 + 1, c.1), (c.0, c.1 - 1)),
            (-1, 1) => ((c.0 - 1, c.1), (c.0, c.1 + 1)),
            (-1, -1) => ((c.0, c.1 - 1), (c.0 - 1, c.1)),
            _ => unreachable!(),
        };
        let l_in = region.has_square(left);
        let r_in = region.has_square(right);
        if !l_in && !r_in {
            return None;
        }
        let matched = l_in && r_in && domino_of.get(&left) == domino_of.get(&right);
        let rule = |dir: Pt, blue_left: bool, matched: bool| -> i64 {
            let base = if blue_left {
                i64::from(dir == (1, -1))
            } else {
                -i64::from(dir == (-1, 1))
            };
            if matched {
                base - if blue_left { 1 } else { -1 }
            } else {
                base
            }
        };
        if l_in {
            Some(rule(d, region.has_blue(left), matched))
        } else {
            // only the right square exists: negate the reversed edge
            Some(-rule((-d.0, -d.1), region.has_blue(right), matched))
        }
    };

    let mut heights: BTreeMap<Pt, i64> = BTreeMap::new();
    let start = corners[0];
    heights.insert(start, 0);
    let mut queue = std::collections::VecDeque::new();
    queue.push_back(start);
    while let Some(c) = queue.pop_front() {
        let h = heights[&c];
        for d in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
            let nc = (c.0 + d.0, c.1 + d.1);
            if !corner_set.contains(&nc) || heights.contains_key(&nc) {
                continue;
            }
            if let Some(dh) = delta(c, d) {
                heights.insert(nc, h + dh);
                queue.push_back(nc);
            }
        }
    }
    let min = heights.values().copied().min().unwrap_or(0);
    for v in heights.values_mut() {
        *v -= min;
    }
    heights
}

/// Corners on the topological boundary of the region (incident to a
/// missing square).
pub fn boundary_corners(region: &DominoRegion) -> Vec<Pt> {
    region
        .corners()
        .into_iter()
        .filter(|&(x, e)| {
            [(1, 0), (-1, 0), (0, 1), (0, -1)]
                .iter()
                .any(|d| !region.has_square((x + d.0, e + d.1)))
        })
        .collect()
}

/// Anchors (corners) of 2x2 blocks whose four squares are covered by
/// exactly two dominoes, i.e. the flippable positions.
pub fn flippable_corners(region: &DominoRegion, tiles: &DominoTiling) -> Vec<Pt> {
    let mut out = Vec::new();
    for c in region.corners() {
        if flip_kinds(region, tiles, c).is_some() {
            out.push(c);
        }
    }
    out
}

/// If the 2x2 block around corner `c` is flippable, return the two blue
/// anchors together with their new kinds.
pub fn flip_kinds(
    region: &DominoRegion,
    tiles: &DominoTiling,
    c: Pt,
) -> Option<[(Pt, DominoKind); 2]> {
    // the block: squares at c±(1,0), c±(0,±1); two blues, two whites
    let around = [(c.0 + 1, c.1), (c.0 - 1, c.1), (c.0, c.1 + 1), (c.0, c.1 - 1)];
    if around.iter().any(|&p| !region.has_square(p)) {
        return None;
    }
    let blues: Vec<Pt> = around.iter().copied().filter(|&p| region.has_blue(p)).collect();
    if blues.len() != 2 {
        return None;
    }
    let inside = |p: Pt| around.contains(&p);
    let k0 = *tiles.get(&blues[0])?;
    let k1 = *tiles.get(&blues[1])?;
    if !inside(white_partner(blues[0], k0)) || !inside(white_partner(blues[1], k1)) {
        return None;
    }
    // Two matchings of the 4-cycle: swap which white each blue takes.
    let w0 = white_partner(blues[0], k0);
    let w1 = white_partner(blues[1], k1);
    let nk0 = DominoKind::from_white_offset((w1.0 - blues[0].0, w1.1 - blues[0].1))?;
    let nk1 = DominoKind::from_white_offset((w0.0 - blues[1].0, w0.1 - blues[1].1))?;
    Some([(blues[0], nk0), (blues[1], nk1)])
}
