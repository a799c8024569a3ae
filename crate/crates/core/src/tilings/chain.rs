//! Cut-hexagon tilings as chains of partitions with horizontal-strip
//! steps, together with the derived lozenge tiles, hole paths (level
//! curves) and blue-dot positions.
//!
//! Level ℓ of the chain carries d+ℓ red dots at positions
//! x_i = ν_i − i on the row of sites [−d−ℓ, m1+m2−1]. The m1+m2 holes
//! per row trace the level curves; a hole either stays or moves one
//! step left per level. A "stay" segment is a blue lozenge, a "left"
//! segment a green one.

use crate::domains::{DomainSpec, HexagonBoundary};
use crate::error::Error;
use crate::Result;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Weakly decreasing nonnegative parts, trailing zeros trimmed.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Partition(pub Vec<u64>);

impl Partition {
    pub fn new(mut parts: Vec<u64>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn part(&self, i: usize) -> u64 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> u64 {
        self.0.iter().sum()
    }

    pub fn contains(&self, other: &Partition) -> bool {
        (0..other.len()).all(|i| self.part(i) >= other.part(i))
    }

    /// self/other is a horizontal strip: other ⊆ self and at most one box
    /// per column, i.e. self_{i+1} <= other_i.
    pub fn is_horizontal_strip_over(&self, other: &Partition) -> bool {
        if !self.contains(other) {
            return false;
        }
        (1..self.len()).all(|i| self.part(i) <= other.part(i - 1))
    }
}

/// ν(0) ⊂ ν(1) ⊂ … ⊂ ν(N) with horizontal-strip steps.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PartitionChain {
    pub levels: Vec<Partition>,
}

impl PartitionChain {
    pub fn validate(&self) -> bool {
        self.levels
            .windows(2)
            .all(|w| w[1].is_horizontal_strip_over(&w[0]))
    }
}

/// Geometry data of a cut hexagon needed by the chain machinery.
#[derive(Clone, Debug)]
pub struct HexagonShape {
    pub b: i64,
    pub c: i64,
    pub d: i64,
    pub m1: i64,
    pub m2: i64,
    pub n1: i64,
    pub n2: i64,
    pub n_levels: i64,
    pub mu: Partition,
    pub lambda: Partition,
    pub boundary: HexagonBoundary,
}

impl HexagonShape {
    pub fn for_domain(domain: &DomainSpec) -> Result<HexagonShape> {
        match *domain {
            DomainSpec::CutHexagon { b, c, d, m1, m2, n1, n2 } => {
                let (_, boundary) = crate::domains::derive_hexagon_params(b, c, d, m1, m2, n1, n2)?;
                let mu = Partition::new(vec![m1 as u64; d as usize]);
                let mut lam = vec![(m1 + m2) as u64; c as usize];
                lam.extend(std::iter::repeat(n1 as u64).take(d as usize));
                let lambda = Partition::new(lam);
                Ok(HexagonShape {
                    b: b as i64,
                    c: c as i64,
                    d: d as i64,
                    m1: m1 as i64,
                    m2: m2 as i64,
                    n1: n1 as i64,
                    n2: n2 as i64,
                    n_levels: (b + c) as i64,
                    mu,
                    lambda,
                    boundary,
                })
            }
            _ => Err(Error::validation("not a cut hexagon")),
        }
    }

    /// Red-dot positions x_i = ν_i − i at a level, d+level entries,
    /// strictly decreasing.
    pub fn dots_at_level(&self, chain: &PartitionChain, level: usize) -> Vec<i64> {
        let nu = &chain.levels[level];
        let count = (self.d as usize) + level;
        (1..=count).map(|i| nu.part(i - 1) as i64 - i as i64).collect()
    }

    /// Sites of a level row: [−d−level, m1+m2−1].
    pub fn row_range(&self, level: i64) -> (i64, i64) {
        (-self.d - level, self.m1 + self.m2 - 1)
    }

    /// Hole positions per level, ascending; always m1+m2 of them.
    pub fn holes_at_level(&self, chain: &PartitionChain, level: usize) -> Vec<i64> {
        let dots: std::collections::BTreeSet<i64> =
            self.dots_at_level(chain, level).into_iter().collect();
        let (lo, hi) = self.row_range(level as i64);
        (lo..=hi).filter(|x| !dots.contains(x)).collect()
    }

    /// Chain validity including the fixed boundary partitions.
    pub fn chain_is_valid(&self, chain: &PartitionChain) -> bool {
        chain.levels.len() as i64 == self.n_levels + 1
            && chain.levels[0] == self.mu
            && chain.levels[self.n_levels as usize] == self.lambda
            && chain.validate()
    }

    /// Blue dots: per slab ℓ ∈ 1..=N, positions of holes that stay put.
    /// The dot at slab ℓ, position h lies on the oblique line η = ℓ + h.
    pub fn blue_dots(&self, chain: &PartitionChain) -> Vec<(i64, i64)> {
        let mut out = Vec::new();
        for ell in 1..=(self.n_levels as usize) {
            let prev = self.holes_at_level(chain, ell - 1);
            let cur = self.holes_at_level(chain, ell);
            debug_assert_eq!(prev.len(), cur.len());
            for (h0, h1) in prev.iter().zip(cur.iter()) {
                debug_assert!(*h1 == *h0 || *h1 == *h0 - 1, "hole step must stay or move left");
                if h1 == h0 {
                    out.push((ell as i64, *h0));
                }
            }
        }
        out
    }

    /// Blue dots regrouped by oblique line η = slab + position.
    pub fn blue_dots_by_line(&self, chain: &PartitionChain) -> BTreeMap<i64, Vec<i64>> {
        let mut map: BTreeMap<i64, Vec<i64>> = BTreeMap::new();
        for (ell, h) in self.blue_dots(chain) {
            map.entry(ell + h).or_default().push(h);
        }
        for v in map.values_mut() {
            v.sort_unstable();
        }
        map
    }

    /// Lozenge tiles in doubled (2·level, 2·position) coordinates:
    /// red at (2ℓ, 2x); blue (stay) at (2ℓ−1, 2h); green (left step
    /// h → h−1) at (2ℓ−1, 2h−1).
    pub fn lozenges(&self, chain: &PartitionChain) -> BTreeMap<(i64, i64), LozengeKind> {
        let mut tiles = BTreeMap::new();
        for ell in 0..=(self.n_levels as usize) {
            for x in self.dots_at_level(chain, ell) {
                tiles.insert((2 * ell as i64, 2 * x), LozengeKind::Red);
            }
        }
        for ell in 1..=(self.n_levels as usize) {
            let prev = self.holes_at_level(chain, ell - 1);
            let cur = self.holes_at_level(chain, ell);
            for (h0, h1) in prev.iter().zip(cur.iter()) {
                if h1 == h0 {
                    tiles.insert((2 * ell as i64 - 1, 2 * h0), LozengeKind::Blue);
                } else {
                    tiles.insert((2 * ell as i64 - 1, 2 * h0 - 1), LozengeKind::Green);
                }
            }
        }
        tiles
    }

    /// Rebuild the chain from the red lozenge anchors of [`lozenges`].
    pub fn chain_from_red_anchors(&self, reds: &[(i64, i64)]) -> Result<PartitionChain> {
        let mut per_level: BTreeMap<i64, Vec<i64>> = BTreeMap::new();
        for &(two_l, two_x) in reds {
            if two_l % 2 != 0 || two_x % 2 != 0 {
                return Err(Error::Format("red anchors must have even coordinates".into()));
            }
            per_level.entry(two_l / 2).or_default().push(two_x / 2);
        }
        let mut levels = Vec::new();
        for ell in 0..=self.n_levels {
            let mut dots = per_level.remove(&ell).unwrap_or_default();
            dots.sort_unstable_by(|a, b| b.cmp(a));
            if dots.len() as i64 != self.d + ell {
                return Err(Error::Format(format!(
                    "level {ell} should carry {} dots, found {}",
                    self.d + ell,
                    dots.len()
                )));
            }
            let parts: Vec<u64> = dots
                .iter()
                .enumerate()
                .map(|(i, &x)| {
                    let p = x + (i as i64 + 1);
                    if p < 0 {
                        u64::MAX // flagged below
                    } else {
                        p as u64
                    }
                })
                .collect();
            if parts.contains(&u64::MAX) {
                return Err(Error::Format("red dot below the row floor".into()));
            }
            levels.push(Partition::new(parts));
        }
        Ok(PartitionChain { levels })
    }

    /// Height at the vertex just right of position x on level row ℓ:
    /// the number of holes weakly left of x.
    pub fn height(&self, chain: &PartitionChain, level: usize, x: i64) -> i64 {
        self.holes_at_level(chain, level)
            .iter()
            .filter(|&&h| h <= x)
            .count() as i64
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LozengeKind {
    Red,
    Blue,
    Green,
}
