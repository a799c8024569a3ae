//! Tilings, height functions, dot processes and interlacing validation.

pub mod chain;
pub mod domino;

pub use chain::{HexagonShape, LozengeKind, Partition, PartitionChain};
pub use domino::{DominoKind, DominoRegion, DominoTiling};

use crate::domains::DomainSpec;
use crate::error::Error;
use crate::Result;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// A tiling of one of the three domains.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tiling {
    pub domain: DomainSpec,
    pub data: TilingData,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TilingData {
    /// Aztec diamond / skew rectangle: blue anchor → domino kind.
    Dominoes(DominoTiling),
    /// Cut hexagon: chain of partitions, one per level.
    Chain(PartitionChain),
}

impl Tiling {
    pub fn dominoes(&self) -> Option<&DominoTiling> {
        match &self.data {
            TilingData::Dominoes(t) => Some(t),
            _ => None,
        }
    }

    pub fn chain(&self) -> Option<&PartitionChain> {
        match &self.data {
            TilingData::Chain(c) => Some(c),
            _ => None,
        }
    }

    /// Number of tiles (dominoes or lozenges).
    pub fn n_tiles(&self) -> usize {
        match &self.data {
            TilingData::Dominoes(t) => t.len(),
            TilingData::Chain(c) => {
                let shape = HexagonShape::for_domain(&self.domain).expect("chain implies hexagon");
                shape.lozenges(c).len()
            }
        }
    }

    /// Weight exponent: number of vertical dominoes (domino domains) or
    /// the q-volume Σ_{0<ℓ<N} |ν(ℓ)| − (N−1)|ν(0)| (hexagons).
    pub fn weight_exponent(&self) -> u64 {
        match &self.data {
            TilingData::Dominoes(t) => domino::count_vertical(t),
            TilingData::Chain(c) => {
                let n = c.levels.len() - 1;
                let base = c.levels[0].size() * (n as u64 - 1);
                let vol: u64 = c.levels[1..n].iter().map(|p| p.size()).sum();
                vol - base
            }
        }
    }

    pub fn validate(&self) -> Result<()> {
        match &self.data {
            TilingData::Dominoes(t) => {
                let region = DominoRegion::for_domain(&self.domain)
                    .ok_or_else(|| Error::validation("domino data on a hexagon domain"))?;
                if domino::is_valid_tiling(&region, t) {
                    Ok(())
                } else {
                    Err(Error::validation("tiles do not partition the region"))
                }
            }
            TilingData::Chain(c) => {
                let shape = HexagonShape::for_domain(&self.domain)?;
                if shape.chain_is_valid(c) {
                    Ok(())
                } else {
                    Err(Error::validation("chain violates the horizontal-strip constraints"))
                }
            }
        }
    }

    /// Canonical JSON: domain spec plus (anchor, kind) pairs sorted
    /// lexicographically. Identical bytes iff identical tiling.
    pub fn to_json(&self) -> String {
        let rec = TilingRecord::from_tiling(self);
        serde_json::to_string(&rec).expect("tiling serialization is infallible")
    }

    pub fn from_json(s: &str) -> Result<Tiling> {
        let rec: TilingRecord =
            serde_json::from_str(s).map_err(|e| Error::Format(format!("bad tiling record: {e}")))?;
        rec.into_tiling()
    }
}

#[derive(Serialize, Deserialize)]
struct TilingRecord {
    format_version: u32,
    domain: DomainSpec,
    tiles: Vec<((i64, i64), String)>,
}

impl TilingRecord {
    fn from_tiling(t: &Tiling) -> Self {
        let tiles: Vec<((i64, i64), String)> = match &t.data {
            TilingData::Dominoes(map) => map
                .iter()
                .map(|(&a, &k)| {
                    (a, match k {
                        DominoKind::HL => "h_l".to_string(),
                        DominoKind::HR => "h_r".to_string(),
                        DominoKind::VU => "v_u".to_string(),
                        DominoKind::VD => "v_d".to_string(),
                    })
                })
                .collect(),
            TilingData::Chain(c) => {
                let shape = HexagonShape::for_domain(&t.domain).expect("chain implies hexagon");
                shape
                    .lozenges(c)
                    .iter()
                    .map(|(&a, &k)| {
                        (a, match k {
                            LozengeKind::Red => "red".to_string(),
                            LozengeKind::Blue => "blue".to_string(),
                            LozengeKind::Green => "green".to_string(),
                        })
                    })
                    .collect()
            }
        };
        TilingRecord { format_version: 1, domain: t.domain.clone(), tiles }
    }

    fn into_tiling(self) -> Result<Tiling> {
        match &self.domain {
            DomainSpec::CutHexagon { .. } => {
                let shape = HexagonShape::for_domain(&self.domain)?;
                let reds: Vec<(i64, i64)> = self
                    .tiles
                    .iter()
                    .filter(|(_, k)| k == "red")
                    .map(|(a, _)| *a)
                    .collect();
                let chain = shape.chain_from_red_anchors(&reds)?;
                Ok(Tiling { domain: self.domain, data: TilingData::Chain(chain) })
            }
            _ => {
                let mut map = DominoTiling::new();
                for (a, k) in &self.tiles {
                    let kind = match k.as_str() {
                        "h_l" => DominoKind::HL,
                        "h_r" => DominoKind::HR,
                        "v_u" => DominoKind::VU,
                        "v_d" => DominoKind::VD,
                        other => return Err(Error::Format(format!("unknown tile kind {other:?}"))),
                    };
                    map.insert(*a, kind);
                }
                let t = Tiling { domain: self.domain, data: TilingData::Dominoes(map) };
                t.validate()?;
                Ok(t)
            }
        }
    }
}

/// Integer height function on lattice vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeightField {
    pub heights: BTreeMap<(i64, i64), i64>,
}

impl HeightField {
    pub fn min(&self) -> i64 {
        self.heights.values().copied().min().unwrap_or(0)
    }
    pub fn max(&self) -> i64 {
        self.heights.values().copied().max().unwrap_or(0)
    }
}

/// Height function of a tiling. For domino domains this lives on the
/// corners (ξ+η even); for hexagons on the doubled row-vertex lattice
/// (2·level, 2·x+1).
pub fn height_field(t: &Tiling) -> Result<HeightField> {
    t.validate()?;
    match &t.data {
        TilingData::Dominoes(tiles) => {
            let region = DominoRegion::for_domain(&t.domain).unwrap();
            Ok(HeightField { heights: domino::height_field(&region, tiles) })
        }
        TilingData::Chain(c) => {
            let shape = HexagonShape::for_domain(&t.domain)?;
            let mut heights = BTreeMap::new();
            for ell in 0..=(shape.n_levels as usize) {
                let (lo, hi) = shape.row_range(ell as i64);
                let holes = shape.holes_at_level(c, ell);
                for x in (lo - 1)..=hi {
                    let h = holes.iter().filter(|&&p| p <= x).count() as i64;
                    heights.insert((2 * ell as i64, 2 * x + 1), h);
                }
            }
            Ok(HeightField { heights })
        }
    }
}

/// Families of dot processes read off a tiling.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum DotFamily {
    Red,
    Blue,
    Green,
}

/// Per-line particle positions. The meaning of line/position depends on
/// the domain and family:
///
/// * Aztec red: line τ (the line ξ = 2τ−1), positions η.
/// * Rectangle red: line τ = m − ξ/2, positions η.
/// * Rectangle blue/green: line s = η+1, positions u = (η−ξ+1)/2.
/// * Hexagon red: line = level m, positions x.
/// * Hexagon blue: line τ = η − m1, positions = hole positions.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DotProcess {
    pub family: DotFamily,
    pub lines: Vec<(i64, Vec<f64>)>,
}

impl DotProcess {
    pub fn line(&self, idx: i64) -> Option<&[f64]> {
        self.lines.iter().find(|(l, _)| *l == idx).map(|(_, v)| v.as_slice())
    }
}

/// Extract a dot process from a tiling.
pub fn extract_dot_process(t: &Tiling, family: DotFamily) -> Result<DotProcess> {
    match (&t.domain, &t.data) {
        (DomainSpec::AztecDiamond { .. }, TilingData::Dominoes(tiles)) => {
            if family != DotFamily::Red {
                return Err(Error::UnsupportedRange(
                    "only the red family is defined on the Aztec diamond".into(),
                ));
            }
            let mut lines: BTreeMap<i64, Vec<f64>> = BTreeMap::new();
            for (&(xi, eta), &k) in tiles {
                if k.carries_red_dot() {
                    lines.entry((xi + 1) / 2).or_default().push(eta as f64);
                }
            }
            Ok(sorted_process(family, lines))
        }
        (DomainSpec::SkewRectangle { m, .. }, TilingData::Dominoes(tiles)) => {
            let mut lines: BTreeMap<i64, Vec<f64>> = BTreeMap::new();
            for (&(xi, eta), &k) in tiles {
                let carries = match family {
                    DotFamily::Red => k.carries_red_dot(),
                    DotFamily::Blue => k.carries_blue_dot(),
                    DotFamily::Green => k.carries_green_dot(),
                };
                if !carries {
                    continue;
                }
                match family {
                    DotFamily::Red => {
                        lines.entry(*m as i64 - xi / 2).or_default().push(eta as f64);
                    }
                    DotFamily::Blue | DotFamily::Green => {
                        let s = eta + 1;
                        let u = (eta - xi + 1) / 2;
                        lines.entry(s).or_default().push(u as f64);
                    }
                }
            }
            Ok(sorted_process(family, lines))
        }
        (DomainSpec::CutHexagon { m1, .. }, TilingData::Chain(c)) => {
            let shape = HexagonShape::for_domain(&t.domain)?;
            match family {
                DotFamily::Red => {
                    let mut lines = BTreeMap::new();
                    for ell in 0..=(shape.n_levels as usize) {
                        let dots: Vec<f64> =
                            shape.dots_at_level(c, ell).iter().map(|&x| x as f64).collect();
                        lines.insert(ell as i64, dots);
                    }
                    Ok(sorted_process(family, lines))
                }
                DotFamily::Blue => {
                    let mut lines = BTreeMap::new();
                    for (eta, dots) in shape.blue_dots_by_line(c) {
                        lines.insert(eta - *m1 as i64, dots.iter().map(|&x| x as f64).collect());
                    }
                    Ok(sorted_process(family, lines))
                }
                DotFamily::Green => Err(Error::UnsupportedRange(
                    "the green family is only defined for rectangles".into(),
                )),
            }
        }
        _ => Err(Error::validation("tiling data does not match the domain kind")),
    }
}

fn sorted_process(family: DotFamily, lines: BTreeMap<i64, Vec<f64>>) -> DotProcess {
    let mut out = Vec::with_capacity(lines.len());
    for (l, mut v) in lines {
        v.sort_by(|a, b| a.partial_cmp(b).unwrap());
        out.push((l, v));
    }
    DotProcess { family, lines: out }
}

/// Kind of interlacing pattern to check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InterlacingKind {
    Single,
    Double,
}

#[derive(Clone, Debug, Default)]
pub struct InterlacingReport {
    pub valid: bool,
    pub violations: Vec<(i64, usize, String)>,
}

/// Check single interlacing x(1) ≺ x(2) ≺ … or the double pattern with
/// the strip [0, ρ] carrying r dots per line. Lines must be keyed so
/// that τ ∈ [0, ρ] is the strip (double) or τ = 1, 2, … (single).
pub fn validate_interlacing(d: &DotProcess, kind: InterlacingKind, rho: i64, r: i64) -> InterlacingReport {
    let mut report = InterlacingReport { valid: true, violations: Vec::new() };
    let fail = |line: i64, idx: usize, why: String, report: &mut InterlacingReport| {
        report.valid = false;
        report.violations.push((line, idx, why));
    };

    let lines = &d.lines;
    for w in lines.windows(2) {
        let (t0, ref a) = w[0];
        let (t1, ref b) = w[1];
        if t1 != t0 + 1 {
            continue;
        }
        match kind {
            InterlacingKind::Single => {
                // a = x^(τ), b = x^(τ+1), |b| = |a|+1, b_1 ≤ a_1 ≤ b_2 ≤ …
                if b.len() != a.len() + 1 {
                    fail(t1, 0, format!("expected {} dots, found {}", a.len() + 1, b.len()), &mut report);
                    continue;
                }
                check_bracket(b, a, t1, &mut report);
            }
            InterlacingKind::Double => {
                let expect = |tau: i64| -> i64 {
                    if tau >= 0 {
                        r + (tau - rho).max(0)
                    } else {
                        r - tau
                    }
                };
                if a.len() as i64 != expect(t0) || b.len() as i64 != expect(t1) {
                    // counts are validated elsewhere; only structure here
                }
                if t0 >= 0 && t1 <= rho {
                    // inside the strip: a ⋞ b (equal sizes)
                    if a.len() != b.len() {
                        fail(t1, 0, format!("strip lines must carry equal counts, {} vs {}", a.len(), b.len()), &mut report);
                        continue;
                    }
                    for i in 0..a.len() {
                        if !(a[i] <= b[i]) {
                            fail(t1, i, format!("strip order broken: {} > {}", a[i], b[i]), &mut report);
                        }
                        if i + 1 < a.len() && !(b[i] <= a[i + 1]) {
                            fail(t1, i, format!("strip interleave broken: {} > {}", b[i], a[i + 1]), &mut report);
                        }
                    }
                } else if t1 <= 0 {
                    // left of the strip: sizes shrink with τ; a ≻ b
                    if a.len() != b.len() + 1 {
                        fail(t1, 0, format!("left of strip: expected {} dots, found {}", a.len().saturating_sub(1), b.len()), &mut report);
                        continue;
                    }
                    check_bracket(a, b, t1, &mut report);
                } else if t0 >= rho {
                    // right of the strip: sizes grow with τ; a ≺ b
                    if b.len() != a.len() + 1 {
                        fail(t1, 0, format!("right of strip: expected {} dots, found {}", a.len() + 1, b.len()), &mut report);
                        continue;
                    }
                    check_bracket(b, a, t1, &mut report);
                }
            }
        }
    }
    report
}

/// outer brackets inner: outer_1 ≤ inner_1 ≤ outer_2 ≤ … (sizes k+1, k).
fn check_bracket(outer: &[f64], inner: &[f64], line: i64, report: &mut InterlacingReport) {
    for i in 0..inner.len() {
        if !(outer[i] <= inner[i]) {
            report.valid = false;
            report.violations.push((line, i, format!("interlacing broken: {} > {}", outer[i], inner[i])));
        }
        if !(inner[i] <= outer[i + 1]) {
            report.valid = false;
            report.violations.push((line, i, format!("interlacing broken: {} > {}", inner[i], outer[i + 1])));
        }
    }
}

/// Apply an elementary flip at `loc`. Dominoes: `loc` is the corner of a
/// 2x2 block covered by two dominoes. Hexagons: `loc = (level, x)`
/// toggles a red dot between x and x+1. Flips are involutions.
pub fn elementary_flip(t: &Tiling, loc: (i64, i64)) -> Result<Tiling> {
    match &t.data {
        TilingData::Dominoes(tiles) => {
            let region = DominoRegion::for_domain(&t.domain).unwrap();
            let upd = domino::flip_kinds(&region, tiles, loc)
                .ok_or_else(|| Error::validation(format!("no flippable block at {loc:?}")))?;
            let mut new = tiles.clone();
            for (b, k) in upd {
                new.insert(b, k);
            }
            Ok(Tiling { domain: t.domain.clone(), data: TilingData::Dominoes(new) })
        }
        TilingData::Chain(c) => {
            let shape = HexagonShape::for_domain(&t.domain)?;
            let (level, x) = loc;
            if level <= 0 || level >= shape.n_levels {
                return Err(Error::validation("flip level must be interior"));
            }
            let dots = shape.dots_at_level(c, level as usize);
            let mut new = c.clone();
            let toggled = if let Some(i) = dots.iter().position(|&p| p == x) {
                set_dot(&mut new, level as usize, i, x + 1)
            } else if let Some(i) = dots.iter().position(|&p| p == x + 1) {
                set_dot(&mut new, level as usize, i, x)
            } else {
                false
            };
            if !toggled || !shape.chain_is_valid(&new) {
                return Err(Error::validation(format!("no flippable hexagon at {loc:?}")));
            }
            Ok(Tiling { domain: t.domain.clone(), data: TilingData::Chain(new) })
        }
    }
}

fn set_dot(chain: &mut PartitionChain, level: usize, i: usize, x: i64) -> bool {
    let nu = &chain.levels[level];
    let mut parts: Vec<u64> = (0..nu.len().max(i + 1)).map(|j| nu.part(j)).collect();
    let p = x + i as i64 + 1;
    if p < 0 {
        return false;
    }
    parts[i] = p as u64;
    if parts.windows(2).any(|w| w[0] < w[1]) {
        return false;
    }
    chain.levels[level] = Partition::new(parts);
    true
}

/// All flippable locations of a tiling (for MCMC proposals).
pub fn flippable_locations(t: &Tiling) -> Result<Vec<(i64, i64)>> {
    match &t.data {
        TilingData::Dominoes(tiles) => {
            let region = DominoRegion::for_domain(&t.domain).unwrap();
            Ok(domino::flippable_corners(&region, tiles))
        }
        TilingData::Chain(c) => {
            let shape = HexagonShape::for_domain(&t.domain)?;
            let mut out = Vec::new();
            for level in 1..shape.n_levels {
                let dots = shape.dots_at_level(c, level as usize);
                for (i, &x) in dots.iter().enumerate() {
                    for (anchor, nx) in [(x, x + 1), (x - 1, x - 1)] {
                        let mut cand = c.clone();
                        if set_dot(&mut cand, level as usize, i, nx) && shape.chain_is_valid(&cand) {
                            out.push((level, anchor));
                        }
                    }
                }
            }
            out.sort_unstable();
            out.dedup();
            Ok(out)
        }
    }
}
