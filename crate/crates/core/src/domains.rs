//! The three tiling domains and their derived geometry: strip width ρ,
//! dots-per-line r, tilability cases, and exact coordinate-frame
//! conversions.

use crate::error::Error;
use crate::Result;
use num::rational::Ratio;
use serde::{Deserialize, Serialize};

pub type Rational = Ratio<i64>;

/// One of the three tiling domains.
///
/// All parameters are lattice counts. `SkewRectangle` uses the paper's
/// `n` (side width), `m`/`big_m` (white/blue counts along the long
/// sides); `CutHexagon` is the two-cut hexagon with vertical sides `b`,
/// oblique sides `c`, cut size `d` and cut positions `m1,m2` (bottom) /
/// `n1,n2` (top).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "params", rename_all = "snake_case")]
pub enum DomainSpec {
    AztecDiamond { n: u32 },
    SkewRectangle { n: u32, m: u32, big_m: u32 },
    CutHexagon { b: u32, c: u32, d: u32, m1: u32, m2: u32, n1: u32, n2: u32 },
}

/// Which tilability case of the skew rectangle holds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum TilabilityCase {
    Case1,
    Case2,
    Hexagon,
    None,
}

/// Strip geometry derived from a domain: Δ, σ, the strip width ρ and the
/// per-line dot count r.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StripParams {
    pub delta: i64,
    pub sigma: i64,
    pub rho: i64,
    pub r: i64,
    pub tilable: bool,
    pub case: TilabilityCase,
}

/// Fixed boundary dot positions of a cut hexagon (bottom `y` line and top
/// `x` line), plus the number of levels N = b + c.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HexagonBoundary {
    pub y: Vec<i64>,
    pub x: Vec<i64>,
    pub n_levels: u32,
}

impl DomainSpec {
    pub fn aztec(n: u32) -> Result<Self> {
        if n < 1 {
            return Err(Error::validation("Aztec diamond needs n >= 1"));
        }
        Ok(DomainSpec::AztecDiamond { n })
    }

    pub fn rectangle(n: u32, m: u32, big_m: u32) -> Result<Self> {
        if n < 1 || big_m < 1 {
            return Err(Error::validation("skew rectangle needs n >= 1 and M >= 1"));
        }
        Ok(DomainSpec::SkewRectangle { n, m, big_m })
    }

    #[allow(clippy::too_many_arguments)]
    pub fn cut_hexagon(b: u32, c: u32, d: u32, m1: u32, m2: u32, n1: u32, n2: u32) -> Result<Self> {
        if c < 1 {
            return Err(Error::validation("cut hexagon needs c >= 1"));
        }
        if b < d {
            return Err(Error::validation("cut hexagon needs b >= d"));
        }
        if m1 + m2 != n1 + n2 {
            return Err(Error::Untilable(format!(
                "cut hexagon needs m1+m2 = n1+n2, got {} != {}",
                m1 + m2,
                n1 + n2
            )));
        }
        Ok(DomainSpec::CutHexagon { b, c, d, m1, m2, n1, n2 })
    }

    /// Hexagon with sides (a, b, c, a, b, c) and no cuts.
    pub fn plain_hexagon(a: u32, b: u32, c: u32) -> Result<Self> {
        Self::cut_hexagon(a, b, 0, 0, c, 0, c)
    }

    pub fn strip_params(&self) -> StripParams {
        match *self {
            DomainSpec::AztecDiamond { n } => StripParams {
                delta: n as i64,
                sigma: 0,
                rho: 0,
                r: n as i64,
                tilable: true,
                case: TilabilityCase::None,
            },
            DomainSpec::SkewRectangle { n, m, big_m } => derive_rectangle_params_unchecked(n, m, big_m),
            DomainSpec::CutHexagon { b, c, d, m1, m2, n1, n2 } => {
                derive_hexagon_params(b, c, d, m1, m2, n1, n2)
                    .map(|(p, _)| p)
                    .unwrap_or(StripParams {
                        delta: 0,
                        sigma: 0,
                        rho: 0,
                        r: 0,
                        tilable: false,
                        case: TilabilityCase::None,
                    })
            }
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("domain serialization is infallible")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Format(format!("bad domain spec: {e}")))
    }
}

/// Strip parameters of the skew rectangle, with the tilability cases.
pub fn derive_rectangle_params(n: u32, m: u32, big_m: u32) -> Result<StripParams> {
    if n < 1 || big_m < 1 {
        return Err(Error::validation("skew rectangle needs n >= 1 and M >= 1"));
    }
    Ok(derive_rectangle_params_unchecked(n, m, big_m))
}

fn derive_rectangle_params_unchecked(n: u32, m: u32, big_m: u32) -> StripParams {
    let (n, m, mm) = (n as i64, m as i64, big_m as i64);
    let delta = n - m;
    let sigma = n - mm + delta + 1;
    let rho = (m - (mm - 1)).abs();
    let r = (n - mm + 1).max(n - m);
    let case1 = 1 <= mm && mm <= m.min(n + 1);
    let case2 = 1 <= m + 1 && m + 1 <= mm.min(n + 1);
    let (tilable, case) = if case1 {
        (true, TilabilityCase::Case1)
    } else if case2 {
        (true, TilabilityCase::Case2)
    } else {
        (false, TilabilityCase::None)
    };
    StripParams { delta, sigma, rho, r, tilable, case }
}

/// Strip parameters and fixed boundary dots of a cut hexagon.
#[allow(clippy::too_many_arguments)]
pub fn derive_hexagon_params(
    b: u32,
    c: u32,
    d: u32,
    m1: u32,
    m2: u32,
    n1: u32,
    n2: u32,
) -> Result<(StripParams, HexagonBoundary)> {
    if c < 1 {
        return Err(Error::validation("cut hexagon needs c >= 1"));
    }
    if b < d {
        return Err(Error::validation("cut hexagon needs b >= d"));
    }
    if m1 + m2 != n1 + n2 {
        return Err(Error::Untilable(format!(
            "cut hexagon needs m1+m2 = n1+n2, got {} != {}",
            m1 + m2,
            n1 + n2
        )));
    }
    let (bi, ci, di, m1i, m2i, n1i, n2i) =
        (b as i64, c as i64, d as i64, m1 as i64, m2 as i64, n1 as i64, n2 as i64);
    let rho = n1i - m1i + bi - di;
    let rho2 = m2i - n2i + bi - di;
    debug_assert_eq!(rho, rho2);
    let r = bi - di;
    let n_levels = b + c;

    // Bottom boundary dots y_1 > ... > y_{d+N}; top dots likewise.
    let nn = (di + n_levels as i64) as usize;
    let mut y = Vec::with_capacity(nn);
    for i in 1..=di {
        y.push(m1i - i);
    }
    for i in (di + 1)..=(nn as i64) {
        y.push(-i);
    }
    let mut x = Vec::with_capacity(nn);
    for i in 1..=ci {
        x.push(m1i + m2i - i);
    }
    for i in (ci + 1)..=(ci + di) {
        x.push(n1i - i);
    }
    for i in (ci + di + 1)..=(nn as i64) {
        x.push(-i);
    }

    // Tilable iff the skew shape λ\μ is nonempty in the partition sense:
    // the fixed top dots must dominate the fixed bottom dots part-wise.
    let tilable = rho >= 0 && x.iter().zip(y.iter()).all(|(xi, yi)| xi >= yi);

    let params = StripParams {
        delta: r - rho,
        sigma: 0,
        rho,
        r,
        tilable,
        case: if tilable { TilabilityCase::Hexagon } else { TilabilityCase::None },
    };
    Ok((params, HexagonBoundary { y, x, n_levels }))
}

/// Coordinate frames used by the paper's kernels.
///
/// * `XiEta` — the square-lattice frame all domains share.
/// * `SU` — the sheared frame of the skew rectangle, s = η+1, u = (η-ξ+1)/2.
/// * `MX` — the hexagon's level/position frame, η = m+x+1/2, ξ = m-x-1/2.
/// * `TauY` — strip-indexed lines: τ counts lines across the strip.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Frame {
    XiEta,
    SU,
    MX,
    TauY,
}

/// An exact point tagged with the frame its coordinates live in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LatticePoint {
    pub a: Rational,
    pub b: Rational,
    pub frame: Frame,
}

impl LatticePoint {
    pub fn new(a: Rational, b: Rational, frame: Frame) -> Self {
        LatticePoint { a, b, frame }
    }

    pub fn xi_eta(xi: Rational, eta: Rational) -> Self {
        LatticePoint { a: xi, b: eta, frame: Frame::XiEta }
    }
}

/// Exact frame conversion; the round trip is the identity.
pub fn map_coordinates(domain: &DomainSpec, p: LatticePoint, target: Frame) -> Result<LatticePoint> {
    if p.frame == target {
        return Ok(p);
    }
    let via = to_xi_eta(domain, p)?;
    from_xi_eta(domain, via, target)
}

fn unsupported(domain: &DomainSpec, frame: Frame) -> Error {
    Error::UnsupportedRange(format!("frame {frame:?} is not defined for {domain:?}"))
}

fn to_xi_eta(domain: &DomainSpec, p: LatticePoint) -> Result<(Rational, Rational)> {
    let half = Rational::new(1, 2);
    match (domain, p.frame) {
        (_, Frame::XiEta) => Ok((p.a, p.b)),
        (DomainSpec::SkewRectangle { .. }, Frame::SU) => {
            // s = η+1, u = (η-ξ+1)/2  =>  η = s-1, ξ = s-2u
            let (s, u) = (p.a, p.b);
            Ok((s - u * 2, s - 1))
        }
        (DomainSpec::SkewRectangle { m, .. }, Frame::TauY) => {
            // τ = m - ξ/2, y = η
            let (tau, y) = (p.a, p.b);
            Ok((Rational::from(2 * *m as i64) - tau * 2, y))
        }
        (DomainSpec::CutHexagon { .. }, Frame::MX) => {
            // η = m+x+1/2, ξ = m-x-1/2
            let (mm, x) = (p.a, p.b);
            Ok((mm - x - half, mm + x + half))
        }
        (DomainSpec::CutHexagon { m1, .. }, Frame::TauY) => {
            // τ = η - m1, y = ξ
            let (tau, y) = (p.a, p.b);
            Ok((y, tau + Rational::from(*m1 as i64)))
        }
        (DomainSpec::AztecDiamond { .. }, Frame::TauY) => {
            // lines ξ = 2τ-1 carrying τ dots, y = η
            let (tau, y) = (p.a, p.b);
            Ok((tau * 2 - 1, y))
        }
        (d, f) => Err(unsupported(d, f)),
    }
}

fn from_xi_eta(domain: &DomainSpec, xe: (Rational, Rational), target: Frame) -> Result<LatticePoint> {
    let (xi, eta) = xe;
    let half = Rational::new(1, 2);
    let (a, b) = match (domain, target) {
        (_, Frame::XiEta) => (xi, eta),
        (DomainSpec::SkewRectangle { .. }, Frame::SU) => (eta + 1, (eta - xi + 1) * half),
        (DomainSpec::SkewRectangle { m, .. }, Frame::TauY) => {
            (Rational::from(*m as i64) - xi * half, eta)
        }
        (DomainSpec::CutHexagon { .. }, Frame::MX) => ((eta + xi) * half, (eta - xi) * half - half),
        (DomainSpec::CutHexagon { m1, .. }, Frame::TauY) => {
            (eta - Rational::from(*m1 as i64), xi)
        }
        (DomainSpec::AztecDiamond { .. }, Frame::TauY) => ((xi + 1) * half, eta),
        (d, f) => return Err(unsupported(d, f)),
    };
    Ok(LatticePoint { a, b, frame: target })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rectangle_params_fig5() {
        // n=8, m=10, M=3
        let p = derive_rectangle_params(8, 10, 3).unwrap();
        assert_eq!(p.delta, -2);
        assert_eq!(p.sigma, 4);
        assert_eq!(p.rho, 8);
        assert_eq!(p.r, 6);
        assert!(p.tilable);
        assert_eq!(p.case, TilabilityCase::Case1);
    }

    #[test]
    fn rectangle_params_overlapping_diamonds() {
        // n=8, m=8, M=5: ρ=r=n-M+1=σ=4
        let p = derive_rectangle_params(8, 8, 5).unwrap();
        assert_eq!(p.delta, 0);
        assert_eq!(p.sigma, 4);
        assert_eq!(p.rho, 4);
        assert_eq!(p.r, 4);
        assert!(p.tilable);
        assert_eq!(p.case, TilabilityCase::Case1);
    }

    #[test]
    fn rectangle_untilable() {
        let p = derive_rectangle_params(1, 3, 3).unwrap();
        assert!(!p.tilable);
        assert_eq!(p.case, TilabilityCase::None);
    }

    #[test]
    fn rho_equals_r_family() {
        // derive(n, n, n-ρ+1) has rho == r for 1 <= ρ <= n
        for n in 1..=8u32 {
            for rho in 1..=n {
                let p = derive_rectangle_params(n, n, n - rho + 1).unwrap();
                assert_eq!(p.rho, p.r);
                assert_eq!(p.rho, rho as i64);
            }
        }
    }

    #[test]
    fn hexagon_params_fig11() {
        let (p, bd) = derive_hexagon_params(3, 7, 2, 4, 6, 5, 5).unwrap();
        assert_eq!(p.rho, 2);
        assert_eq!(p.r, 1);
        assert!(p.tilable);
        assert_eq!(bd.n_levels, 10);
        // y_1 = m1-1, y_{d+N} = -d-N
        assert_eq!(bd.y[0], 3);
        assert_eq!(*bd.y.last().unwrap(), -12);
        // x_1 = m1+m2-1, x_{d+N} = -d-N
        assert_eq!(bd.x[0], 9);
        assert_eq!(*bd.x.last().unwrap(), -12);
    }

    #[test]
    fn hexagon_untilable_balance() {
        assert!(derive_hexagon_params(3, 7, 2, 4, 6, 5, 6).is_err());
    }

    #[test]
    fn hexagon_degenerate_cut_no_strip_dots() {
        let (p, _) = derive_hexagon_params(2, 3, 2, 1, 2, 1, 2).unwrap();
        assert_eq!(p.r, 0);
    }

    #[test]
    fn su_origin_matches() {
        // origin of the (s,u)-system is at (ξ,η) = (0,-1)
        let dom = DomainSpec::rectangle(8, 10, 3).unwrap();
        let p = LatticePoint::xi_eta(Rational::from(0), Rational::from(-1));
        let q = map_coordinates(&dom, p, Frame::SU).unwrap();
        assert_eq!(q.a, Rational::from(0));
        assert_eq!(q.b, Rational::from(0));
    }

    #[test]
    fn hexagon_mx_origin() {
        // (m,x) = (0,0)  ->  (η,ξ) = (1/2, -1/2)
        let dom = DomainSpec::cut_hexagon(3, 7, 2, 4, 6, 5, 5).unwrap();
        let p = LatticePoint::new(Rational::from(0), Rational::from(0), Frame::MX);
        let q = map_coordinates(&dom, p, Frame::XiEta).unwrap();
        assert_eq!(q.b, Rational::new(1, 2)); // η
        assert_eq!(q.a, Rational::new(-1, 2)); // ξ
    }

    #[test]
    fn domain_json_round_trip() {
        let dom = DomainSpec::cut_hexagon(3, 7, 2, 4, 6, 5, 5).unwrap();
        let s = dom.to_json();
        assert!(s.contains("\"kind\":\"cut_hexagon\""));
        assert_eq!(DomainSpec::from_json(&s).unwrap(), dom);
        let az = DomainSpec::aztec(3).unwrap();
        assert_eq!(DomainSpec::from_json(&az.to_json()).unwrap(), az);
    }
}
