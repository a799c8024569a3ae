//! Exact counting and exhaustive enumeration: the ground-truth oracle the
//! kernels and samplers are tested against. Everything here is big-integer
//! or big-rational arithmetic; nothing is approximated.

use crate::domains::DomainSpec;
use crate::error::Error;
use crate::linalg::{det_rat, Mat};
use crate::tilings::chain::{HexagonShape, Partition, PartitionChain};
use crate::tilings::domino::{white_partner, DominoRegion, DominoTiling, DOMINO_KINDS};
use crate::tilings::{DotFamily, Tiling, TilingData};
use crate::Result;
use num::{BigInt, BigRational, BigUint, One, Signed, ToPrimitive, Zero};
use std::collections::BTreeMap;

/// Default cap on exhaustive enumeration.
pub const DEFAULT_ENUM_CAP: u64 = 1_000_000;

/// Exact number of tilings of a domain. Untilable domains count 0.
pub fn count_tilings(domain: &DomainSpec) -> BigUint {
    match *domain {
        DomainSpec::AztecDiamond { n } => {
            BigUint::from(2u32).pow(n * (n + 1) / 2)
        }
        DomainSpec::SkewRectangle { .. } => {
            let region = DominoRegion::for_domain(domain).unwrap();
            count_matchings(&region)
        }
        DomainSpec::CutHexagon { .. } => match HexagonShape::for_domain(domain) {
            Ok(shape) => skew_schur_ones(&shape.lambda, &shape.mu, shape.n_levels as u64),
            Err(_) => BigUint::zero(),
        },
    }
}

/// MacMahon box product ∏∏∏ (i+j+k−1)/(i+j+k−2) for the a×b×c hexagon.
pub fn macmahon(a: u64, b: u64, c: u64) -> BigUint {
    let mut acc = BigRational::one();
    for i in 1..=a {
        for j in 1..=b {
            for k in 1..=c {
                acc *= BigRational::new(
                    BigInt::from(i + j + k - 1),
                    BigInt::from(i + j + k - 2),
                );
            }
        }
    }
    debug_assert!(acc.is_integer());
    acc.to_integer().to_biguint().expect("MacMahon product is positive")
}

/// MacMahon's superfactorial form H(a)H(b)H(c)H(a+b+c) / (H(a+b)H(a+c)H(b+c))
/// with H(n) = (n−1)! (n−2)! … 1! 0!.
pub fn macmahon_h_form(a: u64, b: u64, c: u64) -> BigUint {
    fn h(n: u64) -> BigUint {
        let mut acc = BigUint::one();
        let mut fact = BigUint::one();
        for k in 1..n {
            fact *= BigUint::from(k);
            acc *= &fact;
        }
        acc
    }
    let num = h(a) * h(b) * h(c) * h(a + b + c);
    let den = h(a + b) * h(a + c) * h(b + c);
    debug_assert!((&num % &den).is_zero());
    num / den
}

/// Skew Schur polynomial s_{λ\μ} evaluated at N ones, via the
/// Jacobi–Trudi determinant det(h_{λ_i−i−μ_j+j}) with
/// h_r(1^N) = C(N+r−1, r). Returns 0 when μ ⊄ λ.
pub fn skew_schur_ones(lambda: &Partition, mu: &Partition, n_ones: u64) -> BigUint {
    if !lambda.contains(mu) {
        return BigUint::zero();
    }
    if lambda.len() == 0 {
        return BigUint::one();
    }
    let l = lambda.len();
    let h = |r: i64| -> BigRational {
        if r < 0 {
            return BigRational::zero();
        }
        BigRational::from_integer(BigInt::from(crate::exact::binom(n_ones + r as u64 - 1, r as u64)))
    };
    let m = Mat::from_fn(l, l, |i, j| {
        h(lambda.part(i) as i64 - i as i64 - mu.part(j) as i64 + j as i64)
    });
    let det = det_rat(&m);
    debug_assert!(det.is_integer() && !det.is_negative());
    det.to_integer().to_biguint().unwrap_or_else(BigUint::zero)
}

/// Count perfect matchings of a domino region by a column-profile DP.
fn count_matchings(region: &DominoRegion) -> BigUint {
    let columns = column_slots(region);
    if columns.is_empty() {
        return BigUint::one();
    }
    let xis: Vec<i64> = columns.keys().copied().collect();
    // state: bitmask over the next column's slots that are already covered
    let mut states: BTreeMap<u64, BigUint> = BTreeMap::new();
    states.insert(0, BigUint::one());
    for (ci, xi) in xis.iter().enumerate() {
        let slots = &columns[xi];
        let next = xis.get(ci + 1).and_then(|x| columns.get(x));
        let mut new_states: BTreeMap<u64, BigUint> = BTreeMap::new();
        for (mask, ways) in &states {
            let uncovered: Vec<i64> = slots
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) == 0)
                .map(|(_, &eta)| eta)
                .collect();
            // assign each uncovered square a partner in the next column
            let mut stack: Vec<(usize, u64)> = vec![(0, 0)];
            while let Some((i, used)) = stack.pop() {
                if i == uncovered.len() {
                    new_states
                        .entry(used)
                        .and_modify(|w| *w += ways.clone())
                        .or_insert_with(|| ways.clone());
                    continue;
                }
                let eta = uncovered[i];
                if let Some(next_slots) = next {
                    for target in [eta - 1, eta + 1] {
                        if let Ok(bit) = next_slots.binary_search(&target) {
                            if used & (1 << bit) == 0 {
                                stack.push((i + 1, used | (1 << bit)));
                            }
                        }
                    }
                }
            }
        }
        states = new_states;
    }
    states.remove(&0).unwrap_or_else(BigUint::zero)
}

fn column_slots(region: &DominoRegion) -> BTreeMap<i64, Vec<i64>> {
    let mut columns: BTreeMap<i64, Vec<i64>> = BTreeMap::new();
    for &(xi, eta) in region.blues.iter().chain(region.whites.iter()) {
        columns.entry(xi).or_default().push(eta);
    }
    for v in columns.values_mut() {
        v.sort_unstable();
    }
    columns
}

/// Visit every tiling exactly once, in the deterministic order induced by
/// filling blue squares in reading order and trying kinds in the fixed
/// order H_L, H_R, V_U, V_D (hexagons: levels bottom-up, parts
/// lexicographically). Refuses with the exact count if it exceeds `cap`.
pub fn for_each_tiling(
    domain: &DomainSpec,
    cap: u64,
    mut visit: impl FnMut(&Tiling),
) -> Result<()> {
    let count = count_tilings(domain);
    if count > BigUint::from(cap) {
        return Err(Error::CapExceeded { count, cap });
    }
    match domain {
        DomainSpec::CutHexagon { .. } => {
            let shape = HexagonShape::for_domain(domain)?;
            let mut chain = vec![shape.mu.clone()];
            enumerate_chains(domain, &shape, &mut chain, &mut visit);
            Ok(())
        }
        _ => {
            let region = DominoRegion::for_domain(domain).unwrap();
            let mut tiles = DominoTiling::new();
            let mut covered = std::collections::BTreeSet::new();
            enumerate_dominoes(domain, &region, &mut tiles, &mut covered, 0, &mut visit);
            Ok(())
        }
    }
}

/// Collect all tilings into a vector (small domains only).
pub fn enumerate_tilings(domain: &DomainSpec, cap: u64) -> Result<Vec<Tiling>> {
    let mut out = Vec::new();
    for_each_tiling(domain, cap, |t| out.push(t.clone()))?;
    Ok(out)
}

fn enumerate_dominoes(
    domain: &DomainSpec,
    region: &DominoRegion,
    tiles: &mut DominoTiling,
    covered: &mut std::collections::BTreeSet<(i64, i64)>,
    from: usize,
    visit: &mut impl FnMut(&Tiling),
) {
    let Some((idx, &blue)) = region
        .blues
        .iter()
        .enumerate()
        .skip(from)
        .find(|(_, b)| !tiles.contains_key(b))
    else {
        let t = Tiling { domain: domain.clone(), data: TilingData::Dominoes(tiles.clone()) };
        visit(&t);
        return;
    };
    for kind in DOMINO_KINDS {
        let w = white_partner(blue, kind);
        if !region.has_white(w) || covered.contains(&w) {
            continue;
        }
        tiles.insert(blue, kind);
        covered.insert(w);
        enumerate_dominoes(domain, region, tiles, covered, idx + 1, visit);
        tiles.remove(&blue);
        covered.remove(&w);
    }
}

fn enumerate_chains(
    domain: &DomainSpec,
    shape: &HexagonShape,
    chain: &mut Vec<Partition>,
    visit: &mut impl FnMut(&Tiling),
) {
    let level = chain.len() as i64 - 1;
    if level == shape.n_levels {
        if chain.last() == Some(&shape.lambda) {
            let t = Tiling {
                domain: domain.clone(),
                data: TilingData::Chain(PartitionChain { levels: chain.clone() }),
            };
            visit(&t);
        }
        return;
    }
    let prev = chain.last().unwrap().clone();
    let remaining = shape.n_levels - level - 1;
    for nu in horizontal_strips_between(&prev, &shape.lambda) {
        // λ must stay reachable in the remaining steps: at most one box per
        // column per step means λ_{i+remaining} ≤ ν_i.
        let reachable = (0..shape.lambda.len())
            .all(|i| {
                let need = shape.lambda.part(i + remaining as usize);
                need <= nu.part(i)
            });
        if !reachable {
            continue;
        }
        chain.push(nu);
        enumerate_chains(domain, shape, chain, visit);
        chain.pop();
    }
}

/// All ν with μ ⊆ ν ⊆ λ and ν/μ a horizontal strip; the part ranges are
/// independent intervals ν_j ∈ [μ_j, min(λ_j, μ_{j−1})].
pub fn horizontal_strips_between(mu: &Partition, lambda: &Partition) -> Vec<Partition> {
    let len = lambda.len();
    let mut out = Vec::new();
    let mut parts = vec![0u64; len];
    fn rec(
        j: usize,
        len: usize,
        mu: &Partition,
        lambda: &Partition,
        parts: &mut Vec<u64>,
        out: &mut Vec<Partition>,
    ) {
        if j == len {
            out.push(Partition::new(parts.clone()));
            return;
        }
        let lo = mu.part(j);
        let hi = if j == 0 {
            lambda.part(0)
        } else {
            lambda.part(j).min(mu.part(j - 1))
        };
        for v in lo..=hi {
            parts[j] = v;
            rec(j + 1, len, mu, lambda, parts, out);
        }
    }
    if len == 0 {
        out.push(Partition::empty());
        return out;
    }
    rec(0, len, mu, lambda, &mut parts, &mut out);
    out
}

/// Tableau encoding of a cut-hexagon tiling: the chain itself.
pub fn tiling_to_tableau(t: &Tiling) -> Result<PartitionChain> {
    match (&t.domain, &t.data) {
        (DomainSpec::CutHexagon { .. }, TilingData::Chain(c)) => {
            let shape = HexagonShape::for_domain(&t.domain)?;
            if !shape.chain_is_valid(c) {
                return Err(Error::validation("chain is not a valid skew tableau"));
            }
            Ok(c.clone())
        }
        _ => Err(Error::validation("tableaux are only defined for cut hexagons")),
    }
}

pub fn tableau_to_tiling(domain: &DomainSpec, chain: PartitionChain) -> Result<Tiling> {
    let shape = HexagonShape::for_domain(domain)?;
    if !shape.chain_is_valid(&chain) {
        return Err(Error::validation("chain is not a valid skew tableau"));
    }
    Ok(Tiling { domain: domain.clone(), data: TilingData::Chain(chain) })
}

/// Integer dot positions of a tiling, keyed (line, position) with the
/// same line conventions as [`crate::tilings::extract_dot_process`].
pub fn dot_set(t: &Tiling, family: DotFamily) -> Result<std::collections::BTreeSet<(i64, i64)>> {
    let process = crate::tilings::extract_dot_process(t, family)?;
    let mut out = std::collections::BTreeSet::new();
    for (line, positions) in &process.lines {
        for &p in positions {
            out.insert((*line, p as i64));
        }
    }
    Ok(out)
}

/// Exact correlation: P(dots of `family` at all of `points`) under the
/// weight `a^{weight exponent}` (vertical dominoes, or the q-volume for
/// hexagons). Big-rational arithmetic throughout.
pub fn exact_correlation(
    domain: &DomainSpec,
    a: &BigRational,
    family: DotFamily,
    points: &[(i64, i64)],
    cap: u64,
) -> Result<BigRational> {
    let mut num = BigRational::zero();
    let mut den = BigRational::zero();
    let mut err = None;
    for_each_tiling(domain, cap, |t| {
        if err.is_some() {
            return;
        }
        let w = crate::exact::rat_pow(a, t.weight_exponent() as i64);
        match dot_set(t, family) {
            Ok(dots) => {
                den += &w;
                if points.iter().all(|p| dots.contains(p)) {
                    num += &w;
                }
            }
            Err(e) => err = Some(e),
        }
    })?;
    if let Some(e) = err {
        return Err(e);
    }
    if den.is_zero() {
        return Err(Error::Untilable(format!("{domain:?}")));
    }
    Ok(num / den)
}

/// Monte-Carlo-free sanity helper: total weight (partition function).
pub fn partition_function(domain: &DomainSpec, a: &BigRational, cap: u64) -> Result<BigRational> {
    let mut z = BigRational::zero();
    for_each_tiling(domain, cap, |t| {
        z += crate::exact::rat_pow(a, t.weight_exponent() as i64);
    })?;
    Ok(z)
}

#[allow(unused)]
fn to_u64(b: &BigUint) -> Option<u64> {
    b.to_u64()
}
