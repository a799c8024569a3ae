use arctic_core::domains::{derive_rectangle_params, DomainSpec};
use arctic_core::enumerate::{count_tilings, enumerate_tilings, macmahon};
use arctic_core::tilings::{extract_dot_process, DotFamily};
use num::{BigUint, ToPrimitive, Zero};

#[test]
fn aztec_counts_match_formula() {
    for n in 1..=4u32 {
        let dom = DomainSpec::aztec(n).unwrap();
        let expect = BigUint::from(2u32).pow(n * (n + 1) / 2);
        assert_eq!(count_tilings(&dom), expect);
        let all = enumerate_tilings(&dom, 2000).unwrap();
        assert_eq!(all.len() as u64, expect.to_u64().unwrap(), "n={n}");
    }
}

#[test]
fn aztec_dot_counts_per_line() {
    // each line should carry a fixed number of dots for EVERY tiling
    for n in 1..=3u32 {
        let dom = DomainSpec::aztec(n).unwrap();
        for t in enumerate_tilings(&dom, 2000).unwrap() {
            let dp = extract_dot_process(&t, DotFamily::Red).unwrap();
            let counts: Vec<(i64, usize)> =
                dp.lines.iter().map(|(l, v)| (*l, v.len())).collect();
            println!("n={n} counts={counts:?}");
            for (tau, cnt) in counts {
                assert_eq!(cnt as i64, tau, "n={n} line {tau}");
            }
        }
    }
}

#[test]
fn rectangle_tilability_sweep() {
    for n in 1..=4u32 {
        for m in 0..=5u32 {
            for big_m in 1..=5u32 {
                let dom = DomainSpec::rectangle(n, m, big_m).unwrap();
                let p = derive_rectangle_params(n, m, big_m).unwrap();
                let cnt = count_tilings(&dom);
                let has = !cnt.is_zero();
                assert_eq!(
                    has, p.tilable,
                    "n={n} m={m} M={big_m}: count={cnt} but case says {:?}",
                    p.case
                );
            }
        }
    }
}

#[test]
fn rectangle_strip_dot_counts() {
    // Thm: r red dots on each of the ρ+1 strip lines; counts grow by one
    // per step outside, capped at n.
    for (n, m, big_m) in [(2, 2, 1u32), (2, 2, 2), (3, 2, 1), (2, 3, 2), (3, 3, 2), (2, 0, 2)] {
        let dom = DomainSpec::rectangle(n, m, big_m).unwrap();
        let p = derive_rectangle_params(n, m, big_m).unwrap();
        if !p.tilable {
            continue;
        }
        let all = enumerate_tilings(&dom, 100_000).unwrap();
        assert!(!all.is_empty());
        for t in &all {
            let dp = extract_dot_process(&t, DotFamily::Red).unwrap();
            for (tau, v) in &dp.lines {
                let expect = if *tau >= 0 {
                    p.r + (tau - p.rho).max(0)
                } else {
                    p.r - tau
                };
                let expect = expect.min(n as i64);
                assert_eq!(
                    v.len() as i64,
                    expect,
                    "n={n} m={m} M={big_m} line τ={tau}: got {:?}",
                    v
                );
            }
        }
    }
}

#[test]
fn hexagon_counts() {
    assert_eq!(count_tilings(&DomainSpec::plain_hexagon(1, 1, 1).unwrap()), BigUint::from(2u32));
    assert_eq!(count_tilings(&DomainSpec::plain_hexagon(2, 2, 2).unwrap()), BigUint::from(20u32));
    assert_eq!(macmahon(2, 2, 2), BigUint::from(20u32));
    for a in 1..=3u64 {
        for b in 1..=3u64 {
            for c in 1..=3u64 {
                let dom = DomainSpec::plain_hexagon(a as u32, b as u32, c as u32).unwrap();
                assert_eq!(count_tilings(&dom), macmahon(a, b, c), "{a},{b},{c}");
            }
        }
    }
    // enumeration agrees
    let dom = DomainSpec::plain_hexagon(2, 2, 2).unwrap();
    assert_eq!(enumerate_tilings(&dom, 100).unwrap().len(), 20);
}

#[test]
fn hexagon_fig11_strip_blue_dots() {
    // small two-cut hexagon: every strip line carries r = b−d blue dots
    let dom = DomainSpec::cut_hexagon(2, 2, 1, 1, 2, 2, 1).unwrap();
    let p = dom.strip_params();
    assert!(p.tilable);
    assert_eq!(p.r, 1);
    assert_eq!(p.rho, 2);
    let all = enumerate_tilings(&dom, 100_000).unwrap();
    println!("count = {}", all.len());
    assert!(!all.is_empty());
    for t in &all {
        let dp = extract_dot_process(&t, DotFamily::Blue).unwrap();
        for tau in 0..=p.rho {
            let cnt = dp.line(tau).map(|v| v.len()).unwrap_or(0);
            assert_eq!(cnt as i64, p.r, "line τ={tau}, dots={:?}", dp.lines);
        }
    }
}

#[test]
fn aztec_n1_heights() {
    // both tilings share the boundary trace; the single interior corner differs
    let dom = DomainSpec::aztec(1).unwrap();
    let all = enumerate_tilings(&dom, 10).unwrap();
    assert_eq!(all.len(), 2);
    let h0 = arctic_core::tilings::height_field(&all[0]).unwrap();
    let h1 = arctic_core::tilings::height_field(&all[1]).unwrap();
    let mut diffs = Vec::new();
    for (k, v) in &h0.heights {
        let w = h1.heights[k];
        if *v != w {
            diffs.push((*k, *v, w));
        }
    }
    println!("diffs = {diffs:?}");
    assert_eq!(diffs.len(), 1, "exactly one interior corner differs");
    assert_eq!((diffs[0].1 - diffs[0].2).abs(), 1);
}

#[test]
fn rectangle_boundary_trace_fixed_and_strip_drop() {
    use arctic_core::tilings::domino::{boundary_corners, DominoRegion};
    for (n, m, big_m) in [(2u32, 2u32, 1u32), (2, 2, 2), (3, 2, 1)] {
        let dom = DomainSpec::rectangle(n, m, big_m).unwrap();
        let p = derive_rectangle_params(n, m, big_m).unwrap();
        let region = DominoRegion::for_domain(&dom).unwrap();
        let boundary = boundary_corners(&region);
        let all = enumerate_tilings(&dom, 100_000).unwrap();
        let h0 = arctic_core::tilings::height_field(&all[0]).unwrap();
        for t in &all[1..] {
            let h = arctic_core::tilings::height_field(t).unwrap();
            for c in &boundary {
                assert_eq!(h.heights[c], h0.heights[c], "boundary trace must be fixed at {c:?}");
            }
        }
        // total height spread equals the number of level curves, n+m
        assert_eq!(h0.max() - h0.min(), (n + m) as i64, "level curve count");
        // height drop along each strip line equals r
        for t in &all {
            let h = arctic_core::tilings::height_field(t).unwrap();
            for tau in 0..=p.rho {
                let xi = 2 * m as i64 - 2 * tau;
                let mut col: Vec<(i64, i64)> = h
                    .heights
                    .iter()
                    .filter(|((x, _), _)| *x == xi)
                    .map(|((_, e), v)| (*e, *v))
                    .collect();
                col.sort_unstable();
                let drop = col.first().unwrap().1 - col.last().unwrap().1;
                assert_eq!(drop.abs(), p.r, "strip line ξ={xi}");
            }
        }
    }
}

#[test]
fn rectangle_double_interlacing_all_tilings() {
    use arctic_core::tilings::{validate_interlacing, InterlacingKind};
    for (n, m, big_m) in [(2u32, 2u32, 1u32), (2, 2, 2), (3, 3, 2), (3, 2, 2)] {
        let dom = DomainSpec::rectangle(n, m, big_m).unwrap();
        let p = derive_rectangle_params(n, m, big_m).unwrap();
        if !p.tilable {
            continue;
        }
        for t in enumerate_tilings(&dom, 100_000).unwrap() {
            let dp = extract_dot_process(&t, DotFamily::Red).unwrap();
            let rep = validate_interlacing(&dp, InterlacingKind::Double, p.rho, p.r);
            assert!(rep.valid, "n={n} m={m} M={big_m}: {:?} on {:?}", rep.violations, dp.lines);
        }
    }
}

#[test]
fn aztec_single_interlacing_all_tilings() {
    use arctic_core::tilings::{validate_interlacing, InterlacingKind};
    let dom = DomainSpec::aztec(3).unwrap();
    for t in enumerate_tilings(&dom, 100).unwrap() {
        let dp = extract_dot_process(&t, DotFamily::Red).unwrap();
        let rep = validate_interlacing(&dp, InterlacingKind::Single, 0, 0);
        assert!(rep.valid, "{:?}", rep.violations);
    }
}

#[test]
fn flip_involution_and_flip_graph_connected() {
    use arctic_core::tilings::{elementary_flip, flippable_locations};
    use std::collections::BTreeSet;
    // involution on dominoes
    let dom = DomainSpec::aztec(2).unwrap();
    for t in enumerate_tilings(&dom, 100).unwrap() {
        for loc in flippable_locations(&t).unwrap() {
            let f = elementary_flip(&t, loc).unwrap();
            let ff = elementary_flip(&f, loc).unwrap();
            assert_eq!(ff, t);
        }
    }
    // hexagon(1,1,1): one flippable hexagon connecting its two tilings
    let dom = DomainSpec::plain_hexagon(1, 1, 1).unwrap();
    let all = enumerate_tilings(&dom, 10).unwrap();
    assert_eq!(all.len(), 2);
    let locs = flippable_locations(&all[0]).unwrap();
    assert_eq!(locs.len(), 1, "{locs:?}");
    assert_eq!(elementary_flip(&all[0], locs[0]).unwrap(), all[1]);
    // flip graph on hexagon(2,2,2)'s 20 tilings is connected
    let dom = DomainSpec::plain_hexagon(2, 2, 2).unwrap();
    let all = enumerate_tilings(&dom, 100).unwrap();
    assert_eq!(all.len(), 20);
    let index: std::collections::BTreeMap<String, usize> =
        all.iter().enumerate().map(|(i, t)| (t.to_json(), i)).collect();
    let mut seen = BTreeSet::new();
    let mut stack = vec![0usize];
    seen.insert(0usize);
    while let Some(i) = stack.pop() {
        for loc in flippable_locations(&all[i]).unwrap() {
            let f = elementary_flip(&all[i], loc).unwrap();
            let j = index[&f.to_json()];
            if seen.insert(j) {
                stack.push(j);
            }
        }
    }
    assert_eq!(seen.len(), 20, "flip graph connected");
}

#[test]
fn tiling_json_round_trip() {
    let dom = DomainSpec::rectangle(2, 2, 2).unwrap();
    for t in enumerate_tilings(&dom, 1000).unwrap() {
        let s = t.to_json();
        let back = arctic_core::Tiling::from_json(&s).unwrap();
        assert_eq!(back, t);
        assert_eq!(back.to_json(), s, "canonical bytes");
    }
    let dom = DomainSpec::cut_hexagon(2, 2, 1, 1, 2, 2, 1).unwrap();
    for t in enumerate_tilings(&dom, 1000).unwrap() {
        let back = arctic_core::Tiling::from_json(&t.to_json()).unwrap();
        assert_eq!(back, t);
    }
}

#[test]
fn tableau_round_trip_and_strip_property() {
    use arctic_core::enumerate::{tableau_to_tiling, tiling_to_tableau};
    let dom = DomainSpec::cut_hexagon(2, 2, 1, 1, 2, 2, 1).unwrap();
    for t in enumerate_tilings(&dom, 1000).unwrap() {
        let tab = tiling_to_tableau(&t).unwrap();
        assert!(tab.validate());
        let back = tableau_to_tiling(&dom, tab).unwrap();
        assert_eq!(back, t);
    }
}
