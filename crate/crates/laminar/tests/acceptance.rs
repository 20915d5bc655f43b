//! Acceptance suite: one test per criterion, each printing a PASS line.
//! Randomized corpora are seeded, so every run checks the same cases.

use laminar::catalog;
use laminar::circle::{circular_order, rational, CirclePoint, Leaf, OpenInterval};
use laminar::group::{
    self, classify_gap, fixedpoint_census, noncommuting_witness, pingpong_certify,
    same_type_endpoints_check, GapType, MarkedGroup, PingPongTable, Search,
};
use laminar::homeo::{FixedPointSet, Homeo, MobiusClass, MobiusMap, PLHomeo};
use laminar::lamination::{FiniteLamination, Gap, RainbowOutcome};
use laminar::measure::{full_measure_side, FiniteSupportMeasure, FullMeasureSide};
use laminar::ordertree::{PlanarOrderTree, VertexKind};
use num::{BigRational, One};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

fn rng(stream: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(0x1a51_0000 ^ stream)
}

fn rand_rational(rng: &mut ChaCha8Rng) -> BigRational {
    let d = rng.gen_range(1..=60i64);
    let n = rng.gen_range(0..d);
    rational(n, d)
}

fn rand_angle(rng: &mut ChaCha8Rng) -> CirclePoint {
    CirclePoint::angle(rand_rational(rng))
}

fn rand_proj(rng: &mut ChaCha8Rng) -> CirclePoint {
    if rng.gen_range(0..12) == 0 {
        CirclePoint::infinity()
    } else {
        let d = rng.gen_range(1..=12i64);
        let n = rng.gen_range(-30..=30i64);
        CirclePoint::projective_i(n, d)
    }
}

fn rand_mobius(rng: &mut ChaCha8Rng) -> MobiusMap {
    loop {
        let e = |rng: &mut ChaCha8Rng| rng.gen_range(-9..=9i64);
        if let Ok(m) = MobiusMap::from_ints(e(rng), e(rng), e(rng), e(rng)) {
            if !m.is_identity() {
                return m;
            }
        }
    }
}

fn rand_pl(rng: &mut ChaCha8Rng) -> PLHomeo {
    loop {
        let n = rng.gen_range(2..=5usize);
        let mut xs: Vec<BigRational> = (0..n).map(|_| rand_rational(rng)).collect();
        xs.sort();
        xs.dedup();
        let mut ys: Vec<BigRational> = (0..xs.len()).map(|_| rand_rational(rng)).collect();
        ys.sort();
        ys.dedup();
        if ys.len() != xs.len() || xs.len() < 2 {
            continue;
        }
        let shift = rng.gen_range(0..xs.len());
        let pts: Vec<(BigRational, BigRational)> = xs
            .iter()
            .enumerate()
            .map(|(i, x)| (x.clone(), ys[(i + shift) % ys.len()].clone()))
            .collect();
        match PLHomeo::new(&pts) {
            Ok(p) if !p.is_identity() => return p,
            _ => continue,
        }
    }
}

/// A uniformly random non-crossing perfect matching of 2m points,
/// by the standard recursive split.
fn rand_matching(rng: &mut ChaCha8Rng, lo: usize, hi: usize, out: &mut Vec<(usize, usize)>) {
    if lo >= hi {
        return;
    }
    // match `lo` with a point leaving even-sized blocks on both sides
    let choices: Vec<usize> = (lo + 1..=hi).step_by(2).collect();
    let partner = *choices.choose(rng).unwrap();
    out.push((lo, partner));
    rand_matching(rng, lo + 1, partner - 1, out);
    rand_matching(rng, partner + 1, hi, out);
}

fn rand_lamination(rng: &mut ChaCha8Rng, leaves: usize) -> FiniteLamination {
    let n = 2 * leaves;
    let mut chords = Vec::new();
    rand_matching(rng, 0, n - 1, &mut chords);
    FiniteLamination::new(chords.into_iter().map(|(i, j)| {
        Leaf::new(
            CirclePoint::angle_i(i as i64, n as i64),
            CirclePoint::angle_i(j as i64, n as i64),
        )
        .unwrap()
    }))
    .unwrap()
}

#[test]
fn criterion_1_circular_order_axioms() {
    let start = Instant::now();
    let mut rng = rng(1);
    let mut maps: Vec<Homeo> = Vec::new();
    for _ in 0..10 {
        maps.push(Homeo::PL(rand_pl(&mut rng)));
    }
    let mut proj_maps: Vec<Homeo> = Vec::new();
    for _ in 0..10 {
        proj_maps.push(Homeo::Mobius(rand_mobius(&mut rng)));
    }
    for i in 0..10_000 {
        let projective = i % 2 == 0;
        let pt = |rng: &mut ChaCha8Rng| {
            if projective { rand_proj(rng) } else { rand_angle(rng) }
        };
        let (a, b, c, d) = (pt(&mut rng), pt(&mut rng), pt(&mut rng), pt(&mut rng));
        // (DV): zero exactly on degenerate triples, and antisymmetry
        let abc = circular_order(&a, &b, &c).unwrap();
        let degenerate = a == b || b == c || a == c;
        assert_eq!(abc == 0, degenerate);
        assert_eq!(circular_order(&a, &c, &b).unwrap(), -abc);
        // (C) cocycle over the quadruple
        let bcd = circular_order(&b, &c, &d).unwrap();
        let acd = circular_order(&a, &c, &d).unwrap();
        let abd = circular_order(&a, &b, &d).unwrap();
        let distinct = !degenerate && d != a && d != b && d != c;
        if distinct {
            assert_eq!(bcd - acd + abd - abc, 0, "cocycle failed");
        }
        // (H) equivariance under a homeomorphism of the right backend
        let g = if projective {
            &proj_maps[i % proj_maps.len()]
        } else {
            &maps[i % maps.len()]
        };
        let image = circular_order(
            &g.apply(&a).unwrap(),
            &g.apply(&b).unwrap(),
            &g.apply(&c).unwrap(),
        )
        .unwrap();
        assert_eq!(image, abc, "equivariance failed");
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 5.0, "too slow: {:?}", elapsed);
    println!("criterion 1: PASS (10000 triples, 20 maps, {:?})", elapsed);
}

/// Independent gap oracle: insert chords one at a time into the disk,
/// splitting the face that contains both endpoints.  Faces are corner
/// cycles in counterclockwise order; a face's gap sides are the
/// intervals between consecutive corners.
fn face_split_gaps(lam: &FiniteLamination) -> BTreeSet<Gap> {
    let points: Vec<CirclePoint> = lam.endpoints_set().into_iter().collect();
    let index: BTreeMap<&CirclePoint, usize> =
        points.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let mut faces: Vec<Vec<usize>> = vec![(0..points.len()).collect()];
    for leaf in lam.leaves() {
        let (a, b) = leaf.endpoints();
        let (u, v) = (index[a], index[b]);
        let f = faces
            .iter()
            .position(|f| f.contains(&u) && f.contains(&v))
            .expect("both endpoints lie on one face");
        let cycle = faces.swap_remove(f);
        let iu = cycle.iter().position(|&x| x == u).unwrap();
        let iv = cycle.iter().position(|&x| x == v).unwrap();
        let (first, second) = if iu < iv { (iu, iv) } else { (iv, iu) };
        faces.push(cycle[first..=second].to_vec());
        let mut other: Vec<usize> = cycle[second..].to_vec();
        other.extend_from_slice(&cycle[..=first]);
        faces.push(other);
    }
    // corner cycles alternate chord edges and circle arcs; only chord
    // edges are sides of the gap, arcs belong to its closure
    let chords: BTreeSet<(usize, usize)> = lam
        .leaves()
        .map(|l| {
            let (a, b) = l.endpoints();
            let (u, v) = (index[a], index[b]);
            (u.min(v), u.max(v))
        })
        .collect();
    faces
        .into_iter()
        .map(|cycle| {
            let sides: Vec<OpenInterval> = (0..cycle.len())
                .filter(|&i| {
                    let (u, v) = (cycle[i], cycle[(i + 1) % cycle.len()]);
                    chords.contains(&(u.min(v), u.max(v)))
                })
                .map(|i| {
                    OpenInterval::new(
                        points[cycle[i]].clone(),
                        points[cycle[(i + 1) % cycle.len()]].clone(),
                    )
                    .unwrap()
                })
                .collect();
            Gap::from_sides(sides).unwrap()
        })
        .collect()
}

#[test]
fn criterion_2_gap_oracle_equivalence() {
    let start = Instant::now();
    let mut rng = rng(2);
    for case in 0..500 {
        let leaves = rng.gen_range(1..=15usize);
        let lam = rand_lamination(&mut rng, leaves);
        let got: BTreeSet<Gap> = lam.gaps().unwrap().into_iter().collect();
        let expected = face_split_gaps(&lam);
        assert_eq!(got, expected, "case {} with {} leaves", case, leaves);
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 30.0, "too slow: {:?}", elapsed);
    println!("criterion 2: PASS (500 laminations, {:?})", elapsed);
}

#[test]
fn criterion_3_rainbow_dichotomy() {
    let mut rng = rng(3);
    for _ in 0..200 {
        let leaves = rng.gen_range(1..=12usize);
        let lam = rand_lamination(&mut rng, leaves);
        let n = 2 * leaves as i64;
        // an endpoint, a midpoint between endpoints, and a generic point
        let queries = [
            lam.endpoints_set().into_iter().next().unwrap(),
            CirclePoint::angle(rational(1, 2 * n)),
            CirclePoint::angle(rational(2 * n - 1, 2 * n)),
        ];
        for p in queries {
            match lam.rainbow_search(&p, 4).unwrap() {
                RainbowOutcome::Endpoint(leaf) => {
                    // witness re-verified: p really is an endpoint
                    let (a, b) = leaf.endpoints();
                    assert!(&p == a || &p == b);
                    assert!(lam.endpoints_set().contains(&p));
                }
                RainbowOutcome::Rainbow(chain) => {
                    assert!(!lam.endpoints_set().contains(&p), "both witness kinds");
                    assert_eq!(chain.len(), 4);
                    for window in chain.windows(2) {
                        assert!(window[1].closure_subset_of(&window[0]).unwrap());
                        assert_ne!(window[1].start(), window[0].start());
                        assert_ne!(window[1].end(), window[0].end());
                    }
                    for link in &chain {
                        assert!(link.contains(&p).unwrap());
                    }
                }
                RainbowOutcome::Inconclusive(chain) => {
                    assert!(!lam.endpoints_set().contains(&p));
                    assert!(chain.len() < 4);
                }
            }
        }
    }
    // nested attractor families: chain length == generation depth
    for (a, b, c, d) in [(2, 0, 0, 1), (3, 0, 0, 1), (2, 1, 1, 1), (3, 1, 2, 1)] {
        let g = MobiusMap::from_ints(a, b, c, d).unwrap();
        for depth in 1..=5 {
            let lam = catalog::nested_attractor(&g, depth).unwrap();
            let fps = g.fixed_points();
            let p = &fps.points()[0];
            match lam.rainbow_search(p, depth).unwrap() {
                RainbowOutcome::Rainbow(chain) => assert_eq!(chain.len(), depth),
                other => panic!("expected a depth-{} rainbow, got {:?}", depth, other),
            }
        }
    }
    println!("criterion 3: PASS (200 laminations + 4 attractor families)");
}

/// PL map fixing exactly the given angle points (which must be at least
/// one): every fixed point is a breakpoint, with skewed segments in
/// between.
fn pl_with_fixed_points(fixed: &[BigRational]) -> PLHomeo {
    assert!(!fixed.is_empty());
    let mut pts = Vec::new();
    let one = BigRational::one();
    for (i, p) in fixed.iter().enumerate() {
        pts.push((p.clone(), p.clone()));
        let q = &fixed[(i + 1) % fixed.len()];
        let gap = if q > p { q - p } else { q - p + &one };
        let third = rational(1, 3);
        let half = rational(1, 2);
        // midpoint of the gap moves forward to the 2/3 mark
        pts.push((p + &gap * &half, p + &gap * (&one - &third)));
    }
    PLHomeo::new(&pts).unwrap()
}

#[test]
fn criterion_4_gap_classification_consistency() {
    let mut rng = rng(4);
    let mut cases = 0;
    while cases < 100 {
        let n = rng.gen_range(3..=7usize);
        let (_, lam) = catalog::ideal_triangle_rotation(n).unwrap();
        let gaps = lam.gaps().unwrap();
        let central = gaps.iter().find(|g| g.sides().len() == n).unwrap();
        let vertices = central.polygon_vertices().unwrap();
        let fixed_count = rng.gen_range(0..=n);
        let g = if fixed_count == 0 {
            Homeo::PL(PLHomeo::rotation(rational(1, n as i64)))
        } else {
            let mut idx: Vec<usize> = (0..n).collect();
            idx.shuffle(&mut rng);
            let mut chosen: Vec<BigRational> = idx[..fixed_count]
                .iter()
                .map(|&i| match &vertices[i] {
                    CirclePoint::Angle(q) => q.clone(),
                    _ => unreachable!(),
                })
                .collect();
            chosen.sort();
            Homeo::PL(pl_with_fixed_points(&chosen))
        };
        let outcome = classify_gap(&g, central).unwrap();
        match fixed_count {
            0 => assert_eq!(outcome, Ok(GapType::Free)),
            1 => assert_eq!(outcome, Ok(GapType::Sticky)),
            k if k == n => assert_eq!(outcome, Ok(GapType::Fixed)),
            k => {
                // >= 2 but not all: flagged as impossible for an
                // invariant system, never silently classified
                let violation = outcome.clone().expect_err("must be flagged");
                assert_eq!(violation.fixed_vertices.len(), k);
                assert_eq!(violation.total_vertices, n);
            }
        }
        // cross-check: >= 2 fixed vertices and a clean classification
        // forces gFixed with every vertex fixed
        if let Ok(GapType::Fixed) = outcome {
            for v in &vertices {
                assert_eq!(&g.apply(v).unwrap(), v);
            }
        }
        cases += 1;
    }
    println!("criterion 4: PASS (100 classified (g, gap) pairs)");
}

#[test]
fn criterion_5_commuting_pairs_preserve_fixed_sets() {
    let mut rng = rng(5);
    let mut checked = 0;
    while checked < 50 {
        // commuting pairs: two powers of a common element
        let base: Homeo = if checked % 2 == 0 {
            Homeo::Mobius(rand_mobius(&mut rng))
        } else {
            Homeo::PL(rand_pl(&mut rng))
        };
        let pow = |k: usize| -> Homeo {
            let mut acc = base.clone();
            for _ in 1..k {
                acc = acc.compose(&base).unwrap();
            }
            acc
        };
        let g = pow(rng.gen_range(1..=3));
        let h = pow(rng.gen_range(1..=3));
        if g.is_identity() || h.is_identity() {
            continue;
        }
        assert!(g.commutes_with(&h).unwrap());
        match g.fixed_points() {
            FixedPointSet::Finite(fix) => {
                let image: BTreeSet<CirclePoint> =
                    fix.iter().map(|p| h.apply(p).unwrap()).collect();
                let original: BTreeSet<CirclePoint> = fix.into_iter().collect();
                assert_eq!(image, original, "h must permute Fix_g");
            }
            FixedPointSet::Empty => {}
            FixedPointSet::WholeCircle => unreachable!("g is not the identity"),
        }
        checked += 1;
    }
    println!("criterion 5: PASS (50 commuting pairs)");
}

#[test]
fn criterion_6_mobius_fixed_point_exactness() {
    let mut rng = rng(6);
    for _ in 0..100 {
        let m = rand_mobius(&mut rng);
        let (a, _, _, d) = m.entries();
        let tr2 = (a + d) * (a + d);
        let four_det = num::BigInt::from(4) * m.det();
        let class = m.classify().unwrap();
        match tr2.cmp(&four_det) {
            std::cmp::Ordering::Less => assert_eq!(class, MobiusClass::Elliptic),
            std::cmp::Ordering::Equal => assert_eq!(class, MobiusClass::Parabolic),
            std::cmp::Ordering::Greater => assert_eq!(class, MobiusClass::Hyperbolic),
        }
        let g = Homeo::Mobius(m);
        for p in g.fixed_points().points() {
            assert_eq!(&g.apply(p).unwrap(), p, "g(x) = x must re-verify exactly");
        }
    }
    // the worked example: (1 2; 2 5) fixes -1 +- sqrt(2)
    let m = MobiusMap::from_ints(1, 2, 2, 5).unwrap();
    let fix = m.fixed_points();
    let root2 = laminar::surd::QuadExt::sqrt(2);
    let minus_one = laminar::surd::QuadExt::from_int(-1);
    let expect = [
        CirclePoint::surd(minus_one.sub(&root2)),
        CirclePoint::surd(minus_one.add(&root2)),
    ];
    assert_eq!(fix.points(), expect);
    println!("criterion 6: PASS (100 matrices + worked surd example)");
}

#[test]
fn criterion_7_nonabelian_witness() {
    let start = Instant::now();
    let (group, lam) = catalog::sanov_example(3).unwrap();
    let gaps = lam.gaps().unwrap();
    let gap = gaps
        .iter()
        .find(|g| !g.is_leaf_gap() && g.polygon_vertices().is_some())
        .unwrap();
    match noncommuting_witness(&group, gap, 6).unwrap() {
        Search::Found(w) => {
            assert!(w.word1.len() <= 6 && w.word2.len() <= 6);
            // re-verify the defining inclusions exactly
            let f12 = w.f1.compose(&w.f2).unwrap();
            let f21 = w.f2.compose(&w.f1).unwrap();
            assert_ne!(f12, f21);
            assert!(f12.apply_interval(&w.o1).unwrap().subset_of(&w.o1).unwrap());
            assert!(f21.apply_interval(&w.o1).unwrap().subset_of(&w.o2).unwrap());
        }
        Search::NotFound { .. } => panic!("witness must exist for the free group"),
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 10.0, "too slow: {:?}", elapsed);

    // abelian rotation action: no witness at depth 8
    let rot = MarkedGroup::new(vec![(
        "r".into(),
        Homeo::PL(PLHomeo::rotation(rational(1, 3))),
    )])
    .unwrap();
    let (_, tri) = catalog::ideal_triangle_rotation(3).unwrap();
    let tri_gaps = tri.gaps().unwrap();
    let central = tri_gaps.iter().find(|g| !g.is_leaf_gap()).unwrap();
    match noncommuting_witness(&rot, central, 8).unwrap() {
        Search::NotFound { depth } => assert_eq!(depth, 8),
        Search::Found(_) => panic!("rotation group is abelian"),
    }
    println!("criterion 7: PASS (witness length <= 6 in {:?})", elapsed);
}

#[test]
fn criterion_8_pingpong_certificates() {
    let start = Instant::now();
    let (group, table) = catalog::sanov_pingpong();
    let g = &group.generators()[0];
    let h = &group.generators()[1];
    let cert = pingpong_certify(g, h, &table).unwrap().expect("Sanov table certifies");
    assert_eq!(cert.inclusions.len(), 12);
    // accepted certificate implies observable non-commutativity
    assert!(!g.commutes_with(h).unwrap());

    // commuting parabolic pair: every table must be rejected,
    // including the Sanov table and random ones
    let p = Homeo::Mobius(MobiusMap::from_ints(1, 1, 0, 1).unwrap());
    let q = Homeo::Mobius(MobiusMap::from_ints(1, 2, 0, 1).unwrap());
    assert!(pingpong_certify(&p, &q, &table).unwrap().is_err());
    let mut rng = rng(8);
    for _ in 0..30 {
        let mut cuts: BTreeSet<i64> = BTreeSet::new();
        while cuts.len() < 8 {
            cuts.insert(rng.gen_range(-40..=40));
        }
        let pts: Vec<CirclePoint> = cuts
            .into_iter()
            .map(|n| CirclePoint::projective_i(n, 1))
            .collect();
        let arc = |i: usize| OpenInterval::new(pts[2 * i].clone(), pts[2 * i + 1].clone()).unwrap();
        let mut order = [0usize, 1, 2, 3];
        order.shuffle(&mut rng);
        let random_table = PingPongTable {
            a_plus: arc(order[0]),
            a_minus: arc(order[1]),
            b_plus: arc(order[2]),
            b_minus: arc(order[3]),
        };
        assert!(
            pingpong_certify(&p, &q, &random_table).unwrap().is_err(),
            "no table can certify a commuting pair"
        );
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 1.0, "too slow: {:?}", elapsed);
    println!("criterion 8: PASS (certificate + 31 rejections, {:?})", elapsed);
}

#[test]
fn criterion_9_fixed_point_finiteness() {
    // Sanov ball of radius 4: every non-identity count is 1 or 2
    let (sanov, _) = catalog::sanov_example(0).unwrap();
    let counts = fixedpoint_census(&sanov, 4).unwrap();
    assert_eq!(counts.len(), 160);
    for (w, n) in &counts {
        assert!(*n == 1 || *n == 2, "word {:?} has {} fixed points", w, n);
    }
    // PL corpus: all counts finite
    let mut rng = rng(9);
    let gens: Vec<(String, Homeo)> = (0..2)
        .map(|i| (format!("p{}", i), Homeo::PL(rand_pl(&mut rng))))
        .collect();
    let pl_group = MarkedGroup::new(gens).unwrap();
    for (_, n) in fixedpoint_census(&pl_group, 3).unwrap() {
        let _ = n; // count() returned Some, so each is finite
    }
    // same-type endpoints on invariant rotation examples: every gap
    // vertex set entirely inside or entirely outside Fix_g
    for n in 3..=6 {
        let (rot, lam) = catalog::ideal_triangle_rotation(n).unwrap();
        let bad = same_type_endpoints_check(&rot, &lam, 6).unwrap();
        assert!(bad.is_empty(), "n = {}", n);
    }
    // the Sanov tessellation has sticky gaps (parabolic generators fix
    // one ideal vertex of a face), so mixed gaps there carry exactly
    // one fixed vertex and certify gSticky rather than an error
    let (sanov, lam) = catalog::sanov_example(1).unwrap();
    for (_, _, violation) in same_type_endpoints_check(&sanov, &lam, 1).unwrap() {
        assert_eq!(violation.fixed_vertices.len(), 1);
    }
    println!("criterion 9: PASS (160 Sanov counts, PL corpus, gap scans)");
}

fn rand_tree(rng: &mut ChaCha8Rng) -> PlanarOrderTree {
    let n = rng.gen_range(4..=30usize);
    let mut rotation: Vec<Vec<usize>> = vec![Vec::new(); n];
    for v in 1..n {
        let parent = rng.gen_range(0..v);
        rotation[v].push(parent);
        rotation[parent].push(v);
    }
    for r in rotation.iter_mut() {
        r.shuffle(rng);
    }
    let kinds = (0..n)
        .map(|v| {
            if rotation[v].len() >= 3 && rng.gen_bool(0.6) {
                VertexKind::Singular
            } else {
                VertexKind::Ordinary
            }
        })
        .collect();
    PlanarOrderTree::new(kinds, rotation, BTreeMap::new()).unwrap()
}

#[test]
fn criterion_10_order_tree_properties() {
    let mut rng = rng(10);
    for case in 0..100 {
        let tree = rand_tree(&mut rng);
        let ends = tree.ends();
        if ends.len() < 3 {
            continue;
        }
        let triples: Vec<(usize, usize, usize)> = if ends.len() <= 8 {
            let mut all = Vec::new();
            for i in 0..ends.len() {
                for j in 0..ends.len() {
                    for k in 0..ends.len() {
                        if i != j && j != k && i != k {
                            all.push((ends[i], ends[j], ends[k]));
                        }
                    }
                }
            }
            all
        } else {
            (0..40)
                .map(|_| {
                    let mut pick = ends.clone();
                    pick.shuffle(&mut rng);
                    (pick[0], pick[1], pick[2])
                })
                .collect()
        };
        let circle = tree.tree_to_circle().unwrap();
        for &(a, b, c) in &triples {
            let order = tree.end_cyclic_order(a, b, c).unwrap();
            // basepoint independence, evaluated from every vertex
            for base in 0..tree.vertex_count() {
                assert_eq!(
                    tree.end_cyclic_order_from(base, a, b, c).unwrap(),
                    order,
                    "case {} basepoint {}",
                    case,
                    base
                );
            }
            // order embedding into the circle
            assert_eq!(
                circular_order(&circle[&a], &circle[&b], &circle[&c]).unwrap(),
                order
            );
        }
        if (0..tree.vertex_count())
            .any(|v| tree.kind(v) == VertexKind::Singular && tree.degree(v) >= 3)
        {
            let lam = tree.lamination_from_tree().unwrap();
            assert!(lam.is_valid().unwrap(), "case {}", case);
        }
    }
    println!("criterion 10: PASS (100 random trees)");
}

#[test]
fn criterion_11_measure_lemma_patterns() {
    let mut rng = rng(11);
    let mut cases = 0;
    while cases < 100 {
        let n = rng.gen_range(3..=6usize);
        let (_, lam) = catalog::ideal_triangle_rotation(n).unwrap();
        let gaps = lam.gaps().unwrap();
        let central = gaps.iter().find(|g| g.sides().len() == n).unwrap();
        // a measure with known side masses: atoms inside chosen sides
        // and possibly on vertices
        let n_atoms = rng.gen_range(1..=4usize);
        let mut atoms = Vec::new();
        for _ in 0..n_atoms {
            if rng.gen_bool(0.3) {
                // a gap vertex
                let k = rng.gen_range(0..n) as i64;
                atoms.push(CirclePoint::angle_i(k, n as i64));
            } else {
                // strictly inside side k: its midpoint
                let k = rng.gen_range(0..n) as i64;
                atoms.push(CirclePoint::angle(rational(2 * k + 1, 2 * n as i64)));
            }
        }
        atoms.sort();
        atoms.dedup();
        let mu = FiniteSupportMeasure::uniform(atoms.clone()).unwrap();
        // expected: a side has mass 1 iff every atom is inside one side
        let full_side = central
            .sides()
            .iter()
            .find(|s| atoms.iter().all(|p| s.contains(p).unwrap()));
        match (full_measure_side(&mu, central).unwrap(), full_side) {
            (FullMeasureSide::Side(side), Some(expect)) => assert_eq!(&side, expect),
            (FullMeasureSide::Violation { side_masses, vertex_mass }, None) => {
                let total: BigRational =
                    side_masses.iter().map(|(_, m)| m.clone()).sum::<BigRational>() + vertex_mass;
                assert!(total.is_one());
            }
            (got, want) => panic!("mismatch: {:?} vs {:?}", got, want),
        }
        cases += 1;
    }
    // the corollary remark: two global fixed points give an invariant
    // two-atom measure
    let g = Homeo::Mobius(MobiusMap::from_ints(2, 0, 0, 1).unwrap());
    let group = MarkedGroup::new(vec![("g".into(), g)]).unwrap();
    let fix = group::global_fixed_points(&group).unwrap();
    let pts = fix.points().to_vec();
    assert_eq!(pts.len(), 2);
    let mu = FiniteSupportMeasure::uniform(pts).unwrap();
    assert!(mu.is_group_invariant(&group).unwrap());
    assert_eq!(mu.support_size(), 2);
    println!("criterion 11: PASS (100 (measure, gap) pairs + corollary remark)");
}

#[test]
fn criterion_12_cli_determinism() {
    use std::process::Command;
    let bin = env!("CARGO_BIN_EXE_laminar");
    let dir = tempfile::tempdir().unwrap();
    let path = |name: &str| dir.path().join(name);

    let run = |args: &[&str]| {
        let out = Command::new(bin)
            .args(args)
            .env("LAMINAR_DEPTH_DEFAULT", "2")
            .output()
            .unwrap();
        (out.status.code(), out.stdout)
    };
    // generate shared inputs once
    let gen_dir = path("sanov");
    run(&["example", "sanov", "--depth", "1", "-o", gen_dir.to_str().unwrap()]);
    let lam = gen_dir.join("lamination.lam");
    let gens = gen_dir.join("group.gens");
    let table = gen_dir.join("pingpong.table");
    std::fs::write(
        path("tripod.tree"),
        "vertex 0 singular\nvertex 1 ordinary\nvertex 2 ordinary\nvertex 3 ordinary\nedge 0 1\nedge 0 2\nedge 0 3\n",
    )
    .unwrap();
    std::fs::write(path("dirac.msr"), "model projective\natom inf 1\n").unwrap();

    let lam_s = lam.to_str().unwrap();
    let gens_s = gens.to_str().unwrap();
    let msr = path("dirac.msr");
    let msr_s = msr.to_str().unwrap();
    let tree = path("tripod.tree");
    let tree_s = tree.to_str().unwrap();
    let commands: Vec<Vec<&str>> = vec![
        vec!["validate", lam_s],
        vec!["gaps", lam_s],
        vec!["rainbow", lam_s, "--point", "1/2"],
        vec!["orbit", gens_s, lam_s, "--depth", "1"],
        vec!["witness", "noncommuting", gens_s, lam_s, "--depth", "2"],
        vec!["pingpong", gens_s, "--table", table.to_str().unwrap()],
        vec!["census", gens_s, "--depth", "2"],
        vec!["measure", msr_s, gens_s],
        vec!["tree2lam", tree_s],
        vec!["render", lam_s],
    ];
    for args in &commands {
        let (code1, out1) = run(args);
        let (code2, out2) = run(args);
        assert_eq!(code1, code2, "{:?}", args);
        assert_eq!(out1, out2, "report differs between runs: {:?}", args);
        assert!(!out1.is_empty());
    }
    // rendered SVG files byte-identical across runs
    let (c1, _) = run(&["render", lam_s, "-o", path("a.svg").to_str().unwrap()]);
    let (c2, _) = run(&["render", lam_s, "-o", path("b.svg").to_str().unwrap()]);
    assert_eq!((c1, c2), (Some(0), Some(0)));
    assert_eq!(
        std::fs::read(path("a.svg")).unwrap(),
        std::fs::read(path("b.svg")).unwrap()
    );
    // exit code contract: refutation is 1, inconclusive is 2, usage 64
    std::fs::write(
        path("crossing.lam"),
        "model angle\nleaf 0 1/2\nleaf 1/4 3/4\n",
    )
    .unwrap();
    let (code, _) = run(&["validate", path("crossing.lam").to_str().unwrap()]);
    assert_eq!(code, Some(1));
    // 1/5 is not an endpoint of the depth-1 tessellation, and no
    // 50-deep chain exists there
    let (code, _) = run(&["rainbow", lam_s, "--point", "1/5", "--depth", "50"]);
    assert_eq!(code, Some(2));
    let (code, _) = run(&["no-such-command"]);
    assert_eq!(code, Some(64));
    let (code, _) = run(&["validate", "/no/such/file"]);
    assert_eq!(code, Some(65));
    println!("criterion 12: PASS ({} commands byte-stable)", commands.len());
}
