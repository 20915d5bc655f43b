//! Finitely generated groups acting on the circle: orbit balls, orbit
//! laminations, contracting elements, non-commutativity witnesses, gap
//! types, ping-pong certificates and fixed point censuses.
//!
//! Searches are breadth-first over shortlex words in the generators and
//! their inverses, deduplicated by the canonical form of the resulting
//! homeomorphism, so every ball is inverse-closed and each element is
//! labelled by a shortest word.  Searches are depth-limited and report
//! `NotFound` rather than pretending to decide an unbounded question.

use crate::circle::{CirclePoint, Leaf, Model, OpenInterval};
use crate::homeo::{FixedPointSet, Homeo};
use crate::lamination::{FiniteLamination, Gap, LinkedPair};
use crate::{Error, Result};
use std::collections::BTreeMap;
use std::fmt;

/// A word in the generators: indices with sign, e.g. `a b a^-1` over
/// generators `[a, b]` is `[+1, +2, -1]` (1-based to keep the sign).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Default)]
pub struct Word(pub Vec<i32>);

impl Word {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn display(&self, names: &[String]) -> String {
        if self.0.is_empty() {
            return "1".to_string();
        }
        self.0
            .iter()
            .map(|&k| {
                let name = &names[(k.unsigned_abs() as usize) - 1];
                if k > 0 {
                    name.clone()
                } else {
                    format!("{}^-1", name)
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "w{:?}", self.0)
    }
}

/// A marked group: named non-identity generators in one backend.
#[derive(Clone, Debug)]
pub struct MarkedGroup {
    names: Vec<String>,
    gens: Vec<Homeo>,
}

impl MarkedGroup {
    pub fn new(gens: Vec<(String, Homeo)>) -> Result<MarkedGroup> {
        if gens.is_empty() {
            return Err(Error::NoGenerators);
        }
        let model = gens[0].1.model();
        for (_, g) in &gens {
            if g.model() != model {
                return Err(Error::BackendMismatch);
            }
            if g.is_identity() {
                return Err(Error::IdentityElement);
            }
        }
        let (names, gens) = gens.into_iter().unzip();
        Ok(MarkedGroup { names, gens })
    }

    pub fn model(&self) -> Model {
        self.gens[0].model()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn generators(&self) -> &[Homeo] {
        &self.gens
    }

    pub fn generator(&self, letter: i32) -> Homeo {
        let g = &self.gens[(letter.unsigned_abs() as usize) - 1];
        if letter > 0 {
            g.clone()
        } else {
            g.inverse()
        }
    }

    pub fn evaluate(&self, w: &Word) -> Result<Homeo> {
        let mut acc = match self.model() {
            Model::Angle => Homeo::PL(crate::homeo::PLHomeo::identity()),
            Model::Projective => Homeo::Mobius(crate::homeo::MobiusMap::identity()),
        };
        for &k in &w.0 {
            acc = acc.compose(&self.generator(k))?;
        }
        Ok(acc)
    }

    /// The ball of radius `depth`: every distinct element reachable by a
    /// word of at most that length, labelled by its shortlex-first word.
    /// The identity is included with the empty word.
    pub fn ball(&self, depth: usize) -> Result<OrbitBall> {
        if depth == 0 {
            return Err(Error::BadDepth);
        }
        let identity = self.evaluate(&Word::default())?;
        let mut seen: BTreeMap<Homeo, Word> = BTreeMap::new();
        seen.insert(identity.clone(), Word::default());
        let mut elements = vec![(Word::default(), identity.clone())];
        let mut frontier = vec![(Word::default(), identity)];
        let letters: Vec<i32> = (1..=self.gens.len() as i32)
            .flat_map(|i| [i, -i])
            .collect();
        for _ in 0..depth {
            let mut next = Vec::new();
            for (w, g) in &frontier {
                for &k in &letters {
                    let h = g.compose(&self.generator(k))?;
                    if !seen.contains_key(&h) {
                        let mut wk = w.clone();
                        wk.0.push(k);
                        let wk = Word(wk.0);
                        seen.insert(h.clone(), wk.clone());
                        elements.push((wk.clone(), h.clone()));
                        next.push((wk, h));
                    }
                }
            }
            frontier = next;
        }
        Ok(OrbitBall { elements })
    }
}

/// Deduplicated inverse-closed ball, in shortlex order.
#[derive(Clone, Debug)]
pub struct OrbitBall {
    // (shortlex-first word, element), identity first
    elements: Vec<(Word, Homeo)>,
}

impl OrbitBall {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &(Word, Homeo)> {
        self.elements.iter()
    }

    /// Skips the identity.
    pub fn iter_nontrivial(&self) -> impl Iterator<Item = &(Word, Homeo)> {
        self.elements.iter().filter(|(w, _)| !w.is_empty())
    }

    pub fn contains(&self, g: &Homeo) -> bool {
        self.elements.iter().any(|(_, h)| h == g)
    }
}

/// Result of pushing a seed lamination around an orbit ball.
#[derive(Clone, Debug)]
pub struct OrbitLamination {
    pub lamination: FiniteLamination,
    /// Linked pairs, if the orbit set fails to be a lamination, together
    /// with a word producing one member of the first offending pair.
    pub linked: Vec<(LinkedPair, Word)>,
}

impl OrbitLamination {
    pub fn is_invariant_so_far(&self) -> bool {
        self.linked.is_empty()
    }
}

/// Applies every ball element to every seed leaf and validates the
/// resulting leaf set.
pub fn orbit_lamination(
    group: &MarkedGroup,
    seed: &FiniteLamination,
    depth: usize,
) -> Result<OrbitLamination> {
    let ball = group.ball(depth)?;
    let mut leaves: BTreeMap<Leaf, Word> = BTreeMap::new();
    for (w, g) in ball.iter() {
        for l in seed.leaves() {
            let img = g.apply_leaf(l)?;
            leaves.entry(img).or_insert_with(|| w.clone());
        }
    }
    let lamination = FiniteLamination::new(leaves.keys().cloned())?;
    let report = lamination.validate()?;
    let linked = report
        .linked
        .into_iter()
        .map(|pair| {
            let w = leaves.get(&pair.first).cloned().unwrap_or_default();
            (pair, w)
        })
        .collect();
    Ok(OrbitLamination { lamination, linked })
}

/// Depth-limited searches either find a witness or honestly report the
/// bound they were run with.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Search<T> {
    Found(T),
    NotFound { depth: usize },
}

impl<T> Search<T> {
    pub fn found(&self) -> Option<&T> {
        match self {
            Search::Found(t) => Some(t),
            Search::NotFound { .. } => None,
        }
    }
}

/// Finds a ball element carrying every vertex of the gap into `target`.
pub fn find_contracting(
    group: &MarkedGroup,
    gap: &Gap,
    target: &OpenInterval,
    depth: usize,
) -> Result<Search<(Word, Homeo)>> {
    let vertices = gap.polygon_vertices().ok_or(Error::NotIdealPolygon)?;
    let ball = group.ball(depth)?;
    for (w, g) in ball.iter_nontrivial() {
        if contracts_into(g, &vertices, target)? {
            return Ok(Search::Found((w.clone(), g.clone())));
        }
    }
    Ok(Search::NotFound { depth })
}

fn contracts_into(g: &Homeo, vertices: &[CirclePoint], target: &OpenInterval) -> Result<bool> {
    for v in vertices {
        if !target.contains(&g.apply(v)?)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A verified certificate that two group elements do not commute,
/// extracted from a gap of an invariant lamination: disjoint sides
/// `o1`, `o2` with `f1 f2 (o1)` inside `o1` but `f2 f1 (o1)` inside
/// `o2`.
#[derive(Clone, Debug)]
pub struct NonCommutingWitness {
    pub word1: Word,
    pub word2: Word,
    pub f1: Homeo,
    pub f2: Homeo,
    pub o1: OpenInterval,
    pub o2: OpenInterval,
}

/// Searches the ball for elements contracting the gap into two distinct
/// sides and verifies the resulting ping-pong inclusions; any hit is a
/// proof that the group is not abelian.
pub fn noncommuting_witness(
    group: &MarkedGroup,
    gap: &Gap,
    depth: usize,
) -> Result<Search<NonCommutingWitness>> {
    let vertices = gap.polygon_vertices().ok_or(Error::NotIdealPolygon)?;
    let ball = group.ball(depth)?;
    // elements contracting the whole gap into a given side
    let mut contractors: Vec<Vec<(Word, Homeo)>> = vec![Vec::new(); gap.sides().len()];
    for (w, g) in ball.iter_nontrivial() {
        for (si, side) in gap.sides().iter().enumerate() {
            if contracts_into(g, &vertices, side)? {
                contractors[si].push((w.clone(), g.clone()));
            }
        }
    }
    // scan candidate pairs in order of increasing total word length; the
    // first pair that verifies is a shortest witness
    for total in 2..=2 * depth {
        for (i1, side1) in gap.sides().iter().enumerate() {
            for (i2, side2) in gap.sides().iter().enumerate() {
                if i1 == i2 {
                    continue;
                }
                for (w1, f1) in &contractors[i1] {
                    for (w2, f2) in &contractors[i2] {
                        if w1.len() + w2.len() != total {
                            continue;
                        }
                        let f12 = f1.compose(f2)?;
                        let f21 = f2.compose(f1)?;
                        if f12 == f21 {
                            continue;
                        }
                        let img12 = f12.apply_interval(side1)?;
                        let img21 = f21.apply_interval(side1)?;
                        if img12.subset_of(side1)? && img21.subset_of(side2)? {
                            return Ok(Search::Found(NonCommutingWitness {
                                word1: w1.clone(),
                                word2: w2.clone(),
                                f1: f1.clone(),
                                f2: f2.clone(),
                                o1: side1.clone(),
                                o2: side2.clone(),
                            }));
                        }
                    }
                }
            }
        }
    }
    Ok(Search::NotFound { depth })
}

/// The type of an ideal-polygon gap relative to one homeomorphism,
/// by the number of gap vertices it fixes.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GapType {
    /// No vertex fixed.
    Free,
    /// Exactly one vertex fixed.
    Sticky,
    /// Every vertex fixed.
    Fixed,
}

/// Two or more (but not all) fixed vertices: impossible for a gap of an
/// invariant lamination system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GapTypeViolation {
    pub fixed_vertices: Vec<CirclePoint>,
    pub total_vertices: usize,
}

pub fn classify_gap(
    g: &Homeo,
    gap: &Gap,
) -> Result<std::result::Result<GapType, GapTypeViolation>> {
    if g.is_identity() {
        return Err(Error::IdentityElement);
    }
    let vertices = gap.polygon_vertices().ok_or(Error::NotIdealPolygon)?;
    let mut fixed = Vec::new();
    for v in &vertices {
        if &g.apply(v)? == v {
            fixed.push(v.clone());
        }
    }
    Ok(match fixed.len() {
        0 => Ok(GapType::Free),
        1 => Ok(GapType::Sticky),
        n if n == vertices.len() => Ok(GapType::Fixed),
        _ => Err(GapTypeViolation {
            fixed_vertices: fixed,
            total_vertices: vertices.len(),
        }),
    })
}

/// Four pairwise disjoint open arcs for a two-generator ping-pong
/// argument: expanding/contracting domains for each generator.
#[derive(Clone, Debug)]
pub struct PingPongTable {
    pub a_plus: OpenInterval,
    pub a_minus: OpenInterval,
    pub b_plus: OpenInterval,
    pub b_minus: OpenInterval,
}

/// A verified ping-pong certificate: the subgroup generated by the two
/// elements is free of rank 2.
#[derive(Clone, Debug)]
pub struct PingPongCertificate {
    pub table: PingPongTable,
    /// The twelve verified inclusions, in a fixed order.
    pub inclusions: Vec<String>,
}

/// Why a table fails: an inclusion that does not hold, with the image
/// interval as witness, or arcs that are not disjoint.
#[derive(Clone, Debug)]
pub enum PingPongRejection {
    ArcsNotDisjoint(OpenInterval, OpenInterval),
    InclusionFails {
        name: String,
        image: OpenInterval,
        target: OpenInterval,
    },
    IdentityGenerator,
}

/// Verifies the inclusions `g(B+), g(B-), g(A+)` inside `A+`, the
/// mirrored ones for `g^-1` into `A-`, and the same for `h` with the
/// roles of the arc pairs swapped.  The attractor inclusions propagate
/// the one-letter checks to all powers, so a certificate proves that
/// `g` and `h` play ping-pong and generate a free group of rank 2.
pub fn pingpong_certify(
    g: &Homeo,
    h: &Homeo,
    table: &PingPongTable,
) -> Result<std::result::Result<PingPongCertificate, PingPongRejection>> {
    if g.is_identity() || h.is_identity() {
        return Ok(Err(PingPongRejection::IdentityGenerator));
    }
    let arcs = [
        ("A+", &table.a_plus),
        ("A-", &table.a_minus),
        ("B+", &table.b_plus),
        ("B-", &table.b_minus),
    ];
    for i in 0..arcs.len() {
        for j in (i + 1)..arcs.len() {
            if !arcs[i].1.disjoint_from(arcs[j].1)? {
                return Ok(Err(PingPongRejection::ArcsNotDisjoint(
                    arcs[i].1.clone(),
                    arcs[j].1.clone(),
                )));
            }
        }
    }
    let ginv = g.inverse();
    let hinv = h.inverse();
    let checks: Vec<(String, &Homeo, &OpenInterval, &OpenInterval)> = vec![
        ("g(B+) in A+".into(), g, &table.b_plus, &table.a_plus),
        ("g(B-) in A+".into(), g, &table.b_minus, &table.a_plus),
        ("g(A+) in A+".into(), g, &table.a_plus, &table.a_plus),
        ("g^-1(B+) in A-".into(), &ginv, &table.b_plus, &table.a_minus),
        ("g^-1(B-) in A-".into(), &ginv, &table.b_minus, &table.a_minus),
        ("g^-1(A-) in A-".into(), &ginv, &table.a_minus, &table.a_minus),
        ("h(A+) in B+".into(), h, &table.a_plus, &table.b_plus),
        ("h(A-) in B+".into(), h, &table.a_minus, &table.b_plus),
        ("h(B+) in B+".into(), h, &table.b_plus, &table.b_plus),
        ("h^-1(A+) in B-".into(), &hinv, &table.a_plus, &table.b_minus),
        ("h^-1(A-) in B-".into(), &hinv, &table.a_minus, &table.b_minus),
        ("h^-1(B-) in B-".into(), &hinv, &table.b_minus, &table.b_minus),
    ];
    let mut names = Vec::with_capacity(checks.len());
    for (name, map, source, target) in checks {
        let image = map.apply_interval(source)?;
        if !image.subset_of(target)? {
            return Ok(Err(PingPongRejection::InclusionFails {
                name,
                image,
                target: target.clone(),
            }));
        }
        names.push(name);
    }
    Ok(Ok(PingPongCertificate {
        table: table.clone(),
        inclusions: names,
    }))
}

/// Points fixed by every generator (hence by the whole group).
pub fn global_fixed_points(group: &MarkedGroup) -> Result<FixedPointSet> {
    let mut acc = group.gens[0].fixed_points();
    for g in &group.gens[1..] {
        acc = match (acc, g.fixed_points()) {
            (FixedPointSet::WholeCircle, other) => other,
            (mine, FixedPointSet::WholeCircle) => mine,
            (FixedPointSet::Empty, _) | (_, FixedPointSet::Empty) => FixedPointSet::Empty,
            (FixedPointSet::Finite(a), FixedPointSet::Finite(b)) => {
                let pts: Vec<CirclePoint> =
                    a.into_iter().filter(|p| b.contains(p)).collect();
                if pts.is_empty() {
                    FixedPointSet::Empty
                } else {
                    FixedPointSet::Finite(pts)
                }
            }
        };
    }
    Ok(acc)
}

/// Fixed point counts over the ball, identity excluded; every entry is
/// finite because non-identity elements of both backends have finite
/// fixed sets.
pub fn fixedpoint_census(group: &MarkedGroup, depth: usize) -> Result<Vec<(Word, usize)>> {
    let ball = group.ball(depth)?;
    let mut out = Vec::new();
    for (w, g) in ball.iter_nontrivial() {
        let n = g
            .fixed_points()
            .count()
            .expect("non-identity elements have finitely many fixed points");
        out.push((w.clone(), n));
    }
    Ok(out)
}

/// For every gap of the lamination and every ball element, checks that
/// the gap vertices are either all fixed or all moved; reports the
/// exceptions.
pub fn same_type_endpoints_check(
    group: &MarkedGroup,
    lam: &FiniteLamination,
    depth: usize,
) -> Result<Vec<(Word, Gap, GapTypeViolation)>> {
    let ball = group.ball(depth)?;
    let gaps = lam.gaps()?;
    let mut bad = Vec::new();
    for (w, g) in ball.iter_nontrivial() {
        for gap in &gaps {
            let Some(vertices) = gap.polygon_vertices() else {
                continue;
            };
            let mut fixed = Vec::new();
            for v in &vertices {
                if &g.apply(v)? == v {
                    fixed.push(v.clone());
                }
            }
            if !fixed.is_empty() && fixed.len() != vertices.len() {
                bad.push((
                    w.clone(),
                    gap.clone(),
                    GapTypeViolation {
                        fixed_vertices: fixed,
                        total_vertices: vertices.len(),
                    },
                ));
            }
        }
    }
    Ok(bad)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::circle::{rational, CirclePoint as P};
    use crate::homeo::{MobiusMap, PLHomeo};

    fn sanov() -> MarkedGroup {
        MarkedGroup::new(vec![
            (
                "a".into(),
                Homeo::Mobius(MobiusMap::from_ints(1, 2, 0, 1).unwrap()),
            ),
            (
                "b".into(),
                Homeo::Mobius(MobiusMap::from_ints(1, 0, 2, 1).unwrap()),
            ),
        ])
        .unwrap()
    }

    #[test]
    fn ball_dedup_and_inverse_closed() {
        // rotation of order 3 generates a group of 3 elements
        let rot = MarkedGroup::new(vec![(
            "r".into(),
            Homeo::PL(PLHomeo::rotation(rational(1, 3))),
        )])
        .unwrap();
        let ball = rot.ball(8).unwrap();
        assert_eq!(ball.len(), 3);
        // free group ball sizes: 1 + 4 + 12 = 17 at depth 2
        let ball2 = sanov().ball(2).unwrap();
        assert_eq!(ball2.len(), 17);
        for (_, g) in ball2.iter() {
            assert!(ball2.contains(&g.inverse()));
        }
    }

    #[test]
    fn orbit_lamination_stays_unlinked() {
        let (group, seed) = catalog::sanov_example(0).unwrap();
        let orbit = orbit_lamination(&group, &seed, 2).unwrap();
        assert!(orbit.is_invariant_so_far());
        assert!(orbit.lamination.len() > seed.len());
    }

    #[test]
    fn contracting_element_found() {
        let (group, seed) = catalog::sanov_example(0).unwrap();
        let orbit = orbit_lamination(&group, &seed, 2).unwrap();
        let gaps = orbit.lamination.gaps().unwrap();
        let poly = gaps
            .iter()
            .find(|g| !g.is_leaf_gap() && g.polygon_vertices().is_some())
            .expect("polygon gap exists");
        let target = poly.sides()[0].clone();
        let hit = find_contracting(&group, poly, &target, 3).unwrap();
        let (w, g) = hit.found().expect("contracting element at depth 3");
        assert!(!w.is_empty());
        for v in poly.polygon_vertices().unwrap() {
            assert!(target.contains(&g.apply(&v).unwrap()).unwrap());
        }
    }

    #[test]
    fn noncommuting_witness_on_sanov() {
        let (group, seed) = catalog::sanov_example(0).unwrap();
        let orbit = orbit_lamination(&group, &seed, 2).unwrap();
        let gaps = orbit.lamination.gaps().unwrap();
        let poly = gaps
            .iter()
            .find(|g| !g.is_leaf_gap() && g.polygon_vertices().is_some())
            .unwrap();
        let hit = noncommuting_witness(&group, poly, 3).unwrap();
        let w = hit.found().expect("witness for the free group");
        assert_ne!(
            w.f1.compose(&w.f2).unwrap(),
            w.f2.compose(&w.f1).unwrap()
        );
    }

    #[test]
    fn noncommuting_witness_absent_for_rotations() {
        let group = MarkedGroup::new(vec![(
            "r".into(),
            Homeo::PL(PLHomeo::rotation(rational(1, 3))),
        )])
        .unwrap();
        let lam = catalog::ideal_triangle_rotation(3).unwrap().1;
        let gaps = lam.gaps().unwrap();
        let poly = gaps.iter().find(|g| !g.is_leaf_gap()).unwrap();
        let hit = noncommuting_witness(&group, poly, 8).unwrap();
        assert!(hit.found().is_none());
    }

    #[test]
    fn gap_classification() {
        let tri = catalog::ideal_triangle_rotation(3).unwrap().1;
        let gaps = tri.gaps().unwrap();
        let central = gaps.iter().find(|g| !g.is_leaf_gap()).unwrap();
        // the rotation fixes nothing
        let rot = Homeo::PL(PLHomeo::rotation(rational(1, 3)));
        assert_eq!(classify_gap(&rot, central).unwrap(), Ok(GapType::Free));
        // a map fixing all three vertices
        let all = Homeo::PL(
            PLHomeo::new(&[
                (rational(0, 1), rational(0, 1)),
                (rational(1, 6), rational(1, 4)),
                (rational(1, 3), rational(1, 3)),
                (rational(1, 2), rational(7, 12)),
                (rational(2, 3), rational(2, 3)),
                (rational(5, 6), rational(11, 12)),
            ])
            .unwrap(),
        );
        assert_eq!(classify_gap(&all, central).unwrap(), Ok(GapType::Fixed));
        // two of three fixed: flagged, not typed
        let two = Homeo::PL(
            PLHomeo::new(&[
                (rational(0, 1), rational(0, 1)),
                (rational(1, 6), rational(1, 4)),
                (rational(1, 3), rational(1, 3)),
                (rational(1, 2), rational(47, 72)),
            ])
            .unwrap(),
        );
        let out = classify_gap(&two, central).unwrap();
        let violation = out.unwrap_err();
        assert_eq!(violation.fixed_vertices.len(), 2);
        assert_eq!(violation.total_vertices, 3);
    }

    #[test]
    fn pingpong_sanov_accepts_and_commuting_rejects() {
        let (group, table) = catalog::sanov_pingpong();
        let g = &group.generators()[0];
        let h = &group.generators()[1];
        let cert = pingpong_certify(g, h, &table).unwrap();
        assert!(cert.is_ok());
        // commuting parabolic pair
        let p = Homeo::Mobius(MobiusMap::from_ints(1, 1, 0, 1).unwrap());
        let q = Homeo::Mobius(MobiusMap::from_ints(1, 2, 0, 1).unwrap());
        let rej = pingpong_certify(&p, &q, &table).unwrap();
        assert!(rej.is_err());
    }

    #[test]
    fn global_fixed_points_intersect() {
        let scale = Homeo::Mobius(MobiusMap::from_ints(2, 0, 0, 1).unwrap());
        let scale2 = Homeo::Mobius(MobiusMap::from_ints(3, 0, 0, 1).unwrap());
        let group = MarkedGroup::new(vec![("g".into(), scale), ("h".into(), scale2)]).unwrap();
        let fp = global_fixed_points(&group).unwrap();
        assert_eq!(
            fp,
            FixedPointSet::Finite(vec![P::projective_i(0, 1), P::infinity()])
        );
        let (sanov_group, _) = catalog::sanov_example(0).unwrap();
        assert_eq!(
            global_fixed_points(&sanov_group).unwrap(),
            FixedPointSet::Empty
        );
    }

    #[test]
    fn census_counts() {
        let counts = fixedpoint_census(&sanov(), 2).unwrap();
        assert_eq!(counts.len(), 16);
        for (_, n) in &counts {
            assert!(*n == 1 || *n == 2);
        }
    }
}
