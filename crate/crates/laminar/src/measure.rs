//! Finite-support probability measures on the circle and the gap/side
//! mass facts used to rule out invariant measures for tight actions.

use crate::circle::{CirclePoint, Model, OpenInterval};
use crate::group::{global_fixed_points, MarkedGroup};
use crate::homeo::{FixedPointSet, Homeo};
use crate::lamination::{FiniteLamination, Gap};
use crate::{Error, Result};
use num::{BigRational, One, Signed, Zero};
use std::collections::BTreeMap;

/// Purely atomic probability measure: positive rational weights on
/// finitely many points, summing to exactly 1.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FiniteSupportMeasure {
    atoms: BTreeMap<CirclePoint, BigRational>,
}

impl FiniteSupportMeasure {
    pub fn new(atoms: impl IntoIterator<Item = (CirclePoint, BigRational)>) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (p, w) in atoms {
            if !w.is_positive() {
                return Err(Error::BadMeasure);
            }
            *map.entry(p).or_insert_with(BigRational::zero) += w;
        }
        if map.is_empty() {
            return Err(Error::BadMeasure);
        }
        let model = map.keys().next().unwrap().model();
        if map.keys().any(|p| p.model() != model) {
            return Err(Error::ModelMismatch);
        }
        let total: BigRational = map.values().cloned().sum();
        if !total.is_one() {
            return Err(Error::BadMeasure);
        }
        Ok(FiniteSupportMeasure { atoms: map })
    }

    pub fn dirac(p: CirclePoint) -> Self {
        FiniteSupportMeasure {
            atoms: BTreeMap::from([(p, BigRational::one())]),
        }
    }

    pub fn uniform(points: impl IntoIterator<Item = CirclePoint>) -> Result<Self> {
        let pts: Vec<CirclePoint> = points.into_iter().collect();
        if pts.is_empty() {
            return Err(Error::BadMeasure);
        }
        let w = BigRational::new(1.into(), (pts.len() as i64).into());
        FiniteSupportMeasure::new(pts.into_iter().map(|p| (p, w.clone())))
    }

    pub fn atoms(&self) -> impl Iterator<Item = (&CirclePoint, &BigRational)> {
        self.atoms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &CirclePoint> {
        self.atoms.keys()
    }

    pub fn support_size(&self) -> usize {
        self.atoms.len()
    }

    pub fn model(&self) -> Model {
        self.atoms.keys().next().unwrap().model()
    }

    pub fn mass_at(&self, p: &CirclePoint) -> BigRational {
        self.atoms.get(p).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Mass of an open interval.
    pub fn mass_of(&self, i: &OpenInterval) -> Result<BigRational> {
        let mut total = BigRational::zero();
        for (p, w) in &self.atoms {
            if i.contains(p)? {
                total += w;
            }
        }
        Ok(total)
    }

    pub fn pushforward(&self, g: &Homeo) -> Result<FiniteSupportMeasure> {
        let mut map: BTreeMap<CirclePoint, BigRational> = BTreeMap::new();
        for (p, w) in &self.atoms {
            *map.entry(g.apply(p)?).or_insert_with(BigRational::zero) += w;
        }
        Ok(FiniteSupportMeasure { atoms: map })
    }

    pub fn is_invariant(&self, g: &Homeo) -> Result<bool> {
        Ok(&self.pushforward(g)? == self)
    }

    pub fn is_group_invariant(&self, group: &MarkedGroup) -> Result<bool> {
        for g in group.generators() {
            if !self.is_invariant(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Outcome of looking for the unique gap side of full measure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FullMeasureSide {
    Side(OpenInterval),
    /// No side has mass 1: mass per side, plus the mass stuck on the
    /// vertices.  For an invariant measure and a tight pair this
    /// configuration is impossible, so the report is contradiction
    /// evidence.
    Violation {
        side_masses: Vec<(OpenInterval, BigRational)>,
        vertex_mass: BigRational,
    },
}

pub fn full_measure_side(mu: &FiniteSupportMeasure, gap: &Gap) -> Result<FullMeasureSide> {
    let mut side_masses = Vec::with_capacity(gap.sides().len());
    for side in gap.sides() {
        let m = mu.mass_of(side)?;
        if m.is_one() {
            return Ok(FullMeasureSide::Side(side.clone()));
        }
        side_masses.push((side.clone(), m));
    }
    let interior: BigRational = side_masses.iter().map(|(_, m)| m.clone()).sum();
    Ok(FullMeasureSide::Violation {
        side_masses,
        vertex_mass: BigRational::one() - interior,
    })
}

/// What an invariant finite-support measure tells us about the action.
#[derive(Clone, Debug)]
pub enum SupportReport {
    /// One atom, necessarily a global fixed point.
    GlobalFixedPoint(CirclePoint),
    /// Invariant with larger support: no gap of the supplied lamination
    /// has a full-measure side, so no tight pair is compatible with
    /// this measure.  Carries one witnessing gap violation.
    NoTightPair {
        support_size: usize,
        witness: Option<(Gap, FullMeasureSide)>,
    },
}

/// Checks invariance under every generator (rejecting otherwise), then
/// reports what the support forces.
pub fn support_singleton_check(
    mu: &FiniteSupportMeasure,
    group: &MarkedGroup,
    lam: &FiniteLamination,
) -> Result<SupportReport> {
    if !mu.is_group_invariant(group)? {
        return Err(Error::BadMeasure);
    }
    if mu.support_size() == 1 {
        let p = mu.support().next().unwrap().clone();
        // invariance of a Dirac mass is exactly fixedness
        debug_assert!(matches!(
            global_fixed_points(group)?,
            FixedPointSet::Finite(_) | FixedPointSet::WholeCircle
        ));
        return Ok(SupportReport::GlobalFixedPoint(p));
    }
    let mut witness = None;
    for gap in lam.gaps()? {
        if gap.is_leaf_gap() {
            continue;
        }
        if let v @ FullMeasureSide::Violation { .. } = full_measure_side(mu, &gap)? {
            witness = Some((gap, v));
            break;
        }
    }
    Ok(SupportReport::NoTightPair {
        support_size: mu.support_size(),
        witness,
    })
}
