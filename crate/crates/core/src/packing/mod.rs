//! Orbit enumeration of a packing up to a bend cap.
//!
//! Two independent searches are provided. [`Mode::BendOnly`] walks integer bend vectors and
//! identifies configurations that differ by an admissible reordering. [`Mode::Geometric`] walks
//! exact F-matrices and deduplicates spheres by their coordinates. A move is expanded only if
//! one of the four spheres it creates has bend at most the cap.

mod export;
pub mod moves;

use std::collections::{BTreeMap, BTreeSet, HashSet};

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::arithmetic::{epsilon_of, ObstructionClass};
use crate::config::{bend_vector, BendVector, ConfigError, FMatrix};
use crate::{Coord5, QSqrt2};

pub use export::{export_scene, export_spheres, scene_from_configuration, SceneFormat};
use moves::{canonical, child_bends, MOVES};

pub const DEFAULT_BUDGET: usize = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PackingError {
    #[error("bend cap {cap} is below the largest seed bend {max_seed_bend}")]
    CapBelowSeed { cap: i64, max_seed_bend: i64 },
    #[error("node budget of {budget} states exhausted before the frontier emptied (raise --budget or ORTHOPLEX_BUDGET)")]
    BudgetExceeded {
        budget: usize,
        partial: Box<PackingReport>,
    },
    #[error("seed has non-integral bends {0}")]
    NonIntegralSeed(String),
    #[error("invalid seed: {0}")]
    InvalidSeed(#[from] ConfigError),
    #[error("bend arithmetic overflowed 64-bit integers")]
    Overflow,
    #[error("seed contains a plane; geometric mode needs a bounding box (--bbox)")]
    NeedsBoundingBox,
    #[error("report did not exhaust its frontier; missing bends would be under-reported")]
    NotExhausted,
    #[error("range end {up_to} exceeds the report's bend cap {cap}")]
    BeyondCap { up_to: i64, cap: i64 },
    #[error("seed is not primitive, so it has no mod-4 obstruction")]
    NoObstruction,
    #[error("scene export needs a geometric-mode report")]
    NotGeometric,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Mode {
    BendOnly,
    Geometric,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Classification {
    Bounded,
    Planar,
    HalfSpace,
    FullSpace,
}

impl Classification {
    fn from_counts(negative: usize, zero: usize) -> Self {
        match (negative, zero) {
            (1, 0) => Self::Bounded,
            (0, 2) => Self::Planar,
            (_, 1) => Self::HalfSpace,
            _ => Self::FullSpace,
        }
    }
}

#[derive(Debug, Clone)]
pub struct PackingSpec {
    pub seed: FMatrix,
    pub bend_cap: i64,
    pub mode: Mode,
    pub budget: usize,
    /// Half-width of the box `|x|, |y|, |z| ≤ r` that geometric mode keeps sphere centers in.
    pub bbox: Option<QSqrt2>,
    pub parallel: bool,
}

impl PackingSpec {
    pub fn new(seed: FMatrix, bend_cap: i64, mode: Mode) -> Self {
        Self {
            seed,
            bend_cap,
            mode,
            budget: DEFAULT_BUDGET,
            bbox: None,
            parallel: false,
        }
    }

    pub fn with_budget(mut self, budget: usize) -> Self {
        self.budget = budget;
        self
    }

    pub fn with_bbox(mut self, half_width: QSqrt2) -> Self {
        self.bbox = Some(half_width);
        self
    }

    pub fn parallel(mut self, on: bool) -> Self {
        self.parallel = on;
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PackingReport {
    pub mode: Mode,
    pub bend_cap: i64,
    /// Distinct configurations visited.
    pub configurations: usize,
    /// Exact spheres with bend at most the cap; empty in bend-only mode.
    pub spheres: Vec<Coord5>,
    /// Geometric mode: number of distinct spheres per bend. Bend-only mode: number of sphere
    /// slots per bend summed over distinct configurations.
    pub bend_multiplicity: BTreeMap<i64, u64>,
    pub bends: Vec<i64>,
    pub classification: Classification,
    pub obstruction: Option<ObstructionClass>,
    /// Bends in the forbidden residue class; always empty for a genuine packing.
    pub obstruction_violations: Vec<i64>,
    pub frontier_exhausted: bool,
}

impl PackingReport {
    pub fn epsilon(&self) -> Option<i8> {
        self.obstruction.map(|o| o.epsilon)
    }
}

pub fn bend_set(report: &PackingReport) -> &[i64] {
    &report.bends
}

/// Admissible integers in `from..=up_to` that are not bends of the packing.
pub fn missing_admissible(
    report: &PackingReport,
    from: i64,
    up_to: i64,
) -> Result<Vec<i64>, PackingError> {
    if !report.frontier_exhausted {
        return Err(PackingError::NotExhausted);
    }
    if up_to > report.bend_cap {
        return Err(PackingError::BeyondCap {
            up_to,
            cap: report.bend_cap,
        });
    }
    let class = report.obstruction.ok_or(PackingError::NoObstruction)?;
    let present: HashSet<i64> = report.bends.iter().copied().collect();
    Ok((from..=up_to)
        .filter(|&n| class.admits_i64(n) && !present.contains(&n))
        .collect())
}

fn seed_bends(seed: &FMatrix) -> Result<[i64; 5], PackingError> {
    let bv = bend_vector(seed);
    let int = bv
        .to_integral()
        .ok_or_else(|| PackingError::NonIntegralSeed(bv.to_string()))?;
    let v: Option<Vec<i64>> = int.entries().iter().map(ToPrimitive::to_i64).collect();
    let v = v.ok_or(PackingError::Overflow)?;
    Ok(v.try_into().expect("five entries"))
}

fn eight(v: &[i64; 5]) -> [i64; 8] {
    std::array::from_fn(|i| if i < 4 { v[i] } else { 2 * v[4] - v[i - 4] })
}

fn obstruction_of(v: &[i64; 5]) -> Option<ObstructionClass> {
    epsilon_of(&eight(v).map(BigInt::from)).ok()
}

fn violations(bends: &[i64], class: Option<ObstructionClass>) -> Vec<i64> {
    class
        .map(|c| {
            bends
                .iter()
                .copied()
                .filter(|&b| !c.admits_i64(b))
                .collect()
        })
        .unwrap_or_default()
}

pub fn generate(spec: &PackingSpec) -> Result<PackingReport, PackingError> {
    spec.seed.validate()?;
    let v = seed_bends(&spec.seed)?;
    let max_seed_bend = *v[..4].iter().max().expect("four bends");
    if spec.bend_cap < max_seed_bend {
        return Err(PackingError::CapBelowSeed {
            cap: spec.bend_cap,
            max_seed_bend,
        });
    }
    match spec.mode {
        Mode::BendOnly => Ok(bend_only(spec, v)?.report),
        Mode::Geometric => geometric(spec, v),
    }
}

struct BendOnlyRun {
    report: PackingReport,
    states: Vec<[i64; 5]>,
}

/// Canonical bend vectors of every configuration visited by the bend-only search.
pub fn orbit_bend_vectors(
    seed: &FMatrix,
    cap: i64,
) -> Result<Vec<BendVector<BigInt>>, PackingError> {
    seed.validate()?;
    let v = seed_bends(seed)?;
    let run = bend_only(&PackingSpec::new(seed.clone(), cap, Mode::BendOnly), v)?;
    Ok(run
        .states
        .into_iter()
        .map(|s| BendVector(s.map(BigInt::from)))
        .collect())
}

fn expand_bend_only(v: &[i64; 5], cap: i64) -> Result<Vec<[i64; 5]>, PackingError> {
    let mut out = Vec::new();
    for &mask in &MOVES {
        let (child, new) = child_bends(v, mask)?;
        if new.iter().min().is_some_and(|&m| m <= cap) {
            out.push(canonical(&child));
        }
    }
    Ok(out)
}

fn bend_only(spec: &PackingSpec, seed: [i64; 5]) -> Result<BendOnlyRun, PackingError> {
    let cap = spec.bend_cap;
    let root = canonical(&seed);
    let mut seen: HashSet<[i64; 5]> = HashSet::from([root]);
    let mut order = vec![root];
    let mut frontier = vec![root];
    let mut exhausted = true;
    while !frontier.is_empty() {
        let children: Vec<Vec<[i64; 5]>> = if spec.parallel {
            frontier
                .par_iter()
                .map(|v| expand_bend_only(v, cap))
                .collect::<Result<_, _>>()?
        } else {
            frontier
                .iter()
                .map(|v| expand_bend_only(v, cap))
                .collect::<Result<_, _>>()?
        };
        let mut next = Vec::new();
        for c in children.into_iter().flatten() {
            if seen.insert(c) {
                order.push(c);
                next.push(c);
            }
        }
        if seen.len() > spec.budget {
            exhausted = false;
            break;
        }
        frontier = next;
    }

    let mut multiplicity: BTreeMap<i64, u64> = BTreeMap::new();
    let mut negatives = BTreeSet::new();
    let mut max_zeros = 0;
    for s in &order {
        let e = eight(s);
        max_zeros = max_zeros.max(e.iter().filter(|&&b| b == 0).count());
        for b in e {
            if b < 0 {
                negatives.insert(b);
            }
            if b <= cap {
                *multiplicity.entry(b).or_default() += 1;
            }
        }
    }
    let bends: Vec<i64> = multiplicity.keys().copied().collect();
    let obstruction = obstruction_of(&seed);
    let report = PackingReport {
        mode: Mode::BendOnly,
        bend_cap: cap,
        configurations: order.len(),
        spheres: Vec::new(),
        obstruction_violations: violations(&bends, obstruction),
        bend_multiplicity: multiplicity,
        bends,
        classification: Classification::from_counts(negatives.len(), max_zeros),
        obstruction,
        frontier_exhausted: exhausted,
    };
    if !exhausted {
        return Err(PackingError::BudgetExceeded {
            budget: spec.budget,
            partial: Box::new(report),
        });
    }
    order.sort_unstable();
    Ok(BendOnlyRun {
        report,
        states: order,
    })
}

/// Rows `v₁..v₄` and the antipodal vector `μ`.
type Config = [Coord5; 5];

fn sphere_bend(c: &Coord5) -> Result<i64, PackingError> {
    c.b.as_integer()
        .and_then(|b| b.to_i64())
        .ok_or_else(|| PackingError::NonIntegralSeed(c.to_string()))
}

fn in_box(c: &Coord5, half_width: &Option<QSqrt2>) -> bool {
    let Some(r) = half_width else { return true };
    if !c.b.is_positive() {
        return true;
    }
    let bound = r * &c.b;
    [&c.xhat, &c.yhat, &c.zhat].iter().all(|x| x.abs() <= bound)
}

fn config_key(cfg: &Config) -> Vec<Coord5> {
    let two = QSqrt2::from(2);
    let mut spheres: Vec<Coord5> = Vec::with_capacity(8);
    for v in &cfg[..4] {
        spheres.push(v.clone());
        spheres.push(cfg[4].scaled(&two).minus(v));
    }
    spheres.sort();
    spheres
}

fn geometric_child(cfg: &Config, mask: u8) -> (Config, [Coord5; 4]) {
    let two = QSqrt2::from(2);
    let mu = &cfg[4];
    let kept: [Coord5; 4] = std::array::from_fn(|k| {
        if mask & (1 << k) != 0 {
            mu.scaled(&two).minus(&cfg[k])
        } else {
            cfg[k].clone()
        }
    });
    let mu2 = kept
        .iter()
        .skip(1)
        .fold(kept[0].clone(), |acc, w| acc.plus(w))
        .minus(mu);
    let new: [Coord5; 4] = std::array::from_fn(|k| mu2.scaled(&two).minus(&kept[k]));
    let rows: [Coord5; 4] = std::array::from_fn(|k| {
        if mask & (1 << k) != 0 {
            new[k].clone()
        } else {
            kept[k].clone()
        }
    });
    let [a, b, c, d] = rows;
    ([a, b, c, d, mu2], new)
}

type Expansion = Vec<(Config, Vec<Coord5>)>;

fn expand_geometric(
    cfg: &Config,
    cap: i64,
    bbox: &Option<QSqrt2>,
) -> Result<Expansion, PackingError> {
    let mut out = Vec::new();
    for &mask in &MOVES {
        let (child, new) = geometric_child(cfg, mask);
        let mut keep = Vec::new();
        for s in new {
            if sphere_bend(&s)? <= cap && in_box(&s, bbox) {
                keep.push(s);
            }
        }
        if !keep.is_empty() {
            out.push((child, keep));
        }
    }
    Ok(out)
}

fn geometric(spec: &PackingSpec, seed_v: [i64; 5]) -> Result<PackingReport, PackingError> {
    let cap = spec.bend_cap;
    let rows: Config = std::array::from_fn(|k| spec.seed.row(k + 1));
    let seed_spheres = spec.seed.spheres();
    if spec.bbox.is_none() && seed_spheres.iter().any(|s| s.b.is_zero()) {
        return Err(PackingError::NeedsBoundingBox);
    }
    let mut spheres: BTreeSet<Coord5> = BTreeSet::new();
    for s in seed_spheres {
        if sphere_bend(&s)? <= cap && in_box(&s, &spec.bbox) {
            spheres.insert(s);
        }
    }
    let mut seen: HashSet<Vec<Coord5>> = HashSet::from([config_key(&rows)]);
    let mut frontier = vec![rows];
    let mut exhausted = true;
    while !frontier.is_empty() {
        let children: Vec<Expansion> = if spec.parallel {
            frontier
                .par_iter()
                .map(|c| expand_geometric(c, cap, &spec.bbox))
                .collect::<Result<_, _>>()?
        } else {
            frontier
                .iter()
                .map(|c| expand_geometric(c, cap, &spec.bbox))
                .collect::<Result<_, _>>()?
        };
        let mut next = Vec::new();
        for (child, new) in children.into_iter().flatten() {
            if seen.insert(config_key(&child)) {
                spheres.extend(new);
                next.push(child);
            }
        }
        if seen.len() > spec.budget {
            exhausted = false;
            break;
        }
        frontier = next;
    }

    let mut multiplicity: BTreeMap<i64, u64> = BTreeMap::new();
    let (mut negative, mut zero) = (0, 0);
    for s in &spheres {
        let b = sphere_bend(s)?;
        *multiplicity.entry(b).or_default() += 1;
        negative += usize::from(b < 0);
        zero += usize::from(b == 0);
    }
    let bends: Vec<i64> = multiplicity.keys().copied().collect();
    let obstruction = obstruction_of(&seed_v);
    let mut spheres: Vec<Coord5> = spheres.into_iter().collect();
    spheres.sort_by(|a, b| a.b.abs().cmp(&b.b.abs()).then_with(|| a.cmp(b)));
    let report = PackingReport {
        mode: Mode::Geometric,
        bend_cap: cap,
        configurations: seen.len(),
        spheres,
        obstruction_violations: violations(&bends, obstruction),
        bend_multiplicity: multiplicity,
        bends,
        classification: Classification::from_counts(negative, zero),
        obstruction,
        frontier_exhausted: exhausted,
    };
    if !exhausted {
        return Err(PackingError::BudgetExceeded {
            budget: spec.budget,
            partial: Box::new(report),
        });
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::{f0, f1, f7d};
    use crate::groups::{apply, GroupElement, TableName};
    use crate::packing::moves::move_label;

    #[test]
    fn geometric_moves_match_matrix_action() {
        let f = f7d();
        let rows: Config = std::array::from_fn(|k| f.row(k + 1));
        for &mask in &MOVES {
            let g = GroupElement::generator(TableName::Apollonian, &move_label(mask)).unwrap();
            let expect = apply(&g, &f);
            let (child, _) = geometric_child(&rows, mask);
            let got = FMatrix::from_rows(&child);
            assert_eq!(got, expect, "{}", move_label(mask));
        }
    }

    #[test]
    fn small_bounded_run() {
        let r = generate(&PackingSpec::new(f1(), 12, Mode::BendOnly)).unwrap();
        assert_eq!(r.bends, vec![-1, 2, 3, 4, 6, 7, 8, 10, 11, 12]);
        assert_eq!(r.classification, Classification::Bounded);
        assert_eq!(r.epsilon(), Some(-1));
        assert!(r.obstruction_violations.is_empty());
        assert!(r.frontier_exhausted);
    }

    #[test]
    fn planar_classification() {
        let r = generate(&PackingSpec::new(f0(), 10, Mode::BendOnly)).unwrap();
        assert_eq!(r.classification, Classification::Planar);
        assert_eq!(r.bends, vec![0, 1, 2, 4, 5, 6, 8, 9, 10]);
    }

    #[test]
    fn cap_below_seed() {
        let err = generate(&PackingSpec::new(f7d(), 19, Mode::BendOnly)).unwrap_err();
        assert_eq!(
            err,
            PackingError::CapBelowSeed {
                cap: 19,
                max_seed_bend: 20
            }
        );
        assert!(generate(&PackingSpec::new(f7d(), 20, Mode::BendOnly)).is_ok());
    }

    #[test]
    fn budget_exhaustion_returns_partial_report() {
        let err =
            generate(&PackingSpec::new(f1(), 200, Mode::BendOnly).with_budget(50)).unwrap_err();
        let PackingError::BudgetExceeded { partial, .. } = err else {
            panic!("expected budget error")
        };
        assert!(!partial.frontier_exhausted);
        assert!(missing_admissible(&partial, 2, 50).is_err());
    }

    #[test]
    fn geometric_needs_bbox_for_planes() {
        assert_eq!(
            generate(&PackingSpec::new(f0(), 4, Mode::Geometric)).unwrap_err(),
            PackingError::NeedsBoundingBox
        );
        let r = generate(&PackingSpec::new(f0(), 4, Mode::Geometric).with_bbox(QSqrt2::from(2)))
            .unwrap();
        assert_eq!(r.classification, Classification::Planar);
        assert!(r.bends.iter().all(|b| b % 4 != 3));
    }

    #[test]
    fn modes_agree_at_small_cap() {
        for f in [f1(), f7d()] {
            let a = generate(&PackingSpec::new(f.clone(), 24, Mode::BendOnly)).unwrap();
            let b = generate(&PackingSpec::new(f, 24, Mode::Geometric)).unwrap();
            assert_eq!(a.bends, b.bends);
            assert_eq!(a.classification, b.classification);
        }
    }

    #[test]
    fn parallel_is_identical() {
        let s = PackingSpec::new(f7d(), 60, Mode::BendOnly);
        let a = generate(&s).unwrap();
        let b = generate(&s.clone().parallel(true)).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn missing_admissible_ranges() {
        let r = generate(&PackingSpec::new(f1(), 40, Mode::BendOnly)).unwrap();
        assert_eq!(missing_admissible(&r, 2, 40).unwrap(), Vec::<i64>::new());
        assert_eq!(missing_admissible(&r, -2, 1).unwrap(), vec![-2, 0]);
        assert!(missing_admissible(&r, 2, 41).is_err());
    }
}
