//! Catalogs of small shelves and scans of the rank conjectures.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::chain::complex::{
    build_complex_with_cap, preset_complex, CoefficientVector, HomologyGroup, HomologyKind,
    DEFAULT_BASIS_CAP,
};
use crate::chain::maps::orbit_projection_on_homology;
use crate::error::{Error, Result};
use crate::families::{construct_family, is_pointed_map_type, FamilySpec};
use crate::io::SCHEMA_VERSION;
use crate::iso::{enumerate_shelves, IsoClassKey};
use crate::orbits::{classify, left_orbits, Classification};
use crate::table::{validate_multishelf, MultiShelf, Shelf};

/// Largest carrier the whole-class scans accept.
pub const SCAN_SIZE_LIMIT: usize = 4;
/// Upper bound on hyperplane samples.
pub const MAX_SAMPLES: usize = 10_000;

fn par_map<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        items.par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.iter().map(f).collect()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CatalogEntry {
    pub index: usize,
    pub key: IsoClassKey,
    pub table: Vec<Vec<usize>>,
    #[serde(flatten)]
    pub classification: Classification,
    pub orbit_count: usize,
    pub pointed_map: bool,
}

/// All isomorphism classes of shelves on `n` elements, in key order.
pub fn catalog(n: usize) -> Result<Vec<CatalogEntry>> {
    Ok(enumerate_shelves(n)?
        .into_iter()
        .enumerate()
        .map(|(index, key)| {
            let shelf = Shelf::new_unchecked(key.table().clone());
            CatalogEntry {
                index,
                table: key.table().rows(),
                classification: classify(&shelf),
                orbit_count: left_orbits(&shelf).count(),
                pointed_map: is_pointed_map_type(key.table()),
                key,
            }
        })
        .collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Consistent,
    Inconsistent,
    NotComputed,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ScanTarget {
    Growth,
    Example4,
    Boolean,
    Hyperplane,
    Torsion,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjecturedRank {
    pub degree: usize,
    pub rank: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct ScanPoint {
    pub params: Value,
    pub observed: Vec<HomologyGroup>,
    pub conjectured: Vec<ConjecturedRank>,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exceptional: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pointed_map: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl ScanPoint {
    fn judged(params: Value, observed: Vec<HomologyGroup>, conjectured: Vec<ConjecturedRank>) -> Self {
        let verdict = if conjectured.is_empty() {
            Verdict::NotComputed
        } else if conjectured
            .iter()
            .all(|c| observed.get(c.degree).is_some_and(|g| g.rank == c.rank))
        {
            Verdict::Consistent
        } else {
            Verdict::Inconsistent
        };
        Self {
            params,
            observed,
            conjectured,
            verdict,
            exceptional: None,
            pointed_map: None,
            note: None,
        }
    }

    fn not_computed(params: Value, note: String) -> Self {
        Self {
            params,
            observed: vec![],
            conjectured: vec![],
            verdict: Verdict::NotComputed,
            exceptional: None,
            pointed_map: None,
            note: Some(note),
        }
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.observed.iter().map(|g| g.rank).collect()
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub consistent: usize,
    pub inconsistent: usize,
    pub not_computed: usize,
}

/// How the projection onto the orbit quotient acts on `H_1` across a scan.
#[derive(Clone, Debug, Default, Serialize)]
pub struct ProjectionSummary {
    pub degree: usize,
    pub checked: usize,
    pub not_injective: usize,
    pub not_surjective: usize,
    /// Classes where `rank H(X) > rank H(O)`.
    pub rank_larger: usize,
    /// Classes where `rank H(X) < rank H(O)`.
    pub rank_smaller: usize,
    pub not_injective_example: Option<Value>,
    pub not_surjective_example: Option<Value>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ScanReport {
    pub schema: u32,
    pub target: ScanTarget,
    pub grid: Value,
    pub points: Vec<ScanPoint>,
    pub summary: Summary,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generic_ranks: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exceptional_fraction: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub orbit_projection: Option<ProjectionSummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generated_at: Option<u64>,
}

impl ScanReport {
    fn new(target: ScanTarget, grid: Value, points: Vec<ScanPoint>) -> Self {
        let mut summary = Summary::default();
        for p in &points {
            match p.verdict {
                Verdict::Consistent => summary.consistent += 1,
                Verdict::Inconsistent => summary.inconsistent += 1,
                Verdict::NotComputed => summary.not_computed += 1,
            }
        }
        Self {
            schema: SCHEMA_VERSION,
            target,
            grid,
            points,
            summary,
            generic_ranks: None,
            exceptional_fraction: None,
            orbit_projection: None,
            generated_at: None,
        }
    }
}

fn check_sizes(sizes: &[usize]) -> Result<()> {
    match sizes.iter().find(|&&n| n == 0 || n > SCAN_SIZE_LIMIT) {
        Some(&n) if n > SCAN_SIZE_LIMIT => Err(Error::PracticalSizeLimit {
            what: "class scan",
            size: n,
            limit: SCAN_SIZE_LIMIT,
        }),
        Some(_) => Err(Error::SpecPreconditionFailed("empty carrier".into())),
        None => Ok(()),
    }
}

fn shelf_groups(shelf: &Shelf, maxdeg: usize, cap: u128) -> Result<Vec<HomologyGroup>> {
    preset_complex(shelf, HomologyKind::Shelf, maxdeg, None, cap)?.homology_all()
}

fn class_shelves(sizes: &[usize]) -> Result<Vec<(usize, IsoClassKey)>> {
    let mut out = Vec::new();
    for &n in sizes {
        out.extend(enumerate_shelves(n)?.into_iter().map(|k| (n, k)));
    }
    Ok(out)
}

fn class_params(n: usize, key: &IsoClassKey, orbits: usize) -> Value {
    json!({ "size": n, "key": key, "orbits": orbits })
}

/// `rk H_{k+1} = |X| rk H_k` for `k >= |X| - 2`, on every class of the
/// given sizes. Also records what the orbit projection does on `H_1`.
pub fn scan_growth(sizes: &[usize], maxdeg: usize, cap: u128) -> Result<ScanReport> {
    check_sizes(sizes)?;
    let classes = class_shelves(sizes)?;
    let results = par_map(&classes, |(n, key)| -> Result<(ScanPoint, Option<_>)> {
        let shelf = Shelf::new_unchecked(key.table().clone());
        let orbits = left_orbits(&shelf).count();
        let params = class_params(*n, key, orbits);
        let observed = match shelf_groups(&shelf, maxdeg, cap) {
            Ok(g) => g,
            Err(Error::MemoryCapExceeded { needed, cap }) => {
                return Ok((
                    ScanPoint::not_computed(params, format!("needs {needed} basis elements, cap {cap}")),
                    None,
                ))
            }
            Err(e) => return Err(e),
        };
        let conjectured = (n.saturating_sub(2)..maxdeg)
            .map(|k| ConjecturedRank {
                degree: k + 1,
                rank: n * observed[k].rank,
            })
            .collect();
        let projection = if maxdeg >= 1 && *n >= 2 {
            Some(orbit_projection_on_homology(&shelf, 1)?)
        } else {
            None
        };
        Ok((ScanPoint::judged(params, observed, conjectured), projection))
    });
    let mut points = Vec::with_capacity(results.len());
    let mut proj = ProjectionSummary {
        degree: 1,
        ..Default::default()
    };
    for r in results {
        let (point, projection) = r?;
        if let Some(p) = projection {
            proj.checked += 1;
            if !p.injective {
                proj.not_injective += 1;
                proj.not_injective_example.get_or_insert_with(|| point.params.clone());
            }
            if !p.surjective {
                proj.not_surjective += 1;
                proj.not_surjective_example.get_or_insert_with(|| point.params.clone());
            }
            if p.source.rank > p.target.rank {
                proj.rank_larger += 1;
            }
            if p.source.rank < p.target.rank {
                proj.rank_smaller += 1;
            }
        }
        points.push(point);
    }
    let mut report = ScanReport::new(ScanTarget::Growth, json!({ "sizes": sizes, "maxdeg": maxdeg }), points);
    report.orbit_projection = Some(proj);
    Ok(report)
}

/// Conjectured rank of `H_n`, `n >= 1`, for the pointed-map family.
pub fn example4_rank(size: usize, orbits: usize, n: usize) -> Option<usize> {
    let inner = 2 + (size as i64 + 1) * (orbits as i64 - 2);
    (n >= 1 && inner >= 0).then(|| size.pow(n as u32 - 1) * inner as usize)
}

/// The pointed-map rank formula on every class of that family with the
/// given sizes.
pub fn scan_example4(sizes: &[usize], maxdeg: usize, cap: u128) -> Result<ScanReport> {
    check_sizes(sizes)?;
    let classes: Vec<_> = class_shelves(sizes)?
        .into_iter()
        .filter(|(_, k)| is_pointed_map_type(k.table()))
        .collect();
    let points = par_map(&classes, |(n, key)| -> Result<ScanPoint> {
        let shelf = Shelf::new_unchecked(key.table().clone());
        let orbits = left_orbits(&shelf).count();
        let params = class_params(*n, key, orbits);
        let observed = shelf_groups(&shelf, maxdeg, cap)?;
        let conjectured = (1..=maxdeg)
            .filter_map(|d| example4_rank(*n, orbits, d).map(|rank| ConjecturedRank { degree: d, rank }))
            .collect();
        let mut p = ScanPoint::judged(params, observed, conjectured);
        p.pointed_map = Some(true);
        Ok(p)
    })
    .into_iter()
    .collect::<Result<Vec<_>>>()?;
    Ok(ScanReport::new(
        ScanTarget::Example4,
        json!({ "sizes": sizes, "maxdeg": maxdeg }),
        points,
    ))
}

/// Conjectured rank for the Boolean multi-shelf on `|omega|` points with
/// coefficients `(a0, a1, a2)` on `(*0, ∩, ∪)`.
pub fn boolean_rank(omega: usize, a: [i64; 3], n: usize) -> usize {
    let zero = a == [0, 0, 0];
    let special = a[0] != 0 && a[1] == -a[0] && a[2] == -a[0];
    let balanced = a.iter().sum::<i64>() == 0;
    if n == 0 {
        if zero {
            (1 << omega) - 1
        } else if special {
            omega
        } else {
            0
        }
    } else if zero {
        1 << (omega * (n + 1))
    } else if special {
        omega << n
    } else if balanced {
        1
    } else {
        0
    }
}

pub fn scan_boolean(omega: usize, values: &[i64], maxdeg: usize, augmented: bool, cap: u128) -> Result<ScanReport> {
    if omega > 2 {
        return Err(Error::PracticalSizeLimit {
            what: "Boolean scan ground set",
            size: omega,
            limit: 2,
        });
    }
    let full = construct_family(&FamilySpec::BooleanMultiShelf { omega })?.into_multishelf();
    let ms = validate_multishelf(full.ops()[..3].to_vec())?;
    let mut grid = Vec::new();
    for &a0 in values {
        for &a1 in values {
            for &a2 in values {
                grid.push([a0, a1, a2]);
            }
        }
    }
    let points = par_map(&grid, |a| -> Result<ScanPoint> {
        let c = CoefficientVector::new(a.to_vec());
        let groups = build_complex_with_cap(&ms, &c, maxdeg + 1, augmented, cap)?.homology_all()?;
        let conjectured = (0..=maxdeg)
            .map(|d| ConjecturedRank {
                degree: d,
                rank: boolean_rank(omega, *a, d),
            })
            .collect();
        Ok(ScanPoint::judged(json!({ "coefficients": a }), groups, conjectured))
    })
    .into_iter()
    .collect::<Result<Vec<_>>>()?;
    Ok(ScanReport::new(
        ScanTarget::Boolean,
        json!({ "omega": omega, "values": values, "maxdeg": maxdeg, "augmented": augmented }),
        points,
    ))
}

#[derive(Clone, Debug)]
pub struct HyperplaneParams {
    pub samples: usize,
    /// Coefficients are drawn from `-range..=range`.
    pub range: i64,
    pub seed: u64,
    pub maxdeg: usize,
    pub augmented: bool,
    pub cap: u128,
}

impl Default for HyperplaneParams {
    fn default() -> Self {
        Self {
            samples: 200,
            range: 10,
            seed: 0,
            maxdeg: 3,
            augmented: false,
            cap: DEFAULT_BASIS_CAP,
        }
    }
}

/// Samples coefficient vectors, takes the most common rank sequence as the
/// generic one and flags the points that differ from it.
pub fn scan_hyperplane(ms: &MultiShelf, p: &HyperplaneParams) -> Result<ScanReport> {
    if p.samples == 0 || p.samples > MAX_SAMPLES {
        return Err(Error::PracticalSizeLimit {
            what: "hyperplane samples",
            size: p.samples,
            limit: MAX_SAMPLES,
        });
    }
    if p.range <= 0 {
        return Err(Error::SpecPreconditionFailed("coefficient range must be positive".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(p.seed);
    let vectors: Vec<Vec<i64>> = (0..p.samples)
        .map(|_| (0..ms.len()).map(|_| rng.gen_range(-p.range..=p.range)).collect())
        .collect();
    let groups = par_map(&vectors, |a| -> Result<Vec<HomologyGroup>> {
        build_complex_with_cap(ms, &CoefficientVector::new(a.clone()), p.maxdeg + 1, p.augmented, p.cap)?
            .homology_all()
    })
    .into_iter()
    .collect::<Result<Vec<_>>>()?;
    let mut counts: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    for g in &groups {
        *counts.entry(g.iter().map(|h| h.rank).collect()).or_default() += 1;
    }
    // ties go to the smallest sequence, which BTreeMap order makes stable
    let generic = counts
        .iter()
        .max_by(|a, b| a.1.cmp(b.1).then(b.0.cmp(a.0)))
        .map(|(k, _)| k.clone())
        .unwrap_or_default();
    let mut exceptional = 0;
    let points = vectors
        .into_iter()
        .zip(groups)
        .map(|(a, observed)| {
            let ranks: Vec<usize> = observed.iter().map(|h| h.rank).collect();
            let is_exceptional = ranks != generic;
            exceptional += usize::from(is_exceptional);
            ScanPoint {
                params: json!({ "coefficients": a }),
                observed,
                conjectured: vec![],
                verdict: Verdict::Consistent,
                exceptional: Some(is_exceptional),
                pointed_map: None,
                note: None,
            }
        })
        .collect();
    let mut report = ScanReport::new(
        ScanTarget::Hyperplane,
        json!({
            "size": ms.size(),
            "ops": ms.len(),
            "samples": p.samples,
            "range": p.range,
            "seed": p.seed,
            "maxdeg": p.maxdeg,
            "augmented": p.augmented,
        }),
        points,
    );
    report.exceptional_fraction = Some(exceptional as f64 / p.samples as f64);
    report.generic_ranks = Some(generic);
    Ok(report)
}

/// Every class on `n` elements whose shelf homology through `maxdeg` has
/// torsion.
pub fn torsion_hunt(n: usize, maxdeg: usize, cap: u128) -> Result<ScanReport> {
    check_sizes(&[n])?;
    let classes = class_shelves(&[n])?;
    let found = par_map(&classes, |(n, key)| -> Result<Option<ScanPoint>> {
        let shelf = Shelf::new_unchecked(key.table().clone());
        let observed = shelf_groups(&shelf, maxdeg, cap)?;
        if observed.iter().all(|g| g.torsion.is_empty()) {
            return Ok(None);
        }
        let orbits = left_orbits(&shelf).count();
        Ok(Some(ScanPoint {
            params: class_params(*n, key, orbits),
            observed,
            conjectured: vec![],
            verdict: Verdict::Consistent,
            exceptional: None,
            pointed_map: Some(is_pointed_map_type(key.table())),
            note: None,
        }))
    });
    let mut points = Vec::new();
    for f in found {
        points.extend(f?);
    }
    Ok(ScanReport::new(
        ScanTarget::Torsion,
        json!({ "size": n, "maxdeg": maxdeg, "classes": classes.len() }),
        points,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_sizes() {
        assert_eq!(catalog(1).unwrap().len(), 1);
        let two = catalog(2).unwrap();
        assert_eq!(two.len(), 6);
        assert!(two.windows(2).all(|w| w[0].key < w[1].key));
        assert!(catalog(6).is_err());
    }

    #[test]
    fn boolean_formula_cases() {
        assert_eq!(boolean_rank(1, [0, 0, 0], 1), 4);
        assert_eq!(boolean_rank(1, [0, 0, 0], 0), 1);
        assert_eq!(boolean_rank(2, [2, -2, -2], 3), 16);
        assert_eq!(boolean_rank(2, [-1, 1, 1], 0), 2);
        assert_eq!(boolean_rank(1, [1, -1, 0], 2), 1);
        assert_eq!(boolean_rank(1, [1, 1, 1], 2), 0);
    }

    #[test]
    fn example4_formula() {
        assert_eq!(example4_rank(4, 2, 1), Some(2));
        assert_eq!(example4_rank(4, 3, 2), Some(28));
        assert_eq!(example4_rank(4, 2, 0), None);
    }

    #[test]
    fn growth_on_small_sizes() {
        let r = scan_growth(&[1, 2], 3, DEFAULT_BASIS_CAP).unwrap();
        assert_eq!(r.points.len(), 7);
        assert_eq!(r.summary.inconsistent, 0);
    }

    #[test]
    fn torsion_hunt_on_one_and_two() {
        assert!(torsion_hunt(1, 2, DEFAULT_BASIS_CAP).unwrap().points.is_empty());
        assert!(torsion_hunt(2, 2, DEFAULT_BASIS_CAP).unwrap().points.is_empty());
    }

    #[test]
    fn hyperplane_is_seeded() {
        let ms = construct_family(&FamilySpec::BooleanMultiShelf { omega: 1 })
            .unwrap()
            .into_multishelf();
        let p = HyperplaneParams {
            samples: 20,
            maxdeg: 2,
            ..Default::default()
        };
        let a = scan_hyperplane(&ms, &p).unwrap();
        let b = scan_hyperplane(&ms, &p).unwrap();
        assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
        assert!(a.generic_ranks.is_some());
    }
}
