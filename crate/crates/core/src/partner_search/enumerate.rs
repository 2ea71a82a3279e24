use std::collections::{BTreeMap, BTreeSet};
use std::path::PathBuf;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use super::find_partners;
use super::jsonl::Cache;
use crate::error::{Error, Result};
use crate::exact_core::{canonical_triad, ResonantTriad, Wavenumber};

type Point = Wavenumber<i64>;
type Triad = ResonantTriad<i64>;

#[derive(Debug, Clone)]
pub struct EnumerateOptions {
    /// Worker threads; results do not depend on it.
    pub jobs: usize,
    /// Append-only per-point result cache, reused on resume.
    pub cache: Option<PathBuf>,
    /// Points searched between cache flushes.
    pub batch_size: usize,
}

impl Default for EnumerateOptions {
    fn default() -> Self {
        Self {
            jobs: 1,
            cache: None,
            batch_size: 64,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct EnumerationStats {
    pub quadrant_points: usize,
    pub cached_points: usize,
    pub searched_points: usize,
    pub resonant_points: usize,
    pub search_time: Duration,
    pub merge_time: Duration,
}

/// Members of the resonance set inside `|n| <= max_norm`, with every triad
/// that has at least one member in that box.
///
/// `triads` maps each canonical triad to the lexicographically smallest box
/// point it was derived from. Other legs of a triad may lie outside the box.
#[derive(Debug, Clone, Default)]
pub struct EnumerationReport {
    pub max_norm: i64,
    pub triads: BTreeMap<Triad, Point>,
    pub lambda_members: BTreeSet<Point>,
    pub stats: EnumerationStats,
}

impl EnumerationReport {
    /// Rebuilds the report from its triads; box members are read off the
    /// triads, since every member of a resonant triad lies in the set.
    pub fn from_triads(max_norm: i64, triads: BTreeMap<Triad, Point>) -> Self {
        let lambda_members = triads
            .keys()
            .flat_map(|t| t.members().iter().flat_map(|m| [m.clone(), m.neg()]))
            .filter(|m| in_box(m, max_norm))
            .collect();
        Self {
            max_norm,
            triads,
            lambda_members,
            stats: EnumerationStats::default(),
        }
    }

    pub fn triad_list(&self) -> Vec<Triad> {
        self.triads.keys().cloned().collect()
    }
}

pub(crate) fn in_box(n: &Point, max_norm: i64) -> bool {
    let m = max_norm as i128;
    (n.n1 as i128).pow(2) + (n.n2 as i128).pow(2) <= m * m
}

/// Points with `n1 >= 1`, `n2 >= 0` and `|n| <= max_norm`, sorted.
pub fn quadrant_points(max_norm: i64) -> Vec<Point> {
    let mut out = Vec::new();
    for n1 in 1..=max_norm {
        for n2 in 0..=max_norm {
            let p = Wavenumber::new(n1, n2);
            if !in_box(&p, max_norm) {
                break;
            }
            out.push(p);
        }
    }
    out
}

/// Canonical triads through a single point, deduplicated and sorted.
pub(crate) fn triads_through(n: &Point) -> Result<Vec<Triad>> {
    let mut set = BTreeSet::new();
    for k in find_partners(n)? {
        set.insert(canonical_triad(n, &k)?);
    }
    Ok(set.into_iter().collect())
}

pub fn enumerate_lambda(max_norm: i64) -> Result<EnumerationReport> {
    enumerate_lambda_with(max_norm, &EnumerateOptions::default())
}

/// Searches the canonical quadrant, then expands by the lattice symmetries.
///
/// Negation fixes every canonical triad and the zonal mirror is negation
/// composed with the meridional mirror, so expanding by the meridional
/// mirror alone covers all four maps.
pub fn enumerate_lambda_with(max_norm: i64, opts: &EnumerateOptions) -> Result<EnumerationReport> {
    if max_norm < 1 {
        return Err(Error::InvalidArgument(format!("max_norm must be >= 1, got {max_norm}")));
    }
    if opts.jobs < 1 {
        return Err(Error::InvalidArgument("jobs must be >= 1".into()));
    }
    let points = quadrant_points(max_norm);
    let mut stats = EnumerationStats {
        quadrant_points: points.len(),
        ..Default::default()
    };

    let mut cache = opts.cache.as_ref().map(|p| Cache::open(p, max_norm)).transpose()?;
    let mut per_point: BTreeMap<Point, Vec<Triad>> = BTreeMap::new();
    let mut pending = Vec::new();
    for p in points {
        match cache.as_ref().and_then(|c| c.lookup(&p)) {
            Some(ts) => {
                per_point.insert(p, ts.to_vec());
                stats.cached_points += 1;
            }
            None => pending.push(p),
        }
    }
    stats.searched_points = pending.len();

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.jobs)
        .build()
        .map_err(|e| Error::InvalidArgument(e.to_string()))?;
    let started = Instant::now();
    for batch in pending.chunks(opts.batch_size.max(1)) {
        let results: Vec<(Point, Vec<Triad>)> = pool.install(|| {
            batch
                .par_iter()
                .map(|p| triads_through(p).map(|ts| (p.clone(), ts)))
                .collect::<Result<_>>()
        })?;
        if let Some(cache) = cache.as_mut() {
            for (p, ts) in &results {
                cache.append(p, ts)?;
            }
            cache.flush()?;
        }
        per_point.extend(results);
    }
    stats.search_time = started.elapsed();

    let started = Instant::now();
    let mut triads: BTreeMap<Triad, Point> = BTreeMap::new();
    let mut keep_min = |t: Triad, src: Point| {
        triads
            .entry(t)
            .and_modify(|s| {
                if src < *s {
                    *s = src.clone();
                }
            })
            .or_insert(src);
    };
    for (p, ts) in &per_point {
        if !ts.is_empty() {
            stats.resonant_points += 1;
        }
        for t in ts {
            keep_min(t.clone(), p.clone());
            keep_min(t.mirror_meridional(), p.mirror_meridional());
        }
    }
    let mut report = EnumerationReport::from_triads(max_norm, triads);
    stats.merge_time = started.elapsed();
    report.stats = stats;
    Ok(report)
}
