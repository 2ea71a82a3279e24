//! Resonance graph over sign-classes and its connected components.
//!
//! Nodes are classes `{n, -n}`: `sigma` is odd, so a triad and its negation
//! describe the same interaction. Every triad joins its three members'
//! classes. Components are ordered by their ascending lists of distinct
//! squared norms, compared lexicographically.
//!
//! Components computed from a finite box can split clusters that are only
//! connected through triads outside the box.

mod union_find;

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact_core::{ResonantTriad, Wavenumber};
use union_find::UnionFind;

type Point = Wavenumber<i64>;
type Triad = ResonantTriad<i64>;

pub const TRUNCATION_DISCLAIMER: &str = "components are computed from triads with at least one member \
inside the enumeration box; clusters connected only through triads outside the box appear split, and \
no component is claimed to be finite";

/// The class `{n, -n}`, represented by the member with positive zonal part.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Point", into = "Point")]
pub struct SignClass(Point);

impl SignClass {
    pub fn of(n: &Point) -> Result<Self> {
        match n.n1.cmp(&0) {
            Ordering::Greater => Ok(Self(n.clone())),
            Ordering::Less => Ok(Self(n.neg())),
            Ordering::Equal => Err(Error::ZeroZonal(n.to_string())),
        }
    }

    pub fn rep(&self) -> &Point {
        &self.0
    }

    fn norm2(&self) -> i64 {
        self.0.n1 * self.0.n1 + self.0.n2 * self.0.n2
    }
}

impl TryFrom<Point> for SignClass {
    type Error = Error;

    fn try_from(p: Point) -> Result<Self> {
        Self::of(&p)
    }
}

impl From<SignClass> for Point {
    fn from(c: SignClass) -> Self {
        c.0
    }
}

impl std::fmt::Display for SignClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cluster {
    members: Vec<SignClass>,
    triads: Vec<Triad>,
    lambda_seq: Vec<i64>,
}

impl Cluster {
    pub fn new(members: impl IntoIterator<Item = SignClass>, triads: impl IntoIterator<Item = Triad>) -> Self {
        let members: BTreeSet<SignClass> = members.into_iter().collect();
        let triads: BTreeSet<Triad> = triads.into_iter().collect();
        let lambda_seq: BTreeSet<i64> = members.iter().map(SignClass::norm2).collect();
        Self {
            members: members.into_iter().collect(),
            triads: triads.into_iter().collect(),
            lambda_seq: lambda_seq.into_iter().collect(),
        }
    }

    /// Sorted canonical representatives.
    pub fn members(&self) -> &[SignClass] {
        &self.members
    }

    pub fn triads(&self) -> &[Triad] {
        &self.triads
    }

    /// Distinct squared norms of the members, ascending.
    pub fn lambda_seq(&self) -> &[i64] {
        &self.lambda_seq
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, n: &Point) -> bool {
        SignClass::of(n).is_ok_and(|c| self.members.binary_search(&c).is_ok())
    }

    fn order_key(&self, other: &Self) -> Ordering {
        self.lambda_seq
            .cmp(&other.lambda_seq)
            .then_with(|| self.members.first().cmp(&other.members.first()))
            .then_with(|| self.members.cmp(&other.members))
    }
}

/// Connected components of the triad graph, ordered by [`order_clusters`].
pub fn build_components(triads: &[Triad]) -> Result<Vec<Cluster>> {
    let mut index: BTreeMap<SignClass, usize> = BTreeMap::new();
    let mut edges = Vec::with_capacity(triads.len());
    for t in triads {
        let [a, b, c] = t.members().clone();
        ResonantTriad::from_members(a, b, c)?;
        let ids: Vec<usize> = t
            .members()
            .iter()
            .map(|m| {
                let class = SignClass::of(m)?;
                let next = index.len();
                Ok(*index.entry(class).or_insert(next))
            })
            .collect::<Result<_>>()?;
        edges.push(ids);
    }

    let mut uf = UnionFind::new(index.len());
    for ids in &edges {
        uf.union(ids[0], ids[1]);
        uf.union(ids[0], ids[2]);
    }

    let mut members: BTreeMap<usize, Vec<SignClass>> = BTreeMap::new();
    for (class, id) in &index {
        members.entry(uf.find(*id)).or_default().push(class.clone());
    }
    let mut induced: BTreeMap<usize, Vec<Triad>> = BTreeMap::new();
    for (t, ids) in triads.iter().zip(&edges) {
        induced.entry(uf.find(ids[0])).or_default().push(t.clone());
    }
    let clusters = members
        .into_iter()
        .map(|(root, ms)| Cluster::new(ms, induced.remove(&root).unwrap_or_default()))
        .collect();
    Ok(order_clusters(clusters))
}

/// Sorts by `lambda_seq`; ties go to the smallest canonical member.
pub fn order_clusters(mut clusters: Vec<Cluster>) -> Vec<Cluster> {
    clusters.sort_by(Cluster::order_key);
    clusters
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ScalingFlag {
    ScalingFamilyDetected,
    NoScalingDetected,
}

/// Heuristic witness of an infinite cluster: some member is an integer
/// multiple (factor >= 2) of another.
pub fn flag_scaling(c: &Cluster) -> ScalingFlag {
    let ms = c.members();
    let found = ms.iter().any(|a| ms.iter().any(|b| a.rep().is_multiple_of(b.rep())));
    if found {
        ScalingFlag::ScalingFamilyDetected
    } else {
        ScalingFlag::NoScalingDetected
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClusterHeader {
    pub max_norm: i64,
    pub quadrant: bool,
    pub disclaimer: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClusterEntry {
    pub members: Vec<SignClass>,
    pub lambda_seq: Vec<i64>,
    pub triads: Vec<Triad>,
    pub scaling_flag: ScalingFlag,
}

/// Serializable cluster listing for one enumeration box.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClusterReport {
    pub header: ClusterHeader,
    pub clusters: Vec<ClusterEntry>,
}

impl ClusterReport {
    pub fn new(max_norm: i64, clusters: &[Cluster]) -> Self {
        Self {
            header: ClusterHeader {
                max_norm,
                quadrant: true,
                disclaimer: TRUNCATION_DISCLAIMER.to_owned(),
            },
            clusters: clusters
                .iter()
                .map(|c| ClusterEntry {
                    members: c.members.clone(),
                    lambda_seq: c.lambda_seq.clone(),
                    triads: c.triads.clone(),
                    scaling_flag: flag_scaling(c),
                })
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(a: i64, b: i64) -> Point {
        Wavenumber::new(a, b)
    }

    fn triad(a: (i64, i64), b: (i64, i64), c: (i64, i64)) -> Triad {
        ResonantTriad::from_members(w(a.0, a.1), w(b.0, b.1), w(c.0, c.1)).unwrap()
    }

    fn classes(c: &Cluster) -> Vec<Point> {
        c.members().iter().map(|m| m.rep().clone()).collect()
    }

    fn omega1_finite() -> Vec<Triad> {
        vec![triad((1, 11), (8, -34), (-9, 23))]
    }

    fn omega2_finite() -> Vec<Triad> {
        vec![
            triad((3, 19), (32, -44), (-35, 25)),
            triad((8, 26), (27, -51), (-35, 25)),
        ]
    }

    #[test]
    fn sign_class_rep() {
        assert_eq!(SignClass::of(&w(-9, 23)).unwrap().rep(), &w(9, -23));
        assert_eq!(SignClass::of(&w(9, -23)).unwrap(), SignClass::of(&w(-9, 23)).unwrap());
        assert!(SignClass::of(&w(0, 3)).is_err());
    }

    #[test]
    fn listed_finite_clusters_split_into_two() {
        let mut ts = omega2_finite();
        ts.extend(omega1_finite());
        let cs = build_components(&ts).unwrap();
        assert_eq!(cs.iter().map(Cluster::len).collect::<Vec<_>>(), vec![3, 5]);
        assert_eq!(classes(&cs[0]), vec![w(1, 11), w(8, -34), w(9, -23)]);
        assert_eq!(cs[0].lambda_seq(), &[122, 610, 1220]);
        assert_eq!(cs[1].lambda_seq()[0], 370);
        assert_eq!(
            classes(&cs[1]),
            vec![w(3, 19), w(8, 26), w(27, -51), w(32, -44), w(35, -25)]
        );
        assert_eq!(cs[1].triads().len(), 2);
    }

    #[test]
    fn single_triad_component() {
        let cs = build_components(&[triad((1, -8), (15, 10), (-16, -2))]).unwrap();
        assert_eq!(cs.len(), 1);
        assert_eq!(cs[0].len(), 3);
    }

    #[test]
    fn empty_input() {
        assert!(build_components(&[]).unwrap().is_empty());
    }

    #[test]
    fn order_by_lambda_then_member() {
        let c1 = build_components(&omega1_finite()).unwrap().remove(0);
        let c2 = build_components(&omega2_finite()).unwrap().remove(0);
        assert_eq!(order_clusters(vec![c2.clone(), c1.clone()]), vec![c1.clone(), c2]);

        let mirror: Vec<Triad> = omega1_finite().iter().map(Triad::mirror_meridional).collect();
        let m = build_components(&mirror).unwrap().remove(0);
        assert_eq!(m.lambda_seq(), c1.lambda_seq());
        // (1,-11) < (1,11), so the mirror image sorts first.
        assert_eq!(order_clusters(vec![c1.clone(), m.clone()]), vec![m, c1.clone()]);
        assert_eq!(order_clusters(vec![c1.clone()]), vec![c1]);
    }

    #[test]
    fn scaling_flag() {
        let with_multiple = Cluster::new(
            [SignClass::of(&w(16, 2)).unwrap(), SignClass::of(&w(-32, -4)).unwrap()],
            [],
        );
        assert_eq!(flag_scaling(&with_multiple), ScalingFlag::ScalingFamilyDetected);
        let c1 = build_components(&omega1_finite()).unwrap().remove(0);
        assert_eq!(flag_scaling(&c1), ScalingFlag::NoScalingDetected);
        assert_eq!(flag_scaling(&Cluster::new([], [])), ScalingFlag::NoScalingDetected);
    }

    #[test]
    fn rebuilding_from_component_triads_is_idempotent() {
        let mut ts = omega2_finite();
        ts.extend(omega1_finite());
        ts.push(triad((1, -8), (15, 10), (-16, -2)));
        let cs = build_components(&ts).unwrap();
        let all: Vec<Triad> = cs.iter().flat_map(|c| c.triads().to_vec()).collect();
        assert_eq!(build_components(&all).unwrap(), cs);
    }

    #[test]
    fn report_json_shape() {
        let cs = build_components(&omega1_finite()).unwrap();
        let json = serde_json::to_value(ClusterReport::new(60, &cs)).unwrap();
        assert_eq!(json["header"]["max_norm"], 60);
        assert_eq!(
            json["clusters"][0]["members"],
            serde_json::json!([[1, 11], [8, -34], [9, -23]])
        );
        assert_eq!(json["clusters"][0]["scaling_flag"], "no-scaling-detected");
        let back: ClusterReport = serde_json::from_value(json).unwrap();
        assert_eq!(back.clusters.len(), 1);
    }
}
