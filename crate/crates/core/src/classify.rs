//! Structural prediction of "exactly one positive ε-eigenvalue" from the
//! mixed-extension-of-a-star shape, and the exact ground truth it is
//! compared against.
//!
//! A connected graph is read as a star extension by taking every universal
//! vertex as the centre clique. Using a proper subset would be pointless:
//! a universal vertex in a leaf class would need a non-neighbour there.
//! The components of the remainder must be cliques; singleton components
//! can be grouped into one coclique leaf in several ways, so a graph has
//! several admissible typings and is predicted positive when any typing
//! meets any clause.
//!
//! Clause readings:
//!
//! * [`ClauseReading::Literal`]: bounded-centre clauses with the tuple
//!   lengths as stated, `(4,r2,r3,r4)`, `(3,r2,..,r5)`, `(4,-r2,r3,r4,r5)`,
//!   `(3,-r2,r3,..,r6)`.
//! * [`ClauseReading::ProofCases`]: the same clauses with `k` taken from the
//!   case analysis, `(4,r2,r3)`, `(3,r2,r3,r4)`, `(4,-r2,r3,r4)`,
//!   `(3,-r2,r3,r4,r5)`.
//! * [`ClauseReading::Reconciled`]: the literal reading without the
//!   bounded-centre coclique clauses (`r1` of 3 or 4 with `k >= 4`). For a
//!   typing with centre `r1` and `m` leaf vertices-or-cliques the exact
//!   criterion is `(r1 - 2)(m - 2) <= 2`, which those clauses violate from
//!   eight vertices on.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::ecc::eccentricity_matrix;
use crate::enumeration::to_graph6;
use crate::error::{Error, Result};
use crate::exact::Inertia;
use crate::families::MixedExtensionType;
use crate::graph::Graph;

/// Universal-vertex centre and the clique components left after removing it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StarDecomposition {
    pub center: Vec<usize>,
    /// Component sizes of the graph minus the centre, ascending.
    pub leaf_cliques: Vec<usize>,
    pub singleton_count: usize,
}

impl StarDecomposition {
    pub fn r1(&self) -> usize {
        self.center.len()
    }

    /// Number of leaf components, singletons counted individually.
    pub fn component_count(&self) -> usize {
        self.leaf_cliques.len()
    }

    pub fn is_complete(&self) -> bool {
        self.leaf_cliques.is_empty()
    }
}

/// `Ok(None)` when there is no universal vertex or some component of the
/// remainder is not a clique.
pub fn decompose_as_star_extension(g: &Graph) -> Result<Option<StarDecomposition>> {
    if !g.is_connected() {
        return Err(Error::DisconnectedGraph);
    }
    let center = g.universal_vertices();
    if center.is_empty() {
        return Ok(None);
    }
    let rest: Vec<usize> = (0..g.n()).filter(|v| !center.contains(v)).collect();
    let h = g.induced(&rest);
    let mut leaf_cliques = Vec::new();
    for comp in h.components() {
        if !h.is_clique(&comp) {
            return Ok(None);
        }
        leaf_cliques.push(comp.len());
    }
    leaf_cliques.sort_unstable();
    let singleton_count = leaf_cliques.iter().filter(|&&s| s == 1).count();
    Ok(Some(StarDecomposition { center, leaf_cliques, singleton_count }))
}

/// Every typing of the decomposition: `t` singletons (none, or 2 up to all)
/// form a coclique leaf, the remaining singletons stay `+1` classes, and
/// larger components are clique leaves. Largest coclique first.
pub fn admissible_typings(d: &StarDecomposition) -> Vec<MixedExtensionType> {
    let r1 = d.r1() as i64;
    let s = d.singleton_count;
    let cliques: Vec<i64> = d.leaf_cliques.iter().filter(|&&c| c > 1).map(|&c| c as i64).collect();
    let coclique_sizes = (2..=s).rev().chain(std::iter::once(0));
    coclique_sizes
        .map(|t| {
            let mut classes = vec![r1];
            if t > 0 {
                classes.push(-(t as i64));
            }
            classes.extend(std::iter::repeat_n(1, s - t));
            classes.extend(&cliques);
            MixedExtensionType::new(classes).expect("class sizes are nonzero")
        })
        .collect()
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClauseReading {
    #[default]
    Literal,
    ProofCases,
    Reconciled,
}

impl ClauseReading {
    pub const ALL: [ClauseReading; 3] = [ClauseReading::Literal, ClauseReading::ProofCases, ClauseReading::Reconciled];

    pub fn name(self) -> &'static str {
        match self {
            ClauseReading::Literal => "literal",
            ClauseReading::ProofCases => "proof-cases",
            ClauseReading::Reconciled => "reconciled",
        }
    }
}

impl fmt::Display for ClauseReading {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ClauseReading {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        ClauseReading::ALL
            .into_iter()
            .find(|r| r.name() == s)
            .ok_or_else(|| Error::InvalidParameters(format!("unknown reading {s:?}; expected literal, proof-cases or reconciled")))
    }
}

/// One clause of the characterization. `k` counts classes, centre included.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Clause {
    /// Complete graph on at least two vertices.
    Complete,
    /// `k = 2`, centre `c`, coclique leaf `t`: `t = 2`, `c = 2`, or
    /// `(t, c)` in `{(3,4), (4,3), (3,3)}`.
    TwoClassCoclique,
    /// `k = 3`, all classes cliques.
    ThreeClassClique,
    /// `k = 3`, `(r1, -r2, r3)` with `r1 <= 2`, or `(r1, r2)` in
    /// `{(3,2), (4,2), (3,3)}`.
    ThreeClassCoclique,
    /// `k >= 4`, centre 1, all leaves cliques.
    UnitCenterClique,
    /// `k >= 4`, centre 1, one coclique leaf.
    UnitCenterCoclique,
    /// `k >= 4`, centre 2, all leaves cliques.
    PairCenterClique,
    /// `k >= 4`, centre 2, one coclique leaf.
    PairCenterCoclique,
    /// Centre 3 or 4, all leaves cliques, length fixed by the reading.
    BoundedCenterClique,
    /// Centre 3 or 4, one coclique leaf, length fixed by the reading.
    BoundedCenterCoclique,
    /// All leaves cliques: `r1 <= 2` and `k >= 2`, or `r1` in `{3, 4}` and `k <= 4`.
    CliqueLeafBounds,
    /// One coclique leaf: `r1 <= 2` and `k >= 2`, `r1 = 3` and `k <= 6`, or
    /// `r1 = 4` and `k <= 5` (the last two dropped when reconciled).
    CocliqueLeafBounds,
}

impl Clause {
    pub fn label(self) -> &'static str {
        match self {
            Clause::Complete => "complete",
            Clause::TwoClassCoclique => "two-class coclique",
            Clause::ThreeClassClique => "three-class clique",
            Clause::ThreeClassCoclique => "three-class coclique",
            Clause::UnitCenterClique => "unit-centre clique",
            Clause::UnitCenterCoclique => "unit-centre coclique",
            Clause::PairCenterClique => "pair-centre clique",
            Clause::PairCenterCoclique => "pair-centre coclique",
            Clause::BoundedCenterClique => "bounded-centre clique",
            Clause::BoundedCenterCoclique => "bounded-centre coclique",
            Clause::CliqueLeafBounds => "clique-leaf k-bounds",
            Clause::CocliqueLeafBounds => "coclique-leaf k-bounds",
        }
    }
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Clauses met by one typing with a positive centre and at most one
/// coclique leaf, placed first among the leaves.
pub fn matched_clauses(t: &MixedExtensionType, reading: ClauseReading) -> Vec<Clause> {
    let r1 = t.center();
    let k = t.k();
    let leaves = t.leaves();
    let mut out = Vec::new();
    if r1 <= 0 || leaves[1.min(leaves.len())..].iter().any(|&r| r < 0) {
        return out;
    }
    if leaves.is_empty() {
        if r1 >= 2 {
            out.push(Clause::Complete);
        }
        return out;
    }
    let coclique = leaves.first().filter(|&&r| r < 0).map(|r| -r);
    match coclique {
        None => {
            if k == 3 {
                out.push(Clause::ThreeClassClique);
            }
            if k >= 4 && r1 == 1 {
                out.push(Clause::UnitCenterClique);
            }
            if k >= 4 && r1 == 2 {
                out.push(Clause::PairCenterClique);
            }
            let (k4, k3) = match reading {
                ClauseReading::ProofCases => (3, 4),
                _ => (4, 5),
            };
            if (r1 == 4 && k == k4) || (r1 == 3 && k == k3) {
                out.push(Clause::BoundedCenterClique);
            }
            if (r1 <= 2 && k >= 2) || ((r1 == 3 || r1 == 4) && k <= 4) {
                out.push(Clause::CliqueLeafBounds);
            }
        }
        Some(r2) => {
            if k == 2 {
                let (tt, c) = (r2, r1);
                if tt == 2 || c == 2 || matches!((tt, c), (3, 4) | (4, 3) | (3, 3)) {
                    out.push(Clause::TwoClassCoclique);
                }
            }
            if k == 3 && ((r2 >= 2 && r1 <= 2) || matches!((r1, r2), (3, 2) | (4, 2) | (3, 3))) {
                out.push(Clause::ThreeClassCoclique);
            }
            if k >= 4 && r1 == 1 {
                out.push(Clause::UnitCenterCoclique);
            }
            if k >= 4 && r1 == 2 {
                out.push(Clause::PairCenterCoclique);
            }
            let bounded = match reading {
                ClauseReading::Literal => (r1 == 4 && k == 5) || (r1 == 3 && k == 6),
                ClauseReading::ProofCases => (r1 == 4 && k == 4) || (r1 == 3 && k == 5),
                ClauseReading::Reconciled => false,
            };
            if bounded {
                out.push(Clause::BoundedCenterCoclique);
            }
            let bounds = match reading {
                ClauseReading::Reconciled => r1 <= 2 && k >= 2,
                _ => (r1 <= 2 && k >= 2) || (r1 == 3 && k <= 6) || (r1 == 4 && k <= 5),
            };
            if bounds {
                out.push(Clause::CocliqueLeafBounds);
            }
        }
    }
    out
}

/// Typings of `g` with the clauses each one meets.
pub fn typing_matches(g: &Graph, reading: ClauseReading) -> Result<Vec<(MixedExtensionType, Vec<Clause>)>> {
    Ok(match decompose_as_star_extension(g)? {
        None => Vec::new(),
        Some(d) => admissible_typings(&d)
            .into_iter()
            .map(|t| {
                let c = matched_clauses(&t, reading);
                (t, c)
            })
            .collect(),
    })
}

pub fn predicted_one_positive(g: &Graph) -> Result<bool> {
    predicted_one_positive_with(g, ClauseReading::default())
}

pub fn predicted_one_positive_with(g: &Graph, reading: ClauseReading) -> Result<bool> {
    Ok(typing_matches(g, reading)?.iter().any(|(_, c)| !c.is_empty()))
}

/// Exact inertia of the eccentricity matrix.
pub fn eccentricity_inertia(g: &Graph) -> Result<Inertia> {
    Ok(eccentricity_matrix(g)?.to_int().inertia())
}

pub fn has_exactly_one_positive(g: &Graph) -> Result<bool> {
    Ok(eccentricity_inertia(g)?.plus == 1)
}

/// Prediction next to ground truth for one graph.
#[derive(Debug, Clone, Serialize)]
pub struct Classification {
    pub reading: ClauseReading,
    pub predicted: bool,
    pub ground_truth: bool,
    pub inertia: Inertia,
    pub decomposition: Option<StarDecomposition>,
    pub typings: Vec<TypingMatch>,
}

#[derive(Debug, Clone, Serialize)]
pub struct TypingMatch {
    pub typing: MixedExtensionType,
    pub clauses: Vec<Clause>,
}

pub fn classify(g: &Graph, reading: ClauseReading) -> Result<Classification> {
    let decomposition = decompose_as_star_extension(g)?;
    let typings: Vec<TypingMatch> = typing_matches(g, reading)?
        .into_iter()
        .map(|(typing, clauses)| TypingMatch { typing, clauses })
        .collect();
    let inertia = eccentricity_inertia(g)?;
    Ok(Classification {
        reading,
        predicted: typings.iter().any(|t| !t.clauses.is_empty()),
        ground_truth: inertia.plus == 1,
        inertia,
        decomposition,
        typings,
    })
}

/// A graph on which prediction and ground truth disagree.
#[derive(Debug, Clone, Serialize)]
pub struct Finding {
    pub graph6: String,
    pub n: usize,
    pub inertia: Inertia,
    pub predicted: bool,
    pub decomposition: Option<StarDecomposition>,
    pub typings: Vec<MixedExtensionType>,
}

impl Finding {
    pub fn from_classification(g: &Graph, c: &Classification) -> Result<Finding> {
        Ok(Finding {
            graph6: to_graph6(g)?,
            n: g.n(),
            inertia: c.inertia,
            predicted: c.predicted,
            decomposition: c.decomposition.clone(),
            typings: c.typings.iter().map(|t| t.typing.clone()).collect(),
        })
    }
}

/// `Some(finding)` when prediction and ground truth disagree.
pub fn check_graph(g: &Graph, reading: ClauseReading) -> Result<Option<Finding>> {
    let c = classify(g, reading)?;
    if c.predicted == c.ground_truth {
        Ok(None)
    } else {
        Finding::from_classification(g, &c).map(Some)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{mixed_extension_star, Family};

    fn ty(s: &str) -> MixedExtensionType {
        s.parse().unwrap()
    }

    fn family(s: &str) -> Graph {
        s.parse::<Family>().unwrap().build().unwrap()
    }

    #[test]
    fn decompositions() {
        let d = decompose_as_star_extension(&family("star:4")).unwrap().unwrap();
        assert_eq!((d.r1(), d.leaf_cliques.clone(), d.singleton_count), (1, vec![1, 1, 1], 3));
        let d = decompose_as_star_extension(&family("pineapple:4,2")).unwrap().unwrap();
        assert_eq!((d.r1(), d.leaf_cliques.clone(), d.singleton_count), (1, vec![1, 1, 3], 2));
        assert_eq!(decompose_as_star_extension(&Graph::cycle(5)).unwrap(), None);
        let disconnected = Graph::empty(2);
        assert!(matches!(decompose_as_star_extension(&disconnected), Err(Error::DisconnectedGraph)));
    }

    #[test]
    fn typings() {
        let d = decompose_as_star_extension(&family("star:5")).unwrap().unwrap();
        let got: Vec<String> = admissible_typings(&d).iter().map(ToString::to_string).collect();
        assert_eq!(got, ["(1,-4)", "(1,-3,1)", "(1,-2,1,1)", "(1,1,1,1,1)"]);
        let d = decompose_as_star_extension(&family("pineapple:4,2")).unwrap().unwrap();
        let got: Vec<String> = admissible_typings(&d).iter().map(ToString::to_string).collect();
        assert_eq!(got, ["(1,-2,3)", "(1,1,1,3)"]);
        let d = decompose_as_star_extension(&Graph::complete(4)).unwrap().unwrap();
        let got: Vec<String> = admissible_typings(&d).iter().map(ToString::to_string).collect();
        assert_eq!(got, ["(4)"]);
    }

    #[test]
    fn typings_rebuild_the_graph() {
        for spec in ["pineapple:4,2", "cs:7,3", "kite:4,1", "windmill:3,3", "star:6"] {
            let g = family(spec);
            let d = decompose_as_star_extension(&g).unwrap().unwrap();
            for t in admissible_typings(&d) {
                let h = mixed_extension_star(&t);
                assert!(crate::families::are_isomorphic(&g, &h).unwrap(), "{spec} {t}");
            }
        }
    }

    #[test]
    fn spot_predictions() {
        assert!(predicted_one_positive(&family("star:6")).unwrap());
        assert!(!predicted_one_positive(&Graph::cycle(4)).unwrap());
        assert!(predicted_one_positive(&family("cs:7,3")).unwrap());
        assert!(predicted_one_positive(&Graph::complete(8)).unwrap());
        assert!(!predicted_one_positive(&Graph::path(4)).unwrap());
        assert!(!predicted_one_positive(&Graph::complete(1)).unwrap());
    }

    #[test]
    fn ground_truth_examples() {
        assert!(has_exactly_one_positive(&Graph::complete(2)).unwrap());
        assert!(!has_exactly_one_positive(&Graph::path(4)).unwrap());
        assert_eq!(eccentricity_inertia(&Graph::path(4)).unwrap(), Inertia::new(2, 0, 2));
        assert!(has_exactly_one_positive(&family("windmill:3,3")).unwrap());
        assert!(!has_exactly_one_positive(&Graph::complete(1)).unwrap());
    }

    #[test]
    fn clause_readings_differ_where_expected() {
        let t = ty("(4,1,1,1)");
        assert!(matched_clauses(&t, ClauseReading::Literal).contains(&Clause::BoundedCenterClique));
        assert!(!matched_clauses(&t, ClauseReading::ProofCases).contains(&Clause::BoundedCenterClique));
        let t = ty("(3,-2,1,1,1)");
        assert!(!matched_clauses(&t, ClauseReading::Literal).is_empty());
        assert!(matched_clauses(&t, ClauseReading::Reconciled).is_empty());
        assert!(!has_exactly_one_positive(&mixed_extension_star(&t)).unwrap());
    }

    #[test]
    fn reconciled_matches_the_product_criterion() {
        // (r1 - 2)(m - 2) <= 2 with m leaf components; checked on typings
        // whose graphs stay small enough for exact inertia.
        for r1 in 1..=6i64 {
            for k in 2..=6usize {
                for t in [0i64, 2, 3] {
                    let mut classes = vec![r1];
                    if t > 0 {
                        classes.push(-t);
                    }
                    while classes.len() < k {
                        classes.push(1);
                    }
                    if classes.len() > k {
                        continue;
                    }
                    let typ = MixedExtensionType::new(classes).unwrap();
                    let g = mixed_extension_star(&typ);
                    let truth = has_exactly_one_positive(&g).unwrap();
                    let pred = predicted_one_positive_with(&g, ClauseReading::Reconciled).unwrap();
                    assert_eq!(pred, truth, "{typ}");
                }
            }
        }
    }

    #[test]
    fn findings_serialize() {
        let g = mixed_extension_star(&ty("(3,-2,1,1,1)"));
        let f = check_graph(&g, ClauseReading::Literal).unwrap().expect("literal reading mispredicts");
        let v = serde_json::to_value(&f).unwrap();
        assert_eq!(v["n"], 8);
        assert_eq!(v["predicted"], true);
        assert!(v["graph6"].is_string());
        assert!(check_graph(&g, ClauseReading::Reconciled).unwrap().is_none());
    }

    #[test]
    fn reading_names_round_trip() {
        for r in ClauseReading::ALL {
            assert_eq!(r.name().parse::<ClauseReading>().unwrap(), r);
        }
        assert!("other".parse::<ClauseReading>().is_err());
    }
}
