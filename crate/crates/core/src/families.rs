//! Named graph families, mixed extensions of stars, isomorphism testing,
//! and closed-form characteristic polynomials for two- and three-class
//! mixed extensions.
//!
//! Vertex orderings are fixed so that eccentricity matrices are
//! reproducible:
//!
//! | family | ordering |
//! |--------|----------|
//! | `complete_split(n, a)` | clique `0..n-a`, then the independent set |
//! | `pineapple(p, q)` | clique `0..p`, pendants `p..p+q` hanging off vertex 0 |
//! | `kite(p, q)` | clique `0..p`, path `p..p+q` with `p` adjacent to vertex 0 |
//! | `windmill(m, l)` | shared vertex 0, then each copy's `m - 1` vertices in turn |
//! | `star(n)` | centre 0, leaves `1..n` |
//! | mixed extension | classes in tuple order, centre class first |

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::exact::IntPolynomial;
use crate::graph::Graph;

/// Signed class sizes of a mixed extension of the star `S_k`. Entry 0 is
/// the centre; `+r` is a clique of order `r`, `-r` a coclique. A class of
/// one vertex is stored as `+1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MixedExtensionType(Vec<i64>);

impl MixedExtensionType {
    pub fn new(mut classes: Vec<i64>) -> Result<Self> {
        if classes.is_empty() {
            return Err(Error::InvalidType("at least one class is required".into()));
        }
        if let Some(i) = classes.iter().position(|&r| r == 0) {
            return Err(Error::InvalidType(format!("class {} has size zero", i + 1)));
        }
        for r in &mut classes {
            if *r == -1 {
                *r = 1;
            }
        }
        Ok(MixedExtensionType(classes))
    }

    pub fn classes(&self) -> &[i64] {
        &self.0
    }

    pub fn center(&self) -> i64 {
        self.0[0]
    }

    pub fn leaves(&self) -> &[i64] {
        &self.0[1..]
    }

    /// Number of classes, i.e. the order of the underlying star.
    pub fn k(&self) -> usize {
        self.0.len()
    }

    pub fn order(&self) -> usize {
        self.0.iter().map(|r| r.unsigned_abs() as usize).sum()
    }

    pub fn has_coclique_leaf(&self) -> bool {
        self.leaves().iter().any(|&r| r < 0)
    }
}

impl fmt::Display for MixedExtensionType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|r| r.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromStr for MixedExtensionType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('(').trim_end_matches(')');
        MixedExtensionType::new(parse_list(body, 0)?)
    }
}

impl serde::Serialize for MixedExtensionType {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

/// Replaces each star vertex by its class; the centre class is joined to
/// every leaf class and leaf classes are mutually non-adjacent.
pub fn mixed_extension_star(t: &MixedExtensionType) -> Graph {
    let mut class_of = Vec::with_capacity(t.order());
    for (i, &r) in t.classes().iter().enumerate() {
        class_of.extend(std::iter::repeat_n(i, r.unsigned_abs() as usize));
    }
    Graph::from_fn(class_of.len(), |u, v| {
        let (cu, cv) = (class_of[u], class_of[v]);
        if cu == cv {
            t.classes()[cu] > 0
        } else {
            cu == 0 || cv == 0
        }
    })
}

/// A named family member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    Complete(usize),
    /// `S_n`: one centre and `n - 1` leaves.
    Star(usize),
    CompleteBipartite(usize, usize),
    CompleteMultipartite(Vec<usize>),
    /// `CS(n, a)`: a clique on `n - a` vertices joined to an independent set of `a`.
    CompleteSplit { n: usize, alpha: usize },
    /// `K_p` with `q` pendant vertices at one clique vertex.
    Pineapple { p: usize, q: usize },
    /// `K_p` with a path on `q` vertices hanging from one clique vertex.
    Kite { p: usize, q: usize },
    /// `l` copies of `K_m` sharing one vertex.
    Windmill { m: usize, l: usize },
    Path(usize),
    Cycle(usize),
    Mixed(MixedExtensionType),
}

fn require(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidParameters(msg()))
    }
}

impl Family {
    pub fn build(&self) -> Result<Graph> {
        match *self {
            Family::Complete(n) => {
                require(n >= 1, || "complete graph needs n >= 1".into())?;
                Ok(Graph::complete(n))
            }
            Family::Star(n) => {
                require(n >= 1, || "star needs n >= 1".into())?;
                Ok(Graph::from_fn(n, |u, _| u == 0))
            }
            Family::CompleteBipartite(a, b) => Family::CompleteMultipartite(vec![a, b]).build(),
            Family::CompleteMultipartite(ref parts) => {
                require(!parts.is_empty() && parts.iter().all(|&p| p >= 1), || {
                    format!("multipartite parts must be positive, got {parts:?}")
                })?;
                let part_of: Vec<usize> =
                    parts.iter().enumerate().flat_map(|(i, &p)| std::iter::repeat_n(i, p)).collect();
                Ok(Graph::from_fn(part_of.len(), |u, v| part_of[u] != part_of[v]))
            }
            Family::CompleteSplit { n, alpha } => {
                require(alpha >= 1 && alpha < n, || format!("complete split needs 1 <= a <= n-1, got ({n}, {alpha})"))?;
                let clique = n - alpha;
                Ok(Graph::from_fn(n, |u, _| u < clique))
            }
            Family::Pineapple { p, q } => {
                require(p >= 1 && q >= 1, || format!("pineapple needs p, q >= 1, got ({p}, {q})"))?;
                Ok(Graph::from_fn(p + q, |u, v| v < p || u == 0))
            }
            Family::Kite { p, q } => {
                require(p >= 1 && q >= 1, || format!("kite needs p, q >= 1, got ({p}, {q})"))?;
                Ok(Graph::from_fn(p + q, |u, v| v < p || (u == 0 && v == p) || (u >= p && v == u + 1)))
            }
            Family::Windmill { m, l } => {
                require(m >= 2 && l >= 1, || format!("windmill needs m >= 2, l >= 1, got ({m}, {l})"))?;
                let copy = |v: usize| (v - 1) / (m - 1);
                Ok(Graph::from_fn(1 + l * (m - 1), |u, v| u == 0 || copy(u) == copy(v)))
            }
            Family::Path(n) => {
                require(n >= 1, || "path needs n >= 1".into())?;
                Ok(Graph::path(n))
            }
            Family::Cycle(n) => {
                require(n >= 3, || "cycle needs n >= 3".into())?;
                Ok(Graph::cycle(n))
            }
            Family::Mixed(ref t) => Ok(mixed_extension_star(t)),
        }
    }
}

pub fn construct_named(family: &Family) -> Result<Graph> {
    family.build()
}

/// Parses a comma-separated integer list; `offset` is the byte position of
/// `s` within the enclosing input, used in error positions.
fn parse_list(s: &str, offset: usize) -> Result<Vec<i64>> {
    let mut out = Vec::new();
    let mut pos = offset;
    for item in s.split(',') {
        let lead = item.len() - item.trim_start().len();
        let tok = item.trim();
        let value = tok.replace('\u{2212}', "-").parse::<i64>().map_err(|_| Error::Parse {
            position: pos + lead,
            message: format!("expected an integer, found {tok:?}"),
        })?;
        out.push(value);
        pos += item.len() + 1;
    }
    Ok(out)
}

impl FromStr for Family {
    type Err = Error;

    /// Grammar: `name:args` with `name` one of `kn`, `star`, `kb`, `kmp`,
    /// `cs`, `pineapple`, `kite`, `windmill`, `path`, `cycle`, `mixed`.
    fn from_str(s: &str) -> Result<Self> {
        let (name, args) = s.split_once(':').ok_or_else(|| Error::Parse {
            position: s.len(),
            message: "expected `name:args`".into(),
        })?;
        let offset = name.len() + 1;
        let values = parse_list(args, offset)?;
        let arity = |k: usize| -> Result<()> {
            if values.len() == k {
                Ok(())
            } else {
                Err(Error::Parse {
                    position: offset,
                    message: format!("`{name}` takes {k} argument(s), got {}", values.len()),
                })
            }
        };
        let unsigned = |i: usize| -> Result<usize> {
            usize::try_from(values[i]).map_err(|_| Error::Parse {
                position: offset,
                message: format!("argument {} of `{name}` must be non-negative", i + 1),
            })
        };
        let fam = match name.trim() {
            "kn" | "complete" => {
                arity(1)?;
                Family::Complete(unsigned(0)?)
            }
            "star" => {
                arity(1)?;
                Family::Star(unsigned(0)?)
            }
            "kb" => {
                arity(2)?;
                Family::CompleteBipartite(unsigned(0)?, unsigned(1)?)
            }
            "kmp" => Family::CompleteMultipartite((0..values.len()).map(unsigned).collect::<Result<_>>()?),
            "cs" => {
                arity(2)?;
                Family::CompleteSplit { n: unsigned(0)?, alpha: unsigned(1)? }
            }
            "pineapple" => {
                arity(2)?;
                Family::Pineapple { p: unsigned(0)?, q: unsigned(1)? }
            }
            "kite" => {
                arity(2)?;
                Family::Kite { p: unsigned(0)?, q: unsigned(1)? }
            }
            "windmill" => {
                arity(2)?;
                Family::Windmill { m: unsigned(0)?, l: unsigned(1)? }
            }
            "path" => {
                arity(1)?;
                Family::Path(unsigned(0)?)
            }
            "cycle" => {
                arity(1)?;
                Family::Cycle(unsigned(0)?)
            }
            "mixed" => Family::Mixed(MixedExtensionType::new(values).map_err(|e| Error::Parse {
                position: offset,
                message: e.to_string(),
            })?),
            other => {
                return Err(Error::Parse { position: 0, message: format!("unknown family `{other}`") })
            }
        };
        Ok(fam)
    }
}

/// Default order bound for [`are_isomorphic`].
pub const ISOMORPHISM_LIMIT: usize = 12;

pub fn are_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    are_isomorphic_within(g, h, ISOMORPHISM_LIMIT)
}

/// Backtracking search for an adjacency-preserving bijection, matching
/// vertices only to vertices of equal degree.
pub fn are_isomorphic_within(g: &Graph, h: &Graph, limit: usize) -> Result<bool> {
    let n = g.n();
    if n > limit || h.n() > limit {
        return Err(Error::SizeLimitExceeded { n: n.max(h.n()), limit });
    }
    if n != h.n() || g.edge_count() != h.edge_count() {
        return Ok(false);
    }
    let (dg, dh) = (g.degrees(), h.degrees());
    let mut sg = dg.clone();
    let mut sh = dh.clone();
    sg.sort_unstable();
    sh.sort_unstable();
    if sg != sh {
        return Ok(false);
    }
    // Map high-degree vertices first; they constrain the search most.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(dg[v]));
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    Ok(extend(g, h, &dg, &dh, &order, 0, &mut image, &mut used))
}

#[allow(clippy::too_many_arguments)]
fn extend(
    g: &Graph,
    h: &Graph,
    dg: &[usize],
    dh: &[usize],
    order: &[usize],
    depth: usize,
    image: &mut [usize],
    used: &mut [bool],
) -> bool {
    let Some(&v) = order.get(depth) else { return true };
    for w in 0..h.n() {
        if used[w] || dh[w] != dg[v] {
            continue;
        }
        let consistent = order[..depth].iter().all(|&u| g.has_edge(u, v) == h.has_edge(image[u], w));
        if !consistent {
            continue;
        }
        image[v] = w;
        used[w] = true;
        if extend(g, h, dg, dh, order, depth + 1, image, used) {
            return true;
        }
        used[w] = false;
    }
    image[v] = usize::MAX;
    false
}

fn big(v: i64) -> BigInt {
    BigInt::from(v)
}

/// Quadratic factor for a coclique of `r1` joined to a clique of `r2`:
/// `x^2 - (2 r1 + r2 - 3) x + r1 r2 - 2 r1 - 2 r2 + 2`.
pub fn two_class_factor(r1: i64, r2: i64) -> IntPolynomial {
    IntPolynomial::new(vec![big(r1 * r2 - 2 * r1 - 2 * r2 + 2), big(-(2 * r1 + r2 - 3)), big(1)])
}

/// Cubic factor for centre clique `r1` with leaf cliques `r2`, `r3`:
/// `x^3 - (r1 - 1) x^2 - (r1 r2 + r1 r3 + 4 r2 r3) x - 4 r2 r3`.
pub fn three_class_clique_factor(r1: i64, r2: i64, r3: i64) -> IntPolynomial {
    IntPolynomial::new(vec![
        big(-4 * r2 * r3),
        big(-(r1 * r2 + r1 * r3 + 4 * r2 * r3)),
        big(-(r1 - 1)),
        big(1),
    ])
}

/// Cubic factor for centre clique `r1`, leaf coclique `r2`, leaf clique `r3`:
/// `x^3 - (2 r2 + r1 - 3) x^2 + (r1 r2 - 4 r2 r3 - r1 r3 - 2 r2 - 2 r1 + 2) x
///  + 2 r3 (r1 r2 - 2 r2 - r1)`.
pub fn three_class_coclique_factor(r1: i64, r2: i64, r3: i64) -> IntPolynomial {
    IntPolynomial::new(vec![
        big(2 * r3 * (r1 * r2 - 2 * r2 - r1)),
        big(r1 * r2 - 4 * r2 * r3 - r1 * r3 - 2 * r2 - 2 * r1 + 2),
        big(-(2 * r2 + r1 - 3)),
        big(1),
    ])
}

fn power(c: i64, e: i64) -> IntPolynomial {
    IntPolynomial::x_plus(c).pow(u32::try_from(e).expect("non-negative exponent"))
}

/// Closed-form characteristic polynomial of the eccentricity matrix of a
/// two-class mixed extension. A single edge has no distinguished centre,
/// so `(-r1, r2)` and `(r2, -r1)` denote the same graph; both clique
/// classes give a complete graph.
pub fn closed_form_char_poly_s2(t: &MixedExtensionType) -> Result<IntPolynomial> {
    let &[a, b] = t.classes() else {
        return Err(Error::UnsupportedShape(format!("{t} does not have two classes")));
    };
    // (coclique size, clique size)
    let (r1, r2) = match (a, b) {
        (a, b) if a < 0 && b > 0 => (-a, b),
        (a, b) if a > 0 && b < 0 => (-b, a),
        (a, b) if a > 0 && b > 0 => {
            let n = a + b;
            return Ok(&power(1, n - 1) * &power(-(n - 1), 1));
        }
        _ => return Err(Error::UnsupportedShape(format!("{t}: two cocliques form a complete bipartite graph"))),
    };
    Ok(&(&power(2, r1 - 1) * &power(1, r2 - 1)) * &two_class_factor(r1, r2))
}

/// Closed-form characteristic polynomial for a three-class mixed extension
/// with a clique centre and at most one coclique leaf.
///
/// For the coclique shape `(r1, -r2, r3)` the centre clique contributes
/// eigenvalue `-1` with multiplicity `r1 - 1` and the coclique contributes
/// `-2` with multiplicity `r2 - 1`.
pub fn closed_form_char_poly_s3(t: &MixedExtensionType) -> Result<IntPolynomial> {
    let &[r1, a, b] = t.classes() else {
        return Err(Error::UnsupportedShape(format!("{t} does not have three classes")));
    };
    if r1 < 0 {
        return Err(Error::UnsupportedShape(format!("{t}: coclique centre")));
    }
    match (a, b) {
        (r2, r3) if r2 > 0 && r3 > 0 => {
            let zeros = IntPolynomial::x().pow(u32::try_from(r2 + r3 - 2).expect("positive sizes"));
            Ok(&(&zeros * &power(1, r1 - 1)) * &three_class_clique_factor(r1, r2, r3))
        }
        (a, b) if a < 0 && b > 0 => Ok(coclique_shape(r1, -a, b)),
        (a, b) if a > 0 && b < 0 => Ok(coclique_shape(r1, -b, a)),
        _ => Err(Error::UnsupportedShape(format!("{t}: two coclique leaves"))),
    }
}

fn coclique_shape(r1: i64, r2: i64, r3: i64) -> IntPolynomial {
    let zeros = IntPolynomial::x().pow(u32::try_from(r3 - 1).expect("positive size"));
    &(&(&zeros * &power(1, r1 - 1)) * &power(2, r2 - 1)) * &three_class_coclique_factor(r1, r2, r3)
}

/// The coclique-shape product with the `(x+1)` and `(x+2)` exponents
/// exchanged (`(x+1)^(r2-1) (x+2)^(r1-1)`). Kept to report where that
/// arrangement diverges from the exact polynomial.
pub fn coclique_shape_swapped_exponents(r1: i64, r2: i64, r3: i64) -> IntPolynomial {
    let zeros = IntPolynomial::x().pow(u32::try_from(r3 - 1).expect("positive size"));
    &(&(&zeros * &power(1, r2 - 1)) * &power(2, r1 - 1)) * &three_class_coclique_factor(r1, r2, r3)
}
