//! Falsifiable checks of the structural results, each producing a
//! [`VerificationReport`].
//!
//! Checks never stop at the first counterexample. Per-instance work is
//! mapped through [`Exec`] and merged in input order, so reports are
//! identical across runs and thread counts apart from `elapsed_ms`.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::time::Instant;

use serde::Serialize;
use serde_json::{json, Value};

use crate::classify::{classify, eccentricity_inertia, ClauseReading};
use crate::ecc::{check_diam2_identity, complement_identity_applies, eccentricity_matrix};
use crate::enumeration::{census_upto, to_graph6};
use crate::error::{Error, Result};
use crate::exact::Inertia;
use crate::exec::Exec;
use crate::families::{
    are_isomorphic, closed_form_char_poly_s2, closed_form_char_poly_s3, coclique_shape_swapped_exponents,
    mixed_extension_star, Family, MixedExtensionType,
};
use crate::graph::Graph;
use crate::numeric::{eigenvalues_symmetric, sign_counts, DEFAULT_ZERO_TOL};
use crate::partition::{coarsest_equitable_refinement, quotient_matrix, spectrum_containment_holds, Partition};

pub const SCHEMA: &str = "1";

/// Absolute tolerance per eigenvalue for closed-form spectra.
pub const SPECTRUM_TOL: f64 = 1e-8;
/// Distance under which numeric eigenvalues are counted as one value.
pub const GROUPING_TOL: f64 = 1e-6;

const JACOBI_TOL: f64 = 1e-13;

#[derive(Debug, Clone, Serialize)]
pub struct Counterexample {
    pub graph6: String,
    pub diagnostic: Value,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub schema: &'static str,
    pub id: String,
    pub statement: String,
    pub scope: Value,
    /// Graphs or parameter tuples examined.
    pub instances: usize,
    /// Instances meeting the hypothesis of the statement.
    pub applicable: usize,
    pub passed: bool,
    pub counterexamples: Vec<Counterexample>,
    pub notes: Vec<String>,
    pub elapsed_ms: u64,
}

impl VerificationReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Aligned `key : value` lines followed by counterexamples.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let rows = [
            ("result", self.id.clone()),
            ("statement", self.statement.clone()),
            ("scope", self.scope.to_string()),
            ("instances", self.instances.to_string()),
            ("applicable", self.applicable.to_string()),
            ("counterexamples", self.counterexamples.len().to_string()),
            ("status", if self.passed { "PASS" } else { "FAIL" }.to_string()),
            ("elapsed", format!("{} ms", self.elapsed_ms)),
        ];
        let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
        for (k, v) in rows {
            let _ = writeln!(out, "{k:<width$} : {v}");
        }
        for note in &self.notes {
            let _ = writeln!(out, "{:<width$} : {note}", "note");
        }
        for c in &self.counterexamples {
            let _ = writeln!(out, "  {}  {}", c.graph6, c.diagnostic);
        }
        out
    }
}

/// Result of checking one instance.
enum Outcome {
    NotApplicable,
    Holds,
    Fails(Counterexample),
}

fn counterexample(g: &Graph, diagnostic: Value) -> Result<Outcome> {
    Ok(Outcome::Fails(Counterexample { graph6: to_graph6(g)?, diagnostic }))
}

struct Tally {
    instances: usize,
    applicable: usize,
    counterexamples: Vec<Counterexample>,
}

fn tally(outcomes: Vec<Result<Outcome>>) -> Result<Tally> {
    let mut t = Tally { instances: outcomes.len(), applicable: 0, counterexamples: Vec::new() };
    for o in outcomes {
        match o? {
            Outcome::NotApplicable => {}
            Outcome::Holds => t.applicable += 1,
            Outcome::Fails(c) => {
                t.applicable += 1;
                t.counterexamples.push(c);
            }
        }
    }
    Ok(t)
}

fn report(id: &str, statement: &str, scope: Value, t: Tally, notes: Vec<String>, start: Instant) -> VerificationReport {
    VerificationReport {
        schema: SCHEMA,
        id: id.to_string(),
        statement: statement.to_string(),
        scope,
        instances: t.instances,
        applicable: t.applicable,
        passed: t.counterexamples.is_empty(),
        counterexamples: t.counterexamples,
        notes,
        elapsed_ms: start.elapsed().as_millis() as u64,
    }
}

fn check_order_bound(n_max: usize, limit: usize) -> Result<()> {
    if n_max == 0 {
        return Err(Error::InvalidParameters("n_max must be at least 1".into()));
    }
    if n_max > limit {
        return Err(Error::SizeLimitExceeded { n: n_max, limit });
    }
    Ok(())
}

/// Connected graphs of every order `1..=n_max`, one per isomorphism class.
fn census(n_max: usize, exec: Exec) -> Result<Vec<Graph>> {
    Ok(census_upto(n_max, true, exec)?.into_iter().flatten().collect())
}

fn inertia_json(i: Inertia) -> Value {
    json!([i.plus, i.zero, i.minus])
}

/// Self-centred connected graphs of diameter at least 2 have at least two
/// positive ε-eigenvalues.
pub fn verify_self_centered(n_max: usize, exec: Exec) -> Result<VerificationReport> {
    check_order_bound(n_max, 8)?;
    let start = Instant::now();
    let graphs = census(n_max, exec)?;
    let outcomes = exec.map(&graphs, |g| {
        let p = g.eccentricity_profile()?;
        if g.n() < 2 || !p.is_self_centered() || p.diameter < 2 {
            return Ok(Outcome::NotApplicable);
        }
        let i = eccentricity_inertia(g)?;
        if i.plus >= 2 {
            Ok(Outcome::Holds)
        } else {
            counterexample(g, json!({"diameter": p.diameter, "inertia": inertia_json(i)}))
        }
    });
    let t = tally(outcomes)?;
    let complete = graphs.iter().filter(|g| g.n() >= 2 && g.edge_count() == g.n() * (g.n() - 1) / 2).count();
    let notes = vec![format!(
        "diameter-1 graphs (complete, {complete} in scope) are self-centred with one positive eigenvalue and are excluded"
    )];
    Ok(report(
        "lemma2.5",
        "self-centred graphs with diameter d >= 2 have at least two positive eccentricity eigenvalues",
        json!({"n_min": 2, "n_max": n_max, "diameter_min": 2}),
        t,
        notes,
        start,
    ))
}

/// Two vertex-disjoint pairs at distance equal to the diameter, if any.
pub fn disjoint_diametral_pairs(g: &Graph) -> Result<Option<[(usize, usize); 2]>> {
    let p = g.eccentricity_profile()?;
    let d = g.distance_matrix();
    let n = g.n();
    let pairs: Vec<(usize, usize)> =
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|&(u, v)| d.get(u, v) == p.diameter).collect();
    for (i, &a) in pairs.iter().enumerate() {
        for &b in &pairs[i + 1..] {
            if a.0 != b.0 && a.0 != b.1 && a.1 != b.0 && a.1 != b.1 {
                return Ok(Some([a, b]));
            }
        }
    }
    Ok(None)
}

/// Self-centred graphs of diameter at least 2 contain two disjoint
/// diametral pairs.
pub fn verify_diametral_pairs(n_max: usize, exec: Exec) -> Result<VerificationReport> {
    check_order_bound(n_max, 8)?;
    let start = Instant::now();
    let graphs = census(n_max, exec)?;
    let outcomes = exec.map(&graphs, |g| {
        let p = g.eccentricity_profile()?;
        if !p.is_self_centered() || p.diameter < 2 {
            return Ok(Outcome::NotApplicable);
        }
        match disjoint_diametral_pairs(g)? {
            Some(_) => Ok(Outcome::Holds),
            None => counterexample(g, json!({"diameter": p.diameter})),
        }
    });
    let t = tally(outcomes)?;
    Ok(report(
        "diametral",
        "self-centred graphs with diameter d >= 2 have two vertex-disjoint diametral pairs",
        json!({"n_max": n_max, "diameter_min": 2}),
        t,
        Vec::new(),
        start,
    ))
}

/// Graphs of diameter at least 3 have at least two positive
/// ε-eigenvalues, whether or not they are self-centred.
pub fn verify_diam3(n_max: usize, exec: Exec) -> Result<VerificationReport> {
    check_order_bound(n_max, 8)?;
    let start = Instant::now();
    let graphs = census(n_max, exec)?;
    let outcomes = exec.map(&graphs, |g| {
        let p = g.eccentricity_profile()?;
        if p.diameter < 3 {
            return Ok(Outcome::NotApplicable);
        }
        let i = eccentricity_inertia(g)?;
        if i.plus >= 2 {
            Ok(Outcome::Holds)
        } else {
            counterexample(
                g,
                json!({"diameter": p.diameter, "self_centered": p.is_self_centered(), "inertia": inertia_json(i)}),
            )
        }
    });
    let t = tally(outcomes)?;
    let not_sc = exec
        .map(&graphs, |g| g.eccentricity_profile().map(|p| p.diameter >= 3 && !p.is_self_centered()))
        .into_iter()
        .collect::<Result<Vec<bool>>>()?
        .into_iter()
        .filter(|&b| b)
        .count();
    let failing_not_sc =
        t.counterexamples.iter().filter(|c| c.diagnostic["self_centered"] == json!(false)).count();
    let notes = vec![
        format!("all graphs with diameter >= 3: {} checked, {} counterexamples", t.applicable, t.counterexamples.len()),
        format!("non-self-centred subset: {not_sc} checked, {failing_not_sc} counterexamples"),
    ];
    Ok(report(
        "lemma2.6",
        "graphs with diameter >= 3 have at least two positive eccentricity eigenvalues",
        json!({"n_max": n_max, "diameter_min": 3, "scopes": {"all": t.applicable, "not_self_centered": not_sc}}),
        t,
        notes,
        start,
    ))
}

/// Whether `e` has the block form `[[inner, J], [J, 0]]` with the added
/// vertex last.
fn cone_block_shape(g: &Graph) -> Result<bool> {
    let inner = eccentricity_matrix(g)?;
    let outer = eccentricity_matrix(&g.cone())?;
    let n = g.n();
    for u in 0..=n {
        for v in 0..=n {
            let expected = match (u == n, v == n) {
                (false, false) => inner.get(u, v),
                (true, true) => 0,
                _ => 1,
            };
            if outer.get(u, v) != expected {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Adding a universal vertex to a graph with diameter at least 3, or with
/// radius and diameter both 2, leaves at least two positive ε-eigenvalues.
pub fn verify_cone(n_max: usize, exec: Exec) -> Result<VerificationReport> {
    check_order_bound(n_max, 8)?;
    let start = Instant::now();
    let graphs = census(n_max, exec)?;
    let outcomes = exec.map(&graphs, |g| {
        let p = g.eccentricity_profile()?;
        let self_centered_2 = p.radius == 2 && p.diameter == 2;
        if p.diameter < 3 && !self_centered_2 {
            return Ok(Outcome::NotApplicable);
        }
        let i = eccentricity_inertia(&g.cone())?;
        let shape_ok = !self_centered_2 || cone_block_shape(g)?;
        if i.plus >= 2 && shape_ok {
            Ok(Outcome::Holds)
        } else {
            counterexample(
                g,
                json!({"diameter": p.diameter, "radius": p.radius, "cone_inertia": inertia_json(i), "block_shape": shape_ok}),
            )
        }
    });
    let t = tally(outcomes)?;
    Ok(report(
        "theorem2.7",
        "the cone over a graph with diameter >= 3 or radius = diameter = 2 has at least two positive eccentricity eigenvalues",
        json!({"n_max": n_max, "cone_order_max": n_max + 1}),
        t,
        vec!["block form [[E(G), J], [J, 0]] also checked when radius = diameter = 2".into()],
        start,
    ))
}

/// All distinct normalized types with `len` classes of size at most `r_max`.
fn signed_types(len: usize, r_max: i64) -> Vec<MixedExtensionType> {
    let values: Vec<i64> = (1..=r_max).flat_map(|r| [r, -r]).collect();
    let mut out = BTreeSet::new();
    let mut idx = vec![0usize; len];
    loop {
        let classes: Vec<i64> = idx.iter().map(|&i| values[i]).collect();
        out.insert(MixedExtensionType::new(classes).expect("nonzero sizes"));
        let mut pos = 0;
        loop {
            if pos == len {
                return out.into_iter().collect();
            }
            idx[pos] += 1;
            if idx[pos] < values.len() {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}

/// Stated clause list for two classes. `(-r1, r2)` is a coclique of `r1`
/// joined to a clique of `r2`; both orders denote the same graph. The
/// reconciled reading also accepts `r2 = 1` (the star `K_{1,r1}`).
pub fn two_class_clause(t: &MixedExtensionType, reading: ClauseReading) -> bool {
    let &[a, b] = t.classes() else { return false };
    let (r1, r2) = match (a, b) {
        (a, b) if a > 0 && b > 0 => return true,
        (a, b) if a < 0 && b > 0 => (-a, b),
        (a, b) if a > 0 && b < 0 => (-b, a),
        _ => return false,
    };
    let stated = r1 == 2 || r2 == 2 || matches!((r1, r2), (3, 4) | (4, 3) | (3, 3));
    stated || (reading == ClauseReading::Reconciled && r2 == 1)
}

/// Stated clause list for three classes with the leaf order immaterial.
/// The reconciled reading adds two coclique leaves `(r1, -r2, -r3)` with
/// `r1 <= 2`, or `r1 = 3` and `r2 + r3 <= 4`.
pub fn three_class_clause(t: &MixedExtensionType, reading: ClauseReading) -> bool {
    let &[r1, a, b] = t.classes() else { return false };
    if r1 < 0 {
        return false;
    }
    match (a < 0, b < 0) {
        (false, false) => true,
        (true, false) | (false, true) => {
            let r2 = -a.min(b);
            r1 <= 2 || matches!((r1, r2), (3, 2) | (4, 2) | (3, 3))
        }
        (true, true) => reading == ClauseReading::Reconciled && (r1 <= 2 || (r1 == 3 && -a - b <= 4)),
    }
}

fn verify_small_stars(
    id: &str,
    statement: &str,
    classes: usize,
    r_max: usize,
    reading: ClauseReading,
    exec: Exec,
) -> Result<VerificationReport> {
    if r_max == 0 || r_max > 8 {
        return Err(Error::InvalidParameters(format!("r_max must be in 1..=8, got {r_max}")));
    }
    let start = Instant::now();
    let types = signed_types(classes, r_max as i64);
    let closed_form = |t: &MixedExtensionType| match classes {
        2 => closed_form_char_poly_s2(t),
        _ => closed_form_char_poly_s3(t),
    };
    let clause = |t: &MixedExtensionType| match classes {
        2 => two_class_clause(t, reading),
        _ => three_class_clause(t, reading),
    };
    let outcomes = exec.map(&types, |t| {
        let g = mixed_extension_star(t);
        if !g.is_connected() {
            return Ok(Outcome::NotApplicable);
        }
        let exact = eccentricity_matrix(&g)?.to_int().char_poly();
        let form = match closed_form(t) {
            Ok(p) => Some(p),
            Err(Error::UnsupportedShape(_)) => None,
            Err(e) => return Err(e),
        };
        let form_ok = form.as_ref().is_none_or(|p| *p == exact);
        let i = Inertia::from_real_rooted(&exact, g.n());
        let predicted = clause(t);
        if form_ok && predicted == (i.plus == 1) {
            Ok(Outcome::Holds)
        } else {
            counterexample(
                &g,
                json!({
                    "type": t,
                    "char_poly": exact.to_string(),
                    "closed_form": form.map(|p| p.to_string()),
                    "closed_form_matches": form_ok,
                    "inertia": inertia_json(i),
                    "clause_list": predicted,
                }),
            )
        }
    });
    let t = tally(outcomes)?;
    let mut notes = vec![format!("reading: {reading}")];
    if classes == 3 {
        let swapped = swapped_exponent_disagreements(r_max as i64);
        notes.push(format!(
            "coclique-leaf product with (x+1),(x+2) exponents exchanged disagrees with the exact polynomial on {} of {} tuples",
            swapped.0, swapped.1
        ));
    }
    Ok(report(id, statement, json!({"r_max": r_max, "classes": classes, "reading": reading}), t, notes, start))
}

/// Count of `(r1, -r2, r3)` tuples with entries at most `r_max` where the
/// exchanged-exponent product differs from the exact polynomial.
pub fn swapped_exponent_disagreements(r_max: i64) -> (usize, usize) {
    let mut bad = 0;
    let mut total = 0;
    for r1 in 1..=r_max {
        for r2 in 2..=r_max {
            for r3 in 1..=r_max {
                let t = MixedExtensionType::new(vec![r1, -r2, r3]).expect("nonzero sizes");
                let exact = eccentricity_matrix(&mixed_extension_star(&t)).expect("connected").to_int().char_poly();
                total += 1;
                if coclique_shape_swapped_exponents(r1, r2, r3) != exact {
                    bad += 1;
                }
            }
        }
    }
    (bad, total)
}

/// Two-class mixed extensions: closed-form polynomial and clause list.
pub fn verify_prop_s2(r_max: usize, reading: ClauseReading, exec: Exec) -> Result<VerificationReport> {
    verify_small_stars(
        "prop2.8",
        "two-class mixed extensions: closed-form characteristic polynomial, and one positive eigenvalue exactly on the listed types",
        2,
        r_max,
        reading,
        exec,
    )
}

/// Three-class mixed extensions: closed-form polynomial and clause list.
pub fn verify_prop_s3(r_max: usize, reading: ClauseReading, exec: Exec) -> Result<VerificationReport> {
    verify_small_stars(
        "prop2.9",
        "three-class mixed extensions: closed-form characteristic polynomial, and one positive eigenvalue exactly on the listed types",
        3,
        r_max,
        reading,
        exec,
    )
}

/// Structural prediction against exact inertia over the connected census.
pub fn verify_classification(n_max: usize, reading: ClauseReading, exec: Exec) -> Result<VerificationReport> {
    check_order_bound(n_max, 8)?;
    let start = Instant::now();
    let graphs = census(n_max, exec)?;
    let outcomes = exec.map(&graphs, |g| {
        let c = classify(g, reading)?;
        if c.predicted == c.ground_truth {
            Ok(Outcome::Holds)
        } else {
            let typings: Vec<String> = c.typings.iter().map(|t| t.typing.to_string()).collect();
            counterexample(
                g,
                json!({
                    "n": g.n(),
                    "predicted": c.predicted,
                    "inertia": inertia_json(c.inertia),
                    "typings": typings,
                }),
            )
        }
    });
    let t = tally(outcomes)?;
    let per_order: Vec<usize> = census_upto(n_max, true, exec)?.iter().map(Vec::len).collect();
    let positives = exec
        .map(&graphs, |g| eccentricity_inertia(g).map(|i| i.plus == 1))
        .into_iter()
        .collect::<Result<Vec<bool>>>()?
        .into_iter()
        .filter(|&b| b)
        .count();
    let notes = vec![
        format!("reading: {reading}"),
        format!("graphs with exactly one positive eigenvalue: {positives}"),
    ];
    Ok(report(
        "classification",
        "the mixed-extension clause lists predict exactly the graphs with one positive eccentricity eigenvalue",
        json!({"n_max": n_max, "reading": reading, "census": per_order}),
        t,
        notes,
        start,
    ))
}

/// Closed-form ε-spectrum of `windmill(m + 1, k)`, ascending.
pub fn windmill_formula_spectrum(m: usize, k: usize) -> Vec<f64> {
    let (mf, kf) = (m as f64, k as f64);
    let root = (mf * mf * (kf - 1.0) * (kf - 1.0) + kf * mf).sqrt();
    let mut spec = vec![-2.0 * mf; k - 1];
    spec.extend(std::iter::repeat_n(0.0, k * (m - 1)));
    spec.push(mf * (kf - 1.0) - root);
    spec.push(mf * (kf - 1.0) + root);
    spec.sort_by(f64::total_cmp);
    spec
}

/// Multiplicity of the group containing `value` after grouping.
fn group_multiplicity(groups: &[(f64, usize)], value: f64) -> usize {
    groups.iter().find(|(v, _)| (v - value).abs() <= GROUPING_TOL).map_or(0, |g| g.1)
}

/// Numeric windmill spectra against the closed form.
pub fn verify_windmill(m_max: usize, k_max: usize, exec: Exec) -> Result<VerificationReport> {
    if m_max < 2 || k_max < 2 || m_max > 12 || k_max > 12 {
        return Err(Error::InvalidParameters("windmill bounds must lie in 2..=12".into()));
    }
    let start = Instant::now();
    let grid: Vec<(usize, usize)> = (2..=m_max).flat_map(|m| (2..=k_max).map(move |k| (m, k))).collect();
    let outcomes = exec.map(&grid, |&(m, k)| {
        let g = Family::Windmill { m: m + 1, l: k }.build()?;
        let e = eccentricity_matrix(&g)?.to_int();
        let spectrum = eigenvalues_symmetric(&e, JACOBI_TOL)?;
        let mut numeric = spectrum.eigenvalues.clone();
        numeric.sort_by(f64::total_cmp);
        let formula = windmill_formula_spectrum(m, k);
        let max_err = numeric.iter().zip(&formula).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
        let groups = spectrum.grouped(GROUPING_TOL);
        let neg = group_multiplicity(&groups, -2.0 * m as f64);
        let zero = group_multiplicity(&groups, 0.0);
        let ok = numeric.len() == formula.len() && max_err <= SPECTRUM_TOL && neg == k - 1 && zero == k * (m - 1);
        if ok {
            Ok(Outcome::Holds)
        } else {
            counterexample(
                &g,
                json!({"m": m, "k": k, "max_abs_error": max_err, "mult_neg_2m": neg, "mult_zero": zero}),
            )
        }
    });
    let t = tally(outcomes)?;
    Ok(report(
        "remark2.12",
        "windmill(m+1, k): spectrum -2m^(k-1), 0^(k(m-1)), m(k-1) -/+ sqrt(m^2 (k-1)^2 + km)",
        json!({"m": [2, m_max], "k": [2, k_max], "tol": SPECTRUM_TOL, "grouping_tol": GROUPING_TOL}),
        t,
        vec!["windmill(m+1, k) is the type (1, m, ..., m) with k clique leaves".into()],
        start,
    ))
}

#[derive(Debug, Clone, Copy)]
pub struct FamilyBounds {
    /// Largest order for complete split graphs and pineapple/kite cliques.
    pub n_max: usize,
    /// Largest number of pendants.
    pub q_max: usize,
}

impl Default for FamilyBounds {
    fn default() -> Self {
        FamilyBounds { n_max: 8, q_max: 4 }
    }
}

/// Named families claimed to have one positive ε-eigenvalue, three
/// isomorphisms with mixed-extension types, and one negative control.
pub fn verify_remark_families(bounds: FamilyBounds, exec: Exec) -> Result<VerificationReport> {
    let FamilyBounds { n_max, q_max } = bounds;
    // Isomorphism tests stay within the backtracking limit.
    if n_max < 4 || q_max == 0 || n_max + q_max > crate::families::ISOMORPHISM_LIMIT {
        return Err(Error::InvalidParameters(format!(
            "family bounds need n_max >= 4, q_max >= 1 and n_max + q_max <= {}",
            crate::families::ISOMORPHISM_LIMIT
        )));
    }
    let start = Instant::now();
    // (family, expected one positive)
    let mut members: Vec<(Family, bool)> = Vec::new();
    for n in 3..=n_max {
        members.push((Family::CompleteSplit { n, alpha: 2 }, true));
    }
    for a in 1..=n_max - 2 {
        members.push((Family::CompleteSplit { n: a + 2, alpha: a }, true));
    }
    members.push((Family::CompleteSplit { n: 7, alpha: 3 }, true));
    members.push((Family::CompleteSplit { n: 7, alpha: 4 }, true));
    for p in 2..=n_max {
        for q in 1..=q_max {
            members.push((Family::Pineapple { p, q }, true));
        }
        members.push((Family::Kite { p, q: 1 }, true));
    }
    members.push((Family::CompleteSplit { n: 8, alpha: 3 }, false));

    let outcomes = exec.map(&members, |(f, expected)| {
        let g = f.build()?;
        let i = eccentricity_inertia(&g)?;
        if (i.plus == 1) == *expected {
            Ok(Outcome::Holds)
        } else {
            counterexample(&g, json!({"family": format!("{f:?}"), "inertia": inertia_json(i), "expected_one_positive": expected}))
        }
    });
    let mut t = tally(outcomes)?;

    // (type, family, literal form of the claim)
    let mut claims: Vec<(MixedExtensionType, Family, &str)> = Vec::new();
    let ty = |v: Vec<i64>| MixedExtensionType::new(v).expect("nonzero sizes");
    for r1 in 2..=n_max as i64 - 1 {
        for r2 in 1..=n_max as i64 - r1 {
            claims.push((ty(vec![-r1, r2]), Family::CompleteSplit { n: (r1 + r2) as usize, alpha: r1 as usize }, "(-r1,r2) ~ CS(r1+r2, r1)"));
        }
    }
    for r1 in 1..=q_max as i64 {
        for r3 in 1..=n_max as i64 - 1 {
            claims.push((ty(vec![1, -r1, r3]), Family::Pineapple { p: (r3 + 1) as usize, q: r1 as usize }, "(1,-r1,r3) ~ pineapple(r3+1, r1)"));
        }
    }
    for r2 in 1..=n_max as i64 - 1 {
        claims.push((ty(vec![1, r2, 1]), Family::Kite { p: (r2 + 1) as usize, q: 1 }, "(1,r2,1) ~ kite(r2+1, 1)"));
    }
    let iso_outcomes = exec.map(&claims, |(t, f, claim)| {
        let g = mixed_extension_star(t);
        let h = f.build()?;
        if are_isomorphic(&g, &h)? {
            Ok(Outcome::Holds)
        } else {
            counterexample(&g, json!({"type": t, "family": format!("{f:?}"), "claim": claim}))
        }
    });
    let iso = tally(iso_outcomes)?;
    t.instances += iso.instances;
    t.applicable += iso.applicable;
    t.counterexamples.extend(iso.counterexamples);

    // The centre-first reading of (-r1,-1,r3) puts a coclique in the centre.
    let literal_pineapple: Vec<(i64, i64)> =
        (2..=q_max as i64).flat_map(|r1| (1..=n_max as i64 - 1).map(move |r3| (r1, r3))).collect();
    let literal_hits = exec
        .map(&literal_pineapple, |&(r1, r3)| {
            let g = mixed_extension_star(&ty(vec![-r1, -1, r3]));
            are_isomorphic(&g, &Family::Pineapple { p: (r3 + 1) as usize, q: r1 as usize }.build()?)
        })
        .into_iter()
        .collect::<Result<Vec<bool>>>()?
        .into_iter()
        .filter(|&b| b)
        .count();
    let notes = vec![
        "CS(8,3) is a negative control expected to have two positive eigenvalues".into(),
        format!(
            "centre-first (-r1,-1,r3) is isomorphic to pineapple(r3+1, r1) in {literal_hits} of {} cases with r1 >= 2; the checked form is (1,-r1,r3)",
            literal_pineapple.len()
        ),
    ];
    Ok(report(
        "remark2.10",
        "complete split graphs CS(n,2), CS(n+2,n), CS(7,3), CS(7,4), pineapples and short kites have one positive eccentricity eigenvalue",
        json!({"n_max": n_max, "q_max": q_max}),
        t,
        notes,
        start,
    ))
}

/// `ecc(G) = 2 A(complement)` for diameter-2 graphs without a universal vertex.
pub fn verify_diam2_identity(n_max: usize, exec: Exec) -> Result<VerificationReport> {
    check_order_bound(n_max, 8)?;
    let start = Instant::now();
    let graphs = census(n_max, exec)?;
    let outcomes = exec.map(&graphs, |g| {
        if !complement_identity_applies(g)? {
            return Ok(Outcome::NotApplicable);
        }
        if check_diam2_identity(g)? {
            Ok(Outcome::Holds)
        } else {
            counterexample(g, json!({"ecc": eccentricity_matrix(g)?.rows()}))
        }
    });
    let t = tally(outcomes)?;
    Ok(report(
        "identity",
        "diameter-2 graphs with maximum degree below n-1 satisfy E(G) = 2 A(complement of G)",
        json!({"n_max": n_max}),
        t,
        Vec::new(),
        start,
    ))
}

/// Spectrum containment for the coarsest equitable partition.
pub fn verify_quotient_containment(n_max: usize, exec: Exec) -> Result<VerificationReport> {
    check_order_bound(n_max, 8)?;
    let start = Instant::now();
    let graphs = census(n_max, exec)?;
    let outcomes = exec.map(&graphs, |g| {
        let e = eccentricity_matrix(g)?.to_int().into_inner();
        let p = coarsest_equitable_refinement(&e, &Partition::unit(g.n()))?;
        let q = quotient_matrix(&e, &p)?;
        if spectrum_containment_holds(&e, &q)? {
            Ok(Outcome::Holds)
        } else {
            counterexample(g, json!({"classes": p.classes()}))
        }
    });
    let t = tally(outcomes)?;
    Ok(report(
        "containment",
        "the quotient of the coarsest equitable partition has its eigenvalues among those of E(G)",
        json!({"n_max": n_max}),
        t,
        Vec::new(),
        start,
    ))
}

/// Exact and numeric inertia of one graph's eccentricity matrix.
pub fn inertia_pair(g: &Graph) -> Result<(Inertia, Inertia)> {
    let e = eccentricity_matrix(g)?.to_int();
    let exact = e.inertia();
    let numeric = sign_counts(&eigenvalues_symmetric(&e, JACOBI_TOL)?, DEFAULT_ZERO_TOL);
    Ok((exact, numeric))
}

/// Scope for [`verify_inertia`]: every eccentricity matrix met by the
/// census, cone, closed-form and windmill checks at these bounds.
#[derive(Debug, Clone, Copy)]
pub struct InertiaScope {
    pub n_max: usize,
    pub r2_max: usize,
    pub r3_max: usize,
    pub m_max: usize,
    pub k_max: usize,
}

impl Default for InertiaScope {
    fn default() -> Self {
        InertiaScope { n_max: 7, r2_max: 6, r3_max: 4, m_max: 5, k_max: 5 }
    }
}

/// The graphs whose eccentricity matrices [`verify_inertia`] compares.
pub fn inertia_workload(scope: InertiaScope, exec: Exec) -> Result<Vec<Graph>> {
    check_order_bound(scope.n_max, 8)?;
    let census = census(scope.n_max, exec)?;
    let mut graphs = census.clone();
    graphs.extend(census.iter().map(Graph::cone));
    for t in signed_types(2, scope.r2_max as i64).into_iter().chain(signed_types(3, scope.r3_max as i64)) {
        let g = mixed_extension_star(&t);
        if g.is_connected() {
            graphs.push(g);
        }
    }
    for m in 2..=scope.m_max {
        for k in 2..=scope.k_max {
            graphs.push(Family::Windmill { m: m + 1, l: k }.build()?);
        }
    }
    Ok(graphs)
}

/// Exact Descartes inertia against Jacobi sign counts.
pub fn verify_inertia(scope: InertiaScope, exec: Exec) -> Result<VerificationReport> {
    let start = Instant::now();
    let graphs = inertia_workload(scope, exec)?;
    let outcomes = exec.map(&graphs, |g| {
        let (exact, numeric) = inertia_pair(g)?;
        if exact == numeric {
            Ok(Outcome::Holds)
        } else {
            counterexample(g, json!({"exact": inertia_json(exact), "numeric": inertia_json(numeric)}))
        }
    });
    let t = tally(outcomes)?;
    Ok(report(
        "inertia",
        "exact inertia from the characteristic polynomial equals Jacobi sign counts",
        json!({
            "n_max": scope.n_max, "cones": true, "two_class_r_max": scope.r2_max,
            "three_class_r_max": scope.r3_max, "windmill_m_max": scope.m_max, "windmill_k_max": scope.k_max,
            "zero_tol": DEFAULT_ZERO_TOL,
        }),
        t,
        Vec::new(),
        start,
    ))
}

/// Identifiers accepted by [`run`].
pub const RESULT_IDS: [&str; 12] = [
    "lemma2.5",
    "diametral",
    "lemma2.6",
    "theorem2.7",
    "prop2.8",
    "prop2.9",
    "classification",
    "remark2.10",
    "remark2.12",
    "identity",
    "containment",
    "inertia",
];

/// Bounds shared by all checks; each check reads the ones it needs.
#[derive(Debug, Clone, Copy, Default)]
pub struct RunOptions {
    pub n_max: Option<usize>,
    pub r_max: Option<usize>,
    pub m_max: Option<usize>,
    pub k_max: Option<usize>,
    pub reading: ClauseReading,
    pub exec: Exec,
}

/// Runs the check named `id`.
pub fn run(id: &str, o: &RunOptions) -> Result<VerificationReport> {
    let exec = o.exec;
    let n = |d: usize| o.n_max.unwrap_or(d);
    match id {
        "lemma2.5" => verify_self_centered(n(7), exec),
        "diametral" => verify_diametral_pairs(n(7), exec),
        "lemma2.6" => verify_diam3(n(7), exec),
        "theorem2.7" => verify_cone(n(7), exec),
        "prop2.8" => verify_prop_s2(o.r_max.unwrap_or(6), o.reading, exec),
        "prop2.9" => verify_prop_s3(o.r_max.unwrap_or(4), o.reading, exec),
        "classification" => verify_classification(n(7), o.reading, exec),
        "remark2.10" => verify_remark_families(FamilyBounds { n_max: n(8), ..FamilyBounds::default() }, exec),
        "remark2.12" => verify_windmill(o.m_max.unwrap_or(5), o.k_max.unwrap_or(5), exec),
        "identity" => verify_diam2_identity(n(7), exec),
        "containment" => verify_quotient_containment(n(6), exec),
        "inertia" => verify_inertia(
            InertiaScope {
                n_max: n(7),
                r2_max: o.r_max.unwrap_or(6),
                r3_max: o.r_max.map_or(4, |r| r.min(4)),
                m_max: o.m_max.unwrap_or(5),
                k_max: o.k_max.unwrap_or(5),
            },
            exec,
        ),
        other => Err(Error::InvalidParameters(format!("unknown result id {other:?}; known: {}", RESULT_IDS.join(", ")))),
    }
}
