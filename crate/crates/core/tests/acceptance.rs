//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line per
//! criterion, and exits nonzero if any fails.

mod common;

use std::panic;
use std::time::{Duration, Instant};

use eccspec::classify::{predicted_one_positive_with, ClauseReading};
use eccspec::ecc::check_diam2_identity;
use eccspec::enumeration::{census_upto, LabeledGraphs};
use eccspec::exact::IntPolynomial;
use eccspec::families::{mixed_extension_star, Family, MixedExtensionType};
use eccspec::numeric::{eigenvalues_symmetric, jacobi_eigenvalues, sign_counts, DEFAULT_ZERO_TOL};
use eccspec::partition::{coarsest_equitable_refinement, quotient_matrix, spectrum_containment_holds, Partition};
use eccspec::{eccentricity_matrix, parse_graph6, to_graph6, Error, Exec, Graph, Inertia};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::*;

const TEN_MINUTES: Duration = Duration::from_secs(600);

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome { passed, detail: detail.into() }
}

/// Characteristic polynomial from sums of principal minors, ascending.
fn char_poly_by_minors(m: &[Vec<i64>]) -> Vec<BigInt> {
    let n = m.len();
    let mut e = vec![BigInt::zero(); n + 1];
    for mask in 0u32..1 << n {
        let idx: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        let sub = idx.iter().map(|&i| idx.iter().map(|&j| i128::from(m[i][j])).collect()).collect();
        e[idx.len()] += BigInt::from(bareiss_det(sub));
    }
    // det(xI - M) = sum_k (-1)^k E_k x^(n-k)
    (0..=n).map(|d| if (n - d) % 2 == 0 { e[n - d].clone() } else { -e[n - d].clone() }).collect()
}

/// Descartes on a real-rooted polynomial given ascending coefficients.
fn descartes_inertia(coeffs: &[BigInt]) -> Inertia {
    let n = coeffs.len() - 1;
    let zero = coeffs.iter().take_while(|c| c.is_zero()).count();
    let signs: Vec<bool> = coeffs.iter().filter(|c| !c.is_zero()).map(|c| c.is_positive()).collect();
    let plus = signs.windows(2).filter(|w| w[0] != w[1]).count();
    Inertia::new(plus, zero, n - plus - zero)
}

fn oracle_inertia(g: &Graph) -> Inertia {
    descartes_inertia(&char_poly_by_minors(&ecc_oracle(g)))
}

fn diameter_radius(g: &Graph) -> (u32, u32) {
    let d = floyd_warshall(g);
    let ecc: Vec<u32> = d.iter().map(|r| *r.iter().max().unwrap()).collect();
    (*ecc.iter().max().unwrap(), *ecc.iter().min().unwrap())
}

fn census7() -> Vec<Graph> {
    census_upto(7, true, Exec::default()).unwrap().into_iter().flatten().collect()
}

fn poly_power(c: i64, e: i64) -> IntPolynomial {
    IntPolynomial::x_plus(c).pow(e as u32)
}

fn exact_char_poly(g: &Graph) -> IntPolynomial {
    eccentricity_matrix(g).unwrap().to_int().char_poly()
}

fn criterion_1(graphs: &[Graph]) -> Outcome {
    let start = Instant::now();
    let truth: Vec<bool> = graphs.iter().map(|g| oracle_inertia(g).plus == 1).collect();
    let mut parts = Vec::new();
    let mut exact_readings = Vec::new();
    for reading in ClauseReading::ALL {
        let mismatches = graphs
            .iter()
            .zip(&truth)
            .filter(|(g, &t)| predicted_one_positive_with(g, reading).unwrap() != t)
            .count();
        if mismatches == 0 {
            exact_readings.push(reading.name());
        }
        parts.push(format!("{reading}={mismatches}"));
    }
    let elapsed = start.elapsed();
    let positives = truth.iter().filter(|&&t| t).count();
    outcome(
        !exact_readings.is_empty() && elapsed < TEN_MINUTES,
        format!(
            "{} graphs n<=7, {positives} with one positive eigenvalue; mismatches {}; zero-mismatch readings: {}; {:.1?}",
            graphs.len(),
            parts.join(" "),
            exact_readings.join(","),
            elapsed
        ),
    )
}

fn two_class_product(r1: i64, r2: i64) -> IntPolynomial {
    let h = IntPolynomial::from_i64(&[r1 * r2 - 2 * r1 - 2 * r2 + 2, -(2 * r1 + r2 - 3), 1]);
    &(&poly_power(2, r1 - 1) * &poly_power(1, r2 - 1)) * &h
}

fn clique_product(r1: i64, r2: i64, r3: i64) -> IntPolynomial {
    let h1 = IntPolynomial::from_i64(&[-4 * r2 * r3, -(r1 * r2 + r1 * r3 + 4 * r2 * r3), -(r1 - 1), 1]);
    &(&poly_power(0, r2 + r3 - 2) * &poly_power(1, r1 - 1)) * &h1
}

fn coclique_h2(r1: i64, r2: i64, r3: i64) -> IntPolynomial {
    IntPolynomial::from_i64(&[
        2 * r3 * (r1 * r2 - 2 * r2 - r1),
        r1 * r2 - 4 * r2 * r3 - r1 * r3 - 2 * r2 - 2 * r1 + 2,
        -(2 * r2 + r1 - 3),
        1,
    ])
}

fn criterion_2() -> Outcome {
    let ty = |v: Vec<i64>| MixedExtensionType::new(v).unwrap();
    let mut checked = 0;
    let mut failures = Vec::new();
    let mut minors_checked = 0;
    for r1 in 1..=6 {
        for r2 in 1..=6 {
            let g = mixed_extension_star(&ty(vec![-r1, r2]));
            let p = exact_char_poly(&g);
            checked += 1;
            if p != two_class_product(r1, r2) {
                failures.push(format!("(-{r1},{r2})"));
            }
            if p.coeffs() != char_poly_by_minors(&ecc_oracle(&g)).as_slice() {
                failures.push(format!("(-{r1},{r2}) minors"));
            }
            minors_checked += 1;
        }
    }
    let mut printed_mismatch = 0;
    let mut printed_total = 0;
    for r1 in 1..=4 {
        for r2 in 1..=4 {
            for r3 in 1..=4 {
                let g1 = mixed_extension_star(&ty(vec![r1, r2, r3]));
                checked += 1;
                if exact_char_poly(&g1) != clique_product(r1, r2, r3) {
                    failures.push(format!("({r1},{r2},{r3})"));
                }
                // A coclique of one vertex is the clique shape, so the
                // coclique product is checked for every r2 including 1.
                let g2 = mixed_extension_star(&ty(vec![r1, -r2, r3]));
                let p2 = exact_char_poly(&g2);
                checked += 1;
                let corrected =
                    &(&(&poly_power(0, r3 - 1) * &poly_power(1, r1 - 1)) * &poly_power(2, r2 - 1)) * &coclique_h2(r1, r2, r3);
                if p2 != corrected {
                    failures.push(format!("({r1},-{r2},{r3})"));
                }
                let printed =
                    &(&(&poly_power(0, r3 - 1) * &poly_power(1, r2 - 1)) * &poly_power(2, r1 - 1)) * &coclique_h2(r1, r2, r3);
                printed_total += 1;
                if p2 != printed {
                    printed_mismatch += 1;
                }
                for g in [&g1, &g2] {
                    if exact_char_poly(g).coeffs() != char_poly_by_minors(&ecc_oracle(g)).as_slice() {
                        failures.push("minors".into());
                    }
                    minors_checked += 1;
                }
            }
        }
    }
    outcome(
        failures.is_empty(),
        format!(
            "{checked} identities exact, {minors_checked} also against principal-minor expansion; coclique-leaf product holds with (x+1)^(r1-1)(x+2)^(r2-1), the exchanged arrangement differs on {printed_mismatch}/{printed_total}; failures: {failures:?}"
        ),
    )
}

fn windmill_formula(m: usize, k: usize) -> Vec<f64> {
    let (mf, kf) = (m as f64, k as f64);
    let root = (mf * mf * (kf * kf - 2.0 * kf + 1.0) + kf * mf).sqrt();
    let mut v = vec![-2.0 * mf; k - 1];
    v.extend(vec![0.0; k * (m - 1)]);
    v.push(mf * (kf - 1.0) - root);
    v.push(mf * (kf - 1.0) + root);
    v.sort_by(f64::total_cmp);
    v
}

fn criterion_3() -> Outcome {
    let mut worst = 0.0f64;
    let mut failures = Vec::new();
    for m in 2..=5 {
        for k in 2..=5 {
            let g = Family::Windmill { m: m + 1, l: k }.build().unwrap();
            let e = eccentricity_matrix(&g).unwrap().to_int();
            let spectrum = eigenvalues_symmetric(&e, 1e-13).unwrap();
            let mut numeric = spectrum.eigenvalues.clone();
            numeric.sort_by(f64::total_cmp);
            let formula = windmill_formula(m, k);
            if numeric.len() != formula.len() {
                failures.push(format!("m={m},k={k} order"));
                continue;
            }
            let err = numeric.iter().zip(&formula).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
            worst = worst.max(err);
            let groups = spectrum.grouped(1e-6);
            let mult = |x: f64| groups.iter().find(|(v, _)| (v - x).abs() <= 1e-6).map_or(0, |g| g.1);
            if err > 1e-8 || mult(-2.0 * m as f64) != k - 1 || mult(0.0) != k * (m - 1) {
                failures.push(format!("m={m},k={k}"));
            }
        }
    }
    outcome(failures.is_empty(), format!("16 windmills, max |error| {worst:.2e} (tol 1e-8); failures: {failures:?}"))
}

fn criterion_4(graphs: &[Graph]) -> Outcome {
    let mut lines = Vec::new();
    let mut ok = true;
    // Self-centred with d >= 2.
    let start = Instant::now();
    let (mut n5, mut bad5) = (0, 0);
    for g in graphs {
        let (d, r) = diameter_radius(g);
        if g.n() >= 2 && d == r && d >= 2 {
            n5 += 1;
            if oracle_inertia(g).plus < 2 {
                bad5 += 1;
            }
        }
    }
    let t5 = start.elapsed();
    ok &= bad5 == 0 && t5 < TEN_MINUTES;
    lines.push(format!("self-centred d>=2: {n5} graphs, {bad5} counterexamples, {t5:.1?}"));
    // Diameter at least 3.
    let start = Instant::now();
    let (mut n6, mut bad6) = (0, 0);
    for g in graphs {
        if diameter_radius(g).0 >= 3 {
            n6 += 1;
            if oracle_inertia(g).plus < 2 {
                bad6 += 1;
            }
        }
    }
    let t6 = start.elapsed();
    ok &= bad6 == 0 && t6 < TEN_MINUTES;
    lines.push(format!("diameter>=3: {n6} graphs, {bad6} counterexamples, {t6:.1?}"));
    // Cone hypothesis.
    let start = Instant::now();
    let (mut n7, mut bad7) = (0, 0);
    for g in graphs {
        let (d, r) = diameter_radius(g);
        if d >= 3 || (d == 2 && r == 2) {
            n7 += 1;
            let cone = g.cone();
            let mut shape_ok = true;
            if d == 2 {
                let inner = ecc_oracle(g);
                let outer = ecc_oracle(&cone);
                let n = g.n();
                shape_ok = (0..=n).all(|u| {
                    (0..=n).all(|v| {
                        let want = match (u == n, v == n) {
                            (false, false) => inner[u][v],
                            (true, true) => 0,
                            _ => 1,
                        };
                        outer[u][v] == want
                    })
                });
            }
            if oracle_inertia(&cone).plus < 2 || !shape_ok {
                bad7 += 1;
            }
        }
    }
    let t7 = start.elapsed();
    ok &= bad7 == 0 && t7 < TEN_MINUTES;
    lines.push(format!("cone hypothesis: {n7} graphs, {bad7} counterexamples, {t7:.1?}"));
    outcome(ok, lines.join("; "))
}

fn criterion_5(graphs: &[Graph]) -> Outcome {
    let (mut applicable, mut bad) = (0, 0);
    for g in graphs {
        let (d, _) = diameter_radius(g);
        let max_deg = (0..g.n()).map(|u| g.degree(u)).max().unwrap_or(0);
        if d == 2 && max_deg + 1 < g.n() {
            applicable += 1;
            let e = eccentricity_matrix(g).unwrap();
            let lib: Vec<Vec<i64>> = e.rows().iter().map(|r| r.iter().map(|&x| i64::from(x)).collect()).collect();
            if lib != twice_complement(g) || !check_diam2_identity(g).unwrap() {
                bad += 1;
            }
        }
    }
    outcome(bad == 0 && applicable > 0, format!("{applicable} graphs with diameter 2 and max degree < n-1; {bad} failures"))
}

fn criterion_6(graphs: &[Graph]) -> Outcome {
    let mut matrices: Vec<Graph> = graphs.to_vec();
    matrices.extend(graphs.iter().map(Graph::cone));
    let ty = |v: Vec<i64>| MixedExtensionType::new(v).unwrap();
    for r1 in 1..=6 {
        for r2 in 1..=6 {
            matrices.push(mixed_extension_star(&ty(vec![-r1, r2])));
        }
    }
    for r1 in 1..=4 {
        for r2 in 1..=4 {
            for r3 in 1..=4 {
                matrices.push(mixed_extension_star(&ty(vec![r1, r2, r3])));
                matrices.push(mixed_extension_star(&ty(vec![r1, -r2, r3])));
            }
        }
    }
    for m in 2..=5 {
        for k in 2..=5 {
            matrices.push(Family::Windmill { m: m + 1, l: k }.build().unwrap());
        }
    }
    let mut disagreements = 0;
    for g in &matrices {
        let e = eccentricity_matrix(g).unwrap().to_int();
        let exact = e.inertia();
        let numeric = sign_counts(&eigenvalues_symmetric(&e, 1e-13).unwrap(), DEFAULT_ZERO_TOL);
        if exact != numeric {
            disagreements += 1;
        }
    }
    outcome(disagreements == 0, format!("{} matrices; {disagreements} disagreements (zero_tol 1e-6)", matrices.len()))
}

/// Whether `s` is a well-formed short-form graph6 string with n >= 1.
fn graph6_valid(s: &str) -> bool {
    let b = s.as_bytes();
    if b.is_empty() || b.iter().any(|&c| !(63..=126).contains(&c)) || b[0] == 126 || b[0] == 63 {
        return false;
    }
    let n = usize::from(b[0] - 63);
    let bits = n * (n - 1) / 2;
    if b.len() != 1 + bits.div_ceil(6) {
        return false;
    }
    let pad = (6 - bits % 6) % 6;
    pad == 0 || (b[b.len() - 1] - 63) & ((1 << pad) - 1) == 0
}

fn random_graph(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    let p: f64 = rng.gen();
    Graph::from_fn(n, |_, _| rng.gen_bool(p))
}

fn criterion_7() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x6772_6170_6836);
    let mut round_trip_failures = 0;
    for _ in 0..100_000 {
        let n = rng.gen_range(1..=20);
        let g = random_graph(&mut rng, n);
        let s = to_graph6(&g).unwrap();
        if parse_graph6(&s).as_ref() != Ok(&g) || to_graph6(&parse_graph6(&s).unwrap()).unwrap() != s {
            round_trip_failures += 1;
        }
    }
    let mut census_graphs = 0;
    for n in 1..=6 {
        for g in LabeledGraphs::new(n, false).unwrap() {
            census_graphs += 1;
            if parse_graph6(&to_graph6(&g).unwrap()).as_ref() != Ok(&g) {
                round_trip_failures += 1;
            }
        }
    }
    let (mut fuzzed, mut panics, mut wrong) = (0, 0, 0);
    for i in 0..100_000 {
        let len = rng.gen_range(0..24);
        let s: String = if i % 2 == 0 {
            (0..len).map(|_| char::from(rng.gen_range(60u8..=127))).collect()
        } else {
            let bytes: Vec<u8> = (0..len).map(|_| rng.gen()).collect();
            String::from_utf8_lossy(&bytes).into_owned()
        };
        fuzzed += 1;
        match panic::catch_unwind(|| parse_graph6(&s)) {
            Err(_) => panics += 1,
            Ok(Ok(g)) => {
                if !graph6_valid(&s) || to_graph6(&g).unwrap() != s {
                    wrong += 1;
                }
            }
            Ok(Err(Error::MalformedGraph6(_))) => {
                if graph6_valid(&s) {
                    wrong += 1;
                }
            }
            Ok(Err(_)) => wrong += 1,
        }
    }
    outcome(
        round_trip_failures == 0 && panics == 0 && wrong == 0,
        format!(
            "100000 random graphs n<=20 and {census_graphs} labelled graphs n<=6 round-trip ({round_trip_failures} failures); {fuzzed} fuzz strings: {panics} panics, {wrong} misclassified"
        ),
    )
}

fn criterion_8() -> Outcome {
    let graphs: Vec<Graph> = census_upto(6, true, Exec::default()).unwrap().into_iter().flatten().collect();
    let mut failures = 0;
    for g in &graphs {
        let e = eccentricity_matrix(g).unwrap().to_int().into_inner();
        let p = coarsest_equitable_refinement(&e, &Partition::unit(g.n())).unwrap();
        let q = quotient_matrix(&e, &p).unwrap();
        // Independent check: constant block row sums, and every quotient
        // eigenvalue close to some eigenvalue of the full matrix.
        let m = ecc_oracle(g);
        let equitable = p.classes().iter().all(|a| {
            p.classes().iter().all(|b| {
                let sums: Vec<i64> = a.iter().map(|&u| b.iter().map(|&v| m[u][v]).sum()).collect();
                sums.iter().all(|&s| s == sums[0])
            })
        });
        // Q is similar to the symmetric D^(1/2) Q D^(-1/2), D the class
        // sizes, so its eigenvalues can be found by Jacobi and matched
        // against the full spectrum.
        let sizes: Vec<f64> = p.classes().iter().map(|c| c.len() as f64).collect();
        let qrows = q.to_f64_rows();
        let k = qrows.len();
        let sym: Vec<f64> = (0..k * k).map(|t| qrows[t / k][t % k] * (sizes[t / k] / sizes[t % k]).sqrt()).collect();
        let quotient_eigs = jacobi_eigenvalues(sym, k, 1e-13).unwrap().eigenvalues;
        let full = eigenvalues_symmetric(&e, 1e-13).unwrap().eigenvalues;
        let roots_ok = quotient_eigs.iter().all(|x| full.iter().any(|y| (x - y).abs() < 1e-6));
        let holds = spectrum_containment_holds(&e, &q).unwrap();
        if !(holds && equitable && roots_ok) {
            failures += 1;
        }
    }
    outcome(failures == 0, format!("{} graphs n<=6; {failures} failures", graphs.len()))
}

fn main() {
    let graphs = census7();
    let criteria: Vec<(&str, Box<dyn Fn() -> Outcome>)> = vec![
        ("1 exhaustive characterization n<=7", Box::new(|| criterion_1(&graphs))),
        ("2 closed-form polynomial identities", Box::new(criterion_2)),
        ("3 windmill spectrum", Box::new(criterion_3)),
        ("4 self-centred / diameter>=3 / cone lemmas n<=7", Box::new(|| criterion_4(&graphs))),
        ("5 diameter-2 complement identity n<=7", Box::new(|| criterion_5(&graphs))),
        ("6 exact vs numeric inertia", Box::new(|| criterion_6(&graphs))),
        ("7 graph6 round-trip and fuzz", Box::new(criterion_7)),
        ("8 quotient spectrum containment n<=6", Box::new(criterion_8)),
    ];
    let mut failed = 0;
    for (name, run) in &criteria {
        let start = Instant::now();
        let o = run();
        let status = if o.passed { "PASS" } else { "FAIL" };
        if !o.passed {
            failed += 1;
        }
        println!("[{status}] {name}: {} ({:.1?})", o.detail, start.elapsed());
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
